"""Command-line front end: ``cypres ab|sweep|verify|res|cyclo``.

Exit codes: 0 success, 1 a checked property failed (or a coefficient cap
was exceeded), 2 usage error.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import re
import sys
from typing import Callable, Iterable, Sequence

from . import verifier
from .cpg import FibParams, abelianization
from .cyclo import cyclotomic
from .errors import CoefficientOverflow, CypresError, DomainError, WordSyntaxError
from .exactpoly import IntPoly, resultant, resultant_sylvester_oracle

FORMATS = ("table", "json", "csv")
LEMMAS = ("lucas", "half", "vg1", "grow", "minimality", "cases")
CSV_HEADER = ("n", "m", "k", "rank", "torsion")


class UsageError(Exception):
    pass


# -- rendering -------------------------------------------------------------


def render_json(doc: object) -> str:
    return json.dumps(doc, indent=2) + "\n"


def render_csv(rows: Iterable[Sequence[object]], header: Sequence[str]) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(header)
    w.writerows(rows)
    return buf.getvalue()


def render_table(rows: Sequence[Sequence[object]], header: Sequence[str]) -> str:
    cells = [list(map(str, header))] + [list(map(str, r)) for r in rows]
    widths = [max(len(r[i]) for r in cells) for i in range(len(header))]
    lines = ["  ".join(c.rjust(w) for c, w in zip(r, widths)) for r in cells]
    lines.insert(1, "  ".join("-" * w for w in widths))
    return "\n".join(lines) + "\n"


def group_row(n: int, m: int, k: int, rank: int, torsion: Sequence[int]) -> list[object]:
    return [n, m, k, rank, ";".join(str(d) for d in torsion)]


# -- polynomial literals -----------------------------------------------------

_TERM = re.compile(r"\s*([+-])?\s*(?:(\d+)\s*\*?\s*)?(t(?:\s*\^\s*(\d+))?)?\s*")


def parse_poly(text: str) -> IntPoly:
    """Parse ``"c0 c1 c2 ..."`` (ascending) or a sum of terms such as ``"t^6+1"``, ``"3*t^2 - t"``."""
    if "t" not in text:
        coeffs = []
        for tok in re.finditer(r"\S+", text):
            try:
                coeffs.append(int(tok.group()))
            except ValueError:
                raise WordSyntaxError(f"bad coefficient {tok.group()!r}", tok.start()) from None
        if not coeffs:
            raise WordSyntaxError("empty polynomial literal", 0)
        return IntPoly(coeffs)
    terms: dict[int, int] = {}
    pos = 0
    first = True
    while pos < len(text):
        mt = _TERM.match(text, pos)
        sign, coef, mono, exp = mt.groups()
        if (coef is None and mono is None) or (sign is None and not first):
            if text[pos:].strip() == "":
                break
            off = pos + len(text[pos:]) - len(text[pos:].lstrip())
            raise WordSyntaxError(f"unexpected {text[off:off + 1]!r}", off)
        c = int(coef) if coef is not None else 1
        if sign == "-":
            c = -c
        k = (int(exp) if exp is not None else 1) if mono else 0
        terms[k] = terms.get(k, 0) + c
        pos = mt.end()
        first = False
    if not terms:
        raise WordSyntaxError("empty polynomial literal", 0)
    return IntPoly.from_sparse(terms)


def poly_to_text(p: IntPoly) -> str:
    return " ".join(str(c) for c in p.coeffs) if p else "0"


# -- commands ----------------------------------------------------------------


def cmd_ab(args: argparse.Namespace) -> tuple[str, int]:
    n, m, k = args.n, args.m, args.k
    if n < 1 or not (0 <= m < n and 0 <= k < n):
        raise UsageError(f"need n >= 1 and 0 <= m, k < n (got n={n}, m={m}, k={k})")
    g = abelianization(FibParams(n, m, k))
    if args.format == "json":
        doc = {"n": n, "m": m, "k": k, "rank": g.free_rank, "torsion": [str(d) for d in g.torsion]}
        return render_json(doc), 0
    if args.format == "csv":
        return render_csv([group_row(n, m, k, g.free_rank, g.torsion)], CSV_HEADER), 0
    return f"G_{n}({m},{k})^ab = {g}\nrank {g.free_rank}, torsion {list(g.torsion)}\n", 0


def cmd_sweep(args: argparse.Namespace) -> tuple[str, int]:
    if args.max_n < 1:
        raise UsageError("max_n must be >= 1")
    rows = verifier.sweep_grid(args.max_n, args.jobs)
    bad = verifier.classification_mismatches(rows, args.max_n)
    holds = not bad["rank2"] and not bad["rank2free"]
    if args.filter == "rank2":
        shown = [r for r in rows if r.structure.free_rank == 2]
    elif args.filter == "rank2free":
        shown = [r for r in rows if r.structure.free_rank == 2 and r.structure.is_free()]
    else:
        shown = rows
    summary = (
        "classification holds"
        if holds
        else "classification FAILS: "
        + ", ".join(f"{k} mismatch {sorted(v)}" for k, v in bad.items() if v)
    )
    code = 0 if holds else 1
    if args.format == "json":
        doc = {
            "max_n": args.max_n,
            "filter": args.filter,
            "rows": [r.to_json() for r in shown],
            "classification_holds": holds,
            "mismatches": {k: [list(p) for p in sorted(v)] for k, v in bad.items()},
        }
        return render_json(doc), code
    table = [group_row(r.n, r.m, r.k, r.structure.free_rank, r.structure.torsion) for r in shown]
    if args.format == "csv":
        print(summary, file=sys.stderr)
        return render_csv(table, CSV_HEADER), code
    body = render_table(table, CSV_HEADER) if table else "(no rows)\n"
    return body + f"{len(shown)} rows; {summary}\n", code


def _parse_range(text: str) -> range:
    mt = re.fullmatch(r"\s*(\d+)\s*(?:\.\.\s*(\d+)\s*)?", text)
    if not mt:
        raise UsageError(f"bad range {text!r}; expected A or A..B")
    lo = int(mt.group(1))
    hi = int(mt.group(2)) if mt.group(2) else lo
    if hi < lo:
        raise UsageError(f"empty range {text!r}")
    return range(lo, hi + 1)


def _admissible_pairs(min_n: int, max_n: int) -> Iterable[tuple[int, int]]:
    start = max(6, min_n + (-min_n) % 6)
    for n in range(start, max_n + 1, 6):
        for m in range(8, n, 6):
            yield n, m


def _reports(args: argparse.Namespace) -> list[verifier.LemmaReport]:
    lemma = args.lemma
    if lemma == "grow":
        return [verifier.verify_lemma_grow(s, b) for s in _parse_range(args.s) for b in (1, 2)]
    if lemma == "half":
        return [verifier.verify_cor_half(n) for n in range(max(1, args.min_n), args.max_n + 1)]
    fn: Callable[[int, int], verifier.LemmaReport] = {
        "lucas": verifier.verify_lemma_lucas,
        "vg1": verifier.verify_lemma_vg1,
        "minimality": verifier.verify_minimality,
        "cases": verifier.verify_case,
    }[lemma]
    return [fn(n, m) for n, m in _admissible_pairs(args.min_n, args.max_n)]


def cmd_verify(args: argparse.Namespace) -> tuple[str, int]:
    if args.lemma not in LEMMAS:
        raise UsageError(f"unknown lemma {args.lemma!r}; choose from {', '.join(LEMMAS)}")
    all_reports = _reports(args)
    reports = [r for r in all_reports if r.applicable]
    failed = [r for r in reports if not r.conclusion_checked]
    code = 1 if failed else 0
    note = (
        f"{len(reports)} applicable of {len(all_reports)} instances; {len(failed)} failed"
        if reports
        else f"no applicable instances among {len(all_reports)}"
    )
    if args.format == "json":
        doc = {
            "lemma": args.lemma,
            "instances": len(all_reports),
            "applicable": len(reports),
            "failed": len(failed),
            "reports": [r.to_json() for r in reports],
        }
        return render_json(doc), code
    wkeys: list[str] = []
    for r in reports:
        wkeys.extend(k for k in r.witnesses if k not in wkeys)
    header = ["lemma", "n", "m", "ok"] + wkeys
    table = [
        [r.lemma_id, r.n, r.m, "yes" if r.conclusion_checked else "NO"]
        + [r.witnesses.get(k, "") for k in wkeys]
        for r in reports
    ]
    if args.format == "csv":
        print(note, file=sys.stderr)
        return render_csv(table, header), code
    body = render_table(table, header) if table else ""
    return body + note + "\n", code


def cmd_res(args: argparse.Namespace) -> tuple[str, int]:
    p = parse_poly(args.poly)
    q = parse_poly(args.against)
    if not p or not q:
        raise UsageError("resultant needs two nonzero polynomials")
    value = resultant(p, q)
    code = 0
    doc: dict[str, object] = {"p": poly_to_text(p), "q": poly_to_text(q), "resultant": str(value)}
    if args.oracle:
        check = resultant_sylvester_oracle(p, q)
        doc["sylvester"] = str(check)
        code = 0 if check == value else 1
    if args.format == "json":
        return render_json(doc), code
    if args.format == "csv":
        keys = list(doc)
        return render_csv([[doc[k] for k in keys]], keys), code
    out = f"{value}\n"
    if args.oracle:
        out += f"sylvester {doc['sylvester']} ({'agrees' if code == 0 else 'DISAGREES'})\n"
    return out, code


def cmd_cyclo(args: argparse.Namespace) -> tuple[str, int]:
    if args.d < 1:
        raise UsageError(f"cyclotomic index must be >= 1, got {args.d}")
    p = cyclotomic(args.d)
    if args.format == "json":
        return render_json({"d": args.d, "coeffs": [str(c) for c in p.coeffs]}), 0
    if args.format == "csv":
        return render_csv([[args.d, poly_to_text(p)]], ["d", "coeffs"]), 0
    return poly_to_text(p) + "\n", 0


# -- parser -------------------------------------------------------------------


def _common(default: bool) -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(add_help=False)
    kw = {} if default else {"default": argparse.SUPPRESS}
    p.add_argument("--format", choices=FORMATS, **({"default": "table"} if default else kw))
    p.add_argument("--jobs", type=int, **({"default": None} if default else kw),
                   help="worker processes for sweep (default: CPU count)")
    return p


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="cypres",
        description="Abelianization invariants of Fibonacci-type cyclically presented groups.",
        parents=[_common(True)],
    )
    sub = parser.add_subparsers(dest="command", required=True)
    common = _common(False)

    p = sub.add_parser("ab", parents=[common], help="abelianization of G_n(m,k)")
    p.add_argument("n", type=int)
    p.add_argument("m", type=int)
    p.add_argument("--k", type=int, default=1)
    p.set_defaults(func=cmd_ab)

    p = sub.add_parser("sweep", parents=[common], help="classify H(n,m) for all n <= max_n")
    p.add_argument("max_n", type=int)
    p.add_argument("--filter", choices=("rank2", "rank2free", "all"), default="rank2")
    p.set_defaults(func=cmd_sweep)

    p = sub.add_parser("verify", parents=[common], help="check one lemma over a range")
    p.add_argument("lemma")
    p.add_argument("--min-n", type=int, default=1)
    p.add_argument("--max-n", type=int, default=60)
    p.add_argument("--s", default="2..3", help="range A..B of s for 'grow'")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("res", parents=[common], help="resultant of two polynomials")
    p.add_argument("poly")
    p.add_argument("--against", required=True)
    p.add_argument("--oracle", action="store_true", help="also compute the Sylvester determinant")
    p.set_defaults(func=cmd_res)

    p = sub.add_parser("cyclo", parents=[common], help="coefficients of Phi_d, ascending")
    p.add_argument("d", type=int)
    p.set_defaults(func=cmd_cyclo)
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        out, code = args.func(args)
    except CoefficientOverflow as exc:
        print(f"cypres: CoefficientOverflow: {exc}", file=sys.stderr)
        return 1
    except (UsageError, WordSyntaxError, DomainError) as exc:
        print(f"cypres: error: {exc}", file=sys.stderr)
        return 2
    except CypresError as exc:
        print(f"cypres: {type(exc).__name__}: {exc}", file=sys.stderr)
        return 1
    sys.stdout.write(out)
    return code


if __name__ == "__main__":
    sys.exit(main())
