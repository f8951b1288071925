"""Run every lemma verifier over a range of n and print a one-line tally per lemma."""

from __future__ import annotations

import argparse
import sys

from cypres.errors import NotApplicable
from cypres.verifier import (
    verify_case,
    verify_cor_half,
    verify_lemma_grow,
    verify_lemma_lucas,
    verify_lemma_vg1,
    verify_minimality,
)


def pairs(max_n: int):
    for n in range(6, max_n + 1, 6):
        for m in range(8, n, 6):
            yield n, m


def tally(name: str, reports) -> bool:
    applicable = [r for r in reports if r.applicable]
    failed = [r for r in applicable if not r.conclusion_checked]
    print(f"{name:<11} {len(applicable):>5} applicable  {len(failed):>3} failed")
    for r in failed:
        print(f"    FAILED at n={r.n}, m={r.m}: {r.hypotheses}")
    return not failed


def main(argv: list[str] | None = None) -> int:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--max-n", type=int, default=200)
    ap.add_argument("--max-s", type=int, default=4, help="largest s for the growth lemma (n = 2 * 3^s)")
    args = ap.parse_args(argv)

    ok = True
    ok &= tally("lucas", [verify_lemma_lucas(n, m) for n, m in pairs(args.max_n)])
    ok &= tally("half", [verify_cor_half(n) for n in range(1, args.max_n + 1)])
    ok &= tally("vg1", [verify_lemma_vg1(n, m) for n, m in pairs(args.max_n)])
    ok &= tally("grow", [verify_lemma_grow(s, b) for s in range(2, args.max_s + 1) for b in (1, 2)])
    mins = []
    for n, m in pairs(args.max_n):
        try:
            mins.append(verify_minimality(n, m))
        except NotApplicable:
            pass
    ok &= tally("minimality", mins)
    ok &= tally("cases", [verify_case(n, m) for n in range(6, args.max_n + 1, 6) for m in range(2, n, 6)])
    return 0 if ok else 1


if __name__ == "__main__":
    sys.exit(main())
