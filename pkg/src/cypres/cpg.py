"""Fibonacci-type cyclically presented groups G_n(m, k).

The group has generators x_0..x_{n-1} and relators x_i x_{i+m} x_{i+k}^-1.
Its abelianization is the cokernel of the circulant built from the
representer polynomial 1 + t^m - t^k. The Gilbert-Howie group H(n, m) is
the case k = 1.
"""

from __future__ import annotations

import re
from dataclasses import dataclass

from .circulant import AbelianGroupStructure, abelian_structure, circulant_from_poly
from .cyclo import cyclotomic
from .errors import DomainError, NotDivisible, WordSyntaxError
from .exactpoly import IntPoly, divexact, gcd_primitive, resultant


@dataclass(frozen=True)
class FibParams:
    n: int
    m: int
    k: int = 1

    def __post_init__(self) -> None:
        if self.n < 1:
            raise DomainError(f"n must be positive, got {self.n}")
        object.__setattr__(self, "m", self.m % self.n)
        object.__setattr__(self, "k", self.k % self.n)

    def relator(self) -> str:
        return f"x0 x{self.m} x{self.k}^-1"


def H(n: int, m: int) -> FibParams:
    """Gilbert-Howie parameters G_n(m, 1)."""
    return FibParams(n, m, 1)


@dataclass(frozen=True)
class CyclicWord:
    letters: tuple[tuple[int, int], ...]

    def __post_init__(self) -> None:
        if not self.letters:
            raise ValueError("a cyclic word must be nonempty")
        for _, e in self.letters:
            if e not in (1, -1):
                raise ValueError(f"exponent {e} is not +1 or -1")


_ATOM = re.compile(r"x(-?\d+)(\^-1)?")
_TOKEN = re.compile(r"\S+")


def _byte_offset(text: str, pos: int) -> int:
    return len(text[:pos].encode("utf-8"))


def parse_cyclic_word(text: str, n: int) -> CyclicWord:
    """Parse whitespace-separated atoms ``x<idx>`` or ``x<idx>^-1``.

    Indices are kept as written; they are reduced mod n only when exponent
    sums are taken. ``n`` is accepted for interface symmetry and validated.
    """
    if n < 1:
        raise DomainError(f"n must be positive, got {n}")
    letters = []
    for tok in _TOKEN.finditer(text):
        mt = _ATOM.fullmatch(tok.group())
        if mt is None:
            raise WordSyntaxError(f"malformed atom {tok.group()!r}", _byte_offset(text, tok.start()))
        idx = int(mt.group(1))
        if idx < 0:
            raise IndexError(f"negative generator index {idx} at offset {_byte_offset(text, tok.start())}")
        letters.append((idx, -1 if mt.group(2) else 1))
    if not letters:
        raise WordSyntaxError("empty word", _byte_offset(text, len(text)))
    return CyclicWord(tuple(letters))


def exponent_sums(w: CyclicWord, n: int) -> tuple[int, ...]:
    sums = [0] * n
    for idx, e in w.letters:
        sums[idx % n] += e
    return tuple(sums)


def representer_poly(p: FibParams) -> IntPoly:
    return IntPoly.from_sparse({0: 1}) + IntPoly.monomial(p.m) - IntPoly.monomial(p.k)


def abelianization(p: FibParams) -> AbelianGroupStructure:
    return abelian_structure(circulant_from_poly(representer_poly(p), p.n))


def rank_via_gcd(p: FibParams) -> int:
    """Degree of gcd(1 + t^m - t^k, t^n - 1)."""
    h = gcd_primitive(representer_poly(p), IntPoly.monomial(p.n) - 1)
    return int(h.degree)


def trinomial(m: int) -> IntPoly:
    """f(t) = t^m - t + 1."""
    if m < 0:
        raise DomainError("exponent must be nonnegative")
    return IntPoly.from_sparse({0: 1}) + IntPoly.monomial(m) - IntPoly.monomial(1)


def _check_FG_domain(n: int, m: int) -> None:
    if n < 1 or n % 6:
        raise DomainError(f"need 6 | n, got n={n}")
    if m < 2 or m % 6 != 2:
        raise DomainError(f"need m = 2 (mod 6) with m >= 2, got m={m}")


def F_and_G(n: int, m: int) -> tuple[IntPoly, IntPoly]:
    """F = (t^m - t + 1)/Phi_6 and G = (t^n - 1)/Phi_6."""
    _check_FG_domain(n, m)
    phi6 = cyclotomic(6)
    try:
        F = divexact(trinomial(m), phi6)
        G = divexact(IntPoly.monomial(n) - 1, phi6)
    except NotDivisible as exc:  # pragma: no cover - excluded by the congruences
        raise DomainError(str(exc)) from exc
    return F, G


def res_FG(n: int, m: int) -> int:
    F, G = F_and_G(n, m)
    return resultant(F, G)


def rank2_torsionfree(n: int, m: int) -> bool:
    return res_FG(n, m) == 1
