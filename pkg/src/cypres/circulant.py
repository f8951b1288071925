"""Integer circulant matrices and their Smith normal form.

The cokernel of ``circ_n(c_0, ..., c_{n-1})`` is the abelianization of a
cyclically presented group whose relator has exponent sums ``c_i``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Sequence

from .exactpoly import IntPoly, max_bits, resultant, _guard


@dataclass(frozen=True)
class Circulant:
    n: int
    first_row: tuple[int, ...]

    def __post_init__(self) -> None:
        if self.n < 1:
            raise ValueError("circulant size must be positive")
        if len(self.first_row) != self.n:
            raise ValueError(
                f"first row has length {len(self.first_row)}, expected {self.n}"
            )

    def rows(self) -> list[list[int]]:
        """Materialize the full matrix; row i is row 0 shifted right by i."""
        r = list(self.first_row)
        n = self.n
        return [r[n - i :] + r[: n - i] for i in range(n)]

    def representer(self) -> IntPoly:
        return IntPoly(self.first_row)


@dataclass(frozen=True)
class AbelianGroupStructure:
    """``Z^free_rank`` plus cyclic factors ``Z/d_1 + Z/d_2 + ...`` with d_1 | d_2 | ..."""

    free_rank: int
    torsion: tuple[int, ...] = field(default=())

    def __post_init__(self) -> None:
        object.__setattr__(self, "torsion", tuple(self.torsion))
        if self.free_rank < 0:
            raise ValueError("free rank must be nonnegative")
        for d in self.torsion:
            if d < 2:
                raise ValueError(f"invariant factor {d} < 2")
        for d, e in zip(self.torsion, self.torsion[1:]):
            if e % d:
                raise ValueError(f"invariant factors {d}, {e} violate divisibility")

    @property
    def torsion_order(self) -> int:
        return math.prod(self.torsion)

    def is_free(self) -> bool:
        return not self.torsion

    def __str__(self) -> str:
        parts = []
        if self.free_rank == 1:
            parts.append("Z")
        elif self.free_rank > 1:
            parts.append(f"Z^{self.free_rank}")
        parts.extend(f"Z/{d}" for d in self.torsion)
        return " + ".join(parts) if parts else "0"


def circulant_from_poly(f: IntPoly, n: int) -> Circulant:
    """Reduce ``f`` modulo ``t^n - 1`` and use the coefficients as the first row."""
    if n < 1:
        raise ValueError("n must be positive")
    row = [0] * n
    for j, c in enumerate(f.coeffs):
        row[j % n] += c
    return Circulant(n, tuple(row))


def _normalize_diagonal(diag: list[int]) -> list[int]:
    """Turn a nonzero diagonal into invariant factors d_1 | d_2 | ..."""
    d = sorted(abs(x) for x in diag)
    k = len(d)
    changed = True
    while changed:
        changed = False
        for i in range(k):
            for j in range(i + 1, k):
                a, b = d[i], d[j]
                if b % a:
                    g = math.gcd(a, b)
                    d[i], d[j] = g, a // g * b
                    changed = True
        d.sort()
    return d


def _diagonalize(rows: list[list[int]], ncols: int, cap: int | None) -> list[int]:
    """Reduce to diagonal form by unimodular row/column moves; returns the nonzero pivots.

    Rows are consumed. Once a pivot's column is cleared, its row is dropped:
    the remaining entries of that row can be cleared by column operations that
    touch no other row, provided the pivot divides them.
    """
    pivots: list[int] = []
    active = [r for r in rows if any(r)]
    cols = list(range(ncols))
    while active:
        # pick pivot: a unit if one exists, otherwise the smallest magnitude
        best = None
        best_abs = 0
        for i, r in enumerate(active):
            for j in cols:
                x = r[j]
                if x:
                    ax = x if x > 0 else -x
                    if best is None or ax < best_abs:
                        best, best_abs = (i, j), ax
                        if ax == 1:
                            break
            if best_abs == 1:
                break
        if best is None:
            break
        pi, pj = best
        while True:
            prow = active[pi]
            p = prow[pj]
            # clear column pj in the other rows
            smaller = None
            for i, r in enumerate(active):
                if i == pi:
                    continue
                x = r[pj]
                if x:
                    q = x // p
                    if q:
                        r2 = [a - q * b for a, b in zip(r, prow)]
                        active[i] = r2
                        x = r2[pj]
                    if x and (smaller is None or abs(x) < abs(active[smaller][pj])):
                        smaller = i
            if smaller is not None:
                pi = smaller
                continue
            # column pj is clear; check the pivot row against p
            rem_col = None
            for j in cols:
                if j == pj:
                    continue
                x = prow[j]
                if x % p:
                    if rem_col is None or abs(x % p) < abs(prow[rem_col] % p):
                        rem_col = j
            if rem_col is None:
                break
            # column op col_j -= q*col_pj touches only the pivot row
            j = rem_col
            q = prow[j] // p
            prow[j] -= q * p
            pj = j
        pivots.append(active[pi][pj])
        if cap is not None:
            _guard((pivots[-1],), cap)
        del active[pi]
        cols.remove(pj)
        active = [r for r in active if any(r[j] for j in cols)]
    return pivots


def smith_normal_form(matrix: Sequence[Sequence[int]]) -> tuple[tuple[int, ...], int]:
    """Smith normal form diagonal and rank of an integer matrix.

    Returns ``(diagonal, rank)``: ``min(rows, cols)`` entries, the positive
    invariant factors in divisibility order followed by zeros.
    """
    rows = [list(map(int, r)) for r in matrix]
    nrows = len(rows)
    ncols = len(rows[0]) if rows else 0
    if any(len(r) != ncols for r in rows):
        raise ValueError("matrix is not rectangular")
    pivots = _diagonalize(rows, ncols, max_bits())
    diag = _normalize_diagonal(pivots)
    rank = len(diag)
    diag += [0] * (min(nrows, ncols) - rank)
    return tuple(diag), rank


def abelian_structure(c: Circulant) -> AbelianGroupStructure:
    diag, rank = smith_normal_form(c.rows())
    return AbelianGroupStructure(c.n - rank, tuple(d for d in diag[:rank] if d > 1))


def det_circulant(c: Circulant) -> int:
    """``|det C|`` as the resultant of the representer with ``t^n - 1``."""
    f = c.representer()
    if not f:
        return 0
    g = IntPoly.monomial(c.n) - 1
    return resultant(f, g)
