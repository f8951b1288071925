"""Dense univariate polynomials over the integers.

Coefficients are plain Python ints stored in ascending order, so ``coeffs[i]``
is the coefficient of ``t**i``. Values are immutable and hashable.

Resultants are always returned in absolute value.
"""

from __future__ import annotations

import math
import os
from fractions import Fraction
from functools import reduce
from typing import Iterable, Sequence

from .errors import CoefficientOverflow, NotDivisible, ZeroPolynomial

#: Degree of the zero polynomial. Compares below every integer degree.
NEG_INF = -math.inf


def max_bits() -> int | None:
    """Coefficient bit-size cap from ``CYPRES_MAX_BITS`` (None when unset)."""
    raw = os.environ.get("CYPRES_MAX_BITS", "").strip()
    if not raw:
        return None
    cap = int(raw)
    return cap if cap > 0 else None


def _guard(values: Iterable[int], cap: int | None) -> None:
    if cap is None:
        return
    for c in values:
        if c.bit_length() > cap:
            raise CoefficientOverflow(
                f"coefficient of {c.bit_length()} bits exceeds CYPRES_MAX_BITS={cap}"
            )


def _trim(coeffs: list[int]) -> tuple[int, ...]:
    n = len(coeffs)
    while n and coeffs[n - 1] == 0:
        n -= 1
    return tuple(coeffs[:n])


class IntPoly:
    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable[int] = ()) -> None:
        object.__setattr__(self, "coeffs", _trim([int(c) for c in coeffs]))

    def __setattr__(self, name, value):
        raise AttributeError("IntPoly is immutable")

    @classmethod
    def _raw(cls, coeffs: tuple[int, ...]) -> IntPoly:
        # trusted constructor: coeffs already trimmed ints
        obj = object.__new__(cls)
        object.__setattr__(obj, "coeffs", coeffs)
        return obj

    @classmethod
    def monomial(cls, k: int, c: int = 1) -> IntPoly:
        if k < 0:
            raise ValueError("negative exponent")
        return cls([0] * k + [c])

    @classmethod
    def const(cls, c: int) -> IntPoly:
        return cls([c])

    @classmethod
    def from_sparse(cls, terms: dict[int, int]) -> IntPoly:
        """Build from ``{exponent: coefficient}``; repeated exponents are summed by the caller."""
        if not terms:
            return ZERO
        out = [0] * (max(terms) + 1)
        for k, c in terms.items():
            out[k] += c
        return cls(out)

    # -- basic properties -------------------------------------------------

    @property
    def degree(self) -> int | float:
        return len(self.coeffs) - 1 if self.coeffs else NEG_INF

    @property
    def lead(self) -> int:
        return self.coeffs[-1] if self.coeffs else 0

    def is_zero(self) -> bool:
        return not self.coeffs

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    def __len__(self) -> int:
        return len(self.coeffs)

    def __getitem__(self, i: int) -> int:
        return self.coeffs[i] if 0 <= i < len(self.coeffs) else 0

    def __eq__(self, other: object) -> bool:
        if isinstance(other, IntPoly):
            return self.coeffs == other.coeffs
        if isinstance(other, int):
            return self.coeffs == _trim([other])
        return NotImplemented

    def __hash__(self) -> int:
        return hash(self.coeffs)

    def __repr__(self) -> str:
        return f"IntPoly({list(self.coeffs)})"

    def __str__(self) -> str:
        if not self.coeffs:
            return "0"
        parts = []
        for i in range(len(self.coeffs) - 1, -1, -1):
            c = self.coeffs[i]
            if c == 0:
                continue
            mag = abs(c)
            if i == 0:
                body = str(mag)
            else:
                mono = "t" if i == 1 else f"t^{i}"
                body = mono if mag == 1 else f"{mag}*{mono}"
            sign = "-" if c < 0 else "+"
            parts.append((sign, body))
        first_sign, first_body = parts[0]
        out = ("-" if first_sign == "-" else "") + first_body
        for sign, body in parts[1:]:
            out += f" {sign} {body}"
        return out

    # -- ring operations --------------------------------------------------

    def __neg__(self) -> IntPoly:
        return IntPoly._raw(tuple(-c for c in self.coeffs))

    def __add__(self, other: IntPoly | int) -> IntPoly:
        if isinstance(other, int):
            other = IntPoly.const(other)
        if not isinstance(other, IntPoly):
            return NotImplemented
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] += c
        return IntPoly._raw(_trim(out))

    __radd__ = __add__

    def __sub__(self, other: IntPoly | int) -> IntPoly:
        if isinstance(other, int):
            other = IntPoly.const(other)
        if not isinstance(other, IntPoly):
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other: int) -> IntPoly:
        return IntPoly.const(other) - self

    def __mul__(self, other: IntPoly | int) -> IntPoly:
        if isinstance(other, int):
            if other == 0:
                return ZERO
            return IntPoly._raw(tuple(c * other for c in self.coeffs))
        if not isinstance(other, IntPoly):
            return NotImplemented
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return ZERO
        out = [0] * (len(a) + len(b) - 1)
        for i, x in enumerate(a):
            if x == 0:
                continue
            for j, y in enumerate(b):
                if y:
                    out[i + j] += x * y
        return IntPoly._raw(_trim(out))

    __rmul__ = __mul__

    def __pow__(self, k: int) -> IntPoly:
        if k < 0:
            raise ValueError("negative power")
        result, base = ONE, self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def __call__(self, x: int) -> int:
        return eval_int(self, x)

    def content(self) -> int:
        return reduce(math.gcd, self.coeffs, 0)

    def primitive_part(self) -> IntPoly:
        """Divide by the content and make the leading coefficient positive."""
        if not self.coeffs:
            return ZERO
        c = self.content()
        if self.lead < 0:
            c = -c
        return IntPoly._raw(tuple(x // c for x in self.coeffs))

    def reversed(self) -> IntPoly:
        return IntPoly(self.coeffs[::-1])


ZERO = IntPoly._raw(())
ONE = IntPoly._raw((1,))
T = IntPoly._raw((0, 1))


def poly(*coeffs: int) -> IntPoly:
    """Shorthand: ``poly(1, -1, 1)`` is ``1 - t + t^2``."""
    return IntPoly(coeffs)


def add(p: IntPoly, q: IntPoly) -> IntPoly:
    return p + q


def sub(p: IntPoly, q: IntPoly) -> IntPoly:
    return p - q


def mul(p: IntPoly, q: IntPoly) -> IntPoly:
    return p * q


def eval_int(p: IntPoly, x: int) -> int:
    acc = 0
    for c in reversed(p.coeffs):
        acc = acc * x + c
    return acc


def eval_fraction(p: IntPoly, x: Fraction) -> Fraction:
    acc = Fraction(0)
    for c in reversed(p.coeffs):
        acc = acc * x + c
    return acc


def divmod_monic_lead(p: IntPoly, d: IntPoly) -> tuple[IntPoly, IntPoly]:
    """Long division by ``d`` whose leading coefficient is +1 or -1."""
    if not d:
        raise ZeroPolynomial("division by the zero polynomial")
    lc = d.lead
    if lc not in (1, -1):
        raise ValueError("divisor must have leading coefficient +-1")
    return _long_divide(p, d)


def _long_divide(p: IntPoly, d: IntPoly) -> tuple[IntPoly, IntPoly]:
    rem = list(p.coeffs)
    dc = d.coeffs
    dn = len(dc) - 1
    lc = dc[-1]
    if len(rem) - 1 < dn:
        return ZERO, p
    quo = [0] * (len(rem) - dn)
    for i in range(len(rem) - 1, dn - 1, -1):
        c = rem[i]
        if c == 0:
            continue
        q, r = divmod(c, lc)
        if r:
            raise NotDivisible(
                f"leading coefficient {c} not divisible by {lc} at degree {i}"
            )
        quo[i - dn] = q
        base = i - dn
        for j, y in enumerate(dc):
            if y:
                rem[base + j] -= q * y
    return IntPoly._raw(_trim(quo)), IntPoly._raw(_trim(rem[:dn]))


def divexact(p: IntPoly, d: IntPoly) -> IntPoly:
    """Return ``q`` with ``q * d == p``, or raise NotDivisible."""
    if not d:
        raise ZeroPolynomial("division by the zero polynomial")
    q, r = _long_divide(p, d)
    if r:
        raise NotDivisible(f"nonzero remainder {r} dividing {p} by {d}")
    return q


def rem_monic_lead(p: IntPoly, d: IntPoly) -> IntPoly:
    return divmod_monic_lead(p, d)[1]


def pseudo_rem(p: IntPoly, d: IntPoly) -> IntPoly:
    """Pseudo-remainder: ``lead(d)**(deg p - deg d + 1) * p`` mod ``d``."""
    if not d:
        raise ZeroPolynomial("pseudo-division by the zero polynomial")
    rem = list(p.coeffs)
    dc = d.coeffs
    dn = len(dc) - 1
    lc = dc[-1]
    if len(rem) - 1 < dn:
        return p
    for i in range(len(rem) - 1, dn - 1, -1):
        c = rem[i]
        if lc != 1:
            for j in range(i + 1):
                rem[j] *= lc
        if c:
            base = i - dn
            for j, y in enumerate(dc):
                if y:
                    rem[base + j] -= c * y
    return IntPoly._raw(_trim(rem[:dn]))


def gcd_primitive(p: IntPoly, q: IntPoly) -> IntPoly:
    """Primitive gcd with positive leading coefficient (primitive PRS)."""
    if not p and not q:
        raise ZeroPolynomial("gcd of two zero polynomials is undefined")
    if not p:
        return q.primitive_part()
    if not q:
        return p.primitive_part()
    a, b = p.primitive_part(), q.primitive_part()
    if a.degree < b.degree:
        a, b = b, a
    while b:
        r = pseudo_rem(a, b)
        a, b = b, (r.primitive_part() if r else ZERO)
    if a.degree == 0:
        return ONE
    return a.primitive_part()


def resultant(p: IntPoly, q: IntPoly) -> int:
    """``|Res(p, q)|`` by the subresultant PRS (Collins-Brown-Traub)."""
    return abs(resultant_signed(p, q))


def resultant_signed(p: IntPoly, q: IntPoly) -> int:
    if not p or not q:
        raise ZeroPolynomial("resultant with the zero polynomial")
    cap = max_bits()
    a, b = p, q
    da, db = len(a.coeffs) - 1, len(b.coeffs) - 1
    if da == 0:
        return a.lead**db
    if db == 0:
        return b.lead**da
    ca, cb = a.content(), b.content()
    a = IntPoly._raw(tuple(x // ca for x in a.coeffs))
    b = IntPoly._raw(tuple(x // cb for x in b.coeffs))
    scale = ca**db * cb**da
    sign = 1
    if da < db:
        a, b = b, a
        da, db = db, da
        if da & 1 and db & 1:
            sign = -sign
    g = h = 1
    while True:
        delta = da - db
        if da & 1 and db & 1:
            sign = -sign
        r = pseudo_rem(a, b)
        if not r:
            return 0
        a = b
        denom = g * h**delta
        b = IntPoly._raw(tuple(x // denom for x in r.coeffs))
        _guard(b.coeffs, cap)
        g = a.lead
        if delta == 0:
            pass
        elif delta == 1:
            h = g
        else:
            h = g**delta // h ** (delta - 1)
        da, db = db, len(b.coeffs) - 1
        if db == 0:
            lb = b.lead
            if da == 1:
                h = lb
            else:
                h = lb**da // h ** (da - 1)
            return sign * scale * h


def sylvester_matrix(p: IntPoly, q: IntPoly) -> list[list[int]]:
    m, n = len(p.coeffs) - 1, len(q.coeffs) - 1
    size = m + n
    rows = []
    pc = p.coeffs[::-1]
    qc = q.coeffs[::-1]
    for i in range(n):
        row = [0] * size
        row[i : i + m + 1] = pc
        rows.append(row)
    for i in range(m):
        row = [0] * size
        row[i : i + n + 1] = qc
        rows.append(row)
    return rows


def bareiss_det(matrix: Sequence[Sequence[int]]) -> int:
    """Determinant by fraction-free Gaussian elimination."""
    a = [list(row) for row in matrix]
    n = len(a)
    if n == 0:
        return 1
    sign = 1
    prev = 1
    for k in range(n - 1):
        if a[k][k] == 0:
            for i in range(k + 1, n):
                if a[i][k]:
                    a[k], a[i] = a[i], a[k]
                    sign = -sign
                    break
            else:
                return 0
        akk = a[k][k]
        rowk = a[k]
        for i in range(k + 1, n):
            rowi = a[i]
            aik = rowi[k]
            for j in range(k + 1, n):
                rowi[j] = (rowi[j] * akk - aik * rowk[j]) // prev
            rowi[k] = 0
        prev = akk
    return sign * a[n - 1][n - 1]


def resultant_sylvester_oracle(p: IntPoly, q: IntPoly) -> int:
    """``|Res(p, q)|`` as the Sylvester determinant; independent of the PRS path."""
    if not p or not q:
        raise ZeroPolynomial("resultant with the zero polynomial")
    return abs(bareiss_det(sylvester_matrix(p, q)))
