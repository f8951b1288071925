"""Exact arithmetic in Z[eta], eta a primitive sixth root of unity, and Lucas numbers.

Elements are written ``x + y*eta`` with the reduction ``eta**2 = eta - 1``.
The norm ``x**2 + x*y + y**2`` equals ``|x + y*eta|**2``.
"""

from __future__ import annotations

import cmath
import math
import sys
from dataclasses import dataclass

from .errors import DomainError, NumericInstability


@dataclass(frozen=True)
class EisInt:
    x: int = 0
    y: int = 0

    @classmethod
    def coerce(cls, v: EisInt | int) -> EisInt:
        return v if isinstance(v, EisInt) else cls(v, 0)

    def __add__(self, other: EisInt | int) -> EisInt:
        o = EisInt.coerce(other)
        return EisInt(self.x + o.x, self.y + o.y)

    __radd__ = __add__

    def __neg__(self) -> EisInt:
        return EisInt(-self.x, -self.y)

    def __sub__(self, other: EisInt | int) -> EisInt:
        return self + (-EisInt.coerce(other))

    def __rsub__(self, other: int) -> EisInt:
        return EisInt.coerce(other) - self

    def __mul__(self, other: EisInt | int) -> EisInt:
        o = EisInt.coerce(other)
        a, b, c, d = self.x, self.y, o.x, o.y
        bd = b * d
        return EisInt(a * c - bd, a * d + b * c + bd)

    __rmul__ = __mul__

    def __pow__(self, k: int) -> EisInt:
        if k < 0:
            raise ValueError("negative powers are only defined for units; use eta_pow")
        result, base = ONE, self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def conjugate(self) -> EisInt:
        # conj(eta) = 1 - eta
        return EisInt(self.x + self.y, -self.y)

    def to_complex(self) -> complex:
        return self.x + self.y * ETA_COMPLEX

    def __str__(self) -> str:
        return f"{self.x}{self.y:+d}*eta"


ZERO = EisInt(0, 0)
ONE = EisInt(1, 0)
ETA = EisInt(0, 1)
ETA_COMPLEX = cmath.exp(1j * math.pi / 3)


def eis_add(a: EisInt, b: EisInt) -> EisInt:
    return a + b


def eis_mul(a: EisInt, b: EisInt) -> EisInt:
    return a * b


def eis_norm(a: EisInt) -> int:
    return a.x * a.x + a.x * a.y + a.y * a.y


def eta_pow(k: int) -> EisInt:
    """eta**k for any integer k (eta has order 6)."""
    return ETA ** (k % 6)


def lucas(k: int) -> int:
    if k < 0:
        raise DomainError("Lucas index must be nonnegative")
    a, b = 2, 1
    for _ in range(k):
        a, b = b, a + b
    return a


@dataclass(frozen=True)
class GrowParams:
    """Parameters n = 2*3^s, m - 2 = 2^b * 3^(s-1), i.e. m - 2 is n/3 (b=1) or 2n/3 (b=2)."""

    s: int
    b: int

    def __post_init__(self) -> None:
        if self.s < 2:
            raise DomainError(f"s must be >= 2, got {self.s}")
        if self.b not in (1, 2):
            raise DomainError(f"b must be 1 or 2, got {self.b}")

    @property
    def n(self) -> int:
        return 2 * 3**self.s

    @property
    def q(self) -> int:
        return 3 ** (self.s - 1)

    @property
    def m(self) -> int:
        return 2 + 2**self.b * 3 ** (self.s - 1)

    @property
    def epsilon(self) -> int:
        return 2 if self.b == 1 else 4


def power_sum_Sq(g: GrowParams) -> EisInt:
    """beta_1**q + beta_2**q for the roots of ``eta^eps X^2 - X + 1``.

    Both the sum and the product of the roots are eta**(-eps), so the power
    sums obey S_{k+1} = e*S_k - e*S_{k-1} with e = eta**(6 - eps).
    """
    return power_sums(g.epsilon, g.q)[g.q]


def power_sums(epsilon: int, upto: int) -> list[EisInt]:
    e = eta_pow(-epsilon)
    out = [EisInt(2, 0), e]
    while len(out) <= upto:
        out.append(e * out[-1] - e * out[-2])
    return out[: upto + 1]


def rq_value(g: GrowParams) -> EisInt:
    """R_q = 1 - eta*S_q + eta**2."""
    return ONE - ETA * power_sum_Sq(g) + ETA * ETA


def rq_norm(g: GrowParams) -> int:
    return eis_norm(rq_value(g))


def root_product_forms_agree(epsilon: int) -> bool:
    """eta**(2*eps) and eta**(-eps) coincide because eta**6 = 1."""
    return eta_pow(2 * epsilon) == eta_pow(-epsilon)


def beta_moduli(epsilon: int) -> tuple[float, float]:
    """Moduli of the two roots of ``eta^eps X^2 - X + 1``, larger first (floating point)."""
    lead = ETA_COMPLEX**epsilon
    disc = cmath.sqrt(1 - 4 * lead)
    r1 = (1 + disc) / (2 * lead)
    r2 = (1 - disc) / (2 * lead)
    m1, m2 = abs(r1), abs(r2)
    return (m1, m2) if m1 >= m2 else (m2, m1)


def beta_modulus_check(g: GrowParams) -> bool:
    """Numerical sanity check that the larger root exceeds 3**(1/3) in modulus."""
    big, small = beta_moduli(g.epsilon)
    if big - small < 1e-9:
        raise NumericInstability(f"root moduli {big} and {small} are not separated")
    margin = 10 * sys.float_info.epsilon
    return big - 3 ** (1 / 3) > margin and abs(big * small - 1) <= 1e-9
