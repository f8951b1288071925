"""Cyclotomic polynomials and the arithmetic functions around them."""

from __future__ import annotations

from functools import lru_cache

from .errors import DomainError
from .exactpoly import IntPoly, divexact


def _require_positive(n: int, what: str = "n") -> None:
    if n < 1:
        raise DomainError(f"{what} must be a positive integer, got {n}")


def is_prime(p: int) -> bool:
    # deterministic trial division; inputs are small
    if p < 2:
        return False
    if p < 4:
        return True
    if p % 2 == 0:
        return False
    f = 3
    while f * f <= p:
        if p % f == 0:
            return False
        f += 2
    return True


def factorize(n: int) -> dict[int, int]:
    """Prime factorization by trial division, as ``{prime: exponent}``."""
    _require_positive(n)
    out: dict[int, int] = {}
    f = 2
    while f * f <= n:
        while n % f == 0:
            out[f] = out.get(f, 0) + 1
            n //= f
        f += 1 if f == 2 else 2
    if n > 1:
        out[n] = out.get(n, 0) + 1
    return out


def totient(n: int) -> int:
    _require_positive(n)
    result = n
    for p in factorize(n):
        result = result // p * (p - 1)
    return result


def padic_valuation(p: int, x: int) -> int:
    """Largest ``e`` with ``p**e`` dividing ``x``."""
    if not is_prime(p):
        raise DomainError(f"{p} is not prime")
    if x == 0:
        raise DomainError("valuation of 0 is undefined")
    e = 0
    while x % p == 0:
        x //= p
        e += 1
    return e


def divisors(n: int) -> list[int]:
    _require_positive(n)
    small, large = [], []
    d = 1
    while d * d <= n:
        if n % d == 0:
            small.append(d)
            if d * d != n:
                large.append(n // d)
        d += 1
    return small + large[::-1]


@lru_cache(maxsize=None)
def cyclotomic(d: int) -> IntPoly:
    """Phi_d, obtained from ``t^d - 1`` by dividing out Phi_e for every proper divisor e."""
    _require_positive(d, "d")
    p = IntPoly.monomial(d) - 1
    for e in divisors(d)[:-1]:
        p = divexact(p, cyclotomic(e))
    return p


def factor_tn_minus_1(n: int) -> list[tuple[int, IntPoly]]:
    """``[(d, Phi_d) for d | n]`` in ascending order of d."""
    _require_positive(n)
    return [(d, cyclotomic(d)) for d in divisors(n)]


def prime_power_ratio(big: int, small: int) -> int | None:
    """Return p if ``big == small * p**j`` with p prime and j >= 1, else None."""
    if big <= small or big % small:
        return None
    fac = factorize(big // small)
    if len(fac) == 1:
        return next(iter(fac))
    return None


def res_cyclo_closed(k: int, l: int) -> int:
    """``|Res(Phi_k, Phi_l)|`` for k != l, from the closed form."""
    _require_positive(k, "k")
    _require_positive(l, "l")
    if k == l:
        raise DomainError("closed form needs k != l")
    p = prime_power_ratio(k, l)
    if p is not None:
        return p ** totient(l)
    p = prime_power_ratio(l, k)
    if p is not None:
        return p ** totient(k)
    return 1
