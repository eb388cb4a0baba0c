"""Gauss norms on the enveloping algebra, tracked in log_p coordinates.

For a prime p and radius r = p^s with s > 0, the norm of an element
sum_A d_A X^A is sup_A |d_A| r^{|A|}.  Everything is kept exact by
working with log_p of the norm: the value is max_A(-v_p(d_A) + |A| s),
a rational number, with a bottom element standing in for the norm 0 of
the zero element.  Radii with s <= 0 are rejected; submultiplicativity
only holds for r > 1.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Union

from .errors import DomainError
from .liealg import UEAElement


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    k = 2
    while k * k <= n:
        if n % k == 0:
            return False
        k += 1
    return True


def vp(c, p: int) -> int:
    """p-adic valuation of a nonzero rational; |c| = p^(-vp(c))."""
    c = Fraction(c)
    if c == 0:
        raise DomainError("valuation of zero is undefined")
    if not is_prime(p):
        raise DomainError(f"{p} is not prime")
    v = 0
    num, den = c.numerator, c.denominator
    while num % p == 0:
        num //= p
        v += 1
    while den % p == 0:
        den //= p
        v -= 1
    return v


@dataclass(frozen=True)
class NormParam:
    """Prime p and log-radius s = log_p r, with r > 1 enforced."""

    p: int
    s: Fraction

    def __post_init__(self):
        if not is_prime(self.p):
            raise DomainError(f"{self.p} is not prime")
        object.__setattr__(self, "s", Fraction(self.s))
        if self.s <= 0:
            raise DomainError("log-radius must be positive (r > 1)")


@dataclass(frozen=True, order=False)
class LogNorm:
    """log_p of a Gauss norm; value None encodes the norm of zero."""

    value: Optional[Fraction]

    @classmethod
    def bottom(cls) -> "LogNorm":
        return cls(None)

    @classmethod
    def of(cls, value) -> "LogNorm":
        return cls(Fraction(value))

    @property
    def is_bottom(self) -> bool:
        return self.value is None

    def _key(self):
        return (0,) if self.is_bottom else (1, self.value)

    def __le__(self, other: "LogNorm") -> bool:
        return self._key() <= other._key()

    def __lt__(self, other: "LogNorm") -> bool:
        return self._key() < other._key()

    def plus(self, other: "LogNorm") -> "LogNorm":
        """Sum in log scale (product of norms); bottom is absorbing."""
        if self.is_bottom or other.is_bottom:
            return LogNorm.bottom()
        return LogNorm(self.value + other.value)

    def shift(self, delta) -> "LogNorm":
        if self.is_bottom:
            return self
        return LogNorm(self.value + Fraction(delta))

    def __str__(self):
        return "-inf" if self.is_bottom else str(self.value)


def log_norm(u: UEAElement, np: NormParam) -> LogNorm:
    """max over the support of (-vp(coefficient) + degree * s)."""
    if u.is_zero():
        return LogNorm.bottom()
    best: Optional[Fraction] = None
    for exps, coef in u.terms.items():
        val = -vp(coef, np.p) + sum(exps) * np.s
        if best is None or val > best:
            best = val
    return LogNorm(best)


def check_submultiplicative(u: UEAElement, v: UEAElement, np: NormParam) -> bool:
    """True iff log|uv| <= log|u| + log|v| (bottom absorbing)."""
    return log_norm(u * v, np) <= log_norm(u, np).plus(log_norm(v, np))


def check_ultrametric(u: UEAElement, v: UEAElement, np: NormParam) -> bool:
    """log|u+v| <= max of the two, with equality when the maxima differ."""
    nu, nv = log_norm(u, np), log_norm(v, np)
    top = max(nu, nv, key=lambda n: n._key())
    ns = log_norm(u + v, np)
    if not ns <= top:
        return False
    if nu != nv and ns != top:
        return False
    return True
