"""Degree arithmetic on the p-local RO(C_p) lattice.

p-locally, S^{lambda^k} and S^lambda agree for k prime to p, so every degree
that occurs here is determined by two integers: the dimension of the fixed
subrepresentation and the total real dimension.  ``RODegree`` stores exactly
that pair.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    k = 3
    while k * k <= n:
        if n % k == 0:
            return False
        k += 2
    return True


def check_prime(p: int) -> int:
    """Return ``p`` unchanged, raising ``ValueError`` unless it is a prime."""
    if isinstance(p, bool) or not isinstance(p, int):
        raise TypeError(f"prime must be an int, got {type(p).__name__}")
    if not is_prime(p):
        raise ValueError(f"{p} is not prime")
    return p


def _check_positive(name: str, value: int) -> None:
    if value < 1:
        raise ValueError(f"{name} must be >= 1, got {value}")


@dataclass(frozen=True, order=True)
class RODegree:
    """A point ``(fixed, underlying)`` of the two-coordinate degree lattice."""

    fixed: int
    underlying: int

    def __add__(self, other: RODegree) -> RODegree:
        if not isinstance(other, RODegree):
            return NotImplemented
        return RODegree(self.fixed + other.fixed, self.underlying + other.underlying)

    def __sub__(self, other: RODegree) -> RODegree:
        if not isinstance(other, RODegree):
            return NotImplemented
        return RODegree(self.fixed - other.fixed, self.underlying - other.underlying)

    def __neg__(self) -> RODegree:
        return RODegree(-self.fixed, -self.underlying)

    def __mul__(self, k: int) -> RODegree:
        if isinstance(k, bool) or not isinstance(k, int):
            return NotImplemented
        return RODegree(k * self.fixed, k * self.underlying)

    __rmul__ = __mul__

    def is_valid_for(self, p: int) -> bool:
        # odd p: degrees are integer combinations of 1 and lambda
        return p == 2 or (self.underlying - self.fixed) % 2 == 0

    def as_tuple(self) -> tuple[int, int]:
        return (self.fixed, self.underlying)

    def __str__(self) -> str:
        return f"({self.fixed},{self.underlying})"


ZERO = RODegree(0, 0)
ONE = RODegree(1, 1)


def rho(p: int) -> RODegree:
    """The regular representation: one fixed line, total dimension p."""
    check_prime(p)
    return RODegree(1, p)


def lambda_degree() -> RODegree:
    return RODegree(0, 2)


def sigma_degree() -> RODegree:
    """Sign representation of C_2 (so lambda = 2 sigma when p = 2)."""
    return RODegree(0, 1)


def theta_degree() -> RODegree:
    """theta: S^{lambda-2} -> S^0 sits in degree lambda - 2."""
    return lambda_degree() - 2 * ONE


def u_lambda_degree() -> RODegree:
    """The Thom class u_lambda: S^lambda -> Sigma^2 Z lives in pi_{lambda-2}."""
    return lambda_degree() - 2 * ONE


def t_degree(p: int, i: int) -> RODegree:
    """Degree 2 p^{i-1} rho - lambda of the generator t_i."""
    check_prime(p)
    _check_positive("i", i)
    return 2 * p ** (i - 1) * rho(p) - lambda_degree()


def norm_degree(p: int, i: int) -> RODegree:
    """Degree of N(t_i): the underlying dimension of t_i, times rho."""
    return t_degree(p, i).underlying * rho(p)


def norm_transfer_gap(p: int, i: int) -> RODegree:
    """``|N(t_i)| - |t_i^p|``; always lambda - 2 = (-2, 0)."""
    return norm_degree(p, i) - p * t_degree(p, i)


def e_degree(p: int, k: int) -> RODegree:
    """Degree of the Lewis generator e_k, i.e. of V_k = sum_{0<=i<k} lambda^{i-k}.

    A summand lambda^{i-k} is trivial (contributing (2, 2)) exactly when p
    divides i - k, and otherwise p-locally equal to lambda.
    """
    check_prime(p)
    if k < 0:
        raise ValueError(f"k must be >= 0, got {k}")
    return RODegree(2 * (k // p), 2 * k)


def mult_gap(p: int, i: int) -> RODegree:
    """``p |e_{p^i}| - |e_{p^{i+1}}|``: theta's degree at i = 0, zero after."""
    if i < 0:
        raise ValueError(f"i must be >= 0, got {i}")
    return p * e_degree(p, p**i) - e_degree(p, p ** (i + 1))


class Verdict(enum.Enum):
    PASS = "PASS"
    PASS_WITH_FLAG = "PASS-WITH-FLAG"
    FAIL = "FAIL"

    def __str__(self) -> str:
        return self.value

    @property
    def ok(self) -> bool:
        return self is not Verdict.FAIL


def coefficient_degree(p: int, i: int, j: int) -> tuple[RODegree, Verdict]:
    """Degree of the coefficient c_{i,j} in e_{p^i}^p = sum_j c_{i,j} e_j.

    The verdict says whether the degree lies where pi_* of the constant
    Mackey functor Z vanishes.  A vanishing fixed dimension is reported as
    PASS_WITH_FLAG rather than decided.
    """
    check_prime(p)
    if i < 0:
        raise ValueError(f"i must be >= 0, got {i}")
    if not 0 <= j < p ** (i + 1):
        raise ValueError(f"j must satisfy 0 <= j < p^(i+1) = {p ** (i + 1)}, got {j}")
    d = p * e_degree(p, p**i) - e_degree(p, j)
    if d.underlying > 0 and d.fixed > 0:
        verdict = Verdict.PASS
    elif d.underlying > 0 and d.fixed == 0:
        verdict = Verdict.PASS_WITH_FLAG
    else:
        verdict = Verdict.FAIL
    return d, verdict


@dataclass(frozen=True)
class ThetaExponent:
    forced: int
    printed: int

    @property
    def mismatch(self) -> bool:
        return self.forced != self.printed


def theta_coeff_exponent(p: int, i: int) -> ThetaExponent:
    """Exponent m making theta * u_lambda^m the coefficient of beta_(i) in [theta]_* e_{p^i}.

    ``forced`` solves the degree equation
    ``|theta| + m |u_lambda| = |e_{p^i}| - (2p^i, 2p^i)``.
    ``printed`` is the published value p^i (p-1) - 1.  Both are returned;
    neither is preferred.
    """
    check_prime(p)
    _check_positive("i", i)
    target = e_degree(p, p**i) - 2 * p**i * ONE
    step = u_lambda_degree()
    rest = target - theta_degree()
    # u_lambda has zero underlying dimension, so only the fixed coordinate constrains m
    if rest.underlying != 0 or rest.fixed % step.fixed != 0:
        raise ArithmeticError(f"no integer exponent solves the degree equation for p={p}, i={i}")
    forced = rest.fixed // step.fixed
    assert theta_degree() + forced * step == target
    return ThetaExponent(forced=forced, printed=p**i * (p - 1) - 1)
