"""Degree bookkeeping for the Lewis splitting of Z-bar (x) B_{C_p}S^1 and the theta-relation coefficients."""

from __future__ import annotations

from dataclasses import dataclass

from .grading import (
    ONE,
    RODegree,
    Verdict,
    check_prime,
    coefficient_degree,
    e_degree,
    lambda_degree,
    mult_gap,
    t_degree,
    theta_coeff_exponent,
    theta_degree,
)


def splitting_table(p: int, k_max: int) -> list[tuple[int, RODegree]]:
    """``[(k, |e_k|) for 0 <= k <= k_max]``."""
    check_prime(p)
    if k_max < 0:
        raise ValueError(f"k_max must be >= 0, got {k_max}")
    return [(k, e_degree(p, k)) for k in range(k_max + 1)]


def suspension_degree(p: int, i: int) -> RODegree:
    """Degree of the homology suspension of e_{p^i}: |e_{p^i}| - lambda."""
    if i < 1:
        raise ValueError(f"i must be >= 1, got {i}")
    return e_degree(p, p**i) - lambda_degree()


def kz2_generator_degree(j: int) -> int:
    """Degree of gamma_j(beta_1) in H_*(CP^infty)."""
    if j < 0:
        raise ValueError(f"j must be >= 0, got {j}")
    return 2 * j


def beta_degree(p: int, i: int) -> int:
    """beta_(i) = gamma_{p^i}(beta_1)."""
    return kz2_generator_degree(p**i)


def claim_b_holds(p: int, i: int) -> bool:
    """beta_(i-1)^p and p beta_(i) sit in the same degree."""
    return p * beta_degree(p, i - 1) == beta_degree(p, i)


def theta_twist_only_at_zero(p: int, i_max: int) -> bool:
    """The product e_{p^i}^p needs a theta twist exactly when i = 0."""
    return mult_gap(p, 0) == theta_degree() and all(
        mult_gap(p, i) == RODegree(0, 0) for i in range(1, i_max + 1)
    )


def coefficient_sweep(p: int, i_max: int) -> list[tuple[int, int, RODegree, Verdict]]:
    """Every coefficient degree |c_{i,j}|, j < p^{i+1}, for 0 <= i <= i_max."""
    rows = []
    for i in range(i_max + 1):
        for j in range(p ** (i + 1)):
            d, v = coefficient_degree(p, i, j)
            rows.append((i, j, d, v))
    return rows


@dataclass(frozen=True)
class LintRow:
    i: int
    required_degree: RODegree
    forced_exponent: int
    printed_exponent: int
    restriction_value: int
    restriction_expected: int

    @property
    def exponent_status(self) -> str:
        return "MATCH" if self.forced_exponent == self.printed_exponent else "MISMATCH"

    @property
    def restriction_status(self) -> str:
        return "PASS" if self.restriction_value == self.restriction_expected else "FAIL"

    def as_dict(self) -> dict:
        return {
            "i": self.i,
            "required_degree": list(self.required_degree.as_tuple()),
            "forced_exponent": self.forced_exponent,
            "printed_exponent": self.printed_exponent,
            "exponent_status": self.exponent_status,
            "restriction": self.restriction_status,
        }


def lint_section4(p: int, i_max: int) -> list[LintRow]:
    """Audit the coefficient of beta_(i) in [theta]_* e_{p^i} for 1 <= i <= i_max.

    The coefficient must live in |e_{p^i}| - (2p^i, 2p^i).  Its restriction
    is p^{i-1} * res(theta) / res(u_lambda)^m = p^{i-1} * p, whatever m is,
    and has to equal the p^i from [p]_* res(e_{p^i}) = p^i beta_(i).
    """
    check_prime(p)
    if i_max < 1:
        raise ValueError(f"i_max must be >= 1, got {i_max}")
    rows = []
    for i in range(1, i_max + 1):
        ex = theta_coeff_exponent(p, i)
        res_theta, res_u = p, 1
        restricted = p ** (i - 1) * res_theta // res_u**ex.printed
        rows.append(
            LintRow(
                i=i,
                required_degree=e_degree(p, p**i) - 2 * p**i * ONE,
                forced_exponent=ex.forced,
                printed_exponent=ex.printed,
                restriction_value=restricted,
                restriction_expected=p**i,
            )
        )
    return rows


def suspension_matches_t(p: int, i_max: int) -> bool:
    return all(suspension_degree(p, i) == t_degree(p, i) for i in range(1, i_max + 1))
