"""End-to-end comparisons of the model against the classical references."""

from __future__ import annotations

from dataclasses import dataclass

from . import reference as R
from . import series as S
from .blocks import DsaModel
from .grading import (
    RODegree,
    check_prime,
    e_degree,
    mult_gap,
    norm_transfer_gap,
    t_degree,
    theta_degree,
)
from .lenses import Lens, evaluate
from .series import GeneratorSpec, GradedDimSeries

# (generator name, degree shift) applied to the reference side
Perturbation = tuple[str, int]


@dataclass(frozen=True)
class Comparison:
    prime: int
    max_degree: int
    lens: str
    lhs: GradedDimSeries
    rhs: GradedDimSeries

    @property
    def first_mismatch(self) -> int | None:
        return S.first_mismatch(self.lhs, self.rhs)

    @property
    def equal(self) -> bool:
        return self.first_mismatch is None

    def to_dict(self) -> dict:
        lo = min(self.lhs.lower_bound, self.rhs.lower_bound)
        return {
            "prime": self.prime,
            "max_degree": self.max_degree,
            "lens": self.lens,
            "lower_bound": lo,
            "lhs": self.lhs.values(lo, self.max_degree),
            "rhs": self.rhs.values(lo, self.max_degree),
            "equal": self.equal,
            "first_mismatch": self.first_mismatch,
        }


def _apply(gens: list[GeneratorSpec], perturb: Perturbation | None) -> list[GeneratorSpec]:
    return gens if perturb is None else R.perturb(gens, *perturb)


def reference_generators(p: int, n: int, lens: Lens | str) -> list[GeneratorSpec]:
    """Generators whose free algebra is the target for ``lens``."""
    if Lens(lens) is Lens.UNDERLYING:
        return R.hz_modp_generators(p, n)
    return R.milnor_generators(p, n) + [R.b_generator()]


def reference_series(p: int, n: int, lens: Lens | str, perturb: Perturbation | None = None) -> GradedDimSeries:
    """hz_modp_series for underlying; milnor_series (x) b_polynomial for phi."""
    if perturb is None:
        if Lens(lens) is Lens.UNDERLYING:
            return R.hz_modp_series(p, n)
        return S.tensor(R.milnor_series(p, n), R.b_polynomial(n))
    return S.from_generators(_apply(reference_generators(p, n, lens), perturb), n)


def check_main(p: int, n: int, lens: Lens | str, perturb: Perturbation | None = None) -> Comparison:
    check_prime(p)
    lens = Lens(lens)
    lhs = evaluate(DsaModel(p), lens, n)
    return Comparison(p, n, lens.value, lhs, reference_series(p, n, lens, perturb))


def check_corollary(p: int, n: int, perturb: Perturbation | None = None, *, classical: bool = False) -> Comparison:
    """Lambda(tau_0) (x) underlying model against A_*.

    With ``classical`` (p = 2 only) the target is the F_2[xi_i], |xi_i| = 2^i - 1,
    presentation instead of the odd-primary one.
    """
    check_prime(p)
    model = evaluate(DsaModel(p), Lens.UNDERLYING, n)
    lhs = S.tensor(S.from_generators([GeneratorSpec.exterior(1, name="tau0")], n), model)
    if classical:
        if p != 2:
            raise ValueError("the classical presentation is only for p = 2")
        gens = R.milnor_p2_classical_generators(n)
    else:
        gens = R.milnor_generators(p, n)
    rhs = S.from_generators(_apply(gens, perturb), n)
    return Comparison(p, n, "underlying", lhs, rhs)


@dataclass(frozen=True)
class IdentityCheck:
    name: str
    passed: bool
    detail: str = ""


def e_degree_bruteforce(p: int, k: int) -> RODegree:
    """|e_k| summed over the summands lambda^{i-k}, 0 <= i < k."""
    trivial = sum(1 for i in range(k) if (i - k) % p == 0)
    return RODegree(2 * trivial, 2 * k)


def degree_identities(p: int, i_max: int = 6, k_max: int = 10_000, mult_i_max: int = 4) -> list[IdentityCheck]:
    from .bsone import suspension_degree

    out = []
    bad = [i for i in range(1, i_max + 1) if norm_transfer_gap(p, i) != theta_degree()]
    out.append(IdentityCheck("norm-transfer-gap", not bad, f"failing i: {bad}" if bad else ""))
    ok = mult_gap(p, 0) == theta_degree() and all(
        mult_gap(p, i) == RODegree(0, 0) for i in range(1, mult_i_max + 1)
    )
    out.append(IdentityCheck("mult-gap-dichotomy", ok))
    bad_k = next((k for k in range(k_max + 1) if e_degree(p, k) != e_degree_bruteforce(p, k)), None)
    out.append(IdentityCheck("e-degree-oracle", bad_k is None, f"first failing k: {bad_k}" if bad_k is not None else ""))
    bad = [i for i in range(1, i_max + 1) if suspension_degree(p, i) != t_degree(p, i)]
    out.append(IdentityCheck("suspension-is-t", not bad, f"failing i: {bad}" if bad else ""))
    return out
