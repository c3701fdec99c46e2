"""Classical reference series, built from generator lists only.

Nothing here touches the expression/lens pipeline, so these series serve as
independent targets for it.
"""

from __future__ import annotations

from collections import Counter
from collections.abc import Sequence

from .grading import check_prime
from .series import GeneratorSpec, GradedDimSeries, from_generators


def _xi(p: int, i: int) -> GeneratorSpec:
    return GeneratorSpec.polynomial(2 * p**i - 2, name=f"xi{i}")


def _tau(p: int, i: int) -> GeneratorSpec:
    return GeneratorSpec.exterior(2 * p**i - 1, name=f"tau{i}")


def _indices_up_to(p: int, first: int, degree_of, n: int) -> range:
    i = first
    while degree_of(p, i) <= n:
        i += 1
    return range(first, i)


def milnor_generators(p: int, n: int) -> list[GeneratorSpec]:
    """xi_i (i >= 1) and tau_i (i >= 0) in degrees <= n + 1.

    One degree of headroom is kept so a generator nudged down by one still
    shows up when perturbing.
    """
    check_prime(p)
    xis = [_xi(p, i) for i in _indices_up_to(p, 1, lambda p, i: 2 * p**i - 2, n + 1)]
    taus = [_tau(p, i) for i in _indices_up_to(p, 0, lambda p, i: 2 * p**i - 1, n + 1)]
    return xis + taus


def hz_modp_generators(p: int, n: int) -> list[GeneratorSpec]:
    """As ``milnor_generators`` but without tau_0."""
    return [g for g in milnor_generators(p, n) if g.name != "tau0"]


def milnor_p2_classical_generators(n: int) -> list[GeneratorSpec]:
    """The p = 2 presentation F_2[xi_i], |xi_i| = 2^i - 1."""
    idx = _indices_up_to(2, 1, lambda p, i: 2**i - 1, n + 1)
    return [GeneratorSpec.polynomial(2**i - 1, name=f"xi{i}") for i in idx]


def b_generator() -> GeneratorSpec:
    return GeneratorSpec.polynomial(2, name="b")


def milnor_series(p: int, n: int) -> GradedDimSeries:
    """F_p[xi_i] (x) Lambda(tau_i) with |xi_i| = 2p^i - 2, |tau_i| = 2p^i - 1."""
    return from_generators(milnor_generators(p, n), n)


def milnor_series_p2_classical(n: int) -> GradedDimSeries:
    return from_generators(milnor_p2_classical_generators(n), n)


def hz_modp_series(p: int, n: int) -> GradedDimSeries:
    return from_generators(hz_modp_generators(p, n), n)


def b_polynomial(n: int) -> GradedDimSeries:
    return from_generators([b_generator()], n)


def milnor_with_b(p: int, n: int) -> GradedDimSeries:
    """A_* (x) F_p[b], the phi-lens target; built as one generator list."""
    return from_generators(milnor_generators(p, n) + [b_generator()], n)


def perturb(gens: Sequence[GeneratorSpec], name: str, delta: int) -> list[GeneratorSpec]:
    """Copy of ``gens`` with the generator called ``name`` moved by ``delta`` degrees."""
    out = []
    found = False
    for g in gens:
        if g.name == name:
            found = True
            g = g.with_degree(g.degree + delta)
        out.append(g)
    if not found:
        raise KeyError(f"no generator named {name!r}; have {[g.name for g in gens]}")
    return out


def classical_factor_cells(p: int, i: int, n: int) -> list[int]:
    """Cells of cofib(Sigma^{|t_i|} S^0[t_i] --p t_i--> S^0[t_i]) up to degree n."""
    step = 2 * p**i - 2
    cells = [0]
    j = 1
    while j * step <= n:
        cells.append(j * step)
        if j * step + 1 <= n:
            cells.append(j * step + 1)
        j += 1
    return cells


def classical_zz_cells(p: int, n: int) -> Counter[int]:
    """Cell multiset of the p-local decomposition of Z (x) Z, cut at degree n."""
    check_prime(p)
    total: Counter[int] = Counter({0: 1})
    i = 1
    while 2 * p**i - 2 <= n:
        nxt: Counter[int] = Counter()
        for a, ca in total.items():
            for b in classical_factor_cells(p, i, n - a):
                nxt[a + b] += ca
        total = nxt
        i += 1
    return total
