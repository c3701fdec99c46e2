"""The V/W monomial bases and the degree-preserving correspondence between them.

V = Lambda(tau_i : i >= 0) (x) F_p[b] and
W = F_p[d_(i)] (x) Lambda(sigma_j, tau_k : j >= 0, k >= 1) modulo
(d_(i)^p, d_(i-1) tau_i, d_(i)^{p-1} sigma_i, sigma_{i-1} tau_i),
with |sigma_i| = |tau_i| = 2p^i - 1, |b| = 2, |d_(i)| = 2p^i.

Both are indexed by quadruples (I, J, K, K'); ``MonomialIndex`` holds one.
"""

from __future__ import annotations

from collections import Counter
from collections.abc import Iterator
from dataclasses import dataclass, field
from itertools import zip_longest

from . import series as S
from .blocks import DsaModel
from .grading import check_prime
from .lenses import Lens, evaluate
from .reference import b_generator, milnor_generators
from .series import GeneratorSpec, GradedDimSeries, MonomialRelation


@dataclass(frozen=True)
class MonomialIndex:
    """Finitely supported sequences I = (a_i), J = (eps_i), K = (kappa_i), K' = (kappa'_i)."""

    I: tuple[int, ...] = ()
    J: tuple[int, ...] = ()
    K: tuple[int, ...] = ()
    Kp: tuple[int, ...] = ()

    def __post_init__(self) -> None:
        length = max(len(self.I), len(self.J), len(self.K), len(self.Kp))
        for name in ("I", "J", "K", "Kp"):
            seq = tuple(getattr(self, name))
            object.__setattr__(self, name, seq + (0,) * (length - len(seq)))
        for name in ("J", "K", "Kp"):
            if any(x not in (0, 1) for x in getattr(self, name)):
                raise ValueError(f"{name} entries must be 0 or 1")
        if any(a < 0 for a in self.I):
            raise ValueError("I entries must be nonnegative")
        if any(kp and not k for k, kp in zip(self.K, self.Kp)):
            raise ValueError("K' may only be 1 where K is 1")

    def __len__(self) -> int:
        return len(self.I)

    def positions(self) -> Iterator[tuple[int, int, int, int, int]]:
        for i, quad in enumerate(zip(self.I, self.J, self.K, self.Kp)):
            yield (i, *quad)

    def is_disjoint(self) -> bool:
        return all(not (k and (a or e)) for a, e, k in zip(self.I, self.J, self.K))

    def is_admissible(self, p: int) -> bool:
        return all(a <= p - 2 for a in self.I) and self.is_disjoint()

    def check(self, p: int) -> None:
        if any(a > p - 2 for a in self.I):
            raise ValueError(f"I entries must lie in [0, {p - 2}] for p = {p}")
        if not self.is_disjoint():
            raise ValueError("I and J must each have support disjoint from K")

    def to_dict(self) -> dict[str, list[int]]:
        return {"I": list(self.I), "J": list(self.J), "K": list(self.K), "Kp": list(self.Kp)}


def _m_cost(p: int, i: int, a: int, e: int, k: int, kp: int) -> int:
    return 2 * a * p**i + e * (2 * p**i - 1) + 2 * k * (p - 1) * p**i + kp * (2 * p**i - 1)


def _n_cost(p: int, i: int, a: int, e: int, k: int, kp: int) -> int:
    return 2 * a * p**i + e * (2 * p**i - 1) + 2 * (k - kp) * (p - 1) * p**i + kp * (2 * p ** (i + 1) - 1)


def degree_M(idx: MonomialIndex, p: int, *, strict: bool = True) -> int:
    """Degree of M_{I,J,K} = b^{sum a_i p^i} tau_J b^{sum kappa_i (p-1) p^i} tau_{K'}."""
    if strict:
        idx.check(p)
    return sum(_m_cost(p, *pos) for pos in idx.positions())


def degree_N(idx: MonomialIndex, p: int, *, strict: bool = True) -> int:
    """Degree of N_{I,J,K} = d_I sigma_J prod d_(i)^{(kappa_i - kappa'_i)(p-1)} tau_{K'[1]}."""
    if strict:
        idx.check(p)
    return sum(_n_cost(p, *pos) for pos in idx.positions())


def m_monomial(idx: MonomialIndex, p: int) -> tuple[int, tuple[int, ...]]:
    """``(exponent of b, sorted tau indices)`` of M_{I,J,K}."""
    idx.check(p)
    b = sum(a * p**i + k * (p - 1) * p**i for i, a, _, k, _ in idx.positions())
    taus = tuple(i for i, _, e, _, kp in idx.positions() if e or kp)
    return b, taus


def position_count(p: int, n: int) -> int:
    """Positions i with 2p^i - 1 <= n; higher positions only add degree."""
    i = 0
    while 2 * p**i - 1 <= n:
        i += 1
    return i


def _choices(p: int, enforce_disjoint: bool) -> list[tuple[int, int, int, int]]:
    out = []
    for k in (0, 1):
        for kp in ((0, 1) if k else (0,)):
            if k and enforce_disjoint:
                out.append((0, 0, k, kp))
                continue
            for a in range(p - 1):
                for e in (0, 1):
                    out.append((a, e, k, kp))
    return out


def enumerate_indices(
    p: int, n: int, side: str = "M", *, enforce_disjoint: bool = True
) -> Iterator[tuple[int, MonomialIndex]]:
    """Yield ``(degree, index)`` for every index whose M- (or N-) degree is <= n.

    One position past the support bound is scanned as well; anything placed
    there exceeds ``n`` on either side, which the scan confirms rather than
    assumes.
    """
    check_prime(p)
    if side not in ("M", "N"):
        raise ValueError("side must be 'M' or 'N'")
    cost = _m_cost if side == "M" else _n_cost
    length = position_count(p, n) + 1
    choices = _choices(p, enforce_disjoint)
    picked: list[tuple[int, int, int, int]] = []

    def walk(i: int, degree: int) -> Iterator[tuple[int, MonomialIndex]]:
        if i == length:
            a, e, k, kp = zip(*picked) if picked else ((), (), (), ())
            yield degree, MonomialIndex(a, e, k, kp)
            return
        for ch in choices:
            d = degree + cost(p, i, *ch)
            if d > n:
                continue
            picked.append(ch)
            yield from walk(i + 1, d)
            picked.pop()

    if n >= 0:
        yield from walk(0, 0)


def _series_of(degrees: Counter[int], n: int) -> GradedDimSeries:
    return GradedDimSeries.from_counts(degrees, n, lower_bound=0)


def v_generators(p: int, n: int) -> list[GeneratorSpec]:
    taus = [g for g in milnor_generators(p, n) if g.name.startswith("tau")]
    return taus + [b_generator()]


def v_series(p: int, n: int) -> GradedDimSeries:
    """V as a free algebra: Lambda(tau_i : i >= 0) (x) F_p[b]."""
    return S.from_generators(v_generators(p, n), n)


def enumerate_V(p: int, n: int, *, enforce_disjoint: bool = True) -> GradedDimSeries:
    counts = Counter(d for d, _ in enumerate_indices(p, n, "M", enforce_disjoint=enforce_disjoint))
    return _series_of(counts, n)


def enumerate_W_basis(p: int, n: int) -> GradedDimSeries:
    return _series_of(Counter(d for d, _ in enumerate_indices(p, n, "N")), n)


def factor_presentation(
    p: int, i: int, *, with_xi: bool = True
) -> tuple[list[GeneratorSpec], list[MonomialRelation]]:
    """F_p[d_(i-1), xi_i] (x) Lambda(sigma_{i-1}, tau_i) / (d^p, d tau, d^{p-1} sigma, sigma tau).

    Generator order is d, sigma, tau, then xi if requested; d^p = 0 is
    encoded as an exponent bound of p - 1.
    """
    check_prime(p)
    if i < 1:
        raise ValueError(f"i must be >= 1, got {i}")
    q = p ** (i - 1)
    gens = [
        GeneratorSpec.polynomial(2 * q, bound=p - 1, name=f"d{i - 1}"),
        GeneratorSpec.exterior(2 * q - 1, name=f"sigma{i - 1}"),
        GeneratorSpec.exterior(2 * p * q - 1, name=f"tau{i}"),
    ]
    d, sigma, tau = 0, 1, 2
    rels = [
        MonomialRelation.of((d, 1), (tau, 1)),
        MonomialRelation.of((d, p - 1), (sigma, 1)),
        MonomialRelation.of((sigma, 1), (tau, 1)),
    ]
    if with_xi:
        gens.append(GeneratorSpec.polynomial(2 * p * q - 2, name=f"xi{i}"))
    return gens, rels


def w_presentation(p: int, n: int) -> tuple[list[GeneratorSpec], list[MonomialRelation]]:
    """All per-factor W presentations whose generators can appear below degree n.

    Generators come in blocks (d_(j), sigma_j, tau_{j+1}) for j = 0, 1, ...
    """
    gens: list[GeneratorSpec] = []
    rels: list[MonomialRelation] = []
    for j in range(position_count(p, n) + 1):
        g, r = factor_presentation(p, j + 1, with_xi=False)
        off = len(gens)
        gens.extend(g)
        rels.extend(MonomialRelation(tuple((x + off, e) for x, e in rel.factors)) for rel in r)
    return gens, rels


def enumerate_W_presentation(p: int, n: int) -> GradedDimSeries:
    gens, rels = w_presentation(p, n)
    return S.from_presentation(gens, rels, n)


def w_exponents(idx: MonomialIndex, p: int, length: int) -> tuple[int, ...]:
    """Exponent vector of N_{I,J,K} in the generator order of ``w_presentation``."""
    out = []
    for a, e, k, kp in zip_longest(idx.I, idx.J, idx.K, idx.Kp, fillvalue=0):
        out.extend((a + (k - kp) * (p - 1), e, kp))
    if len(out) > 3 * length:
        raise ValueError(f"index has support beyond {length} positions")
    return tuple(out) + (0,) * (3 * length - len(out))


@dataclass(frozen=True)
class SubCheck:
    name: str
    passed: bool
    first_offending: object = None
    detail: str = ""


@dataclass(frozen=True)
class BijectionReport:
    p: int
    n: int
    checks: tuple[SubCheck, ...]
    index_count: int = field(default=0)

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks)

    def __getitem__(self, name: str) -> SubCheck:
        for c in self.checks:
            if c.name == name:
                return c
        raise KeyError(name)


def _series_check(name: str, got: GradedDimSeries, want: GradedDimSeries) -> SubCheck:
    bad = S.first_mismatch(got, want)
    if bad is None:
        return SubCheck(name, True)
    return SubCheck(name, False, bad, f"degree {bad}: enumerated {got[bad]}, expected {want[bad]}")


def check_bijection(p: int, n: int, *, enforce_disjoint: bool = True) -> BijectionReport:
    """Certify V and W have equal graded dimensions, and that the index map realizes it.

    1. degree_M = degree_N on every enumerated index;
    2. the M_{I,J,K} count equals the free-algebra series of V;
    3. the N_{I,J,K} count equals the series of the W presentation;
    4. the N_{I,J,K} hit each surviving W monomial exactly once.
    """
    check_prime(p)
    m_side = list(enumerate_indices(p, n, "M", enforce_disjoint=enforce_disjoint))
    n_side = list(enumerate_indices(p, n, "N", enforce_disjoint=enforce_disjoint))

    bad_idx = None
    for _, idx in m_side + n_side:
        if degree_M(idx, p, strict=False) != degree_N(idx, p, strict=False):
            bad_idx = idx
            break
    checks = [
        SubCheck("degree-preservation", bad_idx is None, bad_idx and bad_idx.to_dict()),
        _series_check("V-basis", _series_of(Counter(d for d, _ in m_side), n), v_series(p, n)),
    ]

    gens, rels = w_presentation(p, n)
    w_monos = sorted(S.enumerate_monomials(gens, rels, n))
    w_series = _series_of(Counter(d for d, _ in w_monos), n)
    checks.append(_series_check("W-basis", _series_of(Counter(d for d, _ in n_side), n), w_series))

    length = len(gens) // 3
    images = sorted((d, w_exponents(idx, p, length)) for d, idx in n_side)
    if images == w_monos:
        checks.append(SubCheck("W-exactly-once", True))
    else:
        hit, have = Counter(images), Counter(w_monos)
        first = min((hit - have) + (have - hit))
        how = "hit too often or outside W" if hit[first] > have[first] else "never hit"
        checks.append(SubCheck("W-exactly-once", False, first, f"(degree, exponents) {first}: {how}"))
    return BijectionReport(p, n, tuple(checks), index_count=len(m_side))


def _render(gens: list[GeneratorSpec], exps: tuple[int, ...]) -> str:
    parts = [g.name if e == 1 else f"{g.name}^{e}" for g, e in zip(gens, exps) if e]
    return " ".join(parts) or "1"


def monomial_listing(p: int, n: int, limit: int = 100) -> list[dict]:
    """Human-readable (index, M, N, degree) rows, at most ``limit`` of them."""
    gens, _ = w_presentation(p, n)
    length = len(gens) // 3
    rows = []
    for d, idx in sorted(enumerate_indices(p, n, "M"), key=lambda t: (t[0], t[1].to_dict()["I"])):
        if len(rows) >= limit:
            break
        b, taus = m_monomial(idx, p)
        m = " ".join(([f"b^{b}"] if b > 1 else ["b"] if b else []) + [f"tau{t}" for t in taus]) or "1"
        rows.append(
            {"degree": d, "index": idx.to_dict(), "M": m, "N": _render(gens, w_exponents(idx, p, length))}
        )
    return rows


def xi_series(p: int, n: int) -> GradedDimSeries:
    return S.from_generators([g for g in milnor_generators(p, n) if g.name.startswith("xi")], n)


def three_way_closure(p: int, n: int) -> dict[str, GradedDimSeries]:
    """Phi-lens series of the model computed three independent ways, plus the target."""
    factors = []
    i = 1
    while 2 * p ** (i - 1) - 1 <= n:
        gens, rels = factor_presentation(p, i)
        factors.append(S.from_presentation(gens, rels, n))
        i += 1
    return {
        "per-factor-presentation": S.tensor_all(factors, n),
        "model-phi": evaluate(DsaModel(p), Lens.PHI, n),
        "n-basis": S.tensor(enumerate_W_basis(p, n), xi_series(p, n)),
        "milnor-with-b": S.tensor(S.from_generators(milnor_generators(p, n), n), S.from_generators([b_generator()], n)),
    }
