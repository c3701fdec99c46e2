"""Integer-graded dimension series, truncated at a top degree.

A ``GradedDimSeries`` records dim_{F_p} in each degree from ``lower_bound`` up
to ``truncation``.  Every operation states the range on which its output is
exact; values above ``truncation`` are simply unknown.
"""

from __future__ import annotations

import enum
from collections import Counter
from collections.abc import Iterable, Iterator, Mapping, Sequence
from dataclasses import dataclass, field


class TruncationMismatch(ValueError):
    pass


@dataclass(frozen=True, eq=False)
class GradedDimSeries:
    """Dimensions ``lower_bound..truncation`` stored densely.

    ``lower_bound`` is a declared bound: nothing lives below it, though the
    count at ``lower_bound`` itself may be zero.  Equality is degreewise, so
    two series with different declared bounds but the same nonzero counts
    compare equal.
    """

    lower_bound: int
    truncation: int
    coeffs: tuple[int, ...] = field(repr=False)

    def __post_init__(self) -> None:
        expected = max(0, self.truncation - self.lower_bound + 1)
        if len(self.coeffs) != expected:
            raise ValueError(f"expected {expected} coefficients, got {len(self.coeffs)}")
        if any(c < 0 for c in self.coeffs):
            raise ValueError("dimension counts must be nonnegative")

    @classmethod
    def from_counts(
        cls, counts: Mapping[int, int], truncation: int, lower_bound: int | None = None
    ) -> GradedDimSeries:
        """Build from a degree -> count mapping; entries above ``truncation`` are dropped."""
        kept = {d: c for d, c in counts.items() if d <= truncation and c}
        if lower_bound is None:
            lower_bound = min(kept, default=0)
        if kept and min(kept) < lower_bound:
            raise ValueError(f"count at degree {min(kept)} lies below lower bound {lower_bound}")
        coeffs = tuple(kept.get(d, 0) for d in range(lower_bound, truncation + 1))
        return cls(lower_bound, truncation, coeffs)

    @classmethod
    def from_list(cls, values: Sequence[int], lower_bound: int = 0) -> GradedDimSeries:
        """Series whose coefficients in degrees ``lower_bound, lower_bound+1, ...`` are ``values``."""
        return cls(lower_bound, lower_bound + len(values) - 1, tuple(values))

    @property
    def counts(self) -> dict[int, int]:
        return {self.lower_bound + k: c for k, c in enumerate(self.coeffs) if c}

    def __getitem__(self, degree: int) -> int:
        if degree > self.truncation:
            raise IndexError(f"degree {degree} is above the truncation {self.truncation}")
        if degree < self.lower_bound:
            return 0
        return self.coeffs[degree - self.lower_bound]

    def values(self, start: int | None = None, stop: int | None = None) -> list[int]:
        """Coefficients for degrees ``start..stop`` inclusive (defaults: the stored range)."""
        start = self.lower_bound if start is None else start
        stop = self.truncation if stop is None else stop
        return [self[d] for d in range(start, stop + 1)]

    def degrees(self) -> range:
        return range(self.lower_bound, self.truncation + 1)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, GradedDimSeries):
            return NotImplemented
        return self.truncation == other.truncation and self.counts == other.counts

    def __hash__(self) -> int:
        return hash((self.truncation, tuple(sorted(self.counts.items()))))

    def __repr__(self) -> str:
        return f"GradedDimSeries(lower_bound={self.lower_bound}, truncation={self.truncation}, counts={self.counts})"

    def total(self) -> int:
        return sum(self.coeffs)

    def truncate(self, n: int) -> GradedDimSeries:
        if n > self.truncation:
            raise TruncationMismatch(f"cannot extend a series known to {self.truncation} up to {n}")
        keep = max(0, n - self.lower_bound + 1)
        return GradedDimSeries(self.lower_bound, n, self.coeffs[:keep])

    def shift(self, d: int) -> GradedDimSeries:
        return shift(self, d)

    def as_multiset(self) -> Counter[int]:
        return Counter(self.counts)


def unit(n: int) -> GradedDimSeries:
    """One class in degree 0."""
    return GradedDimSeries.from_counts({0: 1}, n, lower_bound=0)


def zero(n: int, lower_bound: int = 0) -> GradedDimSeries:
    return GradedDimSeries.from_counts({}, n, lower_bound=lower_bound)


def _check_same_truncation(a: GradedDimSeries, b: GradedDimSeries) -> None:
    if a.truncation != b.truncation:
        raise TruncationMismatch(f"truncations differ: {a.truncation} vs {b.truncation}")


def direct_sum(a: GradedDimSeries, b: GradedDimSeries) -> GradedDimSeries:
    _check_same_truncation(a, b)
    lo = min(a.lower_bound, b.lower_bound)
    coeffs = tuple(a[d] + b[d] for d in range(lo, a.truncation + 1))
    return GradedDimSeries(lo, a.truncation, coeffs)


def direct_sum_all(items: Iterable[GradedDimSeries], n: int) -> GradedDimSeries:
    items = list(items)
    # the declared bound is the summands' own, not clamped to 0
    result = zero(n, min((s.lower_bound for s in items), default=0))
    for s in items:
        result = direct_sum(result, s)
    return result


def shift(a: GradedDimSeries, d: int) -> GradedDimSeries:
    """Suspend by ``d``; the truncation is preserved, so classes pushed above it are lost."""
    counts = {deg + d: c for deg, c in a.counts.items()}
    return GradedDimSeries.from_counts(counts, a.truncation, lower_bound=a.lower_bound + d)


def tensor(a: GradedDimSeries, b: GradedDimSeries) -> GradedDimSeries:
    """Convolution ``c_n = sum_i a_i b_{n-i}``.

    Exact on ``[a.lower_bound + b.lower_bound, N + min(0, a.lower_bound, b.lower_bound)]``
    where ``N`` is the common truncation: a factor living in negative degrees
    pulls unknown coefficients of the other factor down into range, so the
    result's truncation drops accordingly.
    """
    _check_same_truncation(a, b)
    top = a.truncation + min(0, a.lower_bound, b.lower_bound)
    lo = a.lower_bound + b.lower_bound
    out = [0] * max(0, top - lo + 1)
    bvals = b.coeffs
    for i, ai in enumerate(a.coeffs):
        if not ai:
            continue
        base = i  # offset of a-degree from a.lower_bound
        for j, bj in enumerate(bvals):
            k = base + j
            if k >= len(out):
                break
            if bj:
                out[k] += ai * bj
    return GradedDimSeries(lo, top, tuple(out))


def tensor_all(items: Iterable[GradedDimSeries], n: int) -> GradedDimSeries:
    result = unit(n)
    for s in items:
        result = tensor(result, s)
    return result


def first_mismatch(a: GradedDimSeries, b: GradedDimSeries) -> int | None:
    """Lowest degree, up to the smaller truncation, where ``a`` and ``b`` differ."""
    top = min(a.truncation, b.truncation)
    lo = min(a.lower_bound, b.lower_bound)
    for d in range(lo, top + 1):
        if a[d] != b[d]:
            return d
    return None


class Kind(str, enum.Enum):
    POLYNOMIAL = "polynomial"
    EXTERIOR = "exterior"


@dataclass(frozen=True)
class GeneratorSpec:
    """A generator of a free graded-commutative algebra.

    ``exponent_bound`` is the largest allowed exponent, ``None`` meaning
    unbounded; a truncated polynomial generator x with x^p = 0 has bound p - 1.
    """

    degree: int
    kind: Kind = Kind.POLYNOMIAL
    exponent_bound: int | None = None
    name: str = ""

    def __post_init__(self) -> None:
        if self.degree <= 0:
            raise ValueError(f"generator degree must be positive, got {self.degree}")
        if self.kind is Kind.EXTERIOR:
            if self.exponent_bound not in (None, 1):
                raise ValueError("exterior generators have exponent bound 1")
            object.__setattr__(self, "exponent_bound", 1)
        elif self.exponent_bound is not None and self.exponent_bound < 0:
            raise ValueError("exponent bound must be nonnegative")

    @classmethod
    def polynomial(cls, degree: int, bound: int | None = None, name: str = "") -> GeneratorSpec:
        return cls(degree, Kind.POLYNOMIAL, bound, name)

    @classmethod
    def exterior(cls, degree: int, name: str = "") -> GeneratorSpec:
        return cls(degree, Kind.EXTERIOR, 1, name)

    def max_exponent(self, n: int) -> int:
        """Largest exponent whose degree stays within ``n``."""
        cap = n // self.degree
        return cap if self.exponent_bound is None else min(cap, self.exponent_bound)

    def with_degree(self, degree: int) -> GeneratorSpec:
        return GeneratorSpec(degree, self.kind, self.exponent_bound, self.name)


@dataclass(frozen=True)
class MonomialRelation:
    """Kills every monomial whose exponent of each listed generator meets its minimum."""

    factors: tuple[tuple[int, int], ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "factors", tuple((int(g), int(e)) for g, e in self.factors))
        if not self.factors:
            raise ValueError("a monomial relation needs at least one factor")
        if any(e < 1 for _, e in self.factors):
            raise ValueError("relation exponents must be >= 1")

    @classmethod
    def of(cls, *factors: tuple[int, int]) -> MonomialRelation:
        return cls(tuple(factors))

    def kills(self, exponents: Sequence[int]) -> bool:
        return all(exponents[g] >= e for g, e in self.factors)


def from_generators(gens: Sequence[GeneratorSpec], n: int) -> GradedDimSeries:
    """Series of the free graded-commutative algebra on ``gens``; exact on [0, n]."""
    c = [0] * (n + 1)
    if n >= 0:
        c[0] = 1
    for g in gens:
        d = g.degree
        if d > n:
            continue
        # multiply by 1/(1 - t^d)
        for k in range(d, n + 1):
            c[k] += c[k - d]
        if g.exponent_bound is not None:
            # then by (1 - t^{(b+1)d}), descending so old values are read
            step = (g.exponent_bound + 1) * d
            for k in range(n, step - 1, -1):
                c[k] -= c[k - step]
    return GradedDimSeries(0, n, tuple(c))


def enumerate_monomials(
    gens: Sequence[GeneratorSpec], rels: Sequence[MonomialRelation], n: int
) -> Iterator[tuple[int, tuple[int, ...]]]:
    """Yield ``(degree, exponents)`` for each monomial of degree <= n surviving ``rels``.

    Depth-first over generators in order.  Monomial ideals are closed upward,
    so a branch is cut once all generators of some relation are assigned and
    the relation fires.
    """
    ngens = len(gens)
    for r in rels:
        for g, _ in r.factors:
            if not 0 <= g < ngens:
                raise IndexError(f"relation refers to generator {g}, only {ngens} given")
    closing: list[list[MonomialRelation]] = [[] for _ in range(ngens)]
    for r in rels:
        closing[max(g for g, _ in r.factors)].append(r)

    exps = [0] * ngens

    def walk(pos: int, degree: int) -> Iterator[tuple[int, tuple[int, ...]]]:
        if pos == ngens:
            yield degree, tuple(exps)
            return
        g = gens[pos]
        for e in range(g.max_exponent(n - degree) + 1):
            exps[pos] = e
            if any(r.kills(exps) for r in closing[pos]):
                # larger exponents here stay in the ideal
                break
            yield from walk(pos + 1, degree + e * g.degree)
        exps[pos] = 0

    if n >= 0:
        yield from walk(0, 0)


def from_presentation(
    gens: Sequence[GeneratorSpec], rels: Sequence[MonomialRelation], n: int
) -> GradedDimSeries:
    """Dimension series of the free algebra on ``gens`` modulo monomial ``rels``; exact on [0, n]."""
    counts: Counter[int] = Counter()
    for degree, _ in enumerate_monomials(gens, rels, n):
        counts[degree] += 1
    return GradedDimSeries.from_counts(counts, n, lower_bound=0)
