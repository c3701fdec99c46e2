"""Symbolic cell-complex expressions for the C_p-spectra in the model.

Expressions are immutable trees.  ``FreeNorm`` and ``DsaModel`` stand for a
countable sum and a countable tensor product; both are cut to finite
expressions only when a lens and a top degree are known.
"""

from __future__ import annotations

import json
from collections import Counter
from dataclasses import dataclass
from typing import Any, ClassVar

from .grading import RODegree, check_prime, norm_degree, t_degree


class SpectrumExpr:
    """Base class of the expression grammar."""

    tag: ClassVar[str]

    def to_json(self) -> dict[str, Any]:
        raise NotImplementedError


@dataclass(frozen=True)
class Unit(SpectrumExpr):
    tag: ClassVar[str] = "unit"

    def to_json(self) -> dict[str, Any]:
        return {"type": self.tag}


@dataclass(frozen=True)
class _Atom(SpectrumExpr):
    degree: RODegree

    @property
    def kind(self) -> str:
        return self.tag

    def to_json(self) -> dict[str, Any]:
        return {"type": self.tag, "degree": list(self.degree.as_tuple())}


@dataclass(frozen=True)
class Sphere(_Atom):
    tag: ClassVar[str] = "sphere"


@dataclass(frozen=True)
class CTheta(_Atom):
    """Sigma^degree of the cofiber of theta."""

    tag: ClassVar[str] = "ctheta"


@dataclass(frozen=True)
class Moore(_Atom):
    """Sigma^degree of the mod-p Moore spectrum (trivial action)."""

    tag: ClassVar[str] = "moore"


@dataclass(frozen=True)
class Sum(SpectrumExpr):
    terms: tuple[SpectrumExpr, ...]
    tag: ClassVar[str] = "sum"

    def __post_init__(self) -> None:
        object.__setattr__(self, "terms", tuple(self.terms))

    def to_json(self) -> dict[str, Any]:
        return {"type": self.tag, "terms": [t.to_json() for t in self.terms]}


@dataclass(frozen=True)
class Tensor(SpectrumExpr):
    factors: tuple[SpectrumExpr, ...]
    tag: ClassVar[str] = "tensor"

    def __post_init__(self) -> None:
        object.__setattr__(self, "factors", tuple(self.factors))

    def to_json(self) -> dict[str, Any]:
        return {"type": self.tag, "factors": [f.to_json() for f in self.factors]}


@dataclass(frozen=True)
class _Indexed(SpectrumExpr):
    p: int
    i: int

    def __post_init__(self) -> None:
        check_prime(self.p)
        if self.i < 1:
            raise ValueError(f"i must be >= 1, got {self.i}")

    def to_json(self) -> dict[str, Any]:
        return {"type": self.tag, "p": self.p, "i": self.i}


@dataclass(frozen=True)
class FreeNorm(_Indexed):
    """S^0[N t_i]: spheres in degrees k |N t_i| for all k >= 0."""

    tag: ClassVar[str] = "free_norm"

    def norm_degree(self) -> RODegree:
        return norm_degree(self.p, self.i)


@dataclass(frozen=True)
class TTheta(_Indexed):
    tag: ClassVar[str] = "t_theta"

    def expand(self) -> Sum:
        return t_theta(self.p, self.i)


@dataclass(frozen=True)
class DsaFactor(_Indexed):
    """X_i = S^0 + S^0[N t_i] (x) T_theta(t_i)."""

    tag: ClassVar[str] = "dsa_factor"

    def expand(self) -> Sum:
        return Sum((Unit(), Tensor((FreeNorm(self.p, self.i), TTheta(self.p, self.i)))))


@dataclass(frozen=True)
class DsaModel(SpectrumExpr):
    """The infinite tensor product of the factors X_i, i >= 1."""

    p: int
    tag: ClassVar[str] = "dsa_model"

    def __post_init__(self) -> None:
        check_prime(self.p)

    def to_json(self) -> dict[str, Any]:
        return {"type": self.tag, "p": self.p}


_ATOMS = {cls.tag: cls for cls in (Sphere, CTheta, Moore)}
_INDEXED = {cls.tag: cls for cls in (FreeNorm, TTheta, DsaFactor)}


def from_json(doc: dict[str, Any]) -> SpectrumExpr:
    """Inverse of ``SpectrumExpr.to_json``."""
    try:
        kind = doc["type"]
        if kind == Unit.tag:
            return Unit()
        if kind in _ATOMS:
            fixed, underlying = doc["degree"]
            return _ATOMS[kind](RODegree(int(fixed), int(underlying)))
        if kind == Sum.tag:
            return Sum(tuple(from_json(t) for t in doc["terms"]))
        if kind == Tensor.tag:
            return Tensor(tuple(from_json(f) for f in doc["factors"]))
        if kind in _INDEXED:
            return _INDEXED[kind](int(doc["p"]), int(doc["i"]))
        if kind == DsaModel.tag:
            return DsaModel(int(doc["p"]))
    except (KeyError, TypeError) as exc:
        raise ValueError(f"malformed expression node {doc!r}") from exc
    raise ValueError(f"unknown expression type {kind!r}")


def dumps(e: SpectrumExpr) -> str:
    return json.dumps(e.to_json(), sort_keys=True)


def loads(text: str) -> SpectrumExpr:
    return from_json(json.loads(text))


def t_theta(p: int, i: int) -> Sum:
    """T_theta(t_i): CTheta on j |t_i| for j = 1..p-1, plus Moore on |N t_i|."""
    d = t_degree(p, i)
    terms: list[SpectrumExpr] = [CTheta(j * d) for j in range(1, p)]
    terms.append(Moore(norm_degree(p, i)))
    return Sum(tuple(terms))


def free_norm(p: int, i: int, lens, n: int) -> SpectrumExpr:
    """The spheres of S^0[N t_i] whose lens degree is at most ``n``."""
    from .lenses import DivergenceError, Lens

    lens = Lens(lens)
    step = lens.degree(norm_degree(p, i))
    if step <= 0:
        raise DivergenceError(f"norm class has non-positive {lens} degree {step}")
    nd = norm_degree(p, i)
    if n < step:
        return Unit()
    return Sum(tuple(Sphere(k * nd) for k in range(n // step + 1)))


def first_cell_degree(p: int, i: int, lens) -> int:
    """Lowest positive lens degree among the cells of X_i."""
    from .lenses import Lens

    if Lens(lens) is Lens.UNDERLYING:
        return 2 * p**i - 2
    # bottom cell of CTheta on |t_i|: fixed dimension 2p^{i-1}, minus one
    return 2 * p ** (i - 1) - 1


def factor_count(p: int, lens, n: int) -> int:
    """Number of factors X_1..X_m that can contribute below degree ``n``."""
    check_prime(p)
    i = 1
    while first_cell_degree(p, i, lens) <= n:
        i += 1
    return i - 1


def dsa_model(p: int, lens, n: int) -> SpectrumExpr:
    """Finite tensor of the factors that matter up to lens degree ``n``."""
    m = factor_count(p, lens, n)
    if m == 0:
        return Unit()
    return Tensor(tuple(DsaFactor(p, i) for i in range(1, m + 1)))


def cells(e: SpectrumExpr, lens, n: int) -> Counter[int]:
    """Multiset of lens-degree cells of ``e`` in degrees <= ``n``."""
    from .lenses import evaluate

    return evaluate(e, lens, n).as_multiset()
