"""CSS codes from 2- and 3-fold products of group-algebra two-term complexes.

Balanced products quotient the tensor product by the diagonal translation
action; a cell is labeled by the sum of its slot coordinates, so a degree-1
cell ("qubit") is a sector (which slot carries the edge) plus one group
element.  Hypergraph products keep the full tensor product and work over
non-abelian groups as well.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Sequence

import numpy as np

from . import _accel
from .gf2 import BitMatrix, in_rowspace, kernel_basis, rank
from .groups import FiniteGroup, GroupAlgebraElement, antipode, regular_representation


@dataclass(frozen=True)
class TwoTermComplex:
    """A length-two cochain complex F2[G] -> F2[G] with coboundary antipode(check)."""

    check: GroupAlgebraElement

    @property
    def coboundary(self) -> GroupAlgebraElement:
        return antipode(self.check)

    @property
    def group(self) -> FiniteGroup:
        return self.check.group


@dataclass
class CssCode:
    """A CSS code with product metadata retained for gate synthesis."""

    hx: BitMatrix
    hz: BitMatrix
    group: FiniteGroup | None = None
    elements: tuple[GroupAlgebraElement, ...] = ()
    product: str = ""
    sectors: int = 1

    def __post_init__(self) -> None:
        if self.hx.cols != self.hz.cols:
            raise ValueError("hx and hz must have the same number of columns")
        if not self.hx.matmul(self.hz.transpose()).is_zero():
            raise ValueError("hx and hz do not commute")

    @property
    def n(self) -> int:
        return self.hx.cols

    @property
    def k(self) -> int:
        return self.n - rank(self.hx) - rank(self.hz)

    def sector_of(self, qubit: int) -> int:
        return qubit // (self.n // self.sectors)

    def element_of(self, qubit: int) -> int:
        return qubit % (self.n // self.sectors)

    def params(self) -> tuple[int, int]:
        return (self.n, self.k)

    @property
    def product_kind(self) -> str:
        return f"{'square' if len(self.elements) == 2 else 'cube'} {self.product}"

    @property
    def inputs(self) -> tuple[TwoTermComplex, ...]:
        return tuple(TwoTermComplex(el) for el in self.elements)


def _mat(el: GroupAlgebraElement) -> BitMatrix:
    return regular_representation(el)


def _amat(el: GroupAlgebraElement) -> BitMatrix:
    return regular_representation(antipode(el))


def _zeros(n: int) -> BitMatrix:
    return BitMatrix.zeros(n, n)


def _hstack(mats: Sequence[BitMatrix]) -> BitMatrix:
    return BitMatrix.from_dense(np.hstack([m.to_dense() for m in mats]))


def _vstack(mats: Sequence[BitMatrix]) -> BitMatrix:
    return BitMatrix.from_dense(np.vstack([m.to_dense() for m in mats]))


def _kron(a: BitMatrix, b: BitMatrix) -> BitMatrix:
    return BitMatrix.from_dense(np.kron(a.to_dense(), b.to_dense()))


def build_product_code(
    elements: Sequence[GroupAlgebraElement | TwoTermComplex],
    product: str = "balanced",
) -> CssCode:
    """Square (2 factors) or cube (3 factors) product of group-algebra codes."""
    elements = [
        el.check if isinstance(el, TwoTermComplex) else el for el in elements
    ]
    if len(elements) not in (2, 3):
        raise ValueError("need 2 or 3 group-algebra elements")
    group = elements[0].group
    if any(el.group != group for el in elements):
        raise ValueError("all elements must share one group")
    if product == "balanced":
        if not group.is_abelian:
            raise ValueError("balanced products here require an abelian group")
        mats = [_mat(el) for el in elements]
        amats = [_amat(el) for el in elements]
        n = group.size
        if len(elements) == 2:
            hx = _hstack([mats[0], mats[1]])
            hz = _hstack([amats[1], amats[0]])
        else:
            hx = _hstack([mats[0], mats[1], mats[2]])
            z = _zeros(n)
            hz = _vstack(
                [
                    _hstack([amats[1], amats[0], z]),
                    _hstack([amats[2], z, amats[0]]),
                    _hstack([z, amats[2], amats[1]]),
                ]
            )
        return CssCode(hx, hz, group, tuple(elements), "balanced", len(elements))
    if product == "hypergraph":
        mats = [_mat(el) for el in elements]
        ident = BitMatrix.identity(group.size)
        if len(elements) == 2:
            m1, m2 = mats
            hx = _hstack([_kron(m1, ident), _kron(ident, m2.transpose())])
            hz = _hstack([_kron(ident, m2), _kron(m1.transpose(), ident)])
        else:
            m1, m2, m3 = mats
            def k3(a, b, c):
                return _kron(_kron(a, b), c)
            hx = _hstack([k3(m1, ident, ident), k3(ident, m2, ident), k3(ident, ident, m3)])
            zero = BitMatrix.zeros(group.size**3, group.size**3)
            hz = _vstack(
                [
                    _hstack([k3(ident, m2, ident), k3(m1, ident, ident), zero]),
                    _hstack([k3(ident, ident, m3), zero, k3(m1, ident, ident)]),
                    _hstack([zero, k3(ident, ident, m3), k3(ident, m2, ident)]),
                ]
            )
        return CssCode(hx, hz, group, tuple(elements), "hypergraph", len(elements))
    raise ValueError(f"unknown product {product!r}")


def cohomology_basis(code: CssCode) -> BitMatrix:
    """Representatives of logical X operators: ker(hz) modulo rowspace(hx)."""
    kern = kernel_basis(code.hz)
    n = code.n
    hx_rows = [code.hx.row(i) for i in range(code.hx.rows)]
    # echelon of hx rows, extended greedily by kernel vectors that add pivots
    basis: list[np.ndarray] = []
    pivots: list[int] = []
    for v in hx_rows:
        v = v.copy()
        for p, b in zip(pivots, basis):
            if v[p]:
                v ^= b
        nz = np.flatnonzero(v)
        if nz.size:
            pivots.append(int(nz[0]))
            basis.append(v)
    stab_count = len(basis)
    logicals: list[np.ndarray] = []
    for i in range(kern.rows):
        v = kern.row(i).copy()
        orig = v.copy()
        for p, b in zip(pivots, basis):
            if v[p]:
                v ^= b
        nz = np.flatnonzero(v)
        if nz.size:
            pivots.append(int(nz[0]))
            basis.append(v)
            logicals.append(orig)
    if len(logicals) != code.k:
        raise AssertionError("logical basis size does not match k")
    if not logicals:
        return BitMatrix.zeros(0, n)
    return BitMatrix.from_dense(np.array(logicals, dtype=np.uint8))


@dataclass(frozen=True)
class DistanceResult:
    distance: int | None
    status: str  # "exact", "above-wmax", or "budget-exceeded"
    wmax: int


def _columns_as_ints(m: BitMatrix) -> list[int]:
    dense = m.to_dense()
    out = []
    for c in range(m.cols):
        col = 0
        for r in np.flatnonzero(dense[:, c]):
            col |= 1 << int(r)
        out.append(col)
    return out


def _search_weight(
    checks: BitMatrix, other: BitMatrix, w: int
) -> np.ndarray | None:
    """A weight-w vector in ker(checks) outside rowspace(other), if any exists."""
    import itertools

    n = checks.cols
    cols = _columns_as_ints(checks)
    w1 = w // 2
    w2 = w - w1
    table: dict[int, list[tuple[int, ...]]] = {}
    for combo in itertools.combinations(range(n), w1):
        s = 0
        for c in combo:
            s ^= cols[c]
        table.setdefault(s, []).append(combo)
    for combo in itertools.combinations(range(n), w2):
        s = 0
        for c in combo:
            s ^= cols[c]
        for left in table.get(s, ()):
            if set(left) & set(combo):
                continue
            v = np.zeros(n, dtype=np.uint8)
            v[list(left)] = 1
            v[list(combo)] ^= 1
            if not in_rowspace(other, v):
                return v
    return None


def distance_exact_by_weight(
    code: CssCode, wmax: int, budget: float | None = 2e8
) -> DistanceResult:
    """Exact minimum logical-operator weight up to wmax, by syndrome collision.

    Splits each candidate weight and meets in the middle on the syndrome, on
    both CSS sides.  The cost estimate C(n, ceil(w/2)) is compared against the
    budget before each sweep; pass budget=None to force the search.
    """
    n = code.n
    for w in range(1, wmax + 1):
        cost = math.comb(n, (w + 1) // 2)
        if budget is not None and cost > budget:
            return DistanceResult(None, "budget-exceeded", w - 1)
        for checks, other in ((code.hz, code.hx), (code.hx, code.hz)):
            if _search_weight(checks, other, w) is not None:
                return DistanceResult(w, "exact", wmax)
    return DistanceResult(None, "above-wmax", wmax)


def distance_upper_randomized(code: CssCode, trials: int, seed: int = 0) -> int:
    """Randomized upper bound on the distance via permuted-kernel sweeps."""
    best = code.n + 1
    for checks, other in ((code.hz, code.hx), (code.hx, code.hz)):
        kern = kernel_basis(checks)
        if kern.rows == 0:
            continue
        dense = kern.to_dense()
        ech = other._echelon()
        best = _accel.rand_upper_trials(
            dense, code.n, ech[0], ech[1], ech[2], trials, seed, best
        )
    return best
