"""Finite groups, group-algebra check elements, and pre-orientations.

Elements of a group of order N are canonical indices 0..N-1 with the identity
at index 0.  Abelian products C_{n1} x ... x C_{nr} encode exponent vectors in
mixed radix; arbitrary groups are given by explicit Cayley tables.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterator, Optional, Sequence

import numpy as np

from .gf2 import BitMatrix


class FiniteGroup:
    """A finite group on element indices 0..size-1 with identity 0."""

    def __init__(
        self,
        orders: Optional[Sequence[int]] = None,
        table: Optional[Sequence[Sequence[int]]] = None,
    ):
        if (orders is None) == (table is None):
            raise ValueError("provide exactly one of orders= or table=")
        if orders is not None:
            orders = tuple(int(n) for n in orders)
            if not orders or any(n < 1 for n in orders):
                raise ValueError("cyclic factor orders must be positive")
            self.kind = "abelian-product"
            self.orders: tuple[int, ...] = orders
            self.size = math.prod(orders)
            self.table: Optional[np.ndarray] = None
        else:
            arr = np.asarray(table, dtype=np.int64)
            if arr.ndim != 2 or arr.shape[0] != arr.shape[1]:
                raise ValueError("Cayley table must be square")
            self.kind = "cayley-table"
            self.orders = ()
            self.size = arr.shape[0]
            self.table = arr
            self._validate_table()

    def _validate_table(self) -> None:
        t = self.table
        n = self.size
        if t.min() < 0 or t.max() >= n:
            raise ValueError("Cayley table entries out of range")
        if not (np.array_equal(t[0], np.arange(n)) and np.array_equal(t[:, 0], np.arange(n))):
            raise ValueError("index 0 must be the identity")
        for i in range(n):
            if len(set(t[i].tolist())) != n or len(set(t[:, i].tolist())) != n:
                raise ValueError("Cayley table is not a Latin square")
        if n <= 64:
            triples = itertools.product(range(n), repeat=3)
        else:
            rng = np.random.default_rng(0)
            triples = (tuple(rng.integers(0, n, 3)) for _ in range(20000))
        for a, b, c in triples:
            if t[t[a, b], c] != t[a, t[b, c]]:
                raise ValueError("Cayley table is not associative")

    # -- element arithmetic ---------------------------------------------------

    def exponents(self, g: int) -> tuple[int, ...]:
        if self.kind != "abelian-product":
            raise ValueError("exponent vectors only exist for abelian products")
        out = []
        for n in reversed(self.orders):
            out.append(g % n)
            g //= n
        return tuple(reversed(out))

    def from_exponents(self, exps: Sequence[int]) -> int:
        if self.kind != "abelian-product":
            raise ValueError("exponent vectors only exist for abelian products")
        if len(exps) != len(self.orders):
            raise ValueError("exponent vector length mismatch")
        g = 0
        for e, n in zip(exps, self.orders):
            g = g * n + (int(e) % n)
        return g

    def mul(self, a: int, b: int) -> int:
        if self.kind == "abelian-product":
            ea, eb = self.exponents(a), self.exponents(b)
            return self.from_exponents([x + y for x, y in zip(ea, eb)])
        return int(self.table[a, b])

    def inv(self, a: int) -> int:
        if self.kind == "abelian-product":
            return self.from_exponents([-e for e in self.exponents(a)])
        return int(np.nonzero(self.table[a] == 0)[0][0])

    def identity(self) -> int:
        return 0

    def elements(self) -> range:
        return range(self.size)

    @cached_property
    def mul_table(self) -> np.ndarray:
        if self.kind == "cayley-table":
            return self.table
        n = self.size
        t = np.empty((n, n), dtype=np.int64)
        for a in range(n):
            for b in range(n):
                t[a, b] = self.mul(a, b)
        return t

    @cached_property
    def inv_table(self) -> np.ndarray:
        return np.array([self.inv(a) for a in self.elements()], dtype=np.int64)

    @cached_property
    def is_abelian(self) -> bool:
        if self.kind == "abelian-product":
            return True
        t = self.mul_table
        return bool(np.array_equal(t, t.T))

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, FiniteGroup):
            return NotImplemented
        if self.kind != other.kind or self.size != other.size:
            return False
        if self.kind == "abelian-product":
            return self.orders == other.orders
        return bool(np.array_equal(self.table, other.table))

    def __hash__(self) -> int:
        if self.kind == "abelian-product":
            return hash(("abelian", self.orders))
        return hash(("cayley", self.table.tobytes()))

    def __repr__(self) -> str:
        if self.kind == "abelian-product":
            return " x ".join(f"C_{n}" for n in self.orders)
        return f"FiniteGroup(order={self.size})"


def element_op(group: FiniteGroup, g: int, h: int = 0, mode: str = "mul") -> int:
    """Group multiplication or inversion on element indices."""
    if not (0 <= g < group.size) or not (0 <= h < group.size):
        raise ValueError("element index out of range for this group")
    if mode == "mul":
        return group.mul(g, h)
    if mode == "inv":
        return group.inv(g)
    raise ValueError("mode must be 'mul' or 'inv'")


@dataclass(frozen=True)
class GroupAlgebraElement:
    """A check element: a set of distinct group elements, an F2 vector over G."""

    group: FiniteGroup
    support: tuple[int, ...]

    def __post_init__(self):
        supp = tuple(sorted(set(int(s) for s in self.support)))
        if not supp:
            raise ValueError("support must be nonempty")
        if supp[0] < 0 or supp[-1] >= self.group.size:
            raise ValueError("support element out of range")
        object.__setattr__(self, "support", supp)

    @property
    def weight(self) -> int:
        return len(self.support)

    def translate(self, g: int, side: str = "left") -> "GroupAlgebraElement":
        """Support multiplied elementwise by a single group element."""
        if side == "left":
            supp = [self.group.mul(g, s) for s in self.support]
        else:
            supp = [self.group.mul(s, g) for s in self.support]
        return GroupAlgebraElement(self.group, tuple(supp))

    def multiply(self, other: "GroupAlgebraElement") -> Optional["GroupAlgebraElement"]:
        """Group-algebra product over F2; None encodes the zero element."""
        if self.group != other.group:
            raise ValueError("elements belong to different groups")
        counts: dict[int, int] = {}
        for a in self.support:
            for b in other.support:
                p = self.group.mul(a, b)
                counts[p] = counts.get(p, 0) ^ 1
        supp = tuple(g for g, c in counts.items() if c)
        if not supp:
            return None
        return GroupAlgebraElement(self.group, supp)

    def to_vector(self) -> np.ndarray:
        v = np.zeros(self.group.size, dtype=np.uint8)
        v[list(self.support)] = 1
        return v


def regular_representation(alpha: GroupAlgebraElement) -> BitMatrix:
    """Left regular representation: column h has ones at rows {g*h, g in supp}."""
    g = alpha.group
    n = g.size
    dense = np.zeros((n, n), dtype=np.uint8)
    for h in range(n):
        for s in alpha.support:
            dense[g.mul(s, h), h] ^= 1
    return BitMatrix.from_dense(dense)


def antipode(alpha: GroupAlgebraElement) -> GroupAlgebraElement:
    """Elementwise inverse of the support; transposes the regular representation."""
    g = alpha.group
    return GroupAlgebraElement(g, tuple(g.inv(s) for s in alpha.support))


def coprime_collapse(
    group: FiniteGroup,
) -> Optional[tuple[FiniteGroup, np.ndarray]]:
    """Collapse a coprime abelian product to the cyclic group of the same order.

    Returns (C_N, iso) with iso[g] the image index, or None when factor orders
    are not pairwise coprime.
    """
    if group.kind != "abelian-product":
        raise ValueError("coprime collapse applies to abelian products only")
    orders = group.orders
    for a, b in itertools.combinations(orders, 2):
        if math.gcd(a, b) != 1:
            return None
    n = group.size
    cyclic = FiniteGroup(orders=[n])
    iso = np.empty(n, dtype=np.int64)
    for g in range(n):
        exps = group.exponents(g)
        iso[g] = sum(e * (n // o) for e, o in zip(exps, orders)) % n
    return cyclic, iso


def enumerate_check_elements(
    group: FiniteGroup, weight: int, fix_identity: bool = True
) -> Iterator[GroupAlgebraElement]:
    """All support sets of the given weight in lexicographic order."""
    if not (1 <= weight <= group.size):
        raise ValueError("weight must be between 1 and |G|")
    if fix_identity:
        for rest in itertools.combinations(range(1, group.size), weight - 1):
            yield GroupAlgebraElement(group, (0,) + rest)
    else:
        for supp in itertools.combinations(range(group.size), weight):
            yield GroupAlgebraElement(group, supp)


@dataclass(frozen=True)
class PreOrientation:
    """Disjoint partition of a check element's support into in/out/free sets."""

    element: GroupAlgebraElement
    in_set: frozenset[int]
    out_set: frozenset[int]
    free_set: frozenset[int] = field(default_factory=frozenset)

    def __post_init__(self):
        object.__setattr__(self, "in_set", frozenset(self.in_set))
        object.__setattr__(self, "out_set", frozenset(self.out_set))
        object.__setattr__(self, "free_set", frozenset(self.free_set))
        supp = set(self.element.support)
        parts = [self.in_set, self.out_set, self.free_set]
        if sum(len(p) for p in parts) != len(supp) or set().union(*parts) != supp:
            raise ValueError("in/out/free must partition the support")

    @property
    def signature(self) -> tuple[int, int, int]:
        return (len(self.in_set), len(self.out_set), len(self.free_set))

    def is_nontrivial(self) -> bool:
        return bool(self.in_set) and bool(self.out_set)


def enumerate_labelings(
    element: GroupAlgebraElement, nontrivial: bool = True
) -> Iterator[PreOrientation]:
    """All in/out/free partitions of the support, deterministic order."""
    supp = element.support
    for assign in itertools.product((0, 1, 2), repeat=len(supp)):
        in_set = frozenset(s for s, a in zip(supp, assign) if a == 0)
        out_set = frozenset(s for s, a in zip(supp, assign) if a == 1)
        if nontrivial and (not in_set or not out_set):
            continue
        free_set = frozenset(s for s, a in zip(supp, assign) if a == 2)
        yield PreOrientation(element, in_set, out_set, free_set)


def _partitions(k: int) -> Iterator[tuple[int, ...]]:
    def rec(k: int, mx: int) -> Iterator[tuple[int, ...]]:
        if k == 0:
            yield ()
            return
        for i in range(min(k, mx), 0, -1):
            for rest in rec(k - i, i):
                yield (i,) + rest

    yield from rec(k, k)


def abelian_groups(min_order: int = 2, max_order: int = 16) -> list[FiniteGroup]:
    """One representative per isomorphism class of abelian groups in the range.

    Classes are products of cyclic prime-power factors, one partition choice
    per prime in the order's factorization.
    """
    out: list[FiniteGroup] = []
    for n in range(max(min_order, 1), max_order + 1):
        factors: dict[int, int] = {}
        m, p = n, 2
        while p * p <= m:
            while m % p == 0:
                factors[p] = factors.get(p, 0) + 1
                m //= p
            p += 1
        if m > 1:
            factors[m] = factors.get(m, 0) + 1
        per_prime = [
            [[p**i for i in part] for part in _partitions(e)]
            for p, e in sorted(factors.items())
        ]
        for combo in itertools.product(*per_prime):
            orders = sorted((o for group in combo for o in group), reverse=True)
            out.append(FiniteGroup(orders=orders))
    return out


def element_order(group: FiniteGroup, g: int) -> int:
    order, cur = 1, g
    while cur != 0:
        cur = group.mul(cur, g)
        order += 1
    return order


def automorphisms(group: FiniteGroup) -> list[tuple[int, ...]]:
    """All automorphisms of an abelian product, as element-index permutations.

    A map is determined by the images of the cyclic generators; sending each
    generator to any element whose order divides the generator's order always
    extends to an endomorphism, and we keep the bijective ones.
    """
    if group.kind != "abelian-product":
        raise ValueError("automorphism enumeration needs an abelian product group")
    orders = group.orders
    r = len(orders)
    gens = [group.from_exponents([1 if i == j else 0 for j in range(r)]) for i in range(r)]
    elt_orders = [element_order(group, g) for g in group.elements()]
    candidates = [
        [g for g in group.elements() if orders[i] % elt_orders[g] == 0]
        for i in range(r)
    ]
    # image of an arbitrary element from generator images, via exponent vectors
    mt = group.mul_table
    exps_arr = np.array([group.exponents(g) for g in group.elements()], dtype=np.int64)
    powers = {
        g: np.array(
            [0] + list(itertools.accumulate([g] * (max(orders) - 1), lambda a, b: int(mt[a, b]))),
            dtype=np.int64,
        )
        for g in range(group.size)
    }
    autos: list[tuple[int, ...]] = []
    for images in itertools.product(*candidates):
        image = np.zeros(group.size, dtype=np.int64)
        for i, img in enumerate(images):
            image = mt[image, powers[img][exps_arr[:, i]]]
        if len(set(image.tolist())) == group.size:
            autos.append(tuple(int(x) for x in image))
    return autos


# -- JSON interchange ---------------------------------------------------------


def group_from_spec(spec: dict) -> FiniteGroup:
    """Build a group from {"orders": [...]} or {"cayley": [[...]]}."""
    if "orders" in spec:
        return FiniteGroup(orders=spec["orders"])
    if "cayley" in spec:
        return FiniteGroup(table=spec["cayley"])
    raise ValueError("group spec needs 'orders' or 'cayley'")


def element_from_spec(group: FiniteGroup, exps: Sequence[Sequence[int]]) -> GroupAlgebraElement:
    """Build a check element from a list of exponent vectors."""
    return GroupAlgebraElement(group, tuple(group.from_exponents(e) for e in exps))


def element_to_spec(element: GroupAlgebraElement) -> list[list[int]]:
    return [list(element.group.exponents(s)) for s in element.support]
