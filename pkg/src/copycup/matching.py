"""Symbolic expansion of the master equations into intersection-term equations,
and enumeration of perfect-matching configurations of those terms.

Each equation is a GF(2) sum of terms; a term is a tuple of 1-based support
indices (in-part first, then out, then free) whose consecutive entries encode
quotients g_i^-1 g_j.  A configuration pairs the terms of every equation so
that paired terms are forced equal; the resulting quotient equalities are the
closed-form gate conditions.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import lru_cache

from .orientation import ConditionSet, CupVariant, Relation, canonical_relation

TermTuple = tuple[int, ...]

_IN, _OUT, _FREE, _SUPP = 1, 2, 4, 7  # part-subset bit flags


@dataclass(frozen=True)
class EquationSpec:
    """One reduced equation: XOR of quotient-indicator terms must vanish."""

    terms: tuple[TermTuple, ...]
    arity: int
    label: str

    @property
    def is_empty(self) -> bool:
        return not self.terms


@dataclass(frozen=True)
class ScreenResult:
    viable: bool
    reason: str | None = None
    equation: EquationSpec | None = None


@dataclass(frozen=True)
class Configuration:
    """A joint consistent pairing of the terms of every equation."""

    pairings: tuple[tuple[tuple[TermTuple, TermTuple], ...], ...]
    conditions: ConditionSet


def _set_partitions(lam: int) -> list[tuple[int, ...]]:
    """Class-id tuples (normalized by first occurrence), all-equal excluded."""
    out = []
    for classes in itertools.product(range(lam), repeat=lam):
        norm, seen = [], {}
        for c in classes:
            if c not in seen:
                seen[c] = len(seen)
            norm.append(seen[c])
        norm = tuple(norm)
        if norm == classes and len(seen) > 1:
            out.append(norm)
    return sorted(set(out))


def _pattern_terms(
    weight: int,
    signature: tuple[int, int, int],
    lam: int,
    variant: CupVariant,
    pattern: tuple[int, ...],
) -> set[TermTuple]:
    """Expand one master-equation instance for a fixed variable-equality pattern."""
    i, o, _ = signature
    part_of = [0] * (weight + 1)
    for idx in range(1, weight + 1):
        part_of[idx] = _IN if idx <= i else (_OUT if idx <= i + o else _FREE)
    nclasses = max(pattern) + 1
    acc: dict[TermTuple, int] = {}
    for j in range(1, lam + 1):
        factors = [_SUPP] * nclasses  # start from the full support per class
        dead = False
        prefix, suffix = pattern[: j - 1], pattern[j:]
        if variant in (CupVariant.NON_ASSOCIATIVE, CupVariant.OUTSIDE_IN):
            if prefix:
                if len(set(prefix)) > 1:
                    dead = True
                else:
                    factors[prefix[0]] &= _OUT
        else:
            for c in prefix:
                factors[c] &= _OUT
        if variant is CupVariant.OUTSIDE_IN:
            if suffix:
                if len(set(suffix)) > 1:
                    dead = True
                else:
                    factors[suffix[0]] &= _IN
        else:
            for c in suffix:
                factors[c] &= _IN
        if dead:
            continue
        # the cupped slot contributes the bare support to its class
        ranges = []
        for c in range(nclasses):
            mask = factors[c]
            ranges.append([g for g in range(1, weight + 1) if part_of[g] & mask])
        for tup in itertools.product(*ranges):
            if len(set(tup)) == len(tup):
                acc[tup] = acc.get(tup, 0) ^ 1
    return {t for t, v in acc.items() if v}


@lru_cache(maxsize=None)
def build_equations(
    weight: int,
    signature: tuple[int, int, int],
    lam: int,
    variant: CupVariant,
) -> tuple[EquationSpec, ...]:
    """Reduced intersection-term equations for a labeling signature.

    Per-pattern expansions of the master equation share the same function
    space at equal class count, so each arity group is brought to reduced
    row echelon form over GF(2) with columns ordered by term tuple; this is
    the canonical minimal system.  The all-equal pattern reduces to the
    parity condition |in| + |out| even, which callers check separately.
    """
    if sum(signature) != weight:
        raise ValueError("signature parts must sum to the weight")
    if lam not in (2, 3):
        raise ValueError("lambda must be 2 or 3")
    by_arity: dict[int, list[set[TermTuple]]] = {}
    for pattern in _set_partitions(lam):
        arity = max(pattern) + 1
        terms = _pattern_terms(weight, signature, lam, variant, pattern)
        by_arity.setdefault(arity, []).append(set(terms))
    specs: list[EquationSpec] = []
    for arity in sorted(by_arity):
        rows = by_arity[arity]
        columns = sorted({t for r in rows for t in r})
        reduced = _gf2_rref(rows, columns)
        if not reduced:
            specs.append(EquationSpec((), arity, f"{arity}-class (empty)"))
        for idx, r in enumerate(reduced):
            specs.append(EquationSpec(tuple(sorted(r)), arity, f"{arity}-class #{idx}"))
    return tuple(specs)


def _gf2_rref(rows: list[set[TermTuple]], columns: list[TermTuple]) -> list[set[TermTuple]]:
    rows = [set(r) for r in rows if r]
    done: list[set[TermTuple]] = []
    for col in columns:
        pivot = None
        for r in rows:
            if col in r:
                pivot = r
                break
        if pivot is None:
            continue
        rows.remove(pivot)
        for r in itertools.chain(rows, done):
            if col in r and r is not pivot:
                r.symmetric_difference_update(pivot)
        done.append(pivot)
    return [r for r in done if r]


def screen(equations: tuple[EquationSpec, ...]) -> ScreenResult:
    """Cheap viability filter applied before configuration search.

    An equation whose terms all share one index at some position can never
    vanish (a single indicator survives); that is checked before term-count
    parity, so a one-term equation reports as singular rather than odd.
    """
    for eq in equations:
        if eq.is_empty:
            continue
        for m in range(eq.arity):
            values = {t[m] for t in eq.terms}
            if len(values) == 1:
                return ScreenResult(False, "singular-single", eq)
        if len(eq.terms) % 2:
            return ScreenResult(False, "odd-term-count", eq)
    return ScreenResult(True)


def count_raw_matchings(equations: tuple[EquationSpec, ...]) -> int:
    """Perfect matchings of each equation's terms, consistency ignored."""
    total = 1
    for eq in equations:
        n = len(eq.terms)
        if n % 2:
            return 0
        for k in range(n - 1, 0, -2):
            total *= k
    return total


class _PairUnionFind:
    """Union-find over quotient symbols (i, j) with mirror-closed merges.

    A merge fails when a class would contain (i, j) and (i, k) with j != k
    (or the symmetric case), which would force two distinct support elements
    equal.  All mutations go through an undo trail so backtracking is cheap.
    """

    def __init__(self) -> None:
        self.parent: dict[tuple[int, int], tuple[int, int]] = {}
        self.members: dict[tuple[int, int], list[tuple[int, int]]] = {}
        self.left: dict[tuple[int, int], dict[int, int]] = {}
        self.right: dict[tuple[int, int], dict[int, int]] = {}
        self.trail: list[tuple] = []

    def checkpoint(self) -> int:
        return len(self.trail)

    def rollback(self, mark: int) -> None:
        while len(self.trail) > mark:
            entry = self.trail.pop()
            if entry[0] == "add":
                s = entry[1]
                del self.parent[s], self.members[s], self.left[s], self.right[s]
            else:
                _, small, big, count = entry
                self.parent[small] = small
                del self.members[big][-count:]
                for i, j in self.members[small]:
                    del self.left[big][i]
                    del self.right[big][j]

    def _add(self, s: tuple[int, int]) -> None:
        if s not in self.parent:
            self.parent[s] = s
            self.members[s] = [s]
            self.left[s] = {s[0]: s[1]}
            self.right[s] = {s[1]: s[0]}
            self.trail.append(("add", s))

    def _find(self, s: tuple[int, int]) -> tuple[int, int]:
        while self.parent[s] != s:
            s = self.parent[s]
        return s

    def _union(self, s1: tuple[int, int], s2: tuple[int, int]) -> bool:
        r1, r2 = self._find(s1), self._find(s2)
        if r1 == r2:
            return True
        small, big = (r1, r2) if len(self.members[r1]) <= len(self.members[r2]) else (r2, r1)
        bl, br = self.left[big], self.right[big]
        for i, j in self.members[small]:
            if bl.get(i, j) != j or br.get(j, i) != i:
                return False
        self.parent[small] = big
        self.members[big].extend(self.members[small])
        for i, j in self.members[small]:
            bl[i] = j
            br[j] = i
        self.trail.append(("union", small, big, len(self.members[small])))
        return True

    def add_relation(self, s1: tuple[int, int], s2: tuple[int, int]) -> bool:
        mark = self.checkpoint()
        for a, b in ((s1, s2), ((s1[1], s1[0]), (s2[1], s2[0]))):
            self._add(a)
            self._add(b)
            if not self._union(a, b):
                self.rollback(mark)
                return False
        return True


def conditions_consistent(relations: frozenset[Relation] | set[Relation]) -> bool:
    """Whether the quotient equalities avoid forcing distinct elements equal."""
    uf = _PairUnionFind()
    return all(uf.add_relation(a, b) for a, b in relations)


def _pair_relations(t: TermTuple, u: TermTuple) -> list[tuple[tuple[int, int], tuple[int, int]]]:
    # Equal consecutive quotients imply equal outer quotients, e.g.
    # g_i^-1 g_k = (g_i^-1 g_j)(g_j^-1 g_k); carrying the implied relations
    # lets the union-find catch contradictions that the consecutive pairs
    # alone would miss.
    return [
        ((t[a], t[b]), (u[a], u[b]))
        for a in range(len(t))
        for b in range(a + 1, len(t))
    ]


def enumerate_configurations(
    equations: tuple[EquationSpec, ...], limit: int | None = None
) -> list[Configuration]:
    """All jointly consistent perfect matchings across the equations.

    The search pairs the lowest unmatched term first and prunes through the
    shared union-find, so contradictory branches die at the first bad pair.
    """
    order = sorted(range(len(equations)), key=lambda k: len(equations[k].terms))
    uf = _PairUnionFind()
    results: list[Configuration] = []
    pairing_acc: list[list[tuple[TermTuple, TermTuple]]] = [[] for _ in equations]

    def solve_eq(pos: int, unmatched: list[TermTuple]) -> bool:
        if limit is not None and len(results) >= limit:
            return True
        if not unmatched:
            return advance(pos + 1)
        t = unmatched[0]
        eq_idx = order[pos]
        for k in range(1, len(unmatched)):
            u = unmatched[k]
            mark = uf.checkpoint()
            ok = all(uf.add_relation(a, b) for a, b in _pair_relations(t, u))
            if ok:
                pairing_acc[eq_idx].append((t, u))
                rest = unmatched[1:k] + unmatched[k + 1 :]
                if solve_eq(pos, rest):
                    pairing_acc[eq_idx].pop()
                    uf.rollback(mark)
                    return True
                pairing_acc[eq_idx].pop()
            uf.rollback(mark)
        return False

    def advance(pos: int) -> bool:
        if pos == len(order):
            rels = [
                rel
                for pairs in pairing_acc
                for t, u in pairs
                for rel in _pair_relations(t, u)
            ]
            results.append(
                Configuration(
                    tuple(tuple(p) for p in pairing_acc),
                    ConditionSet.from_relations(rels, source="matching"),
                )
            )
            return limit is not None and len(results) >= limit
        return solve_eq(pos, sorted(equations[order[pos]].terms))

    if all(len(eq.terms) % 2 == 0 for eq in equations):
        advance(0)
    return results
