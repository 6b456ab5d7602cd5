"""Pre-orientation conditions: master-equation oracle and closed-form checkers.

``verify_preorientation`` sweeps the master equation over all |G|^lambda input
tuples and is the single source of truth.  The closed-form route evaluates the
symbolically expanded intersection-term equations (see the matching module)
directly on the labeled group elements, and ``theorem_condition_check`` holds
the hand-derived condition lists for weights 3, 4 and 6.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from enum import Enum
from functools import lru_cache
from typing import Iterable, Sequence

from .groups import FiniteGroup, GroupAlgebraElement, PreOrientation, enumerate_labelings


class CupVariant(Enum):
    NON_ASSOCIATIVE = "non_associative"
    SYMMETRIC = "symmetric"
    OUTSIDE_IN = "outside_in"


Relation = tuple[tuple[int, int], tuple[int, int]]


def canonical_relation(rel: Relation) -> Relation | None:
    """Canonical form of g_i^-1 g_j = g_k^-1 g_l up to swap and inversion."""
    (i, j), (k, l) = rel
    forms = [((i, j), (k, l)), ((k, l), (i, j)), ((j, i), (l, k)), ((l, k), (j, i))]
    best = min(forms)
    if best[0] == best[1]:
        return None
    return best


@dataclass(frozen=True)
class ConditionSet:
    """A conjunction of pair-equalities g_i^-1 g_j = g_k^-1 g_l on support indices."""

    relations: frozenset[Relation]
    source: str = ""

    @classmethod
    def from_relations(cls, rels: Iterable[Relation], source: str = "") -> "ConditionSet":
        canon = set()
        for rel in rels:
            c = canonical_relation(rel)
            if c is not None:
                canon.add(c)
        return cls(frozenset(canon), source)

    def holds(self, group: FiniteGroup, assignment: Sequence[int]) -> bool:
        """Evaluate with assignment[i] the group element at 1-based index i+1."""

        def q(i: int, j: int) -> int:
            return group.mul(group.inv(assignment[i - 1]), assignment[j - 1])

        return all(q(i, j) == q(k, l) for (i, j), (k, l) in self.relations)

    def pretty(self) -> list[str]:
        return sorted(
            f"g_{i}^-1 g_{j} = g_{k}^-1 g_{l}" for (i, j), (k, l) in self.relations
        )


# ---------------------------------------------------------------------------
# Master-equation oracle
# ---------------------------------------------------------------------------


def _translate_mask(group: FiniteGroup, part: Iterable[int], a: int) -> int:
    m = 0
    for s in part:
        m |= 1 << group.mul(s, a)
    return m


def master_eval(
    po: PreOrientation, lam: int, variant: CupVariant, points: Sequence[int]
) -> int:
    """Left side of the chosen master equation (mod 2) at (a_1, ..., a_lambda)."""
    if lam not in (2, 3):
        raise ValueError("lambda must be 2 or 3")
    if len(points) != lam:
        raise ValueError("points length must equal lambda")
    group = po.element.group
    universe = (1 << group.size) - 1
    supp = po.element.support
    total = 0
    for j in range(1, lam + 1):
        if variant in (CupVariant.NON_ASSOCIATIVE, CupVariant.OUTSIDE_IN):
            prefix = points[: j - 1]
            if not prefix:
                t1 = universe
            elif all(p == prefix[0] for p in prefix):
                t1 = _translate_mask(group, po.out_set, prefix[0])
            else:
                t1 = 0
        else:
            t1 = universe
            for p in points[: j - 1]:
                t1 &= _translate_mask(group, po.out_set, p)
        if variant in (CupVariant.NON_ASSOCIATIVE, CupVariant.SYMMETRIC):
            t2 = universe
            for p in points[j:]:
                t2 &= _translate_mask(group, po.in_set, p)
        else:
            suffix = points[j:]
            if not suffix:
                t2 = universe
            elif all(p == suffix[0] for p in suffix):
                t2 = _translate_mask(group, po.in_set, suffix[0])
            else:
                t2 = 0
        mid = _translate_mask(group, supp, points[j - 1])
        total ^= (t1 & mid & t2).bit_count() & 1
    return total


def verify_preorientation(po: PreOrientation, lam: int, variant: CupVariant) -> bool:
    """Brute-force oracle: master equation vanishes at every |G|^lambda tuple."""
    if lam not in (2, 3):
        raise ValueError("lambda must be 2 or 3")
    group = po.element.group
    n = group.size
    universe = (1 << n) - 1
    supp_m = [_translate_mask(group, po.element.support, a) for a in range(n)]
    in_m = [_translate_mask(group, po.in_set, a) for a in range(n)]
    out_m = [_translate_mask(group, po.out_set, a) for a in range(n)]

    def term(t1: int, mid: int, t2: int) -> int:
        return (t1 & mid & t2).bit_count() & 1

    if lam == 2:
        # All three variants coincide at lambda = 2.
        for a1 in range(n):
            for a2 in range(n):
                v = term(universe, supp_m[a1], in_m[a2]) ^ term(out_m[a1], supp_m[a2], universe)
                if v:
                    return False
        return True

    na_oi = variant in (CupVariant.NON_ASSOCIATIVE, CupVariant.OUTSIDE_IN)
    for a1 in range(n):
        for a2 in range(n):
            for a3 in range(n):
                # j = 1
                t2 = (
                    in_m[a2] & in_m[a3]
                    if variant is not CupVariant.OUTSIDE_IN
                    else (in_m[a2] if a2 == a3 else 0)
                )
                v = term(universe, supp_m[a1], t2)
                # j = 2
                t2 = in_m[a3]
                v ^= term(out_m[a1], supp_m[a2], t2)
                # j = 3
                if na_oi:
                    t1 = out_m[a1] if a1 == a2 else 0
                else:
                    t1 = out_m[a1] & out_m[a2]
                v ^= term(t1, supp_m[a3], universe)
                if v:
                    return False
    return True


# ---------------------------------------------------------------------------
# Closed-form route (symbolic equations evaluated on concrete elements)
# ---------------------------------------------------------------------------


def ordered_support(po: PreOrientation) -> list[int]:
    """Support elements ordered in-first, then out, then free (1-based indexing)."""
    return sorted(po.in_set) + sorted(po.out_set) + sorted(po.free_set)


def closed_form_check(po: PreOrientation, lam: int, variant: CupVariant) -> bool:
    """Evaluate the expanded intersection-term equations on the labeled elements."""
    from .matching import build_equations

    sig = po.signature
    if (sig[0] + sig[1]) % 2:
        return False
    eqs = build_equations(po.element.weight, sig, lam, variant)
    group = po.element.group
    elems = ordered_support(po)
    for eq in eqs:
        counts: dict[tuple[int, ...], int] = {}
        for t in eq.terms:
            key = tuple(
                group.mul(group.inv(elems[t[m] - 1]), elems[t[m + 1] - 1])
                for m in range(len(t) - 1)
            )
            counts[key] = counts.get(key, 0) ^ 1
        if any(counts.values()):
            return False
    return True


# ---------------------------------------------------------------------------
# Hand-derived theorem conditions
# ---------------------------------------------------------------------------

# Registry entries: weight, lambda, variant (None = any at that lambda),
# signature -> list of alternative relation lists (disjunction of conjunctions).
_R = lambda *rels: [tuple(r) for r in rels]  # noqa: E731

_THEOREMS: dict[str, dict] = {
    # Weight-3, 2-copy: in = g1, out = g2, free = g3.
    "weight3-2copy": {
        "weight": 3,
        "lambda": 2,
        "variant": None,
        "signatures": {
            (1, 1, 1): [
                _R(((3, 2), (1, 3))),
            ],
        },
    },
    # Weight-4, 2-copy: disjunctions per assignment.
    "weight4-2copy": {
        "weight": 4,
        "lambda": 2,
        "variant": None,
        "signatures": {
            (1, 1, 2): [
                _R(((3, 1), (2, 3)), ((4, 1), (2, 4))),
                _R(((3, 1), (2, 4)), ((4, 1), (2, 3))),
            ],
            (2, 2, 0): [
                _R(((1, 2), (3, 4))),
                _R(((1, 2), (4, 3))),
                _R(((1, 2), (2, 1)), ((3, 4), (4, 3))),
            ],
            (1, 3, 0): [
                _R(((2, 3), (3, 2)), ((2, 4), (4, 2)), ((4, 3), (3, 4))),
                _R(((2, 3), (3, 2)), ((2, 4), (4, 3)), ((3, 4), (4, 2))),
                _R(((2, 3), (3, 4)), ((2, 4), (4, 2)), ((3, 2), (4, 3))),
                _R(((2, 3), (4, 2)), ((2, 4), (3, 2)), ((4, 3), (3, 4))),
            ],
            (3, 1, 0): [
                _R(((1, 2), (2, 1)), ((1, 3), (3, 1)), ((2, 3), (3, 2))),
                _R(((1, 2), (2, 1)), ((1, 3), (3, 2)), ((2, 3), (3, 1))),
                _R(((1, 2), (2, 3)), ((1, 3), (3, 1)), ((2, 1), (3, 2))),
                _R(((1, 2), (3, 1)), ((1, 3), (2, 1)), ((2, 3), (3, 2))),
            ],
        },
    },
    # Weight-4, 3-copy, non-associative: only (2,2,0) survives.
    "weight4-nonassoc-3copy": {
        "weight": 4,
        "lambda": 3,
        "variant": CupVariant.NON_ASSOCIATIVE,
        "signatures": {
            (2, 2, 0): [
                _R(((1, 2), (2, 1)), ((3, 4), (4, 3)), ((4, 2), (3, 1))),
            ],
        },
    },
    # Weight-4, 3-copy, symmetric: only (2,2,0) survives.
    "weight4-symmetric-3copy": {
        "weight": 4,
        "lambda": 3,
        "variant": CupVariant.SYMMETRIC,
        "signatures": {
            (2, 2, 0): [
                _R(((1, 2), (2, 1)), ((3, 4), (4, 3))),
                _R(((1, 2), (3, 4))),
                _R(((1, 2), (4, 3))),
            ],
        },
    },
    # Weight-6, 3-copy, non-associative, (2,2,2) assignment.
    "weight6-222-nonassoc": {
        "weight": 6,
        "lambda": 3,
        "variant": CupVariant.NON_ASSOCIATIVE,
        "signatures": {
            (2, 2, 2): [
                # g1 g2^-1 = g3 g4^-1 = g5 g6^-1 with all three involutions;
                # the chain is stated in left-quotient form g_i^-1 g_j.
                _R(
                    ((1, 2), (2, 1)),
                    ((3, 4), (4, 3)),
                    ((5, 6), (6, 5)),
                    ((3, 1), (4, 2)),
                    ((5, 3), (6, 4)),
                ),
            ],
        },
    },
}


def theorem_ids() -> list[str]:
    return sorted(_THEOREMS)


def theorem_condition_check(
    element: GroupAlgebraElement, labeling: PreOrientation, theorem: str
) -> bool:
    """Evaluate a stored closed-form condition list against a labeling.

    The registry conditions index support elements in-part first; satisfaction
    means some ordering of elements within each part meets some alternative.
    """
    spec = _THEOREMS.get(theorem)
    if spec is None:
        raise ValueError(f"unknown theorem id {theorem!r}")
    if element.weight != spec["weight"]:
        raise ValueError("element weight does not match theorem")
    if labeling.element != element:
        raise ValueError("labeling does not belong to the element")
    alternatives = spec["signatures"].get(labeling.signature)
    if alternatives is None:
        return False
    group = element.group
    parts = [sorted(labeling.in_set), sorted(labeling.out_set), sorted(labeling.free_set)]
    for orderings in itertools.product(*[itertools.permutations(p) for p in parts]):
        assignment = [g for part in orderings for g in part]
        for rels in alternatives:
            cs = ConditionSet.from_relations(rels, source=theorem)
            if cs.holds(group, assignment):
                return True
    return False


def _theorem_for(weight: int, lam: int, variant: CupVariant) -> str | None:
    for tid, spec in _THEOREMS.items():
        if spec["weight"] == weight and spec["lambda"] == lam:
            if spec["variant"] is None or spec["variant"] == variant:
                return tid
    return None


def enumerate_preorientations(
    element: GroupAlgebraElement,
    lam: int,
    variant: CupVariant,
    mode: str = "oracle",
) -> list[PreOrientation]:
    """All nontrivial labelings satisfying the gate conditions.

    mode 'oracle' sweeps the master equation per labeling; 'closed_form'
    evaluates the symbolically expanded equations.
    """
    if mode not in ("oracle", "closed_form"):
        raise ValueError("mode must be 'oracle' or 'closed_form'")
    out = []
    for po in enumerate_labelings(element):
        if (len(po.in_set) + len(po.out_set)) % 2:
            continue
        if mode == "oracle":
            ok = verify_preorientation(po, lam, variant)
        else:
            ok = closed_form_check(po, lam, variant)
        if ok:
            out.append(po)
    return out
