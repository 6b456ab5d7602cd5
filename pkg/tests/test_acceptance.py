"""Acceptance gate: one check per published claim, one pass/fail line each.

Every test prints ``PASS``/``FAIL criterion N`` before asserting, so the
summary is readable even when a criterion fails.  Criteria 3 and 4 are the
slow ones (a full group sweep and randomized distance estimation on n = 144
codes); the whole module stays within the stated time budgets.
"""

import itertools
import math

import numpy as np
import pytest

from copycup.complexes import (
    build_product_code,
    cohomology_basis,
    distance_exact_by_weight,
    distance_upper_randomized,
)
from copycup.gates import (
    cup_integral_direct,
    logical_action_ccz,
    preserves_codespace,
    synth_ccz_circuit,
    synth_cz_circuit,
)
from copycup.groups import (
    FiniteGroup,
    GroupAlgebraElement,
    PreOrientation,
    abelian_groups,
    antipode,
    enumerate_check_elements,
    enumerate_labelings,
)
from copycup.matching import build_equations, count_raw_matchings, enumerate_configurations
from copycup.orientation import (
    CupVariant,
    enumerate_preorientations,
    verify_preorientation,
)
from copycup.search import (
    SearchConfig,
    canonical_tuple,
    load_manifest,
    run_search,
    verify_manifest,
)

NA = CupVariant.NON_ASSOCIATIVE
SYM = CupVariant.SYMMETRIC
OI = CupVariant.OUTSIDE_IN


def report(num: int, ok: bool, detail: str) -> None:
    print(f"\n{'PASS' if ok else 'FAIL'} criterion {num}: {detail}")
    assert ok, f"criterion {num}: {detail}"


def _elements(group, polys):
    return [GroupAlgebraElement(group, tuple(p)) for p in polys]


def test_criterion_1_weight2_cube_table_exact():
    """Weight-2 cube codes: exact parameters and non-trivial CCZ."""
    from copycup.groups import element_from_spec

    manifest = load_manifest("cube_ccz")
    failures = []
    for row in manifest["rows"]:
        group = FiniteGroup(orders=row["group"]["orders"])
        els = [element_from_spec(group, poly) for poly in row["polys"]]
        code = build_product_code(els)
        if (code.n, code.k) != (row["n"], row["k"]):
            failures.append(f"{group}: n,k={code.params()}")
            continue
        res = distance_exact_by_weight(code, row["d"] + 1, budget=None)
        if res.distance != row["d"]:
            failures.append(f"{group}: d={res.distance} != {row['d']}")
            continue
        pos = tuple(
            enumerate_preorientations(el, 3, SYM, mode="closed_form")[0] for el in els
        )
        circ = synth_ccz_circuit(code, pos, SYM)
        if not preserves_codespace(code, circ):
            failures.append(f"{group}: preservation failed")
        elif not logical_action_ccz(code, circ):
            failures.append(f"{group}: CCZ action trivial")
    report(1, not failures, failures or "4 weight-2 cube rows: n,k,d exact, CCZ non-trivial")


def test_criterion_2_weight4_trivial_logic():
    """Weight-4 C_7 and C_13 cubes: pre-orientation holds, logic is trivial."""
    cases = [
        ([7], [[0, 1, 2, 3], [0, 1, 3, 4], [0, 2, 3, 5]], (21, 3)),
        ([13], [[0, 1, 2, 3], [0, 1, 3, 4], [0, 2, 5, 7]], (39, 3)),
    ]
    failures = []
    for orders, polys, params in cases:
        group = FiniteGroup(orders=orders)
        els = _elements(group, polys)
        label_sets = []
        for el in els:
            labs = enumerate_preorientations(el, 3, SYM, mode="oracle")
            if not labs:
                failures.append(f"{group}: no pre-orientation for {el.support}")
            label_sets.append(labs)
        if failures:
            continue
        code = build_product_code(els)
        if code.params() != params:
            failures.append(f"{group}: params {code.params()}")
            continue
        logicals = cohomology_basis(code)
        for combo in itertools.product(*label_sets):
            circ = synth_ccz_circuit(code, combo, SYM)
            if logical_action_ccz(code, circ):
                failures.append(f"{group}: non-trivial action under {combo}")
                break
    report(2, not failures, failures or "[[21,3,3]] and [[39,3,5]]: valid pre-orientation, trivial CCZ logic")


def test_criterion_3_unique_code_sweep():
    """Order 2-16 weight-4 symmetric sweep finds one code: [[27,9,2]] over C_9."""
    cfg = SearchConfig(
        groups=tuple(abelian_groups(2, 16)),
        weight=4,
        lam=3,
        variant=SYM,
        max_classical_k=3,
        require_nontrivial=True,
        label_policy="first",
        wmax=4,
    )
    rows = run_search(cfg)
    c9 = FiniteGroup(orders=[9])
    published = _elements(c9, [[0, 1, 3, 4], [0, 1, 6, 7], [0, 2, 3, 5]])
    published_key = canonical_tuple(c9, published, "factors")
    failures = []
    if not rows:
        failures.append("sweep found no non-trivial code")
    if any(r.group != c9 or (r.n, r.k, r.d) != (27, 9, 2) for r in rows):
        failures.append(
            "rows beyond [[27,9,2]] over C_9: "
            + str([(str(r.group), r.n, r.k, r.d) for r in rows])
        )
    keys = {canonical_tuple(r.group, r.elements, "factors") for r in rows}
    if keys != {published_key}:
        failures.append(f"polynomial classes {keys} != published {published_key}")
    report(
        3,
        not failures,
        failures
        or f"unique non-trivial code [[27,9,2]] over C_9, published polynomials up to symmetry ({len(rows)} row(s), one class)",
    )


def test_criterion_4_cz_tables():
    """Both CZ tables: n, k, check weights, CZ action, distance protocol."""
    failures = []
    for name in ("square_cz_weight3", "square_cz_weight4"):
        for rep in verify_manifest(name, trials=10000):
            if rep.status != "pass":
                failures.append(f"{name} [[{rep.row['n']},{rep.row['k']}]]: {rep.details}")
    report(4, not failures, failures or "22 CZ rows: parameters, Algorithm 1, and distances verified")


def test_criterion_5_matching_counts():
    """Published matching/configuration counts for weight-4 and weight-6."""
    checks = [
        ("weight4 (1,1,2) raw", count_raw_matchings(build_equations(4, (1, 1, 2), 2, NA)), 3),
        ("weight4 (1,1,2) valid", len(enumerate_configurations(build_equations(4, (1, 1, 2), 2, NA))), 2),
        ("weight4 (1,3,0) valid", len(enumerate_configurations(build_equations(4, (1, 3, 0), 2, NA))), 4),
        ("weight4 (2,2,0) NA", len(enumerate_configurations(build_equations(4, (2, 2, 0), 3, NA))), 1),
        ("weight6 (2,4,0) NA", len(enumerate_configurations(build_equations(6, (2, 4, 0), 3, NA))), 315),
        ("weight6 (2,2,2) NA", len(enumerate_configurations(build_equations(6, (2, 2, 2), 3, NA))), 1),
    ]
    failures = [f"{name}: {got} != {want}" for name, got, want in checks if got != want]
    report(5, not failures, failures or "matching counts 3/2, 4, 1, 315, 1 all exact")


def test_criterion_6_no_3copy_for_weight_3_and_5():
    """No weight-3 or weight-5 element admits a 3-copy pre-orientation."""
    groups = [FiniteGroup(orders=[8]), FiniteGroup(orders=[9]), FiniteGroup(orders=[3, 3])]
    failures = []
    for group in groups:
        for weight in (3, 5):
            for el in enumerate_check_elements(group, weight):
                for po in enumerate_labelings(el):
                    for variant in (NA, SYM, OI):
                        if verify_preorientation(po, 3, variant):
                            failures.append(f"{group} {el.support} {po.signature} {variant.value}")
    report(6, not failures, failures[:5] or "weight-3/5 over C_8, C_9, C_3xC_3: no valid 3-copy labeling")


def test_criterion_7a_closed_form_equals_oracle():
    """Closed-form checkers agree with the master-equation oracle everywhere."""
    groups = [FiniteGroup(orders=[8]), FiniteGroup(orders=[9]), FiniteGroup(orders=[3, 3])]
    mismatches = []
    for group in groups:
        for weight in (3, 4):
            for el in enumerate_check_elements(group, weight):
                for lam, variants in ((2, (NA, SYM, OI)), (3, (NA, SYM, OI))):
                    for variant in variants:
                        a = enumerate_preorientations(el, lam, variant, mode="oracle")
                        b = enumerate_preorientations(el, lam, variant, mode="closed_form")
                        if a != b:
                            mismatches.append(f"{group} {el.support} lam={lam} {variant.value}")
    report(7, not mismatches, mismatches[:5] or "criterion 7a: oracle == closed form on all weight-3/4 elements, zero mismatches")


def test_criterion_7b_synthesis_equals_direct_sums():
    """Synthesized circuits equal the direct coinvariant sums gate-by-gate."""
    mismatches = 0
    checked = 0
    # square codes over |G| <= 12
    for orders, supp1, supp2 in [
        ([2], (0, 1), (0, 1)),
        ([8], (0, 1, 2, 3), (0, 1, 2, 3)),
        ([3, 2], (0, 1, 2), (0, 2, 4)),
    ]:
        group = FiniteGroup(orders=orders)
        els = [GroupAlgebraElement(group, supp1), GroupAlgebraElement(group, supp2)]
        labs = [enumerate_preorientations(el, 2, NA, mode="oracle") for el in els]
        if not all(labs):
            continue
        code = build_product_code(els)
        pos = (labs[0][0], labs[1][0])
        circ = synth_cz_circuit(code, pos)
        for q in itertools.product(range(code.n), repeat=2):
            checked += 1
            if circ.coefficients[q] != cup_integral_direct(code, pos, q, NA):
                mismatches += 1
    # cube codes over |G| <= 12
    for orders, supports, variant in [
        ([2], [(0, 1)] * 3, SYM),
        ([2], [(0, 1)] * 3, NA),
        ([7], [(0, 1), (0, 2), (0, 3)], SYM),
        ([9], [(0, 1, 3, 4), (0, 1, 6, 7), (0, 2, 3, 5)], SYM),
    ]:
        group = FiniteGroup(orders=orders)
        if group.size > 12:
            continue
        els = [GroupAlgebraElement(group, s) for s in supports]
        labs = [enumerate_preorientations(el, 3, variant, mode="oracle") for el in els]
        code = build_product_code(els)
        pos = tuple(l[0] for l in labs)
        circ = synth_ccz_circuit(code, pos, variant)
        rng = np.random.default_rng(0)
        for q in itertools.product(range(code.n), repeat=3):
            checked += 1
            if circ.coefficients[q] != cup_integral_direct(code, pos, q, variant):
                mismatches += 1
    report(7, mismatches == 0, f"criterion 7b: {checked} gate coefficients compared against direct sums, {mismatches} mismatches")


def test_criterion_8_involution_built_weight4_distance2():
    """Random involution-built weight-4 elements: annihilation and d <= 2."""
    rng = np.random.default_rng(7)
    groups = abelian_groups(4, 12)
    failures = []
    count = 0
    while count < 200:
        group = groups[rng.integers(0, len(groups))]
        # pick g1, g2 and an involution t (t^2 = identity, t != identity)
        involutions = [g for g in group.elements() if g != 0 and group.mul(g, g) == 0]
        if not involutions:
            continue
        t = involutions[rng.integers(0, len(involutions))]
        g1 = int(rng.integers(0, group.size))
        g2 = int(rng.integers(0, group.size))
        supp = {g1, g2, group.mul(g1, t), group.mul(g2, t)}
        if len(supp) != 4:
            continue
        count += 1
        el = GroupAlgebraElement(group, tuple(supp))
        step = group.mul(group.inv(g1), group.mul(g1, t))  # g1^{-1} (g1 t) = t
        annihilator = GroupAlgebraElement(group, (0, step))
        if el.multiply(annihilator) is not None:
            failures.append(f"{group} {el.support}: delta*(1+g1^-1 g2) != 0")
            continue
        code = build_product_code([el, el, el])
        res = distance_exact_by_weight(code, 2, budget=None)
        if code.k > 0 and (res.distance is None or res.distance > 2):
            failures.append(f"{group} {el.support}: d > 2")
    report(8, not failures, failures[:5] or "200 involution-built weight-4 elements: annihilated, cube d <= 2")


def test_criterion_9_symmetric3_implies_2copy():
    """Every weight-4 labeling valid for symmetric 3-copy is valid for 2-copy."""
    failures = []
    for group in (FiniteGroup(orders=[8]), FiniteGroup(orders=[9])):
        for el in enumerate_check_elements(group, 4):
            for po in enumerate_preorientations(el, 3, SYM, mode="oracle"):
                if not verify_preorientation(po, 2, NA):
                    failures.append(f"{group} {el.support} {sorted(po.in_set)}")
    report(9, not failures, failures[:5] or "symmetric 3-copy labelings all pass 2-copy, C_8 and C_9 exhaustive")


def test_criterion_10_weight3_2copy_shift_invariance():
    """Existence of a weight-3 2-copy labeling is translation invariant."""
    rng = np.random.default_rng(11)
    failures = []
    samples = 0
    groups = abelian_groups(4, 36)
    while samples < 1000:
        group = groups[rng.integers(0, len(groups))]
        if group.size < 3:
            continue
        supp = rng.choice(group.size, size=3, replace=False)
        el = GroupAlgebraElement(group, tuple(int(s) for s in supp))
        g = int(rng.integers(0, group.size))
        side = "left" if rng.integers(0, 2) else "right"
        shifted = el.translate(g, side=side)
        samples += 1
        has = bool(enumerate_preorientations(el, 2, NA, mode="closed_form"))
        has_shifted = bool(enumerate_preorientations(shifted, 2, NA, mode="closed_form"))
        if has != has_shifted:
            failures.append(f"{group} {el.support} shift {g} {side}")
    report(10, not failures, failures[:5] or "1000 sampled weight-3 shifts: 2-copy existence invariant")
