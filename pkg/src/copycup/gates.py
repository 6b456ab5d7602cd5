"""Constant-depth CZ/CCZ circuit synthesis from cup-product pre-orientations.

A gate couples one qubit from each code copy; copies carry the same product
code.  The gate exponent is the coinvariant integral of the cup product of
the qubits' cochain representatives.  ``cup_integral_direct`` evaluates that
integral as a literal sum over cell orbits and vertex choices; the synthesis
routines use the collapsed closed forms, which depend only on the pairwise
differences of the qubits' group elements.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import cached_property

import numpy as np

from .complexes import CssCode, cohomology_basis
from .gf2 import BitMatrix, in_rowspace, kernel_basis
from .groups import FiniteGroup, PreOrientation
from .orientation import CupVariant


@dataclass
class GateCircuit:
    """A single round of CZ (lam=2) or CCZ (lam=3) gates across code copies."""

    lam: int
    n: int
    coefficients: np.ndarray  # (n, n) for CZ, (n, n, n) for CCZ; uint8

    @cached_property
    def gates(self) -> tuple[tuple[int, ...], ...]:
        return tuple(map(tuple, np.argwhere(self.coefficients)))

    @property
    def arity(self) -> int:
        return self.lam

    @property
    def gate_count(self) -> int:
        return int(self.coefficients.sum())


def _sub_table(group: FiniteGroup) -> np.ndarray:
    """sub[a, b] = a * b^-1 (difference table, abelian)."""
    n = group.size
    out = np.empty((n, n), dtype=np.int64)
    for a in range(n):
        for b in range(n):
            out[a, b] = group.mul(a, group.inv(b))
    return out


def _require_balanced(code: CssCode, lam: int) -> FiniteGroup:
    if code.product != "balanced" or code.group is None:
        raise ValueError("gate synthesis requires a balanced product code")
    if code.sectors != lam:
        raise ValueError(f"need a {lam}-factor product for this gate")
    if not code.group.is_abelian:
        raise ValueError("gate synthesis requires an abelian group")
    return code.group


def _check_po(code: CssCode, pos: tuple[PreOrientation, ...]) -> None:
    for po, el in zip(pos, code.elements):
        if po.element != el:
            raise ValueError("pre-orientation does not label the matching factor")


def synth_cz_circuit(code: CssCode, pos: tuple[PreOrientation, PreOrientation]) -> GateCircuit:
    """CZ gates between two copies of a square balanced-product code.

    A copy-1 qubit (sector s1, element p1) couples to a copy-2 qubit
    (s2, p2) with s2 != s1; the exponent counts pairs (i, o) in
    in(slot s1) x out(slot s2) with i - o = p2 - p1, mod 2.
    """
    group = _require_balanced(code, 2)
    _check_po(code, pos)
    ng = group.size
    sub = _sub_table(group)
    coeff = np.zeros((code.n, code.n), dtype=np.uint8)
    for s1, s2 in ((0, 1), (1, 0)):
        core = np.zeros(ng, dtype=np.uint8)
        for i in pos[s1].in_set:
            for o in pos[s2].out_set:
                core[sub[i, o]] ^= 1
        d = sub[np.arange(ng)[None, :], np.arange(ng)[:, None]]  # d[p1, p2] = p2 - p1
        coeff[
            s1 * ng : (s1 + 1) * ng,
            s2 * ng : (s2 + 1) * ng,
        ] = core[d]
    return GateCircuit(2, code.n, coeff)


def _ccz_core(
    group: FiniteGroup,
    sub: np.ndarray,
    in1: list[int],
    in2: list[int],
    out2: list[int],
    out3: list[int],
    variant: CupVariant,
) -> np.ndarray:
    """core[d21, d31]: gate parity as a function of p2 - p1 and p3 - p1."""
    ng = group.size
    add = sub[:, group.inv_table]  # add[a, b] = a + b
    in1_mask = np.zeros(ng, dtype=np.uint8)
    in1_mask[in1] = 1
    in2_mask = np.zeros(ng, dtype=np.uint8)
    in2_mask[in2] = 1
    core = np.zeros((ng, ng), dtype=np.uint8)
    dd = np.arange(ng)
    if variant is CupVariant.NON_ASSOCIATIVE:
        # F(z) = #{(o', i3) in out3 x in1 : z + o' - i3 in in2} mod 2
        f = np.zeros(ng, dtype=np.uint8)
        for o2 in out3:
            for i3 in in1:
                f ^= in2_mask[add[sub[dd, i3], o2]]
        for o in out2:
            sel = in1_mask[add[dd, o]]  # [d21 + o in in1]
            core ^= np.outer(sel, f[add[dd, o]])
    elif variant is CupVariant.SYMMETRIC:
        # z = o + o1' with parity multiplicity; A(u) = #{o2' : u - o2' in in1};
        # B(v) = #{i3 : v - i3 in in2}
        nz = np.zeros(ng, dtype=np.uint8)
        for o in out2:
            for o1 in out3:
                nz[add[o, o1]] ^= 1
        a = np.zeros(ng, dtype=np.uint8)
        for o2 in out3:
            a[add[dd, o2]] ^= in1_mask
        b = np.zeros(ng, dtype=np.uint8)
        for i3 in in1:
            b[add[dd, i3]] ^= in2_mask
        for z in np.flatnonzero(nz):
            core ^= np.outer(a[add[dd, z]], b[add[dd, z]])
    else:  # pragma: no cover
        raise ValueError(f"unknown variant {variant}")
    return core


def synth_ccz_circuit(
    code: CssCode,
    pos: tuple[PreOrientation, PreOrientation, PreOrientation],
    variant: CupVariant = CupVariant.NON_ASSOCIATIVE,
) -> GateCircuit:
    """CCZ gates between three copies of a cube balanced-product code.

    Copies must occupy pairwise distinct sectors; for each of the six sector
    permutations the exponent is a function of (p2 - p1, p3 - p1) only.
    """
    if variant is CupVariant.OUTSIDE_IN:
        raise ValueError("outside_in variant is unsupported for gate synthesis")
    group = _require_balanced(code, 3)
    _check_po(code, pos)
    ng = group.size
    sub = _sub_table(group)
    coeff = np.zeros((code.n, code.n, code.n), dtype=np.uint8)
    elems = np.arange(ng)
    d_of = sub[elems[None, :], elems[:, None]]  # d_of[p, p'] = p' - p
    for t1, t2, t3 in itertools.permutations(range(3)):
        core = _ccz_core(
            group,
            sub,
            sorted(pos[t1].in_set),
            sorted(pos[t2].in_set),
            sorted(pos[t2].out_set),
            sorted(pos[t3].out_set),
            variant,
        )
        block = core[d_of[:, :, None], d_of[:, None, :]]  # [p1, p2, p3]
        coeff[
            t1 * ng : (t1 + 1) * ng,
            t2 * ng : (t2 + 1) * ng,
            t3 * ng : (t3 + 1) * ng,
        ] = block
    return GateCircuit(3, code.n, coeff)


def cup_integral_direct(
    code: CssCode,
    pos: tuple[PreOrientation, ...],
    qubits: tuple[int, ...],
    variant: CupVariant = CupVariant.NON_ASSOCIATIVE,
) -> int:
    """Gate exponent for one qubit tuple as a literal coinvariant sum.

    Enumerates orbit representatives of the top cells and all admissible
    vertex choices per slot; used as the oracle against the closed forms.
    """
    if variant is CupVariant.OUTSIDE_IN:
        raise ValueError("outside_in variant is unsupported for gate synthesis")
    lam = len(qubits)
    group = _require_balanced(code, lam)
    ng = group.size
    add = lambda a, b: group.mul(a, b)  # noqa: E731
    sectors = [code.sector_of(q) for q in qubits]
    labels = [code.element_of(q) for q in qubits]
    if len(set(sectors)) != lam:
        return 0
    if lam == 2:
        (t1, t2), (p1, p2) = sectors, labels
        total = 0
        for tau in range(ng):
            for o in pos[t2].out_set:
                for i in pos[t1].in_set:
                    if add(o, tau) == p1 and add(i, tau) == p2:
                        total ^= 1
        return total
    (t1, t2, t3), (p1, p2, p3) = sectors, labels
    po1, po2, po3 = pos[t1], pos[t2], pos[t3]
    total = 0
    if variant is CupVariant.NON_ASSOCIATIVE:
        for tau in range(ng):
            for o in po2.out_set:  # copy 1's vertex in slot t2
                for o2 in po3.out_set:  # shared before-vertex offset in slot t3
                    b3 = add(o2, tau)
                    for ia in po1.in_set:  # copy 2's vertex in slot t1
                        for ib in po1.in_set:  # copy 3's vertex in slot t1
                            for ic in po2.in_set:  # copy 3's vertex in slot t2
                                if (
                                    add(o, b3) == p1
                                    and add(ia, b3) == p2
                                    and add(tau, add(ib, ic)) == p3
                                ):
                                    total ^= 1
    elif variant is CupVariant.SYMMETRIC:
        for tau in range(ng):
            for o in po2.out_set:
                for o2a in po3.out_set:  # copy 1's own vertex in slot t3
                    for o2b in po3.out_set:  # copy 2's own vertex in slot t3
                        for ia in po1.in_set:
                            for ib in po1.in_set:
                                for ic in po2.in_set:
                                    if (
                                        add(o, add(o2a, tau)) == p1
                                        and add(ia, add(o2b, tau)) == p2
                                        and add(tau, add(ib, ic)) == p3
                                    ):
                                        total ^= 1
    else:  # pragma: no cover
        raise ValueError(f"unknown variant {variant}")
    return total


def preserves_codespace(code: CssCode, circuit: GateCircuit) -> bool:
    """Whether conjugating every X stabilizer leaves the codespace fixed.

    For CZ the induced Z string must lie in the Z-stabilizer rowspace; for
    CCZ the induced CZ bilinear form must vanish on ker(hz) x ker(hz).
    """
    hx = code.hx.to_dense().astype(np.int64)
    if circuit.lam == 2:
        c = circuit.coefficients.astype(np.int64)
        for s in hx:
            if not in_rowspace(code.hz, ((s @ c) & 1).astype(np.uint8)):
                return False
            if not in_rowspace(code.hz, ((c @ s) & 1).astype(np.uint8)):
                return False
        return True
    kern = kernel_basis(code.hz).to_dense().astype(np.int64)
    t = circuit.coefficients.astype(np.int64)
    for axis in range(3):
        contracted = np.tensordot(hx, t, axes=([1], [axis])) & 1  # (checks, n, n)
        forms = np.einsum("ai,sij,bj->sab", kern, contracted, kern) & 1
        if forms.any():
            return False
    return True


def logical_action_cz(code: CssCode, circuit: GateCircuit) -> bool:
    """True when the CZ round acts non-trivially on the logical qubits."""
    logicals = cohomology_basis(code).to_dense().astype(np.int64)
    coupling = (logicals @ circuit.coefficients.astype(np.int64) @ logicals.T) & 1
    return bool(coupling.any())


def logical_action_ccz(code: CssCode, circuit: GateCircuit) -> bool:
    """True when the CCZ round acts non-trivially on the logical qubits."""
    logicals = cohomology_basis(code).to_dense().astype(np.int64)
    t = circuit.coefficients.astype(np.int64)
    coupling = np.einsum("ai,bj,ck,ijk->abc", logicals, logicals, logicals, t) & 1
    return bool(coupling.any())
