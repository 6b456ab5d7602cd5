"""Command-line interface for building codes, checking gates, and searching.

Subcommands: build, orient, configs, synth, verify-gate, distance, search,
verify-manifest.  Groups are given as comma-separated cyclic factor orders
(``--group 9,4``) and polynomials as comma-separated exponent vectors, one
per term, with ``:`` between factor exponents (``--poly 0:0,4:3,8:2``).
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys

from .complexes import (
    build_product_code,
    cohomology_basis,
    distance_exact_by_weight,
    distance_upper_randomized,
)
from .gates import (
    cup_integral_direct,
    logical_action_ccz,
    logical_action_cz,
    preserves_codespace,
    synth_ccz_circuit,
    synth_cz_circuit,
)
from .groups import FiniteGroup, element_from_spec, element_to_spec
from .matching import build_equations, count_raw_matchings, enumerate_configurations, screen
from .orientation import CupVariant, enumerate_preorientations
from .search import SearchConfig, load_manifest, manifest_names, run_search, verify_manifest


def _group(text: str) -> FiniteGroup:
    return FiniteGroup(orders=tuple(int(t) for t in text.split(",")))


def _poly(group: FiniteGroup, text: str):
    exps = [[int(x) for x in term.split(":")] for term in text.split(",")]
    return element_from_spec(group, exps)


def _variant(text: str) -> CupVariant:
    return CupVariant(text)


def _emit(data, fmt: str) -> None:
    if fmt == "json":
        print(json.dumps(data, indent=1))
        return
    rows = data if isinstance(data, list) else [data]
    rows = [r if isinstance(r, dict) else {"value": r} for r in rows]
    keys = sorted({k for r in rows for k in r})
    writer = csv.DictWriter(sys.stdout, fieldnames=keys)
    writer.writeheader()
    for r in rows:
        writer.writerow({k: json.dumps(v) if isinstance(v, (list, dict)) else v for k, v in r.items()})


def _code_from_args(args):
    group = _group(args.group)
    elements = [_poly(group, p) for p in args.poly]
    return group, elements, build_product_code(elements, args.product)


def cmd_build(args) -> None:
    group, elements, code = _code_from_args(args)
    xw = sorted({int(code.hx.row(i).sum()) for i in range(code.hx.rows)})
    zw = sorted({int(code.hz.row(i).sum()) for i in range(code.hz.rows)})
    _emit(
        {
            "group": {"orders": list(group.orders)},
            "polys": [element_to_spec(el) for el in elements],
            "product": args.product,
            "n": code.n,
            "k": code.k,
            "check_weights": [xw, zw],
            "sectors": code.sectors,
        },
        args.out,
    )


def cmd_orient(args) -> None:
    group = _group(args.group)
    el = _poly(group, args.poly[0])
    labelings = enumerate_preorientations(el, args.lam, _variant(args.variant), mode=args.mode)
    _emit(
        {
            "element": element_to_spec(el),
            "lambda": args.lam,
            "variant": args.variant,
            "labelings": [
                {
                    "in": sorted(po.in_set),
                    "out": sorted(po.out_set),
                    "free": sorted(po.free_set),
                    "signature": list(po.signature),
                }
                for po in labelings
            ],
        },
        args.out,
    )


def cmd_configs(args) -> None:
    variant = _variant(args.variant)
    signature = tuple(int(s) for s in args.signature.split(","))
    weight = sum(signature)
    equations = build_equations(weight, signature, args.lam, variant)
    result = screen(equations)
    out = {
        "signature": list(signature),
        "lambda": args.lam,
        "variant": args.variant,
        "viable": result.viable,
        "raw_matchings": count_raw_matchings(equations) if result.viable else 0,
    }
    if result.viable:
        configs = enumerate_configurations(equations)
        out["valid_configurations"] = len(configs)
        if args.verbose:
            out["conditions"] = [c.conditions.pretty() for c in configs]
    else:
        out["reason"] = result.reason
    _emit(out, args.out)


def _synth(args):
    group, elements, code = _code_from_args(args)
    variant = _variant(args.variant)
    label_sets = [
        enumerate_preorientations(el, args.lam, variant, mode="oracle") for el in elements
    ]
    for i, labs in enumerate(label_sets):
        if not labs:
            raise SystemExit(f"factor {i} has no valid pre-orientation")
    pos = tuple(labs[0] for labs in label_sets)
    if args.lam == 2:
        circuit = synth_cz_circuit(code, pos)
    else:
        circuit = synth_ccz_circuit(code, pos, variant)
    return code, pos, circuit


def cmd_synth(args) -> None:
    code, pos, circuit = _synth(args)
    _emit(
        {
            "arity": circuit.lam,
            "gates": [list(g) for g in circuit.gates],
        },
        args.out,
    )


def cmd_verify_gate(args) -> None:
    code, pos, circuit = _synth(args)
    preserved = preserves_codespace(code, circuit)
    action = (
        logical_action_cz(code, circuit)
        if args.lam == 2
        else logical_action_ccz(code, circuit)
    )
    report = {
        "n": code.n,
        "k": code.k,
        "gate_count": circuit.gate_count,
        "preserves_codespace": preserved,
        "nontrivial_logical_action": action,
    }
    if args.oracle_sample:
        import random

        rng = random.Random(args.seed)
        mismatches = 0
        variant = _variant(args.variant)
        for _ in range(args.oracle_sample):
            qubits = tuple(rng.randrange(code.n) for _ in range(args.lam))
            if cup_integral_direct(code, pos, qubits, variant) != int(
                circuit.coefficients[qubits]
            ):
                mismatches += 1
        report["oracle_sample"] = args.oracle_sample
        report["oracle_mismatches"] = mismatches
    _emit(report, args.out)


def cmd_distance(args) -> None:
    group, elements, code = _code_from_args(args)
    res = distance_exact_by_weight(code, args.wmax, budget=args.budget)
    report = {"n": code.n, "k": code.k, "status": res.status, "wmax": res.wmax}
    if res.distance is not None:
        report["d"] = res.distance
    if res.distance is None and args.trials:
        report["d_upper"] = distance_upper_randomized(code, args.trials, args.seed)
        report["trials"] = args.trials
    _emit(report, args.out)


def cmd_search(args) -> None:
    groups = tuple(_group(g) for g in args.group.split(";"))
    cfg = SearchConfig(
        groups=groups,
        weight=args.weight,
        lam=args.lam,
        variant=_variant(args.variant),
        product=args.product,
        wmax=args.wmax,
        trials=args.trials,
        seed=args.seed,
        max_classical_k=args.max_classical_k,
        min_k=args.min_k,
        min_d=args.min_d,
        require_nontrivial=args.nontrivial_only,
        label_policy=args.label_policy,
    )
    _emit([r.as_dict() for r in run_search(cfg)], args.out)


def cmd_verify_manifest(args) -> None:
    names = args.manifest or manifest_names()
    reports = []
    for name in names:
        for rep in verify_manifest(name, trials=args.trials, budget=args.budget):
            reports.append(
                {
                    "manifest": name,
                    "n": rep.row["n"],
                    "k": rep.row["k"],
                    "status": rep.status,
                    "details": rep.details,
                }
            )
    _emit(reports, args.out)
    if any(r["status"] == "fail" for r in reports):
        raise SystemExit(1)


def main(argv=None) -> None:
    parser = argparse.ArgumentParser(prog="copycup")
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, polys=True):
        p.add_argument("--group", required=True, help="comma-separated cyclic factor orders")
        if polys:
            p.add_argument(
                "--poly",
                action="append",
                required=True,
                help="one per factor: comma-separated terms, ':' between exponents",
            )
        p.add_argument("--product", default="balanced", choices=["balanced", "hypergraph"])
        p.add_argument("--lambda", dest="lam", type=int, default=2, choices=[2, 3])
        p.add_argument(
            "--variant",
            default="non_associative",
            choices=["non_associative", "symmetric", "outside_in"],
        )
        p.add_argument("--wmax", type=int, default=6)
        p.add_argument("--trials", type=int, default=0)
        p.add_argument("--seed", type=int, default=0)
        p.add_argument("--out", default="json", choices=["json", "csv"])

    p = sub.add_parser("build", help="build a product code and report parameters")
    common(p)
    p.set_defaults(func=cmd_build)

    p = sub.add_parser("orient", help="enumerate valid pre-orientations of an element")
    common(p)
    p.add_argument("--mode", default="oracle", choices=["oracle", "closed_form"])
    p.set_defaults(func=cmd_orient)

    p = sub.add_parser("configs", help="screen and enumerate matching configurations")
    p.add_argument("--signature", required=True, help="e.g. 2,4,0 for (|in|,|out|,|free|)")
    p.add_argument("--lambda", dest="lam", type=int, default=3, choices=[2, 3])
    p.add_argument(
        "--variant",
        default="non_associative",
        choices=["non_associative", "symmetric", "outside_in"],
    )
    p.add_argument("--verbose", action="store_true")
    p.add_argument("--out", default="json", choices=["json", "csv"])
    p.set_defaults(func=cmd_configs)

    p = sub.add_parser("synth", help="synthesize the copy-cup circuit as a gate list")
    common(p)
    p.set_defaults(func=cmd_synth)

    p = sub.add_parser("verify-gate", help="preservation and logical action of the circuit")
    common(p)
    p.add_argument("--oracle-sample", type=int, default=0, help="spot-check N gate exponents against the direct cup integral")
    p.set_defaults(func=cmd_verify_gate)

    p = sub.add_parser("distance", help="exact-by-weight and randomized distance bounds")
    common(p)
    p.add_argument("--budget", type=float, default=2e8)
    p.set_defaults(func=cmd_distance)

    p = sub.add_parser("search", help="sweep groups and weights for codes with gates")
    p.add_argument("--group", required=True, help="';'-separated groups, each comma-separated orders")
    p.add_argument("--weight", type=int, required=True)
    p.add_argument("--lambda", dest="lam", type=int, default=3, choices=[2, 3])
    p.add_argument(
        "--variant",
        default="symmetric",
        choices=["non_associative", "symmetric", "outside_in"],
    )
    p.add_argument("--product", default="balanced", choices=["balanced", "hypergraph"])
    p.add_argument("--wmax", type=int, default=6)
    p.add_argument("--trials", type=int, default=0)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--max-classical-k", type=int, default=None)
    p.add_argument("--min-k", type=int, default=1)
    p.add_argument("--min-d", type=int, default=0)
    p.add_argument("--nontrivial-only", action="store_true")
    p.add_argument("--label-policy", choices=["first", "any"], default="first")
    p.add_argument("--out", default="json", choices=["json", "csv"])
    p.set_defaults(func=cmd_search)

    p = sub.add_parser("verify-manifest", help="replay shipped result tables")
    p.add_argument("manifest", nargs="*", help="manifest names or paths (default: all shipped)")
    p.add_argument("--trials", type=int, default=None)
    p.add_argument("--budget", type=float, default=2e8)
    p.add_argument("--out", default="json", choices=["json", "csv"])
    p.set_defaults(func=cmd_verify_manifest)

    args = parser.parse_args(argv)
    args.func(args)


if __name__ == "__main__":
    main()
