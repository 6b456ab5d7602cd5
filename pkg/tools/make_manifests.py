"""Generate the shipped manifest JSON files from the published code tables.

Each row is rebuilt and its cheap claims (n, k, check weights) are verified
while freezing the manifests; distance and gate claims are checked later by
``copycup.search.verify_manifest`` and the test suite.
"""

import json
import pathlib
import re
import sys

sys.path.insert(0, str(pathlib.Path(__file__).resolve().parents[1] / "src"))

from copycup.complexes import build_product_code
from copycup.groups import FiniteGroup, element_from_spec

OUT = pathlib.Path(__file__).resolve().parents[1] / "src" / "copycup" / "manifests"
OUT.mkdir(exist_ok=True)

VARS = "xyz"


def poly(text: str, nvars: int) -> list[list[int]]:
    """Parse '1+x4y3+x8' style monomial sums into exponent vectors."""
    terms = []
    for mono in text.split("+"):
        mono = mono.strip()
        exps = [0] * nvars
        if mono != "1":
            for var, num in re.findall(r"([xyz])(\d*)", mono):
                exps[VARS.index(var)] = int(num) if num else 1
        terms.append(exps)
    return terms


def rows(group_orders, table, nontrivial, extra=None):
    out = []
    for entry in table:
        orders, n, k, d, polys, *rest = entry
        nvars = len(orders)
        row = {
            "group": {"orders": list(orders)},
            "polys": [poly(p, nvars) for p in polys],
            "n": n,
            "k": k,
            "d": d,
            "nontrivial": nontrivial,
        }
        if rest:
            row.update(rest[0])
        out.append(row)
    return out


WEIGHT3_CZ = [
    [(9, 4), 72, 8, 6, ["1", "x4", "x8"], ["1", "x2", "xy2"]],
    [(9, 4), 72, 4, 8, ["1", "x4y3", "x8y2"], ["1", "x5y2", "x7y"]],
    [(5, 3, 3), 90, 8, 6, ["1", "x2y", "x4y2"], ["1", "x3z2", "x4z"]],
    [(9, 5), 90, 4, 10, ["1", "x4y2", "x8y4"], ["1", "xy4", "x5y2"]],
    [(27, 2), 108, 12, 6, ["1", "x12", "x24"], ["1", "x3y", "x6"]],
    [(27, 2), 108, 4, 10, ["1", "x13y", "x26"], ["1", "x23", "x25y"]],
    [(9, 8), 144, 16, 6, ["1", "x4", "x8"], ["1", "xy4", "x2"]],
    [(9, 8), 144, 8, 8, ["1", "x4y6", "x8y4"], ["1", "x5y4", "x7y2"]],
    [(9, 8), 144, 4, 12, ["1", "x4y6", "x8y4"], ["1", "x4y7", "x8y6"]],
]

WEIGHT4_CZ = [
    [(8,), 16, 6, 4, ["1", "x", "x2", "x3"], ["1", "x", "x3", "x6"], {"signatures": [[2, 2, 0], [1, 1, 2]]}],
    [(3, 2, 2), 24, 2, 6, ["1", "x", "xy", "x2"], ["1", "x2", "x2y", "x2z"], {"signatures": [[1, 1, 2], [1, 3, 0]]}],
    [(4, 3), 24, 4, 5, ["1", "x2", "x3", "x3y2"], ["1", "xy", "x2y2", "x3"], {"signatures": [[3, 1, 0], [1, 1, 2]]}],
    [(5, 4), 40, 2, 8, ["1", "x4", "x4y2", "x4y3"], ["1", "x3", "x3y2", "x3y3"], {"signatures": [[1, 3, 0], [1, 3, 0]]}],
    [(5, 4), 40, 4, 7, ["1", "xy", "x3y3", "x4"], ["1", "y2", "y3", "x4y"], {"signatures": [[1, 1, 2], [3, 1, 0]]}],
    [(5, 4), 40, 6, 6, ["1", "y2", "y3", "x4y"], ["1", "y2", "y3", "x3y"], {"signatures": [[3, 1, 0], [3, 1, 0]]}],
    [(9, 4), 72, 6, 10, ["1", "y2", "y3", "x8y"], ["1", "x2y2", "x6y3", "x8y"], {"signatures": [[3, 1, 0], [2, 2, 0]]}],
    [(9, 4), 72, 8, 8, ["1", "x5y3", "x6y3", "x8"], ["1", "x5", "x6y", "x8y3"], {"signatures": [[2, 2, 0], [1, 1, 2]]}],
    [(9, 4), 72, 14, 6, ["1", "x5y2", "x6y2", "x8"], ["1", "y2", "y3", "x6y"], {"signatures": [[2, 2, 0], [3, 1, 0]]}],
    [(9, 8), 144, 4, 14, ["1", "x6", "x7y2", "x8y6"], ["1", "x2y7", "x6y", "x8"], {"signatures": [[1, 1, 2], [1, 1, 2]]}],
    [(9, 8), 144, 6, 12, ["1", "x6", "x7y2", "x8y6"], ["1", "x2y", "x6y6", "x8y7"], {"signatures": [[1, 1, 2], [2, 2, 0]]}],
    [(9, 8), 144, 8, 10, ["1", "x6", "x7y2", "x8y6"], ["1", "x8", "x8y2", "x8y6"], {"signatures": [[1, 1, 2], [1, 3, 0]]}],
    [(9, 8), 144, 12, 8, ["1", "x6", "x6y4", "x6y6"], ["1", "y7", "x6y4", "x6y5"], {"signatures": [[1, 3, 0], [1, 1, 2]]}],
]

# the published C_4 polynomial 1+x+x^2+x^4 reduces to x+x^2 in F2[C_4]
CUBE_TRIVIAL = [
    [(4,), 12, 3, 2, ["x", "x2"], ["x", "x2"], ["x", "x2"],
     {"nontrivial": True,
      "note": "published weight-4 polynomial 1+x+x2+x4 reduces to x+x2 over C_4; "
              "the reduced weight-2 element admits labelings whose CCZ acts "
              "non-trivially, so the flag here records the reduced element"}],
    [(7,), 21, 3, 3, ["1", "x", "x2", "x3"], ["1", "x", "x3", "x4"], ["1", "x2", "x3", "x5"]],
    [(11,), 33, 3, 4, ["1", "x", "x2", "x3"], ["1", "x", "x3", "x4"], ["1", "x2", "x4", "x6"]],
    [(13,), 39, 3, 5, ["1", "x", "x2", "x3"], ["1", "x", "x3", "x4"], ["1", "x2", "x5", "x7"]],
    [(21,), 63, 3, 6, ["1", "x", "x2", "x3"], ["1", "x", "x5", "x6"], ["1", "x2", "x8", "x10"]],
]

CUBE_CCZ = [
    [(2,), 6, 3, 2, ["1", "x"], ["1", "x"], ["1", "x"]],
    [(7,), 21, 3, 3, ["1", "x"], ["1", "x2"], ["1", "x3"]],
    [(14,), 42, 3, 4, ["1", "x"], ["1", "x3"], ["1", "x5"]],
    [(27,), 81, 3, 5, ["1", "x"], ["1", "x4"], ["1", "x10"]],
]

CUBE_CCZ_MULTIVAR = [
    [(3, 2, 2), 36, 3, 3, ["1", "xyz"], ["1", "x2z"], ["1", "x2y"]],
    [(4, 2, 2), 48, 3, 4, ["1", "x"], ["1", "xz"], ["1", "xy"]],
    [(5, 3, 2), 90, 3, 5, ["1", "x"], ["1", "xy"], ["1", "x2y2z"]],
]

NONTRIVIAL_LOGIC = [
    [(9,), 27, 9, 2, ["1", "x", "x3", "x4"], ["1", "x", "x6", "x7"], ["1", "x2", "x3", "x5"]],
]

MENON_CZ = [
    [(2, 2, 4), 48, 6, None, ["y", "z", "xz", "xyz2"], ["yz2", "yz3"], ["y", "xyz"]],
    [(2, 2, 7), 84, 6, None, ["y", "z", "xz", "xyz2"], ["z3", "xz4"], ["y", "yz4"]],
    [(3, 3, 4), 108, 6, None, ["x", "z2", "yz", "x2yz3"], ["y2z", "x2yz3"], ["x2", "x2yz2"]],
    [(4, 4, 5), 240, 6, None, ["xy2z3", "xy3z4", "x2y2z", "x2y3z2"], ["y3", "x2yz2"], ["xz4", "x3y3z"]],
    [(3, 3, 4), 108, 12, None, ["z", "xz3", "xyz2", "x2y"], ["y2", "y2z3", "xy2z", "xy2z2"], ["z", "xyz3"]],
    [(3, 4, 5), 180, 12, None, ["yz3", "y3", "x2yz3", "x2y3z"], ["xyz4", "xy2z2", "x2yz", "x2y2z4"], ["z4", "x2z"]],
    [(3, 3, 4), 108, 15, None, ["y", "y2z", "xyz3", "x2y2z2"], ["z2", "xy", "xy2z", "x2z3"], ["yz3", "y2z", "x2", "x2y2z2"]],
]


def table_rows(table, nontrivial):
    out = []
    for entry in table:
        orders, n, k, d = entry[0], entry[1], entry[2], entry[3]
        polys = [p for p in entry[4:] if isinstance(p, list)]
        extra = next((e for e in entry[4:] if isinstance(e, dict)), {})
        nvars = len(orders)
        row = {
            "group": {"orders": list(orders)},
            "polys": [poly_list(p, nvars) for p in polys],
            "n": n,
            "k": k,
            "d": d,
            "nontrivial": nontrivial,
        }
        row.update(extra)
        out.append(row)
    return out


def poly_list(strs, nvars):
    return poly("+".join(strs), nvars)


def freeze(name, manifest):
    # verify n, k and record the check-weight sets while freezing
    for row in manifest["rows"]:
        group = FiniteGroup(orders=tuple(row["group"]["orders"]))
        els = [element_from_spec(group, p) for p in row["polys"]]
        code = build_product_code(els, manifest.get("product", "balanced"))
        assert code.n == row["n"], (name, row["n"], code.n)
        assert code.k == row["k"], (name, row["k"], code.k)
        xw = sorted({int(code.hx.row(i).sum()) for i in range(code.hx.rows)})
        zw = sorted({int(code.hz.row(i).sum()) for i in range(code.hz.rows)})
        row["check_weights"] = [xw, zw]
    path = OUT / f"{name}.json"
    path.write_text(json.dumps(manifest, indent=1) + "\n")
    print("wrote", path)


freeze("square_cz_weight3", {
    "table": "balanced squares of weight-3 elements with non-trivial CZ",
    "lambda": 2, "variant": "non_associative", "product": "balanced",
    "gates": "cz", "rows": table_rows(WEIGHT3_CZ, True),
})
freeze("square_cz_weight4", {
    "table": "balanced squares of weight-4 elements with non-trivial CZ",
    "lambda": 2, "variant": "non_associative", "product": "balanced",
    "gates": "cz", "rows": table_rows(WEIGHT4_CZ, True),
})
freeze("cube_trivial_ccz", {
    "table": "cubes of weight-4 cyclic elements: pre-orientation valid, CCZ acts trivially",
    "lambda": 3, "variant": "symmetric", "product": "balanced",
    "gates": "ccz", "rows": table_rows(CUBE_TRIVIAL, False),
})
freeze("cube_ccz", {
    "table": "cubes of weight-2 cyclic elements with non-trivial CCZ",
    "lambda": 3, "variant": "symmetric", "product": "balanced",
    "gates": "ccz", "rows": table_rows(CUBE_CCZ, True),
})
freeze("cube_ccz_multivariate", {
    "table": "cubes of weight-2 multivariate elements with non-trivial CCZ",
    "lambda": 3, "variant": "symmetric", "product": "balanced",
    "gates": "ccz", "rows": table_rows(CUBE_CCZ_MULTIVAR, True),
})
freeze("cube_ccz_weight4", {
    "table": "weight-4 cube code with non-trivial CCZ from the order 2..16 sweep",
    "lambda": 3, "variant": "symmetric", "product": "balanced",
    "gates": "ccz", "rows": table_rows(NONTRIVIAL_LOGIC, True),
})
freeze("menon_cz", {
    "table": "trivariate tricycle codes: CZ on pairs of cube codes (out of scope)",
    "lambda": 2, "variant": "non_associative", "product": "balanced",
    "gates": "out-of-scope", "rows": table_rows(MENON_CZ, True),
})
