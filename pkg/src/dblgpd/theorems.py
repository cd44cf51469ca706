"""The main comparison results, run over the standard catalog.

Every section is exhaustive at its stated truncation and the whole report
is plain JSON with sorted keys, so two runs give identical bytes.
"""
from __future__ import annotations

import json

from . import catalog as C
from . import categories as cat
from . import simplicial as S
from .bisimplicial import dec
from .core import check_filling, check_filling_variants
from .doublenerve import equivalence_suite, homotopy_comparison, unique_filler_check
from .groups import parse_group
from .reflection import round_trip, verify_2type

UNIQUE_FILLER_CASES = ("Ab(Z/2)", "Deloop(Z/2)", "Pair(0,1)")
TWO_TYPE_GROUPS = ("Z/2", "Z/3")


def filling_entries(catalog: dict) -> dict:
    return {k: g for k, g in catalog.items()
            if g.validation.is_double_groupoid and check_filling(g).ok}


def axioms_section(catalog: dict) -> dict:
    out = {}
    for name, g in catalog.items():
        v = g.validation
        fill = check_filling(g)
        out[name] = {"double_category": v.is_double_category, "groupoid": v.is_groupoid,
                     "violations": len(v.violations), "filling": fill.ok,
                     "variants_agree": check_filling_variants(g) == fill.ok}
    return out


def equivalence_section(catalog: dict) -> dict:
    return {name: equivalence_suite(g).to_json() for name, g in catalog.items()}


def unique_filler_section() -> dict:
    out = {}
    for name in UNIQUE_FILLER_CASES:
        out[name] = unique_filler_check(C.build(name), 3)
    return out


def homotopy_section(catalog: dict) -> dict:
    return {name: homotopy_comparison(g).to_json() for name, g in filling_entries(catalog).items()}


def round_trip_section(catalog: dict) -> dict:
    return {name: round_trip(g).to_json() for name, g in filling_entries(catalog).items()}


def two_type_section() -> dict:
    out = {}
    for gname in TWO_TYPE_GROUPS:
        G = parse_group(gname)
        K = dec(S.nerve(cat.from_group(G)))
        rep = verify_2type(K, f"Dec(N({gname}))")
        rep["group_order"] = G.order
        rep["pi1_matches_group"] = all(b["pi1_order"] == G.order for b in rep["bases"].values())
        rep["pi2_trivial"] = all(b["pi2_order"] == 1 for b in rep["bases"].values())
        rep["connected"] = len(rep["pi0"]["pp"]) == 1
        out[gname] = rep
    return out


def run() -> dict:
    catalog = C.standard_catalog()
    rep = {
        "axioms": axioms_section(catalog),
        "equivalence": equivalence_section(catalog),
        "unique_fillers": unique_filler_section(),
        "homotopy_groups": homotopy_section(catalog),
        "round_trip": round_trip_section(catalog),
        "two_types": two_type_section(),
    }
    rep["ok"] = {
        "equivalence": all(r["agree"] for r in rep["equivalence"].values()),
        "unique_fillers": all(rep["unique_fillers"].values()),
        "homotopy_groups": all(r["ok"] for r in rep["homotopy_groups"].values()),
        "round_trip": all(r["ok"] for r in rep["round_trip"].values()),
        "two_types": all(r["ok"] and r["pi1_matches_group"] and r["pi2_trivial"] and r["connected"]
                         for r in rep["two_types"].values()),
    }
    rep["all_ok"] = all(rep["ok"].values())
    return rep


def dumps(rep: dict) -> str:
    return json.dumps(rep, sort_keys=True, indent=2, default=str)
