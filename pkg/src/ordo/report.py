"""Reproduction harness: recompute every reference claim and compare.

Each entry pins one claim from the bundled reference data as an
(expected, computed) string pair; the two are equal exactly when the
claim checks out.  Two entries are permanently marked as known
discrepancies in the reference data itself (the greedy (3,2) linear
form and the (3,4) cycle count); they are reported as
"flagged-discrepancy", never as a plain match, and never fail a run.

Entries are grouped in tiers: "quick" entries always run, "default"
adds the minute-scale recomputations, and "long" adds the stretch
searches.  Results come out as a fixed-width table and as JSON that is
byte-identical between runs with the same flags, apart from the
timestamp and the runtime fields.
"""

from __future__ import annotations

import concurrent.futures
import json
import os
import random
import time
from dataclasses import dataclass
from datetime import datetime, timezone
from typing import Callable

from .debruijn import (
    DBParams,
    arc_conflict,
    count_hamiltonian_cycles,
    de_bruijn_graph,
    enumerate_hamiltonian_cycles,
    martin,
    max_disjoint_exact,
    max_disjoint_upper_bound,
    pairwise_arc_disjoint,
    rotation_family,
    sigma,
    underlying_simple_graph,
    word_decode,
    word_encode,
    word_of_vertex,
)
from .graphs import (
    all_tournaments,
    find_clique,
    find_independent_set,
    max_edges_without_clique_oracle,
    random_tournament,
)
from .ramsey import (
    KNOWN_VALUE_RANGE,
    andrasfai_graph,
    diagonal_lower_bound,
    erdos_szekeres_bound,
    erdos_triangle_multicolor_bound,
    exhaustive_ramsey_check,
    k17_mod3_coloring,
    known_value,
    multicolor_multinomial_bound,
    recurrence_upper_bound,
    verify_coloring,
)
from .redei import (
    ArcQueryCounter,
    count_hamiltonian_paths_oracle,
    is_hamiltonian_path,
    redei_hamiltonian_path,
)
from .seedsearch import append_seed_cache, cached_seeds, rotation_seed_search
from .turan import turan_extremal_graph, turan_max_edges, turan_params

__all__ = ["ReportEntry", "Report", "reproduce_all", "render_table", "CACHE_DIR_ENV"]

CACHE_DIR_ENV = "ORDO_CACHE_DIR"

TIERS = ("quick", "default", "long")

STATUS_MATCH = "match"
STATUS_MISMATCH = "mismatch"
STATUS_FLAGGED = "flagged-discrepancy"
STATUS_SKIPPED = "skipped"

# reference cycle list for B(3,2), row-major as published
REFERENCE_CYCLES_3_2 = (
    "0010211220 0020122110 0010221120 0020112210 0011021220 0022012110 "
    "0011022120 0022011210 0011202210 0022101120 0011210220 0022120110 "
    "0011220210 0022110120 0011221020 0022112010 0012022110 0021011220 "
    "0012110220 0021220110 0012202110 0021101220 0012211020 0021122010"
).split()

REFERENCE_CYCLES_2_3 = ("0001011100", "0001110100")

REFERENCE_BLOCK_5_2 = (
    "00102112041422430332313440",
    "00203223012133140443424110",
    "00304334023244210114131220",
    "00401441034311320221242330",
)

REFERENCE_SEEDS = {
    (3, 2): ("0011220210", "0021011220"),
    (3, 3): ("00010021011022202012111221200",),
    (4, 2): ("00102113230331220", "00102313033211220"),
    (4, 3): (
        "000100210110201202310301311121130221232031323003332133122330322200",
        "000100210110201202310301311121130223323003132123203330322213312200",
    ),
    (5, 2): ("00102112041422430332313440",),
    (6, 2): ("0010211204131403325235505154534422430",),
    (7, 2): ("00102112041306140315055162252353436442463326545660",),
}

# K_17 monochromatic triangles, 1-based labels as published
REFERENCE_K17_TRIANGLES = {0: (3, 9, 15), 1: (5, 11, 17), 2: (4, 10, 16)}


@dataclass
class ReportEntry:
    claim: str
    tier: str
    expected: str
    computed: str
    status: str
    runtime_seconds: float


@dataclass
class Report:
    generated_at: str
    tier: str
    seed: int
    entries: list[ReportEntry]

    def counts(self) -> dict[str, int]:
        out = {
            STATUS_MATCH: 0,
            STATUS_MISMATCH: 0,
            STATUS_FLAGGED: 0,
            STATUS_SKIPPED: 0,
        }
        for e in self.entries:
            out[e.status] += 1
        return out

    @property
    def exit_code(self) -> int:
        counts = self.counts()
        if counts[STATUS_MISMATCH]:
            return 1
        if counts[STATUS_SKIPPED]:
            return 3
        return 0

    def to_json(self) -> str:
        doc = {
            "generated_at": self.generated_at,
            "tier": self.tier,
            "seed": self.seed,
            "entries": [
                {
                    "claim": e.claim,
                    "tier": e.tier,
                    "expected": e.expected,
                    "computed": e.computed,
                    "status": e.status,
                    "runtime_seconds": round(e.runtime_seconds, 3),
                }
                for e in self.entries
            ],
            "summary": self.counts(),
            "exit_code": self.exit_code,
        }
        return json.dumps(doc, indent=2, sort_keys=True) + "\n"


# --- registry -------------------------------------------------------------

_REGISTRY: list[tuple[str, str, bool, Callable[[int], tuple]]] = []
_BY_CLAIM: dict[str, tuple[str, bool, Callable[[int], tuple]]] = {}


def _entry(claim: str, tier: str, flagged: bool = False):
    def wrap(fn: Callable[[int], tuple]):
        _REGISTRY.append((claim, tier, flagged, fn))
        _BY_CLAIM[claim] = (tier, flagged, fn)
        return fn

    return wrap


def _sweep(expected: str, failures: list[str]) -> tuple[str, str]:
    return expected, expected if not failures else "; ".join(failures)


# --- greedy construction --------------------------------------------------


@_entry("martin linear form (2,1)", "quick")
def _martin_2_1(seed: int) -> tuple[str, str]:
    return "01", word_encode(martin(DBParams(2, 1)))


@_entry("martin linear form (2,3)", "quick")
def _martin_2_3(seed: int) -> tuple[str, str]:
    return "0001110100", word_encode(martin(DBParams(2, 3)))


@_entry("martin linear form (3,2)", "quick", flagged=True)
def _martin_3_2(seed: int) -> tuple[str, str]:
    # the reference prints 0022112010; the greedy rule itself yields
    # 0022120110 (window 12 is still fresh after 00221), so this entry
    # stays a flagged discrepancy of the reference data
    return "0022112010", word_encode(martin(DBParams(3, 2)))


@_entry("greedy cycle is never a rotation seed", "quick")
def _martin_never_seed(seed: int) -> tuple[str, str]:
    expected = "(3,2), (3,3), (4,2): every greedy family shares arcs"
    failures = []
    for n, m in ((3, 2), (3, 3), (4, 2)):
        family = rotation_family(martin(DBParams(n, m)))
        if pairwise_arc_disjoint(family):
            failures.append(f"greedy ({n},{m}) family is arc-disjoint")
    return _sweep(expected, failures)


# --- graph shape ----------------------------------------------------------


@_entry("de bruijn census (2,3)", "quick")
def _census_2_3(seed: int) -> tuple[str, str]:
    d = de_bruijn_graph(DBParams(2, 3))
    return (
        "8 vertices, 16 arcs, 2 loops",
        f"{d.vertex_count} vertices, {d.arc_count} arcs, {len(d.loops())} loops",
    )


@_entry("de bruijn census (3,2)", "quick")
def _census_3_2(seed: int) -> tuple[str, str]:
    d = de_bruijn_graph(DBParams(3, 2))
    return (
        "9 vertices, 27 arcs, 3 loops",
        f"{d.vertex_count} vertices, {d.arc_count} arcs, {len(d.loops())} loops",
    )


@_entry("flower view (3,2)", "quick")
def _flower_3_2(seed: int) -> tuple[str, str]:
    g = underlying_simple_graph(DBParams(3, 2))
    return "9 vertices, 21 edges", f"{g.vertex_count} vertices, {g.edge_count} edges"


# --- cycle enumeration and counting ---------------------------------------


@_entry("cycle enumeration (3,2)", "quick")
def _enum_3_2(seed: int) -> tuple[str, str]:
    expected = "the 24 reference cycles, in lexicographic order"
    words = [word_encode(w) for w in enumerate_hamiltonian_cycles(DBParams(3, 2))]
    failures = []
    if words != sorted(words):
        failures.append("emission order is not sorted")
    missing = sorted(set(REFERENCE_CYCLES_3_2) - set(words))
    extra = sorted(set(words) - set(REFERENCE_CYCLES_3_2))
    if missing:
        failures.append(f"missing: {', '.join(missing)}")
    if extra:
        failures.append(f"unexpected: {', '.join(extra)}")
    return _sweep(expected, failures)


@_entry("cycle enumeration (2,3)", "quick")
def _enum_2_3(seed: int) -> tuple[str, str]:
    words = [word_encode(w) for w in enumerate_hamiltonian_cycles(DBParams(2, 3))]
    return " and ".join(REFERENCE_CYCLES_2_3), " and ".join(words)


@_entry("cycle count formula, small cases", "quick")
def _count_small(seed: int) -> tuple[str, str]:
    reference = {(2, 2): 1, (2, 3): 2, (3, 2): 24, (2, 4): 16}
    expected = "(2,2): 1, (2,3): 2, (3,2): 24, (2,4): 16; formula = enumeration"
    failures = []
    for (n, m), want in reference.items():
        params = DBParams(n, m)
        formula = count_hamiltonian_cycles(params)
        enumerated = sum(1 for _ in enumerate_hamiltonian_cycles(params))
        if formula != want or enumerated != want:
            failures.append(f"({n},{m}): formula {formula}, enumeration {enumerated}")
    return _sweep(expected, failures)


@_entry("cycle count formula (3,3)", "default")
def _count_3_3(seed: int) -> tuple[str, str]:
    expected = "373248 cycles; formula = enumeration"
    formula = count_hamiltonian_cycles(DBParams(3, 3))
    enumerated = sum(1 for _ in enumerate_hamiltonian_cycles(DBParams(3, 3)))
    if formula == enumerated == 373248:
        return expected, expected
    return expected, f"formula {formula}, enumeration {enumerated}"


@_entry("cycle count formula (3,4)", "quick", flagged=True)
def _count_3_4(seed: int) -> tuple[str, str]:
    # the reference table prints 13824 * 10077696^3, which is not what
    # the closed form gives; both full values on record
    expected = f"13824 * 10077696^3 = {13824 * 10077696**3}"
    computed = f"(3!)^(3^3) / 3^4 = {count_hamiltonian_cycles(DBParams(3, 4))}"
    return expected, computed


# --- letter rotation ------------------------------------------------------


@_entry("letter rotation is an automorphism (3,2)", "quick")
def _sigma_3_2(seed: int) -> tuple[str, str]:
    expected = "every image is a reference cycle; applying twice is the identity"
    failures = []
    reference = set(REFERENCE_CYCLES_3_2)
    for text in REFERENCE_CYCLES_3_2:
        w = word_decode(text, DBParams(3, 2))
        image = sigma(w)
        if word_encode(image) not in reference:
            failures.append(f"image of {text} not a cycle on record")
        if word_encode(sigma(image)) != text:
            failures.append(f"rotation squared moves {text}")
    return _sweep(expected, failures)


@_entry("shared arcs of the reference pair (3,2)", "quick")
def _shared_arcs(seed: int) -> tuple[str, str]:
    params = DBParams(3, 2)
    a = word_decode("0010211220", params)
    b = word_decode("0020122110", params)
    conflict = arc_conflict([a, b])
    if conflict is None:
        return "12->22 and 21->11", "no shared arcs"
    names = sorted(
        f"{word_of_vertex(u, params)}->{word_of_vertex(v, params)}"
        for u, v in conflict.shared
    )
    return "12->22 and 21->11", " and ".join(names)


@_entry("rotation family of 0011220210", "quick")
def _family_3_2(seed: int) -> tuple[str, str]:
    expected = "0011220210 and 0022110120, pairwise arc-disjoint"
    family = rotation_family(word_decode("0011220210", DBParams(3, 2)))
    words = " and ".join(word_encode(w) for w in family)
    if pairwise_arc_disjoint(family):
        return expected, f"{words}, pairwise arc-disjoint"
    return expected, f"{words}, sharing arcs"


@_entry("rotation family of the (5,2) reference seed", "quick")
def _family_5_2(seed: int) -> tuple[str, str]:
    expected = "the 4 reference cycles, pairwise arc-disjoint"
    family = rotation_family(word_decode(REFERENCE_BLOCK_5_2[0], DBParams(5, 2)))
    failures = []
    if tuple(word_encode(w) for w in family) != REFERENCE_BLOCK_5_2:
        failures.append("family differs from the reference block")
    if not pairwise_arc_disjoint(family):
        failures.append("family shares arcs")
    return _sweep(expected, failures)


# --- arc-disjoint maxima --------------------------------------------------


@_entry("max arc-disjoint families, exact (3,2)", "quick")
def _disjoint_3_2(seed: int) -> tuple[str, str]:
    expected = "2 cycles, meeting the n-1 bound"
    size, witness = max_disjoint_exact(DBParams(3, 2))
    bound = max_disjoint_upper_bound(3)
    if size == bound == 2 and pairwise_arc_disjoint(witness):
        return expected, expected
    return expected, f"size {size}, bound {bound}"


@_entry("max arc-disjoint families, exact (2,3)", "quick")
def _disjoint_2_3(seed: int) -> tuple[str, str]:
    expected = "1 cycle, meeting the n-1 bound"
    size, witness = max_disjoint_exact(DBParams(2, 3))
    bound = max_disjoint_upper_bound(2)
    if size == bound == 1 and pairwise_arc_disjoint(witness):
        return expected, expected
    return expected, f"size {size}, bound {bound}"


# --- seed searches --------------------------------------------------------


def _cache_path(params: DBParams) -> str | None:
    root = os.environ.get(CACHE_DIR_ENV)
    if not root:
        return None
    os.makedirs(root, exist_ok=True)
    return os.path.join(root, f"seeds_{params.n}_{params.m}.jsonl")


def _full_tree_search(n: int, m: int, expected_total: int) -> tuple[str, str]:
    params = DBParams(n, m)
    listed = REFERENCE_SEEDS[(n, m)]
    expected = f"{expected_total} words, including both reference seeds"
    result = rotation_seed_search(params, find_all=True)
    found = [word_encode(w) for w in result.seeds]
    failures = []
    if len(found) != expected_total:
        failures.append(f"{len(found)} words")
    for text in listed:
        if text not in found:
            failures.append(f"missing {text}")
    return _sweep(expected, failures)


@_entry("seed search (3,2), full tree", "quick")
def _seeds_3_2(seed: int) -> tuple[str, str]:
    return _full_tree_search(3, 2, 4)


@_entry("seed search (4,2), full tree", "quick")
def _seeds_4_2(seed: int) -> tuple[str, str]:
    return _full_tree_search(4, 2, 288)


def _first_seed_search(n: int, m: int) -> tuple[str, str]:
    params = DBParams(n, m)
    listed = REFERENCE_SEEDS[(n, m)][0]
    expected = "the reference seed, found first"
    result = rotation_seed_search(params, find_all=False)
    if not result.seeds:
        return expected, "no seed found"
    first = word_encode(result.seeds[0])
    return expected, expected if first == listed else f"found {first} first"


@_entry("seed search (5,2), first seed", "default")
def _seeds_5_2(seed: int) -> tuple[str, str]:
    return _first_seed_search(5, 2)


@_entry("seed search (3,3), first seed", "long")
def _seeds_3_3(seed: int) -> tuple[str, str]:
    return _first_seed_search(3, 3)


@_entry("seed search (6,2), first seed", "long")
def _seeds_6_2(seed: int) -> tuple[str, str]:
    return _first_seed_search(6, 2)


@_entry("seed search (4,3), both reference seeds", "long")
def _seeds_4_3(seed: int) -> tuple[str, str]:
    params = DBParams(4, 3)
    listed = set(REFERENCE_SEEDS[(4, 3)])
    expected = "both reference seeds among the first 18 completing words"
    have: set[str] = set()

    def on_seed(w, nodes):
        have.add(word_encode(w))
        return listed <= have

    result = rotation_seed_search(
        params, find_all=True, time_budget=1800, on_seed=on_seed
    )
    if listed <= have and len(result.seeds) == 18:
        return expected, expected
    missing = sorted(listed - have)
    if missing:
        return expected, f"missing: {', '.join(missing)}"
    return expected, f"found after {len(result.seeds)} words"


@_entry("seed validity (7,2)", "long")
def _seed_valid_7_2(seed: int) -> tuple[str, str]:
    expected = "the reference word is a rotation seed (6 disjoint cycles)"
    family = rotation_family(word_decode(REFERENCE_SEEDS[(7, 2)][0], DBParams(7, 2)))
    if len(family) == 6 and pairwise_arc_disjoint(family):
        return expected, expected
    return expected, "family is not arc-disjoint"


@_entry("seed search (7,2), stretch", "long")
def _seeds_7_2(seed: int) -> tuple[str, str] | tuple[str, str, str]:
    # lexicographic frontier is far out; cache progress is seed-based,
    # so an unfinished run can only report how far it got
    params = DBParams(7, 2)
    listed = REFERENCE_SEEDS[(7, 2)][0]
    expected = "the reference seed found within the stretch budget"
    cache = _cache_path(params)
    have: list[str] = []
    resume = None
    if cache is not None and os.path.exists(cache):
        have = cached_seeds(cache, params)
        if have:
            resume = word_decode(have[-1], params)
    if listed in have:
        return expected, expected

    def on_seed(w, nodes):
        text = word_encode(w)
        have.append(text)
        if cache is not None:
            append_seed_cache(cache, w, nodes)
        return text == listed

    result = rotation_seed_search(
        params,
        find_all=True,
        time_budget=900,
        resume_after=resume,
        on_seed=on_seed,
    )
    if listed in have:
        return expected, expected
    if result.budget_exhausted:
        return (
            expected,
            f"budget exhausted after {result.nodes_explored} nodes; not refuted",
            STATUS_SKIPPED,
        )
    return expected, f"tree exhausted without the reference seed ({len(have)} words)"


# --- ramsey ---------------------------------------------------------------


@_entry("ramsey check (3,3): K_5 no, K_6 yes", "quick")
def _ramsey_3_3(seed: int) -> tuple[str, str]:
    expected = "counterexample on K_5 verified; K_6 forced"
    failures = []
    holds5, cx5 = exhaustive_ramsey_check(3, 3, 5)
    if holds5 or cx5 is None or verify_coloring(cx5, (3, 3)) is not None:
        failures.append("K_5 check broken")
    holds6, cx6 = exhaustive_ramsey_check(3, 3, 6)
    if not holds6 or cx6 is not None:
        failures.append("K_6 not forced")
    return _sweep(expected, failures)


@_entry("ramsey check (3,4): K_8 no, K_9 yes", "quick")
def _ramsey_3_4(seed: int) -> tuple[str, str]:
    expected = "counterexample on K_8 verified; K_9 forced"
    failures = []
    holds8, cx8 = exhaustive_ramsey_check(3, 4, 8)
    if holds8 or cx8 is None or verify_coloring(cx8, (3, 4)) is not None:
        failures.append("K_8 check broken")
    holds9, cx9 = exhaustive_ramsey_check(3, 4, 9)
    if not holds9 or cx9 is not None:
        failures.append("K_9 not forced")
    return _sweep(expected, failures)


@_entry("triangle-free circulant H_8", "quick")
def _h8(seed: int) -> tuple[str, str]:
    expected = "8 vertices, 12 edges, 3-regular, no triangle, no 4 independent"
    g = andrasfai_graph(3)
    failures = []
    if g.vertex_count != 8 or g.edge_count != 12:
        failures.append(f"{g.vertex_count} vertices, {g.edge_count} edges")
    if any(g.degree(v) != 3 for v in range(g.vertex_count)):
        failures.append("not 3-regular")
    if find_clique(g, 3) is not None:
        failures.append("triangle present")
    if find_independent_set(g, 4) is not None:
        failures.append("4 independent vertices")
    return _sweep(expected, failures)


@_entry("circulant family H_2 .. H_14", "quick")
def _andrasfai_family(seed: int) -> tuple[str, str]:
    expected = "k = 1..5 all triangle-free without k+1 independent; bounds consistent"
    failures = []
    for k in range(1, 6):
        g = andrasfai_graph(k)
        if g.vertex_count != 3 * k - 1:
            failures.append(f"H_{3 * k - 1} has {g.vertex_count} vertices")
        if find_clique(g, 3) is not None:
            failures.append(f"H_{3 * k - 1} has a triangle")
        if find_independent_set(g, k + 1) is not None:
            failures.append(f"H_{3 * k - 1} has {k + 1} independent vertices")
        if k + 1 >= KNOWN_VALUE_RANGE[0] and 3 * k > known_value(3, k + 1).lower:
            failures.append(f"certificate exceeds the reference bound at k = {k}")
    return _sweep(expected, failures)


@_entry("reference bounds table", "quick")
def _bounds_table(seed: int) -> tuple[str, str]:
    expected = "36 entries, symmetric, lower <= upper <= recurrence <= binomial"
    failures = []
    lo_lim, hi_lim = KNOWN_VALUE_RANGE
    entries = 0
    for m in range(lo_lim, hi_lim + 1):
        for k in range(m, hi_lim + 1):
            entries += 1
            b = known_value(m, k)
            mirrored = known_value(k, m)
            if (mirrored.lower, mirrored.upper) != (b.lower, b.upper):
                failures.append(f"asymmetry at ({m},{k})")
            chain = (
                b.lower <= b.upper <= recurrence_upper_bound(m, k) <= erdos_szekeres_bound(m, k)
            )
            if not chain:
                failures.append(f"bound chain broken at ({m},{k})")
    if entries != 36:
        failures.append(f"{entries} entries")
    return _sweep(expected, failures)


@_entry("recurrence bound at (3,4)", "quick")
def _rec_3_4(seed: int) -> tuple[str, str]:
    return (
        "recurrence 9, binomial 10",
        f"recurrence {recurrence_upper_bound(3, 4)}, binomial {erdos_szekeres_bound(3, 4)}",
    )


@_entry("triangle bounds, many colors", "quick")
def _triangle_bounds(seed: int) -> tuple[str, str]:
    return (
        "r = 2: 6, r = 3: 17; multinomial (3,3): 6, (3,3,3): 90",
        "r = 2: {}, r = 3: {}; multinomial (3,3): {}, (3,3,3): {}".format(
            erdos_triangle_multicolor_bound(2),
            erdos_triangle_multicolor_bound(3),
            multicolor_multinomial_bound((3, 3)),
            multicolor_multinomial_bound((3, 3, 3)),
        ),
    )


@_entry("probabilistic diagonal bound", "quick")
def _diagonal(seed: int) -> tuple[str, str]:
    expected = "2^(k/2) below the reference lower bound for k = 3..10"
    failures = []
    for k in range(3, 11):
        if diagonal_lower_bound(k) > known_value(k, k).lower:
            failures.append(f"2^({k}/2) exceeds the reference at k = {k}")
    return _sweep(expected, failures)


@_entry("combined bounds for R(3,k)", "quick")
def _combined_3_k(seed: int) -> tuple[str, str]:
    expected = "3(k-1) <= lower and upper <= k(k+1)/2 for k = 3..10"
    failures = []
    for k in range(3, 11):
        b = known_value(3, k)
        if not (3 * (k - 1) <= b.lower and b.upper <= k * (k + 1) // 2):
            failures.append(f"violated at k = {k}")
    return _sweep(expected, failures)


@_entry("three-colored K_17", "quick")
def _k17(seed: int) -> tuple[str, str]:
    expected = "reference triangles monochromatic; every class has one"
    col = k17_mod3_coloring()
    failures = []
    for color, labels in REFERENCE_K17_TRIANGLES.items():
        a, b, c = (x - 1 for x in labels)
        if not (
            col.color_of(a, b) == col.color_of(a, c) == col.color_of(b, c) == color
        ):
            failures.append(f"triangle {labels} not in color {color}")
    for color in range(3):
        if find_clique(col.color_class(color), 3) is None:
            failures.append(f"color {color} has no triangle")
    if verify_coloring(col, (3, 3, 3)) is None:
        failures.append("verifier found no witness")
    return _sweep(expected, failures)


# --- extremal clique-free graphs ------------------------------------------


@_entry("clique-free maxima: formula vs oracle", "quick")
def _turan_oracle(seed: int) -> tuple[str, str]:
    expected = "formula = oracle for all 1 <= k <= n <= 7"
    failures = []
    for n in range(1, 8):
        for k in range(1, n + 1):
            formula = turan_max_edges(n, k)
            oracle = max_edges_without_clique_oracle(n, k)
            if formula != oracle:
                failures.append(f"({n},{k}): formula {formula}, oracle {oracle}")
    return _sweep(expected, failures)


def _is_complete_multipartite(g, part_sizes: list[int]) -> bool:
    part = []
    for i, size in enumerate(part_sizes):
        part.extend([i] * size)
    if len(part) != g.vertex_count:
        return False
    for u in range(g.vertex_count):
        for v in range(u + 1, g.vertex_count):
            if g.has_edge(u, v) != (part[u] != part[v]):
                return False
    return True


@_entry("extremal graph examples", "quick")
def _turan_examples(seed: int) -> tuple[str, str]:
    expected = "(5,2): 6 edges K_{3,2}; (7,3): 16 edges K_{3,2,2}; (13,4): 63 edges K_{4,3,3,3}"
    cases = {(5, 2): (6, [3, 2]), (7, 3): (16, [3, 2, 2]), (13, 4): (63, [4, 3, 3, 3])}
    failures = []
    for (n, k), (edges, parts) in cases.items():
        g = turan_extremal_graph(n, k)
        if turan_max_edges(n, k) != edges or g.edge_count != edges:
            failures.append(f"({n},{k}): {g.edge_count} edges")
        if turan_params(n, k).part_sizes() != parts:
            failures.append(f"({n},{k}): parts {turan_params(n, k).part_sizes()}")
        if not _is_complete_multipartite(g, parts):
            failures.append(f"({n},{k}): structure broken")
        if find_clique(g, k + 1) is not None:
            failures.append(f"({n},{k}): contains K_{k + 1}")
    return _sweep(expected, failures)


@_entry("extremal graphs to n = 50", "quick")
def _turan_sweep(seed: int) -> tuple[str, str]:
    expected = "edge counts and structure match for n <= 50; formula integral to n = 200"
    failures = []
    for n in range(1, 51):
        for k in range(1, n + 1):
            g = turan_extremal_graph(n, k)
            if g.edge_count != turan_max_edges(n, k):
                failures.append(f"({n},{k}): edge count off")
            # complete k-partite implies no K_{k+1} by pigeonhole
            elif not _is_complete_multipartite(g, turan_params(n, k).part_sizes()):
                failures.append(f"({n},{k}): structure broken")
    for n in range(1, 201):
        for k in range(1, n + 1):
            turan_max_edges(n, k)  # the integrality assertion runs inside
    return _sweep(expected, failures)


# --- tournament paths -----------------------------------------------------


@_entry("insertion path, random tournaments", "quick")
def _redei_random(seed: int) -> tuple[str, str]:
    expected = "1000 tournaments, n in 2..100: every path valid"
    rng = random.Random(seed)
    failures = []
    for i in range(1000):
        n = rng.randint(2, 100)
        t = random_tournament(n, rng)
        if not is_hamiltonian_path(t, redei_hamiltonian_path(t)):
            failures.append(f"invalid path at trial {i} (n = {n})")
            break
    return _sweep(expected, failures)


@_entry("insertion path, all small tournaments", "quick")
def _redei_exhaustive(seed: int) -> tuple[str, str]:
    expected = "n = 0..5, all 1100 tournaments: every path valid"
    failures = []
    total = 0
    for n in range(6):
        for t in all_tournaments(n):
            total += 1
            if not is_hamiltonian_path(t, redei_hamiltonian_path(t)):
                failures.append(f"invalid path on {n} vertices")
    if total != 1100:
        failures.append(f"{total} tournaments enumerated")
    return _sweep(expected, failures)


@_entry("hamiltonian path counts are odd", "quick")
def _redei_odd(seed: int) -> tuple[str, str]:
    expected = "exhaustive n <= 5; 100 samples each at n = 6, 7: all counts odd"
    failures = []
    for n in range(6):
        for t in all_tournaments(n):
            if count_hamiltonian_paths_oracle(t) % 2 == 0:
                failures.append(f"even count on {n} vertices")
                break
    rng = random.Random(seed)
    for n in (6, 7):
        for _ in range(100):
            t = random_tournament(n, rng)
            if count_hamiltonian_paths_oracle(t) % 2 == 0:
                failures.append(f"even count on {n} vertices")
                break
    return _sweep(expected, failures)


@_entry("reference tournament examples", "quick")
def _redei_examples(seed: int) -> tuple[str, str]:
    expected = "cyclic triangle: 3 paths; transitive order: 1 path"
    failures = []
    cyclic = _cyclic_triangle()
    if count_hamiltonian_paths_oracle(cyclic) != 3:
        failures.append("cyclic triangle count off")
    if not is_hamiltonian_path(cyclic, redei_hamiltonian_path(cyclic)):
        failures.append("invalid path on the cyclic triangle")
    trans = _transitive_tournament(6)
    if count_hamiltonian_paths_oracle(trans) != 1:
        failures.append("transitive count off")
    if redei_hamiltonian_path(trans) != list(range(6)):
        failures.append("transitive path is not the sorted order")
    return _sweep(expected, failures)


@_entry("arc queries stay quadratic", "quick")
def _redei_queries(seed: int) -> tuple[str, str]:
    expected = "n = 1000: random and worst-case counts within 2 n^2"
    rng = random.Random(seed)
    counter = ArcQueryCounter(random_tournament(1000, rng))
    path = redei_hamiltonian_path(counter)
    failures = []
    if not is_hamiltonian_path(counter.tournament, path):
        failures.append("random-case path invalid")
    random_queries = counter.queries
    counter = ArcQueryCounter(_transitive_tournament(1000))
    path = redei_hamiltonian_path(counter)
    if not is_hamiltonian_path(counter.tournament, path):
        failures.append("worst-case path invalid")
    worst_queries = counter.queries
    limit = 2 * 1000 * 1000
    if random_queries > limit or worst_queries > limit:
        failures.append(f"random {random_queries}, worst {worst_queries} (limit {limit})")
    return _sweep(expected, failures)


def _cyclic_triangle():
    from .graphs import Tournament

    return Tournament.from_arcs(3, [(0, 1), (1, 2), (2, 0)])


def _transitive_tournament(n: int):
    from .graphs import Tournament

    return Tournament.from_arcs(n, [(u, v) for u in range(n) for v in range(u + 1, n)])


# --- runner ---------------------------------------------------------------


def _run_one(claim: str, seed: int) -> ReportEntry:
    tier, flagged, fn = _BY_CLAIM[claim]
    start = time.perf_counter()
    result = fn(seed)
    runtime = time.perf_counter() - start
    expected, computed = result[0], result[1]
    if len(result) > 2:
        status = result[2]
    elif flagged:
        status = STATUS_FLAGGED
    elif expected == computed:
        status = STATUS_MATCH
    else:
        status = STATUS_MISMATCH
    return ReportEntry(claim, tier, expected, computed, status, runtime)


def _selected_claims(tier: str) -> list[str]:
    depth = TIERS.index(tier)
    return [claim for claim, t, _, _ in _REGISTRY if TIERS.index(t) <= depth]


def reproduce_all(
    tier: str = "default",
    budget: float | None = None,
    seed: int = 0,
    jobs: int = 1,
) -> Report:
    """Run every entry of the tier; entries are reported in registry
    order.  budget is a wall-clock cutoff: entries not started before
    it expires are reported as skipped.  jobs > 1 runs entries in
    worker processes (same ordering, same strings)."""
    if tier not in TIERS:
        raise ValueError(f"tier must be one of {TIERS}")
    claims = _selected_claims(tier)
    generated_at = datetime.now(timezone.utc).isoformat()
    deadline = None if budget is None else time.monotonic() + budget
    entries: list[ReportEntry] = []
    if jobs <= 1:
        for claim in claims:
            if deadline is not None and time.monotonic() > deadline:
                t, _, _ = _BY_CLAIM[claim]
                entries.append(
                    ReportEntry(
                        claim, t, "", "run budget exhausted", STATUS_SKIPPED, 0.0
                    )
                )
                continue
            entries.append(_run_one(claim, seed))
        return Report(generated_at, tier, seed, entries)

    with concurrent.futures.ProcessPoolExecutor(max_workers=jobs) as pool:
        futures = {claim: pool.submit(_run_one, claim, seed) for claim in claims}
        cancelled: set[str] = set()
        swept = False
        for claim in claims:
            remaining = None if deadline is None else deadline - time.monotonic()
            if remaining is not None and remaining <= 0 and not swept:
                # deadline passed: cancel everything still queued at once,
                # otherwise freed workers keep dequeueing entries faster
                # than this loop can cancel them one by one
                swept = True
                for other in claims:
                    if futures[other].cancel():
                        cancelled.add(other)
            if claim in cancelled:
                t, _, _ = _BY_CLAIM[claim]
                entries.append(
                    ReportEntry(
                        claim, t, "", "run budget exhausted", STATUS_SKIPPED, 0.0
                    )
                )
                continue
            entries.append(futures[claim].result())
    return Report(generated_at, tier, seed, entries)


def render_table(report: Report) -> str:
    width = max(len(e.claim) for e in report.entries) + 2
    lines = [f"{'claim'.ljust(width)} {'status'.ljust(20)} {'runtime':>8}"]
    lines.append(f"{'-' * width} {'-' * 20} {'-' * 8}")
    for e in report.entries:
        lines.append(
            f"{e.claim.ljust(width)} {e.status.ljust(20)} {e.runtime_seconds:7.2f}s"
        )
        if e.status != STATUS_MATCH:
            lines.append(f"{'':{width}}   expected: {e.expected}")
            lines.append(f"{'':{width}}   computed: {e.computed}")
    counts = report.counts()
    lines.append(
        "summary: {match} match, {mismatch} mismatch, {flagged} flagged-discrepancy, "
        "{skipped} skipped".format(
            match=counts[STATUS_MATCH],
            mismatch=counts[STATUS_MISMATCH],
            flagged=counts[STATUS_FLAGGED],
            skipped=counts[STATUS_SKIPPED],
        )
    )
    return "\n".join(lines) + "\n"
