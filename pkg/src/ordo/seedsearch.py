"""Backtracking search for rotation seeds.

A seed is a Hamiltonian cycle H of B(n, m) whose n-1 letter-rotated
copies H, sH, ..., s^(n-2)H (s fixes 0 and cycles the other letters)
are pairwise arc-disjoint.  The search grows a vertex path from 0^m
and keeps the whole family fresh at every step: no power of s fixes
any non-loop arc, so every usable arc has a full (n-1)-element orbit,
committing an arc commits its orbit, and freshness collapses to one
membership test per candidate arc.  This prunes enormously earlier
than building the family per leaf would.

Seeds stream out in lexicographic word order.  A search can therefore
resume from the last seed recorded in a cache file: the DFS fast-
forwards along the lexicographic lower bound and reports only words
strictly above it.  Cache files are JSON lines with the fields
n, m, seed, timestamp, nodes_explored.
"""

from __future__ import annotations

import json
import time
from dataclasses import dataclass
from datetime import datetime, timezone
from typing import Callable

from .debruijn import (
    DBParams,
    DeBruijnWord,
    pairwise_arc_disjoint,
    rotation_family,
    sigma_symbol_map,
    word_encode,
)

__all__ = [
    "SeedSearchResult",
    "rotation_seed_search",
    "append_seed_cache",
    "read_seed_cache",
    "cached_seeds",
]

_BUDGET_CHECK_STRIDE = 8192


@dataclass
class SeedSearchResult:
    params: DBParams
    seeds: list[DeBruijnWord]
    nodes_explored: int
    completed: bool  # tree exhausted, or first seed found when find_all is off
    budget_exhausted: bool


def _sigma_vertex_map(params: DBParams) -> list[int]:
    n, m = params.n, params.m
    smap = sigma_symbol_map(n)
    out = []
    for v in range(params.vertex_count):
        digits = []
        x = v
        for _ in range(m):
            x, d = divmod(x, n)
            digits.append(smap[d])
        value = 0
        for d in reversed(digits):
            value = value * n + d
        out.append(value)
    return out


def _arc_orbits(params: DBParams) -> list[tuple[int, ...]]:
    # orbit of arc (v, s) under (v, s) -> (sigma v, sigma s); length n-1,
    # with repeats only for loops, which the search never touches
    n = params.n
    smap = sigma_symbol_map(n)
    vmap = _sigma_vertex_map(params)
    orbits = []
    for v in range(params.vertex_count):
        for s in range(n):
            ids = []
            x, y = v, s
            for _ in range(n - 1):
                ids.append(x * n + y)
                x = vmap[x]
                y = smap[y]
            orbits.append(tuple(ids))
    return orbits


def _extension_letters(word: DeBruijnWord) -> list[int]:
    # the n^m - 1 letters appended while walking the cycle from 0^m
    m = word.params.m
    return list(word.letters[m:]) + list(word.letters[: m - 1])


def rotation_seed_search(
    params: DBParams,
    find_all: bool = False,
    *,
    node_budget: int | None = None,
    time_budget: float | None = None,
    resume_after: DeBruijnWord | None = None,
    on_seed: Callable[[DeBruijnWord, int], object] | None = None,
) -> SeedSearchResult:
    """DFS for rotation seeds, letters ascending, hence lex word order.

    Stops at the first seed unless find_all is set.  node_budget caps
    visited path nodes, time_budget is wall-clock seconds; hitting
    either returns the seeds found so far with budget_exhausted set.
    resume_after skips every word up to and including the given one.
    on_seed fires for each seed the moment it is found; a truthy return
    value ends the search early (still counted as completed).
    """
    n, m = params.n, params.m
    total = params.vertex_count
    base = n ** (m - 1)
    orbits = _arc_orbits(params)
    used = bytearray(total * n)
    visited = bytearray(total)
    visited[0] = 1
    syms: list[int] = []
    bound: list[int] | None = None
    if resume_after is not None:
        if resume_after.params != params:
            raise ValueError("resume word belongs to a different graph")
        bound = _extension_letters(resume_after)

    seeds: list[DeBruijnWord] = []
    nodes = 0
    deadline = None if time_budget is None else time.monotonic() + time_budget
    out_of_budget = False

    # frames: [vertex, next letter, committed arc id (-1 for the root),
    #          1 while the path equals the resume bound's prefix]
    root_tight = 1 if bound is not None else 0
    stack: list[list[int]] = [[0, bound[0] if root_tight else 0, -1, root_tight]]

    while stack:
        if node_budget is not None and nodes >= node_budget:
            out_of_budget = True
            break
        if deadline is not None and nodes % _BUDGET_CHECK_STRIDE == 0:
            if time.monotonic() > deadline:
                out_of_budget = True
                break
        frame = stack[-1]
        v, s = frame[0], frame[1]
        if s == n:
            stack.pop()
            if stack:
                visited[v] = 0
                syms.pop()
                for aid in orbits[frame[2]]:
                    used[aid] = 0
            continue
        frame[1] = s + 1
        w = (v % base) * n + s
        if visited[w]:
            continue
        aid = v * n + s
        if used[aid]:
            continue
        nodes += 1
        depth = len(syms)  # index of the letter s in the extension sequence
        tight = frame[3] and bound is not None and s == bound[depth]
        if len(stack) + 1 == total:
            # last vertex; the closing arc back to 0^m appends letter 0
            if w % base != 0 or used[w * n]:
                continue
            if tight:
                continue  # this is resume_after itself; already reported
            letters = ((0,) * m + tuple(syms) + (s,))[:total]
            seed = DeBruijnWord(params, letters)
            assert pairwise_arc_disjoint(rotation_family(seed))
            seeds.append(seed)
            stop = on_seed(seed, nodes) if on_seed is not None else None
            if stop or not find_all:
                return SeedSearchResult(params, seeds, nodes, True, False)
            continue
        for x in orbits[aid]:
            used[x] = 1
        visited[w] = 1
        syms.append(s)
        start = bound[depth + 1] if tight else 0
        stack.append([w, start, aid, int(tight)])

    return SeedSearchResult(params, seeds, nodes, not out_of_budget, out_of_budget)


def append_seed_cache(path: str, word: DeBruijnWord, nodes_explored: int) -> None:
    """Append one JSONL entry; the file is created if missing."""
    entry = {
        "n": word.params.n,
        "m": word.params.m,
        "seed": word_encode(word),
        "timestamp": datetime.now(timezone.utc).isoformat(),
        "nodes_explored": int(nodes_explored),
    }
    with open(path, "a", encoding="utf-8") as fh:
        fh.write(json.dumps(entry, sort_keys=True) + "\n")


def read_seed_cache(path: str) -> list[dict]:
    """All entries of a cache file, validated field by field."""
    entries = []
    with open(path, "r", encoding="utf-8") as fh:
        for lineno, raw in enumerate(fh, start=1):
            line = raw.strip()
            if not line:
                continue
            try:
                entry = json.loads(line)
            except json.JSONDecodeError as exc:
                raise ValueError(f"{path}:{lineno}: not valid JSON: {exc}") from None
            for field in ("n", "m", "seed", "timestamp", "nodes_explored"):
                if field not in entry:
                    raise ValueError(f"{path}:{lineno}: missing field {field!r}")
            entries.append(entry)
    return entries


def cached_seeds(path: str, params: DBParams) -> list[str]:
    """Seed strings recorded for one (n, m), in file order."""
    return [
        e["seed"]
        for e in read_seed_cache(path)
        if e["n"] == params.n and e["m"] == params.m
    ]
