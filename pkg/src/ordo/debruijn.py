"""De Bruijn graphs and their directed Hamiltonian cycles.

B(n, m) has the n^m length-m words over 0..n-1 as vertices and an arc
u -> v whenever the last m-1 letters of u equal the first m-1 of v
(append one letter, drop the first).  A directed Hamiltonian cycle is
the same thing as a cyclic word of n^m letters in which every length-m
window occurs exactly once; such cyclic words are the unit of work
here.

Representation: a vertex is the base-n value of its word, so following
the arc that appends letter s is (v % n^(m-1)) * n + s.  Cycles are
kept in the canonical rotation starting with the 0^m window and are
printed in linear form, the cyclic word plus its first m-1 letters
repeated at the end (the form in which every window can be read off
left to right).
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Iterator, Sequence

from .graphs import Digraph, SimpleGraph
from .graphio import graph_to_dot

__all__ = [
    "ALPHABET",
    "DBParams",
    "DeBruijnWord",
    "word_encode",
    "word_decode",
    "infer_params",
    "word_of_vertex",
    "de_bruijn_graph",
    "underlying_simple_graph",
    "flower_dot",
    "arcs_of",
    "martin",
    "count_hamiltonian_cycles",
    "enumerate_hamiltonian_cycles",
    "sigma_symbol_map",
    "sigma",
    "rotation_family",
    "ArcConflict",
    "arc_conflict",
    "pairwise_arc_disjoint",
    "max_disjoint_upper_bound",
    "max_disjoint_exact",
]

ALPHABET = "0123456789abcdefghijklmnopqrstuvwxyz"

ENUMERATION_VERTEX_LIMIT = 27
ENUMERATION_CYCLE_LIMIT = 10**6
DISJOINTNESS_CYCLE_LIMIT = 3000


@dataclass(frozen=True)
class DBParams:
    """Alphabet size n and window length m of B(n, m)."""

    n: int
    m: int

    def __post_init__(self) -> None:
        if self.n < 2:
            raise ValueError("need an alphabet of at least 2 letters")
        if self.m < 1:
            raise ValueError("need window length m >= 1")
        if self.n > len(ALPHABET):
            raise ValueError(f"alphabet limited to {len(ALPHABET)} letters")

    @property
    def vertex_count(self) -> int:
        return self.n**self.m

    @property
    def linear_length(self) -> int:
        return self.n**self.m + self.m - 1


@dataclass(frozen=True)
class DeBruijnWord:
    """A Hamiltonian cycle of B(n, m) as a canonical cyclic word.

    letters has length n^m, starts with the 0^m block, and every
    length-m window (cyclically) is distinct; all three are enforced
    on construction.
    """

    params: DBParams
    letters: tuple[int, ...]

    def __post_init__(self) -> None:
        n, m = self.params.n, self.params.m
        total = self.params.vertex_count
        if len(self.letters) != total:
            raise ValueError(f"cyclic word must have {total} letters, got {len(self.letters)}")
        for c in self.letters:
            if not 0 <= c < n:
                raise ValueError(f"letter {c} outside 0..{n - 1}")
        if any(self.letters[:m]):
            raise ValueError("canonical rotation must start with the all-zero window")
        base = n ** (m - 1)
        window = 0  # value of letters[0..m-1]
        seen = bytearray(total)
        seen[0] = 1
        for i in range(1, total):
            window = (window % base) * n + self.letters[(i + m - 1) % total]
            if seen[window]:
                raise ValueError(f"window repeated at position {i}")
            seen[window] = 1

    def vertex_cycle(self) -> list[int]:
        """The cycle's vertices in order, starting at 0^m."""
        n, m = self.params.n, self.params.m
        total = self.params.vertex_count
        base = n ** (m - 1)
        out = [0]
        window = 0
        for i in range(1, total):
            window = (window % base) * n + self.letters[(i + m - 1) % total]
            out.append(window)
        return out

    def __str__(self) -> str:
        return word_encode(self)


def word_encode(word: DeBruijnWord) -> str:
    """Linear form: the cyclic word, then its first m-1 letters again."""
    m = word.params.m
    cyclic = "".join(ALPHABET[c] for c in word.letters)
    return cyclic + cyclic[: m - 1]


def word_decode(text: str, params: DBParams) -> DeBruijnWord:
    """Parse a linear form, validate it, and canonicalize the rotation.

    Accepts any rotation of a valid cycle (in linear form); the result
    starts at the 0^m window, so encode(decode(t)) == t exactly when t
    already does.
    """
    n, m = params.n, params.m
    total = params.vertex_count
    if len(text) != params.linear_length:
        raise ValueError(
            f"bad length: B({n},{m}) linear form has {params.linear_length} letters, got {len(text)}"
        )
    letters = []
    for ch in text:
        value = ALPHABET.find(ch)
        if not 0 <= value < n:
            raise ValueError(f"letter {ch!r} outside the {n}-letter alphabet")
        letters.append(value)
    if m > 1 and letters[total:] != letters[: m - 1]:
        raise ValueError("linear form must end with its own first m-1 letters")
    cyclic = letters[:total]
    # locate the 0^m window to canonicalize the rotation
    start = -1
    for i in range(total):
        if all(cyclic[(i + j) % total] == 0 for j in range(m)):
            start = i
            break
    if start < 0:
        raise ValueError("no all-zero window; not a full cycle")
    rotated = tuple(cyclic[start:] + cyclic[:start])
    return DeBruijnWord(params, rotated)  # window distinctness checked here


def infer_params(text: str) -> DBParams:
    """Guess (n, m) from a linear form: n from the largest letter used,
    m from the length.  The guess is unique when it exists."""
    values = [ALPHABET.find(ch) for ch in text]
    if any(v < 0 for v in values):
        raise ValueError("unrecognized letter; expected 0-9 then a-z")
    n = max(values, default=-1) + 1
    if n < 2:
        raise ValueError("need at least two distinct letters to infer the alphabet")
    for m in range(1, 64):
        length = n**m + m - 1
        if length == len(text):
            return DBParams(n, m)
        if length > len(text):
            break
    raise ValueError(f"length {len(text)} matches no B({n}, m)")


def word_of_vertex(v: int, params: DBParams) -> str:
    """The m-letter word of a vertex value."""
    n, m = params.n, params.m
    if not 0 <= v < params.vertex_count:
        raise ValueError(f"vertex {v} outside 0..{params.vertex_count - 1}")
    digits = []
    for _ in range(m):
        v, d = divmod(v, n)
        digits.append(ALPHABET[d])
    return "".join(reversed(digits))


def de_bruijn_graph(params: DBParams) -> Digraph:
    """B(n, m) itself: n^m vertices, n^(m+1) arcs, n of them loops."""
    n = params.n
    base = n ** (params.m - 1)
    arcs = [
        (v, (v % base) * n + s) for v in range(params.vertex_count) for s in range(n)
    ]
    return Digraph(params.vertex_count, arcs)


def underlying_simple_graph(params: DBParams) -> SimpleGraph:
    """Forget directions and loops; antiparallel arc pairs merge."""
    d = de_bruijn_graph(params)
    edges = {(min(u, v), max(u, v)) for u, v in d.arcs if u != v}
    return SimpleGraph(d.vertex_count, sorted(edges))


def flower_dot(params: DBParams) -> str:
    """DOT drawing of the underlying simple graph, nodes named by word."""
    g = underlying_simple_graph(params)
    names = [word_of_vertex(v, params) for v in range(g.vertex_count)]
    return graph_to_dot(g, names=names, title=f"B_{params.n}_{params.m}")


def arcs_of(word: DeBruijnWord) -> frozenset[tuple[int, int]]:
    """The n^m arcs the cycle traverses, as vertex pairs."""
    cycle = word.vertex_cycle()
    total = len(cycle)
    return frozenset((cycle[i], cycle[(i + 1) % total]) for i in range(total))


def martin(params: DBParams) -> DeBruijnWord:
    """Greedy largest-letter-first cycle construction.

    Start from 0^m and repeatedly append the largest letter whose new
    length-m window has not occurred yet; stop when stuck.  The walk
    always gets stuck back at 0^(m-1) having used every window, so the
    letters accumulated are exactly the linear form of a full cycle.
    """
    n, m = params.n, params.m
    base = n ** (m - 1)
    letters = [0] * m
    window = 0
    seen = bytearray(params.vertex_count)
    seen[0] = 1
    while True:
        for s in range(n - 1, -1, -1):
            nxt = (window % base) * n + s
            if not seen[nxt]:
                seen[nxt] = 1
                letters.append(s)
                window = nxt
                break
        else:
            break
    text = "".join(ALPHABET[c] for c in letters)
    return word_decode(text, params)


def count_hamiltonian_cycles(params: DBParams) -> int:
    """Closed-form count of directed Hamiltonian cycles: (n!)^(n^(m-1)) / n^m."""
    n, m = params.n, params.m
    numerator = math.factorial(n) ** (n ** (m - 1))
    denominator = n**m
    assert numerator % denominator == 0, "cycle-count formula must be integral"
    return numerator // denominator


def _check_enumeration_guard(params: DBParams) -> None:
    if params.vertex_count > ENUMERATION_VERTEX_LIMIT:
        raise ValueError(
            f"enumeration limit: n^m must be <= {ENUMERATION_VERTEX_LIMIT}"
        )
    if count_hamiltonian_cycles(params) > ENUMERATION_CYCLE_LIMIT:
        raise ValueError(
            f"enumeration limit: more than {ENUMERATION_CYCLE_LIMIT} cycles"
        )


def enumerate_hamiltonian_cycles(params: DBParams) -> Iterator[DeBruijnWord]:
    """All Hamiltonian cycles of B(n, m), in lexicographic word order.

    Iterative DFS from the 0^m vertex trying letters in ascending
    order, which makes the canonical words come out sorted.  Guarded:
    refuses when n^m > 27 or when the closed-form count is over 10^6.
    """
    _check_enumeration_guard(params)
    n, m = params.n, params.m
    total = params.vertex_count
    base = n ** (m - 1)
    visited = bytearray(total)
    visited[0] = 1
    syms: list[int] = []
    stack: list[list[int]] = [[0, 0]]  # frames of [vertex, next letter to try]
    while stack:
        frame = stack[-1]
        v, s = frame
        if s == n:
            stack.pop()
            if stack:
                visited[v] = 0
                syms.pop()
            continue
        frame[1] = s + 1
        w = (v % base) * n + s
        if visited[w]:
            continue
        if len(stack) + 1 == total:
            # w is the last vertex; the cycle closes iff its arc back
            # to 0^m exists, i.e. appending letter 0 to w gives 0^m
            if w % base == 0:
                letters = (0,) * m + tuple(syms) + (s,)
                yield DeBruijnWord(params, letters[:total])
            continue
        visited[w] = 1
        syms.append(s)
        stack.append([w, 0])


def sigma_symbol_map(n: int) -> tuple[int, ...]:
    """Letter permutation fixing 0 and cycling 1 -> 2 -> ... -> n-1 -> 1."""
    if n < 2:
        raise ValueError("need n >= 2")
    if n == 2:
        return (0, 1)
    return (0,) + tuple(range(2, n)) + (1,)


def sigma(word: DeBruijnWord) -> DeBruijnWord:
    """Apply the letter rotation to a cycle and re-canonicalize.

    The letter permutation is a graph automorphism of B(n, m), so the
    image of a Hamiltonian cycle is again one; with n = 2 the map is
    the identity.
    """
    n, m = word.params.n, word.params.m
    smap = sigma_symbol_map(n)
    mapped = [smap[c] for c in word.letters]
    total = len(mapped)
    start = -1
    for i in range(total):
        if all(mapped[(i + j) % total] == 0 for j in range(m)):
            start = i
            break
    assert start >= 0, "automorphism image must still contain the zero window"
    return DeBruijnWord(word.params, tuple(mapped[start:] + mapped[:start]))


def rotation_family(seed: DeBruijnWord) -> list[DeBruijnWord]:
    """The n-1 cycles [seed, sigma(seed), ..., sigma^(n-2)(seed)]."""
    family = [seed]
    for _ in range(seed.params.n - 2):
        family.append(sigma(family[-1]))
    return family


@dataclass(frozen=True)
class ArcConflict:
    """First pair of cycles (by index) sharing arcs, with the shared set."""

    first: int
    second: int
    shared: frozenset[tuple[int, int]]


def arc_conflict(words: Sequence[DeBruijnWord]) -> ArcConflict | None:
    """Scan index pairs in order; None means pairwise arc-disjoint."""
    for w in words[1:]:
        if w.params != words[0].params:
            raise ValueError("cycles live in different graphs")
    arc_sets = [arcs_of(w) for w in words]
    for i in range(len(words)):
        for j in range(i + 1, len(words)):
            shared = arc_sets[i] & arc_sets[j]
            if shared:
                return ArcConflict(i, j, shared)
    return None


def pairwise_arc_disjoint(words: Sequence[DeBruijnWord]) -> bool:
    return arc_conflict(words) is None


def max_disjoint_upper_bound(n: int) -> int:
    """No family of pairwise arc-disjoint Hamiltonian cycles beats n-1.

    Each cycle leaves every vertex once and the n loops are never used,
    so out-degree n leaves at most n-1 usable arcs per vertex.
    """
    if n < 2:
        raise ValueError("need n >= 2")
    return n - 1


def max_disjoint_exact(params: DBParams) -> tuple[int, list[DeBruijnWord]]:
    """Largest pairwise arc-disjoint set of Hamiltonian cycles, exactly.

    Enumerates every cycle (inheriting the enumeration guard, plus a
    cap of a few thousand cycles for the quadratic pairing step) and
    runs branch-and-bound maximum clique on the disjointness graph.
    Returns the size and the lexicographically first witness of it.
    """
    cycles = list(enumerate_hamiltonian_cycles(params))
    count = len(cycles)
    if count > DISJOINTNESS_CYCLE_LIMIT:
        raise ValueError(
            f"disjointness limit: more than {DISJOINTNESS_CYCLE_LIMIT} cycles"
        )
    arc_sets = [arcs_of(w) for w in cycles]
    adj = [0] * count
    for i in range(count):
        for j in range(i + 1, count):
            if not (arc_sets[i] & arc_sets[j]):
                adj[i] |= 1 << j
                adj[j] |= 1 << i

    best: list[int] = []

    def expand(chosen: list[int], cand: int) -> None:
        nonlocal best
        if len(chosen) + cand.bit_count() <= len(best):
            return
        if not cand:
            best = chosen[:]
            return
        while cand:
            if len(chosen) + cand.bit_count() <= len(best):
                return
            low = cand & -cand
            v = low.bit_length() - 1
            cand ^= low
            chosen.append(v)
            expand(chosen, cand & adj[v])
            chosen.pop()

    expand([], (1 << count) - 1)
    return len(best), [cycles[i] for i in best]
