"""Directed Hamiltonian paths in tournaments.

Every tournament has one, and the insertion argument that proves it is
also the algorithm: grow a path one vertex at a time, placing each new
vertex at the front, at the back, or between the first consecutive
pair it can split.  The number of such paths is always odd; the
brute-force counter here is the oracle for that.
"""

from __future__ import annotations

import itertools

from .graphs import Tournament

__all__ = [
    "redei_hamiltonian_path",
    "is_hamiltonian_path",
    "count_hamiltonian_paths_oracle",
    "ArcQueryCounter",
]


class ArcQueryCounter:
    """Tournament wrapper counting has_arc calls; drop-in for the
    insertion algorithm, which only ever asks those two things."""

    __slots__ = ("tournament", "queries")

    def __init__(self, tournament: Tournament) -> None:
        self.tournament = tournament
        self.queries = 0

    @property
    def vertex_count(self) -> int:
        return self.tournament.vertex_count

    def has_arc(self, u: int, v: int) -> bool:
        self.queries += 1
        return self.tournament.has_arc(u, v)


def redei_hamiltonian_path(t: Tournament) -> list[int]:
    """A directed Hamiltonian path, found with O(n^2) arc queries.

    Vertices are inserted in ascending label order.  For the new vertex
    r: prepend if r beats the current head; otherwise r loses to the
    head, so scanning consecutive pairs (p, q) either finds the first
    place with p -> r and r -> q to insert, or every path vertex beats
    r and r is appended after the tail.
    """
    n = t.vertex_count
    if n == 0:
        return []
    path = [0]
    for r in range(1, n):
        if t.has_arc(r, path[0]):
            path.insert(0, r)
            continue
        for i in range(len(path) - 1):
            if t.has_arc(path[i], r) and t.has_arc(r, path[i + 1]):
                path.insert(i + 1, r)
                break
        else:
            path.append(r)
    return path


def is_hamiltonian_path(t: Tournament, path: list[int]) -> bool:
    """True iff path visits every vertex once along forward arcs."""
    n = t.vertex_count
    if len(path) != n or set(path) != set(range(n)):
        return False
    return all(t.has_arc(path[i], path[i + 1]) for i in range(n - 1))


def count_hamiltonian_paths_oracle(t: Tournament) -> int:
    """Number of directed Hamiltonian paths, by checking all n! orders."""
    n = t.vertex_count
    if n > 8:
        raise ValueError("oracle limit: n must be <= 8")
    has_arc = t.has_arc
    count = 0
    for perm in itertools.permutations(range(n)):
        if all(has_arc(perm[i], perm[i + 1]) for i in range(n - 1)):
            count += 1
    return count
