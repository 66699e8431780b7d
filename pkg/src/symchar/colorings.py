"""Counting colorings of bipartite graphs compatible with a Young diagram.

Left vertices (cycles of s1) receive column numbers and right vertices
(cycles of s2) receive row numbers; every edge must land on a box.
"""

from __future__ import annotations

import itertools
import json
from dataclasses import dataclass, field
from functools import lru_cache
from math import factorial, prod
from typing import Sequence

from .partitions import YoungDiagram, conjugate, multirectangular_coordinates
from .permutations import Permutation, _cycle_index


@dataclass(frozen=True)
class BipartiteGraph:
    left_count: int
    right_count: int
    edges: frozenset = field(default_factory=frozenset)

    def __post_init__(self):
        edges = frozenset((int(a), int(b)) for a, b in self.edges)
        for a, b in edges:
            if not (0 <= a < self.left_count and 0 <= b < self.right_count):
                raise ValueError(f"edge {(a, b)} out of range")
        object.__setattr__(self, "edges", edges)

    @property
    def num_vertices(self) -> int:
        return self.left_count + self.right_count

    def degrees(self) -> tuple[list[int], list[int]]:
        left = [0] * self.left_count
        right = [0] * self.right_count
        for a, b in self.edges:
            left[a] += 1
            right[b] += 1
        return left, right

    def has_isolated_vertex(self) -> bool:
        left, right = self.degrees()
        return 0 in left or 0 in right

    def transpose(self) -> "BipartiteGraph":
        return BipartiteGraph(self.right_count, self.left_count, frozenset((b, a) for a, b in self.edges))

    def components(self) -> list[tuple[list[int], list[int]]]:
        """Connected components as ``(left vertices, right vertices)``."""
        return [(left, right) for left, right, _ in _components_raw(self.left_count, self.right_count, self.edges)]

    def num_components(self) -> int:
        return len(self.components())

    def to_json(self) -> str:
        adjacency = {str(a): sorted(b for x, b in self.edges if x == a) for a in range(self.left_count)}
        return json.dumps(
            {"left_count": self.left_count, "right_count": self.right_count, "adjacency": adjacency},
            sort_keys=True,
        )

    @classmethod
    def from_json(cls, text: str) -> "BipartiteGraph":
        data = json.loads(text)
        edges = frozenset((int(a), b) for a, nbrs in data["adjacency"].items() for b in nbrs)
        return cls(data["left_count"], data["right_count"], edges)


def star(k: int, center: str = "right") -> BipartiteGraph:
    """``G_{k,1}`` (``center="right"``) or ``G_{1,k}`` (``center="left"``)."""
    if center == "right":
        return BipartiteGraph(k, 1, frozenset((a, 0) for a in range(k)))
    return BipartiteGraph(1, k, frozenset((0, b) for b in range(k)))


def complete(p: int, q: int) -> BipartiteGraph:
    return BipartiteGraph(p, q, frozenset(itertools.product(range(p), range(q))))


def _edges0(s1: Sequence[int], s2: Sequence[int]):
    c1, n1 = _cycle_index(s1)
    c2, n2 = _cycle_index(s2)
    return n1, n2, frozenset(zip(c1, c2))


def graph_of(sigma1: Permutation, sigma2: Permutation) -> BipartiteGraph:
    """Intersection graph of the cycles of ``s1`` (left) and ``s2`` (right)."""
    if sigma1.degree != sigma2.degree:
        raise ValueError("degree mismatch")
    n1, n2, edges = _edges0(sigma1.zero_based, sigma2.zero_based)
    return BipartiteGraph(n1, n2, edges)


# ---------------------------------------------------------------------------
# canonical component keys

_MAX_CANONICAL_ORDERINGS = 5040


def _component_key(left: Sequence[int], right: Sequence[int], edges) -> tuple:
    """Key ``(small_is_left, small_size, masks)`` for one connected component.

    ``masks`` holds, for every vertex on the larger side, the bitmask of its
    neighbours on the smaller side, sorted.  Orderings of the smaller side are
    refined by a degree signature and the lexicographically least mask tuple
    over all orderings compatible with the refinement is kept, which makes the
    key an isomorphism invariant whenever the tie classes are small.  Larger
    tie classes fall back to a fixed ordering: still exact, only less sharing.
    """
    small_is_left = len(left) <= len(right)
    if small_is_left:
        small, big = list(left), list(right)
        adj = [(a, b) for a, b in edges]
    else:
        small, big = list(right), list(left)
        adj = [(b, a) for a, b in edges]
    sidx = {v: i for i, v in enumerate(small)}
    bidx = {v: i for i, v in enumerate(big)}
    s_nbrs = [[] for _ in small]
    b_nbrs = [[] for _ in big]
    for sv, bv in adj:
        s_nbrs[sidx[sv]].append(bidx[bv])
        b_nbrs[bidx[bv]].append(sidx[sv])
    b_deg = [len(x) for x in b_nbrs]
    sig = [(len(n), tuple(sorted(b_deg[j] for j in n))) for n in s_nbrs]
    classes: dict = {}
    for i, s in enumerate(sig):
        classes.setdefault(s, []).append(i)
    ordered = [classes[s] for s in sorted(classes)]
    total = prod(factorial(len(c)) for c in ordered)

    def masks_for(order):
        pos = {v: i for i, v in enumerate(order)}
        return tuple(sorted(sum(1 << pos[i] for i in nb) for nb in b_nbrs))

    if total <= _MAX_CANONICAL_ORDERINGS:
        best = min(
            masks_for([v for grp in combo for v in grp])
            for combo in itertools.product(*(itertools.permutations(c) for c in ordered))
        )
    else:
        best = masks_for([v for grp in ordered for v in grp])
    return (small_is_left, len(small), best)


def graph_key(num_left: int, num_right: int, edges) -> tuple:
    """Sorted tuple of component keys; equal keys mean equal coloring counts."""
    keys = []
    for left, right, comp_edges in _components_raw(num_left, num_right, edges):
        if not left or not right:
            raise ValueError("graph has an isolated vertex")
        keys.append(_component_key(left, right, comp_edges))
    return tuple(sorted(keys))


def _components_raw(num_left: int, num_right: int, edges):
    parent = list(range(num_left + num_right))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for a, b in edges:
        ra, rb = find(a), find(num_left + b)
        if ra != rb:
            parent[ra] = rb
    groups: dict[int, tuple[list, list, list]] = {}
    for v in range(num_left + num_right):
        g = groups.setdefault(find(v), ([], [], []))
        if v < num_left:
            g[0].append(v)
        else:
            g[1].append(v - num_left)
    for a, b in edges:
        groups[find(a)][2].append((a, b))
    return list(groups.values())


# ---------------------------------------------------------------------------
# counting


def _class_profile(lam: YoungDiagram, small_is_left: bool) -> tuple[tuple[int, ...], tuple[int, ...]]:
    """Multiplicities and lengths of the line classes the small side is colored by.

    Right vertices are colored by rows, grouped by distinct row length; left
    vertices by columns, grouped by distinct column height.
    """
    shape = conjugate(lam) if small_is_left else lam
    mult, length = multirectangular_coordinates(shape)
    return tuple(mult), tuple(length)


@lru_cache(maxsize=None)
def _count_component(rows: tuple[int, ...], key: tuple) -> int:
    small_is_left, s, masks = key
    mult, length = _class_profile(YoungDiagram(rows), small_is_left)
    r = len(mult)
    if r == 0:
        return 0
    if s == 1:
        # star: every big vertex sees the single centre
        return sum(m * x ** len(masks) for m, x in zip(mult, length))
    nbr_lists = [[i for i in range(s) if mask >> i & 1] for mask in masks]
    total = 0
    # the larger line index has the shorter length, so the closure factor of a
    # big vertex is the length of the largest class among its neighbours
    for assign in itertools.product(range(r), repeat=s):
        term = 1
        for i in assign:
            term *= mult[i]
        for nb in nbr_lists:
            term *= length[max(assign[i] for i in nb)]
            if term == 0:
                break
        total += term
    return total


def count_colorings(lam: YoungDiagram, graph: BipartiteGraph) -> int:
    """Number of colorings of ``graph`` compatible with ``lam``."""
    if graph.has_isolated_vertex():
        raise ValueError("coloring count is undefined for graphs with isolated vertices")
    return _count_by_key(lam.rows, graph_key(graph.left_count, graph.right_count, graph.edges))


def _count_by_key(rows: tuple[int, ...], key: tuple) -> int:
    out = 1
    for comp in key:
        out *= _count_component(rows, comp)
        if out == 0:
            return 0
    return out


def coloring_count(lam: YoungDiagram, sigma1: Permutation, sigma2: Permutation) -> int:
    """``N^lam(s1, s2)``."""
    return count_colorings(lam, graph_of(sigma1, sigma2))


def star_count(lam: YoungDiagram, k: int, center: str = "right") -> int:
    """Closed forms: ``sum_i lam_i^k`` for ``G_{k,1}``, ``sum_j lam'_j^k`` for ``G_{1,k}``."""
    shape = lam if center == "right" else conjugate(lam)
    return sum(x ** k for x in shape.rows)


def count_injective(lam: YoungDiagram, sigma1: Permutation, sigma2: Permutation) -> int:
    """Injective maps from points to boxes, rows constant on cycles of ``s2``
    and columns constant on cycles of ``s1``.  Brute force."""
    l = sigma1.degree
    if l > lam.size:
        raise ValueError(f"no injections from {l} points into {lam.size} boxes")
    return sum(1 for f in itertools.permutations(lam.boxes(), l) if _respects(f, sigma1, sigma2))


def count_all_functions(lam: YoungDiagram, sigma1: Permutation, sigma2: Permutation) -> int:
    """All maps from points to boxes with the same constancy conditions.  Brute force."""
    l = sigma1.degree
    return sum(1 for f in itertools.product(lam.boxes(), repeat=l) if _respects(f, sigma1, sigma2))


def _respects(f, sigma1: Permutation, sigma2: Permutation) -> bool:
    s1, s2 = sigma1.images, sigma2.images
    for m in range(len(f)):
        if f[m][0] != f[s1[m] - 1][0]:
            return False
        if f[m][1] != f[s2[m] - 1][1]:
            return False
    return True


def prune(graph: BipartiteGraph) -> BipartiteGraph:
    """Delete edges joining two vertices of degree > 1 until none remain.

    The lexicographically smallest eligible edge goes first.  The result is a
    disjoint union of stars on the same vertex set.
    """
    if graph.has_isolated_vertex():
        raise ValueError("prune expects every vertex to have an edge")
    edges = set(graph.edges)
    left, right = graph.degrees()
    while True:
        victim = min(((a, b) for a, b in edges if left[a] > 1 and right[b] > 1), default=None)
        if victim is None:
            return BipartiteGraph(graph.left_count, graph.right_count, frozenset(edges))
        edges.remove(victim)
        left[victim[0]] -= 1
        right[victim[1]] -= 1


# ---------------------------------------------------------------------------
# factorization sums grouped by graph


@dataclass
class FactorizationProfile:
    """Factorizations of one permutation grouped by coloring-count key.

    ``signed[key]`` is the sum of ``(-1)^{|s1|}`` over the factorizations
    with that key and ``unsigned[key]`` their number.
    """

    degree: int
    signed: dict
    unsigned: dict

    @property
    def num_factorizations(self) -> int:
        return sum(self.unsigned.values())

    def signed_sum(self, lam: YoungDiagram) -> int:
        return sum(c * _count_by_key(lam.rows, k) for k, c in self.signed.items() if c)

    def unsigned_sum(self, lam: YoungDiagram) -> int:
        return sum(c * _count_by_key(lam.rows, k) for k, c in self.unsigned.items())


def build_profile(pairs, degree: int) -> FactorizationProfile:
    """Group 0-based ``(s1, s2)`` pairs by the key of their intersection graph."""
    signed: dict = {}
    unsigned: dict = {}
    for s1, s2 in pairs:
        n1, n2, edges = _edges0(s1, s2)
        key = graph_key(n1, n2, edges)
        sign = -1 if (degree - n1) % 2 else 1
        signed[key] = signed.get(key, 0) + sign
        unsigned[key] = unsigned.get(key, 0) + 1
    return FactorizationProfile(degree, signed, unsigned)
