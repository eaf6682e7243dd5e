"""The support graph of a character and its combinatorial structure.

K_chi has an edge {i, j} exactly when the weight on {i, j} is nonzero.
The central structural fact used by the classifier: a graph with no edge
disjoint from two other edges is a star or lives on at most 4 vertices.
``oracle_star_or_small`` proves this exhaustively for small vertex counts.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations
from typing import Mapping, Optional

from .characters import Character, Edge, all_edges, swing_value


@dataclass(frozen=True)
class CharGraph:
    n: int
    edges: frozenset[Edge]
    labels: Mapping[Edge, Fraction]


@dataclass(frozen=True)
class ShapeClass:
    """Structure tag for a support graph.

    kind is one of "empty", "star", "small_k4", "has_disjoint_from_two".
    A graph that is both a star and within 4 vertices reports "star".
    "other" is unreachable (tested exhaustively by the oracle).
    """

    kind: str
    center: Optional[int] = None
    leaves: tuple[int, ...] = ()
    vertex_set: tuple[int, ...] = ()
    witness: Optional[tuple[Edge, Edge, Edge]] = None


def build_kchi(chi: Character) -> CharGraph:
    """Support graph: exactly the pairs with nonzero weight, labels copied."""
    edges = frozenset(e for e in all_edges(chi.n) if chi.weights[e] != 0)
    return CharGraph(chi.n, edges, {e: chi.weights[e] for e in sorted(edges)})


def support_vertices(g: CharGraph) -> set[int]:
    """Endpoints of edges; isolated vertices are simply absent."""
    verts: set[int] = set()
    for i, j in g.edges:
        verts.add(i)
        verts.add(j)
    return verts


def _disjoint(e: Edge, f: Edge) -> bool:
    return not (set(e) & set(f))


def find_edge_disjoint_from_two(
    g: CharGraph,
) -> Optional[tuple[Edge, Edge, Edge]]:
    """Lexicographically least triple (e; f, g) with e disjoint from both
    f and g, f < g.  None if no edge is disjoint from two others."""
    edges = sorted(g.edges)
    for e in edges:
        away = [f for f in edges if f != e and _disjoint(e, f)]
        if len(away) >= 2:
            return (e, away[0], away[1])
    return None


def find_disjoint_triple(g: CharGraph) -> Optional[tuple[Edge, Edge, Edge]]:
    """Lexicographically least triple of pairwise disjoint edges, if any."""
    edges = sorted(g.edges)
    for e, f, h in combinations(edges, 3):
        if _disjoint(e, f) and _disjoint(e, h) and _disjoint(f, h):
            return (e, f, h)
    return None


def find_disjoint_pair(g: CharGraph) -> Optional[tuple[Edge, Edge]]:
    """Lexicographically least pair of disjoint edges, if any."""
    edges = sorted(g.edges)
    for e, f in combinations(edges, 2):
        if _disjoint(e, f):
            return (e, f)
    return None


def _star_center(edges: list[Edge]) -> Optional[int]:
    """Vertex shared by every edge, or None.  Needs at least one edge; a
    single edge reports its smaller endpoint."""
    common = set(edges[0])
    for e in edges[1:]:
        common &= set(e)
        if not common:
            return None
    return min(common)


def shape_classify(g: CharGraph) -> ShapeClass:
    witness = find_edge_disjoint_from_two(g)
    if witness is not None:
        return ShapeClass(kind="has_disjoint_from_two", witness=witness)
    edges = sorted(g.edges)
    if not edges:
        return ShapeClass(kind="empty")
    center = _star_center(edges)
    if center is not None:
        leaves = tuple(sorted(support_vertices(g) - {center}))
        return ShapeClass(kind="star", center=center, leaves=leaves)
    verts = tuple(sorted(support_vertices(g)))
    if len(verts) > 4:  # pragma: no cover - would contradict the shape lemma
        return ShapeClass(kind="other")
    return ShapeClass(kind="small_k4", vertex_set=verts)


def oracle_star_or_small(max_vertices: int) -> list[int]:
    """Exhaustive check of the star-or-small dichotomy.

    Enumerates every edge subset of K_m with m = max_vertices (smaller
    vertex counts are subsumed; vertices are taken as endpoints only) and
    asserts: no-edge-disjoint-from-two <=> (star or at most 4 endpoints).
    Returns the list of counterexample bitmasks, which must be empty.
    """
    if max_vertices > 8:
        raise ValueError("enumeration budget is 8 vertices")
    m = max_vertices
    pairs = list(combinations(range(m), 2))
    ne = len(pairs)
    vmask = [(1 << i) | (1 << j) for i, j in pairs]
    # disj[e] = bitmask of edges sharing no endpoint with edge e
    disj = [
        sum(1 << f for f in range(ne) if not (vmask[f] & vmask[e]))
        for e in range(ne)
    ]
    counterexamples = []
    for subset in range(1 << ne):
        members = []
        rest = subset
        while rest:
            low = rest & -rest
            members.append(low.bit_length() - 1)
            rest ^= low
        has_dft = False
        for e in members:
            if (subset & disj[e]).bit_count() >= 2:
                has_dft = True
                break
        if members:
            union = 0
            common = vmask[members[0]]
            for e in members:
                union |= vmask[e]
                common &= vmask[e]
            star_or_small = bool(common) or union.bit_count() <= 4
        else:
            star_or_small = True
        if has_dft == star_or_small:
            counterexamples.append(subset)
    return counterexamples


@dataclass(frozen=True)
class MatchingValues:
    """Shared values on the three perfect matchings of K_4:
    x on {12|34}, y on {13|24}, z on {14|23}; x + y + z = 0."""

    x: Fraction
    y: Fraction
    z: Fraction


def triple_sum_consequences(chi: Character) -> Optional[MatchingValues]:
    """For a character on P_4: if all four triangle swing values vanish,
    opposite edges carry equal weights and the three shared values sum to
    zero.  Returns those values, or None when some triangle survives."""
    if chi.n != 4:
        raise ValueError(f"triple_sum_consequences needs n=4, got n={chi.n}")
    for triple in combinations(range(1, 5), 3):
        if swing_value(chi, triple) != 0:
            return None
    x, y, z = chi.weight(1, 2), chi.weight(1, 3), chi.weight(1, 4)
    assert x == chi.weight(3, 4) and y == chi.weight(2, 4) and z == chi.weight(2, 3)
    assert x + y + z == 0
    return MatchingValues(x, y, z)


def to_dot(g: CharGraph) -> str:
    """DOT export: vertices v1..vn, edges labeled by their rational weight,
    isolated vertices dotted."""
    support = support_vertices(g)
    lines = ["graph kchi {"]
    for v in range(1, g.n + 1):
        attr = "" if v in support else " [style=dotted]"
        lines.append(f"  v{v}{attr};")
    for i, j in sorted(g.edges):
        lines.append(f'  v{i} -- v{j} [label="{g.labels[(i, j)]}"];')
    lines.append("}")
    return "\n".join(lines) + "\n"
