"""Incidence-pair graphs over ordered designs.

Given a design whose points carry a strict total order, the incidence graph
has one vertex per incidence pair (x, B) and joins (x, B1) to (y, B2)
exactly when B1 != B2, the smaller of the two points belongs to the *other*
pair's block, i.e. for x < y: x is a member of B2.  Pairs sharing a point or
a block are never adjacent.  When the design is a valid strength-(m-1)
packing the graph contains no clique of size m; :func:`check_clique_free`
certifies that exhaustively and returns a witness whenever it fails.

Adjacency is stored as one bit row per vertex (arbitrary-precision ints),
which makes common-neighborhood intersections single AND operations.
"""

from __future__ import annotations

import json
import random
from dataclasses import dataclass, field
from typing import Optional

from .designs import Design, validate_packing

EXPORT_FORMATS = ("dimacs", "edge-json")


@dataclass(frozen=True)
class OrderedDesign:
    """A design plus a strict total order on its points.

    ``order[i]`` is the point of rank i (the i-th smallest).  The order is
    an explicit input because the edge set, not its proven properties,
    depends on it.
    """

    design: Design
    order: tuple[int, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "order", tuple(self.order))
        if sorted(self.order) != list(range(self.design.point_count)):
            raise ValueError("order must be a permutation of the point ids")

    @classmethod
    def id_order(cls, design: Design) -> "OrderedDesign":
        return cls(design, tuple(range(design.point_count)))

    @classmethod
    def random_order(cls, design: Design, seed: int) -> "OrderedDesign":
        order = list(range(design.point_count))
        random.Random(seed).shuffle(order)
        return cls(design, tuple(order))

    def ranks(self) -> list[int]:
        """Inverse permutation: ranks()[point] is the point's position."""
        rank = [0] * self.design.point_count
        for r, x in enumerate(self.order):
            rank[x] = r
        return rank


@dataclass(frozen=True)
class IncidenceGraph:
    """Undirected graph on incidence pairs.

    ``vertices[i]`` is the (point id, block index) pair of vertex i; vertices
    are sorted by (point rank, block index) so exports are reproducible.
    ``adjacency[i]`` is a bit row over vertex indices;  ``m`` is the clique
    size the source design forbids (its strength + 1).
    """

    vertices: tuple[tuple[int, int], ...]
    adjacency: tuple[int, ...]
    m: int
    _index: dict = field(init=False, repr=False, compare=False)

    def __post_init__(self) -> None:
        object.__setattr__(self, "vertices", tuple(tuple(v) for v in self.vertices))
        object.__setattr__(self, "adjacency", tuple(self.adjacency))
        n = len(self.vertices)
        if len(self.adjacency) != n:
            raise ValueError("adjacency must have one bit row per vertex")
        for i, row in enumerate(self.adjacency):
            if row < 0 or row >> n:
                raise ValueError(f"adjacency row {i} has bits outside 0..{n - 1}")
            if (row >> i) & 1:
                raise ValueError(f"vertex {i} is adjacent to itself")
            rest = row
            while rest:
                lsb = rest & -rest
                j = lsb.bit_length() - 1
                rest ^= lsb
                if not (self.adjacency[j] >> i) & 1:
                    raise ValueError(f"adjacency is not symmetric at ({i}, {j})")
        index = {v: i for i, v in enumerate(self.vertices)}
        if len(index) != n:
            raise ValueError("duplicate incidence pair among vertices")
        object.__setattr__(self, "_index", index)

    @property
    def n_vertices(self) -> int:
        return len(self.vertices)

    @property
    def edge_count(self) -> int:
        return sum(row.bit_count() for row in self.adjacency) // 2

    def index_of(self, point: int, block: int) -> int:
        return self._index[(point, block)]

    def degree(self, v: int) -> int:
        return self.adjacency[v].bit_count()


def build_gamma(od: OrderedDesign) -> IncidenceGraph:
    """Build the incidence graph of a validated ordered design.

    Raises ValueError when the design fails :func:`validate_packing`.  The
    vertex list enumerates points by ascending rank and, within a point, its
    blocks by ascending index; the edge rule is applied in its symmetric
    closure (an undirected edge for each ordered pair it admits).
    """
    design = od.design
    report = validate_packing(design)
    if not report.valid:
        raise ValueError(
            f"design violates the packing conditions "
            f"({report.total_violations} violation(s); first: {report.violations[0]})"
        )
    rank = od.ranks()
    blocks_of: list[list[int]] = [[] for _ in range(design.point_count)]
    for bi, block in enumerate(design.blocks):
        for x in block:
            blocks_of[x].append(bi)

    vertices: list[tuple[int, int]] = []
    for x in od.order:
        for bi in blocks_of[x]:
            vertices.append((x, bi))
    index = {v: i for i, v in enumerate(vertices)}

    adjacency = [0] * len(vertices)
    for b2, block in enumerate(design.blocks):
        members = sorted(block, key=rank.__getitem__)
        for lo in range(len(members)):
            x = members[lo]
            x_blocks = blocks_of[x]
            for hi in range(lo + 1, len(members)):
                w = index[(members[hi], b2)]
                for b1 in x_blocks:
                    if b1 == b2:
                        continue
                    v = index[(x, b1)]
                    adjacency[v] |= 1 << w
                    adjacency[w] |= 1 << v

    return IncidenceGraph(
        vertices=tuple(vertices),
        adjacency=tuple(adjacency),
        m=design.strength + 1,
    )


def check_clique_free(g: IncidenceGraph, m: int) -> Optional[tuple[int, ...]]:
    """Exhaustively search for an m-clique; None certifies there is none.

    A found clique is returned as the lexicographically first witness in
    vertex-index order.  m = 3 scans each edge once and intersects the two
    endpoints' bit rows; larger m uses depth-first extension restricted to
    the running common neighborhood.
    """
    if m < 1:
        raise ValueError("clique size must be >= 1")
    n = g.n_vertices
    adj = g.adjacency
    if m == 1:
        return (0,) if n else None

    def above(v: int) -> int:
        return -1 << (v + 1)

    if m == 3:
        for u in range(n):
            nbrs = adj[u] & above(u)
            while nbrs:
                lsb = nbrs & -nbrs
                v = lsb.bit_length() - 1
                nbrs ^= lsb
                common = adj[u] & adj[v] & above(v)
                if common:
                    w = (common & -common).bit_length() - 1
                    return (u, v, w)
        return None

    def extend(prefix: list[int], cand: int) -> Optional[tuple[int, ...]]:
        if len(prefix) == m:
            return tuple(prefix)
        if cand.bit_count() < m - len(prefix):
            return None
        rest = cand
        while rest:
            lsb = rest & -rest
            v = lsb.bit_length() - 1
            rest ^= lsb
            found = extend(prefix + [v], cand & adj[v] & above(v))
            if found:
                return found
        return None

    for u in range(n):
        found = extend([u], adj[u] & above(u))
        if found:
            return found
    return None


def _edges_ascending(g: IncidenceGraph) -> list[tuple[int, int]]:
    edges = []
    for u in range(g.n_vertices):
        row = g.adjacency[u] & (-1 << (u + 1))
        while row:
            lsb = row & -row
            edges.append((u, lsb.bit_length() - 1))
            row ^= lsb
    return edges


def export_graph(g: IncidenceGraph, fmt: str) -> bytes:
    """Serialize the graph; byte-exact across runs for the same graph.

    dimacs: "p edge n m" header then one "e u v" line per undirected edge,
    1-based, u < v, ascending.  edge-json: {"n": ..., "edges": [[u, v], ...]}
    with the same edge ordering, 0-based.
    """
    edges = _edges_ascending(g)
    if fmt == "dimacs":
        lines = [f"p edge {g.n_vertices} {len(edges)}"]
        lines.extend(f"e {u + 1} {v + 1}" for u, v in edges)
        return ("\n".join(lines) + "\n").encode("ascii")
    if fmt == "edge-json":
        doc = {"n": g.n_vertices, "edges": [[u, v] for u, v in edges]}
        return (json.dumps(doc, separators=(",", ":")) + "\n").encode("ascii")
    raise ValueError(f"unsupported export format: {fmt!r}")
