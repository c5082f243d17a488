"""Independent sets and bounds for incidence-pair graphs.

Three constructive sets: the greedy pass that takes, for each block, the
incidence pair of its order-minimal point (always exactly one vertex per
block), the set of all pairs of a largest block, and an exact optimum from
branch-and-bound for desk-scale graphs.  Alongside them, the closed-form
bounds: points + blocks as an independence cap, the chromatic ratio
incidences / (points + blocks), and the Ravsky incidence inequalities for
rectangle-free strength-2 designs.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Optional

from .designs import Design, incidence_count
from .incidence_graphs import IncidenceGraph, OrderedDesign, build_gamma

DEFAULT_EXACT_BUDGET = 64

# Coefficient of the crude n**(2/3) cap on points + blocks for the trimmed
# any-size family: 48 * cbrt(2).
ANY_N_ALPHA_COEFFICIENT = 48.0 * 2.0 ** (1.0 / 3.0)


@dataclass(frozen=True)
class IndependentSet:
    """A set of pairwise non-adjacent vertices with its provenance tag."""

    vertices: tuple[int, ...]
    source: str  # greedy | block | exact

    def __post_init__(self) -> None:
        object.__setattr__(self, "vertices", tuple(self.vertices))
        if list(self.vertices) != sorted(set(self.vertices)):
            raise ValueError("vertices must be strictly ascending")
        if self.source not in ("greedy", "block", "exact"):
            raise ValueError(f"unknown source tag {self.source!r}")

    @property
    def size(self) -> int:
        return len(self.vertices)


def verify_independent(g: IncidenceGraph, s: IndependentSet) -> bool:
    """True iff no two members of ``s`` are adjacent in ``g``."""
    mask = 0
    for v in s.vertices:
        if not 0 <= v < g.n_vertices:
            raise IndexError(f"vertex index {v} out of range")
        mask |= 1 << v
    return all((g.adjacency[v] & mask) == 0 for v in s.vertices)


def greedy_independent_set(od: OrderedDesign, g: IncidenceGraph) -> IndependentSet:
    """One vertex per block, found in a single ordered pass over the points.

    Walk the points by ascending rank; for the current point, take its
    incidence pair with every still-live block containing it, then retire
    those blocks; points in no live block are skipped.  Every block retires
    exactly once, so the result has exactly ``block_count`` vertices and is
    independent for any point order.  Linear in the number of incidences.
    """
    design = od.design
    blocks_of: list[list[int]] = [[] for _ in range(design.point_count)]
    for bi, block in enumerate(design.blocks):
        for x in block:
            blocks_of[x].append(bi)
    alive = bytearray([1]) * len(design.blocks)
    alive_count = len(design.blocks)
    chosen: list[int] = []
    for x in od.order:
        if alive_count == 0:
            break
        hit = [bi for bi in blocks_of[x] if alive[bi]]
        for bi in hit:
            chosen.append(g.index_of(x, bi))
            alive[bi] = 0
        alive_count -= len(hit)
    return IndependentSet(tuple(sorted(chosen)), "greedy")


def largest_block_set(design: Design, g: IncidenceGraph) -> IndependentSet:
    """All incidence pairs of a maximum-cardinality block.

    Vertices sharing a block are never adjacent, so this is independent by
    construction; it is re-verified here anyway rather than trusted.  Its
    size is at least ceil(point_count / block_count) by pigeonhole.
    """
    if not design.blocks:
        raise ValueError("design has no blocks")
    best = max(range(len(design.blocks)), key=lambda i: len(design.blocks[i]))
    s = IndependentSet(
        tuple(sorted(g.index_of(x, best) for x in design.blocks[best])), "block"
    )
    if not verify_independent(g, s):
        raise AssertionError("largest-block set failed its independence check")
    return s


def _clique_cover_bound(adjacency: tuple[int, ...], alive: int) -> int:
    """Greedy clique cover of the induced subgraph; its size caps alpha."""
    count = 0
    rem = alive
    while rem:
        v_lsb = rem & -rem
        v = v_lsb.bit_length() - 1
        rem ^= v_lsb
        cand = rem & adjacency[v]
        while cand:
            u_lsb = cand & -cand
            u = u_lsb.bit_length() - 1
            rem ^= u_lsb
            cand = (cand ^ u_lsb) & adjacency[u]
        count += 1
    return count


def exact_max_independent_set(
    g: IncidenceGraph, vertex_budget: int = DEFAULT_EXACT_BUDGET
) -> IndependentSet:
    """Exact maximum independent set by branch-and-bound.

    Branches on a maximum-degree vertex of the residual graph (ties broken
    toward the lowest index): either include it and delete its closed
    neighborhood, or exclude it.  Subproblems whose greedy-clique-cover cap
    cannot beat the incumbent are pruned; once the residual graph has no
    edges all of it is taken.  Fully deterministic, including the witness.
    Graphs larger than ``vertex_budget`` are refused.
    """
    n = g.n_vertices
    if n > vertex_budget:
        raise ValueError(
            f"graph has {n} vertices, above the exact budget {vertex_budget}"
        )
    adj = g.adjacency
    best_size = 0
    best_mask = 0

    def bnb(alive: int, chosen: int, size: int) -> None:
        nonlocal best_size, best_mask
        if alive == 0:
            if size > best_size:
                best_size, best_mask = size, chosen
            return
        if size + _clique_cover_bound(adj, alive) <= best_size:
            return
        branch = -1
        branch_deg = -1
        rest = alive
        while rest:
            lsb = rest & -rest
            v = lsb.bit_length() - 1
            rest ^= lsb
            deg = (adj[v] & alive).bit_count()
            if deg > branch_deg:
                branch, branch_deg = v, deg
        if branch_deg == 0:
            size += alive.bit_count()
            if size > best_size:
                best_size, best_mask = size, chosen | alive
            return
        bit = 1 << branch
        bnb(alive & ~(adj[branch] | bit), chosen | bit, size + 1)
        bnb(alive & ~bit, chosen, size)

    bnb((1 << n) - 1, 0, 0)
    members = []
    rest = best_mask
    while rest:
        lsb = rest & -rest
        members.append(lsb.bit_length() - 1)
        rest ^= lsb
    return IndependentSet(tuple(members), "exact")


def upper_bound_alpha(design: Design) -> int:
    """Independence cap of the incidence graph: points + blocks."""
    return design.point_count + len(design.blocks)


def chromatic_lower_bound(design: Design) -> Fraction:
    """Exact rational chromatic bound: incidences / (points + blocks)."""
    return Fraction(incidence_count(design), upper_bound_alpha(design))


def ravsky_lower_bound(n: int) -> float:
    """Floor on points + blocks of any rectangle-free strength-2 design
    with ``n`` incidence pairs: cbrt(2 n**2) - (2/3) cbrt(n)."""
    if n < 1:
        raise ValueError("n must be >= 1")
    return (2.0 * n * n) ** (1.0 / 3.0) - (2.0 / 3.0) * n ** (1.0 / 3.0)


def ravsky_quadratic_check(design: Design) -> bool:
    """Exact-integer form of the incidence inequality for strength-2 designs.

    With a points, b blocks and n incidences, checks
    a * (b**2 - b + n) >= n**2, which holds for every valid strength-2
    design because its incidence matrix is rectangle-free.
    """
    if design.strength != 2:
        raise ValueError("the incidence inequality applies to strength-2 designs")
    a = design.point_count
    b = len(design.blocks)
    n = incidence_count(design)
    return a * (b * b - b + n) >= n * n


def any_n_alpha_cap(n: int) -> float:
    """Crude cap, 48 * cbrt(2) * n**(2/3), on points + blocks of the
    trimmed any-size family with ``n`` incidences."""
    return ANY_N_ALPHA_COEFFICIENT * float(n) ** (2.0 / 3.0)


@dataclass(frozen=True)
class BoundsReport:
    """All bounds for one graph, plus the provenance columns reports carry.

    ``exact`` is None when the graph exceeded the exact-solver budget; it is
    never estimated.  Sandwich invariants are enforced at construction:
    greedy equals the block count, and block <= exact <= upper with
    greedy <= exact whenever exact is present.
    """

    family: str
    param: str
    order_seed: Optional[int]
    n_vertices: int
    a: int
    b: int
    greedy: int
    block: int
    exact: Optional[int]
    upper: int
    chromatic_lb: Fraction
    ravsky_lb: float

    CSV_FIELDS = (
        "family",
        "param",
        "order_seed",
        "n_vertices",
        "a",
        "b",
        "greedy",
        "block",
        "exact",
        "upper",
        "chromatic_lb_num",
        "chromatic_lb_den",
        "ravsky_lb",
    )

    def __post_init__(self) -> None:
        if self.greedy != self.b:
            raise ValueError("greedy set size must equal the block count")
        if not self.block <= self.upper:
            raise ValueError("block set size exceeds the independence cap")
        if self.exact is not None:
            if not self.block <= self.exact <= self.upper:
                raise ValueError("exact alpha outside [block, upper]")
            if self.greedy > self.exact:
                raise ValueError("greedy set larger than exact alpha")

    def csv_row(self) -> list[str]:
        return [
            self.family,
            self.param,
            "" if self.order_seed is None else str(self.order_seed),
            str(self.n_vertices),
            str(self.a),
            str(self.b),
            str(self.greedy),
            str(self.block),
            "" if self.exact is None else str(self.exact),
            str(self.upper),
            str(self.chromatic_lb.numerator),
            str(self.chromatic_lb.denominator),
            repr(self.ravsky_lb),
        ]

    def as_dict(self) -> dict:
        return {
            "family": self.family,
            "param": self.param,
            "order_seed": self.order_seed,
            "n_vertices": self.n_vertices,
            "a": self.a,
            "b": self.b,
            "greedy": self.greedy,
            "block": self.block,
            "exact": self.exact,
            "upper": self.upper,
            "chromatic_lb_num": self.chromatic_lb.numerator,
            "chromatic_lb_den": self.chromatic_lb.denominator,
            "ravsky_lb": self.ravsky_lb,
        }


def bounds_report(
    od: OrderedDesign,
    *,
    family: str,
    param: str,
    order_seed: Optional[int] = None,
    exact_budget: int = DEFAULT_EXACT_BUDGET,
    graph: Optional[IncidenceGraph] = None,
) -> BoundsReport:
    """Assemble every bound for one ordered design into a report row."""
    g = graph if graph is not None else build_gamma(od)
    design = od.design
    greedy = greedy_independent_set(od, g)
    block = largest_block_set(design, g)
    exact: Optional[int] = None
    if g.n_vertices <= exact_budget:
        exact = exact_max_independent_set(g, exact_budget).size
    return BoundsReport(
        family=family,
        param=param,
        order_seed=order_seed,
        n_vertices=g.n_vertices,
        a=design.point_count,
        b=len(design.blocks),
        greedy=greedy.size,
        block=block.size,
        exact=exact,
        upper=upper_bound_alpha(design),
        chromatic_lb=chromatic_lower_bound(design),
        ravsky_lb=ravsky_lower_bound(g.n_vertices),
    )
