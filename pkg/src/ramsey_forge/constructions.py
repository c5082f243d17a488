"""Explicit design families.

Four constructions, all strength 2 unless noted: projective planes of prime
order, affine planes of prime order, the integer grid-line packing, and an
exact-incidence-count trim of an affine plane that exists for every target
size.  A seeded random packing generator rounds these out for exercising
strengths above 2.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations
from typing import Optional

from .designs import Design, incidence_count

# random_packing stops after this many consecutive rejected samples.
REJECTION_BUDGET = 1000


@lru_cache(maxsize=None)
def _primes_up_to(limit: int) -> tuple[int, ...]:
    """Eratosthenes sieve; cached, so repeated range queries are cheap."""
    if limit < 2:
        return ()
    flags = bytearray([1]) * (limit + 1)
    flags[0] = flags[1] = 0
    p = 2
    while p * p <= limit:
        if flags[p]:
            flags[p * p :: p] = bytearray(len(flags[p * p :: p]))
        p += 1
    return tuple(i for i, f in enumerate(flags) if f)


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    return n in _primes_up_to(n)


def smallest_prime_in(lo: int, hi: int) -> Optional[int]:
    """Smallest prime in [lo, hi], or None when the interval has none."""
    if lo > hi:
        raise ValueError("lo must not exceed hi")
    for p in _primes_up_to(hi):
        if p >= lo:
            return p
    return None


@dataclass(frozen=True)
class PrimeField:
    """Arithmetic modulo a prime p; elements are the residues 0..p-1."""

    p: int

    def __post_init__(self) -> None:
        if not is_prime(self.p):
            raise ValueError(f"field order must be prime, got {self.p}")

    @property
    def elements(self) -> range:
        return range(self.p)

    def add(self, a: int, b: int) -> int:
        return (a + b) % self.p

    def sub(self, a: int, b: int) -> int:
        return (a - b) % self.p

    def mul(self, a: int, b: int) -> int:
        return (a * b) % self.p

    def neg(self, a: int) -> int:
        return (-a) % self.p

    def inv(self, a: int) -> int:
        if a % self.p == 0:
            raise ZeroDivisionError("0 has no multiplicative inverse")
        return pow(a, -1, self.p)


def _normalized_triples(p: int) -> list[tuple[int, int, int]]:
    """Projective points/lines: homogeneous triples, first nonzero coord 1."""
    triples = [(1, a, b) for a in range(p) for b in range(p)]
    triples += [(0, 1, a) for a in range(p)]
    triples.append((0, 0, 1))
    return triples


def projective_plane(p: int) -> Design:
    """Projective plane of prime order p as a strength-2 design.

    Points and blocks are both indexed by the p**2 + p + 1 normalized
    homogeneous triples over the p-element field; point x lies on line L
    exactly when the dot product x . L vanishes mod p.  Every block has
    p + 1 points, every point lies in p + 1 blocks, and any two distinct
    points share exactly one block.
    """
    field = PrimeField(p)  # rejects non-prime orders
    triples = _normalized_triples(field.p)
    blocks = []
    for line in triples:
        members = tuple(
            i
            for i, pt in enumerate(triples)
            if (pt[0] * line[0] + pt[1] * line[1] + pt[2] * line[2]) % p == 0
        )
        blocks.append(members)
    labels = tuple(f"({x}:{y}:{z})" for x, y, z in triples)
    return Design(
        point_count=len(triples), blocks=tuple(blocks), strength=2, labels=labels
    )


def affine_plane(p: int) -> Design:
    """Affine plane of prime order p as a strength-2 design.

    Points are the pairs (x, y) over the p-element field (id = x*p + y);
    blocks are the p**2 lines y = m*x + c followed by the p vertical lines
    x = c.  That gives p**2 points and p**2 + p blocks of p points each,
    with every point pair on exactly one block.
    """
    field = PrimeField(p)
    blocks = []
    for m in field.elements:
        for c in field.elements:
            blocks.append(tuple(x * p + (m * x + c) % p for x in range(p)))
    for c in field.elements:
        blocks.append(tuple(c * p + y for y in range(p)))
    labels = tuple(f"({i // p},{i % p})" for i in range(p * p))
    return Design(point_count=p * p, blocks=tuple(blocks), strength=2, labels=labels)


def grid_line_design(N: int) -> Design:
    """Integer grid-line packing: N**3 blocks of N points each.

    Blocks are the lines {(x, m*x + b) : 1 <= x <= N} for slopes
    1 <= m <= N and intercepts 1 <= b <= N**2, drawn inside the grid
    [1, N] x [1, 2*N**2].  The point set is restricted to grid points that
    lie on at least one of these lines (the full grid would contain
    uncovered points).  Two points share at most one line, so the result is
    a valid strength-2 design with N**4 incidence pairs.
    """
    if N < 1:
        raise ValueError("N must be >= 1")
    lines = [
        tuple((x, m * x + b) for x in range(1, N + 1))
        for m in range(1, N + 1)
        for b in range(1, N * N + 1)
    ]
    covered = sorted({pt for line in lines for pt in line})
    index = {pt: i for i, pt in enumerate(covered)}
    blocks = tuple(tuple(index[pt] for pt in line) for line in lines)
    labels = tuple(f"({a},{b})" for a, b in covered)
    return Design(
        point_count=len(covered), blocks=blocks, strength=2, labels=labels
    )


@dataclass(frozen=True)
class TrimTrace:
    """Provenance of a :func:`trim_to_n` run.

    ``removed`` lists the deleted incidences as (block index, point id)
    pairs in the coordinates of the *untrimmed* affine plane of order ``p``;
    the trimmed design itself relabels points densely.
    """

    n: int
    k: int
    p: int
    removed: tuple[tuple[int, int], ...]

    def __post_init__(self) -> None:
        object.__setattr__(
            self, "removed", tuple((b, pt) for b, pt in self.removed)
        )
        if not self.n <= self.k**3 + self.k**2 <= 6 * self.n:
            raise ValueError("cube parameter k out of its admissible band")
        if not self.k <= self.p <= 2 * self.k:
            raise ValueError("prime p outside [k, 2k]")
        if len(self.removed) != self.p**3 + self.p**2 - self.n:
            raise ValueError("removed-incidence count does not match n")


def trim_to_n(n: int) -> tuple[Design, TrimTrace]:
    """Strength-2 design with exactly ``n`` incidence pairs, for any n >= 1.

    Picks the smallest k with k**3 + k**2 >= n (then k**3 + k**2 <= 6n holds
    as well), the smallest prime p in [k, 2k], and trims the affine plane of
    order p down to n incidences.  The trim is deterministic: walk blocks
    from the last backwards, repeatedly deleting the current block's largest
    point while more than one point remains; only once every block is a
    singleton are whole blocks deleted, again from the back.  Emptied blocks
    are dropped and the point set is restricted (and densely relabelled) to
    the points still covered, so the result passes validation.
    """
    if n < 1:
        raise ValueError("n must be >= 1")
    k = 1
    while k**3 + k**2 < n:
        k += 1
    p = smallest_prime_in(k, 2 * k)
    assert p is not None  # Bertrand's postulate
    base = affine_plane(p)
    blocks = [list(block) for block in base.blocks]
    removed: list[tuple[int, int]] = []
    need = incidence_count(base) - n
    while need > 0:
        idx = None
        for i in range(len(blocks) - 1, -1, -1):
            if len(blocks[i]) >= 2:
                idx = i
                break
        if idx is None:
            # every surviving block is a singleton: start deleting blocks
            for i in range(len(blocks) - 1, -1, -1):
                if blocks[i]:
                    idx = i
                    break
        removed.append((idx, blocks[idx][-1]))  # ascending blocks: last = largest
        blocks[idx].pop()
        need -= 1

    survivors = [block for block in blocks if block]
    old_points = sorted({pt for block in survivors for pt in block})
    relabel = {old: new for new, old in enumerate(old_points)}
    new_blocks = tuple(tuple(relabel[pt] for pt in block) for block in survivors)
    labels = None
    if base.labels is not None:
        labels = tuple(base.labels[old] for old in old_points)
    design = Design(
        point_count=len(old_points), blocks=new_blocks, strength=2, labels=labels
    )
    trace = TrimTrace(n=n, k=k, p=p, removed=tuple(removed))
    return design, trace


def random_packing(
    point_count: int,
    block_size: int,
    strength: int,
    target_blocks: int,
    seed: int,
) -> Design:
    """Seeded random packing: rejection-sample blocks, then cover leftovers.

    Random ``block_size``-subsets are accepted only when they introduce no
    duplicated ``strength``-subset; sampling stops at ``target_blocks``
    accepted blocks or after ``REJECTION_BUDGET`` consecutive rejections.
    Points still uncovered afterwards are wrapped in singleton blocks, so
    the result always validates.  Same inputs, same design.
    """
    if block_size < 1 or strength < 1:
        raise ValueError("block_size and strength must be >= 1")
    if block_size > point_count:
        raise ValueError("block_size cannot exceed point_count")
    rng = random.Random(seed)
    owner: set[tuple[int, ...]] = set()
    accepted: list[tuple[int, ...]] = []
    rejections = 0
    while len(accepted) < target_blocks and rejections < REJECTION_BUDGET:
        block = tuple(sorted(rng.sample(range(point_count), block_size)))
        subsets = list(combinations(block, strength))
        if any(s in owner for s in subsets):
            rejections += 1
            continue
        owner.update(subsets)
        accepted.append(block)
        rejections = 0
    covered = {pt for block in accepted for pt in block}
    blocks = accepted + [(pt,) for pt in range(point_count) if pt not in covered]
    return Design(point_count=point_count, blocks=tuple(blocks), strength=strength)
