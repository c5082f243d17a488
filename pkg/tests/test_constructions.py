"""Construction families and their counting identities.

The plane constructors are cross-checked against enumeration (pair coverage,
block sizes, point degrees), the grid family against its closed-form counts,
and the exact-size trim against hand-traced runs plus its invariant chain
n <= k^3 + k^2 <= 6n, k <= p <= 2k for every n up to 300.
"""

from collections import Counter
from itertools import combinations

import pytest

from ramsey_forge import (
    PrimeField,
    TrimTrace,
    affine_plane,
    fisher_holds,
    grid_line_design,
    incidence_count,
    is_steiner,
    projective_plane,
    random_packing,
    rectangle_free,
    smallest_prime_in,
    trim_to_n,
    validate_packing,
)


@pytest.mark.parametrize("p", [2, 3, 5, 7])
def test_prime_field_axioms(p):
    f = PrimeField(p)
    for a in f.elements:
        for b in f.elements:
            assert f.add(a, b) == f.add(b, a)
            assert f.mul(a, b) == f.mul(b, a)
            for c in f.elements:
                assert f.add(f.add(a, b), c) == f.add(a, f.add(b, c))
                assert f.mul(f.mul(a, b), c) == f.mul(a, f.mul(b, c))
                assert f.mul(a, f.add(b, c)) == f.add(f.mul(a, b), f.mul(a, c))
        assert f.add(a, f.neg(a)) == 0
        if a != 0:
            assert f.mul(a, f.inv(a)) == 1
    with pytest.raises(ZeroDivisionError):
        f.inv(0)


def test_prime_field_rejects_composite_order():
    for bad in (0, 1, 4, 6, 9):
        with pytest.raises(ValueError):
            PrimeField(bad)


def _pair_coverage(design):
    counts = Counter()
    for block in design.blocks:
        counts.update(combinations(block, 2))
    return counts


@pytest.mark.parametrize("p", [2, 3, 5, 7])
def test_projective_plane_counts(p):
    plane = projective_plane(p)
    expected = p * p + p + 1
    assert plane.point_count == expected
    assert len(plane.blocks) == expected
    assert all(len(block) == p + 1 for block in plane.blocks)
    degrees = Counter(pt for block in plane.blocks for pt in block)
    assert all(degrees[pt] == p + 1 for pt in range(expected))
    coverage = _pair_coverage(plane)
    assert len(coverage) == expected * (expected - 1) // 2
    assert set(coverage.values()) == {1}
    for b1, b2 in combinations(plane.blocks, 2):
        assert len(set(b1) & set(b2)) == 1
    assert validate_packing(plane).valid


def test_projective_plane_rejects_non_primes():
    for bad in (0, 1, 4, 6):
        with pytest.raises(ValueError):
            projective_plane(bad)


@pytest.mark.parametrize("p", [2, 3, 5])
def test_affine_plane_counts(p):
    plane = affine_plane(p)
    assert plane.point_count == p * p
    assert len(plane.blocks) == p * p + p
    assert all(len(block) == p for block in plane.blocks)
    coverage = _pair_coverage(plane)
    assert len(coverage) == p * p * (p * p - 1) // 2
    assert set(coverage.values()) == {1}
    assert is_steiner(plane, p)
    assert fisher_holds(plane)
    assert validate_packing(plane).valid


def test_affine_plane_rejects_non_primes():
    with pytest.raises(ValueError):
        affine_plane(4)


@pytest.mark.parametrize("N", [1, 2, 3, 4])
def test_grid_line_design_counts(N):
    design = grid_line_design(N)
    assert len(design.blocks) == N**3
    assert all(len(block) == N for block in design.blocks)
    assert incidence_count(design) == N**4
    assert rectangle_free(design)
    assert validate_packing(design).valid


def test_grid_covered_points_match_direct_enumeration():
    # recompute the covered grid points without the Design machinery
    covered = {
        (x, m * x + b)
        for m in range(1, 3)
        for b in range(1, 5)
        for x in range(1, 3)
    }
    design = grid_line_design(2)
    assert design.point_count == len(covered) == 11
    assert design.labels is not None
    assert set(design.labels) == {f"({a},{b})" for a, b in covered}


def test_grid_rejects_zero():
    with pytest.raises(ValueError):
        grid_line_design(0)


def test_trim_exact_fit_removes_nothing():
    design, trace = trim_to_n(12)
    assert (trace.k, trace.p) == (2, 2)
    assert trace.removed == ()
    assert incidence_count(design) == 12


def test_trim_10_matches_hand_trace():
    # AG(2,2) blocks in construction order:
    #   {0,2} {1,3} {0,3} {1,2} {0,1} {2,3}
    # two removals walk from the last block, largest point first
    design, trace = trim_to_n(10)
    assert (trace.n, trace.k, trace.p) == (10, 2, 2)
    assert trace.removed == ((5, 3), (4, 1))
    assert incidence_count(design) == 10
    assert validate_packing(design).valid


def test_trim_100_picks_k5_p5():
    design, trace = trim_to_n(100)
    assert (trace.k, trace.p) == (5, 5)
    assert len(trace.removed) == 50
    assert incidence_count(design) == 100


def test_trim_rejects_zero():
    with pytest.raises(ValueError):
        trim_to_n(0)


def test_trim_invariants_over_full_range():
    for n in range(1, 301):
        design, trace = trim_to_n(n)
        assert incidence_count(design) == n
        assert trace.n <= trace.k**3 + trace.k**2 <= 6 * trace.n
        assert trace.k <= trace.p <= 2 * trace.k
        assert len(trace.removed) == trace.p**3 + trace.p**2 - n
        assert all(block for block in design.blocks)
        assert validate_packing(design).valid  # also: every point covered


def test_trim_trace_rejects_inconsistent_fields():
    with pytest.raises(ValueError):
        TrimTrace(n=10, k=9, p=11, removed=())
    with pytest.raises(ValueError):
        TrimTrace(n=10, k=2, p=7, removed=((5, 3), (4, 1)))
    with pytest.raises(ValueError):
        TrimTrace(n=10, k=2, p=2, removed=())


def test_smallest_prime_in():
    assert smallest_prime_in(2, 4) == 2
    assert smallest_prime_in(8, 16) == 11
    assert smallest_prime_in(24, 28) is None
    assert smallest_prime_in(1, 1) is None
    with pytest.raises(ValueError):
        smallest_prime_in(5, 4)


def test_random_packing_is_reproducible():
    a = random_packing(12, 4, 3, 6, seed=1)
    b = random_packing(12, 4, 3, 6, seed=1)
    assert a == b
    c = random_packing(12, 4, 3, 6, seed=2)
    assert c != a


def test_random_packing_validates_and_covers():
    for seed in range(8):
        design = random_packing(12, 4, 3, 6, seed=seed)
        assert design.strength == 3
        assert validate_packing(design).valid
        non_singletons = [b for b in design.blocks if len(b) > 1]
        assert len(non_singletons) <= 6


def test_random_packing_single_full_block():
    design = random_packing(5, 5, 2, 1, seed=99)
    assert design.blocks == ((0, 1, 2, 3, 4),)
    assert validate_packing(design).valid


def test_random_packing_rejects_impossible_parameters():
    with pytest.raises(ValueError):
        random_packing(3, 4, 2, 1, seed=0)
    with pytest.raises(ValueError):
        random_packing(3, 0, 2, 1, seed=0)
    with pytest.raises(ValueError):
        random_packing(3, 2, 0, 1, seed=0)
