"""Orbit reduction, canonical representatives, and the two ladder walks."""

import pytest

from heckeblocks import (
    AffineRank,
    CanonicalRep,
    FockContext,
    RootVec,
    canonical_rep,
    dominant_reduce,
    is_weight,
    lambda_rep,
    mu_rep,
    null_root,
    propagation_check_1,
    propagation_check_2,
    rep_root,
    weyl_orbit_bfs,
)
from heckeblocks.orbits import LAMBDA, MU


def test_canonical_rep_validation_and_round_trip():
    rep = CanonicalRep(LAMBDA, 1, 0, 2)
    assert CanonicalRep.from_json(rep.to_json()) == rep
    assert str(rep) == "lambda(s=1, i=0) + 2*delta"
    with pytest.raises(ValueError):
        CanonicalRep("rho", 1, 0, 0)
    with pytest.raises(ValueError):
        CanonicalRep(LAMBDA, 1, 0, -1)


def test_dominant_reduce_explicit(ctx21):
    beta = RootVec(ctx21.rank, (3, 1, 1))
    reduced = dominant_reduce(ctx21, beta)
    assert reduced.coeffs == (0, 0, 0)
    assert dominant_reduce(ctx21, reduced) == reduced


def test_dominant_reduce_is_idempotent_on_a_grid(ctx21):
    for a in range(3):
        for b in range(3):
            for c in range(3):
                beta = RootVec(ctx21.rank, (a, b, c))
                reduced = dominant_reduce(ctx21, beta)
                assert dominant_reduce(ctx21, reduced) == reduced


def test_weight_detection(ctx21):
    assert is_weight(ctx21, RootVec(ctx21.rank, (0, 0, 0)))
    assert is_weight(ctx21, null_root(ctx21.rank))
    assert not is_weight(ctx21, RootVec(ctx21.rank, (5, 0, 0)))
    assert not is_weight(ctx21, RootVec(ctx21.rank, (-1, 0, 0)))


def test_rep_root_and_canonical_round_trip():
    for ell, s in ((1, 1), (2, 1), (3, 2), (4, 1), (4, 4)):
        rank = AffineRank(ell)
        ctx = FockContext(rank, s, level=2)
        reps = [
            CanonicalRep(LAMBDA, s, i, k)
            for i in range((ell - s + 1) // 2 + 1)
            for k in range(3)
        ] + [
            CanonicalRep(MU, s, i, k)
            for i in range(1, s // 2 + 1)
            for k in range(3)
        ]
        for rep in reps:
            assert canonical_rep(ctx, rep_root(ctx, rep)) == rep


def test_canonical_rep_of_rotund_vector(ctx21):
    beta = RootVec(ctx21.rank, (3, 1, 1))
    assert canonical_rep(ctx21, beta) == CanonicalRep(LAMBDA, 1, 0, 0)


def test_orbit_members_share_the_canonical_rep(ctx21):
    beta = lambda_rep(1, 1, ctx21.rank)
    rep = canonical_rep(ctx21, beta)
    orbit = weyl_orbit_bfs(ctx21, beta, 3)
    assert beta in orbit
    assert len(orbit) > 3
    for member in orbit:
        assert is_weight(ctx21, member)
        assert canonical_rep(ctx21, member) == rep


def test_level_one_context_has_single_family():
    rank = AffineRank(2)
    ctx = FockContext(rank, 0, level=1)
    rep = canonical_rep(ctx, null_root(rank))
    assert rep == CanonicalRep(LAMBDA, 0, 0, 1)
    assert canonical_rep(ctx, RootVec(rank, (1, 0, 0))) == CanonicalRep(LAMBDA, 0, 0, 0)


def test_second_family_reduces_across_the_mirror():
    rank = AffineRank(3)
    ctx = FockContext(rank, 2, level=2)
    beta = mu_rep(2, 1, rank)
    assert canonical_rep(ctx, beta) == CanonicalRep(MU, 2, 1, 0)


@pytest.mark.parametrize("ell,s", [(1, 1), (2, 1), (3, 1), (3, 3), (4, 2)])
def test_ladder_walks_close(ell, s):
    rank = AffineRank(ell)
    ctx = FockContext(rank, s, level=2)
    for k in range(3):
        for i in range(1, (ell - s + 1) // 2 + 1):
            assert propagation_check_1(ctx, i, k)
        for i in range((ell - s - 1) // 2 + 1):
            assert propagation_check_2(ctx, i, k)
