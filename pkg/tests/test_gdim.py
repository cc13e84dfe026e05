"""Graded dimension tables, tableau generating functions, block enumeration."""

import pytest

from heckeblocks import (
    AffineRank,
    Bipartition,
    DimMatrix,
    FockContext,
    QPoly,
    QuiverShapeError,
    block_bipartitions,
    content,
    count_standard,
    dim_matrix,
    graded_dim,
    kostka_q,
    lambda_rep,
    nonzero_idempotents,
    null_root,
    quiver_bounds,
    residue_sequences,
    ungraded_block_dim,
)


def test_kostka_explicit_values(ctx11):
    shape = Bipartition((2,), (1,))
    assert kostka_q(ctx11, shape, (0, 1, 1)) == QPoly({2: 1, 0: 1})
    assert kostka_q(ctx11, shape, (1, 0, 1)) == QPoly({2: 1})
    assert kostka_q(ctx11, shape, (1, 1, 0)) == QPoly.zero()
    assert kostka_q(ctx11, shape, (0, 0, 1)) == QPoly.zero()
    with pytest.raises(ValueError):
        kostka_q(ctx11, shape, (0, 1))


def test_kostka_conventions_agree(ctx11, ctx21):
    for ctx, data in ((ctx11, [[2], [1]]), (ctx21, [[2, 1], [1]])):
        shape = Bipartition.from_json(data)
        for nu in residue_sequences(ctx, content(ctx, shape)):
            assert kostka_q(ctx, shape, nu, "post") == kostka_q(ctx, shape, nu, "pre")


def test_block_bipartitions_of_the_small_cyclic_block(ctx11, delta1):
    shapes = block_bipartitions(ctx11, delta1)
    assert set(shapes) == {
        Bipartition((2,)),
        Bipartition((1, 1)),
        Bipartition((1,), (1,)),
        Bipartition((), (2,)),
        Bipartition((), (1, 1)),
    }
    assert block_bipartitions(ctx11, lambda_rep(1, 0, delta1.rank)) == [Bipartition()]


def test_residue_sequences_and_idempotent_classes(ctx11, delta1):
    assert residue_sequences(ctx11, delta1) == [(0, 1), (1, 0)]
    assert nonzero_idempotents(ctx11, delta1) == [(0, 1), (1, 0)]


@pytest.mark.parametrize("ell", [2, 3, 4])
def test_finite_block_has_two_idempotent_classes(ell):
    rank = AffineRank(ell)
    ctx = FockContext(rank, 1, level=2)
    beta = lambda_rep(1, 1, rank)
    assert len(nonzero_idempotents(ctx, beta)) == 2


def test_graded_dim_smallest_cyclic_block(ctx11, delta1):
    one = (0, 1)
    other = (1, 0)
    assert graded_dim(ctx11, one, one) == QPoly({0: 1, 2: 1, 4: 1})
    assert graded_dim(ctx11, other, other) == QPoly({0: 1, 2: 1, 4: 1})
    assert graded_dim(ctx11, one, other) == QPoly({2: 1})
    assert ungraded_block_dim(ctx11, delta1) == 8


def test_graded_dim_double_cyclic_block_regression(ctx11, delta1):
    """Recomputed table for the height-four block; the diagonal ungraded
    count 12 is forced by direct enumeration of the twelve growths and by
    the block dimension 256 = sum of all word-pair dimensions."""
    beta = 2 * delta1
    a = (0, 1, 0, 1)
    b = (1, 0, 1, 0)
    diag = QPoly({0: 1, 2: 3, 4: 4, 6: 3, 8: 1})
    assert graded_dim(ctx11, a, a) == diag
    assert graded_dim(ctx11, b, b) == diag
    assert graded_dim(ctx11, a, b) == QPoly({2: 2, 4: 4, 6: 2})
    assert ungraded_block_dim(ctx11, beta) == 256
    words = residue_sequences(ctx11, beta)
    total = sum(
        graded_dim(ctx11, x, y).evaluate(1) for x in words for y in words
    )
    assert total == 256


def test_graded_dim_mismatched_words(ctx11):
    assert graded_dim(ctx11, (0, 1), (0, 0)) == QPoly.zero()
    with pytest.raises(ValueError):
        graded_dim(ctx11, (0, 1), (0, 1, 0))


def test_count_standard_explicit():
    assert count_standard(Bipartition()) == 1
    assert count_standard(Bipartition((2,), (1,))) == 3
    assert count_standard(Bipartition((1,), (1,))) == 2
    assert count_standard(Bipartition((2, 1))) == 2
    assert count_standard(Bipartition((2,), (2,))) == 6


def test_dim_matrix_structure(ctx11, delta1):
    idems = nonzero_idempotents(ctx11, delta1)
    m = dim_matrix(ctx11, delta1, idems)
    assert m.size == 2
    assert m.entry(0, 1) == m.entry(1, 0)
    assert DimMatrix.from_json(m.to_json()) == m
    text = str(m)
    assert "1+q^2+q^4" in text and "q^2" in text
    with pytest.raises(ValueError):
        dim_matrix(ctx11, delta1, [(0, 0)])


def test_quiver_bounds_flags_the_doubled_loop():
    rank = AffineRank(4)
    ctx = FockContext(rank, 1, level=2)
    beta = lambda_rep(1, 2, rank)
    words = [(0, 1, 2, 4, 0, 1), (1, 0, 2, 4, 1, 0)]
    bounds = quiver_bounds(dim_matrix(ctx, beta, words))
    assert bounds.loops == (2, 2)
    assert bounds.arrows[0][1] == 1
    assert bounds.wild


def test_quiver_bounds_on_the_tame_table(ctx11, delta1):
    bounds = quiver_bounds(dim_matrix(ctx11, delta1, nonzero_idempotents(ctx11, delta1)))
    assert bounds.loops == (1, 1)
    assert not bounds.wild
    assert bounds.to_json()["wild"] is False


def test_quiver_bounds_rejects_low_degree_off_diagonal():
    rank = AffineRank(4)
    ctx = FockContext(rank, 1, level=2)
    beta = lambda_rep(1, 1, rank)
    m = dim_matrix(ctx, beta, nonzero_idempotents(ctx, beta))
    with pytest.raises(QuiverShapeError):
        quiver_bounds(m)
