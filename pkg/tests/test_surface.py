import numpy as np
import pytest

from charpoisson.surface import (
    IDENTITY_WORD,
    Word,
    boundary_word,
    build_presentation,
    commutator_product,
    free_reduce,
    parse_word,
    random_word,
    word,
    word_to_string,
)


@pytest.mark.parametrize(
    "g,m,rank,chi", [(1, 1, 2, -1), (0, 3, 2, -1), (2, 1, 4, -3), (0, 1, 0, 1)]
)
def test_presentation_rank_and_euler(g, m, rank, chi):
    p = build_presentation(g, m)
    assert p.rank == rank == len(p.generator_names)
    assert p.euler_characteristic == chi


def test_closed_surface_rejected():
    with pytest.raises(ValueError):
        build_presentation(1, 0)


def test_free_reduce_examples():
    assert word([(0, 1), (1, 1), (1, -1)]).letters == ((0, 1),)
    assert word([]).is_identity
    assert word([(0, 1), (0, -1), (0, 1), (0, -1)]).is_identity


def test_free_reduce_idempotent_on_samples():
    rng = np.random.default_rng(0)
    p = build_presentation(2, 2)
    for _ in range(200):
        raw = Word(
            tuple(
                (int(rng.integers(0, p.rank)), int(rng.choice((-1, 1))))
                for _ in range(int(rng.integers(0, 12)))
            )
        )
        once = free_reduce(raw)
        assert free_reduce(once) == once


def test_boundary_word_once_punctured_torus():
    p = build_presentation(1, 1)
    c1 = boundary_word(p, 1)
    # inverse of the commutator a b a^-1 b^-1
    assert c1.letters == ((1, 1), (0, 1), (1, -1), (0, -1))
    assert len(c1) == 4


def test_boundary_word_three_punctured_sphere():
    p = build_presentation(0, 3)
    assert boundary_word(p, 1).letters == ((0, 1),)
    assert boundary_word(p, 2).letters == ((1, 1),)
    assert boundary_word(p, 3).letters == ((1, -1), (0, -1))


@pytest.mark.parametrize("g", range(0, 4))
@pytest.mark.parametrize("m", range(1, 5))
def test_relator_reduces_to_identity(g, m):
    p = build_presentation(g, m)
    assert p.rank == 2 * g + m - 1
    w = commutator_product(p)
    for j in range(1, m + 1):
        w = w * boundary_word(p, j)
    assert w.is_identity


def test_boundary_index_out_of_range():
    p = build_presentation(1, 1)
    with pytest.raises(ValueError):
        boundary_word(p, 2)
    with pytest.raises(ValueError):
        boundary_word(p, 0)


def test_parse_word_commutator():
    p = build_presentation(1, 1)
    w = parse_word("a1 b1 a1^-1 b1^-1", p)
    assert w.letters == ((0, 1), (1, 1), (0, -1), (1, -1))


def test_parse_word_single_letter_and_cancel():
    p = build_presentation(0, 3)
    assert parse_word("c1", p).letters == ((0, 1),)
    assert parse_word("a1 a1^-1", build_presentation(1, 1)).is_identity


def test_parse_word_errors():
    p = build_presentation(1, 1)
    with pytest.raises(KeyError):
        parse_word("q9", p)
    with pytest.raises(ValueError):
        parse_word("a1^2", p)


def test_word_roundtrip_through_string():
    p = build_presentation(2, 2)
    rng = np.random.default_rng(5)
    for _ in range(50):
        w = random_word(p, rng)
        assert parse_word(word_to_string(w, p), p) == w


def test_inverse_and_identity():
    p = build_presentation(1, 2)
    rng = np.random.default_rng(9)
    for _ in range(50):
        w = random_word(p, rng)
        assert (w * w.inverse()) == IDENTITY_WORD
