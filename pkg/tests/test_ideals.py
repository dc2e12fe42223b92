import random

import pytest

from stairpow.ideals import (
    EXP_LIMIT,
    UNIT,
    Axis,
    ExponentOverflowError,
    MonomialIdeal,
    ideal_sum,
    minimalize,
    mon_divides,
    naive_power,
    pair_power,
)
from stairpow.oracle import RandomIdealSpec, random_ideal


def test_minimalize_divisor_wins():
    assert minimalize([(2, 0), (3, 0)]).gens == ((2, 0),)


def test_minimalize_dominated_point_dropped():
    assert minimalize([(0, 2), (2, 1), (3, 0), (2, 2)]).gens == ((0, 2), (2, 1), (3, 0))


def test_minimalize_square_products():
    I = MonomialIdeal(((0, 2), (2, 1), (3, 0)))
    products = [(a + c, b + d) for a, b in I.gens for c, d in I.gens]
    assert minimalize(products).gens == ((0, 4), (2, 3), (3, 2), (5, 1), (6, 0))


def test_minimalize_empty_rejected():
    with pytest.raises(ValueError):
        minimalize([])


def test_minimalize_matches_bruteforce():
    rng = random.Random(11)
    for _ in range(50):
        pts = [(rng.randint(0, 12), rng.randint(0, 12)) for _ in range(rng.randint(1, 15))]
        got = minimalize(pts).gens
        expected = sorted(
            {
                p
                for p in pts
                if not any(q != p and mon_divides(q, p) for q in pts)
            }
        )
        # Equal points: keep one representative.
        assert list(got) == [p for p in expected if p in got]
        for p in pts:
            assert any(mon_divides(g, p) for g in got)


def test_numpy_and_small_minimalization_agree():
    rng = random.Random(5)
    pts = [(rng.randint(0, 300), rng.randint(0, 300)) for _ in range(5000)]
    from stairpow.ideals import _minimalize_array, _minimalize_small
    import numpy as np

    assert _minimalize_small(list(pts)) == _minimalize_array(
        np.asarray(pts, dtype=np.int64)
    )


def test_canonical_order_enforced():
    with pytest.raises(ValueError):
        MonomialIdeal(((2, 1), (0, 2)))
    with pytest.raises(ValueError):
        MonomialIdeal(((0, 2), (1, 2)))
    with pytest.raises(ValueError):
        MonomialIdeal(())


def test_multiply_small_example_square():
    I = MonomialIdeal(((0, 2), (2, 1), (3, 0)))
    assert (I * I).gens == ((0, 4), (2, 3), (3, 2), (5, 1), (6, 0))


def test_multiply_unit_identity():
    I = MonomialIdeal(((0, 3), (4, 1), (6, 0)))
    assert (I * UNIT).gens == I.gens


def test_multiply_binomial_two_generators():
    I = MonomialIdeal(((0, 5), (6, 0)))
    assert (I * I).gens == ((0, 10), (6, 5), (12, 0))


def test_multiply_commutative_associative():
    for seed in range(15):
        A = random_ideal(RandomIdealSpec(8, 30, seed=seed))
        B = random_ideal(RandomIdealSpec(8, 30, seed=100 + seed))
        C = random_ideal(RandomIdealSpec(8, 30, seed=200 + seed))
        assert (A * B).gens == (B * A).gens
        assert ((A * B) * C).gens == (A * (B * C)).gens


def test_multiply_numpy_path_agrees():
    # Force both branches of __mul__ on the same data.
    A = MonomialIdeal(tuple((i, 60 - i) for i in range(61)))
    B = MonomialIdeal(tuple((2 * i, 80 - 2 * i) for i in range(41)))
    assert len(A.gens) * len(B.gens) > 2048
    small = minimalize((ga + ha, gb + hb) for ga, gb in A.gens for ha, hb in B.gens)
    assert (A * B).gens == small.gens


def test_naive_power_identity_and_small_example():
    I = MonomialIdeal(((0, 2), (2, 1), (3, 0)))
    assert naive_power(I, 1).gens == I.gens
    assert naive_power(I, 3).mu == 7
    assert naive_power(I, 0).gens == UNIT.gens


def test_naive_power_persistent_middle_generator():
    I = MonomialIdeal(((0, 5), (5, 1), (6, 0)))
    assert (20, 4) in naive_power(I, 4).gens


def test_naive_power_additivity():
    I = MonomialIdeal(((0, 3), (2, 2), (5, 0)))
    assert naive_power(I, 5).gens == (naive_power(I, 2) * naive_power(I, 3)).gens


def test_sum_idempotent_and_union():
    I = MonomialIdeal(((0, 2), (3, 0)))
    assert (I + I).gens == I.gens
    assert (MonomialIdeal(((0, 2),)) + MonomialIdeal(((3, 0),))).gens == ((0, 2), (3, 0))


def test_sum_figure_link():
    left = MonomialIdeal(((0, 3), (1, 1), (4, 0))).shift((0, 2))
    right = MonomialIdeal(((0, 2), (2, 0))).shift((4, 0))
    assert (left + right).gens == ((0, 5), (1, 3), (4, 2), (6, 0))


def test_colon_examples():
    I = MonomialIdeal(((0, 2), (2, 1), (3, 0)))
    cube = naive_power(I, 3)
    assert cube.colon((0, 2)).gens == ((0, 4), (2, 3), (3, 2), (5, 1), (6, 0))
    assert I.colon((0, 0)).gens == I.gens
    assert I.colon((2, 1)).gens == ((0, 0),)


def test_gcd_and_anchor():
    assert MonomialIdeal(((0, 2), (2, 1), (3, 0))).gcd() == (0, 0)
    assert MonomialIdeal(((2, 3), (5, 1))).gcd() == (2, 1)
    I = MonomialIdeal(((4, 3), (6, 1)))
    assert I.gcd() == (4, 1)
    anch, g = MonomialIdeal(((2, 5), (4, 2))).anchor()
    assert anch.gens == ((0, 3), (2, 0)) and g == (2, 2)
    anch, g = MonomialIdeal(((3, 4),)).anchor()
    assert anch.gens == ((0, 0),) and g == (3, 4)
    already, g = MonomialIdeal(((0, 2), (3, 0))).anchor()
    assert g == (0, 0) and already.gens == ((0, 2), (3, 0))


def test_dist():
    I = MonomialIdeal(((0, 2), (2, 1), (3, 0)))
    assert I.dist(Axis.X) == 3 and I.dist(Axis.Y) == 2
    big = MonomialIdeal.of((0, 10), (1, 9), (2, 5), (4, 4), (5, 3), (6, 2), (12, 1), (15, 0))
    assert big.dist(Axis.Y) == 10 and big.dist(Axis.X) == 15
    pair = MonomialIdeal(((1, 7), (5, 2)))
    assert pair.dist(Axis.X) == 4 and pair.dist(Axis.Y) == 5


def test_round_trip_canonical():
    for seed in range(30):
        I = random_ideal(RandomIdealSpec(8, 25, seed=seed))
        assert minimalize(I.gens).gens == I.gens


def test_overflow_checked():
    huge = MonomialIdeal(((0, EXP_LIMIT - 1), (1, 0)))
    with pytest.raises(ExponentOverflowError):
        huge * huge
    with pytest.raises(ExponentOverflowError):
        huge.shift((0, 1))


def test_pair_power_staircase():
    P = pair_power((0, 2), (3, 0), 4)
    assert P.gens == ((0, 8), (3, 6), (6, 4), (9, 2), (12, 0))
    assert P.gens == naive_power(MonomialIdeal(((0, 2), (3, 0))), 4).gens
    with pytest.raises(ValueError):
        pair_power((0, 0), (1, 1), 2)


def test_ideal_sum_helper():
    parts = [MonomialIdeal(((0, 2),)), MonomialIdeal(((1, 1),)), MonomialIdeal(((3, 0),))]
    assert ideal_sum(parts).gens == ((0, 2), (1, 1), (3, 0))
    with pytest.raises(ValueError):
        ideal_sum([])


def test_transpose_involution():
    for seed in range(10):
        I = random_ideal(RandomIdealSpec(6, 15, seed=seed))
        assert I.transpose().transpose().gens == I.gens
