import pytest

from stairpow.ideals import Axis, MonomialIdeal, PrincipalIdealError, mon_pow, naive_power
from stairpow.engine import (
    assemble_power,
    assemble_power_counted,
    back_shift_factor,
    decomposed_power,
    mu_polynomial,
    power,
    shift_generators,
    stable_decomposition,
)
from stairpow.geometry import persistence_profile
from stairpow.oracle import RandomIdealSpec, random_ideal

SMALL = MonomialIdeal(((0, 2), (2, 1), (3, 0)))
BIG = MonomialIdeal.of((0, 10), (1, 9), (2, 5), (4, 4), (5, 3), (6, 2), (12, 1), (15, 0))


def test_decomposed_power_small():
    profile = persistence_profile(SMALL)
    for n in range(profile.D_P, 9):
        assert decomposed_power(SMALL, profile, n).gens == naive_power(SMALL, n).gens
    with pytest.raises(ValueError):
        decomposed_power(SMALL, profile, profile.D_P - 1)


def test_decomposed_power_at_d_is_base():
    profile = persistence_profile(SMALL)
    assert decomposed_power(SMALL, profile, profile.D_P).gens == naive_power(
        SMALL, profile.D_P
    ).gens


def test_small_decomposition_golden():
    dec = stable_decomposition(SMALL)
    assert (dec.D, dec.r, dec.s) == (1, 1, 3)
    assert dec.axis is Axis.Y
    assert dec.components[0].gens == ((0, 4), (2, 3), (3, 2), (5, 1), (6, 0))
    assert dec.middles[0].gens == SMALL.gens
    assert dec.components[1].gens == SMALL.gens
    assert dec.boundary_points == ((0, 6), (6, 2), (9, 0))


def test_big_decomposition_golden():
    dec = stable_decomposition(BIG)
    assert (dec.D, dec.r, dec.s) == (40, 200, 241)
    assert dec.boundary_points == (
        (0, 2410),
        (162, 2005),
        (753, 1002),
        (1815, 400),
        (3615, 0),
    )
    assert dec.base_power.mu == 1688
    assert dec.slope == 7


def test_boundary_point_degree_sandwich():
    # deg_y g_{i+1}^s <= deg_y h_i <= deg_y g_i^{r+1}
    for ideal in (SMALL, BIG):
        dec = stable_decomposition(ideal)
        for i in range(1, dec.k + 1):
            h = dec.boundary_points[i]
            assert dec.gs[i][1] * dec.s <= h[1] <= dec.gs[i - 1][1] * (dec.r + 1)


def test_two_generator_pipeline():
    I = MonomialIdeal(((0, 4), (3, 0)))
    dec = stable_decomposition(I)
    assert (dec.D, dec.r, dec.s) == (0, 0, 1)
    assert dec.middles[0].gens == I.gens
    for n in range(1, 6):
        assert assemble_power(dec, n).gens == naive_power(I, n).gens
    poly = mu_polynomial(I)
    for n in range(1, 10):
        assert poly(n) == n + 1


def test_assemble_equals_oracle_small():
    dec = stable_decomposition(SMALL)
    for n in range(dec.s, 12):
        assert assemble_power(dec, n).gens == naive_power(SMALL, n).gens
    with pytest.raises(ValueError):
        assemble_power(dec, dec.s - 1)


def test_assemble_big_against_decomposed():
    dec = stable_decomposition(BIG)
    anchored, _ = BIG.anchor()
    for n in (241, 251):
        assert (
            assemble_power(dec, n).gens
            == decomposed_power(anchored, dec.profile, n).gens
        )
    assert assemble_power(dec, 251).mu == 1688 + 70


def test_power_dispatcher_boundaries():
    dec = stable_decomposition(SMALL)
    for n in [max(1, dec.D - 1), dec.D, dec.s - 1, dec.s, dec.s + 3]:
        if n < 1:
            continue
        assert power(SMALL, n).gens == naive_power(SMALL, n).gens
    assert power(SMALL, 1).gens == SMALL.gens
    with pytest.raises(ValueError):
        power(SMALL, 0)


def test_power_principal():
    assert power(MonomialIdeal(((2, 3),)), 4).gens == ((8, 12),)


def test_power_large_mu():
    assert power(BIG, 10**4 + 241).mu == 1688 + 7 * 10**4


def test_mu_polynomial_examples():
    poly = mu_polynomial(SMALL)
    assert (poly.s, poly.intercept, poly.slope) == (3, 7, 2)
    poly = mu_polynomial(BIG)
    assert (poly.s, poly.intercept, poly.slope) == (241, 1688, 7)
    with pytest.raises(ValueError):
        poly(poly.s - 1)
    with pytest.raises(PrincipalIdealError):
        mu_polynomial(MonomialIdeal(((1, 1),)))


def test_mu_slope_cross_check():
    for seed in range(10):
        I = random_ideal(RandomIdealSpec(6, 12, seed=seed))
        dec = stable_decomposition(I)
        s1 = assemble_power(dec, dec.s + 1).mu
        s0 = assemble_power(dec, dec.s).mu
        assert dec.slope == s1 - s0


def test_mu_linearity_random():
    for seed in range(10):
        I = random_ideal(RandomIdealSpec(6, 12, seed=50 + seed))
        dec = stable_decomposition(I)
        poly = mu_polynomial(I)
        for ell in range(11):
            assert assemble_power(dec, dec.s + ell).mu == poly(dec.s + ell)


def test_shift_invariance_of_decomposition():
    for seed in range(10):
        I = random_ideal(RandomIdealSpec(6, 12, seed=seed))
        J = I.shift((3, 5))
        a, b = stable_decomposition(I), stable_decomposition(J)
        assert a.components == b.components
        assert a.middles == b.middles
        assert (a.D, a.r, a.s) == (b.D, b.r, b.s)
        assert mu_polynomial(I) == mu_polynomial(J)


def test_shift_generators_small():
    dec = stable_decomposition(SMALL)
    four = shift_generators(dec, assemble_power(dec, 3), 3)
    assert four.mu == 9
    assert four.gens == naive_power(SMALL, 4).gens


def test_shift_generators_iterated():
    for seed in (0, 3, 7):
        I = random_ideal(RandomIdealSpec(6, 10, seed=seed))
        dec = stable_decomposition(I)
        cur = assemble_power(dec, dec.s)
        for n in range(dec.s, dec.s + 5):
            cur = shift_generators(dec, cur, n)
            assert cur.gens == assemble_power(dec, n + 1).gens


def test_shift_generators_band_cases():
    dec = stable_decomposition(SMALL)
    n = 4
    gens_n = assemble_power(dec, n)
    result = set(shift_generators(dec, gens_n, n).gens)
    # Below the lowest band, a generator moves by g_{k+1} = x^3 only.
    bottom = min(gens_n.gens, key=lambda g: g[1])
    assert (bottom[0] + 3, bottom[1]) in result
    # The link point itself sits in the double band and contributes both
    # products; one of them collides with a neighbour's product.
    expected_mu = gens_n.mu + dec.slope
    assert len(result) == expected_mu


def test_shift_generators_validates_n():
    dec = stable_decomposition(SMALL)
    with pytest.raises(ValueError):
        shift_generators(dec, SMALL, 1)


def test_back_shift_exhaustive_small():
    dec = stable_decomposition(SMALL)
    for n in (dec.s + 1, dec.s + 2):
        prev = set(naive_power(SMALL, n - 1).gens)
        for g in assemble_power(dec, n).gens:
            i, factor = back_shift_factor(dec, g, n)
            assert 1 <= i <= dec.k
            assert factor in SMALL.gens
            assert (g[0] - factor[0], g[1] - factor[1]) in prev


def test_back_shift_random():
    for seed in range(6):
        I = random_ideal(RandomIdealSpec(5, 10, seed=seed))
        dec = stable_decomposition(I)
        for n in (dec.s + 1, dec.s + 2):
            prev = set(assemble_power(dec, n - 1).gens)
            for g in assemble_power(dec, n).gens:
                _, factor = back_shift_factor(dec, g, n)
                assert (g[0] - factor[0], g[1] - factor[1]) in prev


def test_back_shift_restrictions():
    dec = stable_decomposition(SMALL)
    with pytest.raises(ValueError):
        back_shift_factor(dec, (0, 6), dec.s)
    with pytest.raises(ValueError):
        back_shift_factor(dec, (1, 1), dec.s + 1)


def test_addition_counter_linear():
    dec = stable_decomposition(SMALL)
    base = assemble_power_counted(dec, dec.s)[1]
    slope_with_corrections = sum(h.mu for h in dec.middles) - dec.k
    for ell in (10, 100, 1000):
        _, adds = assemble_power_counted(dec, dec.s + ell)
        assert adds == base + ell * slope_with_corrections


def test_bound_conformance_random():
    for seed in range(40):
        I = random_ideal(RandomIdealSpec(8, 20, seed=seed))
        dec = stable_decomposition(I)
        anchored, _ = I.anchor()
        d = min(anchored.dist(Axis.X), anchored.dist(Axis.Y))
        if len(dec.profile.chosen) == 2:
            assert dec.s == 2 * (I.mu - 2) * (d - 1) + 1
        else:
            assert dec.s <= I.mu * (d * d - 1) + 1


def test_d_override():
    dec = stable_decomposition(SMALL, D=3)
    assert dec.D == 3
    assert assemble_power(dec, dec.s).gens == naive_power(SMALL, dec.s).gens
    with pytest.raises(ValueError):
        stable_decomposition(SMALL, D=0)


def test_principal_rejected():
    with pytest.raises(PrincipalIdealError):
        stable_decomposition(MonomialIdeal(((3, 4),)))
