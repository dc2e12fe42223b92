"""Fast computation of large powers of bivariate monomial ideals.

The pipeline: bound D from the persistence profile, compute I^D naively,
expand to I^s (s = D + r + 1) as a sum of staircase-pair powers, split I^s
into its stable components, and from then on assemble any I^(s+l) by pure
exponent shifting in time proportional to its own generator count.  The
generator count itself follows the exact linear polynomial
``mu(I^s) + l * slope``.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .ideals import (
    Axis,
    Monomial,
    MonomialIdeal,
    PrincipalIdealError,
    _check_exponents,
    ideal_sum,
    mon_pow,
    naive_power,
)
from .geometry import (
    PersistenceProfile,
    persistence_profile,
    stabilization_radius,
)
from .segments import GluedComponents, glued_components, staircase_times


def _shift_chosen(chosen: Sequence[Monomial] | None, shift: Monomial):
    if chosen is None:
        return None
    return tuple((a - shift[0], b - shift[1]) for a, b in chosen)


def decomposed_power(
    ideal: MonomialIdeal, profile: PersistenceProfile, n: int, base: MonomialIdeal | None = None
) -> MonomialIdeal:
    """``I^n`` via one naive ``I^D`` and staircase-pair expansions.

    Valid for ``n >= D_P``; the pair powers are generated directly as
    staircases, so the work per summand is linear in the candidate count.
    ``base`` may supply a precomputed ``I^D``.
    """
    d = profile.D_P
    if n < d:
        raise ValueError(f"decomposed power needs n >= D_P = {d}, got {n}")
    if base is None:
        base = naive_power(ideal, d)
    if n == d:
        return base
    gs = profile.chosen
    return ideal_sum(
        [staircase_times(g, h, n - d, base) for g, h in zip(gs, gs[1:])]
    )


@dataclass(frozen=True)
class StableDecomposition:
    """Everything needed to emit G(I^n) for any n >= s by shifting alone.

    The components live in the working orientation: the ideal is anchored
    and, when ``axis`` is X, transposed so that the y-oriented machinery
    applies.  ``boundary_points`` are h_0..h_{k+1} of the oriented I^s.
    """

    base: MonomialIdeal
    gcd_shift: Monomial
    axis: Axis
    profile: PersistenceProfile
    D: int
    r: int
    s: int
    gs: tuple[Monomial, ...]
    components: tuple[MonomialIdeal, ...]
    middles: tuple[MonomialIdeal, ...]
    boundary_points: tuple[Monomial, ...]
    base_power: MonomialIdeal

    @property
    def k(self) -> int:
        return len(self.gs) - 1

    @property
    def slope(self) -> int:
        return sum(h.mu - 1 for h in self.middles)

    def oriented(self, ideal: MonomialIdeal, n: int) -> MonomialIdeal:
        """Map I^n from original coordinates into the working orientation."""
        shifted = ideal.colon(mon_pow(self.gcd_shift, n))
        return shifted.transpose() if self.axis is Axis.X else shifted

    def unoriented(self, ideal: MonomialIdeal, n: int) -> MonomialIdeal:
        if self.axis is Axis.X:
            ideal = ideal.transpose()
        return ideal.shift(mon_pow(self.gcd_shift, n))


def stable_decomposition(
    ideal: MonomialIdeal,
    chosen: Sequence[Monomial] | None = None,
    D: int | None = None,
) -> StableDecomposition:
    """Compute the stable components of ``ideal``.

    ``chosen`` optionally picks the boundary generator set P (between the
    persistent and the weakly persistent generators, in the original
    coordinates); ``D`` may be raised above the default bound D_P.
    """
    if ideal.is_principal:
        raise PrincipalIdealError("stable decomposition needs a non-principal ideal")
    anchored, shift = ideal.anchor()
    profile = persistence_profile(anchored, _shift_chosen(chosen, shift))
    if D is None:
        D = profile.D_P
    elif D < profile.D_P:
        raise ValueError(f"D={D} below the guaranteed bound D_P={profile.D_P}")

    r_x = stabilization_radius(anchored, profile, D, Axis.X)
    r_y = stabilization_radius(anchored, profile, D, Axis.Y)
    axis = Axis.Y if r_y <= r_x else Axis.X
    r = min(r_x, r_y)
    s = D + r + 1

    if axis is Axis.Y:
        oriented = anchored
        gs = profile.chosen
    else:
        oriented = anchored.transpose()
        gs = tuple((b, a) for a, b in reversed(profile.chosen))

    j_base = naive_power(oriented, D)
    glued: GluedComponents = glued_components(gs, j_base, r)
    boundary = (
        ((0, glued.base.dist(Axis.Y)),)
        + glued.link_points
        + ((glued.base.dist(Axis.X), 0),)
    )
    return StableDecomposition(
        base=ideal,
        gcd_shift=shift,
        axis=axis,
        profile=profile,
        D=D,
        r=r,
        s=s,
        gs=gs,
        components=glued.components,
        middles=glued.middles,
        boundary_points=boundary,
        base_power=glued.base,
    )


def _emit(dec: StableDecomposition, ell: int) -> tuple[list[Monomial], int]:
    """Emit the oriented generators of I^(s+ell); returns (gens, additions)."""
    blocks: list[tuple[MonomialIdeal, int]] = [(dec.components[0], 1)]
    for i in range(dec.k):
        blocks.append((dec.middles[i], ell))
        blocks.append((dec.components[i + 1], 1))
    total_x = sum(part.dist(Axis.X) * reps for part, reps in blocks)
    total_y = sum(part.dist(Axis.Y) * reps for part, reps in blocks)
    _check_exponents(total_x, total_y)

    gens: list[Monomial] = []
    additions = 0
    x = 0
    y = total_y
    first = True
    for part, reps in blocks:
        dx = part.dist(Axis.X)
        dy = part.dist(Axis.Y)
        body = part.gens
        for _ in range(reps):
            y -= dy
            for a, b in body if first else body[1:]:
                gens.append((a + x, b + y))
                additions += 1
            x += dx
            first = False
    return gens, additions


def assemble_power_counted(dec: StableDecomposition, n: int) -> tuple[MonomialIdeal, int]:
    """Like :func:`assemble_power` but also reports the number of exponent
    additions spent emitting generators."""
    if n < dec.s:
        raise ValueError(f"assembly needs n >= s = {dec.s}, got {n}")
    gens, additions = _emit(dec, n - dec.s)
    oriented = MonomialIdeal(tuple(gens))
    return dec.unoriented(oriented, n), additions


def assemble_power(dec: StableDecomposition, n: int) -> MonomialIdeal:
    """``I^n`` for ``n >= s``, emitted band by band from the components."""
    return assemble_power_counted(dec, n)[0]


def power(ideal: MonomialIdeal, n: int) -> MonomialIdeal:
    """``I^n`` through the cheapest applicable route.

    Principal ideals short-circuit to the single-generator power.  Below
    D_P the naive oracle runs; between D_P and s the staircase expansion;
    from s on the stable-component assembly.
    """
    if n < 1:
        raise ValueError(f"power must be >= 1, got {n}")
    if ideal.is_principal:
        return MonomialIdeal((mon_pow(ideal.gens[0], n),))
    profile = persistence_profile(ideal)
    if n < profile.D_P:
        return naive_power(ideal, n)
    dec = stable_decomposition(ideal)
    if n < dec.s:
        anchored, shift = ideal.anchor()
        inner = decomposed_power(anchored, dec.profile, n)
        return inner.shift(mon_pow(shift, n))
    return assemble_power(dec, n)


@dataclass(frozen=True)
class MuPolynomial:
    """The exact generator count ``mu(I^n) = intercept + (n - s) * slope``
    valid for all n >= s."""

    s: int
    intercept: int
    slope: int

    def __call__(self, n: int) -> int:
        if n < self.s:
            raise ValueError(f"mu polynomial only valid for n >= {self.s}")
        return self.intercept + (n - self.s) * self.slope


def mu_polynomial(ideal: MonomialIdeal, chosen: Sequence[Monomial] | None = None) -> MuPolynomial:
    dec = stable_decomposition(ideal, chosen)
    return MuPolynomial(s=dec.s, intercept=dec.base_power.mu, slope=dec.slope)


def _bands(dec: StableDecomposition, ell: int) -> list[tuple[int, int]]:
    """Per middle block i: (bottom y-degree of its last copy, its y-span)."""
    out = []
    for i in range(dec.k):
        h = dec.boundary_points[i + 1]
        v = dec.middles[i].dist(Axis.Y)
        out.append((h[1] + ell * dec.gs[i + 1][1], v))
    return out


def shift_generators(dec: StableDecomposition, gens_n: MonomialIdeal, n: int) -> MonomialIdeal:
    """``G(I^(n+1))`` from ``G(I^n)`` by multiplying each generator with one
    or two boundary generators selected by its y-degree band.

    ``n`` must be at least s and ``gens_n`` must equal G(I^n).
    """
    if n < dec.s:
        raise ValueError(f"generator shifting needs n >= s = {dec.s}")
    oriented = dec.oriented(gens_n, n)
    bands = _bands(dec, n - dec.s)
    gs = dec.gs
    products: set[Monomial] = set()
    for f in oriented.gens:
        b = f[1]
        factors: list[Monomial] = []
        for i, (bottom, v) in enumerate(bands):
            if bottom <= b <= bottom + v:
                factors.extend((gs[i], gs[i + 1]))
        if not factors:
            if b < bands[-1][0]:
                factors = [gs[-1]]
            else:
                # strictly inside the i-th component band: one factor
                i = next(
                    idx for idx, (bottom, v) in enumerate(bands) if b > bottom + v
                )
                factors = [gs[i]]
        for g in factors:
            products.add((f[0] + g[0], f[1] + g[1]))
    result = MonomialIdeal(tuple(sorted(products)))
    expected = oriented.mu + dec.slope
    assert result.mu == expected, "band shift produced a wrong generator count"
    return dec.unoriented(result, n + 1)


def back_shift_factor(
    dec: StableDecomposition, gen: Monomial, n: int
) -> tuple[int, Monomial]:
    """For a generator of I^n with n in {s+1, s+2}: the boundary generator
    it can be divided by to land in G(I^(n-1)).

    Returns ``(i, factor)`` with i the 1-based index of the surrounding
    boundary pair and ``factor`` in original coordinates.
    """
    ell = n - dec.s
    if ell not in (1, 2):
        raise ValueError("back shifting is only available for n in {s+1, s+2}")
    power_n = assemble_power(dec, n)
    if tuple(gen) not in set(power_n.gens):
        raise ValueError(f"{gen} is not a minimal generator of I^{n}")
    prev_gens = set(dec.oriented(assemble_power(dec, n - 1), n - 1).gens)

    shifted = (gen[0] - n * dec.gcd_shift[0], gen[1] - n * dec.gcd_shift[1])
    f = (shifted[1], shifted[0]) if dec.axis is Axis.X else shifted
    gs = dec.gs
    for i in range(1, dec.k + 1):
        if not (n * gs[i][1] <= f[1] <= n * gs[i - 1][1]):
            continue
        h = dec.boundary_points[i]
        threshold = h[1] + gs[i - 1][1] + (gs[i][1] if ell == 2 else 0)
        factor = gs[i - 1] if f[1] >= threshold else gs[i]
        reduced = (f[0] - factor[0], f[1] - factor[1])
        if reduced[0] >= 0 and reduced[1] >= 0 and reduced in prev_gens:
            if dec.axis is Axis.X:
                factor = (factor[1], factor[0])
            full = (factor[0] + dec.gcd_shift[0], factor[1] + dec.gcd_shift[1])
            return i, full
    raise AssertionError(f"no boundary factor found for {gen} at n={n}")
