"""Newton-polyhedron geometry of bivariate monomial ideals.

The lower-left boundary of the Newton polyhedron of an ideal drives
everything downstream: its corners are the persistent generators (powers of
which stay minimal forever), lattice generators on its edges are the weakly
persistent ones, and the derived constants ``delta_P``, ``d_P``, ``D_P``
bound the power from which the generator pattern of ``I^n`` stabilizes.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum

from .ideals import (
    Axis,
    Monomial,
    MonomialIdeal,
    PrincipalIdealError,
    mon_divides,
    mon_pow,
)


def pair_dist(g: Monomial, h: Monomial, axis: Axis) -> int:
    i = 0 if axis is Axis.X else 1
    return abs(g[i] - h[i])


def lies_between(f: Monomial, g: Monomial, h: Monomial) -> bool:
    """True iff f exceeds the smaller x-degree and smaller y-degree of {g, h}."""
    return min(g[0], h[0]) < f[0] and min(g[1], h[1]) < f[1]


def _require_incomparable(g: Monomial, h: Monomial) -> None:
    if mon_divides(g, h) or mon_divides(h, g):
        raise ValueError(f"{g} and {h} are comparable; the pair grading is undefined")


def weighted_deg(g: Monomial, h: Monomial, f: Monomial) -> int:
    """Degree of f in the grading where x weighs dist_y{g,h} and y weighs dist_x{g,h}."""
    _require_incomparable(g, h)
    return f[0] * pair_dist(g, h, Axis.Y) + f[1] * pair_dist(g, h, Axis.X)


def wdd(g: Monomial, h: Monomial) -> int:
    """The common weighted degree of g and h; f is above the line through g
    and h exactly when weighted_deg(g, h, f) exceeds this."""
    _require_incomparable(g, h)
    return weighted_deg(g, h, g)


class Region(Enum):
    OUTSIDE = -1
    BOUNDARY = 0
    INSIDE = 1


def in_closure_pair(f: Monomial, g: Monomial, h: Monomial) -> Region:
    """Locate f relative to the integral closure of the pair ideal (g, h).

    Requires ``lies_between(f, g, h)``.  INSIDE/BOUNDARY together mean
    membership in the closure; BOUNDARY means f sits exactly on the segment
    from g to h.
    """
    if not lies_between(f, g, h):
        raise ValueError(f"{f} does not lie between {g} and {h}")
    w = weighted_deg(g, h, f)
    line = wdd(g, h)
    if w > line:
        return Region.INSIDE
    if w == line:
        return Region.BOUNDARY
    return Region.OUTSIDE


@dataclass(frozen=True)
class ClosureWitness:
    """f is in the closure of (g, h): g^alpha h^(n-alpha) divides f^n."""

    n: int
    alpha: int


@dataclass(frozen=True)
class OutsideWitness:
    """f is outside the closure of (g, h): f^n divides g^alpha h^(n-alpha)."""

    n: int
    alpha: int


def power_relation_witness(
    f: Monomial, g: Monomial, h: Monomial, axis: Axis
) -> ClosureWitness | OutsideWitness:
    """Produce and verify the divisibility certificate tying f^n to g and h.

    With ``n = dist_axis(g, h)`` and ``alpha = dist_axis(f, h)``, either
    ``g^alpha h^(n-alpha) | f^n`` (closure member) or the divisibility runs
    the other way.  The certificate is checked by direct exponent
    arithmetic before being returned.
    """
    region = in_closure_pair(f, g, h)
    lo_x, hi_x = sorted((g[0], h[0]))
    lo_y, hi_y = sorted((g[1], h[1]))
    if not (lo_x < f[0] < hi_x and lo_y < f[1] < hi_y):
        raise ValueError(
            f"{f} must lie strictly inside the rectangle spanned by {g} and {h}"
        )
    n = pair_dist(g, h, axis)
    alpha = pair_dist(f, h, axis)
    fn = mon_pow(f, n)
    gh = (g[0] * alpha + h[0] * (n - alpha), g[1] * alpha + h[1] * (n - alpha))
    if region is not Region.OUTSIDE:
        if not mon_divides(gh, fn):
            raise AssertionError(f"closure witness failed: {gh} does not divide {fn}")
        return ClosureWitness(n=n, alpha=alpha)
    if not mon_divides(fn, gh):
        raise AssertionError(f"outside witness failed: {fn} does not divide {gh}")
    return OutsideWitness(n=n, alpha=alpha)


def _lower_hull_vertices(points: list[Monomial]) -> list[Monomial]:
    # Points arrive sorted by ascending x / descending y.  Keep the strict
    # vertices of the lower convex hull; collinear interior points drop out.
    hull: list[Monomial] = []
    for p in points:
        while len(hull) >= 2:
            o, a = hull[-2], hull[-1]
            cross = (a[0] - o[0]) * (p[1] - o[1]) - (a[1] - o[1]) * (p[0] - o[0])
            if cross <= 0:
                hull.pop()
            else:
                break
        hull.append(p)
    return hull


def persistent_generators(ideal: MonomialIdeal) -> tuple[Monomial, ...]:
    """The corner generators of the Newton polyhedron, in descending y-order.

    Always contains the generators of maximal x- and maximal y-degree.
    Shift-invariant, so the ideal need not be anchored.
    """
    if ideal.is_principal:
        raise PrincipalIdealError("persistent generators need a non-principal ideal")
    return tuple(_lower_hull_vertices(list(ideal.gens)))


def weakly_persistent_generators(ideal: MonomialIdeal) -> tuple[Monomial, ...]:
    """Corners plus generators sitting exactly on a boundary edge."""
    corners = persistent_generators(ideal)
    index = {g: i for i, g in enumerate(corners)}
    out: list[Monomial] = []
    edge = 0  # current edge runs from corners[edge] to corners[edge + 1]
    for f in ideal.gens:
        if f in index:
            out.append(f)
            edge = index[f]
            continue
        g, h = corners[edge], corners[edge + 1]
        if weighted_deg(g, h, f) == wdd(g, h):
            out.append(f)
    return tuple(out)


@dataclass(frozen=True)
class PersistenceProfile:
    """The boundary generators of an ideal and the stabilization constants.

    ``chosen`` is a set P with ``persistent <= P <= weakly_persistent``
    (ordered in descending y-degree); all constants refer to it.
    """

    persistent: tuple[Monomial, ...]
    weakly_persistent: tuple[Monomial, ...]
    chosen: tuple[Monomial, ...]
    delta_P: int
    d_P: int
    D_P: int

    @property
    def k(self) -> int:
        return len(self.chosen) - 1


def persistence_profile(
    ideal: MonomialIdeal, chosen: tuple[Monomial, ...] | None = None
) -> PersistenceProfile:
    """Compute the profile of ``ideal`` for the given (or default) choice of P.

    ``chosen`` may be any subsequence of the generators sandwiched between
    the persistent and the weakly persistent set, in descending y-order;
    the default is the persistent set itself.
    """
    persistent = persistent_generators(ideal)
    weakly = weakly_persistent_generators(ideal)
    if chosen is None:
        chosen = persistent
    else:
        chosen = tuple(chosen)
        weakly_set = set(weakly)
        if not set(persistent) <= set(chosen) <= weakly_set:
            raise ValueError("chosen P must satisfy P(I) <= P <= P*(I)")
        if list(chosen) != [g for g in ideal.gens if g in set(chosen)]:
            raise ValueError("chosen P must be ordered by descending y-degree")

    delta = max(
        min(pair_dist(g, h, Axis.X), pair_dist(g, h, Axis.Y)) - 1
        for g, h in zip(chosen, chosen[1:])
    )
    if len(chosen) > 2:
        d_p = min(ideal.dist(Axis.X), ideal.dist(Axis.Y)) - 2
    else:
        d_p = 0
    big_d = (ideal.mu - len(chosen)) * delta + len(chosen) * d_p
    return PersistenceProfile(
        persistent=persistent,
        weakly_persistent=weakly,
        chosen=chosen,
        delta_P=delta,
        d_P=d_p,
        D_P=big_d,
    )


def stabilization_radius(ideal: MonomialIdeal, profile: PersistenceProfile, D: int, axis: Axis) -> int:
    """The minimal repeat count r_axis(P, D) for the staircase blocks of I^D."""
    if D == 0:
        return 0
    dist_i = ideal.dist(axis)
    min_pair = min(pair_dist(g, h, axis) for g, h in zip(profile.chosen, profile.chosen[1:]))
    return -(-D * dist_i // min_pair)
