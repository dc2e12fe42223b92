"""The link operation on bivariate monomial ideals.

Linking joins two anchored staircases so that they share exactly one
minimal generator, the link point: for the y-orientation the left ideal is
shifted up by the y-span of the right one, the right ideal is shifted right
by the x-span of the left one.  Generator counts therefore add minus one,
and a linked ideal can be split back into its parts by colon ideals at the
link points.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .ideals import (
    Axis,
    Monomial,
    MonomialIdeal,
    mon_gcd,
    _check_exponents,
)


def link_point(left: MonomialIdeal, right: MonomialIdeal, axis: Axis = Axis.Y) -> Monomial:
    """The single generator shared by the two shifted staircases of a link."""
    if axis is Axis.X:
        p = link_point(left.transpose(), right.transpose(), Axis.Y)
        return (p[1], p[0])
    lred, _ = left.anchor()
    rred, _ = right.anchor()
    return (lred.dist(Axis.X), rred.dist(Axis.Y))


def link(left: MonomialIdeal, right: MonomialIdeal, axis: Axis = Axis.Y) -> MonomialIdeal:
    """The link of two ideals; both are anchored first."""
    return link_many([left, right], axis).ideal


@dataclass(frozen=True)
class LinkChain:
    """An ideal assembled as a chain of links, with its bookkeeping.

    ``parts`` are the anchored constituents, ``link_points`` the interior
    points h_1..h_k; ``boundary_points`` prepends the sentinel
    ``y^dist_y`` and appends ``x^dist_x`` of the assembled ideal.
    """

    parts: tuple[MonomialIdeal, ...]
    axis: Axis
    ideal: MonomialIdeal
    link_points: tuple[Monomial, ...]

    @property
    def boundary_points(self) -> tuple[Monomial, ...]:
        top = (0, self.ideal.dist(Axis.Y))
        bottom = (self.ideal.dist(Axis.X), 0)
        if self.axis is Axis.X:
            top, bottom = (self.ideal.dist(Axis.X), 0), (0, self.ideal.dist(Axis.Y))
        return (top,) + self.link_points + (bottom,)


def _link_many_y(parts: Sequence[MonomialIdeal]) -> LinkChain:
    anchored = [p.anchor()[0] for p in parts]
    dx = [p.dist(Axis.X) for p in anchored]
    dy = [p.dist(Axis.Y) for p in anchored]
    total_x = sum(dx)
    total_y = sum(dy)
    _check_exponents(total_x, total_y)

    gens: list[Monomial] = []
    points: list[Monomial] = []
    x_shift = 0
    y_shift = total_y
    for j, part in enumerate(anchored):
        y_shift -= dy[j]
        # Each part contributes its full staircase except the top generator,
        # which coincides with the previous part's bottom one (the link point).
        start = 0 if j == 0 else 1
        gens.extend((a + x_shift, b + y_shift) for a, b in part.gens[start:])
        x_shift += dx[j]
        if j + 1 < len(anchored):
            points.append((x_shift, y_shift))
    ideal = MonomialIdeal(tuple(gens))
    return LinkChain(parts=tuple(anchored), axis=Axis.Y, ideal=ideal, link_points=tuple(points))


def link_many(parts: Sequence[MonomialIdeal], axis: Axis = Axis.Y) -> LinkChain:
    """Left-fold link of a sequence of ideals, keeping all link points."""
    if not parts:
        raise ValueError("cannot link an empty sequence of ideals")
    if axis is Axis.Y:
        return _link_many_y(parts)
    chain = _link_many_y([p.transpose() for p in parts])
    return LinkChain(
        parts=tuple(p.transpose() for p in chain.parts),
        axis=Axis.X,
        ideal=chain.ideal.transpose(),
        link_points=tuple((b, a) for a, b in chain.link_points),
    )


def unlink(
    ideal: MonomialIdeal, link_points: Sequence[Monomial], axis: Axis = Axis.Y
) -> list[MonomialIdeal]:
    """Recover the anchored parts of a linked ideal from its link points.

    Inverse of :func:`link_many` for the points it records: part i is the
    colon of the ideal by the gcd of the two surrounding link points (with
    axis-extreme sentinels at the ends).
    """
    if ideal.gcd() != (0, 0):
        raise ValueError("unlink expects an anchored ideal")
    gen_set = set(ideal.gens)
    for p in link_points:
        if tuple(p) not in gen_set:
            raise ValueError(f"link point {p} is not a generator of the ideal")
    if axis is Axis.X:
        parts = unlink(ideal.transpose(), [(b, a) for a, b in link_points], Axis.Y)
        return [p.transpose() for p in parts]
    sentinels = (
        [(0, ideal.dist(Axis.Y))] + [tuple(p) for p in link_points] + [(ideal.dist(Axis.X), 0)]
    )
    return [ideal.colon(mon_gcd(a, b)) for a, b in zip(sentinels, sentinels[1:])]
