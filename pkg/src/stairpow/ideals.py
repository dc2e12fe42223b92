"""Exact arithmetic for bivariate monomial ideals.

A monomial ``x^a y^b`` is identified with the exponent pair ``(a, b)``.  A
monomial ideal is represented by its unique minimal generating set, kept in
canonical order: strictly increasing x-exponent, strictly decreasing
y-exponent.  In two variables the minimal generators always form such a
divisibility antichain, so the canonical order doubles as a validity check.

Exponents are restricted to the unsigned 64-bit range.  Any operation that
would leave it raises :class:`ExponentOverflowError` instead of producing an
out-of-range value.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from typing import Iterable, Sequence

import numpy as np

Monomial = tuple[int, int]

#: Exclusive upper bound for exponents (unsigned 64-bit).
EXP_LIMIT = 1 << 63

#: Input size above which minimalization switches to the numpy path.
_NUMPY_CUTOFF = 2048


class ExponentOverflowError(OverflowError):
    """An exponent left the permitted 64-bit range."""


class PrincipalIdealError(ValueError):
    """A non-principal ideal was required."""


class Axis(Enum):
    X = "x"
    Y = "y"

    def other(self) -> "Axis":
        return Axis.Y if self is Axis.X else Axis.X


def _check_exponents(a: int, b: int) -> None:
    if a < 0 or b < 0 or a >= EXP_LIMIT or b >= EXP_LIMIT:
        raise ExponentOverflowError(f"exponent pair ({a}, {b}) out of range")


def mon_mul(m: Monomial, n: Monomial) -> Monomial:
    a, b = m[0] + n[0], m[1] + n[1]
    _check_exponents(a, b)
    return (a, b)


def mon_pow(m: Monomial, n: int) -> Monomial:
    a, b = m[0] * n, m[1] * n
    _check_exponents(a, b)
    return (a, b)


def mon_gcd(m: Monomial, n: Monomial) -> Monomial:
    return (min(m[0], n[0]), min(m[1], n[1]))


def mon_divides(m: Monomial, n: Monomial) -> bool:
    return m[0] <= n[0] and m[1] <= n[1]


def mon_transpose(m: Monomial) -> Monomial:
    return (m[1], m[0])


def _minimalize_small(points: list[Monomial]) -> tuple[Monomial, ...]:
    points.sort()
    kept: list[Monomial] = []
    min_b = None
    for a, b in points:
        if min_b is None or b < min_b:
            kept.append((a, b))
            min_b = b
    return tuple(kept)


def _minimalize_array(arr: np.ndarray) -> tuple[Monomial, ...]:
    # Sort by (a asc, b asc), then keep points whose b strictly undercuts
    # every earlier b.  Identical to the sweep in _minimalize_small.
    order = np.lexsort((arr[:, 1], arr[:, 0]))
    arr = arr[order]
    b = arr[:, 1]
    run_min = np.minimum.accumulate(b)
    mask = np.empty(len(arr), dtype=bool)
    mask[0] = True
    mask[1:] = b[1:] < run_min[:-1]
    return tuple(map(tuple, arr[mask].tolist()))


def minimalize(candidates: Iterable[Monomial]) -> "MonomialIdeal":
    """Return the ideal generated by ``candidates`` in canonical form.

    Keeps exactly the divisibility antichain: a candidate survives iff no
    other candidate divides it.
    """
    points = list(candidates)
    if not points:
        raise ValueError("cannot minimalize an empty set of monomials")
    for a, b in points:
        _check_exponents(a, b)
    if len(points) > _NUMPY_CUTOFF:
        gens = _minimalize_array(np.asarray(points, dtype=np.int64))
    else:
        gens = _minimalize_small(points)
    return MonomialIdeal(gens)


@dataclass(frozen=True)
class MonomialIdeal:
    """A bivariate monomial ideal in canonical minimal-generator form.

    Do not construct directly from unsorted data; use :func:`minimalize` or
    :meth:`MonomialIdeal.of`.
    """

    gens: tuple[Monomial, ...]

    def __post_init__(self) -> None:
        if not self.gens:
            raise ValueError("a monomial ideal needs at least one generator")
        prev = None
        for g in self.gens:
            if prev is not None and not (g[0] > prev[0] and g[1] < prev[1]):
                raise ValueError(f"generators not in canonical antichain order: {self.gens}")
            prev = g

    @classmethod
    def of(cls, *gens: Monomial) -> "MonomialIdeal":
        return minimalize(gens)

    # -- basic queries ----------------------------------------------------

    @property
    def mu(self) -> int:
        return len(self.gens)

    @property
    def is_principal(self) -> bool:
        return len(self.gens) == 1

    @property
    def is_unit(self) -> bool:
        return self.gens == ((0, 0),)

    def contains(self, m: Monomial) -> bool:
        return any(mon_divides(g, m) for g in self.gens)

    def gcd(self) -> Monomial:
        return (min(a for a, _ in self.gens), min(b for _, b in self.gens))

    def dist(self, axis: Axis) -> int:
        i = 0 if axis is Axis.X else 1
        vals = [g[i] for g in self.gens]
        return max(vals) - min(vals)

    # -- arithmetic -------------------------------------------------------

    def __add__(self, other: "MonomialIdeal") -> "MonomialIdeal":
        return minimalize(self.gens + other.gens)

    def __mul__(self, other: "MonomialIdeal") -> "MonomialIdeal":
        lo_a = self.gens[0][0] + other.gens[0][0]
        hi_a = self.gens[-1][0] + other.gens[-1][0]
        hi_b = self.gens[0][1] + other.gens[0][1]
        _check_exponents(hi_a, hi_b)
        _check_exponents(lo_a, 0)
        n, m = len(self.gens), len(other.gens)
        if n * m > _NUMPY_CUTOFF:
            a = np.asarray(self.gens, dtype=np.int64)
            b = np.asarray(other.gens, dtype=np.int64)
            sums = (a[:, None, :] + b[None, :, :]).reshape(-1, 2)
            return MonomialIdeal(_minimalize_array(sums))
        return minimalize(
            (ga + ha, gb + hb) for ga, gb in self.gens for ha, hb in other.gens
        )

    def shift(self, m: Monomial) -> "MonomialIdeal":
        """Multiply by the monomial ``m``."""
        last = self.gens[-1]
        first = self.gens[0]
        _check_exponents(last[0] + m[0], first[1] + m[1])
        return MonomialIdeal(tuple((a + m[0], b + m[1]) for a, b in self.gens))

    def colon(self, m: Monomial) -> "MonomialIdeal":
        """The colon ideal ``I : m`` for a monomial ``m``."""
        u, v = m
        return minimalize((max(a - u, 0), max(b - v, 0)) for a, b in self.gens)

    def anchor(self) -> tuple["MonomialIdeal", Monomial]:
        """Split off the gcd: returns ``(I : gcd(I), gcd(I))``."""
        g = self.gcd()
        if g == (0, 0):
            return self, g
        return MonomialIdeal(tuple((a - g[0], b - g[1]) for a, b in self.gens)), g

    def transpose(self) -> "MonomialIdeal":
        """Swap the roles of x and y."""
        return MonomialIdeal(tuple((b, a) for a, b in reversed(self.gens)))

    def __str__(self) -> str:
        return "[" + ", ".join(f"({a}, {b})" for a, b in self.gens) + "]"


UNIT = MonomialIdeal(((0, 0),))


def ideal_sum(ideals: Sequence[MonomialIdeal]) -> MonomialIdeal:
    if not ideals:
        raise ValueError("empty sum of ideals")
    return minimalize(g for ideal in ideals for g in ideal.gens)


def naive_power(ideal: MonomialIdeal, n: int) -> MonomialIdeal:
    """``I^n`` by ``n - 1`` repeated multiplications.

    Deliberately shortcut-free; this is the reference oracle the fast paths
    are tested against.
    """
    if n < 0:
        raise ValueError(f"power must be non-negative, got {n}")
    if n == 0:
        return UNIT
    result = ideal
    for _ in range(n - 1):
        result = result * ideal
    return result


def pair_power(g: Monomial, h: Monomial, n: int) -> MonomialIdeal:
    """``(g, h)^n`` as the explicit staircase ``{g^j h^(n-j)}``.

    Requires ``g`` and ``h`` to be incomparable; the staircase is then
    already an antichain, so no minimalization is needed.
    """
    if mon_divides(g, h) or mon_divides(h, g):
        raise ValueError(f"{g} and {h} are comparable; staircase power undefined")
    if n == 0:
        return UNIT
    if g[0] > h[0]:
        g, h = h, g
    # g now has the smaller x-exponent (larger y); walk from h^n up to g^n.
    _check_exponents(h[0] * n, g[1] * n)
    gens = [(g[0] * j + h[0] * (n - j), g[1] * j + h[1] * (n - j)) for j in range(n, -1, -1)]
    return MonomialIdeal(tuple(gens))
