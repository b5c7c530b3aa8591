"""Closed-form floors and ceilings on monochromatic clique counts.

Every two-coloring of K_n is forced to contain a minimum number of
monochromatic triangles (Goodman's theorem); random colorings have a
simple expected census; and for orders m >= 4 only an upper bound on
the minimal monochromatic fraction is known (Thomason). All results
here are exact integers or exact rationals; callers convert to floats
at the reporting boundary.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import comb

from .errors import InputError, UnsupportedOrderError


def goodman_min(n: int) -> int:
    """Minimum monochromatic triangles forced in any two-colored K_n.

    Three-case form: m(m-1)(m-2)/3 for n = 2m, 2m(m-1)(4m+1)/3 for
    n = 4m+1, and 2m(m+1)(4m-1)/3 for n = 4m+3. Zero for n <= 5.
    """
    if n < 1:
        raise InputError(f"vertex count must be >= 1, got {n}")
    if n % 2 == 0:
        m = n // 2
        return m * (m - 1) * (m - 2) // 3
    if n % 4 == 1:
        m = (n - 1) // 4
        return 2 * m * (m - 1) * (4 * m + 1) // 3
    m = (n - 3) // 4
    return 2 * m * (m + 1) * (4 * m - 1) // 3


def schwenk_forced(n: int) -> int:
    """Forced monochromatic triangle count in the single floor form.

    F(n) = C(n,3) - floor(n/2 * floor((n-1)^2 / 4)). Agrees with
    goodman_min for every n; the two are cross-checked in the tests.
    """
    if n < 3:
        raise InputError(f"need n >= 3, got {n}")
    return comb(n, 3) - n * ((n - 1) ** 2 // 4) // 2


@dataclass(frozen=True)
class GoodmanBound:
    """Forced-triangle floor for K_n, as a count and as exact fractions.

    `floorless_fraction` is the floor-free approximation
    1/4 - 3/(4(n-2)); `asymptotic_fraction` is (n-3)/(4n). Both tend to
    1/4 from below as n grows.
    """

    n: int
    forced_count: int
    forced_fraction: Fraction
    asymptotic_fraction: Fraction
    floorless_fraction: Fraction


def goodman_fraction(n: int) -> GoodmanBound:
    """Forced monochromatic-triangle fraction of the C(n,3) total."""
    if n < 3:
        raise InputError(f"need n >= 3, got {n}")
    forced = schwenk_forced(n)
    return GoodmanBound(
        n=n,
        forced_count=forced,
        forced_fraction=Fraction(forced, comb(n, 3)),
        asymptotic_fraction=Fraction(n - 3, 4 * n),
        floorless_fraction=Fraction(1, 4) - Fraction(3, 4 * (n - 2)),
    )


def thomason_bound(m: int) -> float:
    """Upper bound 0.936 * 2^(1 - C(m,2)) on the minimal monochromatic
    K_m fraction over all two-colorings. Defined for m >= 4 (order 3 has
    the exact Goodman floor instead)."""
    if m < 4:
        raise UnsupportedOrderError(f"order must be >= 4, got {m}")
    return 0.936 * 2.0 ** (1 - comb(m, 2))


@dataclass(frozen=True)
class ExpectationCurve:
    """Expected monochromatic K_m census of a random coloring of K_n
    where each edge is independently red with probability t.

    expected_red = C(n,m) * t^C(m,2) and expected_blue is the mirror
    term in (1-t). Values are exact rationals, so the mono sum is
    exactly symmetric under t <-> 1-t and never overflows.
    """

    n: int
    m: int
    t: Fraction
    expected_red: Fraction
    expected_blue: Fraction

    @property
    def expected_mono(self) -> Fraction:
        return self.expected_red + self.expected_blue

    @property
    def expected_mono_fraction(self) -> Fraction:
        return self.expected_mono / comb(self.n, self.m)


def expected_mono(n: int, m: int, t) -> ExpectationCurve:
    """Expected red/blue/monochromatic K_m counts at red-edge probability t.

    Accepts t as float, int, or Fraction; t must lie in [0, 1].
    """
    if m < 3:
        raise InputError(f"clique order must be >= 3, got {m}")
    if n < m:
        raise InputError(f"need n >= m, got n={n}, m={m}")
    t = Fraction(t)
    if not 0 <= t <= 1:
        raise InputError(f"probability t must be in [0, 1], got {float(t)}")
    pairs = comb(m, 2)
    total = comb(n, m)
    return ExpectationCurve(
        n=n,
        m=m,
        t=t,
        expected_red=total * t**pairs,
        expected_blue=total * (1 - t) ** pairs,
    )
