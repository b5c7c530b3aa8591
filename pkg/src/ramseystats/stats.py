"""Chi-squared deviation statistics for monochromatic-fraction sweeps.

An observed sweep (fraction of monochromatic triangles per threshold)
is compared against two references: the expectation curve of a random
coloring and the constant Ramsey-forced floor. Statistics are the plain
goodness-of-fit sums; p-values come from a self-contained regularized
incomplete gamma implementation so the package needs no scipy.

Series values are fractions of the triangle total, never raw counts;
the statistic magnitudes only make sense on that scale.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from typing import NamedTuple, Sequence

from .bounds import goodman_fraction
from .census import TriangleCensus
from .errors import DegenerateReferenceError, InputError, UndefinedBiasError


@dataclass(frozen=True)
class Series:
    """Aligned (threshold, fraction) points, thresholds strictly increasing."""

    thresholds: tuple
    values: tuple

    def __init__(self, thresholds: Sequence, values: Sequence):
        object.__setattr__(self, "thresholds", tuple(thresholds))
        object.__setattr__(self, "values", tuple(values))
        if len(self.thresholds) != len(self.values):
            raise InputError(
                f"{len(self.thresholds)} thresholds vs {len(self.values)} values"
            )
        for a, b in zip(self.thresholds, self.thresholds[1:]):
            if not a < b:
                raise InputError("thresholds must be strictly increasing")
        for v in self.values:
            if not 0 <= v <= 1:
                raise InputError(f"series values are fractions in [0, 1], got {v}")

    def __len__(self) -> int:
        return len(self.values)


class Chi2Kind(Enum):
    VS_EXPECTATION = "vs-expectation"
    VS_GOODMAN = "vs-goodman"
    DEVIATION_OF_DEVIATIONS = "deviation-of-deviations"


@dataclass(frozen=True)
class Chi2Report:
    """A chi-squared statistic with its upper-tail p-value.

    skipped_points counts grid points excluded because the reference
    was zero there (the statistic stays finite and the exclusion stays
    visible).
    """

    statistic: float
    df: int
    p_value: float
    kind: Chi2Kind
    skipped_points: int = 0


def _gamma_p_series(a: float, x: float) -> float:
    # lower regularized gamma by power series, good for x < a + 1
    term = 1.0 / a
    total = term
    ap = a
    for _ in range(500):
        ap += 1.0
        term *= x / ap
        total += term
        if abs(term) < abs(total) * 1e-16:
            break
    return total * math.exp(-x + a * math.log(x) - math.lgamma(a))

def _gamma_q_contfrac(a: float, x: float) -> float:
    # upper regularized gamma by Lentz's continued fraction, x >= a + 1
    tiny = 1e-300
    b = x + 1.0 - a
    c = 1.0 / tiny
    d = 1.0 / b
    h = d
    for i in range(1, 500):
        an = -i * (i - a)
        b += 2.0
        d = an * d + b
        if abs(d) < tiny:
            d = tiny
        c = b + an / c
        if abs(c) < tiny:
            c = tiny
        d = 1.0 / d
        delta = d * c
        h *= delta
        if abs(delta - 1.0) < 1e-16:
            break
    return h * math.exp(-x + a * math.log(x) - math.lgamma(a))

def p_value(statistic: float, df: int = 1) -> float:
    """Upper-tail probability of chi-squared(df) at the given statistic.

    Equals 1 minus the CDF; for df=1 it coincides with
    erfc(sqrt(statistic/2)), which the tests use as an independent
    check. Accurate to well over 6 significant digits.
    """
    if df < 1:
        raise InputError(f"degrees of freedom must be >= 1, got {df}")
    if statistic < 0:
        raise InputError(f"statistic must be nonnegative, got {statistic}")
    if statistic == 0:
        return 1.0
    a = df / 2.0
    x = statistic / 2.0
    if x < a + 1.0:
        return 1.0 - _gamma_p_series(a, x)
    return _gamma_q_contfrac(a, x)


def chi2_vs_expectation(
    observed: Series, expected: Series, df: int = 1
) -> Chi2Report:
    """Goodness of fit of an observed sweep against a reference curve.

    Points where the reference is exactly zero are skipped (and counted
    in the report) rather than dividing by zero.
    """
    if observed.thresholds != expected.thresholds:
        raise InputError("observed and expected series have different thresholds")
    stat = 0.0
    skipped = 0
    for obs, ref in zip(observed.values, expected.values):
        if ref == 0:
            skipped += 1
            continue
        diff = float(obs) - float(ref)
        stat += diff * diff / float(ref)
    return Chi2Report(
        statistic=stat,
        df=df,
        p_value=p_value(stat, df),
        kind=Chi2Kind.VS_EXPECTATION,
        skipped_points=skipped,
    )


def chi2_vs_goodman(
    observed: Series, n: int, per_color: bool = False, df: int = 1
) -> Chi2Report:
    """Deviation of a sweep from the constant forced-triangle floor.

    The reference at every threshold is the forced monochromatic
    fraction for n vertices, or half of it when comparing a single
    color's series (a balanced floor splits evenly).
    """
    ref = goodman_fraction(n).forced_fraction
    if ref == 0:
        raise DegenerateReferenceError(
            f"forced fraction is 0 at n={n}; need n >= 6 for a usable reference"
        )
    if per_color:
        ref = ref / 2
    ref_f = float(ref)
    stat = 0.0
    for obs in observed.values:
        diff = float(obs) - ref_f
        stat += diff * diff / ref_f
    return Chi2Report(
        statistic=stat,
        df=df,
        p_value=p_value(stat, df),
        kind=Chi2Kind.VS_GOODMAN,
    )


def chi2_deviation(a: Chi2Report, b: Chi2Report) -> Chi2Report:
    """Absolute difference of two like statistics, as its own report.

    Both inputs must compare the same kind of reference with the same
    degrees of freedom; the difference keeps that df for its p-value.
    """
    if a.kind is not b.kind:
        raise InputError(f"kind mismatch: {a.kind.value} vs {b.kind.value}")
    if a.df != b.df:
        raise InputError(f"df mismatch: {a.df} vs {b.df}")
    diff = abs(a.statistic - b.statistic)
    return Chi2Report(
        statistic=diff,
        df=a.df,
        p_value=p_value(diff, a.df),
        kind=Chi2Kind.DEVIATION_OF_DEVIATIONS,
    )


def bar_chi2(reports: Sequence[Chi2Report]) -> float:
    """Arithmetic mean of statistics across consecutive clique orders.

    The divisor is the true number of terms supplied (orders 3..M give
    M-2 terms), not M-3.
    """
    if not reports:
        raise InputError("need at least one report to average")
    return sum(r.statistic for r in reports) / len(reports)


class BiasSummary(NamedTuple):
    red_share: Fraction
    blue_share: Fraction
    bias_ratio: object  # Fraction, or math.inf when blue is 0


def bias_summary(census: TriangleCensus) -> BiasSummary:
    """Split of the monochromatic triangles between the two colors.

    bias_ratio is red over blue; an all-red census reports an infinite
    ratio rather than failing, while a census with no monochromatic
    triangles at all has no defined shares.
    """
    if census.mono == 0:
        raise UndefinedBiasError("no monochromatic triangles; shares are undefined")
    red, blue = census.red_triangles, census.blue_triangles
    ratio = math.inf if blue == 0 else Fraction(red, blue)
    return BiasSummary(
        red_share=Fraction(red, census.mono),
        blue_share=Fraction(blue, census.mono),
        bias_ratio=ratio,
    )


def normalized_threshold(t: int, n: int) -> Fraction:
    """Threshold scaled by vertex count for cross-dataset comparison."""
    if n < 1:
        raise InputError(f"vertex count must be >= 1, got {n}")
    return Fraction(t, n)
