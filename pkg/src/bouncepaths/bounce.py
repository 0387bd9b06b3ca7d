"""Generating functions for paths classified by their bounce statistics.

A *left bounce* is an interior vertex with incoming E and outgoing N that
lies on a lattice point of the line y = (beta/alpha) x; a *right bounce* is
the mirror image (incoming N, outgoing E).  EE or NN touches of the line do
not count.  Naming scheme used throughout the package:

* ``g``   -- all paths (see :mod:`bouncepaths.closed_forms`),
* ``f``   -- bounce-free paths,
* ``nrb`` -- paths with no right bounces (equivalently, none on the left),
* ``b_lr`` / :class:`BounceTable` -- paths with exactly ``l`` left and ``r``
  right bounces; the table is the coefficient grid of the two-marker
  generating function over the series ring.
"""

from dataclasses import dataclass
from typing import Mapping

from .closed_forms import Restriction, Slope, Step, binomial, fuss_catalan, g_ab_series, g_series
from .series import RationalSeriesExpr, Series


def _g_parts(slope: Slope, order: int) -> tuple[Series, Series, Series, Series]:
    """(g, g_ee, g_en, g_nn) at the requested truncation order."""
    return (
        g_series(slope, order),
        g_ab_series(slope, Step.E, Step.E, order),
        g_ab_series(slope, Step.E, Step.N, order),
        g_ab_series(slope, Step.N, Step.N, order),
    )


def _require_ab(restriction: Restriction) -> Restriction:
    if restriction is Restriction.ALL:
        raise ValueError("this series is defined per first/last step restriction")
    return restriction


def nrb_series(slope: Slope, restriction: Restriction, order: int) -> Series:
    """Paths of the given class with no right bounces: g_ab / (1 + g_en).

    For EE and NN the same series also counts the class with no left
    bounces, and the EN series counts the mirrored NE-paths with no left
    bounces.  NE-paths with no *right* bounces are not covered by these
    quotients, hence only EE, EN and NN are accepted.
    """
    if restriction not in (Restriction.EE, Restriction.EN, Restriction.NN):
        raise ValueError(
            "no-right-bounce series is defined for the EE, EN and NN classes"
        )
    _, g_ee, g_en, g_nn = _g_parts(slope, order)
    numerator = {
        Restriction.EE: g_ee,
        Restriction.EN: g_en,
        Restriction.NN: g_nn,
    }[restriction]
    return RationalSeriesExpr(numerator, 1 + g_en).expand()


def _bounce_free_denominator(g_ee: Series, g_en: Series, g_nn: Series) -> Series:
    return (1 + g_en) ** 2 - g_ee * g_nn


def bounce_free_ab(slope: Slope, restriction: Restriction, order: int) -> Series:
    """Bounce-free paths with prescribed first and last steps.

    f_ee = g_ee / ((1+g_en)^2 - g_ee*g_nn), f_nn likewise with g_nn, and
    f_en = f_ne = 1 - (1+g_en) / ((1+g_en)^2 - g_ee*g_nn).
    """
    _require_ab(restriction)
    _, g_ee, g_en, g_nn = _g_parts(slope, order)
    den = _bounce_free_denominator(g_ee, g_en, g_nn)
    if restriction is Restriction.EE:
        return RationalSeriesExpr(g_ee, den).expand()
    if restriction is Restriction.NN:
        return RationalSeriesExpr(g_nn, den).expand()
    return 1 - RationalSeriesExpr(1 + g_en, den).expand()


def bounce_free_prefix(slope: Slope, first: Step, order: int) -> Series:
    """Bounce-free paths starting with the given step (ending anywhere).

    By symmetry the same series counts bounce-free paths *ending* with that
    step.
    """
    f_en = bounce_free_ab(slope, Restriction.EN, order)
    if first is Step.E:
        return bounce_free_ab(slope, Restriction.EE, order) + f_en
    return bounce_free_ab(slope, Restriction.NN, order) + f_en


def bounce_free_total(slope: Slope, order: int) -> Series:
    """All bounce-free paths: (g + 2(g_en^2 - g_ee*g_nn)) / ((1+g_en)^2 - g_ee*g_nn)."""
    g, g_ee, g_en, g_nn = _g_parts(slope, order)
    delta = g_en * g_en - g_ee * g_nn
    den = _bounce_free_denominator(g_ee, g_en, g_nn)
    return RationalSeriesExpr(g + 2 * delta, den).expand()


def one_sided_bounce_series(slope: Slope, side: str, count: int, order: int) -> Series:
    """Paths with exactly ``count`` bounces on one side and none on the other.

    For ``count = m >= 1`` this is the product of a bounce-free prefix, m - 1
    bounce-free EN/NE bridges, and a bounce-free suffix; the two sides give
    the same series because the bridge factor is shared.
    """
    if side not in ("left", "right"):
        raise ValueError(f"side must be 'left' or 'right', got {side!r}")
    if count < 1:
        raise ValueError("count must be at least 1; use bounce_free_total for 0")
    f_en = bounce_free_ab(slope, Restriction.EN, order)
    start_e = bounce_free_prefix(slope, Step.E, order)
    start_n = bounce_free_prefix(slope, Step.N, order)
    if side == "left":
        return start_e * f_en ** (count - 1) * start_n
    return start_n * f_en ** (count - 1) * start_e


def no_left_bounce_total(slope: Slope, order: int) -> Series:
    """Paths with no left bounces (equally: no right bounces).

    Closed form (g + g_en^2 - g_ee*g_nn) / (1 + g_en); equals the sum of the
    one-sided series over all counts.
    """
    g, g_ee, g_en, g_nn = _g_parts(slope, order)
    delta = g_en * g_en - g_ee * g_nn
    return RationalSeriesExpr(g + delta, 1 + g_en).expand()


def b_lr_closed_form(slope: Slope, left: int, right: int, order: int) -> Series:
    """Paths with exactly ``left`` and ``right`` bounces, both at least 1.

    Finite sum over the number i of maximal right-bounce runs, in four parts
    according to whether the first and last bounces are left or right ones.
    Terms whose binomial weight vanishes are skipped, which also keeps every
    exponent non-negative.
    """
    if left < 1 or right < 1:
        raise ValueError("both bounce counts must be at least 1")
    f_ee = bounce_free_ab(slope, Restriction.EE, order)
    f_en = bounce_free_ab(slope, Restriction.EN, order)
    f_nn = bounce_free_ab(slope, Restriction.NN, order)
    start_e = f_ee + f_en
    start_n = f_nn + f_en
    ee_nn = f_ee * f_nn

    total = Series.zero(order)
    for i in range(1, left):
        w = binomial(left - 1, i) * binomial(right - 1, i - 1)
        if w:
            total = total + w * (
                start_e * start_n * ee_nn**i * f_en ** (left + right - 2 * i - 1)
            )
    for i in range(1, left + 1):
        w = binomial(left - 1, i - 1) * binomial(right - 1, i - 1)
        if w:
            shared = f_en ** (left + right - 2 * i)
            total = total + w * (
                start_e * start_e * f_ee ** (i - 1) * f_nn**i * shared
            )
            total = total + w * (
                start_n * start_n * f_ee**i * f_nn ** (i - 1) * shared
            )
    for i in range(2, left + 2):
        w = binomial(left - 1, i - 2) * binomial(right - 1, i - 1)
        if w:
            total = total + w * (
                start_n * start_e * ee_nn ** (i - 1) * f_en ** (left + right - 2 * i + 1)
            )
    return total


def g_b_series(total_bounces: int, order: int) -> Series:
    """Paths to (n, n) with exactly ``total_bounces`` bounces of either kind.

    Only meaningful for the diagonal slope (1, 1).  Computed as
    2*(c(x) - 1)^(b+1) with c the Catalan series, and independently from the
    coefficient formula 2*(b+1)/(k+b) * C(2k+2b, k-1) at x^(k+b); the two
    must agree.
    """
    b = total_bounces
    if b < 0:
        raise ValueError("the bounce count must be non-negative")
    c = fuss_catalan(1, order)
    power_form = 2 * (c - 1) ** (b + 1)

    coeffs = [0] * (order + 1)
    for j in range(b + 1, order + 1):
        k = j - b
        num = 2 * (b + 1) * binomial(2 * k + 2 * b, k - 1)
        if num % (k + b):
            raise ArithmeticError(f"coefficient of x^{j} is not an integer")
        coeffs[j] = num // (k + b)
    closed_form = Series(tuple(coeffs))

    if power_form != closed_form:
        raise ArithmeticError(
            "power form and coefficient formula disagree; this is a bug"
        )
    return power_form


# --------------------------------------------------------------------- table


MarkerCells = Mapping[tuple[int, int], Series]


def expand_marker_quotient(
    numerator: MarkerCells,
    denominator: MarkerCells,
    max_left: int,
    max_right: int,
) -> list[list[Series]]:
    """Expand numerator/denominator as a polynomial in two bounded markers.

    Both operands are sparse grids of series indexed by marker degrees
    (l, r).  The denominator's (0, 0) cell must have a unit constant term;
    the quotient is produced cell by cell up to (max_left, max_right) by
    solving numerator = denominator * quotient in increasing degree.
    """
    lead = denominator[(0, 0)]
    inv = lead.reciprocal()
    zero = Series.zero(lead.order)
    rest = [(i, j, cell) for (i, j), cell in denominator.items() if (i, j) != (0, 0)]

    out: list[list[Series]] = [[zero] * (max_right + 1) for _ in range(max_left + 1)]
    for l in range(max_left + 1):
        for r in range(max_right + 1):
            acc = numerator.get((l, r), zero)
            for i, j, cell in rest:
                if i <= l and j <= r:
                    acc = acc - cell * out[l - i][r - j]
            out[l][r] = acc * inv
    return out


@dataclass(frozen=True)
class BounceTable:
    """Grid of series: entry (l, r) counts paths with l left, r right bounces."""

    slope: Slope
    trunc_order: int
    max_left: int
    max_right: int
    restriction: Restriction
    entries: tuple[tuple[Series, ...], ...]

    def __post_init__(self):
        if len(self.entries) != self.max_left + 1 or any(
            len(row) != self.max_right + 1 for row in self.entries
        ):
            raise ValueError("entry grid does not match the declared bounds")
        for l, row in enumerate(self.entries):
            for r, series in enumerate(row):
                if series.order != self.trunc_order:
                    raise ValueError(f"entry ({l}, {r}) has the wrong order")
                if any(c < 0 for c in series.coeffs):
                    raise ValueError(f"entry ({l}, {r}) has a negative coefficient")

    def entry(self, left: int, right: int) -> Series:
        return self.entries[left][right]

    def sum_all(self) -> Series:
        total = Series.zero(self.trunc_order)
        for row in self.entries:
            for series in row:
                total = total + series
        return total


def marker_cells(slope: Slope, restriction: Restriction, order: int) -> tuple[dict, dict]:
    """Numerator and denominator marker grids of the bounce generating function.

    With s marking left and t marking right bounces, the generating function
    for all paths is

        (g + (2-s-t) * d) / (1 + (2-s-t) * g_en + (1-s)(1-t) * d),

    where d = g_en^2 - g_ee*g_nn.  Restrictions replace the numerator by
    g_ee, g_nn, g_en + (1-s)*d or g_en + (1-t)*d for EE, NN, EN and NE.
    """
    g, g_ee, g_en, g_nn = _g_parts(slope, order)
    delta = g_en * g_en - g_ee * g_nn
    denominator = {
        (0, 0): 1 + 2 * g_en + delta,
        (1, 0): -(g_en + delta),
        (0, 1): -(g_en + delta),
        (1, 1): delta,
    }
    if restriction is Restriction.ALL:
        numerator = {(0, 0): g + 2 * delta, (1, 0): -delta, (0, 1): -delta}
    elif restriction is Restriction.EE:
        numerator = {(0, 0): g_ee}
    elif restriction is Restriction.NN:
        numerator = {(0, 0): g_nn}
    elif restriction is Restriction.EN:
        numerator = {(0, 0): g_en + delta, (1, 0): -delta}
    else:
        numerator = {(0, 0): g_en + delta, (0, 1): -delta}
    return numerator, denominator


def bounce_table(
    slope: Slope,
    restriction: Restriction,
    max_left: int,
    max_right: int,
    order: int,
) -> BounceTable:
    """Bounce statistics table from the rational two-marker expansion."""
    if max_left < 0 or max_right < 0:
        raise ValueError("marker bounds must be non-negative")
    numerator, denominator = marker_cells(slope, restriction, order)
    grid = expand_marker_quotient(numerator, denominator, max_left, max_right)
    return BounceTable(
        slope=slope,
        trunc_order=order,
        max_left=max_left,
        max_right=max_right,
        restriction=restriction,
        entries=tuple(tuple(row) for row in grid),
    )


def bounce_table_from_closed_forms(
    slope: Slope, max_left: int, max_right: int, order: int
) -> BounceTable:
    """Unrestricted bounce table assembled entry by entry from closed forms.

    Entry (0, 0) is the bounce-free series, the axes come from the one-sided
    products, and the interior from :func:`b_lr_closed_form`.  Used to
    cross-check :func:`bounce_table`.
    """
    grid: list[list[Series]] = []
    for l in range(max_left + 1):
        row = []
        for r in range(max_right + 1):
            if l == 0 and r == 0:
                row.append(bounce_free_total(slope, order))
            elif r == 0:
                row.append(one_sided_bounce_series(slope, "left", l, order))
            elif l == 0:
                row.append(one_sided_bounce_series(slope, "right", r, order))
            else:
                row.append(b_lr_closed_form(slope, l, r, order))
        grid.append(row)
    return BounceTable(
        slope=slope,
        trunc_order=order,
        max_left=max_left,
        max_right=max_right,
        restriction=Restriction.ALL,
        entries=tuple(tuple(row) for row in grid),
    )
