"""Named identity suites: every closed form against its independent check.

Each suite returns a list of :class:`CheckResult`; a failing check carries
the first mismatching coefficient (slope, k, and grid cell where relevant)
in its detail string.  The suites back both the command line ``verify``
command and the acceptance tests.
"""

import math
import random
from dataclasses import dataclass

from .beta_one import (
    TwoRowShape,
    bounce_free_ab_beta1,
    bounce_table_beta1,
    f_ab_via_fuss_catalan,
    nhc_nrb_series,
    nhc_prefix_series,
    nhc_series,
    rational_dyck_series,
    syt_two_row_count,
)
from .bounce import (
    b_lr_closed_form,
    bounce_free_ab,
    bounce_free_prefix,
    bounce_free_total,
    bounce_table,
    bounce_table_from_closed_forms,
    expand_marker_quotient,
    g_b_series,
    no_left_bounce_total,
    nrb_series,
    one_sided_bounce_series,
)
from .closed_forms import (
    AB_RESTRICTIONS,
    Restriction,
    Slope,
    Step,
    binomial,
    fuss_catalan,
    g_ab_series,
    g_prefix_series,
    g_series,
)
from .enumeration import count_matching, count_table, enumerate_profiles, enumerate_syt
from .series import Series


@dataclass
class CheckResult:
    name: str
    passed: bool
    detail: str = ""

    def __str__(self):
        mark = "PASS" if self.passed else "FAIL"
        return f"{mark}  {self.name}" + (f"  [{self.detail}]" if self.detail else "")


def coprime_slopes(max_sum: int) -> list[Slope]:
    """All slopes with alpha + beta <= max_sum, in a fixed order."""
    found = []
    for total in range(2, max_sum + 1):
        for alpha in range(1, total):
            beta = total - alpha
            if math.gcd(alpha, beta) == 1:
                found.append(Slope(alpha, beta))
    return found


def _slope_range(alpha, beta, max_slope_sum):
    if alpha is not None and beta is not None:
        return [Slope(alpha, beta)]
    return coprime_slopes(max_slope_sum)


def _series_equal(name: str, got: Series, expected: Series, context: str = "") -> CheckResult:
    n = min(got.order, expected.order)
    for k in range(n + 1):
        if got.coeffs[k] != expected.coeffs[k]:
            where = f"{context} " if context else ""
            return CheckResult(
                name,
                False,
                f"{where}k={k} expected={expected.coeffs[k]} actual={got.coeffs[k]}",
            )
    return CheckResult(name, True)


# ----------------------------------------------------------- fixed sequences

REFERENCE_SEQUENCES = {
    # slope (2, 1), bounce-free EE- and EN-paths through x^8
    # (the OEIS pair A000259/A000305)
    "f_ee(2,1)": (1, 4, 18, 89, 466, 2537, 14209, 81316),
    "f_en(2,1)": (1, 3, 13, 63, 326, 1761, 9808, 55895),
    # alpha = 2: E-start, crossless, no right bounces through x^8 (OEIS A046646)
    "H(2)": (2, 6, 24, 110, 546, 2856, 15504, 86526),
}


def suite_reference_series() -> list[CheckResult]:
    """The published reference sequences reproduced exactly."""
    results = []
    slope = Slope(2, 1)
    results.append(
        _series_equal(
            "reference f_ee(2,1) through x^8",
            bounce_free_ab(slope, Restriction.EE, 8),
            Series((0,) + REFERENCE_SEQUENCES["f_ee(2,1)"]),
        )
    )
    results.append(
        _series_equal(
            "reference f_en(2,1) through x^8",
            bounce_free_ab(slope, Restriction.EN, 8),
            Series((0,) + REFERENCE_SEQUENCES["f_en(2,1)"]),
        )
    )
    results.append(
        _series_equal(
            "reference H(2) through x^8",
            nhc_nrb_series(2, 8),
            Series((0,) + REFERENCE_SEQUENCES["H(2)"]),
        )
    )
    return results


# -------------------------------------------------------------- series ring


def _random_series(rng: random.Random, order: int | None = None) -> Series:
    if order is None:
        order = rng.randint(0, 8)
    return Series(tuple(rng.randint(-9, 9) for _ in range(order + 1)))


def suite_ring(count: int = 1000, seed: int = 20260809) -> list[CheckResult]:
    """Ring axioms, inverse round trips and truncation consistency on
    randomized small-coefficient inputs."""
    rng = random.Random(seed)
    for i in range(count):
        order = rng.randint(0, 8)
        a = _random_series(rng, order)
        b = _random_series(rng, order)
        c = _random_series(rng, order)
        if (a + b) + c != a + (b + c):
            return [CheckResult("ring axioms", False, f"add assoc, input {i}")]
        if a * b != b * a:
            return [CheckResult("ring axioms", False, f"mul comm, input {i}")]
        if (a * b) * c != a * (b * c):
            return [CheckResult("ring axioms", False, f"mul assoc, input {i}")]
        if a * (b + c) != a * b + a * c:
            return [CheckResult("ring axioms", False, f"distributivity, input {i}")]

        unit = Series((rng.choice((1, -1)),) + a.coeffs[1:])
        if unit * unit.reciprocal() != Series.one(order):
            return [CheckResult("ring axioms", False, f"reciprocal, input {i}")]
        if (a * unit).div(unit) != a:
            return [CheckResult("ring axioms", False, f"div round trip, input {i}")]

        m = rng.randint(0, order)
        if (a * b).truncate(m) != a.truncate(m) * b.truncate(m):
            return [CheckResult("ring axioms", False, f"truncation, input {i}")]
    return [CheckResult(f"ring axioms on {count} randomized inputs", True)]


# -------------------------------------------------------------- closed forms


def suite_base_counts(
    alpha: int | None = None,
    beta: int | None = None,
    order: int = 12,
    max_slope_sum: int = 8,
) -> list[CheckResult]:
    """Identities of the binomial path counts themselves."""
    results = []
    for slope in _slope_range(alpha, beta, max_slope_sum):
        g = g_series(slope, order)
        g_ee = g_ab_series(slope, Step.E, Step.E, order)
        g_en = g_ab_series(slope, Step.E, Step.N, order)
        g_nn = g_ab_series(slope, Step.N, Step.N, order)
        results.append(
            _series_equal(
                f"beta*(E-start) = alpha*(N-start) for {slope.alpha}/{slope.beta}",
                slope.beta * (g_ee + g_en),
                slope.alpha * (g_nn + g_en),
                context=f"slope=({slope.alpha},{slope.beta})",
            )
        )
        results.append(
            _series_equal(
                f"g splits by first/last step for {slope.alpha}/{slope.beta}",
                g_ee + 2 * g_en + g_nn,
                g,
                context=f"slope=({slope.alpha},{slope.beta})",
            )
        )
    return results


def suite_fuss_catalan(alpha_max: int = 5, order: int = 12) -> list[CheckResult]:
    """c = 1 + x*c^(alpha+1) for every alpha."""
    results = []
    x = Series.x(order)
    for alpha in range(1, alpha_max + 1):
        c = fuss_catalan(alpha, order)
        results.append(
            _series_equal(
                f"functional equation for c_{alpha}",
                1 + x * c ** (alpha + 1),
                c,
                context=f"alpha={alpha}",
            )
        )
    return results


# --------------------------------------------------------- bounce-free forms


def suite_bounce_free(
    alpha: int | None = None,
    beta: int | None = None,
    order: int = 12,
    max_slope_sum: int = 7,
) -> list[CheckResult]:
    """Internal consistency of the bounce-free machinery."""
    results = []
    for slope in _slope_range(alpha, beta, max_slope_sum):
        tag = f"({slope.alpha},{slope.beta})"
        g_ee = g_ab_series(slope, Step.E, Step.E, order)
        g_en = g_ab_series(slope, Step.E, Step.N, order)
        g_nn = g_ab_series(slope, Step.N, Step.N, order)
        f_ee = bounce_free_ab(slope, Restriction.EE, order)
        f_en = bounce_free_ab(slope, Restriction.EN, order)
        f_nn = bounce_free_ab(slope, Restriction.NN, order)

        results.append(
            _series_equal(
                f"no-right-bounce EN dual form {tag}",
                f_en + (f_ee * f_nn).div(1 - f_en),
                nrb_series(slope, Restriction.EN, order),
                context=tag,
            )
        )
        results.append(
            _series_equal(
                f"reciprocal of 1 - f_en {tag}",
                (1 - f_en).reciprocal(),
                ((1 + g_en) ** 2 - g_ee * g_nn).div(1 + g_en),
                context=tag,
            )
        )
        results.append(
            _series_equal(
                f"one-sided sum equals no-left-bounce total {tag}",
                _one_sided_total(slope, order),
                no_left_bounce_total(slope, order),
                context=tag,
            )
        )
        results.append(
            _series_equal(
                f"bounce-free splits by first/last step {tag}",
                f_ee + 2 * f_en + f_nn,
                bounce_free_total(slope, order),
                context=tag,
            )
        )

        # marker form over bounce-free series vs the one over raw counts
        delta_f = f_en * f_en - f_ee * f_nn
        numerator = {
            (0, 0): bounce_free_total(slope, order),
            (1, 0): -delta_f,
            (0, 1): -delta_f,
        }
        denominator = {
            (0, 0): Series.one(order),
            (1, 0): -f_en,
            (0, 1): -f_en,
            (1, 1): delta_f,
        }
        grid = expand_marker_quotient(numerator, denominator, 3, 3)
        table = bounce_table(slope, Restriction.ALL, 3, 3, order)
        mismatch = None
        for l in range(4):
            for r in range(4):
                if grid[l][r] != table.entry(l, r):
                    k = next(
                        k
                        for k in range(order + 1)
                        if grid[l][r].coeffs[k] != table.entry(l, r).coeffs[k]
                    )
                    mismatch = (
                        f"{tag} l={l} r={r} k={k} "
                        f"expected={table.entry(l, r).coeffs[k]} actual={grid[l][r].coeffs[k]}"
                    )
                    break
            if mismatch:
                break
        results.append(
            CheckResult(
                f"bounce-free marker form matches count marker form {tag}",
                mismatch is None,
                mismatch or "",
            )
        )

        # swapping the slope components swaps the bounce sides
        mirrored = slope.transpose()
        for m in (1, 2, 3):
            results.append(
                _series_equal(
                    f"left series of {tag} mirrors right series, {m} bounces",
                    one_sided_bounce_series(slope, "left", m, order),
                    one_sided_bounce_series(mirrored, "right", m, order),
                    context=tag,
                )
            )
    return results


def _one_sided_total(slope: Slope, order: int) -> Series:
    total = bounce_free_total(slope, order)
    for m in range(1, order + 1):
        total = total + one_sided_bounce_series(slope, "left", m, order)
    return total


# --------------------------------------------------------- oracle comparison


def suite_oracle_vs_table(
    max_slope_sum: int = 7,
    max_steps: int = 22,
    processes: int = 1,
) -> list[CheckResult]:
    """Every table entry, every restriction, against exhaustive enumeration."""
    results = []
    restrictions = [Restriction.ALL, *AB_RESTRICTIONS]
    for slope in coprime_slopes(max_slope_sum):
        semilengths = max_steps // (slope.alpha + slope.beta)
        if semilengths < 1:
            continue
        tag = f"({slope.alpha},{slope.beta})"
        bound = max(semilengths - 1, 0)
        tables = {
            restriction: bounce_table(slope, restriction, bound, bound, semilengths)
            for restriction in restrictions
        }
        mismatch = None
        for k in range(1, semilengths + 1):
            enumerate_profiles(slope, k, max_steps=max_steps, processes=processes)
            for restriction in restrictions:
                grid = count_table(slope, k, restriction, max_steps=max_steps)
                table = tables[restriction]
                for l in range(bound + 1):
                    for r in range(bound + 1):
                        expected = grid.get((l, r), 0)
                        actual = table.entry(l, r).coefficient(k)
                        if expected != actual:
                            mismatch = (
                                f"{tag} {restriction.value} k={k} l={l} r={r} "
                                f"expected={expected} actual={actual}"
                            )
                            break
                    if mismatch:
                        break
                if mismatch:
                    break
            if mismatch:
                break
        results.append(
            CheckResult(
                f"table vs enumeration {tag}, {semilengths * (slope.alpha + slope.beta)} steps",
                mismatch is None,
                mismatch or "",
            )
        )
    return results


def suite_specializations(
    order: int = 12, max_slope_sum: int = 7
) -> list[CheckResult]:
    """Marker specializations: both markers 1 gives all paths, both 0 the
    bounce-free ones, one of each the one-sided-free total."""
    results = []
    for slope in coprime_slopes(max_slope_sum):
        tag = f"({slope.alpha},{slope.beta})"
        bound = order - 1
        table = bounce_table(slope, Restriction.ALL, bound, bound, order)
        results.append(
            _series_equal(
                f"markers (1,1) give all paths {tag}",
                table.sum_all(),
                g_series(slope, order),
                context=tag,
            )
        )
        results.append(
            _series_equal(
                f"markers (0,0) give the bounce-free paths {tag}",
                table.entry(0, 0),
                bounce_free_total(slope, order),
                context=tag,
            )
        )
        axis_sum = Series.zero(order)
        for r in range(bound + 1):
            axis_sum = axis_sum + table.entry(0, r)
        results.append(
            _series_equal(
                f"markers (0,1) give the no-left-bounce paths {tag}",
                axis_sum,
                no_left_bounce_total(slope, order),
                context=tag,
            )
        )
        for restriction in AB_RESTRICTIONS:
            restricted = bounce_table(slope, restriction, bound, bound, order)
            results.append(
                _series_equal(
                    f"markers (1,1) give all {restriction.value} paths {tag}",
                    restricted.sum_all(),
                    g_ab_series(slope, restriction.first, restriction.last, order),
                    context=f"{tag} {restriction.value}",
                )
            )
            results.append(
                _series_equal(
                    f"markers (0,0) give bounce-free {restriction.value} paths {tag}",
                    restricted.entry(0, 0),
                    bounce_free_ab(slope, restriction, order),
                    context=f"{tag} {restriction.value}",
                )
            )
    return results


def suite_table_dual(
    order: int = 12,
    max_slope_sum: int = 6,
    max_left: int = 4,
    max_right: int = 4,
) -> list[CheckResult]:
    """Closed-form cell sums against the rational marker expansion."""
    results = []
    for slope in coprime_slopes(max_slope_sum):
        tag = f"({slope.alpha},{slope.beta})"
        expanded = bounce_table(slope, Restriction.ALL, max_left, max_right, order)
        assembled = bounce_table_from_closed_forms(slope, max_left, max_right, order)
        mismatch = None
        for l in range(max_left + 1):
            for r in range(max_right + 1):
                if assembled.entry(l, r) != expanded.entry(l, r):
                    k = next(
                        k
                        for k in range(order + 1)
                        if assembled.entry(l, r).coeffs[k] != expanded.entry(l, r).coeffs[k]
                    )
                    mismatch = (
                        f"{tag} l={l} r={r} k={k} "
                        f"expected={expanded.entry(l, r).coeffs[k]} "
                        f"actual={assembled.entry(l, r).coeffs[k]}"
                    )
                    break
            if mismatch:
                break
        results.append(
            CheckResult(f"closed forms match expansion {tag}", mismatch is None, mismatch or "")
        )
    return results


# ------------------------------------------------------ beta = 1 specializations


def suite_beta1(alpha_max: int = 5, order: int = 10) -> list[CheckResult]:
    """The unit-rise identities and simplified forms."""
    results = []
    for alpha in range(1, alpha_max + 1):
        slope = Slope(alpha, 1)
        tag = f"alpha={alpha}"
        g_ee = g_ab_series(slope, Step.E, Step.E, order)
        g_en = g_ab_series(slope, Step.E, Step.N, order)
        g_nn = g_ab_series(slope, Step.N, Step.N, order)
        results.append(
            _series_equal(
                f"g_ee = alpha*g_nn + (alpha-1)*g_en ({tag})",
                g_ee,
                alpha * g_nn + (alpha - 1) * g_en,
                context=tag,
            )
        )
        results.append(
            _series_equal(
                f"g_en^2 - g_ee*g_nn = g_nn ({tag})",
                g_en * g_en - g_ee * g_nn,
                g_nn,
                context=tag,
            )
        )
        f_ee = bounce_free_ab(slope, Restriction.EE, order)
        f_en = bounce_free_ab(slope, Restriction.EN, order)
        f_nn = bounce_free_ab(slope, Restriction.NN, order)
        results.append(
            _series_equal(
                f"f_ee = f_nn + (alpha-1)*f_en ({tag})",
                f_ee,
                f_nn + (alpha - 1) * f_en,
                context=tag,
            )
        )
        for restriction, general in (
            (Restriction.EE, f_ee),
            (Restriction.EN, f_en),
            (Restriction.NN, f_nn),
        ):
            results.append(
                _series_equal(
                    f"simplified f_{restriction.value} ({tag})",
                    bounce_free_ab_beta1(alpha, restriction, order),
                    general,
                    context=tag,
                )
            )
            results.append(
                _series_equal(
                    f"Fuss-Catalan f_{restriction.value} ({tag})",
                    f_ab_via_fuss_catalan(alpha, restriction, order),
                    general,
                    context=tag,
                )
            )
        bound = order - 1  # no path of semilength <= order has more bounces
        simplified = bounce_table_beta1(alpha, bound, bound, order)
        general_table = bounce_table(slope, Restriction.ALL, bound, bound, order)
        results.append(
            CheckResult(
                f"simplified marker form matches general table ({tag})",
                simplified.entries == general_table.entries,
            )
        )
    return results


def suite_catalan_slope(order: int = 12) -> list[CheckResult]:
    """Diagonal-slope reductions through the Catalan series."""
    results = []
    slope = Slope(1, 1)
    c = fuss_catalan(1, order)
    x = Series.x(order)
    xc = x * c
    f_ee = bounce_free_ab(slope, Restriction.EE, order)
    f_en = bounce_free_ab(slope, Restriction.EN, order)
    f_nn = bounce_free_ab(slope, Restriction.NN, order)
    results.append(
        _series_equal("f_ee = f_nn on the diagonal", f_ee, f_nn)
    )
    results.append(
        _series_equal(
            "f_ee = (x*c^2 - x*c)/(1 + x*c)",
            f_ee,
            (xc * c - xc).div(1 + xc),
        )
    )
    results.append(
        _series_equal("f_en = x*c^2/(1 + x*c)", f_en, (xc * c).div(1 + xc))
    )
    results.append(
        _series_equal(
            "f = 2(c - 1)", bounce_free_total(slope, order), 2 * (c - 1)
        )
    )
    results.append(
        _series_equal(
            "E-start times N-start bounce-free product is (c - 1)^2",
            bounce_free_prefix(slope, Step.E, order)
            * bounce_free_prefix(slope, Step.N, order),
            (c - 1) * (c - 1),
        )
    )
    # two-marker form written directly in x*c(x)
    numerator = {(0, 0): 4 * xc - 2 * x, (1, 0): x - xc, (0, 1): x - xc}
    denominator = {
        (0, 0): 1 + x - xc,
        (1, 0): -xc,
        (0, 1): -xc,
        (1, 1): xc - x,
    }
    grid = expand_marker_quotient(numerator, denominator, 4, 4)
    table = bounce_table(slope, Restriction.ALL, 4, 4, order)
    agree = all(
        grid[l][r] == table.entry(l, r) for l in range(5) for r in range(5)
    )
    results.append(CheckResult("Catalan marker form matches general table", agree))
    return results


def suite_total_bounces(b_max: int = 6, n_max: int = 11) -> list[CheckResult]:
    """Diagonal paths by their total bounce count: series power form,
    coefficient formula, and enumeration all agree."""
    results = []
    slope = Slope(1, 1)
    for b in range(b_max + 1):
        series = g_b_series(b, n_max)  # internally checks both series forms
        # coefficient of x^n with n = k + b: 2*(b+1)/n * C(2n, n-b-1)
        formula = Series(
            tuple(
                2 * (b + 1) * binomial(2 * n, n - b - 1) // n if n > b else 0
                for n in range(n_max + 1)
            )
        )
        results.append(
            _series_equal(
                f"coefficient formula for {b} total bounces",
                series,
                formula,
                context=f"b={b}",
            )
        )
        mismatch = None
        for n in range(1, n_max + 1):
            profiles = enumerate_profiles(slope, n)
            expected = count_matching(profiles, total_bounces=b)
            actual = series.coefficient(n)
            if expected != actual:
                mismatch = f"b={b} n={n} expected={expected} actual={actual}"
                break
        results.append(
            CheckResult(
                f"enumeration matches for {b} total bounces",
                mismatch is None,
                mismatch or "",
            )
        )
    return results


def suite_syt(n_max: int = 10) -> list[CheckResult]:
    """Hook-length counts, backtracking fills and E-start path counts agree."""
    results = []
    slope = Slope(1, 1)
    mismatch = None
    for n in range(1, n_max + 1):
        profiles = enumerate_profiles(slope, n)
        for b in range(n):
            hook = syt_two_row_count(n, b)
            filled = enumerate_syt(TwoRowShape(n + b, n - b - 1), max_cells=2 * n - 1)
            paths = count_matching(profiles, first=Step.E, total_bounces=b)
            both_starts = g_b_series(b, n).coefficient(n)
            if not (hook == filled == paths) or both_starts != 2 * hook:
                mismatch = (
                    f"n={n} b={b} hook={hook} backtracking={filled} "
                    f"paths={paths} series={both_starts}"
                )
                break
        if mismatch:
            break
    results.append(
        CheckResult(
            f"two-row tableau counts match paths up to n={n_max}",
            mismatch is None,
            mismatch or "",
        )
    )
    return results


def suite_crosses(
    alpha_max: int = 3, max_steps: int = 20, order: int = 10
) -> list[CheckResult]:
    """Horizontal-cross series against enumeration, plus the three
    equivalent forms of the crossless no-right-bounce series."""
    results = []
    for alpha in range(1, alpha_max + 1):
        slope = Slope(alpha, 1)
        tag = f"alpha={alpha}"
        semilengths = max_steps // (alpha + 1)
        series = {
            "crossless EE": (
                nhc_series(alpha, Restriction.EE, semilengths),
                dict(first=Step.E, last=Step.E, crosses=0),
            ),
            "crossless EN": (
                nhc_series(alpha, Restriction.EN, semilengths),
                dict(first=Step.E, last=Step.N, crosses=0),
            ),
            "crossless NE": (
                nhc_series(alpha, Restriction.NE, semilengths),
                dict(first=Step.N, last=Step.E, crosses=0),
            ),
            "crossless E-start": (
                nhc_prefix_series(alpha, semilengths),
                dict(first=Step.E, crosses=0),
            ),
            "crossless E-start no right bounces": (
                nhc_nrb_series(alpha, semilengths),
                dict(first=Step.E, crosses=0, right=0),
            ),
            "crossless N-start": (
                rational_dyck_series(alpha, semilengths),
                dict(first=Step.N, crosses=0),
            ),
        }
        mismatch = None
        for k in range(1, semilengths + 1):
            profiles = enumerate_profiles(slope, k, max_steps=max_steps)
            for label, (s, filters) in series.items():
                expected = count_matching(profiles, **filters)
                actual = s.coefficient(k)
                if expected != actual:
                    mismatch = f"{tag} {label} k={k} expected={expected} actual={actual}"
                    break
            if mismatch:
                break
        results.append(
            CheckResult(
                f"cross statistics match enumeration ({tag})",
                mismatch is None,
                mismatch or "",
            )
        )
    for alpha in range(1, 6):
        try:
            nhc_nrb_series(alpha, order)  # raises if its three forms disagree
            results.append(
                CheckResult(f"three crossless no-right-bounce forms agree (alpha={alpha})", True)
            )
        except ArithmeticError as exc:
            results.append(
                CheckResult(
                    f"three crossless no-right-bounce forms agree (alpha={alpha})",
                    False,
                    str(exc),
                )
            )
    return results


SUITES = {
    "reference-series": suite_reference_series,
    "ring": suite_ring,
    "base-counts": suite_base_counts,
    "fuss-catalan": suite_fuss_catalan,
    "bounce-free": suite_bounce_free,
    "oracle-vs-table": suite_oracle_vs_table,
    "specializations": suite_specializations,
    "table-dual": suite_table_dual,
    "beta1": suite_beta1,
    "catalan-slope": suite_catalan_slope,
    "total-bounces": suite_total_bounces,
    "syt": suite_syt,
    "crosses": suite_crosses,
}
