"""Binomial closed forms for lattice-path counting series.

Paths run from (0, 0) to (alpha*k, beta*k) with unit east (E) and north (N)
steps, for a coprime slope pair (alpha, beta).  The ``g`` family counts all
such paths, optionally restricted by their first and last step; everything
else in the package is built on top of these series.
"""

import math
from dataclasses import dataclass
from enum import Enum

from .series import Series


class NonIntegerCoefficient(ArithmeticError):
    """An exact division in a closed-form coefficient failed; this signals a
    bug, not a user error."""


class Step(Enum):
    E = "E"
    N = "N"


class Restriction(Enum):
    """First/last step restriction of a path class."""

    ALL = "all"
    EE = "ee"
    EN = "en"
    NE = "ne"
    NN = "nn"

    @property
    def first(self) -> Step | None:
        if self is Restriction.ALL:
            return None
        return Step(self.value[0].upper())

    @property
    def last(self) -> Step | None:
        if self is Restriction.ALL:
            return None
        return Step(self.value[1].upper())


AB_RESTRICTIONS = (Restriction.EE, Restriction.EN, Restriction.NE, Restriction.NN)


@dataclass(frozen=True)
class Slope:
    """Coprime pair (alpha, beta) defining the line y = (beta/alpha) x."""

    alpha: int
    beta: int

    def __post_init__(self):
        if self.alpha < 1 or self.beta < 1:
            raise ValueError("slope components must be positive integers")
        if math.gcd(self.alpha, self.beta) != 1:
            raise ValueError(f"slope ({self.alpha}, {self.beta}) is not coprime")

    def transpose(self) -> "Slope":
        return Slope(self.beta, self.alpha)


def binomial(m: int, n: int) -> int:
    """C(m, n) for m >= 0, with value 0 whenever n < 0 or n > m.

    Computed as a multiplicative running product; every intermediate
    division is exact.
    """
    if m < 0:
        raise ValueError("binomial needs a non-negative upper argument")
    if n < 0 or n > m:
        return 0
    n = min(n, m - n)
    result = 1
    for i in range(1, n + 1):
        result = result * (m - n + i) // i
    return result


def g_series(slope: Slope, order: int) -> Series:
    """All paths to (alpha*k, beta*k): coefficient C((alpha+beta)k, alpha*k)."""
    a, b = slope.alpha, slope.beta
    return Series(
        tuple(binomial((a + b) * k, a * k) if k else 0 for k in range(order + 1))
    )


def g_ab_series(slope: Slope, first: Step, last: Step, order: int) -> Series:
    """Paths with prescribed first and last steps.

    Fixing the two boundary steps leaves (alpha+beta)k - 2 free steps, of
    which alpha*k - 2, alpha*k - 1 or alpha*k are east moves for EE, EN/NE
    and NN paths respectively.
    """
    a, b = slope.alpha, slope.beta
    east_shift = {(Step.E, Step.E): -2, (Step.N, Step.N): 0}.get((first, last), -1)
    return Series(
        tuple(
            binomial((a + b) * k - 2, a * k + east_shift) if k else 0
            for k in range(order + 1)
        )
    )


def g_prefix_series(slope: Slope, first: Step, order: int) -> Series:
    """Paths starting with the given step, regardless of the last one."""
    return g_ab_series(slope, first, Step.E, order) + g_ab_series(
        slope, first, Step.N, order
    )


def fuss_catalan(alpha: int, order: int) -> Series:
    """The series with coefficient C((alpha+1)k, k) / (alpha*k + 1).

    Counts paths to (alpha*k, k) staying weakly above y = x/alpha; alpha = 1
    gives the Catalan numbers.  Constant term 1.
    """
    if alpha < 1:
        raise ValueError("alpha must be a positive integer")
    coeffs = []
    for k in range(order + 1):
        num = binomial((alpha + 1) * k, k)
        den = alpha * k + 1
        if num % den:
            raise NonIntegerCoefficient(
                f"C({(alpha + 1) * k}, {k}) is not divisible by {den}"
            )
        coeffs.append(num // den)
    return Series(tuple(coeffs))
