"""Truncated formal power series with exact integer coefficients.

A :class:`Series` stores the coefficients ``c_0 .. c_N`` of a univariate
power series up to an explicit truncation order ``N``.  Arithmetic always
truncates to the minimum of the operands' orders, so a result never claims
a coefficient that both inputs do not determine.  Coefficients are plain
Python ints, hence arbitrary precision and every comparison is exact.
"""

from dataclasses import dataclass


class SeriesError(Exception):
    """Base class for series arithmetic errors."""


class NonUnitConstantTerm(SeriesError):
    """Raised when inverting a series whose constant term is not +1 or -1."""


class NonzeroConstantTerm(SeriesError):
    """Raised by :meth:`Series.geometric_sum` on a nonzero constant term."""


class ValuationMismatch(SeriesError):
    """Raised when division would need to cancel more powers of x than the
    numerator provides."""


@dataclass(frozen=True)
class Series:
    """Integer power series truncated at ``order = len(coeffs) - 1``."""

    coeffs: tuple[int, ...]

    def __post_init__(self):
        if not isinstance(self.coeffs, tuple):
            object.__setattr__(self, "coeffs", tuple(self.coeffs))
        if len(self.coeffs) == 0:
            raise ValueError("a series needs at least its constant coefficient")

    # ---------------------------------------------------------------- basics

    @staticmethod
    def zero(order: int) -> "Series":
        return Series((0,) * (order + 1))

    @staticmethod
    def one(order: int) -> "Series":
        return Series((1,) + (0,) * order)

    @staticmethod
    def x(order: int) -> "Series":
        if order < 1:
            raise ValueError("x does not fit in a series of order 0")
        return Series((0, 1) + (0,) * (order - 1))

    @staticmethod
    def constant(value: int, order: int) -> "Series":
        return Series((value,) + (0,) * order)

    @property
    def order(self) -> int:
        return len(self.coeffs) - 1

    @property
    def constant_term(self) -> int:
        return self.coeffs[0]

    def coefficient(self, k: int) -> int:
        """Coefficient of x^k; undefined beyond the truncation order."""
        if not 0 <= k <= self.order:
            raise IndexError(f"coefficient {k} beyond truncation order {self.order}")
        return self.coeffs[k]

    def is_zero(self) -> bool:
        return not any(self.coeffs)

    def valuation(self) -> int | None:
        """Index of the first nonzero coefficient, or None if all vanish."""
        for i, c in enumerate(self.coeffs):
            if c:
                return i
        return None

    def truncate(self, order: int) -> "Series":
        if order > self.order:
            raise ValueError(f"cannot extend order {self.order} to {order}")
        return Series(self.coeffs[: order + 1])

    def agrees(self, other: "Series", through: int | None = None) -> bool:
        """Exact coefficient equality up to ``through`` (default: min order)."""
        n = min(self.order, other.order)
        if through is not None:
            if through > n:
                raise ValueError(f"coefficients beyond order {n} are undetermined")
            n = through
        return self.coeffs[: n + 1] == other.coeffs[: n + 1]

    # ------------------------------------------------------------ arithmetic

    def __add__(self, other):
        if isinstance(other, int):
            return Series((self.coeffs[0] + other,) + self.coeffs[1:])
        if not isinstance(other, Series):
            return NotImplemented
        return Series(tuple(a + b for a, b in zip(self.coeffs, other.coeffs)))

    __radd__ = __add__

    def __neg__(self):
        return Series(tuple(-c for c in self.coeffs))

    def __sub__(self, other):
        if isinstance(other, int):
            return self + (-other)
        if not isinstance(other, Series):
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, int):
            return Series(tuple(c * other for c in self.coeffs))
        if not isinstance(other, Series):
            return NotImplemented
        n = min(self.order, other.order)
        a, b = self.coeffs, other.coeffs
        out = [0] * (n + 1)
        for i in range(n + 1):
            ai = a[i]
            if ai:
                for j in range(n + 1 - i):
                    out[i + j] += ai * b[j]
        return Series(tuple(out))

    __rmul__ = __mul__

    def __pow__(self, exponent: int):
        if not isinstance(exponent, int) or exponent < 0:
            raise ValueError("series powers need a non-negative integer exponent")
        result = Series.one(self.order)
        base = self
        e = exponent
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def reciprocal(self) -> "Series":
        """Multiplicative inverse to the truncation order.

        Requires constant term +1 or -1 (the only units over the integers);
        uses the recurrence r_n = -c_0 * sum_{j=1..n} c_j r_{n-j}.
        """
        c = self.coeffs
        c0 = c[0]
        if c0 not in (1, -1):
            raise NonUnitConstantTerm(
                f"constant term {c0} is not invertible over the integers"
            )
        n = self.order
        r = [c0] + [0] * n
        for m in range(1, n + 1):
            s = 0
            for j in range(1, m + 1):
                if c[j]:
                    s += c[j] * r[m - j]
            r[m] = -c0 * s
        return Series(tuple(r))

    def div(self, other: "Series") -> "Series":
        """Quotient self / other, cancelling the common factor x^m first.

        ``m = valuation(other)``; the numerator must vanish to order at least
        m, and the divisor's cofactor after cancellation must have a unit
        constant term.  The result's truncation order shrinks by m.
        """
        if other.is_zero():
            raise ZeroDivisionError("division by an identically zero series")
        m = other.valuation()
        if m == 0:
            return self * other.reciprocal()
        if any(self.coeffs[: min(m, self.order + 1)]):
            raise ValuationMismatch(
                f"numerator valuation is below the divisor valuation {m}"
            )
        if min(self.order, other.order) - m < 0:
            raise ValueError(f"cancelling x^{m} leaves no determined coefficients")
        numer = Series(self.coeffs[m:])
        denom = Series(other.coeffs[m:])
        return numer * denom.reciprocal()

    def __truediv__(self, other):
        if not isinstance(other, Series):
            return NotImplemented
        return self.div(other)

    def geometric_sum(self) -> "Series":
        """1 + a + a^2 + ... = 1/(1-a); requires zero constant term."""
        if self.coeffs[0] != 0:
            raise NonzeroConstantTerm(
                f"geometric sum needs constant term 0, got {self.coeffs[0]}"
            )
        return (Series.one(self.order) - self).reciprocal()

    # --------------------------------------------------------------- display

    def __repr__(self):
        terms = []
        for k, c in enumerate(self.coeffs):
            if c == 0:
                continue
            if k == 0:
                terms.append(str(c))
            elif k == 1:
                terms.append(f"{c}*x")
            else:
                terms.append(f"{c}*x^{k}")
        body = " + ".join(terms) if terms else "0"
        return f"Series[{self.order}]({body})"


@dataclass(frozen=True)
class RationalSeriesExpr:
    """A quotient of two series, expanded on demand.

    The denominator must have a nonzero constant term; it is invertible
    over the integers only when that term is +1 or -1.
    """

    numerator: Series
    denominator: Series

    def __post_init__(self):
        if self.denominator.constant_term == 0:
            raise ValueError("denominator requires a nonzero constant term")

    def expand(self) -> Series:
        return self.numerator.div(self.denominator)
