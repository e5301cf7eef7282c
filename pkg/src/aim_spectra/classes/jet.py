#!/usr/bin/env python3

"""
A jet is the truncated Taylor series of a function about a fixed expansion point x0

    coeffs[j] = f^(j)(x0) / j!      for j = 0..order

Jets are immutable, every operation returns a fresh jet.
Binary operations need both jets to share the same x0 and order.

The transcendental functions are the ones the hyperbolic coordinate change needs (sqrt, arctanh, square),
each computed from the ODE the composed function satisfies rather than from a general series catalogue.
"""

# External imports
from typing import Iterable, Tuple, Union
import mpmath

# Utils
from ..utils.errors import (
    OrderMismatchError, ExpansionPointMismatchError, DivisionByZeroConstantTermError,
    OrderExhaustedError, DomainError
)
from ..utils.logging import get_logger
from ..utils.precision import Real, RealLike

# Set logger
logger = get_logger()


class Jet:
    """
    Truncated Taylor series about x0
    * coeffs   # tuple of Real, length order + 1
    * x0       # the expansion point
    """

    __slots__ = ("_coeffs", "_x0")

    def __init__(self, coeffs: Iterable[RealLike], x0: RealLike = 0):
        coeffs = tuple(mpmath.mpf(coeff) for coeff in coeffs)

        if len(coeffs) == 0:
            logger.error("A jet needs at least the constant term")
            raise OrderExhaustedError

        self._coeffs: Tuple[Real, ...] = coeffs
        self._x0: Real = mpmath.mpf(x0)

    # Constructors
    @classmethod
    def constant(cls, value: RealLike, x0: RealLike, order: int) -> 'Jet':
        return cls([value] + [0] * order, x0)

    @classmethod
    def identity(cls, x0: RealLike, order: int) -> 'Jet':
        """
        The jet of f(x) = x, i.e. [x0, 1, 0, ...]
        """
        if order == 0:
            return cls([x0], x0)
        return cls([x0, 1] + [0] * (order - 1), x0)

    @classmethod
    def from_offset_polynomial(cls, poly_coeffs: Iterable[RealLike], x0: RealLike, order: int) -> 'Jet':
        """
        The jet of p(x - x0) = poly_coeffs[0] + poly_coeffs[1] (x - x0) + ..., truncated or padded to order
        """
        poly_coeffs = list(poly_coeffs)[:order + 1]
        return cls(poly_coeffs + [0] * (order + 1 - len(poly_coeffs)), x0)

    # Attributes
    @property
    def coeffs(self) -> Tuple[Real, ...]:
        return self._coeffs

    @property
    def x0(self) -> Real:
        return self._x0

    @property
    def order(self) -> int:
        return len(self._coeffs) - 1

    @property
    def value(self) -> Real:
        """
        f(x0)
        """
        return self._coeffs[0]

    def __len__(self) -> int:
        return len(self._coeffs)

    def __getitem__(self, item):
        return self._coeffs[item]

    def __repr__(self) -> str:
        coeffs_str = ", ".join(mpmath.nstr(coeff, 8) for coeff in self._coeffs[:6])
        if self.order >= 6:
            coeffs_str += ", ..."
        return f"Jet(x0={mpmath.nstr(self._x0, 8)}, order={self.order}, coeffs=[{coeffs_str}])"

    def truncate(self, order: int) -> 'Jet':
        if order > self.order:
            logger.error(f"Cannot truncate a jet of order {self.order} up to order {order}")
            raise OrderMismatchError
        return Jet(self._coeffs[:order + 1], self._x0)

    def derivative_at(self, n: int) -> Real:
        """
        f^(n)(x0) = n! coeffs[n]
        """
        return mpmath.factorial(n) * self._coeffs[n]

    # Binary arithmetic
    def _coerce(self, other: Union['Jet', RealLike]) -> 'Jet':
        if not isinstance(other, Jet):
            return Jet.constant(other, self._x0, self.order)

        if other.order != self.order:
            logger.error(f"Jet orders differ ({self.order} vs {other.order})")
            raise OrderMismatchError

        if other.x0 != self._x0:
            logger.error(f"Jet expansion points differ ({self._x0} vs {other.x0})")
            raise ExpansionPointMismatchError

        return other

    def __add__(self, other: Union['Jet', RealLike]) -> 'Jet':
        other = self._coerce(other)
        return Jet([a + b for a, b in zip(self._coeffs, other.coeffs)], self._x0)

    __radd__ = __add__

    def __sub__(self, other: Union['Jet', RealLike]) -> 'Jet':
        other = self._coerce(other)
        return Jet([a - b for a, b in zip(self._coeffs, other.coeffs)], self._x0)

    def __rsub__(self, other: RealLike) -> 'Jet':
        return self._coerce(other) - self

    def __neg__(self) -> 'Jet':
        return Jet([-a for a in self._coeffs], self._x0)

    def __mul__(self, other: Union['Jet', RealLike]) -> 'Jet':
        if not isinstance(other, Jet):
            # Scalar multiple, no convolution required
            scalar = mpmath.mpf(other)
            return Jet([a * scalar for a in self._coeffs], self._x0)

        other = self._coerce(other)
        a, b = self._coeffs, other.coeffs

        # Truncated Cauchy product
        return Jet(
            [mpmath.fdot(a[:n + 1], b[n::-1]) for n in range(len(a))],
            self._x0
        )

    __rmul__ = __mul__

    def __truediv__(self, other: Union['Jet', RealLike]) -> 'Jet':
        other = self._coerce(other)
        a, b = self._coeffs, other.coeffs

        if b[0] == 0:
            logger.error("Cannot divide by a jet with a zero constant term")
            raise DivisionByZeroConstantTermError

        # q_n = (a_n - sum_{j=1}^{n} b_j q_{n-j}) / b_0
        quotient = []
        for n in range(len(a)):
            if n == 0:
                quotient.append(a[0] / b[0])
                continue
            quotient.append((a[n] - mpmath.fdot(b[1:n + 1], quotient[::-1])) / b[0])

        return Jet(quotient, self._x0)

    def __rtruediv__(self, other: RealLike) -> 'Jet':
        return self._coerce(other) / self

    # Calculus
    def derivative(self) -> 'Jet':
        """
        coeffs'[j] = (j + 1) coeffs[j + 1], one order is lost
        """
        if self.order == 0:
            logger.error("Cannot differentiate a jet of order 0, raise the series order or lower the iteration count")
            raise OrderExhaustedError

        return Jet([(j + 1) * self._coeffs[j + 1] for j in range(self.order)], self._x0)

    # Transcendental functions
    def square(self) -> 'Jet':
        return self * self

    def sqrt(self) -> 'Jet':
        """
        g = sqrt(a) from g g' = a' / 2
        g_n = (a_n / 2 - (1/n) sum_{j=1}^{n-1} (n - j) g_j g_{n-j}) / g_0
        """
        a = self._coeffs
        if not a[0] > 0:
            logger.error(f"sqrt needs a positive constant term, got {mpmath.nstr(a[0], 10)}")
            raise DomainError

        g = [mpmath.sqrt(a[0])]
        for n in range(1, len(a)):
            weighted_tail = [(n - j) * g[n - j] for j in range(1, n)]
            cross = mpmath.fdot(g[1:n], weighted_tail) / n if n > 1 else 0
            g.append((a[n] / 2 - cross) / g[0])

        return Jet(g, self._x0)

    def arctanh(self) -> 'Jet':
        """
        g = arctanh(a) from (1 - a^2) g' = a'
        g_n = (n a_n - sum_{j=1}^{n-1} q_j (n - j) g_{n-j}) / (n q_0),  q = 1 - a^2
        """
        a = self._coeffs
        if not abs(a[0]) < 1:
            logger.error(f"arctanh needs |constant term| < 1, got {mpmath.nstr(a[0], 10)}")
            raise DomainError

        q = (1 - self.square()).coeffs
        g = [mpmath.atanh(a[0])]
        for n in range(1, len(a)):
            weighted_tail = [(n - j) * g[n - j] for j in range(1, n)]
            cross = mpmath.fdot(q[1:n], weighted_tail) if n > 1 else 0
            g.append((n * a[n] - cross) / (n * q[0]))

        return Jet(g, self._x0)

    # Comparisons, coefficient-wise
    def max_abs_diff(self, other: 'Jet') -> Real:
        other = self._coerce(other)
        return max(abs(a - b) for a, b in zip(self._coeffs, other.coeffs))
