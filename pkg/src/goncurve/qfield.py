"""Exact arithmetic in quadratic fields Q(sqrt(d)).

Elements mix freely with ``int`` and ``Fraction``; mixing two different
radicands raises ``ValueError``.
"""
from fractions import Fraction
from math import isqrt

__all__ = ["QuadraticNumber", "exact_sqrt", "squarefree_part", "is_exact_scalar",
           "common_radicand", "to_complex"]


def squarefree_part(n: int, trial_limit: int = 1 << 12):
    """Return ``(c, d)`` with ``n == c*c*d`` (sign kept in d).

    Square factors are stripped by trial division up to ``trial_limit`` and by
    a final perfect-square test, so ``d`` is squarefree for small inputs and
    otherwise at worst carries a large square factor. Either way ``d`` is a
    perfect square only when it equals 1.
    """
    if n == 0:
        return 0, 0
    sign = -1 if n < 0 else 1
    n = abs(n)
    c, d = 1, 1
    p = 2
    while p * p <= n and p <= trial_limit:
        while n % (p * p) == 0:
            n //= p * p
            c *= p
        if n % p == 0:
            n //= p
            d *= p
        p += 1 if p == 2 else 2
    r = isqrt(n)
    if r * r == n:
        c *= r
        n = 1
    return c, sign * d * n


def exact_sqrt(x):
    """Square root of a rational as a Fraction or a QuadraticNumber."""
    x = Fraction(x)
    if x == 0:
        return Fraction(0)
    # sqrt(p/q) = sqrt(p*q)/q
    c, d = squarefree_part(x.numerator * x.denominator)
    coeff = Fraction(c, x.denominator)
    if d == 1:
        return coeff
    return QuadraticNumber(0, coeff, d)


class QuadraticNumber:
    """The number ``a + b*sqrt(d)`` with rational ``a, b`` and non-square ``d``."""

    __slots__ = ("a", "b", "d")

    def __init__(self, a, b, d: int):
        if d in (0, 1):
            raise ValueError("radicand must not be 0 or 1")
        self.a = Fraction(a)
        self.b = Fraction(b)
        self.d = int(d)

    def _coerce(self, other):
        if isinstance(other, QuadraticNumber):
            if other.d != self.d:
                raise ValueError(f"incompatible radicands {self.d} and {other.d}")
            return other.a, other.b
        if isinstance(other, (int, Fraction)):
            return Fraction(other), Fraction(0)
        return NotImplemented

    def _make(self, a, b):
        return QuadraticNumber(a, b, self.d)

    def __add__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return self._make(self.a + o[0], self.b + o[1])

    __radd__ = __add__

    def __neg__(self):
        return self._make(-self.a, -self.b)

    def __pos__(self):
        return self

    def __sub__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return self._make(self.a - o[0], self.b - o[1])

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return self._make(o[0] - self.a, o[1] - self.b)

    def __mul__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        a, b = o
        return self._make(self.a * a + self.d * self.b * b, self.a * b + self.b * a)

    __rmul__ = __mul__

    def conjugate(self):
        return self._make(self.a, -self.b)

    def norm(self) -> Fraction:
        return self.a * self.a - self.d * self.b * self.b

    def inverse(self):
        n = self.norm()
        if n == 0:
            raise ZeroDivisionError("division by zero in quadratic field")
        return self._make(self.a / n, -self.b / n)

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return self * self._make(*o).inverse()

    def __rtruediv__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return self._make(*o) * self.inverse()

    def __pow__(self, n: int):
        if not isinstance(n, int):
            return NotImplemented
        if n < 0:
            return self.inverse() ** (-n)
        result = self._make(1, 0)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def __eq__(self, other):
        if isinstance(other, QuadraticNumber):
            if other.d != self.d:
                return self.b == 0 and other.b == 0 and self.a == other.a
            return self.a == other.a and self.b == other.b
        if isinstance(other, (int, Fraction)):
            return self.b == 0 and self.a == other
        return NotImplemented

    def __hash__(self):
        if self.b == 0:
            return hash(self.a)
        return hash((self.a, self.b, self.d))

    def __bool__(self):
        return self.a != 0 or self.b != 0

    def __complex__(self):
        if self.d > 0:
            return complex(float(self.a) + float(self.b) * self.d ** 0.5, 0.0)
        return complex(float(self.a), float(self.b) * (-self.d) ** 0.5)

    def __repr__(self):
        return f"QuadraticNumber({self.a}, {self.b}, {self.d})"

    def __str__(self):
        return f"{self.a}+{self.b}*sqrt({self.d})"


def is_exact_scalar(x) -> bool:
    return isinstance(x, (int, Fraction, QuadraticNumber))


def common_radicand(values):
    """Radicand shared by the QuadraticNumbers in ``values`` (None if all rational)."""
    d = None
    for v in values:
        if isinstance(v, QuadraticNumber) and v.b != 0:
            if d is None:
                d = v.d
            elif d != v.d:
                raise ValueError(f"incompatible radicands {d} and {v.d}")
    return d


def to_complex(x) -> complex:
    if isinstance(x, Fraction):
        return complex(float(x))
    return complex(x)


def isqrt_exact(n: int):
    """Integer square root if ``n`` is a perfect square, else None."""
    if n < 0:
        return None
    r = isqrt(n)
    return r if r * r == n else None
