"""Exact Gaussian-rational scalars and polynomials.

Everything in the closed-form path of this package is rational in the
exponents and polynomial coefficients, so all of it runs over Q(i).
Floats only appear when a value is handed to a numeric oracle.
"""
from __future__ import annotations

import math
import re
from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Sequence, Union

_RATIONAL = r"(?:\d+(?:\.\d*)?|\.\d+)(?:/\d+)?"
_GAUSSIAN = re.compile(
    rf"(?P<re>[+-]?{_RATIONAL})?(?:(?P<im>(?:(?<=\d)[+-]|(?<!\d)[+-]?)(?:{_RATIONAL})?)\*?i)?"
)

Number = Union[int, Fraction, "ComplexScalar"]


class ComplexScalar:
    """An element of Q(i), stored as a pair of Fractions."""

    __slots__ = ("re", "im")

    def __init__(self, re: Union[int, Fraction, str] = 0, im: Union[int, Fraction, str] = 0):
        self.re = re if type(re) is Fraction else Fraction(re)
        self.im = im if type(im) is Fraction else Fraction(im)

    # -- construction -------------------------------------------------
    @classmethod
    def coerce(cls, value) -> "ComplexScalar":
        if type(value) is cls:
            return value
        if isinstance(value, (int, Fraction)):
            return cls(value)
        if isinstance(value, str):
            return cls._parse(value)
        if isinstance(value, (list, tuple)) and len(value) == 2:
            return cls(Fraction(value[0]), Fraction(value[1]))
        raise TypeError(f"cannot convert {value!r} to an exact complex scalar")

    @classmethod
    def _parse(cls, text: str) -> "ComplexScalar":
        """'3/4', '-2i', '1/2-3/5i', 'i', '1+i' and similar."""
        s = text.replace(" ", "")
        m = _GAUSSIAN.fullmatch(s)
        if not s or m is None:
            raise ValueError(f"cannot parse {text!r} as a Gaussian rational")
        re_part, im_part = m.group("re"), m.group("im")
        if im_part is None:
            return cls(Fraction(re_part))
        if im_part in ("", "+", "-"):
            im_part += "1"
        return cls(Fraction(re_part) if re_part else 0, Fraction(im_part))

    # -- predicates ---------------------------------------------------
    def is_real(self) -> bool:
        return self.im == 0

    def is_zero(self) -> bool:
        return self.re == 0 and self.im == 0

    def __bool__(self) -> bool:
        return not self.is_zero()

    def sign(self) -> int:
        """Sign of a real scalar."""
        if self.im != 0:
            raise ValueError(f"sign of non-real scalar {self}")
        return (self.re > 0) - (self.re < 0)

    # -- arithmetic ---------------------------------------------------
    def conjugate(self) -> "ComplexScalar":
        return ComplexScalar(self.re, -self.im)

    def abs2(self) -> Fraction:
        return self.re * self.re + self.im * self.im

    def __neg__(self):
        return ComplexScalar(-self.re, -self.im)

    def __pos__(self):
        return self

    def __add__(self, other):
        if type(other) is not ComplexScalar:
            if isinstance(other, (int, Fraction)):
                return ComplexScalar(self.re + other, self.im)
            return NotImplemented
        return ComplexScalar(self.re + other.re, self.im + other.im)

    __radd__ = __add__

    def __sub__(self, other):
        if type(other) is not ComplexScalar:
            if isinstance(other, (int, Fraction)):
                return ComplexScalar(self.re - other, self.im)
            return NotImplemented
        return ComplexScalar(self.re - other.re, self.im - other.im)

    def __rsub__(self, other):
        if isinstance(other, (int, Fraction)):
            return ComplexScalar(other - self.re, -self.im)
        return NotImplemented

    def __mul__(self, other):
        if type(other) is not ComplexScalar:
            if isinstance(other, (int, Fraction)):
                return ComplexScalar(self.re * other, self.im * other)
            return NotImplemented
        a, b, c, d = self.re, self.im, other.re, other.im
        if b == 0:
            return ComplexScalar(a * c, a * d)
        if d == 0:
            return ComplexScalar(a * c, b * c)
        return ComplexScalar(a * c - b * d, a * d + b * c)

    __rmul__ = __mul__

    def inverse(self) -> "ComplexScalar":
        if self.im == 0:
            if self.re == 0:
                raise ZeroDivisionError("inverse of zero")
            return ComplexScalar(1 / self.re, 0)
        n = self.abs2()
        return ComplexScalar(self.re / n, -self.im / n)

    def __truediv__(self, other):
        if type(other) is not ComplexScalar:
            if isinstance(other, (int, Fraction)):
                if other == 0:
                    raise ZeroDivisionError("division by zero")
                return ComplexScalar(self.re / other, self.im / other)
            return NotImplemented
        return self * other.inverse()

    def __rtruediv__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.inverse() * other
        return NotImplemented

    def __pow__(self, n: int):
        if not isinstance(n, int):
            return NotImplemented
        if n < 0:
            return self.inverse() ** (-n)
        result = ONE
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    # -- comparison / hashing -----------------------------------------
    def __eq__(self, other):
        if type(other) is ComplexScalar:
            return self.re == other.re and self.im == other.im
        if isinstance(other, (int, Fraction)):
            return self.im == 0 and self.re == other
        return NotImplemented

    def __hash__(self):
        if self.im == 0:
            return hash(self.re)
        return hash((self.re, self.im))

    def sort_key(self):
        """Real values first (ascending), then by real and imaginary part."""
        return (self.im != 0, self.re, self.im)

    # -- conversion ---------------------------------------------------
    def __complex__(self):
        return complex(float(self.re), float(self.im))

    def __float__(self):
        if self.im != 0:
            raise TypeError(f"non-real scalar {self} has no float value")
        return float(self.re)

    def __repr__(self):
        return f"ComplexScalar({str(self.re)!r}, {str(self.im)!r})"

    def __str__(self):
        if self.im == 0:
            return str(self.re)
        if self.re == 0:
            return f"{self.im}i"
        sign = "+" if self.im > 0 else "-"
        return f"{self.re}{sign}{abs(self.im)}i"


ZERO = ComplexScalar(0)
ONE = ComplexScalar(1)
I = ComplexScalar(0, 1)


def as_scalar(value) -> ComplexScalar:
    return ComplexScalar.coerce(value)


class Polynomial:
    """Polynomial with exact complex coefficients, lowest degree first.

    Trailing zero coefficients are always trimmed, so the zero polynomial
    has no coefficients and degree -1.
    """

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable = ()):
        cs = [as_scalar(c) for c in coeffs]
        while cs and cs[-1].is_zero():
            cs.pop()
        self.coeffs: tuple[ComplexScalar, ...] = tuple(cs)

    @classmethod
    def monomial(cls, k: int, c=1) -> "Polynomial":
        return cls([0] * k + [c])

    @classmethod
    def from_taylor(cls, coeffs: Sequence, center) -> "Polynomial":
        """Polynomial sum_j coeffs[j] (x - center)^j."""
        return cls(coeffs)(cls([-as_scalar(center), 1]))

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def __bool__(self):
        return bool(self.coeffs)

    def __len__(self):
        return len(self.coeffs)

    def __getitem__(self, k: int) -> ComplexScalar:
        if 0 <= k < len(self.coeffs):
            return self.coeffs[k]
        return ZERO

    def leading(self) -> ComplexScalar:
        return self.coeffs[-1] if self.coeffs else ZERO

    def is_real(self) -> bool:
        return all(c.im == 0 for c in self.coeffs)

    def conjugate(self) -> "Polynomial":
        return Polynomial(c.conjugate() for c in self.coeffs)

    def derivative(self, order: int = 1) -> "Polynomial":
        cs = self.coeffs
        for _ in range(order):
            cs = tuple(cs[k] * k for k in range(1, len(cs)))
        return Polynomial(cs)

    def __call__(self, x):
        """Horner evaluation; `x` may be a scalar or another polynomial."""
        if isinstance(x, Polynomial):
            acc = Polynomial()
            for c in reversed(self.coeffs):
                acc = acc * x + c
            return acc
        x = as_scalar(x)
        acc = ZERO
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def eval_float(self, x: complex) -> complex:
        acc = 0j
        for c in reversed(self.coeffs):
            acc = acc * x + complex(c)
        return acc

    def taylor_at(self, center) -> list[ComplexScalar]:
        """Coefficients d_j with P(x) = sum_j d_j (x - center)^j."""
        shifted = self(Polynomial([as_scalar(center), 1]))
        return [shifted[j] for j in range(len(self.coeffs))]

    def scale_variable(self, a) -> "Polynomial":
        """P(a x)."""
        a = as_scalar(a)
        out, p = [], ONE
        for c in self.coeffs:
            out.append(c * p)
            p = p * a
        return Polynomial(out)

    # -- ring operations ----------------------------------------------
    def __add__(self, other):
        if not isinstance(other, Polynomial):
            other = Polynomial([other])
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        return Polynomial([a[k] + b[k] if k < len(b) else a[k] for k in range(len(a))])

    __radd__ = __add__

    def __neg__(self):
        return Polynomial(-c for c in self.coeffs)

    def __sub__(self, other):
        if not isinstance(other, Polynomial):
            other = Polynomial([other])
        return self + (-other)

    def __rsub__(self, other):
        return Polynomial([other]) - self

    def __mul__(self, other):
        if not isinstance(other, Polynomial):
            c = as_scalar(other)
            if c.is_zero():
                return Polynomial()
            return Polynomial(x * c for x in self.coeffs)
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return Polynomial()
        out = [ZERO] * (len(a) + len(b) - 1)
        for i, x in enumerate(a):
            if x.is_zero():
                continue
            for j, y in enumerate(b):
                if not y.is_zero():
                    out[i + j] = out[i + j] + x * y
        return Polynomial(out)

    __rmul__ = __mul__

    def __pow__(self, n: int):
        result = Polynomial([1])
        for _ in range(n):
            result = result * self
        return result

    def __truediv__(self, other):
        c = as_scalar(other)
        return Polynomial(x / c for x in self.coeffs)

    def __eq__(self, other):
        if isinstance(other, Polynomial):
            return self.coeffs == other.coeffs
        return NotImplemented

    def __hash__(self):
        return hash(self.coeffs)

    def __repr__(self):
        return f"Polynomial([{', '.join(str(c) for c in self.coeffs)}])"


def series_quotient(num: Sequence[ComplexScalar], den: Sequence[ComplexScalar], n: int) -> list[ComplexScalar]:
    """First `n` power-series coefficients of num/den, with den[0] != 0."""
    d0 = den[0]
    if d0.is_zero():
        raise ZeroDivisionError("series denominator vanishes at the expansion point")
    inv0 = d0.inverse()
    out: list[ComplexScalar] = []
    for k in range(n):
        acc = num[k] if k < len(num) else ZERO
        for j in range(1, min(k, len(den) - 1) + 1):
            if not den[j].is_zero():
                acc = acc - den[j] * out[k - j]
        out.append(acc * inv0)
    return out


def principal_part(numerator: Polynomial, cofactor: Polynomial, pole, order: int) -> Polynomial:
    """Numerator R of the principal part of numerator / (cofactor * (x - pole)^order).

    `cofactor` must not vanish at `pole`. The principal part is
    R(x) / (x - pole)^order with deg R < order.
    """
    num = numerator.taylor_at(pole)
    den = cofactor.taylor_at(pole)
    g = series_quotient(num, den, order)
    return Polynomial.from_taylor(g, pole)


@lru_cache(maxsize=None)
def binomial_polynomial(shift: int, k: int) -> Polynomial:
    """C(n + shift, k) as a polynomial in n."""
    p = Polynomial([1])
    for j in range(1, k + 1):
        p = p * Polynomial([shift - k + j, 1])
    return p / math.factorial(k)
