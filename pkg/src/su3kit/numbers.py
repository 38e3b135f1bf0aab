"""Exact scalars: Gaussian rationals and their extension by sqrt(2).

Both classes are immutable and interoperate with ``int`` and ``Fraction``.
Mixed arithmetic between a :class:`GaussianRational` and a
:class:`SurdGaussian` always produces a :class:`SurdGaussian`.
"""

from __future__ import annotations

import re
from fractions import Fraction
from typing import Union

Rational = Union[int, Fraction]

_COMPLEX_RE = re.compile(
    r"^\s*(?P<re>[+-]?\d+(?:/\d+)?)?\s*(?:(?P<sign>[+-])\s*(?P<im>\d+(?:/\d+)?)?\s*\*?\s*i)?\s*$"
)


def parse_rational(text: str | int | Fraction) -> Fraction:
    """Parse ``"p/q"`` (or a plain integer) into a ``Fraction``."""
    if isinstance(text, (int, Fraction)):
        return Fraction(text)
    if not isinstance(text, str):
        raise TypeError(f"expected a rational string, got {type(text).__name__}")
    text = text.strip()
    if not re.fullmatch(r"[+-]?\d+(/\d+)?", text):
        raise ValueError(f"not an exact rational: {text!r}")
    value = Fraction(text)
    return value


def format_rational(q: Fraction) -> str:
    q = Fraction(q)
    return f"{q.numerator}/{q.denominator}"


class GaussianRational:
    """A complex number ``re + im*i`` with rational parts."""

    __slots__ = ("re", "im")

    re: Fraction
    im: Fraction

    def __init__(self, re: Rational | str = 0, im: Rational | str = 0) -> None:
        object.__setattr__(self, "re", parse_rational(re) if isinstance(re, str) else Fraction(re))
        object.__setattr__(self, "im", parse_rational(im) if isinstance(im, str) else Fraction(im))

    @classmethod
    def _raw(cls, re: Fraction, im: Fraction) -> GaussianRational:
        obj = object.__new__(cls)
        object.__setattr__(obj, "re", re)
        object.__setattr__(obj, "im", im)
        return obj

    def __setattr__(self, name, value):
        raise AttributeError("GaussianRational is immutable")

    @classmethod
    def coerce(cls, x) -> GaussianRational:
        if isinstance(x, GaussianRational):
            return x
        if isinstance(x, (int, Fraction)):
            return cls._raw(Fraction(x), Fraction(0))
        if isinstance(x, str):
            return cls.parse(x)
        raise TypeError(f"cannot convert {type(x).__name__} to GaussianRational")

    @classmethod
    def parse(cls, text: str) -> GaussianRational:
        """Parse ``"a"``, ``"a/b"``, ``"a+b*i"``, ``"-i"`` and similar."""
        m = _COMPLEX_RE.match(text)
        if not m or (m.group("re") is None and m.group("sign") is None):
            raise ValueError(f"cannot parse Gaussian rational {text!r}")
        re_part = Fraction(m.group("re")) if m.group("re") else Fraction(0)
        im_part = Fraction(0)
        if m.group("sign"):
            mag = Fraction(m.group("im")) if m.group("im") else Fraction(1)
            im_part = mag if m.group("sign") == "+" else -mag
        return cls._raw(re_part, im_part)

    # -- arithmetic -------------------------------------------------------

    def __add__(self, other):
        if isinstance(other, GaussianRational):
            return GaussianRational._raw(self.re + other.re, self.im + other.im)
        if isinstance(other, (int, Fraction)):
            return GaussianRational._raw(self.re + other, self.im)
        return NotImplemented

    __radd__ = __add__

    def __neg__(self):
        return GaussianRational._raw(-self.re, -self.im)

    def __pos__(self):
        return self

    def __sub__(self, other):
        if isinstance(other, GaussianRational):
            return GaussianRational._raw(self.re - other.re, self.im - other.im)
        if isinstance(other, (int, Fraction)):
            return GaussianRational._raw(self.re - other, self.im)
        return NotImplemented

    def __rsub__(self, other):
        if isinstance(other, (int, Fraction)):
            return GaussianRational._raw(other - self.re, -self.im)
        return NotImplemented

    def __mul__(self, other):
        if isinstance(other, GaussianRational):
            a, b, c, d = self.re, self.im, other.re, other.im
            return GaussianRational._raw(a * c - b * d, a * d + b * c)
        if isinstance(other, (int, Fraction)):
            return GaussianRational._raw(self.re * other, self.im * other)
        return NotImplemented

    __rmul__ = __mul__

    def inverse(self) -> GaussianRational:
        n = self.re * self.re + self.im * self.im
        if n == 0:
            raise ZeroDivisionError("GaussianRational division by zero")
        return GaussianRational._raw(self.re / n, -self.im / n)

    def __truediv__(self, other):
        if isinstance(other, (int, Fraction)):
            if other == 0:
                raise ZeroDivisionError("GaussianRational division by zero")
            return GaussianRational._raw(self.re / other, self.im / other)
        if isinstance(other, GaussianRational):
            return self * other.inverse()
        return NotImplemented

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

    def conj(self) -> GaussianRational:
        return GaussianRational._raw(self.re, -self.im)

    def abs2(self) -> Fraction:
        return self.re * self.re + self.im * self.im

    @property
    def real(self) -> GaussianRational:
        return GaussianRational._raw(self.re, Fraction(0))

    @property
    def imag(self) -> GaussianRational:
        return GaussianRational._raw(self.im, Fraction(0))

    def is_zero(self) -> bool:
        return self.re == 0 and self.im == 0

    def is_real(self) -> bool:
        return self.im == 0

    def __bool__(self) -> bool:
        return not self.is_zero()

    def __eq__(self, other) -> bool:
        if isinstance(other, GaussianRational):
            return self.re == other.re and self.im == other.im
        if isinstance(other, (int, Fraction)):
            return self.im == 0 and self.re == other
        return NotImplemented

    def __hash__(self) -> int:
        if self.im == 0:
            return hash(self.re)
        return hash((self.re, self.im))

    def __complex__(self) -> complex:
        return complex(float(self.re), float(self.im))

    def __repr__(self) -> str:
        return f"GaussianRational({str(self)!r})"

    def __str__(self) -> str:
        if self.im == 0:
            return str(self.re)
        if self.re == 0:
            return f"{self.im}*i"
        sign = "+" if self.im > 0 else "-"
        return f"{self.re}{sign}{abs(self.im)}*i"

    def to_json(self) -> dict:
        return {"re": format_rational(self.re), "im": format_rational(self.im)}

    @classmethod
    def from_json(cls, data) -> GaussianRational:
        if isinstance(data, dict):
            return cls(parse_rational(str(data.get("re", "0"))), parse_rational(str(data.get("im", "0"))))
        if isinstance(data, (int, Fraction)):
            return cls(data)
        if isinstance(data, str):
            return cls.parse(data)
        raise TypeError(f"cannot decode Gaussian rational from {data!r}")


ZERO = GaussianRational(0)
ONE = GaussianRational(1)
I = GaussianRational(0, 1)


class SurdGaussian:
    """An element ``a + b*sqrt(2)`` of Q(i, sqrt 2), with ``a, b`` Gaussian rationals.

    Complex conjugation fixes ``sqrt(2)``.
    """

    __slots__ = ("a", "b")

    a: GaussianRational
    b: GaussianRational

    def __init__(self, a=0, b=0) -> None:
        object.__setattr__(self, "a", GaussianRational.coerce(a))
        object.__setattr__(self, "b", GaussianRational.coerce(b))

    def __setattr__(self, name, value):
        raise AttributeError("SurdGaussian is immutable")

    @classmethod
    def coerce(cls, x) -> SurdGaussian:
        if isinstance(x, SurdGaussian):
            return x
        return cls(GaussianRational.coerce(x), ZERO)

    @staticmethod
    def _other(x):
        if isinstance(x, SurdGaussian):
            return x
        if isinstance(x, (GaussianRational, int, Fraction)):
            return SurdGaussian(x, ZERO)
        return None

    def __add__(self, other):
        o = self._other(other)
        if o is None:
            return NotImplemented
        return SurdGaussian(self.a + o.a, self.b + o.b)

    __radd__ = __add__

    def __neg__(self):
        return SurdGaussian(-self.a, -self.b)

    def __sub__(self, other):
        o = self._other(other)
        if o is None:
            return NotImplemented
        return SurdGaussian(self.a - o.a, self.b - o.b)

    def __rsub__(self, other):
        o = self._other(other)
        if o is None:
            return NotImplemented
        return o - self

    def __mul__(self, other):
        o = self._other(other)
        if o is None:
            return NotImplemented
        return SurdGaussian(self.a * o.a + 2 * self.b * o.b, self.a * o.b + self.b * o.a)

    __rmul__ = __mul__

    def inverse(self) -> SurdGaussian:
        # (a + b r)(a - b r) = a^2 - 2 b^2, nonzero unless a = b = 0 since sqrt 2 is not in Q(i).
        norm = self.a * self.a - 2 * self.b * self.b
        if norm.is_zero():
            raise ZeroDivisionError("SurdGaussian division by zero")
        inv = norm.inverse()
        return SurdGaussian(self.a * inv, -self.b * inv)

    def __truediv__(self, other):
        o = self._other(other)
        if o is None:
            return NotImplemented
        return self * o.inverse()

    def __rtruediv__(self, other):
        o = self._other(other)
        if o is None:
            return NotImplemented
        return o * self.inverse()

    def conj(self) -> SurdGaussian:
        return SurdGaussian(self.a.conj(), self.b.conj())

    @property
    def real(self) -> SurdGaussian:
        return SurdGaussian(self.a.real, self.b.real)

    @property
    def imag(self) -> SurdGaussian:
        return SurdGaussian(self.a.imag, self.b.imag)

    def is_zero(self) -> bool:
        return self.a.is_zero() and self.b.is_zero()

    def is_real(self) -> bool:
        return self.a.is_real() and self.b.is_real()

    def is_positive_real(self) -> bool:
        """Exact sign test for a real element ``p + q*sqrt(2)``."""
        if not self.is_real():
            raise ValueError("sign of a non-real number")
        p, q = self.a.re, self.b.re
        if p >= 0 and q >= 0:
            return p > 0 or q > 0
        if p <= 0 and q <= 0:
            return False
        # opposite signs: compare p^2 with 2 q^2
        return (p * p > 2 * q * q) if p > 0 else (2 * q * q > p * p)

    def __bool__(self) -> bool:
        return not self.is_zero()

    def __eq__(self, other) -> bool:
        o = self._other(other)
        if o is None:
            return NotImplemented
        return self.a == o.a and self.b == o.b

    def __hash__(self) -> int:
        if self.b.is_zero():
            return hash(self.a)
        return hash((self.a, self.b))

    def __complex__(self) -> complex:
        return complex(self.a) + complex(self.b) * 2 ** 0.5

    def __repr__(self) -> str:
        return f"SurdGaussian({self.a}, {self.b})"

    def __str__(self) -> str:
        if self.b.is_zero():
            return str(self.a)
        return f"({self.a})+({self.b})*sqrt2"


SQRT2 = SurdGaussian(0, 1)


def is_zero(x) -> bool:
    if isinstance(x, (GaussianRational, SurdGaussian)):
        return x.is_zero()
    return x == 0


def conj(x):
    if isinstance(x, (GaussianRational, SurdGaussian)):
        return x.conj()
    return x
