"""Exact scalar arithmetic: rationals, Gaussian rationals, rational quaternions.

Every value is immutable and canonical (``Fraction`` keeps denominators
positive and in lowest terms), so equality and zero tests are exact.  The
Gaussian rationals stand in for the complex field: membership questions over
ideals generated with these coefficients are unchanged by extending scalars,
so exact answers here are valid statements about the complex setting.
"""

from __future__ import annotations

from fractions import Fraction


def as_rat(x) -> Fraction:
    """Coerce an int, string ("p/q") or Fraction to an exact rational."""
    if isinstance(x, Fraction):
        return x
    if isinstance(x, (int, str)):
        return Fraction(x)
    raise TypeError(f"cannot interpret {x!r} as an exact rational")


def rat_str(x: Fraction) -> str:
    """Render as "p" or "p/q" (denominator omitted when 1)."""
    return str(x)


class GaussQ:
    """Gaussian rational re + im*i."""

    __slots__ = ("re", "im")

    def __init__(self, re=0, im=0):
        self.re = as_rat(re)
        self.im = as_rat(im)

    def is_zero(self) -> bool:
        return not self.re and not self.im

    def __bool__(self):
        return bool(self.re) or bool(self.im)

    def __eq__(self, other):
        if isinstance(other, GaussQ):
            return self.re == other.re and self.im == other.im
        if isinstance(other, (int, Fraction)):
            return self.im == 0 and self.re == other
        return NotImplemented

    def __hash__(self):
        return hash((self.re, self.im))

    def __add__(self, other):
        other = _gauss(other)
        return GaussQ(self.re + other.re, self.im + other.im)

    __radd__ = __add__

    def __sub__(self, other):
        other = _gauss(other)
        return GaussQ(self.re - other.re, self.im - other.im)

    def __rsub__(self, other):
        return _gauss(other) - self

    def __neg__(self):
        return GaussQ(-self.re, -self.im)

    def __mul__(self, other):
        other = _gauss(other)
        return GaussQ(
            self.re * other.re - self.im * other.im,
            self.re * other.im + self.im * other.re,
        )

    __rmul__ = __mul__

    def inv(self) -> "GaussQ":
        n = self.norm_sq()
        if not n:
            raise ZeroDivisionError("inverse of zero Gaussian rational")
        return GaussQ(self.re / n, -self.im / n)

    def __truediv__(self, other):
        return self * _gauss(other).inv()

    def __pow__(self, e: int):
        if e < 0:
            return self.inv() ** (-e)
        result = GQ_ONE
        base = self
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def conj(self) -> "GaussQ":
        return GaussQ(self.re, -self.im)

    def norm_sq(self) -> Fraction:
        return self.re * self.re + self.im * self.im

    def __repr__(self):
        return f"GaussQ({self.re}, {self.im})"

    def __str__(self):
        if not self.im:
            return rat_str(self.re)
        im = "i" if self.im == 1 else ("-i" if self.im == -1 else rat_str(self.im) + "i")
        if not self.re:
            return im
        sign = "+" if self.im > 0 else ""
        return f"{rat_str(self.re)}{sign}{im}"

    def to_json(self):
        return {"re": rat_str(self.re), "im": rat_str(self.im)}

    @staticmethod
    def from_json(data) -> "GaussQ":
        return GaussQ(as_rat(data["re"]), as_rat(data["im"]))


def _gauss(x) -> GaussQ:
    if isinstance(x, GaussQ):
        return x
    if isinstance(x, (int, Fraction)):
        return GaussQ(x)
    raise TypeError(f"cannot coerce {x!r} to a Gaussian rational")


GQ_ZERO = GaussQ(0)
GQ_ONE = GaussQ(1)
GQ_I = GaussQ(0, 1)


class QuatQ:
    """Rational quaternion c0 + c1*i + c2*j + c3*k.

    The units satisfy i^2 = j^2 = k^2 = ijk = -1, which fixes the whole
    multiplication table (ij = k, jk = i, ki = j and the reversed products
    negated).
    """

    __slots__ = ("c0", "c1", "c2", "c3")

    def __init__(self, c0=0, c1=0, c2=0, c3=0):
        self.c0 = as_rat(c0)
        self.c1 = as_rat(c1)
        self.c2 = as_rat(c2)
        self.c3 = as_rat(c3)

    def components(self) -> tuple[Fraction, Fraction, Fraction, Fraction]:
        return (self.c0, self.c1, self.c2, self.c3)

    def is_zero(self) -> bool:
        return not (self.c0 or self.c1 or self.c2 or self.c3)

    def __bool__(self):
        return not self.is_zero()

    def __eq__(self, other):
        if isinstance(other, QuatQ):
            return self.components() == other.components()
        if isinstance(other, (int, Fraction)):
            return self.components() == (other, 0, 0, 0)
        return NotImplemented

    def __hash__(self):
        return hash(self.components())

    def __add__(self, other):
        other = _quat(other)
        return QuatQ(self.c0 + other.c0, self.c1 + other.c1,
                     self.c2 + other.c2, self.c3 + other.c3)

    __radd__ = __add__

    def __sub__(self, other):
        other = _quat(other)
        return QuatQ(self.c0 - other.c0, self.c1 - other.c1,
                     self.c2 - other.c2, self.c3 - other.c3)

    def __rsub__(self, other):
        return _quat(other) - self

    def __neg__(self):
        return QuatQ(-self.c0, -self.c1, -self.c2, -self.c3)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return QuatQ(self.c0 * other, self.c1 * other,
                         self.c2 * other, self.c3 * other)
        other = _quat(other)
        a0, a1, a2, a3 = self.components()
        b0, b1, b2, b3 = other.components()
        return QuatQ(
            a0 * b0 - a1 * b1 - a2 * b2 - a3 * b3,
            a0 * b1 + a1 * b0 + a2 * b3 - a3 * b2,
            a0 * b2 - a1 * b3 + a2 * b0 + a3 * b1,
            a0 * b3 + a1 * b2 - a2 * b1 + a3 * b0,
        )

    def __rmul__(self, other):
        if isinstance(other, (int, Fraction)):
            return self * other
        return _quat(other) * self

    def __pow__(self, e: int):
        if e < 0:
            return self.inv() ** (-e)
        result = QQ_ONE
        base = self
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def conj(self) -> "QuatQ":
        return QuatQ(self.c0, -self.c1, -self.c2, -self.c3)

    def norm_sq(self) -> Fraction:
        return (self.c0 * self.c0 + self.c1 * self.c1
                + self.c2 * self.c2 + self.c3 * self.c3)

    def conj_norm(self) -> tuple["QuatQ", Fraction]:
        """Return (conjugate, self * conjugate) with the product as a rational."""
        return self.conj(), self.norm_sq()

    def inv(self) -> "QuatQ":
        n = self.norm_sq()
        if not n:
            raise ZeroDivisionError("inverse of zero quaternion")
        return QuatQ(self.c0 / n, -self.c1 / n, -self.c2 / n, -self.c3 / n)

    def scalar_part(self) -> Fraction:
        return self.c0

    def is_real(self) -> bool:
        return not (self.c1 or self.c2 or self.c3)

    def commutes_with(self, other: "QuatQ") -> bool:
        return self * other == other * self

    def __repr__(self):
        return f"QuatQ({self.c0}, {self.c1}, {self.c2}, {self.c3})"

    def __str__(self):
        parts = []
        for value, unit in zip(self.components(), ("", "I", "J", "K")):
            if not value:
                continue
            if unit and value == 1:
                text = unit
            elif unit and value == -1:
                text = "-" + unit
            else:
                text = rat_str(value) + unit
            parts.append(text)
        if not parts:
            return "0"
        out = parts[0]
        for p in parts[1:]:
            out += p if p.startswith("-") else "+" + p
        return out

    def to_json(self):
        return [rat_str(c) for c in self.components()]

    @staticmethod
    def from_json(data) -> "QuatQ":
        return QuatQ(*(as_rat(c) for c in data))


def _quat(x) -> QuatQ:
    if isinstance(x, QuatQ):
        return x
    if isinstance(x, (int, Fraction)):
        return QuatQ(x)
    if isinstance(x, GaussQ):
        return QuatQ(x.re, x.im)
    raise TypeError(f"cannot coerce {x!r} to a quaternion")


QQ_ZERO = QuatQ(0)
QQ_ONE = QuatQ(1)
QQ_I = QuatQ(0, 1)
QQ_J = QuatQ(0, 0, 1)
QQ_K = QuatQ(0, 0, 0, 1)


def quat_from_gauss(z: GaussQ) -> QuatQ:
    """Embed a Gaussian rational as the quaternion re + im*i."""
    return QuatQ(z.re, z.im)


def components_by_conjugation(a: QuatQ):
    """Extract the four components of ``a`` using only quaternion arithmetic.

    Each component is isolated by averaging unit conjugates, e.g. the scalar
    part is (a - i*a*i - j*a*j - k*a*k)/4.  Must agree with the stored
    component tuple; used as an independent cross-check of the product table.
    """
    i, j, k = QQ_I, QQ_J, QQ_K
    quarter = Fraction(1, 4)
    e0 = (a - i * a * i - j * a * j - k * a * k) * quarter
    e1 = (j * a * k - a * i - i * a - k * a * j) * quarter
    e2 = (k * a * i - a * j - j * a - i * a * k) * quarter
    e3 = (i * a * j - a * k - k * a - j * a * i) * quarter
    return (e0.c0, e1.c0, e2.c0, e3.c0)
