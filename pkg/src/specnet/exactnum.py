"""Exact arithmetic over Q(sqrt(3)): scalars, planar points, graded directions.

Everything downstream (areas, path weights, degree ceilings, Novikov
exponents) reduces to sign determinations in this field, so no floating
point is used anywhere.  Floats appear only in ``Scalar.__float__`` for
sanity cross-checks in tests.
"""

from __future__ import annotations

from fractions import Fraction


def _frac(x) -> Fraction:
    if isinstance(x, Fraction):
        return x
    if isinstance(x, int):
        return Fraction(x)
    if isinstance(x, str):
        return Fraction(x)
    raise TypeError(f"not an exact rational: {x!r}")


class Scalar:
    """a + b*sqrt(3) with rational a, b."""

    __slots__ = ("a", "b")

    def __init__(self, a=0, b=0):
        object.__setattr__(self, "a", _frac(a))
        object.__setattr__(self, "b", _frac(b))

    def __setattr__(self, *args):
        raise AttributeError("Scalar is immutable")

    # -- constructors ------------------------------------------------

    @staticmethod
    def coerce(x) -> "Scalar":
        if isinstance(x, Scalar):
            return x
        return Scalar(_frac(x))

    # -- ring structure ----------------------------------------------

    def __add__(self, other):
        other = Scalar.coerce(other)
        return Scalar(self.a + other.a, self.b + other.b)

    __radd__ = __add__

    def __neg__(self):
        return Scalar(-self.a, -self.b)

    def __sub__(self, other):
        return self + (-Scalar.coerce(other))

    def __rsub__(self, other):
        return Scalar.coerce(other) + (-self)

    def __mul__(self, other):
        other = Scalar.coerce(other)
        # (a + b r)(c + d r) with r^2 = 3
        return Scalar(
            self.a * other.a + 3 * self.b * other.b,
            self.a * other.b + self.b * other.a,
        )

    __rmul__ = __mul__

    def inverse(self) -> "Scalar":
        # conjugate trick; a^2 - 3 b^2 = 0 only for a = b = 0
        n = self.a * self.a - 3 * self.b * self.b
        if n == 0:
            raise ZeroDivisionError("division by zero Scalar")
        return Scalar(self.a / n, -self.b / n)

    def __truediv__(self, other):
        return self * Scalar.coerce(other).inverse()

    def __rtruediv__(self, other):
        return Scalar.coerce(other) * self.inverse()

    # -- order ---------------------------------------------------------

    def sign(self) -> int:
        a, b = self.a, self.b
        if b == 0:
            return 0 if a == 0 else (1 if a > 0 else -1)
        if a == 0:
            return 1 if b > 0 else -1
        if a > 0 and b > 0:
            return 1
        if a < 0 and b < 0:
            return -1
        # mixed signs: the sign is decided by a^2 vs 3 b^2
        big_a = a * a > 3 * b * b
        if a > 0:
            return 1 if big_a else -1
        return -1 if big_a else 1

    def is_zero(self) -> bool:
        return self.a == 0 and self.b == 0

    def __eq__(self, other):
        if isinstance(other, (Scalar, int, Fraction)):
            return (self - other).is_zero()
        return NotImplemented

    def __hash__(self):
        if self.b == 0:
            return hash(self.a)
        return hash((self.a, self.b))

    def __lt__(self, other):
        return (self - Scalar.coerce(other)).sign() < 0

    def __le__(self, other):
        return (self - Scalar.coerce(other)).sign() <= 0

    def __gt__(self, other):
        return (self - Scalar.coerce(other)).sign() > 0

    def __ge__(self, other):
        return (self - Scalar.coerce(other)).sign() >= 0

    def __float__(self):
        return float(self.a) + float(self.b) * (3.0 ** 0.5)

    def __repr__(self):
        if self.b == 0:
            return f"Scalar({self.a})"
        return f"Scalar({self.a}, {self.b})"

    # -- JSON ----------------------------------------------------------

    def to_json(self):
        return [
            self.a.numerator,
            self.a.denominator,
            self.b.numerator,
            self.b.denominator,
        ]

    @staticmethod
    def from_json(data) -> "Scalar":
        an, ad, bn, bd = data
        return Scalar(Fraction(an, ad), Fraction(bn, bd))


ZERO = Scalar(0)
ONE = Scalar(1)
SQRT3 = Scalar(0, 1)
HALF = Scalar(Fraction(1, 2))


def scalar_sign(s: Scalar) -> int:
    return Scalar.coerce(s).sign()


# cos/sin of k*pi/6 for k mod 12; all entries lie in Q(sqrt(3))
_COS = [
    Scalar(1), Scalar(0, Fraction(1, 2)), Scalar(Fraction(1, 2)), Scalar(0),
    Scalar(Fraction(-1, 2)), Scalar(0, Fraction(-1, 2)), Scalar(-1),
    Scalar(0, Fraction(-1, 2)), Scalar(Fraction(-1, 2)), Scalar(0),
    Scalar(Fraction(1, 2)), Scalar(0, Fraction(1, 2)),
]
_SIN = _COS[9:] + _COS[:9]  # sin(x) = cos(x - pi/2), shift by three sixths


class Point:
    """Planar point / vector with Scalar coordinates.

    Doubles as the complex number x + i y: ``cmul`` is complex
    multiplication, which keeps rotations by multiples of pi/6 exact.
    """

    __slots__ = ("x", "y")

    def __init__(self, x, y):
        object.__setattr__(self, "x", Scalar.coerce(x))
        object.__setattr__(self, "y", Scalar.coerce(y))

    def __setattr__(self, *args):
        raise AttributeError("Point is immutable")

    def __add__(self, other):
        return Point(self.x + other.x, self.y + other.y)

    def __sub__(self, other):
        return Point(self.x - other.x, self.y - other.y)

    def __neg__(self):
        return Point(-self.x, -self.y)

    def scale(self, c) -> "Point":
        c = Scalar.coerce(c)
        return Point(self.x * c, self.y * c)

    def cross(self, other) -> Scalar:
        return self.x * other.y - self.y * other.x

    def dot(self, other) -> Scalar:
        return self.x * other.x + self.y * other.y

    def norm2(self) -> Scalar:
        return self.dot(self)

    def cmul(self, other) -> "Point":
        return Point(
            self.x * other.x - self.y * other.y,
            self.x * other.y + self.y * other.x,
        )

    def rot_sixths(self, k: int) -> "Point":
        k %= 12
        return self.cmul(Point(_COS[k], _SIN[k]))

    def is_zero(self) -> bool:
        return self.x.is_zero() and self.y.is_zero()

    def __eq__(self, other):
        if not isinstance(other, Point):
            return NotImplemented
        return self.x == other.x and self.y == other.y

    def __hash__(self):
        return hash((self.x, self.y))

    def __repr__(self):
        return f"Point({self.x!r}, {self.y!r})"

    def to_json(self):
        return [self.x.to_json(), self.y.to_json()]

    @staticmethod
    def from_json(data) -> "Point":
        return Point(Scalar.from_json(data[0]), Scalar.from_json(data[1]))


def polygon_area(pts) -> Scalar:
    """Exact area of a simple counterclockwise polygon (shoelace)."""
    pts = list(pts)
    total = Scalar(0)
    for i, p in enumerate(pts):
        q = pts[(i + 1) % len(pts)]
        total = total + p.cross(q)
    area = total * Scalar(Fraction(1, 2))
    if area.sign() <= 0:
        raise ValueError("Degenerate")
    return area


def _canonical_upper(v: Point):
    """Scale-normalize v into the upper half plane (angle in [0, pi)).

    Returns (w, flipped) with w positively proportional to +-v and
    normalized so its first nonzero coordinate pattern is canonical,
    making Direction hashable.
    """
    if v.is_zero():
        raise ValueError("zero vector has no direction")
    sy = v.y.sign()
    flipped = sy < 0 or (sy == 0 and v.x.sign() < 0)
    if flipped:
        v = -v
    if v.y.sign() > 0:
        w = Point(v.x / v.y, ONE)
    else:
        w = Point(ONE, ZERO)
    return w, flipped


class Direction:
    """A graded direction: the real number angle(v)/pi + lift.

    The vector is canonicalized to the upper half plane, bumping the
    lift when it flips, so equal real values compare and hash equal.
    """

    __slots__ = ("v", "lift")

    def __init__(self, v: Point, lift: int = 0):
        w, flipped = _canonical_upper(v)
        object.__setattr__(self, "v", w)
        object.__setattr__(self, "lift", lift + (1 if flipped else 0))

    def __setattr__(self, *args):
        raise AttributeError("Direction is immutable")

    def __eq__(self, other):
        if not isinstance(other, Direction):
            return NotImplemented
        return self.lift == other.lift and self.v == other.v

    def __hash__(self):
        return hash((self.v, self.lift))

    def _angle_cmp(self, other: "Direction") -> int:
        # both vectors lie in [0, pi); cross sign orders the angles
        return self.v.cross(other.v).sign()

    def __lt__(self, other):
        if self.lift != other.lift:
            return self.lift < other.lift
        return self._angle_cmp(other) > 0

    def __le__(self, other):
        return self == other or self < other

    def shift(self, n: int) -> "Direction":
        d = Direction.__new__(Direction)
        object.__setattr__(d, "v", self.v)
        object.__setattr__(d, "lift", self.lift + n)
        return d

    def rotate_sixths(self, k: int) -> "Direction":
        """Rotate by k*pi/6, adjusting the lift across half-turn seams."""
        d = self
        step = 1 if k >= 0 else -1
        for _ in range(abs(k)):
            w = d.v.rot_sixths(step)
            sy = w.y.sign()
            crossed = sy < 0 or (sy == 0 and w.x.sign() < 0)
            lift = d.lift + (step if crossed else 0)
            nd = Direction.__new__(Direction)
            cw, _ = _canonical_upper(w)
            object.__setattr__(nd, "v", cw)
            object.__setattr__(nd, "lift", lift)
            d = nd
        return d

    def antipode(self) -> "Direction":
        """The same line with the opposite orientation, half a turn up."""
        return self.shift(1)

    def __repr__(self):
        return f"Direction({self.v!r}, lift={self.lift})"

    def __float__(self):
        import math

        return math.atan2(float(self.v.y), float(self.v.x)) / math.pi + self.lift


def ceil_diff(d0: Direction, d1: Direction) -> int:
    """ceil(value(d0) - value(d1)), by half-turn counting plus one predicate."""
    base = d0.lift - d1.lift
    # residual angles both in [0, pi): their difference is in (-1, 1) half-turns
    return base + (1 if d1.v.cross(d0.v).sign() > 0 else 0)


def direction_of(vec: Point, lift: int = 0) -> Direction:
    return Direction(vec, lift)
