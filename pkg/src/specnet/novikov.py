"""Novikov ring and fraction field with exact exponents in Q(sqrt(3)).

Ring elements are finite sums sum c_i t^{e_i} with e_i >= 0.  Unit
inverses (infinite series) are never expanded: the fraction field keeps
them as reduced num/den pairs, so every computation stays exact.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .exactnum import Scalar, scalar_sign


def _frac(x) -> Fraction:
    if isinstance(x, Fraction):
        return x
    if isinstance(x, int):
        return Fraction(x)
    raise TypeError(f"coefficient must be rational: {x!r}")


class NovikovPoly:
    """Finite t-series with exponents >= 0, strictly increasing."""

    __slots__ = ("terms",)

    def __init__(self, terms=(), _checked=False):
        if not _checked:
            acc = {}
            for exp, coeff in terms:
                exp = Scalar.coerce(exp)
                coeff = _frac(coeff)
                if coeff == 0:
                    continue
                if exp in acc:
                    acc[exp] += coeff
                else:
                    acc[exp] = coeff
            items = [(e, c) for e, c in acc.items() if c != 0]
            items.sort(key=lambda t: t[0])
            for e, _ in items:
                if e.sign() < 0:
                    raise ValueError("negative exponent in Novikov element")
            terms = tuple(items)
        object.__setattr__(self, "terms", tuple(terms))

    def __setattr__(self, *args):
        raise AttributeError("NovikovPoly is immutable")

    # -- constructors --------------------------------------------------

    @staticmethod
    def const(c) -> "NovikovPoly":
        c = _frac(c)
        if c == 0:
            return P_ZERO
        return NovikovPoly(((Scalar(0), c),), _checked=True)

    @staticmethod
    def monomial(exp, coeff=1) -> "NovikovPoly":
        return NovikovPoly(((exp, coeff),))

    @staticmethod
    def coerce(x) -> "NovikovPoly":
        if isinstance(x, NovikovPoly):
            return x
        return NovikovPoly.const(_frac(x))

    # -- queries --------------------------------------------------------

    def is_zero(self) -> bool:
        return not self.terms

    def valuation(self):
        """Least exponent, or None for the zero element."""
        if not self.terms:
            return None
        return self.terms[0][0]

    def is_unit(self) -> bool:
        return bool(self.terms) and self.terms[0][0].is_zero()

    def bottom_coeff(self) -> Fraction:
        if not self.terms:
            raise ValueError("zero element")
        return self.terms[0][1]

    def residue(self) -> Fraction:
        """Coefficient of t^0 (image in the residue field)."""
        if self.terms and self.terms[0][0].is_zero():
            return self.terms[0][1]
        return Fraction(0)

    # -- arithmetic -------------------------------------------------------

    def __add__(self, other):
        other = NovikovPoly.coerce(other)
        return NovikovPoly(self.terms + other.terms)

    __radd__ = __add__

    def __neg__(self):
        return NovikovPoly(
            tuple((e, -c) for e, c in self.terms), _checked=True
        )

    def __sub__(self, other):
        return self + (-NovikovPoly.coerce(other))

    def __rsub__(self, other):
        return NovikovPoly.coerce(other) + (-self)

    def __mul__(self, other):
        other = NovikovPoly.coerce(other)
        out = []
        for e1, c1 in self.terms:
            for e2, c2 in other.terms:
                out.append((e1 + e2, c1 * c2))
        return NovikovPoly(out)

    __rmul__ = __mul__

    def scale(self, c) -> "NovikovPoly":
        c = _frac(c)
        if c == 0:
            return P_ZERO
        return NovikovPoly(
            tuple((e, k * c) for e, k in self.terms), _checked=True
        )

    def shift(self, exp) -> "NovikovPoly":
        """Multiply by t^exp (exp may be negative if no exponent drops below 0)."""
        exp = Scalar.coerce(exp)
        return NovikovPoly(tuple((e + exp, c) for e, c in self.terms))

    def __eq__(self, other):
        if isinstance(other, (NovikovPoly, int, Fraction)):
            return NovikovPoly.coerce(other).terms == self.terms
        return NotImplemented

    def __hash__(self):
        return hash(self.terms)

    def __repr__(self):
        if not self.terms:
            return "0"
        bits = []
        for e, c in self.terms:
            if e.is_zero():
                bits.append(f"{c}")
            else:
                bits.append(f"{c}*t^({float(e):g})")
        return " + ".join(bits)

    def to_json(self):
        return [[e.to_json(), [c.numerator, c.denominator]] for e, c in self.terms]

    @staticmethod
    def from_json(data) -> "NovikovPoly":
        return NovikovPoly(
            [(Scalar.from_json(e), Fraction(c[0], c[1])) for e, c in data]
        )


P_ZERO = NovikovPoly((), _checked=True)
P_ONE = NovikovPoly.const(1)


def t_power(exp, coeff=1) -> NovikovPoly:
    return NovikovPoly.monomial(exp, coeff)


class NovikovFrac:
    """Element t^val * num/den of the fraction field.

    num and den are valuation-0 polynomials, den normalized to bottom
    coefficient 1.  Zero is stored as (val 0, num 0, den 1).  Elements
    of nonnegative valuation are exactly the honest ring elements.
    """

    __slots__ = ("val", "num", "den")

    def __init__(self, num, den=P_ONE):
        num = NovikovPoly.coerce(num)
        den = NovikovPoly.coerce(den)
        if den.is_zero():
            raise ZeroDivisionError("zero denominator")
        if num.is_zero():
            val, num, den = Scalar(0), P_ZERO, P_ONE
        else:
            val = num.valuation() - den.valuation()
            num = num.shift(-num.valuation())
            den = den.shift(-den.valuation())
            c = den.bottom_coeff()
            num = num.scale(1 / c)
            den = den.scale(1 / c)
        object.__setattr__(self, "val", val)
        object.__setattr__(self, "num", num)
        object.__setattr__(self, "den", den)

    def __setattr__(self, *args):
        raise AttributeError("NovikovFrac is immutable")

    @staticmethod
    def coerce(x) -> "NovikovFrac":
        if isinstance(x, NovikovFrac):
            return x
        if isinstance(x, NovikovPoly):
            return NovikovFrac(x)
        return NovikovFrac(NovikovPoly.coerce(x))

    @staticmethod
    def _make(val, num, den) -> "NovikovFrac":
        f = NovikovFrac.__new__(NovikovFrac)
        object.__setattr__(f, "val", val)
        object.__setattr__(f, "num", num)
        object.__setattr__(f, "den", den)
        return f

    # -- queries ---------------------------------------------------------

    def is_zero(self) -> bool:
        return self.num.is_zero()

    def valuation(self):
        return None if self.is_zero() else self.val

    def in_ring(self) -> bool:
        """True when the element lies in the Novikov ring itself."""
        return self.is_zero() or self.val.sign() >= 0

    def residue(self) -> Fraction:
        """Image in the residue field; requires a ring element."""
        if self.is_zero():
            return Fraction(0)
        s = self.val.sign()
        if s < 0:
            raise ValueError("negative valuation has no residue")
        if s > 0:
            return Fraction(0)
        return self.num.residue() / self.den.residue()

    # -- arithmetic ---------------------------------------------------------

    def __add__(self, other):
        other = NovikovFrac.coerce(other)
        if self.is_zero():
            return other
        if other.is_zero():
            return self
        v = self.val if (self.val - other.val).sign() <= 0 else other.val
        n = self.num.shift(self.val - v) * other.den + other.num.shift(
            other.val - v
        ) * self.den
        if n.is_zero():
            return F_ZERO
        d = self.den * other.den
        return NovikovFrac(n, d)._reval(v)

    def _reval(self, base_val) -> "NovikovFrac":
        # constructor measured val relative to shifted num; add the base back
        return NovikovFrac._make(self.val + base_val, self.num, self.den)

    __radd__ = __add__

    def __neg__(self):
        if self.is_zero():
            return self
        return NovikovFrac._make(self.val, -self.num, self.den)

    def __sub__(self, other):
        return self + (-NovikovFrac.coerce(other))

    def __rsub__(self, other):
        return NovikovFrac.coerce(other) + (-self)

    def __mul__(self, other):
        other = NovikovFrac.coerce(other)
        if self.is_zero() or other.is_zero():
            return F_ZERO
        out = NovikovFrac(self.num * other.num, self.den * other.den)
        return out._reval(self.val + other.val)

    __rmul__ = __mul__

    def inverse(self) -> "NovikovFrac":
        if self.is_zero():
            raise ZeroDivisionError("inverse of zero")
        out = NovikovFrac(self.den, self.num)
        return out._reval(-self.val)

    def __truediv__(self, other):
        return self * NovikovFrac.coerce(other).inverse()

    def __rtruediv__(self, other):
        return NovikovFrac.coerce(other) * self.inverse()

    def __eq__(self, other):
        if isinstance(other, (NovikovFrac, NovikovPoly, int, Fraction)):
            other = NovikovFrac.coerce(other)
            if self.is_zero():
                return other.is_zero()
            if other.is_zero():
                return False
            if self.val != other.val:
                return False
            return self.num * other.den == other.num * self.den
        return NotImplemented

    __hash__ = None

    def __repr__(self):
        if self.is_zero():
            return "NovikovFrac(0)"
        v = "" if self.val.is_zero() else f"t^({float(self.val):g}) * "
        if self.den == P_ONE:
            return f"{v}({self.num!r})"
        return f"{v}({self.num!r}) / ({self.den!r})"

    def as_poly(self) -> NovikovPoly:
        """The underlying polynomial, when the denominator is trivial."""
        if self.den != P_ONE:
            raise ValueError("not a polynomial element")
        return self.num.shift(self.val)


F_ZERO = NovikovFrac(P_ZERO)
F_ONE = NovikovFrac(P_ONE)


# ---------------------------------------------------------------------------
# matrices (plain lists of lists)
# ---------------------------------------------------------------------------


def mat_coerce(M):
    return [[NovikovFrac.coerce(x) for x in row] for row in M]


def mat_mul(A, B):
    n, k = len(A), len(B)
    m = len(B[0]) if B else 0
    out = [[F_ZERO] * m for _ in range(n)]
    for i in range(n):
        for j in range(m):
            s = F_ZERO
            for l in range(k):
                s = s + A[i][l] * B[l][j]
            out[i][j] = s
    return out


def mat_eq(A, B) -> bool:
    if len(A) != len(B):
        return False
    for ra, rb in zip(A, B):
        if len(ra) != len(rb):
            return False
        for x, y in zip(ra, rb):
            if not (NovikovFrac.coerce(x) == NovikovFrac.coerce(y)):
                return False
    return True


def mat_identity(n):
    return [
        [F_ONE if i == j else F_ZERO for j in range(n)] for i in range(n)
    ]


@dataclass(frozen=True)
class NormalForm:
    rowBasis: list  # invertible over the ring, stored as fractions
    colBasis: list
    pivots: list  # exponents lambda_1 <= ... <= lambda_r

    def diagonal(self, shape):
        n, m = shape
        D = [[F_ZERO] * m for _ in range(n)]
        for r, lam in enumerate(self.pivots):
            D[r][r] = NovikovFrac.coerce(t_power(lam))
        return D

    def recompose(self, shape):
        return mat_mul(self.rowBasis, mat_mul(self.diagonal(shape), self.colBasis))


def _min_val_entry(W, start):
    """Position of the minimal-valuation entry of W[start:, start:].

    Ties broken by lowest row, then column, for determinism.
    """
    best = None
    best_val = None
    for i in range(start, len(W)):
        for j in range(start, len(W[0])):
            x = W[i][j]
            if x.is_zero():
                continue
            v = x.val
            if best is None or (v - best_val).sign() < 0:
                best, best_val = (i, j), v
    return best, best_val


def novikov_normal_form(M) -> NormalForm:
    """Diagonalize M = R * diag(t^lambda_i) * C by unit row/column operations.

    Entries may be ring elements or fractions; R and C are invertible
    over the ring (their entries are fractions of unit denominators up
    to the recorded valuations).  The factorization is verified exactly
    before returning.
    """
    W = mat_coerce(M)
    n = len(W)
    m = len(W[0]) if n else 0
    R = mat_identity(n)
    C = mat_identity(m)
    pivots = []

    for r in range(min(n, m)):
        pos, lam = _min_val_entry(W, r)
        if pos is None:
            break
        i0, j0 = pos
        if i0 != r:
            W[i0], W[r] = W[r], W[i0]
            for row in R:
                row[i0], row[r] = row[r], row[i0]
        if j0 != r:
            for row in W:
                row[j0], row[r] = row[r], row[j0]
            C[j0], C[r] = C[r], C[j0]
        tl = NovikovFrac.coerce(t_power(lam))
        u = W[r][r] / tl  # unit part of the pivot
        uinv = u.inverse()
        # scale the pivot row so the pivot is exactly t^lambda
        W[r] = [x * uinv for x in W[r]]
        for row in R:
            row[r] = row[r] * u
        for i in range(r + 1, n):
            if W[i][r].is_zero():
                continue
            f = W[i][r] / tl
            W[i] = [x - f * y for x, y in zip(W[i], W[r])]
            for row in R:
                row[r] = row[r] + f * row[i]
        for j in range(r + 1, m):
            if W[r][j].is_zero():
                continue
            f = W[r][j] / tl
            for row in W:
                row[j] = row[j] - f * row[r]
            C[r] = [x + f * y for x, y in zip(C[r], C[j])]
        pivots.append(lam)

    nf = NormalForm(R, C, pivots)
    if not mat_eq(nf.recompose((n, m)), mat_coerce(M)):
        raise AssertionError("normal form failed to recompose")
    return nf


def rank_over_K(M) -> int:
    """Rank after base change to the fraction field (Gaussian elimination)."""
    W = mat_coerce(M)
    if not W or not W[0]:
        return 0
    n, m = len(W), len(W[0])
    rank = 0
    row = 0
    for col in range(m):
        pivot = None
        best_val = None
        for i in range(row, n):
            x = W[i][col]
            if x.is_zero():
                continue
            if pivot is None or (x.val - best_val).sign() < 0:
                pivot, best_val = i, x.val
        if pivot is None:
            continue
        W[row], W[pivot] = W[pivot], W[row]
        pv = W[row][col]
        for i in range(row + 1, n):
            if W[i][col].is_zero():
                continue
            f = W[i][col] / pv
            W[i] = [
                x - f * y if j >= col else x
                for j, (x, y) in enumerate(zip(W[i], W[row]))
            ]
        rank += 1
        row += 1
        if row == n:
            break
    return rank


def mat_residue(M):
    """Entrywise image in the residue field (rational matrix)."""
    return [[NovikovFrac.coerce(x).residue() for x in row] for row in M]


def rank_over_k(M) -> int:
    """Rank of the reduction to the residue field."""
    W = [row[:] for row in mat_residue(M)]
    if not W or not W[0]:
        return 0
    n, m = len(W), len(W[0])
    rank = 0
    row = 0
    for col in range(m):
        pivot = next((i for i in range(row, n) if W[i][col] != 0), None)
        if pivot is None:
            continue
        W[row], W[pivot] = W[pivot], W[row]
        pv = W[row][col]
        for i in range(row + 1, n):
            if W[i][col]:
                f = W[i][col] / pv
                W[i] = [x - f * y for x, y in zip(W[i], W[row])]
        rank += 1
        row += 1
        if row == n:
            break
    return rank


@dataclass(frozen=True)
class FreeComplex:
    """Finite free complex over the ring: ranks per degree and
    differentials d: C^d -> C^{d+1} (matrix with rank^{d+1} rows)."""

    ranks: dict
    diffs: dict

    def degrees(self):
        return sorted(self.ranks)


def homology_ranks(C: FreeComplex, field: str) -> dict:
    """Betti numbers of C tensored with k or K, per degree."""
    if field not in ("k", "K"):
        raise ValueError(f"unknown field {field!r}")
    rank_fn = rank_over_k if field == "k" else rank_over_K

    diffs = {d: mat_coerce(M) for d, M in C.diffs.items() if M and M[0]}
    for d, M in diffs.items():
        if len(M[0]) != C.ranks.get(d, 0) or len(M) != C.ranks.get(d + 1, 0):
            raise ValueError(f"differential at degree {d} has wrong shape")
    # d^2 = 0 over the requested field
    for d, M in diffs.items():
        N = diffs.get(d + 1)
        if N is None:
            continue
        square = mat_mul(N, M)
        if field == "k":
            ok = all(x == 0 for row in mat_residue(square) for x in row)
        else:
            ok = all(x.is_zero() for row in square for x in row)
        if not ok:
            raise ValueError("NotAComplex")

    rk = {d: rank_fn(M) for d, M in diffs.items()}
    out = {}
    for d, n in C.ranks.items():
        out[d] = n - rk.get(d, 0) - rk.get(d - 1, 0)
        if out[d] < 0:
            raise AssertionError("negative Betti number")
    return out
