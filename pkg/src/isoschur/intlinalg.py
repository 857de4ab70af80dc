"""Exact linear algebra over the integers, the rationals and real quadratic
extensions.

Everything in the trusted computation path goes through this module: plain
Python integers, fractions.Fraction, and QuadExt (numbers a + b*sqrt(D)).
No floating point.
"""

from fractions import Fraction
from math import gcd


def identity(n):
    return tuple(tuple(1 if i == j else 0 for j in range(n)) for i in range(n))


def transpose(mat):
    return tuple(zip(*mat))


def mat_mul(a, b):
    bt = list(zip(*b))
    return tuple(
        tuple(sum(x * y for x, y in zip(row, col)) for col in bt) for row in a
    )


def mat_vec(mat, vec):
    return tuple(sum(x * y for x, y in zip(row, vec)) for row in mat)


def vec_sub(a, b):
    return tuple(x - y for x, y in zip(a, b))


def vec_add(a, b):
    return tuple(x + y for x, y in zip(a, b))


def vec_scale(c, v):
    return tuple(c * x for x in v)


def primitive(vec):
    """Divide an integer vector by the gcd of its entries (0 stays 0)."""
    g = 0
    for x in vec:
        g = gcd(g, abs(x))
    if g <= 1:
        return tuple(vec)
    return tuple(x // g for x in vec)


def _rref(rows, width):
    """Row-reduce in place; rows hold field elements. Returns pivot columns."""
    pivots = []
    r = 0
    for c in range(width):
        pivot = None
        for i in range(r, len(rows)):
            if rows[i][c] != 0:
                pivot = i
                break
        if pivot is None:
            continue
        rows[r], rows[pivot] = rows[pivot], rows[r]
        inv = rows[r][c]
        rows[r] = [x / inv for x in rows[r]]
        for i in range(len(rows)):
            if i != r and rows[i][c] != 0:
                f = rows[i][c]
                rows[i] = [x - f * y for x, y in zip(rows[i], rows[r])]
        pivots.append(c)
        r += 1
        if r == len(rows):
            break
    return pivots


def rank(mat):
    if not mat:
        return 0
    rows = [[Fraction(x) for x in row] for row in mat]
    return len(_rref(rows, len(mat[0])))


def kernel_basis(mat):
    """Basis of the right kernel of mat, as Fraction tuples."""
    if not mat:
        return []
    n = len(mat[0])
    rows = [[Fraction(x) for x in row] for row in mat]
    pivots = _rref(rows, n)
    free = [c for c in range(n) if c not in pivots]
    basis = []
    for fc in free:
        v = [Fraction(0)] * n
        v[fc] = Fraction(1)
        for r, pc in enumerate(pivots):
            v[pc] = -rows[r][fc]
        basis.append(tuple(v))
    return basis


def solve(mat, rhs):
    """One exact solution of mat*x = rhs, or None if inconsistent.

    mat is m x n; the solution has all free variables set to zero.
    """
    m = len(mat)
    if m == 0:
        return ()
    n = len(mat[0])
    rows = [[Fraction(x) for x in row] + [Fraction(b)] for row, b in zip(mat, rhs)]
    pivots = _rref(rows, n)
    for i in range(len(pivots), m):
        if rows[i][n] != 0:
            return None
    x = [Fraction(0)] * n
    for r, pc in enumerate(pivots):
        x[pc] = rows[r][n]
    return tuple(x)


def mat_inv(mat):
    """Exact inverse as Fractions; raises on singular input."""
    n = len(mat)
    rows = [
        [Fraction(x) for x in row] + [Fraction(1 if i == j else 0) for j in range(n)]
        for i, row in enumerate(mat)
    ]
    pivots = _rref(rows, n)
    if len(pivots) != n:
        raise ZeroDivisionError("matrix is singular")
    return tuple(tuple(row[n:]) for row in rows)


def mat_inv_int(mat):
    """Inverse of a unimodular integer matrix, as integers."""
    inv = mat_inv(mat)
    out = []
    for row in inv:
        irow = []
        for x in row:
            if x.denominator != 1:
                raise ValueError("matrix is not unimodular")
            irow.append(int(x))
        out.append(tuple(irow))
    return tuple(out)


def det(mat):
    n = len(mat)
    rows = [[Fraction(x) for x in row] for row in mat]
    sign = 1
    d = Fraction(1)
    for c in range(n):
        pivot = None
        for i in range(c, n):
            if rows[i][c] != 0:
                pivot = i
                break
        if pivot is None:
            return Fraction(0)
        if pivot != c:
            rows[c], rows[pivot] = rows[pivot], rows[c]
            sign = -sign
        d *= rows[c][c]
        inv = rows[c][c]
        for i in range(c + 1, n):
            if rows[i][c] != 0:
                f = rows[i][c] / inv
                rows[i] = [x - f * y for x, y in zip(rows[i], rows[c])]
    return d * sign


def charpoly(mat):
    """Monic characteristic polynomial det(tI - A).

    Returns integer coefficients [1, c1, ..., cn] for t^n + c1 t^(n-1) + ... + cn,
    computed by the Faddeev-LeVerrier recursion in exact rationals.
    """
    n = len(mat)
    a = [[Fraction(x) for x in row] for row in mat]
    m = [[Fraction(1 if i == j else 0) for j in range(n)] for i in range(n)]
    coeffs = [Fraction(1)]
    for k in range(1, n + 1):
        am = [
            [sum(a[i][l] * m[l][j] for l in range(n)) for j in range(n)]
            for i in range(n)
        ]
        c = -sum(am[i][i] for i in range(n)) / k
        coeffs.append(c)
        m = [
            [am[i][j] + (c if i == j else 0) for j in range(n)] for i in range(n)
        ]
    out = []
    for c in coeffs:
        if c.denominator != 1:
            raise ValueError("characteristic polynomial of non-integer matrix")
        out.append(int(c))
    return out


def poly_eval(coeffs, x):
    acc = Fraction(0)
    for c in coeffs:
        acc = acc * x + c
    return acc


def poly_divmod_linear(coeffs, root):
    """Divide a monic integer polynomial by (t - root) for a rational root.

    Returns quotient coefficients (Fractions) and the remainder.
    """
    quot = []
    acc = Fraction(0)
    for c in coeffs:
        acc = acc * root + c
        quot.append(acc)
    rem = quot.pop()
    return quot, rem


class QuadExt:
    """Element a + b*sqrt(d) of a real quadratic extension, d a positive
    non-square integer. Comparisons are exact."""

    __slots__ = ("a", "b", "d")

    def __init__(self, a, b, d):
        self.a = Fraction(a)
        self.b = Fraction(b)
        self.d = d

    def _coerce(self, other):
        if isinstance(other, QuadExt):
            if other.d != self.d:
                raise ValueError("mixed radicands")
            return other
        return QuadExt(other, 0, self.d)

    def __add__(self, other):
        o = self._coerce(other)
        return QuadExt(self.a + o.a, self.b + o.b, self.d)

    __radd__ = __add__

    def __sub__(self, other):
        o = self._coerce(other)
        return QuadExt(self.a - o.a, self.b - o.b, self.d)

    def __rsub__(self, other):
        return self._coerce(other) - self

    def __mul__(self, other):
        o = self._coerce(other)
        return QuadExt(
            self.a * o.a + self.b * o.b * self.d,
            self.a * o.b + self.b * o.a,
            self.d,
        )

    __rmul__ = __mul__

    def __truediv__(self, other):
        o = self._coerce(other)
        norm = o.a * o.a - o.b * o.b * o.d
        if norm == 0:
            raise ZeroDivisionError("division by zero in quadratic field")
        inv = QuadExt(o.a / norm, -o.b / norm, self.d)
        return self * inv

    def __rtruediv__(self, other):
        return self._coerce(other) / self

    def __neg__(self):
        return QuadExt(-self.a, -self.b, self.d)

    def sign(self):
        a, b = self.a, self.b
        if b == 0:
            return (a > 0) - (a < 0)
        if a == 0:
            return (b > 0) - (b < 0)
        if a > 0 and b > 0:
            return 1
        if a < 0 and b < 0:
            return -1
        # opposite signs: compare a^2 with b^2 d
        lhs, rhs = a * a, b * b * self.d
        if a > 0:
            return 1 if lhs > rhs else (-1 if lhs < rhs else 0)
        return 1 if lhs < rhs else (-1 if lhs > rhs else 0)

    def __eq__(self, other):
        try:
            o = self._coerce(other)
        except ValueError:
            return NotImplemented
        return self.a == o.a and self.b == o.b

    def __ne__(self, other):
        eq = self.__eq__(other)
        return NotImplemented if eq is NotImplemented else not eq

    def __lt__(self, other):
        return (self - self._coerce(other)).sign() < 0

    def __le__(self, other):
        return (self - self._coerce(other)).sign() <= 0

    def __gt__(self, other):
        return (self - self._coerce(other)).sign() > 0

    def __ge__(self, other):
        return (self - self._coerce(other)).sign() >= 0

    def __repr__(self):
        return f"({self.a} + {self.b}*sqrt({self.d}))"


def quad_kernel_vector(mat):
    """One nonzero kernel vector of a square matrix with QuadExt entries.

    Raises ValueError if the kernel is trivial.
    """
    n = len(mat)
    d = None
    for row in mat:
        for x in row:
            if isinstance(x, QuadExt):
                d = x.d
                break
        if d is not None:
            break
    if d is None:
        raise ValueError("expected QuadExt entries")
    rows = [
        [x if isinstance(x, QuadExt) else QuadExt(x, 0, d) for x in row]
        for row in mat
    ]

    def zero():
        return QuadExt(0, 0, d)

    pivots = []
    r = 0
    for c in range(n):
        pivot = None
        for i in range(r, len(rows)):
            if rows[i][c].sign() != 0:
                pivot = i
                break
        if pivot is None:
            continue
        rows[r], rows[pivot] = rows[pivot], rows[r]
        inv = rows[r][c]
        rows[r] = [x / inv for x in rows[r]]
        for i in range(len(rows)):
            if i != r:
                f = rows[i][c]
                if f.sign() != 0:
                    rows[i] = [x - f * y for x, y in zip(rows[i], rows[r])]
        pivots.append(c)
        r += 1
    free = [c for c in range(n) if c not in pivots]
    if not free:
        raise ValueError("trivial kernel")
    fc = free[0]
    v = [zero() for _ in range(n)]
    v[fc] = QuadExt(1, 0, d)
    for r_i, pc in enumerate(pivots):
        v[pc] = -rows[r_i][fc]
    return v
