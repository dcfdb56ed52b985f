"""Integer Laurent polynomials in one variable t, with exact linear algebra.

Everything in here is exact: coefficients are Python ints, division only
happens where it is known to be exact (Bareiss pivots, Lagrange denominators
that must cancel).  No floating point.
"""

from __future__ import annotations

from fractions import Fraction


class LaurentPoly:
    """A Laurent polynomial sum c_k t^k with integer coefficients.

    Stored as (offset, coeffs) where coeffs[i] is the coefficient of
    t^(offset+i) and coeffs is trimmed at both ends.  The zero polynomial
    has empty coeffs and offset 0.
    """

    __slots__ = ("offset", "coeffs")

    def __init__(self, coeffs=(), offset=0):
        coeffs = list(coeffs)
        lo = 0
        while lo < len(coeffs) and coeffs[lo] == 0:
            lo += 1
        hi = len(coeffs)
        while hi > lo and coeffs[hi - 1] == 0:
            hi -= 1
        if lo == hi:
            self.offset = 0
            self.coeffs = ()
        else:
            self.offset = offset + lo
            self.coeffs = tuple(coeffs[lo:hi])

    @classmethod
    def from_dict(cls, d):
        if not d:
            return cls()
        lo = min(d)
        hi = max(d)
        return cls([d.get(k, 0) for k in range(lo, hi + 1)], lo)

    @classmethod
    def const(cls, c):
        return cls([c], 0)

    @classmethod
    def t_power(cls, k, c=1):
        return cls([c], k)

    def is_zero(self):
        return not self.coeffs

    @property
    def min_exp(self):
        if not self.coeffs:
            raise ValueError("zero polynomial has no degree")
        return self.offset

    @property
    def max_exp(self):
        if not self.coeffs:
            raise ValueError("zero polynomial has no degree")
        return self.offset + len(self.coeffs) - 1

    @property
    def span(self):
        """max exponent minus min exponent (0 for monomials)."""
        return len(self.coeffs) - 1 if self.coeffs else 0

    def __eq__(self, other):
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        return self.offset == other.offset and self.coeffs == other.coeffs

    def __hash__(self):
        return hash((self.offset, self.coeffs))

    def __bool__(self):
        return bool(self.coeffs)

    def __neg__(self):
        return LaurentPoly([-c for c in self.coeffs], self.offset)

    def __add__(self, other):
        if isinstance(other, int):
            other = LaurentPoly.const(other)
        if not self.coeffs:
            return other
        if not other.coeffs:
            return self
        lo = min(self.offset, other.offset)
        hi = max(self.offset + len(self.coeffs), other.offset + len(other.coeffs))
        out = [0] * (hi - lo)
        for i, c in enumerate(self.coeffs):
            out[self.offset - lo + i] += c
        for i, c in enumerate(other.coeffs):
            out[other.offset - lo + i] += c
        return LaurentPoly(out, lo)

    __radd__ = __add__

    def __sub__(self, other):
        if isinstance(other, int):
            other = LaurentPoly.const(other)
        return self + (-other)

    def __rsub__(self, other):
        return LaurentPoly.const(other) - self

    def __mul__(self, other):
        if isinstance(other, int):
            if other == 0:
                return LaurentPoly()
            return LaurentPoly([c * other for c in self.coeffs], self.offset)
        if not self.coeffs or not other.coeffs:
            return LaurentPoly()
        a, b = self.coeffs, other.coeffs
        out = [0] * (len(a) + len(b) - 1)
        for i, ca in enumerate(a):
            if ca:
                for j, cb in enumerate(b):
                    out[i + j] += ca * cb
        return LaurentPoly(out, self.offset + other.offset)

    __rmul__ = __mul__

    def shifted(self, k):
        """Multiply by t^k."""
        return LaurentPoly(self.coeffs, self.offset + k)

    def exact_div(self, other):
        """Exact division; raises ArithmeticError if the remainder is nonzero."""
        if not other.coeffs:
            raise ZeroDivisionError("division by zero polynomial")
        if not self.coeffs:
            return LaurentPoly()
        num = list(self.coeffs)
        den = other.coeffs
        if len(num) < len(den):
            raise ArithmeticError("inexact Laurent division")
        qlen = len(num) - len(den) + 1
        q = [0] * qlen
        lead = den[-1]
        for i in range(qlen - 1, -1, -1):
            c = num[i + len(den) - 1]
            if c % lead != 0:
                raise ArithmeticError("inexact Laurent division")
            qi = c // lead
            q[i] = qi
            if qi:
                for j, d in enumerate(den):
                    num[i + j] -= qi * d
        if any(num[: len(den) - 1]):
            raise ArithmeticError("inexact Laurent division")
        return LaurentPoly(q, self.offset - other.offset)

    def evaluate(self, x):
        """Evaluate at an integer or Fraction x (x != 0 if offset < 0)."""
        if not self.coeffs:
            return 0
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * x + c
        if self.offset:
            acc = acc * Fraction(x) ** self.offset if self.offset < 0 else acc * x ** self.offset
        return acc

    def canonical(self):
        """Normalize up to units +-t^k: minimal exponent 0, positive leading coefficient."""
        if not self.coeffs:
            return LaurentPoly()
        c = LaurentPoly(self.coeffs, 0)
        if c.coeffs[-1] < 0:
            c = -c
        return c

    def is_palindromic(self):
        """c_k == c_(span-k) for the canonical representative."""
        c = self.canonical().coeffs
        return c == tuple(reversed(c))

    def format_text(self):
        """Canonical text form: coefficients from degree 0 upward, space-separated."""
        c = self.canonical()
        if not c.coeffs:
            return "0"
        return " ".join(str(x) for x in c.coeffs)

    @classmethod
    def parse_text(cls, s):
        parts = s.split()
        if not parts:
            raise ValueError("empty Laurent polynomial text")
        return cls([int(p) for p in parts], 0)

    def __repr__(self):
        if not self.coeffs:
            return "LaurentPoly(0)"
        terms = []
        for i, c in enumerate(self.coeffs):
            if c == 0:
                continue
            k = self.offset + i
            if k == 0:
                terms.append(f"{c}")
            elif k == 1:
                terms.append(f"{c}*t")
            else:
                terms.append(f"{c}*t^{k}")
        return "LaurentPoly(" + " + ".join(terms) + ")"


ONE = LaurentPoly.const(1)
T = LaurentPoly.t_power(1)


# ---------------------------------------------------------------------------
# exact determinants


def det_int(rows):
    """Determinant of a square integer matrix by fraction-free Bareiss elimination."""
    n = len(rows)
    if n == 0:
        return 1
    m = [list(r) for r in rows]
    sign = 1
    prev = 1
    for k in range(n - 1):
        if m[k][k] == 0:
            for i in range(k + 1, n):
                if m[i][k] != 0:
                    m[k], m[i] = m[i], m[k]
                    sign = -sign
                    break
            else:
                return 0
        pkk = m[k][k]
        for i in range(k + 1, n):
            mik = m[i][k]
            row = m[i]
            top = m[k]
            for j in range(k + 1, n):
                row[j] = (pkk * row[j] - mik * top[j]) // prev
            row[k] = 0
        prev = pkk
    return sign * m[n - 1][n - 1]


def det_laurent_bareiss(rows):
    """Determinant of a square LaurentPoly matrix by fraction-free Bareiss.

    All intermediate divisions are exact over Z[t, 1/t].  Cubic in the size
    with polynomial entries, so this is the reference implementation; prefer
    det_laurent for larger matrices.
    """
    n = len(rows)
    if n == 0:
        return ONE
    m = [[e if isinstance(e, LaurentPoly) else LaurentPoly.const(e) for e in r] for r in rows]
    sign = 1
    prev = ONE
    for k in range(n - 1):
        piv = k
        while piv < n and m[piv][k].is_zero():
            piv += 1
        if piv == n:
            return LaurentPoly()
        if piv != k:
            m[k], m[piv] = m[piv], m[k]
            sign = -sign
        pkk = m[k][k]
        for i in range(k + 1, n):
            mik = m[i][k]
            for j in range(k + 1, n):
                m[i][j] = (pkk * m[i][j] - mik * m[k][j]).exact_div(prev)
            m[i][k] = LaurentPoly()
        prev = pkk
    d = m[n - 1][n - 1]
    return -d if sign < 0 else d


def det_laurent(rows):
    """Determinant of a square LaurentPoly matrix, exact.

    Factors t^k out of each row, evaluates the remaining integer-polynomial
    matrix at enough integer points, runs integer Bareiss per point and
    Lagrange-interpolates back.  Equivalent to det_laurent_bareiss (tested),
    much faster for the matrix sizes the Alexander computation produces.
    """
    n = len(rows)
    if n == 0:
        return ONE
    shift = 0
    polys = []
    degbound = 0
    for r in rows:
        r = [e if isinstance(e, LaurentPoly) else LaurentPoly.const(e) for e in r]
        if all(e.is_zero() for e in r):
            return LaurentPoly()
        lo = min(e.min_exp for e in r if not e.is_zero())
        shift += lo
        r = [e.shifted(-lo) for e in r]
        degbound += max(e.max_exp for e in r if not e.is_zero())
        polys.append(r)
    npts = degbound + 1
    xs = []
    x = 0
    while len(xs) < npts:
        xs.append(x)
        x = -x if x > 0 else -x + 1
    vals = []
    for x in xs:
        m = [[int(e.evaluate(x)) for e in r] for r in polys]
        vals.append(det_int(m))
    # Lagrange interpolation over Q; the result is integral by construction.
    coeffs = [Fraction(0)] * npts
    for xi, yi in zip(xs, vals):
        if yi == 0:
            continue
        # numerator polynomial prod_{j != i} (t - xj), denominator prod (xi - xj)
        num = [Fraction(1)]
        den = 1
        for xj in xs:
            if xj == xi:
                continue
            den *= xi - xj
            new = [Fraction(0)] * (len(num) + 1)
            for k, c in enumerate(num):
                new[k] -= c * xj
                new[k + 1] += c
            num = new
        scale = Fraction(yi, den)
        for k, c in enumerate(num):
            coeffs[k] += c * scale
    out = []
    for c in coeffs:
        if c.denominator != 1:
            raise ArithmeticError("interpolated determinant is not integral")
        out.append(int(c))
    return LaurentPoly(out, shift)


def symmetric_signature(rows):
    """Signature of a symmetric integer matrix, exact.

    Congruence-diagonalizes over Q and counts signs of the diagonal.
    Rank deficiency contributes zero.
    """
    n = len(rows)
    m = [[Fraction(e) for e in r] for r in rows]
    sig = 0
    for k in range(n):
        if m[k][k] == 0:
            # look for a later nonzero diagonal entry to swap in
            swapped = False
            for i in range(k + 1, n):
                if m[i][i] != 0:
                    m[k], m[i] = m[i], m[k]
                    for r in m:
                        r[k], r[i] = r[i], r[k]
                    swapped = True
                    break
            if not swapped:
                # all remaining diagonal entries vanish; use a hyperbolic pair
                found = None
                for i in range(k, n):
                    for j in range(i + 1, n):
                        if m[i][j] != 0:
                            found = (i, j)
                            break
                    if found:
                        break
                if not found:
                    break  # remaining block is zero
                i, j = found
                # basis change e_i <- e_i + e_j makes the (i,i) entry 2*m[i][j]
                for r in m:
                    r[i] += r[j]
                row_j = m[j]
                for col in range(n):
                    m[i][col] += row_j[col]
                if i != k:
                    m[k], m[i] = m[i], m[k]
                    for r in m:
                        r[k], r[i] = r[i], r[k]
        pivot = m[k][k]
        if pivot == 0:
            continue
        sig += 1 if pivot > 0 else -1
        for i in range(k + 1, n):
            f = m[i][k] / pivot
            if f:
                for j in range(k, n):
                    m[i][j] -= f * m[k][j]
                for j in range(k, n):
                    m[j][i] -= f * m[j][k]
    return sig
