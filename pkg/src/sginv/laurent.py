"""Exact integer Laurent polynomials in one variable.

All polynomial invariants in this package take values here: the Yamada
polynomial lives in Z[A, A^-1] and the Alexander polynomial in Z[t, t^-1].
Coefficients are arbitrary-precision Python ints; nothing is ever floated.
"""

from __future__ import annotations

from itertools import combinations
from math import gcd as int_gcd


class VariableMismatch(ValueError):
    """Raised when combining polynomials tagged with different variables."""


class LaurentPoly:
    """A Laurent polynomial sum c_k * x^k with integer coefficients.

    Stored as a dict exponent -> nonzero coefficient plus a variable tag
    ('t', 'A', ...).  Instances are immutable in practice: no method mutates
    self, and the coefficient dict is never handed out.
    """

    __slots__ = ("var", "_c")

    def __init__(self, coeffs=None, var="t"):
        self.var = var
        self._c = {int(e): int(c) for e, c in (coeffs or {}).items() if c != 0}

    # -- constructors ------------------------------------------------------

    @classmethod
    def zero(cls, var="t"):
        return cls({}, var)

    @classmethod
    def constant(cls, c, var="t"):
        return cls({0: c}, var)

    @classmethod
    def monomial(cls, coeff, exp, var="t"):
        return cls({exp: coeff}, var)

    @classmethod
    def from_pairs(cls, pairs, var="t"):
        d = {}
        for e, c in pairs:
            d[e] = d.get(e, 0) + c
        return cls(d, var)

    # -- basic queries -----------------------------------------------------

    def is_zero(self):
        return not self._c

    def coeff(self, exp):
        return self._c.get(exp, 0)

    @property
    def min_degree(self):
        if not self._c:
            raise ValueError("zero polynomial has no degree")
        return min(self._c)

    @property
    def max_degree(self):
        if not self._c:
            raise ValueError("zero polynomial has no degree")
        return max(self._c)

    def terms(self):
        """Pairs (exponent, coefficient) in ascending exponent order."""
        return sorted(self._c.items())

    # -- ring operations ---------------------------------------------------

    def _coerce(self, other):
        if isinstance(other, int):
            return LaurentPoly.constant(other, self.var)
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        if other.var != self.var:
            raise VariableMismatch(f"cannot combine {self.var!r} with {other.var!r}")
        return other

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        d = dict(self._c)
        for e, c in other._c.items():
            d[e] = d.get(e, 0) + c
        return LaurentPoly(d, self.var)

    __radd__ = __add__

    def __neg__(self):
        return LaurentPoly({e: -c for e, c in self._c.items()}, self.var)

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        d = {}
        for e1, c1 in self._c.items():
            for e2, c2 in other._c.items():
                e = e1 + e2
                d[e] = d.get(e, 0) + c1 * c2
        return LaurentPoly(d, self.var)

    __rmul__ = __mul__

    def __pow__(self, n):
        if n < 0:
            # only units +-x^k are invertible
            if len(self._c) == 1:
                (e, c), = self._c.items()
                if c in (1, -1):
                    return LaurentPoly({e * n: c if n % 2 else 1}, self.var)
            raise ValueError("negative powers only defined for units")
        out = LaurentPoly.constant(1, self.var)
        base = self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    def shift(self, k, coeff=1):
        """Multiply by coeff * x^k."""
        return LaurentPoly({e + k: c * coeff for e, c in self._c.items()}, self.var)

    def __eq__(self, other):
        if isinstance(other, int):
            other = LaurentPoly.constant(other, self.var)
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        return self.var == other.var and self._c == other._c

    def __hash__(self):
        return hash((self.var, frozenset(self._c.items())))

    # -- evaluation and normalization --------------------------------------

    def subs_int(self, value):
        """Evaluate at an integer point (value must be a unit: +-1) exactly.

        For value = -1 negative exponents are fine since (-1)^-k = (-1)^k.
        Other nonzero integers are only allowed when min_degree >= 0.
        """
        total = 0
        for e, c in self._c.items():
            if value in (1, -1):
                total += c * (value ** (e % 2))
            else:
                if e < 0:
                    raise ValueError("negative exponent at non-unit point")
                total += c * value ** e
        return total

    def normalize_units(self):
        """Multiply by the unique unit +-x^k making the lowest term a positive
        constant (the canonical representative up to units)."""
        if not self._c:
            return self
        m = self.min_degree
        sign = 1 if self._c[m] > 0 else -1
        return self.shift(-m, sign)

    # -- rendering ---------------------------------------------------------

    def __str__(self):
        if not self._c:
            return "0"
        parts = []
        for e, c in self.terms():
            mag = abs(c)
            if e == 0:
                body = str(mag)
            else:
                head = "" if mag == 1 else str(mag)
                if e == 1:
                    body = f"{head}{self.var}"
                else:
                    body = f"{head}{self.var}^{e}"
            if not parts:
                parts.append(("-" if c < 0 else "") + body)
            else:
                parts.append(("- " if c < 0 else "+ ") + body)
        return " ".join(parts)

    def __repr__(self):
        return f"LaurentPoly({self}, var={self.var!r})"

    def to_pairs(self):
        """JSON-friendly form: [[exponent, coefficient], ...] ascending."""
        return [[e, c] for e, c in self.terms()]


# ---------------------------------------------------------------------------
# Dense integer polynomials (internal helpers for gcd / determinants).
# Representation: list of coefficients, index = exponent, trimmed, [] = 0.
# ---------------------------------------------------------------------------

def _trim(p):
    while p and p[-1] == 0:
        p.pop()
    return p

def _poly_mul(p, q):
    if not p or not q:
        return []
    out = [0] * (len(p) + len(q) - 1)
    for i, a in enumerate(p):
        if a:
            for j, b in enumerate(q):
                out[i + j] += a * b
    return _trim(out)

def _poly_sub(p, q):
    out = [0] * max(len(p), len(q))
    for i, a in enumerate(p):
        out[i] += a
    for i, b in enumerate(q):
        out[i] -= b
    return _trim(out)

def _poly_scale(p, c):
    if c == 0:
        return []
    return [a * c for a in p]

def _poly_div_exact(p, d):
    """Exact division in Z[x]; raises if the division is not exact."""
    if not d:
        raise ZeroDivisionError("polynomial division by zero")
    r = list(p)
    q = [0] * max(len(p) - len(d) + 1, 0)
    dl = d[-1]
    while len(r) >= len(d):
        lead, rem = divmod(r[-1], dl)
        if rem:
            raise ArithmeticError("inexact polynomial division")
        k = len(r) - len(d)
        q[k] = lead
        for i, c in enumerate(d):
            r[k + i] -= lead * c
        _trim(r)
        if not r:
            break
    if r:
        raise ArithmeticError("inexact polynomial division (nonzero remainder)")
    return _trim(q)

def _poly_content(p):
    g = 0
    for c in p:
        g = int_gcd(g, abs(c))
        if g == 1:
            break
    return g

def _poly_primitive(p):
    if not p:
        return [], 0
    cont = _poly_content(p)
    prim = [c // cont for c in p]
    if prim[-1] < 0:
        prim = [-c for c in prim]
        cont = -cont
    return prim, cont

def _poly_pseudo_rem(p, d):
    """Pseudo-remainder: lc(d)^(deg p - deg d + 1) * p mod d."""
    r = list(p)
    dl = d[-1]
    while len(r) >= len(d):
        k = len(r) - len(d)
        lead = r[-1]
        r = _poly_scale(r, dl)
        for i, c in enumerate(d):
            r[k + i] -= lead * c
        _trim(r)
    return r

def _poly_gcd(p, q):
    """GCD in Z[x] via the primitive pseudo-remainder sequence.

    Returns a primitive polynomial with positive leading coefficient times
    the gcd of the contents.
    """
    p = _trim(list(p))
    q = _trim(list(q))
    if not p:
        return q
    if not q:
        return p
    pp, cp = _poly_primitive(p)
    qp, cq = _poly_primitive(q)
    cont = int_gcd(abs(cp), abs(cq))
    if len(pp) < len(qp):
        pp, qp = qp, pp
    while qp:
        r = _poly_pseudo_rem(pp, qp)
        pp, qp = qp, _poly_primitive(r)[0]
    return _poly_scale(pp, cont)


def _to_dense(p):
    """Shift a LaurentPoly to an ordinary polynomial; returns (dense, shift)
    with p = x^shift * dense.  Zero maps to ([], 0)."""
    if p.is_zero():
        return [], 0
    m = p.min_degree
    out = [0] * (p.max_degree - m + 1)
    for e, c in p._c.items():
        out[e - m] = c
    return out, m

def _from_dense(dense, shift, var):
    return LaurentPoly({i + shift: c for i, c in enumerate(dense) if c}, var)


# ---------------------------------------------------------------------------
# Public gcd and determinant
# ---------------------------------------------------------------------------

def laurent_gcd(p, q):
    """GCD of two Laurent polynomials, canonicalized by normalize_units.

    Units are invisible to divisibility in the Laurent ring, so the result
    always has a positive constant lowest term.
    """
    if p.var != q.var:
        raise VariableMismatch(f"{p.var!r} vs {q.var!r}")
    if p.is_zero():
        return q.normalize_units()
    if q.is_zero():
        return p.normalize_units()
    dp, _ = _to_dense(p)
    dq, _ = _to_dense(q)
    g = _poly_gcd(dp, dq)
    return _from_dense(g, 0, p.var).normalize_units()


def laurent_gcd_many(polys):
    """Fold laurent_gcd over a sequence, skipping zeros, with early exit at 1.

    All-zero (or empty) input yields the zero polynomial.
    """
    acc = None
    var = None
    one = None
    for p in polys:
        var = var or p.var
        if p.is_zero():
            continue
        acc = p.normalize_units() if acc is None else laurent_gcd(acc, p)
        if one is None:
            one = LaurentPoly.constant(1, acc.var)
        if acc == one:
            return acc
    if acc is None:
        return LaurentPoly.zero(var or "t")
    return acc


def divides(p, q):
    """True if p divides q exactly in the Laurent ring (p nonzero)."""
    if p.is_zero():
        return q.is_zero()
    if q.is_zero():
        return True
    dp, _ = _to_dense(p)
    dq, _ = _to_dense(q)
    try:
        _poly_div_exact(dq, dp)
        return True
    except ArithmeticError:
        return False


def bareiss_det(matrix):
    """Exact determinant of a square matrix of LaurentPoly entries.

    Each row is first cleared to an ordinary polynomial row by pulling out
    its most negative exponent; fraction-free (Bareiss) elimination then
    runs entirely in Z[x], and the pulled-out unit is restored at the end.
    """
    n = len(matrix)
    for row in matrix:
        if len(row) != n:
            raise ValueError("matrix is not square")
    if n == 0:
        var = "t"
        return LaurentPoly.constant(1, var)
    var = matrix[0][0].var

    shift_total = 0
    m = []
    for row in matrix:
        mins = [e.min_degree for e in row if not e.is_zero()]
        if not mins:
            return LaurentPoly.zero(var)
        k = min(min(mins), 0)
        shift_total += k
        m.append([_dense_shifted(e, -k) for e in row])

    sign = 1
    prev = [1]
    for r in range(n - 1):
        if not m[r][r]:
            pivot_row = next((i for i in range(r + 1, n) if m[i][r]), None)
            if pivot_row is None:
                return LaurentPoly.zero(var)
            m[r], m[pivot_row] = m[pivot_row], m[r]
            sign = -sign
        for i in range(r + 1, n):
            for j in range(r + 1, n):
                num = _poly_sub(_poly_mul(m[r][r], m[i][j]),
                                _poly_mul(m[i][r], m[r][j]))
                m[i][j] = _poly_div_exact(num, prev) if prev != [1] else num
            m[i][r] = []
        prev = m[r][r]
    det = m[n - 1][n - 1]
    if sign < 0:
        det = _poly_scale(det, -1)
    return _from_dense(det, shift_total, var)


def _dense_shifted(p, k):
    """Dense coefficients of x^k * p, which must have min_degree + k >= 0."""
    if p.is_zero():
        return []
    out = [0] * (p.max_degree + k + 1)
    for e, c in p._c.items():
        out[e + k] = c
    return _trim(out)


def cofactor_det(matrix):
    """Determinant by cofactor expansion; the independent cross-check for
    bareiss_det in the test suite.  Exponential, keep inputs small."""
    n = len(matrix)
    var = matrix[0][0].var if n else "t"
    if n == 0:
        return LaurentPoly.constant(1, var)
    if n == 1:
        return matrix[0][0]
    total = LaurentPoly.zero(var)
    rest = matrix[1:]
    for j in range(n):
        if matrix[0][j].is_zero():
            continue
        minor = [[row[k] for k in range(n) if k != j] for row in rest]
        term = matrix[0][j] * cofactor_det(minor)
        total = total + (term if j % 2 == 0 else -term)
    return total


def minors_gcd(matrix, k):
    """GCD over all k x k minors of a rectangular LaurentPoly matrix.

    k = 0 yields 1; if every minor vanishes the result is 0.  Enumeration is
    row subsets outer, column subsets inner, with early exit once the running
    gcd hits 1.
    """
    rows = len(matrix)
    cols = len(matrix[0]) if rows else 0
    if k < 0 or k > min(rows, cols):
        raise ValueError(f"minor size {k} out of range for {rows}x{cols}")
    var = matrix[0][0].var if rows and cols else "t"
    if k == 0:
        return LaurentPoly.constant(1, var)
    one = LaurentPoly.constant(1, var)
    acc = None
    for rset in combinations(range(rows), k):
        for cset in combinations(range(cols), k):
            sub = [[matrix[i][j] for j in cset] for i in rset]
            d = bareiss_det(sub)
            if d.is_zero():
                continue
            acc = d.normalize_units() if acc is None else laurent_gcd(acc, d)
            if acc == one:
                return acc
    return acc if acc is not None else LaurentPoly.zero(var)
