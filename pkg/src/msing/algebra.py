"""Exact polynomial arithmetic over Q and the matrix forms built on it.

Coefficients are fractions.Fraction throughout; floating point enters only in
the numeric root finder.  Polynomials carry a declared variable order and all
canonical term ordering is graded lexicographic in that order.
"""

from __future__ import annotations

import cmath
from fractions import Fraction

Scalar = Fraction

_TOKEN_CHARS = set("+-*/^()")


def _as_scalar(c):
    if isinstance(c, Fraction):
        return c
    if isinstance(c, int):
        return Fraction(c)
    raise TypeError("coefficient must be int or Fraction, got %r" % type(c).__name__)


def _gl_key(expo):
    # graded lex: total degree first, then lex in the declared order
    return (sum(expo), expo)


class Poly:
    """Multivariate polynomial with exact rational coefficients.

    terms maps exponent tuples (one slot per declared variable) to nonzero
    Fractions.  Instances are treated as immutable.
    """

    __slots__ = ("vars", "terms")

    def __init__(self, vars, terms):
        self.vars = tuple(vars)
        nv = len(self.vars)
        if len(set(self.vars)) != nv:
            raise ValueError("duplicate variable names: %r" % (self.vars,))
        clean = {}
        for expo, c in terms.items():
            c = _as_scalar(c)
            if c == 0:
                continue
            expo = tuple(int(e) for e in expo)
            if len(expo) != nv or any(e < 0 for e in expo):
                raise ValueError("bad exponent tuple %r for vars %r" % (expo, self.vars))
            clean[expo] = c
        self.terms = clean

    # ---- constructors -------------------------------------------------

    @classmethod
    def zero(cls, vars=()):
        return cls(vars, {})

    @classmethod
    def const(cls, c, vars=()):
        return cls(vars, {(0,) * len(tuple(vars)): _as_scalar(c)})

    @classmethod
    def var(cls, name, vars=None):
        if vars is None:
            vars = (name,)
        vars = tuple(vars)
        expo = tuple(1 if v == name else 0 for v in vars)
        if sum(expo) != 1:
            raise ValueError("variable %r not in ambient %r" % (name, vars))
        return cls(vars, {expo: Fraction(1)})

    # ---- ambient alignment --------------------------------------------

    def extended(self, vars):
        """The same polynomial over a larger ambient variable tuple."""
        vars = tuple(vars)
        if vars == self.vars:
            return self
        pos = []
        for v in self.vars:
            if v not in vars:
                raise ValueError("ambient %r drops variable %r" % (vars, v))
            pos.append(vars.index(v))
        nv = len(vars)
        terms = {}
        for expo, c in self.terms.items():
            new = [0] * nv
            for p, e in zip(pos, expo):
                new[p] = e
            terms[tuple(new)] = c
        return Poly(vars, terms)

    def projected(self, vars):
        """The same polynomial over any ambient containing its used variables;
        unlike extended, unused variables may be dropped."""
        vars = tuple(vars)
        if vars == self.vars:
            return self
        missing = self.used_vars() - set(vars)
        if missing:
            raise ValueError("ambient %r drops used variables %s" % (vars, sorted(missing)))
        pos = [vars.index(v) if v in vars else None for v in self.vars]
        nv = len(vars)
        terms = {}
        for expo, c in self.terms.items():
            new = [0] * nv
            for p, e in zip(pos, expo):
                if p is not None:
                    new[p] = e
            terms[tuple(new)] = terms.get(tuple(new), Fraction(0)) + c
        return Poly(vars, {e: c for e, c in terms.items() if c})

    def _aligned(self, other):
        if isinstance(other, (int, Fraction)):
            other = Poly.const(other, self.vars)
        if not isinstance(other, Poly):
            return None, None, None
        if self.vars == other.vars:
            return self.vars, self, other
        vars = list(self.vars)
        for v in other.vars:
            if v not in vars:
                vars.append(v)
        vars = tuple(vars)
        return vars, self.extended(vars), other.extended(vars)

    # ---- basic queries -------------------------------------------------

    def is_zero(self):
        return not self.terms

    @property
    def constant_term(self):
        return self.terms.get((0,) * len(self.vars), Fraction(0))

    def degree(self):
        """Total degree, -1 for the zero polynomial."""
        if not self.terms:
            return -1
        return max(sum(e) for e in self.terms)

    def used_vars(self):
        used = set()
        for expo in self.terms:
            for v, e in zip(self.vars, expo):
                if e:
                    used.add(v)
        return used

    def canonical_terms(self):
        """Ambient-independent form: {((name, exp), ...) sorted: coeff}."""
        out = {}
        for expo, c in self.terms.items():
            key = tuple(sorted((v, e) for v, e in zip(self.vars, expo) if e))
            out[key] = c
        return out

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = Poly.const(other, self.vars)
        if not isinstance(other, Poly):
            return NotImplemented
        return self.canonical_terms() == other.canonical_terms()

    __hash__ = None

    # ---- arithmetic ------------------------------------------------------

    def __add__(self, other):
        vars, a, b = self._aligned(other)
        if vars is None:
            return NotImplemented
        terms = dict(a.terms)
        for expo, c in b.terms.items():
            s = terms.get(expo, Fraction(0)) + c
            if s:
                terms[expo] = s
            else:
                terms.pop(expo, None)
        return Poly(vars, terms)

    __radd__ = __add__

    def __neg__(self):
        return Poly(self.vars, {e: -c for e, c in self.terms.items()})

    def __sub__(self, other):
        vars, a, b = self._aligned(other)
        if vars is None:
            return NotImplemented
        return a + (-b)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            c0 = _as_scalar(other)
            if c0 == 0:
                return Poly.zero(self.vars)
            return Poly(self.vars, {e: c * c0 for e, c in self.terms.items()})
        vars, a, b = self._aligned(other)
        if vars is None:
            return NotImplemented
        terms = {}
        for ea, ca in a.terms.items():
            for eb, cb in b.terms.items():
                key = tuple(x + y for x, y in zip(ea, eb))
                s = terms.get(key, Fraction(0)) + ca * cb
                if s:
                    terms[key] = s
                else:
                    terms.pop(key, None)
        return Poly(vars, terms)

    __rmul__ = __mul__

    def __pow__(self, k):
        k = int(k)
        if k < 0:
            raise ValueError("negative power")
        out = Poly.const(1, self.vars)
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    # ---- calculus and substitution --------------------------------------

    def diff(self, name):
        if name not in self.vars:
            return Poly.zero(self.vars)
        i = self.vars.index(name)
        terms = {}
        for expo, c in self.terms.items():
            e = expo[i]
            if e == 0:
                continue
            new = list(expo)
            new[i] = e - 1
            terms[tuple(new)] = c * e
        return Poly(self.vars, terms)

    def substitute(self, mapping):
        """Simultaneous substitution; unbound variables pass through."""
        imgs = {}
        for name, val in mapping.items():
            if isinstance(val, (int, Fraction)):
                val = Poly.const(val)
            imgs[name] = val
        keep = [v for v in self.vars if v not in imgs]
        ambient = list(keep)
        for name in self.vars:
            if name in imgs:
                for v in imgs[name].vars:
                    if v not in ambient:
                        ambient.append(v)
        ambient = tuple(ambient)
        base = {v: Poly.var(v, ambient) for v in keep}
        out = Poly.zero(ambient)
        cache = {}
        for expo, c in self.terms.items():
            term = Poly.const(c, ambient)
            for v, e in zip(self.vars, expo):
                if e == 0:
                    continue
                key = (v, e)
                if key not in cache:
                    img = imgs[v].extended(ambient) if v in imgs else base[v]
                    cache[key] = img ** e
                term = term * cache[key]
            out = out + term
        return out

    def evaluate(self, point):
        """Numeric evaluation; every used variable must be bound."""
        val = 0j
        for expo, c in self.terms.items():
            t = complex(c)
            for v, e in zip(self.vars, expo):
                if e == 0:
                    continue
                if v not in point:
                    raise ValueError("unbound variable %r" % v)
                t *= complex(point[v]) ** e
            val += t
        return val

    # ---- grading ----------------------------------------------------------

    def weighted_degrees(self, weights):
        """Set of weighted degrees over the terms; weights maps name -> int."""
        out = set()
        for expo in self.terms:
            out.add(sum(weights[v] * e for v, e in zip(self.vars, expo) if e))
        return out

    def weighted_degree(self, weights):
        degs = self.weighted_degrees(weights)
        if len(degs) != 1:
            raise ValueError("polynomial is not weighted homogeneous: degrees %s" % sorted(degs))
        return degs.pop()

    # ---- leading terms and exact division ----------------------------------

    def leading(self):
        expo = max(self.terms, key=_gl_key)
        return expo, self.terms[expo]

    def exact_div(self, other):
        """Quotient self/other when the division is exact; raises otherwise."""
        if isinstance(other, (int, Fraction)):
            c = _as_scalar(other)
            if c == 0:
                raise ZeroDivisionError("division by zero polynomial")
            return self * (Fraction(1) / c)
        vars, a, b = self._aligned(other)
        if b.is_zero():
            raise ZeroDivisionError("division by zero polynomial")
        if a.is_zero():
            return Poly.zero(vars)
        lt_b, lc_b = b.leading()
        q = {}
        r = dict(a.terms)
        while r:
            lt_r = max(r, key=_gl_key)
            diff = tuple(x - y for x, y in zip(lt_r, lt_b))
            if any(d < 0 for d in diff):
                raise ValueError("inexact polynomial division")
            c = r[lt_r] / lc_b
            q[diff] = q.get(diff, Fraction(0)) + c
            for eb, cb in b.terms.items():
                key = tuple(x + y for x, y in zip(diff, eb))
                s = r.get(key, Fraction(0)) - c * cb
                if s:
                    r[key] = s
                else:
                    r.pop(key, None)
        return Poly(vars, q)

    # ---- univariate views ---------------------------------------------------

    def coeffs_in(self, name):
        """Coefficient list [c_0, ..., c_d] in name; c_i are Polys without name."""
        if name not in self.vars:
            return [self]
        i = self.vars.index(name)
        rest = tuple(v for v in self.vars if v != name)
        buckets = {}
        for expo, c in self.terms.items():
            e = expo[i]
            sub = tuple(x for j, x in enumerate(expo) if j != i)
            buckets.setdefault(e, {})[sub] = c
        d = max(buckets) if buckets else 0
        return [Poly(rest, buckets.get(e, {})) for e in range(d + 1)]

    # ---- rendering -----------------------------------------------------------

    def __str__(self):
        if not self.terms:
            return "0"
        parts = []
        for expo in sorted(self.terms, key=_gl_key, reverse=True):
            c = self.terms[expo]
            mono = "*".join(
                v if e == 1 else "%s^%d" % (v, e)
                for v, e in zip(self.vars, expo) if e
            )
            if not mono:
                body = str(abs(c))
            elif abs(c) == 1:
                body = mono
            else:
                body = "%s*%s" % (abs(c), mono)
            sign = "-" if c < 0 else "+"
            parts.append((sign, body))
        first_sign, first_body = parts[0]
        out = ("-" if first_sign == "-" else "") + first_body
        for sign, body in parts[1:]:
            out += " %s %s" % (sign, body)
        return out

    def __repr__(self):
        return "Poly(%s)" % self


def variables(names):
    """variables("x y z") -> single-variable Polys over a shared ambient."""
    names = tuple(names.split()) if isinstance(names, str) else tuple(names)
    return tuple(Poly.var(n, names) for n in names)


# ---------------------------------------------------------------------------
# parsing


def _tokenize(text):
    toks = []
    i, n = 0, len(text)
    while i < n:
        ch = text[i]
        if ch.isspace():
            i += 1
            continue
        if ch in _TOKEN_CHARS:
            toks.append((ch, ch))
            i += 1
            continue
        if ch.isdigit():
            j = i
            while j < n and text[j].isdigit():
                j += 1
            toks.append(("int", text[i:j]))
            i = j
            continue
        if ch.isalpha():
            j = i
            while j < n and (text[j].isalnum() or text[j] == "_"):
                j += 1
            toks.append(("ident", text[i:j]))
            i = j
            continue
        raise ValueError("unexpected character %r in polynomial expression" % ch)
    toks.append(("end", ""))
    return toks


class _PolyParser:
    """Recursive descent for: integers, rationals p/q, identifiers, + - * ^, parens.

    No implicit multiplication; '^' takes a nonnegative integer literal.
    """

    def __init__(self, text, vars=None):
        self.toks = _tokenize(text)
        self.pos = 0
        self.fixed = vars is not None
        self.vars = list(vars) if vars is not None else []

    def peek(self):
        return self.toks[self.pos][0]

    def take(self, kind=None):
        k, v = self.toks[self.pos]
        if kind is not None and k != kind:
            raise ValueError("expected %s, found %r" % (kind, v or "end of input"))
        self.pos += 1
        return v

    def parse(self):
        p = self.expr()
        if self.peek() != "end":
            raise ValueError("trailing input from %r" % self.toks[self.pos][1])
        return p

    def expr(self):
        sign = 1
        while self.peek() in ("+", "-"):
            if self.take() == "-":
                sign = -sign
        p = self.term() * sign
        while self.peek() in ("+", "-"):
            op = self.take()
            q = self.term()
            p = p + q if op == "+" else p - q
        return p

    def term(self):
        p = self.factor()
        while self.peek() == "*":
            self.take()
            p = p * self.factor()
        return p

    def factor(self):
        p = self.atom()
        if self.peek() == "^":
            self.take()
            e = int(self.take("int"))
            p = p ** e
        return p

    def atom(self):
        k = self.peek()
        if k == "int":
            num = int(self.take())
            if self.peek() == "/":
                self.take()
                den = int(self.take("int"))
                if den == 0:
                    raise ValueError("zero denominator")
                return Poly.const(Fraction(num, den), tuple(self.vars))
            return Poly.const(num, tuple(self.vars))
        if k == "ident":
            name = self.take()
            if name not in self.vars:
                if self.fixed:
                    raise ValueError("undeclared variable %r" % name)
                self.vars.append(name)
            return Poly.var(name, (name,))
        if k == "(":
            self.take()
            p = self.expr()
            self.take(")")
            return p
        if k == "-":
            self.take()
            return -self.atom()
        raise ValueError("unexpected token %r" % (self.toks[self.pos][1] or "end of input"))


def parse_poly(text, vars=None):
    """Parse a polynomial expression.

    With vars=None the ambient order is the order of first appearance; with an
    explicit tuple, any other identifier is an error.

    >>> str(parse_poly("x^2*y - 2*z + 5/3"))
    'x^2*y - 2*z + 5/3'
    """
    parser = _PolyParser(text, vars)
    p = parser.parse()
    return p.extended(tuple(parser.vars)) if parser.vars else p


# ---------------------------------------------------------------------------
# matrices of polynomials

KINDS = ("sym", "sq", "sk")


class PolyMatrix:
    """Square matrix of Polys; kind is one of sym (symmetric), sq, sk (skew)."""

    __slots__ = ("kind", "n", "rows")

    def __init__(self, kind, rows):
        if kind not in KINDS:
            raise ValueError("kind must be one of %s" % (KINDS,))
        rows = tuple(tuple(self._coerce(e) for e in row) for row in rows)
        n = len(rows)
        if any(len(row) != n for row in rows):
            raise ValueError("matrix is not square")
        if kind == "sym":
            for i in range(n):
                for j in range(i + 1, n):
                    if rows[i][j] != rows[j][i]:
                        raise ValueError("sym matrix with entries (%d,%d) != (%d,%d)" % (i, j, j, i))
        if kind == "sk":
            if n % 2:
                raise ValueError("sk matrices must have even size")
            for i in range(n):
                if not rows[i][i].is_zero():
                    raise ValueError("sk matrix with nonzero diagonal entry (%d,%d)" % (i, i))
                for j in range(i + 1, n):
                    if rows[i][j] != -rows[j][i]:
                        raise ValueError("sk matrix with entries (%d,%d) != -(%d,%d)" % (i, j, j, i))
        self.kind = kind
        self.n = n
        self.rows = rows

    @staticmethod
    def _coerce(e):
        if isinstance(e, Poly):
            return e
        if isinstance(e, (int, Fraction)):
            return Poly.const(e)
        raise TypeError("matrix entries must be Poly or rational constants")

    def __getitem__(self, ij):
        i, j = ij
        return self.rows[i][j]

    def entries(self):
        return self.rows

    def map(self, fn):
        return PolyMatrix(self.kind, [[fn(e) for e in row] for row in self.rows])

    def transpose(self):
        return PolyMatrix(self.kind if self.kind != "sk" else "sk",
                          [[self.rows[j][i] for j in range(self.n)] for i in range(self.n)])

    def __add__(self, other):
        if not isinstance(other, PolyMatrix) or other.n != self.n:
            return NotImplemented
        kind = self.kind if self.kind == other.kind else "sq"
        return PolyMatrix(kind, [[self.rows[i][j] + other.rows[i][j]
                                  for j in range(self.n)] for i in range(self.n)])

    def __eq__(self, other):
        if not isinstance(other, PolyMatrix):
            return NotImplemented
        return (self.n == other.n
                and all(self.rows[i][j] == other.rows[i][j]
                        for i in range(self.n) for j in range(self.n)))

    __hash__ = None

    def __str__(self):
        return "\n".join("[" + ", ".join(str(e) for e in row) + "]" for row in self.rows)


def independent_positions(kind, n):
    """Index pairs (0-based, row-major) of the independent entries of a kind.

    sym: upper triangle including the diagonal; sk: strict upper triangle;
    sq: everything.
    """
    if kind == "sym":
        return [(i, j) for i in range(n) for j in range(i, n)]
    if kind == "sk":
        return [(i, j) for i in range(n) for j in range(i + 1, n)]
    if kind == "sq":
        return [(i, j) for i in range(n) for j in range(n)]
    raise ValueError("kind must be one of %s" % (KINDS,))


def matmul(A, B):
    """Plain matrix product; result carries kind 'sq'."""
    if A.n != B.n:
        raise ValueError("size mismatch")
    n = A.n
    rows = []
    for i in range(n):
        row = []
        for j in range(n):
            s = Poly.zero()
            for k in range(n):
                s = s + A.rows[i][k] * B.rows[k][j]
            row.append(s)
        rows.append(row)
    return PolyMatrix("sq", rows)


def _det_cofactor(rows):
    n = len(rows)
    if n == 1:
        return rows[0][0]
    if n == 2:
        return rows[0][0] * rows[1][1] - rows[0][1] * rows[1][0]
    total = Poly.zero()
    sign = 1
    for j in range(n):
        if not rows[0][j].is_zero():
            minor = [[row[k] for k in range(n) if k != j] for row in rows[1:]]
            total = total + rows[0][j] * _det_cofactor(minor) * sign
        sign = -sign
    return total


def _det_bareiss(rows):
    # fraction-free elimination; the division by the previous pivot is exact
    n = len(rows)
    A = [list(row) for row in rows]
    sign = 1
    prev = Poly.const(1)
    for k in range(n - 1):
        piv = next((i for i in range(k, n) if not A[i][k].is_zero()), None)
        if piv is None:
            return Poly.zero()
        if piv != k:
            A[k], A[piv] = A[piv], A[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                num = A[i][j] * A[k][k] - A[i][k] * A[k][j]
                A[i][j] = num.exact_div(prev)
            A[i][k] = Poly.zero()
        prev = A[k][k]
    return A[n - 1][n - 1] * sign


def det(M):
    """Determinant; cofactor expansion for n <= 4, Bareiss beyond."""
    if isinstance(M, PolyMatrix):
        rows = M.rows
    else:
        rows = [[PolyMatrix._coerce(e) for e in row] for row in M]
    if len(rows) <= 4:
        return _det_cofactor(rows)
    return _det_bareiss(rows)


def pfaffian(M):
    """Pfaffian of a skew PolyMatrix, normalized so Pf of the standard
    symplectic block diag([[0,1],[-1,0]], ...) is +1."""
    if isinstance(M, PolyMatrix):
        if M.kind != "sk":
            raise ValueError("pfaffian requires kind sk")
        rows = M.rows
    else:
        rows = [[PolyMatrix._coerce(e) for e in row] for row in M]
        n = len(rows)
        if n % 2:
            raise ValueError("pfaffian requires even size")
        for i in range(n):
            for j in range(i, n):
                if rows[i][j] != -rows[j][i]:
                    raise ValueError("pfaffian requires a skew matrix")
    cache = {}

    def pf(idx):
        if not idx:
            return Poly.const(1)
        if idx in cache:
            return cache[idx]
        i0 = idx[0]
        rest = idx[1:]
        total = Poly.zero()
        sign = 1
        for pos, j in enumerate(rest):
            e = rows[i0][j]
            if not e.is_zero():
                total = total + e * pf(rest[:pos] + rest[pos + 1:]) * sign
            sign = -sign
        cache[idx] = total
        return total

    return pf(tuple(range(len(rows))))


def resultant(p, q, name):
    """Sylvester resultant of p and q in the variable name.

    Both must have positive degree in name; the remaining variables ride along
    in the coefficient ring.
    """
    pc = p.coeffs_in(name)
    qc = q.coeffs_in(name)
    dp, dq = len(pc) - 1, len(qc) - 1
    if dp < 1 or dq < 1:
        raise ValueError("resultant requires positive degree in %r" % name)
    size = dp + dq
    zero = Poly.zero()
    rows = []
    for r in range(dq):
        row = [zero] * size
        for k in range(dp + 1):
            row[r + k] = pc[dp - k]
        rows.append(row)
    for r in range(dp):
        row = [zero] * size
        for k in range(dq + 1):
            row[r + k] = qc[dq - k]
        rows.append(row)
    return det(rows)


# ---------------------------------------------------------------------------
# univariate polynomials and numeric roots


class UnivariatePoly:
    """Dense univariate polynomial, ascending coefficients.

    Exact when every coefficient is a Fraction; otherwise coefficients are
    complex floats and only numeric operations are available.
    """

    __slots__ = ("coeffs", "exact")

    def __init__(self, coeffs):
        coeffs = list(coeffs)
        exact = True
        out = []
        for c in coeffs:
            if isinstance(c, (int, Fraction)):
                out.append(Fraction(c))
            elif isinstance(c, (float, complex)):
                out.append(complex(c))
                exact = False
            else:
                raise TypeError("bad coefficient %r" % (c,))
        if not exact:
            out = [complex(c) for c in out]
        while out and out[-1] == 0:
            out.pop()
        self.coeffs = out
        self.exact = exact

    @classmethod
    def from_poly(cls, p, name):
        cs = p.coeffs_in(name)
        flat = []
        for c in cs:
            if c.used_vars():
                raise ValueError("polynomial is not univariate in %r" % name)
            flat.append(c.constant_term)
        return cls(flat)

    def to_poly(self, name):
        return Poly((name,), {(i,): c for i, c in enumerate(self.coeffs)})

    def degree(self):
        return len(self.coeffs) - 1

    def is_zero(self):
        return not self.coeffs

    def __call__(self, x):
        val = 0 if (self.exact and isinstance(x, (int, Fraction))) else 0j
        for c in reversed(self.coeffs):
            val = val * x + c
        return val

    def deriv(self):
        return UnivariatePoly([i * c for i, c in enumerate(self.coeffs)][1:])

    def __add__(self, other):
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] = out[i] + c
        return UnivariatePoly(out)

    def __sub__(self, other):
        return self + (other * -1)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction, float, complex)):
            return UnivariatePoly([c * other for c in self.coeffs])
        out = [Fraction(0)] * (len(self.coeffs) + len(other.coeffs) - 1) if self.coeffs and other.coeffs else []
        for i, a in enumerate(self.coeffs):
            for j, b in enumerate(other.coeffs):
                out[i + j] += a * b
        return UnivariatePoly(out)

    __rmul__ = __mul__

    def divmod(self, other):
        if not other.coeffs:
            raise ZeroDivisionError
        if not (self.exact and other.exact):
            raise ValueError("exact division requires exact coefficients")
        rem = list(self.coeffs)
        d = other.degree()
        lead = other.coeffs[-1]
        q = [Fraction(0)] * max(0, len(rem) - d)
        for i in range(len(rem) - 1, d - 1, -1):
            c = rem[i] / lead
            if c:
                q[i - d] = c
                for j, b in enumerate(other.coeffs):
                    rem[i - d + j] -= c * b
        return UnivariatePoly(q), UnivariatePoly(rem)

    def exact_div(self, other):
        q, r = self.divmod(other)
        if not r.is_zero():
            raise ValueError("inexact univariate division")
        return q

    def monic(self):
        if not self.coeffs:
            return self
        lead = self.coeffs[-1]
        return UnivariatePoly([c / lead for c in self.coeffs])

    def gcd(self, other):
        a, b = self, other
        while not b.is_zero():
            _, r = a.divmod(b)
            a, b = b, r
        return a.monic() if not a.is_zero() else a

    def squarefree_factors(self):
        """Yun decomposition: list of (factor, multiplicity), factors monic."""
        if not self.exact:
            raise ValueError("squarefree decomposition requires exact coefficients")
        f = self.monic()
        if f.degree() < 1:
            return []
        df = f.deriv()
        g = f.gcd(df)
        out = []
        c = f.exact_div(g)
        d = df.exact_div(g) - c.deriv()
        i = 1
        while c.degree() > 0:
            p = c.gcd(d) if not d.is_zero() else c
            if p.degree() > 0:
                out.append((p, i))
            c = c.exact_div(p)
            d = (d - c.deriv() if p.degree() == 0 else d.exact_div(p) - c.deriv())
            i += 1
        return out

    def to_complex(self):
        return [complex(c) for c in self.coeffs]

    def __str__(self):
        return str(self.to_poly("t"))


def _aberth(coeffs, max_iter=400, tol=1e-14):
    """Aberth-Ehrlich simultaneous iteration on a complex coefficient list."""
    n = len(coeffs) - 1
    lead = coeffs[-1]
    cs = [c / lead for c in coeffs]
    radius = 1.0 + max(abs(c) for c in cs[:-1]) if n > 0 else 1.0

    def val_der(z):
        v = 0j
        d = 0j
        for c in reversed(cs):
            d = d * z + v
            v = v * z + c
        return v, d

    zs = [radius * cmath.exp(2j * cmath.pi * (k + 0.35) / n) * (0.9 + 0.05 * k / max(1, n))
          for k in range(n)]
    for _ in range(max_iter):
        moved = 0.0
        for k in range(n):
            v, d = val_der(zs[k])
            if v == 0:
                continue
            if d == 0:
                zs[k] += 1e-6 * (1 + 1j)
                moved = float("inf")
                continue
            w = v / d
            s = 0j
            for j in range(n):
                if j != k:
                    dz = zs[k] - zs[j]
                    if dz == 0:
                        dz = 1e-12 * (1 + 1j)
                    s += 1 / dz
            corr = w / (1 - w * s)
            zs[k] -= corr
            moved = max(moved, abs(corr) / (1 + abs(zs[k])))
        if moved < tol:
            break
    return zs


def roots_numeric(p, residual_tol=1e-10):
    """All complex roots with multiplicities.

    Exact input goes through Yun squarefree decomposition first, and the
    reported multiplicities come from that decomposition only.  Floating input
    is iterated directly and every root reports multiplicity 1.  Each root is
    checked against |p(root)| <= residual_tol * max|coefficient|.
    """
    if isinstance(p, Poly):
        used = sorted(p.used_vars())
        if len(used) > 1:
            raise ValueError("roots_numeric requires a univariate polynomial")
        p = UnivariatePoly.from_poly(p, used[0] if used else "t")
    if not isinstance(p, UnivariatePoly):
        p = UnivariatePoly(p)
    if p.is_zero():
        raise ValueError("zero polynomial has no well-defined root list")
    if p.degree() == 0:
        return []
    scale = max(abs(complex(c)) for c in p.coeffs)
    pairs = []
    if p.exact:
        for factor, mult in p.squarefree_factors():
            for z in _aberth(factor.to_complex()):
                pairs.append((z, mult))
    else:
        for z in _aberth(p.to_complex()):
            pairs.append((z, 1))
    for z, _ in pairs:
        res = abs(p(complex(z)))
        if res > residual_tol * scale:
            raise ArithmeticError(
                "root iteration failed residual check: |p(%r)| = %.3e > %.3e"
                % (z, res, residual_tol * scale))
    pairs.sort(key=lambda zm: (round(zm[0].real, 9), round(zm[0].imag, 9)))
    return pairs
