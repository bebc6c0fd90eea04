"""Numeric skew-symmetric linear algebra.

Skew matrices of even size carry a skew trace (the sum of superdiagonal
pair entries), a Pfaffian, and skew eigenvalues: the roots of the
degree-k characteristic polynomial t -> Pf(A - t J) where J is the
standard symplectic form.  Matrices built from 2x2 cells of the shape
[[z, w], [-conj(w), conj(z)]] with real diagonal blocks (quaternionic
matrices) have real skew eigenvalues; `verify_reality` checks that
statement on random samples.

Everything here is floating point (numpy); the exact counterpart of the
Pfaffian lives in `algebra` and is used by the tests as a cross oracle.
"""

import random

import numpy as np

from .algebra import roots_numeric

__all__ = ["ComplexSkewMatrix", "MatrixFormatError", "RealityCheckError",
           "standard_symplectic", "sktr", "pfaffian_numeric",
           "skew_eigenvalues", "is_quaternionic", "random_quaternionic",
           "random_skew", "verify_reality", "format_matrix",
           "parse_matrix_file"]

SKEW_TOL = 1e-12


class MatrixFormatError(ValueError):
    pass


class RealityCheckError(ArithmeticError):
    """A quaternionic sample produced a non-real skew eigenvalue."""

    def __init__(self, message, matrix):
        super().__init__(message)
        self.matrix = matrix


class ComplexSkewMatrix:
    """Complex skew-symmetric matrix of even size 2k.

    Input must satisfy A = -A^T within 1e-12 (absolute); the stored array
    is the exact skew part (A - A^T)/2 and is read-only.
    """

    __slots__ = ("array",)

    def __init__(self, entries):
        a = np.asarray(entries, dtype=complex)
        if a.ndim != 2 or a.shape[0] != a.shape[1]:
            raise ValueError("matrix must be square")
        n = a.shape[0]
        if n == 0 or n % 2:
            raise ValueError("size must be even and positive, got %d" % n)
        dev = float(np.max(np.abs(a + a.T)))
        if dev > SKEW_TOL:
            raise ValueError(
                "matrix is not skew-symmetric: max |A + A^T| = %.3e" % dev)
        a = (a - a.T) / 2
        a.setflags(write=False)
        self.array = a

    @property
    def size(self):
        return self.array.shape[0]

    @property
    def k(self):
        return self.array.shape[0] // 2

    def __repr__(self):
        return "ComplexSkewMatrix(%r)" % (self.array.tolist(),)


def _coerce(A):
    return A if isinstance(A, ComplexSkewMatrix) else ComplexSkewMatrix(A)


def _j_array(k):
    j = np.zeros((2 * k, 2 * k), dtype=complex)
    for i in range(k):
        j[2 * i, 2 * i + 1] = 1
        j[2 * i + 1, 2 * i] = -1
    return j


def standard_symplectic(k):
    """The standard symplectic form J_{2k}: k diagonal blocks [[0,1],[-1,0]]."""
    return ComplexSkewMatrix(_j_array(k))


def sktr(A):
    """Skew trace: the sum of the superdiagonal pair entries a_{2i-1,2i}."""
    a = _coerce(A).array
    return complex(np.sum(a[0::2, 1::2].diagonal()))


def pfaffian_numeric(A):
    """Pfaffian by skew elimination with row pivoting, Pf(J) = +1.

    Each step pivots the largest entry of the working row into the pair
    position, multiplies it into the result, and passes to the skew Schur
    complement.  The result is checked against Pf(A)^2 = det(A).
    """
    m = _coerce(A)
    a = np.array(m.array)
    n = a.shape[0]
    pf = 1 + 0j
    for i in range(0, n, 2):
        tail = np.abs(a[i, i + 1:])
        jrel = int(np.argmax(tail))
        if tail[jrel] == 0.0:
            pf = 0j
            break
        j = i + 1 + jrel
        if j != i + 1:
            a[[i + 1, j], :] = a[[j, i + 1], :]
            a[:, [i + 1, j]] = a[:, [j, i + 1]]
            pf = -pf
        piv = a[i, i + 1]
        pf *= piv
        if i + 2 < n:
            c1 = a[i, i + 2:].copy()
            c2 = a[i + 1, i + 2:].copy()
            a[i + 2:, i + 2:] += (np.outer(c2, c1) - np.outer(c1, c2)) / piv
    det = complex(np.linalg.det(m.array))
    scale = max(1.0, abs(det))
    if abs(pf * pf - det) > 1e-8 * scale:
        raise ArithmeticError(
            "Pfaffian failed the determinant anchor: Pf^2 = %r, det = %r"
            % (pf * pf, det))
    return complex(pf)


def _polyval(coeffs, x):
    val = 0j
    for c in reversed(coeffs):
        val = val * x + c
    return val


def skew_eigenvalues(A):
    """Roots of t -> Pf(A - t J), with multiplicity (k values).

    The degree-k polynomial is interpolated from k+1 Pfaffian evaluations
    at real nodes; the interpolation is validated against a fresh node and
    retried once with shifted nodes before giving up.  The leading
    coefficient is (-1)^k by construction.
    """
    m = _coerce(A)
    k = m.k
    J = _j_array(k)
    lead = (-1) ** k
    coeffs = None
    for shift in (0.0, 0.5):
        nodes = [i + shift for i in range(k + 1)]
        vals = [pfaffian_numeric(m.array - t * J) for t in nodes]
        vander = np.vander(np.array(nodes, dtype=complex), increasing=True)
        cand = np.linalg.solve(vander, np.array(vals, dtype=complex))
        if abs(cand[k] - lead) > 1e-6:
            continue
        fresh = nodes[-1] + 1
        direct = pfaffian_numeric(m.array - fresh * J)
        scale = max([1.0, abs(direct)] + [abs(v) for v in vals])
        if abs(_polyval(cand, fresh) - direct) <= 1e-8 * scale:
            coeffs = cand
            break
    if coeffs is None:
        raise ArithmeticError("Pfaffian interpolation failed at both node sets")
    out = []
    for z, mult in roots_numeric([complex(c) for c in coeffs]):
        out.extend([z] * mult)
    return out


def is_quaternionic(A, tol=1e-12):
    """True when every 2x2 cell has the shape [[z, w], [-conj(w), conj(z)]]
    and the diagonal cells are real."""
    m = _coerce(A)
    a = m.array
    k = m.k
    for bi in range(k):
        for bj in range(k):
            z = a[2 * bi, 2 * bj]
            w = a[2 * bi, 2 * bj + 1]
            if abs(a[2 * bi + 1, 2 * bj] + w.conjugate()) > tol:
                return False
            if abs(a[2 * bi + 1, 2 * bj + 1] - z.conjugate()) > tol:
                return False
            if bi == bj and (abs(z.imag) > tol or abs(w.imag) > tol):
                return False
    return True


def random_quaternionic(k, rng):
    """Random quaternionic matrix: cell entries uniform in the unit box,
    diagonal cells real."""
    a = np.zeros((2 * k, 2 * k), dtype=complex)
    for bi in range(k):
        w = rng.uniform(-1, 1)
        a[2 * bi, 2 * bi + 1] = w
        a[2 * bi + 1, 2 * bi] = -w
        for bj in range(bi + 1, k):
            z = complex(rng.uniform(-1, 1), rng.uniform(-1, 1))
            w = complex(rng.uniform(-1, 1), rng.uniform(-1, 1))
            cell = np.array([[z, w], [-w.conjugate(), z.conjugate()]])
            a[2 * bi:2 * bi + 2, 2 * bj:2 * bj + 2] = cell
            a[2 * bj:2 * bj + 2, 2 * bi:2 * bi + 2] = -cell.T
    return ComplexSkewMatrix(a)


def random_skew(n, rng):
    """Random complex skew matrix with entries uniform in the unit box."""
    a = np.zeros((n, n), dtype=complex)
    for i in range(n):
        for j in range(i + 1, n):
            z = complex(rng.uniform(-1, 1), rng.uniform(-1, 1))
            a[i, j] = z
            a[j, i] = -z
    return ComplexSkewMatrix(a)


def verify_reality(k, samples, seed):
    """Sample random quaternionic matrices and return the worst imaginary
    part over all their skew eigenvalues; raises RealityCheckError (with
    the offending matrix serialized) if it exceeds 1e-8.

    Per-sample generators are seeded deterministically from the master
    seed, so runs are reproducible sample by sample.
    """
    if not 1 <= k <= 6:
        raise ValueError("k must be between 1 and 6")
    if samples < 1:
        raise ValueError("need at least one sample")
    master = random.Random(seed)
    worst = 0.0
    for _ in range(samples):
        sub = random.Random(master.randrange(2 ** 63))
        m = random_quaternionic(k, sub)
        im = max(abs(z.imag) for z in skew_eigenvalues(m))
        if im > 1e-8:
            raise RealityCheckError(
                "non-real skew eigenvalue (|Im| = %.3e) on sample:\n%s"
                % (im, format_matrix(m)), m)
        worst = max(worst, im)
    return worst


# ---------------------------------------------------------------------------
# file format


def _format_entry(z):
    return "%.17g%+.17gi" % (z.real, z.imag)


def format_matrix(A):
    """Serialize in the matrix file format (`size N` plus N entry rows)."""
    a = _coerce(A).array
    n = a.shape[0]
    lines = ["size %d" % n]
    for i in range(n):
        lines.append(" ".join(_format_entry(a[i, j]) for j in range(n)))
    return "\n".join(lines) + "\n"


def _parse_entry(tok, lineno):
    try:
        return complex(tok.replace("i", "j").replace("I", "j").replace("J", "j"))
    except ValueError:
        raise MatrixFormatError("line %d: bad complex entry %r"
                                % (lineno, tok)) from None


def parse_matrix_file(text):
    """Parse `size N` followed by N whitespace-separated rows of complex
    entries written as a+bi (i or j both accepted)."""
    size = None
    rows = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if size is None:
            parts = line.split()
            if len(parts) != 2 or parts[0] != "size":
                raise MatrixFormatError("line %d: expected 'size N'" % lineno)
            try:
                size = int(parts[1])
            except ValueError:
                raise MatrixFormatError("line %d: bad size %r"
                                        % (lineno, parts[1])) from None
            continue
        row = [_parse_entry(tok, lineno) for tok in line.split()]
        if len(row) != size:
            raise MatrixFormatError("line %d: expected %d entries, got %d"
                                    % (lineno, size, len(row)))
        rows.append(row)
    if size is None:
        raise MatrixFormatError("missing size line")
    if len(rows) != size:
        raise MatrixFormatError("expected %d rows, got %d" % (size, len(rows)))
    try:
        return ComplexSkewMatrix(rows)
    except ValueError as e:
        raise MatrixFormatError(str(e)) from None
