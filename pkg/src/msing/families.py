"""Matrix family constructors, quasi-homogeneous weight solving, file format.

A family is a square matrix of polynomials in source variables and deformation
parameters.  The builders cover the trace-slice linear form L, Morse-corner
families, boundary-corner families, and the simple 3x3 symmetric catalog with
its square (M + skew U) variants.
"""

from __future__ import annotations

import itertools
import math
import re
from dataclasses import dataclass, field
from fractions import Fraction

from .algebra import (
    KINDS, Poly, PolyMatrix, independent_positions, parse_poly, variables,
)


@dataclass
class WeightSystem:
    """Positive integer weights on variables plus the degree splitting.

    entry_degrees[i][j] = delta[i] + delta_prime[j] covers every entry slot,
    including zero entries (those impose no constraint but still carry the
    degree their slot would have).
    """

    var_weights: dict
    param_weights: dict
    delta: tuple
    delta_prime: tuple = None

    def __post_init__(self):
        if self.delta_prime is None:
            self.delta_prime = tuple(self.delta)

    @property
    def entry_degrees(self):
        return tuple(
            tuple(di + dj for dj in self.delta_prime) for di in self.delta
        )

    def all_weights(self):
        merged = dict(self.var_weights)
        merged.update(self.param_weights)
        return merged

    @property
    def max_var_weight(self):
        return max(self.var_weights.values())


@dataclass
class MatrixFamily:
    name: str
    kind: str
    n: int
    vars: tuple
    params: tuple
    matrix: PolyMatrix
    boundary_var: str = None
    declared_weights: dict = field(default_factory=dict)
    catalog_id: str = None

    def __post_init__(self):
        if self.kind not in KINDS:
            raise ValueError("bad kind %r" % self.kind)
        if self.matrix.kind != self.kind or self.matrix.n != self.n:
            raise ValueError("matrix does not match declared kind/size")
        ambient = set(self.vars) | set(self.params)
        if len(ambient) != len(self.vars) + len(self.params):
            raise ValueError("variable/parameter name collision")
        for row in self.matrix.rows:
            for e in row:
                bad = e.used_vars() - ambient
                if bad:
                    raise ValueError("entry uses undeclared names %s" % sorted(bad))
        if self.boundary_var is not None and self.boundary_var not in self.vars:
            raise ValueError("boundary variable %r is not a source variable" % self.boundary_var)

    @property
    def ambient(self):
        return self.vars + self.params

    def entry(self, i, j):
        return self.matrix[i, j]

    def specialize_params(self, values=None):
        """Family with parameters substituted (default: all zero)."""
        if not self.params:
            return self
        values = dict(values or {})
        sub = {p: values.get(p, 0) for p in self.params}
        rows = [[e.substitute(sub).extended(self.vars) for e in row]
                for row in self.matrix.rows]
        return MatrixFamily(
            name=self.name, kind=self.kind, n=self.n, vars=self.vars,
            params=(), matrix=PolyMatrix(self.kind, rows),
            boundary_var=self.boundary_var, catalog_id=self.catalog_id)


# ---------------------------------------------------------------------------
# builders


def _coord_name(i, j):
    return "x%d%d" % (i + 1, j + 1)


def coordinate_slots(kind, n):
    """(i, j) slots that carry their own coordinate in the trace-slice form."""
    if kind in ("sym", "sq"):
        return [(i, j) for (i, j) in independent_positions(kind, n) if (i, j) != (0, 0)]
    return [(i, j) for (i, j) in independent_positions(kind, n) if (i, j) != (0, 1)]


def build_L(kind, n):
    """The generic trace-slice family: every entry its own coordinate except
    the corner slot, which carries minus the sum of the other diagonal (or
    symplectic-diagonal) coordinates so the matrix is trace-free (sym/sq) or
    has vanishing skew trace (sk)."""
    if kind == "sk":
        if n % 2 or n < 2:
            raise ValueError("sk size must be even and >= 2")
    elif n < 2:
        raise ValueError("size must be >= 2")
    slots = coordinate_slots(kind, n)
    vars = tuple(_coord_name(i, j) for i, j in slots)
    ambient = vars
    zero = Poly.zero(ambient)
    rows = [[zero for _ in range(n)] for _ in range(n)]
    for (i, j) in slots:
        v = Poly.var(_coord_name(i, j), ambient)
        rows[i][j] = v
        if kind == "sym" and i != j:
            rows[j][i] = v
        elif kind == "sk":
            rows[j][i] = -v
    if kind in ("sym", "sq"):
        corner = Poly.zero(ambient)
        for i in range(1, n):
            corner = corner - Poly.var(_coord_name(i, i), ambient)
        rows[0][0] = corner
    else:
        k = n // 2
        corner = Poly.zero(ambient)
        for b in range(1, k):
            corner = corner - Poly.var(_coord_name(2 * b, 2 * b + 1), ambient)
        rows[0][1] = corner
        rows[1][0] = -corner
    return MatrixFamily(
        name="L_%s_%d" % (kind, n), kind=kind, n=n, vars=vars, params=(),
        matrix=PolyMatrix(kind, rows))


def _add_corner(fam, g, params, name):
    """fam plus g placed on E11 (sym/sq) or E12 - E21 (sk)."""
    ambient = (fam.vars
               + tuple(v for v in g.vars if v not in fam.vars and v not in params)
               + tuple(params))
    new_vars = tuple(v for v in ambient if v not in params)
    rows = [[e.extended(ambient) for e in row] for row in fam.matrix.rows]
    gg = g.extended(ambient)
    if fam.kind in ("sym", "sq"):
        rows[0][0] = rows[0][0] + gg
    else:
        rows[0][1] = rows[0][1] + gg
        rows[1][0] = rows[1][0] - gg
    return MatrixFamily(
        name=name, kind=fam.kind, n=fam.n, vars=new_vars, params=tuple(params),
        matrix=PolyMatrix(fam.kind, rows))


def build_corner(kind, n, g, params=(), name=None):
    """Trace-slice family with a corner function g in fresh variables.

    g must vanish at the origin; its variables must not collide with the
    matrix coordinates.  Parameters named in params may appear in g.
    """
    L = build_L(kind, n)
    clash = set(g.used_vars()) & set(L.vars)
    if clash:
        raise ValueError("corner function reuses matrix coordinates %s" % sorted(clash))
    if g.constant_term != 0:
        raise ValueError("corner function must vanish at the origin")
    return _add_corner(L, g, params, name or "corner_%s_%d" % (kind, n))


def build_A1(kind, n, m, with_param=False):
    """Morse-corner family: L with corner -(z1^2 + ... + zm^2), optionally
    deformed by a single additive parameter lam."""
    znames = tuple("z%d" % (i + 1) for i in range(m))
    g = Poly.zero(znames)
    for z in znames:
        g = g - Poly.var(z, znames) ** 2
    params = ("lam",) if with_param else ()
    if with_param:
        g = g.extended(znames + params) + Poly.var("lam", znames + params)
    fam = build_corner(kind, n, g, params=params,
                       name="A1_%s_%d_%d" % (kind, n, m))
    return fam


def boundary_coordinate(kind):
    return "x34" if kind == "sk" else "x22"


def build_boundary(kind, n, h, name=None):
    """Boundary-corner family: the corner carries h(x22, z) (sym/sq) or
    h(x34, z) (sk) and the corner sum skips the boundary coordinate."""
    bvar = boundary_coordinate(kind)
    L = build_L(kind, n)
    if bvar not in L.vars:
        raise ValueError("size %d too small for a boundary form of kind %s" % (n, kind))
    if h.constant_term != 0:
        raise ValueError("boundary function must vanish at the origin")
    clash = (set(h.used_vars()) - {bvar}) & set(L.vars)
    if clash:
        raise ValueError("boundary function reuses matrix coordinates %s" % sorted(clash))
    ambient = L.vars + tuple(v for v in h.vars if v not in L.vars)
    rows = [[e.extended(ambient) for e in row] for row in L.matrix.rows]
    hh = h.extended(ambient)
    b = Poly.var(bvar, ambient)
    if kind in ("sym", "sq"):
        # corner was -(x22 + x33 + ...): add back x22, then add h
        rows[0][0] = rows[0][0] + b + hh
    else:
        rows[0][1] = rows[0][1] + b + hh
        rows[1][0] = rows[1][0] - b - hh
    return MatrixFamily(
        name=name or "boundary_%s_%d" % (kind, n), kind=kind, n=n,
        vars=ambient, params=(), matrix=PolyMatrix(kind, rows),
        boundary_var=bvar)


_TABLE1_ID = re.compile(r"^(I{1,2})(\d*)(_sq)?$")


def _table1_sym_entries(series, idx, ambient):
    x = Poly.var("x", ambient)
    y = Poly.var("y", ambient)
    z = Poly.var("z", ambient)
    w = Poly.var("w", ambient)
    lam = {int(m.group(1)): Poly.var(p, ambient)
           for p in ambient if (m := re.match(r"lam(\d+)$", p))}
    if series == "I":
        k = idx - 1
        center = y + x ** k
        for i in range(k):
            center = center + lam[i] * x ** i
        return [[x, lam[k], z], [lam[k], center, w], [z, w, y]]
    if idx == 4:
        m12 = w ** 2 + lam[1] * w + lam[0]
        m13 = y + lam[3] * w + lam[2]
    elif idx == 5:
        m12 = lam[2] * w ** 2 + lam[1] * w + lam[0]
        m13 = y + w ** 2 + lam[4] * w + lam[3]
    elif idx == 6:
        m12 = w ** 3 + lam[2] * w ** 2 + lam[1] * w + lam[0]
        m13 = y + lam[5] * w ** 2 + lam[4] * w + lam[3]
    else:
        raise ValueError("II series exists for indices 4, 5, 6")
    return [[x, m12, m13], [m12, y, z], [m13, z, w]]


def build_table1(id, k=None):
    """Catalog of simple symmetric 3x3 families and their square variants.

    Ids: I<tau> (tau >= 2, or pass k = tau - 1), II4, II5, II6, and the same
    with suffix _sq for the square variant M + U with a fresh skew part U.
    """
    m = _TABLE1_ID.match(id.strip())
    if not m:
        raise ValueError("unknown catalog id %r" % id)
    series, num, sq = m.group(1), m.group(2), bool(m.group(3))
    if series == "I":
        if num:
            tau = int(num)
            if k is not None and k != tau - 1:
                raise ValueError("id %s conflicts with k=%d" % (id, k))
        elif k is not None:
            tau = k + 1
        else:
            raise ValueError("series I needs an index (I3) or k")
        if tau < 2:
            raise ValueError("series I starts at I2 (k >= 1)")
        idx = tau
        nparams = tau
    else:
        if not num:
            raise ValueError("series II needs an index 4, 5 or 6")
        idx = int(num)
        if idx not in (4, 5, 6):
            raise ValueError("II series exists for indices 4, 5, 6")
        nparams = idx
    params = tuple("lam%d" % i for i in range(nparams))
    base_vars = ("x", "y", "z", "w")
    uvars = ("u12", "u13", "u23") if sq else ()
    ambient = base_vars + uvars + params
    rows = _table1_sym_entries(series, idx, ambient)
    kind = "sym"
    if sq:
        kind = "sq"
        u = {(0, 1): Poly.var("u12", ambient),
             (0, 2): Poly.var("u13", ambient),
             (1, 2): Poly.var("u23", ambient)}
        for (i, j), uu in u.items():
            rows[i][j] = rows[i][j] + uu
            rows[j][i] = rows[j][i] - uu
    name = ("%s%d%s" % (series, idx, "_sq" if sq else ""))
    return MatrixFamily(
        name=name, kind=kind, n=3, vars=base_vars + uvars, params=params,
        matrix=PolyMatrix(kind, rows), catalog_id=name)


def stabilize(fam, n_target):
    """Block-extend by an identity (sym/sq) or standard symplectic (sk) block;
    determinant and Pfaffian are unchanged."""
    if n_target < fam.n:
        raise ValueError("target size smaller than current size")
    if fam.kind == "sk" and n_target % 2:
        raise ValueError("sk stabilization needs an even target size")
    if n_target == fam.n:
        return fam
    n = n_target
    ambient = fam.ambient
    zero = Poly.zero(ambient)
    one = Poly.const(1, ambient)
    rows = [[zero for _ in range(n)] for _ in range(n)]
    for i in range(fam.n):
        for j in range(fam.n):
            rows[i][j] = fam.matrix[i, j].extended(ambient)
    if fam.kind in ("sym", "sq"):
        for i in range(fam.n, n):
            rows[i][i] = one
    else:
        for i in range(fam.n, n, 2):
            rows[i][i + 1] = one
            rows[i + 1][i] = -one
    return MatrixFamily(
        name="%s_stab%d" % (fam.name, n), kind=fam.kind, n=n, vars=fam.vars,
        params=fam.params, matrix=PolyMatrix(fam.kind, rows),
        boundary_var=fam.boundary_var)


# ---------------------------------------------------------------------------
# quasi-homogeneous weights


def _rref(rows, ncols):
    """Reduced row echelon form over Fraction; returns (rows, pivot_cols)."""
    rows = [list(r) for r in rows if any(r)]
    pivots = []
    r = 0
    for c in range(ncols):
        piv = next((i for i in range(r, len(rows)) if rows[i][c] != 0), None)
        if piv is None:
            continue
        rows[r], rows[piv] = rows[piv], rows[r]
        inv = Fraction(1) / rows[r][c]
        rows[r] = [x * inv for x in rows[r]]
        for i in range(len(rows)):
            if i != r and rows[i][c] != 0:
                f = rows[i][c]
                rows[i] = [a - f * b for a, b in zip(rows[i], rows[r])]
        pivots.append(c)
        r += 1
        if r == len(rows):
            break
    return rows[:r], pivots


def _nullspace(rows, ncols):
    rr, pivots = _rref(rows, ncols)
    free = [c for c in range(ncols) if c not in pivots]
    basis = []
    for fc in free:
        v = [Fraction(0)] * ncols
        v[fc] = Fraction(1)
        for r, pc in zip(rr, pivots):
            v[pc] = -r[fc]
        basis.append(v)
    return basis


def _normalize_integer(vec):
    den = 1
    for x in vec:
        den = den * x.denominator // math.gcd(den, x.denominator)
    ints = [int(x * den) for x in vec]
    g = 0
    for x in ints:
        g = math.gcd(g, abs(x))
    if g > 1:
        ints = [x // g for x in ints]
    return ints


def solve_weights(fam):
    """Solve for positive variable weights and a degree splitting.

    Every nonzero entry must be weighted homogeneous of degree delta_i +
    delta_prime_j; for sym and sk the two splittings coincide, and for sq the
    translation ambiguity is pinned by delta_1 = delta_prime_1.  Returns a
    WeightSystem scaled to the smallest integer vector, or None when the
    linear system has no solution with all variable (and used parameter)
    weights positive.  The positive vector is located by a deterministic
    integer grid over the exact kernel, which covers kernels of the
    dimensions arising here.
    """
    vars = list(fam.vars)
    used = set()
    for row in fam.matrix.rows:
        for e in row:
            used |= e.used_vars()
    params_used = [p for p in fam.params if p in used]
    n = fam.n
    sq = fam.kind == "sq"
    cols = {}
    order = []
    for name in vars + params_used:
        cols[("w", name)] = len(order)
        order.append(("w", name))
    for i in range(n):
        cols[("d", i)] = len(order)
        order.append(("d", i))
    if sq:
        for j in range(n):
            cols[("dp", j)] = len(order)
            order.append(("dp", j))
    ncols = len(order)
    ambient = fam.ambient

    def mono_form(expo):
        row = [Fraction(0)] * ncols
        for name, e in zip(ambient, expo):
            if e and name in used:
                row[cols[("w", name)]] += e
        return row

    eqs = []
    for i in range(n):
        for j in range(n):
            m = fam.matrix[i, j]
            if m.is_zero():
                continue
            monos = [expo for expo in m.terms]
            first = mono_form(monos[0])
            for other in monos[1:]:
                eqs.append([a - b for a, b in zip(mono_form(other), first)])
            row = list(first)
            row[cols[("d", i)]] -= 1
            row[cols[("dp", j) if sq else ("d", j)]] -= 1
            eqs.append(row)
    if sq:
        row = [Fraction(0)] * ncols
        row[cols[("d", 0)]] = Fraction(1)
        row[cols[("dp", 0)]] = Fraction(-1)
        eqs.append(row)

    basis = _nullspace(eqs, ncols)
    if not basis:
        return None
    need_positive = [cols[("w", name)] for name in vars + params_used]

    def try_combo(coefs):
        v = [sum(c * b[i] for c, b in zip(coefs, basis)) for i in range(ncols)]
        if all(v[i] > 0 for i in need_positive):
            return v
        return None

    r = len(basis)
    sol = None
    if r <= 6:
        for radius in (1, 2, 3, 4):
            for coefs in itertools.product(range(-radius, radius + 1), repeat=r):
                if max((abs(c) for c in coefs), default=0) != radius:
                    continue
                sol = try_combo([Fraction(c) for c in coefs])
                if sol:
                    break
            if sol:
                break
    if sol is None:
        return None
    ints = _normalize_integer(sol)
    if any(ints[i] <= 0 for i in need_positive):  # gcd sign flip guard
        ints = [-x for x in ints]
    var_weights = {name: ints[cols[("w", name)]] for name in vars}
    param_weights = {name: ints[cols[("w", name)]] for name in params_used}
    delta = tuple(ints[cols[("d", i)]] for i in range(n))
    delta_prime = tuple(ints[cols[("dp", j)]] for j in range(n)) if sq else tuple(delta)
    return WeightSystem(var_weights=var_weights, param_weights=param_weights,
                        delta=delta, delta_prime=delta_prime)


def verify_euler_identity(fam, ws):
    """Check e(M) = D M + M D' entrywise, where e is the weighted Euler
    operator over source variables and weighted parameters."""
    ambient = fam.ambient
    degs = ws.entry_degrees
    weighted = dict(ws.var_weights)
    weighted.update(ws.param_weights)
    for i in range(fam.n):
        for j in range(fam.n):
            m = fam.matrix[i, j]
            em = Poly.zero(ambient)
            for name, w in weighted.items():
                em = em + m.diff(name) * Poly.var(name, ambient) * w
            if em != m * degs[i][j]:
                return False
    return True


# ---------------------------------------------------------------------------
# structural recognition of the reduced corner shapes


def _bare_variable(p):
    if len(p.terms) != 1:
        return None
    (expo, c), = p.terms.items()
    if c != 1 or sum(expo) != 1:
        return None
    return next(v for v, e in zip(p.vars, expo) if e)


def recognize_reduced_shape(fam):
    """Classify a parameter-free family as a corner-function form or a
    boundary-corner form, independent of variable naming.

    Returns ("corner", g), ("boundary", h, boundary_var) or None.
    """
    fam = fam.specialize_params()
    n = fam.n
    kind = fam.kind
    if kind == "sk":
        corner_slot = (0, 1)
        slots = [(i, j) for (i, j) in independent_positions("sk", n) if (i, j) != corner_slot]
        diag = [(2 * b, 2 * b + 1) for b in range(1, n // 2)]
        bslot = (2, 3) if n >= 4 else None
    else:
        corner_slot = (0, 0)
        slots = [(i, j) for (i, j) in independent_positions(kind, n) if (i, j) != corner_slot]
        diag = [(i, i) for i in range(1, n)]
        bslot = (1, 1)
    names = {}
    for (i, j) in slots:
        v = _bare_variable(fam.matrix[i, j])
        if v is None or v in names.values():
            return None
        names[(i, j)] = v
    slot_vars = set(names.values())
    corner = fam.matrix[corner_slot[0], corner_slot[1]]
    full = corner
    for (i, j) in diag:
        full = full + Poly.var(names[(i, j)], fam.ambient)
    if not (full.used_vars() & slot_vars):
        return ("corner", full)
    if bslot is None or bslot not in names:
        return None
    bvar = names[bslot]
    partial = corner
    for (i, j) in diag[1:]:
        partial = partial + Poly.var(names[(i, j)], fam.ambient)
    if not (partial.used_vars() & (slot_vars - {bvar})):
        return ("boundary", partial, bvar)
    return None


def match_table1(fam):
    """Catalog id whose lam = 0 form equals fam's lam = 0 form up to renaming
    the variables positionally, or None."""
    if fam.catalog_id:
        return fam.catalog_id
    if fam.n != 3:
        return None
    ref = fam.specialize_params()
    candidates = ["I%d" % t for t in range(2, 13)] + ["II4", "II5", "II6"]
    if fam.kind == "sq":
        candidates = [c + "_sq" for c in candidates]
    elif fam.kind != "sym":
        return None
    for cid in candidates:
        cand = build_table1(cid).specialize_params()
        # recover the renaming slot by slot from entries that are bare
        # variables; for sq variants the skew part provides the u names
        rename = {}
        ok = True
        pairs = [(cand.matrix[i, j], ref.matrix[i, j])
                 for i in range(3) for j in range(3)]
        if fam.kind == "sq":
            half = Fraction(1, 2)
            for (i, j) in ((0, 1), (0, 2), (1, 2)):
                pairs.append(((cand.matrix[i, j] - cand.matrix[j, i]) * half,
                              (ref.matrix[i, j] - ref.matrix[j, i]) * half))
        for cp, fp in pairs:
            cv = _bare_variable(cp)
            fv = _bare_variable(fp)
            if (cv is None) != (fv is None):
                ok = False
                break
            if cv is not None:
                if cv in rename and rename[cv] != fv:
                    ok = False
                    break
                rename[cv] = fv
        if not ok:
            continue
        if len(set(rename.values())) != len(rename):
            continue
        sub = {k: Poly.var(v, ref.vars) for k, v in rename.items()}
        if all(cand.matrix[i, j].substitute(sub) == ref.matrix[i, j]
               for i in range(3) for j in range(3)):
            return cid
    return None


# ---------------------------------------------------------------------------
# catalog and file format


def catalog_ids():
    """Ids of the families exercised by the verification catalog."""
    return [
        "L_sym_2", "L_sym_3", "L_sq_2", "L_sk_4",
        "A1_sym_2_1", "A1_sym_3_2", "A1_sq_2_1", "A1_sk_4_1",
        "bd_sym_3_B2", "bd_sym_3_B3", "bd_sym_3_A2", "bd_sym_3_C3",
        "bd_sym_3_F4", "bd_sk_4_B2",
        "I2", "I3", "I4", "II4", "II5", "II6",
        "I2_sq", "I3_sq", "I4_sq", "II4_sq", "II5_sq", "II6_sq",
    ]


_BOUNDARY_H = {
    "B2": "{b}^2",
    "B3": "{b}^3",
    "A2": "{b} + z1^3",
    "C3": "{b}*z1 + z1^3",
    "F4": "{b}^2 + z1^3",
}


def catalog_build(id, k=None):
    parts = id.split("_")
    if parts[0] == "L":
        return build_L(parts[1], int(parts[2]))
    if parts[0] == "A1":
        return build_A1(parts[1], int(parts[2]), int(parts[3]))
    if parts[0] == "bd":
        kind, n, cls = parts[1], int(parts[2]), parts[3]
        b = boundary_coordinate(kind)
        h = parse_poly(_BOUNDARY_H[cls].format(b=b))
        fam = build_boundary(kind, n, h, name=id)
        return fam
    return build_table1(id, k=k)


def family_to_text(fam):
    lines = ["family %s" % fam.name, "kind %s" % fam.kind, "size %d" % fam.n]
    lines.append("vars " + " ".join(fam.vars))
    if fam.params:
        lines.append("params " + " ".join(fam.params))
    if fam.boundary_var:
        lines.append("boundary %s" % fam.boundary_var)
    for (i, j) in independent_positions(fam.kind, fam.n):
        e = fam.matrix[i, j]
        if not e.is_zero():
            lines.append("entry %d %d : %s" % (i + 1, j + 1, e))
    return "\n".join(lines) + "\n"


class FamilyFormatError(ValueError):
    pass


def parse_family_file(text):
    """Parse the line-oriented family format (see family_to_text)."""
    name = kind = None
    n = None
    vars = None
    params = ()
    boundary = None
    declared_weights = {}
    entries = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        head, _, rest = line.partition(" ")
        rest = rest.strip()
        try:
            if head == "family":
                name = rest
            elif head == "kind":
                if rest not in KINDS:
                    raise FamilyFormatError("kind must be one of %s" % (KINDS,))
                kind = rest
            elif head == "size":
                n = int(rest)
            elif head in ("vars", "params"):
                names = []
                for tok in rest.split():
                    if ":" in tok:
                        nm, w = tok.split(":", 1)
                        declared_weights[nm] = int(w)
                    else:
                        nm = tok
                    names.append(nm)
                if head == "vars":
                    vars = tuple(names)
                else:
                    params = tuple(names)
            elif head == "boundary":
                boundary = rest
            elif head == "entry":
                m = re.match(r"^(\d+)\s+(\d+)\s*:\s*(.*)$", rest)
                if not m:
                    raise FamilyFormatError("bad entry line")
                entries.append((int(m.group(1)), int(m.group(2)), m.group(3)))
            else:
                raise FamilyFormatError("unknown directive %r" % head)
        except FamilyFormatError as e:
            raise FamilyFormatError("line %d: %s" % (lineno, e)) from None
        except ValueError as e:
            raise FamilyFormatError("line %d: %s" % (lineno, e)) from None
    for fieldname, value in (("family", name), ("kind", kind), ("size", n), ("vars", vars)):
        if value is None:
            raise FamilyFormatError("missing %s line" % fieldname)
    ambient = tuple(vars) + tuple(params)
    zero = Poly.zero(ambient)
    rows = [[zero for _ in range(n)] for _ in range(n)]
    seen = set()
    for (i, j, expr) in entries:
        if not (1 <= i <= n and 1 <= j <= n):
            raise FamilyFormatError("entry (%d,%d) outside a %dx%d matrix" % (i, j, n, n))
        if kind == "sym" and j < i:
            raise FamilyFormatError("sym entries must have column >= row, got (%d,%d)" % (i, j))
        if kind == "sk" and j <= i:
            raise FamilyFormatError("sk entries must have column > row, got (%d,%d)" % (i, j))
        if (i, j) in seen:
            raise FamilyFormatError("duplicate entry (%d,%d)" % (i, j))
        seen.add((i, j))
        try:
            p = parse_poly(expr, vars=ambient)
        except ValueError as e:
            raise FamilyFormatError("entry (%d,%d): %s" % (i, j, e)) from None
        rows[i - 1][j - 1] = p.extended(ambient)
        if kind == "sym" and i != j:
            rows[j - 1][i - 1] = rows[i - 1][j - 1]
        elif kind == "sk":
            rows[j - 1][i - 1] = -rows[i - 1][j - 1]
    return MatrixFamily(
        name=name, kind=kind, n=n, vars=tuple(vars), params=tuple(params),
        matrix=PolyMatrix(kind, rows), boundary_var=boundary,
        declared_weights=declared_weights)
