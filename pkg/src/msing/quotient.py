"""Graded dimensions of quotients O^N / T by exact rational elimination.

The engine works degree by degree for a quasi-homogeneous presentation.  A
monomial element u * e_c has degree wdeg(u) - shift_c, so the degree-d slice
of the free module collects the monomials of weighted degree d + shift_c in
each component c.  Once a contiguous window of max-variable-weight many
degrees is entirely zero, every higher monomial factors as variable times a
monomial whose class already lies in T, so the scan stops with a certificate.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass, field
from fractions import Fraction

from .algebra import Poly
from .families import (_normalize_integer, _nullspace, match_table1,
                       recognize_reduced_shape)


class NonQuasiHomogeneousError(ValueError):
    pass


class UnsupportedFamilyError(ValueError):
    pass


@dataclass
class SubmodulePresentation:
    """Finitely many generators of a submodule T of O^N over given variables.

    shifts holds one integer per component; when weights are attached the
    generators must be quasi-homogeneous for the induced grading.
    """

    rank: int
    vars: tuple
    generators: list
    shifts: tuple = None
    weights: dict = None

    def __post_init__(self):
        if self.shifts is None:
            self.shifts = (0,) * self.rank
        if len(self.shifts) != self.rank:
            raise ValueError("need one shift per component")
        gens = []
        for g in self.generators:
            g = tuple(g)
            if len(g) != self.rank:
                raise ValueError(
                    "generator with %d components, expected %d" % (len(g), self.rank))
            gens.append(g)
        self.generators = gens


@dataclass
class GradedQuotientReport:
    dims: dict
    total: int
    certified: bool
    window: tuple = None
    cap: int = 0
    basis: dict = field(default_factory=dict)

    @property
    def value(self):
        return self.total if self.certified else math.inf


def _monomial_enumerator(vars, weights):
    order = tuple(weights[v] for v in vars)
    memo = {}

    def rec(i, rem):
        if i == len(order):
            return [()] if rem == 0 else []
        key = (i, rem)
        if key not in memo:
            out = []
            w = order[i]
            e = 0
            while e * w <= rem:
                for tail in rec(i + 1, rem - e * w):
                    out.append((e,) + tail)
                e += 1
            memo[key] = out
        return memo[key]

    def monomials(deg):
        if deg < 0:
            return []
        return rec(0, deg)

    return monomials


def _sparse_rank(rows, want_pivots=False):
    """Rank of sparse rational rows; pivot columns are chosen leftmost, so the
    pivot set (and hence the quotient basis) does not depend on row order."""
    pivots = {}
    for row in rows:
        row = dict(row)
        while row:
            c = min(row)
            if c in pivots:
                f = row.pop(c)
                for cc, vv in pivots[c].items():
                    if cc == c:
                        continue
                    s = row.get(cc, 0) - f * vv
                    if s:
                        row[cc] = s
                    else:
                        row.pop(cc, None)
            else:
                f = row[c]
                pivots[c] = {cc: vv / f for cc, vv in row.items()}
                break
    if want_pivots:
        return len(pivots), set(pivots)
    return len(pivots)


def _generator_degrees(pres):
    degs = []
    for g in pres.generators:
        found = set()
        for c, p in enumerate(g):
            if p is None or p.is_zero():
                continue
            for wd in p.weighted_degrees(pres.weights):
                found.add(wd - pres.shifts[c])
        if not found:
            degs.append(None)
        elif len(found) > 1:
            raise NonQuasiHomogeneousError(
                "generator is not homogeneous for the attached weights: degrees %s"
                % sorted(found))
        else:
            degs.append(found.pop())
    return degs


def default_degree_cap(pres, gen_degs=None):
    if gen_degs is None:
        gen_degs = _generator_degrees(pres)
    top = max([d for d in gen_degs if d is not None], default=0)
    w_max = max(pres.weights.values(), default=1)
    return 4 * max(0, top) + 4 * w_max


def graded_quotient_dim(pres, degree_cap=None, want_basis=False):
    """Per-degree dimensions of O^N / T for a quasi-homogeneous presentation.

    Stops certified after a zero window of length max(variable weights); stops
    uncertified at the degree cap otherwise.
    """
    if pres.weights is None:
        raise NonQuasiHomogeneousError("presentation carries no weights")
    for v in pres.vars:
        if pres.weights.get(v, 0) <= 0:
            raise ValueError("variable %r needs a positive weight" % v)
    gen_degs = _generator_degrees(pres)
    cap = degree_cap if degree_cap is not None else default_degree_cap(pres, gen_degs)
    w_max = max((pres.weights[v] for v in pres.vars), default=1)
    monomials = _monomial_enumerator(pres.vars, pres.weights)
    shifts = pres.shifts
    d_min = -max(shifts) if shifts else 0
    const_guard = -min(shifts) if shifts else 0

    gen_terms = []
    for g in pres.generators:
        comps = []
        for c, p in enumerate(g):
            if p is None or p.is_zero():
                continue
            aligned = p.projected(pres.vars)
            comps.append((c, list(aligned.terms.items())))
        gen_terms.append(comps)

    dims = {}
    basis = {}
    consecutive = 0
    window = None
    certified = False
    d = d_min
    while d <= cap:
        cols = {}
        for c in range(pres.rank):
            for expo in monomials(d + shifts[c]):
                cols[(c, expo)] = len(cols)
        rows = []
        if cols:
            for comps, gd in zip(gen_terms, gen_degs):
                if gd is None:
                    continue
                for mult in monomials(d - gd):
                    row = {}
                    for c, terms in comps:
                        for expo, coef in terms:
                            key = (c, tuple(m + e for m, e in zip(mult, expo)))
                            row[cols[key]] = row.get(cols[key], Fraction(0)) + coef
                    row = {k: v for k, v in row.items() if v}
                    if row:
                        rows.append(row)
        if want_basis:
            rank, pivset = _sparse_rank(rows, want_pivots=True)
        else:
            rank = _sparse_rank(rows)
            pivset = None
        dim = len(cols) - rank
        if dim:
            dims[d] = dim
            if want_basis:
                inv = {idx: key for key, idx in cols.items()}
                basis[d] = [inv[i] for i in range(len(cols)) if i not in pivset]
        if d > const_guard and dim == 0:
            consecutive += 1
            if consecutive >= w_max:
                window = (d - w_max + 1, d)
                certified = True
                break
        else:
            consecutive = 0
        d += 1
    return GradedQuotientReport(dims=dims, total=sum(dims.values()),
                                certified=certified, window=window, cap=cap,
                                basis=basis)


def truncated_quotient_dim(pres, order):
    """dim O^N / (T + m^order * O^N): the uncertified total-degree fallback."""
    if order < 1:
        raise ValueError("truncation order must be >= 1")
    nvars = len(pres.vars)
    unit = {v: 1 for v in pres.vars}
    monomials = _monomial_enumerator(pres.vars, unit)
    cols = {}
    for deg in range(order):
        for expo in monomials(deg):
            for c in range(pres.rank):
                cols[(c, expo)] = len(cols)
    rows = []
    for g in pres.generators:
        comps = [(c, list(p.projected(pres.vars).terms.items()))
                 for c, p in enumerate(g) if p is not None and not p.is_zero()]
        if not comps:
            continue
        for deg in range(order):
            for mult in monomials(deg):
                row = {}
                for c, terms in comps:
                    for expo, coef in terms:
                        key = tuple(m + e for m, e in zip(mult, expo))
                        if sum(key) >= order:
                            continue
                        idx = cols[(c, key)]
                        row[idx] = row.get(idx, Fraction(0)) + coef
                row = {k: v for k, v in row.items() if v}
                if row:
                    rows.append(row)
    return len(cols) - _sparse_rank(rows)


# ---------------------------------------------------------------------------
# weight solving for plain polynomial ideals


def solve_poly_weights(polys, vars):
    """Positive integer weights making every poly weighted homogeneous."""
    vars = tuple(vars)
    if not vars:
        return {}
    cols = {v: i for i, v in enumerate(vars)}
    eqs = []
    for p in polys:
        monos = list(p.terms)
        if not monos:
            continue

        def form(expo, pv=p.vars):
            row = [Fraction(0)] * len(vars)
            for name, e in zip(pv, expo):
                if e:
                    row[cols[name]] += e
            return row

        first = form(monos[0])
        for other in monos[1:]:
            eqs.append([a - b for a, b in zip(form(other), first)])
    basis = _nullspace(eqs, len(vars))
    for radius in (1, 2, 3, 4):
        for coefs in itertools.product(range(-radius, radius + 1), repeat=len(basis)):
            if max((abs(c) for c in coefs), default=0) != radius:
                continue
            vec = [sum(c * b[i] for c, b in zip(coefs, basis)) for i in range(len(vars))]
            if all(x > 0 for x in vec):
                return dict(zip(vars, _normalize_integer(vec)))
        if not basis:
            break
    return None


def _ordered_used_vars(g, extra=()):
    seen = []
    for v in g.vars:
        if v in g.used_vars() and v not in seen:
            seen.append(v)
    for v in extra:
        if v not in seen:
            seen.append(v)
    return tuple(seen)


def ideal_presentation(gens, vars, weights=None):
    vars = tuple(vars)
    return SubmodulePresentation(
        rank=1, vars=vars,
        generators=[(g.projected(vars),) for g in gens],
        shifts=(0,), weights=weights)


def milnor_number(g, vars=None, degree_cap=None, truncation_orders=(6, 8, 10, 12, 14, 16)):
    """dim O_m / (dg/dv_1, ..., dg/dv_m), i.e. the Milnor number.

    Quasi-homogeneous g goes through the certified graded engine; otherwise a
    total-degree truncation is grown until the value stabilizes twice, and the
    stabilized value is returned without a certificate.  Infinity signals a
    non-isolated singularity.
    """
    if vars is None:
        vars = _ordered_used_vars(g)
    vars = tuple(vars)
    if not vars:
        return 1  # the empty local algebra is C
    gens = [g.diff(v) for v in vars]
    gens = [p for p in gens if not p.is_zero()]
    if not gens:
        return math.inf
    weights = solve_poly_weights([g], vars)
    if weights is not None:
        pres = ideal_presentation(gens, vars, weights)
        report = graded_quotient_dim(pres, degree_cap=degree_cap)
        return report.value
    pres = ideal_presentation(gens, vars)
    prev = None
    stable = 0
    for order in truncation_orders:
        val = truncated_quotient_dim(pres, order)
        if val == prev:
            stable += 1
            if stable >= 1:
                return val
        else:
            stable = 0
        prev = val
    return math.inf


def boundary_algebra_dim(h, boundary_var, multiplier, degree_cap=None):
    """dim O_{m+1} / (dh/dz_i, h + multiplier * x * dh/dx) with x the boundary
    variable; infinite dimension is reported as math.inf."""
    if multiplier < 1:
        raise ValueError("multiplier must be a positive integer")
    vars = _ordered_used_vars(h, extra=(boundary_var,))
    # boundary variable first, for a stable report order
    vars = (boundary_var,) + tuple(v for v in vars if v != boundary_var)
    x = Poly.var(boundary_var, vars)
    gens = [h.diff(v) for v in vars if v != boundary_var]
    gens.append(h + x * h.diff(boundary_var) * multiplier)
    gens = [p for p in gens if not p.is_zero()]
    if not gens:
        return math.inf
    weights = solve_poly_weights([h], vars)
    if weights is None:
        pres = ideal_presentation(gens, vars)
        prev = None
        for order in (6, 8, 10, 12, 14, 16):
            val = truncated_quotient_dim(pres, order)
            if val == prev:
                return val
            prev = val
        return math.inf
    pres = ideal_presentation(gens, vars, weights)
    return graded_quotient_dim(pres, degree_cap=degree_cap).value


def boundary_tau_split(h, boundary_var, degree_cap=None):
    """Companion count with the last generator split into its two summands:
    dim O_{m+1} / (dh/dz_i, h, x * dh/dx).  Multiplier-independent."""
    vars = _ordered_used_vars(h, extra=(boundary_var,))
    vars = (boundary_var,) + tuple(v for v in vars if v != boundary_var)
    x = Poly.var(boundary_var, vars)
    gens = [h.diff(v) for v in vars if v != boundary_var]
    gens += [h, x * h.diff(boundary_var)]
    gens = [p for p in gens if not p.is_zero()]
    if not gens:
        return math.inf
    weights = solve_poly_weights([h], vars)
    if weights is None:
        pres = ideal_presentation(gens, vars)
        return truncated_quotient_dim(pres, 12)
    pres = ideal_presentation(gens, vars, weights)
    return graded_quotient_dim(pres, degree_cap=degree_cap).value


def icis_curve_milnor(f1, f2, vars=None, degree_cap=None):
    """Milnor number of the space curve (f1, f2) in C^3 via the
    one-step Le-Greuel formula:

        mu(f1, f2) = dim O_3 / (f1, 2x2 minors of Jac(f1, f2)) - mu(f1)
    """
    if vars is None:
        merged = []
        for p in (f1, f2):
            for v in p.vars:
                if v in p.used_vars() and v not in merged:
                    merged.append(v)
        vars = tuple(merged)
    vars = tuple(vars)
    if len(vars) != 3:
        raise ValueError("expected a curve in C^3, got variables %r" % (vars,))
    d1 = [f1.diff(v) for v in vars]
    d2 = [f2.diff(v) for v in vars]
    minors = []
    for i in range(3):
        for j in range(i + 1, 3):
            minors.append(d1[i] * d2[j] - d1[j] * d2[i])
    gens = [f1] + [m for m in minors if not m.is_zero()]
    weights = solve_poly_weights([f1, f2], vars)
    mu1 = milnor_number(f1, vars=vars, degree_cap=degree_cap)
    if mu1 is math.inf:
        return math.inf
    if weights is None:
        pres = ideal_presentation(gens, vars)
        prev = None
        big = math.inf
        for order in (6, 8, 10, 12, 14, 16):
            val = truncated_quotient_dim(pres, order)
            if val == prev:
                big = val
                break
            prev = val
    else:
        pres = ideal_presentation(gens, vars, weights)
        big = graded_quotient_dim(pres, degree_cap=degree_cap).value
    if big is math.inf:
        return math.inf
    return big - mu1


def mu_delta(fam, degree_cap=None):
    """Vanishing-cycle count of det (or Pf) composed with the family, for the
    shapes where it reduces to a one-function count.

    Corner-function families reduce to the Milnor number of the corner;
    boundary-corner families to the boundary algebra dimension with multiplier
    n - 1 (or k - 1 in the skew case); the 3x3 catalog families to their
    Tjurina number.  Anything else is refused: equality with tau is
    conjectural there, so no number is emitted.
    """
    from .tangent import tjurina
    germ = fam.specialize_params()
    shape = recognize_reduced_shape(germ)
    if shape is not None and shape[0] == "corner":
        return milnor_number(shape[1], degree_cap=degree_cap)
    if shape is not None and shape[0] == "boundary":
        _, h, bvar = shape
        mult = (fam.n // 2 - 1) if fam.kind == "sk" else fam.n - 1
        return boundary_algebra_dim(h, bvar, mult, degree_cap=degree_cap)
    cid = match_table1(fam)
    if cid is not None:
        return tjurina(fam, "sl", degree_cap=degree_cap)
    raise UnsupportedFamilyError(
        "family shape outside the reduced corner/boundary/catalog forms: "
        "mu_delta = tau is conjectural here, refusing to emit a number")
