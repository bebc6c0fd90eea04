"""Critical points and values of determinant and Pfaffian compositions.

For the reduced family shapes the composite function (determinant, or
Pfaffian in the skew case) restricted to the deformed family has critical
points confined to a small, explicitly parametrized locus.  This module
carries out those reductions exactly:

* the quadratic part of the composite at a generic point of the link slice,
  whose nondegeneracy makes the slice function Morse (`link_hessian_check`);
* the one-variable reduction of boundary-corner families, where the critical
  equation is H + (n-1)x H' = 0 and the value function is (H/(n-1))^(n-1) x
  (`reduce_boundary_critical`);
* the odd two-variable functions carrying the critical-point data of the
  3x3 catalog families (`odd_function_of`), their plane blow-ups
  (`blowup_type`) and the centrally symmetric space-curve covers
  (`curve_cover`);
* exact/numeric critical values of the composite for the supported shapes
  (`critical_values`);
* counts of the finite covering defined by the elementary symmetric
  functions of the nonzero critical values (`ll_index`), evaluated from
  Weyl-group data (`weyl_data`, `LLIndexData`).

Everything symbolic is exact over the rationals; floating point enters only
when polynomial roots are required numerically.
"""

from dataclasses import dataclass, field
from fractions import Fraction

from .algebra import (Poly, PolyMatrix, UnivariatePoly, det, pfaffian,
                      resultant, roots_numeric)
from .families import (MatrixFamily, _bare_variable, build_L, build_table1,
                       coordinate_slots, match_table1,
                       recognize_reduced_shape)
from .quotient import UnsupportedFamilyError, milnor_number

__all__ = [
    "LLIndexData", "CriticalReduction", "CriticalValueReport",
    "link_quadratic_form", "link_hessian_check", "reduce_boundary_critical",
    "odd_function_of", "critical_values", "ll_index", "weyl_data",
    "blowup_type", "curve_cover",
]


# ---------------------------------------------------------------------------
# link slice: quadratic part of det(I + L) / Pf(J + L)


def link_quadratic_form(kind, n):
    """Quadratic part in the slice coordinates of det (or Pf) on the unit
    trace level of the generic trace-slice family.

    For sym/sq this is the sum of all 2x2 principal minors of the slice
    matrix (the linear part vanishes because the slice is trace-free); for
    sk it is the quadratic part of the Pfaffian.
    """
    fam = build_L(kind, n)
    rows = fam.matrix.rows
    if kind == "sk":
        k = n // 2
        shifted = [list(r) for r in rows]
        for b in range(k):
            shifted[2 * b][2 * b + 1] = shifted[2 * b][2 * b + 1] + 1
            shifted[2 * b + 1][2 * b] = shifted[2 * b + 1][2 * b] - 1
        full = pfaffian(shifted)
        quad = Poly(full.vars,
                    {e: c for e, c in full.terms.items() if sum(e) == 2})
        return quad.projected(fam.vars)
    quad = Poly.zero(fam.vars)
    for i in range(n):
        for j in range(i + 1, n):
            quad = quad + rows[i][i] * rows[j][j] - rows[i][j] * rows[j][i]
    return quad.projected(fam.vars)


def link_hessian_check(kind, n):
    """(Gram matrix, nondegenerate) of the link-slice quadratic form.

    The Gram matrix is over the rationals, indexed by build_L(kind, n).vars;
    nondegeneracy is decided exactly by its determinant.
    """
    fam = build_L(kind, n)
    quad = link_quadratic_form(kind, n)
    names = fam.vars
    idx = {v: i for i, v in enumerate(names)}
    m = len(names)
    gram = [[Fraction(0)] * m for _ in range(m)]
    for expo, c in quad.terms.items():
        support = [(v, e) for v, e in zip(quad.vars, expo) if e]
        if len(support) == 1:
            v, e = support[0]
            if e != 2:
                raise ValueError("form is not quadratic")
            gram[idx[v]][idx[v]] = Fraction(c)
        else:
            (v1, _), (v2, _) = support
            half = Fraction(c) / 2
            gram[idx[v1]][idx[v2]] += half
            gram[idx[v2]][idx[v1]] += half
    gmat = PolyMatrix("sym", [[Poly.const(c) for c in row] for row in gram])
    nondeg = not det(gmat).is_zero()
    return tuple(tuple(row) for row in gram), nondeg


# ---------------------------------------------------------------------------
# Weyl data and covering counts


_WEYL_EXCEPTIONAL_ORDERS = {("E", 6): 51840, ("E", 7): 2903040,
                            ("E", 8): 696729600, ("F", 4): 1152}


@dataclass(frozen=True)
class LLIndexData:
    """Weyl-group constants entering the covering-count formula."""
    family: str
    rank: int
    coxeter: int
    order: int
    alpha: int


def weyl_data(family, rank):
    family = family.upper()
    rank = int(rank)
    if rank < 1:
        raise ValueError("rank must be positive")
    fact = 1
    for i in range(2, rank + 1):
        fact *= i
    if family == "A":
        coxeter, order = rank + 1, fact * (rank + 1)
    elif family in ("B", "C"):
        coxeter, order = 2 * rank, (2 ** rank) * fact
    elif family == "D":
        if rank < 2:
            raise ValueError("type D needs rank >= 2")
        coxeter, order = 2 * rank - 2, (2 ** (rank - 1)) * fact
    elif family in ("E", "F"):
        key = (family, rank)
        if key not in _WEYL_EXCEPTIONAL_ORDERS:
            raise ValueError("no Weyl group of type %s%d" % (family, rank))
        order = _WEYL_EXCEPTIONAL_ORDERS[key]
        coxeter = {("E", 6): 12, ("E", 7): 18, ("E", 8): 30, ("F", 4): 12}[key]
    else:
        raise ValueError("unknown Weyl family %r" % family)
    if family in ("A", "D", "E"):
        alpha = coxeter
    elif family == "B":
        alpha = 2
    elif family == "C":
        alpha = 2 * rank - 2
    else:
        alpha = 6
    return LLIndexData(family=family, rank=rank, coxeter=coxeter,
                       order=order, alpha=alpha)


_TABLE1_LL = {"II4": 2 * 15 ** 3, "II5": 12 ** 5, "II6": 70 * 21 ** 4}


def ll_index(target):
    """Number of preimages of a generic point under the map sending the
    deformation parameters to the symmetric functions of the nonzero
    critical values.

    target is either a catalog id ("I3", "II4", square variants allowed:
    the skew extension does not change the critical values), or a tuple
    (family, rank, n, kind) evaluated as ((n-1)C + alpha)^rank * rank!/|W|
    with n replaced by n/2 in the skew case.
    """
    if isinstance(target, str):
        cid = target.strip()
        if cid.endswith("_sq"):
            cid = cid[:-3]
        if cid in _TABLE1_LL:
            return _TABLE1_LL[cid]
        if cid.startswith("I") and not cid.startswith("II") and cid[1:].isdigit():
            tau = int(cid[1:])
            if tau < 2:
                raise ValueError("series I starts at I2")
            return 2 * (2 * tau - 1) ** tau
        raise ValueError("unknown catalog id %r" % target)
    family, rank, n, kind = target
    data = weyl_data(family, rank)
    n = int(n)
    if kind == "sk":
        if n % 2 or n < 2:
            raise ValueError("sk size must be even and >= 2")
        n_eff = n // 2
    elif kind in ("sym", "sq"):
        if n < 2:
            raise ValueError("size must be >= 2")
        n_eff = n
    else:
        raise ValueError("bad kind %r" % kind)
    fact = 1
    for i in range(2, data.rank + 1):
        fact *= i
    num = ((n_eff - 1) * data.coxeter + data.alpha) ** data.rank * fact
    value = Fraction(num, data.order)
    if value.denominator != 1:
        raise ArithmeticError("covering count is not an integer: %s" % value)
    return int(value)


# ---------------------------------------------------------------------------
# boundary reduction


@dataclass(frozen=True)
class CriticalReduction:
    """One-variable reduction of the critical-point equations of a
    boundary-corner family.

    deformation is H (the corner function plus its deformation terms),
    critical_poly is H + multiplier*x*H', value_poly is
    (H/multiplier)^multiplier * x, and substitutions records the exact
    assignment of the remaining matrix coordinates under which the composite
    function equals value_poly (verified on construction).
    """
    family: str
    kind: str
    n: int
    multiplier: int
    boundary_var: str
    parameters: tuple
    deformation: Poly
    critical_poly: Poly
    value_poly: Poly
    substitutions: dict = field(repr=False)
    verified: bool = True


def _fresh_names(base, count, taken):
    stem = base
    while any("%s%d" % (stem, i) in taken for i in range(count)):
        stem = "_" + stem
    return tuple("%s%d" % (stem, i) for i in range(count))


def _fresh_var(base, taken):
    name = base
    while name in taken:
        name = "_" + name
    return name


def _rational(v, what="lambda"):
    if isinstance(v, Fraction):
        return v
    if isinstance(v, int):
        return Fraction(v)
    raise TypeError("%s values must be rational, got %r" % (what, v))


def _lam_assignment(params, lam):
    """Normalize lam (scalar, sequence or mapping) to {name: Fraction}.
    A scalar is broadcast to every parameter."""
    if isinstance(lam, dict):
        out = {}
        for key, v in lam.items():
            name = key if isinstance(key, str) else "lam%d" % key
            if name not in params:
                raise ValueError("unknown parameter %r (have %s)"
                                 % (name, list(params)))
            out[name] = _rational(v)
        return {p: out.get(p, Fraction(0)) for p in params}
    if isinstance(lam, (int, Fraction)):
        lam = (lam,) * len(params)
    lam = list(lam)
    if len(lam) != len(params):
        raise ValueError("expected %d parameter values, got %d"
                         % (len(params), len(lam)))
    return {p: _rational(v) for p, v in zip(params, lam)}


def reduce_boundary_critical(fam, lam=None):
    """Exact critical-point reduction of a boundary-corner family whose
    boundary function has no extra variables.

    With lam=None the deformation parameters stay symbolic; otherwise lam
    gives rational values for them (sequence or mapping, constants first).
    """
    germ = fam.specialize_params()
    shape = recognize_reduced_shape(germ)
    if shape is None or shape[0] != "boundary":
        raise UnsupportedFamilyError(
            "family is not in the reduced boundary-corner shape")
    _, h, bvar = shape
    extra = h.used_vars() - {bvar}
    if extra:
        raise UnsupportedFamilyError(
            "boundary function involves extra variables %s; the one-variable "
            "reduction needs a function of the boundary coordinate alone"
            % sorted(extra))
    kind, n = germ.kind, germ.n
    mult = (n // 2 - 1) if kind == "sk" else n - 1
    if mult < 1:
        raise UnsupportedFamilyError("matrix size too small for the reduction")
    hu = UnivariatePoly.from_poly(h, bvar)
    if hu.is_zero():
        raise UnsupportedFamilyError("boundary function is zero")
    tau = next(i for i, c in enumerate(hu.coeffs) if c != 0)
    if tau < 1:
        raise UnsupportedFamilyError("boundary function must vanish at the origin")
    params = _fresh_names("lam", tau, set(germ.ambient))
    ambient = (bvar,) + params
    H = h.projected((bvar,)).extended(ambient)
    for j, p in enumerate(params):
        H = H + Poly.var(p, ambient) * Poly.var(bvar, ambient) ** j
    if lam is not None:
        values = _lam_assignment(params, lam)
        H = H.substitute(values).projected((bvar,))
        params = ()
    x = Poly.var(bvar, H.vars)
    dH = H.diff(bvar)
    critical = H + x * dH * mult
    value = (H * Fraction(1, mult)) ** mult * x

    # exact verification: at the critical substitution the composite equals
    # the value polynomial
    subs = {}
    over = H * Fraction(1, mult)
    if kind == "sk":
        pair_slots = {(2 * b, 2 * b + 1) for b in range(1, n // 2)}
    else:
        pair_slots = {(i, i) for i in range(1, n)}
    for (i, j) in coordinate_slots(kind, n):
        name = _bare_variable(germ.matrix[i, j])
        if name is None or name == bvar:
            continue
        subs[name] = over if (i, j) in pair_slots else Poly.const(0)
    corner = (0, 1) if kind == "sk" else (0, 0)
    rows = [list(r) for r in germ.matrix.rows]
    shift = H - h
    rows[corner[0]][corner[1]] = rows[corner[0]][corner[1]] + shift
    if kind == "sk":
        rows[corner[1]][corner[0]] = rows[corner[1]][corner[0]] - shift
    elif kind == "sym":
        pass  # corner is diagonal
    reduced = [[e.substitute(subs) for e in row] for row in rows]
    composite = pfaffian(reduced) if kind == "sk" else det(reduced)
    if composite != value:
        raise ArithmeticError(
            "boundary reduction identity failed for %s" % fam.name)
    return CriticalReduction(
        family=fam.name, kind=kind, n=n, multiplier=mult, boundary_var=bvar,
        parameters=params, deformation=H, critical_poly=critical,
        value_poly=value, substitutions=subs, verified=True)


# ---------------------------------------------------------------------------
# odd functions of the 3x3 catalog


def _catalog_series(id):
    cid = id.strip()
    if cid.endswith("_sq"):
        cid = cid[:-3]
    if cid in ("II4", "II5", "II6"):
        return cid, "II", int(cid[2:])
    if cid.startswith("I") and cid[1:].isdigit():
        tau = int(cid[1:])
        if tau < 2:
            raise ValueError("series I starts at I2")
        return cid, "I", tau
    raise ValueError("unknown catalog id %r" % id)


def _series_data(cid):
    """(family, P or (p, q)) for the sym form of a catalog id."""
    fam = build_table1(cid)
    y = Poly.var("y", fam.ambient)
    if cid.startswith("II"):
        p = fam.entry(0, 1)
        q = fam.entry(0, 2) - y
        return fam, p, q
    P = fam.entry(1, 1) - y
    return fam, P, fam.entry(0, 1)


def odd_function_of(id, lam=None):
    """The odd two-variable function whose critical points carry the
    critical-point data of the catalog family.

    II series: substituting y=b^2, z=bc, w=c^2 into the composite
    determinant makes the (1,1) cofactor vanish and turns the determinant
    into -(b^3 + b q(c^2) - c p(c^2))^2; the returned function is
    G = b^3 + b q(c^2) - c p(c^2).  I series: the y-reduction of the
    determinant at z=w=0 has critical value -(lam_k^2 - xP(x))^2/(4x), and
    the returned function is G = a c^2 + a P(a^2) + 2 lam_k c.  Both
    identities are verified exactly on every call; lam=None keeps the
    deformation parameters symbolic.
    """
    cid, series, _ = _catalog_series(id)
    if series == "II":
        fam, p, q = _series_data(cid)
        amb = fam.ambient + ("b", "c")
        b = Poly.var("b", amb)
        c = Poly.var("c", amb)
        image = {"y": b * b, "z": b * c, "w": c * c}
        cof = (fam.entry(1, 1) * fam.entry(2, 2)
               - fam.entry(1, 2) * fam.entry(2, 1)).substitute(image)
        if not cof.is_zero():
            raise ArithmeticError(
                "cofactor identity failed for %s: the squared-variable "
                "substitution must kill the (1,1) cofactor" % cid)
        full = det(fam.matrix).substitute(image)
        G = b ** 3 + b * q.substitute({"w": c * c}) - c * p.substitute({"w": c * c})
        if full != -(G * G):
            raise ArithmeticError(
                "determinant identity failed for %s: expected -(G^2)" % cid)
    else:
        fam, P, m12 = _series_data(cid)
        amb = fam.ambient + ("a", "c", "t")
        a = Poly.var("a", amb)
        c = Poly.var("c", amb)
        t = Poly.var("t", amb)
        x = Poly.var("x", amb)
        y = Poly.var("y", amb)
        lamk = m12.extended(amb)
        Px = P.extended(amb)
        D = det(fam.matrix).substitute({"z": 0, "w": 0})
        if D != x * y * y + (x * Px - lamk * lamk) * y:
            raise ArithmeticError(
                "z=w=0 reduction identity failed for %s" % cid)
        # scaled critical-value bookkeeping: W(t) = t^2 + 2(xP - lam_k^2) t
        # satisfies 4x*D == W(2xy), is critical at t = N := lam_k^2 - xP,
        # and W(N) = -N^2, i.e. the critical value of D in y is -N^2/(4x)
        N = lamk * lamk - x * Px
        W = t * t + (x * Px - lamk * lamk) * t * 2
        if D * x * 4 != W.substitute({"t": x * y * 2}):
            raise ArithmeticError("value scaling identity failed for %s" % cid)
        if not W.diff("t").substitute({"t": N}).is_zero():
            raise ArithmeticError("critical-point identity failed for %s" % cid)
        if W.substitute({"t": N}) != -(N * N):
            raise ArithmeticError("critical-value identity failed for %s" % cid)
        # cleared square identity in the halved variable
        Na = N.substitute({"x": a * a})
        Pa = Px.substitute({"x": a * a})
        if -(Na * Na) != -((a * a * Pa - lamk * lamk) ** 2):
            raise ArithmeticError("square-root identity failed for %s" % cid)
        G = a * c * c + a * Pa + lamk * c * 2
    flip = {v: -Poly.var(v, G.vars) for v in G.used_vars()
            if v in ("a", "b", "c")}
    if G.substitute(flip) != -G:
        raise ArithmeticError("reduction of %s is not odd" % cid)
    if lam is not None:
        values = _lam_assignment(fam.params, lam)
        G = G.substitute(values)
    keep = tuple(v for v in ("a", "b", "c") if v in G.vars) + \
        tuple(p for p in fam.params if lam is None)
    return G.projected(keep)


# ---------------------------------------------------------------------------
# blow-up types and covering curves


def blowup_type(id):
    """Blow-up equation u^3 w + p(w) - u q(w) of a II-series family at
    lam=0 together with its singularity class, identified by the Milnor
    number among the expected candidates (5, 6, 7 -> A5, D6, E7)."""
    cid, series, _ = _catalog_series(id)
    if series != "II":
        raise ValueError("blow-up types are defined for the II series")
    fam, p, q = _series_data(cid)
    amb = fam.ambient + ("u",)
    u = Poly.var("u", amb)
    w = Poly.var("w", amb)
    F = u ** 3 * w + p.extended(amb) - u * q.extended(amb)
    partials = [F.diff(par) for par in fam.params]
    if not any(g == Poly.const(1) for g in partials):
        raise ArithmeticError(
            "blow-up deformation of %s misses the constant term" % cid)
    if not any(g == w for g in partials):
        raise ArithmeticError(
            "blow-up deformation of %s misses the linear w term" % cid)
    if not any(g == -u for g in partials):
        raise ArithmeticError(
            "blow-up deformation of %s misses the linear u term" % cid)
    F0 = F.substitute({par: 0 for par in fam.params}).projected(("u", "w"))
    mu = milnor_number(F0)
    labels = {5: "A5", 6: "D6", 7: "E7"}
    if mu not in labels:
        raise ArithmeticError(
            "unexpected blow-up Milnor number %r for %s" % (mu, cid))
    return F0, labels[mu]


def curve_cover(id, lam=None):
    """Centrally symmetric space curve double-covering the corank >= 2 locus
    of a catalog family: (2bc + c^2 + P(a^2), ab - lam_k) for the I series
    and (-ac + b^2 + q(c^2), ab - p(c^2)) for the II series."""
    from .lattice import ICISPresentation
    cid, series, _ = _catalog_series(id)
    if series == "II":
        fam, p, q = _series_data(cid)
        amb = fam.ambient + ("a", "b", "c")
        a, b, c = (Poly.var(v, amb) for v in ("a", "b", "c"))
        eq1 = -(a * c) + b * b + q.substitute({"w": c * c})
        eq2 = a * b - p.substitute({"w": c * c})
    else:
        fam, P, m12 = _series_data(cid)
        amb = fam.ambient + ("a", "b", "c")
        a, b, c = (Poly.var(v, amb) for v in ("a", "b", "c"))
        eq1 = b * c * 2 + c * c + P.extended(amb).substitute({"x": a * a})
        eq2 = a * b - m12.extended(amb)
    if lam is not None:
        values = _lam_assignment(fam.params, lam)
        eq1 = eq1.substitute(values)
        eq2 = eq2.substitute(values)
    keep = ("a", "b", "c") + tuple(p for p in fam.params
                                   if lam is None and p in
                                   (eq1.used_vars() | eq2.used_vars()))
    eq1 = eq1.projected(keep)
    eq2 = eq2.projected(keep)
    signs = tuple(-1 if v in ("a", "b", "c") else 1 for v in keep)
    return ICISPresentation(vars=keep, equations=(eq1, eq2),
                            involution=signs)


# ---------------------------------------------------------------------------
# critical values


@dataclass(frozen=True)
class CriticalValueReport:
    """Critical values of the composite function away from the zero level.

    values/multiplicities list the deduplicated values; zero_value flags a
    vanishing critical value and multiple_value a collision beyond the
    structural sign pairing -- either says the parameters sit on the full
    bifurcation diagram.  certified_exact is True when distinctness came
    from the squarefree degree of an exact values polynomial.
    """
    source: str
    route: str
    values: tuple
    multiplicities: tuple
    distinct_nonzero: int
    zero_value: bool
    multiple_value: bool
    certified_exact: bool


def _values_from_exact(source, route, vpoly):
    """Report from an exact univariate values polynomial (variable t)."""
    coeffs = list(vpoly.coeffs)
    if not coeffs:
        raise ArithmeticError("values polynomial degenerated to zero")
    zeros = 0
    while coeffs and coeffs[0] == 0:
        coeffs.pop(0)
        zeros += 1
    values, mults = [], []
    if zeros:
        values.append(0j)
        mults.append(zeros)
    if len(coeffs) > 1:
        for root, mult in roots_numeric(UnivariatePoly(coeffs)):
            values.append(root)
            mults.append(mult)
    nonzero = len(values) - (1 if zeros else 0)
    return CriticalValueReport(
        source=source, route=route, values=tuple(values),
        multiplicities=tuple(mults), distinct_nonzero=nonzero,
        zero_value=zeros > 0,
        multiple_value=any(m > 1 for v, m in zip(values, mults) if v != 0),
        certified_exact=True)


def _corner_values(fam, shape, lam):
    g = shape[1]
    values = _lam_assignment(("lam0",), lam if lam is not None else {})
    shift = values["lam0"]
    n_eff = fam.n // 2 if fam.kind == "sk" else fam.n
    used = [v for v in g.vars if v in g.used_vars()]
    tn = _fresh_var("t", used)
    sn = _fresh_var("s", used)
    st = (sn, tn)
    parts = {v: {} for v in used}
    for expo, c in g.terms.items():
        support = [(v, e) for v, e in zip(g.vars, expo) if e]
        if len(support) > 1:
            raise UnsupportedFamilyError(
                "corner critical values need a separable corner function "
                "(each monomial in at most one variable)")
        if support:
            v, e = support[0]
            parts[v][(e,)] = c
    # exact polynomial whose roots are the critical values of the corner
    # function: per-variable resultants composed by root addition
    acc = Poly.var(tn, (tn,))  # single root 0
    for v in used:
        gl = Poly((v,), parts[v])
        dgl = gl.diff(v)
        if dgl.degree() == 0:
            # linear piece: the corner function has no critical points
            return CriticalValueReport(
                source=fam.name, route="corner", values=(),
                multiplicities=(), distinct_nonzero=0, zero_value=False,
                multiple_value=False, certified_exact=True)
        tv = Poly.var(tn, (tn, v))
        vp = resultant(dgl.extended((tn, v)), tv - gl.extended((tn, v)), v)
        vp = vp.projected((tn,))
        a_s = acc.substitute({tn: Poly.var(sn, st)})
        v_shift = vp.substitute({tn: Poly.var(tn, st) - Poly.var(sn, st)})
        acc = resultant(a_s.extended(st), v_shift.extended(st), sn).projected((tn,))
    # composite values: ((s + lam)/n_eff)^n_eff per critical value s of the
    # corner function
    if acc.degree() < 1:
        raise ArithmeticError("corner values polynomial degenerated")
    s = Poly.var(sn, st)
    t = Poly.var(tn, st)
    if n_eff == 1:
        vdet = acc.substitute({tn: t - shift}).projected((tn,))
    else:
        target = t * (n_eff ** n_eff) - (s + shift) ** n_eff
        vdet = resultant(acc.substitute({tn: s}).extended(st), target, sn)
        vdet = vdet.projected((tn,))
    return _values_from_exact(fam.name, "corner",
                              UnivariatePoly.from_poly(vdet, tn))


def _boundary_values(fam, lam):
    red = reduce_boundary_critical(fam, lam=lam if lam is not None else {})
    bvar = red.boundary_var
    tn = _fresh_var("t", (bvar,))
    st = (bvar, tn)
    t = Poly.var(tn, st)
    E = red.critical_poly.extended(st)
    V = resultant(E, t - red.value_poly.extended(st), bvar).projected((tn,))
    return _values_from_exact(fam.name, "boundary",
                              UnivariatePoly.from_poly(V, tn))


def _series_i_values(cid, lam):
    fam, P, m12 = _series_data(cid)
    values = _lam_assignment(fam.params, lam)
    Pv = P.substitute(values).projected(("x",))
    lamk = m12.substitute(values).constant_term
    x = Poly.var("x", ("x",))
    N = Poly.const(lamk * lamk, ("x",)) - x * Pv
    D = x * N.diff("x") * 2 - N
    st = ("x", "t")
    target = Poly.var("t", st) * Poly.var("x", st) * 4 + (N * N).extended(st)
    V = resultant(D.extended(st), target, "x").projected(("t",))
    if not V.is_zero():
        return _values_from_exact(cid, "series-I",
                                  UnivariatePoly.from_poly(V, "t"))
    # fully degenerate parameters (lam_k = 0 makes x a common factor):
    # fall back on numeric evaluation away from x = 0
    Du = UnivariatePoly.from_poly(D, "x")
    coeffs = list(Du.coeffs)
    zero_value = False
    while coeffs and coeffs[0] == 0:
        coeffs.pop(0)
        zero_value = True
    vals = []
    if len(coeffs) > 1:
        for root, _ in roots_numeric(UnivariatePoly(coeffs)):
            nv = complex(N.evaluate({"x": root}))
            vals.append(-nv * nv / (4 * root))
    return _numeric_report(cid, "series-I", vals, zero_value=zero_value,
                           pairing=1)


def _numeric_report(source, route, vals, zero_value=False, pairing=1,
                    rel_tol=1e-8):
    scale = max([abs(v) for v in vals] + [1.0])
    clusters = []
    for v in sorted(vals, key=lambda z: (round(z.real, 9), round(z.imag, 9))):
        for i, (u, cnt) in enumerate(clusters):
            if abs(v - u) <= rel_tol * scale:
                clusters[i] = (u, cnt + 1)
                break
        else:
            clusters.append((v, 1))
    values, mults = [], []
    nonzero = 0
    multiple = False
    for u, cnt in clusters:
        values.append(u)
        mults.append(cnt)
        if abs(u) <= rel_tol * scale:
            zero_value = True
        else:
            nonzero += 1
            if cnt > pairing:
                multiple = True
    return CriticalValueReport(
        source=source, route=route, values=tuple(values),
        multiplicities=tuple(mults), distinct_nonzero=nonzero,
        zero_value=zero_value, multiple_value=multiple,
        certified_exact=False)


def _series_ii_values(cid, lam):
    G = odd_function_of(cid, lam=lam)
    Gb = G.diff("b")
    Gc = G.diff("c")
    if Gc.is_zero() or Gb.is_zero():
        raise ValueError(
            "parameters sit on the bifurcation diagram: a critical equation "
            "vanished identically")
    cpoints = []
    if len(Gc.coeffs_in("b")) - 1 >= 1:
        R = resultant(Gb, Gc, "b").projected(("c",))
        if R.is_zero():
            raise ValueError(
                "parameters sit on the bifurcation diagram: the critical "
                "equations share a component")
        croots = [r for r, _ in roots_numeric(UnivariatePoly.from_poly(R, "c"))]
    else:
        croots = [r for r, _ in
                  roots_numeric(UnivariatePoly.from_poly(Gc.projected(("c",)), "c"))]
    gc_scale = max([abs(complex(c)) for c in Gc.terms.values()] + [1.0])
    for c0 in croots:
        bcoeffs = [coef.evaluate({"c": c0}) for coef in Gb.coeffs_in("b")]
        for b0, _ in roots_numeric(UnivariatePoly(bcoeffs)):
            size = max(1.0, abs(b0), abs(c0)) ** (Gc.degree() or 1)
            if abs(Gc.evaluate({"b": b0, "c": c0})) <= 1e-7 * gc_scale * size:
                cpoints.append((b0, c0))
    vals = []
    for b0, c0 in cpoints:
        gv = G.evaluate({"b": b0, "c": c0})
        vals.append(-(gv * gv))
    return _numeric_report(cid, "series-II", vals, pairing=2)


def critical_values(target, lam=None):
    """Critical values of the composite function for the supported reduced
    shapes, with their parameters set to the rational values lam.

    target is a catalog id, a family matching the catalog, or a family in
    the reduced corner/boundary shape.  The report lists the deduplicated
    values off the zero level and flags parameter choices lying on the full
    bifurcation diagram (a vanishing critical value or a value collision).
    """
    if isinstance(target, str):
        cid, series, _ = _catalog_series(target)
        if lam is None:
            raise ValueError("critical values need rational parameter values")
        if series == "I":
            return _series_i_values(cid, lam)
        return _series_ii_values(cid, lam)
    if not isinstance(target, MatrixFamily):
        raise TypeError("target must be a catalog id or a MatrixFamily")
    cid = match_table1(target)
    if cid is not None:
        return critical_values(cid, lam=lam)
    germ = target.specialize_params()
    shape = recognize_reduced_shape(germ)
    if shape is not None and shape[0] == "corner":
        return _corner_values(target, shape, lam)
    if shape is not None and shape[0] == "boundary":
        return _boundary_values(target, lam)
    raise UnsupportedFamilyError(
        "critical values are implemented for the catalog families and the "
        "reduced corner/boundary shapes")
