"""Command-line front end.

Every command prints a line-oriented report of `key = value` pairs ending
with a status line; `status` is one of ok, check-failed or input-error and
maps to exit codes 0, 1 and 2.  Reports are byte-identical for identical
inputs and seeds.  `--porcelain` pins the current output format (which is
already the stable one, so the flag is accepted everywhere and changes
nothing today).

The verification suites recompute published invariants of the family
catalog; any failing check flips the exit code to 1 and is reported with
the computed and expected values, sorted by check id.
"""

import argparse
import math
import os
import random
import sys
from fractions import Fraction

from .algebra import parse_poly
from .critical import (blowup_type, critical_values, curve_cover,
                       link_hessian_check, ll_index, odd_function_of)
from .families import (MatrixFamily, catalog_build, catalog_ids,
                       family_to_text, parse_family_file, solve_weights,
                       verify_euler_identity)
from .lattice import (Lattice, double_cover, parse_lattice_file, pl_operator,
                      self_intersection)
from .quotient import (boundary_algebra_dim, icis_curve_milnor, milnor_number,
                       mu_delta)
from .skew import (RealityCheckError, parse_matrix_file, random_skew,
                   skew_eigenvalues, sktr, verify_reality)
from .tangent import tjurina

__all__ = ["Report", "run", "main", "verify_suite"]


class Report:
    """Ordered key = value lines with a final status line."""

    def __init__(self):
        self.lines = []
        self.status = "ok"
        self.raw = None

    def add(self, key, value):
        self.lines.append((key, _format_value(value)))

    def fail(self):
        self.status = "check-failed"

    def invalid(self, message):
        self.lines = [("error", str(message))]
        self.status = "input-error"

    @property
    def exit_code(self):
        return {"ok": 0, "check-failed": 1, "input-error": 2}[self.status]

    def emit(self, stream=None):
        stream = stream or sys.stdout
        if self.raw is not None:
            stream.write(self.raw)
            return
        for key, value in self.lines:
            stream.write("%s = %s\n" % (key, value))
        stream.write("status = %s\n" % self.status)


def _format_value(v):
    if isinstance(v, bool):
        return "yes" if v else "no"
    if isinstance(v, float):
        if v == math.inf:
            return "inf"
        return "%.12g" % v
    if isinstance(v, complex):
        return _format_complex(v)
    if isinstance(v, Fraction):
        return str(v)
    return str(v)


def _format_complex(z):
    return "%.12g%+.12gi" % (z.real, z.imag)


def _read_text(path):
    if path == "-":
        return sys.stdin.read()
    with open(path, "r", encoding="utf-8") as fh:
        return fh.read()


def _load_family(path):
    return parse_family_file(_read_text(path))


def _degree_cap():
    raw = os.environ.get("MSING_DEGREE_CAP")
    if raw is None:
        return None
    try:
        return int(raw)
    except ValueError:
        raise ValueError("MSING_DEGREE_CAP must be an integer, got %r"
                         % raw) from None


def _parse_set(items):
    out = {}
    for item in items or ():
        name, sep, val = item.partition("=")
        if not sep or not name:
            raise ValueError("--set expects name=value, got %r" % item)
        try:
            out[name] = Fraction(val)
        except (ValueError, ZeroDivisionError):
            raise ValueError("--set %s: %r is not a rational value"
                             % (name, val)) from None
    return out


# ---------------------------------------------------------------------------
# commands


def _cmd_qh(ns, rep):
    fam = _load_family(ns.file)
    ws = solve_weights(fam)
    if ws is None:
        rep.add("quasi_homogeneous", "no")
        return
    rep.add("quasi_homogeneous", "yes")
    for v in fam.vars:
        rep.add("w_%s" % v, ws.var_weights[v])
    for p in sorted(ws.param_weights):
        rep.add("w_%s" % p, ws.param_weights[p])
    for i, d in enumerate(ws.delta):
        rep.add("delta_%d" % i, d)
    if fam.kind == "sq":
        for j, d in enumerate(ws.delta_prime):
            rep.add("delta_prime_%d" % j, d)
    euler = verify_euler_identity(fam, ws)
    rep.add("euler_identity", "pass" if euler else "fail")
    if not euler:
        rep.fail()


def _cmd_tjurina(ns, rep):
    fam = _load_family(ns.file)
    tau = tjurina(fam, ns.equiv, degree_cap=_degree_cap(),
                  truncation_order=ns.truncation)
    rep.add("equiv", ns.equiv)
    rep.add("tau", tau)


def _cmd_mu_delta(ns, rep):
    fam = _load_family(ns.file)
    rep.add("mu_delta", mu_delta(fam, degree_cap=_degree_cap()))


def _cmd_milnor(ns, rep):
    g = parse_poly(ns.expr)
    rep.add("mu", milnor_number(g, degree_cap=_degree_cap()))


def _cmd_boundary_mu(ns, rep):
    h = parse_poly(ns.expr)
    dim = boundary_algebra_dim(h, ns.boundary, ns.multiplier,
                               degree_cap=_degree_cap())
    rep.add("boundary_var", ns.boundary)
    rep.add("multiplier", ns.multiplier)
    rep.add("dim", dim)


def _cmd_catalog(ns, rep):
    if ns.action == "list":
        ids = catalog_ids()
        rep.add("count", len(ids))
        for i, cid in enumerate(ids):
            rep.add("id_%02d" % i, cid)
        return
    if not ns.id:
        raise ValueError("catalog build needs a family id")
    fam = catalog_build(ns.id, ns.k)
    rep.raw = family_to_text(fam)


def _cmd_ll_index(ns, rep):
    if ns.table1:
        rep.add("index", ll_index(ns.table1))
        return
    if not (ns.family and ns.rank and ns.size and ns.kind):
        raise ValueError("ll-index needs --table1 ID or all of "
                         "--family/--rank/--size/--kind")
    rep.add("index", ll_index((ns.family, ns.rank, ns.size, ns.kind)))


def _cmd_critical_values(ns, rep):
    fam = _load_family(ns.file)
    lam = _parse_set(ns.set) or None
    report = critical_values(fam, lam=lam)
    rep.add("route", report.route)
    rep.add("count", len(report.values))
    rep.add("distinct_nonzero", report.distinct_nonzero)
    rep.add("zero_value", report.zero_value)
    rep.add("multiple_value", report.multiple_value)
    rep.add("certified_exact", report.certified_exact)
    for i, (v, m) in enumerate(zip(report.values, report.multiplicities)):
        rep.add("value_%d" % i, v)
        rep.add("mult_%d" % i, m)


def _cmd_skew_eig(ns, rep):
    m = parse_matrix_file(_read_text(ns.matfile))
    rep.add("size", m.size)
    rep.add("sktr", sktr(m))
    for i, z in enumerate(skew_eigenvalues(m)):
        rep.add("eig_%d" % i, z)


def _cmd_lift(ns, rep):
    fam = _load_family(ns.file)
    pres = double_cover(fam, reduce=ns.reduce)
    rep.add("vars", " ".join(pres.vars))
    rep.add("involution", " ".join("%+d" % s for s in pres.involution))
    rep.add("equations", len(pres.equations))
    for i, eq in enumerate(pres.equations):
        rep.add("eq_%d" % i, eq)


def _cmd_lattice(ns, rep):
    lat = parse_lattice_file(_read_text(ns.latfile))
    P = pl_operator(lat, ns.reflect)
    rep.add("rank", lat.rank)
    rep.add("seff", lat.s_eff)
    rep.add("cycle", ns.reflect)
    rep.add("tag", lat.tags[ns.reflect])
    for i, row in enumerate(P):
        rep.add("row_%d" % i, " ".join(str(c) for c in row))


def _cmd_verify(ns, rep):
    result = verify_suite(ns.suite, seed=ns.seed, samples=ns.samples)
    rep.lines = result.lines
    rep.status = result.status


# ---------------------------------------------------------------------------
# verification suites


_CATALOG_TAU = {
    "L_sym_2": 1, "L_sym_3": 1, "L_sq_2": 1, "L_sk_4": 1,
    "A1_sym_2_1": 1, "A1_sym_3_2": 1, "A1_sq_2_1": 1, "A1_sk_4_1": 1,
    "bd_sym_3_B2": 2, "bd_sym_3_B3": 3, "bd_sym_3_A2": 2,
    "bd_sym_3_C3": 3, "bd_sym_3_F4": 4, "bd_sk_4_B2": 2,
    "I2": 2, "I3": 3, "I4": 4, "II4": 4, "II5": 5, "II6": 6,
    "I2_sq": 2, "I3_sq": 3, "I4_sq": 4, "II4_sq": 4, "II5_sq": 5,
    "II6_sq": 6,
}

_TABLE1_TAU = {"I2": 2, "I3": 3, "I4": 4, "II4": 4, "II5": 5, "II6": 6}


class _Checks:
    def __init__(self):
        self.items = []

    def run(self, cid, fn, want, describe=None):
        try:
            got = fn()
            ok = bool(got == want) if describe is None else describe(got)
        except Exception as e:  # a crashed check is a failed check
            got = "error: %s" % e
            ok = False
        self.items.append((cid, ok, got, want))
        return ok

    def fill(self, rep):
        failures = 0
        for cid, ok, got, want in sorted(self.items):
            if ok:
                rep.add(cid, "pass [got %s, want %s]"
                        % (_format_value(got), _format_value(want)))
            else:
                failures += 1
                rep.add(cid, "fail [got %s, want %s]"
                        % (_format_value(got), _format_value(want)))
        rep.add("checks", len(self.items))
        rep.add("failures", failures)
        if failures:
            rep.fail()
        return failures


def _corrupted(fam):
    """Deliberately damage one matrix entry (harness self-test hook)."""
    i, j = (0, 1) if fam.kind == "sk" else (0, 0)
    rows = [list(r) for r in fam.matrix.rows]
    rows[i][j] = rows[i][j] * rows[i][j] if not rows[i][j].is_zero() \
        else rows[i][j]
    if fam.kind == "sk":
        rows[j][i] = -rows[i][j]
    elif fam.kind == "sym":
        rows[j][i] = rows[i][j]
    matrix = type(fam.matrix)(fam.kind, rows)
    return MatrixFamily(name=fam.name, kind=fam.kind, n=fam.n, vars=fam.vars,
                        params=fam.params, matrix=matrix,
                        boundary_var=fam.boundary_var)


def _suite_catalog(checks, seed, samples):
    corrupt = os.environ.get("MSING_CORRUPT_CATALOG", "")
    for cid in catalog_ids():
        fam = catalog_build(cid)
        if corrupt and (corrupt == cid or corrupt == "1"
                        and cid == catalog_ids()[0]):
            fam = _corrupted(fam)

        def taus(fam=fam):
            cap = _degree_cap()
            sl = tjurina(fam, "sl", degree_cap=cap)
            gl = tjurina(fam, "gl", degree_cap=cap)
            if sl != gl:
                return "sl=%s gl=%s" % (sl, gl)
            return sl
        checks.run("catalog_tau_%s" % cid, taus, _CATALOG_TAU[cid])


def _suite_table1(checks, seed, samples):
    for cid, tau in _TABLE1_TAU.items():
        fam = catalog_build(cid)
        checks.run("table1_tau_%s" % cid,
                   lambda fam=fam: tjurina(fam, "sl"), tau)
        checks.run("table1_mu_odd_%s" % cid,
                   lambda cid=cid: milnor_number(odd_function_of(cid, lam=0)),
                   2 * tau)

        def curve_mu(cid=cid):
            pres = curve_cover(cid, lam=0)
            return icis_curve_milnor(pres.equations[0], pres.equations[1])
        checks.run("table1_mu_curve_%s" % cid, curve_mu, 2 * tau + 1)

        def identity(cid=cid):
            odd_function_of(cid)  # verifies the determinantal identities
            if cid.startswith("II"):
                blowup_type(cid)
            return True
        checks.run("table1_identity_%s" % cid, identity, True)


def _suite_links(checks, seed, samples):
    cases = [("sym", n) for n in range(2, 6)] + \
            [("sq", n) for n in range(2, 6)] + \
            [("sk", n) for n in (4, 6)]
    for kind, n in cases:
        checks.run("links_hessian_%s_%d" % (kind, n),
                   lambda kind=kind, n=n: link_hessian_check(kind, n)[1],
                   True)


def _suite_pq(checks, seed, samples, rep_extra):
    worst = [0.0]
    for k in (2, 3, 4):
        def reality(k=k):
            v = verify_reality(k, samples, seed=seed + (k - 2))
            worst[0] = max(worst[0], v)
            return v
        checks.run("pq_reality_k%d" % k, reality, "<= 1e-08",
                   describe=lambda got: isinstance(got, float) and got <= 1e-8)

    def control():
        rng = random.Random(seed + 3)
        top = 0.0
        for _ in range(min(samples, 50)):
            m = random_skew(4, random.Random(rng.randrange(2 ** 63)))
            top = max(top, max(abs(z.imag) for z in skew_eigenvalues(m)))
        return top
    checks.run("pq_control_nonreal", control, "> 1e-03",
               describe=lambda got: isinstance(got, float) and got > 1e-3)
    rep_extra.append(("max_im", "%.3e" % worst[0]))


def _xa2_family():
    text = ("family xa2\nkind sym\nsize 2\nvars x y z\n"
            "entry 1 1 : z^3 - z - x\nentry 1 2 : y\nentry 2 2 : x\n")
    return parse_family_file(text)


def _suite_lattice(checks, seed, samples):
    table = [("short", 3, -2), ("long", 3, -4), ("short", 4, 0),
             ("long", 4, 0), ("short", 5, 2), ("long", 5, 4),
             ("short", 6, 0), ("long", 6, 0)]
    for tag, s, want in table:
        checks.run("lattice_selfint_s%d_%s" % (s, tag),
                   lambda tag=tag, s=s: self_intersection(tag, s), want)

    def involutive(gram, tags, s):
        lat = Lattice(rank=len(gram), gram=gram, tags=tags, s_eff=s)
        for idx, tag in enumerate(tags):
            if tag == "plain":
                continue
            P = pl_operator(lat, idx)  # raises if the form is not preserved
            r = lat.rank
            sq = [[sum(P[i][a] * P[a][j] for a in range(r)) for j in range(r)]
                  for i in range(r)]
            if sq != [[1 if i == j else 0 for j in range(r)] for i in range(r)]:
                return False
        return True

    checks.run("lattice_pl_s3",
               lambda: involutive(((-2, 1), (1, -2)), ("short", "short"), 3),
               True)
    checks.run("lattice_pl_s3_long",
               lambda: involutive(((-4, 2), (2, -2)), ("long", "short"), 3),
               True)
    checks.run("lattice_pl_s5",
               lambda: involutive(((2, 1), (1, 2)), ("short", "short"), 5),
               True)
    checks.run("lattice_pl_s5_long",
               lambda: involutive(((4, 2), (2, 2)), ("long", "short"), 5),
               True)

    def xa2_cover():
        pres = double_cover(_xa2_family(), reduce=True)
        target = parse_poly("z^3 - z - a^2 - b^2", ("z", "a", "b"))
        eq = pres.equations[0]
        return len(pres.equations) == 1 and (eq == target or eq == -target)
    checks.run("lattice_cover_xa2", xa2_cover, True)


def verify_suite(name, seed=0, samples=100):
    """Run one verification suite and return its Report."""
    rep = Report()
    checks = _Checks()
    extra = []
    if name == "catalog":
        _suite_catalog(checks, seed, samples)
    elif name == "table1":
        _suite_table1(checks, seed, samples)
    elif name == "links":
        _suite_links(checks, seed, samples)
    elif name == "pq":
        _suite_pq(checks, seed, samples, extra)
    elif name == "lattice":
        _suite_lattice(checks, seed, samples)
    else:
        raise ValueError("unknown suite %r" % name)
    checks.fill(rep)
    for key, value in extra:
        rep.add(key, value)
    return rep


# ---------------------------------------------------------------------------
# argument parsing


def _build_parser():
    parser = argparse.ArgumentParser(
        prog="msing",
        description="Matrix-family singularity toolkit")
    parser.add_argument("--porcelain", action="store_true",
                        help="freeze the report format (already the default)")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("qh", help="solve quasi-homogeneous weights")
    p.add_argument("file")
    p.set_defaults(handler=_cmd_qh)

    p = sub.add_parser("tjurina", help="deformation codimension")
    p.add_argument("file")
    p.add_argument("--equiv", choices=("sl", "gl"), default="sl")
    p.add_argument("--truncation", type=int, default=None,
                   help="truncation order for non-quasi-homogeneous input")
    p.set_defaults(handler=_cmd_tjurina)

    p = sub.add_parser("mu-delta", help="discriminantal Milnor number")
    p.add_argument("file")
    p.set_defaults(handler=_cmd_mu_delta)

    p = sub.add_parser("milnor", help="Milnor number of a function germ")
    p.add_argument("expr")
    p.set_defaults(handler=_cmd_milnor)

    p = sub.add_parser("boundary-mu", help="boundary algebra dimension")
    p.add_argument("expr")
    p.add_argument("--multiplier", type=int, required=True)
    p.add_argument("--boundary", default="x",
                   help="name of the boundary variable (default x)")
    p.set_defaults(handler=_cmd_boundary_mu)

    p = sub.add_parser("catalog", help="list or build catalog families")
    p.add_argument("action", choices=("list", "build"))
    p.add_argument("id", nargs="?")
    p.add_argument("--k", type=int, default=None)
    p.set_defaults(handler=_cmd_catalog)

    p = sub.add_parser("verify", help="run a verification suite")
    p.add_argument("suite", choices=("catalog", "table1", "links", "pq",
                                     "lattice"))
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--samples", type=int, default=100)
    p.set_defaults(handler=_cmd_verify)

    p = sub.add_parser("ll-index", help="covering degree of the eigenvalue map")
    p.add_argument("--table1", default=None, metavar="ID")
    p.add_argument("--family", default=None,
                   help="Weyl family letter A/B/C/D/E/F")
    p.add_argument("--rank", type=int, default=None)
    p.add_argument("--size", type=int, default=None, help="matrix size n")
    p.add_argument("--kind", choices=("sym", "sq", "sk"), default=None)
    p.set_defaults(handler=_cmd_ll_index)

    p = sub.add_parser("critical-values",
                       help="critical values of the determinant composite")
    p.add_argument("file")
    p.add_argument("--set", action="append", metavar="NAME=VALUE",
                   help="rational parameter value, repeatable")
    p.set_defaults(handler=_cmd_critical_values)

    p = sub.add_parser("skew-eig", help="skew eigenvalues of a matrix file")
    p.add_argument("matfile")
    p.set_defaults(handler=_cmd_skew_eig)

    p = sub.add_parser("lift", help="double cover of a symmetric family")
    p.add_argument("file")
    p.add_argument("--reduce", action="store_true")
    p.set_defaults(handler=_cmd_lift)

    p = sub.add_parser("lattice", help="reflection operator on a lattice file")
    p.add_argument("latfile")
    p.add_argument("--reflect", type=int, required=True, metavar="CYCLE")
    p.set_defaults(handler=_cmd_lattice)

    return parser


def run(argv):
    """Execute one command line; returns the exit code (0/1/2)."""
    parser = _build_parser()
    try:
        ns = parser.parse_args(argv)
    except SystemExit as e:
        return 0 if e.code in (0, None) else 2
    rep = Report()
    try:
        ns.handler(ns, rep)
    except (ValueError, TypeError, ArithmeticError, OSError) as e:
        rep.invalid(e)
    rep.emit()
    return rep.exit_code


def main(argv=None):
    return run(sys.argv[1:] if argv is None else argv)
