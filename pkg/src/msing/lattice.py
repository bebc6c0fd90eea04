"""Integer lattices of vanishing cycles and their reflection operators.

The smoothing of a corank >= 2 symmetric family is double-covered by an
involution-symmetric complete intersection; cycles upstairs come in two
flavours: short (invariant Morse cycles) and long (sums of a Morse cycle and
its involution image).  Their self-intersections depend only on the
effective dimension s_eff mod 4, and the monodromy acts through reflections
with a halved pairing in the long case.  This module implements that
formula layer on explicitly given lattices, plus the double-cover
presentation itself on the equation level.

Nothing here computes homology: lattices are supplied by the caller (or a
file) and the operators are evaluated exactly over the integers.
"""

from dataclasses import dataclass

from .algebra import Poly

__all__ = ["Lattice", "ICISPresentation", "LatticeFormatError",
           "self_intersection", "pl_operator", "double_cover",
           "parse_lattice_file"]


CYCLE_TAGS = ("short", "long", "plain")


def self_intersection(tag, s_eff):
    """Self-intersection of a short or long cycle in effective dimension
    s_eff: zero when s_eff is even, (2, 4) when s_eff = 1 mod 4 and
    (-2, -4) when s_eff = 3 mod 4."""
    if tag not in ("short", "long"):
        raise ValueError("self-intersections are prescribed for short and "
                         "long cycles, not %r" % tag)
    s = int(s_eff)
    if s % 2 == 0:
        return 0
    base = 2 if s % 4 == 1 else -2
    return base if tag == "short" else 2 * base


@dataclass(frozen=True)
class Lattice:
    """Basis of cycle classes with their integer Gram matrix.

    tags labels every basis cycle as short, long or plain (plain classes
    carry no prescribed self-intersection and admit no reflection).  The
    Gram matrix must be symmetric for odd s_eff and skew-symmetric for even
    s_eff, and tagged diagonals must match the self-intersection table.
    """
    rank: int
    gram: tuple
    tags: tuple
    s_eff: int

    def __post_init__(self):
        if self.rank < 1:
            raise ValueError("rank must be positive")
        if len(self.gram) != self.rank or any(len(r) != self.rank for r in self.gram):
            raise ValueError("Gram matrix must be %d x %d" % (self.rank, self.rank))
        for row in self.gram:
            for c in row:
                if not isinstance(c, int):
                    raise ValueError("Gram entries must be integers")
        sym = self.s_eff % 2 == 1
        for i in range(self.rank):
            for j in range(self.rank):
                a, b = self.gram[i][j], self.gram[j][i]
                if sym and a != b:
                    raise ValueError("Gram matrix must be symmetric for odd "
                                     "effective dimension")
                if not sym and a != -b:
                    raise ValueError("Gram matrix must be skew-symmetric for "
                                     "even effective dimension")
        if len(self.tags) != self.rank:
            raise ValueError("need one tag per basis cycle")
        for i, tag in enumerate(self.tags):
            if tag not in CYCLE_TAGS:
                raise ValueError("unknown cycle tag %r" % tag)
            if tag in ("short", "long"):
                want = self_intersection(tag, self.s_eff)
                if self.gram[i][i] != want:
                    raise ValueError(
                        "cycle %d is tagged %s but has self-intersection %d "
                        "(expected %d at s_eff = %d)"
                        % (i, tag, self.gram[i][i], want, self.s_eff))

    def pairing(self, i, j):
        return self.gram[i][j]


def pl_operator(lattice, index):
    """Matrix of the reflection in basis cycle `index`:
    c -> c + eps (c o e) e for short cycles and c -> c + eps (c o e) e/2 for
    long ones, eps = (-1)^(s_eff (s_eff+1)/2).  Verified to preserve the
    Gram form exactly."""
    if not 0 <= index < lattice.rank:
        raise ValueError("no basis cycle %r" % index)
    tag = lattice.tags[index]
    if tag not in ("short", "long"):
        raise ValueError("reflections act in short or long cycles, not %r" % tag)
    s = lattice.s_eff
    eps = -1 if (s * (s + 1) // 2) % 2 else 1
    rank = lattice.rank
    rows = [[1 if i == j else 0 for j in range(rank)] for i in range(rank)]
    for j in range(rank):
        pairing = lattice.gram[j][index]
        if tag == "long":
            if pairing % 2:
                raise ValueError("non-even pairing with long cycle")
            pairing //= 2
        rows[index][j] += eps * pairing
    # exact check that the operator preserves the intersection form
    g = lattice.gram
    for i in range(rank):
        for j in range(rank):
            acc = 0
            for a in range(rank):
                for b in range(rank):
                    acc += rows[a][i] * g[a][b] * rows[b][j]
            if acc != g[i][j]:
                raise ArithmeticError(
                    "reflection failed to preserve the intersection form")
    return tuple(tuple(r) for r in rows)


# ---------------------------------------------------------------------------
# double covers


@dataclass(frozen=True)
class ICISPresentation:
    """Complete-intersection presentation with a sign involution.

    involution lists +1/-1 per ambient variable; every equation must map to
    plus or minus an equation of the presentation under the sign change.
    """
    vars: tuple
    equations: tuple
    involution: tuple

    def __post_init__(self):
        if len(self.involution) != len(self.vars):
            raise ValueError("need one sign per variable")
        if any(s not in (1, -1) for s in self.involution):
            raise ValueError("involution signs must be +1 or -1")
        flip = {v: -Poly.var(v, self.vars)
                for v, s in zip(self.vars, self.involution) if s == -1}
        for eq in self.equations:
            extra = eq.used_vars() - set(self.vars)
            if extra:
                raise ValueError("equation uses undeclared variables %s"
                                 % sorted(extra))
            img = eq.substitute(flip)
            if not any(img == f or img == -f for f in self.equations):
                raise ValueError("equations are not involution-invariant")

    @property
    def flipped_vars(self):
        return tuple(v for v, s in zip(self.vars, self.involution) if s == -1)


def _signed_bare(p):
    """(name, sign) when p is plus or minus a single coordinate."""
    if len(p.terms) != 1:
        return None
    (expo, c), = p.terms.items()
    if sum(expo) != 1 or c not in (1, -1):
        return None
    name = next(v for v, e in zip(p.vars, expo) if e)
    return name, int(c)


def double_cover(fam, reduce=False):
    """Involution-symmetric complete intersection double-covering the
    corank >= n-1 locus of a symmetric family: equations
    m_ij(u) = a_i a_j for i <= j with the involution a -> -a.

    With reduce=True, entries that are plus or minus a bare coordinate are
    eliminated by substituting their quadric expression, reproducing the
    hypersurface models of the corank 2 examples.
    """
    if fam.kind != "sym":
        raise ValueError("the double cover is a symmetric-family construction")
    n = fam.n
    taken = set(fam.ambient)
    base = ("a", "b") if n == 2 else tuple("a%d" % (i + 1) for i in range(n))
    anames = []
    for name in base:
        while name in taken:
            name = "_" + name
        anames.append(name)
        taken.add(name)
    anames = tuple(anames)
    ambient = fam.ambient + anames
    avar = [Poly.var(name, ambient) for name in anames]
    slots = [(i, j) for i in range(n) for j in range(i, n)]
    eqs = [fam.entry(i, j).extended(ambient) - avar[i] * avar[j]
           for (i, j) in slots]
    eliminated = {}
    if reduce:
        live = list(range(len(slots)))
        for pos, (i, j) in enumerate(slots):
            b = _signed_bare(fam.entry(i, j))
            if b is None:
                continue
            name, sign = b
            if name in eliminated or name in anames:
                continue
            eliminated[name] = avar[i] * avar[j] * sign
            live.remove(pos)
        if eliminated:
            eqs = [eqs[pos].substitute(eliminated) for pos in live]
    kept = tuple(v for v in ambient if v not in eliminated)
    eqs = tuple(eq.projected(kept) for eq in eqs)
    signs = tuple(-1 if v in anames else 1 for v in kept)
    return ICISPresentation(vars=kept, equations=eqs, involution=signs)


# ---------------------------------------------------------------------------
# file format


class LatticeFormatError(ValueError):
    pass


def parse_lattice_file(text):
    """Parse the line-oriented lattice format:

    rank R
    seff S
    gram
    <R rows of R integers>
    tags
    <R tokens>
    """
    rank = s_eff = None
    gram_rows = []
    tags = []
    mode = None
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        head = line.split()[0]
        try:
            if head == "rank":
                rank = int(line.split()[1])
                mode = None
            elif head == "seff":
                s_eff = int(line.split()[1])
                mode = None
            elif head == "gram":
                mode = "gram"
            elif head == "tags":
                mode = "tags"
            elif mode == "gram":
                gram_rows.append(tuple(int(tok) for tok in line.split()))
            elif mode == "tags":
                tags.extend(line.split())
            else:
                raise LatticeFormatError("unknown directive %r" % head)
        except LatticeFormatError:
            raise
        except (ValueError, IndexError):
            raise LatticeFormatError("line %d: cannot parse %r" % (lineno, raw)) from None
    if rank is None or s_eff is None:
        raise LatticeFormatError("missing rank or seff line")
    if len(gram_rows) != rank:
        raise LatticeFormatError("expected %d gram rows, got %d" % (rank, len(gram_rows)))
    if len(tags) != rank:
        raise LatticeFormatError("expected %d tags, got %d" % (rank, len(tags)))
    try:
        return Lattice(rank=rank, gram=tuple(gram_rows), tags=tuple(tags),
                       s_eff=s_eff)
    except ValueError as e:
        raise LatticeFormatError(str(e)) from None
