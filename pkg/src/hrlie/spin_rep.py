"""Finite-dimensional representations of Spin(n,1) with half-integral weights.

The complexified Lie algebra of Spin(n,1) is so(n+1,C): type B_{n/2} for
even n and D_{(n+1)/2} for odd n.  Weights are written in the usual
orthogonal coordinates, and a representation is described by a
multiplicity map from highest weights (or the tags S, S1, S2) to counts.

Three daggers act on representations: complex conjugation (CONJ), the
dual (DUAL) and their composite (CONJDUAL).  The index of a self-dagger
irreducible is the sign lambda in (f^dagger)^delta f = lambda id.  It is
computed two ways: from the real type of a Clifford algebra, and by
solving for invariant forms on an explicit matrix model.
"""

from collections import Counter
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from itertools import combinations

from .clifford import clifford_type
from .errors import HRError
from .exact_algebra import (COMPLEX, ExactMatrix, Quaternion, kron, mat_mul, rank, realify,
                            nullspace)

CONJ, DUAL, CONJDUAL, ID = "CONJ", "DUAL", "CONJDUAL", "ID"
DAGGERS = (CONJ, DUAL, CONJDUAL)
DELTA = {CONJ: 1, DUAL: -1}

ALL, NONE = "ALL", "NONE"
SYMMETRIC, ALTERNATING = "SYMMETRIC", "ALTERNATING"
REAL_STRUCTURE, QUATERNIONIC_STRUCTURE = "REAL_STRUCTURE", "QUATERNIONIC_STRUCTURE"

HALF = Fraction(1, 2)


def _check_dagger(d, allowed=DAGGERS):
    if d not in allowed:
        raise HRError("USAGE", f"dagger must be one of {', '.join(allowed)}")


# ------------------------------------------------------------ dominant weights

@dataclass(frozen=True)
class DominantWeight:
    letter: str        # "B", "C" or "D"
    coords: tuple

    def __post_init__(self):
        c = tuple(Fraction(x) for x in self.coords)
        object.__setattr__(self, "coords", c)
        if self.letter not in "BCD" or not c:
            raise HRError("NON_DOMINANT", f"unsupported weight type {self.letter}{len(c)}")
        dens = {x.denominator for x in c}
        if not dens <= {1, 2} or len(dens) > 1:
            raise HRError("NON_DOMINANT", "coordinates must be all integral or all half-integral")
        if self.letter == "C" and dens != {1}:
            raise HRError("NON_DOMINANT", "type C weights are integral")
        head = c[:-1] if self.letter == "D" else c
        if any(head[i] < head[i + 1] for i in range(len(head) - 1)):
            raise HRError("NON_DOMINANT", f"{self} is not decreasing")
        if self.letter == "D":
            if len(c) > 1 and c[-2] < abs(c[-1]):
                raise HRError("NON_DOMINANT", f"{self} violates l_(r-1) >= |l_r|")
        elif c[-1] < 0:
            raise HRError("NON_DOMINANT", f"{self} has a negative last coordinate")

    @property
    def rank(self):
        return len(self.coords)

    def is_half_integral(self):
        return self.coords[0].denominator == 2

    def with_last_flipped(self):
        return DominantWeight(self.letter, self.coords[:-1] + (-self.coords[-1],))

    def __str__(self):
        return "(" + ",".join(str(x) for x in self.coords) + ")"

    def to_json(self):
        return {"type": f"{self.letter}{self.rank}", "coords": [str(x) for x in self.coords]}


def parse_weight(letter, rank_, text):
    """'1/2,1/2,-1/2' or '(3/2, 1/2)' -> DominantWeight."""
    parts = [t for t in text.strip().strip("()[]").replace(" ", "").split(",") if t]
    if len(parts) != rank_:
        raise HRError("USAGE", f"expected {rank_} coordinates, got {len(parts)}")
    return DominantWeight(letter.upper(), tuple(Fraction(t) for t in parts))


def rho_vector(letter, r):
    if letter == "B":
        return tuple(Fraction(2 * (r - i) - 1, 2) for i in range(r))
    if letter == "C":
        return tuple(Fraction(r - i) for i in range(r))
    if letter == "D":
        return tuple(Fraction(r - 1 - i) for i in range(r))
    raise HRError("USAGE", f"no rho for type {letter}")


def positive_roots(letter, r):
    out = []
    for i, j in combinations(range(r), 2):
        for s in (1, -1):
            v = [0] * r
            v[i], v[j] = 1, s
            out.append(tuple(v))
    for i in range(r):
        v = [0] * r
        if letter == "B":
            v[i] = 1
            out.append(tuple(v))
        elif letter == "C":
            v[i] = 2
            out.append(tuple(v))
    return out


def simple_roots(letter, r):
    out = []
    for i in range(r - 1):
        v = [0] * r
        v[i], v[i + 1] = 1, -1
        out.append(tuple(v))
    v = [0] * r
    if letter == "B":
        v[-1] = 1
    elif letter == "C":
        v[-1] = 2
    else:
        if r == 1:
            return out
        v[-2], v[-1] = 1, 1
    out.append(tuple(v))
    return out


def _dot(a, b):
    return sum(x * y for x, y in zip(a, b))


def weyl_dimension(letter, r, lam):
    """Weyl's product formula, exact."""
    if not isinstance(lam, DominantWeight):
        lam = DominantWeight(letter, lam)
    if lam.letter != letter or lam.rank != r:
        raise HRError("NON_DOMINANT", f"weight {lam} is not a {letter}{r} weight")
    rho = rho_vector(letter, r)
    shifted = tuple(a + b for a, b in zip(lam.coords, rho))
    num, den = Fraction(1), Fraction(1)
    for a in positive_roots(letter, r):
        num *= _dot(shifted, a)
        den *= _dot(rho, a)
    d = num / den
    assert d.denominator == 1
    return int(d)


def freudenthal(letter, r, lam):
    """All weight multiplicities of the irreducible module with highest weight lam."""
    if not isinstance(lam, DominantWeight):
        lam = DominantWeight(letter, lam)
    top = lam.coords
    rho = rho_vector(letter, r)
    pos = positive_roots(letter, r)
    simple = simple_roots(letter, r)
    plus_rho = lambda v: tuple(a + b for a, b in zip(v, rho))
    norm_top = _dot(plus_rho(top), plus_rho(top))
    mult = {top: 1}
    layer = [top]
    while layer:
        candidates = []
        seen = set()
        for nu in layer:
            for a in simple:
                mu = tuple(x - y for x, y in zip(nu, a))
                if mu not in mult and mu not in seen:
                    seen.add(mu)
                    candidates.append(mu)
        layer = []
        for mu in candidates:
            den = norm_top - _dot(plus_rho(mu), plus_rho(mu))
            if den == 0:
                continue
            total = Fraction(0)
            for a in pos:
                k = 1
                while True:
                    nu = tuple(x + k * y for x, y in zip(mu, a))
                    m = mult.get(nu)
                    if m is None:
                        if not _in_hull_range(nu, top):
                            break
                        k += 1
                        continue
                    total += m * _dot(nu, a)
                    k += 1
            value = 2 * total / den
            if value:
                assert value.denominator == 1
                mult[mu] = int(value)
                layer.append(mu)
    return mult


def _in_hull_range(nu, top):
    # every weight has |coordinate| <= the top coordinate; a cheap cut-off
    return max(abs(x) for x in nu) <= max(abs(x) for x in top)


def character_product(letter, r, lam, mu):
    """Weight multiplicities of the tensor product, by brute force."""
    a, b = freudenthal(letter, r, lam), freudenthal(letter, r, mu)
    out = Counter()
    for x, m in a.items():
        for y, n in b.items():
            out[tuple(p + q for p, q in zip(x, y))] += m * n
    return out


def divisibility_check(p, q, lam):
    """dim of a half-integral irreducible of Spin(p,q) is divisible by 2^(ceil((p+q)/2)-1)."""
    m = p + q
    letter, r = ("B", (m - 1) // 2) if m % 2 else ("D", m // 2)
    if not isinstance(lam, DominantWeight):
        lam = DominantWeight(letter, lam)
    if not lam.is_half_integral():
        raise HRError("NON_HALF_INTEGRAL", f"{lam} is not half-integral")
    power = (m + 1) // 2 - 1
    return weyl_dimension(letter, r, lam) % (2 ** power) == 0


# --------------------------------------------------------- Spin(n,1) labels

def spin_type(n):
    """(letter, rank) of so(n+1, C)."""
    if n < 2:
        raise HRError("RANK_TOO_SMALL", "Spin(n,1) needs n >= 2")
    return ("B", n // 2) if n % 2 == 0 else ("D", (n + 1) // 2)


def spin_weights(n):
    """Highest weights of S (n even) or of S1, S2 (n odd)."""
    letter, r = spin_type(n)
    s = DominantWeight(letter, (HALF,) * r)
    if letter == "B":
        return {"S": s}
    return {"S1": s, "S2": s.with_last_flipped()}


def label_weight(n, label):
    if isinstance(label, DominantWeight):
        letter, r = spin_type(n)
        if (label.letter, label.rank) != (letter, r):
            raise HRError("NON_DOMINANT", f"{label} is not a weight of Spin({n},1)")
        return label
    tags = spin_weights(n)
    if label in tags:
        return tags[label]
    letter, r = spin_type(n)
    return parse_weight(letter, r, label)


def in_N_dagger(n, d):
    _check_dagger(d, DAGGERS + (ID,))
    if n % 2 == 0:
        return False
    if d == ID:
        return True
    if d == CONJDUAL:
        return False
    return (DELTA[d] * n) % 8 in (1, 5)


def N_dagger(d):
    """Residue description of the odd n for which every half-integral rep is self-dagger."""
    _check_dagger(d, DAGGERS + (ID,))
    if d == ID:
        return {"dagger": d, "odd": True, "residues_mod_8": [1, 3, 5, 7]}
    if d == CONJDUAL:
        return {"dagger": d, "odd": True, "residues_mod_8": []}
    res = sorted(r for r in range(1, 8, 2) if (DELTA[d] * r) % 8 in (1, 5))
    return {"dagger": d, "odd": True, "residues_mod_8": res}


def self_dagger(n, d):
    _check_dagger(d)
    if n < 2:
        raise HRError("RANK_TOO_SMALL", "Spin(n,1) needs n >= 2")
    return ALL if n % 2 == 0 or in_N_dagger(n, d) else NONE


def dagger_weight(n, lam, d):
    """Highest weight of pi^dagger."""
    if n % 2 == 0 or in_N_dagger(n, d):
        return lam
    return lam.with_last_flipped()


# ------------------------------------------------------------ the index

_REAL_KINDS = ("MAT_R", "MAT_R_SUM")
_QUAT_KINDS = ("MAT_H", "MAT_H_SUM")


def index_spin_clifford(n, d):
    """Index from the real type of C(n,0) (conjugation) or C(0,n) (duality, compact form)."""
    _check_dagger(d, (CONJ, DUAL))
    if self_dagger(n, d) == NONE:
        raise HRError("NOT_SELF_DAGGER", f"(semi)spin reps of Spin({n},1) are not self-{d.lower()}")
    kind = clifford_type(n, 0).kind if d == CONJ else clifford_type(0, n).kind
    if kind in _REAL_KINDS:
        return 1
    if kind in _QUAT_KINDS:
        return -1
    raise AssertionError(f"complex Clifford type {kind} for a self-{d} case")


def gamma_matrices(n, sign=1):
    """Complex matrices g_1..g_n with g_i g_j + g_j g_i = 2 delta_ij.

    They are the images of e_i e_{n+1} in the (semi)spin representation of
    spin(n,1) and generate it as a Lie algebra.  For odd n the sign of the
    last matrix selects S1 (+1) or S2 (-1).
    """
    k = n // 2
    one = ExactMatrix.identity(COMPLEX, 2)
    s1 = ExactMatrix.from_rows(COMPLEX, [[0, 1], [1, 0]])
    s2 = ExactMatrix.from_rows(COMPLEX, [[0, Quaternion(0, -1)], [Quaternion(0, 1), 0]])
    s3 = ExactMatrix.from_rows(COMPLEX, [[1, 0], [0, -1]])

    def tensor(factors):
        out = factors[0]
        for f in factors[1:]:
            out = kron(out, f)
        return out

    if k == 0:
        return [ExactMatrix.identity(COMPLEX, 1).scale(sign)]
    gens = []
    for a in range(k):
        for s in (s1, s2):
            gens.append(tensor([s3] * a + [s] + [one] * (k - a - 1)))
    if n % 2:
        gens.append(tensor([s3] * k).scale(sign))
    return gens


def _cvar(k):
    return 2 * k, 2 * k + 1


def _add_term(eq_re, eq_im, z, k, sign=1):
    """Add sign * z * b_k to (re, im) equations, b_k = u + i v."""
    u, v = _cvar(k)
    a, b = sign * z.w, sign * z.x
    if a:
        eq_re[u] = eq_re.get(u, 0) + a
        eq_im[v] = eq_im.get(v, 0) + a
    if b:
        eq_re[v] = eq_re.get(v, 0) - b
        eq_im[u] = eq_im.get(u, 0) + b


def _bilinear_equations(gens, d):
    """X^T B + B X = 0 for all generators X; B has d*d complex unknowns."""
    eqs = []
    for X in gens:
        cols = [[] for _ in range(d)]
        for k, z in X.data.items():
            i, j = divmod(k, d)
            cols[j].append((i, z))
        for i in range(d):
            for j in range(d):
                re, im = {}, {}
                for r, z in cols[i]:       # (X^T B)_{ij} = sum_r X_{ri} B_{rj}
                    _add_term(re, im, z, r * d + j)
                for c, z in cols[j]:       # (B X)_{ij} = sum_c B_{ic} X_{cj}
                    _add_term(re, im, z, i * d + c)
                eqs += [re, im]
    return eqs


def _conj_equations(gens, d):
    """J conj(X) - X J = 0 for all generators X."""
    eqs = []
    for X in gens:
        cols = [[] for _ in range(d)]
        for k, z in X.data.items():
            i, j = divmod(k, d)
            cols[j].append((i, z))
        rows = X.nonzero_rows()
        for i in range(d):
            for j in range(d):
                re, im = {}, {}
                for c, z in cols[j]:       # (J conj X)_{ij} = sum_c J_{ic} conj(X_{cj})
                    _add_term(re, im, z.conj(), i * d + c)
                for c, z in rows[i]:       # (X J)_{ij} = sum_c X_{ic} J_{cj}
                    _add_term(re, im, z, c * d + j, -1)
                eqs += [re, im]
    return eqs


def _vec_to_matrix(vec, d):
    entries = [Quaternion(vec.get(2 * k, 0), vec.get(2 * k + 1, 0)) for k in range(d * d)]
    return ExactMatrix(COMPLEX, d, d, entries)


def _invertible(m):
    r = realify(m)
    return rank([r.row(i) for i in range(r.rows)]) == r.rows


def _find_invertible(basis, d):
    """An invertible element of span(basis), or None if every element is singular.

    det(sum t^i B_i) is a polynomial of degree <= d*(len-1) in t, so trying
    that many + 1 values of t settles the question exactly.
    """
    if not basis:
        return None
    mats = [_vec_to_matrix(v, d) for v in basis]
    for t in range(d * (len(mats) - 1) + 1):
        acc = mats[0]
        for i, m in enumerate(mats[1:], start=1):
            acc = acc + m.scale(t ** i)
        if _invertible(acc):
            return acc
    return None


def _symmetric_part(basis, d, sign):
    """Sub-basis of solutions with B^T = sign * B (the solution space is transpose-stable)."""
    out = []
    for v in basis:
        w = {}
        for k in range(d * d):
            i, j = divmod(k, d)
            kt = j * d + i
            for part in (0, 1):
                x = v.get(2 * k + part, 0) + sign * v.get(2 * kt + part, 0)
                if x:
                    w[2 * k + part] = x
        if w:
            out.append(w)
    # reduce to an independent set
    indep, rr = [], []
    for w in out:
        if rank(rr + [w]) > len(rr):
            rr.append(w)
            indep.append(w)
    return indep


def invariant_form_type(gens, kind="bilinear"):
    """Type of the invariant form (kind 'bilinear') or structure (kind 'conj').

    Bilinear: SYMMETRIC or ALTERNATING for an invertible B with
    X^T B + B X = 0.  Conjugate-linear: an invertible J with
    J conj(X) = X J, classified by the sign of J conj(J) (a real scalar
    on an irreducible module).  NONE when the system has only the zero
    solution; SINGULAR_ONLY is raised when solutions exist but none is
    invertible.
    """
    d = gens[0].rows
    nvars = 2 * d * d
    if kind == "bilinear":
        basis = nullspace(_bilinear_equations(gens, d), nvars)
        if not basis:
            return NONE
        for sign, label in ((1, SYMMETRIC), (-1, ALTERNATING)):
            b = _find_invertible(_symmetric_part(basis, d, sign), d)
            if b is not None:
                return label
        raise HRError("SINGULAR_ONLY", "invariant bilinear forms exist but all are degenerate")
    if kind == "conj":
        basis = nullspace(_conj_equations(gens, d), nvars)
        if not basis:
            return NONE
        j = _find_invertible(basis, d)
        if j is None:
            raise HRError("SINGULAR_ONLY", "intertwiners with the conjugate are all singular")
        jj = mat_mul(j, j.conj())
        c = jj[0, 0]
        if jj != ExactMatrix.scalar(COMPLEX, d, c) or c.x:
            raise HRError("REDUCIBLE", "J conj(J) is not a real scalar; module is reducible")
        return REAL_STRUCTURE if c.w > 0 else QUATERNIONIC_STRUCTURE
    raise HRError("USAGE", "kind must be 'bilinear' or 'conj'")


def index_spin_model(n, d, sign=1):
    """Index from invariant forms on the explicit gamma-matrix model."""
    _check_dagger(d, (CONJ, DUAL))
    t = invariant_form_type(gamma_matrices(n, sign), "conj" if d == CONJ else "bilinear")
    return {REAL_STRUCTURE: 1, SYMMETRIC: 1, QUATERNIONIC_STRUCTURE: -1, ALTERNATING: -1}.get(t, t)


def index_spin(n, d, route="clifford"):
    _check_dagger(d, (CONJ, DUAL))
    if route == "clifford":
        return index_spin_clifford(n, d)
    if self_dagger(n, d) == NONE:
        raise HRError("NOT_SELF_DAGGER", f"(semi)spin reps of Spin({n},1) are not self-{d.lower()}")
    return index_spin_model(n, d)


def index_general(n, lam, d):
    """Index of any half-integral irreducible: it equals that of the (semi)spin rep."""
    lam = label_weight(n, lam)
    if not lam.is_half_integral():
        raise HRError("NON_HALF_INTEGRAL", f"{lam} is not half-integral")
    return index_spin(n, d)


# ---------------------------------------------------- multiplicity maps

@dataclass
class RepMultiplicity:
    n: int
    entries: dict      # DominantWeight -> count

    @classmethod
    def from_labels(cls, n, mults):
        out = Counter()
        for label, count in mults.items():
            if count < 0:
                raise HRError("INVALID_PARAMS", "multiplicities are nonnegative")
            if count:
                out[label_weight(n, label)] += count
        return cls(n, dict(out))

    def dimension(self):
        letter, r = spin_type(self.n)
        return sum(c * weyl_dimension(letter, r, w) for w, c in self.entries.items())

    def count(self, lam):
        return self.entries.get(lam, 0)

    def require_half_integral(self):
        for w in self.entries:
            if not w.is_half_integral():
                raise HRError("NON_HALF_INTEGRAL", f"{w} does not satisfy tau(-1) = -I")

    def labelled(self):
        tags = {w: t for t, w in spin_weights(self.n).items()}
        return {tags.get(w, str(w)): c for w, c in sorted(self.entries.items(),
                                                        key=lambda x: x[0].coords)}

    def to_json(self):
        return {"n": self.n, "mults": self.labelled(), "dim": self.dimension()}


def embed_G_dagger_eps(tau, d, eps):
    """Whether Im tau sits in G^{dagger,eps}_N, from multiplicities and indices."""
    _check_dagger(d, (CONJ, DUAL))
    tau.require_half_integral()
    for w, m in tau.entries.items():
        partner = dagger_weight(tau.n, w, d)
        if partner == w:
            if (eps * index_general(tau.n, w, d)) ** m != 1:
                return False
        elif tau.count(partner) != m:
            return False
    return True


def embed_U(tau):
    """Im tau lies in some U(p,q) iff tau* = conj(tau)^dual is equivalent to tau."""
    tau.require_half_integral()
    return all(tau.count(dagger_weight(tau.n, w, CONJDUAL)) == m for w, m in tau.entries.items())


SIGN_MAPS = {
    "SO_SPLIT": (1, 1),     # SO(N/2, N/2)
    "SO_STAR": (-1, 1),     # SO*(2(N/2))
    "SP_R": (1, -1),        # Sp(N/2, R)
    "SP": (-1, -1),         # Sp(N/4, N/4)
}


def embed_real_form(tau, target):
    """(ok, forced signature) for the four real forms labelled by a sign map."""
    if target not in SIGN_MAPS:
        raise HRError("USAGE", f"target must be one of {', '.join(SIGN_MAPS)}")
    N = tau.dimension()
    if N % 2:
        raise HRError("ODD_TOTAL_DIMENSION", f"dimension {N} admits no neutral signature")
    s_conj, s_dual = SIGN_MAPS[target]
    ok = embed_G_dagger_eps(tau, CONJ, s_conj) and embed_G_dagger_eps(tau, DUAL, s_dual)
    sig = None
    if ok:
        if target == "SO_SPLIT":
            sig = (N // 2, N // 2)
        elif target == "SP":
            sig = (N // 4, N // 4)
    return ok, sig


def _orbit_representative(n, w, d):
    return min(w, dagger_weight(n, w, d), key=lambda x: x.coords)


def spinify(tau, d):
    """The same-dimensional sum of (semi)spin representations attached to tau."""
    _check_dagger(d, DAGGERS + (ID,))
    tau.require_half_integral()
    n = tau.n
    letter, r = spin_type(n)
    tags = spin_weights(n)
    if n % 2 == 0:
        unit = weyl_dimension(letter, r, tags["S"])
        total = sum(c * weyl_dimension(letter, r, w) for w, c in tau.entries.items())
        return RepMultiplicity(n, {tags["S"]: total // unit})
    unit = weyl_dimension(letter, r, tags["S1"])
    if in_N_dagger(n, d):
        total = sum(c * weyl_dimension(letter, r, w) for w, c in tau.entries.items())
        return RepMultiplicity(n, {tags["S1"]: total // unit})
    for w, c in tau.entries.items():
        if tau.count(dagger_weight(n, w, d)) != c:
            raise HRError("NOT_SELF_DAGGER", f"tau is not equivalent to its {d.lower()}")
    reps = {}
    for w, c in tau.entries.items():
        reps[_orbit_representative(n, w, d)] = c
    copies = sum(c * weyl_dimension(letter, r, w) for w, c in reps.items()) // unit
    return RepMultiplicity(n, {tags["S1"]: copies, tags["S2"]: copies})


@lru_cache(maxsize=None)
def half_integral_weights(n, max_coord):
    """Every half-integral dominant weight of Spin(n,1) with coordinates <= max_coord."""
    letter, r = spin_type(n)
    vals = [Fraction(2 * k + 1, 2) for k in range(int(max_coord))]
    out = []

    def rec(prefix):
        if len(prefix) == r:
            out.append(DominantWeight(letter, tuple(prefix)))
            if letter == "D":
                out.append(DominantWeight(letter, tuple(prefix[:-1]) + (-prefix[-1],)))
            return
        for v in vals:
            if not prefix or v <= prefix[-1]:
                rec(prefix + [v])

    rec([])
    return tuple(out)
