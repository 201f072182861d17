"""Real Clifford algebras C(p,q): e_i^2 = +1 for i <= p and -1 for i > p.

Basis blades are indexed by bitmasks (bit i-1 stands for e_i); the blade e_S
is the ordered product of its generators with ascending indices.  Signs come
from counting transpositions, never from hand-written tables.

The real algebra type follows (p - q) mod 8.  ``certify_type`` backs that rule
with explicit matrix models: generators satisfying the defining relations
whose 2^(p+q) monomials are linearly independent and fill the target algebra.
"""

from dataclasses import dataclass
from itertools import combinations

from .errors import HRError
from .exact_algebra import (
    COMPLEX, QUATERNION, REAL, I, J, K, ExactMatrix, Quaternion, complexify, kron,
    mat_mul, rank, rational, rational_str, real_coordinates, to_field,
)


# ------------------------------------------------------------------ blades

def popcount(x):
    return bin(x).count("1")


def reorder_sign(a, b):
    """Sign from moving the generators of blade b past those of blade a."""
    a >>= 1
    swaps = 0
    while a:
        swaps += popcount(a & b)
        a >>= 1
    return -1 if swaps & 1 else 1


def blade_product(a, b, p, q):
    """e_a * e_b = sign * e_(a xor b) in C(p,q); returns (sign, mask)."""
    sign = reorder_sign(a, b)
    neg = ((1 << (p + q)) - 1) & ~((1 << p) - 1)
    if popcount(a & b & neg) & 1:
        sign = -sign
    return sign, a ^ b


def mask_to_set(mask):
    out = []
    i = 1
    while mask:
        if mask & 1:
            out.append(i)
        mask >>= 1
        i += 1
    return out


def set_to_mask(indices):
    m = 0
    for i in indices:
        if i < 1:
            raise HRError("INVALID_INDEX", f"generator index {i}")
        m |= 1 << (i - 1)
    return m


def basis_masks(n):
    """Masks of all blades, ordered by size and then lexicographically."""
    out = []
    for k in range(n + 1):
        for c in combinations(range(1, n + 1), k):
            out.append(set_to_mask(c))
    return out


# ---------------------------------------------------------------- elements

class CliffordElement:
    """Element of C(p,q) as a map from blade masks to nonzero rationals."""

    __slots__ = ("sig", "coeffs")

    def __init__(self, sig, coeffs=None):
        p, q = sig
        if p < 0 or q < 0:
            raise HRError("INVALID_SIGNATURE", f"{sig}")
        self.sig = (p, q)
        top = 1 << (p + q)
        clean = {}
        for m, c in (coeffs or {}).items():
            if not 0 <= m < top:
                raise HRError("INVALID_INDEX", f"blade {mask_to_set(m)} outside C{sig}")
            c = rational(c)
            if c:
                clean[m] = c
        self.coeffs = clean

    @classmethod
    def blade(cls, sig, indices, coef=1):
        """The ordered product coef * e_i1 e_i2 ... (any order, signs applied)."""
        p, q = sig
        mask, sign = 0, 1
        for i in indices:
            if not 1 <= i <= p + q:
                raise HRError("INVALID_INDEX", f"e_{i} not in C{sig}")
            s, mask = blade_product(mask, 1 << (i - 1), p, q)
            sign *= s
        return cls(sig, {mask: sign * rational(coef)})

    @classmethod
    def scalar(cls, sig, c=1):
        return cls(sig, {0: c})

    @classmethod
    def gen(cls, sig, i):
        return cls.blade(sig, [i])

    def _check(self, other):
        if self.sig != other.sig:
            raise HRError("SIGNATURE_MISMATCH", f"{self.sig} vs {other.sig}")

    def __add__(self, other):
        self._check(other)
        c = dict(self.coeffs)
        for m, v in other.coeffs.items():
            c[m] = c.get(m, 0) + v
        return CliffordElement(self.sig, c)

    def __neg__(self):
        return CliffordElement(self.sig, {m: -v for m, v in self.coeffs.items()})

    def __sub__(self, other):
        return self + (-other)

    def scale(self, c):
        return CliffordElement(self.sig, {m: v * c for m, v in self.coeffs.items()})

    def __mul__(self, other):
        return cl_mul(self, other)

    def __eq__(self, other):
        if not isinstance(other, CliffordElement):
            return NotImplemented
        return self.sig == other.sig and self.coeffs == other.coeffs

    def __hash__(self):
        return hash((self.sig, frozenset(self.coeffs.items())))

    def grades(self):
        return {popcount(m) for m in self.coeffs}

    def is_even(self):
        return all(g % 2 == 0 for g in self.grades())

    def is_vector(self):
        return self.grades() <= {1}

    def __repr__(self):
        if not self.coeffs:
            return "0"
        parts = []
        for m in sorted(self.coeffs, key=lambda m: (popcount(m), mask_to_set(m))):
            name = "e" + "".join(str(i) for i in mask_to_set(m)) if m else "1"
            parts.append(f"{self.coeffs[m]}*{name}")
        return " + ".join(parts)

    def to_json(self):
        terms = []
        for m in sorted(self.coeffs, key=lambda m: (popcount(m), mask_to_set(m))):
            terms.append({"set": mask_to_set(m), "coef": rational_str(self.coeffs[m])})
        return {"sig": list(self.sig), "terms": terms}

    @classmethod
    def from_json(cls, d):
        return cls(tuple(d["sig"]), {set_to_mask(t["set"]): t["coef"] for t in d["terms"]})


def cl_mul(x, y):
    x._check(y)
    p, q = x.sig
    out = {}
    for a, ca in x.coeffs.items():
        for b, cb in y.coeffs.items():
            s, m = blade_product(a, b, p, q)
            out[m] = out.get(m, 0) + s * ca * cb
    return CliffordElement(x.sig, out)


def grade_involution(x):
    return CliffordElement(x.sig, {m: (-v if popcount(m) & 1 else v)
                                   for m, v in x.coeffs.items()})


def transpose_antiinvolution(x):
    """Reverse the order of generators: e_S -> (-1)^(k(k-1)/2) e_S."""
    out = {}
    for m, v in x.coeffs.items():
        k = popcount(m)
        out[m] = -v if (k * (k - 1) // 2) & 1 else v
    return CliffordElement(x.sig, out)


def bracket(x, y):
    return cl_mul(x, y) - cl_mul(y, x)


def spin_lie_basis(p, q):
    """{e_i e_j : i < j}, a basis of spin(p,q) inside C(p,q)."""
    n = p + q
    if n < 2:
        raise HRError("RANK_TOO_SMALL", f"spin({p},{q}) needs p+q >= 2")
    return [CliffordElement.blade((p, q), [i, j])
            for i in range(1, n + 1) for j in range(i + 1, n + 1)]


def p_part_basis_n1(n):
    """Hermitian part of spin(n,1): e_i^+ e_1^-, i = 1..n (e_1^- is e_(n+1))."""
    if n < 1:
        raise HRError("RANK_TOO_SMALL", "n must be positive")
    return [CliffordElement.blade((n, 1), [i, n + 1]) for i in range(1, n + 1)]


def eta(x):
    """The algebra isomorphism C(n) -> C+(n,1) extending e_i -> e_i e_(n+1)."""
    n, q = x.sig
    if q != 0:
        raise HRError("SIGNATURE_MISMATCH", "eta is defined on C(n) = C(n,0)")
    sig = (n, 1)
    out = CliffordElement(sig)
    images = [CliffordElement.blade(sig, [i, n + 1]) for i in range(1, n + 1)]
    for m, c in x.coeffs.items():
        term = CliffordElement.scalar(sig, c)
        for i in mask_to_set(m):
            term = cl_mul(term, images[i - 1])
        out = out + term
    return out



def eta_check(n):
    """Check that eta: C(n) -> C+(n,1) is an algebra isomorphism sending R^n onto p.

    p is read off independently as the span of the blades of spin(n,1)
    whose square is +1.
    """
    if n < 1:
        raise HRError("RANK_TOO_SMALL", "n must be positive")
    src = (n, 0)
    blades = [CliffordElement(src, {m: 1}) for m in basis_masks(n)]
    images = [eta(b) for b in blades]
    even = all(y.is_even() for y in images)
    vecs = [{m: c for m, c in y.coeffs.items()} for y in images]
    bijective = rank(vecs) == 2 ** n
    mult = all(eta(cl_mul(a, b)) == cl_mul(ya, yb)
               for a, ya in zip(blades, images) for b, yb in zip(blades, images))
    one = CliffordElement.scalar((n, 1))
    p_blades = {frozenset(x.coeffs) for x in spin_lie_basis(n, 1) if cl_mul(x, x) == one}
    vec_images = {frozenset(eta(CliffordElement.gen(src, i)).coeffs) for i in range(1, n + 1)}
    checks = {"even": even, "bijective": bijective, "multiplicative": mult,
              "vectors_onto_p": vec_images == p_blades}
    return {"n": n, "checks": checks, "pass": all(checks.values())}

# ------------------------------------------------------------------- types

KINDS = ("MAT_R", "MAT_R_SUM", "MAT_C", "MAT_C_SUM", "MAT_H", "MAT_H_SUM")
_KIND_DIM = {"MAT_R": 1, "MAT_R_SUM": 2, "MAT_C": 2, "MAT_C_SUM": 4, "MAT_H": 4, "MAT_H_SUM": 8}


@dataclass(frozen=True)
class CliffordType:
    """M(b, D) or M(b, D) + M(b, D).  MAT_C_SUM only occurs after complexifying."""

    kind: str
    block_size: int

    def real_dim(self):
        return _KIND_DIM[self.kind] * self.block_size ** 2

    def complexified(self):
        b = self.block_size
        return {
            "MAT_R": CliffordType("MAT_C", b),
            "MAT_R_SUM": CliffordType("MAT_C_SUM", b),
            "MAT_C": CliffordType("MAT_C_SUM", b),
            "MAT_H": CliffordType("MAT_C", 2 * b),
            "MAT_H_SUM": CliffordType("MAT_C_SUM", 2 * b),
        }[self.kind]

    def to_json(self):
        return {"kind": self.kind, "block_size": self.block_size}


_MOD8 = ("MAT_R", "MAT_R_SUM", "MAT_R", "MAT_C", "MAT_H", "MAT_H_SUM", "MAT_H", "MAT_C")


def _isqrt_exact(x):
    r = int(round(x ** 0.5))
    while r * r > x:
        r -= 1
    while (r + 1) * (r + 1) <= x:
        r += 1
    if r * r != x:
        raise AssertionError("dimension is not a square")
    return r


def clifford_type(p, q):
    if p < 0 or q < 0:
        raise HRError("INVALID_SIGNATURE", f"({p},{q})")
    kind = _MOD8[(p - q) % 8]
    b = _isqrt_exact(2 ** (p + q) // (_KIND_DIM[kind] if kind != "MAT_R" else 1))
    return CliffordType(kind, b)


def even_clifford_type(p, q):
    """C+(p,q) is isomorphic to C(p,q-1) (q >= 1) or to C(0,p-1) (q = 0)."""
    if p + q < 1:
        raise HRError("RANK_TOO_SMALL", "C+(0,0) is not considered")
    if q >= 1:
        return clifford_type(p, q - 1)
    return clifford_type(0, p - 1)


def complexified_even_closed_form(m):
    """C+ (x) C for a quadratic space of dimension m."""
    if m % 2:
        return CliffordType("MAT_C", 2 ** ((m - 1) // 2))
    return CliffordType("MAT_C_SUM", 2 ** ((m - 2) // 2))


def spin_dimension(m):
    """Dimension of the spin representation (m odd) or of each semispin factor (m even)."""
    if m < 1:
        raise HRError("RANK_TOO_SMALL", "dimension must be positive")
    return 2 ** ((m - 1) // 2) if m % 2 else 2 ** ((m - 2) // 2)


# ------------------------------------------------------------ matrix models
#
# A model of C(p,q) is (field, block, gens) where every generator is a tuple
# of square matrices over ``field`` (one per simple summand), listed with the
# p positive generators first.

def _m(field, rows):
    return ExactMatrix.from_rows(field, rows)


def _lift(field, rows):
    return to_field(_m(REAL, rows), field)


SIGMA1 = [[0, 1], [1, 0]]
SIGMA3 = [[1, 0], [0, -1]]
EPS = [[0, -1], [1, 0]]


def _kron_gen(g, m2):
    return tuple(kron(c, to_field(m2, c.field)) for c in g)


def _ones_kron(template, m2):
    return tuple(kron(ExactMatrix.identity(c.field, c.rows), to_field(m2, c.field))
                 for c in template)


def _base_model(q):
    """Models of C(0,q), q <= 8."""
    if q == 0:
        return REAL, [], [(ExactMatrix.identity(REAL, 1),)]
    if q == 1:
        return COMPLEX, [(ExactMatrix.scalar(COMPLEX, 1, I),)], None
    if q == 2:
        return QUATERNION, [(ExactMatrix.scalar(QUATERNION, 1, x),) for x in (I, J)], None
    if q == 3:
        h = lambda x: ExactMatrix.scalar(QUATERNION, 1, x)
        return QUATERNION, [(h(I), h(I)), (h(J), h(J)), (h(K), -h(K))], None
    if q == 4:
        # C(2,0) = M(2,R) with sigma1, sigma3, multiplied by k; then i, j scalars
        gens = [(_lift(QUATERNION, SIGMA1).scale(K),), (_lift(QUATERNION, SIGMA3).scale(K),),
                (ExactMatrix.scalar(QUATERNION, 2, I),), (ExactMatrix.scalar(QUATERNION, 2, J),)]
        return QUATERNION, gens, None
    if q == 5:
        _, g4, _ = _base_model(4)
        gens = [(complexify(g[0]),) for g in g4]
        omega = gens[0][0]
        for g in gens[1:]:
            omega = mat_mul(omega, g[0])
        gens.append((omega.scale(I),))
        return COMPLEX, gens, None
    # q = 6, 7, 8: act on H^b = R^(4b) through L(f_a) R(k), R(i), R(j), using
    # the quaternionic model of C(q-2, 0)
    fld, gens, _ = clifford_model(q - 2, 0)
    if fld != QUATERNION:
        raise AssertionError("expected a quaternionic model")
    out = []
    for g in gens:
        out.append(tuple(_left_right_real(c, K) for c in g))
    ncomp = len(gens[0])
    b = gens[0][0].rows
    for h in (I, J):
        out.append(tuple(_left_right_real(ExactMatrix.identity(QUATERNION, b), h)
                         for _ in range(ncomp)))
    return REAL, out, None


def _left_right_real(a, h):
    """Real matrix of v -> a v h on H^b with coordinates (w, x, y, z) per entry."""
    b = a.rows
    cols = []
    units = (Quaternion(1), I, J, K)
    for m in range(b):
        for u in units:
            # a * (u e_m) * h
            vec = []
            for r in range(b):
                val = a[r, m] * u * h
                vec.extend(val.coeffs())
            cols.append(vec)
    n = 4 * b
    return ExactMatrix(REAL, n, n, [cols[c][r] for r in range(n) for c in range(n)])


_MODEL_CACHE = {}


def clifford_model(p, q):
    """(field, generators) of an explicit matrix model of C(p,q)."""
    key = (p, q)
    if key in _MODEL_CACHE:
        return _MODEL_CACHE[key]
    if p == 0:
        fld, gens, _ = _base_model(q)
        res = (fld, gens, None)
    elif p == 1 and q == 0:
        res = (REAL, [(ExactMatrix.identity(REAL, 1), -ExactMatrix.identity(REAL, 1))], None)
    elif q >= 1:
        # C(p,q) = M(2, C(p-1,q-1)): f (x) s3, then 1 (x) s1 (positive), 1 (x) eps (negative)
        fld, sub, _ = clifford_model(p - 1, q - 1)
        s1, s3, ep = _m(REAL, SIGMA1), _m(REAL, SIGMA3), _m(REAL, EPS)
        template = sub[0] if sub else (ExactMatrix.identity(fld, 1),)
        lifted = [_kron_gen(g, s3) for g in sub]
        pos = lifted[:p - 1] + [_ones_kron(template, s1)]
        neg = lifted[p - 1:] + [_ones_kron(template, ep)]
        res = (fld, pos + neg, None)
    else:
        # C(p,0) = M(2, C(0,p-2)): f (x) eps (now positive), 1 (x) s1, 1 (x) s3
        fld, sub, _ = clifford_model(0, p - 2)
        s1, s3, ep = _m(REAL, SIGMA1), _m(REAL, SIGMA3), _m(REAL, EPS)
        template = sub[0] if sub else (ExactMatrix.identity(fld, 1),)
        gens = [_kron_gen(g, ep) for g in sub]
        gens += [_ones_kron(template, s1), _ones_kron(template, s3)]
        res = (fld, gens, None)
    _MODEL_CACHE[key] = res
    return res


def _gen_mul(a, b):
    return tuple(mat_mul(x, y) for x, y in zip(a, b))


def _gen_identity(g):
    return tuple(ExactMatrix.identity(c.field, c.rows) for c in g)


def certify_type(p, q):
    """Check the explicit model of C(p,q) and return the certified CliffordType.

    Verifies e_i^2 = +-1, pairwise anticommutation and that the 2^n monomials
    are R-linearly independent in a target algebra of real dimension 2^n.
    """
    fld, gens, _ = clifford_model(p, q)
    n = p + q
    if len(gens) != n:
        raise HRError("VERIFICATION_FAILURE", "wrong number of generators")
    if n == 0:
        return CliffordType("MAT_R", 1)
    ident = _gen_identity(gens[0])
    for a in range(n):
        sq = _gen_mul(gens[a], gens[a])
        want = ident if a < p else tuple(-x for x in ident)
        if sq != want:
            raise HRError("VERIFICATION_FAILURE", f"e_{a + 1}^2 wrong in C({p},{q})")
        for b in range(a + 1, n):
            s = tuple(x + y for x, y in zip(_gen_mul(gens[a], gens[b]),
                                            _gen_mul(gens[b], gens[a])))
            if any(not x.is_zero() for x in s):
                raise HRError("VERIFICATION_FAILURE", f"e_{a + 1}, e_{b + 1} commute")
    monos = {0: ident}
    for m in range(1, 1 << n):
        low = m & -m
        i = low.bit_length() - 1
        monos[m] = _gen_mul(gens[i], monos[m ^ low]) if (m ^ low) else gens[i]
    vecs = []
    for m in range(1 << n):
        v = []
        for c in monos[m]:
            v.extend(real_coordinates(c))
        vecs.append(v)
    comps = len(ident)
    b = ident[0].rows
    dfield = {REAL: 1, COMPLEX: 2, QUATERNION: 4}[fld]
    total = comps * dfield * b * b
    if total != 2 ** n or rank(vecs) != 2 ** n:
        raise HRError("VERIFICATION_FAILURE", f"monomials of C({p},{q}) do not fill the algebra")
    kind = {(REAL, 1): "MAT_R", (REAL, 2): "MAT_R_SUM", (COMPLEX, 1): "MAT_C",
            (QUATERNION, 1): "MAT_H", (QUATERNION, 2): "MAT_H_SUM"}[(fld, comps)]
    return CliffordType(kind, b)
