"""Constructive Hurwitz-Radon families in the hermitian part of chain algebras.

A family is a list of hermitian matrices M_1..M_k inside the Lie algebra g
(in a fixed matrix realization) with M_j M_k + M_k M_j = 2 delta_jk I.
Families are built from a one-element (or empty) family on an odd-size base
algebra by repeated ladder steps: embed the previous algebra h into the next
algebra g and append one matrix Z of g that squares to I and anticommutes with
the embedded hermitian part of h.

Every realization is "unitary": its defining form B satisfies B B* = I, so
X -> -X* preserves g and the hermitian part is simply {X in g : X* = X}.
"""

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable, Optional

from .errors import HRError
from .exact_algebra import (
    COMPLEX, QUATERNION, REAL, I, J, K, ExactMatrix, Quaternion, anticommutator,
    block, complexify, conj_transpose, ipq, jn, kron, mat_mul, matrix_to_json,
    nullspace, real_coordinates, realify, to_field,
)
from .hurwitz_radon import (
    ClassicalAlgebra, ChainPosition, SP, SO, SU, chain_position, chain_walk,
    rho_variant,
)


@dataclass(frozen=True)
class AlgebraRealization:
    """g realized as matrices of a given size over a field.

    ``kind`` is "bilinear" (X^T B + B X = 0), "sesquilinear" (X* B + B X = 0)
    or None (all matrices); ``traceless`` adds the trace condition on the
    complex picture.
    """

    alg: ClassicalAlgebra
    field: str
    size: int
    form: Optional[ExactMatrix] = None
    kind: Optional[str] = None
    traceless: bool = False

    def in_g(self, x, check_trace=True):
        if x.field != self.field or x.rows != self.size or x.cols != self.size:
            return False
        if self.form is not None:
            b = self.form
            xt = x.transpose() if self.kind == "bilinear" else conj_transpose(x)
            if not (mat_mul(xt, b) + mat_mul(b, x)).is_zero():
                return False
        if check_trace and self.traceless:
            if complexify(x).trace() != 0:
                return False
        return True

    def in_p(self, x):
        return self.in_g(x) and conj_transpose(x) == x

    def identity(self):
        return ExactMatrix.identity(self.field, self.size)

    def to_json(self):
        return {"algebra": self.alg.name(), "field": self.field, "size": self.size,
                "form": None if self.form is None else matrix_to_json(self.form),
                "kind": self.kind, "traceless": self.traceless}


@dataclass
class HRFamily:
    realization: AlgebraRealization
    matrices: list
    notes: list = field(default_factory=list)
    # sl(odd, D) only: an invertible hermitian element (no square roots of I exist)
    rho2_witness: Optional[ExactMatrix] = None

    def __len__(self):
        return len(self.matrices)

    def to_json(self):
        return {"realization": self.realization.to_json(),
                "matrices": [matrix_to_json(m) for m in self.matrices],
                "notes": list(self.notes)}


@dataclass(frozen=True)
class LadderRow:
    name: str
    source: AlgebraRealization
    target: AlgebraRealization
    z: ExactMatrix
    embed: Callable
    # the embedding lands in u(n,n) rather than su(n,n) for the gl(n,C) row
    image_traceless: bool = True


# ------------------------------------------------------------ small helpers

def _scalar_matrix(field, n, q):
    return ExactMatrix.scalar(field, n, q)


def _eps(field):
    return ExactMatrix.from_rows(field, [[0, -1], [1, 0]])


def _swap_blocks(n, field, c=1, d=1):
    """[[0, c I], [d I, 0]]."""
    z = ExactMatrix.zeros(field, n)
    return block([[z, _scalar_matrix(field, n, c)], [_scalar_matrix(field, n, d), z]])


def _sym_split(x, star):
    """X -> [[Xa, Xs], [Xs, Xa]] with Xa, Xs the star-skew and star-symmetric parts."""
    xs = star(x)
    xa = (x - xs).scale(Fraction(1, 2))
    xsym = (x + xs).scale(Fraction(1, 2))
    return block([[xa, xsym], [xsym, xa]])


def _real_matrix(x):
    """A complex matrix with real entries, as a real matrix."""
    if any(q.x for q in x.entries):
        raise HRError("VERIFICATION_FAILURE", "expected a real form")
    return ExactMatrix(REAL, x.rows, x.cols, [q.w for q in x.entries])


def _so_form_real(b):
    """diag(B, -B) for a real symmetric B with B^2 = I."""
    z = ExactMatrix.zeros(REAL, b.rows)
    return block([[b, z], [z, -b]])


# ------------------------------------------------------------ realizations

def base_realization(g):
    """Realization of an odd-size base of a chain (or of any so(m,m), m odd)."""
    f, ps = g.family, g.params
    if f == "SO" and ps[0] == ps[1] and ps[0] % 2:
        m = ps[0]
        return AlgebraRealization(g, REAL, 2 * m, ipq(m, m), "bilinear")
    if f in ("GL_R", "GL_C", "GL_H") and ps[0] % 2:
        fld = {"GL_R": REAL, "GL_C": COMPLEX, "GL_H": QUATERNION}[f]
        return AlgebraRealization(g, fld, ps[0])
    if f == "SO_STAR" and (ps[0] // 2) % 2:
        m = ps[0] // 2
        return AlgebraRealization(g, QUATERNION, m, _scalar_matrix(QUATERNION, m, J),
                                  "sesquilinear")
    if f == "SO_C" and ps[0] % 2:
        m = ps[0]
        return AlgebraRealization(g, COMPLEX, m, ExactMatrix.identity(COMPLEX, m), "bilinear")
    raise HRError("NOT_A_BASE", f"{g} is not an odd-size chain base")


def base_witness(g):
    """One-element family on SO(m,m) or GL(m,D) with m odd; empty on so*(2m), so(m,C)."""
    r = base_realization(g)
    f = g.family
    if f == "SO":
        m = g.params[0]
        mats = [_swap_blocks(m, REAL)]
    elif f in ("GL_R", "GL_C", "GL_H"):
        mats = [r.identity()]
    else:
        mats = []
    return HRFamily(r, mats, [f"base {g.name()}"])


def ladder_row(src, sl_target=False):
    """The Table-3 style inclusion leaving the realization ``src``.

    With ``sl_target`` the rows out of so(n,n), su(n,n), sp(n,n) go to
    sl(2n,R), sl(2n,C), sl(2n,H) instead of the gl-algebras.
    """
    g = src.alg
    f, ps = g.family, g.params
    n = src.size

    if f == "SO" and ps[0] == ps[1]:
        fam = "SL_R" if sl_target else "GL_R"
        tgt = AlgebraRealization(ClassicalAlgebra(fam, (n,)), REAL, n, traceless=sl_target)
        return LadderRow(f"so({ps[0]},{ps[0]}) < {tgt.alg.name()}", src, tgt, src.form,
                         lambda x: x)

    if sl_target:
        raise HRError("ROW_MISMATCH", f"no sl row leaves {g}")

    if f == "GL_R":
        tgt = AlgebraRealization(ClassicalAlgebra("SP_R", (n,)), REAL, 2 * n, jn(n), "bilinear")
        return LadderRow(f"gl({n},R) < sp({n},R)", src, tgt, ipq(n, n),
                         lambda x: _sym_split(x, lambda y: y.transpose()))

    if f == "SP_R":
        m = ps[0]
        tgt = AlgebraRealization(ClassicalAlgebra("SP_C", (m,)), COMPLEX, n,
                                 jn(m, COMPLEX), "bilinear")
        z = jn(m, COMPLEX).scale(I)
        return LadderRow(f"sp({m},R) < sp({m},C)", src, tgt, z,
                         lambda x: to_field(x, COMPLEX))

    if f == "SP_C":
        m = ps[0]
        h = jn(m, QUATERNION).scale(J)
        tgt = AlgebraRealization(SP(m, m), QUATERNION, n, h, "sesquilinear")
        z = jn(m, QUATERNION).scale(K)
        return LadderRow(f"sp({m},C) < sp({m},{m})", src, tgt, z,
                         lambda x: to_field(x, QUATERNION))

    if f == "SP" and ps[0] == ps[1]:
        tgt = AlgebraRealization(ClassicalAlgebra("GL_H", (n,)), QUATERNION, n)
        return LadderRow(f"sp({ps[0]},{ps[0]}) < gl({n},H)", src, tgt, src.form,
                         lambda x: x)

    if f == "GL_H":
        tgt = AlgebraRealization(ClassicalAlgebra("SO_STAR", (4 * n,)), QUATERNION, 2 * n,
                                 jn(n, QUATERNION), "sesquilinear")
        return LadderRow(f"gl({n},H) < so*({4 * n})", src, tgt, ipq(n, n, QUATERNION),
                         lambda x: _sym_split(x, conj_transpose))

    if f == "SO_STAR":
        # so*(2n) < so(2n, C) through the complex picture; c(K) is the
        # complexified skew-hermitian form, Omega the quaternionic structure
        ck = complexify(src.form)
        omega = kron(ExactMatrix.identity(COMPLEX, n), _eps(COMPLEX))
        b = (-mat_mul(omega, ck))
        tgt = AlgebraRealization(ClassicalAlgebra("SO_C", (2 * n,)), COMPLEX, 2 * n, b,
                                 "bilinear")
        return LadderRow(f"so*({2 * n}) < so({2 * n},C)", src, tgt, ck.scale(I), complexify)

    if f == "SO_C":
        b = _real_matrix(src.form)
        tgt = AlgebraRealization(SO(n, n), REAL, 2 * n, _so_form_real(b), "bilinear")
        zb = ExactMatrix.zeros(REAL, n)
        z = block([[zb, b], [b, zb]])
        return LadderRow(f"so({n},C) < so({n},{n})", src, tgt, z, realify)

    if f == "GL_C":
        tgt = AlgebraRealization(SU(n, n), COMPLEX, 2 * n, ipq(n, n, COMPLEX),
                                 "sesquilinear", traceless=True)
        z = _swap_blocks(n, COMPLEX, I, -I)
        return LadderRow(f"gl({n},C) < su({n},{n})", src, tgt, z,
                         lambda x: _sym_split(x, conj_transpose), image_traceless=False)

    if f in ("SU", "U") and ps[0] == ps[1]:
        tgt = AlgebraRealization(ClassicalAlgebra("GL_C", (n,)), COMPLEX, n)
        return LadderRow(f"su({ps[0]},{ps[0]}) < gl({n},C)", src, tgt, src.form,
                         lambda x: x)

    raise HRError("ROW_MISMATCH", f"no ladder row leaves {g}")


def sl_row(src):
    """Row into sl(2n, D) from so(n,n), su(n,n) or sp(n,n)."""
    g = src.alg
    f, ps = g.family, g.params
    if f == "SO":
        return ladder_row(src, sl_target=True)
    n = src.size
    if f in ("SU", "SP"):
        fam, fld = ("SL_C", COMPLEX) if f == "SU" else ("SL_H", QUATERNION)
        tgt = AlgebraRealization(ClassicalAlgebra(fam, (n,)), fld, n, traceless=True)
        return LadderRow(f"{g.name()} < {tgt.alg.name()}", src, tgt, src.form, lambda x: x)
    raise HRError("ROW_MISMATCH", f"no sl row leaves {g}")


def realization_path(g):
    """Base realization followed by the ladder rows reaching g (chain members)."""
    walk = chain_walk(chain_position(g))
    base = walk[-1].algebra()
    real = base_realization(base)
    rows = []
    for _ in walk[-2::-1]:
        row = ladder_row(real)
        rows.append(row)
        real = row.target
    return real, rows


# ----------------------------------------------------------------- building

def ladder_step(family, row, check=True):
    """Embed every matrix of the family along ``row`` and append row.z."""
    if family.realization != row.source:
        raise HRError("ROW_MISMATCH", f"family lives in {family.realization.alg}, "
                                      f"row starts at {row.source.alg}")
    tgt = row.target
    mats = [row.embed(m) for m in family.matrices]
    z = row.z
    if check:
        ident = tgt.identity()
        if mat_mul(z, z) != ident:
            raise HRError("VERIFICATION_FAILURE", f"{row.name}: Z^2 != I")
        if not tgt.in_p(z):
            raise HRError("VERIFICATION_FAILURE", f"{row.name}: Z not in p")
        for m in mats:
            if not tgt.in_p(m):
                raise HRError("VERIFICATION_FAILURE", f"{row.name}: embedded matrix not in p")
            if not anticommutator(m, z).is_zero():
                raise HRError("VERIFICATION_FAILURE", f"{row.name}: Z does not anticommute")
    notes = family.notes + [row.name]
    return HRFamily(tgt, mats + [z], notes)


def _family_d_or_degenerate(g):
    f, ps = g.family, g.params
    if f in ("SU", "U", "SO", "SP") and ps[0] != ps[1]:
        return "indefinite unitary family with p != q has value 0"
    if f in ("SL_R", "SL_C", "SL_H") and ps[0] == 1:
        return "sl(1, D) has value 0"
    return None


def _plain_realization(g):
    """Field and size of the standard representation, without a form."""
    f, ps = g.family, g.params
    fld = {"SO": REAL, "SL_R": REAL, "SU": COMPLEX, "SL_C": COMPLEX}.get(f, QUATERNION)
    size = sum(ps) if f in ("SO", "SU", "SP") else ps[0]
    return AlgebraRealization(g, fld, size)


def _sl_odd_rho2_witness(g):
    n = g.params[0]
    fld = {"SL_R": REAL, "SL_C": COMPLEX, "SL_H": QUATERNION}[g.family]
    return ExactMatrix.diagonal(fld, [n - 1] + [-1] * (n - 1))


def build_witness(g):
    """A verified family of exactly rho_variant(g, 1) matrices."""
    if g.family == "U":
        g = SU(*g.params)
    note = _family_d_or_degenerate(g)
    if note is not None:
        return HRFamily(_plain_realization(g), [], [note])
    f = g.family
    if f in ("SL_R", "SL_C", "SL_H"):
        n = g.params[0]
        if n % 2:
            w = _sl_odd_rho2_witness(g)
            return HRFamily(AlgebraRealization(g, w.field, n, traceless=True), [],
                            ["odd size: no element squares to I; "
                             "diag(n-1, -1, ..., -1) is an invertible hermitian element"],
                            rho2_witness=w)
        m = n // 2
        inner = {"SL_R": SO(m, m), "SL_C": SU(m, m), "SL_H": SP(m, m)}[f]
        fam = build_witness(inner)
        fam = ladder_step(fam, sl_row(fam.realization))
        return fam
    walk = chain_walk(chain_position(g))
    fam = base_witness(walk[-1].algebra())
    for _ in walk[-2::-1]:
        fam = ladder_step(fam, ladder_row(fam.realization))
    return fam


def verify_family(family):
    """Pairwise anticommutation and p-membership report."""
    r = family.realization
    mats = family.matrices
    checks = []
    ok = True
    ident = r.identity()
    two = ident.scale(2)
    for idx, m in enumerate(mats):
        good = r.in_p(m)
        ok = ok and good
        checks.append({"kind": "p_membership", "index": idx, "pass": good})
    for a in range(len(mats)):
        for b in range(a, len(mats)):
            ac = anticommutator(mats[a], mats[b])
            good = (ac == two) if a == b else ac.is_zero()
            ok = ok and good
            checks.append({"kind": "anticommutation", "pair": [a, b], "pass": good})
    return {"pass": ok, "size": len(mats), "checks": checks}


def expected_size(g):
    return rho_variant(g, 1)


# ------------------------------------------------------------ row catalogue

def table3_rows(minimal=True):
    """One instance of every inclusion used by the builder, at small size."""
    rows = []
    reals = [
        base_realization(SO(1, 1)),
        base_realization(ClassicalAlgebra("GL_R", (1,))),
    ]
    r = reals[1]
    for _ in range(6):  # gl(1,R) -> sp -> sp_C -> sp(1,1) -> gl(2,H) -> so*(8) -> so(8,C)
        row = ladder_row(r)
        rows.append(row)
        r = row.target
    rows.append(ladder_row(r))  # so(8,C) -> so(8,8)
    rows.append(ladder_row(base_realization(ClassicalAlgebra("SO_C", (1,)))))
    rows.append(ladder_row(base_realization(ClassicalAlgebra("SO_STAR", (2,)))))
    rows.append(ladder_row(reals[0]))
    rows.append(sl_row(reals[0]))
    gc = base_realization(ClassicalAlgebra("GL_C", (1,)))
    row = ladder_row(gc)
    rows.append(row)
    rows.append(ladder_row(row.target))
    rows.append(sl_row(row.target))
    sp11 = rows[2].target
    rows.append(sl_row(sp11))
    return rows


# ------------------------------------------------------------ certification

_UNITS = {REAL: (1,), COMPLEX: (Quaternion(1), I), QUATERNION: (Quaternion(1), I, J, K)}


def _hermitian_units(field, n):
    out = []
    for i in range(n):
        out.append(ExactMatrix._from_data(field, n, n, {i * n + i: _unit_one(field)}))
    for i in range(n):
        for j in range(i + 1, n):
            for u in _UNITS[field]:
                uc = u if field == REAL else u.conj()
                out.append(ExactMatrix._from_data(field, n, n, {i * n + j: u, j * n + i: uc}))
    return out


def _unit_one(field):
    return 1 if field == REAL else Quaternion(1)


def _constraint_coords(r, x):
    """Real coordinates of the defining conditions of g evaluated at x."""
    coords = []
    if r.form is not None:
        xt = x.transpose() if r.kind == "bilinear" else conj_transpose(x)
        coords += real_coordinates(mat_mul(xt, r.form) + mat_mul(r.form, x))
    if r.traceless:
        t = complexify(x).trace()
        if x.field == REAL:
            coords.append(t)
        else:
            t = t if isinstance(t, Quaternion) else Quaternion(t)
            coords += [t.w, t.x]
    return coords


def p_basis(r):
    """A real basis of the hermitian part of the realization r."""
    units = _hermitian_units(r.field, r.size)
    images = [_constraint_coords(r, h) for h in units]
    if not images or not images[0]:
        return units
    eqs = []
    for row in range(len(images[0])):
        eq = {k: images[k][row] for k in range(len(units)) if images[k][row]}
        if eq:
            eqs.append(eq)
    out = []
    for vec in nullspace(eqs, len(units)):
        acc = ExactMatrix.zeros(r.field, r.size)
        for k, c in vec.items():
            acc = acc + units[k].scale(c)
        out.append(acc)
    return out


def certify_row(row):
    """Z^2 = I, Z in p(g), and Z anticommutes with the embedded basis of p(h)."""
    tgt = row.target
    z = row.z
    basis = p_basis(row.source)
    embedded = [row.embed(x) for x in basis]
    checks = {
        "z_squared_identity": mat_mul(z, z) == tgt.identity(),
        "z_in_p": tgt.in_p(z),
        "embedding_into_p": all(tgt.in_g(m, check_trace=row.image_traceless) and
                                conj_transpose(m) == m for m in embedded),
        "anticommutes": all(anticommutator(m, z).is_zero() for m in embedded),
    }
    return {"row": row.name, "basis_size": len(basis), "checks": checks,
            "pass": all(checks.values())}
