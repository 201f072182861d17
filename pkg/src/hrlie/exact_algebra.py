"""Exact scalars and matrices over R, C and H with rational coefficients.

Rationals are plain ``int`` or ``fractions.Fraction`` values; a Fraction with
denominator 1 is always collapsed to an int so that the common integer case
stays fast.  Complex numbers are quaternions with vanishing j, k parts.

Matrices are immutable.  Over H scalars act on the left, and the complex
picture of a quaternionic matrix uses the block convention

    q = a + j b  (a, b complex)   |->   [[a, -conj(b)], [b, conj(a)]]

where for q = w + x i + y j + z k we take a = w + x i and b = y - z i.
"""

from fractions import Fraction

from .errors import HRError

REAL = "R"
COMPLEX = "C"
QUATERNION = "H"
FIELDS = (REAL, COMPLEX, QUATERNION)


def rational(x):
    """Normalize an int/Fraction/str to an int or a Fraction in lowest terms."""
    if isinstance(x, bool):
        raise TypeError("bool is not a rational")
    if isinstance(x, int):
        return x
    if isinstance(x, str):
        x = Fraction(x)
    if isinstance(x, Fraction):
        if x.denominator == 1:
            return x.numerator
        return x
    raise TypeError(f"not a rational: {x!r}")


def rational_str(x):
    x = Fraction(x)
    return f"{x.numerator}/{x.denominator}"


class Quaternion:
    """w + x i + y j + z k with rational coefficients."""

    __slots__ = ("w", "x", "y", "z")

    def __init__(self, w=0, x=0, y=0, z=0):
        self.w = rational(w)
        self.x = rational(x)
        self.y = rational(y)
        self.z = rational(z)

    @staticmethod
    def _raw(w, x, y, z):
        q = object.__new__(Quaternion)
        q.w = w if type(w) is int else rational(w)
        q.x = x if type(x) is int else rational(x)
        q.y = y if type(y) is int else rational(y)
        q.z = z if type(z) is int else rational(z)
        return q

    def coeffs(self):
        return (self.w, self.x, self.y, self.z)

    def __add__(self, other):
        if isinstance(other, Quaternion):
            return Quaternion._raw(self.w + other.w, self.x + other.x,
                                   self.y + other.y, self.z + other.z)
        return Quaternion._raw(self.w + other, self.x, self.y, self.z)

    __radd__ = __add__

    def __neg__(self):
        return Quaternion._raw(-self.w, -self.x, -self.y, -self.z)

    def __sub__(self, other):
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if not isinstance(other, Quaternion):
            return Quaternion._raw(self.w * other, self.x * other,
                                   self.y * other, self.z * other)
        a1, b1, c1, d1 = self.w, self.x, self.y, self.z
        a2, b2, c2, d2 = other.w, other.x, other.y, other.z
        return Quaternion._raw(
            a1 * a2 - b1 * b2 - c1 * c2 - d1 * d2,
            a1 * b2 + b1 * a2 + c1 * d2 - d1 * c2,
            a1 * c2 - b1 * d2 + c1 * a2 + d1 * b2,
            a1 * d2 + b1 * c2 - c1 * b2 + d1 * a2,
        )

    def __rmul__(self, other):
        # real scalars are central
        return self.__mul__(other)

    def conj(self):
        return Quaternion._raw(self.w, -self.x, -self.y, -self.z)

    def norm(self):
        return rational(self.w * self.w + self.x * self.x
                        + self.y * self.y + self.z * self.z)

    def inverse(self):
        n = self.norm()
        if n == 0:
            raise ZeroDivisionError("zero quaternion")
        c = self.conj()
        return Quaternion(Fraction(c.w, 1) / n, Fraction(c.x, 1) / n,
                          Fraction(c.y, 1) / n, Fraction(c.z, 1) / n)

    def is_zero(self):
        return not (self.w or self.x or self.y or self.z)

    def is_complex(self):
        return not (self.y or self.z)

    def is_real(self):
        return not (self.x or self.y or self.z)

    def __eq__(self, other):
        if isinstance(other, Quaternion):
            return (self.w == other.w and self.x == other.x
                    and self.y == other.y and self.z == other.z)
        if isinstance(other, (int, Fraction)):
            return self.is_real() and self.w == other
        return NotImplemented

    def __hash__(self):
        return hash((self.w, self.x, self.y, self.z))

    def __bool__(self):
        return bool(self.w or self.x or self.y or self.z)

    def __repr__(self):
        return f"Quaternion({self.w}, {self.x}, {self.y}, {self.z})"


ONE = Quaternion(1)
I = Quaternion(0, 1)
J = Quaternion(0, 0, 1)
K = Quaternion(0, 0, 0, 1)


def _scalar(field, v):
    if field == REAL:
        if isinstance(v, Quaternion):
            if not v.is_real():
                raise HRError("FIELD_MISMATCH", f"non-real entry {v!r}")
            return v.w
        return rational(v)
    if isinstance(v, Quaternion):
        if field == COMPLEX and not v.is_complex():
            raise HRError("FIELD_MISMATCH", f"non-complex entry {v!r}")
        return v
    if isinstance(v, complex):
        raise TypeError("floating complex numbers are not exact")
    return Quaternion(v)


def _conj(v):
    if isinstance(v, Quaternion) and (v.x or v.y or v.z):
        return v.conj()
    return v


class ExactMatrix:
    """Exact matrix over R, C or H.

    Only nonzero entries are stored (a dict keyed by row-major position); the
    dense row-major tuple is available as ``entries``.
    """

    __slots__ = ("field", "rows", "cols", "data", "_nz", "_dense")

    def __init__(self, field, rows, cols, entries, _checked=False):
        if field not in FIELDS:
            raise HRError("FIELD_MISMATCH", f"unknown field {field!r}")
        if rows <= 0 or cols <= 0:
            raise HRError("DIMENSION_MISMATCH", "matrix dimensions must be positive")
        entries = tuple(entries)
        if len(entries) != rows * cols:
            raise HRError("DIMENSION_MISMATCH", "entry count differs from rows*cols")
        if not _checked:
            entries = tuple(_scalar(field, v) for v in entries)
        data = {k: v for k, v in enumerate(entries) if v}
        self._init(field, rows, cols, data)

    def _init(self, field, rows, cols, data):
        self.field = field
        self.rows = rows
        self.cols = cols
        self.data = data
        self._nz = None
        self._dense = None

    @classmethod
    def _from_data(cls, field, rows, cols, data):
        m = object.__new__(cls)
        m._init(field, rows, cols, data)
        return m

    @classmethod
    def from_rows(cls, field, rows):
        rows = [list(r) for r in rows]
        return cls(field, len(rows), len(rows[0]), [v for r in rows for v in r])

    @classmethod
    def zeros(cls, field, rows, cols=None):
        cols = rows if cols is None else cols
        if rows <= 0 or cols <= 0:
            raise HRError("DIMENSION_MISMATCH", "matrix dimensions must be positive")
        return cls._from_data(field, rows, cols, {})

    @classmethod
    def identity(cls, field, n):
        return cls.scalar(field, n, 1)

    @classmethod
    def scalar(cls, field, n, c):
        return cls.diagonal(field, [c] * n)

    @classmethod
    def diagonal(cls, field, values):
        values = [_scalar(field, v) for v in values]
        n = len(values)
        return cls._from_data(field, n, n, {i * n + i: v for i, v in enumerate(values) if v})

    @property
    def entries(self):
        if self._dense is None:
            z = 0 if self.field == REAL else Quaternion._raw(0, 0, 0, 0)
            e = [z] * (self.rows * self.cols)
            for k, v in self.data.items():
                e[k] = v
            self._dense = tuple(e)
        return self._dense

    def _zero(self):
        return 0 if self.field == REAL else Quaternion._raw(0, 0, 0, 0)

    def __getitem__(self, ij):
        i, j = ij
        v = self.data.get(i * self.cols + j)
        return self._zero() if v is None else v

    def row(self, i):
        return tuple(self[i, j] for j in range(self.cols))

    def to_rows(self):
        return [list(self.row(i)) for i in range(self.rows)]

    def nonzero_rows(self):
        """Per row, the list of (column, value) pairs with value != 0."""
        if self._nz is None:
            rows = [[] for _ in range(self.rows)]
            c = self.cols
            for k in sorted(self.data):
                rows[k // c].append((k % c, self.data[k]))
            self._nz = tuple(tuple(r) for r in rows)
        return self._nz

    def is_square(self):
        return self.rows == self.cols

    def is_zero(self):
        return not self.data

    def __eq__(self, other):
        if not isinstance(other, ExactMatrix):
            return NotImplemented
        return (self.field == other.field and self.rows == other.rows
                and self.cols == other.cols and self.data == other.data)

    def __hash__(self):
        return hash((self.field, self.rows, self.cols, frozenset(self.data.items())))

    def _combine(self, other, sign):
        _same_shape(self, other)
        data = dict(self.data)
        for k, v in other.data.items():
            a = data.get(k)
            if a is None:
                data[k] = v if sign > 0 else -v
            else:
                s = a + v if sign > 0 else a - v
                if s:
                    data[k] = s
                else:
                    del data[k]
        return ExactMatrix._from_data(self.field, self.rows, self.cols, data)

    def __add__(self, other):
        return self._combine(other, 1)

    def __sub__(self, other):
        return self._combine(other, -1)

    def __neg__(self):
        return ExactMatrix._from_data(self.field, self.rows, self.cols,
                                      {k: -v for k, v in self.data.items()})

    def __matmul__(self, other):
        return mat_mul(self, other)

    def _mapped(self, fn, rows=None, cols=None, key=None):
        data = {}
        for k, v in self.data.items():
            w = fn(v)
            if w:
                data[k if key is None else key(k)] = w
        return ExactMatrix._from_data(self.field, rows or self.rows, cols or self.cols, data)

    def scale(self, c):
        """Left scalar multiple c*X (c on the left matters over H)."""
        c = _scalar(self.field, c)
        return self._mapped(lambda v: c * v)

    def scale_right(self, c):
        c = _scalar(self.field, c)
        return self._mapped(lambda v: v * c)

    def transpose(self):
        r, c = self.rows, self.cols
        return self._mapped(lambda v: v, c, r, lambda k: (k % c) * r + k // c)

    def conj(self):
        return self._mapped(_conj)

    def trace(self):
        if not self.is_square():
            raise HRError("DIMENSION_MISMATCH", "trace of a non-square matrix")
        t = 0
        for i in range(self.rows):
            v = self.data.get(i * self.cols + i)
            if v is not None:
                t = t + v
        return t

    def __repr__(self):
        return f"ExactMatrix({self.field}, {self.rows}x{self.cols})"


def _same_shape(a, b):
    if a.field != b.field:
        raise HRError("FIELD_MISMATCH", f"{a.field} vs {b.field}")
    if a.rows != b.rows or a.cols != b.cols:
        raise HRError("DIMENSION_MISMATCH",
                      f"{a.rows}x{a.cols} vs {b.rows}x{b.cols}")


def mat_mul(a, b):
    """Exact product a*b; both matrices must live over the same field."""
    if a.field != b.field:
        raise HRError("FIELD_MISMATCH", f"{a.field} vs {b.field}")
    if a.cols != b.rows:
        raise HRError("DIMENSION_MISMATCH", f"{a.rows}x{a.cols} times {b.rows}x{b.cols}")
    n = b.cols
    brows = b.nonzero_rows()
    data = {}
    for i, arow in enumerate(a.nonzero_rows()):
        if not arow:
            continue
        acc = {}
        for k, av in arow:
            for j, bv in brows[k]:
                p = av * bv
                if j in acc:
                    acc[j] = acc[j] + p
                else:
                    acc[j] = p
        base = i * n
        for j, v in acc.items():
            if v:
                data[base + j] = v
    return ExactMatrix._from_data(a.field, a.rows, n, data)


def conj_transpose(a):
    """Entrywise conjugate of the transpose (plain transpose over R)."""
    if a.field == REAL:
        return a.transpose()
    r, c = a.rows, a.cols
    return a._mapped(_conj, c, r, lambda k: (k % c) * r + k // c)


def to_field(a, field):
    """Upcast R -> C -> H (entries unchanged)."""
    order = {REAL: 0, COMPLEX: 1, QUATERNION: 2}
    if order[field] < order[a.field]:
        raise HRError("FIELD_MISMATCH", f"cannot downcast {a.field} to {field}")
    if field == a.field:
        return a
    if a.field == REAL:
        data = {k: Quaternion._raw(v, 0, 0, 0) for k, v in a.data.items()}
    else:
        data = dict(a.data)
    return ExactMatrix._from_data(field, a.rows, a.cols, data)


def complexify(a):
    """Standard complex picture: R and C embed entrywise, H doubles the size."""
    if a.field == COMPLEX:
        return a
    if a.field == REAL:
        return to_field(a, COMPLEX)
    n, m = a.rows, a.cols
    w2 = 2 * m
    data = {}
    for k, q in a.data.items():
        i, j = divmod(k, m)
        alpha = Quaternion._raw(q.w, q.x, 0, 0)
        beta = Quaternion._raw(q.y, -q.z, 0, 0)
        for pos, v in (((2 * i) * w2 + 2 * j, alpha),
                       ((2 * i) * w2 + 2 * j + 1, -beta.conj()),
                       ((2 * i + 1) * w2 + 2 * j, beta),
                       ((2 * i + 1) * w2 + 2 * j + 1, alpha.conj())):
            if v:
                data[pos] = v
    return ExactMatrix._from_data(COMPLEX, 2 * n, 2 * m, data)


def realify(a):
    """Complex n x m matrix X = A + iB as the real block matrix [[A, -B], [B, A]]."""
    if a.field == REAL:
        return a
    if a.field != COMPLEX:
        raise HRError("FIELD_MISMATCH", "realify expects a complex matrix")
    n, m = a.rows, a.cols
    w2 = 2 * m
    data = {}
    for k, q in a.data.items():
        i, j = divmod(k, m)
        if q.w:
            data[i * w2 + j] = q.w
            data[(n + i) * w2 + m + j] = q.w
        if q.x:
            data[i * w2 + m + j] = -q.x
            data[(n + i) * w2 + j] = q.x
    return ExactMatrix._from_data(REAL, 2 * n, 2 * m, data)


def block(blocks):
    """Assemble a matrix from a 2D list of equally-fielded blocks."""
    field = blocks[0][0].field
    heights = [row[0].rows for row in blocks]
    widths = [m.cols for m in blocks[0]]
    total_w = sum(widths)
    data = {}
    r0 = 0
    for bi, brow in enumerate(blocks):
        c0 = 0
        for bj, m in enumerate(brow):
            if m.field != field:
                raise HRError("FIELD_MISMATCH", "blocks over different fields")
            if m.rows != heights[bi] or m.cols != widths[bj]:
                raise HRError("DIMENSION_MISMATCH", "ragged block layout")
            for k, v in m.data.items():
                i, j = divmod(k, m.cols)
                data[(r0 + i) * total_w + c0 + j] = v
            c0 += widths[bj]
        r0 += heights[bi]
    return ExactMatrix._from_data(field, sum(heights), total_w, data)


def block_diag(*mats):
    field = mats[0].field
    n = len(mats)
    grid = []
    for i in range(n):
        grid.append([mats[i] if i == j else ExactMatrix.zeros(field, mats[i].rows, mats[j].cols)
                     for j in range(n)])
    return block(grid)


def kron(a, b):
    """Kronecker product a (x) b, entries multiplied as a_ij * b_kl."""
    if a.field != b.field:
        raise HRError("FIELD_MISMATCH", f"{a.field} vs {b.field}")
    w = a.cols * b.cols
    data = {}
    for ka, va in a.data.items():
        i, j = divmod(ka, a.cols)
        for kb, vb in b.data.items():
            k, l = divmod(kb, b.cols)
            v = va * vb
            if v:
                data[(i * b.rows + k) * w + j * b.cols + l] = v
    return ExactMatrix._from_data(a.field, a.rows * b.rows, w, data)


def commutator(a, b):
    return mat_mul(a, b) - mat_mul(b, a)


def anticommutator(a, b):
    return mat_mul(a, b) + mat_mul(b, a)


def ipq(p, q, field=REAL):
    """I_{p,q} = diag(1 (p times), -1 (q times))."""
    return ExactMatrix.diagonal(field, [1] * p + [-1] * q)


def jn(n, field=REAL):
    """J_n = [[0, -I_n], [I_n, 0]]."""
    z = ExactMatrix.zeros(field, n)
    i = ExactMatrix.identity(field, n)
    return block([[z, -i], [i, z]])


# ---------------------------------------------------------------- JSON

def scalar_to_json(field, v):
    if field == REAL:
        return rational_str(v)
    if field == COMPLEX:
        return [rational_str(v.w), rational_str(v.x)]
    return [rational_str(c) for c in v.coeffs()]


def scalar_from_json(field, v):
    if field == REAL:
        return rational(v)
    return Quaternion(*v)


def matrix_to_json(a):
    return {"field": a.field, "rows": a.rows, "cols": a.cols,
            "entries": [scalar_to_json(a.field, v) for v in a.entries]}


def matrix_from_json(d):
    field = d["field"]
    return ExactMatrix(field, d["rows"], d["cols"],
                       [scalar_from_json(field, v) for v in d["entries"]])


# ---------------------------------------------------------- linear algebra

class RowReducer:
    """Incremental reduced row echelon form over Q with sparse dict rows.

    Rows are dicts {variable index: nonzero rational}.  Each accepted row is
    normalized to have pivot coefficient 1 and every pivot variable appears in
    exactly one stored row.
    """

    def __init__(self):
        self.pivots = {}

    def reduce(self, row):
        row = {k: v for k, v in row.items() if v}
        for p in [p for p in row if p in self.pivots]:
            c = row.get(p)
            if not c:
                continue
            for k, v in self.pivots[p].items():
                nv = row.get(k, 0) - c * v
                if nv:
                    row[k] = nv
                else:
                    row.pop(k, None)
        return row

    def add(self, row):
        """Insert a row; return True when it increased the rank."""
        row = self.reduce(row)
        if not row:
            return False
        p = min(row)
        c = row[p]
        if c != 1:
            row = {k: rational(Fraction(v) / c) for k, v in row.items()}
        for q, other in self.pivots.items():
            cq = other.get(p)
            if cq:
                for k, v in row.items():
                    nv = other.get(k, 0) - cq * v
                    if nv:
                        other[k] = nv
                    else:
                        other.pop(k, None)
        self.pivots[p] = row
        return True

    @property
    def rank(self):
        return len(self.pivots)


def nullspace(equations, nvars):
    """Basis (list of dicts) of {x in Q^nvars : eq . x = 0 for every eq}."""
    rr = RowReducer()
    for eq in equations:
        rr.add(dict(eq))
    basis = []
    for f in range(nvars):
        if f in rr.pivots:
            continue
        vec = {f: 1}
        for p, row in rr.pivots.items():
            c = row.get(f)
            if c:
                vec[p] = -c
        basis.append(vec)
    return basis


def rank(vectors):
    rr = RowReducer()
    for v in vectors:
        if isinstance(v, dict):
            rr.add(dict(v))
        else:
            rr.add({i: x for i, x in enumerate(v) if x})
    return rr.rank


def real_coordinates(a):
    """Flatten a matrix to its list of real coordinates (1, 2 or 4 per entry)."""
    if a.field == REAL:
        return list(a.entries)
    if a.field == COMPLEX:
        out = []
        for q in a.entries:
            out.extend((q.w, q.x))
        return out
    out = []
    for q in a.entries:
        out.extend(q.coeffs())
    return out
