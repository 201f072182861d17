"""Hurwitz-Radon numbers rho(t) for rational t and their Lie-algebra variants.

rho(t) = 8a + 2^b where ord_2(t) = 4a + b and 0 <= b <= 3.

For a classical real Lie algebra g with its standard representation the
variants rho1(g), rho2(g) count the largest linear families in the hermitian
part p of g whose images square to |v|^2 (rho1) or are invertible (rho2).
They are given by closed formulas (``rho_variant``) and, independently, by
walking the two inclusion chains

    so(N,N) < gl(2N,R) < sp(2N,R) < sp(2N,C) < sp(2N,2N) < gl(4N,H)
            < so*(8N) < so(8N,C) < so(8N,8N) < ...          (period 8)
    gl(N,C) < su(N,N) < gl(2N,C) < ...                        (period 2)

where every inclusion raises the value by exactly one (``rho_via_chain``).
"""

from dataclasses import dataclass
from fractions import Fraction

from .errors import HRError

FAMILIES = ("SL_R", "SL_C", "SL_H", "GL_R", "GL_C", "GL_H",
            "SU", "U", "SO", "SP", "SP_R", "SP_C", "SO_C", "SO_STAR")
SIGNATURE_FAMILIES = ("SU", "U", "SO", "SP")

CHAIN_A = (2, 1, 1, 1, 2, 2, 2, 1)
CHAIN_B = (1, 2, 2, 2, 2, 4, 8, 16)


def _to_fraction(t):
    if isinstance(t, str):
        t = Fraction(t)
    return Fraction(t)


def ord2(t):
    """2-adic valuation of a nonzero rational."""
    t = _to_fraction(t)
    if t == 0:
        raise HRError("ZERO_INPUT", "ord2 of zero")
    v = 0
    n, d = abs(t.numerator), t.denominator
    while n % 2 == 0:
        n //= 2
        v += 1
    while d % 2 == 0:
        d //= 2
        v -= 1
    return v


@dataclass(frozen=True)
class HurwitzDecomposition:
    a: int
    b: int
    odd_part: Fraction

    def value(self):
        return Fraction(2) ** (4 * self.a + self.b) * self.odd_part


def decompose(t):
    t = _to_fraction(t)
    v = ord2(t)
    a, b = divmod(v, 4)
    return HurwitzDecomposition(a, b, t / Fraction(2) ** v)


def rho(t):
    d = decompose(t)
    return 8 * d.a + 2 ** d.b


@dataclass(frozen=True)
class ClassicalAlgebra:
    """A classical real Lie algebra with its standard representation.

    ``params`` is ``(n,)`` for size families and ``(p, q)`` for SU/U/SO/SP.
    Sizes follow the usual names: GL_H n is gl(n,H), SP_R n is sp(n,R)
    (2n x 2n real matrices), SP(p,q) is quaternionic of size p+q, and
    SO_STAR takes the even number m of so*(m).
    """

    family: str
    params: tuple

    def __post_init__(self):
        if self.family not in FAMILIES:
            raise HRError("INVALID_PARAMS", f"unknown family {self.family!r}")
        params = tuple(int(x) for x in self.params)
        object.__setattr__(self, "params", params)
        if self.family in SIGNATURE_FAMILIES:
            if len(params) != 2 or min(params) < 0 or sum(params) < 1:
                raise HRError("INVALID_PARAMS", f"{self.family} needs (p, q) with p+q >= 1")
        else:
            if len(params) != 1 or params[0] < 1:
                raise HRError("INVALID_PARAMS", f"{self.family} needs one positive size")
            if self.family == "SO_STAR" and params[0] % 2:
                raise HRError("INVALID_PARAMS", "so*(m) needs m even")

    @property
    def n(self):
        return self.params[0]

    def complex_dim(self):
        """Dimension of the complexified standard representation."""
        f, ps = self.family, self.params
        if f in ("SL_H", "GL_H", "SP_R", "SP_C"):
            return 2 * ps[0]
        if f == "SP":
            return 2 * (ps[0] + ps[1])
        if f in SIGNATURE_FAMILIES:
            return ps[0] + ps[1]
        return ps[0]

    def name(self):
        f, ps = self.family, self.params
        if f in SIGNATURE_FAMILIES:
            return f"{f.lower()}({ps[0]},{ps[1]})"
        n = ps[0]
        return {
            "SL_R": f"sl({n},R)", "SL_C": f"sl({n},C)", "SL_H": f"sl({n},H)",
            "GL_R": f"gl({n},R)", "GL_C": f"gl({n},C)", "GL_H": f"gl({n},H)",
            "SP_R": f"sp({n},R)", "SP_C": f"sp({n},C)", "SO_C": f"so({n},C)",
            "SO_STAR": f"so*({n})",
        }[f]

    def __str__(self):
        return self.name()


def SO(p, q):
    return ClassicalAlgebra("SO", (p, q))


def SU(p, q):
    return ClassicalAlgebra("SU", (p, q))


def SP(p, q):
    return ClassicalAlgebra("SP", (p, q))


def alg(family, *params):
    return ClassicalAlgebra(family, tuple(params))


def is_simple(g):
    """False for the degenerate descriptors (abelian, zero or split into factors)."""
    f, ps = g.family, g.params
    if f in ("GL_R", "GL_C", "GL_H", "U"):
        return False
    if f in ("SL_R", "SL_C"):
        return ps[0] >= 2
    if f == "SL_H":
        return True
    if f == "SU":
        return ps[0] + ps[1] >= 2
    if f == "SO":
        n = ps[0] + ps[1]
        if n <= 2:
            return False
        if n == 4:
            return sorted(ps) == [1, 3]
        return True
    if f == "SO_C":
        return ps[0] == 3 or ps[0] >= 5
    if f == "SO_STAR":
        return ps[0] >= 6
    return True


def classify(g):
    return "SIMPLE" if is_simple(g) else "NON_SIMPLE"


def rho_variant(g, which=1):
    """Closed-form value of rho1/rho2 for the standard representation."""
    if which not in (1, 2):
        raise HRError("INVALID_PARAMS", "which must be 1 or 2")
    f, ps = g.family, g.params
    if f in SIGNATURE_FAMILIES:
        p, q = ps
        if p != q:
            return 0
        n = p
        if f == "SO":
            return rho(n)
        if f == "SP":
            return rho(Fraction(n, 2)) + 4
        return 2 * ord2(n) + 2
    n = ps[0]
    if f == "GL_R":
        return rho(Fraction(n, 2)) + 1
    if f == "GL_C":
        return 2 * ord2(n) + 1
    if f == "GL_H":
        return rho(Fraction(n, 4)) + 5
    if f == "SP_R":
        return rho(Fraction(n, 2)) + 2
    if f == "SP_C":
        return rho(Fraction(n, 2)) + 3
    if f == "SO_STAR":
        return rho(Fraction(n // 2, 8)) + 6
    if f == "SO_C":
        return rho(Fraction(n, 16)) + 7
    # sl(n, D)
    if n == 1:
        return 0
    if n % 2:
        return 0 if which == 1 else 1
    m = n // 2
    if f == "SL_R":
        return rho(m) + 1
    if f == "SL_C":
        return 2 * ord2(m) + 3
    return rho(Fraction(m, 2)) + 5


# ------------------------------------------------------------------ chains

def chain_coefficients(i):
    if not 1 <= i <= 8:
        raise HRError("INVALID_PARAMS", f"chain slot must be 1..8, got {i}")
    return CHAIN_A[i - 1], CHAIN_B[i - 1]


def chain_algebra(i, n):
    """The slot-i algebra of the period-8 chain at size n."""
    chain_coefficients(i)
    if n < 1:
        raise HRError("INVALID_PARAMS", "size must be positive")
    return {
        1: ClassicalAlgebra("SO", (n, n)),
        2: ClassicalAlgebra("GL_R", (n,)),
        3: ClassicalAlgebra("SP_R", (n,)),
        4: ClassicalAlgebra("SP_C", (n,)),
        5: ClassicalAlgebra("SP", (n, n)),
        6: ClassicalAlgebra("GL_H", (n,)),
        7: ClassicalAlgebra("SO_STAR", (2 * n,)),
        8: ClassicalAlgebra("SO_C", (n,)),
    }[i]


def chain2_algebra(i, n):
    """Slot 1 = gl(n,C), slot 2 = su(n,n) of the period-2 chain."""
    if i == 1:
        return ClassicalAlgebra("GL_C", (n,))
    if i == 2:
        return ClassicalAlgebra("SU", (n, n))
    raise HRError("INVALID_PARAMS", "period-2 chain slots are 1 and 2")


@dataclass(frozen=True)
class ChainPosition:
    chain: int  # 8 or 2
    i: int
    n: int

    def algebra(self):
        if self.chain == 8:
            return chain_algebra(self.i, self.n)
        return chain2_algebra(self.i, self.n)

    def to_json(self):
        return {"chain": self.chain, "i": self.i, "N": self.n}


def chain_position(g):
    f, ps = g.family, g.params
    slot8 = {"GL_R": 2, "SP_R": 3, "SP_C": 4, "GL_H": 6, "SO_C": 8}
    if f == "SO" and ps[0] == ps[1]:
        return ChainPosition(8, 1, ps[0])
    if f == "SP" and ps[0] == ps[1]:
        return ChainPosition(8, 5, ps[0])
    if f in slot8:
        return ChainPosition(8, slot8[f], ps[0])
    if f == "SO_STAR":
        return ChainPosition(8, 7, ps[0] // 2)
    if f == "GL_C":
        return ChainPosition(2, 1, ps[0])
    if f in ("SU", "U") and ps[0] == ps[1]:
        return ChainPosition(2, 2, ps[0])
    raise HRError("NOT_ON_CHAIN", f"{g} is not on either inclusion chain")


def chain_predecessor(pos):
    """The next smaller chain member, or None when pos is a base of its chain."""
    if pos.chain == 2:
        if pos.i == 2:
            return ChainPosition(2, 1, pos.n)
        if pos.n % 2 == 0:
            return ChainPosition(2, 2, pos.n // 2)
        return None
    if pos.i == 1:
        return ChainPosition(8, 8, pos.n)
    a = CHAIN_A[pos.i - 2]
    if pos.n % a:
        return None
    return ChainPosition(8, pos.i - 1, pos.n // a)


def _base_value(pos):
    # chain members whose predecessor does not exist (odd size)
    if pos.chain == 2:
        return 1  # gl(odd, C) carries only the identity
    return {2: 1, 6: 1, 7: 0, 8: 0}[pos.i]


def chain_walk(pos):
    """List of positions from pos down to its base (inclusive)."""
    out = [pos]
    while True:
        prev = chain_predecessor(out[-1])
        if prev is None:
            return out
        out.append(prev)


def rho_via_chain(g):
    """Value from the chain recurrence f(member) = f(predecessor) + 1.

    sl(2n, D) is reduced to its unique larger-by-one neighbour in the chains:
    so(n,n) < sl(2n,R), sp(n,n) < sl(2n,H), su(n,n) < sl(2n,C).
    """
    f, ps = g.family, g.params
    if f in ("SL_R", "SL_C", "SL_H"):
        n = ps[0]
        if n % 2:
            raise HRError("NOT_ON_CHAIN", f"{g} has odd size")
        m = n // 2
        inner = {"SL_R": SO(m, m), "SL_C": SU(m, m), "SL_H": SP(m, m)}[f]
        return rho_via_chain(inner) + 1
    walk = chain_walk(chain_position(g))
    return _base_value(walk[-1]) + len(walk) - 1
