"""Homomorphisms sl(2,C) -> g_C for complex classical g_C, labelled by partitions.

A partition [d_1^r_1, ..., d_k^r_k] stands for the representation sum of
[d_i]^r_i of sl(2,C) composed with the standard representation.  Weighted
Dynkin diagrams use Bourbaki numbering; for D_M the fork nodes are M-1, M.
"""

from collections import Counter
from dataclasses import dataclass
from functools import lru_cache
from itertools import permutations

from .errors import HRError
from .hurwitz_radon import ClassicalAlgebra

NONE = "NONE"
VERY_EVEN_I = "VERY_EVEN_I"    # fork weights (2, 0)
VERY_EVEN_II = "VERY_EVEN_II"  # fork weights (0, 2)


@dataclass(frozen=True)
class Partition:
    parts: tuple

    def __post_init__(self):
        parts = tuple(sorted((int(p) for p in self.parts), reverse=True))
        if any(p < 1 for p in parts):
            raise HRError("INVALID_PARTITION", "parts must be positive")
        object.__setattr__(self, "parts", parts)

    @classmethod
    def parse(cls, text):
        """Accepts "4,2,1,1", "[4,2,1^2]" or "4 2 1 1"."""
        text = text.strip().strip("[]").replace(" ", ",")
        parts = []
        for tok in filter(None, text.split(",")):
            if "^" in tok:
                d, r = tok.split("^")
                parts += [int(d)] * int(r)
            else:
                parts.append(int(tok))
        return cls(tuple(parts))

    @classmethod
    def from_multiplicities(cls, pairs):
        parts = []
        for d, r in pairs:
            parts += [d] * r
        return cls(tuple(parts))

    @property
    def size(self):
        return sum(self.parts)

    def multiplicities(self):
        """[(d_1, r_1), ..., (d_k, r_k)] with d_1 > ... > d_k."""
        c = Counter(self.parts)
        return sorted(c.items(), reverse=True)

    def __str__(self):
        out = []
        for d, r in self.multiplicities():
            out.append(str(d) if r == 1 else f"{d}^{r}")
        return "[" + ",".join(out) + "]"

    def to_json(self):
        return list(self.parts)


@dataclass(frozen=True)
class WeightedDiagram:
    dynkin_type: str   # "A", "B", "C" or "D"
    weights: tuple
    orbit_label: str = NONE

    @property
    def rank(self):
        return len(self.weights)

    def to_json(self):
        return {"type": f"{self.dynkin_type}{self.rank}", "weights": list(self.weights),
                "label": self.orbit_label}


# ------------------------------------------------------------ ambient types

def dynkin_of(g):
    """(letter, rank) of a complex classical algebra given as SL_C/SO_C/SP_C."""
    f, n = g.family, g.params[0]
    if f == "SL_C":
        if n < 2:
            raise HRError("NON_SIMPLE_TYPE", f"{g} has rank 0")
        return "A", n - 1
    if f == "SP_C":
        return "C", n
    if f == "SO_C":
        if n in (1, 2, 4):
            raise HRError("NON_SIMPLE_TYPE", f"{g} is not simple")
        return ("B", (n - 1) // 2) if n % 2 else ("D", n // 2)
    raise HRError("NON_SIMPLE_TYPE", f"{g} is not a complex classical type")


def complex_algebra(letter, rank):
    if letter == "A":
        return ClassicalAlgebra("SL_C", (rank + 1,))
    if letter == "B":
        return ClassicalAlgebra("SO_C", (2 * rank + 1,))
    if letter == "C":
        return ClassicalAlgebra("SP_C", (rank,))
    if letter == "D":
        return ClassicalAlgebra("SO_C", (2 * rank,))
    raise HRError("INVALID_PARAMS", f"unknown type {letter}")


def parse_type(text):
    """'A3', 'sl4', 'so8', 'sp3' (sp(3,C)) -> complex ClassicalAlgebra."""
    t = text.strip().lower()
    if t[0] in "abcd" and t[1:].isdigit():
        return complex_algebra(t[0].upper(), int(t[1:]))
    for pre, fam in (("sl", "SL_C"), ("so", "SO_C"), ("sp", "SP_C")):
        if t.startswith(pre) and t[len(pre):].isdigit():
            return ClassicalAlgebra(fam, (int(t[len(pre):]),))
    raise HRError("USAGE", f"cannot parse type {text!r}")


# ---------------------------------------------------------------- partitions

def partitions_of(n, max_part=None):
    if max_part is None:
        max_part = n
    return list(_partitions(n, max_part))


@lru_cache(maxsize=None)
def _partitions(n, max_part):
    if n == 0:
        return ((),)
    out = []
    for first in range(min(n, max_part), 0, -1):
        for rest in _partitions(n - first, first):
            out.append((first,) + rest)
    return tuple(out)


def is_valid(g, p):
    letter, _ = dynkin_of(g)
    if p.size != g.complex_dim():
        return False
    for d, r in p.multiplicities():
        if letter in "BD" and d % 2 == 0 and r % 2:
            return False
        if letter == "C" and d % 2 == 1 and r % 2:
            return False
    return True


def is_very_even(p):
    return all(d % 2 == 0 for d in p.parts)


def orbit_count(g, p):
    letter, _ = dynkin_of(g)
    return 2 if letter == "D" and is_very_even(p) else 1


def valid_partitions(g, n=None, very_even_only=False):
    """All (Partition, orbit count) for g_C; n, when given, must be the matrix size."""
    dynkin_of(g)
    size = g.complex_dim()
    if n is not None and n != size:
        raise HRError("INVALID_PARAMS", f"{g} acts on C^{size}, not C^{n}")
    out = []
    for parts in partitions_of(size):
        p = Partition(parts)
        if is_valid(g, p) and (not very_even_only or is_very_even(p)):
            out.append((p, orbit_count(g, p)))
    return out


def eigenvalues(p):
    """Eigenvalues of the image of diag(1,-1), weakly decreasing."""
    out = []
    for d in p.parts:
        out.extend(range(d - 1, -d, -2))
    return tuple(sorted(out, reverse=True))


def weighted_diagram(g, p):
    """Weighted Dynkin diagram(s) of the orbit(s) with partition p."""
    letter, rank = dynkin_of(g)
    if not is_valid(g, p):
        raise HRError("INVALID_PARTITION", f"{p} is not valid for {g}")
    h = eigenvalues(p)
    if letter == "A":
        return [WeightedDiagram("A", tuple(h[i] - h[i + 1] for i in range(rank)))]
    top = h[:rank]
    head = tuple(top[i] - top[i + 1] for i in range(rank - 1))
    if letter == "B":
        return [WeightedDiagram("B", head + (top[-1],))]
    if letter == "C":
        return [WeightedDiagram("C", head + (2 * top[-1],))]
    # D: the last two nodes are the fork
    hm1, hm = top[-2], top[-1]
    if not is_very_even(p):
        return [WeightedDiagram("D", head[:-1] + (hm1 - hm, hm1 + hm))]
    first = head[:-1] + (hm1 + hm, hm1 - hm)   # h_M replaced by -h_M
    second = head[:-1] + (hm1 - hm, hm1 + hm)
    return [WeightedDiagram("D", first, VERY_EVEN_I), WeightedDiagram("D", second, VERY_EVEN_II)]


def very_even_from_diagram(g, d):
    """Very-even test read off the diagram: middle / last weight nonzero, or unequal fork."""
    letter, rank = dynkin_of(g)
    if g.complex_dim() % 2:
        return False  # odd ambient dimension admits no very even homomorphism
    if len(d.weights) != rank:
        raise HRError("TYPE_MISMATCH", "diagram rank does not match")
    w = d.weights
    if letter == "A":
        return w[(rank + 1) // 2 - 1] != 0
    if letter == "C":
        return w[-1] != 0
    return w[-2] != w[-1]


def triality_images(weights):
    """The D4 diagrams obtained by permuting the outer nodes 1, 3, 4."""
    a1, a2, a3, a4 = weights
    outer = (a1, a3, a4)
    seen = []
    for x, y, z in permutations(outer):
        w = (x, a2, y, z)
        if w not in seen:
            seen.append(w)
    return seen


def very_even_under_triality(d):
    """Whether some triality image of a D4 diagram passes the fork criterion.

    When a1 = a3 = a4 every image has equal fork weights, so the homomorphism
    is very even for none of the three 8-dimensional representations.
    """
    if d.dynkin_type != "D" or len(d.weights) != 4:
        raise HRError("TYPE_MISMATCH", "triality needs a D4 diagram")
    return any(w[2] != w[3] for w in triality_images(tuple(d.weights)))


def is_even_hom(g, p):
    if not is_valid(g, p):
        raise HRError("INVALID_PARTITION", f"{p} is not valid for {g}")
    return len({d % 2 for d in p.parts}) <= 1


# ------------------------------------------------------------ Clebsch-Gordan

def clebsch_gordan(k, l):
    if k < 1 or l < 1:
        raise HRError("INVALID_PARAMS", "dimensions must be positive")
    return list(range(k + l - 1, abs(k - l), -2))


def weight_multiset(d):
    return Counter(range(d - 1, -d, -2))


def decompose_weights(weights):
    """Split an sl(2) weight multiset into irreducible dimensions by peeling tops."""
    w = Counter(weights)
    out = []
    while +w:
        top = max(k for k, v in w.items() if v > 0)
        out.append(top + 1)
        for x in range(top, -top - 1, -2):
            w[x] -= 1
            if w[x] < 0:
                raise HRError("INVALID_PARAMS", "not an sl(2) character")
    return sorted(out, reverse=True)


def tensor_brute_force(k, l):
    prod = Counter()
    for a, ma in weight_multiset(k).items():
        for b, mb in weight_multiset(l).items():
            prod[a + b] += ma * mb
    return decompose_weights(prod)


def _as_counter(m):
    if isinstance(m, dict):
        return Counter(m)
    return Counter(m)


def diagonal_restriction(mv, mw):
    """Restrict V (x) W to the diagonal sl(2); inputs map dimension -> multiplicity."""
    out = Counter()
    for k, a in _as_counter(mv).items():
        for l, b in _as_counter(mw).items():
            for d in clebsch_gordan(k, l):
                out[d] += a * b
    return dict(sorted(out.items(), reverse=True))


# ------------------------------------------------------------- rendering

def render_dynkin(letter, rank, weights=None, black=(), arrows=(), unicode=False):
    """Text Dynkin diagram: white nodes o, black nodes *, arrows listed below.

    With unicode=True the nodes are drawn as circles and arrows as a double arrow.
    """
    black = set(black)
    sym = ["*" if i in black else "o" for i in range(1, rank + 1)]
    w = [str(x) for x in weights] if weights is not None else None
    if letter == "D" and rank >= 3:
        chain = list(range(rank - 2))
    else:
        chain = list(range(rank))
    bond = {"B": "=>", "C": "<="}.get(letter, "--")
    line, top = "", ""
    for pos, i in enumerate(chain):
        if pos:
            sep = bond if (letter in "BC" and pos == rank - 1) else "--"
            line += sep
            top += " " * len(sep)
        line += sym[i]
        top += w[i] if w else " "
    lines = []
    if letter == "D" and rank >= 3:
        pad = " " * (len(line) - 1)
        up = pad + " /" + sym[rank - 2]
        down = pad + " \\" + sym[rank - 1]
        if w:
            up += f" {w[rank - 2]}"
            down += f" {w[rank - 1]}"
        if w:
            lines.append(top)
        lines += [up, line, down]
    else:
        if w:
            lines.append(top)
        lines.append(line)
    for a, b in sorted(arrows):
        lines.append(f"{a}<->{b}")
    text = "\n".join(lines)
    if unicode:
        text = text.replace("o", "\u25cb").replace("*", "\u25cf").replace("<->", "\u2194")
    return text
