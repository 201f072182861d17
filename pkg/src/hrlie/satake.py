"""Satake diagrams of classical real forms and the symmetric-pair catalog.

Diagrams follow Araki's classification in Bourbaki numbering.  Nodes are
numbered from 1; arrows are unordered pairs of white nodes.

The pair catalog (``data/catalog.json``) stores each family with symbolic
parameters.  Each entry has these keys:

    id, table, row, case       identification; case is A, B, C
    params                     parameter names, e.g. ["N", "p"]
    constraints                boolean expressions over the parameters
    g, c_dual, real_form       {"family": F, "params": [expr, ...]}
    h                          list of such factors ("SO2" is a compact circle)
    ambient                    complex algebra for cases A and B
    involution                 "fork" for case A (induced diagram automorphism)
    align                      expression; nonzero means the c-dual diagram
                               is drawn with its fork nodes swapped
    partition                  [[part expr, multiplicity expr], ...]
    minimal, instances         parameter assignments used by the drivers

Expressions are integer arithmetic and comparisons, evaluated by a small
AST walker (no eval).
"""

import ast
import json
import operator
from dataclasses import dataclass
from functools import lru_cache
from importlib import resources
from itertools import product

from .errors import HRError
from .hurwitz_radon import ClassicalAlgebra
from .sl2_orbits import Partition, WeightedDiagram, dynkin_of, render_dynkin


@dataclass(frozen=True)
class SatakeDiagram:
    letter: str
    rank: int
    black: frozenset
    arrows: frozenset   # frozensets {i, j}
    name: str = ""

    def white(self):
        return [i for i in range(1, self.rank + 1) if i not in self.black]

    def arrow_pairs(self):
        return sorted(tuple(sorted(a)) for a in self.arrows)

    def relabel(self, perm):
        """Apply a node permutation given as a dict (missing nodes fixed)."""
        f = lambda i: perm.get(i, i)
        return SatakeDiagram(self.letter, self.rank, frozenset(f(i) for i in self.black),
                             frozenset(frozenset(f(i) for i in a) for a in self.arrows),
                             self.name)

    def real_rank(self):
        return matching_space_dim(self, self)

    def render(self, weights=None, unicode=False):
        head = f"{self.name}  [{self.letter}{self.rank}]" if self.name else f"{self.letter}{self.rank}"
        return head + "\n" + render_dynkin(self.letter, self.rank, weights, self.black,
                                           self.arrow_pairs(), unicode)

    def to_json(self):
        return {"type": f"{self.letter}{self.rank}", "name": self.name,
                "black": sorted(self.black), "arrows": [list(a) for a in self.arrow_pairs()]}


def _diagram(letter, rank, black=(), arrows=(), name=""):
    return SatakeDiagram(letter, rank, frozenset(black),
                         frozenset(frozenset(a) for a in arrows), name)


def complexification(g):
    f, ps = g.family, g.params
    if f in ("SL_R", "SU"):
        return ClassicalAlgebra("SL_C", (sum(ps),))
    if f == "SL_H":
        return ClassicalAlgebra("SL_C", (2 * ps[0],))
    if f == "SO":
        return ClassicalAlgebra("SO_C", (sum(ps),))
    if f == "SO_STAR":
        return ClassicalAlgebra("SO_C", ps)
    if f == "SP_R":
        return ClassicalAlgebra("SP_C", ps)
    if f == "SP":
        return ClassicalAlgebra("SP_C", (sum(ps),))
    raise HRError("UNKNOWN_FORM", f"{g} is not a catalogued real form")


def satake(g):
    """Satake diagram of a classical real form (Araki's list)."""
    f, ps = g.family, g.params
    letter, rank = dynkin_of(complexification(g))
    name = g.name()
    nodes = range(1, rank + 1)
    if f in ("SL_R", "SP_R"):
        return _diagram(letter, rank, name=name)
    if f == "SL_H":
        return _diagram(letter, rank, [i for i in nodes if i % 2], name=name)
    if f == "SU":
        q = min(ps)
        white = set(range(1, q + 1)) | set(range(rank - q + 1, rank + 1))
        arrows = [(i, rank + 1 - i) for i in range(1, q + 1) if i != rank + 1 - i]
        return _diagram(letter, rank, [i for i in nodes if i not in white], arrows, name)
    if f == "SO":
        q = min(ps)
        if letter == "B" or q <= rank - 2:
            return _diagram(letter, rank, [i for i in nodes if i > q], name=name)
        if q == rank - 1:
            return _diagram(letter, rank, (), [(rank - 1, rank)], name)
        return _diagram(letter, rank, name=name)
    if f == "SP":
        q = min(ps)
        black = [i for i in nodes if (i % 2 and i <= 2 * q - 1) or i > 2 * q]
        return _diagram(letter, rank, black, name=name)
    if f == "SO_STAR":
        n = ps[0] // 2
        m = n // 2
        if n % 2 == 0:
            return _diagram(letter, rank, list(range(1, 2 * m - 2, 2)) + [2 * m], name=name)
        return _diagram(letter, rank, list(range(1, 2 * m, 2)), [(2 * m, 2 * m + 1)], name)
    raise HRError("UNKNOWN_FORM", f"no Satake diagram for {g}")


def _check_type(a_letter, a_rank, b_letter, b_rank):
    if (a_letter, a_rank) != (b_letter, b_rank):
        raise HRError("TYPE_MISMATCH", f"{a_letter}{a_rank} vs {b_letter}{b_rank}")


def matches(f, s):
    """Black nodes carry weight 0 and arrow-joined nodes carry equal weights."""
    _check_type(f.dynkin_type, f.rank, s.letter, s.rank)
    w = f.weights
    if any(w[i - 1] != 0 for i in s.black):
        return False
    return all(len({w[i - 1] for i in a}) == 1 for a in s.arrows)


def matching_space_dim(s1, s2):
    """Dimension of the space of weight vectors matching both diagrams."""
    _check_type(s1.letter, s1.rank, s2.letter, s2.rank)
    parent = list(range(s1.rank + 1))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for s in (s1, s2):
        for a in s.arrows:
            i, j = sorted(a)
            parent[find(i)] = find(j)
    dead = {find(i) for s in (s1, s2) for i in s.black}
    roots = {find(i) for i in range(1, s1.rank + 1)}
    return len(roots - dead)


def diagram_automorphisms(letter, rank):
    """Automorphisms induced by the full automorphism group of the standard representation.

    For D4 this deliberately omits triality, which does not preserve the
    standard representation.
    """
    ident = {}
    if letter == "A" and rank > 1:
        return [ident, {i: rank + 1 - i for i in range(1, rank + 1)}]
    if letter == "D":
        return [ident, {rank - 1: rank, rank: rank - 1}]
    return [ident]


# --------------------------------------------------------------- real ranks

def factor_real_rank(family, params):
    if family == "SO2":
        return 0
    if family in ("SO", "SU", "U", "SP"):
        return min(params)
    n = params[0]
    if family in ("SL_R", "SL_H", "SL_C"):
        return n - 1
    if family in ("SP_R", "SP_C"):
        return n
    if family == "SO_C":
        return n // 2
    if family == "SO_STAR":
        return n // 4
    raise HRError("UNKNOWN_FORM", f"no real rank rule for {family}")


# -------------------------------------------------------- expression engine

_BIN = {ast.Add: operator.add, ast.Sub: operator.sub, ast.Mult: operator.mul,
        ast.FloorDiv: operator.floordiv, ast.Mod: operator.mod}
_CMP = {ast.Eq: operator.eq, ast.NotEq: operator.ne, ast.Lt: operator.lt,
        ast.LtE: operator.le, ast.Gt: operator.gt, ast.GtE: operator.ge}


def evaluate(expr, env):
    """Evaluate a catalog expression with integer variables from env."""
    if isinstance(expr, int):
        return expr
    tree = ast.parse(str(expr), mode="eval")
    return _eval(tree.body, env)


def _eval(node, env):
    if isinstance(node, ast.Constant) and isinstance(node.value, int):
        return node.value
    if isinstance(node, ast.Name):
        if node.id not in env:
            raise HRError("INVALID_PARAMS", f"unbound parameter {node.id}")
        return env[node.id]
    if isinstance(node, ast.BinOp) and type(node.op) in _BIN:
        return _BIN[type(node.op)](_eval(node.left, env), _eval(node.right, env))
    if isinstance(node, ast.UnaryOp) and isinstance(node.op, ast.USub):
        return -_eval(node.operand, env)
    if isinstance(node, ast.UnaryOp) and isinstance(node.op, ast.Not):
        return not _eval(node.operand, env)
    if isinstance(node, ast.BoolOp):
        vals = [_eval(v, env) for v in node.values]
        return all(vals) if isinstance(node.op, ast.And) else any(vals)
    if isinstance(node, ast.Compare):
        left = _eval(node.left, env)
        for op, comp in zip(node.ops, node.comparators):
            right = _eval(comp, env)
            if type(op) not in _CMP or not _CMP[type(op)](left, right):
                return False
            left = right
        return True
    raise HRError("INVALID_PARAMS", f"unsupported expression {ast.dump(node)}")


# ------------------------------------------------------------------ catalog

@lru_cache(maxsize=None)
def load_catalog():
    text = resources.files("hrlie").joinpath("data/catalog.json").read_text()
    data = json.loads(text)
    return {e["id"]: e for e in data["entries"]}


def catalog_entries(table=None, case=None):
    out = []
    for e in load_catalog().values():
        if table is not None and e["table"] != table:
            continue
        if case is not None and e["case"] != case:
            continue
        out.append(e)
    return out


def find_entry(table, row):
    for e in load_catalog().values():
        if (e["table"], e["row"]) == (table, row) or (table == 1 and e.get("t1_row") == row):
            return e
    raise HRError("NOT_IN_CATALOG", f"no row {row} in table {table}")


def get_entry(entry_id):
    try:
        return load_catalog()[entry_id]
    except KeyError:
        raise HRError("NOT_IN_CATALOG", f"unknown entry {entry_id!r}") from None


def _alg(spec, env):
    return ClassicalAlgebra(spec["family"], tuple(evaluate(x, env) for x in spec["params"]))


@dataclass(frozen=True)
class PairInstance:
    """A catalog entry with its parameters substituted."""

    entry_id: str
    case: str
    env: tuple                 # sorted (name, value) pairs
    g: object                  # real form (case C) or None
    h: tuple                   # (family, params) factors
    c_dual: object
    real_form: object          # case B
    ambient: object            # complex ClassicalAlgebra
    partition: object          # Partition or None
    align_swap: bool

    @property
    def params(self):
        return dict(self.env)

    def name(self):
        e = get_entry(self.entry_id)
        vals = ", ".join(f"{k}={v}" for k, v in self.env)
        return f"{e['name']} ({vals})" if vals else e["name"]

    def h_real_rank(self):
        return sum(factor_real_rank(f, ps) for f, ps in self.h)

    def satake_pair(self):
        if self.case != "C":
            raise HRError("NOT_IN_CATALOG", f"{self.entry_id} is not a case C pair")
        sg = satake(self.g)
        sgc = satake(self.c_dual)
        if self.align_swap:
            rank = sgc.rank
            sgc = sgc.relabel({rank - 1: rank, rank: rank - 1})
        return sg, sgc


def instantiate(entry, **params):
    if isinstance(entry, str):
        entry = get_entry(entry)
    names = entry.get("params", [])
    if set(params) != set(names):
        raise HRError("INVALID_PARAMS", f"{entry['id']} needs parameters {names}")
    env = {k: int(v) for k, v in params.items()}
    for c in entry.get("constraints", []):
        if not evaluate(c, env):
            raise HRError("INVALID_PARAMS", f"{entry['id']}: constraint {c} fails for {env}")
    g = _alg(entry["g"], env) if "g" in entry else None
    gc = _alg(entry["c_dual"], env) if "c_dual" in entry else None
    rf = _alg(entry["real_form"], env) if "real_form" in entry else None
    h = []
    for f in entry.get("h", []):
        h.append((f["family"], tuple(evaluate(x, env) for x in f.get("params", []))))
    if "ambient" in entry:
        ambient = _alg(entry["ambient"], env)
    else:
        ambient = complexification(g if g is not None else rf)
    part = None
    if entry.get("partition"):
        pairs = [(evaluate(d, env), evaluate(r, env)) for d, r in entry["partition"]]
        part = Partition.from_multiplicities([(d, r) for d, r in pairs if r > 0])
    swap = bool(evaluate(entry["align"], env)) if "align" in entry else False
    return PairInstance(entry["id"], entry["case"], tuple(sorted(env.items())), g, tuple(h),
                        gc, rf, ambient, part, swap)


def c_dual(entry, **params):
    return instantiate(entry, **params).c_dual


def satake_pair(entry, **params):
    return instantiate(entry, **params).satake_pair()


def graph_automorphism(entry, **params):
    """Node permutation induced on the Dynkin diagram by a case A involution."""
    inst = instantiate(entry, **params)
    e = get_entry(inst.entry_id)
    if inst.case != "A":
        raise HRError("NOT_IN_CATALOG", f"{inst.entry_id} is not a complex symmetric pair")
    letter, rank = dynkin_of(inst.ambient)
    kind = e.get("involution", "identity")
    perm = list(range(1, rank + 1))
    if kind == "fork":
        perm[rank - 2], perm[rank - 1] = rank, rank - 1
    elif kind == "flip":
        perm = perm[::-1]
    trivial = perm == list(range(1, rank + 1))
    return {"permutation": perm, "trivial": trivial}


def alignment_report(inst):
    """Matching-space dimension against the real rank of h, plus alignment uniqueness."""
    sg, sgc = inst.satake_pair()
    expected = inst.h_real_rank()
    got = matching_space_dim(sg, sgc)
    base = satake(inst.c_dual)
    autos = diagram_automorphisms(sg.letter, sg.rank)
    passing = []
    for sigma in autos:
        cand = base.relabel(sigma)
        if matching_space_dim(sg, cand) == expected:
            passing.append(cand)
    # alignments related by an automorphism fixing S_g are the same situation
    classes = []
    for cand in passing:
        same = False
        for rep in classes:
            for tau in autos:
                if sg.relabel(tau) == sg and cand.relabel(tau) == rep:
                    same = True
        if not same:
            classes.append(cand)
    return {"id": inst.entry_id, "params": inst.params, "expected": expected, "dim": got,
            "pass": got == expected, "ambiguous": len(classes) > 1}


def enumerate_instances(entry, bound=6, max_rank=8):
    """All parameter assignments in [0, bound] meeting the constraints, small ambient rank."""
    if isinstance(entry, str):
        entry = get_entry(entry)
    names = entry.get("params", [])
    out = []
    for vals in product(range(bound + 1), repeat=len(names)):
        env = dict(zip(names, vals))
        try:
            inst = instantiate(entry, **env)
            _, rank = dynkin_of(inst.ambient)
        except HRError:
            continue
        if rank <= max_rank:
            out.append(inst)
    return out


def parse_real_form(tokens):
    """['su', '3', '1'] or ['sl', '4', 'R'] -> ClassicalAlgebra."""
    t = [x.lower() for x in tokens]
    head = t[0]
    try:
        if head in ("su", "so", "sp") and len(t) == 3 and t[2] not in ("r", "c"):
            return ClassicalAlgebra(head.upper(), (int(t[1]), int(t[2])))
        if head == "sl" and len(t) == 3:
            return ClassicalAlgebra({"r": "SL_R", "h": "SL_H"}[t[2]], (int(t[1]),))
        if head == "sp" and len(t) == 3 and t[2] == "r":
            return ClassicalAlgebra("SP_R", (int(t[1]),))
        if head in ("so*", "sostar") and len(t) == 2:
            return ClassicalAlgebra("SO_STAR", (int(t[1]),))
    except (KeyError, ValueError):
        pass
    raise HRError("USAGE", f"cannot parse real form {' '.join(tokens)!r}")


# ------------------------------------------------------------ pair lookup

def parse_factor(tokens):
    """A factor of h: any real form, or 'u p q', 'so2', 'sl n C', 'so n C', 'sp n C'."""
    t = [x.lower() for x in tokens]
    try:
        if t[0] == "u" and len(t) == 3:
            return ("U", (int(t[1]), int(t[2])))
        if t == ["so2"]:
            return ("SO2", ())
        if len(t) == 3 and t[2] == "c" and t[0] in ("sl", "so", "sp"):
            return (t[0].upper() + "_C", (int(t[1]),))
    except ValueError:
        raise HRError("USAGE", f"cannot parse factor {' '.join(tokens)!r}") from None
    g = parse_real_form(tokens)
    return (g.family, tuple(g.params))


def _normal_factor(f):
    fam, ps = f
    if fam == "SO2":
        fam, ps = "SO", (2, 0)
    if fam in ("SO", "SU", "U", "SP"):
        ps = tuple(sorted(ps, reverse=True))
        if sum(ps) == 0 or (fam == "SO" and sum(ps) <= 1):
            return None
    if (fam == "SO_C" and ps[0] <= 1) or (fam == "SO_STAR" and ps[0] == 0):
        return None
    return (fam, ps)


def _normal_h(factors):
    return sorted(x for x in map(_normal_factor, factors) if x is not None)


def find_pair(g, factors):
    """First catalog instance (in catalog order) with group g and isotropy factors."""
    want = _normal_h(factors)
    bound = g.complex_dim()
    for e in catalog_entries():
        if e["case"] != "C" or e["g"]["family"] != g.family:
            continue
        for vals in product(range(bound + 1), repeat=len(e["params"])):
            try:
                inst = instantiate(e, **dict(zip(e["params"], vals)))
            except HRError:
                continue
            if inst.g == g and _normal_h(inst.h) == want:
                return inst
    raise HRError("NOT_IN_CATALOG", f"no catalog pair with g = {g.name()}")
