"""Properness of SL(2,R)-actions on symmetric spaces and Property (VE) checks.

A homomorphism sl(2,C) -> g_C is given by a partition.  Depending on how
the symmetric space sits relative to complex structures, properness is read
off from its weighted Dynkin diagram:

    case A  G_C/H_C        the diagram is moved by the induced graph automorphism
    case B  G_C/G          the diagram fails to match the Satake diagram of g
    case C  G/H            it matches S_g (so it comes from sl(2,R) -> g)
                           but fails to match S_{g^c}
    DIRECT  SL(2N,D)/(SL(p,D) x SL(q,D)) and Sp(N,F)/prod Sp(p_k,F),
            decided straight from the eigenvalues of the image of diag(1,-1)
"""

from dataclasses import dataclass, field

from .errors import HRError
from .hurwitz_radon import ClassicalAlgebra, rho_variant
from .satake import (find_entry, find_pair, get_entry, graph_automorphism, instantiate,
                     matches, parse_factor, parse_real_form, satake)
from .sl2_orbits import (NONE, Partition, eigenvalues, is_valid, is_very_even,
                         partitions_of, valid_partitions, weighted_diagram)

CASES = ("A", "B", "C", "DIRECT")


@dataclass(frozen=True)
class DirectFamily:
    """SL(2N,D)/(SL(p,D) x SL(q,D)) with p, q odd, or Sp(N,F)/prod Sp(p_k,F) with sum N-1."""

    kind: str          # "SL" or "SP"
    field: str         # R, C, H for SL; R, C for SP
    N: int
    p: int = 0
    q: int = 0
    blocks: tuple = ()

    def __post_init__(self):
        if self.kind == "SL":
            if self.field not in "RCH" or self.p % 2 == 0 or self.q % 2 == 0 \
                    or self.p + self.q != 2 * self.N or min(self.p, self.q) < 1:
                raise HRError("INVALID_PARAMS", "SL family needs odd p, q with p + q = 2N")
        elif self.kind == "SP":
            if self.field not in "RC" or sum(self.blocks) != self.N - 1 \
                    or any(b < 1 for b in self.blocks):
                raise HRError("INVALID_PARAMS", "Sp family needs block sizes summing to N-1")
        else:
            raise HRError("INVALID_PARAMS", f"unknown family kind {self.kind!r}")

    @property
    def size(self):
        """Size of the partitions: 2N for SL (over D), 2N for Sp (its C^{2N})."""
        return 2 * self.N

    def ambient(self):
        """The sl(2,C)-homomorphisms are labelled as for this complex algebra."""
        if self.kind == "SL":
            return ClassicalAlgebra("SL_C", (2 * self.N,))
        return ClassicalAlgebra("SP_C", (self.N,))

    def group(self):
        if self.kind == "SL":
            return ClassicalAlgebra("SL_" + self.field, (2 * self.N,))
        return ClassicalAlgebra("SP_" + self.field, (self.N,))

    def name(self):
        if self.kind == "SL":
            d = self.field
            return f"SL({2 * self.N},{d})/(SL({self.p},{d})xSL({self.q},{d}))"
        inner = "x".join(f"Sp({b},{self.field})" for b in self.blocks) or "{e}"
        return f"Sp({self.N},{self.field})/{inner}"


@dataclass(frozen=True)
class SymmetricSpace:
    case: str
    instance: object = None    # satake.PairInstance
    direct: object = None      # DirectFamily

    def name(self):
        return self.direct.name() if self.direct else self.instance.name()

    def ambient(self):
        return self.direct.ambient() if self.direct else self.instance.ambient

    def group(self):
        """The real Lie algebra g of G (complex groups viewed as real)."""
        if self.direct:
            return self.direct.group()
        inst = self.instance
        return inst.g if inst.case == "C" else inst.ambient

    def in_table1(self):
        if self.direct:
            return True
        e = get_entry(self.instance.entry_id)
        return e["table"] == 1 or "t1_row" in e or self._is_h_n_n1()

    def _is_h_n_n1(self):
        if self.instance.entry_id != "hyperboloid":
            return False
        ps = self.instance.params
        return ps["p"] == ps["q"] + 1

    def partitions(self):
        if self.direct:
            if self.direct.kind == "SL":
                return [(Partition(x), 1) for x in partitions_of(self.direct.size)]
            return valid_partitions(self.direct.ambient())
        return valid_partitions(self.ambient())


def space(entry, **params):
    inst = instantiate(entry, **params)
    return SymmetricSpace(inst.case, instance=inst)


def table1_space(row, **params):
    return space(find_entry(1, row), **params)


def sl_direct(field_, N, p, q):
    return SymmetricSpace("DIRECT", direct=DirectFamily("SL", field_, N, p, q))


def sp_direct(field_, N, blocks):
    return SymmetricSpace("DIRECT", direct=DirectFamily("SP", field_, N, blocks=tuple(blocks)))


# ------------------------------------------------------------------ verdicts

@dataclass
class OrbitVerdict:
    label: str
    weights: tuple
    realizable: bool
    proper: bool
    reason: str

    def to_json(self):
        return {"label": self.label, "weights": list(self.weights),
                "realizable": self.realizable, "proper": self.proper, "reason": self.reason}


@dataclass
class PropernessVerdict:
    """Partition-level verdict.

    A partition is realizable when one of its orbits is, and proper when it
    is realizable and every realizable orbit acts properly.
    """

    partition: object
    orbits: list = field(default_factory=list)

    @property
    def realizable(self):
        return any(o.realizable for o in self.orbits)

    @property
    def proper(self):
        live = [o for o in self.orbits if o.realizable]
        return bool(live) and all(o.proper for o in live)

    def to_json(self):
        return {"partition": str(self.partition), "realizable": self.realizable,
                "proper": self.proper, "orbits": [o.to_json() for o in self.orbits]}


def _diagrams(g, p):
    if not is_valid(g, p):
        raise HRError("INVALID_PARTITION", f"{p} is not valid for {g}")
    return weighted_diagram(g, p)


def _require(sp, case):
    if sp.case != case:
        raise HRError("INVALID_PARAMS", f"{sp.name()} is a case {sp.case} space, not {case}")


def proper_case_a(sp, p):
    _require(sp, "A")
    inst = sp.instance
    perm = graph_automorphism(inst.entry_id, **inst.params)["permutation"]
    out = PropernessVerdict(p)
    for d in _diagrams(inst.ambient, p):
        moved = tuple(d.weights[j - 1] for j in perm)
        proper = moved != d.weights
        why = f"moved to {list(moved)}" if proper else "fixed by the graph automorphism"
        out.orbits.append(OrbitVerdict(d.orbit_label, d.weights, True, proper, why))
    return out


def proper_case_b(sp, p):
    _require(sp, "B")
    inst = sp.instance
    s = satake(inst.real_form)
    out = PropernessVerdict(p)
    for d in _diagrams(inst.ambient, p):
        m = matches(d, s)
        why = f"matches S_g of {s.name}" if m else f"breaks S_g of {s.name}"
        out.orbits.append(OrbitVerdict(d.orbit_label, d.weights, True, not m, why))
    return out


def proper_case_c(sp, p):
    _require(sp, "C")
    sg, sgc = sp.instance.satake_pair()
    out = PropernessVerdict(p)
    for d in _diagrams(sp.instance.ambient, p):
        real = matches(d, sg)
        if not real:
            out.orbits.append(OrbitVerdict(d.orbit_label, d.weights, False, False,
                                           f"breaks S_g of {sg.name}"))
            continue
        m = matches(d, sgc)
        why = f"matches S_g; {'matches' if m else 'breaks'} S_gc of {sgc.name}"
        out.orbits.append(OrbitVerdict(d.orbit_label, d.weights, True, not m, why))
    return out


def has_zero_subsum(values, k):
    """Whether some k-element sub-multiset of the integers sums to 0 (exact DP)."""
    reach = [set() for _ in range(k + 1)]
    reach[0].add(0)
    for v in values:
        for j in range(k, 0, -1):
            reach[j] |= {s + v for s in reach[j - 1]}
    return 0 in reach[k]


def proper_direct(sp, p):
    """Eigenvalue criterion for the two DIRECT families; also returns the very-even route."""
    _require(sp, "DIRECT")
    fam = sp.direct
    if p.size != fam.size or (fam.kind == "SP" and not is_valid(fam.ambient(), p)):
        raise HRError("INVALID_PARTITION", f"{p} is not valid for {fam.name()}")
    ev = eigenvalues(p)
    if fam.kind == "SL":
        proper = not has_zero_subsum(ev, fam.p)
        why = f"no {fam.p} eigenvalues sum to 0" if proper else f"some {fam.p} eigenvalues sum to 0"
    else:
        proper = 0 not in ev
        why = "no zero eigenvalue" if proper else "zero eigenvalue"
    out = PropernessVerdict(p)
    out.orbits.append(OrbitVerdict(NONE, ev, True, proper, why))
    return out


def proper(sp, p):
    if isinstance(p, str):
        p = Partition.parse(p)
    return {"A": proper_case_a, "B": proper_case_b, "C": proper_case_c,
            "DIRECT": proper_direct}[sp.case](sp, p)


# --------------------------------------------------------- Property (VE)

def verify_ve(sp, bound=16):
    """Check proper <=> very even on every realizable orbit, for ambient size <= bound."""
    size = sp.direct.size if sp.direct else sp.ambient().complex_dim()
    report = {"space": sp.name(), "case": sp.case, "size": size, "skipped": size > bound,
              "partitions": 0, "realizable": 0, "proper": 0, "counterexamples": []}
    if size > bound:
        report.update(passed=True, vacuous=True)
        return report
    realizable_ve = 0
    for part, _ in sp.partitions():
        v = proper(sp, part)
        report["partitions"] += 1
        ve = is_very_even(part)
        if v.realizable:
            report["realizable"] += 1
        if v.proper:
            report["proper"] += 1
        for o in v.orbits:
            if not o.realizable:
                continue
            realizable_ve += ve
            if o.proper != ve:
                report["counterexamples"].append(
                    {"partition": str(part), "orbit": o.label, "proper": o.proper,
                     "very_even": ve})
    report["passed"] = not report["counterexamples"]
    # nothing very even is realizable: the equivalence only says nothing is proper
    report["vacuous"] = realizable_ve == 0
    return report


def table1_instances():
    """Every Table 1 space at its listed instance parameters."""
    from .satake import load_catalog
    out = []
    for e in load_catalog().values():
        if e["table"] == 1 or "t1_row" in e:
            for params in e.get("instances", e.get("minimal", [])):
                out.append(space(e, **params))
    out.sort(key=lambda s: (find_row(s), s.name()))
    return out


def find_row(sp):
    e = get_entry(sp.instance.entry_id)
    return e.get("t1_row", e["row"])


def direct_instances(max_size=12):
    """SL(2N,D)/(SL(p,D) x SL(q,D)) and Sp(N,F)/prod Sp(p_k,F) with ambient size <= max_size."""
    out = []
    for N in range(1, max_size // 2 + 1):
        for p in range(1, 2 * N, 2):
            if p <= 2 * N - p:
                for d in "RCH":
                    out.append(sl_direct(d, N, p, 2 * N - p))
        for blocks in partitions_of(N - 1):
            for f in "RC":
                out.append(sp_direct(f, N, blocks))
    return out


# ------------------------------------------------------------ Table 6

def table6_witness(entry, **params):
    """Checks that the listed partition gives a proper action through a non-very-even map."""
    inst = instantiate(entry, **params)
    if inst.partition is None:
        raise HRError("NOT_IN_CATALOG", f"{inst.entry_id} has no witness partition")
    p = inst.partition
    valid = is_valid(inst.ambient, p)
    items = {"valid": valid, "realizable": False, "proper": False,
             "not_very_even": not is_very_even(p)}
    if valid:
        v = proper(SymmetricSpace(inst.case, instance=inst), p)
        items["realizable"] = v.realizable
        items["proper"] = v.proper
        diagrams = [list(o.weights) for o in v.orbits]
    else:
        diagrams = []
    return {"id": inst.entry_id, "space": inst.name(), "partition": str(p),
            "diagrams": diagrams, "checks": items, "pass": all(items.values())}


# --------------------------------------------------- Spin(n,1) classification

def classify_spin(g):
    """{n : 2 <= n <= rho1(g)} for g whose symmetric space is asserted to have Property (VE)."""
    return set(range(2, rho_variant(g, 1) + 1))


def classify_spin_space(sp):
    """classify_spin for a catalogued space, with the SL(2,R) = Spin(2,1) cross-check."""
    if not sp.in_table1():
        raise HRError("NOT_VE_ASSERTED", f"{sp.name()} is not asserted to have Property (VE)")
    ns = classify_spin(sp.group())
    some_proper = any(proper(sp, part).proper for part, _ in sp.partitions())
    return {"space": sp.name(), "g": sp.group().name(), "rho1": rho_variant(sp.group(), 1),
            "n": sorted(ns), "proper_sl2": some_proper, "consistent": (2 in ns) == some_proper}


# --------------------------------------------------------------- parsing

def parse_space(tokens):
    """Text forms accepted by the command line.

        H p q                   SO(p,q+1)/SO(p,q)
        t1 ROW N [p]            Table 1 row (also t4, t5, t6 with their parameters in order)
        X N p                   SO(2N,C)/SO(2p+1,C) x SO(2N-2p-1,C)
        entry ID k=v ...        any catalog entry
        sl-direct D N p q       SL(2N,D)/(SL(p,D) x SL(q,D))
        sp-direct F N b1 b2 ... Sp(N,F)/prod Sp(b_k,F)
        pair G / H1 [+ H2]      looked up in the catalog, e.g. pair so 4 4 / so 4 3
    """
    if not tokens:
        raise HRError("USAGE", "empty space description")
    head, rest = tokens[0].lower(), tokens[1:]
    try:
        if head == "h" and len(rest) == 2:
            return space("hyperboloid", p=int(rest[0]), q=int(rest[1]))
        if head == "x" and len(rest) == 2:
            return space("t1-10", N=int(rest[0]), p=int(rest[1]))
        if head in ("t1", "t4", "t5", "t6") and rest:
            e = find_entry(int(head[1]), int(rest[0]))
            vals = [int(x) for x in rest[1:]]
            if len(vals) != len(e["params"]):
                raise HRError("USAGE", f"{e['id']} takes parameters {e['params']}")
            return space(e, **dict(zip(e["params"], vals)))
        if head == "entry" and rest:
            kv = dict(x.split("=") for x in rest[1:])
            return space(rest[0], **{k: int(v) for k, v in kv.items()})
        if head == "pair" and "/" in rest:
            cut = rest.index("/")
            g = parse_real_form(rest[:cut])
            factors, cur = [], []
            for tok in rest[cut + 1:] + ["+"]:
                if tok == "+":
                    factors.append(parse_factor(cur))
                    cur = []
                else:
                    cur.append(tok)
            inst = find_pair(g, factors)
            return SymmetricSpace(inst.case, instance=inst)
        if head == "sl-direct" and len(rest) == 4:
            return sl_direct(rest[0].upper(), int(rest[1]), int(rest[2]), int(rest[3]))
        if head == "sp-direct" and len(rest) >= 2:
            return sp_direct(rest[0].upper(), int(rest[1]), [int(x) for x in rest[2:]])
    except HRError:
        raise
    except ValueError:
        pass
    raise HRError("USAGE", f"cannot parse space {' '.join(tokens)!r}")
