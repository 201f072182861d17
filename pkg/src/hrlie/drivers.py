"""Batch checks that rebuild the tables from the library and report pass/fail.

Every driver returns {"table": id, "pass": bool, "items": [{"id", "pass", "detail"}]}
with items in a fixed order, so repeated runs print identical output.
"""

from dataclasses import dataclass
from fractions import Fraction
from typing import Optional

from .errors import HRError
from .hr_builder import build_witness, certify_row, table3_rows, verify_family
from .hurwitz_radon import (ClassicalAlgebra, SO, SP, SU, chain2_algebra, chain_algebra,
                            chain_position, rho, rho_variant, rho_via_chain)
from .properness import (classify_spin, classify_spin_space, direct_instances, space,
                         table1_instances, table6_witness, verify_ve)
from .satake import alignment_report, catalog_entries, enumerate_instances

RHO_TABLE = [("1/16", -7), ("1/8", -6), ("1/4", -4), ("1/2", 0), ("1", 1), ("2", 2),
             ("4", 4), ("8", 8), ("16", 9)]

TABLES = ("rho", "2", "3", "chains", "1", "6", "spin", "catalog")


@dataclass
class DriverConfig:
    table2_max_dim: int = 64
    chain_max_size: int = 64
    ve_bound: int = 16
    direct_max_size: int = 12
    spin_max_N: int = 16
    catalog_bound: int = 6
    catalog_max_rank: int = 8


def _report(table, items):
    return {"table": table, "pass": all(i["pass"] for i in items), "items": items}


def _item(id_, ok, detail):
    return {"id": id_, "pass": bool(ok), "detail": detail}


def rho_table(cfg=None):
    items = []
    for arg, want in RHO_TABLE:
        got = rho(Fraction(arg))
        items.append(_item(arg, got == want, {"value": got, "expected": want}))
    return _report("rho", items)


def table2_algebras(max_dim=64):
    """Every Table 2 algebra whose standard representation has complex dimension <= max_dim."""
    out = []
    for n in range(1, max_dim + 1):
        cands = [SO(n, n), ClassicalAlgebra("GL_R", (n,)), ClassicalAlgebra("SP_R", (n,)),
                 ClassicalAlgebra("SP_C", (n,)), SP(n, n), ClassicalAlgebra("GL_H", (n,)),
                 ClassicalAlgebra("SO_STAR", (2 * n,)), ClassicalAlgebra("SO_C", (n,)),
                 ClassicalAlgebra("GL_C", (n,)), SU(n, n), ClassicalAlgebra("SL_R", (n,)),
                 ClassicalAlgebra("SL_C", (n,)), ClassicalAlgebra("SL_H", (n,))]
        out += [g for g in cands if g.complex_dim() <= max_dim]
    out.sort(key=lambda g: (g.complex_dim(), g.family, g.params))
    return out


def table2(cfg=None):
    cfg = cfg or DriverConfig()
    items = []
    for g in table2_algebras(cfg.table2_max_dim):
        r1, r2 = rho_variant(g, 1), rho_variant(g, 2)
        if g.family.startswith("SL_") and g.params[0] % 2:
            # sl(2N+1, D): no square root of I, but an invertible hermitian element when N >= 1
            want = [0, 0] if g.params[0] == 1 else [0, 1]
            ok = [r1, r2] == want
            detail = {"rho1": r1, "rho2": r2, "expected": want}
        else:
            c = rho_via_chain(g)
            ok = r1 == r2 == c
            detail = {"rho1": r1, "rho2": r2, "chain": c}
        items.append(_item(g.name(), ok, detail))
    return _report("2", items)


def table3(cfg=None):
    items = []
    for row in table3_rows():
        c = certify_row(row)
        items.append(_item(c["row"], c["pass"], {"basis_size": c["basis_size"],
                                                 "checks": c["checks"]}))
    return _report("3", items)


def chain_members(max_size=64):
    """Chain algebras over odd bases 1 and 3 whose witness matrices have size <= max_size."""
    out = []
    for fn, slots in ((chain_algebra, range(1, 9)), (chain2_algebra, (1, 2))):
        for i in slots:
            for m in (1, 3):
                n = m
                while True:
                    fam = build_witness(fn(i, n))
                    if fam.realization.size > max_size:
                        break
                    out.append(fam)
                    n *= 2
    return out


def chains(cfg=None):
    cfg = cfg or DriverConfig()
    items = []
    for fam in chain_members(cfg.chain_max_size):
        g = fam.realization.alg
        v = verify_family(fam)
        want = rho_variant(g, 1)
        pos = chain_position(g).to_json()
        ok = v["pass"] and len(fam) == want
        items.append(_item(g.name(), ok, {"chain": pos, "size": fam.realization.size,
                                          "matrices": len(fam), "expected": want}))
    return _report("chains", items)


def table1(cfg=None):
    cfg = cfg or DriverConfig()
    items = []
    spaces = table1_instances() + direct_instances(cfg.direct_max_size)
    for sp in spaces:
        r = verify_ve(sp, cfg.ve_bound)
        detail = {k: r[k] for k in ("case", "size", "partitions", "realizable", "proper",
                                    "vacuous", "skipped")}
        detail["counterexamples"] = r["counterexamples"]
        items.append(_item(sp.name(), r["passed"], detail))
    return _report("1", items)


def table6(cfg=None, row=None):
    items = []
    for e in catalog_entries(table=6):
        if row is not None and e["row"] != row:
            continue
        for params in e["minimal"]:
            w = table6_witness(e, **params)
            items.append(_item(f"{e['id']} {_fmt(params)}".strip(), w["pass"],
                               {"space": w["space"], "partition": w["partition"],
                                "diagrams": w["diagrams"], "checks": w["checks"]}))
    if row is not None and not items:
        raise HRError("NOT_IN_CATALOG", f"Table 6 has no row {row}")
    return _report("6", items)


def _fmt(params):
    return ",".join(f"{k}={v}" for k, v in sorted(params.items()))


def spin(cfg=None):
    cfg = cfg or DriverConfig()
    items = []
    for N in range(1, cfg.spin_max_N + 1):
        got = sorted(classify_spin(SO(N, N)))
        want = list(range(2, rho(N) + 1))
        detail = {"n": got, "rho": rho(N)}
        ok = got == want
        if N >= 3:
            # the catalogued space also cross-checks n = 2 against the Dynkin data
            c = classify_spin_space(space("hyperboloid", p=N, q=N - 1))
            detail["proper_sl2"] = c["proper_sl2"]
            ok = ok and c["consistent"] and c["n"] == want
        items.append(_item(f"H^{N},{N - 1}", ok, detail))
    for sp in table1_instances():
        c = classify_spin_space(sp)
        ok = c["consistent"] and c["n"] == list(range(2, rho_variant(sp.group(), 1) + 1))
        items.append(_item(sp.name(), ok, {"g": c["g"], "n": c["n"],
                                           "proper_sl2": c["proper_sl2"]}))
    return _report("spin", items)


def catalog(cfg=None):
    cfg = cfg or DriverConfig()
    items = []
    for e in catalog_entries(case="C"):
        for inst in enumerate_instances(e, cfg.catalog_bound, cfg.catalog_max_rank):
            r = alignment_report(inst)
            items.append(_item(f"{e['id']} {_fmt(inst.params)}", r["pass"] and not r["ambiguous"],
                               {"dim": r["dim"], "real_rank_h": r["expected"],
                                "ambiguous": r["ambiguous"]}))
    return _report("catalog", items)


DRIVERS = {"rho": rho_table, "2": table2, "3": table3, "chains": chains, "1": table1,
           "6": table6, "spin": spin, "catalog": catalog}


def apply_max_n(cfg, table, max_n):
    """--max-N adjusts the size bound that matters for the chosen table."""
    field_ = {"2": "table2_max_dim", "chains": "chain_max_size", "1": "direct_max_size",
              "spin": "spin_max_N", "catalog": "catalog_bound"}.get(table)
    if field_ is not None:
        setattr(cfg, field_, max_n)
    return cfg


def reproduce_tables(tables=None, row: Optional[int] = None, max_n: Optional[int] = None,
                     cfg=None):
    """Run the chosen drivers (all by default) in a fixed order."""
    tables = list(tables or TABLES)
    for t in tables:
        if t not in DRIVERS:
            raise HRError("USAGE", f"unknown table {t!r}; choose from {', '.join(TABLES)}")
    reports = []
    for t in TABLES:
        if t not in tables:
            continue
        c = cfg or DriverConfig()
        if max_n is not None:
            c = apply_max_n(DriverConfig(**vars(c)), t, max_n)
        reports.append(table6(c, row) if t == "6" else DRIVERS[t](c))
    return {"pass": all(r["pass"] for r in reports), "tables": reports}
