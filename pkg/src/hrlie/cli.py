"""Command-line front end.

Exit status is 0 on success, 1 when a verification fails and 2 for bad input.
``--json`` switches every verb to machine-readable output; ``--ascii`` draws
diagrams with o, * and <-> instead of circles and arrows.
"""

import argparse
import json
import sys
from fractions import Fraction

from . import drivers
from .clifford import certify_type, clifford_type, eta_check
from .errors import HRError
from .hr_builder import build_witness, verify_family
from .hurwitz_radon import (FAMILIES, ClassicalAlgebra, chain_position, chain_walk, rho,
                            rho_variant, rho_via_chain)
from .properness import classify_spin_space, parse_space, proper, space, verify_ve
from .satake import matching_space_dim, parse_real_form, satake
from .sl2_orbits import (Partition, dynkin_of, is_very_even, parse_type, render_dynkin,
                         valid_partitions, very_even_from_diagram, weighted_diagram)
from .spin_rep import (CONJ, DUAL, DAGGERS, SIGN_MAPS, RepMultiplicity, embed_U,
                       embed_real_form, index_spin, parse_weight, self_dagger, spinify,
                       weyl_dimension)

SPACE_GRAMMAR = """space descriptors:
  H p q                    SO(p,q+1)/SO(p,q)
  so-split N               SO(N,N)/SO(N,N-1)
  X N p                    SO(2N,C)/SO(2p+1,C) x SO(2N-2p-1,C)
  t1|t4|t5|t6 ROW args...  a table row with its parameters in order
  entry ID k=v ...         any catalog entry by id
  pair G / H1 [+ H2]       e.g. pair so 4 4 / so 4 3, pair su 4 4 / u 3 4 + u 1 0
  sl-direct D N p q        SL(2N,D)/(SL(p,D) x SL(q,D)), D in R C H, p q odd
  sp-direct F N b1 b2 ...  Sp(N,F)/prod Sp(b_k,F), F in R C, sum b_k = N-1
real forms: sl n R|H, su p q, so p q, sp p q, sp n R, so* m
multiplicities: 'S=1;(3/2,1/2)=2' (labels S, S1, S2 or a highest weight)
"""


class Result:
    """What a verb produces: an exit code, a JSON payload and its text form."""

    def __init__(self, payload, text, ok=True):
        self.payload = payload
        self.text = text
        self.code = 0 if ok else 1


# --------------------------------------------------------------- parsing

def _algebra(family, params):
    fam = family.upper()
    if fam not in FAMILIES:
        raise HRError("USAGE", f"family must be one of {', '.join(FAMILIES)}")
    return ClassicalAlgebra(fam, tuple(params))


def _space(tokens):
    if tokens and tokens[0].lower() == "so-split" and len(tokens) == 2:
        return space("t4-4", N=int(tokens[1]), p=0)
    return parse_space(tokens)


def parse_mults(n, text):
    mults = {}
    for chunk in filter(None, (c.strip() for c in text.split(";"))):
        if "=" not in chunk:
            raise HRError("USAGE", f"multiplicity {chunk!r} needs the form label=count")
        label, count = chunk.rsplit("=", 1)
        mults[label.strip()] = mults.get(label.strip(), 0) + int(count)
    return RepMultiplicity.from_labels(n, mults)


def _set_text(ns):
    return "{" + ",".join(str(x) for x in ns) + "}"


def _report_text(report):
    lines = []
    for item in report["items"]:
        mark = "PASS" if item["pass"] else "FAIL"
        line = f"{mark}  {item['id']}"
        if not item["pass"]:
            line += "  " + json.dumps(item["detail"], sort_keys=True)
        lines.append(line)
    n_ok = sum(i["pass"] for i in report["items"])
    verdict = "PASS" if report["pass"] else "FAIL"
    lines.append(f"table {report['table']}: {verdict} ({n_ok}/{len(report['items'])})")
    return "\n".join(lines)


# ----------------------------------------------------------------- verbs

def cmd_rho(a):
    v = rho(Fraction(a.value))
    return Result({"value": v}, str(v))


def cmd_rho_variant(a):
    g = _algebra(a.family, a.params)
    v = rho_variant(g, a.which)
    try:
        pos = chain_position(g).to_json()
    except HRError:
        pos = None
    return Result({"value": v, "chain_position": pos}, str(v))


def cmd_chain(a):
    g = _algebra(a.family, a.params)
    pos = chain_position(g)
    walk = [p.algebra().name() for p in chain_walk(pos)]
    v = rho_via_chain(g)
    return Result({"value": v, "chain_position": pos.to_json(), "walk": walk},
                  f"{v}\n" + " > ".join(walk))


def cmd_hr_witness(a):
    g = _algebra(a.family, a.params)
    fam = build_witness(g)
    payload = fam.to_json()
    want = rho_variant(g, 1)
    ok = len(fam) == want
    text = [f"{g.name()}: {len(fam)} matrices of size {fam.realization.size} "
            f"over {fam.realization.field} (expected {want})"]
    text += [f"note: {n}" for n in fam.notes]
    if a.verify:
        rep = verify_family(fam)
        ok = ok and rep["pass"]
        payload["verification"] = {"pass": ok, "checks": rep["checks"]}
        text.append(f"verification: {'PASS' if ok else 'FAIL'} ({len(rep['checks'])} checks)")
    return Result(payload, "\n".join(text), ok)


def _type_text(t):
    d = {"MAT_R": "R", "MAT_R_SUM": "R", "MAT_C": "C", "MAT_C_SUM": "C",
         "MAT_H": "H", "MAT_H_SUM": "H"}[t.kind]
    one = f"M({t.block_size},{d})"
    return one + " + " + one if t.kind.endswith("_SUM") else one


def cmd_clifford_type(a):
    t = clifford_type(a.p, a.q)
    payload = t.to_json()
    ok = True
    if a.certify:
        ok = certify_type(a.p, a.q) == t
        payload["certified"] = ok
    return Result(payload, _type_text(t), ok)


def cmd_eta_check(a):
    r = eta_check(a.n)
    lines = [f"{k}: {'PASS' if v else 'FAIL'}" for k, v in r["checks"].items()]
    return Result(r, "\n".join(lines), r["pass"])


def _diagram_payload(g, part):
    ds = weighted_diagram(g, part)
    return {"partition": list(part.parts), "weights": [list(d.weights) for d in ds],
            "labels": [d.orbit_label for d in ds], "very_even": is_very_even(part),
            "diagram_very_even": [very_even_from_diagram(g, d) for d in ds],
            "orbits": len(ds)}


def cmd_partitions(a):
    g = parse_type(f"{a.type}{a.N}")
    rows = [_diagram_payload(g, p) for p, _ in valid_partitions(g, very_even_only=a.very_even_only)]
    text = []
    for r in rows:
        ve = " very-even" if r["very_even"] else ""
        w = "  ".join(" ".join(map(str, x)) for x in r["weights"])
        text.append(f"{str(Partition(tuple(r['partition']))):<16} {w}{ve}")
    return Result({"algebra": g.name(), "partitions": rows}, "\n".join(text))


def cmd_diagram(a):
    g = parse_type(a.type)
    part = Partition.parse(a.partition)
    r = _diagram_payload(g, part)
    letter, rank = dynkin_of(g)
    text = []
    for w, label in zip(r["weights"], r["labels"]):
        head = f"{g.name()} {part}" + ("" if label == "NONE" else f" {label}")
        text.append(head + "\n" + render_dynkin(letter, rank, w, unicode=not a.ascii))
    text.append(f"very even: {r['very_even']}, orbits: {r['orbits']}")
    return Result(r, "\n\n".join(text))


def cmd_satake(a):
    s = satake(parse_real_form(a.form))
    return Result(s.to_json(), s.render(unicode=not a.ascii))


def cmd_satake_pair(a):
    sp = _space(a.space)
    if sp.case != "C":
        raise HRError("USAGE", "satake-pair needs a pair of real forms (case C)")
    sg, sgc = sp.instance.satake_pair()
    dim = matching_space_dim(sg, sgc)
    want = sp.instance.h_real_rank()
    payload = {"space": sp.name(), "g": sg.to_json(), "g_c": sgc.to_json(),
               "matching_dim": dim, "real_rank_h": want, "pass": dim == want}
    u = not a.ascii
    text = "\n\n".join([sg.render(unicode=u), sgc.render(unicode=u),
                        f"matching dimension {dim}, real rank of h {want}"])
    return Result(payload, text, dim == want)


def cmd_proper(a):
    if len(a.args) < 2:
        raise HRError("USAGE", "proper needs a space and a partition")
    sp = _space(a.args[:-1])
    part = Partition.parse(a.args[-1])
    v = proper(sp, part)
    payload = v.to_json()
    payload["very_even"] = is_very_even(part)
    text = [f"{sp.name()}  {part}",
            f"realizable: {v.realizable}  proper: {v.proper}  very even: {is_very_even(part)}"]
    for o in v.orbits:
        text.append(f"  {o.label}: {' '.join(map(str, o.weights))}  {o.reason}")
    return Result(payload, "\n".join(text))


def cmd_verify_ve(a):
    if not a.space:
        cfg = drivers.DriverConfig()
        if a.max_N is not None:
            cfg.direct_max_size = a.max_N
        rep = drivers.table1(cfg)
        return Result(rep, _report_text(rep), rep["pass"])
    sp = _space(a.space)
    r = verify_ve(sp, a.max_N if a.max_N is not None else 16)
    verdict = "PASS" if r["passed"] else "FAIL"
    text = [f"{verdict}  {r['space']}: {r['partitions']} partitions, {r['realizable']} "
            f"realizable, {r['proper']} proper, {len(r['counterexamples'])} counterexamples"]
    if r["skipped"]:
        text.append(f"skipped: ambient size {r['size']} exceeds the bound")
    elif r["vacuous"]:
        text.append("no realizable very-even orbit, so nothing is proper")
    return Result(r, "\n".join(text), r["passed"])


def cmd_witness_table6(a):
    rep = drivers.table6(row=a.row)
    return Result(rep, _report_text(rep), rep["pass"])


def cmd_classify_spin(a):
    sp = _space(a.space)
    r = classify_spin_space(sp)
    return Result(r, _set_text(r["n"]), r["consistent"])


def cmd_index_spin(a):
    d = a.dagger.upper()
    if d not in (CONJ, DUAL):
        raise HRError("USAGE", "dagger must be CONJ or DUAL")
    v = index_spin(a.n, d, route=a.route)
    return Result({"n": a.n, "dagger": d, "index": v, "self_dagger": self_dagger(a.n, d)},
                  f"{v:+d}")


def cmd_spinify(a):
    d = a.dagger.upper()
    tau = parse_mults(a.n, a.mults)
    out = spinify(tau, d)
    j = out.to_json()
    text = ";".join(f"{k}={v}" for k, v in j["mults"].items())
    return Result(j, f"{text}  (dim {j['dim']})")


def cmd_weyl_dim(a):
    lam = parse_weight(a.type, a.rank, a.weight)
    v = weyl_dimension(lam.letter, a.rank, lam)
    return Result({"type": f"{lam.letter}{a.rank}", "weight": lam.to_json()["coords"],
                   "dim": v}, str(v))


def cmd_embed(a):
    tau = parse_mults(a.n, a.mults)
    target = a.target.upper()
    if target == "U":
        ok, sig = embed_U(tau), None
    else:
        ok, sig = embed_real_form(tau, target)
    payload = {"n": a.n, "mults": tau.labelled(), "target": target, "embeds": ok,
               "signature": list(sig) if sig else None}
    text = f"{target}: {'yes' if ok else 'no'}" + (f" signature {sig}" if sig else "")
    return Result(payload, text)


def cmd_reproduce(a):
    tables = [a.table] if a.table else None
    rep = drivers.reproduce_tables(tables, row=a.row, max_n=a.max_N)
    text = "\n\n".join(_report_text(r) for r in rep["tables"])
    text += f"\n\noverall: {'PASS' if rep['pass'] else 'FAIL'}"
    return Result(rep, text, rep["pass"])


# ----------------------------------------------------------------- parser

class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise HRError("USAGE", message)


def build_parser():
    p = _Parser(prog="hrlie", description="Hurwitz-Radon numbers and proper actions "
                "of SL(2,R) and Spin(n,1) on classical symmetric spaces.",
                epilog=SPACE_GRAMMAR, formatter_class=argparse.RawDescriptionHelpFormatter)
    p.add_argument("--json", action="store_true", help="machine-readable output")
    p.add_argument("--ascii", action="store_true", help="plain ASCII diagrams")
    sub = p.add_subparsers(dest="verb", metavar="VERB", parser_class=_Parser)

    def verb(name, fn, help_):
        s = sub.add_parser(name, help=help_, epilog=SPACE_GRAMMAR,
                           formatter_class=argparse.RawDescriptionHelpFormatter)
        s.set_defaults(fn=fn)
        return s

    s = verb("rho", cmd_rho, "rho(N) = 8a + 2^b for N = 2^(4a+b) * odd")
    s.add_argument("value")
    s = verb("rho-variant", cmd_rho_variant, "closed-form rho^(i)(g)")
    s.add_argument("family")
    s.add_argument("params", nargs="+", type=int)
    s.add_argument("--which", type=int, choices=(1, 2), default=1)
    s = verb("chain", cmd_chain, "value from the inclusion chains")
    s.add_argument("family")
    s.add_argument("params", nargs="+", type=int)
    s = verb("hr-witness", cmd_hr_witness, "explicit anticommuting family in p")
    s.add_argument("family")
    s.add_argument("params", nargs="+", type=int)
    s.add_argument("--verify", action="store_true")
    s = verb("clifford-type", cmd_clifford_type, "real type of C(p,q)")
    s.add_argument("p", type=int)
    s.add_argument("q", type=int)
    s.add_argument("--certify", action="store_true", help="also check an explicit matrix model")
    s = verb("eta-check", cmd_eta_check, "verify C(n) = C+(n,1)")
    s.add_argument("n", type=int)
    s = verb("partitions", cmd_partitions, "valid partitions with weighted diagrams")
    s.add_argument("type", help="sl, so, sp (size / rank follows) or A, B, C, D")
    s.add_argument("N", type=int)
    s.add_argument("--very-even-only", action="store_true")
    s = verb("diagram", cmd_diagram, "weighted Dynkin diagram of a partition")
    s.add_argument("type", help="e.g. so8, sl4, sp3, D4")
    s.add_argument("partition", help="e.g. 4,4 or [3^2,1^2]")
    s = verb("satake", cmd_satake, "Satake diagram of a real form")
    s.add_argument("form", nargs="+")
    s = verb("satake-pair", cmd_satake_pair, "aligned Satake diagrams of g and g^c")
    s.add_argument("space", nargs="+")
    s = verb("proper", cmd_proper, "properness verdict for a partition")
    s.add_argument("args", nargs="+", metavar="SPACE... PARTITION")
    s = verb("verify-ve", cmd_verify_ve, "proper <=> very even, exhaustively")
    s.add_argument("space", nargs="*")
    s.add_argument("--max-N", dest="max_N", type=int)
    s = verb("witness-table6", cmd_witness_table6, "non-very-even proper witnesses")
    s.add_argument("--row", type=int)
    s = verb("classify-spin", cmd_classify_spin, "n with a proper Spin(n,1)-action")
    s.add_argument("space", nargs="+")
    s = verb("index-spin", cmd_index_spin, "index of the (semi)spin representation")
    s.add_argument("n", type=int)
    s.add_argument("dagger")
    s.add_argument("--route", choices=("clifford", "model"), default="clifford")
    s = verb("spinify", cmd_spinify, "replace tau by (semi)spin representations")
    s.add_argument("n", type=int)
    s.add_argument("mults")
    s.add_argument("dagger", help=", ".join(DAGGERS + ("ID",)))
    s = verb("weyl-dim", cmd_weyl_dim, "Weyl dimension of a dominant weight")
    s.add_argument("type", choices=("B", "C", "D", "b", "c", "d"))
    s.add_argument("rank", type=int)
    s.add_argument("weight", help="e.g. 3/2,1/2")
    s = verb("embed", cmd_embed, "does Im tau lie in a real form?")
    s.add_argument("target", help=", ".join(tuple(SIGN_MAPS) + ("U",)))
    s.add_argument("n", type=int)
    s.add_argument("mults")
    s = verb("reproduce-tables", cmd_reproduce, "rebuild the tables and report")
    s.add_argument("--table", choices=drivers.TABLES)
    s.add_argument("--row", type=int)
    s.add_argument("--max-N", dest="max_N", type=int)
    return p


def _pull_flags(argv):
    """--json and --ascii may appear anywhere on the line."""
    rest, flags = [], set()
    for tok in argv:
        if tok in ("--json", "--ascii"):
            flags.add(tok)
        else:
            rest.append(tok)
    return rest, flags


def run(argv, out=None, err=None):
    out = out or sys.stdout
    err = err or sys.stderr
    argv, flags = _pull_flags(list(argv))
    as_json = "--json" in flags
    parser = build_parser()
    try:
        try:
            a = parser.parse_args(argv)
        except SystemExit as e:  # --help
            return e.code or 0
        if a.verb is None:
            raise HRError("USAGE", "missing verb; see --help")
        a.ascii = "--ascii" in flags
        res = a.fn(a)
    except HRError as e:
        if as_json:
            print(json.dumps({"error": {"code": e.code, "message": e.message}}), file=out)
        else:
            print(f"error: {e}", file=err)
        return 2
    except ValueError as e:
        print(f"error: {e}", file=err)
        return 2
    if as_json:
        print(json.dumps(res.payload, indent=2, default=str), file=out)
    else:
        print(res.text, file=out)
    return res.code


def main():
    sys.exit(run(sys.argv[1:]))


if __name__ == "__main__":
    main()
