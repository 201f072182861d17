import io
import json
import subprocess
import sys

import pytest

from hrlie.cli import run


def call(*argv):
    out, err = io.StringIO(), io.StringIO()
    code = run(list(argv), out, err)
    return code, out.getvalue(), err.getvalue()


def test_rho():
    assert call("rho", "16") == (0, "9\n", "")
    assert call("rho", "1/16")[1] == "-7\n"


def test_rho_variant_json():
    code, out, _ = call("--json", "rho-variant", "SO", "8", "8")
    assert code == 0
    assert json.loads(out) == {"value": 8, "chain_position": {"chain": 8, "i": 1, "N": 8}}
    code, out, _ = call("rho-variant", "SL_R", "5", "--which", "2", "--json")
    assert json.loads(out)["value"] == 1


def test_chain():
    code, out, _ = call("--json", "chain", "SO_C", "16")
    d = json.loads(out)
    assert d["value"] == 8 and d["walk"][0] == "so(16,C)"
    assert len(d["walk"]) == d["value"] + 1


def test_classify_spin():
    assert call("classify-spin", "H", "4", "3")[1] == "{2,3,4}\n"
    assert call("classify-spin", "so-split", "3")[1] == "{}\n"


def test_verify_ve_summary():
    code, out, _ = call("verify-ve", "so-split", "4")
    assert code == 0 and out.startswith("PASS")


def test_hr_witness_verifies():
    code, out, _ = call("--json", "hr-witness", "SO_STAR", "8", "--verify")
    d = json.loads(out)
    assert code == 0 and d["verification"]["pass"] and len(d["matrices"]) == 6


def test_clifford_and_eta():
    assert call("clifford-type", "0", "2")[1] == "M(1,H)\n"
    assert call("clifford-type", "1", "0")[1] == "M(1,R) + M(1,R)\n"
    code, out, _ = call("--json", "clifford-type", "3", "0", "--certify")
    assert json.loads(out) == {"kind": "MAT_C", "block_size": 2, "certified": True}
    assert call("eta-check", "3")[0] == 0


def test_partitions_and_diagram():
    code, out, _ = call("--json", "partitions", "so", "8", "--very-even-only")
    rows = json.loads(out)["partitions"]
    assert [r["partition"] for r in rows] == [[4, 4], [2, 2, 2, 2]]
    assert all(r["orbits"] == 2 for r in rows)
    code, out, _ = call("diagram", "so8", "4,4")
    assert "●" not in out and "○" in out
    code, out, _ = call("--ascii", "diagram", "so8", "4,4")
    assert "○" not in out and "o--o" in out


def test_satake_rendering():
    code, out, _ = call("satake", "su", "3", "1")
    assert "●" in out and "↔" in out
    code, out, _ = call("satake", "su", "3", "1", "--ascii")
    assert "*" in out and "1<->3" in out


def test_satake_pair():
    code, out, _ = call("--json", "satake-pair", "pair", "so", "6", "2", "/", "so", "6", "1")
    d = json.loads(out)
    assert code == 0 and d["matching_dim"] == d["real_rank_h"] == 1


def test_proper():
    code, out, _ = call("--json", "proper", "H", "4", "3", "2,2,2,2")
    d = json.loads(out)
    assert d["proper"] and d["very_even"] and len(d["orbits"]) == 2


def test_witness_table6_row():
    code, out, _ = call("--json", "witness-table6", "--row", "15")
    d = json.loads(out)
    assert code == 0 and d["table"] == "6" and [i["id"] for i in d["items"]] == ["t6-15"]


def test_spin_verbs():
    assert call("index-spin", "4", "CONJ")[1] == "-1\n"
    assert call("index-spin", "4", "DUAL", "--route", "model")[1] == "-1\n"
    code, out, _ = call("--json", "spinify", "2", "S=1;(3/2)=1", "CONJ")
    assert json.loads(out) == {"n": 2, "mults": {"S": 3}, "dim": 6}
    assert call("weyl-dim", "B", "2", "1/2,1/2")[1] == "4\n"
    code, out, _ = call("--json", "embed", "SP_R", "2", "S=2")
    assert json.loads(out)["embeds"] is True


def test_reproduce_single_table():
    code, out, _ = call("--json", "reproduce-tables", "--table", "2", "--max-N", "16")
    d = json.loads(out)
    assert code == 0 and d["pass"]
    items = d["tables"][0]["items"]
    assert all(set(i) == {"id", "pass", "detail"} for i in items)


@pytest.mark.parametrize("argv", [
    [], ["bogus"], ["rho"], ["rho", "x"], ["index-spin", "3", "CONJ"], ["proper", "H", "4"],
    ["classify-spin", "H", "5", "2"], ["satake", "sl", "3", "C"],
])
def test_usage_errors_exit_2(argv):
    assert call(*argv)[0] == 2


def test_json_errors():
    code, out, _ = call("--json", "index-spin", "3", "CONJ")
    assert code == 2 and json.loads(out)["error"]["code"] == "NOT_SELF_DAGGER"


def test_output_is_deterministic():
    a = call("--json", "reproduce-tables", "--table", "catalog")
    b = call("--json", "reproduce-tables", "--table", "catalog")
    assert a == b


def test_module_entry_point():
    r = subprocess.run([sys.executable, "-m", "hrlie", "rho", "8"], capture_output=True,
                       text=True, check=False)
    assert r.returncode == 0 and r.stdout == "8\n"


def test_help_mentions_space_grammar():
    code, out, _ = call("--help")
    assert code == 0
