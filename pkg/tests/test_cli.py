"""CLI exit codes and golden JSON reports.

Set CHAINBOUND_REGEN_GOLDEN=1 to rewrite the golden files after an intended change.
"""

import json
import os
import subprocess
import sys
from pathlib import Path

import pytest

from chainbound import parse_poset, to_dot
from chainbound.cli import run

HERE = Path(__file__).parent
FIXTURES = HERE / "fixtures"
GOLDEN = HERE / "golden"

CASES = [
    ("check_chain3", ["check", "chain3.json"], 0),
    ("check_antichain2", ["check", "antichain2.json"], 0),
    ("check_diamond", ["check", "diamond.json"], 0),
    ("check_malformed", ["check", "malformed.json"], 2),
    ("check_cycle", ["check", "cycle.json"], 2),
    ("check_limit", ["check", "diamond.json", "--exhaustive-n-limit", "3"], 2),
    ("ggc_chain3_iter", ["ggc", "chain3.json", "sel_min.json", "--method", "iter"], 0),
    ("ggc_chain3_brute", ["ggc", "chain3.json", "sel_min.json", "--method", "brute"], 0),
    ("ggc_antichain2", ["ggc", "antichain2.json", "sel_empty_to_a.json"], 0),
    ("ggc_empty", ["ggc", "empty.json", "sel_min.json"], 0),
    ("ggc_bad_label", ["ggc", "chain3.json", "sel_bad_label.json"], 2),
    ("ggc_unknown_strategy", ["ggc", "chain3.json", "sel_unknown.json"], 2),
    ("cbc_singleton", ["cbc", "singleton.json", "sel_min.json"], 0),
    ("cbc_chain3", ["cbc", "chain3.json", "sel_min.json"], 0),
    ("cbc_chain3_lie", ["cbc", "chain3.json", "sel_lie_a.json"], 0),
    ("cbc_malformed", ["cbc", "malformed.json", "sel_min.json"], 2),
    ("zorn_diamond", ["zorn", "diamond.json"], 0),
    ("zorn_singleton", ["zorn", "singleton.json", "sel_min.json"], 0),
    ("zorn_empty", ["zorn", "empty.json"], 2),
    ("zorn_lying_selector", ["zorn", "chain3.json", "sel_lie_a.json"], 1),
    ("bw_succ", ["bw", "total6.json", "h_succ6.json"], 0),
    ("bw_identity", ["bw", "total6.json", "h_id6.json"], 0),
    ("bw_swap", ["bw", "total2.json", "h_swap2.json"], 1),
    ("bw_cap", ["bw", "total6.json", "h_succ6.json", "--cap", "3"], 1),
    ("bw_diamond", ["bw", "diamond.json", "h_diamond.json"], 0),
    ("bw_not_cpo", ["bw", "antichain2.json", "h_id_anti2.json"], 2),
    ("bw_rd_loop", ["bw", "rd_loop.json", "--builtin", "rd"], 0),
    ("bw_rd_line", ["bw", "rd_line.json", "--builtin", "rd"], 0),
    ("bw_no_h", ["bw", "total6.json"], 2),
    ("gen_chain", ["gen", "--n", "4", "--edge-prob", "1", "--seed", "9"], 0),
    ("gen_antichain", ["gen", "--n", "5", "--edge-prob", "0", "--seed", "9"], 0),
    ("gen_random", ["gen", "--n", "7", "--edge-prob", "0.3", "--seed", "11"], 0),
    ("gen_empty", ["gen", "--n", "0", "--edge-prob", "0.5", "--seed", "1"], 0),
]


def invoke(argv):
    out, err = [], []
    code = run(argv, out=out.append, err=err.append)
    return code, "\n".join(out) + "\n" if out else "", err


@pytest.fixture(autouse=True)
def in_fixtures(monkeypatch):
    monkeypatch.chdir(FIXTURES)


@pytest.mark.parametrize("name, argv, code", CASES, ids=[c[0] for c in CASES])
def test_golden(name, argv, code):
    got_code, text, _ = invoke(argv + ["--json"])
    assert got_code == code
    json.loads(text)
    path = GOLDEN / f"{name}.json"
    if os.environ.get("CHAINBOUND_REGEN_GOLDEN"):
        path.write_text(text, encoding="utf-8")
    assert text == path.read_text(encoding="utf-8")
    assert invoke(argv + ["--json"])[1] == text


@pytest.mark.parametrize("name, argv, code", CASES, ids=[c[0] for c in CASES])
def test_human_output_exit_codes(name, argv, code):
    got_code, text, err = invoke(argv)
    assert got_code == code
    if code == 2:
        assert err and err[0].startswith("error")


def test_human_output_lists_chains_and_traces():
    code, text, _ = invoke(["ggc", "chain3.json", "sel_min.json"])
    assert code == 0
    assert text.splitlines() == [
        "greatest good chain: {a, b, c}",
        "trace:",
        "  {}",
        "  {a}",
        "  {a, b}",
        "  {a, b, c}",
    ]


def test_reports_carry_expected_values():
    load = lambda name: json.loads((GOLDEN / f"{name}.json").read_text())
    assert load("check_chain3")["selectors"][0]["ggc"] == ["a", "b", "c"]
    assert load("check_antichain2")["selectors"][0]["ggc"] == ["a"]
    assert load("cbc_chain3_lie")["verdict"] == "value_not_strict_bound"
    assert load("cbc_chain3_lie")["value"] == "a"
    assert load("zorn_diamond")["maximal"] == "top"
    assert load("bw_succ")["iterations"] == 5
    assert load("bw_identity")["iterations"] == 0
    assert load("bw_swap")["error"]["type"] == "NotInflationary"
    assert load("bw_diamond")["trace"] == ["bot", "x", "top"]
    rd = {e["name"]: e for e in load("bw_rd_line")["nodes"]}
    assert rd["n2"]["in"] == ["d1"] and rd["n2"]["out"] == ["d2"]


def test_gen_writes_dot(tmp_path):
    dot = tmp_path / "p.dot"
    code, text, _ = invoke(["gen", "--n", "4", "--edge-prob", "1", "--seed", "9", "--dot", str(dot)])
    assert code == 0
    assert dot.read_text() == to_dot(parse_poset(text))


def test_bad_flags_are_usage_errors():
    assert invoke(["gen", "--n", "3", "--edge-prob", "x", "--seed", "1"])[0] == 2
    assert invoke(["frobnicate"])[0] == 2
    assert invoke(["ggc", "missing.json", "sel_min.json"])[0] == 2


def test_console_entry_point():
    proc = subprocess.run(
        [sys.executable, "-m", "chainbound.cli", "zorn", "diamond.json", "--json"],
        capture_output=True,
        text=True,
        cwd=FIXTURES,
    )
    assert proc.returncode == 0
    assert json.loads(proc.stdout)["maximal"] == "top"
