from __future__ import annotations

import json

import pytest

from tricensus.cli import run_cli
from tricensus.generate import catalog_codes
from tricensus.io import decode_planar_code

from .conftest import FIXTURES


def run(capsysbinary, *argv):
    code = run_cli(list(argv))
    out, err = capsysbinary.readouterr()
    return code, out, err


def test_min_c4_text(capsysbinary):
    code, out, _ = run(capsysbinary, "min-c4", "-n", "6")
    assert code == 0
    assert out.startswith(b"g(6, C4) = 15  minimizers: 1")


def test_min_c4_json(capsysbinary):
    code, out, _ = run(capsysbinary, "min-c4", "-n", "8", "--json")
    d = json.loads(out)
    assert code == 0 and d["g_value"] == 23 and d["minimizer_count"] == 1
    assert d["minimizers"][0]["code"] == d["minimizers"][0]["planar_code"]


def test_gen_formats(capsysbinary, tmp_path):
    out_file = tmp_path / "g7.pc"
    code, _, _ = run(capsysbinary, "gen", "-n", "7", "-o", str(out_file), "--header")
    assert code == 0
    assert {T.code for T in decode_planar_code(out_file.read_bytes())} == set(catalog_codes(7))
    code, out, _ = run(capsysbinary, "gen", "-n", "7", "--min-degree", "4", "--format", "graph6")
    assert out.decode().count("\n") == 1
    code, out, _ = run(capsysbinary, "gen", "-n", "9", "--connectivity", "5")
    assert code == 0 and out == b""


def test_census(capsysbinary):
    fixture = str(FIXTURES / "n7_triangulations.pc")
    code, out, _ = run(capsysbinary, "census", "-i", fixture, "--json", "--per-vertex")
    rows = json.loads(out)
    assert code == 0
    assert sorted(r["c4"] for r in rows) == [20, 21, 23, 24, 24]
    assert all(sum(r["per_vertex_c4"]) == 4 * r["c4"] for r in rows)
    code, out, _ = run(capsysbinary, "census", "-i", fixture)
    lines = out.decode().splitlines()
    assert len(lines) == 6 and len({len(x) for x in lines}) == 1


def test_convert(capsysbinary, tmp_path):
    fixture = str(FIXTURES / "n7_triangulations.pc")
    code, out, _ = run(capsysbinary, "convert", "-i", fixture, "--to", "canonical")
    assert code == 0
    assert sorted(bytes.fromhex(x) for x in out.decode().split()) == list(catalog_codes(7))
    target = tmp_path / "copy.pc"
    run(capsysbinary, "convert", "-i", fixture, "--to", "planar_code", "--header", "-o", str(target))
    assert target.read_bytes() == (FIXTURES / "n7_triangulations.pc").read_bytes()


def test_verify_exit_codes(capsysbinary):
    code, out, _ = run(capsysbinary, "verify", "theorem1", "--max-n", "8")
    assert code == 0 and b"PASS" in out
    code, out, _ = run(capsysbinary, "verify", "lemmas", "--max-n", "8", "--json")
    assert code == 0 and [r["claim_id"] for r in json.loads(out)] == ["lemma1", "lemma2", "lemma3"]


def test_usage_errors(capsysbinary):
    with pytest.raises(SystemExit) as info:
        run_cli(["frobnicate"])
    assert info.value.code == 2
    code, _, err = run(capsysbinary, "min-c4", "-n", "20")
    assert code == 2 and b"exceeds" in err
    code, _, _ = run(capsysbinary, "verify", "theorem1", "--max-n", "15")
    assert code == 2


def test_config_file(capsysbinary, tmp_path):
    cfg = tmp_path / "cfg.json"
    cfg.write_text(json.dumps({"max_n": 8, "threads": 2}))
    code, _, _ = run(capsysbinary, "--config", str(cfg), "min-c4", "-n", "9")
    assert code == 2
    code, _, _ = run(capsysbinary, "min-c4", "-n", "9", "--config", str(cfg), "--limit", "9")
    assert code == 0
    cfg.write_text(json.dumps({"colour": 1}))
    code, _, _ = run(capsysbinary, "--config", str(cfg), "min-c4", "-n", "6")
    assert code == 2


def test_thread_flag_after_subcommand(capsysbinary):
    _, a, _ = run(capsysbinary, "min-c4", "-n", "9", "--json", "--threads", "1")
    _, b, _ = run(capsysbinary, "--threads", "2", "min-c4", "-n", "9", "--json")
    assert a == b
