import subprocess
import sys

import pytest

from blpack.cli import BENCH_HEADER, main
from blpack.geometry import Point
from blpack.hole_model import parse_dump

from fixtures import FIG1_RECTS, FIG1_W


@pytest.fixture
def inst(tmp_path):
    p = tmp_path / "inst.txt"
    p.write_text("6 3\n2 1\n2 2\n6 1\n")
    return p


@pytest.fixture
def fig1(tmp_path):
    p = tmp_path / "fig1.txt"
    p.write_text(f"{FIG1_W} {len(FIG1_RECTS)}\n" + "".join(f"{w} {h}\n" for _, _, w, h in FIG1_RECTS))
    return p


def run(*args):
    return main([str(a) for a in args])


def test_pack_then_verify(inst, tmp_path, capsys):
    out = tmp_path / "pk.txt"
    assert run("pack", inst, "-o", out) == 0
    assert out.read_text() == "height 3\n0 0\n2 0\n0 2\n"
    assert run("verify", inst, out, "--stability") == 0
    assert capsys.readouterr().out.strip() == "ok"


def test_pack_is_byte_identical(inst, tmp_path):
    a, b = tmp_path / "a", tmp_path / "b"
    run("pack", inst, "-o", a)
    run("pack", inst, "-o", b)
    assert a.read_bytes() == b.read_bytes()


def test_pack_trace(inst, capsys):
    assert run("pack", inst, "--trace") == 0
    lines = capsys.readouterr().out.splitlines()
    assert lines[0].startswith("height")
    trace = [ln for ln in lines if ln.startswith("#")]
    assert len(trace) == 4


def test_verify_detects_corruption(inst, tmp_path, capsys):
    bad = tmp_path / "bad.txt"
    bad.write_text("height 3\n0 0\n1 0\n0 2\n")
    assert run("verify", inst, bad) == 1
    assert "overlap" in capsys.readouterr().out
    floating = tmp_path / "float.txt"
    floating.write_text("height 4\n0 0\n2 0\n0 3\n")
    assert run("verify", inst, floating) == 0
    assert run("verify", inst, floating, "--stability") == 1


def test_parse_error_exit_code(tmp_path, capsys):
    p = tmp_path / "x.txt"
    p.write_text("6 2\n2 1\n")
    assert run("pack", p) == 2
    assert "line" in capsys.readouterr().err
    assert run("pack", tmp_path / "missing.txt") == 2
    assert run("frobnicate") == 2


def test_oracle_compare(inst, capsys):
    assert run("oracle-compare", inst) == 0
    assert run("gen", "staircase-flaw", "-n", "16") == 0


def test_oracle_compare_mismatch(inst, monkeypatch, capsys):
    from blpack import cli
    from blpack.geometry import Packing

    def wrong(W, rects):
        pk = Packing(W, list(rects))
        for i in range(len(rects)):
            pk.place(i, Point(0, 100 * i))
        return pk
    monkeypatch.setattr(cli, "oracle_pack", wrong)
    assert run("oracle-compare", inst) == 1
    assert "MISMATCH" in capsys.readouterr().out


def test_bench_csv(capsys):
    assert run("bench", "--family", "staircase-flaw", "--sizes", "16,32", "--flawed") == 0
    lines = capsys.readouterr().out.splitlines()
    assert lines[0] == BENCH_HEADER
    assert lines[3] == "# flawed" and lines[4] == BENCH_HEADER
    assert [ln.split(",")[0] for ln in lines[1:3]] == ["16", "32"]


def test_render(fig1, tmp_path):
    pk = tmp_path / "pk.txt"
    run("pack", fig1, "-o", pk)
    svg = tmp_path / "a.svg"
    assert run("render", fig1, pk, svg, "--holes") == 0
    text = svg.read_text()
    assert text.count("<polyline") == 3
    assert text.count('fill="#6fa8dc"') == len(FIG1_RECTS)
    assert "scale(1,-1)" in text and "<!--" in text
    svg2 = tmp_path / "b.svg"
    run("render", fig1, pk, svg2, "--holes")
    assert svg2.read_bytes() == svg.read_bytes()


def test_render_single(tmp_path):
    i = tmp_path / "i.txt"
    i.write_text("3 1\n2 2\n")
    pk = tmp_path / "p.txt"
    pk.write_text("height 2\n0 0\n")
    svg = tmp_path / "s.svg"
    assert run("render", i, pk, svg) == 0
    assert svg.read_text().count('fill="#6fa8dc"') == 1


def test_holes_dump(tmp_path, capsys):
    i = tmp_path / "i.txt"
    i.write_text("3 1\n3 2\n")
    pk = tmp_path / "p.txt"
    pk.write_text("height 2\n0 0\n")
    assert run("holes", i, pk) == 0
    out = capsys.readouterr().out
    # one rectangle filling the strip bottom leaves nothing below the ceiling
    assert "# hole" not in out
    i.write_text("3 2\n1 1\n3 2\n")
    pk.write_text("height 3\n0 0\n0 1\n")
    assert run("holes", i, pk) == 0
    out = capsys.readouterr().out
    assert "# hole 0 nv=4" in out
    body = [ln for ln in out.splitlines() if not ln.startswith("#")]
    assert parse_dump("\n".join(body[:4])).nv == 4


def test_holes_fixture_labels(tmp_path, capsys):
    i = tmp_path / "f.txt"
    run("gen", "bls-fixture", "-o", i)
    pk = tmp_path / "p.txt"
    run("pack", i, "-o", pk)
    capsys.readouterr()
    assert run("holes", i, pk) == 0
    out = capsys.readouterr().out
    assert "# k=4 R=(52,15)-(52,10) L1=(35,1)-(35,2) N2=(40,3)-(40,4)" in out
    assert "# c_f=(40,15)" in out


def test_module_entry_point(inst):
    res = subprocess.run([sys.executable, "-m", "blpack", "verify", str(inst)],
                         capture_output=True, text=True)
    assert res.returncode == 2
