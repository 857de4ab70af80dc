import contextlib
import io
import json

import pytest

from isoschur import cli
from isoschur.errors import InternalCheckError

from conftest import FIXTURES

Q4 = str(FIXTURES / "q4.quiver")
E6 = str(FIXTURES / "e6tilde.quiver")
SEQ = str(FIXTURES / "q4-iso.seq")


def run(*argv):
    out, err = io.StringIO(), io.StringIO()
    with contextlib.redirect_stdout(out), contextlib.redirect_stderr(err):
        code = cli.main(list(argv))
    return code, out.getvalue(), err.getvalue()


def test_euler_matrix_text():
    code, out, err = run("euler", Q4)
    assert code == 0 and err == ""
    assert out == " 1  0  0  0\n-1  1  0  0\n-1  0  1  0\n-1 -1 -1  1\n"


def test_euler_pair():
    code, out, _ = run("euler", Q4, "--pair", "3,2,3,1", "3,2,3,1")
    assert code == 0 and out == "0\n"


def test_coxeter_apply():
    code, out, _ = run("coxeter", Q4, "--apply", "3,2,3,1", "--power", "2")
    assert code == 0 and out == "5,8,9,17\n"


def test_classify_affine():
    code, out, _ = run("classify", E6)
    assert code == 0
    assert out == (
        "vertices: 7\narrows: 6\nconnected: true\naffine: true\n"
        "type: E-tilde(6)\nnull_root: 3,2,1,2,1,2,1\n"
    )


def test_classify_vector():
    code, out, _ = run("classify", Q4, "--vector", "3,2,3,1")
    assert code == 0
    assert "tits: 0\nclass: isotropic\nschur: true\n" in out


def test_homext_with_oracle():
    code, out, _ = run("homext", Q4, "1,0,0,0", "3,1,1,1", "--oracle")
    assert code == 0
    assert out == "hom: 3\next: 0\npair: 3\noracle_hom: 3\noracle_agrees: true\n"


def test_candecomp():
    code, out, _ = run("candecomp", Q4, "6,4,6,2")
    assert code == 0 and out == "2 x 3,2,3,1 isotropic\n"


def test_embeds():
    code, out, _ = run("embeds", Q4, "3,2,1,1", "3,2,3,1")
    assert code == 0 and out == "embeds: yes\n"


def test_stable_list_and_status():
    code, out, _ = run("stable", Q4, "--delta", "3,2,3,1", "--bound", "9")
    assert code == 0 and out == "0,0,1,0\n3,2,1,1\n8,3,3,3\n"
    code, out, _ = run("stable", Q4, "--delta", "3,2,3,1", "--status", "3,2,1,1")
    assert code == 0 and out == "status: stable\n"


def test_cone_text():
    code, out, _ = run("cone", Q4, "--delta", "3,2,3,1", "--bound", "9")
    assert code == 0
    assert out == (
        "delta: 3,2,3,1\nweight: -3,1,0,7\nrays:\n  0,0,1,0\n  3,2,1,1\n"
        "  8,3,3,3\ndeltabar: 3,2,1,1\nstable_non_extremal: none\nproper: none\n"
        "simplex_decomposition: rays 1,3 dim 2\ncomplete: true\nslice:\n"
        "  ray1 1 0\n  ray2 -2/7 0\n  ray3 0 1\n  delta 0 0\n  deltabar -2/7 0\n"
    )


def test_cone_slice_out_writes_table_and_png(tmp_path):
    table = tmp_path / "slice.txt"
    code, out, _ = run(
        "cone", Q4, "--delta", "3,2,3,1", "--bound", "9",
        "--slice-out", str(table),
    )
    assert code == 0
    rows = table.read_text().splitlines()
    assert rows[0].split()[0] == "ray1"
    assert len(rows) == 5
    for row in rows:
        label, x, y = row.split()
        float(x), float(y)
    png = tmp_path / "slice.png"
    assert png.read_bytes()[:4] == b"\x89PNG"


def test_analyze_text():
    code, out, _ = run("analyze", Q4, "--delta", "3,2,3,1")
    assert code == 0
    assert out == (
        "delta: 3,2,3,1\ndelta_bar: 3,2,1,1\ntame_pair: 3,1,3,1 ; 0,1,0,0\n"
        "members:\n"
        "  1: m=0,0,1,0 kind=wild-connected in_tame=false"
        " position=preinjective delta=3,2,1,1\n"
        "  2: m=8,3,3,3 kind=wild-connected in_tame=false"
        " position=preprojective delta=3,2,1,1\n"
        "tame_levels: none\nr_generators: 3,1,1,1 ; 0,1,0,0\n"
        "r_simples: 3,1,1,1 ; 0,1,0,0\nr_affine: A-tilde(1,1)\n"
        "si_class: polynomial\nstable_simples:\n  0,0,1,0 exceptional\n"
        "  3,2,1,1 isotropic\n  8,3,3,3 exceptional\nquasi_simples: none\n"
        "smaller_type: false\nadjoined_variables: 2\nbound_used: 12\n"
        "complete: true\n"
    )


def test_seq_check_mutate_simples():
    code, out, _ = run("seq", SEQ, "check")
    assert code == 0 and out == "valid: true\nlength: 4\nfull: true\n"
    code, out, _ = run("seq", SEQ, "mutate", "--at", "1", "--dir", "left")
    assert code == 0 and out == "40,15,16,15\n8,3,3,3\n3,1,3,1\n0,1,0,0\n"
    code, out, _ = run("seq", SEQ, "simples")
    assert code == 0 and out == "1,0,0,0\n0,1,0,0\n0,0,1,0\n0,0,0,1\n"


def test_seq_quiver_text_and_dot():
    code, out, _ = run("seq", SEQ, "quiver")
    assert code == 0
    assert out == (
        "vertices: s1 s2 s3 s4\ns2 -> s1\ns3 -> s1\ns4 -> s1\n"
        "s4 -> s2\ns4 -> s3\n"
    )
    code, out, _ = run("seq", SEQ, "quiver", "--output", "dot")
    assert code == 0
    assert out.startswith("digraph quiver {")
    assert '"s4" -> "s2";' in out


def test_seq_reduce_text():
    code, out, _ = run("seq", SEQ, "reduce")
    assert code == 0
    assert out == (
        "word: g2^-1 g1^-1 g1^-1 g2\nroot: 1,0,1,1\nposition: 3\nsplit: 1\n"
        "classes:\n  1,1,0,0\n  0,0,1,0\n  2,0,2,1\n  1,0,1,0\n"
    )


def test_isotropic_verified():
    code, out, _ = run("isotropic", Q4, "--bound", "3", "--verify")
    assert code == 0
    assert out.startswith("count: 10\n")
    assert out.endswith("verified: true\n")
    assert "3,2,3,1\n" in out and "1,0,1,1\n" in out


def test_json_report_shape():
    code, out, _ = run("euler", Q4, "--output", "json")
    assert code == 0
    doc = json.loads(out)
    assert doc["schema"] == 1
    assert doc["verb"] == "euler"
    assert doc["quiver"]["vertices"] == ["1", "2", "3", "4"]
    assert doc["args"] == {"pair": None}
    assert doc["matrix"][0] == [1, 0, 0, 0]


def test_analyze_json_members():
    code, out, _ = run("analyze", Q4, "--delta", "3,2,3,1", "--output", "json")
    assert code == 0
    doc = json.loads(out)
    assert doc["tame_levels"] == []
    first = doc["members"][0]
    assert first["m"] == [0, 0, 1, 0]
    assert first["in_tame"] is False
    assert first["delta_out"] == [3, 2, 1, 1]
    assert doc["r_affine"] == "A-tilde(1,1)"
    assert doc["si_class"] == "polynomial"


def test_check_replays_report(tmp_path):
    _, out, _ = run("euler", Q4, "--output", "json")
    p = tmp_path / "euler.json"
    p.write_text(out)
    code, out2, err = run("check", str(p))
    assert code == 0 and out2 == "check ok: euler\n" and err == ""


def test_check_flags_tampered_report(tmp_path):
    _, out, _ = run("euler", Q4, "--output", "json")
    doc = json.loads(out)
    doc["matrix"][0][0] = 9
    p = tmp_path / "tampered.json"
    p.write_text(json.dumps(doc))
    code, out2, err = run("check", str(p))
    assert code == 1 and out2 == ""
    assert "recomputation differs in fields matrix" in err


def test_check_rejects_unknown_verb(tmp_path):
    _, out, _ = run("euler", Q4, "--output", "json")
    doc = json.loads(out)
    doc["verb"] = "nonsense"
    p = tmp_path / "verb.json"
    p.write_text(json.dumps(doc))
    code, _, err = run("check", str(p))
    assert code == 1 and "unknown verb 'nonsense'" in err


def test_missing_quiver_exits_1():
    code, out, err = run("euler", "nope.quiver")
    assert code == 1 and out == ""
    assert err.startswith("error: cannot read nope.quiver")
    assert "Traceback" not in err


def test_bad_vector_length_exits_1():
    code, _, err = run("euler", Q4, "--pair", "1,2", "3,2,3,1")
    assert code == 1
    assert err == "error: vector of length 2, quiver has 4 vertices\n"


def test_budget_exhausted_exits_2():
    code, out, err = run("seq", SEQ, "reduce", "--budget", "1")
    assert code == 2 and out == ""
    assert err == (
        "budget exhausted: no tame-type sequence"
        " within 1 generator applications\n"
    )


def test_unknown_verb_exits_1():
    code, _, err = run("bogus")
    assert code == 1 and "error:" in err and "Traceback" not in err


def test_internal_failure_exits_3(monkeypatch):
    def boom(quiver, args):
        raise InternalCheckError("forced failure")

    monkeypatch.setitem(cli.BUILDERS, "euler", boom)
    code, out, err = run("euler", Q4)
    assert code == 3 and out == ""
    assert "forced failure" in err
