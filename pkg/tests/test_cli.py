import json
from pathlib import Path

import pytest

from corex.cli import main, to_json
from corex.corpus import generate_corpus

FIXTURES = Path(__file__).parent / "fixtures" / "cli"


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


@pytest.fixture
def in_fixtures(monkeypatch):
    monkeypatch.chdir(FIXTURES)


def test_extract_econ_golden(capsys, in_fixtures):
    code, out, _ = run(capsys, "extract", "--strategy", "econ", "--input", "one_para.html")
    assert code == 0
    assert out == (FIXTURES / "one_para.econ.json").read_text()
    json.loads(out)


def test_extract_coreex_golden(capsys, in_fixtures):
    code, out, _ = run(capsys, "extract", "--strategy", "coreex", "--input", "one_para.html", "--min-words", "0")
    assert code == 0
    assert out == (FIXTURES / "one_para.coreex.json").read_text()


def test_extract_text_format(capsys, in_fixtures):
    code, out, _ = run(capsys, "extract", "--strategy", "econ", "--input", "one_para.html", "--format", "text")
    assert (code, out) == (0, "Only this, here.\n")


def test_extract_missing_file(capsys, tmp_path):
    missing = tmp_path / "nope.html"
    code, out, err = run(capsys, "extract", "--strategy", "econ", "--input", str(missing))
    assert code == 1 and out == "" and "nope.html" in err


def test_extract_content_free(capsys, in_fixtures):
    code, out, err = run(capsys, "extract", "--strategy", "coreex", "--input", "links_only.html")
    assert code == 2 and out == ""
    code, _, _ = run(capsys, "extract", "--strategy", "econ", "--input", "links_only.html")
    assert code == 2


def test_unknown_flag_is_usage_error(capsys):
    with pytest.raises(SystemExit) as exc:
        main(["extract", "--bogus"])
    assert exc.value.code == 1
    assert "usage" in capsys.readouterr().err


def test_big_tags_flag(capsys, tmp_path):
    page = tmp_path / "p.html"
    page.write_text("<div><span>one, two.</span></div><p>x.</p>")
    _, out, _ = run(capsys, "extract", "--strategy", "econ", "--input", str(page), "--format", "text", "--big-tags", "span")
    assert out == "one, two.\n"


@pytest.mark.parametrize("argv, expected", [
    (["--algo", "stm", "--a", "abc.html", "--b", "abc.html", "--normalized"], "1.000000\n"),
    (["--algo", "rtdm", "--a", "abc.html", "--b", "abc.html"], "0.000000\n"),
    (["--algo", "rtdm", "--a", "abc.html", "--b", "ab.html"], "1.000000\n"),
    (["--algo", "stm", "--a", "abc.html", "--b", "ab.html"], "3.000000\n"),
    (["--algo", "rtdm", "--a", "abc.html", "--b", "ab.html", "--normalized"], f"{1 / 7:.6f}\n"),
    (["--algo", "rtdm", "--a", "abc.html", "--b", "ab.html", "--epsilon", "0"], "1.000000\n"),
])
def test_sim(capsys, in_fixtures, argv, expected):
    code, out, _ = run(capsys, "sim", *argv)
    assert (code, out) == (0, expected)


def test_sim_missing_file(capsys, in_fixtures):
    code, _, err = run(capsys, "sim", "--algo", "stm", "--a", "abc.html", "--b", "zzz.html")
    assert code == 1 and "zzz.html" in err


def test_cluster(capsys, tmp_path):
    generate_corpus(1, 6, tmp_path, templates=("portal", "table"))
    code, out, _ = run(capsys, "cluster", "--dir", str(tmp_path), "--algo", "rtdm", "--threshold", "0.2")
    assert code == 0
    doc = json.loads(out)
    assert doc["threshold"] == 0.2
    names = [[Path(p).name for p in group] for group in doc["clusters"]]
    assert names == [
        ["page000.html", "page002.html", "page004.html"],
        ["page001.html", "page003.html", "page005.html"],
    ]
    _, out, _ = run(capsys, "cluster", "--dir", str(tmp_path), "--algo", "stm", "--threshold", "1.0")
    assert len(json.loads(out)["clusters"]) == 1


def test_cluster_errors(capsys, tmp_path):
    assert run(capsys, "cluster", "--dir", str(tmp_path), "--algo", "rtdm", "--threshold", "0.2")[0] == 1
    assert run(capsys, "cluster", "--dir", str(tmp_path / "x"), "--algo", "rtdm", "--threshold", "0.2")[0] == 1
    with pytest.raises(SystemExit) as exc:
        main(["cluster", "--dir", str(tmp_path), "--algo", "rtdm", "--threshold", "1.5"])
    assert exc.value.code == 1


def test_eval_generate_then_score(capsys, tmp_path):
    corpus = tmp_path / "c"
    code, out, _ = run(capsys, "eval", "--generate", "--seed", "1", "--n", "4", "--dir", str(corpus))
    assert code == 0 and len(json.loads(out)["generated"]) == 4
    code, out, _ = run(capsys, "eval", "--dir", str(corpus), "--strategy", "econ")
    report = json.loads(out)
    assert code == 0 and report["macro"]["count"] == 4
    assert report["macro"]["f1"] >= 0.95
    assert [d["name"] for d in report["documents"]] == [f"page00{i}.html" for i in range(4)]


def test_eval_perfect_single_document(capsys, tmp_path):
    (tmp_path / "a.html").write_text("<p>The whole story, told.</p>")
    (tmp_path / "a.gold.txt").write_text("The whole story, told.\n")
    code, out, _ = run(capsys, "eval", "--dir", str(tmp_path), "--strategy", "econ")
    assert code == 0 and json.loads(out)["macro"]["f1"] == 1.0


def test_eval_gold_suffix_mismatch(capsys, tmp_path):
    generate_corpus(1, 2, tmp_path)
    code, _, err = run(capsys, "eval", "--dir", str(tmp_path), "--strategy", "econ", "--gold-suffix", ".truth")
    assert code == 1 and "no" in err


def test_eval_requires_strategy(capsys, tmp_path):
    assert run(capsys, "eval", "--dir", str(tmp_path))[0] == 1


def test_to_json_fixed_decimals():
    assert to_json({"x": 0.5, "y": [1, 2.0], "z": None, "w": []}) == (
        '{\n  "x": 0.500000,\n  "y": [1, 2.000000],\n  "z": null,\n  "w": []\n}'
    )


def test_log_env_keeps_stdout_clean(capsys, in_fixtures, monkeypatch):
    monkeypatch.setenv("COREX_LOG", "debug")
    code, out, _ = run(capsys, "extract", "--strategy", "econ", "--input", "one_para.html", "--format", "text")
    assert out == "Only this, here.\n"
