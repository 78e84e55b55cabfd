import io

import pytest
import toml

from racah_natural.cli import main
from racah_natural.natural import generator_image
from racah_natural.tensor import structural


def run(*argv):
    out = io.StringIO()
    code = main(list(argv), out=out)
    return code, out.getvalue()


def test_normalize():
    assert run("normalize", "B*A") == (0, "A B - 2 D\n")
    assert run("normalize", "[A,B] - 2*D") == (0, "0\n")


def test_normalize_structured():
    code, text = run("--format", "structured", "normalize", "B*A")
    assert code == 0
    doc = toml.loads(text)
    assert doc["command"] == "normalize"
    assert doc["input"] == "B*A"
    assert len(doc["result"]) == 2


def test_normalize_latex():
    code, text = run("--format", "latex", "normalize", "B*A")
    assert code == 0
    assert "D" in text


@pytest.mark.parametrize("text", ["A +", "A x", "Q"])
def test_parse_errors(text):
    assert run("normalize", text)[0] == 2


def test_embed():
    assert run("embed", "delta") == (0, f"{generator_image('delta')}\n")


def test_grade():
    assert run("grade", "A", "--degree", "1") == (0, f"1: {structural('R')}\n")
    code, text = run("grade", "B")
    assert code == 0
    assert [line.split(":")[0] for line in text.splitlines()] == ["-1", "0"]


def test_certify():
    code, text = run("--config", "config_quick", "certify", "--caps", "1,1,1,0,0,0,0")
    assert code == 0
    assert "rank 8 of 8" in text


def test_certify_errors():
    assert run("--config", "config_quick", "certify", "--caps", "2,1,2,2,2,1,1")[0] == 2
    assert run("certify", "--caps", "1,1,1")[0] == 2
    assert run("certify", "--caps", "1,one,1,0,0,0,0")[0] == 2
    assert run("certify", "--caps", "60,1,60,60,60,60,60")[0] == 2


def test_verify():
    code, text = run("verify", "--suite", "commutators")
    assert code == 0
    assert text.splitlines()[-1].startswith("overall: PASS")


def test_verify_structured():
    code, text = run("--format", "structured", "--seed", "7", "verify", "--suite", "homomorphism")
    assert code == 0
    doc = toml.loads(text)
    assert doc["status"] == "pass"
    assert doc["seed"] == 7
    assert doc["failed"] == 0
    assert doc["total"] == len(doc["checks"])


def test_eval():
    code, text = run("eval", "[A, B] - 2 D", "--dims", "1,2")
    assert code == 0
    assert text.startswith("d = 1, point 0")
    assert "d = 2, point 0" in text


@pytest.mark.parametrize("argv", [[], ["verify", "--suite", "nothing"], ["frobnicate"], ["--format", "xml", "normalize", "A"]])
def test_usage_errors(argv):
    with pytest.raises(SystemExit):
        main(argv, out=io.StringIO())


def test_verify_statement_selector():
    code, text = run("verify", "--suite", "theorem-5.1")
    assert code == 0
    assert text.splitlines()[0] == "[homomorphism] certifies theorem-5.1"
    assert text.splitlines()[-1].startswith("overall: PASS")
    code, text = run("--format", "structured", "verify", "--suite", "theorem-5.1")
    doc = toml.loads(text)
    assert {check["suite"] for check in doc["checks"]} == {"homomorphism"}
    assert all(check["certifies"] == ["theorem-5.1"] for check in doc["checks"])


def test_verify_sizes_reach_representations():
    code, text = run("--format", "structured", "verify", "--suite", "representations", "--dims", "2", "--points", "1")
    assert code == 0
    doc = toml.loads(text)
    assert {check["statement-id"].split(".")[0] for check in doc["checks"]} == {"d2"}
    assert {check["statement-id"].split(".")[1] for check in doc["checks"]} == {"p0"}
    assert "dimensions [2], 1 points" in doc["notes"][0]


def test_format_from_config(tmp_path):
    path = tmp_path / "structured.toml"
    path.write_text('seed = 0\nn_jobs = 1\nprogress = false\ncap_limit = 200\nformat = "structured"\n')
    code, text = run("--config", str(path), "normalize", "B*A")
    assert code == 0
    assert toml.loads(text)["command"] == "normalize"
    assert run("--config", str(path), "--format", "text", "normalize", "B*A") == (0, "A B - 2 D\n")


def test_missing_config():
    assert run("--config", "no_such_config", "normalize", "A")[0] == 2
