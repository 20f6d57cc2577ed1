import io
import json
import subprocess
import sys

import pytest

from artinlab.arrangement import reflection_arrangement
from artinlab.cli import flatten, parse_text, run
from artinlab.labels import parse_label


def call(*argv):
    out, err = io.StringIO(), io.StringIO()
    code = run(list(argv), out, err)
    return code, out.getvalue(), err.getvalue()


INVOCATIONS = [
    ("coxeter", "present", "A3"),
    ("coxeter", "present", "~A1"),
    ("artin", "present", "B3"),
    ("artin", "image", "A2", "s1 s2^-1"),
    ("artin", "pure", "A2", "s1^2"),
    ("group", "order", "F4"),
    ("reflections", "D5"),
    ("arrangement", "list", "B2"),
    ("arrangement", "list", "I2(5)"),
    ("arrangement", "chi", "A3"),
    ("arrangement", "poincare", "D4"),
    ("arrangement", "suspension-check", "F4"),
    ("arrangement", "fiber-type", "D4"),
    ("fibration", "eval", "D3", "1,2,5"),
    ("braid", "nf", "4", "a1 a2^-1 a3"),
    ("braid", "eq", "3", "a1 a2 a1", "a2 a1 a2"),
    ("orb", "present", "source", "3", "2"),
    ("orb", "reduce", "target", "3", "4", "x^6 a1"),
    ("embed", "map", "3", "p x a1"),
    ("embed", "verify", "4", "3"),
    ("ltheory", "F4"),
    ("kvanish", "~C3"),
    ("tower", "3"),
]


@pytest.mark.parametrize("argv", INVOCATIONS, ids=lambda a: " ".join(a))
def test_json_and_text_carry_the_same_data(argv):
    code_t, text, _ = call(*argv)
    code_j, js, _ = call("--json", *argv)
    assert code_t == code_j == 0
    assert dict(flatten(json.loads(js))) == parse_text(text)


@pytest.mark.parametrize("argv", INVOCATIONS[::4], ids=lambda a: " ".join(a))
def test_repeat_invocations_are_byte_identical(argv):
    assert call(*argv) == call(*argv)
    assert call("--json", *argv) == call("--json", *argv)


def test_ltheory_f4():
    _, js, _ = call("--json", "ltheory", "F4")
    d = json.loads(js)
    assert d["N"] == 24
    assert d["L"] == ["Z", "Z^24", "Z/2", "Z/2^24"]


def test_braid_eq_true_and_false():
    assert json.loads(call("--json", "braid", "eq", "3", "a1 a2 a1", "a2 a1 a2")[1])["equal"] is True
    assert json.loads(call("--json", "braid", "eq", "3", "a1", "a2")[1])["equal"] is False


def test_embed_verify_reports_all_certified():
    code, js, _ = call("--json", "embed", "verify", "4", "3")
    d = json.loads(js)
    assert code == 0 and d["passed"]
    assert all(r["verdict"] for r in d["relators"])


def test_embed_map():
    d = json.loads(call("--json", "embed", "map", "3", "p x a1", "--q", "5")[1])
    assert d["image"] == "a3^2 x a1" and d["q"] == 5


def test_arrangement_file(tmp_path):
    path = tmp_path / "b3.arr"
    path.write_text(reflection_arrangement(parse_label("B3")).to_text())
    _, by_file, _ = call("--json", "arrangement", "chi", str(path))
    _, by_label, _ = call("--json", "arrangement", "chi", "B3")
    assert json.loads(by_file)["coefficients"] == json.loads(by_label)["coefficients"] == [-15, 23, -9, 1]


@pytest.mark.parametrize(
    "argv",
    [
        ("frobnicate",),
        ("coxeter",),
        ("embed", "verify", "3", "abc"),
        ("embed", "verify", "3"),
        ("braid", "nf", "three", "a1"),
        ("orb", "reduce", "source", "3", "2"),
    ],
)
def test_usage_errors_exit_2(argv):
    code, _, _ = call(*argv)
    assert code == 2


@pytest.mark.parametrize(
    "argv",
    [
        ("coxeter", "present", "E8"),
        ("ltheory", "I2(2)"),
        ("ltheory", "~A3"),
        ("kvanish", "~D4"),
        ("braid", "nf", "3", "a5"),
        ("artin", "image", "A2", "b7"),
        ("group", "order", "~A2"),
        ("arrangement", "chi", "B5", "--bound", "10"),
        ("fibration", "eval", "B3", "1,2,3"),
        ("orb", "present", "source", "1", "3"),
    ],
)
def test_domain_errors_exit_1(argv):
    code, out, err = call(*argv)
    assert code == 1 and out == "" and err.startswith("error:")


def test_entry_point_module():
    out = subprocess.run(
        [sys.executable, "-m", "artinlab", "braid", "eq", "3", "a1 a2 a1", "a2 a1 a2"],
        capture_output=True, text=True,
    )
    assert out.returncode == 0
    assert "equal: true" in out.stdout
