import io
import json
import random
import subprocess
import sys

import pytest

from invmcg.cli import run
from invmcg.tower import normalize
from invmcg.words import parse_word, perturb, print_word, random_word, relations


def call(*argv):
    out, err = io.StringIO(), io.StringIO()
    code = run(list(argv), out, err)
    return code, out.getvalue(), err.getvalue()


def test_equal_example():
    code, out, _ = call("equal", "--n", "3", "--flavor", "sphere-mcg", "s1 s2 s1", "s2 s1 s2")
    assert (code, out) == (0, "equal\n")


def test_equal_distinct_exits_one():
    code, out, _ = call("equal", "--n", "2", "s1", "s1^-1")
    assert (code, out) == (1, "distinct\n")


def test_tau_example():
    assert call("tau", "--n", "2", "e s1") == (0, "[2->1]\n", "")


def test_abelianize_example():
    assert call("abelianize", "--n", "4", "s1 s2")[1] == "(1, 2 mod 6)\n"
    assert call("abelianize", "--n", "3", "e2 s1")[1] == "(eps, 0 mod 2)\n"


def test_reduce_text_and_json():
    code, out, _ = call("reduce", "--n", "2", "e1 s1")
    assert code == 0 and out == "k=1 dom=(2) img=(1) core=cosets=() layers=[]\n"
    code, out, _ = call("reduce", "--n", "3", "--flavor", "sphere-braid", "--format", "json", "s1^2")
    data = json.loads(out)
    assert data["domain"] == [1, 2, 3] and data["core"]["delta"] == 1


def test_brunnian_and_center():
    code, out, _ = call("brunnian", "--n", "3", "s1^2")
    assert out.splitlines() == ["1: true", "2: true", "3: false", "all: false"]
    assert call("center", "--n", "3", "")[1] == "true\n"
    assert call("center", "--n", "3", "e1")[1] == "false\n"


def test_table_and_enumerate():
    code, out, _ = call("table", "--n", "2")
    lines = out.splitlines()
    assert code == 0 and lines[0] == "# 7 elements"
    assert sum(1 for line in lines if " * " in line) == 49
    code, out, _ = call("table", "--n", "2", "--symmetric", "--format", "json")
    assert len(json.loads(out)["labels"]) == 7
    code, out, _ = call("enumerate", "--n", "3", "--flavor", "sphere-braid")
    assert out.splitlines()[0] == "# 12 elements"


@pytest.mark.parametrize("flavor", ["disc", "sphere-braid", "sphere-mcg", "symmetric-inverse", "pure-braid"])
def test_relcheck_passes(flavor):
    code, out, _ = call("relcheck", "--n", "4", "--flavor", flavor)
    assert code == 0
    assert "FAIL" not in out


@pytest.mark.parametrize(
    "argv",
    [
        ("reduce", "--n", "2", "s3"),
        ("reduce", "--n", "2", "--flavor", "torus", "s1"),
        ("abelianize", "--n", "3", "--flavor", "disc", "s1"),
        ("center", "--n", "3", "--flavor", "sphere-braid", "s1"),
        ("equal", "--n", "2", "s1"),
        ("reduce", "--n", "-1", ""),
        ("relcheck", "--n", "3", "--flavor", "torus"),
        ("table", "--n", "4"),
        ("frobnicate", "--n", "2"),
    ],
)
def test_errors_exit_two(argv):
    code, out, err = call(*argv)
    assert code == 2
    assert out == ""


def test_parse_error_names_token():
    code, _, err = call("reduce", "--n", "2", "s1 t7")
    assert code == 2 and "'t7'" in err and err.startswith("error:")


def test_output_is_byte_identical():
    for argv in [
        ("relcheck", "--n", "4", "--flavor", "sphere-mcg", "--seed", "5"),
        ("reduce", "--n", "4", "--format", "json", "s1 e2 s3^-1 s2"),
        ("table", "--n", "2", "--format", "json"),
    ]:
        assert call(*argv) == call(*argv)


def test_equal_agrees_with_library():
    rng = random.Random(0)
    for _ in range(60):
        n = rng.randint(2, 4)
        flavor = rng.choice(["disc", "sphere-braid", "sphere-mcg"])
        u = random_word(n, 6, rng, eps_rate=0.15)
        v = perturb(u, relations("sphere-inverse-mcg" if flavor == "sphere-mcg" else "disc-inverse", n), rng) \
            if rng.random() < 0.5 else random_word(n, 6, rng, eps_rate=0.15)
        expected = normalize(u, flavor) == normalize(v, flavor)
        code, _, _ = call("equal", "--n", str(n), "--flavor", flavor, print_word(u), print_word(v))
        assert code == (0 if expected else 1)


def test_module_entry_point():
    proc = subprocess.run(
        [sys.executable, "-m", "invmcg", "tau", "--n", "2", "e s1"], capture_output=True, text=True, check=False
    )
    assert proc.returncode == 0 and proc.stdout == "[2->1]\n"
