"""End-to-end command-line interface tests (in-process via cli.main)."""

import json

import jsonschema
import pytest

from lsgsb import cli

try:  # Python 3.9+
    from importlib.resources import files as _files
except ImportError:  # pragma: no cover
    from importlib_resources import files as _files

SCHEMA = json.loads(
    _files("lsgsb").joinpath("schemas/certificate.schema.json").read_text()
)


def run(argv, capsys):
    code = cli.main(argv)
    cap = capsys.readouterr()
    return code, cap.out, cap.err


# ---------------------------------------------------------------------------
# word utilities


def test_lyndon_bracket(capsys):
    code, out, err = run(
        ["lyndon", "bracket", "--word", "x x y y x y", "--alphabet", "x,y"], capsys
    )
    assert (code, out, err) == (0, "((x((xy)y))(xy))\n", "")


def test_lyndon_bracket_operated(capsys):
    code, out, _ = run(
        ["lyndon", "bracket", "--word", "P(x y z) P(x) P(y)"], capsys
    )
    assert code == 0
    assert out == "(P((x(yz)))(P(x)P(y)))\n"


def test_lyndon_list_degree_one(capsys):
    code, out, _ = run(["lyndon", "list", "--alphabet", "x,y", "--bound", "1"], capsys)
    assert code == 0
    assert out == "x\ny\n"


def test_lyndon_list_depth0(capsys):
    code, out, _ = run(
        ["lyndon", "list", "--alphabet", "x,y", "--bound", "3", "--depth0"], capsys
    )
    assert code == 0
    assert out == "x\ny\nxy\nxxy\nxyy\n"


def test_lyndon_list_count(capsys):
    code, out, _ = run(
        ["lyndon", "list", "--alphabet", "x,y", "--bound", "3", "--count"], capsys
    )
    assert code == 0
    assert out == "degree 1: 2\ndegree 2: 3\ndegree 3: 9\ntotal: 14\n"


def test_expand(capsys):
    code, out, _ = run(["expand", "--poly", "P(x y)", "--alphabet", "x,y"], capsys)
    assert code == 0
    assert out == "P(xy) - P(yx)\n"


# ---------------------------------------------------------------------------
# normal forms


def test_nf_modified_rb(capsys):
    code, out, _ = run(
        ["nf", "--system", "modrb:lambda=-1", "--poly", "P(x) P(y)",
         "--alphabet", "x,y"],
        capsys,
    )
    assert code == 0
    assert out == "P((P(x)y)) - P((P(y)x)) - (xy)\n"


def test_nf_lambda_spellings_agree(capsys):
    outs = []
    for spec in ("modrb:lambda=-1", "modrb:λ=-1", "modrb:lam=-1"):
        _, out, _ = run(
            ["nf", "--system", spec, "--poly", "P(x) P(y)", "--alphabet", "x,y"],
            capsys,
        )
        outs.append(out)
    assert outs[0] == outs[1] == outs[2]


def test_nf_trace(capsys):
    code, out, _ = run(
        ["nf", "--system", "derivation:lam=0", "--poly", "P(x y)",
         "--alphabet", "x,y", "--trace"],
        capsys,
    )
    assert code == 0
    lines = out.splitlines()
    assert lines[0].startswith("reduce P(xy) in context *")
    assert lines[-1] == "(P(x)y) - (P(y)x)"


# ---------------------------------------------------------------------------
# GSB checking


def test_gsb_check_text_positive(capsys):
    code, out, _ = run(
        ["gsb-check", "--system", "derivation:lam=1", "--bound", "4"], capsys
    )
    assert code == 0
    assert out == (
        "system: derivation (lambda=1): P((xy)) - (xP(y)) - (P(x)y) - (xy)\n"
        "order: dt  alphabet: x,y,z  bound: 4\n"
        "composition [including] at P(xyz): trivial\n"
        "composition [including] at P(xyz): trivial\n"
        "compositions checked: 2  nontrivial: 0\n"
        "verdict: GSB (Groebner-Shirshov basis at degree bound 4)\n"
    )


def test_gsb_check_text_negative(capsys):
    code, out, _ = run(
        ["gsb-check", "--system", "inverse-average", "--bound", "6",
         "--alphabet", "x,y,z"],
        capsys,
    )
    assert code == 1
    assert "NONTRIVIAL" in out
    assert "verdict: NOT a Groebner-Shirshov basis at degree bound 6" in out


def test_gsb_check_json_schema_and_determinism(capsys):
    argv = ["gsb-check", "--system", "rb-weight:lam=1", "--bound", "5", "--json",
            "--crosschecks"]
    code1, out1, _ = run(argv, capsys)
    code2, out2, _ = run(argv, capsys)
    assert code1 == code2 == 0
    assert out1 == out2  # byte-identical reruns
    payload = json.loads(out1)
    jsonschema.validate(payload, SCHEMA)
    assert payload["verdict"] is True
    assert all(e["verdict"] == "trivial" for e in payload["compositions"])
    assert payload["equivalence_crosschecks"]["agree"] is True


def test_gsb_check_json_thread_count_invariant(capsys):
    base = ["gsb-check", "--system", "derivation:lam=1", "--bound", "5", "--json"]
    _, out1, _ = run(base + ["--threads", "1"], capsys)
    _, out4, _ = run(base + ["--threads", "4"], capsys)
    assert out1 == out4
    jsonschema.validate(json.loads(out1), SCHEMA)


def test_gsb_check_json_negative_certificate(capsys):
    code, out, _ = run(
        ["gsb-check", "--system", "diff:b=2,c=0,e=0", "--bound", "4", "--json"],
        capsys,
    )
    assert code == 1
    payload = json.loads(out)
    jsonschema.validate(payload, SCHEMA)
    assert payload["verdict"] is False
    bad = [e for e in payload["compositions"] if e["verdict"] == "nontrivial"]
    assert bad and all(e["residue"] for e in bad)


# ---------------------------------------------------------------------------
# classification


def test_classify_negative_differential_point(capsys):
    code, out, _ = run(
        ["classify", "--family", "diff", "--params", "b=2,c=0,e=0", "--bound", "4"],
        capsys,
    )
    assert code == 1
    assert "condition jacobi_compatible: fail" in out
    assert "residue [including] at P(xyz):" in out
    assert out.endswith("verdict: NOT diff type at degree bound 4\n")


def test_classify_rb_positive(capsys):
    code, out, _ = run(
        ["classify", "--family", "rb", "--params", "lambda=1", "--bound", "4"],
        capsys,
    )
    assert code == 0
    assert out.startswith(
        "opi: rb-weight (lambda=1): "
        "(P(x)P(y)) - P((P(x)y)) - P((xP(y))) - P((xy))\n"
    )
    assert out.endswith("verdict: GSB (rb type at degree bound 4)\n")


def test_classify_modrb_positive(capsys):
    code, out, _ = run(
        ["classify", "--family", "modrb", "--params", "lambda=-1", "--bound", "4"],
        capsys,
    )
    assert code == 0
    assert "verdict: GSB (modrb type at degree bound 4)" in out


def test_classify_raw_kernel(capsys):
    code, out, _ = run(
        ["classify", "--family", "raw", "--kernel", "P(x) y", "--shape", "rb",
         "--bound", "4"],
        capsys,
    )
    assert code == 0
    assert "rb-candidate" in out


def test_classify_json(capsys):
    code, out, _ = run(
        ["classify", "--family", "rb", "--params", "lam=0", "--bound", "4",
         "--json"],
        capsys,
    )
    assert code == 0
    payload = json.loads(out)
    assert payload["verdict"] is True
    assert payload["opi"]["family"] == "rb"
    assert payload["gsb"]["verdict"] is True


# ---------------------------------------------------------------------------
# irreducibles and catalog


def test_irr_listing(capsys):
    code, out, _ = run(
        ["irr", "--system", "rb-weight:lam=1", "--bound", "3", "--alphabet", "x,y"],
        capsys,
    )
    assert code == 0
    assert out == (
        "x\ny\n(xy)\nP(x)\nP(y)\n"
        "(x(xy))\n((xy)y)\n(P(x)x)\n(P(x)y)\n(P(y)x)\n(P(y)y)\n"
        "P((xy))\nP(P(x))\nP(P(y))\n"
    )


def test_irr_json(capsys):
    code, out, _ = run(
        ["irr", "--system", "rb-weight:lam=1", "--bound", "3",
         "--alphabet", "x,y", "--json"],
        capsys,
    )
    assert code == 0
    payload = json.loads(out)
    assert payload["count"] == 14
    assert len(payload["irreducible"]) == 14
    assert payload["order"] == "dl"


def test_catalog_text(capsys):
    code, out, _ = run(["catalog"], capsys)
    assert code == 0
    for name in ("derivation", "rb-weight", "modified-rb", "nijenhuis"):
        assert name in out


def test_catalog_json(capsys):
    code, out, _ = run(["catalog", "--json"], capsys)
    assert code == 0
    payload = json.loads(out)
    assert [e["name"] for e in payload] == [
        "derivation", "diff-family-1", "diff-family-2", "average",
        "inverse-average", "symmetric-inverse-average", "symmetric-average",
        "nijenhuis", "rb-weight", "modified-rb",
    ]
    by_name = {e["name"]: e for e in payload}
    assert by_name["rb-weight"]["order"] == "dl"
    assert by_name["derivation"]["order"] == "dt"
    assert by_name["average"]["kernel_antisymmetric"] is False
    assert by_name["nijenhuis"]["kernel_antisymmetric"] is True


# ---------------------------------------------------------------------------
# errors and exit discipline


@pytest.mark.parametrize(
    "argv, fragment",
    [
        (["nf", "--system", "wat", "--poly", "x y"], "unknown system 'wat'"),
        (
            ["gsb-check", "--system", "rb-weight:lam=1", "--bound", "3",
             "--order", "dt"],
            "rb-shaped identities need an order",
        ),
        (
            ["gsb-check", "--system", "derivation:lam=1", "--bound", "3",
             "--order", "dl"],
            "diff-shaped identities need an order",
        ),
        (
            ["nf", "--system", "derivation:bogus=1", "--poly", "x y"],
            "unknown parameter 'bogus'",
        ),
        (
            ["lyndon", "bracket", "--word", "y x", "--alphabet", "x,y"],
            "'yx' is not a Lyndon-Shirshov bracketed word",
        ),
        (
            ["classify", "--family", "raw", "--bound", "3"],
            "--family raw requires --kernel",
        ),
        (["expand", "--poly", "2 x y", "--alphabet", "x,y"], "cannot read '2'"),
    ],
)
def test_usage_errors_exit_2(argv, fragment, capsys):
    code, out, err = run(argv, capsys)
    assert code == 2
    assert err.startswith("error: ")
    assert fragment in err


def test_unknown_flag_is_systemexit_2(capsys):
    with pytest.raises(SystemExit) as exc:
        cli.main(["lyndon", "list", "--bound", "2", "--frobnicate"])
    assert exc.value.code == 2


def test_version(capsys):
    with pytest.raises(SystemExit) as exc:
        cli.main(["--version"])
    assert exc.value.code == 0
    out = capsys.readouterr().out
    assert out.startswith("lsgsb ")
    assert "backend)" in out
