"""End-to-end tests of the parinv command line through main(argv)."""

import json

import pytest

from parinv.cli.app import RunConfig, build_run_config, create_parser
from parinv.cli.main import main
from parinv.config import init_config
from parinv.errors import BadComposition
from parinv.roots import Composition
from parinv.schemas import (
    CanonicalizeModel,
    ExpressModel,
    GeneratorListingModel,
    GeneratorSetModel,
    VerifySummaryModel,
)


@pytest.fixture(autouse=True)
def _env(clean_env):
    return clean_env


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def error_of(err):
    return json.loads(err.strip().splitlines()[-1])


# ----------------------------
# diagram and generators
# ----------------------------


def test_diagram_text(capsys):
    code, out, _ = run(capsys, "diagram", "--blocks", "2,1,3,2")
    assert code == 0
    head, broad = out.split("broad base:")
    first = head.split("base and phi:")[1]
    assert out.startswith("blocks (2,1,3,2)")
    assert (first.count("S"), first.count("X")) == (5, 3)
    assert (broad.count("S"), broad.count("T")) == (5, 8)
    assert first.strip().splitlines()[0] == ". . o o S o o o"


def test_diagram_json(capsys):
    code, out, _ = run(capsys, "diagram", "--blocks", "2,1,3,2", "--format", "json")
    assert code == 0
    model = GeneratorSetModel.model_validate_json(out)
    assert model.S_layers == [[[2, 3], [3, 4], [6, 7]], [[1, 5], [5, 8]]]
    assert model.phi == [[4, 7], [5, 7], [4, 8]]
    assert len(model.T) == 13
    assert len(model.M) == 23
    assert len(model.M_prime) == 12


@pytest.mark.parametrize("blocks, counts", [
    ("2,1,3,2", (5, 3, 13)),
    ("1,1", (1, 0, 1)),
    ("1,2,1", (2, 1, 4)),
])
def test_generators_json(capsys, blocks, counts):
    code, out, _ = run(capsys, "generators", "--blocks", blocks, "--format", "json")
    assert code == 0
    listing = GeneratorListingModel.model_validate_json(out)
    assert (len(listing.minors), len(listing.l_polynomials), len(listing.n_polynomials)) == counts


def test_generators_text(capsys):
    code, out, _ = run(capsys, "generators", "--blocks", "1,2,1")
    assert code == 0
    assert "minors (2):" in out
    assert "l-polynomials (1):" in out
    assert "n-polynomials (4):" in out
    assert "  M(1,2) = x_{1,2}" in out
    assert "  N(1,3) = x_{1,3}    [remoteness 2]" in out


def test_output_file(capsys, tmp_path):
    target = tmp_path / "diagram.txt"
    code, out, _ = run(capsys, "diagram", "--blocks", "1,1", "--output", str(target))
    assert code == 0
    assert out == ""
    assert target.read_text(encoding="utf-8").startswith("blocks (1,1)")


# ----------------------------
# verify
# ----------------------------


def test_verify_json(capsys):
    code, out, _ = run(capsys, "verify", "--n-max", "3", "--samples", "2", "--format", "json")
    assert code == 0
    summary = VerifySummaryModel.model_validate_json(out)
    assert summary.ok
    assert summary.compositions_checked == 7
    assert summary.seed == 42
    assert summary.failing_compositions == []
    assert all(cert.valid for cert in summary.independence_certificates)


def test_verify_text_with_seed(capsys):
    code, out, _ = run(capsys, "verify", "--n-max", "2", "--seed", "3")
    assert code == 0
    assert "compositions checked: 3" in out
    assert out.rstrip().endswith("result: ok")


# ----------------------------
# canonicalize and express
# ----------------------------


def test_canonicalize(capsys, tmp_path):
    grid = [
        ["0", "2", "1/2", "5"],
        ["0", "0", "0", "-3"],
        ["0", "0", "0", "4"],
        ["0", "0", "0", "0"],
    ]
    path = tmp_path / "x.json"
    path.write_text(json.dumps(grid), encoding="utf-8")
    code, out, _ = run(capsys, "canonicalize", "--blocks", "1,2,1", "--input", str(path))
    assert code == 0
    model = CanonicalizeModel.model_validate_json(out)
    assert model.canonical == {"(1,2)": "2", "(3,4)": "4", "(1,3)": "1/2", "(2,4)": "-3"}
    assert model.invariants == model.canonical


def test_canonicalize_rejects_support_outside_nilradical(capsys, tmp_path):
    grid = [["0", "0", "0"], ["0", "0", "1"], ["0", "0", "0"]]
    path = tmp_path / "x.json"
    path.write_text(json.dumps(grid), encoding="utf-8")
    code, out, err = run(capsys, "canonicalize", "--blocks", "1,2", "--input", str(path))
    assert code == 2
    assert out == ""
    assert error_of(err)["error"] == "bad_matrix"


def test_canonicalize_degenerate(capsys, tmp_path):
    path = tmp_path / "x.json"
    path.write_text(json.dumps([["0"] * 8 for _ in range(8)]), encoding="utf-8")
    code, _, err = run(capsys, "canonicalize", "--blocks", "2,1,3,2", "--input", str(path))
    assert code == 2
    assert error_of(err)["error"] == "degenerate_orbit"


def test_express(capsys, tmp_path):
    terms = {"terms": [[[["x_{5,8}", 1]], "1"]]}
    path = tmp_path / "f.json"
    path.write_text(json.dumps(terms), encoding="utf-8")
    code, out, _ = run(capsys, "express", "--blocks", "2,1,3,2", "--input", str(path))
    assert code == 0
    model = ExpressModel.model_validate_json(out)
    assert model.numerator.text == "y_{5,8}"
    assert model.denominator.text == "1"


@pytest.mark.parametrize("terms, code_name", [
    ({"terms": [[[["x_{1,4}", 1]], "1"]]}, "not_invariant"),
    ({"terms": [[[["x_{2,3}", 1]], "1"]]}, "root_not_in_m"),
    ({"terms": [[[["t_1", 1]], "1"]]}, "bad_polynomial"),
    ({"polynomial": []}, "bad_polynomial"),
])
def test_express_errors(capsys, tmp_path, terms, code_name):
    path = tmp_path / "f.json"
    path.write_text(json.dumps(terms), encoding="utf-8")
    code, _, err = run(capsys, "express", "--blocks", "1,2,1", "--input", str(path))
    assert code == 2
    assert error_of(err)["error"] == code_name


# ----------------------------
# Arguments and limits
# ----------------------------


def test_bad_composition(capsys):
    code, _, err = run(capsys, "diagram", "--blocks", "2,0")
    assert code == 2
    assert error_of(err)["error"] == "bad_composition"


def test_size_limit(capsys, clean_env):
    code, _, err = run(capsys, "diagram", "--blocks", "7,7")
    assert code == 2
    assert error_of(err)["error"] == "bad_composition"

    code, out, _ = run(capsys, "diagram", "--blocks", "7,7", "--allow-large")
    assert code == 0
    assert out.startswith("blocks (7,7)")

    clean_env.setenv("PARINV_N_LIMIT", "3")
    code, _, err = run(capsys, "verify", "--n-max", "4")
    assert code == 2
    assert error_of(err)["error"] == "bad_composition"


def test_bad_configuration(capsys, clean_env):
    clean_env.setenv("PARINV_WORKERS", "many")
    code, _, err = run(capsys, "diagram", "--blocks", "1,1")
    assert code == 2
    assert error_of(err)["error"] == "bad_configuration"


def test_bad_worker_flag(capsys):
    code, _, err = run(capsys, "verify", "--n-max", "2", "--workers", "0")
    assert code == 2
    assert error_of(err)["error"] == "bad_arguments"


def test_missing_blocks_is_a_usage_error(capsys):
    with pytest.raises(SystemExit) as excinfo:
        main(["diagram"])
    assert excinfo.value.code == 2


def test_run_config_validation():
    with pytest.raises(BadComposition):
        RunConfig(command="generators")
    with pytest.raises(ValueError):
        RunConfig(command="express", composition=Composition((1, 1)))
    with pytest.raises(ValueError):
        RunConfig(command="verify", samples=-1)
    assert RunConfig(command="verify", n_max=20, allow_large=True).n_max == 20


def test_trivial_diagrams(capsys):
    _, out, _ = run(capsys, "diagram", "--blocks", "3")
    grids = out.split("base and phi:")[1]
    assert set(grids.replace("broad base:", "").split()) == {"."}

    _, out, _ = run(capsys, "diagram", "--blocks", "1,1")
    first = out.split("base and phi:")[1].split("broad base:")[0]
    assert first.split() == [".", "S", ".", "."]


def test_verify_output_is_deterministic(capsys):
    argv = ("verify", "--n-max", "3", "--seed", "5", "--samples", "1", "--format", "json")
    _, first, _ = run(capsys, *argv)
    _, second, _ = run(capsys, *argv)
    assert first == second


@pytest.mark.parametrize("n_max", ["0", "-2"])
def test_verify_needs_a_positive_size(capsys, n_max):
    code, out, err = run(capsys, "verify", "--n-max", n_max)
    assert code == 2
    assert out == ""
    assert error_of(err)["error"] == "bad_arguments"


def test_empty_block_size_is_rejected(capsys):
    code, _, err = run(capsys, "diagram", "--blocks", "2,,1")
    assert code == 2
    assert error_of(err)["error"] == "bad_composition"


def test_run_config_reads_the_loaded_configuration(clean_env):
    args = create_parser().parse_args(["verify", "--n-max", "2"])
    with pytest.raises(RuntimeError):
        build_run_config(args)

    clean_env.setenv("PARINV_SEED", "9")
    clean_env.setenv("PARINV_WORKERS", "3")
    init_config()
    cfg = build_run_config(args)
    assert (cfg.seed, cfg.workers, cfg.n_max) == (9, 3, 2)
