import pytest
import sys
import os
import json

# Add the parent directory to sys.path for imports
sys.path.insert(0, os.path.abspath(os.path.join(os.path.dirname(__file__), '..')))

from qec_erasure import __version__
from qec_erasure.cli import main, render
from qec_erasure.quantum_core import make_state
from qec_erasure.serialization import falsify_report_from_dict, trial_report_from_dict, write_code, write_state


def run(capsys, *argv):
    """Run the command line and return (exit code, stdout, stderr)"""
    status = main(list(argv))
    captured = capsys.readouterr()
    return status, captured.out, captured.err


def test_version(capsys):
    status, out, _ = run(capsys, "--version")
    assert status == 0
    assert __version__ in out


def test_kl_check_builtin_codes(capsys):
    status, out, _ = run(capsys, "kl-check", "fourqubit_k1", "--t", "1")
    assert status == 0
    report = json.loads(out)
    assert report["code"] == "FourQubit_K1"
    assert report["passed"]
    assert report["witness"] is None

    status, out, _ = run(capsys, "kl-check", "FourQubit_K1", "--t", "1", "--mode", "general")
    assert status == 1
    assert json.loads(out)["witness"]["positions"]


def test_kl_check_code_file(capsys, tmp_path, four_qubit_code_k2):
    path = tmp_path / "k2.json"
    write_code(four_qubit_code_k2, path)
    status, out, _ = run(capsys, "kl-check", str(path), "--t", "1", "--basis", "pauli")
    assert status == 0
    assert json.loads(out)["k"] == 2


def test_missing_code_file_is_a_usage_error(capsys, tmp_path):
    status, _, err = run(capsys, "kl-check", str(tmp_path / "missing.json"))
    assert status == 2
    assert err.startswith("error:")


def test_bch_description(capsys):
    status, out, _ = run(capsys, "bch", "--n", "7", "--d-bch", "3")
    assert status == 0
    description = json.loads(out)
    assert description["generator"] == "1101"
    assert description["K"] == 4


def test_bch_dual_containment_failure(capsys):
    """The [15,7,5] code fails the containment check on cosets (3,12)"""
    status, out, _ = run(capsys, "bch", "--n", "15", "--d-bch", "5", "--check-lemma7")
    assert status == 1
    assert json.loads(out)["lemma7"]["cosets"] == [3, 12]
    assert "(3,12)" in out


def test_qbch_table(capsys):
    status, out, _ = run(capsys, "qbch", "--n", "7", "--d-bch", "3", "--table")
    assert status == 0
    assert out.strip().splitlines()[-1] == "[[7,1,3]]"

    status, out, _ = run(capsys, "bch", "--n", "15", "--d-bch", "2", "--qbch")
    assert status == 0
    quantum = json.loads(out)["quantum"]
    assert (quantum["N"], quantum["K"], quantum["d"]) == (15, 7, 3)


def test_bch_rejects_even_length(capsys):
    status, _, err = run(capsys, "bch", "--n", "8", "--d-bch", "3")
    assert status == 2
    assert "odd" in err


def test_decode_corrects_errors_and_erasures(capsys):
    received = "000001000000000"
    status, out, _ = run(capsys, "decode", "--bch", "15,1,5", "--received", received, "--erasures", "2,9")
    assert status == 0
    outcome = json.loads(out)
    assert outcome["status"] == "Corrected"
    assert outcome["codeword"] == "0" * 15
    assert outcome["error_positions"] == [5]


def test_decode_failure_and_bad_input(capsys):
    status, out, _ = run(capsys, "decode", "--bch", "15,1,5", "--received", "0" * 15, "--erasures", "0,1,2,3,4")
    assert status == 1
    assert json.loads(out)["status"] == "Failure"
    status, _, _ = run(capsys, "decode", "--bch", "15,1,5", "--received", "0102")
    assert status == 2
    status, _, _ = run(capsys, "decode", "--bch", "15,5", "--received", "0" * 15)
    assert status == 2


def test_decode_erasures_only(capsys):
    status, out, _ = run(capsys, "decode", "--bch", "7,1,3", "--received", "1101000",
                         "--erasures", "0,1", "--erasures-only")
    assert status == 0
    assert json.loads(out)["codeword"] == "1101000"


def test_simulate_is_byte_identical_across_runs(capsys, tmp_path):
    """Same arguments and seed produce the same report file"""
    paths = [tmp_path / "first.json", tmp_path / "second.json"]
    for path in paths:
        status, _, _ = run(capsys, "simulate", "FourQubit_K1", "--model", "unitary", "--erasure-size", "1",
                           "--trials", "30", "--seed", "42", "--out", str(path), "--expect-perfect")
        assert status == 0
    assert paths[0].read_bytes() == paths[1].read_bytes()
    report = json.loads(paths[0].read_text())
    assert report["model"] == "RandomUnitary"
    assert report["failures"] == 0


def test_simulate_expect_perfect_beyond_capacity(capsys):
    status, out, _ = run(capsys, "simulate", "FourQubit_K1", "--model", "pauli", "--erasure-size", "2",
                         "--trials", "200", "--seed", "1", "--expect-perfect")
    assert status == 1
    assert json.loads(out)["failures"] > 0


def test_simulate_rejects_unknown_model(capsys):
    status, _, _ = run(capsys, "simulate", "FourQubit_K1", "--model", "depolarizing", "--seed", "1")
    assert status == 2


def test_falsify(capsys):
    status, out, _ = run(capsys, "falsify", "--n", "3", "--trials", "200", "--seed", "3")
    assert status == 0
    assert json.loads(out) == {"n": 3, "trials": 200, "seed": 3, "passes": 0}
    status, _, _ = run(capsys, "falsify", "--n", "6", "--seed", "3")
    assert status == 2


def test_experiment_reports_parse_back(capsys):
    """simulate and falsify JSON output reads back through the report parsers"""
    status, out, _ = run(capsys, "simulate", "steane7", "--model", "pauli", "--erasure-size", "2",
                         "--trials", "25", "--seed", "7", "--json")
    assert status == 0
    report = trial_report_from_dict(json.loads(out))
    assert (report.code, report.model, report.trials, report.failures) == ("Steane7", "RandomPauli", 25, 0)
    assert report.mean_fidelity == pytest.approx(1.0, abs=1e-9)
    assert list(report.model_dump()) == list(json.loads(out))

    status, out, _ = run(capsys, "falsify", "--n", "2", "--trials", "50", "--seed", "11")
    assert status == 0
    falsified = falsify_report_from_dict(json.loads(out))
    assert (falsified.n, falsified.trials, falsified.seed, falsified.passes) == (2, 50, 11, 0)


def test_report_parsers_reject_inconsistent_counts():
    with pytest.raises(ValueError, match="failures"):
        trial_report_from_dict({
            "code": "Steane7", "model": "RandomPauli", "erasure_size": 2, "trials": 3,
            "mean_fidelity": 0.5, "min_fidelity": 0.1, "failures": 4, "seed": 1,
        })
    with pytest.raises(ValueError, match="TrialReportModel"):
        trial_report_from_dict({
            "code": "Steane7", "model": "depolarizing", "erasure_size": 2, "trials": 3,
            "mean_fidelity": 0.5, "min_fidelity": 0.1, "failures": 0, "seed": 1,
        })
    with pytest.raises(ValueError, match="passes"):
        falsify_report_from_dict({"n": 2, "trials": 1, "seed": 0, "passes": 2})


def test_render_formats():
    """A report model renders as JSON or as a table with a trailing message"""
    report = falsify_report_from_dict({"n": 3, "trials": 10, "seed": 2, "passes": 0})
    assert json.loads(render(report)) == {"n": 3, "trials": 10, "seed": 2, "passes": 0}
    lines = render(report, "table", "done").splitlines()
    assert [line.split() for line in lines] == [["n", "3"], ["trials", "10"], ["seed", "2"], ["passes", "0"], ["done"]]


def test_product_state(capsys, tmp_path):
    first, second = tmp_path / "b1.json", tmp_path / "b2.json"
    write_state(make_state(2, [("00", 1), ("11", 1)]), first)
    write_state(make_state(2, [("01", 1), ("10", 1)]), second)
    status, out, _ = run(capsys, "product-state", str(first), str(second))
    assert status == 0
    document = json.loads(out)
    assert document["found"]
    assert document["residual"] < 1e-9


def test_admissible(capsys):
    status, out, _ = run(capsys, "admissible", "--n", "7", "--table")
    assert status == 0
    assert "d_bch" in out
    status, out, _ = run(capsys, "admissible", "--n", "15")
    assert [entry["d_bch"] for entry in json.loads(out)["admissible"]] == [2, 3]
