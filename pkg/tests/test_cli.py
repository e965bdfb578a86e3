import json

import numpy as np
import pytest

from majcoh import PureState, serialize
from majcoh.cli import main
from majcoh.sampling import random_density_matrix


@pytest.fixture()
def files(tmp_path):
    def write(name, obj):
        path = tmp_path / name
        path.write_text(json.dumps(obj))
        return str(path)

    return tmp_path, write


def state_doc(amps):
    return serialize.state_to_json(PureState(np.asarray(amps, dtype=complex)))


class TestCheck:
    def test_uniform_to_two_level_pair(self, files, capsys):
        _, write = files
        x = write("x.json", [1 / 3, 1 / 3, 1 / 3])
        y = write("y.json", [0.5, 0.5, 0.0])
        assert main(["check", x, y]) == 0
        assert capsys.readouterr().out.strip() == "ConvertsTo"

    def test_accepts_state_documents(self, files, capsys):
        _, write = files
        x = write("x.json", state_doc(np.full(3, 1 / np.sqrt(3))))
        y = write("y.json", state_doc([1 / np.sqrt(2), 1 / np.sqrt(2), 0.0]))
        assert main(["check", x, y]) == 0
        assert capsys.readouterr().out.strip() == "ConvertsTo"

    def test_incomparable(self, files, capsys):
        _, write = files
        x = write("x.json", [0.5, 0.25, 0.25])
        y = write("y.json", [0.45, 0.45, 0.1])
        assert main(["check", x, y]) == 0
        assert capsys.readouterr().out.strip() == "Incomparable"


class TestSynth:
    def test_writes_channel_and_plan(self, files, capsys):
        tmp, write = files
        psi = write("psi.json", state_doc(np.full(3, 1 / np.sqrt(3))))
        phi = write("phi.json", state_doc([1 / np.sqrt(2), 1 / np.sqrt(2), 0.0]))
        out = tmp / "ch.json"
        assert main(["synth", psi, phi, "-o", str(out)]) == 0
        channel_doc = json.loads(out.read_text())
        assert channel_doc["dim_in"] == 3
        plan_doc = json.loads((tmp / "ch.plan.json").read_text())
        assert set(plan_doc) == {"chain", "pre_unitary", "post_unitary"}
        assert len(plan_doc["chain"]) <= 2

    def test_refuses_reversed_pair(self, files, capsys):
        _, write = files
        psi = write("psi.json", state_doc([1 / np.sqrt(2), 1 / np.sqrt(2), 0.0]))
        phi = write("phi.json", state_doc(np.full(3, 1 / np.sqrt(3))))
        assert main(["synth", psi, phi]) == 2
        assert "NotMajorized" in capsys.readouterr().err

    def test_stdout_mode(self, files, capsys):
        _, write = files
        psi = write("psi.json", state_doc([1.0, 0.0]))
        phi = write("phi.json", state_doc([1.0, 0.0]))
        assert main(["synth", psi, phi]) == 0
        doc = json.loads(capsys.readouterr().out)
        assert doc["dim_in"] == 2


class TestApplyRoundTrip:
    def test_synth_output_reaches_target(self, files, capsys):
        tmp, write = files
        psi_doc = state_doc(np.full(3, 1 / np.sqrt(3)))
        phi_amps = [1 / np.sqrt(2), 1 / np.sqrt(2), 0.0]
        psi = write("psi.json", psi_doc)
        phi = write("phi.json", state_doc(phi_amps))
        out = tmp / "ch.json"
        assert main(["synth", psi, phi, "-o", str(out)]) == 0
        assert main(["apply", str(out), psi]) == 0
        produced = serialize.density_from_json(json.loads(capsys.readouterr().out))
        target = np.outer(phi_amps, np.conj(phi_amps))
        assert np.abs(produced.matrix - target).max() < 1e-12


class TestVerify:
    def test_verdicts_for_valid_channel(self, files, capsys):
        tmp, write = files
        psi = write("psi.json", state_doc([1.0, 0.0]))
        out = tmp / "ch.json"
        assert main(["synth", psi, psi, "-o", str(out)]) == 0
        assert main(["verify", str(out)]) == 0
        verdict = json.loads(capsys.readouterr().out)
        assert verdict["incoherent"] is True
        assert verdict["complete"] is True
        assert verdict["completeness_residual"] <= 1e-12

    def test_flags_incomplete_channel(self, files, capsys):
        _, write = files
        half = write("ch.json", {"dim_in": 2, "dim_out": 2,
                                 "kraus": [[[[0.5, 0.0], [0.0, 0.0]], [[0.0, 0.0], [0.5, 0.0]]]]})
        assert main(["verify", half]) == 0
        verdict = json.loads(capsys.readouterr().out)
        assert verdict["complete"] is False

    def test_flags_coherent_channel(self, files, capsys):
        _, write = files
        r = 1 / np.sqrt(2)
        hadamard = write("ch.json", {"dim_in": 2, "dim_out": 2,
                                     "kraus": [serialize.matrix_to_json(
                                         np.array([[r, r], [r, -r]]))]})
        assert main(["verify", hadamard]) == 0
        verdict = json.loads(capsys.readouterr().out)
        assert verdict["complete"] is True
        assert verdict["incoherent"] is False


class TestCatalyze:
    def test_finds_catalyst(self, files, capsys):
        _, write = files
        psi = write("psi.json", [0.4, 0.4, 0.1, 0.1])
        phi = write("phi.json", [0.5, 0.25, 0.25, 0.0])
        assert main(["catalyze", psi, phi, "--dim", "2", "--grid", "0.01"]) == 0
        assert json.loads(capsys.readouterr().out) == [0.6, 0.4]

    def test_none_found_at_resolution(self, files, capsys):
        _, write = files
        psi = write("psi.json", [0.4, 0.4, 0.1, 0.1])
        phi = write("phi.json", [0.5, 0.25, 0.25, 0.0])
        assert main(["catalyze", psi, phi, "--dim", "2", "--grid", "0.5"]) == 2
        assert "none found at this resolution" in capsys.readouterr().err

    def test_certified_impossible_wording(self, files, capsys):
        _, write = files
        psi = write("psi.json", [0.6, 0.4])
        phi = write("phi.json", [0.5, 0.5])
        assert main(["catalyze", psi, phi, "--dim", "2", "--grid", "0.02"]) == 2
        assert "no catalyst exists" in capsys.readouterr().err


class TestMeasure:
    def test_cl(self, files, capsys):
        _, write = files
        state = write("s.json", state_doc(np.full(3, 1 / np.sqrt(3))))
        assert main(["measure", "--measure", "cl", "--l", "2", state]) == 0
        assert abs(json.loads(capsys.readouterr().out) - 2 / 3) < 1e-12

    def test_cl_requires_l(self, files, capsys):
        _, write = files
        state = write("s.json", state_doc([1.0, 0.0]))
        assert main(["measure", "--measure", "cl", state]) == 1
        assert "--l" in capsys.readouterr().err

    def test_skew(self, files, capsys):
        _, write = files
        state = write("s.json", state_doc([1 / np.sqrt(2), 1 / np.sqrt(2), 0.0]))
        obs = write("k.json", {"dim": 3, "rows": serialize.matrix_to_json(np.diag([1.0, 10.0, 5.0]))})
        assert main(["measure", "--measure", "skew", "--observable", obs, state]) == 0
        assert abs(json.loads(capsys.readouterr().out) - 81 / 4) < 1e-12

    def test_skew_requires_observable(self, files, capsys):
        _, write = files
        state = write("s.json", state_doc([1.0, 0.0]))
        assert main(["measure", "--measure", "skew", state]) == 1
        assert "--observable" in capsys.readouterr().err


class TestCounterexample:
    def test_report(self, capsys):
        assert main(["counterexample"]) == 0
        report = json.loads(capsys.readouterr().out)
        assert report["violation"] is True
        assert abs(report["skew_before"] - 122 / 9) < 1e-12
        assert abs(report["skew_after"] - 81 / 4) < 1e-12


class TestAbsorb:
    def test_projects_to_target(self, files, capsys):
        _, write = files
        rng = np.random.default_rng(0)
        rho = write("rho.json", serialize.density_to_json(random_density_matrix(3, rng)))
        sigma = write("sigma.json", [0.5, 0.3, 0.2])
        assert main(["absorb", rho, sigma]) == 0
        doc = json.loads(capsys.readouterr().out)
        out = serialize.density_from_json(doc["output"])
        assert np.abs(out.matrix - np.diag([0.5, 0.3, 0.2])).max() < 1e-10
        assert len(doc["channel"]["kraus"]) == 9

    def test_accepts_diagonal_density_target(self, files, capsys):
        _, write = files
        rho = write("rho.json", state_doc([1 / np.sqrt(2), 1 / np.sqrt(2)]))
        sigma = write("sigma.json", {"dim": 2, "rows": serialize.matrix_to_json(np.diag([0.7, 0.3]))})
        assert main(["absorb", rho, sigma]) == 0
        out = serialize.density_from_json(json.loads(capsys.readouterr().out)["output"])
        assert np.abs(out.matrix - np.diag([0.7, 0.3])).max() < 1e-12


class TestDiagnostics:
    def test_malformed_json(self, files, capsys):
        tmp, _ = files
        bad = tmp / "bad.json"
        bad.write_text("{not json")
        assert main(["check", str(bad), str(bad)]) == 1
        assert "malformed JSON" in capsys.readouterr().err

    def test_missing_file(self, files, capsys):
        tmp, write = files
        x = write("x.json", [1.0])
        assert main(["check", x, str(tmp / "nope.json")]) == 1
        assert "error" in capsys.readouterr().err

    def test_profile_length_mismatch(self, files, capsys):
        _, write = files
        x = write("x.json", [0.5, 0.5])
        y = write("y.json", [0.5, 0.25, 0.25])
        assert main(["check", x, y]) == 1
        assert "length" in capsys.readouterr().err

    def test_apply_dimension_mismatch(self, files, capsys):
        tmp, write = files
        psi = write("psi.json", state_doc([1.0, 0.0]))
        out = tmp / "ch.json"
        assert main(["synth", psi, psi, "-o", str(out)]) == 0
        other = write("big.json", state_doc([0.0, 0.0, 1.0]))
        assert main(["apply", str(out), other]) == 1
        assert "dim" in capsys.readouterr().err

    def test_invalid_flag(self, capsys):
        assert main(["check", "--bogus"]) == 1
        assert "error" in capsys.readouterr().err

    def test_unnormalized_state_names_field(self, files, capsys):
        _, write = files
        bad = write("bad.json", {"dim": 2, "amplitudes": [[1.0, 0.0], [1.0, 0.0]]})
        assert main(["measure", "--measure", "cl", "--l", "2", bad]) == 1
        assert "amplitudes" in capsys.readouterr().err

    def test_tolerance_override(self, files, capsys):
        # with a loose norm tolerance the same file is accepted
        _, write = files
        near = write("near.json", [0.5 + 5e-7, 0.5])
        ok = write("ok.json", [0.7, 0.3])
        assert main(["check", near, ok]) == 1
        capsys.readouterr()
        assert main(["check", "--tol-norm", "1e-5", near, ok]) == 0

    def test_deterministic_output(self, capsys):
        assert main(["counterexample"]) == 0
        first = capsys.readouterr().out
        assert main(["counterexample"]) == 0
        assert capsys.readouterr().out == first

    def test_synth_files_byte_identical(self, files):
        tmp, write = files
        psi = write("psi.json", state_doc(np.full(4, 0.5)))
        phi = write("phi.json", state_doc(np.sqrt([0.4, 0.3, 0.2, 0.1])))
        assert main(["synth", psi, phi, "-o", str(tmp / "a.json")]) == 0
        assert main(["synth", psi, phi, "-o", str(tmp / "b.json")]) == 0
        assert (tmp / "a.json").read_bytes() == (tmp / "b.json").read_bytes()
        assert (tmp / "a.plan.json").read_bytes() == (tmp / "b.plan.json").read_bytes()
