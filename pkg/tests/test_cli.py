import json

import numpy as np
import pytest

from conftest import TOY_EXACT_THIRD, TOY_PTILDE
from exactmix.cli import ArgumentParser
from exactmix.main import run
from exactmix.output import RunReport


def _run(capsys, *argv):
    code = run(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def _write_model(tmp_path, alpha, beta, name="model.json"):
    path = tmp_path / name
    path.write_text(json.dumps({"alpha": alpha, "beta": beta}), encoding="utf-8")
    return str(path)


class TestParser:
    def test_overrides_map_to_config_keys(self):
        parsed = ArgumentParser().parse([
            "infer", "--model", "toy.json", "--obs", "0,1", "--method", "gibbs",
            "--iterations", "500", "--seed", "9", "--cap", "10", "--format", "tsv",
        ])
        assert parsed.command == "infer"
        assert parsed.method == "gibbs"
        assert parsed.overrides == {
            "seed": 9, "gibbs_iterations": 500, "mask_cap": 10, "output_format": "tsv",
        }

    def test_zero_values_are_kept(self):
        parsed = ArgumentParser().parse(["infer", "--model", "toy.json", "--obs", "0", "--seed", "0", "--eps", "0"])
        assert parsed.overrides == {"seed": 0, "eps": 0.0}

    def test_bench_lists(self):
        parsed = ArgumentParser().parse(["bench", "--sizes", "3,4", "--causes", "2", "--methods", "exact,vb"])
        assert parsed.sizes == [3, 4]
        assert parsed.causes == [2]
        assert parsed.methods == ["exact", "vb"]


class TestInfer:
    def test_exact_on_toy(self, capsys):
        code, out, _ = _run(capsys, "infer", "--model", "toy.json", "--obs", "0,1", "--method", "exact", "--alpha-scale", "1")
        assert code == 0
        report = json.loads(out)
        np.testing.assert_allclose(report["theta_mean"], TOY_EXACT_THIRD, atol=1e-4)
        assert report["causes"] == ["z1", "z2", "z3"]
        assert report["ptilde"] == pytest.approx(TOY_PTILDE, rel=1e-6)

    def test_no_observations_gives_prior_mean(self, capsys):
        code, out, _ = _run(capsys, "infer", "--model", "toy.json", "--obs", "", "--method", "exact")
        assert code == 0
        np.testing.assert_allclose(json.loads(out)["theta_mean"], [1 / 3] * 3, rtol=1e-15)

    def test_output_round_trips(self, capsys):
        _, out, _ = _run(capsys, "infer", "--model", "toy.json", "--obs", "0,1", "--method", "sparse")
        assert RunReport.from_json(out).to_json() == out

    def test_exact_and_sparse_agree(self, tmp_path, capsys, rng):
        beta = rng.random((6, 5)) * (rng.random((6, 5)) < 0.5)
        beta[:, 0] += 0.1
        path = _write_model(tmp_path, (1.0 - rng.random(5)).tolist(), beta.tolist())
        results = {}
        for method in ("exact", "sparse"):
            code, out, _ = _run(capsys, "infer", "--model", path, "--obs", "0,1,2,3,4,5,2", "--method", method)
            assert code == 0
            results[method] = json.loads(out)
        np.testing.assert_allclose(results["sparse"]["theta_mean"], results["exact"]["theta_mean"], rtol=1e-9)
        assert results["sparse"]["probability"] == pytest.approx(results["exact"]["probability"], rel=1e-9)

    def test_tsv(self, capsys):
        code, out, _ = _run(capsys, "infer", "--model", "toy.json", "--obs", "0,1", "--format", "tsv")
        assert code == 0
        assert "z2\t0.3549" in out.splitlines()

    def test_gibbs_reports_seed(self, capsys):
        code, out, _ = _run(capsys, "infer", "--model", "toy.json", "--obs", "0,1", "--method", "gibbs",
                            "--iterations", "2000", "--burn-in", "200", "--seed", "4")
        assert code == 0
        diagnostics = json.loads(out)["diagnostics"]
        assert diagnostics["seed"] == 4
        assert diagnostics["burn_in"] == 200

    def test_sparse_with_eps_warns(self, capsys):
        code, _, err = _run(capsys, "infer", "--model", "toy.json", "--obs", "0,1", "--method", "sparse", "--eps", "0.01")
        assert code == 0
        assert "approximate" in err

    def test_obs_file(self, tmp_path, capsys):
        path = tmp_path / "obs.txt"
        path.write_text("0\n1\n", encoding="utf-8")
        code, out, _ = _run(capsys, "infer", "--model", "toy.json", "--obs-file", str(path))
        assert code == 0
        np.testing.assert_allclose(json.loads(out)["theta_mean"], TOY_EXACT_THIRD, atol=1e-4)


class TestExitCodes:
    def test_token_outside_vocabulary(self, capsys):
        code, out, err = _run(capsys, "infer", "--model", "toy.json", "--obs", "0,5")
        assert code == 2
        assert out == ""
        assert "ObservationError" in err

    def test_missing_model(self, tmp_path, capsys):
        code, _, _ = _run(capsys, "infer", "--model", str(tmp_path / "none.json"), "--obs", "0")
        assert code == 2

    def test_unknown_method(self, capsys):
        code, _, _ = _run(capsys, "infer", "--model", "toy.json", "--obs", "0", "--method", "laplace")
        assert code == 2

    def test_negative_alpha_is_malformed(self, tmp_path, capsys):
        path = _write_model(tmp_path, [-1.0], [[0.5]])
        code, _, err = _run(capsys, "infer", "--model", path, "--obs", "0")
        assert code == 2
        assert "ModelFormatError" in err

    def test_invalid_cap(self, capsys):
        code, _, _ = _run(capsys, "infer", "--model", "toy.json", "--obs", "0", "--cap", "30")
        assert code == 2

    def test_negative_burn_in(self, capsys):
        code, _, err = _run(capsys, "infer", "--model", "toy.json", "--obs", "0", "--method", "gibbs", "--burn-in", "-1")
        assert code == 2
        assert "burn_in" in err

    def test_missing_config_file(self, tmp_path, capsys):
        code, _, _ = _run(capsys, "infer", "--model", "toy.json", "--obs", "0", "--config", str(tmp_path / "x.json"))
        assert code == 2

    def test_degenerate_evidence(self, tmp_path, capsys):
        path = _write_model(tmp_path, [1.0, 1.0], [[0.5, 0.5], [0.0, 0.0]])
        code, _, err = _run(capsys, "infer", "--model", path, "--obs", "0,1")
        assert code == 3
        assert "DegenerateEvidenceError" in err

    def test_above_mask_cap(self, capsys):
        code, _, err = _run(capsys, "infer", "--model", "toy.json", "--obs", "0,1,0", "--cap", "2")
        assert code == 3
        assert "CapacityError" in err

    def test_oracle_budget(self, capsys):
        code, _, _ = _run(capsys, "oracle", "--model", "toy.json", "--obs", ",".join(["0"] * 9), "--kind", "brute")
        assert code == 0
        code, _, _ = _run(capsys, "oracle", "--model", "toy.json", "--obs", ",".join(["0"] * 17), "--kind", "brute")
        assert code == 3

    def test_help(self, capsys):
        code, out, _ = _run(capsys, "--help")
        assert code == 0
        assert "infer" in out


class TestOtherCommands:
    @pytest.mark.parametrize("kind", ["brute", "partition", "factor"])
    def test_oracle(self, kind, capsys):
        code, out, _ = _run(capsys, "oracle", "--model", "toy.json", "--obs", "0,1", "--kind", kind)
        assert code == 0
        report = json.loads(out)
        assert report["method"] == kind
        assert report["ptilde"] == pytest.approx(TOY_PTILDE, rel=1e-6)
        assert report["probability"] == pytest.approx(TOY_PTILDE / 2.0, rel=1e-6)

    def test_oracle_permanent(self, tmp_path, capsys):
        path = _write_model(tmp_path, [-1.0, -1.0], [[1.0, 1.0], [1.0, 1.0]])
        code, out, _ = _run(capsys, "oracle", "--model", path, "--obs", "0,1", "--kind", "permanent")
        assert code == 0
        report = json.loads(out)
        assert report["diagnostics"]["permanent"] == 2.0
        assert report["ptilde"] == 2.0
        assert "probability" not in report

    def test_oracle_permanent_needs_square(self, capsys):
        code, _, _ = _run(capsys, "oracle", "--model", "toy.json", "--obs", "0,1", "--kind", "permanent")
        assert code == 3

    def test_graph(self, capsys):
        code, out, _ = _run(capsys, "graph", "--model", "toy.json", "--obs", "0,1", "--dump-decomposition")
        assert code == 0
        diagnostics = json.loads(out)["diagnostics"]
        assert diagnostics["edges"] == [[0, 1]]
        assert diagnostics["bags"] == [[0, 1]]
        assert diagnostics["width"] == 1
        assert diagnostics["valid"] is True
        assert diagnostics["decomposition"].startswith("width 1")

    def test_bench(self, capsys):
        code, out, _ = _run(capsys, "bench", "--sizes", "2,3", "--causes", "2", "--methods", "exact,vb", "--cap", "2")
        assert code == 0
        rows = json.loads(out)["rows"]
        assert [(row["n"], row["method"], row["status"]) for row in rows] == [
            (2, "exact", "ok"), (2, "vb", "ok"), (3, "exact", "refused"), (3, "vb", "ok"),
        ]
