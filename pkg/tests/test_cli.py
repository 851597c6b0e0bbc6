import json
import os
import subprocess
import sys

import numpy as np
import pandas as pd
import pytest

from conftest import DATA, TEMPLATE
from keynesgrowth import ModelParams, steady_state
from keynesgrowth.cli import main
from keynesgrowth.synthetic import LINEAR_COEFFICIENTS


def run(tmp_path, *argv, name="out"):
    out = tmp_path / name
    code = main([*argv, "--output", str(out)])
    return code, out


def read(out, filename):
    return pd.read_csv(out / filename)


def test_steady_state(tmp_path, capsys):
    code, out = run(tmp_path, "steady-state", "--a", "0.02")
    assert code == 0
    result = json.loads((out / "steady_state.json").read_text())
    assert result["kd"] == pytest.approx(steady_state(ModelParams(), 0.02), rel=1e-11)
    assert json.loads(capsys.readouterr().out) == result


def test_simulate_solow_converges(tmp_path):
    code, out = run(tmp_path, "simulate-solow", "--horizon", "400", "--step", "0.05")
    assert code == 0
    path = read(out, "solow_path.csv")
    assert list(path.columns) == ["time", "kd", "y", "r", "w"]
    assert path["kd"].iloc[-1] == pytest.approx(steady_state(ModelParams(), 0.03), rel=1e-6)
    manifest = json.loads((out / "manifest.json").read_text())
    assert manifest["command"] == "simulate-solow"
    assert manifest["outputs"] == ["solow_path.csv"]
    assert manifest["config"]["kd0"] == pytest.approx(0.5 * path["kd"].iloc[-1], rel=1e-5)


def test_halving_step_changes_terminal_kd_little(tmp_path):
    terminal = []
    for step in ("0.01", "0.005"):
        code, out = run(tmp_path, "simulate-solow", "--horizon", "50", "--step", step, name=step)
        assert code == 0
        terminal.append(read(out, "solow_path.csv")["kd"].iloc[-1])
    assert abs(terminal[0] - terminal[1]) < 1e-8


def test_simulate_keynes_balanced(tmp_path):
    code, out = run(tmp_path, "simulate-keynes", "--scenario", "balanced", "--step", "1")
    assert code == 0
    path = read(out, "keynes_path.csv")
    assert list(path.columns) == [
        "time", "b", "b_prime", "kd", "U", "u", "dU_over_U", "y", "r", "w"
    ]
    assert len(path) == 61
    np.testing.assert_allclose(path["U"], 1.05, rtol=0, atol=1e-10)


def test_simulate_keynes_solow_roundtrip(tmp_path):
    code, out = run(tmp_path, "simulate-keynes", "--scenario", "solow", "--horizon", "30", "--step", "0.05")
    assert code == 0
    path = read(out, "keynes_path.csv")
    np.testing.assert_allclose(path["U"], 1.05, rtol=0, atol=1e-8)


def test_simulate_keynes_step_signs(tmp_path):
    # a + n = 0.04 equals b_before, so U is flat until the jump and falls after it
    code, out = run(tmp_path, "simulate-keynes", "--scenario", "step", "--step", "1")
    assert code == 0
    path = read(out, "keynes_path.csv")
    g = path["dU_over_U"].to_numpy()
    t = path["time"].to_numpy()
    assert np.all(np.abs(g[t < 10]) < 1e-12)
    assert g[t == 10][0] < -0.01  # b' spike
    np.testing.assert_allclose(g[t > 10], -0.01, atol=1e-12)


def test_derive_template_rows(tmp_path):
    code, out = run(tmp_path, "derive", "--input", str(TEMPLATE))
    assert code == 0
    ds = read(out, "derived.csv")
    assert len(ds) == 65
    assert ds["year"].iloc[0] == 1949 and ds["year"].iloc[-1] == 2013


def test_derive_toy_matches_fixture(tmp_path):
    code, out = run(tmp_path, "derive", "--input", str(DATA / "toy_macro.csv"))
    assert code == 0
    assert (out / "derived.csv").read_text() == (DATA / "toy_derived_expected.csv").read_text()


def test_derive_custom_column_names(tmp_path):
    frame = pd.read_csv(DATA / "toy_macro.csv").rename(columns={"output": "GDP", "employment": "E"})
    src = tmp_path / "renamed.csv"
    frame.to_csv(src, index=False)
    code, out = run(tmp_path, "derive", "--input", str(src), "--col-output", "GDP", "--col-employment", "E")
    assert code == 0
    assert (out / "derived.csv").read_text() == (DATA / "toy_derived_expected.csv").read_text()


def test_estimate_synthetic(tmp_path, capsys):
    code, out = run(tmp_path, "estimate", "--synthetic")
    assert code == 0
    report = json.loads((out / "report_linear.json").read_text())
    got = [report["coefficients"][k] for k in ("const", "t", "b_prime")]
    assert np.max(np.abs(np.array(got) - np.array(LINEAR_COEFFICIENTS))) < 1e-8
    assert report["r_squared"] == pytest.approx(1.0, abs=1e-10)
    assert report["reference_estimates"]["b_prime"] == -0.582
    assert "b_prime" in capsys.readouterr().out
    tech = read(out, "tech_paths.csv")
    assert list(tech.columns) == ["year", "a_quadratic", "a_linear"]
    assert tech["a_linear"].iloc[0] == pytest.approx(0.029, abs=1e-8)
    fit = read(out, "unemployment_growth_fit.csv")
    np.testing.assert_allclose(fit["predicted_linear"], fit["actual_dU_over_U"], atol=1e-10)
    assert (out / "derived.csv").exists()


def test_estimate_from_derived_file(tmp_path):
    code, out = run(tmp_path, "derive", "--input", str(TEMPLATE), name="d")
    assert code == 0
    code, direct = run(tmp_path, "estimate", "--input", str(TEMPLATE), name="e1")
    assert code == 0
    code, via = run(tmp_path, "estimate", "--derived", str(out / "derived.csv"), name="e2")
    assert code == 0
    a = json.loads((direct / "report_linear.json").read_text())["coefficients"]
    b = json.loads((via / "report_linear.json").read_text())["coefficients"]
    for key in a:
        assert a[key] == pytest.approx(b[key], rel=1e-8, abs=1e-12)


def test_estimate_quadratic_report_flags_negative_path(tmp_path):
    code, out = run(tmp_path, "estimate", "--input", str(TEMPLATE))
    assert code == 0
    text = (out / "report_quadratic.txt").read_text()
    report = json.loads((out / "report_quadratic.json").read_text())
    if report["coefficients"]["t2"] < 0:
        assert "turns negative" in text
    assert "structural" not in text or "sigma * labor_share" in text


def test_reconstruct_scenarios(tmp_path):
    balanced = tmp_path / "balanced.csv"
    pd.DataFrame({"time": np.arange(61.0), "b": 0.04}).to_csv(balanced, index=False)
    code, out = run(tmp_path, "reconstruct", "--scenario-file", str(balanced), name="bal")
    assert code == 0
    path = read(out, "reconstruct.csv")
    np.testing.assert_allclose(path["U"], 1.05, rtol=0, atol=1e-10)
    np.testing.assert_allclose(path["u"], 1 - 1 / 1.05, rtol=1e-10)  # 12 significant digits

    shock = tmp_path / "shock.csv"
    pd.DataFrame({"time": np.arange(21.0), "b": np.where(np.arange(21) < 5, 0.04, 0.03)}).to_csv(
        shock, index=False
    )
    code, out = run(tmp_path, "reconstruct", "--scenario-file", str(shock), name="shock")
    assert code == 0
    g = read(out, "reconstruct.csv")["dU_over_U"].to_numpy()
    assert np.all(np.abs(g[:5]) < 1e-12)
    assert g[5] > 0.01  # capital growth slows: unemployment jumps
    np.testing.assert_allclose(g[6:], 0.01, atol=1e-12)


def test_reconstruct_model_roundtrip(tmp_path):
    code, out = run(tmp_path, "simulate-keynes", "--scenario", "solow", "--horizon", "20", "--step", "0.1", name="sim")
    assert code == 0
    sim = read(out, "keynes_path.csv")
    scenario = tmp_path / "solow_b.csv"
    sim[["time", "b", "b_prime"]].to_csv(scenario, index=False)
    code, out = run(tmp_path, "reconstruct", "--scenario-file", str(scenario), name="rec")
    assert code == 0
    rec = read(out, "reconstruct.csv")
    np.testing.assert_allclose(rec["U"], sim["U"], rtol=0, atol=1e-8)


def test_reconstruct_from_data(tmp_path):
    code, out = run(tmp_path, "reconstruct", "--input", str(TEMPLATE))
    assert code == 0
    rec = read(out, "reconstruct.csv")
    assert rec.columns[:2].tolist() == ["year", "U_observed"]
    assert rec["year"].iloc[0] == 1949 and len(rec) == 65
    assert rec["U"].iloc[0] == pytest.approx(rec["U_observed"].iloc[0], rel=1e-11)


def test_determinism(tmp_path):
    outputs = []
    for _ in range(2):
        code, out = run(tmp_path, "estimate", "--synthetic", "--noise", "0.01", "--seed", "7")
        assert code == 0
        outputs.append({p.name: p.read_text() for p in sorted(out.iterdir())})
    first, second = outputs
    assert first.keys() == second.keys()
    for name in first:
        if name == "manifest.json":
            strip = lambda text: [l for l in text.splitlines() if '"created"' not in l]
            assert strip(first[name]) == strip(second[name])
        else:
            assert first[name] == second[name], name


def test_seed_changes_noise(tmp_path):
    texts = []
    for seed in ("1", "2"):
        code, out = run(tmp_path, "estimate", "--synthetic", "--noise", "0.01", "--seed", seed, name=seed)
        assert code == 0
        texts.append((out / "report_linear.json").read_text())
    assert texts[0] != texts[1]


def test_malformed_input_exits_1_without_output(tmp_path, capsys):
    bad = tmp_path / "bad.csv"
    bad.write_text("year,output,capital,labor_force,employment\n1947,1,2,3,2\n1948,x,2,3,2\n")
    code, out = run(tmp_path, "derive", "--input", str(bad))
    assert code == 1
    assert "output" in capsys.readouterr().err
    assert not out.exists() or not any(out.iterdir())


def test_missing_input_exits_1(tmp_path):
    code, out = run(tmp_path, "derive", "--input", str(tmp_path / "nope.csv"))
    assert code == 1
    assert not out.exists()
    code, _ = run(tmp_path, "derive")
    assert code == 1


def test_invalid_parameters_exit_1(tmp_path):
    code, out = run(tmp_path, "steady-state", "--alpha", "1.5")
    assert code == 1
    assert not out.exists()


def test_numeric_failure_exits_2_without_output(tmp_path, capsys):
    scenario = tmp_path / "collapse.csv"
    pd.DataFrame({"time": [0.0, 1.0, 2.0], "b": [0.02, -0.06, -0.07]}).to_csv(scenario, index=False)
    code, out = run(tmp_path, "reconstruct", "--scenario-file", str(scenario))
    assert code == 2
    assert "numeric failure" in capsys.readouterr().err
    assert not out.exists()


def test_usage_errors_exit_1():
    with pytest.raises(SystemExit) as info:
        main(["no-such-command"])
    assert info.value.code == 1
    with pytest.raises(SystemExit) as info:
        main(["derive", "--seed", "-3"])
    assert info.value.code == 1


def test_console_entry_point(tmp_path):
    env = dict(os.environ)
    proc = subprocess.run(
        [sys.executable, "-m", "keynesgrowth.cli", "steady-state", "--output", str(tmp_path / "o")],
        capture_output=True,
        text=True,
        env=env,
    )
    assert proc.returncode == 0
    assert '"kd"' in proc.stdout
