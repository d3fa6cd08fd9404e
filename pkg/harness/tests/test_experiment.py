import dataclasses

import numpy as np
import pytest

from toyharness import experiment, wire
from toyharness.config import BASE, CONFIGS, SMALL


@pytest.fixture
def tiny(monkeypatch):
    # shrink every budget so a full comparison runs in seconds
    monkeypatch.setattr(experiment, "SOURCE_STEPS", 25)
    monkeypatch.setitem(CONFIGS, "S",
                        dataclasses.replace(SMALL, steps=30, eval_interval=10))
    monkeypatch.setitem(CONFIGS, "B",
                        dataclasses.replace(BASE, steps=30, eval_interval=10))


def test_run_experiment_structure(tiny, tmp_path):
    res = experiment.run_experiment("s2l", "zero", 1, tmp_path)
    assert res["direction"] == "s2l"
    assert res["padding"] == "zero"
    assert res["seed"] == 1
    assert res["target_loss"] > 0
    assert res["final_loss"] > 0
    assert res["saving_ratio"] is None or isinstance(res["saving_ratio"], float)

    assert (tmp_path / "sources" / "S.wgt").exists()
    lines = (tmp_path / "baselines" / "B.csv").read_text().splitlines()
    assert lines[0] == "flops,loss"
    assert len(lines) == 1 + 1 + 30 // 10

    init = wire.read(tmp_path / "runs" / "s2l-zero-s1-init.wgt")
    q = init["encoder.layer.0.attention.self.query.weight"]
    assert q.shape == (64, 64)
    assert q.dtype == np.float32


def test_sources_and_baselines_cached(tiny, tmp_path):
    p1 = experiment.ensure_source("S", tmp_path)
    stamp = p1.stat().st_mtime_ns
    assert experiment.ensure_source("S", tmp_path) == p1
    assert p1.stat().st_mtime_ns == stamp
    b1 = experiment.ensure_baseline("S", tmp_path)
    stamp = b1.stat().st_mtime_ns
    experiment.ensure_baseline("S", tmp_path)
    assert b1.stat().st_mtime_ns == stamp


def test_unknown_direction_rejected(tmp_path):
    with pytest.raises(ValueError):
        experiment.run_experiment("sideways", "zero", 1, tmp_path)


def _fake(direction, padding, seed, ratio, loss):
    return {"direction": direction, "padding": padding, "seed": seed,
            "target_loss": 3.0, "final_loss": loss, "saving_ratio": ratio,
            "scratch_csv": "x", "method_csv": "y"}


def test_report_positive_and_ordering():
    results = [
        _fake("s2l", "zero", 1, 0.5, 2.0),
        _fake("l2s", "zero", 1, 0.25, 2.5),
        _fake("s2l", "gaussian", 1, 0.1, 2.2),
        _fake("s2l", "uniform", 1, 0.1, 2.4),
    ]
    text = experiment.report(results)
    assert "s2l zero-padding saving ratios: [+0.5000] (all positive)" in text
    assert "l2s zero-padding saving ratios: [+0.2500] (all positive)" in text
    assert "observed ordering: zero <= gaussian <= uniform (matches" in text


def test_report_flags_misses():
    results = [
        _fake("s2l", "zero", 1, None, 2.0),
        _fake("l2s", "zero", 1, -0.2, 2.5),
        _fake("s2l", "gaussian", 1, 0.1, 1.5),
        _fake("s2l", "uniform", 1, 0.1, 1.8),
    ]
    text = experiment.report(results)
    assert "s2l zero-padding saving ratios: [unreached] (NOT all positive)" in text
    assert "[-0.2000] (NOT all positive)" in text
    assert "does not match" in text
