import dataclasses

import numpy as np
import pytest
import torch

from toyharness import wire
from toyharness.config import SMALL
from toyharness.model import build_model
from toyharness.train import (DivergedError, export_checkpoint,
                              load_checkpoint, train_run, write_curve)

TINY = dataclasses.replace(SMALL, steps=120, eval_interval=20)
REPRO = dataclasses.replace(SMALL, steps=40, eval_interval=10)


def test_short_run_learns():
    _, curve = train_run(TINY, seed=0)
    flops = [f for f, _ in curve]
    assert flops[0] == 0.0
    assert flops == sorted(flops)
    assert len(curve) == 1 + TINY.steps // TINY.eval_interval
    assert curve[-1][1] < curve[0][1] - 0.01


def test_run_is_reproducible():
    _, c1 = train_run(REPRO, seed=5)
    _, c2 = train_run(REPRO, seed=5)
    for (f1, l1), (f2, l2) in zip(c1, c2):
        assert f1 == f2
        assert abs(l1 - l2) <= 1e-6


def test_checkpoint_round_trip_preserves_weights(tmp_path):
    model, _ = train_run(dataclasses.replace(SMALL, steps=3), seed=1)
    path = tmp_path / "m.wgt"
    export_checkpoint(model, path)
    twin = load_checkpoint(build_model(SMALL, seed=99), path)
    a, b = model.state_dict(), twin.state_dict()
    assert all(torch.equal(a[k], b[k]) for k in a)


def test_nan_init_raises_diverged(tmp_path):
    model = build_model(SMALL, seed=0)
    tensors = {name: np.full(p.shape, np.nan, dtype=np.float32)
               for name, p in model.state_dict().items()}
    bad = tmp_path / "nan.wgt"
    wire.write(tensors, bad)
    with pytest.raises(DivergedError):
        train_run(dataclasses.replace(SMALL, steps=5), seed=0, init_path=bad)


def test_curve_csv_format(tmp_path):
    path = tmp_path / "c.csv"
    write_curve([(0.0, 5.5), (1234.0, 3.25)], path)
    lines = path.read_text().splitlines()
    assert lines[0] == "flops,loss"
    assert lines[1] == "0.0,5.50000000"
    assert lines[2] == "1234.0,3.25000000"
