"""Training loop: logs (cumulative FLOPs, validation loss) curves."""

import numpy as np
import torch

from .config import SEQ_LEN
from .data import build_corpus, mask_tokens, val_batches
from .model import build_model


class DivergedError(RuntimeError):
    """Training loss went NaN; the experiment run is void."""


def export_checkpoint(model, path):
    from . import wire
    tensors = {name: p.detach().numpy().astype(np.float32)
               for name, p in model.state_dict().items()}
    wire.write(tensors, path)


def load_checkpoint(model, path):
    from . import wire
    tensors = wire.read(path)
    state = {name: torch.from_numpy(arr.astype(np.float32))
             for name, arr in tensors.items()}
    model.load_state_dict(state)
    return model


@torch.no_grad()
def validation_loss(model, val_inputs, val_labels):
    model.eval()
    total, n = 0.0, 0
    for i in range(0, len(val_inputs), 32):
        inp = torch.from_numpy(val_inputs[i:i + 32])
        lab = torch.from_numpy(val_labels[i:i + 32])
        k = int((lab != -100).sum())
        total += float(model.loss(inp, lab)) * k
        n += k
    model.train()
    return total / n


def train_run(cfg, seed, init_path=None):
    """Train one model; returns (model, curve) with curve rows (flops, loss).

    init_path restores exported weights before training (the warm-start
    case); otherwise the seed controls the fresh initialization.  The
    same seed also drives batch sampling and masking, so a run is fully
    reproducible.
    """
    torch.manual_seed(seed)
    model = build_model(cfg, seed)
    if init_path is not None:
        load_checkpoint(model, init_path)

    train_tokens, val_tokens = build_corpus()
    val_inputs, val_labels = val_batches(val_tokens)
    rng = np.random.default_rng(seed)
    opt = torch.optim.Adam(model.parameters(), lr=cfg.lr)

    flops_per_step = 6 * model.param_count() * cfg.batch * SEQ_LEN
    curve = [(0.0, validation_loss(model, val_inputs, val_labels))]
    for step in range(1, cfg.steps + 1):
        rows = rng.integers(0, len(train_tokens), cfg.batch)
        inputs, labels = mask_tokens(train_tokens[rows], rng)
        loss = model.loss(torch.from_numpy(inputs), torch.from_numpy(labels))
        if not torch.isfinite(loss):
            raise DivergedError(f"loss {float(loss.detach())} at step {step}")
        opt.zero_grad()
        loss.backward()
        opt.step()
        if step % cfg.eval_interval == 0 or step == cfg.steps:
            curve.append((float(flops_per_step * step),
                          validation_loss(model, val_inputs, val_labels)))
    return model, curve


def write_curve(curve, path):
    with open(path, "w") as f:
        f.write("flops,loss\n")
        for flops, loss in curve:
            f.write(f"{flops:.1f},{loss:.8f}\n")
