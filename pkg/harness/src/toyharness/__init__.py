"""Toy training harness: scratch vs rescaled-checkpoint warm starts."""

from .config import BASE, CONFIGS, SMALL, ToyConfig
from .data import build_corpus, mask_tokens
from .experiment import run_experiment, sweep
from .model import ToyModel, build_model
from .train import DivergedError, export_checkpoint, load_checkpoint, train_run

__all__ = [
    "BASE",
    "CONFIGS",
    "SMALL",
    "ToyConfig",
    "ToyModel",
    "DivergedError",
    "build_corpus",
    "build_model",
    "export_checkpoint",
    "load_checkpoint",
    "mask_tokens",
    "run_experiment",
    "sweep",
    "train_run",
]
