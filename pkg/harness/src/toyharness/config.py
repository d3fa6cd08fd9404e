"""Toy model and training configuration."""

from dataclasses import dataclass

VOCAB = 256
SEQ_LEN = 32
MASK_ID = 255          # reserved; corpus tokens stay in 0..254
MASK_PROB = 0.15


@dataclass(frozen=True)
class ToyConfig:
    layers: int
    hidden: int
    steps: int = 300
    batch: int = 32
    lr: float = 3e-3
    eval_interval: int = 20

    def __post_init__(self):
        if self.layers not in (2, 4):
            raise ValueError(f"layers must be 2 or 4, got {self.layers}")
        if self.hidden not in (32, 64):
            raise ValueError(f"hidden must be 32 or 64, got {self.hidden}")
        if self.hidden % 16:
            raise ValueError("hidden must be a multiple of the 16-dim heads")

    @property
    def ffn(self):
        return 4 * self.hidden

    @property
    def heads(self):
        return self.hidden // 16


# the small/base pair scales 2x in depth and width, like the full-size pairs
SMALL = ToyConfig(layers=2, hidden=32)
BASE = ToyConfig(layers=4, hidden=64)

CONFIGS = {"S": SMALL, "B": BASE}
