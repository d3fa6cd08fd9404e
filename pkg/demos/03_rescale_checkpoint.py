"""Shrink a toy encoder checkpoint and grow it back.

Builds a 4-layer, 64-wide set of tensors with HF-style names, consolidates
them into 3D modules under the bert-like policy, runs both transfer
directions, and shows what survives the round trip.
"""

import numpy as np

from wavescale import (
    Checkpoint,
    consolidate,
    l2s_transfer,
    load_policy,
    s2l_transfer,
    transfer,
)

rng = np.random.default_rng(1)
LAYERS, HIDDEN, FFN = 4, 64, 256
VOCAB, SEQ = 100, 48

entries = [
    ("embeddings.word_embeddings.weight", rng.standard_normal((VOCAB, HIDDEN))),
    ("embeddings.position_embeddings.weight", rng.standard_normal((SEQ, HIDDEN))),
    ("embeddings.LayerNorm.weight", np.ones(HIDDEN)),
    ("embeddings.LayerNorm.bias", np.zeros(HIDDEN)),
]
for i in range(LAYERS):
    p = f"encoder.layer.{i}."
    for role in ("query", "key", "value"):
        entries.append((p + f"attention.self.{role}.weight",
                        rng.standard_normal((HIDDEN, HIDDEN)) * 0.02))
        entries.append((p + f"attention.self.{role}.bias", np.zeros(HIDDEN)))
    entries.append((p + "attention.output.dense.weight",
                    rng.standard_normal((HIDDEN, HIDDEN)) * 0.02))
    entries.append((p + "attention.output.dense.bias", np.zeros(HIDDEN)))
    entries.append((p + "attention.output.LayerNorm.weight", np.ones(HIDDEN)))
    entries.append((p + "attention.output.LayerNorm.bias", np.zeros(HIDDEN)))
    entries.append((p + "intermediate.dense.weight",
                    rng.standard_normal((FFN, HIDDEN)) * 0.02))
    entries.append((p + "intermediate.dense.bias", np.zeros(FFN)))
    entries.append((p + "output.dense.weight",
                    rng.standard_normal((HIDDEN, FFN)) * 0.02))
    entries.append((p + "output.dense.bias", np.zeros(HIDDEN)))
    entries.append((p + "output.LayerNorm.weight", np.ones(HIDDEN)))
    entries.append((p + "output.LayerNorm.bias", np.zeros(HIDDEN)))

ckpt = Checkpoint(entries)
policy = load_policy("bert-like")
print(f"source: {len(ckpt)} tensors, arch (L={LAYERS}, d={HIDDEN}, ffn={FFN})")

small = transfer(ckpt, policy, (2, 32, 128))
print(f"shrunk: {len(small)} tensors")
d = dict(small.entries)
print("  query.weight now", d["encoder.layer.0.attention.self.query.weight"].shape)
print("  word embeddings now", d["embeddings.word_embeddings.weight"].shape,
      " (vocab axis untouched)")

big2 = transfer(small, policy, (4, 64, 256))
print(f"regrown: {len(big2)} tensors, shapes restored")

# growing cannot reinvent the discarded detail, but the approximation the
# small model carries is reproduced exactly inside the regrown weights
m_small = consolidate(small, policy)
m_regrown = l2s_transfer(consolidate(big2, policy), (2, 32, 128))
worst = max(float(np.max(np.abs(m_regrown.modules[g] - m_small.modules[g])))
            for g in m_small.modules)
print("approximation preserved through grow+shrink to", f"{worst:.3e}")

m_big = consolidate(ckpt, policy)
kept = s2l_transfer(l2s_transfer(m_big, (2, 32, 128)), (4, 64, 256))
num = sum(float(np.sum(kept.modules[g] ** 2)) for g in m_big.modules)
den = sum(float(np.sum(m_big.modules[g] ** 2)) for g in m_big.modules)
print(f"low-band share of the source weights' energy: {num / den:.1%}")
