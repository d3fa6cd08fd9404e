"""Synthetic checkpoint builders shared across test modules.

Shapes follow the stock encoder / decoder / vision transformer layouts the
shipped policies name; vocab and sequence sizes are kept small because
they are size-invariant and only the layer/hidden/ffn dims matter.
"""

import numpy as np

from wavescale import Checkpoint


def bert_checkpoint(layers, hidden, ffn=None, vocab=128, seq=128, types=2,
                    seed=0, dtype=np.float32):
    ffn = 4 * hidden if ffn is None else ffn
    rng = np.random.default_rng(seed)

    def t(*shape):
        return (rng.standard_normal(shape) * 0.02).astype(dtype)

    entries = []
    for i in range(layers):
        p = f"encoder.layer.{i}."
        entries += [
            (p + "attention.self.query.weight", t(hidden, hidden)),
            (p + "attention.self.query.bias", t(hidden)),
            (p + "attention.self.key.weight", t(hidden, hidden)),
            (p + "attention.self.key.bias", t(hidden)),
            (p + "attention.self.value.weight", t(hidden, hidden)),
            (p + "attention.self.value.bias", t(hidden)),
            (p + "attention.output.dense.weight", t(hidden, hidden)),
            (p + "attention.output.dense.bias", t(hidden)),
            (p + "attention.output.LayerNorm.weight", t(hidden)),
            (p + "attention.output.LayerNorm.bias", t(hidden)),
            (p + "intermediate.dense.weight", t(ffn, hidden)),
            (p + "intermediate.dense.bias", t(ffn)),
            (p + "output.dense.weight", t(hidden, ffn)),
            (p + "output.dense.bias", t(hidden)),
            (p + "output.LayerNorm.weight", t(hidden)),
            (p + "output.LayerNorm.bias", t(hidden)),
        ]
    entries += [
        ("embeddings.word_embeddings.weight", t(vocab, hidden)),
        ("embeddings.position_embeddings.weight", t(seq, hidden)),
        ("embeddings.token_type_embeddings.weight", t(types, hidden)),
        ("embeddings.LayerNorm.weight", t(hidden)),
        ("embeddings.LayerNorm.bias", t(hidden)),
        ("pooler.dense.weight", t(hidden, hidden)),
        ("pooler.dense.bias", t(hidden)),
    ]
    return Checkpoint(entries)


def gpt_checkpoint(layers, hidden, ffn=None, vocab=160, seq=96,
                   seed=0, dtype=np.float32):
    ffn = 4 * hidden if ffn is None else ffn
    rng = np.random.default_rng(seed)

    def t(*shape):
        return (rng.standard_normal(shape) * 0.02).astype(dtype)

    entries = []
    for i in range(layers):
        p = f"h.{i}."
        entries += [
            (p + "ln_1.weight", t(hidden)),
            (p + "ln_1.bias", t(hidden)),
            (p + "attn.c_attn.weight", t(hidden, 3 * hidden)),
            (p + "attn.c_attn.bias", t(3 * hidden)),
            (p + "attn.c_proj.weight", t(hidden, hidden)),
            (p + "attn.c_proj.bias", t(hidden)),
            (p + "ln_2.weight", t(hidden)),
            (p + "ln_2.bias", t(hidden)),
            (p + "mlp.c_fc.weight", t(hidden, ffn)),
            (p + "mlp.c_fc.bias", t(ffn)),
            (p + "mlp.c_proj.weight", t(ffn, hidden)),
            (p + "mlp.c_proj.bias", t(hidden)),
        ]
    entries += [
        ("wte.weight", t(vocab, hidden)),
        ("wpe.weight", t(seq, hidden)),
        ("ln_f.weight", t(hidden)),
        ("ln_f.bias", t(hidden)),
    ]
    return Checkpoint(entries)


def deit_checkpoint(layers, hidden, ffn=None, patch_dim=768, tokens=197,
                    classes=1000, seed=0, dtype=np.float32):
    ffn = 4 * hidden if ffn is None else ffn
    rng = np.random.default_rng(seed)

    def t(*shape):
        return (rng.standard_normal(shape) * 0.02).astype(dtype)

    entries = []
    for i in range(layers):
        p = f"blocks.{i}."
        entries += [
            (p + "norm1.weight", t(hidden)),
            (p + "norm1.bias", t(hidden)),
            (p + "attn.qkv.weight", t(3 * hidden, hidden)),
            (p + "attn.qkv.bias", t(3 * hidden)),
            (p + "attn.proj.weight", t(hidden, hidden)),
            (p + "attn.proj.bias", t(hidden)),
            (p + "norm2.weight", t(hidden)),
            (p + "norm2.bias", t(hidden)),
            (p + "mlp.fc1.weight", t(ffn, hidden)),
            (p + "mlp.fc1.bias", t(ffn)),
            (p + "mlp.fc2.weight", t(hidden, ffn)),
            (p + "mlp.fc2.bias", t(hidden)),
        ]
    entries += [
        ("cls_token", t(1, 1, hidden)),
        ("pos_embed", t(1, tokens, hidden)),
        ("patch_embed.proj.weight", t(hidden, patch_dim)),
        ("patch_embed.proj.bias", t(hidden)),
        ("norm.weight", t(hidden)),
        ("norm.bias", t(hidden)),
        ("head.weight", t(classes, hidden)),
        ("head.bias", t(classes)),
    ]
    return Checkpoint(entries)


def shapes_of(ckpt):
    return {name: arr.shape for name, arr in ckpt.entries}
