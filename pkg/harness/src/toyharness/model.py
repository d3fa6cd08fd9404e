"""Tiny pre-LN transformer encoder for masked-token prediction.

The module tree is laid out so state_dict keys match the tensor names the
rescaling CLI's bert-like grouping policy expects
(encoder.layer.N.attention.self.query.weight and friends).  The output
head is tied to the word embeddings, so every parameter is covered by a
policy rule and a rescaled checkpoint is a complete init.
"""

import math

import torch
from torch import nn

from .config import SEQ_LEN, VOCAB, ToyConfig


class SelfAttention(nn.Module):
    def __init__(self, hidden, heads):
        super().__init__()
        self.query = nn.Linear(hidden, hidden)
        self.key = nn.Linear(hidden, hidden)
        self.value = nn.Linear(hidden, hidden)
        self.heads = heads
        self.head_dim = hidden // heads

    def forward(self, x):
        b, s, d = x.shape
        def split(t):
            return t.view(b, s, self.heads, self.head_dim).transpose(1, 2)
        q, k, v = split(self.query(x)), split(self.key(x)), split(self.value(x))
        att = (q @ k.transpose(-2, -1)) / math.sqrt(self.head_dim)
        out = att.softmax(dim=-1) @ v
        return out.transpose(1, 2).reshape(b, s, d)


class AttentionBlock(nn.Module):
    def __init__(self, hidden, heads):
        super().__init__()
        setattr(self, "self", SelfAttention(hidden, heads))
        self.output = nn.Module()
        self.output.dense = nn.Linear(hidden, hidden)
        self.output.LayerNorm = nn.LayerNorm(hidden)


class Layer(nn.Module):
    def __init__(self, cfg):
        super().__init__()
        self.attention = AttentionBlock(cfg.hidden, cfg.heads)
        self.intermediate = nn.Module()
        self.intermediate.dense = nn.Linear(cfg.hidden, cfg.ffn)
        self.output = nn.Module()
        self.output.dense = nn.Linear(cfg.ffn, cfg.hidden)
        self.output.LayerNorm = nn.LayerNorm(cfg.hidden)

    def forward(self, x):
        a = self.attention
        x = x + a.output.dense(getattr(a, "self")(a.output.LayerNorm(x)))
        h = self.intermediate.dense(self.output.LayerNorm(x))
        return x + self.output.dense(torch.nn.functional.gelu(h))


class Embeddings(nn.Module):
    def __init__(self, cfg):
        super().__init__()
        self.word_embeddings = nn.Embedding(VOCAB, cfg.hidden)
        self.position_embeddings = nn.Embedding(SEQ_LEN, cfg.hidden)
        self.LayerNorm = nn.LayerNorm(cfg.hidden)

    def forward(self, ids):
        pos = torch.arange(ids.shape[1], device=ids.device)
        return self.LayerNorm(self.word_embeddings(ids)
                              + self.position_embeddings(pos))


class ToyModel(nn.Module):
    def __init__(self, cfg: ToyConfig):
        super().__init__()
        self.cfg = cfg
        self.embeddings = Embeddings(cfg)
        self.encoder = nn.Module()
        self.encoder.layer = nn.ModuleList(Layer(cfg) for _ in range(cfg.layers))

    def forward(self, ids):
        x = self.embeddings(ids)
        for layer in self.encoder.layer:
            x = layer(x)
        return x @ self.embeddings.word_embeddings.weight.t()

    def loss(self, inputs, labels):
        logits = self(inputs)
        return nn.functional.cross_entropy(
            logits.view(-1, VOCAB), labels.view(-1), ignore_index=-100)

    def param_count(self):
        return sum(p.numel() for p in self.parameters())


def build_model(cfg, seed):
    torch.manual_seed(seed)
    model = ToyModel(cfg)
    for mod in model.modules():
        if isinstance(mod, (nn.Linear, nn.Embedding)):
            nn.init.normal_(mod.weight, std=0.02)
            if getattr(mod, "bias", None) is not None:
                nn.init.zeros_(mod.bias)
    return model
