"""Synthetic corpus with learnable bigram structure.

Sequences are sampled from a fixed random transition table: after token t
the favored successor succ[t] appears with probability 0.8, anything else
uniformly.  A model that learns the table can push masked-token loss well
below the unigram floor, which is all the convergence comparisons need.
"""

import numpy as np

from .config import MASK_ID, MASK_PROB, SEQ_LEN

CORPUS_SEED = 1234
ACTIVE_VOCAB = 255     # ids 0..254; 255 is the mask token
FAVOR = 0.8

N_TRAIN = 2048
N_VAL = 64


def _sequences(rng, succ, count):
    out = np.empty((count, SEQ_LEN), dtype=np.int64)
    out[:, 0] = rng.integers(0, ACTIVE_VOCAB, count)
    for j in range(1, SEQ_LEN):
        follow = rng.random(count) < FAVOR
        rand = rng.integers(0, ACTIVE_VOCAB, count)
        out[:, j] = np.where(follow, succ[out[:, j - 1]], rand)
    return out


def build_corpus():
    """Returns (train, val) token arrays; identical on every call."""
    rng = np.random.default_rng(CORPUS_SEED)
    succ = rng.permutation(ACTIVE_VOCAB)
    train = _sequences(rng, succ, N_TRAIN)
    val = _sequences(rng, succ, N_VAL)
    return train, val


def mask_tokens(tokens, rng):
    """MLM-style corruption: inputs with masked slots, labels elsewhere -100."""
    mask = rng.random(tokens.shape) < MASK_PROB
    # guarantee at least one masked position per sequence
    none = ~mask.any(axis=1)
    if none.any():
        cols = rng.integers(0, tokens.shape[1], int(none.sum()))
        mask[np.nonzero(none)[0], cols] = True
    inputs = np.where(mask, MASK_ID, tokens)
    labels = np.where(mask, tokens, -100)
    return inputs, labels


def val_batches(val_tokens):
    """The fixed evaluation set: masked once, shared by every run."""
    rng = np.random.default_rng(999)
    return mask_tokens(val_tokens, rng)
