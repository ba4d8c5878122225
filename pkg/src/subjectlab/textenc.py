"""Prompt embedding: token ids -> fixed-width conditioning vector.

The encoder is a trainable embedding table with a fixed sinusoidal positional
modulation, pooled by a masked mean over non-padding positions and finished by
a two-layer network. It is co-trained with the denoiser during pretraining and
stays trainable during personalization fine-tuning.

Positional information enters multiplicatively (emb * (1 + 0.5 * pos)); a
purely additive encoding would cancel under mean pooling and make the encoder
blind to token order.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from . import autodiff as ad
from .autodiff import ParameterSet, Tensor
from .vocab import PAD_ID, PROMPT_LEN, TokenSeq

__all__ = ["TextEncoderConfig", "TextEncoder", "init_encoder"]

_POS_GAIN = 0.5
_EMBED_INIT_STD = 0.25


@dataclass(frozen=True)
class TextEncoderConfig:
    vocab_size: int
    embed_dim: int = 64
    cond_dim: int = 64
    pool_hidden: int = 128
    prompt_len: int = PROMPT_LEN
    seed: int = 0

    def __post_init__(self):
        for field in ("vocab_size", "embed_dim", "cond_dim", "pool_hidden", "prompt_len"):
            if getattr(self, field) <= 0:
                raise ValueError(f"{field} must be positive")

    def to_dict(self) -> dict:
        return {
            "vocab_size": self.vocab_size,
            "embed_dim": self.embed_dim,
            "cond_dim": self.cond_dim,
            "pool_hidden": self.pool_hidden,
            "prompt_len": self.prompt_len,
            "seed": self.seed,
        }


def _positional_table(length: int, dim: int) -> np.ndarray:
    pos = np.arange(length, dtype=np.float64)[:, None]
    k = np.arange(dim, dtype=np.float64)[None, :]
    freq = np.exp(np.log(50.0) * (k // 2) / max(dim // 2 - 1, 1))
    phase = pos * freq / length * 2.0 * np.pi
    table = np.where(k % 2 == 0, np.sin(phase), np.cos(phase))
    return table.astype(np.float32)


class TextEncoder:
    """Embedding table + masked-mean pooling network producing c."""

    def __init__(self, config: TextEncoderConfig, params: ParameterSet):
        self.config = config
        self.params = params
        self.pos_table = _positional_table(config.prompt_len, config.embed_dim)

    def forward(self, pt: dict[str, Tensor], ids: np.ndarray) -> Tensor:
        """Tape forward: ids (B, L) int -> conditioning (B, cond_dim)."""
        ids = np.asarray(ids)
        if ids.ndim != 2 or ids.shape[1] != self.config.prompt_len:
            raise ad.ShapeMismatch("ids", f"(B, {self.config.prompt_len})", ids.shape)
        if ids.size and (ids.min() < 0 or ids.max() >= self.config.vocab_size):
            raise ad.ShapeMismatch(
                "ids", f"values < {self.config.vocab_size}", (int(ids.min()), int(ids.max()))
            )
        emb = ad.embedding(pt["embed"], ids)  # (B, L, E)
        posmul = ad.constant(1.0 + _POS_GAIN * self.pos_table, name="posmul")
        emb = ad.mul(emb, posmul)
        mask = (ids != PAD_ID).astype(np.float32)  # (B, L)
        emb = ad.mul(emb, ad.constant(mask[:, :, None], name="mask"))
        summed = ad.sum_axis(emb, axis=1)  # (B, E)
        counts = mask.sum(axis=1, keepdims=True)
        inv = np.where(counts > 0, 1.0 / np.maximum(counts, 1.0), 0.0).astype(np.float32)
        pooled = ad.mul(summed, ad.constant(inv, name="inv_count"))
        h = ad.silu(ad.affine(pooled, pt["pool.w1"], pt["pool.b1"]))
        return ad.affine(h, pt["pool.w2"], pt["pool.b2"])

    def encode_prompt(self, tokens) -> np.ndarray:
        """No-grad conditioning vector for one TokenSeq (or id vector)."""
        ids = tokens.as_array() if isinstance(tokens, TokenSeq) else np.asarray(tokens, dtype=np.int32)
        out = self.forward(_constants(self.params), ids[None, :])
        return out.data[0]

    def encode_batch(self, ids: np.ndarray) -> np.ndarray:
        """No-grad conditioning for a batch of id rows (B, L)."""
        return self.forward(_constants(self.params), ids).data


def _constants(params: ParameterSet) -> dict[str, Tensor]:
    return {name: ad.constant(arr, name=name) for name, arr in params.items()}


def init_encoder(
    vocab_size: int,
    embed_dim: int = 64,
    cond_dim: int = 64,
    seed: int = 0,
    pool_hidden: int = 128,
    prompt_len: int = PROMPT_LEN,
) -> TextEncoder:
    """Deterministically initialized encoder."""
    config = TextEncoderConfig(
        vocab_size=vocab_size,
        embed_dim=embed_dim,
        cond_dim=cond_dim,
        pool_hidden=pool_hidden,
        prompt_len=prompt_len,
        seed=seed,
    )
    rng = np.random.default_rng(np.random.SeedSequence([seed, 0x7E]))
    params = ParameterSet()
    params.add("embed", rng.normal(0.0, _EMBED_INIT_STD, size=(vocab_size, embed_dim)))
    params.add("pool.w1", rng.normal(0.0, 1.0 / np.sqrt(embed_dim), size=(embed_dim, pool_hidden)))
    params.add("pool.b1", np.zeros(pool_hidden))
    params.add("pool.w2", rng.normal(0.0, 1.0 / np.sqrt(pool_hidden), size=(pool_hidden, cond_dim)))
    params.add("pool.b2", np.zeros(cond_dim))
    return TextEncoder(config, params)
