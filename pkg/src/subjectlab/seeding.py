"""Deterministic seed splitting.

Every run derives all of its randomness from one master seed. Sub-streams are
named by a path of labels/indices; the same (master seed, path) always yields
the same generator, independent of how many other streams were created and in
which order. This is the splitting rule referenced by run manifests.
"""

from __future__ import annotations

import hashlib

import numpy as np

__all__ = ["label_key", "child_seed_seq", "child_rng"]

_MASK32 = 0xFFFFFFFF


def label_key(label: str) -> int:
    """Map a stream label to a stable 32-bit integer key."""
    digest = hashlib.sha256(label.encode("utf-8")).digest()
    return int.from_bytes(digest[:4], "little") & _MASK32


def _as_key(part: str | int) -> int:
    if isinstance(part, str):
        return label_key(part)
    if isinstance(part, (int, np.integer)):
        key = int(part)
        if key < 0:
            raise ValueError(f"seed path components must be non-negative, got {key}")
        return key
    raise TypeError(f"seed path component must be str or int, got {type(part)!r}")


def child_seed_seq(master_seed: int, *path: str | int) -> np.random.SeedSequence:
    """Build the seed sequence for the sub-stream named by ``path``."""
    entropy = [int(master_seed) & _MASK32] + [_as_key(p) for p in path]
    return np.random.SeedSequence(entropy)


def child_rng(master_seed: int, *path: str | int) -> np.random.Generator:
    """Generator for the sub-stream named by ``path`` under ``master_seed``."""
    return np.random.default_rng(child_seed_seq(master_seed, *path))
