"""Repo-wide checkpoint format.

A checkpoint file is a UTF-8 text manifest followed by a raw blob of
little-endian float32 values:

    SUBJECTLAB-CKPT-1
    meta <one-line canonical JSON>
    tensor <name> <d0,d1,...> <byte offset> <byte length>
    ...
    DATA
    <raw float32 little-endian blob, tensors in manifest order>

Offsets are relative to the first byte after the ``DATA\\n`` line. Round-trips
are bit-exact.
"""

from __future__ import annotations

import json
from pathlib import Path

import numpy as np

from .autodiff import ParameterSet

__all__ = ["CheckpointError", "save_checkpoint", "load_checkpoint", "canonical_json"]

MAGIC = "SUBJECTLAB-CKPT-1"


class CheckpointError(Exception):
    pass


def canonical_json(obj) -> str:
    """Canonical one-line JSON: sorted keys, no whitespace."""
    return json.dumps(obj, sort_keys=True, separators=(",", ":"), ensure_ascii=True)


def save_checkpoint(path: str | Path, params: ParameterSet, meta: dict | None = None) -> None:
    path = Path(path)
    lines = [MAGIC, "meta " + canonical_json(meta or {})]
    blobs: list[bytes] = []
    offset = 0
    for name, arr in params.items():
        raw = np.ascontiguousarray(arr, dtype="<f4").tobytes()
        dims = ",".join(str(d) for d in arr.shape) if arr.ndim else "scalar"
        lines.append(f"tensor {name} {dims} {offset} {len(raw)}")
        blobs.append(raw)
        offset += len(raw)
    lines.append("DATA")
    header = ("\n".join(lines) + "\n").encode("utf-8")
    path.parent.mkdir(parents=True, exist_ok=True)
    tmp = path.with_suffix(path.suffix + ".tmp")
    with open(tmp, "wb") as fh:
        fh.write(header)
        for raw in blobs:
            fh.write(raw)
    tmp.replace(path)


def load_checkpoint(path: str | Path) -> tuple[ParameterSet, dict]:
    path = Path(path)
    if not path.exists():
        raise CheckpointError(f"checkpoint not found: {path}")
    data = path.read_bytes()
    sep = b"DATA\n"
    idx = data.find(sep)
    if idx < 0:
        raise CheckpointError(f"malformed checkpoint (no DATA marker): {path}")
    header = data[:idx].decode("utf-8").splitlines()
    blob = data[idx + len(sep):]
    if not header or header[0] != MAGIC:
        raise CheckpointError(f"bad checkpoint magic in {path}")
    meta: dict = {}
    params = ParameterSet()
    for line in header[1:]:
        if line.startswith("meta "):
            meta = json.loads(line[len("meta "):])
            continue
        if not line.startswith("tensor "):
            raise CheckpointError(f"unexpected manifest line: {line!r}")
        _, name, dims, offset_s, length_s = line.split(" ")
        offset, length = int(offset_s), int(length_s)
        shape = () if dims == "scalar" else tuple(int(d) for d in dims.split(","))
        raw = blob[offset : offset + length]
        if len(raw) != length:
            raise CheckpointError(f"truncated blob for tensor '{name}' in {path}")
        arr = np.frombuffer(raw, dtype="<f4").reshape(shape).copy()
        params.add(name, arr)
    return params, meta
