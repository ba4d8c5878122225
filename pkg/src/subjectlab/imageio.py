"""Binary PPM (P6) image io and grid sheets.

Images travel through the repo as float32 arrays in [-1, 1] with shape
(H, W, 3). On disk they are 8-bit P6 with the fixed affine mapping

    byte = round((value + 1) * 127.5)        value = byte / 127.5 - 1

so files regenerate bit-for-bit from the same float inputs.
"""

from __future__ import annotations

from pathlib import Path

import numpy as np

__all__ = ["to_bytes_image", "from_bytes_image", "write_ppm", "read_ppm", "emit_grid"]

GRID_SEPARATOR = -1.0  # separator/border color (black)


def to_bytes_image(img: np.ndarray) -> np.ndarray:
    arr = np.clip(np.asarray(img, dtype=np.float32), -1.0, 1.0)
    return np.round((arr + 1.0) * 127.5).astype(np.uint8)


def from_bytes_image(raw: np.ndarray) -> np.ndarray:
    return (raw.astype(np.float32) / 127.5 - 1.0).astype(np.float32)


def write_ppm(path: str | Path, img: np.ndarray) -> None:
    img = np.asarray(img)
    if img.ndim != 3 or img.shape[2] != 3:
        raise ValueError(f"expected (H, W, 3) image, got shape {img.shape}")
    h, w, _ = img.shape
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    header = f"P6\n{w} {h}\n255\n".encode("ascii")
    path.write_bytes(header + to_bytes_image(img).tobytes())


def read_ppm(path: str | Path) -> np.ndarray:
    data = Path(path).read_bytes()
    fields: list[bytes] = []
    i = 0
    while len(fields) < 4:
        while i < len(data) and data[i : i + 1].isspace():
            i += 1
        if data[i : i + 1] == b"#":  # comment line
            while i < len(data) and data[i] != 0x0A:
                i += 1
            continue
        j = i
        while j < len(data) and not data[j : j + 1].isspace():
            j += 1
        fields.append(data[i:j])
        i = j
    i += 1  # single whitespace after maxval
    if fields[0] != b"P6":
        raise ValueError(f"not a P6 file: {path}")
    w, h, maxval = int(fields[1]), int(fields[2]), int(fields[3])
    if maxval != 255:
        raise ValueError(f"unsupported maxval {maxval}")
    raw = np.frombuffer(data[i : i + w * h * 3], dtype=np.uint8).reshape(h, w, 3)
    return from_bytes_image(raw)


def emit_grid(images, columns: int, path: str | Path) -> None:
    """Write a row-major P6 contact sheet with 1-pixel separators and border.

    n images of size (H, W) in a grid with ``columns`` columns produce a file
    of exactly (rows*H + rows + 1) x (columns*W + columns + 1) pixels.
    """
    images = [np.asarray(im) for im in images]
    if not images:
        raise ValueError("emit_grid needs at least one image")
    shape = images[0].shape
    if any(im.shape != shape for im in images):
        raise ValueError("all grid images must share the same dimensions")
    if columns < 1:
        raise ValueError("columns must be >= 1")
    h, w, _ = shape
    rows = (len(images) + columns - 1) // columns
    canvas = np.full(
        (rows * h + rows + 1, columns * w + columns + 1, 3), GRID_SEPARATOR, dtype=np.float32
    )
    for idx, im in enumerate(images):
        r, c = divmod(idx, columns)
        top = 1 + r * (h + 1)
        left = 1 + c * (w + 1)
        canvas[top : top + h, left : left + w] = im
    write_ppm(path, canvas)
