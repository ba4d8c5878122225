"""Minimal reverse-mode autodiff over float32 numpy arrays.

The op set is exactly what the repo's networks need: affine maps, 3x3
convolution, pointwise nonlinearity, RMS normalization, concatenation,
average pooling, embedding lookup, and the reductions used by losses.

Determinism contract: every op is a fixed sequence of numpy kernels, and all
reductions (np.sum / np.mean / matmul accumulation) use numpy's fixed-shape
pairwise scheme, so forward and backward passes are bit-reproducible for
identical inputs regardless of BLAS thread count.
"""

from __future__ import annotations

from collections.abc import Iterator
from contextlib import contextmanager
from typing import Callable

import numpy as np

__all__ = [
    "AutodiffError",
    "ShapeMismatch",
    "NonFiniteValue",
    "Tensor",
    "ParameterSet",
    "leaf",
    "constant",
    "add",
    "sub",
    "mul",
    "scale",
    "matmul",
    "affine",
    "silu",
    "rmsnorm",
    "concat",
    "square",
    "sum_last",
    "sum_axis",
    "mean_all",
    "reshape",
    "embedding",
    "conv2d",
    "avgpool2d",
    "backward",
    "evaluate_with_gradients",
    "finite_difference_grad",
    "assert_finite",
]

DTYPE = np.float32

# Ambient tape precision. Everything runs float32; the finite-difference
# oracle temporarily switches to float64 so its central differences estimate
# the underlying mathematical derivative instead of float32 rounding noise.
_dtype_stack: list[type] = [np.float32]


def active_dtype() -> type:
    return _dtype_stack[-1]


@contextmanager
def precision(dtype):
    _dtype_stack.append(dtype)
    try:
        yield
    finally:
        _dtype_stack.pop()


class AutodiffError(Exception):
    """Base error for the differentiable substrate."""


class ShapeMismatch(AutodiffError):
    """An operand's shape is incompatible; carries the offending tensor name."""

    def __init__(self, name: str, expected, got):
        self.name = name
        super().__init__(f"shape mismatch for '{name}': expected {expected}, got {got}")


class NonFiniteValue(AutodiffError):
    """A value that must be finite contains NaN or Inf."""

    def __init__(self, name: str, detail: str = ""):
        self.name = name
        msg = f"non-finite values in '{name}'"
        super().__init__(msg + (f": {detail}" if detail else ""))


def _as_f32(value) -> np.ndarray:
    arr = np.asarray(value, dtype=active_dtype())
    return np.ascontiguousarray(arr)


def assert_finite(name: str, arr: np.ndarray) -> np.ndarray:
    if not np.all(np.isfinite(arr)):
        raise NonFiniteValue(name)
    return arr


class Tensor:
    """Node in the reverse-mode tape; wraps a C-contiguous float32 array."""

    __slots__ = ("data", "grad", "requires_grad", "name", "_parents", "_backward")

    def __init__(
        self,
        data,
        parents: tuple["Tensor", ...] = (),
        backward_fn: Callable[[], None] | None = None,
        requires_grad: bool = False,
        name: str = "",
    ):
        self.data = _as_f32(data)
        self.grad: np.ndarray | None = None
        self._parents = parents
        self._backward = backward_fn
        self.requires_grad = requires_grad or any(p.requires_grad for p in parents)
        self.name = name

    @property
    def shape(self) -> tuple[int, ...]:
        return self.data.shape

    def __repr__(self) -> str:
        tag = self.name or "tensor"
        return f"Tensor({tag}, shape={self.data.shape})"


def leaf(data, requires_grad: bool = False, name: str = "") -> Tensor:
    return Tensor(data, requires_grad=requires_grad, name=name)


def constant(data, name: str = "") -> Tensor:
    return Tensor(data, name=name)


def _accum(node: Tensor, g: np.ndarray) -> None:
    if node.grad is None:
        node.grad = g.astype(node.data.dtype, copy=True)
    else:
        node.grad += g


def _unbroadcast(g: np.ndarray, shape: tuple[int, ...]) -> np.ndarray:
    """Reduce a broadcast gradient back to ``shape``."""
    extra = g.ndim - len(shape)
    if extra > 0:
        g = g.sum(axis=tuple(range(extra)))
    axes = tuple(i for i, n in enumerate(shape) if n == 1 and g.shape[i] != 1)
    if axes:
        g = g.sum(axis=axes, keepdims=True)
    return g


# ---------------------------------------------------------------------------
# ops
# ---------------------------------------------------------------------------


def add(a: Tensor, b: Tensor) -> Tensor:
    out = Tensor(a.data + b.data, (a, b))

    def bw():
        if a.requires_grad:
            _accum(a, _unbroadcast(out.grad, a.data.shape))
        if b.requires_grad:
            _accum(b, _unbroadcast(out.grad, b.data.shape))

    out._backward = bw
    return out


def sub(a: Tensor, b: Tensor) -> Tensor:
    out = Tensor(a.data - b.data, (a, b))

    def bw():
        if a.requires_grad:
            _accum(a, _unbroadcast(out.grad, a.data.shape))
        if b.requires_grad:
            _accum(b, _unbroadcast(-out.grad, b.data.shape))

    out._backward = bw
    return out


def mul(a: Tensor, b: Tensor) -> Tensor:
    out = Tensor(a.data * b.data, (a, b))

    def bw():
        if a.requires_grad:
            _accum(a, _unbroadcast(out.grad * b.data, a.data.shape))
        if b.requires_grad:
            _accum(b, _unbroadcast(out.grad * a.data, b.data.shape))

    out._backward = bw
    return out


def scale(a: Tensor, s: float) -> Tensor:
    s32 = a.data.dtype.type(s)
    out = Tensor(a.data * s32, (a,))

    def bw():
        if a.requires_grad:
            _accum(a, out.grad * s32)

    out._backward = bw
    return out


def matmul(a: Tensor, b: Tensor) -> Tensor:
    if a.data.ndim != 2 or b.data.ndim != 2:
        raise ShapeMismatch(a.name or b.name or "matmul", "2-d operands", (a.shape, b.shape))
    if a.data.shape[1] != b.data.shape[0]:
        raise ShapeMismatch(b.name or "matmul-rhs", f"({a.data.shape[1]}, *)", b.data.shape)
    out = Tensor(a.data @ b.data, (a, b))

    def bw():
        if a.requires_grad:
            _accum(a, out.grad @ b.data.T)
        if b.requires_grad:
            _accum(b, a.data.T @ out.grad)

    out._backward = bw
    return out


def affine(x: Tensor, w: Tensor, b: Tensor) -> Tensor:
    """y = x @ w + b with b broadcast over rows."""
    return add(matmul(x, w), b)


def silu(x: Tensor) -> Tensor:
    sig = 1.0 / (1.0 + np.exp(-x.data))
    out = Tensor(x.data * sig, (x,))

    def bw():
        if x.requires_grad:
            _accum(x, out.grad * (sig * (1.0 + x.data * (1.0 - sig))))

    out._backward = bw
    return out


def rmsnorm(x: Tensor, eps: float = 1e-5) -> Tensor:
    """Normalize the last axis to unit RMS (no learned scale)."""
    n = x.data.shape[-1]
    ms = np.mean(np.square(x.data), axis=-1, keepdims=True) + x.data.dtype.type(eps)
    inv = ms ** -0.5
    out = Tensor(x.data * inv, (x,))

    def bw():
        if x.requires_grad:
            dot = np.sum(x.data * out.grad, axis=-1, keepdims=True)
            _accum(x, inv * (out.grad - (inv * inv / n) * x.data * dot))

    out._backward = bw
    return out


def concat(parts: list[Tensor], axis: int = -1) -> Tensor:
    out = Tensor(np.concatenate([p.data for p in parts], axis=axis), tuple(parts))
    sizes = [p.data.shape[axis] for p in parts]
    offsets = np.cumsum([0] + sizes)

    def bw():
        for p, lo, hi in zip(parts, offsets[:-1], offsets[1:]):
            if p.requires_grad:
                idx = [slice(None)] * out.grad.ndim
                idx[axis] = slice(lo, hi)
                _accum(p, out.grad[tuple(idx)])

    out._backward = bw
    return out


def square(x: Tensor) -> Tensor:
    out = Tensor(np.square(x.data), (x,))

    def bw():
        if x.requires_grad:
            _accum(x, out.grad * (2.0 * x.data))

    out._backward = bw
    return out


def sum_last(x: Tensor) -> Tensor:
    """Sum over the last axis."""
    out = Tensor(np.sum(x.data, axis=-1), (x,))

    def bw():
        if x.requires_grad:
            _accum(x, np.broadcast_to(out.grad[..., None], x.data.shape))

    out._backward = bw
    return out


def sum_axis(x: Tensor, axis: int) -> Tensor:
    """Sum over one axis (no keepdims)."""
    out = Tensor(np.sum(x.data, axis=axis), (x,))

    def bw():
        if x.requires_grad:
            _accum(x, np.broadcast_to(np.expand_dims(out.grad, axis), x.data.shape))

    out._backward = bw
    return out


def mean_all(x: Tensor) -> Tensor:
    """Mean over all elements, returned as a scalar tensor."""
    n = x.data.size
    out = Tensor(np.mean(x.data, dtype=x.data.dtype), (x,))

    def bw():
        if x.requires_grad:
            _accum(x, np.broadcast_to(out.grad / x.data.dtype.type(n), x.data.shape))

    out._backward = bw
    return out


def reshape(x: Tensor, shape: tuple[int, ...]) -> Tensor:
    out = Tensor(x.data.reshape(shape), (x,))

    def bw():
        if x.requires_grad:
            _accum(x, out.grad.reshape(x.data.shape))

    out._backward = bw
    return out


def embedding(table: Tensor, ids: np.ndarray) -> Tensor:
    """Row lookup: table (V, D), ids int array (...) -> (..., D)."""
    ids = np.asarray(ids)
    if ids.size and (ids.min() < 0 or ids.max() >= table.data.shape[0]):
        raise ShapeMismatch(table.name or "embedding", f"ids < {table.data.shape[0]}", (int(ids.min()), int(ids.max())))
    out = Tensor(table.data[ids], (table,))

    def bw():
        if table.requires_grad:
            gt = np.zeros_like(table.data)
            np.add.at(gt, ids, out.grad)
            _accum(table, gt)

    out._backward = bw
    return out


def conv2d(x: Tensor, w: Tensor, b: Tensor) -> Tensor:
    """3x3-style 'same' convolution, stride 1.

    x: (B, H, W, Cin), w: (kh, kw, Cin, Cout), b: (Cout,). kh, kw must be odd.
    """
    bsz, h, wd, cin = x.data.shape
    kh, kw, cin_w, cout = w.data.shape
    if cin_w != cin:
        raise ShapeMismatch(w.name or "conv-kernel", f"(?, ?, {cin}, ?)", w.data.shape)
    if kh % 2 == 0 or kw % 2 == 0:
        raise ShapeMismatch(w.name or "conv-kernel", "odd kernel dims", w.data.shape)
    ph, pw = kh // 2, kw // 2
    xp = np.pad(x.data, ((0, 0), (ph, ph), (pw, pw), (0, 0)))
    y = np.zeros((bsz, h, wd, cout), dtype=x.data.dtype)
    flat = lambda a: a.reshape(-1, a.shape[-1])
    for di in range(kh):
        for dj in range(kw):
            patch = xp[:, di : di + h, dj : dj + wd, :]
            y += (flat(patch) @ w.data[di, dj]).reshape(bsz, h, wd, cout)
    y += b.data
    out = Tensor(y, (x, w, b))

    def bw():
        g = out.grad
        if b.requires_grad:
            _accum(b, g.sum(axis=(0, 1, 2)))
        gxp = np.zeros_like(xp) if x.requires_grad else None
        gw = np.zeros_like(w.data) if w.requires_grad else None
        gflat = flat(g)
        for di in range(kh):
            for dj in range(kw):
                patch = xp[:, di : di + h, dj : dj + wd, :]
                if gw is not None:
                    gw[di, dj] = flat(patch).T @ gflat
                if gxp is not None:
                    gxp[:, di : di + h, dj : dj + wd, :] += (gflat @ w.data[di, dj].T).reshape(
                        bsz, h, wd, cin
                    )
        if gw is not None:
            _accum(w, gw)
        if gxp is not None:
            _accum(x, gxp[:, ph : ph + h, pw : pw + wd, :])

    out._backward = bw
    return out


def avgpool2d(x: Tensor, k: int) -> Tensor:
    """k-by-k average pooling over (B, H, W, C); H and W must divide by k."""
    bsz, h, wd, c = x.data.shape
    if h % k or wd % k:
        raise ShapeMismatch(x.name or "avgpool", f"dims divisible by {k}", x.data.shape)
    blocks = x.data.reshape(bsz, h // k, k, wd // k, k, c)
    out = Tensor(blocks.mean(axis=(2, 4)), (x,))

    def bw():
        if x.requires_grad:
            g = out.grad[:, :, None, :, None, :] / x.data.dtype.type(k * k)
            _accum(x, np.broadcast_to(g, (bsz, h // k, k, wd // k, k, c)).reshape(x.data.shape))

    out._backward = bw
    return out


# ---------------------------------------------------------------------------
# tape walk
# ---------------------------------------------------------------------------


def _topo_order(root: Tensor) -> list[Tensor]:
    order: list[Tensor] = []
    seen: set[int] = set()
    stack: list[tuple[Tensor, bool]] = [(root, False)]
    while stack:
        node, expanded = stack.pop()
        if expanded:
            order.append(node)
            continue
        if id(node) in seen:
            continue
        seen.add(id(node))
        stack.append((node, True))
        for p in node._parents:
            if id(p) not in seen:
                stack.append((p, False))
    return order


def backward(root: Tensor, upstream) -> None:
    """Accumulate d<upstream, root>/d(leaf) into every requires_grad leaf."""
    up = _as_f32(upstream)
    if up.shape != root.data.shape:
        raise ShapeMismatch("upstream", root.data.shape, up.shape)
    root.grad = up.copy()
    for node in reversed(_topo_order(root)):
        if node._backward is not None and node.grad is not None and node.requires_grad:
            node._backward()


# ---------------------------------------------------------------------------
# parameter sets
# ---------------------------------------------------------------------------


class ParameterSet:
    """Ordered, uniquely named float32 arrays with stable iteration order."""

    def __init__(self):
        self._arrays: dict[str, np.ndarray] = {}

    def add(self, name: str, array) -> np.ndarray:
        if name in self._arrays:
            raise ValueError(f"duplicate parameter name '{name}'")
        if not name or any(ch.isspace() for ch in name):
            raise ValueError(f"invalid parameter name {name!r}")
        arr = _as_f32(array)
        self._arrays[name] = arr
        return arr

    def __getitem__(self, name: str) -> np.ndarray:
        return self._arrays[name]

    def __setitem__(self, name: str, array) -> None:
        if name not in self._arrays:
            raise KeyError(name)
        arr = _as_f32(array)
        if arr.shape != self._arrays[name].shape:
            raise ShapeMismatch(name, self._arrays[name].shape, arr.shape)
        self._arrays[name] = arr

    def __contains__(self, name: str) -> bool:
        return name in self._arrays

    def __len__(self) -> int:
        return len(self._arrays)

    def __iter__(self) -> Iterator[str]:
        return iter(self._arrays)

    def names(self) -> list[str]:
        return list(self._arrays)

    def items(self) -> Iterator[tuple[str, np.ndarray]]:
        return iter(self._arrays.items())

    def copy(self) -> "ParameterSet":
        out = ParameterSet()
        for name, arr in self.items():
            out.add(name, arr.copy())
        return out

    def num_elements(self) -> int:
        return sum(a.size for a in self._arrays.values())

    def as_tensors(self) -> dict[str, Tensor]:
        """Fresh tape leaves (requires_grad) viewing the stored arrays."""
        return {name: leaf(arr, requires_grad=True, name=name) for name, arr in self.items()}

    def merged(self, prefix: str, other: "ParameterSet") -> "ParameterSet":
        """Return self with ``other``'s entries added under ``prefix.``."""
        for name, arr in other.items():
            self.add(f"{prefix}.{name}", arr)
        return self

    def subset(self, prefix: str) -> "ParameterSet":
        """Entries under ``prefix.`` with the prefix stripped (views, not copies)."""
        out = ParameterSet()
        dot = prefix + "."
        for name, arr in self.items():
            if name.startswith(dot):
                out.add(name[len(dot):], arr)
        return out


# ---------------------------------------------------------------------------
# generic gradient evaluation + finite-difference oracle
# ---------------------------------------------------------------------------


def evaluate_with_gradients(net, params: ParameterSet, inputs, upstream):
    """Forward pass plus exact reverse-mode gradients of <upstream, output>.

    ``net.forward(param_tensors, *inputs)`` must return a single Tensor.
    Returns (output array, {name: gradient array} with zeros for unused
    parameters).
    """
    inputs = _as_input_tuple(inputs)
    ptensors = params.as_tensors()
    out = net.forward(ptensors, *inputs)
    assert_finite("output", out.data)
    backward(out, upstream)
    grads = {
        name: (t.grad if t.grad is not None else np.zeros_like(t.data))
        for name, t in ptensors.items()
    }
    return out.data, grads


def _as_input_tuple(inputs) -> tuple:
    if isinstance(inputs, (list, tuple)):
        return tuple(inputs)
    return (inputs,)


def finite_difference_grad(net, params: ParameterSet, inputs, upstream, perturbation: float = 1e-3):
    """Central-difference estimate of the objective differentiated by
    :func:`evaluate_with_gradients`, i.e. <upstream, net.forward(...)>.

    Independent of the tape: uses only plain forward passes. Intended for
    small networks; cost is two forwards per parameter element.
    """
    if not (1e-5 <= perturbation <= 1e-2):
        raise ValueError(f"perturbation must lie in [1e-5, 1e-2], got {perturbation}")
    inputs = _as_input_tuple(inputs)
    up = np.asarray(upstream, dtype=np.float64)
    params64 = {name: arr.astype(np.float64) for name, arr in params.items()}

    def objective() -> float:
        with precision(np.float64):
            tensors = {name: constant(arr, name=name) for name, arr in params64.items()}
            out = net.forward(tensors, *inputs)
        return float(np.sum(up * out.data))

    grads: dict[str, np.ndarray] = {}
    failures: list[str] = []
    for name in params:
        arr = params64[name]
        g = np.zeros(arr.shape, dtype=np.float64)
        flat = arr.reshape(-1)
        gflat = g.reshape(-1)
        for i in range(flat.size):
            orig = flat[i]
            flat[i] = orig + perturbation
            hi = objective()
            flat[i] = orig - perturbation
            lo = objective()
            flat[i] = orig
            if not (np.isfinite(hi) and np.isfinite(lo)):
                failures.append(name)
                break
            gflat[i] = (hi - lo) / (2.0 * perturbation)
        grads[name] = g.astype(DTYPE)
    if failures:
        raise NonFiniteValue(",".join(failures), "objective non-finite at perturbed point")
    return grads
