"""Procedural toy world: parameterized subjects rendered into fixed contexts.

Subjects are radial shapes from three families (blob / box / star, prompted by
the class nouns "dog" / "clock" / "star") with a 5-point radial profile, a hue
and a ring texture. Contexts are four named background palettes. Every image
is a deterministic function of (SubjectParams, ContextParams, image size), and
:func:`invert_render` recovers the parameters of a rendered image by searching
with the same renderer, which makes generation quality measurable.

Geometry lives in normalized coordinates: the image spans [-1, 1]^2, pixel
centers at ((j + 0.5) / W * 2 - 1, (i + 0.5) / H * 2 - 1). Texture rings
complete ``tex_freq`` cycles across the maximal subject diameter (0.9 units),
so at the base resolution the highest frequencies are at/above Nyquist and
only the 2x render resolves them cleanly.
"""

from __future__ import annotations

from dataclasses import dataclass, replace

import numpy as np

from .seeding import child_rng

__all__ = [
    "FAMILIES",
    "CLASS_NOUNS",
    "CONTEXTS",
    "CONTEXT_PHRASES",
    "RADII_RANGE",
    "TEX_FREQ_RANGE",
    "TEX_AMP",
    "REJECTION_RESIDUAL",
    "SubjectParams",
    "ContextParams",
    "ToyDataset",
    "sample_subject",
    "sample_context",
    "render",
    "render_batch",
    "background_field",
    "make_caption",
    "parse_caption",
    "invert_render",
    "area_downsample",
    "generate_dataset",
    "generate_sr_pairs",
]

FAMILIES = ("blob", "box", "star")
CLASS_NOUNS = ("dog", "clock", "star")  # prompt noun for each family, by class id
CONTEXTS = ("snow", "jungle", "beach", "night")
CONTEXT_PHRASES = {
    "snow": "on snow",
    "jungle": "in the jungle",
    "beach": "on the beach",
    "night": "at night",
}

RADII_RANGE = (0.2, 0.45)
TEX_FREQ_RANGE = (2, 6)
TEX_AMP = 0.35
CENTER_RANGE = 0.5  # subject center stays in the central 50% of the frame
EDGE_PX = 1.2  # anti-aliasing feather width in pixels
TEX_DIAMETER = 0.9  # texture rings complete tex_freq cycles across this span
REJECTION_RESIDUAL = 0.05  # inversion residual above which an image is "unfit"

_SUBJECT_SAT = 0.85
_SUBJECT_VAL = 0.80

# background palettes, RGB in [0, 1]: (top color, bottom color)
_PALETTES = {
    "snow": ((0.78, 0.84, 0.95), (0.97, 0.97, 1.00)),
    "jungle": ((0.05, 0.45, 0.10), (0.02, 0.28, 0.08)),
    "beach": ((0.45, 0.72, 0.95), (0.89, 0.77, 0.45)),
    "night": ((0.05, 0.05, 0.15), (0.10, 0.10, 0.22)),
}


class ToyWorldError(Exception):
    pass


@dataclass(frozen=True)
class SubjectParams:
    """Ground-truth generative parameters of one subject."""

    class_id: int
    radii: tuple[float, float, float, float, float]
    hue: float
    tex_freq: int
    tex_phase: float

    def __post_init__(self):
        if not 0 <= self.class_id < len(FAMILIES):
            raise ToyWorldError(f"unknown class id {self.class_id}")
        if len(self.radii) != 5 or any(
            not (RADII_RANGE[0] - 1e-6 <= r <= RADII_RANGE[1] + 1e-6) for r in self.radii
        ):
            raise ToyWorldError(f"radii must be 5 values in {RADII_RANGE}, got {self.radii}")
        if not 0.0 <= self.hue < 1.0:
            raise ToyWorldError(f"hue must lie in [0, 1), got {self.hue}")
        if not TEX_FREQ_RANGE[0] <= self.tex_freq <= TEX_FREQ_RANGE[1]:
            raise ToyWorldError(f"tex_freq must lie in {TEX_FREQ_RANGE}, got {self.tex_freq}")
        if not 0.0 <= self.tex_phase < 2.0 * np.pi + 1e-6:
            raise ToyWorldError(f"tex_phase must lie in [0, 2pi), got {self.tex_phase}")

    @property
    def class_noun(self) -> str:
        return CLASS_NOUNS[self.class_id]

    def to_text(self) -> str:
        radii = ",".join(f"{r:.4f}" for r in self.radii)
        return (
            f"class={FAMILIES[self.class_id]} radii={radii} hue={self.hue:.4f} "
            f"texfreq={self.tex_freq} texphase={self.tex_phase:.4f}"
        )


@dataclass(frozen=True)
class ContextParams:
    """Background context and subject placement."""

    context_id: int
    cx: float
    cy: float

    def __post_init__(self):
        if not 0 <= self.context_id < len(CONTEXTS):
            raise ToyWorldError(f"unknown context id {self.context_id}")
        if abs(self.cx) > CENTER_RANGE + 1e-6 or abs(self.cy) > CENTER_RANGE + 1e-6:
            raise ToyWorldError(f"subject center must stay within +-{CENTER_RANGE}")

    @property
    def context_name(self) -> str:
        return CONTEXTS[self.context_id]

    def to_text(self) -> str:
        return f"context={CONTEXTS[self.context_id]} cx={self.cx:.4f} cy={self.cy:.4f}"


def class_of_noun(noun: str) -> int:
    try:
        return CLASS_NOUNS.index(noun)
    except ValueError:
        raise ToyWorldError(f"unknown class noun '{noun}' (lexicon: {CLASS_NOUNS})") from None


def sample_subject(rng: np.random.Generator, class_id: int) -> SubjectParams:
    """Uniform draw of subject parameters for a given class."""
    if not 0 <= class_id < len(FAMILIES):
        raise ToyWorldError(f"unknown class id {class_id}")
    radii = tuple(float(r) for r in rng.uniform(RADII_RANGE[0], RADII_RANGE[1], size=5))
    hue = float(rng.uniform(0.0, 1.0))
    tex_freq = int(rng.integers(TEX_FREQ_RANGE[0], TEX_FREQ_RANGE[1] + 1))
    tex_phase = float(rng.uniform(0.0, 2.0 * np.pi))
    return SubjectParams(class_id, radii, hue, tex_freq, tex_phase)


def sample_context(rng: np.random.Generator) -> ContextParams:
    ctx = int(rng.integers(0, len(CONTEXTS)))
    cx, cy = rng.uniform(-CENTER_RANGE, CENTER_RANGE, size=2)
    return ContextParams(ctx, float(cx), float(cy))


# ---------------------------------------------------------------------------
# rendering
# ---------------------------------------------------------------------------


def _hsv_to_rgb(h: np.ndarray, s: float, v: float) -> np.ndarray:
    """Vectorized HSV->RGB for arrays of hues; returns (..., 3) in [0, 1]."""
    h6 = (np.asarray(h) % 1.0) * 6.0
    i = np.floor(h6).astype(int) % 6
    f = h6 - np.floor(h6)
    p = v * (1.0 - s)
    q = v * (1.0 - s * f)
    t = v * (1.0 - s * (1.0 - f))
    ones = np.ones_like(f) * v
    table = np.stack(
        [
            np.stack([ones, t, np.full_like(f, p)], axis=-1),
            np.stack([q, ones, np.full_like(f, p)], axis=-1),
            np.stack([np.full_like(f, p), ones, t], axis=-1),
            np.stack([np.full_like(f, p), q, ones], axis=-1),
            np.stack([t, np.full_like(f, p), ones], axis=-1),
            np.stack([ones, np.full_like(f, p), q], axis=-1),
        ],
        axis=0,
    )
    return np.take_along_axis(table, i[None, ..., None], axis=0)[0]


def _rgb_to_hue(rgb: np.ndarray) -> float:
    r, g, b = float(rgb[0]), float(rgb[1]), float(rgb[2])
    mx, mn = max(r, g, b), min(r, g, b)
    if mx - mn < 1e-9:
        return 0.0
    d = mx - mn
    if mx == r:
        h = ((g - b) / d) % 6.0
    elif mx == g:
        h = (b - r) / d + 2.0
    else:
        h = (r - g) / d + 4.0
    return float(h / 6.0 % 1.0)


_bg_cache: dict[tuple[int, int, int], np.ndarray] = {}


def background_field(context_id: int, size: tuple[int, int]) -> np.ndarray:
    """Deterministic background color field for a context, (H, W, 3) in [-1, 1]."""
    key = (context_id, size[0], size[1])
    if key in _bg_cache:
        return _bg_cache[key]
    h, w = size
    name = CONTEXTS[context_id]
    top, bot = (np.asarray(c, dtype=np.float64) for c in _PALETTES[name])
    y = ((np.arange(h) + 0.5) / h * 2.0 - 1.0)[:, None, None]
    if name == "beach":  # sky over sand with a soft horizon
        blend = np.clip((y - 0.05) / 0.3 + 0.5, 0.0, 1.0)
    else:
        blend = (y + 1.0) / 2.0
    field01 = top + (bot - top) * blend
    field = np.broadcast_to(field01 * 2.0 - 1.0, (h, w, 3)).astype(np.float32).copy()
    _bg_cache[key] = field
    return field


_bg_stack_cache: dict[tuple[int, int], np.ndarray] = {}


def _background_stack(size: tuple[int, int]) -> np.ndarray:
    key = (size[0], size[1])
    if key not in _bg_stack_cache:
        _bg_stack_cache[key] = np.stack(
            [background_field(cid, size) for cid in range(len(CONTEXTS))]
        )
    return _bg_stack_cache[key]


_PENT_ANGLES = 2.0 * np.pi * np.arange(5) / 5.0


def _profile_coeffs(radii: np.ndarray) -> tuple[np.ndarray, ...]:
    """Trigonometric interpolation through 5 control radii (harmonics 0..2)."""
    r = np.asarray(radii, dtype=np.float64)
    a0 = r.mean(axis=-1)
    a1 = (2.0 / 5.0) * (r * np.cos(_PENT_ANGLES)).sum(axis=-1)
    b1 = (2.0 / 5.0) * (r * np.sin(_PENT_ANGLES)).sum(axis=-1)
    a2 = (2.0 / 5.0) * (r * np.cos(2.0 * _PENT_ANGLES)).sum(axis=-1)
    b2 = (2.0 / 5.0) * (r * np.sin(2.0 * _PENT_ANGLES)).sum(axis=-1)
    return a0, a1, b1, a2, b2


def cover_batch(
    class_ids: np.ndarray,
    radii: np.ndarray,
    centers: np.ndarray,
    size: tuple[int, int],
) -> tuple[np.ndarray, np.ndarray]:
    """Anti-aliased subject coverage fields (N, H, W) plus center distances."""
    n = len(class_ids)
    h, w = size
    xs = (np.arange(w) + 0.5) / w * 2.0 - 1.0
    ys = (np.arange(h) + 0.5) / h * 2.0 - 1.0
    gx = np.broadcast_to(xs[None, None, :], (n, h, w))
    gy = np.broadcast_to(ys[None, :, None], (n, h, w))
    cx = np.asarray(centers)[:, 0][:, None, None]
    cy = np.asarray(centers)[:, 1][:, None, None]
    dx = gx - cx
    dy = gy - cy
    r = np.sqrt(dx * dx + dy * dy)
    theta = np.arctan2(dy, dx)

    a0, a1, b1, a2, b2 = _profile_coeffs(radii)
    prof = (
        a0[:, None, None]
        + a1[:, None, None] * np.cos(theta)
        + b1[:, None, None] * np.sin(theta)
        + a2[:, None, None] * np.cos(2.0 * theta)
        + b2[:, None, None] * np.sin(2.0 * theta)
    )
    # class shaping is strictly monotone in the profile, so radii stay identifiable
    cls = np.asarray(class_ids)[:, None, None]
    boxiness = 1.0 / np.maximum(np.abs(np.cos(theta)), np.abs(np.sin(theta)))
    shape_r = np.where(
        cls == 1,
        prof * boxiness * 0.78,
        np.where(cls == 2, prof * (0.78 + 0.30 * np.cos(5.0 * theta)), prof),
    )
    edge = EDGE_PX * 2.0 / h
    cover = np.clip(0.5 - (r - shape_r) / edge, 0.0, 1.0)
    return cover, r


def render_batch(
    class_ids: np.ndarray,
    radii: np.ndarray,
    hues: np.ndarray,
    tex_freqs: np.ndarray,
    tex_phases: np.ndarray,
    context_ids: np.ndarray,
    centers: np.ndarray,
    size: tuple[int, int],
    tex_amp: float = TEX_AMP,
) -> np.ndarray:
    """Vectorized renderer: parameter arrays of length N -> (N, H, W, 3)."""
    n = len(class_ids)
    cover, r = cover_batch(class_ids, radii, centers, size)

    rings = 1.0 + tex_amp * np.sin(
        2.0 * np.pi * np.asarray(tex_freqs)[:, None, None] * r / TEX_DIAMETER
        + np.asarray(tex_phases)[:, None, None]
    )
    base = _hsv_to_rgb(np.asarray(hues), _SUBJECT_SAT, _SUBJECT_VAL)  # (N, 3)
    subj01 = np.clip(base[:, None, None, :] * rings[..., None], 0.0, 1.0)
    subj = subj01 * 2.0 - 1.0

    bg_sel = _background_stack(size)[np.asarray(context_ids)]
    out = cover[..., None] * subj + (1.0 - cover[..., None]) * bg_sel
    return out.astype(np.float32)


def render(subject: SubjectParams, context: ContextParams, size: tuple[int, int] = (16, 16)) -> np.ndarray:
    """Deterministic rasterization of one subject in one context."""
    return render_batch(
        np.array([subject.class_id]),
        np.array([subject.radii]),
        np.array([subject.hue]),
        np.array([subject.tex_freq]),
        np.array([subject.tex_phase]),
        np.array([context.context_id]),
        np.array([[context.cx, context.cy]]),
        size,
    )[0]


def area_downsample(images: np.ndarray, factor: int) -> np.ndarray:
    """Box-filter downsampling by an integer factor over (..., H, W, C)."""
    *lead, h, w, c = images.shape
    if h % factor or w % factor:
        raise ToyWorldError(f"image dims {h}x{w} not divisible by {factor}")
    shaped = images.reshape(*lead, h // factor, factor, w // factor, factor, c)
    return shaped.mean(axis=(-4, -2)).astype(np.float32)


# ---------------------------------------------------------------------------
# captions
# ---------------------------------------------------------------------------


def make_caption(class_noun: str, identifier: str | None = None, context: str | None = None) -> str:
    """Grammar: "a [identifier?] [class noun] [context phrase?]"."""
    if class_noun not in CLASS_NOUNS:
        raise ToyWorldError(f"unknown class noun '{class_noun}' (lexicon: {CLASS_NOUNS})")
    parts = ["a"]
    if identifier is not None:
        if not identifier or any(ch.isspace() for ch in identifier):
            raise ToyWorldError(f"invalid identifier {identifier!r}")
        parts.append(identifier)
    parts.append(class_noun)
    if context is not None:
        if context not in CONTEXT_PHRASES:
            raise ToyWorldError(f"unknown context phrase '{context}' (contexts: {CONTEXTS})")
        parts.append(CONTEXT_PHRASES[context])
    return " ".join(parts)


def parse_caption(text: str) -> tuple[str | None, str, str | None]:
    """Parse back to (identifier?, class noun, context?); grammar is unambiguous."""
    words = text.split()
    if len(words) < 2 or words[0] != "a":
        raise ToyWorldError(f"caption must start with 'a <...>': {text!r}")
    if words[1] in CLASS_NOUNS:
        identifier, noun, rest = None, words[1], words[2:]
    else:
        if len(words) < 3 or words[2] not in CLASS_NOUNS:
            raise ToyWorldError(f"caption has no class noun: {text!r}")
        identifier, noun, rest = words[1], words[2], words[3:]
    if not rest:
        return identifier, noun, None
    phrase = " ".join(rest)
    for ctx, p in CONTEXT_PHRASES.items():
        if phrase == p:
            return identifier, noun, ctx
    raise ToyWorldError(f"unknown context phrase {phrase!r} in caption {text!r}")


def caption_without_identifier(class_noun: str) -> str:
    return make_caption(class_noun)


# ---------------------------------------------------------------------------
# inverse rendering oracle
# ---------------------------------------------------------------------------


def _mse(a: np.ndarray, b: np.ndarray) -> float:
    return float(np.mean((a.astype(np.float64) - b.astype(np.float64)) ** 2))


def _candidate_mse(images: np.ndarray, target: np.ndarray) -> np.ndarray:
    diff = images.astype(np.float64) - target.astype(np.float64)[None]
    return np.mean(diff * diff, axis=(1, 2, 3))


def _render_param_rows(cls: int, ctx: int, rows: np.ndarray, freqs: np.ndarray, size) -> np.ndarray:
    """Render rows of [cx, cy, r0..r4, hue, phase] for a fixed class/context."""
    n = rows.shape[0]
    return render_batch(
        np.full(n, cls),
        np.clip(rows[:, 2:7], *RADII_RANGE),
        rows[:, 7] % 1.0,
        freqs,
        rows[:, 8] % (2.0 * np.pi),
        np.full(n, ctx),
        np.clip(rows[:, 0:2], -CENTER_RANGE, CENTER_RANGE),
        size,
    )


def invert_render(image: np.ndarray) -> tuple[SubjectParams, ContextParams, float]:
    """Recover generative parameters by searching with the forward renderer.

    Stages: context from the always-background corners; subject position from
    the mask centroid; per-class geometry by damped Gauss-Newton in coverage
    space against the subject mask (texture-free, so the landscape is clean);
    ring frequency/phase candidates from a regression of interior intensities
    over their continuously distributed center distances; then a bounded
    trust-region least-squares polish of all continuous parameters per
    (class, frequency) candidate. Render-like images that still fit poorly
    get a multistart fallback over frequency and phase.

    Always returns the best fit found; bad inputs show up as a large residual
    (mean squared error of the best re-render) rather than an error.
    """
    from scipy.optimize import least_squares

    image = np.asarray(image, dtype=np.float32)
    h, w, _ = image.shape
    size = (h, w)

    # context: corners are guaranteed background by construction
    corner_idx = ([0, 0, h - 1, h - 1], [0, w - 1, 0, w - 1])
    ctx_err = []
    for cid in range(len(CONTEXTS)):
        bgf = background_field(cid, size)
        ctx_err.append(float(np.sum((image[corner_idx] - bgf[corner_idx]) ** 2)))
    ctx = int(np.argmin(ctx_err))
    bg = background_field(ctx, size)

    # subject position seed: centroid of the background-deviation mask
    diff = np.max(np.abs(image - bg), axis=-1)
    xs = (np.arange(w) + 0.5) / w * 2.0 - 1.0
    ys = (np.arange(h) + 0.5) / h * 2.0 - 1.0
    gx, gy = np.meshgrid(xs, ys)
    mask01 = (diff > 0.12).astype(np.float64)
    total = float(mask01.sum()) + 1e-12
    cx0 = float(np.clip((mask01 * gx).sum() / total, -CENTER_RANGE, CENTER_RANGE))
    cy0 = float(np.clip((mask01 * gy).sum() / total, -CENTER_RANGE, CENTER_RANGE))

    # hue from the mean subject color where the deviation is strong
    strong = diff > 0.25
    hue0 = _rgb_to_hue((image[strong].mean(axis=0) + 1.0) / 2.0) if strong.sum() >= 4 else 0.0

    # geometry per class: Gauss-Newton in coverage space against the mask;
    # no texture or color enters, and the fitted center lands within the
    # basin of the full refinement
    mask_tgt = mask01.ravel()

    def _fit_geometry(cls_i: int, seed: np.ndarray, iters: int = 30) -> tuple[np.ndarray, float]:
        geo = seed.copy()  # [cx, cy, r0..r4]
        gsteps = np.full(7, 2e-3)

        def cov_rows(rows):
            return cover_batch(
                np.full(len(rows), cls_i),
                np.clip(rows[:, 2:7], *RADII_RANGE),
                np.clip(rows[:, 0:2], -CENTER_RANGE, CENTER_RANGE),
                size,
            )[0].reshape(len(rows), -1)

        err = float(np.mean((cov_rows(geo[None, :])[0] - mask_tgt) ** 2))
        lam = 1e-3
        for _ in range(iters):
            rows = np.repeat(geo[None, :], 8, axis=0)
            for pi in range(7):
                rows[1 + pi, pi] += gsteps[pi]
            covs = cov_rows(rows)
            resid = covs[0] - mask_tgt
            jac = (covs[1:] - covs[0][None, :]) / gsteps[:, None]
            jtj = jac @ jac.T
            jtr = jac @ resid
            diag = np.diag(np.maximum(np.diag(jtj), 1e-10))
            try:
                delta = np.linalg.solve(jtj + lam * diag, -jtr)
            except np.linalg.LinAlgError:
                break
            cands = np.stack([geo + s * delta for s in (1.0, 0.5, 0.25)])
            cands[:, 0:2] = np.clip(cands[:, 0:2], -CENTER_RANGE, CENTER_RANGE)
            cands[:, 2:7] = np.clip(cands[:, 2:7], *RADII_RANGE)
            errs = np.mean((cov_rows(cands) - mask_tgt[None, :]) ** 2, axis=1)
            b = int(np.argmin(errs))
            if errs[b] < err - 1e-16:
                geo, err = cands[b], float(errs[b])
                lam = max(lam * 0.4, 1e-7)
            else:
                lam = min(lam * 5.0, 1e6)
                if lam >= 1e6:
                    break
        return geo, err

    geo_by_cls: dict[int, tuple[np.ndarray, float]] = {}
    for cls_i in range(len(FAMILIES)):
        fits = [
            _fit_geometry(cls_i, np.array([cx0, cy0, rm, rm, rm, rm, rm])) for rm in (0.26, 0.36)
        ]
        geo_by_cls[cls_i] = min(fits, key=lambda t: t[1])
    cls_order = sorted(range(len(FAMILIES)), key=lambda ci: geo_by_cls[ci][1])
    maskfit_err = geo_by_cls[cls_order[0]][1]

    # ring texture candidates: interior pixels sample the ring pattern at
    # continuously distributed radii, so a least-squares fit against the
    # sin/cos basis resolves frequencies past the pixel-grid Nyquist limit
    mp = np.pad(diff > max(0.5 * float(np.percentile(diff, 95)), 0.2), 1)
    interior = np.ones((h, w), dtype=bool)
    for di in (0, 1, 2):
        for dj in (0, 1, 2):
            interior &= mp[di : di + h, dj : dj + w]
    if interior.sum() < 12:
        interior = diff > 0.25
    base01 = _hsv_to_rgb(np.array([hue0]), _SUBJECT_SAT, _SUBJECT_VAL)[0]

    def _texture_candidates(cxa: float, cya: float) -> list[tuple[int, float]]:
        cands: list[tuple[float, int, float]] = []
        if interior.sum() >= 12:
            obs01 = (image[interior] + 1.0) / 2.0
            mhat = (obs01 @ base01) / float(base01 @ base01)
            for dx in (-0.02, 0.0, 0.02):
                for dy in (-0.02, 0.0, 0.02):
                    rr = np.sqrt((gx - cxa - dx) ** 2 + (gy - cya - dy) ** 2)[interior]
                    for f in range(TEX_FREQ_RANGE[0], TEX_FREQ_RANGE[1] + 1):
                        arg = 2.0 * np.pi * f * rr / TEX_DIAMETER
                        design = np.stack([np.sin(arg), np.cos(arg), np.ones_like(rr)], axis=1)
                        coef, *_ = np.linalg.lstsq(design, mhat, rcond=None)
                        sse = float(np.sum((mhat - design @ coef) ** 2))
                        phase = float(np.arctan2(coef[1], coef[0]) % (2.0 * np.pi))
                        cands.append((sse, f, phase))
        cands.sort(key=lambda t: t[0])
        out: list[tuple[int, float]] = []
        for _, f, phase in cands:
            if all(f != fs for fs, _ in out):
                out.append((f, phase))
            if len(out) == 2:
                break
        return out

    # bounded trust-region polish of [cx, cy, r0..r4, hue, phase]
    fd_steps = np.array([2e-3, 2e-3, 2e-3, 2e-3, 2e-3, 2e-3, 2e-3, 1e-3, 1e-2])
    lower = np.array([-CENTER_RANGE, -CENTER_RANGE] + [RADII_RANGE[0]] * 5 + [-0.5, -2.0 * np.pi])
    upper = np.array([CENTER_RANGE, CENTER_RANGE] + [RADII_RANGE[1]] * 5 + [1.5, 4.0 * np.pi])
    tgt64 = image.astype(np.float64).ravel()

    def _polish(cls_i: int, x0: np.ndarray, freq: int, max_nfev: int = 60) -> tuple[np.ndarray, float]:
        def res_fn(x):
            im = _render_param_rows(cls_i, ctx, x[None, :], np.array([freq]), size)
            return im.astype(np.float64).ravel() - tgt64

        def jac_fn(x):
            rows = np.repeat(x[None, :], 10, axis=0)
            for i in range(9):
                rows[1 + i, i] += fd_steps[i]
            ims = _render_param_rows(cls_i, ctx, rows, np.full(10, freq), size)
            ims = ims.astype(np.float64).reshape(10, -1)
            return ((ims[1:] - ims[0]) / fd_steps[:, None]).T

        fit = least_squares(
            res_fn,
            np.clip(x0, lower, upper),
            jac=jac_fn,
            bounds=(lower, upper),
            max_nfev=max_nfev,
            xtol=1e-14,
            ftol=1e-14,
            gtol=1e-14,
        )
        return fit.x, float(np.mean(fit.fun**2))

    best: tuple[float, int, int, np.ndarray] | None = None
    for cls_i in cls_order:
        geo = geo_by_cls[cls_i][0]
        cands = _texture_candidates(float(geo[0]), float(geo[1]))
        # rendered (freq, phase) grid at the fitted geometry adds one seed
        fp = [
            (f, p)
            for f in range(TEX_FREQ_RANGE[0], TEX_FREQ_RANGE[1] + 1)
            for p in np.linspace(0.0, 2.0 * np.pi, 16, endpoint=False)
        ]
        rows_fp = np.array([[*geo, hue0, p] for _, p in fp])
        errs_fp = _candidate_mse(
            _render_param_rows(cls_i, ctx, rows_fp, np.array([f for f, _ in fp]), size), image
        )
        fb = int(np.argmin(errs_fp))
        if all(fp[fb][0] != f for f, _ in cands):
            cands.append((fp[fb][0], fp[fb][1]))
        for f, phase in cands:
            p_fit, e_fit = _polish(cls_i, np.array([*geo, hue0, phase]), int(f))
            if best is None or e_fit < best[0]:
                best = (e_fit, cls_i, int(f), p_fit)
        if best[0] < 1e-8:
            break

    # fallbacks run only for render-like images (clean mask fit) that still
    # fit poorly; texture aliasing at coarse resolutions creates competing
    # (frequency, phase) basins that need explicit sweeps

    if best[0] > 1e-4 and maskfit_err < 0.02:
        # stage 1: the fitted geometry is usually right even when the ring
        # frequency locked onto an alias, so resweep (freq, phase) from it
        base_params = best[3]
        for f in range(TEX_FREQ_RANGE[0], TEX_FREQ_RANGE[1] + 1):
            for phase in np.linspace(0.0, 2.0 * np.pi, 8, endpoint=False):
                seed = base_params.copy()
                seed[8] = phase
                p_fit, e_fit = _polish(best[1], seed, int(f), max_nfev=70)
                if e_fit < best[0]:
                    best = (e_fit, best[1], int(f), p_fit)
                if best[0] < 1e-8:
                    break
            if best[0] < 1e-8:
                break

    if best[0] > 1e-4 and maskfit_err < 0.02:
        # stage 2: budgeted multistart over class, size, frequency and phase
        since_gain = 0
        done = False
        for cls_i in cls_order:
            seeds = [geo_by_cls[cls_i][0]] + [
                np.array([cx0, cy0, rm, rm, rm, rm, rm]) for rm in (0.27, 0.36)
            ]
            for geo_seed in seeds:
                for f in range(TEX_FREQ_RANGE[0], TEX_FREQ_RANGE[1] + 1):
                    for phase in np.linspace(0.0, 2.0 * np.pi, 8, endpoint=False):
                        p_fit, e_fit = _polish(cls_i, np.array([*geo_seed, hue0, phase]), int(f), max_nfev=50)
                        if e_fit < best[0] * 0.9:
                            since_gain = 0
                        else:
                            since_gain += 1
                        if e_fit < best[0]:
                            best = (e_fit, cls_i, int(f), p_fit)
                        if best[0] < 1e-8 or since_gain > 40:
                            done = True
                            break
                    if done:
                        break
                if done:
                    break
            if done:
                break

    err, cls, freq, params = best
    subject = SubjectParams(
        class_id=cls,
        radii=tuple(float(r) for r in np.clip(params[2:7], *RADII_RANGE)),
        hue=float(params[7] % 1.0),
        tex_freq=freq,
        tex_phase=float(params[8] % (2.0 * np.pi)),
    )
    context = ContextParams(context_id=ctx, cx=float(params[0]), cy=float(params[1]))
    return subject, context, float(err)


# ---------------------------------------------------------------------------
# datasets
# ---------------------------------------------------------------------------


@dataclass
class ToyDataset:
    """Rendered (image, caption) pairs plus their generative parameters."""

    images: np.ndarray  # (N, H, W, 3) float32 in [-1, 1]
    captions: list[str]
    subjects: list[SubjectParams]
    contexts: list[ContextParams]

    def __len__(self) -> int:
        return len(self.captions)


def _draw_params(rng: np.random.Generator, n: int):
    class_ids = rng.integers(0, len(FAMILIES), size=n)
    radii = rng.uniform(RADII_RANGE[0], RADII_RANGE[1], size=(n, 5))
    hues = rng.uniform(0.0, 1.0, size=n)
    freqs = rng.integers(TEX_FREQ_RANGE[0], TEX_FREQ_RANGE[1] + 1, size=n)
    phases = rng.uniform(0.0, 2.0 * np.pi, size=n)
    ctx_ids = rng.integers(0, len(CONTEXTS), size=n)
    centers = rng.uniform(-CENTER_RANGE, CENTER_RANGE, size=(n, 2))
    return class_ids, radii, hues, freqs, phases, ctx_ids, centers


def generate_dataset(
    n: int,
    seed: int,
    image_size: int = 16,
    vocab=None,
    context_prob: float = 0.5,
    junk_prob: float = 0.0,
    rank_range: tuple[int, int] | None = None,
) -> ToyDataset:
    """Sample n (render, caption) pairs covering all classes and contexts.

    Captions include the context phrase with probability ``context_prob`` and,
    when a vocabulary is supplied, a meaningless rare-token identifier with
    probability ``junk_prob`` (teaching the prompt shape without binding it to
    anything).
    """
    from .vocab import mine_rare_identifier, scaled_rank_range

    rng = child_rng(seed, "toy-data")
    class_ids, radii, hues, freqs, phases, ctx_ids, centers = _draw_params(rng, n)
    with_ctx = rng.uniform(size=n) < context_prob
    with_junk = rng.uniform(size=n) < junk_prob if vocab is not None else np.zeros(n, dtype=bool)

    captions = []
    for i in range(n):
        identifier = None
        if with_junk[i]:
            rr = rank_range or scaled_rank_range(len(vocab))
            k = int(child_rng(seed, "junk-k", i).integers(1, 4))
            identifier = mine_rare_identifier(vocab, k, rr, child_rng(seed, "junk", i)).surface
        context = CONTEXTS[ctx_ids[i]] if with_ctx[i] else None
        captions.append(make_caption(CLASS_NOUNS[class_ids[i]], identifier, context))

    images = render_batch(
        class_ids, radii, hues, freqs, phases, ctx_ids, centers, (image_size, image_size)
    )
    subjects = [
        SubjectParams(int(class_ids[i]), tuple(map(float, radii[i])), float(hues[i]), int(freqs[i]), float(phases[i]))
        for i in range(n)
    ]
    contexts = [
        ContextParams(int(ctx_ids[i]), float(centers[i, 0]), float(centers[i, 1])) for i in range(n)
    ]
    return ToyDataset(images=images, captions=captions, subjects=subjects, contexts=contexts)


def generate_sr_pairs(
    n: int,
    seed: int,
    high_size: int = 32,
    factor: int = 2,
    context_prob: float = 0.5,
) -> tuple[np.ndarray, np.ndarray, list[str]]:
    """(low, high, caption) triples: high-res renders box-downsampled by ``factor``."""
    rng = child_rng(seed, "sr-data")
    class_ids, radii, hues, freqs, phases, ctx_ids, centers = _draw_params(rng, n)
    with_ctx = rng.uniform(size=n) < context_prob
    captions = [
        make_caption(CLASS_NOUNS[class_ids[i]], None, CONTEXTS[ctx_ids[i]] if with_ctx[i] else None)
        for i in range(n)
    ]
    highs = render_batch(class_ids, radii, hues, freqs, phases, ctx_ids, centers, (high_size, high_size))
    lows = area_downsample(highs, factor)
    return lows, highs, captions


def render_subject_in_contexts(
    subject: SubjectParams, context_ids, centers, size: tuple[int, int]
) -> np.ndarray:
    """Render one subject at several placements; (len(context_ids), H, W, 3)."""
    n = len(context_ids)
    return render_batch(
        np.full(n, subject.class_id),
        np.tile(np.asarray(subject.radii), (n, 1)),
        np.full(n, subject.hue),
        np.full(n, subject.tex_freq),
        np.full(n, subject.tex_phase),
        np.asarray(context_ids),
        np.asarray(centers),
        size,
    )


def write_dataset_dir(ds: ToyDataset, out_dir) -> None:
    """Export a dataset: images/*.ppm plus a manifest of parameter lines."""
    from pathlib import Path

    from .imageio import write_ppm

    out = Path(out_dir)
    (out / "images").mkdir(parents=True, exist_ok=True)
    lines = []
    for i in range(len(ds)):
        rel = f"images/img_{i:05d}.ppm"
        write_ppm(out / rel, ds.images[i])
        lines.append(
            f"{ds.subjects[i].to_text()} | {ds.contexts[i].to_text()} | {ds.captions[i]} | {rel}"
        )
    (out / "manifest.txt").write_text("\n".join(lines) + "\n", encoding="utf-8")
