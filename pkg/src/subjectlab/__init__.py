"""subjectlab: a desk-scale lab for subject-driven personalization of toy diffusion models.

Everything runs on CPU float32 numpy. The model zoo (denoiser, text encoder,
super-resolution stage) is built on a small reverse-mode tape in
:mod:`subjectlab.autodiff`; the data domain is a procedural toy world with an
inverse-rendering oracle, so generation quality is measurable without any
pretrained weights.
"""

__version__ = "0.1.0"
