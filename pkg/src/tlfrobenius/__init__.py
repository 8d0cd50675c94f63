"""Exact Temperley-Lieb calculus at a root of unity and twisted Frobenius structures."""
from .scalars import CycNum, LevelParams, make_params

__version__ = "0.1.0"
