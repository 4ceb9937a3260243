"""Kernelization for q-Coloring on graphs that are a matching plus k vertices."""

from .field import FieldElement, Matrix, PrimeField
from .graph import Graph
from .kernelizer import KernelInstance, KernelResult, kernelize
from .oracle import is_q_colorable
from .palette import Palette, construct_palette, construct_vandermonde, verify_palette

__all__ = [
    "FieldElement",
    "Graph",
    "KernelInstance",
    "KernelResult",
    "Matrix",
    "Palette",
    "PrimeField",
    "construct_palette",
    "construct_vandermonde",
    "is_q_colorable",
    "kernelize",
    "verify_palette",
]
