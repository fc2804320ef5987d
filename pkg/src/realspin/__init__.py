"""Exact real-algebraic construction of the spin-s algebras from U(so(3))."""

from .uea import CASIMIR, JX, JY, JZ, ONE, UeaElement, multiply, normal_form

__all__ = ["CASIMIR", "JX", "JY", "JZ", "ONE", "UeaElement", "multiply", "normal_form"]
