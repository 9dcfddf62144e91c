"""Kernel dispatch: use the compiled extension when present, else pure Python.

Import `count_points`, `reduced_forms`, `class_number` from here. `BACKEND`
reports which implementation was selected ("cython" or "python").
"""

try:
    from ._fastkernels import BACKEND, class_number, count_points, reduced_forms
except ImportError:  # extension not built; the pure twin has identical semantics
    from ._kernels_py import BACKEND, class_number, count_points, reduced_forms

__all__ = ["BACKEND", "count_points", "reduced_forms", "class_number"]
