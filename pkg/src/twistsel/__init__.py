"""twistsel: certified Selmer divisibility bounds for quadratic twists over Q.

Core objects: exact Weierstrass curves (twistsel.curves), local reduction data
(twistsel.reduction), division polynomials and torsion (twistsel.divpoly),
binary quadratic form class groups and tame ray class ranks
(twistsel.quadforms, twistsel.rayclass), light number-field probes
(twistsel.numfield), the admissibility checker (twistsel.checker), and the
twist-parameter search (twistsel.search). The `twistsel` CLI fronts all of it.
"""

from ._kernels import BACKEND as KERNEL_BACKEND
from .curves import CurveQ, PointQ, curve_from_string, point_from_string

__version__ = "0.1.0"

__all__ = [
    "CurveQ",
    "PointQ",
    "curve_from_string",
    "point_from_string",
    "KERNEL_BACKEND",
    "__version__",
]
