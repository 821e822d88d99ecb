"""parageo: exact tensor calculus and audit tooling for frame-presented
pseudo-Riemannian manifolds, specialised to paracontact metric geometry.

Everything runs over an exact rational-function field; a verdict is
always a certificate (an identity reduced to zero) or a witness (a slot
with a nonzero residual), never a numeric fit.
"""

__version__ = "0.1.0"

from .expr import (Expr, ExprDomainError, ExprError, ExprSyntaxError,
                   parse_expr)
from .geometry import (Chart, Connection, Frame, FrameTensor, GeometryError,
                       MetricOnFrame, VectorField, koszul_connection, ricci,
                       ricci_naive_trace, riemann, scalar_curvature)
from .manifest import Manifest, ManifestError, load_manifest
from .paracontact import ParacontactStructure

__all__ = [
    "Expr", "ExprError", "ExprSyntaxError", "ExprDomainError", "parse_expr",
    "Chart", "VectorField", "Frame", "MetricOnFrame", "Connection",
    "FrameTensor", "GeometryError", "koszul_connection", "riemann", "ricci",
    "ricci_naive_trace", "scalar_curvature",
    "Manifest", "ManifestError", "load_manifest", "ParacontactStructure",
    "__version__",
]
