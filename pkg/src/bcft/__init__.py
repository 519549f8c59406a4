"""Bicomplex Fourier transforms with explicit regions of convergence."""

from bcft.bicomplex import (
    Bicomplex,
    ZeroDivisorError,
    exp,
    from_idempotent,
    from_units,
    invert,
    is_zero_divisor,
    to_idempotent,
)
from bcft.engine import (
    ConvergenceError,
    QuadratureConfig,
    TransformResult,
    transform,
    transform_grid,
)
from bcft.properties import run_suite, suite_json
from bcft.roc import ConvergenceRegion
from bcft.signals import (
    DecayEstimate,
    OutsideRegionError,
    SignalSpec,
    SingularFrequencyError,
    catalog,
    closed_form_transform,
    make,
)

__version__ = "0.1.0"

__all__ = [
    "Bicomplex",
    "ConvergenceError",
    "ConvergenceRegion",
    "DecayEstimate",
    "OutsideRegionError",
    "QuadratureConfig",
    "SignalSpec",
    "SingularFrequencyError",
    "TransformResult",
    "ZeroDivisorError",
    "catalog",
    "closed_form_transform",
    "exp",
    "from_idempotent",
    "from_units",
    "invert",
    "is_zero_divisor",
    "make",
    "run_suite",
    "suite_json",
    "to_idempotent",
    "transform",
    "transform_grid",
    "__version__",
]
