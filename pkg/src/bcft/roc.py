"""Region of convergence for transforms of exponentially bounded signals.

A signal bounded by ``C1*exp(-alpha*t)`` for t >= 0 and ``C2*exp(beta*t)``
for t <= 0 has a transform defined on an open region of bicomplex
frequencies.  The region has two equivalent descriptions:

* strip form: both idempotent components lie in the horizontal strip
  ``-alpha < Im(w_k) < beta`` of the complex plane;
* unit form: the coefficients satisfy ``-alpha + |a2| < a1 < beta - |a2|``
  (with a0, a3 unconstrained), whose cross-section in the (a1, a2) plane
  is an open rhombus.

Both predicates are implemented independently and are exact: strict
floating-point ``<`` with no epsilon cushion, so boundary points are
outside.  Callers that need robustness against roundoff should use
:meth:`ConvergenceRegion.margin`.

``beta = inf`` encodes regions unbounded above (signals vanishing for
t < 0, where any left-tail growth bound works).
"""

import math
from dataclasses import dataclass

import numpy as np

from bcft.bicomplex import Bicomplex


@dataclass(frozen=True)
class ConvergenceRegion:
    """Open region ``-alpha < Im(w_k) < beta`` for both components."""

    alpha: float
    beta: float

    def __post_init__(self):
        if not (math.isfinite(self.alpha) and self.alpha > 0):
            raise ValueError(f"alpha must be finite and positive, got {self.alpha}")
        if not self.beta > 0 or math.isnan(self.beta):
            raise ValueError(f"beta must be positive (inf allowed), got {self.beta}")

    def contains_units(self, w: Bicomplex) -> bool:
        """Membership via the coefficient inequalities on a1, a2."""
        a1, a2 = w.a1, abs(w.a2)
        return a2 < 0.5 * (self.alpha + self.beta) and -self.alpha + a2 < a1 < self.beta - a2

    def contains_strips(self, w: Bicomplex) -> bool:
        """Membership via the componentwise strip inequalities."""
        w1, w2 = w.pair
        return (-self.alpha < w1.imag < self.beta) and (-self.alpha < w2.imag < self.beta)

    def margin(self, w: Bicomplex) -> float:
        """Signed distance from both component imaginary parts to the strip
        edges; positive exactly on the inside."""
        w1, w2 = w.pair
        return min(
            w1.imag + self.alpha,
            w2.imag + self.alpha,
            self.beta - w1.imag,
            self.beta - w2.imag,
        )

    def cross_section_polygon(self) -> np.ndarray:
        """Vertices of the (a1, a2) rhombus, counterclockwise from the
        leftmost.  Undefined for ``beta = inf``."""
        if math.isinf(self.beta):
            raise ValueError("cross-section is unbounded for beta = inf")
        a, b = self.alpha, self.beta
        return np.array(
            [
                [-a, 0.0],
                [(b - a) / 2, -(a + b) / 2],
                [b, 0.0],
                [(b - a) / 2, (a + b) / 2],
            ]
        )

    def units_mask(self, coeffs: np.ndarray) -> np.ndarray:
        """Vectorized contains_units over an (n, 4) coefficient array."""
        a1, a2 = coeffs[:, 1], np.abs(coeffs[:, 2])
        return (
            (a2 < 0.5 * (self.alpha + self.beta))
            & (-self.alpha + a2 < a1)
            & (a1 < self.beta - a2)
        )

    def strips_mask(self, coeffs: np.ndarray) -> np.ndarray:
        """Vectorized contains_strips over an (n, 4) coefficient array."""
        im1 = coeffs[:, 1] - coeffs[:, 2]
        im2 = coeffs[:, 1] + coeffs[:, 2]
        inside1 = (-self.alpha < im1) & (im1 < self.beta)
        inside2 = (-self.alpha < im2) & (im2 < self.beta)
        return inside1 & inside2


def polygon_csv(region: ConvergenceRegion) -> str:
    """Cross-section vertices as CSV, header ``a1,a2``, closing vertex not
    repeated."""
    rows = ["a1,a2"]
    for a1, a2 in region.cross_section_polygon():
        rows.append(f"{a1:.17g},{a2:.17g}")
    return "\n".join(rows) + "\n"
