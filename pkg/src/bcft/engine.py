"""Numerical bicomplex Fourier transform.

The transform of a real signal f at a bicomplex frequency w is the pair of
complex line integrals

    F_k = integral of exp(i * w_k * t) * f(t) dt,   k = 1, 2,

over the idempotent components w_1, w_2, recombined into a bicomplex value.
Each integral is truncated to a finite interval using the signal's decay
envelope (the omitted tails stay below ``tail_tol``), then evaluated by
globally adaptive Gauss-Kronrod quadrature.  The kernel sign is exp(+i*w*t);
integrands are split exactly at the signal's declared breakpoints.

Panels are retired once their error estimate drops below their length-
proportional share of the target, where the target is ``abs_tol`` with a
relative floor of 100 ulps of the running total (integrals of magnitude
1e20 cannot meet an absolute 1e-10).
"""

import math
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from typing import Callable, Optional, Sequence

import numpy as np

from bcft._kernels import WG15, WK15, XK15, panel_integrals
from bcft.bicomplex import Bicomplex, from_idempotent
from bcft.signals import (
    DecayEstimate,
    OutsideRegionError,
    SignalSpec,
    SingularFrequencyError,
)

_EPS = float(np.finfo(np.float64).eps)
_MIN_MARGIN = 1e-12


class ConvergenceError(RuntimeError):
    """Panel budget exhausted with the error estimate above tolerance."""


@dataclass(frozen=True)
class QuadratureConfig:
    abs_tol: float = 1e-10
    tail_tol: float = 1e-12
    max_panels: int = 2**20
    oscillation_density: float = 16.0

    def __post_init__(self):
        # abs_tol 0 is allowed and means roundoff-limited: panels retire
        # only on the relative floor
        if self.abs_tol < 0:
            raise ValueError("abs_tol must be non-negative")
        for name in ("tail_tol", "oscillation_density"):
            if not getattr(self, name) > 0:
                raise ValueError(f"{name} must be positive")
        if self.max_panels < 2:
            raise ValueError("max_panels must be at least 2")


@dataclass(frozen=True)
class TransformResult:
    value: Bicomplex
    est_error: float
    panels_used: tuple[int, int]


@dataclass(frozen=True)
class GridPoint:
    """One entry of a grid evaluation; ``result`` is None unless ok."""

    w: Bicomplex
    result: Optional[TransformResult]
    status: str  # ok | outside_roc | singular | no_converge


def truncation_bounds(e: DecayEstimate, v: float, tail_tol: float) -> tuple[float, float]:
    """Interval [-T_minus, T_plus] outside which both tail integrals of
    ``exp(i*w*t)*f(t)`` with Im(w) = v are below tail_tol/2 each.

    The integrand magnitude is bounded by C1*exp(-(alpha+v)*t) on the right
    and C2*exp((beta-v)*|t|) decay on the left, so each bound solves a
    one-line inequality.  Raises when v is not strictly inside the strip.
    """
    right_rate = e.alpha + v
    left_rate = e.beta - v
    margin = min(right_rate, left_rate)
    if margin < _MIN_MARGIN:
        raise OutsideRegionError(
            f"imaginary part {v} outside strip (-{e.alpha}, {e.beta})",
            component=0,
            margin=margin,
        )
    t_plus = math.log(2 * e.C1 / (right_rate * tail_tol)) / right_rate
    t_minus = math.log(2 * e.C2 / (left_rate * tail_tol)) / left_rate
    return max(t_minus, 1.0), max(t_plus, 1.0)


def _initial_edges(
    t_lo: float,
    t_hi: float,
    w_re: float,
    density: float,
    breakpoints: Sequence[float],
) -> np.ndarray:
    """Panel edges covering [t_lo, t_hi]: every interior breakpoint is an
    edge, and the panel count resolves the oscillation of exp(i*w_re*t)."""
    interior = sorted(b for b in breakpoints if t_lo < b < t_hi)
    base = [t_lo, *interior, t_hi]
    n0 = max(4, math.ceil(density * abs(w_re) * (t_hi - t_lo) / (2 * math.pi)))
    h = (t_hi - t_lo) / n0
    edges = [t_lo]
    for a, b in zip(base[:-1], base[1:]):
        k = max(1, math.ceil((b - a) / h))
        edges.extend(a + (b - a) * np.arange(1, k + 1) / k)
    return np.asarray(edges)


def integrate_oscillatory(
    fn: Callable[[np.ndarray], np.ndarray],
    t_lo: float,
    t_hi: float,
    w: complex,
    cfg: QuadratureConfig,
    breakpoints: Sequence[float] = (),
    kernel=None,
) -> tuple[complex, float, int]:
    """Adaptive quadrature of ``fn(t) * exp(i*w*t)`` over [t_lo, t_hi].

    Returns (integral, error estimate, panels evaluated).  ``kernel`` may
    override the panel backend (used by benchmarks and agreement tests).
    """
    if kernel is None:
        kernel = panel_integrals
    edges = _initial_edges(t_lo, t_hi, w.real, cfg.oscillation_density, breakpoints)
    lo, hi = edges[:-1], edges[1:]
    if lo.size > cfg.max_panels:
        raise ConvergenceError(
            f"initial panelization needs {lo.size} panels, budget is {cfg.max_panels}"
        )
    total_len = t_hi - t_lo
    done_i = 0j
    done_e = 0.0
    evaluated = 0

    while True:
        evaluated += lo.size
        half = 0.5 * (hi - lo)
        mid = 0.5 * (hi + lo)
        t = mid[:, None] + half[:, None] * XK15[None, :]
        fs = np.asarray(fn(t.ravel()), dtype=np.complex128).reshape(t.shape)
        panel_i, panel_e = kernel(t, fs, half, w.real, w.imag, WK15, WG15)

        batch_i = panel_i.sum()
        tol = max(cfg.abs_tol, 100 * _EPS * abs(done_i + batch_i))
        keep = panel_e <= tol * (2 * half) / total_len
        if keep.all():
            return done_i + batch_i, done_e + panel_e.sum(), evaluated
        if evaluated >= cfg.max_panels:
            total_e = done_e + panel_e.sum()
            if total_e > tol:
                raise ConvergenceError(
                    f"{evaluated} panels evaluated, estimate {total_e:.3e} > {tol:.3e}"
                )
            return done_i + batch_i, total_e, evaluated

        done_i += panel_i[keep].sum()
        done_e += panel_e[keep].sum()
        active = ~keep
        mid_a = mid[active]
        lo = np.concatenate([lo[active], mid_a])
        hi = np.concatenate([mid_a, hi[active]])


def transform_component(
    s: SignalSpec,
    wk: complex,
    cfg: Optional[QuadratureConfig] = None,
    kernel=None,
) -> tuple[complex, float, int]:
    """One idempotent component of the transform.

    Returns (value, error estimate, panels).  The error estimate is the
    quadrature estimate plus the truncation allowance.
    """
    cfg = cfg or QuadratureConfig()
    if s.singular_set is not None and s.singular_set(wk):
        raise SingularFrequencyError(f"frequency {wk} is a pole of {s.name!r}")
    if not s.in_region(wk):
        raise OutsideRegionError(
            f"Im({wk}) outside the strip of {s.name!r}",
            component=0,
            margin=s.component_margin(wk),
        )
    if s.support is not None:
        t_lo, t_hi = s.support
    else:
        t_minus, t_plus = truncation_bounds(s.envelope_at(wk.imag), wk.imag, cfg.tail_tol)
        t_lo, t_hi = -t_minus, t_plus
    value, err, panels = integrate_oscillatory(
        s.fn, t_lo, t_hi, wk, cfg, s.breakpoints, kernel
    )
    return value, err + cfg.tail_tol, panels


def transform(
    s: SignalSpec,
    w: Bicomplex,
    cfg: Optional[QuadratureConfig] = None,
    kernel=None,
) -> TransformResult:
    """Bicomplex transform at frequency w.

    Both components are checked against the region and the singular set
    before any quadrature runs; equal projections are integrated once.
    """
    cfg = cfg or QuadratureConfig()
    w1, w2 = w.pair
    for k, wk in ((1, w1), (2, w2)):
        if s.singular_set is not None and s.singular_set(wk):
            raise SingularFrequencyError(
                f"component {k} frequency {wk} is a pole of {s.name!r}"
            )
        if not s.in_region(wk):
            raise OutsideRegionError(
                f"component {k} frequency {wk} outside the strip of {s.name!r}",
                component=k,
                margin=s.component_margin(wk),
            )
    if w1 == w2:
        value, err, panels = transform_component(s, w1, cfg, kernel)
        return TransformResult(from_idempotent((value, value)), err, (panels, panels))
    v1, e1, p1 = transform_component(s, w1, cfg, kernel)
    v2, e2, p2 = transform_component(s, w2, cfg, kernel)
    return TransformResult(from_idempotent((v1, v2)), max(e1, e2), (p1, p2))


def _evaluate_point(s, w, cfg, kernel) -> GridPoint:
    try:
        return GridPoint(w, transform(s, w, cfg, kernel), "ok")
    except OutsideRegionError:
        return GridPoint(w, None, "outside_roc")
    except SingularFrequencyError:
        return GridPoint(w, None, "singular")
    except ConvergenceError:
        return GridPoint(w, None, "no_converge")


def transform_grid(
    s: SignalSpec,
    grid: Sequence[Bicomplex],
    cfg: Optional[QuadratureConfig] = None,
    jobs: Optional[int] = None,
    kernel=None,
) -> list[GridPoint]:
    """Evaluate the transform over a frequency grid.

    Per-point failures become status records instead of exceptions; output
    order always equals input order, also with ``jobs`` worker threads.
    """
    cfg = cfg or QuadratureConfig()
    if jobs and jobs > 1 and len(grid) > 1:
        with ThreadPoolExecutor(max_workers=jobs) as pool:
            return list(pool.map(lambda w: _evaluate_point(s, w, cfg, kernel), grid))
    return [_evaluate_point(s, w, cfg, kernel) for w in grid]


GRID_CSV_COLUMNS = (
    "a0,a1,a2,a3,re_w1,im_w1,re_w2,im_w2,"
    "fhat_a0,fhat_a1,fhat_a2,fhat_a3,est_error,status"
)


def grid_csv(points: Sequence[GridPoint]) -> str:
    """Grid results as CSV; failed points carry nan value columns."""
    lines = [GRID_CSV_COLUMNS]
    for p in points:
        w1, w2 = p.w.pair
        fields = list(p.w.units) + [w1.real, w1.imag, w2.real, w2.imag]
        if p.result is not None:
            fields += list(p.result.value.units) + [p.result.est_error]
        else:
            fields += [math.nan] * 5
        lines.append(",".join(f"{x:.17g}" for x in fields) + f",{p.status}")
    return "\n".join(lines) + "\n"
