"""Executable transform theorems.

Each check computes both sides of one transform identity numerically and
reports the componentwise difference: the left side is always a fresh
quadrature transform of a derived signal (shifted, scaled, combined,
convolved, ...), the right side the identity's prediction from the base
transforms.  Derived signals are ordinary SignalSpec values with
recomputed envelopes and breakpoints, so the engine never special-cases
them.

Envelope bookkeeping is the subtle part and is spelled out per wrapper;
every constant below is a proved bound, validated by sampling in the test
suite.  Products of exponentials with equal rates pick up a factor of t,
which is absorbed by giving away a tenth of the decay rate:
t*exp(-s*t) <= 1/(e*s).
"""

import math
import re
from dataclasses import dataclass, replace
from typing import Optional, Sequence

import numpy as np

from bcft.bicomplex import I1, ZERO, Bicomplex, distance, from_idempotent, from_units
from bcft.engine import QuadratureConfig, integrate_oscillatory, transform, transform_component, truncation_bounds
from bcft.roc import ConvergenceRegion
from bcft.signals import DecayEstimate, SignalSpec, catalog

DEFAULT_SEED = 1729
CHECK_NAMES = (
    "compact_support",
    "convolution",
    "derivative",
    "linearity",
    "mult_by_t",
    "scale",
    "shift",
)

# Convolution transforms are nested quadratures; a looser outer target and
# coarser oscillation resolution keep them desk-scale while staying two
# orders below the 1e-6 check tolerance.  The inner quadrature retires on
# the roundoff floor alone (abs_tol 0): any absolute slack in h(t) would be
# amplified by the outer exp(|Im w|*t).
_CONV_CFG = QuadratureConfig(abs_tol=1e-8, tail_tol=1e-9, oscillation_density=4.0)
_INNER_CFG = QuadratureConfig(abs_tol=0.0, tail_tol=1e-12, max_panels=2**12)
# Finite differences amplify quadrature noise by 1/h**2; their transforms
# run at a fixed tight tolerance regardless of the caller's config.
_FD_CFG = QuadratureConfig(abs_tol=1e-12, tail_tol=1e-14)


@dataclass(frozen=True)
class CheckReport:
    check: str
    signal: str
    w: Bicomplex
    lhs: Bicomplex
    rhs: Bicomplex
    diff: float
    tol: float
    passed: bool

    def to_json(self) -> str:
        return (
            f'{{"check":"{self.check}","signal":"{self.signal}",'
            f'"w":{self.w.to_json()},"lhs":{self.lhs.to_json()},'
            f'"rhs":{self.rhs.to_json()},"diff":{self.diff:.17g},'
            f'"tol":{self.tol:.17g},"pass":{"true" if self.passed else "false"}}}'
        )


def _report(check, signal, w, lhs, rhs, tol, relative=False):
    diff = distance(lhs, rhs)
    if relative:
        scale = max(1.0, abs(rhs.w1), abs(rhs.w2))
        diff = diff / scale
    return CheckReport(check, signal, w, lhs, rhs, diff, tol, diff <= tol)


# ---------------------------------------------------------------------------
# derived signals


def _merged_breakpoints(*specs: SignalSpec) -> tuple[float, ...]:
    return tuple(sorted({b for s in specs for b in s.breakpoints}))


def linear_combination(f: SignalSpec, g: SignalSpec, a: float, b: float) -> SignalSpec:
    """a*f + b*g with summed envelope constants and the weaker decay rates."""

    def combine(ef: DecayEstimate, eg: DecayEstimate) -> DecayEstimate:
        return DecayEstimate(
            abs(a) * ef.C1 + abs(b) * eg.C1,
            min(ef.alpha, eg.alpha),
            abs(a) * ef.C2 + abs(b) * eg.C2,
            min(ef.beta, eg.beta),
            beta_arbitrary=ef.beta_arbitrary and eg.beta_arbitrary,
        )

    envelope_fn = None
    if f.envelope_fn is not None or g.envelope_fn is not None:
        envelope_fn = lambda v: combine(f.envelope_at(v), g.envelope_at(v))
    support = None
    if f.support is not None and g.support is not None:
        support = (min(f.support[0], g.support[0]), max(f.support[1], g.support[1]))
    return SignalSpec(
        name=f"{f.name}+{g.name}",
        fn=lambda t: a * f.fn(t) + b * g.fn(t),
        envelope=combine(f.envelope, g.envelope),
        support=support,
        breakpoints=_merged_breakpoints(f, g),
        entire=f.entire and g.entire,
        envelope_fn=envelope_fn,
    )


def shifted(f: SignalSpec, a: float) -> SignalSpec:
    """f(t - a); breakpoints move with the signal, envelope constants absorb
    exp(rate*|a|)."""

    def inflate(e: DecayEstimate) -> DecayEstimate:
        c = max(e.C1, e.C2) * math.exp(max(e.alpha, e.beta) * abs(a))
        # a right-shifted one-sided signal still vanishes for t < 0
        arb = e.beta_arbitrary and a >= 0
        return DecayEstimate(c, e.alpha, c, e.beta, beta_arbitrary=arb)

    return SignalSpec(
        name=f.name,
        fn=lambda t: f.fn(t - a),
        envelope=inflate(f.envelope),
        support=None if f.support is None else (f.support[0] + a, f.support[1] + a),
        breakpoints=tuple(b + a for b in f.breakpoints),
        entire=f.entire,
        envelope_fn=None if f.envelope_fn is None else (lambda v: inflate(f.envelope_at(v))),
    )


def scaled(f: SignalSpec, a: float) -> SignalSpec:
    """f(a*t); rates scale by |a| and for negative a the two sides swap."""
    if a == 0:
        raise ValueError("scale factor must be nonzero")

    def rescale(e: DecayEstimate) -> DecayEstimate:
        if a > 0:
            return DecayEstimate(
                e.C1, e.alpha * a, e.C2, e.beta * a, beta_arbitrary=e.beta_arbitrary
            )
        return DecayEstimate(e.C2, e.beta * -a, e.C1, e.alpha * -a)

    support = None
    if f.support is not None:
        lo, hi = f.support[0] / a, f.support[1] / a
        support = (min(lo, hi), max(lo, hi))
    return SignalSpec(
        name=f.name,
        fn=lambda t: f.fn(a * t),
        envelope=rescale(f.envelope),
        support=support,
        breakpoints=tuple(sorted(b / a for b in f.breakpoints)),
        entire=f.entire,
        envelope_fn=None if f.envelope_fn is None else (lambda v: rescale(f.envelope_at(v / a))),
    )


def t_power(f: SignalSpec, n: int, slack: float = 0.1) -> SignalSpec:
    """t**n * f(t); the polynomial factor costs ``slack`` of each decay rate
    since t**n * exp(-slack*t) <= (n/(e*slack))**n."""
    if n < 1:
        raise ValueError("power must be a positive integer")
    peak = (n / (math.e * slack)) ** n

    def shrink(e: DecayEstimate) -> DecayEstimate:
        if min(e.alpha, e.beta) <= slack:
            raise ValueError(f"slack {slack} exceeds decay rate of {f.name!r}")
        if e.beta_arbitrary:
            return replace(e, C1=e.C1 * peak, alpha=e.alpha - slack)
        return DecayEstimate(e.C1 * peak, e.alpha - slack, e.C2 * peak, e.beta - slack)

    return SignalSpec(
        name=f.name,
        fn=lambda t: t**n * f.fn(t),
        envelope=shrink(f.envelope),
        support=f.support,
        breakpoints=f.breakpoints,
        entire=f.entire,
        envelope_fn=None if f.envelope_fn is None else (lambda v: shrink(f.envelope_at(v))),
    )


def _convolution_envelope(ef: DecayEstimate, eg: DecayEstimate) -> DecayEstimate:
    """Envelope of f*g.

    Splitting the convolution integral at 0 and t bounds each piece by a
    ratio of envelope constants; the middle piece has equal exponents and
    costs a tenth of the weaker rate.
    """
    cross = ef.C2 * eg.C1 / (ef.beta + eg.alpha) + ef.C1 * eg.C2 / (ef.alpha + eg.beta)
    s1 = 0.1 * min(ef.alpha, eg.alpha)
    s2 = 0.1 * min(ef.beta, eg.beta)
    return DecayEstimate(
        cross + ef.C1 * eg.C1 / (math.e * s1),
        min(ef.alpha, eg.alpha) - s1,
        cross + ef.C2 * eg.C2 / (math.e * s2),
        min(ef.beta, eg.beta) - s2,
        beta_arbitrary=ef.beta_arbitrary and eg.beta_arbitrary,
    )


def convolved(f: SignalSpec, g: SignalSpec, v_hint: float = 0.0) -> SignalSpec:
    """(f*g)(t), each value an inner quadrature with its own truncation.

    The integrand f(u)*g(t-u) concentrates around two humps, u near 0 and
    u near t; the inner interval is the union of a window around each (not
    their intersection: the outer transform multiplies pointwise errors by
    exp(|Im w|*|t|), and only the union keeps the omitted mass decaying
    faster than that).  ``v_hint`` sizes both windows for frequencies with
    imaginary parts up to that magnitude; inner panels retire on the
    roundoff floor alone for the same reason.
    """
    v_hint = abs(v_hint)
    g_peak = max(g.envelope.C1, g.envelope.C2)
    f_peak = max(f.envelope.C1, f.envelope.C2)
    if f.support is not None:
        f_lo, f_hi = f.support
    else:
        t_minus, t_plus = truncation_bounds(
            f.envelope_at(v_hint), 0.0, 1e-12 / (2 * g_peak)
        )
        f_lo, f_hi = -t_minus, t_plus
    if g.support is not None:
        g_lo, g_hi = g.support
    else:
        t_minus, t_plus = truncation_bounds(
            g.envelope_at(v_hint), 0.0, 1e-12 / (2 * f_peak)
        )
        g_lo, g_hi = -t_minus, t_plus

    def value_at(t: float) -> float:
        win_f = (f_lo, f_hi)
        win_g = (t - g_hi, t - g_lo)
        # a compact factor is exactly zero outside its support, so both
        # windows can be clipped to it
        if g.support is not None:
            win_f = (max(win_f[0], t - g_hi), min(win_f[1], t - g_lo))
        if f.support is not None:
            win_g = (max(win_g[0], f_lo), min(win_g[1], f_hi))
        windows = sorted(w for w in (win_f, win_g) if w[0] < w[1])
        if not windows:
            return 0.0
        if len(windows) == 2 and windows[0][1] >= windows[1][0]:
            windows = [(windows[0][0], max(windows[0][1], windows[1][1]))]
        bps = f.breakpoints + tuple(t - b for b in g.breakpoints)
        inner = lambda u: f.fn(u) * g.fn(t - u)
        total = 0.0
        for lo, hi in windows:
            # seed edges at the catalog's unit scale so a narrow hump
            # cannot hide inside one wide panel and fool the estimate
            seeds = tuple(np.arange(lo + 1.0, hi, 1.0))
            value, _, _ = integrate_oscillatory(inner, lo, hi, 0j, _INNER_CFG, bps + seeds)
            total += value.real
        return total

    def fn(t):
        return np.array([value_at(x) for x in np.atleast_1d(t)])

    envelope_fn = None
    if f.envelope_fn is not None or g.envelope_fn is not None:
        envelope_fn = lambda v: _convolution_envelope(f.envelope_at(v), g.envelope_at(v))
    support = None
    if f.support is not None and g.support is not None:
        support = (f.support[0] + g.support[0], f.support[1] + g.support[1])
    if f.breakpoints and g.breakpoints:
        bps = tuple(sorted({bf + bg for bf in f.breakpoints for bg in g.breakpoints}))
    else:
        bps = ()
    return SignalSpec(
        name=f"{f.name}*{g.name}",
        fn=fn,
        envelope=_convolution_envelope(f.envelope, g.envelope),
        support=support,
        breakpoints=bps,
        entire=f.entire and g.entire,
        envelope_fn=envelope_fn,
    )


# ---------------------------------------------------------------------------
# checks


def check_linearity(
    f: SignalSpec,
    g: SignalSpec,
    a: float,
    b: float,
    w: Bicomplex,
    tol: float = 1e-7,
    cfg: Optional[QuadratureConfig] = None,
) -> CheckReport:
    lhs = transform(linear_combination(f, g, a, b), w, cfg).value
    rhs = transform(f, w, cfg).value * a + transform(g, w, cfg).value * b
    return _report("linearity", f"{f.name}+{g.name}", w, lhs, rhs, tol)


def check_shift(
    f: SignalSpec,
    a: float,
    w: Bicomplex,
    tol: float = 1e-7,
    cfg: Optional[QuadratureConfig] = None,
) -> CheckReport:
    lhs = transform(shifted(f, a), w, cfg).value
    rhs = (I1 * w * a).exp() * transform(f, w, cfg).value
    return _report("shift", f.name, w, lhs, rhs, tol)


def check_scale(
    f: SignalSpec,
    a: float,
    w: Bicomplex,
    tol: float = 1e-7,
    cfg: Optional[QuadratureConfig] = None,
) -> CheckReport:
    lhs = transform(scaled(f, a), w, cfg).value
    rhs = transform(f, w / a, cfg).value / abs(a)
    return _report("scale", f.name, w, lhs, rhs, tol)


def check_convolution(
    f: SignalSpec,
    g: SignalSpec,
    w: Bicomplex,
    tol: float = 1e-6,
    cfg: Optional[QuadratureConfig] = None,
) -> CheckReport:
    cfg = cfg or _CONV_CFG
    v_hint = max(abs(w.w1.imag), abs(w.w2.imag))
    lhs = transform(convolved(f, g, v_hint), w, cfg).value
    rhs = transform(f, w, cfg).value * transform(g, w, cfg).value
    return _report("convolution", f"{f.name}*{g.name}", w, lhs, rhs, tol)


def check_mult_by_t(
    f: SignalSpec,
    n: int,
    w: Bicomplex,
    tol: Optional[float] = None,
    cfg: Optional[QuadratureConfig] = None,
) -> CheckReport:
    """Transform of t**n * f against (-i1)**n times the n-th frequency
    derivative of the transform, taken componentwise by central finite
    differences."""
    if n not in (1, 2):
        raise ValueError("n must be 1 or 2")
    if tol is None:
        tol = 1e-5 if n == 1 else 1e-3
    steps = [(1e-5 if n == 1 else 1e-4) * max(1.0, abs(wk)) for wk in w.pair]
    for wk, h in zip(w.pair, steps):
        if f.component_margin(wk) < 10 * h:
            raise ValueError(f"margin at {wk} too small for step {h}")
    lhs = transform(t_power(f, n), w, cfg).value

    components = []
    for wk, h in zip(w.pair, steps):
        hi = transform_component(f, wk + h, _FD_CFG)[0]
        lo = transform_component(f, wk - h, _FD_CFG)[0]
        if n == 1:
            d = (hi - lo) / (2 * h)
        else:
            mid = transform_component(f, wk, _FD_CFG)[0]
            d = (hi - 2 * mid + lo) / (h * h)
        components.append((-1j) ** n * d)
    rhs = from_idempotent((components[0], components[1]))
    return _report("mult_by_t", f"{f.name}:n{n}", w, lhs, rhs, tol)


def check_derivative_of_signal(
    f: SignalSpec,
    n: int,
    w: Bicomplex,
    tol: float = 1e-7,
    cfg: Optional[QuadratureConfig] = None,
) -> CheckReport:
    """Transform of f's n-th derivative against (-i1*w)**n * fhat."""
    if n not in f.derivatives:
        raise ValueError(f"signal {f.name!r} has no registered derivative of order {n}")
    lhs = transform(f.derivatives[n], w, cfg).value
    rhs = (-(I1 * w)) ** n * transform(f, w, cfg).value
    return _report("derivative", f"{f.name}:n{n}", w, lhs, rhs, tol)


def check_compact_support_entire(
    f: SignalSpec,
    sample: Sequence[Bicomplex],
    tol: float = 1e-6,
    cfg: Optional[QuadratureConfig] = None,
) -> list[CheckReport]:
    """Compactly supported signals transform everywhere; each sampled
    frequency must evaluate cleanly and match the closed form to a
    relative tolerance."""
    if f.support is None:
        raise ValueError(f"signal {f.name!r} is not compactly supported")
    reports = []
    for w in sample:
        if f.closed_form is not None:
            rhs = from_idempotent((f.closed_form(w.w1), f.closed_form(w.w2)))
        else:
            rhs = None
        try:
            lhs = transform(f, w, cfg).value
        except (ValueError, RuntimeError):
            fallback = rhs if rhs is not None else ZERO
            reports.append(
                CheckReport("compact_support", f.name, w, ZERO, fallback, math.inf, tol, False)
            )
            continue
        reports.append(
            _report("compact_support", f.name, w, lhs, rhs if rhs is not None else lhs, tol, relative=True)
        )
    return reports


# ---------------------------------------------------------------------------
# suite


def _witness_region(spec: SignalSpec) -> Optional[ConvergenceRegion]:
    """Finite-beta sampling region; None when any frequency works."""
    if spec.entire or spec.support is not None:
        return None
    e = spec.envelope
    return ConvergenceRegion(e.alpha, e.beta)


def _sample(rng, specs, n, margin=0.1, box=2.0):
    """n frequencies inside every spec's witness region with the margin."""
    regions = [r for r in map(_witness_region, specs) if r is not None]
    out = []
    attempts = 0
    while len(out) < n:
        attempts += 1
        if attempts > 200_000:
            raise RuntimeError("frequency sampling stalled; incompatible regions")
        w = from_units(*rng.uniform(-box, box, 4))
        if all(r.margin(w) >= margin for r in regions):
            out.append(w)
    return out


def _matches(label: str, names: Optional[set]) -> bool:
    return names is None or bool(names.intersection(re.split(r"[+*:]", label)))


def run_suite(
    checks: Optional[Sequence[str]] = None,
    signals: Optional[Sequence[str]] = None,
    seed: int = DEFAULT_SEED,
    freqs: int = 20,
    cfg: Optional[QuadratureConfig] = None,
) -> list[CheckReport]:
    """All checks over the catalog at seeded random in-region frequencies.

    ``checks`` and ``signals`` filter by check name and by signal name
    (matching any constituent of derived labels like rect*rect).  Reports
    come back sorted by (check, signal, frequency index).
    """
    base = catalog()
    names = {s.name for s in base}
    if checks is not None:
        unknown = set(checks) - set(CHECK_NAMES)
        if unknown:
            raise ValueError(f"unknown check filter: {', '.join(sorted(unknown))}")
        checks = set(checks)
    if signals is not None:
        unknown = set(signals) - names
        if unknown:
            raise ValueError(f"unknown signal filter: {', '.join(sorted(unknown))}")
        signals = set(signals)

    rng = np.random.default_rng(seed)
    reports: list[CheckReport] = []

    def wanted(check: str, label: str) -> bool:
        return (checks is None or check in checks) and _matches(label, signals)

    by_name = {s.name: s for s in base}
    pairs = list(zip(base, base[1:] + base[:1]))

    # compact_support: the rect signal, far-out frequencies included
    f = by_name["rect"]
    if wanted("compact_support", f.name):
        sample = [from_units(0, 50, 0, 0), from_units(0, -50, 0, 0)]
        sample += _sample(rng, [f], freqs - len(sample), box=5.0)
        reports.extend(check_compact_support_entire(f, sample, cfg=cfg))

    # convolution: w = 0 pinned first, then seeded frequencies.  Extra
    # margin and a tighter box keep the outer truncation intervals (and so
    # the nested quadrature cost) reasonable.
    conv_pairs = [
        (by_name["rect"], by_name["rect"]),
        (by_name["gaussian"], by_name["gaussian"]),
        (by_name["two_sided_exp"], by_name["gaussian"]),
    ]
    for f, g in conv_pairs:
        if not wanted("convolution", f"{f.name}*{g.name}"):
            continue
        h = convolved(f, g)
        ws = [ZERO] + _sample(rng, [f, g, h], freqs - 1, margin=0.3, box=0.8)
        reports.extend(check_convolution(f, g, w, cfg=cfg) for w in ws)

    # derivative: signals with registered derivatives
    for name, n in (("gaussian", 1), ("gaussian", 2), ("two_sided_exp", 1)):
        f = by_name[name]
        if not wanted("derivative", f"{name}:n{n}"):
            continue
        for w in _sample(rng, [f, f.derivatives[n]], freqs):
            reports.append(check_derivative_of_signal(f, n, w, cfg=cfg))

    # linearity: catalog ring of pairs, random mixing coefficients
    for f, g in pairs:
        if not wanted("linearity", f"{f.name}+{g.name}"):
            continue
        for w in _sample(rng, [f, g], freqs):
            a, b = rng.uniform(-2, 2, 2)
            reports.append(check_linearity(f, g, a, b, w, cfg=cfg))

    # mult_by_t: both orders over the whole catalog.  Frequencies stay in a
    # tighter box with extra margin: the finite-difference truncation error
    # grows with the transform's higher derivatives, which blow up near the
    # strip edges (poles sit right on them) and for the gaussian grow like
    # exp(|w|^2/2).
    for n in (1, 2):
        for f in base:
            if not wanted("mult_by_t", f"{f.name}:n{n}"):
                continue
            for w in _sample(rng, [f, t_power(f, n)], freqs, margin=0.15, box=1.0):
                reports.append(check_mult_by_t(f, n, w, cfg=cfg))

    # scale: alternating contraction/dilation, negative factors included
    for f in base:
        if not wanted("scale", f.name):
            continue
        for i, u in enumerate(_sample(rng, [f], freqs)):
            a = rng.uniform(0.5, 2.0) * (-1 if i % 2 else 1)
            reports.append(check_scale(f, a, u * a, cfg=cfg))

    # shift
    for f in base:
        if not wanted("shift", f.name):
            continue
        for w in _sample(rng, [f], freqs):
            a = rng.uniform(-2, 2)
            reports.append(check_shift(f, a, w, cfg=cfg))

    reports.sort(key=lambda r: (r.check, r.signal))
    return reports


def suite_json(reports: Sequence[CheckReport]) -> str:
    return "\n".join(r.to_json() for r in reports) + "\n"
