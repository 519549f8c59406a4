"""Built-in signal catalog.

Each signal carries everything the transform engine needs besides the
integrand itself: an exponential decay envelope (used to truncate the
integration interval), optional compact support, breakpoints where the
integrand is not smooth, and, where one exists, the closed-form transform
used as an oracle.

Closed forms are scalar functions of a complex component frequency; the
bicomplex transform value is obtained by applying them to each idempotent
component (:func:`closed_form_transform`).
"""

import cmath
import json
import math
from dataclasses import dataclass, field, replace
from typing import Callable, Mapping, Optional

import numpy as np

from bcft.bicomplex import Bicomplex, from_idempotent
from bcft.roc import ConvergenceRegion


class OutsideRegionError(ValueError):
    """Frequency outside the region of convergence."""

    def __init__(self, message: str, component: int, margin: float):
        super().__init__(message)
        self.component = component
        self.margin = margin


class SingularFrequencyError(ValueError):
    """Frequency component at (or too close to) a pole of the transform."""


@dataclass(frozen=True)
class DecayEstimate:
    """Envelope |f(t)| <= C1*exp(-alpha*t) for t >= 0 and
    |f(t)| <= C2*exp(beta*t) for t <= 0.

    ``beta_arbitrary`` marks signals vanishing for t < 0, where the bound
    holds for every positive beta; ``beta`` then stores a finite witness.
    """

    C1: float
    alpha: float
    C2: float
    beta: float
    beta_arbitrary: bool = False

    def __post_init__(self):
        for name in ("C1", "alpha", "C2", "beta"):
            value = getattr(self, name)
            if not (math.isfinite(value) and value > 0):
                raise ValueError(f"{name} must be finite and positive, got {value}")


@dataclass(frozen=True)
class SignalSpec:
    """A real-valued signal plus the metadata driving its transform."""

    name: str
    fn: Callable[[np.ndarray], np.ndarray]
    envelope: DecayEstimate
    params: Mapping[str, float] = field(default_factory=dict)
    support: Optional[tuple[float, float]] = None
    closed_form: Optional[Callable[[complex], complex]] = None
    singular_set: Optional[Callable[[complex], bool]] = None
    breakpoints: tuple[float, ...] = ()
    entire: bool = False
    envelope_fn: Optional[Callable[[float], DecayEstimate]] = None
    derivatives: Mapping[int, "SignalSpec"] = field(default_factory=dict)

    def eval(self, t):
        """Evaluate the signal; accepts scalars or arrays."""
        arr = np.atleast_1d(np.asarray(t, dtype=float))
        out = self.fn(arr)
        return out if np.ndim(t) else float(out[0])

    @property
    def region(self) -> ConvergenceRegion:
        beta = math.inf if self.envelope.beta_arbitrary else self.envelope.beta
        return ConvergenceRegion(self.envelope.alpha, beta)

    def envelope_at(self, v: float) -> DecayEstimate:
        """Envelope effective at component imaginary part ``v``.

        Signals dominated by every exponential supply ``envelope_fn``;
        beta-arbitrary signals get their witness raised above ``v``.
        """
        if self.envelope_fn is not None:
            return self.envelope_fn(v)
        e = self.envelope
        if e.beta_arbitrary and e.beta <= abs(v) + 1:
            return replace(e, beta=abs(v) + 1)
        return e

    def in_region(self, wk: complex) -> bool:
        """Strip membership of one component frequency (always true for
        entire or compactly supported signals)."""
        if self.entire or self.support is not None:
            return True
        r = self.region
        return -r.alpha < wk.imag < r.beta

    def component_margin(self, wk: complex) -> float:
        if self.entire or self.support is not None:
            return math.inf
        r = self.region
        return min(wk.imag + r.alpha, r.beta - wk.imag)

    def describe(self) -> dict:
        return {
            "name": self.name,
            "parameters": dict(self.params),
            "has_closed_form": self.closed_form is not None,
            "support": list(self.support) if self.support else None,
        }


def _require_positive(**kwargs: float) -> None:
    for name, value in kwargs.items():
        if not (math.isfinite(value) and value > 0):
            raise ValueError(f"{name} must be finite and positive, got {value}")


def _poly_exp_peak(n: int, rate: float) -> float:
    """sup over t >= 0 of t**n * exp(rate*t - t**2/2)."""
    t = (rate + math.sqrt(rate * rate + 4 * n)) / 2
    return t**n * math.exp(rate * t - t * t / 2)


def two_sided_exp(a: float = 1.0) -> SignalSpec:
    """exp(-a|t|); transform 2a/(a^2 + w^2) on -a < Im(w_k) < a."""
    _require_positive(a=a)

    def fn(t):
        return np.exp(-a * np.abs(t))

    def d1(t):
        return -a * np.sign(t) * np.exp(-a * np.abs(t))

    deriv = SignalSpec(
        name="two_sided_exp_d1",
        fn=d1,
        envelope=DecayEstimate(a, a, a, a),
        params={"a": a},
        breakpoints=(0.0,),
    )
    return SignalSpec(
        name="two_sided_exp",
        fn=fn,
        envelope=DecayEstimate(1.0, a, 1.0, a),
        params={"a": a},
        closed_form=lambda wk: 2 * a / (a * a + wk * wk),
        breakpoints=(0.0,),
        derivatives={1: deriv},
    )


def one_sided_exp() -> SignalSpec:
    """exp(-t) for t > 0, zero otherwise; transform 1/(1 - i*w).

    The region is unbounded above (any left-tail growth bound works since
    the signal vanishes for t < 0); note its lower edge still carries the
    |a2| correction, a1 > -1 + |a2|, not a bare a1 > -1.
    """

    def fn(t):
        out = np.zeros_like(t)
        m = t > 0
        out[m] = np.exp(-t[m])
        return out

    return SignalSpec(
        name="one_sided_exp",
        fn=fn,
        envelope=DecayEstimate(1.0, 1.0, 1.0, 1.0, beta_arbitrary=True),
        closed_form=lambda wk: 1 / (1 - 1j * wk),
        breakpoints=(0.0,),
    )


def gaussian() -> SignalSpec:
    """exp(-t^2/2); transform sqrt(2*pi)*exp(-w^2/2), entire."""

    def fn(t):
        return np.exp(-0.5 * t * t)

    def envelope_for(n):
        def env(v):
            rate = abs(v) + 1.0
            if n == 0:
                c = _poly_exp_peak(0, rate)
            elif n == 1:
                c = _poly_exp_peak(1, rate)
            else:
                # |t^2 - 1| <= t^2 + 1
                c = _poly_exp_peak(2, rate) + _poly_exp_peak(0, rate)
            return DecayEstimate(c, rate, c, rate)

        return env

    d1 = SignalSpec(
        name="gaussian_d1",
        fn=lambda t: -t * np.exp(-0.5 * t * t),
        envelope=envelope_for(1)(0.0),
        entire=True,
        envelope_fn=envelope_for(1),
    )
    d2 = SignalSpec(
        name="gaussian_d2",
        fn=lambda t: (t * t - 1) * np.exp(-0.5 * t * t),
        envelope=envelope_for(2)(0.0),
        entire=True,
        envelope_fn=envelope_for(2),
    )
    root_2pi = math.sqrt(2 * math.pi)
    return SignalSpec(
        name="gaussian",
        fn=fn,
        envelope=envelope_for(0)(0.0),
        closed_form=lambda wk: root_2pi * cmath.exp(-0.5 * wk * wk),
        entire=True,
        envelope_fn=envelope_for(0),
        derivatives={1: d1, 2: d2},
    )


def rect(a: float = 1.0) -> SignalSpec:
    """Indicator of |t| <= a; transform 2*sin(a*w)/w, entire."""
    _require_positive(a=a)

    def fn(t):
        return np.where(np.abs(t) <= a, 1.0, 0.0)

    def closed_form(wk: complex) -> complex:
        z = a * wk
        if abs(z) < 1e-4:
            return 2 * a * (1 - z * z / 6 + z * z * z * z / 120)
        return 2 * cmath.sin(z) / wk

    def envelope_fn(v):
        # compact support is dominated by every exponential:
        # 1 <= exp(rate*(a - t)) on [-a, a]
        rate = abs(v) + 1.0
        c = math.exp(a * rate)
        return DecayEstimate(c, rate, c, rate)

    return SignalSpec(
        name="rect",
        fn=fn,
        envelope=envelope_fn(0.0),
        params={"a": a},
        support=(-a, a),
        closed_form=closed_form,
        breakpoints=(-a, a),
        entire=True,
        envelope_fn=envelope_fn,
    )


def damped_osc(T: float = 1.0, omega0: float = 1.0) -> SignalSpec:
    """exp(-t/T)*sin(omega0*t) for t >= 0, zero otherwise.

    Transform (fixed-sign partial fractions, poles at +-omega0 - i/T):
    0.5*[1/(w + omega0 + i/T) - 1/(w - omega0 + i/T)].
    """
    _require_positive(T=T)
    if not math.isfinite(omega0):
        raise ValueError(f"omega0 must be finite, got {omega0}")

    def fn(t):
        out = np.zeros_like(t)
        m = t >= 0
        out[m] = np.exp(-t[m] / T) * np.sin(omega0 * t[m])
        return out

    rate = 1.0 / T
    poles = (omega0 - 1j * rate, -omega0 - 1j * rate)

    def closed_form(wk: complex) -> complex:
        return 0.5 * (1 / (wk + omega0 + 1j * rate) - 1 / (wk - omega0 + 1j * rate))

    return SignalSpec(
        name="damped_osc",
        fn=fn,
        envelope=DecayEstimate(1.0, rate, 1.0, 1.0, beta_arbitrary=True),
        params={"T": T, "omega0": omega0},
        closed_form=closed_form,
        singular_set=lambda wk: any(abs(wk - p) < 1e-9 for p in poles),
        breakpoints=(0.0,),
    )


_FACTORIES: dict[str, Callable[..., SignalSpec]] = {
    "two_sided_exp": two_sided_exp,
    "one_sided_exp": one_sided_exp,
    "gaussian": gaussian,
    "rect": rect,
    "damped_osc": damped_osc,
}


def catalog() -> list[SignalSpec]:
    """All built-in signals with default parameters."""
    return [factory() for factory in _FACTORIES.values()]


def make(name: str, **params: float) -> SignalSpec:
    """Construct a catalog signal by name with explicit parameters."""
    try:
        factory = _FACTORIES[name]
    except KeyError:
        raise ValueError(f"unknown signal {name!r}; known: {', '.join(_FACTORIES)}") from None
    return factory(**params)


def catalog_json() -> str:
    return json.dumps([s.describe() for s in catalog()], indent=2)


def closed_form_transform(s: SignalSpec, w: Bicomplex) -> Bicomplex:
    """Evaluate the signal's printed transform componentwise.

    Raises OutsideRegionError off the region (unless the transform is
    entire) and SingularFrequencyError at a component pole.
    """
    if s.closed_form is None:
        raise ValueError(f"signal {s.name!r} has no closed-form transform")
    values = []
    for k, wk in enumerate(w.pair, start=1):
        if s.singular_set is not None and s.singular_set(wk):
            raise SingularFrequencyError(
                f"component {k} frequency {wk} is a pole of {s.name!r}"
            )
        if not s.in_region(wk):
            raise OutsideRegionError(
                f"component {k} frequency {wk} outside region of {s.name!r}",
                component=k,
                margin=s.component_margin(wk),
            )
        values.append(s.closed_form(wk))
    return from_idempotent((values[0], values[1]))
