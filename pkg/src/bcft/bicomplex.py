"""Bicomplex ring arithmetic via the idempotent decomposition.

A bicomplex number is a linear combination of four real units,

    w = a0 + i1*a1 + i2*a2 + i1*i2*a3,

with i1^2 = i2^2 = -1 and (i1*i2)^2 = +1.  The ring splits along the two
orthogonal idempotents e1 = (1 + i1*i2)/2 and e2 = (1 - i1*i2)/2 into a pair
of ordinary complex numbers

    w1 = (a0 + a3) + i1*(a1 - a2),    w2 = (a0 - a3) + i1*(a1 + a2),

and every ring operation acts componentwise on (w1, w2).  Values here are
stored as that pair; the four-unit coefficients are a view.  Multiplication
is commutative but the ring has zero divisors: exactly the nonzero elements
with w1 = 0 or w2 = 0.
"""

from __future__ import annotations

import cmath
import json
import math
from typing import NamedTuple

__all__ = [
    "Bicomplex",
    "IdempotentPair",
    "ZeroDivisorError",
    "from_units",
    "from_idempotent",
    "to_idempotent",
    "add",
    "mul",
    "invert",
    "is_zero_divisor",
    "exp",
    "distance",
    "isclose",
    "ZERO",
    "ONE",
    "I1",
    "I2",
    "I1I2",
    "E1",
    "E2",
]

#: Default relative tolerance for zero-divisor detection and value equality.
DEFAULT_TOL = 1e-12


class ZeroDivisorError(ZeroDivisionError):
    """Raised when inverting a (numerical) zero divisor or zero itself."""

    def __init__(self, message: str, detail: str = "singular"):
        super().__init__(message)
        self.detail = detail


class IdempotentPair(NamedTuple):
    """The two complex projections of a bicomplex number, both in the
    i1-plane.  Recombination is ``w1*e1 + w2*e2``."""

    w1: complex
    w2: complex


def _require_finite(*values: float) -> None:
    for v in values:
        if not math.isfinite(v):
            raise ValueError(f"bicomplex coefficients must be finite, got {v!r}")


class Bicomplex:
    """Immutable bicomplex number, stored as its idempotent pair.

    The constructor takes the four unit coefficients; ``from_pair`` builds
    directly from the projections.  All arithmetic is componentwise on the
    pair, which makes multiplication, inversion and the Fourier transform
    diagonal.  Equality is tolerance-based (the conversions round), so
    instances are unhashable.
    """

    __slots__ = ("_w1", "_w2")

    def __init__(self, a0: float = 0.0, a1: float = 0.0, a2: float = 0.0, a3: float = 0.0):
        a0, a1, a2, a3 = float(a0), float(a1), float(a2), float(a3)
        _require_finite(a0, a1, a2, a3)
        object.__setattr__(self, "_w1", complex(a0 + a3, a1 - a2))
        object.__setattr__(self, "_w2", complex(a0 - a3, a1 + a2))

    @classmethod
    def from_pair(cls, w1: complex, w2: complex) -> "Bicomplex":
        w1, w2 = complex(w1), complex(w2)
        _require_finite(w1.real, w1.imag, w2.real, w2.imag)
        obj = object.__new__(cls)
        object.__setattr__(obj, "_w1", w1)
        object.__setattr__(obj, "_w2", w2)
        return obj

    @classmethod
    def from_i1(cls, z: complex) -> "Bicomplex":
        """Embed z = x + i1*y from the i1-complex plane (units (x, y, 0, 0));
        both projections equal z."""
        return cls.from_pair(complex(z), complex(z))

    def __setattr__(self, name, value):
        raise AttributeError("Bicomplex values are immutable")

    # -- representations ---------------------------------------------------

    @property
    def pair(self) -> IdempotentPair:
        return IdempotentPair(self._w1, self._w2)

    @property
    def w1(self) -> complex:
        return self._w1

    @property
    def w2(self) -> complex:
        return self._w2

    @property
    def a0(self) -> float:
        return 0.5 * (self._w1.real + self._w2.real)

    @property
    def a1(self) -> float:
        return 0.5 * (self._w1.imag + self._w2.imag)

    @property
    def a2(self) -> float:
        return 0.5 * (self._w2.imag - self._w1.imag)

    @property
    def a3(self) -> float:
        return 0.5 * (self._w1.real - self._w2.real)

    @property
    def units(self) -> tuple[float, float, float, float]:
        return (self.a0, self.a1, self.a2, self.a3)

    def __repr__(self) -> str:
        a0, a1, a2, a3 = self.units
        return f"Bicomplex(a0={a0!r}, a1={a1!r}, a2={a2!r}, a3={a3!r})"

    # -- ring operations ---------------------------------------------------

    def __add__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return Bicomplex.from_pair(self._w1 + other._w1, self._w2 + other._w2)

    __radd__ = __add__

    def __sub__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return Bicomplex.from_pair(self._w1 - other._w1, self._w2 - other._w2)

    def __rsub__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return other - self

    def __neg__(self):
        return Bicomplex.from_pair(-self._w1, -self._w2)

    def __mul__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return Bicomplex.from_pair(self._w1 * other._w1, self._w2 * other._w2)

    __rmul__ = __mul__

    def __truediv__(self, other):
        if isinstance(other, (int, float)):
            return Bicomplex.from_pair(self._w1 / other, self._w2 / other)
        if isinstance(other, Bicomplex):
            return self * invert(other)
        return NotImplemented

    def __pow__(self, n):
        if not isinstance(n, int):
            return NotImplemented
        if n < 0:
            return invert(self) ** (-n)
        return Bicomplex.from_pair(self._w1**n, self._w2**n)

    def exp(self) -> "Bicomplex":
        """Componentwise complex exponential."""
        return Bicomplex.from_pair(cmath.exp(self._w1), cmath.exp(self._w2))

    # -- comparison --------------------------------------------------------

    def __eq__(self, other) -> bool:
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return isclose(self, other)

    __hash__ = None  # tolerance-based equality

    def is_zero(self, tol: float = DEFAULT_TOL) -> bool:
        return abs(self._w1) <= tol and abs(self._w2) <= tol

    # -- serialization -----------------------------------------------------

    def to_json(self) -> str:
        """Render the four-unit form with 17 significant digits."""
        a0, a1, a2, a3 = self.units
        return (
            f'{{"a0":{a0:.17g},"a1":{a1:.17g},"a2":{a2:.17g},"a3":{a3:.17g}}}'
        )

    @classmethod
    def from_json(cls, text: str) -> "Bicomplex":
        obj = json.loads(text)
        try:
            return cls(obj["a0"], obj["a1"], obj["a2"], obj["a3"])
        except (KeyError, TypeError) as exc:
            raise ValueError(f"malformed bicomplex JSON: {text!r}") from exc


def _coerce(value) -> "Bicomplex":
    if isinstance(value, Bicomplex):
        return value
    if isinstance(value, (int, float)):
        return Bicomplex.from_pair(complex(value), complex(value))
    return NotImplemented


# -- module-level operation surface ----------------------------------------


def from_units(a0: float, a1: float, a2: float, a3: float) -> Bicomplex:
    """Build from the four unit coefficients (1, i1, i2, i1*i2)."""
    return Bicomplex(a0, a1, a2, a3)


def to_idempotent(w: Bicomplex) -> IdempotentPair:
    """Projections (P1 w, P2 w); for w = z1 + i2*z2 these are z1 -/+ i1*z2."""
    return w.pair


def from_idempotent(p: IdempotentPair | tuple[complex, complex]) -> Bicomplex:
    """Recombine a projection pair: w = w1*e1 + w2*e2."""
    w1, w2 = p
    return Bicomplex.from_pair(w1, w2)


def add(w: Bicomplex, v: Bicomplex) -> Bicomplex:
    return w + v


def mul(w: Bicomplex, v: Bicomplex) -> Bicomplex:
    return w * v


def invert(w: Bicomplex, tol: float = DEFAULT_TOL) -> Bicomplex:
    """Componentwise reciprocal.

    Fails when either projection modulus is at or below
    ``tol * max(|w1|, |w2|, 1)``: such values lie on (or numerically near)
    the singular cone a0 = -a3, a1 = a2 or a0 = a3, a1 = -a2 where no
    inverse exists.
    """
    if tol < 0:
        raise ValueError("tol must be >= 0")
    m1, m2 = abs(w.w1), abs(w.w2)
    threshold = tol * max(m1, m2, 1.0)
    if m1 <= threshold or m2 <= threshold:
        if m1 == 0.0 and m2 == 0.0:
            raise ZeroDivisorError("cannot invert zero", detail="zero operand")
        which = "w1" if m1 <= threshold else "w2"
        raise ZeroDivisorError(
            f"zero divisor: idempotent component {which} vanishes "
            f"(|w1|={m1:.3g}, |w2|={m2:.3g})"
        )
    return Bicomplex.from_pair(1.0 / w.w1, 1.0 / w.w2)


def is_zero_divisor(w: Bicomplex, tol: float = DEFAULT_TOL) -> bool:
    """True iff w is nonzero with one (numerically) vanishing projection.

    Zero itself is classified neither invertible nor a zero divisor.
    """
    if tol < 0:
        raise ValueError("tol must be >= 0")
    m1, m2 = abs(w.w1), abs(w.w2)
    if m1 == 0.0 and m2 == 0.0:
        return False
    return min(m1, m2) <= tol * max(m1, m2)


def exp(w: Bicomplex) -> Bicomplex:
    return w.exp()


def distance(w: Bicomplex, v: Bicomplex) -> float:
    """Max componentwise modulus of the difference, on the idempotent pair.

    This is the metric behind every tolerance comparison in the package
    (the ring itself fixes no canonical norm).
    """
    return max(abs(w.w1 - v.w1), abs(w.w2 - v.w2))


def isclose(w: Bicomplex, v: Bicomplex, tol: float = DEFAULT_TOL) -> bool:
    """Relative comparison with an absolute floor of ``tol`` near zero."""
    scale = max(1.0, abs(w.w1), abs(w.w2), abs(v.w1), abs(v.w2))
    return distance(w, v) <= tol * scale


ZERO = Bicomplex(0, 0, 0, 0)
ONE = Bicomplex(1, 0, 0, 0)
I1 = Bicomplex(0, 1, 0, 0)
I2 = Bicomplex(0, 0, 1, 0)
I1I2 = Bicomplex(0, 0, 0, 1)
E1 = Bicomplex(0.5, 0, 0, 0.5)
E2 = Bicomplex(0.5, 0, 0, -0.5)
