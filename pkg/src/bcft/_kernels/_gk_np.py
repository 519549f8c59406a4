"""Vectorized quadrature kernel, pure numpy."""

import numpy as np


def panel_integrals(t, fs, half, w_re, w_im, wk, wg):
    """Evaluate Gauss-Kronrod panels of ``f(t) * exp(i*w*t)``.

    ``t`` and ``fs`` are (panels, 15) arrays of scaled rule nodes and signal
    values, ``half`` the (panels,) half-widths, ``w = w_re + 1j*w_im`` the
    frequency.  ``wk`` and ``wg`` are the Kronrod and embedded-Gauss weight
    vectors.  Returns the (panels,) complex Kronrod estimates and the
    (panels,) absolute Kronrod-Gauss differences.

    Nodes where the signal is exactly zero contribute exactly zero, even
    where the phase factor alone would overflow (one-sided signals far
    from the real axis).
    """
    nz = fs != 0
    if nz.all():
        vals = fs * np.exp((1j * w_re - w_im) * t)
    else:
        vals = np.zeros_like(fs)
        vals[nz] = fs[nz] * np.exp((1j * w_re - w_im) * t[nz])
    k15 = vals @ wk
    g7 = vals @ wg
    return half * k15, np.abs(half * (k15 - g7))
