"""Compiled quadrature kernel; mirrors the numpy implementation."""

from libc.math cimport cos, exp, sin, sqrt

import numpy as np


def panel_integrals(const double[:, :] t, const double complex[:, :] fs,
                    const double[:] half, double w_re, double w_im,
                    const double[:] wk, const double[:] wg):
    """Evaluate Gauss-Kronrod panels of ``f(t) * exp(i*w*t)``.

    Same contract as the numpy kernel: (panels, 15) nodes and signal values,
    (panels,) half-widths, returns Kronrod estimates and Kronrod-Gauss
    differences.
    """
    cdef Py_ssize_t n = t.shape[0]
    I = np.empty(n, dtype=np.complex128)
    E = np.empty(n, dtype=np.float64)
    cdef double complex[:] I_view = I
    cdef double[:] E_view = E

    cdef Py_ssize_t i, j
    cdef double tt, damp, c, s, fre, fim, vre, vim
    cdef double kre, kim, gre, gim, h
    cdef double complex J = 1j

    for i in range(n):
        kre = kim = gre = gim = 0.0
        for j in range(15):
            fre = fs[i, j].real
            fim = fs[i, j].imag
            if fre == 0.0 and fim == 0.0:
                # exact zero absorbs the phase, even an overflowing one
                continue
            tt = t[i, j]
            damp = exp(-w_im * tt)
            c = cos(w_re * tt) * damp
            s = sin(w_re * tt) * damp
            vre = fre * c - fim * s
            vim = fre * s + fim * c
            kre += wk[j] * vre
            kim += wk[j] * vim
            gre += wg[j] * vre
            gim += wg[j] * vim
        h = half[i]
        I_view[i] = h * (kre + J * kim)
        E_view[i] = h * sqrt((kre - gre) * (kre - gre) + (kim - gim) * (kim - gim))
    return I, E
