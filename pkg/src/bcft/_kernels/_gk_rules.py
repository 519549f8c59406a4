"""Gauss-Kronrod 7/15 rule on [-1, 1].

Node and weight values are the standard 33-digit QUADPACK constants.  The
15-point Kronrod rule extends the 7-point Gauss rule, so evaluating the
integrand on the Kronrod nodes yields both estimates; their difference
drives the adaptive error control.  ``WG15`` places the Gauss weights at
the odd node indices (the embedded Gauss nodes) and zeros elsewhere, which
lets a kernel accumulate both rules in one pass.
"""

import numpy as np

# Positive Kronrod abscissae, descending; the even-index entries interlace
# the Gauss nodes, the odd-index entries are the Gauss-7 nodes themselves.
_XGK = (
    0.991455371120812639206854697526329,
    0.949107912342758524526189684047851,
    0.864864423359769072789712788640926,
    0.741531185599394439863864773280788,
    0.586087235467691130294144838258730,
    0.405845151377397166906606412076961,
    0.207784955007898467600689403773245,
    0.000000000000000000000000000000000,
)

_WGK = (
    0.022935322010529224963732008058970,
    0.063092092629978553290700663189204,
    0.104790010322250183839876322541518,
    0.140653259715525918745189590510238,
    0.169004726639267902826583426598550,
    0.190350578064785409913256402421014,
    0.204432940075298892414161999234649,
    0.209482141084727828012999174891714,
)

_WG = (
    0.129484966168869693270611432679082,
    0.279705391489276667901467771423780,
    0.381830050505118944950369775488975,
    0.417959183673469387755102040816327,
)

XK15 = np.array([-x for x in _XGK[:7]] + [0.0] + [x for x in reversed(_XGK[:7])])
WK15 = np.array(list(_WGK[:7]) + [_WGK[7]] + list(reversed(_WGK[:7])))

WG15 = np.zeros(15)
WG15[[1, 13]] = _WG[0]
WG15[[3, 11]] = _WG[1]
WG15[[5, 9]] = _WG[2]
WG15[7] = _WG[3]

for _arr in (XK15, WK15, WG15):
    _arr.setflags(write=False)
