"""Shared test helpers."""

from bcft.bicomplex import from_units


def sample_in_region(spec, rng, n, margin=0.1, box=2.0):
    """Random bicomplex frequencies with strip margin >= ``margin`` for
    ``spec`` (any frequency in the box for entire/compact signals), avoiding
    the singular set."""
    region = None if (spec.entire or spec.support is not None) else spec.region
    out = []
    while len(out) < n:
        w = from_units(*rng.uniform(-box, box, 4))
        if region is not None and region.margin(w) < margin:
            continue
        if spec.singular_set is not None and any(spec.singular_set(wk) for wk in w.pair):
            continue
        out.append(w)
    return out
