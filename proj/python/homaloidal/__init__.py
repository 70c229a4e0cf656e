"""Polar maps of plane curves over the rationals and finite fields.

Thin wrapper over the compiled extension: every operation returns the
parsed JSON report as a plain dict, so results print and diff nicely.
"""

import json

try:
    from homaloidal import _core
except ImportError:  # running against a build tree with _core on sys.path
    import _core

MathError = _core.MathError
__version__ = _core.__version__

__all__ = [
    "MathError",
    "analyze",
    "arrangement",
    "family",
    "presentation",
    "sweep",
    "verdict",
]


def _field_args(field):
    """Accept 0 (rationals), a prime p, or a (p, e) pair."""
    if isinstance(field, tuple):
        p, e = field
        return int(p), int(e)
    return int(field), 1


def analyze(poly, field=0, trials=3, seed=0):
    p, e = _field_args(field)
    return json.loads(_core.analyze(poly, p, e, trials, seed))


def family(name, n=0, field=0, slope_seed=0, allow_extension=True,
           trials=3, seed=0):
    p, e = _field_args(field)
    return json.loads(
        _core.family(name, n, p, e, slope_seed, allow_extension, trials, seed)
    )


def arrangement(lines, field=0, cross_check=False, seed=0, trials=2):
    p, e = _field_args(field)
    return json.loads(
        _core.arrangement(list(lines), p, e, cross_check, seed, trials)
    )


def sweep(field, d_lo=3, d_hi=4, sample=10, seed=0, max_subsets=200000):
    p, e = _field_args(field)
    return json.loads(_core.sweep(p, e, d_lo, d_hi, sample, seed, max_subsets))


def presentation(poly, field=0):
    p, e = _field_args(field)
    return json.loads(_core.presentation(poly, p, e))


def verdict(poly, field=0, trials=3, seed=0):
    p, e = _field_args(field)
    return json.loads(_core.verdict(poly, p, e, trials, seed))
