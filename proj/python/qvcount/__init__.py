"""Python access to the qvcount library.

Rational parameters may be given as ints, Fractions or "p/q" strings and come back as Fractions.
"""

from fractions import Fraction

from . import _qvcount as _ext
from ._qvcount import (
    DimensionError,
    DomainError,
    ParseError,
    Quiver,
    QvcountError,
    ResourceError,
    UnsupportedError,
    cb_flat,
    freudenthal_mult,
    heis_filtration_dims,
    is_extremal,
    mullineux,
    perverse_profile,
    reflect_dim,
    wallcross_map,
    weight_space_dim,
)

__all__ = [
    "DimensionError", "DomainError", "ParseError", "Quiver", "QvcountError", "ResourceError",
    "UnsupportedError", "cb_flat", "classical_walls", "freudenthal_mult", "grassmannian_singular_count",
    "heis_filtration_dims", "integral_roots", "is_extremal", "mullineux", "perverse_profile",
    "predicted_count", "quiver", "reflect_dim", "reflect_param", "rho", "run_cli",
    "singular_hyperplanes", "wallcross_map", "weight_space_dim",
]


def _q(x):
    if isinstance(x, float):
        raise TypeError("floats are not accepted; use Fraction or a 'p/q' string")
    return str(Fraction(x))


def _qs(xs):
    return [_q(x) for x in xs]


def _planes(hs):
    return [dict(h, offset=Fraction(h["offset"])) for h in hs]


def quiver(name_or_path):
    """A builtin quiver (a2, cyclic:3, jordan, ...) or one read from a file."""
    return Quiver.load(name_or_path)


def predicted_count(q, v, w, lam):
    return _ext.predicted_count(q, list(v), list(w), _qs(lam))


def integral_roots(q, lam, bound):
    return _ext.integral_roots(q, _qs(lam), list(bound))


def reflect_param(q, k, lam, v, w):
    return [Fraction(x) for x in _ext.reflect_param(q, k, _qs(lam), list(v), list(w))]


def rho(q, v, w):
    return [Fraction(x) for x in _ext.rho(q, list(v), list(w))]


def grassmannian_singular_count(v, w, lam):
    exponent, count = _ext.grassmannian_singular_count(v, w, _q(lam))
    return {"exponent": exponent, "count": count}


def classical_walls(q, v, w):
    return _planes(_ext.classical_walls(q, list(v), list(w)))


def singular_hyperplanes(q, v, w):
    return _planes(_ext.singular_hyperplanes(q, list(v), list(w)))


def run_cli(*args):
    """Runs the command line in process; returns (exit code, stdout, stderr)."""
    return _ext.run_cli([str(a) for a in args])
