"""Exact computations on cones of symmetric forms.

Rational inputs may be int, str ("p/q") or fractions.Fraction; rational
outputs are fractions.Fraction. Structured results come back as dicts whose
rational fields stay strings, exactly as the JSON output of the CLI.
"""

import json
from fractions import Fraction

from . import _core
from ._core import DomainError, HypothesisError, MembershipError

__all__ = [
    "DomainError",
    "HypothesisError",
    "MembershipError",
    "identity_ids",
    "check_identity",
    "sweep_identities",
    "family_names",
    "evaluate",
    "psd_check",
    "spec_ids",
    "certify",
    "sos_obstruction",
    "discriminant",
    "cross_section",
    "extremal_atlas",
    "pF",
    "delta",
    "xi",
]


def _q(x):
    if isinstance(x, Fraction):
        return f"{x.numerator}/{x.denominator}"
    if isinstance(x, (int, str)):
        return str(x)
    raise TypeError(f"expected int, str or Fraction, got {type(x).__name__}")


def _params(params):
    return {k: _q(v) for k, v in params.items()}


def _vec(xs):
    return [_q(x) for x in xs]


identity_ids = _core.identity_ids
family_names = _core.family_names
spec_ids = _core.spec_ids


def check_identity(identity, **params):
    return json.loads(_core.check_identity(identity, _params(params)))


def sweep_identities(ids, samples=50, seed=20260101, workers=1):
    if isinstance(ids, str):
        ids = [ids]
    return json.loads(_core.sweep_identities(list(ids), samples, seed, workers))


def evaluate(family, point, **params):
    return Fraction(_core.evaluate(family, _params(params), _vec(point)))


def psd_check(family, **params):
    return json.loads(_core.psd_check(family, _params(params)))


def certify(spec, **params):
    return json.loads(_core.certify(spec, _params(params)))


def sos_obstruction(spec, **params):
    return json.loads(_core.sos_obstruction(spec, _params(params)))


def discriminant(which, coords):
    return Fraction(_core.discriminant(which, _vec(coords)))


def cross_section(t, samples=5):
    return json.loads(_core.cross_section(_q(t), samples))


def extremal_atlas(t_values=(), u_samples=0):
    return json.loads(_core.extremal_atlas(_vec(t_values), u_samples))


def pF(point, w):
    return [Fraction(x) for x in _core.pF(_vec(point), _q(w))]


def delta(i, point, w):
    return Fraction(_core.delta(i, _vec(point), _q(w)))


def xi(point, w):
    return Fraction(_core.xi(_vec(point), _q(w)))
