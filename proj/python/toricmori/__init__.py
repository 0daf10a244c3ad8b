"""Exact toric Mori theory: fans, cones of curves, the MMP, sections and
singularities. Fans and maps are dicts in the JSON file layout; rational
numbers come back as "p/q" strings (see `to_fraction`)."""

from fractions import Fraction

from ._core import (
    InputError,
    InvariantBreach,
    PreconditionError,
    canonical_divisor,
    classify,
    corpus,
    discrepancy,
    hilbert,
    is_pseudo_effective,
    ne_cone,
    newton_model,
    qfactorialize,
    resolve,
    run_mmp,
    sections,
    validate_fan,
    zariski,
)


def to_fraction(x):
    """Converts a "p/q" string, or a list of them, to Fraction."""
    if isinstance(x, list):
        return [to_fraction(y) for y in x]
    return Fraction(x)


def point_map(fan):
    """The map from `fan` to a point."""
    return {"matrix": [], "source": fan, "target": {"rank": 0, "rays": [], "cones": [[]]}}
