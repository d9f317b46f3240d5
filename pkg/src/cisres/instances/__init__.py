"""Concrete commutative idempotent semirings and a tag-based factory."""

from __future__ import annotations

from ..errors import InvalidParameterError
from ..semiring import Semiring
from .boolean import Boolean
from .cofinite import Cofinite
from .ideals import PrincipalIdeals
from .polygon import ConvexPolygon
from .powerset import PowerSet, parse_universe
from .sequences import Sequences
from .termset import TermSet
from .tropical import Tropical

__all__ = [
    "Boolean", "Cofinite", "ConvexPolygon", "PowerSet", "PrincipalIdeals",
    "Sequences", "TermSet", "Tropical", "INSTANCE_TAGS", "make_instance",
    "standard_instances",
]

INSTANCE_TAGS = ("boolean", "tropical", "powerset", "cofinite", "polygon",
                 "sequences", "ideals", "termset")

_ALIASES = {"power-set": "powerset", "topology": "cofinite", "compact-convex": "polygon",
            "convex": "polygon", "sequence": "sequences", "ideal": "ideals",
            "terms": "termset", "term-set": "termset", "bool": "boolean"}


def _int(params, key, default=None):
    v = params.pop(key, default)
    if v is None:
        raise InvalidParameterError(f"missing parameter {key!r}")
    try:
        return int(v)
    except (TypeError, ValueError) as exc:
        raise InvalidParameterError(f"parameter {key!r} must be an integer, got {v!r}") from exc


def make_instance(tag: str, **params) -> Semiring:
    """Build a semiring handle from its tag and parameters.

    >>> make_instance("tropical").one
    CisValue(tropical, 0)
    """
    tag = _ALIASES.get(tag.lower(), tag.lower())
    params = dict(params)
    if tag == "boolean":
        inst: Semiring = Boolean()
    elif tag == "tropical":
        inst = Tropical()
    elif tag == "powerset":
        if "universe" not in params:
            raise InvalidParameterError("powerset needs a 'universe' parameter")
        inst = PowerSet(parse_universe(params.pop("universe")))
    elif tag == "cofinite":
        inst = Cofinite()
    elif tag == "polygon":
        inst = ConvexPolygon()
    elif tag == "sequences":
        inner = params.pop("inner", "boolean")
        inner_params = params.pop("inner_params", {}) or {}
        if not isinstance(inner, Semiring):
            if str(inner).lower() in ("sequences", "sequence"):
                raise InvalidParameterError("nested sequence instances are not supported")
            inner = make_instance(str(inner), **inner_params)
        length = _int(params, "length", params.pop("L", 16))
        inst = Sequences(inner, length)
    elif tag == "ideals":
        inst = PrincipalIdeals()
    elif tag == "termset":
        inst = TermSet(_int(params, "m"), _int(params, "n"))
    else:
        raise InvalidParameterError(f"unknown instance tag {tag!r}")
    if params:
        raise InvalidParameterError(f"unexpected parameters for {tag}: {sorted(params)}")
    return inst


def standard_instances() -> list[Semiring]:
    """One handle per carrier with modest parameters, for sweeps."""
    return [
        Boolean(),
        Tropical(),
        make_instance("powerset", universe="1..5"),
        Cofinite(),
        ConvexPolygon(),
        Sequences(Boolean(), 16),
        Sequences(Tropical(), 4),
        PrincipalIdeals(),
        TermSet(2, 2),
    ]
