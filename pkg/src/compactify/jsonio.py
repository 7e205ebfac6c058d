"""JSON encoding of exact weights and canonical document output."""
from __future__ import annotations

import json
from fractions import Fraction

SCHEMA = "compactify/1"


def scalar_json(x):
    x = Fraction(x)
    return x.numerator if x.denominator == 1 else f"{x.numerator}/{x.denominator}"


def weight_json(w) -> list:
    return [scalar_json(x) for x in w]


def weights_json(ws) -> list:
    return [weight_json(w) for w in ws]


def weight_from_json(data) -> tuple:
    from .cartan import normalize
    return normalize(Fraction(x) for x in data)


def dumps(doc: dict, pretty: bool = False) -> str:
    body = {"schema": SCHEMA}
    body.update(doc)
    if pretty:
        return json.dumps(body, indent=2, sort_keys=True)
    return json.dumps(body, sort_keys=True, separators=(",", ":"))


def canonical(text: str) -> str:
    """Whitespace-insensitive canonical form for comparing JSON documents."""
    return json.dumps(json.loads(text), sort_keys=True, separators=(",", ":"))
