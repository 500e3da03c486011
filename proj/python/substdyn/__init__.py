"""Substitution subshifts, tiling space cohomology and closed invariant subsets.

Substitutions are passed as rule text (``"a -> ab\\nb -> a"``) or as
``"corpus:NAME"`` for a built-in example. Reports come back as plain dicts.
"""

import json

from . import _core
from ._core import (
    Error,
    corpus_names,
    corpus_text,
    extend,
    is_primitive,
    iterate,
    legal_words,
    normalize,
    rules,
)

__all__ = [
    "Error",
    "analyze",
    "cis",
    "classify",
    "cohomology",
    "compare",
    "corpus_names",
    "corpus_text",
    "extend",
    "is_primitive",
    "iterate",
    "legal_words",
    "minimality",
    "normalize",
    "primitivize",
    "rules",
]


def classify(text):
    return json.loads(_core.classify_json(text))


def minimality(text):
    return json.loads(_core.minimality_json(text))


def primitivize(text, verify_depth=6):
    return json.loads(_core.primitivize_json(text, verify_depth))


def analyze(text, radius=None, max_length=None, max_edges=5000):
    return json.loads(_core.analyze_json(text, radius, max_length, max_edges))


def cohomology(text, radius=None, max_edges=5000):
    return json.loads(_core.cohomology_json(text, radius, max_edges))


def cis(text, max_edges=5000):
    return json.loads(_core.cis_json(text, max_edges))


def compare(a, b):
    return json.loads(_core.compare_json(a, b))
