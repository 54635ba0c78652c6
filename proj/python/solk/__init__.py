"""Exact K-theory of one-dimensional solenoids and SFT dimension groups."""

import json

from ._solk import (
    ParseError,
    Presentation,
    SolkError,
    classify_limit,
    cokernel,
    kernel_basis,
    parse_presentation,
    smith_normal_form,
)
from . import _solk

__all__ = [
    "ParseError",
    "Presentation",
    "SolkError",
    "classes",
    "classify_limit",
    "cokernel",
    "kernel_basis",
    "ktheory",
    "limit",
    "parse_presentation",
    "sft",
    "smith_normal_form",
    "validate",
]


def _presentation(p):
    return parse_presentation(p) if isinstance(p, str) else p


def validate(p):
    return json.loads(_solk._validate_json(_presentation(p)))


def classes(p, order="lex"):
    return json.loads(_solk._classes_json(_presentation(p), order))


def ktheory(p, order="lex"):
    return json.loads(_solk._ktheory_json(_presentation(p), order))


def limit(matrix):
    return json.loads(_solk._limit_json(matrix))


def sft(matrix):
    return json.loads(_solk._sft_json(matrix))
