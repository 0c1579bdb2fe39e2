"""Exact arithmetic in the algebra of braids and ties."""

from ._core import (
    Element,
    ParseError,
    SizeMismatch,
    basis,
    dim,
    e_set,
    epsilon,
    faithfulness,
    flip,
    form,
    gen,
    gram_rank,
    labels,
    moebius,
    one,
    parse,
    quotient_checks,
    specht,
    specht_dim,
    star,
    verify_relations,
    verify_tensor_relations,
)

__all__ = [
    "Element",
    "ParseError",
    "SizeMismatch",
    "basis",
    "dim",
    "e_set",
    "epsilon",
    "faithfulness",
    "flip",
    "form",
    "gen",
    "gram_rank",
    "labels",
    "moebius",
    "one",
    "parse",
    "quotient_checks",
    "specht",
    "specht_dim",
    "star",
    "verify_relations",
    "verify_tensor_relations",
]
