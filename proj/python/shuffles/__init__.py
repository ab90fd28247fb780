"""Finitely presented shuffles of the naturals and the total orders they induce."""

from ._shuffles import (
    Address,
    GroupReport,
    Shuffle,
    VerificationReport,
    compose,
    fixture,
    fixture_names,
    from_permutation,
    identity,
    invert,
    group_check,
    lex_compare,
)

__all__ = [
    "Address",
    "GroupReport",
    "Shuffle",
    "VerificationReport",
    "compose",
    "fixture",
    "fixture_names",
    "from_permutation",
    "identity",
    "invert",
    "group_check",
    "lex_compare",
]
