"""Exact heads-up hold'em equities and the topology of the beats relation."""

from ._core import (
    DataError,
    ParseError,
    card_index,
    evaluate,
    hand_set_homology,
    homology,
    matchup,
    order_complex,
    pair_index,
    pair_label,
    penney_homology,
    penney_probability,
    persistence,
    relation,
    sample_hand_set,
    verify,
    win_probability,
)

__all__ = [
    "DataError",
    "ParseError",
    "card_index",
    "evaluate",
    "hand_set_homology",
    "homology",
    "matchup",
    "order_complex",
    "pair_index",
    "pair_label",
    "penney_homology",
    "penney_probability",
    "persistence",
    "relation",
    "sample_hand_set",
    "verify",
    "win_probability",
]
