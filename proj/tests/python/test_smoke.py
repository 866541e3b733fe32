from fractions import Fraction

import pytest

import pokertopo


def test_cards_and_pairs():
    assert pokertopo.card_index("2c") == 0
    assert pokertopo.card_index("As") == 51
    assert pokertopo.pair_index("2c2d") == 0
    assert pokertopo.pair_label("3c5c") == "5c3c"
    with pytest.raises(ValueError):
        pokertopo.card_index("1x")


def test_evaluate():
    name, tiebreak, _ = pokertopo.evaluate("Ac2d3h4s5c")
    assert name == "straight"
    assert tiebreak == [5]
    assert pokertopo.evaluate("AsAhAdAcKsKh2c")[0] == "quads"


def test_matchup_and_probability():
    w, t, l = pokertopo.matchup("Ac2c", "3c5c")
    assert (w, t, l) == (1005468, 12168, 694668)
    assert pokertopo.win_probability(w, t, l) == Fraction(1011552, 1712304)
    assert pokertopo.win_probability(w, t, l, "strict-win") == Fraction(1005468, 1712304)
    with pytest.raises(ValueError):
        pokertopo.matchup("AcKd", "AcQh")


def test_triangle_pipeline():
    hands = ["Ac2c", "3c5c", "2d2h"]
    edges = pokertopo.relation(hands)
    assert {(u, v) for u, v, _ in edges} == {("Ac2c", "5c3c"), ("5c3c", "2d2h"), ("2d2h", "Ac2c")}
    faces = pokertopo.order_complex([(u, v) for u, v, _ in edges])
    assert len(faces) == 3
    assert pokertopo.homology(faces)["betti"] == [0, 1]
    assert pokertopo.hand_set_homology(hands)["betti"] == [0, 1]
    loops = [p for p in pokertopo.persistence(hands) if p[0] == 1]
    assert loops == [(1, Fraction(431111, 856152), Fraction(1, 2))]


def test_penney():
    assert pokertopo.penney_probability("100", "000") == Fraction(7, 8)
    assert pokertopo.penney_homology(3)["betti"] == [0, 3, 0]


def test_sampling_is_deterministic():
    assert pokertopo.sample_hand_set(1.0)[:2] == ["2c2d", "2h2s"]
    assert pokertopo.sample_hand_set(0.5, 7, 3) == pokertopo.sample_hand_set(0.5, 7, 3)


def test_verify_subset():
    results = pokertopo.verify([7, 9])
    assert [r[0] for r in results] == [7, 9]
    assert all(r[2] for r in results)
