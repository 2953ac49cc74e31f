import pytest
from hypothesis import given
from hypothesis import strategies as st

from hypcolor import cosets
from hypcolor.cosets import Presentation, coxeter_presentation, todd_coxeter
from hypcolor.permgroup import PermutationGroup


def dihedral(n):
    return coxeter_presentation({(0, 1): n}, "ab")


def brute_cayley_size(gens_perms):
    """Order of the group generated by explicit permutations."""
    n = len(gens_perms[0])
    seen = {tuple(range(n))}
    frontier = list(seen)
    while frontier:
        nxt = []
        for x in frontier:
            for g in gens_perms:
                y = tuple(g[i] for i in x)
                if y not in seen:
                    seen.add(y)
                    nxt.append(y)
        frontier = nxt
    return len(seen)


@given(st.integers(2, 12))
def test_dihedral_regular_representation(n):
    t = todd_coxeter(dihedral(n))
    assert t.index == 2 * n
    assert brute_cayley_size(t.permutations()) == 2 * n


@pytest.mark.parametrize(
    "labels, names, order",
    [
        ({(0, 1): 3}, "ab", 6),
        ({(0, 1): 3, (1, 2): 3}, "abc", 24),  # A3 = S4
        ({(0, 1): 5, (1, 2): 3}, "abc", 120),  # H3
        ({(0, 1): 4, (1, 2): 3}, "abc", 48),  # B3
        ({(0, 1): 3, (1, 2): 3, (2, 3): 3}, "abcd", 120),  # A4 = S5
    ],
)
def test_finite_coxeter_orders(labels, names, order):
    t = todd_coxeter(coxeter_presentation(labels, names))
    assert t.index == order
    assert PermutationGroup(t.permutations()).order() == order


def test_subgroup_index_matches_orbit():
    # H3 modulo the parabolic <b, c> (order 6) has index 20
    t = todd_coxeter(coxeter_presentation({(0, 1): 5, (1, 2): 3}, "abc"), ("b", "c"))
    assert t.index == 20
    assert PermutationGroup(t.permutations()).order() == 120


def test_table_is_standardized_and_consistent():
    t = todd_coxeter(coxeter_presentation({(0, 1): 3, (1, 2): 3}, "abc"), ("a",))
    assert t.index == 12
    assert t.apply_word(0, "a") == 0
    for c in range(t.index):
        assert t.apply_word(c, "aa") == c
        for rel in ("ababab", "bcbcbc", "acac"):
            assert t.apply_word(c, rel) == c
        assert t.apply_word(t.apply_word(c, "abc"), "CBA") == c


def test_same_table_without_lookahead():
    pres = coxeter_presentation({(0, 1): 5, (1, 2): 3}, "abc")
    assert todd_coxeter(pres, lookahead=False).action == todd_coxeter(pres).action


def test_overflow_is_reported():
    with pytest.raises(cosets.EnumerationOverflow):
        todd_coxeter(coxeter_presentation({(0, 1): 5, (1, 2): 3}, "abc"), max_cosets=50)


def test_infinite_label_drops_relation():
    pres = coxeter_presentation({(0, 1): float("inf")}, "ab")
    assert pres.relators == ("aa", "bb")


def test_bad_presentations():
    with pytest.raises(ValueError):
        Presentation(("a", "a"), ())
    with pytest.raises(ValueError):
        Presentation(("a",), ("ab",))
    with pytest.raises(ValueError):
        Presentation(("A",), ())


def test_long_group_indices():
    pres = cosets.long_presentation()
    assert todd_coxeter(pres, ("a", "c", "e", "decd", "bacbab")).index == 85
    assert todd_coxeter(pres, ("ac", "ae", "decd", "bacbab")).index == 170
