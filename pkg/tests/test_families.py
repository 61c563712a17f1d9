import itertools
import math
import random

import pytest
from hypothesis import given, strategies as st

from shadowbound.families import (SetFamily, bits, canonical_family, format_family, link, min_degree,
                                  parse_family, relabel_family, shadow, to_mask)


@st.composite
def families(draw, max_n=7, ks=(3, 4)):
    n = draw(st.integers(min(ks), max_n))
    k = draw(st.sampled_from([k for k in ks if k <= n]))
    combos = list(itertools.combinations(range(n), k))
    chosen = draw(st.lists(st.sampled_from(combos), unique=True, max_size=len(combos)))
    return SetFamily.from_sets(n, k, chosen)


def test_bits_and_mask():
    assert list(bits(0b101001)) == [0, 3, 5]
    assert to_mask([0, 3, 5]) == 0b101001


def test_shadow_of_complete_triples():
    F = SetFamily.complete(4, 3)
    S = shadow(F)
    assert S.k == 2 and len(S) == 6
    assert S == SetFamily.complete(4, 2)


def test_shadow_single_edge():
    F = SetFamily.from_sets(5, 3, [(0, 2, 4)])
    assert shadow(F).tuples() == [(0, 2), (0, 4), (2, 4)]


def test_link_and_degree():
    F = SetFamily.from_sets(5, 3, [(0, 1, 2), (0, 3, 4), (1, 2, 3)])
    assert link(F, 0).tuples() == [(1, 2), (3, 4)]
    assert F.degree(0) == 2
    assert min_degree(F) == 1
    assert min_degree(SetFamily.complete(6, 3)) == math.comb(5, 2)


def test_validation():
    with pytest.raises(ValueError):
        SetFamily.from_sets(4, 3, [(0, 1, 4)])
    with pytest.raises(ValueError):
        SetFamily.from_sets(4, 3, [(0, 1)])
    with pytest.raises(ValueError):
        SetFamily.from_sets(4, 3, [(0, 1, 1)])
    with pytest.raises(ValueError):
        link(SetFamily.complete(4, 3), 4)
    with pytest.raises(ValueError):
        shadow(SetFamily.complete(4, 1))


@given(families())
def test_shadow_is_sum_of_link_shadows(F):
    total = sum(len(shadow(link(F, x))) for x in range(F.n))
    assert total == (F.k - 1) * len(shadow(F))


@given(families())
def test_shadow_contains_exactly_the_subsets(F):
    expected = {frozenset(s) for e in F.tuples() for s in itertools.combinations(e, F.k - 1)}
    assert {frozenset(s) for s in shadow(F).tuples()} == expected


@given(families())
def test_text_round_trip(F):
    assert parse_family(format_family(F)) == F


def test_family_file_format():
    F = SetFamily.from_sets(4, 3, [(1, 2, 3), (0, 1, 2)])
    assert format_family(F) == "4 3\n0 1 2\n1 2 3\n"
    with pytest.raises(ValueError):
        parse_family("0 1 2\n")


@given(families(max_n=6), st.randoms(use_true_random=False))
def test_canonical_family_is_invariant(F, rnd):
    perm = list(range(F.n))
    rnd.shuffle(perm)
    G = relabel_family(F, perm)
    assert canonical_family(G) == canonical_family(F)
    assert len(shadow(G)) == len(shadow(F))


def test_canonical_family_separates():
    path = SetFamily.from_sets(5, 3, [(0, 1, 2), (2, 3, 4)])
    star = SetFamily.from_sets(5, 3, [(0, 1, 2), (1, 2, 3)])
    assert canonical_family(path) != canonical_family(star)


def test_relabel_family():
    F = SetFamily.from_sets(4, 3, [(0, 1, 2)])
    assert relabel_family(F, [3, 2, 1, 0]).tuples() == [(1, 2, 3)]


def test_large_n_uses_same_encoding():
    rnd = random.Random(1)
    F = SetFamily.from_sets(200, 3, [rnd.sample(range(200), 3) for _ in range(50)])
    assert len(shadow(F)) <= 150
    assert parse_family(format_family(F)) == F
