import itertools
import json
import random

import pytest

from borelschur import posetrep
from borelschur.posetrep import (
    NAZAROVA_PATTERNS,
    Poset,
    chain,
    chains,
    disjoint_union,
    from_json,
    gamma_M,
    nazarova_wild,
    poset_n,
)


def brute_force_width(poset):
    best = 0
    for size in range(len(poset), 0, -1):
        for combo in poset.antichains_of_size(size):
            return size
    return best


def random_poset(rng, n):
    elements = tuple(range(n))
    relation = [[False] * n for _ in range(n)]
    for a in range(n):
        for b in range(a + 1, n):
            if rng.random() < 0.3:
                relation[a][b] = True
    for k in range(n):  # transitive closure (indices respect a topological order)
        for a in range(n):
            if relation[a][k]:
                for b in range(n):
                    if relation[k][b]:
                        relation[a][b] = True
    covers = [
        (a, b)
        for a in range(n)
        for b in range(n)
        if relation[a][b]
        and not any(relation[a][c] and relation[c][b] for c in range(n))
    ]
    return Poset(elements, tuple(covers))


# ---------------------------------------------------------------------------
# construction


def test_rejects_cycle():
    with pytest.raises(ValueError):
        Poset((1, 2), ((1, 2), (2, 1)))


def test_rejects_redundant_cover():
    with pytest.raises(ValueError):
        Poset((1, 2, 3), ((1, 2), (2, 3), (1, 3)))


def test_rejects_unknown_elements():
    with pytest.raises(ValueError):
        Poset((1, 2), ((1, 3),))


def test_leq_and_sets():
    p = Poset((1, 2, 3, 4), ((1, 2), (2, 3), (2, 4)))
    assert p.leq(1, 3) and p.leq(1, 4) and not p.leq(3, 4)
    assert p.up_set(2) == {2, 3, 4}
    assert p.down_set(4) == {1, 2, 4}


# ---------------------------------------------------------------------------
# width


def test_width_examples():
    assert chain(100).width()[0] == 1
    assert chains(1, 1, 1).width()[0] == 3
    n_width, antichain = poset_n().width()
    assert n_width == 2


def test_width_matches_brute_force_on_random_posets():
    rng = random.Random(23)
    for _ in range(40):
        p = random_poset(rng, rng.randint(1, 9))
        width, antichain = p.width()
        assert width == brute_force_width(p)
        assert all(
            not p.comparable(a, b) for a, b in itertools.combinations(antichain, 2)
        )


def test_gamma_m_width_unique_antichain():
    gm = gamma_M()
    width, antichain = gm.width()
    assert width == 4
    assert set(antichain) == {14, 15, 16, 17}
    assert list(gm.antichains_of_size(4)) == [(14, 15, 16, 17)]
    assert not list(gm.antichains_of_size(5))


# ---------------------------------------------------------------------------
# full subposet search


def test_identity_embedding():
    gm = gamma_M()
    assert gm.contains_full_subposet(gm) is not None
    assert gm.contains_full_subposet(chain(1)) is not None


def test_contains_reflects_incomparability():
    # a 2-chain is NOT a full subposet of a 2-antichain and vice versa
    assert chains(1, 1).contains_full_subposet(chain(2)) is None
    assert chain(2).contains_full_subposet(chains(1, 1)) is None


def test_nazarova_patterns_are_wild_for_themselves():
    for name, pattern in NAZAROVA_PATTERNS:
        wild, witness = nazarova_wild(pattern)
        assert wild and witness[0] == name


def test_nazarova_chain_not_wild():
    assert nazarova_wild(chain(100)) == (False, None)


def test_gamma_m_not_wild():
    assert nazarova_wild(gamma_M()) == (False, None)


def test_wildness_monotone_under_full_inclusion():
    rng = random.Random(5)
    gm = gamma_M()
    for _ in range(25):
        size = rng.randint(4, 14)
        subset = rng.sample(gm.elements, size)
        smaller = gm.induced(subset)
        if nazarova_wild(smaller)[0]:
            assert nazarova_wild(gm)[0]
        sub2 = smaller.induced(rng.sample(smaller.elements, max(1, size - 3)))
        if nazarova_wild(sub2)[0]:
            assert nazarova_wild(smaller)[0]


def test_some_wild_posets_detected():
    assert nazarova_wild(chains(1, 1, 1, 1, 1))[0]
    big = disjoint_union(poset_n(), chain(5), chain(2))
    wild, witness = nazarova_wild(big)
    assert wild


# ---------------------------------------------------------------------------
# complements, hulls, triples on the bundled poset


GAMMA_COMPLEMENTS = {
    # vertical triples
    (5, 8, 11): {4, 6, 7, 10},
    (6, 9, 12): {7, 11, 14},
    (7, 10, 13): {8, 11, 12, 14, 15, 18},
    (8, 11, 14): {4, 6, 7, 9, 10, 13, 17},
    (9, 12, 15): {7, 10, 14},
    (10, 13, 16): {11, 14, 15, 18},
    # diagonal triples
    (15, 19, 21): {14, 22, 24},
    (16, 20, 22): {11, 14, 15, 18},
    (20, 22, 24): {11, 14, 15, 18, 19},
    (19, 21, 23): {14, 18, 24},
    # triples at the edge
    (10, 13, 17): {8, 11, 12, 14, 15, 18},
    (17, 20, 22): {11, 14, 15, 18, 19},
    (21, 23, 25): {14, 18, 24},
    # four-element convex hulls
    (11, 14, 15, 18): {7, 10, 13, 16, 17, 20, 22, 24},
    (13, 16, 17, 20): {11, 14, 15, 18},
    (12, 15, 16, 19): {14, 17},
}


def test_gamma_m_displayed_complements():
    gm = gamma_M()
    for subset, expected in GAMMA_COMPLEMENTS.items():
        got = gm.incomparable_complement(subset)
        assert set(got.elements) == expected, subset


def test_gamma_m_complement_relations():
    gm = gamma_M()
    c = gm.incomparable_complement((5, 8, 11))
    assert c.leq(4, 6) and c.leq(4, 7) and c.leq(6, 10) and c.leq(7, 10)
    assert not c.comparable(6, 7)
    c2 = gm.incomparable_complement((6, 9, 12))
    assert c2.leq(11, 14) and not c2.comparable(7, 11)


def test_empty_complement_subset():
    gm = gamma_M()
    assert set(gm.incomparable_complement(()).elements) == set(gm.elements)


def test_n_copies_complements():
    gm = gamma_M()
    assert set(gm.incomparable_complement((14, 15, 18, 19)).elements) == {17, 20, 22, 24}
    assert set(gm.incomparable_complement((11, 12, 14, 15)).elements) == {7, 10, 13, 17}


def test_convex_hull():
    gm = gamma_M()
    assert set(gm.convex_hull((11, 18))) == {11, 14, 15, 18}
    antichain = (14, 15, 16, 17)
    assert set(gm.convex_hull(antichain)) == set(antichain)


def test_complement_equals_hull_complement():
    gm = gamma_M()
    rng = random.Random(11)
    for _ in range(200):
        size = rng.randint(1, 6)
        subset = tuple(rng.sample(gm.elements, size))
        hull = gm.convex_hull(subset)
        left = set(gm.incomparable_complement(subset).elements)
        right = set(gm.incomparable_complement(hull).elements)
        assert left == right


def test_minimal_triples():
    gm = gamma_M()
    triples = set(gm.minimal_triples())
    for expected in [(10, 13, 17), (17, 20, 22), (21, 23, 25), (5, 8, 11),
                     (6, 9, 12), (7, 10, 13), (8, 11, 14), (9, 12, 15), (10, 13, 16)]:
        assert expected in triples
    assert chain(3).minimal_triples() == [(("c", 0), ("c", 1), ("c", 2))]


def test_induced_poset_recovers_covers():
    gm = gamma_M()
    sub = gm.induced([1, 3, 5, 8])
    assert set(sub.covers) == {(1, 3), (3, 5), (5, 8)}


# ---------------------------------------------------------------------------
# serialization


def test_json_roundtrip():
    gm = gamma_M()
    again = from_json(json.loads(json.dumps(gm.to_json())))
    assert again.elements == gm.elements and again.covers == gm.covers


def test_to_dot():
    dot = chain(3).to_dot()
    assert dot.startswith("digraph") and dot.count("->") == 2
