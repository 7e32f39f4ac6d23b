import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from conftest import (brute_has_clique, brute_has_k4plus, brute_has_pattern, brute_rainbow,
                      random_coloring)
from gallai_ramsey.coloring import (K2, K3, K4, K4PLUS, EdgeColoring, Pattern, TargetProfile,
                                    find_any_violation, find_mono_pattern, find_rainbow_triangle,
                                    is_gallai, naive_mono_oracle, new_complete, parse_pattern,
                                    validate_embedding)
from gallai_ramsey.construct import build_extremal
from gallai_ramsey.errors import ParameterError

PATTERNS = [K2, K3, K4, K4PLUS]


def pentagon():
    return EdgeColoring.from_function(5, 2, lambda u, v: 1 if (v - u) % 5 in (1, 4) else 2)


@st.composite
def colorings(draw, max_n=9, max_k=4):
    n = draw(st.integers(1, max_n))
    k = draw(st.integers(1, max_k))
    cols = draw(st.lists(st.integers(1, k), min_size=n * (n - 1) // 2, max_size=n * (n - 1) // 2))
    it = iter(cols)
    return EdgeColoring.from_function(n, k, lambda u, v: next(it))


def test_new_complete_basics():
    c = new_complete(4, 1, 1)
    assert all(col == 1 for _, _, col in c.edges())
    assert sum(1 for _ in c.edges()) == 6
    assert list(new_complete(1, 3, 1).edges()) == []
    k2 = new_complete(2, 2, 2)
    assert k2.color(0, 1) == 2 and k2.color(1, 0) == 2


@pytest.mark.parametrize("args", [(0, 1, 1), (3, 2, 3), (3, 2, 0), (3, 0, 1)])
def test_new_complete_rejects_bad_parameters(args):
    with pytest.raises(ParameterError):
        new_complete(*args)


def test_set_color_rejects_loops_and_range():
    c = new_complete(3, 2, 1)
    with pytest.raises(ParameterError):
        c.set_color(1, 1, 1)
    with pytest.raises(ParameterError):
        c.set_color(0, 1, 3)
    with pytest.raises(ParameterError):
        c.color(0, 3)


@given(st.integers(2, 8), st.integers(1, 4), st.lists(st.tuples(st.integers(0, 7), st.integers(0, 7), st.integers(1, 4))))
def test_symmetry_after_mutations(n, k, ops):
    c = new_complete(n, k, 1)
    for u, v, col in ops:
        if u < n and v < n and u != v and col <= k:
            c.set_color(u, v, col)
    for u in range(n):
        for v in range(n):
            if u != v:
                col = c.color(u, v)
                assert col == c.color(v, u)
                assert c.neighbors(col, u) >> v & 1
                assert all(not c.neighbors(o, u) >> v & 1 for o in range(1, k + 1) if o != col)


def test_rainbow_triangle_examples():
    c = EdgeColoring.from_function(3, 3, lambda u, v: u + v)  # 01->1, 02->2, 12->3
    assert find_rainbow_triangle(c) == (0, 1, 2)
    assert not is_gallai(c)
    rng = random.Random(1)
    for _ in range(20):
        assert find_rainbow_triangle(random_coloring(rng, 7, 2)) is None


def test_extremal_3_1_has_no_rainbow_triangle_by_enumeration():
    g, _ = build_extremal(3, 1)
    assert g.n == 16
    assert brute_rainbow(g) == []  # all C(16,3) = 560 triangles
    assert find_rainbow_triangle(g) is None


@given(colorings(max_n=8))
def test_rainbow_agrees_with_enumeration(c):
    tri = find_rainbow_triangle(c)
    found = brute_rainbow(c)
    assert (tri is None) == (not found) == is_gallai(c)
    if tri is not None:
        u, v, w = tri
        assert len({c.color(u, v), c.color(u, w), c.color(v, w)}) == 3
        assert tri == found[0]


def test_k4plus_shape():
    assert K4PLUS.m == 5 and len(K4PLUS.edges) == 7
    assert sorted(K4PLUS.degree(i) for i in range(5)) == [1, 3, 3, 3, 4]


def test_pattern_validation():
    with pytest.raises(ParameterError):
        Pattern.from_edges(3, [(0, 3)])
    with pytest.raises(ParameterError):
        Pattern.from_edges(3, [(0, 1), (1, 0)])
    with pytest.raises(ParameterError):
        Pattern.from_edges(3, [(1, 1)])
    assert parse_pattern("K4+") is K4PLUS
    assert parse_pattern("3:0-1,1-2").edges == frozenset({(0, 1), (1, 2)})


def test_mono_pattern_examples():
    assert find_mono_pattern(new_complete(4, 1, 1), K4PLUS, 1) is None
    emb = find_mono_pattern(new_complete(5, 1, 1), K4PLUS, 1)
    assert validate_embedding(new_complete(5, 1, 1), K4PLUS, 1, emb)
    assert naive_mono_oracle(new_complete(5, 1, 1), K4PLUS, 1) is not None
    c = pentagon()
    for col in (1, 2):
        assert not brute_has_clique(c, 3, col)
        assert find_mono_pattern(c, K3, col) is None
        assert naive_mono_oracle(c, K3, col) is None


def test_generic_pattern_path():
    path = Pattern.from_edges(4, [(0, 1), (1, 2), (2, 3)], "P4")
    c = pentagon()
    emb = find_mono_pattern(c, path, 1)
    assert validate_embedding(c, path, 1, emb)
    star = Pattern.from_edges(4, [(0, 1), (0, 2), (0, 3)], "S3")
    assert find_mono_pattern(c, star, 1) is None
    assert naive_mono_oracle(c, star, 1) is None


@settings(max_examples=150, deadline=None)
@given(colorings(max_n=8), st.sampled_from(PATTERNS))
def test_detector_matches_brute_force(c, p):
    for col in range(1, c.k + 1):
        emb = find_mono_pattern(c, p, col)
        naive = naive_mono_oracle(c, p, col)
        if p is K4PLUS:
            truth = brute_has_k4plus(c, col)
        else:
            truth = brute_has_clique(c, p.m, col)
        assert (emb is not None) == truth == (naive is not None)
        if emb is not None:
            assert validate_embedding(c, p, col, emb)
            assert validate_embedding(c, p, col, naive)


@settings(max_examples=60, deadline=None)
@given(colorings(max_n=7, max_k=3))
def test_generic_backtracking_matches_permutations(c):
    paw = Pattern.from_edges(4, [(0, 1), (1, 2), (0, 2), (2, 3)], "paw")
    for col in range(1, c.k + 1):
        assert (find_mono_pattern(c, paw, col) is not None) == brute_has_pattern(c, paw, col)


def test_detector_oracle_randomized_equivalence(rng):
    for _ in range(500):
        c = random_coloring(rng, 10, 3)
        for p in (K3, K4, K4PLUS):
            col = rng.randint(1, 3)
            assert (find_mono_pattern(c, p, col) is None) == (naive_mono_oracle(c, p, col) is None)


@settings(max_examples=80, deadline=None)
@given(colorings(max_n=9))
def test_monotone_under_subpatterns(c):
    for col in range(1, c.k + 1):
        if find_mono_pattern(c, K4PLUS, col) is not None:
            assert find_mono_pattern(c, K4, col) is not None
        if find_mono_pattern(c, K4, col) is not None:
            assert find_mono_pattern(c, K3, col) is not None
        if find_mono_pattern(c, K3, col) is not None:
            assert find_mono_pattern(c, K2, col) is not None


def test_find_any_violation_examples():
    g, _ = build_extremal(2, 2)
    assert find_any_violation(g, TargetProfile(2, 2)) is None
    for col in (1, 2):
        assert not brute_has_k4plus(g, col)  # over all C(17,4) = 2380 quadruples
    color, emb = find_any_violation(new_complete(3, 1, 1), TargetProfile(0, 1))
    assert color == 1 and validate_embedding(new_complete(3, 1, 1), K3, 1, emb)
    color, emb = find_any_violation(new_complete(5, 1, 1), TargetProfile(1, 1))
    assert color == 1 and validate_embedding(new_complete(5, 1, 1), K4PLUS, 1, emb)
    with pytest.raises(ParameterError):
        find_any_violation(new_complete(3, 3, 1), TargetProfile(0, 2))


def test_target_profile():
    t = TargetProfile(2, 4)
    assert [t.pattern_for(c) for c in (1, 2, 3, 4)] == [K4PLUS, K4PLUS, K3, K3]
    with pytest.raises(ParameterError):
        TargetProfile(3, 2)
