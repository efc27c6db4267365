from fractions import Fraction
from itertools import combinations, product
from math import cos, pi, sin

import pytest
from hypothesis import given, strategies as st

from qsymtri.combinatorics import (
    DyckPath,
    InvalidDyckPath,
    InvalidTriangulation,
    Negative,
    Positive,
    Triangulation,
    all_diagonals,
    catalan,
    crossing,
    decompose_irreducible,
    enumerate_dyck_paths,
    enumerate_triangulations,
    fan,
    initial_ascent,
    reflect_triangulation,
)

SAMPLE = Triangulation.of(5, [Positive(1, 1), Negative(2), Positive(3, 3), Positive(3, 5), Positive(5, 5)])


# ---- oracles -----------------------------------------------------------------

def _vertex_xy(n, name):
    # counterclockwise: H, B, v_n, ..., v_0 on the unit circle
    cycle = ["H", "B"] + [f"v{k}" for k in range(n, -1, -1)]
    angle = 2 * pi * cycle.index(name) / len(cycle)
    return (cos(angle), sin(angle))


def _names(d, n):
    if isinstance(d, Negative):
        return ("H", f"v{d.k}")
    end = "B" if d.j + 1 == n + 1 else f"v{d.j + 1}"
    return (f"v{d.i - 1}", end)


def _orient(p, q, r):
    v = (q[0] - p[0]) * (r[1] - p[1]) - (q[1] - p[1]) * (r[0] - p[0])
    return 0 if abs(v) < 1e-12 else (1 if v > 0 else -1)


def geometric_crossing(d1, d2, n):
    """Proper segment intersection on an actual regular polygon."""
    a, b = (_vertex_xy(n, v) for v in _names(d1, n))
    c, d = (_vertex_xy(n, v) for v in _names(d2, n))
    if set(_names(d1, n)) & set(_names(d2, n)):
        return False
    return _orient(a, b, c) * _orient(a, b, d) < 0 and _orient(c, d, a) * _orient(c, d, b) < 0


def brute_force_triangulations(n):
    diags = all_diagonals(n)
    found = []
    for subset in combinations(diags, n):
        if not any(crossing(x, y) for x, y in combinations(subset, 2)):
            found.append(tuple(sorted(d.key for d in subset)))
    return sorted(found)


def brute_force_dyck(n):
    out = []
    for word in product("UD", repeat=2 * n + 2):
        h = 0
        ok = True
        for s in word:
            h += 1 if s == "U" else -1
            ok &= h >= 0
        if ok and h == 0:
            out.append("".join(word))
    return out


# ---- catalan -------------------------------------------------------------------

@pytest.mark.parametrize("m, expected", [(1, 1), (3, 5), (6, 132)])
def test_catalan_examples(m, expected):
    assert catalan(m) == expected


def test_catalan_matches_rational_formula_and_brute_force():
    from math import comb

    for m in range(1, 9):
        assert catalan(m) == Fraction(comb(2 * m, m), m + 1)
    # m=6 by counting balanced words directly
    assert len(brute_force_dyck(5)) == 132


# ---- crossing ------------------------------------------------------------------

def test_crossing_examples():
    assert crossing(Negative(2), Positive(1, 3))
    assert not crossing(Negative(2), Positive(3, 3))
    # v_0 v_2 against v_1 v_4: endpoints interleave
    assert crossing(Positive(1, 1), Positive(2, 3))
    assert geometric_crossing(Positive(1, 1), Positive(2, 3), 3)
    # v_0 v_2 against v_2 v_4: shared endpoint only
    assert not crossing(Positive(1, 1), Positive(3, 3))
    assert not geometric_crossing(Positive(1, 1), Positive(3, 3), 3)


@pytest.mark.parametrize("n", range(1, 7))
def test_crossing_agrees_with_geometry(n):
    for d1, d2 in combinations(all_diagonals(n), 2):
        assert crossing(d1, d2) == geometric_crossing(d1, d2, n), (d1, d2)
        assert crossing(d1, d2) == crossing(d2, d1)


def test_positive_pair_interleaving_rule():
    n = 6
    for d1, d2 in combinations([d for d in all_diagonals(n) if isinstance(d, Positive)], 2):
        i, j, i2, j2 = d1.i, d1.j, d2.i, d2.j
        rule = (i < i2 <= j + 1 and j < j2) or (i2 < i <= j2 + 1 and j2 < j)
        assert crossing(d1, d2) == rule


# ---- triangulations ------------------------------------------------------------

def test_enumerate_small():
    assert enumerate_triangulations(0) == [Triangulation(0, ())]
    assert enumerate_triangulations(1) == [
        Triangulation.of(1, [Negative(1)]),
        Triangulation.of(1, [Positive(1, 1)]),
    ]
    assert len(enumerate_triangulations(2)) == 5


@pytest.mark.parametrize("n", range(0, 6))
def test_enumerate_matches_brute_force(n):
    assert [t.key for t in enumerate_triangulations(n)] == brute_force_triangulations(n)


@pytest.mark.parametrize("n", range(0, 9))
def test_counts_are_catalan(n):
    ts = enumerate_triangulations(n)
    assert len(ts) == len(set(ts)) == catalan(n + 1)
    assert len(enumerate_dyck_paths(n)) == catalan(n + 1)


@pytest.mark.parametrize("n", range(0, 6))
def test_triangulations_are_maximal(n):
    diags = all_diagonals(n)
    for t in enumerate_triangulations(n):
        for extra in diags:
            if extra not in t:
                assert any(crossing(extra, d) for d in t.diagonals)


def test_canonical_order_is_sorted():
    keys = [t.key for t in enumerate_triangulations(4)]
    assert keys == sorted(keys)


@pytest.mark.parametrize(
    "n, diags, message",
    [
        (2, [Negative(1), Positive(1, 2)], "crossing"),
        (2, [Negative(1)], "2 diagonals"),
        (2, [Negative(3), Negative(1)], "out of range"),
        (2, [Positive(2, 1), Negative(1)], "out of range"),
        (2, [Negative(1), Negative(1)], "duplicate"),
        (-1, [], "non-negative"),
    ],
)
def test_invalid_triangulations(n, diags, message):
    with pytest.raises(InvalidTriangulation, match=message):
        Triangulation.of(n, diags)


def test_json_roundtrip():
    data = SAMPLE.to_json()
    assert data == {"n": 5, "diagonals": [["N", 2], ["P", 1, 1], ["P", 3, 3], ["P", 3, 5], ["P", 5, 5]]}
    assert Triangulation.from_json(data) == SAMPLE
    assert Triangulation.from_json('[["P",1,1],["N",2],["P",3,3],["P",3,5],["P",5,5]]', n=5) == SAMPLE
    with pytest.raises(InvalidTriangulation):
        Triangulation.from_json('[["Q", 1]]', n=1)
    with pytest.raises(InvalidTriangulation):
        Triangulation.from_json("[[", n=1)


@pytest.mark.parametrize("n", range(0, 7))
def test_json_roundtrip_exhaustive(n):
    for t in enumerate_triangulations(n):
        assert Triangulation.from_json(t.to_json()) == t


# ---- reflection ----------------------------------------------------------------

def test_reflect_examples():
    for n in range(0, 6):
        assert reflect_triangulation(fan(n)) == fan(n)
    t = Triangulation.of(2, [Negative(1), Positive(2, 2)])
    assert reflect_triangulation(t) == Triangulation.of(2, [Negative(2), Positive(1, 1)])


@pytest.mark.parametrize("n", range(0, 6))
def test_reflect_is_involution(n):
    for t in enumerate_triangulations(n):
        r = reflect_triangulation(t)
        assert reflect_triangulation(r) == t
        assert len(r.positives) == len(t.positives)


# ---- Dyck paths ----------------------------------------------------------------

def test_enumerate_dyck_examples():
    assert [p.steps for p in enumerate_dyck_paths(0)] == ["UD"]
    assert {p.steps for p in enumerate_dyck_paths(1)} == {"UUDD", "UDUD"}
    assert len(enumerate_dyck_paths(2)) == 5


@pytest.mark.parametrize("n", range(0, 6))
def test_enumerate_dyck_matches_brute_force(n):
    assert sorted(p.steps for p in enumerate_dyck_paths(n)) == sorted(brute_force_dyck(n))


@pytest.mark.parametrize("bad", ["", "DU", "UUD", "UDD", "UXD", "UDDU"])
def test_invalid_dyck(bad):
    with pytest.raises(InvalidDyckPath):
        DyckPath(bad)


@pytest.mark.parametrize("steps, expected", [("UD", 1), ("UUDD", 2), ("UUDUDDUUDDUD", 2)])
def test_initial_ascent(steps, expected):
    assert initial_ascent(DyckPath(steps)) == expected


@pytest.mark.parametrize(
    "steps, expected",
    [
        ("UDUD", ["UD", "UD"]),
        ("UUDD", ["UUDD"]),
        ("UUDUDDUUDDUD", ["UUDUDD", "UUDD", "UD"]),
    ],
)
def test_decompose_irreducible(steps, expected):
    assert [p.steps for p in decompose_irreducible(DyckPath(steps))] == expected


@given(st.integers(0, 6).flatmap(lambda n: st.sampled_from(enumerate_dyck_paths(n))))
def test_decompose_properties(path):
    parts = decompose_irreducible(path)
    assert "".join(p.steps for p in parts) == path.steps
    for p in parts:
        heights = []
        h = 0
        for s in p.steps:
            h += 1 if s == "U" else -1
            heights.append(h)
        assert 0 not in heights[:-1]
