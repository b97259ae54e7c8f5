import io

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from rainbowmatch.generators import (
    GeneratorError,
    InfeasibleDegree,
    LatinParseError,
    LatinSquare,
    SplitMix64,
    ZeroOrder,
    complete_bipartite_colored,
    cyclic_latin,
    format_latin,
    latin_problem,
    latin_to_bipartite,
    parse_latin,
    random_bipartite_colored,
    random_properly_colored,
    shuffled_latin,
)
from rainbowmatch.graph import build_graph


def test_splitmix64_reference_outputs():
    # published test vector (seed 1234567) and the widely quoted seed-0 value
    rng = SplitMix64(1234567)
    assert [rng.next_u64() for _ in range(5)] == [
        6457827717110365317,
        3203168211198807973,
        9817491932198370423,
        4593380528125082431,
        16408922859458223821,
    ]
    assert SplitMix64(0).next_u64() == 0xE220A8397B1DCDAF


def test_splitmix64_seed_one_self_test():
    rng = SplitMix64(1)
    assert [rng.next_u64() for _ in range(3)] == [
        0x910A2DEC89025CC1,
        0xBEEB8DA1658EEC67,
        0xF893A2EEFB32555E,
    ]


def test_below_stays_in_range():
    rng = SplitMix64(5)
    draws = [rng.below(7) for _ in range(2000)]
    assert set(draws) == set(range(7))


def test_cyclic_latin():
    assert cyclic_latin(1).cells == ((0,),)
    assert cyclic_latin(2).cells == ((0, 1), (1, 0))
    assert cyclic_latin(3).cells == ((0, 1, 2), (1, 2, 0), (2, 0, 1))
    with pytest.raises(ZeroOrder):
        cyclic_latin(0)


def test_latin_square_validation():
    with pytest.raises(GeneratorError, match="row 1, column 0"):
        LatinSquare.from_rows([[0, 1], [0, 1]])


@pytest.mark.parametrize("seed", [0, 1, 2, 12345])
def test_shuffled_latin_is_latin(seed):
    sq = shuffled_latin(cyclic_latin(5), seed)
    assert latin_problem(sq.n, sq.cells) is None
    assert shuffled_latin(cyclic_latin(5), seed) == sq


def test_latin_to_bipartite():
    g = latin_to_bipartite(cyclic_latin(1))
    assert [tuple(e) for e in g.edges()] == [(0, 1, 0)]
    g2 = latin_to_bipartite(cyclic_latin(2))
    assert g2.class_sizes() == {0: 2, 1: 2}
    for n in range(1, 7):
        g = latin_to_bipartite(cyclic_latin(n))
        assert g.class_sizes() == {c: n for c in range(n)}
        assert g.min_degree() == g.max_degree() == n


def test_latin_text_roundtrip():
    sq = shuffled_latin(cyclic_latin(4), 3)
    assert parse_latin(io.StringIO(format_latin(sq))) == sq
    text = "# order\n3\n0 1 2\n1 2 0  # ok\n2 0 1\n"
    assert parse_latin(io.StringIO(text)) == cyclic_latin(3)


def test_latin_parse_errors():
    with pytest.raises(LatinParseError, match="row 2, column 1"):
        parse_latin(io.StringIO("3\n0 1 2\n1 2 0\n2 2 1\n"))
    with pytest.raises(LatinParseError, match="expected 2 rows"):
        parse_latin(io.StringIO("2\n0 1\n"))
    with pytest.raises(LatinParseError, match="line 1"):
        parse_latin(io.StringIO("x\n"))


def test_complete_bipartite():
    assert complete_bipartite_colored(1, 1).m == 1
    g = complete_bipartite_colored(2, 3)
    assert g.m == 6 and len(g.colors()) == 3
    big = complete_bipartite_colored(4, 36)
    assert (big.min_degree(), big.n) == (4, 40)


def test_random_properly_colored_basics():
    g = random_properly_colored(5, 1, 9)
    assert g.min_degree() >= 1 and g.n == 5
    a = random_properly_colored(27, 4, 7)
    b = random_properly_colored(27, 4, 7)
    assert a.edges() == b.edges()
    with pytest.raises(InfeasibleDegree):
        random_properly_colored(4, 4, 0)


def test_random_bipartite_basics():
    g = random_bipartite_colored(3, 3, 3, 1)
    assert g.m == 9
    big = random_bipartite_colored(20, 20, 4, 5)
    assert big.is_triangle_free() and big.min_degree() >= 4
    with pytest.raises(InfeasibleDegree):
        random_bipartite_colored(2, 5, 3, 0)


@settings(max_examples=80, deadline=None)
@given(st.integers(2, 40), st.integers(1, 8), st.integers(0, 2**64 - 1))
def test_random_generators_are_valid(n, delta, seed):
    delta = min(delta, n - 1)
    g = random_properly_colored(n, delta, seed)
    assert g.min_degree() >= delta
    assert max(g.colors()) <= 2 * g.max_degree() - 2  # at most 2*Delta - 1 colors
    assert build_graph(g.edges()).edges() == g.edges()
    na, nb = n // 2 + 1, n - n // 2 + 1
    d = min(delta, na, nb)
    b = random_bipartite_colored(na, nb, d, seed)
    assert b.min_degree() >= d and b.is_triangle_free()
