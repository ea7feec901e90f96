import itertools
from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from bundleinv import curves
from bundleinv.curves import ChainData, ChainMode, GenusContext, Verdict
from bundleinv.errors import NotSpanned


def test_chain_line_h0():
    assert curves.chain_line_h0((0, 0, 0)) == 1
    assert curves.chain_line_h0((1, 2)) == 4
    with pytest.raises(NotSpanned):
        curves.chain_line_h0((-1, 0))


def test_chain_h1_vanishes():
    ok = ChainData(((0, 0), (0, -1)), ((1,), (1,)))
    bad = ChainData(((0, -1), (0, -1)), ((1,), (1,)))
    single = ChainData(((5, 3),), ((1,),))
    assert curves.chain_h1_vanishes(ok)
    assert not curves.chain_h1_vanishes(bad)
    assert curves.chain_h1_vanishes(single)


def test_chain_data_derived():
    data = ChainData(((0, 3), (2, 2, )), ((2, 1), (4, 3)))
    assert data.splitting == ((3, 0), (2, 2))
    assert data.b == (1, 3) and data.eps == (3, 0) and data.a == 2 and data.rank == 2
    assert data.ample()
    assert not ChainData(((0, 0),), ((0, 1),)).ample()
    with pytest.raises(ValueError):
        ChainData(((0, 0), (1,)), ((1,), (1,)))


def test_restriction_examples():
    d = ChainData.from_gaps((0, 1), (1, 1))
    assert curves.chain_restriction_bijective(d, mode=ChainMode.END_FORMAL_A81)
    d = ChainData.from_gaps((2, 2), (1, 1))
    assert not curves.chain_restriction_bijective(d, mode="a81")
    assert curves.chain_restriction_bijective(d, 3, "a82")
    assert curves.chain_restriction_bijective(ChainData.from_gaps((0, 0, 0), (0, 0, 0)), mode="a5")
    with pytest.raises(ValueError):
        curves.chain_restriction_bijective(d, None, "a82")


def test_verdict():
    assert str(curves.verdict(True)) == "Certified"
    assert curves.verdict(False) is Verdict.INCONCLUSIVE


def test_gamma_genus_split_examples():
    assert curves.gamma_genus_split(GenusContext(2, 3, -1, (0,)), 2) == 1
    assert curves.gamma_genus_split(GenusContext(2, 3, -2, (0, 0)), 1) == 0
    assert curves.gamma_genus_split(GenusContext(3, 3, -10, (1, 0)), 2) == 0
    with pytest.raises(ValueError):
        curves.gamma_genus_split(GenusContext(1, 3, 0, (0,)), 1)
    with pytest.raises(ValueError):
        curves.gamma_genus_split(GenusContext(2, 3, 0, (0,)), 0)


def test_gamma_genus_split_is_exact():
    v = curves.gamma_genus_split(GenusContext(2, 3, 1, (0, 0)), 1)
    assert isinstance(v, Fraction) and v == 4 * 2 * Fraction(1, 2)
    assert curves.gamma_genus_split(GenusContext(2, 3, 0, (0, 0)), 1, "upper") == 0


@given(
    st.integers(2, 6),
    st.integers(-10, 10),
    st.integers(1, 6),
    st.lists(st.integers(-5, 5), min_size=1, max_size=5),
)
def test_gamma_genus_split_is_integral(g, d, t, degrees):
    # t C(t+r-1, t) / r = C(t+r-1, r), so each clipped summand is an integer
    assert curves.gamma_genus_split(GenusContext(g, 3, d, degrees), t).denominator == 1


@given(
    st.integers(2, 5),
    st.integers(-8, 8),
    st.integers(1, 4),
    st.lists(st.integers(-4, 4), min_size=1, max_size=4),
    st.integers(-5, 5),
)
def test_gamma_genus_symmetries(g, d, t, degrees, c):
    base = curves.gamma_genus_split(GenusContext(g, 3, d, degrees), t)
    assert curves.gamma_genus_split(GenusContext(g, 3, d, [-a for a in degrees]), t) == base
    assert curves.gamma_genus_split(GenusContext(g, 3, d, [a + c for a in degrees]), t) == base


def test_pair_bounds():
    assert curves.reduced_degrees(7, 3) == (0, 0, 1)
    assert curves.reduced_degrees(6, 3) == (0, 0, 0)
    assert curves.gamma_general_pair_bound(2, 3, 2, -2, 1, curves.SameDegree()) == 0
    same = curves.gamma_general_pair_bound(3, 3, 3, 2, 2, curves.SameDegree())
    reduced = curves.gamma_general_pair_bound(3, 3, 3, 2, 2, curves.DegreeReduced(9))
    assert same == reduced


def test_zero_level_and_moduli():
    assert curves.gamma_genus_zero_level(2, 2, 1) == 5 == curves.moduli_dim(2, 2)
    assert curves.gamma_genus_zero_level(1, 1, 1) == 1
    assert curves.gamma_genus_zero_level(3, 3, 2) == 20
    assert curves.genus1_gamma(1) == curves.genus1_gamma(100) == 0


def test_alpha_vanishes():
    assert curves.alpha_vanishes(2, 3, -5, "semistable")
    assert not curves.alpha_vanishes(2, 3, -4, "semistable")
    assert curves.alpha_vanishes(2, 3, -4, "stable")
    assert curves.alpha_vanishes(1, 4, -1, "general")


def test_alpha_semistable_implies_general():
    for g, n, d in itertools.product(range(1, 5), range(2, 5), range(-20, 3)):
        if curves.alpha_vanishes(g, n, d, "semistable"):
            assert curves.alpha_vanishes(g, n, d, "general")
