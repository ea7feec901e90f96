import pytest

from bundleinv.errors import UnsupportedRestriction
from bundleinv.geometry import (
    ExtensionBundle,
    FormalLineBundle,
    SplitBundle,
    TotalSpace,
    reduce_extension_class,
    splitting_type,
    transition_matrix,
)
from bundleinv.laurent import LaurentPoly, parse_poly

W1 = TotalSpace.W(1)


def test_named_spaces():
    assert TotalSpace.W(2).twists == (2, 0)
    assert TotalSpace.W(3).twists == (3, -1)
    assert TotalSpace.D(2).twists == (2,)
    assert TotalSpace.minus_one(3).twists == (1, 1, 1)
    assert TotalSpace.named("w1") == W1
    assert W1.conormal_ample() and not TotalSpace.W(3).conormal_ample()
    assert [TotalSpace.W(i).w_index() for i in (1, 2, 3)] == [1, 2, 3]
    assert TotalSpace.minus_one(3).w_index() is None
    assert TotalSpace.W(3).surface() == TotalSpace.D(3)
    with pytest.raises(ValueError):
        TotalSpace.named("W7")


def test_transition_matrices():
    T = transition_matrix(ExtensionBundle(W1, 4, "z^3*u1"))
    assert T == [
        [parse_poly("z^4", 2), parse_poly("z^3*u1", 2)],
        [LaurentPoly.zero(2), parse_poly("z^-4", 2)],
    ]
    one, zero = LaurentPoly.constant(1, 2), LaurentPoly.zero(2)
    assert transition_matrix(SplitBundle(W1, (0, 0))) == [[one, zero], [zero, one]]
    assert transition_matrix(ExtensionBundle(W1, 0, "0")) == [[one, zero], [zero, one]]
    assert FormalLineBundle(3).transition(2) == parse_poly("z^-3", 2)


def test_split_bundle_sorts_degrees():
    assert SplitBundle(W1, (-2, 5, 0)).degrees == (5, 0, -2)
    with pytest.raises(ValueError):
        SplitBundle(W1, ())


def test_extension_validation():
    with pytest.raises(ValueError):
        ExtensionBundle(W1, -1, "0")
    with pytest.raises(ValueError):
        ExtensionBundle(W1, 1, parse_poly("u1", 1))


def test_splitting_type():
    assert splitting_type(ExtensionBundle(W1, 5, "z^3*u1^2")) == (5, -5)
    assert splitting_type(ExtensionBundle(W1, 0, "0")) == (0, 0)
    with pytest.raises(UnsupportedRestriction):
        splitting_type(ExtensionBundle(W1, 2, "z^-1"))
    # a u-free term that is a coboundary does not change the type
    assert splitting_type(ExtensionBundle(W1, 2, "z^2 + z^-3")) == (2, -2)


def test_reduce_extension_class_examples():
    for m in (0, 1, 5):
        assert reduce_extension_class(ExtensionBundle(W1, 3, "0"), m).is_zero()
    assert reduce_extension_class(ExtensionBundle(W1, 2, "z^3*u1^3"), 3).is_zero()
    kept = reduce_extension_class(ExtensionBundle(W1, 4, "z^3*u1"), 1)
    assert kept == parse_poly("z^3*u1", 2)


def test_reduce_extension_class_window():
    # on W_1 with j = 4, z^k u^I survives iff |I| - 4 < k < 4
    p = parse_poly("z^4*u1 + z^-3*u1 + z^-2*u1 + z^3*u2^3 + z^-1*u2^3", 2)
    reduced = reduce_extension_class(ExtensionBundle(W1, 4, p))
    assert reduced == parse_poly("z^-2*u1 + z^3*u2^3", 2)
    assert reduce_extension_class(ExtensionBundle(W1, 4, p), 1) == parse_poly("z^-2*u1", 2)


def test_surface_restriction():
    E = ExtensionBundle(TotalSpace.W(2), 4, "z^3*u1^2 + u2 + z*u1*u2")
    R = E.restrict_to_surface()
    assert R.space == TotalSpace.D(2)
    assert R.p == parse_poly("z^3*u1^2", 1)
