import pytest

from bundleinv import invariants as inv
from bundleinv.cech import INF, Certificate
from bundleinv.errors import InternalMismatch
from bundleinv.geometry import ExtensionBundle, SplitBundle, TotalSpace

W1, W2, W3 = (TotalSpace.W(i) for i in (1, 2, 3))


def test_gamma_closed_examples():
    assert inv.gamma_closed(2, (1, -1)) == 1
    assert inv.gamma_closed(2, (2, -2)) == 10
    assert inv.gamma_closed(4, (3, 3, 3)) == 0


def test_gamma_formal_examples():
    assert inv.gamma_formal(W1, ExtensionBundle(W1, 1, "u1 + z*u2^2")) == 1
    space = TotalSpace.minus_one(3)
    assert inv.gamma_formal(space, SplitBundle(space, (2, 0, -2))) == inv.gamma_closed(3, (2, 0, -2))
    for sp in (W1, W2, space):
        assert inv.gamma_formal(sp, SplitBundle(sp, (0, 0))) == 0
    # on W_3 the conormal summand O(-1) makes S^t N* carry O(-t), so even O + O diverges
    assert inv.gamma_formal(W3, SplitBundle(W3, (0, 0))) is INF
    assert inv.gamma_formal(W2, SplitBundle(W2, (2, -2))) is INF


@pytest.mark.parametrize(
    "space, j, p, chi, h, w",
    [
        (W1, 5, "z^3*u1^2", 16, 7, 6),
        (W1, 4, "z^3*u1", 7, 4, 6),
        (W1, 3, "u1", 3, 2, 1),
        (W2, 5, "z^3*u1^2", INF, 6, 2),
        (W3, 4, "z^3*u1^2", INF, 3, 2),
        (W1, 5, "z*u1", 10, 4, 1),
        (W2, 4, "z*u1", INF, 3, 0),
    ],
)
def test_single_bundle_invariants(space, j, p, chi, h, w):
    E = ExtensionBundle(space, j, p)
    assert inv.chi(space, E) == chi
    assert inv.h_prime(space, E) == h
    assert inv.w_prime(space, E) == w


@pytest.mark.parametrize("space", [W1, W2, W3])
@pytest.mark.parametrize("p", ["0", "u1", "z^-3*u2 + u1^2"])
def test_small_j_rows(space, p):
    for j in (0, 1):
        E = ExtensionBundle(space, j, p)
        assert inv.h_prime(space, E) == 0
        if j == 0:
            assert inv.w_prime(space, E) == 0
    assert inv.chi(space, ExtensionBundle(space, 0, p)) == (INF if space is W3 else 0)


def test_split_formulas():
    assert inv.split_formulas(1, 4) == (10, 6, 10)
    assert inv.split_formulas(2, 5) == (INF, 6, 6)
    assert inv.split_formulas(3, 1) == (INF, 0, 0)
    assert inv.split_formulas(2, 1) == (0, 0, 0)
    with pytest.raises(ValueError):
        inv.split_formulas(4, 2)


def test_closed_forms_small_values():
    assert [inv.f0(j) for j in range(6)] == [0, 0, 1, 4, 10, 20]
    assert [inv.f2(j) for j in range(6)] == [0, 0, 1, 2, 4, 6]
    assert [inv.g3(j) for j in range(7)] == [0, 0, 0, 1, 2, 3, 5]
    assert [inv.f3(j) for j in range(7)] == [0, 0, 1, 2, 3, 5, 7]


def test_surface_chi_includes_width():
    D1 = TotalSpace.D(1)
    E = ExtensionBundle(D1, 3, "u1")
    r = inv.chi_result(D1, E)
    assert r.value == inv.h_prime(D1, E) + inv.w_prime(D1, E)
    assert r.levels[-1] == inv.w_prime(D1, E)


def test_report():
    rep = inv.invariant_report(W1, ExtensionBundle(W1, 0, "0"))
    assert (rep.gamma, rep.chi, rep.h_prime, rep.w_prime) == (0, 0, 0, 0)
    d = inv.invariant_report(W2, ExtensionBundle(W2, 4, "z*u1")).as_dict()
    assert d["chi"] == "inf" and d["h_prime"] == 3 and d["w_prime"] == 0
    assert d["certificates"]["chi"] == str(Certificate.DIVERGENCE_DETECTED)
    assert list(d) == inv.REPORT_FIELDS


def test_cross_check_raises_on_disagreement(monkeypatch):
    monkeypatch.setattr(inv, "gamma_closed", lambda n, degrees: -1)
    space = TotalSpace.minus_one(2)
    with pytest.raises(InternalMismatch):
        inv.invariant_report(space, SplitBundle(space, (1, -1)))


def test_w_prime_needs_contractible_section():
    with pytest.raises(ValueError):
        inv.w_prime(TotalSpace((-1, 3)), ExtensionBundle(TotalSpace((-1, 3)), 1, "0"))
