"""Deformation dimension γ, local Euler characteristic χ and the partial
invariants h', w' of bundles on the local spaces W_i and Tot(O(-1)^n)."""

from __future__ import annotations

from dataclasses import dataclass, field
from math import comb

from . import cech
from .cech import INF, Certificate, DimResult
from .errors import BoxUnstable, InternalMismatch
from .geometry import ExtensionBundle, SplitBundle, TotalSpace, splitting_type, transition_matrix


def gamma_closed(n: int, degrees) -> int:
    """Closed form of γ on Tot(O(-1)^n) for the given splitting type."""
    if n < 1:
        raise ValueError("n must be >= 1")
    total = 0
    for ai in degrees:
        for aj in degrees:
            gap = ai - aj
            if gap > 1:
                total += sum((gap - 1 - t) * comb(t + n - 1, t) for t in range(gap - 1))
    return total


def gamma_formal_result(space: TotalSpace, bundle) -> DimResult:
    degrees = splitting_type(bundle)
    summands = [aj - ai for ai in degrees for aj in degrees]
    finite, last = cech.split_profile(space.twists, summands)
    top = max(last, 0) if finite else 2 * max(2, degrees[0] - degrees[-1])
    levels = tuple(cech.split_h1_level(space, degrees, t, twist_with_end=True) for t in range(top + 1))
    return DimResult(sum(levels) if finite else INF, levels, Certificate.SPLIT_DEGREE_ARITHMETIC)


def gamma_formal(space: TotalSpace, bundle):
    """γ = Σ_t h^1(End E|_Z ⊗ S^t N*); an int or INF."""
    return gamma_formal_result(space, bundle).value


def _surface_restriction(bundle):
    if isinstance(bundle, SplitBundle):
        return SplitBundle(bundle.space.surface(), bundle.degrees)
    return bundle.restrict_to_surface()


def chi_result(space: TotalSpace, bundle, depth=None, window_scale: int = 1) -> DimResult:
    if space.n == 1:
        h = cech.h1_formal(space, bundle, depth, window_scale)
        w = w_prime(space, bundle)
        if h.value is INF:
            return h
        # the width is appended as one extra entry after the h levels
        return DimResult(h.value + w, h.levels + (w,), h.certificate)
    # w vanishes in codimension >= 2, so χ is h^1 on the formal neighbourhood
    return cech.h1_formal(space, bundle, depth, window_scale)


def chi(space: TotalSpace, bundle, depth=None, window_scale: int = 1):
    return chi_result(space, bundle, depth, window_scale).value


def h_prime_result(space: TotalSpace, bundle, window_scale: int = 1) -> DimResult:
    surf = bundle if space.n == 1 else _surface_restriction(bundle)
    return cech.h1_formal(surf.space, surf, window_scale=window_scale)


def h_prime(space: TotalSpace, bundle, window_scale: int = 1):
    """h of the restriction to the divisor D = {u_2 = ... = 0}."""
    return h_prime_result(space, bundle, window_scale).value


def _box(bundle) -> int:
    degrees = bundle.degrees if isinstance(bundle, SplitBundle) else (bundle.j, -bundle.j)
    gap = degrees[0] - degrees[-1]
    pdeg = 0 if isinstance(bundle, SplitBundle) else bundle.p.max_u_degree()
    return gap + pdeg + 1


def _width(surf_bundle, poles: int, depth: int, zextra: int) -> int:
    T = transition_matrix(surf_bundle)
    b = surf_bundle.space.twists[0]
    with_poles = cech.sections_with_poles(b, T, poles, depth, zextra)
    regular = cech.sections_with_poles(b, T, 0, depth, zextra)
    return with_poles - regular


def w_prime(space: TotalSpace, bundle, box_scale: int = 1) -> int:
    """w of the restriction to D: sections over D \\ Z modulo sections over D.

    Sections are taken with u-poles up to N and truncated above u-degree M;
    the answer is the dimension of the space of pole parts.  The box is
    doubled once and must give the same answer.
    """
    surf = bundle if space.n == 1 else _surface_restriction(bundle)
    if surf.space.twists[0] < 1:
        raise ValueError("w' needs a contractible zero section (b_1 >= 1)")
    B = _box(surf) * box_scale
    value = _width(surf, B, B, 0)
    wide = _width(surf, 2 * B, 2 * B, B)
    if wide != value:
        raise BoxUnstable(f"w' changed from {value} to {wide} when the box was doubled")
    return value


# ---------------------------------------------------------------------------
# closed forms for split bundles on W_i


def _exact_div(num: int, den: int) -> int:
    q, r = divmod(num, den)
    assert r == 0, f"{num} is not divisible by {den}"
    return q


def f0(j: int) -> int:
    return _exact_div(j**3 - j, 6)


def f1(j: int) -> int:
    return _exact_div(j * j - j, 2)


def g1(j: int) -> int:
    return _exact_div(j * j + j, 2)


def f2(j: int) -> int:
    q = j // 2
    return q * (j - q)


def g2(j: int) -> int:
    q = j // 2
    return q * j - q * q


def f3(j: int) -> int:
    q = (j + 1) // 3
    return _exact_div(q * (2 * j + 1 - 3 * q), 2)


def g3(j: int) -> int:
    q = j // 3
    return _exact_div(q * (2 * j - 1 - 3 * q), 2)


_FG = {1: (f1, g1), 2: (f2, g2), 3: (f3, g3)}


def split_formulas(i: int, j: int) -> tuple:
    """(χ, h', w') of O(j) + O(-j) on W_i from the closed forms."""
    if i not in _FG:
        raise ValueError("i must be 1, 2 or 3")
    if j < 0:
        raise ValueError("j must be >= 0")
    f, g = _FG[i]
    if i == 1:
        chi_val = f0(j)
    elif i == 2:
        chi_val = INF if j >= 2 else 0
    else:
        chi_val = INF
    return chi_val, f(j), g(j)


# ---------------------------------------------------------------------------
# report


@dataclass
class InvariantReport:
    space: str
    j: int | None
    p: str
    splitting_type: tuple
    gamma: object
    chi: object
    h_prime: object
    w_prime: object
    certificates: dict = field(default_factory=dict)

    def as_dict(self) -> dict:
        enc = lambda v: "inf" if v is INF else v  # noqa: E731
        return {
            "space": self.space,
            "j": self.j,
            "p": self.p,
            "splitting_type": list(self.splitting_type),
            "gamma": enc(self.gamma),
            "chi": enc(self.chi),
            "h_prime": enc(self.h_prime),
            "w_prime": enc(self.w_prime),
            "certificates": {k: str(v) for k, v in self.certificates.items()},
        }


REPORT_FIELDS = ["space", "j", "p", "splitting_type", "gamma", "chi", "h_prime", "w_prime", "certificates"]


def invariant_report(space: TotalSpace, bundle, depth=None, window_scale: int = 1) -> InvariantReport:
    degrees = splitting_type(bundle)
    g = gamma_formal_result(space, bundle)
    c = chi_result(space, bundle, depth, window_scale)
    h = h_prime_result(space, bundle, window_scale)
    w = w_prime(space, bundle)
    if isinstance(bundle, ExtensionBundle):
        j, p_text = bundle.j, str(bundle.p)
    else:
        j, p_text = None, "0"
    report = InvariantReport(
        space=space.label,
        j=j,
        p=p_text,
        splitting_type=degrees,
        gamma=g.value,
        chi=c.value,
        h_prime=h.value,
        w_prime=w,
        certificates={"gamma": g.certificate, "chi": c.certificate, "h_prime": h.certificate},
    )
    _cross_check(space, bundle, degrees, report)
    return report


def _cross_check(space, bundle, degrees, report):
    split = isinstance(bundle, SplitBundle) or bundle.is_split()
    if space.twists == (1,) * space.n and report.gamma != gamma_closed(space.n, degrees):
        raise InternalMismatch(f"γ: closed form {gamma_closed(space.n, degrees)} vs {report.gamma}")
    i = space.w_index()
    if not split or i not in _FG or len(degrees) != 2 or degrees[0] != -degrees[1]:
        return
    expected = split_formulas(i, degrees[0])
    got = (report.chi, report.h_prime, report.w_prime)
    if expected != got:
        raise InternalMismatch(f"W{i}, j={degrees[0]}: closed forms {expected} vs Čech {got}")
