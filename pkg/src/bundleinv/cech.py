"""Čech cohomology of bundles on infinitesimal and formal neighbourhoods of Z.

The cover is {U, V}.  A 1-cochain is a vector of Laurent polynomials on
U ∩ V written in the V-frame; the coboundary of (a, c) is ``T a - c`` with
``a`` regular on U and ``c`` regular on V.  A monomial ``z^k u^I`` is
regular on V exactly when ``k <= b.I``, so those columns are dropped up
front.  Above a per-component threshold every column is hit by a U-regular
cochain (see ``_thresholds``); the strip in between is finite and its
quotient is computed by exact rank.
"""

from __future__ import annotations

import enum
import itertools
from dataclasses import dataclass, field
from functools import lru_cache
from math import comb

from . import sparse
from .errors import UndecidedFiniteness, WindowUnstable
from .geometry import SplitBundle, TotalSpace, splitting_type, transition_matrix


class _Infinite:
    _inst = None

    def __new__(cls):
        if cls._inst is None:
            cls._inst = super().__new__(cls)
        return cls._inst

    def __repr__(self):
        return "inf"

    __str__ = __repr__

    def __eq__(self, other):
        return other is self

    def __hash__(self):
        return hash("inf")

    def __lt__(self, other):
        return False

    def __gt__(self, other):
        return other is not self

    def __reduce__(self):
        return (_Infinite, ())


INF = _Infinite()


def is_infinite(x) -> bool:
    return x is INF


class Certificate(str, enum.Enum):
    AMPLE_STABILIZED = "AmpleStabilized"
    SPLIT_DEGREE_ARITHMETIC = "SplitDegreeArithmetic"
    DIVERGENCE_DETECTED = "DivergenceDetected"
    PAPER_ASSERTED = "PaperAsserted"

    def __str__(self):
        return self.value


@dataclass(frozen=True)
class DimResult:
    value: object  # int or INF
    levels: tuple = field(default=())
    certificate: Certificate = Certificate.AMPLE_STABILIZED

    def __post_init__(self):
        if self.value is not INF and self.value != sum(self.levels):
            raise ValueError("finite value must equal the sum of its level contributions")


# ---------------------------------------------------------------------------
# line bundles on P^1 and symmetric powers of the conormal bundle


def h1_line_p1(d: int) -> int:
    """h^1(P^1, O(d))."""
    return max(0, -d - 1)


def h0_line_p1(d: int) -> int:
    return max(0, d + 1)


@lru_cache(maxsize=None)
def u_monomials(n: int, t: int) -> tuple:
    """Exponent vectors I with |I| = t, in lexicographic order."""
    if n == 0:
        return ((),) if t == 0 else ()
    out = []
    for combo in itertools.combinations_with_replacement(range(n), t):
        e = [0] * n
        for k in combo:
            e[k] += 1
        out.append(tuple(e))
    return tuple(sorted(set(out), reverse=True))


def sym_power_degrees(twists, t: int) -> list:
    """Degrees of the line summands of S^t(N*), one per monomial."""
    if t < 0:
        raise ValueError("t must be >= 0")
    twists = tuple(twists)
    return sorted(sum(b * e for b, e in zip(twists, I)) for I in u_monomials(len(twists), t))


def _space_twists(space) -> tuple:
    return space.twists if isinstance(space, TotalSpace) else tuple(space)


def split_h1_level(space, degrees, t: int, twist_with_end: bool = False) -> int:
    """h^1(Z, F ⊗ S^t N*) for F split with the given degrees (or End F)."""
    sym = sym_power_degrees(_space_twists(space), t)
    if twist_with_end:
        summands = [aj - ai for ai in degrees for aj in degrees]
    else:
        summands = list(degrees)
    return sum(h1_line_p1(a + D) for a in summands for D in sym)


def split_profile(twists, summands) -> tuple:
    """Decide whether sum_t h^1(O(a) ⊗ S^t N*) over the summands is finite.

    Returns ``(finite, last)`` where ``last`` is the largest level with a
    nonzero contribution (-1 if none) when finite, else None.
    """
    twists = tuple(twists)
    if not twists:
        return True, (0 if any(h1_line_p1(a) for a in summands) else -1)
    bmin = min(twists)
    last = -1
    for a in summands:
        if a >= -1 and bmin >= 0:
            continue
        if bmin <= 0:
            return False, None
        # a + t*bmin <= -2 exactly for t <= (-2 - a) / bmin
        last = max(last, (-2 - a) // bmin)
    return True, last


# ---------------------------------------------------------------------------
# transition-matrix bookkeeping


def _matrix_terms(T):
    r = len(T)
    diag = []
    for c in range(r):
        entry = T[c][c]
        items = list(entry.items())
        if len(items) != 1 or sum(items[0][0][1]) != 0:
            raise ValueError("diagonal transition entries must be pure powers of z")
        diag.append(items[0][0][0])
        for c2 in range(c):
            if not T[c][c2].is_zero():
                raise ValueError("transition matrix must be upper triangular")
    # column c of T: list of (row, z_exp, u_exps, coeff)
    cols = []
    for c in range(r):
        terms = []
        for row in range(c + 1):
            for (e, J), co in T[row][c].items():
                terms.append((row, e, J, co))
        cols.append(terms)
    return diag, cols


def _thresholds(T, diag) -> list:
    """theta[c]: every column of component c with z-exponent >= theta[c] is a coboundary."""
    r = len(T)
    theta = []
    for c in range(r):
        th = diag[c]
        for c2 in range(c):
            off = T[c2][c]
            if not off.is_zero():
                th = max(th, theta[c2] + diag[c] - off.min_z())
        theta.append(th)
    return theta


def _dot(b, I) -> int:
    return sum(x * e for x, e in zip(b, I))


def _h1_truncated(twists, T, m: int, extra: int = 0) -> int:
    """dim H^1(Z^(m), E) for the bundle with transition matrix T."""
    twists = tuple(twists)
    n = len(twists)
    diag, cols = _matrix_terms(T)
    theta = _thresholds(T, diag)
    top = [th - 1 + extra for th in theta]
    monos = [I for t in range(m + 1) for I in u_monomials(n, t)]
    ncols = sum(max(0, top[c] - _dot(twists, I)) for c in range(len(T)) for I in monos)
    rows = []
    for c, terms in enumerate(cols):
        amax = max(top[row] - e for row, e, _, _ in terms)
        for I in monos:
            for a in range(0, amax + 1):
                row_d = {}
                for row, e, J, co in terms:
                    k = a + e
                    if k > top[row]:
                        continue
                    I2 = tuple(x + y for x, y in zip(I, J))
                    if sum(I2) > m or k <= _dot(twists, I2):
                        continue
                    key = (row, k, I2)
                    row_d[key] = row_d.get(key, 0) + co
                if row_d:
                    rows.append(row_d)
    return ncols - sparse.rank(rows)


def _h0_bounds(twists, T, diag, exps) -> list:
    r = len(T)
    bmax = max(_dot(twists, I) for I in exps)
    A = [0] * r
    for c in range(r - 1, -1, -1):
        bound = bmax - diag[c]
        for c2 in range(c + 1, r):
            off = T[c][c2]
            if not off.is_zero():
                bound = max(bound, A[c2] + off.max_z() - diag[c])
        A[c] = bound
    return A


def _h0_truncated(twists, T, exps, max_level: int, extra: int = 0) -> int:
    """Dimension of {a regular on U with u-exponents in ``exps`` : T a regular on V}.

    Terms of ``T a`` above u-degree ``max_level`` are discarded.
    """
    twists = tuple(twists)
    diag, cols = _matrix_terms(T)
    A = _h0_bounds(twists, T, diag, exps)
    nvars = 0
    rows = []
    for c, terms in enumerate(cols):
        amax = A[c] + extra
        for I in exps:
            for a in range(0, amax + 1):
                nvars += 1
                row_d = {}
                for row, e, J, co in terms:
                    k = a + e
                    I2 = tuple(x + y for x, y in zip(I, J))
                    if sum(I2) > max_level or k <= _dot(twists, I2):
                        continue
                    key = (row, k, I2)
                    row_d[key] = row_d.get(key, 0) + co
                if row_d:
                    rows.append(row_d)
    return nvars - sparse.rank(rows)


def _check_space(space, bundle):
    if bundle.space.twists != space.twists:
        raise ValueError(f"bundle lives on {bundle.space.label}, not {space.label}")


def _window_extra(T, scale: int) -> int:
    diag, _ = _matrix_terms(T)
    width = max(1, max(abs(t) for t in _thresholds(T, diag)) + 1)
    return (scale - 1) * width


def h1_neighborhood(space, bundle, m: int, window_scale: int = 1, self_check: bool = True) -> int:
    """dim H^1(Z^(m), E), with a doubled-window consistency check."""
    if m < 0:
        raise ValueError("level must be >= 0")
    _check_space(space, bundle)
    T = transition_matrix(bundle)
    value = _h1_truncated(space.twists, T, m, _window_extra(T, window_scale))
    if self_check:
        wide = _h1_truncated(space.twists, T, m, _window_extra(T, 2 * window_scale))
        if wide != value:
            raise WindowUnstable(f"h1 at level {m}: {value} vs {wide} after doubling the window")
    return value


def h0_neighborhood(space, bundle, m: int, window_scale: int = 1, self_check: bool = True) -> int:
    """dim H^0(Z^(m), E)."""
    if m < 0:
        raise ValueError("level must be >= 0")
    _check_space(space, bundle)
    T = transition_matrix(bundle)
    exps = [I for t in range(m + 1) for I in u_monomials(space.n, t)]
    diag, _ = _matrix_terms(T)
    width = max(1, max(abs(a) for a in _h0_bounds(space.twists, T, diag, exps)) + 1)
    value = _h0_truncated(space.twists, T, exps, m, (window_scale - 1) * width)
    if self_check:
        wide = _h0_truncated(space.twists, T, exps, m, (2 * window_scale - 1) * width)
        if wide != value:
            raise WindowUnstable(f"h0 at level {m}: {value} vs {wide} after doubling the window")
    return value


def sections_with_poles(surface_twist: int, T, poles: int, depth: int, extra: int = 0) -> int:
    """Sections over a surface chart pair with u-exponents in [-poles, depth]."""
    exps = [(t,) for t in range(-poles, depth + 1)]
    return _h0_truncated((surface_twist,), T, exps, depth, extra)


# ---------------------------------------------------------------------------
# formal neighbourhood


def _asserted_infinite(space, bundle) -> bool:
    i = space.w_index()
    j = splitting_type(bundle)[0]
    return (i == 2 and j >= 2) or i == 3


def h1_formal(space, bundle, depth: int | None = None, window_scale: int = 1) -> DimResult:
    """dim H^1 on the formal neighbourhood, or INF, with a certificate.

    Finite case: the level-t contribution of E is at most h^1(E|_Z ⊗ S^t N*),
    which is split arithmetic; once that vanishes for good, the truncated
    value is final.  ``depth`` forces computing further levels.
    """
    _check_space(space, bundle)
    degrees = splitting_type(bundle)
    twists = space.twists
    is_split = isinstance(bundle, SplitBundle) or bundle.is_split()
    finite, last = split_profile(twists, degrees)

    if finite:
        top = max(last, 0)
        if depth is not None:
            top = max(top, depth)
        values = [
            h1_neighborhood(space, bundle, m, window_scale, self_check=(m == top))
            for m in range(top + 1)
        ]
        levels = tuple(v - (values[i - 1] if i else 0) for i, v in enumerate(values))
        cert = Certificate.SPLIT_DEGREE_ARITHMETIC if is_split else Certificate.AMPLE_STABILIZED
        return DimResult(values[-1], levels, cert)

    gap = degrees[0] - degrees[-1]
    span = max(2, gap)
    if depth is not None:
        span = max(span, (depth + 1) // 2)
    if is_split:
        levels = tuple(split_h1_level(twists, degrees, t) for t in range(2 * span + 1))
        return DimResult(INF, levels, Certificate.SPLIT_DEGREE_ARITHMETIC)

    values = [
        h1_neighborhood(space, bundle, m, window_scale, self_check=(m == 2 * span))
        for m in range(2 * span + 1)
    ]
    levels = tuple(v - (values[i - 1] if i else 0) for i, v in enumerate(values))
    if all(levels[t] > 0 for t in range(span, 2 * span + 1)):
        return DimResult(INF, levels, Certificate.DIVERGENCE_DETECTED)
    if _asserted_infinite(space, bundle):
        return DimResult(INF, levels, Certificate.PAPER_ASSERTED)
    raise UndecidedFiniteness(
        f"{space.label}: level contributions {levels} neither stabilize nor diverge"
    )


def end_bundle(space, degrees) -> SplitBundle:
    """End of a split bundle, as a split bundle of rank r^2."""
    return SplitBundle(space, [aj - ai for ai in degrees for aj in degrees])


def binomial_level_count(n: int, t: int) -> int:
    return comb(t + n - 1, t)
