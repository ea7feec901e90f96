"""Numerical criteria for chains of P^1's and for curves of positive genus.

Every predicate here is a sufficient condition: ``True`` certifies the
conclusion, ``False`` says nothing.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from fractions import Fraction
from math import comb
from typing import Sequence

from .errors import NotSpanned


class Verdict(str, enum.Enum):
    CERTIFIED = "Certified"
    INCONCLUSIVE = "Inconclusive"

    def __str__(self):
        return self.value


def verdict(ok: bool) -> Verdict:
    return Verdict.CERTIFIED if ok else Verdict.INCONCLUSIVE


# ---------------------------------------------------------------------------
# chains Z_a = T_1 ∪ ... ∪ T_a


@dataclass(frozen=True)
class ChainData:
    """Splitting data a_{i,h} of E|_{T_i} and conormal degrees b_{i,j}."""

    splitting: tuple
    conormal_degrees: tuple

    def __post_init__(self):
        split = tuple(tuple(sorted(map(int, row), reverse=True)) for row in self.splitting)
        conorm = tuple(tuple(map(int, row)) for row in self.conormal_degrees)
        if not split or len(split) != len(conorm):
            raise ValueError("need one splitting row and one conormal row per component")
        if len({len(row) for row in split}) != 1:
            raise ValueError("all splitting rows must have the same rank")
        if any(not row for row in conorm):
            raise ValueError("conormal rows must be non-empty")
        object.__setattr__(self, "splitting", split)
        object.__setattr__(self, "conormal_degrees", conorm)

    @classmethod
    def from_gaps(cls, eps: Sequence[int], b: Sequence[int]) -> "ChainData":
        """Rank-2 data with splitting (ε_i, 0) and a single conormal summand b_i."""
        if len(eps) != len(b):
            raise ValueError("eps and b must have the same length")
        return cls(tuple((e, 0) for e in eps), tuple((x,) for x in b))

    @property
    def a(self) -> int:
        return len(self.splitting)

    @property
    def rank(self) -> int:
        return len(self.splitting[0])

    @property
    def b(self) -> tuple:
        return tuple(min(row) for row in self.conormal_degrees)

    @property
    def eps(self) -> tuple:
        return tuple(row[0] - row[-1] for row in self.splitting)

    def ample(self) -> bool:
        return all(x > 0 for row in self.conormal_degrees for x in row)


class ChainMode(str, enum.Enum):
    PLAIN_A5 = "a5"
    END_FORMAL_A81 = "a81"
    END_LEVEL_A82 = "a82"


def _all_but_one(flags) -> bool:
    flags = list(flags)
    return sum(flags) >= len(flags) - 1


def chain_line_h0(degrees: Sequence[int]) -> int:
    """h^0 of the line bundle with multidegree ``degrees`` on a chain (spanned case)."""
    if any(d < 0 for d in degrees):
        raise NotSpanned(f"multidegree {tuple(degrees)} is not spanned")
    return 1 + sum(degrees)


def chain_h1_vanishes(data: ChainData) -> bool:
    lows = [row[-1] for row in data.splitting]
    return all(x >= -1 for x in lows) and _all_but_one(x >= 0 for x in lows)


def _gap_condition(b, eps, factor: int, mult: int) -> bool:
    lhs = [factor * x for x in b]
    need = [mult * e for e in eps]
    return all(l >= n - 1 for l, n in zip(lhs, need)) and _all_but_one(l >= n for l, n in zip(lhs, need))


def chain_restriction_bijective(data: ChainData, m: int | None = None, mode=ChainMode.END_FORMAL_A81) -> bool:
    """Sufficient condition for H^1 on the formal chain to equal H^1 on Z_a (or Z_a^(m)).

    PLAIN_A5 concerns E itself; the END modes concern End E, formally
    (A81) or from level ``m`` on (A82).
    """
    mode = ChainMode(mode)
    if mode is ChainMode.PLAIN_A5:
        return _gap_condition(data.b, data.eps, 1, 1)
    if mode is ChainMode.END_FORMAL_A81:
        return _gap_condition(data.b, data.eps, 1, 2)
    if m is None or m < 0:
        raise ValueError("A82 mode needs a level m >= 0")
    return _gap_condition(data.b, data.eps, m + 1, 2)


def chain_formally_split(data: ChainData) -> bool:
    """True certifies E ≅ L_1 ⊕ ... ⊕ L_r on the formal neighbourhood."""
    return chain_restriction_bijective(data, None, ChainMode.END_FORMAL_A81)


# ---------------------------------------------------------------------------
# curves of genus g >= 1


@dataclass(frozen=True)
class GenusContext:
    g: int
    n: int
    d: int
    degrees: tuple

    def __post_init__(self):
        object.__setattr__(self, "degrees", tuple(int(a) for a in self.degrees))
        if self.g < 1 or self.n < 2 or not self.degrees:
            raise ValueError("need g >= 1, n >= 2 and rank >= 1")

    @property
    def r(self) -> int:
        return len(self.degrees)


class GammaMode(str, enum.Enum):
    EXACT = "exact"
    UPPER_BOUND = "upper"


def _u_term(g: int, r: int, d: int, t: int, m: int) -> Fraction:
    return max(Fraction(0), Fraction(t * (d + 2 * g - 2 + m), r) + 1 - g) * comb(t + r - 1, t)


def gamma_genus_split(ctx: GenusContext, t: int, mode=GammaMode.EXACT) -> Fraction:
    """Right-hand side of the split/filtered γ(F, N, t) formula for general N.

    ``mode`` only labels the reading: an equality for split F, an upper
    bound for a filtered F.
    """
    GammaMode(mode)
    if ctx.g < 2:
        raise ValueError("the formula needs g >= 2")
    if t < 1:
        raise ValueError("t must be >= 1")
    r = ctx.r
    return sum(
        (_u_term(ctx.g, r, ctx.d, t, ai - aj) for ai in ctx.degrees for aj in ctx.degrees),
        Fraction(0),
    )


@dataclass(frozen=True)
class SameDegree:
    pass


@dataclass(frozen=True)
class DegreeReduced:
    a: int


def reduced_degrees(a: int, r: int) -> tuple:
    """Write a = r x + y (0 <= y < r); return (0, ..., 0, min(y, r - y))."""
    _, y = divmod(a, r)
    c = min(y, r - y)
    return (0,) * (r - 1) + (c,)


def gamma_general_pair_bound(g: int, n: int, r: int, d: int, t: int, variant=SameDegree()) -> Fraction:
    if g < 2 or t < 1 or r < 1:
        raise ValueError("need g >= 2, t >= 1, r >= 1")
    if isinstance(variant, SameDegree):
        base = max(Fraction(0), Fraction(t * (d + 2 * g - 2), r) + 1 - g)
        return r * r * comb(t + r - 1, t) * base
    if isinstance(variant, DegreeReduced):
        return gamma_genus_split(GenusContext(g, n, d, reduced_degrees(variant.a, r)), t, GammaMode.UPPER_BOUND)
    raise TypeError(f"unknown variant {variant!r}")


def gamma_genus_zero_level(r: int, g: int, h0_end: int) -> int:
    """γ(F, N, 0) = h^1(End F) = r^2 (g - 1) + h^0(End F)."""
    if r < 1 or g < 1 or h0_end < 1:
        raise ValueError("need r >= 1, g >= 1, h0_end >= 1")
    return r * r * (g - 1) + h0_end


def moduli_dim(r: int, g: int) -> int:
    """Dimension of the moduli of stable bundles of rank r on a genus-g curve."""
    if r < 1 or g < 1:
        raise ValueError("need r >= 1, g >= 1")
    return r * r * (g - 1) + 1


class Regime(str, enum.Enum):
    SEMISTABLE = "semistable"
    STABLE = "stable"
    GENERAL = "general"


def alpha_vanishes(g: int, n: int, d: int, regime=Regime.GENERAL) -> bool:
    """Sufficient condition for h^0(S^t N ⊗ ω_Z) = 0 for all t >= 1."""
    regime = Regime(regime)
    if g < 1 or n < 2:
        raise ValueError("need g >= 1, n >= 2")
    if regime is Regime.SEMISTABLE:
        return d < (n - 1) * (2 - 2 * g)
    if regime is Regime.STABLE:
        return d <= (n - 1) * (2 - 2 * g)
    return d <= (n - 1) * (1 - g)


def genus1_gamma(t: int) -> int:
    """γ(F, N, t) on an elliptic curve with E|_Z and N semi-stable."""
    if t < 1:
        raise ValueError("t must be >= 1")
    return 0
