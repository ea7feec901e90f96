"""Local models Tot(O(-b_1) + ... + O(-b_n)) over P^1 and bundles on them.

Coordinates: the chart U has (z, u_1..u_n), the chart V has
(1/z, z^{b_1} u_1, ..., z^{b_n} u_n).  A bundle is given by a transition
matrix T in the (z, u) coordinates of U ∩ V, acting on frames so that
``s_V = T s_U``.  The line bundle L_k has transition ``z^{-k}``.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .errors import UnsupportedRestriction
from .laurent import LaurentPoly, parse_poly

_NAMED = {
    "W1": (1, 1),
    "W2": (2, 0),
    "W3": (3, -1),
    "D1": (1,),
    "D2": (2,),
    "D3": (3,),
}


@dataclass(frozen=True)
class TotalSpace:
    """Tot(+_k O(-b_k)); the conormal bundle of the zero section is +_k O(b_k)."""

    twists: tuple
    name: str | None = field(default=None, compare=False)

    def __post_init__(self):
        object.__setattr__(self, "twists", tuple(int(b) for b in self.twists))

    @property
    def n(self) -> int:
        return len(self.twists)

    def conormal_ample(self) -> bool:
        return all(b >= 1 for b in self.twists)

    @classmethod
    def named(cls, name: str) -> "TotalSpace":
        key = name.strip().upper()
        if key not in _NAMED:
            raise ValueError(f"unknown space {name!r}; expected one of {sorted(_NAMED)}")
        return cls(_NAMED[key], name=key)

    @classmethod
    def W(cls, i: int) -> "TotalSpace":
        return cls.named(f"W{i}")

    @classmethod
    def D(cls, i: int) -> "TotalSpace":
        return cls.named(f"D{i}")

    @classmethod
    def minus_one(cls, n: int) -> "TotalSpace":
        """Tot(O(-1)^n)."""
        return cls((1,) * n, name=f"O(-1)^{n}")

    @property
    def label(self) -> str:
        if self.name:
            return self.name
        return "Tot(" + " + ".join(f"O({-b})" for b in self.twists) + ")"

    def w_index(self) -> int | None:
        """i if this space is W_i (n=2, twists (i, 2-i)), else None."""
        if self.n == 2 and self.twists[0] + self.twists[1] == 2 and self.twists[0] >= 1:
            return self.twists[0]
        return None

    def surface(self) -> "TotalSpace":
        """The divisor D_i = Tot(O(-b_1)) cut out by u_2 = ... = u_n = 0."""
        b = self.twists[0]
        name = f"D{b}" if self.w_index() is not None and b in (1, 2, 3) else None
        return TotalSpace((b,), name=name)


@dataclass(frozen=True)
class FormalLineBundle:
    """L_k: the unique line bundle restricting to O(k) on Z."""

    degree: int

    def transition(self, n: int) -> LaurentPoly:
        return LaurentPoly.z_power(-self.degree, n)


@dataclass(frozen=True)
class SplitBundle:
    space: TotalSpace
    degrees: tuple

    def __post_init__(self):
        object.__setattr__(self, "degrees", tuple(sorted((int(a) for a in self.degrees), reverse=True)))
        if not self.degrees:
            raise ValueError("a bundle needs positive rank")

    @property
    def rank(self) -> int:
        return len(self.degrees)

    def is_split(self) -> bool:
        return True


@dataclass(frozen=True)
class ExtensionBundle:
    """Extension 0 -> L_{-j} -> E -> L_j -> 0 with transition [[z^j, p], [0, z^-j]]."""

    space: TotalSpace
    j: int
    p: LaurentPoly

    def __post_init__(self):
        if isinstance(self.p, str):
            object.__setattr__(self, "p", parse_poly(self.p, self.space.n))
        if self.j < 0:
            raise ValueError("splitting parameter j must be non-negative")
        if self.p.n != self.space.n:
            raise ValueError("extension class uses the wrong number of fiber variables")

    @property
    def rank(self) -> int:
        return 2

    def is_split(self) -> bool:
        return self.p.is_zero()

    def with_p(self, p: LaurentPoly) -> "ExtensionBundle":
        return ExtensionBundle(self.space, self.j, p)

    def restrict_to_surface(self) -> "ExtensionBundle":
        """Restriction to D = {u_2 = ... = u_n = 0}."""
        surf = self.space.surface()
        return ExtensionBundle(surf, self.j, self.p.restrict([0]))


def transition_matrix(bundle) -> list[list[LaurentPoly]]:
    n = bundle.space.n
    if isinstance(bundle, SplitBundle):
        r = bundle.rank
        return [
            [LaurentPoly.z_power(-bundle.degrees[i], n) if i == k else LaurentPoly.zero(n) for k in range(r)]
            for i in range(r)
        ]
    if isinstance(bundle, ExtensionBundle):
        j = bundle.j
        return [
            [LaurentPoly.z_power(j, n), bundle.p],
            [LaurentPoly.zero(n), LaurentPoly.z_power(-j, n)],
        ]
    raise TypeError(f"unsupported bundle type {type(bundle).__name__}")


def reduce_extension_class(bundle: ExtensionBundle, m: int | None = None) -> LaurentPoly:
    """Canonical representative of the extension class over Z^(m).

    The coboundaries are ``z^j a + z^-j c`` with ``a`` regular on U and ``c``
    regular on V; both spans are monomial, so the class of ``z^k u^I`` is
    zero unless ``b.I - j < k < j``.  ``m=None`` keeps every level.
    """
    b = bundle.space.twists
    j = bundle.j
    p = bundle.p if m is None else bundle.p.truncate_u(m)
    keep = {}
    for (k, us), c in p.items():
        bi = sum(x * e for x, e in zip(b, us))
        if bi - j < k < j:
            keep[(k, us)] = c
    return LaurentPoly(p.n, keep)


def splitting_type(bundle) -> tuple:
    """Splitting type of the restriction to Z, sorted non-increasing."""
    if isinstance(bundle, SplitBundle):
        return bundle.degrees
    j = bundle.j
    on_z = reduce_extension_class(bundle, 0)
    if not on_z.is_zero():
        raise UnsupportedRestriction(
            f"extension class {on_z} is nonzero on Z; the splitting type can jump"
        )
    return (j, -j)
