"""Reference copy of the (χ, h', w') table for rank-2 bundles on W_1, W_2, W_3.

This is checked-in data, not computed: the reproduction run compares the
Čech results against it cell by cell.
"""

from __future__ import annotations

from .cech import INF
from . import invariants as _inv

SPACES = ("W1", "W2", "W3")
ANY = "any"

# rows with p = "any" are checked for several sample classes
ANY_P_SAMPLES = {
    0: ("0", "u1", "u2", "z^-1*u1 + u2^2"),
    1: ("0", "u1", "u2", "z*u1 + u2^2"),
}

REFERENCE_ROWS = (
    ("j=0, any p", 0, ANY, ((0, 0, 0), (0, 0, 0), (INF, 0, 0))),
    ("j=1, any p", 1, ANY, ((0, 0, 1), (0, 0, 0), (INF, 0, 0))),
    ("j=3, p=u_1", 3, "u1", ((3, 2, 1), (INF, 2, 1), (INF, 2, 1))),
    ("j=4, p=z u_1", 4, "z*u1", ((6, 3, 1), (INF, 3, 0), (INF, 3, 0))),
    ("j=4, p=z^3 u_1", 4, "z^3*u1", ((7, 4, 6), (INF, 3, 2), (INF, 3, 1))),
    ("j=4, p=z^3 u_1^2", 4, "z^3*u1^2", ((9, 5, 6), (INF, 4, 2), (INF, 3, 2))),
    ("j=5, p=z u_1", 5, "z*u1", ((10, 4, 1), (INF, 4, 0), (INF, 4, 0))),
    ("j=5, p=z^3 u_1", 5, "z^3*u1", ((11, 5, 6), (INF, 4, 2), (INF, 4, 1))),
    ("j=5, p=z^3 u_1^2", 5, "z^3*u1^2", ((16, 7, 6), (INF, 6, 2), (INF, 5, 2))),
)

SPLIT_ROW_LABEL = "j>=2, p=0"
DEFAULT_SPLIT_J = tuple(range(2, 9))


def split_row_expected(j: int) -> tuple:
    """The formula row: (f_0, f_1, g_1 | inf, f_2, g_2 | inf, f_3, g_3) at j."""
    if j < 2:
        raise ValueError("the split-bundle row covers j >= 2")
    return (
        (_inv.f0(j), _inv.f1(j), _inv.g1(j)),
        (INF, _inv.f2(j), _inv.g2(j)),
        (INF, _inv.f3(j), _inv.g3(j)),
    )
