"""Exact rank of sparse rational matrices.

Rows are dicts ``{column_key: value}``; column keys are arbitrary hashables.
Čech coboundary matrices are dominated by rows and columns with a single
entry, so those are peeled off first; the remaining core is reduced by
Gaussian elimination over ``Fraction`` with a sparsest-row pivot order.
"""

from __future__ import annotations

from collections import defaultdict
from fractions import Fraction
from typing import Hashable, Iterable, Mapping


def _clean(rows: Iterable[Mapping]) -> list[dict]:
    out = []
    for r in rows:
        d = {k: Fraction(v) for k, v in r.items() if v != 0}
        if d:
            out.append(d)
    return out


def _peel_singletons(rows: list[dict]) -> tuple[int, list[dict]]:
    """Remove row- and column-singletons; returns (rank found, remaining rows)."""
    rank = 0
    alive = dict(enumerate(rows))
    col_rows: dict[Hashable, set] = defaultdict(set)
    for i, r in alive.items():
        for c in r:
            col_rows[c].add(i)

    def drop_row(i):
        for c in alive[i]:
            col_rows[c].discard(i)
        del alive[i]

    def kill_col(c):
        # A singleton row pivots on c: column c is dead for every other row.
        for i in list(col_rows.get(c, ())):
            r = alive[i]
            del r[c]
            if not r:
                del alive[i]
        col_rows.pop(c, None)

    stack_rows = [i for i, r in alive.items() if len(r) == 1]
    stack_cols = [c for c, s in col_rows.items() if len(s) == 1]
    while stack_rows or stack_cols:
        while stack_rows:
            i = stack_rows.pop()
            r = alive.get(i)
            if r is None or len(r) != 1:
                continue
            (c,) = r
            rank += 1
            drop_row(i)
            touched = list(col_rows.get(c, ()))
            kill_col(c)
            for j in touched:
                rj = alive.get(j)
                if rj is not None and len(rj) == 1:
                    stack_rows.append(j)
        while stack_cols:
            c = stack_cols.pop()
            owners = col_rows.get(c)
            if not owners or len(owners) != 1:
                continue
            (i,) = owners
            rank += 1
            others = [c2 for c2 in alive[i] if c2 != c]
            drop_row(i)
            col_rows.pop(c, None)
            for c2 in others:
                s = col_rows.get(c2)
                if s is not None and len(s) == 1:
                    stack_cols.append(c2)
    return rank, list(alive.values())


def _eliminate(rows: list[dict]) -> int:
    # Each stored pivot row is reduced against all earlier pivots, so one
    # pass in insertion order fully reduces a new row.
    pivots: list[tuple[Hashable, dict]] = []
    for row in sorted(rows, key=len):
        r = dict(row)
        for col, p in pivots:
            x = r.get(col)
            if x is None:
                continue
            f = x / p[col]
            for c, v in p.items():
                nv = r.get(c, 0) - f * v
                if nv:
                    r[c] = nv
                else:
                    r.pop(c, None)
        if r:
            col = min(r, key=lambda c: (len(str(c)), str(c)))
            pivots.append((col, r))
    return len(pivots)


def rank(rows: Iterable[Mapping]) -> int:
    """Exact rank of the matrix whose rows are the given sparse dicts."""
    work = _clean(rows)
    found, core = _peel_singletons(work)
    return found + _eliminate(core)


def reduce_against(vector: Mapping, basis_rows: Iterable[Mapping]) -> dict:
    """Normal form of ``vector`` modulo the row span of ``basis_rows``.

    Pivots are chosen as the largest column key so the result is canonical
    for a fixed column order.
    """
    pivots: dict[Hashable, dict] = {}
    for row in _clean(basis_rows):
        r = _reduce(row, pivots)
        if r:
            lead = max(r)
            inv = 1 / r[lead]
            r = {c: v * inv for c, v in r.items()}
            for q in pivots.values():
                if lead in q:
                    f = q[lead]
                    for c, v in r.items():
                        nv = q.get(c, 0) - f * v
                        if nv:
                            q[c] = nv
                        else:
                            q.pop(c, None)
            pivots[lead] = r
    return _reduce({k: Fraction(v) for k, v in vector.items() if v}, pivots)


def _reduce(row: dict, pivots: dict) -> dict:
    r = dict(row)
    for lead in sorted(pivots, reverse=True):
        if lead in r:
            f = r[lead]
            for c, v in pivots[lead].items():
                nv = r.get(c, 0) - f * v
                if nv:
                    r[c] = nv
                else:
                    r.pop(c, None)
    return r
