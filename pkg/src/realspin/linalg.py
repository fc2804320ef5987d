"""Exact Gaussian elimination over the rationals on sparse dict vectors."""

from __future__ import annotations

from fractions import Fraction
from typing import Hashable, Mapping, Sequence

Vector = Mapping[Hashable, Fraction]


class Echelon:
    """Incrementally maintained reduced row-echelon basis of a span.

    Rows are kept fully reduced against each other's pivots, so membership
    testing and coordinate extraction are single passes.
    """

    def __init__(self):
        self.rows: dict[Hashable, dict] = {}   # pivot key -> row with row[pivot] == 1
        self.tags: dict[Hashable, dict] = {}   # pivot key -> combination of inserted vectors

    def __len__(self):
        return len(self.rows)

    def reduce(self, vec: Vector, tag: dict | None = None):
        v = {k: Fraction(c) for k, c in vec.items() if c}
        t = dict(tag) if tag is not None else None
        for piv in [k for k in v if k in self.rows]:
            c = v.get(piv)
            if not c:
                continue
            for k, rc in self.rows[piv].items():
                nv = v.get(k, 0) - c * rc
                if nv:
                    v[k] = nv
                else:
                    v.pop(k, None)
            if t is not None:
                for k, rc in self.tags[piv].items():
                    nt = t.get(k, 0) - c * rc
                    if nt:
                        t[k] = nt
                    else:
                        t.pop(k, None)
        return v, t

    def insert(self, vec: Vector, tag_key: Hashable | None = None) -> bool:
        """Add ``vec`` to the span; returns False if it was already dependent."""
        tag = {tag_key: Fraction(1)} if tag_key is not None else None
        v, t = self.reduce(vec, tag)
        if not v:
            return False
        piv = min(v, key=_sort_key)
        c = v[piv]
        v = {k: x / c for k, x in v.items()}
        if t is not None:
            t = {k: x / c for k, x in t.items()}
        for other, row in self.rows.items():
            oc = row.get(piv)
            if oc:
                for k, x in v.items():
                    nx = row.get(k, 0) - oc * x
                    if nx:
                        row[k] = nx
                    else:
                        row.pop(k, None)
                if t is not None:
                    otag = self.tags[other]
                    for k, x in t.items():
                        nx = otag.get(k, 0) - oc * x
                        if nx:
                            otag[k] = nx
                        else:
                            otag.pop(k, None)
        self.rows[piv] = v
        if t is not None:
            self.tags[piv] = t
        return True

    def contains(self, vec: Vector) -> bool:
        return not self.reduce(vec)[0]

    def express(self, vec: Vector) -> dict | None:
        """Coordinates of ``vec`` in terms of the tagged inserted vectors, or None."""
        v, t = self.reduce(vec, {})
        if v:
            return None
        return {k: -c for k, c in t.items() if c}


def _sort_key(k):
    return (str(type(k)), k) if not isinstance(k, tuple) else (str(type(k)), tuple(-x for x in k))


def rank(vectors: Sequence[Vector]) -> int:
    ech = Echelon()
    for v in vectors:
        ech.insert(v)
    return len(ech)


def solve_square(columns: Sequence[Vector]):
    """Return a solver ``x -> coefficients`` for the span of independent columns."""
    ech = Echelon()
    for i, col in enumerate(columns):
        if not ech.insert(col, tag_key=i):
            raise ArithmeticError(f"column {i} is linearly dependent")
    return ech.express
