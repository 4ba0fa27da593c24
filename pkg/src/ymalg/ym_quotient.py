"""The Yang-Mills relations, the graded ideal they generate, and dimensions.

ym(n) is the quotient of the free Lie algebra f(n) by the ideal generated by
the degree-3 relators r_j = sum over i of [x_i, [x_i, x_j]].  The "strong"
presentation instead kills every [x_i, [x_i, x_j]] individually.

Since f(n) is generated in degree 1, the graded components of the ideal close
under left bracketing with the generators alone: I_3 is the span of the
relators and I_{d+1} = [V(n), I_d].
"""

from __future__ import annotations

import csv
import io
import json
from dataclasses import dataclass
from functools import lru_cache
from typing import Sequence

from .free_lie import (
    DEFAULT_DEGREE_CAP,
    FreeLieElement,
    GradedDims,
    _check_cap,
    bracket,
    free_lie_dim,
    lyndon_basis,
)
from .linalg import Echelon, reduce_against_rref


@dataclass(frozen=True)
class YangMillsPresentation:
    """Relators of ym(n) (weak: n sums) or of the strong quotient (the
    individual brackets [x_i,[x_i,x_j]], i != j; the i = j ones vanish)."""

    n: int
    strong: bool
    relators: tuple

    def __post_init__(self):
        for r in self.relators:
            if not r.is_zero and r.degrees() != (3,):
                raise ValueError("relators must be homogeneous of degree 3")


@lru_cache(maxsize=None)
def ym_relations(n: int, strong: bool = False) -> YangMillsPresentation:
    """The Yang-Mills presentation on n generators.

    Weak form: r_j = sum_i [x_i,[x_i,x_j]] for j = 1..n (r_j may be the zero
    element, e.g. for n = 1).  Strong form: the n^2 brackets [x_i,[x_i,x_j]]
    with the identically-zero i = j ones dropped.
    """
    if n < 1:
        raise ValueError("need n >= 1")
    x = [FreeLieElement.generator(n, j) for j in range(1, n + 1)]
    if strong:
        relators = tuple(
            bracket(x[i], bracket(x[i], x[j]))
            for i in range(n)
            for j in range(n)
            if i != j
        )
    else:
        relators = []
        for j in range(n):
            r = FreeLieElement.zero(n)
            for i in range(n):
                r = r + bracket(x[i], bracket(x[i], x[j]))
            relators.append(r)
        relators = tuple(relators)
    return YangMillsPresentation(n=n, strong=strong, relators=relators)


def strong_relation_elements(n: int) -> list:
    """All n^2 strong relation elements [x_i,[x_i,x_j]], labelled by (i, j).

    Includes the identically-zero i = j entries; morphism residual checks
    evaluate every one of them.
    """
    x = [FreeLieElement.generator(n, j) for j in range(1, n + 1)]
    return [
        ((i + 1, j + 1), bracket(x[i], bracket(x[i], x[j])))
        for i in range(n)
        for j in range(n)
    ]


@dataclass(frozen=True)
class GradedSubspace:
    """A subspace of f(n)_d as a reduced row-echelon coefficient matrix in
    lyndon_basis(n, d) coordinates.  No zero rows; row count = dimension."""

    n: int
    degree: int
    rows: tuple
    pivots: tuple

    @classmethod
    def zero(cls, n: int, degree: int) -> "GradedSubspace":
        return cls(n=n, degree=degree, rows=(), pivots=())

    @property
    def dim(self) -> int:
        return len(self.rows)

    def contains_coords(self, coords: Sequence) -> bool:
        residue = reduce_against_rref(self.rows, self.pivots, coords)
        return not any(residue)

    def contains(self, elem: FreeLieElement) -> bool:
        if elem.n != self.n:
            raise ValueError("generator count mismatch")
        return self.contains_coords(elem.coordinates(self.degree))

    def basis_elements(self) -> list:
        basis = lyndon_basis(self.n, self.degree)
        return [
            FreeLieElement(
                self.n,
                {w: c for w, c in zip(basis, row) if c},
                _trusted=True,
            )
            for row in self.rows
        ]


def _subspace_from_echelon(n: int, degree: int, ech: Echelon) -> GradedSubspace:
    ncols = free_lie_dim(n, degree)
    rows = ech.rref(range(ncols))
    pivots = tuple(next(k for k, v in enumerate(row) if v) for row in rows)
    return GradedSubspace(
        n=n,
        degree=degree,
        rows=tuple(tuple(row) for row in rows),
        pivots=pivots,
    )


@lru_cache(maxsize=None)
def _ideal_component(pres: YangMillsPresentation, d: int) -> GradedSubspace:
    n = pres.n
    if d < 3:
        return GradedSubspace.zero(n, d)
    basis = lyndon_basis(n, d)
    ech = Echelon()
    if d == 3:
        for r in pres.relators:
            if not r.is_zero:
                ech.insert_dense(r.coordinates(3, basis))
    else:
        generators = [FreeLieElement.generator(n, j) for j in range(1, n + 1)]
        for elem in _ideal_component(pres, d - 1).basis_elements():
            for x in generators:
                ech.insert_dense(bracket(x, elem).coordinates(d, basis))
    return _subspace_from_echelon(n, d, ech)


def ideal_graded_component(
    pres: YangMillsPresentation, d: int, degree_cap: int = DEFAULT_DEGREE_CAP
) -> GradedSubspace:
    """Degree-d component of the two-sided Lie ideal generated by the
    relators, computed by iterated bracketing with the generators followed
    by exact row reduction.  Degrees below 3 give the zero subspace."""
    if d < 1:
        raise ValueError("need d >= 1")
    _check_cap(d, degree_cap)
    return _ideal_component(pres, d)


def ym_dim(
    n: int,
    d: int,
    strong: bool = False,
    degree_cap: int = DEFAULT_DEGREE_CAP,
) -> int:
    """dim ym(n)_d = free_lie_dim(n, d) - dim of the ideal component.

    Degrees 1 and 2 are untouched by the degree-3 relators.
    """
    if d < 3:
        return free_lie_dim(n, d)
    pres = ym_relations(n, strong)
    return free_lie_dim(n, d) - ideal_graded_component(pres, d, degree_cap).dim


def ym_graded_dims(
    n: int,
    max_degree: int,
    strong: bool = False,
    degree_cap: int = DEFAULT_DEGREE_CAP,
) -> GradedDims:
    return GradedDims(
        n=n,
        dims=tuple(
            ym_dim(n, d, strong, degree_cap) for d in range(1, max_degree + 1)
        ),
    )


def is_zero_in_ym(
    pres: YangMillsPresentation,
    a: FreeLieElement,
    degree_cap: int = DEFAULT_DEGREE_CAP,
) -> bool:
    """True iff every homogeneous part of ``a`` lies in the corresponding
    graded component of the relator ideal."""
    return all(ideal_membership_by_degree(pres, a, degree_cap).values())


def ideal_membership_by_degree(
    pres: YangMillsPresentation,
    a: FreeLieElement,
    degree_cap: int = DEFAULT_DEGREE_CAP,
) -> dict:
    """Per-degree ideal membership of the homogeneous parts of ``a``."""
    if a.n != pres.n:
        raise ValueError("generator count mismatch")
    out = {}
    for d in a.degrees():
        _check_cap(d, degree_cap)
        part = a.homogeneous_part(d)
        if d < 3:
            out[d] = part.is_zero
        else:
            out[d] = ideal_graded_component(pres, d, degree_cap).contains(part)
    return out


# -- dimension tables ---------------------------------------------------------


def dims_table(
    n: int,
    max_degree: int,
    strong: bool = False,
    degree_cap: int = DEFAULT_DEGREE_CAP,
) -> list:
    """Rows of (degree, free_dim, ideal_dim, ym_dim) for degrees 1..max_degree."""
    if max_degree < 1:
        raise ValueError("need max_degree >= 1")
    _check_cap(max_degree, degree_cap)
    pres = ym_relations(n, strong)
    rows = []
    for d in range(1, max_degree + 1):
        free = free_lie_dim(n, d)
        ideal = ideal_graded_component(pres, d, degree_cap).dim if d >= 3 else 0
        rows.append(
            {
                "degree": d,
                "free_dim": free,
                "ideal_dim": ideal,
                "ym_dim": free - ideal,
            }
        )
    return rows


def dims_table_csv(rows: list) -> str:
    buf = io.StringIO()
    writer = csv.DictWriter(
        buf, fieldnames=["degree", "free_dim", "ideal_dim", "ym_dim"],
        lineterminator="\n",
    )
    writer.writeheader()
    writer.writerows(rows)
    return buf.getvalue()


def dims_table_json(n: int, strong: bool, rows: list) -> str:
    return json.dumps(
        {"n": n, "strong": strong, "table": rows}, sort_keys=True, indent=2
    )
