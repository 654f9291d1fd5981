#!/usr/bin/env python3
"""
Exact linear algebra over QQ and QQ(q)
Row reduction is done by sympy's DomainMatrix; rows are plain lists
"""

import logging
from typing import List, Optional, Sequence, Tuple

from sympy.polys.matrices import DomainMatrix

logger = logging.getLogger(__name__)

Row = List[object]


def _matrix(rows: Sequence[Sequence], ncols: int, field) -> DomainMatrix:
    return DomainMatrix([list(r) for r in rows], (len(rows), ncols), field.domain)


def rref(rows: Sequence[Sequence], ncols: int, field) -> Tuple[List[Row], Tuple[int, ...]]:
    """Reduced row echelon form and pivot columns"""
    if not rows or ncols == 0:
        return [], ()
    reduced, pivots = _matrix(rows, ncols, field).rref()
    return reduced.to_list(), tuple(pivots)


def rank(rows: Sequence[Sequence], ncols: int, field) -> int:
    return len(rref(rows, ncols, field)[1])


def row_basis(rows: Sequence[Sequence], ncols: int, field) -> List[Row]:
    """Nonzero rows of the rref: a basis of the row space"""
    reduced, pivots = rref(rows, ncols, field)
    return reduced[:len(pivots)]


def kernel(rows: Sequence[Sequence], ncols: int, field) -> List[Row]:
    """Basis of {x : M x = 0}; each vector has a 1 in its own free column"""
    reduced, pivots = rref(rows, ncols, field)
    pivot_set = set(pivots)
    basis = []
    for free in range(ncols):
        if free in pivot_set:
            continue
        vector = [field.zero] * ncols
        vector[free] = field.one
        for r, p in enumerate(pivots):
            vector[p] = -reduced[r][free]
        basis.append(vector)
    return basis


def solve(rows: Sequence[Sequence], rhs: Sequence, field, ncols: Optional[int] = None) -> Optional[Row]:
    """One solution of M x = rhs (free variables set to zero), or None"""
    if ncols is None:
        ncols = len(rows[0]) if rows else 0
    if not rows:
        return [field.zero] * ncols if not any(rhs) else None
    augmented = [list(r) + [b] for r, b in zip(rows, rhs)]
    reduced, pivots = rref(augmented, ncols + 1, field)
    if ncols in pivots:
        return None
    solution = [field.zero] * ncols
    for r, p in enumerate(pivots):
        solution[p] = reduced[r][ncols]
    return solution


def mat_vec(matrix: Sequence[Sequence], vector: Sequence, field) -> Row:
    result = []
    for row in matrix:
        total = field.zero
        for a, b in zip(row, vector):
            if a and b:
                total += a * b
        result.append(total)
    return result


def mat_mul(left: Sequence[Sequence], right: Sequence[Sequence], inner: int, ncols: int, field) -> List[Row]:
    """left (m x inner) times right (inner x ncols)"""
    result = []
    for row in left:
        out = [field.zero] * ncols
        for k in range(inner):
            a = row[k]
            if not a:
                continue
            for j, b in enumerate(right[k]):
                if b:
                    out[j] += a * b
        result.append(out)
    return result


def is_zero_vector(vector: Sequence) -> bool:
    return not any(vector)
