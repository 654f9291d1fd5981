#!/usr/bin/env python3
"""
Generating-function expansions for infinitesimal Hecke relations

r-series (gl_n): (x, (1 - TA)^-1 y) det(1 - TA)^-1 = sum r_i(x,y)(A) T^i
l-series (sp_2): w(x, (1 - T^2 A^2)^-1 y) det(1 - TA)^-1 = sum l_i(x,y)(A) T^i

det(1 - TA)^-1 is expanded as exp(sum_m tr(A^m) T^m / m) through the
Newton recursion k E_k = sum_{m=1..k} tr(A^m) E_{k-m}. Coefficients are
polynomials in the matrix entries a_jk (sympy PolyElements over QQ).
"""

import logging
from typing import Dict, Mapping

from sympy import QQ
from sympy.polys.rings import ring
from sympy.utilities.iterables import multiset_permutations

from .errors import PresentationError, UnsupportedParameterError

logger = logging.getLogger(__name__)

MAX_SERIES_INDEX = 4

# symplectic form on k^2: w(e1, e2) = 1
OMEGA = ((0, 1), (-1, 0))
# explicit sp relation [e1, e2] = beta0 * (1 - 2) / 1 against l0(e1, e2) = w(e1, e2) = 1
SP_NORMALIZATION = -1


def gl_ring(n: int):
    names = ",".join(f"a{j}{k}" for j in range(1, n + 1) for k in range(1, n + 1))
    result = ring(names, QQ)
    return result[0], list(result[1:])


def gl_matrix(n: int):
    """Generic n x n matrix of indeterminates a_jk"""
    R, gens = gl_ring(n)
    return R, [[gens[j * n + k] for k in range(n)] for j in range(n)]


def sp_matrix():
    """Generic traceless 2 x 2 matrix [[a11, a12], [a21, -a11]]"""
    R, a11, a12, a21 = ring("a11,a12,a21", QQ)
    return R, [[a11, a12], [a21, -a11]]


def transpose(matrix):
    n = len(matrix)
    return [[matrix[k][j] for k in range(n)] for j in range(n)]


def mat_mul(a, b, R):
    n = len(a)
    return [[sum((a[j][m] * b[m][k] for m in range(n)), R.zero) for k in range(n)] for j in range(n)]


def powers(matrix, R, count: int):
    n = len(matrix)
    result = [[[R.one if j == k else R.zero for k in range(n)] for j in range(n)]]
    for _ in range(count):
        result.append(mat_mul(result[-1], matrix, R))
    return result


def det_inverse_coefficients(matrix, R, i_max: int) -> list:
    """Coefficients E_0..E_imax of det(1 - TA)^-1"""
    power_list = powers(matrix, R, i_max)
    traces = [sum((p[j][j] for j in range(len(matrix))), R.zero) for p in power_list]
    coefficients = [R.one]
    for k in range(1, i_max + 1):
        total = R.zero
        for m in range(1, k + 1):
            total += traces[m] * coefficients[k - m]
        coefficients.append(total.quo_ground(QQ(k)))
    return coefficients


def _check_index(name: str, value: int, n: int):
    if not 1 <= value <= n:
        raise UnsupportedParameterError(f"{name} index {value} outside 1..{n}")


def r_series_coefficients(matrix, R, x: int, y: int, i_max: int) -> list:
    """r_0..r_imax for covector index x and vector index y (1-based)"""
    power_list = powers(matrix, R, i_max)
    dets = det_inverse_coefficients(matrix, R, i_max)
    return [sum((power_list[k][x - 1][y - 1] * dets[i - k] for k in range(i + 1)), R.zero)
            for i in range(i_max + 1)]


def expand_r_series(n: int, x: int, y: int, i_max: int) -> list:
    if not 1 <= n <= 3:
        raise UnsupportedParameterError(f"r-series needs 1 <= n <= 3, got {n}")
    if not 0 <= i_max <= MAX_SERIES_INDEX:
        raise UnsupportedParameterError(f"r-series needs i_max <= {MAX_SERIES_INDEX}")
    _check_index("covector", x, n)
    _check_index("vector", y, n)
    R, matrix = gl_matrix(n)
    return r_series_coefficients(matrix, R, x, y, i_max)


def omega(x: int, y: int) -> int:
    return OMEGA[x - 1][y - 1]


def l_series_full(matrix, R, x: int, y: int, i_max: int) -> list:
    """All coefficients (odd ones included) of the l generating function"""
    power_list = powers(matrix, R, i_max)
    dets = det_inverse_coefficients(matrix, R, i_max)
    coefficients = []
    for i in range(i_max + 1):
        total = R.zero
        for k in range(0, i + 1, 2):
            pairing = sum((QQ(OMEGA[x - 1][m]) * power_list[k][m][y - 1] for m in range(2)), R.zero)
            total += pairing * dets[i - k]
        coefficients.append(total)
    return coefficients


def expand_l_series(n: int, x: int, y: int, i_max: int) -> list:
    """Even coefficients l_0, l_2, ... on traceless A"""
    if n != 1:
        raise UnsupportedParameterError(f"l-series is implemented for sp_2 (n = 1), got n = {n}")
    if not 0 <= i_max <= MAX_SERIES_INDEX:
        raise UnsupportedParameterError(f"l-series needs i_max <= {MAX_SERIES_INDEX}")
    _check_index("vector", x, 2)
    _check_index("vector", y, 2)
    R, matrix = sp_matrix()
    full = l_series_full(matrix, R, x, y, i_max)
    for i in range(1, i_max + 1, 2):
        if full[i]:
            raise PresentationError(f"odd l-coefficient T^{i} does not vanish: {full[i]}")
    return full[0::2]


# ----------------------------------------------------------------------
# identities used by the Hecke constructions

def transpose_identity(n: int, i_max: int) -> bool:
    """r_i(x=k, y=l)(A^T) == r_i(x=l, y=k)(A) for all k, l, i"""
    R, matrix = gl_matrix(n)
    flipped = transpose(matrix)
    for k in range(1, n + 1):
        for l in range(1, n + 1):
            left = r_series_coefficients(flipped, R, k, l, i_max)
            right = r_series_coefficients(matrix, R, l, k, i_max)
            if any(a != b for a, b in zip(left, right)):
                return False
    return True


def sp_involution_matrix(matrix):
    """j(C) = tau C^T tau with tau = diag(1, -1)"""
    signs = (1, -1)
    return [[signs[j] * matrix[k][j] * signs[k] for k in range(2)] for j in range(2)]


def linv_identity(i_max: int) -> bool:
    """l_i(x, y)(A) == l_i(j(y), j(x))(j(A)) with j swapping e1 and e2"""
    R, matrix = sp_matrix()
    image = sp_involution_matrix(matrix)
    swap = {1: 2, 2: 1}
    for x in (1, 2):
        for y in (1, 2):
            left = l_series_full(matrix, R, x, y, i_max)
            right = l_series_full(image, R, swap[y], swap[x], i_max)
            if any(a != b for a, b in zip(left[0::2], right[0::2])):
                return False
    return True


def sp_normalization_constant() -> int:
    """Ratio of the explicit [e1, e2] constant to beta0 * l0(e1, e2)"""
    n, i, j = 1, 1, 2
    explicit = QQ(i - j, n) if abs(i - j) == n else QQ(0)
    l0 = expand_l_series(1, 1, 2, 0)[0]
    return int(explicit / l0.LC)


# ----------------------------------------------------------------------
# symmetrization Sym(g) -> U(g)

def symmetrize(poly, images: Mapping[str, object], presentation):
    """Average over all orderings of each monomial, then reduce"""
    R = poly.ring
    names = [str(s) for s in R.symbols]
    result = presentation.scalar(0)
    for monom, coeff in poly.terms():
        letters = []
        for position, exponent in enumerate(monom):
            if exponent:
                if names[position] not in images:
                    raise PresentationError(f"indeterminate {names[position]} has no image")
                letters.extend([position] * exponent)
        arrangements = list(multiset_permutations(letters))
        total = presentation.scalar(0)
        for arrangement in arrangements:
            product = presentation.scalar(1)
            for position in arrangement:
                product = product * images[names[position]]
            total = total + product
        scale = presentation.field.convert(coeff) / presentation.field.convert(len(arrangements))
        result = result + total * scale
    return result


def gl_images(presentation, n: int, prefix: str = "E") -> Dict[str, object]:
    """Trace-pairing identification a_jk <-> E_kj"""
    return {f"a{j}{k}": presentation.generator(f"{prefix}{k}{j}")
            for j in range(1, n + 1) for k in range(1, n + 1)}


def sp_images(presentation) -> Dict[str, object]:
    """Trace-pairing identification on sp_2 in the u/v/w basis"""
    half = presentation.field.fraction(1, 2)
    return {
        "a11": presentation.generator("u11") * half,
        "a12": presentation.generator("w11") * half,
        "a21": presentation.generator("v11") * half,
    }
