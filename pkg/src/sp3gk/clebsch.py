"""Clebsch-Gordan injectors for tensoring with the two p-block modules.

Three families of equivariant maps, all written on the monomial basis with
integer coefficients:

* ``inject_vec``  -- V_{lam+e_i}        -> V_lam (x) V_(1,0,0)
* ``inject_pos``  -- V_{lam+e_i+e_j}    -> V_lam (x) V_(2,0,0)
* ``inject_neg``  -- V_{lam-e_i-e_j}    -> V_lam (x) V_(0,0,-2)

together with the projector V_(1,0,0) (x) V_(1,0,0) -> V_(2,0,0).  The
coefficient functions are implemented exactly as printed, piecewise factors
included; ``verify_equivariance`` is the machine proof that they are correct,
and the ``composed`` mode of ``inject_pos`` rederives the same coefficients
from the rank-one injectors and the projector.
"""

from __future__ import annotations

from typing import Dict, Optional, Tuple

from . import glmodule
from .gtpattern import (Pattern, c1, c1bar, c2, chi_minus, chi_plus, delta,
                        enumerate_patterns, is_dominant)

TensorElement = Dict[Tuple[Pattern, Pattern], object]


class ComponentAbsent(ValueError):
    """Raised when the requested irreducible component does not occur."""


def _ebar(M: Pattern) -> int:
    return c1(M) * (M.m13 - M.m33 + 1 - c1bar(M))


def _fbar(M: Pattern) -> int:
    return -c2(M) - chi_plus(M) * ((M.m13 - M.m12) * (M.m22 - M.m33)
                                   + (M.m13 - M.m33 + 1) * delta(M))


def _dbar(M: Pattern) -> int:
    return -M.m22 + M.m33 + delta(M)


# ---------------------------------------------------------------------------
# rank-one injectors  V_{lam+e_i} -> V_lam (x) V_(1,0,0)
#
# c_coeff(i, j, k, l, M): coefficient attached to the term with right factor
# f(1,0,0; k,0; j) and left factor M shifted by top -e_i, mid (0,-k), bot -j,
# then [-l].  Out-of-range l gives 0.

VEC_BOUNDS = {
    1: {(1, 1): 1, (0, 1): 2, (0, 0): 1},
    2: {(1, 1): 1, (0, 1): 1, (0, 0): 1},
    3: {(1, 1): 0, (0, 1): 1, (0, 0): 0},
}


def c_coeff(i: int, j: int, k: int, l: int, M: Pattern) -> int:
    if l < 0 or l > VEC_BOUNDS[i][(j, k)]:
        return 0
    m13, m23, m33, m12, m22, m11 = M
    if i == 1:
        if (j, k) == (1, 1):
            return ((m13 - m12) * (m22 - m33) if l == 0 else -_ebar(M))
        if (j, k) == (0, 1):
            if l == 0:
                return -(m13 - m12) * (m22 - m33)
            if l == 1:
                return _fbar(M)
            return -c2(M) * chi_plus(M)
        # (0, 0)
        return (-(m13 - m12) * (m13 - m22 + 1) if l == 0 else c2(M))
    if i == 2:
        if (j, k) == (1, 1):
            return (m22 - m33 if l == 0 else -_dbar(M) * chi_minus(M))
        if (j, k) == (0, 1):
            return (-(m22 - m33) if l == 0 else c1bar(M))
        return (-(m23 - m22) if l == 0 else -c1bar(M) * chi_minus(M))
    if i == 3:
        if (j, k) == (1, 1):
            return 1
        if (j, k) == (0, 1):
            return -1 if l == 0 else -chi_plus(M)
        return 1
    raise ValueError(f"direction index {i} out of range")


_E_UNIT = {1: (-1, 0, 0), 2: (0, -1, 0), 3: (0, 0, -1)}


def _tensor_add(t: TensorElement, left: Pattern, right: Pattern, coeff) -> None:
    if not coeff or not left.is_valid():
        return
    key = (left, right)
    new = t.get(key, 0) + coeff
    if new:
        t[key] = new
    else:
        t.pop(key, None)


def inject_vec(lam: tuple[int, int, int], i: int, M: Pattern) -> TensorElement:
    """Image of f(M), M of type lam+e_i, in V_lam (x) V_(1,0,0)."""
    target = tuple(lam[a] + (1 if a == i - 1 else 0) for a in range(3))
    if not is_dominant(target):
        raise ComponentAbsent(f"component {target} absent from {lam} (x) (1,0,0)")
    if M.top != target:
        raise ValueError(f"pattern {M} is not of type {target}")
    out: TensorElement = {}
    for k in (0, 1):
        for j in range(0, k + 1):
            right = Pattern(1, 0, 0, k, 0, j)
            for l in range(VEC_BOUNDS[i][(j, k)] + 1):
                left = M.moved(top=_E_UNIT[i], mid=(0, -k), bot=-j, k=-l)
                _tensor_add(out, left, right, c_coeff(i, j, k, l, M))
    return out


def project_e1(t: TensorElement) -> glmodule.ModuleElement:
    """Projector V_(1,0,0) (x) V_(1,0,0) -> V_(2,0,0) on the monomial basis.

    f(1,0,0;k,0;j) (x) f(1,0,0;l,0;m) goes to f(2,0,0;k+l,0;j+m).
    """
    out: glmodule.ModuleElement = {}
    for (a, b), coeff in t.items():
        if a.top != (1, 0, 0) or b.top != (1, 0, 0):
            raise ValueError("projector expects factors of type (1,0,0)")
        image = Pattern(2, 0, 0, a.m12 + b.m12, 0, a.m11 + b.m11)
        glmodule._add(out, image, coeff)
    return out


# ---------------------------------------------------------------------------
# injectors  V_{lam+e_i+e_j} -> V_lam (x) V_(2,0,0)
#
# C_pos(i, j, M, l, k, m): coefficient attached to the term with right factor
# f(2,0,0; l,0; k) and left factor M shifted by top -e_i-e_j, mid (0,-l),
# bot -k, then [-m].  Bounds are per (i,j) and block (l,k).

POS_BOUNDS = {
    (1, 1): {(2, 2): 2, (2, 1): 3, (1, 1): 2, (2, 0): 4, (1, 0): 3, (0, 0): 2},
    (2, 2): {(2, 2): 2, (2, 1): 2, (1, 1): 2, (2, 0): 2, (1, 0): 2, (0, 0): 2},
    (3, 3): {(2, 2): 0, (2, 1): 1, (1, 1): 0, (2, 0): 2, (1, 0): 1, (0, 0): 0},
    (1, 2): {(2, 2): 2, (2, 1): 2, (1, 1): 2, (2, 0): 3, (1, 0): 2, (0, 0): 2},
    (1, 3): {(2, 2): 1, (2, 1): 2, (1, 1): 1, (2, 0): 3, (1, 0): 2, (0, 0): 1},
    (2, 3): {(2, 2): 1, (2, 1): 1, (1, 1): 1, (2, 0): 2, (1, 0): 1, (0, 0): 1},
}


def _c11(M: Pattern, l: int, k: int, m: int) -> int:
    m13, m23, m33, m12, m22, m11 = M
    if (l, k) == (2, 2):
        if m == 0:
            return (m13 - m12) * (m13 - m12 - 1) * (m22 - m33) * (m22 - m33 - 1)
        if m == 1:
            return -2 * (m13 - m12) * (m22 - m33) * (_ebar(M) - c1(M))
        return _ebar(M) * (c1(M) - 1) * (m13 - m33 - c1bar(M))
    if (l, k) == (2, 1):
        if m == 0:
            return -2 * (m13 - m12) * (m13 - m12 - 1) * (m22 - m33) * (m22 - m33 - 1)
        if m == 1:
            return 2 * (m13 - m12) * (m22 - m33) * (
                _fbar(M.moved(top=(-1, 0, 0), mid=(0, -1), bot=-1)) + _ebar(M))
        if m == 2:
            return -2 * (_ebar(M) * _fbar(M.moved(top=(-1, 0, 0), mid=(-1, 0), bot=-1))
                         + (m13 - m12) * (m22 - m33) * c1(M) * (c1bar(M) + 1)
                         * chi_plus(M))
        return 2 * (c1(M) - 1) * c1bar(M) * _ebar(M) * chi_plus(M)
    if (l, k) == (1, 1):
        if m == 0:
            return -2 * (m13 - m12) * (m13 - m12 - 1) * (m22 - m33) * (m13 - m22 + 1)
        if m == 1:
            return 2 * (m13 - m12) * ((m22 - m33) * c1(M) * (c1bar(M) + 1)
                                      + (m13 - m22) * _ebar(M))
        return -2 * _ebar(M) * (c1(M) - 1) * c1bar(M)
    if (l, k) == (2, 0):
        if m == 0:
            return (m13 - m12) * (m13 - m12 - 1) * (m22 - m33) * (m22 - m33 - 1)
        if m == 1:
            return -(m13 - m12) * (m22 - m33) * (
                _fbar(M) + _fbar(M.moved(top=(-1, 0, 0), mid=(0, -1))))
        if m == 2:
            return ((m13 - m12 + 1) * (m22 - m33 + 1) * c2(M) * chi_plus(M)
                    + (m13 - m12) * (m22 - m33) * (c1(M) + 1) * (c1bar(M) + 1)
                    * chi_plus(M, 1)
                    + _fbar(M) * _fbar(M.moved(top=(-1, 0, 0), mid=(-1, 0))))
        if m == 3:
            return -c2(M) * (chi_plus(M, 1) * _fbar(M)
                             + chi_plus(M) * _fbar(M.moved(top=(-1, 0, 0), mid=(-2, 1))))
        return c2(M) * (c1(M) - 1) * (c1bar(M) - 1) * chi_plus(M, 1)
    if (l, k) == (1, 0):
        if m == 0:
            return 2 * (m13 - m12) * (m13 - m12 - 1) * (m22 - m33) * (m13 - m22 + 1)
        if m == 1:
            return -2 * (m13 - m12) * (
                (m13 - m22) * _fbar(M)
                + (m22 - m33) * c2(M.moved(top=(-1, 0, 0), mid=(0, -1))))
        if m == 2:
            return 2 * (c2(M.moved(top=(-1, 0, 0), mid=(-1, 0))) * _fbar(M)
                        + chi_plus(M) * (m13 - m12 + 1) * (m13 - m22 - 1) * c2(M))
        return -2 * c2(M) * (c1(M) - 1) * (c1bar(M) - 1) * chi_plus(M)
    # (0, 0)
    if m == 0:
        return (m13 - m12) * (m13 - m12 - 1) * (m13 - m22 + 1) * (m13 - m22)
    if m == 1:
        return -2 * (m13 - m12) * (m13 - m22) * c2(M)
    return c2(M) * (c1(M) - 1) * (c1bar(M) - 1)


def _c22(M: Pattern, l: int, k: int, m: int) -> int:
    m13, m23, m33, m12, m22, m11 = M
    if (l, k) == (2, 2):
        if m == 0:
            return (m22 - m33) * (m22 - m33 - 1)
        if m == 1:
            return -(m22 - m33) * (_dbar(M) * chi_minus(M)
                                   + (_dbar(M) + 2) * chi_minus(M, 1))
        return _dbar(M) * (_dbar(M) + 1) * chi_minus(M, 1)
    if (l, k) == (2, 1):
        if m == 0:
            return -2 * (m22 - m33) * (m22 - m33 - 1)
        if m == 1:
            return 2 * (m22 - m33) * (c1bar(M) + (_dbar(M) + 1) * chi_minus(M))
        return -2 * c1bar(M) * _dbar(M) * chi_minus(M)
    if (l, k) == (1, 1):
        if m == 0:
            return -2 * (m22 - m33) * (m23 - m22)
        if m == 1:
            return 2 * (_dbar(M) * (m23 - m22 - 1) * chi_minus(M)
                        - (m22 - m33) * (c1bar(M) + 1) * chi_minus(M, 1))
        return 2 * c1bar(M) * _dbar(M) * chi_minus(M, 1)
    if (l, k) == (2, 0):
        if m == 0:
            return (m22 - m33) * (m22 - m33 - 1)
        if m == 1:
            return -2 * (m22 - m33) * c1bar(M)
        return c1bar(M) * (c1bar(M) - 1)
    if (l, k) == (1, 0):
        if m == 0:
            return 2 * (m22 - m33) * (m23 - m22)
        if m == 1:
            return 2 * c1bar(M) * ((m22 - m33) * chi_minus(M) - (m23 - m22 - 1))
        return -2 * c1bar(M) * (c1bar(M) - 1) * chi_minus(M)
    # (0, 0)
    if m == 0:
        return (m23 - m22) * (m23 - m22 - 1)
    if m == 1:
        return c1bar(M) * ((m23 - m22 - 2) * chi_minus(M)
                           + (m23 - m22) * chi_minus(M, 1))
    return c1bar(M) * (c1bar(M) - 1) * chi_minus(M, 1)


def _c33(M: Pattern, l: int, k: int, m: int) -> int:
    if (l, k) == (2, 2):
        return 1
    if (l, k) == (2, 1):
        return -2 if m == 0 else -2 * chi_plus(M)
    if (l, k) == (1, 1):
        return 2
    if (l, k) == (2, 0):
        if m == 0:
            return 1
        if m == 1:
            return chi_plus(M, 1) + chi_plus(M)
        return chi_plus(M, 1)
    if (l, k) == (1, 0):
        return -2 if m == 0 else -2 * chi_plus(M)
    return 1


def _c12(M: Pattern, l: int, k: int, m: int) -> int:
    m13, m23, m33, m12, m22, m11 = M
    if (l, k) == (2, 2):
        if m == 0:
            return (m13 - m12) * (m22 - m33) * (m22 - m33 - 1)
        if m == 1:
            return -(m22 - m33) * (_ebar(M)
                                   + chi_minus(M) * (m13 - m12) * (_dbar(M) + 1))
        return _dbar(M) * _ebar(M) * chi_minus(M)
    if (l, k) == (2, 1):
        if m == 0:
            return -2 * (m13 - m12) * (m22 - m33) * (m22 - m33 - 1)
        if m == 1:
            return (m22 - m33) * (_ebar(M) + _fbar(M)
                                  + (m13 - m12) * (c1bar(M) + 1
                                                   + _dbar(M) * (1 - chi_plus(M))))
        return (-c1bar(M) * _ebar(M)
                - c2(M) * (1 - _dbar(M) + delta(M) * chi_plus(M)))
    if (l, k) == (1, 1):
        if m == 0:
            return (m13 - m12) * (m22 - m33) * (2 * m22 - m13 - m23 - 2)
        if m == 1:
            return (_ebar(M) * (m23 - m22) + c2(M) * (m22 - m33 + 1)
                    + (m13 - m12) * chi_minus(M)
                    * (_dbar(M) * (m13 - m22 + 1)
                       - (m22 - m33) * (c1bar(M) + 1)))
        return c2(M) * chi_minus(M) * (m13 - m33 + 2 - c1bar(M) - _dbar(M))
    if (l, k) == (2, 0):
        if m == 0:
            return (m13 - m12) * (m22 - m33) * (m22 - m33 - 1)
        if m == 1:
            return -(m22 - m33) * (_fbar(M)
                                   + (m13 - m12) * (c1bar(M) + chi_plus(M)))
        if m == 2:
            return ((c1bar(M) + chi_plus(M) - 1) * _fbar(M)
                    + (m22 - m33 + 1) * c2(M) * chi_plus(M))
        return -c2(M) * (c1bar(M) - 1) * chi_plus(M)
    if (l, k) == (1, 0):
        if m == 0:
            return -(m13 - m12) * (m22 - m33) * (2 * m22 - m13 - m23 - 2)
        if m == 1:
            return ((m13 - m12) * c1bar(M)
                    * ((m22 - m33) * (1 - chi_plus(M)) - (m13 - m22 + 1))
                    - (m23 - m22) * _fbar(M) - (m22 - m33 + 1) * c2(M))
        return 2 * c2(M) * (c1bar(M) - 1)
    # (0, 0)
    if m == 0:
        return (m13 - m12) * (m13 - m22 + 1) * (m23 - m22)
    if m == 1:
        return ((m13 - m12) * (m13 - m22 + 1) * c1bar(M) * chi_minus(M)
                - (m23 - m22 - 1) * c2(M))
    return -c2(M) * (c1bar(M) - 1) * chi_minus(M)


def _c13(M: Pattern, l: int, k: int, m: int) -> int:
    m13, m23, m33, m12, m22, m11 = M
    if (l, k) == (2, 2):
        return (m13 - m12) * (m22 - m33) if m == 0 else -_ebar(M)
    if (l, k) == (2, 1):
        if m == 0:
            return -2 * (m13 - m12) * (m22 - m33)
        if m == 1:
            return (_ebar(M) + _fbar(M)
                    - (m13 - m12) * (m22 - m33) * chi_plus(M))
        return (_ebar(M) - c2(M)) * chi_plus(M)
    if (l, k) == (1, 1):
        if m == 0:
            return (m13 - m12) * (2 * m22 - m13 - m33 - 1)
        return c2(M) - _ebar(M)
    if (l, k) == (2, 0):
        if m == 0:
            return (m13 - m12) * (m22 - m33)
        if m == 1:
            return (m13 - m12) * (m22 - m33) * chi_plus(M, 1) - _fbar(M)
        if m == 2:
            return c2(M) * chi_plus(M) - _fbar(M) * chi_plus(M, 1)
        return c2(M) * chi_plus(M, 1)
    if (l, k) == (1, 0):
        if m == 0:
            # the second factor reads m33, not m23 (misprint in the source
            # formula; forced by equivariance and by the composed route)
            return -(m13 - m12) * (2 * m22 - m13 - m33 - 1)
        if m == 1:
            return (_fbar(M) - c2(M)
                    + (m13 - m12) * (m13 - m22 + 1) * chi_plus(M))
        return -2 * c2(M) * chi_plus(M)
    # (0, 0)
    if m == 0:
        return -(m13 - m12) * (m13 - m22 + 1)
    return c2(M)


def _c23(M: Pattern, l: int, k: int, m: int) -> int:
    m13, m23, m33, m12, m22, m11 = M
    if (l, k) == (2, 2):
        return m22 - m33 if m == 0 else -_dbar(M) * chi_minus(M)
    if (l, k) == (2, 1):
        if m == 0:
            return -2 * (m22 - m33)
        return c1bar(M) - (m22 - m33) + delta(M) * chi_minus(M)
    if (l, k) == (1, 1):
        if m == 0:
            return 2 * m22 - m23 - m33
        return -(c1bar(M) + _dbar(M)) * chi_minus(M)
    if (l, k) == (2, 0):
        if m == 0:
            return m22 - m33
        if m == 1:
            return -(c1bar(M) - (m22 - m33) * chi_plus(M))
        return -c1bar(M) * chi_plus(M)
    if (l, k) == (1, 0):
        if m == 0:
            return -(2 * m22 - m23 - m33)
        return 2 * c1bar(M)
    # (0, 0)
    if m == 0:
        return -(m23 - m22)
    return -c1bar(M) * chi_minus(M)


_POS_FORMULAS = {(1, 1): _c11, (2, 2): _c22, (3, 3): _c33,
                 (1, 2): _c12, (1, 3): _c13, (2, 3): _c23}


def C_pos(i: int, j: int, M: Pattern, l: int, k: int, m: int) -> int:
    """Closed-form coefficient for the injector in direction e_i + e_j."""
    if m < 0 or m > POS_BOUNDS[(i, j)][(l, k)]:
        return 0
    return _POS_FORMULAS[(i, j)](M, l, k, m)


def C_pos_composed(i: int, j: int, M: Pattern, l: int, k: int, m: int) -> int:
    """Same coefficient, recomputed as the convolution of rank-one data.

    This is the coefficient of the composite map
    (id (x) projector) o (inject_e_j (x) id) o inject_e_i, written without
    materializing any intermediate module, so it stays defined even when the
    intermediate highest weight fails to be dominant.
    """
    total = 0
    for lo in (0, 1):
        for ko in range(0, lo + 1):  # inner factor f(1,0,0; lo,0; ko)
            li, ki = l - lo, k - ko
            if not (0 <= ki <= li <= 1):
                continue
            for mi in range(VEC_BOUNDS[i][(ki, li)] + 1):
                mo = m - mi
                if mo < 0 or mo > VEC_BOUNDS[j][(ko, lo)]:
                    continue
                inner = c_coeff(i, ki, li, mi, M)
                if not inner:
                    continue
                shifted = M.moved(top=_E_UNIT[i], mid=(0, -li), bot=-ki, k=-mi)
                total += inner * c_coeff(j, ko, lo, mo, shifted)
    return total


def component_occurs(lam: tuple[int, int, int], sign: str,
                     ij: tuple[int, int]) -> bool:
    """Whether the isotypic component in direction +-(e_i + e_j) is nonzero.

    Besides dominance of the shifted weight, a mixed double step requires the
    two rows to have different lengths (otherwise the closed formulas give
    the zero map: both added boxes would share a column).
    """
    i, j = ij
    step = 1 if sign == "+" else -1
    target = list(lam)
    target[i - 1] += step
    target[j - 1] += step
    return is_dominant(tuple(target)) and (i == j or lam[i - 1] != lam[j - 1])


def _inject_pos_terms(lam, i, j, M, coeff_fn) -> TensorElement:
    target = list(lam)
    target[i - 1] += 1
    target[j - 1] += 1
    if not component_occurs(lam, "+", (i, j)):
        raise ComponentAbsent(
            f"component {tuple(target)} absent from {lam} (x) (2,0,0)")
    if M.top != tuple(target):
        raise ValueError(f"pattern {M} is not of type {tuple(target)}")
    top = tuple(_E_UNIT[i][a] + _E_UNIT[j][a] for a in range(3))
    out: TensorElement = {}
    for l in (0, 1, 2):
        for k in range(0, l + 1):
            right = Pattern(2, 0, 0, l, 0, k)
            for m in range(POS_BOUNDS[(i, j)][(l, k)] + 1):
                left = M.moved(top=top, mid=(0, -l), bot=-k, k=-m)
                _tensor_add(out, left, right, coeff_fn(i, j, M, l, k, m))
    return out


def inject_pos(lam: tuple[int, int, int], ij: tuple[int, int], M: Pattern,
               mode: str = "closed") -> TensorElement:
    """Image of f(M), M of type lam+e_i+e_j, in V_lam (x) V_(2,0,0)."""
    i, j = ij
    if not (1 <= i <= j <= 3):
        raise ValueError(f"need 1 <= i <= j <= 3, got {ij}")
    if mode == "closed":
        return _inject_pos_terms(lam, i, j, M, C_pos)
    if mode == "composed":
        return _inject_pos_terms(lam, i, j, M, C_pos_composed)
    raise ValueError(f"unknown mode {mode!r}")


def inject_neg(lam: tuple[int, int, int], ij: tuple[int, int],
               M: Pattern) -> TensorElement:
    """Image of f(M), M of type lam-e_i-e_j, in V_lam (x) V_(0,0,-2).

    Obtained from the plus-direction family through the duality
    f(M) -> f(dual M): coefficients are C_pos for the reflected direction
    (4-j, 4-i) evaluated at the dual pattern, attached to shifts with the
    middle-row increments flipped.
    """
    i, j = ij
    if not (1 <= i <= j <= 3):
        raise ValueError(f"need 1 <= i <= j <= 3, got {ij}")
    target = list(lam)
    target[i - 1] -= 1
    target[j - 1] -= 1
    if not component_occurs(lam, "-", (i, j)):
        raise ComponentAbsent(
            f"component {tuple(target)} absent from {lam} (x) (0,0,-2)")
    if M.top != tuple(target):
        raise ValueError(f"pattern {M} is not of type {tuple(target)}")
    ii, jj = 4 - j, 4 - i
    D = M.dual()
    top = tuple(-_E_UNIT[i][a] - _E_UNIT[j][a] for a in range(3))
    out: TensorElement = {}
    for l in (0, 1, 2):
        for k in range(0, l + 1):
            right = Pattern(0, 0, -2, 0, -l, -k)
            for m in range(POS_BOUNDS[(ii, jj)][(l, k)] + 1):
                left = M.moved(top=top, mid=(l, 0), bot=k, k=-m)
                _tensor_add(out, left, right, C_pos(ii, jj, D, l, k, m))
    return out


# ---------------------------------------------------------------------------
# equivariance verification

_CHECK_GENERATORS = ("E11", "E22", "E33", "E12", "E21", "E23", "E32")


def tensor_act(gen: str, t: TensorElement) -> TensorElement:
    """Leibniz action on a two-factor tensor, each factor a monomial basis."""
    out: TensorElement = {}
    for (a, b), coeff in t.items():
        for a2, ca in glmodule.act_basis(gen, a).items():
            _tensor_add(out, a2, b, coeff * ca)
        for b2, cb in glmodule.act_basis(gen, b).items():
            _tensor_add(out, a, b2, coeff * cb)
    return out


def _injector(lam, direction):
    """Normalize a direction spec to (source type, map M -> TensorElement)."""
    kind, data = direction
    if kind == "vec":
        i = data
        src = tuple(lam[a] + (1 if a == i - 1 else 0) for a in range(3))
        return src, lambda M: inject_vec(lam, i, M)
    if kind == "pos":
        i, j = data
        src = tuple(lam[a] + (1 if a == i - 1 else 0)
                    + (1 if a == j - 1 else 0) for a in range(3))
        return src, lambda M: inject_pos(lam, (i, j), M)
    if kind == "neg":
        i, j = data
        src = tuple(lam[a] - (1 if a == i - 1 else 0)
                    - (1 if a == j - 1 else 0) for a in range(3))
        return src, lambda M: inject_neg(lam, (i, j), M)
    raise ValueError(f"unknown direction {direction!r}")


def all_directions(lam: tuple[int, int, int]):
    """Injector directions out of V_lam whose component occurs."""
    dirs = []
    for i in (1, 2, 3):
        d = ("vec", i)
        src, _ = _injector(lam, d)
        if is_dominant(src):
            dirs.append(d)
    for kind, sign in (("pos", "+"), ("neg", "-")):
        for i in (1, 2, 3):
            for j in range(i, 4):
                if component_occurs(lam, sign, (i, j)):
                    dirs.append((kind, (i, j)))
    return dirs


def verify_equivariance(lam: tuple[int, int, int], direction,
                        perturb=None) -> list:
    """Check gen o inject = inject o gen on every basis pattern.

    Returns the list of violating (generator, pattern) pairs; empty means the
    injector is equivariant.  ``perturb`` optionally post-processes each image
    (used by mutation tests).
    """
    src, inj = _injector(lam, direction)
    if not is_dominant(src):
        raise ComponentAbsent(f"source type {src} not dominant")
    violations = []
    images = {M: inj(M) for M in enumerate_patterns(src)}
    if perturb is not None:
        images = {M: perturb(M, t) for M, t in images.items()}
    for gen in _CHECK_GENERATORS:
        for M, image in images.items():
            lhs = tensor_act(gen, image)
            rhs: TensorElement = {}
            for N, coeff in glmodule.act_basis(gen, M).items():
                for key, c in images[N].items():
                    _tensor_add(rhs, key[0], key[1], coeff * c)
            if lhs != rhs:
                violations.append((gen, M))
    return violations
