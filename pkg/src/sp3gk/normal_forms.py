"""Hard-coded normal-order expressions of the chirality building blocks.

Each entry states the class modulo the left ideal generated by [n, n] of a
minor, a two-sided product entry, or an invariant operator, written exactly
as the closed displays: unipotent and split factors on the left, compact
factors on the right.  ``check_display`` normal-orders both sides and
compares them after reduction.
"""

from __future__ import annotations

from .uea import (E, H, I, X, kappa, reduce_mod_nn, uea_add, uea_const,
                  uea_mul, uea_scale, UEAElement)


def _sum(*terms) -> UEAElement:
    return uea_add(*terms)


def _m(a, b) -> UEAElement:
    return uea_mul(a, b)


def display_minor(sign: str, i: int, j: int) -> UEAElement:
    """Normal-order display of the (i, j)-minor modulo [n, n]."""
    if sign == "+":
        table = {
            (1, 1): _sum(_m(uea_add(H(2), uea_const(-1)), X("+", 3, 3)),
                         _m(X("+", 3, 3), kappa(2, 2)),
                         uea_scale(_m(E("e2-e3"), X("+", 2, 3)), -1),
                         uea_scale(_m(X("+", 2, 3), kappa(3, 2)), -1)),
            (2, 2): _sum(_m(uea_add(H(1), uea_const(-1)), X("+", 3, 3)),
                         _m(X("+", 3, 3), kappa(1, 1)),
                         uea_scale(_m(X("+", 1, 3), kappa(3, 1)), -1)),
            (3, 3): _sum(_m(uea_add(H(1), uea_const(-1)), X("+", 2, 2)),
                         _m(X("+", 2, 2), kappa(1, 1)),
                         uea_scale(_m(E("e1-e2"), X("+", 1, 2)), -1),
                         uea_scale(_m(X("+", 1, 2), kappa(2, 1)), -1)),
            (1, 2): _sum(_m(E("e1-e2"), X("+", 3, 3)),
                         _m(X("+", 3, 3), kappa(2, 1)),
                         uea_scale(_m(X("+", 2, 3), kappa(3, 1)), -1)),
            (2, 3): _sum(_m(uea_add(H(1), uea_const(-1)), X("+", 2, 3)),
                         _m(X("+", 2, 3), kappa(1, 1)),
                         uea_scale(_m(X("+", 1, 2), kappa(3, 1)), -1)),
            (1, 3): _sum(_m(E("e1-e2"), X("+", 2, 3)),
                         _m(X("+", 2, 3), kappa(2, 1)),
                         uea_scale(_m(X("+", 2, 2), kappa(3, 1)), -1)),
        }
    else:
        table = {
            (1, 1): _sum(_m(uea_add(H(2), uea_const(-1)), X("-", 3, 3)),
                         uea_scale(_m(X("-", 3, 3), kappa(2, 2)), -1),
                         uea_scale(_m(E("e2-e3"), X("-", 2, 3)), -1),
                         _m(X("-", 2, 3), kappa(2, 3))),
            (2, 2): _sum(_m(uea_add(H(1), uea_const(-1)), X("-", 3, 3)),
                         uea_scale(_m(X("-", 3, 3), kappa(1, 1)), -1),
                         _m(X("-", 1, 3), kappa(1, 3))),
            (3, 3): _sum(_m(uea_add(H(1), uea_const(-1)), X("-", 2, 2)),
                         uea_scale(_m(X("-", 2, 2), kappa(1, 1)), -1),
                         uea_scale(_m(E("e1-e2"), X("-", 1, 2)), -1),
                         _m(X("-", 1, 2), kappa(1, 2))),
            (1, 2): _sum(_m(E("e1-e2"), X("-", 3, 3)),
                         uea_scale(_m(X("-", 3, 3), kappa(1, 2)), -1),
                         _m(X("-", 2, 3), kappa(1, 3))),
            (2, 3): _sum(_m(uea_add(H(1), uea_const(-1)), X("-", 2, 3)),
                         uea_scale(_m(X("-", 2, 3), kappa(1, 1)), -1),
                         _m(X("-", 1, 2), kappa(1, 3))),
            (1, 3): _sum(_m(E("e1-e2"), X("-", 2, 3)),
                         uea_scale(_m(X("-", 2, 3), kappa(1, 2)), -1),
                         _m(X("-", 2, 2), kappa(1, 3))),
        }
    return table[(i, j)]


def display_x(sign: str, i: int, j: int) -> UEAElement:
    """Root vectors modulo [n, n] (the 2e1, 2e2 and mixed parts drop)."""
    return reduce_mod_nn(X(sign, i, j))


def display_d(order: str, row: int, i: int) -> UEAElement:
    """Normal-order display of the two-sided product entries modulo [n, n].

    ``order`` is '+-' or '-+'; ``row`` and ``i`` index the 3x3 matrix.
    """
    if order == "+-":
        s, ks = "-", 1   # acts through X_{-*} and +kappa terms
    else:
        s, ks = "+", -1  # mirrored signs on the compact factors
    kap = (lambda p, q: kappa(p, q)) if order == "+-" else (
        lambda p, q: kappa(q, p))
    X1, X2, X3 = X(s, 1, i), X(s, 2, i), X(s, 3, i)
    if row == 1:
        out = _sum(_m(uea_add(H(1), uea_const(-4)), X1),
                   uea_scale(_m(X1, kap(1, 1)), ks),
                   _m(E("e1-e2"), X2),
                   uea_scale(_m(X2, kap(2, 1)), ks),
                   uea_scale(_m(X3, kap(3, 1)), ks))
    elif row == 2:
        out = _sum(_m(E("e1-e2"), X1),
                   uea_scale(_m(X1, kap(2, 1)), ks),
                   _m(uea_add(H(2), uea_const(-3 + (1 if i == 1 else 0))), X2),
                   uea_scale(_m(X2, kap(2, 2)), ks),
                   _m(E("e2-e3"), X3),
                   uea_scale(_m(X3, kap(3, 2)), ks))
        if i == 2:
            out = uea_add(out, uea_scale(X(s, 1, 1), -1))
    else:
        out = _sum(uea_scale(_m(X1, kap(3, 1)), ks),
                   _m(E("e2-e3"), X2),
                   uea_scale(_m(X2, kap(3, 2)), ks),
                   _m(uea_add(H(3), uea_const(-1 - (1 if i == 3 else 0)),
                              uea_scale(E("2e3"), I * 2 * ks)), X3),
                   uea_scale(_m(X3, kap(3, 3)), ks))
        if i == 3:
            out = uea_add(out, uea_scale(uea_add(X(s, 1, 1), X(s, 2, 2)), -1))
    return out


def display_c2() -> UEAElement:
    return _sum(
        _m(uea_add(H(1), uea_const(-6)), X("-", 1, 1)),
        _m(X("-", 1, 1), kappa(1, 1)),
        _m(uea_add(H(2), uea_const(-4)), X("-", 2, 2)),
        _m(X("-", 2, 2), kappa(2, 2)),
        _m(uea_add(H(3), uea_scale(E("2e3"), I * 2), uea_const(-2)),
           X("-", 3, 3)),
        _m(X("-", 3, 3), kappa(3, 3)),
        uea_scale(_m(E("e1-e2"), X("-", 1, 2)), 2),
        uea_scale(_m(X("-", 1, 2), kappa(2, 1)), 2),
        uea_scale(_m(E("e2-e3"), X("-", 2, 3)), 2),
        uea_scale(_m(X("-", 2, 3), kappa(3, 2)), 2),
        uea_scale(_m(X("-", 1, 3), kappa(3, 1)), 2))


def display_m3(sign: str) -> UEAElement:
    """First-row expansion of the chirality determinant modulo [n, n]."""
    M11 = display_minor(sign, 1, 1)
    M12 = display_minor(sign, 1, 2)
    M13 = display_minor(sign, 1, 3)
    if sign == "+":
        return _sum(_m(uea_add(H(1), uea_const(-2)), M11),
                    _m(M11, kappa(1, 1)),
                    uea_scale(_m(E("e1-e2"), M12), -1),
                    uea_scale(_m(M12, kappa(2, 1)), -1),
                    _m(M13, kappa(3, 1)))
    return _sum(_m(uea_add(H(1), uea_const(-2)), M11),
                uea_scale(_m(M11, kappa(1, 1)), -1),
                uea_scale(_m(E("e1-e2"), M12), -1),
                _m(M12, kappa(1, 2)),
                uea_scale(_m(M13, kappa(1, 3)), -1))
