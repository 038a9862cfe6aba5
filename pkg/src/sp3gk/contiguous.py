"""Contiguous relations between neighbouring K-type blocks.

For each direction +-(e_i+e_j) there is a matrix P of p-block root vectors
acting on the column vector of elementary functions of one K-type, and a
matrix R with entries affine in the continuous parameters (nu1, nu2, nu3)
expressing the result in the neighbouring block:

    P . E(lam) = E(lam[+-ij]) . R

Everything here works with values at the identity coset, where the elementary
functions reduce to Kronecker deltas, so the relation becomes an identity of
columns of nu-polynomials that ``verify_contiguous`` checks exactly.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Dict, List, Tuple

from . import clebsch, glmodule
from .gtpattern import (Pattern, SigmaChar, c1, chi_minus, chi_plus, delta,
                        enumerate_patterns, is_dominant, sigma_enumerate)

RHO = (3, 2, 1)

# ---------------------------------------------------------------------------
# polynomials in nu1, nu2, nu3 over the rationals

NuKey = Tuple[int, int, int]


class NuPoly(dict):
    """Sparse polynomial {exponent triple: coefficient}, no zero entries."""

    @classmethod
    def make(cls, terms) -> "NuPoly":
        out = cls()
        for key, coeff in terms:
            if coeff:
                new = out.get(key, 0) + coeff
                if new:
                    out[key] = new
                else:
                    del out[key]
        return out

    @classmethod
    def const(cls, value) -> "NuPoly":
        return cls.make([((0, 0, 0), value)])

    @classmethod
    def nu(cls, p: int) -> "NuPoly":
        key = tuple(1 if a == p - 1 else 0 for a in range(3))
        return cls.make([(key, 1)])

    def __add__(self, other) -> "NuPoly":
        if not isinstance(other, NuPoly):
            other = NuPoly.const(other)
        out = NuPoly(self)
        for key, coeff in other.items():
            new = out.get(key, 0) + coeff
            if new:
                out[key] = new
            else:
                del out[key]
        return out

    __radd__ = __add__

    def __neg__(self) -> "NuPoly":
        return NuPoly({k: -c for k, c in self.items()})

    def __sub__(self, other) -> "NuPoly":
        return self + (-other if isinstance(other, NuPoly)
                       else NuPoly.const(-other))

    def __rsub__(self, other) -> "NuPoly":
        return (-self) + other

    def __mul__(self, other) -> "NuPoly":
        if not isinstance(other, NuPoly):
            return NuPoly({k: c * other for k, c in self.items() if c * other})
        out = NuPoly()
        for k1, c1_ in self.items():
            for k2, c2_ in other.items():
                key = (k1[0] + k2[0], k1[1] + k2[1], k1[2] + k2[2])
                new = out.get(key, 0) + c1_ * c2_
                if new:
                    out[key] = new
                else:
                    del out[key]
        return out

    __rmul__ = __mul__

    def __truediv__(self, scalar) -> "NuPoly":
        return NuPoly({k: Fraction(c, 1) / scalar for k, c in self.items()})

    def __eq__(self, other):
        if isinstance(other, NuPoly):
            return dict.__eq__(self, other)
        return dict.__eq__(self, NuPoly.const(other))

    def __ne__(self, other):
        return not self.__eq__(other)

    def __hash__(self):
        return hash(frozenset(self.items()))

    def subs(self, nu: tuple) -> object:
        return sum((c * nu[0] ** k[0] * nu[1] ** k[1] * nu[2] ** k[2]
                    for k, c in self.items()), 0)

    def degree(self) -> int:
        return max((sum(k) for k in self.keys()), default=0)

    def is_even(self) -> bool:
        """True when only even powers of each nu variable occur."""
        return all(k[0] % 2 == 0 and k[1] % 2 == 0 and k[2] % 2 == 0
                   for k in self.keys())

    def __str__(self) -> str:
        if not self:
            return "0"
        names = ("nu1", "nu2", "nu3")
        parts = []
        for key in sorted(self.keys(), reverse=True):
            factors = [f"{names[a]}^{e}" if e > 1 else names[a]
                       for a, e in enumerate(key) if e]
            mono = "*".join(factors)
            parts.append(f"{self[key]}*{mono}" if mono else f"{self[key]}")
        return " + ".join(parts)


NU1, NU2, NU3 = NuPoly.nu(1), NuPoly.nu(2), NuPoly.nu(3)


# ---------------------------------------------------------------------------
# the scalar constants of the recombination identity and the mixed block h

def k_const(i: int, j: int, M: Pattern) -> int:
    m13, m23, m33, m12, m22, m11 = M
    table = {
        (1, 1): -2 * m11 + 2 * m13,
        (1, 2): -2 * m11 + m13 + m23 - 2,
        (2, 2): -2 * m11 + 2 * m23 - 2,
        (1, 3): -2 * m11 + m13 + m33 - 3,
        (3, 3): -2 * m11 + 2 * m33 - 4,
        (2, 3): -2 * m11 + m23 + m33 - 4,
    }
    return table[(i, j)]


_EIJ = {1: (1, 0, 0), 2: (0, 1, 0), 3: (0, 0, 1)}


def _top_step(i: int, j: int, sign: int) -> tuple[int, int, int]:
    return tuple(sign * (_EIJ[i][a] + _EIJ[j][a]) for a in range(3))


def h_poly(i: int, j: int, m: int, M: Pattern) -> NuPoly:
    """Mixed-block coefficient pairing X_{+22} and X_{+23} contributions."""
    A = M.moved(top=_top_step(i, j, +1), mid=(0, 2), k=m)
    first = (NU2 + (RHO[1] + M.wt(2))) * clebsch.C_pos(i, j, A, 2, 0, m)
    second = ((M.m22 - M.m33 + 1 + delta(M)) * chi_plus(M, -1)
              * clebsch.C_pos(i, j, A, 1, 0, m - 1))
    third = (M.m22 - M.m33 + 1) * clebsch.C_pos(i, j, A, 1, 0, m)
    return first + NuPoly.const(second + third)


# ---------------------------------------------------------------------------
# p-block matrices

# block label (l, k) -> root-vector key and sign, per direction sign
_PLUS_BLOCKS = (((2, 2), ("+", 1, 1), 1), ((2, 1), ("+", 1, 2), 1),
                ((1, 1), ("+", 1, 3), 1), ((2, 0), ("+", 2, 2), 1),
                ((1, 0), ("+", 2, 3), 1), ((0, 0), ("+", 3, 3), 1))
_MINUS_BLOCKS = (((2, 2), ("-", 1, 1), 1), ((2, 1), ("-", 1, 2), -1),
                 ((1, 1), ("-", 1, 3), 1), ((2, 0), ("-", 2, 2), 1),
                 ((1, 0), ("-", 2, 3), -1), ((0, 0), ("-", 3, 3), 1))


class PMatrix:
    """Matrix of sparse root-vector combinations, indexed like the blocks."""

    def __init__(self, rows: int, cols: int):
        self.shape = (rows, cols)
        self.entries: List[List[glmodule.PVector]] = [
            [dict() for _ in range(cols)] for _ in range(rows)]

    def add(self, r: int, c: int, key, coeff) -> None:
        cell = self.entries[r][c]
        new = cell.get(key, 0) + coeff
        if new:
            cell[key] = new
        else:
            cell.pop(key, None)

    def __getitem__(self, rc):
        return self.entries[rc[0]][rc[1]]

    def __eq__(self, other):
        return (isinstance(other, PMatrix) and self.shape == other.shape
                and self.entries == other.entries)

    def scaled(self, scalar) -> "PMatrix":
        out = PMatrix(*self.shape)
        for r in range(self.shape[0]):
            for c in range(self.shape[1]):
                for key, coeff in self.entries[r][c].items():
                    out.add(r, c, key, scalar * coeff)
        return out


def shifted_type(lam: tuple[int, int, int], sign: str,
                 ij: tuple[int, int]) -> tuple[int, int, int]:
    step = _top_step(ij[0], ij[1], +1 if sign == "+" else -1)
    return tuple(lam[a] + step[a] for a in range(3))


def pmatrix(lam: tuple[int, int, int], sign: str,
            ij: tuple[int, int]) -> PMatrix:
    """The p-block matrix of the contiguous relation in one direction."""
    i, j = ij
    if not (1 <= i <= j <= 3):
        raise ValueError(f"need 1 <= i <= j <= 3, got {ij}")
    target = shifted_type(lam, sign, ij)
    if not clebsch.component_occurs(lam, sign, ij):
        raise clebsch.ComponentAbsent(f"component {target} absent")
    rows = enumerate_patterns(target)
    col_index = {M: c for c, M in enumerate(enumerate_patterns(lam))}
    out = PMatrix(len(rows), len(col_index))
    if sign == "+":
        blocks, fam, top = _PLUS_BLOCKS, (i, j), _top_step(i, j, -1)
        for r, M in enumerate(rows):
            for (l, k), key, blocksign in blocks:
                for m in range(clebsch.POS_BOUNDS[fam][(l, k)] + 1):
                    col_pat = M.moved(top=top, mid=(0, -l), bot=-k, k=-m)
                    c = col_index.get(col_pat)
                    if c is None:
                        continue
                    out.add(r, c, key,
                            blocksign * clebsch.C_pos(*fam, M, l, k, m))
    else:
        fam, top = (4 - j, 4 - i), _top_step(i, j, +1)
        for r, M in enumerate(rows):
            D = M.dual()
            for (l, k), key, blocksign in _MINUS_BLOCKS:
                for m in range(clebsch.POS_BOUNDS[fam][(l, k)] + 1):
                    col_pat = M.moved(top=top, mid=(l, 0), bot=k, k=-m)
                    c = col_index.get(col_pat)
                    if c is None:
                        continue
                    out.add(r, c, key,
                            blocksign * clebsch.C_pos(*fam, D, l, k, m))
    return out


# ---------------------------------------------------------------------------
# boundary evaluation of root vectors on elementary-function vectors
#
# At the identity coset the unipotent part acts by zero, the split part H_p by
# the scalar nu_p + rho_p, and the compact part through the module action on
# the second index; the value of X_{+-pq} applied to the vector of elementary
# functions of M is a short list of (pattern, affine nu-polynomial) pairs.

def boundary_eval(lam: tuple[int, int, int], gen, M: Pattern) -> list:
    """Identity value of a root vector on the elementary-function vector.

    ``gen`` is ('+'|'-', p, q) with p <= q.  Returns [(N, NuPoly), ...] where
    N runs over the patterns supporting the value.
    """
    sign, p, q = gen
    out: Dict[Pattern, NuPoly] = {}
    if p == q:
        w = M.wt(p)
        poly = NuPoly.nu(p) + (RHO[p - 1] + (w if sign == "+" else -w))
        out[M] = poly
    else:
        # compact part: kappa(E_qp) for the plus side, -kappa(E_pq) for minus
        kgen = f"E{q}{p}" if sign == "+" else f"E{p}{q}"
        ksign = 1 if sign == "+" else -1
        for N in enumerate_patterns(lam):
            coeff = glmodule.act_basis(kgen, N).get(M, 0)
            if coeff:
                out[N] = out.get(N, NuPoly()) + NuPoly.const(ksign * coeff)
    return sorted(out.items(), key=lambda kv: kv[0])


# ---------------------------------------------------------------------------
# the nu-matrix side of the contiguous relation

class RMatrix:
    def __init__(self, rows: int, cols: int):
        self.shape = (rows, cols)
        self.entries: List[List[NuPoly]] = [
            [NuPoly() for _ in range(cols)] for _ in range(rows)]

    def add(self, r: int, c: int, poly: NuPoly) -> None:
        self.entries[r][c] = self.entries[r][c] + poly

    def __getitem__(self, rc) -> NuPoly:
        return self.entries[rc[0]][rc[1]]

    def __eq__(self, other):
        return (isinstance(other, RMatrix) and self.shape == other.shape
                and self.entries == other.entries)

    def matmul(self, other: "RMatrix") -> "RMatrix":
        rows, mid = self.shape
        mid2, cols = other.shape
        if mid != mid2:
            raise ValueError(f"shape mismatch {self.shape} x {other.shape}")
        out = RMatrix(rows, cols)
        for r in range(rows):
            for t in range(mid):
                left = self.entries[r][t]
                if not left:
                    continue
                for c in range(cols):
                    right = other.entries[t][c]
                    if right:
                        out.add(r, c, left * right)
        return out

    def scaled(self, scalar) -> "RMatrix":
        out = RMatrix(*self.shape)
        for r in range(self.shape[0]):
            for c in range(self.shape[1]):
                out.add(r, c, self.entries[r][c] * scalar)
        return out

    @classmethod
    def from_rows(cls, rows: list) -> "RMatrix":
        out = cls(len(rows), len(rows[0]) if rows else 0)
        for r, row in enumerate(rows):
            for c, val in enumerate(row):
                out.add(r, c, val if isinstance(val, NuPoly)
                        else NuPoly.const(val))
        return out


def rmatrix(sigma, lam: tuple[int, int, int], sign: str,
            ij: tuple[int, int]) -> RMatrix:
    """Closed-form matrix of the contiguous relation on sigma-columns."""
    sigma = SigmaChar.of(sigma)
    i, j = ij
    if not (1 <= i <= j <= 3):
        raise ValueError(f"need 1 <= i <= j <= 3, got {ij}")
    target = shifted_type(lam, sign, ij)
    if not clebsch.component_occurs(lam, sign, ij):
        raise clebsch.ComponentAbsent(f"component {target} absent")
    cols = sigma_enumerate(lam, sigma)
    rows = sigma_enumerate(target, sigma)
    if not cols or not rows:
        raise clebsch.ComponentAbsent(
            f"empty parity block for sigma={tuple(sigma)}")
    row_index = {M: r for r, M in enumerate(rows)}
    out = RMatrix(len(rows), len(cols))

    for c, M in enumerate(cols):
        if sign == "+":
            fam, top = (i, j), _top_step(i, j, +1)
            lead = NuPoly.nu(1) + (RHO[0] + M.wt(1) + k_const(i, j, M))
            tail = NuPoly.nu(3) + (RHO[2] + M.wt(3))
            coeff_arg = lambda pat: pat
            hM = M
        else:
            fam, top = (4 - j, 4 - i), _top_step(i, j, -1)
            D = M.dual()
            lead = NuPoly.nu(1) + (RHO[0] - M.wt(1) + k_const(*fam, D))
            tail = NuPoly.nu(3) + (RHO[2] - M.wt(3))
            coeff_arg = lambda pat: pat.dual()
            hM = D
        mid_sign = +1 if sign == "+" else -1
        bounds = clebsch.POS_BOUNDS[fam]
        for m in range(bounds[(2, 2)] + 1):
            pat = M.moved(top=top, mid=(0, 2) if sign == "+" else (-2, 0),
                          bot=2 * mid_sign, k=m)
            r = row_index.get(pat)
            if r is not None:
                out.add(r, c, lead * clebsch.C_pos(*fam, coeff_arg(pat), 2, 2, m))
        for m in range(bounds[(2, 0)] + 1):
            pat = M.moved(top=top, mid=(0, 2) if sign == "+" else (-2, 0), k=m)
            r = row_index.get(pat)
            if r is not None:
                out.add(r, c, h_poly(*fam, m, hM))
        for m in range(bounds[(0, 0)] + 1):
            pat = M.moved(top=top, k=m)
            r = row_index.get(pat)
            if r is not None:
                out.add(r, c, tail * clebsch.C_pos(*fam, coeff_arg(pat), 0, 0, m))
    return out


def verify_contiguous(sigma, lam: tuple[int, int, int], sign: str,
                      ij: tuple[int, int]) -> bool:
    """Exact check of P . E(lam) = E(lam[+-ij]) . R at the identity."""
    sigma = SigmaChar.of(sigma)
    target = shifted_type(lam, sign, ij)
    P = pmatrix(lam, sign, ij)
    R = rmatrix(sigma, lam, sign, ij)
    cols = sigma_enumerate(lam, sigma)
    target_all = enumerate_patterns(target)
    target_sigma = sigma_enumerate(target, sigma)
    tgt_all_index = {M: r for r, M in enumerate(target_all)}
    lam_all = enumerate_patterns(lam)
    lam_index = {M: c for c, M in enumerate(lam_all)}

    gens = [(sign, p, q) for p in (1, 2, 3) for q in range(p, 4)]
    for csig, M in enumerate(cols):
        # left side: apply the p-matrix to the elementary-function column of M
        # and evaluate at the identity
        lhs = [NuPoly() for _ in target_all]
        bvals = {gen: boundary_eval(lam, gen, M) for gen in gens}
        for gen in gens:
            for N, poly in bvals[gen]:
                c = lam_index[N]
                for r in range(P.shape[0]):
                    coeff = P.entries[r][c].get(gen, 0)
                    if coeff:
                        lhs[r] = lhs[r] + poly * coeff
        # right side: the identity value of the target block is the 0/1
        # matrix placing each sigma-column at its pattern row
        rhs = [NuPoly() for _ in target_all]
        for rsig, N in enumerate(target_sigma):
            entry = R.entries[rsig][csig]
            if entry:
                rhs[tgt_all_index[N]] = rhs[tgt_all_index[N]] + entry
        if lhs != rhs:
            return False
    return True


def rel_clebsch_residual(i: int, j: int, M: Pattern, m: int) -> int:
    """Residual of the four-term recombination identity (zero when it holds).

    For M of type lam and any integer m, relates the (2,2)-block coefficient
    at the shifted pattern to its (2,1) and (1,1) neighbours.
    """
    Mp = M.moved(top=_top_step(i, j, +1), mid=(0, 2), bot=2, k=m)
    lhs = k_const(i, j, M) * clebsch.C_pos(i, j, Mp, 2, 2, m)
    rhs = ((M.m12 - M.m23 + 1) * chi_minus(M, -1)
           * clebsch.C_pos(i, j, Mp, 2, 1, m - 1)
           + (M.m11 - M.m22 + 1) * clebsch.C_pos(i, j, Mp, 2, 1, m)
           + (c1(M) + 1) * clebsch.C_pos(i, j, Mp, 1, 1, m - 1)
           + (M.m33 - M.m22 - 1) * clebsch.C_pos(i, j, Mp, 1, 1, m))
    return lhs - rhs
