"""Gelfand-Tsetlin patterns for gl(3) and their combinatorial functions.

A pattern is a triangular array

    m13  m23  m33
      m12  m22
        m11

of integers with interlacing rows.  Patterns index the monomial basis of the
simple gl(3)-module of highest weight (m13, m23, m33), so everything downstream
(module actions, Clebsch-Gordan coefficients, contiguous-relation matrices) is
indexed by the enumeration order fixed here.
"""

from __future__ import annotations

from typing import Iterator, NamedTuple, Optional


class Pattern(NamedTuple):
    """Triangular array; may be constructed unvalidated, see is_valid()."""

    m13: int
    m23: int
    m33: int
    m12: int
    m22: int
    m11: int

    def is_valid(self) -> bool:
        return (self.m13 >= self.m12 >= self.m23 >= self.m22 >= self.m33
                and self.m12 >= self.m11 >= self.m22)

    @property
    def top(self) -> tuple[int, int, int]:
        return (self.m13, self.m23, self.m33)

    def weight(self) -> tuple[int, int, int]:
        w1 = self.m11
        w2 = self.m12 + self.m22 - w1
        w3 = self.m13 + self.m23 + self.m33 - self.m12 - self.m22
        return (w1, w2, w3)

    def wt(self, p: int) -> int:
        return self.weight()[p - 1]

    def moved(self, top=(0, 0, 0), mid=(0, 0), bot=0, k=0) -> "Pattern":
        """Apply row increments and then the middle-row (+k, -k) shift.

        Total function; the result may violate interlacing (callers treat
        invalid results as zero basis vectors).
        """
        return Pattern(self.m13 + top[0], self.m23 + top[1], self.m33 + top[2],
                       self.m12 + mid[0] + k, self.m22 + mid[1] - k,
                       self.m11 + bot)

    def dual(self) -> "Pattern":
        """Rows negated and reversed; type becomes (-m33, -m23, -m13)."""
        return Pattern(-self.m33, -self.m23, -self.m13,
                       -self.m22, -self.m12, -self.m11)

    def rows(self) -> list[list[int]]:
        return [[self.m13, self.m23, self.m33], [self.m12, self.m22], [self.m11]]


def validate(m13: int, m23: int, m33: int, m12: int, m22: int, m11: int) -> bool:
    """True iff both interlacing chains hold."""
    return Pattern(m13, m23, m33, m12, m22, m11).is_valid()


def shift(M: Pattern, top=(0, 0, 0), mid=(0, 0), bot=0, k=0) -> Optional[Pattern]:
    """Shifted pattern, or None when interlacing fails (the zero convention)."""
    N = M.moved(top, mid, bot, k)
    return N if N.is_valid() else None


# ---------------------------------------------------------------------------
# pattern functions:  delta, the characteristic functions chi^{+-}_r, and the
# piecewise-linear quantities C1, C1bar, C2 used by every coefficient formula.
# All are total functions of the six entries.

def delta(M: Pattern) -> int:
    return M.m12 + M.m22 - M.m11 - M.m23


def chi_plus(M: Pattern, r: int = 0) -> int:
    return 1 if delta(M) > r else 0


def chi_minus(M: Pattern, r: int = 0) -> int:
    return 1 if delta(M) < -r else 0


def c1(M: Pattern) -> int:
    return min(M.m11 - M.m22, M.m12 - M.m23)


def c1bar(M: Pattern) -> int:
    return min(M.m23 - M.m22, M.m12 - M.m11)


def c2(M: Pattern) -> int:
    return c1(M) * c1bar(M)


class PatternStats(NamedTuple):
    delta: int
    c1: int
    c1bar: int
    c2: int

    def chi_plus(self, r: int = 0) -> int:
        return 1 if self.delta > r else 0

    def chi_minus(self, r: int = 0) -> int:
        return 1 if self.delta < -r else 0


def stats(M: Pattern) -> PatternStats:
    return PatternStats(delta(M), c1(M), c1bar(M), c2(M))


# ---------------------------------------------------------------------------
# dominant weights and enumeration

def is_dominant(lam: tuple[int, int, int]) -> bool:
    return lam[0] >= lam[1] >= lam[2]


def weyl_dim(lam: tuple[int, int, int]) -> int:
    """Dimension of the simple gl(3)-module, by the product formula."""
    a, b, c = lam
    return (a - b + 1) * (b - c + 1) * (a - c + 2) // 2


def _iter_patterns(lam: tuple[int, int, int]) -> Iterator[Pattern]:
    l1, l2, l3 = lam
    for m12 in range(l2, l1 + 1):
        for m22 in range(l3, l2 + 1):
            for m11 in range(m22, m12 + 1):
                yield Pattern(l1, l2, l3, m12, m22, m11)


def sort_key(M: Pattern) -> tuple:
    # weight descending in lexicographic order, then m12 descending; this
    # realizes the index l(M) = #{N : wt N > wt M, or N = M[k] with k >= 0}.
    w = M.weight()
    return (-w[0], -w[1], -w[2], -M.m12)


def enumerate_patterns(lam: tuple[int, int, int]) -> list[Pattern]:
    """All patterns of type lam, position of M equal to l(M) (1-based)."""
    if not is_dominant(lam):
        raise ValueError(f"not dominant: {lam}")
    return sorted(_iter_patterns(lam), key=sort_key)


def l_index(M: Pattern) -> int:
    """1-based position of M in the enumeration of its type."""
    pats = enumerate_patterns(M.top)
    return pats.index(M) + 1


# ---------------------------------------------------------------------------
# parity characters of the diagonal subgroup {+-1}^3 and sigma-filtered sets

class SigmaChar(NamedTuple):
    s1: int
    s2: int
    s3: int

    @classmethod
    def of(cls, s) -> "SigmaChar":
        s = cls(*s)
        if any(c not in (0, 1) for c in s):
            raise ValueError(f"sigma components must be 0 or 1: {s}")
        return s

    def matches(self, weight: tuple[int, int, int]) -> bool:
        return all(w % 2 == c for w, c in zip(weight, self))

    def epsilon(self) -> int:
        """Common parity of the peripheral K-type parameter l."""
        if self in ((0, 0, 0), (1, 0, 0), (0, 1, 0), (0, 0, 1)):
            return 0
        return 1

    def delta_i(self, i: int) -> int:
        """1 when the i-th component differs from epsilon."""
        return 1 if self[i - 1] != self.epsilon() else 0

    def is_scalar_type(self) -> bool:
        return tuple(self) in ((0, 0, 0), (1, 1, 1))


def sigma_enumerate(lam: tuple[int, int, int], sigma) -> list[Pattern]:
    """Sublist of enumerate_patterns(lam) with weight parity sigma mod 2."""
    sigma = SigmaChar.of(sigma)
    return [M for M in enumerate_patterns(lam) if sigma.matches(M.weight())]


def l_sigma_index(M: Pattern, sigma) -> int:
    """1-based position of M within the sigma-filtered enumeration."""
    pats = sigma_enumerate(M.top, sigma)
    return pats.index(M) + 1
