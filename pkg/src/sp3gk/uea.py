"""sp(3) as 6x6 matrices and its enveloping algebra in Iwasawa normal order.

The Lie algebra is realized concretely; every element is expanded over the
21-letter basis adapted to the decomposition n + a + k:

    index  0..8   E_alpha, alpha a positive restricted root
    index  9..11  H1, H2, H3
    index 12..20  kappa(E_pq), the compact generators

Products in the enveloping algebra are straightened into the PBW basis with
letters in increasing index order ("normal order": unipotent factors left,
split factors middle, compact factors right).  The two-sided chirality data
(symmetric matrices of p-block root vectors, their minor matrices and
determinants) produce the K-invariant operators C2, C4, C6 used downstream.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from typing import Dict, List, Tuple

from .glmodule import PKey


class GaussianRational:
    """Exact complex number with rational real and imaginary parts."""

    __slots__ = ("re", "im")

    def __init__(self, re=0, im=0):
        self.re = Fraction(re)
        self.im = Fraction(im)

    def __add__(self, other):
        other = _gr(other)
        return GaussianRational(self.re + other.re, self.im + other.im)

    __radd__ = __add__

    def __neg__(self):
        return GaussianRational(-self.re, -self.im)

    def __sub__(self, other):
        return self + (-_gr(other))

    def __rsub__(self, other):
        return _gr(other) + (-self)

    def __mul__(self, other):
        other = _gr(other)
        return GaussianRational(self.re * other.re - self.im * other.im,
                                self.re * other.im + self.im * other.re)

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = _gr(other)
        norm = other.re * other.re + other.im * other.im
        if not norm:
            raise ZeroDivisionError("division by zero")
        return self * GaussianRational(other.re / norm, -other.im / norm)

    def __eq__(self, other):
        other = _gr(other)
        return self.re == other.re and self.im == other.im

    def __hash__(self):
        return hash((self.re, self.im))

    def __bool__(self):
        return bool(self.re) or bool(self.im)

    def __repr__(self):
        return f"GaussianRational({self.re}, {self.im})"

    def __str__(self):
        if not self.im:
            return str(self.re)
        if not self.re:
            return f"{self.im}*i"
        return f"{self.re}{'+' if self.im > 0 else '-'}{abs(self.im)}*i"


def _gr(x) -> GaussianRational:
    return x if isinstance(x, GaussianRational) else GaussianRational(x)


I = GaussianRational(0, 1)
ONE = GaussianRational(1)

# ---------------------------------------------------------------------------
# 6x6 matrix realizations (entries GaussianRational)

Matrix = Tuple[Tuple[GaussianRational, ...], ...]


def _mat(rows) -> Matrix:
    return tuple(tuple(_gr(x) for x in row) for row in rows)


def _zeros(n=6):
    return [[GaussianRational() for _ in range(n)] for _ in range(n)]


def mat_add(a: Matrix, b: Matrix, scale=1) -> Matrix:
    s = _gr(scale)
    return _mat([[a[r][c] + s * b[r][c] for c in range(6)] for r in range(6)])


def mat_scale(a: Matrix, scale) -> Matrix:
    s = _gr(scale)
    return _mat([[s * a[r][c] for c in range(6)] for r in range(6)])


def mat_mul(a: Matrix, b: Matrix) -> Matrix:
    out = _zeros()
    for r in range(6):
        for k in range(6):
            x = a[r][k]
            if not x:
                continue
            for c in range(6):
                if b[k][c]:
                    out[r][c] = out[r][c] + x * b[k][c]
    return _mat(out)


def mat_bracket(a: Matrix, b: Matrix) -> Matrix:
    return mat_add(mat_mul(a, b), mat_mul(b, a), -1)


def _unit(p: int, q: int) -> Matrix:
    rows = _zeros()
    rows[p - 1][q - 1] = ONE
    return _mat(rows)


def _block(a, b, c, d) -> Matrix:
    rows = _zeros()
    for r in range(3):
        for cc in range(3):
            rows[r][cc] = a[r][cc]
            rows[r][cc + 3] = b[r][cc]
            rows[r + 3][cc] = c[r][cc]
            rows[r + 3][cc + 3] = d[r][cc]
    return _mat(rows)


def _m3(fill) -> list:
    return [[_gr(fill(r + 1, c + 1)) for c in range(3)] for r in range(3)]


_O3 = _m3(lambda r, c: 0)


def _e3(p, q):
    return _m3(lambda r, c: 1 if (r, c) == (p, q) else 0)


def h_matrix(p: int) -> Matrix:
    d = _m3(lambda r, c: 1 if r == c == p else 0)
    return _block(d, _O3, _O3, _m3(lambda r, c: -1 if r == c == p else 0))


def root_matrix(alpha: str) -> Matrix:
    """Restricted root vectors for the positive roots and their negatives."""
    neg = alpha.startswith("-")
    name = alpha[1:] if neg else alpha
    if name.startswith("2e"):
        i = int(name[2])
        m = _block(_O3, _e3(i, i), _O3, _O3)
    else:
        j, k = int(name[1]), int(name[4])
        if name[2] == "+":
            s = _m3(lambda r, c: 1 if {r, c} == {j, k} else 0)
            m = _block(_O3, s, _O3, _O3)
        else:
            m = _block(_e3(j, k), _O3, _O3,
                       _m3(lambda r, c: -1 if (r, c) == (k, j) else 0))
    if neg:  # theta(X) = -X^t
        m = _mat([[-m[c][r] for c in range(6)] for r in range(6)])
    return m


def kappa_matrix(p: int, q: int) -> Matrix:
    """Complex-linear extension of the unitary-algebra embedding on E_pq."""
    a = _m3(lambda r, c: Fraction(1, 2) * ((r, c) == (p, q))
            - Fraction(1, 2) * ((r, c) == (q, p)))
    b = _m3(lambda r, c: GaussianRational(0, Fraction(-1, 2))
            * (((r, c) == (p, q)) + ((r, c) == (q, p))))
    nb = [[-x for x in row] for row in b]
    return _block(a, b, nb, a)


def x_matrix(sign: str, i: int, j: int) -> Matrix:
    s = _m3(lambda r, c: Fraction(1, 2) * (((r, c) == (i, j)) + ((r, c) == (j, i))))
    pm = 1 if sign == "+" else -1
    si = [[I * pm * x for x in row] for row in s]
    ns = [[-x for x in row] for row in s]
    return _block(s, si, si, ns)


POS_ROOTS = ("e1-e2", "e1-e3", "e2-e3", "e1+e2", "e1+e3", "e2+e3",
             "2e1", "2e2", "2e3")
KAPPA_ORDER = ((1, 1), (2, 2), (3, 3), (1, 2), (2, 1), (2, 3), (3, 2),
               (1, 3), (3, 1))
BASIS_NAMES = tuple(f"E[{r}]" for r in POS_ROOTS) + ("H1", "H2", "H3") + tuple(
    f"k(E{p}{q})" for p, q in KAPPA_ORDER)
N_LETTERS = 21
GOOD_N = (0, 2, 8)          # e1-e2, e2-e3, 2e3 survive modulo [n, n]
BAD_N = (1, 3, 4, 5, 6, 7)  # the commutator span inside n

BASIS_MATRICES: List[Matrix] = (
    [root_matrix(r) for r in POS_ROOTS]
    + [h_matrix(p) for p in (1, 2, 3)]
    + [kappa_matrix(p, q) for p, q in KAPPA_ORDER])


# a Lie-algebra element is a sparse coordinate vector over the 21 letters
LieElement = Dict[int, GaussianRational]


def lie_to_matrix(x: LieElement) -> Matrix:
    out = _zeros()
    for idx, coeff in x.items():
        m = BASIS_MATRICES[idx]
        for r in range(6):
            for c in range(6):
                if m[r][c]:
                    out[r][c] = out[r][c] + coeff * m[r][c]
    return _mat(out)


def matrix_to_lie(m: Matrix) -> LieElement:
    """Expand an sp(3) matrix over the Iwasawa basis.

    Splits off the compact part (read directly through the unitary-algebra
    block form) and expands the remainder over root vectors and H's via the
    explicit Iwasawa expressions of the p-block basis.
    """
    # compact part: (m + theta m)/2 with theta X = -X^t has block form
    # (A, B; -B, A); its kappa-coordinates are the entries of A + iB.
    out: LieElement = {}
    half = Fraction(1, 2)
    k_part = [[(m[r][c] - m[c][r]) * half for c in range(6)]
              for r in range(6)]
    p_part = [[(m[r][c] + m[c][r]) * half for c in range(6)]
              for r in range(6)]
    for n, (p, q) in enumerate(KAPPA_ORDER):
        z = k_part[p - 1][q - 1] + I * k_part[p - 1][q - 1 + 3]
        if z:
            out[12 + n] = z
    # p-part blocks (A', B'; B', -A') with A', B' symmetric: the two p-block
    # components are p_+((A'-iB')/2)... recovered through S+T = A', i(S-T)=B'.
    for i in range(1, 4):
        for j in range(i, 4):
            a = p_part[i - 1][j - 1]
            b = p_part[i - 1][j - 1 + 3]
            s = (a - I * b) * half
            t = (a + I * b) * half
            scale = 1 if i == j else 2
            _accum_x(out, "+", i, j, s * scale)
            _accum_x(out, "-", i, j, t * scale)
    return {k: v for k, v in out.items() if v}


# Iwasawa expansions of the p-block root vectors over the 21 letters
def _x_expansion(sign: str, i: int, j: int) -> LieElement:
    pm = 1 if sign == "+" else -1
    out: LieElement = {}
    if i == j:
        out[POS_ROOTS.index(f"2e{i}")] = I * (2 * pm)
        out[9 + i - 1] = ONE
        out[12 + KAPPA_ORDER.index((i, i))] = _gr(pm)
    else:
        out[POS_ROOTS.index(f"e{i}-e{j}")] = ONE
        out[POS_ROOTS.index(f"e{i}+e{j}")] = I * pm
        kap = (j, i) if sign == "+" else (i, j)
        out[12 + KAPPA_ORDER.index(kap)] = _gr(pm)
    return out


X_EXPANSION: Dict[PKey, LieElement] = {
    (sign, i, j): _x_expansion(sign, i, j)
    for sign in "+-" for i in range(1, 4) for j in range(i, 4)}


def _accum_x(out: LieElement, sign: str, i: int, j: int, coeff) -> None:
    if not coeff:
        return
    for idx, base in X_EXPANSION[(sign, i, j)].items():
        new = out.get(idx, GaussianRational()) + coeff * base
        if new:
            out[idx] = new
        else:
            out.pop(idx, None)


def bracket(x: LieElement, y: LieElement) -> LieElement:
    """Lie bracket computed through the matrix realization."""
    m = mat_bracket(lie_to_matrix(x), lie_to_matrix(y))
    out = matrix_to_lie(m)
    assert lie_to_matrix(out) == m, "bracket left the basis span"
    return out


@lru_cache(maxsize=None)
def _bracket_table(a: int, b: int) -> tuple:
    out = bracket({a: ONE}, {b: ONE})
    return tuple(sorted(out.items()))


# ---------------------------------------------------------------------------
# enveloping algebra elements: {word: coefficient} with words = index tuples

UEAElement = Dict[tuple, GaussianRational]


def _uea_add(acc: UEAElement, word: tuple, coeff) -> None:
    new = acc.get(word, GaussianRational()) + coeff
    if new:
        acc[word] = new
    else:
        acc.pop(word, None)


def normalize(element: UEAElement) -> UEAElement:
    """Straighten every word into nondecreasing index order.

    Adjacent out-of-order letters are swapped at the cost of a bracket
    insertion; the worklist merges coefficients of identical words so
    cancellation happens as early as possible.
    """
    out: UEAElement = {}
    pending: UEAElement = {}
    for word, coeff in element.items():
        if coeff:
            _uea_add(pending, word, coeff)
    while pending:
        word, coeff = pending.popitem()
        pos = -1
        for n in range(len(word) - 1):
            if word[n] > word[n + 1]:
                pos = n
                break
        if pos < 0:
            _uea_add(out, word, coeff)
            continue
        a, b = word[pos], word[pos + 1]
        swapped = word[:pos] + (b, a) + word[pos + 2:]
        _uea_add(pending, swapped, coeff)
        for idx, bc in _bracket_table(a, b):
            _uea_add(pending, word[:pos] + (idx,) + word[pos + 2:], coeff * bc)
    return out


def uea_from_lie(x: LieElement) -> UEAElement:
    return {(idx,): coeff for idx, coeff in x.items() if coeff}


def uea_const(value) -> UEAElement:
    value = _gr(value)
    return {(): value} if value else {}


def uea_add(*elements, scales=None) -> UEAElement:
    out: UEAElement = {}
    for n, el in enumerate(elements):
        s = _gr(scales[n]) if scales else ONE
        for word, coeff in el.items():
            _uea_add(out, word, s * coeff)
    return out


def uea_scale(element: UEAElement, scalar) -> UEAElement:
    s = _gr(scalar)
    return {w: s * c for w, c in element.items() if s * c}


def uea_mul(u: UEAElement, v: UEAElement, reduced: bool = False) -> UEAElement:
    """Product in the enveloping algebra, straightened to normal order.

    With ``reduced`` the result is truncated modulo the left ideal generated
    by [n, n]; valid to apply at every step of a left-to-right product.
    """
    raw: UEAElement = {}
    for w1, c1 in u.items():
        for w2, c2 in v.items():
            _uea_add(raw, w1 + w2, c1 * c2)
    out = normalize(raw)
    return reduce_mod_nn(out) if reduced else out


def uea_commutator(u: UEAElement, v: UEAElement) -> UEAElement:
    return uea_add(uea_mul(u, v), uea_scale(uea_mul(v, u), -1))


def uea_ad_letter(a: int, element: UEAElement) -> UEAElement:
    """Commutator [x_a, element] computed as a derivation.

    Replaces one letter of each word by its bracket with x_a; far cheaper
    than straightening the two-sided products for large elements.
    """
    raw: UEAElement = {}
    for word, coeff in element.items():
        for n in range(len(word)):
            for idx, bc in _bracket_table(a, word[n]):
                _uea_add(raw, word[:n] + (idx,) + word[n + 1:], coeff * bc)
    return normalize(raw)


def reduce_mod_nn(element: UEAElement) -> UEAElement:
    """Drop normal words containing a commutator-span unipotent letter.

    Sound because the surviving/dropped split of the unipotent letters is the
    ideal decomposition of n checked by ``nn_span_check``.
    """
    bad = set(BAD_N)
    return {w: c for w, c in element.items() if not (set(w) & bad)}


def nn_span_check() -> bool:
    """[n, n] is exactly the span of the six dropped root vectors."""
    span = set()
    for a in range(9):
        for b in range(9):
            for idx, coeff in _bracket_table(a, b):
                if coeff:
                    span.add(idx)
    return span == set(BAD_N)


def jacobi_check() -> bool:
    for a in range(N_LETTERS):
        for b in range(a + 1, N_LETTERS):
            for c in range(b + 1, N_LETTERS):
                total: LieElement = {}
                for x, y, z in ((a, b, c), (b, c, a), (c, a, b)):
                    inner = dict(_bracket_table(y, z))
                    term = bracket({x: ONE}, inner)
                    for idx, coeff in term.items():
                        new = total.get(idx, GaussianRational()) + coeff
                        if new:
                            total[idx] = new
                        else:
                            total.pop(idx, None)
                if total:
                    return False
    return True


# ---------------------------------------------------------------------------
# handy aliases for building operators

def X(sign: str, i: int, j: int) -> UEAElement:
    if i > j:
        i, j = j, i
    return uea_from_lie(X_EXPANSION[(sign, i, j)])


def H(p: int) -> UEAElement:
    return {(9 + p - 1,): ONE}


def kappa(p: int, q: int) -> UEAElement:
    return {(12 + KAPPA_ORDER.index((p, q)),): ONE}


def E(alpha: str) -> UEAElement:
    return {(POS_ROOTS.index(alpha),): ONE}


def uea_prod(*factors, reduced: bool = False) -> UEAElement:
    out = uea_const(1)
    for f in factors:
        out = uea_mul(out, f, reduced=reduced)
    return out


# ---------------------------------------------------------------------------
# chirality matrices and the operators C2, C4, C6

def m1(sign: str) -> list:
    return [[X(sign, i, j) for j in (1, 2, 3)] for i in (1, 2, 3)]


def _det2(a, b, c, d, reduced=False) -> UEAElement:
    # | a b ; c d | with commuting entries (a single p-block is abelian)
    return uea_add(uea_mul(a, d, reduced=reduced),
                   uea_scale(uea_mul(b, c, reduced=reduced), -1))


def minor(sign: str, i: int, j: int, reduced: bool = False) -> UEAElement:
    """(i, j)-minor of the symmetric chirality matrix, i <= j."""
    rows = [r for r in (0, 1, 2) if r != i - 1]
    cols = [c for c in (0, 1, 2) if c != j - 1]
    m = m1(sign)
    return _det2(m[rows[0]][cols[0]], m[rows[0]][cols[1]],
                 m[rows[1]][cols[0]], m[rows[1]][cols[1]], reduced=reduced)


def m2(sign: str, reduced: bool = False) -> list:
    out = [[None] * 3 for _ in range(3)]
    for i in (1, 2, 3):
        for j in (1, 2, 3):
            a, b = min(i, j), max(i, j)
            m = minor(sign, a, b, reduced=reduced)
            out[i - 1][j - 1] = m if (i + j) % 2 == 0 else uea_scale(m, -1)
    return out


def m3(sign: str, reduced: bool = False) -> UEAElement:
    """Determinant of the chirality matrix (entries commute)."""
    m = m1(sign)
    out: UEAElement = {}
    from itertools import permutations
    for perm in permutations((0, 1, 2)):
        parity = 1
        for a in range(3):
            for b in range(a + 1, 3):
                if perm[a] > perm[b]:
                    parity = -parity
        term = uea_prod(m[0][perm[0]], m[1][perm[1]], m[2][perm[2]],
                        reduced=reduced)
        out = uea_add(out, uea_scale(term, parity))
    return out


def _trace_product(left: list, right: list, reduced: bool) -> UEAElement:
    out: UEAElement = {}
    for i in range(3):
        for j in range(3):
            out = uea_add(out, uea_mul(left[i][j], right[j][i],
                                       reduced=reduced))
    return out


@lru_cache(maxsize=None)
def c_operator(n: int, reduced: bool = False) -> tuple:
    """The invariant operator C_{2n}, n = 1, 2, 3 (returned as sorted items).

    ``reduced`` computes the class modulo [n, n]U(g), which is all the radial
    reduction needs and is much cheaper for C6.
    """
    if n == 1:
        out = _trace_product(m1("+"), m1("-"), reduced)
    elif n == 2:
        out = _trace_product(m2("+", reduced), m2("-", reduced=False), reduced)
    elif n == 3:
        out = uea_mul(m3("+", reduced), m3("-"), reduced=reduced)
    else:
        raise ValueError("n must be 1, 2 or 3")
    if reduced:
        out = reduce_mod_nn(out)
    return tuple(sorted(out.items()))


def c_operator_dict(n: int, reduced: bool = False) -> UEAElement:
    return dict(c_operator(n, reduced))


def d_matrix(order: str, reduced: bool = False) -> list:
    """The 3x3 operator matrix m1(C_s) m1(C_t), order '+-' or '-+'."""
    first, second = order[0], order[1]
    a, b = m1(first), m1(second)
    out = [[None] * 3 for _ in range(3)]
    for i in range(3):
        for j in range(3):
            cell: UEAElement = {}
            for k in range(3):
                cell = uea_add(cell, uea_mul(a[i][k], b[k][j],
                                             reduced=reduced))
            out[i][j] = reduce_mod_nn(cell) if reduced else cell
    return out


def k_invariance_violations(n: int) -> list:
    """Compact generators whose commutator with C_{2n} fails to vanish."""
    c = c_operator_dict(n)
    bad = []
    for p, q in KAPPA_ORDER:
        if uea_ad_letter(12 + KAPPA_ORDER.index((p, q)), c):
            bad.append((p, q))
    return bad
