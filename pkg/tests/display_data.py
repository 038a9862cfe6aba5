"""Closed-form example matrices for the peripheral contiguous relations.

The block matrices of the twenty-two example relations (six around the
scalar-type chain, sixteen around the two three-dimensional K-types) are
transcribed here entry by entry, together with the companion matrices of
affine nu-entries for each parity class.  A handful of entries in the
transcription source are internally inconsistent (they fail the identity
evaluation that every relation is checked against); those entries are
corrected in place and marked with comments.
"""

from __future__ import annotations

import re

from sp3gk.contiguous import NuPoly

N1, N2, N3 = NuPoly.nu(1), NuPoly.nu(2), NuPoly.nu(3)

_TOKEN = re.compile(r"^([+-]?\d*)X([+-])(\d)(\d)$")


def parse_p_rows(rows: list, scale: int = 1) -> list:
    """Parse rows like 'X33 -2X23 0 X11' into PVector dicts (times scale)."""
    out = []
    for row in rows:
        cells = []
        for tok in row.split():
            if tok == "0":
                cells.append({})
                continue
            m = _TOKEN.match(tok)
            if not m:
                raise ValueError(f"bad token {tok!r}")
            coeff = m.group(1)
            coeff = int(coeff) if coeff not in ("", "+", "-") else (
                -1 if coeff == "-" else 1)
            key = (m.group(2), int(m.group(3)), int(m.group(4)))
            cells.append({key: coeff * scale})
        out.append(cells)
    return out


def transpose(rows: list) -> list:
    return [list(col) for col in zip(*rows)]


def rmat(rows: list, scale=1) -> list:
    return [[(val if isinstance(val, NuPoly) else NuPoly.const(val)) * scale
             for val in row] for row in rows]


# ---------------------------------------------------------------------------
# scalar-type chain: six relations, one parity class

def scalar_chain(l: int) -> list:
    """[(lam, sign, ij, P-rows, R-rows)] for the chain through (l,l,l)."""
    p_plus11 = parse_p_rows(
        ["X+11", "X+12", "X+13", "X+22", "X+23", "X+33"], 12)
    r_plus11 = rmat([[N1 + l + 1], [N2 + l], [N3 + l - 1]], 12)

    p_plus22 = parse_p_rows([
        "X+22 -2X+12 0 X+11 0 0",
        "X+23 -X+13 -X+12 0 X+11 0",
        "X+33 0 -2X+13 0 0 X+11",
        "0 X+23 -X+22 -X+13 X+12 0",
        "0 X+33 -X+23 0 -X+13 X+12",
        "0 0 0 X+33 -2X+23 X+22"], 2)
    r_plus22 = rmat([[N2 + l, N1 + l - 1, 0],
                     [N3 + l - 1, 0, N1 + l - 1],
                     [0, N3 + l - 1, N2 + l - 2]], 2)

    p_plus33 = parse_p_rows(["X+33 -2X+23 X+22 2X+13 -2X+12 X+11"])
    r_plus33 = rmat([[N3 + l - 1, N2 + l - 2, N1 + l - 3]])

    p_minus33 = parse_p_rows(
        ["X-33", "-X-23", "X-22", "X-13", "-X-12", "X-11"], 12)
    r_minus33 = rmat([[N3 - l + 1], [N2 - l + 2], [N1 - l + 3]], 12)

    # entries marked (*) are corrected against the identity evaluation:
    # row 1 places X-33 one column left of the printed slot (the parity-matching one), rows 3 and
    # 5 end in -X-23 rather than X-33 / +X-23.
    p_minus22 = parse_p_rows([
        "X-22 2X-23 X-33 0 0 0",       # (*) X-33 in column 3, not 4
        "-X-12 -X-13 0 X-23 X-33 0",
        "0 -X-12 -X-13 -X-22 -X-23 0",  # (*) -X-23, not X-33
        "X-11 0 0 -2X-13 0 X-33",
        "0 X-11 0 X-12 -X-13 -X-23",    # (*) -X-23, not +X-23
        "0 0 X-11 0 2X-12 X-22"], 2)
    r_minus22 = rmat([[N2 - l, N3 - l + 1, 0],
                      [N1 - l + 1, 0, N3 - l + 1],
                      [0, N1 - l + 1, N2 - l + 2]], 2)

    p_minus11 = parse_p_rows(["X-11 2X-12 2X-13 X-22 2X-23 X-33"])
    r_minus11 = rmat([[N1 - l - 1, N2 - l, N3 - l + 1]])

    return [
        ((l - 2, l - 2, l - 2), "+", (1, 1), p_plus11, r_plus11),
        ((l, l - 2, l - 2), "+", (2, 2), p_plus22, r_plus22),
        ((l, l, l - 2), "+", (3, 3), p_plus33, r_plus33),
        ((l, l, l), "-", (3, 3), p_minus33, r_minus33),
        ((l, l, l - 2), "-", (2, 2), p_minus22, r_minus22),
        ((l, l - 2, l - 2), "-", (1, 1), p_minus11, r_minus11),
    ]


# ---------------------------------------------------------------------------
# mixed-type chains: sixteen relations, three parity classes

def _mixed_pmatrices() -> dict:
    out = {}
    out["+22"] = parse_p_rows([
        "X+22 -2X+12 0 X+11 0 0 0 0 0 0",
        "X+23 -X+13 -X+12 0 X+11 0 0 0 0 0",
        "X+33 0 -2X+13 0 0 X+11 0 0 0 0",
        "0 X+22 0 -2X+12 0 0 X+11 0 0 0",
        "0 X+23 -X+22 -X+13 X+12 0 0 0 0 0",
        "0 0 X+22 0 -2X+12 0 0 X+11 0 0",
        "0 X+33 -X+23 0 -X+13 X+12 0 0 0 0",
        "0 0 X+23 0 -X+13 -X+12 0 0 X+11 0",
        "0 0 X+33 0 0 -2X+13 0 0 0 X+11",
        "0 0 0 X+23 -X+22 0 -X+13 X+12 0 0",
        "0 0 0 X+33 -2X+23 X+22 0 0 0 0",
        "0 0 0 0 X+23 -X+22 0 -X+13 X+12 0",
        "0 0 0 0 X+33 -X+23 0 0 -X+13 X+12",
        "0 0 0 0 0 0 X+33 -2X+23 X+22 0",
        "0 0 0 0 0 0 0 X+33 -2X+23 X+22"], 2)
    out["+33a"] = transpose(parse_p_rows([
        "X+33 0 0",
        "-2X+23 0 0",
        "X+22 0 0",
        "0 X+33 0",
        "2X+13 -2X+23 0",
        "0 -2X+23 X+33",
        "-2X+12 X+22 0",
        "0 X+22 -2X+23",
        "0 0 X+22",
        "0 2X+13 0",
        "X+11 -2X+12 0",
        "0 -2X+12 2X+13",
        "0 0 -2X+12",
        "0 X+11 0",
        "0 0 X+11"]))
    out["+33b"] = parse_p_rows([
        "X+33 -2X+23 X+22 0 2X+13 -2X+12 0 X+11 0 0",
        "0 X+33 -2X+23 X+22 0 2X+13 -2X+12 0 X+11 0",
        "0 0 0 0 X+33 -2X+23 X+22 2X+13 -2X+12 X+11"])
    out["+12"] = parse_p_rows([
        "X+12 -X+11 0",
        "X+13 0 -X+11",
        "X+22 -X+12 0",
        "0 X+13 -X+12",
        "X+23 -X+13 0",
        "X+33 0 -X+13",
        "0 X+23 -X+22",
        "0 X+33 -X+23"], 3)
    out["+13"] = parse_p_rows([
        "-X+13 X+12 -X+11",
        "-X+23 X+22 -X+12",
        "-X+33 X+23 -X+13"], 2)
    out["+23a"] = parse_p_rows([
        "-X+23 X+22 X+13 -2X+12 -X+12 0 X+11 0",
        "-X+33 X+23 0 -X+13 X+13 -X+12 0 X+11",
        "0 0 -X+33 X+23 2X+23 -X+22 -X+13 X+12"])
    out["+23b"] = transpose(parse_p_rows([
        "-X+23 -X+33 0 0 0 0 0 0",
        "X+22 X+23 0 0 0 0 0 0",
        "X+13 0 -X+23 -X+33 0 0 0 0",
        "-2X+12 -X+13 X+22 X+23 0 0 0 0",
        "-X+12 X+13 X+22 2X+23 -X+23 -X+33 0 0",
        "0 -X+12 0 -X+22 X+22 X+23 0 0",
        "0 0 X+13 0 0 0 -X+33 0",
        "X+11 0 -2X+12 -X+13 0 0 X+23 0",
        "0 0 -X+12 0 X+13 0 2X+23 -X+33",
        "0 X+11 0 X+12 -2X+12 -X+13 -X+22 X+23",
        "0 0 0 0 -X+12 X+13 -X+22 2X+23",
        "0 0 0 0 0 -X+12 0 -X+22",
        "0 0 X+11 0 0 0 -X+13 0",
        "0 0 0 0 X+11 0 X+12 -X+13",
        "0 0 0 0 0 X+11 0 X+12"]))
    out["-22"] = transpose(parse_p_rows([
        "3X-22 -2X-12 0 X-11 0 0 0 0 0 0",
        "6X-23 -2X-13 -2X-12 0 X-11 0 0 0 0 0",
        "3X-33 0 -2X-13 0 0 X-11 0 0 0 0",
        "0 X-22 0 -2X-12 0 0 3X-11 0 0 0",
        "0 4X-23 -2X-22 -4X-13 0 0 0 2X-11 0 0",
        "0 2X-23 X-22 -2X-13 -2X-12 0 0 3X-11 0 0",
        "0 3X-33 -2X-23 0 -2X-13 2X-12 0 0 X-11 0",
        "0 X-33 2X-23 0 -2X-13 -2X-12 0 0 3X-11 0",
        "0 0 X-33 0 0 -2X-13 0 0 0 3X-11",
        "0 0 0 2X-23 -1X-22 0 -6X-13 2X-12 0 0",
        "0 0 0 3X-33 -2X-23 X-22 0 -2X-13 2X-12 0",
        "0 0 0 2X-33 0 -2X-22 0 -4X-13 4X-12 0",
        "0 0 0 0 X-33 -2X-23 0 0 -2X-13 6X-12",
        "0 0 0 0 0 0 3X-33 -2X-23 X-22 0",
        "0 0 0 0 0 0 0 X-33 -2X-23 3X-22"], 2))
    out["-33a"] = parse_p_rows([
        "4X-33 0 0",
        "-4X-23 0 0",
        "4X-22 0 0",
        "0 4X-33 0",
        "3X-13 -X-23 -X-33",
        "-2X-13 -2X-23 2X-33",
        "-3X-12 X-22 X-23",
        "X-12 X-22 -3X-23",
        "0 0 4X-22",
        "0 4X-13 0",
        "2X-11 -2X-12 -2X-13",
        "-X-11 -X-12 3X-13",
        "0 0 -4X-12",
        "0 4X-11 0",
        "0 0 4X-11"], 6)
    out["-33b"] = parse_p_rows([
        "3X-33 0 0",
        "-2X-23 X-33 0",
        "X-22 -2X-23 0",
        "0 3X-22 0",
        "2X-13 0 X-33",
        "-X-12 X-13 -X-23",
        "0 -2X-12 X-22",
        "X-11 0 2X-13",
        "0 X-11 -2X-12",
        "0 0 3X-11"], 24)
    out["-12"] = parse_p_rows([
        "-X-12 -X-13 -X-22 -X-23 -2X-23 -X-33 0 0",
        "X-11 0 X-12 -X-13 X-13 0 -X-23 -X-33",
        "0 X-11 0 2X-12 X-12 X-13 X-22 X-23"])
    out["-13"] = parse_p_rows([
        "-X-13 -X-23 -X-33",
        "X-12 X-22 X-23",
        "-X-11 -X-12 -X-13"], 2)
    out["-23a"] = parse_p_rows([
        "X-23 X-33 0",
        "-X-22 -X-23 0",
        "-X-13 0 X-33",
        "X-12 X-13 0",
        "0 -X-13 -X-23",
        "0 X-12 X-22",
        "-X-11 0 X-13",
        "0 -X-11 -X-12"], 3)
    out["-23b"] = parse_p_rows([
        "8X-23 8X-33 0 0 0 0 0 0",
        "-8X-22 -8X-23 0 0 0 0 0 0",
        "-4X-13 0 4X-23 8X-33 4X-33 0 0 0",
        "6X-12 6X-13 -2X-22 -2X-23 -4X-23 -2X-33 0 0",
        "-X-12 -5X-13 -X-22 -5X-23 2X-23 3X-33 0 0",
        "0 4X-12 0 4X-22 -4X-22 -4X-23 0 0",
        "0 0 -8X-13 0 0 0 8X-33 0",
        "-3X-11 0 5X-12 7X-13 5X-13 0 -X-23 -X-33",
        "X-11 0 X-12 -5X-13 -7X-13 0 -5X-23 3X-33",
        "0 -3X-11 0 -2X-12 5X-12 5X-13 X-22 X-23",
        "0 2X-11 0 4X-12 2X-12 -6X-13 2X-22 -6X-23",
        "0 0 0 0 0 8X-12 0 8X-22",
        "0 0 -8X-11 0 0 0 8X-13 0",
        "0 0 0 -4X-11 -8X-11 0 -4X-12 4X-13",
        "0 0 0 0 0 -8X-11 0 -8X-12"])
    return out


_MIXED_P = _mixed_pmatrices()

# the sixteen relations: (key into the P table, lam(l), sign, ij)
MIXED_RELATIONS = [
    ("+22", lambda l: (l + 1, l - 2, l - 2), "+", (2, 2)),
    ("+33a", lambda l: (l + 1, l, l - 2), "+", (3, 3)),
    ("+33b", lambda l: (l, l, l - 3), "+", (3, 3)),
    ("+12", lambda l: (l - 1, l - 2, l - 2), "+", (1, 2)),
    ("+13", lambda l: (l, l, l - 1), "+", (1, 3)),
    ("+13", lambda l: (l - 2, l - 2, l - 3), "+", (1, 3)),
    ("+23a", lambda l: (l, l - 1, l - 2), "+", (2, 3)),
    ("+23b", lambda l: (l, l - 2, l - 3), "+", (2, 3)),
    ("-22", lambda l: (l + 1, l, l - 2), "-", (2, 2)),
    ("-33a", lambda l: (l + 1, l, l), "-", (3, 3)),
    ("-33b", lambda l: (l, l, l - 1), "-", (3, 3)),
    ("-12", lambda l: (l, l - 1, l - 2), "-", (1, 2)),
    ("-13", lambda l: (l + 1, l, l), "-", (1, 3)),
    ("-13", lambda l: (l - 1, l - 2, l - 2), "-", (1, 3)),
    ("-23a", lambda l: (l, l, l - 1), "-", (2, 3)),
    ("-23b", lambda l: (l, l - 1, l - 2), "-", (2, 3)),
]


def mixed_p(key: str) -> list:
    return _MIXED_P[key]


def mixed_r(case: str, key: str, occurrence: int, l: int) -> list:
    """R-matrix display for one relation in one parity class.

    ``case`` is 'A' for the classes of (1,0,0)/(0,1,1), 'B' for
    (0,1,0)/(1,0,1) and 'C' for (0,0,1)/(1,1,0); ``occurrence`` picks among
    the two relations sharing a direction key (0-based).
    """
    if case == "A":
        table = {
            ("+22", 0): rmat([[N2 + l, N1 + l - 2, 0],
                              [N3 + l - 1, 0, N1 + l - 2],
                              [0, N3 + l - 1, N2 + l - 2],
                              [0, 0, (N2 + l - 1) * -1]], 2),
            ("+33a", 0): rmat([[N3 + l - 1, N2 + l - 2, N1 + l - 4, 0]]),
            ("+33b", 0): rmat([[N3 + l - 1, N2 + l - 2, N1 + l - 4]]),
            ("+12", 0): rmat([[N2 + l], [N3 + l - 1]], 3),
            ("+13", 0): rmat([[(N1 + l) * -1]], 2),
            ("+13", 1): rmat([[(N1 + l - 2) * -1]], 2),
            ("+23a", 0): rmat([[N3 + l - 1, N2 + l - 2]], -1),
            ("+23b", 0): rmat([[N2 + l - 1, N2 + l - 2, N1 + l - 3, 0],
                               [0, (N3 + l - 1) * -1, 0, N1 + l - 3]]),
            ("-22", 0): rmat([[(N2 - l) * 3, (N3 - l + 1) * 3, 0, 0],
                              [N1 - l + 2, 0, (N3 - l + 1) * 3,
                               (N3 - l + 1) * 2],
                              [0, N1 - l + 2, N2 - l + 4,
                               (N2 - l) * -2]], 2),
            ("-33a", 0): rmat([[(N3 - l + 1) * 4], [(N2 - l + 2) * 4],
                               [(N1 - l + 4) * 2], [(N1 - l + 4) * -1]], 6),
            # the source prints an unreadable subscript in the third row;
            # nu1 is forced by the identity evaluation
            ("-33b", 0): rmat([[N3 - l + 1], [N2 - l + 2],
                               [(N1 - l + 4) * 3]], 24),
            ("-12", 0): rmat([[N2 - l, N3 - l + 1]], -1),
            ("-13", 0): rmat([[(N1 - l) * -1]], 2),
            ("-13", 1): rmat([[(N1 - l + 2) * -1]], 2),
            ("-23a", 0): rmat([[N3 - l + 1], [N2 - l + 2]], 3),
            ("-23b", 0): rmat([[(N2 - l) * -2, (N3 - l + 1) * -2],
                               [(N2 - l + 4) * -1, (N3 - l + 1) * 3],
                               [(N1 - l + 3) * -8, 0],
                               [0, (N1 - l + 3) * -8]]),
        }
    elif case == "B":
        table = {
            ("+22", 0): rmat([[N2 + l + 1, N1 + l - 1, 0],
                              [N3 + l - 1, 0, 0],
                              [0, 0, N1 + l - 1],
                              [0, N3 + l - 1, N2 + l - 3]], 2),
            ("+33a", 0): rmat([[N3 + l - 1, N2 + l - 1, N2 + l - 3,
                                N1 + l - 3]]),
            ("+33b", 0): rmat([[N3 + l - 1, N2 + l - 3, N1 + l - 5]]),
            ("+12", 0): rmat([[(N1 + l) * -1], [N3 + l - 1]], 3),
            ("+13", 0): rmat([[N2 + l]], 2),
            ("+13", 1): rmat([[N2 + l - 2]], 2),
            ("+23a", 0): rmat([[(N3 + l - 1) * -1, N1 + l - 2]]),
            ("+23b", 0): rmat([[N2 + l - 2, N1 + l - 4, 0, 0],
                               [0, 0, (N3 + l - 1) * -1,
                                (N2 + l - 3) * -1]]),
            ("-22", 0): rmat([[N2 - l - 1, (N3 - l + 1) * 3, N3 - l + 1, 0],
                              [(N1 - l + 1) * 3, 0, 0, (N3 - l + 1) * 3],
                              [0, N1 - l + 1, (N1 - l + 1) * 3,
                               N2 - l + 3]], 2),
            ("-33a", 0): rmat([[(N3 - l + 1) * 4], [N2 - l],
                               [N2 - l + 4], [(N1 - l + 3) * 4]], 6),
            ("-33b", 0): rmat([[N3 - l + 1], [(N2 - l + 3) * 3],
                               [N1 - l + 5]], 24),
            ("-12", 0): rmat([[N1 - l, (N3 - l + 1) * -1]]),
            ("-13", 0): rmat([[N2 - l]], 2),
            ("-13", 1): rmat([[N2 - l + 2]], 2),
            ("-23a", 0): rmat([[N3 - l + 1], [(N1 - l + 2) * -1]], 3),
            ("-23b", 0): rmat([[(N2 - l + 2) * -8, 0],
                               [(N1 - l + 4) * -3, (N3 - l + 1) * -1],
                               [N1 - l + 4, (N3 - l + 1) * 3],
                               [0, (N2 - l + 3) * 8]]),
        }
    elif case == "C":
        table = {
            ("+22", 0): rmat([[(N2 + l - 1) * -1, 0, 0],
                              [N2 + l, N1 + l - 1, 0],
                              [N3 + l, 0, N1 + l - 1],
                              [0, N3 + l, N2 + l - 2]], 2),
            ("+33a", 0): rmat([[0, N3 + l, N2 + l - 2, N1 + l - 3]]),
            ("+33b", 0): rmat([[N3 + l - 2, N2 + l - 4, N1 + l - 5]]),
            ("+12", 0): rmat([[N1 + l], [N2 + l - 1]], -3),
            ("+13", 0): rmat([[(N3 + l) * -1]], 2),
            ("+13", 1): rmat([[(N3 + l - 2) * -1]], 2),
            ("+23a", 0): rmat([[N2 + l - 1, N1 + l - 2]]),
            ("+23b", 0): rmat([[(N3 + l - 2) * -1, 0, N1 + l - 4, 0],
                               [0, (N3 + l - 2) * -1, (N2 + l - 3) * -1,
                                (N2 + l - 4) * -1]]),
            ("-22", 0): rmat([[(N2 - l + 2) * -2, N2 - l - 2, N3 - l, 0],
                              [(N1 - l + 1) * 2, (N1 - l + 1) * 3, 0,
                               N3 - l],
                              [0, 0, (N1 - l + 1) * 3,
                               (N2 - l + 2) * 3]], 2),
            ("-33a", 0): rmat([[(N3 - l) * -1], [(N3 - l) * 2],
                               [(N2 - l + 2) * 4], [(N1 - l + 3) * 4]], 6),
            ("-33b", 0): rmat([[(N3 - l + 2) * 3], [N2 - l + 4],
                               [N1 - l + 5]], 24),
            ("-12", 0): rmat([[N1 - l, N2 - l + 1]]),
            ("-13", 0): rmat([[(N3 - l) * -1]], 2),
            ("-13", 1): rmat([[(N3 - l + 2) * -1]], 2),
            ("-23a", 0): rmat([[N2 - l + 1], [N1 - l + 2]], -3),
            ("-23b", 0): rmat([[(N3 - l + 2) * 8, 0],
                               [0, (N3 - l + 2) * 8],
                               [(N1 - l + 4) * -3, N2 - l + 1],
                               [(N1 - l + 4) * 2, (N2 - l + 5) * 2]]),
        }
    else:
        raise ValueError(f"unknown parity class {case!r}")
    return table[(key, occurrence)]


CASE_SIGMAS = {"A": ((1, 0, 0), (0, 1, 1)),
               "B": ((0, 1, 0), (1, 0, 1)),
               "C": ((0, 0, 1), (1, 1, 0))}
