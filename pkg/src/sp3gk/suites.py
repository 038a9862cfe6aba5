"""Verification sweeps shared by the command-line ``verify`` and the tests.

Each suite returns a report dict with ``passed``, ``checked`` (a case count)
and ``failures`` (a list of case labels).  All checks are exact.
"""

from __future__ import annotations

import os
from itertools import product as _iproduct

from . import clebsch, contiguous, glmodule, uea, whittaker
from .gtpattern import SigmaChar, enumerate_patterns, is_dominant

DEFAULT_SPREAD = 4


def max_spread(default: int = DEFAULT_SPREAD) -> int:
    value = os.environ.get("SP3GK_MAX_SPREAD")
    return int(value) if value else default


def shapes_with_spread(spread: int, bases=(0,)):
    """Dominant weights with lam1 - lam3 up to the bound."""
    out = []
    for a in range(spread + 1):
        for b in range(spread + 1 - a):
            for base in bases:
                out.append((a + b + base, b + base, base))
    return out


def _report(checked: int, failures: list) -> dict:
    return {"passed": not failures, "checked": checked, "failures": failures}


def suite_gl3(spread: int = 5, bases=(-2, -1, 0, 1, 2)) -> dict:
    """Commutation relations of all 81 generator pairs on every module."""
    failures = []
    checked = 0
    gens = glmodule.GENERATORS
    delta = lambda a, b: 1 if a == b else 0
    for lam in shapes_with_spread(spread, bases):
        pats = enumerate_patterns(lam)
        for p, q in _iproduct((1, 2, 3), repeat=2):
            for r, s in _iproduct((1, 2, 3), repeat=2):
                checked += 1
                ok = True
                for M in pats:
                    lhs: dict = {}
                    for N, c in glmodule.act_basis(f"E{r}{s}", M).items():
                        glmodule.add_into(lhs, glmodule.act_basis(f"E{p}{q}", N), c)
                    for N, c in glmodule.act_basis(f"E{p}{q}", M).items():
                        glmodule.add_into(lhs, glmodule.act_basis(f"E{r}{s}", N), -c)
                    rhs: dict = {}
                    if q == r:
                        glmodule.add_into(rhs, glmodule.act_basis(f"E{p}{s}", M))
                    if s == p:
                        glmodule.add_into(rhs, glmodule.act_basis(f"E{r}{q}", M), -1)
                    if lhs != rhs:
                        ok = False
                        break
                if not ok:
                    failures.append(f"lam={lam} [E{p}{q},E{r}{s}]")
    return _report(checked, failures)


def suite_equivariance(spread: int | None = None) -> dict:
    """Machine proof of the injector formulas: all directions, all patterns."""
    spread = max_spread() if spread is None else spread
    failures = []
    checked = 0
    for lam in shapes_with_spread(spread):
        for direction in clebsch.all_directions(lam):
            checked += 1
            if clebsch.verify_equivariance(lam, direction):
                failures.append(f"lam={lam} {direction}")
    return _report(checked, failures)


def suite_closed_composed(spread: int | None = None) -> dict:
    """Closed coefficient formulas equal the three-map composition."""
    spread = max_spread() if spread is None else spread
    failures = []
    checked = 0
    for lam in shapes_with_spread(spread):
        for i in (1, 2, 3):
            for j in range(i, 4):
                target = tuple(lam[a] + (a == i - 1) + (a == j - 1)
                               for a in range(3))
                if not is_dominant(target):
                    continue
                checked += 1
                for M in enumerate_patterns(target):
                    a = clebsch.inject_pos(lam, (i, j), M, "closed")
                    b = clebsch.inject_pos(lam, (i, j), M, "composed")
                    if a != b:
                        failures.append(f"lam={lam} dir=({i},{j}) M={tuple(M)}")
                        break
    return _report(checked, failures)


def suite_theorem_main(spread: int | None = None) -> dict:
    """The contiguous relations, every parity character and direction."""
    spread = max_spread() if spread is None else spread
    failures = []
    checked = 0
    for lam in shapes_with_spread(spread):
        for sign in "+-":
            for i in (1, 2, 3):
                for j in range(i, 4):
                    target = contiguous.shifted_type(lam, sign, (i, j))
                    if not is_dominant(target):
                        continue
                    for sigma in _iproduct((0, 1), repeat=3):
                        try:
                            ok = contiguous.verify_contiguous(
                                sigma, lam, sign, (i, j))
                        except clebsch.ComponentAbsent:
                            continue
                        checked += 1
                        if not ok:
                            failures.append(
                                f"sigma={sigma} lam={lam} {sign}({i},{j})")
    return _report(checked, failures)


def _chi_cases():
    for sigma in ((0, 0, 0), (1, 1, 1)):
        yield sigma, ("lll",)
    for sigma in ((1, 0, 0), (0, 1, 0), (0, 0, 1),
                  (1, 1, 0), (1, 0, 1), (0, 1, 1)):
        yield sigma, ("l+1ll", "lll-1")


def suite_chi_oracle(lmin_off: int = -4, lmax_off: int = 6) -> dict:
    """Eigenvalue formulas against the contiguous-matrix factorizations."""
    failures = []
    checked = 0
    for sigma, ktypes in _chi_cases():
        eps = SigmaChar.of(sigma).epsilon()
        for l in range(eps + lmin_off, eps + lmax_off + 1, 2):
            for ktype in ktypes:
                ops = (1, 2, 3) if ktype == "lll" else (1, 2, 3, "tilde")
                for n in ops:
                    checked += 1
                    if (whittaker.chi(sigma, ktype, n, l)
                            != whittaker.chi_oracle(sigma, ktype, n, l)):
                        failures.append(f"sigma={sigma} {ktype} C{n} l={l}")
    return _report(checked, failures)


def suite_submain(cases=None) -> dict:
    """Mechanically reduced radial systems equal the closed displays."""
    if cases is None:
        cases = ([((0, 0, 0), l, "lll") for l in (0, 2)]
                 + [((1, 1, 1), l, "lll") for l in (1, 3)]
                 + [(sigma, l, kt)
                    for sigma in ((1, 0, 0), (0, 1, 0), (0, 0, 1))
                    for l in (0, 2) for kt in ("l+1ll", "lll-1")])
    failures = []
    for sigma, l, ktype in cases:
        system = whittaker.holonomic_system(sigma, l, ktype)
        for block in system.blocks:
            if not block.matches_display():
                failures.append(f"sigma={sigma} l={l} {ktype} {block.name}")
    return _report(len(cases), failures)


def suite_k_invariance(levels=(1, 2, 3)) -> dict:
    failures = []
    for n in levels:
        for pq in uea.k_invariance_violations(n):
            failures.append(f"[kappa{pq}, C{2 * n}] != 0")
    return _report(len(levels) * 9, failures)


SUITES = {
    "gl3": suite_gl3,
    "equivariance": suite_equivariance,
    "closed-composed": suite_closed_composed,
    "theorem-main": suite_theorem_main,
    "chi-oracle": suite_chi_oracle,
    "submain": suite_submain,
    "k-invariance": suite_k_invariance,
}

# aliases used on the command line
SUITE_ALIASES = {"clebsch": ("equivariance", "closed-composed")}


def run_suites(names) -> dict:
    results = {}
    for name in names:
        for sub in SUITE_ALIASES.get(name, (name,)):
            results[sub] = SUITES[sub]()
    return results
