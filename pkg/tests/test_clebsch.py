import pytest

from sp3gk import clebsch
from sp3gk.clebsch import (ComponentAbsent, inject_neg, inject_pos,
                           inject_vec, project_e1, tensor_act,
                           verify_equivariance)
from sp3gk.gtpattern import Pattern, enumerate_patterns, is_dominant


def f(*entries):
    return Pattern(*entries)


def test_rank_one_highest_cases():
    # the two displayed images used to pin the projector normalization
    t = inject_vec((1, 0, 0), 1, f(2, 0, 0, 2, 0, 2))
    assert t == {(f(1, 0, 0, 1, 0, 1), f(1, 0, 0, 1, 0, 1)): -6}
    t = inject_vec((1, 0, 0), 2, f(1, 1, 0, 1, 1, 1))
    assert t == {(f(1, 0, 0, 1, 0, 0), f(1, 0, 0, 1, 0, 1)): 1,
                 (f(1, 0, 0, 1, 0, 1), f(1, 0, 0, 1, 0, 0)): -1}


def test_rank_one_from_trivial():
    t = inject_vec((0, 0, 0), 1, f(1, 0, 0, 1, 0, 1))
    assert len(t) == 1
    ((left, right), coeff), = t.items()
    assert left == f(0, 0, 0, 0, 0, 0)
    assert right == f(1, 0, 0, 1, 0, 1)
    assert coeff != 0


def test_component_absent():
    with pytest.raises(ComponentAbsent):
        inject_vec((1, 0, 0), 3, f(1, 0, 1, 1, 0, 1))
    with pytest.raises(ComponentAbsent):
        inject_pos((0, 0, 0), (2, 2), f(0, 2, 0, 0, 0, 0))
    with pytest.raises(ComponentAbsent):
        inject_neg((1, 0, 0), (1, 1), f(-1, 0, 0, 0, 0, 0))


def test_projector_table():
    assert project_e1({(f(1, 0, 0, 1, 0, 1), f(1, 0, 0, 1, 0, 1)): 1}) == {
        f(2, 0, 0, 2, 0, 2): 1}
    a = project_e1({(f(1, 0, 0, 1, 0, 1), f(1, 0, 0, 1, 0, 0)): 1})
    b = project_e1({(f(1, 0, 0, 1, 0, 0), f(1, 0, 0, 1, 0, 1)): 1})
    assert a == b == {f(2, 0, 0, 2, 0, 1): 1}
    with pytest.raises(ValueError):
        project_e1({(f(2, 0, 0, 2, 0, 2), f(1, 0, 0, 1, 0, 1)): 1})


def test_projector_composition_constants():
    for M in enumerate_patterns((2, 0, 0)):
        assert project_e1(inject_vec((1, 0, 0), 1, M)) == {M: -6}
    for M in enumerate_patterns((1, 1, 0)):
        assert project_e1(inject_vec((1, 0, 0), 2, M)) == {}


def test_leading_coefficient_direction_33():
    # the highest block coefficient of the third double-step family is 1
    for lam in [(0, 0, 0), (2, 1, 0), (3, 1, 1)]:
        target = (lam[0], lam[1], lam[2] + 2)
        if not is_dominant(target):
            continue
        for M in enumerate_patterns(target):
            assert clebsch.C_pos(3, 3, M, 2, 2, 0) == 1


def _rank(vectors):
    # exact row reduction over the rationals
    from fractions import Fraction
    support = sorted({key for vec in vectors for key in vec})
    index = {key: i for i, key in enumerate(support)}
    rows = [[Fraction(vec.get(key, 0)) for key in support] for vec in vectors]
    rank, pivot_col = 0, 0
    while rank < len(rows) and pivot_col < len(support):
        pivot = next((r for r in range(rank, len(rows))
                      if rows[r][pivot_col]), None)
        if pivot is None:
            pivot_col += 1
            continue
        rows[rank], rows[pivot] = rows[pivot], rows[rank]
        lead = rows[rank][pivot_col]
        for r in range(rank + 1, len(rows)):
            if rows[r][pivot_col]:
                factor = rows[r][pivot_col] / lead
                rows[r] = [a - factor * b for a, b in zip(rows[r], rows[rank])]
        rank += 1
        pivot_col += 1
    return rank


def test_injector_rank():
    # injectivity: the image of a basis has full rank
    lam = (2, 1, 0)
    for ij in [(1, 1), (1, 2), (2, 3)]:
        target = tuple(lam[a] + (a == ij[0] - 1) + (a == ij[1] - 1)
                       for a in range(3))
        images = [inject_pos(lam, ij, M) for M in enumerate_patterns(target)]
        assert _rank(images) == len(images)
    images = [inject_neg(lam, (1, 2), M) for M in enumerate_patterns((1, 0, 0))]
    assert _rank(images) == len(images)


def test_dimension_bookkeeping():
    from sp3gk.gtpattern import weyl_dim
    for lam in [(2, 1, 0), (3, 1, 1), (2, 2, 0), (3, 3, 0)]:
        for sign in "+-":
            total = 0
            for i in (1, 2, 3):
                for j in range(i, 4):
                    if not clebsch.component_occurs(lam, sign, (i, j)):
                        continue
                    step = 1 if sign == "+" else -1
                    target = tuple(lam[a] + step * ((a == i - 1) + (a == j - 1))
                                   for a in range(3))
                    total += weyl_dim(target)
            assert total == 6 * weyl_dim(lam), (lam, sign)


def test_component_occurrence_rule():
    # dominant target but repeated row length: the two added boxes would share
    # a column, so the closed map is zero and the component is absent
    assert not clebsch.component_occurs((2, 2, 0), "+", (1, 2))
    assert clebsch.component_occurs((2, 2, 0), "+", (1, 3))
    assert not clebsch.component_occurs((3, 3, 0), "-", (1, 2))
    assert clebsch.component_occurs((3, 1, 0), "+", (1, 2))
    with pytest.raises(ComponentAbsent):
        inject_pos((2, 2, 0), (1, 2), f(3, 3, 0, 3, 3, 3))


def test_closed_equals_composed_small():
    for lam in [(0, 0, 0), (1, 0, 0), (2, 2, 0), (2, 0, -1)]:
        for i in (1, 2, 3):
            for j in range(i, 4):
                if not clebsch.component_occurs(lam, "+", (i, j)):
                    continue
                target = tuple(lam[a] + (a == i - 1) + (a == j - 1)
                               for a in range(3))
                for M in enumerate_patterns(target):
                    assert (inject_pos(lam, (i, j), M, "closed")
                            == inject_pos(lam, (i, j), M, "composed"))


def test_composed_matches_map_composition():
    # where the intermediate weight is dominant, the coefficient convolution
    # agrees with actually composing the three maps
    lam, ij = (2, 1, 0), (1, 2)
    mid = (2, 2, 0)  # lam + e2
    target = (3, 2, 0)
    for M in enumerate_patterns(target):
        composed = {}
        for (left, r1), c in inject_vec(mid, 1, M).items():
            for (left2, r2), c2 in inject_vec(lam, 2, left).items():
                for proj, c3 in project_e1({(r2, r1): 1}).items():
                    key = (left2, proj)
                    composed[key] = composed.get(key, 0) + c * c2 * c3
        composed = {k: v for k, v in composed.items() if v}
        assert composed == inject_pos(lam, ij, M, "composed")


def test_neg_duality_consistency():
    # the minus-direction family is the double dual of the plus family
    lam, ij = (2, 1, 0), (1, 3)
    lamhat = (-lam[2], -lam[1], -lam[0])
    for M in enumerate_patterns((1, 1, -1)):
        direct = inject_neg(lam, ij, M)
        routed = {}
        image = inject_pos(lamhat, (4 - ij[1], 4 - ij[0]), M.dual())
        for (a, b), c in image.items():
            routed[(a.dual(), b.dual())] = c
        assert direct == routed


def test_equivariance_small_sweep():
    for lam in [(0, 0, 0), (1, 0, 0), (2, 1, 0), (1, 1, -1)]:
        for direction in clebsch.all_directions(lam):
            assert verify_equivariance(lam, direction) == []


def test_equivariance_detects_mutation():
    lam = (0, 0, 0)
    target = Pattern(2, 0, 0, 2, 0, 1)

    def perturb(M, image):
        if M != target:
            return image
        out = dict(image)
        key = next(iter(out))
        out[key] = out[key] + 1
        return out

    violations = verify_equivariance(lam, ("pos", (1, 1)), perturb=perturb)
    assert violations


def test_equivariance_surfacing_absent_component():
    with pytest.raises(ComponentAbsent):
        verify_equivariance((0, 0, 0), ("neg", (1, 1)))


def test_tensor_act_leibniz():
    t = {(f(1, 0, 0, 1, 0, 0), f(1, 0, 0, 0, 0, 0)): 1}
    out = tensor_act("E11", t)
    # both weights are read off the factors
    assert out == {}
    out = tensor_act("E12", t)
    assert out == {(f(1, 0, 0, 1, 0, 1), f(1, 0, 0, 0, 0, 0)): 1}
