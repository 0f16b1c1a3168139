import random

import pytest
from conftest import rng_for

from galekit.detnl import (
    TrilinearForm,
    adjoint_eval,
    determinantal_locus,
    match_pairs,
    projective_representatives,
    random_rational_locus_tensor,
    verify_veronese_gale,
)
from galekit.errors import DimensionMismatch, LocusIncomplete, RankTwoDrop
from galekit.exactla import GF, ExactMatrix
from galekit.pointconfig import Equivalence


def random_tensor(rng, field, r, s):
    f = r + s
    entries = [
        [[rng.randrange(field.p) for _ in range(s + 1)] for _ in range(r + 1)]
        for _ in range(f)
    ]
    return TrilinearForm.new(field, entries)


def naive_adjoint(phi, side, point):
    """Independent triple-loop contraction."""
    p = phi.field.p
    if side == "V":
        return [
            [sum(phi.entries[m][k][j] * point[k] for k in range(phi.r + 1)) % p for m in range(phi.f)]
            for j in range(phi.s + 1)
        ]
    return [
        [sum(phi.entries[m][k][j] * point[j] for j in range(phi.s + 1)) % p for m in range(phi.f)]
        for k in range(phi.r + 1)
    ]


# -- adjoints ------------------------------------------------------------------


def test_tensor_validation():
    with pytest.raises(DimensionMismatch):
        TrilinearForm.new(GF(7), [[[1, 0], [0, 1]]])  # f = 1 != r + s = 2


def test_adjoint_elementary_tensor():
    f = GF(7)
    entries = [[[0, 0], [0, 0]], [[0, 0], [0, 0]]]
    entries[1][0][1] = 3  # e_1 (x) v_0 (x) w_1
    phi = TrilinearForm.new(f, entries)
    m = adjoint_eval(phi, "V", (1, 0))
    nonzero = [(j, c) for j in range(2) for c in range(2) if m.entries[j][c] != 0]
    assert nonzero == [(1, 1)]
    assert m.entries[1][1] == 3


def test_adjoint_linearity():
    rng = rng_for("adjoint-linear")
    f = GF(7)
    phi = random_tensor(rng, f, 2, 2)
    p1 = (1, 2, 3)
    p2 = (4, 0, 6)
    total = tuple(f.add(a, b) for a, b in zip(p1, p2))
    left = adjoint_eval(phi, "V", total)
    right = adjoint_eval(phi, "V", p1) + adjoint_eval(phi, "V", p2)
    assert left == right


def test_adjoint_matches_naive_oracle():
    rng = rng_for("adjoint-oracle")
    f = GF(7)
    for _ in range(5):
        phi = random_tensor(rng, f, 2, 1)
        for side, dim in (("V", 2), ("W", 1)):
            pt = tuple(rng.randrange(7) for _ in range(dim + 1))
            if all(x == 0 for x in pt):
                pt = (1,) + pt[1:]
            assert [list(r) for r in adjoint_eval(phi, side, pt).entries] == naive_adjoint(
                phi, side, pt
            )


# -- loci ---------------------------------------------------------------------------


def test_projective_representatives_order_and_count():
    reps = list(projective_representatives(3, 2))
    assert len(reps) == 13  # 9 + 3 + 1
    assert reps[0] == (0, 0, 1)
    assert reps == sorted(reps)
    assert all(next(x for x in rep if x) == 1 for rep in reps)


def test_locus_r1_s1_at_most_two_points():
    rng = rng_for("locus-11")
    sizes = []
    for _ in range(8):
        phi = random_tensor(rng, GF(7), 1, 1)
        try:
            for side in ("V", "W"):
                sizes.append(determinantal_locus(phi, side).gamma)
        except (RankTwoDrop, LocusIncomplete):
            continue
    assert sizes and all(size <= 2 for size in sizes)


def test_locus_2_2_has_six_points():
    phi, _ = random_rational_locus_tensor(11, 2, 2, seed=1)
    gv = determinantal_locus(phi, "V")
    gw = determinantal_locus(phi, "W")
    assert gv.gamma == 6 and gw.gamma == 6


def test_rank_two_drop_detected():
    # prescribe two independent kernel vectors at one point of P(V)
    f = GF(11)
    rng = random.Random("galekit-tests-2drop")
    v = (1, 0, 0)
    rows = []
    for w in ((1, 0, 0), (0, 1, 0)):
        for m in range(4):
            row = [0] * (4 * 3 * 3)
            for k in range(3):
                for j in range(3):
                    row[m * 9 + k * 3 + j] = v[k] * w[j] % 11
            rows.append(tuple(row))
    kernel = ExactMatrix(f, tuple(rows)).kernel_basis()
    vec = [0] * 36
    for c in range(kernel.cols):
        coeff = rng.randrange(11)
        col = kernel.column(c)
        vec = [(x + coeff * y) % 11 for x, y in zip(vec, col)]
    phi = TrilinearForm.new(
        f,
        [[[vec[m * 9 + k * 3 + j] for j in range(3)] for k in range(3)] for m in range(4)],
    )
    with pytest.raises(RankTwoDrop):
        determinantal_locus(phi, "V")


# -- matching --------------------------------------------------------------------------


def test_match_pairs_1_1():
    rng = rng_for("match-11")
    for _ in range(40):
        phi = random_tensor(rng, GF(7), 1, 1)
        try:
            gv = determinantal_locus(phi, "V")
            gw = determinantal_locus(phi, "W")
        except (RankTwoDrop, LocusIncomplete):
            continue
        if gv.gamma != 2 or gw.gamma != 2:
            continue
        match = match_pairs(phi, gv, gw)
        assert sorted(match) == [0, 1]
        return
    raise AssertionError("no two-point tensor found over GF(7)")


def test_match_pairs_2_2():
    phi, _ = random_rational_locus_tensor(11, 2, 2, seed=2)
    gv = determinantal_locus(phi, "V")
    gw = determinantal_locus(phi, "W")
    match = match_pairs(phi, gv, gw)
    assert sorted(match) == list(range(6))


def test_match_pairs_unshuffles_relabeling():
    rng = rng_for("shuffle")
    phi, _ = random_rational_locus_tensor(11, 2, 2, seed=3)
    gv = determinantal_locus(phi, "V")
    gw = determinantal_locus(phi, "W")
    base = match_pairs(phi, gv, gw)
    order = list(range(6))
    rng.shuffle(order)
    shuffled = gw.permuted(order)
    new_match = match_pairs(phi, gv, shuffled)
    for i in range(6):
        assert order[new_match[i]] == base[i]


def test_match_symmetry_under_transpose():
    phi, _ = random_rational_locus_tensor(11, 2, 2, seed=4)
    gv = determinantal_locus(phi, "V")
    gw = determinantal_locus(phi, "W")
    forward = match_pairs(phi, gv, gw)
    backward = match_pairs(phi.transposed(), gw, gv)
    for i, j in enumerate(forward):
        assert backward[j] == i


# -- the duality ------------------------------------------------------------------------


def test_verify_veronese_gale_2_2():
    phi, _ = random_rational_locus_tensor(11, 2, 2, seed=5)
    report = verify_veronese_gale(phi)
    assert report.equivalence is Equivalence.EQUIVALENT
    assert report.locus_v_size == report.expected_degree == 6


def test_verify_veronese_gale_skips_trivial():
    rng = rng_for("skip-11")
    phi = random_tensor(rng, GF(7), 1, 1)
    report = verify_veronese_gale(phi)
    assert report.skipped


def test_verify_veronese_gale_2_3():
    phi, _ = random_rational_locus_tensor(31, 2, 3, seed=1)
    report = verify_veronese_gale(phi)
    assert report.equivalence is Equivalence.EQUIVALENT
    assert report.expected_degree == 10
