import pytest
from conftest import rng_for

from galekit.errors import Degenerate, FirstBlockNotBasis, NotTwoBases, WrongDegree
from galekit.exactla import GF, QQ, ExactMatrix, rows_proportional
from galekit.gale import gale_transform
from galekit.generators import (
    collinear_plus_free,
    pascal_sextuple,
    random_conic_sextuple,
    random_generic_sextuple,
    random_lgp_configuration,
    two_orthogonal_bases_sextuple,
)
from galekit.pointconfig import Equivalence, PointConfiguration, is_equivalent_labeled
from galekit.selfassoc import (
    CompletionStatus,
    DiagonalWitness,
    Status,
    Trilean,
    _combination_search,
    complete_to_self_associated,
    direct_sum_self_association_check,
    is_arithmetically_gorenstein,
    orthogonalizing_form,
    self_association_witness,
    witness_from_form,
)


# -- combination search ----------------------------------------------------------


def test_combination_greedy_rational():
    phi = ExactMatrix.from_rows(QQ, [[1, 0], [0, 1], [1, -1]])
    kind, alpha, values = _combination_search(QQ, phi)
    assert kind == "ok"
    assert all(v != 0 for v in values)


def test_combination_impossible_row():
    phi = ExactMatrix.from_rows(QQ, [[1, 2], [0, 0]])
    assert _combination_search(QQ, phi)[0] == "impossible"


def test_combination_exhaustive_fallback():
    f = GF(3)
    phi = ExactMatrix.from_rows(f, [[1, 1], [1, 2]])
    kind, alpha, values = _combination_search(f, phi)
    assert kind == "ok"
    assert all(v != 0 for v in values)


def test_combination_indeterminate_when_too_large():
    f = GF(2)
    phi = ExactMatrix.from_rows(f, [[1] * 21])
    assert _combination_search(f, phi)[0] == "indeterminate"


# -- witnesses ----------------------------------------------------------------------


def test_pascal_sextuple_witness():
    cfg = pascal_sextuple(QQ)
    result = self_association_witness(cfg)
    assert result.status is Status.WITNESS
    assert result.witness.verify(cfg)
    assert cfg.quadric_defect() == 1


def test_generic_sextuple_not_self_associated():
    cfg = random_generic_sextuple(rng_for("sa-generic"), QQ)
    result = self_association_witness(cfg)
    assert result.status is Status.NOT_SELF_ASSOCIATED


def test_two_bases_sextuple_witness_value():
    cfg = two_orthogonal_bases_sextuple(QQ)
    result = self_association_witness(cfg)
    assert result.status is Status.WITNESS
    expected = tuple(map(QQ.coerce, (-9, -9, -9, 1, 1, 1)))
    assert rows_proportional(QQ, result.witness.entries, expected)


def test_witness_over_prime_field():
    rng = rng_for("sa-prime")
    cfg = random_conic_sextuple(rng, GF(101))
    result = self_association_witness(cfg)
    assert result.status is Status.WITNESS
    assert result.witness.verify(cfg)


def test_witness_wrong_degree_and_degenerate():
    frame = PointConfiguration.new(QQ, 2, [[1, 0, 0], [0, 1, 0], [0, 0, 1], [1, 1, 1]])
    with pytest.raises(WrongDegree):
        self_association_witness(frame)
    degenerate = PointConfiguration.new(QQ, 2, [[1, t, 0] for t in range(6)])
    with pytest.raises(Degenerate):
        self_association_witness(degenerate)


def test_witness_is_gale_fixed_point():
    cfg = pascal_sextuple(QQ)
    eq = is_equivalent_labeled(cfg, gale_transform(cfg).transform)
    assert eq is Equivalence.EQUIVALENT


def test_generic_sextuple_is_not_gale_fixed_point():
    cfg = random_generic_sextuple(rng_for("not-fixed"), QQ)
    eq = is_equivalent_labeled(cfg, gale_transform(cfg).transform)
    assert eq is Equivalence.NOT_EQUIVALENT


def test_on_conic_iff_self_associated():
    rng = rng_for("thm-p2")
    for _ in range(10):
        conic = random_conic_sextuple(rng, QQ)
        assert self_association_witness(conic).status is Status.WITNESS
        generic = random_generic_sextuple(rng, QQ)
        assert self_association_witness(generic).status is Status.NOT_SELF_ASSOCIATED


def test_witness_row_scaling_covariance():
    cfg = pascal_sextuple(QQ)
    d = self_association_witness(cfg).witness.entries
    scalars = tuple(map(QQ.coerce, (2, 3, -1, 1, 5, "1/2")))
    rescaled = cfg.rescaled(scalars)
    assert self_association_witness(rescaled).status is Status.WITNESS
    transported = tuple(QQ.div(di, QQ.mul(c, c)) for di, c in zip(d, scalars))
    assert DiagonalWitness(QQ, transported).verify(rescaled)


# -- arithmetically Gorenstein ---------------------------------------------------------


def test_ag_conic_sextuple():
    assert is_arithmetically_gorenstein(pascal_sextuple(QQ)) is Trilean.TRUE


def test_ag_direct_sum_fails_by_defect():
    rng = rng_for("ag-sum")
    total = random_conic_sextuple(rng, QQ).direct_sum(random_conic_sextuple(rng, QQ))
    assert self_association_witness(total).status is Status.WITNESS
    assert total.quadric_defect() == 2
    assert is_arithmetically_gorenstein(total) is Trilean.FALSE


def test_ag_complete_intersection_222():
    from galekit.scenarios import complete_intersection_222

    cfg = complete_intersection_222(101, seed=5)
    assert cfg.gamma == 8 and cfg.r == 3
    assert is_arithmetically_gorenstein(cfg) is Trilean.TRUE


def test_ag_generic_sextuple_false():
    cfg = random_generic_sextuple(rng_for("ag-generic"), QQ)
    assert is_arithmetically_gorenstein(cfg) is Trilean.FALSE


# -- orthogonalizing forms ----------------------------------------------------------------


def test_orthogonalizing_form_identity_example():
    cfg = two_orthogonal_bases_sextuple(QQ)
    form = orthogonalizing_form(cfg, (0, 1, 2))
    assert form is not None
    assert rows_proportional(QQ, form.diagonal, tuple(map(QQ.coerce, (1, 1, 1))))


def test_orthogonalizing_form_absent_for_generic():
    cfg = random_generic_sextuple(rng_for("form-generic"), QQ)
    split = cfg.partition_into_two_bases()
    assert split is not None
    assert orthogonalizing_form(cfg, split[0]) is None


def test_orthogonalizing_form_not_two_bases():
    cfg = collinear_plus_free(QQ, 4, [[0, 0, 1], [1, 1, 1]])
    with pytest.raises(NotTwoBases):
        orthogonalizing_form(cfg, (0, 1, 2))


def test_form_reconstructs_witness():
    for cfg in (pascal_sextuple(QQ), two_orthogonal_bases_sextuple(QQ)):
        split, _ = cfg.partition_into_two_bases()
        form = orthogonalizing_form(cfg, split)
        assert form is not None
        witness = witness_from_form(cfg, split, form)
        assert witness.verify(cfg)


# -- completion ------------------------------------------------------------------------------


def test_complete_five_points_p2():
    cfg = random_lgp_configuration(rng_for("complete5"), QQ, 2, 5)
    result = complete_to_self_associated(cfg)
    assert result.status is CompletionStatus.COMPLETED
    assert result.configuration.gamma == 6
    assert result.added == (5,)
    assert self_association_witness(result.configuration).status is Status.WITNESS


def test_complete_seven_points_p2_impossible():
    cfg = random_lgp_configuration(rng_for("complete7"), QQ, 2, 7)
    result = complete_to_self_associated(cfg)
    assert result.status is CompletionStatus.NOT_COMPLETABLE


def test_complete_eleven_points_p6_distinguished_plane():
    rng = rng_for("complete11")
    cfg = random_lgp_configuration(rng, QQ, 6, 11)
    results = [complete_to_self_associated(cfg, seed=s) for s in (1, 2)]
    planes = []
    for result in results:
        assert result.status is CompletionStatus.COMPLETED
        added = result.configuration.coords.submatrix(result.added)
        assert added.rank() == 3
        planes.append(added.rref().reduced)
    assert planes[0] == planes[1]


def test_complete_four_points_line_no_additions():
    cfg = PointConfiguration.new(QQ, 1, [[1, 0], [0, 1], [1, 1], [1, 3]])
    result = complete_to_self_associated(cfg)
    assert result.status is CompletionStatus.COMPLETED
    assert result.added == ()
    assert result.configuration.gamma == 4


def test_complete_first_block_not_basis():
    cfg = PointConfiguration.new(QQ, 2, [[1, 0, 0], [0, 1, 0], [1, 1, 0], [0, 0, 1], [1, 1, 1]])
    with pytest.raises(FirstBlockNotBasis):
        complete_to_self_associated(cfg)


# -- direct sums --------------------------------------------------------------------------------


def test_direct_sum_two_conics():
    rng = rng_for("sum-two-conics")
    report = direct_sum_self_association_check(
        random_conic_sextuple(rng, QQ), random_conic_sextuple(rng, QQ)
    )
    assert report.total.status is Status.WITNESS
    assert report.total_defect == 2


def test_direct_sum_mixed():
    rng = rng_for("sum-mixed")
    report = direct_sum_self_association_check(
        random_conic_sextuple(rng, QQ), random_generic_sextuple(rng, QQ)
    )
    assert report.total.status is Status.NOT_SELF_ASSOCIATED


def test_direct_sum_two_quadruples_on_line():
    a = PointConfiguration.new(QQ, 1, [[1, 0], [0, 1], [1, 1], [1, 2]])
    b = PointConfiguration.new(QQ, 1, [[1, 5], [0, 1], [1, -1], [2, 3]])
    report = direct_sum_self_association_check(a, b)
    assert report.left.status is Status.WITNESS
    assert report.right.status is Status.WITNESS
    assert report.total.status is Status.WITNESS
