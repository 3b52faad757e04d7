import random

import pytest

from vanishingflats import (
    GF,
    FunctionTable,
    ParityCheckSpec,
    weight_counts_from_flats,
    direct_low_weight_counts,
    generalized_weight4_count,
    enumerate_flats,
    DOPolynomial,
)
from vanishingflats.cycliccode import report

from helpers import random_table


def test_cyclic_spec_structure():
    gf = GF(4)
    spec = ParityCheckSpec.cyclic(gf, 5)
    assert len(spec.labels) == gf.order - 1
    assert sorted(spec.labels) == list(range(1, gf.order))
    assert spec.images == [gf.pow(x, 5) for x in spec.labels]
    gen = ParityCheckSpec.generalized(gf, FunctionTable.from_monomial(gf, 5))
    assert len(gen.labels) == gf.order
    assert gen.labels[0] == 0


def test_spec_validation():
    gf = GF(3)
    with pytest.raises(ValueError):
        ParityCheckSpec(gf, [1, 2], [1])
    with pytest.raises(ValueError):
        ParityCheckSpec(gf, [1, 2, 3], [1, 2, 3])


def test_conservation_n3_plus_n4():
    for n, d in ((4, 14), (5, 15), (6, 7), (6, 9)):
        gf = GF(n)
        n3, n4 = weight_counts_from_flats(d, gf)
        total = len(enumerate_flats(FunctionTable.from_monomial(gf, d)))
        assert n3 + n4 == total


@pytest.mark.parametrize("n,d", [(4, 5), (4, 14), (5, 15), (6, 7), (6, 21)])
def test_direct_matches_flats_small(n, d):
    gf = GF(n)
    direct = direct_low_weight_counts(ParityCheckSpec.cyclic(gf, d), 4)
    assert (direct[3], direct[4]) == weight_counts_from_flats(d, gf)


@pytest.mark.parametrize("n,d", [(7, 7), (8, 7)])
def test_direct_weight3_larger_fields(n, d):
    gf = GF(n)
    direct = direct_low_weight_counts(ParityCheckSpec.cyclic(gf, d), 3)
    assert direct[3] == weight_counts_from_flats(d, gf)[0]
    assert 4 not in direct


def test_capacity_caps():
    with pytest.raises(ValueError):
        direct_low_weight_counts(ParityCheckSpec.cyclic(GF(7), 7), 4)
    with pytest.raises(ValueError):
        direct_low_weight_counts(ParityCheckSpec.cyclic(GF(9), 7), 3)
    with pytest.raises(ValueError):
        direct_low_weight_counts(ParityCheckSpec.cyclic(GF(4), 5), 5)


def test_generalized_code_counts_all_flats():
    gf = GF(5)
    f = random_table(gf, random.Random(13))
    spec = ParityCheckSpec.generalized(gf, f)
    direct = direct_low_weight_counts(spec, 4)
    assert generalized_weight4_count(f) == direct[4]
    assert generalized_weight4_count(f) == len(enumerate_flats(f))


def test_do_monomial_n3_fraction():
    # blocks of a DO function are closed under translation, so exactly a
    # 2^(n-2) fraction of them passes through 0
    gf = GF(6)
    gold = DOPolynomial.gold(gf, 3)
    n3, n4 = weight_counts_from_flats(9, gf)
    total = gold.count_vanishing_flats()
    assert total == 1008
    assert n3 == total // (1 << (gf.n - 2))
    assert n4 == total - n3


def test_report_both_methods_agree():
    gf = GF(5)
    out = report(gf, 15, method="both")
    assert out["agree"]
    assert out["N3"] == out["direct_N3"]
    assert out["N4"] == out["direct_N4"]
    flats_only = report(gf, 15, method="flats")
    assert (flats_only["N3"], flats_only["N4"]) == (out["N3"], out["N4"])
    direct_only = report(gf, 15, method="direct")
    assert (direct_only["N3"], direct_only["N4"]) == (out["N3"], out["N4"])


def test_apn_code_has_no_low_weights():
    gf = GF(5)
    direct = direct_low_weight_counts(ParityCheckSpec.cyclic(gf, 3), 4)
    assert direct == {3: 0, 4: 0}
