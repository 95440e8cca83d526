import pytest
from hypothesis import given, settings as hsettings
from hypothesis import strategies as st

from app.core.errors import InvalidInput
from app.modules.cohomology_tables.bott import (
    bott_h,
    euler_characteristic,
    pn_table,
    product_h,
    product_table,
    scale_table,
    y_cohomology,
)
from app.modules.incidence_ring.monomials import Bidegree, component_dimension
from app.modules.pipeline.bookkeeping import line_bundle_bookkeeping
from app.schemas.cohomology import INDETERMINATE
from app.utils.combinatorics import binomial


# P^n

@pytest.mark.parametrize("n,d,j,expected", [
    (3, 2, 0, 10),
    (3, -5, 3, 4),
    (3, -2, 0, 0),
    (3, -2, 3, 0),
    (1, -2, 1, 1),
    (4, 0, 0, 1),
])
def test_bott_known_values(n, d, j, expected):
    assert bott_h(n, d, j) == expected


def test_bott_rejects_degree_out_of_range():
    with pytest.raises(InvalidInput):
        bott_h(3, 0, 4)
    with pytest.raises(InvalidInput):
        product_h(3, Bidegree(0, 0), 7)


def test_serre_duality_on_pn():
    for n in range(1, 6):
        for d in range(-12, 13):
            for j in range(n + 1):
                assert bott_h(n, d, j) == bott_h(n, -d - n - 1, n - j)


def test_at_most_one_nonzero_degree_on_pn():
    for n in range(1, 6):
        for d in range(-12, 13):
            table = pn_table(n, d)
            nonzero = table.nonzero_degrees()
            assert len(nonzero) <= 1
            if -n - 1 < d < 0:
                assert nonzero == []


# P^n x P^n

def test_kuenneth_known_values():
    assert product_h(3, Bidegree(-4, -4), 6) == 1
    assert product_h(3, Bidegree(1, 1), 0) == 16
    assert product_h(3, Bidegree(-5, 2), 3) == 4 * 10
    table = product_table(3, Bidegree(-4, 0))
    assert table.dims == {0: 0, 1: 0, 2: 0, 3: 1, 4: 0, 5: 0, 6: 0}
    assert table.bundle == "O(-4,0)"


# Y

def test_y_sections_of_o11():
    table = y_cohomology(3, Bidegree(1, 1))
    assert table.dims[0] == 15
    assert table.nonzero_degrees() == [0]
    assert table.dimension == 5
    assert table.bundle == "O(1,0,1)"


def test_y_h0_matches_ring_components():
    for n in (3, 4):
        for a in range(0, 6):
            for b in range(0, 6):
                d = Bidegree(a, b)
                assert y_cohomology(n, d).get(0) == component_dimension(n, d)


def test_y_indeterminate_known_value():
    table = y_cohomology(3, Bidegree(-5, 5))
    assert table.dims[2] == INDETERMINATE
    assert table.dims[3] == INDETERMINATE
    assert not table.is_determinate()
    assert table.euler_characteristic() is None
    assert table.to_json_dict()["dims"]["2"] == INDETERMINATE


@given(st.sampled_from([3, 4, 5]), st.integers(-15, 10), st.integers(-15, 10))
@hsettings(max_examples=200, deadline=None)
def test_y_serre_duality(n, a, b):
    table = y_cohomology(n, Bidegree(a, b))
    dual = y_cohomology(n, Bidegree(-a - n, -b - n))
    for j in range(2 * n):
        assert table.dims[j] == dual.dims[2 * n - 1 - j]


@given(st.sampled_from([3, 4, 5]), st.integers(-12, 10), st.integers(-12, 10))
@hsettings(max_examples=200, deadline=None)
def test_y_euler_characteristic_is_additive(n, a, b):
    d = Bidegree(a, b)
    chi = euler_characteristic(y_cohomology(n, d))
    if chi is None:
        return
    expected = product_table(n, d).euler_characteristic() - product_table(
        n, d.shift(-1, -1)
    ).euler_characteristic()
    assert chi == expected


@pytest.mark.parametrize("n", [3, 4, 5])
def test_vanishing_lemma(n):
    for p in (2, 3, 5, 7, 11):
        if p < n - 1:
            continue
        bundles = line_bundle_bookkeeping(n, p)
        assert y_cohomology(n, bundles.vanishing_degree).is_zero()


@pytest.mark.parametrize("n,p", [(3, 2), (3, 3), (3, 5), (4, 3), (4, 5), (5, 5), (5, 7)])
def test_m_and_its_twist_have_only_sections(n, p):
    bundles = line_bundle_bookkeeping(n, p)
    for degree in (bundles.source_degree, bundles.target_degree):
        table = y_cohomology(n, degree)
        assert table.is_determinate()
        assert table.nonzero_degrees() == [0]


def test_scale_table_keeps_indeterminate_entries():
    table = y_cohomology(3, Bidegree(-5, 5))
    scaled = scale_table(table, 4, "V^∨⊗O(-5,0,5)")
    assert scaled.dims[2] == INDETERMINATE
    m = y_cohomology(3, Bidegree(0, 2))
    assert scale_table(m, 4, "V^∨⊗O(0,0,2)").get(0) == 4 * binomial(5, 3)
