import math

import pytest
from hypothesis import given, strategies as st

from genimpl.connectives import (
    archimedean_witness,
    basic,
    basic_tnorm,
    dual_of,
    generated_tnorm_connective,
    mean_connective,
    n_ary_power,
    quasi_arithmetic_mean,
    standard_negation,
    t_drastic,
    t_lukasiewicz,
    t_minimum,
    t_product,
    table_connective,
    yager_connective,
    yager_negation,
    yager_tnorm,
)
from genimpl.generators import yager_f
from genimpl.properties import check_negation_axioms, check_tnorm_axioms

unit = st.floats(min_value=0.0, max_value=1.0, allow_nan=False)


class TestBasicTnorms:
    def test_values(self):
        assert t_minimum(0.3, 0.7) == 0.3
        assert t_product(0.5, 0.4) == 0.2
        assert t_lukasiewicz(0.7, 0.5) == pytest.approx(0.2)
        assert t_lukasiewicz(0.3, 0.4) == 0.0
        assert t_drastic(0.9, 0.9) == 0.0
        assert t_drastic(1.0, 0.4) == 0.4

    def test_dispatch(self):
        assert basic_tnorm("product", 0.5, 0.5) == 0.25
        with pytest.raises(ValueError):
            basic_tnorm("nope", 0.5, 0.5)

    @pytest.mark.parametrize("kind", ["min", "product", "lukasiewicz", "drastic"])
    def test_axioms(self, kind, small_spec):
        assert check_tnorm_axioms(basic(kind), small_spec).holds


class TestYagerFamily:
    def test_interior_value(self):
        assert yager_tnorm(2.0, 0.5, 0.5) == pytest.approx(
            1.0 - math.sqrt(0.5)
        )

    def test_p_zero_is_drastic(self):
        assert yager_tnorm(0.0, 0.9, 0.9) == 0.0
        assert yager_tnorm(0.0, 1.0, 0.4) == 0.4

    def test_p_infinity_is_minimum(self):
        assert yager_tnorm(math.inf, 0.3, 0.7) == 0.3

    @given(unit)
    def test_neutral_element_exact(self, x):
        assert yager_tnorm(3.0, x, 1.0) == x
        assert yager_tnorm(3.0, 1.0, x) == x

    def test_matches_generated_form(self, small_spec):
        t = generated_tnorm_connective(yager_f(2.0))
        for x in small_spec.grid():
            for y in small_spec.grid():
                assert t(x, y) == pytest.approx(
                    yager_tnorm(2.0, x, y), abs=1e-9
                )

    def test_rejects_negative_p(self):
        with pytest.raises(ValueError):
            yager_tnorm(-1.0, 0.5, 0.5)


class TestDual:
    @given(unit, unit)
    def test_involution(self, x, y):
        s = dual_of(basic("product"))
        t = dual_of(s)
        assert t(x, y) == pytest.approx(x * y, abs=1e-12)

    def test_probabilistic_sum(self):
        s = dual_of(basic("product"))
        assert s(0.5, 0.5) == pytest.approx(0.75)
        assert s(0.0, 0.3) == pytest.approx(0.3)


class TestMean:
    def test_value(self):
        assert quasi_arithmetic_mean(0.0, 1.0) == pytest.approx(math.sqrt(0.5))

    def test_fails_boundary_axiom(self, small_spec):
        report = check_tnorm_axioms(mean_connective(), small_spec)
        assert not report.holds
        assert report.property == "T4"


class TestArchimedean:
    def test_lukasiewicz_witness(self):
        assert archimedean_witness(basic("lukasiewicz"), 0.9, 0.5, 100) == 6

    def test_minimum_has_none(self):
        assert archimedean_witness(basic("min"), 0.6, 0.5, 1000) is None

    def test_matches_n_ary_power(self):
        t = basic("lukasiewicz")
        n = archimedean_witness(t, 0.9, 0.5, 100)
        assert n_ary_power(t, 0.9, n) <= 0.5
        assert n_ary_power(t, 0.9, n - 1) > 0.5

    def test_rejects_boundary_arguments(self):
        with pytest.raises(ValueError):
            archimedean_witness(basic("min"), 1.0, 0.5, 10)


class TestNegations:
    def test_standard(self):
        n = standard_negation()
        assert n(0.25) == 0.75

    def test_yager_collapses_at_p_one(self):
        n = yager_negation(1.0)
        for x in (0.0, 0.3, 0.8, 1.0):
            assert n(x) == pytest.approx(1.0 - x, abs=1e-12)

    def test_yager_value(self):
        # N_2(0.5) = 1 - sqrt(3)/2
        assert yager_negation(2.0)(0.5) == pytest.approx(
            1.0 - math.sqrt(3.0) / 2.0
        )

    @given(unit)
    def test_yager_involutive(self, x):
        n = yager_negation(2.0)
        assert n(n(x)) == pytest.approx(x, abs=1e-7)

    def test_axioms(self, small_spec):
        for n in (standard_negation(), yager_negation(0.5), yager_negation(3.0)):
            assert check_negation_axioms(n, small_spec).holds


class TestTableConnective:
    def test_bilinear_interpolation(self):
        c = table_connective([[0.0, 0.0], [0.0, 1.0]])
        assert c(1.0, 1.0) == 1.0
        assert c(0.5, 0.5) == pytest.approx(0.25)

    def test_rejects_ragged_grid(self):
        with pytest.raises(ValueError):
            table_connective([[0.0, 0.0], [0.0]])
