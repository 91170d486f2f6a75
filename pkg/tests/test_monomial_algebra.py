"""Monomials, monomial ideals, submodules, and their Hilbert data."""
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from gotzmann.combinatorics import binomial
from gotzmann.errors import BudgetExceeded, InvariantViolated, PreconditionViolated
from gotzmann.monomial_algebra import (
    GradedFreeModule,
    Monomial,
    MonomialIdeal,
    MonomialSubmodule,
    adjusted_hf_decomposition,
    generic_hyperplane_hf,
    hf_direct,
    hf_quotient,
    hilbert_polynomial,
    hilbert_series,
    ideal_from_dict,
    ideal_to_dict,
    module_from_dict,
    module_to_dict,
    monomial_from_string,
    monomials_of_degree,
    quotient_basis,
    rank,
    saturate,
    stabilization_degree,
)
from gotzmann.numpoly import NumPoly

from conftest import ideal, module


def test_monomial_basic_operations():
    m = Monomial((2, 1, 0))
    assert m.degree == 3
    assert m.times_var(2) == Monomial((2, 1, 1))
    assert m.divide_var(0) == Monomial((1, 1, 0))
    assert m.strip_var(0) == Monomial((0, 1, 0))
    assert m.max_index() == 1
    assert Monomial((0, 0)).max_index() == -1
    assert Monomial((1, 0, 2)).divides(Monomial((1, 1, 2)))
    assert not Monomial((2, 0)).divides(Monomial((1, 5)))
    assert Monomial((1, 2)).lcm(Monomial((3, 0))) == Monomial((3, 2))


def test_monomial_rejects_negative_exponents():
    with pytest.raises(ValueError):
        Monomial((1, -1))
    # divide_var clamps at zero instead of going negative
    assert Monomial((1, 1)).divide_var(1).divide_var(1) == Monomial((1, 0))


def test_monomial_string_round_trip():
    for text in ("1", "x0", "x1^3", "x0^2*x1", "x2*x0"):
        m = monomial_from_string(text, 2)
        assert monomial_from_string(str(m), 2) == m
    with pytest.raises(ValueError):
        monomial_from_string("y0", 2)
    with pytest.raises(ValueError):
        monomial_from_string("x5", 2)


def test_monomials_of_degree_count_and_order():
    for n in range(0, 4):
        for d in range(0, 6):
            monos = monomials_of_degree(n, d)
            assert len(monos) == binomial(d + n, n)
            # descending lex: exponent tuples strictly decrease
            exps = [m.exponents for m in monos]
            assert exps == sorted(exps, reverse=True)
    assert monomials_of_degree(2, -1) == ()


def test_ideal_minimalizes_generators():
    i = ideal(2, "x0", "x0^2", "x0*x1")
    assert [str(g) for g in i.gens] == ["x0"]
    assert MonomialIdeal.unit(2).is_unit()
    assert MonomialIdeal.zero(2).is_zero()
    assert not ideal(2, "x0").is_unit()


def test_ideal_contains_and_plus_gens():
    i = ideal(2, "x0^2", "x1")
    assert i.contains(monomial_from_string("x0^2*x2", 2))
    assert not i.contains(monomial_from_string("x0*x2", 2))
    j = i.plus_gens((monomial_from_string("x2^2", 2),))
    assert j.contains(monomial_from_string("x2^3", 2))


def test_colon_and_intersect():
    i = ideal(2, "x0*x2^3")
    assert i.colon_var_power(2) == ideal(2, "x0")
    a = ideal(1, "x0^2")
    b = ideal(1, "x0*x1")
    assert a.intersect(b) == ideal(1, "x0^2*x1")


def test_saturation_examples():
    assert ideal(2, "x0^2", "x0*x1").saturation() == ideal(2, "x0^2", "x0*x1")
    # no associated prime is the irrelevant ideal, so nothing is removed
    assert ideal(2, "x0*x2^3").saturation() == ideal(2, "x0*x2^3")
    assert ideal(1, "x0^2", "x0*x1").saturation() == ideal(1, "x0")
    assert ideal(2, "x0^2", "x0*x1", "x0*x2").saturation() == ideal(2, "x0")
    assert MonomialIdeal.zero(2).saturation().is_zero()
    # powers of the irrelevant ideal saturate to the unit ideal
    assert ideal(1, "x0^2", "x0*x1", "x1^2").saturation().is_unit()


def test_max_gen_degree():
    assert ideal(2, "x0^2", "x1^3").max_gen_degree() == 3
    with pytest.raises(ValueError):
        MonomialIdeal.zero(2).max_gen_degree()


def test_quotient_basis_and_count():
    i = ideal(1, "x0^2", "x0*x1")
    assert [str(m) for m in quotient_basis(i, 2)] == ["x1^2"]
    assert hf_quotient(i, 0) == 1
    assert hf_quotient(i, 1) == 2
    assert hf_quotient(i, 5) == 1
    assert hf_quotient(MonomialIdeal.unit(1), 3) == 0
    assert hf_quotient(MonomialIdeal.zero(1), 3) == 4


def test_free_module_validation():
    with pytest.raises(ValueError):
        GradedFreeModule(1, ())
    with pytest.raises(ValueError):
        GradedFreeModule(1, (1, 0))
    f = GradedFreeModule(2, (-1, -1, 0))
    assert f.m == 3
    assert f.dim_at(0) == 3 + 3 + 1


def test_submodule_validation():
    shape = GradedFreeModule(1, (0, 0))
    with pytest.raises(ValueError):
        MonomialSubmodule(shape, (MonomialIdeal.zero(1),))
    with pytest.raises(ValueError):
        MonomialSubmodule(shape, (MonomialIdeal.zero(1), MonomialIdeal.zero(2)))


def test_submodule_rank_and_gen_degree(two_free_lines, twisted_plane_pair):
    assert rank(two_free_lines) == 2
    assert rank(twisted_plane_pair) == 2
    assert two_free_lines.max_gen_degree() == 0  # the unit component, degree 0
    assert twisted_plane_pair.max_gen_degree() == 0
    zero = module(1, (0,), ["zero"])
    assert zero.max_gen_degree() is None
    assert zero.is_zero()
    shifted = module(1, (-2, 1), [ideal(1, "x0^3"), "unit"])
    assert shifted.max_gen_degree() == 1  # max(3 + (-2), 1)


def test_hf_direct_examples(two_free_lines, twisted_plane_pair):
    assert hf_direct(two_free_lines, 1) == 4
    assert hf_direct(two_free_lines, 2) == 6
    assert [hf_direct(twisted_plane_pair, d) for d in (-1, 0, 1)] == [2, 6, 12]
    # H(d) = d^2 + 5d + 6 from degree -1 on
    for d in range(-1, 6):
        assert hf_direct(twisted_plane_pair, d) == d * d + 5 * d + 6


def test_hilbert_series_example(two_free_lines):
    series = hilbert_series(two_free_lines)
    assert series.to_dict() == {"numerator": [2], "offset": 0, "denominator_power": 2}
    for d in range(0, 8):
        assert series.hf(d) == 2 * (d + 1)


def test_hilbert_series_oracle_on_corpus(corpus):
    for sub in corpus:
        series = hilbert_series(sub)  # verify=True replays against hf_direct
        for d in range(0, 13):
            assert series.hf(d) == hf_direct(sub, d)


def test_series_budget():
    sub = module(2, (0,), [ideal(2, "x0*x1", "x1*x2", "x0*x2")])
    with pytest.raises(BudgetExceeded):
        hilbert_series(sub, node_budget=1)


def test_hilbert_polynomial_examples(twisted_plane_pair):
    assert hilbert_polynomial(twisted_plane_pair) == NumPoly([6, 5, 1])
    free_line = module(1, (0,), ["zero"])
    assert hilbert_polynomial(free_line) == NumPoly([1, 1])
    plane_curve = module(2, (0,), [ideal(2, "x0^2", "x0*x1")])
    assert hilbert_polynomial(plane_curve) == NumPoly([2, 1])


def test_stabilization_degree_examples():
    assert stabilization_degree(module(1, (0,), ["zero"])) <= 0
    assert stabilization_degree(module(2, (0,), ["zero"])) <= 0
    # H(0) = 1 but P(0) = 2, so stabilization happens at 1, not 0
    assert stabilization_degree(module(2, (0,), [ideal(2, "x0^2", "x0*x1")])) == 1
    # artinian: H = (1, 2, 0, ...), P = 0, last disagreement at d = 1
    assert stabilization_degree(
        module(1, (0,), [ideal(1, "x0^2", "x0*x1", "x1^2")])
    ) == 2
    shifted = module(1, (3,), ["zero"])
    assert stabilization_degree(shifted) <= 3


def test_stabilization_is_tight_on_corpus(corpus):
    for sub in corpus[:80]:
        d0 = stabilization_degree(sub)
        poly = hilbert_polynomial(sub)
        for d in range(d0, d0 + 6):
            assert poly(d) == hf_direct(sub, d)
        if any(hilbert_series(sub).numerator):
            # least such degree: one step below must disagree (or not even
            # be an integer value of the polynomial)
            below = poly(d0 - 1)
            assert below.denominator != 1 or int(below) != hf_direct(sub, d0 - 1)


def test_saturate_examples_and_idempotence(corpus):
    sub = module(2, (0, 1), [ideal(2, "x0^2", "x0*x1", "x0*x2"), ideal(2, "x0*x2^3")])
    sat = saturate(sub)
    assert sat.components[0] == ideal(2, "x0")
    assert sat.components[1] == ideal(2, "x0*x2^3")
    for s in corpus[:60]:
        sat = saturate(s)
        assert saturate(sat) == sat
        assert hilbert_polynomial(sat) == hilbert_polynomial(s)
        d0 = max(stabilization_degree(s), stabilization_degree(sat))
        for d in range(d0, d0 + 4):
            assert hf_direct(sat, d) == hf_direct(s, d)


def test_adjusted_decomposition_examples(two_free_lines, twisted_plane_pair):
    assert adjusted_hf_decomposition(two_free_lines, 1) == (4, 0)
    assert adjusted_hf_decomposition(twisted_plane_pair, 0) == (4, 2)
    all_unit = module(1, (0, 0), ["unit", "unit"])
    assert adjusted_hf_decomposition(all_unit, 3) == (0, 0)


def test_adjusted_decomposition_window_on_corpus(corpus):
    for sub in corpus:
        n = sub.n
        degrees = sub.degrees
        r = rank(sub)
        m = len(degrees)
        for d in range(-2, 13):
            free, rho = adjusted_hf_decomposition(sub, d)
            assert free == sum(binomial(d - f + n, n) for f in degrees[m - r :])
            assert 0 <= rho <= sum(binomial(d - f + n, n) for f in degrees[: m - r])


def test_generic_hyperplane_examples(two_free_lines):
    assert generic_hyperplane_hf(two_free_lines, 2) == 2
    free_plane = module(2, (0,), ["zero"])
    assert generic_hyperplane_hf(free_plane, 3) == 4  # forms of degree 3 in 2 vars
    # generic h in two variables makes (x0, h) irrelevant: quotient is k
    line2 = module(1, (0,), [ideal(1, "x0")])
    assert generic_hyperplane_hf(line2, 1) == 0
    # in three variables the quotient by (x0, h) is a polynomial ring in one variable
    line3 = module(2, (0,), [ideal(2, "x0")])
    assert generic_hyperplane_hf(line3, 1) == 1
    with pytest.raises(PreconditionViolated):
        generic_hyperplane_hf(module(0, (0,), ["zero"]), 1)
    with pytest.raises(PreconditionViolated):
        generic_hyperplane_hf(two_free_lines, 1, samples=0)


def test_generic_hyperplane_seed_independent(corpus):
    for sub in corpus[:50]:
        d = max(sub.degrees) + 2
        values = {generic_hyperplane_hf(sub, d, samples=3, seed=s) for s in (0, 1, 2)}
        assert len(values) == 1, (sub, values)


def test_serialization_round_trips(two_free_lines, twisted_plane_pair, corpus):
    for sub in [two_free_lines, twisted_plane_pair] + corpus[:20]:
        data = module_to_dict(sub)
        assert module_from_dict(data) == sub
    i = ideal(2, "x0^2*x1")
    assert ideal_from_dict(ideal_to_dict(i), 2) == i
    assert ideal_from_dict({"unit": True}, 1).is_unit()
    assert ideal_from_dict({"gens": []}, 1).is_zero()


def test_module_from_dict_errors():
    with pytest.raises(ValueError, match="n"):
        module_from_dict({"degrees": [0]})
    with pytest.raises(ValueError, match="components"):
        module_from_dict({"n": 1, "degrees": [0]})
    with pytest.raises(ValueError):
        module_from_dict({"n": 1, "degrees": [0], "components": [{"gens": []}] * 2})


@settings(max_examples=60, deadline=None)
@given(
    st.lists(
        st.tuples(st.integers(0, 3), st.integers(0, 3)),
        min_size=1,
        max_size=4,
    )
)
def test_series_matches_counting_random_ideals(exp_pairs):
    gens = tuple(Monomial((a, b)) for a, b in exp_pairs if a + b > 0)
    sub = module(1, (0,), [MonomialIdeal(1, gens)])
    series = hilbert_series(sub)
    for d in range(0, 9):
        assert series.hf(d) == hf_direct(sub, d)
