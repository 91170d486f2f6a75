"""Checkers for the adjusted growth, restriction, and regularity bounds."""
import json

import pytest

from gotzmann.combinatorics import macaulay_transform
from gotzmann.errors import PreconditionViolated
from gotzmann.monomial_algebra import GradedFreeModule, hf_direct
from gotzmann.numpoly import NumPoly
from gotzmann.theorems import (
    HOLDS,
    PREMISE_FAILS,
    SHARP,
    VIOLATED,
    adjusted_macaulay_bound,
    check_gasharov,
    check_gotzmann_regularity_adjusted,
    check_green_adjusted,
    check_macaulay_adjusted,
    check_persistence_adjusted,
    check_sharpness,
    f_low_degree,
    random_submodule,
    sweep,
)
from gotzmann.lex import saturated_lex_module

from conftest import ideal, module, sharpness_instance


def test_f_low_degree(two_free_lines, twisted_plane_pair):
    assert f_low_degree(two_free_lines) == 0
    assert f_low_degree(twisted_plane_pair) == -1
    # free part exhausts the module: fall back to the last degree
    assert f_low_degree(module(1, (-1, 1), ["zero", "zero"])) == 1
    assert f_low_degree(module(1, (0, 1), [ideal(1, "x0"), "zero"])) == 0


def test_rank_three_module_battery(two_free_lines):
    # rank-3 degree-0 ambient modulo its first summand: every adjusted
    # checker is sharp at every degree, while the classical bounds are slack
    for d in range(1, 7):
        mac = check_macaulay_adjusted(two_free_lines, d)
        assert mac.verdict == SHARP
        assert mac.context["rho"] == 0
        green = check_green_adjusted(two_free_lines, d)
        assert green.verdict == SHARP
        pers = check_persistence_adjusted(two_free_lines, d, horizon=4)
        assert pers.verdict == SHARP
    # classical growth bound at d = 1: H(2) = 6 strictly below 4^(transform) = 10
    classical = check_gasharov(two_free_lines, 1, 0, "macaulay")
    assert classical.verdict == HOLDS
    assert classical.bound_lhs == 6
    assert classical.bound_rhs == 10
    # classical restriction bound: hyperplane image has H(1) = 2 < 3
    green_classical = check_gasharov(two_free_lines, 1, 0, "green")
    assert green_classical.verdict == HOLDS
    assert green_classical.bound_lhs == 2
    assert green_classical.bound_rhs == 3
    reg = check_gotzmann_regularity_adjusted(two_free_lines)
    assert reg.verdict == SHARP
    assert reg.bound_lhs == 0
    assert reg.context["s"] == 0


def test_checker_precondition_gates(two_free_lines):
    with pytest.raises(PreconditionViolated):
        check_macaulay_adjusted(two_free_lines, 0)
    with pytest.raises(PreconditionViolated):
        check_green_adjusted(two_free_lines, 0)
    with pytest.raises(PreconditionViolated):
        check_green_adjusted(module(0, (0,), ["zero"]), 1)
    with pytest.raises(ValueError):
        check_gasharov(two_free_lines, 2, 0, which="both")
    with pytest.raises(PreconditionViolated):
        check_gasharov(two_free_lines, 2, -1)
    with pytest.raises(PreconditionViolated):
        check_gasharov(two_free_lines, 1, 1)  # needs d >= p + l + 1 = 2
    with pytest.raises(PreconditionViolated):
        check_persistence_adjusted(two_free_lines, 1, horizon=0)
    gen_high = module(1, (0,), [ideal(1, "x0^3")])
    with pytest.raises(PreconditionViolated):
        check_persistence_adjusted(gen_high, 2)


def test_persistence_premise_fails():
    sub = random_submodule(0)
    rep = check_persistence_adjusted(sub, 3)
    assert rep.verdict == PREMISE_FAILS
    assert not rep.premises_hold
    assert rep.bound_lhs == 11
    assert rep.bound_rhs == 15


def test_persistence_on_lex_modules():
    # the premise holds on a saturated lex module at its top generator
    # degree and persists through the whole horizon
    for seed in range(15):
        poly, ambient, r, _ = sharpness_instance(seed)
        lex = saturated_lex_module(poly, ambient, r)
        max_gen = lex.max_gen_degree()
        d = max(f_low_degree(lex) + 1, max_gen if max_gen is not None else 0)
        rep = check_persistence_adjusted(lex, d, horizon=6)
        assert rep.verdict == SHARP, (seed, rep.context)


def test_zero_saturation_regularity_is_vacuous():
    free = module(1, (0, 0), ["zero", "zero"])
    rep = check_gotzmann_regularity_adjusted(free)
    assert rep.verdict == HOLDS
    assert rep.bound_lhs is None
    assert rep.bound_rhs == 0
    assert rep.context["saturation_is_zero"]


def test_regularity_checker_nontrivial():
    # one saturated point-pair component plus a free component
    sub = module(1, (0, 0), [ideal(1, "x0^2"), "zero"])
    rep = check_gotzmann_regularity_adjusted(sub)
    assert rep.verdict in (HOLDS, SHARP)
    assert rep.bound_lhs is not None
    assert rep.bound_lhs <= rep.bound_rhs


def test_sharpness_precondition_gates():
    # every component free
    with pytest.raises(PreconditionViolated):
        check_sharpness(NumPoly([1, 1]), GradedFreeModule(1, (0,)), 1)
    # boundary degree nonzero
    with pytest.raises(PreconditionViolated):
        check_sharpness(NumPoly([3, 2]), GradedFreeModule(1, (-1, 0)), 1)
    # adjusted number below the top ambient degree
    with pytest.raises(PreconditionViolated):
        check_sharpness(NumPoly([0, 1]), GradedFreeModule(1, (0, 1)), 1)


def test_sharpness_zero_lex_module_premise_fails():
    rep = check_sharpness(NumPoly([1, 1]), GradedFreeModule(1, (0,)), 0)
    assert rep.verdict == PREMISE_FAILS
    assert rep.bound_lhs is None
    assert rep.context["lex_module_is_zero"]


def test_sharpness_seeded_smoke():
    for seed in range(10):
        poly, ambient, r, s_q = sharpness_instance(seed)
        rep = check_sharpness(poly, ambient, r)
        assert rep.verdict == SHARP
        assert rep.bound_lhs == rep.bound_rhs == s_q


def test_adjusted_bound_never_above_classical():
    for seed in range(120):
        sub = random_submodule(seed)
        f_low = f_low_degree(sub)
        l = sub.degrees[-1]
        for d in range(max(f_low + 1, l + 1), max(f_low + 1, l + 1) + 4):
            adjusted = adjusted_macaulay_bound(sub, d)
            classical = macaulay_transform(hf_direct(sub, d), d - l)
            assert adjusted <= classical, (seed, d)


def test_sweep_smoke():
    reports = list(sweep(50))
    assert len(reports) > 500
    names = {rep.name for rep in reports}
    assert names >= {
        "macaulay_adjusted",
        "green_adjusted",
        "persistence_adjusted",
        "gasharov_macaulay",
        "gasharov_green",
        "gotzmann_regularity_adjusted",
    }
    assert not [rep for rep in reports if rep.verdict == VIOLATED]


def test_random_submodule_deterministic():
    assert random_submodule(7) == random_submodule(7)
    assert any(random_submodule(i) != random_submodule(0) for i in range(1, 10))


def test_report_json_line(two_free_lines):
    rep = check_macaulay_adjusted(two_free_lines, 1)
    data = json.loads(rep.to_json_line())
    assert data["name"] == "macaulay_adjusted"
    assert data["verdict"] == "sharp"
    assert data["bound_lhs"] == data["bound_rhs"] == 6
    assert data["premises_hold"] is True
    assert data["context"]["d"] == 1
    assert data["instance"]["degrees"] == [0, 0, 0]
