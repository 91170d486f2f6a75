"""Executable checkers for the Hilbert-function bounds and regularity claims.

Each checker evaluates one inequality (or conditional equality) on a concrete
monomial submodule at a concrete degree and returns a CheckReport; verdicts
are "holds" (strict), "sharp" (equality), "violated" (the bound failed), or
"premise_fails" (a conditional statement whose premise did not hold).  A
"violated" verdict on valid input is always a bug somewhere: the test suite
treats it as failure.

The adjusted bounds peel off the free part of M = F/N over the r largest
ambient degrees (r = number of zero components) and apply the binomial
transform to the remainder rho at index d - f_low, where f_low is the
(m-r)-th degree; with r = 0 everything degrades to the classical bounds.
"""
from __future__ import annotations

import json
import random
from dataclasses import dataclass, field
from typing import Iterator

from .combinatorics import binomial, green_transform, macaulay_transform
from .errors import PreconditionViolated
from .monomial_algebra import (
    GradedFreeModule,
    Monomial,
    MonomialIdeal,
    MonomialSubmodule,
    adjusted_hf_decomposition,
    generic_hyperplane_hf,
    hf_direct,
    hilbert_polynomial,
    module_to_dict,
    rank,
    saturate,
)
from .numpoly import NumPoly, adjusted_gotzmann_rep, poly_to_dict
from .resolution import regularity

HOLDS = "holds"
SHARP = "sharp"
VIOLATED = "violated"
PREMISE_FAILS = "premise_fails"


@dataclass(frozen=True)
class CheckReport:
    name: str
    instance: dict
    premises_hold: bool
    bound_lhs: int | None
    bound_rhs: int | None
    verdict: str
    context: dict = field(default_factory=dict)

    def to_dict(self) -> dict:
        return {
            "name": self.name,
            "instance": self.instance,
            "premises_hold": self.premises_hold,
            "bound_lhs": self.bound_lhs,
            "bound_rhs": self.bound_rhs,
            "verdict": self.verdict,
            "context": self.context,
        }

    def to_json_line(self) -> str:
        return json.dumps(self.to_dict(), sort_keys=True, separators=(",", ":"))


def _compare(lhs: int, rhs: int) -> str:
    if lhs > rhs:
        return VIOLATED
    return SHARP if lhs == rhs else HOLDS


def f_low_degree(submodule: MonomialSubmodule) -> int:
    """The degree indexing the binomial transforms: f_{m-r}, or f_m when the
    free part exhausts the module (r = m)."""
    r = rank(submodule)
    m = len(submodule.degrees)
    return submodule.degrees[m - r - 1] if m - r >= 1 else submodule.degrees[-1]


def _free_tail_sum(submodule: MonomialSubmodule, d: int, n_for_dim: int) -> int:
    r = rank(submodule)
    tail = submodule.degrees[len(submodule.degrees) - r :]
    return sum(binomial(d - f + n_for_dim, n_for_dim) for f in tail)


def adjusted_macaulay_bound(submodule: MonomialSubmodule, d: int) -> int:
    """Upper bound for H(F/N, d+1): free part at d+1 plus the Macaulay
    transform of rho_d at index d - f_low."""
    n = submodule.n
    _, rho = adjusted_hf_decomposition(submodule, d)
    return _free_tail_sum(submodule, d + 1, n) + macaulay_transform(
        rho, d - f_low_degree(submodule)
    )


def check_macaulay_adjusted(submodule: MonomialSubmodule, d: int) -> CheckReport:
    """H(M, d+1) against the rank-and-degree adjusted Macaulay bound."""
    f_low = f_low_degree(submodule)
    if d < f_low + 1:
        raise PreconditionViolated(f"need d >= f_low + 1 = {f_low + 1}, got {d}")
    _, rho = adjusted_hf_decomposition(submodule, d)
    lhs = hf_direct(submodule, d + 1)
    rhs = adjusted_macaulay_bound(submodule, d)
    return CheckReport(
        name="macaulay_adjusted",
        instance=module_to_dict(submodule),
        premises_hold=True,
        bound_lhs=lhs,
        bound_rhs=rhs,
        verdict=_compare(lhs, rhs),
        context={"d": d, "rho": rho, "f_low": f_low, "rank": rank(submodule)},
    )


def check_green_adjusted(
    submodule: MonomialSubmodule, d: int, seed: int = 0, samples: int = 3
) -> CheckReport:
    """Generic hyperplane restriction against the adjusted Green bound."""
    n = submodule.n
    if n < 1:
        raise PreconditionViolated(f"need n >= 1, got {n}")
    f_low = f_low_degree(submodule)
    if d < f_low + 1:
        raise PreconditionViolated(f"need d >= f_low + 1 = {f_low + 1}, got {d}")
    _, rho = adjusted_hf_decomposition(submodule, d)
    lhs = generic_hyperplane_hf(submodule, d, samples=samples, seed=seed)
    rhs = _free_tail_sum(submodule, d, n - 1) + green_transform(
        rho, d - f_low
    )
    return CheckReport(
        name="green_adjusted",
        instance=module_to_dict(submodule),
        premises_hold=True,
        bound_lhs=lhs,
        bound_rhs=rhs,
        verdict=_compare(lhs, rhs),
        context={"d": d, "rho": rho, "f_low": f_low, "seed": seed, "samples": samples},
    )


def check_gasharov(
    submodule: MonomialSubmodule,
    d: int,
    p: int,
    which: str = "macaulay",
    seed: int = 0,
    samples: int = 3,
) -> CheckReport:
    """Classical growth and hyperplane bounds with transform index d - l - p,
    where l is the largest ambient degree."""
    if which not in ("macaulay", "green"):
        raise ValueError(f"which must be 'macaulay' or 'green', got {which!r}")
    if p < 0:
        raise PreconditionViolated(f"need p >= 0, got {p}")
    l = submodule.degrees[-1]
    if d < p + l + 1:
        raise PreconditionViolated(f"need d >= p + l + 1 = {p + l + 1}, got {d}")
    h_d = hf_direct(submodule, d)
    index = d - l - p
    if which == "macaulay":
        lhs = hf_direct(submodule, d + 1)
        rhs = macaulay_transform(h_d, index)
    else:
        lhs = generic_hyperplane_hf(submodule, d, samples=samples, seed=seed)
        rhs = green_transform(h_d, index)
    return CheckReport(
        name=f"gasharov_{which}",
        instance=module_to_dict(submodule),
        premises_hold=True,
        bound_lhs=lhs,
        bound_rhs=rhs,
        verdict=_compare(lhs, rhs),
        context={"d": d, "p": p, "l": l, "index": index, "seed": seed},
    )


def check_persistence_adjusted(
    submodule: MonomialSubmodule, d: int, horizon: int = 5
) -> CheckReport:
    """Once H(M, d+1) meets the adjusted Macaulay bound at d, it must keep
    meeting it at every later degree; checked out to d + horizon."""
    if horizon < 1:
        raise PreconditionViolated(f"need horizon >= 1, got {horizon}")
    max_gen = submodule.max_gen_degree()
    if max_gen is not None and max_gen > d:
        raise PreconditionViolated(
            f"submodule has a generator in degree {max_gen} > d = {d}"
        )
    f_low = f_low_degree(submodule)
    if d < f_low + 1:
        raise PreconditionViolated(f"need d >= f_low + 1 = {f_low + 1}, got {d}")
    instance = module_to_dict(submodule)
    premise = hf_direct(submodule, d + 1) == adjusted_macaulay_bound(submodule, d)
    if not premise:
        return CheckReport(
            name="persistence_adjusted",
            instance=instance,
            premises_hold=False,
            bound_lhs=hf_direct(submodule, d + 1),
            bound_rhs=adjusted_macaulay_bound(submodule, d),
            verdict=PREMISE_FAILS,
            context={"d": d, "horizon": horizon},
        )
    for e in range(d + 1, d + horizon + 1):
        lhs = hf_direct(submodule, e + 1)
        rhs = adjusted_macaulay_bound(submodule, e)
        if lhs != rhs:
            return CheckReport(
                name="persistence_adjusted",
                instance=instance,
                premises_hold=True,
                bound_lhs=lhs,
                bound_rhs=rhs,
                verdict=VIOLATED,
                context={"d": d, "horizon": horizon, "failed_at": e},
            )
    return CheckReport(
        name="persistence_adjusted",
        instance=instance,
        premises_hold=True,
        bound_lhs=lhs,
        bound_rhs=rhs,
        verdict=SHARP,
        context={"d": d, "horizon": horizon},
    )


def check_gotzmann_regularity_adjusted(submodule: MonomialSubmodule) -> CheckReport:
    """Regularity of the saturation against max(adjusted Gotzmann number, f_m).

    A zero saturation has no regularity; the bound is then vacuous and the
    verdict is "holds" with lhs None.
    """
    n = submodule.n
    degrees = submodule.degrees
    r = rank(submodule)
    poly = hilbert_polynomial(submodule)
    rep = adjusted_gotzmann_rep(poly, n, degrees, r)
    s = rep.number
    f_m = degrees[-1]
    rhs = max(s, f_m)
    instance = module_to_dict(submodule)
    saturated = saturate(submodule)
    if saturated.is_zero():
        return CheckReport(
            name="gotzmann_regularity_adjusted",
            instance=instance,
            premises_hold=True,
            bound_lhs=None,
            bound_rhs=rhs,
            verdict=HOLDS,
            context={"s": s, "f_m": f_m, "rank": r, "saturation_is_zero": True},
        )
    lhs = regularity(saturated, of="submodule")
    return CheckReport(
        name="gotzmann_regularity_adjusted",
        instance=instance,
        premises_hold=True,
        bound_lhs=lhs,
        bound_rhs=rhs,
        verdict=_compare(lhs, rhs),
        context={"s": s, "f_m": f_m, "rank": r},
    )


def check_sharpness(poly: NumPoly, ambient: GradedFreeModule, r: int) -> CheckReport:
    """The saturated lex module must attain regularity exactly s when
    f_{m-r} = 0 and s >= f_m."""
    from .lex import saturated_lex_module

    rep = adjusted_gotzmann_rep(poly, ambient.n, ambient.degrees, r)
    s = rep.number
    m = ambient.m
    if m - r < 1:
        raise PreconditionViolated("sharpness needs a non-free component (m - r >= 1)")
    f_mid = ambient.degrees[m - r - 1]
    if f_mid != 0:
        raise PreconditionViolated(f"sharpness hypothesis f_(m-r) = 0 fails: {f_mid}")
    f_m = ambient.degrees[-1]
    if s < f_m:
        raise PreconditionViolated(f"sharpness hypothesis s >= f_m fails: {s} < {f_m}")
    instance = {
        "poly": poly_to_dict(poly),
        "n": ambient.n,
        "degrees": list(ambient.degrees),
        "r": r,
    }
    lex_module = saturated_lex_module(poly, ambient, r)
    if lex_module.is_zero():
        return CheckReport(
            name="sharpness",
            instance=instance,
            premises_hold=False,
            bound_lhs=None,
            bound_rhs=s,
            verdict=PREMISE_FAILS,
            context={"s": s, "lex_module_is_zero": True},
        )
    reg = regularity(lex_module, of="submodule")
    return CheckReport(
        name="sharpness",
        instance=instance,
        premises_hold=True,
        bound_lhs=reg,
        bound_rhs=s,
        verdict=SHARP if reg == s else VIOLATED,
        context={"s": s, "f_m": f_m, "lex_module": module_to_dict(lex_module)},
    )


def random_submodule(
    seed: int,
    max_n: int = 3,
    max_m: int = 3,
    max_gens: int = 5,
    max_deg: int = 5,
) -> MonomialSubmodule:
    """Seeded random instance: n+1 variables (n <= max_n), m components with
    degrees in [-1, 1], each component zero, unit, or a random monomial ideal."""
    rng = random.Random(seed)
    n = rng.randint(1, max_n)
    m = rng.randint(1, max_m)
    degrees = tuple(sorted(rng.randint(-1, 1) for _ in range(m)))
    components = []
    for _ in range(m):
        roll = rng.random()
        if roll < 0.30:
            components.append(MonomialIdeal.zero(n))
        elif roll < 0.40:
            components.append(MonomialIdeal.unit(n))
        else:
            gens = []
            for _ in range(rng.randint(1, max_gens)):
                exps = [0] * (n + 1)
                for _ in range(rng.randint(1, max_deg)):
                    exps[rng.randrange(n + 1)] += 1
                gens.append(Monomial(tuple(exps)))
            components.append(MonomialIdeal(n, tuple(gens)))
    return MonomialSubmodule(GradedFreeModule(n, degrees), tuple(components))


def sweep(
    count: int,
    base_seed: int = 0,
    window: int = 6,
    horizon: int = 3,
    samples: int = 3,
) -> Iterator[CheckReport]:
    """Run every checker over `count` random instances and all valid degrees
    in a width-`window` band above each precondition threshold.

    Checkers whose preconditions cannot be met on an instance are skipped
    (conditional statements are vacuous there); everything that runs is
    reported.
    """
    for k in range(count):
        seed = base_seed + k
        submodule = random_submodule(seed)
        f_low = f_low_degree(submodule)
        l = submodule.degrees[-1]
        max_gen = submodule.max_gen_degree()
        for d in range(f_low + 1, f_low + 1 + window):
            yield check_macaulay_adjusted(submodule, d)
            yield check_green_adjusted(submodule, d, seed=seed, samples=samples)
            if max_gen is None or max_gen <= d:
                yield check_persistence_adjusted(submodule, d, horizon=horizon)
            for p in range(0, 3):
                if d >= p + l + 1:
                    yield check_gasharov(submodule, d, p, "macaulay")
                    yield check_gasharov(
                        submodule, d, p, "green", seed=seed, samples=samples
                    )
        if f_low <= 0:
            # f_low > 0 breaks the regularity statement's hypothesis; vacuous.
            yield check_gotzmann_regularity_adjusted(submodule)
