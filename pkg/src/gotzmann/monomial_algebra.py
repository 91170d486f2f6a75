"""Monomial ideals, graded free modules, and their monomial submodules.

Conventions used throughout:

* The ring is k[x_0, ..., x_n]; ``n`` always denotes the projective dimension,
  so there are n + 1 variables.
* A free module F = S(-f_1) + ... + S(-f_m) carries an ascending degree list
  f_1 <= ... <= f_m.  A monomial submodule N splits componentwise as
  N = I_1 e_1 + ... + I_m e_m.
* All Hilbert data (hf_direct, hilbert_series, hilbert_polynomial, ...) refers
  to the quotient module M = F/N.

Hilbert functions are computed two independent ways: direct monomial counting
and a pivot recursion on the series numerator; tests hold the two routes
against each other.
"""
from __future__ import annotations

import random
import re
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Sequence

from . import linalg
from .combinatorics import binomial
from .errors import BudgetExceeded, InvariantViolated, PreconditionViolated
from .numpoly import NumPoly, series_to_polynomial

DEFAULT_NODE_BUDGET = 10**4


@dataclass(frozen=True)
class Monomial:
    """Exponent vector in k[x_0..x_n]; the unit monomial has all exponents 0."""

    exponents: tuple[int, ...]

    def __post_init__(self) -> None:
        if not self.exponents:
            raise ValueError("monomial needs at least one variable")
        if any(e < 0 for e in self.exponents):
            raise ValueError(f"negative exponent in {self.exponents}")

    @property
    def degree(self) -> int:
        return sum(self.exponents)

    def divides(self, other: "Monomial") -> bool:
        return all(a <= b for a, b in zip(self.exponents, other.exponents))

    def lcm(self, other: "Monomial") -> "Monomial":
        return Monomial(tuple(max(a, b) for a, b in zip(self.exponents, other.exponents)))

    def times_var(self, v: int) -> "Monomial":
        e = list(self.exponents)
        e[v] += 1
        return Monomial(tuple(e))

    def divide_var(self, v: int) -> "Monomial":
        if self.exponents[v] == 0:
            return self
        e = list(self.exponents)
        e[v] -= 1
        return Monomial(tuple(e))

    def strip_var(self, v: int) -> "Monomial":
        e = list(self.exponents)
        e[v] = 0
        return Monomial(tuple(e))

    def max_index(self) -> int:
        """Largest variable index with positive exponent; -1 for the unit."""
        for v in range(len(self.exponents) - 1, -1, -1):
            if self.exponents[v]:
                return v
        return -1

    def __str__(self) -> str:
        if self.degree == 0:
            return "1"
        parts = []
        for v, e in enumerate(self.exponents):
            if e == 1:
                parts.append(f"x{v}")
            elif e > 1:
                parts.append(f"x{v}^{e}")
        return "*".join(parts)


_MONO_FACTOR = re.compile(r"^x(\d+)(?:\^(\d+))?$")


def monomial_from_string(text: str, n: int) -> Monomial:
    """Parse 'x0^2*x1' style strings; '1' is the unit monomial."""
    text = text.strip()
    exps = [0] * (n + 1)
    if text == "1":
        return Monomial(tuple(exps))
    for factor in text.split("*"):
        m = _MONO_FACTOR.match(factor.strip())
        if not m:
            raise ValueError(f"cannot parse monomial factor {factor!r}")
        v = int(m.group(1))
        if v > n:
            raise ValueError(f"variable x{v} out of range for n={n}")
        exps[v] += int(m.group(2) or 1)
    return Monomial(tuple(exps))


@lru_cache(maxsize=None)
def monomials_of_degree(n: int, d: int) -> tuple[Monomial, ...]:
    """All degree-d monomials in n+1 variables, descending in lex (x_0 > ... > x_n)."""
    if d < 0:
        return ()
    if n == 0:
        return (Monomial((d,)),)
    out = []
    for e0 in range(d, -1, -1):
        for tail in monomials_of_degree(n - 1, d - e0):
            out.append(Monomial((e0,) + tail.exponents))
    return tuple(out)


def monomial_at_rank(n: int, d: int, rank: int) -> Monomial:
    """The monomial at the given position of monomials_of_degree(n, d),
    computed directly so large degree lists never need materializing."""
    if d < 0:
        raise ValueError(f"no monomials of negative degree {d}")
    if rank < 0:
        raise ValueError(f"rank must be nonnegative, got {rank}")
    exps = []
    remaining = d
    for v in range(n):
        vars_after = n - v
        for t in range(remaining, -1, -1):
            block = binomial(remaining - t + vars_after - 1, vars_after - 1)
            if rank < block:
                exps.append(t)
                remaining -= t
                break
            rank -= block
        else:
            raise ValueError(f"rank out of range for degree {d} in {n + 1} variables")
    if rank:
        raise ValueError(f"rank out of range for degree {d} in {n + 1} variables")
    exps.append(remaining)
    return Monomial(tuple(exps))


def _minimalize(monos: Iterable[Monomial]) -> tuple[Monomial, ...]:
    by_degree = sorted(set(monos), key=lambda m: m.degree)
    kept: list[Monomial] = []
    for m in by_degree:
        if not any(g.divides(m) for g in kept):
            kept.append(m)
    kept.sort(key=lambda m: (m.degree, tuple(-e for e in m.exponents)))
    return tuple(kept)


@dataclass(frozen=True)
class MonomialIdeal:
    """Monomial ideal given by its minimal generators (canonicalized on build).

    The zero ideal has no generators; the unit ideal is generated by 1.
    """

    n: int
    gens: tuple[Monomial, ...]

    def __post_init__(self) -> None:
        if self.n < 0:
            raise ValueError(f"n must be nonnegative, got {self.n}")
        for g in self.gens:
            if len(g.exponents) != self.n + 1:
                raise ValueError(f"generator {g} does not live in {self.n + 1} variables")
        object.__setattr__(self, "gens", _minimalize(self.gens))

    @classmethod
    def zero(cls, n: int) -> "MonomialIdeal":
        return cls(n, ())

    @classmethod
    def unit(cls, n: int) -> "MonomialIdeal":
        return cls(n, (Monomial((0,) * (n + 1)),))

    def is_zero(self) -> bool:
        return not self.gens

    def is_unit(self) -> bool:
        return bool(self.gens) and self.gens[0].degree == 0

    def contains(self, m: Monomial) -> bool:
        return any(g.divides(m) for g in self.gens)

    def plus_gens(self, extra: Iterable[Monomial]) -> "MonomialIdeal":
        return MonomialIdeal(self.n, self.gens + tuple(extra))

    def colon_var_power(self, v: int) -> "MonomialIdeal":
        """I : x_v^infinity, obtained by deleting x_v from every generator."""
        return MonomialIdeal(self.n, tuple(g.strip_var(v) for g in self.gens))

    def intersect(self, other: "MonomialIdeal") -> "MonomialIdeal":
        gens = tuple(a.lcm(b) for a in self.gens for b in other.gens)
        return MonomialIdeal(self.n, gens)

    def saturation(self) -> "MonomialIdeal":
        """I : (x_0, ..., x_n)^infinity as the intersection of variable colons."""
        out = self.colon_var_power(0)
        for v in range(1, self.n + 1):
            out = out.intersect(self.colon_var_power(v))
        return out

    def max_gen_degree(self) -> int:
        if not self.gens:
            raise ValueError("zero ideal has no generators")
        return max(g.degree for g in self.gens)


@lru_cache(maxsize=None)
def quotient_basis(ideal: MonomialIdeal, e: int) -> tuple[Monomial, ...]:
    """Degree-e monomials outside the ideal (a k-basis of (S/I)_e), lex order."""
    return tuple(m for m in monomials_of_degree(ideal.n, e) if not ideal.contains(m))


def hf_quotient(ideal: MonomialIdeal, e: int) -> int:
    """dim_k (S/I)_e by direct counting."""
    return len(quotient_basis(ideal, e))


@dataclass(frozen=True)
class GradedFreeModule:
    """F = S(-f_1) + ... + S(-f_m) over k[x_0..x_n], degrees ascending."""

    n: int
    degrees: tuple[int, ...]

    def __post_init__(self) -> None:
        if self.n < 0:
            raise ValueError(f"n must be nonnegative, got {self.n}")
        if not self.degrees:
            raise ValueError("free module needs at least one generator")
        if list(self.degrees) != sorted(self.degrees):
            raise ValueError(f"degree list {self.degrees} must be ascending")

    @property
    def m(self) -> int:
        return len(self.degrees)

    def dim_at(self, d: int) -> int:
        return sum(binomial(d - f + self.n, self.n) for f in self.degrees)


@dataclass(frozen=True)
class MonomialSubmodule:
    """N = I_1 e_1 + ... + I_m e_m inside a graded free module."""

    ambient: GradedFreeModule
    components: tuple[MonomialIdeal, ...]

    def __post_init__(self) -> None:
        if len(self.components) != self.ambient.m:
            raise ValueError(
                f"{len(self.components)} components for rank-{self.ambient.m} ambient"
            )
        for ideal in self.components:
            if ideal.n != self.ambient.n:
                raise ValueError("component ring dimension differs from ambient")

    @property
    def n(self) -> int:
        return self.ambient.n

    @property
    def degrees(self) -> tuple[int, ...]:
        return self.ambient.degrees

    def is_zero(self) -> bool:
        return all(ideal.is_zero() for ideal in self.components)

    def max_gen_degree(self) -> int | None:
        """Largest degree of a minimal generator of N inside F (None if N = 0)."""
        degs = []
        for f, ideal in zip(self.degrees, self.components):
            if ideal.is_unit():
                degs.append(f)
            elif not ideal.is_zero():
                degs.append(ideal.max_gen_degree() + f)
        return max(degs) if degs else None


def rank(submodule: MonomialSubmodule) -> int:
    """Rank of M = F/N: the number of zero components of N."""
    return sum(1 for ideal in submodule.components if ideal.is_zero())


@lru_cache(maxsize=None)
def hf_direct(submodule: MonomialSubmodule, d: int) -> int:
    """H(F/N, d) by counting monomials outside each component."""
    return sum(
        hf_quotient(ideal, d - f)
        for f, ideal in zip(submodule.degrees, submodule.components)
    )


@dataclass(frozen=True)
class HilbertSeries:
    """Laurent numerator over (1-t)^(n+1): sum_j numerator[j] t^(offset+j)."""

    n: int
    offset: int
    numerator: tuple[int, ...]

    def hf(self, d: int) -> int:
        """Coefficient of t^d in the series expansion."""
        return sum(
            c * binomial(d - (self.offset + j) + self.n, self.n)
            for j, c in enumerate(self.numerator)
            if c
        )

    @property
    def max_exponent(self) -> int:
        top = self.offset
        for j, c in enumerate(self.numerator):
            if c:
                top = self.offset + j
        return top

    def to_dict(self) -> dict:
        return {
            "numerator": list(self.numerator),
            "offset": self.offset,
            "denominator_power": self.n + 1,
        }


def _series_numerator(gens: tuple[Monomial, ...], budget: list[int]) -> dict[int, int]:
    """Numerator of the Hilbert series of S/I over (1-t)^(n+1), as {exponent: coeff}.

    Splits on a pivot variable via S/I -> S/(I + (x)) and S/(I : x) shifted by
    t.  The pivot is the variable dividing the most generators (ties to the
    lowest index), which keeps the recursion tree small.
    """
    budget[0] -= 1
    if budget[0] < 0:
        raise BudgetExceeded("series pivot recursion exceeded its node budget")
    if not gens:
        return {0: 1}
    if gens[0].degree == 0:
        return {}
    # Pure-variable generators first: minimality means nothing else involves
    # those variables, so each one just multiplies the numerator by (1 - t).
    # This also makes the pivot split below strictly shrink total degree.
    linear = sum(1 for g in gens if g.degree == 1)
    if linear:
        out = dict(_series_numerator(tuple(g for g in gens if g.degree > 1), budget))
        for _ in range(linear):
            folded: dict[int, int] = {}
            for e, c in out.items():
                folded[e] = folded.get(e, 0) + c
                folded[e + 1] = folded.get(e + 1, 0) - c
            out = folded
        return {e: c for e, c in out.items() if c}
    if len(gens) == 1:
        return {0: 1, gens[0].degree: -1}
    nvars = len(gens[0].exponents)
    counts = [0] * nvars
    for g in gens:
        for v, e in enumerate(g.exponents):
            if e:
                counts[v] += 1
    pivot = max(range(nvars), key=lambda v: (counts[v], -v))
    x = Monomial(tuple(1 if v == pivot else 0 for v in range(nvars)))
    plus = _minimalize([g for g in gens if g.exponents[pivot] == 0] + [x])
    colon = _minimalize(g.divide_var(pivot) for g in gens)
    out = dict(_series_numerator(plus, budget))
    for e, c in _series_numerator(colon, budget).items():
        out[e + 1] = out.get(e + 1, 0) + c
    return {e: c for e, c in out.items() if c}


@lru_cache(maxsize=None)
def _ideal_numerator(ideal: MonomialIdeal, node_budget: int) -> tuple[tuple[int, int], ...]:
    budget = [node_budget]
    num = _series_numerator(ideal.gens, budget)
    return tuple(sorted(num.items()))


@lru_cache(maxsize=None)
def hilbert_series(
    submodule: MonomialSubmodule,
    verify: bool = True,
    node_budget: int = DEFAULT_NODE_BUDGET,
) -> HilbertSeries:
    """Hilbert series of F/N via the pivot recursion, shifted per component.

    With verify=True (the default) the expansion is replayed against
    hf_direct through deg(numerator) + n + 2, so a returned series is known
    to reproduce the Hilbert function on a window that pins it down.
    """
    n = submodule.n
    combined: dict[int, int] = {}
    for f, ideal in zip(submodule.degrees, submodule.components):
        for e, c in _ideal_numerator(ideal, node_budget):
            combined[e + f] = combined.get(e + f, 0) + c
    combined = {e: c for e, c in combined.items() if c}
    if combined:
        offset = min(combined)
        top = max(combined)
        numerator = tuple(combined.get(e, 0) for e in range(offset, top + 1))
    else:
        offset = 0
        numerator = ()
    series = HilbertSeries(n, offset, numerator)
    if verify:
        lo = min(offset, min(submodule.degrees))
        hi = series.max_exponent + n + 2
        for d in range(lo, hi + 1):
            if series.hf(d) != hf_direct(submodule, d):
                raise InvariantViolated(
                    f"series expansion disagrees with direct count at degree {d}"
                )
    return series


@lru_cache(maxsize=None)
def hilbert_polynomial(submodule: MonomialSubmodule) -> NumPoly:
    """Hilbert polynomial of F/N, read off the series numerator."""
    series = hilbert_series(submodule)
    return series_to_polynomial(series.numerator, submodule.n, series.offset)


@lru_cache(maxsize=None)
def stabilization_degree(submodule: MonomialSubmodule) -> int:
    """Least d0 with H(F/N, d) = P(d) for every d >= d0.

    Agreement is automatic for d >= E - n where E is the top numerator
    exponent (the combinatorial and polynomial binomials only differ below
    that), so scan downward from there.  For H identically zero the answer
    is degenerate and f_1 is returned.
    """
    series = hilbert_series(submodule)
    if not any(series.numerator):
        return submodule.degrees[0]
    poly = hilbert_polynomial(submodule)
    d0 = series.max_exponent - submodule.n
    floor = min(submodule.degrees[0], d0) - 2 * (submodule.n + 2)
    while d0 > floor:
        below = poly(d0 - 1)
        if below.denominator != 1 or int(below) != hf_direct(submodule, d0 - 1):
            return d0
        d0 -= 1
    raise InvariantViolated("stabilization scan ran past its safety floor")


def saturate(submodule: MonomialSubmodule) -> MonomialSubmodule:
    """Componentwise saturation I_i : (x_0..x_n)^infinity."""
    return MonomialSubmodule(
        submodule.ambient,
        tuple(ideal.saturation() for ideal in submodule.components),
    )


def adjusted_hf_decomposition(submodule: MonomialSubmodule, d: int) -> tuple[int, int]:
    """Split H(F/N, d) as (free_part, rho).

    The free part always uses the largest r degrees of the ambient module
    (r = rank of F/N), regardless of which components happen to be free:
    free_part = sum_{i=m-r+1}^{m} C(d - f_i + n, n).  For monomial submodules
    rho then satisfies 0 <= rho <= sum_{i=1}^{m-r} C(d - f_i + n, n); a
    violation would be a bug, not bad input.
    """
    n = submodule.n
    degrees = submodule.degrees
    m = len(degrees)
    r = rank(submodule)
    free_part = sum(binomial(d - f + n, n) for f in degrees[m - r :])
    rho = hf_direct(submodule, d) - free_part
    window = sum(binomial(d - f + n, n) for f in degrees[: m - r])
    if not 0 <= rho <= window:
        raise InvariantViolated(
            f"rho = {rho} escapes [0, {window}] at degree {d} for {submodule}"
        )
    return free_part, rho


@lru_cache(maxsize=None)
def _linear_section_dim(ideal: MonomialIdeal, e: int, coeffs: tuple[int, ...]) -> int:
    """dim_k (S/(I + hS))_e for h = sum coeffs[v] * x_v, exactly.

    Equals dim (S/I)_e minus the rank of multiplication by h from (S/I)_{e-1}
    to (S/I)_e; monomials inside I contribute nothing to either side.
    """
    n = ideal.n
    if e < 0 or ideal.is_unit():
        return 0
    if ideal.is_zero():
        # h is a nonzerodivisor on S, so S/hS has the series of n variables
        return binomial(e + n - 1, n - 1)
    target = quotient_basis(ideal, e)
    if e == 0 or not target:
        return len(target)
    source = quotient_basis(ideal, e - 1)
    if not source:
        return len(target)
    row_of = {mono: i for i, mono in enumerate(target)}
    rows = [[0] * len(source) for _ in target]
    for j, u in enumerate(source):
        for v in range(n + 1):
            if not coeffs[v]:
                continue
            i = row_of.get(u.times_var(v))
            if i is not None:
                rows[i][j] = coeffs[v]
    return len(target) - linalg.rank(rows)


def generic_hyperplane_hf(
    submodule: MonomialSubmodule,
    d: int,
    samples: int = 3,
    seed: int = 0,
) -> int:
    """dim_k (F/(N + hF))_d for a generic linear form h.

    Each sample draws h with integer coefficients in [-100, 100] (not all
    zero) and evaluates the dimension exactly; the minimum over samples is
    returned, since genericity minimizes the dimension by semicontinuity.
    """
    if submodule.n < 1:
        raise PreconditionViolated("hyperplane restriction needs n >= 1")
    if samples < 1:
        raise PreconditionViolated(f"samples must be positive, got {samples}")
    rng = random.Random(seed)
    best: int | None = None
    for _ in range(samples):
        coeffs = (0,)
        while not any(coeffs):
            coeffs = tuple(rng.randint(-100, 100) for _ in range(submodule.n + 1))
        total = sum(
            _linear_section_dim(ideal, d - f, coeffs)
            for f, ideal in zip(submodule.degrees, submodule.components)
        )
        best = total if best is None else min(best, total)
    assert best is not None
    return best


# ---------------------------------------------------------------------------
# JSON encodings shared with the CLI


def ideal_to_dict(ideal: MonomialIdeal) -> dict:
    if ideal.is_unit():
        return {"unit": True}
    return {"gens": [str(g) for g in ideal.gens]}


def ideal_from_dict(data: dict, n: int) -> MonomialIdeal:
    if data.get("unit"):
        return MonomialIdeal.unit(n)
    gens = data.get("gens", [])
    return MonomialIdeal(n, tuple(monomial_from_string(g, n) for g in gens))


def module_to_dict(submodule: MonomialSubmodule) -> dict:
    return {
        "n": submodule.n,
        "degrees": list(submodule.degrees),
        "components": [ideal_to_dict(ideal) for ideal in submodule.components],
    }


def module_from_dict(data: dict) -> MonomialSubmodule:
    try:
        n = int(data["n"])
        degrees = tuple(int(f) for f in data["degrees"])
    except (KeyError, TypeError, ValueError) as exc:
        raise ValueError(f"module JSON needs integer 'n' and 'degrees': {exc}") from exc
    ambient = GradedFreeModule(n, degrees)
    raw = data.get("components")
    if raw is None:
        raise ValueError("module JSON needs a 'components' list")
    if len(raw) != ambient.m:
        raise ValueError(
            f"'components' has {len(raw)} entries for {ambient.m} degrees"
        )
    comps = tuple(ideal_from_dict(c, n) for c in raw)
    return MonomialSubmodule(ambient, comps)
