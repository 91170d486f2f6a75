"""First and second Chern classes out of a Hilbert polynomial.

For a rank-r sheaf on projective n-space the top three coefficients of the
Hilbert polynomial determine c1 and c2 through exact coefficient identities:

    coeff_n     = r / n!
    coeff_(n-1) = (c1 + r(n+1)/2) / (n-1)!
    coeff_(n-2) = ((c1^2 - 2 c2 + (n+1) c1)/2 + r(n+1)(3n+2)/24) / (n-2)!

Everything is exact rational arithmetic; the classes must come out integral,
otherwise the input triple (P, n, r) is rejected.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import factorial

from .errors import (
    InvariantViolated,
    NonIntegralChern,
    PreconditionViolated,
    RankMismatch,
)
from .numpoly import NumPoly, adjusted_gotzmann_rep, binomial_poly, poly_to_dict
from .theorems import HOLDS, SHARP, VIOLATED, CheckReport


@dataclass(frozen=True)
class ChernData:
    n: int
    r: int
    c1: int
    c2: int

    def to_dict(self) -> dict:
        return {"n": self.n, "r": self.r, "c1": self.c1, "c2": self.c2}


def chern_from_hilbert(poly: NumPoly, n: int, r: int) -> ChernData:
    """Extract (c1, c2) for a rank-r sheaf on projective n-space.

    Requires deg P = n with leading coefficient exactly r/n!; c1 and c2 must
    come out integral or the polynomial is not the Hilbert polynomial of any
    rank-r sheaf.
    """
    if n < 2:
        raise PreconditionViolated(f"need n >= 2 to see three coefficients, got {n}")
    if r < 1:
        raise PreconditionViolated(f"need positive rank, got {r}")
    if poly.degree != n:
        raise RankMismatch(f"polynomial degree {poly.degree} != n = {n}")
    if poly.coeffs[n] != Fraction(r, factorial(n)):
        raise RankMismatch(
            f"leading coefficient {poly.coeffs[n]} != r/n! = {Fraction(r, factorial(n))}"
        )
    coeff_n1 = poly.coeffs[n - 1]
    coeff_n2 = poly.coeffs[n - 2]
    c1 = coeff_n1 * factorial(n - 1) - Fraction(r * (n + 1), 2)
    if c1.denominator != 1:
        raise NonIntegralChern(f"c1 = {c1} is not an integer")
    reduced = coeff_n2 * factorial(n - 2) - Fraction(r * (n + 1) * (3 * n + 2), 24)
    c2 = (c1 * c1 + (n + 1) * c1 - 2 * reduced) / 2
    if c2.denominator != 1:
        raise NonIntegralChern(f"c2 = {c2} is not an integer")
    data = ChernData(n=n, r=r, c1=int(c1), c2=int(c2))
    # Substitute back: the two coefficient identities must hold exactly.
    back_n1 = Fraction(data.c1 + Fraction(r * (n + 1), 2), factorial(n - 1))
    back_n2 = Fraction(
        Fraction(data.c1**2 - 2 * data.c2 + (n + 1) * data.c1, 2)
        + Fraction(r * (n + 1) * (3 * n + 2), 24),
        factorial(n - 2),
    )
    if back_n1 != coeff_n1 or back_n2 != coeff_n2:
        raise InvariantViolated("Chern coefficient identities failed on re-substitution")
    return data


def twist_sum_polynomial(n: int, twists: list[int]) -> NumPoly:
    """Hilbert polynomial of a direct sum of twists of the structure sheaf on
    projective n-space: sum of C(d + n + a, n) over the twist list."""
    out = NumPoly()
    for a in twists:
        out = out + binomial_poly(n, n + a)
    return out


def check_chern_bound(
    poly: NumPoly,
    n: int,
    sheaf_rank: int,
    all_degrees: tuple[int, ...],
    module_rank: int,
) -> CheckReport:
    """c2 <= c1^2 for Hilbert polynomials passing the adjusted-representation
    admissibility gate with every ambient degree <= 0."""
    if all_degrees and max(all_degrees) > 0:
        raise PreconditionViolated(
            f"all ambient degrees must be <= 0, got max {max(all_degrees)}"
        )
    rep = adjusted_gotzmann_rep(poly, n, all_degrees, module_rank)
    data = chern_from_hilbert(poly, n, sheaf_rank)
    lhs = data.c2
    rhs = data.c1**2
    return CheckReport(
        name="chern_bound",
        instance={
            "poly": poly_to_dict(poly),
            "n": n,
            "sheaf_rank": sheaf_rank,
            "degrees": list(all_degrees),
            "module_rank": module_rank,
        },
        premises_hold=True,
        bound_lhs=lhs,
        bound_rhs=rhs,
        verdict=VIOLATED if lhs > rhs else (SHARP if lhs == rhs else HOLDS),
        context={"c1": data.c1, "c2": data.c2, "adjusted_number": rep.number},
    )


def sum_ij_identity(n: int) -> tuple[int, int]:
    """sum of i*j over 1 <= i < j <= n, by loop and by closed form."""
    if n < 1:
        raise PreconditionViolated(f"need n >= 1, got {n}")
    lhs = sum(i * j for i in range(1, n + 1) for j in range(i + 1, n + 1))
    rhs = (n - 1) * n * (n + 1) * (3 * n + 2) // 24
    if lhs != rhs:
        raise InvariantViolated(f"pair-sum identity failed at n = {n}: {lhs} != {rhs}")
    return lhs, rhs
