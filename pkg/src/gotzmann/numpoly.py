"""Exact rational polynomials in one variable and their binomial-basis forms.

A numerical polynomial takes integer values at all integers; those are the
polynomials that arise as Hilbert polynomials.  This module provides the
dense-coefficient arithmetic plus the two canonical decompositions used
throughout the package: the plain Gotzmann representation

    P(d) = sum_i C(d + a_i - (i-1), a_i),   a_1 >= a_2 >= ... >= a_s >= 0,

and the rank-and-degree adjusted representation that first strips off the
free summands C(d - f_i + n, n) before representing the remainder.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Sequence, Union

from .combinatorics import binomial
from .errors import NotAdmissible, PreconditionViolated

Scalar = Union[int, Fraction]

DEFAULT_TERM_BUDGET = 10**6


class NumPoly:
    """Polynomial with exact Fraction coefficients, lowest degree first.

    The zero polynomial is represented by an empty coefficient tuple and has
    degree -1 by convention.
    """

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable[Scalar] = ()):
        cs = [Fraction(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        self.coeffs: tuple[Fraction, ...] = tuple(cs)

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    @property
    def leading_coefficient(self) -> Fraction:
        return self.coeffs[-1] if self.coeffs else Fraction(0)

    def is_zero(self) -> bool:
        return not self.coeffs

    def __call__(self, d: Scalar) -> Fraction:
        acc = Fraction(0)
        for c in reversed(self.coeffs):
            acc = acc * d + c
        return acc

    def __add__(self, other: "NumPoly | Scalar") -> "NumPoly":
        other = _as_poly(other)
        n = max(len(self.coeffs), len(other.coeffs))
        return NumPoly(
            (self.coeffs[i] if i < len(self.coeffs) else 0)
            + (other.coeffs[i] if i < len(other.coeffs) else 0)
            for i in range(n)
        )

    def __radd__(self, other: Scalar) -> "NumPoly":
        return self + other

    def __neg__(self) -> "NumPoly":
        return NumPoly(-c for c in self.coeffs)

    def __sub__(self, other: "NumPoly | Scalar") -> "NumPoly":
        return self + (-_as_poly(other))

    def __rsub__(self, other: Scalar) -> "NumPoly":
        return _as_poly(other) - self

    def __mul__(self, other: "NumPoly | Scalar") -> "NumPoly":
        other = _as_poly(other)
        if self.is_zero() or other.is_zero():
            return NumPoly()
        out = [Fraction(0)] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            for j, b in enumerate(other.coeffs):
                out[i + j] += a * b
        return NumPoly(out)

    def __rmul__(self, other: Scalar) -> "NumPoly":
        return self * other

    def __eq__(self, other: object) -> bool:
        if isinstance(other, (int, Fraction)):
            other = NumPoly([other])
        if not isinstance(other, NumPoly):
            return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self) -> int:
        return hash(self.coeffs)

    def shift_argument(self, k: int) -> "NumPoly":
        """Return the polynomial d -> P(d + k)."""
        acc = NumPoly()
        x_plus_k = NumPoly([k, 1])
        for c in reversed(self.coeffs):
            acc = acc * x_plus_k + c
        return acc

    def is_integer_valued(self) -> bool:
        """True iff P maps integers to integers.

        A degree-e polynomial is integer-valued iff it is at e+1 consecutive
        integers, so checking 0..e suffices.
        """
        return all(self(d).denominator == 1 for d in range(len(self.coeffs) + 1))

    def __repr__(self) -> str:
        if not self.coeffs:
            return "NumPoly(0)"
        parts = []
        for i in range(self.degree, -1, -1):
            c = self.coeffs[i]
            if c == 0:
                continue
            if i == 0:
                parts.append(str(c))
            elif i == 1:
                parts.append(f"{c}*d" if c != 1 else "d")
            else:
                parts.append(f"{c}*d^{i}" if c != 1 else f"d^{i}")
        return "NumPoly(" + " + ".join(parts) + ")"


def _as_poly(x: "NumPoly | Scalar") -> NumPoly:
    return x if isinstance(x, NumPoly) else NumPoly([x])


def binomial_poly(a: int, shift: int) -> NumPoly:
    """The degree-a numerical polynomial C(d + shift, a).

    Expanded exactly as (d + shift)(d + shift - 1)...(d + shift - a + 1) / a!.
    """
    if a < 0:
        raise ValueError(f"binomial degree must be nonnegative, got {a}")
    poly = NumPoly([1])
    for t in range(a):
        poly = poly * NumPoly([shift - t, 1])
    fact = 1
    for t in range(2, a + 1):
        fact *= t
    return poly * Fraction(1, fact)


@dataclass(frozen=True)
class GotzmannRep:
    """Non-increasing exponent list a_1 >= ... >= a_s >= 0 with

    P(d) = sum_{i=1}^{s} C(d + a_i - (i-1), a_i).

    ``number`` (the length s) is the Gotzmann number of the represented
    polynomial.  The empty list represents the zero polynomial.
    """

    a: tuple[int, ...]

    def __post_init__(self) -> None:
        prev = None
        for ai in self.a:
            if ai < 0:
                raise ValueError(f"exponents must be nonnegative, got {ai}")
            if prev is not None and ai > prev:
                raise ValueError("exponent list must be non-increasing")
            prev = ai

    @property
    def number(self) -> int:
        return len(self.a)

    def terms(self) -> list[tuple[int, int]]:
        """(a_i, shift_i) pairs so that term i is C(d + shift_i, a_i)."""
        return [(ai, ai - i) for i, ai in enumerate(self.a)]

    def polynomial(self) -> NumPoly:
        out = NumPoly()
        for ai, shift in self.terms():
            out = out + binomial_poly(ai, shift)
        return out


def gotzmann_rep(poly: NumPoly, term_budget: int = DEFAULT_TERM_BUDGET) -> GotzmannRep:
    """Greedy peeling of the Gotzmann representation of ``poly``.

    At step i (0-based) the remainder must have nonnegative leading
    coefficient; we peel C(d + a - i, a) with a = deg(remainder) (a = 0 once
    the remainder is a positive constant).  Raises NotAdmissible when no
    representation exists: non-numerical input, a negative leading
    coefficient, or a negative constant left at the end.  ``term_budget``
    caps s, which is reached by large constant tails.
    """
    if not poly.is_integer_valued():
        raise NotAdmissible(f"{poly!r} is not integer-valued")
    a_list: list[int] = []
    rem = poly
    i = 0
    while not rem.is_zero():
        lead = rem.leading_coefficient
        if lead < 0:
            raise NotAdmissible(
                f"remainder {rem!r} has negative leading coefficient at term {i}"
            )
        if rem.degree == 0:
            # integer constant tail: each remaining term is C(d - i, 0) = 1
            c = int(lead)
            if i + c > term_budget:
                raise NotAdmissible(
                    f"representation needs more than {term_budget} terms"
                )
            a_list.extend([0] * c)
            break
        a = rem.degree
        if a_list and a > a_list[-1]:
            # cannot happen with greedy-by-degree peeling; guards the invariant
            raise NotAdmissible("exponent sequence would increase")
        if i >= term_budget:
            raise NotAdmissible(f"representation needs more than {term_budget} terms")
        rem = rem - binomial_poly(a, a - i)
        a_list.append(a)
        i += 1
    return GotzmannRep(tuple(a_list))


def gotzmann_number(poly: NumPoly, term_budget: int = DEFAULT_TERM_BUDGET) -> int:
    """Length of the Gotzmann representation (0 for the zero polynomial)."""
    return gotzmann_rep(poly, term_budget).number


@dataclass(frozen=True)
class AdjustedGotzmannRep:
    """P(d) = sum_{f in free_degrees} C(d - f + n, n) + Q(d) with Q represented
    by ``q``.  ``number`` is the adjusted Gotzmann number, i.e. len(q.a).
    """

    free_degrees: tuple[int, ...]
    n: int
    q: GotzmannRep

    @property
    def number(self) -> int:
        return self.q.number

    def free_part(self) -> NumPoly:
        out = NumPoly()
        for f in self.free_degrees:
            out = out + binomial_poly(self.n, self.n - f)
        return out

    def polynomial(self) -> NumPoly:
        return self.free_part() + self.q.polynomial()


def adjusted_gotzmann_rep(
    poly: NumPoly,
    n: int,
    all_degrees: Sequence[int],
    r: int,
    term_budget: int = DEFAULT_TERM_BUDGET,
) -> AdjustedGotzmannRep:
    """Rank-and-degree adjusted representation of ``poly``.

    ``all_degrees`` is the full ascending degree list f_1 <= ... <= f_m of the
    ambient free module; the last r of them form the free part.  The
    hypothesis f_{m-r} <= 0 is enforced whenever m - r >= 1; r = 0 degrades
    to the plain representation (with the classical f_m <= 0 hypothesis).
    """
    if n < 0:
        raise PreconditionViolated(f"n must be nonnegative, got {n}")
    m = len(all_degrees)
    if not 0 <= r <= m:
        raise PreconditionViolated(f"rank r={r} must lie in [0, {m}]")
    if list(all_degrees) != sorted(all_degrees):
        raise PreconditionViolated("degree list must be sorted ascending")
    if m - r >= 1 and all_degrees[m - r - 1] > 0:
        raise PreconditionViolated(
            f"degree f_{m - r} = {all_degrees[m - r - 1]} must be <= 0"
        )
    free = tuple(all_degrees[m - r :])
    q_poly = poly
    for f in free:
        q_poly = q_poly - binomial_poly(n, n - f)
    q = gotzmann_rep(q_poly, term_budget)
    return AdjustedGotzmannRep(free, n, q)


@dataclass(frozen=True)
class EmbeddingDims:
    """Dimension data of the degree-s embedding of a Quot-type parameter space."""

    s: int
    ambient_dim: int
    sub_dim: int
    grass_dim: int = field(init=False)

    def __post_init__(self) -> None:
        object.__setattr__(self, "grass_dim", self.sub_dim * (self.ambient_dim - self.sub_dim))


def grassmannian_embedding_dims(
    poly: NumPoly,
    n: int,
    all_degrees: Sequence[int],
    r: int,
    mode: str = "adjusted",
) -> EmbeddingDims:
    """Sizes of the Grassmannian that receives the degree-s truncation embedding.

    s is the plain Gotzmann number (mode="standard") or the adjusted one
    (mode="adjusted"); the ambient dimension is dim F_s = sum_i C(s - f_i + n, n)
    and the subspace dimension is P(s).
    """
    if mode == "standard":
        s = gotzmann_number(poly)
    elif mode == "adjusted":
        s = adjusted_gotzmann_rep(poly, n, all_degrees, r).number
    else:
        raise ValueError(f"mode must be 'standard' or 'adjusted', got {mode!r}")
    ambient = sum(binomial(s - f + n, n) for f in all_degrees)
    sub = poly(s)
    if sub.denominator != 1:
        raise ValueError(f"P({s}) = {sub} is not an integer")
    sub = int(sub)
    if not 0 <= sub <= ambient:
        raise ValueError(
            f"P({s}) = {sub} must lie in [0, dim F_{s} = {ambient}]"
        )
    return EmbeddingDims(s, ambient, sub)


def series_to_polynomial(numerator: Sequence[int], n: int, offset: int = 0) -> NumPoly:
    """Polynomial form of sum_j numerator[j] * t^(offset+j) / (1-t)^(n+1).

    Each numerator term c * t^e contributes c * C(d - e + n, n) for large d,
    and that binomial is taken here as a polynomial identity in d.
    """
    if n < 0:
        raise ValueError(f"n must be nonnegative, got {n}")
    out = NumPoly()
    for j, c in enumerate(numerator):
        if c:
            out = out + c * binomial_poly(n, n - offset - j)
    return out


def poly_to_dict(poly: NumPoly) -> dict:
    """Coefficient-list JSON form; rationals as exact "p/q" strings."""
    return {"coeffs": [str(c) for c in poly.coeffs]}


def poly_from_dict(data: dict) -> NumPoly:
    """Parse {"coeffs": [...]} or {"terms": [{"a":, "shift":, "mult":}, ...]}.

    Coefficient entries may be integers or "p/q" strings; term lists build
    sum mult * C(d + shift, a) exactly.
    """
    if not isinstance(data, dict):
        raise ValueError(f"polynomial JSON must be an object, got {type(data).__name__}")
    if "coeffs" in data:
        try:
            return NumPoly(Fraction(str(c)) for c in data["coeffs"])
        except (ValueError, ZeroDivisionError) as exc:
            raise ValueError(f"bad entry in 'coeffs': {exc}") from None
    if "terms" in data:
        out = NumPoly()
        for k, term in enumerate(data["terms"]):
            missing = {"a", "shift"} - set(term)
            if missing:
                raise ValueError(f"terms[{k}] missing field {sorted(missing)}")
            mult = Fraction(str(term.get("mult", 1)))
            out = out + mult * binomial_poly(int(term["a"]), int(term["shift"]))
        return out
    raise ValueError("polynomial JSON needs a 'coeffs' or 'terms' field")
