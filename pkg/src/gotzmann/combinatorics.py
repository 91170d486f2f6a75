"""Binomial coefficients, Macaulay representations, and the two growth transforms.

Everything here is exact integer arithmetic; binomial coefficients use the
combinatorial convention C(k, j) = 0 for k < j, which is what makes graded
dimension counts vanish below their starting degree.
"""
from __future__ import annotations

from dataclasses import dataclass
from math import comb


def binomial(k: int, j: int) -> int:
    """C(k, j) with C(k, j) = 0 whenever k < j.  Requires j >= 0.

    In particular C(k, 0) = 1 for k >= 0 and 0 for k < 0.
    """
    if j < 0:
        raise ValueError(f"lower index must be nonnegative, got {j}")
    if k < j:
        return 0
    return comb(k, j)


@dataclass(frozen=True)
class MacaulayRep:
    """The unique expansion a = C(k_d, d) + C(k_{d-1}, d-1) + ... + C(k_delta, delta)

    with k_d > k_{d-1} > ... > k_delta >= delta >= 1.  ``terms`` lists the
    pairs (k_j, j) with j descending from d; it is empty exactly when a = 0.
    """

    d: int
    terms: tuple[tuple[int, int], ...]

    def __post_init__(self) -> None:
        if self.d < 1:
            raise ValueError(f"representation index must be >= 1, got {self.d}")
        prev_k = None
        expect_j = self.d
        for k, j in self.terms:
            if j != expect_j:
                raise ValueError(f"indices must descend consecutively from {self.d}")
            if k < j or j < 1:
                raise ValueError(f"term C({k}, {j}) violates k >= j >= 1")
            if prev_k is not None and k >= prev_k:
                raise ValueError("upper indices must strictly decrease")
            prev_k = k
            expect_j -= 1

    def value(self) -> int:
        return sum(binomial(k, j) for k, j in self.terms)


def macaulay_rep(a: int, d: int) -> MacaulayRep:
    """Greedy d-th Macaulay representation of a >= 0.

    Each step takes the largest k with C(k, j) <= remainder; the classical
    argument shows the indices strictly decrease and the remainder hits zero
    at index >= 1, so the loop below always terminates with a valid rep.
    """
    if a < 0:
        raise ValueError(f"a must be nonnegative, got {a}")
    if d < 1:
        raise ValueError(f"d must be positive, got {d}")
    terms: list[tuple[int, int]] = []
    rem = a
    j = d
    while rem > 0:
        k = j
        while binomial(k + 1, j) <= rem:
            k += 1
        terms.append((k, j))
        rem -= binomial(k, j)
        j -= 1
    return MacaulayRep(d, tuple(terms))


def macaulay_transform(a: int, d: int) -> int:
    """a^<d>: bump every C(k_j, j) in the d-th representation to C(k_j + 1, j + 1)."""
    rep = macaulay_rep(a, d)
    return sum(binomial(k + 1, j + 1) for k, j in rep.terms)


def green_transform(a: int, d: int) -> int:
    """a_<d>: lower every C(k_j, j) in the d-th representation to C(k_j - 1, j).

    Terms with k_j = j drop to zero under the C(k, j) = 0 (k < j) convention.
    """
    rep = macaulay_rep(a, d)
    return sum(binomial(k - 1, j) for k, j in rep.terms)
