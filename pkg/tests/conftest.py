"""Shared fixtures: named example modules and the seeded random corpus."""
import random

import pytest

from gotzmann.combinatorics import binomial, green_transform, macaulay_transform
from gotzmann.monomial_algebra import (
    GradedFreeModule,
    Monomial,
    MonomialIdeal,
    MonomialSubmodule,
    monomial_from_string,
)
from gotzmann.numpoly import GotzmannRep, binomial_poly
from gotzmann.theorems import random_submodule

CORPUS_SIZE = 200


def ideal(n, *gens):
    """Monomial ideal from generator strings, e.g. ideal(2, "x0^2", "x0*x1")."""
    return MonomialIdeal(n, tuple(monomial_from_string(g, n) for g in gens))


def module(n, degrees, components):
    """Submodule from per-component specs: 'zero', 'unit', or a MonomialIdeal."""
    comps = []
    for c in components:
        if c == "zero":
            comps.append(MonomialIdeal.zero(n))
        elif c == "unit":
            comps.append(MonomialIdeal.unit(n))
        else:
            comps.append(c)
    return MonomialSubmodule(GradedFreeModule(n, tuple(degrees)), tuple(comps))


@pytest.fixture(scope="session")
def two_free_lines():
    """Quotient with two free rank-1 summands over a 2-variable ring:
    F = S^3 (degrees 0,0,0), N = S*e1."""
    return module(1, (0, 0, 0), ["unit", "zero", "zero"])


@pytest.fixture(scope="session")
def twisted_plane_pair():
    """Rank-2 quotient of a shifted free module over a 3-variable ring:
    F degrees (-1,-1,0), N = S*e3."""
    return module(2, (-1, -1, 0), ["zero", "zero", "unit"])


@pytest.fixture(scope="session")
def corpus():
    """The seeded random-submodule corpus used by the oracle suites."""
    return [random_submodule(seed) for seed in range(CORPUS_SIZE)]


def transform_tables(a_max, d_max):
    """Tabulated transforms for 0 <= a <= a_max, 1 <= d <= d_max.

    Returns (mac, grn) with mac[d][a] = macaulay_transform(a, d).
    """
    mac = {d: [macaulay_transform(a, d) for a in range(a_max + 1)] for d in range(1, d_max + 1)}
    grn = {d: [green_transform(a, d) for a in range(a_max + 1)] for d in range(1, d_max + 1)}
    return mac, grn


def random_rep(rng, max_len=12, max_val=5):
    """Random valid representation exponent list (non-increasing)."""
    length = rng.randint(0, max_len)
    vals = sorted((rng.randint(0, max_val) for _ in range(length)), reverse=True)
    return GotzmannRep(tuple(vals))


def sharpness_instance(seed):
    """Seeded admissible (poly, ambient, r) triple for the lex sharpness check.

    The middle degree f_{m-r} is pinned to 0 and the remainder is drawn as a
    representation with exponents <= n-1 so it is the Hilbert polynomial of a
    proper quotient of the polynomial ring; that keeps the constructed lex
    module nonzero and the check's premises satisfied.
    """
    rng = random.Random(seed)
    n = rng.randint(1, 3)
    r = rng.randint(1, 2)
    extra_low = rng.randint(0, 1)
    s_q = rng.randint(1, 5)
    low = sorted(rng.randint(-2, -1) for _ in range(extra_low)) + [0]
    high = sorted(rng.randint(0, min(2, s_q)) for _ in range(r))
    degrees = tuple(low + high)
    a = tuple(sorted((rng.randint(0, n - 1) for _ in range(s_q)), reverse=True))
    poly = GotzmannRep(a).polynomial()
    for f in high:
        poly = poly + binomial_poly(n, n - f)
    return poly, GradedFreeModule(n, degrees), r, s_q


def random_stable_ideal(seed, n_max=3, tries=50):
    """Seeded random stable ideal: close a few random monomials under the
    exchange moves x_j * (g / x_max) for j below the top variable."""
    rng = random.Random(seed)
    n = rng.randint(1, n_max)
    gens = []
    for _ in range(rng.randint(1, 3)):
        exps = [0] * (n + 1)
        for _ in range(rng.randint(1, 4)):
            exps[rng.randrange(n + 1)] += 1
        gens.append(Monomial(tuple(exps)))
    closed = set(gens)
    frontier = list(gens)
    for _ in range(tries):
        if not frontier:
            break
        g = frontier.pop()
        u = g.max_index()
        if u <= 0:
            continue
        shrunk = g.divide_var(u)
        for j in range(u):
            cand = shrunk.times_var(j)
            if not any(h.divides(cand) for h in closed):
                closed.add(cand)
                frontier.append(cand)
    return MonomialIdeal(n, tuple(closed))


def ideal_hs_numerator(ideal_obj):
    """Hilbert series numerator of S/I as a degree -> coefficient dict."""
    from gotzmann.monomial_algebra import hilbert_series

    shape = GradedFreeModule(ideal_obj.n, (0,))
    series = hilbert_series(MonomialSubmodule(shape, (ideal_obj,)))
    return {
        series.offset + k: c
        for k, c in enumerate(series.numerator)
        if c
    }


def betti_alternating_sum(table):
    """Signed column sums of a Betti table as a degree -> coefficient dict."""
    out = {}
    for i, j, v in table.entries:
        out[j] = out.get(j, 0) + (v if i % 2 == 0 else -v)
    return {j: c for j, c in out.items() if c}


def dims_binomial(n, d):
    return binomial(d + n, n)
