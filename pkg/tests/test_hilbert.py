from math import comb

import oracles
from lcperturb.hilbert import (
    INFINITE,
    artin_rees,
    finite_length,
    hf_equal,
    hilbert_function,
    ideal_hilbert,
    krull_dim,
    min_graded_generators,
)
from lcperturb.mora import LeadingModule, leading_module, std_basis
from lcperturb.poly import Ring

R = Ring("xyz")
x, y, z = R.gens()
J5 = [x**2, x * y, y - z**5]


def monomial_module(ring, monos):
    return LeadingModule(ring.S, {0: monos})


def test_hilbert_of_monomial_ideals():
    assert hilbert_function(monomial_module(R, [(0, 1, 0), (2, 0, 0)])).values(6) == [1, 2, 2, 2, 2, 2, 2]
    full = hilbert_function(monomial_module(R, []))
    assert full.values(6) == [comb(t + 2, 2) for t in range(7)]
    L = monomial_module(R, [(0, 1, 0), (2, 0, 0), (1, 0, 5)])
    assert hilbert_function(L).values(8) == [1, 2, 2, 2, 2, 2, 1, 1, 1]


def test_hilbert_agrees_with_enumeration():
    # count standard monomials of (y, x^2, x z^5) by hand
    def standard(e):
        return not (e[1] >= 1 or e[0] >= 2 or (e[0] >= 1 and e[2] >= 5))

    counts = [sum(standard(e) for e in R.monomials_of_degree(d)) for d in range(9)]
    L = monomial_module(R, [(0, 1, 0), (2, 0, 0), (1, 0, 5)])
    assert hilbert_function(L).values(8) == counts


def test_hf_equal():
    I = [x**2, y]
    assert hf_equal(I, I, R)
    assert not hf_equal(I, J5, R)
    assert hf_equal(I, [x**2 + z**9, y + z**9], R)


def test_perturbed_pair_against_oracle():
    J = [x**2 + z**9, y + z**9]
    got = ideal_hilbert(J, R).values(8)
    assert got == oracles.hilbert_values([oracles.as_dict(g) for g in J], 3, R.p, 8)


def test_krull_dim():
    assert krull_dim(monomial_module(R, [(1, 0, 0), (0, 1, 0), (0, 0, 1)])) == 0
    assert krull_dim(monomial_module(R, [(0, 1, 0), (2, 0, 0)])) == 1
    R4 = Ring("xyzw")
    a, b, c, d = R4.gens()
    L = leading_module(std_basis([a * c, a * d, b * c, b * d], R4.S))
    assert krull_dim(L) == 2


def test_finite_length():
    S2 = Ring("xy")
    a, b = S2.gens()
    assert finite_length(leading_module(std_basis(S2.max_ideal(2), S2.S))) == 3
    assert finite_length(monomial_module(R, [(0, 1, 0), (2, 0, 0)])) == INFINITE
    assert finite_length(monomial_module(R, [(0, 0, 0)])) == 0


def test_min_graded_generators():
    assert min_graded_generators([y, x**2]) == [1, 2]
    assert min_graded_generators([y, x * y]) == [1]
    assert min_graded_generators([y, x**2, x * z**5]) == [1, 2, 6]


def test_artin_rees_numbers():
    S2 = Ring("xy")
    a, b = S2.gens()
    assert artin_rees([b - a**2], S2.S) == 1
    assert artin_rees([a**2 - b**3], S2.S) == 2
    assert artin_rees(J5, R.S) == 6
    assert artin_rees([], R.S) == 0


def test_hilbert_polynomial_and_multiplicity():
    hd = ideal_hilbert(J5, R)
    assert hd.dim == 1 and hd.multiplicity == 1
    assert hd.tail_start == 6
    assert ideal_hilbert([x**2, y], R).multiplicity == 2
