"""Hilbert functions of leading data and the invariants read off them."""

import math
from fractions import Fraction
from functools import lru_cache
from math import comb

from .mora import LeadingModule, is_member, std_basis, syzygies, initial_module_star

INFINITE = math.inf


# -- integer polynomials in t, as coefficient lists ---------------------------


def _trim(a):
    while a and a[-1] == 0:
        a.pop()
    return a


def _add(a, b):
    n = max(len(a), len(b))
    return _trim([(a[i] if i < len(a) else 0) + (b[i] if i < len(b) else 0) for i in range(n)])


def _shift(a, k):
    return [0] * k + list(a) if a else []


def _mul(a, b):
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return _trim(out)


def _coprime_product(gens):
    out = [1]
    for g in gens:
        d = sum(g)
        factor = [1] + [0] * (d - 1) + [-1] if d else []
        out = _mul(out, factor)
    return out


def _minimal(gens):
    out = []
    for m in sorted(set(gens), key=sum):
        if not any(all(a <= b for a, b in zip(g, m)) for g in out):
            out.append(m)
    return out


@lru_cache(maxsize=65536)
def _numerator(gens):
    """Numerator Q of the Hilbert series Q(t)/(1-t)^n of S/(monomials)."""
    if not gens:
        return (1,)
    if any(sum(g) == 0 for g in gens):
        return ()
    n = len(gens[0])
    used = [0] * n
    for g in gens:
        for i, e in enumerate(g):
            if e:
                used[i] += 1
    if max(used) <= 1:
        return tuple(_coprime_product(gens))
    v = max(range(n), key=lambda i: used[i])
    e = min(g[v] for g in gens if g[v])
    pivot = tuple(e if i == v else 0 for i in range(n))
    plus = tuple(sorted(_minimal(list(gens) + [pivot])))
    quot = tuple(sorted(_minimal([tuple(max(a - b, 0) for a, b in zip(g, pivot)) for g in gens])))
    return tuple(_add(list(_numerator(plus)), _shift(_numerator(quot), e)))


def series_numerator(monomials, nvars):
    """Hilbert series numerator of S/(monomials) over (1-t)^nvars."""
    gens = tuple(sorted(_minimal([tuple(m) for m in monomials])))
    if gens and len(gens[0]) != nvars:
        raise ValueError("monomial length does not match the number of variables")
    return list(_numerator(gens))


class HilbertData:
    """An eventually polynomial Hilbert function, stored as a reduced series.

    The series is ``numerator(t) / (1 - t)^dim`` with ``numerator(1) != 0``
    (or numerator 0 for the zero module, where ``dim`` is 0 by convention).
    """

    def __init__(self, numerator, dim):
        self.numerator = list(numerator)
        self.dim = dim

    @classmethod
    def from_series(cls, numerator, nvars):
        q = _trim(list(numerator))
        dim = nvars
        while q and dim > 0 and sum(q) == 0:
            # divide by (1 - t): coefficients become prefix sums
            acc = 0
            r = []
            for c in q:
                acc += c
                r.append(acc)
            q = _trim(r)
            dim -= 1
        if not q:
            dim = 0
        return cls(q, dim)

    def __eq__(self, other):
        return isinstance(other, HilbertData) and self.numerator == other.numerator and self.dim == other.dim

    def __hash__(self):
        return hash((tuple(self.numerator), self.dim))

    def __repr__(self):
        return f"HilbertData(numerator={self.numerator}, dim={self.dim})"

    def is_zero(self):
        return not self.numerator

    def value(self, k):
        if k < 0:
            return 0
        if self.dim == 0:
            return self.numerator[k] if k < len(self.numerator) else 0
        d = self.dim
        return sum(h * comb(k - j + d - 1, d - 1) for j, h in enumerate(self.numerator) if k - j >= 0)

    def values(self, upto):
        """HF(0), ..., HF(upto)."""
        return [self.value(k) for k in range(upto + 1)]

    @property
    def tail_start(self):
        """First degree from which HF agrees with its Hilbert polynomial."""
        return max(0, len(self.numerator) - self.dim)

    def hilbert_polynomial(self):
        """Power-basis coefficients (Fractions) of the Hilbert polynomial."""
        d = self.dim
        if d == 0 or not self.numerator:
            return []
        # sample d points past the splice and interpolate
        xs = list(range(self.tail_start, self.tail_start + d))
        ys = [self.value(x) for x in xs]
        coeffs = [Fraction(0)] * d
        for i, xi in enumerate(xs):
            basis = [Fraction(1)]
            denom = Fraction(1)
            for j, xj in enumerate(xs):
                if j == i:
                    continue
                basis = [Fraction(0)] + basis
                for t in range(len(basis) - 1):
                    basis[t] -= xj * basis[t + 1]
                denom *= xi - xj
            for t in range(len(basis)):
                coeffs[t] += ys[i] * basis[t] / denom
        while coeffs and coeffs[-1] == 0:
            coeffs.pop()
        return coeffs

    @property
    def length(self):
        """Sum of all values when finite, else INFINITE."""
        if self.dim > 0:
            return INFINITE
        return sum(self.numerator)

    @property
    def multiplicity(self):
        return sum(self.numerator)

    def __sub__(self, other):
        """Difference of two Hilbert functions as a new HilbertData."""
        n = max(self.dim, other.dim)
        a = _mul(self.numerator, _power_one_minus_t(n - self.dim))
        b = _mul(other.numerator, _power_one_minus_t(n - other.dim))
        return HilbertData.from_series(_add(a, [-c for c in b]), n)


def _power_one_minus_t(k):
    out = [1]
    for _ in range(k):
        out = _mul(out, [1, -1])
    return out


def hilbert_function(L, shifts=None):
    """Hilbert function of F/L for a leading module L of a free module F."""
    module = L.module
    n = module.ring.nvars
    shifts = module.shifts if shifts is None else shifts
    total = []
    for c in range(module.rank):
        total = _add(total, _shift(series_numerator(L.monomials(c), n), shifts[c]))
    return HilbertData.from_series(total, n)


def quotient_hilbert(gens, module):
    """Hilbert function of gr(F)/N* for N = <gens> in F = ``module``."""
    gens = [g for g in gens if g]
    if not gens:
        return hilbert_function(LeadingModule(module, {}))
    return hilbert_function(std_basis(gens, module).leading_module())


def ideal_hilbert(gens, ring):
    """Hilbert function of the local ring S/I."""
    return quotient_hilbert(gens, ring.S)


def hf_equal(I, J, ring):
    return ideal_hilbert(I, ring) == ideal_hilbert(J, ring)


def module_hilbert(gens, module):
    """Hilbert function of gr_m(M) for M = <gens> with its own m-adic filtration."""
    gens = [g for g in gens if g]
    ring = module.ring
    if not gens:
        return HilbertData([], 0)
    syz = syzygies(gens, module)
    return quotient_hilbert(syz, ring.free(len(gens)))


def krull_dim(L):
    """Krull dimension of F/L; -infinity for the zero module."""
    hd = hilbert_function(L)
    if hd.is_zero():
        return -INFINITE
    return hd.dim


def finite_length(L):
    return hilbert_function(L).length


def min_graded_generators(star_gens):
    """Degrees of a minimal homogeneous generating set, ascending."""
    gens = sorted((g for g in star_gens if g), key=lambda g: (g.ord, g.keys))
    for g in gens:
        if not g.is_homogeneous():
            raise ValueError(f"not homogeneous: {g}")
    kept = []
    for g in gens:
        if not kept or not is_member(g, kept):
            kept.append(g)
    return [g.ord for g in kept]


def artin_rees(gens, module):
    """AR(m, N in F): top degree of a minimal homogeneous generating set of N*."""
    gens = [g for g in gens if g]
    if not gens:
        return 0
    degrees = min_graded_generators(initial_module_star(gens, module))
    return max(degrees, default=0)
