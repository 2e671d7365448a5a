"""Prime-field polynomials and free-module vectors under a local ordering.

Monomials are packed into a single integer whose natural ``<`` order is the
*reverse* of the monomial ordering, so term lists are stored with ascending
keys (leading term first).  From the most significant bit field down, a key
holds::

    block | degree (+ component shift) | component | e[n-1] | ... | e[0]

so a smaller total degree always wins (1 is the largest monomial), ties are
broken by component and then reverse-lexicographically.  Multiplying by a
monomial is integer addition and divisibility is one masked subtraction.
"""

import math
from itertools import combinations_with_replacement

from . import kernels

DEFAULT_PRIME = 32003
FIELD_BITS = 16
MAX_EXPONENT = (1 << (FIELD_BITS - 1)) - 1


class AlgebraError(ValueError):
    """Raised on structurally invalid algebraic input."""


def is_prime(p):
    if p < 2:
        return False
    if p % 2 == 0:
        return p == 2
    f = 3
    while f * f <= p:
        if p % f == 0:
            return False
        f += 2
    return True


def inverse(a, p):
    """Multiplicative inverse of ``a`` modulo the prime ``p``."""
    a %= p
    if a == 0:
        raise ZeroDivisionError("zero has no inverse")
    return pow(a, p - 2, p)


class Ring:
    """The polynomial ring k[x_1..x_n] over k = F_p, localized at (x_1..x_n)."""

    def __init__(self, variables, p=DEFAULT_PRIME):
        if isinstance(variables, int):
            variables = [f"x{i}" for i in range(variables)]
        variables = tuple(variables)
        if not variables:
            raise AlgebraError("a ring needs at least one variable")
        if len(set(variables)) != len(variables):
            raise AlgebraError("variable names must be unique")
        if p % 2 == 0 or not is_prime(p):
            raise AlgebraError(f"characteristic must be an odd prime, got {p}")
        self.names = variables
        self.nvars = len(variables)
        self.p = p
        W = FIELD_BITS
        n = self.nvars
        self.comp_shift = n * W
        self.deg_shift = (n + 1) * W
        self.block_shift = (n + 2) * W
        self.field_mask = (1 << W) - 1
        self.guard = sum(1 << (W * i + W - 1) for i in range(n + 3))
        self.compmask = (self.field_mask << self.comp_shift) | (self.field_mask << self.block_shift)
        self.S = FreeModule(self, 1)

    def __repr__(self):
        return f"Ring({list(self.names)!r}, p={self.p})"

    def __eq__(self, other):
        return isinstance(other, Ring) and self.names == other.names and self.p == other.p

    def __hash__(self):
        return hash((self.names, self.p))

    # -- monomials ---------------------------------------------------------

    def pack(self, exps):
        """Packed key of the monomial ``x^exps`` (component 0, no shift)."""
        if len(exps) != self.nvars:
            raise AlgebraError(f"expected {self.nvars} exponents, got {len(exps)}")
        key = 0
        deg = 0
        W = FIELD_BITS
        for i, e in enumerate(exps):
            if e < 0 or e > MAX_EXPONENT:
                raise AlgebraError(f"exponent {e} out of range")
            key |= e << (W * i)
            deg += e
        if deg > MAX_EXPONENT:
            raise AlgebraError("total degree too large")
        return key | (deg << self.deg_shift)

    def exponents(self, key):
        W = FIELD_BITS
        mask = self.field_mask
        return tuple((key >> (W * i)) & mask for i in range(self.nvars))

    def key_degree(self, key):
        return (key >> self.deg_shift) & self.field_mask

    def key_component(self, key):
        return (key >> self.comp_shift) & self.field_mask

    def monomials_of_degree(self, d):
        """All exponent vectors of total degree ``d``, in descending order."""
        out = []
        for combo in combinations_with_replacement(range(self.nvars), d):
            e = [0] * self.nvars
            for v in combo:
                e[v] += 1
            out.append(tuple(e))
        out.sort(key=self.pack)
        return out

    def free(self, rank, shifts=None):
        return FreeModule(self, rank, shifts)

    # -- elements ----------------------------------------------------------

    def zero(self):
        return Poly(self.S, [], [])

    def one(self):
        return self.const(1)

    def const(self, c):
        c %= self.p
        return Poly(self.S, [self.pack((0,) * self.nvars)], [c]) if c else self.zero()

    def var(self, i):
        if isinstance(i, str):
            i = self.names.index(i)
        e = [0] * self.nvars
        e[i] = 1
        return Poly(self.S, [self.pack(e)], [1])

    def gens(self):
        return [self.var(i) for i in range(self.nvars)]

    def monomial(self, exps, coef=1):
        coef %= self.p
        return Poly(self.S, [self.pack(exps)], [coef]) if coef else self.zero()

    def from_dict(self, terms):
        """Build a polynomial from ``{exponent tuple: coefficient}``."""
        return self.S.from_terms(((0, e), c) for e, c in terms.items())

    def max_ideal(self, power=1):
        """Monomial generators of the ``power``-th power of the maximal ideal."""
        return [self.monomial(e) for e in self.monomials_of_degree(power)]


class FreeModule:
    """A free module S^rank with per-component degree shifts.

    ``blocks`` groups components into elimination blocks: every term in a lower
    block is larger than every term in a higher block, regardless of degree.
    All components sit in block 0 unless stated otherwise.
    """

    def __init__(self, ring, rank, shifts=None, blocks=None):
        if rank < 0:
            raise AlgebraError("rank must be non-negative")
        self.ring = ring
        self.rank = rank
        self.shifts = tuple(shifts) if shifts is not None else (0,) * rank
        self.blocks = tuple(blocks) if blocks is not None else (0,) * rank
        if len(self.shifts) != rank or len(self.blocks) != rank:
            raise AlgebraError("shifts/blocks length must equal the rank")
        if any(s < 0 for s in self.shifts):
            raise AlgebraError("degree shifts must be non-negative")
        self._offset = tuple(
            (b << ring.block_shift) | (s << ring.deg_shift) | (c << ring.comp_shift)
            for c, (s, b) in enumerate(zip(self.shifts, self.blocks))
        )

    def __repr__(self):
        return f"FreeModule(rank={self.rank}, shifts={list(self.shifts)})"

    def __eq__(self, other):
        return (
            isinstance(other, FreeModule)
            and self.ring == other.ring
            and self.rank == other.rank
            and self.shifts == other.shifts
            and self.blocks == other.blocks
        )

    def __hash__(self):
        return hash((self.ring, self.rank, self.shifts, self.blocks))

    @property
    def graded(self):
        """True when the ordering is degree-first (no elimination blocks)."""
        return not any(self.blocks)

    def term_key(self, comp, exps):
        if not 0 <= comp < self.rank:
            raise AlgebraError(f"component {comp} outside rank {self.rank}")
        return self.ring.pack(exps) + self._offset[comp]

    def split_key(self, key):
        """Return (component, exponent tuple) for a packed term key."""
        ring = self.ring
        c = ring.key_component(key)
        return c, ring.exponents(key)

    def from_terms(self, terms):
        """Build an element from ``((component, exps), coefficient)`` pairs."""
        p = self.ring.p
        acc = {}
        for (c, e), v in terms:
            k = self.term_key(c, e)
            acc[k] = (acc.get(k, 0) + v) % p
        keys = sorted(k for k, v in acc.items() if v)
        return Poly(self, keys, [acc[k] for k in keys])

    def zero(self):
        return Poly(self, [], [])

    def basis(self, c):
        return Poly(self, [self._offset[c] + self.ring.pack((0,) * self.ring.nvars)], [1])

    def vector(self, entries):
        """Element with the given polynomial entries (a list of length rank)."""
        if len(entries) != self.rank:
            raise AlgebraError(f"expected {self.rank} entries, got {len(entries)}")
        keys = []
        coefs = []
        for c, f in enumerate(entries):
            if isinstance(f, int):
                f = self.ring.const(f)
            if f.module.rank != 1:
                raise AlgebraError("vector entries must be polynomials")
            off = self._offset[c]
            keys.extend(k + off for k in f.keys)
            coefs.extend(f.coefs)
        order = sorted(range(len(keys)), key=keys.__getitem__)
        return Poly(self, [keys[i] for i in order], [coefs[i] for i in order])

    def embed(self, f, target, offset=0):
        """Re-key ``f`` into ``target``, moving component c to c + offset."""
        ring = self.ring
        terms = []
        for k, v in zip(f.keys, f.coefs):
            c, e = self.split_key(k)
            terms.append(((c + offset, e), v))
        return target.from_terms(terms)


class Poly:
    """An element of a free module over the local ring; rank 1 is a polynomial.

    Instances are immutable.  ``keys`` are ascending packed keys (the leading
    term first) and ``coefs`` the matching nonzero residues.
    """

    __slots__ = ("module", "keys", "coefs", "_hash")

    def __init__(self, module, keys, coefs):
        self.module = module
        self.keys = keys
        self.coefs = coefs
        self._hash = None

    @property
    def ring(self):
        return self.module.ring

    def __bool__(self):
        return bool(self.keys)

    def is_zero(self):
        return not self.keys

    def __len__(self):
        return len(self.keys)

    def __eq__(self, other):
        if isinstance(other, int):
            other = self.ring.const(other)
        if not isinstance(other, Poly):
            return NotImplemented
        return self.module == other.module and self.keys == other.keys and self.coefs == other.coefs

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.module, tuple(self.keys), tuple(self.coefs)))
        return self._hash

    def __repr__(self):
        return f"Poly({self})"

    def __str__(self):
        return format_poly(self)

    # -- leading data ------------------------------------------------------

    @property
    def lead_key(self):
        if not self.keys:
            raise AlgebraError("the zero element has no leading term")
        return self.keys[0]

    @property
    def lead_coef(self):
        return self.coefs[0]

    @property
    def lead_component(self):
        return self.ring.key_component(self.lead_key)

    @property
    def lead_exponents(self):
        return self.ring.exponents(self.lead_key)

    def lead_term(self):
        return Poly(self.module, self.keys[:1], self.coefs[:1])

    def terms(self):
        """Iterate over (component, exponents, coefficient), leading term first."""
        split = self.module.split_key
        for k, v in zip(self.keys, self.coefs):
            c, e = split(k)
            yield c, e, v

    def term_degrees(self):
        ring = self.ring
        return [ring.key_degree(k) for k in self.keys]

    @property
    def ord(self):
        """Lowest (shifted) degree among the terms; infinity for zero."""
        if not self.keys:
            return math.inf
        if self.module.graded:
            return self.ring.key_degree(self.keys[0])
        return min(self.term_degrees())

    @property
    def degree(self):
        """Highest (shifted) degree among the terms; -infinity for zero."""
        if not self.keys:
            return -math.inf
        if self.module.graded:
            return self.ring.key_degree(self.keys[-1])
        return max(self.term_degrees())

    def is_homogeneous(self):
        return not self.keys or self.ord == self.degree

    # -- arithmetic --------------------------------------------------------

    def _check(self, other):
        if self.module != other.module:
            raise AlgebraError("elements live in different free modules")

    def __add__(self, other):
        if isinstance(other, int):
            other = self._scalar_const(other)
        self._check(other)
        k, c = kernels.axpy(self.keys, self.coefs, other.keys, other.coefs, 0, 1, self.ring.p)
        return Poly(self.module, k, c)

    __radd__ = __add__

    def __sub__(self, other):
        if isinstance(other, int):
            other = self._scalar_const(other)
        self._check(other)
        p = self.ring.p
        k, c = kernels.axpy(self.keys, self.coefs, other.keys, other.coefs, 0, p - 1, p)
        return Poly(self.module, k, c)

    def __rsub__(self, other):
        return (-self) + other

    def __neg__(self):
        p = self.ring.p
        return Poly(self.module, list(self.keys), [p - v for v in self.coefs])

    def _scalar_const(self, c):
        if self.module.rank != 1:
            raise AlgebraError("cannot add an integer to a vector")
        return self.ring.const(c)

    def scale(self, c):
        p = self.ring.p
        c %= p
        if c == 0:
            return self.module.zero()
        return Poly(self.module, list(self.keys), [v * c % p for v in self.coefs])

    def __mul__(self, other):
        if isinstance(other, int):
            return self.scale(other)
        if not isinstance(other, Poly):
            return NotImplemented
        if self.module.rank == 1 and self.module.graded and self.module.shifts == (0,):
            left, right = self, other
        elif other.module.rank == 1 and other.module.graded and other.module.shifts == (0,):
            left, right = other, self
        else:
            raise AlgebraError("can only multiply a vector by a polynomial")
        if left.ring != right.ring:
            raise AlgebraError("elements live in different rings")
        k, c = kernels.mul(left.keys, left.coefs, right.keys, right.coefs, self.ring.p)
        if k and right.ring.key_degree(k[-1]) > MAX_EXPONENT // 2:
            raise AlgebraError("total degree too large")
        return Poly(right.module, k, c)

    __rmul__ = __mul__

    def __pow__(self, n):
        if self.module.rank != 1 or n < 0:
            raise AlgebraError("only polynomials have non-negative powers")
        result = self.ring.one()
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def mul_term(self, exps, coef=1):
        """Multiply by the monomial ``coef * x^exps``."""
        shift = self.ring.pack(exps)
        p = self.ring.p
        coef %= p
        if coef == 0 or not self.keys:
            return self.module.zero()
        return Poly(self.module, [k + shift for k in self.keys], [v * coef % p for v in self.coefs])

    def monic(self):
        if not self.keys:
            return self
        return self.scale(inverse(self.coefs[0], self.ring.p))

    # -- filtration data ---------------------------------------------------

    def initial_form(self):
        """Homogeneous part of lowest (shifted) degree."""
        if not self.keys:
            raise AlgebraError("the zero element has no initial form")
        d = self.ord
        deg = self.ring.key_degree
        idx = [i for i, k in enumerate(self.keys) if deg(k) == d]
        return Poly(self.module, [self.keys[i] for i in idx], [self.coefs[i] for i in idx])

    def homogeneous_part(self, d):
        deg = self.ring.key_degree
        idx = [i for i, k in enumerate(self.keys) if deg(k) == d]
        return Poly(self.module, [self.keys[i] for i in idx], [self.coefs[i] for i in idx])

    def truncate(self, N):
        """Drop every term of (shifted) degree >= N, i.e. reduce modulo m^N."""
        deg = self.ring.key_degree
        idx = [i for i, k in enumerate(self.keys) if deg(k) < N]
        return Poly(self.module, [self.keys[i] for i in idx], [self.coefs[i] for i in idx])

    def is_unit(self):
        """A polynomial is a unit of the local ring iff its constant term is nonzero."""
        return self.module.rank == 1 and bool(self.keys) and self.ring.key_degree(self.keys[0]) == 0

    # -- vector views ------------------------------------------------------

    def entry(self, c):
        """The c-th coordinate as a polynomial."""
        ring = self.ring
        off = self.module._offset[c]
        keys = []
        coefs = []
        for k, v in zip(self.keys, self.coefs):
            if ring.key_component(k) == c:
                keys.append(k - off)
                coefs.append(v)
        order = sorted(range(len(keys)), key=keys.__getitem__)
        return Poly(ring.S, [keys[i] for i in order], [coefs[i] for i in order])

    def entries(self):
        return [self.entry(c) for c in range(self.module.rank)]

    def support_components(self):
        comp = self.ring.key_component
        return sorted({comp(k) for k in self.keys})


def cmp_monomials(ring, a, b):
    """Compare exponent vectors in the local ordering: -1, 0 or 1 (a < b, =, >)."""
    ka = ring.pack(a)
    kb = ring.pack(b)
    if ka == kb:
        return 0
    return 1 if ka < kb else -1


def signed(c, p):
    return c - p if c > p // 2 else c


def format_monomial(names, exps):
    parts = []
    for name, e in zip(names, exps):
        if e == 1:
            parts.append(name)
        elif e > 1:
            parts.append(f"{name}^{e}")
    return "*".join(parts)


def format_scalar_poly(ring, terms):
    if not terms:
        return "0"
    out = []
    for exps, c in terms:
        c = signed(c, ring.p)
        mono = format_monomial(ring.names, exps)
        neg = c < 0
        a = -c if neg else c
        if not mono:
            body = str(a)
        elif a == 1:
            body = mono
        else:
            body = f"{a}*{mono}"
        if not out:
            out.append(f"-{body}" if neg else body)
        else:
            out.append(f" - {body}" if neg else f" + {body}")
    return "".join(out)


def format_poly(f):
    ring = f.ring
    if f.module.rank == 1 and f.module.graded:
        return format_scalar_poly(ring, [(e, v) for _, e, v in f.terms()])
    rows = [[] for _ in range(f.module.rank)]
    for c, e, v in f.terms():
        rows[c].append((e, v))
    return "[" + ", ".join(format_scalar_poly(ring, r) for r in rows) + "]"
