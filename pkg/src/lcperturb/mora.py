"""Standard bases in the localization at the origin, via Mora's normal form.

Everything here works over the local ring S_m, so "membership" and
"generators" always mean after inverting the elements with nonzero constant
term.  The ordering is the one baked into each ``FreeModule``'s packed keys.
"""

import heapq
from bisect import bisect_left
from functools import lru_cache

from . import kernels
from .poly import FIELD_BITS, AlgebraError, FreeModule, Poly, inverse


class _Elem:
    __slots__ = ("keys", "coefs", "lead", "ecart", "lcinv")

    def __init__(self, keys, coefs, ecart, p):
        self.keys = keys
        self.coefs = coefs
        self.lead = keys[0]
        self.ecart = ecart
        self.lcinv = inverse(coefs[0], p)


def _ecart(ring, graded, keys):
    ds = ring.deg_shift
    m = ring.field_mask
    lead_deg = (keys[0] >> ds) & m
    if graded:
        return ((keys[-1] >> ds) & m) - lead_deg
    return kernels.max_field(keys, ds, m) - lead_deg


class _Budget(Exception):
    """Raised when a computation exceeds its work allowance."""


class BudgetExceeded(AlgebraError):
    """A standard basis did not finish within the configured work allowance."""


class _Reducers:
    """Reducer set T for Mora's normal form, with cached leads and ecarts."""

    __slots__ = ("elems", "leads", "ecarts")

    def __init__(self, elems=()):
        self.elems = list(elems)
        self.leads = [t.lead for t in self.elems]
        self.ecarts = [t.ecart for t in self.elems]

    def append(self, e):
        self.elems.append(e)
        self.leads.append(e.lead)
        self.ecarts.append(e.ecart)

    def copy(self):
        out = _Reducers()
        out.elems = list(self.elems)
        out.leads = list(self.leads)
        out.ecarts = list(self.ecarts)
        return out


def _cut(keys, coefs, cut):
    if cut is None or not keys or keys[-1] < cut:
        return keys, coefs
    k = bisect_left(keys, cut)
    return keys[:k], coefs[:k]


def _wnf(ring, graded, keys, coefs, reducers, budget=None, cut=None):
    """Mora's weak normal form of a term list.

    ``reducers`` is a list of _Elem (copied) or a _Reducers set, which is
    extended in place so later calls can reuse the intermediate elements.
    ``budget`` is an optional one-element list of remaining term operations.
    ``cut`` drops every key >= cut; callers pass it only when all those terms
    lie in the submodule.
    """
    p = ring.p
    guard = ring.guard
    compmask = ring.compmask
    T = reducers if isinstance(reducers, _Reducers) else _Reducers(reducers)
    find = kernels.find_reducer
    axpy = kernels.axpy
    keys, coefs = _cut(keys, coefs, cut)
    while keys:
        lead = keys[0]
        idx = find(lead, T.leads, T.ecarts, guard, compmask)
        if idx < 0:
            break
        t = T.elems[idx]
        eh = _ecart(ring, graded, keys)
        if t.ecart > eh:
            T.append(_Elem(keys, coefs, eh, p))
        c = (p - coefs[0]) * t.lcinv % p
        keys, coefs = axpy(keys, coefs, t.keys, t.coefs, lead - t.lead, c, p)
        keys, coefs = _cut(keys, coefs, cut)
        if budget is not None:
            budget[0] -= len(keys) + len(t.keys)
            if budget[0] < 0:
                raise _Budget()
    return keys, coefs


def _corner_degree(ring, leads):
    """Smallest K with every degree-K monomial in <leads>, or None if not m-primary."""
    exps = [ring.exponents(k) for k in leads]
    n = ring.nvars
    pure = [None] * n
    for e in exps:
        support = [i for i in range(n) if e[i]]
        if len(support) == 1:
            i = support[0]
            if pure[i] is None or e[i] < pure[i]:
                pure[i] = e[i]
        elif not support:
            return 0
    if any(a is None for a in pure):
        return None
    lo = min(sum(e) for e in exps)
    hi = sum(a - 1 for a in pure) + 1
    for d in range(lo, hi + 1):
        if all(any(all(a <= b for a, b in zip(g, m)) for g in exps) for m in ring.monomials_of_degree(d)):
            return d
    return hi


def _to_elems(G):
    out = []
    for g in G:
        if g:
            ring = g.ring
            out.append(_Elem(g.keys, g.coefs, _ecart(ring, g.module.graded, g.keys), ring.p))
    return out


def weak_normal_form(f, G):
    """Weak normal form of ``f`` with respect to the elements ``G``.

    The result r satisfies u*f - r in <G> for a unit u, and no leading term of
    G divides the leading term of r.  For a standard basis G, r = 0 exactly
    when f lies in the submodule generated by G.
    """
    for g in G:
        if g.module != f.module:
            raise AlgebraError("weak_normal_form: elements live in different modules")
    keys, coefs = _wnf(f.ring, f.module.graded, list(f.keys), list(f.coefs), _to_elems(G))
    return Poly(f.module, keys, coefs)


def _lcm_key(ring, a, b):
    """Packed lcm of two keys with equal component; the offset part is shared."""
    mask = ring.field_mask
    key = 0
    deg = 0
    deg_a = 0
    for i in range(ring.nvars):
        ea = (a >> (FIELD_BITS * i)) & mask
        eb = (b >> (FIELD_BITS * i)) & mask
        e = ea if ea > eb else eb
        key |= e << (FIELD_BITS * i)
        deg += e
        deg_a += ea
    shift = ((a >> ring.deg_shift) & mask) - deg_a
    block = (a >> ring.block_shift) << ring.block_shift
    comp = a & (mask << ring.comp_shift)
    return block | ((deg + shift) << ring.deg_shift) | comp | key


def _divides(ring, a, b):
    if (a ^ b) & ring.compmask:
        return False
    g = ring.guard
    return ((b + g - a) & g) == g


class StandardBasis:
    """A minimal standard basis of a submodule of a free module.

    ``gens`` are monic and their leading terms minimally generate the leading
    module.  ``reduced`` records that minimality; tails are not interreduced,
    which is generally impossible in finitely many steps for local orderings.
    """

    def __init__(self, module, gens, unit=False):
        self.module = module
        self.gens = gens
        self.reduced = True
        self.unit = unit
        self._elems = None
        self._T = None
        self._corner = False

    def __len__(self):
        return len(self.gens)

    def __iter__(self):
        return iter(self.gens)

    def __repr__(self):
        return f"StandardBasis({[str(g) for g in self.gens]})"

    @property
    def elems(self):
        if self._elems is None:
            self._elems = _to_elems(self.gens)
        return self._elems

    @property
    def corner(self):
        """Degree K with m^K inside an m-primary ideal, else None."""
        if self._corner is False:
            m = self.module
            if m.rank != 1 or not m.graded or not self.gens:
                self._corner = None
            else:
                self._corner = _corner_degree(m.ring, [g.lead_key for g in self.gens])
        return self._corner

    def _cutkey(self):
        K = self.corner
        return None if K is None else K << self.module.ring.deg_shift

    def reduce(self, f):
        """Weak normal form; the reducer set is shared between calls."""
        if f.module != self.module:
            raise AlgebraError("element outside the ambient module")
        if self._T is None:
            self._T = _Reducers(self.elems)
        try:
            keys, coefs = _wnf(
                f.ring, self.module.graded, list(f.keys), list(f.coefs), self._T, [MORA_BUDGET], self._cutkey()
            )
        except _Budget:
            raise BudgetExceeded("normal form exceeded the work allowance") from None
        return Poly(f.module, keys, coefs)

    def contains(self, f):
        return not self.reduce(f)

    def canonical_generators(self):
        """Generators of the same submodule; for m-primary ideals the basis
        truncated below the corner with fully reduced tails."""
        cut = self._cutkey()
        if cut is None or self.unit:
            return list(self.gens)
        ring = self.module.ring
        p = ring.p
        out = []
        for g in self.gens:
            if g.lead_key >= cut:
                out.append(Poly(self.module, [g.lead_key], [1]))
                continue
            keys, coefs = _cut(list(g.keys), list(g.coefs), cut)
            others = [e for e in self.elems if e.lead != g.lead_key]
            i = 1
            while i < len(keys):
                idx = kernels.find_reducer(keys[i], [e.lead for e in others], [0] * len(others), ring.guard, ring.compmask)
                if idx < 0:
                    i += 1
                    continue
                t = others[idx]
                c = (p - coefs[i]) * t.lcinv % p
                keys, coefs = kernels.axpy(keys, coefs, t.keys, t.coefs, keys[i] - t.lead, c, p)
                keys, coefs = _cut(keys, coefs, cut)
            out.append(Poly(self.module, keys, coefs))
        return out

    def leading_module(self):
        return leading_module(self)

    def initial_forms(self):
        return [g.initial_form() for g in self.gens]


class LeadingModule:
    """Minimal monomial generators of a leading module, per component."""

    def __init__(self, module, gens):
        self.module = module
        # component -> sorted list of exponent tuples
        self.gens = {c: sorted(v) for c, v in gens.items() if v}

    def __repr__(self):
        return f"LeadingModule({self.gens})"

    def __eq__(self, other):
        return isinstance(other, LeadingModule) and self.module == other.module and self.gens == other.gens

    def __hash__(self):
        return hash((self.module, tuple(sorted((c, tuple(v)) for c, v in self.gens.items()))))

    def monomials(self, c=0):
        return list(self.gens.get(c, []))

    def all_monomials(self):
        return [(c, e) for c in sorted(self.gens) for e in self.gens[c]]

    def max_degree(self):
        shifts = self.module.shifts
        return max((sum(e) + shifts[c] for c, e in self.all_monomials()), default=0)

    def contains(self, c, exps):
        return any(all(a <= b for a, b in zip(m, exps)) for m in self.gens.get(c, []))


def minimalize_monomials(monos):
    """Drop exponent vectors divisible by another one in the list."""
    out = []
    for m in sorted(set(monos), key=sum):
        if not any(all(a <= b for a, b in zip(g, m)) for g in out):
            out.append(m)
    return sorted(out)


def leading_module(B):
    per = {}
    for g in B.gens:
        c, e = B.module.split_key(g.lead_key)
        per.setdefault(c, []).append(e)
    return LeadingModule(B.module, {c: minimalize_monomials(v) for c, v in per.items()})


def _spair(ring, a, b, L):
    p = ring.p
    keys, coefs = kernels.axpy([], [], a.keys, a.coefs, L - a.lead, a.lcinv, p)
    c = (p - b.lcinv) % p
    return kernels.axpy(keys, coefs, b.keys, b.coefs, L - b.lead, c, p)


def _coprime(ring, a, b):
    mask = ring.field_mask
    for i in range(ring.nvars):
        if (a >> (FIELD_BITS * i)) & mask and (b >> (FIELD_BITS * i)) & mask:
            return False
    return True


def _std_lazard(module, gens, budget=None):
    """Buchberger on the homogenizations in k[t, x], then dehomogenize.

    An element is held as (x-part, sugar D); its homogenization carries
    t^(D - deg) on each term, so the t-exponent of the leading term is
    ``ecart`` below.  The ordering on k[t, x] is global, which bounds the
    work; after t = 1 the leading terms generate the local leading module.
    """
    ring = module.ring
    p = ring.p
    ds = ring.deg_shift
    mask = ring.field_mask
    guard = ring.guard
    compmask = ring.compmask
    rank1 = module.rank == 1
    unit_check = rank1 and module.graded
    G = []
    leads = []
    texps = []
    queue = []  # (sugar, lcm key, tiebreak, i, j); i == -1 marks an input generator
    live = set()
    find = kernels.find_reducer
    axpy = kernels.axpy

    def deg(key):
        return (key >> ds) & mask

    def reduce(keys, coefs, D):
        while keys:
            lead = keys[0]
            idx = find(lead, leads, texps, guard, compmask)
            if idx < 0 or texps[idx] > D - deg(lead):
                break
            t = G[idx]
            c = (p - coefs[0]) * t.lcinv % p
            keys, coefs = axpy(keys, coefs, t.keys, t.coefs, lead - t.lead, c, p)
            if budget is not None:
                budget[0] -= len(keys) + len(t.keys)
                if budget[0] < 0:
                    raise _Budget()
        return keys, coefs

    def pair_lcm(i, j):
        L = _lcm_key(ring, G[i].lead, G[j].lead)
        return max(texps[i], texps[j]), L

    def hdivides(a, b):
        return a[0] <= b[0] and _divides(ring, a[1], b[1])

    def add(keys, coefs, D):
        e = _Elem(keys, coefs, D - deg(keys[0]), p)
        new = len(G)
        G.append(e)
        leads.append(e.lead)
        texps.append(e.ecart)
        cand = {}
        for i in range(new):
            if (G[i].lead ^ e.lead) & compmask:
                continue
            cand.setdefault(pair_lcm(i, new), i)
        lcms = list(cand)
        kept = []
        for H in lcms:
            if any(K != H and hdivides(K, H) for K in lcms):
                continue
            kept.append(H)
        stale = set()
        me = (e.ecart, e.lead)
        for (i, j) in live:
            H = pair_lcm(i, j)
            if not hdivides(me, H):
                continue
            if pair_lcm(i, new) != H and pair_lcm(j, new) != H:
                stale.add((i, j))
        live.difference_update(stale)
        for H in kept:
            i = cand[H]
            if rank1 and _coprime(ring, G[i].lead, e.lead) and min(texps[i], e.ecart) == 0:
                continue
            tex, L = H
            live.add((i, new))
            heapq.heappush(queue, (tex + deg(L), L, 1, i, new))

    for n, f in enumerate(gens):
        if f:
            heapq.heappush(queue, (kernels.max_field(f.keys, ds, mask), f.keys[0], 0, -1, n))

    while queue:
        D, _, _, i, j = heapq.heappop(queue)
        if i < 0:
            keys, coefs = list(gens[j].keys), list(gens[j].coefs)
        else:
            if (i, j) not in live:
                continue
            live.discard((i, j))
            keys, coefs = _spair(ring, G[i], G[j], _lcm_key(ring, G[i].lead, G[j].lead))
        keys, coefs = reduce(keys, coefs, D)
        if keys:
            if unit_check and deg(keys[0]) == 0:
                return [ring.one()], True
            add(keys, coefs, D)

    # dehomogenize
    return _minimal_monic(module, G), False


def _std_mora(module, gens, budget, modulo=None):
    """Mora's algorithm: Buchberger pairs, ecart-driven weak normal forms.

    The reducer set T persists across normal forms.  For ideals whose leading
    ideal becomes m-primary, every term past the highest corner is dropped.
    With ``modulo=C`` the computation is of I + m^C from the start.
    """
    ring = module.ring
    p = ring.p
    graded = module.graded
    ideal = module.rank == 1 and graded
    G = []
    T = _Reducers()
    pairs = []  # heap of (lcm, i, j)
    live = set()
    cut = [None if modulo is None else modulo << ring.deg_shift]

    def truncate_all(K):
        cut[0] = K << ring.deg_shift
        for i, e in enumerate(G):
            keys, coefs = _cut(e.keys, e.coefs, cut[0])
            if not keys:
                # the leading monomial itself lies in m^K, hence in the ideal
                keys, coefs = [e.lead], [1]
            G[i] = _Elem(keys, coefs, _ecart(ring, graded, keys), p)
        kept = []
        for e in T.elems:
            keys, coefs = _cut(e.keys, e.coefs, cut[0])
            if keys:
                kept.append(_Elem(keys, coefs, _ecart(ring, graded, keys), p))
        T.__init__(kept)
        for e in G:
            T.append(e)

    def add(keys, coefs):
        e = _Elem(keys, coefs, _ecart(ring, graded, keys), p)
        new = len(G)
        G.append(e)
        T.append(e)
        # Gebauer-Moeller without the product criterion, which fails for
        # local orderings (a tail term may be divisible by the leading term).
        cand = {}
        for i in range(new):
            if (G[i].lead ^ e.lead) & ring.compmask:
                continue
            L = _lcm_key(ring, G[i].lead, e.lead)
            cand.setdefault(L, i)
        lcms = sorted(cand)
        kept = []
        for L in lcms:
            if any(K != L and _divides(ring, K, L) for K in lcms):
                continue
            kept.append(L)
        stale = set()
        for (i, j) in live:
            L = _lcm_key(ring, G[i].lead, G[j].lead)
            if not _divides(ring, e.lead, L):
                continue
            if _lcm_key(ring, G[i].lead, e.lead) != L and _lcm_key(ring, G[j].lead, e.lead) != L:
                stale.add((i, j))
        live.difference_update(stale)
        for L in kept:
            i = cand[L]
            live.add((i, new))
            heapq.heappush(pairs, (L, i, new))
        if ideal:
            K = _corner_degree(ring, [g.lead for g in G])
            if K is not None and (cut[0] is None or K << ring.deg_shift < cut[0]):
                truncate_all(K)

    def unit(keys):
        return ideal and ring.key_degree(keys[0]) == 0

    for f in gens:
        if not f:
            continue
        keys, coefs = _wnf(ring, graded, list(f.keys), list(f.coefs), T, budget, cut[0])
        if keys:
            if unit(keys):
                return [ring.one()], True
            add(keys, coefs)

    while pairs:
        L, i, j = heapq.heappop(pairs)
        if (i, j) not in live:
            continue
        live.discard((i, j))
        if cut[0] is not None and L >= cut[0]:
            continue
        keys, coefs = _spair(ring, G[i], G[j], L)
        keys, coefs = _wnf(ring, graded, keys, coefs, T, budget, cut[0])
        if keys:
            if unit(keys):
                return [ring.one()], True
            add(keys, coefs)
    return _minimal_monic(module, G), False


def _minimal_monic(module, G):
    """Keep elements whose leading term no other kept one divides; make monic."""
    ring = module.ring
    p = ring.p
    chosen = []
    for e in sorted(G, key=lambda t: (t.lead, len(t.keys))):
        if any(_divides(ring, c.lead, e.lead) for c in chosen):
            continue
        chosen.append(e)
    out = []
    for e in chosen:
        inv = e.lcinv
        out.append(Poly(module, list(e.keys), [v * inv % p for v in e.coefs]))
    return out


# Work allowance for Mora before switching to the homogenized computation.
MORA_BUDGET = 400_000


# Truncation degrees tried when I may be m-primary, with the allowance for each.
CORNER_TRIALS = (8, 16, 32, 64)
CORNER_BUDGET = 4_000_000


# Work allowance for the homogenized fallback; past it BudgetExceeded is raised.
LAZARD_BUDGET = 20_000_000


def _std_corner(module, gens):
    """Standard basis of an ideal that turns out to be m-primary, or None.

    If the leading ideal of I + m^C already contains m^K for some K < C then
    m^K lies in I + m^(K+1), hence in I by Nakayama, so I + m^C = I.
    """
    for C in CORNER_TRIALS:
        try:
            out, unit = _std_mora(module, gens, [CORNER_BUDGET], modulo=C)
        except _Budget:
            return None
        if unit:
            return out, unit
        K = _corner_degree(module.ring, [g.lead_key for g in out])
        if K is not None and K < C:
            return out, unit
    return None


def _std(module, gens):
    try:
        return _std_mora(module, gens, [MORA_BUDGET])
    except _Budget:
        pass
    try:
        return _std_lazard(module, gens, [LAZARD_BUDGET])
    except _Budget:
        pass
    if module.rank == 1 and module.graded:
        found = _std_corner(module, gens)
        if found is not None:
            return found
    raise BudgetExceeded(f"standard basis of {len(gens)} generators exceeded the work allowance")


@lru_cache(maxsize=8192)
def _std_cached(module, gens):
    # failures are cached too, so a hopeless input is attempted once
    try:
        out, unit = _std(module, gens)
    except BudgetExceeded as exc:
        return exc
    return StandardBasis(module, list(out), unit=unit)


def std_basis(gens, module=None):
    """Minimal standard basis of the submodule generated by ``gens``."""
    gens = tuple(gens)
    if module is None:
        if not gens:
            raise AlgebraError("std_basis of an empty list needs an explicit module")
        module = gens[0].module
    for g in gens:
        if g.module != module:
            raise AlgebraError("std_basis: generators live in different modules")
    B = _std_cached(module, gens)
    if isinstance(B, BudgetExceeded):
        raise B
    return B


def initial_module_star(gens, module=None):
    """Homogeneous generators of the initial module N* of <gens> in gr(F)."""
    if module is None:
        module = gens[0].module
    if not module.graded:
        raise AlgebraError("initial modules need a degree-first ordering")
    return std_basis(gens, module).initial_forms()


def is_member(f, gens):
    gens = [g for g in gens if g]
    if not gens:
        return not f
    return std_basis(gens, f.module).contains(f)


def submodule_contains(big, small, module):
    """True when every element of ``small`` lies in <big>."""
    small = [g for g in small if g]
    if not small:
        return True
    big = [g for g in big if g]
    if not big:
        return False
    B = std_basis(big, module)
    return all(B.contains(g) for g in small)


def submodules_equal(A, B, module):
    return submodule_contains(A, B, module) and submodule_contains(B, A, module)


# -- syzygies -----------------------------------------------------------------


def syzygies(columns, module=None):
    """Generators of the kernel of S^m -> F sending e_j to ``columns[j]``.

    Computed as the part of a standard basis of {c_j + e_{r+j}} that lives in
    the elimination block S^m.  Returned vectors live in ``ring.free(m)``.
    """
    columns = list(columns)
    m = len(columns)
    if module is None:
        if not columns:
            raise AlgebraError("syzygies of an empty matrix need an explicit module")
        module = columns[0].module
    ring = module.ring
    target = ring.free(m)
    if m == 0:
        return []
    r = module.rank
    top = max(module.blocks, default=0) + 1
    E = FreeModule(ring, r + m, module.shifts + (0,) * m, module.blocks + (top,) * m)
    lifted = []
    for j, col in enumerate(columns):
        if col.module != module:
            raise AlgebraError("syzygies: columns live in different modules")
        v = module.embed(col, E)
        lifted.append(v + E.basis(r + j))
    B = std_basis(lifted, E)
    out = []
    for g in B.gens:
        if g.lead_component >= r:
            out.append(E.embed(g, target, offset=-r))
    return out


def prune_generators(gens, syz, candidates=None):
    """Drop generators made redundant by syzygies with a unit entry.

    ``syz`` generates the syzygies of ``gens``.  Each elimination keeps the
    invariant that the returned syzygies generate those of the returned
    generators, so the result is a minimal generating set over the local ring.
    Only the first ``candidates`` generators may be dropped (default: all).
    """
    gens = list(gens)
    if candidates is None:
        candidates = len(gens)
    rows = [s.entries() for s in syz]
    while True:
        pick = None
        for a, row in enumerate(rows):
            for i, f in enumerate(row[:candidates]):
                if f.is_unit():
                    pick = (a, i)
                    break
            if pick:
                break
        if pick is None:
            break
        a, i = pick
        z = rows[a]
        u = z[i]
        new_rows = []
        for b, w in enumerate(rows):
            if b == a:
                continue
            wi = w[i]
            if wi:
                w = [u * x - wi * y for x, y in zip(w, z)]
            w = w[:i] + w[i + 1:]
            if any(w):
                new_rows.append(w)
        rows = new_rows
        gens.pop(i)
        candidates -= 1
    if not gens:
        return [], []
    ring = gens[0].ring
    F = ring.free(len(gens))
    return gens, [F.vector(w) for w in rows]


def minimal_generators(gens, module=None):
    """A minimal generating set (over the local ring) drawn from ``gens``."""
    gens = [g for g in gens if g]
    if not gens:
        return []
    if module is None:
        module = gens[0].module
    out, _ = prune_generators(gens, syzygies(gens, module))
    return out


# -- colon and friends ----------------------------------------------------------


def colon(N, T, module=None):
    """Generators of the ideal {a in S : a*t in <N> for all t in T}."""
    T = [t for t in T if t]
    N = list(N)
    if module is None:
        module = (T or N)[0].module
    ring = module.ring
    if not T:
        return [ring.one()]
    m = len(T)
    r = module.rank
    if m == 1:
        F = module
        v = T[0]
        lifted = [g for g in N if g]
    else:
        F = FreeModule(ring, r * m, module.shifts * m)
        v = F.zero()
        for b, t in enumerate(T):
            v = v + module.embed(t, F, offset=b * r)
        lifted = [module.embed(g, F, offset=b * r) for b in range(m) for g in N if g]
    syz = syzygies([v] + lifted, F)
    out = [s.entry(0) for s in syz]
    out = [g for g in out if g]
    return out


def ideal_quotient_by_max(I, ring):
    return colon(I, ring.gens(), ring.S)


def saturation(I, ring):
    """(I : m^infinity) by iterated colon with the maximal ideal."""
    cur = [g for g in I if g]
    while True:
        nxt = colon(cur, ring.gens(), ring.S) if cur else []
        if not nxt:
            return cur
        if submodule_contains(cur, nxt, ring.S):
            return cur
        cur = std_basis(nxt, ring.S).gens


def annihilator_of_quotient(relations, module):
    """Ann(F/<relations>) as ideal generators: the colon <relations> : F."""
    basis = [module.basis(c) for c in range(module.rank)]
    return colon(relations, basis, module)


def congruent_mod_power(I, J, N, ring=None):
    """True iff I + m^N = J + m^N."""
    if ring is None:
        ring = (list(I) + list(J))[0].ring
    power = ring.max_ideal(N) if N > 0 else [ring.one()]
    left = list(I) + power
    right = list(J) + power
    return submodule_contains(left, J, ring.S) and submodule_contains(right, I, ring.S)


def ideals_equal(I, J, ring):
    return submodules_equal(list(I), list(J), ring.S)


def spair_check(B):
    """Re-check the standard-basis criterion: every S-vector reduces to zero."""
    ring = B.module.ring
    E = B.elems
    for a in range(len(E)):
        for b in range(a + 1, len(E)):
            if (E[a].lead ^ E[b].lead) & ring.compmask:
                continue
            L = _lcm_key(ring, E[a].lead, E[b].lead)
            keys, coefs = _spair(ring, E[a], E[b], L)
            keys, _ = _wnf(ring, B.module.graded, keys, coefs, E)
            if keys:
                return False
    return True
