"""Local cohomology of S/I through its Matlis dual Ext_S^{d-i}(S/I, S).

Ext modules are cohomology of the dualized minimal resolution and are held as
subquotients ker/im of free modules.  Lengths and annihilators are preserved by
Matlis duality, so every invariant here is a statement about H^i_m(S/I).
"""

from functools import lru_cache

from .hilbert import INFINITE, HilbertData, ideal_hilbert, quotient_hilbert
from .mora import (
    annihilator_of_quotient,
    ideals_equal,
    prune_generators,
    std_basis,
    syzygies,
)
from .poly import AlgebraError
from .resolution import compose_check, free_resolution


class DualComplex:
    """Hom_S(F, S): P_0 -> P_1 -> ... -> P_d with g_{j+1} = transpose(f_{j+1})."""

    def __init__(self, ring, ranks, maps):
        self.ring = ring
        self.ranks = list(ranks)
        # maps[j] is g_{j+1}: P_j -> P_{j+1}, as columns in P_{j+1}
        self.maps = maps
        self.modules = [ring.free(r) for r in self.ranks]

    def __repr__(self):
        return f"DualComplex(ranks={self.ranks})"

    def compose_check(self):
        from .resolution import apply

        for j in range(len(self.maps) - 1):
            g1 = self.maps[j]
            g2 = self.maps[j + 1]
            target = self.modules[j + 2]
            for v in g1:
                if apply(g2, v, target):
                    return False
        return True


def dualize(C):
    if not compose_check(C):
        raise AlgebraError("dualize: input is not a complex")
    ring = C.ring
    maps = []
    for j, cols in enumerate(C.maps):
        # f_{j+1}: F_{j+1} -> F_j; the transpose sends e_a of P_j to row a
        target = C.modules[j + 1]
        rows = []
        for a in range(C.ranks[j]):
            rows.append(target.vector([v.entry(a) for v in cols]))
        maps.append(rows)
    return DualComplex(ring, C.ranks, maps)


class ModulePresentation:
    """The subquotient ker(g_{n+1}) / im(g_n) inside a free module P_n.

    ``relations`` present the same module minimally as S^rank / <relations>.
    """

    def __init__(self, ambient, ker_gens, im_gens):
        self.ambient = ambient
        self.ring = ambient.ring
        self.ker_gens = [g for g in ker_gens if g]
        self.im_gens = [g for g in im_gens if g]
        s = len(self.ker_gens)
        if s == 0:
            self.rank = 0
            self.relations = []
            self.gens = []
            return
        cols = self.ker_gens + self.im_gens
        syz = syzygies(cols, ambient)
        kept, syz = prune_generators(cols, syz, candidates=s)
        self.rank = len(kept) - len(self.im_gens)
        self.gens = kept[: self.rank]
        if self.rank == 0:
            self.relations = []
            return
        target = self.ring.free(self.rank)
        rels = []
        for z in syz:
            v = target.vector(z.entries()[: self.rank])
            if v:
                rels.append(v)
        self.relations = rels

    def __repr__(self):
        return f"ModulePresentation(rank={self.rank}, relations={len(self.relations)})"

    @property
    def free(self):
        return self.ring.free(self.rank)

    def is_zero(self):
        return self.rank == 0

    def hilbert(self):
        """Hilbert function of the module for its own m-adic filtration."""
        if self.rank == 0:
            return HilbertData([], 0)
        return quotient_hilbert(self.relations, self.free)

    @property
    def length(self):
        return self.hilbert().length

    @property
    def dim(self):
        hd = self.hilbert()
        return -INFINITE if hd.is_zero() else hd.dim

    def annihilator(self):
        """Generators of a minimal standard basis of Ann(M)."""
        ring = self.ring
        if self.rank == 0:
            return [ring.one()]
        if not self.relations:
            return []
        gens = annihilator_of_quotient(self.relations, self.free)
        if not gens:
            return []
        return std_basis(gens, ring.S).gens

    def check(self):
        """Every image generator lies in the kernel submodule."""
        from .mora import submodule_contains

        return submodule_contains(self.ker_gens, self.im_gens, self.ambient) if self.ker_gens else not self.im_gens


def ext_presentation(j, D):
    """Ext^j as ker(g_{j+1}) / im(g_j) of the dual complex D."""
    ring = D.ring
    if j < 0:
        raise AlgebraError("negative Ext index")
    if j >= len(D.ranks) or D.ranks[j] == 0:
        return ModulePresentation(ring.free(0), [], [])
    P = D.modules[j]
    if j < len(D.maps):
        ker = syzygies(D.maps[j], D.modules[j + 1])
    else:
        ker = [P.basis(a) for a in range(P.rank)]
    im = D.maps[j - 1] if j > 0 else []
    return ModulePresentation(P, ker, im)


def ext_module(i, C):
    """Presentation of Ext^{d-i}(S/I, S), the Matlis dual of H^i_m(S/I)."""
    d = C.ring.nvars
    if not 0 <= i <= d:
        raise AlgebraError(f"cohomological index {i} outside [0, {d}]")
    return ext_presentation(d - i, dualize(C))


def ell_from_annihilator(gens, ring):
    """Smallest n with m^n contained in the ideal; INFINITE if not m-primary."""
    hd = ideal_hilbert(gens, ring)
    if hd.dim > 0:
        return INFINITE
    return len(hd.numerator)


class LocalCohomology:
    """All H^i_m(S/I) data for one ideal, computed lazily and cached."""

    def __init__(self, I, ring):
        self.ring = ring
        gens = [g for g in I if g]
        if gens:
            B = std_basis(gens, ring.S)
            # m-primary: same ideal, generated below the corner
            if B.corner is not None:
                gens = B.canonical_generators()
        self.ideal = gens
        self.resolution = free_resolution(self.ideal, ring)
        self.dual = dualize(self.resolution)
        self._ext = {}
        self._ann = {}
        self.hilbert = ideal_hilbert(self.ideal, ring)

    @property
    def nvars(self):
        return self.ring.nvars

    @property
    def dim(self):
        return self.hilbert.dim

    def ext(self, i):
        if i not in self._ext:
            d = self.nvars
            if not 0 <= i <= d:
                raise AlgebraError(f"cohomological index {i} outside [0, {d}]")
            self._ext[i] = ext_presentation(d - i, self.dual)
        return self._ext[i]

    def length(self, i):
        return self.ext(i).length

    def annihilator(self, i):
        if i not in self._ann:
            self._ann[i] = self.ext(i).annihilator()
        return self._ann[i]

    def ell(self, i):
        M = self.ext(i)
        if M.is_zero():
            return 0
        if M.length == INFINITE:
            return INFINITE
        return ell_from_annihilator(self.annihilator(i), self.ring)

    def depth(self):
        for i in range(self.nvars + 1):
            if not self.ext(i).is_zero():
                return i
        raise AlgebraError("S/I is zero; depth undefined")

    def f_invariant(self):
        for i in range(self.nvars + 1):
            if self.length(i) == INFINITE:
                return i
        return INFINITE

    def is_cohen_macaulay(self):
        return self.depth() == self.dim

    def is_generalized_cm(self):
        return all(self.length(i) != INFINITE for i in range(self.dim))

    def quasi_buchsbaum_proxy(self):
        if not self.is_generalized_cm():
            raise AlgebraError("quasi-Buchsbaum proxy needs a generalized Cohen-Macaulay quotient")
        return all(self.ell(i) <= 1 for i in range(self.dim))

    def serre_condition(self, n):
        """S_n for an equidimensional S/I: dim Ext^{d-i} <= i - n for i < dim(S/I)."""
        if n < 0:
            raise AlgebraError("Serre index must be non-negative")
        return all(self.ext(i).dim <= i - n for i in range(self.dim))

    def fingerprint(self, p):
        return fingerprint_of(self, p)


@lru_cache(maxsize=256)
def _cohomology_cached(ring, gens):
    return LocalCohomology(list(gens), ring)


def local_cohomology(I, ring):
    return _cohomology_cached(ring, tuple(g for g in I if g))


def _proper(I, ring):
    gens = [g for g in I if g]
    if gens and std_basis(gens, ring.S).unit:
        raise AlgebraError("the unit ideal has no local cohomology")
    return local_cohomology(gens, ring)


def lc_length(i, I, ring):
    return _proper(I, ring).length(i)


def lc_annihilator(i, I, ring):
    return _proper(I, ring).annihilator(i)


def ell_i(i, I, ring):
    return _proper(I, ring).ell(i)


def depth(I, ring):
    return _proper(I, ring).depth()


def f_invariant(I, ring):
    return _proper(I, ring).f_invariant()


def is_cohen_macaulay(I, ring):
    return _proper(I, ring).is_cohen_macaulay()


def is_generalized_cm(I, ring):
    return _proper(I, ring).is_generalized_cm()


def quasi_buchsbaum_proxy(I, ring):
    return _proper(I, ring).quasi_buchsbaum_proxy()


def serre_condition(I, n, ring):
    return _proper(I, ring).serre_condition(n)


class CohomologyFingerprint:
    """Per-index isomorphism invariants of H^0 .. H^p."""

    def __init__(self, ring, entries):
        self.ring = ring
        # list of dicts: length, annihilator (list of Poly), ell, hilbert
        self.entries = entries

    def __len__(self):
        return len(self.entries)

    def __eq__(self, other):
        if not isinstance(other, CohomologyFingerprint) or len(self) != len(other):
            return False
        for a, b in zip(self.entries, other.entries):
            if a["length"] != b["length"] or a["ell"] != b["ell"] or a["hilbert"] != b["hilbert"]:
                return False
            if not ideals_equal(a["annihilator"], b["annihilator"], self.ring):
                return False
        return True

    def __hash__(self):
        return hash(tuple((e["length"], e["ell"], e["hilbert"]) for e in self.entries))

    def to_dict(self):
        return [
            {
                "index": e["index"],
                "length": e["length"],
                "annihilator": [str(g) for g in e["annihilator"]],
                "ell": e["ell"],
                "hilbert": e["hilbert"].values(max(len(e["hilbert"].numerator) - 1, 0)),
            }
            for e in self.entries
        ]


def fingerprint_of(lc, p):
    entries = []
    for i in range(p + 1):
        length = lc.length(i)
        if length == INFINITE:
            raise AlgebraError(f"H^{i} is not of finite length; no fingerprint")
        entries.append(
            {
                "index": i,
                "length": length,
                "annihilator": lc.annihilator(i),
                "ell": lc.ell(i),
                "hilbert": lc.ext(i).hilbert(),
            }
        )
    return CohomologyFingerprint(lc.ring, entries)


def fingerprint(I, p, ring):
    return fingerprint_of(_proper(I, ring), p)


def saturation_length(I, ring):
    """Length of (I : m^infinity)/I computed from the saturation directly."""
    from .mora import saturation

    sat = saturation(I, ring)
    diff = ideal_hilbert(I, ring) - ideal_hilbert(sat, ring)
    if diff.dim > 0:
        raise AlgebraError("saturation quotient is not of finite length")
    return diff.length if not diff.is_zero() else 0


__all__ = [
    "DualComplex",
    "ModulePresentation",
    "LocalCohomology",
    "CohomologyFingerprint",
    "dualize",
    "ext_module",
    "ext_presentation",
    "lc_length",
    "lc_annihilator",
    "ell_i",
    "depth",
    "f_invariant",
    "is_cohen_macaulay",
    "is_generalized_cm",
    "quasi_buchsbaum_proxy",
    "serre_condition",
    "fingerprint",
    "local_cohomology",
    "saturation_length",
]
