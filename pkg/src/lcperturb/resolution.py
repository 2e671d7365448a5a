"""Minimal free resolutions over the local ring S_m."""

from .mora import prune_generators, std_basis, syzygies
from .poly import AlgebraError


class ResolutionError(AlgebraError):
    pass


class FreeComplex:
    """A complex F_0 <- F_1 <- ... <- F_d of free modules.

    ``maps[i]`` is f_{i+1}: F_{i+1} -> F_i, stored column-major as a list of
    ``ranks[i+1]`` vectors in F_i.
    """

    def __init__(self, ring, ranks, maps):
        if len(maps) != len(ranks) - 1:
            raise ResolutionError("need exactly one map between consecutive modules")
        self.ring = ring
        self.ranks = list(ranks)
        self.maps = [list(m) for m in maps]
        self.modules = [ring.free(r) for r in self.ranks]
        for i, cols in enumerate(self.maps):
            if len(cols) != self.ranks[i + 1]:
                raise ResolutionError(f"f_{i + 1} has {len(cols)} columns, expected {self.ranks[i + 1]}")
            for v in cols:
                if v.module != self.modules[i]:
                    raise ResolutionError(f"f_{i + 1} column outside F_{i}")

    def __repr__(self):
        return f"FreeComplex(ranks={self.ranks})"

    @property
    def length(self):
        return len(self.ranks) - 1

    def entry(self, i, row, col):
        """Entry (row, col) of f_i."""
        return self.maps[i - 1][col].entry(row)

    def matrix(self, i):
        """f_i as a list of rows of polynomials."""
        cols = self.maps[i - 1]
        return [[v.entry(r) for v in cols] for r in range(self.ranks[i - 1])]

    def is_minimal(self):
        for cols in self.maps:
            for v in cols:
                if any(f.is_unit() for f in v.entries()):
                    return False
        return True


def apply(cols, v, target):
    """Image of the vector ``v`` under the map with columns ``cols``."""
    out = target.zero()
    for a, f in enumerate(v.entries()):
        if f:
            out = out + f * cols[a]
    return out


def compose_check(C):
    """True iff every composite f_i f_{i+1} vanishes exactly."""
    for i in range(1, len(C.maps)):
        lower = C.maps[i - 1]
        target = C.modules[i - 1]
        for v in C.maps[i]:
            if apply(lower, v, target):
                return False
    return True


def free_resolution(I, ring):
    """Minimal free resolution of S/I over the local ring.

    Each step computes syzygies of the current (minimal) columns and prunes
    redundant generators through unit entries of the next syzygy module, so
    every map has all entries in the maximal ideal.
    """
    gens = [g for g in I if g]
    if gens and std_basis(gens, ring.S).unit:
        raise ResolutionError("cannot resolve the unit ideal")
    if not gens:
        return FreeComplex(ring, [1], [])
    cols, syz = prune_generators(gens, syzygies(gens, ring.S))
    maps = [cols]
    while syz:
        module = ring.free(len(cols))
        syz = [s for s in syz if s]
        nxt, nsyz = prune_generators(syz, syzygies(syz, module))
        if not nxt:
            break
        maps.append(nxt)
        cols, syz = nxt, nsyz
        if len(maps) > ring.nvars + 1:
            raise ResolutionError("resolution longer than the number of variables")
    ranks = [1] + [len(m) for m in maps]
    return FreeComplex(ring, ranks, maps)


def betti_numbers(C):
    if not C.is_minimal():
        raise ResolutionError("complex is not minimal (a map has a unit entry)")
    return list(C.ranks)
