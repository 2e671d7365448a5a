"""Perturbation experiments: J = (f_i + eps_i) with eps_i in m^N."""

import random
import time
from dataclasses import dataclass, field

from . import __version__
from .cohomology import local_cohomology
from .hilbert import INFINITE, artin_rees, hf_equal, ideal_hilbert
from .mora import BudgetExceeded, colon, congruent_mod_power, ideals_equal, initial_module_star, is_member, syzygies
from .poly import AlgebraError, Ring

HOLDS = "holds"
VACUOUS = "vacuous"
VIOLATION = "VIOLATION"

VERDICTS = ("length_bound", "length_equality", "annihilator", "fingerprint", "depth_cm", "serre", "qb_proxy")


@dataclass
class PerturbationSpec:
    base: list
    N: int
    D: int = None
    trials: int = 1
    seed: int = 0
    sparsity: int = 3
    adversarial: tuple = ()
    equidimensional: bool = False
    name: str = "I"

    def __post_init__(self):
        if self.D is None:
            self.D = self.N + 1
        if self.N < 1:
            raise AlgebraError("N must be at least 1")
        if self.D < self.N:
            raise AlgebraError("D must be at least N")
        if self.trials < 1:
            raise AlgebraError("need at least one trial")
        if not self.base:
            raise AlgebraError("empty base ideal")
        for a in self.adversarial:
            if a not in ("identity", "paper"):
                raise AlgebraError(f"unknown adversarial preset {a!r}")

    @property
    def ring(self):
        return self.base[0].ring

    def to_dict(self):
        return {
            "name": self.name,
            "ring": {"p": self.ring.p, "vars": list(self.ring.names)},
            "base": [str(f) for f in self.base],
            "N": self.N,
            "D": self.D,
            "trials": self.trials,
            "seed": self.seed,
            "sparsity": self.sparsity,
            "adversarial": list(self.adversarial),
            "equidimensional": self.equidimensional,
        }


def _monomials_between(ring, lo, hi):
    out = []
    for d in range(lo, hi + 1):
        out.extend(ring.monomials_of_degree(d))
    return out


def random_epsilon(ring, rng, N, D, sparsity):
    """Sparse random element of m^N with terms in degrees [N, D]."""
    monos = _monomials_between(ring, N, D)
    eps = ring.zero()
    for _ in range(sparsity):
        eps = eps + ring.monomial(rng.choice(monos), rng.randrange(ring.p))
    return eps


def gen_perturbation(spec, trial):
    """The trial-th perturbation of spec.base; depends only on (seed, trial)."""
    rng = random.Random(f"{spec.seed}/{trial}")
    ring = spec.ring
    return [f + random_epsilon(ring, rng, spec.N, spec.D, spec.sparsity) for f in spec.base]


def paper_example(N, p=None):
    """Ring k[x,y,z], I = (x^2, y) and J_N = (x^2, xy, y - z^N)."""
    ring = Ring("xyz") if p is None else Ring("xyz", p)
    x, y, z = ring.gens()
    return ring, [x**2, y], [x**2, x * y, y - z**N]


def paper_perturbation(ring, N):
    x, y, z = ring.gens()[:3]
    return [x**2, x * y, y - z**N]


# -- invariant tables ---------------------------------------------------------


def invariant_table(I, ring, p=None):
    """Cohomological invariants of S/I at every index 0..nvars."""
    lc = local_cohomology(I, ring)
    d = ring.nvars
    gcm = lc.is_generalized_cm()
    return {
        "dim": lc.dim,
        "depth": lc.depth(),
        "cm": lc.is_cohen_macaulay(),
        "gcm": gcm,
        "lengths": [lc.length(i) for i in range(d + 1)],
        "ell": [lc.ell(i) for i in range(d + 1)],
        "annihilators": [[str(g) for g in lc.annihilator(i)] for i in range(d + 1)],
        "serre": {"S1": lc.serre_condition(1), "S2": lc.serre_condition(2)},
        "qb_proxy": lc.quasi_buchsbaum_proxy() if gcm else None,
        "hilbert": ideal_hilbert(I, ring).values(8),
    }


def _verdict(ok):
    return HOLDS if ok else VIOLATION


def _finite(x):
    return x != INFINITE


@dataclass
class TrialResult:
    trial: int
    J: list
    congruent: bool
    hf_gate: bool
    invariants: dict
    verdicts: dict
    label: str = "random"
    status: str = "ok"  # "budget" when the engine gave up

    @property
    def gated(self):
        return self.congruent and self.hf_gate

    @property
    def violations(self):
        return [k for k, v in self.verdicts.items() if v == VIOLATION]

    def to_dict(self):
        return {
            "trial": self.trial,
            "label": self.label,
            "J": [str(g) for g in self.J],
            "congruent": self.congruent,
            "hf_gate": self.hf_gate,
            "invariants": self.invariants,
            "verdicts": dict(self.verdicts),
            "status": self.status,
        }


def run_trial(I, J, N, p=None, equidimensional=False, trial=0, label="random"):
    """Compare the cohomology of S/I and S/J under the theorem hypotheses.

    A trial the engine cannot finish within budget is recorded with status
    "budget" and vacuous verdicts rather than raising.
    """
    try:
        return _run_trial(I, J, N, p, equidimensional, trial, label)
    except BudgetExceeded:
        verdicts = dict.fromkeys(VERDICTS, VACUOUS)
        return TrialResult(trial, list(J), False, False, {}, verdicts, label, status="budget")


def _run_trial(I, J, N, p, equidimensional, trial, label):
    ring = I[0].ring
    if J and J[0].ring != ring:
        raise AlgebraError("I and J live in different rings")
    congruent = congruent_mod_power(I, J, N, ring)
    gate = hf_equal(I, J, ring)
    lcI = local_cohomology(I, ring)
    lcJ = local_cohomology(J, ring)
    tI = invariant_table(I, ring)
    tJ = invariant_table(J, ring)
    keys = ("dim", "depth", "cm", "gcm", "lengths", "ell", "annihilators", "serre", "qb_proxy", "hilbert")
    table = {k: {"I": tI[k], "J": tJ[k]} for k in keys}
    if p is None:
        p = max(lcI.dim - 1, -1)
    verdicts = dict.fromkeys(VERDICTS, VACUOUS)
    if not (congruent and gate):
        return TrialResult(trial, list(J), congruent, gate, table, verdicts, label)

    d = ring.nvars
    lenI, lenJ = tI["lengths"], tJ["lengths"]

    checked = [i for i in range(d + 1) if _finite(lenI[i])]
    if checked:
        verdicts["length_bound"] = _verdict(all(lenI[i] >= lenJ[i] for i in checked))

    both = [i for i in checked if i == 0 or _finite(lenI[i - 1])]
    if both:
        verdicts["length_equality"] = _verdict(all(lenI[i] == lenJ[i] for i in both))
        same = all(ideals_equal(lcI.annihilator(i), lcJ.annihilator(i), ring) for i in both)
        verdicts["annihilator"] = _verdict(same)

    if p >= 0 and all(_finite(lenI[i]) for i in range(p + 1)):
        try:
            same = lcI.fingerprint(p) == lcJ.fingerprint(p)
        except AlgebraError:
            same = False
        verdicts["fingerprint"] = _verdict(same)

    ok = tI["depth"] == tJ["depth"] and tI["cm"] == tJ["cm"] and (not tI["gcm"] or tJ["gcm"])
    verdicts["depth_cm"] = _verdict(ok)

    if equidimensional:
        ok = all(tJ["serre"][k] for k in ("S1", "S2") if tI["serre"][k])
        verdicts["serre"] = _verdict(ok)

    if tI["gcm"] and tI["qb_proxy"]:
        verdicts["qb_proxy"] = _verdict(bool(tJ["gcm"] and tJ["qb_proxy"]))

    return TrialResult(trial, list(J), congruent, gate, table, verdicts, label)


# -- the N heuristic ----------------------------------------------------------


def estimate_N(I, ring, p=None):
    """HEURISTIC sufficient level: 1 + max l^i + the three Artin-Rees maxima.

    With p given, every H^0..H^p must have finite length.  With p None only
    the finite-length indices contribute to the l^i term.
    """
    gens = [g for g in I if g]
    if not gens:
        return 1
    lc = local_cohomology(gens, ring)
    d = ring.nvars
    if p is None:
        ells = [lc.ell(i) for i in range(d + 1) if _finite(lc.length(i))]
    else:
        ells = []
        for i in range(p + 1):
            if not _finite(lc.length(i)):
                raise AlgebraError(f"H^{i} has infinite length; no bound for p={p}")
            ells.append(lc.ell(i))
    C = lc.resolution
    D = lc.dual
    ar_f = [artin_rees(cols, C.modules[j]) for j, cols in enumerate(C.maps)]
    ar_im = [artin_rees(rows, D.modules[j + 1]) for j, rows in enumerate(D.maps)]
    ar_ker = [artin_rees(syzygies(rows, D.modules[j + 1]), D.modules[j]) for j, rows in enumerate(D.maps)]
    return 1 + max(ells, default=0) + max(ar_im, default=0) + max(ar_ker, default=0) + max(ar_f, default=0)


# -- experiments --------------------------------------------------------------


@dataclass
class ExperimentReport:
    spec: PerturbationSpec
    p: int
    trials: list
    wall_clock: float = None
    heuristic_N: int = None
    version: str = __version__
    counts: dict = field(default_factory=dict)

    def __post_init__(self):
        if not self.counts:
            self.counts = aggregate(self.trials)

    @property
    def violations(self):
        return self.counts["violations"]

    def to_dict(self, timestamp=True):
        out = {
            "spec": self.spec.to_dict(),
            "p": self.p,
            "estimate_N": {"value": self.heuristic_N, "label": "HEURISTIC"},
            "trials": [t.to_dict() for t in self.trials],
            "counts": self.counts,
            "engine_version": self.version,
        }
        if timestamp:
            out["wall_clock"] = self.wall_clock
        return out


def aggregate(trials):
    counts = {
        "trials": len(trials),
        "gate_pass": sum(1 for t in trials if t.gated),
        "gate_fail": sum(1 for t in trials if not t.gated),
        "violations": sum(len(t.violations) for t in trials),
        "budget": sum(1 for t in trials if t.status == "budget"),
        "verdicts": {},
    }
    for v in VERDICTS:
        tally = {HOLDS: 0, VACUOUS: 0, VIOLATION: 0}
        for t in trials:
            tally[t.verdicts[v]] += 1
        counts["verdicts"][v] = tally
    return counts


def run_experiment(spec, p=None):
    """All random trials plus the requested adversarial injections."""
    start = time.perf_counter()
    ring = spec.ring
    I = list(spec.base)
    if p is None:
        p = max(local_cohomology(I, ring).dim - 1, -1)
    results = []
    for t in range(spec.trials):
        J = gen_perturbation(spec, t)
        results.append(run_trial(I, J, spec.N, p, spec.equidimensional, trial=t))
    for k, name in enumerate(spec.adversarial):
        J = I if name == "identity" else paper_perturbation(ring, spec.N)
        results.append(run_trial(I, J, spec.N, p, spec.equidimensional, trial=spec.trials + k, label=name))
    try:
        heuristic = estimate_N(I, ring)
    except AlgebraError:
        heuristic = None
    return ExperimentReport(spec, p, results, time.perf_counter() - start, heuristic)


def is_filter_regular_sequence(fs):
    """Each ((f_1..f_{i-1}) : f_i) / (f_1..f_{i-1}) has dimension <= 0."""
    if not fs:
        raise AlgebraError("empty sequence")
    ring = fs[0].ring
    prev = []
    for f in fs:
        Q = colon(prev, [f], ring.S)
        diff = ideal_hilbert(prev, ring) - ideal_hilbert(Q, ring)
        if not diff.is_zero() and diff.dim > 0:
            return False
        prev = prev + [f]
    return True


# -- corpus -------------------------------------------------------------------


@dataclass
class CorpusEntry:
    name: str
    ring: Ring
    gens: list
    equidimensional: bool
    filter_regular: bool
    note: str = ""
    battery: bool = True


def corpus():
    """Test ideals in at most four variables.

    ``battery`` is False where random perturbations at the estimated level
    exceed the standard basis work allowance; those ideals are used only for
    unperturbed invariants.
    """
    out = []
    R3 = Ring("xyz")
    x, y, z = R3.gens()
    out.append(CorpusEntry("x2_y", R3, [x**2, y], True, True, "complete intersection, CM"))
    out.append(CorpusEntry("line_plane", R3, [x * z, y * z], False, False, "not gCM"))
    out.append(CorpusEntry("x2_xy", R3, [x**2, x * y], False, False, "embedded line, not gCM"))
    R2 = Ring("xy")
    x, y = R2.gens()
    out.append(CorpusEntry("fat_line", R2, [x**2, x * y], False, False, "embedded point, gCM not CM"))
    out.append(CorpusEntry("m_squared", R2, R2.max_ideal(2), True, False, "Artinian, CM"))
    out.append(CorpusEntry("cusp", R2, [x**2 - y**3], True, True, "hypersurface, CM"))
    out.append(CorpusEntry("x2_y2", R2, [x**2, y**2], True, True, "Artinian complete intersection"))
    R4 = Ring("xyzw")
    x, y, z, w = R4.gens()
    out.append(CorpusEntry("two_planes", R4, [x * z, x * w, y * z, y * w], True, False, "gCM, not CM", battery=False))
    out.append(
        CorpusEntry("twisted_cubic", R4, [x * z - y**2, y * w - z**2, x * w - y * z], True, False, "CM", battery=False)
    )
    return out


def star_witness(I, J, f):
    """(f in J*, f in I*) for a homogeneous f."""
    ring = f.ring
    return is_member(f, initial_module_star(J, ring.S)), is_member(f, initial_module_star(I, ring.S))
