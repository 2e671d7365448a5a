"""Randomized property suites shared by the property tests and the acceptance run.

Each suite takes a count and a seed and returns a list of failure messages.
"""

import random

import oracles
from lcperturb.hilbert import artin_rees, ideal_hilbert, quotient_hilbert
from lcperturb.lab import PerturbationSpec, gen_perturbation
from lcperturb.mora import BudgetExceeded, is_member, std_basis, weak_normal_form
from lcperturb.poly import Ring

P = 32003
R2 = Ring("xy", P)
R3 = Ring("xyz", P)


def random_poly(ring, rng, terms, lo, hi):
    f = ring.zero()
    for _ in range(terms):
        d = rng.randint(lo, hi)
        f = f + ring.monomial(rng.choice(ring.monomials_of_degree(d)), rng.randrange(1, P))
    return f


def random_element(F, rng, terms, lo, hi):
    return F.vector([random_poly(F.ring, rng, terms, lo, hi) for _ in range(F.rank)])


def nested_instance(rng):
    """(F, N, L) with L inside N inside F; rank-2 instances stay in two variables."""
    ring = rng.choice([R2, R2, R3])
    rank = 2 if rng.random() < 0.3 else 1
    if rank == 2:
        ring = R2
    F = ring.free(rank)
    N = [random_element(F, rng, rng.randint(1, 3), 1, 3) for _ in range(rng.randint(1, 3))]
    L = []
    for _ in range(rng.randint(1, 3)):
        v = F.zero()
        for g in N:
            v = v + random_poly(ring, rng, 2, 1, 2) * g
        if v:
            L.append(v)
    if not L:
        L = [ring.var(0) * N[0]]
    return F, N, L


def hf_identity(count, seed, top=5):
    """dim ((N/L)*)_n = HF(F/L)(n) - HF(F/N)(n) for n <= top."""
    rng = random.Random(seed)
    bad = []
    for i in range(count):
        F, N, L = nested_instance(rng)
        n_vars = F.ring.nvars
        hl = quotient_hilbert(L, F).values(top)
        hn = quotient_hilbert(N, F).values(top)
        dn = [oracles.as_dict(g) for g in N]
        dl = [oracles.as_dict(g) for g in L]
        want = [oracles.initial_piece(dn, dl, n_vars, P, n, F.rank) for n in range(top + 1)]
        got = [a - b for a, b in zip(hl, hn)]
        if got != want:
            bad.append(f"instance {i}: engine {got} oracle {want}")
    return bad


def random_ideal(rng, ring):
    gens = [random_poly(ring, rng, rng.randint(1, 3), 1, 3) for _ in range(rng.randint(1, ring.nvars))]
    return [g for g in gens if g] or [ring.var(0)]


def dim_lemma(count, seed):
    """Krull dimension of S/I equals the dimension of its tangent cone."""
    rng = random.Random(seed)
    bad = []
    for i in range(count):
        ring = rng.choice([R2, R3])
        I = random_ideal(rng, ring)
        got = ideal_hilbert(I, ring).dim
        want = oracles.krull_dim([oracles.as_dict(g) for g in I], ring.nvars, P, seed=i)
        if got != want:
            bad.append(f"instance {i}: {[str(g) for g in I]} engine {got} oracle {want}")
    return bad


def power_gens(ring, gens, n):
    return [m * g for g in gens for m in ring.max_ideal(n)] if n else list(gens)


def engine_mu(ring, gens, n, k):
    """dim M/mM for M = m^n I: count generators of M not already in mM plus the kept ones.

    Falls back to colengths mod m^k when a standard basis exceeds the budget.
    """
    try:
        kept = power_gens(ring, gens, n + 1)
        count = 0
        for g in power_gens(ring, gens, n):
            if not is_member(g, kept):
                kept.append(g)
                count += 1
        return count
    except BudgetExceeded:
        cap = ring.max_ideal(k)
        lo = quotient_hilbert(power_gens(ring, gens, n) + cap, ring.S).length
        hi = quotient_hilbert(power_gens(ring, gens, n + 1) + cap, ring.S).length
        return hi - lo


def mu_monotone(count, seed, powers=(0, 1, 2)):
    """mu(m^n I) <= mu(m^n J) for J a perturbation of I at a level above AR."""
    rng = random.Random(seed)
    bad = []
    for i in range(count):
        ring = rng.choice([R2, R2, R3])
        I = random_ideal(rng, ring)
        ar = artin_rees(I, ring.S)
        N = ar + 1 + rng.randint(0, 1)
        spec = PerturbationSpec(I, N=N, D=N + 1, seed=seed, sparsity=2)
        J = gen_perturbation(spec, i)
        top = max(g.degree for g in I + J)
        for n in powers:
            k = n + top + ar + 2
            mus = []
            for gens in (I, J):
                engine = engine_mu(ring, gens, n, k)
                oracle = oracles.mu_power([oracles.as_dict(g) for g in gens], ring.nvars, P, n, k)
                if engine != oracle:
                    bad.append(f"instance {i} n={n}: engine mu {engine} oracle {oracle}")
                mus.append(oracle)
            if mus[0] > mus[1]:
                bad.append(f"instance {i} n={n}: mu(I)={mus[0]} > mu(J)={mus[1]}")
    return bad


def _divides(a, b):
    return all(x <= y for x, y in zip(a, b))


def nf_soundness(count, seed, k=7):
    """Weak normal forms against a standard basis, checked by linear algebra."""
    rng = random.Random(seed)
    bad = []
    cache = {}
    for i in range(count):
        ring = rng.choice([R2, R3])
        j = rng.randrange(8)
        if (ring.nvars, j) not in cache:
            I = random_ideal(random.Random(f"{seed}/{ring.nvars}/{j}"), ring)
            cache[ring.nvars, j] = (I, std_basis(I, ring.S).gens)
        I, G = cache[ring.nvars, j]
        f = random_poly(ring, rng, rng.randint(1, 4), 0, 4)
        if rng.random() < 0.4:
            f = f + random_poly(ring, rng, 1, 0, 2) * rng.choice(I)
        if not f:
            continue
        r = weak_normal_form(f, G)
        di = [oracles.as_dict(g) for g in I]
        df, dr = oracles.as_dict(f), oracles.as_dict(r)
        n = ring.nvars
        tag = f"reduction {i}: f={f} r={r}"
        if r and any(_divides(g.lead_exponents, r.lead_exponents) for g in G):
            bad.append(f"{tag}: lead of r is reducible")
        if not r:
            if not oracles.in_ideal_mod_power(df, di, n, P, k):
                bad.append(f"{tag}: r = 0 but f not in I + m^{k}")
            continue
        if not (oracles.in_ideal_mod_power(df, di + [dr], n, P, k) and oracles.in_ideal_mod_power(dr, di + [df], n, P, k)):
            bad.append(f"{tag}: I + (f) differs from I + (r) mod m^{k}")
        d = r.ord
        if oracles.in_ideal_mod_power(df, di, n, P, d + 1):
            bad.append(f"{tag}: f in I + m^{d + 1} though r is nonzero")
    return bad
