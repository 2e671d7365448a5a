import pytest

from lcperturb.lab import (
    HOLDS,
    VACUOUS,
    VERDICTS,
    VIOLATION,
    ExperimentReport,
    PerturbationSpec,
    corpus,
    estimate_N,
    gen_perturbation,
    invariant_table,
    is_filter_regular_sequence,
    paper_example,
    run_experiment,
    run_trial,
    star_witness,
)
from lcperturb.mora import congruent_mod_power
from lcperturb.poly import AlgebraError, Ring

R = Ring("xyz")
x, y, z = R.gens()
I = [x**2, y]


def test_spec_validation():
    with pytest.raises(AlgebraError):
        PerturbationSpec(I, N=0)
    with pytest.raises(AlgebraError):
        PerturbationSpec(I, N=5, D=4)
    with pytest.raises(AlgebraError):
        PerturbationSpec(I, N=5, adversarial=("bogus",))
    assert PerturbationSpec(I, N=5).D == 6


def test_perturbations_are_congruent_and_seeded():
    spec = PerturbationSpec(I, N=5, D=5, trials=3, seed=11)
    for t in range(3):
        J = gen_perturbation(spec, t)
        assert congruent_mod_power(I, J, 5, R)
        for f, g in zip(I, J):
            assert (g - f).ord >= 5 or not (g - f)
    assert gen_perturbation(spec, 1) == gen_perturbation(spec, 1)
    assert gen_perturbation(spec, 1) != gen_perturbation(spec, 2)


def test_zero_sparsity_gives_the_base():
    spec = PerturbationSpec(I, N=5, sparsity=0)
    assert gen_perturbation(spec, 0) == I


def test_identity_trial_holds():
    t = run_trial(I, I, 5)
    assert t.gated and not t.violations
    assert t.verdicts["depth_cm"] == HOLDS
    assert t.verdicts["length_bound"] == HOLDS


def test_paper_example_gate_is_necessary():
    ring, base, J = paper_example(5)
    t = run_trial(base, J, 5, label="paper")
    assert t.congruent and not t.hf_gate
    assert set(t.verdicts.values()) == {VACUOUS}
    assert t.invariants["depth"] == {"I": 1, "J": 0}
    assert star_witness(base, J, x * z**5) == (True, False)


def test_gate_passing_trials_hold():
    spec = PerturbationSpec(I, N=9, trials=20, seed=42)
    rep = run_experiment(spec)
    assert rep.counts["violations"] == 0
    assert rep.counts["gate_pass"] + rep.counts["gate_fail"] == 20
    for t in rep.trials:
        if t.gated:
            assert t.verdicts["depth_cm"] == HOLDS


def test_injections():
    spec = PerturbationSpec(I, N=5, trials=1, seed=0, adversarial=("identity", "paper"))
    rep = run_experiment(spec)
    labels = [t.label for t in rep.trials]
    assert labels == ["random", "identity", "paper"]
    ident = rep.trials[1]
    assert ident.gated and all(v in (HOLDS, VACUOUS) for v in ident.verdicts.values())
    assert not rep.trials[2].hf_gate


def test_report_counts_shape():
    rep = run_experiment(PerturbationSpec(I, N=6, trials=2, seed=3))
    assert set(rep.counts["verdicts"]) == set(VERDICTS)
    for tally in rep.counts["verdicts"].values():
        assert set(tally) == {HOLDS, VACUOUS, VIOLATION}
        assert sum(tally.values()) == 2
    doc = rep.to_dict(timestamp=False)
    assert "wall_clock" not in doc
    assert doc["estimate_N"]["label"] == "HEURISTIC"


def test_empty_report():
    spec = PerturbationSpec(I, N=5)
    doc = ExperimentReport(spec, 0, []).to_dict(timestamp=False)
    assert doc["trials"] == [] and doc["spec"]["base"] == ["x^2", "y"]


def test_estimate_N():
    S2 = Ring("xy")
    assert estimate_N([], R) == 1
    n = estimate_N(S2.max_ideal(2), S2, p=0)
    assert isinstance(n, int) and n > 0
    R4 = Ring("xyzw")
    a, b, c, d = R4.gens()
    assert estimate_N([a * c, a * d, b * c, b * d], R4, p=1) > 1
    with pytest.raises(AlgebraError):
        estimate_N(I, R, p=1)


def test_filter_regular_sequences():
    assert is_filter_regular_sequence([x, y])
    assert not is_filter_regular_sequence([x, x])
    R4 = Ring("xyzw")
    a, b, c, d = R4.gens()
    assert not is_filter_regular_sequence([a * c, a * d])


def test_corpus_shape():
    entries = corpus()
    assert len(entries) >= 6
    assert all(e.ring.nvars <= 4 for e in entries)
    tables = {e.name: invariant_table(e.gens, e.ring) for e in entries if e.battery}
    assert any(t["cm"] for t in tables.values())
    assert any(t["gcm"] and not t["cm"] for t in tables.values())
    assert any(not t["gcm"] for t in tables.values())


def test_budget_is_recorded_not_raised(monkeypatch):
    from lcperturb import lab
    from lcperturb.mora import BudgetExceeded

    def boom(*args, **kw):
        raise BudgetExceeded("too big")

    monkeypatch.setattr(lab, "_run_trial", boom)
    t = run_trial(I, I, 5)
    assert t.status == "budget" and not t.violations
