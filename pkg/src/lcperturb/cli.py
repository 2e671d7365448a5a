"""Command-line front end.

    lcperturb check FILE
    lcperturb invariants FILE
    lcperturb perturb FILE [--seed S] [--trials T]
    lcperturb paper-example [N]

Exit status: 0 success, 1 diagnostics or I/O failure, 2 a VIOLATION was found.
"""

import argparse
import datetime
import sys

from . import __version__
from .cohomology import local_cohomology
from .dsl import SessionError, parse_session
from .hilbert import ideal_hilbert
from .lab import (
    PerturbationSpec,
    invariant_table,
    paper_example,
    run_experiment,
    run_trial,
    star_witness,
)
from .mora import BudgetExceeded, congruent_mod_power, is_member, std_basis
from .poly import AlgebraError
from .report import serialize_report
from .resolution import betti_numbers

EXIT_OK, EXIT_DIAG, EXIT_VIOLATION = 0, 1, 2

HF_PREFIX = 8


def _read(path):
    with open(path, encoding="utf-8") as fh:
        return fh.read()


def _load(path):
    return parse_session(_read(path))


def ideal_invariants(gens, ring, n=HF_PREFIX):
    """Everything the ``invariants`` command prints for one ideal."""
    gens = [g for g in gens if g]
    if gens and std_basis(gens, ring.S).unit:
        return {"unit": True, "generators": [str(g) for g in gens]}
    table = invariant_table(gens, ring)
    table["hilbert"] = ideal_hilbert(gens, ring).values(n)
    table["betti"] = betti_numbers(local_cohomology(gens, ring).resolution)
    table["generators"] = [str(g) for g in gens]
    table["unit"] = False
    return table


def cmd_check(session, args):
    return {
        "status": "ok",
        "ring": {"p": session.ring.p, "vars": list(session.ring.names)},
        "ideals": {name: len(d.gens) for name, d in session.ideals.items()},
        "commands": [{"verb": c.verb, "target": c.target, "params": c.params} for c in session.commands],
    }, EXIT_OK


def cmd_invariants(session, args):
    ring = session.ring
    prefix = {}
    queries = []
    for c in session.commands:
        if c.verb in ("invariants", "hilbert") and "n" in c.params:
            prefix[c.target] = c.params["n"]
    out = {}
    for name, decl in session.ideals.items():
        out[name] = ideal_invariants(decl.gens, ring, prefix.get(name, HF_PREFIX))
    for c in session.commands:
        if c.verb == "hilbert":
            n = c.params.get("n", HF_PREFIX)
            queries.append({"verb": "hilbert", "target": c.target, "values": ideal_hilbert(session.ideal(c.target), ring).values(n)})
        elif c.verb == "betti":
            res = local_cohomology(session.ideal(c.target), ring).resolution
            queries.append({"verb": "betti", "target": c.target, "values": betti_numbers(res)})
    return {"ideals": out, "queries": queries}, EXIT_OK


def spec_from_command(session, c, args):
    prm = c.params
    N = prm.get("N", 5)
    trials = args.trials if args.trials is not None else prm.get("trials", 20)
    seed = args.seed if args.seed is not None else prm.get("seed", 0)
    adv = (prm["adversarial"],) if "adversarial" in prm else ()
    return PerturbationSpec(
        base=list(session.ideal(c.target)),
        N=N,
        D=prm.get("D", N + 1),
        trials=trials,
        seed=seed,
        sparsity=prm.get("sparsity", 3),
        adversarial=adv,
        equidimensional=prm.get("equidim", "false") == "true",
        name=c.target,
    ), prm.get("p")


def cmd_perturb(session, args):
    runs = [c for c in session.commands if c.verb == "perturb"]
    if not runs:
        raise AlgebraError("no 'cmd perturb' in session")
    reports = []
    for c in runs:
        spec, p = spec_from_command(session, c, args)
        reports.append(run_experiment(spec, p).to_dict(timestamp=args.timestamp))
    bad = sum(r["counts"]["violations"] for r in reports)
    return {"experiments": reports, "violations": bad}, EXIT_VIOLATION if bad else EXIT_OK


def paper_document(N):
    ring, I, J = paper_example(N)
    x, y, z = ring.gens()
    witness = x * z**N
    in_J, in_I = star_witness(I, J, witness)
    trial = run_trial(I, J, N, label="paper")
    lcJ = local_cohomology(J, ring)
    # x m^N inside J_N while x is not: x is a nonzero m-torsion class
    x_mN = all(is_member(x * m, J) for m in ring.max_ideal(N))
    doc = {
        "N": N,
        "I": [str(g) for g in I],
        "J": [str(g) for g in J],
        "congruent": congruent_mod_power(I, J, N, ring),
        "hf_gate": trial.hf_gate,
        "star_witness": {"element": str(witness), "in_J_star": in_J, "in_I_star": in_I},
        "depth": {"I": trial.invariants["depth"]["I"], "J": trial.invariants["depth"]["J"]},
        "lc_length_0_J": lcJ.length(0),
        "x_times_m_N_in_J": x_mN,
        "x_in_J": is_member(x, J),
        "trial": trial.to_dict(),
    }
    return doc, len(trial.violations)


def cmd_paper(args):
    doc, bad = paper_document(args.N)
    return doc, EXIT_VIOLATION if bad else EXIT_OK


def build_parser():
    ap = argparse.ArgumentParser(prog="lcperturb", description="Local cohomology under small perturbations.")
    ap.add_argument("--version", action="version", version=__version__)
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--out", help="write JSON here instead of stdout")
    common.add_argument("--no-timestamp", dest="timestamp", action="store_false", help="omit run-dependent fields")
    common.add_argument("--seed", type=int, default=None, help="override every experiment seed")
    common.add_argument("--trials", type=int, default=None, help="override every experiment trial count")
    sub = ap.add_subparsers(dest="command", required=True)
    for name, text in (
        ("check", "parse a session file only"),
        ("invariants", "invariant table for every ideal"),
        ("perturb", "run the perturbation experiments"),
    ):
        sp = sub.add_parser(name, parents=[common], help=text)
        sp.add_argument("file")
    sp = sub.add_parser("paper-example", parents=[common], help="the (x^2, y) example with J_N = (x^2, xy, y - z^N)")
    sp.add_argument("N", nargs="?", type=int, default=5)
    return ap


def _emit(doc, args):
    if args.timestamp:
        doc = dict(doc)
        doc["timestamp"] = datetime.datetime.now(datetime.timezone.utc).isoformat(timespec="seconds")
    text = serialize_report(doc).decode("utf-8") + "\n"
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def main(argv=None):
    args = build_parser().parse_args(argv)
    if args.trials is not None and args.trials < 1:
        print("error: --trials must be at least 1", file=sys.stderr)
        return EXIT_DIAG
    try:
        if args.command == "paper-example":
            if args.N < 1:
                print("error: N must be at least 1", file=sys.stderr)
                return EXIT_DIAG
            doc, code = cmd_paper(args)
        else:
            session = _load(args.file)
            handler = {"check": cmd_check, "invariants": cmd_invariants, "perturb": cmd_perturb}[args.command]
            doc, code = handler(session, args)
        _emit(doc, args)
    except SessionError as exc:
        print(f"{getattr(args, 'file', '<input>')}:{exc.diagnostic}", file=sys.stderr)
        return EXIT_DIAG
    except (OSError, UnicodeDecodeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_DIAG
    except BudgetExceeded as exc:
        print(f"error: computation too large: {exc}", file=sys.stderr)
        return EXIT_DIAG
    except AlgebraError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_DIAG
    return code


if __name__ == "__main__":
    sys.exit(main())
