"""Command-line front end; every subcommand prints a report and exits 0 only
when all certifications it ran succeeded."""
import argparse
import json
import sys
import time

from .exact import Q, to_str
from .family.render import SCHEMA, model_to_json, model_to_latex


def _primes(text):
    from .specialize import default_primes

    if text is None:
        return None
    if "," not in text and text.isdigit():
        return default_primes(int(text))
    return [int(x) for x in text.split(",") if x.strip()]


def _common():
    p = argparse.ArgumentParser(add_help=False)
    p.add_argument("--n", type=int, default=6, help="even degree n >= 6 (default 6)")
    p.add_argument("--prec", type=int, default=None, help="series precision (default 64 for n=6, else 128)")
    p.add_argument("--json", action="store_true", help="emit JSON")
    p.add_argument("--latex", action="store_true", help="emit LaTeX where a model is produced")
    p.add_argument("--seed", type=int, default=None, help="seed for probe sampling")
    p.add_argument("--primes", default=None, help="comma list of primes, or a count of small primes")
    return p


# ---------------------------------------------------------------- subcommands


def cmd_nielsen(args):
    from .nielsen import brute_force_sni, canonicalize, class_types, enumerate_sni

    classes = enumerate_sni(args.n)
    out = {
        "n": args.n,
        "count": len(classes),
        "cycle_types": [list(t) for t in class_types(args.n)],
        "classes": [{"label": str(lab), "tuple": t.to_json()} for lab, t in classes],
    }
    ok = len(classes) == 3 * (args.n // 2 - 1)
    if args.oracle:
        bf = brute_force_sni(args.n)
        mine = sorted(canonicalize(t).key() for _, t in classes)
        theirs = sorted(t.key() for t in bf.representatives)
        out["oracle"] = {"count": bf.count, "tuples_examined": bf.tuples_examined, "bijection": mine == theirs}
        ok = ok and mine == theirs
    return ok, out, None


def cmd_braid_orbit(args):
    from .nielsen import closed_form_permutations, expected_ramification, gamma_monodromy

    rep = gamma_monodromy(args.n)
    out = rep.to_json()
    exp = [list(t) for t in expected_ramification(args.n)]
    got = [sorted(rep.cycle_types[k], reverse=True) for k in ("gamma1", "gamma2", "gamma1gamma2")]
    out["expected_ramification"] = exp
    ok = got == exp and rep.orbit_count == 1 and rep.genus == 0
    if args.n >= 10:
        closed = closed_form_permutations(args.n)
        match = {k: closed[k] == rep.perms[k] for k in closed}
        out["closed_form_match"] = match
        ok = ok and all(match.values())
    return ok, out, None


def cmd_descent(args):
    from .descent import descent_check
    from .nielsen import ClassLabel, enumerate_sni

    rows = []
    real = []
    for lab, t in enumerate_sni(args.n):
        v = descent_check(t)
        rows.append({"label": str(lab), **v.to_json()})
        if v.totally_real:
            real.append(lab)
    ok = real == [ClassLabel("A", args.n // 2 - 1)]
    return ok, {"n": args.n, "classes": rows, "totally_real": [str(x) for x in real]}, None


def cmd_an_lift(args):
    from math import factorial

    from .descent import an_lift_report
    from .nielsen import ClassLabel, make_class

    rep = an_lift_report(make_class(args.n, ClassLabel("A", args.n // 2 - 1)))
    ok = (
        rep.order == factorial(args.n)
        and rep.transitive
        and rep.all_even
        and rep.product_is_identity
        and rep.verdict.totally_real
    )
    return ok, rep.to_json(), None


def cmd_degenerate(args):
    from .family.degenerate import chebyshev_degenerate, initial_coefficients, pade_degenerate

    pade = pade_degenerate(args.n)
    cheb = chebyshev_degenerate(args.n)
    m0 = initial_coefficients(args.n)
    out = {
        "n": args.n,
        "pade": pade.to_json(),
        "chebyshev": cheb.to_json(),
        "initial": {
            "gamma": to_str(m0.gamma),
            "beta": [to_str(b) for b in m0.beta],
            "delta": [to_str(d) for d in m0.delta],
        },
    }
    return True, out, None


def cmd_deform(args):
    from .family.newton import newton_lift
    from .family.normalize import normalize

    t = time.time()
    state = newton_lift(args.n, args.prec)
    norm = normalize(state)
    out = state.to_json()
    out["normalized"] = {"parity": norm.parity, "residual_order": norm.residual_order}
    out["seconds"] = round(time.time() - t, 3)
    ok = state.certified_order >= state.precision and state.lambda_valuation() in (args.n, None)
    ok = ok and norm.residual_order >= state.precision
    return ok, out, None


def _pipeline(args, verify):
    from .family.pipeline import run_pipeline

    return run_pipeline(args.n, args.prec, verify=verify)


def cmd_algebraize(args):
    t = time.time()
    res = _pipeline(args, verify=False)
    out = {
        "n": args.n,
        "attempts": res.attempts,
        "reconstruction": res.reconstruction.to_json(),
        "model": model_to_json(res.model),
        "seconds": round(time.time() - t, 3),
    }
    return True, out, model_to_latex(res.model)


def cmd_verify(args):
    t = time.time()
    res = _pipeline(args, verify=True)
    v = res.verification
    out = {
        "n": args.n,
        "verification": v.to_json(),
        "lambda_valuation": res.state.lambda_valuation(),
        "model": model_to_json(res.model),
        "seconds": round(time.time() - t, 3),
    }
    ok = v.ok and res.state.lambda_valuation() == args.n
    return ok, out, model_to_latex(res.model)


def _replay(args):
    from .specialize import replay_certificate

    with open(args.replay) as fh:
        data = json.load(fh)
    body = data.get("result", data)
    cert = body.get("certificate", body)
    n = body.get("n", args.n)
    ok = bool(cert) and replay_certificate(cert, n)
    return ok, {"n": n, "replayed": args.replay, "certificate_valid": ok}, None


def cmd_specialize(args):
    from .specialize import an_specialization_check, replay_certificate, specialize

    if args.replay:
        return _replay(args)
    res = _pipeline(args, verify=True)
    rep = specialize(res.model, t0=None if args.t0 is None else Q(args.t0), count=args.count,
                     primes=_primes(args.primes), seed=args.seed)
    out = rep.to_json()
    out["an"] = an_specialization_check(args.n, rep.t0).to_json()
    out["certificate_replayed"] = replay_certificate(rep.certificate, args.n) if rep.certificate else False
    ok = rep.interval_totally_real and rep.evidence is not None and rep.evidence.irreducible
    return ok, out, None


def cmd_verify_paper_n6(args):
    from .family.pipeline import run_pipeline
    from .reference import compare_with_closed_forms, degree6_identity_sides

    res = run_pipeline(6, args.prec or 64)
    checks = compare_with_closed_forms(res.model)
    lhs, rhs = degree6_identity_sides()
    checks["standalone_identity"] = lhs == rhs
    checks["H_at_degenerate_point"] = res.model.lam(Q(-8, 5)) == 0
    return all(checks.values()), {"n": 6, "checks": checks}, model_to_latex(res.model)


COMMANDS = {
    "nielsen": (cmd_nielsen, "enumerate the Nielsen classes"),
    "braid-orbit": (cmd_braid_orbit, "braid monodromy of the Hurwitz curve"),
    "descent": (cmd_descent, "real-descent verdict for every class"),
    "an-lift": (cmd_an_lift, "degree-2n lift into the alternating group"),
    "degenerate": (cmd_degenerate, "the two degenerate covers and the initial point"),
    "deform": (cmd_deform, "Newton-Hensel lift to power series"),
    "algebraize": (cmd_algebraize, "rational-function model in T"),
    "verify": (cmd_verify, "exact verification of the reconstructed model"),
    "specialize": (cmd_specialize, "totally real specialization and S_n evidence"),
    "verify-paper-n6": (cmd_verify_paper_n6, "compare the degree-6 model with its closed forms"),
}


def build_parser():
    common = _common()
    parser = argparse.ArgumentParser(prog="hurwitz-family", description=__doc__, parents=[common])
    sub = parser.add_subparsers(dest="command", required=True)
    for name, (_, help_text) in COMMANDS.items():
        sp = sub.add_parser(name, help=help_text, parents=[common])
        if name == "nielsen":
            sp.add_argument("--oracle", action="store_true", help="cross-check against brute force (n = 6, 8)")
        if name == "specialize":
            sp.add_argument("--t0", default=None, help="parameter value (default: automatic search)")
            sp.add_argument("--count", type=int, default=5, help="number of interior probes")
            sp.add_argument("--replay", default=None, metavar="FILE",
                            help="re-check a certificate from a saved specialize --json report")
    return parser


def _scalar(v):
    return isinstance(v, (int, str, bool, float)) or v is None


def _human(obj, indent=0):
    pad = "  " * indent
    lines = []
    if isinstance(obj, dict):
        for k, v in obj.items():
            if isinstance(v, dict) and v or isinstance(v, list) and not all(_scalar(x) for x in v):
                lines.append(f"{pad}{k}:")
                lines.extend(_human(v, indent + 1))
            else:
                lines.append(f"{pad}{k}: {v}")
    elif isinstance(obj, list):
        for v in obj:
            if _scalar(v):
                lines.append(f"{pad}- {v}")
            else:
                lines.append(f"{pad}-")
                lines.extend(_human(v, indent + 1))
    else:
        lines.append(f"{pad}{obj}")
    return lines


def main(argv=None):
    args = build_parser().parse_args(argv)
    func = COMMANDS[args.command][0]
    try:
        ok, out, latex = func(args)
    except Exception as exc:  # reported, never silently swallowed
        ok, out, latex = False, {"error": type(exc).__name__, "message": str(exc)}, None
    payload = {"schema": SCHEMA, "command": args.command, "ok": ok, "result": out}
    if args.json:
        if args.latex and latex:
            payload["latex"] = latex
        print(json.dumps(payload, indent=2, sort_keys=False))
    else:
        print("\n".join(_human(payload)))
        if args.latex and latex:
            print(latex)
    return 0 if ok else 1


if __name__ == "__main__":
    sys.exit(main())
