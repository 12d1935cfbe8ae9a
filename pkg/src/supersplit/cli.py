"""Command line interface: JSON on stdout, summaries on stderr with --verbose.

Exit codes: 0 for any completed analysis, 1 for input errors, 2 when an
internal consistency check fails.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import List, Optional

from . import analysis, cohomology, models
from .algebra import render
from .errors import SupersplitError
from .jobfile import load_job, load_job_file
from .models import ModelSpec


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        print(f"{self.prog}: error: {message}", file=sys.stderr)
        sys.exit(1)


def _ints(text: str) -> List[int]:
    body = text.strip().strip("[]")
    if not body:
        return []
    try:
        return [int(v) for v in body.split(",")]
    except ValueError:
        raise SupersplitError(f"expected a comma-separated list of integers, got {text!r}") from None


def _add_model_flags(p, suffix=""):
    p.add_argument(f"--m{suffix}", type=int, help="even dimension m")
    p.add_argument(f"--n{suffix}", type=int, help="number of odd coordinates n")
    p.add_argument(f"--a{suffix}", help="even weights, e.g. 1,1,2 (default all 1)")
    p.add_argument(f"--b{suffix}", help="odd weights, e.g. 1,2 (default all 1)")


def _spec_from_flags(args, suffix="") -> Optional[ModelSpec]:
    m = getattr(args, f"m{suffix}")
    if m is None:
        return None
    n = getattr(args, f"n{suffix}")
    a = getattr(args, f"a{suffix}")
    b = getattr(args, f"b{suffix}")
    a = _ints(a) if a else None
    b = _ints(b) if b else None
    if n is None:
        n = len(b) if b is not None else 0
    return ModelSpec.create(m, n, a, b)


def _specs(args):
    """(spec, spec2) from a job file or from flags."""
    if getattr(args, "job", None):
        jf = load_job_file(args.job)
        return jf.spec, jf.spec2, jf
    spec = _spec_from_flags(args)
    if spec is None:
        raise SupersplitError("give a job file or --m/--n/--b")
    spec2 = _spec_from_flags(args, "2") if hasattr(args, "m2") else None
    return spec, spec2, None


def _log(args, text):
    if args.verbose:
        print(text, file=sys.stderr)


# ---------------------------------------------------------------------------
# subcommands


def cmd_model(args):
    spec, spec2, _ = _specs(args)
    if spec2 is not None:
        out = {"model": spec.to_json(), "model2": spec2.to_json(),
               "product": models.product_model(spec, spec2).to_json()}
        _log(args, f"product {spec.describe()} x {spec2.describe()}")
        return out
    data = models.split_model(spec)
    _log(args, f"{spec.describe()} is split over {data.reduced} with odd cotangent "
               + " + ".join(f"O({t})" for t in data.odd_cotangent))
    return {"model": spec.to_json(), "split_model": data.to_json(), "positive": spec.is_positive,
            "odd_dominates_even": spec.eq43}


def cmd_cohomology(args):
    if args.sheaf == "omega" and args.p is None:
        raise SupersplitError("--sheaf omega needs --p")
    p = args.p or 0
    if args.table:
        ks = range(args.kmin, args.kmax + 1)
        out = cohomology.cohomology_table(args.m, ks, args.sheaf, p)
        _log(args, f"{len(out['entries'])} entries")
        return out
    if args.q is None or args.k is None:
        raise SupersplitError("give --q and --k, or --table")
    if args.sheaf == "line":
        dim = cohomology.h_line(args.m, args.q, args.k)
    elif args.sheaf == "tangent":
        dim = cohomology.h_tangent(args.m, args.q, args.k)
    else:
        dim = cohomology.h_omega(args.m, p, args.q, args.k)
    out = {"m": args.m, "sheaf": args.sheaf, "q": args.q, "k": args.k, "dim": dim}
    if args.sheaf == "omega":
        out["p"] = p
    _log(args, f"h^{args.q} = {dim}")
    return out


def cmd_normality(args):
    spec, _, jf = _specs(args)
    d = args.d
    if d is None and jf is not None and jf.has_variety:
        job, _ = load_job(args.job)
        degs = job.degrees()
        if len(degs) != 1:
            raise SupersplitError("normality needs a hypersurface or an explicit --d")
        d = degs[0][0]
    if d is None:
        raise SupersplitError("give --d")
    if not spec.unit_even:
        raise SupersplitError("normality certificates need unit even weights")
    cert = cohomology.normality_certificate(spec.m, spec.b, d)
    _log(args, f"normality of degree-{d} hypersurfaces in {spec.describe()}: {cert.overall}")
    return cert.to_json()


def _analysis_report(job: analysis.VarietyJob) -> dict:
    order = analysis.homogeneous_order(job)
    out = {
        "job": job.to_json(),
        "homogeneously_nonreduced": analysis.is_homogeneously_nonreduced(job),
        "homogeneous_order": order,
        "quadric": analysis.is_quadric(job).to_json(),
    }
    if order != analysis.REDUCED and job.is_hypersurface:
        sec = analysis.extract_normal_section(job.generators[0], job)
        out["normal_section"] = sec.to_json()
        memb = analysis.jacobian_membership(sec, job)
        out["jacobian_membership"] = None if memb is None else [
            {"I": [i + 1 for i in I], "coefficients": {f"x{s + 1}": render(c) for s, c in cs.items()}}
            for I, cs in memb.items()
        ]
    out["verdict"] = analysis.verdict(job).to_json()
    return out


def cmd_analyze(args):
    job, _ = load_job(args.job)
    out = _analysis_report(job)
    _log(args, f"verdict: {out['verdict']['outcome']}")
    for r in out["verdict"]["reasons"]:
        _log(args, f"  [{r['rule']}] {r['cite']}: {r['detail']}")
    return out


def cmd_search(args):
    job, jf = load_job(args.job)
    max_order = args.max_order if args.max_order is not None else jf.max_order
    res = analysis.splitting_search(job, max_order)
    _log(args, f"search: {type(res).__name__}")
    return res.to_json()


def cmd_segre(args):
    spec, spec2, _ = _specs(args)
    if spec2 is None:
        raise SupersplitError("segre needs two models ([model2] or --m2/--n2/--b2)")
    out = models.segre_data(spec, spec2).to_json()
    if all(b == 1 for b in spec.b + spec2.b):
        out["coordinate_map"] = models.segre_coordinate_map(spec.m, spec.n, spec2.m, spec2.n).to_json()
    _log(args, f"P^{{{out['m2']}|{out['n2']}}}")
    return out


def cmd_charts(args):
    spec, _, _ = _specs(args)
    ne = spec.n_even
    out = {"model": spec.to_json(), "transitions": []}
    for mu in range(ne):
        for nu in range(ne):
            if mu != nu:
                t = models.chart_transition(spec, mu, nu)
                out["transitions"].append({"from": mu + 1, "to": nu + 1, **t.to_json()})
    if args.check_cocycles:
        results = models.check_all_cocycles(spec)
        fails = [[i + 1 for i in tri] for tri, ok in results if not ok]
        out["cocycles"] = {"checked": len(results), "all_pass": not fails, "failures": fails}
        _log(args, f"{len(results)} triples checked, {len(fails)} failures")
    return out


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="supersplit", description="Splitting analysis of projective superspace varieties.")
    p.add_argument("--verbose", "-v", action="store_true", help="human-readable summary on stderr")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    s = sub.add_parser("model", help="split-model data of P^{m|n}(a|b)")
    s.add_argument("job", nargs="?")
    _add_model_flags(s)
    _add_model_flags(s, "2")
    s.set_defaults(func=cmd_model)

    s = sub.add_parser("cohomology", help="sheaf cohomology dimensions on P^m")
    s.add_argument("--m", type=int, required=True)
    s.add_argument("--q", type=int)
    s.add_argument("--k", type=int)
    s.add_argument("--table", action="store_true")
    s.add_argument("--sheaf", choices=["line", "tangent", "omega"], default="line")
    s.add_argument("--p", type=int, help="form degree for --sheaf omega")
    s.add_argument("--kmin", type=int, default=-5)
    s.add_argument("--kmax", type=int, default=5)
    s.set_defaults(func=cmd_cohomology)

    s = sub.add_parser("normality", help="normality certificate for degree-d hypersurfaces")
    s.add_argument("job", nargs="?")
    _add_model_flags(s)
    s.add_argument("--d", type=int)
    s.set_defaults(func=cmd_normality)

    s = sub.add_parser("analyze", help="full splitting verdict for a job file")
    s.add_argument("job")
    s.set_defaults(func=cmd_analyze)

    s = sub.add_parser("search", help="constructive splitting search")
    s.add_argument("job")
    s.add_argument("--max-order", type=int)
    s.set_defaults(func=cmd_search)

    s = sub.add_parser("segre", help="super-Segre embedding data")
    s.add_argument("job", nargs="?")
    _add_model_flags(s)
    _add_model_flags(s, "2")
    s.set_defaults(func=cmd_segre)

    s = sub.add_parser("charts", help="chart transitions (unit even weights)")
    s.add_argument("job", nargs="?")
    _add_model_flags(s)
    s.add_argument("--check-cocycles", action="store_true")
    s.set_defaults(func=cmd_charts)
    return p


def main(argv: Optional[List[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        out = args.func(args)
    except SupersplitError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except AssertionError as exc:
        print(f"internal consistency check failed: {exc}", file=sys.stderr)
        return 2
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    json.dump(out, sys.stdout, indent=2)
    sys.stdout.write("\n")
    return 0


if __name__ == "__main__":
    sys.exit(main())
