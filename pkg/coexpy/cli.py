'''
coexpy command line: exact degrees and densities, extremal search, sampling and
limit experiments. Every output starts with a run manifest; exit status is 0 on
success, 1 on invalid input and 2 when a search budget ran out.
'''
import argparse
import csv
import hashlib
import json
import logging
import sys
from dataclasses import dataclass, field
from fractions import Fraction
from pathlib import Path

from . import __version__
from . import hypergraph as hg
from . import hypergraphon as hgon
from .config import Settings
from .errors import InputError, SizeError
from .limits import CONVERGENCE_COLUMNS, convergence_experiment, density_columns, render_value
from .penalty import (PenaltyParams, bernstein_approx, check_penalty_properties, find_bernstein_degree,
                      penalty_function, sup_error)
from .sampling import estimate_containment, sample_many
from .search import RATIO_COLUMNS, SearchProblem, brute_force, ratio_table, search
from .shadow import check_kk

__all__ = ["main", "build_parser", "RunManifest", "resolve_hypergraphon"]

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_INPUT = 1
EXIT_BUDGET = 2

# flags that never change an output byte
_UNRECORDED = {"command", "verbose", "jobs", "handler", "cache"}


class CoexParser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_INPUT, "{}: error: {}\n".format(self.prog, message))


@dataclass
class RunManifest:
    subcommand: str
    params: dict
    seed: int = None
    version: str = __version__
    inputs: dict = field(default_factory=dict)

    @classmethod
    def from_args(cls, args):
        params = {key: _jsonable(val) for key, val in sorted(vars(args).items()) if key not in _UNRECORDED}
        inputs = {}
        for key in ("graph", "f", "g", "family", "graphs", "hypergraphon"):
            for value in _as_list(getattr(args, key, None)):
                if value and Path(value).is_file():
                    inputs[value] = hashlib.sha256(Path(value).read_bytes()).hexdigest()
        return cls(args.command, params, getattr(args, "seed", None), __version__, inputs)

    def as_dict(self):
        return {"subcommand": self.subcommand, "params": self.params, "seed": self.seed,
                "version": self.version, "inputs": self.inputs}

    def comment_lines(self):
        return ["coexpy " + json.dumps(self.as_dict(), sort_keys=True)]

    def digest(self):
        return hashlib.sha256(json.dumps(self.as_dict(), sort_keys=True).encode()).hexdigest()


def _as_list(value):
    if value is None:
        return []
    return value if isinstance(value, list) else [value]


def _jsonable(value):
    if isinstance(value, Fraction):
        return str(value)
    if isinstance(value, Path):
        return str(value)
    if isinstance(value, list):
        return [_jsonable(v) for v in value]
    return value


def _emit_json(obj):
    print(json.dumps(obj, sort_keys=True, indent=2, default=_jsonable))


def _emit_comments(manifest):
    for line in manifest.comment_lines():
        print("# " + line)


def _emit_csv(manifest, columns, rows):
    _emit_comments(manifest)
    writer = csv.DictWriter(sys.stdout, fieldnames=columns, extrasaction="ignore", lineterminator="\n")
    writer.writeheader()
    for row in rows:
        writer.writerow({key: render_value(val) for key, val in row.items()})


def resolve_hypergraphon(source, k=None):
    '''
    builtin:directed-cycle, builtin:pair-coordinate, const:p (needs k) or a JSON file
    '''
    if source == "builtin:directed-cycle":
        return hgon.directed_cycle_hypergraphon()
    if source == "builtin:pair-coordinate":
        return hgon.pair_coordinate_hypergraphon()
    if source.startswith("const:"):
        if k is None:
            raise InputError("const:p hypergraphons need --k")
        try:
            p = Fraction(source[len("const:"):])
        except (ValueError, ZeroDivisionError):
            raise InputError("bad constant in {!r}".format(source))
        if not 0 <= p <= 1:
            raise InputError("constant must lie in [0, 1], got {}".format(p))
        return hgon.constant(k, p)
    return hgon.load_hypergraphon(Path(source))


def _settings(args):
    return Settings.from_env().override(max_nodes=getattr(args, "budget_nodes", None),
                                        max_seconds=getattr(args, "budget_seconds", None))


def _read_family(path):
    return hg.read_graphs(path) if path else []


def cmd_delta(args, manifest):
    G = hg.read_graph(args.graph)
    value = hg.min_positive_degree(G, args.l) if args.mode == "positive" else hg.min_degree(G, args.l)
    _emit_comments(manifest)
    print(value)
    return EXIT_OK


def cmd_density(args, manifest):
    F = hg.read_graph(args.f)
    _emit_comments(manifest)
    if args.g:
        t = hg.hom_density(F, hg.read_graph(args.g))
        print("{} {}".format(t, render_value(float(t))))
        return EXIT_OK
    W = resolve_hypergraphon(args.hypergraphon, k=F.k)
    if isinstance(W, hgon.StepHypergraphon):
        t = hgon.density(F, W)
        print("{} {}".format(t, render_value(float(t))))
    else:
        est = hgon.mc_density(F, W, args.trials, args.seed)
        print("{} {}".format(render_value(est.estimate), render_value(est.stderr)))
    return EXIT_OK


def _cache_path(settings, manifest):
    return Path(settings.cache_dir) / "solve" / (manifest.digest() + ".json")


def cmd_solve(args, manifest):
    settings = _settings(args)
    problem = SearchProblem(args.n, args.k, args.l, _read_family(args.family), args.mode, settings)
    cache = _cache_path(settings, manifest) if args.cache else None
    if cache is not None and cache.is_file():
        logger.info("Reusing cached result %s", cache)
        record = json.loads(cache.read_text())
        value, exact, stats = record["value"], record["exact"], record["stats"]
        witnesses = [hg.parse_graph(text) for text in record["witnesses"]]
    else:
        result = brute_force(problem) if args.brute else search(problem, jobs=args.jobs, disp=args.verbose > 0)
        value, exact, stats = result.value, result.exact, result.as_dict()["stats"]
        witnesses = result.witnesses
        if cache is not None and exact:
            cache.parent.mkdir(parents=True, exist_ok=True)
            cache.write_text(json.dumps({"value": value, "exact": exact, "stats": stats,
                                         "witnesses": [hg.serialize_graph(W) for W in witnesses]}))
    if args.witnesses:
        out = Path(args.witnesses)
        out.mkdir(parents=True, exist_ok=True)
        for i, W in enumerate(witnesses):
            hg.write_graph(out / "witness_{:03d}.txt".format(i), W, comments=manifest.comment_lines())
    _emit_json({"manifest": manifest.as_dict(), "value": value, "exact": exact, "stats": stats,
                "witnesses": len(witnesses)})
    return EXIT_OK if exact else EXIT_BUDGET


def cmd_ratios(args, manifest):
    if args.n_from > args.n_to:
        raise InputError("--n-from must not exceed --n-to")
    rows = ratio_table(args.k, args.l, _read_family(args.family), range(args.n_from, args.n_to + 1),
                       args.mode, settings=_settings(args), jobs=args.jobs)
    _emit_csv(manifest, RATIO_COLUMNS, rows)
    return EXIT_OK if all(row["exact"] for row in rows) else EXIT_BUDGET


def cmd_sample(args, manifest):
    W = resolve_hypergraphon(args.hypergraphon, k=args.k)
    graphs = sample_many(args.n, W, args.trials, args.seed, jobs=args.jobs)
    if args.trials == 1:
        sys.stdout.write(hg.serialize_graph(graphs[0], comments=manifest.comment_lines()))
        return EXIT_OK
    columns = ["trial", "edges", "edge_density"]
    if args.l is not None:
        columns += ["pos_ratio", "min_ratio"]
    rows = []
    for trial, G in enumerate(graphs):
        row = {"trial": trial, "edges": G.num_edges, "edge_density": G.num_edges / hg.binomial(G.n, G.k)}
        if args.l is not None:
            slots = hg.binomial(G.n - args.l, G.k - args.l)
            row["pos_ratio"] = hg.min_positive_degree(G, args.l) / slots
            row["min_ratio"] = hg.min_degree(G, args.l) / slots
        rows.append(row)
    _emit_csv(manifest, columns, rows)
    return EXIT_OK


def cmd_containment(args, manifest):
    F = hg.read_graph(args.f)
    W = resolve_hypergraphon(args.hypergraphon, k=F.k)
    est = estimate_containment(F, W, args.trials, args.seed)
    exact = hgon.density(F, W) if isinstance(W, hgon.StepHypergraphon) else None
    _emit_json({"manifest": manifest.as_dict(), "estimate": est.estimate, "stderr": est.stderr,
                "trials": est.trials, "exact": exact})
    return EXIT_OK


def cmd_converge(args, manifest):
    W = resolve_hypergraphon(args.hypergraphon, k=args.k)
    F_list = [hg.read_graph(path) for path in args.f]
    rows = convergence_experiment(W, args.l, sorted(args.n), args.trials, args.seed, F_list, jobs=args.jobs)
    _emit_csv(manifest, CONVERGENCE_COLUMNS + density_columns(F_list), rows)
    return EXIT_OK


def cmd_kk_check(args, manifest):
    print(json.dumps({"manifest": manifest.as_dict()}, sort_keys=True))
    for G in hg.read_graphs(args.graphs):
        print(json.dumps(check_kk(G, args.l).as_dict(), sort_keys=True))
    return EXIT_OK


def cmd_penalty(args, manifest):
    params = PenaltyParams(args.eps, args.delta, args.beta)
    L = penalty_function(params)
    if args.degree is None:
        degree, p, error = find_bernstein_degree(L, params.beta)
    else:
        degree = args.degree
        p = bernstein_approx(L, degree)
        error = sup_error(p, L)
    report = check_penalty_properties(p, params)
    out = {"manifest": manifest.as_dict(), "degree": degree, "sup_error": error, "properties": report.as_dict()}
    if args.coefficients:
        out["coefficients"] = [str(a) for a in p.coefficients]
    _emit_json(out)
    return EXIT_OK


def cmd_hypergraphon_validate(args, manifest):
    W = hgon.load_hypergraphon(Path(args.hypergraphon), strict=not args.symmetrize)
    report = hgon.validate(W)
    out = {"manifest": manifest.as_dict(), "ok": report.ok, "reason": report.reason, "k": W.k, "m": W.m,
           "edge_density": str(hgon.edge_density(W)),
           "min_positive_degree": {str(l): str(hgon.min_positive_degree(W, l)) for l in range(W.k)},
           "min_degree": {str(l): str(hgon.min_degree(W, l)) for l in range(W.k)}}
    if args.symmetrize:
        out["hypergraphon"] = hgon.dump_hypergraphon(W)
    _emit_json(out)
    return EXIT_OK


def build_parser():
    parser = CoexParser(prog="coexpy", description=__doc__, formatter_class=argparse.RawDescriptionHelpFormatter)
    parser.add_argument("-v", "--verbose", action="count", default=0, help="-v for progress, -vv for debug")
    parser.add_argument("--jobs", type=int, default=1, help="worker processes; outputs do not depend on it")
    sub = parser.add_subparsers(dest="command", required=True)

    def level_and_mode(p):
        p.add_argument("--l", type=int, required=True, help="size of the degree sets")
        p.add_argument("--mode", choices=["positive", "min"], required=True,
                       help="minimum positive l-degree or minimum l-degree")

    def budget(p):
        p.add_argument("--budget-nodes", type=int, help="stop after this many search nodes")
        p.add_argument("--budget-seconds", type=float, help="stop after this many seconds")

    p = sub.add_parser("delta", help="minimum (positive) l-degree of a graph")
    p.add_argument("--graph", required=True)
    level_and_mode(p)
    p.set_defaults(handler=cmd_delta)

    p = sub.add_parser("density", help="homomorphism density t(F, G) or t(F, W)")
    p.add_argument("--f", required=True)
    target = p.add_mutually_exclusive_group(required=True)
    target.add_argument("--g")
    target.add_argument("--hypergraphon", help="JSON file, const:p or builtin:<name>")
    p.add_argument("--trials", type=int, default=10**5, help="Monte Carlo trials for analytic hypergraphons")
    p.add_argument("--seed", type=int, default=0)
    p.set_defaults(handler=cmd_density)

    p = sub.add_parser("solve", help="exact co-ex value with extremal witnesses (JSON)")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--family", help="forbidden graphs separated by '---' lines")
    level_and_mode(p)
    budget(p)
    p.add_argument("--witnesses", help="directory for witness files")
    p.add_argument("--brute", action="store_true", help="enumerate all edge sets instead")
    p.add_argument("--cache", action="store_true", help="reuse results under $COEXPY_CACHE_DIR")
    p.set_defaults(handler=cmd_solve)

    p = sub.add_parser("ratios", help="value / C(n-l, k-l) for a range of n (CSV: " + ",".join(RATIO_COLUMNS) + ")")
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--family")
    p.add_argument("--n-from", type=int, required=True)
    p.add_argument("--n-to", type=int, required=True)
    level_and_mode(p)
    budget(p)
    p.set_defaults(handler=cmd_ratios)

    p = sub.add_parser("sample", help="W-random graphs: graph text for one trial, CSV of statistics otherwise")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--seed", type=int, required=True)
    p.add_argument("--trials", type=int, default=1)
    p.add_argument("--hypergraphon", required=True, help="JSON file, const:p or builtin:<name>")
    p.add_argument("--k", type=int, help="uniformity for const:p")
    p.add_argument("--l", type=int, help="add degree ratio columns for this l")
    p.set_defaults(handler=cmd_sample)

    p = sub.add_parser("containment", help="Monte Carlo estimate of t(F, W) from sampled graphs")
    p.add_argument("--f", required=True)
    p.add_argument("--hypergraphon", required=True)
    p.add_argument("--trials", type=int, default=10**5)
    p.add_argument("--seed", type=int, required=True)
    p.set_defaults(handler=cmd_containment)

    p = sub.add_parser("converge", help="CSV columns: " + ",".join(CONVERGENCE_COLUMNS) + ",t_F<i>")
    p.add_argument("--hypergraphon", required=True)
    p.add_argument("--k", type=int, help="uniformity for const:p")
    p.add_argument("--l", type=int, required=True)
    p.add_argument("--n", type=int, nargs="+", required=True)
    p.add_argument("--trials", type=int, required=True)
    p.add_argument("--seed", type=int, required=True)
    p.add_argument("--f", nargs="*", default=[], help="graphs whose densities are tracked")
    p.set_defaults(handler=cmd_converge)

    p = sub.add_parser("kk-check", help="edge-count bound report per graph (JSON lines)")
    p.add_argument("--graphs", required=True)
    p.add_argument("--l", type=int, required=True)
    p.set_defaults(handler=cmd_kk_check)

    p = sub.add_parser("penalty", help="Bernstein approximation of the penalty function")
    p.add_argument("--eps", type=Fraction, required=True)
    p.add_argument("--delta", type=Fraction, required=True)
    p.add_argument("--beta", type=Fraction, required=True)
    p.add_argument("--degree", type=int, help="fixed degree instead of the doubling search")
    p.add_argument("--coefficients", action="store_true", help="print exact monomial coefficients")
    p.set_defaults(handler=cmd_penalty)

    p = sub.add_parser("hypergraphon-validate", help="check a step hypergraphon file")
    p.add_argument("--hypergraphon", required=True)
    p.add_argument("--symmetrize", action="store_true", help="symmetrize instead of rejecting")
    p.set_defaults(handler=cmd_hypergraphon_validate)
    return parser


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    logging.basicConfig(level=[logging.WARNING, logging.INFO, logging.DEBUG][min(args.verbose, 2)],
                        stream=sys.stderr, format="%(levelname)s %(name)s: %(message)s")
    try:
        manifest = RunManifest.from_args(args)
        return args.handler(args, manifest)
    except (InputError, SizeError, OSError) as err:
        print("coexpy {}: error: {}".format(args.command, err), file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
