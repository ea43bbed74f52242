"""``cone-spectra`` command line.

Every subcommand prints (or writes with ``--out``) one JSON document that
embeds the run configuration and the library version.  Exit codes: 0 on
success, 2 when a checked statement is violated, 1 on bad input.
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import asdict, dataclass, field
from pathlib import Path

from . import __version__
from .construct import maximal_construction
from .degseq import classify, star_chain
from .enumeration import DEFAULT_LIMIT, counterexample_search, oracle_maximal, realize_all
from .errors import ConeSpectraError
from .graph import LabeledGraph, from_graph6, join_cone, to_dot, to_graph6
from .report import Verdict, _plain
from .spectral import DEFAULT_MARGIN, DEFAULT_TOL, eigen_equation_residual, theta
from .verify import THEOREMS, WEIGHT_TOL, verify_theorem

EXIT_OK, EXIT_USAGE, EXIT_VIOLATED = 0, 1, 2


class UsageError(Exception):
    pass


@dataclass
class RunConfig:
    command: str
    inputs: dict = field(default_factory=dict)
    out: str | None = None
    alphas: list = field(default_factory=list)
    eigen_tol: float = DEFAULT_TOL
    weight_tol: float = WEIGHT_TOL
    margin: float = DEFAULT_MARGIN
    oracle_limit: int = DEFAULT_LIMIT
    seed: int = 0

    def __post_init__(self):
        for name in ("eigen_tol", "weight_tol", "margin"):
            if not getattr(self, name) > 0:
                raise UsageError(f"{name} must be positive")
        if any(not a >= 0 for a in self.alphas):
            raise UsageError("alpha values must be non-negative")


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def _load_json(text: str):
    """Inline JSON, or a path to a JSON file."""
    path = Path(text)
    if path.is_file():
        text = path.read_text()
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise UsageError(f"cannot parse {text[:40]!r} as JSON: {exc.msg}") from None


def _sequence(text: str, key: str = "pi") -> list[int]:
    data = _load_json(text)
    if isinstance(data, dict):
        data = data.get(key, data.get("pi"))
    if not isinstance(data, list) or not all(isinstance(x, int) for x in data):
        raise UsageError(f"expected a JSON list of integers for {key}")
    return data


def _graph(text: str) -> LabeledGraph:
    path = Path(text)
    raw = path.read_text().strip() if path.is_file() else text.strip()
    if raw.startswith("{"):
        return LabeledGraph.from_json(raw)
    return from_graph6(raw.splitlines()[0])


def _alpha(text: str) -> float:
    try:
        a = float(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"alpha must be a number (got {text!r})") from None
    if not a >= 0:
        raise argparse.ArgumentTypeError("alpha must be non-negative")
    return a


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="cone-spectra", description=__doc__.splitlines()[0])
    p.add_argument("--version", action="version", version=__version__)
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def common(sp, alpha=False, out=True):
        if alpha:
            sp.add_argument("--alpha", type=_alpha, default=0.0)
        if out:
            sp.add_argument("--out", help="write the JSON report here instead of stdout")
        sp.add_argument("--tol", type=float, default=DEFAULT_TOL, help="eigen residual tolerance")
        sp.add_argument("--margin", type=float, default=DEFAULT_MARGIN)
        sp.add_argument("--weight-tol", type=float, default=WEIGHT_TOL)
        sp.add_argument("--seed", type=int, default=0)

    sp = sub.add_parser("validate", help="classify a cone degree sequence")
    sp.add_argument("--pi", required=True)
    sp.add_argument("--t", type=int, required=True)
    sp.add_argument("--c", type=int, required=True)
    common(sp)

    sp = sub.add_parser("construct", help="build the extremal graph")
    sp.add_argument("--pi", required=True)
    sp.add_argument("--t", type=int, required=True)
    sp.add_argument("--c", type=int, required=True)
    sp.add_argument("--format", choices=("json", "dot", "graph6"), default="json")
    common(sp)

    sp = sub.add_parser("theta", help="Perron pair of A + alpha D")
    sp.add_argument("--graph", required=True, help="graph JSON or graph6 (inline or file)")
    common(sp, alpha=True)

    sp = sub.add_parser("chain", help="star-majorization chain between two sequences")
    sp.add_argument("--pi", required=True)
    sp.add_argument("--pi-prime", required=True)
    sp.add_argument("--t", type=int, required=True)
    sp.add_argument("--c", type=int, required=True)
    common(sp)

    sp = sub.add_parser("verify-theorem", help="sweep one theorem over all sequences")
    sp.add_argument("--id", required=True, choices=THEOREMS)
    sp.add_argument("--n", type=int, required=True)
    sp.add_argument("--t", type=int, required=True)
    sp.add_argument("--oracle-limit", type=int, default=DEFAULT_LIMIT)
    common(sp, alpha=True)

    sp = sub.add_parser("enumerate", help="all connected realizations, as graph6 lines")
    sp.add_argument("--pi-star", required=True)
    sp.add_argument("--limit", type=int, default=DEFAULT_LIMIT)
    common(sp)

    sp = sub.add_parser("oracle", help="brute-force maximal graph of a family")
    sp.add_argument("--pi", required=True)
    sp.add_argument("--t", type=int, default=0)
    sp.add_argument("--c", type=int, default=None,
                    help="cyclomatic number (default: inferred from the sum)")
    sp.add_argument("--limit", type=int, default=DEFAULT_LIMIT)
    common(sp, alpha=True)

    sp = sub.add_parser("search-counterexample",
                        help="star pairs whose maxima fail to increase (any c)")
    sp.add_argument("--n", type=int, required=True)
    sp.add_argument("--t", type=int, default=0)
    sp.add_argument("--c", type=int, required=True)
    sp.add_argument("--limit", type=int, default=DEFAULT_LIMIT)
    common(sp, alpha=True)
    return p


def _config(args) -> RunConfig:
    skip = {"command", "out", "alpha", "tol", "weight_tol", "margin", "seed",
            "oracle_limit", "limit"}
    inputs = {k: v for k, v in vars(args).items() if k not in skip}
    alphas = [args.alpha] if hasattr(args, "alpha") else []
    limit = getattr(args, "oracle_limit", getattr(args, "limit", DEFAULT_LIMIT))
    return RunConfig(args.command, inputs, getattr(args, "out", None), alphas,
                     args.tol, args.weight_tol, args.margin, limit, args.seed)


def _infer_c(pi: list[int], t: int) -> int:
    n = len(pi)
    reduced = [d - t for d in pi[t:]]
    return sum(reduced) // 2 - (n - t) + 1


def _run(cfg: RunConfig, args) -> tuple[dict, int, str | None]:
    """(report body, exit code, optional raw text output)."""
    cmd = cfg.command
    alpha = cfg.alphas[0] if cfg.alphas else 0.0
    if cmd == "validate":
        cds = classify(_sequence(args.pi), args.t, args.c)
        return {"sequence": cds, "reduced": list(cds.reduced)}, EXIT_OK, None
    if cmd == "construct":
        cds = classify(_sequence(args.pi), args.t, args.c)
        lc = maximal_construction(cds)
        cone = join_cone(cds.t, lc.graph)
        body = {"sequence": cds, "construction": lc, "cone_graph": cone}
        raw = None
        if args.format == "dot":
            raw = to_dot(cone.full, "G")
        elif args.format == "graph6":
            raw = to_graph6(cone.full) + "\n"
        return body, EXIT_OK, raw
    if cmd == "theta":
        g = _graph(args.graph)
        res = theta(g, alpha, cfg.eigen_tol)
        body = {"theta": res.theta, "perron": res,
                "eigen_residual": eigen_equation_residual(g, alpha, res)}
        return body, EXIT_OK, None
    if cmd == "chain":
        a = classify(_sequence(args.pi), args.t, args.c)
        b = classify(_sequence(args.pi_prime, "pi_prime"), args.t, args.c)
        return {"chain": star_chain(a, b)}, EXIT_OK, None
    if cmd == "verify-theorem":
        sweep = verify_theorem(args.id, args.n, args.t, alpha, cfg.oracle_limit, cfg.margin)
        code = EXIT_VIOLATED if sweep.verdict is Verdict.VIOLATED else EXIT_OK
        return {"sweep": sweep}, code, None
    if cmd == "enumerate":
        rs = realize_all(_sequence(args.pi_star, "pi_star"), args.limit)
        lines = "".join(to_graph6(g) + "\n" for g in rs)
        return {"pi_star": list(rs.pi_star), "count": len(rs),
                "graph6": [to_graph6(g) for g in rs]}, EXIT_OK, lines
    if cmd == "oracle":
        pi = _sequence(args.pi)
        c = args.c if args.c is not None else _infer_c(pi, args.t)
        cds = classify(pi, args.t, c)
        best = oracle_maximal(cds, alpha, args.limit, cfg.margin, cfg.eigen_tol)
        return {"sequence": cds, "cone_graph": best.graph, "perron": best.perron,
                "unique": best.unique, "gap": best.gap, "members": best.members}, EXIT_OK, None
    if cmd == "search-counterexample":
        reps = counterexample_search(args.n, args.t, args.c, alpha, args.limit, cfg.margin)
        code = EXIT_VIOLATED if any(r.verdict is Verdict.VIOLATED for r in reps) else EXIT_OK
        return {"hits": reps, "violations": sum(not r.ok for r in reps)}, code, None
    raise UsageError(f"unknown command {cmd!r}")


def dispatch(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        cfg = _config(args)
        body, code, raw = _run(cfg, args)
    except (UsageError, ConeSpectraError, ValueError, OSError) as exc:
        print(f"cone-spectra {args.command}: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    doc = _plain({"version": __version__, "config": asdict(cfg), "result": body})
    text = json.dumps(doc, sort_keys=True, indent=2) + "\n"
    if cfg.out:
        if raw is not None:
            Path(cfg.out).write_text(raw)
            Path(cfg.out + ".json").write_text(text)
        else:
            Path(cfg.out).write_text(text)
    elif raw is not None:
        sys.stdout.write(raw)
    else:
        sys.stdout.write(text)
    return code


def main() -> None:
    sys.exit(dispatch())


if __name__ == "__main__":
    main()
