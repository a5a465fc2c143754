"""Command-line interface: tokenize, build, curve, simulate, surrogate, fit.

Every output file starts with ``# key=value`` comment lines recording the
full run specification, seed, and tool version, so any artifact can be
reproduced from its own header.  Exit codes: 0 success, 2 invalid arguments,
3 I/O error, 4 insufficient data.
"""

from __future__ import annotations

import argparse
import sys
from concurrent.futures import ProcessPoolExecutor

from . import __version__
from .aspl import (
    DEFAULT_EXACT_THRESHOLD,
    DEFAULT_SAMPLE_SOURCES,
    AsplCurve,
    average_curves,
    default_schedule,
    track_growth,
)
from .errors import InsufficientDataError
from .fits import (
    alpha_from_delta,
    fit_er_approx,
    fit_heaps,
    fronczak_limit,
)
from .graph import Graph, fit_degree_exponent
from .kernels import backend_name
from .models import DmParams, HybridParams, ShParams, dm_grow, hybrid_grow, sh_grow
from .pipeline import curve_for_text, piece_ensemble, surrogate_comparison
from .tokens import tokenize_file

SH_DEFAULT_STEP_CAP = 10_000_000

EXIT_OK = 0
EXIT_USAGE = 2
EXIT_IO = 3
EXIT_DATA = 4


# ---------------------------------------------------------------------------
# Headers
# ---------------------------------------------------------------------------

def header_lines(spec: dict) -> list[str]:
    lines = [f"tool=wordpath {__version__}"]
    for key, value in spec.items():
        if value is not None:
            lines.append(f"{key}={value}")
    return lines


def parse_header(path) -> dict:
    """Read the leading ``# key=value`` comment block of an output file."""
    out: dict[str, str] = {}
    with open(path, encoding="utf-8") as fh:
        for raw in fh:
            if not raw.startswith("#"):
                break
            body = raw[1:].strip()
            if "=" in body:
                key, value = body.split("=", 1)
                out[key.strip()] = value.strip()
    return out


def _write_with_header(path, spec: dict, body_writer) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        for line in header_lines(spec):
            fh.write(f"# {line}\n")
        body_writer(fh)


def _write_curve(path, spec: dict, curve: AsplCurve) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        curve.to_csv(fh, header_lines=header_lines(spec))


def _write_edges(path, spec: dict, g: Graph) -> None:
    def body(fh):
        for u, v in g.edges():
            a, b = (u, v) if u < v else (v, u)
            fh.write(f"{a} {b}\n")

    _write_with_header(path, spec, body)


def _write_report(out, spec: dict, values: dict) -> None:
    lines = [f"# {line}" for line in header_lines(spec)]
    for key, value in values.items():
        if isinstance(value, float):
            lines.append(f"{key}={value:.6g}")
        else:
            lines.append(f"{key}={value}")
    text = "\n".join(lines) + "\n"
    if out:
        with open(out, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def read_edge_list(path) -> Graph:
    g = Graph()
    with open(path, encoding="utf-8") as fh:
        for raw in fh:
            line = raw.strip()
            if not line or line.startswith("#"):
                continue
            i_str, j_str = line.split()
            i, j = int(i_str), int(j_str)
            while g.n_nodes <= max(i, j):
                g.add_node()
            g.add_edge(i, j)
    return g


# ---------------------------------------------------------------------------
# Schedules
# ---------------------------------------------------------------------------

def parse_schedule(spec: str, n_max: int) -> list[int]:
    """``default``, ``default:<nmax>``, or a comma list of node counts."""
    if spec == "default":
        return default_schedule(n_max)
    if spec.startswith("default:"):
        return default_schedule(int(spec.split(":", 1)[1]))
    return [int(x) for x in spec.split(",") if x.strip()]


# ---------------------------------------------------------------------------
# Commands
# ---------------------------------------------------------------------------

def cmd_tokenize(args) -> int:
    ts = tokenize_file(args.input, max_tokens=args.max_tokens)
    spec = _spec(args, command="tokenize", input=args.input,
                 max_tokens=args.max_tokens, tau=ts.n_tokens, v=ts.n_distinct)
    if args.tokens_out:
        _write_with_header(args.tokens_out, spec,
                           lambda fh: [fh.write(t + "\n") for t in ts.tokens])
    if args.vocab_out:
        _write_with_header(
            args.vocab_out, spec,
            lambda fh: [fh.write(f"{i}\t{t}\n")
                        for t, i in sorted(ts.vocab.items(), key=lambda kv: kv[1])])
    if not args.tokens_out and not args.vocab_out:
        print(f"tau={ts.n_tokens} distinct={ts.n_distinct}")
    return EXIT_OK


def cmd_build(args) -> int:
    from .pipeline import build_adjacency

    ts = tokenize_file(args.input, max_tokens=args.max_tokens)
    if ts.n_distinct < 2:
        raise InsufficientDataError("input has fewer than 2 distinct words")
    tape = build_adjacency(ts)
    g = tape.graph_at(args.max_n) if args.max_n else tape.replay()
    spec = _spec(args, command="build", input=args.input,
                 max_tokens=args.max_tokens, max_n=args.max_n,
                 n=g.n_nodes, e=g.n_edges)
    _write_edges(args.edges_out, spec, g)
    if args.vocab_out:
        vocab = {t: i for t, i in ts.vocab.items() if i < g.n_nodes}
        _write_with_header(
            args.vocab_out, spec,
            lambda fh: [fh.write(f"{i}\t{t}\n")
                        for t, i in sorted(vocab.items(), key=lambda kv: kv[1])])
    return EXIT_OK


def cmd_curve(args) -> int:
    ts = tokenize_file(args.input, max_tokens=args.max_tokens)
    if ts.n_distinct < 2:
        raise InsufficientDataError("input has fewer than 2 distinct words")
    schedule = parse_schedule(args.schedule, ts.n_distinct)
    spec = _spec(args, command="curve", input=args.input, pieces=args.pieces,
                 max_tokens=args.max_tokens, schedule=args.schedule,
                 exact_threshold=args.exact_threshold,
                 sample_sources=args.sample_sources, seed=args.seed)
    if args.pieces and args.pieces >= 2:
        _, curve = piece_ensemble(ts, args.pieces, schedule,
                                  exact_threshold=args.exact_threshold,
                                  sample_sources=args.sample_sources,
                                  seed=args.seed, jobs=args.jobs)
    else:
        curve = curve_for_text(ts, schedule,
                               exact_threshold=args.exact_threshold,
                               sample_sources=args.sample_sources, seed=args.seed)
    spec["aspl_mode"] = curve.mode
    _write_curve(args.out, spec, curve)
    return EXIT_OK


def _model_params(args):
    model = args.model
    if model == "dm":
        return DmParams(m=args.m, c0=args.c0, alpha=args.alpha, n0=args.n0,
                        rewire_r0=args.rewire_r0, rewire_rho=args.rewire_rho)
    if model == "sh":
        return ShParams(p0=args.p0, mu=args.mu, n0=args.sh_n0)
    if model == "sh-nonlinear":
        if args.c1 is None or args.eta is None:
            raise ValueError("sh-nonlinear needs --c1 and --eta")
        return ShParams(p0=args.p0, mu=args.mu, c1=args.c1, eta=args.eta,
                        n0=args.sh_n0)
    if model == "hybrid":
        dm = DmParams(m=args.m, c0=args.c0, alpha=args.alpha, n0=args.n0)
        return HybridParams(dm=dm, p0=args.p0, mu=args.mu)
    raise ValueError(f"unknown model {model!r}")


def _grow_tape(model, params, steps, stop_at_n, seed):
    if model == "dm":
        return dm_grow(params, steps, seed)
    if model in ("sh", "sh-nonlinear"):
        return sh_grow(params, steps, seed, stop_at_n=stop_at_n)
    return hybrid_grow(params, steps, seed)


def _simulate_one(packed):
    (model, params, steps, stop_at_n, seed, schedule,
     exact_threshold, sample_sources) = packed
    tape = _grow_tape(model, params, steps, stop_at_n, seed)
    return track_growth(tape, schedule, exact_threshold=exact_threshold,
                        sample_sources=sample_sources, seed=seed)


def cmd_simulate(args) -> int:
    params = _model_params(args)
    if args.steps is None and args.target_n is None:
        raise ValueError("simulate needs --steps or --target-n")
    stop_at_n = None
    if args.target_n is not None:
        if args.model in ("dm", "hybrid"):
            n0 = params.n0 if args.model == "dm" else params.dm.n0
            if args.target_n <= n0:
                raise ValueError(f"--target-n must exceed the seed size {n0}")
            steps = args.target_n - n0
        else:
            stop_at_n = args.target_n
            steps = args.steps if args.steps is not None else SH_DEFAULT_STEP_CAP
        n_max = args.target_n
    else:
        steps = args.steps
        if args.model in ("dm", "hybrid"):
            n0 = params.n0 if args.model == "dm" else params.dm.n0
            n_max = steps + n0
        else:
            n_max = steps + params.n0
    schedule = parse_schedule(args.schedule, n_max)

    spec = _spec(args, command="simulate", model=args.model, steps=steps,
                 target_n=args.target_n, realizations=args.realizations,
                 seed=args.seed, schedule=args.schedule,
                 exact_threshold=args.exact_threshold,
                 sample_sources=args.sample_sources,
                 **_params_spec(args.model, params))

    if args.curve_out:
        work = [(args.model, params, steps, stop_at_n, args.seed + r, schedule,
                 args.exact_threshold, args.sample_sources)
                for r in range(args.realizations)]
        if args.jobs > 1 and len(work) > 1:
            with ProcessPoolExecutor(max_workers=args.jobs) as pool:
                curves = list(pool.map(_simulate_one, work))
        else:
            curves = [_simulate_one(w) for w in work]
        mean = average_curves(curves)
        spec["aspl_mode"] = mean.mode
        _write_curve(args.curve_out, spec, mean)

    if args.edges_out or args.events_out:
        tape = _grow_tape(args.model, params, steps, stop_at_n, args.seed)
        if args.events_out:
            _write_with_header(args.events_out, spec, tape.to_text)
        if args.edges_out:
            _write_edges(args.edges_out, spec, tape.replay())
    return EXIT_OK


def cmd_surrogate(args) -> int:
    ts = tokenize_file(args.input, max_tokens=args.max_tokens)
    if ts.n_distinct < 2:
        raise InsufficientDataError("input has fewer than 2 distinct words")
    schedule = parse_schedule(args.schedule, ts.n_distinct)
    original, surrogate = surrogate_comparison(
        ts, args.realizations, args.seed, schedule, pieces=args.pieces,
        exact_threshold=args.exact_threshold,
        sample_sources=args.sample_sources, jobs=args.jobs)
    spec = _spec(args, command="surrogate", input=args.input,
                 realizations=args.realizations, pieces=args.pieces,
                 max_tokens=args.max_tokens, schedule=args.schedule,
                 exact_threshold=args.exact_threshold,
                 sample_sources=args.sample_sources, seed=args.seed)
    _write_curve(args.original_out, dict(spec, curve="original"), original)
    _write_curve(args.surrogate_out, dict(spec, curve="surrogate"), surrogate)
    return EXIT_OK


def cmd_fit_heaps(args) -> int:
    ts = tokenize_file(args.input)
    tau_max = args.tau_max if args.tau_max else ts.n_tokens
    fit = fit_heaps(ts, (args.tau_min, tau_max), n_points=args.points)
    report = fit.report()
    report["alpha_from_delta"] = alpha_from_delta(min(fit.delta, 1.0))
    spec = _spec(args, command="fit-heaps", input=args.input,
                 tau_min=args.tau_min, tau_max=tau_max)
    _write_report(args.out, spec, report)
    return EXIT_OK


def cmd_fit_er(args) -> int:
    with open(args.curve, encoding="utf-8") as fh:
        curve = AsplCurve.from_csv(fh)
    fit = fit_er_approx(curve, args.n_min, alpha=args.alpha)
    spec = _spec(args, command="fit-er", curve=args.curve, n_min=args.n_min,
                 alpha=args.alpha)
    _write_report(args.out, spec, {
        "amplitude": fit.amplitude,
        "c0_eff": fit.c0_eff,
        "alpha_eff": fit.alpha_eff,
        "residual": fit.residual,
        "poor_fit": fit.poor_fit,
        "n_points": fit.n_points,
    })
    return EXIT_OK


def cmd_fit_powerlaw(args) -> int:
    g = read_edge_list(args.edges)
    gamma = fit_degree_exponent(g.degrees, args.kmin)
    values = {"gamma": gamma, "kmin": args.kmin,
              "n_tail": sum(1 for k in g.degrees if k >= args.kmin)}
    if 2.0 < gamma < 3.0:
        values["aspl_saturation_limit"] = fronczak_limit(gamma)
    spec = _spec(args, command="fit-powerlaw", edges=args.edges, kmin=args.kmin)
    _write_report(args.out, spec, values)
    return EXIT_OK


def _spec(args, **fields) -> dict:
    fields["backend"] = backend_name()
    return fields


def _params_spec(model, params) -> dict:
    if model == "dm":
        return {"m": params.m, "c0": params.c0, "alpha": params.alpha,
                "n0": params.n0, "rewire_r0": params.rewire_r0,
                "rewire_rho": params.rewire_rho}
    if model in ("sh", "sh-nonlinear"):
        return {"p0": params.p0, "mu": params.mu, "c1": params.c1,
                "eta": params.eta, "sh_n0": params.n0}
    return {"m": params.dm.m, "c0": params.dm.c0, "alpha": params.dm.alpha,
            "n0": params.dm.n0, "p0": params.p0, "mu": params.mu}


# ---------------------------------------------------------------------------
# Parser
# ---------------------------------------------------------------------------

def _add_common(p):
    p.add_argument("--config", help="key=value file supplying flag defaults")
    p.add_argument("--jobs", type=int, default=1,
                   help="worker processes for realizations/pieces")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--schedule", default="default",
                   help="'default', 'default:<nmax>', or comma list of N values")
    p.add_argument("--exact-threshold", type=int, default=DEFAULT_EXACT_THRESHOLD,
                   help="exact ASPL up to this N, sampled above")
    p.add_argument("--sample-sources", type=int, default=DEFAULT_SAMPLE_SOURCES,
                   help="BFS sources for sampled ASPL")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="wordpath",
        description="Word-adjacency network growth and shortest-path analysis")
    parser.add_argument("--version", action="version",
                        version=f"wordpath {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("tokenize", help="normalize a text into tokens")
    p.add_argument("--input", required=True)
    p.add_argument("--max-tokens", type=int)
    p.add_argument("--tokens-out")
    p.add_argument("--vocab-out")
    p.add_argument("--config")
    p.set_defaults(func=cmd_tokenize)

    p = sub.add_parser("build", help="export the word-adjacency network")
    p.add_argument("--input", required=True)
    p.add_argument("--max-tokens", type=int)
    p.add_argument("--max-n", type=int,
                   help="stop at this many distinct words (prefix network)")
    p.add_argument("--edges-out", required=True)
    p.add_argument("--vocab-out")
    p.add_argument("--config")
    p.set_defaults(func=cmd_build)

    p = sub.add_parser("curve", help="L(N) curve of a growing text network")
    p.add_argument("--input", required=True)
    p.add_argument("--pieces", type=int, default=1,
                   help=">=2 averages contiguous pieces of the text")
    p.add_argument("--max-tokens", type=int)
    p.add_argument("--out", required=True)
    _add_common(p)
    p.set_defaults(func=cmd_curve)

    p = sub.add_parser("simulate", help="grow model networks and measure L(N)")
    p.add_argument("--model", required=True,
                   choices=["dm", "sh", "sh-nonlinear", "hybrid"])
    p.add_argument("--m", type=int, default=2)
    p.add_argument("--c0", type=float, default=0.0)
    p.add_argument("--alpha", type=float, default=1.0)
    p.add_argument("--n0", type=int, default=7, help="chain seed size (dm/hybrid)")
    p.add_argument("--rewire-r0", type=float, default=0.0)
    p.add_argument("--rewire-rho", type=float, default=0.0)
    p.add_argument("--p0", type=float, default=1.0)
    p.add_argument("--mu", type=float, default=0.075)
    p.add_argument("--c1", type=float)
    p.add_argument("--eta", type=float)
    p.add_argument("--sh-n0", type=int, default=1, help="seed size (sh models)")
    p.add_argument("--steps", type=int)
    p.add_argument("--target-n", type=int, help="grow until N reaches this")
    p.add_argument("--realizations", type=int, default=1)
    p.add_argument("--curve-out")
    p.add_argument("--edges-out", help="edge list of the seed-realization graph")
    p.add_argument("--events-out", help="replayable event log of the seed realization")
    _add_common(p)
    p.set_defaults(func=cmd_simulate)

    p = sub.add_parser("surrogate", help="original vs reshuffled-text curves")
    p.add_argument("--input", required=True)
    p.add_argument("--realizations", type=int, default=20)
    p.add_argument("--pieces", type=int)
    p.add_argument("--max-tokens", type=int)
    p.add_argument("--original-out", required=True)
    p.add_argument("--surrogate-out", required=True)
    _add_common(p)
    p.set_defaults(func=cmd_surrogate)

    fit = sub.add_parser("fit", help="statistical fits")
    fit_sub = fit.add_subparsers(dest="fit_kind", required=True)

    p = fit_sub.add_parser("heaps", help="vocabulary-growth exponent")
    p.add_argument("--input", required=True)
    p.add_argument("--tau-min", type=int, default=100)
    p.add_argument("--tau-max", type=int)
    p.add_argument("--points", type=int, default=50)
    p.add_argument("--out")
    p.add_argument("--config")
    p.set_defaults(func=cmd_fit_heaps)

    p = fit_sub.add_parser("er", help="random-graph-style L(N) fit")
    p.add_argument("--curve", required=True)
    p.add_argument("--n-min", type=int, default=1000)
    p.add_argument("--alpha", type=float)
    p.add_argument("--out")
    p.add_argument("--config")
    p.set_defaults(func=cmd_fit_er)

    p = fit_sub.add_parser("powerlaw", help="degree-distribution exponent")
    p.add_argument("--edges", required=True)
    p.add_argument("--kmin", type=int, default=2)
    p.add_argument("--out")
    p.add_argument("--config")
    p.set_defaults(func=cmd_fit_powerlaw)

    return parser


def _all_parsers(parser: argparse.ArgumentParser):
    yield parser
    for action in parser._actions:
        if isinstance(action, argparse._SubParsersAction):
            for sub in action.choices.values():
                yield from _all_parsers(sub)


def _apply_config(parser: argparse.ArgumentParser, argv: list[str]) -> list[str]:
    """Load key=value defaults from a --config file, flags still win."""
    config_path = None
    for idx, arg in enumerate(argv):
        if arg == "--config" and idx + 1 < len(argv):
            config_path = argv[idx + 1]
        elif arg.startswith("--config="):
            config_path = arg.split("=", 1)[1]
    if not config_path:
        return argv
    defaults = {}
    with open(config_path, encoding="utf-8") as fh:
        for raw in fh:
            line = raw.strip()
            if not line or line.startswith("#") or "=" not in line:
                continue
            key, value = line.split("=", 1)
            defaults[key.strip().replace("-", "_")] = value.strip()
    # subparsers carry their own defaults, which would shadow the parent's
    for sub in _all_parsers(parser):
        sub.set_defaults(**defaults)
    return argv


def main(argv: list[str] | None = None) -> int:
    argv = list(sys.argv[1:] if argv is None else argv)
    parser = build_parser()
    try:
        argv = _apply_config(parser, argv)
        args = parser.parse_args(argv)
        # config-file values arrive as strings; coerce the numeric ones
        for key in ("seed", "jobs", "exact_threshold", "sample_sources", "m",
                    "n0", "sh_n0", "steps", "target_n", "realizations",
                    "pieces", "max_tokens", "max_n", "tau_min", "tau_max",
                    "points", "n_min", "kmin"):
            if hasattr(args, key) and isinstance(getattr(args, key), str):
                setattr(args, key, int(getattr(args, key)))
        for key in ("c0", "alpha", "p0", "mu", "c1", "eta", "rewire_r0",
                    "rewire_rho"):
            if hasattr(args, key) and isinstance(getattr(args, key), str):
                setattr(args, key, float(getattr(args, key)))
        return args.func(args)
    except InsufficientDataError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_DATA
    except (ValueError, KeyError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_IO


if __name__ == "__main__":
    sys.exit(main())
