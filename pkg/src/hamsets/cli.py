"""Command-line entry point: ``hamsets <subcommand> [options]``.

Graphs are read as graph6 lines from ``--input`` (default stdin; ``.gz``
files are decompressed).  Every run prints one document whose ``config``
header records the options that shaped the result.
"""

from __future__ import annotations

import argparse
import csv
import gzip
import io
import json
import random
import sys
from dataclasses import dataclass
from fractions import Fraction

from . import __version__
from . import constructors as cons
from .classical import binom_bound_check, longest_cycle, min_degree_core, posa_check
from .counting import (
    closed_form_bipartite,
    closed_form_complete,
    closed_form_glued,
    ham_fraction_estimate,
    ham_subsets_count,
    path_subsets_count,
    tuza_floor,
)
from .expander import ExpansionProfile, extract_expander, is_expander
from .graph import (
    DP_CAP,
    CapExceeded,
    Graph,
    GraphFormatError,
    blocks,
    degree_stats,
    from_graph6,
    to_graph6,
    vertex_connectivity,
)
from .structures import (
    build_cycle_dense,
    build_cycle_sparse,
    far_apart_set,
    find_structure,
    grow_webs,
    web_parameters,
)
from .verify import tiny_generate, verify_bipartite, verify_komlos, verify_stability

EXIT_OK, EXIT_VIOLATION, EXIT_USAGE = 0, 1, 2

# options that never change results and stay out of the config header
_VOLATILE = {"threads", "input", "csv", "json", "config", "func", "cmd"}


class UsageError(Exception):
    pass


@dataclass(frozen=True)
class RunConfig:
    subcommand: str
    options: dict

    def header(self) -> dict:
        return {"subcommand": self.subcommand, "version": __version__, **self.options}


def _jsonable(x):
    if isinstance(x, Fraction):
        return str(x)
    if isinstance(x, (set, frozenset)):
        return sorted(x)
    if isinstance(x, tuple):
        return list(x)
    raise TypeError(f"cannot serialise {type(x).__name__}")


# -- input ----------------------------------------------------------------

def _open_input(path: str | None):
    if path in (None, "-"):
        return sys.stdin
    if path.endswith(".gz"):
        return io.TextIOWrapper(gzip.open(path, "rb"), encoding="ascii")
    return open(path, encoding="ascii")


def _read_lines(args) -> list[str]:
    with _open_input(args.input) as fh:
        return [s for s in (line.strip() for line in fh) if s]


def _graphs(args) -> list[tuple[str, Graph]]:
    out = []
    for i, s in enumerate(_read_lines(args), 1):
        try:
            out.append((s, from_graph6(s)))
        except GraphFormatError as exc:
            raise UsageError(f"line {i}: malformed graph6 ({exc})") from exc
    return out


def _int_list(text: str | None) -> list[int] | None:
    if text is None:
        return None
    try:
        return [int(t) for t in text.split(",") if t.strip()]
    except ValueError as exc:
        raise UsageError(f"expected a comma-separated integer list, got {text!r}") from exc


# -- subcommands ----------------------------------------------------------

def cmd_count(args) -> tuple[list, bool]:
    rows = []
    for s, g in _graphs(args):
        if g.n > args.cap and args.samples:
            est = ham_fraction_estimate(g, args.samples, seed=args.seed)
            rows.append({"graph6": s, "n": g.n, "e": g.m, "estimate": {
                "fraction": est.fraction, "half_width": est.half_width,
                "samples": est.samples, "hits": est.hits, "seed": est.seed}})
            continue
        rep = ham_subsets_count(g, with_nu=args.nu, cap=args.cap)
        rows.append({"graph6": s, **rep.as_dict(with_sizes=not args.no_sizes)})
    return rows, False


def cmd_pxy(args) -> tuple[list, bool]:
    rows = []
    for s, g in _graphs(args):
        pc = path_subsets_count(g, args.x, args.y, cap=args.cap)
        rows.append({"graph6": s, "x": pc.x, "y": pc.y, "p": pc.p})
    return rows, False


def cmd_formulas(args) -> tuple[dict, bool]:
    d = args.d
    if d < 2:
        raise UsageError("--d must be at least 2")
    return {
        "complete": closed_form_complete(d),
        "glued": closed_form_glued(d),
        "bipartite_dd": closed_form_bipartite(d, d),
        "tuza_floor": tuza_floor(d),
    }, False


def cmd_analyze(args) -> tuple[list | dict, bool]:
    if args.binom is not None:
        v = binom_bound_check(args.binom)
        return {"n": v.n, "first": v.first, "second": v.second, "asserted": v.asserted}, False
    rows = []
    for s, g in _graphs(args):
        st = degree_stats(g)
        row = {
            "graph6": s, "n": g.n, "e": g.m,
            "degrees": {"average": st.average, "min": st.min,
                        "second_min": st.second_min, "max": st.max},
        }
        if g.n >= 3:
            pv = posa_check(g)
            row["posa"] = {"passes": pv.passes, "witness_index": pv.witness_index}
        d = Fraction(args.d) if args.d is not None else st.average
        core, lab = min_degree_core(g, d)
        row["core"] = {"d": d, "vertices": lab, "avg_degree": core.average_degree() if core.n else None}
        if g.n <= args.cap:
            cyc = longest_cycle(g, cap=args.cap)
            row["longest_cycle"] = cyc
            row["hamiltonian"] = bool(cyc) and len(cyc) == g.n
        bd = blocks(g)
        row["blocks"] = {
            "count": len(bd.blocks),
            "cut_vertices": sorted(bd.cut_vertices),
            "leaf_blocks": [sorted(bd.blocks[i]) for i in sorted(bd.leaf_blocks)],
        }
        row["connectivity"] = vertex_connectivity(g)
        rows.append(row)
    return rows, False


def _profile(args, g: Graph) -> ExpansionProfile:
    t = args.t if args.t is not None else args.cprime * float(g.average_degree())
    if t <= 0:
        raise UsageError("expansion parameter t must be positive")
    return ExpansionProfile(args.eps1, t)


def cmd_certify(args) -> tuple[list, bool]:
    rows = []
    for s, g in _graphs(args):
        cert = is_expander(g, _profile(args, g), mode=args.mode, seed=args.seed)
        rows.append({"graph6": s, **cert.as_dict()})
    return rows, False


def cmd_extract(args) -> tuple[list, bool]:
    rows = []
    for s, g in _graphs(args):
        res = extract_expander(
            g, eps1=args.eps1, c_prime=args.cprime, enforce_hypotheses=not args.no_hypotheses,
            seed=args.seed,
        )
        rows.append({"graph6": s, **res.as_dict()})
    post = ("avg_degree", "min_degree", "connectivity", "expansion")
    return rows, any(not all(r["postconditions"][k] for k in post) for r in rows)


def cmd_find_structure(args) -> tuple[list, bool]:
    rows = []
    for s, g in _graphs(args):
        w = find_structure(g, Fraction(args.d), cap=args.cap, path_ratio=args.path_ratio)
        rows.append({"graph6": s, **w.as_dict()})
    return rows, any(not r["satisfied"] for r in rows)


def _web_params(args):
    return web_parameters(args.h0, args.h1, args.h2, args.h3, unit_len=args.unit_len)


def cmd_build_web(args) -> tuple[list, bool]:
    rows = []
    for s, g in _graphs(args):
        res = grow_webs(g, args.h0, args.h1, args.h2, args.h3, args.count, params=_web_params(args))
        rows.append({"graph6": s, **res.as_dict()})
    return rows, any(len(r["webs"]) < args.count for r in rows)


def cmd_build_cycle(args) -> tuple[list, bool]:
    rows = []
    rng = random.Random(args.seed)
    for s, g in _graphs(args):
        if args.mode == "dense":
            res = grow_webs(g, args.h0, args.h1, args.h2, args.h3, args.webs, params=_web_params(args))
            webs = res.webs
            U = _int_list(args.U)
            if U is None:
                size = args.u_size or len(webs)
                U = sorted(rng.sample(range(len(webs)), min(size, len(webs))))
            rep = build_cycle_dense(g, webs, U, coverage=args.coverage)
            out = rep.as_dict()
            out["web_failures"] = [f.as_dict() for f in res.failures]
        else:
            Z, diag = far_apart_set(g, args.k, args.z_size)
            U = _int_list(args.U)
            if U is None:
                size = args.u_size or len(Z)
                U = rng.sample(Z, min(size, len(Z)))
            profile = _profile(args, g) if args.t is not None else None
            rep = build_cycle_sparse(
                g, Z, U, args.r, args.k, profile=profile,
                ball_min=args.ball_min, path_len=args.path_len,
            )
            out = rep.as_dict()
            out["far_apart_diagnostic"] = diag
        rows.append({"graph6": s, **out})
    return rows, any(not r["ok"] for r in rows)


_FAMILIES = {
    "complete": lambda a: cons.complete(a.n),
    "empty": lambda a: cons.empty(a.n),
    "cycle": lambda a: cons.cycle(a.n),
    "path": lambda a: cons.path(a.n),
    "star": lambda a: cons.star(a.n),
    "petersen": lambda a: cons.petersen(),
    "barbell": lambda a: cons.barbell(a.n),
    "complete-bipartite": lambda a: cons.complete_bipartite(a.a, a.b),
    "glued-pair": lambda a: cons.glued_pair(a.a, a.b),
    "split": lambda a: cons.split_graph(a.a, a.b),
}


def cmd_gen(args) -> tuple[list, bool]:
    fam = args.family
    if fam == "figure1":
        gs = cons.figure1_family(args.d)
    elif fam == "tiny":
        return tiny_generate(args.n, args.min_degree), False
    elif fam in ("random-regular", "gnp"):
        import networkx as nx

        if fam == "random-regular":
            G = nx.random_regular_graph(args.d, args.n, seed=args.seed)
        else:
            G = nx.gnp_random_graph(args.n, args.p, seed=args.seed)
        gs = [Graph(args.n, G.edges())]
    else:
        need = {"complete-bipartite": "ab", "glued-pair": "ab", "split": "ab"}.get(fam, "n")
        for k in need:
            if getattr(args, k) is None and fam != "petersen":
                raise UsageError(f"family {fam} needs --{k}")
        gs = [_FAMILIES[fam](args)]
    return [to_graph6(g) for g in gs], False


def _verify(args, fn, **kw) -> tuple[dict, bool]:
    with _open_input(args.input) as fh:
        lines = fh.readlines()
    rep = fn(lines, args.d, threads=args.threads, cap=args.cap, keep_counts=bool(args.csv), **kw)
    if args.csv:
        with open(args.csv, "w", newline="") as fh:
            w = csv.writer(fh)
            w.writerow(["graph6", "c"])
            w.writerows(rep.per_graph)
    return rep.as_dict(), not rep.clean


def cmd_verify_komlos(args):
    return _verify(args, verify_komlos)


def cmd_verify_bipartite(args):
    return _verify(args, verify_bipartite)


def cmd_verify_stability(args):
    return _verify(args, verify_stability, alpha=args.alpha)


# -- parser ---------------------------------------------------------------

def _common() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(add_help=False)
    p.add_argument("--input", "-i", default="-", help="graph6 file (default stdin, .gz ok)")
    p.add_argument("--config", help="key=value file mirroring the long options")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--threads", type=int, default=1)
    p.add_argument("--cap", type=int, default=DP_CAP, help="largest order for exact DP")
    p.add_argument("--eps1", type=float, default=None)
    p.add_argument("--cprime", type=float, default=1 / 30)
    p.add_argument("--json", action="store_true", help="emit JSON (default: text)")
    p.add_argument("--strict", action="store_true", help="exit 1 when violations are found")
    p.add_argument("--csv", help="write per-graph counts to this CSV file")
    return p


def _web_opts(p: argparse.ArgumentParser) -> None:
    p.add_argument("--h0", type=int, default=2)
    p.add_argument("--h1", type=int, default=2)
    p.add_argument("--h2", type=int, default=3)
    p.add_argument("--h3", type=int, default=8)
    p.add_argument("--unit-len", type=int, default=None)


def build_parser() -> argparse.ArgumentParser:
    common = _common()
    parser = argparse.ArgumentParser(prog="hamsets", description=__doc__.splitlines()[0])
    parser.add_argument("--version", action="version", version=__version__)
    sub = parser.add_subparsers(dest="cmd", required=True)

    def add(name, func, help):
        p = sub.add_parser(name, parents=[common], help=help)
        p.set_defaults(func=func)
        return p

    p = add("count", cmd_count, "count Hamiltonian subsets c(G)")
    p.add_argument("--nu", action="store_true", help="also count all cycles")
    p.add_argument("--no-sizes", action="store_true")
    p.add_argument("--samples", type=int, default=0, help="Monte Carlo beyond --cap")

    p = add("pxy", cmd_pxy, "count spanning-path subsets p_xy(G)")
    p.add_argument("--x", type=int, required=True)
    p.add_argument("--y", type=int, required=True)

    p = add("formulas", cmd_formulas, "closed forms at degree d")
    p.add_argument("--d", type=int, required=True)

    p = add("analyze", cmd_analyze, "degree, Posa, core, longest cycle and block verdicts")
    p.add_argument("--d", type=str, default=None, help="core threshold (default d(G))")
    p.add_argument("--binom", type=int, default=None, help="only run the binomial check at n")

    for name, func, help in (
        ("certify", cmd_certify, "certify (eps1, t)-expansion"),
        ("extract-expander", cmd_extract, "extract an expander subgraph"),
    ):
        p = add(name, func, help)
        p.add_argument("--t", type=float, default=None, help="default c' d(G)")
        if name == "certify":
            p.add_argument("--mode", choices=["auto", "exact", "heuristic"], default="auto")
        else:
            p.add_argument("--no-hypotheses", action="store_true",
                           help="allow eps1 above 1/(10C)")

    p = add("find-structure", cmd_find_structure, "two cycles, a long path or a sun")
    p.add_argument("--d", type=str, required=True)
    p.add_argument("--path-ratio", type=float, default=1.01)

    p = add("build-web", cmd_build_web, "grow webs with disjoint interiors")
    _web_opts(p)
    p.add_argument("--count", type=int, default=2)

    p = add("build-cycle", cmd_build_cycle, "build a cycle C_U (dense or sparse route)")
    p.add_argument("--mode", choices=["dense", "sparse"], default="dense")
    _web_opts(p)
    p.add_argument("--webs", type=int, default=6)
    p.add_argument("--U", default=None, help="comma list: web indices (dense) or vertices (sparse)")
    p.add_argument("--u-size", type=int, default=None)
    p.add_argument("--coverage", type=float, default=0.9)
    p.add_argument("--k", type=int, default=2)
    p.add_argument("--r", type=int, default=1)
    p.add_argument("--z-size", type=int, default=20)
    p.add_argument("--ball-min", type=int, default=1)
    p.add_argument("--path-len", type=int, default=None)
    p.add_argument("--t", type=float, default=None)

    p = add("gen", cmd_gen, "emit constructor output as graph6")
    p.add_argument("family", choices=sorted(_FAMILIES) + ["figure1", "tiny", "random-regular", "gnp"])
    p.add_argument("--n", type=int, default=None)
    p.add_argument("--a", type=int, default=None)
    p.add_argument("--b", type=int, default=None)
    p.add_argument("--d", type=int, default=None)
    p.add_argument("--p", type=float, default=None)
    p.add_argument("--min-degree", type=int, default=0)

    for name, func in (
        ("verify-komlos", cmd_verify_komlos),
        ("verify-bipartite", cmd_verify_bipartite),
        ("verify-stability", cmd_verify_stability),
    ):
        p = add(name, func, f"{name.split('-')[1]} lower bound over a graph6 stream")
        p.add_argument("--d", type=int, required=True)
        if name == "verify-stability":
            p.add_argument("--alpha", type=str, default="0.1")
    return parser


def _config_path(argv: list[str]) -> str | None:
    for i, a in enumerate(argv):
        if a == "--config" and i + 1 < len(argv):
            return argv[i + 1]
        if a.startswith("--config="):
            return a.split("=", 1)[1]
    return None


def _apply_config(parser: argparse.ArgumentParser, argv: list[str]) -> argparse.Namespace:
    path = _config_path(argv)
    choices = parser._subparsers._group_actions[0].choices
    cmd = next((a for a in argv if a in choices), None)
    if path is None or cmd is None:
        return parser.parse_args(argv)
    sp = choices[cmd]
    known = {a.dest: a for a in sp._actions if a.dest not in ("help", "config")}
    conf = {}
    with open(path) as fh:
        for n, raw in enumerate(fh, 1):
            line = raw.split("#", 1)[0].strip()
            if not line:
                continue
            if "=" not in line:
                raise UsageError(f"{path}:{n}: expected key=value")
            k, v = (s.strip() for s in line.split("=", 1))
            k = k.replace("-", "_")
            if k not in known:
                raise UsageError(f"{path}:{n}: unknown key {k!r}")
            act = known[k]
            if isinstance(act, argparse._StoreTrueAction):
                conf[k] = v.lower() in ("1", "true", "yes", "on")
            else:
                conf[k] = act.type(v) if act.type else v
            # a value from the file satisfies a required option
            act.required = False
    sp.set_defaults(**conf)
    return parser.parse_args(argv)


def _text(obj, indent: str = "") -> str:
    if isinstance(obj, dict):
        return "\n".join(
            f"{indent}{k}:" + ("\n" + _text(v, indent + "  ") if isinstance(v, (dict, list)) and v else f" {_scalar(v)}")
            for k, v in obj.items()
        )
    if isinstance(obj, list):
        if all(not isinstance(v, (dict, list)) for v in obj):
            return indent + " ".join(_scalar(v) for v in obj)
        return "\n".join(_text(v, indent) + ("\n" + indent + "--" if i < len(obj) - 1 else "") for i, v in enumerate(obj))
    return indent + _scalar(obj)


def _scalar(v) -> str:
    if isinstance(v, float):
        return repr(v)
    if isinstance(v, (list, tuple, set, frozenset)):
        return json.dumps(v, default=_jsonable)
    return str(v)


def main(argv: list[str] | None = None) -> int:
    argv = list(sys.argv[1:] if argv is None else argv)
    parser = build_parser()
    try:
        args = _apply_config(parser, argv)
    except SystemExit as exc:  # argparse usage errors
        return EXIT_USAGE if exc.code else EXIT_OK
    except (UsageError, OSError, ValueError) as exc:
        print(f"hamsets: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    if args.eps1 is None and args.cmd in ("certify", "build-cycle"):
        args.eps1 = 1 / 130
    opts = {k: v for k, v in sorted(vars(args).items()) if k not in _VOLATILE}
    cfg = RunConfig(args.cmd, opts)
    try:
        result, violated = args.func(args)
    except CapExceeded as exc:
        print(f"hamsets: cap exceeded: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except UsageError as exc:
        print(f"hamsets: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (ValueError, OSError) as exc:
        print(f"hamsets: invalid input: {exc}", file=sys.stderr)
        return EXIT_USAGE
    doc = {"config": cfg.header(), "results": result}
    if args.json:
        sys.stdout.write(json.dumps(doc, default=_jsonable, sort_keys=False) + "\n")
    elif args.cmd == "gen":
        sys.stdout.write("".join(s + "\n" for s in result))
    else:
        sys.stdout.write(_text(json.loads(json.dumps(doc, default=_jsonable))) + "\n")
    if args.strict and violated:
        return EXIT_VIOLATION
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
