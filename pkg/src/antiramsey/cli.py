"""Command-line entry point: ``antiramsey <subcommand> ...`` (also ``python -m antiramsey``)."""

from __future__ import annotations

import argparse
import hashlib
import json
import random
import sys
from dataclasses import asdict, dataclass, field
from pathlib import Path

from .acceptance import DEFAULT_SEED, run_suite
from .certify import Inconclusive, Mode, dk_scan, forces
from .colouring import EdgeColouring, chromatic_index, is_proper
from .constructions import resolve_graph
from .errors import PreconditionError
from .families import SetFamily, disjoint_representatives, fractional_width_certificate
from .graph import FormatError, Graph, structural_report
from .matching import avoid_rainbow_c4_cubic, has_rainbow_c4
from .patterns import Pattern, pattern
from .rainbow import find_rainbow_copy, greedy_rainbow_embed, lemma31_embed

EXIT_OK, EXIT_INPUT, EXIT_INCONCLUSIVE = 0, 1, 2


@dataclass
class RunManifest:
    command: list[str]
    inputs: dict[str, str]
    seed: int
    budget: dict
    outcome: str
    artifacts: list[str] = field(default_factory=list)


def _sha(text: str) -> str:
    return hashlib.sha256(text.encode()).hexdigest()


def _dump(obj) -> str:
    return json.dumps(obj, sort_keys=True, indent=2) + "\n"


class _Run:
    """Per-invocation state: recorded inputs and artifacts for the manifest."""

    def __init__(self, args, argv):
        self.args = args
        self.argv = list(argv)
        self.inputs: dict[str, str] = {}
        self.artifacts: list[str] = []

    def graph(self, key: str, spec: str) -> Graph:
        g = resolve_graph(spec)
        self.inputs[key] = _sha(g.to_text())
        return g

    def pattern(self, spec: str) -> Pattern:
        p = Path(spec)
        if p.is_file():
            h = Pattern.from_graph(Graph.from_text(p.read_text()), p.stem)
        else:
            h = pattern(spec)
        self.inputs["pattern"] = _sha(h.graph.to_text())
        return h

    def read(self, key: str, path: str) -> str:
        text = Path(path).read_text()
        self.inputs[key] = _sha(text)
        return text

    def emit(self, name: str, text: str) -> None:
        out = getattr(self.args, "out_dir", None)
        if out:
            d = Path(out)
            d.mkdir(parents=True, exist_ok=True)
            (d / name).write_text(text)
            self.artifacts.append(name)

    def finish(self, outcome: str, budget: dict | None = None) -> None:
        out = getattr(self.args, "out_dir", None)
        if not out:
            return
        man = RunManifest(self.argv, self.inputs, self.args.seed, budget or {}, outcome, list(self.artifacts))
        Path(out).mkdir(parents=True, exist_ok=True)
        (Path(out) / "manifest.json").write_text(_dump(asdict(man)))


def _budget(args) -> dict:
    return {"max_nodes": args.budget_nodes, "max_seconds": args.budget_seconds}


def _load_colouring(g: Graph, text: str) -> EdgeColouring:
    if text.lstrip().startswith("{"):
        try:
            data = json.loads(text)
        except json.JSONDecodeError as exc:
            raise FormatError(exc.msg, exc.lineno) from None
        return EdgeColouring.from_json(g, data)
    return EdgeColouring.from_lines(g, text)


def _load_family(text: str) -> SetFamily:
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise FormatError(exc.msg, exc.lineno) from None
    if not isinstance(data, dict) or "sets" not in data:
        raise FormatError("family JSON needs a 'sets' list", 1)
    return SetFamily.from_json(data)


# -- subcommands ---------------------------------------------------------------------------------


def cmd_construct(run: _Run) -> int:
    a = run.args
    g = run.graph("graph", a.spec)
    if a.dot:
        text = g.to_dot()
    elif a.json:
        text = _dump({"n": g.n, "edges": [list(e) for e in g.edges], "labels": [g.label(v) for v in range(g.n)],
                      "report": structural_report(g).as_dict()})
    else:
        text = g.to_text()
    sys.stdout.write(text)
    run.emit("graph.txt", g.to_text())
    run.emit("graph.dot", g.to_dot())
    run.finish("constructed")
    return EXIT_OK


def cmd_forces(run: _Run) -> int:
    a = run.args
    g = run.graph("host", a.host)
    h = run.pattern(a.pattern)
    mode = Mode.parse(a.mode)
    cert = forces(g, h, mode, max_nodes=a.budget_nodes, max_seconds=a.budget_seconds,
                  workers=a.workers, restrict=a.restrict)
    body = _dump(cert.to_json())
    if a.json:
        sys.stdout.write(body)
    else:
        print(f"{cert.verdict} ({cert.stats.nodes} nodes)")
    run.emit("certificate.json", body)
    if cert.witness is not None:
        run.emit("witness.col", cert.witness.to_lines())
        run.emit("witness.dot", g.to_dot(edge_labels={i: str(c) for i, c in enumerate(cert.witness.colours)}))
    run.finish(cert.verdict, _budget(a))
    return EXIT_OK if cert.conclusive else EXIT_INCONCLUSIVE


def cmd_dk(run: _Run) -> int:
    a = run.args
    try:
        scan = dk_scan(a.k, a.dmax, max_nodes=a.budget_nodes, max_seconds=a.budget_seconds, workers=a.workers)
    except Inconclusive as exc:
        print(f"inconclusive: {exc}")
        run.finish("inconclusive", _budget(a))
        return EXIT_INCONCLUSIVE
    d, last = scan[-1]
    value = d if last.forces else None
    body = _dump({"k": a.k, "dmax": a.dmax, "d": value,
                  "scan": [{"d": dd, **c.to_json()} for dd, c in scan]})
    if a.json:
        sys.stdout.write(body)
    else:
        print(value if value is not None else f"none (d > {a.dmax})")
    run.emit("dk.json", body)
    run.finish(str(value), _budget(a))
    return EXIT_OK


def cmd_embed(run: _Run) -> int:
    a = run.args
    g = run.graph("host", a.host)
    c = _load_colouring(g, run.read("colouring", a.colouring))
    h = run.pattern(a.pattern)
    if a.method == "search":
        emb = find_rainbow_copy(g, c, h)
    elif a.method == "greedy":
        emb = greedy_rainbow_embed(g.n, c, h, a.m)
    else:
        emb = lemma31_embed(g, c, h)
    body = _dump({"found": emb is not None, "embedding": None if emb is None else emb.to_json(c)})
    sys.stdout.write(body)
    run.emit("embedding.json", body)
    run.finish("found" if emb else "none")
    return EXIT_OK


def cmd_width(run: _Run) -> int:
    fam = _load_family(run.read("family", run.args.family))
    cert = fractional_width_certificate(fam)
    body = _dump({"width": str(cert.value), "weights": [str(x) for x in cert.weights],
                  "packing": [str(x) for x in cert.packing]})
    if run.args.json:
        sys.stdout.write(body)
    else:
        print(cert.value)
    run.emit("width.json", body)
    run.finish(str(cert.value))
    return EXIT_OK


def cmd_sdr(run: _Run) -> int:
    fam = _load_family(run.read("family", run.args.family))
    reps = disjoint_representatives(fam)
    body = _dump({"representatives": reps,
                  "sets": None if reps is None else [fam.to_json()["sets"][i] for i in reps]})
    sys.stdout.write(body)
    run.emit("sdr.json", body)
    run.finish("found" if reps is not None else "none")
    return EXIT_OK


def cmd_avoid_c4(run: _Run) -> int:
    g = run.graph("host", run.args.host)
    c = avoid_rainbow_c4_cubic(g)
    report = {"proper": is_proper(g, c), "colours": c.colour_count, "rainbow_c4": has_rainbow_c4(g, c)}
    if run.args.json:
        sys.stdout.write(_dump({"colouring": c.to_json(), "report": report}))
    else:
        sys.stdout.write(c.to_lines())
        for k, v in report.items():
            print(f"# {k}: {json.dumps(v)}")
    run.emit("colouring.col", c.to_lines())
    run.emit("report.json", _dump(report))
    run.finish("coloured")
    return EXIT_OK


def cmd_chromatic_index(run: _Run) -> int:
    g = run.graph("host", run.args.host)
    print(chromatic_index(g))
    run.finish("computed")
    return EXIT_OK


def cmd_suite(run: _Run) -> int:
    a = run.args
    only = set(a.only) if a.only else None
    results = run_suite(a.tier, a.seed, only, echo=print)
    ok = all(r.passed for r in results)
    print(f"{sum(r.passed for r in results)}/{len(results)} criteria passed")
    run.emit("suite.json", _dump([{"criterion": r.number, "title": r.title, "passed": r.passed,
                                    "detail": r.detail} for r in results]))
    run.finish("pass" if ok else "fail")
    return EXIT_OK if ok else EXIT_INCONCLUSIVE


# -- parser ----------------------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--seed", type=int, default=DEFAULT_SEED, help="64-bit seed for all randomness")
    common.add_argument("--out-dir", help="write artifacts and manifest.json here")
    common.add_argument("--json", action="store_true", help="JSON output")

    search = argparse.ArgumentParser(add_help=False)
    search.add_argument("--workers", type=int, default=1)
    search.add_argument("--budget-nodes", type=int, default=None)
    search.add_argument("--budget-seconds", type=float, default=None)

    p = argparse.ArgumentParser(prog="antiramsey", description="Degree anti-Ramsey constructions and certificates.")
    sub = p.add_subparsers(dest="command", required=True)

    s = sub.add_parser("construct", parents=[common], help="build a graph")
    s.add_argument("spec", help="name, gadget:k,d, class2:k, host:<forest>, or a graph file")
    s.add_argument("--dot", action="store_true")
    s.set_defaults(func=cmd_construct)

    s = sub.add_parser("forces", parents=[common, search], help="decide forcing of a rainbow pattern")
    s.add_argument("--host", required=True)
    s.add_argument("--pattern", required=True)
    s.add_argument("--mode", default="proper", help="proper | m=K | palette=Q")
    s.add_argument("--restrict", action="store_true", help="drop edges in no copy of the pattern first")
    s.set_defaults(func=cmd_forces)

    s = sub.add_parser("dk", parents=[common, search], help="least d with G_{k,d} forcing a rainbow C_k")
    s.add_argument("--k", type=int, required=True)
    s.add_argument("--dmax", type=int, required=True)
    s.set_defaults(func=cmd_dk)

    s = sub.add_parser("embed", parents=[common], help="find a rainbow copy under a given colouring")
    s.add_argument("--host", required=True)
    s.add_argument("--colouring", required=True)
    s.add_argument("--pattern", required=True)
    s.add_argument("--method", choices=("search", "greedy", "tree"), default="search")
    s.add_argument("--m", type=int, default=1, help="multiplicity bound for the greedy method")
    s.set_defaults(func=cmd_embed)

    s = sub.add_parser("width", parents=[common], help="fractional width of a set family")
    s.add_argument("--family", required=True)
    s.set_defaults(func=cmd_width)

    s = sub.add_parser("sdr", parents=[common], help="system of disjoint representatives")
    s.add_argument("--family", required=True)
    s.set_defaults(func=cmd_sdr)

    s = sub.add_parser("avoid-c4", parents=[common], help="rainbow-C4-free 4-colouring of a bridgeless cubic graph")
    s.add_argument("--host", required=True)
    s.set_defaults(func=cmd_avoid_c4)

    s = sub.add_parser("chromatic-index", parents=[common], help="exact chromatic index")
    s.add_argument("--host", required=True)
    s.set_defaults(func=cmd_chromatic_index)

    s = sub.add_parser("suite", parents=[common], help="run the acceptance criteria")
    s.add_argument("--tier", choices=("fast", "full"), default="fast")
    s.add_argument("--only", type=int, nargs="*", help="criterion numbers to run")
    s.set_defaults(func=cmd_suite)
    return p


def main(argv: list[str] | None = None) -> int:
    argv = sys.argv[1:] if argv is None else list(argv)
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_OK if exc.code == 0 else EXIT_INPUT
    random.seed(args.seed)
    run = _Run(args, argv)
    try:
        return args.func(run)
    except FormatError as exc:
        print(f"error: {exc}", file=sys.stderr)
    except (PreconditionError, ValueError, OSError, KeyError) as exc:
        print(f"error: {exc}", file=sys.stderr)
    return EXIT_INPUT


run = main
