"""
Command line interface
======================

The ``pyfillings`` command exposes the catalog, the configuration engine and
the enumerator::

    pyfillings hj 19 7
    pyfillings resolve D:7,3 --dot
    pyfillings transform T:19 --json
    pyfillings enumerate T:19 --json
    pyfillings verify descriptor.json
    pyfillings export-dot configuration.json
    pyfillings selftest --max-b 4

Results go to the standard output, diagnostics to the standard error. With
``--json`` the output is stable byte for byte across runs.

Exit status: 0 on success, 64 on a usage error, 65 on a domain or
verification error, 2 when the search caps are exhausted, 1 when the self
test finds a mismatch.
"""
import argparse
import io
import json
import logging
import sys
import time
from fractions import Fraction
from math import gcd

import numpy as np

from .catalog import (
    WeightedGraph,
    compactifying_divisor,
    normalized_divisor,
    resolution_graph,
)
from .configuration import BLOW_UP_AT_POINT, BLOW_UP_FRESH, Configuration, RewriteStep, blow_down, blow_up
from .cusp import transform_target
from .errors import SearchCapsExhausted
from .fillings import FillingDescriptor, SearchCaps, enumerate_fillings, standard_model, standard_models, verify_filling
from .golden import expected_descriptors, golden_ids, load
from .hj_fractions import hj_dual, hj_eval, hj_expand
from .parameters import catalog_version, constants
from .utilities import canonical_json, digest, export_dot
from .version import __version__

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_MISMATCH = 1
EXIT_CAPS = 2
EXIT_USAGE = 64
EXIT_DOMAIN = 65


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError("{}: error: {}".format(self.prog, message))


class RunManifest(object):
    """
    Record of one command line run.

    Attributes
    ----------
    command: str
    arguments: dict
    catalog_version: str
    caps: dict or None
    wall_time: float
        Seconds
    digest: str
        sha256 of the canonical JSON form of the result
    """

    def __init__(self, command, arguments, caps=None):
        self.command = command
        self.arguments = arguments
        self.catalog_version = catalog_version
        self.caps = caps
        self.wall_time = None
        self.digest = None

    def to_dict(self):
        return {
            "command": self.command,
            "arguments": self.arguments,
            "catalog_version": self.catalog_version,
            "caps": self.caps,
            "wall_time": self.wall_time,
            "digest": self.digest,
        }


def _graph_text(g):
    lines = []
    for v in g.vertices:
        nbrs = ", ".join(g.neighbors(v))
        lines.append("{}:{:+d} -- {}".format(v, g.weight(v), nbrs) if nbrs else "{}:{:+d}".format(v, g.weight(v)))
    return "\n".join(lines)


def _graph_output(args, g):
    if args.dot:
        return g.to_dict(), export_dot(g).rstrip("\n")
    return g.to_dict(), _graph_text(g)


def _cmd_hj(args, manifest):
    terms = hj_expand(args.n, args.q)
    dual = hj_dual(args.n, args.q)
    payload = {"n": args.n, "q": args.q, "terms": list(terms), "dual_terms": list(dual)}
    text = "{}/{} = {}\n{}/{} = {}".format(args.n, args.q, terms, args.n, args.n - args.q, dual)
    return payload, text


def _cmd_resolve(args, manifest):
    return _graph_output(args, resolution_graph(args.id))


def _cmd_compactify(args, manifest):
    if args.normalized:
        return _graph_output(args, normalized_divisor(args.id))
    return _graph_output(args, compactifying_divisor(args.id))


def _cmd_transform(args, manifest):
    target = transform_target(args.id)
    payload = {
        "singularity": str(target.singularity),
        "shape": target.shape,
        "dd": target.dd,
        "string": list(target.string),
        "configuration": target.configuration.to_dict(),
    }
    if args.dot:
        return payload, export_dot(target.configuration).rstrip("\n")
    text = "{} {}: D.D = {}, string {}".format(
        target.singularity, target.shape, target.dd, list(target.string)
    )
    return payload, text


def _cmd_enumerate(args, manifest):
    caps = SearchCaps(max_blowups=args.caps)
    manifest.caps = caps.to_dict()
    found = enumerate_fillings(args.id, caps=caps, base=args.base)
    payload = [d.to_json() for d in found]
    return payload, "\n".join(str(d) for d in found)


def _read_json(path):
    with io.open(path, "r", encoding="utf8") as f:
        return json.load(f)


def _cmd_verify(args, manifest):
    d = FillingDescriptor.from_json(_read_json(args.file))
    witness = verify_filling(d)
    payload = {"descriptor": d.to_json(), "witness": [step.to_list() for step in witness]}
    text = "\n".join(["ok {}".format(d)] + ["  {!r}".format(step) for step in witness])
    return payload, text


def _cmd_export_dot(args, manifest):
    data = _read_json(args.file)
    if "vertices" in data:
        obj = WeightedGraph.from_dict(data)
    elif "curves" in data:
        obj = Configuration.from_dict(data)
    else:
        raise ValueError("{} holds neither a graph nor a configuration".format(args.file))
    text = export_dot(obj).rstrip("\n")
    return {"dot": text}, text


def _lattice_sweep(rng, rounds=20):
    """Random blow-ups of the standard models, each undone by a blow-down"""
    failures = []
    for _ in range(rounds):
        name = standard_models[rng.randint(len(standard_models))]
        config = standard_model(name)
        curves = list(config.curves)
        points = [pid for pid, p in config.points.items() if not p.cusp]
        if len(points) > 0 and rng.rand() < 0.5:
            step = RewriteStep(BLOW_UP_AT_POINT, points[rng.randint(len(points))])
        else:
            step = RewriteStep(BLOW_UP_FRESH, curves[rng.randint(len(curves))])
        up = blow_up(config, step)
        new = [x for x in up.curves if x not in config.curves][0]
        down = blow_down(up, new)
        if any(down.weight(x) != config.weight(x) for x in curves):
            failures.append("{} {!r}".format(name, step))
    for _ in range(rounds):
        n = int(rng.randint(2, 200))
        q = int(rng.randint(1, n))
        if gcd(n, q) != 1:
            continue
        if hj_eval(hj_expand(n, q)) != Fraction(n, q) or hj_eval(hj_dual(n, q)) != Fraction(n, n - q):
            failures.append("hj {} {}".format(n, q))
    return failures


def _cmd_selftest(args, manifest):
    if args.seed is not None:
        constants.set("seed", args.seed)
    data = load(args.golden)

    rows = []
    failed = 0
    for s in golden_ids(args.max_b, data=data):
        expected = expected_descriptors(s, data=data)
        try:
            found = enumerate_fillings(s)
            ok = found == expected
            status = "PASS" if ok else "FAIL"
        except SearchCapsExhausted:
            found, ok, status = [], False, "CAPS"
        failed += not ok
        rows.append({"id": str(s), "expected": len(expected), "found": len(found), "status": status})

    rng = np.random.RandomState(constants.get("seed"))
    failures = _lattice_sweep(rng)
    failed += len(failures)

    lines = ["{:<10} {:>8} {:>8}  {}".format("id", "expected", "found", "status")]
    lines += ["{id:<10} {expected:>8} {found:>8}  {status}".format(**r) for r in rows]
    lines.append("lattice sweep: {}".format("PASS" if len(failures) == 0 else ", ".join(failures)))

    payload = {"rows": rows, "sweep": failures, "failed": failed}
    return payload, "\n".join(lines)


def build_parser():
    parser = _Parser(prog="pyfillings", description="Minimal symplectic fillings of quotient singularities")
    parser.add_argument("--version", action="version", version="%(prog)s " + __version__)
    parser.add_argument("-v", "--verbose", action="count", default=0, help="more diagnostics on stderr")
    parser.add_argument("--manifest", action="store_true", help="print the run manifest on stderr")

    sub = parser.add_subparsers(dest="command", parser_class=_Parser)

    def add(name, func, help):
        p = sub.add_parser(name, help=help)
        p.set_defaults(func=func)
        return p

    def output_flags(p, dot=True):
        group = p.add_mutually_exclusive_group()
        group.add_argument("--json", action="store_true", help="JSON output")
        if dot:
            group.add_argument("--dot", action="store_true", help="DOT output")
        else:
            group.add_argument("--text", action="store_true", help="text output (default)")

    p = add("hj", _cmd_hj, "Hirzebruch-Jung expansion of n/q and of its dual")
    p.add_argument("n", type=int)
    p.add_argument("q", type=int)
    p.add_argument("--json", action="store_true", help="JSON output")

    p = add("resolve", _cmd_resolve, "dual graph of the minimal resolution")
    p.add_argument("id", help="singularity id, e.g. T:19 or A:7,3")
    output_flags(p)

    p = add("compactify", _cmd_compactify, "compactifying divisor")
    p.add_argument("id", help="singularity id, e.g. T:19 or A:7,3")
    p.add_argument("--normalized", action="store_true", help="central curve blown up to weight -1")
    output_flags(p)

    p = add("transform", _cmd_transform, "cusp configuration of a singularity")
    p.add_argument("id", help="singularity id, e.g. T:19 or A:7,3")
    output_flags(p)

    p = add("enumerate", _cmd_enumerate, "list the minimal fillings")
    p.add_argument("id", help="singularity id, e.g. T:19 or A:7,3")
    output_flags(p, dot=False)
    p.add_argument("--caps", type=int, default=None, metavar="N", help="maximum number of blow-ups")
    p.add_argument("--base", choices=["P2", "Q"], default=None, help="only list this base")

    p = add("verify", _cmd_verify, "check a descriptor and print a witness")
    p.add_argument("file", help="JSON file holding one descriptor")
    p.add_argument("--json", action="store_true", help="JSON output")

    p = add("export-dot", _cmd_export_dot, "render a graph or configuration JSON file")
    p.add_argument("file")

    p = add("selftest", _cmd_selftest, "compare the enumerator with the golden lists")
    p.add_argument("--golden", default=None, metavar="PATH", help="golden file")
    p.add_argument("--seed", type=int, default=None, help="seed of the lattice sweep")
    p.add_argument("--max-b", dest="max_b", type=int, default=None, metavar="B", help="largest b")
    p.add_argument("--json", action="store_true", help="JSON output")

    return parser


def _setup_logging(verbose, stream):
    root = logging.getLogger("pyfillings")
    for h in list(root.handlers):
        if getattr(h, "_pyfillings_cli", False):
            root.removeHandler(h)
    handler = logging.StreamHandler(stream)
    handler._pyfillings_cli = True
    handler.setFormatter(logging.Formatter("%(levelname)s %(name)s: %(message)s"))
    root.addHandler(handler)
    root.setLevel([logging.WARNING, logging.INFO, logging.DEBUG][min(verbose, 2)])


def run(argv=None, stdout=None, stderr=None):
    """
    Run the command line.

    Parameters
    ----------
    argv: list of str, optional
        The arguments, ``sys.argv[1:]`` by default
    stdout, stderr: file, optional
        Output streams

    Returns
    -------
    int
        The exit status
    """
    stdout = sys.stdout if stdout is None else stdout
    stderr = sys.stderr if stderr is None else stderr

    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        if args.command is None:
            raise UsageError("pyfillings: error: a command is required")
    except UsageError as e:
        stderr.write(parser.format_usage())
        stderr.write("{}\n".format(e))
        return EXIT_USAGE
    except SystemExit as e:
        # --help and --version
        return e.code or EXIT_OK

    _setup_logging(args.verbose, stderr)

    arguments = {k: str(v) for k, v in sorted(vars(args).items()) if k not in ("func", "command")}
    manifest = RunManifest(args.command, arguments)

    start = time.perf_counter()
    try:
        payload, text = args.func(args, manifest)
    except SearchCapsExhausted as e:
        stderr.write("caps exhausted: {}\n".format(e))
        return EXIT_CAPS
    except (ValueError, OSError) as e:
        stderr.write("error: {}\n".format(e))
        return EXIT_DOMAIN
    manifest.wall_time = time.perf_counter() - start
    manifest.digest = digest(payload)

    if getattr(args, "json", False):
        stdout.write(json.dumps(payload, indent=2, sort_keys=True) + "\n")
    elif len(text) > 0:
        stdout.write(text + "\n")

    if args.manifest:
        stderr.write(canonical_json(manifest.to_dict()) + "\n")

    if args.command == "selftest" and payload["failed"] > 0:
        return EXIT_MISMATCH
    return EXIT_OK


def main():
    sys.exit(run())


if __name__ == "__main__":
    main()
