"""``hamnet`` command line interface.

Vertex ids on the command line and in all output are 1-based, like the
graph file format.  Exit codes: 0 when the query was answered (found or
shown not to exist), 1 on a precondition failure (including a graph outside
the class), 2 on usage or I/O errors.
"""
from __future__ import annotations

import argparse
import json
import sys

from .errors import HamnetError, NotClawNetFree, PreconditionViolation
from .graph_core import GraphFormatError, format_graph, parse_graph
from .hamiltonian import explain, find_trace, result_to_json, track, track_via_edge
from .oracle import enumerate_labeled_graphs
from .structure import blocks, is_claw_net_free
from .verify import exhaustive, randomized

EXIT_OK, EXIT_PRECONDITION, EXIT_USAGE = 0, 1, 2


class _Usage(Exception):
    pass


def _edge(text: str) -> tuple[int, int]:
    try:
        u, v = (int(x) for x in text.split(","))
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected U,V but got {text!r}")
    return u, v


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="hamnet",
                                 description="Hamiltonian paths and cycles in {claw, net}-free graphs.")
    sub = ap.add_subparsers(dest="verb", required=True)

    def common(p, with_file=True):
        if with_file:
            p.add_argument("file", nargs="?", default="-", help="graph file ('-' or omitted: stdin)")
        p.add_argument("--json", action="store_true", help="machine-readable output")
        p.add_argument("--explain", action="store_true",
                       help="stream key-lemma step records (JSON lines) to stderr")

    common(sub.add_parser("check", help="class membership with a claw/net certificate"))
    common(sub.add_parser("blocks", help="block decomposition"))
    p = sub.add_parser("trace", help="Hamiltonian path with optional constraints")
    common(p)
    p.add_argument("--from", dest="src", type=int)
    p.add_argument("--to", dest="dst", type=int)
    p.add_argument("--via", type=_edge, action="append", default=[], metavar="U,V")
    p = sub.add_parser("track", help="Hamiltonian cycle, optionally through an edge")
    common(p)
    p.add_argument("--via", type=_edge, metavar="U,V")
    p = sub.add_parser("verify", help="compare all constructors with brute force")
    common(p, with_file=False)
    p.add_argument("--max-n", type=int, default=6)
    p.add_argument("--labeled", action="store_true",
                   help="all labelled graphs instead of one per isomorphism class")
    p.add_argument("--random", type=int, default=0, metavar="K")
    p.add_argument("--size", type=int, default=8)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--p", type=float, default=0.3, help="edge probability for --random")
    p = sub.add_parser("enumerate", help="list labelled graphs on n vertices")
    common(p, with_file=False)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--filter", action="append", default=[],
                   choices=["connected", "cn-free", "2-connected"])
    p.add_argument("--count-only", action="store_true")
    return ap


def _read(path: str):
    try:
        text = sys.stdin.read() if path == "-" else open(path, encoding="utf-8").read()
    except OSError as exc:
        raise _Usage(f"cannot read {path}: {exc.strerror}")
    try:
        return parse_graph(text)
    except GraphFormatError as exc:
        raise _Usage(f"{path}: {exc}")


def _vertex(G, v):
    if v is None:
        return None
    if not 1 <= v <= G.n:
        raise _Usage(f"vertex {v} out of range 1..{G.n}")
    return v - 1


def _emit(args, data: dict, text: str) -> None:
    print(json.dumps(data, sort_keys=True) if args.json else text)


def _cmd_check(args) -> int:
    G = _read(args.file)
    ok, cert = is_claw_net_free(G)
    data = {"claw_net_free": ok, "certificate": cert.to_json() if cert else None}
    if ok:
        text = "claw-net-free: yes"
    else:
        c = data["certificate"]
        if c["kind"] == "claw":
            text = f"claw-net-free: no (claw, center {c['center']}, leaves {' '.join(map(str, c['leaves']))})"
        else:
            text = (f"claw-net-free: no (net, triangle {' '.join(map(str, c['triangle']))}, "
                    f"pendants {' '.join(map(str, c['pendants']))})")
    _emit(args, data, text)
    if not ok and not args.json:
        print(json.dumps(data, sort_keys=True), file=sys.stderr)
    return EXIT_OK if ok else EXIT_PRECONDITION


def _cmd_blocks(args) -> int:
    G = _read(args.file)
    data = blocks(G).to_json()
    lines = [f"block {i + 1} ({kind}): {' '.join(map(str, b))}"
             for i, (b, kind) in enumerate(zip(data["blocks"], data["kinds"]))]
    lines.append("cut vertices: " + (" ".join(map(str, data["cut_vertices"])) or "none"))
    _emit(args, data, "\n".join(lines))
    return EXIT_OK


def _show(args, res) -> int:
    data = result_to_json(res)
    if data["status"] == "found":
        key = "path" if "path" in data else "cycle"
        text = " ".join(map(str, data[key]))
    else:
        d = data["diagnosis"]
        text = f"not found: {d['reason']}" + (f" ({d['message']})" if d.get("message") else "")
    _emit(args, data, text)
    return EXIT_OK


def _cmd_trace(args) -> int:
    G = _read(args.file)
    s, t = _vertex(G, args.src), _vertex(G, args.dst)
    U = [(_vertex(G, a), _vertex(G, b)) for a, b in args.via]
    return _show(args, find_trace(G, s, t, U))


def _cmd_track(args) -> int:
    G = _read(args.file)
    if args.via:
        e = (_vertex(G, args.via[0]), _vertex(G, args.via[1]))
        return _show(args, track_via_edge(G, e))
    return _show(args, track(G))


def _cmd_verify(args) -> int:
    if not 1 <= args.max_n <= 7:
        raise _Usage("--max-n must be between 1 and 7")
    rep = exhaustive(args.max_n, labeled=args.labeled)
    if args.random:
        randomized(args.random, args.size, args.seed, args.p, report=rep)
    data = rep.to_json()
    lines = [f"{k}: {v}" for k, v in data["checks"].items()]
    lines.append(f"mismatches: {len(rep.mismatches)}")
    lines.append(f"literal obstruction discrepancies (not counted): "
                 f"L {len(rep.literal_L)}, E {len(rep.literal_E)}")
    _emit(args, data, "\n".join(lines))
    return EXIT_OK if not rep.mismatches else EXIT_PRECONDITION


def _cmd_enumerate(args) -> int:
    if not 1 <= args.n <= 7:
        raise _Usage("--n must be between 1 and 7")
    flt = set(args.filter)
    graphs = enumerate_labeled_graphs(args.n, connected="connected" in flt,
                                      claw_net_free="cn-free" in flt,
                                      two_connected="2-connected" in flt)
    if args.count_only:
        count = sum(1 for _ in graphs)
        _emit(args, {"n": args.n, "filters": sorted(flt), "count": count}, str(count))
        return EXIT_OK
    if args.json:
        for G in graphs:
            print(json.dumps({"n": G.n, "edges": [[a + 1, b + 1] for a, b in G.edges()]}))
    else:
        print("\n".join(format_graph(G) for G in graphs), end="")
    return EXIT_OK


COMMANDS = {"check": _cmd_check, "blocks": _cmd_blocks, "trace": _cmd_trace,
            "track": _cmd_track, "verify": _cmd_verify, "enumerate": _cmd_enumerate}


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)

    def sink(rec):
        out = dict(rec)
        for key in ("z", "p"):
            if key in out:
                out[key] += 1
        if "edge" in out:
            out["edge"] = [v + 1 for v in out["edge"]]
        print(json.dumps(out, sort_keys=True), file=sys.stderr)

    try:
        if args.explain:
            with explain(sink):
                return COMMANDS[args.verb](args)
        return COMMANDS[args.verb](args)
    except _Usage as exc:
        print(f"hamnet: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except NotClawNetFree as exc:
        cert = exc.certificate.to_json() if exc.certificate else None
        print(json.dumps({"status": "error", "error": str(exc), "certificate": cert}, sort_keys=True),
              file=sys.stderr)
        return EXIT_PRECONDITION
    except (PreconditionViolation, HamnetError) as exc:
        print(json.dumps({"status": "error", "error": str(exc)}, sort_keys=True), file=sys.stderr)
        return EXIT_PRECONDITION


if __name__ == "__main__":
    sys.exit(main())
