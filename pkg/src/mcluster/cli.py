"""Command-line interface: ``python -m mcluster <command> ...``.

Exit codes: 0 success, 1 verification failure, 2 invalid or oversized
input, 3 domain error (for example a zero morphism handed to ``cone``).
"""

from __future__ import annotations

import argparse
import json
import logging
import os
import sys

from . import serialize as ser
from .decomposition import decompose, power_components, predict
from .errors import InvalidChord, MclusterError, NoCanonicalTriangle, NotInPower, VerificationFailure
from .homological import classify_morphism, cone, cone_diagonals, suspension
from .polygon import Diagonal, Edge, PolygonConfig, normalize
from .sweep import run_sweep
from .tquiver import build_gamma_m, connected_components, power

log = logging.getLogger("mcluster")

DEFAULT_MAX_N = 200


class UsageError(Exception):
    """Invalid or oversized input (exit code 2)."""


def max_n() -> int:
    raw = os.environ.get("CQ_MAX_N")
    if raw is None:
        return DEFAULT_MAX_N
    try:
        return int(raw)
    except ValueError:
        raise UsageError(f"CQ_MAX_N must be an integer, got {raw!r}")


def parse_range(text: str) -> list[int]:
    try:
        if ".." in text:
            lo, hi = (int(x) for x in text.split("..", 1))
        else:
            lo = hi = int(text)
    except ValueError:
        raise UsageError(f"bad range {text!r}; use K or LO..HI")
    if lo < 1 or hi < lo:
        raise UsageError(f"range {text!r} is empty or not positive")
    return list(range(lo, hi + 1))


def make_config(n: int, m: int) -> PolygonConfig:
    if n < 1 or m < 1:
        raise UsageError("n and m must be positive")
    cfg = PolygonConfig(n, m)
    if cfg.N > max_n():
        raise UsageError(f"N = {cfg.N} exceeds the cap {max_n()} (set CQ_MAX_N to raise it)")
    return cfg


def emit(text: str, path: str | None):
    if path:
        with open(path, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


# ---------------------------------------------------------------- commands

def gamma_document(cfg: PolygonConfig) -> dict:
    Q = build_gamma_m(cfg)
    return ser.quiver_doc(cfg, Q, components=connected_components(Q))


def cmd_gamma(args) -> int:
    cfg = make_config(args.n, args.m)
    doc = gamma_document(cfg)
    if args.format == "dot":
        emit(ser.to_dot(doc), args.output)
    elif args.format == "json":
        emit(ser.dumps(doc), args.output)
    else:
        lines = [f"{cfg}: {len(doc['vertices'])} vertices, {len(doc['arrows'])} arrows"]
        lines += [f"{u} -> {v}" for u, v in doc["arrows"]]
        emit("\n".join(lines) + "\n", args.output)
    return 0


def decompose_document(cfg: PolygonConfig) -> dict:
    reports = decompose(cfg)
    big = build_gamma_m(PolygonConfig(cfg.n * cfg.m, 1))
    P = power(big, cfg.m)
    doc = ser.quiver_doc(cfg, P, components=power_components(cfg),
                         reports=[ser.report_doc(r) for r in reports])
    doc["predicted"] = ser.prediction_doc(predict(cfg))
    return doc


def cmd_decompose(args) -> int:
    cfg = make_config(args.n, args.m)
    doc = decompose_document(cfg)
    if args.format == "json":
        emit(ser.dumps(doc), args.output)
        return 0
    lines = [f"config: {cfg}", f"components: {len(doc['reports'])}"]
    for r in doc["reports"]:
        spec = r["matched_spec"]
        spec_txt = f"ZA_{spec['p']}/tau^-{spec['s']}Sigma^{spec['r']}" if spec else "unmatched"
        u_txt = f" u={r['u_cluster']}" if r["u_cluster"] is not None else ""
        lines.append(f"  {r['name']:<12} size={r['size']:<4} {r['shape']:<15} {spec_txt}{u_txt}")
    emit("\n".join(lines) + "\n", args.output)
    return 0


def _chord(a: int, b: int, N: int) -> Diagonal:
    try:
        d = normalize(a, b, N)
    except InvalidChord as exc:
        raise UsageError(str(exc))
    if isinstance(d, Edge):
        raise UsageError(f"({a},{b}) is a boundary edge of the {N}-gon")
    return d


def cone_document(cfg: PolygonConfig, source: Diagonal, target: Diagonal) -> dict:
    cls = classify_morphism(source, target, cfg)
    if cls.hom_dim == 0:
        raise NoCanonicalTriangle(f"Hom({source},{target}) = 0")
    C = cone_diagonals(source, target, cfg)
    return {
        "config": ser.config_doc(cfg),
        "source": [source.i, source.j],
        "target": [target.i, target.j],
        "hom_dim": cls.hom_dim,
        "kind": cls.kind.value,
        "C": ser.diagonal_list(C),
        "C_modules": [str(s) for s in cone(source, target, cfg).summands],
        "triangle": {"A": [[source.i, source.j]], "B": [[target.i, target.j]], "C": ser.diagonal_list(C),
                     "SigmaA": ser.diagonal_list([suspension(source, cfg.N)])},
    }


def cmd_cone(args) -> int:
    cfg = make_config(args.n, args.m)
    source, target = _chord(args.i, args.j, cfg.N), _chord(args.k, args.l, cfg.N)
    doc = cone_document(cfg, source, target)
    if args.format == "json":
        emit(ser.dumps(doc), args.output)
    else:
        C = " + ".join(f"({i},{j})" for i, j in doc["C"]) or "0"
        emit(f"{doc['kind']}: cone of {source} -> {target} is {C}\n", args.output)
    return 0


def _fixture_diff(expected, actual, path="") -> dict:
    if isinstance(expected, dict) and isinstance(actual, dict):
        out = {}
        for key in sorted(set(expected) | set(actual)):
            out.update(_fixture_diff(expected.get(key), actual.get(key), f"{path}/{key}"))
        return out
    if isinstance(expected, list) and isinstance(actual, list) and len(expected) == len(actual):
        out = {}
        for idx, (e, a) in enumerate(zip(expected, actual)):
            out.update(_fixture_diff(e, a, f"{path}/{idx}"))
        return out
    if expected != actual:
        return {path or "/": {"fixture": expected, "computed": actual}}
    return {}


def check_fixture(path: str) -> dict:
    """Regenerate the document a fixture was made from and return the differences."""
    try:
        with open(path, encoding="utf-8") as fh:
            expected = json.load(fh)
        cfg = make_config(expected["config"]["n"], expected["config"]["m"])
    except (OSError, ValueError, KeyError, TypeError) as exc:
        raise UsageError(f"unreadable fixture {path}: {exc}")
    actual = decompose_document(cfg) if "predicted" in expected else gamma_document(cfg)
    return _fixture_diff(expected, actual)


def cmd_verify(args) -> int:
    if args.fixture:
        diff = check_fixture(args.fixture)
        if diff:
            sys.stdout.write("fixture mismatch:\n" + ser.dumps(diff))
            return 1
        sys.stdout.write(f"fixture {args.fixture}: pass\n")
        return 0
    ns, ms = parse_range(args.n), parse_range(args.m)
    for n in ns:
        for m in ms:
            make_config(n, m)
    cells = run_sweep(ns, ms, jobs=args.jobs)
    failed = [c for c in cells if c["status"] != "pass"]
    if args.format == "json":
        summary = {"cells": cells, "failed": len(failed), "total": len(cells),
                   "status": "pass" if not failed else "fail"}
        emit(ser.dumps(summary), args.output)
    else:
        lines = []
        for c in cells:
            lines.extend(c.get("lines", [f"config: n={c['n']}, m={c['m']}, N={c['N']}"]))
            if c["status"] != "pass":
                lines.append("  failed checks: " + ", ".join(k for k, v in c["checks"].items() if v != "pass"))
                lines.extend(f"  {note}" for note in c["notes"])
                if c["diff"]:
                    lines.append("  diff: " + json.dumps(c["diff"], sort_keys=True))
        lines.append(f"summary: {len(cells) - len(failed)}/{len(cells)} cells pass")
        emit("\n".join(lines) + "\n", args.output)
    return 1 if failed else 0


# ---------------------------------------------------------------- parser

def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="mcluster", description="Geometric model of m-cluster categories of type A.")
    p.add_argument("-v", "--verbose", action="store_true", help="log progress to stderr")
    sub = p.add_subparsers(dest="command", required=True)

    g = sub.add_parser("gamma", help="the m-diagonal quiver of the (nm+2)-gon")
    g.add_argument("--n", type=int, required=True)
    g.add_argument("--m", type=int, required=True)
    g.add_argument("--format", choices=("json", "dot", "table"), default="json")
    g.add_argument("--output")
    g.set_defaults(func=cmd_gamma)

    d = sub.add_parser("decompose", help="components of the m-th power of the diagonal quiver")
    d.add_argument("--n", type=int, required=True)
    d.add_argument("--m", type=int, required=True)
    d.add_argument("--format", choices=("json", "table"), default="table")
    d.add_argument("--output")
    d.set_defaults(func=cmd_decompose)

    c = sub.add_parser("cone", help="cone of the morphism (i,j) -> (k,l) in the cluster category")
    for name in ("i", "j", "k", "l"):
        c.add_argument(name, type=int)
    c.add_argument("--n", type=int, required=True)
    c.add_argument("--m", type=int, default=1)
    c.add_argument("--format", choices=("json", "table"), default="json")
    c.add_argument("--output")
    c.set_defaults(func=cmd_cone)

    v = sub.add_parser("verify", help="run every verification over a grid of (n, m)")
    v.add_argument("--n", default="2..5", help="K or LO..HI")
    v.add_argument("--m", default="1..8", help="K or LO..HI")
    v.add_argument("--jobs", type=int, default=1)
    v.add_argument("--format", choices=("json", "table"), default="table")
    v.add_argument("--fixture", help="compare a stored JSON document against a fresh computation")
    v.add_argument("--output")
    v.set_defaults(func=cmd_verify)
    return p


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING,
                        format="%(levelname)s %(name)s: %(message)s", stream=sys.stderr)
    try:
        return args.func(args)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except VerificationFailure as exc:
        print(f"verification failed: {exc}", file=sys.stderr)
        return 1
    except (NoCanonicalTriangle, NotInPower) as exc:
        print(f"{type(exc).__name__}: {exc}", file=sys.stderr)
        return 3
    except MclusterError as exc:
        print(f"{type(exc).__name__}: {exc}", file=sys.stderr)
        return 1 if isinstance(exc, AssertionError) else 3


if __name__ == "__main__":
    sys.exit(main())
