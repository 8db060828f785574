"""Command line surface: build representations, verify, graph, analyze, sweep.

Sources are either JSON representation files or builtin specs like
``tym:n=6,u=2`` with combinators ``tensor(SPEC,y=R)``, ``dsum(SPEC,SPEC)``
and ``conj(SPEC,seed=N)``.  Rationals are written p/q.  Output is
deterministic for a fixed argv and seed.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from random import Random

from .braid import verify_braid_relations
from .classify import (
    Verdict,
    analyze,
    burnside_dimension,
    invariant_subspace_search,
    tym_irreducibility,
)
from .errors import BraidRepError, SpecParseError
from .friendship import (
    classify_graph,
    friendship_graph,
    full_friendship_graph,
    graph_to_dot,
    graph_to_json_dict,
)
from .linalg import rational
from .zoo import (
    character_rep,
    conjugate_rep,
    direct_sum,
    load_representation,
    random_invertible_matrix,
    reduced_burau,
    rep_to_dict,
    tensor_character,
    tym_standard,
)

_ATOM_KEYS = {
    "tym": ("n", "u"),
    "burau": ("n", "t"),
    "char": ("n", "y"),
}


def _split_top(text):
    """Split on commas that are not nested inside parentheses."""
    parts = []
    depth = 0
    current = []
    for ch in text:
        if ch == "(":
            depth += 1
        elif ch == ")":
            depth -= 1
            if depth < 0:
                raise SpecParseError(f"unbalanced parentheses in {text!r}")
        if ch == "," and depth == 0:
            parts.append("".join(current))
            current = []
        else:
            current.append(ch)
    if depth != 0:
        raise SpecParseError(f"unbalanced parentheses in {text!r}")
    parts.append("".join(current))
    return [p.strip() for p in parts]


def _starts_spec(part):
    return ":" in part or "(" in part


def _group_specs(parts, expected):
    """Regroup comma-split parts into the expected number of spec strings."""
    starts = [k for k, p in enumerate(parts) if _starts_spec(p)]
    if len(starts) != expected or starts[0] != 0:
        raise SpecParseError(f"expected {expected} nested spec(s) in {','.join(parts)!r}")
    bounds = starts + [len(parts)]
    return [",".join(parts[bounds[k] : bounds[k + 1]]) for k in range(expected)]


def _parse_atom(text):
    family, _, params = text.partition(":")
    family = family.strip()
    if family not in _ATOM_KEYS:
        raise SpecParseError(f"unknown family {family!r}")
    keys = _ATOM_KEYS[family]
    values = {}
    for pair in _split_top(params):
        key, eq, value = pair.partition("=")
        key = key.strip()
        if not eq or key not in keys:
            raise SpecParseError(f"bad parameter {pair!r} for family {family!r}")
        values[key] = value.strip()
    if set(values) != set(keys):
        raise SpecParseError(f"family {family!r} needs parameters {keys}")
    try:
        n = int(values["n"])
        scalar = rational(values[keys[1]])
    except (ValueError, ZeroDivisionError) as exc:
        raise SpecParseError(f"bad value in {text!r}: {exc}") from exc
    builder = {"tym": tym_standard, "burau": reduced_burau, "char": character_rep}[family]
    return builder(n, scalar), {"family": family, "n": n, keys[1]: scalar}


def parse_rep_spec(text, default_seed=0):
    """Parse a builtin spec; returns (representation, metadata)."""
    text = text.strip()
    for comb in ("tensor", "dsum", "conj"):
        if text.startswith(comb + "(") and text.endswith(")"):
            parts = _split_top(text[len(comb) + 1 : -1])
            if comb == "tensor":
                if len(parts) < 2 or not parts[-1].startswith("y="):
                    raise SpecParseError("tensor needs tensor(SPEC,y=RATIONAL)")
                rep, _ = parse_rep_spec(",".join(parts[:-1]), default_seed)
                try:
                    y = rational(parts[-1][2:])
                except (ValueError, ZeroDivisionError) as exc:
                    raise SpecParseError(f"bad tensor scalar: {exc}") from exc
                return tensor_character(rep, y), {"family": "tensor"}
            if comb == "dsum":
                left, right = _group_specs(parts, 2)
                a, _ = parse_rep_spec(left, default_seed)
                b, _ = parse_rep_spec(right, default_seed)
                return direct_sum(a, b), {"family": "dsum"}
            if parts and parts[-1].startswith("seed="):
                try:
                    seed = int(parts[-1][5:])
                except ValueError as exc:
                    raise SpecParseError(f"bad conj seed: {exc}") from exc
                inner = ",".join(parts[:-1])
            else:
                seed = default_seed
                inner = ",".join(parts)
            rep, _ = parse_rep_spec(inner, default_seed)
            p = random_invertible_matrix(rep.r, Random(seed))
            rep = conjugate_rep(rep, p, label=f"{rep.label} conjugated by P#seed={seed}")
            return rep, {"family": "conj", "seed": seed}
    if ":" in text:
        return _parse_atom(text)
    raise SpecParseError(f"cannot parse spec {text!r}")


def _load_source(source, default_seed):
    """A source is a JSON file path or a builtin spec string."""
    if os.path.exists(source) or source.endswith(".json"):
        return load_representation(source), {"family": "file"}
    return parse_rep_spec(source, default_seed)


def _emit(text, out_path):
    if out_path:
        with open(out_path, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _json_text(obj):
    return json.dumps(obj, indent=2) + "\n"


def _resolve_seed(args):
    if args.seed is not None:
        return args.seed
    env = os.environ.get("BRAIDREP_SEED")
    return int(env) if env else 0


def _cmd_make(args):
    rep, _ = parse_rep_spec(args.source, _resolve_seed(args))
    _emit(_json_text(rep_to_dict(rep)), args.out)
    return 0


def _cmd_verify(args):
    rep, _ = _load_source(args.source, _resolve_seed(args))
    report = verify_braid_relations(rep)
    if args.format == "text":
        lines = [
            f"braid relations: {'ok' if report.braid_relations_ok else 'FAIL'}",
            f"far commutation: {'ok' if report.far_commutation_ok else 'FAIL'}",
        ]
        lines += [f"  {desc} fails at {pair}" for desc, pair in report.failures]
        _emit("\n".join(lines) + "\n", args.out)
    else:
        _emit(_json_text({
            "braid_relations_ok": report.braid_relations_ok,
            "far_commutation_ok": report.far_commutation_ok,
            "failures": [[desc, list(pair)] for desc, pair in report.failures],
        }), args.out)
    return 0


def _cmd_graph(args):
    rep, _ = _load_source(args.source, _resolve_seed(args))
    full = full_friendship_graph(rep)
    try:
        tag = classify_graph(full).tag.value
    except BraidRepError as exc:
        tag = f"unclassified: {exc}"
    graph = full if args.full else friendship_graph(rep)
    if args.format == "dot":
        _emit(graph_to_dot(graph, label=tag), args.out)
    elif args.format == "text":
        edges = " ".join(f"s{graph.label_of(i)}-s{graph.label_of(j)}" for i, j in graph.edges())
        _emit(f"class: {tag}\nedges: {edges or '(none)'}\n", args.out)
    else:
        data = graph_to_json_dict(graph)
        data["class"] = tag
        _emit(_json_text(data), args.out)
    return 0


def _cmd_analyze(args):
    seed = _resolve_seed(args)
    rep, _ = _load_source(args.source, seed)
    report = analyze(rep, seed=seed)
    if args.format == "text":
        _emit(report.to_text(), args.out)
    else:
        _emit(_json_text(report.to_json_dict()), args.out)
    return 0


def _verdict_dict(verdict):
    data = {"tag": verdict.tag.value, "algebra_dim": verdict.algebra_dim}
    if verdict.witness is not None:
        data["witness"] = verdict.witness.basis.to_strings()
    data["detail"] = verdict.detail
    return data


def _cmd_irreducible(args):
    seed = _resolve_seed(args)
    rep, meta = _load_source(args.source, seed)
    if meta.get("family") == "tym":
        verdict = tym_irreducibility(meta["n"], meta["u"], seed=seed)
    else:
        dim, verdict = burnside_dimension(rep)
        if verdict.tag is not Verdict.ABSOLUTELY_IRREDUCIBLE:
            verdict = invariant_subspace_search(rep, seed=seed, algebra_dim=dim)
    if args.format == "text":
        lines = [f"verdict: {verdict.tag.value}"]
        if verdict.algebra_dim is not None:
            lines.append(f"algebra dimension: {verdict.algebra_dim}")
        if verdict.witness is not None:
            lines.append(f"witness dimension: {verdict.witness.dim}")
        if verdict.detail:
            lines.append(verdict.detail)
        _emit("\n".join(lines) + "\n", args.out)
    else:
        _emit(_json_text(_verdict_dict(verdict)), args.out)
    return 0


def _parse_int_list(text):
    values = []
    for chunk in text.split(","):
        chunk = chunk.strip()
        if ".." in chunk:
            lo, hi = chunk.split("..", 1)
            values.extend(range(int(lo), int(hi) + 1))
        else:
            values.append(int(chunk))
    return values


def _cmd_sweep(args):
    seed = _resolve_seed(args)
    try:
        ns = _parse_int_list(args.n)
        us = [rational(tok.strip()) for tok in args.u.split(",")]
    except (ValueError, ZeroDivisionError) as exc:
        raise SpecParseError(f"bad sweep grid: {exc}") from exc
    rows = []
    for n in ns:
        for u in us:
            report = analyze(tym_standard(n, u), seed=seed)
            rows.append({
                "n": n,
                "u": str(u),
                "corank": report.corank,
                "graph_class": report.graph_class.tag.value if report.graph_class else None,
                "irreducibility": report.verdict.tag.value,
                "standard_form_u": str(report.standard_form.u) if report.standard_form else None,
            })
    if args.format == "text":
        header = f"{'n':>3} {'u':>8} {'corank':>6} {'graph':>20} {'irreducibility':>22} {'recovered u':>12}"
        lines = [header]
        for row in rows:
            lines.append(
                f"{row['n']:>3} {row['u']:>8} {row['corank']:>6} "
                f"{row['graph_class'] or '-':>20} {row['irreducibility']:>22} "
                f"{row['standard_form_u'] or '-':>12}"
            )
        _emit("\n".join(lines) + "\n", args.out)
    else:
        _emit(_json_text(rows), args.out)
    return 0


def _build_parser():
    parser = argparse.ArgumentParser(
        prog="braidrep",
        description="Construct, verify and classify rational braid group representations.",
    )
    sub = parser.add_subparsers(dest="verb", required=True)

    def common(p, source_help=None):
        if source_help:
            p.add_argument("source", help=source_help)
        p.add_argument("--format", choices=("json", "dot", "text"), default="json")
        p.add_argument("--out", default=None, help="write output to this file")
        p.add_argument("--seed", type=int, default=None,
                       help="seed for randomized steps (falls back to BRAIDREP_SEED)")

    p = sub.add_parser("make", help="construct a builtin representation and emit its JSON")
    common(p, "builtin spec, e.g. tym:n=6,u=2")
    p.set_defaults(func=_cmd_make)

    p = sub.add_parser("verify", help="check the defining relations")
    common(p, "builtin spec or JSON file")
    p.set_defaults(func=_cmd_verify)

    p = sub.add_parser("graph", help="emit the friendship graph")
    common(p, "builtin spec or JSON file")
    p.add_argument("--full", action="store_true", help="include the derived vertex s0")
    p.set_defaults(func=_cmd_graph)

    p = sub.add_parser("analyze", help="run the full analysis pipeline")
    common(p, "builtin spec or JSON file")
    p.set_defaults(func=_cmd_analyze)

    p = sub.add_parser("irreducible", help="irreducibility verdict for a family")
    common(p, "builtin spec or JSON file")
    p.set_defaults(func=_cmd_irreducible)

    p = sub.add_parser("sweep", help="analyze the standard family over a grid")
    p.add_argument("--n", required=True, help="strand counts, e.g. 6..10 or 6,8")
    p.add_argument("--u", required=True, help="comma list of rationals, e.g. 2,3,1/2")
    common(p)
    p.set_defaults(func=_cmd_sweep)

    return parser


def run(argv) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return args.func(args)
    except (BraidRepError, ValueError, OSError, json.JSONDecodeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


def main():
    sys.exit(run(sys.argv[1:]))


if __name__ == "__main__":
    main()
