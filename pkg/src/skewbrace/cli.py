"""Command-line front end.

Exit codes: 0 success, 1 a well-formed input with a negative answer,
2 malformed or invalid input, 3 search guard exceeded.
"""

from __future__ import annotations

import argparse
import sys
from dataclasses import dataclass

from . import serialize as io
from .brace import brace_isomorphic, gamma, opposite, subgroup_report
from .enumeration import (
    DEFAULT_LIMIT,
    count_by_type,
    enumerate_braces,
    expected_pq_counts,
    kind_counts,
    pq_catalog,
)
from .errors import (
    BadComplementPair,
    BraceAxiomFails,
    NotNormalized,
    NotRegular,
    OrderGuardExceeded,
    SkewBraceError,
)
from .groups import FiniteGroup, are_isomorphic, is_normal, restrict, subgroups_of_order
from .hgs import coset_space, induce, psi, regular_to_brace
from .sdp import conjugation_phi, is_admissible, make_sdp_brace, make_spec

OK, NEGATIVE, BAD_INPUT, GUARD = 0, 1, 2, 3


@dataclass
class CommandResult:
    code: int
    report: str
    output: object = None  # JSON-ready data for --output


def cmd_verify(args) -> CommandResult:
    data = io.read_json(args.brace)
    try:
        b = io.brace_from_json(data)
    except BraceAxiomFails as exc:
        x, y, z = exc.triple
        return CommandResult(NEGATIVE, f"not a skew brace: axiom fails at x={x}, y={y}, z={z}")
    return CommandResult(OK, f"valid skew brace of order {b.n}", io.brace_to_json(b))


def cmd_gamma(args) -> CommandResult:
    b = io.load(args.brace, "brace")
    g = gamma(b)
    lines = [f"gamma_{x}: {' '.join(map(str, row))}" for x, row in enumerate(g)]
    return CommandResult(OK, "\n".join(lines), {"gamma": [list(r) for r in g]})


def cmd_ideals(args) -> CommandResult:
    b = io.load(args.brace, "brace")
    rows, lines = [], []
    for c in subgroup_report(b):
        flags = c.flags()
        rows.append({"subset": list(c.subset), **flags})
        kind = (
            "ideal" if c.is_ideal
            else "strong left ideal" if c.is_strong_left_ideal
            else "left ideal" if c.is_left_ideal
            else "-"
        )
        lines.append(f"{list(c.subset)}: {kind}")
    n_left = sum(r["left_ideal"] for r in rows)
    n_ideal = sum(r["ideal"] for r in rows)
    lines.append(f"{len(rows)} circ subgroups, {n_left} left ideals, {n_ideal} ideals")
    return CommandResult(OK, "\n".join(lines), {"subgroups": rows})


def cmd_opposite(args) -> CommandResult:
    b = opposite(io.load(args.brace, "brace"))
    return CommandResult(OK, f"opposite brace of order {b.n}", io.brace_to_json(b))


def cmd_sdp(args) -> CommandResult:
    spec = io.load(args.spec, "spec")
    report = is_admissible(spec)
    if not report:
        return CommandResult(NEGATIVE, str(report))
    if args.check_only:
        return CommandResult(OK, "admissible")
    b = make_sdp_brace(spec)
    return CommandResult(OK, f"admissible; skew brace of order {b.n}", io.brace_to_json(b))


def cmd_enumerate(args) -> CommandResult:
    G = io.load(args.group, "group")
    cat = enumerate_braces(G, limit=args.limit)
    counts = count_by_type(cat)
    lines = [f"{len(cat)} skew braces on the given circle group"]
    lines += [f"  {k}: {v}" for k, v in counts.items()]
    return CommandResult(OK, "\n".join(lines), io.catalog_to_json(cat))


def cmd_pq(args) -> CommandResult:
    cat = pq_catalog(args.p, args.q, args.which)
    kinds = kind_counts(cat)
    assert kinds == expected_pq_counts(args.p, args.q, args.which)
    lines = [f"{len(cat)} skew braces of order {args.p * args.q} ({args.which} circle group)"]
    lines += [f"  {k}: {v}" for k, v in count_by_type(cat).items()]
    lines.append(f"  cyclic type {kinds['cyclic']}, metacyclic type {kinds['metacyclic']}")
    return CommandResult(OK, "\n".join(lines), io.catalog_to_json(cat))


def _subset(text: str) -> list:
    try:
        return sorted({int(v) for v in text.replace(" ", "").strip("[]").split(",") if v})
    except ValueError:
        raise argparse.ArgumentTypeError(f"not a list of integers: {text!r}") from None


def _normal_complement(G: FiniteGroup, B) -> list:
    for A in subgroups_of_order(G, G.n // len(B)):
        if set(A) & set(B) == {0} and is_normal(G, A):
            return list(A)
    raise BadComplementPair(f"{B} has no normal complement")


def cmd_induce(args) -> CommandResult:
    M = io.load(args.M, "permset")
    N = io.load(args.N, "permset")
    G = io.load(args.group, "group")
    B = args.B
    A = sorted(args.A) if args.A is not None else _normal_complement(G, B)
    X = coset_space(G, B)
    try:
        S = induce(M, N, X, A)
    except (NotRegular, NotNormalized) as exc:
        return CommandResult(NEGATIVE, f"cannot induce: {exc}")
    b = regular_to_brace(S, G)
    lines = [f"induced regular subgroup of order {len(S)}; skew brace of order {b.n}"]
    # compare with the semidirect product with trivial theta
    A_brace = regular_to_brace(psi(X, A).image(M), restrict(G, A))
    B_brace = regular_to_brace(N, restrict(G, B))
    phi = conjugation_phi(G, A, B)
    spec = make_spec(A_brace, B_brace, phi, [tuple(range(len(A)))] * len(B))
    if is_admissible(spec):
        ext = make_sdp_brace(spec)
        f = [G.table[a][x] for a in sorted(A) for x in sorted(B)]
        n = G.n
        finv = [0] * n
        for i, g in enumerate(f):
            finv[g] = i
        same = all(
            f[ext.dot.table[finv[x]][finv[y]]] == b.dot.table[x][y] for x in range(n) for y in range(n)
        )
        assert same, "induced brace differs from the semidirect product with trivial theta"
        lines.append("equals the semidirect product of the induced braces on A and B (trivial theta)")
    return CommandResult(OK, "\n".join(lines), io.brace_to_json(b))


def cmd_isomorphic(args) -> CommandResult:
    d1, d2 = io.read_json(args.first), io.read_json(args.second)
    if "dot" in d1 and "dot" in d2:
        w = brace_isomorphic(io.brace_from_json(d1), io.brace_from_json(d2))
        what = "braces"
    else:
        G1 = io.group_from_json(d1) if "table" in d1 else io.brace_from_json(d1).circ
        G2 = io.group_from_json(d2) if "table" in d2 else io.brace_from_json(d2).circ
        w = are_isomorphic(G1, G2)
        what = "groups"
    if w is None:
        return CommandResult(NEGATIVE, f"{what} are not isomorphic")
    return CommandResult(OK, f"{what} are isomorphic via {list(w)}", {"witness": list(w)})


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--output", "-o", default=argparse.SUPPRESS, help="write JSON result here")
    common.add_argument("--limit", type=int, default=argparse.SUPPRESS, help="order guard for searches")
    common.add_argument("--seed", type=int, default=argparse.SUPPRESS, help="accepted for harness use")

    parser = argparse.ArgumentParser(prog="skewbrace", description="Finite skew brace toolkit.")
    parser.add_argument("--output", "-o", default=None)
    parser.add_argument("--limit", type=int, default=DEFAULT_LIMIT)
    parser.add_argument("--seed", type=int, default=0)
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, func, help_):
        p = sub.add_parser(name, parents=[common], help=help_)
        p.set_defaults(func=func)
        return p

    add("verify", cmd_verify, "check the skew brace axiom").add_argument("brace")
    add("gamma", cmd_gamma, "print the gamma-function").add_argument("brace")
    add("ideals", cmd_ideals, "classify every circ subgroup").add_argument("brace")
    add("opposite", cmd_opposite, "the opposite brace").add_argument("brace")
    p = add("sdp", cmd_sdp, "semidirect product of an ideal and a left ideal")
    p.add_argument("spec")
    p.add_argument("--check-only", action="store_true")
    add("enumerate", cmd_enumerate, "all braces on a circle group").add_argument("group")
    p = add("pq", cmd_pq, "constructive catalog of order pq")
    p.add_argument("p", type=int)
    p.add_argument("q", type=int)
    p.add_argument("--which", choices=("cyclic", "metacyclic"), default="metacyclic")
    p = add("induce", cmd_induce, "induce a regular subgroup from M on G/B and N on B")
    p.add_argument("M")
    p.add_argument("N")
    p.add_argument("group")
    p.add_argument("B", type=_subset)
    p.add_argument("--A", type=_subset, default=None, help="normal complement (default: first found)")
    p = add("isomorphic", cmd_isomorphic, "isomorphism test for two groups or two braces")
    p.add_argument("first")
    p.add_argument("second")
    return parser


def run(argv=None) -> CommandResult:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return CommandResult(exc.code if isinstance(exc.code, int) else BAD_INPUT, "")
    try:
        result = args.func(args)
    except OrderGuardExceeded as exc:
        return CommandResult(GUARD, f"error: {exc}")
    except SkewBraceError as exc:
        return CommandResult(BAD_INPUT, f"error: {type(exc).__name__}: {exc}")
    if result.code == OK and args.output and result.output is not None:
        io.write_json(args.output, result.output)
    return result


def main(argv=None) -> int:
    result = run(argv)
    if result.report:
        stream = sys.stdout if result.code in (OK, NEGATIVE) else sys.stderr
        print(result.report, file=stream)
    return result.code


if __name__ == "__main__":
    sys.exit(main())
