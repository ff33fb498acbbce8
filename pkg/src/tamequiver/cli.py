"""Command-line front end.

Exit codes: 0 success, 1 domain error (wrong quiver class, non-regular
dimension vector, failed oracle check), 2 usage or parse error.
"""

from __future__ import annotations

import argparse
import sys
from typing import Sequence, TextIO

from . import an, repcore
from .errors import QuiverError
from .io import ParseError, emit_json, load_json, load_quiver, parse_dimvector
from .quiver import (
    Quiver,
    classify_graph,
    coxeter_matrix,
    euler_form,
    is_acyclic,
    is_connected,
    null_root,
)
from .regular import (
    RegularStructure,
    arc_candidates,
    canonical_decomposition,
    regular_simples,
)
from .siring import ring_report
from .slice import Decomposition, tame_generic, tame_generic_lss


def _vec(v: Sequence[int]) -> str:
    return ",".join(str(x) for x in v)


def _coef(m: int, expr: str) -> str:
    if m == 1:
        return expr
    return f"{m}*({expr})" if "+" in expr else f"{m}*{expr}"


def _legend(rs: RegularStructure, out: TextIO) -> None:
    print("legend:", file=out)
    for i, e in enumerate(rs.simples):
        print(f"  e{i + 1} = ({_vec(e)})", file=out)


def _term_expr(rs: RegularStructure, root: tuple[int, ...], arcs: dict) -> str:
    if root == rs.delta:
        return "delta"
    found = arcs.get(root)
    if not found:
        return f"({_vec(root)})"
    return "+".join(f"e{i + 1}" for i in rs.arc(*found[0]))


def cmd_info(args, out: TextIO) -> int:
    q = load_quiver(args.quiver)
    gc = classify_graph(q)
    acyclic = is_acyclic(q)
    data = {
        "vertices": list(q.labels),
        "arrows": [[q.labels[t], q.labels[h]] for t, h in q.arrows],
        "type": gc.tag,
        "rank": gc.rank,
        "connected": is_connected(q),
        "acyclic": acyclic,
        "delta": list(null_root(q)) if gc.extended else None,
        "coxeter_matrix": coxeter_matrix(q) if acyclic and not any(t == h for t, h in q.arrows) else None,
    }
    if args.json:
        out.write(emit_json(data))
        return 0
    print(f"vertices: {q.n_vertices}  arrows: {len(q.arrows)}", file=out)
    rank = f" (rank {gc.rank})" if gc.rank is not None else ""
    print(f"type: {gc.tag}{rank}", file=out)
    print(f"connected: {'yes' if data['connected'] else 'no'}  acyclic: {'yes' if acyclic else 'no'}", file=out)
    if data["delta"] is not None:
        print(f"delta: {_vec(data['delta'])}", file=out)
    if data["coxeter_matrix"] is not None:
        print("coxeter matrix:", file=out)
        for row in data["coxeter_matrix"]:
            print("  " + " ".join(f"{x:3d}" for x in row), file=out)
    return 0


def cmd_delta(args, out: TextIO) -> int:
    delta = null_root(load_quiver(args.quiver))
    if args.json:
        out.write(emit_json(list(delta)))
    else:
        print(_vec(delta), file=out)
    return 0


def _regular_json(rs: RegularStructure) -> dict:
    return {
        "delta": list(rs.delta),
        "n_o": rs.n_o,
        "simples": [
            {"index": i + 1, "root": list(e), "next": rs.next[i] + 1} for i, e in enumerate(rs.simples)
        ],
        "orbits": [[i + 1 for i in orb] for orb in rs.orbits],
    }


def cmd_regular(args, out: TextIO) -> int:
    rs = regular_simples(load_quiver(args.quiver))
    if args.json:
        out.write(emit_json(_regular_json(rs)))
        return 0
    print(f"delta = ({_vec(rs.delta)})", file=out)
    print(f"{len(rs.simples)} regular simples in {rs.n_o} c-orbits", file=out)
    width = max([len(_vec(e)) for e in rs.simples] + [4])
    print(f"  {'name':<5} {'root':<{width}}  c(e)", file=out)
    for i, e in enumerate(rs.simples):
        print(f"  {'e' + str(i + 1):<5} {_vec(e):<{width}}  e{rs.next[i] + 1}", file=out)
    print("orbits:", file=out)
    for orb in rs.orbits:
        print("  " + " -> ".join(f"e{i + 1}" for i in orb + (orb[0],)), file=out)
    return 0


def _print_decomposition(dec: Decomposition, rs: RegularStructure, alpha, out: TextIO) -> None:
    arcs = arc_candidates(rs)
    parts = []
    if dec.delta_mult:
        parts.append(_coef(dec.delta_mult, "delta"))
    for t in dec.real_terms():
        parts.append(_coef(t.mult, _term_expr(rs, t.root, arcs)))
    print(f"({_vec(alpha)}) = " + (" + ".join(parts) if parts else "0"), file=out)
    for t in dec.terms:
        print(f"  {t.mult} x ({_vec(t.root)})  {t.kind}  {_term_expr(rs, t.root, arcs)}", file=out)
    _legend(rs, out)


def cmd_decomp(args, out: TextIO) -> int:
    q = load_quiver(args.quiver)
    alpha = parse_dimvector(args.alpha, q)
    rs = regular_simples(q)
    if args.kind == "canonical":
        canon = canonical_decomposition(q, alpha, rs)
        if args.json:
            out.write(
                emit_json(
                    {
                        "delta": list(rs.delta),
                        "delta_mult": canon.p,
                        "coefficients": [
                            {"simple": i + 1, "root": list(rs.simples[i]), "mult": c}
                            for i, c in enumerate(canon.coeffs)
                            if c > 0
                        ],
                    }
                )
            )
            return 0
        parts = [_coef(canon.p, "delta")] if canon.p else []
        parts += [_coef(c, f"e{i + 1}") for i, c in enumerate(canon.coeffs) if c > 0]
        print(f"({_vec(alpha)}) = " + (" + ".join(parts) if parts else "0"), file=out)
        _legend(rs, out)
        return 0
    dec = (tame_generic if args.kind == "generic" else tame_generic_lss)(q, alpha, rs)
    if args.json:
        out.write(emit_json(dec.to_json()))
    else:
        _print_decomposition(dec, rs, alpha, out)
    return 0


def cmd_an(args, out: TextIO) -> int:
    alpha = parse_dimvector(args.alpha)
    dec = (an.an_generic if args.kind == "generic" else an.an_generic_lss)(alpha)
    if args.json:
        out.write(emit_json(dec.to_json()))
    else:
        print(f"({_vec(alpha)}) = {dec}", file=out)
    return 0


def cmd_siring(args, out: TextIO) -> int:
    q = load_quiver(args.quiver)
    alpha = parse_dimvector(args.alpha, q)
    rs = regular_simples(q)
    rep = ring_report(q, alpha, rs)
    if args.json:
        out.write(emit_json(rep.to_json()))
        return 0
    if rep.krull_dim is None:
        print(f"The algebra of semi-invariants is a {rep.case} algebra.", file=out)
        print(f"note: {rep.note}", file=out)
        return 0
    print(
        f"The algebra of semi-invariants is a {rep.case} algebra of Krull dimension "
        f"{rep.krull_dim} with {len(rep.generators)} generators.",
        file=out,
    )
    print(f"p = {rep.p}, n = {rep.n}, n_o = {rep.n_o}, |Omega| = {len(rep.omega)}", file=out)
    print("generators:", file=out)
    for g in rep.generators:
        print(f"  {g.label():<40} root ({_vec(g.root)})  weight ({_vec(g.weight)})", file=out)
    for g in rep.redundant:
        print(f"  dropped: {g.label()} ({g.note})", file=out)
    if rep.syzygy:
        print(f"syzygy: {rep.syzygy}", file=out)
    if rep.omega:
        print("Omega: " + ", ".join(f"{m}x{a.label()}" for a, m in rep.omega), file=out)
        print("Delta: " + ", ".join(a.label() for a in rep.delta_arcs), file=out)
    _legend(rs, out)
    return 0


def cmd_oracle_verify_an(args, out: TextIO) -> int:
    mismatches = 0
    pairs = 0
    for n in range(1, args.n + 1):
        ivs = list(an.all_intervals(n))
        reps = {iv: repcore.interval_rep(n, iv) for iv in ivs}
        for a in ivs:
            for b in ivs:
                pairs += 1
                if repcore.hom_dim(reps[a], reps[b]) != an.an_hom_dim(n, a, b):
                    mismatches += 1
                elif repcore.ext_dim(reps[a], reps[b]) != an.an_ext_dim(n, a, b):
                    mismatches += 1
    if args.json:
        out.write(emit_json({"n": args.n, "pairs": pairs, "mismatches": mismatches}))
    else:
        print(f"A_1..A_{args.n}: {pairs} interval pairs, {mismatches} mismatches", file=out)
    return 0 if mismatches == 0 else 1


def verify_eq(q: Quiver, seed: int, rs: RegularStructure | None = None) -> dict:
    """Sample Schurian E_i and compare Hom/Ext between them with the E(Q) arrows."""
    if rs is None:
        rs = regular_simples(q)
    reps = [repcore.sample_schurian(q, e, seed + i) for i, e in enumerate(rs.simples)]
    k = len(reps)
    hom = [[repcore.hom_dim(reps[i], reps[j]) for j in range(k)] for i in range(k)]
    ext = [[repcore.ext_dim(reps[i], reps[j]) for j in range(k)] for i in range(k)]
    ok = all(
        hom[i][j] == int(i == j) and ext[i][j] == int(rs.next[i] == j) for i in range(k) for j in range(k)
    )
    return {"seed": seed, "hom": hom, "ext": ext, "ok": ok}


def cmd_oracle_verify_eq(args, out: TextIO) -> int:
    q = load_quiver(args.quiver)
    res = verify_eq(q, args.seed)
    if args.json:
        out.write(emit_json(res))
    else:
        print(f"hom(E_i, E_j) and ext(E_i, E_j) for sampled regular simples (seed {args.seed}):", file=out)
        for name in ("hom", "ext"):
            print(f"{name}:", file=out)
            for row in res[name]:
                print("  " + " ".join(str(x) for x in row), file=out)
        print("E(Q) arrows confirmed" if res["ok"] else "MISMATCH with E(Q)", file=out)
    return 0 if res["ok"] else 1


def cmd_oracle_hom(args, out: TextIO) -> int:
    q = load_quiver(args.quiver)
    try:
        u = repcore.Representation.from_json(q, load_json(args.rep_a))
        v = repcore.Representation.from_json(q, load_json(args.rep_b))
    except (KeyError, TypeError, ValueError) as exc:
        raise ParseError(f"malformed representation file: {exc}") from exc
    h = repcore.hom_dim(u, v)
    e = euler_form(q, u.dims, v.dims)
    data = {"hom": h, "ext": repcore.ext_dim(u, v), "euler": e}
    data["schofield"] = str(repcore.schofield_pairing(u, v)) if e == 0 else None
    if args.json:
        out.write(emit_json(data))
    else:
        print(f"hom = {data['hom']}  ext = {data['ext']}  euler = {e}", file=out)
        if data["schofield"] is not None:
            print(f"schofield pairing = {data['schofield']}", file=out)
    return 0


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", help="machine-readable output")
    parser = argparse.ArgumentParser(
        prog="tamequiver", description="Decompositions and semi-invariants of tame quivers"
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("info", parents=[common], help="classify a quiver")
    p.add_argument("quiver")
    p.set_defaults(func=cmd_info)

    p = sub.add_parser("delta", parents=[common], help="null root of an extended Dynkin quiver")
    p.add_argument("quiver")
    p.set_defaults(func=cmd_delta)

    p = sub.add_parser("regular", parents=[common], help="regular simple roots and c-orbits")
    p.add_argument("quiver")
    p.set_defaults(func=cmd_regular)

    p = sub.add_parser("decomp", parents=[common], help="canonical, generic or generic lss decomposition")
    p.add_argument("--kind", choices=("canonical", "generic", "lss"), default="generic")
    p.add_argument("quiver")
    p.add_argument("alpha", help="comma-separated dimension vector in the file's vertex order")
    p.set_defaults(func=cmd_decomp)

    p = sub.add_parser("an", parents=[common], help="decompositions for the equioriented A_n quiver")
    p.add_argument("--kind", choices=("generic", "lss"), default="generic")
    p.add_argument("alpha")
    p.set_defaults(func=cmd_an)

    p = sub.add_parser("siring", parents=[common], help="classify the algebra of semi-invariants")
    p.add_argument("quiver")
    p.add_argument("alpha")
    p.set_defaults(func=cmd_siring)

    p = sub.add_parser("oracle", help="brute-force representation checks")
    osub = p.add_subparsers(dest="oracle_command", required=True)
    o = osub.add_parser("verify-an", parents=[common], help="A_n Hom/Ext formulas against linear algebra")
    o.add_argument("--n", type=int, default=6)
    o.set_defaults(func=cmd_oracle_verify_an)
    o = osub.add_parser("verify-eq", parents=[common], help="Hom/Ext between sampled regular simples")
    o.add_argument("quiver")
    o.add_argument("--seed", type=int, default=1)
    o.set_defaults(func=cmd_oracle_verify_eq)
    o = osub.add_parser("hom", parents=[common], help="Hom, Ext and Schofield pairing of two representations")
    o.add_argument("quiver")
    o.add_argument("rep_a")
    o.add_argument("rep_b")
    o.set_defaults(func=cmd_oracle_hom)
    return parser


def run(argv: Sequence[str] | None = None, out: TextIO | None = None, err: TextIO | None = None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return args.func(args, out)
    except ParseError as exc:
        print(f"error: {exc}", file=err)
        return 2
    except QuiverError as exc:
        print(f"error: {exc}", file=err)
        return 1


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
