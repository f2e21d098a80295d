"""Command-line front end.

Weights are written as semicolon-separated lists of comma-separated Dynkin
labels, e.g. ``--weights "4,1,0;4,1,0;1,0,1"``.  Exit codes: 0 success,
1 negative verification (off the face, unequal ranks, failed relation),
2 invalid input, 3 internal failure.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Optional, Sequence

from .divisor import check_divisor_relation, divisor_class_symmetrized
from .fusion import fusion_context, invariant_dimension, rank_genus0, verlinde_rank_oracle
from .lie import build_root_system
from .polytope import (
    FaceSpec,
    WeightData,
    enumerate_faces_typeA,
    face_from_subsets,
    in_polytope_typeA,
    on_face,
    to_alcove,
)
from .qschubert import partition_to_subset
from .reduction import OffFaceError, reduce, verify_factorization


class InternalError(Exception):
    pass


def _int_list(text: str) -> tuple:
    text = text.strip()
    if text in ("", "e", "()"):
        return ()
    return tuple(int(x) for x in text.split(","))


def parse_weight_list(text: str) -> list[tuple]:
    return [_int_list(part) for part in text.split(";")]


def _pair(text: str) -> tuple[int, int]:
    k, n = _int_list(text)
    return k, n


def _weight_data(args) -> WeightData:
    rs = build_root_system(args.algebra)
    return WeightData(rs, parse_weight_list(args.weights), args.level)


def _face(args, rs) -> FaceSpec:
    if args.grassmannian:
        if rs.type_label != "A":
            raise ValueError("--grassmannian faces need a type A algebra")
        k, n = _pair(args.grassmannian)
        if n != rs.rank + 1:
            raise ValueError(f"Gr({k},{n}) does not belong to {rs.name}")
        if not args.cells:
            raise ValueError("--grassmannian needs --cells")
        cells = parse_weight_list(args.cells)
        if args.partitions:
            cells = [partition_to_subset(k, n, c) for c in cells]
        return face_from_subsets(k, n, cells, args.degree)
    if args.node is None or args.words is None:
        raise ValueError("a face needs --grassmannian/--cells or --node/--words")
    if args.degree is None:
        raise ValueError("--degree is required with --words")
    return FaceSpec(args.node, tuple(parse_weight_list(args.words)), args.degree)


def _fmt_weights(ws) -> str:
    return "; ".join(",".join(str(c) for c in w) for w in ws) or "-"


def _checked_rank(ctx, weights, oracle: bool) -> int:
    rank = rank_genus0(ctx, weights).rank
    if oracle:
        try:
            other = verlinde_rank_oracle(ctx, weights)
        except ArithmeticError as exc:
            raise InternalError(str(exc)) from exc
        if other != rank:
            raise InternalError(f"fusion rank {rank} disagrees with Verlinde rank {other}")
    return rank


def _emit(args, payload: dict, text: str) -> None:
    if args.json:
        print(json.dumps(payload, sort_keys=True))
    else:
        print(text)


# --- subcommands -------------------------------------------------------------


def cmd_rank(args) -> int:
    wd = _weight_data(args)
    ctx = fusion_context(wd.rs, wd.level)
    rank = _checked_rank(ctx, wd.weights, args.oracle_crosscheck)
    payload = {"rank": rank, "algebra": wd.rs.name, "level": wd.level,
               "weights": [list(w) for w in wd.weights]}
    _emit(args, payload, str(rank))
    return 0


def cmd_invariants(args) -> int:
    rs = build_root_system(args.algebra)
    weights = parse_weight_list(args.weights)
    dim = invariant_dimension(rs, weights)
    _emit(args, {"dimension": dim, "algebra": rs.name,
                 "weights": [list(w) for w in weights]}, str(dim))
    return 0


def cmd_alcove(args) -> int:
    wd = _weight_data(args)
    points = to_alcove(wd)
    payload = {"points": [[str(c) for c in p] for p in points]}
    text = "\n".join(f"mu_{i + 1} = ({', '.join(str(c) for c in p)})"
                     for i, p in enumerate(points))
    _emit(args, payload, text)
    return 0


def cmd_face_check(args) -> int:
    wd = _weight_data(args)
    face = _face(args, wd.rs)
    report = on_face(wd, face)
    payload = dict(report.to_json(), face=face.to_json())
    text = (f"on face: {'yes' if report.on_face else 'no'}\n"
            f"slack: {report.slack}\n"
            f"degree: {report.degree}\n"
            f"certified: {'yes' if report.certified else 'no'}")
    _emit(args, payload, text)
    return 0 if report.on_face else 1


def cmd_member(args) -> int:
    wd = _weight_data(args)
    report = in_polytope_typeA(wd)
    payload = {"member": report.member, "faces_checked": report.faces_checked,
               "witness": report.witness.to_json() if report.witness else None,
               "slack": str(report.slack) if report.slack is not None else None}
    text = f"member: {'yes' if report.member else 'no'} ({report.faces_checked} faces checked)"
    if report.witness:
        text += f"\nviolated face: {report.witness.to_json()} (slack {report.slack})"
    _emit(args, payload, text)
    return 0 if report.member else 1


def cmd_faces(args) -> int:
    k, n = _pair(args.grassmannian)
    faces = enumerate_faces_typeA(k, n, args.points, args.max_degree, ordered=not args.orbits)
    payload = {"faces": [f.to_json() for f in faces]}
    text = "\n".join(f"d={f.degree}  " + " ".join("{" + ",".join(map(str, s)) + "}"
                                                  for s in f.subsets) for f in faces)
    _emit(args, payload, text or "no faces")
    return 0


def _reduced_text(red) -> str:
    lines = []
    for a in red.audit:
        lines.append(f"u^-1 lam: {_fmt_weights([a.weight])} -> {_fmt_weights([a.moved])}"
                     f"  (omega_P part {a.central})")
    if red.shift:
        s = red.shift
        lines.append(f"k_L = {s.k_L}, N_P = {s.N_P}, omega_P(mu_P) = {s.omega_P_of_mu_P}, "
                     f"d_0 = {s.d_0}")
    for rf in red.factors:
        lines.append(f"{rf.type_name} level {rf.level}: {_fmt_weights(rf.weights)}")
    return "\n".join(lines)


def cmd_reduce(args) -> int:
    wd = _weight_data(args)
    face = _face(args, wd.rs)
    try:
        red = reduce(wd, face, force=args.force)
    except OffFaceError as exc:
        print(f"error: {exc}; use --force to reduce anyway", file=sys.stderr)
        return 1
    payload = {
        "factors": [{"type": rf.type_name, "level": rf.level,
                     "weights": [list(w) for w in rf.weights]} for rf in red.factors],
        "audit": [{"weight": list(a.weight), "word": list(a.word), "moved": list(a.moved),
                   "omega_P": str(a.central)} for a in red.audit],
        "degree_shift": red.shift.to_json() if red.shift else None,
        "face": face.to_json(),
        "forced": red.forced,
    }
    _emit(args, payload, _reduced_text(red))
    return 0


def cmd_verify(args) -> int:
    wd = _weight_data(args)
    face = _face(args, wd.rs)
    try:
        report = verify_factorization(wd, face, force=args.force, oracle=args.oracle_crosscheck)
    except OffFaceError as exc:
        print(f"error: {exc}; use --force to compare anyway", file=sys.stderr)
        return 1
    text = [f"lhs rank: {report.lhs_rank}"]
    for rf, r in zip(report.reduced.factors, report.factor_ranks):
        text.append(f"{rf.type_name} level {rf.level}: rank {r}")
    text.append(f"product: {report.product}")
    text.append(f"equal: {'yes' if report.equal else 'no'}")
    if not report.on_face:
        text.append(f"note: weight data is off the face (slack {report.slack})")
    _emit(args, report.to_json(), "\n".join(text))
    return 0 if report.equal and report.on_face else 1


def cmd_divisor(args) -> int:
    wd = _weight_data(args)
    cls = divisor_class_symmetrized(fusion_context(wd.rs, wd.level), wd.weights)
    _emit(args, cls.to_json(), str(cls))
    return 0


def cmd_relation(args) -> int:
    wd = _weight_data(args)
    face = _face(args, wd.rs)
    try:
        report = check_divisor_relation(wd, face, force=args.force)
    except OffFaceError as exc:
        print(f"error: {exc}; use --force to compare anyway", file=sys.stderr)
        return 1
    text = (f"lhs: {report.lhs}\nrhs: {report.rhs}\n"
            f"equal: {'yes' if report.equal else 'no'}")
    _emit(args, report.to_json(), text)
    return 0 if report.equal else 1


# --- parser ------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="confblocks", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, level=True, weights=True):
        p.add_argument("--algebra", required=True, help="e.g. A3, C2, G2")
        if level:
            p.add_argument("--level", type=int, required=True)
        if weights:
            p.add_argument("--weights", required=True, help='e.g. "1,0;0,1"')
        p.add_argument("--json", action="store_true", help="machine-readable output")
        p.add_argument("--oracle-crosscheck", action="store_true",
                       help="confirm ranks with the Verlinde formula")

    def face(p):
        p.add_argument("--grassmannian", help="k,n for a type A face")
        p.add_argument("--cells", help='Schubert subsets, e.g. "2,3;3,4"')
        p.add_argument("--partitions", action="store_true",
                       help="read --cells as partitions instead of subsets")
        p.add_argument("--node", type=int, help="parabolic node for --words")
        p.add_argument("--words", help='reduced words, e.g. "1,2;;2"')
        p.add_argument("--degree", type=int)
        p.add_argument("--force", action="store_true", help="proceed even if off the face")

    for name, fn, extra in [
        ("rank", cmd_rank, None),
        ("alcove", cmd_alcove, None),
        ("member", cmd_member, None),
        ("divisor", cmd_divisor, None),
        ("face-check", cmd_face_check, face),
        ("reduce", cmd_reduce, face),
        ("verify", cmd_verify, face),
        ("relation", cmd_relation, face),
    ]:
        p = sub.add_parser(name)
        common(p)
        if extra:
            extra(p)
        p.set_defaults(func=fn)

    p = sub.add_parser("invariants")
    common(p, level=False)
    p.set_defaults(func=cmd_invariants)

    p = sub.add_parser("faces")
    p.add_argument("--grassmannian", required=True)
    p.add_argument("--points", type=int, required=True)
    p.add_argument("--max-degree", type=int, default=0)
    p.add_argument("--orbits", action="store_true", help="one face per reordering class")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_faces)
    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (ValueError, NotImplementedError) as exc:
        # NotImplementedError subclasses RuntimeError, so it is caught first
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except (InternalError, ArithmeticError, AssertionError, RuntimeError) as exc:
        print(f"internal error: {exc}", file=sys.stderr)
        return 3


if __name__ == "__main__":
    sys.exit(main())
