"""Command-line surface for the invariant calculator.

Every subcommand prints deterministic output: identical invocations give
byte-identical results.  Exit status 0 means success or verified, 1 means
a verification failed, 2 means the invocation itself was unusable.
Randomized numeric spot checks accept --seed and default to a fixed one.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from concurrent.futures import ThreadPoolExecutor
from typing import Sequence

from . import verification
from .diagrams import build_tensor_diagram, export
from .grassmann import compare_up_to_sign, gc_jellyfish, phi_star, predicted_global_sign
from .invariants import jellyfish_invariant
from .partitions import OrderedSetPartition, enumerate_noncrossing, parse_partition
from .relations import conjecture_report, recurrence_left, recurrence_terms, verify_recurrence
from .specht import SpechtShape, exact_rank, hook_family, membership_test, spanning_rank
from .tableaux import enumerate_tableaux
from .verification import rotation_orbit


class UsageError(Exception):
    pass


def _partition(text: str) -> OrderedSetPartition:
    try:
        return parse_partition(text)
    except ValueError as exc:
        raise UsageError(f"bad partition {text!r}: {exc}") from exc


def _elements(text: str) -> set[int]:
    try:
        out = {int(x) for x in text.split()}
    except ValueError as exc:
        raise UsageError(f"bad element list {text!r}") from exc
    if not out:
        raise UsageError("element list must be nonempty")
    return out


def _prefix_blocks(text: str | None) -> list[tuple[int, ...]]:
    if not text or not text.strip():
        return []
    return [tuple(sorted(_elements(chunk))) for chunk in text.split("|")]


# -- subcommand handlers (return process exit codes) -------------------------


def cmd_invariant(args) -> int:
    partition = _partition(args.partition)
    poly = jellyfish_invariant(partition, args.r)
    if args.pretty:
        print(poly)
    else:
        print(poly.to_json())
    return 0


def cmd_tableaux(args) -> int:
    partition = _partition(args.partition)
    tableaux = enumerate_tableaux(partition, args.r)
    if args.json:
        payload = [
            {
                "columns": [list(t.column_rows(i)) for i in range(1, partition.d + 1)],
                "word": t.reading_word(),
                "inversions": t.inversion_number(),
                "sign": t.sign(),
            }
            for t in tableaux
        ]
        print(json.dumps({"count": len(tableaux), "tableaux": payload}))
        return 0
    print(f"count={len(tableaux)}")
    for idx, t in enumerate(tableaux, start=1):
        word = " ".join(str(x) for x in t.reading_word())
        print(f"-- tableau {idx}: inversions={t.inversion_number()} sign={t.sign():+d} word={word}")
        print(t.render_text())
    return 0


def cmd_recurrence(args) -> int:
    prefix = _prefix_blocks(args.prefix)
    A, B, C = _elements(args.A), _elements(args.B), _elements(args.C)
    try:
        left = recurrence_left(prefix, A, B, C)
        terms = recurrence_terms(prefix, A, B, C, args.r)
    except ValueError as exc:
        raise UsageError(str(exc)) from exc
    ok = verify_recurrence(prefix, A, B, C, args.r)
    if args.json:
        print(
            json.dumps(
                {
                    "left": left.text(),
                    "terms": [{"sign": s, "partition": p.text()} for s, p in terms],
                    "verified": ok,
                }
            )
        )
    else:
        print(f"left: ({left.text()})")
        for sign, p in terms:
            print(f"  {'+' if sign > 0 else '-'} ({p.text()})")
        print("VERIFIED" if ok else "FAILED")
    return 0 if ok else 1


def cmd_independence(args) -> int:
    if args.family == "nc":
        if args.n is None or args.d is None or args.r is None:
            raise UsageError("--family nc needs --n, --d, --r")
        family = enumerate_noncrossing(args.n, args.d, args.r)
        r = args.r
    elif args.family == "hook":
        if args.n is None or args.d is None:
            raise UsageError("--family hook needs --n and --d")
        family = hook_family(args.n, args.d)
        r = 1
    elif args.family == "orbit":
        if not args.partition or args.r is None:
            raise UsageError("--family orbit needs --partition and --r")
        family = rotation_orbit(_partition(args.partition))
        r = args.r
    else:
        if args.n is None or args.d is None or args.r is None:
            raise UsageError("--family conjecture needs --n, --d, --r")
        from .relations import conjecture_family

        try:
            family = conjecture_family(args.n, args.d, args.r)
        except ValueError as exc:
            raise UsageError(str(exc)) from exc
        r = args.r
    profile = exact_rank([jellyfish_invariant(p, r) for p in family])
    if args.json:
        print(
            json.dumps(
                {
                    "family": args.family,
                    "size": len(family),
                    "rank": profile.rank,
                    "members": [p.text() for p in family],
                }
            )
        )
    else:
        print(f"size={len(family)} rank={profile.rank}")
    return 0 if profile.rank == len(family) else 1


def cmd_specht_check(args) -> int:
    partition = _partition(args.partition)
    shape = SpechtShape(partition.n, partition.d, args.r)
    poly = jellyfish_invariant(partition, args.r)
    ok = membership_test(poly, shape)
    if args.json:
        print(json.dumps({"partition": partition.text(), "r": args.r, "member": ok}))
    else:
        print(f"member={'true' if ok else 'false'}")
    return 0 if ok else 1


def cmd_gc_compare(args) -> int:
    partition = _partition(args.partition)
    sign = compare_up_to_sign(
        phi_star(gc_jellyfish(partition, args.r)), jellyfish_invariant(partition, args.r)
    )
    predicted = predicted_global_sign(partition, args.r)
    if args.json:
        print(json.dumps({"sign": sign, "predicted": predicted}))
        return 0 if sign is not None else 1
    if sign is None:
        print("NOT PROPORTIONAL")
        return 1
    print(f"{sign:+d} (predicted {predicted:+d})")
    return 0


def cmd_diagram(args) -> int:
    partition = _partition(args.partition)
    diagram = build_tensor_diagram(partition, args.r)
    text = export(diagram, args.format)
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
        if not text.endswith("\n"):
            sys.stdout.write("\n")
    return 0


def cmd_hook_basis(args) -> int:
    from math import comb

    family = hook_family(args.n, args.d)
    shape = SpechtShape(args.n, args.d, 1)
    invariants = [jellyfish_invariant(p, 1) for p in family]
    profile = exact_rank(invariants)
    dim = shape.dimension()
    members = all(membership_test(q, shape) for q in invariants)
    ok = profile.rank == dim == comb(args.n - 1, args.d - 1) and members
    if args.json:
        print(
            json.dumps(
                {
                    "n": args.n,
                    "d": args.d,
                    "family": len(family),
                    "rank": profile.rank,
                    "dimension": dim,
                    "members": members,
                    "basis": ok,
                }
            )
        )
    else:
        print(f"family={len(family)} rank={profile.rank} dimension={dim} basis={'true' if ok else 'false'}")
    return 0 if ok else 1


def cmd_conjecture(args) -> int:
    try:
        size, rank = conjecture_report(args.n, args.d, args.r)
    except ValueError as exc:
        raise UsageError(str(exc)) from exc
    if args.json:
        print(json.dumps({"n": args.n, "d": args.d, "r": args.r, "size": size, "rank": rank}))
    else:
        print(f"size={size} rank={rank}")
    return 0 if size == rank else 1


def cmd_orbit_rank(args) -> int:
    partition = _partition(args.partition)
    orbit = rotation_orbit(partition)
    profile = exact_rank([jellyfish_invariant(p, args.r) for p in orbit])
    print(f"orbit={len(orbit)} rank={profile.rank}")
    return 0


def cmd_verify_all(args) -> int:
    names = [
        ("running-example-depth-2", lambda: verification.check_running_example()),
        ("three-row-example-depth-3", lambda: verification.check_three_row_example()),
        ("depth-one-enumeration", lambda: verification.check_depth_one_enumeration()),
        ("grassmann-cayley-equivalence", lambda: verification.check_gc_equivalence(n_max=min(7, args.n_max))),
        ("recurrence-identities", lambda: verification.check_recurrence(n_max=min(7, args.n_max))),
        ("specht-membership", lambda: verification.check_specht_membership(n_max=min(7, args.n_max))),
        ("column-equivariance", lambda: verification.check_equivariance(n_max=min(6, args.n_max))),
        ("noncrossing-independence", lambda: verification.check_independence(n_max=min(8, args.n_max))),
        ("hook-basis", lambda: verification.check_hook_basis(n_max=min(8, args.n_max))),
        ("rotation-orbit-rank", lambda: verification.check_orbit_rank()),
        ("independence-conjecture", lambda: verification.check_conjecture(n_max=min(8, args.n_max))),
        ("tensor-diagram-validation", lambda: verification.check_diagrams(n_max=min(8, args.n_max))),
        (
            "sign-properties",
            lambda: verification.check_sign_properties(
                seed=args.seed, exhaustive_n=min(5, args.n_max)
            ),
        ),
    ]
    jobs = args.jobs or int(os.environ.get("FLAMINGO_JOBS", "1"))
    if jobs > 1:
        with ThreadPoolExecutor(max_workers=jobs) as pool:
            futures = [pool.submit(fn) for _, fn in names]
            results = [f.result() for f in futures]
    else:
        results = []
        for name, fn in names:
            print(f"running {name} ...", file=sys.stderr, flush=True)
            results.append(fn())
    if args.json:
        print(
            json.dumps(
                [
                    {"name": r.name, "ok": r.ok, "detail": r.detail, "seconds": round(r.seconds, 3)}
                    for r in results
                ]
            )
        )
    else:
        for r in results:
            print(r.line())
    return 0 if all(r.ok for r in results) else 1


# -- parser -------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="flamingo",
        description="Exact jellyfish invariants of ordered set partitions",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_json(p):
        p.add_argument("--json", action="store_true", help="machine-readable output")

    p = sub.add_parser("invariant", help="expand an invariant in matrix entries")
    p.add_argument("--partition", required=True)
    p.add_argument("--r", type=int, required=True)
    group = p.add_mutually_exclusive_group()
    group.add_argument("--json", action="store_true", default=True)
    group.add_argument("--pretty", action="store_true")
    p.set_defaults(handler=cmd_invariant)

    p = sub.add_parser("tableaux", help="enumerate jellyfish tableaux")
    p.add_argument("--partition", required=True)
    p.add_argument("--r", type=int, required=True)
    add_json(p)
    p.set_defaults(handler=cmd_tableaux)

    p = sub.add_parser("recurrence", help="verify one recurrence instance")
    p.add_argument("--A", required=True)
    p.add_argument("--B", required=True)
    p.add_argument("--C", required=True)
    p.add_argument("--r", type=int, required=True)
    p.add_argument("--prefix", default="")
    add_json(p)
    p.set_defaults(handler=cmd_recurrence)

    p = sub.add_parser("independence", help="rank of an invariant family")
    p.add_argument("--family", choices=["nc", "hook", "orbit", "conjecture"], required=True)
    p.add_argument("--n", type=int)
    p.add_argument("--d", type=int)
    p.add_argument("--r", type=int)
    p.add_argument("--partition")
    add_json(p)
    p.set_defaults(handler=cmd_independence)

    p = sub.add_parser("specht-check", help="membership of an invariant in its module")
    p.add_argument("--partition", required=True)
    p.add_argument("--r", type=int, required=True)
    add_json(p)
    p.set_defaults(handler=cmd_specht_check)

    p = sub.add_parser("gc-compare", help="compare the cap-and-wedge expansion with the tableau sum")
    p.add_argument("--partition", required=True)
    p.add_argument("--r", type=int, required=True)
    add_json(p)
    p.set_defaults(handler=cmd_gc_compare)

    p = sub.add_parser("diagram", help="export the tensor diagram")
    p.add_argument("--partition", required=True)
    p.add_argument("--r", type=int, required=True)
    p.add_argument("--format", choices=["dot", "json"], required=True)
    p.add_argument("--out")
    p.set_defaults(handler=cmd_diagram)

    p = sub.add_parser("hook-basis", help="verify the interval-partition basis at depth 1")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--d", type=int, required=True)
    add_json(p)
    p.set_defaults(handler=cmd_hook_basis)

    p = sub.add_parser("conjecture", help="size and rank of the short-distance family")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--d", type=int, required=True)
    p.add_argument("--r", type=int, required=True)
    add_json(p)
    p.set_defaults(handler=cmd_conjecture)

    p = sub.add_parser("orbit-rank", help="rotation orbit size and invariant rank")
    p.add_argument("--partition", required=True)
    p.add_argument("--r", type=int, required=True)
    p.set_defaults(handler=cmd_orbit_rank)

    p = sub.add_parser("verify-all", help="run the full verification battery")
    p.add_argument("--n-max", type=int, default=8)
    p.add_argument("--seed", type=int, default=2024)
    p.add_argument("--jobs", type=int, default=0)
    add_json(p)
    p.set_defaults(handler=cmd_verify_all)

    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return 2 if exc.code not in (0, None) else 0
    try:
        return args.handler(args)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except BrokenPipeError:
        return 0


if __name__ == "__main__":
    sys.exit(main())
