"""Command line interface.

Verbs: verify-biset-laws, blocks, broue, ingest-table, run-acceptance.
All reports are JSON on stdout (or --out).  Exit codes: 0 all checks
pass, 1 a verification failed, 2 the input was invalid.
"""

from __future__ import annotations

import argparse
import json
import sys

from .acceptance import DEFAULT_SEED, run_all
from .blocks import (assign_characters_to_blocks, block_idempotents,
                     defect_group, defect_zero_simple_dim,
                     maximal_brauer_pair, splitting_params)
from .broue import run_scenario
from .characters import ingest_character_table, value_to_doc
from .gf import fq_field
from .namedgroups import named_group
from .scenario import Scenario, group_from_spec, table_for_group
from .suites import ALL_SUITES, MACKEY_GROUPS, SMALL_GROUPS

EXIT_PASS = 0
EXIT_FAIL = 1
EXIT_INPUT = 2


class InputError(Exception):
    pass


def _emit(doc: dict, out: str | None) -> None:
    text = json.dumps(doc, indent=2, sort_keys=True, default=str)
    if out:
        with open(out, "w") as fh:
            fh.write(text + "\n")
    else:
        print(text)


def _load_json(path: str) -> dict:
    try:
        with open(path) as fh:
            return json.load(fh)
    except OSError as ex:
        raise InputError(f"cannot read {path}: {ex}")
    except json.JSONDecodeError as ex:
        raise InputError(f"{path} is not valid JSON: {ex}")


def _group_arg(text: str):
    """A group given as a bundled name or a path to a spec document."""
    if text.endswith(".json"):
        return group_from_spec(_load_json(text))
    try:
        return named_group(text)
    except Exception as ex:
        raise InputError(str(ex))


def _filter_names(names, max_order: int | None):
    if max_order is None:
        return names
    kept = tuple(n for n in names if named_group(n).order <= max_order)
    if not kept:
        raise InputError(f"no base groups of order <= {max_order}")
    return kept


def cmd_verify_biset_laws(args) -> int:
    suites = ([args.suite] if args.suite else list(ALL_SUITES))
    report = {"kind": "biset-law-report", "seed": args.seed, "suites": []}
    ok = True
    for name in suites:
        if name not in ALL_SUITES:
            raise InputError(f"unknown suite {name!r}; "
                             f"choose from {', '.join(ALL_SUITES)}")
        fn = ALL_SUITES[name]
        kwargs = {"seed": args.seed}
        if args.count is not None:
            kwargs["count"] = args.count
        pool = MACKEY_GROUPS if name == "mackey" else SMALL_GROUPS
        kwargs["groups"] = _filter_names(pool, args.max_order)
        if name == "mackey" and args.inject_mutation:
            kwargs["mutate"] = True
        rep = fn(**kwargs)
        report["suites"].append(rep)
        ok = ok and rep["ok"]
    report["ok"] = ok
    _emit(report, args.out)
    return EXIT_PASS if ok else EXIT_FAIL


def cmd_blocks(args) -> int:
    G = _group_arg(args.group)
    p = args.prime
    if p < 2 or any(p % d == 0 for d in range(2, int(p ** 0.5) + 1)):
        raise InputError(f"{p} is not a prime")
    m, q = splitting_params(G, p)
    degree = args.field_degree or m
    field = fq_field(p, degree)
    try:
        blocks = block_idempotents(G, p, field)
    except ValueError as ex:
        raise InputError(str(ex))
    try:
        table = table_for_group(G)
        partition = assign_characters_to_blocks(table, blocks, field)
    except ValueError:
        table, partition = None, None
    report = {
        "kind": "block-report",
        "group": G.name,
        "order": G.order,
        "prime": p,
        "field_order": field.q,
        "block_count": len(blocks),
        "blocks": [],
    }
    for i, b in enumerate(blocks):
        D = defect_group(G, p, b, field)
        _, e = maximal_brauer_pair(G, p, b, field, D=D)
        entry = {
            "index": i,
            "coefficients": list(b.coeffs),
            "defect_order": D.order,
            "defect_generators": _subgroup_names(D),
            "local_block_coefficients": list(e.coeffs),
            "defect_zero_dim": defect_zero_simple_dim(G, D, e, field),
        }
        if partition is not None:
            entry["characters"] = [table.names[j] for j in partition[i]]
        report["blocks"].append(entry)
    _emit(report, args.out)
    return EXIT_PASS


def _subgroup_names(D) -> list:
    G = D.parent
    from .groups import minimal_generating_sequence
    if D.order == 1:
        return []
    gens = [D.from_local(i) for i in minimal_generating_sequence(D.as_group())]
    if G.element_names:
        return [G.element_names[g] for g in gens]
    return gens


def cmd_broue(args) -> int:
    doc = _load_json(args.scenario)
    try:
        S = Scenario(doc)
    except (KeyError, ValueError) as ex:
        raise InputError(f"bad scenario: {ex}")
    report = run_scenario(S, field_degree=args.field_degree,
                          conventions=args.conventions)
    _emit(report, args.out)
    return EXIT_PASS if report["verdict"].get("holds") else EXIT_FAIL


def cmd_ingest_table(args) -> int:
    doc = _load_json(args.table)
    group = None
    if isinstance(doc.get("group"), str):
        try:
            group = named_group(doc["group"])
        except Exception:
            group = None
    try:
        table = ingest_character_table(doc, group=group)
    except (KeyError, ValueError, TypeError) as ex:
        raise InputError(f"bad table: {ex}")
    from .groups import element_by_name
    Gt = table.group
    cols = [Gt.class_index(element_by_name(Gt, col["rep"]))
            for col in doc["classes"]]
    report = {
        "kind": "table-report",
        "group": Gt.name,
        "order": Gt.order,
        "class_count": len(Gt.conjugacy_classes()),
        "names": list(table.names),
        "degrees": [c.degree().as_int() for c in table.irreducibles],
        "normalized": {
            "kind": "character-table",
            "group": doc.get("group", Gt.name),
            "classes": doc["classes"],
            "characters": [
                {"name": table.names[i],
                 "values": [value_to_doc(table.irreducibles[i].values[c])
                            for c in cols]}
                for i in range(len(table.names))],
        },
        "ok": True,
    }
    _emit(report, args.out)
    return EXIT_PASS


def cmd_run_acceptance(args) -> int:
    rep = run_all(seed=args.seed)
    for r in rep["results"]:
        status = "PASS" if r["ok"] else "FAIL"
        line = (f"{status}  {r['id']}. {r['name']:<26s} "
                f"{r['elapsed']:8.3f}s  {r['detail']}")
        print(line, file=sys.stderr)
    _emit(rep, args.out)
    return EXIT_PASS if rep["ok"] else EXIT_FAIL


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(
        prog="bisetblocks",
        description="Exact biset calculus and block-theory verification")
    sub = ap.add_subparsers(dest="verb", required=True)

    laws = sub.add_parser("verify-biset-laws",
                          help="run the randomized law suites")
    laws.add_argument("--seed", type=int, default=DEFAULT_SEED)
    laws.add_argument("--count", type=int, default=None,
                      help="instances per suite (default: suite standard)")
    laws.add_argument("--max-order", type=int, default=None,
                      help="restrict base groups to this order")
    laws.add_argument("--suite", choices=sorted(ALL_SUITES), default=None)
    laws.add_argument("--inject-mutation", action="store_true",
                      help="corrupt one oracle to test failure reporting")
    laws.add_argument("--out")
    laws.set_defaults(fn=cmd_verify_biset_laws)

    blk = sub.add_parser("blocks", help="block data of a group at a prime")
    blk.add_argument("group", help="bundled name or group spec JSON path")
    blk.add_argument("--prime", type=int, required=True)
    blk.add_argument("--field-degree", type=int, default=None)
    blk.add_argument("--out")
    blk.set_defaults(fn=cmd_blocks)

    br = sub.add_parser("broue", help="run a scenario through the pipeline")
    br.add_argument("scenario", help="scenario JSON path")
    br.add_argument("--field-degree", type=int, default=None)
    br.add_argument("--conventions", choices=("standard", "alternate"),
                    default="standard")
    br.add_argument("--out")
    br.set_defaults(fn=cmd_broue)

    ing = sub.add_parser("ingest-table",
                         help="validate and normalize a character table")
    ing.add_argument("table", help="character table JSON path")
    ing.add_argument("--out")
    ing.set_defaults(fn=cmd_ingest_table)

    acc = sub.add_parser("run-acceptance", help="run all nine criteria")
    acc.add_argument("--seed", type=int, default=DEFAULT_SEED)
    acc.add_argument("--out")
    acc.set_defaults(fn=cmd_run_acceptance)
    return ap


def main(argv=None) -> int:
    ap = build_parser()
    args = ap.parse_args(argv)
    try:
        return args.fn(args)
    except InputError as ex:
        print(f"input error: {ex}", file=sys.stderr)
        return EXIT_INPUT
    except (AssertionError, RuntimeError) as ex:
        print(f"verification failure: {ex}", file=sys.stderr)
        return EXIT_FAIL


if __name__ == "__main__":
    sys.exit(main())
