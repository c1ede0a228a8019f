"""Command-line interface.

Exit codes: 0 = pass/success, 1 = a checked property is false (a witness
is printed), 2 = usage or input error.  ``--json`` switches every command
to a machine-readable envelope; failure envelopes embed a witness
instance document that ``ordtop validate`` accepts back.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from ordtop import errors as err
from ordtop import instances, theorems
from ordtop.instances import InstanceDocument
from ordtop.preorders import Preorder, labels_of
from ordtop.representations import (
    FunctionFamily,
    Sense,
    ValueFunction,
    construct_finite_lsc_rp_multiutility,
    construct_indicator_multiutility,
    construct_lsc_multiutility,
    construct_rp_utility,
    preorder_semicontinuity,
    rank_utility,
)
from ordtop.topologies import Topology

_TOPOLOGY_CHOICES = ("upper", "alexandrov", "scott", "order", "discrete", "indiscrete")


def _load_document(path: str) -> InstanceDocument:
    try:
        text = Path(path).read_text(encoding="utf-8")
    except OSError as exc:
        raise err.OrdtopError(f"cannot read {path}: {exc}") from None
    return instances.parse_instance(text)


def _resolve_topology(spec: str | None, doc: InstanceDocument, p: Preorder) -> Topology:
    """A mode name, a path to an instance carrying a topology, or the doc's own."""
    if spec is None:
        t = instances.document_topology(doc, p)
        if t is None:
            raise err.OrdtopError(
                "no topology: pass --topology MODE|FILE or add one to the instance"
            )
        return t
    if spec in _TOPOLOGY_CHOICES:
        return instances.resolve_topology_mode(spec, p)
    other = _load_document(spec)
    if other.topology is None:
        raise err.OrdtopError(f"topology file {spec} carries no topology")
    if other.topology.mode == "explicit" and other.elements != p.elements:
        raise err.GroundMismatchError(len(other.elements), p.n)
    return instances.resolve_topology_mode(other.topology.mode, p, other.topology.opens)


def _function_payload(f: ValueFunction) -> dict[str, str]:
    return {x: str(v) for x, v in zip(f.elements, f.values)}


def _named_family_payload(family: FunctionFamily, names: list[str]) -> dict:
    return {name: _function_payload(f) for name, f in zip(names, family.members)}


def _open_labels(t: Topology, p: Preorder) -> list[list[str]]:
    return [list(labels_of(p, o)) for o in t.opens]


def _emit(args, ok: bool, result: dict, witness: dict | None = None) -> int:
    code = 0 if ok else 1
    if args.json:
        envelope = {
            "command": args.command,
            "ok": ok,
            "exit_code": code,
            "result": result,
            "witness": witness,
        }
        print(json.dumps(envelope, indent=2))
    else:
        for line in _humanise(result):
            print(line)
        if witness is not None:
            print("witness instance (feed to `ordtop validate`):")
            print(json.dumps(witness["instance"], indent=2))
            if witness.get("detail"):
                print(f"detail: {json.dumps(witness['detail'])}")
    return code


def _humanise(result: dict, indent: str = "") -> list[str]:
    lines = []
    for key, value in result.items():
        if isinstance(value, dict):
            lines.append(f"{indent}{key}:")
            lines.extend(_humanise(value, indent + "  "))
        elif isinstance(value, list) and value and isinstance(value[0], dict):
            lines.append(f"{indent}{key}:")
            for item in value:
                lines.extend(_humanise(item, indent + "  "))
                lines.append(f"{indent}  -")
        else:
            lines.append(f"{indent}{key}: {value}")
    return lines


def _witness_payload(p: Preorder, t: Topology | None, detail: dict) -> dict:
    doc = instances.make_document(p, topology=t)
    return {"instance": json.loads(instances.serialize_instance(doc)), "detail": detail}


def cmd_validate(args) -> int:
    doc = _load_document(args.file)
    p = instances.document_preorder(doc)
    result = {
        "elements": p.n,
        "relation_pairs": len(doc.relation),
        "autoclose": doc.autoclose,
        "topology": doc.topology.mode if doc.topology else None,
        "functions": sorted(name for name, _ in doc.functions or ()),
        "round_trip": instances.parse_instance(instances.serialize_instance(doc)) == doc,
    }
    return _emit(args, True, result)


def cmd_topology(args) -> int:
    doc = _load_document(args.file)
    p = instances.document_preorder(doc)
    t = _resolve_topology(args.topology, doc, p)
    result = {
        "mode": args.topology or (doc.topology.mode if doc.topology else "explicit"),
        "ground_size": t.ground_size,
        "open_count": len(t.opens),
        "opens": _open_labels(t, p),
    }
    return _emit(args, True, result)


def cmd_check_lsc(args) -> int:
    doc = _load_document(args.file)
    p = instances.document_preorder(doc)
    t = _resolve_topology(args.topology, doc, p)
    sense = Sense.LOWER if args.sense == "lower" else Sense.UPPER
    verdict = preorder_semicontinuity(p, t, sense)
    if verdict.ok:
        return _emit(args, True, {"semicontinuous": True, "sense": args.sense})
    assert verdict.witness is not None and verdict.contour is not None
    witness = _witness_payload(
        p, t,
        {
            "element": verdict.witness,
            "contour": list(labels_of(p, verdict.contour)),
            "reason": "contour is not closed",
        },
    )
    return _emit(args, False, {"semicontinuous": False, "sense": args.sense}, witness)


def cmd_represent(args) -> int:
    doc = _load_document(args.file)
    p = instances.document_preorder(doc)
    indicator = construct_indicator_multiutility(p)
    result: dict = {
        "indicator_multiutility": _named_family_payload(
            indicator, [f"u_{x}" for x in p.elements]
        ),
        "rp_utility": _function_payload(construct_rp_utility(p)),
    }
    if p.is_total():
        result["rank_utility"] = _function_payload(rank_utility(p))
    if args.topology is not None or (doc.topology is not None):
        t = _resolve_topology(args.topology, doc, p)
        try:
            lsc = construct_lsc_multiutility(p, t)
        except err.NotLscPreorderError as exc:
            witness = _witness_payload(
                p, t,
                {
                    "element": exc.element,
                    "contour": list(labels_of(p, exc.contour)),
                    "reason": "preorder is not lower semicontinuous",
                },
            )
            return _emit(args, False, result, witness)
        result["lsc_multiutility"] = _named_family_payload(
            lsc, [f"v_{x}" for x in p.elements]
        )
    return _emit(args, True, result)


def cmd_decide_rp(args) -> int:
    doc = _load_document(args.file)
    p = instances.document_preorder(doc)
    t = _resolve_topology(args.topology, doc, p)
    outcome = construct_finite_lsc_rp_multiutility(p, t)
    if outcome.has_family:
        assert outcome.family is not None
        result = {
            "representable": True,
            "family": _named_family_payload(
                outcome.family, [f"g_{x}" for x in p.elements]
            ),
        }
        return _emit(args, True, result)
    assert outcome.obstruction is not None and outcome.obstruction_contour is not None
    witness = _witness_payload(
        p, t,
        {
            "element": outcome.obstruction,
            "contour": list(labels_of(p, outcome.obstruction_contour)),
            "reason": "weak lower contour is not closed",
        },
    )
    return _emit(args, False, {"representable": False}, witness)


def _suite_result(suite: theorems.SuiteReport) -> dict:
    return {
        "ok": suite.ok,
        "reports": [
            {
                "theorem": r.theorem_id,
                "instances_checked": r.instances_checked,
                "non_vacuous": r.non_vacuous,
                "violations": len(r.violations),
                "elapsed_seconds": round(r.elapsed, 4),
            }
            for r in suite.reports
        ],
    }


def _suite_witness(suite: theorems.SuiteReport) -> dict | None:
    for report in suite.reports:
        for v in report.violations:
            return {
                "instance": json.loads(v.instance),
                "detail": {"theorem": v.theorem_id, "params": v.params, "note": v.detail},
            }
    return None


def cmd_theorems(args) -> int:
    suite = theorems.run_theorem_suite(max_size=args.max_size, seed=args.seed)
    return _emit(args, suite.ok, _suite_result(suite), _suite_witness(suite))


def cmd_mine(args) -> int:
    suite = theorems.mine(seed=args.seed, trials=args.trials, max_size=args.max_size)
    result = _suite_result(suite)
    result["seed"] = args.seed
    result["trials"] = args.trials
    return _emit(args, suite.ok, result, _suite_witness(suite))


def cmd_export(args) -> int:
    doc = _load_document(args.file)
    p = instances.document_preorder(doc)
    dot = instances.export_dot(p)
    if args.output:
        Path(args.output).write_text(dot, encoding="utf-8")
        return _emit(args, True, {"written": args.output})
    if args.json:
        return _emit(args, True, {"dot": dot})
    print(dot, end="")
    return 0


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="ordtop",
        description="Finite preorders, their topologies, and multi-utility representations.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, func, help_text):
        sp = sub.add_parser(name, help=help_text)
        sp.set_defaults(func=func)
        sp.add_argument("--json", action="store_true", help="machine-readable output")
        return sp

    sp = add("validate", cmd_validate, "parse and validate an instance file")
    sp.add_argument("file")

    sp = add("topology", cmd_topology, "materialise a topology and list its opens")
    sp.add_argument("file")
    sp.add_argument("--topology", metavar="MODE|FILE")

    sp = add("check-lsc", cmd_check_lsc, "check semicontinuity of the preorder")
    sp.add_argument("file")
    sp.add_argument("--topology", metavar="MODE|FILE")
    sp.add_argument("--sense", choices=("lower", "upper"), default="lower")

    sp = add("represent", cmd_represent, "construct representations for the instance")
    sp.add_argument("file")
    sp.add_argument("--topology", metavar="MODE|FILE")

    sp = add("decide-rp", cmd_decide_rp,
             "decide lsc Richter-Peleg multi-utility representability")
    sp.add_argument("file")
    sp.add_argument("--topology", metavar="MODE|FILE")

    sp = add("theorems", cmd_theorems, "run the exhaustive theorem suite")
    sp.add_argument("--all", action="store_true", help="run every checker (default)")
    sp.add_argument("--max-size", type=int, default=4)
    sp.add_argument("--seed", type=int, default=0)

    sp = add("mine", cmd_mine, "mine seeded random instances for violations")
    sp.add_argument("--seed", type=int, default=0)
    sp.add_argument("--trials", type=int, default=100)
    sp.add_argument("--max-size", type=int, default=6)

    sp = add("export", cmd_export, "export the quotient Hasse diagram as DOT")
    sp.add_argument("file")
    sp.add_argument("-o", "--output")

    return parser


def main(argv=None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except err.OrdtopError as exc:
        if getattr(args, "json", False):
            print(json.dumps({"command": args.command, "ok": False,
                              "exit_code": 2, "error": str(exc)}))
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
