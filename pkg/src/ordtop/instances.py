"""Instance documents: the JSON file format, parsing, and exporters.

A document carries a ground set, relation pairs, an optional topology
(either a derived mode or an explicit open family), and optional named
rational functions.  Parsing validates everything it can (relation
axioms when autoclose is off, topology axioms for explicit opens,
function totality); serialisation is canonical so that
``parse(serialize(doc)) == doc``.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction
from typing import Mapping

from ordtop import errors as err
from ordtop import topologies
from ordtop.preorders import Preorder, build_preorder, labels_of, mask_of, quotient
from ordtop.representations import FunctionFamily, ValueFunction
from ordtop.topologies import Topology

TOPOLOGY_MODES = ("upper", "alexandrov", "scott", "order", "explicit")

_DOC_FIELDS = ("elements", "relation", "autoclose", "topology", "functions")


@dataclass(frozen=True)
class TopologySpec:
    mode: str
    opens: tuple[tuple[str, ...], ...] | None = None


@dataclass(frozen=True)
class InstanceDocument:
    elements: tuple[str, ...]
    relation: tuple[tuple[str, str], ...]
    autoclose: bool = True
    topology: TopologySpec | None = None
    functions: tuple[tuple[str, tuple[Fraction, ...]], ...] | None = None


def _canonical_relation(
    elements: tuple[str, ...], relation: list[tuple[str, str]]
) -> tuple[tuple[str, str], ...]:
    index = {x: i for i, x in enumerate(elements)}
    unique = sorted(set(relation), key=lambda ab: (index[ab[0]], index[ab[1]]))
    return tuple(unique)


def _canonical_opens(p: Preorder, opens: list[int]) -> tuple[tuple[str, ...], ...]:
    return tuple(labels_of(p, m) for m in sorted(set(opens)))


def make_document(
    p: Preorder,
    topology: Topology | None = None,
    functions: Mapping[str, ValueFunction] | None = None,
) -> InstanceDocument:
    """Canonical document for in-memory objects (relation fully expanded)."""
    relation = [
        (p.elements[i], p.elements[j])
        for i in range(p.n)
        for j in range(p.n)
        if p.leq_idx(i, j)
    ]
    spec = None
    if topology is not None:
        spec = TopologySpec("explicit", _canonical_opens(p, list(topology.opens)))
    funcs = None
    if functions is not None:
        funcs = tuple(
            (name, tuple(functions[name].values)) for name in sorted(functions)
        )
    return InstanceDocument(
        elements=p.elements,
        relation=_canonical_relation(p.elements, relation),
        autoclose=False,
        topology=spec,
        functions=funcs,
    )


def parse_instance(text: str | bytes) -> InstanceDocument:
    """Parse and validate a JSON instance document."""
    if isinstance(text, bytes):
        text = text.decode("utf-8")
    try:
        raw = json.loads(text)
    except json.JSONDecodeError as exc:
        raise err.InstanceSyntaxError(exc.lineno, exc.msg) from None
    if not isinstance(raw, dict):
        raise err.InstanceValidationError("$", "document must be a JSON object")
    for key in raw:
        if key not in _DOC_FIELDS:
            raise err.InstanceValidationError(key, "unknown field")

    elements = raw.get("elements")
    if not isinstance(elements, list) or not all(isinstance(x, str) for x in elements):
        raise err.InstanceValidationError("elements", "must be a list of strings")
    relation_raw = raw.get("relation", [])
    if not isinstance(relation_raw, list):
        raise err.InstanceValidationError("relation", "must be a list of pairs")
    relation: list[tuple[str, str]] = []
    for idx, pair in enumerate(relation_raw):
        if (
            not isinstance(pair, list)
            or len(pair) != 2
            or not all(isinstance(x, str) for x in pair)
        ):
            raise err.InstanceValidationError(f"relation[{idx}]", "must be a pair of labels")
        relation.append((pair[0], pair[1]))
    autoclose = raw.get("autoclose", True)
    if not isinstance(autoclose, bool):
        raise err.InstanceValidationError("autoclose", "must be a boolean")

    try:
        p = build_preorder(tuple(elements), relation, autoclose=autoclose)
    except err.OrdtopError as exc:
        raise err.InstanceValidationError("relation", str(exc)) from None

    spec = None
    if "topology" in raw and raw["topology"] is not None:
        spec = _parse_topology(raw["topology"], p)
    functions = None
    if "functions" in raw and raw["functions"] is not None:
        functions = _parse_functions(raw["functions"], p)
    return InstanceDocument(
        elements=p.elements,
        relation=_canonical_relation(p.elements, relation),
        autoclose=autoclose,
        topology=spec,
        functions=functions,
    )


def _parse_topology(raw: object, p: Preorder) -> TopologySpec:
    if not isinstance(raw, dict):
        raise err.InstanceValidationError("topology", "must be an object")
    for key in raw:
        if key not in ("mode", "opens"):
            raise err.InstanceValidationError(f"topology.{key}", "unknown field")
    mode = raw.get("mode")
    if mode not in TOPOLOGY_MODES:
        raise err.InstanceValidationError(
            "topology.mode", f"must be one of {', '.join(TOPOLOGY_MODES)}"
        )
    opens_raw = raw.get("opens")
    if mode != "explicit":
        if opens_raw is not None:
            raise err.InstanceValidationError(
                "topology.opens", "only valid when mode is explicit"
            )
        return TopologySpec(mode)
    if not isinstance(opens_raw, list):
        raise err.InstanceValidationError("topology.opens", "must be a list of label lists")
    masks = []
    for idx, open_labels in enumerate(opens_raw):
        if not isinstance(open_labels, list) or not all(
            isinstance(x, str) for x in open_labels
        ):
            raise err.InstanceValidationError(
                f"topology.opens[{idx}]", "must be a list of labels"
            )
        try:
            masks.append(mask_of(p, open_labels))
        except err.UnknownLabelError as exc:
            raise err.InstanceValidationError(f"topology.opens[{idx}]", str(exc)) from None
    t = Topology(p.n, tuple(sorted(set(masks))))
    if p.full_mask not in t.open_set:
        raise err.InstanceValidationError("topology.opens", "ground set absent")
    if 0 not in t.open_set:
        raise err.InstanceValidationError("topology.opens", "empty set absent")
    problem = topologies.verify_axioms(t)
    if problem is not None:
        raise err.InstanceValidationError("topology.opens", problem)
    return TopologySpec("explicit", _canonical_opens(p, masks))


def _parse_functions(
    raw: object, p: Preorder
) -> tuple[tuple[str, tuple[Fraction, ...]], ...]:
    if not isinstance(raw, dict):
        raise err.InstanceValidationError("functions", "must be an object")
    out = []
    for name in sorted(raw):
        table = raw[name]
        if not isinstance(table, dict):
            raise err.InstanceValidationError(f"functions.{name}", "must be an object")
        values = []
        known = set(p.elements)
        for x in p.elements:
            if x not in table:
                raise err.InstanceValidationError(
                    f"functions.{name}", f"missing value for {x!r}"
                )
        for x in table:
            if x not in known:
                raise err.InstanceValidationError(
                    f"functions.{name}", f"value for unknown element {x!r}"
                )
        for x in p.elements:
            v = table[x]
            if not isinstance(v, str):
                raise err.InstanceValidationError(
                    f"functions.{name}.{x}", 'rationals are written as "p/q" strings'
                )
            try:
                values.append(Fraction(v))
            except (ValueError, ZeroDivisionError):
                raise err.InstanceValidationError(
                    f"functions.{name}.{x}", f"not a rational: {v!r}"
                ) from None
        out.append((name, tuple(values)))
    return tuple(out)


def serialize_instance(doc: InstanceDocument) -> str:
    """Canonical JSON text (fixed field order, sorted sets, reduced rationals)."""
    payload: dict[str, object] = {
        "elements": list(doc.elements),
        "relation": [list(pair) for pair in doc.relation],
        "autoclose": doc.autoclose,
    }
    if doc.topology is not None:
        tpay: dict[str, object] = {"mode": doc.topology.mode}
        if doc.topology.opens is not None:
            tpay["opens"] = [list(o) for o in doc.topology.opens]
        payload["topology"] = tpay
    if doc.functions is not None:
        payload["functions"] = {
            name: {x: str(v) for x, v in zip(doc.elements, values)}
            for name, values in doc.functions
        }
    return json.dumps(payload, indent=2) + "\n"


def document_preorder(doc: InstanceDocument) -> Preorder:
    return build_preorder(doc.elements, doc.relation, autoclose=doc.autoclose)


def document_topology(doc: InstanceDocument, p: Preorder) -> Topology | None:
    """Materialise the document's topology against its own preorder."""
    if doc.topology is None:
        return None
    return resolve_topology_mode(doc.topology.mode, p, doc.topology.opens)


def resolve_topology_mode(
    mode: str,
    p: Preorder,
    opens: tuple[tuple[str, ...], ...] | None = None,
) -> Topology:
    if mode == "upper":
        return topologies.upper_topology(p)
    if mode == "alexandrov":
        return topologies.alexandrov_topology(p)
    if mode == "scott":
        return topologies.scott_topology(p)
    if mode == "order":
        return topologies.order_topology(p)
    if mode == "discrete":
        return topologies.discrete(p.n)
    if mode == "indiscrete":
        return topologies.indiscrete(p.n)
    if mode == "explicit":
        if opens is None:
            raise err.InstanceValidationError("topology.opens", "required for explicit mode")
        return Topology(p.n, tuple(sorted(mask_of(p, o) for o in opens)))
    raise err.InstanceValidationError("topology.mode", f"unknown mode {mode!r}")


def document_functions(doc: InstanceDocument) -> dict[str, ValueFunction]:
    if doc.functions is None:
        return {}
    return {
        name: ValueFunction(doc.elements, values) for name, values in doc.functions
    }


def document_family(doc: InstanceDocument) -> FunctionFamily | None:
    funcs = document_functions(doc)
    if not funcs:
        return None
    return FunctionFamily(tuple(funcs[name] for name in sorted(funcs)))


def export_dot(p: Preorder) -> str:
    """Hasse diagram of the quotient as a DOT digraph.

    Equivalence classes collapse to one node whose id joins the sorted
    member labels with commas; edges are the covering pairs.
    """
    q = quotient(p)
    k = q.order.n
    ids = list(q.order.elements)
    covers = []
    for i in range(k):
        for j in range(k):
            if i == j or not q.order.leq_idx(i, j):
                continue
            between = False
            for m in range(k):
                if m in (i, j):
                    continue
                if q.order.leq_idx(i, m) and q.order.leq_idx(m, j):
                    between = True
                    break
            if not between:
                covers.append((ids[i], ids[j]))
    lines = ["digraph preorder {", "  rankdir=BT;"]
    for node in sorted(ids):
        lines.append(f'  "{node}";')
    for src, dst in sorted(covers):
        lines.append(f'  "{src}" -> "{dst}";')
    lines.append("}")
    return "\n".join(lines) + "\n"
