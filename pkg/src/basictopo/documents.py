"""On-disk JSON documents: a versioned envelope around typed payloads.

Every file is UTF-8 JSON of the form {"kind": ..., "payload": ...,
"version": 1}.  Emission is byte-stable (sorted keys, two-space indent,
canonically sorted set-like arrays, trailing newline), so parse o emit is
the identity and emitted fixtures can be committed as golden files.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from pathlib import Path

from .errors import DocumentError
from .fixpoint import FixpointTrace
from .proofs import CoinductionWitness, CoverProof, DerivationTree, ReflexivityProof
from .ruleset import (
    Carrier,
    IndexedContainer,
    Predicate,
    Rule,
    RuleSet,
    validate_container,
    validate_ruleset,
)

VERSION = 1
KINDS = ("ruleset", "container", "subset", "derivation", "witness", "report")


@dataclass(frozen=True)
class Document:
    kind: str
    payload: dict
    version: int = VERSION


def emit(doc: Document) -> str:
    """Serialize with a stable byte representation."""
    body = {"kind": doc.kind, "version": doc.version, "payload": doc.payload}
    return json.dumps(body, indent=2, sort_keys=True) + "\n"


def parse(text: str) -> Document:
    try:
        body = json.loads(text)
    except json.JSONDecodeError as exc:
        raise DocumentError(f"not valid JSON: {exc}", "document") from None
    if not isinstance(body, dict):
        raise DocumentError("top level must be a JSON object", "document")
    kind = body.get("kind")
    if kind not in KINDS:
        raise DocumentError(f"unknown kind {kind!r}", "kind")
    if body.get("version") != VERSION:
        raise DocumentError(f"unsupported version {body.get('version')!r}", "version")
    payload = body.get("payload")
    if not isinstance(payload, dict):
        raise DocumentError("payload must be a JSON object", "payload")
    return Document(kind, payload)


def load(path: str | Path) -> Document:
    try:
        text = Path(path).read_text(encoding="utf-8")
    except OSError as exc:
        raise DocumentError(str(exc), str(path)) from None
    return parse(text)


def dump(doc: Document, path: str | Path) -> None:
    Path(path).write_text(emit(doc), encoding="utf-8")


def _expect_obj(value, loc: str) -> dict:
    if not isinstance(value, dict):
        raise DocumentError("expected a JSON object", loc)
    return value


def _expect_str(value, loc: str) -> str:
    if not isinstance(value, str):
        raise DocumentError("expected a string", loc)
    return value


def _expect_str_list(value, loc: str) -> list[str]:
    if not isinstance(value, list) or not all(isinstance(x, str) for x in value):
        raise DocumentError("expected an array of strings", loc)
    return value


def _require_kind(doc: Document, kind: str) -> None:
    if doc.kind != kind:
        raise DocumentError(f"expected a {kind} document, got {doc.kind!r}", "kind")


# -- rule sets ---------------------------------------------------------------

def ruleset_document(r: RuleSet) -> Document:
    payload = {
        "carrier": list(r.carrier),
        "rules": {
            x: [
                {"id": rule.id, "premises": sorted(rule.premises)}
                for rule in r.rules_of(x)
            ]
            for x in r.carrier
        },
    }
    return Document("ruleset", payload)


def ruleset_from_document(doc: Document) -> RuleSet:
    _require_kind(doc, "ruleset")
    carrier_list = _expect_str_list(doc.payload.get("carrier"), "payload.carrier")
    try:
        carrier = Carrier(tuple(carrier_list))
    except ValueError as exc:
        raise DocumentError(str(exc), "payload.carrier") from None
    rules_obj = _expect_obj(doc.payload.get("rules"), "payload.rules")
    rules: dict[str, tuple[Rule, ...]] = {}
    for elem, entries in rules_obj.items():
        loc = f"payload.rules.{elem}"
        if not isinstance(entries, list):
            raise DocumentError("expected an array of rules", loc)
        parsed = []
        for idx, entry in enumerate(entries):
            entry_loc = f"{loc}[{idx}]"
            obj = _expect_obj(entry, entry_loc)
            if set(obj) != {"id", "premises"}:
                raise DocumentError(
                    "rule objects carry exactly 'id' and 'premises'", entry_loc
                )
            parsed.append(
                Rule(
                    _expect_str(obj.get("id"), f"{entry_loc}.id"),
                    frozenset(
                        _expect_str_list(
                            obj.get("premises"), f"{entry_loc}.premises"
                        )
                    ),
                )
            )
        rules[elem] = tuple(parsed)
    result = RuleSet(carrier, rules)
    violations = validate_ruleset(result)
    if violations:
        raise DocumentError(violations[0], "payload.rules")
    return result


# -- indexed containers ------------------------------------------------------

def container_document(k: IndexedContainer) -> Document:
    payload = {
        "carrier": list(k.carrier),
        "index": {x: list(k.options(x)) for x in k.carrier},
        "branches": {
            x: {y: list(k.branch_ids(x, y)) for y in k.options(x)} for x in k.carrier
        },
        "arity": {
            x: {
                y: {z: k.branch_label(x, y, z) for z in k.branch_ids(x, y)}
                for y in k.options(x)
            }
            for x in k.carrier
        },
    }
    return Document("container", payload)


def container_from_document(doc: Document) -> IndexedContainer:
    _require_kind(doc, "container")
    carrier_list = _expect_str_list(doc.payload.get("carrier"), "payload.carrier")
    try:
        carrier = Carrier(tuple(carrier_list))
    except ValueError as exc:
        raise DocumentError(str(exc), "payload.carrier") from None
    index_obj = _expect_obj(doc.payload.get("index"), "payload.index")
    branches_obj = _expect_obj(doc.payload.get("branches"), "payload.branches")
    arity_obj = _expect_obj(doc.payload.get("arity"), "payload.arity")
    index = {
        x: tuple(_expect_str_list(options, f"payload.index.{x}"))
        for x, options in index_obj.items()
    }
    branches: dict[tuple[str, str], tuple[str, ...]] = {}
    for x, by_option in branches_obj.items():
        for y, ids in _expect_obj(by_option, f"payload.branches.{x}").items():
            branches[(x, y)] = tuple(
                _expect_str_list(ids, f"payload.branches.{x}.{y}")
            )
    arity: dict[tuple[str, str, str], str] = {}
    for x, by_option in arity_obj.items():
        for y, by_branch in _expect_obj(by_option, f"payload.arity.{x}").items():
            for z, label in _expect_obj(by_branch, f"payload.arity.{x}.{y}").items():
                arity[(x, y, z)] = _expect_str(label, f"payload.arity.{x}.{y}.{z}")
    result = IndexedContainer(carrier, index, branches, arity)
    violations = validate_container(result)
    if violations:
        raise DocumentError(violations[0], "payload")
    return result


# -- subsets -----------------------------------------------------------------

def subset_document(p: Predicate) -> Document:
    return Document("subset", {"members": sorted(p.members)})


def subset_from_document(doc: Document, carrier: Carrier) -> Predicate:
    _require_kind(doc, "subset")
    members = _expect_str_list(doc.payload.get("members"), "payload.members")
    for idx, x in enumerate(members):
        if x not in carrier:
            raise DocumentError(
                f"{x!r} is not a carrier element", f"payload.members[{idx}]"
            )
    return Predicate(carrier, frozenset(members))


# -- derivations and cover proofs ---------------------------------------------

def _proof_node_payload(node: CoverProof) -> dict:
    if isinstance(node, ReflexivityProof):
        return {"type": "rf", "conclusion": node.conclusion}
    return {
        "type": "rule",
        "conclusion": node.conclusion,
        "rule": node.rule,
        "children": {z: _proof_node_payload(c) for z, c in node.children.items()},
    }


def derivation_document(proof: CoverProof, v: Predicate | None = None) -> Document:
    payload = {
        "root": _proof_node_payload(proof),
        "v": None if v is None else sorted(v.members),
    }
    return Document("derivation", payload)


def _proof_node_from_payload(obj, loc: str) -> CoverProof:
    node = _expect_obj(obj, loc)
    node_type = node.get("type")
    if node_type == "rf":
        return ReflexivityProof(_expect_str(node.get("conclusion"), f"{loc}.conclusion"))
    if node_type == "rule":
        children_obj = _expect_obj(node.get("children"), f"{loc}.children")
        return DerivationTree(
            _expect_str(node.get("conclusion"), f"{loc}.conclusion"),
            _expect_str(node.get("rule"), f"{loc}.rule"),
            {
                z: _proof_node_from_payload(child, f"{loc}.children.{z}")
                for z, child in children_obj.items()
            },
        )
    raise DocumentError(f"unknown node type {node_type!r}", f"{loc}.type")


def derivation_from_document(doc: Document) -> tuple[CoverProof, list[str] | None]:
    """The proof plus the raw V members (resolved against a carrier later)."""
    _require_kind(doc, "derivation")
    v_value = doc.payload.get("v")
    if v_value is not None:
        v_value = _expect_str_list(v_value, "payload.v")
    return _proof_node_from_payload(doc.payload.get("root"), "payload.root"), v_value


# -- coinduction witnesses -----------------------------------------------------

def witness_document(w: CoinductionWitness) -> Document:
    continuations: dict[str, dict[str, str]] = {}
    for (x, i), z in sorted(w.continuations.items()):
        continuations.setdefault(x, {})[i] = z
    payload = {
        "carrier": list(w.support.carrier),
        "support": sorted(w.support.members),
        "start": w.start,
        "v": None if w.v is None else sorted(w.v.members),
        "continuations": continuations,
    }
    return Document("witness", payload)


def witness_from_document(doc: Document) -> CoinductionWitness:
    _require_kind(doc, "witness")
    carrier_list = _expect_str_list(doc.payload.get("carrier"), "payload.carrier")
    try:
        carrier = Carrier(tuple(carrier_list))
    except ValueError as exc:
        raise DocumentError(str(exc), "payload.carrier") from None
    support_members = _expect_str_list(doc.payload.get("support"), "payload.support")
    for idx, x in enumerate(support_members):
        if x not in carrier:
            raise DocumentError(
                f"{x!r} is not a carrier element", f"payload.support[{idx}]"
            )
    start = _expect_str(doc.payload.get("start"), "payload.start")
    v_value = doc.payload.get("v")
    v = None
    if v_value is not None:
        v_members = _expect_str_list(v_value, "payload.v")
        for idx, x in enumerate(v_members):
            if x not in carrier:
                raise DocumentError(
                    f"{x!r} is not a carrier element", f"payload.v[{idx}]"
                )
        v = Predicate(carrier, frozenset(v_members))
    continuations_obj = _expect_obj(
        doc.payload.get("continuations"), "payload.continuations"
    )
    continuations: dict[tuple[str, str], str] = {}
    for x, by_rule in continuations_obj.items():
        for i, z in _expect_obj(by_rule, f"payload.continuations.{x}").items():
            continuations[(x, i)] = _expect_str(
                z, f"payload.continuations.{x}.{i}"
            )
    return CoinductionWitness(
        Predicate(carrier, frozenset(support_members)), start, v, continuations
    )


# -- reports -------------------------------------------------------------------

def report_document(payload: dict) -> Document:
    return Document("report", payload)


def trace_payload(
    mode: str, predicate: Predicate, trace: FixpointTrace, v: Predicate | None = None
) -> dict:
    payload = {
        "report": "trace",
        "mode": mode,
        "predicate": sorted(predicate.members),
        "direction": trace.kind,
        "stages": [sorted(stage.members) for stage in trace.stages],
        "rank": {x: trace.rank[x] for x in sorted(trace.rank)},
    }
    if v is not None:
        payload["v"] = sorted(v.members)
    return payload
