"""Data-model invariants: carriers, predicates, rule sets, containers."""

import pytest

from basictopo import (
    Carrier,
    CarrierMismatchError,
    IndexedContainer,
    Predicate,
    R0,
    R1,
    R2,
    R3,
    Rule,
    RuleSet,
    UnknownElementError,
    UnknownRuleError,
    premises,
    validate_container,
    validate_ruleset,
)

from conftest import ALL_FIXTURES

ABC = Carrier(("a", "b", "c"))


def test_carrier_rejects_duplicates():
    with pytest.raises(ValueError):
        Carrier(("a", "b", "a"))


def test_carrier_iteration_is_declaration_order():
    c = Carrier(("z", "a", "m"))
    assert list(c) == ["z", "a", "m"]
    assert c.ordered({"m", "z"}) == ("z", "m")


def test_empty_carrier_is_allowed():
    c = Carrier(())
    assert len(c) == 0
    assert list(c.subsets()) == [c.empty()]


def test_predicate_requires_carrier_membership():
    with pytest.raises(UnknownElementError):
        Predicate(ABC, frozenset({"d"}))


def test_predicate_equality_is_extensional():
    assert ABC.subset(["a", "b"]) == Predicate(ABC, frozenset(("b", "a")))
    assert ABC.subset(["a"]) != ABC.subset(["b"])


def test_subset_ops_examples():
    assert ABC.empty().leq(ABC.subset(["a"]))
    assert ABC.subset(["a", "b"]).complement() == ABC.subset(["c"])
    assert not ABC.subset(["a", "b"]).leq(ABC.subset(["a"]))


def test_subset_ops_reject_carrier_mismatch():
    other = Carrier(("a", "b"))
    with pytest.raises(CarrierMismatchError):
        ABC.subset(["a"]).leq(other.subset(["a"]))
    with pytest.raises(CarrierMismatchError):
        ABC.subset(["a"]).union(other.subset(["a"]))


def test_leq_is_a_preorder_exhaustively():
    subsets = list(ABC.subsets())
    for p in subsets:
        assert p.leq(p)
    for p in subsets:
        for q in subsets:
            for s in subsets:
                if p.leq(q) and q.leq(s):
                    assert p.leq(s)


def test_lattice_laws_exhaustively():
    subsets = list(ABC.subsets())
    for p in subsets:
        assert p.complement().complement() == p
        for q in subsets:
            assert p.union(q) == q.union(p)
            assert p.intersection(q) == q.intersection(p)
            assert p.union(p.intersection(q)) == p
            assert p.intersection(p.union(q)) == p
            assert p.union(q).complement() == p.complement().intersection(q.complement())
            for s in subsets:
                assert p.union(q.union(s)) == p.union(q).union(s)
                assert p.intersection(q.intersection(s)) == p.intersection(q).intersection(s)


def test_validate_accepts_all_fixtures():
    for r in ALL_FIXTURES:
        assert validate_ruleset(r) == []


def test_validate_reports_stray_premise():
    broken = RuleSet(ABC, {"a": (Rule("r", frozenset({"d"})),)})
    violations = validate_ruleset(broken)
    assert len(violations) == 1
    assert "'r'" in violations[0] and "'d'" in violations[0]


def test_validate_reports_duplicate_rule_ids():
    broken = RuleSet(
        ABC, {"a": (Rule("r", frozenset()), Rule("r", frozenset({"b"})))}
    )
    assert any("duplicate rule id" in v for v in validate_ruleset(broken))


def test_validate_reports_non_carrier_key():
    broken = RuleSet(ABC, {"d": (Rule("r", frozenset()),)})
    assert any("non-carrier" in v for v in validate_ruleset(broken))


def test_ruleset_fills_missing_entries():
    assert R1.rules_of("c") == ()
    assert set(R0.rules) == {"a", "b", "c"}


def test_premises_examples():
    assert premises(R1, "a", "r") == ABC.subset(["b"])
    assert premises(R2, "a", "ax") == ABC.empty()
    assert premises(R2, "c", "r") == ABC.subset(["b", "c"])


def test_premises_errors():
    with pytest.raises(UnknownElementError):
        premises(R1, "d", "r")
    with pytest.raises(UnknownRuleError):
        premises(R1, "a", "missing")


def test_baire_fixture_shape():
    assert list(R3.carrier) == ["nil", "0", "1", "00", "01", "10", "11"]
    assert {rule.id for rule in R3.rules_of("nil")} == {"extend"}
    assert {rule.id for rule in R3.rules_of("00")} == {"prefix:nil", "prefix:0"}
    assert premises(R3, "nil", "extend").members == {"0", "1"}
    assert premises(R3, "01", "prefix:0").members == {"0"}
    # truncation boundary: depth-2 nodes have no extend rule
    for leaf in ("00", "01", "10", "11"):
        assert all(rule.id != "extend" for rule in R3.rules_of(leaf))


def test_container_validation():
    k = IndexedContainer(
        ABC,
        {"a": ("o",)},
        {("a", "o"): ("z1", "z2")},
        {("a", "o", "z1"): "b", ("a", "o", "z2"): "c"},
    )
    assert validate_container(k) == []
    missing_arity = IndexedContainer(
        ABC, {"a": ("o",)}, {("a", "o"): ("z1",)}, {}
    )
    assert any("missing" in v for v in validate_container(missing_arity))
    stray_label = IndexedContainer(
        ABC, {"a": ("o",)}, {("a", "o"): ("z1",)}, {("a", "o", "z1"): "x"}
    )
    assert any("outside the carrier" in v for v in validate_container(stray_label))
