"""Acceptance suite: one test per criterion, each printing a verdict line.

All checks are exact (finite discrete structures, zero tolerance).  The
shared instance pool is seeded, so every run examines the same 500 random
rule sets alongside the bundled fixtures.
"""

import random
import time

from basictopo import (
    Predicate,
    check_compatibility,
    check_cover_laws,
    check_generated_axioms,
    check_positivity_laws,
    check_derivation,
    coind_predicate,
    conf,
    conf_as_der,
    conf_v,
    container_of_ruleset,
    cover,
    cover_with_trace,
    der,
    der_container,
    conf_container,
    der_v,
    build_coind_witness,
    des,
    enlarge,
    extract_derivation,
    ind_predicate,
    ind_with_trace,
    is_closed,
    is_closed_v,
    is_consistent,
    is_consistent_v,
    oracle_gfp,
    oracle_lfp,
    positivity,
    restrict,
    ruleset_of_container,
    verify_coind_witness,
    DerivationTree,
    ReflexivityProof,
    UnderivableError,
    NotPositiveError,
)
from basictopo.cli import main
from basictopo.documents import (
    container_document,
    derivation_document,
    emit,
    parse,
    ruleset_document,
    subset_document,
    witness_document,
    witness_from_document,
    container_from_document,
    derivation_from_document,
    ruleset_from_document,
    subset_from_document,
)
from basictopo.fixtures import FIXTURES, R3_BAR

from conftest import DATA_DIR, GOLDEN_DIR, seeded_instances

INSTANCES = seeded_instances(500)
FIXTURE_INSTANCES = [
    (FIXTURES["r0"], FIXTURES["r0"].carrier.subset(["a"])),
    (FIXTURES["r1"], FIXTURES["r1"].carrier.subset(["c"])),
    (FIXTURES["r2"], FIXTURES["r2"].carrier.subset(["b", "c"])),
    (FIXTURES["r3"], R3_BAR),
]
POOL = FIXTURE_INSTANCES + INSTANCES


def _verdict(number: int, title: str, failures: list[str]) -> None:
    status = "PASS" if not failures else "FAIL"
    print(f"criterion {number:02d} [{status}] {title}")
    assert not failures, f"criterion {number}: " + "; ".join(failures[:3])


def test_c01_oracle_equivalence():
    failures = []
    started = time.monotonic()
    for r, v in POOL:
        if ind_predicate(r) != oracle_lfp(r):
            failures.append(f"ind != oracle_lfp on {r}")
        if coind_predicate(r) != oracle_gfp(r):
            failures.append(f"coind != oracle_gfp on {r}")
        if cover(r, v) != oracle_lfp(r, v):
            failures.append(f"cover != oracle_lfp on {r} with V={sorted(v.members)}")
        if positivity(r, v) != oracle_gfp(r, v):
            failures.append(f"pos != oracle_gfp on {r} with V={sorted(v.members)}")
    elapsed = time.monotonic() - started
    if elapsed >= 10.0:
        failures.append(f"runtime {elapsed:.1f}s exceeds 10s")
    _verdict(1, f"oracle equivalence on {len(POOL)} instances ({elapsed:.1f}s)", failures)


def test_c02_classical_complement_duality():
    failures = []
    for r, _ in POOL:
        if ind_predicate(r).complement() != coind_predicate(r):
            failures.append(f"complement(ind) != coind on {r}")
    _verdict(2, "complement(ind) = coind, exact", failures)


def test_c03_fixed_point_laws():
    failures = []
    for r, v in POOL:
        ind = ind_predicate(r)
        coind = coind_predicate(r)
        if der(r, ind) != ind:
            failures.append("der(ind) != ind")
        if conf(r, coind) != coind:
            failures.append("conf(coind) != coind")
        covered = cover(r, v)
        positive = positivity(r, v)
        if der_v(r, v, covered) != covered:
            failures.append("der_v(cover) != cover")
        if conf_v(r, v, positive) != positive:
            failures.append("conf_v(pos) != pos")
    _verdict(3, "fixed-point equations, plain and V-variants", failures)


def test_c04_universal_properties():
    failures = []
    for r, v in FIXTURE_INSTANCES + INSTANCES[:100]:
        ind = ind_predicate(r)
        coind = coind_predicate(r)
        covered = cover(r, v)
        positive = positivity(r, v)
        for p in r.carrier.subsets():
            if is_closed(r, p) and not ind.leq(p):
                failures.append(f"ind not minimal at P={sorted(p.members)}")
            if is_consistent(r, p) and not p.leq(coind):
                failures.append(f"coind not maximal at P={sorted(p.members)}")
            if is_closed_v(r, v, p) and not covered.leq(p):
                failures.append(f"cover not minimal at P={sorted(p.members)}")
            if is_consistent_v(r, v, p) and not p.leq(positive):
                failures.append(f"pos not maximal at P={sorted(p.members)}")
    _verdict(4, "minimality/maximality over every closed/consistent P", failures)


def test_c05_encoding_equalities():
    failures = []
    for r, _ in FIXTURE_INSTANCES + INSTANCES[:100]:
        subsets = list(r.carrier.subsets())
        for v in subsets:
            if ind_predicate(enlarge(r, v)) != cover(r, v):
                failures.append(f"(i) fails at V={sorted(v.members)}")
            inner = coind_predicate(restrict(r, v))
            if Predicate(r.carrier, inner.members) != positivity(r, v):
                failures.append(f"(ii) fails at V={sorted(v.members)}")
        if cover(r, r.carrier.empty()) != ind_predicate(r):
            failures.append("(iii) cover(empty) != ind")
        if positivity(r, r.carrier.full()) != coind_predicate(r):
            failures.append("(iii) pos(full) != coind")
        choice = conf_as_der(r)
        container = container_of_ruleset(r)
        back = ruleset_of_container(container)
        for p in subsets:
            if conf(r, p) != der_container(choice, p):
                failures.append(f"(iv) fails at P={sorted(p.members)}")
            if der(r, p) != der_container(container, p):
                failures.append(f"(v) der fails at P={sorted(p.members)}")
            if conf(r, p) != conf_container(container, p):
                failures.append(f"(v) conf fails at P={sorted(p.members)}")
            if der(back, p) != der(r, p) or conf(back, p) != conf(r, p):
                failures.append(f"(v) round trip fails at P={sorted(p.members)}")
    _verdict(5, "encoding equalities (i)-(v), exhaustive over subsets", failures)


def _mutated_trees(tree):
    """A few structural corruptions of a valid derivation tree."""
    yield DerivationTree(tree.conclusion, tree.rule + "#bogus", tree.children)
    if tree.children:
        dropped = dict(tree.children)
        dropped.popitem()
        yield DerivationTree(tree.conclusion, tree.rule, dropped)
    else:
        yield DerivationTree(tree.conclusion, tree.rule, {tree.conclusion: tree})


def _search_derivation(r, a, depth):
    """Backward-chaining derivation search, independent of traces and ranks.

    Exhaustive over trees of bounded height, which is complete here: any
    member of the least fixed point has a derivation of height <= |A|.
    """
    if depth > len(r.carrier):
        return None
    for rule in r.rules_of(a):
        children = {}
        for z in rule.premises:
            sub = _search_derivation(r, z, depth + 1)
            if sub is None:
                break
            children[z] = sub
        else:
            return DerivationTree(a, rule.id, children)
    return None


def test_c06_proof_object_soundness_and_completeness():
    failures = []
    for r, v in FIXTURE_INSTANCES + INSTANCES[:100]:
        ind, ind_trace = ind_with_trace(r)
        covered, cover_trace = cover_with_trace(r, v)
        coind = coind_predicate(r)
        positive = positivity(r, v)
        for a in r.carrier:
            # independent route: exhaustive backward chaining finds a tree
            # exactly for the members, and whatever it finds must check
            searched = _search_derivation(r, a, 0)
            if (searched is not None) != (a in ind):
                failures.append(f"backward chaining disagrees with ind at {a}")
            if searched is not None:
                if not check_derivation(r, searched):
                    failures.append(f"searched tree for {a} fails the checker")
            if a in ind:
                tree = extract_derivation(r, a, ind_trace)
                if not check_derivation(r, tree):
                    failures.append(f"extracted tree for {a} fails the checker")
                if isinstance(tree, DerivationTree):
                    for bad in _mutated_trees(tree):
                        if check_derivation(r, bad):
                            failures.append(f"mutated tree for {a} passes the checker")
            else:
                try:
                    extract_derivation(r, a, ind_trace)
                    failures.append(f"extraction succeeded outside ind at {a}")
                except UnderivableError:
                    pass
            if a in covered:
                proof = extract_derivation(r, a, cover_trace, v)
                if not check_derivation(r, proof, v):
                    failures.append(f"extracted cover proof for {a} fails the checker")
            if a in coind:
                w = build_coind_witness(r, a)
                if not verify_coind_witness(r, w):
                    failures.append(f"witness for {a} fails verification")
                for rule in r.rules_of(a):
                    z, rest = des(w, rule.id)
                    if z not in coind:
                        failures.append(f"des left the coinductive predicate at {a}")
                    if not verify_coind_witness(r, rest):
                        failures.append(f"re-rooted witness at {z} fails verification")
            else:
                try:
                    build_coind_witness(r, a)
                    failures.append(f"witness built outside coind at {a}")
                except NotPositiveError:
                    pass
            if a in positive:
                w = build_coind_witness(r, a, v)
                if not verify_coind_witness(r, w, v):
                    failures.append(f"positivity witness for {a} fails verification")
    _verdict(6, "certificate soundness and completeness, both directions", failures)


def test_c07_conversion_rule_equalities():
    from basictopo import (
        eval_cover_recursor,
        eval_ind_recursor,
        dw_recursor,
        dw_sup,
        wtree_recursor,
        wtree_sup,
        WContainer,
        IndexedContainer,
    )

    failures = []
    counts = {"C-ind": 0, "C-rf": 0, "C-tr": 0, "C-w": 0, "C-dw": 0}

    def step(a, i, res):
        return hash(("ind", a, i, tuple(sorted(res.items()))))

    def q1(a, token):
        return hash(("rf", a, token))

    def q2(a, i, res):
        return hash(("tr", a, i, tuple(sorted(res.items()))))

    from basictopo.sampling import random_ruleset, random_subset

    extra_rng = random.Random(31337)

    def more_instances():
        yield from INSTANCES
        while True:
            r = random_ruleset(extra_rng)
            yield r, random_subset(extra_rng, r.carrier)

    for r, v in more_instances():
        if counts["C-ind"] >= 220 and counts["C-tr"] >= 220 and counts["C-rf"] >= 220:
            break
        _, ind_trace = ind_with_trace(r)
        for a in ind_trace.final:
            t = extract_derivation(r, a, ind_trace)
            lhs = eval_ind_recursor(r, t, step)
            rhs = step(t.conclusion, t.rule, {
                z: eval_ind_recursor(r, c, step) for z, c in t.children.items()
            })
            if lhs != rhs:
                failures.append("C-ind mismatch")
            counts["C-ind"] += 1
        _, cover_trace = cover_with_trace(r, v)
        for a in cover_trace.final:
            p = extract_derivation(r, a, cover_trace, v)
            lhs = eval_cover_recursor(r, v, p, q1, q2)
            if isinstance(p, ReflexivityProof):
                if lhs != q1(a, a):
                    failures.append("C-rf mismatch")
                counts["C-rf"] += 1
            else:
                rhs = q2(p.conclusion, p.rule, {
                    z: eval_cover_recursor(r, v, c, q1, q2)
                    for z, c in p.children.items()
                })
                if lhs != rhs:
                    failures.append("C-tr mismatch")
                counts["C-tr"] += 1

    bintree = WContainer(("leaf", "node"), {"node": ("L", "R")})
    rng = random.Random(777)

    def random_wtree(depth):
        if depth == 0 or rng.random() < 0.35:
            return wtree_sup(bintree, "leaf")
        return wtree_sup(bintree, "node", {
            "L": random_wtree(depth - 1), "R": random_wtree(depth - 1)
        })

    def d_w(a, f, res):
        return hash(("w", a, tuple(sorted(res.items()))))

    for _ in range(220):
        t = random_wtree(5)
        lhs = wtree_recursor(bintree, t, d_w)
        rhs = d_w(t.label, t.children, {
            y: wtree_recursor(bintree, c, d_w) for y, c in t.children.items()
        })
        if lhs != rhs:
            failures.append("C-w mismatch")
        counts["C-w"] += 1

    abc = FIXTURES["r0"].carrier
    dw = IndexedContainer(
        abc,
        {"a": ("stop", "go"), "b": ("stop", "go"), "c": ("stop",)},
        {
            ("a", "stop"): (), ("a", "go"): ("z1", "z2"),
            ("b", "stop"): (), ("b", "go"): ("z1",),
            ("c", "stop"): (),
        },
        {("a", "go", "z1"): "b", ("a", "go", "z2"): "c", ("b", "go", "z1"): "a"},
    )

    def d_dw(a, i, f, res):
        return hash(("dw", a, i, tuple(sorted(res.items()))))

    def random_dw(label, depth):
        option = "stop"
        if depth > 0 and rng.random() < 0.6:
            candidates = [i for i in dw.options(label) if i != "stop"]
            if candidates:
                option = candidates[0]
        return dw_sup(dw, label, option, {
            z: random_dw(dw.branch_label(label, option, z), depth - 1)
            for z in dw.branch_ids(label, option)
        })

    for n in range(220):
        t = random_dw("abc"[n % 3], 5)
        lhs = dw_recursor(dw, t, d_dw)
        rhs = d_dw(t.label, t.option, t.children, {
            z: dw_recursor(dw, c, d_dw) for z, c in t.children.items()
        })
        if lhs != rhs:
            failures.append("C-dw mismatch")
        counts["C-dw"] += 1

    for name, n in counts.items():
        if n < 200:
            failures.append(f"only {n} checks for {name}")
    _verdict(
        7,
        "conversion rules hold on "
        + ", ".join(f"{n} {name}" for name, n in counts.items()),
        failures,
    )


def test_c08_basic_topology_laws():
    failures = []
    small = [r for r, _ in FIXTURE_INSTANCES if len(r.carrier) <= 4]
    rulesets = small + [r for r, _ in INSTANCES[:100]]
    for r in rulesets:
        reports = [
            check_cover_laws(r),
            check_positivity_laws(r),
            check_compatibility(r),
        ]
        for report in reports:
            if report.mode != "exhaustive":
                failures.append("expected exhaustive mode")
            for check in report.checks:
                if check.gating and not check.holds:
                    failures.append(f"{check.law}: {check.counterexample}")
        if not check_generated_axioms(r).cover_all_hold():
            failures.append("generating cover axiom violated")
    # the contested quantifier placements are evaluated and reported only
    informative = [
        c
        for c in (
            check_positivity_laws(FIXTURES["r1"]).checks
            + check_compatibility(FIXTURES["r1"]).checks
        )
        if not c.gating
    ]
    if not informative:
        failures.append("informative law variants missing from the report")
    _verdict(
        8,
        f"gating topology laws exhaustive on {len(rulesets)} rule sets",
        failures,
    )


def test_c09_baire_truncation_demo(capsys):
    failures = []
    code = main(["cover", "--ruleset", str(DATA_DIR / "r3.json"), "--v", str(DATA_DIR / "r3_bar.json")])
    out = capsys.readouterr().out
    golden = (GOLDEN_DIR / "r3_cover_stdout.txt").read_text(encoding="utf-8")
    if code != 0:
        failures.append(f"exit code {code}")
    if out != golden:
        failures.append(f"stdout {out!r} differs from golden {golden!r}")
    if "nil" not in out:
        failures.append("the empty sequence is not covered by the bar")
    with capsys.disabled():
        _verdict(9, "bar of depth 2 covers the Baire root, byte-stable", failures)


def test_c10_cli_contract(tmp_path, capsys):
    failures = []
    r2 = FIXTURES["r2"]
    # byte-stable round-trips for every document kind
    _, trace = ind_with_trace(r2)
    v = r2.carrier.subset(["c"])
    _, cover_trace = cover_with_trace(r2, v)
    docs = [
        ruleset_document(r2),
        container_document(conf_as_der(r2)),
        subset_document(v),
        derivation_document(extract_derivation(r2, "b", trace)),
        derivation_document(extract_derivation(r2, "c", cover_trace, v), v),
        witness_document(build_coind_witness(r2, "c")),
    ]
    readers = [
        ruleset_from_document,
        container_from_document,
        lambda d: subset_from_document(d, r2.carrier),
        derivation_from_document,
        derivation_from_document,
        witness_from_document,
    ]
    for doc, reader in zip(docs, readers):
        text = emit(doc)
        if parse(text) != doc:
            failures.append(f"parse(emit) not identity for kind {doc.kind}")
        if emit(parse(text)) != text:
            failures.append(f"emission not byte-stable for kind {doc.kind}")
        reader(parse(text))
    # exit codes: 0 solved, 1 semantic, 2 malformed, 3 bound exceeded
    checks = []
    checks.append((main(["solve", "--ruleset", str(DATA_DIR / "r2.json"), "--mode", "ind"]), 0))
    checks.append((main(["derive", "--ruleset", str(DATA_DIR / "r1.json"), "--element", "c"]), 1))
    bad = tmp_path / "bad.json"
    bad.write_text("nope", encoding="utf-8")
    checks.append((main(["solve", "--ruleset", str(bad), "--mode", "ind"]), 2))
    from basictopo.ruleset import Carrier, RuleSet

    big_file = tmp_path / "big.json"
    big_file.write_text(
        emit(ruleset_document(RuleSet(Carrier(tuple(f"x{i:02d}" for i in range(17))), {}))),
        encoding="utf-8",
    )
    checks.append((main(["oracle", "--ruleset", str(big_file)]), 3))
    capsys.readouterr()
    for got, expected in checks:
        if got != expected:
            failures.append(f"exit code {got}, expected {expected}")
    with capsys.disabled():
        _verdict(10, "document round-trips byte-stable; exit codes 0/1/2/3", failures)
