"""Command-line surface.

Exit codes are a stable contract: 0 success, 1 semantic failure
(underivable element, invalid certificate, violated gating law, oracle
disagreement), 2 malformed input file, 3 combinatorial bound exceeded.
Predicates are printed as sorted comma-separated atoms in braces.
"""

from __future__ import annotations

import argparse
import sys

from .documents import (
    Document,
    container_document,
    container_from_document,
    derivation_document,
    derivation_from_document,
    dump,
    emit,
    load,
    report_document,
    ruleset_document,
    ruleset_from_document,
    subset_from_document,
    trace_payload,
    witness_document,
    witness_from_document,
)
from .encodings import (
    complement_dual,
    conf_as_der,
    container_of_ruleset,
    enlarge,
    restrict,
    ruleset_of_container,
)
from .errors import (
    BasicTopoError,
    BoundExceededError,
    DocumentError,
)
from .fixpoint import (
    coind_predicate,
    coind_with_trace,
    cover_with_trace,
    ind_predicate,
    ind_with_trace,
    oracle_gfp,
    oracle_lfp,
    positivity_with_trace,
    verify_closed,
    verify_consistent,
)
from .laws import (
    check_compatibility,
    check_cover_laws,
    check_generated_axioms,
    check_positivity_laws,
)
from .proofs import (
    build_coind_witness,
    check_derivation,
    derivation_failure,
    des,
    extract_derivation,
    verify_coind_witness,
    witness_failure,
)
from .ruleset import Predicate, RuleSet


def format_predicate(p: Predicate) -> str:
    return "{" + ", ".join(sorted(p.members)) + "}"


def _load_ruleset(path: str) -> RuleSet:
    return ruleset_from_document(load(path))


def _load_v(path: str | None, r: RuleSet) -> Predicate | None:
    if path is None:
        return None
    return subset_from_document(load(path), r.carrier)


def _write_doc(doc: Document, out: str | None) -> None:
    if out:
        dump(doc, out)
    else:
        sys.stdout.write(emit(doc))


def _cmd_solve(args) -> int:
    r = _load_ruleset(args.ruleset)
    if args.mode == "ind":
        pred, trace = ind_with_trace(r)
    else:
        pred, trace = coind_with_trace(r)
    print(format_predicate(pred))
    if args.out:
        dump(report_document(trace_payload(args.mode, pred, trace)), args.out)
    return 0


def _cmd_cover(args) -> int:
    r = _load_ruleset(args.ruleset)
    v = subset_from_document(load(args.v), r.carrier)
    pred, trace = cover_with_trace(r, v)
    print(format_predicate(pred))
    if args.out:
        dump(report_document(trace_payload("cover", pred, trace, v)), args.out)
    return 0


def _cmd_pos(args) -> int:
    r = _load_ruleset(args.ruleset)
    v = subset_from_document(load(args.v), r.carrier)
    pred, trace = positivity_with_trace(r, v)
    print(format_predicate(pred))
    if args.out:
        dump(report_document(trace_payload("pos", pred, trace, v)), args.out)
    return 0


def _cmd_derive(args) -> int:
    r = _load_ruleset(args.ruleset)
    v = _load_v(args.v, r)
    if v is None:
        _, trace = ind_with_trace(r)
    else:
        _, trace = cover_with_trace(r, v)
    proof = extract_derivation(r, args.element, trace, v)
    _write_doc(derivation_document(proof, v), args.out)
    return 0


def _cmd_witness(args) -> int:
    r = _load_ruleset(args.ruleset)
    v = _load_v(args.v, r)
    w = build_coind_witness(r, args.element, v)
    _write_doc(witness_document(w), args.out)
    return 0


def _cmd_unfold(args) -> int:
    w = witness_from_document(load(args.witness))
    _, unfolded = des(w, args.rule)
    _write_doc(witness_document(unfolded), args.out)
    return 0


def _cmd_verify(args) -> int:
    r = _load_ruleset(args.ruleset)
    cert = load(args.cert)
    if cert.kind == "derivation":
        proof, v_members = derivation_from_document(cert)
        v = None
        if v_members is not None:
            for x in v_members:
                if x not in r.carrier:
                    raise DocumentError(f"{x!r} is not a carrier element", "payload.v")
            v = Predicate(r.carrier, frozenset(v_members))
        if check_derivation(r, proof, v):
            print("valid")
            return 0
        print(f"invalid: {derivation_failure(r, proof, v)}")
        return 1
    if cert.kind == "witness":
        w = witness_from_document(cert)
        if verify_coind_witness(r, w, w.v):
            print("valid")
            return 0
        print(f"invalid: {witness_failure(r, w, w.v)}")
        return 1
    if cert.kind == "subset":
        if args.claim is None:
            raise DocumentError(
                "subset certificates need --claim {closed,consistent}", "cert"
            )
        p = subset_from_document(cert, r.carrier)
        v = _load_v(args.v, r)
        ok = (
            verify_closed(r, p, v)
            if args.claim == "closed"
            else verify_consistent(r, p, v)
        )
        print("valid" if ok else f"invalid: subset is not {args.claim}")
        return 0 if ok else 1
    raise DocumentError(f"cannot verify a {cert.kind} document", "kind")


_TRANSFORMS = ("enlarge", "restrict", "to-container", "to-ruleset", "conf-as-der")


def _cmd_encode(args) -> int:
    doc = load(args.ruleset)
    if args.transform == "to-ruleset":
        k = container_from_document(doc)
        _write_doc(ruleset_document(ruleset_of_container(k)), args.out)
        return 0
    r = ruleset_from_document(doc)
    if args.transform == "to-container":
        _write_doc(container_document(container_of_ruleset(r)), args.out)
        return 0
    if args.transform == "conf-as-der":
        _write_doc(container_document(conf_as_der(r)), args.out)
        return 0
    if args.v is None:
        raise DocumentError(f"transform {args.transform!r} needs --v", "cert")
    v = subset_from_document(load(args.v), r.carrier)
    transformed = enlarge(r, v) if args.transform == "enlarge" else restrict(r, v)
    _write_doc(ruleset_document(transformed), args.out)
    return 0


def _cmd_oracle(args) -> int:
    r = _load_ruleset(args.ruleset)
    v = _load_v(args.v, r)
    brute_lfp = oracle_lfp(r, v)
    brute_gfp = oracle_gfp(r, v)
    if v is None:
        solver_lfp = ind_predicate(r)
        solver_gfp = coind_predicate(r)
    else:
        solver_lfp = cover_with_trace(r, v)[0]
        solver_gfp = positivity_with_trace(r, v)[0]
    agrees = brute_lfp == solver_lfp and brute_gfp == solver_gfp
    verdict = "agrees" if agrees else "DISAGREES"
    print(
        f"lfp {format_predicate(brute_lfp)} / gfp {format_predicate(brute_gfp)}; "
        f"solver {verdict}"
    )
    return 0 if agrees else 1


def _cmd_laws(args) -> int:
    r = _load_ruleset(args.ruleset)
    exhaustive: bool | None = None
    if args.exhaustive:
        exhaustive = True
    elif args.samples is not None:
        exhaustive = False
    samples = args.samples if args.samples is not None else 100
    knobs = {"exhaustive": exhaustive, "samples": samples, "seed": args.seed}
    reports = [
        check_cover_laws(r, **knobs),
        check_positivity_laws(r, **knobs),
        check_compatibility(r, **knobs),
    ]
    ok = True
    for report in reports:
        for check in report.checks:
            verdict = "holds" if check.holds else f"FAILS at {check.counterexample}"
            note = "" if check.gating else "  [informative]"
            print(f"{check.law}: {verdict} ({check.checked} checked){note}")
            if check.gating and not check.holds:
                ok = False
    axioms = check_generated_axioms(r)
    cover_ok = axioms.cover_all_hold()
    print(
        f"generated-cover-axioms: {'holds' if cover_ok else 'FAILS'} "
        f"({len(axioms.axioms)} axioms)"
    )
    applicable = [a for a in axioms.axioms if a.positivity_applicable]
    held = sum(1 for a in applicable if a.positivity_holds)
    print(
        f"generated-positivity-axioms: {held}/{len(applicable)} applicable hold"
        "  [informative]"
    )
    if not cover_ok:
        ok = False
    mode = reports[0].mode
    if mode == "sampled":
        print(f"mode: sampled (samples={reports[0].samples}, seed={reports[0].seed})")
    else:
        print("mode: exhaustive")
    if args.out:
        payload = {
            "report": "laws",
            "laws": [report.to_payload() for report in reports],
            "generated_axioms": axioms.to_payload(),
        }
        dump(report_document(payload), args.out)
    return 0 if ok else 1


def _cmd_duality(args) -> int:
    r = _load_ruleset(args.ruleset)
    result = complement_dual(r)
    print(
        f"ind {format_predicate(result.ind)} / coind {format_predicate(result.coind)}; "
        f"{'complementary' if result.holds else 'NOT complementary'}"
    )
    if args.out:
        dump(report_document(result.to_payload()), args.out)
    return 0 if result.holds else 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="basictopo",
        description="Finite-model solver for rule sets, covers and positivity.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name: str, func, help_text: str) -> argparse.ArgumentParser:
        p = sub.add_parser(name, help=help_text)
        p.set_defaults(func=func)
        return p

    p = add("solve", _cmd_solve, "inductive or coinductive predicate of a rule set")
    p.add_argument("--ruleset", required=True)
    p.add_argument("--mode", required=True, choices=("ind", "coind"))
    p.add_argument("--out", help="write the iteration trace document here")

    p = add("cover", _cmd_cover, "basic cover of a subset")
    p.add_argument("--ruleset", required=True)
    p.add_argument("--v", required=True)
    p.add_argument("--out", help="write the iteration trace document here")

    p = add("pos", _cmd_pos, "positivity of a subset")
    p.add_argument("--ruleset", required=True)
    p.add_argument("--v", required=True)
    p.add_argument("--out", help="write the iteration trace document here")

    p = add("derive", _cmd_derive, "extract a derivation or cover proof")
    p.add_argument("--ruleset", required=True)
    p.add_argument("--v")
    p.add_argument("--element", required=True)
    p.add_argument("--out")

    p = add("witness", _cmd_witness, "build a coinduction witness")
    p.add_argument("--ruleset", required=True)
    p.add_argument("--v")
    p.add_argument("--element", required=True)
    p.add_argument("--out")

    p = add("unfold", _cmd_unfold, "one destructor step on a witness")
    p.add_argument("--witness", required=True)
    p.add_argument("--rule", required=True)
    p.add_argument("--out")

    p = add("verify", _cmd_verify, "check a certificate document")
    p.add_argument("--ruleset", required=True)
    p.add_argument("--cert", required=True)
    p.add_argument("--claim", choices=("closed", "consistent"))
    p.add_argument("--v", help="V-variant check for subset certificates")

    p = add("encode", _cmd_encode, "apply an inter-encoding transformation")
    p.add_argument("--ruleset", required=True)
    p.add_argument("--transform", required=True, choices=_TRANSFORMS)
    p.add_argument("--v")
    p.add_argument("--out")

    p = add("oracle", _cmd_oracle, "brute-force fixed points, compared to the solver")
    p.add_argument("--ruleset", required=True)
    p.add_argument("--v")

    p = add("laws", _cmd_laws, "check the basic-topology laws")
    p.add_argument("--ruleset", required=True)
    p.add_argument("--exhaustive", action="store_true")
    p.add_argument("--samples", type=int)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--out")

    p = add("duality", _cmd_duality, "inductive vs coinductive complement check")
    p.add_argument("--ruleset", required=True)
    p.add_argument("--out")

    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except DocumentError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except BoundExceededError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3
    except BasicTopoError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
