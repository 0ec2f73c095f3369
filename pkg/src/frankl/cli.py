"""Command-line front end.

Exit codes: 0 success, 2 bad input, 3 a required hypothesis fails,
4 an internal check failed (a witness or theorem step did not verify).
"""

import argparse
import json
import sys
from dataclasses import dataclass

from . import __version__
from .abundance import (
    abundant_elements,
    basis_sets,
    best_witness,
    cover_injection,
    dim2_witness,
    is_covert,
    is_optimal,
    padding_witness,
)
from .core import is_separating, is_union_closed, load_family
from .errors import DomainError, FamilyError, InternalCheckError, PreconditionError
from .poset import cover_dag, dimension, maximal_members, minimal_members
from .quotient import separating_quotient, verify_quotient
from .search import EnumerationQuery, enumerate_families, verify_claims
from .tent import dcc_tent_corollary, is_alpha_tent, tent_abundant
from .topology import abundant_point, minimal_neighborhood, parse_topology

EXIT_INPUT = 2
EXIT_PRECONDITION = 3
EXIT_INTERNAL = 4


@dataclass(frozen=True)
class AnalysisReport:
    family: object
    union_closed: bool
    separating: bool
    dimension: int
    minimal: tuple
    maximal: tuple
    basis: object
    elements: list
    witness: object = None

    def to_json(self):
        F = self.family
        sets = lambda ms: [list(F.labels_of(m)) for m in ms]  # noqa: E731
        out = {
            "members": len(F),
            "universe": list(F.labels),
            "union_closed": self.union_closed,
            "separating": self.separating,
            "dimension": self.dimension,
            "minimal": sets(self.minimal),
            "maximal": sets(self.maximal),
            "basis_sets": None if self.basis is None else sets(self.basis),
            "elements": [r.to_json() for r in self.elements],
        }
        if self.witness is not None:
            out["witness"] = self.witness.to_json()
        return out

    def render(self):
        F = self.family
        fmt = lambda ms: ", ".join(F.format_set(m) for m in ms)  # noqa: E731
        lines = [
            f"members      {len(F)}",
            f"universe     {{{','.join(F.labels)}}}",
            f"union-closed {'yes' if self.union_closed else 'no'}",
            f"separating   {'yes' if self.separating else 'no'}",
            f"dimension    {self.dimension}",
            f"minimal      {fmt(self.minimal)}",
            f"maximal      {fmt(self.maximal)}",
        ]
        if self.basis is not None:
            lines.append(f"basis sets   {fmt(self.basis)}")
        lines.append("")
        lines.append(f"{'element':<10}{'|F_x|':>6}{'|F_x^c|':>9}  abundant optimal covert singleton")
        yn = lambda b: "yes" if b else "-"  # noqa: E731
        for r in self.elements:
            lines.append(
                f"{r.element.label:<10}{r.count_in:>6}{r.count_out:>9}  "
                f"{yn(r.abundant):<9}{yn(r.optimal):<8}{yn(r.covert):<7}{yn(r.singleton_member)}"
            )
        if self.witness is not None:
            lines.append("")
            lines.append(json.dumps(self.witness.to_json()))
        return "\n".join(lines)


def _not_abundant(F, x, exc):
    if is_optimal(F, x):
        return PreconditionError(
            str(exc).replace("is not abundant", "is optimal but not abundant"), "abundant"
        )
    return exc


def analyze(F, witness_for=None):
    closed = bool(is_union_closed(F))
    w = None
    if witness_for is not None:
        F.resolve(witness_for)
        w = best_witness(F, witness_for)
    return AnalysisReport(
        family=F,
        union_closed=closed,
        separating=bool(is_separating(F)),
        dimension=dimension(F),
        minimal=minimal_members(F.members),
        maximal=maximal_members(F.members),
        basis=basis_sets(F) if closed else None,
        elements=[] if F.is_trivial else abundant_elements(F),
        witness=w,
    )


def _emit(args, payload, text):
    if args.json:
        print(json.dumps(payload, sort_keys=False))
    else:
        print(text)


def cmd_analyze(args):
    F = load_family(args.path, allow_trivial=args.allow_trivial)
    if args.dot:
        print(cover_dag(F).to_dot(), end="")
        return 0
    try:
        report = analyze(F, args.witness)
    except PreconditionError as exc:
        if args.witness is not None and exc.hypothesis == "abundant":
            raise _not_abundant(F, args.witness, exc) from None
        raise
    _emit(args, report.to_json(), report.render())
    return 0


WITNESS_BUILDERS = {
    "best": best_witness,
    "padding": padding_witness,
    "dim2": dim2_witness,
}


def cmd_witness(args):
    F = load_family(args.path)
    x = args.element
    F.resolve(x)
    if args.method in WITNESS_BUILDERS:
        try:
            w = WITNESS_BUILDERS[args.method](F, x)
        except PreconditionError as exc:
            if exc.hypothesis == "abundant":
                raise _not_abundant(F, x, exc) from None
            raise
    elif args.method == "cover":
        v = cover_injection(F, x)
        if not v:
            raise PreconditionError(
                f"{F.format_set(v.witness)} has no {x}-cover; the cover injection does not apply",
                "x-cover exists",
            )
        w = v.witness
    else:
        v = is_covert(F, x)
        if not v:
            raise PreconditionError(f"{x} is not covert", "covert")
        w = v.witness
    print(json.dumps(w.to_json()))
    return 0


def cmd_quotient(args):
    F = load_family(args.path)
    Q = separating_quotient(F)
    report = verify_quotient(F, Q)
    if not report.ok:
        raise InternalCheckError(f"quotient checks failed: {report.checks}")
    payload = Q.to_json()
    payload["report"] = report.to_json()
    if args.json:
        print(json.dumps(payload))
        return 0
    S = Q.quotient
    lines = ["classes"]
    for c in range(len(Q.classes)):
        lines.append(f"  [{S.labels[c]}] = {{{','.join(Q.class_labels(c))}}}")
    lines.append("members")
    for k, a in enumerate(F.members):
        lines.append(f"  {F.format_set(a)} -> {S.format_set(S.members[Q.forward[k]])}")
    lines.append("checks")
    for name, ok in report.checks.items():
        lines.append(f"  {name:<22}{'pass' if ok else 'FAIL'}")
    lines.append(f"  {'separating':<22}{'pass' if report.separating else 'FAIL'}")
    print("\n".join(lines))
    return 0


def cmd_topology(args):
    with open(args.path, encoding="utf-8") as fh:
        T = parse_topology(fh.read())
    point, w = abundant_point(T)
    tau = T.opens
    payload = {
        "point": point.label,
        "opens": len(tau),
        "opens_containing_point": len(tau) - len(w.pairs),
        "least_neighborhoods": {
            p: list(tau.labels_of(minimal_neighborhood(T, p))) for p in tau.labels
        },
        "witness": w.to_json(),
    }
    text = "\n".join(
        [
            f"abundant point {point.label} "
            f"(in {payload['opens_containing_point']} of {len(tau)} open sets)",
            "least neighbourhoods: "
            + ", ".join(f"{p}: {tau.format_set(minimal_neighborhood(T, p))}" for p in tau.labels),
            json.dumps(w.to_json()),
        ]
    )
    _emit(args, payload, text)
    return 0


def cmd_tent(args):
    F = load_family(args.family, allow_trivial=True)
    if args.tent is None:
        result = dcc_tent_corollary(F)
    else:
        T = load_family(args.tent)
        cert = is_alpha_tent(T, require_union_closed=True)
        if not cert:
            raise PreconditionError(f"not a union-closed tent: {cert.witness}", "union-closed tent")
        result = tent_abundant(F, cert.witness)
    payload = result.to_json()
    text = "\n".join(
        [
            f"abundant element {result.element.label}",
            f"M = {result.family.format_set(result.M)}",
            "N = " + ("-" if result.N is None else result.family.format_set(result.N)),
            json.dumps(result.witness.to_json()),
        ]
    )
    _emit(args, payload, text)
    return 0


def cmd_enumerate(args):
    if args.claims:
        findings = verify_claims(args.n, workers=args.workers)
    else:
        tri = {"yes": True, "no": False, "any": None}
        q = EnumerationQuery(
            n=args.n,
            union_closed=tri[args.union_closed],
            separating=tri[args.separating],
            nontrivial=tri[args.nontrivial],
            min_dim=args.min_dim,
            max_dim=args.max_dim,
            sample_count=args.sample,
            seed=args.seed,
        )
        findings = [enumerate_families(q, workers=args.workers, chunks=max(1, args.workers))]
    failed = False
    for f in findings:
        print(json.dumps(f.to_json()))
        failed |= not f.passed
    return EXIT_INTERNAL if failed else 0


def build_parser():
    p = argparse.ArgumentParser(prog="frankl", description=__doc__.splitlines()[0])
    p.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = p.add_subparsers(dest="command", required=True)

    a = sub.add_parser("analyze", help="classify every element of a family")
    a.add_argument("path")
    a.add_argument("--witness", metavar="X", help="attach the best injection witness for X")
    a.add_argument("--dot", action="store_true", help="print the Hasse diagram as DOT")
    a.add_argument("--allow-trivial", action="store_true", help="accept the family {∅}")
    a.add_argument("--json", action="store_true")
    a.set_defaults(func=cmd_analyze)

    w = sub.add_parser("witness", help="build one injection witness (JSON)")
    w.add_argument("path")
    w.add_argument("element")
    w.add_argument(
        "--method", choices=["best", "cover", "covert", "dim2", "padding"], default="best"
    )
    w.set_defaults(func=cmd_witness)

    q = sub.add_parser("quotient", help="separating quotient and its checks")
    q.add_argument("path")
    q.add_argument("--json", action="store_true")
    q.set_defaults(func=cmd_quotient)

    t = sub.add_parser("topology", help="abundant point of a finite topology")
    t.add_argument("path")
    t.add_argument("--json", action="store_true")
    t.set_defaults(func=cmd_topology)

    te = sub.add_parser("tent", help="abundant element of F ∪ T for a dominated tent T")
    te.add_argument("family")
    te.add_argument("tent", nargs="?", help="omit to build the tent from the family itself")
    te.add_argument("--json", action="store_true")
    te.set_defaults(func=cmd_tent)

    e = sub.add_parser("enumerate", help="enumerate families; JSON lines")
    e.add_argument("-n", type=int, required=True)
    e.add_argument("--claims", action="store_true", help="check every structural claim")
    e.add_argument("--sample", type=int, help="sample this many families (required for n=5)")
    e.add_argument("--seed", type=int, default=0)
    e.add_argument("--union-closed", choices=["yes", "no", "any"], default="yes")
    e.add_argument("--separating", choices=["yes", "no", "any"], default="any")
    e.add_argument("--nontrivial", choices=["yes", "no", "any"], default="yes")
    e.add_argument("--min-dim", type=int)
    e.add_argument("--max-dim", type=int)
    e.add_argument("--workers", type=int, default=1)
    e.set_defaults(func=cmd_enumerate)
    return p


def main(argv=None):
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except InternalCheckError as exc:
        print(f"internal check failed: {exc}", file=sys.stderr)
        return EXIT_INTERNAL
    except PreconditionError as exc:
        print(f"precondition failed: {exc}", file=sys.stderr)
        return EXIT_PRECONDITION
    except (FamilyError, DomainError, OSError, ValueError) as exc:
        print(f"input error: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
