"""Separating reduction: identify elements that lie in exactly the same members.

Elements x ~ y with F_x = F_y are merged into one class, named after its
least label.  The map A -> [A] is an order isomorphism from F onto the
quotient, commutes with unions and intersections, and keeps abundance
and optimality of every element.  ``verify_quotient`` re-checks all of
that for a concrete family.
"""

from dataclasses import dataclass
from functools import cached_property

from .abundance import is_abundant, is_optimal
from .core import SetFamily, bits, is_separating, neighborhoods
from .errors import PreconditionError


@dataclass(frozen=True)
class QuotientResult:
    """``forward[k]`` is the quotient position of ``family.members[k]``."""

    family: SetFamily
    classes: tuple  # tuple of element-index tuples, ordered by representative
    quotient: SetFamily
    forward: tuple

    @property
    def backward(self):
        inv = [0] * len(self.forward)
        for k, q in enumerate(self.forward):
            inv[q] = k
        return tuple(inv)

    @cached_property
    def class_of(self):
        """Element index of the family -> class index (= quotient element index)."""
        out = {}
        for c, members in enumerate(self.classes):
            for i in members:
                out[i] = c
        return out

    def project(self, mask):
        """[A] for an arbitrary subset A of the universe."""
        cls = self.class_of
        out = 0
        for i in bits(mask):
            out |= 1 << cls[i]
        return out

    def class_labels(self, c):
        return tuple(self.family.labels[i] for i in self.classes[c])

    def to_json(self):
        F, S = self.family, self.quotient
        return {
            "classes": [
                {"representative": f"[{S.labels[c]}]", "elements": list(self.class_labels(c))}
                for c in range(len(self.classes))
            ],
            "members": [
                [list(F.labels_of(a)), list(S.labels_of(S.members[self.forward[k]]))]
                for k, a in enumerate(F.members)
            ],
            "quotient": {"sets": [list(S.labels_of(m)) for m in S.members]},
        }


def separating_quotient(F):
    if F.is_trivial:
        raise PreconditionError("the quotient needs a nontrivial family", "nontrivial")
    inside = neighborhoods(F).inside
    groups = {}
    for i, key in enumerate(inside):
        groups.setdefault(key, []).append(i)
    # element indices follow label order, so each group's first index is its least label
    classes = tuple(sorted(tuple(g) for g in groups.values()))
    reps = [F.labels[c[0]] for c in classes]
    cls = {}
    for c, members in enumerate(classes):
        for i in members:
            cls[i] = c
    images = []
    for a in F.members:
        m = 0
        for i in bits(a):
            m |= 1 << cls[i]
        images.append(m)
    S = SetFamily.from_masks(images, reps)
    return QuotientResult(F, classes, S, tuple(S.index(m) for m in images))


CHECKS = (
    "order_isomorphism",
    "union_commutes",
    "intersection_commutes",
    "abundance_preserved",
    "optimality_preserved",
)


@dataclass(frozen=True)
class QuotientReport:
    checks: dict
    separating: bool

    @property
    def ok(self):
        return all(self.checks.values()) and self.separating

    def to_json(self):
        return {"checks": dict(self.checks), "separating": self.separating, "ok": self.ok}


def verify_quotient(F, Q):
    S = Q.quotient
    ms = F.members
    fw = Q.forward
    checks = {}

    bijective = sorted(fw) == list(range(len(S)))
    checks["order_isomorphism"] = bijective and all(
        (a & b == a) == (S.members[fw[i]] & S.members[fw[j]] == S.members[fw[i]])
        for i, a in enumerate(ms)
        for j, b in enumerate(ms)
    )
    checks["union_commutes"] = all(
        Q.project(a | b) == Q.project(a) | Q.project(b) for i, a in enumerate(ms) for b in ms[i:]
    )
    # [∩X] ⊆ ∩[X] always; equality over every subcollection reduces to:
    # for each class c, the intersection of all members meeting c still meets c.
    inter_ok = True
    for members in Q.classes:
        cmask = sum(1 << i for i in members)
        meet = F.universe
        for a in ms:
            if a & cmask:
                meet &= a
        if not meet & cmask:
            inter_ok = False
            break
    checks["intersection_commutes"] = inter_ok

    cls = Q.class_of
    checks["abundance_preserved"] = all(
        is_abundant(F, i) == is_abundant(S, cls[i]) for i in range(F.n)
    )
    checks["optimality_preserved"] = all(
        is_optimal(F, i) == is_optimal(S, cls[i]) for i in range(F.n)
    )
    return QuotientReport(checks, bool(is_separating(S)))
