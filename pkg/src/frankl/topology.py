"""Finite topological spaces viewed as union-closed families of open sets.

Finite spaces satisfy the descending chain condition on open sets, so
each point has a least open neighbourhood and the space always has a
point lying in at least half of the open sets.  ``abundant_point``
finds one by the route of the DCC argument: pass to the T0 quotient,
take an optimal class, observe that its singleton is open, and pull the
resulting injection back.

Only finite spaces are representable here.  The infinite examples that
show the DCC hypothesis is needed (e.g. the up-rays {n, n+1, ...} on the
naturals, where every point lies in only finitely many opens) have no
value in this package.
"""

import json
from dataclasses import dataclass

from .abundance import InjectionWitness, optimal_elements
from .core import SetFamily, label_key, member_key, neighborhoods
from .errors import FamilyError, InternalCheckError, PreconditionError
from .quotient import separating_quotient


class TopologyError(FamilyError):
    """The given sets are not a topology; ``witness`` shows why."""

    def __init__(self, message, witness=None):
        super().__init__(message)
        self.witness = witness


@dataclass(frozen=True)
class TopSpace:
    opens: SetFamily

    @property
    def points(self):
        return self.opens.labels


def _sorted(labels):
    return sorted(labels, key=label_key)


def validate_topology(points, sets):
    points = list(points)
    if len(set(points)) != len(points):
        raise TopologyError("duplicate points")
    point_set = set(points)
    frozen = [frozenset(s) for s in sets]
    for s in frozen:
        stray = s - point_set
        if stray:
            raise TopologyError(
                f"open set uses unknown points {_sorted(stray)}", _sorted(s)
            )
    have = set(frozen)
    if frozenset() not in have:
        raise TopologyError("∅ is not open", [])
    if frozenset(point_set) not in have:
        raise TopologyError("the whole space is not open", _sorted(point_set))
    ordered = sorted(have, key=lambda s: (len(s), sorted(map(label_key, s))))
    for i, a in enumerate(ordered):
        for b in ordered[i + 1:]:
            if a | b not in have:
                raise TopologyError("union of two opens is not open", [_sorted(a), _sorted(b)])
            if a & b not in have:
                raise TopologyError(
                    "intersection of two opens is not open", [_sorted(a), _sorted(b)]
                )
    return TopSpace(SetFamily.from_sets(frozen))


def parse_topology(text):
    """``{"points": [...], "sets": [[...], ...]}``"""
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise FamilyError(f"invalid JSON: {exc}") from None
    if not isinstance(doc, dict) or not isinstance(doc.get("sets"), list):
        raise FamilyError('topology file needs a "sets" list')
    points = doc.get("points")
    if points is None:
        points = sorted({p for s in doc["sets"] for p in s}, key=label_key)
    if not all(isinstance(p, str) for p in points):
        raise FamilyError("points must be strings")
    for s in doc["sets"]:
        if not isinstance(s, list) or not all(isinstance(p, str) for p in s):
            raise FamilyError("open sets must be lists of string labels")
    return validate_topology(points, doc["sets"])


def minimal_neighborhood(T, a):
    """The least open set containing ``a``."""
    tau = T.opens
    i = tau.resolve(a)
    opens = neighborhoods(tau).members_in(i)
    if not opens:
        raise PreconditionError(f"{tau.labels[i]} lies in no open set", "whole-space-open")
    out = tau.universe
    for U in opens:
        out &= U
    if out not in tau:
        raise InternalCheckError("least neighbourhood is not open in a finite space")
    return out


def abundant_point(T):
    """A point in at least half the open sets, with an injection witness.

    Returns ``(point, witness)``.  The witness maps each open set avoiding
    the point to its union with the point's T0 class, which is itself open.
    """
    tau = T.opens
    if tau.is_trivial:
        raise PreconditionError("the topology {∅} has no points", "nonempty-topology")
    Q = separating_quotient(tau)
    S = Q.quotient
    chosen = None
    for cls in optimal_elements(S):
        single = 1 << cls.index
        core = S.universe
        for U in neighborhoods(S).members_in(cls):
            core &= U
        if core == single and single in S:
            chosen = cls.index
            break
    if chosen is None:
        raise InternalCheckError("no optimal T0 class has an open singleton")
    cmask = sum(1 << i for i in Q.classes[chosen])
    if cmask not in tau:
        raise InternalCheckError("the chosen point class is not open")
    x = Q.classes[chosen][0]
    mapping = {U: U | cmask for U in neighborhoods(tau).members_out(x)}
    pairs = tuple(sorted(mapping.items(), key=lambda p: member_key(p[0])))
    witness = InjectionWitness(tau, tau.element(x), "cover", pairs)
    return tau.element(x), witness
