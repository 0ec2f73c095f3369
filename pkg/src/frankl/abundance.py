"""Abundant, optimal and covert elements, and explicit injections F_x^c -> F_x.

An element is abundant when some injection from the members avoiding it
into the members containing it exists.  For finite families that is a
cardinality comparison, and the classification below decides it that
way.  The witness builders are the interesting part: each one realizes
the injection by a specific construction and is checked before it is
returned.

========  ===========================================================
method    construction
========  ===========================================================
cover     A -> an x-cover of A (injective in union-closed families)
covert    A -> A ∪ {x}, when every such union is a member
dim2      the x-cover built for an optimal x in a separating,
          union-closed family of dimension two
tent      the pairing through a dominated union-closed tent
padding   any injection, pairing both sides in canonical order
========  ===========================================================
"""

from dataclasses import dataclass

from .core import ElementId, Verdict, is_separating, is_union_closed, member_key, neighborhoods
from .errors import DomainError, InternalCheckError, NotAbundantError, PreconditionError
from .poset import cover_dag, dimension, is_cover, minimal_members

METHODS = ("cover", "covert", "dim2", "tent", "padding")


@dataclass(frozen=True)
class InjectionWitness:
    """An injective map from F_x^c into F_x, verified on construction.

    ``pairs`` lists ``(A, phi(A))`` as masks, with ``A`` in canonical
    member order.  Construction raises ``InternalCheckError`` when the map
    is not an injection of the right shape, so every witness in
    circulation has been checked.
    """

    family: object
    element: ElementId
    method: str
    pairs: tuple

    def __post_init__(self):
        verify_witness(self)

    def mapping(self):
        return dict(self.pairs)

    def to_json(self):
        F = self.family
        return {
            "element": self.element.label,
            "method": self.method,
            "pairs": [[list(F.labels_of(a)), list(F.labels_of(b))] for a, b in self.pairs],
        }


def verify_witness(w):
    F = w.family
    if w.method not in METHODS:
        raise InternalCheckError(f"unknown witness method {w.method!r}")
    nb = neighborhoods(F)
    domain = set(nb.members_out(w.element))
    target = set(nb.members_in(w.element))
    sources = [a for a, _ in w.pairs]
    images = [b for _, b in w.pairs]
    if len(set(sources)) != len(sources) or set(sources) != domain:
        raise InternalCheckError(
            f"{w.method} witness for {w.element} is not defined on exactly F_x^c"
        )
    if len(set(images)) != len(images):
        raise InternalCheckError(f"{w.method} witness for {w.element} is not injective")
    if not set(images) <= target:
        raise InternalCheckError(f"{w.method} witness for {w.element} leaves F_x")


def _witness(F, x, method, mapping):
    pairs = tuple(sorted(mapping.items(), key=lambda p: member_key(p[0])))
    return InjectionWitness(F, F.element(x), method, pairs)


@dataclass(frozen=True)
class ElementReport:
    element: ElementId
    count_in: int
    count_out: int
    abundant: bool
    optimal: bool
    covert: bool
    singleton_member: bool

    def to_json(self):
        return {
            "element": self.element.label,
            "count_in": self.count_in,
            "count_out": self.count_out,
            "abundant": self.abundant,
            "optimal": self.optimal,
            "covert": self.covert,
            "singleton_member": self.singleton_member,
        }


def _require_nontrivial(F):
    if F.is_trivial:
        raise PreconditionError("the family is trivial (no element in its universe)", "nontrivial")


def _require_union_closed(F, who):
    v = is_union_closed(F)
    if not v:
        a, b = v.witness
        raise PreconditionError(
            f"{who} requires a union-closed family; "
            f"{F.format_set(a)} ∪ {F.format_set(b)} is not a member",
            "union-closed",
            v.witness,
        )


def _optimal_indices(F):
    inside = neighborhoods(F).inside
    out = []
    for i, a in enumerate(inside):
        if not any(b != a and a & b == a for b in inside):
            out.append(i)
    return out


def optimal_elements(F):
    """Elements whose F_x is inclusion-maximal among all neighborhoods."""
    _require_nontrivial(F)
    return [F.elements[i] for i in F.cached("optimal", _optimal_indices)]


def is_optimal(F, x):
    return F.resolve(x) in F.cached("optimal", _optimal_indices)


def is_abundant(F, x):
    nb = neighborhoods(F)
    return nb.count_out(x) <= nb.count_in(x)


def abundant_elements(F):
    """A report for every element of the universe."""
    _require_nontrivial(F)
    nb = neighborhoods(F)
    optimal = set(F.cached("optimal", _optimal_indices))
    reports = []
    for e in F.elements:
        cin, cout = nb.count_in(e), nb.count_out(e)
        reports.append(
            ElementReport(
                element=e,
                count_in=cin,
                count_out=cout,
                abundant=cout <= cin,
                optimal=e.index in optimal,
                covert=bool(is_covert(F, e)),
                singleton_member=(1 << e.index) in F,
            )
        )
    return reports


def is_covert(F, x):
    """{x} is not a member, yet A ∪ {x} is a member for every A in F_x^c.

    On success the witness is the map A -> A ∪ {x}; on failure it is the
    first A whose union with {x} is missing (or ``None`` when {x} ∈ F).
    """
    _require_nontrivial(F)
    i = F.resolve(x)
    bit = 1 << i
    if bit in F:
        return Verdict(False)
    mapping = {}
    for A in neighborhoods(F).members_out(i):
        if A | bit not in F:
            return Verdict(False, A)
        mapping[A] = A | bit
    return Verdict(True, _witness(F, i, "covert", mapping))


def covert_min_check(F, x):
    """Test A ∪ {x} ∈ F only along the minimal members of F_x^c.

    In a union-closed family this decides the same question as testing
    every member of F_x^c.
    """
    _require_union_closed(F, "the minimal-member covert test")
    i = F.resolve(x)
    bit = 1 << i
    return all(A | bit in F for A in minimal_members(neighborhoods(F).members_out(i)))


def x_covers(F, x, A):
    """Members containing x that cover A."""
    i = F.resolve(x)
    if A not in F or (A >> i) & 1:
        raise DomainError(f"{F.format_set(A)} is not a member of F_{F.labels[i]}^c")
    dag = cover_dag(F)
    ups = dag.upper_covers(F.index(A))
    return tuple(F.members[j] for j in sorted(ups) if (F.members[j] >> i) & 1)


def cover_injection(F, x):
    """Send each A in F_x^c to its canonical x-cover.

    Returns ``Verdict(True, witness)``, or ``Verdict(False, A)`` for the
    first A with no x-cover.  Union-closedness is what makes the map
    injective, so it is required.
    """
    _require_union_closed(F, "the x-cover injection")
    i = F.resolve(x)
    mapping = {}
    for A in neighborhoods(F).members_out(i):
        ups = x_covers(F, i, A)
        if not ups:
            return Verdict(False, A)
        mapping[A] = ups[0]
    return Verdict(True, _witness(F, i, "cover", mapping))


def dim2_witness(F, x):
    """Constructive injection for an optimal x in dimension two.

    For A ∉ F_x: if the top member covers A, use it; otherwise take the
    first X ∈ F_x with A ∪ X below the top, and use A ∪ X, which then has
    height one over a minimal A and so covers it.
    """
    _require_nontrivial(F)
    _require_union_closed(F, "the dimension-two construction")
    sep = is_separating(F)
    if not sep:
        y, z = sep.witness
        raise PreconditionError(
            f"the dimension-two construction requires a separating family "
            f"({y} and {z} lie in the same members); run `quotient` first",
            "separating",
            sep.witness,
        )
    d = dimension(F)
    if d != 2:
        raise PreconditionError(
            f"the dimension-two construction requires dimension 2, got {d}", "dimension-two"
        )
    i = F.resolve(x)
    if not is_optimal(F, i):
        raise PreconditionError(
            f"the dimension-two construction requires an optimal element; {F.labels[i]} is not",
            "optimal",
        )
    top = F.universe
    inside = neighborhoods(F).members_in(i)
    mapping = {}
    for A in neighborhoods(F).members_out(i):
        if is_cover(F, A, top):
            B = top
        else:
            X = next((X for X in inside if A | X != top), None)
            if X is None:
                raise InternalCheckError(
                    f"no X in F_x with A ∪ X below the top for A = {F.format_set(A)}"
                )
            B = A | X
        if B not in F or not is_cover(F, A, B) or not (B >> i) & 1:
            raise InternalCheckError(
                f"{F.format_set(B)} is not an x-cover of {F.format_set(A)}"
            )
        mapping[A] = B
    return _witness(F, i, "dim2", mapping)


def dim_le1_report(F):
    """Reports for a union-closed family of dimension at most one.

    Every element is abundant there and misses at most one member; both
    facts are checked.
    """
    _require_nontrivial(F)
    _require_union_closed(F, "the dimension-at-most-one proposition")
    d = dimension(F)
    if d > 1:
        raise PreconditionError(f"dimension must be at most 1, got {d}", "dimension-at-most-one")
    reports = abundant_elements(F)
    for r in reports:
        if not r.abundant or r.count_out > 1:
            raise InternalCheckError(
                f"{r.element} misses {r.count_out} members in a family of dimension {d}"
            )
    return reports


def intersection_Ix(F, x):
    """Intersection of all members containing x."""
    out = F.universe
    for A in neighborhoods(F).members_in(x):
        out &= A
    return out


def basis_sets(F):
    """Members that are not the union of two members other than themselves."""
    _require_union_closed(F, "basis sets")
    out = []
    for B in F.members:
        below = [X for X in F.members if X != B and X & B == X]
        if not any(X | Y == B for k, X in enumerate(below) for Y in below[k:]):
            out.append(B)
    return tuple(out)


def padding_witness(F, x):
    """Pair F_x^c with F_x in canonical order; needs |F_x^c| <= |F_x|."""
    nb = neighborhoods(F)
    i = F.resolve(x)
    out, inn = nb.members_out(i), nb.members_in(i)
    if len(out) > len(inn):
        raise NotAbundantError(
            f"{F.labels[i]} is not abundant: |F_x| = {len(inn)} < |F_x^c| = {len(out)}",
            "abundant",
        )
    return _witness(F, i, "padding", dict(zip(out, inn)))


def best_witness(F, x):
    """Most structured witness available: cover, covert, dim2, then padding."""
    _require_nontrivial(F)
    i = F.resolve(x)
    closed = bool(is_union_closed(F))
    if closed:
        v = cover_injection(F, i)
        if v:
            return v.witness
    v = is_covert(F, i)
    if v:
        return v.witness
    if closed and is_separating(F) and dimension(F) == 2 and is_optimal(F, i):
        return dim2_witness(F, i)
    return padding_witness(F, i)
