"""Tents and dominating families.

An α-tent is a family of dimension one with α minimal members and one
greatest member (the apex).  If a union-closed α-tent T with α > 1 is
dominated by F∖{∅}, meaning every nonempty member of F contains a
minimal member of T, then F ∪ T has an abundant element, even when F is
not union-closed.  ``tent_abundant`` builds that element and its
injection explicitly.
"""

from dataclasses import dataclass

from .abundance import InjectionWitness
from .core import SetFamily, Verdict, is_union_closed, label_key, member_key
from .errors import InternalCheckError, PreconditionError
from .poset import cover_dag, dimension, maximal_members, minimal_members


@dataclass(frozen=True)
class TentCertificate:
    tent: SetFamily
    alpha: int
    apex: int
    minimal: tuple
    union_closed: bool

    def to_json(self):
        T = self.tent
        return {
            "alpha": self.alpha,
            "apex": list(T.labels_of(self.apex)),
            "minimal": [list(T.labels_of(m)) for m in self.minimal],
            "union_closed": self.union_closed,
        }


def is_alpha_tent(T, require_union_closed=False):
    """Certify ``T`` as an α-tent.  Failure carries a message as witness."""
    if len(T) < 2:
        return Verdict(False, "a tent needs at least one minimal member below the apex")
    d = dimension(T)
    if d != 1:
        return Verdict(False, f"dimension is {d}, not 1")
    tops = maximal_members(T.members)
    if len(tops) != 1:
        return Verdict(
            False, "maximal members " + ", ".join(T.format_set(m) for m in tops) + " are not unique"
        )
    apex = tops[0]
    mins = minimal_members(T.members)
    closed = bool(is_union_closed(T))
    if require_union_closed and not closed:
        return Verdict(False, "the tent is not union-closed")
    return Verdict(True, TentCertificate(T, len(mins), apex, mins, closed))


def _label_sets(F):
    if isinstance(F, SetFamily):
        return [frozenset(F.labels_of(m)) for m in F.members]
    return [frozenset(s) for s in F]


def dominates(Fstar, cert):
    """Does every member of ``Fstar`` contain a minimal member of the tent?

    ``Fstar`` is a ``SetFamily`` or any iterable of label collections (it
    may be empty).  The failure witness is the offending member's labels.
    """
    T = cert.tent
    mins = [frozenset(T.labels_of(m)) for m in cert.minimal]
    for A in sorted(_label_sets(Fstar), key=lambda s: (len(s), sorted(map(label_key, s)))):
        if not any(M <= A for M in mins):
            return Verdict(False, tuple(sorted(A, key=label_key)))
    return Verdict(True)


@dataclass(frozen=True)
class TentResult:
    """``family`` is F ∪ T; ``M`` and ``N`` are masks in it (``N`` may be None)."""

    element: object
    witness: InjectionWitness
    M: int
    N: object

    @property
    def family(self):
        return self.witness.family

    def to_json(self):
        F = self.family
        out = self.witness.to_json()
        out["M"] = list(F.labels_of(self.M))
        out["N"] = None if self.N is None else list(F.labels_of(self.N))
        return out


def tent_abundant(F, cert):
    """An abundant element of F ∪ T, following the tent argument.

    Among the minimal members of T pick M with the largest up-set in
    G = (F∖{∅}) ∪ T, and x the least element of M.  Members of G avoiding
    x all sit above the one minimal member N that misses x, so pairing
    N↑ with M↑ (apex excluded, canonical order) injects them into G_x;
    ∅, if present in F, goes to the apex.
    """
    if cert.alpha <= 1:
        raise PreconditionError(f"the tent argument needs α > 1, got α = {cert.alpha}", "alpha>1")
    if not cert.union_closed:
        raise PreconditionError("the tent must be union-closed", "union-closed tent")
    fsets = _label_sets(F)
    fstar = [s for s in fsets if s]
    dom = dominates(fstar, cert)
    if not dom:
        raise PreconditionError(
            "F∖{∅} does not dominate the tent: {" + ",".join(dom.witness) + "} contains no minimal node",
            "domination",
            dom.witness,
        )
    T = cert.tent
    FT = SetFamily.from_sets(set(fsets) | set(_label_sets(T)))
    G = [m for m in FT.members if m]
    mins = sorted((FT.mask_of(T.labels_of(m)) for m in cert.minimal), key=member_key)
    apex = FT.mask_of(T.labels_of(cert.apex))
    if set(minimal_members(G)) != set(mins):
        raise InternalCheckError("minimal members of F* ∪ T differ from those of T")

    def up(A):
        return [g for g in G if g & A == A]

    M = max(mins, key=lambda m: (len(up(m)), [-k for k in member_key(m)]))
    x = (M & -M).bit_length() - 1
    missing = [N for N in mins if not (N >> x) & 1]
    if len(missing) > 1:
        raise InternalCheckError(f"{FT.labels[x]} misses {len(missing)} minimal nodes of the tent")
    mapping = {}
    N = None
    if missing:
        N = missing[0]
        n_up = sorted((g for g in up(N) if g != apex), key=member_key)
        m_up = sorted((g for g in up(M) if g != apex), key=member_key)
        if len(n_up) > len(m_up):
            raise InternalCheckError("|N↑ ∖ {apex}| exceeds |M↑ ∖ {apex}| for the chosen M")
        phi = dict(zip(n_up, m_up))
        for A in G:
            if not (A >> x) & 1:
                if A not in phi:
                    raise InternalCheckError(f"{FT.format_set(A)} avoids x but is not above N")
                mapping[A] = phi[A]
    if 0 in FT:
        mapping[0] = apex
    pairs = tuple(sorted(mapping.items(), key=lambda p: member_key(p[0])))
    witness = InjectionWitness(FT, FT.element(x), "tent", pairs)
    return TentResult(FT.element(x), witness, M, N)


def dcc_tent_corollary(G):
    """Abundant element of G ∪ {∅} for a union-closed G of nonempty sets
    having a height-one member above every minimal member."""
    if any(m == 0 for m in G.members):
        raise PreconditionError("every member of G must be nonempty", "nonempty members")
    v = is_union_closed(G)
    if not v:
        raise PreconditionError("G must be union-closed", "union-closed", v.witness)
    dag = cover_dag(G)
    mins = minimal_members(G.members)
    H = next(
        (
            h
            for k, h in enumerate(G.members)
            if dag.height[k] == 1 and all(m & h == m for m in mins)
        ),
        None,
    )
    if H is None:
        raise PreconditionError(
            "no height-one member contains every minimal member", "height-one cover of minima"
        )
    if len(mins) == 1:
        M = mins[0]
        FG = SetFamily(tuple(G.members) + (0,), G.labels)
        x = (M & -M).bit_length() - 1
        witness = InjectionWitness(FG, FG.element(x), "tent", ((0, G.universe),))
        return TentResult(FG.element(x), witness, M, None)
    T = SetFamily.from_sets([G.labels_of(H)] + [G.labels_of(m) for m in mins])
    cert = is_alpha_tent(T, require_union_closed=True)
    if not cert:
        raise InternalCheckError(f"{{H}} ∪ min G is not a union-closed tent: {cert.witness}")
    return tent_abundant(SetFamily(tuple(G.members) + (0,), G.labels), cert.witness)
