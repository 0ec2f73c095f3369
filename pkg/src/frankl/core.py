"""Finite families of sets.

A member set is an ``int`` bitmask over the family's universe: bit ``i``
stands for the element whose label is ``labels[i]``.  Labels are kept in
natural order (decimal labels numerically, then everything else as
strings), and members in (cardinality, mask) order, so every "first" or
"least" choice made elsewhere in the package is reproducible.

The universe is always the union of the members.  Declaring a label that
no member uses is an error, since a phantom point would silently change
every abundance count.
"""

import json
import warnings
from dataclasses import dataclass

from . import kernels
from .errors import DomainError, FamilyError, SizeOverflowError

DEFAULT_MEMBER_CAP = 2 ** 20


def label_key(label):
    if label.isdecimal():
        return (0, int(label), label)
    return (1, 0, label)


def popcount(mask):
    return bin(mask).count("1")


def member_key(mask):
    return (popcount(mask), mask)


def bits(mask):
    """Indices of the set bits of ``mask``, ascending."""
    out = []
    i = 0
    while mask:
        if mask & 1:
            out.append(i)
        mask >>= 1
        i += 1
    return out


@dataclass(frozen=True, order=True)
class ElementId:
    index: int
    label: str

    def __str__(self):
        return self.label


@dataclass(frozen=True)
class Verdict:
    """Outcome of a yes/no check, plus whatever demonstrates a "no" (or a "yes").

    Truthiness follows ``ok``.
    """

    ok: bool
    witness: object = None

    def __bool__(self):
        return self.ok


class SetFamily:
    """An immutable, deduplicated, canonically ordered family of sets."""

    def __init__(self, members, labels):
        labels = tuple(labels)
        if list(labels) != sorted(set(labels), key=label_key):
            raise FamilyError("labels must be distinct and in canonical order; use from_masks")
        members = tuple(sorted(set(members), key=member_key))
        universe = 0
        for m in members:
            universe |= m
        if universe != (1 << len(labels)) - 1:
            raise FamilyError("universe must equal the union of the members")
        self.labels = labels
        self.members = members
        self.universe = universe
        self._index = {m: i for i, m in enumerate(members)}
        self._bit = {lab: i for i, lab in enumerate(labels)}
        self._cache = {}

    @classmethod
    def from_sets(cls, sets, labels=None):
        """Build from an iterable of label collections.

        With ``labels`` given, every label must occur in some member.
        """
        frozen = [frozenset(s) for s in sets]
        used = set().union(*frozen) if frozen else set()
        if labels is not None:
            unused = set(labels) - used
            if unused:
                raise FamilyError(
                    "labels declared but not used by any member: "
                    + ", ".join(sorted(unused, key=label_key))
                )
        ordered = sorted(used, key=label_key)
        bit = {lab: i for i, lab in enumerate(ordered)}
        masks = []
        for s in frozen:
            m = 0
            for lab in s:
                m |= 1 << bit[lab]
            masks.append(m)
        return cls(masks, ordered)

    @classmethod
    def from_masks(cls, masks, labels):
        """Build from masks over ``labels``, dropping labels no member uses."""
        masks = list(masks)
        used = 0
        for m in masks:
            used |= m
        if used >> len(labels):
            raise DomainError("mask references an index beyond the label table")
        keep = [i for i in range(len(labels)) if (used >> i) & 1]
        order = sorted(keep, key=lambda i: label_key(labels[i]))
        if order == list(range(len(labels))):
            return cls(masks, labels)
        remap = {old: new for new, old in enumerate(order)}
        out = []
        for m in masks:
            r = 0
            for i in bits(m):
                r |= 1 << remap[i]
            out.append(r)
        return cls(out, [labels[i] for i in order])

    def __len__(self):
        return len(self.members)

    def __iter__(self):
        return iter(self.members)

    def __contains__(self, mask):
        return mask in self._index

    def __eq__(self, other):
        if not isinstance(other, SetFamily):
            return NotImplemented
        return self.labels == other.labels and self.members == other.members

    def __hash__(self):
        return hash((self.labels, self.members))

    def __repr__(self):
        return "SetFamily(" + ", ".join(self.format_set(m) for m in self.members) + ")"

    @property
    def n(self):
        return len(self.labels)

    @property
    def is_trivial(self):
        return not self.members or self.universe == 0

    @property
    def elements(self):
        return tuple(ElementId(i, lab) for i, lab in enumerate(self.labels))

    def index(self, mask):
        try:
            return self._index[mask]
        except KeyError:
            raise DomainError(f"{self.format_set(mask)} is not a member") from None

    def resolve(self, x):
        """Element index for a label, an ``ElementId`` or an index."""
        if isinstance(x, ElementId):
            x = x.index
        if isinstance(x, int):
            if not 0 <= x < self.n:
                raise DomainError(f"element index {x} outside the universe")
            return x
        try:
            return self._bit[x]
        except KeyError:
            raise DomainError(f"{x!r} is not in the universe") from None

    def element(self, x):
        i = self.resolve(x)
        return ElementId(i, self.labels[i])

    def mask_of(self, labels):
        m = 0
        for lab in labels:
            m |= 1 << self.resolve(lab)
        return m

    def labels_of(self, mask):
        return tuple(self.labels[i] for i in bits(mask))

    def format_set(self, mask):
        if mask == 0:
            return "∅"
        return "{" + ",".join(self.labels_of(mask)) + "}"

    def to_sets(self):
        return [self.labels_of(m) for m in self.members]

    def cached(self, key, compute):
        # families are immutable, so derived structures are computed once
        try:
            return self._cache[key]
        except KeyError:
            value = self._cache[key] = compute(self)
            return value


@dataclass(frozen=True)
class NeighborhoodMap:
    """``x -> F_x`` for every element, as bitmasks over member positions."""

    family: SetFamily
    inside: tuple

    @property
    def _all(self):
        return (1 << len(self.family)) - 1

    def inside_mask(self, x):
        return self.inside[self.family.resolve(x)]

    def outside_mask(self, x):
        return self._all ^ self.inside[self.family.resolve(x)]

    def _pick(self, positions):
        return tuple(self.family.members[j] for j in bits(positions))

    def members_in(self, x):
        return self._pick(self.inside_mask(x))

    def members_out(self, x):
        return self._pick(self.outside_mask(x))

    def count_in(self, x):
        return popcount(self.inside_mask(x))

    def count_out(self, x):
        return len(self.family) - self.count_in(x)


def _neighborhoods(F):
    inside = [0] * F.n
    for j, m in enumerate(F.members):
        for i in bits(m):
            inside[i] |= 1 << j
    return NeighborhoodMap(F, tuple(inside))


def neighborhoods(F):
    """The partition F = F_x ⊔ F_x^c for every element x of the universe."""
    return F.cached("neighborhoods", _neighborhoods)


def is_union_closed(F):
    """Check pairwise unions; on failure the witness is the first bad pair
    ``(A, B)`` of masks in canonical member order."""
    pair = F.cached("union_violation", lambda G: kernels.union_violation(G.members, G.n))
    if pair is None:
        return Verdict(True)
    i, j = pair
    return Verdict(False, (F.members[i], F.members[j]))


def union_closure(F, cap=DEFAULT_MEMBER_CAP):
    """Smallest union-closed family containing ``F``."""
    if is_union_closed(F):
        return F
    have = set(F.members)
    order = list(F.members)
    frontier = list(F.members)
    while frontier:
        fresh = []
        for a in frontier:
            for b in order:
                u = a | b
                if u not in have:
                    have.add(u)
                    fresh.append(u)
                    if len(have) > cap:
                        raise SizeOverflowError(f"union closure exceeds {cap} members")
        order.extend(fresh)
        frontier = fresh
    return SetFamily(have, F.labels)


def is_separating(F):
    """Is ``x -> F_x`` injective?  Witness on failure: a label pair ``(x, y)``."""
    nb = neighborhoods(F)
    seen = {}
    for i, key in enumerate(nb.inside):
        if key in seen:
            return Verdict(False, (F.labels[seen[key]], F.labels[i]))
        seen[key] = i
    return Verdict(True)


# --- file format -----------------------------------------------------------

def _read_sets(doc, where="sets"):
    sets = doc.get(where)
    if not isinstance(sets, list):
        raise FamilyError(f'expected a JSON list under "{where}"')
    out = []
    for k, s in enumerate(sets):
        if not isinstance(s, list) or not all(isinstance(x, str) and x for x in s):
            raise FamilyError(f"member #{k} must be a list of nonempty string labels")
        out.append(frozenset(s))
    return out


def parse_family(text, allow_trivial=False):
    """Parse ``{"sets": [[...], ...]}`` (optionally with ``"labels"``).

    Duplicate members are dropped with a warning.  The trivial family
    ``{∅}`` is refused unless ``allow_trivial`` is set.
    """
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise FamilyError(f"invalid JSON: {exc}") from None
    if not isinstance(doc, dict):
        raise FamilyError("family file must hold a JSON object")
    sets = _read_sets(doc)
    if not sets:
        raise FamilyError("family has no members")
    if len(set(sets)) != len(sets):
        warnings.warn(f"{len(sets) - len(set(sets))} duplicate member(s) dropped", stacklevel=2)
    labels = doc.get("labels")
    if labels is not None and (
        not isinstance(labels, list) or not all(isinstance(x, str) for x in labels)
    ):
        raise FamilyError('"labels" must be a list of strings')
    F = SetFamily.from_sets(sets, labels)
    if F.universe == 0 and not allow_trivial:
        raise FamilyError("the family {∅} is trivial; pass allow_trivial to accept it")
    return F


def load_family(path, allow_trivial=False):
    with open(path, encoding="utf-8") as fh:
        return parse_family(fh.read(), allow_trivial=allow_trivial)


def canonical_sets(F):
    """Members as label lists, sorted by (size, label-sorted tuple)."""
    sets = [list(F.labels_of(m)) for m in F.members]
    sets.sort(key=lambda s: (len(s), [label_key(x) for x in s]))
    return sets


def family_to_json(F):
    return {"sets": canonical_sets(F)}


def serialize_family(F):
    return json.dumps(family_to_json(F))
