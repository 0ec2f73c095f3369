"""Inclusion order on a family: covers, heights, chains, extremal members."""

from dataclasses import dataclass

from . import kernels
from .errors import DomainError


@dataclass(frozen=True)
class CoverDag:
    """Hasse diagram of ``(F, ⊆)``.

    Nodes are member positions of ``family``; ``edges`` holds ``(i, j)``
    whenever ``members[j]`` covers ``members[i]``.
    """

    family: object
    edges: tuple
    height: tuple
    coheight: tuple

    def upper_covers(self, i):
        return [j for a, j in self.edges if a == i]

    def lower_covers(self, j):
        return [i for i, b in self.edges if b == j]

    def covers(self, a, b):
        """Does member ``b`` cover member ``a``?"""
        F = self.family
        return (F.index(a), F.index(b)) in self._edge_set

    @property
    def _edge_set(self):
        return self.family.cached("cover_edge_set", lambda _: frozenset(self.edges))

    def to_dot(self, name="F"):
        F = self.family
        lines = [f"digraph {name} {{", "  rankdir=BT;"]
        for k, m in enumerate(F.members):
            lines.append(f'  n{k} [label="{F.format_set(m)}"];')
        for i, j in self.edges:
            lines.append(f"  n{i} -> n{j};")
        lines.append("}")
        return "\n".join(lines) + "\n"


def _build(F):
    ms = F.members
    return CoverDag(
        family=F,
        edges=tuple(kernels.cover_pairs(ms, F.n)),
        height=tuple(kernels.heights(ms, F.n)),
        coheight=tuple(kernels.coheights(ms, F.n)),
    )


def cover_dag(F):
    return F.cached("cover_dag", _build)


def dimension(F):
    """Length of the longest chain (number of members in it, minus one)."""
    if not F.members:
        raise DomainError("dimension of an empty family is undefined")
    return max(cover_dag(F).height)


def height(F, A):
    return cover_dag(F).height[F.index(A)]


def minimal_members(sets):
    """Inclusion-minimal masks of any collection of masks, in input order."""
    sets = list(dict.fromkeys(sets))
    return tuple(a for a in sets if not any(b != a and b & a == b for b in sets))


def maximal_members(sets):
    sets = list(dict.fromkeys(sets))
    return tuple(a for a in sets if not any(b != a and b & a == a for b in sets))


def up_set(F, A):
    F.index(A)
    return tuple(B for B in F.members if B & A == A)


def down_set(F, A):
    F.index(A)
    return tuple(B for B in F.members if B & A == B)


def is_cover(F, A, B):
    """``A ⊂_c B`` inside ``F``; both must be members."""
    return cover_dag(F).covers(A, B)
