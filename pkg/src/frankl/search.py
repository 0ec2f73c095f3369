"""Exhaustive and sampled enumeration of families over small universes.

A family over ``P([n])`` is encoded as a ``2**n``-bit integer: bit ``s``
is set when the subset with bitmask ``s`` is a member.  For ``n <= 4``
every one of the ``2**(2**n)`` families is visited once (the
union-closure test runs in the compiled kernel); ``n = 5`` is reachable
only through seeded sampling.

``verify_claims`` runs every structural claim about union-closed
families through one pass over all nontrivial union-closed families,
checking the library's constructions against brute-force counts.
"""

import random
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from itertools import permutations

from . import kernels
from .abundance import (
    covert_min_check,
    dim2_witness,
    dim_le1_report,
    intersection_Ix,
    is_covert,
    best_witness,
    optimal_elements,
)
from .core import SetFamily, bits, is_separating, neighborhoods, popcount, serialize_family
from .errors import InternalCheckError, PreconditionError
from .poset import cover_dag, dimension
from .topology import TopSpace

MAX_EXHAUSTIVE_N = 4
MAX_N = 5


def labels_for(n):
    return tuple(str(i + 1) for i in range(n))


def family_from_mask(fam, n):
    """SetFamily whose members are the subsets of [n] flagged in ``fam``."""
    return SetFamily.from_masks(bits(fam), labels_for(n))


def family_to_mask(F):
    """Inverse of ``family_from_mask`` for families labelled 1..n."""
    out = 0
    for m in F.members:
        s = 0
        for i in bits(m):
            s |= 1 << (int(F.labels[i]) - 1)
        out |= 1 << s
    return out


@dataclass(frozen=True)
class EnumerationQuery:
    """Which families to visit.

    Filters are tri-state: ``True`` keeps families with the property,
    ``False`` keeps those without it, ``None`` ignores it.
    """

    n: int
    union_closed: object = True
    separating: object = None
    nontrivial: object = True
    min_dim: object = None
    max_dim: object = None
    sample_count: object = None
    seed: int = 0

    def __post_init__(self):
        if not 0 <= self.n <= MAX_N:
            raise ValueError(f"universe size {self.n} unsupported (0..{MAX_N})")
        if self.n > MAX_EXHAUSTIVE_N and self.sample_count is None:
            raise ValueError(f"n = {self.n} needs sample_count (exhaustive only up to {MAX_EXHAUSTIVE_N})")

    @property
    def exhaustive(self):
        return self.sample_count is None

    @property
    def space(self):
        return 1 << (1 << self.n)


@dataclass
class SearchFinding:
    claim: str
    status: str = "pass"
    counterexample: object = None
    counts: dict = field(default_factory=dict)
    detail: str = ""

    @property
    def passed(self):
        return self.status == "pass"

    def to_json(self):
        return {
            "claim": self.claim,
            "status": self.status,
            "counterexample": None
            if self.counterexample is None
            else serialize_family(self.counterexample),
            "counts": dict(self.counts),
            "detail": self.detail,
        }


def _sample_masks(q):
    rng = random.Random(q.seed)
    nsets = 1 << q.n
    for _ in range(q.sample_count):
        if q.union_closed is True:
            seeds = 0
            for _ in range(rng.randint(1, 6)):
                seeds |= 1 << rng.randrange(nsets)
            yield kernels.family_closure(seeds)
        else:
            yield rng.getrandbits(nsets)


def _raw_masks(q, lo, hi):
    """Candidate family masks, before the SetFamily-level filters."""
    if not q.exhaustive:
        for fam in _sample_masks(q):
            yield fam
        return
    if q.union_closed is True:
        yield from kernels.sweep_union_closed(q.n, lo, hi)
    else:
        yield from range(lo, hi)


def _passes(q, fam):
    if q.union_closed is not None and kernels.family_is_union_closed(fam) != q.union_closed:
        return None
    F = family_from_mask(fam, q.n)
    if q.nontrivial is not None and (not F.is_trivial) != q.nontrivial:
        return None
    if q.separating is not None and (F.is_trivial or bool(is_separating(F)) != q.separating):
        return None
    if q.min_dim is not None or q.max_dim is not None:
        if not F.members:
            return None
        d = dimension(F)
        if q.min_dim is not None and d < q.min_dim:
            return None
        if q.max_dim is not None and d > q.max_dim:
            return None
    return F


def _scan(q, predicate, claim, lo, hi):
    out = SearchFinding(claim, counts={"enumerated": 0, "matched": 0, "violations": 0})
    visited = (hi - lo) if q.exhaustive else q.sample_count
    out.counts["enumerated"] = visited
    first = None
    for fam in _raw_masks(q, lo, hi):
        F = _passes(q, fam)
        if F is None:
            continue
        out.counts["matched"] += 1
        if predicate is not None and not predicate(F):
            out.counts["violations"] += 1
            if first is None:
                first = F
    if first is not None:
        out.status = "fail"
        out.counterexample = first
    return out


def _merge(claim, parts):
    out = SearchFinding(claim, counts={})
    for p in parts:
        for k, v in p.counts.items():
            out.counts[k] = out.counts.get(k, 0) + v
        if p.counterexample is not None and out.counterexample is None:
            out.status = "fail"
            out.counterexample = p.counterexample
    return out


def _ranges(total, chunks):
    step = -(-total // chunks)
    return [(lo, min(lo + step, total)) for lo in range(0, total, step)]


def enumerate_families(q, predicate=None, claim="enumerate", workers=1, chunks=1):
    """Apply ``predicate`` to every family passing ``q``'s filters.

    The exhaustive space is split into ``chunks`` contiguous mask ranges
    (mask prefixes); with ``workers > 1`` they run in separate processes
    and ``predicate`` must be picklable.  The reported counterexample is
    the one with the smallest family mask, whatever the partitioning.
    """
    if q.exhaustive:
        spans = _ranges(q.space, max(1, chunks))
    else:
        spans = [(0, 0)]
    if workers > 1 and len(spans) > 1:
        with ProcessPoolExecutor(max_workers=workers) as ex:
            parts = list(ex.map(_scan, *zip(*[(q, predicate, claim, lo, hi) for lo, hi in spans])))
    else:
        parts = [_scan(q, predicate, claim, lo, hi) for lo, hi in spans]
    result = _merge(claim, parts)
    if result.counterexample is not None and predicate(result.counterexample):
        raise InternalCheckError(f"counterexample for {claim} does not re-validate")
    return result


def iter_families(q):
    for lo, hi in ([(0, q.space)] if q.exhaustive else [(0, 0)]):
        for fam in _raw_masks(q, lo, hi):
            F = _passes(q, fam)
            if F is not None:
                yield F


# --- relabelling ------------------------------------------------------------

def canonical_form(F):
    """``(k, mask)``: the least family mask over all relabellings of F's k elements."""
    k = F.n
    best = None
    for perm in permutations(range(k)):
        fam = 0
        for m in F.members:
            s = 0
            for i in bits(m):
                s |= 1 << perm[i]
            fam |= 1 << s
        if best is None or fam < best:
            best = fam
    return (k, best)


def isomorphic(F, G):
    return canonical_form(F) == canonical_form(G)


# --- second, structurally different generator -----------------------------

def closure_families(n, count=None, seed=0):
    """Union-closed families over [n] reached as closures of seed collections.

    With ``count=None`` every seed collection is tried (feasible for
    n <= 3); otherwise ``count`` random seed collections are drawn.
    """
    nsets = 1 << n
    found = set()
    if count is None:
        seeds = range(1, 1 << nsets)
    else:
        rng = random.Random(seed)
        seeds = (rng.getrandbits(nsets) or 1 for _ in range(count))
    for s in seeds:
        found.add(kernels.family_closure(s))
    return found


def union_closed_masks(n):
    return kernels.sweep_union_closed(n, 0, 1 << (1 << n))


# --- topologies -----------------------------------------------------------

def topology_masks(n):
    """Family masks of every topology on the point set [n], n >= 1."""
    nsets = 1 << n
    full = nsets - 1
    out = []
    for fam in union_closed_masks(n):
        if not (fam & 1 and (fam >> full) & 1):
            continue
        sets = bits(fam)
        if all((fam >> (a & b)) & 1 for i, a in enumerate(sets) for b in sets[i + 1:]):
            out.append(fam)
    return out


def enumerate_topologies(max_points):
    for n in range(1, max_points + 1):
        for fam in topology_masks(n):
            yield TopSpace(family_from_mask(fam, n))


# --- the claim sweep ------------------------------------------------------

CLAIMS = (
    "dim-le2-optimal-abundant",
    "dim2-witness",
    "dim-le1-all-abundant",
    "covert-min-equivalence",
    "cover-at-most-one",
    "Ix-singleton",
    "abundant-exists",
    "optimal-exists",
    "singleton-abundant",
    "witness-valid",
    "optimal-not-abundant-minimality",
)


def _contains_masks(n):
    out = []
    for x in range(n):
        m = 0
        for s in range(1 << n):
            if (s >> x) & 1:
                m |= 1 << s
        out.append(m)
    return out


def _check_family(fam, n, contains):
    """Per-claim ``(applicable, holds)`` plus optimal-not-abundant statistics."""
    F = family_from_mask(fam, n)
    size = len(F)
    counts_in = {}
    for x in range(n):
        c = popcount(fam & contains[x])
        if c:
            counts_in[F.resolve(str(x + 1))] = c
    abundant = {i: size - c <= c for i, c in counts_in.items()}
    nb = neighborhoods(F)
    optimal = [e.index for e in optimal_elements(F)]
    d = dimension(F)
    separating = bool(is_separating(F))
    dag = cover_dag(F)
    res = {}

    res["dim-le2-optimal-abundant"] = (d <= 2, all(abundant[i] for i in optimal))

    if separating and d == 2:
        ok = True
        for i in optimal:
            w = dim2_witness(F, i)
            ok &= all(
                (F.index(a), F.index(b)) in dag._edge_set and (b >> i) & 1 for a, b in w.pairs
            )
        res["dim2-witness"] = (True, ok)
    else:
        res["dim2-witness"] = (False, True)

    if d <= 1:
        reports = dim_le1_report(F)
        res["dim-le1-all-abundant"] = (
            True,
            all(r.abundant for r in reports) and all(size - c <= 1 for c in counts_in.values()),
        )
    else:
        res["dim-le1-all-abundant"] = (False, True)

    ok = True
    for i in range(F.n):
        bit = 1 << i
        full = all(a | bit in F for a in nb.members_out(i))
        ok &= covert_min_check(F, i) == full
        ok &= bool(is_covert(F, i)) == (full and bit not in F)
    res["covert-min-equivalence"] = (True, ok)

    ok = True
    for j, b in enumerate(F.members):
        below = dag.lower_covers(j)
        for i in bits(b):
            if sum(1 for k in below if not (F.members[k] >> i) & 1) > 1:
                ok = False
    res["cover-at-most-one"] = (True, ok)

    res["Ix-singleton"] = (
        separating,
        all(intersection_Ix(F, i) == 1 << i for i in optimal) if separating else True,
    )
    res["abundant-exists"] = (True, any(abundant.values()))
    res["optimal-exists"] = (True, bool(optimal))
    res["singleton-abundant"] = (
        True,
        all(abundant[i] for i in range(F.n) if (1 << i) in F),
    )
    ok = True
    for i, ab in abundant.items():
        if ab:
            try:
                best_witness(F, i)
            except InternalCheckError:
                ok = False
    res["witness-valid"] = (True, ok)

    bad = None
    if separating:
        for i in optimal:
            if not abundant[i]:
                stats = (size, F.n, counts_in[i], d)
                bad = stats if bad is None else tuple(min(a, b) for a, b in zip(bad, stats))
    return res, bad


def _claims_chunk(n, fams):
    contains = _contains_masks(n)
    tally = {c: [0, 0, None] for c in CLAIMS[:-1]}  # applicable, violations, first mask
    minima = None
    seven = []
    examples = 0
    for fam in fams:
        try:
            res, bad = _check_family(fam, n, contains)
        except PreconditionError as exc:
            raise InternalCheckError(f"precondition unexpectedly failed on family {fam}: {exc}")
        for c, (applicable, holds) in res.items():
            if applicable:
                tally[c][0] += 1
                if not holds:
                    tally[c][1] += 1
                    if tally[c][2] is None:
                        tally[c][2] = fam
        if bad is not None:
            examples += 1
            minima = bad if minima is None else tuple(min(a, b) for a, b in zip(minima, bad))
            if bad[0] == 7:
                seven.append(fam)
    return tally, minima, seven, examples


def verify_claims(n, workers=1):
    """One finding per claim over every nontrivial union-closed family on [n]."""
    from .fixtures import optimal_not_abundant_example

    if not 1 <= n <= MAX_EXHAUSTIVE_N:
        raise ValueError(f"claims are checked exhaustively for 1 <= n <= {MAX_EXHAUSTIVE_N}")
    fams = [f for f in union_closed_masks(n) if f not in (0, 1)]
    if workers > 1:
        parts = [fams[k::workers] for k in range(workers)]
        with ProcessPoolExecutor(max_workers=workers) as ex:
            results = list(ex.map(_claims_chunk, [n] * workers, parts))
    else:
        results = [_claims_chunk(n, fams)]

    tally = {c: [0, 0, None] for c in CLAIMS[:-1]}
    minima, seven, examples = None, [], 0
    for t, m, s, e in results:
        for c, (a, v, first) in t.items():
            tally[c][0] += a
            tally[c][1] += v
            if first is not None and (tally[c][2] is None or first < tally[c][2]):
                tally[c][2] = first
        if m is not None:
            minima = m if minima is None else tuple(min(a, b) for a, b in zip(minima, m))
        seven.extend(s)
        examples += e

    findings = []
    for c in CLAIMS[:-1]:
        applicable, violations, first = tally[c]
        f = SearchFinding(
            c,
            "pass" if violations == 0 else "fail",
            None if first is None else family_from_mask(first, n),
            {"families": len(fams), "applicable": applicable, "violations": violations},
        )
        findings.append(f)

    target = canonical_form(optimal_not_abundant_example())
    attained = any(canonical_form(family_from_mask(f, n)) == target for f in seven)
    counts = {"families": len(fams), "examples": examples}
    if minima is not None:
        counts.update(
            {"min_members": minima[0], "min_universe": minima[1], "min_count_in": minima[2], "min_dimension": minima[3]}
        )
    if n < 3:
        ok = examples == 0
        detail = "no separating family with an optimal, non-abundant element exists"
    else:
        ok = minima == (7, 3, 3, 3) and attained
        detail = (
            "minimum |F| = 7, |U| = 3, |F_x| = 3, dim = 3; attained by the "
            "optimal-not-abundant example up to relabelling"
            if ok
            else f"minima {minima}, attained={attained}"
        )
    findings.append(
        SearchFinding("optimal-not-abundant-minimality", "pass" if ok else "fail", None, counts, detail)
    )
    return findings
