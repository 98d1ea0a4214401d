"""Brute-force isomorphism decision for circulant graphs.

The search below deliberately avoids the transforms/orbits machinery: it
works on plain adjacency sets, individualises one vertex at a time and
refines colourings jointly on both graphs (1-dimensional Weisfeiler-Leman)
to prune the backtracking tree.  It is the independent check for every
structured verdict.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional, Sequence

from .errors import NotABijection, NotAWitnessVerdict, OrderMismatch
from .verdicts import WITNESS_KINDS, IsoVerdict
from .zmod import CirculantGraph, same_spectrum

DEFAULT_NODE_BUDGET = 10**7

YES = "Yes"
NO = "No"
EXCEEDED = "Exceeded"


@dataclass(frozen=True)
class OracleResult:
    outcome: str
    certificate: Optional[tuple[int, ...]] = None
    nodes: int = 0

    def to_json(self) -> dict:
        return {
            "outcome": self.outcome,
            "certificate": list(self.certificate) if self.certificate is not None else None,
            "nodes": self.nodes,
        }


class _BudgetHit(Exception):
    pass


def _local_signature(adj: Sequence[frozenset[int]], v: int) -> tuple:
    """Sizes of the distance-1 and distance-2 shells plus, for each
    neighbour, the number of triangles through that edge."""
    first = adj[v]
    second = set()
    for u in first:
        second |= adj[u]
    second -= first
    second.discard(v)
    triangles = sorted(len(adj[u] & first) for u in first)
    return (len(first), len(second), tuple(triangles))


def _refine(adj1, adj2, colours1: list[int], colours2: list[int]):
    """Joint colour refinement to the coarsest equitable partition.

    Returns the refined colourings or None when the two graphs disagree on
    the multiset of colours at some round.
    """
    n = len(adj1)
    count = len(set(colours1))
    while True:
        sig1 = [(colours1[v], tuple(sorted(colours1[u] for u in adj1[v]))) for v in range(n)]
        sig2 = [(colours2[v], tuple(sorted(colours2[u] for u in adj2[v]))) for v in range(n)]
        palette = {s: i for i, s in enumerate(sorted(set(sig1) | set(sig2)))}
        new1 = [palette[s] for s in sig1]
        new2 = [palette[s] for s in sig2]
        if sorted(new1) != sorted(new2):
            return None
        new_count = len(set(new1))
        colours1, colours2 = new1, new2
        if new_count == count:
            return colours1, colours2
        count = new_count


def brute_force_isomorphic(
    g1: CirculantGraph, g2: CirculantGraph, node_budget: int = DEFAULT_NODE_BUDGET
) -> OracleResult:
    if g1.n != g2.n:
        raise OrderMismatch(f"orders differ: {g1.n} vs {g2.n}")
    n = g1.n
    adj1 = g1.adjacency_sets()
    adj2 = g2.adjacency_sets()
    if len(adj1[0]) != len(adj2[0]) or not same_spectrum(g1, g2):
        return OracleResult(NO, nodes=0)
    if _local_signature(adj1, 0) != _local_signature(adj2, 0):
        return OracleResult(NO, nodes=0)

    nodes = 0

    def search(colours1: list[int], colours2: list[int]) -> Optional[list[int]]:
        nonlocal nodes
        nodes += 1
        if nodes > node_budget:
            raise _BudgetHit
        refined = _refine(adj1, adj2, colours1, colours2)
        if refined is None:
            return None
        c1, c2 = refined
        cells: dict[int, list[int]] = {}
        for v in range(n):
            cells.setdefault(c1[v], []).append(v)
        open_cells = [vs for vs in cells.values() if len(vs) > 1]
        if not open_cells:
            where = {c: v for v, c in enumerate(c2)}
            perm = [where[c1[v]] for v in range(n)]
            return perm if _edges_match(adj1, adj2, perm) else None
        target = min(open_cells, key=lambda vs: (len(vs), vs[0]))
        u = target[0]
        colour = c1[u]
        fresh = max(max(c1), max(c2)) + 1
        for w in range(n):
            if c2[w] != colour:
                continue
            d1 = list(c1)
            d2 = list(c2)
            d1[u] = fresh
            d2[w] = fresh
            found = search(d1, d2)
            if found is not None:
                return found
        return None

    # circulants are vertex-transitive, so vertex 0 may be pinned to 0
    start1 = [0] * n
    start2 = [0] * n
    start1[0] = start2[0] = 1
    try:
        perm = search(start1, start2)
    except _BudgetHit:
        return OracleResult(EXCEEDED, nodes=nodes - 1)
    if perm is None:
        return OracleResult(NO, nodes=nodes)
    return OracleResult(YES, certificate=tuple(perm), nodes=nodes)


def _edges_match(adj1, adj2, perm: Sequence[int]) -> bool:
    for u, nbrs in enumerate(adj1):
        pu = perm[u]
        target = adj2[pu]
        if len(target) != len(nbrs):
            return False
        for v in nbrs:
            if perm[v] not in target:
                return False
    return True


def verify_certificate(g1: CirculantGraph, g2: CirculantGraph, perm: Sequence[int]) -> bool:
    """True iff perm maps the edge set of g1 exactly onto that of g2."""
    if g1.n != g2.n:
        raise OrderMismatch(f"orders differ: {g1.n} vs {g2.n}")
    n = g1.n
    perm = list(perm)
    if len(perm) != n or sorted(perm) != list(range(n)):
        raise NotABijection(f"not a permutation of 0..{n - 1}")
    if g1.degree != g2.degree:
        return False
    full2 = g2.full_set
    for u in range(n):
        for s in g1.full_set:
            if (perm[(u + s) % n] - perm[u]) % n not in full2:
                return False
    return True


def witness_to_certificate(verdict: IsoVerdict, n: int) -> tuple[int, ...]:
    """Compose the vertex maps of a verdict's path into one permutation."""
    from .transforms import ThetaParams, theta_residue

    if verdict.kind not in WITNESS_KINDS:
        raise NotAWitnessVerdict(f"{verdict.kind} verdict carries no witness")
    if not verdict.path:
        if verdict.oracle_certificate is None:
            raise NotAWitnessVerdict("composite verdict without path or certificate")
        return tuple(verdict.oracle_certificate)
    perm = list(range(n))
    for step in verdict.path:
        if step.kind == "Adams":
            perm = [(step.a * v) % n for v in perm]
        else:
            p = ThetaParams(n, step.r, step.t)
            perm = [theta_residue(v, p) for v in perm]
    return tuple(perm)
