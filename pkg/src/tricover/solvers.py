"""Certified exact solvers for triangle covering/packing quantities.

Four problems share one outcome type:

* ``TAU``    minimum size of an edge set meeting every triangle (equivalently,
  whose deletion leaves the graph triangle-free);
* ``ALPHA1`` maximum size of an edge set containing at most one edge from each
  triangle;
* ``ALPHA``  maximum size of an independent vertex set;
* ``PHI``    max over vertex subsets S of k|S| - |E(G[S])| for a fixed k > 0
  (the empty set is allowed, so the maximum is never negative).

Every solver returns a :class:`SolveOutcome` with a certified interval
``[value_lower, value_upper]``, a feasible certificate attaining the incumbent
bound, and node/time statistics.  Exhausting a :class:`Budget` downgrades the
status from OPTIMAL to BOUNDED; it is never an error.  All searches are
single-threaded depth-first with fixed tie-breaking (lexicographically
smallest candidate), so repeated runs are bit-identical.

Solver notes
------------
``alpha1_exact`` reduces to maximum independent set on the *conflict graph*
whose nodes are the edges of G, two nodes adjacent iff the edges lie in a
common triangle.  The reduction is lossless: a triangle containing two or
more chosen edges is exactly a conflicting chosen pair, so "at most one edge
per triangle" and "no two chosen edges share a triangle" are the same
constraint system (see :func:`edge_conflict_graph`).

``tau_exact`` is a minimum hitting set search over the 3-edge triangle sets.
Its lower bound is a greedy edge-disjoint triangle packing: pairwise
edge-disjoint unhit triangles must be hit by pairwise distinct edges.

``phi_max`` prunes with the admissible bound

    bound(S_in, U) = phi_k(S_in) + sum_{v in U} max(0, k - |N(v) & S_in|)

where U is the undecided vertex set.  Admissibility: adding any T subset of U
in some order contributes, for each v in T, exactly k minus its edges into
S_in and into earlier members of T; dropping the (nonnegative) second term
and widening T to U can only increase the total.  Two refinements, both
value-preserving, are layered on top: (a) a greedy matching inside U --
adjacent undecided vertices cannot both contribute their full marginal, so
each matched pair {u, v} subtracts min(1, c_u, c_v); (b) weakly dominant
reductions -- a vertex whose marginal is already <= 0 can be excluded, and a
vertex that keeps a nonnegative marginal even if *all* its undecided
neighbours join can be included.  With integer k every quantity here is an
exact small integer in float form, so zero-tolerance equality with the
brute-force oracle holds; with real k comparisons use absolute tolerance
1e-9.
"""

from __future__ import annotations

import time
from dataclasses import dataclass, field
from typing import Iterable, Sequence

import numpy as np

from .graphs import (
    Graph,
    ParameterError,
    PreconditionError,
    edge_at,
    edge_index,
    triangles,
)

__all__ = [
    "TAU",
    "ALPHA1",
    "ALPHA",
    "PHI",
    "OPTIMAL",
    "BOUNDED",
    "VALUE_TOL",
    "Budget",
    "UNLIMITED",
    "SolveOutcome",
    "OracleOverflowError",
    "CertificateError",
    "tau_exact",
    "alpha1_exact",
    "alpha_exact",
    "phi_max",
    "tau_join_formula",
    "oracle_bruteforce",
    "edge_conflict_graph",
    "greedy_triangle_cover",
    "check_certificate",
    "DEFAULT_ORACLE_LIMIT",
]

TAU = "TAU"
ALPHA1 = "ALPHA1"
ALPHA = "ALPHA"
PHI = "PHI"

OPTIMAL = "OPTIMAL"
BOUNDED = "BOUNDED"

VALUE_TOL = 1e-9

DEFAULT_ORACLE_LIMIT = 1 << 22


class OracleOverflowError(RuntimeError):
    """The brute-force enumeration space exceeds the stated limit."""


class CertificateError(ValueError):
    """A SolveOutcome certificate fails its independent feasibility check."""


@dataclass(frozen=True)
class Budget:
    """Search limits; 0 means unlimited."""

    max_nodes: int = 0
    max_seconds: float = 0.0

    def __post_init__(self):
        if self.max_nodes < 0 or self.max_seconds < 0:
            raise ParameterError("budget limits must be nonnegative")


UNLIMITED = Budget()


@dataclass
class SolveOutcome:
    """Certified result of one solve.

    ``value_lower <= value_upper`` always; OPTIMAL implies equality.  The
    certificate is feasible and attains ``value_lower`` for maximization
    problems (ALPHA1, ALPHA, PHI) and ``value_upper`` for minimization (TAU).
    """

    problem: str
    value_lower: int | float
    value_upper: int | float
    status: str
    certificate: tuple[int, ...]
    nodes: int = 0
    seconds: float = 0.0

    @property
    def is_optimal(self) -> bool:
        return self.status == OPTIMAL

    @property
    def value(self) -> int | float:
        if not self.is_optimal:
            raise ValueError(f"{self.problem} solve is {self.status}, not OPTIMAL")
        return self.value_lower

    def to_record(self, with_seconds: bool = False) -> dict:
        return {
            "problem": self.problem,
            "value_lower": self.value_lower,
            "value_upper": self.value_upper,
            "status": self.status,
            "certificate": sorted(self.certificate),
            "nodes": self.nodes,
            "seconds": self.seconds if with_seconds else None,
        }


class _Limits:
    __slots__ = ("max_nodes", "t0", "deadline", "nodes")

    def __init__(self, budget: Budget):
        self.max_nodes = budget.max_nodes
        self.t0 = time.monotonic()
        self.deadline = self.t0 + budget.max_seconds if budget.max_seconds else None
        self.nodes = 0

    def exhausted(self) -> bool:
        if self.max_nodes and self.nodes >= self.max_nodes:
            return True
        return self.deadline is not None and time.monotonic() >= self.deadline

    @property
    def seconds(self) -> float:
        return time.monotonic() - self.t0


def _bits(mask: int):
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


# ---------------------------------------------------------------------------
# maximum independent set engine (serves ALPHA and ALPHA1)
# ---------------------------------------------------------------------------


def _greedy_mis(adj: Sequence[int], cand: int) -> int:
    """Greedy independent set inside ``cand``: repeatedly take a minimum-degree
    vertex and delete its closed neighbourhood.  Returns the chosen mask."""
    chosen = 0
    while cand:
        best_v, best_deg = -1, None
        for v in _bits(cand):
            d = (adj[v] & cand).bit_count()
            if best_deg is None or d < best_deg:
                best_v, best_deg = v, d
                if d == 0:
                    break
        chosen |= 1 << best_v
        cand &= ~(adj[best_v] | (1 << best_v))
    return chosen


def _clique_cover_bound(adj: Sequence[int], cand: int) -> int:
    """Greedy partition of ``cand`` into cliques; the part count bounds the
    independence number from above (an independent set meets each clique at
    most once)."""
    remaining = cand
    parts = 0
    while remaining:
        low = remaining & -remaining
        v = low.bit_length() - 1
        remaining ^= low
        common = adj[v] & remaining
        while common:
            low2 = common & -common
            w = low2.bit_length() - 1
            remaining ^= low2
            common = (common ^ low2) & adj[w]
        parts += 1
    return parts


def _mis_solve(adj: Sequence[int], budget: Budget):
    """Certified max independent set on bitmask adjacency.

    Returns (lower, upper, certificate_mask, nodes, seconds, status).
    """
    n = len(adj)
    full = (1 << n) - 1
    limits = _Limits(budget)

    inc_mask = _greedy_mis(adj, full)
    best = inc_mask.bit_count()

    # stack entries: (cand, chosen, bound inherited from the parent node)
    stack = [(full, 0, n)]
    status = OPTIMAL
    while stack:
        if limits.exhausted():
            status = BOUNDED
            break
        cand, chosen, _ = stack.pop()
        limits.nodes += 1

        # reductions: a vertex of candidate-degree <= 1 is in some optimum
        while True:
            forced = False
            for v in _bits(cand):
                nb = adj[v] & cand
                deg = nb.bit_count()
                if deg <= 1:
                    chosen |= 1 << v
                    cand &= ~(nb | (1 << v))
                    forced = True
                    break
            if not forced:
                break

        size = chosen.bit_count()
        if not cand:
            if size > best:
                best, inc_mask = size, chosen
            continue

        bound = size + _clique_cover_bound(adj, cand)
        if bound <= best:
            continue

        greedy = _greedy_mis(adj, cand)
        if size + greedy.bit_count() > best:
            best, inc_mask = size + greedy.bit_count(), chosen | greedy

        # branch on the candidate of maximum candidate-degree, smallest label
        bv, bd = -1, -1
        for v in _bits(cand):
            d = (adj[v] & cand).bit_count()
            if d > bd:
                bv, bd = v, d
        bit = 1 << bv
        stack.append((cand ^ bit, chosen, bound))
        stack.append((cand & ~(adj[bv] | bit), chosen | bit, bound))

    upper = best
    if status == BOUNDED:
        for _, _, b in stack:
            if b > upper:
                upper = b
    return best, upper, inc_mask, limits.nodes, limits.seconds, status


def alpha_exact(g: Graph, budget: Budget = UNLIMITED) -> SolveOutcome:
    """Certified maximum independent set of ``g`` (vertex certificate)."""
    lo, hi, mask, nodes, secs, status = _mis_solve(g.adj_bits, budget)
    return SolveOutcome(ALPHA, lo, hi, status, tuple(_bits(mask)), nodes, secs)


def edge_conflict_graph(g: Graph) -> Graph:
    """Auxiliary graph on the edge slots of ``g`` (slot i = i-th edge in
    canonical order): two slots adjacent iff the edges lie in a common
    triangle.

    Independent sets here are exactly the triangle-independent edge sets of
    ``g``: a triangle holding >= 2 chosen edges is the same event as a chosen
    conflicting pair, so the per-triangle "at most one of three" constraints
    decompose into the three pairwise constraints with nothing lost.
    """
    slot = {e: i for i, e in enumerate(g.edges())}
    pairs = []
    for a, b, c in triangles(g):
        s1, s2, s3 = slot[(a, b)], slot[(a, c)], slot[(b, c)]
        pairs += [(s1, s2), (s1, s3), (s2, s3)]
    return Graph(g.m, pairs)


def alpha1_exact(g: Graph, budget: Budget = UNLIMITED) -> SolveOutcome:
    """Certified maximum triangle-independent edge set (canonical indices).

    Solved as maximum independent set on :func:`edge_conflict_graph`.
    """
    conflict = edge_conflict_graph(g)
    lo, hi, mask, nodes, secs, status = _mis_solve(conflict.adj_bits, budget)
    canon = g.edge_indices()
    cert = tuple(canon[s] for s in _bits(mask))
    return SolveOutcome(ALPHA1, lo, hi, status, cert, nodes, secs)


# ---------------------------------------------------------------------------
# minimum triangle edge cover (hitting set branch and bound)
# ---------------------------------------------------------------------------


def _triangle_slots(g: Graph):
    """Edge slots, per-triangle edge masks, per-slot triangle masks."""
    slot = {e: i for i, e in enumerate(g.edges())}
    tri_masks = []
    edge_tris = [0] * g.m
    for ti, (a, b, c) in enumerate(triangles(g)):
        s = (1 << slot[(a, b)]) | (1 << slot[(a, c)]) | (1 << slot[(b, c)])
        tri_masks.append(s)
        for sl in _bits(s):
            edge_tris[sl] |= 1 << ti
    return slot, tri_masks, edge_tris


def _greedy_cover_slots(tri_masks: list[int], edge_tris: list[int], m: int) -> list[int]:
    """Greedy hitting set (edge in most unhit triangles, ties by slot) pruned
    to inclusion-minimality in reverse insertion order."""
    unhit = (1 << len(tri_masks)) - 1
    order: list[int] = []
    while unhit:
        best_s, best_c = -1, 0
        for s in range(m):
            c = (edge_tris[s] & unhit).bit_count()
            if c > best_c:
                best_s, best_c = s, c
        order.append(best_s)
        unhit &= ~edge_tris[best_s]
    kept = set(order)
    for s in reversed(order):
        others = kept - {s}
        covered = 0
        for o in others:
            covered |= edge_tris[o]
        if covered.bit_count() == len(tri_masks):
            kept = others
    return sorted(kept)


def greedy_triangle_cover(g: Graph) -> list[int]:
    """Inclusion-minimal triangle edge cover by greedy choice, as canonical
    edge indices.  Not optimal in general; every surviving edge hits a
    triangle no other kept edge hits."""
    if not triangles(g):
        return []
    _, tri_masks, edge_tris = _triangle_slots(g)
    canon = g.edge_indices()
    return sorted(canon[s] for s in _greedy_cover_slots(tri_masks, edge_tris, g.m))


def _packing_bound(tri_masks: list[int], unhit: int, banned: int) -> int:
    """Greedy edge-disjoint packing of unhit triangles (on non-banned edges):
    each packed triangle forces one distinct new cover edge."""
    used = 0
    count = 0
    for ti in _bits(unhit):
        avail = tri_masks[ti] & ~banned
        if avail and not avail & used:
            used |= avail
            count += 1
    return count


def tau_exact(g: Graph, budget: Budget = UNLIMITED) -> SolveOutcome:
    """Certified minimum triangle edge cover (canonical edge indices)."""
    tris = triangles(g)
    if not tris:
        return SolveOutcome(TAU, 0, 0, OPTIMAL, ())
    _, tri_masks, edge_tris = _triangle_slots(g)
    m = g.m
    t_count = len(tris)
    all_unhit = (1 << t_count) - 1
    limits = _Limits(budget)

    inc_slots = _greedy_cover_slots(tri_masks, edge_tris, m)
    best = len(inc_slots)
    inc_mask = 0
    for s in inc_slots:
        inc_mask |= 1 << s

    root_lb = _packing_bound(tri_masks, all_unhit, 0)
    stack = [(all_unhit, 0, 0, root_lb)]
    status = OPTIMAL
    while stack:
        if limits.exhausted():
            status = BOUNDED
            break
        unhit, chosen, banned, _ = stack.pop()
        limits.nodes += 1

        # unit propagation: a triangle with one available edge forces it;
        # a triangle with none is infeasible under the current bans
        infeasible = False
        while True:
            forced = 0
            for ti in _bits(unhit):
                avail = tri_masks[ti] & ~banned
                if not avail:
                    infeasible = True
                    break
                if avail.bit_count() == 1:
                    forced = avail
                    break
            if infeasible or not forced:
                break
            chosen |= forced
            slot = forced.bit_length() - 1
            unhit &= ~edge_tris[slot]
        if infeasible:
            continue

        size = chosen.bit_count()
        if not unhit:
            if size < best:
                best, inc_mask = size, chosen
            continue

        lb = size + _packing_bound(tri_masks, unhit, banned)
        if lb >= best:
            continue

        # branch on the edge hitting the most unhit triangles, smallest slot
        bs, bc = -1, 0
        usable = ~(chosen | banned)
        for s in range(m):
            if (usable >> s) & 1:
                c = (edge_tris[s] & unhit).bit_count()
                if c > bc:
                    bs, bc = s, c
        bit = 1 << bs
        stack.append((unhit, chosen, banned | bit, lb))
        stack.append((unhit & ~edge_tris[bs], chosen | bit, banned, lb))

    lower = best
    if status == BOUNDED:
        for _, _, _, lb in stack:
            if lb < lower:
                lower = lb
    canon = g.edge_indices()
    cert = tuple(canon[s] for s in _bits(inc_mask))
    return SolveOutcome(TAU, lower, best, status, cert, limits.nodes, limits.seconds)


# ---------------------------------------------------------------------------
# phi_k maximization
# ---------------------------------------------------------------------------


def _phi_reduce(adj: Sequence[int], k: float, s: int, u: int, e_s: int):
    """Apply the weakly dominant include/exclude rules to a fixpoint.

    Exclude v in U when |N(v) & S| >= k - tol: its marginal can only be <= 0.
    Include v in U when |N(v) & (S | U)| <= k + tol: even if every undecided
    neighbour joins, adding v last still gains >= 0.  Each rule maps "some
    optimum extends this node" to itself, so values are preserved.
    """
    changed = True
    while changed:
        changed = False
        for v in _bits(u):
            bit = 1 << v
            cnt_s = (adj[v] & s).bit_count()
            if cnt_s >= k - VALUE_TOL:
                u ^= bit
                changed = True
            elif cnt_s + (adj[v] & u & ~bit).bit_count() <= k + VALUE_TOL:
                s |= bit
                u ^= bit
                e_s += cnt_s
                changed = True
    return s, u, e_s


def _phi_bound_terms(adj: Sequence[int], k: float, s: int, u: int):
    """Sum of positive marginals over U minus the greedy-matching correction."""
    total = 0.0
    margins = {}
    for v in _bits(u):
        c = k - (adj[v] & s).bit_count()
        if c > VALUE_TOL:
            margins[v] = c
            total += c
    positive = 0
    for v in margins:
        positive |= 1 << v
    unmatched = positive
    for v in _bits(positive):
        bit = 1 << v
        if not unmatched & bit:
            continue
        nb = adj[v] & unmatched & ~bit
        if nb:
            w = (nb & -nb).bit_length() - 1
            unmatched &= ~(bit | (1 << w))
            total -= min(1.0, margins[v], margins[w])
    return total


def _phi_greedy_complete(adj: Sequence[int], k: float, s: int, u: int, e_s: int):
    """Add undecided vertices (ascending) while the running marginal is
    positive; returns (mask, value) of the completed feasible set."""
    for v in _bits(u):
        cnt = (adj[v] & s).bit_count()
        if k - cnt > VALUE_TOL:
            s |= 1 << v
            e_s += cnt
    return s, k * s.bit_count() - e_s


def phi_max(g: Graph, k: float, budget: Budget = UNLIMITED) -> SolveOutcome:
    """Certified maximum of phi_k(S) = k|S| - |E(G[S])| over all S.

    With k = 1 this equals the independence number.  See the module docstring
    for the admissible pruning bound and its refinements.
    """
    if not k > 0:
        raise ParameterError(f"k must be positive, got {k}")
    k = float(k)
    adj = g.adj_bits
    n = g.n
    full = (1 << n) - 1
    limits = _Limits(budget)

    best_mask, best = _phi_greedy_complete(adj, k, 0, full, 0)
    if best < 0.0:
        best_mask, best = 0, 0.0

    stack = [(0, full, 0, k * n)]
    status = OPTIMAL
    while stack:
        if limits.exhausted():
            status = BOUNDED
            break
        s, u, e_s, _ = stack.pop()
        limits.nodes += 1

        s, u, e_s = _phi_reduce(adj, k, s, u, e_s)
        base = k * s.bit_count() - e_s
        if base > best:
            best, best_mask = base, s
        if not u:
            continue

        bound = base + _phi_bound_terms(adj, k, s, u)
        if bound <= best + VALUE_TOL:
            continue

        gmask, gval = _phi_greedy_complete(adj, k, s, u, e_s)
        if gval > best:
            best, best_mask = gval, gmask

        # branch on the undecided vertex of largest marginal, smallest label
        bv, bc = -1, None
        for v in _bits(u):
            c = k - (adj[v] & s).bit_count()
            if bc is None or c > bc:
                bv, bc = v, c
        bit = 1 << bv
        stack.append((s, u ^ bit, e_s, bound))
        stack.append((s | bit, u ^ bit, e_s + (adj[bv] & s).bit_count(), bound))

    upper = best
    if status == BOUNDED:
        for _, _, _, b in stack:
            if b > upper:
                upper = b
    cert = tuple(_bits(best_mask))
    return SolveOutcome(PHI, best, upper, status, cert, limits.nodes, limits.seconds)


# ---------------------------------------------------------------------------
# closed-form tau for hub joins
# ---------------------------------------------------------------------------


def tau_join_formula(g: Graph, k: int, budget: Budget = UNLIMITED) -> SolveOutcome:
    """tau of (empty graph on k hubs) joined to triangle-free ``g``, via the
    identity tau = nk - max_S phi_k(S).

    Every triangle of the join uses exactly one hub h and one edge uv of g
    (hubs are pairwise non-adjacent and g is triangle-free), so from a
    maximizer S the edge set

        X = {hub-to-w : w outside S}  union  E(G[S])

    of size nk - phi_k(S) meets them all: a triangle (h, u, v) with u outside
    S is cut at (h, u), otherwise uv lies inside S.  That certifies the upper
    endpoint; the lower endpoint is the identity's other direction, which the
    verify module tests exhaustively at small n.  Certificate indices refer to
    the join's labeling (hubs 0..k-1 first, g shifted by k).
    """
    if not isinstance(k, int) or isinstance(k, bool) or k < 1:
        raise ParameterError(f"hub count must be a positive integer, got {k!r}")
    tris = triangles(g)
    if tris:
        raise PreconditionError(f"graph has a triangle {tris[0]}; the join identity needs triangle-free input")
    inner = phi_max(g, k, budget)
    n = g.n
    nk = n * k
    tau_lower = int(round(nk - inner.value_upper))
    tau_upper = int(round(nk - inner.value_lower))

    s_set = set(inner.certificate)
    nj = n + k
    cert = []
    for h in range(k):
        for w in range(n):
            if w not in s_set:
                cert.append(edge_index(nj, h, k + w))
    for u, v in g.edges():
        if u in s_set and v in s_set:
            cert.append(edge_index(nj, k + u, k + v))
    return SolveOutcome(TAU, tau_lower, tau_upper, inner.status, tuple(sorted(cert)),
                        inner.nodes, inner.seconds)


# ---------------------------------------------------------------------------
# brute-force oracle
# ---------------------------------------------------------------------------

_POP16 = np.array([bin(i).count("1") for i in range(1 << 16)], dtype=np.uint8)


def _popcounts(masks: np.ndarray, bits: int) -> np.ndarray:
    out = _POP16[masks & 0xFFFF].astype(np.int64)
    shift = 16
    while shift < bits:
        out += _POP16[(masks >> shift) & 0xFFFF]
        shift += 16
    return out


def _lex_first(cands: Iterable[int]) -> tuple[int, ...]:
    return min(tuple(_bits(int(c))) for c in cands)


def oracle_bruteforce(
    problem: str,
    g: Graph,
    limit: int = DEFAULT_ORACLE_LIMIT,
    k: float | None = None,
) -> SolveOutcome:
    """Exact value by full enumeration of 2^m edge subsets (TAU, ALPHA1) or
    2^n vertex subsets (ALPHA, PHI), vectorized with numpy.

    Refuses with :class:`OracleOverflowError` when the space exceeds
    ``limit``; never approximates.  The certificate is the lexicographically
    first optimum, a fixed tie-break that keeps expected values frozen in
    tests reproducible.
    """
    t0 = time.monotonic()
    if problem in (TAU, ALPHA1):
        bits = g.m
    elif problem in (ALPHA, PHI):
        bits = g.n
    else:
        raise ParameterError(f"unknown problem tag {problem!r}")
    if problem == PHI:
        if k is None or not k > 0:
            raise ParameterError(f"PHI oracle needs k > 0, got {k}")
    space = 1 << bits
    if space > limit:
        raise OracleOverflowError(f"enumeration space 2^{bits} exceeds limit {limit}")

    dtype = np.uint32 if bits <= 32 else np.uint64
    masks = np.arange(space, dtype=dtype)

    if problem in (TAU, ALPHA1):
        _, tri_masks, _ = _triangle_slots(g)
        feasible = np.ones(space, dtype=bool)
        for tm in tri_masks:
            x = masks & dtype(tm)
            if problem == TAU:
                feasible &= x != 0
            else:
                feasible &= (x & (x - dtype(1))) == 0
        sizes = _popcounts(masks, bits)
        if problem == TAU:
            opt = int(sizes[feasible].min())
            winners = masks[feasible & (sizes == opt)]
        else:
            opt = int(sizes[feasible].max())
            winners = masks[feasible & (sizes == opt)]
        slots = _lex_first(winners) if bits else ()
        canon = g.edge_indices()
        cert = tuple(canon[s] for s in slots)
        lo = hi = opt
    elif problem == ALPHA:
        feasible = np.ones(space, dtype=bool)
        for u, v in g.edges():
            em = dtype((1 << u) | (1 << v))
            feasible &= (masks & em) != em
        sizes = _popcounts(masks, bits)
        opt = int(sizes[feasible].max())
        winners = masks[feasible & (sizes == opt)]
        cert = _lex_first(winners) if bits else ()
        lo = hi = opt
    else:
        inside = np.zeros(space, dtype=np.int64)
        for u, v in g.edges():
            em = dtype((1 << u) | (1 << v))
            inside += (masks & em) == em
        values = float(k) * _popcounts(masks, bits) - inside
        opt = float(values.max()) if space else 0.0
        winners = masks[values == opt]
        cert = _lex_first(winners) if bits else ()
        lo = hi = opt

    return SolveOutcome(problem, lo, hi, OPTIMAL, cert, nodes=space,
                        seconds=time.monotonic() - t0)


# ---------------------------------------------------------------------------
# independent certificate checking
# ---------------------------------------------------------------------------


def check_certificate(g: Graph, outcome: SolveOutcome, k: float | None = None) -> None:
    """Re-derive feasibility and attainment of a certificate from scratch.

    Raises :class:`CertificateError` on any violation.  This check never
    consults solver internals: covers are verified by deleting and recounting
    triangles, independence by pairwise adjacency, phi values by recomputing
    k|S| - |E(G[S])|.
    """
    cert = outcome.certificate
    if outcome.problem in (TAU, ALPHA1):
        npairs = g.n * (g.n - 1) // 2
        pairs = []
        for idx in cert:
            if not 0 <= idx < npairs:
                raise CertificateError(f"edge index {idx} out of range")
            u, v = edge_at(g.n, idx)
            if not g.has_edge(u, v):
                raise CertificateError(f"certificate edge ({u},{v}) not in graph")
            pairs.append((u, v))
        if len(set(pairs)) != len(pairs):
            raise CertificateError("duplicate certificate edges")
        if outcome.problem == TAU:
            if triangles(g.remove_edges(pairs)):
                raise CertificateError("deletion does not kill every triangle")
            if len(pairs) != outcome.value_upper:
                raise CertificateError(
                    f"cover size {len(pairs)} != value_upper {outcome.value_upper}")
        else:
            chosen = set(pairs)
            for a, b, c in triangles(g):
                hits = ((a, b) in chosen) + ((a, c) in chosen) + ((b, c) in chosen)
                if hits > 1:
                    raise CertificateError(f"triangle ({a},{b},{c}) holds {hits} chosen edges")
            if len(pairs) != outcome.value_lower:
                raise CertificateError(
                    f"set size {len(pairs)} != value_lower {outcome.value_lower}")
    elif outcome.problem == ALPHA:
        vs = list(cert)
        if len(set(vs)) != len(vs) or any(not 0 <= v < g.n for v in vs):
            raise CertificateError("bad vertex certificate")
        for i, u in enumerate(vs):
            for v in vs[i + 1:]:
                if g.has_edge(u, v):
                    raise CertificateError(f"certificate vertices {u},{v} adjacent")
        if len(vs) != outcome.value_lower:
            raise CertificateError(
                f"set size {len(vs)} != value_lower {outcome.value_lower}")
    elif outcome.problem == PHI:
        if k is None or not k > 0:
            raise CertificateError("PHI check needs the k used by the solve")
        vs = list(cert)
        if len(set(vs)) != len(vs) or any(not 0 <= v < g.n for v in vs):
            raise CertificateError("bad vertex certificate")
        value = float(k) * len(vs) - g.edges_within(vs)
        if abs(value - outcome.value_lower) > VALUE_TOL:
            raise CertificateError(
                f"recomputed phi {value} != value_lower {outcome.value_lower}")
    else:
        raise CertificateError(f"unknown problem tag {outcome.problem!r}")
