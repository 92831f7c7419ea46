"""Subgroup graphs of finite-index subgroups and their calculus.

A subgroup graph is a connected X-regular graph that fulfills every relator
of the presentation; its loop language at the base maps onto the subgroup,
and its vertices are the right cosets.
"""

from __future__ import annotations

import os
from dataclasses import dataclass
from typing import Optional, Sequence

from .errors import (
    AlphabetMismatch,
    CosetLimitExceeded,
    FulfillmentFailed,
    PresentationMismatch,
)
from .words import Presentation, Word, free_reduce
from .xgraph import (
    BasedXGraph,
    Morphism,
    XGraph,
    canonicalize,
    coset_rep_words,
    free_basis as graph_free_basis,
    is_connected,
    is_regular,
    isomorphic_based,
    isomorphic_unbased,
    trace,
)

DEFAULT_MAX_COSETS = 10_000


def default_max_cosets() -> int:
    value = os.environ.get("STALLINGS_MAX_COSETS")
    return int(value) if value else DEFAULT_MAX_COSETS


def fulfillment_violation(
    g: XGraph, presentation: Presentation
) -> Optional[tuple[int, Word, int]]:
    """The first (vertex, relator, terminus) where a relator fails to close,
    or None if the graph fulfills every relator.

    Requires an X-regular graph so that every trace is total.
    """
    if g.alphabet != presentation.alphabet:
        raise AlphabetMismatch("graph and presentation alphabets differ")
    if not is_regular(g):
        raise ValueError("fulfillment is only defined for X-regular graphs")
    for r in presentation.relators:
        for v in range(g.vertex_count):
            t = trace(g, v, r)
            if t != v:
                return (v, r, t)
    return None


def fulfills(g: XGraph, presentation: Presentation) -> bool:
    """True iff tracing every relator from every vertex returns to it."""
    return fulfillment_violation(g, presentation) is None


@dataclass(frozen=True)
class CosetTable:
    """The right action of the generators on cosets, one permutation per
    generator (forced to be a bijection by X-regularity)."""

    permutations: tuple[tuple[int, ...], ...]


class SubgroupGraph:
    """A finite-index subgroup, represented by its subgroup graph.

    Vertices are numbered canonically (BFS from the base), the base is
    vertex 0 and ``coset_reps[v]`` is the label of the spanning-tree path
    from the base to ``v``.
    """

    __slots__ = ("presentation", "graph", "coset_reps")

    def __init__(self, presentation: Presentation, graph: BasedXGraph,
                 coset_reps: Sequence[Word]):
        self.presentation = presentation
        self.graph = graph
        self.coset_reps = tuple(coset_reps)

    @property
    def base(self) -> int:
        return self.graph.base

    def index(self) -> int:
        """The index of the subgroup: the number of vertices."""
        return self.graph.vertex_count

    def trace(self, start: int, w: Word) -> int:
        t = trace(self.graph.graph, start, free_reduce(w))
        assert t is not None  # X-regular: traces are total
        return t

    def contains(self, w: Word) -> bool:
        """Membership of the image of ``w`` in the subgroup."""
        if free_reduce(w).max_index() >= len(self.presentation.alphabet):
            raise AlphabetMismatch("word uses letters outside the alphabet")
        return self.trace(self.base, w) == self.base

    def contains_coset(self, w: Word, v: int) -> bool:
        """True iff the image of ``w`` lies in the coset carried by vertex ``v``."""
        return self.trace(self.base, w) == v

    def coset_table(self) -> CosetTable:
        g = self.graph.graph
        perms = []
        for li in range(len(self.presentation.alphabet)):
            perms.append(tuple(g.out_targets(v, li)[0] for v in range(g.vertex_count)))
        return CosetTable(tuple(perms))

    def free_basis(self) -> list[Word]:
        """A free basis of the loop language at the base, from the
        deterministic spanning tree."""
        return graph_free_basis(self.graph)

    def generators(self) -> list[Word]:
        """Words whose images generate the subgroup of G."""
        return self.free_basis()

    def conjugate(self, other: "SubgroupGraph") -> Optional[Word]:
        """A word g with H = g K g^-1 if the subgroups are conjugate, else None."""
        self._check_presentation(other)
        if self.index() != other.index():
            return None
        for v in range(self.graph.vertex_count):
            if isomorphic_based(BasedXGraph(self.graph.graph, v), other.graph):
                return self.coset_reps[v]
        return None

    def is_normal(self) -> bool:
        """Normality: the based graph looks the same from every vertex."""
        g = self.graph
        return all(
            isomorphic_based(g, BasedXGraph(g.graph, v)) is not None
            for v in range(g.vertex_count)
        )

    def normalizer(self) -> tuple[list[Word], "SubgroupGraph"]:
        """Coset representatives of N_G(H) over H, and its subgroup graph."""
        g = self.graph
        symmetric = [
            v for v in range(g.vertex_count)
            if isomorphic_based(g, BasedXGraph(g.graph, v)) is not None
        ]
        reps = [self.coset_reps[v] for v in symmetric]
        gens = self.generators() + reps
        normalizer_graph = coset_enumerate(self.presentation, gens,
                                           max_cosets=self.index())
        return reps, normalizer_graph

    def _check_presentation(self, other: "SubgroupGraph") -> None:
        if self.presentation != other.presentation:
            raise PresentationMismatch("subgroup graphs over different presentations")

    def isomorphic_based_to(self, other: "SubgroupGraph") -> bool:
        return isomorphic_based(self.graph, other.graph) is not None

    def isomorphic_unbased_to(self, other: "SubgroupGraph") -> bool:
        return isomorphic_unbased(self.graph.graph, other.graph.graph) is not None

    def __repr__(self) -> str:
        return f"SubgroupGraph(index={self.index()}, over {self.presentation!r})"


def subgroup_from_graph(g: BasedXGraph, presentation: Presentation) -> SubgroupGraph:
    """Wrap a connected X-regular fulfilling graph as a subgroup graph.

    Raises on the specific violated precondition; on success the vertices
    are renumbered canonically.
    """
    if g.alphabet != presentation.alphabet:
        raise AlphabetMismatch("graph and presentation alphabets differ")
    if not is_connected(g.graph):
        raise ValueError("graph is not connected")
    if not is_regular(g.graph):
        raise ValueError("graph is not X-regular")
    violation = fulfillment_violation(g.graph, presentation)
    if violation is not None:
        raise FulfillmentFailed(*violation)
    canonical, _ = canonicalize(g)
    reps = coset_rep_words(canonical)
    return SubgroupGraph(presentation, canonical, reps)


def index(sg: SubgroupGraph) -> int:
    return sg.index()


def contains(sg: SubgroupGraph, w: Word) -> bool:
    return sg.contains(w)


# ---------------------------------------------------------------------------
# Coset enumeration
# ---------------------------------------------------------------------------

class _Enumeration:
    """Relator-tracing coset enumeration over a partial table.

    Columns alternate positive and inverse letters: column 2i acts by
    generator i, column 2i+1 by its inverse.  Coincidences are processed
    with a merge queue over a union-find of cosets.
    """

    def __init__(self, presentation: Presentation):
        self.pres = presentation
        self.ncols = 2 * len(presentation.alphabet)
        self.table: list[list[Optional[int]]] = [[None] * self.ncols]
        self.parent = [0]
        self.alive = 1

    @staticmethod
    def _col(lt: int) -> int:
        i = abs(lt) - 1
        return 2 * i if lt > 0 else 2 * i + 1

    @staticmethod
    def _inv_col(col: int) -> int:
        return col ^ 1

    def rep(self, x: int) -> int:
        p = self.parent
        root = x
        while p[root] != root:
            root = p[root]
        while p[x] != root:
            p[x], x = root, p[x]
        return root

    def _merge(self, a: int, b: int, queue: list[int]) -> None:
        a, b = self.rep(a), self.rep(b)
        if a == b:
            return
        if b < a:
            a, b = b, a
        self.parent[b] = a
        self.alive -= 1
        queue.append(b)

    def _coincidence(self, a: int, b: int) -> None:
        queue: list[int] = []
        self._merge(a, b, queue)
        while queue:
            dead = queue.pop()
            row = self.table[dead]
            for col in range(self.ncols):
                target = row[col]
                if target is None:
                    continue
                row[col] = None
                # drop the back-reference before re-installing the edge
                trow = self.table[target]
                if trow[self._inv_col(col)] == dead:
                    trow[self._inv_col(col)] = None
                mu, nu = self.rep(dead), self.rep(target)
                if self.table[mu][col] is not None:
                    self._merge(nu, self.rep(self.table[mu][col]), queue)
                elif self.table[nu][self._inv_col(col)] is not None:
                    self._merge(mu, self.rep(self.table[nu][self._inv_col(col)]), queue)
                else:
                    self.table[mu][col] = nu
                    self.table[nu][self._inv_col(col)] = mu

    def _scan(self, alpha: int, word: Word) -> None:
        """Scan ``word`` at coset ``alpha``; fill a length-1 gap as a
        deduction, report a length-0 mismatch as a coincidence."""
        cols = [self._col(lt) for lt in word]
        f = alpha
        i = 0
        while i < len(cols):
            nxt = self.table[f][cols[i]]
            if nxt is None:
                break
            f = self.rep(nxt)
            i += 1
        else:
            if f != alpha:
                self._coincidence(f, alpha)
            return
        b = alpha
        j = len(cols) - 1
        while j > i:
            prv = self.table[b][self._inv_col(cols[j])]
            if prv is None:
                return  # gap of length >= 2: leave incomplete
            b = self.rep(prv)
            j -= 1
        # gap of length 1: deduction
        if self.table[f][cols[i]] is None and self.table[b][self._inv_col(cols[i])] is None:
            self.table[f][cols[i]] = b
            self.table[b][self._inv_col(cols[i])] = f
        else:
            # one side got filled by an earlier merge in this pass
            t = self.table[f][cols[i]]
            if t is not None:
                self._coincidence(self.rep(t), b)
            else:
                o = self.table[b][self._inv_col(cols[i])]
                self._coincidence(self.rep(o), f)

    def _live(self) -> list[int]:
        return [c for c in range(len(self.table)) if self.rep(c) == c]

    def _state(self) -> tuple[int, int]:
        filled = sum(
            1 for c in self._live() for x in self.table[c] if x is not None
        )
        return (self.alive, filled)

    def run(self, subgens: Sequence[Word], max_cosets: int) -> None:
        subgens = [free_reduce(w) for w in subgens]
        subgens = [w for w in subgens if not w.is_identity()]
        relators = self.pres.relators
        while True:
            # close under relator and subgroup-generator scans
            prev = None
            while prev != self._state():
                prev = self._state()
                base = self.rep(0)
                for w in subgens:
                    self._scan(self.rep(base), w)
                for alpha in self._live():
                    if self.rep(alpha) != alpha:
                        continue
                    for r in relators:
                        self._scan(alpha, r)
            # find the first empty slot in scan order
            slot = None
            for alpha in self._live():
                for col in range(self.ncols):
                    if self.table[alpha][col] is None:
                        slot = (alpha, col)
                        break
                if slot:
                    break
            if slot is None:
                return
            if self.alive >= max_cosets:
                raise CosetLimitExceeded(max_cosets)
            alpha, col = slot
            beta = len(self.table)
            self.table.append([None] * self.ncols)
            self.parent.append(beta)
            self.alive += 1
            self.table[alpha][col] = beta
            self.table[beta][self._inv_col(col)] = alpha

    def to_graph(self) -> BasedXGraph:
        live = self._live()
        renum = {c: i for i, c in enumerate(live)}
        edges = []
        for c in live:
            for li in range(len(self.pres.alphabet)):
                t = self.table[c][2 * li]
                edges.append((renum[c], li, renum[self.rep(t)]))
        return BasedXGraph(
            XGraph(self.pres.alphabet, len(live), edges), renum[self.rep(0)]
        )


def coset_enumerate(
    presentation: Presentation,
    subgens: Sequence[Word] = (),
    max_cosets: Optional[int] = None,
) -> SubgroupGraph:
    """The subgroup graph of the subgroup generated by ``subgens``.

    Deterministic given the fixed definition order (lowest coset id, lowest
    letter, positive before inverse).  Raises CosetLimitExceeded when the
    table does not close within the bound, which signals an index above the
    bound or an infinite one.
    """
    if max_cosets is None:
        max_cosets = default_max_cosets()
    for w in subgens:
        if free_reduce(w).max_index() >= len(presentation.alphabet):
            raise AlphabetMismatch("subgroup generator outside the alphabet")
    enum = _Enumeration(presentation)
    enum.run(subgens, max_cosets)
    sg = subgroup_from_graph(enum.to_graph(), presentation)
    for w in subgens:
        assert sg.contains(w)
    return sg


def conjugate(sg1: SubgroupGraph, sg2: SubgroupGraph) -> Optional[Word]:
    return sg1.conjugate(sg2)


def is_normal(sg: SubgroupGraph) -> bool:
    return sg.is_normal()


def normalizer(sg: SubgroupGraph) -> tuple[list[Word], SubgroupGraph]:
    return sg.normalizer()
