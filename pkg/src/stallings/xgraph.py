"""X-labeled directed multigraphs and the core operations on them.

Edges carry positive labels only; the formal inverse of an edge is a view:
a positive edge ``(u, x, v)`` is traversable backwards under the label
``x^-1``.  All graphs are immutable after construction.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Optional, Sequence

from .errors import AlphabetMismatch
from .words import Alphabet, Word, free_reduce, letter_index


class XGraph:
    """A finite directed multigraph with alphabet-labeled edges."""

    __slots__ = ("alphabet", "vertex_count", "edges", "_out", "_in")

    def __init__(self, alphabet: Alphabet, vertex_count: int,
                 edges: Iterable[tuple[int, int, int]]):
        self.alphabet = alphabet
        self.vertex_count = vertex_count
        k = len(alphabet)
        edges = tuple(sorted(set(edges)))
        for (u, li, v) in edges:
            if not (0 <= u < vertex_count and 0 <= v < vertex_count):
                raise ValueError(f"edge ({u}, {li}, {v}) out of range")
            if not 0 <= li < k:
                raise ValueError(f"edge label index {li} out of range")
        self.edges = edges
        self._out = None
        self._in = None

    def _adjacency(self):
        if self._out is None:
            out = [dict() for _ in range(self.vertex_count)]
            inc = [dict() for _ in range(self.vertex_count)]
            for (u, li, v) in self.edges:
                out[u].setdefault(li, []).append(v)
                inc[v].setdefault(li, []).append(u)
            self._out, self._in = out, inc
        return self._out, self._in

    def out_targets(self, v: int, li: int) -> list[int]:
        return self._adjacency()[0][v].get(li, [])

    def in_origins(self, v: int, li: int) -> list[int]:
        return self._adjacency()[1][v].get(li, [])

    def degree(self, v: int) -> int:
        """Number of edge endpoints at ``v``; a loop counts twice."""
        out, inc = self._adjacency()
        return sum(len(t) for t in out[v].values()) + sum(len(o) for o in inc[v].values())

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, XGraph)
            and self.alphabet == other.alphabet
            and self.vertex_count == other.vertex_count
            and self.edges == other.edges
        )

    def __hash__(self) -> int:
        return hash((self.alphabet, self.vertex_count, self.edges))

    def __repr__(self) -> str:
        return f"XGraph({self.vertex_count} vertices, {len(self.edges)} edges)"


@dataclass(frozen=True)
class BasedXGraph:
    """An X-graph with a distinguished base vertex."""

    graph: XGraph
    base: int

    def __post_init__(self):
        if self.graph.vertex_count == 0:
            raise ValueError("a based graph needs at least one vertex")
        if not 0 <= self.base < self.graph.vertex_count:
            raise ValueError("base vertex out of range")

    @property
    def alphabet(self) -> Alphabet:
        return self.graph.alphabet

    @property
    def vertex_count(self) -> int:
        return self.graph.vertex_count


@dataclass(frozen=True)
class Morphism:
    """A label-preserving vertex map between two X-graphs."""

    vertex_map: tuple[int, ...]

    def __call__(self, v: int) -> int:
        return self.vertex_map[v]


def is_folded(g: XGraph) -> bool:
    """Per vertex and letter: at most one out-edge and one in-edge."""
    out, inc = g._adjacency()
    for v in range(g.vertex_count):
        if any(len(t) > 1 for t in out[v].values()):
            return False
        if any(len(o) > 1 for o in inc[v].values()):
            return False
    return True


def is_regular(g: XGraph) -> bool:
    """Per vertex and letter: exactly one out-edge and one in-edge."""
    out, inc = g._adjacency()
    k = len(g.alphabet)
    for v in range(g.vertex_count):
        for li in range(k):
            if len(out[v].get(li, ())) != 1 or len(inc[v].get(li, ())) != 1:
                return False
    return True


def is_connected(g: XGraph) -> bool:
    if g.vertex_count == 0:
        return True
    return len(_component(g, 0)) == g.vertex_count


def _component(g: XGraph, start: int) -> set[int]:
    out, inc = g._adjacency()
    seen = {start}
    stack = [start]
    while stack:
        v = stack.pop()
        for targets in out[v].values():
            for t in targets:
                if t not in seen:
                    seen.add(t)
                    stack.append(t)
        for origins in inc[v].values():
            for o in origins:
                if o not in seen:
                    seen.add(o)
                    stack.append(o)
    return seen


class _UnionFind:
    __slots__ = ("parent",)

    def __init__(self, n: int):
        self.parent = list(range(n))

    def find(self, x: int) -> int:
        p = self.parent
        root = x
        while p[root] != root:
            root = p[root]
        while p[x] != root:
            p[x], x = root, p[x]
        return root

    def union(self, a: int, b: int) -> bool:
        ra, rb = self.find(a), self.find(b)
        if ra == rb:
            return False
        # keep the smaller id as representative, for determinism
        if rb < ra:
            ra, rb = rb, ra
        self.parent[rb] = ra
        return True


def fold(g: XGraph) -> tuple[XGraph, Morphism]:
    """Identify edges with equal origin (or terminus) and label to a fixed point.

    Returns the folded graph and the quotient morphism.  The subgroup of loop
    labels at any vertex is preserved under the quotient.
    """
    uf = _UnionFind(g.vertex_count)
    changed = True
    while changed:
        changed = False
        by_out: dict[tuple[int, int], int] = {}
        by_in: dict[tuple[int, int], int] = {}
        for (u, li, v) in g.edges:
            ru, rv = uf.find(u), uf.find(v)
            prev = by_out.get((ru, li))
            if prev is None:
                by_out[(ru, li)] = rv
            elif uf.find(prev) != rv:
                uf.union(prev, rv)
                changed = True
            prev = by_in.get((rv, li))
            if prev is None:
                by_in[(rv, li)] = ru
            elif uf.find(prev) != ru:
                uf.union(prev, ru)
                changed = True
    roots = sorted({uf.find(v) for v in range(g.vertex_count)})
    renum = {r: i for i, r in enumerate(roots)}
    vmap = tuple(renum[uf.find(v)] for v in range(g.vertex_count))
    edges = {(vmap[u], li, vmap[v]) for (u, li, v) in g.edges}
    return XGraph(g.alphabet, len(roots), edges), Morphism(vmap)


def core(g: BasedXGraph) -> BasedXGraph:
    """The union of all reduced loops at the base of a folded graph.

    Computed as the base's connected component with every degree-1 vertex
    other than the base deleted iteratively.
    """
    comp = _component(g.graph, g.base)
    alive = set(comp)
    edges = [e for e in g.graph.edges if e[0] in alive and e[2] in alive]
    while True:
        deg: dict[int, int] = {v: 0 for v in alive}
        for (u, _, v) in edges:
            deg[u] += 1
            deg[v] += 1
        drop = {v for v in alive if v != g.base and deg[v] <= 1}
        if not drop:
            break
        alive -= drop
        edges = [e for e in edges if e[0] in alive and e[2] in alive]
    order = sorted(alive)
    renum = {v: i for i, v in enumerate(order)}
    new_edges = [(renum[u], li, renum[v]) for (u, li, v) in edges]
    return BasedXGraph(XGraph(g.alphabet, len(order), new_edges), renum[g.base])


def trace(g: XGraph, start: int, w: Word) -> Optional[int]:
    """Follow ``w`` from ``start`` in a folded graph.

    Inverse letters traverse positive edges backwards.  Returns the terminus,
    or None if at some step no edge exists.  In an X-regular graph the result
    always exists.
    """
    v = start
    for lt in w:
        li = letter_index(lt)
        step = g.out_targets(v, li) if lt > 0 else g.in_origins(v, li)
        if not step:
            return None
        v = step[0]
    return v


def _bfs(g: BasedXGraph):
    """Deterministic BFS from the base.

    Edges at a vertex are visited in (letter-index, sign) order with positive
    before inverse.  Returns (order, tree_edges, reps) where ``order`` lists
    vertices in discovery order, ``tree_edges`` is the set of edge triples of
    the spanning tree and ``reps`` maps each vertex to the label of its tree
    path from the base (freely reduced).
    """
    gr = g.graph
    k = len(gr.alphabet)
    order = [g.base]
    seen = {g.base}
    reps: dict[int, Word] = {g.base: Word()}
    tree: set[tuple[int, int, int]] = set()
    i = 0
    while i < len(order):
        v = order[i]
        i += 1
        for li in range(k):
            for t in gr.out_targets(v, li):
                if t not in seen:
                    seen.add(t)
                    order.append(t)
                    tree.add((v, li, t))
                    reps[t] = Word(reps[v].letters + (li + 1,))
            for o in gr.in_origins(v, li):
                if o not in seen:
                    seen.add(o)
                    order.append(o)
                    tree.add((o, li, v))
                    reps[o] = Word(reps[v].letters + (-(li + 1),))
    return order, tree, reps


def spanning_tree(g: BasedXGraph) -> set[tuple[int, int, int]]:
    """Deterministic breadth-first spanning tree from the base."""
    order, tree, _ = _bfs(g)
    if len(order) != g.vertex_count:
        raise ValueError("graph is not connected")
    return tree


def coset_rep_words(g: BasedXGraph) -> list[Word]:
    """Tree-path label from the base to each vertex; the base gets the
    empty word."""
    order, _, reps = _bfs(g)
    if len(order) != g.vertex_count:
        raise ValueError("graph is not connected")
    return [reps[v] for v in range(g.vertex_count)]


def canonicalize(g: BasedXGraph) -> tuple[BasedXGraph, Morphism]:
    """Renumber vertices in BFS discovery order from the base."""
    order, _, _ = _bfs(g)
    if len(order) != g.vertex_count:
        raise ValueError("graph is not connected")
    renum = {v: i for i, v in enumerate(order)}
    edges = [(renum[u], li, renum[v]) for (u, li, v) in g.graph.edges]
    vmap = tuple(renum[v] for v in range(g.vertex_count))
    return BasedXGraph(XGraph(g.alphabet, g.vertex_count, edges), 0), Morphism(vmap)


def free_basis(g: BasedXGraph) -> list[Word]:
    """Labels of the loops closed by the edges outside the spanning tree.

    For a folded connected graph these words are a free basis of the loop
    language at the base; their number is ``|E| - (|V| - 1)``.
    """
    order, tree, reps = _bfs(g)
    if len(order) != g.vertex_count:
        raise ValueError("graph is not connected")
    basis = []
    for (u, li, v) in g.graph.edges:
        if (u, li, v) in tree:
            continue
        w = reps[u] * Word([li + 1]) * reps[v].inverse()
        basis.append(free_reduce(w))
    return basis


def _check_same_alphabet(g1: XGraph, g2: XGraph) -> None:
    if g1.alphabet != g2.alphabet:
        raise AlphabetMismatch("graphs live over different alphabets")


def _propagate(g1: XGraph, v1: int, g2: XGraph, v2: int,
               bijective: bool) -> Optional[tuple[int, ...]]:
    """Propagate v1 -> v2 through edges of folded graphs.

    Returns the total vertex map on g1's component of ``v1``, or None on
    conflict.  With ``bijective`` the map must be injective and every g2
    edge must be hit (graph isomorphism); otherwise a mere morphism check
    is performed.
    """
    k = len(g1.alphabet)
    fmap: dict[int, int] = {v1: v2}
    queue = [v1]
    while queue:
        u = queue.pop()
        for li in range(k):
            for (mine, theirs) in (
                (g1.out_targets(u, li), g2.out_targets(fmap[u], li)),
                (g1.in_origins(u, li), g2.in_origins(fmap[u], li)),
            ):
                if not mine:
                    continue
                if len(mine) > 1 or len(theirs) > 1:
                    raise ValueError("graphs must be folded")
                if not theirs:
                    return None
                t = mine[0]
                if t in fmap:
                    if fmap[t] != theirs[0]:
                        return None
                else:
                    fmap[t] = theirs[0]
                    queue.append(t)
    if len(fmap) != g1.vertex_count:
        return None  # g1 not connected from v1
    if bijective:
        if len(set(fmap.values())) != g1.vertex_count:
            return None
        if g1.vertex_count != g2.vertex_count or len(g1.edges) != len(g2.edges):
            return None
    vmap = tuple(fmap[v] for v in range(g1.vertex_count))
    for (u, li, v) in g1.edges:
        if vmap[v] not in g2.out_targets(vmap[u], li):
            return None
    return vmap


def isomorphic_based(g1: BasedXGraph, g2: BasedXGraph) -> Optional[Morphism]:
    """The unique base-preserving isomorphism of folded connected graphs,
    or None."""
    _check_same_alphabet(g1.graph, g2.graph)
    if g1.vertex_count != g2.vertex_count or len(g1.graph.edges) != len(g2.graph.edges):
        return None
    vmap = _propagate(g1.graph, g1.base, g2.graph, g2.base, bijective=True)
    return Morphism(vmap) if vmap is not None else None


def isomorphic_unbased(g1: XGraph, g2: XGraph) -> Optional[Morphism]:
    """First isomorphism found by trying each g2 vertex as the image of
    g1's vertex 0, in ascending id order."""
    _check_same_alphabet(g1, g2)
    if g1.vertex_count != g2.vertex_count or len(g1.edges) != len(g2.edges):
        return None
    for v2 in range(g2.vertex_count):
        vmap = _propagate(g1, 0, g2, v2, bijective=True)
        if vmap is not None:
            return Morphism(vmap)
    return None


def find_morphism(src: BasedXGraph, dst: XGraph) -> Optional[Morphism]:
    """A label-preserving vertex map from ``src`` into ``dst``, or None.

    Tries each vertex of ``dst`` as the image of the base, in ascending id
    order, and propagates deterministically.
    """
    _check_same_alphabet(src.graph, dst)
    for v2 in range(dst.vertex_count):
        vmap = _propagate(src.graph, src.base, dst, v2, bijective=False)
        if vmap is not None:
            return Morphism(vmap)
    return None


def bouquet(alphabet: Alphabet) -> BasedXGraph:
    """One vertex with a loop per letter."""
    edges = [(0, li, 0) for li in range(len(alphabet))]
    return BasedXGraph(XGraph(alphabet, 1, edges), 0)


def wedge_of_words(alphabet: Alphabet, generators: Sequence[Word]) -> BasedXGraph:
    """One loop per generator word, all attached at a single base vertex."""
    edges = []
    n = 1
    for w in generators:
        w = free_reduce(w)
        if w.is_identity():
            continue
        if w.max_index() >= len(alphabet):
            raise AlphabetMismatch("generator uses letters outside the alphabet")
        prev = 0
        for i, lt in enumerate(w):
            nxt = 0 if i == len(w) - 1 else n
            if nxt != 0:
                n += 1
            li = letter_index(lt)
            if lt > 0:
                edges.append((prev, li, nxt))
            else:
                edges.append((nxt, li, prev))
            prev = nxt
    return BasedXGraph(XGraph(alphabet, n, edges), 0)


def free_subgroup_graph(alphabet: Alphabet, generators: Sequence[Word]) -> BasedXGraph:
    """The folded core graph of the subgroup of F(X) generated by the words.

    This is the canonical based graph whose loop language at the base is the
    subgroup; vertices are numbered in BFS order from the base.
    """
    wedge = wedge_of_words(alphabet, generators)
    folded, m = fold(wedge.graph)
    cored = core(BasedXGraph(folded, m(wedge.base)))
    canonical, _ = canonicalize(cored)
    return canonical
