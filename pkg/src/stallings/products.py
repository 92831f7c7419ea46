"""Product graphs: intersections, coset intersections, malnormality.

The product of two subgroup graphs has vertex set V1 x V2 and a same-label
edge wherever both factors have one.  Pair vertices are encoded row-major:
``left_id * |V2| + right_id``.
"""

from __future__ import annotations

from typing import Optional

from .words import Word, free_reduce
from .xgraph import BasedXGraph, XGraph, _UnionFind, _bfs
from .subgroup import SubgroupGraph, subgroup_from_graph


class ProductGraph:
    """The full product of two subgroup graphs, with component labels."""

    __slots__ = ("left", "right", "graph", "component", "base_component")

    def __init__(self, left: SubgroupGraph, right: SubgroupGraph):
        left._check_presentation(right)
        self.left = left
        self.right = right
        g1, g2 = left.graph.graph, right.graph.graph
        n2 = g2.vertex_count
        n = g1.vertex_count * n2
        uf = _UnionFind(n)
        edges = []
        for (u1, li, v1) in g1.edges:
            for u2 in range(n2):
                targets = g2.out_targets(u2, li)
                if targets:
                    a = u1 * n2 + u2
                    b = v1 * n2 + targets[0]
                    edges.append((a, li, b))
                    uf.union(a, b)
        self.graph = XGraph(g1.alphabet, n, edges)
        self.component = tuple(uf.find(v) for v in range(n))
        self.base_component = self.component[self.pair_id(left.base, right.base)]

    def pair_id(self, v_left: int, v_right: int) -> int:
        return v_left * self.right.graph.vertex_count + v_right

    def in_base_component(self, v_left: int, v_right: int) -> bool:
        return self.component[self.pair_id(v_left, v_right)] == self.base_component

    def component_sizes(self) -> dict[int, int]:
        sizes: dict[int, int] = {}
        for c in self.component:
            sizes[c] = sizes.get(c, 0) + 1
        return sizes

    def base_component_graph(self) -> BasedXGraph:
        """The component of base x base as a standalone based graph."""
        members = [v for v in range(self.graph.vertex_count)
                   if self.component[v] == self.base_component]
        renum = {v: i for i, v in enumerate(members)}
        edges = [(renum[u], li, renum[v]) for (u, li, v) in self.graph.edges
                 if self.component[u] == self.base_component]
        base = renum[self.pair_id(self.left.base, self.right.base)]
        return BasedXGraph(XGraph(self.graph.alphabet, len(members), edges), base)


def product(sg1: SubgroupGraph, sg2: SubgroupGraph) -> ProductGraph:
    return ProductGraph(sg1, sg2)


def intersect(sg1: SubgroupGraph, sg2: SubgroupGraph) -> SubgroupGraph:
    """The subgroup graph of the intersection: the component of base x base."""
    pg = ProductGraph(sg1, sg2)
    return subgroup_from_graph(pg.base_component_graph(), sg1.presentation)


def coset_meet(pg: ProductGraph, v_left: int, v_right: int) -> Optional[Word]:
    """A word g with (H cap K) g = H g_v cap K g_v' when the cosets meet.

    Returns None when the pair vertex lies outside the base component,
    i.e. the coset intersection is empty.
    """
    if not pg.in_base_component(v_left, v_right):
        return None
    base_pair = pg.pair_id(pg.left.base, pg.right.base)
    _, _, reps = _bfs(BasedXGraph(pg.graph, base_pair))
    return free_reduce(reps[pg.pair_id(v_left, v_right)])


def is_malnormal(sg: SubgroupGraph, group_order: int) -> bool:
    """Malnormality of a subgroup of a finite group of the given order.

    True iff every component of the self-product away from the base
    component has exactly ``group_order`` vertices, so its language maps
    onto the trivial subgroup.
    """
    if group_order % sg.index() != 0:
        raise ValueError(
            f"group order {group_order} is not a multiple of the index {sg.index()}"
        )
    pg = ProductGraph(sg, sg)
    for comp, size in pg.component_sizes().items():
        if comp != pg.base_component and size != group_order:
            return False
    return True
