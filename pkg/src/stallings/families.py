"""Builders for the prime-indexed graph families and their certificates.

Each builder produces an X-regular fulfilling graph together with a word
whose powers sweep every vertex from the base.  Such a graph on p vertices
witnesses that every coset of any subgroup containing a power of the word
coprime to p meets the graph's subgroup; the certificate records the graph,
the word and the verified checks.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd
from typing import Iterator, Optional, Sequence

from .errors import FulfillmentFailed, GluingInvalid
from .words import (
    Alphabet,
    Presentation,
    Word,
    free_reduce,
    merge_alphabets,
    shift_word,
)
from .xgraph import BasedXGraph, XGraph, trace
from .subgroup import SubgroupGraph, fulfillment_violation, subgroup_from_graph
from .products import ProductGraph


@dataclass(frozen=True)
class CircleSpec:
    letter: int
    length: int

    def __post_init__(self):
        if self.length < 1:
            raise ValueError("circle length must be positive")


@dataclass(frozen=True)
class OrbitCertificate:
    """A verified witness: an X-regular fulfilling graph whose vertices are
    exactly the power-of-``word`` translates of the base.

    ``vertex_count`` is the certified p; primality (and the infinite-order
    hypothesis on the underlying group element) is the caller's concern.
    """

    graph: SubgroupGraph
    word: Word
    vertex_count: int
    orbit: tuple[int, ...]

    def presentation(self) -> Presentation:
        return self.graph.presentation


@dataclass(frozen=True)
class GluingSpec:
    """Two factor subgroup graphs with words acting as full coset cycles,
    and the number of pairs of copies to chain together."""

    left: SubgroupGraph
    left_word: Word
    right: SubgroupGraph
    right_word: Word
    pair_count: int

    def __post_init__(self):
        if self.pair_count < 1:
            raise ValueError("pair count must be positive")


def verify_reachability(g: BasedXGraph, w: Word) -> tuple[bool, list[int]]:
    """Check that the first |V| power-of-``w`` translates of the base are
    pairwise distinct and the |V|-th returns to the base.

    Returns the flag and the orbit actually visited.
    """
    w = free_reduce(w)
    n = g.vertex_count
    orbit = [g.base]
    v = g.base
    for _ in range(n):
        v = trace(g.graph, v, w)
        if v is None:
            return False, orbit
        orbit.append(v)
    ok = len(set(orbit[:n])) == n and orbit[n] == g.base
    return ok, orbit[:n]


def _certify(graph: BasedXGraph, presentation: Presentation, w: Word) -> OrbitCertificate:
    violation = fulfillment_violation(graph.graph, presentation)
    if violation is not None:
        raise FulfillmentFailed(*violation)
    ok, orbit = verify_reachability(graph, w)
    if not ok:
        raise GluingInvalid(
            "powers of the word do not sweep the vertices from the base"
        )
    sg = subgroup_from_graph(graph, presentation)
    # renumbering keeps the base at 0; recompute the orbit on canonical ids
    ok, orbit = verify_reachability(sg.graph, w)
    assert ok
    return OrbitCertificate(sg, free_reduce(w), sg.index(), tuple(orbit))


def build_type1(presentation: Presentation, letter: int, p: int) -> OrbitCertificate:
    """A one-letter circle of length ``p`` with a loop for every other
    generator at every vertex."""
    if p < 1:
        raise ValueError("circle length must be positive")
    k = len(presentation.alphabet)
    if not 0 <= letter < k:
        raise ValueError("letter index out of range")
    edges = [(i, letter, (i + 1) % p) for i in range(p)]
    edges += [(i, li, i) for i in range(p) for li in range(k) if li != letter]
    graph = BasedXGraph(XGraph(presentation.alphabet, p, edges), 0)
    return _certify(graph, presentation, Word([letter + 1]))


def build_parallel_circles(
    presentation: Presentation, p: int, word_letter: int = 0
) -> OrbitCertificate:
    """Every generator advances one step around the same circle.

    This is the construction for Artin and pure braid groups, whose relators
    have zero exponent sum in every generator; the generic one-circle builder
    does not fulfill them.
    """
    if p < 1:
        raise ValueError("circle length must be positive")
    k = len(presentation.alphabet)
    edges = [(i, li, (i + 1) % p) for i in range(p) for li in range(k)]
    graph = BasedXGraph(XGraph(presentation.alphabet, p, edges), 0)
    return _certify(graph, presentation, Word([word_letter + 1]))


def build_type2(
    presentation: Presentation,
    a: int,
    k: int,
    b: int,
    l: int,
    pair_count: int,
) -> OrbitCertificate:
    """An alternating chain of (a,k)- and (b,l)-circles sharing single
    vertices, loop-completed to regularity; (k+l-2)*pair_count + 1 vertices."""
    if k < 2 or l < 2:
        raise ValueError("circle lengths must be at least 2")
    if a == b:
        raise ValueError("the two circle letters must differ")
    nletters = len(presentation.alphabet)
    if not (0 <= a < nletters and 0 <= b < nletters):
        raise ValueError("letter index out of range")
    m = (k + l - 2) * pair_count + 1
    edges = []
    fresh = 1

    def add_circle(entry: int, letter: int, length: int) -> int:
        """Attach a circle at ``entry``; return the one-step successor."""
        nonlocal fresh
        ring = [entry] + list(range(fresh, fresh + length - 1))
        fresh += length - 1
        for i in range(length):
            edges.append((ring[i], letter, ring[(i + 1) % length]))
        return ring[1]

    entry = 0
    for _ in range(pair_count):
        glue = add_circle(entry, a, k)
        entry = add_circle(glue, b, l)
    assert fresh == m
    _complete_with_loops(edges, m, nletters)
    graph = BasedXGraph(XGraph(presentation.alphabet, m, edges), 0)
    return _certify(graph, presentation, Word([a + 1, b + 1]))


def _complete_with_loops(edges: list, n: int, nletters: int) -> None:
    """Add a loop at every vertex for every letter with no incident edge."""
    touched = {(u, li) for (u, li, _) in edges} | {(v, li) for (_, li, v) in edges}
    for v in range(n):
        for li in range(nletters):
            if (v, li) not in touched:
                edges.append((v, li, v))


def extend_with_loops(
    cert: OrbitCertificate,
    extra_letters: Sequence[str],
    new_relators: Sequence[Word] = (),
) -> OrbitCertificate:
    """Extend the alphabet, adding a loop per new letter at every vertex.

    ``new_relators`` are words over the extended alphabet (old letters keep
    their indices).  Fulfillment is re-verified against the combined
    presentation, which covers free, direct and semidirect product relator
    shapes; reachability is re-checked.
    """
    old = cert.presentation()
    alphabet = merge_alphabets(old.alphabet, Alphabet(extra_letters))
    presentation = Presentation(alphabet, list(old.relators) + list(new_relators))
    g = cert.graph.graph
    n = g.vertex_count
    edges = list(g.graph.edges)
    for li in range(len(old.alphabet), len(alphabet)):
        edges += [(v, li, v) for v in range(n)]
    graph = BasedXGraph(XGraph(alphabet, n, edges), g.base)
    return _certify(graph, presentation, cert.word)


def _check_coset_cycle(sg: SubgroupGraph, w: Word, side: str) -> None:
    """The powers of ``w`` from the base must visit all vertices and return."""
    ok, _ = verify_reachability(sg.graph, w)
    if not ok:
        raise GluingInvalid(
            f"powers of the {side} word are not a full set of coset "
            f"representatives of the {side} factor"
        )


def _assemble_glued(spec: GluingSpec, extra_relators: Sequence[Word] = ()):
    left, right = spec.left, spec.right
    n1, n2 = left.index(), right.index()
    if n1 < 2 or n2 < 2:
        raise GluingInvalid("factor subgroups must be proper")
    _check_coset_cycle(left, spec.left_word, "left")
    _check_coset_cycle(right, spec.right_word, "right")
    alphabet = merge_alphabets(left.presentation.alphabet, right.presentation.alphabet)
    offset = len(left.presentation.alphabet)
    relators = list(left.presentation.relators)
    relators += [shift_word(r, offset) for r in right.presentation.relators]
    relators += list(extra_relators)
    presentation = Presentation(alphabet, relators)

    c = spec.pair_count
    m = (n1 + n2 - 2) * c + 1
    edges: list[tuple[int, int, int]] = []
    fresh = 1

    def add_copy(sg: SubgroupGraph, w: Word, entry: int, shift: int) -> int:
        """Glue a copy of the factor at ``entry`` (identified with the factor
        base); return the global id of the base's one-step w-translate."""
        nonlocal fresh
        g = sg.graph.graph
        gmap = {sg.base: entry}
        for v in range(g.vertex_count):
            if v != sg.base:
                gmap[v] = fresh
                fresh += 1
        for (u, li, v) in g.edges:
            edges.append((gmap[u], li + shift, gmap[v]))
        exit_vertex = trace(g, sg.base, free_reduce(w))
        return gmap[exit_vertex]

    entry = 0
    for _ in range(c):
        glue = add_copy(left, spec.left_word, entry, 0)
        entry = add_copy(right, spec.right_word, glue, offset)
    assert fresh == m
    _complete_with_loops(edges, m, len(alphabet))
    graph = BasedXGraph(XGraph(alphabet, m, edges), 0)
    w = free_reduce(spec.left_word) * shift_word(free_reduce(spec.right_word), offset)
    return graph, presentation, w


def build_glued(spec: GluingSpec) -> OrbitCertificate:
    """Chain copies of the two factor graphs, glued at single vertices, over
    the free product of the factor presentations.

    The result has (n1+n2-2)*pair_count + 1 vertices and is swept by powers
    of the concatenated words; when the vertex count is prime it witnesses
    the contractibility hypotheses for the free product.
    """
    graph, presentation, w = _assemble_glued(spec)
    return _certify(graph, presentation, w)


def build_amalgam(
    spec: GluingSpec,
    identifications: Sequence[tuple[Word, Word]] = (),
) -> OrbitCertificate:
    """The glued chain with amalgamation relators d * psi(d)^-1 added.

    Each pair (d, psi(d)) must lie in the respective factor subgroup, so
    that both sides trace as loops at every vertex of the chain.
    """
    offset = len(spec.left.presentation.alphabet)
    extra = []
    for (d, psi_d) in identifications:
        if not spec.left.contains(d):
            raise GluingInvalid(
                "identification element is not in the left factor subgroup"
            )
        if not spec.right.contains(psi_d):
            raise GluingInvalid(
                "identification image is not in the right factor subgroup"
            )
        extra.append(free_reduce(d * shift_word(psi_d, offset).inverse()))
    graph, presentation, w = _assemble_glued(spec, extra)
    return _certify(graph, presentation, w)


def verify_coprime_certificate(
    cert: OrbitCertificate, other: SubgroupGraph, m: int
) -> bool:
    """Check the coprimality theorem instance: every coset of ``other``
    meets the certificate subgroup.

    Requires w^m in the other subgroup and gcd(m, p) = 1.  A False return on
    valid inputs indicates an implementation bug, not a mathematical fact.
    """
    if m <= 0:
        raise ValueError("the power m must be positive")
    p = cert.vertex_count
    if gcd(m, p) != 1:
        raise ValueError(f"m = {m} and p = {p} are not coprime")
    if not other.contains(cert.word ** m):
        raise ValueError("the other subgroup does not contain word^m")
    pg = ProductGraph(other, cert.graph)
    return all(
        pg.in_base_component(v, cert.graph.base)
        for v in range(other.index())
    )


def is_prime(n: int) -> bool:
    """Deterministic Miller-Rabin, exact for 64-bit inputs."""
    if n < 2:
        return False
    for q in (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37):
        if n % q == 0:
            return n == q
    d = n - 1
    s = 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for a in (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37):
        x = pow(a, d, n)
        if x in (1, n - 1):
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


def chain_primes(step: int, count: int, minimum: int = 2) -> Iterator[tuple[int, int]]:
    """Pairs (c, m) with m = step*c + 1 prime and m >= minimum, ascending."""
    if step < 1:
        raise ValueError("step must be positive")
    found = 0
    c = 1
    while found < count:
        m = step * c + 1
        if m >= minimum and is_prime(m):
            yield c, m
            found += 1
        c += 1


def admissible_primes(step: int, count: int, minimum: int = 2) -> list[int]:
    """The first ``count`` primes of the form step*c + 1 at or above
    ``minimum``; with step = 1 this is simply consecutive primes."""
    if step == 1:
        out = []
        n = max(2, minimum)
        while len(out) < count:
            if is_prime(n):
                out.append(n)
            n += 1
        return out
    return [m for _, m in chain_primes(step, count, minimum)]
