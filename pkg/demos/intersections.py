"""Intersections of subgroups and of cosets via product graphs.

Two index-3 subgroups of the affine Coxeter group Delta(3,3,3) are
intersected by forming the product graph: the component of the pair of
base vertices is the subgroup graph of the intersection, and every other
pair vertex answers a coset-intersection question.

Run with:  python3 demos/intersections.py
"""

from stallings import Presentation, ProductGraph, coset_enumerate, coset_meet, intersect

delta = Presentation.parse(
    ["a", "b", "c"],
    ["a a", "b b", "c c", "a b a b a b", "b c b c b c", "a c a c a c"],
)
print(f"group: {delta}  (infinite, affine Coxeter of type A~2)\n")

h = coset_enumerate(delta, [delta.word(t) for t in ("a", "c b c", "c a b")])
k = coset_enumerate(delta, [delta.word(t) for t in ("b", "a c a", "a b c")])
print(f"H = <a, cbc, cab>   index {h.index()}")
print(f"K = <b, aca, abc>   index {k.index()}")

meet = intersect(h, k)
print(f"H n K has index {meet.index()} and is normal: {meet.is_normal()}\n")

pg = ProductGraph(h, k)
fmt = delta.alphabet.format_word
print("coset intersections (rows: cosets of H, columns: cosets of K):")
for v in range(h.index()):
    row = []
    for v2 in range(k.index()):
        g = coset_meet(pg, v, v2)
        row.append("empty" if g is None else f"(HnK){fmt(g) or '1'}")
    left = fmt(h.coset_reps[v]) or "1"
    print(f"  H{left:>6}: " + "  ".join(f"{cell:>14}" for cell in row))
