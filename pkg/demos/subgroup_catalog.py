"""A tour of subgroup graphs: the complete subgroup catalog of S3.

The symmetric group S3 = <s1, s2 | s1^2, s2^2, (s1 s2)^3> is small enough
to see everything at once: every finite-index subgroup is a connected
X-regular graph that fulfills the relators, the index is the number of
vertices, and enumerating those graphs enumerates the subgroups.

Run with:  python3 demos/subgroup_catalog.py
"""

from stallings import (
    EnumerationTask,
    Presentation,
    coset_enumerate,
    enumerate_graphs,
    export_dot,
    serialize_graph,
)

s3 = Presentation.parse(["s1", "s2"], ["s1 s1", "s2 s2", "s1 s2 s1 s2 s1 s2"])
print(f"group: {s3}")

order = coset_enumerate(s3).index()
print(f"order of the group (index of the trivial subgroup): {order}\n")

print("subgroup classes by index (based / unbased):")
for n in range(1, order + 1):
    if order % n:
        continue
    based = enumerate_graphs(EnumerationTask(s3, n))
    unbased = enumerate_graphs(EnumerationTask(s3, n, mode="unbased"))
    print(f"  index {n}: {len(based)} based, {len(unbased)} unbased")

print("\nthe three index-3 subgroups are the reflection subgroups:")
for sg in enumerate_graphs(EnumerationTask(s3, 3)):
    for text in ("s1", "s1 s2 s1", "s2"):
        if sg.contains(s3.word(text)):
            print(f"  <{text}>  normal={sg.is_normal()}  "
                  f"basis={[s3.alphabet.format_word(w) for w in sg.free_basis()]}")

rotation = coset_enumerate(s3, [s3.word("s1 s2")])
print(f"\nthe rotation subgroup <s1 s2> has index {rotation.index()} "
      f"and is normal: {rotation.is_normal()}")

print("\nits subgroup graph, in the text format used by the CLI:")
print(serialize_graph(rotation.graph))
print("and as DOT (render with `dot -Tpng`):")
print(export_dot(rotation.graph))
