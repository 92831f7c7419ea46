"""Prime-vertex certificate graphs and the coprimality property.

For many infinite groups one can build, for infinitely many primes p, an
X-regular fulfilling graph on p vertices whose vertex set is swept by the
powers of a single word w.  Such a graph certifies that every coset of any
finite-index subgroup containing w^m (with gcd(m, p) = 1) meets the
graph's subgroup -- the combinatorial engine behind coset-poset
contractibility results.

Run with:  python3 demos/prime_certificates.py
"""

from stallings import (
    Presentation,
    build_parallel_circles,
    build_type1,
    build_type2,
    chain_primes,
    coset_enumerate,
    free_presentation,
    verify_coprime_certificate,
)

fmt = lambda pres, w: pres.alphabet.format_word(w)

print("== one-letter circles (free group) ==")
f2 = free_presentation(["a", "b"])
for p in (2, 3, 5, 7):
    cert = build_type1(f2, 0, p)
    print(f"  p={p}: word {fmt(f2, cert.word)}, orbit {list(cert.orbit)}")

print("\n== parallel circles (braid group B3) ==")
b3 = Presentation.parse(["x", "y"], ["x y x y^-1 x^-1 y^-1"])
for p in (2, 3, 5):
    cert = build_parallel_circles(b3, p)
    print(f"  p={p}: every generator advances the circle; orbit {list(cert.orbit)}")

print("\n== alternating circle chains (modular group Z2 * Z3) ==")
z2z3 = Presentation.parse(["a", "b"], ["a a", "b b b"])
for c, m in chain_primes(3, 4):
    cert = build_type2(z2z3, 0, 2, 1, 3, c)
    print(f"  {c} circle pairs -> {m} vertices (prime), word {fmt(z2z3, cert.word)}")

print("\n== the coprimality property ==")
cert = build_type1(f2, 0, 5)
for m in (2, 3, 4, 6):
    # an index-m subgroup containing a^m, built by coset enumeration
    companion = build_type1(f2, 0, m).graph
    other = coset_enumerate(f2, companion.free_basis())
    ok = verify_coprime_certificate(cert, other, m)
    print(f"  p=5, m={m}: every coset of the index-{m} subgroup "
          f"meets the certificate subgroup: {ok}")
