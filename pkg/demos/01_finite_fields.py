"""Field towers: construction, arithmetic, embeddings.

Every field is GF(p) plus a tower of extension steps, each step a monic
irreducible modulus over the level below.  Moduli are chosen
canonically (lexicographically least), so the same order always yields
the same field and the same integer encodings.
"""

from matroidfrag import (
    embed,
    extend_field,
    field_of_order,
    is_in_subfield,
    make_prime_field,
    subfield_basis,
)

GF2 = make_prime_field(2)
GF4 = extend_field(GF2, 2)
GF9 = field_of_order(9)
GF16 = extend_field(GF4, 2)  # two-step tower, not the flat GF(2^4)

print("canonical moduli (constant term first):")
for F in (GF4, GF9, GF16):
    print(f"  {F!r}: steps {F.steps}")

# GF(4) = {0, 1, w, w+1} with w*w = w+1
w = GF4.elem(2)
print("\nGF(4): w*w =", (w * w).enc, " w^3 =", (w**3).enc)

# encodings are positional over the base field, so adding in
# characteristic 2 is xor on the packed integer
a, b = GF16.elem(9), GF16.elem(14)
print("GF(16): 9+14 =", (a + b).enc, " 9*14 =", (a * b).enc)
print("inverse of 9:", a.inv().enc, " check:", (a * a.inv()).enc)

print("\nsubfield structure of GF(16) over GF(4):")
one, t = subfield_basis(GF16, GF4)
print("  power basis encodings:", one.enc, t.enc)
gf4_image = sorted(e.enc for e in GF16.elements() if is_in_subfield(e, GF4))
print("  Frobenius-fixed copy of GF(4):", gf4_image)
print("  embed keeps encodings:", [embed(x, GF16).enc for x in GF4.elements()])

# the embedding is a homomorphism; spot check every pair
for x in GF4.elements():
    for y in GF4.elements():
        assert embed(x * y, GF16) == embed(x, GF16) * embed(y, GF16)
        assert embed(x + y, GF16) == embed(x, GF16) + embed(y, GF16)
print("\nembedding GF(4) -> GF(16) is a field homomorphism on all 16 pairs")
