"""A matroid from a matrix, and what its minors and dual look like.

The matrix is read as the standard representation [I | A]: row labels
are basis elements (unit columns of the identity), column labels carry
the entries.  The example has rows (a, b) and columns (c, d) with

    A = [1 1]
        [1 0]

so as vectors a=(1,0), b=(0,1), c=(1,1), d=(1,0): d is parallel to a.
"""

from matroidfrag import LabeledMatrix, ReprMatroid, is_relaxation, make_prime_field, extend_field

GF2 = make_prime_field(2)
M = ReprMatroid(LabeledMatrix(GF2, ["a", "b"], ["c", "d"], [[1, 1], [1, 0]]))

print("ground set:", sorted(M.ground), " rank:", M.rank())
print("bases:", sorted(sorted(B) for B in M.bases()))
print("rank of {a, d} (parallel pair):", M.rank({"a", "d"}))
print("closure of {a}:", sorted(M.closure({"a"})))

print("\ncontract c -> everything becomes parallel:")
Mc = M.minor(contract={"c"})
print("  bases:", sorted(sorted(B) for B in Mc.bases()))

print("delete d -> uniform U_{2,3}:")
Md = M.minor(delete={"d"})
print("  bases:", sorted(sorted(B) for B in Md.bases()))

# re-display with another basis; the matroid does not change
R = M.rebase({"c", "d"})
print("\nrebased rows:", R.rep.rows, " same matroid:", R.equals(M))

D = M.dual()
print("dual bases are complements:", sorted(sorted(B) for B in D.bases()))
print("dual of dual is the original representation:", D.dual().rep == M.rep)

# {a, d} is a circuit and a hyperplane, so it can be relaxed; the
# relaxed matroid is U_{2,4}, which needs a bigger field
print("\n{a, d} circuit-hyperplane:", M.is_circuit_hyperplane({"a", "d"}))
GF4 = extend_field(GF2, 2)
U24 = ReprMatroid(LabeledMatrix(GF4, ["a", "b"], ["c", "d"], [[1, 1], [1, 2]]))
print("U_{2,4} over GF(4) is its relaxation:", is_relaxation(M, U24, {"a", "d"}))
