"""Building finite spaces and applying interior and closure.

A finite topology lives on points 0..n-1; every subset is an int whose
bit i says whether point i is in.  Three ways to get a space: list the
opens, generate from a subbasis, or give a preorder.
"""

from fintopo import (
    Preorder,
    build_topology,
    closure,
    complement,
    generate_from_subbasis,
    interior,
    specialization_preorder,
    topology_from_preorder,
)

# the running example: points a, b, c, d with opens {}, {a}, {b}, {a,b}, X
e1a = build_topology(4, [0b0000, 0b0001, 0b0010, 0b0011, 0b1111])
print("opens:", [bin(u) for u in e1a.opens])

# interior = largest open inside, closure = smallest closed around
A = 0b0110  # {b, c}
print("A          =", bin(A))
print("int A      =", bin(interior(e1a, A)))
print("cl A       =", bin(closure(e1a, A)))

# the two operators are dual through complementation
for a in e1a.subsets():
    ca = complement(a, e1a.n)
    assert interior(e1a, a) == complement(closure(e1a, ca), e1a.n)
print("interior/closure duality checked on all", 1 << e1a.n, "subsets")

# a subbasis is closed up under intersections then unions
t = generate_from_subbasis(3, [0b011, 0b110])
print("generated opens:", [bin(u) for u in t.opens])

# finite spaces are exactly preorders: x <= y iff x in cl {y}
pre = specialization_preorder(e1a)
print("preorder rows:", [bin(r) for r in pre.rows])
assert topology_from_preorder(pre) == e1a
print("preorder round trip ok")

# the rows double as minimal neighborhoods
same = topology_from_preorder(Preorder((0b001, 0b111, 0b111)))
print("chain-like space opens:", [bin(u) for u in same.opens])
