"""Modules as quiver representations: homs, structure, decomposition.

Everything is exact: hom spaces are kernels of integer/rational linear
systems, and decompositions come with verified inverse pairs.
"""

from tiltbench import decompose, hom_space, injective, is_isomorphic, projective, simple
from tiltbench.corpus import sec5_algebra
from tiltbench.reps import radical_submodule, regular_module, socle, top

a = sec5_algebra()

# the hom-dimension count: dim Hom(P(v), X) equals the dimension of X at v
reg = regular_module(a)
print("dim Hom(P(v), A) per vertex:", {v: len(hom_space(projective(a, v), reg)) for v in a.quiver.vertices})
print("dims of A as a representation:", dict(zip(a.quiver.vertices, reg.dim_vector())))

# tops and socles
p3 = projective(a, "3")
print("top of P(3):", top(p3)[0].dim_vector())
print("socle of P(3):", socle(p3)[0].dim_vector())

# which projectives are injective? (the stable ones)
for v in a.quiver.vertices:
    stable = is_isomorphic(projective(a, v), injective(a, v)) is not None
    print(f"P({v}) is isomorphic to I({v}):", stable)

# decomposition with a verified certificate
m = p3.direct_sum(radical_submodule(projective(a, "1"))[0]).direct_sum(p3)
summands, to_sum, from_sum = decompose(m)
print("decomposition of P(3) + rad P(1) + P(3):")
for rep, mult in summands:
    print("   summand of dims", rep.dim_vector(), "with multiplicity", mult)
assert to_sum.then(from_sum).is_identity()
assert from_sum.then(to_sum).is_identity()
print("certificate maps compose to identities exactly")

# simples at different vertices are not isomorphic
print("S(1) iso S(2)?", is_isomorphic(simple(a, "1"), simple(a, "2")) is not None)
