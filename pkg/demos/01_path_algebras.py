"""Build finite-dimensional path algebras and inspect their structure.

Two algebras are built here: a three-vertex cyclic quiver with monomial
relations, and a four-vertex quiver whose projectives have the Loewy
structures 1/2/1, 2/{1,3}, 3/{2,4}/3, 4/3/4.
"""

from tiltbench import build_path_algebra, monomial_relation, projective, radical_layers
from tiltbench.corpus import fig1_quiver, fig1_relations, sec5_algebra
from tiltbench.quiver import Quiver


def show(a, title):
    print(f"== {title}")
    print(f"dimension {a.dim}, vertices {list(a.quiver.vertices)}")
    print("Cartan matrix (entry (i,j) counts paths i -> j):")
    for row in a.cartan_matrix().data:
        print("   ", [int(x) for x in row])
    for v in a.quiver.vertices:
        layers = radical_layers(projective(a, v))
        pretty = " / ".join(
            "{" + ",".join(sorted(k for k in layer for _ in range(layer[k]))) + "}"
            for layer in layers
        )
        print(f"P({v}) Loewy layers: {pretty}")
    print()


# a cyclic quiver: 1 -a-> 2 -b-> 3 -c-> 1 with relations abc = bcab = cabc = 0
q = fig1_quiver()
a = build_path_algebra(q, fig1_relations(q))
show(a, "three-vertex cyclic algebra (dimension 11)")

# the four-vertex algebra used throughout the demos
show(sec5_algebra(), "four-vertex algebra (dimension 13)")

# admissibility is enforced: an unbounded loop is rejected
loop = Quiver(["1"], [("l", "1", "1")])
try:
    build_path_algebra(loop, [], max_path_len=12)
except Exception as exc:
    print(f"loop without relations is rejected: {type(exc).__name__}")
print("loop with l*l = 0 has dimension", build_path_algebra(loop, [monomial_relation(loop, ["l", "l"])]).dim)
