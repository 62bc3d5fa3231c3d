"""The full tilting pipeline on the four-vertex algebra.

Pick stable projectives P = P(1) and Q = P(3) + P(4) with Hom(P, Q) = 0,
resolve the regular module by approximations on both sides, and verify that
the minimized result is a tilting complex whose endomorphism algebra is
presented by a quiver with five arrows and monomial-plus-zero relations.
"""

from tiltbench import construct_tpq, maximal_nu_stable
from tiltbench.corpus import sec5_algebra
from tiltbench.tilting import TiltingContext

a = sec5_algebra()

report = maximal_nu_stable(a)
print("stable projectives:", report.e_labels)

built = construct_tpq(a, ["1"], ["3", "4"], r=1, s=1)
t = built.complex
print("raw terms:      ", {d: built.raw.term(d) for d in built.raw.degrees()})
print("minimized terms:", {d: t.term(d) for d in t.degrees()})

ctx = TiltingContext(a, t, proved_by_construction=True)
summands, _, _ = ctx.decomposition()
print("indecomposable summands:")
for s, mult in summands:
    print("  ", {d: s.term(d) for d in s.degrees()}, "x", mult)

tilt = ctx.tilting_report()
print("self-orthogonal:", tilt.self_orthogonal_ok, "| basic:", tilt.basic,
      "| class matrix unimodular:", tilt.k0_unimodular)

end = ctx.end_data()
pres = end.presentation
print("endomorphism algebra dimension:", pres.algebra.dim)
print("recovered quiver:", [(ar.name, ar.source, ar.target) for ar in pres.quiver.arrows])
print("relations:")
for rel in pres.relations:
    print("   ", rel)

crit = ctx.check_iterated_nu_stable()
print("term criterion verdict:", crit["verdict"])
print("per-projective witnesses:", crit["per_projective"])
