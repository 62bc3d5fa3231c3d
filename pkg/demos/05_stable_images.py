"""Module images under the induced stable equivalence.

For a tilting complex passing the term criterion, the image of a module X is
computed from the hom spaces into shifted stalks of X; when those are
concentrated in degree zero the image is an honest module over the
endomorphism algebra, otherwise the full profile is reported.
"""

from tiltbench import simple, projective
from tiltbench.corpus import fig1_algebra, fig1_tilting_complex
from tiltbench.errors import NotConcentrated
from tiltbench.tilting import TiltingContext

a = fig1_algebra()
t = fig1_tilting_complex(a)
ctx = TiltingContext(a, t)

# the simple at the unstable vertex maps to a simple module
s1 = simple(a, "1")
cert = ctx.stable_image(s1)
print("image of S(1): dims", dict(cert.module.dims), "| profile", cert.profile)

# a projective with a genuinely two-term image: the profile is surfaced
p1 = projective(a, "1")
try:
    ctx.stable_image(p1)
except NotConcentrated as exc:
    print("image of P(1) is not concentrated; profile:", exc.profile)

# hom dimensions into shifted stalks, summand by summand
for i in (0, 1):
    h = ctx.f_homology(p1, i)
    print(f"hom classes into P(1) shifted by {i}: dims", h.dim_vector())
