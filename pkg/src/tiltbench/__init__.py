"""tiltbench: a workbench for finite-dimensional quiver algebras.

Exact rational arithmetic throughout; every verdict is backed by a
re-checkable witness.  The layers, bottom up:

  linalg        dense matrices over Fraction (rank, kernels, solving)
  quiver        quivers, paths, relations (left-to-right composition)
  algebra       path algebras modulo admissible relations
  reps          modules as row-vector quiver representations
  decompose     indecomposable decompositions and isomorphism testing
  approx        minimal right/left approximations by projectives
  complexes     bounded complexes of projectives, homotopy homs, minimization
  complex_decomp  idempotent splitting of complexes
  presentation  quivers with relations recovered from abstract algebras
  tilting       stability of terms, tilting verification, the approximation
                construction, endomorphism algebras, stable images
  serialize     JSON formats; cli: the command-line surface
"""

from .algebra import BasicAlgebra, build_path_algebra
from .complex_decomp import complexes_isomorphic, decompose_complex, split_idempotent
from .complexes import (
    ChainMapC,
    ProjComplex,
    homology,
    homotopy_hom,
    minimize,
    regular_stalk,
    stalk_complex,
)
from .config import WorkbenchConfig
from .decompose import decompose, is_isomorphic
from .errors import TiltbenchError
from .linalg import Matrix, kernel_basis, rank, solve
from .presentation import (
    algebra_from_structure_constants,
    presentations_match,
    quiver_presentation,
    relation_ideals_equal,
)
from .quiver import Path, Quiver, Relation, monomial_relation, relation_from_words
from .reps import (
    ModuleMap,
    Representation,
    hom_space,
    injective,
    projective,
    radical_layers,
    regular_module,
    simple,
    socle,
    top,
)
from .approx import minimal_left_approximation, minimal_right_approximation
from .tilting import (
    TiltingContext,
    check_add_nu_equal,
    construct_tpq,
    end_algebra,
    maximal_nu_stable,
    nakayama_on_projectives,
    verify_tilting,
)

__version__ = "0.1.0"

__all__ = [
    "BasicAlgebra",
    "ChainMapC",
    "Matrix",
    "ModuleMap",
    "Path",
    "ProjComplex",
    "Quiver",
    "Relation",
    "Representation",
    "TiltbenchError",
    "TiltingContext",
    "WorkbenchConfig",
    "algebra_from_structure_constants",
    "build_path_algebra",
    "check_add_nu_equal",
    "complexes_isomorphic",
    "construct_tpq",
    "decompose",
    "decompose_complex",
    "end_algebra",
    "hom_space",
    "homology",
    "homotopy_hom",
    "injective",
    "is_isomorphic",
    "kernel_basis",
    "maximal_nu_stable",
    "minimal_left_approximation",
    "minimal_right_approximation",
    "minimize",
    "monomial_relation",
    "nakayama_on_projectives",
    "presentations_match",
    "projective",
    "quiver_presentation",
    "radical_layers",
    "rank",
    "regular_module",
    "regular_stalk",
    "relation_from_words",
    "relation_ideals_equal",
    "simple",
    "socle",
    "solve",
    "split_idempotent",
    "stalk_complex",
    "top",
    "verify_tilting",
]
