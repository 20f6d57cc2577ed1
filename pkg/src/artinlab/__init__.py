"""Executable group theory for finite and affine type Artin groups.

Coxeter/Artin presentations and exact reflection group models, reflection
arrangements with their intersection lattices, Garside normal forms and
orbifold braid words, and the surgery L-groups of finite type pure Artin
groups.
"""

from .arrangement import (
    Arrangement,
    Hyperplane,
    IntersectionLattice,
    IntPolynomial,
    betti_numbers,
    characteristic_polynomial,
    fibration_map_eval,
    intersection_lattice,
    is_fiber_type,
    parse_arrangement,
    poincare_polynomial,
    reflection_arrangement,
    suspension_check,
    whitney_polynomial,
    z_space_membership,
)
from .coxeter import (
    CoxeterMatrix,
    Presentation,
    artin_presentation,
    coxeter_image,
    coxeter_matrix,
    coxeter_presentation,
    enumerate_group,
    is_pure,
    reflections,
)
from .garside import GarsideNF, braid_equal, garside_nf
from .labels import ArtinLabError, Family, GroupLabel, parse_label
from .ltheory import (
    AbelianGroupDescriptor,
    LTable,
    k_vanishing_report,
    l_groups,
    l_point,
    wedge_homology,
)
from .orbifold import (
    embed,
    fadell_neuwirth_tower,
    orbifold_presentation,
    verify_embedding_relators,
)
from .words import Alphabet, Word, free_reduce, parse_word, torsion_reduce

__version__ = "0.1.0"
