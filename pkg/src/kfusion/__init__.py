"""Exact fusion rings of compact simple simply connected Lie groups.

Given an admissible simple type and a positive integer level, the package
computes, in exact arithmetic throughout: the basis of regular affine Weyl
orbits, the finite detection subgroup of the maximal torus with its
character theory, the detection matrix over a cyclotomic ring, the identity
class, the coform, and the fusion product.
"""

from .errors import (
    DegenerateTwist,
    DimensionMismatch,
    InvalidType,
    KfusionError,
    NoIdentity,
    NonIntegral,
    NotScalar,
    ResourceLimit,
    SingularInput,
    SingularShift,
)
from .roots import (
    LieType,
    RootDatum,
    WeylElement,
    build_root_datum,
    dominant_representative,
    parse_lie_type,
    weyl_group,
)
from .reps import WeightSystem, dimension, level_of, trace_form, weight_multiplicities
from .affine import (
    SINGULAR,
    AffineWeylElement,
    LevelForm,
    OrbitRep,
    act,
    canonicalize,
    compose,
    enumerate_regular_orbits,
    is_regular,
    level_form,
    level_form_from_rep,
)
from .torsion import (
    TorsionCharacter,
    TorsionElement,
    TorsionSubgroup,
    regular_orbits,
    restrict_character,
    torsion_subgroup,
    verify_duality,
)
from .detect import (
    AntisymmetricClass,
    CharacterSum,
    DetectionMatrix,
    antisymmetrize,
    detection_matrix,
    evaluate,
    theta,
)
from .fusion import (
    Coform,
    FusionRing,
    KClass,
    coform,
    fusion_ring,
    identity_class,
    multiply,
    quotient_ideal_support,
    verify_ring_axioms,
)

__version__ = "0.1.0"

__all__ = [name for name in dir() if not name.startswith("_")]
