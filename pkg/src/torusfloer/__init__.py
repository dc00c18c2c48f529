"""Exact bordered Heegaard Floer computations over the torus algebra, and a
decision procedure for Heegaard Floer homology solid tori."""
from .algebra import (BASIS, CHORDS, IDEMPOTENTS, ONE, T, ZERO, AlgebraElement,
                      LaurentPoly, RationalFn, alg_mul, basis_mul, matrix_rank,
                      specialize_at_one)
from .curves import (LONGITUDE, MERIDIAN, CurveComponent, MultiCurve, Slope,
                     UnsupportedCurveError, commensurable, curve_to_typeD,
                     is_longitude_power, line_intersection_dim, line_typeD,
                     staircase_word, supported_near_longitude, word_to_typeD)
from .hfst import (ConsistencyError, HfstVerdict, filling_dims, is_hfst,
                   surgery_triples, triangle_rank_check)
from .pairing import (BoundednessError, ChainComplex, ComplexError, box_tensor,
                      homology_dim, mor_pairing)
from .seifert import (SeifertData, SeifertVerdict, classify, euler_and_longitude,
                      normalize)
from .structures import (AInftyMod, StructureError, TypeD, builtin, check_ainfty,
                         check_typeD, is_bounded, isomorphic, random_typeD)

__version__ = "0.1.0"
