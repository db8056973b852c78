"""Congruence lattices attached to overcommutative semigroup varieties."""
from .deciders import (
    COM, LZ, PK, RZ, X, XDUAL, FixedVariety, contains_fixed, holds_in_com, holds_in_lz,
    holds_in_pk, holds_in_rz, holds_in_x, holds_in_x_dual,
)
from .gsets import (
    GSet, act_on_word, congruence_lattice, g_lambda, is_regular, principal_congruence,
    quotient_gset,
)
from .lattices import (
    FiniteLattice, LatticeIdentity, are_isomorphic, direct_product, dual, embeds_into,
    is_distributive, is_modular, partition_lattice, satisfies_identity, subgroup_lattice_sym,
)
from .perms import PermGroup
from .rewrite import (
    FiniteEquivalence, Identity, Match, Presentation, derivable, match_pattern, phi_lambda,
    rewrite_neighbors,
)
from .theoremcheck import (
    BoundParams, ConditionEReport, PermutativityWitness, bound_params, check_condition_e,
    condition_i, is_overcommutative, is_permutative, least_pk, lemma5_witness, lemma6_witness,
    lmr_split, normalize_ends, verify_class_bound,
)
from .words import (
    Content, Partition, Word, WordClass, content_of, enumerate_words, format_word, is_balanced,
    is_simple, parse_word, partition_of, reverse,
)
