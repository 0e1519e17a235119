"""Homological representations of surface braid groups over Z[H]."""

from .hgroup import HElem, KClass, RingElem, RingMode, h_parse
from .words import Gen, Kind, Word, parse_word
from .presentations import Relation, relations
from .action import braid_action, generator_action
from .freecalc import fox_phi, phi_eval, psi_eval
from .matrix import RepMatrix, compose, mat_inverse, mat_mul
from .rep import (Character, fox_oracle_sigma_block, classical_block, lkb_compare_sigma1,
                  phi1_generator, phi1_word, phi2_curated, rank, specialize, twist,
                  validate_specialization, verify_relations)

__version__ = "0.1.0"
