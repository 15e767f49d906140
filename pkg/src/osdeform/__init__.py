"""Deformed Orlik-Solomon algebras of matroids and their Groebner bases."""

from .ncalg import GroundOrder, Poly, QEvaluation, deglex_compare, evaluate_q, parse_poly, print_poly
from .matroid import Matroid, RationalMatrix, circuits_from_matrix, load_matroid, validate_circuits
from .osgb import (
    GeneratorSet,
    GroebnerData,
    buchberger_verify,
    del_minus,
    del_plus,
    grobner_circuits,
    groebner_data,
    reduce,
)
from .analysis import hilbert, koszul_check, os_specialization_check

__version__ = "0.1.0"
