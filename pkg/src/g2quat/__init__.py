"""Exact counts of level-1 quaternionic automorphic representations on G2."""

from .counts import CountReport, count_quaternionic, count_range, verify_fixture
from .endoscopy import correction, h_term
from .gammaclasses import ConjClassRecord, invariant_dim, load_classes
from .modforms import dim_cusp_forms
from .rootlattice import BETA, Weight, WeylElement
from .weylchar import TorusElement, char_at, weyl_dim

__version__ = "0.1.0"

__all__ = [
    "BETA",
    "ConjClassRecord",
    "CountReport",
    "TorusElement",
    "Weight",
    "WeylElement",
    "char_at",
    "correction",
    "count_quaternionic",
    "count_range",
    "dim_cusp_forms",
    "h_term",
    "invariant_dim",
    "load_classes",
    "verify_fixture",
    "weyl_dim",
]
