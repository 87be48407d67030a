"""Representations of the n-Kronecker quiver over F_p and a GR-measure oracle."""

from .lattice import DEFAULT_LATTICE_BUDGET, Lattice, enumerate_submodules, lattice_size
from .oracle import GrCertificate, OracleRun, gr_measure_oracle, gr_submodules, in_B, is_piling, oracle_run
from .rep import (
    DEFAULT_END_BUDGET,
    Rep,
    SubRep,
    build_canonical,
    direct_sum,
    dual,
    endomorphisms,
    is_indecomposable,
    load,
    quotient,
    random_indecomposable,
    random_rep,
    restrict,
    store,
    whole,
)
from .samples import find_x2, preinjective_rep, preprojective_rep

__all__ = [
    "DEFAULT_END_BUDGET",
    "DEFAULT_LATTICE_BUDGET",
    "GrCertificate",
    "Lattice",
    "OracleRun",
    "Rep",
    "SubRep",
    "build_canonical",
    "direct_sum",
    "dual",
    "endomorphisms",
    "enumerate_submodules",
    "find_x2",
    "gr_measure_oracle",
    "gr_submodules",
    "in_B",
    "is_indecomposable",
    "is_piling",
    "lattice_size",
    "load",
    "oracle_run",
    "preinjective_rep",
    "preprojective_rep",
    "quotient",
    "random_indecomposable",
    "random_rep",
    "restrict",
    "store",
    "whole",
]
