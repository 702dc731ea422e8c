"""Inclusion-exclusion algorithms for counting and detection problems on small ground sets."""

from .coloring import chromatic_number, cover_count, cover_table, indep_count_polyspace, indep_table
from .core import (
    BitSubset,
    Graph,
    Matrix01,
    SetFunction,
    SizeCapError,
    parse_graph,
    parse_matrix,
    parse_setfn,
    pie_sum,
    sieve_complement_of_union,
)
from .hampath import hamiltonian_count_from, hamiltonian_count_total, walks_avoiding
from .kpath import KPathRandomness, kpath_detect, kpath_statistic
from .matchings import permanent_ryser, permanent_ryser_gray, pm_count_general
from .steiner import SteinerInstance, steiner_min_size, willow_count_avoiding
from .transforms import mobius_naive, mobius_yates, pointwise_pow, zeta_naive, zeta_yates

__version__ = "0.1.0"
