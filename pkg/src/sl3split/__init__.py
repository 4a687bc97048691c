"""Exact splitting of a level-4 congruence subgroup of SL(3,Z) into the
metaplectic double cover of SL(3,R), with the defining sign cocycle, coset
coordinates, block factorizations, and double-coset combinatorics."""

from .arith import hilbert_real, kronecker, legendre_oracle, val2
from .blocks import BlockParams, block_factor, block_factor_any, block_to_matrix, block_to_plucker
from .cocycle import DeltaData, MetaElt, delta, meta_mul, sigma, sigma_torus
from .cosets import canonical_rep, enumerate_reps, phi_split, psi_merge, twist_factor
from .sl3 import (
    Cell,
    Plucker,
    ScaledPlucker,
    bruhat,
    cell_of,
    in_gamma14,
    in_gamma_inf,
    mat_inv,
    mat_mul,
    minus_transpose_inv,
    plucker,
    scaled_plucker,
)
from .splitting import lift, split, split_block, split_cell, split_coords, split_theorem

__all__ = [
    "BlockParams", "Cell", "DeltaData", "MetaElt", "Plucker", "ScaledPlucker",
    "block_factor", "block_factor_any", "block_to_matrix", "block_to_plucker",
    "bruhat", "canonical_rep", "cell_of", "delta", "enumerate_reps",
    "hilbert_real", "in_gamma14", "in_gamma_inf", "kronecker",
    "legendre_oracle", "lift", "mat_inv", "mat_mul", "meta_mul",
    "minus_transpose_inv", "phi_split", "plucker", "psi_merge",
    "scaled_plucker", "sigma", "sigma_torus", "split", "split_block",
    "split_cell", "split_coords", "split_theorem", "twist_factor", "val2",
]
