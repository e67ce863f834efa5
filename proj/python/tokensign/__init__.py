"""Signed graphs, their k-token graphs, frustration and spectral unbalance."""

from ._tokensign import (
    SignedGraph,
    TokensignError,
    balance_check,
    canonical_signature,
    char_poly,
    claim_ids,
    complement,
    eigenvalues,
    example,
    family,
    family_names,
    frustration_bounds,
    frustration_index,
    is_balanced,
    is_sign_symmetric,
    negate,
    signed_binomial_matrix,
    switch,
    switching_equivalent,
    switching_isomorphism,
    switching_iso_classes,
    table,
    to_json,
    token_graph,
    token_subsets,
    unbalance_level,
    unbalance_level_m,
    verify_sweep,
    with_mask,
)

__all__ = [name for name in dir() if not name.startswith("_")]
