"""Minimal informationally complete POVMs: construction, verification and
linear-inversion tomography."""

from ._core import (
    MicpovmError,
    Povm,
    build_frame,
    cfs_construct,
    coherent_state,
    eig_hermitian,
    evr_dual_construct,
    evr_primal_construct,
    fidelity,
    general_construct,
    preset_discrimination,
    preset_generic_qubit,
    preset_tetrahedral,
    probabilities,
    random_density,
    reconstruct,
    resolution_of_identity_mc,
    run_tomography,
    sample_directions,
    sample_outcomes,
    verify,
)

__all__ = [
    "MicpovmError",
    "Povm",
    "build_frame",
    "cfs_construct",
    "coherent_state",
    "eig_hermitian",
    "evr_dual_construct",
    "evr_primal_construct",
    "fidelity",
    "general_construct",
    "preset_discrimination",
    "preset_generic_qubit",
    "preset_tetrahedral",
    "probabilities",
    "random_density",
    "reconstruct",
    "resolution_of_identity_mc",
    "run_tomography",
    "sample_directions",
    "sample_outcomes",
    "verify",
]
