"""Exact class numbers, Hirzebruch sums and class number congruences."""

from ._quadcong import (
    cf_expand,
    class_number,
    class_structure,
    dedekind_sum,
    discriminant,
    fundamental_unit,
    genus_character,
    h_value,
    hirzebruch_sum,
    is_prime,
    isqrt,
    jacobi,
    kronecker,
    n_of_matrix,
    psi_via_dedekind,
    run_cli,
    scan,
    theta,
    verify_kmz,
    verify_theorem_1_1,
    verify_theorem_1_2,
    verify_theorem_1_3,
    verify_theorem_1_4,
)

__version__ = "0.1.0"
