"""Exact tools for symmetric quartic forms: constructors, PSD decision,
zero-forcing non-SOS certificates and SOS identity checks."""

from .forms import (
    FormId,
    build_form,
    lift,
    make_C,
    make_choi_lam_44,
    make_L,
    make_lax5,
    make_robinson,
    parse_form_id,
)
from .nonsos import (
    NonSosCertificate,
    SosIdentity,
    ZeroSet,
    certify_not_sos,
    enumerate_zero_points,
    even_L_sos_identity,
    kernel_dimension,
    replay_lemma_subtractions,
    vanishing_constraint_matrix,
    verify_sos_identity,
    verify_zeros,
)
from .poly import Polynomial
from .psd import (
    BinaryRestriction,
    PsdCertificate,
    binary_quartic_nonneg,
    check_psd,
    restrict,
    verify_Ln_restricted_formula,
)

__all__ = [name for name in dir() if not name.startswith("_")]
