"""Lecture Hall polynomials, their minors, and checks against the Lecture Hall cone."""

from .polyring import (
    DEGLEX,
    BiDegree,
    LaurentPoly,
    Monomial,
    TermOrder,
    bidegree,
    format_poly,
    is_polynomial,
    leading_term,
    parse_poly,
)
from .lhseq import LHSequence, check_index, target_monomial
from .minors import MinorKey, cal_E, ell_S, matrix_entry, minor_det
from .verify import VerificationReport, phi, verify_phi_properties, verify_pi, verify_sagbi

__version__ = "0.1.0"
