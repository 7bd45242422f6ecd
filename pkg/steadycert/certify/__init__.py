"""정상상태 인증, 분해 검증, 순환 사상 검사"""

from steadycert.certify.allwright import AllwrightReport, allwright_check
from steadycert.certify.decomposition import DECOMPOSITIONS, verify_decompositions
from steadycert.certify.pipelines import (
    CERTIFIABLE_MODELS,
    CertificateReport,
    certify,
    certify_bwd6d,
    certify_fwd6d,
    certify_rep3d,
    certify_samples,
)
from steadycert.certify.solver import ZeroDimSolution, solve_zero_dimensional

__all__ = [
    "AllwrightReport",
    "CERTIFIABLE_MODELS",
    "CertificateReport",
    "DECOMPOSITIONS",
    "ZeroDimSolution",
    "allwright_check",
    "certify",
    "certify_bwd6d",
    "certify_fwd6d",
    "certify_rep3d",
    "certify_samples",
    "solve_zero_dimensional",
    "verify_decompositions",
]
