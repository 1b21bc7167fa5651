"""Directional Gaussian quantum correlations of two-mode squeezed thermal states.

Entanglement (PPT, gain form, Duan), EPR steering and Gaussian discord from
standard-form covariance matrices, with Venn-class labels, squeezing
thresholds, parameter scans and teleportation diagnostics.
"""
from .classify import ClassFlags, ClassLabel, Verdict, classify, classify_batch, unified_signature
from .errors import (
    DircorrError,
    DomainError,
    FormError,
    OracleError,
    ProductStateError,
    ScanSpecError,
    SpectrumError,
)
from .gaussian_core import (
    CovarianceMatrix,
    StsParams,
    SymplecticSpectrum,
    is_physical,
    is_sts_form,
    sts_covariance,
    symplectic_spectrum,
)
from .kernels import BACKEND, available_backends
from .measures import (
    CorrelationReport,
    Direction,
    correlation_report,
    discord,
    duan,
    ent_gain,
    ent_ppt,
    entropy_f,
    optimal_gain_sym,
    steering,
)
from .scan import ScanMode, ScanResult, ScanSpec, extract_boundary, run_scan
from .teleport import TeleportDirection, TeleportReport, secure_teleport_check, teleport_report
from .thresholds import Criterion, ThresholdSet, bisection_threshold, closed_form_thresholds

__version__ = "0.1.0"
