from .eigensolver import JacobiEigensolver
from .linalg_service import LinalgService
from .bloch_service import BlochService
from .basis_service import BasisService
from .fur_service import FurService
from .porac_service import PoracService
from .sampling_service import SamplingService
from .oracle_service import OracleService
from .report_service import ReportService

__all__ = [
    'JacobiEigensolver',
    'LinalgService',
    'BlochService',
    'BasisService',
    'FurService',
    'PoracService',
    'SamplingService',
    'OracleService',
    'ReportService',
]
