from django.conf import settings

from .repositories.gell_mann_repository import GellMannRepository
from .repositories.strategy_repository import InMemoryStrategyRepository
from .services.basis_service import BasisService
from .services.bloch_service import BlochService
from .services.eigensolver import JacobiEigensolver
from .services.fur_service import FurService
from .services.linalg_service import LinalgService
from .services.oracle_service import OracleService
from .services.porac_service import PoracService
from .services.report_service import ReportService
from .services.sampling_service import SamplingService

# Create instances for dependency injection
gell_mann_repository = GellMannRepository()
eigensolver = JacobiEigensolver()
linalg_service = LinalgService(eigensolver)
bloch_service = BlochService(linalg_service, gell_mann_repository)
basis_service = BasisService()
fur_service = FurService(linalg_service, bloch_service)
porac_service = PoracService(
    linalg_service,
    bloch_service,
    basis_service,
    max_strings=settings.PORAC_MAX_STRINGS,
    max_born_evaluations=settings.PORAC_MAX_BORN_EVALUATIONS,
)
strategy_repository = InMemoryStrategyRepository(porac_service)
sampling_service = SamplingService()
oracle_service = OracleService(
    linalg_service,
    bloch_service,
    basis_service,
    fur_service,
    porac_service,
    sampling_service,
    max_strings=settings.PORAC_MAX_STRINGS,
    max_born_evaluations=settings.PORAC_MAX_BORN_EVALUATIONS,
)
report_service = ReportService()
