from .linalg import ComplexMatrix, PureState, DensityMatrix
from .bloch import GellMannBasis, BlochVector
from .bases import Basis, MubFamily
from .fur import OutcomeSet, FurReport
from .game import PoracGame, ParitySet, ParityConvention, ObliviousnessLevel, ObliviousnessReport
from .oracle import SearchConfig, CertaintySearchResult, PoracSearchResult, ClassicalRacResult, PhiReport, Lemma3Report
from .report import Provenance, ResultEntry, RunReport

__all__ = [
    'ComplexMatrix', 'PureState', 'DensityMatrix',
    'GellMannBasis', 'BlochVector',
    'Basis', 'MubFamily',
    'OutcomeSet', 'FurReport',
    'PoracGame', 'ParitySet', 'ParityConvention', 'ObliviousnessLevel', 'ObliviousnessReport',
    'SearchConfig', 'CertaintySearchResult', 'PoracSearchResult', 'ClassicalRacResult', 'PhiReport', 'Lemma3Report',
    'Provenance', 'ResultEntry', 'RunReport',
]
