__version__ = "0.1.0"

from . import hypergraph
from . import hypergraphon
from . import search
from .config import Settings, DEFAULT_SETTINGS
from .errors import InputError, ParseError, DomainError, SizeError, ConsistencyError
from .hypergraph import KGraph, LabelledKGraph
from .hypergraphon import StepHypergraphon, AnalyticHypergraphon, CellPoint
from .search import SearchProblem, SearchResult, brute_force, ratio_table
from .search import search as solve
