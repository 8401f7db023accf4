from ._objective import Objective, PositiveDegree, MinDegree, make_objective, MODES
from ._problem import SearchProblem, SearchResult
from ._brute import brute_force, MAX_BRUTE_SLOTS
from ._augment import CanonicalAugmentation, search
from ._ratios import ratio_table, turan_number, RATIO_COLUMNS

__all__ = ["Objective", "PositiveDegree", "MinDegree", "make_objective", "MODES",
           "SearchProblem", "SearchResult", "brute_force", "MAX_BRUTE_SLOTS",
           "CanonicalAugmentation", "search", "ratio_table", "turan_number", "RATIO_COLUMNS"]
