from ._step import (StepHypergraphon, CellPoint, ValidationReport, constant, from_graph,
                    pair_coordinate_hypergraphon, validate, symmetrize, cells, degree,
                    min_positive_degree, min_degree)
from ._integrate import density, rooted_density, edge_density, is_family_free
from ._analytic import (AnalyticHypergraphon, MonteCarloEstimate, directed_cycle_hypergraphon,
                        constant_analytic, mc_density, check_symmetry)
from ._loader import load_hypergraphon, dump_hypergraphon

__all__ = ["StepHypergraphon", "CellPoint", "ValidationReport", "constant", "from_graph",
           "pair_coordinate_hypergraphon", "validate", "symmetrize", "cells", "degree",
           "min_positive_degree", "min_degree",
           "density", "rooted_density", "edge_density", "is_family_free",
           "AnalyticHypergraphon", "MonteCarloEstimate", "directed_cycle_hypergraphon",
           "constant_analytic", "mc_density", "check_symmetry",
           "load_hypergraphon", "dump_hypergraphon"]
