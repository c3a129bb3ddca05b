"""Locally checkable vertex subset and partitioning problems."""

from .brute import brute_dq, brute_sigma_rho, brute_solve
from .classes import NeighborClassIndex
from .model import (NATURALS, POSITIVE, ZERO, DegreeConstraintMatrix, FinCofSet, Mode, Objective,
                    PartitionProblem, SigmaRhoProblem, SolutionCertificate, check_dq_partition,
                    check_sigma_rho, d_value, is_degenerate, parse_problem)
from .solver import class_statistics, solve, solve_dq_partition, solve_partition, solve_sigma_rho

__all__ = [
    "NATURALS", "POSITIVE", "ZERO", "DegreeConstraintMatrix", "FinCofSet", "Mode", "Objective",
    "NeighborClassIndex", "PartitionProblem", "SigmaRhoProblem", "SolutionCertificate",
    "brute_dq", "brute_sigma_rho", "brute_solve", "check_dq_partition", "check_sigma_rho",
    "class_statistics", "d_value", "is_degenerate", "parse_problem", "solve",
    "solve_dq_partition", "solve_partition", "solve_sigma_rho",
]
