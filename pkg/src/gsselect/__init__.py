"""Exact minimum-cardinality ground-station selection under site diversity."""
from gsselect.bnb import SolveResult, TraceRecord, solve
from gsselect.cover import NodeCoverGraph, encode_node_cover
from gsselect.greedy import run_greedy
from gsselect.instance import ProblemInstance, Selection, generate_uniform, load_instance
from gsselect.lp import solve_lp
from gsselect.oracle import solve_exhaustive
from gsselect.transform import BilpInstance, availability, is_feasible, to_bilp

__all__ = [
    "BilpInstance",
    "NodeCoverGraph",
    "ProblemInstance",
    "Selection",
    "SolveResult",
    "TraceRecord",
    "availability",
    "encode_node_cover",
    "generate_uniform",
    "is_feasible",
    "load_instance",
    "run_greedy",
    "solve",
    "solve_exhaustive",
    "solve_lp",
    "to_bilp",
]
