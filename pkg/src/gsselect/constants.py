"""Numerical tolerances shared by every solver component.

All feasibility decisions (transform, greedy, LP, branch-and-bound) read
``EPS_FEAS`` from here so that a selection is judged identically everywhere.
"""

# absolute slack on log-scale constraint sums
EPS_FEAS = 1e-9
# distance from 0/1 under which an LP value counts as integral
EPS_INT = 1e-6
# subtracted before taking the ceiling of an LP bound
EPS_CEIL = 1e-7
# repeatability of LP objectives
EPS_LP = 1e-8
# greedy arg-min near-ties resolve by index inside this window
EPS_TIE = 1e-12
