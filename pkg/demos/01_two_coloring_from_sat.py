"""
Two-coloring consistency from a CNF formula
===========================================

A CNF formula becomes a two-coloring instance: one positive sample ties a
"true" vertex to a "false" vertex, and each clause becomes a negative sample.
Any consistent vertex set reads back as a satisfying assignment.
"""

from conscheck import is_consistent
from conscheck.oracle import oracle_solve
from conscheck.partition import solve_two_coloring_fpt
from conscheck.reductions import CnfFormula, brute_force_sat, reduce_sat_to_2col

phi = CnfFormula(4, ((1, -2, -3, 4), (-1, 2, -4)))
inst = reduce_sat_to_2col(phi)

print(f"{inst.n} vertices, {inst.t} samples ({inst.t_minus} negative)")
for s in inst.samples:
    print(f"  label={s.label} edges={list(s.edges)}")

# the FPT solver branches over signature pairs of the negatives
X = solve_two_coloring_fpt(inst)
print("solver:", X, "consistent:", is_consistent(inst, X))

# vertex 0 is "true", vertex 1 "false", variable i sits at vertex i + 1
side = set(X.vertices)
assignment = {i: ((i + 1) in side) == (0 in side) for i in range(1, phi.num_vars + 1)}
print("assignment:", assignment)
print("brute force satisfiable:", brute_force_sat(phi))

# an unsatisfiable formula gives an inconsistent instance
bad = reduce_sat_to_2col(CnfFormula(1, ((1,), (-1,))))
print("x and not x:", solve_two_coloring_fpt(bad), "/ oracle:", oracle_solve(bad))
