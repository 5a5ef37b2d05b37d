"""Exact branch-and-bound for the phrase selection ILP.

Each node's LP relaxation (variables boxed to [0, 1], plus the node's
fixings) is solved by the in-repo simplex and provides the upper bound.
Nodes are explored best-bound-first; branching picks the most fractional
variable, all ties break toward the lowest index, and the fix-to-1 child
is queued first, so solves are fully deterministic.  The all-zero
assignment (the empty summary) is always feasible and seeds the
incumbent, and every incumbent update must pass the independent
constraint checker before it is accepted.
"""

import heapq
import time

import numpy as np

from .ilp import IlpError, IlpModel, IlpSolution, check_assignment
from .simplex import EQ, LEQ, SimplexError, solve_lp

_INT_TOL = 1e-6
_GAP_TOL = 1e-9


def solve_ilp(model: IlpModel, time_limit: float = 30.0) -> IlpSolution:
    nv = model.n_vars
    c = model.objective
    A, b, senses = model.arrays()
    A_base = np.vstack([A, np.eye(nv)])
    b_base = np.concatenate([b, np.ones(nv)])
    s_base = np.concatenate([senses, np.full(nv, LEQ, dtype=np.int64)])

    def node_lp(fixed: dict[int, int]):
        if not fixed:
            return solve_lp(c, A_base, b_base, s_base)
        extra = np.zeros((len(fixed), nv))
        rhs = np.zeros(len(fixed))
        ss = np.zeros(len(fixed), dtype=np.int64)
        for r, (v, val) in enumerate(sorted(fixed.items())):
            extra[r, v] = 1.0
            rhs[r] = float(val)
            ss[r] = EQ if val == 1 else LEQ
        return solve_lp(c, np.vstack([A_base, extra]),
                        np.concatenate([b_base, rhs]),
                        np.concatenate([s_base, ss]))

    start = time.monotonic()
    nodes_explored = 0
    incumbent = np.zeros(nv)
    inc_obj = 0.0  # the empty summary is always feasible

    heap: list[tuple[float, int, dict, np.ndarray]] = []
    counter = 0

    def process(fixed: dict[int, int]) -> None:
        """Solve a node LP; prune, accept an integral incumbent, or queue."""
        nonlocal nodes_explored, counter, incumbent, inc_obj
        nodes_explored += 1
        res = node_lp(fixed)
        if res.status != "optimal":
            if res.status == "infeasible":
                return
            raise SimplexError(f"node LP unexpectedly {res.status}")
        if res.objective <= inc_obj + _GAP_TOL:
            return
        x = res.x
        if np.all(np.abs(x - np.round(x)) <= _INT_TOL):
            candidate = np.round(x) + 0.0
            if not check_assignment(model, candidate):
                obj = float(c @ candidate)
                if obj > inc_obj + _GAP_TOL:
                    incumbent, inc_obj = candidate, obj
            return
        heapq.heappush(heap, (-res.objective, counter, fixed, x))
        counter += 1

    process({})

    status = "optimal"
    gap = 0.0
    while heap:
        if time.monotonic() - start > time_limit:
            best_bound = max(-heap[0][0], inc_obj)
            status = "feasible_with_gap"
            gap = best_bound - inc_obj
            break
        neg_bound, _, fixed, x = heapq.heappop(heap)
        if -neg_bound <= inc_obj + _GAP_TOL:
            break  # best-first: nothing left can beat the incumbent
        frac = np.minimum(x, 1.0 - x)
        frac[list(fixed)] = -1.0
        branch_var = int(np.argmax(frac))
        for val in (1, 0):
            child = dict(fixed)
            child[branch_var] = val
            process(child)

    for (i, j), pv in model.pair_var.items():
        ai, aj = model.alpha_of[i], model.alpha_of[j]
        if incumbent[pv] != incumbent[ai] * incumbent[aj]:
            raise IlpError(
                f"pair variable {model.variables[pv].name} inconsistent "
                f"with its endpoints in the returned assignment")

    return IlpSolution(
        assignment=incumbent,
        objective_value=inc_obj,
        status=status,
        nodes_explored=nodes_explored,
        gap=gap,
    )
