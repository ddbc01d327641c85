"""Machine-independent cost instrumentation.

The primary cross-machine metric is `recolor_cost`: the total number of
elementary journaled color writes performed by a run (path-flip edges count
one write each, fan-rotation shifts two, rollback undo steps also count).
Wall time is recorded but secondary.
"""

from __future__ import annotations

from dataclasses import dataclass, field


@dataclass
class RoundMetrics:
    """One round of the phased star-coloring engine."""

    kind: str
    m0: int
    m1: int
    d: int
    x: int
    x_size: int
    L: int
    tau: float
    iterations: int = 0
    successes: int = 0
    aborted: bool = False
    step_success: dict = field(default_factory=dict)
    step_fail: dict = field(default_factory=dict)
    param_ineq_lhs: float = 0.0
    param_ineq_rhs: float = 0.0


@dataclass
class RunMetrics:
    algo: str = ""
    wall_time: float = 0.0
    recolor_cost: int = 0
    colors_used: int = 0
    uncolored: int = -1
    verified: bool = False
    safety_cap_aborts: int = 0
    truncation_count: int = 0
    step_success: dict = field(default_factory=dict)
    step_fail: dict = field(default_factory=dict)
    path_length_histogram: dict = field(default_factory=dict)
    rounds: list = field(default_factory=list)
    combine_stats: list = field(default_factory=list)
    fallbacks: int = 0
    keep_iteration_costs: bool = False
    iteration_costs: list = field(default_factory=list)

    def add_cost(self, mutations: int) -> None:
        self.recolor_cost += int(mutations)

    def count_step(self, step: int, success: bool) -> None:
        bucket = self.step_success if success else self.step_fail
        bucket[step] = bucket.get(step, 0) + 1

    def observe_path_length(self, length: int) -> None:
        b = length.bit_length()  # log2 bucket
        self.path_length_histogram[b] = self.path_length_histogram.get(b, 0) + 1

    def summary_row(self, g, seed) -> dict:
        return {
            "n": g.n,
            "m": g.m,
            "max_degree": g.max_degree,
            "algo": self.algo,
            "seed": seed,
            "recolor_cost": self.recolor_cost,
            "wall_time": round(self.wall_time, 6),
            "colors_used": self.colors_used,
            "uncolored": self.uncolored,
            "verified": int(self.verified),
            "safety_cap_aborts": self.safety_cap_aborts,
            "truncations": self.truncation_count,
        }


CSV_COLUMNS = ["n", "m", "max_degree", "algo", "seed", "recolor_cost",
               "wall_time", "colors_used", "uncolored", "verified",
               "safety_cap_aborts", "truncations"]
