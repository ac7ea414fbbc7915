"""Workspace constants and solver knobs.

Desk-scale defaults: a 1 m x 1 m table centered under the robot base,
5 cm square blocks at two heights, and an 0.8 m reach circle linearized
as an inscribed octagon.  The tool domain uses a wider 2 m table so that
out-of-reach positions actually exist.
"""

from dataclasses import dataclass, replace


@dataclass(frozen=True)
class PlannerConfig:
    # geometry
    block_size: float = 0.05
    short_height: float = 0.05
    tall_height: float = 0.10
    table_half: float = 0.5
    tool_table_half: float = 1.0
    reach_center: tuple = (0.0, 0.0)
    reach_radius: float = 0.8
    reach_sides: int = 8

    # a block is not graspable if a strictly taller one sits closer than this
    grasp_clearance: float = 0.075
    # slack added on top of every placement separation constraint
    placement_pad: float = 1e-4
    # when True, obstacle constraints use the literal point model
    # (offsets of half the obstacle size, ignoring the moved block's extent)
    point_model: bool = False

    # end-effector travel accounting
    ee_home: tuple = (0.0, 0.0)
    # weight of the follow-up grasp leg in the pull-target objective
    pull_grasp_weight: float = 0.25

    goal_tol: float = 1e-6

    # budgets
    dts_node_budget: int = 10_000
    miqp_node_budget: int = 100_000
    fullopt_node_budget: int = 1_000_000
    mbts_node_budget: int = 5_000
    mbts_time_budget: float = 100.0
    mbts_goal_bonus: float = 10.0

    # local placement solver
    nlp_restarts: int = 20
    nlp_restart_sigma: float = 0.15
    nlp_tol: float = 1e-8

    # metadata only: nominal phase duration between keyframes (seconds)
    phase_duration: float = 1.0
    # task graph loop bound, multiplied by the number of blocks
    taskgraph_iter_factor: int = 4

    def separation(self, obstacle_size: float, moved_size: float) -> float:
        """Center offset required between a placement and an obstacle.

        Covers both footprint overlap (Minkowski sum of the two squares) and
        the grasp-clearance rule, so placements never create new obstructions.
        """
        if self.point_model:
            return obstacle_size / 2.0
        base = (obstacle_size + moved_size) / 2.0
        return max(base, self.grasp_clearance) + self.placement_pad

    def for_instance(self, table_half: float, reach_radius: float) -> "PlannerConfig":
        return replace(self, table_half=table_half, reach_radius=reach_radius)


DEFAULT_CONFIG = PlannerConfig()
