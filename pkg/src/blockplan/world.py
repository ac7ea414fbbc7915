"""Geometric world state: block poses and support relations.

Blocks either rest on the table or on exactly one other block (a forest).
Stacked blocks share the planar position of their support; only the block
on top of each stack is a grasp candidate.
"""

from dataclasses import dataclass, field

import numpy as np

from .errors import UnknownBlock
from .geometry import BlockPose, footprints_overlap

TABLE = "table"


@dataclass
class WorldState:
    blocks: dict = field(default_factory=dict)
    support: dict = field(default_factory=dict)

    def __post_init__(self):
        for b in self.blocks:
            self.support.setdefault(b, TABLE)

    def require(self, block_id: str) -> BlockPose:
        try:
            return self.blocks[block_id]
        except KeyError:
            raise UnknownBlock(block_id) from None

    def ids(self):
        return sorted(self.blocks)

    def on_table(self, block_id: str) -> bool:
        return self.support[block_id] == TABLE

    def blocks_on(self, block_id: str) -> list:
        return sorted(b for b, s in self.support.items() if s == block_id)

    def is_top(self, block_id: str) -> bool:
        return not self.blocks_on(block_id)

    def top_blocks(self) -> list:
        return [b for b in self.ids() if self.is_top(b)]

    def stack_above(self, block_id: str) -> list:
        """Blocks resting on block_id, bottom to top."""
        out = []
        cur = block_id
        while True:
            above = self.blocks_on(cur)
            if not above:
                return out
            cur = above[0]
            out.append(cur)

    def elevation(self, block_id: str) -> float:
        """Height of the block's base above the table."""
        z = 0.0
        cur = self.support[block_id]
        seen = set()
        while cur != TABLE:
            if cur in seen:
                raise ValueError(f"support cycle involving {cur}")
            seen.add(cur)
            z += self.blocks[cur].height
            cur = self.support[cur]
        return z

    def top_elevation(self, block_id: str) -> float:
        return self.elevation(block_id) + self.blocks[block_id].height

    def stack_root(self, block_id: str) -> str:
        cur = block_id
        while self.support[cur] != TABLE:
            cur = self.support[cur]
        return cur

    def top_block_at(self, point, tol: float = 1e-6):
        """Top of the stack whose planar position matches the point, if any."""
        for b in self.ids():
            if self.is_top(b):
                pose = self.blocks[b]
                if abs(pose.x - point[0]) <= tol and abs(pose.y - point[1]) <= tol:
                    return b
        return None

    def stack_height_at(self, point, tol: float = 1e-6) -> int:
        top = self.top_block_at(point, tol)
        if top is None:
            return 0
        return 1 + len(self._chain_below(top))

    def _chain_below(self, block_id: str) -> list:
        out = []
        cur = self.support[block_id]
        while cur != TABLE:
            out.append(cur)
            cur = self.support[cur]
        return out

    def moved(self, block_id: str, point, support_id: str) -> "WorldState":
        """New world with one block teleported to a planar point and support."""
        pose = self.require(block_id)
        blocks = dict(self.blocks)
        blocks[block_id] = pose.moved_to(float(point[0]), float(point[1]))
        support = dict(self.support)
        support[block_id] = support_id
        return WorldState(blocks, support)

    def validate(self, tol: float = 1e-9):
        """Check the forest invariant and table-level footprint separation."""
        for b in self.ids():
            s = self.support[b]
            if s != TABLE and s not in self.blocks:
                raise ValueError(f"{b} supported by unknown {s}")
            self.elevation(b)  # raises on cycles
            if sum(1 for c in self.support.values() if c == b) > 1:
                raise ValueError(f"{b} supports more than one block")
        roots = [b for b in self.ids() if self.on_table(b)]
        for i, b1 in enumerate(roots):
            for b2 in roots[i + 1:]:
                if footprints_overlap(self.blocks[b1], self.blocks[b2], tol):
                    raise ValueError(f"footprints of {b1} and {b2} overlap")

    def fingerprint(self) -> tuple:
        return tuple(
            (b, round(p.x, 12), round(p.y, 12), round(p.theta, 12), self.support[b])
            for b, p in sorted(self.blocks.items())
        )

    def copy(self) -> "WorldState":
        return WorldState(dict(self.blocks), dict(self.support))


def world_distance(w1: WorldState, w2: WorldState) -> float:
    """Largest planar displacement of any shared block between two worlds."""
    d = 0.0
    for b, p in w1.blocks.items():
        if b in w2.blocks:
            q = w2.blocks[b]
            d = max(d, float(np.hypot(p.x - q.x, p.y - q.y)))
    return d
