"""Per-node scalar fields on the recombining lattice.

Level ``n`` of a lattice holds ``n + 1`` values indexed by the up-move count
``j``; node ``(n, j)`` has children ``(n+1, j+1)`` (up) and ``(n+1, j)``
(down).  Arrays are frozen after construction so lattices can be shared
freely across threads.
"""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import MalformedLattice, NodeOutOfRange
from .model import ModelParams

NO_FLOOR = float("-inf")


def _freeze_levels(levels) -> tuple[np.ndarray, ...]:
    frozen = []
    for n, level in enumerate(levels):
        arr = np.array(level, dtype=float)
        if arr.shape != (n + 1,):
            raise MalformedLattice(
                f"level {n} must hold {n + 1} values, got shape {arr.shape}"
            )
        arr.flags.writeable = False
        frozen.append(arr)
    if not frozen:
        raise MalformedLattice("a lattice needs at least the root level")
    return tuple(frozen)


@dataclass(frozen=True, eq=False)
class ValueLattice:
    """Scalar value per node, with optional per-node exercise flags."""

    levels: tuple[np.ndarray, ...]
    exercise: tuple[np.ndarray, ...] | None = None

    def __post_init__(self) -> None:
        object.__setattr__(self, "levels", _freeze_levels(self.levels))
        if self.exercise is not None:
            flags = []
            for n, level in enumerate(self.exercise):
                arr = np.array(level, dtype=bool)
                if arr.shape != (n + 1,):
                    raise MalformedLattice(
                        f"exercise level {n} must hold {n + 1} flags"
                    )
                arr.flags.writeable = False
                flags.append(arr)
            if len(flags) != len(self.levels):
                raise MalformedLattice("exercise flags must cover every level")
            object.__setattr__(self, "exercise", tuple(flags))

    @property
    def n_periods(self) -> int:
        return len(self.levels) - 1

    @property
    def root(self) -> float:
        return float(self.levels[0][0])

    def _check(self, time: int, up_count: int) -> None:
        if not (0 <= time <= self.n_periods and 0 <= up_count <= time):
            raise NodeOutOfRange(
                f"node (time={time}, up_count={up_count}) is not on the lattice"
            )

    def value(self, time: int, up_count: int) -> float:
        self._check(time, up_count)
        return float(self.levels[time][up_count])

    def exercise_at(self, time: int, up_count: int) -> bool | None:
        self._check(time, up_count)
        if self.exercise is None:
            return None
        return bool(self.exercise[time][up_count])

    def iter_nodes(self):
        """Yield (time, up_count, value) by time, then up_count descending."""
        for time, level in enumerate(self.levels):
            for j in range(time, -1, -1):
                yield time, j, float(level[j])


@dataclass(frozen=True, eq=False)
class FloorLattice:
    """One floor value per node; ``NO_FLOOR`` (-inf) marks unconstrained nodes."""

    levels: tuple[np.ndarray, ...]

    def __post_init__(self) -> None:
        checked = []
        for n, level in enumerate(self.levels):
            arr = np.array(level, dtype=float)
            if arr.shape != (n + 1,):
                raise MalformedLattice(
                    f"floor level {n} must hold {n + 1} values, got shape {arr.shape}"
                )
            if np.any(np.isnan(arr)) or np.any(arr == np.inf):
                raise MalformedLattice("floors must be finite or NO_FLOOR")
            arr.flags.writeable = False
            checked.append(arr)
        if not checked:
            raise MalformedLattice("a floor lattice needs at least the root level")
        object.__setattr__(self, "levels", tuple(checked))

    @classmethod
    def from_levels(cls, levels) -> "FloorLattice":
        return cls(tuple(levels))

    @classmethod
    def constant(cls, value: float, n_periods: int) -> "FloorLattice":
        return cls(tuple(np.full(n + 1, value) for n in range(n_periods + 1)))

    @classmethod
    def terminal(cls, leaf_values) -> "FloorLattice":
        """Floors only at the final time; interior nodes unconstrained."""
        leaves = np.asarray(leaf_values, dtype=float)
        n_periods = leaves.shape[0] - 1
        levels = [np.full(n + 1, NO_FLOOR) for n in range(n_periods)]
        levels.append(leaves)
        return cls(tuple(levels))

    @classmethod
    def from_function(cls, n_periods: int, fn) -> "FloorLattice":
        """Build from ``fn(time, up_count) -> float | None`` (None = no floor)."""
        levels = []
        for n in range(n_periods + 1):
            row = [fn(n, j) for j in range(n + 1)]
            levels.append([NO_FLOOR if v is None else float(v) for v in row])
        return cls(tuple(np.asarray(lv) for lv in levels))

    @property
    def n_periods(self) -> int:
        return len(self.levels) - 1

    def floor(self, time: int, up_count: int) -> float:
        if not (0 <= time <= self.n_periods and 0 <= up_count <= time):
            raise NodeOutOfRange(
                f"node (time={time}, up_count={up_count}) is not on the lattice"
            )
        return float(self.levels[time][up_count])

    def has_floor(self, time: int, up_count: int) -> bool:
        return self.floor(time, up_count) != NO_FLOOR


def asset_lattice(params: ModelParams) -> ValueLattice:
    """Asset prices at every node: s0 * u**j * d**(n-j)."""
    levels = []
    for n in range(params.n_periods + 1):
        j = np.arange(n + 1)
        levels.append(params.s0 * params.u**j * params.d ** (n - j))
    return ValueLattice(tuple(levels))
