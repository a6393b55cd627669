"""Binomial market model: parameters, node addressing, arbitrage detection.

The market has one risky asset and a bank account.  Each period the asset
price is multiplied by ``u`` (up) or ``d`` (down) while bank balances grow
by ``1 + r``.  States live on a recombining lattice: the node reached after
``n`` periods and ``j`` up-moves has asset price ``s0 * u**j * d**(n-j)``,
regardless of the order of the moves.
"""
from __future__ import annotations

import math
from dataclasses import dataclass

from .errors import ArbitrageModel, InvalidModel, InvalidPath, NodeOutOfRange


@dataclass(frozen=True)
class ModelParams:
    """A validated binomial market.

    Construction enforces the solvability conditions (``s0 > 0``, ``u > d``,
    ``r > -1``), which make every one-step replication problem uniquely
    solvable.  The stricter no-arbitrage condition ``0 < d < 1 + r < u`` is
    exposed as the ``arbitrage_free`` flag and is *not* required here, so
    arbitrage-admitting markets can be represented and analysed.
    """

    s0: float
    u: float
    d: float
    r: float
    n_periods: int

    def __post_init__(self) -> None:
        for name in ("s0", "u", "d", "r"):
            value = getattr(self, name)
            if not math.isfinite(value):
                raise InvalidModel(f"{name} must be finite, got {value!r}")
        if not self.s0 > 0:
            raise InvalidModel(f"s0 must be positive, got {self.s0!r}")
        if not self.u > self.d:
            raise InvalidModel(f"u must exceed d, got u={self.u!r}, d={self.d!r}")
        if not self.r > -1:
            raise InvalidModel(f"r must exceed -1, got {self.r!r}")
        if not isinstance(self.n_periods, int) or self.n_periods < 0:
            raise InvalidModel(
                f"n_periods must be a non-negative integer, got {self.n_periods!r}"
            )

    @property
    def growth(self) -> float:
        """Per-period bank growth factor 1 + r."""
        return 1.0 + self.r

    @property
    def q(self) -> float:
        """Risk-neutral up-weight (1 + r - d) / (u - d).

        Satisfies q*u + (1-q)*d = 1 + r; lies strictly inside (0, 1) exactly
        when d < 1 + r < u.
        """
        return (1.0 + self.r - self.d) / (self.u - self.d)

    @property
    def arbitrage_free(self) -> bool:
        """True when 0 < d < 1 + r < u (strict inequalities)."""
        return 0.0 < self.d < 1.0 + self.r < self.u


def validate_model(s0, u, d, r, n_periods) -> ModelParams:
    """Build a ModelParams from raw fields, rejecting unsolvable models."""
    n = int(n_periods)
    if n != n_periods:
        raise InvalidModel(f"n_periods must be an integer, got {n_periods!r}")
    return ModelParams(float(s0), float(u), float(d), float(r), n)


@dataclass(frozen=True)
class NodeId:
    """Address of a lattice node: ``time`` steps elapsed, ``up_count`` up-moves."""

    time: int
    up_count: int

    def __post_init__(self) -> None:
        if self.time < 0 or not 0 <= self.up_count <= self.time:
            raise NodeOutOfRange(
                f"node (time={self.time}, up_count={self.up_count}) is not on the lattice"
            )

    def up(self) -> "NodeId":
        return NodeId(self.time + 1, self.up_count + 1)

    def down(self) -> "NodeId":
        return NodeId(self.time + 1, self.up_count)


def asset_price(params: ModelParams, node: NodeId) -> float:
    """Asset price at a node: s0 * u**j * d**(n-j)."""
    if node.time > params.n_periods:
        raise NodeOutOfRange(
            f"node time {node.time} exceeds the model horizon {params.n_periods}"
        )
    j = node.up_count
    return params.s0 * params.u**j * params.d ** (node.time - j)


@dataclass(frozen=True)
class ArbitrageWitness:
    """A zero-cost portfolio proving an arbitrage.

    ``shares * s0 + bank == 0`` holds exactly, and the two one-period values
    are both non-negative with at least one strictly positive.
    """

    shares: float
    bank: float
    v1_up: float
    v1_down: float


def no_arbitrage_violation(params: ModelParams) -> str | None:
    """Describe how the model breaks 0 < d < 1+r < u, or None if it doesn't."""
    g = params.growth
    if params.d >= g:
        return (
            f"d={params.d!r} >= 1+r={g!r}: the asset return dominates the bank "
            "in every state"
        )
    if params.u <= g:
        return (
            f"u={params.u!r} <= 1+r={g!r}: the bank dominates the asset return "
            "in every state"
        )
    if params.d <= 0:
        return f"d={params.d!r} <= 0: a down move does not keep the price positive"
    return None


def find_arbitrage(params: ModelParams) -> ArbitrageWitness | None:
    """Construct a zero-cost arbitrage portfolio, or None when none exists.

    When ``d >= 1+r`` the asset dominates cash, so holding one share financed
    by a loan (shares=+1) is an arbitrage.  When ``u <= 1+r`` cash dominates,
    so a short share with the proceeds banked (shares=-1) is one.  The scale
    is normalized to one share.

    A witness exists if and only if one of those rate dominances holds.  In
    particular, a model with ``d <= 0 < 1+r < u`` is flagged as not
    arbitrage-free (price positivity fails) yet admits no zero-cost portfolio
    with the required sign pattern; None is returned for it.
    """
    g = params.growth
    s0 = params.s0
    if params.d >= g:
        shares, bank = 1.0, -s0
    elif params.u <= g:
        shares, bank = -1.0, s0
    else:
        return None
    v_up = shares * params.u * s0 + bank * g
    v_down = shares * params.d * s0 + bank * g
    if v_up == 0.0 and v_down == 0.0:
        # u and d both indistinguishable from 1+r at float resolution: the
        # asset is effectively constant and the portfolio proves nothing.
        return None
    return ArbitrageWitness(shares=shares, bank=bank, v1_up=v_up, v1_down=v_down)


def require_arbitrage_free(params: ModelParams) -> None:
    """Raise ArbitrageModel (with a witness when one exists) unless the flag holds."""
    reason = no_arbitrage_violation(params)
    if reason is not None:
        raise ArbitrageModel(reason, witness=find_arbitrage(params))


def parse_moves(path) -> tuple[str, ...]:
    """Normalize a move sequence ('u'/'d' tokens, e.g. "udu" or ["u","d"])."""
    moves = []
    for token in path:
        t = str(token).strip().lower()
        if t not in ("u", "d"):
            raise InvalidPath(f"path token {token!r} is not 'u' or 'd'")
        moves.append(t)
    return tuple(moves)
