"""Threshold-curve solving and channel/qudit allocation search.

Iso-curves answer: given the better channel at ``p2``, how low may the other
channel's ``p1`` drop while the packet still succeeds with probability at
least the target (default 0.995)?  Every evaluator is monotone in ``p1``, so
plain bisection converges; the residual at every reported point is at most
1e-9.

Scenarios bundle an evaluator ``P_S(p1, p2)`` with a descriptor.  In the
two-channel uniform scenario the ``n``-qudit block travels in the adjustable
channel (``p1``) and the remaining ``d - n`` qudits in the reference channel
(``p2``); the closed-form anchor points are only consistent with that
assignment, so it is fixed here rather than left to callers.
"""

from __future__ import annotations

import io
import json
from dataclasses import dataclass, field
from typing import Callable, Sequence

from . import closed_form, engine
from .model import QrsCode, photons_per_qudit

DEFAULT_TARGET = 0.995
DEFAULT_GRID = (0.3, 1.0, 0.002)
RESIDUAL_BOUND = 1e-9
_BISECTION_STEPS = 60


class Infeasible(ValueError):
    """No p1 in [0, 1] reaches the target at the given p2."""


class EmptyCurve(ValueError):
    """Every grid point of a sweep was infeasible."""


@dataclass(frozen=True)
class Scenario:
    """A named two-argument success evaluator."""

    name: str
    evaluate: Callable[[float, float], float]
    photons: int
    qudits: int

    def describe(self) -> dict:
        return {"scenario": self.name, "photons": self.photons, "qudits": self.qudits}


def single_channel_scenario(code: QrsCode, q: int) -> Scenario:
    """All qudits in the adjustable channel; flat in p2."""
    m = photons_per_qudit(code, q)
    return Scenario(
        name=f"single(d={code.d},k={code.k},q={q})",
        evaluate=lambda p1, p2: engine.block_success(code, [(code.d, p1**m)]),
        photons=code.d * m,
        qudits=code.d,
    )


def two_channel_scenario(code: QrsCode, q: int, n: int) -> Scenario:
    """n qudits in the adjustable channel, d - n in the reference channel."""
    if not (0 <= n <= code.d):
        raise ValueError(f"n={n} outside 0..{code.d}")
    m = photons_per_qudit(code, q)
    d = code.d

    def evaluate(p1: float, p2: float) -> float:
        return engine.block_success(code, [(d - n, p2**m), (n, p1**m)])

    return Scenario(
        name=f"uniform(d={d},k={code.k},q={q},n={n})",
        evaluate=evaluate,
        photons=d * m,
        qudits=d,
    )


def shared_photon_7_scenario() -> Scenario:
    """Six photons, seven qudits, one qudit spread over the better channel."""
    return Scenario(
        name="shared7",
        evaluate=lambda p1, p2: closed_form.ps6(p1, p2),
        photons=6,
        qudits=7,
    )


def shared_photon_11_scenario() -> Scenario:
    """Fifteen photons, eleven qudits, mixed multiplexing degrees."""
    return Scenario(
        name="shared11",
        evaluate=lambda p1, p2: closed_form.ps15(p1, p2),
        photons=15,
        qudits=11,
    )


def solve_p1(scenario: Scenario, p2: float, target: float = DEFAULT_TARGET) -> float:
    """Smallest p1 with P_S(p1, p2) >= target, to residual 1e-9.

    Raises :class:`Infeasible` when even p1 = 1 falls short.
    """
    f = scenario.evaluate
    if f(1.0, p2) < target:
        raise Infeasible(f"target {target} unreachable at p2={p2}")
    if f(0.0, p2) >= target:
        return 0.0
    lo, hi = 0.0, 1.0
    for _ in range(_BISECTION_STEPS):
        mid = 0.5 * (lo + hi)
        if f(mid, p2) >= target:
            hi = mid
        else:
            lo = mid
    if abs(f(hi, p2) - target) > RESIDUAL_BOUND:
        raise ArithmeticError(f"bisection residual above {RESIDUAL_BOUND} at p2={p2}")
    return hi


@dataclass(frozen=True)
class ThresholdCurve:
    points: tuple[tuple[float, float], ...]  # (p2, p1), ordered by p2
    target: float
    scenario: dict
    infeasible: tuple[float, ...] = ()

    def to_csv(self, stream: io.TextIOBase) -> None:
        """CSV rows ``p2,p1`` with a descriptor comment header."""
        desc = ",".join(f"{k}={v}" for k, v in sorted(self.scenario.items()))
        stream.write(f"# {desc},target={self.target:.6g},residual<={RESIDUAL_BOUND:g}\n")
        stream.write("p2,p1\n")
        for p2, p1 in self.points:
            stream.write(f"{p2:.6f},{p1:.12f}\n")

    def summary(self) -> dict:
        return {
            "scenario": self.scenario,
            "target": self.target,
            "points": len(self.points),
            "infeasible_points": len(self.infeasible),
            "residual_bound": RESIDUAL_BOUND,
            "p2_range": [self.points[0][0], self.points[-1][0]] if self.points else None,
        }


def grid_points(lo: float, hi: float, step: float) -> list[float]:
    if step <= 0 or hi < lo:
        raise ValueError("grid must be ascending with positive step")
    n = int(round((hi - lo) / step))
    pts = [lo + i * step for i in range(n + 1)]
    return [p for p in pts if p <= hi + 1e-12]


def sweep_curve(
    scenario: Scenario,
    p2_grid: Sequence[float],
    target: float = DEFAULT_TARGET,
) -> ThresholdCurve:
    """Solve p1 at every grid point; infeasible points are reported, not fatal."""
    if list(p2_grid) != sorted(p2_grid):
        raise ValueError("p2 grid must be sorted ascending")
    points = []
    infeasible = []
    for p2 in p2_grid:
        try:
            points.append((p2, solve_p1(scenario, p2, target)))
        except Infeasible:
            infeasible.append(p2)
    if not points:
        raise EmptyCurve(f"no feasible point for target {target}")
    return ThresholdCurve(tuple(points), target, scenario.describe(), tuple(infeasible))


# --- allocation search ---------------------------------------------------------


@dataclass(frozen=True)
class ChannelSpec:
    id: str
    p: float
    capacity: int


@dataclass(frozen=True)
class AllocationProblem:
    channels: tuple[ChannelSpec, ...]
    codes: tuple[QrsCode, ...]
    q: int = 1


@dataclass(frozen=True)
class AllocationResult:
    code: QrsCode
    split: tuple[int, ...]  # qudits per channel, aligned with problem.channels
    achieved: float
    total_qudits: int
    total_photons: int

    def summary(self, problem: AllocationProblem) -> dict:
        return {
            "code": {"d": self.code.d, "k": self.code.k},
            "split": {
                ch.id: count for ch, count in zip(problem.channels, self.split) if count
            },
            "achieved": self.achieved,
            "total_qudits": self.total_qudits,
            "total_photons": self.total_photons,
        }


def _splits(total: int, caps: Sequence[int]):
    """Compositions of ``total`` over the channels, capped, lexicographic."""
    if not caps:
        if total == 0:
            yield ()
        return
    head_max = min(caps[0], total)
    for first in range(0, head_max + 1):
        for rest in _splits(total - first, caps[1:]):
            yield (first,) + rest


def _allocation_success(problem: AllocationProblem, code: QrsCode, split) -> float:
    m = photons_per_qudit(code, problem.q)
    blocks = [(count, ch.p**m) for ch, count in zip(problem.channels, split)]
    return engine.block_success(code, blocks)


def allocate(problem: AllocationProblem, target: float = DEFAULT_TARGET) -> AllocationResult:
    """Minimal feasible allocation: fewest qudits, then photons, then
    lexicographically smallest split.

    Exhaustive over candidate codes and capped per-channel splits of all d
    qudits.  Raises :class:`Infeasible` when nothing reaches the target.
    """
    caps = [ch.capacity for ch in problem.channels]
    ranked = sorted(
        problem.codes, key=lambda c: (c.d, c.d * photons_per_qudit(c, problem.q), c.k)
    )
    for code in ranked:
        if sum(caps) < code.d:
            continue
        for split in _splits(code.d, caps):
            value = _allocation_success(problem, code, split)
            if value >= target:
                return AllocationResult(
                    code=code,
                    split=split,
                    achieved=value,
                    total_qudits=code.d,
                    total_photons=code.d * photons_per_qudit(code, problem.q),
                )
    raise Infeasible(f"no allocation reaches target {target}")


def single_channel_solutions(
    problem: AllocationProblem, target: float = DEFAULT_TARGET
) -> list[tuple[QrsCode, str]]:
    """(code, channel) pairs where one channel alone fits and meets the target."""
    out = []
    for code in sorted(problem.codes, key=lambda c: c.d):
        for ch in problem.channels:
            if code.d <= ch.capacity:
                m = photons_per_qudit(code, problem.q)
                if engine.block_success(code, [(code.d, ch.p**m)]) >= target:
                    out.append((code, ch.id))
    return out
