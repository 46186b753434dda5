"""RB occupancy process, composite actions, observations, and Bayes filtering.

Each RB is an independent two-state Markov chain (0 idle, 1 busy) observed
through a noisy sensor.  Beliefs are per-RB probabilities of idle, which is
exact because chains are independent and at most one RB is sensed per slot.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

import numpy as np

from .channel import BUSY, IDLE
from .errors import ConfigError, DegenerateUpdateError

SENSE_NONE = -1
ACCESS_NONE = 0
ACCESS_ENB = 1
ACCESS_COORD = 2
COMPUTE_LOCAL = 0
COMPUTE_MEC = 1
COMPUTE_COORD = 2


@dataclass(frozen=True)
class RbProcess:
    """Two-state chain plus the sensing error rates nu (sensed) and omega (unsensed)."""

    p_stay_idle: float = 0.8
    p_idle_to_busy: float = 0.2
    p_busy_to_idle: float = 0.85
    p_stay_busy: float = 0.15
    false_obs_sensed: float = 0.1
    false_obs_unsensed: float = 0.1

    def __post_init__(self):
        for name in ("p_stay_idle", "p_idle_to_busy", "p_busy_to_idle", "p_stay_busy"):
            v = getattr(self, name)
            if not (0.0 <= v <= 1.0):
                raise ConfigError(f"{name} must lie in [0, 1]")
        if abs(self.p_stay_idle + self.p_idle_to_busy - 1.0) > 1e-9:
            raise ConfigError("idle-row transition probabilities must sum to 1")
        if abs(self.p_busy_to_idle + self.p_stay_busy - 1.0) > 1e-9:
            raise ConfigError("busy-row transition probabilities must sum to 1")
        if not (0.0 <= self.false_obs_sensed < 1.0 and 0.0 <= self.false_obs_unsensed < 1.0):
            raise ConfigError("false observation probabilities must lie in [0, 1)")

    def stationary_idle(self) -> float:
        denom = self.p_busy_to_idle + self.p_idle_to_busy
        if denom == 0.0:  # two absorbing states; convention: stay where you are
            return 1.0
        return self.p_busy_to_idle / denom


@dataclass(frozen=True)
class CompositeAction:
    """(sense, access, compute) choice for one slot.

    sense is an RB index or SENSE_NONE; access and compute use the 0/1/2
    encodings above.  Consistency: access needs sensing, MEC compute needs
    eNodeB access, coordinator compute needs coordinator access.
    """

    sense: int = SENSE_NONE
    access: int = ACCESS_NONE
    compute: int = COMPUTE_LOCAL

    def __post_init__(self):
        if self.access not in (ACCESS_NONE, ACCESS_ENB, ACCESS_COORD):
            raise ConfigError(f"invalid access value {self.access}")
        if self.compute not in (COMPUTE_LOCAL, COMPUTE_MEC, COMPUTE_COORD):
            raise ConfigError(f"invalid compute value {self.compute}")
        if self.access != ACCESS_NONE and self.sense == SENSE_NONE:
            raise ConfigError("cannot access without sensing an RB")
        if self.compute == COMPUTE_MEC and self.access != ACCESS_ENB:
            raise ConfigError("MEC compute requires eNodeB access")
        if self.compute == COMPUTE_COORD and self.access != ACCESS_COORD:
            raise ConfigError("coordinator compute requires coordinator access")

    @property
    def senses(self) -> bool:
        return self.sense != SENSE_NONE

    @property
    def accesses(self) -> bool:
        return self.access != ACCESS_NONE


SLEEP = CompositeAction()


@dataclass(frozen=True)
class Observation:
    """Sensed-RB outcome for one slot; only the sensed RB is observed."""

    rb: int
    state: int  # IDLE or BUSY

    def __post_init__(self):
        if self.state not in (IDLE, BUSY):
            raise ConfigError(f"invalid observed state {self.state}")


def predict(belief_r: float, proc: RbProcess) -> float:
    """One-step prior: probability the RB is idle after one chain transition."""
    return belief_r * proc.p_stay_idle + (1.0 - belief_r) * proc.p_busy_to_idle


def observation_prob(proc: RbProcess, sensed: bool, true_state: int, obs: int) -> float:
    """Probability of observing `obs` given the true state.

    Sensing is a binary symmetric channel with error rate nu.  Without
    sensing the distribution is state-independent (omega for idle), which
    makes unsensed observations carry no information.
    """
    if sensed:
        return 1.0 - proc.false_obs_sensed if obs == true_state else proc.false_obs_sensed
    return proc.false_obs_unsensed if obs == IDLE else 1.0 - proc.false_obs_unsensed


def bayes_posterior(belief_r: float, proc: RbProcess, obs_state: int) -> float:
    """Predict one step, then condition on a sensed observation of the new state."""
    prior = predict(belief_r, proc)
    like_idle = observation_prob(proc, True, IDLE, obs_state)
    like_busy = observation_prob(proc, True, BUSY, obs_state)
    denom = prior * like_idle + (1.0 - prior) * like_busy
    if denom <= 0.0:
        raise DegenerateUpdateError(
            f"observation {obs_state} impossible under prior {belief_r}")
    return prior * like_idle / denom


def belief_update(belief: np.ndarray, action: CompositeAction,
                  obs: Observation | None,
                  procs: Sequence[RbProcess]) -> np.ndarray:
    """Bayes update of the full belief vector after one slot.

    Unsensed RBs reduce to the one-step prediction (the state-independent
    observation term cancels); the sensed RB is conditioned on its observation.
    """
    if action.senses:
        if obs is None or obs.rb != action.sense:
            raise ConfigError("observation must be present and match the sensed RB")
    elif obs is not None:
        raise ConfigError("observation present without a sensing action")
    out = np.empty(len(procs), dtype=np.float64)
    for r, proc in enumerate(procs):
        if action.senses and r == action.sense:
            out[r] = bayes_posterior(float(belief[r]), proc, obs.state)
        else:
            out[r] = predict(float(belief[r]), proc)
    return out


def enumerate_actions(net_or_rb_count) -> list[CompositeAction]:
    """All consistent composite actions: 1 + 5 * R_g of them.

    Per RB: sense only, access eNodeB computing locally or on MEC, access
    the coordinator computing locally or on the coordinator.
    """
    rb_count = getattr(net_or_rb_count, "rb_total", net_or_rb_count)
    actions = [SLEEP]
    for r in range(rb_count):
        actions.append(CompositeAction(sense=r))
        actions.append(CompositeAction(sense=r, access=ACCESS_ENB, compute=COMPUTE_LOCAL))
        actions.append(CompositeAction(sense=r, access=ACCESS_ENB, compute=COMPUTE_MEC))
        actions.append(CompositeAction(sense=r, access=ACCESS_COORD, compute=COMPUTE_LOCAL))
        actions.append(CompositeAction(sense=r, access=ACCESS_COORD, compute=COMPUTE_COORD))
    return actions
