"""Topology, channel gains, coordinator election, and link rates.

Gains are linear (not dB).  The default propagation model is a pure
distance power law d^(-gamma) with a floor distance below which the
gain is clamped to the floor value.  Powers and noise are watts, rates
bit/s.
"""
from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Iterable, Sequence

import numpy as np

from .errors import ConfigError

IDLE = 0
BUSY = 1


@dataclass(frozen=True)
class Position:
    x: float
    y: float

    def distance_to(self, other: "Position") -> float:
        return math.hypot(self.x - other.x, self.y - other.y)


@dataclass(frozen=True)
class MtcDevice:
    """One machine-type device with its radio and CPU parameters."""

    id: int
    position: Position
    tx_power: float      # W, transmit
    sense_power: float   # W, RB sensing
    cpu: float           # cycles/s, local execution
    packet_size: float   # bits, the per-slot data packet

    def __post_init__(self):
        if self.tx_power <= 0 or self.cpu <= 0 or self.packet_size <= 0:
            raise ConfigError(f"device {self.id}: tx_power, cpu and packet_size must be > 0")
        if self.sense_power < 0:
            raise ConfigError(f"device {self.id}: sense_power must be >= 0")


@dataclass
class VirtualNetwork:
    """One slice: member devices, elected coordinator, and RB partition."""

    id: int
    devices: list[MtcDevice]
    coordinator: int            # device id, member of `devices`
    coordinator_cpu: float      # cycles/s
    mec_cpu: float              # cycles/s
    rb_enb: int                 # RBs for direct eNodeB access
    rb_coord: int               # RBs for coordinator access
    rb_backhaul: int            # dedicated coordinator->eNodeB RBs
    rb_bandwidth_access: float  # Hz per access RB
    rb_bandwidth_backhaul: float  # Hz per backhaul RB
    noise_access: float         # W
    noise_backhaul: float       # W

    def __post_init__(self):
        ids = self.member_ids()
        if self.coordinator not in ids:
            raise ConfigError(f"network {self.id}: coordinator {self.coordinator} is not a member")
        if not (1 <= len(self.devices)):
            raise ConfigError(f"network {self.id}: needs at least one device")
        if self.rb_enb < 0 or self.rb_coord < 0:
            raise ConfigError(f"network {self.id}: RB counts must be >= 0")

    @property
    def rb_total(self) -> int:
        return self.rb_enb + self.rb_coord

    def member_ids(self) -> list[int]:
        return [d.id for d in self.devices]

    def accessor_ids(self) -> list[int]:
        """Members that run the random-access process (everybody but the coordinator)."""
        return [d.id for d in self.devices if d.id != self.coordinator]

    def enb_rbs(self) -> list[int]:
        return list(range(self.rb_enb))

    def coord_rbs(self) -> list[int]:
        return list(range(self.rb_enb, self.rb_total))


@dataclass
class ChannelGains:
    """Linear channel gains; frequency-flat, so one value per link."""

    device_to_device: np.ndarray  # (N, N) symmetric, zero diagonal
    device_to_enb: np.ndarray     # (N,)

    def coord_to_enb(self, coordinator_id: int) -> float:
        """Backhaul gain: the coordinator is a device, the eNodeB is the same endpoint."""
        return float(self.device_to_enb[coordinator_id])


@dataclass
class Scenario:
    inp_count: int
    total_devices: int
    virtual_network_count: int
    networks: list[VirtualNetwork]
    pathloss_exponent: float
    rng_seed: int
    positions: list[Position] = field(default_factory=list)
    gains: ChannelGains | None = None

    def __post_init__(self):
        if self.inp_count < 1 or self.total_devices < 1 or self.virtual_network_count < 1:
            raise ConfigError("scenario counts must be >= 1")
        if sum(len(net.devices) for net in self.networks) > self.total_devices:
            raise ConfigError("slice sizes exceed the total device count")


def derive_gains(scenario: Scenario, positions: Sequence[Position],
                 enb_position: Position = Position(0.0, 0.0),
                 min_distance: float = 1.0) -> ChannelGains:
    """Distance power-law gains for all device pairs and device->eNodeB links.

    gain = max(d, min_distance)^(-pathloss_exponent).  Coincident positions are
    clamped by the floor distance rather than rejected.
    """
    gamma = scenario.pathloss_exponent
    if gamma <= 0:
        raise ConfigError("pathloss_exponent must be > 0")
    if min_distance <= 0:
        raise ConfigError("min_distance must be > 0")
    xy = np.array([(p.x, p.y) for p in positions], dtype=np.float64)
    n = xy.shape[0]
    diff = xy[:, None, :] - xy[None, :, :]
    dist = np.hypot(diff[..., 0], diff[..., 1])
    np.fill_diagonal(dist, min_distance)  # diagonal excluded from any use anyway
    d2d = np.maximum(dist, min_distance) ** (-gamma)
    np.fill_diagonal(d2d, 0.0)
    enb_dist = np.hypot(xy[:, 0] - enb_position.x, xy[:, 1] - enb_position.y)
    d2e = np.maximum(enb_dist, min_distance) ** (-gamma)
    return ChannelGains(device_to_device=d2d, device_to_enb=d2e)


def select_coordinator(gains: ChannelGains, members: Sequence[int]) -> int:
    """Member with the maximum arithmetic mean gain to the other members.

    Singleton slices elect their only member.  Ties go to the lowest device id.
    """
    members = sorted(members)
    if len(members) == 1:
        return members[0]
    best_id = members[0]
    best_mean = -math.inf
    for nx in members:
        total = 0.0
        for ny in members:
            if ny != nx:
                total += float(gains.device_to_device[nx, ny])
        mean = total / (len(members) - 1)
        if mean > best_mean:
            best_mean = mean
            best_id = nx
    return best_id


def uplink_rate(bandwidth: float, tx_power: float, gain: float,
                interferers: Iterable[tuple[float, float]], noise: float,
                rb_busy: bool) -> float:
    """Shannon rate on an access RB; the busy branch adds the interferer sum.

    `interferers` is a sequence of (power, gain) pairs at the receiver and is
    only consulted on the busy branch.
    """
    if bandwidth <= 0:
        raise ConfigError("bandwidth must be > 0")
    if noise <= 0:
        raise ConfigError("noise must be > 0")
    denom = noise
    if rb_busy:
        denom += math.fsum(p * g for p, g in interferers)
    return bandwidth * math.log2(1.0 + tx_power * gain / denom)


def backhaul_rate(bandwidth: float, tx_power: float, gain: float, noise: float) -> float:
    """Coordinator->eNodeB rate on dedicated RBs; interference-free by construction."""
    if bandwidth <= 0:
        raise ConfigError("bandwidth must be > 0")
    if noise <= 0:
        raise ConfigError("noise must be > 0")
    return bandwidth * math.log2(1.0 + tx_power * gain / noise)
