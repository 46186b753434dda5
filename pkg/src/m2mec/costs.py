"""Per-slot latency and energy accounting for each compute placement.

All times are seconds, energies joules.  The scalar slot cost is
zeta * exec_time + eta * energy; the weights carry the unit
normalization between the two.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from enum import IntEnum

from .errors import ConfigError, InfeasibleSlotError

ACCESS_MODE_NONE = "none"
ACCESS_MODE_SENSE = "sense_only"
ACCESS_MODE_TRANSMIT = "sense_and_transmit"


class Placement(IntEnum):
    """Where the computing task runs; values follow the a_c action encoding."""

    LOCAL = 0
    MEC = 1
    COORDINATOR = 2


@dataclass(frozen=True)
class ComputingTask:
    input_bits: float   # data shipped when offloading
    cycles: float       # CPU cycles to execute

    def __post_init__(self):
        if self.input_bits <= 0 or self.cycles <= 0:
            raise ConfigError("task input_bits and cycles must be > 0")


@dataclass(frozen=True)
class CostWeights:
    zeta: float = 0.5                  # weight on execution time
    eta: float = 0.5                   # weight on energy
    sense_time: float = 1e-3           # s spent sensing one RB
    cycle_energy_coeff: float = 2.5e-12  # J/cycle for local execution

    def __post_init__(self):
        if not (0.0 <= self.zeta <= 1.0 and 0.0 <= self.eta <= 1.0):
            raise ConfigError("zeta and eta must lie in [0, 1]")
        if abs(self.zeta + self.eta - 1.0) > 1e-9:
            raise ConfigError(f"zeta + eta must equal 1, got {self.zeta + self.eta}")
        if self.sense_time < 0 or self.cycle_energy_coeff < 0:
            raise ConfigError("sense_time and cycle_energy_coeff must be >= 0")


@dataclass(frozen=True)
class SlotCosts:
    exec_time: float
    energy: float
    scalar_cost: float


def exec_time(placement: Placement, task: ComputingTask, cpu_local: float,
              cpu_coord: float, cpu_mec: float, rate_to_coord: float,
              rate_to_enb: float) -> float:
    """Total task execution time for the chosen placement.

    Remote placements pay the input-data offload time plus the remote
    execution time; the local path is cycles over the local CPU rate.
    """
    if placement == Placement.LOCAL:
        if cpu_local <= 0:
            raise ConfigError("cpu_local must be > 0")
        return task.cycles / cpu_local
    if placement == Placement.COORDINATOR:
        if cpu_coord <= 0:
            raise ConfigError("cpu_coord must be > 0")
        if rate_to_coord <= 0:
            raise InfeasibleSlotError("coordinator placement with zero offload rate")
        return task.input_bits / rate_to_coord + task.cycles / cpu_coord
    if placement == Placement.MEC:
        if cpu_mec <= 0:
            raise ConfigError("cpu_mec must be > 0")
        if rate_to_enb <= 0:
            raise InfeasibleSlotError("MEC placement with zero offload rate")
        return task.input_bits / rate_to_enb + task.cycles / cpu_mec
    raise ConfigError(f"unknown placement {placement!r}")


def tx_time(packet_bits: float, rate: float) -> float:
    """Time to push the data packet at the access link rate."""
    if packet_bits == 0:
        return 0.0
    if rate <= 0:
        raise InfeasibleSlotError("packet transmission with zero rate")
    return packet_bits / rate


def access_energy(mode: str, sense_power: float, tx_power: float,
                  sense_time: float, tx_time: float) -> float:
    """Energy of the access phase: nothing, sensing only, or sensing plus transmission.

    Transmission draws the transmit power; sensing draws the sensing power.
    """
    if min(sense_power, tx_power, sense_time, tx_time) < 0:
        raise ConfigError("powers and times must be >= 0")
    if mode == ACCESS_MODE_NONE:
        return 0.0
    if mode == ACCESS_MODE_SENSE:
        return sense_power * sense_time
    if mode == ACCESS_MODE_TRANSMIT:
        return tx_power * tx_time + sense_power * sense_time
    raise ConfigError(f"unknown access mode {mode!r}")


def compute_energy(placement: Placement, task: ComputingTask,
                   cycle_energy_coeff: float, tx_power: float,
                   rate_to_coord: float, rate_to_enb: float) -> float:
    """Energy the device spends on the computation side of the slot.

    Local runs burn cycle_energy_coeff per cycle; remote placements only pay
    the radio energy of shipping the input data.
    """
    if placement == Placement.LOCAL:
        return cycle_energy_coeff * task.cycles
    if placement == Placement.COORDINATOR:
        if rate_to_coord <= 0:
            raise InfeasibleSlotError("coordinator placement with zero offload rate")
        return tx_power * task.input_bits / rate_to_coord
    if placement == Placement.MEC:
        if rate_to_enb <= 0:
            raise InfeasibleSlotError("MEC placement with zero offload rate")
        return tx_power * task.input_bits / rate_to_enb
    raise ConfigError(f"unknown placement {placement!r}")


def total_energy(access_e: float, compute_e: float) -> float:
    if access_e < 0 or compute_e < 0:
        raise ConfigError("energy components must be >= 0")
    return access_e + compute_e


def slot_cost(weights: CostWeights, exec_time: float, energy: float) -> float:
    return weights.zeta * exec_time + weights.eta * energy


def action_costs(sense: bool, access_target: int, placement: Placement,
                 task: ComputingTask, packet_bits: float, weights: CostWeights,
                 tx_power: float, sense_power: float, cpu_local: float,
                 cpu_coord: float, cpu_mec: float, rate_to_enb: float,
                 rate_to_coord: float, backhaul: float | None = None) -> SlotCosts:
    """Assemble the full slot costs of one composite action.

    access_target: 0 none, 1 eNodeB, 2 coordinator.  Without access the device
    still executes the pending task locally (placement is forced LOCAL by the
    action-consistency rules in that case).  `backhaul`, when given, adds the
    coordinator->eNodeB hop time to coordinator placements.
    """
    t = exec_time(placement, task, cpu_local, cpu_coord, cpu_mec,
                  rate_to_coord, rate_to_enb)
    if placement == Placement.COORDINATOR and backhaul is not None:
        if backhaul <= 0:
            raise InfeasibleSlotError("coordinator backhaul with zero rate")
        t += task.input_bits / backhaul
    if access_target == 1:
        t_tr = tx_time(packet_bits, rate_to_enb)
        mode = ACCESS_MODE_TRANSMIT
    elif access_target == 2:
        t_tr = tx_time(packet_bits, rate_to_coord)
        mode = ACCESS_MODE_TRANSMIT
    else:
        t_tr = 0.0
        mode = ACCESS_MODE_SENSE if sense else ACCESS_MODE_NONE
    e_access = access_energy(mode, sense_power, tx_power, weights.sense_time, t_tr)
    e_compute = compute_energy(placement, task, weights.cycle_energy_coeff,
                               tx_power, rate_to_coord, rate_to_enb)
    energy = total_energy(e_access, e_compute)
    return SlotCosts(exec_time=t, energy=energy,
                     scalar_cost=slot_cost(weights, t, energy))
