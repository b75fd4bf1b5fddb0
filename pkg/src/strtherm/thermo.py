"""Thermodynamic quantities of a distance ensemble.

Each observation is treated as a particle of mass nbits whose momentum
is its deviation from the mean distance; energy is momentum squared over
twice the mass.  Observed quantities (internal energy, two-part entropy)
come straight from the histogram; equilibrium quantities come in closed
form from the partition function of the fitted normal model, which is a
one-dimensional Maxwell-Boltzmann gas.

Units: the two per-particle entropies are in bits; the whole-ensemble
entropy is in nats; temperature, energies and pressure are
dimensionless.  Boltzmann weights follow the standard exp(-E/T)
convention throughout.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import NamedTuple

from .ensemble import SELF_MODE, Histogram, without_self_match
from .equilibrium import EquilibriumModel, fit, fit_quality
from .errors import DegenerateModel

_LOG2_E = math.log2(math.e)


def momentum(c: float, mean_distance: float) -> float:
    """Particle momentum: deviation of a distance from the ensemble mean."""
    return c - mean_distance


def energy_level(c: float, mean_distance: float, nbits: int) -> float:
    """Energy of a distance value: momentum squared over twice the mass."""
    p = c - mean_distance
    return (p * p) / (2.0 * nbits)


def internal_energy(h: Histogram, mean_distance: float) -> float:
    """Average per-particle internal energy over the histogram."""
    total = 0.0
    for c, count in h.entries:
        total += count * energy_level(c, mean_distance, h.nbits)
    return total / h.n_obs


def entropy(h: Histogram) -> tuple[float, float]:
    """Two-part per-particle entropy in bits: (thermodynamic, microstate).

    The thermodynamic part is the log-multinomial of the occupation
    counts; the microstate part counts the bit arrangements realizing
    each distance, including one extra bit for the two set-bit counts
    that realize the same distance.  Their sum is the total entropy
    log2(Omega) / n_obs.
    """
    n = h.n_obs
    m = h.nbits
    occupation = math.lgamma(n + 1)
    arrangements = 0.0
    for c, count in h.entries:
        occupation -= math.lgamma(count + 1)
        arrangements += count * (
            math.lgamma(m + 1) - math.lgamma(c + 1) - math.lgamma(m - c + 1)
        )
    s_thermo = _LOG2_E / n * occupation
    s_micro = 1.0 + _LOG2_E / n * arrangements
    return s_thermo, s_micro


def partition_function(nbits: int, temperature: float) -> float:
    """Partition function sum(exp(-E/T)) in closed form: sqrt(pi*nbits*T/2)."""
    if temperature <= 0.0:
        raise DegenerateModel("partition function needs temperature > 0")
    return math.sqrt(math.pi * nbits * temperature / 2.0)


def equilibrium_internal_energy(temperature: float) -> float:
    """Equilibrium energy per particle, T/2 for the one-dimensional gas."""
    return temperature / 2.0


def equilibrium_entropy(
    nbits: int, temperature: float, mean_distance: float
) -> tuple[float, float]:
    """Equilibrium entropies: (thermodynamic bits/particle, microstate bits/bit).

    The microstate part is the binary entropy of the mean density, i.e.
    1.0 exactly at density one half.
    """
    if temperature <= 0.0 or not 0.0 < mean_distance < nbits:
        raise DegenerateModel("equilibrium entropy needs T > 0 and 0 < mean < nbits")
    s_thermo_eq = 0.5 * math.log2(math.pi * math.e * nbits * temperature / 2.0)
    density = mean_distance / nbits
    s_micro_eq_per_bit = -(
        density * math.log2(density) + (1.0 - density) * math.log2(1.0 - density)
    )
    return s_thermo_eq, s_micro_eq_per_bit


class EnsembleThermo(NamedTuple):
    entropy_nats: float
    free_energy: float
    pressure: float
    volume: float


def ensemble_thermo(n_obs: int, nbits: int, temperature: float) -> EnsembleThermo:
    """Whole-ensemble entropy (nats), free energy, pressure and volume.

    Volume is sqrt(nbits); pressure times volume equals n_obs times
    temperature, the ideal-gas relation.
    """
    if temperature <= 0.0:
        raise DegenerateModel("ensemble thermodynamics need temperature > 0")
    volume = math.sqrt(nbits)
    s_nats = (n_obs / 2.0) * math.log(math.pi * math.e * nbits * temperature / 2.0)
    free_energy = -(n_obs * temperature / 2.0) * math.log(
        math.pi * nbits * temperature / 2.0
    )
    pressure = n_obs * temperature / volume
    return EnsembleThermo(s_nats, free_energy, pressure, volume)


@dataclass(frozen=True)
class ThermoReport:
    """Observed and equilibrium thermodynamic quantities for one input.

    Equilibrium fields are None for degenerate inputs (all bits equal):
    those carry temperature 0, zero internal energy, zero thermodynamic
    entropy and exactly one microstate bit per particle.
    """

    temperature: float
    internal_energy: float
    internal_energy_eq: float | None
    entropy_thermo: float
    entropy_thermo_eq: float | None
    entropy_micro: float
    entropy_micro_per_bit: float
    entropy_micro_eq_per_bit: float | None
    partition_fn: float | None
    entropy_nats: float | None
    free_energy: float | None
    pressure: float | None
    volume: float
    degenerate: bool
    fit_quality: float | None
    nbits: int
    n_obs: int


def build_report(h: Histogram, model: EquilibriumModel | None = None) -> ThermoReport:
    """Run the full observed + equilibrium computation for one histogram.

    The model (mean, density, temperature) is fitted over every
    observation; the observed averages then exclude the shift-0
    self-comparison in self mode, which is no proper particle and would
    otherwise dominate the internal energy.
    """
    if model is None:
        model = fit(h)
    mean = model.mean_distance
    obs = without_self_match(h) if h.mode == SELF_MODE else h
    if obs.n_obs > 0:
        u_bar = internal_energy(obs, mean)
        s_thermo, s_micro = entropy(obs)
    else:
        # a single-observation ensemble holds only the self-match
        u_bar, s_thermo, s_micro = 0.0, 0.0, 1.0
    t = model.temperature
    volume = math.sqrt(h.nbits)
    if model.degenerate:
        return ThermoReport(
            temperature=0.0,
            internal_energy=u_bar,
            internal_energy_eq=None,
            entropy_thermo=s_thermo,
            entropy_thermo_eq=None,
            entropy_micro=s_micro,
            entropy_micro_per_bit=s_micro / h.nbits,
            entropy_micro_eq_per_bit=None,
            partition_fn=None,
            entropy_nats=None,
            free_energy=None,
            pressure=None,
            volume=volume,
            degenerate=True,
            fit_quality=None,
            nbits=h.nbits,
            n_obs=h.n_obs,
        )
    s_thermo_eq, s_micro_eq_per_bit = equilibrium_entropy(h.nbits, t, mean)
    whole = ensemble_thermo(h.n_obs, h.nbits, t)
    return ThermoReport(
        temperature=t,
        internal_energy=u_bar,
        internal_energy_eq=equilibrium_internal_energy(t),
        entropy_thermo=s_thermo,
        entropy_thermo_eq=s_thermo_eq,
        entropy_micro=s_micro,
        entropy_micro_per_bit=s_micro / h.nbits,
        entropy_micro_eq_per_bit=s_micro_eq_per_bit,
        partition_fn=partition_function(h.nbits, t),
        entropy_nats=whole.entropy_nats,
        free_energy=whole.free_energy,
        pressure=whole.pressure,
        volume=whole.volume,
        degenerate=False,
        fit_quality=fit_quality(obs, model),
        nbits=h.nbits,
        n_obs=h.n_obs,
    )


# stable wire field order for JSON and CSV renderings
_REPORT_FIELDS = (
    ("t", "temperature"),
    ("u_bar", "internal_energy"),
    ("u_bar_eq", "internal_energy_eq"),
    ("s_thermo", "entropy_thermo"),
    ("s_thermo_eq", "entropy_thermo_eq"),
    ("s_micro_per_bit", "entropy_micro_per_bit"),
    ("s_micro_eq_per_bit", "entropy_micro_eq_per_bit"),
    ("z", "partition_fn"),
    ("s_nats", "entropy_nats"),
    ("f", "free_energy"),
    ("p", "pressure"),
    ("v", "volume"),
    ("degenerate", "degenerate"),
    ("fit_quality", "fit_quality"),
)


def report_to_dict(report: ThermoReport) -> dict:
    """The stable JSON field set, in fixed order."""
    return {key: getattr(report, attr) for key, attr in _REPORT_FIELDS}


def report_to_csv(report: ThermoReport) -> str:
    """One header row plus one value row; None renders as an empty cell."""
    header = ",".join(key for key, _ in _REPORT_FIELDS)
    cells = []
    for _, attr in _REPORT_FIELDS:
        value = getattr(report, attr)
        if value is None:
            cells.append("")
        elif isinstance(value, bool):
            cells.append("true" if value else "false")
        else:
            cells.append(repr(value))
    return header + "\n" + ",".join(cells) + "\n"
