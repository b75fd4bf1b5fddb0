"""Shift-XOR ensembles and the observed distance histograms they reduce to.

An ensemble is the ordered sequence of Hamming distances between a source
string and its cyclic shifts (self mode), or between the periodic
extensions of two source strings with one of them rotated (pair mode).
"""

from __future__ import annotations

import json
from collections import Counter
from dataclasses import dataclass
from math import lcm

from .bitstring import BitString
from .errors import InvalidEnsembleSize, PairTooLarge

SELF_MODE = "self"
PAIR_MODE = "pair"

# cap on the lcm extension of a pair; coprime lengths can explode it
DEFAULT_PAIR_CAP_BITS = 1 << 26


@dataclass(frozen=True)
class Ensemble:
    """Ordered distance observations plus their provenance.

    ``nbits`` is the particle mass: the source bit length in self mode,
    the lcm of both lengths in pair mode.  ``max_distance`` is the hard
    upper bound on any observation (2 * min(ones, nbits - ones) in self
    mode).
    """

    values: tuple[int, ...]
    nbits: int
    mode: str
    max_distance: int

    @property
    def n_obs(self) -> int:
        return len(self.values)

    @property
    def full(self) -> bool:
        """True when every shift 0..nbits-1 was observed."""
        return len(self.values) == self.nbits


@dataclass(frozen=True)
class Histogram:
    """Distinct distance values with occurrence counts, sorted ascending."""

    entries: tuple[tuple[int, int], ...]
    n_obs: int
    nbits: int
    max_distance: int
    mode: str = SELF_MODE


def build_self_ensemble(b: BitString, n_shifts: int) -> Ensemble:
    """Distances between ``b`` and each of its first ``n_shifts`` cyclic shifts."""
    m = b.nbits
    if not 1 <= n_shifts <= m:
        raise InvalidEnsembleSize(
            f"ensemble size must be in [1, {m}], got {n_shifts}"
        )
    value = b.value
    mask = (1 << m) - 1
    vals = [0] * n_shifts
    if n_shifts == m:
        # shifting by n and by m-n mismatches the same bit pairs, so only
        # half the shifts need the kernel
        for n in range(1, m // 2 + 1):
            rot = ((value << n) | (value >> (m - n))) & mask
            d = (value ^ rot).bit_count()
            vals[n] = d
            vals[m - n] = d
    else:
        for n in range(1, n_shifts):
            rot = ((value << n) | (value >> (m - n))) & mask
            vals[n] = (value ^ rot).bit_count()
    return Ensemble(tuple(vals), m, SELF_MODE, 2 * min(b.ones, m - b.ones))


def build_pair_ensemble(
    a: BitString,
    b: BitString,
    n_shifts: int,
    max_bits: int = DEFAULT_PAIR_CAP_BITS,
) -> Ensemble:
    """Distances between the lcm-length extensions of ``a`` and rotated ``b``.

    Both strings are repeated cyclically out to lcm(a.nbits, b.nbits);
    observation n XORs the extension of ``a`` with the extension of ``b``
    advanced by n bits.  With a == b this reduces exactly to the self
    ensemble.
    """
    length = lcm(a.nbits, b.nbits)
    if length > max_bits:
        raise PairTooLarge(
            f"lcm({a.nbits}, {b.nbits}) = {length} bits exceeds the cap of {max_bits}"
        )
    if not 1 <= n_shifts <= length:
        raise InvalidEnsembleSize(
            f"ensemble size must be in [1, {length}], got {n_shifts}"
        )
    a_ext = _tile(a, length)
    b_ext = _tile(b, length)
    mask = (1 << length) - 1
    vals = [0] * n_shifts
    for n in range(n_shifts):
        # rotating the extension by n equals extending b rotated by n,
        # because b.nbits divides the extension length
        rot = ((b_ext << n) | (b_ext >> (length - n))) & mask if n else b_ext
        vals[n] = (a_ext ^ rot).bit_count()
    ones_a = a.ones * (length // a.nbits)
    ones_b = b.ones * (length // b.nbits)
    max_distance = min(ones_a + ones_b, 2 * length - ones_a - ones_b)
    return Ensemble(tuple(vals), length, PAIR_MODE, max_distance)


def _tile(b: BitString, length: int) -> int:
    """Integer value of ``b`` repeated out to ``length`` bits."""
    # multiplying by the comb 0b0..010..010..01 places one copy per period
    return b.value * (((1 << length) - 1) // ((1 << b.nbits) - 1))


def histogram(e: Ensemble) -> Histogram:
    """Group equal observations; entry order is ascending distance."""
    counts = Counter(e.values)
    entries = tuple(sorted(counts.items()))
    return Histogram(entries, len(e.values), e.nbits, e.max_distance, e.mode)


def without_self_match(h: Histogram) -> Histogram:
    """Drop one zero-distance count: the shift-0 comparison of a string
    with itself.

    That observation is present in every self ensemble and sits half the
    string length away from the mean, so its quadratic energy would add
    a constant 1/8 to the internal energy of even a perfectly random
    string.  Reported thermodynamic quantities therefore average over
    the remaining, proper observations; the ensemble mean (and with it
    density and temperature) keeps all observations so the exact mean
    identity still holds.  Returns ``h`` unchanged when there is no
    zero-distance entry.
    """
    if not h.entries or h.entries[0][0] != 0:
        return h
    zero_count = h.entries[0][1]
    if zero_count > 1:
        entries = ((0, zero_count - 1),) + h.entries[1:]
    else:
        entries = h.entries[1:]
    return Histogram(entries, h.n_obs - 1, h.nbits, h.max_distance, h.mode)


def ensemble_mean(h: Histogram) -> float:
    """Average observed distance, sum(count * distance) / n_obs."""
    if h.n_obs < 1:
        raise InvalidEnsembleSize("histogram has no observations")
    return sum(c * n for c, n in h.entries) / h.n_obs


def histogram_to_csv(h: Histogram) -> str:
    """CSV rendering with header ``C,N_count`` (the distribution dots)."""
    lines = ["C,N_count"]
    lines.extend(f"{c},{n}" for c, n in h.entries)
    return "\n".join(lines) + "\n"


def histogram_to_json(h: Histogram) -> str:
    """JSON array of {"c": distance, "n": count} objects."""
    return json.dumps([{"c": c, "n": n} for c, n in h.entries])
