"""Problem data for ground-station selection and its seeded random generator.

Random instances are drawn from a PCG64 bit stream seeded through numpy's
``SeedSequence``. Only the raw 64-bit outputs are used; the conversion to
floats is done here (top 53 bits scaled by 2**-53), so an instance depends on
nothing but the PCG64 algorithm and the seed, not on numpy's distribution code.
"""
from __future__ import annotations

import json
from dataclasses import dataclass
from os import PathLike
from typing import Sequence

import numpy as np

from gsselect.errors import ParameterError

FORMAT_VERSION = 1


def _readonly(a: np.ndarray) -> np.ndarray:
    a = np.array(a, dtype=np.float64, copy=True)
    a.setflags(write=False)
    return a


@dataclass(frozen=True, eq=False)
class ProblemInstance:
    """Outage probabilities of K candidate stations over T periods.

    ``outage[k, t]`` is the outage probability of station k in period t and
    ``required_outage[t]`` the largest admissible system outage in period t.
    """

    num_stations: int
    num_periods: int
    outage: np.ndarray
    required_outage: np.ndarray

    def __post_init__(self):
        if not isinstance(self.num_stations, (int, np.integer)) or self.num_stations < 1:
            raise ParameterError(f"num_stations: must be a positive integer, got {self.num_stations!r}")
        if not isinstance(self.num_periods, (int, np.integer)) or self.num_periods < 1:
            raise ParameterError(f"num_periods: must be a positive integer, got {self.num_periods!r}")
        try:
            outage = _readonly(self.outage)
            req = _readonly(self.required_outage)
        except (TypeError, ValueError) as exc:
            raise ParameterError(f"outage/required_outage: not numeric arrays ({exc})") from None
        K, T = int(self.num_stations), int(self.num_periods)
        if outage.shape != (K, T):
            raise ParameterError(f"outage: expected shape ({K}, {T}), got {outage.shape}")
        if req.shape != (T,):
            raise ParameterError(f"required_outage: expected length {T}, got shape {req.shape}")
        for name, arr in (("outage", outage), ("required_outage", req)):
            if not np.all(np.isfinite(arr)):
                raise ParameterError(f"{name}: entries must be finite")
            if np.any(arr <= 0.0):
                raise ParameterError(f"{name}: entries must be > 0 (positivity invariant)")
            if np.any(arr > 1.0):
                raise ParameterError(f"{name}: entries must be <= 1")
        object.__setattr__(self, "num_stations", K)
        object.__setattr__(self, "num_periods", T)
        object.__setattr__(self, "outage", outage)
        object.__setattr__(self, "required_outage", req)

    @property
    def required_availability(self) -> np.ndarray:
        return 1.0 - self.required_outage

    def to_dict(self) -> dict:
        return {
            "format": FORMAT_VERSION,
            "num_stations": self.num_stations,
            "num_periods": self.num_periods,
            "outage": self.outage.tolist(),
            "required_outage": self.required_outage.tolist(),
        }

    @classmethod
    def from_dict(cls, doc: dict) -> ProblemInstance:
        if not isinstance(doc, dict):
            raise ParameterError("instance: top-level JSON value must be an object")
        fmt = doc.get("format", FORMAT_VERSION)
        if fmt != FORMAT_VERSION:
            raise ParameterError(f"format: unsupported version {fmt!r}")
        for key in ("num_stations", "num_periods", "outage", "required_outage"):
            if key not in doc:
                raise ParameterError(f"{key}: missing field")
        for key in ("num_stations", "num_periods"):
            if isinstance(doc[key], bool) or not isinstance(doc[key], int):
                raise ParameterError(f"{key}: must be an integer")
        outage = doc["outage"]
        if not isinstance(outage, list) or not all(isinstance(row, list) for row in outage):
            raise ParameterError("outage: must be a list of rows")
        if len({len(row) for row in outage}) > 1:
            raise ParameterError("outage: rows have unequal lengths")
        return cls(doc["num_stations"], doc["num_periods"], outage, doc["required_outage"])


@dataclass(frozen=True)
class Selection:
    """Binary installation vector z; ``chosen[k] == 1`` means station k is built."""

    chosen: tuple[int, ...]

    def __post_init__(self):
        chosen = tuple(int(v) for v in self.chosen)
        if any(v not in (0, 1) for v in chosen):
            raise ParameterError("chosen: entries must be 0 or 1")
        object.__setattr__(self, "chosen", chosen)

    @classmethod
    def from_indices(cls, indices: Sequence[int], size: int) -> Selection:
        z = [0] * size
        for i in indices:
            z[i] = 1
        return cls(tuple(z))

    @property
    def cardinality(self) -> int:
        return sum(self.chosen)

    @property
    def indices(self) -> tuple[int, ...]:
        """Zero-based indices of installed stations."""
        return tuple(k for k, v in enumerate(self.chosen) if v)

    def __len__(self) -> int:
        return len(self.chosen)

    def as_array(self) -> np.ndarray:
        return np.asarray(self.chosen, dtype=np.float64)


def uniform_stream(seed: int, n: int) -> np.ndarray:
    """``n`` doubles in [0, 1) from PCG64 seeded by ``SeedSequence(seed)``."""
    if isinstance(seed, bool) or not isinstance(seed, (int, np.integer)) or seed < 0:
        raise ParameterError(f"seed: must be a non-negative integer, got {seed!r}")
    bits = np.random.PCG64(np.random.SeedSequence(int(seed)))
    raw = np.asarray(bits.random_raw(n), dtype=np.uint64)
    return (raw >> np.uint64(11)).astype(np.float64) * (1.0 / 9007199254740992.0)


def derive_seed(*entropy: int) -> int:
    """Deterministic 64-bit child seed from a tuple of non-negative integers."""
    state = np.random.SeedSequence([int(e) for e in entropy]).generate_state(1, np.uint64)
    return int(state[0])


def generate_uniform(
    num_stations: int,
    num_periods: int,
    low: float,
    high: float,
    required_availability: float,
    seed: int,
) -> ProblemInstance:
    """Draw outage probabilities i.i.d. uniform on [low, high].

    Every period gets the same required outage ``1 - required_availability``.
    """
    if not (0.0 < low <= high <= 1.0):
        raise ParameterError(f"low/high: need 0 < low <= high <= 1, got low={low}, high={high}")
    if not (0.0 < required_availability < 1.0):
        raise ParameterError(f"required_availability: must lie in (0, 1), got {required_availability}")
    for name, val in (("num_stations", num_stations), ("num_periods", num_periods)):
        if isinstance(val, bool) or not isinstance(val, (int, np.integer)) or val < 1:
            raise ParameterError(f"{name}: must be >= 1, got {val!r}")
    u = uniform_stream(seed, num_stations * num_periods)
    outage = low + (high - low) * u.reshape(num_stations, num_periods)
    np.clip(outage, low, high, out=outage)
    req = np.full(num_periods, 1.0 - required_availability)
    return ProblemInstance(num_stations, num_periods, outage, req)


def dumps_instance(instance: ProblemInstance) -> str:
    return json.dumps(instance.to_dict()) + "\n"


def save_instance(instance: ProblemInstance, path: str | PathLike) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(dumps_instance(instance))


def load_instance(path: str | PathLike) -> ProblemInstance:
    with open(path, encoding="utf-8") as fh:
        try:
            doc = json.load(fh, parse_constant=_reject_constant)
        except json.JSONDecodeError as exc:
            raise ParameterError(f"instance: malformed JSON ({exc})") from None
    return ProblemInstance.from_dict(doc)


def _reject_constant(name: str) -> float:
    # NaN/Infinity are not valid JSON numbers; refuse them with a field-free message
    raise ParameterError(f"instance: non-finite literal {name} not allowed")
