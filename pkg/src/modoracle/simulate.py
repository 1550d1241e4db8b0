"""Exact dense statevector simulation and measurement sampling.

Gates are applied in place over the amplitude vector with index masks;
controlled gates act only where every control bit is 1. The qubit order
matches the circuit registers (qubit 0 = least significant index bit).
"""
from __future__ import annotations

import json
from dataclasses import dataclass, field
from math import sqrt

import numpy as np

from .circuit import Circuit, Gate

MAX_QUBITS = 26
NORM_TOL = 1e-10

_SX = np.array([[1 + 1j, 1 - 1j], [1 - 1j, 1 + 1j]], dtype=complex) / 2
_H = np.array([[1, 1], [1, -1]], dtype=complex) / sqrt(2)
_X = np.array([[0, 1], [1, 0]], dtype=complex)
_Z = np.array([[1, 0], [0, -1]], dtype=complex)


@dataclass(frozen=True)
class Statevector:
    """Normalized amplitude vector over all qubits of a circuit."""

    amplitudes: np.ndarray
    registers: tuple[tuple[str, int], ...]

    def __post_init__(self):
        norm = float(np.sum(np.abs(self.amplitudes) ** 2))
        if abs(norm - 1.0) > NORM_TOL:
            raise ValueError(f"statevector norm^2 = {norm}, not 1")

    @property
    def n_qubits(self) -> int:
        return sum(size for _, size in self.registers)


@dataclass(frozen=True)
class Histogram:
    """Sampled measurement counts over input-register basis values."""

    counts: dict[int, int]
    shots: int
    seed: int
    rng: str = "pcg64"

    def __post_init__(self):
        if sum(self.counts.values()) != self.shots:
            raise ValueError("histogram counts do not sum to shots")

    def to_csv(self) -> str:
        lines = ["value,count"]
        lines += [f"{v},{c}" for v, c in sorted(self.counts.items())]
        return "\n".join(lines) + "\n"

    def to_json(self) -> str:
        return json.dumps(
            {"shots": self.shots, "seed": self.seed, "rng": self.rng,
             "counts": {str(v): c for v, c in sorted(self.counts.items())}},
            indent=2,
        ) + "\n"


def _gate_matrix(g: Gate) -> np.ndarray:
    if g.kind == "X":
        return _X
    if g.kind == "H":
        return _H
    if g.kind == "Z":
        return _Z
    if g.kind == "SX":
        return _SX
    if g.kind == "P":
        return np.array([[1, 0], [0, np.exp(1j * g.theta)]], dtype=complex)
    if g.kind == "RZ":
        h = g.theta / 2
        return np.array([[np.exp(-1j * h), 0], [0, np.exp(1j * h)]], dtype=complex)
    raise ValueError(f"no matrix for kind {g.kind}")


def _apply(state: np.ndarray, c: Circuit, gates=None) -> np.ndarray:
    n = c.n_qubits
    idx = np.arange(state.size)
    for g in c.gates if gates is None else gates:
        cmask = np.ones(state.size, dtype=bool)
        for q in g.controls:
            cmask &= (idx >> c.qubit_index(q)) & 1 == 1
        if g.kind == "SWAP":
            a, b = (c.qubit_index(t) for t in g.targets)
            sel = cmask & (((idx >> a) & 1) != ((idx >> b) & 1))
            src = idx[sel]
            dst = src ^ (1 << a) ^ (1 << b)
            # each mismatched pair appears twice in sel; swap via copy
            state[src], state[dst] = state[dst].copy(), state[src].copy()
            continue
        t = c.qubit_index(g.targets[0])
        m = _gate_matrix(g)
        i0 = idx[cmask & ((idx >> t) & 1 == 0)]
        i1 = i0 | (1 << t)
        a0 = state[i0]
        a1 = state[i1]
        state[i0], state[i1] = m[0, 0] * a0 + m[0, 1] * a1, m[1, 0] * a0 + m[1, 1] * a1
    return state


def simulate(c: Circuit, initial: int | None = None) -> Statevector:
    """Apply every gate of `c` in order to a basis state (default all-zeros)."""
    n = c.n_qubits
    if n > MAX_QUBITS:
        raise ValueError(f"{n} qubits exceeds the {MAX_QUBITS}-qubit cap")
    dim = 1 << n
    start = 0 if initial is None else int(initial)
    if not 0 <= start < dim:
        raise ValueError(f"initial basis index {start} out of range for {n} qubits")
    state = np.zeros(dim, dtype=complex)
    state[start] = 1.0
    state = _apply(state, c)
    return Statevector(state, c.registers)


def phase_signature(oracle: Circuit, n: int) -> tuple[np.ndarray, float]:
    """Extract the ±1 phase pattern of an oracle over its n input qubits.

    Simulates the oracle on a uniform superposition of the first register
    (auxiliary registers at |0>), then reads the sign of each input
    amplitude. Returns (signature vector, auxiliary leakage). Raises if
    any amplitude magnitude deviates from 1/sqrt(2^n), i.e. the circuit
    is not a pure phase oracle on that register.
    """
    total = oracle.n_qubits
    if n < 1 or n > total:
        raise ValueError(f"input width {n} invalid for {total}-qubit circuit")
    dim = 1 << total
    m = 1 << n
    state = np.zeros(dim, dtype=complex)
    state[:m] = 1.0 / sqrt(m)
    state = _apply(state, oracle)
    amps = state[:m] * sqrt(m)
    leakage = float(np.sum(np.abs(state[m:]) ** 2))
    bad = np.abs(np.abs(amps) - 1.0)
    if np.max(bad) > 1e-8:
        worst = int(np.argmax(bad))
        raise ValueError(
            f"not a pure phase oracle: |amplitude| of |{worst}> is {abs(amps[worst]):.9f}"
        )
    return np.where(amps.real >= 0, 1, -1).astype(int), leakage


def probabilities(s: Statevector, register: str) -> np.ndarray:
    """Marginal probability of each basis value of one register."""
    off = 0
    size = None
    total = 0
    for name, sz in s.registers:
        if name == register:
            size = sz
            off = total
        total += sz
    if size is None:
        raise ValueError(f"unknown register {register!r}")
    probs = np.abs(s.amplitudes) ** 2
    # axis for global bit g is total-1-g (C-order reshape)
    shaped = probs.reshape([2] * total)
    keep = [total - 1 - (off + i) for i in range(size - 1, -1, -1)]
    drop = tuple(ax for ax in range(total) if ax not in keep)
    marg = shaped.sum(axis=drop) if drop else shaped
    # remaining axes are ordered by original axis index = descending bit
    out = marg.reshape(-1)
    if abs(out.sum() - 1.0) > NORM_TOL:
        raise AssertionError("marginal does not sum to 1")
    return out


def sample(dist: np.ndarray, shots: int, seed: int) -> Histogram:
    """Multinomial draw from a distribution; deterministic for fixed seed."""
    if shots < 1:
        raise ValueError("shots must be >= 1")
    p = np.asarray(dist, dtype=float)
    p = p / p.sum()
    rng = np.random.default_rng(seed)
    draws = rng.multinomial(shots, p)
    counts = {int(v): int(cnt) for v, cnt in enumerate(draws) if cnt > 0}
    return Histogram(counts, shots, seed)


def distribution_csv(dist: np.ndarray) -> str:
    lines = ["value,probability"]
    lines += [f"{v},{float(p)!r}" for v, p in enumerate(np.asarray(dist, dtype=float))]
    return "\n".join(lines) + "\n"
