"""Diffuser, Grover iterate assembly, and the closed-form predictor.

The closed form sin^2((2j+1)*theta) with sin(theta) = sqrt(M/N) serves
as an analytic oracle for every simulated amplification result.
"""
from __future__ import annotations

from dataclasses import dataclass
from math import asin, pi, sin, sqrt

from .circuit import Circuit, Gate, QubitRef, new_circuit


@dataclass(frozen=True)
class GroverPlan:
    """An oracle plus how often to repeat the oracle-diffuser pair."""

    oracle: Circuit
    n: int
    repetitions: int = 1

    def __post_init__(self):
        name, size = self.oracle.registers[0]
        if size != self.n:
            raise ValueError(
                f"oracle's first register {name!r} has {size} qubits, expected {self.n}"
            )
        if self.repetitions < 1:
            raise ValueError("repetitions must be >= 1")


def diffuser(n: int) -> Circuit:
    """Reflection about the uniform superposition on n qubits.

    H^n, then -1 on |0...0> via an X-conjugated multi-controlled Z,
    then H^n. Phase conventions only matter up to a global phase.
    """
    if n < 1:
        raise ValueError(f"need at least 1 qubit, got {n}")
    c = new_circuit([("q", n)], metadata=f"diffuser({n})")
    qs = c.qubits("q")
    layer = [Gate("H", (q,)) for q in qs]
    xs = [Gate("X", (q,)) for q in qs]
    mcz = Gate("Z", (qs[-1],), frozenset(qs[:-1]))
    return c.with_gates(layer + xs + [mcz] + xs + layer)


def grover_circuit(plan: GroverPlan) -> Circuit:
    """Uniform superposition on the input register, then j x [oracle; diffuser].

    The diffuser acts on the input register only; auxiliary registers
    stay at |0> thanks to the oracles' uncomputation.
    """
    oracle = plan.oracle
    name = oracle.registers[0][0]
    qs = oracle.qubits(name)
    gates: list[Gate] = [Gate("H", (q,)) for q in qs]
    diff = diffuser(plan.n)
    diff_gates = [Gate(g.kind, tuple(QubitRef(name, t.index) for t in g.targets),
                       frozenset(QubitRef(name, q.index) for q in g.controls), g.theta)
                  for g in diff.gates]
    for _ in range(plan.repetitions):
        gates += oracle.gates
        gates += diff_gates
    return Circuit(oracle.registers, tuple(gates), oracle.metadata)


def predicted_probability(marked: int, total: int, repetitions: int) -> float:
    """Closed-form success probability sin^2((2j+1) asin(sqrt(M/N)))."""
    if not 1 <= marked <= total:
        raise ValueError(f"marked count {marked} outside [1, {total}]")
    if repetitions < 0:
        raise ValueError("repetitions must be >= 0")
    theta = asin(sqrt(marked / total))
    return sin((2 * repetitions + 1) * theta) ** 2


def optimal_repetitions(marked: int, total: int) -> int:
    """Repetition count maximizing the closed form, floored at one."""
    if not 1 <= marked <= total:
        raise ValueError(f"marked count {marked} outside [1, {total}]")
    theta = asin(sqrt(marked / total))
    return max(1, round(pi / (4 * theta) - 0.5))
