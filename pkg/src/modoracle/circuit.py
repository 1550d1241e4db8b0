"""Gate-level circuit representation.

The IR is deliberately small: a circuit is an ordered list of gates over
named registers. Any gate may carry an arbitrary set of control qubits;
multi-controlled gates stay first-class here and are only decomposed by
the transpiler. Qubit 0 of the first register is the global
least-significant bit, so basis index x has bit g equal to the value of
global qubit g.

All values are immutable after construction; builders are pure functions.
"""
from __future__ import annotations

from dataclasses import dataclass, field

GATE_KINDS = frozenset({"X", "H", "Z", "P", "RZ", "SX", "SWAP"})
_PARAMETRIC = frozenset({"P", "RZ"})

# rotations below this magnitude are exact no-ops at double precision
ANGLE_EPS = 1e-12


@dataclass(frozen=True, order=True)
class QubitRef:
    """One qubit, addressed as (register name, index within register)."""

    register: str
    index: int

    def __post_init__(self):
        if self.index < 0:
            raise ValueError(f"negative qubit index {self.index}")

    def __repr__(self):
        return f"{self.register}[{self.index}]"


@dataclass(frozen=True)
class Gate:
    """One primitive operation with an arbitrary set of controls.

    SWAP takes two targets; every other kind takes one. An X gate with a
    single control is the usual CX; a Z gate with controls is a
    multi-controlled Z.
    """

    kind: str
    targets: tuple[QubitRef, ...]
    controls: frozenset[QubitRef] = frozenset()
    theta: float = 0.0

    def __post_init__(self):
        if self.kind not in GATE_KINDS:
            raise ValueError(f"unknown gate kind {self.kind!r}")
        want = 2 if self.kind == "SWAP" else 1
        if len(self.targets) != want:
            raise ValueError(f"{self.kind} takes {want} target(s), got {len(self.targets)}")
        if len(set(self.targets)) != len(self.targets):
            raise ValueError("duplicate target qubits")
        if any(t in self.controls for t in self.targets):
            raise ValueError("target cannot also be a control")
        if self.kind in _PARAMETRIC:
            theta = float(self.theta)
            if theta != theta or theta in (float("inf"), float("-inf")):
                raise ValueError(f"non-finite angle {self.theta}")
        elif self.theta:
            raise ValueError(f"{self.kind} takes no angle")

    @property
    def qubits(self) -> frozenset[QubitRef]:
        return frozenset(self.targets) | self.controls


def gate(kind: str, target: QubitRef, *, controls=(), theta: float = 0.0) -> Gate:
    """Convenience constructor for single-target gates."""
    return Gate(kind, (target,), frozenset(controls), theta)


@dataclass(frozen=True)
class Circuit:
    """Ordered gate list over named registers."""

    registers: tuple[tuple[str, int], ...]
    gates: tuple[Gate, ...] = ()
    metadata: str = ""

    def __post_init__(self):
        names = [n for n, _ in self.registers]
        if len(set(names)) != len(names):
            raise ValueError(f"duplicate register name in {names}")
        for name, size in self.registers:
            if size < 1:
                raise ValueError(f"register {name!r} must have size >= 1, got {size}")
        sizes = dict(self.registers)
        for g in self.gates:
            for q in g.qubits:
                if q.register not in sizes:
                    raise ValueError(f"gate references unknown register {q.register!r}")
                if q.index >= sizes[q.register]:
                    raise ValueError(f"{q} out of range for register of size {sizes[q.register]}")

    @property
    def n_qubits(self) -> int:
        return sum(size for _, size in self.registers)

    def register_offset(self, name: str) -> int:
        off = 0
        for reg, size in self.registers:
            if reg == name:
                return off
            off += size
        raise ValueError(f"unknown register {name!r}")

    def register_size(self, name: str) -> int:
        for reg, size in self.registers:
            if reg == name:
                return size
        raise ValueError(f"unknown register {name!r}")

    def qubit_index(self, q: QubitRef) -> int:
        """Global index of a qubit (bit position in basis indices)."""
        return self.register_offset(q.register) + q.index

    def qubits(self, name: str) -> list[QubitRef]:
        return [QubitRef(name, i) for i in range(self.register_size(name))]

    def with_gates(self, gates) -> "Circuit":
        return Circuit(self.registers, self.gates + tuple(gates), self.metadata)


def new_circuit(registers, metadata: str = "") -> Circuit:
    """Create an empty circuit over the given (name, size) registers."""
    return Circuit(tuple((str(n), int(s)) for n, s in registers), (), metadata)


def add_controls(c: Circuit, ctrls) -> Circuit:
    """Controlled version of a circuit: every gate gains the given controls.

    The product of controlled gates equals the controlled product, so the
    result computes controlled-U where U is the unitary of `c`. Controls
    must resolve against c's registers and be disjoint from every qubit
    the circuit touches. Conjugating pairs (e.g. X...X) are controlled
    too; no cancelling-pair elision is performed.
    """
    ctrls = frozenset(ctrls)
    touched = frozenset().union(*(g.qubits for g in c.gates)) if c.gates else frozenset()
    overlap = ctrls & touched
    if overlap:
        raise ValueError(f"control qubits overlap circuit qubits: {sorted(overlap)}")
    for q in ctrls:
        c.qubit_index(q)  # raises if unresolvable
    new = tuple(Gate(g.kind, g.targets, g.controls | ctrls, g.theta) for g in c.gates)
    return Circuit(c.registers, new, c.metadata)


def inverse(c: Circuit) -> Circuit:
    """Adjoint circuit: gates reversed, each replaced by its adjoint.

    Rotations negate their angle; X, H, Z and SWAP are self-inverse.
    SX is not: its adjoint is emitted as the pair (SX, X) since
    X·SX = SX†.
    """
    out: list[Gate] = []
    for g in reversed(c.gates):
        if g.kind in _PARAMETRIC:
            out.append(Gate(g.kind, g.targets, g.controls, -g.theta))
        elif g.kind == "SX":
            out.append(g)
            out.append(Gate("X", g.targets, g.controls))
        else:
            out.append(g)
    return Circuit(c.registers, tuple(out), c.metadata)


def structural_depth(c: Circuit) -> int:
    """Greedy per-qubit layering depth (pre-transpilation metric).

    A gate lands on layer 1 + max(layer of every qubit it touches,
    controls included); the depth is the deepest layer used.
    """
    layer: dict[QubitRef, int] = {}
    depth = 0
    for g in c.gates:
        lay = 1 + max((layer.get(q, 0) for q in g.qubits), default=0)
        for q in g.qubits:
            layer[q] = lay
        if lay > depth:
            depth = lay
    return depth
