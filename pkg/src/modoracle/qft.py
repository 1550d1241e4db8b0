"""Fourier-basis constant addition and the modular-addition block.

The adder follows the usual pattern: in the Fourier basis of a w-qubit
register, adding a classical constant is one phase rotation per qubit,
so no quantum register is needed for the addend. The modular block
`+r mod k` wraps the plain adder with a subtract/compare/correct
sequence that uses one overflow qubit and one comparison ancilla, both
returned to |0> for every in-range input.
"""
from __future__ import annotations

from dataclasses import dataclass
from math import pi

from .circuit import ANGLE_EPS, Circuit, Gate, QubitRef, inverse, new_circuit


@dataclass(frozen=True)
class ModAddParams:
    """Parameters of the `+r mod k` block on an m-qubit value register."""

    addend: int
    modulus: int
    width: int

    def __post_init__(self):
        if self.modulus < 2:
            raise ValueError(f"modulus must be >= 2, got {self.modulus}")
        if not 0 <= self.addend < self.modulus:
            raise ValueError(f"addend {self.addend} outside [0, {self.modulus})")
        if self.width < (self.modulus - 1).bit_length():
            raise ValueError(
                f"width {self.width} cannot hold remainders up to {self.modulus - 1}"
            )


def _qft_gates(qubits: list[QubitRef]) -> list[Gate]:
    """Swap-free QFT ladder: after it, qubit j carries phase 2*pi*b / 2^(j+1)."""
    gates = []
    w = len(qubits)
    for j in range(w - 1, -1, -1):
        gates.append(Gate("H", (qubits[j],)))
        for i in range(j - 1, -1, -1):
            gates.append(Gate("P", (qubits[j],), frozenset({qubits[i]}), pi / 2 ** (j - i)))
    return gates


def _phi_add_gates(a: int, qubits: list[QubitRef], sign: int = 1, controls=frozenset()) -> list[Gate]:
    """Phase rotations adding `sign*a` to a register already in the Fourier basis."""
    gates = []
    for j, q in enumerate(qubits):
        ang = sign * 2 * pi * a / 2 ** (j + 1)
        ang = (ang + pi) % (2 * pi) - pi
        if abs(ang) > ANGLE_EPS:
            gates.append(Gate("P", (q,), frozenset(controls), ang))
    return gates


def qft(m: int) -> Circuit:
    """Quantum Fourier transform on m qubits, swap-free variant."""
    if m < 1:
        raise ValueError("qft needs at least 1 qubit")
    c = new_circuit([("q", m)], metadata=f"qft({m})")
    return c.with_gates(_qft_gates(c.qubits("q")))


def phi_add_const(a: int, m: int) -> Circuit:
    """Add the constant a (mod 2^m) to an m-qubit register in the Fourier basis.

    Conjugated by qft/inverse-qft this maps |b> to |b+a mod 2^m>. Zero
    rotations are elided, so a = 0 yields the empty circuit.
    """
    if not 0 <= a < 2 ** m:
        raise ValueError(f"addend {a} outside [0, 2^{m})")
    c = new_circuit([("q", m)], metadata=f"phi_add({a})")
    return c.with_gates(_phi_add_gates(a, c.qubits("q")))


def _mod_add_gates(p: ModAddParams, value: list[QubitRef], cmp_anc: QubitRef) -> list[Gate]:
    """Gate list of `+r mod k` over value register (m+1 qubits incl. overflow).

    Sequence: ADD(r), SUB(k), copy the wrapped-sign bit to the comparison
    ancilla (around a full-register basis change), conditionally ADD(k),
    then SUB(r) / inverted sign check / ADD(r) to uncompute the ancilla.
    """
    r, k = p.addend, p.modulus
    msb = value[-1]
    fwd = _qft_gates(value)
    bwd = [Gate(g.kind, g.targets, g.controls, -g.theta) if g.kind == "P" else g
           for g in reversed(fwd)]
    gates = []
    gates += fwd
    gates += _phi_add_gates(r, value)
    gates += _phi_add_gates(k, value, sign=-1)
    gates += bwd
    gates.append(Gate("X", (cmp_anc,), frozenset({msb})))
    gates += fwd
    gates += _phi_add_gates(k, value, controls={cmp_anc})
    gates += _phi_add_gates(r, value, sign=-1)
    gates += bwd
    gates.append(Gate("X", (msb,)))
    gates.append(Gate("X", (cmp_anc,), frozenset({msb})))
    gates.append(Gate("X", (msb,)))
    gates += fwd
    gates += _phi_add_gates(r, value)
    gates += bwd
    return gates


def modulo_add_const(p: ModAddParams) -> Circuit:
    """|b> -> |(b+r) mod k> for 0 <= b < k, both ancillas restored to |0>.

    Registers: value (m qubits), overflow (1 qubit), cmp (1 qubit).
    Behavior on b >= k or dirty ancillas is unspecified.
    """
    c = new_circuit(
        [("value", p.width), ("overflow", 1), ("cmp", 1)],
        metadata=f"add {p.addend} mod {p.modulus}",
    )
    value = c.qubits("value") + [QubitRef("overflow", 0)]
    return c.with_gates(_mod_add_gates(p, value, QubitRef("cmp", 0)))


def modulo_sub_const(p: ModAddParams) -> Circuit:
    """Exact inverse of modulo_add_const: |b> -> |(b-r) mod k> on the contract domain."""
    inv = inverse(modulo_add_const(p))
    return Circuit(inv.registers, inv.gates, f"sub {p.addend} mod {p.modulus}")
