"""Decomposition to a fixed basis gate set and depth measurement.

Target basis: single-qubit {RZ, SX, X, P} plus two-qubit CX, all-to-all
connectivity, no ancillas. Multi-controlled phase-type gates go through
an exact ladder of multi-controlled RZ blocks; each block is realized as
[MCX1 RZ(-t/4) MCX2 RZ(t/4)]^2 with the two control halves borrowing
each other as dirty qubits inside Toffoli V-chains. The construction is
exact (no relative-phase shortcuts) and ancilla-free; its depth grows
quadratically in the control count, the best this implementation
achieves without ancillas (see the depth notes in the tests).
"""
from __future__ import annotations

from dataclasses import dataclass
from math import pi

import numpy as np

from .circuit import ANGLE_EPS, Circuit, Gate, QubitRef, structural_depth


@dataclass(frozen=True)
class DepthRow:
    k: int
    n_k: int
    n: int
    gates: int
    cx: int
    depth: int


@dataclass(frozen=True)
class DepthReport:
    rows: tuple[DepthRow, ...]

    def to_csv(self) -> str:
        lines = ["k,n_k,n,gates,cx,depth"]
        lines += [f"{r.k},{r.n_k},{r.n},{r.gates},{r.cx},{r.depth}" for r in self.rows]
        return "\n".join(lines) + "\n"


@dataclass(frozen=True)
class FitResult:
    slope: float
    intercept: float
    r2: float

    def __str__(self):
        return f"{self.slope!r},{self.intercept!r},{self.r2!r}"


def _rz(t: QubitRef, theta: float) -> Gate:
    return Gate("RZ", (t,), frozenset(), theta)


def _p(t: QubitRef, theta: float) -> Gate:
    return Gate("P", (t,), frozenset(), theta)


def _cx(c: QubitRef, t: QubitRef) -> Gate:
    return Gate("X", (t,), frozenset({c}))


def _h_basis(t: QubitRef) -> list[Gate]:
    """H up to global phase exp(-i pi/4): RZ(pi/2) SX RZ(pi/2)."""
    return [_rz(t, pi / 2), Gate("SX", (t,)), _rz(t, pi / 2)]


def _toffoli_basis(a: QubitRef, b: QubitRef, t: QubitRef) -> list[Gate]:
    """Standard 6-CX Toffoli, exact up to global phase from the two H's."""
    q = pi / 4
    return (
        _h_basis(t)
        + [_cx(b, t), _p(t, -q), _cx(a, t), _p(t, q), _cx(b, t), _p(t, -q), _cx(a, t),
           _p(b, q), _p(t, q)]
        + _h_basis(t)
        + [_cx(a, b), _p(b, -q), _cx(a, b), _p(a, q)]
    )


def _mcx_dirty(controls: list[QubitRef], target: QubitRef, borrows: list[QubitRef]) -> list[Gate]:
    """Exact multi-controlled X using m-2 dirty borrow qubits.

    Two passes of a Toffoli V-chain; every borrow is restored no matter
    its state, so entangled borrows are fine.
    """
    m = len(controls)
    if m == 0:
        return [Gate("X", (target,))]
    if m == 1:
        return [_cx(controls[0], target)]
    if m == 2:
        return _toffoli_basis(controls[0], controls[1], target)
    need = m - 2
    if len(borrows) < need:
        raise ValueError(f"{m}-control X needs {need} borrow qubits, got {len(borrows)}")
    b = borrows[:need]
    half: list[Gate] = []
    half += _toffoli_basis(controls[m - 1], b[need - 1], target)
    for i in range(need - 1, 0, -1):
        half += _toffoli_basis(controls[i + 1], b[i - 1], b[i])
    half += _toffoli_basis(controls[1], controls[0], b[0])
    for i in range(1, need):
        half += _toffoli_basis(controls[i + 1], b[i - 1], b[i])
    return half + half


def _mcrz(controls: list[QubitRef], target: QubitRef, theta: float) -> list[Gate]:
    """Exact multi-controlled RZ(theta).

    Uses [MCX1 RZ(-t/4) MCX2 RZ(+t/4)]^2 where each half-MCX borrows the
    other half's controls as dirty qubits; RZ(theta) = (X A X A^dag)^2
    for the diagonal A = RZ(-theta/4).
    """
    m = len(controls)
    if m == 0:
        return [_rz(target, theta)]
    if m == 1:
        c = controls[0]
        return [_rz(target, theta / 2), _cx(c, target), _rz(target, -theta / 2), _cx(c, target)]
    k1 = controls[: (m + 1) // 2]
    k2 = controls[(m + 1) // 2:]
    comp = (
        _mcx_dirty(k1, target, k2)
        + [_rz(target, -theta / 4)]
        + _mcx_dirty(k2, target, k1)
        + [_rz(target, theta / 4)]
    )
    return comp + comp


def _mcp(qubits: list[QubitRef], phi: float) -> list[Gate]:
    """Exact phase phi on the all-ones state of the given qubits.

    Peels one qubit per step: MCP(S, phi) = MCRZ(S \\ t -> t, phi)
    followed by MCP(S \\ t, phi/2).
    """
    qs = list(qubits)
    gates: list[Gate] = []
    ang = phi
    while len(qs) > 1:
        t, qs = qs[0], qs[1:]
        gates += _mcrz(qs, t, ang)
        ang /= 2
    if abs((ang + pi) % (2 * pi) - pi) > ANGLE_EPS:
        gates.append(_p(qs[0], ang))
    return gates


def _expand(g: Gate, order) -> list[Gate]:
    """Rewrite one IR gate into basis gates."""
    ctrls = sorted(g.controls, key=order)
    t = g.targets[0]
    kind = g.kind
    if kind == "SWAP":
        a, b = g.targets
        if not ctrls:
            return [_cx(a, b), _cx(b, a), _cx(a, b)]
        mid = Gate("X", (b,), g.controls | {a})
        return [_cx(b, a)] + _expand(mid, order) + [_cx(b, a)]
    if kind == "X":
        if not ctrls:
            return [g]
        if len(ctrls) == 1:
            return [_cx(ctrls[0], t)]
        return _h_basis(t) + _mcp([t] + ctrls, pi) + _h_basis(t)
    if kind == "Z":
        if not ctrls:
            return [_p(t, pi)]
        return _mcp([t] + ctrls, pi)
    if kind == "P":
        if not ctrls:
            return [g] if abs((g.theta + pi) % (2 * pi) - pi) > ANGLE_EPS else []
        return _mcp([t] + ctrls, g.theta)
    if kind == "RZ":
        if not ctrls:
            return [g] if abs(g.theta) > ANGLE_EPS else []
        return _mcrz(ctrls, t, g.theta)
    if kind == "SX":
        if not ctrls:
            return [g]
        # SX = exp(i pi/4) RX(pi/2) and RX = H RZ H
        return _mcp(ctrls, pi / 4) + _h_basis(t) + _mcrz(ctrls, t, pi / 2) + _h_basis(t)
    if kind == "H":
        if not ctrls:
            return _h_basis(t)
        # H = exp(i pi/4) RZ(pi/2) SX RZ(pi/2)
        out = _mcp(ctrls, pi / 4)
        out += _mcrz(ctrls, t, pi / 2)
        out += _expand(Gate("SX", (t,), g.controls), order)
        out += _mcrz(ctrls, t, pi / 2)
        return out
    raise ValueError(f"cannot transpile gate kind {kind}")


def transpile_basis(c: Circuit) -> Circuit:
    """Decompose a circuit to {RZ, SX, X, P} + CX, preserving the unitary
    up to global phase. Ancilla-free: multi-controlled gates only ever
    touch their own qubits."""
    order = c.qubit_index
    out: list[Gate] = []
    for g in c.gates:
        out += _expand(g, order)
    return Circuit(c.registers, tuple(out), c.metadata)


def transpiled_depth(c: Circuit) -> int:
    """Structural depth after decomposition to the basis set."""
    return structural_depth(transpile_basis(c))


def depth_sweep(ks, ns) -> DepthReport:
    """Transpiled size and depth of the multiples oracle over a (k, n) grid."""
    from .oracles import multiples_oracle, remainder_register_width

    ks, ns = list(ks), list(ns)
    if not ks or not ns:
        raise ValueError("need at least one k and one n")
    if any(k < 2 for k in ks):
        raise ValueError("every modulus must be >= 2")
    rows = []
    for k in ks:
        for n in ns:
            t = transpile_basis(multiples_oracle(k, n))
            cx = sum(1 for g in t.gates if g.controls)
            rows.append(DepthRow(k, remainder_register_width(k), n,
                                 len(t.gates), cx, structural_depth(t)))
    return DepthReport(tuple(rows))


def linear_fit(report: DepthReport, fixed_k: int) -> FitResult:
    """Ordinary least squares of transpiled depth against n for one modulus."""
    pts = [(r.n, r.depth) for r in report.rows if r.k == fixed_k]
    if len(pts) < 3:
        raise ValueError(f"need >= 3 rows with k={fixed_k}, got {len(pts)}")
    x = np.array([p[0] for p in pts], dtype=float)
    y = np.array([p[1] for p in pts], dtype=float)
    slope, intercept = np.polyfit(x, y, 1)
    resid = y - (slope * x + intercept)
    ss_tot = float(np.sum((y - y.mean()) ** 2))
    r2 = 1.0 if ss_tot == 0 else 1.0 - float(np.sum(resid**2)) / ss_tot
    return FitResult(float(slope), float(intercept), r2)
