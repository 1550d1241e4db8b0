"""OpenQASM 2.0 export.

Gates with a native qelib1 spelling are emitted directly; anything
beyond that vocabulary (two or more controls, controlled-SX, ...) is
decomposed through the transpiler first. Registers appear in
declaration order and qubit indices are preserved.
"""
from __future__ import annotations

from .circuit import Circuit, Gate
from .transpile import _expand

_HEADER = 'OPENQASM 2.0;\ninclude "qelib1.inc";\n'


def _fmt(theta: float) -> str:
    return repr(float(theta))


def _native(g: Gate, q) -> str | None:
    """qelib1 line for one gate, or None when it needs decomposition."""
    nc = len(g.controls)
    c = sorted(g.controls, key=lambda r: (r.register, r.index))
    if g.kind == "X":
        if nc == 0:
            return f"x {q(g.targets[0])};"
        if nc == 1:
            return f"cx {q(c[0])},{q(g.targets[0])};"
        if nc == 2:
            return f"ccx {q(c[0])},{q(c[1])},{q(g.targets[0])};"
    elif g.kind == "Z":
        if nc == 0:
            return f"z {q(g.targets[0])};"
        if nc == 1:
            return f"cz {q(c[0])},{q(g.targets[0])};"
    elif g.kind == "H":
        if nc == 0:
            return f"h {q(g.targets[0])};"
    elif g.kind == "P":
        if nc == 0:
            return f"u1({_fmt(g.theta)}) {q(g.targets[0])};"
        if nc == 1:
            return f"cu1({_fmt(g.theta)}) {q(c[0])},{q(g.targets[0])};"
    elif g.kind == "RZ":
        if nc == 0:
            return f"rz({_fmt(g.theta)}) {q(g.targets[0])};"
        if nc == 1:
            return f"crz({_fmt(g.theta)}) {q(c[0])},{q(g.targets[0])};"
    elif g.kind == "SX":
        if nc == 0:
            # sx is absent from baseline qelib1; u2(-pi/2, pi/2) = sx up to phase
            return f"u2({_fmt(-1.5707963267948966)},{_fmt(1.5707963267948966)}) {q(g.targets[0])};"
    elif g.kind == "SWAP":
        if nc == 0:
            return f"swap {q(g.targets[0])},{q(g.targets[1])};"
        if nc == 1:
            return f"cswap {q(c[0])},{q(g.targets[0])},{q(g.targets[1])};"
    return None


def to_qasm(c: Circuit) -> str:
    """Serialize a circuit as an OpenQASM 2.0 program."""
    lines = [_HEADER.rstrip("\n")]
    for name, size in c.registers:
        lines.append(f"qreg {name}[{size}];")

    def q(ref):
        return f"{ref.register}[{ref.index}]"

    for g in c.gates:
        line = _native(g, q)
        if line is not None:
            lines.append(line)
            continue
        for sub in _expand(g, c.qubit_index):
            sub_line = _native(sub, q)
            if sub_line is None:
                raise AssertionError(f"transpiled gate not expressible: {sub}")
            lines.append(sub_line)
    return "\n".join(lines) + "\n"
