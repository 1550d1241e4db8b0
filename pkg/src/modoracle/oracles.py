"""Phase oracles for modular properties of integers.

The central construction marks every basis state |x> whose value has a
chosen remainder mod k: the remainders of the powers of two are added
into a small remainder register, controlled by the input bits, a
multi-controlled Z flips the sign where the register matches, and the
additions are uncomputed in reverse so only the phase survives.
Comparator oracles (less-than, range) and their composition with the
modular skeleton live here too.
"""
from __future__ import annotations

from dataclasses import dataclass

from .circuit import Circuit, Gate, QubitRef, add_controls, inverse, new_circuit
from .qft import ModAddParams, _mod_add_gates


@dataclass(frozen=True)
class RemainderTable:
    """Remainders r_i = 2^i mod k for i = 0..n-1."""

    k: int
    values: tuple[int, ...]


@dataclass(frozen=True)
class OracleSpec:
    """Declarative description of a phase oracle.

    inner is None, ("less-than", m) or ("range", a, b); bounds refer to
    values of the n-qubit input register.
    """

    k: int
    r: int = 0
    n: int = 1
    inner: tuple | None = None

    def __post_init__(self):
        if self.k < 2:
            raise ValueError(f"modulus must be >= 2, got {self.k}")
        if not 0 <= self.r < self.k:
            raise ValueError(f"remainder {self.r} outside [0, {self.k})")
        if self.n < 1:
            raise ValueError(f"input width must be >= 1, got {self.n}")
        if self.inner is not None:
            top = 1 << self.n
            if self.inner[0] == "less-than":
                if not 0 < self.inner[1] <= top:
                    raise ValueError(f"less-than bound {self.inner[1]} outside (0, {top}]")
            elif self.inner[0] == "range":
                a, b = self.inner[1], self.inner[2]
                if not 0 <= a <= b < top:
                    raise ValueError(f"range [{a}, {b}] invalid for {self.n} qubits")
            else:
                raise ValueError(f"unknown inner comparator {self.inner[0]!r}")

    def to_kv(self) -> str:
        parts = [f"k={self.k}", f"r={self.r}", f"n={self.n}"]
        if self.inner is None:
            parts.append("inner=none")
        else:
            parts.append(f"inner={self.inner[0]}")
            parts.append("inner-bounds=" + ":".join(str(b) for b in self.inner[1:]))
        return " ".join(parts)

    @classmethod
    def from_kv(cls, text: str) -> "OracleSpec":
        fields = dict(item.split("=", 1) for item in text.split())
        inner = None
        if fields.get("inner", "none") != "none":
            bounds = tuple(int(b) for b in fields["inner-bounds"].split(":"))
            inner = (fields["inner"],) + bounds
        return cls(int(fields["k"]), int(fields.get("r", 0)), int(fields["n"]), inner)


def remainders_pow2(k: int, n: int) -> RemainderTable:
    """Remainders of the first n powers of 2 mod k, by doubling.

    Each step doubles the previous remainder and subtracts k once when it
    overflows; the loop body contains no division or general modulo.
    """
    if k < 2:
        raise ValueError(f"modulus must be >= 2, got {k}")
    if n < 1:
        raise ValueError(f"need at least one power, got {n}")
    values = [1 if k > 1 else 0]
    r = values[0]
    for _ in range(1, n):
        r2 = 2 * r
        r = r2 if r2 < k else r2 - k
        values.append(r)
    return RemainderTable(k, tuple(values))


def remainder_register_width(k: int) -> int:
    """Qubits needed to store every remainder 0..k-1: bit length of k-1."""
    if k < 2:
        raise ValueError(f"modulus must be >= 2, got {k}")
    return (k - 1).bit_length()


def classical_multiples(k: int, r: int, limit: int) -> list[int]:
    """All x in [0, limit) with x mod k == r, by direct stepping."""
    if k < 2:
        raise ValueError(f"modulus must be >= 2, got {k}")
    if not 0 <= r < k:
        raise ValueError(f"remainder {r} outside [0, {k})")
    return list(range(r, limit, k))


def _oracle_layout(k: int, n: int) -> Circuit:
    nk = remainder_register_width(k)
    meta = f"k={k} n={n}"
    if k > (1 << n):
        meta += " warning: k exceeds 2^n, only x=0 can match remainder 0"
    return new_circuit([("q", n), ("rq", nk), ("anc", 2)], metadata=meta)


def _accumulate_remainders(c: Circuit, k: int, n: int) -> list[Gate]:
    """Controlled `+r_i mod k` blocks, one per input qubit; zero addends elided."""
    nk = c.register_size("rq")
    value = c.qubits("rq") + [QubitRef("anc", 0)]
    cmp_anc = QubitRef("anc", 1)
    gates: list[Gate] = []
    for i, r_i in enumerate(remainders_pow2(k, n).values):
        if r_i == 0:
            continue
        block = Circuit(c.registers, tuple(_mod_add_gates(ModAddParams(r_i, k, nk), value, cmp_anc)))
        gates += add_controls(block, {QubitRef("q", i)}).gates
    return gates


def _encode_remainder(rq: list[QubitRef], r: int) -> list[Gate]:
    """X on the remainder qubits whose bit in r is 0, mapping |r> to |1...1>."""
    return [Gate("X", (q,)) for j, q in enumerate(rq) if not (r >> j) & 1]


def _mcz_gate(qubits: list[QubitRef]) -> Gate:
    """Z on the last qubit controlled by the rest (plain Z when alone)."""
    return Gate("Z", (qubits[-1],), frozenset(qubits[:-1]))


def _remainder_skeleton(k: int, r: int, n: int, marking: list[Gate]) -> Circuit:
    c = _oracle_layout(k, n)
    acc = _accumulate_remainders(c, k, n)
    uncompute = inverse(Circuit(c.registers, tuple(acc))).gates
    return c.with_gates(acc + marking + list(uncompute))


def multiples_oracle(k: int, n: int) -> Circuit:
    """Phase oracle flipping the sign of every |x> with x mod k == 0."""
    return remainder_oracle(OracleSpec(k=k, r=0, n=n))


def remainder_oracle(spec: OracleSpec) -> Circuit:
    """Phase oracle flipping the sign of every |x> with x mod k == r."""
    if spec.inner is not None:
        raise ValueError("remainder_oracle takes a spec without inner comparator")
    c = _oracle_layout(spec.k, spec.n)
    rq = c.qubits("rq")
    enc = _encode_remainder(rq, spec.r)
    marking = enc + [_mcz_gate(rq)] + enc
    return _remainder_skeleton(spec.k, spec.r, spec.n, marking)


def _less_than_gates(m: int, qubits: list[QubitRef]) -> list[Gate]:
    """Dyadic-block phase flip on x < m over the given input qubits.

    For each set bit of m at position i, flip the subspace where the
    higher bits agree with m and bit i is 0: an X-conjugated
    multi-controlled Z among the constrained qubits.
    """
    n = len(qubits)
    if m == 1 << n:
        # full interval: global -1 via Z X Z X on one qubit
        q = qubits[0]
        return [Gate("Z", (q,)), Gate("X", (q,)), Gate("Z", (q,)), Gate("X", (q,))]
    gates: list[Gate] = []
    for i in range(n - 1, -1, -1):
        if not (m >> i) & 1:
            continue
        flips = [qubits[i]] + [qubits[j] for j in range(i + 1, n) if not (m >> j) & 1]
        block = [qubits[j] for j in range(i, n)]
        xs = [Gate("X", (q,)) for q in flips]
        gates += xs + [_mcz_gate(block)] + xs
    return gates


def less_than_oracle(m: int, n: int) -> Circuit:
    """Phase oracle on n qubits flipping the sign of every |x> with x < m."""
    if n < 1:
        raise ValueError(f"input width must be >= 1, got {n}")
    if not 0 < m <= 1 << n:
        raise ValueError(f"bound {m} outside (0, 2^{n}]")
    c = new_circuit([("q", n)], metadata=f"x < {m}")
    return c.with_gates(_less_than_gates(m, c.qubits("q")))


def range_oracle(a: int, b: int, n: int) -> Circuit:
    """Phase oracle flipping the sign of every |x> with a <= x <= b.

    Built as less-than(b+1) followed by less-than(a); the two phases
    multiply to -1 exactly on the interval.
    """
    if n < 1:
        raise ValueError(f"input width must be >= 1, got {n}")
    if not 0 <= a <= b < 1 << n:
        raise ValueError(f"range [{a}, {b}] invalid for {n} qubits")
    c = new_circuit([("q", n)], metadata=f"{a} <= x <= {b}")
    qs = c.qubits("q")
    gates = _less_than_gates(b + 1, qs)
    if a > 0:
        gates += _less_than_gates(a, qs)
    return c.with_gates(gates)


def composed_oracle(spec: OracleSpec) -> Circuit:
    """Phase oracle for (x mod k == r) AND an inner comparator condition.

    The inner oracle replaces the central multi-controlled Z: it is
    applied to the input register controlled by every remainder qubit,
    inside the X-conjugation that encodes r.
    """
    if spec.inner is None:
        raise ValueError("composed_oracle needs an inner comparator")
    c = _oracle_layout(spec.k, spec.n)
    qs, rq = c.qubits("q"), c.qubits("rq")
    if spec.inner[0] == "less-than":
        inner_gates = _less_than_gates(spec.inner[1], qs)
    else:
        a, b = spec.inner[1], spec.inner[2]
        inner_gates = _less_than_gates(b + 1, qs)
        if a > 0:
            inner_gates += _less_than_gates(a, qs)
    inner = add_controls(Circuit(c.registers, tuple(inner_gates)), rq)
    enc = _encode_remainder(rq, spec.r)
    marking = enc + list(inner.gates) + enc
    return _remainder_skeleton(spec.k, spec.r, spec.n, marking)
