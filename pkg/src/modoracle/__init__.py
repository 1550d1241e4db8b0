"""Phase oracles for modular properties of quantum-encoded integers.

Build circuits that mark multiples (or any remainder class) of an
integer, compose them with comparator oracles, amplify the marked
states with Grover iterations, verify everything by exact statevector
simulation, and measure transpiled depth scaling.
"""
from .circuit import (
    Circuit,
    Gate,
    QubitRef,
    add_controls,
    inverse,
    new_circuit,
    structural_depth,
)
from .grover import (
    GroverPlan,
    diffuser,
    grover_circuit,
    optimal_repetitions,
    predicted_probability,
)
from .oracles import (
    OracleSpec,
    RemainderTable,
    classical_multiples,
    composed_oracle,
    less_than_oracle,
    multiples_oracle,
    range_oracle,
    remainder_oracle,
    remainder_register_width,
    remainders_pow2,
)
from .qasm import to_qasm
from .qft import ModAddParams, modulo_add_const, modulo_sub_const, phi_add_const, qft
from .simulate import (
    Histogram,
    Statevector,
    phase_signature,
    probabilities,
    sample,
    simulate,
)
from .transpile import (
    DepthReport,
    DepthRow,
    FitResult,
    depth_sweep,
    linear_fit,
    transpile_basis,
    transpiled_depth,
)

__all__ = [
    "Circuit", "Gate", "QubitRef", "new_circuit", "add_controls", "inverse",
    "structural_depth", "qft", "phi_add_const", "ModAddParams",
    "modulo_add_const", "modulo_sub_const", "OracleSpec", "RemainderTable",
    "remainders_pow2", "remainder_register_width", "classical_multiples",
    "multiples_oracle", "remainder_oracle", "less_than_oracle", "range_oracle",
    "composed_oracle", "GroverPlan", "diffuser", "grover_circuit",
    "predicted_probability", "optimal_repetitions", "Statevector", "Histogram",
    "simulate", "phase_signature", "probabilities", "sample", "transpile_basis",
    "transpiled_depth", "depth_sweep", "linear_fit", "DepthReport", "DepthRow",
    "FitResult", "to_qasm",
]

__version__ = "0.1.0"
