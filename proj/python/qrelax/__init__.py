"""T1 relaxation estimates for capacitively biased superconducting qubits.

Thin Python face over the C++ core: netlist parsing, driving-point
admittance, capacitance estimators, the T1 formulas and the topology
builders. Infinite relaxation times come back as float('inf').
"""

from qrelax._core import *  # noqa: F401,F403
from qrelax._core import __doc__ as _core_doc

__doc__ = _core_doc or __doc__
__version__ = "0.1.0"
