"""Two-photon pumped quantum heat engine toolkit.

Python bindings over the C++ core: unit reduction, effective hot-bath
fitting, six-level density-matrix dynamics, steady-state engine observables
with maximization over the reduced transition frequency, the perturbative
spectroscopic regime, and the SPDC twin-photon source model.
"""

from ._core import *  # noqa: F401,F403
from ._core import __doc__ as _core_doc  # noqa: F401

__version__ = "0.1.0"
