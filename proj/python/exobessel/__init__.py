"""Classical and exotic Bessel harmonic-analysis operators.

Thin Python facade over the C++ core: special functions, heat/Poisson/Riesz/
potential kernels, operator application on sampled functions, power-weighted
norms, and the sharp (p, delta) boundedness predicates.
"""

try:
    from ._core import *  # noqa: F401,F403  (installed layout)
except ImportError:
    # in-tree layout: the built _core sits on PYTHONPATH (build/python)
    from _core import *  # noqa: F401,F403

__all__ = [n for n in dir() if not n.startswith("_")]
__version__ = "0.1.0"
