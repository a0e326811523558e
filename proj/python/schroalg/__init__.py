"""Exact Schrodinger-algebra computations.

Thin wrapper over the C++ core: verification suites, exact Gram matrices,
canonical Appell polynomials, heat-type evolution on the Fock basis and the
gamma-Gaussian law of the tilted observables. Rationals cross the boundary
as "p/q" strings so nothing is ever rounded.
"""

try:
    from ._core import appell, density, evolve, gram, leibniz, moment, sample, verify
except ImportError:  # running against a build tree with _core alongside
    from _core import appell, density, evolve, gram, leibniz, moment, sample, verify

__all__ = [
    "appell",
    "density",
    "evolve",
    "gram",
    "leibniz",
    "moment",
    "sample",
    "verify",
]
