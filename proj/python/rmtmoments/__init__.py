"""Moment-method toolkit for random matrix spectra.

Thin python layer over the C++ core: ensemble sampling, dense Hermitian
eigenvalues, trace and modified (orthogonal-polynomial) moments, exact
non-backtracking walk oracles, the diagram catalog and its polytope
integrals.
"""

from ._rmtmoments import *  # noqa: F401,F403
from ._rmtmoments import __doc__ as _core_doc  # noqa: F401
