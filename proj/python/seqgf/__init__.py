"""Sequence-space generalized functions.

Colombeau-type algebras realized as sequence spaces with ultranorms
||f|| = limsup p(f_n)^(r_n): exact symbolic norms, generalized numbers,
Fourier-side hyperfunctions on the circle, and association tests.
"""

from _seqgf import *  # noqa: F401,F403
from _seqgf import __version__  # noqa: F401
