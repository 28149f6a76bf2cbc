"""Exact separability / h-separability workbench.

Subpackages: exactalg (integer and mixed-modulus linear algebra),
finring (finite rings by structure constants), sepkit (separability of
ring extensions), fincat (finite-category brute force), tensorbialg
(truncated tensor bialgebra checks), cli (command line front door).
"""

__version__ = "0.1.0"
