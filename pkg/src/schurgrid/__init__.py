"""Exact arithmetic for descent statistics of permutation sets.

The package computes generating functions of descent sets over sets and
multisets of permutations in the fundamental quasisymmetric basis, decides
whether they are symmetric and Schur-positive, enumerates geometric grid
classes, and ships a harness of named verification checks plus a CLI.

Subpackage layout (one module per concern):

- :mod:`schurgrid.permutations` -- permutations, descent sets, modality.
- :mod:`schurgrid.tableaux` -- partitions, skew shapes, standard tableaux, RSK.
- :mod:`schurgrid.qsym` -- fundamental-basis vectors, Schur expansion, Pieri moves.
- :mod:`schurgrid.characters` -- symmetric group characters and Kronecker products.
- :mod:`schurgrid.grids` -- geometric grid classes: matrices, enumeration, predicates.
- :mod:`schurgrid.permsets` -- multisets of permutations and their algebra.
- :mod:`schurgrid.setexpr` -- the small set-expression language used by the CLI.
- :mod:`schurgrid.checks` -- named verification checks and conjecture scanners.
- :mod:`schurgrid.cli` -- command line interface.
"""

from __future__ import annotations

__version__ = "0.1.0"
