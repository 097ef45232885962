"""Dense matrix representation of words and elements.

The numerical cross-check for the exact layer: letters map to the standard
2x2 spin matrices, words to Kronecker products (first site leftmost),
elements to coefficient-weighted sums.  Everything here is built from the
explicit matrices, never from the symbolic composition rules, so the two
routes stay independent.
"""

from __future__ import annotations

import numpy as np

from .element import Element
from .pauli import PauliWord

__all__ = [
    "DimensionMismatchError",
    "LETTER_MATRICES",
    "TOLERANCE",
    "approx_equal",
    "element_matrix",
    "word_matrix",
]

# All matrices are tiny (dimension 4 at two sites) with entries of unit
# magnitude, so 1e-12 is loose against roundoff yet catches any phase slip.
TOLERANCE = 1e-12


class DimensionMismatchError(ValueError):
    """Two matrices of different shape were compared."""


LETTER_MATRICES = (
    np.eye(2, dtype=complex),
    np.array([[0, 1], [1, 0]], dtype=complex),
    np.array([[0, -1j], [1j, 0]], dtype=complex),
    np.array([[1, 0], [0, -1]], dtype=complex),
)


def word_matrix(word: PauliWord) -> np.ndarray:
    """Kronecker product of the per-site base matrices."""
    m = LETTER_MATRICES[word.letters[0]]
    for x in word.letters[1:]:
        m = np.kron(m, LETTER_MATRICES[x])
    return m


def element_matrix(elem: Element) -> np.ndarray:
    """Coefficient-weighted sum of word matrices."""
    dim = 2 ** elem.arity
    out = np.zeros((dim, dim), dtype=complex)
    for w, c in elem.terms.items():
        out += complex(c) * word_matrix(w)
    return out


def approx_equal(a: np.ndarray, b: np.ndarray, tol: float = TOLERANCE) -> bool:
    """True iff the max-norm of the difference is at most ``tol``."""
    if a.shape != b.shape:
        raise DimensionMismatchError(f"shapes differ: {a.shape} vs {b.shape}")
    return float(np.max(np.abs(a - b))) <= tol
