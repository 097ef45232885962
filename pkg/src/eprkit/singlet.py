"""The singlet sector: psi, its projector, and exact expectations.

The pair correlators E11, E22, E33 commute with one another, and the three
factors (E_kk - 1)/2 multiply in any order to the same element psi.  That
element satisfies ``psi * psi = -psi``: it is the negative of a rank-one
projector, and the sign is kept as constructed rather than repaired, with
the honest projector ``-psi`` exposed alongside.  Mod-psi equality means
equality after right-multiplication by psi, i.e. on the singlet sector
only; conflating it with strict equality is exactly the error the fallacy
trace in :mod:`eprkit.epr` pins down.
"""

from __future__ import annotations

from fractions import Fraction

from .element import E, Element, ONE, Scalar

__all__ = [
    "NotAnInvolutionError",
    "SingletState",
    "build_singlet",
]


class NotAnInvolutionError(ValueError):
    """Outcome probabilities were requested for ``a`` with ``a*a != 1``."""


_HALF = Scalar(Fraction(1, 2))


class SingletState:
    """psi, its projector -psi, and a cache of exact mean values."""

    def __init__(self, psi: Element, projector: Element):
        self.psi = psi
        self.projector = projector
        self._means: dict[Element, Scalar] = {}

    def equal_mod_psi(self, a: Element, b: Element) -> bool:
        """True when ``(a - b) * psi`` vanishes exactly."""
        return ((a - b) * self.psi).is_zero

    def expectation(self, a: Element) -> Scalar:
        """Exact mean value tr(P a) / tr(P) against the projector P = -psi."""
        if a not in self._means:
            num = (self.projector * a).trace_normalized()
            self._means[a] = num / self.projector.trace_normalized()
        return self._means[a]

    def outcome_probabilities(self, a: Element) -> tuple[Scalar, Scalar]:
        """Born pair ((1 + <a>)/2, (1 - <a>)/2); requires ``a*a = 1``."""
        if a * a != Element.one(a.arity):
            raise NotAnInvolutionError(
                f"not a +1/-1 observable: ({a}) squared is not the identity")
        mean = self.expectation(a)
        return (ONE + mean) / 2, (ONE - mean) / 2

    def half_plus_mean_probabilities(self, a: Element) -> tuple[Scalar, Scalar]:
        """Alternative bookkeeping pair (1/2 + <a>, 1/2 - <a>).

        Sums to 1 but leaves [0, 1] whenever |<a>| > 1/2; reported next to
        the Born pair so the discrepancy between the two rules stays visible
        instead of being silently resolved.
        """
        mean = self.expectation(a)
        return _HALF + mean, _HALF - mean


def build_singlet() -> SingletState:
    """Construct psi = psi1*psi2*psi3 from the factors psi_k = (E_kk - 1)/2."""
    f1, f2, f3 = ((E(k, k) - 1) / 2 for k in (1, 2, 3))
    psi = f1 * f2 * f3
    return SingletState(psi=psi, projector=-psi)
