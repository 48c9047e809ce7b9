"""Invariants of the twisted regular neighborhood of a realizing curve.

Attaching two half-twisted bands at each double point of a curve turns its
regular neighborhood into a surface N' that deformation-retracts onto a
bouquet of d circles, so chi(N') = 1 - d.  Its boundary components split
into the all-A and all-B splices glued along the original boundary, giving
r' = mu(s_A) + mu(s_B) - 1, and it is orientable exactly when every chord
joins an odd label to an even label (each band loop crosses |i-j|+1
half-twists).  Everything here is derived from those three facts; no
surface is ever built.
"""

from __future__ import annotations

from dataclasses import dataclass

from .bracket import mu_extremes
from .diagram import ChordDiagram


class EmptyDiagramError(ValueError):
    def __init__(self) -> None:
        super().__init__("neighborhood invariants need at least one chord")


@dataclass(frozen=True)
class SurfaceInvariants:
    orientable: bool
    euler_characteristic: int
    boundary_components: int
    #: Orientable genus, or the crosscap number when `orientable` is False.
    genus: int


def neighborhood_invariants(diagram: ChordDiagram) -> SurfaceInvariants:
    d = diagram.d
    if d == 0:
        raise EmptyDiagramError()
    orientable = diagram.parity_condition()
    mu_a, mu_b = mu_extremes(diagram)
    boundary = mu_a + mu_b - 1
    chi = 1 - d
    if orientable:
        # chi = 2 - 2g - r'
        twice_genus = 2 - boundary - chi
        if twice_genus < 0 or twice_genus % 2:
            raise RuntimeError(
                f"inconsistent orientable genus: chi={chi}, r'={boundary}"
            )
        genus = twice_genus // 2
    else:
        # chi = 2 - g - r' with g the crosscap number
        genus = 2 - boundary - chi
        if genus < 1:
            raise RuntimeError(
                f"inconsistent crosscap number {genus}: chi={chi}, r'={boundary}"
            )
    return SurfaceInvariants(orientable, chi, boundary, genus)
