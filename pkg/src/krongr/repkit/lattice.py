"""Subrepresentation lattices, enumerated sink side first.

For every sink subspace ``U1`` the admissible source parts are exactly the
subspaces of ``W(U1) = intersection of alpha_i^-1(U1)``.  Preimage intersections
collapse quickly for the surjective-leaning maps of preinjective and regular
modules, so the outer loop over ``U1`` keeps the node count close to the true
lattice size.  The exact size is known before enumeration starts: it is the sum
of the subspace counts of every ``W(U1)``.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from ..errors import BudgetExceeded
from . import ffield as ff
from .rep import Rep, SubRep, contained_in

DEFAULT_LATTICE_BUDGET = 10**6


def lattice_size(rep: Rep, budget: int = DEFAULT_LATTICE_BUDGET) -> int:
    """Exact number of subrepresentations (Gaussian-coefficient count per ``U1``)."""
    outer = ff.count_subspaces(rep.b, rep.p)
    if outer > budget:
        raise BudgetExceeded("subrepresentation lattice (sink subspaces alone)", outer, budget)
    total = 0
    for U1 in ff.subspaces(ff.full_space(rep.b), rep.p):
        total += ff.count_subspaces(len(rep.joint_preimage(U1)), rep.p)
        if total > budget:
            raise BudgetExceeded("subrepresentation lattice", total, budget)
    return total


@dataclass
class Lattice:
    rep: Rep
    nodes: list[SubRep]
    _index: dict[SubRep, int] = field(default_factory=dict, repr=False)

    def __post_init__(self):
        self._index = {u: k for k, u in enumerate(self.nodes)}

    def __len__(self):
        return len(self.nodes)

    def __contains__(self, u: SubRep) -> bool:
        return u in self._index

    def lower_covers(self, u: SubRep) -> list[SubRep]:
        """Submodules of length ``|u| - 1`` inside ``u`` (the simple quotients are 1-dimensional)."""
        p, rep = self.rep.p, self.rep
        out = [SubRep(h, u.U1) for h in ff.hyperplanes(u.U2, p)]
        img = rep.image_of(u.U2)
        out.extend(SubRep(u.U2, h) for h in ff.hyperplanes(u.U1, p) if ff.is_subspace(img, h, p))
        return out

    def includes(self, small: SubRep, big: SubRep) -> bool:
        return contained_in(small, big, self.rep.p)


def enumerate_submodules(rep: Rep, budget: int = DEFAULT_LATTICE_BUDGET) -> Lattice:
    """All subrepresentations, deduplicated by canonical form, ordered by (length, key)."""
    lattice_size(rep, budget)
    nodes = []
    for U1 in ff.subspaces(ff.full_space(rep.b), rep.p):
        W = rep.joint_preimage(U1)
        for U2 in ff.subspaces(W, rep.p):
            nodes.append(SubRep(U2, U1))
    nodes.sort(key=lambda u: (u.length, u))
    return Lattice(rep, nodes)
