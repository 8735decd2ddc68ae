# -*- coding: utf-8 -*-
# Copyright 2018-2021 the lnalg developers
#
# This file is part of lnalg.
#
# lnalg is free software: you can redistribute it and/or modify
# it under the terms of the GNU General Public License as published by
# the Free Software Foundation, either version 3 of the License, or
# (at your option) any later version.
#
# lnalg is distributed in the hope that it will be useful,
# but WITHOUT ANY WARRANTY; without even the implied warranty of
# MERCHANTABILITY or FITNESS FOR A PARTICULAR PURPOSE.  See the
# GNU General Public License for more details.
#
# You should have received a copy of the GNU General Public License
# along with lnalg.  If not, see <http://www.gnu.org/licenses/>.

from lnalg.base import Verdict
from lnalg.linfty.morphism import compose
from lnalg.postnikov.truncation import (
    LESS,
    LESS_EQUAL,
    connecting_morphism,
    truncate,
    truncate_morphism,
)


class PostnikovTower:
    """The tower ``tau_{<=M} L -> tau_{<M} L -> tau_{<=M-1} L -> ... ->
    tau_{<=0} L``.

    Attributes
    ----------
    algebra : LieNAlgebra
    top : int
        ``M``, by default the top degree of the algebra.
    truncations : list of Truncation
        The stages from the top down.
    maps : list of LInftyMorphism
        The strict connecting morphisms ``q``, one per pair of
        consecutive stages.
    """

    def __init__(self, L, top=None):
        if top is None:
            top = L.space.top_degree if L.space.dim else 0
        self.algebra = L
        self.top = int(top)
        self.truncations = []
        for m in range(self.top, -1, -1):
            self.truncations.append(truncate(L, m, LESS_EQUAL))
            if m >= 1:
                self.truncations.append(truncate(L, m, LESS))
        self.maps = [
            connecting_morphism(a, b)
            for a, b in zip(self.truncations, self.truncations[1:])
        ]

    def stage(self, m, kind=LESS_EQUAL):
        """The truncation of degree `m` and `kind`."""
        for t in self.truncations:
            if t.m == m and t.kind == kind:
                return t
        raise KeyError(f"No stage τ{kind}{m} in the tower.")

    def __iter__(self):
        return iter(self.truncations)

    def __len__(self):
        return len(self.truncations)

    def __getitem__(self, i):
        return self.truncations[i]

    def __repr__(self):
        stages = " -> ".join(t.name for t in self.truncations)
        return f"<PostnikovTower: {stages}>"


class TowerMorphism:
    """The ladder of truncated morphisms induced by a morphism.

    Attributes
    ----------
    phi : LInftyMorphism
    source, target : PostnikovTower
    components : list of LInftyMorphism
        ``tau phi`` for every stage.
    """

    def __init__(self, phi, source, target, components):
        self.phi = phi
        self.source = source
        self.target = target
        self.components = components

    def is_commutative(self):
        """Whether every square ``q' tau phi = tau phi q`` commutes.

        Returns
        -------
        Verdict
            The witness is the name of the upper left stage of the first
            failing square.
        """
        for k, (q, q_prime) in enumerate(zip(self.source.maps, self.target.maps)):
            lhs = compose(q_prime, self.components[k])
            rhs = compose(self.components[k + 1], q)
            if lhs != rhs:
                return Verdict(
                    False,
                    witness=self.source.truncations[k].name,
                    message="Square of the tower morphism does not commute.",
                )
        return Verdict(True)

    def __iter__(self):
        return iter(self.components)

    def __repr__(self):
        return f"<TowerMorphism: {len(self.components)} stages>"


def tower(L, top=None):
    """The Postnikov tower of a Lie n-algebra.

    Returns
    -------
    PostnikovTower
    """
    return PostnikovTower(L, top)


def tower_morphism(phi):
    """The morphism of Postnikov towers induced by `phi`.

    Both towers start at the larger of the two top degrees.

    Returns
    -------
    TowerMorphism
    """
    spaces = [phi.source.space, phi.target.space]
    top = max((s.top_degree for s in spaces if s.dim), default=0)
    source = PostnikovTower(phi.source, top)
    target = PostnikovTower(phi.target, top)
    components = [
        truncate_morphism(phi, s.m, s.kind, s, t)
        for s, t in zip(source.truncations, target.truncations)
    ]
    return TowerMorphism(phi, source, target, components)
