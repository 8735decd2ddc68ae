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

"""Pullback of a strict fibration along an arbitrary morphism.

For a strict fibration ``f: L -> L''`` and ``g: L' -> L''`` the pullback
lives inside the product ``E = L' x L``. The coalgebra automorphisms
``H`` and ``J = H^-1`` of ``S(sE)`` move the graph of ``g`` into the
fiber product, and the brackets of the pullback are ``J delta H``
restricted to the suspended pullback space.
"""

from lnalg.base import (
    AxiomViolation,
    NoFiller,
    NotFibration,
    NotInSubspace,
    NotStrict,
    TypeMismatch,
)
from lnalg.coalgebra.structure_maps import (
    CoalgebraMorphismData,
    CoderivationData,
    compose_structure_maps,
)
from lnalg.coalgebra.words import format_word, multiply, vector_as_element, words
from lnalg.exactla.elimination import kernel, matrix_from_columns
from lnalg.exactla.subspace import Subspace
from lnalg.exactla.vector import add_to, scaled
from lnalg.factorization.strictify import fibration_section
from lnalg.linfty.algebra import LieNAlgebra
from lnalg.linfty.morphism import (
    LInftyMorphism,
    classify,
    compose,
    morphism_arity_bound,
    pairing,
    product,
)


class StrictPullbackData:
    """Pullback of a strict fibration `f` along `g`.

    Attributes
    ----------
    f, g : LInftyMorphism
    E : LieNAlgebra
        The product ``L' x L``, with the factor of `g` first.
    sigma : GradedLinearMap
        Section of ``F^1_1`` on suspended degrees >= 2.
    subspace : Subspace
        The suspended pullback space inside ``sE``.
    H, J : CoalgebraMorphismData
        Mutually inverse automorphisms of ``S(sE)``.
    algebra : LieNAlgebra
        The pullback.
    p : LInftyMorphism
        Projection to the source of `f`.
    p_prime : LInftyMorphism
        Projection to the source of `g`, the base change of `f`.
    """

    def __init__(self, f, g):
        if f.target != g.target:
            raise TypeMismatch("Morphisms must have a common target.")
        if not f.is_strict():
            raise NotStrict("The fibration must be strict.")
        if not classify(f).is_fibration:
            raise NotFibration("Morphism is not surjective in positive degrees.")
        self.f = f
        self.g = g
        L, Lp = f.source, g.source
        self.E, self.pr_prime, self.pr = product(Lp, L)
        self.offset = Lp.space.dim
        self.sigma = fibration_section(f)
        self.subspace = self._pullback_subspace()
        self.H = self._automorphism(1)
        self.J = self._automorphism(-1)
        self.algebra = self._pullback_algebra()
        self.p = self._projection(self.pr)
        self.p_prime = self._projection(self.pr_prime)

    def _shift(self, vector):
        return {k + self.offset: c for k, c in vector.items()}

    def _pullback_subspace(self):
        sE = self.E.suspended
        target = self.f.target.suspended
        G1 = self.g.data.linear
        F1 = self.f.data.linear
        vectors = []
        names = []
        for d in sE.support:
            cols = sE.indices_in_degree(d)
            rows = target.indices_in_degree(d)

            def _column(i, d=d):
                if i < self.offset:
                    return G1.column(i) if d == 1 else {}
                return scaled(F1.column(i - self.offset), -1)

            matrix = matrix_from_columns(rows, cols, _column)
            for free, vector in kernel(matrix):
                vectors.append({cols[k]: v for k, v in enumerate(vector) if v != 0})
                names.append(sE.name(cols[free]))
        return Subspace(sE, vectors, names)

    def _automorphism(self, sign):
        """``H`` for ``sign = 1`` and ``J`` for ``sign = -1``."""
        sE = self.E.suspended
        entries = {}
        for i in range(sE.dim):
            entries[(i,)] = {i: 1}
        for word, value in self.g.data.entries.items():
            image = self._shift(self.sigma(value))
            entry = entries.setdefault(word, {})
            add_to(entry, image, sign)
        return CoalgebraMorphismData(sE, sE, entries, max(self.g.data.bound, 1))

    def embed(self, word):
        """A word of the suspended pullback as an element of S(sE)."""
        factors = [vector_as_element(self.subspace.vectors[i]) for i in word]
        return multiply(self.E.suspended, *factors)

    def coordinates(self, vector):
        try:
            return self.subspace.coordinates(vector)
        except NotInSubspace as error:
            raise AxiomViolation(
                "Structure map does not land in the pullback.", witness=error.witness
            )

    def _pullback_algebra(self):
        space = self.subspace.space
        bound = space.top_degree + 1 if space.dim else 1
        entries = {}
        for word in words(space, bound, {d + 1 for d in space.support}):
            image = self.E.structure.apply(self.H.apply(self.embed(word)))
            value = self.J.evaluate(image)
            if value:
                entries[word] = self.coordinates(value)
        structure = CoderivationData(space, entries)
        return LieNAlgebra(space.desuspend(), structure)

    def _projection(self, pr):
        """``pr H`` restricted to the pullback."""
        space = self.subspace.space
        target = pr.target
        composite = compose_structure_maps(pr.data, self.H)
        entries = {}
        bound = morphism_arity_bound(target)
        for word in words(space, bound, set(target.suspended.support)):
            value = composite.evaluate(self.embed(word))
            if value:
                entries[word] = value
        data = CoalgebraMorphismData(space, target.suspended, entries)
        return LInftyMorphism(self.algebra, target, data)

    def lift(self, a, b):
        """The morphism into the pullback induced by a commuting cone.

        Parameters
        ----------
        a : LInftyMorphism
            ``T -> L'``, into the source of `g`.
        b : LInftyMorphism
            ``T -> L``, into the source of `f`, with ``g a = f b``.

        Returns
        -------
        LInftyMorphism
            ``u: T -> pullback`` with ``p' u = a`` and ``p u = b``.

        Raises
        ------
        NoFiller
            If the cone does not commute.
        """
        if compose(self.g, a) != compose(self.f, b):
            raise NoFiller("The cone does not commute.")
        T = a.source
        cone = pairing(a, b, self.E)
        composite = compose_structure_maps(self.J, cone.data)
        entries = {}
        target = self.algebra
        for word in words(T.suspended, morphism_arity_bound(target),
                          set(target.suspended.support)):
            value = composite.value(word)
            if value:
                try:
                    entries[word] = self.subspace.coordinates(value)
                except NotInSubspace as error:
                    raise NoFiller(
                        "The cone does not factor through the pullback.",
                        witness=format_word(T.suspended, word),
                    ) from error
        data = CoalgebraMorphismData(T.suspended, target.suspended, entries)
        return LInftyMorphism(T, target, data)

    def __repr__(self):
        return f"<StrictPullbackData: {self.algebra}>"


def pullback_strict_fibration(f, g):
    """Pullback of the strict fibration `f` along `g`.

    Returns
    -------
    StrictPullbackData
        With the pullback as :attr:`algebra`, the projection ``p`` to the
        source of `f` and ``p_prime`` to the source of `g`.

    Raises
    ------
    NotStrict
        If `f` is not strict.
    NotFibration
        If `f` is not a fibration.
    """
    return StrictPullbackData(f, g)
