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

from lnalg.base import NotFibration, NotStrict, NotSurjective
from lnalg.coalgebra.structure_maps import (
    CoalgebraMorphismData,
    CoderivationData,
    extend_morphism,
    invert_structure_maps,
)
from lnalg.coalgebra.words import words
from lnalg.exactla.linear_map import section_of_surjection
from lnalg.exactla.vector import scaled
from lnalg.linfty.algebra import LieNAlgebra
from lnalg.linfty.morphism import (
    LInftyMorphism,
    classify,
    compose,
    morphism_arity_bound,
)


def fibration_section(f):
    """Section of ``F^1_1`` on suspended degrees >= 2, zero in degree 1.

    Raises
    ------
    NotFibration
        If ``f_1`` is not surjective in positive degrees.
    """
    linear = f.data.linear
    degrees = [d for d in linear.target.support if d >= 2]
    try:
        return section_of_surjection(linear, degrees)
    except NotSurjective as error:
        raise NotFibration(f"Morphism is not a fibration: {error}")


def strictify_fibration(f):
    """Replace a fibration by a strict one up to isomorphism.

    Finds an isomorphism ``phi: L^ -> L`` with ``Phi^1_1 = id`` such that
    ``f phi`` is strict with linear part ``f_1``. The higher structure
    maps are ``Phi^1_m = -sigma sum_{k >= 2} F^1_k Phi^k_m`` for the
    section ``sigma`` of :func:`fibration_section`, and the brackets of
    ``L^`` are transported along ``phi``.

    Parameters
    ----------
    f : LInftyMorphism
        A fibration ``L -> L'``.

    Returns
    -------
    phi : LInftyMorphism
        Isomorphism ``L^ -> L``.
    L_hat : LieNAlgebra
        Same underlying space as ``L``.

    Raises
    ------
    NotFibration
        If `f` is not a fibration.
    """
    if not classify(f).is_fibration:
        raise NotFibration("Morphism is not surjective in positive degrees.")
    L = f.source
    if f.is_strict():
        return LInftyMorphism.identity(L), L
    sigma = fibration_section(f)
    space = L.suspended
    bound = morphism_arity_bound(L)
    entries = {(i,): {i: 1} for i in range(space.dim)}

    def _value(word):
        return entries.get(word, {})

    for word in words(space, bound, set(space.support), min_length=2):
        partial = extend_morphism(
            space, space, _value, {word: 1}, lengths=range(2, len(word) + 1)
        )
        value = scaled(sigma(f.data.evaluate(partial)), -1)
        if value:
            entries[word] = value
    Phi = CoalgebraMorphismData(space, space, entries, bound)
    Psi = invert_structure_maps(Phi)

    structure = {}
    for word in words(space, L.arity_bound, {d + 1 for d in space.support}):
        image = L.structure.apply(Phi.apply({word: 1}))
        value = Psi.evaluate(image)
        if value:
            structure[word] = value
    L_hat = LieNAlgebra(L.space, CoderivationData(space, structure))
    phi = LInftyMorphism(L_hat, L, Phi)
    if not compose(f, phi).is_strict():
        raise NotStrict("Strictification did not produce a strict morphism.")
    return phi, L_hat
