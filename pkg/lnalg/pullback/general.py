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

from lnalg.base import NotFibration, TypeMismatch
from lnalg.factorization.strictify import strictify_fibration
from lnalg.linfty.algebra import zero_algebra
from lnalg.linfty.morphism import LInftyMorphism, classify, compose, inverse
from lnalg.pullback.strict import pullback_strict_fibration


class PullbackSquare:
    """Pullback of a fibration ``f: L -> L''`` along ``g: L' -> L''``.

    Unpacks as ``(algebra, q, q_prime)``.

    Attributes
    ----------
    f, g : LInftyMorphism
    algebra : LieNAlgebra
        The pullback ``L_P``.
    q : LInftyMorphism
        ``L_P -> L``.
    q_prime : LInftyMorphism
        ``L_P -> L'``, the base change of `f`.
    strict : StrictPullbackData
        Pullback of the strictification of `f`.
    psi : LInftyMorphism or None
        The isomorphism strictifying `f`, None if `f` is strict.
    """

    def __init__(self, f, g, strict, psi=None):
        self.f = f
        self.g = g
        self.strict = strict
        self.psi = psi
        self.algebra = strict.algebra
        self.q = strict.p if psi is None else compose(psi, strict.p)
        self.q_prime = strict.p_prime

    def __iter__(self):
        return iter((self.algebra, self.q, self.q_prime))

    def lift(self, a, b):
        """The filler of the cone ``a: T -> L'``, ``b: T -> L``.

        Raises
        ------
        NoFiller
            If ``g a != f b``.
        """
        if self.psi is not None:
            b = compose(inverse(self.psi), b)
        return self.strict.lift(a, b)

    def __repr__(self):
        kind = "strict" if self.psi is None else "strictified"
        return f"<PullbackSquare: {kind}. {self.algebra}>"


def pullback_fibration(f, g):
    """Pullback of a fibration along an arbitrary morphism.

    A non-strict `f` is first strictified, ``f = (f psi) psi^-1``, and
    the strict pullback is composed with ``psi``.

    Parameters
    ----------
    f : LInftyMorphism
        Fibration ``L -> L''``.
    g : LInftyMorphism
        ``L' -> L''``.

    Returns
    -------
    PullbackSquare

    Raises
    ------
    NotFibration
        If `f` is not a fibration.
    """
    if f.target != g.target:
        raise TypeMismatch("Morphisms must have a common target.")
    if not classify(f).is_fibration:
        raise NotFibration("Morphism is not surjective in positive degrees.")
    if f.is_strict():
        return PullbackSquare(f, g, pullback_strict_fibration(f, g))
    psi, _ = strictify_fibration(f)
    strict = pullback_strict_fibration(compose(f, psi), g)
    return PullbackSquare(f, g, strict, psi)


def fiber(f):
    """The fiber of a fibration, its pullback along ``0 -> L''``.

    Returns
    -------
    K : LieNAlgebra
    inclusion : LInftyMorphism
        ``K -> L``.
    """
    zero = LInftyMorphism(zero_algebra(), f.target, check=False)
    square = pullback_fibration(f, zero)
    return square.algebra, square.q
