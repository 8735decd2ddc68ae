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

"""Brown factorization of arbitrary morphisms through a path object."""

from lnalg.factorization.strict_factor import Factorization, path_object
from lnalg.linfty.morphism import LInftyMorphism, compose


def brown_factorize(f):
    """Factor any morphism into a weak equivalence and a fibration.

    For ``f: X -> Y`` and a path object ``Y -> Y^I -> Y x Y`` the middle
    object is the pullback ``X x_Y Y^I`` of ``d0`` along `f`. The weak
    equivalence is the filler ``(id, s f)`` and the fibration is
    ``d1 q``.

    Parameters
    ----------
    f : LInftyMorphism

    Returns
    -------
    Factorization
        With :attr:`~Factorization.retraction` the acyclic fibration
        ``X x_Y Y^I -> X`` of which ``j`` is a section.
    """
    from lnalg.pullback.general import pullback_fibration

    path = path_object(f.target)
    square = pullback_fibration(path.d0, f)
    j = square.lift(LInftyMorphism.identity(f.source), compose(path.s, f))
    p = compose(path.d1, square.q)
    return Factorization(j, p, retraction=square.q_prime)
