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

"""Lie n-algebras and weak L-infinity morphisms."""

from lnalg.linfty.algebra import (
    LieNAlgebra,
    abelian_algebra,
    decalage_sign,
    h0_lie_algebra,
    zero_algebra,
)
from lnalg.linfty.morphism import (
    LInftyMorphism,
    MorphismClass,
    classify,
    compose,
    h0_morphism,
    inverse,
    pairing,
    product,
    product_morphism,
    tangent,
    terminal_morphism,
)

# Lists what will be imported when calling "from lnalg.linfty import *"
__all__ = [
    "abelian_algebra",
    "classify",
    "compose",
    "decalage_sign",
    "h0_lie_algebra",
    "h0_morphism",
    "inverse",
    "LieNAlgebra",
    "LInftyMorphism",
    "MorphismClass",
    "pairing",
    "product",
    "product_morphism",
    "tangent",
    "terminal_morphism",
    "zero_algebra",
]
