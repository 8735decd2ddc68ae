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

"""Tame L-infinity algebras from bounded cdgas and their Maurer-Cartan
elements."""

from lnalg.maurer_cartan.cdga import BoundedCdga
from lnalg.maurer_cartan.tensor import (
    TensorAlgebra,
    tensor,
    tensor_morphism,
    tensor_morphism_data,
    tensor_space,
)
from lnalg.maurer_cartan.mc import (
    DEFAULT_SAMPLE_CAP,
    DEFAULT_SAMPLE_VALUES,
    MCPullback,
    curvature,
    curvature_polynomial,
    is_mc,
    mc_point,
    mc_pullback_bijection,
    pushforward,
    pushforward_polynomial,
    sample_grid,
)

# Lists what will be imported when calling "from lnalg.maurer_cartan import *"
__all__ = [
    "BoundedCdga",
    "curvature",
    "curvature_polynomial",
    "DEFAULT_SAMPLE_CAP",
    "DEFAULT_SAMPLE_VALUES",
    "is_mc",
    "mc_point",
    "mc_pullback_bijection",
    "MCPullback",
    "pushforward",
    "pushforward_polynomial",
    "sample_grid",
    "tensor",
    "tensor_morphism",
    "tensor_morphism_data",
    "tensor_space",
    "TensorAlgebra",
]
