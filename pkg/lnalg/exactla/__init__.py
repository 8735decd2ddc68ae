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

"""Exact rational linear algebra over graded vector spaces."""

from lnalg.exactla.graded_space import GradedVectorSpace, direct_sum
from lnalg.exactla.linear_map import (
    GradedLinearMap,
    is_surjective_in_degrees,
    section_of_surjection,
)
from lnalg.exactla.subspace import Subspace
from lnalg.exactla.chain_complex import (
    ChainComplex,
    ChainMap,
    Homology,
    contracting_homotopy_for_acyclic,
    homology,
    homology_dimensions,
    induced_map_on_homology,
    is_quasi_isomorphism,
)

# Lists what will be imported when calling "from lnalg.exactla import *"
__all__ = [
    "ChainComplex",
    "ChainMap",
    "contracting_homotopy_for_acyclic",
    "direct_sum",
    "GradedLinearMap",
    "GradedVectorSpace",
    "Homology",
    "homology",
    "homology_dimensions",
    "induced_map_on_homology",
    "is_quasi_isomorphism",
    "is_surjective_in_degrees",
    "section_of_surjection",
    "Subspace",
]
