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

"""Postnikov towers, quasi-split fibrations and tower decompositions."""

from lnalg.postnikov.truncation import (
    LESS,
    LESS_EQUAL,
    Truncation,
    connecting_morphism,
    truncate,
    truncate_morphism,
)
from lnalg.postnikov.tower import PostnikovTower, TowerMorphism, tower, tower_morphism
from lnalg.postnikov.quasi_split import (
    NOT_QUASI_SPLIT,
    QUASI_SPLIT,
    UNDETERMINED,
    QuasiSplit,
    is_quasi_split,
)
from lnalg.postnikov.decomposition import (
    AcyclicSplitting,
    TowerSplitting,
    TwistedProduct,
    decompose_tower_step1,
    decompose_tower_step2,
    split_acyclic_fibration,
    twisted_product_bracket,
)

# Lists what will be imported when calling "from lnalg.postnikov import *"
__all__ = [
    "AcyclicSplitting",
    "connecting_morphism",
    "decompose_tower_step1",
    "decompose_tower_step2",
    "is_quasi_split",
    "LESS",
    "LESS_EQUAL",
    "NOT_QUASI_SPLIT",
    "PostnikovTower",
    "QUASI_SPLIT",
    "QuasiSplit",
    "split_acyclic_fibration",
    "tower",
    "tower_morphism",
    "TowerMorphism",
    "TowerSplitting",
    "truncate",
    "truncate_morphism",
    "Truncation",
    "twisted_product_bracket",
    "TwistedProduct",
    "UNDETERMINED",
]
