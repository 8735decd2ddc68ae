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

"""Symmetric words, structure maps and homology of cofree coalgebras."""

from lnalg.coalgebra.words import (
    format_word,
    koszul_sign,
    multiply,
    normalize_word,
    reduced_coproduct,
    shuffles,
    word_degree,
    words,
)
from lnalg.coalgebra.structure_maps import (
    CoalgebraMorphismData,
    CoderivationData,
    SymMultiMap,
    coderivation_restriction_projection,
    compose_structure_maps,
    invert_structure_maps,
    is_codifferential,
    is_dg_morphism,
    morphism_restriction_projection,
)
from lnalg.coalgebra.homology import (
    WordComplex,
    coalgebra_chain_map,
    coalgebra_complex,
    reduced_coalgebra_homology,
)

# Lists what will be imported when calling "from lnalg.coalgebra import *"
__all__ = [
    "coalgebra_chain_map",
    "coalgebra_complex",
    "CoalgebraMorphismData",
    "CoderivationData",
    "coderivation_restriction_projection",
    "compose_structure_maps",
    "format_word",
    "invert_structure_maps",
    "is_codifferential",
    "is_dg_morphism",
    "koszul_sign",
    "morphism_restriction_projection",
    "multiply",
    "normalize_word",
    "reduced_coalgebra_homology",
    "reduced_coproduct",
    "shuffles",
    "SymMultiMap",
    "word_degree",
    "WordComplex",
    "words",
]
