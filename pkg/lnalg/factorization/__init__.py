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

"""Factorizations, path objects and strictification of fibrations."""

from lnalg.factorization.path_complex import (
    PathComplexData,
    factor_chain_map,
    path_complex,
)
from lnalg.factorization.strict_factor import (
    Factorization,
    ObstructionState,
    PathObject,
    SymmetrizedHomotopy,
    factor_strict_morphism,
    obstruction_cycle,
    path_object,
)
from lnalg.factorization.strictify import fibration_section, strictify_fibration
from lnalg.factorization.brown import brown_factorize
from lnalg.factorization.axioms import AxiomReport, verify_cfo_axioms

# Lists what will be imported when calling "from lnalg.factorization import *"
__all__ = [
    "AxiomReport",
    "brown_factorize",
    "factor_chain_map",
    "factor_strict_morphism",
    "Factorization",
    "fibration_section",
    "obstruction_cycle",
    "ObstructionState",
    "path_complex",
    "path_object",
    "PathComplexData",
    "PathObject",
    "strictify_fibration",
    "SymmetrizedHomotopy",
    "verify_cfo_axioms",
]
