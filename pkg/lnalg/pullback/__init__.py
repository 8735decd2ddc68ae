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

"""Pullbacks of fibrations and their verification."""

from lnalg.pullback.strict import StrictPullbackData, pullback_strict_fibration
from lnalg.pullback.general import PullbackSquare, fiber, pullback_fibration
from lnalg.pullback.verify import (
    in_coalgebra_pullback,
    verify_pullback_claims,
    verify_tangent_exactness,
    verify_universal_property,
)

# Lists what will be imported when calling "from lnalg.pullback import *"
__all__ = [
    "fiber",
    "in_coalgebra_pullback",
    "pullback_fibration",
    "pullback_strict_fibration",
    "PullbackSquare",
    "StrictPullbackData",
    "verify_pullback_claims",
    "verify_tangent_exactness",
    "verify_universal_property",
]
