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

import gc
import os
from tempfile import TemporaryDirectory

import pytest

from lnalg.exactla import ChainComplex, GradedVectorSpace
from lnalg.io import load_example
from lnalg.linfty import LieNAlgebra, LInftyMorphism, abelian_algebra
from lnalg.maurer_cartan import BoundedCdga


@pytest.fixture
def solvable():
    """The two dimensional solvable Lie algebra ``[e1, e2] = e1``."""
    return load_example("solvable-g")


@pytest.fixture
def solvable_quotient():
    """The bundle with ``f: g -> k`` killing ``e1``."""
    return load_example("solvable-quotient")


@pytest.fixture
def so3():
    space = GradedVectorSpace([("e1", 0), ("e2", 0), ("e3", 0)])
    return LieNAlgebra.from_brackets(
        space,
        {
            ("e1", "e2"): {"e3": 1},
            ("e2", "e3"): {"e1": 1},
            ("e1", "e3"): {"e2": -1},
        },
    )


@pytest.fixture
def string_so3():
    return load_example("string-so3")


@pytest.fixture
def string_extension():
    """The bundle with the string Lie 2-algebra acting on so(3) and the
    strict projection ``f`` onto so(3)."""
    return load_example("string-extension")


@pytest.fixture
def theta_cubed():
    """The bundle with ``L`` and ``B = Q[θ]/(θ^3)``."""
    return load_example("mc-theta3")


@pytest.fixture
def acyclic():
    """The abelian algebra ``a -> b`` with ``d a = b``."""
    space = GradedVectorSpace([("b", 0), ("a", 1)])
    return abelian_algebra(space, {"a": {"b": 1}})


@pytest.fixture
def acyclic_complex():
    space = GradedVectorSpace([("b", 0), ("a", 1)])
    return ChainComplex(space, {1: {0: 1}})


@pytest.fixture
def line():
    """The abelian algebra on one vector in degree 1."""
    return abelian_algebra(GradedVectorSpace([("a'", 1)]))


@pytest.fixture
def theta_cdga():
    return BoundedCdga.truncated_polynomial(2, 3)


@pytest.fixture
def identity(solvable):
    return LInftyMorphism.identity(solvable)


@pytest.fixture(params=["json"])
def temp_file_path(request):
    """Temporary file in a temporary directory for use when tests need
    to write, and sometimes read again, data to, and from, a file.
    """
    ext = request.param
    with TemporaryDirectory() as tmp:
        file_path = os.path.join(tmp, "data_temp." + ext)
        yield file_path
        gc.collect()
