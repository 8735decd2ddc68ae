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

from fractions import Fraction

import pytest
import sympy

from lnalg.base import AxiomViolation, NotMatched, NotMC
from lnalg.exactla import GradedVectorSpace
from lnalg.linfty import (
    LInftyMorphism,
    abelian_algebra,
    inverse,
    terminal_morphism,
)
from lnalg.maurer_cartan import (
    DEFAULT_SAMPLE_VALUES,
    BoundedCdga,
    MCPullback,
    curvature,
    curvature_polynomial,
    is_mc,
    mc_point,
    mc_pullback_bijection,
    pushforward,
    pushforward_polynomial,
    sample_grid,
    tensor,
    tensor_morphism_data,
)
from lnalg.pullback import pullback_fibration


@pytest.fixture
def exterior():
    return BoundedCdga.exterior(["ε1", "ε2"])


@pytest.fixture
def twisted_automorphism():
    A = abelian_algebra(GradedVectorSpace([("x", 0), ("y", 0), ("z", 1)]))
    maps = {"x": {"x": 1}, "y": {"y": 1}, "z": {"z": 1}, ("x", "y"): {"z": 1}}
    return LInftyMorphism.from_maps(A, A, maps)


@pytest.fixture
def theta_tensor(theta_cubed):
    return tensor(theta_cubed["L"], theta_cubed["B"])


class TestBoundedCdga:
    def test_truncated_polynomial(self, theta_cdga, theta_cubed):
        assert theta_cdga.space.names == ("1", "θ", "θ^2")
        assert theta_cdga.space.degrees == (0, 2, 4)
        assert theta_cdga.top_degree == 4
        assert theta_cdga.to_products() == {("θ", "θ"): {"θ^2": 1}}
        assert theta_cdga.to_differential() == {}
        assert theta_cdga.multiply({1: 1}, {1: 1}) == {2: 1}
        assert theta_cdga.multiply({1: 1}, {1: 1}, {1: 1}) == {}
        assert theta_cdga == theta_cubed["B"]

    def test_odd_truncated_polynomial(self):
        B = BoundedCdga.truncated_polynomial(1, 2, variable="t")
        assert B.space.names == ("1", "t")
        with pytest.raises(ValueError, match="Odd generators square to zero"):
            _ = BoundedCdga.truncated_polynomial(1, 3)

    def test_exterior(self, exterior):
        assert exterior.space.names == ("1", "ε1", "ε2", "ε1ε2")
        assert exterior.space.degrees == (0, 1, 1, 2)
        assert exterior.multiply({1: 1}, {2: 1}) == {3: 1}
        assert exterior.multiply({2: 1}, {1: 1}) == {3: -1}
        assert exterior.multiply({1: 1}, {1: 1}) == {}
        with pytest.raises(ValueError, match="odd degree"):
            _ = BoundedCdga.exterior(["ε1"], degree=2)

    def test_ground_field(self):
        k = BoundedCdga.ground_field()
        assert k.space.names == ("1",)
        assert k.multiply({0: 2}, {0: 3}) == {0: 6}

    def test_differential(self):
        B = BoundedCdga([("1", 0), ("t", 1), ("w", 2)], differential={"t": {"w": 1}})
        assert B.d({1: 2}) == {2: 2}
        assert B.to_differential() == {"t": {"w": 1}}

    @pytest.mark.parametrize(
        "basis, products, differential, message",
        [
            ([("1", 0), ("t", 1)], {("1", "t"): {"t": 1}}, None, "implicit"),
            (
                [("1", 0), ("t", 1), ("u", 1)],
                {("t", "u"): {"t": 1}},
                None,
                "has the wrong degree",
            ),
            (
                [("1", 0), ("t", 1), ("w", 2)],
                {("t", "t"): {"w": 1}},
                None,
                "contradicts graded commutativity",
            ),
            ([("1", 0), ("t", 1)], None, {"t": {"1": 1}}, "wrong degree"),
            ([("1", 0), ("t", -1)], None, None, "non-negative degrees"),
            ([("1", 1)], None, None, "must have degree 0"),
        ],
    )
    def test_invalid_raises(self, basis, products, differential, message):
        with pytest.raises(ValueError, match=message):
            _ = BoundedCdga(basis, products, differential)

    def test_d_squared_raises(self):
        basis = [("1", 0), ("u", 0), ("t", 1), ("w", 2)]
        with pytest.raises(AxiomViolation, match="does not square to zero"):
            _ = BoundedCdga(basis, differential={"u": {"t": 1}, "t": {"w": 1}})

    def test_associativity_raises(self):
        basis = [("1", 0), ("a", 2), ("b", 2), ("c", 4), ("e", 6)]
        products = {("a", "a"): {"c": 1}, ("b", "c"): {"e": 1}}
        B = BoundedCdga(basis, products, check=False)
        with pytest.raises(AxiomViolation, match="not associative"):
            B.check()


class TestTensorAlgebra:
    def test_space(self, theta_tensor):
        T = theta_tensor
        assert T.space.names[:3] == ("e1⊗1", "e1⊗θ", "e1⊗θ^2")
        assert T.space.degrees == (1, -1, -3, 1, -1, -3, 2, 0, -2)
        assert T.index("e2", "θ") == 4
        assert T.split(8) == (2, 2)
        assert T.degree_minus_one() == (1, 4)
        assert T.bound == 2

    def test_tameness(self, theta_tensor):
        assert theta_tensor.tameness_bound == 5
        assert theta_tensor.is_tame()
        assert not theta_tensor.is_tame(N=2)

    def test_structure(self, theta_tensor):
        # Suspended (u, u) for u = s(e1⊗θ)
        assert theta_tensor.value((1, 1)) == {8: -1}
        assert theta_tensor.value((4, 4)) == {8: 1}
        assert theta_tensor.value((1, 4)) == {}
        assert theta_tensor.structure.entries[(1, 1)] == {8: -1}

    def test_differential_of_cdga(self, line):
        B = BoundedCdga([("1", 0), ("t", 1), ("w", 2)], differential={"t": {"w": 1}})
        T = tensor(line, B)
        # a'⊗t has degree 0 and d(a'⊗t) = -a'⊗w
        assert T.value((T.index("a'", "t"),)) == {T.index("a'", "w"): -1}

    def test_tensor_morphism_data(self, theta_cubed):
        L, B = theta_cubed["L"], theta_cubed["B"]
        data = tensor_morphism_data(LInftyMorphism.identity(L), B)
        assert data.is_linear()
        assert data.linear.columns == {i: {i: 1} for i in range(9)}


class TestCurvature:
    def test_mc_point(self, theta_tensor):
        a = mc_point(theta_tensor, {"e1⊗θ": 1, "e2⊗θ": "-1/2", "e1⊗1": 0})
        assert a == {1: 1, 4: Fraction(-1, 2)}
        with pytest.raises(ValueError, match="not in degree -1"):
            _ = mc_point(theta_tensor, {"e1⊗1": 1})

    @pytest.mark.parametrize(
        "x, y, expected",
        [(1, 1, {}), (1, -1, {}), (1, 0, {8: Fraction(1, 2)}), (0, 2, {8: -2})],
    )
    def test_curvature(self, theta_tensor, x, y, expected):
        a = mc_point(theta_tensor, {"e1⊗θ": x, "e2⊗θ": y})
        assert curvature(theta_tensor, a) == expected
        assert is_mc(theta_tensor, a) == (not expected)

    def test_curvature_polynomial(self, theta_tensor):
        x0, x1 = sympy.symbols("x0:2")
        polynomial = curvature_polynomial(theta_tensor)
        assert list(polynomial) == ["ẽ⊗θ^2"]
        assert sympy.expand(polynomial["ẽ⊗θ^2"] - (x0**2 - x1**2) / 2) == 0

    def test_curvature_polynomial_symbols(self, theta_tensor):
        p, q = sympy.symbols("p q")
        polynomial = curvature_polynomial(theta_tensor, symbols=[p, q])
        assert sympy.expand(2 * polynomial["ẽ⊗θ^2"] - p**2 + q**2) == 0
        with pytest.raises(ValueError, match="Expected 2 symbols"):
            _ = curvature_polynomial(theta_tensor, symbols=[p])


class TestPushforward:
    def test_identity(self, theta_cubed, theta_tensor):
        L, B = theta_cubed["L"], theta_cubed["B"]
        a = mc_point(theta_tensor, {"e1⊗θ": 2, "e2⊗θ": 2})
        assert pushforward(LInftyMorphism.identity(L), B, a) == a
        assert pushforward(terminal_morphism(L), B, a) == {}

    def test_not_mc_raises(self, theta_cubed):
        L, B = theta_cubed["L"], theta_cubed["B"]
        with pytest.raises(NotMC, match="not Maurer-Cartan"):
            _ = pushforward(LInftyMorphism.identity(L), B, {1: 1})

    def test_quadratic_component(self, twisted_automorphism, exterior):
        T = tensor(twisted_automorphism.source, exterior)
        a = {T.index("x", "ε1"): 1, T.index("y", "ε2"): 1}
        b = pushforward(twisted_automorphism, exterior, a)
        assert b == {
            T.index("x", "ε1"): 1,
            T.index("y", "ε2"): 1,
            T.index("z", "ε1ε2"): 1,
        }
        assert pushforward(inverse(twisted_automorphism), exterior, b) == a

    def test_pushforward_polynomial(self, twisted_automorphism, exterior):
        x = sympy.symbols("x0:5")
        polynomial = pushforward_polynomial(twisted_automorphism, exterior)
        assert polynomial["x⊗ε1"] == x[0]
        assert sympy.expand(polynomial["z⊗ε1ε2"] - (x[4] + x[0] * x[3] - x[1] * x[2])) == 0


class TestSampleGrid:
    def test_default_values(self):
        assert len(DEFAULT_SAMPLE_VALUES) == 7
        grid = sample_grid(2)
        assert len(grid) == 49
        assert grid[0] == (-2, -2)
        assert (Fraction(1, 2), 0) in grid

    def test_dimension_zero(self):
        assert sample_grid(0) == [()]

    def test_values(self):
        assert sample_grid(1, values=[0, "1/2"]) == [(0,), (Fraction(1, 2),)]

    def test_truncated(self):
        with pytest.warns(UserWarning, match="is truncated to 200 points"):
            grid = sample_grid(3)
        assert len(grid) == 200

    def test_seed(self):
        assert sample_grid(2, seed=3) == sample_grid(2, seed=3)
        assert set(sample_grid(2, seed=3)) == set(sample_grid(2))


class TestMCPullback:
    @pytest.fixture
    def line_square(self, line):
        identity = LInftyMorphism.identity(line)
        return pullback_fibration(identity, identity)

    def test_matched_pair(self, line_square, theta_cdga):
        mc = MCPullback(line_square, theta_cdga)
        a = {mc.source.index("a'", "θ"): 3}
        u = mc.phi(a, a)
        assert is_mc(mc.pullback, u)
        assert mc.h(u) == (a, a)

    def test_not_matched_raises(self, line_square, theta_cdga):
        mc = MCPullback(line_square, theta_cdga)
        i = mc.source.index("a'", "θ")
        with pytest.raises(NotMatched, match="differ"):
            _ = mc.phi({i: 1}, {i: 2})

    def test_theta_cubed(self, theta_cubed, line, theta_tensor):
        L, B = theta_cubed["L"], theta_cubed["B"]
        square = pullback_fibration(terminal_morphism(L), terminal_morphism(line))
        a_prime = {tensor(line, B).index("a'", "θ"): 2}
        a = mc_point(theta_tensor, {"e1⊗θ": 1, "e2⊗θ": -1})
        u = mc_pullback_bijection(square, B, a_prime, a)
        mc = MCPullback(square, B)
        assert is_mc(mc.pullback, u)
        assert mc.h(u) == (a_prime, a)

    def test_not_mc_raises(self, theta_cubed, line, theta_tensor):
        L, B = theta_cubed["L"], theta_cubed["B"]
        square = pullback_fibration(terminal_morphism(L), terminal_morphism(line))
        a = mc_point(theta_tensor, {"e1⊗θ": 1})
        with pytest.raises(NotMC):
            _ = mc_pullback_bijection(square, B, {}, a)

    def test_line_pairs(self, line_square, theta_cdga):
        mc = MCPullback(line_square, theta_cdga)
        pairs = 0
        for c in range(-25, 25):
            a = mc_point(mc.source, {"a'⊗θ": Fraction(c, 3)})
            u = mc.phi(a, a)
            assert is_mc(mc.pullback, u)
            assert mc.h(u) == (a, a)
            pairs += 1
        assert pairs == 50

    def test_theta_cubed_pairs(self, theta_cubed, line, theta_tensor):
        L, B = theta_cubed["L"], theta_cubed["B"]
        square = pullback_fibration(terminal_morphism(L), terminal_morphism(line))
        mc = MCPullback(square, B)
        pairs = 0
        for x in (1, 2, 3, Fraction(1, 2), -1):
            for sign in (1, -1):
                a = mc_point(theta_tensor, {"e1⊗θ": x, "e2⊗θ": sign * x})
                for c in (-2, -1, 0, 1, 3):
                    a_prime = mc_point(mc.base, {"a'⊗θ": c})
                    u = mc.phi(a_prime, a)
                    assert is_mc(mc.pullback, u)
                    assert mc.h(u) == (a_prime, a)
                    pairs += 1
        assert pairs == 50

    def test_strictified_pairs(self, exterior):
        A = abelian_algebra(GradedVectorSpace([("x", 0), ("y", 0), ("z", 1)]))
        B = abelian_algebra(GradedVectorSpace([("z'", 1)]))
        f = LInftyMorphism.from_maps(
            A, B, {"z": {"z'": 1}, ("x", "y"): {"z'": 1}}
        )
        square = pullback_fibration(f, LInftyMorphism.identity(B))
        assert square.psi is not None
        mc = MCPullback(square, exterior)
        names = ["x⊗ε1", "x⊗ε2", "y⊗ε1", "y⊗ε2"]
        pairs = 0
        for values in sample_grid(4, values=(0, 1, -1)):
            for z in (0, 2):
                a = mc_point(mc.source, {"z⊗ε1ε2": z, **dict(zip(names, values))})
                a_prime = pushforward(f, exterior, a)
                u = mc.phi(a_prime, a)
                assert is_mc(mc.pullback, u)
                assert mc.h(u) == (a_prime, a)
                pairs += 1
        assert pairs == 162
