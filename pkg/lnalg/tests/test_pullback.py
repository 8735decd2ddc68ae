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

import pytest

from lnalg.base import NoFiller, NotFibration, NotStrict, TypeMismatch
from lnalg.coalgebra import CoalgebraMorphismData, compose_structure_maps
from lnalg.exactla import GradedVectorSpace
from lnalg.linfty import (
    LInftyMorphism,
    abelian_algebra,
    classify,
    compose,
    terminal_morphism,
    zero_algebra,
)
from lnalg.pullback import (
    PullbackSquare,
    fiber,
    in_coalgebra_pullback,
    pullback_fibration,
    pullback_strict_fibration,
    verify_pullback_claims,
    verify_tangent_exactness,
    verify_universal_property,
)


@pytest.fixture
def quotient(solvable_quotient):
    return solvable_quotient["f"]


@pytest.fixture
def square(quotient):
    """Pullback of the quotient along itself."""
    return pullback_fibration(quotient, quotient)


@pytest.fixture
def twisted_fibration():
    A = abelian_algebra(GradedVectorSpace([("x", 0), ("y", 0), ("z", 1)]))
    B = abelian_algebra(GradedVectorSpace([("z'", 1)]))
    return LInftyMorphism.from_maps(A, B, {"z": {"z'": 1}, ("x", "y"): {"z'": 1}})


@pytest.fixture
def three_term():
    """Abelian Lie 3-algebra with ``a`` in degree 0 and ``d c = b``."""
    space = GradedVectorSpace([("a", 0), ("b", 1), ("c", 2)])
    return abelian_algebra(space, {"c": {"b": 1}})


@pytest.fixture
def three_term_projection(three_term):
    """Strict projection killing ``a``."""
    C = abelian_algebra(GradedVectorSpace([("b", 1), ("c", 2)]), {"c": {"b": 1}})
    return LInftyMorphism.strict(three_term, C, {"b": {"b": 1}, "c": {"c": 1}})


def _instance(name, get):
    if name == "quotient":
        return get("quotient"), get("quotient")
    if name == "acyclic":
        return terminal_morphism(get("acyclic")), terminal_morphism(get("solvable"))
    if name == "twisted":
        f = get("twisted_fibration")
        return f, LInftyMorphism.identity(f.target)
    if name == "three-term":
        return get("three_term_projection"), get("three_term_projection")
    if name == "three-term-terminal":
        return terminal_morphism(get("three_term")), terminal_morphism(get("string_so3"))
    if name == "string":
        identity = LInftyMorphism.identity(get("string_so3"))
        return identity, identity
    f = get("string_extension")["f"]
    return f, LInftyMorphism.identity(f.target)


@pytest.fixture(
    params=[
        "quotient",
        "acyclic",
        "twisted",
        "three-term",
        "three-term-terminal",
        "string",
        "string-extension",
    ]
)
def instance(request):
    f, g = _instance(request.param, request.getfixturevalue)
    return pullback_fibration(f, g)


class TestFiber:
    def test_quotient(self, quotient):
        K, inclusion = fiber(quotient)
        assert K.space.names == ("e1",)
        assert K.is_abelian()
        assert inclusion.linear.columns == {0: {0: 1}}
        assert inclusion.is_strict()

    def test_identity_has_zero_fiber(self, identity):
        K, _ = fiber(identity)
        assert K.space.dim == 0

    def test_terminal_fiber_is_everything(self, string_so3):
        K, inclusion = fiber(terminal_morphism(string_so3))
        assert K.space.dimensions == {0: 3, 1: 1}
        assert classify(inclusion).is_isomorphism


class TestPullbackFibration:
    def test_square(self, square):
        assert isinstance(square, PullbackSquare)
        algebra, q, q_prime = square
        assert algebra.space.dimensions == {0: 3}
        assert square.psi is None
        assert repr(square).startswith("<PullbackSquare: strict.")
        assert classify(q_prime).is_fibration

    def test_claims(self, square):
        assert verify_pullback_claims(square)
        assert verify_tangent_exactness(square)

    def test_strict_data(self, square):
        strict = square.strict
        assert strict.E.space.names == ("e1", "e2", "e1'", "e2'")
        assert strict.offset == 2
        identity = CoalgebraMorphismData.identity(strict.E.suspended)
        assert compose_structure_maps(strict.H, strict.J) == identity

    def test_acyclic_fibration_pulls_back(self, acyclic, solvable):
        square = pullback_fibration(
            terminal_morphism(acyclic), terminal_morphism(solvable)
        )
        assert square.algebra.space.dimensions == {0: 3, 1: 1}
        assert classify(square.q_prime).is_acyclic_fibration
        assert verify_tangent_exactness(square)

    def test_non_strict_fibration(self, twisted_fibration):
        B = twisted_fibration.target
        square = pullback_fibration(twisted_fibration, LInftyMorphism.identity(B))
        assert square.psi is not None
        assert repr(square).startswith("<PullbackSquare: strictified.")
        assert square.algebra.space.dimensions == {0: 2, 1: 1}
        assert classify(square.q).is_isomorphism
        assert verify_pullback_claims(square)
        assert verify_tangent_exactness(square)

    def test_different_targets_raise(self, quotient, string_so3):
        with pytest.raises(TypeMismatch, match="common target"):
            _ = pullback_fibration(quotient, LInftyMorphism.identity(string_so3))

    def test_not_fibration_raises(self, line):
        f = LInftyMorphism(zero_algebra(), line)
        with pytest.raises(NotFibration):
            _ = pullback_fibration(f, LInftyMorphism.identity(line))

    def test_strict_pullback_of_non_strict_raises(self, twisted_fibration):
        B = twisted_fibration.target
        with pytest.raises(NotStrict):
            _ = pullback_strict_fibration(
                twisted_fibration, LInftyMorphism.identity(B)
            )


class TestUniversalProperty:
    def test_diagonal(self, square, identity):
        u = verify_universal_property(square, identity, identity)
        assert u == square.lift(identity, identity)
        assert compose(square.q, u) == identity
        assert compose(square.q_prime, u) == identity

    def test_non_strict(self, twisted_fibration):
        A, B = twisted_fibration.source, twisted_fibration.target
        square = pullback_fibration(twisted_fibration, LInftyMorphism.identity(B))
        identity = LInftyMorphism.identity(A)
        u = verify_universal_property(square, twisted_fibration, identity)
        assert classify(u).is_isomorphism
        assert u == square.lift(twisted_fibration, identity)

    def test_cone_does_not_commute(self, square, solvable, identity):
        zero = LInftyMorphism.strict(solvable, solvable, {})
        with pytest.raises(NoFiller, match="does not commute"):
            _ = verify_universal_property(square, identity, zero)
        with pytest.raises(NoFiller, match="does not commute"):
            _ = square.lift(identity, zero)


class TestCoalgebraPullback:
    def test_matching_letters(self, square):
        assert in_coalgebra_pullback({(1,): 1, (3,): 1}, square.strict)

    def test_single_factor(self, square):
        verdict = in_coalgebra_pullback({(1,): 1}, square.strict)
        assert not verdict
        assert verdict.witness == "y"

    def test_kernel_letter(self, square):
        assert in_coalgebra_pullback({(0,): 1}, square.strict)


class TestPullbackFamily:
    def test_claims(self, instance):
        assert verify_pullback_claims(instance)
        assert verify_tangent_exactness(instance)
        assert classify(instance.q_prime).is_fibration

    def test_cones(self, instance):
        P = instance.algebra
        cones = [
            LInftyMorphism.identity(P),
            LInftyMorphism.strict(P, P, {}),
            LInftyMorphism(zero_algebra(), P),
        ]
        for u in cones:
            a = compose(instance.q_prime, u)
            b = compose(instance.q, u)
            assert verify_universal_property(instance, a, b) == u
            assert instance.lift(a, b) == u

    def test_three_term_dimensions(self, three_term, three_term_projection):
        square = pullback_fibration(three_term_projection, three_term_projection)
        assert square.algebra.space.dimensions == {0: 2, 1: 1, 2: 1}
        assert three_term.n == 3
