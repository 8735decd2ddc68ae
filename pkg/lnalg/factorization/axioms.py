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

"""Runnable checks of the axioms of a category of fibrant objects."""

from tqdm import tqdm

from lnalg.factorization.strict_factor import path_object
from lnalg.linfty.morphism import (
    LInftyMorphism,
    classify,
    compose,
    pairing,
    terminal_morphism,
)


class AxiomReport:
    """Outcome of :func:`verify_cfo_axioms`.

    A report is truthy when no counterexample was found.

    Attributes
    ----------
    checked : dict
        Number of instances checked per axiom.
    counterexamples : list of tuple of (str, str)
        Axiom and a description of the failing instance.
    """

    def __init__(self):
        self.checked = {}
        self.counterexamples = []

    def record(self, axiom, ok, description=""):
        self.checked[axiom] = self.checked.get(axiom, 0) + 1
        if not ok:
            self.counterexamples.append((axiom, description))

    def __bool__(self):
        return not self.counterexamples

    def as_dict(self):
        return {
            "checked": dict(sorted(self.checked.items())),
            "counterexamples": [list(c) for c in self.counterexamples],
        }

    def __repr__(self):
        total = sum(self.checked.values())
        return (
            f"<AxiomReport: {total} checks. "
            f"{len(self.counterexamples)} counterexamples>"
        )


def _unique(algebras):
    out = []
    for L in algebras:
        if L not in out:
            out.append(L)
    return out


def verify_cfo_axioms(morphisms, pullbacks=True, path_objects=True, verbose=False):
    """Check the axioms of a category of fibrant objects on a family.

    The checks are: isomorphisms are acyclic fibrations, weak
    equivalences satisfy 2-out-of-3 and fibrations compose on every
    composable pair, pullbacks of (acyclic) fibrations along every
    morphism of the family with the same target are (acyclic)
    fibrations with exact tangent squares, every object is fibrant and
    every object has a path object.

    Parameters
    ----------
    morphisms : list of LInftyMorphism
    pullbacks : bool, optional
        Whether to build pullbacks. Default is True.
    path_objects : bool, optional
        Whether to build path objects of all sources and targets.
        Default is True.
    verbose : bool, optional
        Output progress bar while checking. Default is False.

    Returns
    -------
    AxiomReport
    """
    from lnalg.pullback.general import pullback_fibration
    from lnalg.pullback.verify import verify_tangent_exactness

    morphisms = list(morphisms)
    classes = [classify(f) for f in morphisms]
    report = AxiomReport()
    indices = range(len(morphisms))
    if verbose:
        indices = tqdm(indices, total=len(morphisms))
    for a in indices:
        f, cf = morphisms[a], classes[a]
        if cf.is_isomorphism:
            report.record("isomorphisms", cf.is_acyclic_fibration, f"morphism {a}")
        for b, g in enumerate(morphisms):
            cg = classes[b]
            if f.target == g.source:
                cgf = classify(compose(g, f))
                weak = [cf.is_weak_equivalence, cg.is_weak_equivalence,
                        cgf.is_weak_equivalence]
                report.record("two out of three", sum(weak) != 2, f"pair ({a}, {b})")
                if cf.is_fibration and cg.is_fibration:
                    report.record(
                        "fibrations compose", cgf.is_fibration, f"pair ({a}, {b})"
                    )
            if pullbacks and cf.is_fibration and g.target == f.target:
                square = pullback_fibration(f, g)
                base = classify(square.q_prime)
                where = f"fibration {a} along {b}"
                report.record("pullback of fibration", base.is_fibration, where)
                if cf.is_acyclic_fibration:
                    report.record(
                        "pullback of acyclic fibration", base.is_acyclic_fibration, where
                    )
                report.record(
                    "tangent exactness", bool(verify_tangent_exactness(square)), where
                )

    algebras = _unique([f.source for f in morphisms] + [f.target for f in morphisms])
    for k, L in enumerate(algebras):
        report.record(
            "fibrant objects", classify(terminal_morphism(L)).is_fibration, f"object {k}"
        )
        if path_objects:
            path = path_object(L)
            identity = LInftyMorphism.identity(L)
            diagonal = pairing(identity, identity, path.d.target)
            ok = (
                classify(path.s).is_weak_equivalence
                and classify(path.d).is_fibration
                and compose(path.d, path.s) == diagonal
            )
            report.record("path objects", ok, f"object {k}")
    return report
