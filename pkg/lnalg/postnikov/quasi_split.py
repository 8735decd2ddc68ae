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

"""Detection of quasi-split fibrations.

A fibration ``f`` is quasi-split if ``H(f_1)`` is onto in every degree
and ``H0(L)`` is the product of ``ker H0(f_1)`` and ``H0(L')`` as Lie
algebras. The second condition is decided from a complementary
subalgebra given by the caller, or from the sufficient criterion that
``ker H0(f_1)`` is central and meets ``[H0(L), H0(L)]`` trivially.
"""

import warnings

from lnalg.base import NotFibration
from lnalg.exactla.chain_complex import induced_map_on_homology
from lnalg.exactla.elimination import kernel, matrix_from_columns, rank
from lnalg.exactla.subspace import Subspace
from lnalg.exactla.vector import vector_from_names
from lnalg.linfty.algebra import h0_lie_algebra
from lnalg.linfty.morphism import classify, h0_morphism, tangent

QUASI_SPLIT = "quasi-split"
NOT_QUASI_SPLIT = "not quasi-split"
UNDETERMINED = "undetermined"


class QuasiSplit:
    """Three-valued answer of :func:`is_quasi_split`.

    Truthy only if the fibration is quasi-split.

    Attributes
    ----------
    status : str
        One of ``"quasi-split"``, ``"not quasi-split"`` and
        ``"undetermined"``.
    message : str
    complement : list of dict or None
        Basis of a subalgebra of ``H0(L)`` complementary to the kernel,
        in the basis of :func:`~lnalg.linfty.h0_lie_algebra`.
    """

    def __init__(self, status, message="", complement=None):
        self.status = status
        self.message = message
        self.complement = complement

    def __bool__(self):
        return self.status == QUASI_SPLIT

    def __eq__(self, other):
        if isinstance(other, str):
            return self.status == other
        if isinstance(other, QuasiSplit):
            return self.status == other.status
        return NotImplemented

    def __repr__(self):
        return f"<QuasiSplit: {self.status}. {self.message}>"


def _span_rank(space, vectors):
    cols = space.indices_in_degree(0)
    return rank(matrix_from_columns(cols, range(len(vectors)), vectors.__getitem__))


def _check_witness(H0, K, image_map, complement):
    """Reason why `complement` is not a valid splitting, or None."""
    if any(H0.space.degree(i) != 0 for v in complement for i in v):
        return "Witness vectors must lie in H0."
    if _span_rank(H0.space, complement) != len(complement):
        return "Witness vectors are linearly dependent."
    if len(complement) + len(K) != H0.space.dim:
        return "Witness does not have the dimension of a complement."
    if _span_rank(H0.space, complement + K) != H0.space.dim:
        return "Witness meets the kernel."
    subalgebra = Subspace(H0.space, complement)
    for a, x in enumerate(complement):
        for y in complement[a + 1:]:
            if not subalgebra.contains(H0.bracket(x, y)):
                return "Witness is not a subalgebra."
        for k in K:
            if H0.bracket(x, k):
                return "Witness does not commute with the kernel."
    images = [image_map(v) for v in complement]
    if _span_rank(image_map.target, images) != image_map.target.dim:
        return "Witness does not map onto H0 of the target."
    return None


def is_quasi_split(f, witness=None):
    """Whether a fibration is quasi-split.

    Parameters
    ----------
    f : LInftyMorphism
        A fibration.
    witness : list of dict, optional
        Basis of a Lie subalgebra of ``H0(L)`` complementary to
        ``ker H0(f_1)``, as dicts of names of the basis of
        ``h0_lie_algebra(L)`` and rationals. If it fails verification a
        warning is raised and the central kernel criterion is used.

    Returns
    -------
    QuasiSplit

    Raises
    ------
    NotFibration
        If `f` is not a fibration.

    Notes
    -----
    Without an accepted witness only a sufficient condition is tested:
    ``K = ker H0(f_1)`` is central and ``K`` meets ``[H0(L), H0(L)]``
    trivially. Then every complement of ``K`` containing the derived
    algebra is an ideal, so ``H0(L)`` is the product of ``K`` and that
    complement, and ``H0(f_1)`` is a split epimorphism of
    ``H0(L)``-modules. When the condition fails the fibration may still
    be quasi-split, e.g. a projection of a product of two non-abelian
    algebras has a non-central kernel. There is no general decision
    procedure for the splitting, so that case is reported as
    ``"undetermined"``. Only a failure of ``H(f_1)`` to be onto gives
    ``"not quasi-split"``.
    """
    if not classify(f).is_fibration:
        raise NotFibration("Morphism is not surjective in positive degrees.")
    hf = induced_map_on_homology(tangent(f))
    for d in hf.target.support:
        if hf.rank(d) != hf.target.dim_in_degree(d):
            return QuasiSplit(
                NOT_QUASI_SPLIT, f"H(f_1) is not surjective in degree {d}."
            )
    H0 = h0_lie_algebra(f.source)
    h0f = h0_morphism(f).linear
    cols = H0.space.indices_in_degree(0)
    K = [
        {cols[k]: v for k, v in enumerate(vector) if v != 0}
        for _, vector in kernel(h0f.matrix(0))
    ]
    if witness is not None:
        complement = [vector_from_names(H0.space, v) for v in witness]
        reason = _check_witness(H0, K, h0f, complement)
        if reason is None:
            return QuasiSplit(QUASI_SPLIT, "Verified splitting.", complement)
        warnings.warn(f"Quasi-split witness rejected: {reason}")

    for k in K:
        for x in cols:
            if H0.bracket(k, {x: 1}):
                return QuasiSplit(
                    UNDETERMINED, "ker H0(f_1) is not central and no valid witness."
                )
    derived = []
    for a, x in enumerate(cols):
        for y in cols[a + 1:]:
            value = H0.bracket({x: 1}, {y: 1})
            if value and _span_rank(H0.space, derived + [value]) > len(derived):
                derived.append(value)
    if _span_rank(H0.space, derived + K) != len(derived) + len(K):
        return QuasiSplit(
            UNDETERMINED, "ker H0(f_1) is central but meets [H0(L), H0(L)]."
        )
    # Any complement of the kernel containing the derived algebra is an ideal
    complement = list(derived)
    for v in ({i: 1} for i in cols):
        if _span_rank(H0.space, complement + K + [v]) > len(complement) + len(K):
            complement.append(v)
    return QuasiSplit(QUASI_SPLIT, "ker H0(f_1) is central.", complement)
