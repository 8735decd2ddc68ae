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

"""Exceptions, verdicts and small helpers shared by all lnalg modules."""

# Lists what will be imported when calling "from lnalg.base import *"
__all__ = [
    "check",
    "Verdict",
    "VerificationError",
    "NotChainMap",
    "NotSurjective",
    "NotAcyclicFibration",
    "JacobiViolation",
    "NotMorphism",
    "TypeMismatch",
    "NotStrict",
    "NotFibration",
    "NotMC",
    "NotMatched",
    "NoFiller",
    "NonUniqueFiller",
    "PartialDataInvalid",
    "HomologyNotSurjective",
    "NotEpi",
    "AxiomViolation",
    "NotInSubspace",
    "DocumentError",
]


def check(obj, cls):
    if not isinstance(obj, cls):
        try:
            obj = cls(obj)
        except BaseException:
            raise ValueError(
                "Could not turn {} (type {}) into {}".format(
                    obj, obj.__class__.__name__, cls.__name__
                )
            )
    return obj


class Verdict:
    """Outcome of a verification which does not raise.

    A verdict is truthy when the checked property holds. When it does
    not, :attr:`witness` holds whatever demonstrates the failure, e.g.
    a failing word or degree.
    """

    def __init__(self, ok, witness=None, message=""):
        self.ok = bool(ok)
        self.witness = witness
        self.message = message

    def __bool__(self):
        return self.ok

    def __repr__(self):
        if self.ok:
            return "<Verdict: ok>"
        return f"<Verdict: failed. witness: {self.witness}. {self.message}>"


class VerificationError(Exception):
    """Base class of every failed mathematical verification.

    Parameters
    ----------
    message : str
        Human readable description.
    witness : object, optional
        Whatever demonstrates the failure.
    """

    def __init__(self, message, witness=None):
        self.witness = witness
        if witness is not None:
            message = f"{message} Witness: {witness}."
        super().__init__(message)


class NotChainMap(VerificationError):
    pass


class NotSurjective(VerificationError):
    pass


class NotAcyclicFibration(VerificationError):
    pass


class JacobiViolation(VerificationError):
    def __init__(self, arity, word):
        self.arity = arity
        self.word = word
        super().__init__(
            f"The brackets do not satisfy the Jacobi identities in arity {arity}.",
            witness=word,
        )


class NotMorphism(VerificationError):
    def __init__(self, arity, word):
        self.arity = arity
        self.word = word
        super().__init__(
            "The structure maps do not commute with the codifferentials in "
            f"arity {arity}.",
            witness=word,
        )


class TypeMismatch(VerificationError):
    pass


class NotStrict(VerificationError):
    pass


class NotFibration(VerificationError):
    pass


class NotMC(VerificationError):
    pass


class NotMatched(VerificationError):
    pass


class NoFiller(VerificationError):
    pass


class NonUniqueFiller(VerificationError):
    pass


class PartialDataInvalid(VerificationError):
    pass


class HomologyNotSurjective(VerificationError):
    pass


class NotEpi(VerificationError):
    pass


class AxiomViolation(VerificationError):
    pass


class NotInSubspace(VerificationError):
    pass


class DocumentError(ValueError):
    """A document could not be parsed into lnalg objects.

    Parameters
    ----------
    message : str
        What is wrong.
    filename : str, optional
        File the document was read from.
    location : str, optional
        JSON path of the offending field, e.g. ``brackets[2].output``.
    """

    def __init__(self, message, filename=None, location=None):
        self.filename = filename
        self.location = location
        where = ":".join(str(i) for i in (filename, location) if i is not None)
        if where:
            message = f"{where}: {message}"
        super().__init__(message)
