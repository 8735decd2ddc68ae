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

"""Reader and writer of lnalg's JSON documents.

Every document is a JSON object with a ``"schema"`` field, one of
``lnalg/algebra``, ``lnalg/morphism``, ``lnalg/cdga`` and
``lnalg/bundle``. Rationals are written as ``"p/q"`` strings.
"""

import json

from lnalg.base import DocumentError
from lnalg.exactla.graded_space import GradedVectorSpace
from lnalg.linfty.algebra import LieNAlgebra
from lnalg.linfty.morphism import LInftyMorphism
from lnalg.maurer_cartan.cdga import BoundedCdga
from lnalg.scalar import format_rational, to_rational

SCHEMA_VERSION = 1
ALGEBRA = "lnalg/algebra"
MORPHISM = "lnalg/morphism"
CDGA = "lnalg/cdga"
BUNDLE = "lnalg/bundle"


class Bundle:
    """Named algebras, cdgas and morphisms read from one document.

    Morphisms refer to algebras of the bundle by name.

    Attributes
    ----------
    algebras : dict of LieNAlgebra
    cdgas : dict of BoundedCdga
    morphisms : dict of LInftyMorphism
    """

    def __init__(self, algebras=None, cdgas=None, morphisms=None):
        self.algebras = dict(algebras or {})
        self.cdgas = dict(cdgas or {})
        self.morphisms = dict(morphisms or {})

    def __getitem__(self, name):
        for group in (self.algebras, self.cdgas, self.morphisms):
            if name in group:
                return group[name]
        raise KeyError(f"No entry '{name}' in the bundle.")

    def __contains__(self, name):
        return any(name in g for g in (self.algebras, self.cdgas, self.morphisms))

    def __repr__(self):
        return (
            f"<Bundle: {len(self.algebras)} algebras, {len(self.cdgas)} cdgas, "
            f"{len(self.morphisms)} morphisms>"
        )


# Plugin description
format_name = "lnalg_json"
file_extensions = ["json"]
writes = True
writes_this = (LieNAlgebra, LInftyMorphism, BoundedCdga, Bundle)


def file_reader(filename, check=True):
    """Return the object described by a JSON document.

    Parameters
    ----------
    filename : str
        Path and file name.
    check : bool, optional
        Whether to verify the axioms of what is read. Default is True.

    Returns
    -------
    LieNAlgebra, LInftyMorphism, BoundedCdga or Bundle

    Raises
    ------
    DocumentError
        If the file is not a valid document.
    """
    with open(filename, encoding="utf-8") as f:
        try:
            document = json.load(f)
        except json.JSONDecodeError as error:
            raise DocumentError(
                f"Invalid JSON: {error.msg}.",
                filename,
                f"line {error.lineno}, column {error.colno}",
            )
    return dict2object(document, filename=filename, check=check)


def file_writer(filename, obj):
    """Write an object as a JSON document.

    Parameters
    ----------
    filename : str
        Path and file name.
    obj : LieNAlgebra, LInftyMorphism, BoundedCdga or Bundle
    """
    with open(filename, "w", encoding="utf-8") as f:
        f.write(dumps(obj))


def dumps(obj):
    """The JSON text of an object, with a trailing newline."""
    return json.dumps(object2dict(obj), indent=2, ensure_ascii=False) + "\n"


def object2dict(obj):
    """Return the document of an algebra, morphism, cdga or bundle."""
    if isinstance(obj, LieNAlgebra):
        return algebra2dict(obj)
    if isinstance(obj, LInftyMorphism):
        return morphism2dict(obj)
    if isinstance(obj, BoundedCdga):
        return cdga2dict(obj)
    if isinstance(obj, Bundle):
        return bundle2dict(obj)
    raise ValueError(f"Cannot write {type(obj).__name__} as a JSON document.")


def dict2object(document, filename=None, check=True):
    """Parse a document according to its ``"schema"`` field."""
    if not isinstance(document, dict):
        raise DocumentError("A document must be a JSON object.", filename, "$")
    schema = document.get("schema")
    readers = {
        ALGEBRA: dict2algebra,
        MORPHISM: dict2morphism,
        CDGA: dict2cdga,
        BUNDLE: dict2bundle,
    }
    if schema not in readers:
        raise DocumentError(
            f"Unknown schema {schema!r}, expected one of {sorted(readers)}.",
            filename,
            "schema",
        )
    return readers[schema](document, filename=filename, check=check)


def _field(document, key, kind, filename, location, default=None):
    value = document.get(key, default)
    if value is None or not isinstance(value, kind):
        raise DocumentError(
            f"Field '{key}' is missing or not a {kind.__name__}.",
            filename,
            f"{location}{key}",
        )
    return value


def _vector(value, filename, location):
    if not isinstance(value, dict):
        raise DocumentError("A vector must be an object.", filename, location)
    out = {}
    for name, c in value.items():
        try:
            out[name] = to_rational(c)
        except ValueError as error:
            raise DocumentError(str(error), filename, f"{location}.{name}")
    return out


def _entries(items, filename, location):
    """``[{"inputs": [...], "value": {...}}]`` as a dict of tuples."""
    out = {}
    for k, item in enumerate(items):
        here = f"{location}[{k}]"
        if not isinstance(item, dict):
            raise DocumentError("An entry must be an object.", filename, here)
        inputs = _field(item, "inputs", list, filename, f"{here}.")
        if not inputs or not all(isinstance(x, str) for x in inputs):
            raise DocumentError(
                "Inputs must be a non-empty list of names.", filename, f"{here}.inputs"
            )
        value = _vector(item.get("value", {}), filename, f"{here}.value")
        key = tuple(inputs)
        if key in out:
            raise DocumentError(f"Duplicate entry {list(key)}.", filename, here)
        out[key] = value
    return out


def _dump_entries(space, entries):
    def _key(item):
        inputs = item[0]
        return len(inputs), tuple(space.index(x) for x in inputs)

    return [
        {
            "inputs": list(inputs),
            "value": {name: format_rational(c) for name, c in value.items()},
        }
        for inputs, value in sorted(entries.items(), key=_key)
        if value
    ]


def _space(document, filename, location=""):
    basis = _field(document, "basis", list, filename, location)
    try:
        return GradedVectorSpace([tuple(b) for b in basis])
    except (TypeError, ValueError) as error:
        raise DocumentError(str(error), filename, f"{location}basis")


def dict2algebra(document, filename=None, check=True, location=""):
    """Return a :class:`~lnalg.linfty.LieNAlgebra` from its document."""
    space = _space(document, filename, location)
    brackets = _entries(
        _field(document, "brackets", list, filename, location, []),
        filename,
        f"{location}brackets",
    )
    n = document.get("n")
    if n is not None and not isinstance(n, int):
        raise DocumentError("Field 'n' must be an integer.", filename, f"{location}n")
    try:
        return LieNAlgebra.from_brackets(space, brackets, n=n, check=check)
    except (KeyError, ValueError) as error:
        raise DocumentError(str(error), filename, f"{location}brackets")


def algebra2dict(L):
    return {
        "schema": ALGEBRA,
        "version": SCHEMA_VERSION,
        "basis": [[name, degree] for name, degree in L.space.basis],
        "brackets": _dump_entries(L.space, L.to_brackets()),
        "n": L.n,
    }


def _algebra_reference(value, algebras, filename, location, check):
    if isinstance(value, str):
        if value not in algebras:
            raise DocumentError(f"Unknown algebra '{value}'.", filename, location)
        return algebras[value]
    if isinstance(value, dict):
        return dict2algebra(value, filename, check, f"{location}.")
    raise DocumentError("Expected an algebra or its name.", filename, location)


def dict2morphism(document, filename=None, check=True, location="", algebras=None):
    """Return a :class:`~lnalg.linfty.LInftyMorphism` from its document.

    Source and target are inline algebra documents, or names of
    `algebras` inside a bundle.
    """
    algebras = {} if algebras is None else algebras
    source = _algebra_reference(
        document.get("source"), algebras, filename, f"{location}source", check
    )
    target = _algebra_reference(
        document.get("target"), algebras, filename, f"{location}target", check
    )
    components = _entries(
        _field(document, "components", list, filename, location, []),
        filename,
        f"{location}components",
    )
    try:
        return LInftyMorphism.from_maps(source, target, components, check=check)
    except (KeyError, ValueError) as error:
        raise DocumentError(str(error), filename, f"{location}components")


def morphism2dict(f, source=None, target=None):
    return {
        "schema": MORPHISM,
        "version": SCHEMA_VERSION,
        "source": algebra2dict(f.source) if source is None else source,
        "target": algebra2dict(f.target) if target is None else target,
        "components": _dump_entries(f.source.space, f.to_maps()),
    }


def dict2cdga(document, filename=None, check=True, location=""):
    """Return a :class:`~lnalg.maurer_cartan.BoundedCdga` from its
    document."""
    space = _space(document, filename, location)
    if space.dim and space.bottom_degree < 0:
        raise DocumentError(
            "A bounded cdga lives in non-negative degrees.", filename, f"{location}basis"
        )
    unit = _field(document, "unit", str, filename, location, "1")
    products = _entries(
        _field(document, "products", list, filename, location, []),
        filename,
        f"{location}products",
    )
    if any(len(k) != 2 for k in products):
        raise DocumentError(
            "Products take two inputs.", filename, f"{location}products"
        )
    differential = _entries(
        _field(document, "differential", list, filename, location, []),
        filename,
        f"{location}differential",
    )
    if any(len(k) != 1 for k in differential):
        raise DocumentError(
            "The differential takes one input.", filename, f"{location}differential"
        )
    differential = {k[0]: v for k, v in differential.items()}
    # one more field per stage
    stages = (
        ("unit", {}, {}),
        ("products", products, {}),
        ("differential", products, differential),
    )
    for field, p, d in stages:
        try:
            B = BoundedCdga(
                list(space.basis),
                p,
                d,
                unit=unit,
                check=check and field == "differential",
            )
        except (KeyError, TypeError, ValueError) as error:
            raise DocumentError(str(error), filename, f"{location}{field}")
    return B


def cdga2dict(B):
    return {
        "schema": CDGA,
        "version": SCHEMA_VERSION,
        "basis": [[name, degree] for name, degree in B.space.basis],
        "unit": B.space.name(B.unit),
        "products": _dump_entries(B.space, B.to_products()),
        "differential": _dump_entries(
            B.space, {(k,): v for k, v in B.to_differential().items()}
        ),
    }


def dict2bundle(document, filename=None, check=True):
    """Return a :class:`Bundle` from its document."""
    algebras = {}
    for name, value in _field(document, "algebras", dict, filename, "", {}).items():
        algebras[name] = dict2algebra(value, filename, check, f"algebras.{name}.")
    cdgas = {}
    for name, value in _field(document, "cdgas", dict, filename, "", {}).items():
        cdgas[name] = dict2cdga(value, filename, check, f"cdgas.{name}.")
    morphisms = {}
    for name, value in _field(document, "morphisms", dict, filename, "", {}).items():
        morphisms[name] = dict2morphism(
            value, filename, check, f"morphisms.{name}.", algebras
        )
    return Bundle(algebras, cdgas, morphisms)


def bundle2dict(bundle):
    names = {}
    for name, L in bundle.algebras.items():
        names.setdefault(id(L), name)

    def _reference(L):
        return names[id(L)] if id(L) in names else algebra2dict(L)

    morphisms = {}
    for name, f in bundle.morphisms.items():
        document = morphism2dict(f, _reference(f.source), _reference(f.target))
        del document["schema"], document["version"]
        morphisms[name] = document
    return {
        "schema": BUNDLE,
        "version": SCHEMA_VERSION,
        "algebras": {name: algebra2dict(L) for name, L in bundle.algebras.items()},
        "cdgas": {name: cdga2dict(B) for name, B in bundle.cdgas.items()},
        "morphisms": morphisms,
    }
