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

from contextlib import contextmanager
from fractions import Fraction
from io import StringIO
import json
import os
import sys

import pytest

from lnalg.base import DocumentError, JacobiViolation
from lnalg.io import (
    Bundle,
    _overwrite_or_not,
    algebra2dict,
    dict2object,
    dumps,
    load,
    load_example,
    save,
)
from lnalg.linfty import LieNAlgebra

EXAMPLES = [
    "abelian",
    "mc-theta3",
    "solvable-g",
    "solvable-quotient",
    "string-extension",
    "string-so3",
]


@contextmanager
def replace_stdin(target):
    orig = sys.stdin
    sys.stdin = target
    yield
    sys.stdin = orig


def algebra_document(**fields):
    document = {
        "schema": "lnalg/algebra",
        "version": 1,
        "basis": [["e1", 0], ["e2", 0]],
        "brackets": [{"inputs": ["e1", "e2"], "value": {"e1": "1"}}],
    }
    document.update(fields)
    return document


class TestGeneralIO:
    def test_load_no_filename_match(self):
        fname = "what_is_hip.json"
        with pytest.raises(IOError, match=f"No filename matches '{fname}'."):
            _ = load(fname)

    @pytest.mark.parametrize("temp_file_path", ["yaml"], indirect=["temp_file_path"])
    def test_load_unsupported_format(self, temp_file_path):
        with open(temp_file_path, "w") as f:
            f.write("schema: lnalg/algebra\n")
        with pytest.raises(IOError, match="Could not read "):
            _ = load(temp_file_path)

    def test_overwrite_or_not(self, solvable, temp_file_path):
        save(temp_file_path, solvable)
        with pytest.warns(UserWarning, match="Not overwriting, since your terminal "):
            _overwrite_or_not(temp_file_path)

    @pytest.mark.parametrize(
        "answer, expected", [("y", True), ("n", False), ("m", None)]
    )
    def test_overwrite_or_not_input(self, solvable, temp_file_path, answer, expected):
        save(temp_file_path, solvable)
        if answer == "m":
            with replace_stdin(StringIO(answer)):
                with pytest.raises(EOFError):
                    _overwrite_or_not(temp_file_path)
        else:
            with replace_stdin(StringIO(answer)):
                assert _overwrite_or_not(temp_file_path) is expected

    def test_overwrite_or_not_new_file(self, temp_file_path):
        assert _overwrite_or_not(temp_file_path) is True

    @pytest.mark.parametrize(
        "temp_file_path", ["jsn", "h5", "txt"], indirect=["temp_file_path"]
    )
    def test_save_unsupported_raises(self, temp_file_path, solvable):
        _, ext = os.path.splitext(temp_file_path)
        with pytest.raises(IOError, match=f"'{ext[1:]}' does not correspond to any "):
            save(temp_file_path, solvable)

    def test_save_unsupported_object_raises(self, temp_file_path):
        with pytest.raises(IOError, match="does not correspond to any"):
            save(temp_file_path, {"e1": 1})

    def test_save_overwrite_raises(self, temp_file_path, solvable):
        with pytest.raises(ValueError, match="`overwrite` parameter can only be "):
            save(temp_file_path, solvable, overwrite=1)

    @pytest.mark.parametrize("overwrite, expected", [(True, "so3"), (False, "solvable")])
    def test_save_overwrite(
        self, temp_file_path, solvable, so3, overwrite, expected
    ):
        save(temp_file_path, solvable)
        assert os.path.isfile(temp_file_path) is True

        save(temp_file_path, so3, overwrite=overwrite)
        L = load(temp_file_path)
        assert L == {"so3": so3, "solvable": solvable}[expected]


class TestJSONPlugin:
    @pytest.mark.parametrize("name", EXAMPLES)
    def test_example_corpus(self, name, temp_file_path):
        obj = load_example(name)
        save(temp_file_path, obj, overwrite=True)
        obj2 = load(temp_file_path)
        assert type(obj2) is type(obj)
        assert dumps(obj2) == dumps(obj)

    def test_load_example_extension(self):
        assert load_example("solvable-g") == load_example("solvable-g.json")
        assert load_example("solvable-g").space.names == ("e1", "e2")

    def test_algebra(self, solvable):
        document = algebra2dict(solvable)
        assert document["schema"] == "lnalg/algebra"
        assert document["brackets"] == [
            {"inputs": ["e1", "e2"], "value": {"e1": "1"}}
        ]
        assert dict2object(document) == solvable

    def test_rationals(self):
        document = algebra_document(
            brackets=[{"inputs": ["e1", "e2"], "value": {"e1": "-2/4"}}]
        )
        L = dict2object(document)
        assert L.to_brackets()[("e1", "e2")] == {"e1": Fraction(-1, 2)}
        assert algebra2dict(L)["brackets"][0]["value"] == {"e1": "-1/2"}

    def test_bundle(self, string_extension):
        assert isinstance(string_extension, Bundle)
        f = string_extension["f"]
        assert f.source is string_extension["string"]
        assert f.target is string_extension["so3"]
        assert "string" in string_extension
        assert "x" not in string_extension
        with pytest.raises(KeyError, match="No entry 'x'"):
            _ = string_extension["x"]
        assert repr(string_extension) == (
            "<Bundle: 2 algebras, 0 cdgas, 1 morphisms>"
        )

    def test_bundle_keeps_shared_algebras(self, string_extension):
        document = json.loads(dumps(string_extension))
        assert document["morphisms"]["f"]["source"] == "string"
        assert document["morphisms"]["f"]["target"] == "so3"

    def test_inline_morphism(self, solvable_quotient):
        f = solvable_quotient["f"]
        document = json.loads(dumps(f))
        assert document["schema"] == "lnalg/morphism"
        assert isinstance(document["source"], dict)
        assert dict2object(document) == f

    def test_check(self, temp_file_path):
        document = algebra_document(
            basis=[["e1", 0], ["e2", 0], ["e3", 0]],
            brackets=[
                {"inputs": ["e1", "e2"], "value": {"e1": "1"}},
                {"inputs": ["e1", "e3"], "value": {"e1": "1"}},
                {"inputs": ["e2", "e3"], "value": {"e2": "1"}},
            ],
        )
        with open(temp_file_path, "w", encoding="utf-8") as f:
            json.dump(document, f)
        with pytest.raises(JacobiViolation):
            _ = load(temp_file_path)
        assert isinstance(load(temp_file_path, check=False), LieNAlgebra)


class TestDocumentErrors:
    def test_invalid_json(self, temp_file_path):
        with open(temp_file_path, "w") as f:
            f.write('{"schema": ')
        with pytest.raises(DocumentError, match="Invalid JSON") as exc:
            _ = load(temp_file_path)
        assert exc.value.filename == temp_file_path
        assert exc.value.location.startswith("line 1")

    @pytest.mark.parametrize(
        "document, location, message",
        [
            ([], "$", "must be a JSON object"),
            ({"schema": "lnalg/complex"}, "schema", "Unknown schema"),
            (algebra_document(n="2"), "n", "Field 'n' must be an integer."),
            (algebra_document(basis=None), "basis", "Field 'basis' is missing"),
            (
                algebra_document(brackets=[{"inputs": [], "value": {}}]),
                "brackets[0].inputs",
                "non-empty list of names",
            ),
            (
                algebra_document(
                    brackets=[
                        {"inputs": ["e1", "e2"], "value": {"e1": "1"}},
                        {"inputs": ["e1", "e2"], "value": {"e1": "1"}},
                    ]
                ),
                "brackets[1]",
                "Duplicate entry",
            ),
            (
                algebra_document(brackets=[{"inputs": ["e1", "e2"], "value": []}]),
                "brackets[0].value",
                "A vector must be an object.",
            ),
        ],
    )
    def test_location(self, document, location, message):
        with pytest.raises(DocumentError, match=message) as exc:
            _ = dict2object(document)
        assert exc.value.location == location

    def test_unknown_algebra(self):
        document = {
            "schema": "lnalg/bundle",
            "version": 1,
            "algebras": {"g": algebra_document()},
            "morphisms": {"f": {"source": "g", "target": "x", "components": []}},
        }
        with pytest.raises(DocumentError, match="Unknown algebra 'x'.") as exc:
            _ = dict2object(document, filename="bundle.json")
        assert exc.value.location == "morphisms.f.target"
        assert str(exc.value).startswith("bundle.json:morphisms.f.target: ")

    def test_cdga_products_arity(self):
        document = {
            "schema": "lnalg/cdga",
            "version": 1,
            "basis": [["1", 0], ["θ", 2]],
            "products": [{"inputs": ["θ"], "value": {"θ": "1"}}],
        }
        with pytest.raises(DocumentError, match="Products take two inputs."):
            _ = dict2object(document)

    @pytest.mark.parametrize(
        "fields, location, message",
        [
            ({"unit": "θ"}, "unit", "must have degree 0"),
            (
                {"products": [{"inputs": ["θ", "θ"], "value": {"1": "1"}}]},
                "products",
                "has the wrong degree",
            ),
            (
                {"differential": [{"inputs": ["θ"], "value": {"1": "1"}}]},
                "differential",
                "has the wrong degree",
            ),
            (
                {"basis": [["1", 0], ["u", -1]]},
                "basis",
                "non-negative degrees",
            ),
        ],
    )
    def test_cdga_location(self, fields, location, message):
        document = {
            "schema": "lnalg/cdga",
            "version": 1,
            "basis": [["1", 0], ["θ", 2], ["θ^2", 4]],
            "unit": "1",
        }
        document.update(fields)
        with pytest.raises(DocumentError, match=message) as exc:
            _ = dict2object(document, filename="theta.json")
        assert exc.value.location == location
        assert str(exc.value).startswith(f"theta.json:{location}: ")
