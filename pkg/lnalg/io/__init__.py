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

"""Load and save utilities."""

import os
from warnings import warn

from lnalg.io.plugins import plugin_list
from lnalg.io.plugins.lnalg_json import (
    Bundle,
    algebra2dict,
    bundle2dict,
    cdga2dict,
    dict2algebra,
    dict2bundle,
    dict2cdga,
    dict2morphism,
    dict2object,
    dumps,
    morphism2dict,
    object2dict,
)

extensions = [plugin.file_extensions for plugin in plugin_list if plugin.writes]


# Lists what will be imported when calling "from lnalg.io import *"
__all__ = [
    "algebra2dict",
    "Bundle",
    "bundle2dict",
    "cdga2dict",
    "dict2algebra",
    "dict2bundle",
    "dict2cdga",
    "dict2morphism",
    "dict2object",
    "dumps",
    "load",
    "load_example",
    "morphism2dict",
    "object2dict",
    "save",
]


def load(filename, **kwargs):
    """Load an algebra, morphism, cdga or bundle from a supported file.

    Parameters
    ----------
    filename : str
        Name of file to load.
    kwargs
        Keyword arguments passed to the corresponding lnalg reader. See
        their individual docstrings for available arguments.

    Returns
    -------
    LieNAlgebra, LInftyMorphism, BoundedCdga or Bundle

    Raises
    ------
    IOError
        If the file does not exist or has an unsupported extension.
    DocumentError
        If the file content is malformed.
    """
    if not os.path.isfile(filename):
        raise IOError(f"No filename matches '{filename}'.")

    # Find matching reader for file extension
    extension = os.path.splitext(filename)[1][1:]
    readers = [p for p in plugin_list if extension.lower() in p.file_extensions]
    if not readers:
        raise IOError(
            f"Could not read '{filename}'. If the file format is supported, please "
            "report this error."
        )
    return readers[0].file_reader(filename, **kwargs)


def load_example(name, **kwargs):
    """Load a document of the example corpus shipped with lnalg.

    Parameters
    ----------
    name : str
        File name in ``lnalg/data``, with or without the ``.json``
        extension, e.g. "solvable-g".

    Examples
    --------
    >>> L = load_example("solvable-g")
    >>> L.space.names
    ('e1', 'e2')
    """
    if not name.endswith(".json"):
        name += ".json"
    here = os.path.dirname(os.path.dirname(__file__))
    return load(os.path.join(here, "data", name), **kwargs)


def save(filename, object2write, overwrite=None, **kwargs):
    """Write an object to a supported file format.

    Parameters
    ----------
    filename : str
        Name of file to write to.
    object2write : LieNAlgebra, LInftyMorphism, BoundedCdga or Bundle
        Object to write to file.
    overwrite : bool, optional
        If None and the file exists, the user is queried. If True (False)
        the file is (not) overwritten if it exists.
    kwargs
        Keyword arguments passed to the corresponding lnalg writer.
    """
    ext = os.path.splitext(filename)[1][1:]
    writer = None
    for p in plugin_list:
        if (
            ext.lower() in p.file_extensions
            and p.writes
            and isinstance(object2write, p.writes_this)
        ):
            writer = p
            break

    if writer is None:
        raise IOError(
            f"'{ext}' does not correspond to any supported format. Supported "
            f"file extensions are: '{extensions}'."
        )
    is_file = os.path.isfile(filename)
    if overwrite is None:
        write = _overwrite_or_not(filename)
    elif overwrite is True or (overwrite is False and not is_file):
        write = True
    elif overwrite is False and is_file:
        write = False
    else:
        raise ValueError("`overwrite` parameter can only be None, True or False.")

    if write:
        writer.file_writer(filename, object2write, **kwargs)


def _overwrite_or_not(filename):
    """If the file exists, ask the user for overwriting and return True or
    False, else return True.

    Parameters
    ----------
    filename : str
        Name of file to write to.

    Returns
    -------
    overwrite : bool
        Whether to overwrite the file.
    """
    overwrite = True
    if os.path.isfile(filename):
        message = f"Overwrite '{filename}' (y/n)?\n"
        try:
            answer = input(message).lower()
            while answer not in ("y", "n"):
                print("Please answer y or n.")
                answer = input(message).lower()
            if answer == "n":
                overwrite = False
        except OSError:
            warn(
                "Not overwriting, since your terminal does not support raw input. To "
                "overwrite the file, use `overwrite=True`."
            )
            overwrite = False
    return overwrite
