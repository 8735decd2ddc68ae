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

"""Command line front end of lnalg.

Every command reads JSON documents (see :mod:`lnalg.io`), runs one
construction or verification and writes a report to stdout. The exit
code is 0 on success, 1 when a verification fails and 2 when the input
cannot be used.
"""

import argparse
import hashlib
import json
import os
import sys

import sympy

from lnalg import __version__
from lnalg.base import DocumentError, VerificationError
from lnalg.coalgebra.homology import (
    DEFAULT_DEGREE_CUTOFF,
    coalgebra_chain_map,
    coalgebra_complex,
    reduced_coalgebra_homology,
)
from lnalg.coalgebra.structure_maps import is_codifferential, is_dg_morphism
from lnalg.exactla.chain_complex import is_quasi_isomorphism
from lnalg.exactla.vector import vector_to_names
from lnalg.factorization.brown import brown_factorize
from lnalg.factorization.strict_factor import factor_strict_morphism
from lnalg.io import Bundle, load, save
from lnalg.linfty.algebra import LieNAlgebra
from lnalg.linfty.morphism import LInftyMorphism, classify
from lnalg.maurer_cartan.cdga import BoundedCdga
from lnalg.maurer_cartan.mc import (
    DEFAULT_SAMPLE_CAP,
    MCPullback,
    curvature,
    curvature_polynomial,
    mc_point,
    pushforward,
    sample_grid,
)
from lnalg.maurer_cartan.tensor import tensor
from lnalg.postnikov.decomposition import decompose_tower_step1, decompose_tower_step2
from lnalg.postnikov.quasi_split import is_quasi_split
from lnalg.postnikov.tower import tower
from lnalg.postnikov.truncation import truncate
from lnalg.pullback.general import pullback_fibration
from lnalg.pullback.verify import verify_pullback_claims, verify_tangent_exactness
from lnalg.scalar import format_rational

PROG = "lnalg"

EXIT_OK = 0
EXIT_FAILED = 1
EXIT_INPUT = 2


class InputError(Exception):
    """Command line input that cannot be used."""


class Inputs:
    """Everything read from the documents passed to a command.

    Plain documents are named after their file, bundle entries keep
    their names.
    """

    def __init__(self, paths, check=True):
        self.paths = list(paths)
        self.bundle = Bundle()
        self.digest = {}
        for path in self.paths:
            obj = load(path, check=check)
            with open(path, "rb") as f:
                self.digest[os.path.basename(path)] = hashlib.sha256(
                    f.read()
                ).hexdigest()
            stem = os.path.splitext(os.path.basename(path))[0]
            if isinstance(obj, Bundle):
                self.bundle.algebras.update(obj.algebras)
                self.bundle.cdgas.update(obj.cdgas)
                self.bundle.morphisms.update(obj.morphisms)
            elif isinstance(obj, LieNAlgebra):
                self.bundle.algebras[stem] = obj
            elif isinstance(obj, BoundedCdga):
                self.bundle.cdgas[stem] = obj
            elif isinstance(obj, LInftyMorphism):
                self.bundle.morphisms[stem] = obj

    def pick(self, kind, name=None, position=0):
        group = getattr(self.bundle, kind)
        if name is not None:
            if name not in group:
                raise InputError(f"No {kind[:-1]} named '{name}', found {sorted(group)}.")
            return group[name]
        if len(group) <= position:
            raise InputError(f"Expected at least {position + 1} {kind}, got {len(group)}.")
        return list(group.values())[position]


def _point(T, assignments):
    """Parse ``name=value`` pairs into a degree -1 element of `T`."""
    values = {}
    for item in assignments or []:
        name, sep, value = item.partition("=")
        if not sep:
            raise InputError(f"Expected name=value, got '{item}'.")
        values[name.strip()] = value.strip()
    try:
        return mc_point(T, values)
    except (KeyError, ValueError) as error:
        raise InputError(f"Invalid point: {error}")


def _verdict(verdict):
    out = {"ok": bool(verdict)}
    if not verdict:
        out["witness"] = str(verdict.witness)
        out["message"] = verdict.message
    return out


def _dimensions(space):
    return {str(d): space.dim_in_degree(d) for d in space.support}


def _coalgebra_homology(L, cutoff):
    H = reduced_coalgebra_homology(L.structure, cutoff)
    return {
        "dimensions": _dimensions(H.space),
        "classes": list(H.space.names),
    }


def _brackets(L):
    return [
        {"inputs": list(inputs), "value": {k: format_rational(c) for k, c in v.items()}}
        for inputs, v in sorted(L.to_brackets().items(), key=lambda i: (len(i[0]), i[0]))
        if v
    ]


# Commands


def cmd_check(args, inputs):
    """Verify the Jacobi identities and the morphism equations."""
    report = {"algebras": {}, "morphisms": {}, "cdgas": {}}
    ok = True
    for name, L in sorted(inputs.bundle.algebras.items()):
        verdict = is_codifferential(L.structure, args.arity_bound)
        ok &= bool(verdict)
        entry = _verdict(verdict)
        entry["dimensions"] = _dimensions(L.space)
        if verdict and args.degree_cutoff is not None:
            entry["coalgebra_homology"] = _coalgebra_homology(L, args.degree_cutoff)
        report["algebras"][name] = entry
    for name, f in sorted(inputs.bundle.morphisms.items()):
        verdict = is_dg_morphism(
            f.data, f.source.structure, f.target.structure, args.arity_bound
        )
        ok &= bool(verdict)
        report["morphisms"][name] = _verdict(verdict)
    for name, B in sorted(inputs.bundle.cdgas.items()):
        try:
            B.check()
            report["cdgas"][name] = {"ok": True}
        except VerificationError as error:
            ok = False
            report["cdgas"][name] = {"ok": False, "message": str(error)}
    return ok, report


def cmd_classify(args, inputs):
    """Classify a morphism as weak equivalence, fibration and so on."""
    f = inputs.pick("morphisms", args.morphism)
    report = {"class": classify(f).as_dict()}
    if args.degree_cutoff is not None:
        cutoff = args.degree_cutoff
        source = coalgebra_complex(f.source.structure, cutoff + 1)
        target = coalgebra_complex(f.target.structure, cutoff + 1)
        F = coalgebra_chain_map(f.data, source, target)
        report["coalgebra_quasi_isomorphism"] = is_quasi_isomorphism(
            F, degrees=range(1, cutoff + 1)
        )
    return True, report


def cmd_factor(args, inputs):
    """Factor a morphism into a weak equivalence and a fibration."""
    f = inputs.pick("morphisms", args.morphism)
    if args.mode == "strict":
        factorization = factor_strict_morphism(f)
    else:
        factorization = brown_factorize(f)
    j, p = factorization
    cj, cp = classify(j), classify(p)
    report = {
        "mode": args.mode,
        "middle": _dimensions(j.target.space),
        "j": cj.as_dict(),
        "p": cp.as_dict(),
    }
    if args.output is not None:
        bundle = Bundle(
            {"source": f.source, "middle": j.target, "target": f.target},
            morphisms={"j": j, "p": p},
        )
        save(args.output, bundle, overwrite=True)
        report["output"] = os.path.basename(args.output)
    return cj.is_weak_equivalence and cp.is_fibration, report


def cmd_pullback(args, inputs):
    """Pull a fibration back along a morphism with the same target."""
    f = inputs.pick("morphisms", args.f, 0)
    g = inputs.pick("morphisms", args.g, 1)
    square = pullback_fibration(f, g)
    claims = verify_pullback_claims(square)
    exactness = verify_tangent_exactness(square)
    report = {
        "pullback": _dimensions(square.algebra.space),
        "strictified": square.psi is not None,
        "claims": _verdict(claims),
        "tangent_exactness": _verdict(exactness),
        "q_prime": classify(square.q_prime).as_dict(),
    }
    if args.output is not None:
        bundle = Bundle(
            {"pullback": square.algebra, "L": f.source, "L'": g.source},
            morphisms={"q": square.q, "q'": square.q_prime},
        )
        save(args.output, bundle, overwrite=True)
        report["output"] = os.path.basename(args.output)
    return bool(claims) and bool(exactness), report


def cmd_mc(args, inputs):
    """Maurer-Cartan elements of ``L x B``."""
    B = inputs.pick("cdgas", args.cdga)
    if args.action in ("curvature", "check"):
        L = inputs.pick("algebras", args.algebra)
        T = tensor(L, B)
        report = {"degree_minus_one": list(T.space.name(i) for i in T.degree_minus_one())}
        if args.action == "curvature":
            names = report["degree_minus_one"]
            symbols = sympy.symbols(f"x0:{len(names)}") if names else ()
            # polynomial variables in terms of the degree -1 basis
            report["symbols"] = {str(x): name for x, name in zip(symbols, names)}
            report["polynomial"] = {
                name: str(p) for name, p in curvature_polynomial(T, symbols).items()
            }
            if args.point:
                a = _point(T, args.point)
                report["curvature"] = vector_to_names(T.space, curvature(T, a))
            return True, report
        if args.point:
            a = _point(T, args.point)
            curv = curvature(T, a)
            report["is_mc"] = not curv
            report["curvature"] = vector_to_names(T.space, curv)
            return not curv, report
        indices = T.degree_minus_one()
        found = []
        for values in sample_grid(len(indices), cap=args.sample_cap, seed=args.seed):
            a = {i: v for i, v in zip(indices, values) if v}
            if not curvature(T, a):
                found.append([format_rational(v) for v in values])
        report["mc_samples"] = found
        return True, report

    f = inputs.pick("morphisms", args.morphism, 0)
    if args.action == "pushforward":
        source = tensor(f.source, B)
        a = _point(source, args.point)
        image = pushforward(f, B, a, source=source)
        target = tensor(f.target, B, check=False)
        return True, {"image": vector_to_names(target.space, image)}

    g = inputs.pick("morphisms", args.g, 1)
    mc = MCPullback(pullback_fibration(f, g), B)
    a_prime = _point(mc.base, args.base_point)
    a = _point(mc.source, args.point)
    u = mc.phi(a_prime, a)
    return True, {"pullback_point": vector_to_names(mc.pullback.space, u)}


def cmd_postnikov(args, inputs):
    """Postnikov truncations, towers and their decompositions."""
    if args.action == "truncate":
        L = inputs.pick("algebras", args.algebra)
        t = truncate(L, args.degree, args.kind)
        report = {
            "name": t.name,
            "basis": [list(b) for b in t.algebra.space.basis],
            "brackets": _brackets(t.algebra),
        }
        if args.output is not None:
            save(args.output, t.algebra, overwrite=True)
            report["output"] = os.path.basename(args.output)
        return True, report
    if args.action == "tower":
        L = inputs.pick("algebras", args.algebra)
        T = tower(L, args.degree)
        stages = [
            {"name": t.name, "dimensions": _dimensions(t.algebra.space)} for t in T
        ]
        maps = []
        for source, target, q in zip(T, T[1:], T.maps):
            c = classify(q)
            maps.append(
                {
                    "from": source.name,
                    "to": target.name,
                    "fibration": c.is_fibration,
                    "acyclic_fibration": c.is_acyclic_fibration,
                }
            )
        return True, {"stages": stages, "maps": maps}

    f = inputs.pick("morphisms", args.morphism)
    if args.action == "quasisplit":
        witness = None
        if args.witness is not None:
            try:
                witness = json.loads(args.witness)
            except json.JSONDecodeError as error:
                raise InputError(f"Invalid witness: {error.msg}.")
        result = is_quasi_split(f, witness)
        report = {"status": result.status, "message": result.message}
        return result.status != "not quasi-split", report
    if args.degree is None:
        raise InputError("--degree is required.")
    if args.action == "decompose1":
        split = decompose_tower_step1(f, args.degree)
        report = {
            "kernel": _dimensions(split.splitting.kernel.space),
            "kernel_prime": _dimensions(split.splitting_prime.kernel.space),
            "commutes": split.is_commutative(),
        }
        return report["commutes"], report
    twisted = decompose_tower_step2(f, args.degree)
    report = {
        "homology": list(twisted.homology.space.names),
        "homology_prime": list(twisted.homology_prime.space.names),
        "mixed_brackets": [
            {"inputs": list(k), "value": v}
            for k, v in sorted(twisted.mixed_brackets().items())
        ],
        "commutes": twisted.is_commutative(),
    }
    return report["commutes"], report


COMMANDS = {
    "check": cmd_check,
    "classify": cmd_classify,
    "factor": cmd_factor,
    "pullback": cmd_pullback,
    "mc": cmd_mc,
    "postnikov": cmd_postnikov,
}


def _add_paths(parser):
    # after the positional action of mc and postnikov
    parser.add_argument("paths", nargs="+", help="JSON documents to read.")


def _parse_args(argv=None):
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument(
        "--report",
        choices=("json", "text"),
        default="text",
        help="Report format (default: text).",
    )
    common.add_argument(
        "--arity-bound", type=int, default=None, help="Largest arity to verify."
    )
    common.add_argument(
        "--degree-cutoff",
        type=int,
        default=None,
        help="Report coalgebra homology up to this degree "
        f"(typically {DEFAULT_DEGREE_CUTOFF}).",
    )
    common.add_argument(
        "--seed", type=int, default=None, help="Order of sample grid points."
    )
    common.add_argument("--algebra", default=None, help="Name of the algebra.")
    common.add_argument("--morphism", default=None, help="Name of the morphism.")
    common.add_argument("--output", default=None, help="Write the result here.")

    parser = argparse.ArgumentParser(
        prog=PROG,
        description="Verify and construct Lie n-algebras and their morphisms.",
    )
    parser.add_argument("--version", action="version", version=__version__)
    sub = parser.add_subparsers(dest="command", required=True)
    check = sub.add_parser("check", parents=[common], help=cmd_check.__doc__)
    _add_paths(check)
    classify_ = sub.add_parser("classify", parents=[common], help=cmd_classify.__doc__)
    _add_paths(classify_)
    factor = sub.add_parser("factor", parents=[common], help=cmd_factor.__doc__)
    _add_paths(factor)
    factor.add_argument("--mode", choices=("strict", "brown"), default="brown")
    pull = sub.add_parser("pullback", parents=[common], help=cmd_pullback.__doc__)
    _add_paths(pull)
    pull.add_argument("--f", default=None, help="The fibration.")
    pull.add_argument("--g", default=None, help="The morphism to pull back along.")
    mc = sub.add_parser("mc", parents=[common], help=cmd_mc.__doc__)
    mc.add_argument("action", choices=("curvature", "check", "pushforward", "pullback"))
    _add_paths(mc)
    mc.add_argument("--cdga", default=None, help="Name of the cdga.")
    mc.add_argument(
        "--point", action="append", help="Coordinate name=value, repeatable."
    )
    mc.add_argument(
        "--base-point", action="append", help="Coordinate of a' for pullbacks."
    )
    mc.add_argument("--g", default=None, help="The morphism to pull back along.")
    mc.add_argument("--sample-cap", type=int, default=DEFAULT_SAMPLE_CAP)
    post = sub.add_parser("postnikov", parents=[common], help=cmd_postnikov.__doc__)
    post.add_argument(
        "action",
        choices=("truncate", "tower", "quasisplit", "decompose1", "decompose2"),
    )
    _add_paths(post)
    post.add_argument("--degree", type=int, default=None)
    post.add_argument("--kind", choices=("<=", "<"), default="<=")
    post.add_argument("--witness", default=None, help="JSON list of H0 vectors.")
    return parser.parse_args(argv)


def _text(report, indent=0):
    lines = []
    for key, value in report.items():
        pad = "  " * indent
        if isinstance(value, dict) and value:
            lines.append(f"{pad}{key}:")
            lines.extend(_text(value, indent + 1))
        else:
            if isinstance(value, (list, dict)):
                value = json.dumps(value, ensure_ascii=False, sort_keys=True)
            lines.append(f"{pad}{key}: {value}")
    return lines


def render(report, style="json"):
    """The report as deterministic JSON or indented text."""
    if style == "json":
        return json.dumps(report, indent=2, sort_keys=True, ensure_ascii=False)
    return "\n".join(_text(report))


def main(argv=None):
    args = _parse_args(argv)
    command = COMMANDS[args.command]
    report = {"operation": args.command}
    try:
        # check reports failing axioms itself instead of refusing the input
        inputs = Inputs(args.paths, check=args.command != "check")
        report["inputs"] = inputs.digest
        ok, result = command(args, inputs)
    except (IOError, DocumentError, InputError) as error:
        print(f"{PROG}: error: {error}", file=sys.stderr)
        return EXIT_INPUT
    except VerificationError as error:
        report["verified"] = False
        report["error"] = {"type": type(error).__name__, "message": str(error)}
        if error.witness is not None:
            report["error"]["witness"] = str(error.witness)
        print(render(report, args.report))
        print(f"{PROG}: {type(error).__name__}: {error}", file=sys.stderr)
        return EXIT_FAILED
    report.update(result)
    report["verified"] = bool(ok)
    print(render(report, args.report))
    return EXIT_OK if ok else EXIT_FAILED


if __name__ == "__main__":
    sys.exit(main())
