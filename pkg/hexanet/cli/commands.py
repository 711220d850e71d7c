"""
Subcommands. Every command reads JSON from --input (or stdin) when it needs
an input value and writes JSON to stdout, so commands compose in pipelines.
"""
import argparse
import json
import logging
import sys
from typing import Optional

import numpy as np

from ..schemas.matrix import MatrixSchema
from ..schemas.network import NetworkSchema, TilingSchema
from ..schemas.report import LaurentEntrySchema
from ..services.generator import MatrixGenerator
from ..services.half_aztec import enumerate_half_aztec
from ..services.hermitian import sample_positive_network
from ..services.laurent import format_laurent, hermitian_symbolic_reconstruct, letter_names, symbolic_reconstruct
from ..services.minors import ExactMatrix, FaceConvention
from ..services.networks import apply_moves, matrix_to_network, normalize
from ..services.quaternionic import qdet, qdet_pfaffian, random_q_hermitian
from ..services.reconstruct import reconstruct, reconstruct_any_tiling
from ..services.render import render_svg
from ..services.scalars import Ring
from ..services.tilings import enumerate_tilings, find_hexagons, random_flips, standard_tiling
from ..services.verify import IdentitySuite

logger = logging.getLogger(__name__)

USAGE_EXIT = 64


class CommandParser(argparse.ArgumentParser):
    """argparse with the usage exit code of this tool"""

    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(USAGE_EXIT, f"{self.prog}: error: {message}\n")


def _read_input(args) -> str:
    if args.input and args.input != "-":
        with open(args.input) as f:
            return f.read()
    return sys.stdin.read()


def _emit(payload) -> None:
    if hasattr(payload, "model_dump_json"):
        sys.stdout.write(payload.model_dump_json(indent=2, exclude_none=True) + "\n")
    else:
        sys.stdout.write(json.dumps(payload, indent=2) + "\n")


def _fraction(x) -> str:
    return f"{x.numerator}/{x.denominator}"


def cmd_gen(args) -> int:
    generator = MatrixGenerator(args.seed)
    ring = Ring(args.ring)
    if ring == Ring.QUAT:
        m = random_q_hermitian(generator, args.n)
    elif args.kind == "hermitian":
        m = generator.generic_hermitian(args.n, ring)
    elif args.kind == "gram":
        m = generator.generic_gram(args.n, ring)
    else:
        m = generator.generic_matrix(args.n, ring)
    _emit(MatrixSchema.from_matrix(m))
    return 0


def cmd_to_network(args) -> int:
    m = MatrixSchema.model_validate_json(_read_input(args)).to_matrix()
    if args.tiling == "standard":
        tiling = standard_tiling(m.n)
    else:
        with open(args.tiling) as f:
            tiling = TilingSchema.model_validate_json(f.read()).to_tiling()
    net = matrix_to_network(m, tiling, FaceConvention(args.convention))
    _emit(NetworkSchema.from_network(net))
    return 0


def cmd_flip(args) -> int:
    net = NetworkSchema.model_validate_json(_read_input(args)).to_network()
    if args.random is not None:
        _, moves = random_flips(net.tiling, args.random, np.random.default_rng(args.seed))
    else:
        hexagons = find_hexagons(net.tiling)
        if not 0 <= args.hexagon < len(hexagons):
            raise ValueError(f"hexagon index {args.hexagon} out of range; the tiling has {len(hexagons)}")
        moves = [hexagons[args.hexagon]]
    logger.info(f"Applying {len(moves)} cube move(s): {', '.join(str(h) for h in moves)}")
    _emit(NetworkSchema.from_network(apply_moves(net, moves)))
    return 0


def cmd_reconstruct(args) -> int:
    net = NetworkSchema.model_validate_json(_read_input(args)).to_network()
    if args.normalize:
        net = normalize(net)
    _emit(MatrixSchema.from_matrix(reconstruct_any_tiling(net)))
    return 0


def cmd_laurent(args) -> int:
    i, j = (int(x) for x in args.entry.split(","))
    if not (1 <= i <= args.n and 1 <= j <= args.n):
        raise ValueError(f"entry ({i},{j}) outside a {args.n}x{args.n} matrix")
    if args.hermitian:
        convention = FaceConvention.ODD
        matrix = hermitian_symbolic_reconstruct(args.n)
    else:
        convention = FaceConvention(args.convention)
        matrix = symbolic_reconstruct(args.n, convention)
    if args.letters and not args.hermitian:
        matrix = matrix.renamed(letter_names(args.n))
    entry = matrix.entry(i, j)
    if args.count_only:
        print(len(entry))
        return 0
    tilings: Optional[int] = None
    if args.aztec:
        tilings = len(enumerate_half_aztec(args.n, i, j))
    _emit(
        LaurentEntrySchema(
            n=args.n, i=i, j=j, convention=convention, polynomial=format_laurent(entry), terms=len(entry), tilings=tilings
        )
    )
    return 0


def cmd_tilings(args) -> int:
    tilings = enumerate_tilings(args.n)
    if args.count_only:
        print(len(tilings))
        return 0
    _emit([TilingSchema.from_tiling(t).model_dump() for t in tilings])
    return 0


def cmd_verify(args) -> int:
    m = MatrixSchema.model_validate_json(_read_input(args)).to_matrix()
    report = IdentitySuite(seed=args.seed, flips=args.flips).run(m)
    for check in report.failures:
        logger.error(f"verify: {check.name} failed: {check.detail}")
    _emit({**report.model_dump(mode="json"), "passed": report.passed})
    return 0 if report.passed else 2


def cmd_sample_posdef(args) -> int:
    net = sample_positive_network(args.n, args.seed, Ring(args.ring))
    if args.n >= 2:
        m = reconstruct(net)
    else:
        m = ExactMatrix.from_rows([[net.vertex({1})]], net.ring)
    _emit(
        {
            "matrix": MatrixSchema.from_matrix(m).model_dump(mode="json"),
            "network": NetworkSchema.from_network(net).model_dump(mode="json", exclude_none=True),
        }
    )
    return 0


def cmd_qdet(args) -> int:
    m = MatrixSchema.model_validate_json(_read_input(args)).to_matrix()
    value = qdet(m)
    payload = {"n": m.n, "qdet": _fraction(value)}
    if not args.no_pfaffian:
        pfaffian_value = qdet_pfaffian(m)
        if pfaffian_value != value:
            logger.error(f"qdet {value} and its Pfaffian form {pfaffian_value} disagree")
        payload["pfaffian"] = _fraction(pfaffian_value)
        payload["agree"] = pfaffian_value == value
    _emit(payload)
    return 0


def cmd_render(args) -> int:
    if args.n is not None:
        obj = standard_tiling(args.n)
    else:
        data = json.loads(_read_input(args))
        if "vertices" in data:
            obj = NetworkSchema.model_validate(data).to_network()
        elif "tiles" in data:
            obj = TilingSchema.model_validate(data).to_tiling()
        else:
            raise ValueError("render expects a tiling or a network")
    sys.stdout.write(render_svg(obj, labels=not args.no_labels))
    return 0


def _add_input(p: argparse.ArgumentParser) -> None:
    p.add_argument("--input", "-i", default="-", help="JSON input file (default: stdin)")


def build_parser() -> CommandParser:
    parser = CommandParser(prog="hexanet", description="Matrices, rhombus tilings and labeled networks")
    parser.add_argument("--log-level", default=None, help="Override LOG_LEVEL")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("gen", help="Random generic matrix")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--ring", choices=[r.value for r in Ring], default=Ring.RAT.value)
    p.add_argument("--kind", choices=["general", "hermitian", "gram"], default="general")
    p.add_argument("--seed", type=int, default=42)
    p.set_defaults(handler=cmd_gen)

    p = sub.add_parser("to-network", help="Matrix to labeled network")
    _add_input(p)
    p.add_argument("--tiling", default="standard", help="'standard' or a tiling JSON file")
    p.add_argument("--convention", choices=[c.value for c in FaceConvention], default=FaceConvention.ODD.value)
    p.set_defaults(handler=cmd_to_network)

    p = sub.add_parser("flip", help="Cube moves on a network")
    _add_input(p)
    group = p.add_mutually_exclusive_group(required=True)
    group.add_argument("--hexagon", type=int, help="Index into the sorted flippable hexagons")
    group.add_argument("--random", type=int, metavar="K", help="Apply K random flips")
    p.add_argument("--seed", type=int, default=42)
    p.set_defaults(handler=cmd_flip)

    p = sub.add_parser("reconstruct", help="Network back to its matrix")
    _add_input(p)
    p.add_argument("--normalize", action="store_true", help="Divide by F(v0) first")
    p.set_defaults(handler=cmd_reconstruct)

    p = sub.add_parser("laurent", help="Symbolic matrix entry as a Laurent polynomial")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--entry", required=True, help="i,j")
    p.add_argument("--convention", choices=[c.value for c in FaceConvention], default=FaceConvention.LOWER.value)
    p.add_argument("--hermitian", action="store_true")
    p.add_argument("--letters", action="store_true", help="Rename variables to a, b, c, ... in level order")
    p.add_argument("--aztec", action="store_true", help="Also count half-aztec domino tilings")
    p.add_argument("--count-only", action="store_true")
    p.set_defaults(handler=cmd_laurent)

    p = sub.add_parser("tilings", help="Enumerate rhombus tilings of the 2n-gon")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--count-only", action="store_true")
    p.set_defaults(handler=cmd_tilings)

    p = sub.add_parser("verify", help="Run the identity suite on a matrix")
    _add_input(p)
    p.add_argument("--seed", type=int, default=42)
    p.add_argument("--flips", type=int, default=6)
    p.set_defaults(handler=cmd_verify)

    p = sub.add_parser("sample-posdef", help="Random positive network")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--ring", choices=[Ring.RAT.value, Ring.GAUSS.value], default=Ring.GAUSS.value)
    p.add_argument("--seed", type=int, default=42)
    p.set_defaults(handler=cmd_sample_posdef)

    p = sub.add_parser("qdet", help="Quaternionic determinant of a q-Hermitian matrix")
    _add_input(p)
    p.add_argument("--no-pfaffian", action="store_true", help="Skip the Pfaffian form")
    p.set_defaults(handler=cmd_qdet)

    p = sub.add_parser("render", help="SVG picture of a tiling or network")
    _add_input(p)
    p.add_argument("--n", type=int, default=None, help="Render the standard tiling instead of reading input")
    p.add_argument("--format", choices=["svg"], default="svg")
    p.add_argument("--no-labels", action="store_true")
    p.set_defaults(handler=cmd_render)

    return parser
