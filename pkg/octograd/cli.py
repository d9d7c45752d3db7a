"""
Command line front end: construct objects as JSON dumps, verify them, print censuses and universal groups, decide
isomorphism of grading labels and list the fine gradings of G₂ and D₄ forms.

Exit codes: 0 pass, 1 verification failure, 2 usage error.
"""


import argparse
import json
import logging
import sys
from fractions import Fraction
from pathlib import Path
from typing import Any, Sequence

from octograd import codecs
from octograd.composition import SCAlgebra, get_algebra
from octograd.config import RunConfig, use_config
from octograd.d4 import census, census_csv, fine_typeIII, list_fine, typeIII_so_grading
from octograd.errors import CodecError, OctogradError, PreconditionError
from octograd.gradings import (
    GradingLabel,
    Grading,
    admissible_characters,
    cartan_grading,
    cartan_z2_grading,
    cayley_cd_grading,
    fine_cayley,
    grading_universal_group,
    iso_decision,
    trivial_cayley_grading,
    verify_grading,
)
from octograd.gradings.cayley import elementary_group
from octograd.groups import FinAbGroup, GroupElem
from octograd.lie import LinearLieAlg
from octograd.results import VerificationReport
from octograd.twisted import (
    EtaleCubic,
    TwistedComposition,
    cayley_grading,
    minimal_typeIII_instances,
    similitude,
    tc_hurwitz,
    typeIII_grading,
    verify_twisted_axioms,
)

logger = logging.getLogger(__name__)

EXIT_PASS = 0
EXIT_FAIL = 1
EXIT_USAGE = 2

GRADING_KINDS = ("cartan", "cd", "fine-cayley", "typeIII", "typeIII-so")
GAMMA_C_CHOICES = ("trivial", "cd:Z2", "cd:Z2^2", "cd:Z2^3", "cartan")


def parse_args(argv: Sequence[str] | None = None) -> argparse.Namespace:
    parser = argparse.ArgumentParser(prog="octograd", description="Gradings on composition algebras and their kin.")
    parser.add_argument("-v", "--verbose", action="store_true", help="Log at DEBUG level.")
    parser.add_argument("--seed", type=int, default=0, help="Seed for randomized identity checks.")
    parser.add_argument("--samples", type=int, default=100, help="Random samples per identity check.")
    parser.add_argument("--out", type=Path, default=None, help="Output path (stdout if omitted).")
    commands = parser.add_subparsers(dest="command", required=True)

    construct = commands.add_parser("construct", help="Construct an object and write its JSON dump.")
    what = construct.add_mutually_exclusive_group(required=True)
    what.add_argument("--algebra", help="Registered composition algebra, e.g. O, Os, split-cayley.")
    what.add_argument("--twisted", choices=("tc",), help="The twisted composition TC(C̄, F×K).")
    what.add_argument("--grading", choices=GRADING_KINDS)
    construct.add_argument("--cayley", choices=("O", "Os"), help="Cayley algebra of the construction.")
    construct.add_argument("--lambda", dest="lam", help="Similitude parameter λ as (b,c) ∈ F×K or (x0,x1,x2).")
    construct.add_argument("--item", help="Type III item, e.g. 2.c.")
    construct.add_argument("--name", help="Named fine grading.")
    construct.add_argument("--gammaC", dest="gamma_c", choices=GAMMA_C_CHOICES, help="The grading on C.")
    construct.add_argument("--h-order", dest="h_order", type=int, default=3, help="Order of h (must be 3).")

    verify = commands.add_parser("verify", help="Run the invariant checks that apply to a dump.")
    verify.add_argument("file", type=Path)
    verify.add_argument("--lambda", dest="lam", help="Check the similitude (λβ, μQ) of a twisted composition.")
    verify.add_argument("--mu", help="Multiplier μ of the similitude (defaults to λ^♯).")

    census_command = commands.add_parser("census", help="Dimension and form inertia per component, as CSV.")
    census_command.add_argument("file", type=Path)

    universal = commands.add_parser("universal", help="Universal group of a grading.")
    universal.add_argument("file", type=Path)

    iso = commands.add_parser("iso", help="Decide whether two labelled gradings are isomorphic.")
    iso.add_argument("first", type=Path)
    iso.add_argument("second", type=Path)

    fine = commands.add_parser("list-fine", help="Fine gradings with universal groups and censuses.")
    fine.add_argument("--algebra", required=True, choices=("G2-compact", "G2-split", "so71", "so53"))
    return parser.parse_args(argv)


# ---------------------------- #
# Argument decoding            #
# ---------------------------- #


def parse_l_element(text: str) -> tuple:
    """(b,c) is the element (b, c) of F×K with c rational; three entries are coordinates in {1, ξ, ξ²}."""
    entries = [Fraction(part.strip()) for part in text.strip().strip("()").split(",") if part.strip()]
    match entries:
        case [b, c]:
            return EtaleCubic.twisted().from_pair(b, c)
        case [_, _, _]:
            return tuple(entries)
        case _:
            raise PreconditionError(f"Elements of L are written (b,c) or (x0,x1,x2), got {text!r}")


def _cayley_over(kind: str | None, gamma_c: str, group: FinAbGroup, embed) -> Grading:
    """Γ_C on the Cayley algebra of the given kind, graded by `group` through the embedding of its own group."""
    if kind is None:
        raise PreconditionError("--gammaC needs --cayley")

    match gamma_c:
        case "trivial":
            return trivial_cayley_grading(get_algebra(kind), group)
        case "cartan":
            if kind != "Os":
                raise PreconditionError("The Cartan grading lives on Os")

            (one, two) = FinAbGroup.free(2).gens
            return cartan_grading(group, (embed(one), embed(two), embed(-one - two)))
        case _:
            rank = int(gamma_c.partition("^")[2] or 1)
            _, basis = elementary_group(rank)
            basis = [embed(t) for t in basis]
            mu = None
            if kind == "Os" and rank > 1:
                mu = admissible_characters(basis, "Os")[0]

            return cayley_cd_grading(kind, group, basis, mu)


def _own_group(gamma_c: str) -> FinAbGroup:
    match gamma_c:
        case "trivial":
            return FinAbGroup()
        case "cartan":
            return FinAbGroup.free(2)
        case _:
            return elementary_group(int(gamma_c.partition("^")[2] or 1))[0]


def _cayley_with_h(args: argparse.Namespace) -> tuple[FinAbGroup, Grading, GroupElem]:
    if args.h_order != 3:
        raise PreconditionError(f"h must have order 3, got --h-order {args.h_order}")

    if args.gamma_c is None:
        raise PreconditionError("This construction needs --gammaC")

    own = _own_group(args.gamma_c)
    group, left, right = own.product(FinAbGroup.cyclic(3))
    gamma_c = _cayley_over(args.cayley, args.gamma_c, group, left)
    return group, gamma_c, right(FinAbGroup.cyclic(3).gens[0])


def construct_object(args: argparse.Namespace) -> Any:
    if args.algebra:
        return get_algebra(args.algebra)

    if args.twisted:
        if args.cayley is None:
            raise PreconditionError("--twisted needs --cayley")

        twisted = tc_hurwitz(get_algebra(args.cayley))
        return twisted if args.lam is None else similitude(twisted, parse_l_element(args.lam))

    match args.grading:
        case "cartan":
            return cartan_z2_grading()
        case "cd":
            group = _own_group(args.gamma_c or "cd:Z2^3")
            return _cayley_over(args.cayley, args.gamma_c or "cd:Z2^3", group, lambda t: t)
        case "fine-cayley":
            return fine_cayley(args.name or "O-Z2^3")
        case "typeIII":
            if args.item:
                instances = minimal_typeIII_instances()
                if args.item not in instances:
                    raise PreconditionError(f"Unknown item {args.item!r}, expected one of {', '.join(instances)}")

                return typeIII_grading(instances[args.item])

            return cayley_grading(*_cayley_with_h(args))
        case "typeIII-so":
            if args.name:
                return fine_typeIII(args.name)

            return typeIII_so_grading(*_cayley_with_h(args))

    raise PreconditionError(f"Nothing to construct; grading kinds are {', '.join(GRADING_KINDS)}")


# ---------------------------- #
# Commands                     #
# ---------------------------- #


def _write(args: argparse.Namespace, text: str):
    if args.out is None:
        sys.stdout.write(text)
    else:
        args.out.write_text(text, encoding="utf-8")


def _write_json(args: argparse.Namespace, payload: Any):
    _write(args, json.dumps(payload, indent=2, sort_keys=True, ensure_ascii=False) + "\n")


def _load(path: Path) -> tuple[dict, Any]:
    text = path.read_text(encoding="utf-8")
    try:
        data = json.loads(text)
    except json.JSONDecodeError as error:
        raise CodecError(f"{path} is not valid JSON: {error}") from error

    return data, codecs.load_object(data)


def _load_grading(path: Path) -> Grading:
    _, obj = _load(path)
    if not isinstance(obj, Grading):
        raise PreconditionError(f"{path} does not hold a grading")

    return obj


def _load_label(path: Path) -> GradingLabel:
    _, obj = _load(path)
    match obj:
        case GradingLabel():
            return obj
        case Grading(label=GradingLabel() as label):
            return label
        case _:
            raise PreconditionError(f"{path} holds neither a label nor a labelled grading")


def cmd_construct(args: argparse.Namespace) -> int:
    obj = construct_object(args)
    logger.debug("constructed %r", obj)
    _write(args, codecs.dumps(obj))
    return EXIT_PASS


def verify_object(data: dict, obj: Any, args: argparse.Namespace) -> VerificationReport:
    lam = None if getattr(args, "lam", None) is None else parse_l_element(args.lam)
    mu = None if getattr(args, "mu", None) is None else parse_l_element(args.mu)
    match obj:
        case Grading():
            return verify_grading(obj)
        case TwistedComposition():
            report = verify_twisted_axioms(obj, lam, mu)
            report.add(codecs.twisted_tables_check(data, obj))
            return report
        case SCAlgebra():
            report = VerificationReport(f"algebra {obj.name}")
            if obj.has_norm:
                report.extend(obj.require_norm().check_consistency())
                match obj.composition_witness():
                    case None:
                        report.passed("composition")
                    case witness:
                        report.failed("composition", witness, "n(xy) ≠ n(x)n(y) on a basis 4-tuple")

            return report
        case LinearLieAlg():
            return obj.closure_report()
        case _:
            raise PreconditionError(f"Nothing to verify for a {type(obj).__name__}")


def cmd_verify(args: argparse.Namespace) -> int:
    data, obj = _load(args.file)
    report = verify_object(data, obj, args)
    _write_json(args, report.as_dict())
    for failure in report.failures:
        print(f"FAIL {failure.name}: {failure.message} (witness {failure.witness!r})", file=sys.stderr)

    return EXIT_PASS if report else EXIT_FAIL


def cmd_census(args: argparse.Namespace) -> int:
    _write(args, census_csv(census(_load_grading(args.file))))
    return EXIT_PASS


def cmd_universal(args: argparse.Namespace) -> int:
    group, relabeled = grading_universal_group(_load_grading(args.file))
    _write_json(
        args,
        {
            "group": str(group),
            **group.to_json(),
            "census": {str(dim): count for dim, count in sorted(relabeled.census().items())},
        },
    )
    return EXIT_PASS


def cmd_iso(args: argparse.Namespace) -> int:
    decision = iso_decision(_load_label(args.first), _load_label(args.second))
    _write(args, "true\n" if decision else "false\n")
    return EXIT_PASS


def cmd_list_fine(args: argparse.Namespace) -> int:
    _write_json(args, {"algebra": args.algebra, "fine_gradings": [row.as_dict() for row in list_fine(args.algebra)]})
    return EXIT_PASS


COMMANDS = {
    "construct": cmd_construct,
    "verify": cmd_verify,
    "census": cmd_census,
    "universal": cmd_universal,
    "iso": cmd_iso,
    "list-fine": cmd_list_fine,
}


def main(argv: Sequence[str] | None = None) -> int:
    try:
        args = parse_args(argv)
    except SystemExit as exit_:
        return EXIT_PASS if exit_.code == 0 else EXIT_USAGE

    logging.basicConfig(
        level=logging.DEBUG if args.verbose else logging.WARNING, format="%(levelname)s %(name)s: %(message)s"
    )
    try:
        with use_config(RunConfig(seed=args.seed, samples=args.samples)):
            return COMMANDS[args.command](args)
    except (OctogradError, KeyError, OSError) as error:
        print(f"error: {error}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
