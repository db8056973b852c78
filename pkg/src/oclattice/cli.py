"""``oclattice`` command line front end.

Exit codes: 0 ok/true, 1 false, 2 parse error, 3 size cap, 4 invalid input
(unbalanced identity, not overcommutative), 5 congruence cap, 6 unknown.
"""
from __future__ import annotations

import argparse
import json
import sys
from dataclasses import asdict, dataclass
from pathlib import Path
from typing import Optional

from .errors import InvalidInput, LatticeCapExceeded, ParseError, SizeCapExceeded, UnbalancedIdentity
from .gsets import congruence_lattice, quotient_gset
from .lattices import is_distributive, is_modular
from .rewrite import Identity, Presentation, derivable, phi_lambda
from .theoremcheck import bound_params, check_condition_e, least_lemma_level, least_pk
from .words import Content, Partition, enumerate_words, format_word

EXIT_OK, EXIT_FALSE, EXIT_PARSE, EXIT_CAP, EXIT_INVALID, EXIT_LATTICE_CAP, EXIT_UNKNOWN = range(7)


class _Report:
    def to_json(self) -> str:
        return json.dumps(asdict(self), sort_keys=True)

    @classmethod
    def from_json(cls, text: str):
        return cls(**json.loads(text))


@dataclass
class WordsReport(_Report):
    content: str
    words: list[str]
    count: int

    def text(self) -> str:
        return "\n".join(self.words + [f"{self.count} words"])


@dataclass
class PhiReport(_Report):
    content: str
    presentation: list[str]
    classes: list[list[str]]
    num_classes: int

    def text(self) -> str:
        return "\n".join([" ".join(c) for c in self.classes] + [f"{self.num_classes} classes"])


@dataclass
class ConReport(_Report):
    partition: str
    presentation: list[str]
    group_order: int
    quotient_size: int
    congruences: int
    modular: bool
    distributive: bool
    lattice: Optional[dict] = None

    def text(self) -> str:
        return "\n".join([
            f"partition       {self.partition}",
            f"group order     {self.group_order}",
            f"quotient size   {self.quotient_size}",
            f"congruences     {self.congruences}",
            f"modular         {str(self.modular).lower()}",
            f"distributive    {str(self.distributive).lower()}",
        ])


@dataclass
class CheckReport(_Report):
    presentation: list[str]
    satisfies_e: str
    permutative: bool
    search_bound: int
    witness: Optional[dict]
    contains_lz: bool
    contains_rz: bool
    contains_x: bool
    contains_xdual: bool
    k: Optional[int] = None
    n: Optional[int] = None
    N: Optional[int] = None
    card_bound_log2: Optional[int] = None
    verdict: str = ""

    def text(self) -> str:
        lines = [f"satisfies_e     {self.satisfies_e}"]
        if self.witness:
            lhs = format_word(tuple(range(1, self.witness["n"] + 1)))
            lines.append(f"permutative     yes: {lhs} = {format_word(tuple(self.witness['g']))}")
        else:
            lines.append(f"permutative     none found on <= {self.search_bound} letters")
        for name in ("contains_lz", "contains_rz", "contains_x", "contains_xdual"):
            lines.append(f"{name:<15} {str(getattr(self, name)).lower()}")
        if self.k is not None:
            lines.append(f"P_k level       k = {self.k}")
        if self.n is not None:
            lines.append(f"identity level  n = {self.n}")
        if self.N is not None:
            lines.append(f"N               {self.N}")
            lines.append(f"card_bound      2^{self.card_bound_log2}")
        lines.append(self.verdict)
        return "\n".join(lines)


@dataclass
class DeriveReport(_Report):
    identity: str
    derivable: bool

    def text(self) -> str:
        return "derivable" if self.derivable else "not derivable"


def _load(path: Optional[str]) -> Presentation:
    if path is None:
        return Presentation()
    try:
        return Presentation.load(path)
    except OSError as e:
        raise ParseError(f"cannot read presentation: {e}") from None


def _content(args) -> Content:
    if args.content is not None:
        return Content.parse(args.content)
    if args.partition is not None:
        return Partition.parse(args.partition).content()
    raise ParseError("one of --content or --partition is required")


def cmd_words(args) -> tuple[WordsReport, int]:
    c = _content(args)
    wc = enumerate_words(c, max_words=args.cap_words)
    words = [format_word(w) for w in wc.words]
    return WordsReport(str(c), words, len(words)), EXIT_OK


def cmd_phi(args) -> tuple[PhiReport, int]:
    sigma = _load(args.presentation)
    c = _content(args)
    phi = phi_lambda(sigma, c, max_words=args.cap_words)
    classes = [[format_word(w) for w in cls] for cls in phi.word_classes()]
    return PhiReport(str(c), [str(i) for i in sigma], classes, len(classes)), EXIT_OK


def cmd_con(args) -> tuple[ConReport, int]:
    sigma = _load(args.presentation)
    if args.partition is None:
        raise ParseError("--partition is required")
    p = Partition.parse(args.partition)
    a = quotient_gset(sigma, p, max_words=args.cap_words)
    lat = congruence_lattice(a, args.cap_congruences)
    report = ConReport(str(p), [str(i) for i in sigma], a.group.order, a.size, lat.size,
                       is_modular(lat), is_distributive(lat))
    if args.export_lattice:
        Path(args.export_lattice).write_text(lat.to_json(), encoding="utf-8")
        report.lattice = lat.to_json_dict()
    return report, EXIT_OK


def cmd_check(args) -> tuple[CheckReport, int]:
    sigma = _load(args.presentation)
    rep = check_condition_e(sigma, args.n_max)
    verdict = {True: "true", False: "false", None: "unknown"}[rep.satisfies_e]
    out = CheckReport(
        [str(i) for i in sigma], verdict, rep.permutative, rep.search_bound,
        None if rep.witness is None else {"n": rep.witness.n, "g": list(rep.witness.g)},
        rep.contains_lz, rep.contains_rz, rep.contains_x, rep.contains_xdual,
    )
    if rep.satisfies_e:
        out.k = least_pk(sigma, args.k_max, max_words=args.cap_words)
        out.n = least_lemma_level(sigma)
        if out.k is not None and out.n is not None:
            b = bound_params(out.k, out.n)
            out.N = b.N
            out.card_bound_log2 = b.card_bound_log2
        out.verdict = ("condition e) holds: the lattice of overcommutative subvarieties satisfies "
                       "a non-trivial lattice identity and quasiidentity, and is equationally and "
                       "quasiequationally equivalent to a finite lattice")
    elif rep.satisfies_e is False:
        out.verdict = (f"condition e) fails ({', '.join(rep.violations())}): the lattice of "
                       "overcommutative subvarieties satisfies no non-trivial lattice identity "
                       "or quasiidentity")
    else:
        out.verdict = (f"unknown: no permutation identity on at most {args.n_max} letters; "
                       "permutativity cannot be settled within the search bound")
    return out, EXIT_UNKNOWN if rep.satisfies_e is None else EXIT_OK


def cmd_derive(args) -> tuple[DeriveReport, int]:
    sigma = _load(args.presentation)
    ident = Identity.parse(args.identity)
    sigma.require_balanced()
    if not ident.balanced:
        raise UnbalancedIdentity(f"identity {ident} is not balanced")
    ok = derivable(sigma, ident.lhs, ident.rhs, max_words=args.cap_words)
    return DeriveReport(str(ident), ok), EXIT_OK if ok else EXIT_FALSE


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="oclattice", description=__doc__.splitlines()[0])
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--presentation", metavar="PATH",
                        help="identities, one '<word> = <word>' per line; omitted means none")
    common.add_argument("--content", help="word content, e.g. x:2,y:1")
    common.add_argument("--partition", help="partition, e.g. 3,2,1 (content a:3,b:2,c:1)")
    common.add_argument("--n-max", type=int, default=6)
    common.add_argument("--k-max", type=int, default=3)
    common.add_argument("--cap-words", type=int, default=10**6)
    common.add_argument("--cap-congruences", type=int, default=10**5)
    common.add_argument("--json", action="store_true", help="emit a JSON report")
    sub = parser.add_subparsers(dest="command", required=True)
    sub.add_parser("words", parents=[common], help="list the words of a content class")
    sub.add_parser("phi", parents=[common], help="classes of the presentation on a word class")
    con = sub.add_parser("con", parents=[common], help="congruence lattice of the quotient G-set")
    con.add_argument("--export-lattice", metavar="PATH", help="write the lattice as JSON")
    sub.add_parser("check", parents=[common], help="decide condition e) for a presentation")
    derive = sub.add_parser("derive", parents=[common], help="decide whether an identity follows")
    derive.add_argument("identity", help="identity '<word> = <word>'")
    return parser


COMMANDS = {"words": cmd_words, "phi": cmd_phi, "con": cmd_con, "check": cmd_check,
            "derive": cmd_derive}


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    for name in ("n_max", "k_max", "cap_words", "cap_congruences"):
        if getattr(args, name) < 1:
            print(f"error: --{name.replace('_', '-')} must be positive", file=sys.stderr)
            return EXIT_PARSE
    try:
        report, code = COMMANDS[args.command](args)
    except ParseError as e:
        print(f"parse error: {e}", file=sys.stderr)
        return EXIT_PARSE
    except LatticeCapExceeded as e:
        print(f"congruence cap exceeded: {e}", file=sys.stderr)
        return EXIT_LATTICE_CAP
    except SizeCapExceeded as e:
        print(f"size cap exceeded: {e}", file=sys.stderr)
        return EXIT_CAP
    except InvalidInput as e:
        print(f"invalid input: {e}", file=sys.stderr)
        return EXIT_INVALID
    print(report.to_json() if args.json else report.text())
    return code


if __name__ == "__main__":
    sys.exit(main())
