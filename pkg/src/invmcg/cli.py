"""Command-line front end.

Exit status: 0 on success (and for ``equal``, when the words are equal),
1 when ``equal`` finds distinct words or ``relcheck`` sees a failure,
2 on any usage or parse error.
"""

from __future__ import annotations

import argparse
import json
import random
import sys
from typing import Sequence, TextIO

from .partial import tau_of_word
from .small_cases import enumerate_im0n, symmetric_inverse_table
from .sphere import FLAVORS, enumerate_sphere
from .tower import abelianize, equality_engine, in_center, is_brunnian, normalize
from .words import RELATION_FLAVORS, WordError, check_relations, parse_word, perturb, random_word, relations

DEFAULT_SEED = 0

# relcheck accepts a base flavor as shorthand for its inverse-monoid relation set
_RELCHECK_DEFAULTS = {
    "disc": "disc-inverse",
    "sphere-braid": "sphere-inverse-braid",
    "sphere-mcg": "sphere-inverse-mcg",
}


class CliError(Exception):
    pass


def _parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--n", type=int, required=True, help="rank (number of marked points)")
    common.add_argument("--flavor", default=None, help="disc, sphere-braid or sphere-mcg")
    common.add_argument("--format", choices=("text", "json"), default="text")
    common.add_argument("--seed", type=int, default=DEFAULT_SEED)

    p = argparse.ArgumentParser(prog="invmcg", description="Inverse braid and mapping class monoids.")
    sub = p.add_subparsers(dest="command", required=True)
    sub.add_parser("reduce", parents=[common], help="canonical form of a word").add_argument("word")
    eq = sub.add_parser("equal", parents=[common], help="decide equality of two words")
    eq.add_argument("word1")
    eq.add_argument("word2")
    sub.add_parser("tau", parents=[common], help="underlying partial injection").add_argument("word")
    sub.add_parser("abelianize", parents=[common], help="image in the abelianization").add_argument("word")
    sub.add_parser("brunnian", parents=[common], help="per-strand Brunnian tests").add_argument("word")
    sub.add_parser("center", parents=[common], help="center membership").add_argument("word")
    table = sub.add_parser("table", parents=[common], help="multiplication table of a finite tower")
    table.add_argument("--symmetric", action="store_true", help="table of the symmetric inverse monoid instead")
    sub.add_parser("enumerate", parents=[common], help="normal forms of a finite sphere group")
    sub.add_parser("relcheck", parents=[common], help="certify a relation set")
    return p


def _flavor(args, default: str, allowed: Sequence[str] = FLAVORS) -> str:
    flavor = args.flavor or default
    if flavor not in allowed:
        raise CliError(f"flavor {flavor!r} is not valid for {args.command}; expected one of {', '.join(allowed)}")
    return flavor


def _word(text: str, n: int):
    return parse_word(text, n)


def _text(w) -> str:
    return str(w) or "1"


def _emit(out: TextIO, args, text: str, payload) -> None:
    if args.format == "json":
        out.write(json.dumps(payload, sort_keys=True) + "\n")
    else:
        out.write(text + "\n")


def _cmd_reduce(args, out) -> int:
    e = normalize(_word(args.word, args.n), _flavor(args, "disc"))
    _emit(out, args, str(e), e.to_json())
    return 0


def _cmd_equal(args, out) -> int:
    flavor = _flavor(args, "disc")
    a = normalize(_word(args.word1, args.n), flavor)
    b = normalize(_word(args.word2, args.n), flavor)
    same = a == b
    _emit(out, args, "equal" if same else "distinct", {"equal": same})
    return 0 if same else 1


def _cmd_tau(args, out) -> int:
    t = tau_of_word(_word(args.word, args.n))
    _emit(out, args, str(t), {"map": {str(k): v for k, v in t.as_dict().items()}})
    return 0


def _cmd_abelianize(args, out) -> int:
    _flavor(args, "sphere-mcg", ("sphere-mcg",))
    a = abelianize(_word(args.word, args.n))
    _emit(out, args, str(a), a.to_json())
    return 0


def _cmd_brunnian(args, out) -> int:
    e = normalize(_word(args.word, args.n), _flavor(args, "disc"))
    verdicts = [is_brunnian(e, i) for i in range(1, args.n + 1)]
    lines = [f"{i}: {str(v).lower()}" for i, v in enumerate(verdicts, 1)]
    lines.append(f"all: {str(all(verdicts)).lower()}")
    _emit(out, args, "\n".join(lines), {"per_strand": verdicts, "all": all(verdicts)})
    return 0


def _cmd_center(args, out) -> int:
    e = normalize(_word(args.word, args.n), _flavor(args, "sphere-mcg", ("sphere-mcg",)))
    verdict = in_center(e)
    _emit(out, args, str(verdict).lower(), {"central": verdict})
    return 0


def _cmd_table(args, out) -> int:
    if args.symmetric:
        if not 0 <= args.n <= 5:
            raise CliError("symmetric inverse tables are limited to n <= 5")
        t = symmetric_inverse_table(args.n)
    else:
        _flavor(args, "sphere-mcg", ("sphere-mcg",))
        t = enumerate_im0n(args.n)
    _emit(out, args, "\n".join([f"# {len(t)} elements"] + t.legend() + t.lines()), t.to_json())
    return 0


def _cmd_enumerate(args, out) -> int:
    flavor = _flavor(args, "sphere-mcg", ("sphere-braid", "sphere-mcg"))
    en = enumerate_sphere(args.n, flavor)
    lines = [f"# {en.count} elements"] + en.table.legend() + en.table.lines()
    payload = {"count": en.count, "elements": [e.to_json() for e in en.elements], "table": en.table.to_json()}
    _emit(out, args, "\n".join(lines), payload)
    return 0


def _cmd_relcheck(args, out) -> int:
    flavor = args.flavor or "disc"
    flavor = _RELCHECK_DEFAULTS.get(flavor, flavor)
    if flavor not in RELATION_FLAVORS:
        raise CliError(f"unknown relation flavor {flavor!r}")
    rels = relations(flavor, args.n)
    eq = equality_engine(flavor)
    report = check_relations(rels, eq)
    rng = random.Random(args.seed)
    # the same relations inside random contexts, reached by random relation moves
    contextual = 0
    for rel in rels:
        u = random_word(args.n, 3, rng)
        v = random_word(args.n, 3, rng)
        if not eq(u + rel.lhs + v, perturb(u + rel.rhs + v, rels, rng)):
            contextual += 1
    lines = [f"{'PASS' if ok else 'FAIL'} {rel.label}: {_text(rel.lhs)} = {_text(rel.rhs)}" for rel, ok in report.results]
    failed = len(report.failures()) + contextual
    lines.append(f"{flavor} n={args.n}: {len(rels) - len(report.failures())}/{len(rels)} relations hold, "
                 f"{contextual} contextual failures (seed {args.seed})")
    payload = {
        "flavor": flavor,
        "n": args.n,
        "results": [{"label": rel.label, "lhs": _text(rel.lhs), "rhs": _text(rel.rhs), "ok": ok} for rel, ok in report.results],
        "contextual_failures": contextual,
        "seed": args.seed,
    }
    _emit(out, args, "\n".join(lines), payload)
    return 0 if failed == 0 else 1


_COMMANDS = {
    "reduce": _cmd_reduce,
    "equal": _cmd_equal,
    "tau": _cmd_tau,
    "abelianize": _cmd_abelianize,
    "brunnian": _cmd_brunnian,
    "center": _cmd_center,
    "table": _cmd_table,
    "enumerate": _cmd_enumerate,
    "relcheck": _cmd_relcheck,
}


def run(argv: Sequence[str] | None = None, out: TextIO | None = None, err: TextIO | None = None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    try:
        args = _parser().parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0) if exc.code in (0, None) else 2
    if args.n < 0:
        err.write("error: rank must be non-negative\n")
        return 2
    try:
        return _COMMANDS[args.command](args, out)
    except (WordError, CliError, ValueError) as exc:
        err.write(f"error: {exc}\n")
        return 2


def main() -> None:
    sys.exit(run())
