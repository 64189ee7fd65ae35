"""Command-line front end.

Exit codes: 0 certified (or success), 1 inconclusive, 2 refuted or invalid
input, 3 parse error.  ``search`` uses 0 found, 1 iteration cap, 2 exhausted.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from .certificate import CertificateError, dump_certificate, load_certificate
from .corpus import (FAMILIES, FamilyError, default_sweep, dump_manifest, format_report,
                     load_manifest, parse_range, run_corpus)
from .dsl import ParseError, format_equation, format_presentation, is_presentation_text, parse_equation, \
    parse_presentation
from .rewrite import Presentation, SubstitutionError, SubstitutionPattern, substitute
from .search import OutcomeKind, search
from .stargraph import build_star_graph, to_dot
from .verifier import Overall, VerificationReport, WeightError, fmt_q, verify
from .words import EnvError, ShapeError

EXIT_OK, EXIT_INCONCLUSIVE, EXIT_INVALID, EXIT_PARSE = 0, 1, 2, 3


class UsageError(Exception):
    pass


def _read(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    try:
        return Path(path).read_text(encoding="utf-8")
    except OSError as e:
        raise UsageError(f"cannot read {path}: {e.strerror}") from None


def _write(path: str | None, text: str) -> None:
    if path is None or path == "-":
        sys.stdout.write(text)
    else:
        Path(path).write_text(text, encoding="utf-8")


def _load_presentation(args) -> tuple[Presentation, str | None, str | None]:
    """Equation files need ``--subst``; presentation files are taken as they are."""
    text = _read(args.input)
    if is_presentation_text(text):
        if args.subst:
            raise UsageError("--subst applies to equation files, not presentations")
        return parse_presentation(text), None, None
    eq = parse_equation(text, forbid_negative_blocks=args.forbid_negative_blocks)
    if not args.subst:
        raise UsageError("an equation file needs --subst a:g:b:x")
    pattern = SubstitutionPattern.parse(args.subst)
    return substitute(eq, pattern), format_equation(eq), str(pattern)


def format_verification(rep: VerificationReport) -> str:
    lines = [f"overall: {rep.overall.value}", f"stage: {rep.stage}",
             f"orientable: {'yes' if rep.orientable else 'no'}",
             "W3: " + ("pass" if not rep.w3_negative else f"fail on {rep.w3_negative}")]
    for r in rep.w1:
        lines.append(f"W1 relator {r.relator}: {r.variables} variable letters, "
                     f"sum of (1 - theta) = {fmt_q(r.slack_sum)} {'pass' if r.passed else 'fail'}")
    if rep.w2 is not None:
        lines.append(f"W2: {rep.w2.verdict.value}")
        for w in rep.w2.witnesses:
            walk = " ".join(f"{e[0]}.{e[1]}{'+' if d > 0 else '-'}" for e, d in w.walk)
            lines.append(f"  witness [{walk}] weight {fmt_q(w.weight)} label {w.label or '1'} "
                         f"({w.label_class.kind.value}): {w.reason}")
        lines.extend(f"  note: {n}" for n in rep.w2.notes)
    lines.append(f"result: {rep.summary()}")
    return "\n".join(lines) + "\n"


def _verdict_code(rep: VerificationReport) -> int:
    return {Overall.CERTIFIED: EXIT_OK, Overall.INCONCLUSIVE: EXIT_INCONCLUSIVE,
            Overall.REFUTED: EXIT_INVALID}[rep.overall]


# -- subcommands ---------------------------------------------------------------

def cmd_parse(args) -> int:
    text = _read(args.input)
    if is_presentation_text(text):
        _write(args.output, format_presentation(parse_presentation(text)))
    else:
        _write(args.output, format_equation(parse_equation(text, forbid_negative_blocks=args.forbid_negative_blocks)))
    return EXIT_OK


def cmd_substitute(args) -> int:
    if not args.subst:
        raise UsageError("substitute needs --subst a:g:b:x")
    p, _, _ = _load_presentation(args)
    _write(args.output, format_presentation(p))
    return EXIT_OK


def cmd_render(args) -> int:
    weights = None
    if args.certificate:
        cert = load_certificate(_read(args.certificate))
        p, weights = cert.presentation, cert.weights
    else:
        p, _, _ = _load_presentation(args)
    _write(args.output, to_dot(build_star_graph(p), weights))
    return EXIT_OK


def cmd_verify(args) -> int:
    cert = load_certificate(_read(args.certificate))
    g = build_star_graph(cert.presentation)
    rep = verify(cert.presentation, cert.weights, g=g)
    if args.json:
        _write(args.output, json.dumps(rep.to_dict(), indent=2, sort_keys=True) + "\n")
    else:
        _write(args.output, format_verification(rep))
    if args.dot:
        _write(args.dot, to_dot(g, cert.weights))
    return _verdict_code(rep)


def cmd_search(args) -> int:
    p, eq_text, subst = _load_presentation(args)
    out = search(p, strategy=args.strategy, cap=args.cap)
    if not out.found:
        print(f"search ({args.strategy}): {out.kind.value} after {out.iterations} iterations", file=sys.stderr)
        return EXIT_INCONCLUSIVE if out.kind is OutcomeKind.CAP else EXIT_INVALID
    cert = dump_certificate(p, out.weights, out.report, equation=eq_text, substitution=subst)
    _write(args.emit_certificate, cert)
    if args.emit_certificate and args.emit_certificate != "-":
        print(f"found by {out.strategy} after {out.iterations} iterations; certificate written to "
              f"{args.emit_certificate}")
    if args.dot:
        _write(args.dot, to_dot(build_star_graph(p), out.weights))
    return EXIT_OK


def _corpus_items(args) -> list[tuple[str, dict]]:
    if args.manifest:
        return load_manifest(args.manifest)
    families = args.family or list(FAMILIES)
    ranged = {k: getattr(args, k) for k in ("n", "i", "j") if getattr(args, k) is not None}
    if not ranged:
        return default_sweep(families)
    items: list[tuple[str, dict]] = []
    for fam in families:
        if fam not in ("L1", "L3"):
            raise UsageError(f"--n/--i/--j apply to L1 and L3; use a manifest for {fam}")
        for n in parse_range(args.n) if args.n else range(4 if fam == "L1" else 6, 11 if fam == "L1" else 9):
            i_vals = parse_range(args.i) if args.i else range(3, n)
            for i in i_vals:
                if fam == "L1":
                    items.append(("L1", {"n": n, "i": i}))
                    continue
                for j in (parse_range(args.j) if args.j else range(i + 2, n)):
                    items.append(("L3", {"n": n, "i": i, "j": j}))
    return items


def cmd_corpus(args) -> int:
    items = _corpus_items(args)
    if args.write_manifest:
        _write(args.write_manifest, dump_manifest(items))
    rows = run_corpus(items, strategy=args.strategy, cap=args.cap, do_search=not args.no_search)
    _write(args.output, format_report(rows, timing=args.timing))
    return EXIT_OK if all(r.ok for r in rows) else EXIT_INCONCLUSIVE


# -- argument parsing ------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="weighttest", description="Weight-test certificates for equations "
                                 "over torsion-free groups.")
    sub = ap.add_subparsers(dest="command", required=True)

    def source(p: argparse.ArgumentParser, subst: bool = True) -> None:
        p.add_argument("input", help="equation or presentation file ('-' for stdin)")
        if subst:
            p.add_argument("--subst", metavar="a:g:b:x", help="substitution t^a g t^b -> x")
        p.add_argument("--forbid-negative-blocks", action=argparse.BooleanOptionalAction, default=True,
                       help="reject t^-1 g t^-1 blocks (default on)")

    p = sub.add_parser("parse", help="echo the canonical form of an equation or presentation")
    source(p, subst=False)
    p.add_argument("-o", "--output")
    p.set_defaults(func=cmd_parse)

    p = sub.add_parser("substitute", help="write the presentation obtained by a substitution")
    source(p)
    p.add_argument("-o", "--output")
    p.set_defaults(func=cmd_substitute)

    p = sub.add_parser("render", help="write the star graph as DOT")
    p.add_argument("input", nargs="?", help="equation or presentation file")
    p.add_argument("--subst", metavar="a:g:b:x")
    p.add_argument("--forbid-negative-blocks", action=argparse.BooleanOptionalAction, default=True)
    p.add_argument("--certificate", help="render the graph of a certificate, with its weights")
    p.add_argument("-o", "--output")
    p.set_defaults(func=cmd_render)

    p = sub.add_parser("verify", help="check a certificate file")
    p.add_argument("certificate")
    p.add_argument("--json", action="store_true", help="machine-readable report")
    p.add_argument("--dot", metavar="PATH", help="also write the weighted star graph")
    p.add_argument("-o", "--output")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("search", help="look for a certifying weight function")
    source(p)
    p.add_argument("--strategy", choices=("auto", "binary", "lp"), default="auto")
    p.add_argument("--cap", type=int, default=100, help="LP iteration cap")
    p.add_argument("--emit-certificate", metavar="PATH", default="-")
    p.add_argument("--dot", metavar="PATH")
    p.set_defaults(func=cmd_search)

    p = sub.add_parser("corpus", help="run the parametric families")
    p.add_argument("--family", action="append", choices=FAMILIES)
    p.add_argument("--n", metavar="RANGE", help='e.g. "4..8"')
    p.add_argument("--i", metavar="RANGE")
    p.add_argument("--j", metavar="RANGE")
    p.add_argument("--manifest", help="JSON list of {family, params, expected}")
    p.add_argument("--write-manifest", metavar="PATH")
    p.add_argument("--strategy", choices=("auto", "binary", "lp"), default="auto")
    p.add_argument("--cap", type=int, default=100)
    p.add_argument("--no-search", action="store_true", help="only check the named assignments")
    p.add_argument("--timing", action="store_true", help="add a seconds column (breaks byte-identity)")
    p.add_argument("-o", "--output")
    p.set_defaults(func=cmd_corpus)
    return ap


def run_cli(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    if args.command == "render" and not (args.input or args.certificate):
        print("error: render needs an input file or --certificate", file=sys.stderr)
        return EXIT_INVALID
    try:
        return args.func(args)
    except (ParseError, ShapeError, EnvError) as e:
        print(f"parse error: {e}", file=sys.stderr)
        return EXIT_PARSE
    except (WeightError, CertificateError, SubstitutionError, FamilyError, UsageError, ValueError) as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_INVALID


def main() -> None:
    sys.exit(run_cli())


if __name__ == "__main__":
    main()
