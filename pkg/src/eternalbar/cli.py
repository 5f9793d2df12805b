"""Command-line front end.

Exit status is 0 on success, 1 when a verification fails and 2 on malformed
input. Diagnostics go to stderr as ``file:line:col: message`` for JSON syntax
errors and ``file: field: message`` for structural ones.
"""
from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from .complex import Chain, FilteredComplex, optimal_representative, verify_complex
from .errors import EternalbarError, MalformedInput, NotACycle, ResolutionTooCoarse, ZeroClass
from .exponents import format_exponent
from .persistence import (Barcode, ColimitClass, Presentation, barcode, colim_basis, eternal_subspace,
                          is_eternal, render, rfh_rank)
from .spectral import PersistenceAlgebra, spectral_invariant, verify_algebra
from .torus import class_spectral, oscillation_exact, parse_class, parse_hamiltonian, spectrum

EXIT_OK, EXIT_FAIL, EXIT_INPUT = 0, 1, 2


class InputError(Exception):
    """Malformed input, already phrased as a diagnostic line."""


def _load_json(path: str):
    try:
        text = Path(path).read_text()
    except OSError as exc:
        raise InputError(f"{path}: cannot read: {exc.strerror}") from exc
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise InputError(f"{path}:{exc.lineno}:{exc.colno}: {exc.msg}") from exc


def _diagnostic(path: str, exc: Exception) -> InputError:
    where = getattr(exc, "path", None)
    return InputError(f"{path}: {where}: {exc}" if where else f"{path}: {exc}")


def _load_barcode(path: str) -> Barcode:
    doc = _load_json(path)
    try:
        if isinstance(doc, dict) and "generators" in doc:
            return barcode(Presentation.from_json(doc))
        return Barcode.from_json(doc)
    except MalformedInput as exc:
        raise _diagnostic(path, exc) from exc


def _fmt(x, decimal):
    return format_exponent(x, decimal)


def _emit(args, text: str, payload) -> None:
    if args.json:
        print(json.dumps(payload, indent=2, sort_keys=True))
    else:
        print(text)


# -- commands ----------------------------------------------------------------

def cmd_barcode(args) -> int:
    b = _load_barcode(args.file)
    full = eternal_subspace(b)
    half = [i for i in colim_basis(b) if b.bars[i].is_half]
    finite = len(b) - len(colim_basis(b))
    summary = (f"bars={len(b)} full={len(full)} half={len(half)} finite={finite} "
               f"eternal_dim={len(full)} rfh_rank={rfh_rank(b)}")
    if args.render:
        print(render(b))
        print(summary)
        return EXIT_OK
    doc = b.to_json(args.decimal)
    doc.update({"colim_basis": colim_basis(b), "eternal": full, "rfh_rank": rfh_rank(b)})
    print(json.dumps(doc, indent=2, sort_keys=True))
    return EXIT_OK


def _parse_indices(spec: str) -> list[int]:
    try:
        return [int(x) for x in spec.replace(" ", "").split(",") if x]
    except ValueError as exc:
        raise InputError(f"--class: expected comma-separated bar indices, got {spec!r}") from exc


def cmd_spectral(args) -> int:
    b = _load_barcode(args.file)
    zeta = ColimitClass(_parse_indices(args.cls))
    try:
        c = spectral_invariant(b, zeta)
        eternal = is_eternal(b, zeta)
    except (ZeroClass, ValueError) as exc:
        raise InputError(f"{args.file}: --class: {exc}") from exc
    text = f"c={_fmt(c, args.decimal)} eternal={'true' if eternal else 'false'}"
    _emit(args, text, {"c": _fmt(c, args.decimal), "eternal": eternal, "class": sorted(zeta.bars)})
    return EXIT_OK


def cmd_complex(args) -> int:
    doc = _load_json(args.file)
    try:
        c = FilteredComplex.from_json(doc)
    except MalformedInput as exc:
        raise _diagnostic(args.file, exc) from exc
    rep = verify_complex(c)
    if not rep:
        print(f"{args.file}: {rep.line()} witness={rep.witness}", file=sys.stderr)
        return EXIT_FAIL
    try:
        h = Chain.parse(args.min_filtration)
        unknown = [g for g in h if g not in c.ids()]
    except (ValueError, ZeroDivisionError) as exc:
        raise InputError(f"--min-filtration: {exc}") from exc
    if unknown:
        raise InputError(f"--min-filtration: unknown generators {', '.join(unknown)}")
    try:
        level, best = optimal_representative(c, h)
    except NotACycle as exc:
        raise InputError(f"--min-filtration: {exc}") from exc
    except ZeroClass:
        _emit(args, "level=-inf zero_class=true", {"level": "-inf", "zero_class": True})
        return EXIT_OK
    rep_text = ",".join(f"{g}:{e}" for g, coef in best.items() for e in coef)
    _emit(args, f"level={_fmt(level, args.decimal)} representative={rep_text}",
          {"level": _fmt(level, args.decimal), "representative": best.to_json(), "zero_class": False})
    return EXIT_OK


def _parse_classes(spec: str, n: int) -> list[tuple[int, ...]]:
    parts = [p for p in spec.replace(" ", "").split(";") if p]
    try:
        if n == 1 and len(parts) == 1:
            return [(int(x),) for x in parts[0].split(",") if x]
        classes = [parse_class(p) for p in parts]
    except ValueError as exc:
        raise InputError(f"--classes: expected integers, got {spec!r}") from exc
    for k in classes:
        if len(k) != n:
            raise InputError(f"--classes: class {k} does not match dimension {n}")
    return classes


def cmd_torus(args) -> int:
    try:
        h = parse_hamiltonian(args.ham, Path.cwd())
    except MalformedInput as exc:
        raise _diagnostic(args.ham, exc) from exc
    except OSError as exc:
        raise InputError(f"{args.ham}: cannot read: {exc.strerror}") from exc
    classes = _parse_classes(args.classes, h.dimension)
    gamma = oscillation_exact(h) if args.gamma else None
    lines, rows = [], []
    for k in classes:
        c = class_spectral(h, k)
        row = {"k": list(k), "c": _fmt(c, args.decimal)}
        parts = [] if len(classes) == 1 else [f"k={','.join(map(str, k))}"]
        parts.append(f"c={row['c']}")
        if args.spectrum:
            try:
                spec = spectrum(h, k)
            except ResolutionTooCoarse as exc:
                print(f"{args.ham}: k={k}: {exc}", file=sys.stderr)
                return EXIT_FAIL
            row["spectrum"] = [_fmt(v, args.decimal) for v in spec]
            parts.append("spectrum=" + ",".join(row["spectrum"]))
        if gamma is not None:
            row["gamma"] = _fmt(gamma, args.decimal)
            parts.append(f"gamma={row['gamma']}")
        rows.append(row)
        lines.append(" ".join(parts))
    _emit(args, "\n".join(lines), rows)
    return EXIT_OK


def cmd_algebra_verify(args) -> int:
    doc = _load_json(args.file)
    try:
        algebra = PersistenceAlgebra.from_json(doc)
    except MalformedInput as exc:
        raise _diagnostic(args.file, exc) from exc
    reports = verify_algebra(algebra)
    ok = all(reports)
    if args.json:
        print(json.dumps([{"check": r.name, "ok": r.ok, "message": r.message} for r in reports], indent=2))
    else:
        for r in reports:
            print(r.line())
    return EXIT_OK if ok else EXIT_FAIL


def cmd_selftest(args) -> int:
    from .selftest import run_all

    reports = run_all(sys.stdout)
    return EXIT_OK if all(reports) else EXIT_FAIL


# -- entry point -----------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", help="emit JSON instead of key=value text")
    common.add_argument("--decimal", type=int, metavar="DIGITS", help="round numbers instead of printing exact values")

    parser = argparse.ArgumentParser(prog="eternalbar", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("barcode", parents=[common], help="barcode of a presentation or barcode document")
    p.add_argument("file")
    p.add_argument("--render", action="store_true", help="draw the bars as ASCII")
    p.set_defaults(func=cmd_barcode)

    p = sub.add_parser("spectral", parents=[common], help="spectral invariant of a colimit class")
    p.add_argument("file")
    p.add_argument("--class", dest="cls", required=True, metavar="INDICES", help="comma-separated bar indices")
    p.set_defaults(func=cmd_spectral)

    p = sub.add_parser("complex", parents=[common], help="minimal filtration level of a homology class")
    p.add_argument("file")
    p.add_argument("--min-filtration", required=True, metavar="CHAIN", help='cycle such as "x1:0,x2:3/2"')
    p.set_defaults(func=cmd_complex)

    p = sub.add_parser("torus", parents=[common], help="flat-torus model table")
    p.add_argument("--ham", required=True, metavar="SPEC", help="linear:a1,..,an | pl:FILE | samples:FILE")
    p.add_argument("--classes", required=True, metavar="LIST",
                   help="classes separated by ';' (in dimension 1 a comma list of integers also works)")
    p.add_argument("--spectrum", action="store_true", help="also print the critical values")
    p.add_argument("--gamma", action="store_true", help="also print the oscillation max H - min H")
    p.set_defaults(func=cmd_torus)

    for name in ("algebra-verify", "verify"):
        p = sub.add_parser(name, parents=[common], help="run every persistence-algebra verifier")
        p.add_argument("file")
        p.set_defaults(func=cmd_algebra_verify)

    p = sub.add_parser("selftest", parents=[common], help="run the acceptance properties")
    p.set_defaults(func=cmd_selftest)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except InputError as exc:
        print(f"eternalbar: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except EternalbarError as exc:
        print(f"eternalbar: {type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_INPUT if isinstance(exc, MalformedInput) else EXIT_FAIL


if __name__ == "__main__":
    sys.exit(main())
