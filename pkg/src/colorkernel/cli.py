"""Command-line front end.

    colorkernel gen --n 14 --k 5 --seed 7 -o inst.col
    colorkernel kernelize inst.col --q 3 -o kernel.col
    colorkernel verify inst.col kernel.col --q 3
    colorkernel palette --q 4 --field 3
    colorkernel selftest --q-range 3-4 --trials 200

Exit codes: 0 ok, 1 selftest failure, 2 bad input, 3 not a modulator,
4 oracle disagreement, 5 oracle size limit, 6 no palette exists.
"""

from __future__ import annotations

import argparse
import logging
import sys
from pathlib import Path

from .dimacs import (
    DimacsError,
    format_dimacs,
    format_modulator,
    read_dimacs,
    read_modulator,
    sidecar_path,
)
from .field import FieldError, PrimeField
from .generator import GenSpec, GenSpecError, generate_instance
from .kernelizer import KernelError, KernelInstance, NotAModulator, find_modulator, kernelize
from .oracle import SizeLimit, is_q_colorable
from .palette import FieldTooSmall, NoValidAlpha, PaletteError, make_palette, palette_exists, verify_palette
from .selftest import run_selftest

EXIT_OK = 0
EXIT_FAIL = 1
EXIT_INPUT = 2
EXIT_MODULATOR = 3
EXIT_DISAGREE = 4
EXIT_SIZE = 5
EXIT_NO_PALETTE = 6


def _err(msg: str) -> None:
    print(f"colorkernel: {msg}", file=sys.stderr)


def _field(p: int) -> PrimeField:
    return PrimeField(p)


def cmd_kernelize(args: argparse.Namespace) -> int:
    try:
        G = read_dimacs(args.graph)
        mod_path = Path(args.modulator) if args.modulator else sidecar_path(args.graph)
        if args.auto_modulator:
            search = find_modulator(G, limit=args.modulator_limit)
            X = search.X
            if not search.optimal:
                _err(f"modulator of size {len(X)} found greedily; it may not be minimum")
        else:
            if not mod_path.exists():
                _err(f"modulator file {mod_path} not found (use --auto-modulator to compute one)")
                return EXIT_INPUT
            X = read_modulator(mod_path, G.n)
        P = make_palette(args.q, _field(args.field), args.palette, args.alpha)
    except (DimacsError, FieldError, PaletteError, OSError) as exc:
        _err(str(exc))
        return EXIT_INPUT

    try:
        result = kernelize(KernelInstance(G, X, args.q), P)
    except NotAModulator as exc:
        _err(f"not a modulator: {exc}")
        return EXIT_MODULATOR
    except KernelError as exc:
        _err(str(exc))
        return EXIT_INPUT

    kernel, mapping = result.G_prime.relabeled()
    original_ids = " ".join(str(v + 1) for v in mapping)
    out = Path(args.output)
    out.write_text(format_dimacs(kernel, [
        f"kernel q={args.q} field=GF({args.field}) palette={args.palette}",
        f"original-ids {original_ids}",
    ]))
    sidecar_path(out).write_text(format_modulator(mapping[v] for v in result.X))
    for line in result.stats.as_lines():
        print(line)
    return EXIT_OK


def _decide(label: str, path: str, q: int, max_vertices: int) -> bool:
    G = read_dimacs(path)
    witness = is_q_colorable(G, q, max_vertices=max_vertices)
    print(f"{label} {path} n={G.n} m={G.m} colorable={'yes' if witness else 'no'}")
    if witness:
        print(f"{label}_witness " + " ".join(f"{v + 1}:{c + 1}" for v, c in witness.assignment.items()))
    return witness.colorable


def cmd_verify(args: argparse.Namespace) -> int:
    try:
        a = _decide("original", args.original, args.q, args.max_vertices)
        b = _decide("kernel", args.kernel, args.q, args.max_vertices)
    except (DimacsError, OSError) as exc:
        _err(str(exc))
        return EXIT_INPUT
    except SizeLimit as exc:
        _err(str(exc))
        return EXIT_SIZE
    if a != b:
        print("agree no")
        _err("colorability of the original and the kernel differ")
        return EXIT_DISAGREE
    print("agree yes")
    return EXIT_OK


def cmd_gen(args: argparse.Namespace) -> int:
    try:
        spec = GenSpec(args.n, args.k, args.q, args.p_xx, args.p_xr, args.m_frac, args.seed)
    except GenSpecError as exc:
        _err(str(exc))
        return EXIT_INPUT
    G, X = generate_instance(spec)
    out = Path(args.output)
    out.write_text(format_dimacs(G, [
        f"generated n={spec.n} k={spec.k} q={spec.q} p_xx={spec.p_xx} p_xr={spec.p_xr} "
        f"m_frac={spec.m_frac} seed={spec.seed}"
    ]))
    sidecar_path(out).write_text(format_modulator(X))
    return EXIT_OK


def cmd_palette(args: argparse.Namespace) -> int:
    try:
        F = _field(args.field)
    except FieldError as exc:
        _err(str(exc))
        return EXIT_INPUT
    if not palette_exists(args.q, F.p):
        _err(f"no q-palette exists for q={args.q} over GF({F.p})")
        return EXIT_NO_PALETTE
    try:
        P = make_palette(args.q, F, args.palette, args.alpha)
    except NoValidAlpha as exc:
        _err(f"no q-palette exists: {exc}")
        return EXIT_NO_PALETTE
    except (FieldTooSmall, PaletteError) as exc:
        _err(str(exc))
        return EXIT_INPUT
    report = verify_palette(P.columns, F)
    print(f"# {args.q}-palette over GF({F.p}), {P.construction} {list(P.params)}")
    print(P.format())
    print(report.format())
    return EXIT_OK if report.passed else EXIT_FAIL


def _q_range(text: str) -> tuple[int, ...]:
    try:
        if "-" in text:
            lo, hi = (int(t) for t in text.split("-", 1))
            qs = tuple(range(lo, hi + 1))
        else:
            qs = tuple(int(t) for t in text.split(","))
    except ValueError:
        raise argparse.ArgumentTypeError(f"bad q range {text!r}; use '3-4' or '3,4'") from None
    if not qs or min(qs) < 3:
        raise argparse.ArgumentTypeError("q values must be at least 3")
    return qs


def cmd_selftest(args: argparse.Namespace) -> int:
    results = run_selftest(args.q_range, args.trials, args.seed)
    width = max(len(r.name) for r in results)
    print(f"{'check'.ljust(width)}  cases  status")
    for r in results:
        print(f"{r.name.ljust(width)}  {r.cases:5d}  {'pass' if r.passed else 'FAIL'}")
        if args.verbose and r.detail:
            print(f"  {r.detail}")
    failed = [r for r in results if not r.passed]
    for r in failed:
        _err(f"{r.name}: {r.detail}")
        for blob in r.replay:
            sys.stderr.write(blob)
    if args.verbose:
        from .polyring import build_f
        from .palette import construct_palette

        P = construct_palette(3, PrimeField(3))
        print(f"f for q=3 over GF(3): {build_f(3, P, [0, 1, 2])}")
    return EXIT_FAIL if failed else EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="colorkernel",
        description="Polynomial-sparsification kernel for q-Coloring on matching+k-vertex graphs.",
    )
    parser.add_argument("--log-level", default="WARNING")
    sub = parser.add_subparsers(dest="command", required=True)

    def palette_flags(p: argparse.ArgumentParser) -> None:
        p.add_argument("--q", type=int, default=3)
        p.add_argument("--field", type=int, default=3, help="prime modulus (default 3)")
        p.add_argument("--palette", choices=("lemma2", "vandermonde"), default="lemma2")
        p.add_argument("--alpha", type=int, default=None, help="override the lemma2 alpha")

    p = sub.add_parser("kernelize", help="reduce an instance")
    p.add_argument("graph")
    p.add_argument("--modulator", help="sidecar file (default: <graph>.mod)")
    p.add_argument("--auto-modulator", action="store_true", help="compute a modulator instead of reading one")
    p.add_argument("--modulator-limit", type=int, default=8)
    p.add_argument("-o", "--output", required=True)
    palette_flags(p)
    p.set_defaults(func=cmd_kernelize)

    p = sub.add_parser("verify", help="compare colorability of two graphs")
    p.add_argument("original")
    p.add_argument("kernel")
    p.add_argument("--q", type=int, default=3)
    p.add_argument("--max-vertices", type=int, default=24)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("gen", help="generate a random instance")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--q", type=int, default=3)
    p.add_argument("--p-xx", type=float, default=0.5)
    p.add_argument("--p-xr", type=float, default=0.5)
    p.add_argument("--m-frac", type=float, default=0.5)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("-o", "--output", required=True)
    p.set_defaults(func=cmd_gen)

    p = sub.add_parser("palette", help="print and verify a palette")
    palette_flags(p)
    p.set_defaults(func=cmd_palette)

    p = sub.add_parser("selftest", help="run the built-in checks")
    p.add_argument("--q-range", type=_q_range, default=(3, 4))
    p.add_argument("--trials", type=int, default=200)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--verbose", action="store_true")
    p.set_defaults(func=cmd_selftest)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    logging.basicConfig(level=args.log_level.upper(), format="%(levelname)s %(name)s: %(message)s")
    return args.func(args)


if __name__ == "__main__":
    sys.exit(main())
