"""Command-line driver: experiment tables, matrix build/apply, and the quadrature reference."""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

from . import experiments as ex
from .core import apply, dlct_matrix
from .errors import DlctError
from .io import dump_matrix, export_matrix_csv, load_matrix, read_signal_csv, write_signal_csv
from .operators import Grid, Scheme
from .oracle import OracleCache, QuadratureConfig, continuous_lct, get_signal, sample
from .params import LctParams


def _add_params(p: argparse.ArgumentParser) -> None:
    grp = p.add_argument_group("transform (either --transform or all of --alpha/--beta/--gamma)")
    grp.add_argument("--transform", choices=list(ex.TRANSFORMS))
    grp.add_argument("--alpha", type=float)
    grp.add_argument("--beta", type=float)
    grp.add_argument("--gamma", type=float)


def _params(args, required: bool = True) -> LctParams | None:
    triplet = (args.alpha, args.beta, args.gamma)
    if args.transform and any(v is not None for v in triplet):
        raise DlctError("give either --transform or --alpha/--beta/--gamma, not both")
    if args.transform:
        return ex.get_transform(args.transform)
    if all(v is not None for v in triplet):
        return LctParams(*triplet)
    if any(v is not None for v in triplet):
        raise DlctError("--alpha, --beta and --gamma must be given together")
    if required:
        raise DlctError("no transform given: use --transform or --alpha/--beta/--gamma")
    return None


def _add_grid(p: argparse.ArgumentParser, multi: bool = False) -> None:
    if multi:
        p.add_argument("--n", type=int, nargs="+", default=list(ex.SIZES))
        p.add_argument("--scheme", choices=[s.value for s in Scheme], nargs="+", default=None)
    else:
        p.add_argument("--n", type=int, required=True)
        p.add_argument("--scheme", choices=[s.value for s in Scheme], default=Scheme.ORDINARY.value)


def _add_quadrature(p: argparse.ArgumentParser) -> None:
    p.add_argument("--oversampling", type=int, default=16)
    p.add_argument("--padding", type=float, default=3.0)
    p.add_argument("--rule", choices=["simpson", "trapezoid"], default="simpson")
    p.add_argument("--cache-dir", type=Path, default=None, help="reuse reference results from this directory")


def _quadrature(args) -> QuadratureConfig:
    return QuadratureConfig(args.oversampling, args.padding, args.rule)


def _spec(args, default_schemes) -> ex.ExperimentSpec:
    return ex.ExperimentSpec(
        signals=args.signal,
        transforms=getattr(args, "transform", None) or list(ex.TRANSFORMS),
        sizes=args.n,
        schemes=args.scheme or default_schemes,
        quadrature=_quadrature(args) if hasattr(args, "oversampling") else QuadratureConfig(),
        cache_dir=getattr(args, "cache_dir", None),
    )


def _emit(text: str, out: Path | None) -> None:
    if out is None:
        sys.stdout.write(text)
    else:
        out.write_text(text)


def cmd_table1(args) -> None:
    spec = _spec(args, [s.value for s in Scheme])
    _emit(ex.write_rows(ex.table1(spec)), args.out)


def cmd_table2(args) -> None:
    spec = _spec(args, [Scheme.ORDINARY.value])
    _emit(ex.write_rows(ex.table2(spec)), args.out)


def cmd_figure_data(args) -> None:
    spec = _spec(args, [Scheme.ORDINARY.value])
    pairs = [p for p in ex.FIGURE_PAIRS if p[0] in args.signal]
    _emit(ex.write_rows(ex.figure_data(spec, pairs)), args.out)


def cmd_build(args) -> None:
    g = Grid(args.n, Scheme(args.scheme))
    C = dlct_matrix(g, _params(args))
    dump_matrix(C.matrix, args.out)
    if args.csv is not None:
        export_matrix_csv(C.matrix, args.csv)


def cmd_apply(args) -> None:
    p = _params(args, required=args.matrix is None)
    if args.matrix is not None and p is not None:
        raise DlctError("give either --matrix or transform parameters, not both")
    if args.matrix is not None:
        matrix = load_matrix(args.matrix)
        x = read_signal_csv(args.input, matrix.grid.scheme)
    else:
        x = read_signal_csv(args.input, args.scheme)
        matrix = dlct_matrix(x.grid, p)
    _output_signal(apply(matrix, x), args.out)


def cmd_oracle(args) -> None:
    g = Grid(args.n, Scheme(args.scheme))
    p = _params(args)
    cfg = _quadrature(args)
    if args.cache_dir is not None:
        y = OracleCache(args.cache_dir).get_or_compute(args.signal, p, g, cfg)
    else:
        y = continuous_lct(p, get_signal(args.signal), g, cfg)
    _output_signal(y, args.out)


def cmd_sample(args) -> None:
    g = Grid(args.n, Scheme(args.scheme))
    _output_signal(sample(get_signal(args.signal), g), args.out)


def _output_signal(y, out: Path | None) -> None:
    write_signal_csv(sys.stdout if out is None else out, y)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="dlct", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True)
    signals = list(ex.SIGNAL_IDS)

    p = sub.add_parser("table1", help="DLCT vs quadrature reference, percentage MSE")
    p.add_argument("--signal", choices=signals, nargs="+", default=signals)
    p.add_argument("--transform", choices=list(ex.TRANSFORMS), nargs="+", default=list(ex.TRANSFORMS))
    _add_grid(p, multi=True)
    _add_quadrature(p)
    p.add_argument("--out", type=Path)
    p.set_defaults(func=cmd_table1)

    p = sub.add_parser("table2", help="concatenation and inverse-pair errors (ordinary scheme)")
    p.add_argument("--signal", choices=signals, nargs="+", default=signals)
    p.add_argument("--n", type=int, nargs="+", default=list(ex.SIZES))
    p.add_argument("--out", type=Path)
    p.set_defaults(func=cmd_table2, scheme=None)

    p = sub.add_parser("figure-data", help="per-sample DLCT and reference values (F1/T1 .. F4/T4)")
    p.add_argument("--signal", choices=signals, nargs="+", default=signals)
    p.add_argument("--n", type=int, nargs="+", default=[256])
    p.add_argument("--scheme", choices=[s.value for s in Scheme], nargs="+", default=None)
    _add_quadrature(p)
    p.add_argument("--out", type=Path)
    p.set_defaults(func=cmd_figure_data)

    p = sub.add_parser("build", help="build a DLCT matrix and write it in binary form")
    _add_params(p)
    _add_grid(p)
    p.add_argument("--out", type=Path, required=True)
    p.add_argument("--csv", type=Path, help="also export the matrix as re,im CSV")
    p.set_defaults(func=cmd_build)

    p = sub.add_parser("apply", help="apply a saved matrix, or one built from parameters, to a signal CSV")
    p.add_argument("--matrix", type=Path)
    _add_params(p)
    p.add_argument("--scheme", choices=[s.value for s in Scheme], default=None)
    p.add_argument("--input", type=Path, required=True)
    p.add_argument("--out", type=Path)
    p.set_defaults(func=cmd_apply)

    p = sub.add_parser("oracle", help="quadrature reference of an analytic signal")
    p.add_argument("--signal", choices=signals, required=True)
    _add_params(p)
    _add_grid(p)
    _add_quadrature(p)
    p.add_argument("--out", type=Path)
    p.set_defaults(func=cmd_oracle)

    p = sub.add_parser("sample", help="sample an analytic signal on a grid")
    p.add_argument("--signal", choices=signals, required=True)
    _add_grid(p)
    p.add_argument("--out", type=Path)
    p.set_defaults(func=cmd_sample)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        args.func(args)
    except (DlctError, OSError, ValueError) as exc:
        print(f"dlct: error: {exc}", file=sys.stderr)
        return 1
    return 0


if __name__ == "__main__":
    sys.exit(main())
