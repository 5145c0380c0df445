"""Command line front end: ``homindex <command> [flags] FILE...``.

Exit codes
----------
0  success
1  internal error
2  usage error
3  germ file could not be parsed (syntax or semantic error)
4  precondition failure (wrong kind of germ, non-homogeneous input, ...)
5  the form (or function) does not have an isolated singularity
6  resource cap hit in a standard-basis computation
7  precision, stabilization or genericity budget exhausted
"""

import argparse
import json
import random
import sys
import time

from .curves import radial_index_curve, torsion_tau, START_PRECISION, MAX_PRECISION
from .dimension import alternating_euler
from .errors import HomIndexError, PreconditionError
from .germfile import corpus_names, load_germ
from .indices import (IndexReport, egz_index, generic_linear_form, graded_complex_series,
                      hom_index_curve, hom_index_graded, milnor_hypersurface, minimized_index,
                      nu_curve, nu_direct_curve)
from .orders import MonomialOrder

COMMANDS = ("egz", "hom", "radial", "nu", "hilbert", "milnor", "tau", "all")


def _order(text):
    try:
        return MonomialOrder.parse(text)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def build_parser():
    p = argparse.ArgumentParser(prog="homindex", description=__doc__.split("\n")[0],
                                formatter_class=argparse.RawDescriptionHelpFormatter,
                                epilog=__doc__.split("\n", 2)[2])
    p.add_argument("command", choices=COMMANDS)
    p.add_argument("files", nargs="+", metavar="FILE",
                   help="germ files, or corpus:NAME for a shipped germ (" + ", ".join(corpus_names()) + ")")
    p.add_argument("--seed", type=int, default=0, help="seed for generic linear forms (default 0)")
    p.add_argument("--order", type=_order, default="local",
                   help="monomial order for colength computations: degrevlex, lex, local, "
                        "wdegrevlex:w1,...,wN, wlocal:w1,...,wN (default local)")
    p.add_argument("--precision", type=int, default=START_PRECISION,
                   help="starting series precision for branch pullbacks (default 16, doubled up to 256)")
    p.add_argument("--bound", type=int, default=12,
                   help="largest truncation degree for tau and Omega^1/dO (default 12)")
    p.add_argument("--radial", type=int, default=None,
                   help="user-supplied radial index for germs of dimension > 1")
    p.add_argument("--minimize", action="store_true",
                   help="also report the least index over 7 seeded perturbations omega + d(l) (heuristic)")
    p.add_argument("--module", type=int, default=None,
                   help="hilbert: only the series of Omega^p for this p")
    p.add_argument("--prefix", type=int, default=10, help="hilbert: number of series coefficients (default 10)")
    p.add_argument("--timing", action="store_true",
                   help="add wall-clock seconds to the report (breaks byte-identical output)")
    return p


def _series_json(result):
    return {"numerator": [str(c) for c in result.series.num],
            "denominator": [str(c) for c in result.series.den],
            "prefix": result.prefix}


class _Context:
    def __init__(self, path, args):
        self.germ, self.file_form, self.param = load_germ(path)
        self.args = args
        self.order = args.order
        if self.order.weights and len(self.order.weights) != self.germ.nvars:
            raise PreconditionError(f"--order {self.order} has {len(self.order.weights)} weights, "
                                    f"the ring has {self.germ.nvars} variables")
        self.report = IndexReport(self.germ.name, seed=args.seed)
        self.rng = random.Random(args.seed)
        self._form = None

    @property
    def form(self):
        if self._form is None:
            if self.file_form is not None:
                self._form = self.file_form
                self.report.form = str(self.file_form)
            else:
                self._form = generic_linear_form(self.germ.ring, self.rng, self.param)
                self.report.form = f"generic d(l), seed {self.args.seed}: {self._form}"
        return self._form

    def is_curve(self):
        return self.germ.dim == 1 and self.germ.reduced

    def need_param(self):
        if self.param is None:
            raise PreconditionError(f"{self.germ.name} has no [param] section")
        return self.param

    def minimize(self, key, fn):
        if self.args.minimize:
            value = minimized_index(fn, self.form, self.germ.ring, seed=self.args.seed)
            self.report.extra.setdefault("minimized", {})[key] = value
            self.report.extra["minimized"]["heuristic"] = True
            self.report.extra["minimized"]["draws"] = 7


def _egz(ctx):
    r = ctx.report
    r.egz = egz_index(ctx.germ, ctx.form, ctx.order)
    r.routes["egz"] = f"minors ideal colength, order {ctx.order}"
    ctx.minimize("egz", lambda f: egz_index(ctx.germ, f, ctx.order))


def _hom(ctx):
    r = ctx.report
    if ctx.is_curve():
        r.hom = hom_index_curve(ctx.germ, ctx.form, ctx.order)
        r.routes["hom"] = "curve: dim Omega^1/(omega O), h0 = 0 for reduced curves"
        ctx.minimize("hom", lambda f: hom_index_curve(ctx.germ, f, ctx.order))
    elif ctx.germ.weights is not None:
        series = _hilbert_series(ctx)
        r.hom = hom_index_graded(ctx.germ, ctx.form, series)
        r.routes["hom"] = "graded: alternating Poincare series at t = 1"
    else:
        raise PreconditionError("homological index needs a reduced curve or a weighted-homogeneous germ")


def _hilbert_series(ctx):
    if "_series" not in ctx.__dict__:
        ctx._series = graded_complex_series(ctx.germ, ctx.args.prefix)
    return ctx._series


def _radial(ctx):
    r = ctx.report
    if ctx.param is not None:
        r.radial = radial_index_curve(ctx.form, ctx.param, ctx.args.precision, MAX_PRECISION)
        r.routes["radial"] = "branch pullback orders: sum m_i + (r - 1)"
    elif ctx.args.radial is not None:
        r.radial = ctx.args.radial
        r.routes["radial"] = "user-supplied radial"
    else:
        raise PreconditionError("radial index needs a [param] section or --radial")


def _nu(ctx):
    r = ctx.report
    if ctx.param is not None and ctx.is_curve():
        r.nu = nu_curve(ctx.germ, ctx.param, seed=ctx.args.seed)
        r.routes["nu"] = "hom - radial for two seeded generic d(l)"
        r.extra["nu_direct"] = nu_direct_curve(ctx.germ, ctx.args.bound)
        r.routes["nu_direct"] = "dim Omega^1/dO by truncated linear algebra"
    elif ctx.args.radial is not None:
        if r.hom is None:
            _hom(ctx)
        if r.radial is None:
            _radial(ctx)
        r.nu = r.hom - ctx.args.radial
        r.routes["nu"] = "hom - user-supplied radial"
    else:
        raise PreconditionError("nu needs a parametrized curve or --radial")


def _hilbert(ctx):
    series = _hilbert_series(ctx)
    wanted = range(len(series)) if ctx.args.module is None else [ctx.args.module]
    out = {}
    for p in wanted:
        if not 0 <= p < len(series):
            raise PreconditionError(f"module index {p} out of range 0..{len(series) - 1}")
        out[f"Omega^{p}"] = _series_json(series[p])
    ctx.report.extra["poincare"] = out
    if ctx.args.module is None:
        n = ctx.germ.dim
        ctx.report.extra["euler_wedge_at_1"] = alternating_euler(series)
        ctx.report.extra["euler_de_rham_at_1"] = alternating_euler(series, list(range(n + 1)))
    ctx.report.routes["poincare"] = "Hilbert series of the leading module, weighted degrevlex TOP order"


def _milnor(ctx):
    if len(ctx.germ.equations) != 1:
        raise PreconditionError("the Milnor oracle needs a hypersurface (one equation)")
    ctx.report.milnor_oracle = milnor_hypersurface(ctx.germ.equations[0], ctx.order)
    ctx.report.routes["milnor_oracle"] = "Jacobian ideal colength"


def _tau(ctx):
    ctx.report.tau = torsion_tau(ctx.germ, ctx.need_param(), ctx.args.bound)
    ctx.report.routes["tau"] = "torsion of Omega^1 by truncated linear algebra"


def _all(ctx):
    g = ctx.germ
    if g.icis:
        _egz(ctx)
    if ctx.is_curve() or g.weights is not None:
        _hom(ctx)
    if ctx.param is not None or ctx.args.radial is not None:
        _radial(ctx)
    if (ctx.param is not None and ctx.is_curve()) or ctx.args.radial is not None:
        _nu(ctx)
    if len(g.equations) == 1:
        _milnor(ctx)
    if ctx.param is not None and ctx.is_curve():
        _tau(ctx)
    if g.weights is not None and g.dim > 1:
        _hilbert(ctx)


HANDLERS = {"egz": _egz, "hom": _hom, "radial": _radial, "nu": _nu, "hilbert": _hilbert,
            "milnor": _milnor, "tau": _tau, "all": _all}


def run(command, args, path):
    """Run one command on one germ file and return the report dictionary."""
    start = time.perf_counter()
    ctx = _Context(path, args)
    HANDLERS[command](ctx)
    out = {"command": command, "order": str(ctx.order), **ctx.report.to_dict()}
    if args.timing:
        out["timing_seconds"] = round(time.perf_counter() - start, 4)
    return out


def main(argv=None):
    args = build_parser().parse_args(argv)
    reports = []
    for path in args.files:
        try:
            reports.append(run(args.command, args, path))
        except HomIndexError as exc:
            print(f"homindex: {path}: {exc}", file=sys.stderr)
            return exc.exit_code
        except OSError as exc:
            print(f"homindex: {exc}", file=sys.stderr)
            return 3
    payload = reports[0] if len(reports) == 1 else reports
    print(json.dumps(payload, indent=2))
    return 0


if __name__ == "__main__":
    sys.exit(main())
