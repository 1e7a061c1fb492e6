"""Command-line front end.

Exit codes: 0 success, 1 mathematical error (structured JSON on stderr),
2 usage error.  ``--format`` chooses text, json or csv output; ``--json`` is
shorthand for ``--format json``.
"""
import argparse
import csv
import io
import json
import re
import sys
from fractions import Fraction

from . import __version__
from .errors import DunklError, NumericModeRequired, ParseError, UnknownType

USAGE_ERRORS = (ParseError, UnknownType)


# ---------------------------------------------------------------- helpers

def _system(args):
    from .roots import build_root_system

    return build_root_system(args.type, args.rank)


def _context(args, rs=None):
    from .calculus.context import DunklContext, MultiplicitySpec

    rs = rs or _system(args)
    return DunklContext(rs, MultiplicitySpec.parse(rs, args.kappa, tie=getattr(args, "tie", False)))


def _floats(text, what):
    try:
        return [float(s) for s in text.split(",") if s.strip()]
    except ValueError:
        raise ParseError(f"cannot read {what} {text!r} as comma-separated numbers") from None


def _ints(text, what):
    try:
        return [int(s) for s in text.split(",") if s.strip()]
    except ValueError:
        raise ParseError(f"cannot read {what} {text!r} as comma-separated integers") from None


def _rationals(text, what):
    try:
        return [Fraction(s.strip()) for s in text.split(",") if s.strip()]
    except ValueError:
        raise ParseError(f"cannot read {what} {text!r} as comma-separated rationals") from None


def _poly(text, dim):
    from .poly import Polynomial

    text = text.strip()
    if text.startswith("{"):
        p = Polynomial.from_json(text)
        if p.dim != dim:
            raise ParseError(f"polynomial has {p.dim} variables, context has {dim}")
        return p
    return Polynomial.parse(text, dim)


def _poly_out(p):
    return {"text": p.format(), "poly": p.to_json()}


def _flatten(obj, prefix=""):
    if isinstance(obj, dict):
        for k, v in obj.items():
            yield from _flatten(v, f"{prefix}.{k}" if prefix else str(k))
    elif isinstance(obj, list) and obj and all(isinstance(v, (dict, list)) for v in obj):
        for i, v in enumerate(obj):
            yield from _flatten(v, f"{prefix}[{i}]")
    else:
        yield prefix, obj if not isinstance(obj, list) else json.dumps(obj)


class Result:
    """What a subcommand produced: a JSON-able payload, text lines, optional table."""

    def __init__(self, payload, text=None, table=None, code=0):
        self.payload = payload
        self.text = text
        self.table = table
        self.code = code

    def render(self, fmt):
        if fmt == "json":
            return json.dumps(self.payload, indent=2, sort_keys=False)
        if fmt == "csv":
            buf = io.StringIO()
            w = csv.writer(buf, lineterminator="\n")
            if self.table is not None:
                header, rows = self.table
                w.writerow(header)
                w.writerows(rows)
            else:
                w.writerow(["key", "value"])
                w.writerows(_flatten(self.payload))
            return buf.getvalue().rstrip("\n")
        if self.text is not None:
            return self.text if isinstance(self.text, str) else "\n".join(self.text)
        return "\n".join(f"{k}: {v}" for k, v in _flatten(self.payload))


# ---------------------------------------------------------------- roots

def cmd_roots(args):
    from math import prod

    from .roots import degrees_and_checks, degrees_only, parse_type

    fam, n = parse_type(args.type, args.rank)
    try:
        rs = _system(args)
    except DunklError as e:
        if getattr(e, "code", "") != "irrational_coordinates":
            raise
        info = degrees_only(args.type, args.rank)
        info["note"] = str(e)
        return Result(info)
    degs = rs.degrees
    small = degs is None or prod(degs) <= args.enumerate_limit
    info = degrees_and_checks(rs, enumerate_group=small)
    out = {
        "type": rs.name,
        "dim": rs.dim,
        "rank": rs.rank,
        "degrees": info["degrees"],
        "order": info.get("order", info["order_from_degrees"]),
        "num_positive_roots": len(rs.positive),
        "classes": [{"index": i, "size": len(c)} for i, c in enumerate(rs.classes)],
        "simple_roots": [[str(x) for x in v] for v in rs.simple],
        "checks": info["checks"],
    }
    return Result(out)


# ---------------------------------------------------------------- apply, form

def cmd_apply(args):
    from .calculus.forms import exp_laplacian
    from .calculus.intertwining import v0_apply, v_apply
    from .calculus.operators import dunkl_apply, laplacian_apply, rho_apply
    from .scalar import Scalar

    ctx = _context(args)
    p = _poly(args.poly, ctx.dim)
    op = args.op
    if op == "dunkl":
        if args.direction:
            a = tuple(_rationals(args.direction, "direction"))
        elif args.i is not None:
            if not 1 <= args.i <= ctx.dim:
                raise ParseError(f"--i must lie in 1..{ctx.dim}")
            a = args.i - 1
        else:
            raise ParseError("dunkl needs --i or --direction")
        q = dunkl_apply(ctx, a, p)
    elif op == "laplacian":
        q = laplacian_apply(ctx, p)
    elif op == "v0":
        q = v0_apply(ctx, p)
    elif op == "v":
        q = v_apply(ctx, p)
    elif op == "exp-laplacian":
        q = exp_laplacian(ctx, Scalar.parse(args.s), p)
    elif op == "rho":
        if not args.by:
            raise ParseError("rho needs --by (the polynomial to substitute D_i into)")
        q = rho_apply(ctx, _poly(args.by, ctx.dim), p)
    else:  # argparse restricts choices
        raise ParseError(f"unknown operator {op}")
    return Result({"op": op, "input": p.format(), "result": _poly_out(q)}, text=q.format())


def cmd_form(args):
    from .calculus.forms import gaussian_form, kappa_form

    ctx = _context(args)
    p = _poly(args.p, ctx.dim)
    q = _poly(args.q if args.q is not None else args.p, ctx.dim)
    v = gaussian_form(ctx, p, q) if args.gaussian else kappa_form(ctx, p, q)
    kind = "gaussian" if args.gaussian else "kappa"
    return Result({"form": kind, "p": p.format(), "q": q.format(), "value": str(v)}, text=v.format())


# ---------------------------------------------------------------- kernel

def cmd_kernel(args):
    from .calculus.intertwining import kernel_poly
    from .numeric.kernel import float_context, kernel_partial_sum

    rs = _system(args)
    if args.degree is not None:
        ctx = _context(args, rs)
        K = kernel_poly(ctx, args.degree)
        return Result({"degree": args.degree, "kernel": _poly_out(K), "variables": _kernel_vars(rs.dim)}, text=K.format())
    ctx = _context(args, rs)
    if any(not isinstance(v, float) and not v.is_constant() for v in ctx.kappa.values):
        raise NumericModeRequired("numeric kernel evaluation needs numeric --kappa values")
    vals = ctx.kappa.as_floats()
    fctx = float_context(rs, vals)
    if args.grid:
        rows = _read_grid(args.grid, rs.dim)
    else:
        if args.x is None or args.y is None:
            raise ParseError("numeric kernel evaluation needs --x and --y, --grid, or --degree")
        rows = [(_floats(args.x, "x"), _floats(args.y, "y"))]
    out = []
    for x, y in rows:
        if len(x) != rs.dim or len(y) != rs.dim:
            raise ParseError(f"points need {rs.dim} coordinates")
        r = kernel_partial_sum(fctx, x, y, tol=args.tol, variant=args.variant, cap=args.cap)
        out.append((x, y, r))
    payload = [{"x": x, "y": y, **r.to_json()} for x, y, r in out]
    header = [f"x{i + 1}" for i in range(rs.dim)] + [f"y{i + 1}" for i in range(rs.dim)]
    complex_out = args.variant == "imaginary"
    header += ["re", "im"] if complex_out else ["value"]
    header += ["terms_used", "tail_bound"]
    table = []
    for x, y, r in out:
        v = [r.value.real, r.value.imag] if complex_out else [r.value]
        table.append([*x, *y, *v, r.terms_used, r.tail_bound])
    text = []
    for x, y, r in out:
        v = f"{r.value.real!r} {r.value.imag:+.17g}i" if complex_out else repr(r.value)
        text.append(f"{v}  (terms {r.terms_used}, tail bound {r.tail_bound:.3g})")
    return Result(payload[0] if len(payload) == 1 and not args.grid else payload, text=text, table=(header, table))


def _kernel_vars(d):
    return [f"x{i + 1} = x_{i + 1}" for i in range(d)] + [f"x{d + i + 1} = y_{i + 1}" for i in range(d)]


def _read_grid(path, d):
    rows = []
    try:
        fh = sys.stdin if path == "-" else open(path, newline="")
    except OSError as e:
        raise ParseError(f"cannot open grid file: {e}") from None
    with fh:
        for rec in csv.reader(fh):
            if not rec or rec[0].strip().startswith("#"):
                continue
            try:
                nums = [float(s) for s in rec]
            except ValueError:
                continue  # header line
            if len(nums) != 2 * d:
                raise ParseError(f"grid rows need {2 * d} numbers (x then y)")
            rows.append((nums[:d], nums[d:]))
    return rows


# ---------------------------------------------------------------- harmonic(s)

def cmd_harmonic(args):
    from .calculus.harmonic import harmonic_basis, harmonic_expansion

    ctx = _context(args)
    if args.poly:
        p = _poly(args.poly, ctx.dim)
        pieces = harmonic_expansion(ctx, p)
        payload = {"input": p.format(), "pieces": [{"j": j, "harmonic": _poly_out(h)} for j, h in pieces]}
        text = [f"|x|^{2 * j} * ({h.format()})" for j, h in pieces] or ["0"]
        return Result(payload, text=text)
    if args.degree is None:
        raise ParseError("harmonic needs --degree or --poly")
    basis = harmonic_basis(ctx, args.degree)
    return Result(
        {"degree": args.degree, "dimension": len(basis), "basis": [_poly_out(b) for b in basis]},
        text=[b.format() for b in basis] or ["(none)"],
        table=(["index", "poly"], [[i, b.format()] for i, b in enumerate(basis)]),
    )


def _group_kappas(text, count):
    from .scalar import Scalar

    parts = [s.strip() for s in text.split(",") if s.strip()]
    out = []
    for s in parts:
        if s.lower() in ("symbolic", "sym"):
            out.append(Scalar.param(len(out)))
        else:
            out.append(Scalar.of(Fraction(s)))
    if len(out) == 1 and count == 2:
        out = [out[0], out[0] if not (parts[0].lower() in ("symbolic", "sym")) else Scalar.param(1)]
    return out


def cmd_harmonics(args):
    from .harmonics2d import HarmonicFamily2D, dihedral_harmonics, z2_harmonics, z2z2_harmonics
    from .poly import Polynomial

    g = args.group.strip().lower().replace(" ", "")
    if g in ("z2", "z2^1"):
        (k,) = _group_kappas(args.kappa, 1)[:1]
        fam = HarmonicFamily2D("Z2", (k,))
        fam.entries[(0, "0")] = Polynomial.one(2)
        for n in range(1, args.max_degree + 1):
            p0, p1 = z2_harmonics(n, k, normalized=args.normalized)
            fam.entries[(n, "0")], fam.entries[(n, "1")] = p0, p1
    elif g in ("z2xz2", "z2*z2", "z2^2"):
        k1, k2 = _group_kappas(args.kappa, 2)[:2]
        fam = HarmonicFamily2D("Z2xZ2", (k1, k2))
        for n in range(0, args.max_degree + 1):
            for tag, p in z2z2_harmonics(n, k1, k2).items():
                fam.entries[(n, tag)] = p
    elif g.startswith("i2"):
        m = int(g[2:].strip(":()[]^_"))
        ks = _group_kappas(args.kappa, 2 if m % 2 == 0 else 1)
        fam = dihedral_harmonics(m, args.max_degree, tuple(ks) if len(ks) > 1 else ks[0])
    else:
        raise ParseError(f"unknown group {args.group!r}: use z2, z2xz2 or i2:<m>")
    payload = fam.to_json()
    if args.certify and g.startswith("i2"):
        from .numeric.dihedral import gram_report, harmonicity_residual

        payload["certificate"] = {
            "harmonicity_residual": harmonicity_residual(m, tuple(ks) if len(ks) > 1 else ks[0], args.max_degree),
            **gram_report(m, tuple(ks) if len(ks) > 1 else ks[0], args.max_degree),
        }
    rows = [[d, t, p.format()] for (d, t), p in sorted(fam.entries.items())]
    text = [f"[{d} {t}] {p}" for d, t, p in rows]
    return Result(payload, text=text, table=(["degree", "tag", "poly"], rows))


# ---------------------------------------------------------------- jack

def cmd_jack(args):
    from . import jack

    ctx = jack.type_a_context(args.d, args.kappa)
    if args.action == "symmetric":
        if not args.lam:
            raise ParseError("jack symmetric needs --lambda")
        lam = _ints(args.lam, "lambda")
        poly, norm = jack.symmetric_jack(ctx, lam)
        payload = {"lambda": lam, "poly": _poly_out(poly), "norm": str(norm),
                   "eval_ones": str(jack.symmetric_jack_eval_ones(ctx, lam))}
        return Result(payload, text=poly.format())
    if not args.alpha:
        raise ParseError(f"jack {args.action} needs --alpha")
    alpha = _ints(args.alpha, "alpha")
    z = jack.zeta(ctx, alpha)
    if args.action == "norm":
        payload = {"alpha": list(z.alpha), "norm": str(z.norm), "eval_ones": str(z.eval_ones),
                   "xi": [str(x) for x in z.xi]}
        if args.check:
            computed = jack.zeta_norm_computed(ctx, alpha)
            payload["norm_computed"] = str(computed)
            payload["agree"] = computed == z.norm
        return Result(payload, text=z.norm.format())
    payload = z.to_json()
    payload["poly"] = _poly_out(z.poly)
    return Result(payload, text=z.poly.format())


# ---------------------------------------------------------------- mm

def cmd_mm(args):
    from .calculus.context import DunklContext, MultiplicitySpec
    from .calculus.mehta import mm_constant, mm_discriminant_norm
    from .errors import NotOneClass

    rs = _system(args)
    sym = DunklContext(rs, MultiplicitySpec.symbolic(rs, params=[0] * rs.num_classes if args.tie else None))
    rec = mm_constant(sym, args.closed_form)
    payload = {"type": rs.name, "record": rec.to_json(), "description": rec.describe()}
    text = [f"1/c_kappa = {rec.describe()}"]
    try:
        disc = mm_discriminant_norm(sym)
        payload["discriminant_norm"] = str(disc)
        text.append(f"<a_R, a_R> = {disc.format()}")
    except NotOneClass:
        pass
    if args.numeric:
        from .numeric.mehta import mm_constant_eval, mm_integral_quadrature

        if args.kappa0 is None:
            raise ParseError("--numeric needs --kappa0 (and --kappa1 for two classes)")
        k0 = float(Fraction(args.kappa0))
        k1 = float(Fraction(args.kappa1)) if args.kappa1 is not None else k0
        vals = (k0,) if (args.tie or rs.num_classes == 1) else (k0, k1)
        value = mm_constant_eval(rec, vals)
        payload["kappa"] = list(vals)
        payload["value"] = value
        text.append(f"value at kappa = {list(vals)}: {value!r}")
        if args.quadrature:
            ks = [vals[0]] * rs.num_classes if len(vals) == 1 else list(vals)
            q = mm_integral_quadrature(DunklContext(rs, MultiplicitySpec.numeric(rs, ks)))
            payload["quadrature"] = q
            payload["relative_difference"] = abs(q - value) / abs(q)
            text.append(f"quadrature: {q!r} (relative difference {abs(q - value) / abs(q):.2e})")
    return Result(payload, text=text)


# ---------------------------------------------------------------- verify, version

def cmd_verify(args):
    from .verify import SUITES, resolve, run_suite

    names = list(SUITES) if args.suite.lower() == "all" else [args.suite]
    try:
        keys = [resolve(n) for n in names]
    except KeyError as e:
        raise ParseError(f"unknown suite {e.args[0]!r}") from None
    reports = [run_suite(k, args.seed, quick=args.quick) for k in keys]
    failed = [r for r in reports if not r.ok]
    payload = reports[0].to_json() if len(reports) == 1 else {
        "seed": args.seed,
        "suites": [r.to_json() for r in reports],
        "ok": not failed,
    }
    text = [r.line() for r in reports]
    for r in failed:
        for f in r.failures[:10]:
            text.append(f"  {r.name}: {f.case}: expected {f.expected}, got {f.got}")
    rows = [[r.name, r.title, r.cases, len(r.failures), round(r.wall_time, 3), r.ok] for r in reports]
    return Result(payload, text=text, table=(["suite", "title", "cases", "failures", "wall_time", "ok"], rows),
                  code=0 if not failed else 1)


def cmd_version(args):
    return Result({"version": __version__}, text=__version__)


# ---------------------------------------------------------------- parser

def _add_system(p, kappa_default="symbolic"):
    p.add_argument("--type", required=True, help="A, B, C, D, Z2, G2, F4, E6-E8, I2, H3, H4")
    p.add_argument("--rank", type=int, default=None, help="rank or type parameter")
    p.add_argument("--kappa", default=kappa_default,
                   help="'symbolic', 'tied', p/q or a float, per class as a comma list")
    p.add_argument("--tie", action="store_true", help="one symbol for all classes")


def build_parser():
    fmt = argparse.ArgumentParser(add_help=False)
    fmt.add_argument("--format", choices=["text", "json", "csv"], default=None)
    fmt.add_argument("--json", action="store_true", help="same as --format json")

    ap = argparse.ArgumentParser(prog="dunkl", description="Dunkl operators for finite reflection groups.",
                                 parents=[fmt])
    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser("roots", parents=[fmt], help="root system data and degree checks")
    p.add_argument("--type", required=True)
    p.add_argument("--rank", type=int, default=None)
    p.add_argument("--enumerate-limit", type=int, default=200000,
                   help="enumerate the group only when its order is at most this")
    p.set_defaults(func=cmd_roots)

    p = sub.add_parser("apply", parents=[fmt], help="apply an operator to a polynomial")
    _add_system(p)
    p.add_argument("--op", required=True, choices=["dunkl", "laplacian", "v0", "v", "exp-laplacian", "rho"])
    p.add_argument("--poly", required=True, help="polynomial text or JSON")
    p.add_argument("--i", type=int, help="coordinate index (1-based) for dunkl")
    p.add_argument("--direction", help="direction vector for dunkl, comma-separated rationals")
    p.add_argument("--s", default="1/2", help="parameter s of exp(s Delta)")
    p.add_argument("--by", help="polynomial whose rho-image is applied (op rho)")
    p.set_defaults(func=cmd_apply)

    p = sub.add_parser("form", parents=[fmt], help="kappa-form or Gaussian form")
    _add_system(p)
    p.add_argument("--p", required=True)
    p.add_argument("--q")
    p.add_argument("--gaussian", action="store_true")
    p.set_defaults(func=cmd_form)

    p = sub.add_parser("kernel", parents=[fmt], help="kernel polynomials or numeric partial sums")
    _add_system(p, kappa_default="symbolic")
    p.add_argument("--degree", type=int, help="exact K_{kappa,n} as a 2d-variable polynomial")
    p.add_argument("--x")
    p.add_argument("--y")
    p.add_argument("--grid", help="CSV file (or '-') of points x1..xd,y1..yd")
    p.add_argument("--tol", type=float, default=1e-10)
    p.add_argument("--cap", type=int, default=200)
    p.add_argument("--variant", choices=["real", "imaginary", "symmetrized"], default="real")
    p.set_defaults(func=cmd_kernel)

    p = sub.add_parser("harmonic", parents=[fmt], help="harmonic basis or decomposition")
    _add_system(p)
    p.add_argument("--degree", type=int)
    p.add_argument("--poly")
    p.set_defaults(func=cmd_harmonic)

    p = sub.add_parser("harmonics", parents=[fmt], help="explicit planar harmonic families")
    p.add_argument("--group", required=True, help="z2, z2xz2 or i2:<m>")
    p.add_argument("--kappa", default="symbolic", help="value(s), comma-separated, or 'symbolic'")
    p.add_argument("--max-degree", type=int, default=4)
    p.add_argument("--normalized", action="store_true", help="z2: divide by the value at 1")
    p.add_argument("--certify", action="store_true", help="i2: numeric harmonicity and Gram checks")
    p.set_defaults(func=cmd_harmonics)

    p = sub.add_parser("jack", parents=[fmt], help="nonsymmetric and symmetric Jack polynomials")
    p.add_argument("action", choices=["zeta", "norm", "symmetric"])
    p.add_argument("--d", type=int, required=True)
    p.add_argument("--alpha")
    p.add_argument("--lambda", dest="lam")
    p.add_argument("--kappa", default="symbolic")
    p.add_argument("--check", action="store_true", help="norm: also compute the form directly")
    p.set_defaults(func=cmd_jack)

    p = sub.add_parser("mm", parents=[fmt], help="Gaussian integral constants")
    p.add_argument("--type", required=True)
    p.add_argument("--rank", type=int, default=None)
    p.add_argument("--kappa0")
    p.add_argument("--kappa1")
    p.add_argument("--tie", action="store_true")
    p.add_argument("--closed-form", default="auto", choices=["auto", "one-class", "B", "I2", "F4"])
    p.add_argument("--numeric", action="store_true")
    p.add_argument("--quadrature", action="store_true", help="compare with quadrature (rank <= 2)")
    p.set_defaults(func=cmd_mm)

    p = sub.add_parser("verify", parents=[fmt], help="run verification suites")
    p.add_argument("--suite", default="all", help="AC1..AC14, a suite alias, or all")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--quick", action="store_true", help="smaller case counts")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("version", parents=[fmt])
    p.set_defaults(func=cmd_version)
    return ap


_NEGATIVE = re.compile(r"^-(\d|\.\d)")


def _join_negative_values(argv):
    """Rewrite '--opt -3/2' as '--opt=-3/2' so negative rationals are not read as options."""
    out = []
    i = 0
    while i < len(argv):
        tok = argv[i]
        if tok.startswith("--") and "=" not in tok and i + 1 < len(argv) and _NEGATIVE.match(argv[i + 1]):
            out.append(f"{tok}={argv[i + 1]}")
            i += 2
            continue
        out.append(tok)
        i += 1
    return out


def main(argv=None):
    parser = build_parser()
    argv = sys.argv[1:] if argv is None else list(argv)
    args = parser.parse_args(_join_negative_values(argv))
    fmt = "json" if args.json else (args.format or "text")
    try:
        res = args.func(args)
    except DunklError as e:
        print(json.dumps(e.as_dict()), file=sys.stderr)
        return 2 if isinstance(e, USAGE_ERRORS) else 1
    except (ZeroDivisionError, ValueError) as e:
        print(json.dumps({"error": type(e).__name__, "message": str(e)}), file=sys.stderr)
        return 1
    print(res.render(fmt))
    return res.code


if __name__ == "__main__":
    sys.exit(main())
