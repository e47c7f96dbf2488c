"""Command-line front end.

Subcommands: dist, farthest, center, oracle, colormap, sphere, repro.
Exit codes: 0 success, 1 reproduction failure, 2 usage or domain error,
3 solver non-convergence.
"""

import argparse
import json
import math
import sys
from pathlib import Path

import numpy as np

from . import closedform, repro
from .bregman import distance
from .center import solve_fixed_point, solve_subgradient
from .compactset import CompactSet, make_segment, validate
from .errors import DomainError, NonConvergence
from .farthest import farthest, farthest_values
from .legendre import Kind, energy, negentropy, neglog, quadratic

GEN_CHOICES = ("energy", "quad", "negentropy", "neglog")


def _parse_vector(text):
    try:
        return np.array([float(tok) for tok in text.split(",")], dtype=float)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not a comma-separated vector: {text!r}")


def _parse_matrix(text):
    try:
        rows = [[float(tok) for tok in row.split(",")] for row in text.split(";")]
        return np.array(rows, dtype=float)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not a matrix literal: {text!r}")


def _parse_points(text):
    return np.array([_parse_vector(row) for row in text.split(";")])


def _make_generator(args, dimension):
    if args.gen == "energy":
        return energy(dimension)
    if args.gen == "quad":
        if args.matrix is None:
            raise DomainError("--gen quad requires --matrix")
        return quadratic(args.matrix)
    if args.gen == "negentropy":
        return negentropy(dimension)
    return neglog(dimension)


def _make_set(args, F):
    if getattr(args, "points", None) is not None:
        C = CompactSet.finite(args.points)
        validate(C, F)
        return C
    if getattr(args, "segment", None) is not None:
        return make_segment(F, args.segment, args.samples)
    raise DomainError("a set is required: pass --points or --segment")


def _jsonable(obj):
    if isinstance(obj, float):
        if math.isinf(obj):
            return "inf" if obj > 0 else "-inf"
        if math.isnan(obj):
            return "nan"
        return obj
    if isinstance(obj, dict):
        return {k: _jsonable(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [_jsonable(v) for v in obj]
    return obj


def _emit(obj):
    print(json.dumps(_jsonable(obj)))


def _fmt(v):
    return "inf" if math.isinf(v) else f"{v:.17g}"


def cmd_dist(args):
    F = _make_generator(args, len(args.x))
    _emit({"distance": float(distance(F, args.x, args.y))})
    return 0


def cmd_farthest(args):
    F = _make_generator(args, len(args.x))
    C = _make_set(args, F)
    _emit(farthest(F, C, args.x).to_json())
    return 0


def cmd_center(args):
    dimension = args.points.shape[1] if args.points is not None else 2
    F = _make_generator(args, dimension)
    C = _make_set(args, F)
    polish = not args.no_polish
    code = 0

    def run(solver):
        nonlocal code
        try:
            if solver == "fixed":
                iters = args.max_iter if args.max_iter is not None else 200_000
                return solve_fixed_point(F, C, x0=args.x0, tol=args.tol,
                                         max_iter=iters, polish=polish)
            iters = args.max_iter if args.max_iter is not None else 3_000
            return solve_subgradient(F, C, x0=args.x0, tol=args.tol,
                                     max_iter=iters, polish=polish)
        except NonConvergence as exc:
            code = 3
            return exc.certificate

    if args.solver in ("fixed", "subgrad"):
        _emit(run(args.solver).to_json())
    else:
        cert_fp = run("fixed")
        cert_sg = run("subgrad")
        disagreement = float(np.linalg.norm(cert_fp.center - cert_sg.center))
        _emit({
            "fixed_point": cert_fp.to_json(),
            "subgradient": cert_sg.to_json(),
            "disagreement": disagreement,
        })
    return code


def cmd_oracle(args):
    gen_map = {
        "energy": closedform.Generator.EUCLIDEAN,
        "negentropy": closedform.Generator.KL,
        "neglog": closedform.Generator.ITAKURA_SAITO,
    }
    if args.gen not in gen_map:
        raise DomainError("oracle supports --gen energy|negentropy|neglog")
    generator = gen_map[args.gen]
    a = args.a
    out = {"a": a, "generator": generator.value}
    if generator is closedform.Generator.EUCLIDEAN:
        out["center"] = closedform.center_euclidean(a).tolist()
    elif generator is closedform.Generator.KL:
        out["center"] = closedform.center_kl(a).tolist()
    else:
        info = closedform.center_is(a)
        out["center"] = info.point.tolist()
        out["farthest_lambdas"] = list(info.farthest_lambdas)
        out["g"] = closedform.g_of(a)
        out["h"] = closedform.h_of(a)
        out["mu"] = list(closedform.mu_coefficients(a))
        out["threshold"] = closedform.threshold_a(1e-6)
    _emit(out)
    return 0


def _default_region(a):
    side = 10.0 if a <= 8.0 else 50.0
    return np.array([0.0, 0.0, side, side])


def cmd_colormap(args):
    F = _make_generator(args, 2)
    C = make_segment(F, args.segment, args.samples)
    region = args.region if args.region is not None else _default_region(args.segment)
    x0, y0, x1, y1 = region
    if not (x1 > x0 and y1 > y0):
        raise DomainError("degenerate region")
    n = args.res
    xs = np.linspace(x0, x1, n)
    ys = np.linspace(y0, y1, n)
    grid = np.array([[x, y] for y in ys for x in xs])
    values = farthest_values(F, C, grid).reshape(n, n)

    out = Path(args.out)
    lines = ["x,y,value"]
    for iy in range(n):
        for ix in range(n):
            lines.append(f"{_fmt(xs[ix])},{_fmt(ys[iy])},{_fmt(values[iy, ix])}")
    out.write_text("\n".join(lines) + "\n", encoding="ascii")

    if args.ppm:
        interior = F.in_interior(grid).reshape(n, n)
        _write_ppm(out.with_suffix(".ppm"), values, interior)
    return 0


def _write_ppm(path, values, interior):
    n = values.shape[0]
    finite = np.isfinite(values)
    shown = finite & interior
    if np.any(shown):
        vmin = float(values[shown].min())
        vmax = float(values[shown].max())
    else:
        vmin = vmax = 0.0
    span = vmax - vmin
    pixels = bytearray()
    for iy in range(n - 1, -1, -1):
        for ix in range(n):
            if not shown[iy, ix]:
                pixels += b"\x00\x00\x00"
            else:
                t = 0.0 if span == 0.0 else (values[iy, ix] - vmin) / span
                idx = min(255, int(t * 256.0))
                pixels += bytes((idx, 0, 255 - idx))
    header = f"P6\n{n} {n}\n255\n".encode("ascii")
    path.write_bytes(header + bytes(pixels))


def cmd_sphere(args):
    F = _make_generator(args, 2)
    z = args.center
    if not F.in_interior(z):
        raise DomainError("sphere center must lie in the interior of dom f")
    if args.radius < 0:
        raise DomainError("radius must be nonnegative")
    rows = _sphere_rows(F, z, args.radius, args.res)
    lines = ["theta,x,y,crossing"]
    for theta, pt, crossing in rows:
        if pt is None:
            lines.append(f"{_fmt(theta)},nan,nan,0")
        else:
            lines.append(f"{_fmt(theta)},{_fmt(pt[0])},{_fmt(pt[1])},{crossing}")
    text = "\n".join(lines) + "\n"
    if args.out:
        Path(args.out).write_text(text, encoding="ascii")
    else:
        sys.stdout.write(text)
    return 0


def _sphere_rows(F, z, r, res, prescan=64, bisect_tol=1e-10):
    """Boundary samples of {y : D(z, y) = r} along dual-space rays.

    Rays live in gradient coordinates: y(t) = grad f*(grad f(z) + t*u).
    Along such rays D(z, y(t)) need not be monotone, so a coarse pre-scan
    looks for additional crossings and reports them as well.
    """
    gz = F.grad(z)
    rows = []
    for k in range(res):
        theta = 2.0 * math.pi * k / res
        if r == 0.0:
            rows.append((theta, z.copy(), 1))
            continue
        u = np.array([math.cos(theta), math.sin(theta)])

        def phi(t):
            point = F.grad_star(gz + t * u)
            return float(distance(F, z, point)) - r

        t_limit = _dual_ray_limit(F, gz, u)
        t_hi = min(1.0, 0.5 * t_limit) if np.isfinite(t_limit) else 1.0
        found = False
        for _ in range(200):
            if phi(t_hi) >= 0.0:
                found = True
                break
            if np.isfinite(t_limit):
                t_hi = 0.5 * (t_hi + t_limit)
                if t_limit - t_hi < 1e-14 * t_limit:
                    break
            else:
                t_hi *= 2.0
                if t_hi > 1e12:
                    break
        if not found:
            rows.append((theta, None, 0))
            continue

        ts = np.linspace(0.0, t_hi, prescan)
        vals = np.array([phi(t) for t in ts])
        signs = vals >= 0.0
        crossing = 0
        for i in range(1, prescan):
            if signs[i] != signs[i - 1]:
                crossing += 1
                t_root = _bisect(phi, ts[i - 1], ts[i], bisect_tol)
                rows.append((theta, F.grad_star(gz + t_root * u), crossing))
        if crossing == 0:
            # the crossing sits exactly at a scan point
            i = int(np.argmin(np.abs(vals)))
            rows.append((theta, F.grad_star(gz + ts[i] * u), 1))
    return rows


def _dual_ray_limit(F, gz, u):
    """Largest t with gz + t*u still inside int dom f* (inf if unbounded)."""
    if F.kind is not Kind.NEG_LOG:
        return np.inf
    limits = [(-gz[j]) / u[j] for j in range(2) if u[j] > 0.0]
    return min(limits) if limits else np.inf


def _bisect(fn, lo, hi, tol):
    flo = fn(lo)
    for _ in range(200):
        mid = 0.5 * (lo + hi)
        if hi - lo <= tol:
            return mid
        fm = fn(mid)
        if (fm >= 0.0) == (flo >= 0.0):
            lo, flo = mid, fm
        else:
            hi = mid
    return 0.5 * (lo + hi)


def cmd_repro(args):
    outcomes = repro.run_all(tol=args.tol)
    width = max(len(o.name) for o in outcomes)
    failures = 0
    for o in outcomes:
        status = "PASS" if o.passed else "FAIL"
        if not o.passed:
            failures += 1
        print(f"{status}  {o.name:<{width}}  {o.detail}")
    print(f"{len(outcomes)} checks, {failures} failures")
    return 1 if failures else 0


def build_parser():
    parser = argparse.ArgumentParser(
        prog="bregcheb",
        description="Bregman farthest distances and Chebyshev centers",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_gen(p):
        p.add_argument("--gen", choices=GEN_CHOICES, required=True)
        p.add_argument("--matrix", type=_parse_matrix,
                       help="rows separated by ';', entries by ',' (quad only)")

    p = sub.add_parser("dist", help="Bregman distance between two points")
    add_gen(p)
    p.add_argument("--x", type=_parse_vector, required=True)
    p.add_argument("--y", type=_parse_vector, required=True)
    p.set_defaults(fn=cmd_dist)

    def add_set(p):
        p.add_argument("--points", type=_parse_points,
                       help="finite set: points separated by ';'")
        p.add_argument("--segment", type=float,
                       help="segment from (1,a) to (a,1) for the given a")
        p.add_argument("--samples", type=int, default=101)

    p = sub.add_parser("farthest", help="farthest distance and farthest points")
    add_gen(p)
    add_set(p)
    p.add_argument("--x", type=_parse_vector, required=True)
    p.set_defaults(fn=cmd_farthest)

    p = sub.add_parser("center", help="Chebyshev center with certificate")
    add_gen(p)
    add_set(p)
    p.add_argument("--solver", choices=("fixed", "subgrad", "both"), default="subgrad")
    p.add_argument("--tol", type=float, default=1e-6)
    p.add_argument("--max-iter", type=int, default=None)
    p.add_argument("--x0", type=_parse_vector)
    p.add_argument("--no-polish", action="store_true",
                   help="skip the final active-set Newton refinement")
    p.set_defaults(fn=cmd_center)

    p = sub.add_parser("oracle", help="closed-form centers for the segment family")
    p.add_argument("--gen", choices=("energy", "negentropy", "neglog"), required=True)
    p.add_argument("--a", type=float, required=True)
    p.set_defaults(fn=cmd_oracle)

    p = sub.add_parser("colormap", help="grid of farthest-distance values")
    add_gen(p)
    p.add_argument("--segment", type=float, required=True)
    p.add_argument("--samples", type=int, default=101)
    p.add_argument("--region", type=_parse_vector, help="x0,y0,x1,y1")
    p.add_argument("--res", type=int, default=64)
    p.add_argument("--out", required=True)
    p.add_argument("--ppm", action="store_true", help="also write a P6 image")
    p.set_defaults(fn=cmd_colormap)

    p = sub.add_parser("sphere", help="boundary samples of a Bregman sphere")
    add_gen(p)
    p.add_argument("--center", type=_parse_vector, required=True)
    p.add_argument("--radius", type=float, required=True)
    p.add_argument("--res", type=int, default=64)
    p.add_argument("--out")
    p.set_defaults(fn=cmd_sphere)

    p = sub.add_parser("repro", help="run the reproduction checks")
    p.add_argument("--tol", type=float, help="override center coordinate tolerances")
    p.add_argument("--seed", type=int, help="accepted for interface parity; "
                   "the checks are deterministic")
    p.set_defaults(fn=cmd_repro)

    return parser


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.fn(args)
    except (DomainError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    raise SystemExit(main())
