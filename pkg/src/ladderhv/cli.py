"""Command-line interface.

Exit codes: 0 success, 1 a checked invariant failed (a counterexample is
printed), 2 bad input or a refused instance.
"""

from __future__ import annotations

import argparse
import json
import random
import sys
from dataclasses import dataclass
from pathlib import Path

from ladderhv.arrays import (ArrayFamily, Bounds, TwoRowedArray, count_arrays_dp, enumerate_arrays,
                             validate_array)
from ladderhv.complex_oracle import (DEFAULT_CAP, OracleCapExceeded, face_counts, hilbert_via_faces,
                                     preimage_formula_check)
from ladderhv.hilbert import (HilbertSeries, h_vector_from_psd, hilbert_function, is_log_concave,
                              truncated_numerator)
from ladderhv.injection import (ArrayPair, TheoremViolation, allowed_cutting_points, apply_cut,
                                optimal_cutting_point, pair_cutting_points, verify_injectivity)
from ladderhv.ladder import (Cogenerator, LadderError, LadderRegion, d_closed_formula, derive_path_system,
                             region_from_matrix_mask, validate_region)
from ladderhv.render import render_svg
from ladderhv.suites import SuiteConfig, ladder_regions_in_box, parse_box, random_region

EXIT_OK, EXIT_VIOLATION, EXIT_INPUT = 0, 1, 2


class InputError(Exception):
    pass


@dataclass(frozen=True)
class ProblemSpec:
    region: LadderRegion
    M: Cogenerator


def _parse_minor(text: str, where: str) -> Cogenerator:
    try:
        u, v = text.split("|")
        return Cogenerator(tuple(int(s) for s in u.split(",")), tuple(int(s) for s in v.split(",")))
    except (ValueError, LadderError) as exc:
        raise InputError(f"{where}: bad cogenerator {text.strip()!r}: {exc}") from None


def parse_grid(text: str, name: str = "<grid>") -> ProblemSpec:
    rows, minor = [], None
    for lineno, line in enumerate(text.splitlines(), 1):
        s = line.strip()
        if not s:
            continue
        if s.startswith("M:"):
            minor = _parse_minor(s[2:], f"{name}:{lineno}")
            continue
        for col, ch in enumerate(s, 1):
            if ch not in "#.":
                raise InputError(f"{name}:{lineno}:{col}: unexpected character {ch!r}")
        if rows and len(s) != len(rows[0][1]):
            raise InputError(f"{name}:{lineno}: row length {len(s)} differs from {len(rows[0][1])}")
        rows.append((lineno, s))
    if not rows:
        raise InputError(f"{name}: no grid rows")
    if minor is None:
        raise InputError(f"{name}: missing 'M: u1,...|v1,...' line")
    mask = [[ch == "#" for ch in s] for _, s in rows]
    try:
        region = region_from_matrix_mask(mask)
        minor.check_fits(region.a, region.b)
    except LadderError as exc:
        raise InputError(f"{name}: {exc}") from None
    return ProblemSpec(region, minor)


def parse_document(text: str, name: str = "<json>") -> ProblemSpec:
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise InputError(f"{name}:{exc.lineno}:{exc.colno}: {exc.msg}") from None
    try:
        region = validate_region(doc["a"], doc["b"], doc["lower"], doc["upper"], doc.get("x_lo", 0))
        M = Cogenerator(tuple(doc["minor"]["u"]), tuple(doc["minor"]["v"]))
        M.check_fits(region.a, region.b)
    except KeyError as exc:
        raise InputError(f"{name}: missing field {exc}") from None
    except (LadderError, TypeError) as exc:
        raise InputError(f"{name}: {exc}") from None
    return ProblemSpec(region, M)


def load_problem(path: str) -> ProblemSpec:
    if path == "-":
        text, name = sys.stdin.read(), "<stdin>"
    else:
        try:
            text, name = Path(path).read_text(), path
        except OSError as exc:
            raise InputError(f"{path}: {exc.strerror}") from None
    if text.lstrip().startswith("{"):
        return parse_document(text, name)
    return parse_grid(text, name)


def dump_problem(spec: ProblemSpec) -> str:
    """Canonical structured form (every listed column non-empty)."""
    R = spec.region
    if any(lo > hi for lo, hi in zip(R.lower, R.upper)):
        raise ValueError("regions with empty interior columns have no structured form; use a grid")
    doc = {"a": R.a, "b": R.b, "x_lo": R.x_lo, "lower": list(R.lower), "upper": list(R.upper),
           "minor": {"u": list(spec.M.u), "v": list(spec.M.v)}}
    return json.dumps(doc)


def dump_grid(spec: ProblemSpec) -> str:
    lines = ["".join("#" if c else "." for c in row) for row in spec.region.to_mask()]
    lines.append(f"M: {','.join(map(str, spec.M.u))}|{','.join(map(str, spec.M.v))}")
    return "\n".join(lines) + "\n"


def parse_array(obj) -> TwoRowedArray:
    try:
        return TwoRowedArray(tuple(obj["top"]), tuple(obj["bottom"]))
    except (KeyError, TypeError, ValueError) as exc:
        raise InputError(f"bad two-rowed array {obj!r}: {exc}") from None


def _read_json(path: str):
    try:
        return json.loads(Path(path).read_text())
    except OSError as exc:
        raise InputError(f"{path}: {exc.strerror}") from None
    except json.JSONDecodeError as exc:
        raise InputError(f"{path}:{exc.lineno}:{exc.colno}: {exc.msg}") from None


def fmt(seq) -> str:
    return "(" + ", ".join(str(int(v)) for v in seq) + ")"


def _psd(spec: ProblemSpec):
    try:
        return derive_path_system(spec.region, spec.M)
    except LadderError as exc:
        raise InputError(str(exc)) from None


def _level(psd, level: int) -> int:
    if not 1 <= level <= psd.n:
        raise InputError(f"--level must be in 1..{psd.n}")
    return level - 1


def cmd_derive(spec: ProblemSpec, args, out) -> int:
    psd = _psd(spec)
    for i in range(psd.n):
        print(f"level {i + 1}: A={tuple(psd.A[i])} E={tuple(psd.E[i])} "
              f"|L|={len(psd.levels[i])} |B|={len(psd.boundaries[i])}", file=out)
    closed = d_closed_formula(spec.region, spec.M)
    print(f"d = {psd.d}", file=out)
    print(f"closed formula = {closed}", file=out)
    missing = [p for i in range(psd.n) for p in psd.wall(i) if p not in spec.region]
    if missing:
        print("wall points outside the region: " + ", ".join(str(tuple(p)) for p in missing), file=out)
    return EXIT_OK


def cmd_hvec(spec: ProblemSpec, args, out) -> int:
    psd = _psd(spec)
    h = h_vector_from_psd(psd)
    series = HilbertSeries(h, psd.d)
    lc = is_log_concave(h)
    print(f"h = {fmt(h)}", file=out)
    print(f"d = {psd.d}", file=out)
    print(f"series = {series}", file=out)
    print(f"log-concave: {'yes' if lc else 'no'}", file=out)
    if not lc:
        if psd.n == 1:
            print("VIOLATION: h-vector with n = 1 is not log-concave", file=out)
            return EXIT_VIOLATION
        print("conjecture counterexample candidate", file=out)
    return EXIT_OK


def cmd_enumerate(spec: ProblemSpec, args, out) -> int:
    psd = _psd(spec)
    i = _level(psd, args.level)
    region, bounds = psd.counting_region(i), psd.bounds(i)
    arrays = enumerate_arrays(region, bounds, args.k)
    for T in arrays:
        print(f"{fmt(T.top)} / {fmt(T.bottom)}", file=out)
    print(f"count = {len(arrays)}", file=out)
    dp = count_arrays_dp(region, bounds)
    if (dp[args.k] if args.k < len(dp) else 0) != len(arrays):
        print("VIOLATION: dynamic-programming count disagrees with enumeration", file=out)
        return EXIT_VIOLATION
    return EXIT_OK


def cmd_hilbert(spec: ProblemSpec, args, out) -> int:
    psd = _psd(spec)
    series = HilbertSeries(h_vector_from_psd(psd), psd.d)
    for ell in range(args.ell + 1):
        print(f"H({ell}) = {hilbert_function(series, ell)}", file=out)
    return EXIT_OK


def cmd_inject(spec: ProblemSpec, args, out) -> int:
    psd = _psd(spec)
    i = _level(psd, args.level)
    doc = _read_json(args.pair)
    T1, T2 = parse_array(doc.get("first", {})), parse_array(doc.get("second", {}))
    try:
        T = ArrayPair(T1, T2, psd.bounds(i), psd.counting_region(i))
    except ValueError as exc:
        raise InputError(f"{args.pair}: {exc}") from None
    print(f"k = {T.k}", file=out)
    print("cutting points: " + " ".join(f"({c.l},{c.m})" for c in pair_cutting_points(T)), file=out)
    print("allowed: " + " ".join(f"({c.l},{c.m})" for c in allowed_cutting_points(T)), file=out)
    try:
        c = optimal_cutting_point(T)
    except TheoremViolation as exc:
        print(f"VIOLATION: {exc}", file=out)
        return EXIT_VIOLATION
    S1, S2 = apply_cut(T, c)
    print(f"optimal: ({c.l},{c.m})", file=out)
    print(f"image: {fmt(S1.top)} / {fmt(S1.bottom)} ; {fmt(S2.top)} / {fmt(S2.bottom)}", file=out)
    return EXIT_OK


def _verify_region(region, bounds, kmax, cap, label, out) -> bool:
    rep = verify_injectivity(region, bounds, kmax, cap)
    for kind, *details in rep.violations[:5]:
        print(f"VIOLATION [{label}] {kind}: {details}", file=out)
    for k in rep.skipped:
        print(f"[{label}] k={k} skipped: domain larger than cap {cap}", file=out)
    counts = [rep.sizes[k] for k in sorted(rep.sizes)]
    if not is_log_concave(counts):
        print(f"VIOLATION [{label}] counts {fmt(counts)} not log-concave", file=out)
        return False
    return rep.ok


def cmd_verify(spec: ProblemSpec | None, args, out) -> int:
    cfg = SuiteConfig(seed=args.seed, cap=args.cap)
    print(f"seed = {cfg.seed}", file=out)
    ok, checked = True, 0
    if spec is not None:
        psd = _psd(spec)
        for i in range(psd.n):
            ok &= _verify_region(psd.counting_region(i), psd.bounds(i), args.kmax, cfg.cap,
                                 f"level {i + 1}", out)
            checked += 1
    else:
        rows, cols = parse_box(args.suite)
        M = Cogenerator((1,), (1,))
        regions = list(ladder_regions_in_box(rows, cols))
        rng = random.Random(cfg.seed)
        regions += [random_region(rng, cols - 1, rows - 1) for _ in range(args.random)]
        for region in regions:
            ok &= _verify_region(region, Bounds((0, -1), (region.a + 1, region.b)), args.kmax, cfg.cap,
                                 f"region {region.lower}/{region.upper}", out)
            checked += 1
            try:
                psd = derive_path_system(region, M)
            except LadderError:
                continue
            ok &= _verify_region(psd.counting_region(0), psd.bounds(0), args.kmax, cfg.cap,
                                 f"counting region of {region.lower}/{region.upper}", out)
            checked += 1
    print(f"checked {checked} regions: {'ok' if ok else 'VIOLATIONS FOUND'}", file=out)
    return EXIT_OK if ok else EXIT_VIOLATION


def cmd_oracle(spec: ProblemSpec, args, out) -> int:
    psd = _psd(spec)
    try:
        f = face_counts(spec.region, spec.M, args.cap)
        rep = preimage_formula_check(psd, args.cap)
    except OracleCapExceeded as exc:
        print(f"refused: {exc}", file=out)
        return EXIT_INPUT
    series = HilbertSeries(h_vector_from_psd(psd), psd.d)
    print(f"f = {fmt(f)}", file=out)
    print(f"predicted f = {fmt(rep.predicted_f)}", file=out)
    ok = rep.ok and series.numerator.coeffs[0] == 1
    for ell in range(1, args.max_ell + 1):
        a, b = hilbert_function(series, ell), hilbert_via_faces(f, ell)
        flag = "ok" if a == b else "MISMATCH"
        ok &= a == b
        print(f"H({ell}): series {a}  faces {b}  {flag}", file=out)
    expected = list(series.numerator)[:args.max_ell + 1]
    expected += [0] * (args.max_ell + 1 - len(expected))
    vandermonde = truncated_numerator(series, args.max_ell) == expected
    ok &= vandermonde
    print(f"truncated series identity: {'ok' if vandermonde else 'MISMATCH'}", file=out)
    for item in rep.fiber_mismatches[:5]:
        print(f"VIOLATION fiber size: {item}", file=out)
    for item in rep.invalid_reductions[:5]:
        print(f"VIOLATION reduced family not admissible: {item}", file=out)
    print(f"preimage formula: {'ok' if rep.ok else 'MISMATCH'}", file=out)
    return EXIT_OK if ok else EXIT_VIOLATION


def cmd_render(spec: ProblemSpec, args, out) -> int:
    psd = _psd(spec)
    family = []
    if args.paths:
        doc = _read_json(args.paths)
        family = [parse_array(obj) for obj in doc.get("arrays", [])]
        if len(family) > psd.n:
            raise InputError(f"{args.paths}: {len(family)} arrays for {psd.n} paths")
        bounds = tuple(psd.bounds(i) for i in range(len(family)))
        for i, T in enumerate(family):
            if not validate_array(T, bounds[i], spec.region):
                raise InputError(f"{args.paths}: array {i + 1} not bounded by A({i + 1}), E({i + 1}) or not in the region")
        if not ArrayFamily(tuple(family), bounds).is_non_intersecting():
            raise InputError(f"{args.paths}: the family is intersecting")
    walls = [psd.wall(i) for i in range(psd.n)] if args.walls else []
    svg = render_svg(spec.region, psd.A, psd.E, family, walls)
    Path(args.output).write_text(svg)
    print(f"wrote {args.output}", file=out)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="ladderhv", description=__doc__.splitlines()[0])
    sub = p.add_subparsers(dest="command", required=True)

    def with_file(name, help):
        s = sub.add_parser(name, help=help)
        s.add_argument("file", help="problem file (JSON document or ASCII grid); '-' for stdin")
        return s

    with_file("derive", "start/end points, levels and d")
    with_file("hvec", "h-vector, d, Hilbert series and log-concavity")
    s = with_file("enumerate", "two-rowed arrays of one length")
    s.add_argument("--k", type=int, required=True)
    s.add_argument("--level", type=int, default=1)
    s = with_file("hilbert", "Hilbert function values H(0..N)")
    s.add_argument("--ell", type=int, required=True)
    s = with_file("inject", "cutting points and image of one pair")
    s.add_argument("--pair", required=True, help='JSON {"first": {...}, "second": {...}}')
    s.add_argument("--level", type=int, default=1)
    s = sub.add_parser("verify", help="exhaustive injectivity check")
    s.add_argument("file", nargs="?")
    s.add_argument("--suite", help="matrix box such as 3x4: every ladder region inside it")
    s.add_argument("--kmax", type=int, default=None)
    s.add_argument("--seed", type=int, default=0)
    s.add_argument("--random", type=int, default=0, help="extra seeded random regions in the box")
    s.add_argument("--cap", type=int, default=10**7)
    s = with_file("oracle", "face-complex cross-check")
    s.add_argument("--max-ell", type=int, default=6)
    s.add_argument("--cap", type=int, default=DEFAULT_CAP)
    s = with_file("render", "SVG drawing")
    s.add_argument("--paths", help='JSON {"arrays": [{"top": [...], "bottom": [...]}, ...]}')
    s.add_argument("--walls", action="store_true", help="draw the lower boundary of each level")
    s.add_argument("-o", "--output", required=True)
    return p


COMMANDS = {"derive": cmd_derive, "hvec": cmd_hvec, "enumerate": cmd_enumerate, "hilbert": cmd_hilbert,
            "inject": cmd_inject, "verify": cmd_verify, "oracle": cmd_oracle, "render": cmd_render}


def main(argv=None, out=None) -> int:
    out = out or sys.stdout
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_INPUT if exc.code else EXIT_OK
    try:
        if args.command == "verify":
            if (args.file is None) == (args.suite is None):
                raise InputError("verify needs exactly one of FILE or --suite")
            spec = load_problem(args.file) if args.file else None
        else:
            spec = load_problem(args.file)
        return COMMANDS[args.command](spec, args, out)
    except InputError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
