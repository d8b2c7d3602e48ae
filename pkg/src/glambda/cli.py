"""Command line entry point: ``glambda <subcommand> ...``.

Exit status is 0 on success, 1 when a verified identity fails and 2 on
usage errors.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from fractions import Fraction

from . import checks, modchar, orthopoly, quasifinite, traceform
from .algebra import H as H_ELEM, specialize
from .exactcore import HPoly, LambdaScalar, PoleError

EXIT_OK, EXIT_FALSIFIED, EXIT_USAGE = 0, 1, 2


# --- serialization ------------------------------------------------------------

def _rat_pair(x: Fraction):
    return [str(x.numerator), str(x.denominator)]


def scalar_json(c: LambdaScalar) -> dict:
    c = LambdaScalar.coerce(c)
    num = [_rat_pair(x) for x in c.numerator] or [["0", "1"]]
    return {"num": num, "den": [_rat_pair(x) for x in c.denominator]}


def emit_poly_json(f: HPoly) -> str:
    """``{"var": "H", "coeffs": [{"num": [[p, q], ...], "den": [...]}, ...]}``."""
    f = HPoly.coerce(f)
    coeffs = list(f.coeffs) or [LambdaScalar.const(0)]
    return json.dumps({"var": f.var, "coeffs": [scalar_json(c) for c in coeffs]})


def parse_scalar_json(d) -> LambdaScalar:
    num = [Fraction(int(p), int(q)) for p, q in d["num"]]
    den = [Fraction(int(p), int(q)) for p, q in d["den"]]
    return LambdaScalar(num, den)


def parse_poly_json(text) -> HPoly:
    doc = json.loads(text) if isinstance(text, str) else text
    return HPoly([parse_scalar_json(c) for c in doc["coeffs"]], doc.get("var", "H"))


def emit_table_csv(rows, header=None) -> str:
    """CSV with a header row and ``\\n`` line endings.  Rows are dicts or sequences."""
    rows = list(rows)
    if header is None:
        if not rows or not isinstance(rows[0], dict):
            raise ValueError("a header is required for empty or non-dict rows")
        header = list(rows[0])
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(header)
    for r in rows:
        w.writerow([_cell(r[h]) for h in header] if isinstance(r, dict) else [_cell(x) for x in r])
    return buf.getvalue()


def _cell(x):
    if isinstance(x, Fraction):
        return f"{x.numerator}/{x.denominator}"
    return str(x)


# --- argument parsing -----------------------------------------------------------

def _lambda_arg(text: str):
    if text == "symbolic":
        return None
    try:
        return Fraction(text)
    except (ValueError, ZeroDivisionError):
        raise argparse.ArgumentTypeError(
            f"lambda must be 'symbolic', an integer or p/q, got {text!r}") from None


def _nonneg(text):
    v = int(text)
    if v < 0:
        raise argparse.ArgumentTypeError("must be nonnegative")
    return v


def _positive(text):
    v = int(text)
    if v < 1:
        raise argparse.ArgumentTypeError("must be positive")
    return v


def _schedule(text):
    try:
        vals = sorted({int(x) for x in text.split(",") if x.strip()})
    except ValueError:
        raise argparse.ArgumentTypeError("schedule is a comma list of integers") from None
    if not vals or vals[0] < 0:
        raise argparse.ArgumentTypeError("schedule must be nonempty and nonnegative")
    return vals


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        raise _UsageError(f"{self.prog}: error: {message}")


class _UsageError(Exception):
    pass


def build_parser() -> argparse.ArgumentParser:
    common = _Parser(add_help=False)
    common.add_argument("--format", choices=("json", "csv", "text"), default="text")
    common.add_argument("--output", help="write to this file instead of standard output")

    p = _Parser(prog="glambda", description="Exact computations in gl(lambda).")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    q = sub.add_parser("poly", parents=[common], help="the polynomial f_kl")
    q.add_argument("--k", type=_nonneg, required=True)
    q.add_argument("--l", type=int, default=0)
    q.add_argument("--lambda", dest="lam", type=_lambda_arg, default=None)
    q.add_argument("--route", choices=("nabla", "ad", "hahn"), default="nabla")

    q = sub.add_parser("trace", parents=[common], help="trace generating function")
    q.add_argument("--order", type=_positive, default=10)
    q.add_argument("--lambda", dest="lam", type=_lambda_arg, default=None)
    q.add_argument("--zero", action="store_true", help="the lambda = 0 series 2t/(e^t - e^-t)")

    q = sub.add_parser("gram", parents=[common], help="Gram matrix of f_kl, k = l..kmax")
    q.add_argument("--l", type=_nonneg, default=0)
    q.add_argument("--kmax", type=_nonneg, default=None)
    q.add_argument("--n", type=_positive, default=None, help="integer lambda; kmax defaults to n-1")
    q.add_argument("--lambda", dest="lam", type=_lambda_arg, default=None)

    q = sub.add_parser("verify", parents=[common], help="run verification suites")
    q.add_argument("suite", choices=(*checks.ALL_ORDER, "all"))
    q.add_argument("--kmax", type=_nonneg, default=None,
                   help="degree bound for every k-indexed check (default 8, 10 for diffeq and window)")
    q.add_argument("--nmax", type=_positive, default=8)
    q.add_argument("--seed", type=int, default=checks.DEFAULT_SEED)
    q.add_argument("--order", type=_positive, default=20)
    q.add_argument("--pairs", type=_positive, default=200)

    q = sub.add_parser("conjecture", parents=[common], help="partial sums of the infinite dual identities")
    q.add_argument("--lambda", dest="lam", type=_lambda_arg, required=True)
    q.add_argument("--l", type=_nonneg, default=0)
    q.add_argument("--imax", type=_positive, default=3, help="use indices l+1 .. l+imax")
    q.add_argument("--kmax", type=_nonneg, default=40)
    q.add_argument("--schedule", type=_schedule, default=None,
                   help="comma list of k_max values (default 5,10,20,40 capped at --kmax)")
    q.add_argument("--precision", type=_positive, default=None,
                   help="decimal digits for floating evaluation (default exact)")
    q.add_argument("--normalization", choices=(orthopoly.WITH_LAMBDA, orthopoly.WITHOUT_LAMBDA),
                   default=orthopoly.WITH_LAMBDA)
    q.add_argument("--identity", choices=("dual", "casimir"), default="dual")

    q = sub.add_parser("character", parents=[common], help="characteristic polynomial and q-character")
    g = q.add_mutually_exclusive_group(required=True)
    g.add_argument("--partition", type=modchar.Partition.parse)
    g.add_argument("--size", type=_positive, help="every partition of this size")
    q.add_argument("--order", type=_nonneg, default=12)
    q.add_argument("--convention", choices=(modchar.STANDARD, modchar.PAPER, "both"), default="both")

    q = sub.add_parser("window", parents=[common], help="gl(infinity) cocycle on a finite window")
    q.add_argument("--lambda", dest="lam", type=_lambda_arg, default=None)
    q.add_argument("--s", type=_lambda_arg, default=None)
    q.add_argument("--kmax", type=_nonneg, default=10)
    q.add_argument("--window", type=_positive, default=14)
    q.add_argument("--seed", type=int, default=None, help="conjugate by a random diagonal gauge")
    return p


# --- commands ---------------------------------------------------------------------

def cmd_poly(a):
    try:
        route = {"nabla": orthopoly.f_nabla, "ad": orthopoly.f_ad, "hahn": orthopoly.f_hahn}[a.route]
        if a.l < 0 and a.route != "ad":
            poly = orthopoly.f(a.k, a.l)
        else:
            poly = route(a.k, a.l).poly
    except ValueError as exc:
        raise _UsageError(str(exc)) from None
    if a.lam is not None:
        poly = poly.at_lambda(a.lam)
    if a.format == "json":
        return emit_poly_json(poly) + "\n", EXIT_OK
    if a.format == "csv":
        rows = [{"degree": d, "coefficient": str(c)} for d, c in enumerate(poly.coeffs)]
        return emit_table_csv(rows, ["degree", "coefficient"]), EXIT_OK
    return f"f_{a.k},{a.l} = {poly}\n", EXIT_OK


def cmd_trace(a):
    n = a.order
    series = traceform.trace_zero_series(n) if a.zero else traceform.trace_series(n)
    status = EXIT_OK
    if not a.zero and series != traceform.moment_series(n):
        status = EXIT_FALSIFIED
    coeffs = list(series.coeffs)
    oracle = None
    if a.lam is not None:
        coeffs = [LambdaScalar.coerce(c).at(a.lam) for c in coeffs]
        if not a.zero and a.lam.denominator == 1 and a.lam > 0:
            # integer lambda: compare with the matrix trace of H^m / m!
            size = int(a.lam)
            from math import factorial
            h = specialize(H_ELEM, size)
            power = specialize(H_ELEM ** 0, size)
            oracle = True
            for m in range(n + 1):
                if Fraction(power.trace(), factorial(m)) != coeffs[m].constant_value():
                    oracle = False
                power = power @ h
            if not oracle:
                status = EXIT_FALSIFIED
    rows = [{"m": m, "coefficient": str(c)} for m, c in enumerate(coeffs)]
    if a.format == "json":
        doc = {"order": n, "zero": a.zero, "coeffs": [scalar_json(c) for c in coeffs]}
        if oracle is not None:
            doc["matrix_trace_agrees"] = oracle
        return json.dumps(doc) + "\n", status
    if a.format == "csv":
        return emit_table_csv(rows, ["m", "coefficient"]), status
    lines = [f"t^{r['m']}: {r['coefficient']}" for r in rows]
    if oracle is not None:
        lines.append(f"matrix trace agrees: {oracle}")
    return "\n".join(lines) + "\n", status


def cmd_gram(a):
    lam = a.lam
    if a.n is not None:
        if lam is not None and lam != a.n:
            raise _UsageError("--n and --lambda disagree")
        lam = Fraction(a.n)
    k_max = a.kmax
    if k_max is None:
        if lam is None or lam.denominator != 1:
            raise _UsageError("--kmax is required unless lambda is a positive integer")
        k_max = int(lam) - 1
    if a.l > k_max:
        raise _UsageError("need l <= kmax")
    g = orthopoly.gram_matrix(k_max, a.l)
    if lam is not None:
        try:
            g = [[x.evaluate(lam) for x in row] for row in g]
        except PoleError as exc:
            raise _UsageError(str(exc)) from None
    ks = list(range(a.l, k_max + 1))
    diagonal = all(not g[i][j] for i in range(len(ks)) for j in range(len(ks)) if i != j)
    status = EXIT_OK if diagonal else EXIT_FALSIFIED
    header = ["k"] + [str(k) for k in ks]
    rows = [[str(k)] + [_cell(x) for x in row] for k, row in zip(ks, g)]
    if a.format == "json":
        return json.dumps({"l": a.l, "k": ks, "matrix": [r[1:] for r in rows],
                           "diagonal": diagonal}) + "\n", status
    if a.format == "csv":
        return emit_table_csv(rows, header), status
    width = max(len(c) for r in rows for c in r)
    lines = [" ".join(c.rjust(width) for c in header)]
    lines += [" ".join(c.rjust(width) for c in r) for r in rows]
    return "\n".join(lines) + "\n", status


def cmd_verify(a):
    params = checks.SuiteParams(nmax=a.nmax, pairs=a.pairs, seed=a.seed, order=a.order)
    if a.kmax is not None:
        params.kmax = params.kmax_diffeq = params.kmax_window = a.kmax
        params.window = max(params.window, a.kmax + 2)
    results = checks.run_suite(a.suite, params)
    status = EXIT_OK if all(r.passed for r in results) else EXIT_FALSIFIED
    rows = [r.as_dict() for r in results]
    if a.format == "json":
        return json.dumps(rows, indent=2) + "\n", status
    if a.format == "csv":
        return emit_table_csv(rows), status
    lines = []
    for r in results:
        mark = "PASS" if r.passed else "FAIL"
        lines.append(f"{mark}  {r.suite:<10} {r.name:<45} {r.params:<32} {r.detail} ({r.seconds:.2f}s)")
    lines.append(f"{sum(r.passed for r in results)}/{len(results)} checks passed")
    return "\n".join(lines) + "\n", status


def cmd_conjecture(a):
    if a.lam is None:
        raise _UsageError("conjecture needs a numeric --lambda")
    schedule = a.schedule or sorted({k for k in (5, 10, 20, 40) if k <= a.kmax} | {a.kmax})
    idx = [(i, j) for i in range(a.l + 1, a.l + a.imax + 1)
           for j in range(a.l + 1, a.l + a.imax + 1)]
    try:
        table = orthopoly.conjecture_scan(a.lam, a.l, idx, schedule, a.normalization,
                                          a.precision, a.identity)
    except orthopoly.DegenerateNorm as exc:
        raise _UsageError(f"{exc}: lambda hits a zero of the norm before k_max") from None
    except ZeroDivisionError as exc:
        raise _UsageError(f"lambda is a pole of the 3F2 sum ({exc})") from None
    if a.format == "json":
        recs = [dict(zip(table.HEADER, r)) for r in table.as_records()]
        return json.dumps(recs, indent=2) + "\n", EXIT_OK
    if a.format == "csv":
        return emit_table_csv(table.as_records(), table.HEADER), EXIT_OK
    lines = ["  ".join(table.HEADER)] + ["  ".join(r) for r in table.as_records()]
    return "\n".join(lines) + "\n", EXIT_OK


def cmd_character(a):
    parts = [a.partition] if a.partition is not None else list(modchar.partitions(a.size))
    reports = [modchar.character_report(nu, a.order) for nu in parts]
    if a.convention != "both":
        drop = modchar.PAPER if a.convention == modchar.STANDARD else modchar.STANDARD
        for r in reports:
            r.pop(f"q_character_{drop}")
            r.pop(f"q_series_{drop}")
            r.pop("conventions_agree")
    if a.format == "json":
        return json.dumps(reports, indent=2) + "\n", EXIT_OK
    flat = [{k: (" ".join(map(str, v)) if isinstance(v, list) else v) for k, v in r.items()}
            for r in reports]
    if a.format == "csv":
        return emit_table_csv(flat), EXIT_OK
    lines = []
    for r in flat:
        lines.append(f"nu = ({r['partition'].replace(' ', ',')})  hooks {r['hooks']}")
        lines.append(f"  stated  P(H) = {r['stated']}")
        lines.append(f"  derived P(H) = {r['derived']}")
        lines.append(f"  match = {r['match']}, match up to sign = {r['match_up_to_sign']}")
        for conv in (modchar.STANDARD, modchar.PAPER):
            if f"q_character_{conv}" in r:
                lines.append(f"  chi ({conv}) = {r[f'q_character_{conv}']}   "
                             f"series {r[f'q_series_{conv}']}")
    return "\n".join(lines) + "\n", EXIT_OK


def cmd_window(a):
    try:
        gauge = None
        if a.seed is not None:
            import random
            gauge = quasifinite.random_gauge(random.Random(a.seed), a.window)
        report = quasifinite.glinf_window(a.lam, a.s, a.window, a.kmax, gauge=gauge)
    except quasifinite.WindowError as exc:
        raise _UsageError(str(exc)) from None
    status = EXIT_OK if all(r["match"] for r in report["rows"]) else EXIT_FALSIFIED
    if a.format == "json":
        return quasifinite.window_rows_json(report) + "\n", status
    rows = [{"lambda": r["lambda"], "s": r["s"], "k": r["k"], "cocycle": str(r["cocycle"]),
             "cocycle_printed_j": str(r["cocycle_printed_j"]), "expected": str(r["expected"]),
             "match": r["match"]} for r in report["rows"]]
    if a.format == "csv":
        return emit_table_csv(rows), status
    lines = [f"k={r['k']}: c = {r['cocycle']}  (tr([J,A]B) = {r['cocycle_printed_j']})  "
             f"expected {r['expected']}  match {r['match']}" for r in rows]
    if "correction_series" in report:
        cs = report["correction_series"]
        lines.append("correction series: " + ", ".join(str(c) for c in cs.coeffs[:6]) + ", ...")
    return "\n".join(lines) + "\n", status


COMMANDS = {"poly": cmd_poly, "trace": cmd_trace, "gram": cmd_gram, "verify": cmd_verify,
            "conjecture": cmd_conjecture, "character": cmd_character, "window": cmd_window}


def run(argv=None) -> int:
    parser = build_parser()
    try:
        a = parser.parse_args(argv)
        text, status = COMMANDS[a.command](a)
    except _UsageError as exc:
        print(exc, file=sys.stderr)
        return EXIT_USAGE
    except SystemExit as exc:  # --help
        return exc.code if isinstance(exc.code, int) else EXIT_OK
    if a.output:
        with open(a.output, "w", encoding="utf-8", newline="") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return status


def main():
    sys.exit(run())


if __name__ == "__main__":
    main()
