import argparse
import importlib
import sys
from collections import namedtuple
from os.path import dirname, exists, join
from time import time

import toml

from .independence import CapLimitExceededError, injectivity_certificate
from .natural import embed
from .parser import RACAH, ParseError, parse
from .racah import normalize
from .report import FAIL, PASS
from .rep_oracle import build_irrep, evaluate_expression, random_points
from .sparse import ExponentOverflowError, format_scalar
from .tensor import canonical, grade_project_tensor, tensor_degrees

PACKAGE_DIR = dirname(__file__)

SUITES = (
    "commutators",
    "pbw",
    "homomorphism",
    "structural",
    "homogeneous",
    "casimir_images",
    "normal_form",
    "centrality",
    "independence",
    "injectivity",
    "representations",
    "zero_divisors",
)

FORMATS = ("text", "structured", "latex")

# suite -> statements it certifies
STATEMENTS = toml.load(join(PACKAGE_DIR, "suites", "statements.toml"))

SELECTORS = {statement: suite for suite, statements in STATEMENTS.items() for statement in statements}


def resolve_suite(selector):
    """Suite name for a suite name or a statement selector."""
    if selector in SUITES:
        return selector
    try:
        return SELECTORS[selector]
    except KeyError:
        raise ValueError(f"unknown suite {selector!r}, expected one of {', '.join(SUITES)}") from None


def _config_path(name, folder):
    if name.endswith(".toml") and exists(name):
        return name
    return join(folder, f"{name}.toml")


def load_config(common="config_default", suite=None, suite_config="config1", **overrides):
    """Common config, then the suite config, then the non-empty overrides; frozen as a namedtuple."""
    config = toml.load(_config_path(common, PACKAGE_DIR))
    if suite is not None:
        folder = join(PACKAGE_DIR, "suites", suite)
        path = _config_path(suite_config, folder)
        if not exists(path):
            path = join(folder, "config1.toml")
        config.update(toml.load(path))
    config.update({key: value for key, value in overrides.items() if value is not None})
    return namedtuple("Config", config.keys())(*config.values())


def run_suite(name, config):
    name = resolve_suite(name)
    run = importlib.import_module(f"racah_natural.suites.{name}.suite").run
    return run(config)


# rendering


def render_element(element, fmt, command, text):
    if fmt == "latex":
        return element.to_latex()
    if fmt == "structured":
        return toml.dumps({"command": command, "input": text, "result": element.to_structured()})
    return str(element)


def _check_record(suite, check):
    record = {"suite": suite, **check.to_structured()}
    if STATEMENTS.get(suite):
        record["certifies"] = STATEMENTS[suite]
    return record


def render_reports(results, fmt, verbose=False, seed=None):
    """Render (suite name, report) pairs."""
    reports = [report for _, report in results]
    passed = all(report.passed for report in reports)
    total = sum(len(report.checks) for report in reports)
    failed = sum(len(report.failures) for report in reports)
    if fmt == "structured":
        doc = {"status": PASS if passed else FAIL, "total": total, "failed": failed}
        if seed is not None:
            doc["seed"] = seed
        doc["checks"] = [_check_record(suite, check) for suite, report in results for check in report.checks]
        notes = [note for report in reports for note in report.notes]
        if notes:
            doc["notes"] = notes
        return toml.dumps(doc)
    if fmt == "latex":
        lines = ["\\begin{tabular}{l|l|l|l}", "suite & certifies & statement & status \\\\", "\\hline"]
        for suite, report in results:
            certifies = _tex(", ".join(STATEMENTS.get(suite, [])))
            for check in report.checks:
                lines.append(f"{_tex(suite)} & {certifies} & {_tex(check.statement_id)} & {check.status} \\\\")
        lines.append("\\end{tabular}")
        return "\n".join(lines)
    lines = []
    for suite, report in results:
        if STATEMENTS.get(suite):
            lines.append(f"[{suite}] certifies {', '.join(STATEMENTS[suite])}")
        lines.append(report.summary(verbose))
    lines.append(f"overall: {(PASS if passed else FAIL).upper()} ({total - failed}/{total} checks passed)")
    return "\n".join(lines)


def _tex(text):
    return text.replace("_", "\\_")


def render_matrix(matrix):
    return "\n".join(" ".join(format_scalar(entry) for entry in row) for row in matrix)


# commands


def _parse_ints(text, what):
    try:
        return [int(v) for v in text.split(",") if v.strip()]
    except ValueError:
        raise ValueError(f"{what} must be comma separated integers, got {text!r}") from None


def _element(parsed):
    if parsed.side == RACAH:
        return normalize(parsed.expr)
    return canonical(parsed.expr)


def _image(parsed):
    if parsed.side == RACAH:
        return embed(parsed.expr)
    return canonical(parsed.expr)


def cmd_normalize(args, out):
    parsed = parse(args.expression)
    out.write(render_element(_element(parsed), args.format, "normalize", args.expression) + "\n")
    return 0


def cmd_embed(args, out):
    parsed = parse(args.expression)
    out.write(render_element(_image(parsed), args.format, "embed", args.expression) + "\n")
    return 0


def cmd_grade(args, out):
    image = _image(parse(args.expression))
    degrees = tensor_degrees(image) if args.degree is None else [args.degree]
    components = [(n, grade_project_tensor(image, n)) for n in degrees]
    if args.format == "structured":
        doc = {
            "command": "grade",
            "input": args.expression,
            "components": [{"degree": n, **term} for n, part in components for term in part.to_structured()],
        }
        out.write(toml.dumps(doc))
        return 0
    for n, part in components:
        body = part.to_latex() if args.format == "latex" else str(part)
        out.write(f"{n}: {body}\n")
    return 0


def cmd_verify(args, out):
    names = [resolve_suite(args.suite)] if args.suite else list(SUITES)
    dims = _parse_ints(args.dims, "--dims") if args.dims is not None else None
    results = []
    for name in names:
        config = load_config(args.config, name, args.suite_config, seed=args.seed, n_jobs=args.n_jobs,
                             progress=args.progress or None, dims=dims, n_points=args.points)
        print(f"[{name}] {config}", file=sys.stderr)
        init_time = time()
        results.append((name, run_suite(name, config)))
        print(f"[{name}] Verification time: {(time() - init_time) / 60:.2f} minutes", file=sys.stderr)
    seed = load_config(args.config, seed=args.seed).seed
    out.write(render_reports(results, args.format, verbose=args.verbose, seed=seed) + "\n")
    return 0 if all(report.passed for _, report in results) else 1


def cmd_certify(args, out):
    config = load_config(args.config, n_jobs=args.n_jobs, progress=args.progress or None)
    caps = _parse_ints(args.caps, "--caps")
    init_time = time()
    certificate = injectivity_certificate(caps, cap_limit=config.cap_limit, n_jobs=config.n_jobs,
                                          progress=config.progress, dump=args.dump)
    print(f"Certificate time: {(time() - init_time) / 60:.2f} minutes", file=sys.stderr)
    if args.format == "structured":
        out.write(toml.dumps(certificate.to_structured()))
    else:
        out.write(certificate.summary() + "\n")
    return 0 if certificate.passed else 1


def cmd_eval(args, out):
    config = load_config(args.config, seed=args.seed)
    parsed = parse(args.expression)
    dims = _parse_ints(args.dims, "--dims")
    points = random_points(args.points, seed=config.seed)
    results = []
    for d in dims:
        rep = build_irrep(d)
        for k, p in enumerate(points):
            results.append((d, k, p, evaluate_expression(parsed.expr, rep, p)))
    if args.format == "structured":
        doc = {
            "command": "eval",
            "input": args.expression,
            "seed": config.seed,
            "results": [
                {
                    "d": d,
                    "point": [format_scalar(v) for v in p],
                    "matrix": [[format_scalar(entry) for entry in row] for row in matrix],
                }
                for d, _, p, matrix in results
            ],
        }
        out.write(toml.dumps(doc))
        return 0
    for d, k, p, matrix in results:
        out.write(f"d = {d}, point {k} (a, b, c) = {p}\n{render_matrix(matrix)}\n")
    return 0


def build_parser():
    parser = argparse.ArgumentParser(prog="racah-natural", description="Racah algebra and its embedding")
    parser.add_argument("--format", type=str, choices=FORMATS, required=False,
                        help="output format (overrides the config)")
    parser.add_argument("--seed", type=int, required=False, help="random seed (overrides the config)")
    parser.add_argument("--config", type=str, default="config_default", help="common config name or .toml path")
    parser.add_argument("--n_jobs", type=int, required=False, help="parallel workers (overrides the config)")
    parser.add_argument("--progress", action="store_true", help="show progress bars")
    parser.add_argument("--verbose", action="store_true", help="list passing checks too")
    sub = parser.add_subparsers(dest="verb", required=True)

    p = sub.add_parser("normalize", help="normal form of an expression")
    p.add_argument("expression")
    p.set_defaults(func=cmd_normalize)

    p = sub.add_parser("embed", help="image in F[a,b,c] ox U(sl2)")
    p.add_argument("expression")
    p.set_defaults(func=cmd_embed)

    p = sub.add_parser("grade", help="homogeneous components of the image")
    p.add_argument("expression")
    p.add_argument("--degree", type=int, required=False, help="degree of the component; all when omitted")
    p.set_defaults(func=cmd_grade)

    p = sub.add_parser("verify", help="run verification suites")
    p.add_argument("--suite", type=str, choices=SUITES + tuple(SELECTORS), required=False, metavar="SUITE",
                   help="suite name or statement selector; all suites when omitted")
    p.add_argument("--suite_config", type=str, default="config1", help="suite config name or .toml path")
    p.add_argument("--dims", type=str, required=False, help="module dimensions for the representations suite")
    p.add_argument("--points", type=int, required=False, help="evaluation points for the representations suite")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("certify", help="injectivity certificate")
    p.add_argument("--caps", type=str, required=True, help="i,j,k,l,r,s,t")
    p.add_argument("--dump", type=str, required=False, help="write the matrix as sparse triplets")
    p.set_defaults(func=cmd_certify)

    p = sub.add_parser("eval", help="evaluate in irreducible sl2-modules")
    p.add_argument("expression")
    p.add_argument("--dims", type=str, default="1,2,3", help="comma separated dimensions")
    p.add_argument("--points", type=int, default=1, help="number of random points")
    p.set_defaults(func=cmd_eval)
    return parser


def main(argv=None, out=None):
    out = out or sys.stdout
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        if args.format is None:
            args.format = load_config(args.config).format
        if args.format not in FORMATS:
            raise ValueError(f"unknown format {args.format!r} in config {args.config!r}")
        return args.func(args, out)
    except ParseError as err:
        print(f"parse error: {err}", file=sys.stderr)
        return 2
    except (CapLimitExceededError, ExponentOverflowError, ValueError, OSError) as err:
        print(f"error: {err}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
