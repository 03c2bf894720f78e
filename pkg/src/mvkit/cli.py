"""Command-line front end.

Exit codes: 0 success, 1 a verification failed or a property was falsified,
2 bad input or usage.
"""
from __future__ import annotations

import argparse
import contextlib
import sys
from pathlib import Path
from typing import Sequence, TextIO

from mvkit.algebra import (
    AlgebraError,
    FiniteMVAlgebra,
    derive_order,
    find_isomorphism,
    verify_mv_axioms,
    verify_wajsberg_axioms,
)
from mvkit.chains import make_chain
from mvkit.codes import (
    BinaryBlockCode,
    attach_code,
    build_boolean,
    check_matrix_recursion,
    code_matrix,
    code_to_boolean,
    is_boolean,
    min_distance,
)
from mvkit.fibonacci import (
    NonStationaryError,
    closed_form_term,
    fib_trace,
    lambda_table,
    pisano_period,
    recurrence_terms,
)
from mvkit.fileformat import format_algebra, format_code, load_algebra, parse_any, parse_code
from mvkit.structure import decompose, mv_shapes, product, proper_idempotent_count


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(f"{self.format_usage()}{self.prog}: error: {message}")


def _shape(shape) -> str:
    return "[" + ",".join(str(c) for c in shape) + "]"


def _read(path: str) -> str:
    return Path(path).read_text(encoding="utf-8")


def _emit(text: str, out_path: str | None, stdout: TextIO) -> None:
    if out_path:
        Path(out_path).write_text(text, encoding="utf-8")
    else:
        stdout.write(text)


def _valid_algebra(path: str, stdout: TextIO) -> FiniteMVAlgebra | None:
    a = load_algebra(path)
    report = verify_mv_axioms(a)
    if not report.passed:
        stdout.write("\n".join(report.lines("MV axioms")) + "\n")
        return None
    return a


def cmd_verify(args, stdout):
    result = parse_any(_read(args.file))
    if isinstance(result, FiniteMVAlgebra):
        report = verify_mv_axioms(result)
        title = "MV axioms"
    else:
        report = verify_wajsberg_axioms(result)
        title = "Wajsberg axioms"
    stdout.write("\n".join(report.lines(title)) + "\n")
    return 0 if report.passed else 1


def cmd_analyze(args, stdout):
    a = _valid_algebra(args.file, stdout)
    if a is None:
        return 1
    order = derive_order(a)
    lines = [
        "elements: " + " ".join(a.elements),
        f"zero: {a.name(a.zero)}",
        f"one: {a.name(a.one)}",
        "order: " + ("total" if order.is_total else "partial"),
        "booleans: " + " ".join(a.names(sorted(order.booleans))),
        f"proper idempotents: {proper_idempotent_count(a)}",
        "covers:",
        *(f"  {a.name(x)} < {a.name(y)}" for x, y in order.covers()),
        "shape: " + _shape(decompose(a).shape),
    ]
    stdout.write("\n".join(lines) + "\n")
    return 0


def cmd_fib(args, stdout):
    a = _valid_algebra(args.file, stdout)
    if a is None:
        return 1
    x, y = a.index(args.x), a.index(args.y)
    try:
        trace = fib_trace(a, x, y)
    except NonStationaryError as exc:
        stdout.write(f"falsified: {exc}\n")
        return 1
    stdout.write(trace.report(a))
    if not args.closed_form:
        return 0
    count = max(16, len(trace.terms))
    rec = recurrence_terms(a, x, y, count)
    status = 0
    stdout.write("closed form:\n")
    for n, u in enumerate(rec):
        cf = closed_form_term(a, x, y, n)
        mark = "ok" if cf == u else "MISMATCH"
        if cf != u:
            status = 1
        stdout.write(f"u_{n} = {a.name(u)} {a.name(cf)} {mark}\n")
    return status


def cmd_lambda(args, stdout):
    a = _valid_algebra(args.file, stdout)
    if a is None:
        return 1
    try:
        _, limit = lambda_table(a)
    except NonStationaryError as exc:
        stdout.write(f"falsified: {exc}\n")
        return 1
    stdout.write("lambda " + " ".join(a.elements) + "\n")
    for x in range(a.n):
        stdout.write(a.name(x) + " " + " ".join(a.name(int(v)) for v in limit[x]) + "\n")
    return 0


def cmd_chain(args, stdout):
    _emit(format_algebra(make_chain(args.n)), args.output, stdout)
    return 0


def cmd_boolean(args, stdout):
    _emit(format_algebra(build_boolean(args.k)), args.output, stdout)
    return 0


def cmd_product(args, stdout):
    a, b = load_algebra(args.first), load_algebra(args.second)
    _emit(format_algebra(product(a, b)), args.output, stdout)
    return 0


def cmd_decompose(args, stdout):
    a = _valid_algebra(args.file, stdout)
    if a is None:
        return 1
    stdout.write(decompose(a).report())
    return 0


def cmd_enumerate(args, stdout):
    shapes = mv_shapes(args.n)
    for shape in shapes:
        stdout.write(_shape(shape) + "\n")
    stdout.write(f"count: {len(shapes)}\n")
    return 0


def cmd_iso(args, stdout):
    a = _valid_algebra(args.first, stdout)
    b = _valid_algebra(args.second, stdout)
    if a is None or b is None:
        return 1
    f = find_isomorphism(a, b)
    if f is None:
        stdout.write("not isomorphic\n")
        return 1
    for x, y in f.items():
        stdout.write(f"{a.name(x)} -> {b.name(y)}\n")
    return 0


def _load_code(path: str) -> BinaryBlockCode:
    return BinaryBlockCode(tuple(parse_code(_read(path))))


def cmd_code_attach(args, stdout):
    a = _valid_algebra(args.file, stdout)
    if a is None:
        return 1
    code = attach_code(a)
    comment = None if is_boolean(a) else "warning: algebra is not Boolean; code may not invert"
    _emit(format_code(code.codewords, comment), args.output, stdout)
    return 0


def cmd_code_matrix(args, stdout):
    stdout.write(code_matrix(_load_code(args.codefile)).format())
    return 0


def cmd_code_check(args, stdout):
    code = _load_code(args.codefile)
    ok = len(code) == code.length and check_matrix_recursion(code_matrix(code))
    stdout.write(f"conforming: {'yes' if ok else 'no'}\n")
    return 0 if ok else 1


def cmd_code_to_algebra(args, stdout):
    a = code_to_boolean(_load_code(args.codefile))
    _emit(format_algebra(a), args.output, stdout)
    return 0


def cmd_code_mindist(args, stdout):
    stdout.write(f"{min_distance(_load_code(args.codefile))}\n")
    return 0


def cmd_pisano(args, stdout):
    if args.m < 1:
        raise AlgebraError("modulus must be at least 1")
    stdout.write(f"{pisano_period(args.m)}\n")
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="mvkit", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def add(name, func, help_):
        p = sub.add_parser(name, help=help_)
        p.set_defaults(func=func)
        return p

    add("verify", cmd_verify, "check MV or Wajsberg axioms").add_argument("file")
    add("analyze", cmd_analyze, "order, Boolean elements and shape").add_argument("file")
    p = add("fib", cmd_fib, "Fibonacci trace of <x, y>")
    p.add_argument("file")
    p.add_argument("x")
    p.add_argument("y")
    p.add_argument("--closed-form", action="store_true")
    add("lambda", cmd_lambda, "limit of every Fibonacci sequence").add_argument("file")
    p = add("chain", cmd_chain, "write the n-element chain")
    p.add_argument("n", type=int)
    p.add_argument("-o", "--output")
    p = add("boolean", cmd_boolean, "write the Boolean algebra of order 2^k")
    p.add_argument("k", type=int)
    p.add_argument("-o", "--output")
    p = add("product", cmd_product, "write the direct product of two algebras")
    p.add_argument("first")
    p.add_argument("second")
    p.add_argument("-o", "--output")
    add("decompose", cmd_decompose, "product-of-chains decomposition").add_argument("file")
    add("enumerate", cmd_enumerate, "MV-algebras of order n up to isomorphism").add_argument(
        "n", type=int
    )
    p = add("iso", cmd_iso, "find an isomorphism")
    p.add_argument("first")
    p.add_argument("second")

    code = sub.add_parser("code", help="binary block codes")
    csub = code.add_subparsers(dest="code_command", required=True, parser_class=_Parser)
    p = csub.add_parser("attach", help="code attached to an algebra")
    p.add_argument("file")
    p.add_argument("-o", "--output")
    p.set_defaults(func=cmd_code_attach)
    p = csub.add_parser("matrix", help="print the code matrix")
    p.add_argument("codefile")
    p.set_defaults(func=cmd_code_matrix)
    p = csub.add_parser("check", help="check the recursive block form")
    p.add_argument("codefile")
    p.set_defaults(func=cmd_code_check)
    p = csub.add_parser("to-algebra", help="rebuild the Boolean algebra of a code")
    p.add_argument("codefile")
    p.add_argument("-o", "--output")
    p.set_defaults(func=cmd_code_to_algebra)
    p = csub.add_parser("mindist", help="minimum Hamming distance")
    p.add_argument("codefile")
    p.set_defaults(func=cmd_code_mindist)

    add("pisano", cmd_pisano, "Pisano period of m").add_argument("m", type=int)
    return parser


def run(
    argv: Sequence[str],
    stdin: TextIO | None = None,
    stdout: TextIO | None = None,
    stderr: TextIO | None = None,
) -> int:
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    parser = build_parser()
    try:
        with contextlib.redirect_stdout(stdout), contextlib.redirect_stderr(stderr):
            args = parser.parse_args(list(argv))
    except UsageError as exc:
        stderr.write(f"{exc}\n")
        return 2
    except SystemExit as exc:  # --help
        return int(exc.code or 0)
    try:
        return args.func(args, stdout)
    except (AlgebraError, OSError, ValueError) as exc:
        stderr.write(f"error: {exc}\n")
        return 2


def main() -> None:
    sys.exit(run(sys.argv[1:]))


if __name__ == "__main__":
    main()
