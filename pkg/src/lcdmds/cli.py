"""Command-line front end.

Subcommands: field, construct, plan {dim-t, rate-t, family}, encode,
decode, verify.  Reports go to stdout as ``key: value`` lines, or as one
JSON document with ``--json``.

Exit codes: 0 success, 2 usage, 3 mathematical impossibility,
4 verification failure, 5 decode failure.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from . import codec, oracle
from .construction import (
    DEFAULT_CHARS,
    build_code,
    candidate_fields,
    parse_rate,
    plan_dim_capability,
    plan_family,
    plan_prime_family,
    plan_rate_capability,
    primes_1_mod_4,
    select,
)
from .errors import DomainError, LcdMdsError, ResourceError, UsageError
from .finite_field import (
    FieldSpec,
    element_of_order,
    root_of_unity,
    smallest_extension,
    smallest_prime_field,
)
from .fourier import FourierMatrix
from .specfile import dumps, dumps_code, load_code, load_plan, plan_to_dict

EXIT_OK, EXIT_USAGE, EXIT_MATH, EXIT_VERIFY, EXIT_DECODE = 0, 2, 3, 4, 5


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def _int_list(text: str) -> list[int]:
    parts = [t for t in text.replace(",", " ").split() if t]
    try:
        return [int(t) for t in parts]
    except ValueError as exc:
        raise UsageError(f"expected integers, got {text!r}") from exc


def _symbols(args, inline: str | None) -> list[int]:
    if inline is not None:
        return _int_list(inline)
    if args.input:
        return _int_list(Path(args.input).read_text(encoding="utf-8"))
    raise UsageError("give the symbols inline or with --input FILE")


def _fmt(v) -> str:
    if isinstance(v, (list, tuple)):
        return ",".join(str(x) for x in v)
    return str(v)


def _field_name(p: int, m: int) -> str:
    return f"GF({p})" if m == 1 else f"GF({p}^{m})"


class Report:
    """Ordered key/value report printed as lines or JSON."""

    def __init__(self, as_json: bool):
        self.as_json = as_json
        self.items: dict = {}

    def add(self, key: str, value) -> None:
        self.items[key] = value

    def emit(self, out=None) -> None:
        out = out or sys.stdout
        if self.as_json:
            out.write(json.dumps(self.items, indent=2) + "\n")
            return
        for k, v in self.items.items():
            if isinstance(v, list) and v and isinstance(v[0], dict):
                for i, item in enumerate(v):
                    out.write(f"{k}[{i}]: " + "; ".join(f"{a}={_fmt(b)}" for a, b in item.items()) + "\n")
            else:
                out.write(f"{k}: {_fmt(v)}\n")


# -- field --------------------------------------------------------------------

def cmd_field(args, rep: Report) -> int:
    p, n = args.char, args.order
    beta = smallest_extension(p, n)
    ext = FieldSpec.gf(p, beta)
    w = element_of_order(ext, n)
    rep.add("order", n)
    rep.add("extension", _field_name(p, beta))
    rep.add("extension_degree", beta)
    rep.add("extension_modulus", list(ext.modulus))
    rep.add("extension_omega", w.value)
    rep.add("extension_omega_poly", ext.format_element(w.value))
    q = smallest_prime_field(n)
    wq = element_of_order(FieldSpec.gf(q), n)
    rep.add("prime_field", _field_name(q, 1))
    rep.add("prime_field_omega", wq.value)
    return EXIT_OK


# -- construct ------------------------------------------------------------------

def _choose_field(n: int, args) -> FieldSpec:
    if args.prime is not None:
        field = FieldSpec.gf(args.prime)
        if (field.q - 1) % n:
            raise DomainError(f"GF({args.prime}) has no element of order {n}")
        return field
    if args.char is not None:
        return FieldSpec.gf(args.char, smallest_extension(args.char, n))
    return FieldSpec.gf(smallest_prime_field(n))


def cmd_construct(args, rep: Report) -> int:
    n, dim = args.n, args.dim
    if args.from_plan:
        plan = load_plan(args.from_plan)
        n, dim = plan["n"], plan["dim"]
    if n is None or dim is None:
        raise UsageError("construct needs --n and --dim (or --from-plan)")
    sel = select(n, dim, args.step)
    field = _choose_field(n, args)
    omega = element_of_order(field, n) if args.omega is None else root_of_unity(field, args.omega, n)
    code = build_code(FourierMatrix(field, omega), sel)
    ok, r = oracle.lcd_certificate(code)
    rep.add("code", [code.n, code.dim, code.d])
    rep.add("n", code.n)
    rep.add("dim", code.dim)
    rep.add("d", code.d)
    rep.add("t", code.t)
    rep.add("field", repr(field))
    rep.add("omega", omega.value)
    rep.add("step", sel.step)
    rep.add("rows", code.indices)
    rep.add("dual_rows", code.dual_indices)
    rep.add("lcd", "pass" if ok else "fail")
    rep.add("lcd_rank", r)
    rep.add("field_options", [_field_name(p, b) for p, b in candidate_fields(n, args.chars)])
    if args.output:
        Path(args.output).write_text(dumps_code(code), encoding="utf-8")
        rep.add("written", args.output)
    return EXIT_OK


# -- plan -------------------------------------------------------------------------

def _emit_plans(plans, args, rep: Report) -> None:
    rep.add("plans", [_plan_row(p) for p in plans])
    if args.emit:
        out = Path(args.emit)
        out.mkdir(parents=True, exist_ok=True)
        written = []
        for p in plans:
            path = out / f"plan_{p.n}_{p.dim}.json"
            path.write_text(dumps(plan_to_dict(p)), encoding="utf-8")
            written.append(str(path))
        rep.add("emitted", written)


def _plan_row(p) -> dict:
    return {
        "n": p.n, "dim": p.dim, "d": p.d, "t": p.t,
        "rate": f"{p.rate_actual.numerator}/{p.rate_actual.denominator}",
        "fields": [_field_name(a, b) for a, b in p.candidate_fields],
        "notes": " | ".join(p.notes),
    }


def cmd_plan(args, rep: Report) -> int:
    kind = args.plan_kind
    if kind == "dim-t":
        plans = [plan_dim_capability(args.dim, args.errors, args.chars)]
    elif kind == "rate-t":
        plans = [plan_rate_capability(args.rate, args.errors, args.chars)]
    else:
        if args.primes_1mod4 or args.primes:
            primes = args.primes or primes_1_mod_4(args.count)
            rule = args.rule or ("floor_odd" if args.primes_1mod4 else "paired")
            plans = plan_prime_family(args.rate, primes, rule)
        else:
            plans = plan_family(args.rate, args.count, args.char)
    rep.add("kind", kind)
    _emit_plans(plans, args, rep)
    return EXIT_OK


# -- encode / decode / verify -------------------------------------------------

def cmd_encode(args, rep: Report) -> int:
    code = load_code(args.spec)
    msg = _symbols(args, args.message)
    rep.add("message", msg)
    rep.add("codeword", codec.encode(code, msg))
    return EXIT_OK


def cmd_decode(args, rep: Report) -> int:
    code = load_code(args.spec)
    word = _symbols(args, args.word)
    result = codec.decode(code, word)
    for k, v in result.to_dict().items():
        rep.add(k, v if v is not None else "")
    return EXIT_OK if result.ok else EXIT_DECODE


def cmd_verify(args, rep: Report) -> int:
    code = load_code(args.spec)
    checks = []
    run_all = not (args.brute_distance or args.mds_minors or args.lcd)
    if args.lcd or run_all:
        checks.append(oracle.lcd_rank(code))
    if args.mds_minors or run_all:
        checks.append(oracle.mds_minors(code, sample=args.sample))
    if args.brute_distance:
        checks.append(oracle.certify_distance(code, budget=args.budget))
    rep.add("code", [code.n, code.dim, code.d])
    for cert in checks:
        rep.add(cert.kind, "pass" if cert.verdict else "fail")
        if cert.kind == "distance":
            rep.add("d", cert.evidence["d"])
            rep.add("distance_witness", cert.evidence["witness"])
        elif cert.kind == "lcd_rank":
            rep.add("lcd_rank_value", cert.evidence["rank"])
        elif cert.kind == "mds_minors":
            rep.add("mds_minors_tested", cert.evidence["tested"])
            if not cert.verdict:
                rep.add("mds_singular_columns", cert.evidence["singular_columns"])
    ok = all(c.verdict for c in checks)
    rep.add("verdict", "pass" if ok else "fail")
    return EXIT_OK if ok else EXIT_VERIFY


# -- parser -----------------------------------------------------------------------

def _chars(text: str) -> tuple[int, ...]:
    return tuple(_int_list(text))


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="lcdmds", description="LCD MDS codes from Fourier matrices")
    parser.add_argument("--json", action="store_true", help="machine-readable report")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    f = sub.add_parser("field", help="smallest fields with an element of a given order")
    f.add_argument("--char", type=int, required=True)
    f.add_argument("--order", type=int, required=True)
    f.set_defaults(func=cmd_field)

    c = sub.add_parser("construct", help="build a code and write its spec file")
    c.add_argument("--n", type=int)
    c.add_argument("--dim", type=int)
    c.add_argument("--step", type=int, default=1)
    grp = c.add_mutually_exclusive_group()
    grp.add_argument("--char", type=int, help="smallest extension field of this characteristic")
    grp.add_argument("--prime", type=int, help="use the prime field GF(PRIME)")
    c.add_argument("--omega", type=int, help="root of unity to use instead of the derived one")
    c.add_argument("--chars", type=_chars, default=DEFAULT_CHARS,
                   help="characteristics listed among field options (default 2,3)")
    c.add_argument("--from-plan", help="take n and dim from a plan file")
    c.add_argument("-o", "--output", help="write the code spec file here")
    c.set_defaults(func=cmd_construct)

    p = sub.add_parser("plan", help="parameter planners")
    psub = p.add_subparsers(dest="plan_kind", required=True, parser_class=_Parser)
    pd = psub.add_parser("dim-t", help="shortest code for a dimension and error target")
    pd.add_argument("--dim", type=int, required=True)
    pd.add_argument("--errors", type=int, required=True)
    pr = psub.add_parser("rate-t", help="code at a rate correcting at least t errors")
    pr.add_argument("--rate", type=parse_rate, required=True)
    pr.add_argument("--errors", type=int, required=True)
    pf = psub.add_parser("family", help="series of codes at a fixed rate")
    pf.add_argument("--rate", type=parse_rate, required=True)
    pf.add_argument("--count", type=int, default=5)
    pf.add_argument("--char", type=int, help="restrict to one characteristic")
    pf.add_argument("--primes-1mod4", action="store_true",
                    help="length p-1 codes over GF(p) for the primes 1 mod 4")
    pf.add_argument("--primes", type=_int_list, help="explicit primes for a prime-field family")
    pf.add_argument("--rule", choices=("paired", "floor_odd"),
                    help="odd-dimension rounding for prime families")
    for sp in (pd, pr, pf):
        sp.add_argument("--emit", help="directory for ready-to-construct plan files")
        sp.add_argument("--chars", type=_chars, default=DEFAULT_CHARS)
    p.set_defaults(func=cmd_plan)

    e = sub.add_parser("encode", help="encode a message")
    e.add_argument("spec")
    e.add_argument("--message", help="comma-separated symbols")
    e.add_argument("--input", help="file of symbols")
    e.set_defaults(func=cmd_encode)

    d = sub.add_parser("decode", help="decode a received word")
    d.add_argument("spec")
    d.add_argument("--word", help="comma-separated symbols")
    d.add_argument("--input", help="file of symbols")
    d.set_defaults(func=cmd_decode)

    v = sub.add_parser("verify", help="re-certify a code spec file")
    v.add_argument("spec")
    v.add_argument("--brute-distance", action="store_true")
    v.add_argument("--budget", type=int, default=oracle.DEFAULT_BUDGET)
    v.add_argument("--mds-minors", action="store_true")
    v.add_argument("--sample", type=int, default=1000)
    v.add_argument("--lcd", action="store_true")
    v.set_defaults(func=cmd_verify)
    return parser


def main(argv=None) -> int:
    as_json = False
    try:
        args = build_parser().parse_args(argv)
        as_json = args.json
        rep = Report(as_json)
        code = args.func(args, rep)
        rep.emit()
        return code
    except UsageError as exc:
        status = EXIT_USAGE
        msg = str(exc)
    except (DomainError, ResourceError) as exc:
        status = EXIT_MATH
        msg = str(exc)
    except LcdMdsError as exc:
        status = EXIT_VERIFY
        msg = str(exc)
    if as_json:
        sys.stdout.write(json.dumps({"error": msg, "exit_code": status}) + "\n")
    print(f"lcdmds: error: {msg}", file=sys.stderr)
    return status


if __name__ == "__main__":
    sys.exit(main())
