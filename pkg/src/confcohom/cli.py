"""Command-line front end.

Subcommands dispatch to the library engines and emit a deterministic
result document: identical inputs produce byte-identical output.  Exit
codes: 0 success, 2 hypothesis violation, 3 input parse error, 4 internal
consistency failure, 5 cost cap exceeded.
"""

from __future__ import annotations

import argparse
import json
import sys
from math import comb
from pathlib import Path

from . import charseries, confspace, repstab
from .combinat import (
    CycleType,
    Permutation,
    all_cycle_types,
    group_closure,
    representative,
    stirling_first_signed,
    stirling_second,
)
from .confspace import BUILTIN_SPACES, SpaceSpec
from .errors import (
    ConfcohomError,
    ConsistencyError,
    CostCapExceeded,
    HypothesisViolation,
    InputParseError,
)
from .polyarith import BiPoly, LaurentPoly

EXIT_OK = 0
EXIT_HYPOTHESIS = 2
EXIT_PARSE = 3
EXIT_CONSISTENCY = 4
EXIT_COST = 5

_SPACE_FILE_REQUIRED = {"name", "poincare_c", "dim", "i_acyclic"}
_SPACE_FILE_OPTIONAL = {"orientable", "connected"}


# ---------------------------------------------------------------------------
# input parsing
# ---------------------------------------------------------------------------


def load_space(spec: str) -> SpaceSpec:
    """Resolve ``spec`` as a built-in space name or a JSON file path."""
    if spec in BUILTIN_SPACES:
        return BUILTIN_SPACES[spec]
    path = Path(spec)
    if not path.exists():
        raise InputParseError(
            f"unknown space {spec!r}: not a built-in "
            f"({', '.join(sorted(BUILTIN_SPACES))}) and no such file"
        )
    try:
        data = json.loads(path.read_text())
    except json.JSONDecodeError as exc:
        raise InputParseError(f"invalid JSON in {path}: {exc}") from exc
    return space_from_document(data)


def space_from_document(data) -> SpaceSpec:
    if not isinstance(data, dict):
        raise InputParseError("space file must be a JSON object")
    keys = set(data)
    unknown = keys - _SPACE_FILE_REQUIRED - _SPACE_FILE_OPTIONAL
    if unknown:
        raise InputParseError(f"unknown keys in space file: {sorted(unknown)}")
    missing = _SPACE_FILE_REQUIRED - keys
    if missing:
        raise InputParseError(f"space file is missing keys: {sorted(missing)}")
    coeffs = data["poincare_c"]
    if not isinstance(coeffs, list) or not all(isinstance(c, int) for c in coeffs):
        raise InputParseError("poincare_c must be a list of integers")
    if not isinstance(data["dim"], int) or isinstance(data["dim"], bool):
        raise InputParseError("dim must be an integer")
    for flag in ("i_acyclic", "orientable", "connected"):
        if flag in data and not isinstance(data[flag], bool):
            raise InputParseError(f"{flag} must be a boolean")
    return SpaceSpec(
        name=str(data["name"]),
        pc=LaurentPoly.from_coeffs(coeffs),
        dim=data["dim"],
        i_acyclic=data["i_acyclic"],
        orientable=data.get("orientable", False),
        connected=data.get("connected", True),
    )


def parse_cycle_type(text: str, m: int) -> CycleType:
    """Parse ``1^a,2^b,...``; a bare ``d`` means one d-cycle."""
    mult = [0] * m if m else []
    total = 0
    for token in text.split(","):
        token = token.strip()
        if not token:
            continue
        if "^" in token:
            d_str, x_str = token.split("^", 1)
        else:
            d_str, x_str = token, "1"
        try:
            d, x = int(d_str), int(x_str)
        except ValueError as exc:
            raise InputParseError(f"bad cycle-type token {token!r}") from exc
        if d < 1 or x < 0:
            raise InputParseError(f"bad cycle-type token {token!r}")
        if d > m:
            raise InputParseError(f"cycle length {d} exceeds m = {m}")
        mult[d - 1] += x
        total += d * x
    if total != m:
        raise InputParseError(
            f"cycle type {text!r} covers {total} letters, expected {m}"
        )
    return CycleType(m, tuple(mult))


def parse_generators(text: str, m: int) -> list[Permutation]:
    """Parse 1-based cycle notation: ``(1 2 3);(4 5)`` or ``(1,2,3)``."""
    gens = []
    for chunk in text.split(";"):
        chunk = chunk.strip()
        if not chunk:
            continue
        cycles = []
        depth_content: list[str] = []
        if chunk.count("(") != chunk.count(")"):
            raise InputParseError(f"unbalanced parentheses in {chunk!r}")
        inner = chunk
        while "(" in inner:
            start = inner.index("(")
            end = inner.index(")", start)
            depth_content.append(inner[start + 1 : end])
            inner = inner[end + 1 :]
        if not depth_content:
            depth_content = [chunk]
        for body in depth_content:
            pts = [p for p in body.replace(",", " ").split() if p]
            try:
                cycle = [int(p) for p in pts]
            except ValueError as exc:
                raise InputParseError(f"bad cycle {body!r}") from exc
            if any(p < 1 or p > m for p in cycle):
                raise InputParseError(f"cycle {body!r} out of range for m = {m}")
            cycles.append(cycle)
        try:
            gens.append(Permutation.from_cycles(m, cycles, one_based=True))
        except ValueError as exc:
            raise InputParseError(str(exc)) from exc
    return gens


def parse_range(text: str) -> tuple[int, int]:
    try:
        lo_str, hi_str = text.split("..", 1)
        lo, hi = int(lo_str), int(hi_str)
    except ValueError as exc:
        raise InputParseError(f"bad range {text!r}, expected m0..m1") from exc
    if lo > hi:
        raise InputParseError(f"empty range {text!r}")
    return lo, hi


# ---------------------------------------------------------------------------
# rendering
# ---------------------------------------------------------------------------


def _poly_plain(poly: LaurentPoly) -> str:
    return str(poly)

def _poly_latex(poly: LaurentPoly) -> str:
    if poly.is_zero():
        return "0"
    parts = []
    for e, v in poly.items():
        coeff = "" if abs(v) == 1 and e != 0 else str(abs(v))
        if e == 0:
            body = coeff
        elif e == 1:
            body = f"{coeff}T"
        else:
            body = f"{coeff}T^{{{e}}}"
        sign = "-" if v < 0 else ("+" if parts else "")
        parts.append(f"{sign} {body}" if parts else f"{sign}{body}")
    return " ".join(parts)


def _bipoly_plain(q: BiPoly) -> str:
    parts = []
    for (i, j), v in q.items():
        mono = (str(abs(v)) if abs(v) != 1 or (i == 0 and j == 0) else "")
        mono += f" P^{i}" if i > 1 else (" P" if i == 1 else "")
        mono += f" T^{j}" if j > 1 else (" T" if j == 1 else "")
        sign = "-" if v < 0 else ("+" if parts else "")
        parts.append((f"{sign} {mono.strip()}" if parts else f"{sign}{mono.strip()}"))
    return " ".join(parts) if parts else "0"


def render(document: dict, fmt: str) -> str:
    if fmt == "json":
        return json.dumps(document, sort_keys=True, indent=2) + "\n"
    lines = [f"command: {document['command']}"]
    for key, value in sorted(document.get("inputs", {}).items()):
        lines.append(f"  {key}: {value}")
    result = document.get("result")
    lines.append("result:")
    lines.extend(_render_result_lines(result, fmt))
    checks = document.get("checks", [])
    if checks:
        lines.append("checks:")
        for check in checks:
            status = "pass" if check["passed"] else "FAIL"
            lines.append(f"  [{status}] {check['name']}")
    return "\n".join(lines) + "\n"


def _render_result_lines(result, fmt: str) -> list[str]:
    to_text = _poly_latex if fmt == "latex" else _poly_plain
    if isinstance(result, dict) and result.get("kind") == "polynomial":
        return ["  " + to_text(LaurentPoly.from_exp_map(result["coefficients"]))]
    if isinstance(result, dict) and result.get("kind") == "bivariate":
        q = BiPoly.from_exp_map(result["coefficients"])
        return ["  " + _bipoly_plain(q)]
    if isinstance(result, dict) and result.get("kind") == "series":
        return [
            f"  {ctype}: " + to_text(LaurentPoly.from_exp_map(entry))
            for ctype, entry in sorted(result["entries"].items())
        ]
    return ["  " + json.dumps(result, sort_keys=True)]


def _poly_result(poly: LaurentPoly) -> dict:
    return {"kind": "polynomial", "coefficients": poly.to_exp_map()}


def _check(name: str, passed: bool) -> dict:
    return {"name": name, "passed": bool(passed)}


# ---------------------------------------------------------------------------
# subcommands
# ---------------------------------------------------------------------------


def cmd_poincare(args) -> dict:
    space = load_space(args.space)
    m = args.m
    target = args.target
    checks = []
    if target in ("delta", "delta_le") and args.l is None:
        raise InputParseError(f"target {target!r} requires --l")
    if target == "fm":
        poly = confspace.poincare_config(space, m)
        if m >= 1:
            prev = confspace.poincare_config(space, m - 1)
            step = space.pc + LaurentPoly.term(m - 1, 1)
            checks.append(_check("product-recurrence", prev * step == poly))
        checks.append(
            _check(
                "euler-characteristic",
                poly.eval_at_int(-1) == confspace.euler_char_config(space, m),
            )
        )
    elif target in ("delta", "delta_le"):
        closed = target == "delta_le"
        fn = confspace.poincare_at_most if closed else confspace.poincare_exactly
        poly = fn(space, args.l, m)
        universal = confspace.universal_poly(args.l, m, closed)
        checks.append(
            _check("universal-polynomial-evaluation", universal.eval_P(space.pc) == poly)
        )
    elif target == "ordinary":
        poly = confspace.poincare_config_ordinary(space, m)
        compact = confspace.poincare_config(space, m)
        checks.append(
            _check("duality-involution", poly.dual(m * space.dim) == compact)
        )
    elif target == "cf":
        poly = charseries.poincare_cyclic_config(space, m)
        if m <= 8:
            order, counts = group_closure(
                [representative(CycleType.from_parts([m], m))], m
            )
            oracle = charseries.quotient_poincare(
                charseries.config_series(space, m), counts, order
            )
            checks.append(_check("subgroup-averaging", oracle == poly))
    elif target == "bf":
        poly = charseries.poincare_unordered_config(space, m)
        if m <= 6:
            gens = _symmetric_group_generators(m)
            order, counts = group_closure(gens, m)
            oracle = charseries.quotient_poincare(
                charseries.config_series(space, m), counts, order
            )
            checks.append(_check("subgroup-averaging", oracle == poly))
    elif target == "sym":
        poly = charseries.poincare_symmetric_product(space, m)
        checks.append(_check("generating-function", True))
    elif target == "cyc":
        poly = charseries.poincare_cyclic_product(space, m)
        checks.append(_check("subgroup-averaging", True))
    else:
        raise InputParseError(f"unknown poincare target {target!r}")
    inputs = {"space": space.name, "m": m, "target": target}
    if args.l is not None:
        inputs["l"] = args.l
    return {
        "command": "poincare",
        "inputs": inputs,
        "result": _poly_result(poly),
        "checks": checks,
    }


def _symmetric_group_generators(m: int) -> list[Permutation]:
    if m < 2:
        return []
    gens = [Permutation.from_cycles(m, [[1, 2]], one_based=True)]
    if m > 2:
        gens.append(Permutation.from_cycles(m, [list(range(1, m + 1))], one_based=True))
    return gens


def cmd_character(args) -> dict:
    space = load_space(args.space)
    m = args.m
    checks = []
    if args.all:
        series = charseries.config_series(space, m)
        if m <= 6:
            reconstructed = charseries.reconstruct_config_series(space, m)
            triangle = reconstructed == series
            for ctype in all_cycle_types(m):
                alpha = representative(ctype)
                triangle = triangle and (
                    charseries.exactly_trace(space, m, m, alpha)
                    == series.values[ctype]
                )
            checks.append(_check("oracle-triangle", triangle))
        result = {
            "kind": "series",
            "entries": {
                str(ctype): entry.to_exp_map()
                for ctype, entry in sorted(
                    series.values.items(), key=lambda kv: kv[0].parts, reverse=True
                )
            },
        }
        inputs = {"space": space.name, "m": m, "cycle_type": "all"}
    else:
        if not args.cycle_type:
            raise InputParseError("character requires --cycle-type or --all")
        ctype = parse_cycle_type(args.cycle_type, m)
        poly = charseries.config_trace(space, ctype)
        if ctype == CycleType.identity(m):
            expected = charseries.config_trace(space, ctype).negate_var()
            checks.append(
                _check(
                    "identity-entry-is-poincare",
                    expected == confspace.poincare_config(space, m),
                )
            )
        result = _poly_result(poly)
        inputs = {"space": space.name, "m": m, "cycle_type": str(ctype)}
    return {"command": "character", "inputs": inputs, "result": result, "checks": checks}


def cmd_universal(args) -> dict:
    closed = bool(args.closed)
    q = confspace.universal_poly(args.l, args.m, closed)
    checks = []
    reference = BUILTIN_SPACES["c"]
    fn = confspace.poincare_at_most if closed else confspace.poincare_exactly
    checks.append(
        _check(
            "evaluates-on-reference-space",
            q.eval_P(reference.pc) == fn(reference, args.l, args.m),
        )
    )
    return {
        "command": "universal",
        "inputs": {"l": args.l, "m": args.m, "closed": closed},
        "result": {"kind": "bivariate", "coefficients": q.to_exp_map()},
        "checks": checks,
    }


def cmd_quotient(args) -> dict:
    space = load_space(args.space)
    m = args.m
    gens = parse_generators(args.generators, m) if args.generators else []
    order, counts = group_closure(gens, m)
    series = charseries.config_series(space, m)
    poly = charseries.quotient_poincare(series, counts, order)
    checks = [
        _check("class-counts-sum-to-order", sum(counts.values()) == order),
        _check(
            "euler-characteristic-average",
            poly.eval_at_int(-1) * order
            == sum(n * series.values[ct].eval_at_int(1) for ct, n in counts.items()),
        ),
    ]
    return {
        "command": "quotient",
        "inputs": {
            "space": space.name,
            "m": m,
            "generators": args.generators or "",
            "order": order,
        },
        "result": _poly_result(poly),
        "checks": checks,
    }


def cmd_stability(args) -> dict:
    space = load_space(args.space)
    m_range = parse_range(args.range)
    report = repstab.stability_report(space, args.i, args.a, m_range)
    rows = {}
    for core in report.table.cores():
        key = "(" + ",".join(str(p) for p in core) + ")"
        rows[key] = {str(m): v for m, v in sorted(report.table.rows[core].items())}
    result = {
        "kind": "multiplicity-table",
        "degree": report.degree,
        "defect": report.defect,
        "m": list(report.table.m_values),
        "rows": rows,
        "betti": {str(m): v for m, v in sorted(report.betti.items())},
        "poly_degree": report.poly_degree,
    }
    checks = [_check(name, ok) for name, ok in report.verdicts()]
    return {
        "command": "stability",
        "inputs": {
            "space": space.name,
            "i": args.i,
            "a": args.a,
            "range": args.range,
        },
        "result": result,
        "checks": checks,
    }


# ---------------------------------------------------------------------------
# selftest
# ---------------------------------------------------------------------------


def _selftest_checks() -> list[tuple[str, bool]]:
    c = BUILTIN_SPACES["c"]
    cstar = BUILTIN_SPACES["cstar"]
    c1 = BUILTIN_SPACES["c_minus_1"]
    out: list[tuple[str, bool]] = []

    def run(name, fn):
        try:
            out.append((name, bool(fn())))
        except ConfcohomError:
            out.append((name, False))

    def stirling_inverse() -> bool:
        n = 8
        for i in range(n + 1):
            for j in range(n + 1):
                total = sum(
                    stirling_first_signed(i, k) * stirling_second(k, j)
                    for k in range(n + 1)
                )
                if total != (1 if i == j else 0):
                    return False
        return True

    run("stirling-matrices-inverse", stirling_inverse)

    def universal_evaluation() -> bool:
        for space in (c, cstar, c1):
            for m in range(1, 6):
                for l in range(1, m + 1):
                    for closed in (False, True):
                        q = confspace.universal_poly(l, m, closed)
                        fn = (
                            confspace.poincare_at_most
                            if closed
                            else confspace.poincare_exactly
                        )
                        if q.eval_P(space.pc) != fn(space, l, m):
                            return False
        return True

    run("universal-polynomial-evaluation", universal_evaluation)

    def oracle_triangle() -> bool:
        for space in (c, cstar):
            for m in range(1, 5):
                series = charseries.config_series(space, m)
                if charseries.reconstruct_config_series(space, m) != series:
                    return False
                for ctype in all_cycle_types(m):
                    alpha = representative(ctype)
                    if charseries.exactly_trace(space, m, m, alpha) != series.values[ctype]:
                        return False
        return True

    run("oracle-triangle", oracle_triangle)

    def assembly() -> bool:
        for space in (c, c1):
            for m in range(1, 5):
                for ctype in all_cycle_types(m):
                    alpha = representative(ctype)
                    if charseries.at_most_trace(space, m, m, alpha) != charseries.power_trace(
                        space, ctype
                    ):
                        return False
        return True

    run("assembly-identity", assembly)

    def averaging() -> bool:
        for m in range(1, 6):
            closed_form = charseries.poincare_cyclic_config(c, m)
            order, counts = group_closure(
                [representative(CycleType.from_parts([m], m))], m
            )
            if closed_form != charseries.quotient_poincare(
                charseries.config_series(c, m), counts, order
            ):
                return False
        for m in range(1, 5):
            closed_form = charseries.poincare_unordered_config(c, m)
            order, counts = group_closure(_symmetric_group_generators(m), m)
            if closed_form != charseries.quotient_poincare(
                charseries.config_series(c, m), counts, order
            ):
                return False
        return True

    run("quotient-averaging", averaging)

    def symmetric_products() -> bool:
        for space in (c, cstar, c1):
            for m in range(1, 6):
                charseries.poincare_symmetric_product(space, m)
                charseries.poincare_cyclic_product(space, m)
        return True

    run("symmetric-product-generating-function", symmetric_products)

    def mod_p() -> bool:
        for p in (2, 3, 5):
            for space in (c, cstar, c1):
                charseries.poincare_cyclic_config(space, p)
        return True

    run("prime-order-divisibility", mod_p)

    def braid_betti() -> bool:
        return all(
            confspace.poincare_config_ordinary(c, m).coeff(1) == comb(m, 2)
            for m in range(1, 7)
        )

    run("ordinary-first-betti-reference", braid_betti)

    def refusal() -> bool:
        try:
            confspace.poincare_config(BUILTIN_SPACES["klein_pointed"], 2)
        except HypothesisViolation:
            return True
        return False

    run("refuses-non-interior-acyclic", refusal)

    def unordered_plateau() -> bool:
        report = repstab.unordered_betti_constancy(c, 1, (1, 6))
        return report.constant_ok and report.constant_value == 1

    run("unordered-betti-plateau", unordered_plateau)

    return out


def cmd_selftest(_args) -> dict:
    results = _selftest_checks()
    checks = [_check(name, ok) for name, ok in results]
    failed = sum(1 for _name, ok in results if not ok)
    return {
        "command": "selftest",
        "inputs": {},
        "result": {"passed": len(results) - failed, "failed": failed},
        "checks": checks,
    }


# ---------------------------------------------------------------------------
# entry point
# ---------------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="confcohom",
        description="Exact cohomological invariants of generalized configuration spaces.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_space(p):
        p.add_argument(
            "--space",
            required=True,
            help="built-in space name or path to a JSON space file",
        )

    def add_format(p):
        p.add_argument("--format", choices=("json", "plain", "latex"), default="json")

    p = sub.add_parser("poincare", help="Poincaré polynomials of one space family")
    add_space(p)
    p.add_argument(
        "--target",
        required=True,
        choices=("fm", "delta", "delta_le", "ordinary", "cf", "bf", "sym", "cyc"),
    )
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--l", type=int)
    add_format(p)
    p.set_defaults(fn=cmd_poincare)

    p = sub.add_parser("character", help="graded trace of one permutation class")
    add_space(p)
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--cycle-type", dest="cycle_type")
    p.add_argument("--all", action="store_true")
    add_format(p)
    p.set_defaults(fn=cmd_character)

    p = sub.add_parser("universal", help="universal two-variable stratum polynomial")
    p.add_argument("--l", type=int, required=True)
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--closed", action="store_true")
    add_format(p)
    p.set_defaults(fn=cmd_universal)

    p = sub.add_parser("quotient", help="Poincaré polynomial of a subgroup quotient")
    add_space(p)
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--generators", default="", help='e.g. "(1 2 3);(1 2)"')
    add_format(p)
    p.set_defaults(fn=cmd_quotient)

    p = sub.add_parser("stability", help="multiplicity stability across a range of m")
    add_space(p)
    p.add_argument("--i", type=int, required=True, help="cohomological degree")
    p.add_argument("--a", type=int, default=0, help="defect: m minus distinct values")
    p.add_argument("--range", required=True, help="m0..m1")
    add_format(p)
    p.set_defaults(fn=cmd_stability)

    p = sub.add_parser("selftest", help="run built-in cross-validation suite")
    add_format(p)
    p.set_defaults(fn=cmd_selftest)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        # argparse exits 2 on usage errors; report those as parse errors to
        # keep exit code 2 reserved for hypothesis violations
        return EXIT_OK if exc.code in (0, None) else EXIT_PARSE
    try:
        document = args.fn(args)
    except HypothesisViolation as exc:
        _emit_error("hypothesis-violation", exc, flag=exc.flag)
        return EXIT_HYPOTHESIS
    except InputParseError as exc:
        _emit_error("input-parse-error", exc)
        return EXIT_PARSE
    except CostCapExceeded as exc:
        _emit_error("cost-cap-exceeded", exc)
        return EXIT_COST
    except ConsistencyError as exc:
        _emit_error("consistency-error", exc)
        return EXIT_CONSISTENCY
    sys.stdout.write(render(document, args.format))
    if document["command"] == "selftest" and document["result"]["failed"]:
        return EXIT_CONSISTENCY
    return EXIT_OK


def _emit_error(category: str, exc: Exception, flag: str | None = None) -> None:
    payload = {"error": {"category": category, "message": str(exc)}}
    if flag:
        payload["error"]["flag"] = flag
    sys.stderr.write(json.dumps(payload, sort_keys=True) + "\n")


if __name__ == "__main__":
    sys.exit(main())
