"""Command line front end.

    galoiscalc "x^5 - 5x + 12"
    galoiscalc --json "[1,0,0,0,-5,12]"
    galoiscalc --batch polys.txt --dedekind

Coefficient lists are written highest degree first, like the polynomial.
Exit codes: 0 all classified, 2 some input reducible, 3 numeric ambiguity,
4 parse error, 5 internal invariant violation (including a failed Dedekind
check). With several inputs the largest code wins.
"""

from __future__ import annotations

import argparse
import json
import re
import sys
import time
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Optional, TextIO

from .classifier import ClassifyReport, classify
from .errors import (
    DegreeError,
    GaloisError,
    InvariantViolation,
    NotSquarefreeError,
    NumericError,
    ParseError,
    ReducibleError,
)
from .numeric import DEFAULT_TOLERANCES, Tolerances
from .polynomial import RatPoly, render

SCHEMA_VERSION = 1
MAX_DEGREE = 5

EXIT_OK = 0
EXIT_REDUCIBLE = 2
EXIT_NUMERIC = 3
EXIT_PARSE = 4
EXIT_INVARIANT = 5

EXIT_CLASS = {
    EXIT_OK: "ok",
    EXIT_REDUCIBLE: "reducible",
    EXIT_NUMERIC: "numeric_ambiguity",
    EXIT_PARSE: "parse_error",
    EXIT_INVARIANT: "invariant_violation",
}


@dataclass
class CliConfig:
    input_mode: str = "expression"      # expression | batch
    output_mode: str = "text"           # text | json
    emit_certificate: bool = False
    run_dedekind: Optional[int] = None  # prime bound
    tolerances: Tolerances = field(default_factory=lambda: DEFAULT_TOLERANCES)

    def __post_init__(self):
        if self.input_mode not in ("expression", "coefficient-list", "batch"):
            raise ValueError(f"unknown input mode {self.input_mode!r}")
        if self.output_mode not in ("text", "json"):
            raise ValueError(f"unknown output mode {self.output_mode!r}")
        if self.run_dedekind is not None and self.run_dedekind < 2:
            raise ValueError("Dedekind prime bound must be at least 2")


# ---------------------------------------------------------------- parsing

_NUMBER = r"\d+(?:/\d+)?"
_TOKEN = re.compile(
    rf"(?P<ws>\s+)|(?P<num>{_NUMBER})|(?P<var>[A-Za-z])|(?P<pow>\^|\*\*)|(?P<mul>\*)|(?P<sign>[+-])"
)


def _normalize_text(text: str) -> str:
    return text.replace("−", "-").replace("–", "-")


def _parse_list(text: str) -> RatPoly:
    body = text.strip()
    inner = body[1:-1]
    if not inner.strip():
        raise ParseError("empty coefficient list", text, 0)
    coeffs = []
    offset = text.index("[") + 1
    for item in inner.split(","):
        s = item.strip()
        if not re.fullmatch(rf"[+-]?{_NUMBER}", s):
            pos = offset + (len(item) - len(item.lstrip()))
            raise ParseError(f"bad coefficient {s!r}", text, pos)
        coeffs.append(Fraction(s))
        offset += len(item) + 1
    return RatPoly.from_high(coeffs)


def _tokens(text: str) -> list[tuple[str, str, int]]:
    out = []
    pos = 0
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if not m:
            raise ParseError(f"unexpected character {text[pos]!r}", text, pos)
        kind = m.lastgroup
        if kind != "ws":
            out.append((kind, m.group(), pos))
        pos = m.end()
    return out


def _parse_expression(text: str) -> RatPoly:
    toks = _tokens(text)
    if not toks:
        raise ParseError("empty input", text, 0)
    terms: dict[int, Fraction] = {}
    var: Optional[str] = None
    i = 0

    def peek(kind: str) -> bool:
        return i < len(toks) and toks[i][0] == kind

    while i < len(toks):
        sign = 1
        if peek("sign"):
            sign = -1 if toks[i][1] == "-" else 1
            i += 1
        elif terms or i > 0:
            raise ParseError("expected + or -", text, toks[i][2])
        if i >= len(toks):
            raise ParseError("dangling sign", text, len(text))
        coeff = Fraction(1)
        have_coeff = False
        if peek("num"):
            coeff = Fraction(toks[i][1])
            have_coeff = True
            i += 1
            if peek("mul"):
                i += 1
                if not peek("var"):
                    pos = toks[i][2] if i < len(toks) else len(text)
                    raise ParseError("expected a variable after *", text, pos)
        exp = 0
        if peek("var"):
            name, pos = toks[i][1], toks[i][2]
            if var is None:
                var = name
            elif name != var:
                raise ParseError(f"second variable {name!r}; only univariate input is supported", text, pos)
            i += 1
            exp = 1
            if peek("pow"):
                i += 1
                if not peek("num") or "/" in toks[i][1]:
                    pos = toks[i][2] if i < len(toks) else len(text)
                    raise ParseError("expected a non-negative integer exponent", text, pos)
                exp = int(toks[i][1])
                i += 1
            if peek("var"):
                raise ParseError("products of variables are not supported", text, toks[i][2])
        elif not have_coeff:
            pos = toks[i][2] if i < len(toks) else len(text)
            raise ParseError("expected a number or variable", text, pos)
        if peek("num"):
            raise ParseError("unexpected number", text, toks[i][2])
        terms[exp] = terms.get(exp, Fraction(0)) + sign * coeff
    deg = max(terms)
    return RatPoly([terms.get(k, 0) for k in range(deg + 1)])


def parse_poly(text: str) -> RatPoly:
    """Parse ``"x^5 - 5x + 12"`` or ``"[1,0,0,0,-5,12]"`` (highest degree first)."""
    text = _normalize_text(text)
    stripped = text.strip()
    if stripped.startswith("[") or stripped.endswith("]"):
        if not (stripped.startswith("[") and stripped.endswith("]")):
            raise ParseError("unbalanced brackets", text, text.find("[") if "[" in text else text.find("]"))
        poly = _parse_list(text)
    else:
        poly = _parse_expression(text)
    if poly.degree < 1:
        raise DegreeError(f"{text!r} has degree {max(poly.degree, 0)}; need 1 to {MAX_DEGREE}")
    if poly.degree > MAX_DEGREE:
        raise DegreeError(f"{text!r} has degree {poly.degree}; only degrees up to {MAX_DEGREE} are supported")
    return poly


# ---------------------------------------------------------------- reports


def _num(x: float) -> float:
    return float(f"{x:.12g}")


def _cplx(z: complex) -> dict:
    return {"re": _num(z.real), "im": _num(z.imag)}


def _ints_high(p) -> list[str]:
    return [str(c) for c in reversed(p.coeffs)]


def certificate_json(report: ClassifyReport) -> dict:
    cert = report.certificate
    out: dict = {
        "delta": str(cert.delta),
        "delta_is_square": cert.delta_is_square,
    }
    if cert.delta_sqrt is not None:
        out["delta_sqrt"] = str(cert.delta_sqrt)
    if cert.working is not None and cert.working != cert.normalized:
        out["depressed_coeffs"] = _ints_high(cert.working)
    if cert.resolvent is not None:
        out["resolvent_coeffs"] = _ints_high(cert.resolvent)
        out["resolvent_integer_roots"] = [str(r) for r in cert.resolvent_roots]
    if cert.resolvent_root is not None:
        out["resolvent_root"] = str(cert.resolvent_root)
    kw = cert.kappe_warren
    if kw is not None:
        out["kappe_warren"] = {
            "n1": str(kw.n1),
            "n2": str(kw.n2),
            "n1_sqrt": None if kw.n1_sqrt is None else str(kw.n1_sqrt),
            "n2_sqrt": None if kw.n2_sqrt is None else str(kw.n2_sqrt),
            "both_square": kw.both_square,
        }
    tol = cert.tolerances
    if cert.roots is not None:
        out["roots"] = [_cplx(z) for z in cert.roots.roots]
    if cert.theta_ordering is not None:
        o = cert.theta_ordering
        out["theta1"] = {
            **_cplx(o.theta_value),
            "target": str(o.target),
            "ordering": [i + 1 for i in o.perm],
            "mismatch": _num(o.mismatch),
            "matching_orderings": o.matching_orderings,
            "tolerance": tol.get("theta"),
        }
    if cert.sigma1 is not None:
        sig = {**_cplx(cert.sigma1), "tolerance": tol.get("sigma")}
        if cert.sigma1_integer is not None:
            sig["as_integer"] = str(cert.sigma1_integer)
        out["sigma1"] = sig
    out["fast_path_checked"] = cert.fast_path
    out["tolerances"] = dict(tol)
    return out


def report_json(text: str, report: Optional[ClassifyReport], code: int, elapsed: float,
                error: Optional[BaseException] = None) -> dict:
    out: dict = {"schema_version": SCHEMA_VERSION, "input": text}
    if report is not None:
        cert = report.certificate
        out.update(
            normalized=render(cert.normalized),
            normalized_coeffs=_ints_high(cert.normalized),
            **{"lambda": str(cert.lam)},
            shift=str(cert.shift),
            group=report.group.label,
            group_order=report.group.order,
            group_description=report.group.description,
            certificate=certificate_json(report),
            dedekind=report.dedekind_checked,
            warnings=list(report.warnings),
        )
    else:
        out.update(group=None, group_order=None, warnings=[])
    if error is not None:
        out["error"] = str(error)
        if isinstance(error, ReducibleError):
            out["normalized"] = render(error.poly)
            out["normalized_coeffs"] = _ints_high(error.poly)
            out["factor"] = render(error.factor)
            out["factor_coeffs"] = _ints_high(error.factor)
    out["timings"] = {"total_ms": round(elapsed * 1000, 3)}
    out["exit_class"] = EXIT_CLASS[code]
    return out


def _sq(n: int, root: Optional[int]) -> str:
    return f"{n} = {root}^2" if root is not None else f"{n} (not a square)"


def report_text(text: str, report: ClassifyReport, certificate: bool) -> list[str]:
    g = report.group
    lines = [f"{text}: {g.label} ({g.description})"]
    if report.dedekind_checked is False:
        lines[0] += "  [Dedekind check FAILED]"
    if not certificate:
        return lines + [f"  warning: {w}" for w in report.warnings]
    cert = report.certificate
    ind = "  "
    if cert.lam != 1 or str(cert.input) != str(cert.normalized):
        lines.append(f"{ind}normalized: {cert.normalized} (scale {cert.lam})")
    if cert.shift:
        lines.append(f"{ind}depressed: {cert.working} (shift {cert.shift})")
    lines.append(f"{ind}discriminant: {_sq(cert.delta, cert.delta_sqrt)}")
    if cert.resolvent is not None:
        name = "resolvent cubic" if cert.resolvent.degree == 3 else "resolvent sextic"
        lines.append(f"{ind}{name}: {cert.resolvent}; integer roots: {cert.resolvent_roots or 'none'}")
    kw = cert.kappe_warren
    if kw is not None:
        lines.append(f"{ind}Kappe-Warren: {_sq(kw.n1, kw.n1_sqrt)}, {_sq(kw.n2, kw.n2_sqrt)}")
    if cert.theta_ordering is not None:
        o = cert.theta_ordering
        order = ", ".join(f"{cert.roots.roots[i]:.12g}" for i in o.perm)
        lines.append(f"{ind}root ordering: {order}")
        lines.append(f"{ind}theta1 = {o.theta_value:.12g} (target {o.target}, tol {cert.tolerances.get('theta')})")
    if cert.sigma1 is not None:
        verdict = f"integer {cert.sigma1_integer}" if cert.sigma1_integer is not None else "not an integer"
        lines.append(f"{ind}sigma1 = {cert.sigma1:.12g} ({verdict}, tol {cert.tolerances.get('sigma')})")
    if cert.fast_path:
        lines.append(f"{ind}trinomial shortcut agrees")
    if report.dedekind_checked is not None:
        lines.append(f"{ind}Dedekind check: {'passed' if report.dedekind_checked else 'FAILED'}")
    lines += [f"{ind}warning: {w}" for w in report.warnings]
    return lines


# ---------------------------------------------------------------- driver


def classify_one(text: str, config: CliConfig) -> tuple[int, Optional[ClassifyReport], Optional[BaseException]]:
    try:
        poly = parse_poly(text)
    except (ParseError, DegreeError) as exc:
        return EXIT_PARSE, None, exc
    try:
        report = classify(poly, config.tolerances, config.run_dedekind)
    except ReducibleError as exc:
        return EXIT_REDUCIBLE, None, exc
    except NumericError as exc:
        return EXIT_NUMERIC, None, exc
    except (InvariantViolation, NotSquarefreeError) as exc:
        return EXIT_INVARIANT, None, exc
    if report.dedekind_checked is False:
        return EXIT_INVARIANT, report, None
    return EXIT_OK, report, None


def read_batch(lines: Iterable[str]) -> list[str]:
    out = []
    for line in lines:
        s = line.strip()
        if s and not s.startswith("#"):
            out.append(s)
    return out


def run(config: CliConfig, inputs: list[str], out: TextIO | None = None) -> int:
    """Classify every input, write one report per input, return the exit code."""
    out = out or sys.stdout
    worst = EXIT_OK
    for text in inputs:
        start = time.perf_counter()
        code, report, err = classify_one(text, config)
        elapsed = time.perf_counter() - start
        worst = max(worst, code)
        if config.output_mode == "json":
            out.write(json.dumps(report_json(text, report, code, elapsed, err)) + "\n")
        elif report is not None:
            out.write("\n".join(report_text(text, report, config.emit_certificate)) + "\n")
        else:
            out.write(f"{text}: {EXIT_CLASS[code]}: {err}\n")
    return worst


def _positive_float(s: str) -> float:
    v = float(s)
    if not v > 0:
        raise argparse.ArgumentTypeError("must be positive")
    return v


def _positive_int(s: str) -> int:
    v = int(s)
    if v < 1:
        raise argparse.ArgumentTypeError("must be a positive integer")
    return v


def _prime_bound(s: str) -> int:
    v = int(s)
    if v < 2:
        raise argparse.ArgumentTypeError("prime bound must be at least 2")
    return v


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(
        prog="galoiscalc",
        description="Galois group of an irreducible polynomial of degree at most 5 over Q.",
    )
    ap.add_argument("poly", nargs="*", help='polynomial, e.g. "x^5 - 5x + 12" or "[1,0,0,0,-5,12]"')
    ap.add_argument("--json", action="store_true", help="one JSON object per input line")
    ap.add_argument("--certificate", action="store_true", help="show the evidence behind each answer")
    ap.add_argument("--batch", metavar="FILE", help="read polynomials from FILE ('-' for stdin)")
    ap.add_argument("--dedekind", nargs="?", type=_prime_bound, const=200, default=None, metavar="BOUND",
                    help="cross-check against factorizations mod primes up to BOUND (default 200)")
    ap.add_argument("--tol-sigma", type=_positive_float, default=DEFAULT_TOLERANCES.sigma)
    ap.add_argument("--tol-theta", type=_positive_float, default=DEFAULT_TOLERANCES.theta)
    ap.add_argument("--max-iters", type=_positive_int, default=DEFAULT_TOLERANCES.max_iters)
    return ap


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    tol = Tolerances(
        residual=DEFAULT_TOLERANCES.residual,
        theta=args.tol_theta,
        sigma=args.tol_sigma,
        pairing=DEFAULT_TOLERANCES.pairing,
        max_iters=args.max_iters,
    )
    config = CliConfig(
        input_mode="batch" if args.batch else "expression",
        output_mode="json" if args.json else "text",
        emit_certificate=args.certificate,
        run_dedekind=args.dedekind,
        tolerances=tol,
    )
    inputs = list(args.poly)
    if args.batch:
        if args.batch == "-":
            inputs += read_batch(sys.stdin)
        else:
            with open(args.batch, encoding="utf-8") as fh:
                inputs += read_batch(fh)
    elif not inputs:
        inputs = read_batch(sys.stdin)
    return run(config, inputs)


if __name__ == "__main__":
    sys.exit(main())
