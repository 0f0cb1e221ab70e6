"""Command-line front end.

Exit status: 0 on success, 1 on usage or parse errors, 2 when a library
operation rejects its input (for example an uncertifiable sequence).
"""

from __future__ import annotations

import argparse
import dataclasses
import json
import re
import sys
from fractions import Fraction
from typing import Sequence

from . import exact, finite, logic, polynomials, series
from .errors import DomainError, ParseError
from .exact import format_rational, parse_rational
from .logic import And, Atom, Constant, Formula, Iff, Implies, Not, Or
from .polynomials import Polynomial

EXIT_OK, EXIT_USAGE, EXIT_DOMAIN = 0, 1, 2


class UsageError(Exception):
    pass


# -- sequences --------------------------------------------------------------

def parse_sequence(text: str) -> list[Fraction]:
    """Comma- or whitespace-separated rational literals.

    Parse errors report the 1-based index of the bad token.
    """
    tokens = [t for t in re.split(r"[,\s]+", text.strip()) if t]
    terms = []
    for i, tok in enumerate(tokens, start=1):
        try:
            terms.append(parse_rational(tok))
        except (ParseError, DomainError):
            raise ParseError(f"malformed rational literal {tok!r} (token {i})", i) from None
    return terms


# -- polynomials ------------------------------------------------------------

_POLY_TOKEN_RE = re.compile(r"\s*(?:(\d+)|([xz])|([-+*/^()]))")


def _poly_tokens(text: str) -> list[tuple[str, str, int]]:
    tokens = []
    pos = 0
    while True:
        while pos < len(text) and text[pos].isspace():
            pos += 1
        if pos == len(text):
            break
        m = _POLY_TOKEN_RE.match(text, pos)
        if m is None:
            raise ParseError(f"unexpected character {text[pos]!r}", pos)
        kind = ("int", "var", "op")[m.lastindex - 1]
        tokens.append((kind, m.group(m.lastindex), m.start(m.lastindex)))
        pos = m.end()
    tokens.append(("end", "", len(text)))
    return tokens


def parse_poly(text: str) -> Polynomial:
    """Parse ``3*x^2 - 1/2*x + 4`` style input (``z`` accepted for ``x``).

    Repeated powers are summed.
    """
    toks = _poly_tokens(text)
    i = 0

    def peek():
        return toks[i]

    def expect_int():
        nonlocal i
        kind, value, pos = toks[i]
        if kind != "int":
            raise ParseError("expected an integer", pos)
        i += 1
        return int(value)

    def is_op(value):
        kind, v, _ = toks[i]
        return kind == "op" and v == value

    coeffs: dict[int, Fraction] = {}
    first = True
    while True:
        sign = 1
        kind, value, pos = peek()
        if is_op("+") or is_op("-"):
            sign = -1 if value == "-" else 1
            i += 1
        elif not first:
            if kind == "end":
                break
            raise ParseError(f"expected '+' or '-' but found {value!r}", pos)
        first = False

        kind, value, pos = peek()
        coef = Fraction(1)
        have_coef = False
        if kind == "int":
            num = expect_int()
            den = 1
            if is_op("/"):
                i += 1
                den = expect_int()
                if den == 0:
                    raise ParseError("zero denominator", toks[i - 1][2])
            coef = Fraction(num, den)
            have_coef = True
            if is_op("*"):
                i += 1
                if peek()[0] != "var":
                    raise ParseError("expected 'x' after '*'", peek()[2])
        power = 0
        if peek()[0] == "var":
            i += 1
            power = 1
            if is_op("^"):
                i += 1
                power = expect_int()
        elif not have_coef:
            raise ParseError("expected a term", pos if kind != "end" else len(text))
        coeffs[power] = coeffs.get(power, Fraction(0)) + sign * coef
        if peek()[0] == "end":
            break
    size = max(coeffs, default=-1) + 1
    return Polynomial(coeffs.get(k, 0) for k in range(size))


def render_poly(p: Polynomial, var: str = "x") -> str:
    """Human form, highest power first: ``3*x^2 - 1/2*x + 4``."""
    if p.is_zero():
        return "0"
    parts = []
    for k in range(len(p) - 1, -1, -1):
        c = p[k]
        if c == 0:
            continue
        mag = abs(c)
        if k == 0:
            body = format_rational(mag)
        else:
            pw = var if k == 1 else f"{var}^{k}"
            body = pw if mag == 1 else f"{format_rational(mag)}*{pw}"
        if not parts:
            parts.append(("-" if c < 0 else "") + body)
        else:
            parts.append(("- " if c < 0 else "+ ") + body)
    return " ".join(parts)


def parse_quotient(text: str) -> tuple[Polynomial, Polynomial]:
    """Split ``P / Q`` at its top-level division sign.

    A ``/`` counts as the division sign when it sits outside parentheses
    and touches whitespace or a parenthesis, so ``1/2*x`` stays a term.
    """
    depth = 0
    for idx, ch in enumerate(text):
        if ch == "(":
            depth += 1
        elif ch == ")":
            depth -= 1
        elif ch == "/" and depth == 0:
            before = text[idx - 1] if idx else " "
            after = text[idx + 1] if idx + 1 < len(text) else " "
            if before.isspace() or after.isspace() or before == ")" or after == "(":
                return _parse_wrapped(text[:idx]), _parse_wrapped(text[idx + 1:])
    return _parse_wrapped(text), Polynomial([1])


def _parse_wrapped(text: str) -> Polynomial:
    s = text.strip()
    while s.startswith("(") and s.endswith(")") and _balanced(s[1:-1]):
        s = s[1:-1].strip()
    return parse_poly(s)


def _balanced(s: str) -> bool:
    depth = 0
    for ch in s:
        depth += {"(": 1, ")": -1}.get(ch, 0)
        if depth < 0:
            return False
    return depth == 0


# -- formulas ---------------------------------------------------------------

_PREC = {Iff: 1, Implies: 2, Or: 3, And: 4}
_SYMBOL = {Iff: "<->", Implies: "->", Or: "|", And: "&"}


def _prec(f: Formula) -> int:
    if isinstance(f, Not):
        return 5
    return _PREC.get(type(f), 6)


def render_formula(f: Formula) -> str:
    """Text form with only the parentheses the grammar needs."""
    if isinstance(f, Atom):
        return f.name
    if isinstance(f, Constant):
        return "T" if f.value else "F"
    if isinstance(f, Not):
        inner = render_formula(f.child)
        return "~" + (f"({inner})" if _prec(f.child) < 5 else inner)
    p = _prec(f)
    left, right = render_formula(f.left), render_formula(f.right)
    right_assoc = isinstance(f, Implies)
    if _prec(f.left) < p or (right_assoc and _prec(f.left) == p):
        left = f"({left})"
    if _prec(f.right) < p or (not right_assoc and _prec(f.right) == p):
        right = f"({right})"
    return f"{left} {_SYMBOL[type(f)]} {right}"


# -- sets and relations -----------------------------------------------------

_SET_TOKEN_RE = re.compile(r"\s*(?:(-?\d+)|(on)\b|([A-Za-z_]\w*)|'([^']*)'|\"([^\"]*)\"|([{}(),]))")


def _set_tokens(text: str):
    tokens = []
    pos = 0
    while True:
        while pos < len(text) and text[pos].isspace():
            pos += 1
        if pos == len(text):
            break
        m = _SET_TOKEN_RE.match(text, pos)
        if m is None:
            raise ParseError(f"unexpected character {text[pos]!r}", pos)
        g = m.lastindex
        start = m.start(g)
        if g == 1:
            tokens.append(("elem", int(m.group(1)), start))
        elif g == 2:
            tokens.append(("on", "on", start))
        elif g in (3, 4, 5):
            tokens.append(("elem", m.group(g), start))
        else:
            tokens.append(("punct", m.group(6), start))
        pos = m.end()
    tokens.append(("end", "", len(text)))
    return tokens


class _SetParser:
    def __init__(self, text):
        self.toks = _set_tokens(text)
        self.i = 0

    def peek(self):
        return self.toks[self.i]

    def expect(self, punct):
        kind, value, pos = self.peek()
        if kind != "punct" or value != punct:
            found = "end of input" if kind == "end" else repr(value)
            raise ParseError(f"expected {punct!r} but found {found}", pos)
        self.i += 1

    def element(self):
        kind, value, pos = self.peek()
        if kind == "elem":
            self.i += 1
            return value
        if kind == "punct" and value == "(":
            self.i += 1
            a = self.element()
            self.expect(",")
            b = self.element()
            self.expect(")")
            return (a, b)
        found = "end of input" if kind == "end" else repr(value)
        raise ParseError(f"expected a set element but found {found}", pos)

    def set_literal(self):
        self.expect("{")
        items = []
        kind, value, _ = self.peek()
        if not (kind == "punct" and value == "}"):
            items.append(self.element())
            while self.peek()[0] == "punct" and self.peek()[1] == ",":
                self.i += 1
                items.append(self.element())
        self.expect("}")
        return finite.FiniteSet(items)

    def finish(self):
        kind, value, pos = self.peek()
        if kind != "end":
            raise ParseError(f"unexpected trailing input {value!r}", pos)


def parse_set(text: str) -> finite.FiniteSet:
    p = _SetParser(text)
    s = p.set_literal()
    p.finish()
    return s


def parse_relation(text: str) -> finite.Relation:
    """``{(1,2), (2,3)} on {1,2,3}``; without ``on``, the domain is the field of the pairs."""
    p = _SetParser(text)
    pairs = p.set_literal()
    for pair in pairs:
        if not isinstance(pair, tuple):
            raise ParseError(f"relation member {pair!r} is not a pair")
    if p.peek()[0] == "on":
        p.i += 1
        domain = p.set_literal()
    else:
        domain = finite.FiniteSet(x for pair in pairs for x in pair)
    p.finish()
    return finite.Relation(domain, pairs)


def render_set(s) -> str:
    return repr(s)


def _json_elem(e):
    if isinstance(e, tuple):
        return [_json_elem(x) for x in e]
    if isinstance(e, finite.FiniteSet):
        return [_json_elem(x) for x in e]
    return e


# -- command handlers -------------------------------------------------------

def _coeff_strings(p: Polynomial) -> list[str]:
    return [format_rational(c) for c in p.coefficients]


def _poly_payload(p: Polynomial) -> dict:
    return {"degree": p.degree, "coefficients": _coeff_strings(p)}


def cmd_closedform(args):
    terms = parse_sequence(args.seq)
    f = polynomials.closed_form(terms)
    verified = polynomials.fits(f, terms)
    return {"degree": f.degree, "coefficients": _coeff_strings(f), "verified": verified}, f"f(x) = {render_poly(f)}"


def cmd_difs(args):
    d = polynomials.difs(parse_sequence(args.seq))
    strings = [format_rational(t) for t in d]
    return {"differences": strings}, ", ".join(strings)


def cmd_factor(args):
    n = _parse_int(args.n)
    fs = exact.factorize(n)
    return {"n": n, "factors": fs}, f"{n} = " + " * ".join(map(str, fs))


def cmd_primes(args):
    if args.count < 0:
        raise DomainError("--count must be non-negative")
    stream = exact.primes_stream()
    ps = [next(stream) for _ in range(args.count)]
    return {"primes": ps}, " ".join(map(str, ps))


def cmd_logic(args):
    forms = [logic.parse_formula(t) for t in args.formulas]
    q = args.query
    expected = 2 if q == "equiv" else 1
    if len(forms) != expected:
        raise UsageError(f"logic {q} takes {expected} formula(s), got {len(forms)}")
    f = forms[0]
    if q == "valid":
        ok = logic.is_valid(f)
        return {"valid": ok}, "valid" if ok else "not valid"
    if q == "sat":
        ok = logic.is_satisfiable(f)
        return {"satisfiable": ok}, "satisfiable" if ok else "unsatisfiable"
    if q == "equiv":
        ok = logic.are_equivalent(f, forms[1])
        return {"equivalent": ok}, "equivalent" if ok else "not equivalent"
    names = logic.atoms(f)
    table = logic.truth_table(f)
    payload = {
        "atoms": names,
        "rows": [{"values": [v[a] for a in names], "result": r} for v, r in table],
    }
    header = " ".join(names + ["|", render_formula(f)])
    lines = [header]
    for v, r in table:
        lines.append(" ".join(["T" if v[a] else "F" for a in names] + ["|", "T" if r else "F"]))
    return payload, "\n".join(lines)


def cmd_poly(args):
    op = args.op
    needed = {"eval": 2, "mul": 2, "compose": 2, "derive": 1}[op]
    if len(args.operands) != needed:
        raise UsageError(f"poly {op} takes {needed} argument(s), got {len(args.operands)}")
    p = parse_poly(args.operands[0])
    if op == "eval":
        value = polynomials.poly_eval(p, parse_rational(args.operands[1]))
        return {"value": format_rational(value)}, format_rational(value)
    if op == "mul":
        r = p * parse_poly(args.operands[1])
    elif op == "compose":
        r = polynomials.poly_compose(p, parse_poly(args.operands[1]))
    else:
        r = polynomials.poly_derivative(p)
    return _poly_payload(r), render_poly(r)


def cmd_series(args):
    if len(args.operands) == 1:
        num, den = parse_quotient(args.operands[0])
    elif len(args.operands) == 2:
        num, den = (_parse_wrapped(t) for t in args.operands)
    else:
        raise UsageError("series div takes a quotient or two polynomials")
    if args.terms < 0:
        raise DomainError("--terms must be non-negative")
    q = series.series_div(series.series_from_poly(num), series.series_from_poly(den))
    strings = [format_rational(c) for c in series.take(args.terms, q)]
    return {"coefficients": strings}, ", ".join(strings)


def cmd_relation(args):
    r = parse_relation(args.relation)
    if args.op == "props":
        props = finite.relation_properties(r)
        payload = dataclasses.asdict(props)
        return payload, "\n".join(f"{k}: {'yes' if v else 'no'}" for k, v in payload.items())
    if args.op == "quotient":
        classes = finite.quotient(r)
        return {"classes": _json_elem(classes)}, render_set(classes)
    c = finite.closure(args.op.removesuffix("-closure"), r)
    return {"domain": _json_elem(c.domain), "pairs": _json_elem(c.pairs)}, repr(c)


def _parse_int(text: str) -> int:
    try:
        return int(text)
    except ValueError:
        raise ParseError(f"not an integer: {text!r}") from None


# -- entry point ------------------------------------------------------------

class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", help="emit JSON instead of text")

    parser = _Parser(prog="discmath", description="Exact discrete mathematics toolkit.")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("closedform", parents=[common], help="polynomial closed form of a sequence")
    p.add_argument("seq")
    p.set_defaults(handler=cmd_closedform)

    p = sub.add_parser("difs", parents=[common], help="difference sequence")
    p.add_argument("seq")
    p.set_defaults(handler=cmd_difs)

    p = sub.add_parser("factor", parents=[common], help="prime factorization")
    p.add_argument("n")
    p.set_defaults(handler=cmd_factor)

    p = sub.add_parser("primes", parents=[common], help="first primes")
    p.add_argument("--count", type=int, default=10)
    p.set_defaults(handler=cmd_primes)

    p = sub.add_parser("logic", parents=[common], help="propositional decision procedures")
    p.add_argument("query", choices=["valid", "sat", "equiv", "table"])
    p.add_argument("formulas", nargs="+")
    p.set_defaults(handler=cmd_logic)

    p = sub.add_parser("poly", parents=[common], help="polynomial operations")
    p.add_argument("op", choices=["eval", "mul", "compose", "derive"])
    p.add_argument("operands", nargs="+")
    p.set_defaults(handler=cmd_poly)

    p = sub.add_parser("series", parents=[common], help="power series quotients")
    p.add_argument("op", choices=["div"])
    p.add_argument("operands", nargs="+")
    p.add_argument("--terms", type=int, default=10)
    p.set_defaults(handler=cmd_series)

    p = sub.add_parser("relation", parents=[common], help="finite relation queries")
    p.add_argument("op", choices=["props", "quotient", "reflexive-closure", "symmetric-closure", "transitive-closure"])
    p.add_argument("relation")
    p.set_defaults(handler=cmd_relation)
    return parser


def dispatch(args: argparse.Namespace, out=None, err=None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    try:
        payload, text = args.handler(args)
    except (UsageError, ParseError) as e:
        print(f"error: {e}", file=err)
        return EXIT_USAGE
    except DomainError as e:
        print(f"error: {e}", file=err)
        return EXIT_DOMAIN
    if args.json:
        print(json.dumps(payload), file=out)
    else:
        print(text, file=out)
    return EXIT_OK


def _protect_negatives(argv: Sequence[str]) -> list[str]:
    # "-x^2" or "-1/2" is a value, not a flag; a leading space keeps argparse
    # from treating it as one and is ignored by every input parser.
    return [f" {a}" if a.startswith("-") and not a.startswith("--") and a != "-h" else a for a in argv]


def main(argv: Sequence[str] | None = None, out=None, err=None) -> int:
    err = err or sys.stderr
    argv = sys.argv[1:] if argv is None else argv
    try:
        args = build_parser().parse_args(_protect_negatives(argv))
    except UsageError as e:
        print(f"error: {e}", file=err)
        return EXIT_USAGE
    return dispatch(args, out, err)


if __name__ == "__main__":
    sys.exit(main())
