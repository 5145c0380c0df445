"""Reader and writer for the ``.germ`` text format.

A germ file is a sequence of ``[section]`` blocks::

    [meta]
    name = cusp
    icis = true
    dim = 1

    [ring]
    vars = x, y
    weights = 2, 3

    [ideal]
    x^3 - y^2

    [form]
    1, 1

    [param]
    t^2, t^3

``ideal`` holds one generator per line, ``form`` the N coefficients of
omega (comma or newline separated), ``param`` one branch per line as N
comma-separated polynomials in the reserved symbol ``t``.  ``#`` starts a
comment.
"""

import re
from dataclasses import dataclass
from fractions import Fraction
from pathlib import Path

from .curves import CurveParametrization
from .differentials import OneForm, VarietyGerm
from .errors import GermSemanticError, GermSyntaxError, NonHomogeneousError, PreconditionError
from .exactalg import PolyRing, Polynomial, series_compose

SECTIONS = ("meta", "ring", "ideal", "form", "param")
SERIES_VAR = "t"

_TOKEN = re.compile(r"\s*(?:(\d+)|([A-Za-z_][A-Za-z_0-9]*)|(\*\*|[-+*/^(),]))")


# ---------------------------------------------------------------------------
# expressions


class _Parser:
    def __init__(self, text, ring, line, col0=1):
        self.text = text
        self.ring = ring
        self.line = line
        self.col0 = col0
        self.tokens = []
        pos = 0
        while pos < len(text):
            if text[pos:].strip() == "":
                break
            m = _TOKEN.match(text, pos)
            if not m or m.end() == pos:
                col = pos + len(text[pos:]) - len(text[pos:].lstrip())
                raise GermSyntaxError(f"unexpected character {text[col]!r}", line, col0 + col)
            kind = "num" if m.group(1) else "name" if m.group(2) else "op"
            start = m.start(m.lastindex)
            self.tokens.append((kind, m.group(m.lastindex), col0 + start))
            pos = m.end()
        self.i = 0

    def error(self, msg, tok=None):
        col = tok[2] if tok else self.col0 + len(self.text.rstrip())
        raise GermSyntaxError(msg, self.line, col)

    def peek(self):
        return self.tokens[self.i] if self.i < len(self.tokens) else None

    def take(self):
        tok = self.peek()
        if tok is None:
            self.error("unexpected end of expression")
        self.i += 1
        return tok

    def parse(self):
        if not self.tokens:
            self.error("empty expression")
        value = self.expr()
        tok = self.peek()
        if tok is not None:
            self.error(f"unexpected {tok[1]!r}", tok)
        return value

    def expr(self):
        value = self.term()
        while (tok := self.peek()) and tok[1] in "+-":
            self.take()
            rhs = self.term()
            value = value + rhs if tok[1] == "+" else value - rhs
        return value

    def term(self):
        value = self.unary()
        while (tok := self.peek()) and tok[1] in ("*", "/"):
            self.take()
            rhs = self.unary()
            if tok[1] == "*":
                value = value * rhs
            else:
                if not rhs or any(any(e) for e in rhs.terms):
                    self.error("division only by a nonzero number", tok)
                value = value / rhs.constant_coefficient()
        return value

    def unary(self):
        tok = self.peek()
        if tok and tok[1] in "+-":
            self.take()
            value = self.unary()
            return -value if tok[1] == "-" else value
        return self.power()

    def power(self):
        base = self.atom()
        tok = self.peek()
        if tok and tok[1] in ("^", "**"):
            self.take()
            exp = self.take()
            if exp[0] != "num":
                self.error("exponent must be a nonnegative integer", exp)
            return base ** int(exp[1])
        return base

    def atom(self):
        tok = self.take()
        kind, text, col = tok
        if kind == "num":
            return self.ring.const(int(text))
        if kind == "name":
            if text not in self.ring.names:
                raise GermSemanticError(f"line {self.line}, column {col}: undeclared variable {text!r}")
            return self.ring.gen(self.ring.index(text))
        if text == "(":
            value = self.expr()
            close = self.peek()
            if close is None or close[1] != ")":
                self.error("missing ')'", close)
            self.take()
            return value
        self.error(f"unexpected {text!r}", tok)


def parse_polynomial(text, ring, line=None, col0=1):
    """Parse one expression over ``ring``."""
    return _Parser(text, ring, line, col0).parse()


def _split_commas(text, col0):
    """Split on top-level commas, keeping column offsets."""
    parts = []
    depth = 0
    start = 0
    for k, ch in enumerate(text):
        if ch == "(":
            depth += 1
        elif ch == ")":
            depth -= 1
        elif ch == "," and depth == 0:
            parts.append((text[start:k], col0 + start))
            start = k + 1
    parts.append((text[start:], col0 + start))
    return parts


# ---------------------------------------------------------------------------
# documents


@dataclass
class GermFile:
    germ: VarietyGerm
    form: OneForm = None
    param: CurveParametrization = None

    def __iter__(self):
        return iter((self.germ, self.form, self.param))


def _bool(value, line):
    v = value.strip().lower()
    if v in ("true", "yes", "1"):
        return True
    if v in ("false", "no", "0"):
        return False
    raise GermSyntaxError(f"expected a boolean, got {value!r}", line)


def _read_sections(text):
    sections = {}
    current = None
    for n, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].rstrip()
        if not line.strip():
            continue
        stripped = line.strip()
        if stripped.startswith("["):
            if not stripped.endswith("]"):
                raise GermSyntaxError("unterminated section header", n, len(raw) - len(raw.lstrip()) + 1)
            name = stripped[1:-1].strip().lower()
            if name not in SECTIONS:
                raise GermSyntaxError(f"unknown section [{name}]", n, 1)
            if name in sections:
                raise GermSyntaxError(f"duplicate section [{name}]", n, 1)
            sections[name] = []
            current = name
            continue
        if current is None:
            raise GermSyntaxError("content before the first section header", n, 1)
        col = len(line) - len(line.lstrip()) + 1
        sections[current].append((n, col, line.strip()))
    return sections


def _keyvals(entries):
    out = {}
    for n, col, text in entries:
        key, sep, value = text.partition("=")
        if not sep:
            raise GermSyntaxError("expected 'key = value'", n, col)
        out[key.strip().lower()] = (value.strip(), n, col + len(key) + 1)
    return out


def parse_germ(text, name=None, check_param=True):
    """Parse a germ document into ``(VarietyGerm, OneForm or None, CurveParametrization or None)``."""
    sections = _read_sections(text)
    if "ring" not in sections:
        raise GermSyntaxError("missing [ring] section")
    ring_kv = _keyvals(sections["ring"])
    if "vars" not in ring_kv:
        raise GermSyntaxError("[ring] needs 'vars = ...'")
    vars_text, vline, _ = ring_kv["vars"]
    names = [v.strip() for v in vars_text.split(",") if v.strip()]
    for v in names:
        if not re.fullmatch(r"[A-Za-z_][A-Za-z_0-9]*", v):
            raise GermSyntaxError(f"bad variable name {v!r}", vline)
    if SERIES_VAR in names:
        raise GermSemanticError(f"'{SERIES_VAR}' is reserved for branch parameters")
    if len(set(names)) != len(names):
        raise GermSemanticError("duplicate variable names")
    if not names:
        raise GermSemanticError("no variables declared")
    ring = PolyRing(names)
    weights = None
    if "weights" in ring_kv:
        wtext, wline, _ = ring_kv["weights"]
        try:
            weights = tuple(int(w) for w in wtext.split(","))
        except ValueError:
            raise GermSyntaxError(f"weights must be integers: {wtext!r}", wline) from None
        if len(weights) != len(names):
            raise GermSemanticError(f"{len(weights)} weights for {len(names)} variables")
        if any(w <= 0 for w in weights):
            raise GermSemanticError("weights must be positive")

    equations = []
    for n, col, line in sections.get("ideal", []):
        for part, c in _split_commas(line, col) if "," in line else [(line, col)]:
            if part.strip():
                equations.append(parse_polynomial(part, ring, n, c))

    meta = _keyvals(sections.get("meta", []))
    germ_name = meta["name"][0] if "name" in meta else (name or "germ")
    icis = _bool(meta["icis"][0], meta["icis"][1]) if "icis" in meta else False
    reduced = _bool(meta["reduced"][0], meta["reduced"][1]) if "reduced" in meta else True
    if "dim" in meta:
        try:
            dim = int(meta["dim"][0])
        except ValueError:
            raise GermSyntaxError("dim must be an integer", meta["dim"][1]) from None
    else:
        dim = len(names) - len([f for f in equations if f])
    try:
        germ = VarietyGerm(ring, equations, dim, icis=icis, reduced=reduced, weights=weights, name=germ_name)
    except NonHomogeneousError as exc:
        raise GermSemanticError(str(exc)) from None
    except PreconditionError as exc:
        raise GermSemanticError(str(exc)) from None

    form = None
    if "form" in sections:
        coeffs = []
        for n, col, line in sections["form"]:
            for part, c in _split_commas(line, col):
                if part.strip():
                    coeffs.append(parse_polynomial(part, ring, n, c))
        if len(coeffs) != ring.nvars:
            raise GermSemanticError(f"[form] has {len(coeffs)} coefficients, ring has {ring.nvars} variables")
        try:
            form = OneForm(tuple(coeffs))
        except PreconditionError as exc:
            raise GermSemanticError(str(exc)) from None

    param = None
    if "param" in sections:
        tring = PolyRing([SERIES_VAR])
        branches = []
        for n, col, line in sections["param"]:
            comps = []
            for part, c in _split_commas(line, col):
                p = parse_polynomial(part, tring, n, c)
                deg = p.degree()
                coeffs = [Fraction(0)] * (max(deg, 0) + 1)
                for (a,), v in p.terms.items():
                    coeffs[a] = v
                comps.append(tuple(coeffs))
            if len(comps) != ring.nvars:
                raise GermSemanticError(f"line {n}: branch has {len(comps)} components, ring has {ring.nvars}")
            branches.append(comps)
        param = CurveParametrization(ring, branches)
        if check_param:
            check_parametrization(germ, param)
    return GermFile(germ, form, param)


def check_parametrization(germ, param):
    """Exact check: each branch is polynomial, so substitution at a precision
    above the degree of every composite is a proof, not a truncation."""
    top = max((len(c) for b in param.branches for c in b), default=1)
    prec = max((f.degree() for f in germ.equations), default=1) * top + 1
    for i in range(param.r):
        s = param.series(i, prec)
        for f in germ.equations:
            if not series_compose(f, s).is_zero():
                raise GermSemanticError(f"branch {i + 1} does not satisfy {f}")


CORPUS_DIR = Path(__file__).parent / "corpus"
CORPUS_PREFIX = "corpus:"


def corpus_names():
    """Names of the germs shipped with the package."""
    return sorted(p.stem for p in CORPUS_DIR.glob("*.germ"))


def resolve_path(path):
    """``corpus:NAME`` refers to a shipped germ; anything else is a file path."""
    text = str(path)
    if text.startswith(CORPUS_PREFIX):
        return CORPUS_DIR / f"{text[len(CORPUS_PREFIX):]}.germ"
    return Path(path)


def load_germ(path):
    path = resolve_path(path)
    return parse_germ(path.read_text(encoding="utf-8"), name=path.stem)


def _series_str(coeffs):
    p = Polynomial(PolyRing([SERIES_VAR]), {(k,): c for k, c in enumerate(coeffs) if c})
    return str(p)


def format_germ(germ, form=None, param=None):
    """Render a germ (and optional form and parametrization) as a document
    that :func:`parse_germ` reads back to equal objects."""
    out = ["[meta]", f"name = {germ.name}", f"icis = {str(germ.icis).lower()}",
           f"reduced = {str(germ.reduced).lower()}", f"dim = {germ.dim}", "", "[ring]",
           f"vars = {', '.join(germ.ring.names)}"]
    if germ.weights is not None:
        out.append(f"weights = {', '.join(map(str, germ.weights))}")
    out += ["", "[ideal]"] + [str(f) for f in germ.equations]
    if form is not None:
        out += ["", "[form]", ", ".join(str(a) for a in form.coefficients)]
    if param is not None:
        out += ["", "[param]"] + [", ".join(_series_str(c) for c in b) for b in param.branches]
    return "\n".join(out) + "\n"
