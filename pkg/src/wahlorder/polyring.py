"""Exact sparse polynomials over Z and fraction-free linear algebra over Z[t].

Variables are tagged tuples:

    S         = ('s', 0)    deformation / divisor parameter
    T         = ('t', 0)    one-parameter smoothing coordinate
    tsub(i)   = ('ts', i)   cochain coefficient t_i
    acoef(k)  = ('a', k)    symbolic order coefficient a_k

A Poly is a canonical map {monomial: nonzero int}; a monomial is a tuple of
((var, exp), ...) pairs sorted by the fixed variable order s < t < t_i < a_k.
Printing uses graded-lex descending order so output is byte-stable, and the
printer/parser round-trip on the style "t^2 a_8 + t a_5".

solve_in_span expresses a matrix of univariate polynomials in t as a linear
combination of basis matrices by fraction-free (Bareiss) elimination over
Z[t]; coordinates come back as normalized rational functions in t.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd as _gcd
import re

Var = tuple  # (kind, index)

S: Var = ('s', 0)
T: Var = ('t', 0)

_KIND_ORDER = {'s': 0, 't': 1, 'ts': 2, 'a': 3}


def tsub(i: int) -> Var:
    return ('ts', i)


def acoef(k: int) -> Var:
    return ('a', k)


def _var_key(v: Var):
    return (_KIND_ORDER[v[0]], v[1])


def _var_str(v: Var) -> str:
    kind, idx = v
    if kind == 's':
        return 's'
    if kind == 't':
        return 't'
    if kind == 'ts':
        return f't_{idx}'
    return f'a_{idx}'


class Poly:
    """Immutable sparse polynomial with arbitrary-precision integer coefficients."""

    __slots__ = ('terms',)

    def __init__(self, terms=None):
        # canonical form: zero coefficients never stored
        self.terms = {m: c for m, c in terms.items() if c} if terms else {}

    # -- constructors ------------------------------------------------------

    @staticmethod
    def zero() -> 'Poly':
        return Poly()

    @staticmethod
    def const(c: int) -> 'Poly':
        return Poly({(): c}) if c else Poly()

    @staticmethod
    def var(v: Var, exp: int = 1, coeff: int = 1) -> 'Poly':
        if coeff == 0:
            return Poly()
        if exp == 0:
            return Poly.const(coeff)
        return Poly({((v, exp),): coeff})

    # -- ring operations ---------------------------------------------------

    def __add__(self, other: 'Poly') -> 'Poly':
        out = dict(self.terms)
        for m, c in other.terms.items():
            c2 = out.get(m, 0) + c
            if c2:
                out[m] = c2
            else:
                out.pop(m, None)
        return Poly(out)

    def __neg__(self) -> 'Poly':
        return Poly({m: -c for m, c in self.terms.items()})

    def __sub__(self, other: 'Poly') -> 'Poly':
        return self + (-other)

    def __mul__(self, other: 'Poly') -> 'Poly':
        out = {}
        for m1, c1 in self.terms.items():
            for m2, c2 in other.terms.items():
                m = _mono_mul(m1, m2)
                c = out.get(m, 0) + c1 * c2
                if c:
                    out[m] = c
                else:
                    del out[m]
        return Poly(out)

    def __pow__(self, n: int) -> 'Poly':
        if n < 0:
            raise ValueError("negative power of a polynomial")
        result = Poly.const(1)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def scale(self, c: int) -> 'Poly':
        if c == 0:
            return Poly()
        return Poly({m: c * v for m, v in self.terms.items()})

    # -- queries -----------------------------------------------------------

    def is_zero(self) -> bool:
        return not self.terms

    def variables(self) -> set:
        return {v for m in self.terms for v, _ in m}

    def degree(self) -> int:
        if not self.terms:
            return -1
        return max(sum(e for _, e in m) for m in self.terms)

    def degree_in(self, v: Var) -> int:
        if not self.terms:
            return -1
        return max(dict(m).get(v, 0) for m in self.terms)

    def coefficient_of(self, v: Var, exp: int) -> 'Poly':
        """Coefficient of v**exp, a polynomial in the remaining variables."""
        out = {}
        for m, c in self.terms.items():
            d = dict(m)
            if d.get(v, 0) == exp:
                d.pop(v, None)
                mm = tuple(sorted(d.items(), key=lambda p: _var_key(p[0])))
                out[mm] = out.get(mm, 0) + c
        return Poly({m: c for m, c in out.items() if c})

    def __eq__(self, other):
        return isinstance(other, Poly) and self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def __bool__(self):
        return bool(self.terms)

    def __repr__(self):
        return f'Poly({format_poly(self)!r})'

    def __str__(self):
        return format_poly(self)

    # -- substitution / evaluation ------------------------------------------

    def substitute(self, sub: dict) -> 'Poly':
        """Simultaneous substitution; unmapped variables pass through."""
        out = Poly()
        for m, c in self.terms.items():
            term = Poly.const(c)
            for v, e in m:
                img = sub.get(v)
                if img is None:
                    img = Poly.var(v)
                term = term * img ** e
            out = out + term
        return out

    def eval_at(self, point: dict) -> Fraction:
        """Exact rational evaluation; every variable must be assigned."""
        total = Fraction(0)
        for m, c in self.terms.items():
            val = Fraction(c)
            for v, e in m:
                if v not in point:
                    raise ValueError(f"unassigned variable {_var_str(v)}")
                val *= Fraction(point[v]) ** e
            total += val
        return total


def _mono_mul(m1, m2):
    if not m1:
        return m2
    if not m2:
        return m1
    d = dict(m1)
    for v, e in m2:
        d[v] = d.get(v, 0) + e
    return tuple(sorted(d.items(), key=lambda p: _var_key(p[0])))


# spec-level aliases
def add(p: Poly, q: Poly) -> Poly:
    return p + q


def mul(p: Poly, q: Poly) -> Poly:
    return p * q


def neg(p: Poly) -> Poly:
    return -p


def scale(c: int, p: Poly) -> Poly:
    return p.scale(c)


def substitute(p: Poly, sub: dict) -> Poly:
    return p.substitute(sub)


def eval_at(p: Poly, point: dict) -> Fraction:
    return p.eval_at(point)


# ---------------------------------------------------------------------------
# printing / parsing
# ---------------------------------------------------------------------------

def _mono_sort_key(m):
    # graded-lex, descending: higher total degree first, then larger exponent
    # on the earliest variable (monomials are stored sorted by variable).
    deg = sum(e for _, e in m)
    return (-deg, tuple((_var_key(v), -e) for v, e in m))


def sorted_terms(p: Poly):
    return sorted(p.terms.items(), key=lambda kv: _mono_sort_key(kv[0]))


def format_poly(p: Poly) -> str:
    if p.is_zero():
        return '0'
    parts = []
    for m, c in sorted_terms(p):
        factors = []
        for v, e in m:
            factors.append(_var_str(v) if e == 1 else f'{_var_str(v)}^{e}')
        body = ' '.join(factors)
        mag = abs(c)
        if not body:
            text = str(mag)
        elif mag == 1:
            text = body
        else:
            text = f'{mag} {body}'
        if not parts:
            parts.append(text if c > 0 else f'-{text}')
        else:
            parts.append(f'+ {text}' if c > 0 else f'- {text}')
    return ' '.join(parts)


class PolyParseError(ValueError):
    pass


_TOKEN = re.compile(r'\s*(?:(\d+)|([st])(?:_(\d+))?|(a)_(\d+)'
                    r'|(\^)|(\*)|([()+\-]))')


def parse_poly(text: str) -> Poly:
    """Parse the display style: 't^2 a_8 + t a_5', 't_1 t_14 + s', '-(s + 2)^2'.

    Braces as in 't^{2} a_{8}' are accepted and ignored.
    """
    text = text.replace('{', '').replace('}', '')
    tokens = []
    pos = 0
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if not m or m.end() == pos:
            if text[pos:].strip():
                raise PolyParseError(f'unexpected input at {text[pos:]!r}')
            break
        pos = m.end()
        if m.group(1):
            tokens.append(('int', int(m.group(1))))
        elif m.group(2):
            letter, idx = m.group(2), m.group(3)
            if idx is None:
                tokens.append(('var', S if letter == 's' else T))
            else:
                if letter == 's':
                    raise PolyParseError('s takes no subscript')
                tokens.append(('var', tsub(int(idx))))
        elif m.group(4):
            tokens.append(('var', acoef(int(m.group(5)))))
        elif m.group(6):
            tokens.append(('op', '^'))
        elif m.group(7):
            tokens.append(('op', '*'))
        else:
            tokens.append(('op', m.group(8)))

    ix = 0

    def peek():
        return tokens[ix] if ix < len(tokens) else (None, None)

    def expr():
        nonlocal ix
        sign = 1
        while peek() == ('op', '+') or peek() == ('op', '-'):
            if tokens[ix][1] == '-':
                sign = -sign
            ix += 1
        result = term().scale(sign)
        while peek()[0] == 'op' and peek()[1] in '+-':
            sgn = 1 if tokens[ix][1] == '+' else -1
            ix += 1
            result = result + term().scale(sgn)
        return result

    def term():
        nonlocal ix
        result = factor()
        while True:
            kind, val = peek()
            if kind == 'op' and val == '*':
                ix += 1
                result = result * factor()
            elif kind in ('int', 'var') or (kind == 'op' and val == '('):
                result = result * factor()
            else:
                return result

    def factor():
        nonlocal ix
        kind, val = peek()
        if kind is None:
            raise PolyParseError('unexpected end of input')
        if kind == 'op' and val == '-':
            ix += 1
            return -factor()
        if kind == 'int':
            ix += 1
            base = Poly.const(val)
        elif kind == 'var':
            ix += 1
            base = Poly.var(val)
        elif kind == 'op' and val == '(':
            ix += 1
            base = expr()
            if peek() != ('op', ')'):
                raise PolyParseError('missing closing parenthesis')
            ix += 1
        else:
            raise PolyParseError(f'unexpected token {val!r}')
        if peek() == ('op', '^'):
            ix += 1
            k2, v2 = peek()
            if k2 != 'int':
                raise PolyParseError('exponent must be an integer')
            ix += 1
            base = base ** v2
        return base

    result = expr()
    if ix != len(tokens):
        raise PolyParseError(f'trailing tokens at {tokens[ix:]}')
    return result


# ---------------------------------------------------------------------------
# univariate Z[t] toolkit (dense int lists, low degree first)
# ---------------------------------------------------------------------------

def _to_uni(p: Poly) -> list:
    """Poly in the single variable t -> dense coefficient list."""
    coeffs = {}
    for m, c in p.terms.items():
        if not m:
            coeffs[0] = c
        elif len(m) == 1 and m[0][0] == T:
            coeffs[m[0][1]] = c
        else:
            raise ValueError("polynomial is not univariate in t")
    if not coeffs:
        return []
    out = [0] * (max(coeffs) + 1)
    for e, c in coeffs.items():
        out[e] = c
    return out


def _from_uni(c: list) -> Poly:
    out = {}
    for e, v in enumerate(c):
        if v:
            out[() if e == 0 else ((T, e),)] = v
    return Poly(out)


def _utrim(c: list) -> list:
    while c and c[-1] == 0:
        c.pop()
    return c


def _uadd(p: list, q: list) -> list:
    if len(p) < len(q):
        p, q = q, p
    out = p[:]
    for i, v in enumerate(q):
        out[i] += v
    return _utrim(out)


def _umul(p: list, q: list) -> list:
    if not p or not q:
        return []
    out = [0] * (len(p) + len(q) - 1)
    for i, a in enumerate(p):
        if a:
            for j, b in enumerate(q):
                if b:
                    out[i + j] += a * b
    return out


def _uscale(c: int, p: list) -> list:
    return [] if c == 0 else [c * v for v in p]


def _udivexact(p: list, q: list) -> list:
    """Exact division in Z[t]; raises ArithmeticError when not exact."""
    if not q:
        raise ZeroDivisionError("division by the zero polynomial")
    if not p:
        return []
    rem = p[:]
    out = [0] * (len(p) - len(q) + 1)
    for k in range(len(p) - len(q), -1, -1):
        head = rem[k + len(q) - 1]
        if head % q[-1] != 0:
            raise ArithmeticError("inexact division in Z[t]")
        f = head // q[-1]
        out[k] = f
        if f:
            for j, b in enumerate(q):
                rem[k + j] -= f * b
    if any(rem):
        raise ArithmeticError("inexact division in Z[t]")
    return _utrim(out)


def _udivides(q: list, p: list):
    """Quotient p/q in Z[t] if exact over Q with integer result, else None."""
    if not p:
        return []
    if not q:
        return None
    rem = [Fraction(v) for v in p]
    if len(p) < len(q):
        return None
    out = [Fraction(0)] * (len(p) - len(q) + 1)
    for k in range(len(p) - len(q), -1, -1):
        f = rem[k + len(q) - 1] / q[-1]
        out[k] = f
        if f:
            for j, b in enumerate(q):
                rem[k + j] -= f * b
    if any(rem):
        return None
    if any(v.denominator != 1 for v in out):
        return None
    return _utrim([int(v) for v in out])


def _ucontent(p: list) -> int:
    g = 0
    for v in p:
        g = _gcd(g, v)
    return g


def _uprimitive(p: list) -> list:
    g = _ucontent(p)
    if g in (0, 1):
        return p[:]
    return [v // g for v in p]


def _uprem(a: list, b: list) -> list:
    """Pseudo-remainder: lead(b)^k * a reduced modulo b, staying in Z[t]."""
    a = _utrim(a[:])
    db = len(b)
    lb = b[-1]
    while a and len(a) >= db:
        top = a[-1]
        a = _uscale(lb, a)
        shift = len(a) - db
        for j, v in enumerate(b):
            a[shift + j] -= top * v
        _utrim(a)
    return a


def _ugcd(p: list, q: list) -> list:
    """Primitive gcd in Z[t] via a primitive pseudo-remainder sequence."""
    a, b = _uprimitive(_utrim(p[:])), _uprimitive(_utrim(q[:]))
    if not a:
        a, b = b, a
    while b:
        a, b = b, _uprimitive(_uprem(a, b))
    if a and a[-1] < 0:
        a = _uscale(-1, a)
    return a if a else []


class RationalCoord:
    """num/den in Z[t], gcd-reduced with positive leading denominator."""

    __slots__ = ('num', 'den')

    def __init__(self, num: list, den: list, reduce: bool = True):
        num, den = _utrim(num[:]), _utrim(den[:])
        if not den:
            raise ZeroDivisionError("rational function with zero denominator")
        if reduce and num:
            g = _ugcd(num, den)
            if len(g) > 1 or (g and g[0] != 1):
                exact_n = _udivides(g, num)
                exact_d = _udivides(g, den)
                if exact_n is not None and exact_d is not None:
                    num, den = exact_n, exact_d
            cg = _gcd(_ucontent(num), _ucontent(den))
            if cg > 1:
                num = [v // cg for v in num]
                den = [v // cg for v in den]
        if den and den[-1] < 0:
            num, den = _uscale(-1, num), _uscale(-1, den)
        self.num, self.den = num, den

    def is_polynomial(self) -> bool:
        return _udivides(self.den, self.num) is not None

    def as_poly(self) -> Poly:
        q = _udivides(self.den, self.num)
        if q is None:
            raise ArithmeticError("coordinate is not polynomial")
        return _from_uni(q)

    def __eq__(self, other):
        return (isinstance(other, RationalCoord)
                and self.num == other.num and self.den == other.den)

    def __repr__(self):
        if self.den == [1]:
            return format_poly(_from_uni(self.num))
        return f'({format_poly(_from_uni(self.num))})/({format_poly(_from_uni(self.den))})'


class DeficientBasisError(ValueError):
    """The basis matrices are linearly dependent over the rational functions."""


class OutOfSpanError(ValueError):
    """The target matrix lies outside the span of the basis."""


def _bareiss_forward(rows, ncols, nextra):
    """Fraction-free row echelon of [A | extras]; rows = list of dense lists
    of coefficient lists.  Returns (rows, pivot_positions).

    Pivot choice within a column: the entry minimizing (degree, #terms),
    keeping intermediate polynomial growth down on monomial-heavy systems.
    """
    nrows = len(rows)
    total = ncols + nextra
    piv_positions = []
    prev = [1]
    rank = 0
    for col in range(ncols):
        best = None
        for i in range(rank, nrows):
            e = rows[i][col]
            if e:
                score = (len(e), sum(1 for v in e if v))
                if best is None or score < best[0]:
                    best = (score, i)
        if best is None:
            continue
        i = best[1]
        if i != rank:
            rows[rank], rows[i] = rows[i], rows[rank]
        p = rows[rank][col]
        for i in range(rank + 1, nrows):
            m = rows[i][col]
            row = rows[i]
            if m:
                for j in range(col, total):
                    row[j] = _udivexact(
                        _uadd(_umul(p, row[j]), _uscale(-1, _umul(m, rows[rank][j]))),
                        prev)
            else:
                for j in range(col, total):
                    if row[j]:
                        row[j] = _udivexact(_umul(p, row[j]), prev)
        piv_positions.append((rank, col))
        prev = p
        rank += 1
    return rows, piv_positions


def solve_in_span_many(targets, basis):
    """Express each target matrix in the Z[t]-span of the basis matrices.

    targets: list of matrices of Poly (univariate in t); basis: list of such
    matrices, all of one shape.  Returns a list of coordinate lists (one
    RationalCoord per basis element per target).  The elimination runs once
    over [A | t_1 ... t_m].
    """
    if not basis:
        raise DeficientBasisError("empty basis")
    shape = (len(basis[0]), len(basis[0][0]))
    cells = [(i, j) for i in range(shape[0]) for j in range(shape[1])]
    ncols = len(basis)
    nextra = len(targets)
    rows = []
    for (i, j) in cells:
        row = [_to_uni(b[i][j]) for b in basis]
        row += [_to_uni(tg[i][j]) for tg in targets]
        rows.append(row)
    rows, pivots = _bareiss_forward(rows, ncols, nextra)
    if len(pivots) < ncols:
        raise DeficientBasisError(
            f"basis has rank {len(pivots)} < {ncols} over the rational functions")
    rank = len(pivots)
    for i in range(rank, len(rows)):
        for e in range(nextra):
            if rows[i][ncols + e]:
                raise OutOfSpanError(f"target {e} is outside the basis span")
    results = []
    for e in range(nextra):
        col = ncols + e
        coords: list = [None] * ncols
        for (ri, ci) in reversed(pivots):
            num, den = rows[ri][col], [1]
            for (rj, cj) in pivots:
                if cj > ci:
                    c = coords[cj]
                    u = rows[ri][cj]
                    if u and c.num:
                        num = _uadd(_umul(num, c.den), _uscale(-1, _umul(u, c.num)))
                        den = _umul(den, c.den)
            piv = rows[ri][ci]
            coords[ci] = RationalCoord(num, _umul(den, piv))
        results.append(coords)
    return results


def solve_in_span(target, basis):
    """Coordinates of one target matrix in the span of the basis matrices."""
    return solve_in_span_many([target], basis)[0]


def is_polynomial(coords):
    """(all polynomial?, cleared Poly forms with None for failures)."""
    cleared = []
    ok = True
    for c in coords:
        if c.is_polynomial():
            cleared.append(c.as_poly())
        else:
            ok = False
            cleared.append(None)
    return ok, cleared
