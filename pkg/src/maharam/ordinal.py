"""Ordinals below epsilon_0 in Cantor normal form.

An ordinal is stored as a tuple of ``(exponent, coefficient)`` pairs with
strictly decreasing exponents and positive integer coefficients; the empty
tuple is 0.  Values are immutable and hashable.

Besides the usual (non-commutative) sum and product this module provides
the natural (Hessenberg) sum, ordinal exponentiation, a text grammar and a
fixed numbering of all ordinals below epsilon_0 by the natural numbers.

Numbering
---------
``decode(m)``: write the set bits of ``m`` as ``s_0 < s_1 < ... < s_{k-1}``
and put ``a_i = s_i - i`` (a non-decreasing sequence).  The ordinal is
``w^(decode(a_0)) + ... + w^(decode(a_{k-1}))`` rearranged into normal
form.  ``code`` is the inverse: expand every term ``w^e * c`` into ``c``
copies of ``e``, sort the exponent codes ascending as ``a_0 <= a_1 <= ...``
and return ``sum(2 ** (a_i + i))``.  This is a bijection between the
naturals and the ordinals below epsilon_0 (finite multisets of naturals
correspond to finite sets via ``a_i -> a_i + i``), so ``code(0) == 0`` and
``code`` is the least (and only) preimage.  The first values are::

    0 -> 0, 1 -> 1, 2 -> w, 3 -> 2, 4 -> w^(w), 5 -> w + 1, 6 -> w*2,
    7 -> 3, 8 -> w^(2), 9 -> w^(w) + 1, 10 -> w^(w) + w, ...
"""

from __future__ import annotations

import sys
from functools import lru_cache
from typing import Iterator, Union

__all__ = [
    "Ordinal",
    "OrdinalError",
    "OrdinalSyntaxError",
    "OrdinalCeilingError",
    "ZERO",
    "ONE",
    "OMEGA",
    "MAX_DEPTH",
    "as_ordinal",
    "compare",
    "add",
    "mul",
    "omega_pow",
    "nat_sum",
    "nat_sum_all",
    "power",
    "pred",
    "code",
    "decode",
    "parse",
    "render",
    "evaluate",
]

#: Tower ceiling: ordinals nested deeper than this are refused.
MAX_DEPTH = 16


class OrdinalError(ValueError):
    pass


class OrdinalCeilingError(OrdinalError):
    pass


class OrdinalSyntaxError(OrdinalError):
    def __init__(self, message: str, position: int):
        super().__init__(f"{message} at position {position}")
        self.position = position


IntoOrdinal = Union["Ordinal", int]


class Ordinal:
    __slots__ = ("terms", "_hash", "_depth")

    def __init__(self, terms=()):
        terms = tuple(terms)
        depth = 0
        prev = None
        for exp, coef in terms:
            if not isinstance(exp, Ordinal):
                raise TypeError("exponents must be Ordinal instances")
            if not isinstance(coef, int) or coef < 1:
                raise OrdinalError(f"coefficient must be a positive integer, got {coef!r}")
            if prev is not None and not exp < prev:
                raise OrdinalError("exponents must be strictly decreasing")
            prev = exp
            depth = max(depth, exp._depth + 1)
        if depth > MAX_DEPTH:
            raise OrdinalCeilingError(f"ordinal tower deeper than {MAX_DEPTH}")
        self.terms = terms
        self._depth = depth
        self._hash = hash(terms)

    @classmethod
    def of(cls, n: int) -> "Ordinal":
        if n < 0:
            raise OrdinalError("negative integers are not ordinals")
        return _finite(n)

    # -- structure ---------------------------------------------------------
    @property
    def depth(self) -> int:
        return self._depth

    def is_zero(self) -> bool:
        return not self.terms

    def is_finite(self) -> bool:
        return not self.terms or self.terms[0][0].is_zero()

    def is_successor(self) -> bool:
        return bool(self.terms) and self.terms[-1][0].is_zero()

    def is_limit(self) -> bool:
        return bool(self.terms) and not self.terms[-1][0].is_zero()

    def leading_exponent(self) -> "Ordinal":
        if not self.terms:
            raise OrdinalError("0 has no leading exponent")
        return self.terms[0][0]

    def leading_coefficient(self) -> int:
        if not self.terms:
            raise OrdinalError("0 has no leading coefficient")
        return self.terms[0][1]

    def __int__(self) -> int:
        if not self.is_finite():
            raise OrdinalError(f"{render(self)} is not finite")
        return self.terms[0][1] if self.terms else 0

    # -- comparison --------------------------------------------------------
    def __eq__(self, other):
        if isinstance(other, int):
            other = _coerce(other)
        if not isinstance(other, Ordinal):
            return NotImplemented
        return self.terms == other.terms

    def __hash__(self):
        return self._hash

    def __lt__(self, other):
        return compare(self, other) < 0

    def __le__(self, other):
        return compare(self, other) <= 0

    def __gt__(self, other):
        return compare(self, other) > 0

    def __ge__(self, other):
        return compare(self, other) >= 0

    def __bool__(self):
        return bool(self.terms)

    # -- arithmetic sugar ----------------------------------------------------
    def __add__(self, other):
        return add(self, other)

    def __radd__(self, other):
        return add(other, self)

    def __mul__(self, other):
        return mul(self, other)

    def __rmul__(self, other):
        return mul(other, self)

    def __pow__(self, other):
        return power(self, other)

    def __repr__(self):
        return f"Ordinal({render(self)!r})"

    def __str__(self):
        return render(self)


def _coerce(x: IntoOrdinal) -> Ordinal:
    if isinstance(x, Ordinal):
        return x
    if isinstance(x, bool) or not isinstance(x, int):
        raise TypeError(f"cannot interpret {x!r} as an ordinal")
    if x < 0:
        raise OrdinalError("negative integers are not ordinals")
    return _finite(x)


as_ordinal = _coerce

ZERO = Ordinal()
ONE = Ordinal(((ZERO, 1),))
OMEGA = Ordinal(((ONE, 1),))


def _finite(n: int) -> Ordinal:
    return Ordinal(((ZERO, n),)) if n else ZERO


def compare(a: IntoOrdinal, b: IntoOrdinal) -> int:
    """Return -1, 0 or 1.  Lexicographic on the normal forms."""
    a, b = _coerce(a), _coerce(b)
    if a is b:
        return 0
    for (ea, ca), (eb, cb) in zip(a.terms, b.terms):
        c = compare(ea, eb)
        if c:
            return c
        if ca != cb:
            return -1 if ca < cb else 1
    la, lb = len(a.terms), len(b.terms)
    return (la > lb) - (la < lb)


def add(a: IntoOrdinal, b: IntoOrdinal) -> Ordinal:
    a, b = _coerce(a), _coerce(b)
    if not b.terms:
        return a
    lead, coef = b.terms[0]
    head = []
    for e, c in a.terms:
        cmp = compare(e, lead)
        if cmp > 0:
            head.append((e, c))
        elif cmp == 0:
            head.append((e, c + coef))
            return Ordinal(head + list(b.terms[1:]))
        else:
            break
    return Ordinal(head + list(b.terms))


def mul(a: IntoOrdinal, b: IntoOrdinal) -> Ordinal:
    a, b = _coerce(a), _coerce(b)
    if not a.terms or not b.terms:
        return ZERO
    lead, lead_coef = a.terms[0]
    result = ZERO
    for f, c in b.terms:
        if f.is_zero():
            piece = Ordinal(((lead, lead_coef * c),) + a.terms[1:])
        else:
            piece = Ordinal(((add(lead, f), c),))
        result = add(result, piece)
    return result


def omega_pow(a: IntoOrdinal) -> Ordinal:
    return Ordinal(((_coerce(a), 1),))


def nat_sum(a: IntoOrdinal, b: IntoOrdinal) -> Ordinal:
    """Natural (Hessenberg) sum: add coefficients exponent by exponent."""
    a, b = _coerce(a), _coerce(b)
    ta, tb = a.terms, b.terms
    i = j = 0
    out = []
    while i < len(ta) and j < len(tb):
        c = compare(ta[i][0], tb[j][0])
        if c > 0:
            out.append(ta[i])
            i += 1
        elif c < 0:
            out.append(tb[j])
            j += 1
        else:
            out.append((ta[i][0], ta[i][1] + tb[j][1]))
            i += 1
            j += 1
    out.extend(ta[i:])
    out.extend(tb[j:])
    return Ordinal(out)


def nat_sum_all(values) -> Ordinal:
    total = ZERO
    for v in values:
        total = nat_sum(total, v)
    return total


def pred(a: IntoOrdinal) -> Ordinal:
    """Immediate predecessor of a successor ordinal."""
    a = _coerce(a)
    if not a.is_successor():
        raise OrdinalError(f"{render(a)} has no immediate predecessor")
    last_e, last_c = a.terms[-1]
    if last_c == 1:
        return Ordinal(a.terms[:-1])
    return Ordinal(a.terms[:-1] + ((last_e, last_c - 1),))


def _divide_by_omega(limit: Ordinal) -> Ordinal:
    # limit = w * q with every exponent >= 1; returns q
    out = []
    for e, c in limit.terms:
        if e.is_finite():
            e = _finite(int(e) - 1)
        out.append((e, c))
    return Ordinal(out)


def power(a: IntoOrdinal, b: IntoOrdinal) -> Ordinal:
    """Ordinal exponentiation ``a ** b``."""
    a, b = _coerce(a), _coerce(b)
    if not b.terms:
        return ONE
    if not a.terms:
        return ZERO
    if a == ONE:
        return ONE
    finite_part = b.terms[-1][1] if b.terms[-1][0].is_zero() else 0
    limit_part = Ordinal(b.terms[:-1]) if finite_part else b
    result = ONE
    if limit_part.terms:
        q = _divide_by_omega(limit_part)
        if a.is_finite():
            result = omega_pow(q)
        else:
            result = omega_pow(mul(a.leading_exponent(), mul(OMEGA, q)))
    base, n, acc = a, finite_part, ONE
    while n:
        if n & 1:
            acc = mul(acc, base)
        n >>= 1
        if n:
            base = mul(base, base)
    return mul(result, acc)


# -- numbering ---------------------------------------------------------------

@lru_cache(maxsize=None)
def decode(m: int) -> Ordinal:
    if m < 0:
        raise OrdinalError("codes are natural numbers")
    ones = [bit for bit, ch in enumerate(reversed(bin(m)[2:])) if ch == "1"]
    exps = [decode(bit - i) for i, bit in enumerate(ones)]
    if not exps:
        return ZERO
    exps.sort(reverse=True)
    terms = []
    for e in exps:
        if terms and terms[-1][0] == e:
            terms[-1] = (e, terms[-1][1] + 1)
        else:
            terms.append((e, 1))
    return Ordinal(terms)


@lru_cache(maxsize=None)
def code(a: Ordinal) -> int:
    a = _coerce(a)
    codes = []
    for e, c in a.terms:
        codes.extend([code(e)] * c)
    codes.sort()
    return sum(1 << (x + i) for i, x in enumerate(codes))


# -- text -----------------------------------------------------------------------

def render(a: IntoOrdinal) -> str:
    a = _coerce(a)
    if not a.terms:
        return "0"
    parts = []
    for e, c in a.terms:
        if e.is_zero():
            parts.append(str(c))
            continue
        base = "w" if e == ONE else f"w^({render(e)})"
        parts.append(base if c == 1 else f"{base}*{c}")
    return " + ".join(parts)


_PUNCT = "+*#^()"


def _tokens(text: str) -> list[tuple[str, object, int]]:
    out = []
    i = 0
    while i < len(text):
        ch = text[i]
        if ch.isspace():
            i += 1
        elif ch.isdigit():
            j = i
            while j < len(text) and text[j].isdigit():
                j += 1
            out.append(("nat", int(text[i:j]), i))
            i = j
        elif ch in "wω":
            out.append(("w", None, i))
            i += 1
        elif ch in _PUNCT:
            out.append((ch, None, i))
            i += 1
        else:
            raise OrdinalSyntaxError(f"unexpected character {ch!r}", i)
    out.append(("end", None, len(text)))
    return out


class _Cursor:
    def __init__(self, text: str):
        self.toks = _tokens(text)
        self.i = 0

    def peek(self):
        return self.toks[self.i]

    def take(self, kind: str | None = None):
        tok = self.toks[self.i]
        if kind is not None and tok[0] != kind:
            want = "a number" if kind == "nat" else repr(kind)
            got = "end of input" if tok[0] == "end" else repr(tok[0] if tok[1] is None else tok[1])
            raise OrdinalSyntaxError(f"expected {want}, found {got}", tok[2])
        self.i += 1
        return tok


def parse(text: str, normalize: bool = False) -> Ordinal:
    """Parse a normal-form literal such as ``"w^(w)*2 + w + 3"``.

    Terms must appear with strictly decreasing exponents; with
    ``normalize=True`` out-of-order input is instead summed left to right.
    """
    cur = _Cursor(text)
    result = _parse_literal(cur, normalize)
    tok = cur.peek()
    if tok[0] != "end":
        raise OrdinalSyntaxError("trailing input", tok[2])
    return result


def _parse_literal(cur: _Cursor, normalize: bool) -> Ordinal:
    tok = cur.peek()
    if tok[0] == "nat" and tok[1] == 0:
        cur.take()
        return ZERO
    terms: list[tuple[Ordinal, int, int]] = []
    while True:
        terms.append(_parse_term(cur, normalize))
        if cur.peek()[0] != "+":
            break
        cur.take("+")
    result = ZERO
    for k, (e, c, pos) in enumerate(terms):
        if k and not e < terms[k - 1][0] and not normalize:
            raise OrdinalSyntaxError("terms must have strictly decreasing exponents", pos)
        result = add(result, Ordinal(((e, c),)))
    return result


def _parse_term(cur: _Cursor, normalize: bool) -> tuple[Ordinal, int, int]:
    tok = cur.peek()
    if tok[0] == "nat":
        cur.take()
        if tok[1] < 1:
            raise OrdinalSyntaxError("a finite term must be at least 1", tok[2])
        return ZERO, tok[1], tok[2]
    cur.take("w")
    exp = ONE
    if cur.peek()[0] == "^":
        cur.take("^")
        cur.take("(")
        exp = _parse_literal(cur, normalize)
        cur.take(")")
    coef = 1
    if cur.peek()[0] == "*":
        cur.take("*")
        n = cur.take("nat")
        if n[1] < 1:
            raise OrdinalSyntaxError("coefficient must be at least 1", n[2])
        coef = n[1]
    if exp.is_zero():
        # w^(0) is 1
        return ZERO, coef, tok[2]
    return exp, coef, tok[2]


def evaluate(text: str) -> Ordinal:
    """Evaluate an expression with ``+`` (ordinal sum), ``#`` (natural
    sum), ``*`` (product), ``w^x`` and parentheses.

    ``+`` and ``#`` share the lowest precedence and associate to the left.
    """
    cur = _Cursor(text)
    value = _expr_sum(cur)
    tok = cur.peek()
    if tok[0] != "end":
        raise OrdinalSyntaxError("trailing input", tok[2])
    return value


def _expr_sum(cur: _Cursor) -> Ordinal:
    value = _expr_prod(cur)
    while cur.peek()[0] in ("+", "#"):
        op = cur.take()[0]
        rhs = _expr_prod(cur)
        value = add(value, rhs) if op == "+" else nat_sum(value, rhs)
    return value


def _expr_prod(cur: _Cursor) -> Ordinal:
    value = _expr_atom(cur)
    while cur.peek()[0] == "*":
        cur.take()
        value = mul(value, _expr_atom(cur))
    return value


def _expr_atom(cur: _Cursor) -> Ordinal:
    tok = cur.peek()
    if tok[0] == "nat":
        cur.take()
        return _finite(tok[1])
    if tok[0] == "(":
        cur.take()
        value = _expr_sum(cur)
        cur.take(")")
        return value
    if tok[0] == "w":
        cur.take()
        if cur.peek()[0] == "^":
            cur.take()
            return omega_pow(_expr_atom(cur))
        return OMEGA
    got = "end of input" if tok[0] == "end" else repr(tok[0])
    raise OrdinalSyntaxError(f"expected an operand, found {got}", tok[2])


def iter_ordinals_below(bound: int) -> Iterator[Ordinal]:
    """``decode(0), decode(1), ..., decode(bound - 1)``."""
    for m in range(bound):
        yield decode(m)


sys.setrecursionlimit(max(sys.getrecursionlimit(), 10000))
