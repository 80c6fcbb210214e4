"""Text form of elements: ``2*y(1,2).e(2,1)^3.h(1).z(1,1) + 4``.

Generators are ``e(i,j)``, ``h(i)`` (same as ``e(i,i)``), ``y(i,j)`` and
``z(i,j)``; ``.`` or ``*`` multiplies, ``^k`` takes powers, and terms are joined by
``+`` or ``-`` with optional integer coefficients ``c*``.  A word need not
be in normal order: it is multiplied out in the algebra.
"""

from __future__ import annotations

import re

_FACTOR = re.compile(r"^([ehyz])\((\d+)(?:,(\d+))?\)(?:\^(\d+))?$")


class ParseError(ValueError):
    pass


def parse_basis_vector(table, text: str) -> int:
    m = _FACTOR.match(text.strip().replace(" ", ""))
    if not m or m.group(4):
        raise ParseError(f"not a basis vector: {text!r}")
    return _factor_index(table, m)


def _factor_index(table, m) -> int:
    name, i, j = m.group(1), int(m.group(2)), m.group(3)
    n = table.n
    if name == "h":
        if j is not None:
            raise ParseError("h takes a single index")
        j = i
        name = "e"
    elif j is None:
        raise ParseError(f"{name} takes two indices")
    j = int(j)
    if not (1 <= i <= n and 1 <= j <= n):
        raise ParseError(f"index out of range 1..{n}: {m.group(0)}")
    if name == "y":
        if i == j:
            raise ParseError("y(i,i) is zero; y needs i != j")
        if i > j:
            raise ParseError("write y(i,j) with i < j (y(j,i) = -y(i,j))")
    return table.idx(name, i, j)


def parse_element(alg, text: str):
    src = text.replace(" ", "")
    if not src:
        raise ParseError("empty expression")
    tokens = re.split(r"(?<=[^*^(,])([+-])", src)
    if tokens and tokens[0] == "":
        tokens = tokens[1:]
    sign = 1
    out = alg.zero()
    pending_sign = 1
    for tok in tokens:
        if tok in "+-" and tok:
            pending_sign = 1 if tok == "+" else -1
            continue
        if tok.startswith("-"):
            sign, tok = -pending_sign, tok[1:]
        else:
            sign = pending_sign
        pending_sign = 1
        out = out + _parse_term(alg, tok) * sign
    return out


def _parse_term(alg, tok: str):
    """A product of integers and factors, separated by ``*`` or ``.``."""
    coef = 1
    u = alg.one()
    for part in re.split(r"[*.]", tok):
        if part.lstrip("-").isdigit():
            coef *= int(part)
            continue
        m = _FACTOR.match(part)
        if not m:
            raise ParseError(f"bad factor {part!r}")
        g = _factor_index(alg.table, m)
        u = u * alg.gen(g) ** int(m.group(4) or 1)
    return u * coef


def format_monomial(alg, m) -> str:
    parts = []
    for k, e in enumerate(m):
        if e:
            label = alg.table.basis[alg.order[k]].label
            parts.append(label if e == 1 else f"{label}^{e}")
    return ".".join(parts)


def format_element(u) -> str:
    if not u.terms:
        return "0"
    alg = u.alg
    pieces = []
    for m in sorted(u.terms):
        c = u.terms[m]
        word = format_monomial(alg, m)
        if not word:
            pieces.append(str(c))
        elif c == 1:
            pieces.append(word)
        else:
            pieces.append(f"{c}*{word}")
    return " + ".join(pieces)
