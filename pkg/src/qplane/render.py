"""Canonical text rendering for scalars, words and elements.

The output is valid input for the expression parser, so printing and
reparsing a canonical form is the identity.
"""

from fractions import Fraction

from .scalar import C_ONE


def _fraction_text(fr):
    return str(fr)


def coeff_text(c, as_factor=False):
    """Render a Coeff; with as_factor=True the result is a single atom
    or parenthesized group usable on the left of '*'."""
    parts = []
    if c.a:
        parts.append(_fraction_text(c.a))
    if c.b:
        if c.b == 1:
            parts.append("i")
        elif c.b == -1:
            parts.append("-i")
        else:
            parts.append("%s*i" % _fraction_text(c.b))
    if c.c:
        if c.c == 1:
            parts.append("s2")
        elif c.c == -1:
            parts.append("-s2")
        else:
            parts.append("%s*s2" % _fraction_text(c.c))
    if c.d:
        if c.d == 1:
            parts.append("i*s2")
        elif c.d == -1:
            parts.append("-i*s2")
        else:
            parts.append("%s*i*s2" % _fraction_text(c.d))
    if not parts:
        return "0"
    text = parts[0]
    for p in parts[1:]:
        text += (" - " + p[1:]) if p.startswith("-") else (" + " + p)
    if as_factor and (len(parts) > 1):
        return "(" + text + ")"
    return text


def _mono_text(ctx, expvec):
    factors = []
    for k, e in enumerate(expvec):
        if not e:
            continue
        name = ctx.symbols[k]
        if name == "r":
            if e % 2 == 0:
                k2 = e // 2
                factors.append("r" if k2 == 1 else "r^%d" % k2)
            else:
                factors.append("r^(%s)" % Fraction(e, 2))
        else:
            factors.append(name if e == 1 else "%s^%d" % (name, e))
    return "*".join(factors)


def poly_text(ctx, p):
    if not p:
        return "0"
    pieces = []
    for e in sorted(p, key=lambda ev: (sum(ev), ev), reverse=True):
        c = p[e]
        mono = _mono_text(ctx, e)
        if not mono:
            pieces.append(coeff_text(c))
        elif c == C_ONE:
            pieces.append(mono)
        elif c == -C_ONE:
            pieces.append("-" + mono)
        else:
            pieces.append(coeff_text(c, as_factor=True) + "*" + mono)
    text = pieces[0]
    for piece in pieces[1:]:
        if piece.startswith("-"):
            text += " - " + piece[1:]
        else:
            text += " + " + piece
    return text


def scalar_text(s):
    unit = {(0,) * s.ctx.nsym: C_ONE}
    if s.den == unit:
        return poly_text(s.ctx, s.num)
    return "(%s)/(%s)" % (poly_text(s.ctx, s.num), poly_text(s.ctx, s.den))


def word_text(word):
    from .algebra import letter_name
    if not word:
        return "1"
    return "*".join(letter_name(l) for l in word)


def element_text(elem):
    """Deterministic rendering: words sorted by (grade, length, names)."""
    from .algebra import word_sort_key
    if not elem.terms:
        return "0"
    pieces = []
    for word in sorted(elem.terms, key=word_sort_key):
        coeff = elem.terms[word]
        ct = scalar_text(coeff)
        wt = word_text(word)
        if wt == "1":
            piece = ct if _is_atomic(ct) else "(%s)" % ct
        elif ct == "1":
            piece = wt
        elif ct == "-1":
            piece = "-" + wt
        elif _is_atomic(ct):
            piece = ct + "*" + wt
        else:
            piece = "(%s)*%s" % (ct, wt)
        pieces.append(piece)
    text = pieces[0]
    for piece in pieces[1:]:
        if piece.startswith("-"):
            text += " - " + piece[1:]
        else:
            text += " + " + piece
    return text


def _is_atomic(text):
    # a rendered scalar usable as a '*' factor without extra parens
    if text.startswith("(") and text.endswith(")"):
        return True
    return not (" + " in text or " - " in text)
