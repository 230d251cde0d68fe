"""Free noncommutative words and linear combinations over Scalar.

A letter is a pair (kind, index).  The dilatation v is stored as a single
letter carrying an integer power, so u = v^-1 and adjacent v powers merge
on multiplication; this removes the uv = vu = 1 relations entirely.
"""

from .errors import DomainError
from .scalar import Scalar

# display order of kinds; also the normal-order rank of each class.
KIND_ORDER = [
    "dz", "du", "dv", "om", "dx",
    "z", "v", "x",
    "pd", "pdot", "pcirc",
    # q-Lie sector letters (disjoint alphabets)
    "w", "wdot", "wcirc",
    "chi", "chidot", "chicirc",
    # Minkowski basis letters
    "dX", "X", "P",
]
_KIND_RANK = {k: 100 * i for i, k in enumerate(KIND_ORDER)}

_FORM_GRADE = {"dz": 1, "du": 1, "dv": 1, "dx": 1, "om": 2, "dX": 1,
               "w": 1, "wdot": 1, "wcirc": 1}

_INDEXED = {"dx", "x", "pd", "w", "chi", "dX", "X", "P"}


def L(kind, idx=0):
    return (kind, idx)


def letter_rank(letter):
    kind, idx = letter
    base = _KIND_RANK[kind]
    return base + (idx if kind in _INDEXED else 0)


def letter_grade(letter):
    return _FORM_GRADE.get(letter[0], 0)


def letter_name(letter):
    kind, idx = letter
    if kind == "v":
        if idx == 1:
            return "v"
        if idx == -1:
            return "u"
        return ("v^%d" % idx) if idx > 0 else ("u^%d" % -idx)
    if kind in _INDEXED:
        return "%s%d" % (kind, idx)
    return kind


def word_grade(word):
    return sum(letter_grade(l) for l in word)


def word_charge(word):
    """Coordinate letters minus derivative letters; v powers count signed."""
    c = 0
    for kind, idx in word:
        if kind in ("x", "z", "X"):
            c += 1
        elif kind == "v":
            c += idx
        elif kind in ("pd", "pdot", "pcirc", "P"):
            c -= 1
    return c


def word_sort_key(word):
    return (word_grade(word), len(word), tuple(letter_rank(l) for l in word))


def make_word(letters):
    """Normalize a letter sequence: merge adjacent v powers, drop v^0."""
    out = []
    for l in letters:
        if l[0] == "v":
            if l[1] == 0:
                continue
            if out and out[-1][0] == "v":
                k = out[-1][1] + l[1]
                out.pop()
                if k:
                    out.append(("v", k))
                continue
        out.append(l)
    return tuple(out)


def word_mul(w1, w2):
    if not w1:
        return w2
    if not w2:
        return w1
    if w1[-1][0] == "v" and w2[0][0] == "v":
        k = w1[-1][1] + w2[0][1]
        mid = (("v", k),) if k else ()
        return w1[:-1] + mid + w2[1:]
    return w1 + w2


class Element:
    """Finite map word -> Scalar with ring operations."""

    __slots__ = ("ctx", "terms")

    def __init__(self, ctx, terms=None):
        self.ctx = ctx
        self.terms = terms if terms is not None else {}

    # -- constructors --------------------------------------------------------

    @classmethod
    def zero(cls, ctx):
        return cls(ctx)

    @classmethod
    def one(cls, ctx):
        return cls(ctx, {(): ctx.one})

    @classmethod
    def word(cls, ctx, letters, coeff=None):
        w = make_word(letters)
        c = ctx.one if coeff is None else coeff
        if c.is_zero():
            return cls(ctx)
        return cls(ctx, {w: c})

    @classmethod
    def letter(cls, ctx, kind, idx=0, coeff=None):
        return cls.word(ctx, [(kind, idx)], coeff)

    def copy(self):
        return Element(self.ctx, dict(self.terms))

    # -- predicates ------------------------------------------------------------

    def is_zero(self):
        return not self.terms

    def __bool__(self):
        return bool(self.terms)

    def __eq__(self, other):
        if isinstance(other, Element):
            return (self - other).is_zero()
        return NotImplemented

    __hash__ = None

    def grade(self):
        """Form degree when homogeneous; raises otherwise."""
        grades = {word_grade(w) for w in self.terms}
        if not grades:
            return 0
        if len(grades) > 1:
            raise DomainError("element is not grade homogeneous")
        return grades.pop()

    # -- linear structure --------------------------------------------------------

    def _iadd_term(self, word, coeff):
        cur = self.terms.get(word)
        if cur is None:
            if not coeff.is_zero():
                self.terms[word] = coeff
        else:
            s = cur + coeff
            if s.is_zero():
                del self.terms[word]
            else:
                self.terms[word] = s

    def __add__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        out = self.copy()
        for w, c in other.terms.items():
            out._iadd_term(w, c)
        return out

    __radd__ = __add__

    def __neg__(self):
        return Element(self.ctx, {w: -c for w, c in self.terms.items()})

    def __sub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return other - self

    def scale(self, s):
        if s.is_zero():
            return Element(self.ctx)
        return Element(self.ctx, {w: c * s for w, c in self.terms.items()})

    def __mul__(self, other):
        s = Scalar.coerce(self.ctx, other)
        if s is not None:
            return self.scale(s)
        if not isinstance(other, Element):
            return NotImplemented
        out = Element(self.ctx)
        for w1, c1 in self.terms.items():
            for w2, c2 in other.terms.items():
                out._iadd_term(word_mul(w1, w2), c1 * c2)
        return out

    def __rmul__(self, other):
        s = Scalar.coerce(self.ctx, other)
        if s is not None:
            return self.scale(s)
        return NotImplemented

    def __pow__(self, n):
        if n == 0:
            return Element.one(self.ctx)
        if len(self.terms) == 1:
            (w, c), = self.terms.items()
            if len(w) == 1 and w[0][0] == "v":
                return Element.word(self.ctx, [("v", w[0][1] * n)], c ** n)
        if n < 0:
            raise DomainError("negative power of a non-dilatation element")
        out = Element.one(self.ctx)
        for _ in range(n):
            out = out * self
        return out

    # -- miscellany ------------------------------------------------------------

    def map_coeffs(self, f):
        out = Element(self.ctx)
        for w, c in self.terms.items():
            out._iadd_term(w, f(c))
        return out

    def leading_word(self):
        if not self.terms:
            raise DomainError("zero element has no leading word")
        return max(self.terms, key=word_sort_key)

    def monic(self):
        """Scale so the leading word has coefficient one."""
        if not self.terms:
            return self
        lead = self.leading_word()
        return self.scale(self.terms[lead].inverse())

    def _coerce(self, other):
        if isinstance(other, Element):
            return other
        s = Scalar.coerce(self.ctx, other)
        if s is not None:
            if s.is_zero():
                return Element(self.ctx)
            return Element(self.ctx, {(): s})
        return None

    def text(self):
        from .render import element_text
        return element_text(self)

    def __repr__(self):
        return "Element(%s)" % self.text()

    def to_json(self):
        out = []
        for w in sorted(self.terms, key=word_sort_key):
            out.append({"coeff": self.terms[w].text(),
                        "word": [letter_name(l) for l in _explode_v(w)]})
        return {"terms": out}


def _explode_v(word):
    """Expand v powers into unit letters for serialization."""
    out = []
    for l in word:
        if l[0] == "v" and abs(l[1]) > 1:
            unit = ("v", 1) if l[1] > 0 else ("v", -1)
            out.extend([unit] * abs(l[1]))
        else:
            out.append(l)
    return out
