"""Dense multi-index arrays of scalars.

Legs are split into an upper block (row indices) and a lower block
(column indices).  Composition contracts the lower block of the left
factor with the upper block of the right factor.  Storage is dense but
every loop skips zero entries, which keeps the braid-equation checks on
N^3-dimensional legs cheap.
"""

from .errors import DomainError, ShapeError
from .scalar import C_ONE, p_add, p_const, p_lead, p_mul, p_neg, p_divexact
from .render import scalar_text


class Tensor:
    """shape = (upper legs..., lower legs...); nup = number of upper legs."""

    __slots__ = ("ctx", "shape", "nup", "entries")

    def __init__(self, ctx, shape, nup, entries=None):
        self.ctx = ctx
        self.shape = tuple(shape)
        self.nup = nup
        size = 1
        for d in self.shape:
            size *= d
        if entries is None:
            entries = [ctx.zero] * size
        if len(entries) != size:
            raise ShapeError("entry count does not match shape")
        self.entries = entries

    # -- index helpers ------------------------------------------------------

    def _flat(self, idx):
        f = 0
        for i, d in zip(idx, self.shape):
            if not 0 <= i < d:
                raise ShapeError("index %r out of range for %r" % (idx, self.shape))
            f = f * d + i
        return f

    def __getitem__(self, idx):
        return self.entries[self._flat(idx)]

    def __setitem__(self, idx, val):
        self.entries[self._flat(idx)] = val

    def nonzero(self):
        """Yield (index tuple, scalar) over nonzero entries."""
        shape = self.shape
        for f, v in enumerate(self.entries):
            if v.is_zero():
                continue
            idx, rem = [], f
            for d in reversed(shape):
                idx.append(rem % d)
                rem //= d
            yield tuple(reversed(idx)), v

    @property
    def upper_shape(self):
        return self.shape[: self.nup]

    @property
    def lower_shape(self):
        return self.shape[self.nup:]

    def _block_sizes(self):
        ru = 1
        for d in self.upper_shape:
            ru *= d
        rl = 1
        for d in self.lower_shape:
            rl *= d
        return ru, rl

    # -- constructors ---------------------------------------------------------

    @staticmethod
    def identity(ctx, dims):
        from itertools import product
        t = Tensor(ctx, tuple(dims) + tuple(dims), len(dims))
        one = ctx.one
        for idx in product(*[range(d) for d in dims]):
            t[idx + idx] = one
        return t

    @staticmethod
    def flip(ctx, d):
        """flip^{ab}_{cd} = delta^a_d delta^b_c."""
        t = Tensor(ctx, (d, d, d, d), 2)
        one = ctx.one
        for a in range(d):
            for b in range(d):
                t[a, b, b, a] = one
        return t

    # -- algebra ----------------------------------------------------------------

    def __add__(self, other):
        self._same_shape(other)
        return Tensor(self.ctx, self.shape, self.nup,
                      [x + y for x, y in zip(self.entries, other.entries)])

    def __sub__(self, other):
        self._same_shape(other)
        return Tensor(self.ctx, self.shape, self.nup,
                      [x - y for x, y in zip(self.entries, other.entries)])

    def __neg__(self):
        return Tensor(self.ctx, self.shape, self.nup,
                      [-x for x in self.entries])

    def scale(self, s):
        if s.is_zero():
            return Tensor(self.ctx, self.shape, self.nup)
        return Tensor(self.ctx, self.shape, self.nup,
                      [x * s if not x.is_zero() else x for x in self.entries])

    def _same_shape(self, other):
        if self.shape != other.shape or self.nup != other.nup:
            raise ShapeError("shape mismatch: %r vs %r" % (self.shape, other.shape))

    def is_zero(self):
        return all(x.is_zero() for x in self.entries)

    def __eq__(self, other):
        if not isinstance(other, Tensor):
            return NotImplemented
        if self.shape != other.shape or self.nup != other.nup:
            return False
        return all((x - y).is_zero() for x, y in zip(self.entries, other.entries))

    __hash__ = None

    def compose(self, other):
        """Contract self's lower legs with other's upper legs (all of them)."""
        if self.lower_shape != other.upper_shape:
            raise ShapeError("compose: %r against %r" %
                             (self.lower_shape, other.upper_shape))
        ru, rk = self._block_sizes()
        rk2, rl = other._block_sizes()
        out = Tensor(self.ctx, self.upper_shape + other.lower_shape, self.nup)
        # sparse row/column interplay on the flat matrix views
        rows = {}
        for f, v in enumerate(self.entries):
            if not v.is_zero():
                rows.setdefault(f // rk, []).append((f % rk, v))
        cols = {}
        for f, v in enumerate(other.entries):
            if not v.is_zero():
                cols.setdefault(f // rl, []).append((f % rl, v))
        acc = out.entries
        for i, row in rows.items():
            base = i * rl
            for k, v in row:
                col = cols.get(k)
                if not col:
                    continue
                for j, w in col:
                    acc[base + j] = acc[base + j] + v * w
        return out

    def kron(self, other):
        """Tensor product: upper legs concatenate, lower legs concatenate."""
        ru, rl = self._block_sizes()
        su, sl = other._block_sizes()
        out = Tensor(self.ctx,
                     self.upper_shape + other.upper_shape +
                     self.lower_shape + other.lower_shape,
                     self.nup + other.nup)
        acc = out.entries
        for f, v in enumerate(self.entries):
            if v.is_zero():
                continue
            i, k = f // rl, f % rl
            for g, w in enumerate(other.entries):
                if w.is_zero():
                    continue
                j, l = g // sl, g % sl
                flat = ((i * su + j) * rl + k) * sl + l
                acc[flat] = v * w
        return out

    def permute(self, perm):
        """Relabel legs: new leg p takes the old leg perm[p]."""
        if sorted(perm) != list(range(len(self.shape))):
            raise ShapeError("not a permutation: %r" % (perm,))
        shape = tuple(self.shape[p] for p in perm)
        out = Tensor(self.ctx, shape, self.nup)
        for idx, v in self.nonzero():
            out[tuple(idx[p] for p in perm)] = v
        return out

    def contract(self, leg_a, leg_b):
        """Trace two legs of equal dimension against each other."""
        if self.shape[leg_a] != self.shape[leg_b]:
            raise ShapeError("contract: unequal leg dimensions")
        keep = [k for k in range(len(self.shape)) if k not in (leg_a, leg_b)]
        nup = sum(1 for k in keep if k < self.nup)
        out = Tensor(self.ctx, tuple(self.shape[k] for k in keep), nup)
        for idx, v in self.nonzero():
            if idx[leg_a] != idx[leg_b]:
                continue
            tgt = tuple(idx[k] for k in keep)
            out[tgt] = out[tgt] + v
        return out

    def trace(self):
        """Full trace of a square matrix view."""
        ru, rl = self._block_sizes()
        if ru != rl:
            raise ShapeError("trace of non-square tensor")
        tot = self.ctx.zero
        for i in range(ru):
            tot = tot + self.entries[i * rl + i]
        return tot

    # -- matrix view ------------------------------------------------------------

    def matrix_rows(self):
        """Rows of the flat matrix view as dicts {col: Scalar}."""
        ru, rl = self._block_sizes()
        rows = [dict() for _ in range(ru)]
        for f, v in enumerate(self.entries):
            if not v.is_zero():
                rows[f // rl][f % rl] = v
        return rows, rl

    def to_json(self):
        data = {"shape": list(self.shape),
                "entries": [{"idx": list(idx), "val": scalar_text(v)}
                            for idx, v in self.nonzero()]}
        return data

    def __repr__(self):
        nz = sum(1 for v in self.entries if not v.is_zero())
        return "Tensor(shape=%r, nup=%d, nnz=%d)" % (self.shape, self.nup, nz)


def rank_exact(rows, ncols, nsym):
    """Rank over the rational-function field via fraction-free elimination.

    rows: list of dicts {col: Scalar}.  Rows are first cleared to Laurent
    polynomials, then Bareiss-style elimination with exact division runs
    with pivots chosen by fewest numerator monomials.
    """
    unit = p_const(nsym, C_ONE)
    work = []
    for row in rows:
        if not row:
            continue
        # clear denominators: entry_k * prod_{j != k} den_j, built exactly
        items = list(row.items())
        suffixes = [unit] * (len(items) + 1)
        for k in range(len(items) - 1, -1, -1):
            suffixes[k] = p_mul(suffixes[k + 1], items[k][1].den)
        cleared, prefix = {}, unit
        for k, (col, v) in enumerate(items):
            if v.num:
                cleared[col] = p_mul(p_mul(prefix, v.num), suffixes[k + 1])
            prefix = p_mul(prefix, v.den)
        if cleared:
            work.append(cleared)

    rank = 0
    prev_pivot = unit
    while work:
        # pivot heuristic: fewest monomials in the entry
        best = None
        for ri, row in enumerate(work):
            for col, poly in row.items():
                key = (len(poly), col)
                if best is None or key < best[0]:
                    best = (key, ri, col)
        if best is None:
            break
        _, ri, col = best
        pivot_row = work.pop(ri)
        pivot = pivot_row[col]
        rank += 1
        nxt = []
        for row in work:
            entry = row.pop(col, None)
            new = {}
            cols = set(row)
            if entry is not None:
                cols |= set(pivot_row) - {col}
            for c in cols:
                a = row.get(c)
                val = p_mul(a, pivot) if a else {}
                if entry is not None:
                    b = pivot_row.get(c)
                    if b:
                        val = p_add(val, p_neg(p_mul(entry, b)))
                if val:
                    new[c] = p_divexact(val, prev_pivot)
            if new:
                nxt.append(new)
        work = nxt
        prev_pivot = pivot
    return rank


def tensor_rank(t):
    rows, ncols = t.matrix_rows()
    return rank_exact(rows, ncols, t.ctx.nsym)
