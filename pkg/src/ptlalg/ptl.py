"""The partial Temperley-Lieb algebra: basis strata, block decomposition,
the matrix-algebra isomorphism, and dimension bookkeeping.

The bar basis is indexed by balanced Motzkin diagrams and splits by edge
count into pairwise orthogonal two-sided ideals X(n); each X(n) is the
algebra of binom(k,n) x binom(k,n) matrices over TL_n(delta - 1), with
rows and columns labelled by the n-subsets of {1..k} in colexicographic
order and matrix entries transported through the triple bijection
d <-> (A, t, B).
"""

from __future__ import annotations

from fractions import Fraction
from math import comb

from .algebra import AlgebraSpec, Element, change_basis
from .diagram import (balanced_motzkin_stratum, diagram_of, n_subsets, triple_of)
from .linalg import Echelon
from .scalar import DeltaPoly, evaluate_delta


def catalan(n):
    return comb(2 * n, n) // (n + 1)


def ptl_dimension(k):
    """sum_n binom(k,n)^2 Catalan(n) = number of balanced Motzkin k-diagrams."""
    return sum(strata_dims(k))


def strata_dims(k):
    return [comb(k, n) ** 2 * catalan(n) for n in range(k + 1)]


class PTLBasis:
    """The balanced Motzkin diagrams of size k, grouped by edge count."""

    def __init__(self, k):
        self.k = k
        self.strata = [balanced_motzkin_stratum(n, k) for n in range(k + 1)]
        self.index = {}
        pos = 0
        for n, stratum in enumerate(self.strata):
            for d in stratum:
                self.index[d] = pos
                pos += 1

    def diagrams(self):
        for stratum in self.strata:
            yield from stratum

    def __len__(self):
        return len(self.index)


def decompose_x(x):
    """Split a bar-coordinate element into its X(n) components."""
    if x.basis != "bar":
        raise ValueError("decompose_x expects bar coordinates")
    parts = {}
    for d, c in x.terms.items():
        if not d.is_balanced():
            raise ValueError("support must consist of balanced diagrams")
        parts.setdefault(d.n_edges(), {})[d] = c
    return {n: Element(x.spec, terms, "bar") for n, terms in sorted(parts.items())}


def tl_entry_spec(spec, n):
    """TL_n(delta - 1), the entry algebra of the n-th block."""
    return AlgebraSpec("tl", n, spec.delta - 1)


class BlockElement:
    """A matrix over TL_n(delta-1) indexed by n-subsets of {1..k} in colex order."""

    __slots__ = ("spec", "n", "k", "subsets", "entries")

    def __init__(self, spec, n, k, entries=None):
        self.spec = spec
        self.n = n
        self.k = k
        self.subsets = n_subsets(k, n)
        self.entries = {}
        if entries:
            for ij, el in entries.items():
                if el:
                    self.entries[ij] = el

    @property
    def size(self):
        return len(self.subsets)

    def entry(self, i, j):
        el = self.entries.get((i, j))
        if el is None:
            return Element.zero(tl_entry_spec(self.spec, self.n))
        return el

    def __mul__(self, other):
        if (self.spec, self.n, self.k) != (other.spec, other.n, other.k):
            raise ValueError("blocks from different strata")
        by_row = {}
        for (r, c), el in other.entries.items():
            by_row.setdefault(r, []).append((c, el))
        out = {}
        for (r, m), el in self.entries.items():
            for (c, el2) in by_row.get(m, ()):
                prod = el * el2
                if prod:
                    key = (r, c)
                    out[key] = out[key] + prod if key in out else prod
        return BlockElement(self.spec, self.n, self.k, out)

    def __add__(self, other):
        if (self.spec, self.n, self.k) != (other.spec, other.n, other.k):
            raise ValueError("blocks from different strata")
        out = dict(self.entries)
        for ij, el in other.entries.items():
            out[ij] = out[ij] + el if ij in out else el
        return BlockElement(self.spec, self.n, self.k, out)

    def __eq__(self, other):
        if not isinstance(other, BlockElement):
            return NotImplemented
        return ((self.spec, self.n, self.k) == (other.spec, other.n, other.k)
                and self.entries == other.entries)

    def __ne__(self, other):
        eq = self.__eq__(other)
        return eq if eq is NotImplemented else not eq

    def is_zero(self):
        return not self.entries

    def __repr__(self):
        return "BlockElement(n=%d, k=%d, %d nonzero entries)" % (
            self.n, self.k, len(self.entries))


def to_block(x, n=None):
    """Transport a bar-coordinate element supported on one stratum to its block."""
    if x.basis != "bar":
        raise ValueError("to_block expects bar coordinates")
    strata = {d.n_edges() for d in x.terms}
    if n is None:
        if len(strata) != 1:
            raise ValueError("element is not supported on a single stratum")
        n = strata.pop()
    elif strata - {n}:
        raise ValueError("support crosses stratum %d" % (n,))
    k = x.spec.k
    idx = {A: i for i, A in enumerate(n_subsets(k, n))}
    tspec = tl_entry_spec(x.spec, n)
    entries = {}
    for d, c in x.terms.items():
        A, t, B = triple_of(d)
        key = (idx[A], idx[B])
        term = Element.of(tspec, t, c)
        entries[key] = entries[key] + term if key in entries else term
    return BlockElement(x.spec, n, k, entries)


def from_block(block):
    """Inverse of :func:`to_block`."""
    terms = {}
    for (i, j), el in block.entries.items():
        A = block.subsets[i]
        B = block.subsets[j]
        for t, c in el.terms.items():
            d = diagram_of(A, t, B, block.k)
            terms[d] = terms.get(d, 0) + c
    return Element(block.spec, terms, "bar")


# -- generated subalgebra dimension ---------------------------------------------

def _specialize(x, delta0, delta_prime0=None):
    """Evaluate an element's delta-polynomial coefficients at a rational point."""
    spec = x.spec
    d0 = Fraction(delta0)
    dp = spec.delta_prime
    if isinstance(dp, DeltaPoly):
        dp = evaluate_delta(dp, d0)
    if delta_prime0 is not None:
        dp = Fraction(delta_prime0)
    delta = spec.delta
    if isinstance(delta, DeltaPoly):
        delta = d0
    nspec = AlgebraSpec(spec.flavor, spec.k, delta, dp)
    terms = {}
    for d, c in x.terms.items():
        terms[d] = evaluate_delta(c, d0) if isinstance(c, DeltaPoly) else Fraction(c)
    return Element(nspec, terms, x.basis)


def generated_dimension(gens, delta0=Fraction(7, 3)):
    """Dimension of the unital subalgebra generated by ``gens``.

    Coefficients are specialized at a generic rational delta (any
    specialization can only drop the rank, so hitting the target dimension
    at one rational point certifies the generic statement).
    """
    if not gens:
        raise ValueError("need at least one generator")
    gens = [change_basis(g, "diagram") if g.basis != "diagram" else g for g in gens]
    gens = [_specialize(g, delta0) for g in gens]
    spec = gens[0].spec
    seed = [Element.unit(spec)] + gens

    ech = Echelon()
    basis = []
    for el in seed:
        if ech.add(dict(el.terms)):
            basis.append(el)
    frontier = list(basis)
    while frontier:
        fresh = []
        for a in basis:
            for b in frontier:
                for prod in (a * b, b * a):
                    if prod and ech.add(dict(prod.terms)):
                        fresh.append(prod)
        basis.extend(fresh)
        frontier = fresh
    return ech.rank
