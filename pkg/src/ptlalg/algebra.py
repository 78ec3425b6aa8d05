"""Linear combinations of diagrams and the structured multiplication rules.

An :class:`Element` is a sparse combination of diagrams over an exact
scalar ring, tagged with the basis its coordinates refer to:

* ``diagram`` -- the diagram basis, multiplied by the twisted product
  d1 d2 = delta^{N1} delta'^{N2} (d1 o d2) (one exponent delta^N for the
  partition algebra);
* ``bar`` -- the alternating basis obtained by inclusion-exclusion removal
  of all edges, where products collapse to a single term
  (delta-1)^{N1} bar(d1 o d2), or vanish when the frames mismatch;
* ``tilde`` -- horizontal-edge removal only, where products acquire an
  extra (1 - p_i) factor for every through edge that snakes through
  interior cups and caps.

Basis changes are exact unitriangular solves along the edge-removal order.
"""

from __future__ import annotations

import functools
from dataclasses import dataclass, field

from .diagram import Diagram, compose, removals
from .scalar import DeltaPoly

FLAVORS = ("partition", "partial_brauer", "motzkin", "tl", "ptl")
BASES = ("diagram", "bar", "tilde")


def _default_delta():
    return DeltaPoly.gen()


@dataclass(frozen=True)
class AlgebraSpec:
    """Which twisted diagram algebra we are working in."""

    flavor: str
    k: int
    delta: object = field(default_factory=_default_delta)
    delta_prime: object = 1

    def __post_init__(self):
        if self.flavor not in FLAVORS:
            raise ValueError("unknown flavor %r" % (self.flavor,))

    def admits(self, d, basis="diagram"):
        """Is the diagram allowed in the support of an element of this basis?"""
        if d.k != self.k:
            return False
        if self.flavor == "partition":
            return True
        if not d.is_partial_brauer():
            return False
        if self.flavor == "partial_brauer":
            return True
        if not d.is_planar():
            return False
        if self.flavor == "tl":
            return not d.isolated()
        if self.flavor == "ptl" and basis in ("bar", "tilde"):
            # tilde/bar coordinates of PTL elements live on balanced diagrams
            return d.is_balanced()
        return True


def ptl_spec(k, delta=None):
    return AlgebraSpec("ptl", k, delta if delta is not None else DeltaPoly.gen())


def motzkin_spec(k, delta=None):
    return AlgebraSpec("motzkin", k, delta if delta is not None else DeltaPoly.gen())


def tl_spec(k, delta=None):
    return AlgebraSpec("tl", k, delta if delta is not None else DeltaPoly.gen())


class Element:
    __slots__ = ("spec", "basis", "terms")

    def __init__(self, spec, terms, basis="diagram"):
        if basis not in BASES:
            raise ValueError("unknown basis %r" % (basis,))
        clean = {}
        for d, c in terms.items():
            if not c:
                continue
            if not spec.admits(d, basis):
                raise ValueError("diagram %r not admitted by %s/%s" %
                                 (d, spec.flavor, basis))
            clean[d] = c
        object.__setattr__(self, "spec", spec)
        object.__setattr__(self, "basis", basis)
        object.__setattr__(self, "terms", clean)

    def __setattr__(self, name, value):
        raise AttributeError("Element is immutable")

    @classmethod
    def zero(cls, spec, basis="diagram"):
        return cls(spec, {}, basis)

    @classmethod
    def of(cls, spec, d, coeff=1, basis="diagram"):
        return cls(spec, {d: coeff}, basis)

    @classmethod
    def unit(cls, spec):
        from .diagram import identity
        return cls(spec, {identity(spec.k): 1})

    def coeff(self, d):
        return self.terms.get(d, 0)

    def support(self):
        return sorted(self.terms)

    def is_zero(self):
        return not self.terms

    def __bool__(self):
        return bool(self.terms)

    def _check_compatible(self, other):
        if self.spec != other.spec:
            raise ValueError("elements live in different algebras")
        if self.basis != other.basis:
            raise ValueError("elements are in different bases (%s vs %s)" %
                             (self.basis, other.basis))

    def __add__(self, other):
        self._check_compatible(other)
        out = dict(self.terms)
        for d, c in other.terms.items():
            out[d] = out.get(d, 0) + c
        return Element(self.spec, out, self.basis)

    def __sub__(self, other):
        self._check_compatible(other)
        out = dict(self.terms)
        for d, c in other.terms.items():
            out[d] = out.get(d, 0) - c
        return Element(self.spec, out, self.basis)

    def __neg__(self):
        return Element(self.spec, {d: -c for d, c in self.terms.items()}, self.basis)

    def scale(self, scalar):
        return Element(self.spec, {d: scalar * c for d, c in self.terms.items()},
                       self.basis)

    def __rmul__(self, scalar):
        return self.scale(scalar)

    def __mul__(self, other):
        if not isinstance(other, Element):
            return NotImplemented
        self._check_compatible(other)
        out = {}
        if self.basis == "diagram":
            for d1, c1 in self.terms.items():
                for d2, c2 in other.terms.items():
                    comp = compose(d1, d2)
                    coeff = c1 * c2 * _twist(self.spec, comp)
                    if coeff:
                        out[comp.diagram] = out.get(comp.diagram, 0) + coeff
            return Element(self.spec, out, "diagram")
        structured = bar_multiply if self.basis == "bar" else tilde_multiply
        total = Element.zero(self.spec, self.basis)
        for d1, c1 in self.terms.items():
            for d2, c2 in other.terms.items():
                total = total + structured(self.spec, d1, d2).scale(c1 * c2)
        return total

    def __eq__(self, other):
        if not isinstance(other, Element):
            return NotImplemented
        return (self.spec == other.spec and self.basis == other.basis
                and self.terms == other.terms)

    def __ne__(self, other):
        eq = self.__eq__(other)
        return eq if eq is NotImplemented else not eq

    def __str__(self):
        if not self.terms:
            return "0"
        wrap = {"diagram": "%s", "bar": "bar(%s)", "tilde": "tilde(%s)"}[self.basis]
        parts = []
        for d in sorted(self.terms):
            parts.append("(%s)*%s" % (self.terms[d], wrap % (d,)))
        return " + ".join(parts)

    __repr__ = __str__

    def to_json(self):
        from .scalar import scalar_to_str
        return {"basis": self.basis,
                "terms": [{"coeff": scalar_to_str(c), "diagram": d.to_json()}
                          for d, c in sorted(self.terms.items())]}

    @classmethod
    def from_json(cls, spec, obj):
        from .scalar import parse_scalar
        terms = {}
        for t in obj["terms"]:
            d = Diagram.from_json(t["diagram"])
            terms[d] = terms.get(d, 0) + parse_scalar(t["coeff"])
        return cls(spec, terms, obj.get("basis", "diagram"))


def _twist(spec, comp):
    """Scalar attached to a composition by the algebra's multiplication rule."""
    if spec.flavor == "partition":
        return _power(spec.delta, comp.blocks)
    return _power(spec.delta, comp.loops) * _power(spec.delta_prime, comp.paths)


def _power(scalar, n):
    if n == 0:
        return 1
    return scalar ** n


# -- alternating-basis expansions ---------------------------------------------

@functools.lru_cache(maxsize=None)
def _expansion(d, which):
    """Signed diagram expansion of bar(d) / tilde(d) / hat(d) as a dict."""
    if which == "bar":
        pool = d.edges()
    elif which == "tilde":
        pool = [e for e in d.edges() if e[1] < d.k or e[0] >= d.k]
    elif which == "hat":
        pool = [e for e in d.edges() if e[0] < d.k <= e[1]]
    else:
        raise ValueError(which)
    out = {}
    for sub, r in removals(d, pool):
        out[sub] = out.get(sub, 0) + (-1) ** r
    return {dd: c for dd, c in out.items() if c}


def bar_of(spec, d):
    """Inclusion-exclusion removal of all edges of ``d``, in the diagram basis."""
    return Element(spec, dict(_expansion(d, "bar")))


def tilde_of(spec, d):
    """Inclusion-exclusion removal of the horizontal edges of ``d``."""
    return Element(spec, dict(_expansion(d, "tilde")))


def hat_of(spec, d):
    """Inclusion-exclusion removal of the vertical edges of ``d``."""
    return Element(spec, dict(_expansion(d, "hat")))


def change_basis(x, to):
    """Exact coordinate change between the diagram, bar and tilde bases."""
    if to not in BASES:
        raise ValueError("unknown basis %r" % (to,))
    if x.basis == to:
        return x
    if x.basis in ("bar", "tilde") and to == "diagram":
        total = {}
        for d, c in x.terms.items():
            for dd, sign in _expansion(d, x.basis).items():
                total[dd] = total.get(dd, 0) + c * sign
        return Element(x.spec, total, "diagram")
    if x.basis == "diagram":
        work = dict(x.terms)
        out = {}
        while work:
            d = max(work, key=lambda dd: (dd.n_edges(), dd.blocks))
            c = work.pop(d)
            if not c:
                continue
            out[d] = c
            for dd, sign in _expansion(d, to).items():
                if dd == d:
                    continue
                work[dd] = work.get(dd, 0) - c * sign
        return Element(x.spec, out, to)
    # bar <-> tilde via the diagram basis
    return change_basis(change_basis(x, "diagram"), to)


# -- structured products --------------------------------------------------------

def bar_multiply(spec, d1, d2):
    """Product of two bar-basis vectors without expanding to the diagram basis.

    (delta-1)^{#loops} bar(d1 o d2) when the bottom frame of d1 equals the
    top frame of d2, and zero otherwise.
    """
    f1, f2 = d1.frames(), d2.frames()
    if f1.bot != f2.top:
        return Element.zero(spec, "bar")
    comp = compose(d1, d2)
    return Element.of(spec, comp.diagram, _power(spec.delta - 1, comp.loops), "bar")


def omega_obstruction(d1, d2):
    """Middle-row columns (1-based) where an isolated vertex of one factor
    meets a horizontal-edge endpoint of the other."""
    f1, f2 = d1.frames(), d2.frames()
    full = frozenset(range(1, d1.k + 1))
    return ((full - f1.bot) & f2.top_h) | ((full - f2.top) & f1.bot_h)


def snake_set(d1, d2):
    """Top columns (1-based) of the through edges of d1 o d2 whose path
    traverses at least one interior cup or cap."""
    k = d1.k
    p1, p2 = d1.partner, d2.partner
    out = []
    for t in range(k):
        mate = p1.get(t)
        if mate is None or mate < k:
            continue  # isolated top vertex, or a cup of d1
        m = mate - k
        horiz = 0
        end = None
        while True:
            nxt = p2.get(m)
            if nxt is None:
                break  # dangling: the edge dies in the middle
            if nxt >= k:
                end = nxt - k
                break  # reached the bottom row: a through edge
            horiz += 1  # a cup of d2
            nxt1 = p1.get(k + nxt)
            if nxt1 is None or nxt1 < k:
                break  # dangling, or emerged as a cup of the composite
            horiz += 1  # a cap of d1
            m = nxt1 - k
        if end is not None and horiz > 0:
            out.append(t + 1)
    return frozenset(out)


def _drop_throughs(d, top_cols):
    """Remove the through edges whose top column (1-based) lies in the set."""
    keep = [e for e in d.edges()
            if not (e[0] < d.k <= e[1] and e[0] + 1 in top_cols)]
    return Diagram.from_edges(d.k, keep)


def tilde_multiply(spec, d1, d2):
    """Product of two tilde-basis vectors, in tilde coordinates.

    Zero when the obstruction set is nonempty; otherwise
    (delta-1)^{#loops} prod_{i in S} (1 - p_i) tilde(d1 o d2), expanded as a
    signed sum of tilde-basis vectors (each p_i drops one through edge).
    """
    if omega_obstruction(d1, d2):
        return Element.zero(spec, "tilde")
    comp = compose(d1, d2)
    s = snake_set(d1, d2)
    lead = _power(spec.delta - 1, comp.loops)
    terms = {}
    for sub in _subsets(sorted(s)):
        dd = _drop_throughs(comp.diagram, frozenset(sub))
        terms[dd] = terms.get(dd, 0) + (-1) ** len(sub) * lead
    return Element(spec, terms, "tilde")


def _subsets(items):
    import itertools
    for r in range(len(items) + 1):
        yield from itertools.combinations(items, r)


def epsilon(spec, i):
    """tilde(e_i) = (1 - p_i) e_i (1 - p_i), as a 4-term diagram-basis element."""
    from .diagram import gen_e
    return tilde_of(spec, gen_e(i, spec.k))
