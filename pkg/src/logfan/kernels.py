"""Symbolic calculus of strong kernels between log pairs.

A kernel is a formal nonnegative-integer combination of atoms:

* ``diag(L, s)``      — diagonal pushforward of O(L)[s] on a pair X;
* ``graph(deg=d, L, s)`` — graph pushforward along a degree-d map
  f: (P^1, pt) -> (P^m, H), twisted and shifted;
* ``t(graph(...))``   — the transposed (flipped) graph, going the other way.

Equality is normal-form equality: atoms sorted, multiplicities merged.
Composition, adjoints, the excess-intersection route for graph-vs-transpose,
and the Hochschild scalar action are all closed-form rewrites on atoms; the
unsupported shapes raise named errors instead of guessing.

Twist/shift bookkeeping uses the dual convention (L[s])^v = L^{-1}[-s].
"""

from dataclasses import dataclass
from itertools import combinations
import re

from .errors import (FormalityUnavailable, UnsupportedComposition,
                     UnsupportedHHShape)
from .hkr import hkr_homology, log_serre
from .logproduct import LogPair, format_pair

DIAG = "diag"
GRAPH = "graph"
TGRAPH = "tgraph"


@dataclass(frozen=True, order=True)
class Atom:
    kind: str
    degree: int  # map degree for (t)graph atoms, 0 for diag
    twist: int
    shift: int


@dataclass(frozen=True)
class KernelExpr:
    """Formal sum of atoms from `source` to `target`, in normal form."""
    source: LogPair
    target: LogPair
    terms: tuple  # ((Atom, multiplicity), ...)

    def __post_init__(self):
        merged = {}
        for atom, mult in self.terms:
            if mult < 0:
                raise ValueError("multiplicities must be nonnegative")
            merged[atom] = merged.get(atom, 0) + mult
        terms = tuple(sorted((a, m) for a, m in merged.items() if m))
        for atom, _ in terms:
            self._check_atom(atom)
        object.__setattr__(self, "terms", terms)

    def _check_atom(self, atom):
        if atom.kind == DIAG:
            if self.source != self.target:
                raise ValueError("diagonal atoms need source == target")
        elif atom.kind == GRAPH:
            if self.source.kind != "P1:pt":
                raise ValueError("graph atoms start at P1:pt")
            if atom.degree < 1:
                raise ValueError("graph atoms need degree >= 1")
        elif atom.kind == TGRAPH:
            if self.target.kind != "P1:pt":
                raise ValueError("transposed graph atoms end at P1:pt")
            if atom.degree < 1:
                raise ValueError("graph atoms need degree >= 1")
        else:
            raise ValueError(f"unknown atom kind {atom.kind!r}")

    def __add__(self, other):
        if (self.source, self.target) != (other.source, other.target):
            raise ValueError("can only add kernels with matching pairs")
        return KernelExpr(self.source, self.target,
                          self.terms + other.terms)

    def shifted(self, n):
        return KernelExpr(self.source, self.target, tuple(
            (Atom(a.kind, a.degree, a.twist, a.shift + n), m)
            for a, m in self.terms))

    def is_diagonal(self):
        return all(a.kind == DIAG for a, _ in self.terms)


def diag_kernel(pair, twist=0, shift=0, mult=1):
    return KernelExpr(pair, pair, ((Atom(DIAG, 0, twist, shift), mult),))


def graph_kernel(source, target, degree, twist=0, shift=0, mult=1):
    return KernelExpr(source, target,
                      ((Atom(GRAPH, degree, twist, shift), mult),))


def transpose(expr):
    """Flip a kernel across the product: swaps source and target and
    exchanges graph atoms with their transposes (diag is symmetric)."""
    flip = {DIAG: DIAG, GRAPH: TGRAPH, TGRAPH: GRAPH}
    return KernelExpr(expr.target, expr.source, tuple(
        (Atom(flip[a.kind], a.degree, a.twist, a.shift), m)
        for a, m in expr.terms))


# ---------------------------------------------------------------------------
# adjoints

def right_adjoint(expr):
    """Kernel of the right adjoint functor, as a closed-form atom rewrite.

    For a diagonal atom the relative Serre twists cancel and only
    dualization survives; for graphs the rewrite bakes in the Serre kernel
    of the target (dimension m) through the projection formula.
    """
    return _adjoint(expr, right=True)


def left_adjoint(expr):
    return _adjoint(expr, right=False)


def _adjoint(expr, right):
    terms = []
    for atom, mult in expr.terms:
        if atom.kind == DIAG:
            new = Atom(DIAG, 0, -atom.twist, -atom.shift)
        elif atom.kind == GRAPH:
            m = expr.target.dim
            d = atom.degree
            if right:
                new = Atom(TGRAPH, d, -atom.twist + d * (m + 1) - 2,
                           1 - m - atom.shift)
            else:
                new = Atom(TGRAPH, d, -atom.twist + d - 1, -atom.shift)
        else:  # TGRAPH: the underlying map goes expr.target -> expr.source
            m = expr.source.dim
            d = atom.degree
            if right:
                new = Atom(GRAPH, d, -atom.twist + d - 1, -atom.shift)
            else:
                new = Atom(GRAPH, d, -atom.twist + d * (m + 1) - 2,
                           1 - m - atom.shift)
        terms.append((new, mult))
    return KernelExpr(expr.target, expr.source, tuple(terms))


# ---------------------------------------------------------------------------
# excess intersection and composition

def excess_intersection(degree, m):
    """Excess data for the self-intersection of a degree-`degree` graph
    inside P^1 x P^m.

    Returns (sub_degrees, ambient_degrees, splits, excess_degrees) where the
    degree lists describe split bundles on P^1: the tangent complex of the
    graph inside the tangent complex of the ambient product restricted to
    it.  The route is only usable when the sub-bundle splits off, detected
    by multiset containment of the degree lists; otherwise
    FormalityUnavailable is raised by the caller via splits=False.
    """
    sub = sorted([2, 1, 1], reverse=True)
    ambient = sorted([2, 1] + [degree] * m, reverse=True)
    remaining = list(ambient)
    splits = True
    for deg in sub:
        if deg in remaining:
            remaining.remove(deg)
        else:
            splits = False
            break
    excess = sorted(remaining, reverse=True) if splits else None
    return sub, ambient, splits, excess


def sym_decomposition(excess_degrees):
    """Diagonal atoms of Sym(E^v[1]) = (+)_q wedge^q(E^v)[q] for a split
    excess bundle with the given degrees: list of (twist, shift, mult)."""
    counts = {}
    r = len(excess_degrees)
    for q in range(r + 1):
        for subset in combinations(excess_degrees, q):
            key = (-sum(subset), q)
            counts[key] = counts.get(key, 0) + 1
    return sorted((t, s, m) for (t, s), m in counts.items())


def compose(first, second, trace=None):
    """Kernel of the composite functor: `first` from X to Y, then `second`
    from Y to Z.  Bilinear over atoms; graph-followed-by-transposed-graph
    of the same map routes through the excess bundle, everything without a
    supported route raises UnsupportedComposition."""
    if first.target != second.source:
        raise UnsupportedComposition(
            f"cannot compose: middle pairs {format_pair(first.target)} and "
            f"{format_pair(second.source)} differ")
    terms = []
    for a, ma in first.terms:
        for b, mb in second.terms:
            for atom, mult in _compose_atoms(a, b, first, second, trace):
                terms.append((atom, ma * mb * mult))
    return KernelExpr(first.source, second.target, tuple(terms))


def _compose_atoms(a, b, first, second, trace):
    if a.kind == DIAG and b.kind == DIAG:
        return [(Atom(DIAG, 0, a.twist + b.twist, a.shift + b.shift), 1)]
    if a.kind == DIAG and b.kind == GRAPH:
        return [(Atom(GRAPH, b.degree, b.twist + a.twist,
                      b.shift + a.shift), 1)]
    if a.kind == GRAPH and b.kind == DIAG:
        # twisting downstairs pulls back through the degree-d map
        return [(Atom(GRAPH, a.degree, a.twist + a.degree * b.twist,
                      a.shift + b.shift), 1)]
    if a.kind == DIAG and b.kind == TGRAPH:
        return [(Atom(TGRAPH, b.degree, b.twist + b.degree * a.twist,
                      b.shift + a.shift), 1)]
    if a.kind == TGRAPH and b.kind == DIAG:
        return [(Atom(TGRAPH, a.degree, a.twist + b.twist,
                      a.shift + b.shift), 1)]
    if a.kind == GRAPH and b.kind == TGRAPH:
        if a.degree != b.degree or first.source != second.target:
            raise UnsupportedComposition(
                "graph and transposed graph of different maps")
        m = first.target.dim
        sub, ambient, splits, excess = excess_intersection(a.degree, m)
        if not splits:
            raise FormalityUnavailable(
                f"tangent sub-bundle {_degs(sub)} does not split off "
                f"{_degs(ambient)}; no formality route")
        _emit(trace, f"excess: {_degs(excess)}")
        parts = sym_decomposition(excess)
        _emit(trace, "sym: " + " + ".join(
            _summand(t, s)
            for t, s, mlt in sorted(parts, key=lambda p: p[1])
            for _ in range(mlt)))
        return [(Atom(DIAG, 0, a.twist + b.twist + t,
                      a.shift + b.shift + s), mlt)
                for t, s, mlt in parts]
    raise UnsupportedComposition(
        f"no composition rule for {a.kind} followed by {b.kind}")


# ---------------------------------------------------------------------------
# Hochschild action, Chern character, Euler pairing

def _scalar_regime(pair):
    return hkr_homology(pair) == {0: 1}


def signed_count(expr):
    return sum(m * (-1) ** (a.shift % 2) for a, m in expr.terms)


def hh_action(expr, beta, trace=None):
    """Scalar action of the kernel on degree-zero log Hochschild classes.

    Only defined for diagonal kernels on pairs whose log Hochschild
    homology is one-dimensional in degree 0; richer pairs or graph-shaped
    kernels raise UnsupportedHHShape.  The four-step symbolic chain (unit
    insertion, class insertion, adjoint exchange, counit) collapses to the
    signed atom count times the input scalar.
    """
    if not expr.is_diagonal():
        raise UnsupportedHHShape(
            "scalar action is only defined for diagonal kernels")
    for pair in (expr.source, expr.target):
        if not _scalar_regime(pair):
            raise UnsupportedHHShape(
                f"{format_pair(pair)} has log Hochschild homology beyond "
                f"degree 0")
    _emit(trace, "unit: 1 in HH_0 of " + format_pair(expr.target))
    _emit(trace, f"beta: insert scalar {beta}")
    _emit(trace, "exchange: move the Serre kernel across the adjoint")
    value = beta * signed_count(expr)
    _emit(trace, "counit: " + _signed_sum(expr) + f" -> {value}")
    return value


def chern_log(expr, trace=None):
    """Log Chern character of a diagonal kernel: hh_action on the unit."""
    return hh_action(expr, 1, trace)


def chern_log_expansion(expr, trace=None):
    """Chern-type scalar of a graph-shaped kernel out of (P^1, pt), where
    the one-dimensional Hochschild homology of the source supplies the
    scalar: the signed atom count."""
    if expr.source.kind != "P1:pt":
        raise UnsupportedHHShape("expansion needs source (P^1, pt)")
    if not _scalar_regime(expr.target):
        raise UnsupportedHHShape(
            f"{format_pair(expr.target)} is outside the scalar regime")
    if any(a.kind == TGRAPH for a, _ in expr.terms):
        raise UnsupportedHHShape(
            "transposed graphs have no supported expansion chain")
    value = signed_count(expr)
    _emit(trace, "additivity: " + _signed_sum(expr) + f" -> {value}")
    return value


def euler_pairing(left, right_, trace=None):
    """Log Euler pairing of two kernels with the same source and target:
    the Chern-type scalar of compose(left, right_adjoint(right_))."""
    adj = right_adjoint(right_)
    _emit(trace, f"adjoint: R({format_kernel(right_)}) = "
                 f"{format_kernel(adj)}")
    composite = compose(left, adj, trace)
    value = signed_count(composite)
    _emit(trace, "additivity: " + _signed_sum(composite) + f" -> {value}")
    return value


# ---------------------------------------------------------------------------
# law checks used by the verification suite and property tests

def serre_kernel(pair):
    s = log_serre(pair)
    return diag_kernel(pair, s.twist, s.shift)


def adjoint_exchange_check(expr):
    """Identity S_target then right adjoint == left adjoint then S_source,
    in atom normal form."""
    lhs = compose(serre_kernel(expr.target), right_adjoint(expr))
    rhs = compose(left_adjoint(expr), serre_kernel(expr.source))
    return lhs == rhs


def involution_check(expr):
    return left_adjoint(right_adjoint(expr)) == expr


def bicategory_law_check(a, b, c):
    """Associativity and two-sided unit laws on composable kernels."""
    assoc = compose(compose(a, b), c) == compose(a, compose(b, c))
    unit_a = diag_kernel(a.source)
    unit_b = diag_kernel(c.target)
    units = (compose(unit_a, a) == a and compose(c, unit_b) == c)
    return assoc and units


# ---------------------------------------------------------------------------
# formatting and parsing (the CLI grammar)

def format_bundle(twist):
    return "O" if twist == 0 else f"O({twist})"


def _summand(twist, shift):
    text = format_bundle(twist)
    return text if shift == 0 else f"{text}[{shift}]"


def _degs(degrees):
    parts = []
    for deg in degrees:
        parts.append(format_bundle(deg))
    return " + ".join(parts) if parts else "0"


def _emit(trace, line):
    if trace is not None:
        trace.append(line)


def _signed_sum(expr):
    parts = []
    for atom, mult in sorted(expr.terms,
                             key=lambda tm: (tm[0].shift, tm[0].twist)):
        sign = -1 if atom.shift % 2 else 1
        for _ in range(mult):
            parts.append(str(sign))
    return " + ".join(parts) if parts else "0"


def format_atom(atom):
    if atom.kind == DIAG:
        return f"diag({format_bundle(atom.twist)},{atom.shift})"
    inner = (f"graph(deg={atom.degree},{format_bundle(atom.twist)},"
             f"{atom.shift})")
    return inner if atom.kind == GRAPH else f"t({inner})"


def format_kernel(expr):
    parts = []
    for atom, mult in expr.terms:
        parts.extend([format_atom(atom)] * mult)
    return "+".join(parts) if parts else "0"


_BUNDLE_RE = r"O(?:\((-?\d+)\))?"
_DIAG_RE = re.compile(rf"^diag\(({_BUNDLE_RE}),(-?\d+)\)$")
_GRAPH_RE = re.compile(
    rf"^graph\(deg=(\d+)(?:,({_BUNDLE_RE}),(-?\d+))?\)$")


def _parse_bundle(text):
    m = re.fullmatch(_BUNDLE_RE, text)
    if not m:
        raise ValueError(f"cannot parse bundle {text!r}")
    return int(m.group(1)) if m.group(1) is not None else 0


def parse_atom(text):
    text = text.strip()
    flips = 0
    while text.startswith("t(") and text.endswith(")"):
        text = text[2:-1].strip()
        flips += 1
    m = _DIAG_RE.match(text)
    if m:
        atom = Atom(DIAG, 0, _parse_bundle(m.group(1)), int(m.group(3)))
    else:
        m = _GRAPH_RE.match(text)
        if not m:
            raise ValueError(f"cannot parse atom {text!r}")
        twist = _parse_bundle(m.group(2)) if m.group(2) else 0
        shift = int(m.group(4)) if m.group(4) else 0
        atom = Atom(GRAPH, int(m.group(1)), twist, shift)
    if flips % 2:
        flip = {DIAG: DIAG, GRAPH: TGRAPH, TGRAPH: GRAPH}
        atom = Atom(flip[atom.kind], atom.degree, atom.twist, atom.shift)
    return atom


def _split_top_level(text):
    parts, depth, start = [], 0, 0
    for i, ch in enumerate(text):
        if ch == "(":
            depth += 1
        elif ch == ")":
            depth -= 1
        elif ch == "+" and depth == 0:
            parts.append(text[start:i])
            start = i + 1
    parts.append(text[start:])
    return parts


def parse_kernel(text, source, target):
    """Parse an expression `atom(+atom)*` against the grammar, attaching
    the given source and target pairs."""
    text = text.replace(" ", "")
    if not text:
        raise ValueError("empty kernel expression")
    atoms = [parse_atom(p) for p in _split_top_level(text)]
    return KernelExpr(source, target, tuple((a, 1) for a in atoms))
