"""Log Hochschild homology of a pair via the wedge-power decomposition.

For the pairs handled here the sheaf of log differentials splits:

* (P^n, H): Omega^1(log H) = O(-1)^{+n}, so the q-th wedge power is
  O(-q)^{C(n,q)};
* (C, pt), genus g: Omega^1(log pt) is the single line bundle of degree
  2g - 1.

Hochschild homology collects H^p of the wedge powers into degree q - p;
the log Serre kernel twists the diagonal by the top wedge power shifted by
the dimension.
"""

from dataclasses import dataclass
from math import comb

from .cohomology import Space, SplitBundle, euler_characteristic, \
    graded_cohomology
from .errors import NoToricModel, WedgeOutOfRange
from .logproduct import LogPair, format_pair


def _space_of(pair):
    if pair.kind == "Pn:H":
        return Space("Pn", pair.param)
    if pair.kind == "P1:pt":
        return Space("Pn", 1)
    if pair.kind == "Cg:pt":
        return Space("curve", pair.param)
    raise NoToricModel(
        f"{format_pair(pair)} is not projective; no cohomology tables")


def log_cotangent(pair):
    """Split model of Omega^1 with log poles along the boundary."""
    if pair.kind in ("Pn:H", "P1:pt"):
        n = pair.dim
        return SplitBundle.sum_of([-1] * n)
    if pair.kind == "Cg:pt":
        return SplitBundle.line(2 * pair.param - 1)
    raise NoToricModel(
        f"{format_pair(pair)} has no projective log cotangent model")


def log_wedge(pair, q):
    """q-th wedge power of the log cotangent bundle."""
    n = pair.dim
    if q < 0 or q > n:
        raise WedgeOutOfRange(f"wedge degree {q} outside 0..{n}")
    if q == 0:
        return SplitBundle.line(0)
    if pair.kind in ("Pn:H", "P1:pt"):
        return SplitBundle.sum_of([-q] * comb(n, q))
    return log_cotangent(pair)


def hkr_homology(pair):
    """{degree: dim} of log Hochschild homology: wedge power q contributes
    H^p in degree q - p."""
    space = _space_of(pair)
    table = {}
    for q in range(pair.dim + 1):
        for p, dim in graded_cohomology(space, log_wedge(pair, q)).items():
            deg = q - p
            table[deg] = table.get(deg, 0) + dim
    return {d: v for d, v in sorted(table.items()) if v}


def hkr_cohomology(pair):
    """{degree: dim} of log Hochschild cohomology: the dual wedge power
    (log polyvector fields) in wedge degree q contributes H^p in degree
    p + q."""
    space = _space_of(pair)
    table = {}
    for q in range(pair.dim + 1):
        dual = log_wedge(pair, q).dual()
        for p, dim in graded_cohomology(space, dual).items():
            deg = p + q
            table[deg] = table.get(deg, 0) + dim
    return {d: v for d, v in sorted(table.items()) if v}


@dataclass(frozen=True)
class SerreTwist:
    """Data of the log Serre kernel on the diagonal: a line-bundle twist
    and a homological shift."""
    twist: int
    shift: int


def log_serre(pair):
    """Twist/shift of the log Serre kernel: top log wedge power shifted by
    the dimension."""
    top = log_wedge(pair, pair.dim)
    (summand,) = set(top.summands)
    return SerreTwist(summand.twist, pair.dim)


def residue_euler_check(n, q):
    """Euler-characteristic shadow of the residue triangle on (P^n, H).

    The residue sequence 0 -> Omega^q -> Omega^q(log H) -> Omega^{q-1}_H -> 0
    forces chi of the middle term to equal the sum of the outer ones; with
    the known chi(Omega^q_{P^m}) = (-1)^q this is checkable in closed form.
    Returns (lhs, rhs_sub, rhs_res, ok).
    """
    if not 1 <= q <= n:
        raise WedgeOutOfRange(f"residue check needs 1 <= q <= n, got {q}")
    pair = LogPair("Pn:H", n)
    space = _space_of(pair)
    lhs = euler_characteristic(space, log_wedge(pair, q))
    rhs_sub = (-1) ** q          # chi(Omega^q on P^n)
    rhs_res = (-1) ** (q - 1)    # chi(Omega^{q-1} on the hyperplane P^{n-1})
    return lhs, rhs_sub, rhs_res, lhs == rhs_sub + rhs_res
