"""Lattice cones, fans, stellar subdivision and fan maps.

All blow-up geometry in the package happens here: a fan is a finite set of
simplicial cones in Z^rank, closed under faces (faces are implicit subsets of
a cone's ray set), and a toric blow-up of an invariant stratum is the stellar
subdivision at the corresponding cone.

Values are immutable; every operation returns a fresh Fan.
"""

from dataclasses import dataclass, field
import json
import random

from .errors import CenterNotInFan, InvalidCone, RankMismatch
from .linalg import (matrix_rank, mat_mul_vec, minors_gcd, primitive,
                     solve_nonnegative)

BOUNDARY = "boundary"
EXCEPTIONAL = "exceptional"
STRICT_TRANSFORM = "strict_transform"


@dataclass(frozen=True)
class DivisorLabel:
    """Tag on a ray: boundary of a factor, exceptional of a blow-up step,
    or strict transform of an original boundary divisor."""
    kind: str
    arg: int

    def __post_init__(self):
        if self.kind not in (BOUNDARY, EXCEPTIONAL, STRICT_TRANSFORM):
            raise ValueError(f"unknown label kind {self.kind!r}")


@dataclass(frozen=True)
class Cone:
    """Simplicial cone given by its primitive ray generators, sorted lex."""
    rays: tuple

    def __post_init__(self):
        rays = tuple(sorted(tuple(r) for r in self.rays))
        if len(set(rays)) != len(rays):
            raise InvalidCone(f"duplicate rays in {rays}")
        for r in rays:
            if primitive(r) != r:
                raise InvalidCone(f"ray {r} is not primitive")
        if rays and matrix_rank(rays) != len(rays):
            raise InvalidCone(f"rays {rays} are linearly dependent")
        object.__setattr__(self, "rays", rays)

    def __len__(self):
        return len(self.rays)

    def has_face(self, other):
        return set(other.rays) <= set(self.rays)

    def contains_point(self, point):
        """Exact membership test for a rational point."""
        return solve_nonnegative(self.rays, point) is not None


@dataclass(frozen=True)
class Fan:
    """Set of maximal simplicial cones, with optional ray labels.

    Cones are stored canonically sorted so identical fans compare equal
    bit-for-bit; labels are a sorted (ray, label) tuple.
    """
    rank: int
    cones: tuple
    labels: tuple = field(default=())

    def __post_init__(self):
        cones = tuple(sorted((c if isinstance(c, Cone) else Cone(tuple(c))
                              for c in self.cones), key=lambda c: c.rays))
        labels = tuple(sorted(((tuple(ray), lab) for ray, lab in self.labels),
                              key=lambda item: (item[0], item[1].kind,
                                                item[1].arg)))
        object.__setattr__(self, "cones", cones)
        object.__setattr__(self, "labels", labels)

    def rays(self):
        out = set()
        for c in self.cones:
            out.update(c.rays)
        return tuple(sorted(out))

    def label_map(self):
        return dict(self.labels)

    def has_cone(self, cone):
        """True when `cone` is a face of some maximal cone."""
        return any(c.has_face(cone) for c in self.cones)

    def contains_point(self, point):
        return any(c.contains_point(point) for c in self.cones)

    def exceptional_count(self):
        return sum(1 for _, lab in self.labels if lab.kind == EXCEPTIONAL)

    def with_labels(self, labels):
        return Fan(self.rank, self.cones, tuple(labels))


def is_smooth(cone, ambient_rank):
    """True when the cone's rays extend to a basis of Z^ambient_rank."""
    if not isinstance(cone, Cone):
        cone = Cone(tuple(cone))
    if len(cone) == 0:
        return True
    if len(cone) > ambient_rank:
        raise InvalidCone("more rays than the ambient rank")
    return minors_gcd(cone.rays) == 1


def star_subdivide(fan, center):
    """Stellar subdivision of `fan` at the cone `center`.

    The new ray is the primitive multiple of the sum of the center's ray
    generators (the barycentric convention); every maximal cone containing
    the center is replaced by its standard stellar decomposition.  The
    support is unchanged and the new ray is labeled Exceptional with the
    next blow-up step index.
    """
    if not isinstance(center, Cone):
        center = Cone(tuple(center))
    if len(center) < 2:
        raise CenterNotInFan("subdivision center needs at least two rays")
    if not fan.has_cone(center):
        raise CenterNotInFan(f"{center.rays} is not a cone of the fan")
    new_ray = primitive(tuple(sum(xs) for xs in zip(*center.rays)))
    center_set = set(center.rays)
    new_cones = []
    for cone in fan.cones:
        if center_set <= set(cone.rays):
            for dropped in center.rays:
                kept = tuple(r for r in cone.rays if r != dropped)
                new_cones.append(Cone(kept + (new_ray,)))
        else:
            new_cones.append(cone)
    step = fan.exceptional_count()
    labels = fan.labels + ((new_ray, DivisorLabel(EXCEPTIONAL, step)),)
    return Fan(fan.rank, tuple(new_cones), labels)


def product_fan(f, g, offset=0):
    """Direct product of two fans; maximal cones are pairwise direct sums.

    `offset` is added to the factor index of every boundary/strict-transform
    label of `g`, so labels survive repeated products.
    """
    if g.rank == 0:
        return f
    if f.rank == 0:
        return _shift_labels(g, offset)

    def left(ray):
        return tuple(ray) + (0,) * g.rank

    def right(ray):
        return (0,) * f.rank + tuple(ray)

    cones = []
    for a in f.cones:
        for b in g.cones:
            cones.append(Cone(tuple(left(r) for r in a.rays)
                              + tuple(right(r) for r in b.rays)))
    labels = [(left(ray), lab) for ray, lab in f.labels]
    for ray, lab in g.labels:
        if lab.kind in (BOUNDARY, STRICT_TRANSFORM):
            lab = DivisorLabel(lab.kind, lab.arg + offset)
        labels.append((right(ray), lab))
    return Fan(f.rank + g.rank, tuple(cones), tuple(labels))


def _shift_labels(fan, offset):
    labels = tuple((ray, DivisorLabel(lab.kind, lab.arg + offset)
                    if lab.kind in (BOUNDARY, STRICT_TRANSFORM) else lab)
                   for ray, lab in fan.labels)
    return Fan(fan.rank, fan.cones, labels)


def induces_fan_map(source, target, lattice_map):
    """True iff the matrix maps every source cone into some target cone."""
    rows = tuple(tuple(r) for r in lattice_map)
    if len(rows) != target.rank or any(len(r) != source.rank for r in rows):
        raise RankMismatch(
            f"matrix is {len(rows)}x{len(rows[0]) if rows else 0}, "
            f"expected {target.rank}x{source.rank}")
    for cone in source.cones:
        images = [mat_mul_vec(rows, r) for r in cone.rays]
        if not any(all(t.contains_point(img) for img in images)
                   for t in target.cones):
            return False
    return True


def check_support_preserved(before, after, samples=1000, seed=0):
    """Random-sample test that two fans have the same support.

    Draws rational points from nonnegative integer combinations of each
    fan's rays and checks membership agrees both ways.
    """
    rng = random.Random(seed)
    for fan_a, fan_b in ((before, after), (after, before)):
        for _ in range(samples // 2):
            cone = rng.choice(fan_a.cones)
            point = tuple(sum(rng.randint(0, 7) * r[i] for r in cone.rays)
                          for i in range(fan_a.rank))
            if fan_a.contains_point(point) != fan_b.contains_point(point):
                return False
    return True


def check_face_closure(fan):
    """Pairwise check that maximal cones intersect in a common face.

    Uses an LP (scipy) to look for a point of cone(A) n cone(B) whose
    barycentric mass lies outside the shared rays; data are small integers,
    so the float tolerance is comfortable.
    """
    from scipy.optimize import linprog

    cones = fan.cones
    for i in range(len(cones)):
        for j in range(i + 1, len(cones)):
            a, b = cones[i].rays, cones[j].rays
            shared = set(a) & set(b)
            na, nb = len(a), len(b)
            # variables x (coeffs in A), y (coeffs in B), all >= 0
            # constraints: A x - B y = 0, sum(x) + sum(y) = 1
            a_eq = []
            for d in range(fan.rank):
                a_eq.append([float(r[d]) for r in a]
                            + [-float(r[d]) for r in b])
            a_eq.append([1.0] * (na + nb))
            b_eq = [0.0] * fan.rank + [1.0]
            cost = [0.0 if r in shared else -1.0 for r in a] \
                 + [0.0 if r in shared else -1.0 for r in b]
            res = linprog(cost, A_eq=a_eq, b_eq=b_eq,
                          bounds=[(0, None)] * (na + nb), method="highs")
            if res.status == 0 and -res.fun > 1e-9:
                return False
    return True


def fan_to_json(fan):
    """Serialize to the documented schema:
    {"rank": int, "rays": [[int]], "cones": [[ray-index]],
     "labels": {ray-index: {"kind": str, "arg": int}}}."""
    rays = fan.rays()
    index = {r: i for i, r in enumerate(rays)}
    label_map = fan.label_map()
    return {
        "rank": fan.rank,
        "rays": [list(r) for r in rays],
        "cones": sorted(sorted(index[r] for r in c.rays) for c in fan.cones),
        "labels": {str(index[ray]): {"kind": lab.kind, "arg": lab.arg}
                   for ray, lab in sorted(label_map.items()) if ray in index},
    }


def fan_from_json(data):
    rays = [tuple(int(x) for x in r) for r in data["rays"]]
    cones = tuple(Cone(tuple(rays[i] for i in c)) for c in data["cones"])
    labels = tuple((rays[int(i)], DivisorLabel(d["kind"], int(d["arg"])))
                   for i, d in data.get("labels", {}).items())
    return Fan(int(data["rank"]), cones, labels)


def fan_dumps(fan):
    return json.dumps(fan_to_json(fan), sort_keys=True)


def fan_loads(text):
    return fan_from_json(json.loads(text))
