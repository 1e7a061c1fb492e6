"""Finite reflection groups through their root systems, in exact rational coordinates."""
import re
from collections import deque
from fractions import Fraction
from itertools import combinations, product
from math import prod

from .errors import (
    GroupTooLarge,
    IrrationalCoordinates,
    NotClosed,
    NotInGroup,
    NotReduced,
    UnknownType,
)
from .poly import Polynomial

F = Fraction
HALF = F(1, 2)

# fundamental degrees of the irreducible types
_DEGREE_TABLE = {
    "G2": (2, 6),
    "F4": (2, 6, 8, 12),
    "H3": (2, 6, 10),
    "H4": (2, 12, 20, 30),
    "E6": (2, 5, 6, 8, 9, 12),
    "E7": (2, 6, 8, 10, 12, 14, 18),
    "E8": (2, 8, 12, 14, 18, 20, 24, 30),
}


def fundamental_degrees(family, n=None):
    """Degrees of the basic invariants (one per rank)."""
    if family == "A":
        return tuple(range(2, n + 2))
    if family == "B":
        return tuple(range(2, 2 * n + 1, 2))
    if family == "D":
        return tuple(sorted(tuple(range(2, 2 * n - 1, 2)) + (n,)))
    if family == "Z2":
        return (2,) * n
    if family == "I2":
        return tuple(sorted((2, n)))
    if family in _DEGREE_TABLE:
        return _DEGREE_TABLE[family]
    raise UnknownType(f"no degree table for {family}")


# ----------------------------------------------------------------- vectors

def dot(a, b):
    return sum(x * y for x, y in zip(a, b))


def norm2(a):
    return dot(a, a)


def reflect_vector(x, v):
    c = 2 * dot(x, v) / norm2(v)
    return tuple(xi - c * vi for xi, vi in zip(x, v))


def _unit(d, i, c=1):
    e = [F(0)] * d
    e[i] = F(c)
    return e


def _vec(*xs):
    return tuple(F(x) for x in xs)


def _neg(v):
    return tuple(-x for x in v)


# ----------------------------------------------------------------- group elements

class GroupElement:
    """Orthogonal matrix with exact entries; equality and hashing by matrix."""

    __slots__ = ("matrix", "_h")

    def __init__(self, matrix):
        self.matrix = tuple(tuple(F(x) for x in row) for row in matrix)
        self._h = hash(self.matrix)

    @staticmethod
    def identity(d):
        return GroupElement([[int(i == j) for j in range(d)] for i in range(d)])

    @staticmethod
    def reflection(v):
        d = len(v)
        n2 = norm2(v)
        return GroupElement(
            [[int(i == j) - 2 * v[i] * v[j] / n2 for j in range(d)] for i in range(d)]
        )

    @property
    def dim(self):
        return len(self.matrix)

    def __mul__(self, other):
        b = other.matrix
        cols = list(zip(*b))
        return GroupElement(
            [[sum(x * y for x, y in zip(row, col) if x and y) for col in cols] for row in self.matrix]
        )

    def apply(self, v):
        return tuple(sum(m * x for m, x in zip(row, v) if m and x) for row in self.matrix)

    def inverse(self):
        return GroupElement(list(zip(*self.matrix)))

    def is_identity(self):
        return all(x == (i == j) for i, row in enumerate(self.matrix) for j, x in enumerate(row))

    def fixed_codimension(self):
        """rank(I - w)."""
        from .linalg import rank

        d = self.dim
        rows = [[F(int(i == j)) - self.matrix[i][j] for j in range(d)] for i in range(d)]
        return rank(rows)

    def determinant(self):
        return _det(self.matrix)

    def __eq__(self, other):
        return isinstance(other, GroupElement) and self.matrix == other.matrix

    def __hash__(self):
        return self._h

    def __repr__(self):
        return f"GroupElement({[[str(x) for x in r] for r in self.matrix]})"


def _det(m):
    a = [list(r) for r in m]
    n = len(a)
    det = F(1)
    for c in range(n):
        p = next((r for r in range(c, n) if a[r][c]), None)
        if p is None:
            return F(0)
        if p != c:
            a[c], a[p] = a[p], a[c]
            det = -det
        det *= a[c][c]
        for r in range(c + 1, n):
            if a[r][c]:
                f = a[r][c] / a[c][c]
                a[r] = [x - f * y for x, y in zip(a[r], a[c])]
    return det


# ----------------------------------------------------------------- root system

class RootSystem:
    """A reduced root system R in R^d with a chosen positive subsystem.

    Attributes: ``family``, ``n`` (type parameter), ``dim``, ``rank``,
    ``roots``, ``positive``, ``simple``, ``a0``, ``classes`` (tuples of
    positive roots), ``class_of`` (positive root -> class index) and
    ``degrees`` (fundamental degrees, one per rank; None if unknown).
    """

    def __init__(self, family, n, roots, a0=None, degrees=None, name=None, check=True):
        roots = tuple(dict.fromkeys(tuple(F(x) for x in r) for r in roots))
        if not roots:
            raise NotClosed("empty root list")
        d = len(roots[0])
        if any(len(r) != d for r in roots):
            raise NotClosed("roots have different lengths")
        self.family = family
        self.n = n
        self.name = name or (f"{family}{n}" if n is not None else family)
        self.dim = d
        self.roots = roots
        self._root_set = frozenset(roots)
        if check:
            self._validate()
        self.a0 = tuple(F(x) for x in a0) if a0 is not None else tuple(F(d - i) for i in range(d))
        self.positive = tuple(r for r in roots if self._is_positive(r))
        self._positive_set = frozenset(self.positive)
        self.rank = _matrix_rank(self.positive)
        self.simple = self._simple_roots()
        self.classes, self.class_of = self._orbits()
        self.degrees = tuple(degrees) if degrees is not None else None
        self._group = None

    # validation -------------------------------------------------------
    def _validate(self):
        rs = self._root_set
        for a in self.roots:
            if _neg(a) not in rs:
                raise NotClosed(f"-{a} missing", root=[str(x) for x in a])
        for a in self.roots:
            na = norm2(a)
            for b in self.roots:
                c = 2 * dot(a, b) / na
                if c:
                    img = tuple(y - c * x for x, y in zip(a, b))
                    if img not in rs:
                        raise NotClosed("root list is not closed under its reflections",
                                        root=[str(x) for x in a], image=[str(x) for x in img])
                if b != a and b != _neg(a) and dot(a, b) ** 2 == na * norm2(b):
                    raise NotReduced("root system is not reduced (parallel roots)",
                                     root=[str(x) for x in a], other=[str(x) for x in b])

    def _is_positive(self, r):
        s = dot(r, self.a0)
        if s:
            return s > 0
        # lexicographic tie-break: a0 + eps e1 + eps^2 e2 + ...
        first = next(x for x in r if x)
        return first > 0

    def _simple_roots(self):
        simple = []
        for a in self.positive:
            na = norm2(a)
            ok = True
            for b in self.positive:
                if b == a:
                    continue
                c = 2 * dot(a, b) / na
                img = tuple(y - c * x for x, y in zip(a, b))
                if img not in self._positive_set:
                    ok = False
                    break
            if ok:
                simple.append(a)
        return tuple(simple)

    def _orbits(self):
        seen = {}
        orbits = []
        for r in self.positive:
            if r in seen:
                continue
            orb = {r}
            todo = [r]
            while todo:
                x = todo.pop()
                for s in self.simple:
                    y = reflect_vector(x, s)
                    if y not in self._positive_set:
                        y = _neg(y)
                    if y not in orb:
                        orb.add(y)
                        todo.append(y)
            ordered = tuple(p for p in self.positive if p in orb)
            for p in ordered:
                seen[p] = None
            orbits.append(ordered)
        # longest roots first, then order of first appearance
        orbits.sort(key=lambda o: (-norm2(o[0]), self.positive.index(o[0])))
        class_of = {}
        for i, o in enumerate(orbits):
            for p in o:
                class_of[p] = i
        return tuple(orbits), class_of

    # queries ----------------------------------------------------------
    @property
    def num_classes(self):
        return len(self.classes)

    def is_root(self, v):
        return tuple(F(x) for x in v) in self._root_set

    def positive_representative(self, v):
        v = tuple(F(x) for x in v)
        return v if v in self._positive_set else _neg(v)

    def class_index(self, v):
        return self.class_of[self.positive_representative(v)]

    def reflection(self, v):
        return GroupElement.reflection(tuple(F(x) for x in v))

    def simple_reflections(self):
        return [GroupElement.reflection(s) for s in self.simple]

    def ambient_degrees(self):
        """Degrees padded with 1s up to the ambient dimension."""
        if self.degrees is None:
            self.degrees = degrees_from_group(self)
        return tuple([1] * (self.dim - self.rank)) + tuple(self.degrees)

    def order(self):
        if self.degrees is not None:
            return prod(self.degrees)
        return len(self.group())

    def group(self, limit=10**6):
        if self._group is None:
            self._group = generate_group(self, limit)
        return self._group

    def __repr__(self):
        return f"RootSystem({self.name}, dim={self.dim}, rank={self.rank}, |R+|={len(self.positive)})"


def _matrix_rank(vectors):
    from .linalg import rank

    return rank([list(v) for v in vectors]) if vectors else 0


# ----------------------------------------------------------------- catalogue

def _roots_A(n):
    d = n + 1
    out = []
    for i in range(d):
        for j in range(d):
            if i != j:
                v = _unit(d, i)
                v[j] = F(-1)
                out.append(tuple(v))
    return out


def _pm_pairs(d):
    out = []
    for i, j in combinations(range(d), 2):
        for si, sj in product((1, -1), repeat=2):
            v = [F(0)] * d
            v[i], v[j] = F(si), F(sj)
            out.append(tuple(v))
    return out


def _pm_units(d, c=1):
    out = []
    for i in range(d):
        out.append(tuple(_unit(d, i, c)))
        out.append(tuple(_unit(d, i, -c)))
    return out


def _roots_G2():
    out = []
    for i, j in product(range(3), repeat=2):
        if i != j:
            v = [F(0)] * 3
            v[i], v[j] = F(1), F(-1)
            out.append(tuple(v))
    for i in range(3):
        v = [F(-1)] * 3
        v[i] = F(2)
        out.append(tuple(v))
        out.append(_neg(v))
    return out


def _roots_F4():
    out = _pm_pairs(4) + _pm_units(4)
    for signs in product((1, -1), repeat=4):
        out.append(tuple(HALF * s for s in signs))
    return out


def _roots_E8():
    out = _pm_pairs(8)
    for signs in product((1, -1), repeat=8):
        if signs.count(-1) % 2 == 0:
            out.append(tuple(HALF * s for s in signs))
    return out


def _e8_simple():
    r = [tuple([HALF] + [-HALF] * 6 + [HALF]), _vec(1, 1, 0, 0, 0, 0, 0, 0)]
    for i in range(3, 9):
        v = [F(0)] * 8
        v[i - 2], v[i - 3] = F(1), F(-1)
        r.append(tuple(v))
    return r


def _roots_E(k):
    from .linalg import nullspace

    roots = _roots_E8()
    if k == 8:
        return roots
    simple = _e8_simple()[:k]
    comp = nullspace([list(s) for s in simple], 8, zero=F(0), one=F(1))
    return [r for r in roots if all(dot(r, c) == 0 for c in comp)]


_A0 = {
    "G2": (-1, -2, 3),
    "F4": (11, 3, 2, 1),
    "E6": (0, 1, 2, 3, 4, 5, 6, 23),
    "E7": (0, 1, 2, 3, 4, 5, 6, 23),
    "E8": (0, 1, 2, 3, 4, 5, 6, 23),
}

_TAG = re.compile(r"^\s*([A-Za-z]+2?)\s*(?:[\(\[:^_]?\s*(\d+)\s*[\)\]]?)?\s*$")


def parse_type(tag, n=None):
    """Normalise a type tag.  Accepts 'A', 'A3', 'A(3)', 'i2:5', 'Z2^3', 'G2', ..."""
    if isinstance(tag, (tuple, list)):
        tag, n = tag
    t = str(tag).strip()
    fixed = {"G2": "G2", "F4": "F4", "E6": "E6", "E7": "E7", "E8": "E8", "H3": "H3", "H4": "H4"}
    if t.upper() in fixed:
        return fixed[t.upper()], None
    low = t.lower()
    for pre, fam in (("z2", "Z2"), ("i2", "I2"), ("bc", "BC")):
        if low.startswith(pre):
            rest = low[len(pre):].strip("()[]:^_ ")
            if rest:
                n = int(rest)
            if n is None:
                raise UnknownType(f"type {tag} needs a parameter")
            return fam, int(n)
    m = re.match(r"^([a-zA-Z])\s*[\(\[:]?\s*(\d*)\s*[\)\]]?$", t)
    if not m:
        if low == "custom":
            return "custom", None
        raise UnknownType(f"unknown root system type {tag!r}")
    fam = m.group(1).upper()
    if m.group(2):
        n = int(m.group(2))
    if fam not in ("A", "B", "C", "D"):
        raise UnknownType(f"unknown root system type {tag!r}")
    if n is None:
        raise UnknownType(f"type {fam} needs a rank")
    return fam, int(n)


def build_root_system(tag, n=None, roots=None, a0=None):
    """Construct a catalogued or custom root system.

    Families: A(n) in R^(n+1), B(n), D(n), Z2(n) = (Z2)^n, G2 in R^3, F4,
    E6/E7/E8 in R^8, I2(m) (exact only for m in 1, 2, 4), custom.
    """
    if tag == "custom" or roots is not None:
        return RootSystem("custom", None, roots, a0=a0, name="custom")
    fam, n = parse_type(tag, n)
    if fam == "A":
        _need(n >= 1, fam, n)
        return RootSystem("A", n, _roots_A(n), a0=a0, degrees=fundamental_degrees("A", n))
    if fam == "B":
        _need(n >= 1, fam, n)
        rs = _pm_units(n) + (_pm_pairs(n) if n > 1 else [])
        return RootSystem("B", n, rs, a0=a0, degrees=fundamental_degrees("B", n))
    if fam == "C":
        _need(n >= 1, fam, n)
        rs = _pm_units(n, 2) + (_pm_pairs(n) if n > 1 else [])
        return RootSystem("C", n, rs, a0=a0, degrees=fundamental_degrees("B", n))
    if fam == "BC":
        raise NotReduced(f"BC({n}) is not reduced; only reduced root systems are supported")
    if fam == "D":
        _need(n >= 2, fam, n)
        degs = fundamental_degrees("D", n) if n >= 3 else (2, 2)
        return RootSystem("D", n, _pm_pairs(n), a0=a0, degrees=degs)
    if fam == "Z2":
        _need(n >= 1, fam, n)
        return RootSystem("Z2", n, _pm_units(n), a0=a0, degrees=fundamental_degrees("Z2", n), name=f"Z2^{n}")
    if fam == "G2":
        return RootSystem("G2", None, _roots_G2(), a0=a0 or _A0["G2"], degrees=_DEGREE_TABLE["G2"])
    if fam == "F4":
        return RootSystem("F4", None, _roots_F4(), a0=a0 or _A0["F4"], degrees=_DEGREE_TABLE["F4"])
    if fam in ("E6", "E7", "E8"):
        k = int(fam[1])
        return RootSystem(fam, None, _roots_E(k), a0=a0 or _A0[fam], degrees=_DEGREE_TABLE[fam], check=(k != 8))
    if fam in ("H3", "H4"):
        raise IrrationalCoordinates(
            f"{fam} needs the golden ratio; only its degrees are available",
            degrees=list(_DEGREE_TABLE[fam]),
        )
    if fam == "I2":
        _need(n >= 1, fam, n)
        if n == 1:
            return RootSystem("I2", 1, [_vec(0, 1), _vec(0, -1)], a0=a0, degrees=(2,), name="I2(1)")
        if n == 2:
            return RootSystem("I2", 2, _pm_units(2), a0=a0, degrees=(2, 2), name="I2(2)")
        if n == 4:
            rs = [_vec(1, -1), _vec(1, 0), _vec(1, 1), _vec(0, 1)]
            rs = rs + [_neg(v) for v in rs]
            return RootSystem("I2", 4, rs, a0=a0, degrees=(2, 4), name="I2(4)")
        raise IrrationalCoordinates(
            f"I2({n}) has irrational root coordinates in the plane; use A2/G2 for m=3/6 "
            "or the floating-point dihedral routines",
            degrees=list(fundamental_degrees("I2", n)),
        )
    raise UnknownType(f"unknown root system type {tag!r}")


def _need(ok, fam, n):
    if not ok:
        raise UnknownType(f"type {fam}({n}) is not defined")


# ----------------------------------------------------------------- group

def generate_group(rs, limit=10**6):
    """All elements of W(R), by breadth-first search over simple reflections."""
    if rs.degrees is not None:
        predicted = prod(rs.degrees)
        if predicted > limit:
            raise GroupTooLarge(f"|W| = {predicted} exceeds the limit {limit}", order=predicted, limit=limit)
    gens = rs.simple_reflections()
    e = GroupElement.identity(rs.dim)
    seen = {e: None}
    queue = deque([e])
    while queue:
        w = queue.popleft()
        for s in gens:
            u = s * w
            if u not in seen:
                seen[u] = None
                if len(seen) > limit:
                    raise GroupTooLarge(f"group exceeds the limit {limit}", limit=limit)
                queue.append(u)
    return list(seen)


def element_length(rs, w):
    """#(w R+ intersect R-)."""
    if not isinstance(w, GroupElement):
        w = GroupElement(w)
    count = 0
    for a in rs.positive:
        b = w.apply(a)
        if b in rs._positive_set:
            continue
        if b in rs._root_set:
            count += 1
        else:
            raise NotInGroup("matrix does not permute the roots")
    return count


def alternating_polynomial(rs):
    """a_R(x) = prod over R+ of <x, v>."""
    out = Polynomial.one(rs.dim)
    for v in rs.positive:
        out = out * Polynomial.linear_form(v)
    return out


def degrees_from_group(rs, group=None):
    """Recover the degrees from sum_w t^codim(w) = prod_i (1 + (n_i - 1) t)."""
    import numpy as np

    group = group or rs.group()
    counts = [0] * (rs.dim + 1)
    for w in group:
        counts[w.fixed_codimension()] += 1
    r = max(i for i, c in enumerate(counts) if c)
    # roots of sum c_k t^k are -1/(n_i - 1)
    coeffs = counts[: r + 1][::-1]
    zs = np.roots(coeffs) if r else []
    degs = sorted(int(round(-1 / z.real)) + 1 for z in zs)
    # verify exactly
    poly = [1]
    for n in degs:
        poly = [a + b for a, b in zip(poly + [0], [0] + [x * (n - 1) for x in poly])]
    if poly != counts[: r + 1]:
        raise ValueError("could not recover integer degrees from the codimension census")
    return tuple(degs)


def coxeter_matrix(rs):
    s = rs.simple_reflections()
    k = len(s)
    m = [[1] * k for _ in range(k)]
    for i in range(k):
        for j in range(i + 1, k):
            g = s[i] * s[j]
            p, order = g, 1
            while not p.is_identity():
                p = p * g
                order += 1
                if order > 1000:
                    raise ValueError("product of simple reflections has no finite order")
            m[i][j] = m[j][i] = order
    return m


def class_count_from_diagram(rs):
    """Components of the Coxeter diagram once even-labelled edges are deleted."""
    m = coxeter_matrix(rs)
    k = len(m)
    parent = list(range(k))

    def find(i):
        while parent[i] != i:
            parent[i] = parent[parent[i]]
            i = parent[i]
        return i

    for i in range(k):
        for j in range(i + 1, k):
            if m[i][j] % 2 == 1:
                parent[find(i)] = find(j)
    return len({find(i) for i in range(k)})


def is_reflection(w):
    return w.fixed_codimension() == 1 and (w * w).is_identity()


def degrees_and_checks(rs, enumerate_group=True, limit=10**6):
    """Degree data and the consistency checks of the degree theorem."""
    degs = tuple(rs.degrees) if rs.degrees is not None else None
    info = {
        "type": rs.name,
        "dim": rs.dim,
        "rank": rs.rank,
        "num_positive_roots": len(rs.positive),
        "num_classes": rs.num_classes,
        "class_sizes": [len(c) for c in rs.classes],
        "diagram_class_count": class_count_from_diagram(rs),
    }
    group = None
    if enumerate_group:
        try:
            group = rs.group(limit)
        except GroupTooLarge:
            group = None
    if degs is None and group is not None:
        degs = degrees_from_group(rs, group)
        rs.degrees = degs
    info["degrees"] = list(degs) if degs else None
    info["order_from_degrees"] = prod(degs) if degs else None
    info["reflections_from_degrees"] = sum(n - 1 for n in degs) if degs else None
    if group is not None:
        info["order"] = len(group)
        info["num_reflections"] = sum(1 for w in group if is_reflection(w))
        info["degrees_from_group"] = list(degrees_from_group(rs, group))
    checks = {
        "classes_match_diagram": info["num_classes"] == info["diagram_class_count"],
        "reflections_equal_positive_roots": (
            info["reflections_from_degrees"] == info["num_positive_roots"] if degs else None
        ),
    }
    if group is not None:
        checks["order_matches_degrees"] = info["order"] == info["order_from_degrees"]
        checks["reflection_count_matches"] = info["num_reflections"] == info["num_positive_roots"]
        checks["group_degrees_match"] = info["degrees_from_group"] == sorted(info["degrees"])
    info["checks"] = checks
    return info


def degrees_only(tag, n=None):
    """Degree data for types without exact coordinates (H3, H4, I2(m))."""
    fam, n = parse_type(tag, n)
    degs = fundamental_degrees(fam, n)
    return {
        "type": f"{fam}({n})" if n is not None else fam,
        "degrees": list(degs),
        "order": prod(degs),
        "num_positive_roots": sum(d - 1 for d in degs),
    }
