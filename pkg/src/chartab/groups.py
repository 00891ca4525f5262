"""Permutation groups: enumeration, conjugacy structure, commutator counting.

Groups are given by generators in cycle notation and enumerated by
breadth-first closure, which fixes a deterministic element ordering (identity
first).  Conjugacy classes are ordered by (size, smallest member), so the
identity class is always class 0 and two runs over the same spec produce
identical orderings.
"""

from __future__ import annotations

import json
import re
from dataclasses import dataclass
from functools import cached_property
from importlib import resources
from math import lcm

from .errors import CapExceededError, CycleSyntaxError, FormatError, UnknownGroupError

DEFAULT_ELEMENT_CAP = 2000

_COMMUTATOR_CAPS = {1: 24, 2: 12}


class Permutation:
    """Bijection on {1..d}, stored 0-based as a tuple of images."""

    __slots__ = ("images",)

    def __init__(self, images):
        images = tuple(images)
        if sorted(images) != list(range(len(images))):
            raise ValueError(f"not a permutation of 0..{len(images) - 1}: {images}")
        object.__setattr__(self, "images", images)

    def __setattr__(self, name, value):
        raise AttributeError("permutations are immutable")

    @property
    def degree(self) -> int:
        return len(self.images)

    @classmethod
    def identity(cls, degree: int) -> "Permutation":
        return cls(range(degree))

    def __mul__(self, other: "Permutation") -> "Permutation":
        # apply self first, then other
        if self.degree != other.degree:
            raise ValueError("degree mismatch")
        o = other.images
        return Permutation(tuple(o[x] for x in self.images))

    def inverse(self) -> "Permutation":
        inv = [0] * len(self.images)
        for i, x in enumerate(self.images):
            inv[x] = i
        return Permutation(inv)

    def order(self) -> int:
        k = 1
        cur = self
        ident = tuple(range(self.degree))
        while cur.images != ident:
            cur = cur * self
            k += 1
        return k

    def is_identity(self) -> bool:
        return self.images == tuple(range(self.degree))

    def cycles(self) -> list[tuple[int, ...]]:
        """Nontrivial cycles on 1-based points."""
        seen = [False] * self.degree
        out = []
        for start in range(self.degree):
            if seen[start] or self.images[start] == start:
                seen[start] = True
                continue
            cyc = []
            x = start
            while not seen[x]:
                seen[x] = True
                cyc.append(x + 1)
                x = self.images[x]
            out.append(tuple(cyc))
        return out

    def cycle_string(self) -> str:
        cycs = self.cycles()
        if not cycs:
            return "()"
        return "".join("(" + " ".join(str(p) for p in c) + ")" for c in cycs)

    def __eq__(self, other):
        return isinstance(other, Permutation) and self.images == other.images

    def __hash__(self):
        return hash(self.images)

    def __repr__(self):
        return f"Permutation({self.cycle_string()!r}, degree={self.degree})"


_CYCLE_RE = re.compile(r"\(([^()]*)\)")


def parse_cycles(text: str, degree: int) -> Permutation:
    """Parse whitespace-separated disjoint cycles like "(1 2 3)(4 5)".

    "()" is the identity.  Points are 1-based and must not repeat.
    """
    if degree < 1:
        raise ValueError(f"degree must be positive, got {degree}")
    stripped = re.sub(r"\s", "", text)
    if not stripped:
        raise CycleSyntaxError("empty cycle expression")
    consumed = _CYCLE_RE.sub("", stripped)
    if consumed:
        raise CycleSyntaxError(f"malformed cycle notation: {text!r}")
    images = list(range(degree))
    seen: set[int] = set()
    for body in _CYCLE_RE.findall(text):
        points = body.split()
        if not points:
            continue  # "()" inside the expression
        try:
            pts = [int(tok) for tok in points]
        except ValueError as exc:
            raise CycleSyntaxError(f"non-integer point in {text!r}") from exc
        for pt in pts:
            if pt < 1 or pt > degree:
                raise CycleSyntaxError(f"point {pt} out of range 1..{degree}")
            if pt in seen:
                raise CycleSyntaxError(f"repeated point {pt} in {text!r}")
            seen.add(pt)
        if len(pts) < 2:
            continue  # fixed point, e.g. "(3)"
        for a, b in zip(pts, pts[1:] + pts[:1]):
            images[a - 1] = b - 1
    return Permutation(images)


@dataclass(frozen=True)
class GroupSpec:
    """Generator description of a permutation group."""

    name: str
    degree: int
    generators: tuple[str, ...]

    @classmethod
    def from_dict(cls, data: dict) -> "GroupSpec":
        try:
            name = data["name"]
            degree = data["degree"]
            generators = data["generators"]
        except (TypeError, KeyError) as exc:
            raise FormatError(f"group spec needs name/degree/generators: {data!r}") from exc
        if not isinstance(name, str) or not isinstance(degree, int) or degree < 1:
            raise FormatError(f"bad group spec fields: {data!r}")
        if not isinstance(generators, list) or not all(isinstance(g, str) for g in generators):
            raise FormatError(f"generators must be a list of cycle strings: {data!r}")
        return cls(name=name, degree=degree, generators=tuple(generators))

    def to_dict(self) -> dict:
        return {"name": self.name, "degree": self.degree, "generators": list(self.generators)}


class Group:
    """Fully enumerated permutation group with a fixed element ordering."""

    def __init__(self, name: str, elements: list[Permutation]):
        self.name = name
        self.elements = tuple(elements)
        self.index = {g: i for i, g in enumerate(self.elements)}
        self.order = len(self.elements)
        self.element_orders = tuple(g.order() for g in self.elements)
        self.exponent = lcm(*self.element_orders)
        self.inverse_index = tuple(self.index[g.inverse()] for g in self.elements)

    def mul(self, i: int, j: int) -> int:
        return self.index[self.elements[i] * self.elements[j]]

    def __len__(self):
        return self.order

    def __repr__(self):
        return f"Group({self.name!r}, order={self.order})"


def enumerate_group(spec: GroupSpec, cap: int = DEFAULT_ELEMENT_CAP) -> Group:
    """Breadth-first closure of the generators, sorted generator application."""
    gens = sorted(
        {parse_cycles(text, spec.degree) for text in spec.generators},
        key=lambda g: g.images,
    )
    ident = Permutation.identity(spec.degree)
    elements = [ident]
    index = {ident: 0}
    pos = 0
    while pos < len(elements):
        g = elements[pos]
        pos += 1
        for s in gens:
            h = g * s
            if h not in index:
                if len(elements) >= cap:
                    raise CapExceededError(
                        f"group {spec.name!r} exceeds the element cap {cap}"
                    )
                index[h] = len(elements)
                elements.append(h)
    return Group(spec.name, elements)


@dataclass(frozen=True)
class ClassData:
    """The class-level facts shared by class functions and character tables."""

    order: int
    exponent: int
    sizes: tuple[int, ...]
    inverse_class: tuple[int, ...]

    @property
    def k(self) -> int:
        return len(self.sizes)

    @property
    def centralizer_orders(self) -> tuple[int, ...]:
        return tuple(self.order // s for s in self.sizes)

    @property
    def real_flags(self) -> tuple[bool, ...]:
        return tuple(self.inverse_class[i] == i for i in range(self.k))


class ConjugacyData:
    """Conjugacy classes of an enumerated group, ordered by (size, first member)."""

    def __init__(self, group: Group):
        n = group.order
        class_of = [-1] * n
        members: list[tuple[int, ...]] = []
        inverses = group.inverse_index
        for start in range(n):
            if class_of[start] >= 0:
                continue
            x = group.elements[start]
            orbit = set()
            for g in group.elements:
                orbit.add(group.index[(g.inverse() * x) * g])
            members.append(tuple(sorted(orbit)))
            for idx in orbit:
                class_of[idx] = len(members) - 1
        # canonical class order: by size, then by smallest member
        perm = sorted(range(len(members)), key=lambda c: (len(members[c]), members[c][0]))
        members = [members[c] for c in perm]
        relabel = {old: new for new, old in enumerate(perm)}
        class_of = [relabel[c] for c in class_of]

        self.group = group
        self.class_of = tuple(class_of)
        self.members = tuple(members)
        self.representatives = tuple(m[0] for m in members)
        self.sizes = tuple(len(m) for m in members)
        self.centralizer_orders = tuple(group.order // s for s in self.sizes)
        self.inverse_class = tuple(
            self.class_of[inverses[rep]] for rep in self.representatives
        )
        self.real_flags = tuple(
            self.inverse_class[i] == i for i in range(len(members))
        )
        self.rep_orders = tuple(group.element_orders[rep] for rep in self.representatives)
        e = group.exponent
        power_map = []
        for rep in self.representatives:
            x = group.elements[rep]
            cur = Permutation.identity(group.elements[0].degree)
            row = []
            for _ in range(e):
                row.append(self.class_of[group.index[cur]])
                cur = cur * x
            power_map.append(tuple(row))
        self.power_map = tuple(power_map)

    @property
    def k(self) -> int:
        return len(self.sizes)

    @cached_property
    def class_data(self) -> ClassData:
        return ClassData(
            order=self.group.order,
            exponent=self.group.exponent,
            sizes=self.sizes,
            inverse_class=self.inverse_class,
        )

    def power_class(self, i: int, t: int) -> int:
        """Class of rep(i)^t; t is taken mod the group exponent."""
        return self.power_map[i][t % self.group.exponent]

    def __repr__(self):
        return f"ConjugacyData({self.group.name!r}, sizes={self.sizes})"


def conjugacy_data(group: Group) -> ConjugacyData:
    return ConjugacyData(group)


def real_classes(cd: ConjugacyData) -> list[int]:
    """Indices of classes equal to their inverse class."""
    return [i for i, flag in enumerate(cd.real_flags) if flag]


def class_mult_coefficients(cd: ConjugacyData, i: int, j: int) -> tuple[int, ...]:
    """Counts a_l = #{(x, y) in K_i x K_j with x*y = rep(l)}, one per class l."""
    group = cd.group
    out = [0] * cd.k
    for l, rep in enumerate(cd.representatives):
        g_l = group.elements[rep]
        for x_idx in cd.members[i]:
            y = group.elements[x_idx].inverse() * g_l
            if cd.class_of[group.index[y]] == j:
                out[l] += 1
    return tuple(out)


def class_matrix(cd: ConjugacyData, i: int) -> list[list[int]]:
    """Multiplication-by-class-sum matrix: rows j, columns l of the counts above."""
    group = cd.group
    rows = [[0] * cd.k for _ in range(cd.k)]
    for l, rep in enumerate(cd.representatives):
        g_l = group.elements[rep]
        for x_idx in cd.members[i]:
            y = group.elements[x_idx].inverse() * g_l
            rows[cd.class_of[group.index[y]]][l] += 1
    return rows


def count_commutator_solutions(group: Group, target: Permutation, n: int) -> int:
    """Number of 2n-tuples whose commutator product equals target, by brute force."""
    if n not in _COMMUTATOR_CAPS:
        raise ValueError(f"n must be 1 or 2, got {n}")
    cap = _COMMUTATOR_CAPS[n]
    if group.order > cap:
        raise CapExceededError(
            f"brute-force commutator count limited to order {cap} for n={n}"
        )
    if target not in group.index:
        raise ValueError("target is not an element of the group")
    size = group.order
    mul = [[group.mul(i, j) for j in range(size)] for i in range(size)]
    inv = group.inverse_index
    comm = [
        [mul[mul[inv[a]][inv[b]]][mul[a][b]] for b in range(size)]
        for a in range(size)
    ]
    t_idx = group.index[target]
    if n == 1:
        return sum(row.count(t_idx) for row in comm)
    count = 0
    for a1 in range(size):
        row1 = comm[a1]
        for b1 in range(size):
            c1 = row1[b1]
            for a2 in range(size):
                row2 = comm[a2]
                for b2 in range(size):
                    if mul[c1][row2[b2]] == t_idx:
                        count += 1
    return count


def load_catalog() -> dict[str, GroupSpec]:
    """The bundled group catalog, in file order."""
    text = resources.files("chartab").joinpath("data/catalog.json").read_text()
    return parse_catalog(text)


def parse_catalog(text: str) -> dict[str, GroupSpec]:
    try:
        raw = json.loads(text)
    except json.JSONDecodeError as exc:
        raise FormatError(f"catalog is not valid JSON: {exc}") from exc
    if not isinstance(raw, list):
        raise FormatError("catalog must be a JSON list of group specs")
    out: dict[str, GroupSpec] = {}
    for entry in raw:
        spec = GroupSpec.from_dict(entry)
        if spec.name in out:
            raise FormatError(f"duplicate group name {spec.name!r} in catalog")
        out[spec.name] = spec
    return out


def load_group_spec(path) -> GroupSpec:
    """Read a single group spec from a JSON file."""
    with open(path) as fh:
        try:
            data = json.load(fh)
        except json.JSONDecodeError as exc:
            raise FormatError(f"group spec file is not valid JSON: {exc}") from exc
    return GroupSpec.from_dict(data)


def catalog_group(name: str, cap: int = DEFAULT_ELEMENT_CAP) -> Group:
    specs = load_catalog()
    if name not in specs:
        raise UnknownGroupError(name)
    return enumerate_group(specs[name], cap=cap)
