"""Finite groups as Cayley tables, their subgroup lattices, and concrete G-sets.

Conventions used everywhere in the package:

* element 0 is the identity;
* a permutation ``p`` (tuple of images) acts on points on the right,
  ``x . p = p[x]``, so the product ``g*h`` means "first g, then h";
* G-sets are right G-sets: ``x . (g*h) == (x . g) . h``;
* ``G/K`` denotes the right cosets ``K g``, indexed by their least element.
"""

from __future__ import annotations

import math
import re
from functools import cached_property
from typing import Iterable, Sequence

from . import kernels

DEFAULT_ORDER_CAP = 400


class GroupError(Exception):
    pass


class OrderCapExceeded(GroupError):
    pass


class NotAPermutation(GroupError):
    pass


class UnknownPreset(GroupError):
    pass


class NotComparable(GroupError):
    pass


class InvalidAction(GroupError):
    pass


class FiniteGroup:
    """A finite group given by its full multiplication table."""

    def __init__(self, mul, *, generators=None, perms=None, name=None,
                 order_cap=DEFAULT_ORDER_CAP, check=True):
        n = len(mul)
        if n > order_cap:
            raise OrderCapExceeded(f"group order {n} exceeds cap {order_cap}")
        self.order = n
        self.mul = tuple(tuple(row) for row in mul)
        self.name = name
        self.perms = tuple(perms) if perms is not None else None
        inv = [0] * n
        for a in range(n):
            row = self.mul[a]
            for b in range(n):
                if row[b] == 0:
                    inv[a] = b
                    break
        self.inv = tuple(inv)
        if check:
            self._check_axioms()
        if generators is None:
            generators = _greedy_generators(self)
        self.generators = tuple(generators)

    def _check_axioms(self):
        n, mul = self.order, self.mul
        for row in mul:
            if len(row) != n or sorted(row) != list(range(n)):
                raise GroupError("multiplication table is not a Latin square")
        for a in range(n):
            if mul[0][a] != a or mul[a][0] != a:
                raise GroupError("index 0 is not a two-sided identity")
            if mul[self.inv[a]][a] != 0:
                raise GroupError(f"element {a} has no two-sided inverse")
        for a in range(n):
            ra = mul[a]
            for b in range(n):
                rab = mul[ra[b]]
                rb = mul[b]
                for c in range(n):
                    if rab[c] != ra[rb[c]]:
                        raise GroupError(f"associativity fails at ({a},{b},{c})")

    def __repr__(self):
        label = self.name or "group"
        return f"<FiniteGroup {label} order={self.order}>"

    @cached_property
    def table(self):
        return kernels.int_table(x for row in self.mul for x in row)

    @cached_property
    def inv_table(self):
        return kernels.int_table(self.inv)

    @cached_property
    def words(self):
        """Breadth-first spanning tree over the generators.

        Returns ``(order, parent)``: elements in discovery order, and for each
        element a ``(prefix, generator)`` pair with ``prefix * generator`` equal
        to it (None for the identity).
        """
        parent = [None] * self.order
        order = [0]
        seen = {0}
        frontier = [0]
        while frontier:
            nxt = []
            for a in frontier:
                for g in self.generators:
                    c = self.mul[a][g]
                    if c not in seen:
                        seen.add(c)
                        parent[c] = (a, g)
                        order.append(c)
                        nxt.append(c)
            frontier = nxt
        return tuple(order), tuple(parent)

    @cached_property
    def lattice(self) -> "SubgroupLattice":
        return SubgroupLattice(self)

    def element_order(self, g):
        k, x = 1, g
        while x != 0:
            x = self.mul[x][g]
            k += 1
        return k

    def is_abelian(self):
        mul = self.mul
        return all(mul[a][b] == mul[b][a]
                   for a in range(self.order) for b in range(a))


def _greedy_generators(G):
    gens = []
    current = [0]
    for g in range(1, G.order):
        if g not in current:
            gens.append(g)
            current = kernels.closure(G.table, G.order, gens)
            if len(current) == G.order:
                break
    return gens


def group_from_generators(degree: int, gens: Sequence[Sequence[int]], *,
                          order_cap: int = DEFAULT_ORDER_CAP, name=None) -> FiniteGroup:
    """The permutation group on ``{0..degree-1}`` generated by ``gens``."""
    gens = [tuple(int(x) for x in g) for g in gens]
    for g in gens:
        if len(g) != degree or sorted(g) != list(range(degree)):
            raise NotAPermutation(f"{list(g)} is not a permutation of 0..{degree - 1}")
    ident = tuple(range(degree))
    elems = [ident]
    index = {ident: 0}
    frontier = [ident]
    while frontier:
        nxt = []
        for a in frontier:
            for g in gens:
                c = tuple(g[a[x]] for x in range(degree))
                if c not in index:
                    if len(elems) >= order_cap:
                        raise OrderCapExceeded(f"generated group exceeds order cap {order_cap}")
                    index[c] = len(elems)
                    elems.append(c)
                    nxt.append(c)
        frontier = nxt
    n = len(elems)
    mul = [[index[tuple(b[a[x]] for x in range(degree))] for b in elems] for a in elems]
    gen_idx = []
    for g in gens:
        i = index[g]
        if i != 0 and i not in gen_idx:
            gen_idx.append(i)
    return FiniteGroup(mul, generators=gen_idx, perms=elems, name=name,
                       order_cap=order_cap, check=False)


def _cycle(points, degree):
    p = list(range(degree))
    for a, b in zip(points, points[1:] + points[:1]):
        p[a] = b
    return p


def _quaternion_perms():
    # units 1,i,j,k as 0..3; element (s, u) -> index 4*s + u
    table = {
        (0, 0): (0, 0), (0, 1): (0, 1), (0, 2): (0, 2), (0, 3): (0, 3),
        (1, 0): (0, 1), (1, 1): (1, 0), (1, 2): (0, 3), (1, 3): (1, 2),
        (2, 0): (0, 2), (2, 1): (1, 3), (2, 2): (1, 0), (2, 3): (0, 1),
        (3, 0): (0, 3), (3, 1): (0, 2), (3, 2): (1, 1), (3, 3): (1, 0),
    }

    def times(x, y):
        sx, ux = divmod(x, 4)
        sy, uy = divmod(y, 4)
        s, u = table[(ux, uy)]
        return 4 * ((sx + sy + s) % 2) + u

    return [[times(x, g) for x in range(8)] for g in (1, 2)]


_PRESET_RE = re.compile(r"^([A-Za-z])(\d+)(?:\^(\d+))?$")


def parse_preset(text: str):
    """``"S3"`` -> ``("S", (3,))``; ``"E2^3"`` -> ``("E", (2, 3))``; ``"C2xC3"`` -> ``("X", (2, 3))``."""
    text = text.strip()
    if "x" in text:
        parts = text.split("x")
        orders = []
        for part in parts:
            m = _PRESET_RE.match(part)
            if not m or m.group(1).upper() != "C" or m.group(3):
                raise UnknownPreset(f"cannot parse preset {text!r}")
            orders.append(int(m.group(2)))
        return "X", tuple(orders)
    if text.upper() in ("G", "TRIVIAL"):
        return "C", (1,)
    m = _PRESET_RE.match(text)
    if not m:
        raise UnknownPreset(f"cannot parse preset {text!r}")
    params = (int(m.group(2)),) + ((int(m.group(3)),) if m.group(3) else ())
    return m.group(1).upper(), params


def group_preset(name: str, *params: int, order_cap: int = DEFAULT_ORDER_CAP) -> FiniteGroup:
    """Catalog groups.

    ``C n`` cyclic, ``D n`` dihedral of order 2n, ``S n`` symmetric, ``A n``
    alternating, ``Q 8`` quaternion, ``E p k`` elementary abelian of order
    p^k, ``X n1 n2 ...`` a direct product of cyclic groups.  A single string
    such as ``"D4"`` or ``"C2xC2"`` is accepted as well.
    """
    if not params:
        name, params = parse_preset(name)
    key = name.upper()
    label = _preset_label(key, params)
    if key == "C" and len(params) == 1 and params[0] >= 1:
        n = params[0]
        gens = [_cycle(list(range(n)), n)] if n > 1 else []
        return group_from_generators(n, gens, order_cap=order_cap, name=label)
    if key == "D" and len(params) == 1 and params[0] >= 3:
        n = params[0]
        refl = [(-i) % n for i in range(n)]
        return group_from_generators(n, [_cycle(list(range(n)), n), refl],
                                     order_cap=order_cap, name=label)
    if key == "S" and len(params) == 1 and params[0] >= 1:
        n = params[0]
        _check_cap(math.factorial(n), order_cap)
        gens = [] if n == 1 else [_cycle([0, 1], n), _cycle(list(range(n)), n)]
        return group_from_generators(n, gens, order_cap=order_cap, name=label)
    if key == "A" and len(params) == 1 and params[0] >= 1:
        n = params[0]
        _check_cap(max(1, math.factorial(n) // 2), order_cap)
        gens = [_cycle([0, 1, k], n) for k in range(2, n)]
        return group_from_generators(n, gens, order_cap=order_cap, name=label)
    if key == "Q" and params == (8,):
        return group_from_generators(8, _quaternion_perms(), order_cap=order_cap, name=label)
    if key == "E" and len(params) in (1, 2) and _is_prime(params[0]):
        p = params[0]
        k = params[1] if len(params) == 2 else 1
        return _cyclic_product([p] * k, order_cap, label)
    if key == "X" and params and all(n >= 1 for n in params):
        return _cyclic_product(list(params), order_cap, label)
    raise UnknownPreset(f"unknown preset {name}{params}")


def _preset_label(key, params):
    if key == "X":
        return "x".join(f"C{n}" for n in params)
    if key == "E" and len(params) == 2:
        return f"E{params[0]}^{params[1]}"
    return key + "".join(str(p) for p in params)


def _check_cap(order, cap):
    if order > cap:
        raise OrderCapExceeded(f"group order {order} exceeds cap {cap}")


def _cyclic_product(orders, cap, label):
    _check_cap(math.prod(orders), cap)
    degree = sum(orders)
    gens, start = [], 0
    for n in orders:
        if n > 1:
            gens.append(_cycle(list(range(start, start + n)), degree))
        start += n
    return group_from_generators(degree, gens, order_cap=cap, name=label)


def _is_prime(n):
    return n >= 2 and all(n % d for d in range(2, math.isqrt(n) + 1))


def prime_factors(n):
    out, d = [], 2
    while d * d <= n:
        if n % d == 0:
            out.append(d)
            while n % d == 0:
                n //= d
        d += 1
    if n > 1:
        out.append(n)
    return out


def subgroup_group(G: FiniteGroup, members: Sequence[int]) -> FiniteGroup:
    """The subgroup on ``members`` as a group in its own right (identity stays at 0)."""
    members = sorted(members)
    pos = {g: i for i, g in enumerate(members)}
    mul = [[pos[G.mul[a][b]] for b in members] for a in members]
    return FiniteGroup(mul, check=False)


def quotient_group(G: FiniteGroup, normal: Sequence[int]) -> FiniteGroup:
    """``G/N`` for a normal subgroup ``N``; cosets are indexed by their least element."""
    normal = sorted(normal)
    label = {}
    for g in range(G.order):
        if g not in label:
            coset = [G.mul[g][k] for k in normal]
            rep = min(coset)
            for x in coset:
                label[x] = rep
    reps = sorted(set(label.values()))
    pos = {r: i for i, r in enumerate(reps)}
    mul = [[pos[label[G.mul[a][b]]] for b in reps] for a in reps]
    return FiniteGroup(mul, check=True)


class Subgroup:
    """A subgroup of a fixed group; ``index`` is its position in the lattice."""

    __slots__ = ("members", "mask", "index", "gens")

    def __init__(self, members, index=-1, gens=()):
        self.members = tuple(members)
        self.mask = sum(1 << g for g in self.members)
        self.index = index
        self.gens = tuple(gens)

    @property
    def order(self):
        return len(self.members)

    def __contains__(self, g):
        return (self.mask >> g) & 1 == 1

    def __le__(self, other):
        return self.mask & other.mask == self.mask

    def __eq__(self, other):
        return isinstance(other, Subgroup) and self.mask == other.mask

    def __hash__(self):
        return hash(self.mask)

    def __repr__(self):
        return f"Subgroup(#{self.index}, order={self.order})"


class SubgroupLattice:
    """All subgroups of ``G`` with conjugacy classes, normalizers and Möbius data.

    Subgroups are sorted by ``(order, members)``.  Each conjugacy class is
    represented by its first member in that order, and classes are sorted by
    their representatives, which makes marks tables lower triangular.
    """

    def __init__(self, G: FiniteGroup):
        self.group = G
        n, mul = G.order, G.table
        found = {}

        def add(members, gens):
            sub = Subgroup(members, gens=gens)
            if sub.mask not in found:
                found[sub.mask] = sub
                return sub
            return None

        pending = []
        for g in range(n):
            sub = add(kernels.closure(mul, n, [g]), (g,) if g else ())
            if sub is not None:
                pending.append(sub)
        done = list(pending)
        # close under pairwise joins until stable
        while pending:
            fresh = []
            for a in pending:
                for b in list(done):
                    if a <= b or b <= a:
                        continue
                    gens = tuple(dict.fromkeys(a.gens + b.gens))
                    sub = add(kernels.closure(mul, n, gens), gens)
                    if sub is not None:
                        fresh.append(sub)
                        done.append(sub)
            pending = fresh

        subs = sorted(found.values(), key=lambda s: (s.order, s.members))
        for i, s in enumerate(subs):
            s.index = i
        self.subgroups = subs
        self._by_mask = {s.mask: s for s in subs}

        # conjugacy classes: orbits of the conjugation action of the generators
        gens = G.generators or tuple(range(n))
        class_of = [-1] * len(subs)
        members_of = []
        for s in subs:
            if class_of[s.index] != -1:
                continue
            cid = len(members_of)
            orbit = [s.index]
            class_of[s.index] = cid
            stack = [s]
            while stack:
                t = stack.pop()
                for g in gens:
                    c = kernels.conjugate(mul, G.inv_table, n, t.members, g)
                    u = self._by_mask[sum(1 << x for x in c)]
                    if class_of[u.index] == -1:
                        class_of[u.index] = cid
                        orbit.append(u.index)
                        stack.append(u)
            members_of.append(tuple(sorted(orbit)))
        # reps are the first subgroup of each class; subs are sorted so the
        # classes come out ordered by (order, representative members)
        self.class_of = tuple(class_of)
        self.class_members = tuple(members_of)
        self.reps = tuple(m[0] for m in members_of)
        self.weyl_order = tuple(
            n // (len(m) * subs[m[0]].order) for m in members_of)

    def __len__(self):
        return len(self.subgroups)

    @property
    def num_classes(self):
        return len(self.reps)

    def rep(self, c) -> Subgroup:
        return self.subgroups[self.reps[c]]

    def class_order(self, c):
        return self.subgroups[self.reps[c]].order

    def find(self, members) -> Subgroup:
        mask = sum(1 << g for g in members)
        try:
            return self._by_mask[mask]
        except KeyError:
            raise GroupError("element set is not a subgroup") from None

    def sub(self, h) -> Subgroup:
        return h if isinstance(h, Subgroup) else self.subgroups[h]

    def class_id(self, h):
        return self.class_of[self.sub(h).index]

    @property
    def trivial(self) -> Subgroup:
        return self.subgroups[0]

    @property
    def whole(self) -> Subgroup:
        return self.subgroups[-1]

    @cached_property
    def containment(self):
        """``containment[s]`` = sorted indices t with subgroup s <= subgroup t."""
        subs = self.subgroups
        return tuple(tuple(t.index for t in subs[s.index:] if s <= t) for s in subs)

    def contains(self, k, l):
        k, l = self.sub(k), self.sub(l)
        return k <= l

    def normalizer(self, h) -> Subgroup:
        G = self.group
        h = self.sub(h)
        members = [g for g in range(G.order)
                   if kernels.conjugate(G.table, G.inv_table, G.order, h.members, g)
                   == list(h.members)]
        return self.find(members)

    def conjugate(self, h, g) -> Subgroup:
        G = self.group
        h = self.sub(h)
        return self.find(kernels.conjugate(G.table, G.inv_table, G.order, h.members, g))

    def is_normal(self, h):
        return len(self.class_members[self.class_id(h)]) == 1

    def subconjugate(self, k, l):
        """True iff some conjugate of ``k`` lies in ``l``."""
        k, l = self.sub(k), self.sub(l)
        return any(self.subgroups[i] <= l for i in self.class_members[self.class_id(k)])

    @cached_property
    def mobius_table(self):
        """``mobius_table[s]`` maps each t >= s to mu(s, t) on the subgroup poset."""
        subs = self.subgroups
        table = []
        for s in subs:
            above = self.containment[s.index]  # sorted by order, so intervals are ready
            mu = {s.index: 1}
            for t in above[1:]:
                tmask = subs[t].mask
                total = 0
                for m, val in mu.items():
                    if subs[m].mask & tmask == subs[m].mask:
                        total += val
                mu[t] = -total
            table.append(mu)
        return tuple(table)

    def mobius(self, k, m):
        k, m = self.sub(k), self.sub(m)
        if not k <= m:
            raise NotComparable(f"subgroup {k.index} is not contained in {m.index}")
        return self.mobius_table[k.index][m.index]

    @cached_property
    def up_counts(self):
        """``up_counts[c][d]`` = #{L in class d : rep(c) <= L}."""
        out = []
        for c in range(self.num_classes):
            row = [0] * self.num_classes
            for t in self.containment[self.reps[c]]:
                row[self.class_of[t]] += 1
            out.append(tuple(row))
        return tuple(out)

    @cached_property
    def mobius_classes(self):
        """``mobius_classes[c][d]`` = sum of mu(rep(c), L) over L in class d above rep(c)."""
        out = []
        for c in range(self.num_classes):
            row = [0] * self.num_classes
            for t, val in self.mobius_table[self.reps[c]].items():
                row[self.class_of[t]] += val
            out.append(tuple(row))
        return tuple(out)

    def sylow_subgroups(self, h, p):
        """Sylow p-subgroups of the subgroup ``h``."""
        h = self.sub(h)
        target = p_part(h.order, p)
        return [s for s in self.subgroups[:h.index + 1] if s.order == target and s <= h]

    @cached_property
    def class_names(self):
        """Readable, unique class labels: ``1``, ``G``, ``C<n>`` or ``H<n>``, suffixed on clashes."""
        G = self.group
        base = []
        for c in range(self.num_classes):
            k = self.rep(c)
            if k.order == 1:
                base.append("1")
            elif k.order == G.order:
                base.append("G")
            elif any(G.element_order(g) == k.order for g in k.members):
                base.append(f"C{k.order}")
            else:
                base.append(f"H{k.order}")
        counts = {}
        for b in base:
            counts[b] = counts.get(b, 0) + 1
        seen = {}
        names = []
        for b in base:
            if counts[b] == 1:
                names.append(b)
            else:
                seen[b] = seen.get(b, 0) + 1
                names.append(f"{b}_{seen[b]}")
        return tuple(names)

    def class_by_name(self, name):
        name = name.strip()
        names = self.class_names
        if name in names:
            return names.index(name)
        if name == str(self.group.name) and names[-1] == "G":
            return self.num_classes - 1
        if name.startswith("#") and name[1:].isdigit() and int(name[1:]) < self.num_classes:
            return int(name[1:])
        raise GroupError(f"unknown subgroup class {name!r}; known: {', '.join(names)}")

    def to_dict(self):
        """Deterministic JSON-ready description."""
        mob = self.mobius_table
        return {
            "order": self.group.order,
            "num_subgroups": len(self.subgroups),
            "classes": [
                {
                    "id": c,
                    "name": self.class_names[c],
                    "order": self.class_order(c),
                    "size": len(self.class_members[c]),
                    "weyl_order": self.weyl_order[c],
                    "representative": list(self.rep(c).members),
                    "members": list(self.class_members[c]),
                }
                for c in range(self.num_classes)
            ],
            "subgroups": [list(s.members) for s in self.subgroups],
            "mobius": [[[t, mob[s][t]] for t in sorted(mob[s])] for s in range(len(self.subgroups))],
        }


def subgroup_lattice(G: FiniteGroup) -> SubgroupLattice:
    return G.lattice


def mobius(lat: SubgroupLattice, k, m) -> int:
    return lat.mobius(k, m)


def p_part(n, p):
    q = 1
    while n % p == 0:
        n //= p
        q *= p
    return q


def has_normal_sylow(lat: SubgroupLattice, h, p) -> bool:
    """True iff the subgroup ``h`` has a unique (hence normal) Sylow p-subgroup."""
    return len(lat.sylow_subgroups(h, p)) == 1


class ConcreteGSet:
    """A finite right G-set given by the full table ``act[g][x]``."""

    def __init__(self, group: FiniteGroup, act, *, check=True):
        self.group = group
        act = [tuple(row) for row in act]
        if len(act) != group.order:
            raise InvalidAction("action table needs one row per group element")
        self.size = len(act[0]) if act else 0
        self.act = tuple(act)
        if check:
            self._check()

    def _check(self):
        G, act, size = self.group, self.act, self.size
        if act[0] != tuple(range(size)):
            raise InvalidAction("identity does not act trivially")
        for row in act:
            if len(row) != size or sorted(row) != list(range(size)):
                raise InvalidAction("an element does not act by a permutation")
        for g in range(G.order):
            rg = act[g]
            for h in range(G.order):
                rh = act[h]
                rgh = act[G.mul[g][h]]
                for x in range(size):
                    if rgh[x] != rh[rg[x]]:
                        raise InvalidAction(f"right action law fails for ({g},{h}) at {x}")

    def __len__(self):
        return self.size

    def __repr__(self):
        return f"<ConcreteGSet size={self.size}>"

    @cached_property
    def flat(self):
        return kernels.int_table(x for row in self.act for x in row)

    @classmethod
    def from_generator_images(cls, group, size, images):
        """Extend an action given on ``group.generators`` to all elements."""
        images = [tuple(r) for r in images]
        if len(images) != len(group.generators):
            raise InvalidAction("need one image row per group generator")
        gen_img = dict(zip(group.generators, images))
        act = [None] * group.order
        act[0] = tuple(range(size))
        order, parent = group.words
        for e in order[1:]:
            prefix, g = parent[e]
            act[e] = tuple(gen_img[g][y] for y in act[prefix])
        return cls(group, act)

    @classmethod
    def coset_space(cls, group, members):
        """``G/K`` as right cosets ``K g``; the coset ``K`` itself is point 0."""
        label = {}
        reps = []
        for g in range(group.order):
            if g in label:
                continue
            coset = [group.mul[k][g] for k in members]
            idx = len(reps)
            reps.append(g)
            for x in coset:
                label[x] = idx
        act = [[label[group.mul[r][h]] for r in reps] for h in range(group.order)]
        return cls(group, act, check=False)

    @classmethod
    def trivial(cls, group, size=1):
        return cls(group, [tuple(range(size))] * group.order, check=False)

    @classmethod
    def regular(cls, group):
        return cls.coset_space(group, [0])

    def stabilizer(self, x):
        return [g for g in range(self.group.order) if self.act[g][x] == x]

    def orbits(self):
        """Orbits as sorted point lists, ordered by least point."""
        G = self.group
        gens = list(G.generators) or list(range(G.order))
        labels = kernels.orbit_labels(self.flat, self.size, gens)
        out = {}
        for x, lab in enumerate(labels):
            out.setdefault(lab, []).append(x)
        return [out[k] for k in sorted(out)]

    def disjoint_union(self, other):
        n = self.size
        act = [a + tuple(n + y for y in b) for a, b in zip(self.act, other.act)]
        return ConcreteGSet(self.group, act, check=False)


def fixed_points(X: ConcreteGSet, h) -> list:
    """Points of ``X`` fixed by every element of the subgroup ``h``."""
    members = h.members if isinstance(h, Subgroup) else list(h)
    return kernels.fixed_points(X.flat, X.size, list(members))


def orbit_decomposition(X: ConcreteGSet):
    """Count orbits by stabilizer class; returns a BurnsideElement."""
    from .burnside import BurnsideElement

    lat = X.group.lattice
    coeffs = [0] * lat.num_classes
    for orbit in X.orbits():
        stab = lat.find(X.stabilizer(orbit[0]))
        coeffs[lat.class_id(stab)] += 1
    return BurnsideElement(lat, tuple(coeffs))


def product_gset(X: ConcreteGSet, Y: ConcreteGSet) -> ConcreteGSet:
    """Diagonal action on ``X x Y``; pair ``(x, y)`` is point ``x * |Y| + y``."""
    if X.group is not Y.group:
        raise InvalidAction("G-sets over different groups")
    m = Y.size
    act = [tuple(a[x] * m + b[y] for x in range(X.size) for y in range(m))
           for a, b in zip(X.act, Y.act)]
    return ConcreteGSet(X.group, act, check=False)


def gset_from_classes(lat: SubgroupLattice, classes: Iterable[int]) -> ConcreteGSet:
    """Disjoint union of ``G/K_c`` over the listed class ids (repeats allowed)."""
    G = lat.group
    X = ConcreteGSet.trivial(G, 0)
    for c in classes:
        X = X.disjoint_union(ConcreteGSet.coset_space(G, lat.rep(c).members))
    return X

