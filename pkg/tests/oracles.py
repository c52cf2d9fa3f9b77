"""Slow brute-force references used to cross-check the library."""

from itertools import combinations, permutations


def subgroups_by_subsets(G):
    """Every subset containing 1 and closed under products (small groups only)."""
    n = G.order
    out = []
    others = range(1, n)
    for k in range(n):
        for extra in combinations(others, k):
            s = (0,) + extra
            ss = set(s)
            if n % len(s):
                continue
            if all(G.mul[a][b] in ss for a in s for b in s):
                out.append(frozenset(s))
    return out


def subgroups_by_generation(G):
    """Closure of every pair of elements, iterated to a fixed point."""

    def close(gens):
        elems = {0}
        frontier = [0]
        while frontier:
            nxt = []
            for a in frontier:
                for g in gens:
                    c = G.mul[a][g]
                    if c not in elems:
                        elems.add(c)
                        nxt.append(c)
            frontier = nxt
        return frozenset(elems)

    subs = {close([g]) for g in range(G.order)}
    while True:
        new = {close(sorted(a | b)) for a in subs for b in subs} | subs
        if new == subs:
            return subs
        subs = new


def mobius_brute(subs, k, m):
    """Mobius function of the subgroup poset by direct recursion on sets."""
    if k == m:
        return 1
    if not k <= m:
        return 0
    total = 0
    for l in subs:
        if k <= l and l < m:
            total += mobius_brute(subs, k, l)
    return -total


def coset_marks(G, k, l):
    """|(G/K)^L| by listing the right cosets K g explicitly."""
    cosets = []
    seen = set()
    for g in range(G.order):
        if g in seen:
            continue
        c = frozenset(G.mul[x][g] for x in k)
        seen |= c
        cosets.append(c)
    count = 0
    for c in cosets:
        if all(frozenset(G.mul[x][h] for x in c) == c for h in l):
            count += 1
    return count


def is_hypo_by_definition(G, h, p):
    """Search for a normal p-subgroup P of H with H/P cyclic of order prime to p."""
    h = frozenset(h)
    subs = [s for s in subgroups_by_generation(G) if s <= h]

    def is_p_power(n):
        while n % p == 0:
            n //= p
        return n == 1

    for P in subs:
        if not is_p_power(len(P)):
            continue
        if any(frozenset(G.mul[G.mul[G.inv[x]][y]][x] for y in P) != P for x in h):
            continue
        index = len(h) // len(P)
        if index % p == 0:
            continue
        # cyclic quotient: some coset has order equal to the index
        for x in h:
            y, k = x, 1
            while y not in P:
                y = G.mul[y][x]
                k += 1
            if k == index:
                return True
    return False


def determinant_leibniz(A):
    n = len(A)
    total = 0
    for perm in permutations(range(n)):
        inv = sum(1 for i in range(n) for j in range(i + 1, n) if perm[i] > perm[j])
        prod = 1
        for i in range(n):
            prod *= A[i][perm[i]]
        total += -prod if inv % 2 else prod
    return total
