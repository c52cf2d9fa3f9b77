"""Pure-Python versions of the Cayley-table kernels.

Every function here has a twin with the same signature in ``_ckernels.pyx``.
Tables are flat row-major sequences: ``mul[a * n + b]`` is the product ``a*b``
and ``act[g * npts + x]`` is the image of point ``x`` under ``g``.
"""


def closure(mul, n, gens):
    """Sorted element list of the subgroup generated by ``gens``."""
    seen = bytearray(n)
    seen[0] = 1
    elems = [0]
    gens = [g for g in gens if g != 0]
    frontier = [0]
    while frontier:
        nxt = []
        for a in frontier:
            row = a * n
            for g in gens:
                c = mul[row + g]
                if not seen[c]:
                    seen[c] = 1
                    elems.append(c)
                    nxt.append(c)
        frontier = nxt
    elems.sort()
    return elems


def conjugate(mul, inv, n, elems, g):
    """Sorted list of ``g^-1 h g`` for ``h`` in ``elems``."""
    gi = inv[g]
    return sorted(mul[mul[gi * n + h] * n + g] for h in elems)


def count_conjugators(mul, inv, n, small, big_flags):
    """Number of ``g`` with ``g h g^-1`` in the big subgroup for all ``h`` in ``small``."""
    count = 0
    for g in range(n):
        gi = inv[g]
        row = g * n
        for h in small:
            if not big_flags[mul[mul[row + h] * n + gi]]:
                break
        else:
            count += 1
    return count


def fixed_points(act, npts, elems):
    """Sorted points fixed by every element of ``elems``."""
    out = []
    for x in range(npts):
        for h in elems:
            if act[h * npts + x] != x:
                break
        else:
            out.append(x)
    return out


def orbit_labels(act, npts, gens):
    """Label each point by the smallest point of its orbit under ``gens``."""
    label = [-1] * npts
    for x in range(npts):
        if label[x] != -1:
            continue
        label[x] = x
        stack = [x]
        while stack:
            y = stack.pop()
            for g in gens:
                z = act[g * npts + y]
                if label[z] == -1:
                    label[z] = x
                    stack.append(z)
    return label
