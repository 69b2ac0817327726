"""Shared test helpers."""


def brute_force_kernel(m, bound=3):
    """Enumerate nonzero integer kernel vectors with max-norm <= bound.

    Independent of the lattice code under test: meet-in-the-middle over a
    split of the coordinates, joining partial column sums that cancel.
    """
    cols = m.cols
    half = cols // 2
    span = range(-bound, bound + 1)

    def sums(indices):
        table = {}
        stack = [((), tuple([0] * m.rows))]
        for j in indices:
            nxt = []
            col = tuple(m.entries[i][j] for i in range(m.rows))
            for prefix, acc in stack:
                for v in span:
                    nxt.append((prefix + (v,), tuple(a + v * c for a, c in zip(acc, col))))
            stack = nxt
        for prefix, acc in stack:
            table.setdefault(acc, []).append(prefix)
        return table

    left = sums(range(half))
    right = sums(range(half, cols))
    found = []
    for acc, prefixes in right.items():
        key = tuple(-a for a in acc)
        for lead in left.get(key, ()):
            for tail in prefixes:
                vec = lead + tail
                if any(vec):
                    found.append(vec)
    return found
