"""Hot-loop kernels, written once and loaded twice.

Everything here sticks to flat index arithmetic over preallocated buffers
so the very same source runs three ways: compiled by numba on int64 numpy
arrays (the fast path), interpreted on those arrays (the fallback path),
and interpreted on plain lists of Python ints (the arbitrary-precision
path for oversized hash primes).  Helpers call each other through module
globals; the numba loader rebinds those globals to jitted dispatchers.

Buffers use the layout below.  `tree` is a 1-based binary indexed tree of
`size` cells over bit positions [0, size); `powr[i]` caches r**i mod p.
"""


def powr_fill(powr, count, r, p):
    powr[0] = 1
    for i in range(1, count):
        powr[i] = powr[i - 1] * r % p


def fenwick_add(tree, size, i, v, p):
    # i is a 0-based bit position
    i += 1
    while i <= size:
        tree[i] = (tree[i] + v) % p
        i += i & (-i)


def fenwick_prefix(tree, t, p):
    # hash of positions [0, t); at most ~64 summands below p, no overflow
    s = 0
    while t > 0:
        s += tree[t]
        t -= t & (-t)
    return s % p


def windows_equal(tree, size, powr, p, m, a, b, x):
    # Compare positions [a, b) of the shifted-by-x view against the
    # unshifted view, over the doubled 2m-bit vector.  The shift turns
    # into a factor r**(m-x) between the two window hashes.
    d1 = (fenwick_prefix(tree, b, p) - fenwick_prefix(tree, a, p)) % p
    h1 = d1 * powr[m - x] % p
    h2 = (fenwick_prefix(tree, b + m - x, p)
          - fenwick_prefix(tree, a + m - x, p)) % p
    return h1 == h2


def find_new_sums(tree, size, powr, p, m, a0, b0, x, witness, out, sa, sb):
    # Descend over [a0, b0), pruning every window whose two hashes agree.
    # Positions that survive to a leaf and are absent from `witness` are
    # appended to `out` in ascending order.  Returns (count, nodes).
    count = 0
    nodes = 0
    sa[0] = a0
    sb[0] = b0
    top = 1
    while top > 0:
        top -= 1
        a = sa[top]
        b = sb[top]
        nodes += 1
        if windows_equal(tree, size, powr, p, m, a, b, x):
            continue
        if b - a == 1:
            if witness[a] < 0:
                out[count] = a
                count += 1
        else:
            mid = (a + b) // 2
            sa[top] = mid       # right half first, so the left pops first
            sb[top] = b
            sa[top + 1] = a
            sb[top + 1] = mid
            top += 2
    return count, nodes


def apply_new_sums(tree, size, powr, p, m, out, count):
    # Mirror each fresh sum s into both halves of the doubled vector.
    for k in range(count):
        s = out[k]
        fenwick_add(tree, size, s, powr[s], p)
        fenwick_add(tree, size, s + m, powr[s + m], p)


def solve_loop(tree, size, powr, p, m, elems, witness, out, sa, sb,
               counts, nodes):
    # One pass over the prepared elements.  Per element: detect every
    # position where the shifted view differs, then apply the batch.
    for k in range(len(elems)):
        x = elems[k]
        c, nv = find_new_sums(tree, size, powr, p, m, 0, m, x,
                              witness, out, sa, sb)
        for i in range(c):
            witness[out[i]] = x
        apply_new_sums(tree, size, powr, p, m, out, c)
        counts[k] = c
        nodes[k] = nv


def apnp_tree_add(trees, powr, p, v, u, nleaf):
    # Mark vertex u as reaching v: add r**u along the leaf-to-root path.
    node = nleaf + u
    while node > 0:
        trees[v][node] = (trees[v][node] + powr[u]) % p
        node >>= 1


def apnp_init(trees, powr, p, path, n, nleaf):
    for i in range(n):
        path[i][i] = i
        apnp_tree_add(trees, powr, p, i, i, nleaf)


def apnp_find(trees, path, a, b, nleaf, out_u, out_v, out_par, stack):
    # Walk down wherever the subtree hashes of a and b disagree.  Each
    # differing leaf u reaches exactly one endpoint, so the side u is
    # missing from gains it, through the endpoint u already reaches.
    count = 0
    stack[0] = 1
    top = 1
    while top > 0:
        top -= 1
        node = stack[top]
        if trees[a][node] == trees[b][node]:
            continue
        if node >= nleaf:
            u = node - nleaf
            out_u[count] = u
            if path[u][a] < 0:
                out_v[count] = a
                out_par[count] = b
            else:
                out_v[count] = b
                out_par[count] = a
            count += 1
        else:
            stack[top] = 2 * node + 1
            stack[top + 1] = 2 * node
            top += 2
    return count


def apnp_run(trees, powr, p, path, disc, edges_a, edges_b, nleaf,
             out_u, out_v, out_par, stack):
    # Edges arrive sorted by weight.  All discoveries of one edge are
    # computed against the pre-edge state before any of them is applied.
    for e in range(len(edges_a)):
        a = edges_a[e]
        b = edges_b[e]
        c = apnp_find(trees, path, a, b, nleaf, out_u, out_v, out_par, stack)
        for k in range(c):
            u = out_u[k]
            v = out_v[k]
            path[u][v] = out_par[k]
            disc[u][v] = e
            apnp_tree_add(trees, powr, p, v, u, nleaf)
