"""Integer lattices: Smith normal form and saturation defects.

Rows of an integer matrix span a sublattice L of Z^n.  The quotient Z^n / L
has torsion exactly when some invariant factor exceeds 1, and the transform
bookkeeping recovers an explicit vector u outside L with k*u inside it.
"""


def _swap_rows(m, i, j):
    m[i], m[j] = m[j], m[i]


def _swap_cols(m, i, j):
    for r in m:
        r[i], r[j] = r[j], r[i]


def _add_row(m, dst, src, c):
    m[dst] = [a + c * b for a, b in zip(m[dst], m[src])]


def _add_col(m, dst, src, c):
    for r in m:
        r[dst] += c * r[src]


def smith_normal_form(rows, n):
    """Diagonalize over Z.  Returns (diag, basis) where the lattice spanned by
    the input rows equals the span of diag[i] * basis[i].

    basis is a unimodular list of n rows of Z^n (the inverse of the
    accumulated column transform), so basis[i] itself is in the saturation.
    """
    m = [list(r) for r in rows]
    for r in m:
        if len(r) != n:
            raise ValueError(f"row of length {len(r)}, expected {n}")
    if not m:
        m = [[0] * n]
    rows_n = len(m)
    # binv tracks the inverse of the column transform: row ops mirror col ops
    binv = [[1 if i == j else 0 for j in range(n)] for i in range(n)]

    def col_add(dst, src, c):
        _add_col(m, dst, src, c)
        _add_row(binv, src, dst, -c)

    def col_swap(i, j):
        _swap_cols(m, i, j)
        _swap_rows(binv, i, j)

    t = 0
    while t < min(rows_n, n):
        # find the smallest nonzero entry in the remaining block
        pivot = None
        for i in range(t, rows_n):
            for j in range(t, n):
                if m[i][j] and (pivot is None or abs(m[i][j]) < abs(m[pivot[0]][pivot[1]])):
                    pivot = (i, j)
        if pivot is None:
            break
        i, j = pivot
        if i != t:
            _swap_rows(m, t, i)
        if j != t:
            col_swap(t, j)
        if m[t][t] < 0:
            m[t] = [-x for x in m[t]]
        dirty = False
        for i in range(t + 1, rows_n):
            q = m[i][t] // m[t][t]
            if q:
                _add_row(m, i, t, -q)
            if m[i][t]:
                dirty = True
        for j in range(t + 1, n):
            q = m[t][j] // m[t][t]
            if q:
                col_add(j, t, -q)
            if m[t][j]:
                dirty = True
        if dirty:
            continue  # remainder became the new smallest entry, repeat
        # enforce divisibility of the rest of the block by the pivot
        bad = None
        for i in range(t + 1, rows_n):
            for j in range(t + 1, n):
                if m[i][j] % m[t][t]:
                    bad = i
                    break
            if bad is not None:
                break
        if bad is not None:
            _add_row(m, t, bad, 1)
            continue
        t += 1
    diag = [m[i][i] for i in range(min(rows_n, n))]
    diag += [0] * (n - len(diag))
    return diag[:n], binv


def saturation_defect(rows, n):
    """None when the span is saturated in Z^n, else (u, k) with k*u in the
    lattice, u outside it, and k > 1."""
    diag, basis = smith_normal_form(rows, n)
    for i, d in enumerate(diag):
        if d > 1:
            return list(basis[i]), d
    return None
