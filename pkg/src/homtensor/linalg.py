"""Exact dense linear algebra over the rationals.

Everything here works with plain lists of :class:`fractions.Fraction`.  A
matrix is a list of rows; a vector is a list of entries.  Pivot selection is
always the first row with a nonzero entry in column scan order, so reduced
forms, ranks and kernel bases are reproducible across runs and platforms.
No floating point is used anywhere.
"""

from fractions import Fraction

Q = Fraction


def zeros(n, m):
    return [[Q(0)] * m for _ in range(n)]


def identity(n):
    return [[Q(1) if i == j else Q(0) for j in range(n)] for i in range(n)]


def basis_vector(n, i):
    v = [Q(0)] * n
    v[i] = Q(1)
    return v


def mat_vec(m, v):
    if m and len(m[0]) != len(v):
        raise ValueError(f"matrix has {len(m[0])} columns, vector has {len(v)}")
    return [sum((row[j] * v[j] for j in range(len(v))), Q(0)) for row in m]


def mat_mul(a, b):
    if a and b and len(a[0]) != len(b):
        raise ValueError(f"inner dimensions {len(a[0])} and {len(b)} differ")
    bt = list(zip(*b)) if b else []
    return [[sum((x * y for x, y in zip(row, col)), Q(0)) for col in bt]
            for row in a]


def mat_add(a, b):
    return [[x + y for x, y in zip(ra, rb)] for ra, rb in zip(a, b)]


def mat_scale(s, a):
    return [[s * x for x in row] for row in a]


def mat_pow(m, k):
    """k-th power of a square matrix; the 0-th power is the identity."""
    n = len(m)
    out = identity(n)
    for _ in range(k):
        out = mat_mul(out, m)
    return out


def transpose(m):
    return [list(col) for col in zip(*m)] if m else []


def vec_add(*vs):
    return [sum(col, Q(0)) for col in zip(*vs)]


def vec_sub(a, b):
    return [x - y for x, y in zip(a, b)]


def vec_scale(s, v):
    return [s * x for x in v]


def is_zero(v):
    return all(x == 0 for x in v)


def row_reduce(rows):
    """Reduced row echelon form.

    Returns (rref_rows, pivot_columns).  Zero rows are dropped from the
    output, so len(rref_rows) == len(pivot_columns) == rank.

    >>> rref, piv = row_reduce([[Q(1), Q(2)], [Q(2), Q(4)]])
    >>> rref, piv
    ([[Fraction(1, 1), Fraction(2, 1)]], [0])
    """
    rows = [list(r) for r in rows]
    pivots = []
    r = 0
    ncols = len(rows[0]) if rows else 0
    for c in range(ncols):
        pivot = next((i for i in range(r, len(rows)) if rows[i][c] != 0), None)
        if pivot is None:
            continue
        rows[r], rows[pivot] = rows[pivot], rows[r]
        inv = Q(1) / rows[r][c]
        rows[r] = [x * inv for x in rows[r]]
        for i in range(len(rows)):
            if i != r and rows[i][c] != 0:
                f = rows[i][c]
                rows[i] = [a - f * b for a, b in zip(rows[i], rows[r])]
        pivots.append(c)
        r += 1
        if r == len(rows):
            break
    return rows[:r], pivots


def rank(rows):
    """Rank of the matrix (or of the span of a list of vectors).

    >>> rank([[Q(1), Q(2)], [Q(2), Q(4)]])
    1
    """
    return len(row_reduce(rows)[0])


def kernel_basis(rows, ncols):
    """Basis of the right kernel {v : rows . v == 0}.

    One basis vector per free column, built by back-substitution from the
    reduced form.  For an empty constraint list the full standard basis of
    Q^ncols is returned.

    >>> kernel_basis([[Q(1), Q(1), Q(0)]], 3)
    [[Fraction(-1, 1), Fraction(1, 1), Fraction(0, 1)], [Fraction(0, 1), Fraction(0, 1), Fraction(1, 1)]]
    """
    rref, pivots = row_reduce(rows) if rows else ([], [])
    free = [c for c in range(ncols) if c not in pivots]
    basis = []
    for f in free:
        v = [Q(0)] * ncols
        v[f] = Q(1)
        for i, p in enumerate(pivots):
            v[p] = -rref[i][f]
        basis.append(v)
    return basis


def solve_columns(cols, target):
    """Coefficients c with sum(c_i * cols[i]) == target, or None.

    The returned solution is the one with all free variables set to zero
    (deterministic).  cols may be empty, in which case the solve succeeds
    only for a zero target.
    """
    if not cols:
        return [] if is_zero(target) else None
    height = len(cols[0])
    aug = [[cols[j][i] for j in range(len(cols))] + [target[i]]
           for i in range(height)]
    rref, pivots = row_reduce(aug)
    if len(cols) in pivots:
        return None
    sol = [Q(0)] * len(cols)
    for i, p in enumerate(pivots):
        sol[p] = rref[i][-1]
    return sol


def inverse(a):
    """Inverse of a square matrix, or None if singular.

    >>> inverse([[Q(2), Q(0)], [Q(0), Q(-1)]])
    [[Fraction(1, 2), Fraction(0, 1)], [Fraction(0, 1), Fraction(-1, 1)]]
    """
    n = len(a)
    if any(len(row) != n for row in a):
        raise ValueError("inverse needs a square matrix")
    ident = identity(n)
    aug = [list(row) + ident[i] for i, row in enumerate(a)]
    rref, pivots = row_reduce(aug)
    if pivots != list(range(n)):
        return None
    return [row[n:] for row in rref]


def fixed_point_space(a):
    """Basis of {v : a v == v} for a square matrix a."""
    n = len(a)
    if any(len(row) != n for row in a):
        raise ValueError("fixed_point_space needs a square matrix")
    rows = [[a[i][j] - (Q(1) if i == j else Q(0)) for j in range(n)]
            for i in range(n)]
    return kernel_basis(rows, n)


class Subspace:
    """A subspace of Q^ambient_dim held in reduced echelon form.

    The stored basis is the canonical row-reduced one, so two Subspace
    objects describe the same space exactly when their bases are equal.
    """

    def __init__(self, ambient_dim, vectors):
        self.ambient_dim = ambient_dim
        for v in vectors:
            if len(v) != ambient_dim:
                raise ValueError(
                    f"vector of length {len(v)} in ambient dimension {ambient_dim}")
        self.basis, self._pivots = row_reduce(vectors)

    @property
    def dim(self):
        return len(self.basis)

    def contains(self, v):
        """Exact membership test by reduction against the stored basis."""
        v = list(v)
        for row, p in zip(self.basis, self._pivots):
            if v[p] != 0:
                f = v[p]
                v = [a - f * b for a, b in zip(v, row)]
        return is_zero(v)

    def contains_space(self, other):
        return all(self.contains(v) for v in other.basis)

    def quotient_dim(self, small):
        """dim(self / small); raises if small is not contained in self."""
        if not self.contains_space(small):
            raise ValueError("not a subspace")
        return self.dim - small.dim

    def __repr__(self):
        return f"Subspace(dim={self.dim}, ambient={self.ambient_dim})"


def format_rational(x):
    """Render a Fraction as 'p' or 'p/q' for structure files."""
    x = Q(x)
    return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"


def parse_rational(s):
    """Parse 'p', 'p/q' (or an int) into a Fraction.

    >>> parse_rational("-3/4")
    Fraction(-3, 4)
    """
    if isinstance(s, int):
        return Q(s)
    if isinstance(s, Fraction):
        return s
    if not isinstance(s, str):
        raise ValueError(f"rational entries must be strings or ints, got {type(s).__name__}")
    text = s.strip()
    if "/" in text:
        num, _, den = text.partition("/")
        if int(den) == 0:
            raise ValueError(f"zero denominator in {s!r}")
        return Q(int(num), int(den))
    return Q(int(text))
