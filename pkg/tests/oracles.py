"""Brute-force reference computations used to freeze expected test values.

This module is deliberately self-contained: it has its own little row
reduction and transcribes every differential term by term from the component
formulas, with no imports from homtensor.  The packaged engine reaches the
same numbers through the graded-bracket machinery, so agreement between the
two is a genuine cross-check rather than the same code called twice.

Conventions match the structure files: the bracket tensor ``c[i][j][k]``
means [e_i, e_j] = sum_k c[i][j][k] e_k, the action tensor ``r[i][a][b]``
means rho(e_i) f_a = sum_b r[i][a][b] f_b, and matrices act on column
coordinate vectors, ``apply(M, v)[r] = sum_c M[r][c] v[c]``.

Run as a script to print the frozen cohomology table for the 4-dimensional
parametric fixture family.
"""

from fractions import Fraction
from itertools import combinations, product

Q = Fraction


# ---------------------------------------------------------------------------
# minimal exact linear algebra
# ---------------------------------------------------------------------------

def row_reduce(rows):
    """Reduced row echelon form; returns (rref_rows, pivot_columns)."""
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
    return len(row_reduce(rows)[0])


def kernel_basis(rows, ncols):
    """Basis of the right kernel, one vector per free column."""
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


def mat_vec(m, v):
    return [sum((row[j] * v[j] for j in range(len(v))), Q(0)) for row in m]


def vec_add(*vs):
    return [sum(col, Q(0)) for col in zip(*vs)]


def vec_scale(s, v):
    return [s * x for x in v]


# ---------------------------------------------------------------------------
# the parametric 4-dimensional fixture family
# ---------------------------------------------------------------------------

def hl4_structure(a, b):
    """Bracket tensor and twist for the 4-dim family with parameters a, b."""
    a, b = Q(a), Q(b)
    n = 4
    c = [[[Q(0)] * n for _ in range(n)] for _ in range(n)]

    def setbr(i, j, k, coeff):
        c[i][j][k] = coeff
        c[j][i][k] = -coeff

    setbr(0, 1, 2, -a)   # [e1, e2] = -a e3
    setbr(0, 2, 1, b)    # [e1, e3] =  b e2
    setbr(1, 3, 1, -a)   # [e2, e4] = -a e2
    setbr(2, 3, 2, a)    # [e3, e4] =  a e3
    alpha = [[Q(0)] * n for _ in range(n)]
    for i, s in enumerate([-1, 1, -1, 1]):
        alpha[i][i] = Q(s)
    return c, alpha


def adjoint_action(c):
    """Action tensor of the adjoint representation, r[i][a][b] = c[i][a][b]."""
    return [[list(col) for col in plane] for plane in c]


def check_hom_lie(c, alpha):
    """Assert skewness, multiplicativity and the twisted Jacobi identity."""
    n = len(c)

    def br(x, y):
        out = [Q(0)] * n
        for i in range(n):
            if x[i] == 0:
                continue
            for j in range(n):
                if y[j] == 0:
                    continue
                for k in range(n):
                    out[k] += x[i] * y[j] * c[i][j][k]
        return out

    basis = [[Q(1) if i == j else Q(0) for j in range(n)] for i in range(n)]
    for i, j in product(range(n), repeat=2):
        assert br(basis[i], basis[j]) == vec_scale(Q(-1), br(basis[j], basis[i]))
        lhs = mat_vec(alpha, br(basis[i], basis[j]))
        rhs = br(mat_vec(alpha, basis[i]), mat_vec(alpha, basis[j]))
        assert lhs == rhs, (i, j)
    for i, j, k in product(range(n), repeat=3):
        x, y, z = basis[i], basis[j], basis[k]
        total = vec_add(
            br(mat_vec(alpha, x), br(y, z)),
            br(mat_vec(alpha, y), br(z, x)),
            br(mat_vec(alpha, z), br(x, y)),
        )
        assert all(t == 0 for t in total), (i, j, k)


# ---------------------------------------------------------------------------
# cochain coordinates
#
# A context is the tuple (c, alpha, r, beta, T) with T[k][a] the matrix of
# the embedding tensor V -> g.  Cochains are stored as raw nested lists and
# flattened in a fixed lexicographic order so that linear maps between
# cochain spaces become explicit matrices.
# ---------------------------------------------------------------------------

class Ctx:
    def __init__(self, c, alpha, r, beta, T):
        self.c, self.alpha, self.r, self.beta, self.T = c, alpha, r, beta, T
        self.ng, self.nv = len(c), len(r[0])
        self.gbasis = [[Q(1) if i == j else Q(0) for j in range(self.ng)]
                       for i in range(self.ng)]
        self.vbasis = [[Q(1) if i == j else Q(0) for j in range(self.nv)]
                       for i in range(self.nv)]

    def br(self, x, y):
        out = [Q(0)] * self.ng
        for i in range(self.ng):
            if x[i] == 0:
                continue
            for j in range(self.ng):
                if y[j] == 0:
                    continue
                for k in range(self.ng):
                    out[k] += x[i] * y[j] * self.c[i][j][k]
        return out

    def act(self, x, v):
        out = [Q(0)] * self.nv
        for i in range(self.ng):
            if x[i] == 0:
                continue
            for a in range(self.nv):
                if v[a] == 0:
                    continue
                for b in range(self.nv):
                    out[b] += x[i] * v[a] * self.r[i][a][b]
        return out

    def t(self, v):
        return mat_vec(self.T, v)

    def al(self, x):
        return mat_vec(self.alpha, x)

    def be(self, v):
        return mat_vec(self.beta, v)


def intertwiner_rows(src_twists, tgt_twist, shape_dims, out_dim):
    """Constraint rows for tgt_twist . f == f . (tensor of src twists).

    Coordinates are flattened with the input multi-index varying slowest and
    the output index fastest, f(e_multi) = sum_k coords[flat(multi, k)] e_k.
    """
    ncoords = out_dim
    for d in shape_dims:
        ncoords *= d

    def flat(multi, k):
        pos = 0
        for d, i in zip(shape_dims, multi):
            pos = pos * d + i
        return pos * out_dim + k

    rows = []
    for multi in product(*[range(d) for d in shape_dims]):
        for k in range(out_dim):
            row = [Q(0)] * ncoords
            for m in range(out_dim):
                if tgt_twist[k][m] != 0:
                    row[flat(multi, m)] += tgt_twist[k][m]
            for src_multi in product(*[range(d) for d in shape_dims]):
                coeff = Q(1)
                for t in range(len(shape_dims)):
                    coeff *= src_twists[t][src_multi[t]][multi[t]]
                    if coeff == 0:
                        break
                if coeff != 0:
                    row[flat(src_multi, k)] -= coeff
            rows.append(row)
    return rows, ncoords, flat


def intertwiner_space(src_twists, tgt_twist, shape_dims, out_dim):
    rows, ncoords, flat = intertwiner_rows(src_twists, tgt_twist,
                                           shape_dims, out_dim)
    return kernel_basis(rows, ncoords), flat


# ---------------------------------------------------------------------------
# the embedding-tensor complex, degrees 0..2, by the displayed formulas
# ---------------------------------------------------------------------------

def d0_columns(ctx):
    """d_T on alpha-fixed vectors: x |-> ([x, Tv] - T(rho(x) v))."""
    fixed = kernel_basis(
        [[ctx.alpha[i][j] - (1 if i == j else 0) for j in range(ctx.ng)]
         for i in range(ctx.ng)], ctx.ng)
    cols = []
    for x in fixed:
        out = []
        for v in ctx.vbasis:
            val = vec_add(ctx.br(x, ctx.t(v)),
                          vec_scale(Q(-1), ctx.t(ctx.act(x, v))))
            out.extend(val)
        cols.append(out)
    return fixed, cols


def d1_apply(ctx, F):
    """d_T of a 1-cochain given as a matrix F: V -> g."""
    out = {}
    for ia, u in enumerate(ctx.vbasis):
        for ib, v in enumerate(ctx.vbasis):
            fu, fv = mat_vec(F, u), mat_vec(F, v)
            out[(ia, ib)] = vec_add(
                ctx.br(ctx.t(u), fv),
                vec_scale(Q(-1), ctx.br(ctx.t(v), fu)),
                vec_scale(Q(-1), mat_vec(F, ctx.act(ctx.t(u), v))),
                vec_scale(Q(-1), ctx.t(ctx.act(fu, v))),
            )
    return out


def embedding_h01(ctx):
    """(dim H^0, dim H^1) of the embedding-tensor complex."""
    one_basis, flat1 = intertwiner_space([ctx.beta], ctx.alpha,
                                         [ctx.nv], ctx.ng)
    fixed, d0cols = d0_columns(ctx)
    rank_d0 = rank(d0cols)
    d1cols = []
    for coords in one_basis:
        F = [[coords[flat1((a,), k)] for a in range(ctx.nv)]
             for k in range(ctx.ng)]
        img = d1_apply(ctx, F)
        flatv = []
        for ia in range(ctx.nv):
            for ib in range(ctx.nv):
                flatv.extend(img[(ia, ib)])
        d1cols.append(flatv)
    rank_d1 = rank(d1cols)
    h0 = len(fixed) - rank_d0
    h1 = (len(one_basis) - rank_d1) - rank_d0
    return h0, h1


# ---------------------------------------------------------------------------
# the triple complex, degrees 1..3, by the displayed component formulas
# ---------------------------------------------------------------------------

def delta1_apply(ctx, fg, fv):
    """Differential of (f_g, f_V) in degree one.

    fg is a matrix g -> g, fv a matrix V -> V.  Returns the three output
    tensors (Hom(wedge^2 g, g), Hom(g (x) V, V), Hom(V, g)) as dicts.
    """
    out_g, out_v, out_p = {}, {}, {}
    for i, j in combinations(range(ctx.ng), 2):
        x1, x2 = ctx.gbasis[i], ctx.gbasis[j]
        out_g[(i, j)] = vec_add(
            ctx.br(x1, mat_vec(fg, x2)),
            vec_scale(Q(-1), ctx.br(x2, mat_vec(fg, x1))),
            vec_scale(Q(-1), mat_vec(fg, ctx.br(x1, x2))),
        )
    for i in range(ctx.ng):
        for a in range(ctx.nv):
            x, v = ctx.gbasis[i], ctx.vbasis[a]
            out_v[(i, a)] = vec_add(
                ctx.act(x, mat_vec(fv, v)),
                ctx.act(mat_vec(fg, x), v),
                vec_scale(Q(-1), mat_vec(fv, ctx.act(x, v))),
            )
    for a in range(ctx.nv):
        v = ctx.vbasis[a]
        out_p[a] = vec_scale(
            Q(-1),
            vec_add(mat_vec(fg, ctx.t(v)),
                    vec_scale(Q(-1), ctx.t(mat_vec(fv, v)))),
        )
    return out_g, out_v, out_p


def delta2_apply(ctx, fg, fv, P, twist_last=True):
    """Differential of (f_g, f_V, P) in degree two.

    fg maps ordered pairs to g-vectors (dict keyed by (i, j), i < j), fv maps
    (g-index, V-index) to V-vectors, P is a matrix V -> g.  With twist_last
    the bracket-insertion sum of the f_V part feeds beta(v) into the last
    slot; the flag exists so the two readings can be compared numerically.
    """
    def fg_at(x, y):
        out = [Q(0)] * ctx.ng
        for i in range(ctx.ng):
            for j in range(ctx.ng):
                if i == j or x[i] == 0 or y[j] == 0:
                    continue
                base = fg[(i, j)] if i < j else vec_scale(Q(-1), fg[(j, i)])
                out = vec_add(out, vec_scale(x[i] * y[j], base))
        return out

    def fv_at(x, v):
        out = [Q(0)] * ctx.nv
        for i in range(ctx.ng):
            for a in range(ctx.nv):
                if x[i] == 0 or v[a] == 0:
                    continue
                out = vec_add(out, vec_scale(x[i] * v[a], fv[(i, a)]))
        return out

    out_g, out_v, out_p = {}, {}, {}
    for i, j, k in combinations(range(ctx.ng), 3):
        xs = [ctx.gbasis[i], ctx.gbasis[j], ctx.gbasis[k]]
        terms = []
        for p in range(3):
            rest = [xs[q] for q in range(3) if q != p]
            terms.append(vec_scale(Q((-1) ** p),
                                   ctx.br(ctx.al(xs[p]), fg_at(*rest))))
        for p, q in combinations(range(3), 2):
            other = next(t for t in range(3) if t not in (p, q))
            terms.append(vec_scale(Q((-1) ** (p + q)),
                                   fg_at(ctx.br(xs[p], xs[q]),
                                         ctx.al(xs[other]))))
        out_g[(i, j, k)] = vec_add(*terms)

    for i, j in combinations(range(ctx.ng), 2):
        for a in range(ctx.nv):
            x1, x2, v = ctx.gbasis[i], ctx.gbasis[j], ctx.vbasis[a]
            last = ctx.be(v) if twist_last else v
            terms = [
                ctx.act(ctx.al(x1), fv_at(x2, v)),
                vec_scale(Q(-1), ctx.act(ctx.al(x2), fv_at(x1, v))),
                vec_scale(Q(-1), ctx.act(fg_at(x1, x2), ctx.be(v))),
                vec_scale(Q(-1), fv_at(ctx.br(x1, x2), last)),
                vec_scale(Q(-1), fv_at(ctx.al(x2), ctx.act(x1, v))),
                fv_at(ctx.al(x1), ctx.act(x2, v)),
            ]
            out_v[(i, j, a)] = vec_add(*terms)

    for a in range(ctx.nv):
        for b in range(ctx.nv):
            v1, v2 = ctx.vbasis[a], ctx.vbasis[b]
            p1, p2 = mat_vec(P, v1), mat_vec(P, v2)
            dt = vec_add(
                ctx.br(ctx.t(v1), p2),
                vec_scale(Q(-1), ctx.br(ctx.t(v2), p1)),
                vec_scale(Q(-1), mat_vec(P, ctx.act(ctx.t(v1), v2))),
                vec_scale(Q(-1), ctx.t(ctx.act(p1, v2))),
            )
            omega = vec_add(
                fg_at(ctx.t(v1), ctx.t(v2)),
                vec_scale(Q(-1), ctx.t(fv_at(ctx.t(v1), v2))),
            )
            out_p[(a, b)] = vec_add(dt, omega)
    return out_g, out_v, out_p


def degree_two_cochain_basis(ctx):
    """Bases of the three components of the degree-two triple cochains."""
    ng, nv = ctx.ng, ctx.nv
    rows_g, ncoords_g, flat_g = intertwiner_rows(
        [ctx.alpha, ctx.alpha], ctx.alpha, [ng, ng], ng)
    for i in range(ng):
        for j in range(ng):
            for k in range(ng):
                row = [Q(0)] * ncoords_g
                row[flat_g((i, j), k)] += 1
                row[flat_g((j, i), k)] += 1
                rows_g.append(row)
    basis_g = kernel_basis(rows_g, ncoords_g)
    basis_v, flat_v = intertwiner_space([ctx.alpha, ctx.beta], ctx.beta,
                                        [ng, nv], nv)
    basis_p, flat_p = intertwiner_space([ctx.beta], ctx.alpha, [nv], ng)
    return (basis_g, flat_g), (basis_v, flat_v), (basis_p, flat_p)


def triple_h2(ctx, twist_last=True):
    """dim H^2 of the triple complex for the given context."""
    ng, nv = ctx.ng, ctx.nv

    c1_g, flat1g = intertwiner_space([ctx.alpha], ctx.alpha, [ng], ng)
    c1_v, flat1v = intertwiner_space([ctx.beta], ctx.beta, [nv], nv)

    def flatten2(out_g, out_v, out_p):
        flatv = []
        for pair in combinations(range(ng), 2):
            flatv.extend(out_g[pair])
        for i in range(ng):
            for a in range(nv):
                flatv.extend(out_v[(i, a)])
        for a in range(nv):
            flatv.extend(out_p[a])
        return flatv

    d1cols = []
    for coords in c1_g:
        fg = [[coords[flat1g((i,), k)] for i in range(ng)] for k in range(ng)]
        fv = [[Q(0)] * nv for _ in range(nv)]
        d1cols.append(flatten2(*delta1_apply(ctx, fg, fv)))
    for coords in c1_v:
        fg = [[Q(0)] * ng for _ in range(ng)]
        fv = [[coords[flat1v((a,), b)] for a in range(nv)] for b in range(nv)]
        d1cols.append(flatten2(*delta1_apply(ctx, fg, fv)))
    rank_d1 = rank(d1cols)

    (basis_g, flat_g), (basis_v, flat_v), (basis_p, flat_p) = \
        degree_two_cochain_basis(ctx)

    zero_fg = {p: [Q(0)] * ng for p in combinations(range(ng), 2)}
    zero_fv = {(i, a): [Q(0)] * nv for i in range(ng) for a in range(nv)}
    zero_p = [[Q(0)] * nv for _ in range(ng)]

    inputs = []
    for coords in basis_g:
        fg = {(i, j): [coords[flat_g((i, j), k)] for k in range(ng)]
              for i, j in combinations(range(ng), 2)}
        inputs.append((fg, zero_fv, zero_p))
    for coords in basis_v:
        fv = {(i, a): [coords[flat_v((i, a), b)] for b in range(nv)]
              for i in range(ng) for a in range(nv)}
        inputs.append((zero_fg, fv, zero_p))
    for coords in basis_p:
        P = [[coords[flat_p((a,), k)] for a in range(nv)] for k in range(ng)]
        inputs.append((zero_fg, zero_fv, P))

    d2cols = []
    for fg, fv, P in inputs:
        og, ov, op = delta2_apply(ctx, fg, fv, P, twist_last=twist_last)
        flatv = []
        for tri in combinations(range(ng), 3):
            flatv.extend(og[tri])
        for pair in combinations(range(ng), 2):
            for a in range(nv):
                flatv.extend(ov[pair + (a,)])
        for a in range(nv):
            for b in range(nv):
                flatv.extend(op[(a, b)])
        d2cols.append(flatv)
    rank_d2 = rank(d2cols)
    dim_c2 = len(basis_g) + len(basis_v) + len(basis_p)
    return (dim_c2 - rank_d2) - rank_d1


def dd_residual_ranks(ctx):
    """Ranks of delta2 . delta1 under both readings of the twisted slot.

    Returns (rank with beta on the last slot, rank with the slot untwisted);
    a zero rank means that reading squares to zero on degree-one cochains.
    """
    ng, nv = ctx.ng, ctx.nv
    c1_g, flat1g = intertwiner_space([ctx.alpha], ctx.alpha, [ng], ng)
    c1_v, flat1v = intertwiner_space([ctx.beta], ctx.beta, [nv], nv)
    pairs = []
    for coords in c1_g:
        fg = [[coords[flat1g((i,), k)] for i in range(ng)] for k in range(ng)]
        fv = [[Q(0)] * nv for _ in range(nv)]
        pairs.append((fg, fv))
    for coords in c1_v:
        fg = [[Q(0)] * ng for _ in range(ng)]
        fv = [[coords[flat1v((a,), b)] for a in range(nv)] for b in range(nv)]
        pairs.append((fg, fv))
    ranks = []
    for twist_last in (True, False):
        cols = []
        for fg, fv in pairs:
            og, ov, op = delta1_apply(ctx, fg, fv)
            P = [[op[a][k] for a in range(nv)] for k in range(ng)]
            og2, ov2, op2 = delta2_apply(ctx, og, ov, P, twist_last=twist_last)
            flatv = []
            for tri in combinations(range(ng), 3):
                flatv.extend(og2[tri])
            for pair in combinations(range(ng), 2):
                for a in range(nv):
                    flatv.extend(ov2[pair + (a,)])
            for a in range(nv):
                for b in range(nv):
                    flatv.extend(op2[(a, b)])
            cols.append(flatv)
        ranks.append(rank(cols))
    return tuple(ranks)


def hl4_context(a, b):
    c, alpha = hl4_structure(a, b)
    r = adjoint_action(c)
    T = [[Q(1) if i == j else Q(0) for j in range(4)] for i in range(4)]
    return Ctx(c, alpha, r, [row[:] for row in alpha], T)


def frozen_table():
    """Cohomology dims for the whole (a, b) grid used by the acceptance test."""
    table = {}
    for a in (0, 1, -1, 2):
        for b in (0, 1, -1, 2):
            ctx = hl4_context(a, b)
            check_hom_lie(ctx.c, ctx.alpha)
            h0, h1 = embedding_h01(ctx)
            table[(a, b)] = (h0, h1, triple_h2(ctx))
    return table


if __name__ == "__main__":
    ctx = hl4_context(1, 1)
    print("d.d residual ranks (beta-twisted, untwisted):", dd_residual_ranks(ctx))
    for (a, b), (h0, h1, h2) in sorted(frozen_table().items()):
        print(f"a={a:+d} b={b:+d}  H0_emb={h0}  H1_emb={h1}  H2_triple={h2}")
