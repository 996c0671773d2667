"""Concrete structures used as fixtures and in generated test sweeps.

Each constructor returns exact data; parameters are rationals.  The four
dimensional family ``hl4_family`` is the workhorse: it is a Hom-Lie algebra
for every choice of the two parameters, its twist is a non-identity
involution, and its adjoint representation with T = id is the standard
context for the cohomology and deformation engines.
"""

from fractions import Fraction

from . import linalg, structures
from .linalg import Q
from .structures import (EmbeddingTensor, HomLieAlgebra, HomLieRep,
                         HomLeibnizAlgebra, HomSpace, adjoint_rep,
                         direct_sum_rep, identity_tensor, projection_tensor,
                         sum_map_tensor, yau_twist, yau_twist_leibniz)


def hl4_family(a, b):
    """Four dimensional Hom-Lie family.

    [e1,e2] = -a e3, [e1,e3] = b e2, [e2,e4] = -a e2, [e3,e4] = a e3,
    alpha = diag(-1, 1, -1, 1); a and b are arbitrary rationals.
    """
    a, b = Q(a), Q(b)
    n = 4
    c = [[[Q(0)] * n for _ in range(n)] for _ in range(n)]

    def setbr(i, j, k, val):
        c[i][j][k] = val
        c[j][i][k] = -val

    setbr(0, 1, 2, -a)
    setbr(0, 2, 1, b)
    setbr(1, 3, 1, -a)
    setbr(2, 3, 2, a)
    alpha = [[Q(-1), Q(0), Q(0), Q(0)],
             [Q(0), Q(1), Q(0), Q(0)],
             [Q(0), Q(0), Q(-1), Q(0)],
             [Q(0), Q(0), Q(0), Q(1)]]
    return HomLieAlgebra(HomSpace(n, alpha), c)


def hl4_identity_triple(a, b):
    """hl4_family with its adjoint representation and T = id."""
    return identity_tensor(hl4_family(a, b))


def heisenberg3():
    """3-dim algebra [e1,e2] = e3 with the twist diag(1,-1,-1)."""
    n = 3
    c = [[[Q(0)] * n for _ in range(n)] for _ in range(n)]
    c[0][1][2] = Q(1)
    c[1][0][2] = Q(-1)
    alpha = [[Q(1), Q(0), Q(0)],
             [Q(0), Q(-1), Q(0)],
             [Q(0), Q(0), Q(-1)]]
    return HomLieAlgebra(HomSpace(n, alpha), c)


def square_zero_derivation_triple():
    """A square-zero derivation as a tensor over the adjoint representation.

    On heisenberg3 the map d: e2 -> e3, e1 -> 0, e3 -> 0 satisfies
    d[x,y] = [dx,y] + [x,dy], commutes with the twist and squares to zero.
    """
    alg = heisenberg3()
    d = linalg.zeros(3, 3)
    d[2][1] = Q(1)
    return EmbeddingTensor(adjoint_rep(alg), d)


def sum_map_triple(a, b, copies=2):
    """The sum map on the n-fold direct sum of hl4_family's adjoint rep."""
    alg = hl4_family(a, b)
    return sum_map_tensor(direct_sum_rep(alg, copies), copies)


def projection_triple(a, b, copies=2, which=0):
    """The i-th projection on the n-fold direct sum representation."""
    alg = hl4_family(a, b)
    return projection_tensor(direct_sum_rep(alg, copies), copies, which)


def equivariant_scaled_identity_triple(a, b, scale=3):
    """A g-equivariant map (a multiple of the identity on the adjoint rep)."""
    alg = hl4_family(a, b)
    t = linalg.mat_scale(Q(scale), linalg.identity(alg.dim))
    return EmbeddingTensor(adjoint_rep(alg), t)


def crossed_module_triple():
    """Inclusion of an abelian twist-stable ideal as a crossed module map.

    g1 = heisenberg3, g2 = span(e2, e3) with the restricted (zero) bracket,
    d = inclusion, rho = restricted adjoint action.  Both crossed-module
    identities hold, so d is an embedding tensor for rho.
    """
    g1 = heisenberg3()
    sub = [1, 2]
    m = len(sub)
    beta = [[g1.space.twist[sub[p]][sub[q]] for q in range(m)] for p in range(m)]
    vsp = HomSpace(m, beta, prefix="m")
    rho = [[[Q(0)] * m for _ in range(m)] for _ in range(g1.dim)]
    for i in range(g1.dim):
        for p in range(m):
            img = g1.basis_bracket(i, sub[p])
            for q in range(m):
                rho[i][p][q] = img[sub[q]]
    rep = HomLieRep(g1, vsp, rho)
    t = linalg.zeros(g1.dim, m)
    for p in range(m):
        t[sub[p]][p] = Q(1)
    return EmbeddingTensor(rep, t)


def affine_bracket():
    """Lie bracket of the 2-dim non-abelian algebra [e1,e2] = e2."""
    c = [[[Q(0)] * 2 for _ in range(2)] for _ in range(2)]
    c[0][1][1] = Q(1)
    c[1][0][1] = Q(-1)
    return c


def yau_twist_affine(scale=2):
    """Yau twist of the affine algebra by e1 -> e1, e2 -> scale e2."""
    alpha = [[Q(1), Q(0)], [Q(0), Q(scale)]]
    return yau_twist(affine_bracket(), alpha)


def sl2_bracket():
    """sl2 with basis (h, e, f): [h,e] = 2e, [h,f] = -2f, [e,f] = h."""
    c = [[[Q(0)] * 3 for _ in range(3)] for _ in range(3)]

    def setbr(i, j, vec):
        c[i][j] = list(vec)
        c[j][i] = [-x for x in vec]

    setbr(0, 1, [Q(0), Q(2), Q(0)])
    setbr(0, 2, [Q(0), Q(0), Q(-2)])
    setbr(1, 2, [Q(1), Q(0), Q(0)])
    return c


def yau_twist_sl2_swap():
    """Yau twist of sl2 by the automorphism h -> -h, e -> f, f -> e."""
    alpha = [[Q(-1), Q(0), Q(0)],
             [Q(0), Q(0), Q(1)],
             [Q(0), Q(1), Q(0)]]
    return yau_twist(sl2_bracket(), alpha)


def upper_triangular_commutator(scale=2):
    """Commutator Hom-Lie algebra of a twisted associative algebra.

    Carrier: upper-triangular 2x2 matrices with basis (E11, E12, E22); the
    algebra map sends E12 to scale*E12 and fixes the idempotents.  The
    twisted product mu_alpha = alpha o mu is Hom-associative and its
    commutator is a Hom-Lie bracket.
    """
    s = Q(scale)
    n = 3
    mu = [[[Q(0)] * n for _ in range(n)] for _ in range(n)]
    mu[0][0][0] = Q(1)     # E11 E11 = E11
    mu[0][1][1] = Q(1)     # E11 E12 = E12
    mu[1][2][1] = Q(1)     # E12 E22 = E12
    mu[2][2][2] = Q(1)     # E22 E22 = E22
    alpha = [[Q(1), Q(0), Q(0)], [Q(0), s, Q(0)], [Q(0), Q(0), Q(1)]]
    twisted = [[linalg.mat_vec(alpha, mu[i][j]) for j in range(n)]
               for i in range(n)]
    comm = [[[x - y for x, y in zip(twisted[i][j], twisted[j][i])]
             for j in range(n)] for i in range(n)]
    return HomLieAlgebra(HomSpace(n, alpha), comm), twisted


def nilpotent_leibniz(scale=2):
    """2-dim Hom-Leibniz algebra {f2,f2} = scale^2 f1, twist diag(scale^2, scale).

    This is the Yau twist of the Leibniz bracket {f2,f2} = f1 by the
    endomorphism f1 -> scale^2 f1, f2 -> scale f2.  Its bracket ideal is
    span(f1) and the induced quotient structures are well-defined.
    """
    s = Q(scale)
    c = [[[Q(0)] * 2 for _ in range(2)] for _ in range(2)]
    c[1][1][0] = Q(1)
    alpha = [[s * s, Q(0)], [Q(0), s]]
    return yau_twist_leibniz(c, alpha, prefix="f")


def broken_multiplicativity():
    """hl4_family(1,1) with the twist corrupted at e3 (witness (e1, e2))."""
    alg = hl4_family(1, 1)
    twist = [list(row) for row in alg.space.twist]
    twist[2][2] = Q(1)
    return HomLieAlgebra(HomSpace(4, twist), alg.bracket)
