"""Infinitesimal deformations of embedding tensors and of full triples.

A deformation replaces a structure map by a first-order family in a formal
parameter eps with eps^2 = 0.  For an embedding tensor T the family is
T + eps*T1 with T1 twist-compatible; it satisfies the embedding tensor
axioms exactly when the degree-1 differential of the tensor complex kills
T1, so degree-1 cocycles are the deformation directions and coboundaries
are the trivial ones.  For a full triple the family deforms the bracket,
the action and the tensor at once, and validity picks out degree-2
cocycles of the triple complex.

Equivalences are realized by concrete gauge pairs over the dual numbers.
Two tensor deformations are linked by

    (id_g + eps [a, inv_alpha(-)],  id_V + eps rho(a) inv_beta)

for an alpha-fixed gauge element a.  The inverse twists make every
identity of an embedding-tensor homomorphism hold automatically (through
the Hom-Jacobi and representation identities) except the linking square,
which holds exactly when the difference of the two deformations is the
degree-0 coboundary of a; with identity twists the pair is the familiar
(id + eps [a,-], id + eps rho(a)).  Two triple deformations are linked by
(id_g + eps N, id_V + eps S) for twist-commuting N and S, and the morphism
identities force the difference to be the degree-1 coboundary of (N, S).

Dual-number checks expand both the constant and the eps coefficient of
every axiom; the constant part re-verifies the undeformed structure.
"""

from fractions import Fraction

from . import linalg as la
from .cochains import (
    Cochain,
    RouteMismatch,
    derived_bracket_expanded,
    tensor_cochain,
)
from .complexes import (
    ComplexError,
    TensorComplex,
    TripleComplex,
    d_tensor,
    delta_triple,
)
from .structures import EmbeddingTensor, ValidationReport

Q = Fraction


# ---------------------------------------------------------------------------
# dual numbers


class DualNumber:
    """A rational a + b*eps with eps^2 = 0.

    >>> eps = DualNumber(0, 1)
    >>> eps * eps
    DualNumber(0, 0)
    >>> (1 + 2 * eps) * (3 + 4 * eps)
    DualNumber(3, 10)
    >>> DualNumber(Fraction(1, 2)) - eps == DualNumber(Fraction(1, 2), -1)
    True
    """

    __slots__ = ("a", "b")

    def __init__(self, a=0, b=0):
        self.a = Q(a)
        self.b = Q(b)

    def __add__(self, other):
        other = _coerce(other)
        if other is None:
            return NotImplemented
        return DualNumber(self.a + other.a, self.b + other.b)

    __radd__ = __add__

    def __sub__(self, other):
        other = _coerce(other)
        if other is None:
            return NotImplemented
        return DualNumber(self.a - other.a, self.b - other.b)

    def __rsub__(self, other):
        other = _coerce(other)
        if other is None:
            return NotImplemented
        return DualNumber(other.a - self.a, other.b - self.b)

    def __mul__(self, other):
        other = _coerce(other)
        if other is None:
            return NotImplemented
        return DualNumber(self.a * other.a, self.a * other.b + self.b * other.a)

    __rmul__ = __mul__

    def __neg__(self):
        return DualNumber(-self.a, -self.b)

    def __eq__(self, other):
        other = _coerce(other)
        if other is None:
            return NotImplemented
        return self.a == other.a and self.b == other.b

    def __hash__(self):
        return hash((self.a, self.b))

    def __bool__(self):
        return bool(self.a) or bool(self.b)

    def __repr__(self):
        return f"DualNumber({self.a}, {self.b})"


def _coerce(x):
    if isinstance(x, DualNumber):
        return x
    if isinstance(x, (int, Fraction)):
        return DualNumber(x)
    return None


def dual_vector(value, eps_part=None):
    """Lift a rational vector (with optional eps part) to dual coordinates."""
    if eps_part is None:
        return [DualNumber(x) for x in value]
    return [DualNumber(x, y) for x, y in zip(value, eps_part)]


def _as_dual(vec):
    return [x if isinstance(x, DualNumber) else DualNumber(x) for x in vec]


def _parts(vec):
    return [x.a for x in vec], [x.b for x in vec]


def _shift(vec):
    """Multiply a dual vector by eps (the eps^2 term drops)."""
    return [DualNumber(0, x.a) for x in vec]


def _dadd(u, v):
    return [p + q for p, q in zip(u, v)]


def _dsub(u, v):
    return [p - q for p, q in zip(u, v)]


def _dmat(m, v):
    return _as_dual(la.mat_vec(m, v))


def _require_dual(report, identity, at, resid):
    base, eps = _parts(resid)
    report.require(identity + "_base", at, base)
    report.require(identity + "_eps", at, eps)


def _deformed_maps(t, fg, fv, t1):
    """Dual-number evaluators for the eps-deformed bracket, action, tensor."""
    rep = t.rep
    alg = rep.algebra

    def dbr(x, y):
        out = _as_dual(alg.br(x, y))
        if fg is not None:
            out = _dadd(out, _shift(_as_dual(fg.apply([x, y]))))
        return out

    def dact(x, v):
        out = _as_dual(rep.act(x, v))
        if fv is not None:
            out = _dadd(out, _shift(_as_dual(fv.apply([x, v]))))
        return out

    def dten(v):
        out = _dmat(t.t, v)
        if t1 is not None:
            out = _dadd(out, _shift(_dmat(t1, v)))
        return out

    return dbr, dact, dten


# ---------------------------------------------------------------------------
# embedding tensor deformations


def tensor_mc_residual(rep, tmat):
    """<<S, S>> for a twist-compatible candidate map S: V -> g.

    The candidate need not satisfy the embedding identity; it is an
    embedding tensor exactly when the returned 2-cochain vanishes.
    """
    cand = EmbeddingTensor(rep, tmat)
    one = tensor_cochain(cand)
    if one.twist_residual() is not None:
        raise ComplexError("candidate map is not twist-compatible")
    return derived_bracket_expanded(one, one, rep)


def full_mc_residual(t, t1):
    """d_T(T1) + (1/2)<<T1, T1>> as a 2-cochain on V.

    The sum T + T1 (the deformed family at eps = 1) is again an embedding
    tensor exactly when this cochain vanishes; the infinitesimal check of
    :func:`check_inf_deformation_tensor` only sees the linear d_T part.
    """
    rep = t.rep
    one = tensor_cochain(EmbeddingTensor(rep, t1))
    if one.twist_residual() is not None:
        raise ComplexError("deformation direction is not twist-compatible")
    linear = d_tensor(one, t, validate=False)
    square = derived_bracket_expanded(one, one, rep).scale(Q(1, 2))
    return linear.add(square)


def check_inf_deformation_tensor(t, t1, cross_check=True):
    """Does T + eps*T1 satisfy the embedding tensor axioms mod eps^2?

    ``t1`` is a rational matrix of the same shape as T.  A twist
    incompatible direction is rejected with :class:`ComplexError`: such a
    family leaves the twist-compatible maps, so it is not a deformation
    at all.  The report carries the dual-number residual of the embedding
    identity on every module basis pair, split into its constant and eps
    coefficients; with ``cross_check`` the eps coefficient is compared
    entry by entry with the degree-1 differential of t1, so validity is
    equivalent to t1 being a 1-cocycle of the tensor complex.

    Whether the eps = 1 family T + T1 is again an embedding tensor is a
    different question, answered by :func:`full_mc_residual`.
    """
    rep = t.rep
    cand = EmbeddingTensor(rep, t1)
    one = tensor_cochain(cand)
    if one.twist_residual() is not None:
        raise ComplexError("deformation direction is not twist-compatible")
    report = ValidationReport("infinitesimal tensor deformation")
    image = d_tensor(one, t, validate=False) if cross_check else None
    dbr, dact, dten = _deformed_maps(t, None, None, cand.t)
    vs = rep.vspace
    vb = vs.basis()
    lab = vs.label
    for a in range(vs.dim):
        tu = dten(dual_vector(vb[a]))
        for b in range(vs.dim):
            v = dual_vector(vb[b])
            resid = _dsub(dbr(tu, dten(v)), dten(dact(tu, v)))
            _require_dual(report, "embedding_identity", (lab(a), lab(b)), resid)
            if cross_check and _parts(resid)[1] != image.entry((a, b)):
                raise RouteMismatch(
                    "tensor deformation eps residual disagrees with the "
                    "complex differential")
    return report


def _map_matrix(c):
    """Matrix of a 1-cochain: columns are the values on basis vectors."""
    rows, cols = c.target.dim, c.sources[0].dim
    return [[c.entry((j,))[k] for j in range(cols)] for k in range(rows)]


def _independent_images(basis, images, flatten):
    """(witness, image) pairs whose images form a basis of the span."""
    kept, picked = [], []
    for witness, image in zip(basis, images):
        flat = flatten(image)
        if la.is_zero(flat):
            continue
        if la.rank(kept + [flat]) > len(kept):
            kept.append(flat)
            picked.append((witness, image))
    return picked


def classify_h1_T(t):
    """Cocycles, coboundaries and H^1 of the tensor complex at degree 1.

    Returns ``(h_dim, cocycles, coboundaries)``: ``cocycles`` is a list of
    matrices spanning the degree-1 kernel, ``coboundaries`` a list of
    ``(witness, matrix)`` pairs where ``witness`` is an alpha-fixed vector
    in g whose degree-0 coboundary is the matrix, and the matrices span
    the degree-0 image.  Every cocycle matrix passes
    :func:`check_inf_deformation_tensor`, and
    ``h_dim == len(cocycles) - len(coboundaries)``.
    """
    tc = TensorComplex(t)
    cocycles = [_map_matrix(tc.unflatten(1, flat))
                for flat in tc.cocycle_flat(1)]
    picked = _independent_images(tc.basis(0), tc.images(0),
                                 lambda image: tc.flatten(1, image))
    coboundaries = [(witness, _map_matrix(image)) for witness, image in picked]
    return len(cocycles) - len(coboundaries), cocycles, coboundaries


def check_equivalence_tensor(t, t1, t1p, a):
    """Gauge equivalence of two tensor deformations through a witness a.

    Checks that the pair (id_g + eps [a, inv_alpha(-)], id_V + eps rho(a)
    inv_beta) is a homomorphism of embedding tensors from T + eps*t1 to
    T + eps*t1p, expanding all four morphism identities over the dual
    numbers.  The twist and structure identities hold for every
    alpha-fixed a; the linking square holds exactly when t1p - t1 is the
    degree-0 coboundary of a.  Raises :class:`ComplexError` when a is not
    alpha-fixed or a twist is not invertible.
    """
    rep = t.rep
    alg = rep.algebra
    gs, vs = alg.space, rep.vspace
    a = [Q(x) for x in a]
    if len(a) != gs.dim:
        raise ComplexError("gauge witness must be a vector in g")
    if la.mat_vec(gs.twist, a) != a:
        raise ComplexError("gauge witness is not alpha-fixed")
    alpha_inv = la.inverse(gs.twist)
    beta_inv = la.inverse(vs.twist)
    if alpha_inv is None or beta_inv is None:
        raise ComplexError("gauge pair needs invertible twists")
    d1 = EmbeddingTensor(rep, t1)
    d2 = EmbeddingTensor(rep, t1p)
    acols = [[alpha_inv[r][j] for r in range(gs.dim)] for j in range(gs.dim)]
    bcols = [[beta_inv[r][j] for r in range(vs.dim)] for j in range(vs.dim)]
    phi1 = la.transpose([alg.br(a, col) for col in acols])
    psi1 = la.transpose([rep.act(a, col) for col in bcols])

    def phi(x):
        return _dadd(x, _shift(_dmat(phi1, x)))

    def psi(v):
        return _dadd(v, _shift(_dmat(psi1, v)))

    _, _, t_src = _deformed_maps(t, None, None, d1.t)
    _, _, t_tgt = _deformed_maps(t, None, None, d2.t)

    report = ValidationReport("tensor deformation equivalence")
    gb, vb = gs.basis(), vs.basis()
    glab, vlab = gs.label, vs.label
    for i in range(gs.dim):
        x = dual_vector(gb[i])
        _require_dual(report, "phi_twist", (glab(i),),
                      _dsub(phi(_dmat(gs.twist, x)), _dmat(gs.twist, phi(x))))
        for j in range(gs.dim):
            y = dual_vector(gb[j])
            lhs = phi(_as_dual(alg.br(x, y)))
            rhs = _as_dual(alg.br(phi(x), phi(y)))
            _require_dual(report, "phi_bracket", (glab(i), glab(j)),
                          _dsub(lhs, rhs))
    for b in range(vs.dim):
        v = dual_vector(vb[b])
        _require_dual(report, "psi_twist", (vlab(b),),
                      _dsub(psi(_dmat(vs.twist, v)), _dmat(vs.twist, psi(v))))
        _require_dual(report, "tensor_link", (vlab(b),),
                      _dsub(phi(t_src(v)), t_tgt(psi(v))))
    for i in range(gs.dim):
        x = dual_vector(gb[i])
        for b in range(vs.dim):
            v = dual_vector(vb[b])
            lhs = psi(_as_dual(rep.act(x, v)))
            rhs = _as_dual(rep.act(phi(x), psi(v)))
            _require_dual(report, "psi_action", (glab(i), vlab(b)),
                          _dsub(lhs, rhs))
    return report


def find_equivalence_witness_tensor(t, t1, t1p):
    """An alpha-fixed a whose degree-0 coboundary is t1p - t1, or None.

    Solving is a linear problem over the alpha-fixed subspace; when a
    witness exists, :func:`check_equivalence_tensor` passes on it.
    """
    tc = TensorComplex(t)
    rep = t.rep
    gd = rep.algebra.dim
    diff = Cochain.from_function(
        [rep.vspace], rep.algebra.space,
        lambda a: [Q(t1p[i][a]) - Q(t1[i][a]) for i in range(gd)])
    target = tc.flatten(1, diff)
    cols = [tc.flatten(1, image) for image in tc.images(0)]
    coeffs = la.solve_columns(cols, target)
    if coeffs is None:
        return None
    witness = [Q(0)] * gd
    for c, vec in zip(coeffs, tc.basis(0)):
        if c:
            witness = la.vec_add(witness, la.vec_scale(c, vec))
    return witness


# ---------------------------------------------------------------------------
# triple deformations


def _check_triple_components(t, fg, fv, t1):
    """Shape and membership checks for a (bracket, action, tensor) direction."""
    rep = t.rep
    gs, vs = rep.algebra.space, rep.vspace
    if (not isinstance(fg, Cochain)
            or [s.dim for s in fg.sources] != [gs.dim, gs.dim]
            or fg.target.dim != gs.dim
            or any(s.twist != gs.twist for s in fg.sources)
            or fg.target.twist != gs.twist):
        raise ComplexError("bracket component must be a 2-cochain on g")
    if (not isinstance(fv, Cochain)
            or [s.dim for s in fv.sources] != [gs.dim, vs.dim]
            or fv.target.dim != vs.dim
            or fv.sources[0].twist != gs.twist
            or fv.sources[1].twist != vs.twist
            or fv.target.twist != vs.twist):
        raise ComplexError("action component must map g x V to V")
    for i in range(gs.dim):
        for j in range(i, gs.dim):
            if fg.entry((i, j)) != [-x for x in fg.entry((j, i))]:
                raise ComplexError("bracket component is not skew")
    if fg.twist_residual() is not None:
        raise ComplexError("bracket component is not twist-compatible")
    if fv.twist_residual() is not None:
        raise ComplexError("action component is not twist-compatible")
    cand = EmbeddingTensor(rep, t1)
    one = tensor_cochain(cand)
    if one.twist_residual() is not None:
        raise ComplexError("tensor component is not twist-compatible")
    return cand, one


def check_inf_deformation_triple(t, fg, fv, t1, cross_check=True):
    """Does deforming bracket, action and tensor at once stay a triple?

    The family ([x,y] + eps*fg(x,y), rho(x)v + eps*fv(x,v), T + eps*t1)
    must satisfy the Hom-Jacobi identity, the representation identity and
    the embedding identity mod eps^2 (the twists are not deformed).
    ``fg`` is a skew 2-cochain on g, ``fv`` a cochain on g x V, ``t1`` a
    matrix; all three must be twist-compatible (:class:`ComplexError`
    otherwise, matching the membership conditions of degree-2 triple
    cochains).  The report carries all three dual-number residual
    families; with ``cross_check`` the eps coefficients are compared
    entry by entry with the components of the degree-2 triple
    differential of (fg, fv, t1), so validity is equivalent to the
    direction being a 2-cocycle.
    """
    rep = t.rep
    alg = rep.algebra
    gs, vs = alg.space, rep.vspace
    _, one = _check_triple_components(t, fg, fv, t1)
    image = (delta_triple(fg, fv, one, t, validate=False)
             if cross_check else None)
    dbr, dact, dten = _deformed_maps(t, fg, fv, t1)
    report = ValidationReport("infinitesimal triple deformation")
    gb, vb = gs.basis(), vs.basis()
    glab, vlab = gs.label, vs.label
    mismatch = False
    for i in range(gs.dim):
        ax = _dmat(gs.twist, dual_vector(gb[i]))
        for j in range(gs.dim):
            ay = _dmat(gs.twist, dual_vector(gb[j]))
            for k in range(gs.dim):
                az = _dmat(gs.twist, dual_vector(gb[k]))
                x, y, z = (dual_vector(gb[i]), dual_vector(gb[j]),
                           dual_vector(gb[k]))
                resid = _dadd(dbr(ax, dbr(y, z)),
                              _dadd(dbr(ay, dbr(z, x)), dbr(az, dbr(x, y))))
                _require_dual(report, "hom_jacobi",
                              (glab(i), glab(j), glab(k)), resid)
                if cross_check and \
                        _parts(resid)[1] != image[0].entry((i, j, k)):
                    mismatch = True
    for i in range(gs.dim):
        x = dual_vector(gb[i])
        ax = _dmat(gs.twist, x)
        for j in range(gs.dim):
            y = dual_vector(gb[j])
            ay = _dmat(gs.twist, y)
            for b in range(vs.dim):
                bv = _dmat(vs.twist, dual_vector(vb[b]))
                v = dual_vector(vb[b])
                resid = _dsub(_dsub(dact(ax, dact(y, v)),
                                    dact(ay, dact(x, v))),
                              dact(dbr(x, y), bv))
                _require_dual(report, "representation_identity",
                              (glab(i), glab(j), vlab(b)), resid)
                if cross_check and \
                        _parts(resid)[1] != image[1].entry((i, j, b)):
                    mismatch = True
    for a in range(vs.dim):
        tu = dten(dual_vector(vb[a]))
        for b in range(vs.dim):
            v = dual_vector(vb[b])
            resid = _dsub(dbr(tu, dten(v)), dten(dact(tu, v)))
            _require_dual(report, "embedding_identity",
                          (vlab(a), vlab(b)), resid)
            if cross_check and _parts(resid)[1] != image[2].entry((a, b)):
                mismatch = True
    if mismatch:
        raise RouteMismatch(
            "triple deformation eps residuals disagree with the "
            "complex differential")
    return report


def classify_h2_hllt(t):
    """Cocycles, coboundaries and H^2 of the triple complex at degree 2.

    Returns ``(h_dim, cocycles, coboundaries)``: ``cocycles`` is a list of
    (fg, fv, t1) component triples spanning the degree-2 kernel (fg and fv
    cochains, t1 a matrix), ``coboundaries`` a list of
    ``((n_mat, s_mat), (fg, fv, t1))`` pairs where the gauge maps (N, S)
    hit the listed triple under the degree-1 differential, and the listed
    triples span the image.  Every cocycle triple passes
    :func:`check_inf_deformation_triple`, and
    ``h_dim == len(cocycles) - len(coboundaries)``.
    """
    hc = TripleComplex(t)
    cocycles = []
    for flat in hc.cocycle_flat(2):
        fg, fv, p = hc.unflatten(2, flat)
        cocycles.append((fg, fv, _map_matrix(p)))
    picked = _independent_images(hc.basis(1), hc.images(1),
                                 lambda image: hc.flatten(2, image))
    coboundaries = []
    for witness, image in picked:
        fgw, fvw, _ = witness
        fg, fv, p = image
        coboundaries.append(((_map_matrix(fgw), _map_matrix(fvw)),
                             (fg, fv, _map_matrix(p))))
    return len(cocycles) - len(coboundaries), cocycles, coboundaries


def check_equivalence_triple(t, d1, d2, n_mat, s_mat):
    """Gauge equivalence of two triple deformations through (N, S).

    ``d1`` and ``d2`` are (fg, fv, t1) component triples as accepted by
    :func:`check_inf_deformation_triple`.  The pair (id_g + eps N,
    id_V + eps S) must commute with the twists (:class:`ComplexError`
    otherwise); the report expands the morphism identities between the two
    deformed triples over the dual numbers.  All identities hold exactly
    when the componentwise difference d1 - d2 is the degree-1 coboundary
    of (N, S) in the triple complex.
    """
    rep = t.rep
    alg = rep.algebra
    gs, vs = alg.space, rep.vspace
    fg1, fv1, t11 = d1
    fg2, fv2, t12 = d2
    _check_triple_components(t, fg1, fv1, t11)
    _check_triple_components(t, fg2, fv2, t12)
    n_mat = [[Q(x) for x in row] for row in n_mat]
    s_mat = [[Q(x) for x in row] for row in s_mat]
    if len(n_mat) != gs.dim or any(len(row) != gs.dim for row in n_mat):
        raise ComplexError(f"N must be {gs.dim}x{gs.dim}")
    if len(s_mat) != vs.dim or any(len(row) != vs.dim for row in s_mat):
        raise ComplexError(f"S must be {vs.dim}x{vs.dim}")
    if la.mat_mul(gs.twist, n_mat) != la.mat_mul(n_mat, gs.twist):
        raise ComplexError("gauge map N must commute with alpha")
    if la.mat_mul(vs.twist, s_mat) != la.mat_mul(s_mat, vs.twist):
        raise ComplexError("gauge map S must commute with beta")

    def phi(x):
        return _dadd(x, _shift(_dmat(n_mat, x)))

    def psi(v):
        return _dadd(v, _shift(_dmat(s_mat, v)))

    br_src, act_src, ten_src = _deformed_maps(t, fg1, fv1, t11)
    br_tgt, act_tgt, ten_tgt = _deformed_maps(t, fg2, fv2, t12)

    report = ValidationReport("triple deformation equivalence")
    gb, vb = gs.basis(), vs.basis()
    glab, vlab = gs.label, vs.label
    for i in range(gs.dim):
        x = dual_vector(gb[i])
        _require_dual(report, "phi_twist", (glab(i),),
                      _dsub(phi(_dmat(gs.twist, x)), _dmat(gs.twist, phi(x))))
        for j in range(gs.dim):
            y = dual_vector(gb[j])
            _require_dual(report, "phi_bracket", (glab(i), glab(j)),
                          _dsub(phi(br_src(x, y)), br_tgt(phi(x), phi(y))))
    for b in range(vs.dim):
        v = dual_vector(vb[b])
        _require_dual(report, "psi_twist", (vlab(b),),
                      _dsub(psi(_dmat(vs.twist, v)), _dmat(vs.twist, psi(v))))
        _require_dual(report, "tensor_link", (vlab(b),),
                      _dsub(phi(ten_src(v)), ten_tgt(psi(v))))
    for i in range(gs.dim):
        x = dual_vector(gb[i])
        for b in range(vs.dim):
            v = dual_vector(vb[b])
            _require_dual(report, "psi_action", (glab(i), vlab(b)),
                          _dsub(psi(act_src(x, v)), act_tgt(phi(x), psi(v))))
    return report


def find_equivalence_witness_triple(t, d1, d2):
    """Gauge maps (N, S) with delta((N, S)) == d1 - d2, or None.

    The components of d1 and d2 must be twist-compatible cochains and
    matrices as in :func:`check_inf_deformation_triple`; the solve runs
    over the degree-1 cochains of the triple complex.
    """
    hc = TripleComplex(t)
    rep = t.rep
    gd, vd = rep.algebra.dim, rep.vspace.dim
    e1 = (d1[0], d1[1], tensor_cochain(EmbeddingTensor(rep, d1[2])))
    e2 = (d2[0], d2[1], tensor_cochain(EmbeddingTensor(rep, d2[2])))
    target = [p - q for p, q in zip(hc.flatten(2, e1), hc.flatten(2, e2))]
    cols = [hc.flatten(2, image) for image in hc.images(1)]
    coeffs = la.solve_columns(cols, target)
    if coeffs is None:
        return None
    n_mat = [[Q(0)] * gd for _ in range(gd)]
    s_mat = [[Q(0)] * vd for _ in range(vd)]
    if coeffs and any(coeffs):
        flats = [hc.flatten(1, b) for b in hc.basis(1)]
        wit_flat = [Q(0)] * len(flats[0])
        for c, flat in zip(coeffs, flats):
            if c:
                wit_flat = [w + c * x for w, x in zip(wit_flat, flat)]
        fgw, fvw, _ = hc.unflatten(1, wit_flat)
        n_mat, s_mat = _map_matrix(fgw), _map_matrix(fvw)
    return n_mat, s_mat


if __name__ == "__main__":
    import doctest

    doctest.testmod()
