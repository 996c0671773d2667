"""Hom-Lie and Hom-Leibniz structures, representations, embedding tensors.

Index conventions, used everywhere in this package:

* bracket tensor ``c[i][j][k]``: ``[e_i, e_j] = sum_k c[i][j][k] e_k``;
* action tensor ``r[i][a][b]``: ``rho(e_i) f_a = sum_b r[i][a][b] f_b``;
* matrices act on column coordinate vectors, ``T[i][a]`` maps basis vector
  ``f_a`` to ``sum_i T[i][a] e_i``.

Validators return a :class:`ValidationReport` listing every violated identity
together with the basis tuple where it fails and the exact residual vector.
An empty violation list means the structure is valid (all residuals are zero;
arithmetic is exact, so there is no tolerance anywhere).
"""

from fractions import Fraction

from . import linalg
from .linalg import (Q, basis_vector, mat_vec, mat_mul, vec_add, vec_sub,
                     vec_scale, is_zero)


class ValidationReport:
    """Outcome of a validator: a list of identity violations with witnesses."""

    def __init__(self, subject):
        self.subject = subject
        self.violations = []
        self.metadata = {}

    def add(self, identity, at, residual):
        self.violations.append({
            "identity": identity,
            "at": tuple(at),
            "residual": list(residual),
        })

    def require(self, identity, at, residual):
        """Record the residual only when it is nonzero."""
        if not is_zero(residual):
            self.add(identity, at, residual)

    @property
    def ok(self):
        return not self.violations

    def __bool__(self):
        return self.ok

    def merged_with(self, other):
        out = ValidationReport(self.subject)
        out.violations = self.violations + other.violations
        out.metadata = {**self.metadata, **other.metadata}
        return out

    def to_dict(self):
        from .linalg import format_rational
        out = {
            "subject": self.subject,
            "status": "valid" if self.ok else "invalid",
        }
        if self.metadata:
            out["metadata"] = dict(self.metadata)
        out["violations"] = [
            {
                "identity": v["identity"],
                "at": list(v["at"]),
                "residual": [format_rational(x) for x in v["residual"]],
            }
            for v in self.violations
        ]
        return out

    def summary(self):
        if self.ok:
            return f"{self.subject}: valid"
        lines = [f"{self.subject}: INVALID ({len(self.violations)} violation(s))"]
        for v in self.violations[:10]:
            from .linalg import format_rational
            res = "(" + ", ".join(format_rational(x) for x in v["residual"]) + ")"
            lines.append(f"  {v['identity']} at {v['at']}: residual {res}")
        if len(self.violations) > 10:
            lines.append(f"  ... and {len(self.violations) - 10} more")
        return "\n".join(lines)

    def __repr__(self):
        status = "ok" if self.ok else f"{len(self.violations)} violations"
        return f"ValidationReport({self.subject}: {status})"


def _label(prefix, i):
    return f"{prefix}{i + 1}"


class HomSpace:
    """A vector space together with a linear twist map (not required invertible)."""

    def __init__(self, dim, twist, prefix="e"):
        if len(twist) != dim or any(len(row) != dim for row in twist):
            raise ValueError(f"twist must be {dim}x{dim}")
        self.dim = dim
        self.twist = [[Q(x) for x in row] for row in twist]
        self.prefix = prefix
        self._powers = {0: linalg.identity(dim), 1: self.twist}

    def twist_vec(self, v):
        return mat_vec(self.twist, v)

    def twist_power(self, k):
        if k not in self._powers:
            self._powers[k] = mat_mul(self.twist, self.twist_power(k - 1))
        return self._powers[k]

    def twist_power_vec(self, k, v):
        return mat_vec(self.twist_power(k), v)

    def basis(self):
        return [basis_vector(self.dim, i) for i in range(self.dim)]

    def label(self, i):
        return _label(self.prefix, i)

    def __repr__(self):
        return f"HomSpace(dim={self.dim})"


def direct_sum_space(a, b, prefix="z"):
    n, m = a.dim, b.dim
    twist = linalg.zeros(n + m, n + m)
    for i in range(n):
        for j in range(n):
            twist[i][j] = a.twist[i][j]
    for i in range(m):
        for j in range(m):
            twist[n + i][n + j] = b.twist[i][j]
    return HomSpace(n + m, twist, prefix=prefix)


class _BracketCarrier:
    """Shared plumbing for Hom-Lie and Hom-Leibniz algebras."""

    def __init__(self, space, bracket):
        n = space.dim
        if len(bracket) != n or any(
                len(plane) != n or any(len(row) != n for row in plane)
                for plane in bracket):
            raise ValueError(f"bracket tensor must be {n}x{n}x{n}")
        self.space = space
        self.bracket = [[[Q(x) for x in row] for row in plane] for plane in bracket]

    @property
    def dim(self):
        return self.space.dim

    def basis_bracket(self, i, j):
        return list(self.bracket[i][j])

    def br(self, u, v):
        n = self.dim
        out = [Q(0)] * n
        for i in range(n):
            if u[i] == 0:
                continue
            for j in range(n):
                if v[j] == 0:
                    continue
                s = u[i] * v[j]
                row = self.bracket[i][j]
                for k in range(n):
                    if row[k] != 0:
                        out[k] += s * row[k]
        return out


class HomLieAlgebra(_BracketCarrier):
    """(g, [.,.], alpha) with skew bracket, multiplicativity and Hom-Jacobi."""

    def __repr__(self):
        return f"HomLieAlgebra(dim={self.dim})"


class HomLeibnizAlgebra(_BracketCarrier):
    """(h, {.,.}, alpha); no skew-symmetry is required of the bracket."""

    def __repr__(self):
        return f"HomLeibnizAlgebra(dim={self.dim})"


class HomLieRep:
    """Representation V of a Hom-Lie algebra: action tensor r[i][a][b]."""

    def __init__(self, algebra, vspace, rho):
        ng, nv = algebra.dim, vspace.dim
        if len(rho) != ng or any(
                len(plane) != nv or any(len(row) != nv for row in plane)
                for plane in rho):
            raise ValueError(f"rho tensor must be {ng}x{nv}x{nv}")
        self.algebra = algebra
        self.vspace = vspace
        self.rho = [[[Q(x) for x in row] for row in plane] for plane in rho]

    def act(self, x, v):
        """rho(x) v for coordinate vectors x in g, v in V."""
        nv = self.vspace.dim
        out = [Q(0)] * nv
        for i in range(self.algebra.dim):
            if x[i] == 0:
                continue
            for a in range(nv):
                if v[a] == 0:
                    continue
                s = x[i] * v[a]
                row = self.rho[i][a]
                for b in range(nv):
                    if row[b] != 0:
                        out[b] += s * row[b]
        return out

    def basis_act(self, i, a):
        return list(self.rho[i][a])

    def __repr__(self):
        return f"HomLieRep(dim g={self.algebra.dim}, dim V={self.vspace.dim})"


class HomLeibnizRep:
    """Bimodule of a Hom-Leibniz algebra with left and right actions.

    rho_l[i][a][b]: rho_L(e_i, f_a) = sum_b rho_l[i][a][b] f_b
    rho_r[a][i][b]: rho_R(f_a, e_i) = sum_b rho_r[a][i][b] f_b
    """

    def __init__(self, algebra, vspace, rho_l, rho_r):
        nh, nv = algebra.dim, vspace.dim
        if len(rho_l) != nh or any(
                len(plane) != nv or any(len(row) != nv for row in plane)
                for plane in rho_l):
            raise ValueError(f"rho_l tensor must be {nh}x{nv}x{nv}")
        if len(rho_r) != nv or any(
                len(plane) != nh or any(len(row) != nv for row in plane)
                for plane in rho_r):
            raise ValueError(f"rho_r tensor must be {nv}x{nh}x{nv}")
        self.algebra = algebra
        self.vspace = vspace
        self.rho_l = [[[Q(x) for x in row] for row in plane] for plane in rho_l]
        self.rho_r = [[[Q(x) for x in row] for row in plane] for plane in rho_r]

    def act_l(self, x, v):
        nv = self.vspace.dim
        out = [Q(0)] * nv
        for i in range(self.algebra.dim):
            if x[i] == 0:
                continue
            for a in range(nv):
                if v[a] == 0:
                    continue
                s = x[i] * v[a]
                row = self.rho_l[i][a]
                for b in range(nv):
                    if row[b] != 0:
                        out[b] += s * row[b]
        return out

    def act_r(self, v, x):
        nv = self.vspace.dim
        out = [Q(0)] * nv
        for a in range(nv):
            if v[a] == 0:
                continue
            for i in range(self.algebra.dim):
                if x[i] == 0:
                    continue
                s = v[a] * x[i]
                row = self.rho_r[a][i]
                for b in range(nv):
                    if row[b] != 0:
                        out[b] += s * row[b]
        return out

    def __repr__(self):
        return f"HomLeibnizRep(dim h={self.algebra.dim}, dim V={self.vspace.dim})"


class EmbeddingTensor:
    """A linear map T: V -> g over a representation; the full triple (g, V, T)."""

    def __init__(self, rep, t):
        ng, nv = rep.algebra.dim, rep.vspace.dim
        if len(t) != ng or any(len(row) != nv for row in t):
            raise ValueError(f"T must be {ng}x{nv}")
        self.rep = rep
        self.t = [[Q(x) for x in row] for row in t]

    @property
    def algebra(self):
        return self.rep.algebra

    @property
    def vspace(self):
        return self.rep.vspace

    def apply(self, v):
        return mat_vec(self.t, v)

    def __repr__(self):
        return (f"EmbeddingTensor(dim g={self.algebra.dim}, "
                f"dim V={self.vspace.dim})")


# ---------------------------------------------------------------------------
# validators


def validate_hom_lie(alg):
    """Skew-symmetry, multiplicativity, Hom-Jacobi on all basis tuples."""
    rep = ValidationReport("hom_lie")
    n = alg.dim
    sp = alg.space
    lab = sp.label
    ebasis = sp.basis()
    for i in range(n):
        for j in range(i, n):
            rep.require("skew_symmetry", (lab(i), lab(j)),
                        vec_add(alg.basis_bracket(i, j), alg.basis_bracket(j, i)))
    for i in range(n):
        for j in range(n):
            lhs = sp.twist_vec(alg.basis_bracket(i, j))
            rhs = alg.br(sp.twist_vec(ebasis[i]), sp.twist_vec(ebasis[j]))
            rep.require("multiplicativity", (lab(i), lab(j)), vec_sub(lhs, rhs))
    for i in range(n):
        for j in range(i, n):
            for k in range(j, n):
                x, y, z = ebasis[i], ebasis[j], ebasis[k]
                res = vec_add(
                    alg.br(sp.twist_vec(x), alg.br(y, z)),
                    alg.br(sp.twist_vec(y), alg.br(z, x)),
                    alg.br(sp.twist_vec(z), alg.br(x, y)),
                )
                rep.require("hom_jacobi", (lab(i), lab(j), lab(k)), res)
    return rep


def validate_hom_leibniz(alg):
    """Multiplicativity and the Hom-Leibniz identity on all basis tuples."""
    rep = ValidationReport("hom_leibniz")
    n = alg.dim
    sp = alg.space
    lab = sp.label
    ebasis = sp.basis()
    for i in range(n):
        for j in range(n):
            lhs = sp.twist_vec(alg.basis_bracket(i, j))
            rhs = alg.br(sp.twist_vec(ebasis[i]), sp.twist_vec(ebasis[j]))
            rep.require("multiplicativity", (lab(i), lab(j)), vec_sub(lhs, rhs))
    for i in range(n):
        for j in range(n):
            for k in range(n):
                x, y, z = ebasis[i], ebasis[j], ebasis[k]
                lhs = alg.br(sp.twist_vec(x), alg.br(y, z))
                rhs = vec_add(alg.br(alg.br(x, y), sp.twist_vec(z)),
                              alg.br(sp.twist_vec(y), alg.br(x, z)))
                rep.require("hom_leibniz", (lab(i), lab(j), lab(k)),
                            vec_sub(lhs, rhs))
    return rep


def validate_representation(r):
    """The two Hom-Lie representation identities on all basis tuples."""
    rep = ValidationReport("representation")
    alg, vsp = r.algebra, r.vspace
    glab, vlab = alg.space.label, vsp.label
    gb, vb = alg.space.basis(), vsp.basis()
    for i in range(alg.dim):
        for a in range(vsp.dim):
            lhs = vsp.twist_vec(r.basis_act(i, a))
            rhs = r.act(alg.space.twist_vec(gb[i]), vsp.twist_vec(vb[a]))
            rep.require("twist_compatibility", (glab(i), vlab(a)),
                        vec_sub(lhs, rhs))
    for i in range(alg.dim):
        for j in range(alg.dim):
            x, y = gb[i], gb[j]
            ax, ay = alg.space.twist_vec(x), alg.space.twist_vec(y)
            for a in range(vsp.dim):
                v = vb[a]
                lhs = vec_sub(r.act(ax, r.act(y, v)), r.act(ay, r.act(x, v)))
                rhs = r.act(alg.br(x, y), vsp.twist_vec(v))
                rep.require("rep_identity", (glab(i), glab(j), vlab(a)),
                            vec_sub(lhs, rhs))
    return rep


def validate_leibniz_rep(r):
    """The five Hom-Leibniz bimodule identities on all basis tuples."""
    rep = ValidationReport("leibniz_representation")
    alg, vsp = r.algebra, r.vspace
    hl, vl = alg.space.label, vsp.label
    hb, vb = alg.space.basis(), vsp.basis()
    al = alg.space.twist_vec
    be = vsp.twist_vec
    for i in range(alg.dim):
        for a in range(vsp.dim):
            x, v = hb[i], vb[a]
            rep.require("beta_rho_l", (hl(i), vl(a)),
                        vec_sub(be(r.act_l(x, v)), r.act_l(al(x), be(v))))
            rep.require("beta_rho_r", (vl(a), hl(i)),
                        vec_sub(be(r.act_r(v, x)), r.act_r(be(v), al(x))))
    for i in range(alg.dim):
        for j in range(alg.dim):
            x, y = hb[i], hb[j]
            for a in range(vsp.dim):
                v = vb[a]
                res = vec_sub(
                    r.act_l(al(x), r.act_l(y, v)),
                    vec_add(r.act_l(alg.br(x, y), be(v)),
                            r.act_l(al(y), r.act_l(x, v))))
                rep.require("rho_l_rho_l", (hl(i), hl(j), vl(a)), res)
                res = vec_sub(
                    r.act_l(al(x), r.act_r(v, y)),
                    vec_add(r.act_r(r.act_l(x, v), al(y)),
                            r.act_r(be(v), alg.br(x, y))))
                rep.require("rho_l_rho_r", (hl(i), vl(a), hl(j)), res)
                res = vec_sub(
                    r.act_r(be(v), alg.br(x, y)),
                    vec_add(r.act_r(r.act_r(v, x), al(y)),
                            r.act_l(al(x), r.act_r(v, y))))
                rep.require("rho_r_bracket", (vl(a), hl(i), hl(j)), res)
    return rep


def validate_embedding_tensor(t):
    """Twist intertwining alpha T = T beta and [Tu,Tv] = T(rho(Tu)v)."""
    rep = ValidationReport("embedding_tensor")
    alg, vsp = t.algebra, t.vspace
    vb = vsp.basis()
    vlab = vsp.label
    for a in range(vsp.dim):
        lhs = alg.space.twist_vec(t.apply(vb[a]))
        rhs = t.apply(vsp.twist_vec(vb[a]))
        rep.require("twist_intertwine", (vlab(a),), vec_sub(lhs, rhs))
    for a in range(vsp.dim):
        for b in range(vsp.dim):
            u, v = vb[a], vb[b]
            lhs = alg.br(t.apply(u), t.apply(v))
            rhs = t.apply(t.rep.act(t.apply(u), v))
            rep.require("embedding_identity", (vlab(a), vlab(b)),
                        vec_sub(lhs, rhs))
    return rep


def validate_triple(t):
    """Validate the whole triple: algebra, representation, tensor."""
    return (validate_hom_lie(t.algebra)
            .merged_with(validate_representation(t.rep))
            .merged_with(validate_embedding_tensor(t)))


def validate_morphism(source, target, phi, psi):
    """The four homomorphism identities between two embedding tensors."""
    rep = ValidationReport("triple_morphism")
    g, g2 = source.algebra, target.algebra
    v, v2 = source.vspace, target.vspace
    if len(phi) != g2.dim or any(len(row) != g.dim for row in phi):
        raise ValueError(f"phi must be {g2.dim}x{g.dim}")
    if len(psi) != v2.dim or any(len(row) != v.dim for row in psi):
        raise ValueError(f"psi must be {v2.dim}x{v.dim}")
    glab, vlab = g.space.label, v.label
    gb, vb = g.space.basis(), v.basis()
    for i in range(g.dim):
        rep.require(
            "phi_twist", (glab(i),),
            vec_sub(mat_vec(phi, g.space.twist_vec(gb[i])),
                    g2.space.twist_vec(mat_vec(phi, gb[i]))))
        for j in range(g.dim):
            lhs = mat_vec(phi, g.basis_bracket(i, j))
            rhs = g2.br(mat_vec(phi, gb[i]), mat_vec(phi, gb[j]))
            rep.require("phi_bracket", (glab(i), glab(j)), vec_sub(lhs, rhs))
    for a in range(v.dim):
        rep.require(
            "psi_twist", (vlab(a),),
            vec_sub(mat_vec(psi, v.twist_vec(vb[a])),
                    v2.twist_vec(mat_vec(psi, vb[a]))))
        rep.require(
            "tensor_square", (vlab(a),),
            vec_sub(mat_vec(phi, source.apply(vb[a])),
                    target.apply(mat_vec(psi, vb[a]))))
    for i in range(g.dim):
        for a in range(v.dim):
            lhs = mat_vec(psi, source.rep.act(gb[i], vb[a]))
            rhs = target.rep.act(mat_vec(phi, gb[i]), mat_vec(psi, vb[a]))
            rep.require("psi_action", (glab(i), vlab(a)), vec_sub(lhs, rhs))
    return rep


# ---------------------------------------------------------------------------
# constructions


def adjoint_rep(alg):
    """g acting on itself by rho(x) y = [x, y], module twist alpha."""
    return HomLieRep(alg, alg.space, alg.bracket)


def adjoint_leibniz_rep(alg):
    """A Hom-Leibniz algebra as a bimodule over itself via its own bracket."""
    nh = alg.dim
    rho_r = [[list(alg.bracket[a][i]) for i in range(nh)] for a in range(nh)]
    return HomLeibnizRep(alg, alg.space, alg.bracket, rho_r)


def direct_sum_rep(alg, copies):
    """The n-fold direct sum of the adjoint representation."""
    ng = alg.dim
    nv = copies * ng
    twist = linalg.zeros(nv, nv)
    for k in range(copies):
        for a in range(ng):
            for b in range(ng):
                twist[k * ng + a][k * ng + b] = alg.space.twist[a][b]
    vsp = HomSpace(nv, twist, prefix="f")
    rho = [[[Q(0)] * nv for _ in range(nv)] for _ in range(ng)]
    for i in range(ng):
        for k in range(copies):
            for a in range(ng):
                for b in range(ng):
                    rho[i][k * ng + a][k * ng + b] = alg.bracket[i][a][b]
    return HomLieRep(alg, vsp, rho)


def sum_map_tensor(rep, copies):
    """T(x_1, ..., x_n) = x_1 + ... + x_n on the n-fold direct sum."""
    ng = rep.algebra.dim
    t = linalg.zeros(ng, copies * ng)
    for k in range(copies):
        for a in range(ng):
            t[a][k * ng + a] = Q(1)
    return EmbeddingTensor(rep, t)


def projection_tensor(rep, copies, which):
    """T(x_1, ..., x_n) = x_which (0-based) on the n-fold direct sum."""
    ng = rep.algebra.dim
    t = linalg.zeros(ng, copies * ng)
    for a in range(ng):
        t[a][which * ng + a] = Q(1)
    return EmbeddingTensor(rep, t)


def identity_tensor(alg):
    """The identity map as a tensor over the adjoint representation."""
    return EmbeddingTensor(adjoint_rep(alg), linalg.identity(alg.dim))


def yau_twist(bracket, alpha, prefix="e"):
    """Twist a Lie bracket by an endomorphism: new bracket = alpha o [.,.]."""
    n = len(bracket)
    sp = HomSpace(n, alpha, prefix=prefix)
    twisted = [[mat_vec(alpha, bracket[i][j]) for j in range(n)]
               for i in range(n)]
    return HomLieAlgebra(sp, twisted)


def yau_twist_leibniz(bracket, alpha, prefix="e"):
    """Twist a Leibniz bracket by an endomorphism of it."""
    n = len(bracket)
    sp = HomSpace(n, alpha, prefix=prefix)
    twisted = [[mat_vec(alpha, bracket[i][j]) for j in range(n)]
               for i in range(n)]
    return HomLeibnizAlgebra(sp, twisted)


def hemi_semidirect(rep):
    """Hom-Leibniz bracket {(x,u),(y,v)} = ([x,y], rho(x)v) on g + V."""
    alg, vsp = rep.algebra, rep.vspace
    ng, nv = alg.dim, vsp.dim
    n = ng + nv
    sp = direct_sum_space(alg.space, vsp, prefix="z")
    c = [[[Q(0)] * n for _ in range(n)] for _ in range(n)]
    for i in range(ng):
        for j in range(ng):
            for k in range(ng):
                c[i][j][k] = alg.bracket[i][j][k]
    for i in range(ng):
        for a in range(nv):
            for b in range(nv):
                c[i][ng + a][ng + b] = rep.rho[i][a][b]
    return HomLeibnizAlgebra(sp, c)


def induced_hom_leibniz(t):
    """The bracket {u, v} = rho(Tu) v on V with twist beta."""
    vsp = t.vspace
    nv = vsp.dim
    vb = vsp.basis()
    c = [[t.rep.act(t.apply(vb[a]), vb[b]) for b in range(nv)]
         for a in range(nv)]
    return HomLeibnizAlgebra(HomSpace(nv, vsp.twist, prefix="f"), c)


def induced_leibniz_rep(t, induced=None):
    """g as a bimodule over the induced Hom-Leibniz algebra on V.

    rho_L(u, x) = [Tu, x] and rho_R(x, u) = [x, Tu] - T(rho(x) u).
    """
    if induced is None:
        induced = induced_hom_leibniz(t)
    alg, vsp = t.algebra, t.vspace
    ng, nv = alg.dim, vsp.dim
    gb, vb = alg.space.basis(), vsp.basis()
    rho_l = [[alg.br(t.apply(vb[a]), gb[i]) for i in range(ng)]
             for a in range(nv)]
    rho_r = [[vec_sub(alg.br(gb[i], t.apply(vb[a])),
                      t.apply(t.rep.act(gb[i], vb[a])))
              for a in range(nv)] for i in range(ng)]
    gspace = HomSpace(ng, alg.space.twist, prefix="e")
    return HomLeibnizRep(induced, gspace, rho_l, rho_r)


class IllDefinedStructure(ValueError):
    """An induced map failed its well-definedness check; carries a witness."""

    def __init__(self, message, witness):
        super().__init__(message)
        self.witness = witness


class QuotientTriple:
    """Result of quotienting a Hom-Leibniz algebra by its bracket ideal."""

    def __init__(self, tensor, ideal, section_columns, projection):
        self.tensor = tensor
        self.ideal = ideal
        self.section_columns = section_columns
        self.projection = projection

    @property
    def algebra(self):
        return self.tensor.algebra

    @property
    def rep(self):
        return self.tensor.rep


def bracket_ideal(h):
    """Smallest subspace containing all brackets, closed under bracketing
    with h on either side and under the twist."""
    n = h.dim
    vectors = [h.basis_bracket(i, j) for i in range(n) for j in range(n)]
    space = linalg.Subspace(n, vectors)
    while True:
        extra = []
        eb = h.space.basis()
        for v in space.basis:
            extra.append(h.space.twist_vec(v))
            for i in range(n):
                extra.append(h.br(eb[i], v))
                extra.append(h.br(v, eb[i]))
        grown = linalg.Subspace(n, list(space.basis) + extra)
        if grown.dim == space.dim:
            return grown
        space = grown


def quotient_triple(h):
    """Quotient a Hom-Leibniz algebra into a Hom-Lie-Leibniz triple.

    Returns a :class:`QuotientTriple` whose tensor is the quotient map
    q: h -> h/I over the representation rho(<x>)(y) = {x, y} on carrier h.
    Raises :class:`IllDefinedStructure` when an induced map does not descend
    to the quotient (possible when the twist is not surjective).
    """
    n = h.dim
    ideal = bracket_ideal(h)
    pivots = ideal._pivots
    free = [c for c in range(n) if c not in pivots]
    qdim = len(free)

    def project(v):
        v = list(v)
        for row, p in zip(ideal.basis, pivots):
            if v[p] != 0:
                f = v[p]
                v = [x - f * y for x, y in zip(v, row)]
        return [v[c] for c in free]

    # Well-definedness of the induced action: ideal elements must act as
    # zero on the left, since classes only remember x modulo I.
    eb = h.space.basis()
    for v in ideal.basis:
        for j in range(n):
            image = h.br(v, eb[j])
            if not is_zero(image):
                raise IllDefinedStructure(
                    "ill-defined induced structure: an ideal element acts "
                    "nontrivially on the left",
                    {"ideal_element": v, "argument": h.space.label(j),
                     "image": image})

    quotient_twist = [project(h.space.twist_vec(eb[c])) for c in free]
    quotient_twist = [list(col) for col in zip(*quotient_twist)] \
        if quotient_twist else []
    qspace = HomSpace(qdim, quotient_twist, prefix="q")
    qbracket = [[project(h.br(eb[p], eb[q])) for q in free] for p in free]
    qalg = HomLieAlgebra(qspace, qbracket)

    carrier = HomSpace(n, h.space.twist, prefix="e")
    rho = [[h.br(eb[p], eb[a]) for a in range(n)] for p in free]
    rep = HomLieRep(qalg, carrier, rho)

    tmat = [[Q(0)] * n for _ in range(qdim)]
    for a in range(n):
        col = project(eb[a])
        for i in range(qdim):
            tmat[i][a] = col[i]
    tensor = EmbeddingTensor(rep, tmat)
    return QuotientTriple(tensor, ideal, free, project)


def graph_subspace_report(t):
    """Check that the graph {(T(u), u)} is a subalgebra of the
    hemi-semidirect product: closed under the twist and the bracket."""
    rep = ValidationReport("graph_subalgebra")
    alg, vsp = t.algebra, t.vspace
    ng, nv = alg.dim, vsp.dim
    hemi = hemi_semidirect(t.rep)
    graph = linalg.Subspace(
        ng + nv,
        [t.apply(v) + v for v in vsp.basis()])
    for a in range(nv):
        u = vsp.basis()[a]
        gu = t.apply(u) + u
        tw = hemi.space.twist_vec(gu)
        if not graph.contains(tw):
            rep.add("graph_twist_closure", (vsp.label(a),), tw)
        for b in range(nv):
            v = vsp.basis()[b]
            gv = t.apply(v) + v
            br = hemi.br(gu, gv)
            if not graph.contains(br):
                rep.add("graph_bracket_closure", (vsp.label(a), vsp.label(b)), br)
    return rep
