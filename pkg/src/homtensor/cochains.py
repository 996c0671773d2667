"""Multilinear cochains, the Balavoine bracket, and derived brackets.

A :class:`Cochain` is a dense multilinear map whose slots may live in
different Hom-spaces (needed for mixed cochains like Hom(g^{n-1} x V, V)).
The Balavoine bracket is defined on cochains whose slots and output all live
in one space.  Shuffle conventions: a (p, q)-shuffle is a permutation that is
ascending on the first p positions and on the last q positions; its sign is
the ordinary permutation sign.

The derived bracket of two cochains P in C^m(V, g), Q in C^n(V, g) over a
representation is computed two independent ways:

* by definition, as the nested Balavoine bracket (-1)^{m-1} [[pi, P], Q]
  on the direct sum g + V restricted back to pure V-inputs with g-output;
* by the expanded shuffle-sum formula.

``derived_bracket(..., cross_check=True)`` evaluates both and raises
:class:`RouteMismatch` if they ever disagree.
"""

from fractions import Fraction
from itertools import combinations, product

from . import linalg, structures
from .linalg import Q, mat_vec, vec_add, vec_scale, is_zero
from .structures import HomSpace, direct_sum_space


class RouteMismatch(ArithmeticError):
    """Two supposedly equal computation routes returned different values."""


class Cochain:
    """Dense multilinear map sources[0] x ... x sources[k-1] -> target."""

    def __init__(self, sources, target, table=None):
        self.sources = list(sources)
        self.target = target
        self.arity = len(self.sources)
        size = 1
        for s in self.sources:
            size *= s.dim
        self.size = size
        if table is None:
            table = [[Q(0)] * target.dim for _ in range(size)]
        if len(table) != size:
            raise ValueError(f"table must have {size} entries")
        self.table = table

    @classmethod
    def from_function(cls, sources, target, fn):
        """Build from a function on basis index tuples returning vectors."""
        out = cls(sources, target)
        dims = [s.dim for s in sources]
        for flat, multi in enumerate(product(*[range(d) for d in dims])):
            v = fn(*multi)
            if len(v) != target.dim:
                raise ValueError("function returned a vector of wrong length")
            out.table[flat] = [Q(x) for x in v]
        return out

    def _flat(self, multi):
        flat = 0
        for s, i in zip(self.sources, multi):
            flat = flat * s.dim + i
        return flat

    def entry(self, multi):
        return self.table[self._flat(multi)]

    def set_entry(self, multi, vec):
        self.table[self._flat(multi)] = [Q(x) for x in vec]

    def apply(self, vectors):
        """Multilinear evaluation on coordinate vectors."""
        if len(vectors) != self.arity:
            raise ValueError(f"expected {self.arity} arguments")
        out = [Q(0)] * self.target.dim
        supports = []
        for s, v in zip(self.sources, vectors):
            if len(v) != s.dim:
                raise ValueError("argument does not live in the slot's space")
            sup = [(i, x) for i, x in enumerate(v) if x != 0]
            if not sup:
                return out
            supports.append(sup)
        for choice in product(*supports):
            coeff = Q(1)
            for _, x in choice:
                coeff *= x
            row = self.entry(tuple(i for i, _ in choice))
            for k in range(self.target.dim):
                if row[k] != 0:
                    out[k] += coeff * row[k]
        return out

    def add(self, other):
        self._compatible(other)
        return Cochain(self.sources, self.target,
                       [vec_add(a, b) for a, b in zip(self.table, other.table)])

    def sub(self, other):
        self._compatible(other)
        return Cochain(self.sources, self.target,
                       [[x - y for x, y in zip(a, b)]
                        for a, b in zip(self.table, other.table)])

    def scale(self, s):
        s = Q(s)
        return Cochain(self.sources, self.target,
                       [vec_scale(s, row) for row in self.table])

    def is_zero(self):
        return all(is_zero(row) for row in self.table)

    def equals(self, other):
        self._compatible(other)
        return self.table == other.table

    def flatten(self):
        """All coefficients as one vector (input-major, output-minor)."""
        return [x for row in self.table for x in row]

    def _compatible(self, other):
        if [s.dim for s in self.sources] != [s.dim for s in other.sources] \
                or self.target.dim != other.target.dim:
            raise ValueError("cochain shapes differ")

    def twist_residual(self):
        """First failure of twist-compatibility, or None.

        Compatibility means target.twist(f(e_{i1},...,e_{ik})) equals
        f(twist e_{i1}, ..., twist e_{ik}) for all basis tuples.
        """
        dims = [s.dim for s in self.sources]
        columns = [[[m[r][i] for r in range(len(m))] for i in range(s.dim)]
                   for s, m in ((s, s.twist) for s in self.sources)]
        for multi in product(*[range(d) for d in dims]):
            lhs = self.target.twist_vec(self.entry(multi))
            rhs = self.apply([cols[i] for cols, i in zip(columns, multi)])
            diff = [x - y for x, y in zip(lhs, rhs)]
            if not is_zero(diff):
                return multi, diff
        return None

    def __repr__(self):
        dims = "x".join(str(s.dim) for s in self.sources)
        return f"Cochain({dims} -> {self.target.dim})"


def zero_cochain(sources, target):
    return Cochain(sources, target)


def shuffles(p, q):
    """All (p, q)-shuffles of {0, ..., p+q-1} as (images, sign) pairs.

    The returned tuple lists the source index placed at each position: the
    first p positions carry an ascending subset, the remaining q positions
    the ascending complement.

    >>> shuffles(1, 1)
    [((0, 1), 1), ((1, 0), -1)]
    """
    n = p + q
    out = []
    for first in combinations(range(n), p):
        second = tuple(i for i in range(n) if i not in first)
        inversions = 0
        for a in first:
            inversions += sum(1 for b in second if b < a)
        out.append((first + second, -1 if inversions % 2 else 1))
    return out


def _require_endo_cochain(c):
    for s in c.sources:
        if s is not c.target and s.dim != c.target.dim:
            raise ValueError("Balavoine operations need slots and output in one space")


def diamond(p, q):
    """Balavoine circle product of same-space cochains.

    (p <> q)(x_1..x_{m+n-1}) inserts q at each position i with the leading
    arguments shuffled, q's final argument left in place, and all spectator
    arguments hit by twist^{n-1}.
    """
    _require_endo_cochain(p)
    _require_endo_cochain(q)
    space = p.target
    m, n = p.arity, q.arity
    if n < 1 or m < 1:
        raise ValueError("diamond needs arities >= 1")
    out_arity = m + n - 1
    d = space.dim
    tw = space.twist_power(n - 1)
    tw_cols = [[tw[r][j] for r in range(d)] for j in range(d)]

    def value(*multi):
        acc = [Q(0)] * d
        for i in range(1, m + 1):
            for images, sign in shuffles(i - 1, n - 1):
                shuffled = [multi[images[t]] for t in range(i + n - 2)]
                q_args = [linalg.basis_vector(d, j) for j in shuffled[i - 1:]]
                q_args.append(linalg.basis_vector(d, multi[i + n - 2]))
                q_out = q.apply(q_args)
                p_args = [tw_cols[j] for j in shuffled[:i - 1]]
                p_args.append(q_out)
                p_args.extend(tw_cols[multi[t]] for t in range(i + n - 1, out_arity))
                term = p.apply(p_args)
                s = sign if (i - 1) * (n - 1) % 2 == 0 else -sign
                for k in range(d):
                    if term[k] != 0:
                        acc[k] += s * term[k]
        return acc

    return Cochain.from_function([space] * out_arity, space, value)


def balavoine_bracket(p, q):
    """[p, q] = p <> q - (-1)^{(m-1)(n-1)} q <> p."""
    m, n = p.arity, q.arity
    first = diamond(p, q)
    second = diamond(q, p)
    sign = -1 if (m - 1) * (n - 1) % 2 else 1
    return first.sub(second.scale(sign))


def hemi_space(rep):
    """The Hom-space g + V carrying the hemi-semidirect structures."""
    return direct_sum_space(rep.algebra.space, rep.vspace, prefix="z")


def make_pi(rep, hspace=None):
    """The 2-cochain pi((x,u),(y,v)) = ([x,y], rho(x)v) on g + V."""
    if hspace is None:
        hspace = hemi_space(rep)
    ng = rep.algebra.dim
    nv = rep.vspace.dim

    def value(i, j):
        out = [Q(0)] * (ng + nv)
        if i < ng and j < ng:
            br = rep.algebra.basis_bracket(i, j)
            for k in range(ng):
                out[k] = br[k]
        elif i < ng and j >= ng:
            act = rep.basis_act(i, j - ng)
            for b in range(nv):
                out[ng + b] = act[b]
        return out

    return Cochain.from_function([hspace] * 2, hspace, value)


def embed_v_to_g(f, rep, hspace=None):
    """Include a cochain V^{x m} -> g into cochains on g + V (zero elsewhere)."""
    if hspace is None:
        hspace = hemi_space(rep)
    ng = rep.algebra.dim
    nv = rep.vspace.dim

    def value(*multi):
        out = [Q(0)] * (ng + nv)
        if all(i >= ng for i in multi):
            inner = f.entry(tuple(i - ng for i in multi))
            for k in range(ng):
                out[k] = inner[k]
        return out

    return Cochain.from_function([hspace] * f.arity, hspace, value)


def restrict_v_to_g(big, rep):
    """Extract the pure V-inputs, g-output block of a cochain on g + V."""
    ng = rep.algebra.dim
    vsp = rep.vspace
    gsp = rep.algebra.space

    def value(*multi):
        return big.entry(tuple(ng + a for a in multi))[:ng]

    return Cochain.from_function([vsp] * big.arity, gsp, value)


def tensor_cochain(t):
    """An embedding-tensor style map T: V -> g as a 1-cochain."""
    vsp = t.rep.vspace
    gsp = t.rep.algebra.space
    return Cochain.from_function(
        [vsp], gsp, lambda a: [t.t[i][a] for i in range(gsp.dim)])


def derived_bracket_nested(p, q, rep, pi=None, hspace=None):
    """<<P, Q>> = (-1)^{m-1} [[pi, P], Q] restricted back to C^{m+n}(V, g)."""
    if hspace is None:
        hspace = hemi_space(rep)
    if pi is None:
        pi = make_pi(rep, hspace)
    bigp = embed_v_to_g(p, rep, hspace)
    bigq = embed_v_to_g(q, rep, hspace)
    nested = balavoine_bracket(balavoine_bracket(pi, bigp), bigq)
    sign = -1 if (p.arity - 1) % 2 else 1
    return restrict_v_to_g(nested, rep).scale(sign)


def derived_bracket_expanded(p, q, rep):
    """The expanded shuffle-sum form of the derived bracket."""
    vsp = rep.vspace
    gsp = rep.algebra.space
    m, n = p.arity, q.arity
    d = vsp.dim

    def beta_cols(power):
        tw = vsp.twist_power(power)
        return [[tw[r][j] for r in range(d)] for j in range(d)]

    bn = beta_cols(n)
    bn1 = beta_cols(n - 1)
    bm = beta_cols(m)
    bm1 = beta_cols(m - 1)
    shufs_first = [(i, list(shuffles(i - 1, n))) for i in range(1, m + 1)]
    shufs_second = [(i, list(shuffles(i - 1, m))) for i in range(1, n + 1)]
    shufs_bracket = list(shuffles(m, n))

    def value(*multi):
        acc = [Q(0)] * gsp.dim
        # First family: Q-output acts through rho into one slot of P.
        for i, shufs in shufs_first:
            for images, sign in shufs:
                shuffled = [multi[images[t]] for t in range(i - 1 + n)]
                q_out = q.entry(tuple(shuffled[i - 1:]))
                acted = rep.act(q_out, bn1[multi[i + n - 1]])
                p_args = [bn[j] for j in shuffled[:i - 1]]
                p_args.append(acted)
                p_args.extend(bn[multi[t]] for t in range(i + n, m + n))
                term = p.apply(p_args)
                s = -sign if (i - 1) * n % 2 == 0 else sign
                for k in range(gsp.dim):
                    acc[k] += s * term[k]
        # Second family: same with P and Q exchanged, global sign -(-1)^{mn}.
        outer = -1 if (m * n) % 2 == 0 else 1
        for i, shufs in shufs_second:
            for images, sign in shufs:
                shuffled = [multi[images[t]] for t in range(i - 1 + m)]
                p_out = p.entry(tuple(shuffled[i - 1:]))
                acted = rep.act(p_out, bm1[multi[i + m - 1]])
                q_args = [bm[j] for j in shuffled[:i - 1]]
                q_args.append(acted)
                q_args.extend(bm[multi[t]] for t in range(i + m, m + n))
                term = q.apply(q_args)
                s = -sign if (i - 1) * m % 2 == 0 else sign
                s *= outer
                for k in range(gsp.dim):
                    acc[k] += s * term[k]
        # Bracket family: [P(...), Q(...)] over (m, n)-shuffles.
        for images, sign in shufs_bracket:
            p_out = p.apply([bn1[multi[images[t]]] for t in range(m)])
            q_out = q.apply([bm1[multi[images[t]]] for t in range(m, m + n)])
            br = rep.algebra.br(p_out, q_out)
            s = -sign if (m * n) % 2 == 0 else sign
            for k in range(gsp.dim):
                acc[k] += s * br[k]
        return acc

    return Cochain.from_function([vsp] * (m + n), gsp, value)


def derived_bracket(p, q, rep, cross_check=False, pi=None, hspace=None):
    """Derived bracket of P, Q in C(V, g); optionally verify both routes."""
    nested = derived_bracket_nested(p, q, rep, pi=pi, hspace=hspace)
    if cross_check:
        expanded = derived_bracket_expanded(p, q, rep)
        if not nested.equals(expanded):
            raise RouteMismatch(
                "derived bracket: nested Balavoine route and expanded "
                "shuffle-sum route disagree")
    return nested


def phi_map(f, rep):
    """Phi_n(f)(v_1..v_{n+1}) = -rho(f(v_1..v_n))(beta^{n-1} v_{n+1})."""
    vsp = rep.vspace
    n = f.arity
    d = vsp.dim
    tw = vsp.twist_power(n - 1)
    tw_cols = [[tw[r][j] for r in range(d)] for j in range(d)]

    def value(*multi):
        f_out = f.entry(multi[:n])
        acted = rep.act(f_out, tw_cols[multi[n]])
        return [-x for x in acted]

    return Cochain.from_function([vsp] * (n + 1), vsp, value)
