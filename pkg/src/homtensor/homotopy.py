"""Truncated strongly homotopy layer over the exact cochain engines.

Graded spaces carry a finite degree window with a degree-preserving twist;
structure operations are arity-indexed families of graded multilinear maps
stored up to an explicit arity cap.  This module provides the graded
Balavoine bracket, validators for strongly homotopy Hom-Lie and Hom-Leibniz
structures and their representations, the hemi-semidirect sum, a generic
derived-bracket construction of L-infinity operations from projection data,
Maurer-Cartan checks (for bracket/action/tensor triples and for homotopy
embedding tensors), twisting by Maurer-Cartan elements, and the induced
strongly homotopy Leibniz structure on the module of a homotopy embedding
tensor.

Truncation is explicit: sums over arities beyond the cap are dropped and the
drop is flagged on the result (``truncated``) and in report metadata; series
iterate until the increment vanishes exactly, and hitting the iteration cap
raises :class:`~homtensor.complexes.ComplexError` instead of silently
truncating.

Degree conventions.  A family of maps has one raw degree ``r``: an arity-k
component sends an input tuple of total internal degree ``d`` to a vector of
degree ``d + r``.  Structure operations (brackets, actions) have raw degree
1; embedding-tensor candidates have raw degree 0.  An ungraded arity-m
cochain corresponds to a degree -1 concentrated component of raw degree
m - 1, and under that encoding the graded operations here restrict exactly
to their ungraded counterparts in the cochain and complex modules.

Sign conventions.  :func:`koszul_sign` is the pure Koszul sign (a factor -1
per inversion of two odd-degree arguments); :func:`perm_sign` is the plain
permutation sign; each formula documents which one it uses.  The graded
circle product inserts an arity-l factor of raw degree r at position i with
the prefix sign (-1)**(r * (sum of the degrees shuffled in front)) times the
Koszul sign of the shuffle, and twists spectator arguments by the (l-1)-th
power of the degreewise twist.  On a degree -1 carrier both conventions
collapse to the plain shuffle signs of the ungraded bracket.
"""

from fractions import Fraction as Q
from itertools import combinations_with_replacement, permutations, product
from math import factorial

from . import linalg as la
from .cochains import (
    Cochain,
    RouteMismatch,
    balavoine_bracket,
    shuffles,
    tensor_cochain,
    zero_cochain,
)
from .complexes import ComplexError, DEFAULT_ITER_CAP
from .structures import ValidationReport

DEFAULT_ARITY_CAP = 4


# ---------------------------------------------------------------------------
# signs
# ---------------------------------------------------------------------------

def koszul_sign(degrees, images):
    """Pure Koszul sign of the rearrangement x_{images[0]}, x_{images[1]}, ...

    ``degrees[s]`` is the internal degree of the source argument ``x_s``;
    ``images`` lists the source index placed at each position.  Every
    inversion of two odd-degree arguments contributes a factor -1; the plain
    permutation sign is NOT included.

    >>> koszul_sign([1, 1], (1, 0))
    -1
    >>> koszul_sign([0, 1], (1, 0))
    1
    """
    sign = 1
    for t in range(len(images)):
        dt = degrees[images[t]]
        if dt % 2 == 0:
            continue
        for u in range(t + 1, len(images)):
            if images[t] > images[u] and degrees[images[u]] % 2:
                sign = -sign
    return sign


def perm_sign(images):
    """Plain permutation sign (-1)**inversions.

    >>> perm_sign((2, 0, 1))
    1
    """
    sign = 1
    for t in range(len(images)):
        for u in range(t + 1, len(images)):
            if images[t] > images[u]:
                sign = -sign
    return sign


# ---------------------------------------------------------------------------
# graded spaces and bundles
# ---------------------------------------------------------------------------

class GradedSpace:
    """Finite graded vector space over Q with a degree-preserving twist.

    ``dims`` maps degree -> dimension; the space is zero at every other
    degree.  ``twists`` maps degree -> square matrix over the rationals
    (identity when omitted).

    >>> s = GradedSpace({-1: 2, 0: 1})
    >>> s.window
    (-1, 0)
    >>> s.dim(-1), s.dim(5)
    (2, 0)
    """

    def __init__(self, dims, twists=None, prefix="x"):
        self.dims = {}
        for d, n in dims.items():
            d, n = int(d), int(n)
            if n < 0:
                raise ValueError("dimensions must be nonnegative")
            if n:
                self.dims[d] = n
        if not self.dims:
            raise ValueError("a graded space needs at least one nonzero degree")
        self.degrees = tuple(sorted(self.dims))
        self.prefix = prefix
        self.twists = {}
        twists = twists or {}
        for d, m in twists.items():
            d = int(d)
            if d not in self.dims:
                raise ValueError(f"twist given for degree {d} of dimension zero")
            n = self.dims[d]
            m = [[Q(x) for x in row] for row in m]
            if len(m) != n or any(len(row) != n for row in m):
                raise ValueError(f"twist block at degree {d} has the wrong shape")
            self.twists[d] = m
        for d in self.degrees:
            self.twists.setdefault(d, la.identity(self.dims[d]))
        self._powers = {}

    @property
    def window(self):
        return (self.degrees[0], self.degrees[-1])

    def dim(self, d):
        return self.dims.get(d, 0)

    def twist(self, d):
        return self.twists.get(d, [])

    def twist_power(self, d, k):
        if k < 0:
            raise ValueError("twist powers need a nonnegative exponent")
        n = self.dim(d)
        if n == 0:
            return []
        key = (d, k)
        if key not in self._powers:
            m = la.identity(n)
            base = self.twists[d]
            for _ in range(k):
                m = la.mat_mul(base, m)
            self._powers[key] = m
        return self._powers[key]

    def twist_vec(self, d, v):
        return la.mat_vec(self.twist(d), v)

    def basis(self, d):
        return [la.basis_vector(self.dim(d), i) for i in range(self.dim(d))]

    def label(self, d, i):
        return f"{self.prefix}[{d}]{i + 1}"

    def same(self, other):
        return self.dims == other.dims and self.twists == other.twists

    def __repr__(self):
        parts = ", ".join(f"{d}: {n}" for d, n in sorted(self.dims.items()))
        return f"GradedSpace({{{parts}}})"


class GradedCochainBundle:
    """Arity-indexed family of graded multilinear maps of one raw degree.

    Entries are stored sparsely as ``ops[arity][profile][multi] -> vector``,
    with ``profile`` the tuple of input degrees, ``multi`` the tuple of basis
    indices, and the vector living in degree ``sum(profile) + degree``.
    Arities above ``cap`` cannot be stored; constructions that would have
    produced them set ``truncated`` instead.
    """

    def __init__(self, space, degree, cap=DEFAULT_ARITY_CAP, truncated=False):
        if cap < 1:
            raise ValueError("the arity cap must be at least 1")
        self.space = space
        self.degree = int(degree)
        self.cap = int(cap)
        self.truncated = bool(truncated)
        self.ops = {}

    def out_degree(self, profile):
        return sum(profile) + self.degree

    def out_dim(self, profile):
        return self.space.dim(self.out_degree(profile))

    def _check_slot(self, profile, multi):
        if len(profile) != len(multi):
            raise ValueError("profile and index tuple lengths differ")
        if not 1 <= len(profile) <= self.cap:
            raise ValueError(f"arity must lie in 1..{self.cap}")
        for d, i in zip(profile, multi):
            if not 0 <= i < self.space.dim(d):
                raise ValueError(f"index {i} out of range at degree {d}")

    def set_entry(self, profile, multi, vec):
        profile, multi = tuple(profile), tuple(multi)
        self._check_slot(profile, multi)
        outdim = self.out_dim(profile)
        vec = [Q(x) for x in vec]
        if len(vec) != outdim:
            raise ValueError("value vector has the wrong length")
        k = len(profile)
        table = self.ops.setdefault(k, {}).setdefault(profile, {})
        if any(vec):
            table[multi] = vec
        else:
            table.pop(multi, None)

    def entry(self, profile, multi):
        profile, multi = tuple(profile), tuple(multi)
        stored = self.ops.get(len(profile), {}).get(profile, {}).get(multi)
        if stored is not None:
            return list(stored)
        return [Q(0)] * self.out_dim(profile)

    def arities(self):
        return tuple(sorted(k for k, tabs in self.ops.items()
                            if any(tab for tab in tabs.values())))

    def items(self):
        """All stored (profile, multi, vector) entries, deterministic order."""
        for k in sorted(self.ops):
            for profile in sorted(self.ops[k]):
                table = self.ops[k][profile]
                for multi in sorted(table):
                    yield profile, multi, list(table[multi])

    def apply(self, args):
        """Evaluate the arity-len(args) component on homogeneous vectors.

        ``args`` is a list of (degree, coordinate vector) pairs; the result
        is the pair (output degree, vector), with a length-zero vector when
        the output degree falls outside the window.
        """
        if not args:
            raise ValueError("apply needs at least one argument")
        profile = tuple(d for d, _ in args)
        for d, v in args:
            if len(v) != self.space.dim(d):
                raise ValueError("argument vector does not match its degree")
        outdeg = self.out_degree(profile)
        out = [Q(0)] * self.space.dim(outdeg)
        table = self.ops.get(len(args), {}).get(profile)
        if not table or not out:
            return outdeg, out
        for multi, vec in table.items():
            coeff = Q(1)
            for (_, v), i in zip(args, multi):
                coeff *= v[i]
                if coeff == 0:
                    break
            if coeff == 0:
                continue
            for r, x in enumerate(vec):
                if x:
                    out[r] += coeff * x
        return outdeg, out

    def _compatible(self, other):
        if not self.space.same(other.space):
            raise ValueError("bundles live on different carriers")
        if self.degree != other.degree:
            raise ValueError("bundles have different raw degrees")

    def add(self, other):
        self._compatible(other)
        out = GradedCochainBundle(self.space, self.degree,
                                  cap=min(self.cap, other.cap),
                                  truncated=self.truncated or other.truncated)
        for src in (self, other):
            for profile, multi, vec in src.items():
                cur = out.entry(profile, multi)
                out.set_entry(profile, multi, la.vec_add(cur, vec))
        return out

    def sub(self, other):
        return self.add(other.scale(Q(-1)))

    def scale(self, s):
        s = Q(s)
        out = GradedCochainBundle(self.space, self.degree, cap=self.cap,
                                  truncated=self.truncated)
        for profile, multi, vec in self.items():
            out.set_entry(profile, multi, la.vec_scale(s, vec))
        return out

    def is_zero(self):
        return not any(True for _ in self.items())

    def equals(self, other):
        return self.sub(other).is_zero()

    @classmethod
    def from_function(cls, space, degree, arities, fn, cap=DEFAULT_ARITY_CAP):
        """Fill components from ``fn(profile, multi) -> vector``."""
        out = cls(space, degree, cap=cap)
        for k in arities:
            for profile in product(space.degrees, repeat=k):
                outdim = out.out_dim(profile)
                if outdim == 0:
                    continue
                for multi in product(*[range(space.dim(d)) for d in profile]):
                    out.set_entry(profile, multi, fn(profile, multi))
        return out

    @classmethod
    def from_symmetric_function(cls, space, degree, arities, fn,
                                cap=DEFAULT_ARITY_CAP):
        """Fill a graded symmetric bundle from values on sorted arguments.

        ``fn`` receives a sorted tuple of (degree, index) basis pairs; the
        remaining entries of each orbit are filled with the pure Koszul sign
        of the rearrangement.  Arguments with a repeated odd-degree basis
        element are forced to zero by symmetry and are skipped.
        """
        out = cls(space, degree, cap=cap)
        pairs = [(d, i) for d in space.degrees for i in range(space.dim(d))]
        for k in arities:
            for combo in combinations_with_replacement(pairs, k):
                profile = tuple(d for d, _ in combo)
                if out.out_dim(profile) == 0:
                    continue
                if any(combo[t] == combo[t + 1] and combo[t][0] % 2
                       for t in range(k - 1)):
                    continue
                base = [Q(x) for x in fn(combo)]
                if not any(base):
                    continue
                degs = [d for d, _ in combo]
                seen = set()
                for images in permutations(range(k)):
                    arrangement = tuple(combo[s] for s in images)
                    if arrangement in seen:
                        continue
                    seen.add(arrangement)
                    sgn = koszul_sign(degs, images)
                    out.set_entry(tuple(d for d, _ in arrangement),
                                  tuple(i for _, i in arrangement),
                                  la.vec_scale(Q(sgn), base))
        return out

    def __repr__(self):
        ks = ",".join(str(k) for k in self.arities()) or "-"
        flag = ", truncated" if self.truncated else ""
        return f"GradedCochainBundle(arities {ks}, degree {self.degree}{flag})"


class RepCochainBundle:
    """Arity-indexed action maps: k-1 algebra slots and one final module slot.

    Entries are ``ops[k][profile][multi] -> module vector`` where ``profile``
    lists k-1 degrees in the algebra space followed by one degree in the
    module space, and the value lives in the module at degree
    ``sum(profile) + degree``.
    """

    def __init__(self, gspace, vspace, degree, cap=DEFAULT_ARITY_CAP,
                 truncated=False):
        if cap < 1:
            raise ValueError("the arity cap must be at least 1")
        self.gspace = gspace
        self.vspace = vspace
        self.degree = int(degree)
        self.cap = int(cap)
        self.truncated = bool(truncated)
        self.ops = {}

    def out_degree(self, profile):
        return sum(profile) + self.degree

    def out_dim(self, profile):
        return self.vspace.dim(self.out_degree(profile))

    def set_entry(self, profile, multi, vec):
        profile, multi = tuple(profile), tuple(multi)
        k = len(profile)
        if len(multi) != k:
            raise ValueError("profile and index tuple lengths differ")
        if not 1 <= k <= self.cap:
            raise ValueError(f"arity must lie in 1..{self.cap}")
        for d, i in zip(profile[:-1], multi[:-1]):
            if not 0 <= i < self.gspace.dim(d):
                raise ValueError(f"index {i} out of range at algebra degree {d}")
        if not 0 <= multi[-1] < self.vspace.dim(profile[-1]):
            raise ValueError("module index out of range")
        outdim = self.out_dim(profile)
        vec = [Q(x) for x in vec]
        if len(vec) != outdim:
            raise ValueError("value vector has the wrong length")
        table = self.ops.setdefault(k, {}).setdefault(profile, {})
        if any(vec):
            table[multi] = vec
        else:
            table.pop(multi, None)

    def entry(self, profile, multi):
        profile, multi = tuple(profile), tuple(multi)
        stored = self.ops.get(len(profile), {}).get(profile, {}).get(multi)
        if stored is not None:
            return list(stored)
        return [Q(0)] * self.out_dim(profile)

    def arities(self):
        return tuple(sorted(k for k, tabs in self.ops.items()
                            if any(tab for tab in tabs.values())))

    def items(self):
        for k in sorted(self.ops):
            for profile in sorted(self.ops[k]):
                table = self.ops[k][profile]
                for multi in sorted(table):
                    yield profile, multi, list(table[multi])

    def apply(self, gargs, varg):
        """Evaluate on k-1 homogeneous algebra vectors and one module vector."""
        args = list(gargs) + [varg]
        profile = tuple(d for d, _ in args)
        for d, v in args[:-1]:
            if len(v) != self.gspace.dim(d):
                raise ValueError("algebra argument does not match its degree")
        if len(varg[1]) != self.vspace.dim(varg[0]):
            raise ValueError("module argument does not match its degree")
        outdeg = self.out_degree(profile)
        out = [Q(0)] * self.vspace.dim(outdeg)
        table = self.ops.get(len(args), {}).get(profile)
        if not table or not out:
            return outdeg, out
        for multi, vec in table.items():
            coeff = Q(1)
            for (_, v), i in zip(args, multi):
                coeff *= v[i]
                if coeff == 0:
                    break
            if coeff == 0:
                continue
            for r, x in enumerate(vec):
                if x:
                    out[r] += coeff * x
        return outdeg, out

    def __repr__(self):
        ks = ",".join(str(k) for k in self.arities()) or "-"
        return f"RepCochainBundle(arities {ks}, degree {self.degree})"


# ---------------------------------------------------------------------------
# structure wrappers
# ---------------------------------------------------------------------------

class HLInfty:
    """A graded space with a graded symmetric degree 1 operation family."""

    def __init__(self, space, ops):
        if not space.same(ops.space):
            raise ValueError("operations do not live on the given space")
        if ops.degree != 1:
            raise ValueError("structure operations must have raw degree 1")
        self.space = space
        self.ops = ops

    def __repr__(self):
        return f"HLInfty({self.space!r}, {self.ops!r})"


class HLeibInfty:
    """A graded space with a degree 1 operation family, no symmetry assumed."""

    def __init__(self, space, ops, carrier=None):
        if not space.same(ops.space):
            raise ValueError("operations do not live on the given space")
        if ops.degree != 1:
            raise ValueError("structure operations must have raw degree 1")
        self.space = space
        self.ops = ops
        self.carrier = carrier

    def __repr__(self):
        return f"HLeibInfty({self.space!r}, {self.ops!r})"


class HLInftyRep:
    """A strongly homotopy representation: base structure plus action maps."""

    def __init__(self, base, vspace, ops):
        if not base.space.same(ops.gspace) or not vspace.same(ops.vspace):
            raise ValueError("action maps do not match the given spaces")
        if ops.degree != 1:
            raise ValueError("action operations must have raw degree 1")
        self.base = base
        self.vspace = vspace
        self.ops = ops

    def __repr__(self):
        return f"HLInftyRep({self.base!r}, {self.vspace!r})"


def _ops_of(h, cls):
    if isinstance(h, GradedCochainBundle):
        if h.degree != 1:
            raise ValueError("structure operations must have raw degree 1")
        return h
    if isinstance(h, cls):
        return h.ops
    raise TypeError(f"expected {cls.__name__} or GradedCochainBundle")


# ---------------------------------------------------------------------------
# graded Balavoine bracket
# ---------------------------------------------------------------------------

def _circle(p, q):
    """Graded circle product inserting q into every slot of p.

    On arguments x_1, ..., x_{m+n-1} the insertion at position i runs over
    shuffles of the first i+n-2 arguments that feed i-1 of them to p (twisted
    by the (n-1)-th twist power) and n-1 of them to q, keeps q's final
    argument in place, and twists the trailing spectators; the sign is the
    pure Koszul sign of the shuffle times (-1)**(deg(q) * sum of the degrees
    placed in front of q).
    """
    if not p.space.same(q.space):
        raise ValueError("bundles live on different carriers")
    space = p.space
    out = GradedCochainBundle(space, p.degree + q.degree,
                              cap=min(p.cap, q.cap),
                              truncated=p.truncated or q.truncated)
    for m in p.arities():
        for n in q.arities():
            k = m + n - 1
            if k > out.cap:
                out.truncated = True
                continue
            shufs = [(i, shuffles(i - 1, n - 1)) for i in range(1, m + 1)]
            for profile in product(space.degrees, repeat=k):
                outdim = out.out_dim(profile)
                if outdim == 0:
                    continue
                for multi in product(*[range(space.dim(d)) for d in profile]):
                    acc = [Q(0)] * outdim
                    hit = False
                    for i, shlist in shufs:
                        head_len = i + n - 2
                        for images, _ in shlist:
                            prefix = images[:i - 1]
                            inner = images[i - 1:]
                            qprofile = tuple(profile[s] for s in inner) \
                                + (profile[head_len],)
                            qmulti = tuple(multi[s] for s in inner) \
                                + (multi[head_len],)
                            qvec = q.entry(qprofile, qmulti)
                            if not any(qvec):
                                continue
                            qdeg = q.out_degree(qprofile)
                            eps = koszul_sign([profile[s] for s in range(head_len)],
                                              images)
                            gamma = sum(profile[s] for s in prefix)
                            if (q.degree * gamma) % 2:
                                eps = -eps
                            args = []
                            for s in prefix:
                                tw = space.twist_power(profile[s], n - 1)
                                args.append((profile[s],
                                             [row[multi[s]] for row in tw]))
                            args.append((qdeg, qvec))
                            for t in range(head_len + 1, k):
                                tw = space.twist_power(profile[t], n - 1)
                                args.append((profile[t],
                                             [row[multi[t]] for row in tw]))
                            _, val = p.apply(args)
                            if any(val):
                                hit = True
                                for r, x in enumerate(val):
                                    if x:
                                        acc[r] += eps * x
                    if hit and any(acc):
                        cur = out.entry(profile, multi)
                        out.set_entry(profile, multi, la.vec_add(cur, acc))
    return out


def graded_balavoine(p, q):
    """[p, q] = p circle q - (-1)**(deg p * deg q) q circle p.

    Graded antisymmetric by construction; the graded Jacobi identity and the
    degree -1 reduction to the ungraded bracket are exercised by the tests.
    """
    first = _circle(p, q)
    second = _circle(q, p)
    sign = Q(-1) if (p.degree * q.degree) % 2 else Q(1)
    return first.sub(second.scale(sign))


# ---------------------------------------------------------------------------
# validators
# ---------------------------------------------------------------------------

def _multiplicativity_lines(report, bundle, label="multiplicativity"):
    space = bundle.space
    for k in bundle.arities():
        for profile in product(space.degrees, repeat=k):
            outdim = bundle.out_dim(profile)
            if outdim == 0:
                continue
            outdeg = bundle.out_degree(profile)
            for multi in product(*[range(space.dim(d)) for d in profile]):
                args = []
                for d, i in zip(profile, multi):
                    tw = space.twist(d)
                    args.append((d, [row[i] for row in tw]))
                _, lhs = bundle.apply(args)
                rhs = space.twist_vec(outdeg, bundle.entry(profile, multi))
                report.require(label, (k,) + profile + multi,
                               la.vec_sub(lhs, rhs))


def _leibniz_residual_bundle(b):
    """Direct transcription of the higher identities of a degree 1 family.

    For each total arity n the residual sums, over k + l = n + 1 and every
    insertion position, the outer map applied to the inner value with the
    prefix shuffled (pure Koszul sign times (-1)**prefix-degree-sum, matching
    raw degree 1 of the inserted map) and all spectators twisted by the
    (l-1)-th twist power.
    """
    space = b.space
    out = GradedCochainBundle(space, 2, cap=b.cap)
    for n in range(1, b.cap + 1):
        for profile in product(space.degrees, repeat=n):
            if space.dim(sum(profile) + 2) == 0:
                continue
            for multi in product(*[range(space.dim(d)) for d in profile]):
                acc = [Q(0)] * space.dim(sum(profile) + 2)
                for l in range(1, n + 1):
                    k = n + 1 - l
                    for i in range(1, k + 1):
                        head_len = i + l - 2
                        for images, _ in shuffles(i - 1, l - 1):
                            prefix = images[:i - 1]
                            inner = images[i - 1:]
                            iprofile = tuple(profile[s] for s in inner) \
                                + (profile[head_len],)
                            imulti = tuple(multi[s] for s in inner) \
                                + (multi[head_len],)
                            ivec = b.entry(iprofile, imulti)
                            if not any(ivec):
                                continue
                            eps = koszul_sign(
                                [profile[s] for s in range(head_len)], images)
                            gamma = sum(profile[s] for s in prefix)
                            if gamma % 2:
                                eps = -eps
                            args = []
                            for s in prefix:
                                tw = space.twist_power(profile[s], l - 1)
                                args.append((profile[s],
                                             [row[multi[s]] for row in tw]))
                            args.append((b.out_degree(iprofile), ivec))
                            for t in range(head_len + 1, n):
                                tw = space.twist_power(profile[t], l - 1)
                                args.append((profile[t],
                                             [row[multi[t]] for row in tw]))
                            _, val = b.apply(args)
                            for r, x in enumerate(val):
                                if x:
                                    acc[r] += eps * x
                if any(acc):
                    out.set_entry(profile, multi, acc)
    return out


def validate_hleib_infty(h, cross_check=True):
    """Validate a strongly homotopy Leibniz structure up to the arity cap.

    Checks multiplicativity of every component and the higher identities for
    each total arity; with ``cross_check`` the accumulated residuals are
    compared against half the self-bracket, raising
    :class:`~homtensor.cochains.RouteMismatch` on disagreement.
    """
    b = _ops_of(h, HLeibInfty)
    report = ValidationReport("strongly homotopy Leibniz structure")
    if b.truncated:
        report.metadata["truncated"] = True
    _multiplicativity_lines(report, b)
    resid = _leibniz_residual_bundle(b)
    for profile, multi, vec in resid.items():
        report.add("higher_leibniz", (len(profile),) + profile + multi, vec)
    if cross_check:
        br = graded_balavoine(b, b)
        if br.truncated:
            report.metadata["truncated"] = True
        if not br.equals(resid.scale(2)):
            raise RouteMismatch(
                "homotopy Leibniz identities and the self-bracket disagree")
    return report


def _symmetry_lines(report, b, label="graded_symmetry"):
    space = b.space
    for k in b.arities():
        if k < 2:
            continue
        for profile in product(space.degrees, repeat=k):
            if b.out_dim(profile) == 0:
                continue
            for multi in product(*[range(space.dim(d)) for d in profile]):
                base = b.entry(profile, multi)
                for t in range(k - 1):
                    sprofile = list(profile)
                    smulti = list(multi)
                    sprofile[t], sprofile[t + 1] = sprofile[t + 1], sprofile[t]
                    smulti[t], smulti[t + 1] = smulti[t + 1], smulti[t]
                    swapped = b.entry(tuple(sprofile), tuple(smulti))
                    sgn = -1 if (profile[t] % 2 and profile[t + 1] % 2) else 1
                    report.require(
                        label, (k, t) + profile + multi,
                        la.vec_sub(swapped, la.vec_scale(Q(sgn), base)))


def validate_hl_infty(h, report_subject="strongly homotopy Lie structure"):
    """Validate graded symmetry, multiplicativity, and the higher identities.

    The arity-n identity sums over splittings i + j = n + 1 and shuffles
    feeding i arguments to the inner map (pure Koszul sign) with the
    remaining spectators twisted by the (i-1)-th twist power.
    """
    b = _ops_of(h, HLInfty)
    report = ValidationReport(report_subject)
    if b.truncated:
        report.metadata["truncated"] = True
    _symmetry_lines(report, b)
    _multiplicativity_lines(report, b)
    space = b.space
    for n in range(1, b.cap + 1):
        for profile in product(space.degrees, repeat=n):
            outdim = space.dim(sum(profile) + 2)
            if outdim == 0:
                continue
            for multi in product(*[range(space.dim(d)) for d in profile]):
                acc = [Q(0)] * outdim
                for i in range(1, n + 1):
                    j = n + 1 - i
                    for images, _ in shuffles(i, n - i):
                        first = images[:i]
                        rest = images[i:]
                        iprofile = tuple(profile[s] for s in first)
                        imulti = tuple(multi[s] for s in first)
                        ivec = b.entry(iprofile, imulti)
                        if not any(ivec):
                            continue
                        eps = koszul_sign(list(profile), images)
                        args = [(b.out_degree(iprofile), ivec)]
                        for s in rest:
                            tw = space.twist_power(profile[s], i - 1)
                            args.append((profile[s],
                                         [row[multi[s]] for row in tw]))
                        _, val = b.apply(args)
                        for r, x in enumerate(val):
                            if x:
                                acc[r] += eps * x
                report.require("higher_jacobi", (n,) + profile + multi, acc)
    return report


def validate_hl_infty_rep(r, include_base=True):
    """Validate a strongly homotopy representation up to the arity cap.

    Checks graded symmetry on the algebra slots, multiplicativity, and for
    each total arity the two-sum compatibility identity: inner action with
    the module element against outer action, plus inner bracket fed into the
    first slot of the action, with the stated twist powers and signs.
    """
    report = ValidationReport("strongly homotopy representation")
    if include_base:
        base = validate_hl_infty(r.base)
        report = report.merged_with(base)
        report.subject = "strongly homotopy representation"
    rb = r.ops
    gspace, vspace = rb.gspace, rb.vspace
    if rb.truncated:
        report.metadata["truncated"] = True
    for k in rb.arities():
        if k < 3:
            continue
        for profile in product(product(gspace.degrees, repeat=k - 1),
                               vspace.degrees):
            profile = profile[0] + (profile[1],)
            if rb.out_dim(profile) == 0:
                continue
            ranges = [range(gspace.dim(d)) for d in profile[:-1]] \
                + [range(vspace.dim(profile[-1]))]
            for multi in product(*ranges):
                base = rb.entry(profile, multi)
                for t in range(k - 2):
                    sprofile = list(profile)
                    smulti = list(multi)
                    sprofile[t], sprofile[t + 1] = sprofile[t + 1], sprofile[t]
                    smulti[t], smulti[t + 1] = smulti[t + 1], smulti[t]
                    swapped = rb.entry(tuple(sprofile), tuple(smulti))
                    sgn = -1 if (profile[t] % 2 and profile[t + 1] % 2) else 1
                    report.require(
                        "graded_symmetry", (k, t) + profile + multi,
                        la.vec_sub(swapped, la.vec_scale(Q(sgn), base)))
    for k in rb.arities():
        for gprofile in product(gspace.degrees, repeat=k - 1):
            for vdeg in vspace.degrees:
                profile = gprofile + (vdeg,)
                if rb.out_dim(profile) == 0:
                    continue
                outdeg = rb.out_degree(profile)
                ranges = [range(gspace.dim(d)) for d in gprofile] \
                    + [range(vspace.dim(vdeg))]
                for multi in product(*ranges):
                    gargs = []
                    for d, i in zip(gprofile, multi):
                        tw = gspace.twist(d)
                        gargs.append((d, [row[i] for row in tw]))
                    tw = vspace.twist(vdeg)
                    varg = (vdeg, [row[multi[-1]] for row in tw])
                    _, lhs = rb.apply(gargs, varg)
                    rhs = vspace.twist_vec(outdeg, rb.entry(profile, multi))
                    report.require("multiplicativity", (k,) + profile + multi,
                                   la.vec_sub(lhs, rhs))
    lb = r.base.ops
    cap = min(lb.cap, rb.cap)
    for n in range(1, cap + 1):
        for gprofile in product(gspace.degrees, repeat=n - 1):
            for vdeg in vspace.degrees:
                profile = gprofile + (vdeg,)
                outdeg = sum(profile) + 2
                outdim = vspace.dim(outdeg)
                if outdim == 0:
                    continue
                ranges = [range(gspace.dim(d)) for d in gprofile] \
                    + [range(vspace.dim(vdeg))]
                for multi in product(*ranges):
                    acc = [Q(0)] * outdim
                    for i in range(1, n + 1):
                        j = n + 1 - i
                        for images, _ in shuffles(i, n - i):
                            eps = koszul_sign(list(profile), images)
                            if images[i - 1] == n - 1:
                                inner_g = images[:i - 1]
                                rest = images[i:]
                                ideg, ivec = rb.apply(
                                    [(profile[s],
                                      la.basis_vector(gspace.dim(profile[s]), multi[s]))
                                     for s in inner_g],
                                    (vdeg, la.basis_vector(vspace.dim(vdeg),
                                                           multi[-1])))
                                if not any(ivec):
                                    continue
                                first_sum = i + sum(profile[s]
                                                    for s in images[:i])
                                second_sum = sum(profile[s] for s in rest)
                                exp = (j - 1) + first_sum * second_sum
                                sgn = eps if exp % 2 == 0 else -eps
                                gargs = []
                                for s in rest:
                                    tw = gspace.twist_power(profile[s], i - 1)
                                    gargs.append((profile[s],
                                                  [row[multi[s]] for row in tw]))
                                _, val = rb.apply(gargs, (ideg, ivec))
                                for rr, x in enumerate(val):
                                    if x:
                                        acc[rr] += sgn * x
                            elif images[n - 1] == n - 1:
                                first = images[:i]
                                rest = images[i:n - 1]
                                iprofile = tuple(profile[s] for s in first)
                                imulti = tuple(multi[s] for s in first)
                                ivec = lb.entry(iprofile, imulti)
                                if not any(ivec):
                                    continue
                                gargs = [(lb.out_degree(iprofile), ivec)]
                                for s in rest:
                                    tw = gspace.twist_power(profile[s], i - 1)
                                    gargs.append((profile[s],
                                                  [row[multi[s]] for row in tw]))
                                tw = vspace.twist_power(vdeg, i - 1)
                                varg = (vdeg, [row[multi[-1]] for row in tw])
                                _, val = rb.apply(gargs, varg)
                                for rr, x in enumerate(val):
                                    if x:
                                        acc[rr] += eps * x
                    report.require("rep_identity", (n,) + profile + multi, acc)
    return report


# ---------------------------------------------------------------------------
# hemi-semidirect sum
# ---------------------------------------------------------------------------

class SumCarrier:
    """Degreewise direct sum of an algebra space and a module space.

    The algebra block comes first at every degree; the twist is the block
    diagonal of the two twists.
    """

    def __init__(self, gspace, vspace):
        self.gspace = gspace
        self.vspace = vspace
        degrees = sorted(set(gspace.degrees) | set(vspace.degrees))
        dims = {}
        twists = {}
        for d in degrees:
            ng, nv = gspace.dim(d), vspace.dim(d)
            dims[d] = ng + nv
            block = [[Q(0)] * (ng + nv) for _ in range(ng + nv)]
            gtw = gspace.twist(d)
            vtw = vspace.twist(d)
            for i in range(ng):
                for j in range(ng):
                    block[i][j] = gtw[i][j]
            for a in range(nv):
                for bcol in range(nv):
                    block[ng + a][ng + bcol] = vtw[a][bcol]
            twists[d] = block
        self.space = GradedSpace(dims, twists, prefix="z")

    def g_dim(self, d):
        return self.gspace.dim(d)

    def v_dim(self, d):
        return self.vspace.dim(d)

    def embed_g(self, d, vec):
        return list(vec) + [Q(0)] * self.v_dim(d)

    def embed_v(self, d, vec):
        return [Q(0)] * self.g_dim(d) + list(vec)

    def g_part(self, d, vec):
        return list(vec[:self.g_dim(d)])

    def v_part(self, d, vec):
        return list(vec[self.g_dim(d):])

    def v_index(self, d, a):
        return self.g_dim(d) + a

    def is_v_multi(self, profile, multi):
        return all(i >= self.g_dim(d) for d, i in zip(profile, multi))


def hemi_carrier(r):
    """The direct-sum carrier used by every hemi-semidirect construction."""
    return SumCarrier(r.base.space, r.vspace)


def _hemi_bundle(carrier, lb, rb):
    out = GradedCochainBundle(carrier.space, 1, cap=min(lb.cap, rb.cap),
                              truncated=lb.truncated or rb.truncated)
    for profile, multi, vec in lb.items():
        if len(profile) > out.cap:
            out.truncated = True
            continue
        outdeg = sum(profile) + 1
        out.set_entry(profile, multi, carrier.embed_g(outdeg, vec))
    for profile, multi, vec in rb.items():
        if len(profile) > out.cap:
            out.truncated = True
            continue
        outdeg = sum(profile) + 1
        hmulti = multi[:-1] + (carrier.v_index(profile[-1], multi[-1]),)
        cur = out.entry(profile, hmulti)
        out.set_entry(profile, hmulti,
                      la.vec_add(cur, carrier.embed_v(outdeg, vec)))
    return out


def hemi_semidirect_infty(r, validate=True):
    """The box-sum structure on the direct sum of a representation.

    The arity-k bracket sends k pairs to (inner bracket of the algebra
    components, action of the first k-1 algebra components on the last
    module component).  With ``validate`` the input representation is
    checked first; the converse direction is exposed by validating the
    output of an unvalidated call.
    """
    if validate:
        rep_report = validate_hl_infty_rep(r)
        if not rep_report.ok:
            raise ComplexError(
                "hemi-semidirect sum needs a valid strongly homotopy "
                "representation: " + rep_report.summary().splitlines()[0])
    carrier = hemi_carrier(r)
    bundle = _hemi_bundle(carrier, r.base.ops, r.ops)
    return HLeibInfty(carrier.space, bundle, carrier=carrier)


def adjoint_infty_rep(h):
    """The adjoint representation: action maps read off the brackets."""
    b = h.ops
    rb = RepCochainBundle(h.space, h.space, 1, cap=b.cap,
                          truncated=b.truncated)
    for profile, multi, vec in b.items():
        rb.set_entry(profile, multi, vec)
    return HLInftyRep(h, h.space, rb)


# ---------------------------------------------------------------------------
# generic derived-bracket operations from projection data
# ---------------------------------------------------------------------------

class VElem:
    """Homogeneous element (shifted part, abelian part) of a V-data sum.

    ``q_part`` lives in the chosen subalgebra (its ambient degree is
    ``degree + 1`` because of the shift), ``a_part`` in the abelian
    subalgebra at ambient degree ``degree``; either may be None for zero.
    """

    def __init__(self, degree, q_part=None, a_part=None):
        self.degree = int(degree)
        self.q_part = q_part
        self.a_part = a_part

    def is_zero(self):
        return (self.q_part is None or self.q_part.is_zero()) and \
            (self.a_part is None or self.a_part.is_zero())

    def add(self, other):
        if self.degree != other.degree:
            raise ValueError("cannot add elements of different degrees")

        def combine(x, y):
            if x is None:
                return y
            if y is None:
                return x
            return x.add(y)

        return VElem(self.degree, combine(self.q_part, other.q_part),
                     combine(self.a_part, other.a_part))

    def scale(self, s):
        return VElem(self.degree,
                     None if self.q_part is None else self.q_part.scale(s),
                     None if self.a_part is None else self.a_part.scale(s))

    def __repr__(self):
        qs = "0" if self.q_part is None else repr(self.q_part)
        as_ = "0" if self.a_part is None else repr(self.a_part)
        return f"VElem(degree {self.degree}, q={qs}, a={as_})"


class VData:
    """Operational quadruple: bracket, grading, projection, subalgebra.

    ``bracket(x, y)`` is the graded Lie bracket of the ambient algebra,
    ``degree(x)`` its grading, ``proj(x)`` the projection onto the abelian
    part, ``q_proj(x)`` the projection onto the chosen subalgebra, and
    ``delta`` the structure element (None encodes zero).  Elements are any
    objects with add/scale/is_zero/equals methods, so both ungraded cochains
    and graded bundles qualify.
    """

    def __init__(self, bracket, degree, proj, q_proj, delta=None):
        self.bracket = bracket
        self.degree = degree
        self.proj = proj
        self.q_proj = q_proj
        self.delta = delta

    def check(self, q_samples=(), a_samples=()):
        """Raise when the quadruple axioms fail on the given samples."""
        if self.delta is not None:
            if not self.proj(self.delta).is_zero():
                raise ComplexError("Delta must lie in the kernel of the projection")
            if self.degree(self.delta) != 1:
                raise ComplexError("Delta must have degree 1")
            if not self.bracket(self.delta, self.delta).is_zero():
                raise ComplexError("Delta must square to zero under the bracket")
        for a in a_samples:
            if not self.proj(a).equals(a):
                raise ComplexError("sample element is not in the abelian part")
            for b in a_samples:
                if not self.bracket(a, b).is_zero():
                    raise ComplexError("the projection target is not abelian")
        for x in q_samples:
            if not self.q_proj(x).equals(x):
                raise ComplexError("sample element is not in the subalgebra")
            if self.delta is not None:
                bx = self.bracket(self.delta, x)
                if not self.q_proj(bx).equals(bx):
                    raise ComplexError(
                        "the subalgebra is not closed under bracketing with Delta")


def _velem_parts(elem):
    parts = []
    if elem.q_part is not None and not elem.q_part.is_zero():
        parts.append(("q", elem.q_part))
    if elem.a_part is not None and not elem.a_part.is_zero():
        parts.append(("a", elem.a_part))
    return parts


def voronov_lk(vd, args, validate=True):
    """The derived-bracket operation family of a V-data quadruple.

    ``args`` is a list of homogeneous :class:`VElem`; the result is the
    :class:`VElem` of degree ``sum(degrees) + 1`` assembled from the four
    cases: the unary case (projection and bracketing with Delta), the binary
    case on two shifted elements with the sign (-1)**ambient-degree, the
    all-abelian nested chain seeded by Delta, and the mixed chain seeded by
    the single shifted element (with the pure Koszul sign for moving it to
    the front across the shifted grading).  Inputs with two or more shifted
    parts in arity other than 2 contribute zero.
    """
    if not args:
        raise ValueError("the operation family needs at least one argument")
    if validate:
        for elem in args:
            if elem.q_part is not None and not elem.q_part.is_zero():
                if vd.degree(elem.q_part) != elem.degree + 1:
                    raise ComplexError(
                        "shifted part disagrees with the stated degree")
                if not vd.q_proj(elem.q_part).equals(elem.q_part):
                    raise ComplexError("shifted part is not in the subalgebra")
                if vd.delta is not None:
                    bx = vd.bracket(vd.delta, elem.q_part)
                    if not vd.q_proj(bx).equals(bx):
                        raise ComplexError(
                            "the subalgebra is not closed under bracketing "
                            "with Delta")
            if elem.a_part is not None and not elem.a_part.is_zero():
                if vd.degree(elem.a_part) != elem.degree:
                    raise ComplexError(
                        "abelian part disagrees with the stated degree")
                if not vd.proj(elem.a_part).equals(elem.a_part):
                    raise ComplexError("abelian part is not in the abelian part")
    k = len(args)
    out_degree = sum(e.degree for e in args) + 1
    out_q = None
    out_a = None

    def add_q(x):
        nonlocal out_q
        out_q = x if out_q is None else out_q.add(x)

    def add_a(x):
        nonlocal out_a
        out_a = x if out_a is None else out_a.add(x)

    for assignment in product(*[_velem_parts(e) for e in args]):
        q_slots = [t for t, (kind, _) in enumerate(assignment) if kind == "q"]
        values = [val for _, val in assignment]
        if len(q_slots) == 0:
            if vd.delta is None:
                continue
            nested = vd.delta
            for val in values:
                nested = vd.bracket(nested, val)
                if nested.is_zero():
                    break
            else:
                add_a(vd.proj(nested))
            continue
        if len(q_slots) == 1:
            pos = q_slots[0]
            x = values[pos]
            shift_parity = (args[pos].degree) % 2
            jumped = sum(args[t].degree for t in range(pos)) % 2
            sgn = Q(-1) if (shift_parity and jumped) else Q(1)
            if k == 1:
                if vd.delta is not None:
                    add_q(vd.bracket(vd.delta, x).scale(Q(-1)))
                add_a(vd.proj(x))
                continue
            nested = x
            zero_hit = False
            for t, val in enumerate(values):
                if t == pos:
                    continue
                nested = vd.bracket(nested, val)
                if nested.is_zero():
                    zero_hit = True
                    break
            if not zero_hit:
                add_a(vd.proj(nested).scale(sgn))
            continue
        if len(q_slots) == 2 and k == 2:
            x, y = values
            sgn = Q(-1) if vd.degree(x) % 2 else Q(1)
            add_q(vd.bracket(x, y).scale(sgn))
    return VElem(out_degree, out_q, out_a)


def maurer_cartan_terms(vd, theta, iter_cap=DEFAULT_ITER_CAP, validate=True):
    """The per-arity terms l_k(theta, ..., theta) / k! of the MC sum.

    ``theta`` must be degree 0.  Terms are computed until one vanishes at
    arity three or beyond (later nested chains only extend earlier ones);
    hitting the iteration cap raises an error.
    """
    if theta.degree != 0:
        raise ComplexError("Maurer-Cartan candidates must have degree 0")
    terms = []
    for k in range(1, iter_cap + 1):
        term = voronov_lk(vd, [theta] * k, validate=validate and k == 1)
        term = term.scale(Q(1, factorial(k)))
        if term.is_zero() and k >= 3:
            break
        terms.append(term)
    else:
        raise ComplexError(
            "Maurer-Cartan series did not terminate within the iteration cap")
    return terms


def maurer_cartan_residual(vd, theta, iter_cap=DEFAULT_ITER_CAP, validate=True):
    terms = maurer_cartan_terms(vd, theta, iter_cap=iter_cap, validate=validate)
    out = VElem(1)
    for term in terms:
        out = out.add(term)
    return out


class TwistedOps:
    """Operation family twisted by a Maurer-Cartan element.

    ``lk(args)`` sums (1/m!) l_{m+k}(theta, ..., theta, args...) until the
    increment vanishes (the first two increments are always computed);
    hitting the iteration cap raises an error.
    """

    def __init__(self, vd, theta, iter_cap=DEFAULT_ITER_CAP):
        self.vd = vd
        self.theta = theta
        self.iter_cap = iter_cap

    def lk(self, args, validate=True):
        out = None
        fact = Q(1)
        for m in range(0, self.iter_cap + 1):
            if m:
                fact *= m
            term = voronov_lk(self.vd, [self.theta] * m + list(args),
                              validate=validate and m == 0)
            term = term.scale(Q(1) / fact)
            out = term if out is None else out.add(term)
            if m >= 2 and term.is_zero():
                return out
        raise ComplexError(
            "twisted operation series did not terminate within the iteration cap")

    def maurer_cartan_residual(self, theta2, iter_cap=None):
        """Residual of the twisted MC sum, for the shift law tests."""
        cap = self.iter_cap if iter_cap is None else iter_cap
        if theta2.degree != 0:
            raise ComplexError("Maurer-Cartan candidates must have degree 0")
        out = VElem(1)
        for k in range(1, cap + 1):
            term = self.lk([theta2] * k, validate=k == 1).scale(
                Q(1, factorial(k)))
            out = out.add(term)
            if k >= 3 and term.is_zero():
                return out
        raise ComplexError(
            "Maurer-Cartan series did not terminate within the iteration cap")


def twist_by_mc(vd, theta, iter_cap=DEFAULT_ITER_CAP, check=True):
    """Twist the derived-bracket operations by a Maurer-Cartan element.

    With ``check`` the element is verified to satisfy the MC equation first.
    The shift law (theta + theta2 satisfies MC for the original operations
    exactly when theta2 does for the twisted ones) is exercised in tests.
    """
    if check:
        resid = maurer_cartan_residual(vd, theta, iter_cap=iter_cap)
        if not resid.is_zero():
            raise ComplexError("the twisting element is not Maurer-Cartan")
    return TwistedOps(vd, theta, iter_cap=iter_cap)


# ---------------------------------------------------------------------------
# the bracket/action/tensor V-data on ungraded cochains
# ---------------------------------------------------------------------------

def _bidegree_projection(c, ng):
    """Keep the components of the two blocks of a split-form cochain."""
    def value(*multi):
        out = list(c.entry(multi))
        pure_g = all(i < ng for i in multi)
        action_shape = all(i < ng for i in multi[:-1]) and multi[-1] >= ng
        for r in range(len(out)):
            keep = (r < ng and pure_g) or (r >= ng and action_shape)
            if not keep:
                out[r] = Q(0)
        return out

    return Cochain.from_function(c.sources, c.target, value)


def _abelian_projection(c, ng):
    """Keep the algebra-valued components on pure module inputs."""
    def value(*multi):
        out = [Q(0)] * c.target.dim
        if all(i >= ng for i in multi):
            inner = c.entry(multi)
            for r in range(ng):
                out[r] = inner[r]
        return out

    return Cochain.from_function(c.sources, c.target, value)


def triple_vdata(rep, hspace=None):
    """The V-data on split-space cochains whose MC elements are triples.

    Ambient elements are cochains on the direct sum of the algebra and the
    module, graded by arity minus one, with the ungraded Balavoine bracket;
    the abelian part consists of algebra-valued maps on pure module inputs,
    the subalgebra of maps preserving the two-block shape; Delta is zero.
    """
    from .cochains import hemi_space
    if hspace is None:
        hspace = hemi_space(rep)
    ng = rep.algebra.dim
    vd = VData(
        bracket=balavoine_bracket,
        degree=lambda c: c.arity - 1,
        proj=lambda c: _abelian_projection(c, ng),
        q_proj=lambda c: _bidegree_projection(c, ng),
        delta=None,
    )
    return vd, hspace


def pair_element(fg, fv, rep, hspace=None):
    """Embed a bracket/action component pair as a split-form cochain."""
    from .cochains import hemi_space
    if hspace is None:
        hspace = hemi_space(rep)
    ng = rep.algebra.dim
    nv = rep.vspace.dim
    n = fg.arity
    if fv.arity != n:
        raise ComplexError("pair components must have equal arity")

    def value(*multi):
        out = [Q(0)] * (ng + nv)
        if all(i < ng for i in multi):
            inner = fg.entry(multi)
            for r in range(ng):
                out[r] = inner[r]
        elif all(i < ng for i in multi[:-1]) and multi[-1] >= ng:
            inner = fv.entry(multi[:-1] + (multi[-1] - ng,))
            for b in range(nv):
                out[ng + b] = inner[b]
        return out

    return Cochain.from_function([hspace] * n, hspace, value)


def triple_theta(rep, tmat, hspace=None):
    """The degree 0 element packing the structure pair and the tensor."""
    from .cochains import embed_v_to_g, hemi_space, make_pi
    if hspace is None:
        hspace = hemi_space(rep)
    tcoch = Cochain.from_function(
        [rep.vspace], rep.algebra.space,
        lambda a: [Q(tmat[i][a]) for i in range(rep.algebra.dim)])
    return VElem(0, q_part=make_pi(rep, hspace),
                 a_part=embed_v_to_g(tcoch, rep, hspace))


def hllt_mc_check(mu, rho, tmat, alpha, beta, iter_cap=DEFAULT_ITER_CAP,
                  cross_check=True):
    """Maurer-Cartan check for a candidate bracket/action/tensor triple.

    ``mu`` is a skew bracket tensor on the algebra, ``rho`` an action tensor,
    ``tmat`` a module-to-algebra matrix, ``alpha``/``beta`` the twists.  The
    candidate must be twist-compatible (the derived-bracket machinery is
    only meaningful there); skewness and compatibility violations raise
    :class:`~homtensor.complexes.ComplexError`.  The report carries one
    residual family per structural statement: the arity-1 term and every
    term beyond arity 3 must vanish identically, the self-bracket of the
    packed structure pair detects the algebra and representation identities,
    and the doubly nested bracket with the tensor detects the embedding
    identity.  With ``cross_check`` both residual tensors are recomputed by
    direct bracketing and compared.
    """
    from .structures import HomLieAlgebra, HomLieRep, HomSpace
    ng = len(alpha)
    nv = len(beta)
    gspace = HomSpace(ng, alpha)
    vspace = HomSpace(nv, beta, prefix="f")
    for i in range(ng):
        for j in range(ng):
            if any(Q(mu[i][j][k]) != -Q(mu[j][i][k]) for k in range(ng)):
                raise ComplexError("bracket tensor must be skew")
    alg = HomLieAlgebra(gspace, mu)
    rep = HomLieRep(alg, vspace, rho)
    vd, hspace = triple_vdata(rep)
    theta = triple_theta(rep, tmat, hspace)
    for part, name in ((theta.q_part, "structure pair"),
                       (theta.a_part, "tensor")):
        bad = part.twist_residual()
        if bad is not None:
            raise ComplexError(f"the {name} is not twist-compatible")
    report = ValidationReport("triple Maurer-Cartan element")
    terms = maurer_cartan_terms(vd, theta, iter_cap=iter_cap)
    for k, term in enumerate(terms, start=1):
        if k == 2:
            continue
        if k == 3:
            if term.q_part is not None and not term.q_part.is_zero():
                raise RouteMismatch(
                    "arity-3 Maurer-Cartan term has a stray shifted part")
            continue
        for part in (term.q_part, term.a_part):
            if part is None:
                continue
            for multi in product(*[range(s.dim) for s in part.sources]):
                report.require(f"maurer_cartan_term_{k}", multi,
                               part.entry(multi))
    structure = None
    if len(terms) >= 2 and terms[1].q_part is not None:
        structure = terms[1].q_part.scale(Q(-2))
    if structure is None:
        structure = zero_cochain([hspace] * 3, hspace)
    if len(terms) >= 2 and terms[1].a_part is not None \
            and not terms[1].a_part.is_zero():
        raise RouteMismatch(
            "arity-2 Maurer-Cartan term has a stray abelian part")
    tensor_res = None
    if len(terms) >= 3 and terms[2].a_part is not None:
        tensor_res = terms[2].a_part.scale(Q(2))
    if tensor_res is None:
        tensor_res = zero_cochain([hspace] * 2, hspace)
    if cross_check:
        direct = balavoine_bracket(theta.q_part, theta.q_part)
        if not direct.equals(structure):
            raise RouteMismatch(
                "structure residual disagrees with the direct self-bracket")
        nested = balavoine_bracket(
            balavoine_bracket(theta.q_part, theta.a_part), theta.a_part)
        if not nested.equals(tensor_res):
            raise RouteMismatch(
                "tensor residual disagrees with the direct nested bracket")
    for multi in product(range(ng + nv), repeat=3):
        report.require("structure_residual", multi, structure.entry(multi))
    for multi in product(range(ng + nv), repeat=2):
        report.require("tensor_residual", multi, tensor_res.entry(multi))
    return report


# ---------------------------------------------------------------------------
# homotopy embedding tensors
# ---------------------------------------------------------------------------

def _a_support_check(carrier, b):
    for profile, multi, vec in b.items():
        if not carrier.is_v_multi(profile, multi):
            raise ComplexError(
                "the tensor candidate must be supported on module words")
        outdeg = sum(profile) + b.degree
        if any(carrier.v_part(outdeg, vec)):
            raise ComplexError(
                "the tensor candidate must take values in the algebra block")


def _a_projection_bundle(carrier, b):
    out = GradedCochainBundle(carrier.space, b.degree, cap=b.cap,
                              truncated=b.truncated)
    for profile, multi, vec in b.items():
        if not carrier.is_v_multi(profile, multi):
            continue
        outdeg = sum(profile) + b.degree
        gpart = carrier.g_part(outdeg, vec)
        if any(gpart):
            out.set_entry(profile, multi, carrier.embed_g(outdeg, gpart))
    return out


def _conjugation_terms(carrier, delta, pi, iter_cap):
    """The chain [..[Delta, Pi], .., Pi] / m! for m >= 1, until it vanishes."""
    terms = []
    current = delta
    fact = Q(1)
    for m in range(1, iter_cap + 1):
        current = graded_balavoine(current, pi)
        if current.is_zero():
            return terms, current.truncated
        fact *= m
        terms.append(current.scale(Q(1) / fact))
    raise ComplexError(
        "conjugation series did not terminate within the iteration cap")


def _check_pi(carrier, pi, validate):
    if not carrier.space.same(pi.space):
        raise ComplexError(
            "the tensor candidate must live on the hemi-semidirect carrier")
    if pi.degree != 0:
        raise ComplexError("the tensor candidate must have raw degree 0")
    if not validate:
        return
    _a_support_check(carrier, pi)
    probe = ValidationReport("tensor candidate")
    _multiplicativity_lines(probe, pi)
    if not probe.ok:
        raise ComplexError("the tensor candidate must commute with the twists")


def homotopy_mc_check(r, pi, iter_cap=DEFAULT_ITER_CAP, validate=True):
    """Maurer-Cartan check for a homotopy embedding tensor candidate.

    ``pi`` is a raw degree 0 bundle on the carrier of :func:`hemi_carrier`,
    supported on module words with algebra values.  The residual is the
    module-word projection of the conjugation series of the box-sum
    structure; each nonzero entry is reported at its arity, profile, and
    basis tuple.  Truncation by the arity cap is recorded in the report
    metadata.
    """
    if validate:
        rep_report = validate_hl_infty_rep(r)
        if not rep_report.ok:
            raise ComplexError(
                "the homotopy Maurer-Cartan check needs a valid "
                "representation: " + rep_report.summary().splitlines()[0])
    carrier = hemi_carrier(r)
    _check_pi(carrier, pi, validate)
    delta = _hemi_bundle(carrier, r.base.ops, r.ops)
    terms, truncated = _conjugation_terms(carrier, delta, pi, iter_cap)
    report = ValidationReport("homotopy embedding tensor candidate")
    if truncated or delta.truncated or pi.truncated:
        report.metadata["truncated"] = True
    resid = GradedCochainBundle(carrier.space, 1, cap=delta.cap)
    for term in terms:
        resid = resid.add(_a_projection_bundle(carrier, term))
    if resid.truncated:
        report.metadata["truncated"] = True
    for profile, multi, vec in resid.items():
        outdeg = sum(profile) + 1
        report.require("maurer_cartan", (len(profile),) + profile + multi,
                       carrier.g_part(outdeg, vec))
    return report


def induced_hleib_infty(r, pi, iter_cap=DEFAULT_ITER_CAP, validate=True):
    """The strongly homotopy Leibniz structure induced on the module.

    Conjugates the box-sum structure by the homotopy embedding tensor and
    restricts to pure module words; the candidate must satisfy the homotopy
    Maurer-Cartan equation (otherwise the restriction would leak into the
    algebra block and an error is raised).
    """
    if validate:
        rep_report = validate_hl_infty_rep(r)
        if not rep_report.ok:
            raise ComplexError(
                "the induced structure needs a valid representation: "
                + rep_report.summary().splitlines()[0])
    carrier = hemi_carrier(r)
    _check_pi(carrier, pi, validate)
    delta = _hemi_bundle(carrier, r.base.ops, r.ops)
    terms, truncated = _conjugation_terms(carrier, delta, pi, iter_cap)
    total = delta
    for term in terms:
        total = total.add(term)
    if not _a_projection_bundle(carrier, total).is_zero():
        raise ComplexError(
            "the candidate is not a homotopy embedding tensor")
    vspace = r.vspace
    out = GradedCochainBundle(vspace, 1, cap=total.cap,
                              truncated=total.truncated or truncated)
    for profile, multi, vec in total.items():
        if not carrier.is_v_multi(profile, multi):
            continue
        if any(vspace.dim(d) == 0 for d in profile):
            continue
        vmulti = tuple(i - carrier.g_dim(d) for d, i in zip(profile, multi))
        outdeg = sum(profile) + 1
        vpart = carrier.v_part(outdeg, vec)
        if vspace.dim(outdeg) == 0:
            if any(vpart):
                raise ComplexError(
                    "module restriction leaves the module window")
            continue
        if any(vpart):
            out.set_entry(profile, vmulti, vpart)
    return HLeibInfty(vspace, out, carrier=carrier)


# ---------------------------------------------------------------------------
# degree -1 encodings of the ungraded structures
# ---------------------------------------------------------------------------

def concentrated_space(space, degree=-1):
    """A one-degree graded space wrapping an ungraded twisted space."""
    return GradedSpace({degree: space.dim}, {degree: space.twist},
                       prefix=getattr(space, "prefix", "x"))


def encode_cochain(c, degree=-1, cap=DEFAULT_ARITY_CAP, space=None):
    """Encode an ungraded same-space cochain as a one-component bundle.

    An arity-m cochain becomes the arity-m component, of raw degree m - 1,
    of a bundle on the concentration of its target space at the given
    degree.
    """
    for s in c.sources:
        if s.dim != c.target.dim or s.twist != c.target.twist:
            raise ValueError("encoding needs all slots in the target space")
    if space is None:
        space = concentrated_space(c.target, degree)
    m = c.arity
    out = GradedCochainBundle(space, degree * (1 - m), cap=cap)
    profile = (degree,) * m
    for multi in product(range(c.target.dim), repeat=m):
        vec = c.entry(multi)
        if any(vec):
            out.set_entry(profile, multi, vec)
    return out


def decode_component(b, k, space):
    """Read the arity-k component of a one-degree bundle as a cochain."""
    if len(b.space.degrees) != 1:
        raise ValueError("decoding needs a one-degree carrier")
    d = b.space.degrees[0]
    if b.space.dim(d) != space.dim:
        raise ValueError("carrier dimension does not match the target space")
    profile = (d,) * k

    def value(*multi):
        return b.entry(profile, multi)

    return Cochain.from_function([space] * k, space, value)


def encode_hom_leibniz(alg, cap=DEFAULT_ARITY_CAP):
    """A Hom-Leibniz algebra as a structure concentrated in degree -1."""
    space = concentrated_space(alg.space)
    bundle = GradedCochainBundle(space, 1, cap=cap)
    for i in range(alg.dim):
        for j in range(alg.dim):
            vec = alg.basis_bracket(i, j)
            if any(vec):
                bundle.set_entry((-1, -1), (i, j), vec)
    return HLeibInfty(space, bundle)


def encode_hom_lie(alg, cap=DEFAULT_ARITY_CAP):
    """A Hom-Lie algebra as a structure concentrated in degree -1.

    The skew bracket table is graded symmetric there because the arguments
    are odd.
    """
    space = concentrated_space(alg.space)
    bundle = GradedCochainBundle(space, 1, cap=cap)
    for i in range(alg.dim):
        for j in range(alg.dim):
            vec = alg.basis_bracket(i, j)
            if any(vec):
                bundle.set_entry((-1, -1), (i, j), vec)
    return HLInfty(space, bundle)


def encode_hom_lie_rep(rep, cap=DEFAULT_ARITY_CAP):
    """An ungraded representation as a degree -1 strongly homotopy one."""
    base = encode_hom_lie(rep.algebra, cap=cap)
    vspace = concentrated_space(rep.vspace)
    rb = RepCochainBundle(base.space, vspace, 1, cap=cap)
    for i in range(rep.algebra.dim):
        for a in range(rep.vspace.dim):
            vec = rep.basis_act(i, a)
            if any(vec):
                rb.set_entry((-1, -1), (i, a), vec)
    return HLInftyRep(base, vspace, rb)


def encode_embedding(carrier, tmat, cap=DEFAULT_ARITY_CAP):
    """A module-to-algebra matrix as a degree 0 candidate on the carrier.

    The carrier must be a degree -1 hemi-semidirect carrier; the matrix
    columns populate the arity-1 component on the module block.
    """
    d = -1
    ng = carrier.g_dim(d)
    nv = carrier.v_dim(d)
    if len(tmat) != ng or any(len(row) != nv for row in tmat):
        raise ValueError("matrix shape does not match the carrier blocks")
    out = GradedCochainBundle(carrier.space, 0, cap=cap)
    for a in range(nv):
        col = [Q(tmat[i][a]) for i in range(ng)]
        if any(col):
            out.set_entry((d,), (carrier.v_index(d, a),),
                          carrier.embed_g(d, col))
    return out


if __name__ == "__main__":
    import doctest

    raise SystemExit(doctest.testmod()[0])
