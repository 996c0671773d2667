"""Structure files: a versioned JSON schema for the objects the engines accept.

Index conventions are pinned by the schema and match the package everywhere:
bracket tensor ``c[i][j][k]`` means ``[e_i, e_j] = sum_k c[i][j][k] e_k``;
action tensor ``r[i][a][b]`` means ``rho(e_i) f_a = sum_b r[i][a][b] f_b``;
a tensor matrix ``T[i][a]`` maps ``f_a`` to ``sum_i T[i][a] e_i``.

Every scalar entry is a rational written as a string ("p" or "p/q", never a
float) or an integer, optionally scaled by a named parameter: "a", "-a",
"2/3*a".  Parameters are declared in the file's "parameters" table (their
default values) and can be overridden at load time; referencing an
undeclared name is an error, as is a zero denominator.

Kinds: hom_lie, hom_leibniz, representation (Lie action "rho", or Leibniz
actions "rho_left"/"rho_right"), embedding_tensor (alias "triple" accepted
on input), triple_rep, graded_hl, graded_hleib, graded_rep,
graded_embedding.  An embedding_tensor file may carry a "deformation"
section (a "t1" matrix, optionally with "mu1"/"rho1" tensors) consumed by
the deformation commands.

Serialization is deterministic: sorted keys, two-space indent, rationals as
strings, and a trailing newline.  parse -> serialize -> parse is the
identity on every fixture.
"""

import json
import re

from fractions import Fraction as Q

from .linalg import format_rational, parse_rational
from .structures import (
    EmbeddingTensor,
    HomLeibnizAlgebra,
    HomLeibnizRep,
    HomLieAlgebra,
    HomLieRep,
    HomSpace,
)
from .complexes import PairingMap, TripleRepresentation
from .homotopy import (
    GradedCochainBundle,
    GradedSpace,
    HLeibInfty,
    HLInfty,
    HLInftyRep,
    RepCochainBundle,
    DEFAULT_ARITY_CAP,
    hemi_carrier,
)

FORMAT_VERSION = 1

KINDS = ("hom_lie", "hom_leibniz", "representation", "embedding_tensor",
         "triple_rep", "graded_hl", "graded_hleib", "graded_rep",
         "graded_embedding")

_PARAM_ENTRY = re.compile(
    r"^(?P<sign>-?)(?:(?P<coeff>\d+(?:/\d+)?)\*)?(?P<name>[A-Za-z_][A-Za-z0-9_]*)$")


class StructureFileError(ValueError):
    """Malformed structure file: bad syntax, shape, or parameter."""


class StructureFile:
    """A parsed structure file: the kind tag and the constructed object."""

    def __init__(self, kind, value, parameters, raw, deformation=None):
        self.kind = kind
        self.value = value
        self.parameters = parameters
        self.raw = raw
        self.deformation = deformation

    def __repr__(self):
        return f"StructureFile(kind={self.kind!r})"


def _entry(value, params, path):
    """One scalar: a rational literal or [-][p/q*]name with a known name."""
    if isinstance(value, str):
        m = _PARAM_ENTRY.match(value.strip())
        if m is not None:
            name = m.group("name")
            if name not in params:
                raise StructureFileError(
                    f"{path}: unknown parameter {name!r} "
                    f"(declared: {sorted(params) or 'none'})")
            coeff = Q(1) if m.group("coeff") is None \
                else parse_rational(m.group("coeff"))
            if m.group("sign"):
                coeff = -coeff
            return coeff * params[name]
    try:
        return parse_rational(value)
    except (ValueError, TypeError) as exc:
        raise StructureFileError(f"{path}: {exc}") from exc


def _vector(data, length, params, path):
    if not isinstance(data, list) or len(data) != length:
        raise StructureFileError(
            f"{path}: expected a list of length {length}")
    return [_entry(x, params, f"{path}[{i}]") for i, x in enumerate(data)]


def _matrix(data, rows, cols, params, path):
    if not isinstance(data, list) or len(data) != rows:
        raise StructureFileError(f"{path}: expected {rows} rows")
    return [_vector(row, cols, params, f"{path}[{i}]")
            for i, row in enumerate(data)]


def _tensor3(data, d0, d1, d2, params, path):
    if not isinstance(data, list) or len(data) != d0:
        raise StructureFileError(f"{path}: expected {d0} planes")
    return [_matrix(plane, d1, d2, params, f"{path}[{i}]")
            for i, plane in enumerate(data)]


def _join(path, name):
    return f"{path}.{name}" if path else name


def _dim(section, path):
    dim = section.get("dim")
    if not isinstance(dim, int) or dim < 0:
        raise StructureFileError(
            f"{_join(path, 'dim')}: expected a nonnegative integer")
    return dim


def _space(section, params, path, prefix="e"):
    dim = _dim(section, path)
    twist = _matrix(section.get("twist"), dim, dim, params,
                    _join(path, "twist"))
    return HomSpace(dim, twist, prefix=prefix)


def _algebra(section, params, path):
    kind = section.get("kind", "hom_lie")
    if kind not in ("hom_lie", "hom_leibniz"):
        raise StructureFileError(
            f"{_join(path, 'kind')}: expected hom_lie or hom_leibniz")
    space = _space(section, params, path)
    n = space.dim
    bracket = _tensor3(section.get("bracket"), n, n, n, params,
                       _join(path, "bracket"))
    cls = HomLieAlgebra if kind == "hom_lie" else HomLeibnizAlgebra
    return cls(space, bracket)


def _representation(data, params, path=""):
    pre = f"{path}." if path else ""
    alg_section = data.get("algebra")
    if not isinstance(alg_section, dict):
        raise StructureFileError(f"{pre}algebra: expected an object")
    alg = _algebra(alg_section, params, f"{pre}algebra")
    mod = data.get("module")
    if not isinstance(mod, dict):
        raise StructureFileError(f"{pre}module: expected an object")
    vspace = _space(mod, params, f"{pre}module", prefix="f")
    ng, nv = alg.dim, vspace.dim
    if "rho" in data:
        rho = _tensor3(data["rho"], ng, nv, nv, params, f"{pre}rho")
        return HomLieRep(alg, vspace, rho)
    if "rho_left" in data or "rho_right" in data:
        rho_l = _tensor3(data.get("rho_left"), ng, nv, nv, params,
                         f"{pre}rho_left")
        rho_r = _tensor3(data.get("rho_right"), nv, ng, nv, params,
                         f"{pre}rho_right")
        return HomLeibnizRep(alg, vspace, rho_l, rho_r)
    raise StructureFileError(
        f"{pre}rho: expected 'rho' or 'rho_left' plus 'rho_right'")


def _embedding(data, params, path=""):
    rep = _representation(data, params, path)
    if not isinstance(rep, HomLieRep):
        raise StructureFileError(
            "embedding tensors need a Lie-type representation with 'rho'")
    pre = f"{path}." if path else ""
    t = _matrix(data.get("tensor"), rep.algebra.dim, rep.vspace.dim, params,
                f"{pre}tensor")
    return EmbeddingTensor(rep, t)


def _deformation_section(data, tensor, params):
    section = data.get("deformation")
    if section is None:
        return None
    ng, nv = tensor.algebra.dim, tensor.vspace.dim
    out = {"t1": _matrix(section.get("t1"), ng, nv, params, "deformation.t1")}
    if "mu1" in section or "rho1" in section:
        out["mu1"] = _tensor3(section.get("mu1"), ng, ng, ng, params,
                              "deformation.mu1")
        out["rho1"] = _tensor3(section.get("rho1"), ng, nv, nv, params,
                               "deformation.rho1")
    return out


def _triple_rep(data, params):
    base = data.get("base")
    if not isinstance(base, dict):
        raise StructureFileError("base: expected an object")
    tensor = _embedding(base, params, "base")
    alg = tensor.algebra
    hspace = _space(data.get("h_module"), params, "h_module", prefix="h")
    wspace = _space(data.get("w_module"), params, "w_module", prefix="w")
    rho_h = _tensor3(data.get("rho_h"), alg.dim, hspace.dim, hspace.dim,
                     params, "rho_h")
    rho_w = _tensor3(data.get("rho_w"), alg.dim, wspace.dim, wspace.dim,
                     params, "rho_w")
    s = _matrix(data.get("s"), hspace.dim, wspace.dim, params, "s")
    theta_raw = data.get("theta")
    if not isinstance(theta_raw, list) or len(theta_raw) != tensor.vspace.dim:
        raise StructureFileError(
            f"theta: expected {tensor.vspace.dim} rows (one per module basis vector)")
    theta = []
    for a, row in enumerate(theta_raw):
        if not isinstance(row, list) or len(row) != hspace.dim:
            raise StructureFileError(f"theta[{a}]: expected {hspace.dim} entries")
        theta.append([_vector(vec, wspace.dim, params, f"theta[{a}][{i}]")
                      for i, vec in enumerate(row)])
    hrep = HomLieRep(alg, hspace, rho_h)
    wrep = HomLieRep(alg, wspace, rho_w)
    trep = TripleRepresentation(hrep, wrep, s, PairingMap(
        tensor.vspace.dim, hspace.dim, wspace.dim, theta))
    return tensor, trep


def _graded_space(section, params, path, prefix="x"):
    if not isinstance(section, dict):
        raise StructureFileError(f"{path}: expected an object")
    dims_raw = section.get("dims")
    if not isinstance(dims_raw, dict) or not dims_raw:
        raise StructureFileError(f"{path}.dims: expected a nonempty object")
    dims = {}
    for key, val in dims_raw.items():
        try:
            d = int(key)
        except ValueError as exc:
            raise StructureFileError(
                f"{path}.dims: degree keys must be integers, got {key!r}") from exc
        if not isinstance(val, int) or val < 0:
            raise StructureFileError(
                f"{path}.dims[{key}]: expected a nonnegative integer")
        dims[d] = val
    twists = {}
    for key, mat in (section.get("twists") or {}).items():
        d = int(key)
        if dims.get(d, 0) == 0:
            raise StructureFileError(
                f"{path}.twists[{key}]: twist given for a zero degree")
        twists[d] = _matrix(mat, dims[d], dims[d], params,
                            f"{path}.twists[{key}]")
    return GradedSpace(dims, twists, prefix=prefix)


def _bundle_entries(entries, params, path):
    if entries is None:
        return []
    if not isinstance(entries, list):
        raise StructureFileError(f"{path}: expected a list of entries")
    out = []
    for idx, entry in enumerate(entries):
        where = f"{path}[{idx}]"
        if not isinstance(entry, dict):
            raise StructureFileError(f"{where}: expected an object")
        profile = entry.get("profile")
        multi = entry.get("multi")
        value = entry.get("value")
        if not isinstance(profile, list) or \
                not all(isinstance(d, int) for d in profile):
            raise StructureFileError(f"{where}.profile: expected integer degrees")
        if not isinstance(multi, list) or len(multi) != len(profile) or \
                not all(isinstance(i, int) for i in multi):
            raise StructureFileError(
                f"{where}.multi: expected {len(profile)} integer indices")
        if not isinstance(value, list):
            raise StructureFileError(f"{where}.value: expected a list")
        vec = [_entry(x, params, f"{where}.value[{i}]")
               for i, x in enumerate(value)]
        out.append((tuple(profile), tuple(multi), vec))
    return out


def _cap(data):
    cap = data.get("cap", DEFAULT_ARITY_CAP)
    if not isinstance(cap, int) or cap < 1:
        raise StructureFileError("cap: expected a positive integer")
    return cap


def _fill_bundle(bundle, entries, path):
    for idx, (profile, multi, vec) in enumerate(entries):
        try:
            bundle.set_entry(profile, multi, vec)
        except ValueError as exc:
            raise StructureFileError(f"{path}[{idx}]: {exc}") from exc
    return bundle


def _graded_ops(data, params, kind):
    space = _graded_space(data.get("space"), params, "space")
    bundle = GradedCochainBundle(space, 1, cap=_cap(data))
    _fill_bundle(bundle, _bundle_entries(data.get("ops"), params, "ops"),
                 "ops")
    if kind == "graded_hl":
        return HLInfty(space, bundle)
    return HLeibInfty(space, bundle)


def _graded_rep(data, params):
    gspace = _graded_space(data.get("algebra_space"), params,
                           "algebra_space", prefix="x")
    vspace = _graded_space(data.get("module_space"), params,
                           "module_space", prefix="f")
    cap = _cap(data)
    lb = GradedCochainBundle(gspace, 1, cap=cap)
    _fill_bundle(lb, _bundle_entries(data.get("brackets"), params,
                                     "brackets"), "brackets")
    rb = RepCochainBundle(gspace, vspace, 1, cap=cap)
    _fill_bundle(rb, _bundle_entries(data.get("actions"), params, "actions"),
                 "actions")
    return HLInftyRep(HLInfty(gspace, lb), vspace, rb)


def _graded_embedding(data, params):
    rep = _graded_rep(data, params)
    carrier = hemi_carrier(rep)
    pi = GradedCochainBundle(carrier.space, 0, cap=_cap(data))
    entries = _bundle_entries(data.get("tensor"), params, "tensor")
    for idx, (profile, multi, vec) in enumerate(entries):
        outdeg = sum(profile)
        outdim = rep.base.space.dim(outdeg)
        if len(vec) != outdim:
            raise StructureFileError(
                f"tensor[{idx}].value: expected {outdim} algebra coordinates "
                f"at degree {outdeg}")
        hmulti = []
        for d, a in zip(profile, multi):
            if not 0 <= a < rep.vspace.dim(d):
                raise StructureFileError(
                    f"tensor[{idx}].multi: module index {a} out of range "
                    f"at degree {d}")
            hmulti.append(carrier.v_index(d, a))
        try:
            pi.set_entry(profile, tuple(hmulti), carrier.embed_g(outdeg, vec))
        except ValueError as exc:
            raise StructureFileError(f"tensor[{idx}]: {exc}") from exc
    return rep, pi


def _resolve_parameters(raw, overrides):
    params = {}
    declared = raw.get("parameters") or {}
    if not isinstance(declared, dict):
        raise StructureFileError("parameters: expected an object")
    for name, value in declared.items():
        try:
            params[name] = parse_rational(value)
        except (ValueError, TypeError) as exc:
            raise StructureFileError(f"parameters.{name}: {exc}") from exc
    for name, value in (overrides or {}).items():
        if name not in params:
            raise StructureFileError(
                f"--param {name}: unknown parameter "
                f"(declared: {sorted(params) or 'none'})")
        try:
            params[name] = parse_rational(value)
        except (ValueError, TypeError) as exc:
            raise StructureFileError(f"--param {name}: {exc}") from exc
    return params


def parse_structure_dict(raw, overrides=None, arity_cap=None):
    """Construct engine objects from an already-decoded structure dict."""
    if not isinstance(raw, dict):
        raise StructureFileError("structure file must be a JSON object")
    if arity_cap is not None:
        raw = {**raw, "cap": arity_cap}
    version = raw.get("format_version")
    if version != FORMAT_VERSION:
        raise StructureFileError(
            f"format_version: expected {FORMAT_VERSION}, got {version!r}")
    kind = raw.get("kind")
    if kind == "triple":
        kind = "embedding_tensor"
    if kind not in KINDS:
        raise StructureFileError(
            f"kind: expected one of {', '.join(KINDS)}, got {kind!r}")
    params = _resolve_parameters(raw, overrides)
    deformation = None
    if kind in ("hom_lie", "hom_leibniz"):
        value = _algebra({**raw, "kind": kind}, params, "")
    elif kind == "representation":
        value = _representation(raw, params)
    elif kind == "embedding_tensor":
        value = _embedding(raw, params)
        deformation = _deformation_section(raw, value, params)
    elif kind == "triple_rep":
        value = _triple_rep(raw, params)
    elif kind in ("graded_hl", "graded_hleib"):
        value = _graded_ops(raw, params, kind)
    elif kind == "graded_rep":
        value = _graded_rep(raw, params)
    else:
        value = _graded_embedding(raw, params)
    return StructureFile(kind, value, params, raw, deformation)


def parse_structure(path, overrides=None, arity_cap=None):
    """Load, substitute parameters, shape-check, and construct the objects."""
    try:
        with open(path, "r", encoding="utf-8") as fh:
            raw = json.load(fh)
    except FileNotFoundError as exc:
        raise StructureFileError(f"{path}: file not found") from exc
    except json.JSONDecodeError as exc:
        raise StructureFileError(
            f"{path}: invalid JSON at line {exc.lineno} column {exc.colno}: "
            f"{exc.msg}") from exc
    return parse_structure_dict(raw, overrides, arity_cap=arity_cap)


# ---------------------------------------------------------------------------
# serialization
# ---------------------------------------------------------------------------

def _fmt_vector(vec):
    return [format_rational(x) for x in vec]


def _fmt_matrix(mat):
    return [_fmt_vector(row) for row in mat]


def _fmt_tensor3(tensor):
    return [_fmt_matrix(plane) for plane in tensor]


def _space_dict(space):
    return {"dim": space.dim, "twist": _fmt_matrix(space.twist)}


def _algebra_dict(alg):
    kind = "hom_leibniz" if isinstance(alg, HomLeibnizAlgebra) else "hom_lie"
    out = _space_dict(alg.space)
    out["kind"] = kind
    out["bracket"] = _fmt_tensor3(alg.bracket)
    return out


def _rep_fields(rep):
    out = {"algebra": _algebra_dict(rep.algebra),
           "module": _space_dict(rep.vspace)}
    if isinstance(rep, HomLeibnizRep):
        out["rho_left"] = _fmt_tensor3(rep.rho_l)
        out["rho_right"] = _fmt_tensor3(rep.rho_r)
    else:
        out["rho"] = _fmt_tensor3(rep.rho)
    return out


def _graded_space_dict(space):
    out = {"dims": {str(d): space.dim(d) for d in space.degrees}}
    twists = {}
    for d in space.degrees:
        tw = space.twist(d)
        n = space.dim(d)
        if any(tw[i][j] != (1 if i == j else 0)
               for i in range(n) for j in range(n)):
            twists[str(d)] = _fmt_matrix(tw)
    if twists:
        out["twists"] = twists
    return out


def _bundle_entry_list(items):
    return [{"profile": list(profile), "multi": list(multi),
             "value": _fmt_vector(vec)}
            for profile, multi, vec in items]


def serialize_structure(kind, value, parameters=None, deformation=None):
    """The canonical dict for a structure; inverse of parse up to defaults."""
    out = {"format_version": FORMAT_VERSION, "kind": kind}
    if parameters:
        out["parameters"] = {name: format_rational(v)
                             for name, v in parameters.items()}
    if kind in ("hom_lie", "hom_leibniz"):
        section = _algebra_dict(value)
        section.pop("kind")
        out.update(section)
    elif kind == "representation":
        out.update(_rep_fields(value))
    elif kind == "embedding_tensor":
        out.update(_rep_fields(value.rep))
        out["tensor"] = _fmt_matrix(value.t)
        if deformation:
            section = {"t1": _fmt_matrix(deformation["t1"])}
            if "mu1" in deformation:
                section["mu1"] = _fmt_tensor3(deformation["mu1"])
                section["rho1"] = _fmt_tensor3(deformation["rho1"])
            out["deformation"] = section
    elif kind == "triple_rep":
        tensor, trep = value
        base = _rep_fields(tensor.rep)
        base["tensor"] = _fmt_matrix(tensor.t)
        out["base"] = base
        out["h_module"] = _space_dict(trep.hspace)
        out["w_module"] = _space_dict(trep.wspace)
        out["rho_h"] = _fmt_tensor3(trep.hrep.rho)
        out["rho_w"] = _fmt_tensor3(trep.wrep.rho)
        out["s"] = _fmt_matrix(trep.s)
        out["theta"] = [[_fmt_vector(vec) for vec in row]
                        for row in trep.theta.theta]
    elif kind in ("graded_hl", "graded_hleib"):
        out["space"] = _graded_space_dict(value.space)
        out["cap"] = value.ops.cap
        out["ops"] = _bundle_entry_list(value.ops.items())
    elif kind == "graded_rep":
        out.update(_graded_rep_fields(value))
    elif kind == "graded_embedding":
        rep, pi = value
        out.update(_graded_rep_fields(rep))
        carrier = hemi_carrier(rep)
        entries = []
        for profile, multi, vec in pi.items():
            outdeg = sum(profile)
            if not carrier.is_v_multi(profile, multi) or \
                    any(x != 0 for x in carrier.v_part(outdeg, vec)):
                raise StructureFileError(
                    "tensor entries must be supported on module words with "
                    "algebra-valued output")
            entries.append({
                "profile": list(profile),
                "multi": [i - carrier.g_dim(d) for d, i in zip(profile, multi)],
                "value": _fmt_vector(carrier.g_part(outdeg, vec)),
            })
        out["tensor"] = entries
    else:
        raise StructureFileError(f"cannot serialize kind {kind!r}")
    return out


def _graded_rep_fields(rep):
    return {
        "algebra_space": _graded_space_dict(rep.base.space),
        "module_space": _graded_space_dict(rep.vspace),
        "cap": rep.ops.cap,
        "brackets": _bundle_entry_list(rep.base.ops.items()),
        "actions": _bundle_entry_list(rep.ops.items()),
    }


def dumps_canonical(data):
    """Deterministic bytes for a JSON-compatible dict."""
    return json.dumps(data, sort_keys=True, indent=2) + "\n"


def write_structure(path, data):
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(dumps_canonical(data))


if __name__ == "__main__":
    import doctest

    raise SystemExit(doctest.testmod()[0])
