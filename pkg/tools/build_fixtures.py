"""Regenerate the fixture corpus under fixtures/.

Every file is either hand-written here (the parameterized ones, so the
parameter references survive) or serialized from the constructors in
homtensor.fixtures.  The builder asserts that each regular fixture parses,
validates, and is stable under parse -> serialize -> parse before writing
it; files whose names start with broken_ or invalid_ are deliberate
negatives and are exempt from the validation assertion.

Run from the repository root:

    python3 tools/build_fixtures.py
"""

import itertools
import os
import sys

sys.path.insert(0, os.path.join(os.path.dirname(__file__), "..", "src"))

from fractions import Fraction as Q

from homtensor import fixtures as fx
from homtensor import io as sfiles
from homtensor.complexes import adjoint_triple_rep
from homtensor.deformation import (check_inf_deformation_tensor,
                                   classify_h1_T, classify_h2_hllt)
from homtensor.homotopy import (GradedCochainBundle, GradedSpace,
                                HLInfty, HLInftyRep, RepCochainBundle,
                                encode_embedding, encode_hom_lie,
                                encode_hom_lie_rep, hemi_carrier,
                                hemi_semidirect_infty, homotopy_mc_check,
                                induced_hleib_infty, validate_hl_infty_rep,
                                validate_hleib_infty)
from homtensor.structures import adjoint_rep

OUT_DIR = os.path.join(os.path.dirname(__file__), "..", "fixtures")


def hl4_symbolic_bracket():
    """The hl4 family bracket with entries referencing parameters a, b."""
    c = [[["0"] * 4 for _ in range(4)] for _ in range(4)]

    def setbr(i, j, k, val, neg):
        c[i][j][k] = val
        c[j][i][k] = neg

    setbr(0, 1, 2, "-a", "a")
    setbr(0, 2, 1, "b", "-b")
    setbr(1, 3, 1, "-a", "a")
    setbr(2, 3, 2, "a", "-a")
    return c


HL4_TWIST = [["-1", "0", "0", "0"], ["0", "1", "0", "0"],
             ["0", "0", "-1", "0"], ["0", "0", "0", "1"]]


def hl4_family_raw():
    return {
        "format_version": 1,
        "kind": "hom_lie",
        "dim": 4,
        "parameters": {"a": "1", "b": "1"},
        "twist": HL4_TWIST,
        "bracket": hl4_symbolic_bracket(),
    }


def id_adjoint_hl4_raw():
    bracket = hl4_symbolic_bracket()
    return {
        "format_version": 1,
        "kind": "embedding_tensor",
        "parameters": {"a": "1", "b": "1"},
        "algebra": {"kind": "hom_lie", "dim": 4, "twist": HL4_TWIST,
                    "bracket": bracket},
        "module": {"dim": 4, "twist": HL4_TWIST},
        "rho": bracket,
        "tensor": [["1" if i == j else "0" for j in range(4)]
                   for i in range(4)],
    }


def graded_mc_two_degree():
    """A two-degree homotopy embedding tensor found by deterministic search.

    The representation is a pair of two-term complexes: the algebra and the
    module each live in degrees -1 and 0 with the arity-1 operation sending
    the degree -1 generator to the degree 0 generator.  The candidate tensor
    coefficients are the first grid point whose Maurer-Cartan residual
    vanishes with a nonzero candidate.
    """
    gspace = GradedSpace({-1: 1, 0: 1}, prefix="x")
    vspace = GradedSpace({-1: 1, 0: 1}, prefix="f")
    lb = GradedCochainBundle(gspace, 1, cap=4)
    lb.set_entry((-1,), (0,), [Q(1)])
    rb = RepCochainBundle(gspace, vspace, 1, cap=4)
    rb.set_entry((-1,), (0,), [Q(1)])
    rep = HLInftyRep(HLInfty(gspace, lb), vspace, rb)
    assert validate_hl_infty_rep(rep).ok
    carrier = hemi_carrier(rep)
    grid = [Q(0), Q(1), Q(-1)]
    best = None
    for c1, c2, c3, c4 in itertools.product(grid, repeat=4):
        pi = GradedCochainBundle(carrier.space, 0, cap=4)
        if c1:
            pi.set_entry((-1,), (carrier.v_index(-1, 0),),
                         carrier.embed_g(-1, [c1]))
        if c2:
            pi.set_entry((0,), (carrier.v_index(0, 0),),
                         carrier.embed_g(0, [c2]))
        if c3:
            pi.set_entry((-1, 0),
                         (carrier.v_index(-1, 0), carrier.v_index(0, 0)),
                         carrier.embed_g(-1, [c3]))
        if c4:
            pi.set_entry((0, 0),
                         (carrier.v_index(0, 0), carrier.v_index(0, 0)),
                         carrier.embed_g(0, [c4]))
        if pi.is_zero():
            continue
        if not homotopy_mc_check(rep, pi, validate=True).ok:
            continue
        induced = induced_hleib_infty(rep, pi)
        assert validate_hleib_infty(induced).ok
        score = (0 if induced.ops.is_zero() else 1)
        if best is None or score > best[0]:
            best = (score, pi)
            if score == 1:
                break
    assert best is not None, "no Maurer-Cartan candidate in the grid"
    return rep, best[1]


def build():
    os.makedirs(OUT_DIR, exist_ok=True)
    files = {}

    files["hl4_family.json"] = hl4_family_raw()
    files["id_adjoint_hl4.json"] = id_adjoint_hl4_raw()
    files["heisenberg3.json"] = sfiles.serialize_structure(
        "hom_lie", fx.heisenberg3())
    files["yau_twist_affine.json"] = sfiles.serialize_structure(
        "hom_lie", fx.yau_twist_affine())
    files["yau_twist_sl2_swap.json"] = sfiles.serialize_structure(
        "hom_lie", fx.yau_twist_sl2_swap())
    files["upper_triangular_commutator.json"] = sfiles.serialize_structure(
        "hom_lie", fx.upper_triangular_commutator()[0])
    files["abelian_2d.json"] = {
        "format_version": 1, "kind": "hom_lie", "dim": 2,
        "twist": [["1", "0"], ["0", "1"]],
        "bracket": [[["0", "0"], ["0", "0"]], [["0", "0"], ["0", "0"]]],
    }
    files["zero_dim.json"] = {
        "format_version": 1, "kind": "hom_lie", "dim": 0,
        "twist": [], "bracket": [],
    }
    files["nilpotent_leibniz.json"] = sfiles.serialize_structure(
        "hom_leibniz", fx.nilpotent_leibniz())

    files["adjoint_hl4_rep.json"] = sfiles.serialize_structure(
        "representation", adjoint_rep(fx.hl4_family(1, 1)))

    files["square_zero_derivation.json"] = sfiles.serialize_structure(
        "embedding_tensor", fx.square_zero_derivation_triple())
    files["sum_map_direct_sum.json"] = sfiles.serialize_structure(
        "embedding_tensor", fx.sum_map_triple(1, 1))
    files["projection_direct_sum.json"] = sfiles.serialize_structure(
        "embedding_tensor", fx.projection_triple(1, 1))
    files["equivariant_scaled_identity.json"] = sfiles.serialize_structure(
        "embedding_tensor", fx.equivariant_scaled_identity_triple(1, 1))
    files["crossed_module_heisenberg.json"] = sfiles.serialize_structure(
        "embedding_tensor", fx.crossed_module_triple())

    files["triple_rep_adjoint_hl4.json"] = sfiles.serialize_structure(
        "triple_rep",
        (fx.hl4_identity_triple(1, 1),
         adjoint_triple_rep(fx.hl4_identity_triple(1, 1))))

    tensor = fx.hl4_identity_triple(1, 1)
    h1, cocycles1, _ = classify_h1_T(tensor)
    assert cocycles1, "expected at least one degree-1 cocycle"
    files["deform_tensor_cocycle_hl4.json"] = sfiles.serialize_structure(
        "embedding_tensor", tensor, deformation={"t1": cocycles1[0]})
    h2, cocycles2, _ = classify_h2_hllt(tensor)
    assert cocycles2, "expected at least one degree-2 cocycle"
    fg, fv, t1 = cocycles2[0]
    mu1 = [[fg.entry((i, j)) for j in range(4)] for i in range(4)]
    rho1 = [[fv.entry((i, a)) for a in range(4)] for i in range(4)]
    files["deform_triple_cocycle_hl4.json"] = sfiles.serialize_structure(
        "embedding_tensor", tensor,
        deformation={"t1": t1, "mu1": mu1, "rho1": rho1})

    noncocycle = [[Q(0)] * 4 for _ in range(4)]
    noncocycle[0][0] = Q(1)
    noncocycle[1][1] = Q(1)
    bad_report = check_inf_deformation_tensor(tensor, noncocycle)
    assert not bad_report.ok, "the non-cocycle direction must fail"
    files["deform_noncocycle_hl4.json"] = sfiles.serialize_structure(
        "embedding_tensor", tensor, deformation={"t1": noncocycle})

    crossed = fx.crossed_module_triple()
    gr = encode_hom_lie_rep(crossed.rep)
    files["graded_rep_heisenberg.json"] = sfiles.serialize_structure(
        "graded_rep", gr)
    files["graded_hl_heisenberg.json"] = sfiles.serialize_structure(
        "graded_hl", encode_hom_lie(fx.heisenberg3()))
    files["graded_hleib_hemi_heisenberg.json"] = sfiles.serialize_structure(
        "graded_hleib", hemi_semidirect_infty(gr))
    files["graded_embedding_crossed_module.json"] = sfiles.serialize_structure(
        "graded_embedding", (gr, encode_embedding(hemi_carrier(gr), crossed.t)))

    hl4rep = encode_hom_lie_rep(tensor.rep)
    files["graded_embedding_hl4.json"] = sfiles.serialize_structure(
        "graded_embedding",
        (hl4rep, encode_embedding(hemi_carrier(hl4rep), tensor.t)))

    files["graded_mc_two_degree.json"] = sfiles.serialize_structure(
        "graded_embedding", graded_mc_two_degree())

    files["broken_multiplicativity.json"] = sfiles.serialize_structure(
        "hom_lie", fx.broken_multiplicativity())
    files["invalid_zero_denominator.json"] = {
        "format_version": 1, "kind": "hom_lie", "dim": 1,
        "twist": [["1/0"]], "bracket": [[["0"]]],
    }

    for name, raw in sorted(files.items()):
        negative = name.startswith(("broken_", "invalid_"))
        if not negative:
            sf = sfiles.parse_structure_dict(raw)
            first = sfiles.serialize_structure(sf.kind, sf.value,
                                               deformation=sf.deformation)
            again = sfiles.parse_structure_dict(first)
            second = sfiles.serialize_structure(again.kind, again.value,
                                                deformation=again.deformation)
            assert first == second, f"{name}: serialize is not idempotent"
        path = os.path.join(OUT_DIR, name)
        sfiles.write_structure(path, raw)
        print(f"wrote {name}")
    print(f"{len(files)} fixtures")


if __name__ == "__main__":
    build()
