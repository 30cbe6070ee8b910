from __future__ import annotations

from bicolim import corpus, zoo
from bicolim.colim import bifiltered_bicolimit
from bicolim.compact import (
    check_bicompact_against,
    lift_one_cell,
    lift_parallel_pair,
    lift_two_cell,
    refine_lifts,
    revalidate_two_cell_lift,
)
from bicolim.fincat import (
    NatTrans,
    build_functor,
    compose_functors,
    identity_nattrans,
)


def colim_of(name):
    return bifiltered_bicolimit(corpus.DIAGRAM_BUILDERS[name]())


# -- 1-cell lifting ------------------------------------------------------------


def test_lift_point_picks_a_representative():
    col = colim_of("const_arrow")
    pt = zoo.terminal()
    # a functor from the point: choose any colimit object
    target_obj = col.result.objects[0]
    a = build_functor(
        "pick", pt, col.result, {"*": target_obj}, {"id": col.result.identity[target_obj]}
    )
    lift = lift_one_cell(pt, col, a)
    assert lift.stage in col.diagram.source.cells0
    assert lift.comparison.is_invertible()
    # replay: q_stage ∘ b is isomorphic to a
    composed = compose_functors(col.cocone[lift.stage], lift.functor)
    assert lift.comparison.source.key() == a.key()
    assert lift.comparison.target.key() == composed.key()


def test_lift_arrow_through_chain():
    col = colim_of("chain_incl")
    arrow = zoo.walking_arrow()
    # the morphism u -> v exists from stage 1 onward; map the walking arrow
    # onto its image in the colimit
    q1 = col.cocone["1"]
    a = build_functor(
        "arr",
        arrow,
        col.result,
        {"s": q1.obj_map["u"], "t": q1.obj_map["v"]},
        {
            "id_s": col.result.identity[q1.obj_map["u"]],
            "id_t": col.result.identity[q1.obj_map["v"]],
            "f": q1.mor_map["le_u_v"],
        },
    )
    lift = lift_one_cell(arrow, col, a)
    assert lift.comparison.is_invertible()


def test_lift_of_cocone_composite_is_found_with_identity_like_comparison():
    col = colim_of("const_arrow")
    arrow = col.diagram.on0[sorted(col.diagram.source.cells0)[0]]
    i = sorted(col.diagram.source.cells0)[0]
    a = compose_functors(col.cocone[i], col.diagram.on1[col.diagram.source.unit[i]])
    lift = lift_one_cell(arrow, col, a)
    assert lift.comparison.is_invertible()


def test_two_lifts_admit_common_refinement():
    col = colim_of("chain_incl")
    pt = zoo.terminal()
    # the object u exists at every stage; lift the same point twice
    q0, q2 = col.cocone["0"], col.cocone["2"]
    a = build_functor("p0", pt, col.result, {"*": q0.obj_map["u"]}, {"id": col.result.identity[q0.obj_map["u"]]})
    lift1 = lift_one_cell(pt, col, a)
    # force a second, different lift by searching from the other end
    b2 = build_functor("b2", pt, col.diagram.on0["2"], {"*": "u"}, {"id": "le_u_u"})
    from bicolim.fincat import natural_iso_search

    beta2 = natural_iso_search(a, compose_functors(q2, b2))
    assert beta2 is not None
    from bicolim.compact import OneCellLift

    lift2 = OneCellLift("2", b2, beta2)
    ref = refine_lifts(pt, col, lift1, lift2)
    assert ref.cell.is_invertible()


# -- 2-cell lifting ------------------------------------------------------------


def test_identity_two_cell_lifts_to_identity_like_cell():
    col = colim_of("const_arrow")
    pt = zoo.terminal()
    obj = col.result.objects[0]
    a = build_functor("pk", pt, col.result, {"*": obj}, {"id": col.result.identity[obj]})
    phi = identity_nattrans(a)
    lift = lift_two_cell(pt, col, phi)
    assert revalidate_two_cell_lift(col, phi, lift)


def test_nonidentity_two_cell_lift():
    col = colim_of("const_arrow")
    pt = zoo.terminal()
    i = sorted(col.diagram.source.cells0)[0]
    q = col.cocone[i]
    a = build_functor("src", pt, col.result, {"*": q.obj_map["s"]}, {"id": col.result.identity[q.obj_map["s"]]})
    b = build_functor("tgt", pt, col.result, {"*": q.obj_map["t"]}, {"id": col.result.identity[q.obj_map["t"]]})
    phi = NatTrans("point_arrow", a, b, {"*": q.mor_map["f"]})
    lift = lift_two_cell(pt, col, phi)
    assert revalidate_two_cell_lift(col, phi, lift)


def test_parallel_pair_lifts_over_common_span():
    col = colim_of("const_arrow")
    pt = zoo.terminal()
    i = sorted(col.diagram.source.cells0)[0]
    q = col.cocone[i]
    a = build_functor("src", pt, col.result, {"*": q.obj_map["s"]}, {"id": col.result.identity[q.obj_map["s"]]})
    b = build_functor("tgt", pt, col.result, {"*": q.obj_map["t"]}, {"id": col.result.identity[q.obj_map["t"]]})
    phi = NatTrans("pa", a, b, {"*": q.mor_map["f"]})
    first, second = lift_parallel_pair(pt, col, phi, phi)
    assert (first.left, first.right, first.stage) == (second.left, second.right, second.stage)
    # degenerate pair: the two lifted cells may and do coincide
    assert first.cell.components == second.cell.components


# -- the comparison functor ------------------------------------------------------


PROBES = {
    "point": zoo.terminal,
    "arrow": zoo.walking_arrow,
}


def test_point_probe_positive_on_all_bifiltered_diagrams():
    for name in corpus.BIFILTERED_DIAGRAMS:
        pf = corpus.DIAGRAM_BUILDERS[name]()
        assert check_bicompact_against(zoo.terminal(), pf), name


def test_arrow_probe_positive_on_small_diagrams():
    for name in ("const_arrow", "two_cellular", "endo_proj"):
        pf = corpus.DIAGRAM_BUILDERS[name]()
        assert check_bicompact_against(zoo.walking_arrow(), pf), name


def test_biproduct_probe_positive():
    from bicolim.bilim import biproduct

    probe = biproduct(zoo.terminal(), zoo.walking_arrow()).category
    pf = corpus.DIAGRAM_BUILDERS["two_cellular"]()
    assert check_bicompact_against(probe, pf)


def test_biequalizer_probe_positive():
    from bicolim.bilim import biequalizer
    from bicolim.fincat import identity_functor

    arrow = zoo.walking_arrow()
    probe = biequalizer(identity_functor(arrow), identity_functor(arrow)).category
    pf = corpus.DIAGRAM_BUILDERS["endo_proj"]()
    assert check_bicompact_against(probe, pf)


def test_size_guard_propagates():
    import pytest

    from bicolim.fincat import SizeGuardError

    pf = corpus.DIAGRAM_BUILDERS["const_arrow"]()
    with pytest.raises(SizeGuardError):
        check_bicompact_against(zoo.walking_arrow(), pf, max_morphisms=3)


def test_pseudoretract_transfer():
    from bicolim.compact import pseudoretract_transfer
    from bicolim.fincat import NatTrans

    pt = zoo.terminal()
    arrow = zoo.walking_arrow()
    # the point retracts off the walking arrow through its target object
    section = build_functor("sect", pt, arrow, {"*": "t"}, {"id": "id_t"})
    retraction = build_functor(
        "retr", arrow, pt, {"s": "*", "t": "*"}, {m: "id" for m in arrow.dom}
    )
    comparison = NatTrans(
        "round", compose_functors(retraction, section), build_functor(
            "1pt", pt, pt, {"*": "*"}, {"id": "id"}
        ), {"*": "id"},
    )
    pf = corpus.DIAGRAM_BUILDERS["two_cellular"]()
    verdict = pseudoretract_transfer(pt, arrow, section, retraction, comparison, pf)
    assert verdict
    assert verdict.witnesses[0]["ambient"] and verdict.witnesses[0]["retract"]
