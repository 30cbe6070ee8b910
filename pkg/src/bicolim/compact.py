"""Lifting finite categories through filtered colimits.

A probe category is tested against one concrete diagram at a time: functors
into the colimit are lifted to a stage, 2-cells between lifts are lifted to
stage transformations with pasting certificates, and the canonical comparison
from the colimit of mapped functor categories is analysed directly for
essential surjectivity and full faithfulness (the definition quantifies over
this one functor, so no generic equivalence search is involved).

Verdicts are evidence for the supplied diagram only; no claim is made about
all filtered diagrams at once.
"""

from __future__ import annotations

from dataclasses import dataclass

from .colim import ColimitCat, bifiltered_bicolimit
from .fincat import (
    FinCat,
    Functor,
    FunctorCategory,
    NatTrans,
    ValidationError,
    build_functor,
    compose_functors,
    enumerate_functors,
    enumerate_nattrans,
    functor_category,
    functor_is_equivalence,
    identity_functor,
    natural_iso_search,
    whisker_functor,
    whisker_nattrans,
)
from .twocat import CatPseudoFunctor, build_pseudofunctor
from .verdict import Verdict, negative, positive


@dataclass(eq=False)
class OneCellLift:
    stage: str
    functor: Functor           # b : K -> F(stage)
    comparison: NatTrans       # invertible a ⇒ q_stage ∘ b


@dataclass(eq=False)
class Refinement:
    stage: str
    left: str                  # d : i1 -> stage
    right: str                 # d' : i2 -> stage
    cell: NatTrans             # invertible F(d)∘b1 ⇒ F(d')∘b2


@dataclass(eq=False)
class TwoCellLift:
    source: OneCellLift
    target: OneCellLift
    stage: str
    left: str
    right: str
    cell: NatTrans             # F(left)∘b1 ⇒ F(right)∘b2


def lift_one_cell(probe: FinCat, colim: ColimitCat, fun: Functor) -> OneCellLift:
    """Factor a functor into the colimit through a stage, up to invertible
    comparison; exhaustive search in stage order."""
    pf = colim.diagram
    for i in sorted(pf.source.cells0):
        q = colim.cocone[i]
        for b in enumerate_functors(probe, pf.on0[i]):
            beta = natural_iso_search(fun, compose_functors(q, b))
            if beta is not None:
                b.name = f"lift@{i}"
                return OneCellLift(i, b, beta)
    raise ValidationError(
        "lift", [f"no stage factorization for {fun.name!r}; the diagram data is inconsistent"]
    )


def _pasting_components(
    colim: ColimitCat, lift1: OneCellLift, lift2: OneCellLift, d: str, d2: str, cell: NatTrans
) -> dict[str, str]:
    """Component at each probe object of (theta ∘ q(cell) ∘ theta^{-1})."""
    res = colim.result
    out = {}
    for k in cell.components:
        start = colim.transitions[d].components[lift1.functor.obj_map[k]]
        back = res.inverse(start)
        assert back is not None
        j = colim.diagram.source.one_home[d][1]
        mid = colim.cocone[j].mor_map[cell.components[k]]
        finish = colim.transitions[d2].components[lift2.functor.obj_map[k]]
        out[k] = res.table[(finish, res.table[(mid, back)])]
    return out


def refine_lifts(
    probe: FinCat, colim: ColimitCat, lift1: OneCellLift, lift2: OneCellLift
) -> Refinement:
    """Common refinement of two lifts of the same functor.

    Searches spans out of the two stages and invertible stage 2-cells whose
    pasting with the colimit transitions recovers the comparison mismatch.
    """
    pf = colim.diagram
    base = pf.source
    res = colim.result
    want = {}
    for k in probe.objects:
        b1k = lift1.comparison.components[k]
        back = res.inverse(b1k)
        assert back is not None
        want[k] = res.table[(lift2.comparison.components[k], back)]
    for j in sorted(base.cells0):
        for d in base.cells1(lift1.stage, j):
            fd_b1 = compose_functors(pf.on1[d], lift1.functor)
            for d2 in base.cells1(lift2.stage, j):
                fd2_b2 = compose_functors(pf.on1[d2], lift2.functor)
                for comps in enumerate_nattrans(fd_b1, fd2_b2):
                    gamma = NatTrans("gamma", fd_b1, fd2_b2, comps)
                    if not gamma.is_invertible():
                        continue
                    pasted = _pasting_components(colim, lift1, lift2, d, d2, gamma)
                    if pasted == want:
                        return Refinement(j, d, d2, gamma)
    raise ValidationError("refine", ["no common refinement found; diagram inconsistent"])


def lift_two_cell(
    probe: FinCat,
    colim: ColimitCat,
    phi: NatTrans,
    lifts: tuple[OneCellLift, OneCellLift] | None = None,
) -> TwoCellLift:
    """Lift a 2-cell between colimit-valued functors to a stage 2-cell whose
    pasting with the transition isomorphisms recovers it exactly."""
    res = colim.result
    if lifts is None:
        lift1 = lift_one_cell(probe, colim, phi.source)
        lift2 = lift_one_cell(probe, colim, phi.target)
    else:
        lift1, lift2 = lifts
    want = {}
    for k in probe.objects:
        back = res.inverse(lift1.comparison.components[k])
        assert back is not None
        moved = res.table[(phi.components[k], back)]
        want[k] = res.table[(lift2.comparison.components[k], moved)]
    pf = colim.diagram
    base = pf.source
    for j in sorted(base.cells0):
        for d in base.cells1(lift1.stage, j):
            fd_b1 = compose_functors(pf.on1[d], lift1.functor)
            for d2 in base.cells1(lift2.stage, j):
                fd2_b2 = compose_functors(pf.on1[d2], lift2.functor)
                for comps in enumerate_nattrans(fd_b1, fd2_b2):
                    psi = NatTrans("psi", fd_b1, fd2_b2, comps)
                    if _pasting_components(colim, lift1, lift2, d, d2, psi) == want:
                        return TwoCellLift(lift1, lift2, j, d, d2, psi)
    raise ValidationError("lift2", ["no 2-cell lift found; diagram inconsistent"])


def lift_parallel_pair(
    probe: FinCat, colim: ColimitCat, phi: NatTrans, psi: NatTrans
) -> tuple[TwoCellLift, TwoCellLift]:
    """Lift a parallel pair over one common span of stages."""
    lift1 = lift_one_cell(probe, colim, phi.source)
    lift2 = lift_one_cell(probe, colim, phi.target)
    first = lift_two_cell(probe, colim, phi, (lift1, lift2))
    res = colim.result
    want = {}
    for k in probe.objects:
        back = res.inverse(lift1.comparison.components[k])
        assert back is not None
        moved = res.table[(psi.components[k], back)]
        want[k] = res.table[(lift2.comparison.components[k], moved)]
    pf = colim.diagram
    fd_b1 = compose_functors(pf.on1[first.left], lift1.functor)
    fd2_b2 = compose_functors(pf.on1[first.right], lift2.functor)
    for comps in enumerate_nattrans(fd_b1, fd2_b2):
        cand = NatTrans("xi", fd_b1, fd2_b2, comps)
        if _pasting_components(colim, lift1, lift2, first.left, first.right, cand) == want:
            return first, TwoCellLift(lift1, lift2, first.stage, first.left, first.right, cand)
    raise ValidationError("lift2", ["no common-span lift for the parallel pair"])


def revalidate_two_cell_lift(colim: ColimitCat, phi: NatTrans, lift: TwoCellLift) -> bool:
    res = colim.result
    for k in phi.components:
        back = res.inverse(lift.source.comparison.components[k])
        assert back is not None
        want = res.table[(lift.target.comparison.components[k], res.table[(phi.components[k], back)])]
        got = _pasting_components(
            colim, lift.source, lift.target, lift.left, lift.right, lift.cell
        )[k]
        if got != want:
            return False
    return True


# ---------------------------------------------------------------------------
# The comparison functor


def mapped_diagram(
    probe: FinCat, pf: CatPseudoFunctor, max_morphisms: int = 100_000
) -> tuple[CatPseudoFunctor, dict[str, FunctorCategory]]:
    """The diagram of functor categories [probe, F(-)] over the same index."""
    tc = pf.source
    fcs = {i: functor_category(probe, pf.on0[i], max_morphisms) for i in tc.cells0}
    fun_name: dict[str, dict[tuple, str]] = {
        i: {f.key(): n for n, f in fcs[i].functors.items()} for i in tc.cells0
    }
    nat_name: dict[str, dict[tuple, str]] = {}
    for i in tc.cells0:
        nat_name[i] = {}
        for n, t in fcs[i].transformations.items():
            nat_name[i][(t.source.key(), t.target.key(), tuple(sorted(t.components.items())))] = n

    def functor_image(d: str) -> Functor:
        i, j = tc.one_home[d]
        post = pf.on1[d]
        obj_map = {}
        mor_map = {}
        for n, g in fcs[i].functors.items():
            obj_map[n] = fun_name[j][compose_functors(post, g).key()]
        for n, t in fcs[i].transformations.items():
            image = whisker_functor(post, t)
            mor_map[n] = nat_name[j][
                (image.source.key(), image.target.key(), tuple(sorted(image.components.items())))
            ]
        return build_functor(f"[K,{d}]", fcs[i].category, fcs[j].category, obj_map, mor_map)

    on1 = {d: functor_image(d) for d in tc.one_home}

    def nat_image(i: str, j: str, src_d: str, tgt_d: str, cell: NatTrans) -> NatTrans:
        comps = {}
        for n, g in fcs[i].functors.items():
            image = whisker_nattrans(cell, g)
            comps[n] = nat_name[j][
                (image.source.key(), image.target.key(), tuple(sorted(image.components.items())))
            ]
        return NatTrans(f"[K,{cell.name}]", on1[src_d], on1[tgt_d], comps)

    on2 = {}
    for b in tc.two_cells:
        i, j = tc.two_home[b]
        on2[b] = nat_image(i, j, tc.dom2(b), tc.cod2(b), pf.on2[b])
    comp = {}
    for (g, d), cell in pf.comp.items():
        i = tc.one_home[d][0]
        k = tc.one_home[g][1]
        comps = {}
        for n, fn in fcs[i].functors.items():
            image = whisker_nattrans(cell, fn)
            comps[n] = nat_name[k][
                (image.source.key(), image.target.key(), tuple(sorted(image.components.items())))
            ]
        comp[(g, d)] = NatTrans(
            f"[K,c({g},{d})]",
            compose_functors(on1[g], on1[d]),
            on1[tc.hcomp1[(g, d)]],
            comps,
        )
    unit_c = {}
    for i in tc.cells0:
        comps = {}
        for n, fn in fcs[i].functors.items():
            image = whisker_nattrans(pf.unit_c[i], fn)
            comps[n] = nat_name[i][
                (image.source.key(), image.target.key(), tuple(sorted(image.components.items())))
            ]
        unit_c[i] = NatTrans(
            f"[K,u({i})]",
            identity_functor(fcs[i].category),
            on1[tc.unit[i]],
            comps,
        )
    mapped = build_pseudofunctor(
        f"[K,{pf.name}]", tc, {i: fcs[i].category for i in tc.cells0}, on1, on2, comp, unit_c
    )
    return mapped, fcs


def check_bicompact_against(
    probe: FinCat, pf: CatPseudoFunctor, max_morphisms: int = 100_000
) -> Verdict:
    """Analyse the canonical comparison for one probe against one diagram.

    Computes the colimit of mapped functor categories, the functor category
    into the colimit, and checks the comparison functor between them for
    essential surjectivity and full faithfulness directly.
    """
    colim = bifiltered_bicolimit(pf)
    mapped, fcs = mapped_diagram(probe, pf, max_morphisms)
    inner = bifiltered_bicolimit(mapped, precheck=False)
    outer = functor_category(probe, colim.result, max_morphisms)
    outer_fun_name = {f.key(): n for n, f in outer.functors.items()}
    outer_nat_name = {
        (t.source.key(), t.target.key(), tuple(sorted(t.components.items()))): n
        for n, t in outer.transformations.items()
    }

    obj_map = {}
    for (i, gname), oname in inner.obj_name.items():
        composed = compose_functors(colim.cocone[i], fcs[i].functors[gname])
        obj_map[oname] = outer_fun_name[composed.key()]
    mor_map = {}
    for cname, rep in inner.class_rep.items():
        i1, g1 = rep.src
        i2, g2 = rep.dst
        j = rep.apex
        chi = fcs[j].transformations[rep.cell]
        src_fun = outer.functors[obj_map[inner.obj_name[(i1, g1)]]]
        tgt_fun = outer.functors[obj_map[inner.obj_name[(i2, g2)]]]
        comps = {}
        for k in probe.objects:
            start = colim.transitions[rep.left].components[fcs[i1].functors[g1].obj_map[k]]
            back = colim.result.inverse(start)
            assert back is not None
            mid = colim.cocone[j].mor_map[chi.components[k]]
            finish = colim.transitions[rep.right].components[fcs[i2].functors[g2].obj_map[k]]
            comps[k] = colim.result.table[(finish, colim.result.table[(mid, back)])]
        mor_map[cname] = outer_nat_name[
            (src_fun.key(), tgt_fun.key(), tuple(sorted(comps.items())))
        ]
    comparison = build_functor(
        "compare", inner.result, outer.category, obj_map, mor_map
    )
    analysis = functor_is_equivalence(comparison)
    if analysis:
        return positive(
            "bicompact-against",
            [
                {
                    "probe": probe.name,
                    "diagram": pf.name,
                    "inner_objects": len(inner.result.objects),
                    "outer_objects": len(outer.category.objects),
                }
            ],
        )
    return negative(
        "bicompact-against",
        {"probe": probe.name, "diagram": pf.name, "analysis": analysis.counterexample},
    )


def pseudoretract_transfer(
    probe: FinCat,
    retract_of: FinCat,
    section: Functor,
    retraction: Functor,
    comparison: NatTrans,
    pf: CatPseudoFunctor,
    max_morphisms: int = 100_000,
) -> Verdict:
    """Evidence-level transfer: positivity for the big category plus valid
    retract data yields positivity for the retract, checked by re-running."""
    from .fincat import nattrans_violations

    bad = nattrans_violations(comparison)
    if bad:
        raise ValidationError("retract", bad)
    if not comparison.is_invertible():
        raise ValidationError("retract", ["retract comparison is not invertible"])
    big = check_bicompact_against(retract_of, pf, max_morphisms)
    small = check_bicompact_against(probe, pf, max_morphisms)
    if big.outcome and not small.outcome:
        return negative(
            "pseudoretract-transfer",
            {"reason": "retract failed while the ambient object passed"},
        )
    return positive("pseudoretract-transfer", [{"ambient": big.outcome, "retract": small.outcome}])
