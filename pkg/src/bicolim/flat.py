"""Flatness of Cat-valued pseudofunctors.

A diagram is flat here when the 1-cell dual of its total category is
class-filtered relative to the opcartesian arrows; flat diagrams reconstruct
themselves as filtered colimits of hom 2-functors, and that reconstruction is
what :func:`decompose_flat` replays, stage category by stage category.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Any

from .colim import ColimitCat, ElementsCat, bifiltered_bicolimit, elements_category, factor_cocone
from .fincat import (
    FinCat,
    Functor,
    NatTrans,
    ValidationError,
    build_functor,
    check_equivalence,
    compose_functors,
    functor_is_equivalence,
    nattrans_violations,
)
from .bilim import arrow_cotensor, biequalizer, biproduct
from .twocat import (
    CatPseudoFunctor,
    SigmaClass,
    TwoCat,
    build_pseudofunctor,
    full_sub_on_one_cells,
    op1,
    sigma_closure,
)
from .verdict import Verdict, negative, positive


def representable_pseudofunctor(tc: TwoCat, c: str, name: str | None = None) -> CatPseudoFunctor:
    """The hom 2-functor out of a 0-cell, acting by whiskering; strict."""
    if c not in tc.cells0:
        raise ValidationError("representable", [f"unknown 0-cell {c!r}"])
    on0 = {j: tc.hom[(c, j)] for j in tc.cells0}
    on1: dict[str, Functor] = {}
    for g in tc.one_cells:
        j, k = tc.one_home[g]
        on1[g] = build_functor(
            f"({g}o-)",
            on0[j],
            on0[k],
            {f: tc.hcomp1[(g, f)] for f in on0[j].objects},
            {a: tc.whisker_l(g, a) for a in on0[j].dom},
        )
    on2: dict[str, NatTrans] = {}
    for b in tc.two_cells:
        g, g2 = tc.dom2(b), tc.cod2(b)
        j = tc.two_home[b][0]
        on2[b] = NatTrans(
            f"({b}o-)",
            on1[g],
            on1[g2],
            {f: tc.whisker_r(b, f) for f in on0[j].objects},
        )
    return build_pseudofunctor(name or f"hom({c},-)", tc, on0, on1, on2)


def opcartesian_class(el: ElementsCat) -> tuple[TwoCat, SigmaClass]:
    """The 1-cell dual of the total category with its opcartesian class."""
    dual = op1(el.total)
    return dual, SigmaClass(dual, el.opcartesian, "opcartesian")


def check_flat(pf: CatPseudoFunctor) -> Verdict:
    """Class-filteredness of the dualized total category at opcartesians."""
    el = elements_category(pf)
    if not el.total.cells0:
        return negative("flat", {"reason": "empty category of elements"})
    dual, opcart = opcartesian_class(el)
    from .filtered import check_sigma_filtered

    inner = check_sigma_filtered(dual, opcart)
    if inner:
        return positive("flat", inner.witnesses)
    return negative("flat", inner.counterexample)


@dataclass(eq=False)
class StageReconstruction:
    stage: str
    colimit: ColimitCat
    comparison: Functor
    equivalence: Verdict
    direct: Verdict          # analysis of the comparison functor itself


@dataclass(eq=False)
class DecompositionReport:
    functor: CatPseudoFunctor
    index: TwoCat
    stages: dict[str, StageReconstruction]
    natural_on: dict[str, bool]

    @property
    def ok(self) -> bool:
        return all(s.equivalence.outcome and s.direct.outcome for s in self.stages.values()) and all(
            self.natural_on.values()
        )

    def to_dict(self) -> dict[str, Any]:
        return {
            "stages": {
                j: {
                    "equivalence": s.equivalence.to_dict()["outcome"],
                    "comparison": s.direct.to_dict()["outcome"],
                }
                for j, s in sorted(self.stages.items())
            },
            "natural_on": dict(sorted(self.natural_on.items())),
            "ok": self.ok,
        }


def _restriction_diagram(pf: CatPseudoFunctor, sub: TwoCat, el: ElementsCat, j: str) -> CatPseudoFunctor:
    """The hom-valued diagram over the opcartesian index, evaluated at j."""
    base = pf.source
    on0 = {}
    for n in sub.cells0:
        c, _ = el.obj_of[n]
        on0[n] = base.hom[(c, j)]
    on1 = {}
    for m in sub.one_home:
        f, _ = el.cell1_of[m]
        nB, nA = sub.one_home[m]
        on1[m] = build_functor(
            f"(-o{f})@{j}",
            on0[nB],
            on0[nA],
            {g: base.hcomp1[(g, f)] for g in on0[nB].objects},
            {a: base.whisker_r(a, f) for a in on0[nB].dom},
        )
    on2 = {}
    for m2 in sub.two_home:
        alpha = el.cell2_of[m2]
        m_dom, m_cod = sub.dom2(m2), sub.cod2(m2)
        nB = sub.one_home[m_dom][0]
        on2[m2] = NatTrans(
            f"(-o{alpha})@{j}",
            on1[m_dom],
            on1[m_cod],
            {g: base.whisker_l(g, alpha) for g in on0[nB].objects},
        )
    return build_pseudofunctor(f"{pf.name}@{j}", sub, on0, on1, on2)


def _stage_comparison(
    pf: CatPseudoFunctor, el: ElementsCat, j: str, colim: ColimitCat
) -> Functor:
    """Canonical functor from the reconstructed stage to the actual fiber."""
    base = pf.source
    fib = pf.on0[j]
    obj_map = {}
    for (n, g), oname in colim.obj_name.items():
        c, x = el.obj_of[n]
        obj_map[oname] = pf.on1[g].obj_map[x]
    mor_map = {}
    for cname, rep in colim.class_rep.items():
        n1, g1 = rep.src
        n2, g2 = rep.dst
        f_s, phi_s = el.cell1_of[rep.left]
        f_d, phi_d = el.cell1_of[rep.right]
        napex = rep.apex
        x_apex = el.obj_of[napex][1]
        phi_s_inv = fib_of(pf, rep.left, el).inverse(phi_s)
        assert phi_s_inv is not None
        chain = pf.on1[g1].mor_map[phi_s_inv]
        chain = fib.table[(pf.comp[(g1, f_s)].components[x_apex], chain)]
        chain = fib.table[(pf.on2[rep.cell].components[x_apex], chain)]
        back = fib.inverse(pf.comp[(g2, f_d)].components[x_apex])
        assert back is not None
        chain = fib.table[(back, chain)]
        chain = fib.table[(pf.on1[g2].mor_map[phi_d], chain)]
        mor_map[cname] = chain
    return build_functor(f"eval@{j}", colim.result, fib, obj_map, mor_map)


def fib_of(pf: CatPseudoFunctor, cell1: str, el: ElementsCat) -> FinCat:
    """Fiber category containing the fiber component of an elements 1-cell."""
    f, _ = el.cell1_of[cell1]
    return pf.on0[pf.source.one_home[f][1]]


def decompose_flat(pf: CatPseudoFunctor) -> DecompositionReport:
    """Reconstruct each fiber as a filtered colimit of hom categories.

    Requires flatness; raises otherwise.  For every base 0-cell the colimit
    of the restricted hom diagram over the opcartesian index is compared to
    the actual fiber, both by the generic equivalence decision and by a
    direct analysis of the canonical evaluation functor; all base 1-cells
    get a pseudonaturality check of the evaluation squares.
    """
    flat = check_flat(pf)
    if not flat:
        raise ValidationError(pf.name, [f"not flat: {flat.counterexample}"])
    el = elements_category(pf)
    dual, opcart = opcartesian_class(el)
    closed = sigma_closure(opcart)
    sub = full_sub_on_one_cells(dual, closed.members, name=f"{dual.name}|opcart")
    base = pf.source

    stages: dict[str, StageReconstruction] = {}
    comparisons: dict[str, Functor] = {}
    colimits: dict[str, ColimitCat] = {}
    for j in sorted(base.cells0):
        diagram = _restriction_diagram(pf, sub, el, j)
        colim = bifiltered_bicolimit(diagram)
        comparison = _stage_comparison(pf, el, j, colim)
        stages[j] = StageReconstruction(
            j,
            colim,
            comparison,
            check_equivalence(colim.result, pf.on0[j]),
            functor_is_equivalence(comparison),
        )
        comparisons[j] = comparison
        colimits[j] = colim

    natural_on: dict[str, bool] = {}
    for s in base.one_cells:
        j, j2 = base.one_home[s]
        induced = _postcomposition_functor(pf, el, sub, s, colimits[j], colimits[j2])
        lhs = compose_functors(comparisons[j2], induced)
        rhs = compose_functors(pf.on1[s], comparisons[j])
        comps = {}
        for (n, g), oname in colimits[j].obj_name.items():
            x = el.obj_of[n][1]
            comps[oname] = pf.comp[(s, g)].components[x]
        candidate = NatTrans(f"nat@{s}", rhs, lhs, comps)
        natural_on[s] = not nattrans_violations(candidate)
    return DecompositionReport(pf, sub, stages, natural_on)


def _postcomposition_functor(
    pf: CatPseudoFunctor,
    el: ElementsCat,
    sub: TwoCat,
    s: str,
    source: ColimitCat,
    target: ColimitCat,
) -> Functor:
    """Functor between stage reconstructions induced by a base 1-cell."""
    base = pf.source
    legs = {}
    cells = {}
    for n in sub.cells0:
        c, _ = el.obj_of[n]
        j = base.one_home[s][0]
        post = build_functor(
            f"({s}o-)@{n}",
            base.hom[(c, j)],
            base.hom[(c, base.one_home[s][1])],
            {g: base.hcomp1[(s, g)] for g in base.cells1(c, j)},
            {a: base.whisker_l(s, a) for a in base.hom[(c, j)].dom},
        )
        legs[n] = compose_functors(target.cocone[n], post)
    for m in sub.one_home:
        nB, nA = sub.one_home[m]
        cB = el.obj_of[nB][0]
        j = base.one_home[s][0]
        comps = {}
        for g in base.cells1(cB, j):
            comps[g] = target.transitions[m].components[base.hcomp1[(s, g)]]
        cells[m] = NatTrans(
            f"move_{m}",
            compose_functors(legs[nA], source.diagram.on1[m]),
            legs[nB],
            comps,
        )
    return factor_cocone(source, target.result, legs, cells).functor


# ---------------------------------------------------------------------------
# Preservation of finite bilimit instances


@dataclass(eq=False)
class BilimitInstance:
    kind: str
    data: dict[str, str]


def validate_bilimit_instance(tc: TwoCat, instance: BilimitInstance) -> list[str]:
    """Check that the supplied cone really is a bilimit cone in the base.

    For each probe 0-cell the canonical comparison out of the hom category
    must be an equivalence; this is checked exhaustively.
    """
    out = []
    kind, data = instance.kind, instance.data
    if kind == "biterminal":
        t = data["apex"]
        for j in tc.cells0:
            if not check_equivalence(tc.hom[(j, t)], _terminal_cat()):
                out.append(f"hom({j!r},{t!r}) is not trivial")
    elif kind == "biproduct":
        p, pr1, pr2 = data["apex"], data["left_leg"], data["right_leg"]
        a, b = tc.one_home[pr1][1], tc.one_home[pr2][1]
        for j in tc.cells0:
            prod = biproduct(tc.hom[(j, a)], tc.hom[(j, b)])
            try:
                probe = prod.pairing(
                    _postcomp(tc, pr1, j), _postcomp(tc, pr2, j), name=f"probe@{j}"
                )
            except ValidationError:
                out.append(f"probe at {j!r} cannot be assembled")
                continue
            if not functor_is_equivalence(probe):
                out.append(f"probe at {j!r} is not an equivalence")
    elif kind == "biequalizer":
        w, u = data["apex"], data["leg"]
        f, g, xi = data["left"], data["right"], data["cell"]
        if tc.hcomp1[(f, u)] != tc.dom2(xi) or tc.hcomp1[(g, u)] != tc.cod2(xi):
            return ["cone cell has wrong boundary"]
        if not tc.invertible2(xi):
            return ["cone cell is not invertible"]
        for j in tc.cells0:
            eq = biequalizer(_postcomp(tc, f, j), _postcomp(tc, g, j))
            obj_map = {}
            mor_map = {}
            ok = True
            for h in tc.cells1(j, w):
                theta = tc.whisker_r(xi, h)
                obj_map[h] = f"({tc.hcomp1[(u, h)]}|{theta})"
                if obj_map[h] not in set(eq.category.objects):
                    ok = False
            if not ok:
                out.append(f"probe at {j!r} misses the equalizer")
                continue
            for alpha in tc.hom[(j, w)].dom:
                h1 = tc.hom[(j, w)].dom[alpha]
                h2 = tc.hom[(j, w)].cod[alpha]
                mor_map[alpha] = f"({tc.whisker_l(u, alpha)}:{obj_map[h1]}>{obj_map[h2]})"
            probe = build_functor(f"probe@{j}", tc.hom[(j, w)], eq.category, obj_map, mor_map)
            if not functor_is_equivalence(probe):
                out.append(f"probe at {j!r} is not an equivalence")
    elif kind == "arrow_cotensor":
        t, e0, e1, tau = data["apex"], data["dom_leg"], data["cod_leg"], data["cell"]
        a = tc.one_home[e0][1]
        for j in tc.cells0:
            cot = arrow_cotensor(tc.hom[(j, a)])
            obj_map = {}
            mor_map = {}
            for h in tc.cells1(j, t):
                obj_map[h] = tc.whisker_r(tau, h)
            for alpha in tc.hom[(j, t)].dom:
                h1 = tc.hom[(j, t)].dom[alpha]
                h2 = tc.hom[(j, t)].cod[alpha]
                mor_map[alpha] = cot.square(
                    tc.whisker_l(e0, alpha), tc.whisker_l(e1, alpha),
                    obj_map[h1], obj_map[h2],
                )
            probe = build_functor(f"probe@{j}", tc.hom[(j, t)], cot.category, obj_map, mor_map)
            if not functor_is_equivalence(probe):
                out.append(f"probe at {j!r} is not an equivalence")
    else:
        out.append(f"unknown bilimit kind {kind!r}")
    return out


def _terminal_cat() -> FinCat:
    from .fincat import build_fincat

    return build_fincat("unit", ["*"], [("id", "*", "*")], {"*": "id"}, {("id", "id"): "id"})


def _postcomp(tc: TwoCat, g: str, j: str) -> Functor:
    src = tc.one_home[g][0]
    return build_functor(
        f"({g}o-)@{j}",
        tc.hom[(j, src)],
        tc.hom[(j, tc.one_home[g][1])],
        {f: tc.hcomp1[(g, f)] for f in tc.cells1(j, src)},
        {a: tc.whisker_l(g, a) for a in tc.hom[(j, src)].dom},
    )


def check_flat_preserves_bilimits(pf: CatPseudoFunctor, instance: BilimitInstance) -> Verdict:
    """Whether the image of a bilimit cone in the base is again one in Cat."""
    tc = pf.source
    bad = validate_bilimit_instance(tc, instance)
    if bad:
        raise ValidationError("bilimit-instance", bad)
    kind, data = instance.kind, instance.data
    if kind == "biterminal":
        return check_equivalence(pf.on0[data["apex"]], _terminal_cat())
    if kind == "biproduct":
        prod = biproduct(pf.on0[tc.one_home[data["left_leg"]][1]], pf.on0[tc.one_home[data["right_leg"]][1]])
        comparison = prod.pairing(pf.on1[data["left_leg"]], pf.on1[data["right_leg"]], name="image_probe")
        return functor_is_equivalence(comparison)
    if kind == "biequalizer":
        u, f, g, xi = data["leg"], data["left"], data["right"], data["cell"]
        eq = biequalizer(pf.on1[f], pf.on1[g])
        fibw = pf.on0[tc.one_home[u][0]]
        fib_b = pf.on0[tc.one_home[f][1]]
        obj_map = {}
        mor_map = {}
        for x in fibw.objects:
            theta = fib_b.table[(pf.on2[xi].components[x], pf.comp[(f, u)].components[x])]
            back = fib_b.inverse(pf.comp[(g, u)].components[x])
            assert back is not None
            theta = fib_b.table[(back, theta)]
            ux = pf.on1[u].obj_map[x]
            obj_map[x] = f"({ux}|{theta})"
            if obj_map[x] not in set(eq.category.objects):
                return negative(
                    "preserves-bilimit",
                    {"reason": "image cone misses the equalizer", "object": x},
                )
        for m in fibw.dom:
            src, tgt = obj_map[fibw.dom[m]], obj_map[fibw.cod[m]]
            mor_map[m] = f"({pf.on1[u].mor_map[m]}:{src}>{tgt})"
        comparison = build_functor("image_probe", fibw, eq.category, obj_map, mor_map)
        return functor_is_equivalence(comparison)
    if kind == "arrow_cotensor":
        e0, e1, tau = data["dom_leg"], data["cod_leg"], data["cell"]
        fib_t = pf.on0[tc.one_home[e0][0]]
        cot = arrow_cotensor(pf.on0[tc.one_home[e0][1]])
        obj_map = {x: pf.on2[tau].components[x] for x in fib_t.objects}
        mor_map = {}
        for m in fib_t.dom:
            mor_map[m] = cot.square(
                pf.on1[e0].mor_map[m],
                pf.on1[e1].mor_map[m],
                obj_map[fib_t.dom[m]],
                obj_map[fib_t.cod[m]],
            )
        comparison = build_functor("image_probe", fib_t, cot.category, obj_map, mor_map)
        return functor_is_equivalence(comparison)
    raise ValidationError("bilimit-instance", [f"unknown kind {kind!r}"])
