"""Two-sided Grothendieck construction and filtered bicolimits of categories.

The colimit of a Cat-valued diagram over a 2-dimensionally filtered index is
computed as a quotient of span-shaped representatives ("premorphisms"): an
apex stage, two legs into it, and a connecting cell between the transported
objects.  The quotient is the equivalence closure of three generating moves,
computed by union-find:

  R1  push the whole span forward along any arrow out of the apex
      (conjugating the cell by the diagram's comparison isomorphisms);
  R2  absorb an index 2-cell into the left leg by precomposing the cell;
  R3  absorb an index 2-cell into the right leg by postcomposing the cell.

Composition amalgamates two spans over a common stage found via the
filteredness conditions; the result category is re-validated from scratch, so
any incompleteness of the move set would fail loudly as a category-axiom
violation rather than silently corrupt downstream answers.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Any

from .fincat import (
    FinCat,
    Functor,
    NatTrans,
    ValidationError,
    build_fincat,
    build_functor,
    compose_functors,
    identity_nattrans,
    natural_iso_search,
    nattrans_violations,
    same_category,
    vcompose_nattrans,
    whisker_functor,
    whisker_nattrans,
)
from .filtered import (
    check_bifiltered,
    check_sigma_filtered,
    triangle_completion,
)
from .twocat import (
    CatPseudoFunctor,
    SigmaClass,
    TwoCat,
    TwoFunctor,
    build_twocat,
    build_twofunctor,
    restrict_pseudofunctor,
    sigma_closure,
)


# ---------------------------------------------------------------------------
# Elements 2-category


@dataclass(eq=False)
class ElementsCat:
    base: TwoCat
    functor: CatPseudoFunctor
    total: TwoCat
    projection: TwoFunctor
    opcartesian: frozenset[str]
    obj_of: dict[str, tuple[str, str]]
    cell1_of: dict[str, tuple[str, str]]   # 1-cell name -> (base 1-cell, fiber morphism)
    cell2_of: dict[str, str]               # 2-cell name -> base 2-cell


def _el_obj(i: str, a: str) -> str:
    return f"{i}.{a}"


def elements_category(pf: CatPseudoFunctor) -> ElementsCat:
    """Total 2-category of the diagram, with projection and opcartesian flags.

    0-cells are pairs (stage, fiber object); a 1-cell is a base 1-cell with a
    fiber morphism out of the transported object; 2-cells are base 2-cells
    whose fiber triangle commutes.
    """
    base = pf.source
    objs: list[tuple[str, str]] = []
    for i in sorted(base.cells0):
        for a in pf.on0[i].objects:
            objs.append((i, a))
    obj_of = {_el_obj(i, a): (i, a) for i, a in objs}
    if len(obj_of) != len(objs):
        raise ValidationError("elements", ["object name clash in total category"])

    cell1_of: dict[str, tuple[str, str]] = {}
    cell2_of: dict[str, str] = {}
    one_name: dict[tuple[str, str, str, str], str] = {}
    hom: dict[tuple[str, str], FinCat] = {}
    on0 = {_el_obj(i, a): i for i, a in objs}
    on1: dict[str, str] = {}
    on2: dict[str, str] = {}

    for (i, a) in objs:
        for (j, b) in objs:
            cells: list[tuple[str, str, str, str]] = []  # (name, f, phi, ...)
            fib = pf.on0[j]
            for f in base.cells1(i, j):
                fa = pf.on1[f].obj_map[a]
                for phi in fib.hom(fa, b):
                    name = f"<{i}.{a}|{f}|{phi}>"
                    cells.append((name, f, phi, b))
                    one_name[(i, a, f, phi)] = name
            mors = []
            idents = {}
            base_hom = base.hom[(i, j)]
            for (n1, f, phi, _) in cells:
                for (n2, f2, phi2, _) in cells:
                    for alpha in base_hom.hom(f, f2):
                        # fiber triangle: phi2 ∘ F(alpha)_a = phi
                        if fib.table[(phi2, pf.on2[alpha].components[a])] != phi:
                            continue
                        name2 = f"[{n1}={alpha}={n2}]"
                        mors.append((name2, n1, n2))
                        cell2_of[name2] = alpha
                        if n1 == n2 and alpha == base.id2(f):
                            idents[n1] = name2
            table = {}
            for (m1, src1, tgt1) in mors:
                for (m2, src2, tgt2) in mors:
                    if src2 != tgt1:
                        continue
                    comp_alpha = base.vcomp(cell2_of[m2], cell2_of[m1])
                    table[(m2, m1)] = f"[{src1}={comp_alpha}={tgt2}]"
            hom[(_el_obj(i, a), _el_obj(j, b))] = build_fincat(
                f"el[{i}.{a},{j}.{b}]",
                [c[0] for c in cells],
                mors,
                idents,
                table,
            )
            for (n1, f, phi, _) in cells:
                cell1_of[n1] = (f, phi)
                on1[n1] = f
            for (name2, _, _) in mors:
                on2[name2] = cell2_of[name2]

    # horizontal composition of 1-cells via the comparison cells
    hcomp1: dict[tuple[str, str], str] = {}
    units: dict[str, str] = {}
    for (i, a) in objs:
        u = pf.unit_c[i].components[a]
        u_inv = pf.on0[i].inverse(u)
        assert u_inv is not None
        units[_el_obj(i, a)] = one_name[(i, a, base.unit[i], u_inv)]
    for (i, a) in objs:
        for (j, b) in objs:
            for n1 in hom[(_el_obj(i, a), _el_obj(j, b))].objects:
                f, phi = cell1_of[n1]
                for (k, c) in objs:
                    for n2 in hom[(_el_obj(j, b), _el_obj(k, c))].objects:
                        g, psi = cell1_of[n2]
                        gf = base.hcomp1[(g, f)]
                        fk = pf.on0[k]
                        comp_inv = fk.inverse(pf.comp[(g, f)].components[a])
                        assert comp_inv is not None
                        cell = fk.table[(psi, fk.table[(pf.on1[g].mor_map[phi], comp_inv)])]
                        hcomp1[(n2, n1)] = one_name[(i, a, gf, cell)]

    # horizontal composition of 2-cells is inherited from the base
    hcomp2: dict[tuple[str, str], str] = {}
    for (src1, tgt1), cat1 in hom.items():
        for m1 in cat1.morphisms:
            for (src2, tgt2), cat2 in hom.items():
                if src2 != tgt1:
                    continue
                for m2 in cat2.morphisms:
                    alpha = base.hcomp2[(cell2_of[m2], cell2_of[m1])]
                    d1 = hcomp1[(cat2.dom[m2], cat1.dom[m1])]
                    c1 = hcomp1[(cat2.cod[m2], cat1.cod[m1])]
                    hcomp2[(m2, m1)] = f"[{d1}={alpha}={c1}]"

    total = build_twocat(
        f"el({pf.name})",
        list(obj_of),
        hom,
        hcomp1,
        hcomp2,
        units,
    )
    projection = build_twofunctor(
        f"pi({pf.name})", total, base, on0, on1, on2
    )
    opcart = frozenset(
        n for n, (f, phi) in cell1_of.items()
        if pf.on0[base.one_home[f][1]].is_iso(phi)
    )
    return ElementsCat(base, pf, total, projection, opcart, obj_of, cell1_of, cell2_of)


# ---------------------------------------------------------------------------
# Premorphisms and the colimit quotient


@dataclass(frozen=True)
class Premorphism:
    src: tuple[str, str]
    dst: tuple[str, str]
    apex: str
    left: str
    right: str
    cell: str

    def key(self) -> tuple:
        return (self.src, self.dst, self.apex, self.left, self.right, self.cell)

    def to_dict(self) -> dict[str, Any]:
        return {
            "src": list(self.src),
            "dst": list(self.dst),
            "apex": self.apex,
            "left": self.left,
            "right": self.right,
            "cell": self.cell,
        }


class AmalgamationError(Exception):
    """No common stage found while composing; the index data is not filtered."""


@dataclass(eq=False)
class ColimitCat:
    index: TwoCat
    sigma: SigmaClass | None
    diagram: CatPseudoFunctor
    result: FinCat
    obj_name: dict[tuple[str, str], str]
    classes: dict[Premorphism, str]
    class_rep: dict[str, Premorphism]
    cocone: dict[str, Functor]
    transitions: dict[str, NatTrans]
    mode: str = "bifiltered"
    core_index: TwoCat | None = None

    def object(self, i: str, a: str) -> str:
        return self.obj_name[(i, a)]

    def fiber_premorphism(self, i: str, f: str) -> Premorphism:
        """The canonical span of a morphism living inside one fiber."""
        fib = self.diagram.on0[i]
        a, b = fib.dom[f], fib.cod[f]
        unit = self.index.unit[i]
        u_a = self.diagram.unit_c[i].components[a]
        u_b = self.diagram.unit_c[i].components[b]
        u_a_inv = fib.inverse(u_a)
        assert u_a_inv is not None
        cell = fib.table[(u_b, fib.table[(f, u_a_inv)])]
        return Premorphism((i, a), (i, b), i, unit, unit, cell)

    def premorphism_class(self, p: Premorphism) -> str:
        if p in self.classes:
            return self.classes[p]
        return self.morphism_of(p)

    def morphism_of(self, p: Premorphism) -> str:
        """Morphism of the result represented by an arbitrary premorphism.

        Works for spans outside the computed universe (in particular for
        class-mode colimits whose right leg is not in the class) by pasting
        the transition cells around the transported cell.
        """
        i1, a1 = p.src
        i2, a2 = p.dst
        theta_s = self.transitions[p.left].components[a1]
        back = self.result.inverse(theta_s)
        if back is None:
            raise ValueError(f"left transition at {p.left!r} is not invertible")
        mid = self.cocone[p.apex].mor_map[p.cell]
        theta_d = self.transitions[p.right].components[a2]
        return self.result.table[(theta_d, self.result.table[(mid, back)])]


class _DSU:
    def __init__(self) -> None:
        self.parent: dict[Premorphism, Premorphism] = {}

    def add(self, x: Premorphism) -> None:
        self.parent.setdefault(x, x)

    def find(self, x: Premorphism) -> Premorphism:
        while self.parent[x] is not x:
            self.parent[x] = self.parent[self.parent[x]]
            x = self.parent[x]
        return x

    def union(self, x: Premorphism, y: Premorphism) -> None:
        rx, ry = self.find(x), self.find(y)
        if rx is not ry:
            self.parent[rx] = ry


def _transport(pf: CatPseudoFunctor, p: Premorphism, t: str) -> Premorphism:
    """R1: push a premorphism forward along t out of its apex."""
    base = pf.source
    k = base.one_home[t][1]
    fk = pf.on0[k]
    ts = base.hcomp1[(t, p.left)]
    td = base.hcomp1[(t, p.right)]
    c_left_inv = fk.inverse(pf.comp[(t, p.left)].components[p.src[1]])
    assert c_left_inv is not None
    c_right = pf.comp[(t, p.right)].components[p.dst[1]]
    cell = fk.table[(c_right, fk.table[(pf.on1[t].mor_map[p.cell], c_left_inv)])]
    return Premorphism(p.src, p.dst, k, ts, td, cell)


def _premorphism_universe(pf: CatPseudoFunctor) -> list[Premorphism]:
    base = pf.source
    objs = [
        (i, a) for i in sorted(base.cells0) for a in pf.on0[i].objects
    ]
    out: list[Premorphism] = []
    for (i1, a1) in objs:
        for (i2, a2) in objs:
            for j in sorted(base.cells0):
                fj = pf.on0[j]
                for s in base.cells1(i1, j):
                    sa = pf.on1[s].obj_map[a1]
                    for d in base.cells1(i2, j):
                        da = pf.on1[d].obj_map[a2]
                        for cell in fj.hom(sa, da):
                            out.append(Premorphism((i1, a1), (i2, a2), j, s, d, cell))
    return out


def _quotient(pf: CatPseudoFunctor, universe: list[Premorphism]) -> dict[Premorphism, Premorphism]:
    base = pf.source
    dsu = _DSU()
    for p in universe:
        dsu.add(p)
    by_left: dict[tuple[str, str, tuple], list[Premorphism]] = {}
    by_right: dict[tuple[str, str, tuple], list[Premorphism]] = {}
    for p in universe:
        by_left.setdefault((p.apex, p.left, p.src), []).append(p)
        by_right.setdefault((p.apex, p.right, p.dst), []).append(p)
    for p in universe:
        j = p.apex
        for t in base.one_cells:
            if base.one_home[t][0] == j:
                dsu.union(p, _transport(pf, p, t))
    for a in base.two_cells:
        lo, hi = base.dom2(a), base.cod2(a)
        i, j = base.two_home[a]
        # R2: beta : lo ⇒ hi between left legs; trade hi for lo
        for key, plist in by_left.items():
            if key[0] != j or key[1] != hi or key[2][0] != i:
                continue
            for p in plist:
                fj = pf.on0[j]
                comp = pf.on2[a].components[p.src[1]]
                cell = fj.table[(p.cell, comp)]
                dsu.union(p, Premorphism(p.src, p.dst, j, lo, p.right, cell))
        # R3: beta : lo ⇒ hi between right legs; trade lo for hi
        for key, plist in by_right.items():
            if key[0] != j or key[1] != lo or key[2][0] != i:
                continue
            for p in plist:
                fj = pf.on0[j]
                comp = pf.on2[a].components[p.dst[1]]
                cell = fj.table[(comp, p.cell)]
                dsu.union(p, Premorphism(p.src, p.dst, j, p.left, hi, cell))
    return {p: dsu.find(p) for p in universe}


class _Amalgamator:
    """Deterministic span/insertion choices for composing premorphism classes."""

    def __init__(self, pf: CatPseudoFunctor):
        self.pf = pf
        self.base = pf.source
        self._spans: dict[tuple[str, str], tuple[str, str, str]] = {}
        self._insertions: dict[tuple[str, str], tuple[str, str]] = {}

    def span(self, j: str, k: str) -> tuple[str, str, str]:
        if (j, k) not in self._spans:
            base = self.base
            for m in sorted(base.cells0):
                for u in base.cells1(j, m):
                    for u2 in base.cells1(k, m):
                        self._spans[(j, k)] = (m, u, u2)
                        return self._spans[(j, k)]
            raise AmalgamationError(f"no span over stages ({j!r}, {k!r})")
        return self._spans[(j, k)]

    def insertion(self, d1: str, d2: str) -> tuple[str, str]:
        """w and invertible cell w∘d1 ⇒ w∘d2 for a parallel pair."""
        if (d1, d2) not in self._insertions:
            base = self.base
            m = base.one_home[d1][1]
            for n in sorted(base.cells0):
                for w in base.cells1(m, n):
                    wd1, wd2 = base.hcomp1[(w, d1)], base.hcomp1[(w, d2)]
                    cat = base.hom[(base.one_home[d1][0], n)]
                    for cell in cat.hom(wd1, wd2):
                        if cat.is_iso(cell):
                            self._insertions[(d1, d2)] = (w, cell)
                            return self._insertions[(d1, d2)]
            raise AmalgamationError(f"no invertible insertion for ({d1!r}, {d2!r})")
        return self._insertions[(d1, d2)]

    def compose(self, q: Premorphism, p: Premorphism, witness: int = 0) -> Premorphism:
        """Composite span of p then q over a common amalgamated stage.

        ``witness`` > 0 asks for an alternative span choice; used to test
        that the composite class does not depend on the amalgamation.
        """
        pf, base = self.pf, self.base
        if witness == 0:
            m, u, u2 = self.span(p.apex, q.apex)
        else:
            alts = self._all_spans(p.apex, q.apex)
            m, u, u2 = alts[min(witness, len(alts) - 1)]
        ud = base.hcomp1[(u, p.right)]
        us = base.hcomp1[(u2, q.left)]
        w, gamma = self.insertion(ud, us)
        wu = base.hcomp1[(w, u)]
        wu2 = base.hcomp1[(w, u2)]
        left = base.hcomp1[(wu, p.left)]
        right = base.hcomp1[(wu2, q.right)]
        n = base.one_home[w][1]
        fn = pf.on0[n]
        a1, a2, a3 = p.src[1], p.dst[1], q.dst[1]

        c1_inv = fn.inverse(pf.comp[(wu, p.left)].components[a1])
        assert c1_inv is not None
        step = fn.table[(pf.on1[wu].mor_map[p.cell], c1_inv)]
        step = fn.table[(pf.comp[(wu, p.right)].components[a2], step)]
        step = fn.table[(pf.on2[gamma].components[a2], step)]
        c2_inv = fn.inverse(pf.comp[(wu2, q.left)].components[a2])
        assert c2_inv is not None
        step = fn.table[(c2_inv, step)]
        step = fn.table[(pf.on1[wu2].mor_map[q.cell], step)]
        step = fn.table[(pf.comp[(wu2, q.right)].components[a3], step)]
        return Premorphism(p.src, q.dst, n, left, right, step)

    def _all_spans(self, j: str, k: str) -> list[tuple[str, str, str]]:
        base = self.base
        return [
            (m, u, u2)
            for m in sorted(base.cells0)
            for u in base.cells1(j, m)
            for u2 in base.cells1(k, m)
        ]


def bifiltered_bicolimit(pf: CatPseudoFunctor, precheck: bool = True) -> ColimitCat:
    """Colimit of a diagram of finite categories over a bifiltered index."""
    base = pf.source
    if precheck:
        verdict = check_bifiltered(base)
        if not verdict:
            raise ValidationError(
                pf.name, [f"index not bifiltered: {verdict.counterexample}"]
            )
    universe = _premorphism_universe(pf)
    reps = _quotient(pf, universe)

    groups: dict[Premorphism, list[Premorphism]] = {}
    for p, r in reps.items():
        groups.setdefault(r, []).append(p)
    canon = {r: min(members, key=Premorphism.key) for r, members in groups.items()}
    ordered = sorted(canon.values(), key=Premorphism.key)
    class_name = {rep: f"m{idx:04d}" for idx, rep in enumerate(ordered)}
    classes: dict[Premorphism, str] = {
        p: class_name[canon[reps[p]]] for p in universe
    }
    class_rep = {class_name[c]: c for c in class_name}

    obj_name = {
        (i, a): _el_obj(i, a)
        for i in sorted(base.cells0)
        for a in pf.on0[i].objects
    }
    amal = _Amalgamator(pf)

    mor_rows = [
        (name, _el_obj(*rep.src), _el_obj(*rep.dst))
        for name, rep in sorted(class_rep.items())
    ]
    identities = {}
    for (i, a), oname in obj_name.items():
        unit = base.unit[i]
        fib = pf.on0[i]
        ua = pf.on1[unit].obj_map[a]
        ident_prem = Premorphism((i, a), (i, a), i, unit, unit, fib.identity[ua])
        identities[oname] = classes[ident_prem]
    table: dict[tuple[str, str], str] = {}
    for gname, grep in class_rep.items():
        for fname, frep in class_rep.items():
            if frep.dst != grep.src:
                continue
            composite = amal.compose(grep, frep)
            table[(gname, fname)] = classes[composite]
    result = build_fincat(
        f"colim({pf.name})",
        list(obj_name.values()),
        mor_rows,
        identities,
        table,
    )

    colim = ColimitCat(
        base, None, pf, result, obj_name, classes, class_rep, {}, {}, "bifiltered"
    )
    for i in sorted(base.cells0):
        fib = pf.on0[i]
        colim.cocone[i] = build_functor(
            f"q_{i}",
            fib,
            result,
            {a: obj_name[(i, a)] for a in fib.objects},
            {f: classes[colim.fiber_premorphism(i, f)] for f in fib.dom},
        )
    for d in base.one_cells:
        i, j = base.one_home[d]
        fj = pf.on0[j]
        comps = {}
        for a in pf.on0[i].objects:
            da = pf.on1[d].obj_map[a]
            u = pf.unit_c[j].components[da]
            u_inv = fj.inverse(u)
            assert u_inv is not None
            comps[a] = classes[
                Premorphism((j, da), (i, a), j, base.unit[j], d, u_inv)
            ]
        colim.transitions[d] = NatTrans(
            f"theta_{d}",
            compose_functors(colim.cocone[j], pf.on1[d]),
            colim.cocone[i],
            comps,
        )
    bad = validate_cocone(colim.index, pf, colim.cocone, colim.transitions, None)
    if bad:
        raise ValidationError(pf.name, [f"colimit cocone invalid: {v}" for v in bad])
    return colim


def sigma_bicolimit(pf: CatPseudoFunctor, sigma: SigmaClass) -> ColimitCat:
    """Class-relative colimit, computed over the class subcategory.

    The underlying category is the restricted bifiltered colimit; cocone legs
    are shared, and the transition at an arrow outside the class is pasted
    from a triangle completion, so it may fail to be invertible.
    """
    from .filtered import class_subcategory

    base = pf.source
    closed = sigma_closure(sigma)
    verdict = check_sigma_filtered(base, closed, assume_closed=True)
    if not verdict:
        raise ValidationError(
            pf.name, [f"pair not sigma-filtered: {verdict.counterexample}"]
        )
    sub = class_subcategory(base, closed)
    core = bifiltered_bicolimit(restrict_pseudofunctor(pf, sub), precheck=False)

    colim = ColimitCat(
        base,
        closed,
        pf,
        core.result,
        core.obj_name,
        core.classes,
        core.class_rep,
        dict(core.cocone),
        {},
        "sigma",
        core_index=sub,
    )
    for d in base.one_cells:
        if d in sub.one_home:
            colim.transitions[d] = core.transitions[d]
            continue
        tri = triangle_completion(base, closed, d)
        i, i2 = base.one_home[d]
        j = base.one_home[tri.left][1]
        comps = {}
        for a in pf.on0[i].objects:
            da = pf.on1[d].obj_map[a]
            start = core.transitions[tri.right].components[da]
            back = core.result.inverse(start)
            assert back is not None
            fj = pf.on0[j]
            mid_fiber = fj.table[
                (pf.on2[tri.cell].components[a], pf.comp[(tri.right, d)].components[a])
            ]
            mid = colim.cocone[j].mor_map[mid_fiber]
            finish = core.transitions[tri.left].components[a]
            comps[a] = core.result.table[(finish, core.result.table[(mid, back)])]
        colim.transitions[d] = NatTrans(
            f"theta_{d}",
            compose_functors(colim.cocone[i2], pf.on1[d]),
            colim.cocone[i],
            comps,
        )
    bad = validate_cocone(base, pf, colim.cocone, colim.transitions, closed.members)
    if bad:
        raise ValidationError(pf.name, [f"sigma cocone invalid: {v}" for v in bad])
    return colim


def premorphism_equal(colim: ColimitCat, p: Premorphism, q: Premorphism) -> bool:
    """Whether two spans with the same endpoints present the same morphism."""
    if p.src != q.src or p.dst != q.dst:
        raise ValueError("premorphisms are not parallel")
    return colim.premorphism_class(p) == colim.premorphism_class(q)


# ---------------------------------------------------------------------------
# Cocone validation and factorization


def validate_cocone(
    index: TwoCat,
    pf: CatPseudoFunctor,
    legs: dict[str, Functor],
    cells: dict[str, NatTrans],
    sigma_members: frozenset[str] | None,
) -> list[str]:
    """Oplax-cocone axioms, exactly: typing, invertibility over the class,
    compatibility with index 2-cells, composition, and units."""
    out: list[str] = []
    for i in index.cells0:
        leg = legs.get(i)
        if leg is None or not same_category(leg.source, pf.on0[i]):
            out.append(f"missing or mistyped leg at {i!r}")
    if out:
        return out
    target = next(iter(legs.values())).target
    if any(not same_category(l.target, target) for l in legs.values()):
        out.append("legs do not share a target")
        return out
    for d in index.one_cells:
        i, j = index.one_home[d]
        nt = cells.get(d)
        if nt is None:
            out.append(f"missing transition at {d!r}")
            continue
        want_src = compose_functors(legs[j], pf.on1[d])
        if nt.source.key() != want_src.key() or nt.target.key() != legs[i].key():
            out.append(f"transition at {d!r} mistyped")
            continue
        if nattrans_violations(nt):
            out.append(f"transition at {d!r} not natural")
        if (sigma_members is None or d in sigma_members) and not nt.is_invertible():
            out.append(f"transition at {d!r} must be invertible")
    if out:
        return out
    for b in index.two_cells:
        d, d2 = index.dom2(b), index.cod2(b)
        i, j = index.two_home[b]
        lhs = cells[d]
        rhs = vcompose_nattrans(cells[d2], whisker_functor(legs[j], pf.on2[b]))
        if lhs.components != rhs.components:
            out.append(f"2-cell compatibility fails at {b!r}")
    for d in index.one_cells:
        i, j = index.one_home[d]
        for e in index.one_cells:
            if index.one_home[e][0] != j:
                continue
            k = index.one_home[e][1]
            ed = index.hcomp1[(e, d)]
            lhs = vcompose_nattrans(cells[ed], whisker_functor(legs[k], pf.comp[(e, d)]))
            rhs = vcompose_nattrans(cells[d], whisker_nattrans(cells[e], pf.on1[d]))
            if lhs.components != rhs.components:
                out.append(f"composition compatibility fails at ({e!r}, {d!r})")
    for i in index.cells0:
        unit = index.unit[i]
        lhs = vcompose_nattrans(cells[unit], whisker_functor(legs[i], pf.unit_c[i]))
        if lhs.components != identity_nattrans(legs[i]).components:
            out.append(f"unit compatibility fails at {i!r}")
    return out


@dataclass(eq=False)
class Factorization:
    functor: Functor
    comparisons: dict[str, NatTrans]


def factor_cocone(
    colim: ColimitCat,
    target: FinCat,
    legs: dict[str, Functor],
    cells: dict[str, NatTrans],
) -> Factorization:
    """Mediating functor out of the colimit induced by a valid cocone.

    The restriction along each colimit inclusion agrees with the given leg on
    the nose, so the comparison transformations returned are identities.
    """
    sigma = colim.sigma.members if colim.sigma is not None else None
    bad = validate_cocone(colim.index, colim.diagram, legs, cells, sigma)
    if bad:
        raise ValidationError("cocone", bad)
    obj_map = {}
    for (i, a), oname in colim.obj_name.items():
        obj_map[oname] = legs[i].obj_map[a]
    mor_map = {}
    for name, rep in colim.class_rep.items():
        i1, a1 = rep.src
        i2, a2 = rep.dst
        tau_s = cells[rep.left].components[a1]
        back = target.inverse(tau_s)
        if back is None:
            raise ValidationError(
                "cocone", [f"leg transition at {rep.left!r} not invertible in target"]
            )
        mid = legs[rep.apex].mor_map[rep.cell]
        tau_d = cells[rep.right].components[a2]
        mor_map[name] = target.table[(tau_d, target.table[(mid, back)])]
    fun = build_functor(f"<{colim.result.name}->{target.name}>", colim.result, target, obj_map, mor_map)
    comparisons = {
        i: identity_nattrans(compose_functors(fun, colim.cocone[i]))
        for i in colim.index.cells0
    }
    return Factorization(fun, comparisons)


def compare_factorizations(f: Functor, g: Functor) -> NatTrans | None:
    """Invertible comparison between two mediating functors, if one exists."""
    return natural_iso_search(f, g)

