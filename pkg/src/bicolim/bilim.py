"""Finite bilimit primitives in Cat and pseudoidempotent splitting.

Everything here returns the pseudolimit model of the bilimit in question
(product category, category of isomorphism pairs, arrow category, cocycle
families); in Cat the two notions agree up to equivalence whenever both
exist, so the pseudolimit models are taken as the computational normal form.

The module also builds the pointwise-limit diagrams used to verify that
filtered colimits commute with these primitives.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

from .fincat import (
    FinCat,
    Functor,
    NatTrans,
    SizeGuardError,
    ValidationError,
    build_fincat,
    build_functor,
    build_nattrans,
    check_equivalence,
    compose_functors,
    identity_functor,
    natural_iso_search,
    nattrans_violations,
    same_category,
)
from .twocat import CatPseudoFunctor, build_pseudofunctor
from .verdict import Verdict


# ---------------------------------------------------------------------------
# Biproducts


@dataclass(eq=False)
class Biproduct:
    category: FinCat
    left: FinCat
    right: FinCat
    proj1: Functor
    proj2: Functor

    def pair_obj(self, x: str, y: str) -> str:
        return f"({x},{y})"

    def pair_mor(self, m: str, n: str) -> str:
        return f"({m},{n})"

    def pairing(self, f: Functor, g: Functor, name: str = "pair") -> Functor:
        """⟨f, g⟩ for functors with a common source."""
        return build_functor(
            name,
            f.source,
            self.category,
            {x: self.pair_obj(f.obj_map[x], g.obj_map[x]) for x in f.source.objects},
            {m: self.pair_mor(f.mor_map[m], g.mor_map[m]) for m in f.source.dom},
        )


def biproduct(c: FinCat, d: FinCat) -> Biproduct:
    objs = [f"({x},{y})" for x in c.objects for y in d.objects]
    mors = [
        (f"({m},{n})", f"({c.dom[m]},{d.dom[n]})", f"({c.cod[m]},{d.cod[n]})")
        for m in c.morphisms
        for n in d.morphisms
    ]
    idents = {
        f"({x},{y})": f"({c.identity[x]},{d.identity[y]})"
        for x in c.objects
        for y in d.objects
    }
    table = {}
    for (g1, f1), h1 in c.table.items():
        for (g2, f2), h2 in d.table.items():
            table[(f"({g1},{g2})", f"({f1},{f2})")] = f"({h1},{h2})"
    cat = build_fincat(f"({c.name}x{d.name})", objs, mors, idents, table)
    proj1 = build_functor(
        "pr1",
        cat,
        c,
        {f"({x},{y})": x for x in c.objects for y in d.objects},
        {f"({m},{n})": m for m in c.morphisms for n in d.morphisms},
    )
    proj2 = build_functor(
        "pr2",
        cat,
        d,
        {f"({x},{y})": y for x in c.objects for y in d.objects},
        {f"({m},{n})": n for m in c.morphisms for n in d.morphisms},
    )
    return Biproduct(cat, c, d, proj1, proj2)


# ---------------------------------------------------------------------------
# Biequalizers


@dataclass(eq=False)
class Biequalizer:
    category: FinCat
    projection: Functor
    iso: NatTrans              # F∘projection ≅ G∘projection
    obj_of: dict[str, tuple[str, str]]

    def obj(self, a: str, theta: str) -> str:
        return f"({a}|{theta})"


def biequalizer(f: Functor, g: Functor) -> Biequalizer:
    """Pairs (a, θ: f(a) ≅ g(a)) with morphisms commuting with the isos."""
    if not same_category(f.source, g.source) or not same_category(f.target, g.target):
        raise ValidationError("biequalizer", ["functors are not parallel"])
    a_cat, b_cat = f.source, f.target
    objs = []
    obj_of = {}
    for a in a_cat.objects:
        for theta in b_cat.hom(f.obj_map[a], g.obj_map[a]):
            if b_cat.is_iso(theta):
                name = f"({a}|{theta})"
                objs.append(name)
                obj_of[name] = (a, theta)
    mors = []
    for src in objs:
        a, theta = obj_of[src]
        for tgt in objs:
            a2, theta2 = obj_of[tgt]
            for m in a_cat.hom(a, a2):
                if b_cat.table[(theta2, f.mor_map[m])] != b_cat.table[(g.mor_map[m], theta)]:
                    continue
                mors.append((f"({m}:{src}>{tgt})", src, tgt))
    idents = {o: f"({a_cat.identity[obj_of[o][0]]}:{o}>{o})" for o in objs}
    table = {}
    for (m1, s1, t1) in mors:
        u1 = m1[1 : m1.index(":")]
        for (m2, s2, t2) in mors:
            if s2 != t1:
                continue
            u2 = m2[1 : m2.index(":")]
            table[(m2, m1)] = f"({a_cat.table[(u2, u1)]}:{s1}>{t2})"
    cat = build_fincat(f"eq({f.name},{g.name})", objs, mors, idents, table)
    projection = build_functor(
        "eq_proj",
        cat,
        a_cat,
        {o: obj_of[o][0] for o in objs},
        {m: m[1 : m.index(":")] for m, _, _ in mors},
    )
    iso = build_nattrans(
        "eq_iso",
        compose_functors(f, projection),
        compose_functors(g, projection),
        {o: obj_of[o][1] for o in objs},
    )
    return Biequalizer(cat, projection, iso, obj_of)


# ---------------------------------------------------------------------------
# Cotensor with the arrow


@dataclass(eq=False)
class ArrowCotensor:
    category: FinCat
    base: FinCat
    src: Functor
    tgt: Functor
    cell: NatTrans             # src ⇒ tgt, component at an object f is f itself

    def square(self, p: str, q: str, f: str, g: str) -> str:
        return f"[{p},{q}]({f}>{g})"


def arrow_cotensor(c: FinCat) -> ArrowCotensor:
    """The arrow category: objects are morphisms, morphisms are squares."""
    objs = list(c.morphisms)
    mors = []
    for f in objs:
        for g in objs:
            for p in c.hom(c.dom[f], c.dom[g]):
                for q in c.hom(c.cod[f], c.cod[g]):
                    if c.table[(q, f)] != c.table[(g, p)]:
                        continue
                    mors.append((f"[{p},{q}]({f}>{g})", f, g))
    idents = {
        f: f"[{c.identity[c.dom[f]]},{c.identity[c.cod[f]]}]({f}>{f})" for f in objs
    }
    parse = {name: (name[1 : name.index(",")], name[name.index(",") + 1 : name.index("]")]) for name, _, _ in mors}
    table = {}
    for (m1, f1, g1) in mors:
        p1, q1 = parse[m1]
        for (m2, f2, g2) in mors:
            if f2 != g1:
                continue
            p2, q2 = parse[m2]
            table[(m2, m1)] = f"[{c.table[(p2, p1)]},{c.table[(q2, q1)]}]({f1}>{g2})"
    cat = build_fincat(f"[2,{c.name}]", objs, mors, idents, table)
    src = build_functor("dom", cat, c, {f: c.dom[f] for f in objs}, {m: parse[m][0] for m, _, _ in mors})
    tgt = build_functor("cod", cat, c, {f: c.cod[f] for f in objs}, {m: parse[m][1] for m, _, _ in mors})
    cell = build_nattrans("eval", src, tgt, {f: f for f in objs})
    return ArrowCotensor(cat, c, src, tgt, cell)


# ---------------------------------------------------------------------------
# Conical pseudolimit via cocycle families


@dataclass(eq=False)
class Pseudolimit:
    category: FinCat
    legs: dict[str, Functor]
    family_of: dict[str, tuple]


def pseudolimit_cocycle(pf: CatPseudoFunctor, max_families: int = 100_000) -> Pseudolimit:
    """Families of fiber objects with coherent transition isomorphisms.

    An object assigns A_i to every 0-cell and an isomorphism to every 1-cell
    d : i -> j from the transported A_i to A_j, subject to the unit condition,
    the cocycle condition (conjugated by the comparison cells), and
    compatibility with every index 2-cell.
    """
    tc = pf.source
    zero = sorted(tc.cells0)
    count = 1
    for i in zero:
        count *= max(1, len(pf.on0[i].objects))
        if count > max_families:
            raise SizeGuardError("pseudolimit family bound exceeded")
    if any(not pf.on0[i].objects for i in zero):
        families: list[tuple] = []
    else:
        families = []
        one = sorted(tc.one_home)
        for combo in itertools.product(*[pf.on0[i].objects for i in zero]):
            objs = dict(zip(zero, combo))
            per_arrow = []
            feasible = True
            for d in one:
                i, j = tc.one_home[d]
                fj = pf.on0[j]
                da = pf.on1[d].obj_map[objs[i]]
                if d == tc.unit[i]:
                    u = pf.unit_c[i].components[objs[i]]
                    u_inv = fj.inverse(u)
                    assert u_inv is not None
                    choices = [u_inv]
                else:
                    choices = [m for m in fj.hom(da, objs[j]) if fj.is_iso(m)]
                if not choices:
                    feasible = False
                    break
                per_arrow.append(choices)
            if not feasible:
                continue
            for alphas in itertools.product(*per_arrow):
                alpha = dict(zip(one, alphas))
                if _cocycle_ok(pf, objs, alpha):
                    families.append(
                        (tuple(objs[i] for i in zero), tuple(alpha[d] for d in one))
                    )
    families.sort()
    zero_t = tuple(zero)
    one_t = tuple(sorted(tc.one_home))
    names = {fam: f"P{idx:03d}" for idx, fam in enumerate(families)}
    family_of = {fam_name: fam for fam, fam_name in names.items()}
    mors = []
    for fam in families:
        src_objs = dict(zip(zero_t, fam[0]))
        src_alpha = dict(zip(one_t, fam[1]))
        for fam2 in families:
            tgt_objs = dict(zip(zero_t, fam2[0]))
            tgt_alpha = dict(zip(one_t, fam2[1]))
            for combo in itertools.product(
                *[pf.on0[i].hom(src_objs[i], tgt_objs[i]) for i in zero_t]
            ):
                comp = dict(zip(zero_t, combo))
                ok = True
                for d in one_t:
                    i, j = tc.one_home[d]
                    fj = pf.on0[j]
                    lhs = fj.table[(tgt_alpha[d], pf.on1[d].mor_map[comp[i]])]
                    rhs = fj.table[(comp[j], src_alpha[d])]
                    if lhs != rhs:
                        ok = False
                        break
                if ok:
                    mors.append(
                        (
                            f"({','.join(combo)}:{names[fam]}>{names[fam2]})",
                            names[fam],
                            names[fam2],
                            comp,
                        )
                    )
    idents = {}
    table = {}
    byst: dict[tuple[str, str], list] = {}
    for name, s, t, comp in mors:
        byst.setdefault((s, t), []).append((name, comp))
    for fam in families:
        n = names[fam]
        src_objs = dict(zip(zero_t, fam[0]))
        idents[n] = f"({','.join(pf.on0[i].identity[src_objs[i]] for i in zero_t)}:{n}>{n})"
    for (m1, s1, t1, c1) in mors:
        for (m2, s2, t2, c2) in mors:
            if s2 != t1:
                continue
            comp = {i: pf.on0[i].table[(c2[i], c1[i])] for i in zero_t}
            table[(m2, m1)] = f"({','.join(comp[i] for i in zero_t)}:{s1}>{t2})"
    cat = build_fincat(
        f"pslim({pf.name})",
        list(names.values()),
        [(n, s, t) for n, s, t, _ in mors],
        idents,
        table,
    )
    legs = {}
    for pos, i in enumerate(zero_t):
        legs[i] = build_functor(
            f"pl_{i}",
            cat,
            pf.on0[i],
            {names[fam]: fam[0][pos] for fam in families},
            {m: c[i] for m, _, _, c in mors},
        )
    return Pseudolimit(cat, legs, family_of)


def _cocycle_ok(pf: CatPseudoFunctor, objs: dict[str, str], alpha: dict[str, str]) -> bool:
    tc = pf.source
    for d in alpha:
        i, j = tc.one_home[d]
        for e in alpha:
            if tc.one_home[e][0] != j:
                continue
            k = tc.one_home[e][1]
            fk = pf.on0[k]
            ed = tc.hcomp1[(e, d)]
            lhs = fk.table[(alpha[ed], pf.comp[(e, d)].components[objs[i]])]
            rhs = fk.table[(alpha[e], pf.on1[e].mor_map[alpha[d]])]
            if lhs != rhs:
                return False
    for b in tc.two_cells:
        d, d2 = tc.dom2(b), tc.cod2(b)
        i, j = tc.two_home[b]
        fj = pf.on0[j]
        if fj.table[(alpha[d2], pf.on2[b].components[objs[i]])] != alpha[d]:
            return False
    return True


# ---------------------------------------------------------------------------
# Pseudoidempotents


@dataclass(eq=False)
class Pseudoidempotent:
    carrier: FinCat
    endo: Functor
    mult: NatTrans             # invertible e∘e ⇒ e


def validate_pseudoidempotent(carrier: FinCat, endo: Functor, mult: NatTrans) -> Pseudoidempotent:
    violations = []
    if endo.source is not carrier or endo.target is not carrier:
        violations.append("endofunctor does not act on the carrier")
    else:
        if mult.source.key() != compose_functors(endo, endo).key():
            violations.append("multiplication does not start at the square")
        if mult.target.key() != endo.key():
            violations.append("multiplication does not end at the endofunctor")
        violations.extend(nattrans_violations(mult))
        if not mult.is_invertible():
            violations.append("multiplication is not componentwise invertible")
    if violations:
        raise ValidationError("pseudoidempotent", violations)
    return Pseudoidempotent(carrier, endo, mult)


@dataclass(eq=False)
class Splitting:
    category: FinCat           # inserter of (e, 1)
    section: Functor           # r : A -> B
    retraction: Functor        # s : B -> A
    alpha: NatTrans            # s∘r ≅ e
    beta: NatTrans             # r∘s ≅ 1_B


def split_pseudoidempotent(p: Pseudoidempotent) -> Splitting:
    """Split through the category of objects with a chosen absorption iso.

    The underlying category pairs an object with an isomorphism e(a) ≅ a;
    the section sends a to (e(a), mult_a).  The comparison r∘s ≅ 1 is found
    by search and re-validated, so degenerate idempotent data that does not
    actually split is reported rather than papered over.
    """
    a_cat, e = p.carrier, p.endo
    objs = []
    obj_of = {}
    for a in a_cat.objects:
        for mu in a_cat.hom(e.obj_map[a], a):
            if a_cat.is_iso(mu):
                name = f"({a}|{mu})"
                objs.append(name)
                obj_of[name] = (a, mu)
    mors = []
    for src in objs:
        a, mu = obj_of[src]
        for tgt in objs:
            a2, mu2 = obj_of[tgt]
            for g in a_cat.hom(a, a2):
                if a_cat.table[(mu2, e.mor_map[g])] != a_cat.table[(g, mu)]:
                    continue
                mors.append((f"({g}:{src}>{tgt})", src, tgt))
    idents = {o: f"({a_cat.identity[obj_of[o][0]]}:{o}>{o})" for o in objs}
    table = {}
    for (m1, s1, t1) in mors:
        u1 = m1[1 : m1.index(":")]
        for (m2, s2, t2) in mors:
            if s2 != t1:
                continue
            u2 = m2[1 : m2.index(":")]
            table[(m2, m1)] = f"({a_cat.table[(u2, u1)]}:{s1}>{t2})"
    b_cat = build_fincat(f"split({e.name})", objs, mors, idents, table)
    retraction = build_functor(
        "split_s",
        b_cat,
        a_cat,
        {o: obj_of[o][0] for o in objs},
        {m: m[1 : m.index(":")] for m, _, _ in mors},
    )
    sec_obj = {}
    sec_mor = {}
    for a in a_cat.objects:
        sec_obj[a] = f"({e.obj_map[a]}|{p.mult.components[a]})"
    for g in a_cat.dom:
        src, tgt = sec_obj[a_cat.dom[g]], sec_obj[a_cat.cod[g]]
        sec_mor[g] = f"({e.mor_map[g]}:{src}>{tgt})"
    section = build_functor("split_r", a_cat, b_cat, sec_obj, sec_mor)
    alpha = build_nattrans(
        "split_alpha",
        compose_functors(retraction, section),
        e,
        {a: a_cat.identity[e.obj_map[a]] for a in a_cat.objects},
    )
    beta = natural_iso_search(compose_functors(section, retraction), identity_functor(b_cat))
    if beta is None:
        raise ValidationError(
            "split", ["no invertible comparison between the round trip and the identity"]
        )
    return Splitting(b_cat, section, retraction, alpha, beta)


# ---------------------------------------------------------------------------
# Pointwise-limit diagrams (for commutation with filtered colimits)


def biproduct_diagram(f1: CatPseudoFunctor, f2: CatPseudoFunctor, name: str = "prod") -> tuple[CatPseudoFunctor, dict[str, Biproduct]]:
    """Stagewise product of two diagrams over the same index."""
    if f1.source is not f2.source:
        raise ValidationError(name, ["diagrams do not share an index"])
    tc = f1.source
    prods = {i: biproduct(f1.on0[i], f2.on0[i]) for i in tc.cells0}

    def pair_functor(d: str) -> Functor:
        i, j = tc.one_home[d]
        pi, pj = prods[i], prods[j]
        return build_functor(
            f"{name}_{d}",
            pi.category,
            pj.category,
            {
                pi.pair_obj(x, y): pj.pair_obj(f1.on1[d].obj_map[x], f2.on1[d].obj_map[y])
                for x in f1.on0[i].objects
                for y in f2.on0[i].objects
            },
            {
                pi.pair_mor(m, n): pj.pair_mor(f1.on1[d].mor_map[m], f2.on1[d].mor_map[n])
                for m in f1.on0[i].morphisms
                for n in f2.on0[i].morphisms
            },
        )

    on1 = {d: pair_functor(d) for d in tc.one_home}
    on2 = {}
    for b in tc.two_cells:
        i, j = tc.two_home[b]
        d, d2 = tc.dom2(b), tc.cod2(b)
        on2[b] = NatTrans(
            f"{name}_{b}",
            on1[d],
            on1[d2],
            {
                prods[i].pair_obj(x, y): prods[j].pair_mor(
                    f1.on2[b].components[x], f2.on2[b].components[y]
                )
                for x in f1.on0[i].objects
                for y in f2.on0[i].objects
            },
        )
    comp = {}
    for (g, d), c1 in f1.comp.items():
        c2 = f2.comp[(g, d)]
        i = tc.one_home[d][0]
        k = tc.one_home[g][1]
        comp[(g, d)] = NatTrans(
            f"{name}_c({g},{d})",
            compose_functors(on1[g], on1[d]),
            on1[tc.hcomp1[(g, d)]],
            {
                prods[i].pair_obj(x, y): prods[k].pair_mor(
                    c1.components[x], c2.components[y]
                )
                for x in f1.on0[i].objects
                for y in f2.on0[i].objects
            },
        )
    unit_c = {}
    for i in tc.cells0:
        unit_c[i] = NatTrans(
            f"{name}_u({i})",
            identity_functor(prods[i].category),
            on1[tc.unit[i]],
            {
                prods[i].pair_obj(x, y): prods[i].pair_mor(
                    f1.unit_c[i].components[x], f2.unit_c[i].components[y]
                )
                for x in f1.on0[i].objects
                for y in f2.on0[i].objects
            },
        )
    pf = build_pseudofunctor(
        name, tc, {i: prods[i].category for i in tc.cells0}, on1, on2, comp, unit_c
    )
    return pf, prods


def cotensor_diagram(f: CatPseudoFunctor, name: str = "sq") -> tuple[CatPseudoFunctor, dict[str, ArrowCotensor]]:
    """Stagewise arrow category of a diagram."""
    tc = f.source
    cots = {i: arrow_cotensor(f.on0[i]) for i in tc.cells0}

    def sq_functor(d: str) -> Functor:
        i, j = tc.one_home[d]
        ci, cj = cots[i], cots[j]
        fib_i = f.on0[i]
        fun = f.on1[d]
        obj_map = {m: fun.mor_map[m] for m in fib_i.morphisms}
        mor_map = {}
        for m in ci.category.morphisms:
            p = m[1 : m.index(",")]
            q = m[m.index(",") + 1 : m.index("]")]
            src = ci.category.dom[m]
            tgt = ci.category.cod[m]
            mor_map[m] = cj.square(fun.mor_map[p], fun.mor_map[q], fun.mor_map[src], fun.mor_map[tgt])
        return build_functor(f"{name}_{d}", ci.category, cj.category, obj_map, mor_map)

    on1 = {d: sq_functor(d) for d in tc.one_home}
    on2 = {}
    for b in tc.two_cells:
        i, j = tc.two_home[b]
        d, d2 = tc.dom2(b), tc.cod2(b)
        fib_i = f.on0[i]
        comps = {}
        for m in fib_i.morphisms:
            a, bb = fib_i.dom[m], fib_i.cod[m]
            comps[m] = cots[j].square(
                f.on2[b].components[a],
                f.on2[b].components[bb],
                f.on1[d].mor_map[m],
                f.on1[d2].mor_map[m],
            )
        on2[b] = NatTrans(f"{name}_{b}", on1[d], on1[d2], comps)
    comp = {}
    for (g, d), c1 in f.comp.items():
        i = tc.one_home[d][0]
        k = tc.one_home[g][1]
        fib_i = f.on0[i]
        comps = {}
        for m in fib_i.morphisms:
            a, bb = fib_i.dom[m], fib_i.cod[m]
            comps[m] = cots[k].square(
                c1.components[a],
                c1.components[bb],
                compose_functors(f.on1[g], f.on1[d]).mor_map[m],
                f.on1[tc.hcomp1[(g, d)]].mor_map[m],
            )
        comp[(g, d)] = NatTrans(
            f"{name}_c({g},{d})",
            compose_functors(on1[g], on1[d]),
            on1[tc.hcomp1[(g, d)]],
            comps,
        )
    unit_c = {}
    for i in tc.cells0:
        fib_i = f.on0[i]
        comps = {}
        for m in fib_i.morphisms:
            a, bb = fib_i.dom[m], fib_i.cod[m]
            comps[m] = cots[i].square(
                f.unit_c[i].components[a],
                f.unit_c[i].components[bb],
                m,
                f.on1[tc.unit[i]].mor_map[m],
            )
        unit_c[i] = NatTrans(
            f"{name}_u({i})", identity_functor(cots[i].category), on1[tc.unit[i]], comps
        )
    pf = build_pseudofunctor(
        name, tc, {i: cots[i].category for i in tc.cells0}, on1, on2, comp, unit_c
    )
    return pf, cots


def biequalizer_diagram(
    f1: CatPseudoFunctor,
    f2: CatPseudoFunctor,
    u: dict[str, Functor],
    v: dict[str, Functor],
    name: str = "eqz",
) -> tuple[CatPseudoFunctor, dict[str, Biequalizer]]:
    """Stagewise biequalizer of two strictly 2-natural transformations.

    Requires u_j ∘ F1(d) = F2(d) ∘ u_i on the nose (and likewise for v);
    this is what the bundled fixtures provide.
    """
    tc = f1.source
    for d in tc.one_home:
        i, j = tc.one_home[d]
        for w, tag in ((u, "u"), (v, "v")):
            lhs = compose_functors(w[j], f1.on1[d]).key()
            rhs = compose_functors(f2.on1[d], w[i]).key()
            if lhs != rhs:
                raise ValidationError(name, [f"{tag} is not strictly natural at {d!r}"])
    eqs = {i: biequalizer(u[i], v[i]) for i in tc.cells0}

    def eq_functor(d: str) -> Functor:
        i, j = tc.one_home[d]
        ei, ej = eqs[i], eqs[j]
        obj_map = {}
        for o in ei.category.objects:
            a, theta = ei.obj_of[o]
            obj_map[o] = ej.obj(f1.on1[d].obj_map[a], f2.on1[d].mor_map[theta])
        mor_map = {}
        for m in ei.category.morphisms:
            g = m[1 : m.index(":")]
            src, tgt = ei.category.dom[m], ei.category.cod[m]
            mor_map[m] = f"({f1.on1[d].mor_map[g]}:{obj_map[src]}>{obj_map[tgt]})"
        return build_functor(f"{name}_{d}", ei.category, ej.category, obj_map, mor_map)

    on1 = {d: eq_functor(d) for d in tc.one_home}
    on2 = {}
    for b in tc.two_cells:
        i, j = tc.two_home[b]
        d, d2 = tc.dom2(b), tc.cod2(b)
        comps = {}
        for o in eqs[i].category.objects:
            a, _ = eqs[i].obj_of[o]
            src = on1[d].obj_map[o]
            tgt = on1[d2].obj_map[o]
            comps[o] = f"({f1.on2[b].components[a]}:{src}>{tgt})"
        on2[b] = NatTrans(f"{name}_{b}", on1[d], on1[d2], comps)
    comp = {}
    for (g, d), c1 in f1.comp.items():
        i = tc.one_home[d][0]
        comps = {}
        for o in eqs[i].category.objects:
            a, _ = eqs[i].obj_of[o]
            src = compose_functors(on1[g], on1[d]).obj_map[o]
            tgt = on1[tc.hcomp1[(g, d)]].obj_map[o]
            comps[o] = f"({c1.components[a]}:{src}>{tgt})"
        comp[(g, d)] = NatTrans(
            f"{name}_c({g},{d})",
            compose_functors(on1[g], on1[d]),
            on1[tc.hcomp1[(g, d)]],
            comps,
        )
    unit_c = {}
    for i in tc.cells0:
        comps = {}
        for o in eqs[i].category.objects:
            a, _ = eqs[i].obj_of[o]
            comps[o] = f"({f1.unit_c[i].components[a]}:{o}>{on1[tc.unit[i]].obj_map[o]})"
        unit_c[i] = NatTrans(
            f"{name}_u({i})", identity_functor(eqs[i].category), on1[tc.unit[i]], comps
        )
    pf = build_pseudofunctor(
        name, tc, {i: eqs[i].category for i in tc.cells0}, on1, on2, comp, unit_c
    )
    return pf, eqs


# ---------------------------------------------------------------------------
# Commutation checks


def commute_biproduct(f1: CatPseudoFunctor, f2: CatPseudoFunctor) -> Verdict:
    """colim(F1 x F2) against colim(F1) x colim(F2)."""
    from .colim import bifiltered_bicolimit

    pointwise, _ = biproduct_diagram(f1, f2)
    lhs = bifiltered_bicolimit(pointwise)
    c1 = bifiltered_bicolimit(f1, precheck=False)
    c2 = bifiltered_bicolimit(f2, precheck=False)
    rhs = biproduct(c1.result, c2.result)
    return check_equivalence(lhs.result, rhs.category)


def commute_cotensor(f: CatPseudoFunctor) -> Verdict:
    """colim([2, F]) against [2, colim F]."""
    from .colim import bifiltered_bicolimit

    pointwise, _ = cotensor_diagram(f)
    lhs = bifiltered_bicolimit(pointwise)
    rhs = arrow_cotensor(bifiltered_bicolimit(f, precheck=False).result)
    return check_equivalence(lhs.result, rhs.category)


def commute_biequalizer(
    f1: CatPseudoFunctor,
    f2: CatPseudoFunctor,
    u: dict[str, Functor],
    v: dict[str, Functor],
) -> Verdict:
    """colim of stagewise equalizers against the equalizer of induced maps."""
    from .colim import bifiltered_bicolimit, factor_cocone

    pointwise, _ = biequalizer_diagram(f1, f2, u, v)
    lhs = bifiltered_bicolimit(pointwise)
    c1 = bifiltered_bicolimit(f1, precheck=False)
    c2 = bifiltered_bicolimit(f2, precheck=False)

    def induced(w: dict[str, Functor], tag: str) -> Functor:
        legs = {i: compose_functors(c2.cocone[i], w[i]) for i in f1.source.cells0}
        cells = {}
        for d in f1.source.one_home:
            i, j = f1.source.one_home[d]
            cells[d] = NatTrans(
                f"{tag}_{d}",
                compose_functors(legs[j], f1.on1[d]),
                legs[i],
                {
                    a: c2.transitions[d].components[w[i].obj_map[a]]
                    for a in f1.on0[i].objects
                },
            )
        return factor_cocone(c1, c2.result, legs, cells).functor

    rhs = biequalizer(induced(u, "u"), induced(v, "v"))
    return check_equivalence(lhs.result, rhs.category)
