"""Finite strict 2-categories, classes of 1-cells, and Cat-valued pseudofunctors.

A :class:`TwoCat` keeps one FinCat per ordered pair of 0-cells (objects of the
hom category are the 1-cells, morphisms the 2-cells) plus total horizontal
composition tables on both levels.  1-cell and 2-cell names are required to be
globally unique, which keeps every lookup flat.

Pseudo-ness lives entirely in :class:`CatPseudoFunctor`: the underlying
2-categories are always strict, and functors between bases are strict
2-functors (:class:`TwoFunctor`).
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Mapping

from .fincat import (
    FinCat,
    Functor,
    NatTrans,
    ValidationError,
    build_fincat,
    compose_functors,
    functor_violations,
    hcompose_nattrans,
    identity_functor,
    identity_nattrans,
    invert_nattrans,
    nattrans_violations,
    vcompose_nattrans,
    whisker_functor,
    whisker_nattrans,
)


@dataclass(eq=False)
class TwoCat:
    name: str
    cells0: tuple[str, ...]
    hom: dict[tuple[str, str], FinCat]
    hcomp1: dict[tuple[str, str], str]
    hcomp2: dict[tuple[str, str], str]
    unit: dict[str, str]
    one_home: dict[str, tuple[str, str]] = field(default_factory=dict, repr=False)
    two_home: dict[str, tuple[str, str]] = field(default_factory=dict, repr=False)

    def __post_init__(self) -> None:
        if not self.one_home:
            for (i, j), cat in self.hom.items():
                for f in cat.objects:
                    self.one_home[f] = (i, j)
                for a in cat.dom:
                    self.two_home[a] = (i, j)

    # -- 1-cells ------------------------------------------------------------

    @property
    def one_cells(self) -> tuple[str, ...]:
        return tuple(sorted(self.one_home))

    def src(self, f: str) -> str:
        return self.one_home[f][0]

    def dst(self, f: str) -> str:
        return self.one_home[f][1]

    def cells1(self, i: str, j: str) -> tuple[str, ...]:
        cat = self.hom.get((i, j))
        return cat.objects if cat is not None else ()

    def compose1(self, g: str, f: str) -> str:
        """g∘f for f: i -> j, g: j -> k."""
        return self.hcomp1[(g, f)]

    def id1(self, i: str) -> str:
        return self.unit[i]

    # -- 2-cells ------------------------------------------------------------

    @property
    def two_cells(self) -> tuple[str, ...]:
        return tuple(sorted(self.two_home))

    def hom_of(self, f: str) -> FinCat:
        return self.hom[self.one_home[f]]

    def hom_of2(self, a: str) -> FinCat:
        return self.hom[self.two_home[a]]

    def dom2(self, a: str) -> str:
        cat = self.hom_of2(a)
        return cat.dom[a]

    def cod2(self, a: str) -> str:
        cat = self.hom_of2(a)
        return cat.cod[a]

    def id2(self, f: str) -> str:
        return self.hom_of(f).identity[f]

    def vcomp(self, b: str, a: str) -> str:
        """Vertical composite b∘a inside one hom category."""
        return self.hom_of2(a).table[(b, a)]

    def hcomp(self, b: str, a: str) -> str:
        """Horizontal composite of 2-cells (b over the codomain side)."""
        return self.hcomp2[(b, a)]

    def whisker_l(self, g: str, a: str) -> str:
        return self.hcomp2[(self.id2(g), a)]

    def whisker_r(self, a: str, f: str) -> str:
        return self.hcomp2[(a, self.id2(f))]

    def invertible2(self, a: str) -> bool:
        return self.hom_of2(a).is_iso(a)

    def invertible_between(self, d: str, s: str) -> tuple[str, ...]:
        """Invertible 2-cells d ⇒ s (parallel 1-cells only)."""
        if self.one_home[d] != self.one_home[s]:
            return ()
        cat = self.hom_of(d)
        return tuple(a for a in cat.hom(d, s) if cat.is_iso(a))


def build_twocat(
    name: str,
    cells0: Iterable[str],
    hom: Mapping[tuple[str, str], FinCat],
    hcomp1: Mapping[tuple[str, str], str],
    hcomp2: Mapping[tuple[str, str], str],
    unit: Mapping[str, str],
) -> TwoCat:
    zero = tuple(sorted(set(cells0)))
    full_hom = dict(hom)
    for i in zero:
        for j in zero:
            if (i, j) not in full_hom:
                full_hom[(i, j)] = build_fincat(f"{name}[{i},{j}]", [], [], {}, {})
    cat = TwoCat(name, zero, full_hom, dict(hcomp1), dict(hcomp2), dict(unit))
    violations = twocat_violations(cat)
    if violations:
        raise ValidationError(name, violations)
    return cat


def twocat_violations(tc: TwoCat) -> list[str]:
    out: list[str] = []
    seen1: set[str] = set()
    seen2: set[str] = set()
    for (i, j), cat in tc.hom.items():
        if i not in tc.cells0 or j not in tc.cells0:
            out.append(f"hom pair ({i!r},{j!r}) references unknown 0-cell")
        for f in cat.objects:
            if f in seen1:
                out.append(f"1-cell name {f!r} is not globally unique")
            seen1.add(f)
        for a in cat.dom:
            if a in seen2:
                out.append(f"2-cell name {a!r} is not globally unique")
            seen2.add(a)
    for i in tc.cells0:
        u = tc.unit.get(i)
        if u is None or tc.one_home.get(u) != (i, i):
            out.append(f"unit of {i!r} missing or not an endo-1-cell")
    if out:
        return out

    # totality and typing of 1-cell composition
    for f in tc.one_cells:
        fi, fj = tc.one_home[f]
        for g in tc.one_cells:
            gi, gj = tc.one_home[g]
            if gi != fj:
                continue
            gf = tc.hcomp1.get((g, f))
            if gf is None:
                out.append(f"1-cell composite of ({g!r}, {f!r}) missing")
            elif tc.one_home.get(gf) != (fi, gj):
                out.append(f"1-cell composite of ({g!r}, {f!r}) has wrong type")
    for (g, f) in tc.hcomp1:
        if g not in tc.one_home or f not in tc.one_home or tc.src(g) != tc.dst(f):
            out.append(f"1-cell composite listed for non-composable ({g!r}, {f!r})")
    if out:
        return out
    for f in tc.one_cells:
        i, j = tc.one_home[f]
        if tc.hcomp1[(tc.unit[j], f)] != f or tc.hcomp1[(f, tc.unit[i])] != f:
            out.append(f"1-cell unit law fails at {f!r}")
    for f in tc.one_cells:
        for g in tc.one_cells:
            if tc.src(g) != tc.dst(f):
                continue
            for h in tc.one_cells:
                if tc.src(h) != tc.dst(g):
                    continue
                if tc.hcomp1[(h, tc.hcomp1[(g, f)])] != tc.hcomp1[(tc.hcomp1[(h, g)], f)]:
                    out.append(f"1-cell associativity fails on ({h!r}, {g!r}, {f!r})")
    if out:
        return out

    # totality, typing, functoriality and strictness of 2-cell composition
    for a in tc.two_cells:
        ai, aj = tc.two_home[a]
        for b in tc.two_cells:
            bi, bj = tc.two_home[b]
            if bi != aj:
                continue
            ba = tc.hcomp2.get((b, a))
            if ba is None:
                out.append(f"2-cell composite of ({b!r}, {a!r}) missing")
                continue
            if tc.two_home.get(ba) != (ai, bj):
                out.append(f"2-cell composite of ({b!r}, {a!r}) in wrong hom")
                continue
            want_dom = tc.hcomp1[(tc.dom2(b), tc.dom2(a))]
            want_cod = tc.hcomp1[(tc.cod2(b), tc.cod2(a))]
            if tc.dom2(ba) != want_dom or tc.cod2(ba) != want_cod:
                out.append(f"2-cell composite of ({b!r}, {a!r}) has wrong boundary")
    if out:
        return out
    for f in tc.one_cells:
        for g in tc.one_cells:
            if tc.src(g) != tc.dst(f):
                continue
            if tc.hcomp2[(tc.id2(g), tc.id2(f))] != tc.id2(tc.hcomp1[(g, f)]):
                out.append(f"horizontal composition of identities fails on ({g!r}, {f!r})")
    # interchange: sampled over all vertically composable squares
    for a in tc.two_cells:
        ai, aj = tc.two_home[a]
        cat_a = tc.hom[(ai, aj)]
        for a2 in cat_a.morphisms:
            if cat_a.dom[a2] != tc.cod2(a):
                continue
            for b in tc.two_cells:
                if tc.two_home[b][0] != aj:
                    continue
                cat_b = tc.hom_of2(b)
                for b2 in cat_b.morphisms:
                    if cat_b.dom[b2] != tc.cod2(b):
                        continue
                    lhs = tc.hcomp2[(cat_b.table[(b2, b)], cat_a.table[(a2, a)])]
                    rhs = tc.hom[(ai, tc.two_home[b][1])].table[
                        (tc.hcomp2[(b2, a2)], tc.hcomp2[(b, a)])
                    ]
                    if lhs != rhs:
                        out.append(f"interchange fails on ({b2!r},{b!r};{a2!r},{a!r})")
                        if len(out) > 10:
                            return out
    for a in tc.two_cells:
        i, j = tc.two_home[a]
        if tc.hcomp2[(tc.id2(tc.unit[j]), a)] != a or tc.hcomp2[(a, tc.id2(tc.unit[i]))] != a:
            out.append(f"2-cell unit law fails at {a!r}")
    for a in tc.two_cells:
        for b in tc.two_cells:
            if tc.two_home[b][0] != tc.two_home[a][1]:
                continue
            for c in tc.two_cells:
                if tc.two_home[c][0] != tc.two_home[b][1]:
                    continue
                if tc.hcomp2[(c, tc.hcomp2[(b, a)])] != tc.hcomp2[(tc.hcomp2[(c, b)], a)]:
                    out.append(f"2-cell associativity fails on ({c!r}, {b!r}, {a!r})")
                    if len(out) > 10:
                        return out
    return out


def validate_twocat(data: Mapping, name: str | None = None) -> TwoCat:
    """Build a TwoCat from a raw fixture document."""
    label = name or data.get("name", "<twocat>")
    try:
        zero = list(data["zero_cells"])
        hom: dict[tuple[str, str], FinCat] = {}
        for entry in data.get("hom", []):
            cat = build_fincat(
                f"{label}[{entry['src']},{entry['dst']}]",
                entry["objects"],
                [(m["name"], m["dom"], m["cod"]) for m in entry["morphisms"]],
                entry["identities"],
                {(g, f): gf for g, f, gf in entry["composition"]},
            )
            hom[(entry["src"], entry["dst"])] = cat
        hcomp1 = {(g, f): gf for g, f, gf in data.get("hcomp1", [])}
        hcomp2 = {(b, a): ba for b, a, ba in data.get("hcomp2", [])}
        unit = dict(data["units"])
    except ValidationError:
        raise
    except (KeyError, TypeError, ValueError) as exc:
        raise ValidationError(label, [f"malformed document: {exc}"])
    return build_twocat(label, zero, hom, hcomp1, hcomp2, unit)


def describe_twocat(tc: TwoCat) -> dict:
    return {
        "kind": "twocat",
        "name": tc.name,
        "zero_cells": list(tc.cells0),
        "hom": [
            dict(src=i, dst=j, **tc.hom[(i, j)].describe())
            for i, j in sorted(tc.hom)
            if tc.hom[(i, j)].objects
        ],
        "units": dict(sorted(tc.unit.items())),
        "hcomp1": [[g, f, gf] for (g, f), gf in sorted(tc.hcomp1.items())],
        "hcomp2": [[b, a, ba] for (b, a), ba in sorted(tc.hcomp2.items())],
    }


def locally_discrete(cat: FinCat, name: str | None = None) -> TwoCat:
    """The 2-category with only identity 2-cells over a finite category."""
    hom: dict[tuple[str, str], FinCat] = {}
    for i in cat.objects:
        for j in cat.objects:
            cells = cat.hom(i, j)
            hom[(i, j)] = build_fincat(
                f"{cat.name}[{i},{j}]",
                cells,
                [(f"v_{m}", m, m) for m in cells],
                {m: f"v_{m}" for m in cells},
                {(f"v_{m}", f"v_{m}"): f"v_{m}" for m in cells},
            )
    hcomp2 = {
        (f"v_{g}", f"v_{f}"): f"v_{gf}" for (g, f), gf in cat.table.items()
    }
    return build_twocat(
        name or f"ld({cat.name})",
        cat.objects,
        hom,
        dict(cat.table),
        hcomp2,
        dict(cat.identity),
    )


def terminal_twocat() -> TwoCat:
    hom = build_fincat("pt[.,.]", ["one"], [("v_one", "one", "one")], {"one": "v_one"}, {("v_one", "v_one"): "v_one"})
    return build_twocat(
        "pt", ["."], {(".", "."): hom}, {("one", "one"): "one"}, {("v_one", "v_one"): "v_one"}, {".": "one"}
    )


def op1(tc: TwoCat) -> TwoCat:
    """Dual on 1-cells only; 2-cells keep their direction."""
    return build_twocat(
        f"{tc.name}^op",
        tc.cells0,
        {(i, j): tc.hom[(j, i)] for (j, i) in tc.hom},
        {(g, f): tc.hcomp1[(f, g)] for (f, g) in tc.hcomp1},
        {(b, a): tc.hcomp2[(a, b)] for (a, b) in tc.hcomp2},
        dict(tc.unit),
    )


def full_sub_on_zero_cells(tc: TwoCat, objs: Iterable[str], name: str | None = None) -> TwoCat:
    """Full sub-2-category spanned by a subset of the 0-cells."""
    kept0 = sorted(set(objs))
    hom = {(i, j): tc.hom[(i, j)] for i in kept0 for j in kept0}
    kept1 = {f for cat in hom.values() for f in cat.objects}
    kept2 = {a for cat in hom.values() for a in cat.dom}
    return build_twocat(
        name or f"{tc.name}|{'+'.join(kept0)}",
        kept0,
        hom,
        {k: v for k, v in tc.hcomp1.items() if k[0] in kept1 and k[1] in kept1},
        {k: v for k, v in tc.hcomp2.items() if k[0] in kept2 and k[1] in kept2},
        {i: tc.unit[i] for i in kept0},
    )


def full_sub_on_one_cells(tc: TwoCat, keep: Iterable[str], name: str | None = None) -> TwoCat:
    """Full-on-0-cells-and-2-cells subcategory with the given 1-cells.

    ``keep`` must contain the units and be closed under composition.
    """
    kept = set(keep)
    missing_units = [i for i in tc.cells0 if tc.unit[i] not in kept]
    if missing_units:
        raise ValidationError(
            tc.name, [f"1-cell class misses unit of {i!r}" for i in missing_units]
        )
    for f in kept:
        for g in kept:
            if tc.one_home[f][1] == tc.one_home[g][0] and tc.hcomp1[(g, f)] not in kept:
                raise ValidationError(
                    tc.name, [f"1-cell class not closed under ({g!r}, {f!r})"]
                )
    hom: dict[tuple[str, str], FinCat] = {}
    kept2: set[str] = set()
    for (i, j), cat in tc.hom.items():
        objs = [f for f in cat.objects if f in kept]
        objset = set(objs)
        mors = [a for a in cat.morphisms if cat.dom[a] in objset and cat.cod[a] in objset]
        kept2.update(mors)
        morset = set(mors)
        hom[(i, j)] = build_fincat(
            f"{cat.name}|",
            objs,
            [(a, cat.dom[a], cat.cod[a]) for a in mors],
            {f: cat.identity[f] for f in objs},
            {k: v for k, v in cat.table.items() if k[0] in morset and k[1] in morset},
        )
    return build_twocat(
        name or f"{tc.name}|sigma",
        tc.cells0,
        hom,
        {k: v for k, v in tc.hcomp1.items() if k[0] in kept and k[1] in kept},
        {k: v for k, v in tc.hcomp2.items() if k[0] in kept2 and k[1] in kept2},
        dict(tc.unit),
    )


# ---------------------------------------------------------------------------
# Classes of 1-cells


@dataclass(eq=False)
class SigmaClass:
    owner: TwoCat
    members: frozenset[str]
    name: str = "sigma"

    def __post_init__(self) -> None:
        bad = [f for f in self.members if f not in self.owner.one_home]
        if bad:
            raise ValidationError(self.name, [f"unknown 1-cell {f!r}" for f in bad])

    def __contains__(self, f: str) -> bool:
        return f in self.members


def all_one_cells(tc: TwoCat, name: str = "all") -> SigmaClass:
    return SigmaClass(tc, frozenset(tc.one_home), name)


def sigma_closure(s: SigmaClass) -> SigmaClass:
    """Least fixed point of: composition, identities, invertible-2-cell mates."""
    tc = s.owner
    closure = set(s.members) | {tc.unit[i] for i in tc.cells0}
    changed = True
    while changed:
        changed = False
        for f in sorted(closure):
            for g in sorted(closure):
                if tc.one_home[g][0] == tc.one_home[f][1]:
                    gf = tc.hcomp1[(g, f)]
                    if gf not in closure:
                        closure.add(gf)
                        changed = True
        for d in tc.one_cells:
            if d in closure:
                continue
            i, j = tc.one_home[d]
            for t in tc.cells1(i, j):
                if t in closure and (
                    tc.invertible_between(d, t) or tc.invertible_between(t, d)
                ):
                    closure.add(d)
                    changed = True
                    break
    return SigmaClass(tc, frozenset(closure), f"{s.name}~")


def internal_equivalences(tc: TwoCat) -> frozenset[str]:
    """Diagnostic: 1-cells f with a quasi-inverse up to invertible 2-cells."""
    out = set()
    for f in tc.one_cells:
        i, j = tc.one_home[f]
        for g in tc.cells1(j, i):
            gf, fg = tc.hcomp1[(g, f)], tc.hcomp1[(f, g)]
            if tc.invertible_between(gf, tc.unit[i]) and tc.invertible_between(fg, tc.unit[j]):
                out.add(f)
                break
    return frozenset(out)


# ---------------------------------------------------------------------------
# Strict 2-functors


@dataclass(eq=False)
class TwoFunctor:
    name: str
    source: TwoCat
    target: TwoCat
    on0: dict[str, str]
    on1: dict[str, str]
    on2: dict[str, str]

    def map0(self, i: str) -> str:
        return self.on0[i]

    def map1(self, f: str) -> str:
        return self.on1[f]

    def map2(self, a: str) -> str:
        return self.on2[a]


def twofunctor_violations(fn: TwoFunctor) -> list[str]:
    out: list[str] = []
    src, tgt = fn.source, fn.target
    for i in src.cells0:
        if fn.on0.get(i) not in tgt.cells0:
            out.append(f"0-cell {i!r} not mapped")
    for f in src.one_cells:
        i, j = src.one_home[f]
        im = fn.on1.get(f)
        if im is None or tgt.one_home.get(im) != (fn.on0[i], fn.on0[j]):
            out.append(f"1-cell {f!r} not mapped correctly")
    for a in src.two_cells:
        im = fn.on2.get(a)
        if im is None:
            out.append(f"2-cell {a!r} not mapped")
            continue
        if (
            tgt.dom2(im) != fn.on1[src.dom2(a)]
            or tgt.cod2(im) != fn.on1[src.cod2(a)]
        ):
            out.append(f"2-cell {a!r} has wrong image boundary")
    if out:
        return out
    for i in src.cells0:
        if fn.on1[src.unit[i]] != tgt.unit[fn.on0[i]]:
            out.append(f"unit of {i!r} not preserved")
    for (g, f), gf in src.hcomp1.items():
        if tgt.hcomp1[(fn.on1[g], fn.on1[f])] != fn.on1[gf]:
            out.append(f"1-cell composition not preserved on ({g!r}, {f!r})")
    for f in src.one_cells:
        if fn.on2[src.id2(f)] != tgt.id2(fn.on1[f]):
            out.append(f"identity 2-cell of {f!r} not preserved")
    for a in src.two_cells:
        cat = src.hom_of2(a)
        for b in cat.morphisms:
            if cat.dom[b] == cat.cod[a]:
                if fn.on2[cat.table[(b, a)]] != tgt.vcomp(fn.on2[b], fn.on2[a]):
                    out.append(f"vertical composition not preserved on ({b!r}, {a!r})")
    for (b, a), ba in src.hcomp2.items():
        if tgt.hcomp2[(fn.on2[b], fn.on2[a])] != fn.on2[ba]:
            out.append(f"horizontal composition not preserved on ({b!r}, {a!r})")
    return out


def build_twofunctor(
    name: str,
    source: TwoCat,
    target: TwoCat,
    on0: Mapping[str, str],
    on1: Mapping[str, str],
    on2: Mapping[str, str],
) -> TwoFunctor:
    fn = TwoFunctor(name, source, target, dict(on0), dict(on1), dict(on2))
    violations = twofunctor_violations(fn)
    if violations:
        raise ValidationError(name, violations)
    return fn


def inclusion_twofunctor(sub: TwoCat, whole: TwoCat, name: str | None = None) -> TwoFunctor:
    return build_twofunctor(
        name or f"incl({sub.name})",
        sub,
        whole,
        {i: i for i in sub.cells0},
        {f: f for f in sub.one_home},
        {a: a for a in sub.two_home},
    )


# ---------------------------------------------------------------------------
# Cat-valued pseudofunctors


@dataclass(eq=False)
class CatPseudoFunctor:
    name: str
    source: TwoCat
    on0: dict[str, FinCat]
    on1: dict[str, Functor]
    on2: dict[str, NatTrans]
    comp: dict[tuple[str, str], NatTrans]
    unit_c: dict[str, NatTrans]

    def fiber(self, i: str) -> FinCat:
        return self.on0[i]

    def act1(self, f: str) -> Functor:
        return self.on1[f]

    def act2(self, a: str) -> NatTrans:
        return self.on2[a]

    def comp_at(self, g: str, f: str, a: str) -> str:
        """Component F(g)(F(f)(a)) -> F(g∘f)(a) of the comparison."""
        return self.comp[(g, f)].components[a]

    def unit_at(self, i: str, a: str) -> str:
        """Component a -> F(1_i)(a) of the unit comparison."""
        return self.unit_c[i].components[a]

    def is_strict(self) -> bool:
        return all(
            nt.components == identity_nattrans(nt.source).components
            for nt in list(self.comp.values()) + list(self.unit_c.values())
        )


def pseudofunctor_violations(pf: CatPseudoFunctor) -> list[str]:
    out: list[str] = []
    tc = pf.source
    for i in tc.cells0:
        if i not in pf.on0:
            out.append(f"no category assigned to 0-cell {i!r}")
    if out:
        return out
    for f in tc.one_cells:
        i, j = tc.one_home[f]
        fun = pf.on1.get(f)
        if fun is None or fun.source is not pf.on0[i] or fun.target is not pf.on0[j]:
            out.append(f"1-cell {f!r} has no well-typed functor")
            continue
        bad = functor_violations(fun)
        if bad:
            out.append(f"functor at {f!r}: {bad[0]}")
    if out:
        return out
    for a in tc.two_cells:
        nt = pf.on2.get(a)
        if nt is None or nt.source is not pf.on1[tc.dom2(a)] or nt.target is not pf.on1[tc.cod2(a)]:
            out.append(f"2-cell {a!r} has no well-typed transformation")
            continue
        bad = nattrans_violations(nt)
        if bad:
            out.append(f"transformation at {a!r}: {bad[0]}")
    if out:
        return out
    # local functoriality of the 2-cell action
    for f in tc.one_cells:
        if pf.on2[tc.id2(f)].components != identity_nattrans(pf.on1[f]).components:
            out.append(f"identity 2-cell of {f!r} not sent to the identity")
    for a in tc.two_cells:
        cat = tc.hom_of2(a)
        for b in cat.morphisms:
            if cat.dom[b] == cat.cod[a]:
                got = pf.on2[cat.table[(b, a)]]
                want = vcompose_nattrans(pf.on2[b], pf.on2[a])
                if got.components != want.components:
                    out.append(f"vertical composition not respected on ({b!r}, {a!r})")
    if out:
        return out
    # comparison cells: typing and invertibility
    for (g, f), nt in pf.comp.items():
        if tc.one_home[g][0] != tc.one_home[f][1]:
            out.append(f"comparison listed for non-composable ({g!r}, {f!r})")
            continue
        gf = tc.hcomp1[(g, f)]
        if nattrans_violations(nt):
            out.append(f"comparison at ({g!r}, {f!r}) is not natural")
        elif not nt.is_invertible():
            out.append(f"comparison at ({g!r}, {f!r}) is not invertible")
        elif nt.source.key() != compose_functors(pf.on1[g], pf.on1[f]).key():
            out.append(f"comparison at ({g!r}, {f!r}) has wrong domain")
        elif nt.target.key() != pf.on1[gf].key():
            out.append(f"comparison at ({g!r}, {f!r}) has wrong codomain")
    for f in tc.one_cells:
        j = tc.one_home[f][1]
        for g in tc.one_cells:
            if tc.one_home[g][0] == j and (g, f) not in pf.comp:
                out.append(f"missing comparison at ({g!r}, {f!r})")
    for i in tc.cells0:
        nt = pf.unit_c.get(i)
        if nt is None:
            out.append(f"missing unit comparison at {i!r}")
        elif nattrans_violations(nt) or not nt.is_invertible():
            out.append(f"unit comparison at {i!r} invalid")
        elif nt.target.key() != pf.on1[tc.unit[i]].key():
            out.append(f"unit comparison at {i!r} has wrong codomain")
    if out:
        return out
    # naturality of the comparison in both arguments
    for a in tc.two_cells:
        ai, aj = tc.two_home[a]
        for b in tc.two_cells:
            if tc.two_home[b][0] != aj:
                continue
            f, f2 = tc.dom2(a), tc.cod2(a)
            g, g2 = tc.dom2(b), tc.cod2(b)
            lhs = vcompose_nattrans(pf.on2[tc.hcomp2[(b, a)]], pf.comp[(g, f)])
            rhs = vcompose_nattrans(
                pf.comp[(g2, f2)], hcompose_nattrans(pf.on2[b], pf.on2[a])
            )
            if lhs.components != rhs.components:
                out.append(f"comparison not natural in ({b!r}, {a!r})")
                if len(out) > 10:
                    return out
    # associativity coherence on every composable triple
    for f in tc.one_cells:
        for g in tc.one_cells:
            if tc.one_home[g][0] != tc.one_home[f][1]:
                continue
            for h in tc.one_cells:
                if tc.one_home[h][0] != tc.one_home[g][1]:
                    continue
                gf, hg = tc.hcomp1[(g, f)], tc.hcomp1[(h, g)]
                lhs = vcompose_nattrans(
                    pf.comp[(h, gf)], whisker_functor(pf.on1[h], pf.comp[(g, f)])
                )
                rhs = vcompose_nattrans(
                    pf.comp[(hg, f)], whisker_nattrans(pf.comp[(h, g)], pf.on1[f])
                )
                if lhs.components != rhs.components:
                    out.append(f"associativity coherence fails on ({h!r}, {g!r}, {f!r})")
                    if len(out) > 10:
                        return out
    # unit coherence triangles
    for f in tc.one_cells:
        i, j = tc.one_home[f]
        ident = identity_nattrans(pf.on1[f]).components
        left = vcompose_nattrans(
            pf.comp[(tc.unit[j], f)], whisker_nattrans(pf.unit_c[j], pf.on1[f])
        )
        right = vcompose_nattrans(
            pf.comp[(f, tc.unit[i])], whisker_functor(pf.on1[f], pf.unit_c[i])
        )
        if left.components != ident or right.components != ident:
            out.append(f"unit coherence fails at {f!r}")
    return out


def build_pseudofunctor(
    name: str,
    source: TwoCat,
    on0: Mapping[str, FinCat],
    on1: Mapping[str, Functor],
    on2: Mapping[str, NatTrans],
    comp: Mapping[tuple[str, str], NatTrans] | None = None,
    unit_c: Mapping[str, NatTrans] | None = None,
) -> CatPseudoFunctor:
    """Assemble a pseudofunctor; omitted comparison data defaults to strict."""
    comp = dict(comp) if comp is not None else {}
    unit_c = dict(unit_c) if unit_c is not None else {}
    for f in source.one_cells:
        for g in source.one_cells:
            if source.one_home[g][0] != source.one_home[f][1]:
                continue
            if (g, f) not in comp:
                gf = source.hcomp1[(g, f)]
                comp[(g, f)] = NatTrans(
                    f"c({g},{f})",
                    compose_functors(on1[g], on1[f]),
                    on1[gf],
                    identity_nattrans(on1[gf]).components,
                )
    for i in source.cells0:
        if i not in unit_c:
            unit_c[i] = NatTrans(
                f"u({i})",
                identity_functor(on0[i]),
                on1[source.unit[i]],
                identity_nattrans(on1[source.unit[i]]).components,
            )
    pf = CatPseudoFunctor(name, source, dict(on0), dict(on1), dict(on2), comp, unit_c)
    violations = pseudofunctor_violations(pf)
    if violations:
        raise ValidationError(name, violations)
    return pf


def validate_pseudofunctor(data: Mapping, index: TwoCat) -> CatPseudoFunctor:
    """Build a Cat-valued pseudofunctor over a validated index from a raw
    document (fiber tables per 0-cell, functor tables per 1-cell,
    transformation components per 2-cell, comparison tables or "strict")."""
    from .fincat import build_functor, validate_fincat

    label = data.get("name", "<diagram>")
    try:
        fibers = {
            i: validate_fincat(body, f"{label}@{i}") for i, body in data["fibers"].items()
        }
        missing = set(index.cells0) - set(fibers)
        if missing:
            raise ValidationError(label, [f"missing fibers for {sorted(missing)}"])
        on1 = {}
        for f, body in data["on1"].items():
            i, j = index.one_home[f]
            on1[f] = build_functor(
                f"{label}.{f}", fibers[i], fibers[j], body["objects"], body["morphisms"]
            )
        on2 = {}
        for a, body in data["on2"].items():
            on2[a] = NatTrans(
                f"{label}.{a}",
                on1[index.dom2(a)],
                on1[index.cod2(a)],
                dict(body["components"]),
            )
        comparisons = data.get("comparisons", "strict")
        comp: dict[tuple[str, str], NatTrans] = {}
        unit_c: dict[str, NatTrans] = {}
        if comparisons != "strict":
            for key, body in comparisons.get("comp", {}).items():
                g, f = key.split("|")
                comp[(g, f)] = NatTrans(
                    f"{label}.c({g},{f})",
                    compose_functors(on1[g], on1[f]),
                    on1[index.hcomp1[(g, f)]],
                    dict(body["components"]),
                )
            for i, body in comparisons.get("unit", {}).items():
                unit_c[i] = NatTrans(
                    f"{label}.u({i})",
                    identity_functor(fibers[i]),
                    on1[index.unit[i]],
                    dict(body["components"]),
                )
    except ValidationError:
        raise
    except (KeyError, TypeError, ValueError) as exc:
        raise ValidationError(label, [f"malformed document: {exc}"])
    return build_pseudofunctor(
        label, index, fibers, on1, on2, comp or None, unit_c or None
    )


def constant_pseudofunctor(tc: TwoCat, value: FinCat, name: str | None = None) -> CatPseudoFunctor:
    ident = identity_functor(value)
    return build_pseudofunctor(
        name or f"const({value.name})",
        tc,
        {i: value for i in tc.cells0},
        {f: ident for f in tc.one_home},
        {a: identity_nattrans(ident) for a in tc.two_home},
    )


def restrict_pseudofunctor(pf: CatPseudoFunctor, sub: TwoCat, name: str | None = None) -> CatPseudoFunctor:
    """Restrict along a full-on-0-and-2-cells subcategory with fewer 1-cells."""
    return CatPseudoFunctor(
        name or f"{pf.name}|{sub.name}",
        sub,
        {i: pf.on0[i] for i in sub.cells0},
        {f: pf.on1[f] for f in sub.one_home},
        {a: pf.on2[a] for a in sub.two_home},
        {k: v for k, v in pf.comp.items() if k[0] in sub.one_home and k[1] in sub.one_home},
        dict(pf.unit_c),
    )


def precompose_pseudofunctor(pf: CatPseudoFunctor, fn: TwoFunctor, name: str | None = None) -> CatPseudoFunctor:
    """pf ∘ fn for a strict 2-functor fn into pf's source."""
    tc = fn.source
    return CatPseudoFunctor(
        name or f"{pf.name}.{fn.name}",
        tc,
        {i: pf.on0[fn.on0[i]] for i in tc.cells0},
        {f: pf.on1[fn.on1[f]] for f in tc.one_home},
        {a: pf.on2[fn.on2[a]] for a in tc.two_home},
        {
            (g, f): pf.comp[(fn.on1[g], fn.on1[f])]
            for f in tc.one_home
            for g in tc.one_home
            if tc.one_home[g][0] == tc.one_home[f][1]
        },
        {i: pf.unit_c[fn.on0[i]] for i in tc.cells0},
    )


def inverse_comp(pf: CatPseudoFunctor, g: str, f: str) -> NatTrans:
    return invert_nattrans(pf.comp[(g, f)])


def inverse_unit(pf: CatPseudoFunctor, i: str) -> NatTrans:
    return invert_nattrans(pf.unit_c[i])
