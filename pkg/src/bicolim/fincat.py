"""Finite categories with total composition tables.

A :class:`FinCat` stores its objects, morphisms and the full composition
table; morphism equality is identifier equality, which makes every question
about these categories decidable by finite search.  The module also provides
functors, natural transformations, skeletons, a decision procedure for
equivalence of categories, and functor categories.

Identifiers are opaque strings.  All search orders are lexicographic over
identifiers so that every derived construction is reproducible.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from typing import Iterable, Iterator, Mapping

from .verdict import Verdict, negative, positive


class ValidationError(Exception):
    """Raised when a raw description violates the axioms it claims.

    ``violations`` lists every broken axiom found, not just the first.
    """

    def __init__(self, subject: str, violations: list[str]):
        self.subject = subject
        self.violations = violations
        preview = "; ".join(violations[:5])
        if len(violations) > 5:
            preview += f"; ... ({len(violations)} total)"
        super().__init__(f"{subject}: {preview}")


class SizeGuardError(Exception):
    """An exponential construction would exceed its configured bound."""


@dataclass(eq=False)
class FinCat:
    name: str
    objects: tuple[str, ...]
    dom: dict[str, str]
    cod: dict[str, str]
    identity: dict[str, str]
    table: dict[tuple[str, str], str]
    _iso_cache: dict[str, str | None] = field(default_factory=dict, repr=False)

    @property
    def morphisms(self) -> tuple[str, ...]:
        return tuple(sorted(self.dom))

    def compose(self, g: str, f: str) -> str:
        """Composite ``g after f``; raises KeyError off composable pairs."""
        return self.table[(g, f)]

    def id(self, x: str) -> str:
        return self.identity[x]

    def hom(self, a: str, b: str) -> tuple[str, ...]:
        return tuple(
            m for m in self.morphisms if self.dom[m] == a and self.cod[m] == b
        )

    def is_identity(self, m: str) -> bool:
        return self.identity.get(self.dom[m]) == m

    def inverse(self, m: str) -> str | None:
        """Two-sided inverse of ``m`` if one exists, else None."""
        if m not in self._iso_cache:
            found = None
            for n in self.hom(self.cod[m], self.dom[m]):
                if (
                    self.table[(n, m)] == self.identity[self.dom[m]]
                    and self.table[(m, n)] == self.identity[self.cod[m]]
                ):
                    found = n
                    break
            self._iso_cache[m] = found
        return self._iso_cache[m]

    def is_iso(self, m: str) -> bool:
        return self.inverse(m) is not None

    def composable_pairs(self) -> Iterator[tuple[str, str]]:
        by_dom: dict[str, list[str]] = {x: [] for x in self.objects}
        for m in self.morphisms:
            by_dom[self.dom[m]].append(m)
        for f in self.morphisms:
            for g in by_dom[self.cod[f]]:
                yield g, f

    def describe(self) -> dict:
        return {
            "objects": list(self.objects),
            "morphisms": [
                {"name": m, "dom": self.dom[m], "cod": self.cod[m]}
                for m in self.morphisms
            ],
            "identities": dict(sorted(self.identity.items())),
            "composition": [
                [g, f, gf] for (g, f), gf in sorted(self.table.items())
            ],
        }


def build_fincat(
    name: str,
    objects: Iterable[str],
    morphisms: Iterable[tuple[str, str, str]],
    identities: Mapping[str, str],
    composition: Mapping[tuple[str, str], str],
) -> FinCat:
    """Assemble and validate a finite category.

    ``morphisms`` are (name, dom, cod) triples; ``composition`` maps the
    composable pair (g, f) to g∘f and must be defined on exactly the
    composable pairs.
    """
    objs = tuple(sorted(set(objects)))
    dom: dict[str, str] = {}
    cod: dict[str, str] = {}
    violations: list[str] = []
    for m, d, c in morphisms:
        if m in dom:
            violations.append(f"duplicate morphism name {m!r}")
        dom[m], cod[m] = d, c
    cat = FinCat(name, objs, dom, cod, dict(identities), dict(composition))
    violations.extend(fincat_violations(cat))
    if violations:
        raise ValidationError(name, violations)
    return cat


def fincat_violations(cat: FinCat) -> list[str]:
    """Exhaustively check the category axioms; returns all violations."""
    out: list[str] = []
    objset = set(cat.objects)
    for m in cat.dom:
        if cat.dom[m] not in objset or cat.cod[m] not in objset:
            out.append(f"morphism {m!r} has dangling dom/cod")
    if out:
        return out
    for x in cat.objects:
        i = cat.identity.get(x)
        if i is None:
            out.append(f"object {x!r} has no identity")
        elif i not in cat.dom or cat.dom[i] != x or cat.cod[i] != x:
            out.append(f"identity of {x!r} is not an endomorphism of it")
    for x, i in cat.identity.items():
        if x not in objset:
            out.append(f"identity listed for unknown object {x!r}")
    if out:
        return out

    composable = set(cat.composable_pairs())
    for pair in composable:
        if pair not in cat.table:
            out.append(f"composition not total: {pair[0]!r} after {pair[1]!r} missing")
    for (g, f), gf in cat.table.items():
        if (g, f) not in composable:
            out.append(f"composite listed for non-composable pair ({g!r}, {f!r})")
        elif gf not in cat.dom:
            out.append(f"composite {gf!r} of ({g!r}, {f!r}) is not a morphism")
        elif cat.dom[gf] != cat.dom[f] or cat.cod[gf] != cat.cod[g]:
            out.append(f"composite of ({g!r}, {f!r}) has wrong dom/cod")
    if out:
        return out

    for m in cat.dom:
        if cat.table[(cat.identity[cat.cod[m]], m)] != m:
            out.append(f"left identity law fails at {m!r}")
        if cat.table[(m, cat.identity[cat.dom[m]])] != m:
            out.append(f"right identity law fails at {m!r}")
    # Associativity over every composable triple.
    by_dom: dict[str, list[str]] = {x: [] for x in cat.objects}
    for m in cat.dom:
        by_dom[cat.dom[m]].append(m)
    for g, f in composable:
        gf = cat.table[(g, f)]
        for h in by_dom[cat.cod[g]]:
            if cat.table[(h, gf)] != cat.table[(cat.table[(h, g)], f)]:
                out.append(f"associativity fails on ({h!r}, {g!r}, {f!r})")
                if len(out) > 20:
                    return out
    return out


def validate_fincat(data: Mapping, name: str | None = None) -> FinCat:
    """Build a FinCat from a raw fixture document."""
    try:
        objects = list(data["objects"])
        morphisms = [(m["name"], m["dom"], m["cod"]) for m in data["morphisms"]]
        identities = dict(data["identities"])
        composition = {(g, f): gf for g, f, gf in data["composition"]}
    except (KeyError, TypeError, ValueError) as exc:
        raise ValidationError(name or "<fincat>", [f"malformed document: {exc}"])
    return build_fincat(name or data.get("name", "<fincat>"), objects, morphisms, identities, composition)


# ---------------------------------------------------------------------------
# Functors and natural transformations


@dataclass(eq=False)
class Functor:
    name: str
    source: FinCat
    target: FinCat
    obj_map: dict[str, str]
    mor_map: dict[str, str]

    def on_obj(self, x: str) -> str:
        return self.obj_map[x]

    def on_mor(self, m: str) -> str:
        return self.mor_map[m]

    def key(self) -> tuple:
        return (
            tuple(sorted(self.obj_map.items())),
            tuple(sorted(self.mor_map.items())),
        )

    def equal_on_the_nose(self, other: Functor) -> bool:
        return self.key() == other.key()


def functor_violations(fun: Functor) -> list[str]:
    out: list[str] = []
    src, tgt = fun.source, fun.target
    for x in src.objects:
        if fun.obj_map.get(x) not in set(tgt.objects):
            out.append(f"object {x!r} not mapped into target")
    for m in src.dom:
        im = fun.mor_map.get(m)
        if im not in tgt.dom:
            out.append(f"morphism {m!r} not mapped into target")
            continue
        if tgt.dom[im] != fun.obj_map[src.dom[m]] or tgt.cod[im] != fun.obj_map[src.cod[m]]:
            out.append(f"image of {m!r} has wrong dom/cod")
    if out:
        return out
    for x in src.objects:
        if fun.mor_map[src.identity[x]] != tgt.identity[fun.obj_map[x]]:
            out.append(f"identity of {x!r} not preserved")
    for (g, f), gf in src.table.items():
        if tgt.table[(fun.mor_map[g], fun.mor_map[f])] != fun.mor_map[gf]:
            out.append(f"composition not preserved on ({g!r}, {f!r})")
            if len(out) > 20:
                return out
    return out


def build_functor(
    name: str,
    source: FinCat,
    target: FinCat,
    obj_map: Mapping[str, str],
    mor_map: Mapping[str, str],
) -> Functor:
    fun = Functor(name, source, target, dict(obj_map), dict(mor_map))
    violations = functor_violations(fun)
    if violations:
        raise ValidationError(name, violations)
    return fun


def identity_functor(cat: FinCat) -> Functor:
    return Functor(
        f"1_{cat.name}",
        cat,
        cat,
        {x: x for x in cat.objects},
        {m: m for m in cat.dom},
    )


def compose_functors(g: Functor, f: Functor) -> Functor:
    """g∘f; sources and targets must match up."""
    if g.source is not f.target and not same_category(g.source, f.target):
        raise ValueError(f"cannot compose {g.name} after {f.name}")
    return Functor(
        f"{g.name}.{f.name}",
        f.source,
        g.target,
        {x: g.obj_map[y] for x, y in f.obj_map.items()},
        {m: g.mor_map[n] for m, n in f.mor_map.items()},
    )


@dataclass(eq=False)
class NatTrans:
    name: str
    source: Functor
    target: Functor
    components: dict[str, str]

    def at(self, x: str) -> str:
        return self.components[x]

    def is_invertible(self) -> bool:
        tgt = self.source.target
        return all(tgt.is_iso(c) for c in self.components.values())


def nattrans_violations(nt: NatTrans) -> list[str]:
    out: list[str] = []
    f, g = nt.source, nt.target
    if not same_category(f.source, g.source) or not same_category(f.target, g.target):
        return ["source/target functors are not parallel"]
    cat, tgt = f.source, f.target
    for x in cat.objects:
        c = nt.components.get(x)
        if c is None or c not in tgt.dom:
            out.append(f"no component at {x!r}")
        elif tgt.dom[c] != f.obj_map[x] or tgt.cod[c] != g.obj_map[x]:
            out.append(f"component at {x!r} has wrong dom/cod")
    if out:
        return out
    for m in cat.dom:
        x, y = cat.dom[m], cat.cod[m]
        left = tgt.table[(g.mor_map[m], nt.components[x])]
        right = tgt.table[(nt.components[y], f.mor_map[m])]
        if left != right:
            out.append(f"naturality square fails at {m!r}")
    return out


def build_nattrans(
    name: str, source: Functor, target: Functor, components: Mapping[str, str]
) -> NatTrans:
    nt = NatTrans(name, source, target, dict(components))
    violations = nattrans_violations(nt)
    if violations:
        raise ValidationError(name, violations)
    return nt


def identity_nattrans(fun: Functor) -> NatTrans:
    return NatTrans(
        f"1_{fun.name}",
        fun,
        fun,
        {x: fun.target.identity[fun.obj_map[x]] for x in fun.source.objects},
    )


def vcompose_nattrans(beta: NatTrans, alpha: NatTrans) -> NatTrans:
    """Vertical composite beta∘alpha (alpha first)."""
    tgt = alpha.source.target
    return NatTrans(
        f"{beta.name}.{alpha.name}",
        alpha.source,
        beta.target,
        {
            x: tgt.table[(beta.components[x], alpha.components[x])]
            for x in alpha.components
        },
    )


def hcompose_nattrans(beta: NatTrans, alpha: NatTrans) -> NatTrans:
    """Horizontal composite: beta over alpha, i.e. (H ⇒ H') ★ (G ⇒ G')."""
    h_prime = beta.target
    cat = h_prime.target
    return NatTrans(
        f"{beta.name}*{alpha.name}",
        compose_functors(beta.source, alpha.source),
        compose_functors(beta.target, alpha.target),
        {
            x: cat.table[(h_prime.mor_map[alpha.components[x]], beta.components[alpha.source.obj_map[x]])]
            for x in alpha.components
        },
    )


def whisker_functor(fun: Functor, alpha: NatTrans) -> NatTrans:
    """fun ★ alpha: postcompose both sides of alpha with fun."""
    return NatTrans(
        f"{fun.name}*{alpha.name}",
        compose_functors(fun, alpha.source),
        compose_functors(fun, alpha.target),
        {x: fun.mor_map[c] for x, c in alpha.components.items()},
    )


def whisker_nattrans(alpha: NatTrans, fun: Functor) -> NatTrans:
    """alpha ★ fun: restrict alpha along fun."""
    return NatTrans(
        f"{alpha.name}*{fun.name}",
        compose_functors(alpha.source, fun),
        compose_functors(alpha.target, fun),
        {x: alpha.components[fun.obj_map[x]] for x in fun.source.objects},
    )


def invert_nattrans(nt: NatTrans) -> NatTrans:
    tgt = nt.source.target
    comps = {}
    for x, c in nt.components.items():
        inv = tgt.inverse(c)
        if inv is None:
            raise ValueError(f"{nt.name} is not invertible at {x!r}")
        comps[x] = inv
    return NatTrans(f"{nt.name}~", nt.target, nt.source, comps)


def nattrans_equal(a: NatTrans, b: NatTrans) -> bool:
    return a.components == b.components


# ---------------------------------------------------------------------------
# Skeletons and equivalence


@dataclass(eq=False)
class Skeleton:
    category: FinCat
    inclusion: Functor
    retraction: Functor
    # chosen isomorphism x -> representative(x); identity on representatives
    to_rep: dict[str, str]


def _iso_classes(cat: FinCat) -> dict[str, str]:
    """Map each object to the least object isomorphic to it."""
    rep = {x: x for x in cat.objects}

    def find(x: str) -> str:
        while rep[x] != x:
            rep[x] = rep[rep[x]]
            x = rep[x]
        return x

    for m in cat.morphisms:
        if cat.is_iso(m):
            a, b = find(cat.dom[m]), find(cat.cod[m])
            if a != b:
                lo, hi = sorted((a, b))
                rep[hi] = lo
    return {x: find(x) for x in cat.objects}


def skeleton(cat: FinCat) -> Skeleton:
    """One object per isomorphism class, with the equivalence witnesses."""
    reps = _iso_classes(cat)
    kept = tuple(sorted(set(reps.values())))
    keptset = set(kept)
    kept_mors = [
        m for m in cat.morphisms if cat.dom[m] in keptset and cat.cod[m] in keptset
    ]
    skel = build_fincat(
        f"sk({cat.name})",
        kept,
        [(m, cat.dom[m], cat.cod[m]) for m in kept_mors],
        {x: cat.identity[x] for x in kept},
        {
            (g, f): gf
            for (g, f), gf in cat.table.items()
            if g in set(kept_mors) and f in set(kept_mors)
        },
    )
    inclusion = build_functor(
        f"incl({cat.name})", skel, cat, {x: x for x in kept}, {m: m for m in kept_mors}
    )
    # Deterministic isomorphism x -> rep(x): least-named iso, identity on reps.
    to_rep: dict[str, str] = {}
    for x in cat.objects:
        if reps[x] == x:
            to_rep[x] = cat.identity[x]
        else:
            to_rep[x] = min(m for m in cat.hom(x, reps[x]) if cat.is_iso(m))
    mor_map = {}
    for m in cat.morphisms:
        x, y = cat.dom[m], cat.cod[m]
        back = cat.inverse(to_rep[x])
        assert back is not None
        mor_map[m] = cat.table[(cat.table[(to_rep[y], m)], back)]
    retraction = build_functor(
        f"retr({cat.name})", cat, skel, dict(reps), mor_map
    )
    return Skeleton(skel, inclusion, retraction, to_rep)


def _object_signature(cat: FinCat, x: str) -> tuple:
    pairs = sorted(
        (len(cat.hom(x, y)), len(cat.hom(y, x))) for y in cat.objects
    )
    return (len(cat.hom(x, x)), tuple(pairs))


def _iso_search(a: FinCat, b: FinCat) -> tuple[dict[str, str], dict[str, str]] | None:
    """Backtracking isomorphism-of-categories search (objects then morphisms)."""
    if len(a.objects) != len(b.objects) or len(a.morphisms) != len(b.morphisms):
        return None
    sig_a = {x: _object_signature(a, x) for x in a.objects}
    sig_b = {y: _object_signature(b, y) for y in b.objects}
    if sorted(sig_a.values()) != sorted(sig_b.values()):
        return None

    objs = list(a.objects)

    def assign_morphisms(obj_map: dict[str, str]) -> dict[str, str] | None:
        mors = sorted(a.dom)
        mor_map: dict[str, str] = {}
        used: set[str] = set()

        def extend(k: int) -> bool:
            if k == len(mors):
                return True
            m = mors[k]
            if a.is_identity(m):
                candidates = [b.identity[obj_map[a.dom[m]]]]
            else:
                candidates = [
                    n
                    for n in b.hom(obj_map[a.dom[m]], obj_map[a.cod[m]])
                    if n not in used and not b.is_identity(n)
                ]
            for n in candidates:
                if n in used:
                    continue
                mor_map[m] = n
                used.add(n)
                # check composition against every previously assigned morphism
                ok = True
                for p in list(mor_map):
                    for g, f in ((p, m), (m, p), (m, m)):
                        if (g, f) in a.table:
                            gf = a.table[(g, f)]
                            if gf in mor_map and b.table.get((mor_map[g], mor_map[f])) != mor_map[gf]:
                                ok = False
                                break
                            if gf not in mor_map and (mor_map[g], mor_map[f]) not in b.table:
                                ok = False
                                break
                    if not ok:
                        break
                if ok:
                    if extend(k + 1):
                        return True
                mor_map.pop(m)
                used.discard(n)
            return False

        return dict(mor_map) if extend(0) else None

    def extend_obj(k: int, obj_map: dict[str, str], used: set[str]) -> tuple[dict, dict] | None:
        if k == len(objs):
            mm = assign_morphisms(obj_map)
            if mm is not None:
                return dict(obj_map), mm
            return None
        x = objs[k]
        for y in b.objects:
            if y in used or sig_b[y] != sig_a[x]:
                continue
            obj_map[x] = y
            used.add(y)
            result = extend_obj(k + 1, obj_map, used)
            if result is not None:
                return result
            obj_map.pop(x)
            used.discard(y)
        return None

    return extend_obj(0, {}, set())


def check_equivalence(c: FinCat, d: FinCat) -> Verdict:
    """Decide equivalence of categories, with constructive witnesses.

    Finite categories are equivalent exactly when their skeletons are
    isomorphic, so we skeletonize and run a backtracking isomorphism search
    constrained by hom-set cardinality profiles.
    """
    sk_c, sk_d = skeleton(c), skeleton(d)
    if len(sk_c.category.objects) != len(sk_d.category.objects):
        return negative(
            "equivalence",
            {
                "reason": "object-class count mismatch",
                "left_classes": len(sk_c.category.objects),
                "right_classes": len(sk_d.category.objects),
            },
        )
    profile_c = sorted(_object_signature(sk_c.category, x) for x in sk_c.category.objects)
    profile_d = sorted(_object_signature(sk_d.category, x) for x in sk_d.category.objects)
    if profile_c != profile_d:
        return negative(
            "equivalence",
            {
                "reason": "hom-set multiset mismatch on skeletons",
                "left_profile": [[p[0], list(map(list, p[1]))] for p in profile_c],
                "right_profile": [[p[0], list(map(list, p[1]))] for p in profile_d],
            },
        )
    iso = _iso_search(sk_c.category, sk_d.category)
    if iso is None:
        return negative(
            "equivalence",
            {
                "reason": "skeletons admit no isomorphism",
                "searched_object_bijections": True,
            },
        )
    obj_map, mor_map = iso
    phi = build_functor("phi", sk_c.category, sk_d.category, obj_map, mor_map)
    phi_inv = build_functor(
        "phi~",
        sk_d.category,
        sk_c.category,
        {y: x for x, y in obj_map.items()},
        {n: m for m, n in mor_map.items()},
    )
    fwd = compose_functors(sk_d.inclusion, compose_functors(phi, sk_c.retraction))
    bwd = compose_functors(sk_c.inclusion, compose_functors(phi_inv, sk_d.retraction))
    fwd.name, bwd.name = f"{c.name}->{d.name}", f"{d.name}->{c.name}"
    # bwd∘fwd sends x to rep(x); the chosen isos to representatives give the
    # unit, and dually for the counit.
    unit = build_nattrans(
        "unit",
        compose_functors(bwd, fwd),
        identity_functor(c),
        {x: _must_inverse(c, sk_c.to_rep[x]) for x in c.objects},
    )
    counit = build_nattrans(
        "counit",
        compose_functors(fwd, bwd),
        identity_functor(d),
        {y: _must_inverse(d, sk_d.to_rep[y]) for y in d.objects},
    )
    return positive(
        "equivalence",
        [
            {
                "forward": fwd,
                "backward": bwd,
                "unit": unit,
                "counit": counit,
            }
        ],
    )


def _must_inverse(cat: FinCat, m: str) -> str:
    inv = cat.inverse(m)
    assert inv is not None
    return inv


# ---------------------------------------------------------------------------
# Functor categories


@dataclass(eq=False)
class FunctorCategory:
    category: FinCat
    functors: dict[str, Functor]
    transformations: dict[str, NatTrans]


def enumerate_functors(c: FinCat, d: FinCat) -> Iterator[Functor]:
    """All functors c -> d, in deterministic order."""
    objs = list(c.objects)
    nonid = [m for m in c.morphisms if not c.is_identity(m)]

    def mor_assign(obj_map: dict[str, str]) -> Iterator[dict[str, str]]:
        def extend(k: int, acc: dict[str, str]) -> Iterator[dict[str, str]]:
            if k == len(nonid):
                # full check of composition (cheap at these sizes)
                full = dict(acc)
                for x in objs:
                    full[c.identity[x]] = d.identity[obj_map[x]]
                ok = all(
                    d.table[(full[g], full[f])] == full[gf]
                    for (g, f), gf in c.table.items()
                )
                if ok:
                    yield full
                return
            m = nonid[k]
            for n in d.hom(obj_map[c.dom[m]], obj_map[c.cod[m]]):
                acc[m] = n
                consistent = True
                for p in list(acc):
                    for g, f in ((p, m), (m, p), (m, m)):
                        if (g, f) in c.table:
                            gf = c.table[(g, f)]
                            img = d.table.get((acc[g], acc[f]))
                            if gf in acc and img != acc[gf]:
                                consistent = False
                            elif c.is_identity(gf) and img != d.identity[obj_map[c.dom[f]]]:
                                consistent = False
                    if not consistent:
                        break
                if consistent:
                    yield from extend(k + 1, acc)
                acc.pop(m)

        yield from extend(0, {})

    for combo in itertools.product(d.objects, repeat=len(objs)):
        obj_map = dict(zip(objs, combo))
        for mm in mor_assign(obj_map):
            yield Functor("F", c, d, dict(obj_map), mm)


def enumerate_nattrans(f: Functor, g: Functor) -> Iterator[dict[str, str]]:
    """All natural transformations f ⇒ g as component dictionaries."""
    c, d = f.source, f.target
    objs = list(c.objects)

    def extend(k: int, acc: dict[str, str]) -> Iterator[dict[str, str]]:
        if k == len(objs):
            yield dict(acc)
            return
        x = objs[k]
        for comp in d.hom(f.obj_map[x], g.obj_map[x]):
            acc[x] = comp
            ok = True
            for m in c.morphisms:
                a, b = c.dom[m], c.cod[m]
                if a in acc and b in acc:
                    if d.table[(g.mor_map[m], acc[a])] != d.table[(acc[b], f.mor_map[m])]:
                        ok = False
                        break
            if ok:
                yield from extend(k + 1, acc)
            acc.pop(x)

    yield from extend(0, {})


def functor_category(c: FinCat, d: FinCat, max_morphisms: int = 100_000) -> FunctorCategory:
    """The category of functors c -> d and natural transformations.

    Guarded: raises SizeGuardError before enumerating anything that could
    exceed ``max_morphisms``.
    """
    if len(c.objects) and len(d.objects) ** len(c.objects) > max_morphisms:
        raise SizeGuardError(
            f"functor category [{c.name},{d.name}]: object-map count "
            f"{len(d.objects)}^{len(c.objects)} exceeds bound {max_morphisms}"
        )
    funs = sorted(enumerate_functors(c, d), key=lambda f: f.key())
    functors: dict[str, Functor] = {}
    for idx, fun in enumerate(funs):
        name = f"F{idx:03d}"
        fun.name = name
        functors[name] = fun

    transformations: dict[str, NatTrans] = {}
    mor_rows: list[tuple[str, str, str]] = []
    comp_key: dict[tuple[str, tuple[tuple[str, str], ...]], str] = {}
    count = 0
    for fn, fun in functors.items():
        for gn, gun in functors.items():
            for comps in enumerate_nattrans(fun, gun):
                count += 1
                if count > max_morphisms:
                    raise SizeGuardError(
                        f"functor category [{c.name},{d.name}] exceeds "
                        f"{max_morphisms} transformations"
                    )
                name = f"t{len(mor_rows):04d}"
                transformations[name] = NatTrans(name, fun, gun, comps)
                mor_rows.append((name, fn, gn))
                comp_key[(fn, gn, tuple(sorted(comps.items())))] = name

    identities = {}
    for fn, fun in functors.items():
        ident = identity_nattrans(fun)
        identities[fn] = comp_key[(fn, fn, tuple(sorted(ident.components.items())))]
    table: dict[tuple[str, str], str] = {}
    for beta_name, bf, bg in mor_rows:
        for alpha_name, af, ag in mor_rows:
            if ag != bf:
                continue
            comp = vcompose_nattrans(transformations[beta_name], transformations[alpha_name])
            table[(beta_name, alpha_name)] = comp_key[(af, bg, tuple(sorted(comp.components.items())))]
    cat = build_fincat(
        f"[{c.name},{d.name}]",
        functors,
        [(n, f, g) for n, f, g in mor_rows],
        identities,
        table,
    )
    return FunctorCategory(cat, functors, transformations)


def same_category(a: FinCat, b: FinCat) -> bool:
    """Identical presentation (same identifiers and tables), not equivalence."""
    return a is b or (
        a.objects == b.objects
        and a.dom == b.dom
        and a.cod == b.cod
        and a.identity == b.identity
        and a.table == b.table
    )


def functor_is_equivalence(fun: Functor) -> Verdict:
    """Essential surjectivity and full faithfulness of one specific functor.

    Unlike :func:`check_equivalence`, which searches for *some* equivalence,
    this analyses the given functor and reports exactly which property fails.
    """
    src, tgt = fun.source, fun.target
    witnesses = []
    for y in tgt.objects:
        found = None
        for x in src.objects:
            for iso in tgt.hom(fun.obj_map[x], y):
                if tgt.is_iso(iso):
                    found = {"object": y, "preimage": x, "iso": iso}
                    break
            if found:
                break
        if found is None:
            return negative(
                "functor-equivalence",
                {"reason": "not essentially surjective", "object": y},
            )
        witnesses.append(found)
    for x in src.objects:
        for x2 in src.objects:
            images = {}
            for m in src.hom(x, x2):
                im = fun.mor_map[m]
                if im in images:
                    return negative(
                        "functor-equivalence",
                        {"reason": "not faithful", "pair": [images[im], m]},
                    )
                images[im] = m
            target_homs = set(tgt.hom(fun.obj_map[x], fun.obj_map[x2]))
            missing = sorted(target_homs - set(images))
            if missing:
                return negative(
                    "functor-equivalence",
                    {"reason": "not full", "between": [x, x2], "missing": missing[0]},
                )
    return positive("functor-equivalence", witnesses)


def natural_iso_search(f: Functor, g: Functor) -> NatTrans | None:
    """First invertible natural transformation f ⇒ g, if any.

    Components are drawn from isomorphisms only, assigned object by object
    with incremental naturality checks.
    """
    c, d = f.source, f.target
    objs = list(c.objects)

    def extend(k: int, acc: dict[str, str]) -> dict[str, str] | None:
        if k == len(objs):
            return dict(acc)
        x = objs[k]
        for comp in d.hom(f.obj_map[x], g.obj_map[x]):
            if not d.is_iso(comp):
                continue
            acc[x] = comp
            ok = True
            for m in c.morphisms:
                a, b = c.dom[m], c.cod[m]
                if a in acc and b in acc:
                    if d.table[(g.mor_map[m], acc[a])] != d.table[(acc[b], f.mor_map[m])]:
                        ok = False
                        break
            if ok:
                found = extend(k + 1, acc)
                if found is not None:
                    return found
            acc.pop(x)
        return None

    comps = extend(0, {})
    if comps is None:
        return None
    return NatTrans(f"{f.name}~{g.name}", f, g, comps)


def compose_path(cat: FinCat, path: list[str], at: str | None = None) -> str:
    """Iterated composite of a path (listed first-to-last)."""
    if not path:
        if at is None:
            raise ValueError("empty path needs an anchor object")
        return cat.identity[at]
    acc = path[0]
    for m in path[1:]:
        if cat.dom[m] != cat.cod[acc]:
            raise ValueError(f"non-composable adjacency at {m!r}")
        acc = cat.table[(m, acc)]
    return acc
