"""Finite categories and brute-force h-separability searches.

Categories are label tables: objects, hom-sets of morphism names
(unique per hom-set, equality is label equality), a composition table
and identities.  On top of that sit functors, natural transformations,
adjunctions, monads, and the exhaustive searches: retraction families
P making a functor (heavily) separable, natural retractions of an
adjunction unit, Eilenberg-Moore section functors, and monad
augmentations.  Everything is small and checked exhaustively.
"""

from __future__ import annotations

import itertools
import json
from dataclasses import dataclass
from pathlib import Path

from .exactalg import CapExceeded

__all__ = [
    "FiniteCategory",
    "FunctorData",
    "NatTransform",
    "AdjunctionData",
    "MonadData",
    "HSepStructure",
    "CategoryLawError",
    "MalformedData",
    "NotAssociativeComposition",
    "IdentityLawFails",
    "FunctorLawFails",
    "NaturalityFails",
    "TriangleIdentityFails",
    "MonadLawFails",
    "validate",
    "poset_category",
    "chain_poset",
    "monoid_category",
    "identity_functor",
    "compose_functors",
    "identity_adjunction",
    "find_h_separability_structures",
    "find_rafael_retractions",
    "monad_from_adjunction",
    "eilenberg_moore",
    "find_section_functors",
    "find_monad_augmentations",
    "category_from_doc",
    "category_to_doc",
    "functor_from_doc",
    "adjunction_from_doc",
]


class CategoryLawError(ValueError):
    """A law of the presented structure fails; carries the witness tuple."""

    def __init__(self, message, witness=None):
        super().__init__(message if witness is None else "%s at %r" % (message, witness))
        self.witness = witness


class MalformedData(CategoryLawError):
    pass


class NotAssociativeComposition(CategoryLawError):
    pass


class IdentityLawFails(CategoryLawError):
    pass


class FunctorLawFails(CategoryLawError):
    pass


class NaturalityFails(CategoryLawError):
    pass


class TriangleIdentityFails(CategoryLawError):
    pass


class MonadLawFails(CategoryLawError):
    pass


@dataclass(frozen=True, eq=False)
class FiniteCategory:
    """objects, hom tables, composition table (g∘f), identities."""

    objects: tuple[str, ...]
    hom: dict
    compose: dict
    identity: dict
    label: str = "category"

    def hom_set(self, x, y):
        return self.hom.get((x, y), ())

    def morphisms(self):
        for (x, y), names in self.hom.items():
            for name in names:
                yield (x, y, name)

    def id_mor(self, x):
        return (x, x, self.identity[x])

    def comp(self, f, g):
        """g∘f for f: X→Y and g: Y→Z."""
        (x, y1, fn), (y2, z, gn) = f, g
        if y1 != y2:
            raise MalformedData("morphisms do not compose", (f, g))
        return (x, z, self.compose[(x, y1, z, fn, gn)])

    def validate(self):
        seen = set(self.objects)
        if len(seen) != len(self.objects):
            raise MalformedData("duplicate object labels")
        for (x, y), names in self.hom.items():
            if x not in seen or y not in seen:
                raise MalformedData("hom-set over unknown object", (x, y))
            if len(set(names)) != len(names):
                raise MalformedData("duplicate morphism labels", (x, y))
        for x in self.objects:
            if x not in self.identity:
                raise MalformedData("missing identity", x)
            if self.identity[x] not in self.hom_set(x, x):
                raise MalformedData("identity not in hom-set", x)
        for f in self.morphisms():
            for g in self.morphisms():
                if f[1] != g[0]:
                    continue
                key = (f[0], f[1], g[1], f[2], g[2])
                if key not in self.compose:
                    raise MalformedData("missing composite", key)
                if self.compose[key] not in self.hom_set(f[0], g[1]):
                    raise MalformedData("composite outside hom-set", key)
        for x, y, fn in self.morphisms():
            f = (x, y, fn)
            if self.comp(self.id_mor(x), f) != f:
                raise IdentityLawFails("id;f != f", f)
            if self.comp(f, self.id_mor(y)) != f:
                raise IdentityLawFails("f;id != f", f)
        for f in self.morphisms():
            for g in self.morphisms():
                if f[1] != g[0]:
                    continue
                fg = self.comp(f, g)
                for h in self.morphisms():
                    if g[1] != h[0]:
                        continue
                    if self.comp(fg, h) != self.comp(f, self.comp(g, h)):
                        raise NotAssociativeComposition("(h∘g)∘f != h∘(g∘f)", (f, g, h))
        return self


@dataclass(frozen=True, eq=False)
class FunctorData:
    source: FiniteCategory
    target: FiniteCategory
    object_map: dict
    morphism_map: dict
    label: str = "functor"

    def apply_obj(self, x):
        return self.object_map[x]

    def apply(self, f):
        x, y, name = f
        return (self.object_map[x], self.object_map[y], self.morphism_map[(x, y, name)])

    def validate(self):
        for x in self.source.objects:
            if self.object_map.get(x) not in self.target.objects:
                raise MalformedData("object image missing", x)
        for f in self.source.morphisms():
            key = f
            if key not in self.morphism_map:
                raise MalformedData("morphism image missing", f)
            fx, fy = self.object_map[f[0]], self.object_map[f[1]]
            if self.morphism_map[key] not in self.target.hom_set(fx, fy):
                raise MalformedData("morphism image outside hom-set", f)
        for x in self.source.objects:
            if self.apply(self.source.id_mor(x)) != self.target.id_mor(self.object_map[x]):
                raise FunctorLawFails("identity not preserved", x)
        for f in self.source.morphisms():
            for g in self.source.morphisms():
                if f[1] != g[0]:
                    continue
                if self.apply(self.source.comp(f, g)) != self.target.comp(self.apply(f), self.apply(g)):
                    raise FunctorLawFails("composition not preserved", (f, g))
        return self

    def component_key(self):
        return tuple(sorted(self.object_map.items())), tuple(sorted(self.morphism_map.items()))


def identity_functor(cat: FiniteCategory) -> FunctorData:
    return FunctorData(
        cat,
        cat,
        {x: x for x in cat.objects},
        {f: f[2] for f in cat.morphisms()},
        label="Id",
    )


def compose_functors(second: FunctorData, first: FunctorData) -> FunctorData:
    """second ∘ first."""
    if first.target is not second.source and first.target.objects != second.source.objects:
        raise MalformedData("functors do not compose")
    return FunctorData(
        first.source,
        second.target,
        {x: second.object_map[first.object_map[x]] for x in first.source.objects},
        {f: second.apply(first.apply(f))[2] for f in first.source.morphisms()},
        label="%s∘%s" % (second.label, first.label),
    )


@dataclass(frozen=True, eq=False)
class NatTransform:
    source_functor: FunctorData
    target_functor: FunctorData
    components: dict  # object -> morphism name in Hom(FX, GX)

    def component(self, x):
        fx = self.source_functor.object_map[x]
        gx = self.target_functor.object_map[x]
        return (fx, gx, self.components[x])

    def validate(self):
        f_fun, g_fun = self.source_functor, self.target_functor
        cat = f_fun.target
        for x in f_fun.source.objects:
            fx, gx = f_fun.object_map[x], g_fun.object_map[x]
            if self.components.get(x) not in cat.hom_set(fx, gx):
                raise MalformedData("component outside hom-set", x)
        for f in f_fun.source.morphisms():
            x, y = f[0], f[1]
            lhs = cat.comp(f_fun.apply(f), self.component(y))
            rhs = cat.comp(self.component(x), g_fun.apply(f))
            if lhs != rhs:
                raise NaturalityFails("square does not commute", f)
        return self

    def key(self):
        return tuple(sorted(self.components.items()))


@dataclass(frozen=True, eq=False)
class AdjunctionData:
    """(L, R, unit, counit) with L: B → A left adjoint to R: A → B."""

    left: FunctorData
    right: FunctorData
    unit: NatTransform
    counit: NatTransform

    def validate(self):
        self.left.validate()
        self.right.validate()
        self.unit.validate()
        self.counit.validate()
        bcat, acat = self.left.source, self.left.target
        for b in bcat.objects:
            lb = self.left.object_map[b]
            lhs = acat.comp(self.left.apply(self.unit.component(b)), self.counit.component(lb))
            if lhs != acat.id_mor(lb):
                raise TriangleIdentityFails("(εL)(Lη) != id", b)
        for a in acat.objects:
            ra = self.right.object_map[a]
            lhs = bcat.comp(self.unit.component(ra), self.right.apply(self.counit.component(a)))
            if lhs != bcat.id_mor(ra):
                raise TriangleIdentityFails("(Rε)(ηR) != id", a)
        return self


@dataclass(frozen=True, eq=False)
class MonadData:
    functor: FunctorData  # endofunctor T on B
    unit: NatTransform  # Id → T
    mult: NatTransform  # TT → T

    def validate(self):
        self.functor.validate()
        self.unit.validate()
        self.mult.validate()
        cat = self.functor.source
        t = self.functor
        for b in cat.objects:
            tb = t.object_map[b]
            mu = self.mult.component(b)
            if cat.comp(t.apply(self.unit.component(b)), mu) != cat.id_mor(tb):
                raise MonadLawFails("μ∘Tη != id", b)
            if cat.comp(self.unit.component(tb), mu) != cat.id_mor(tb):
                raise MonadLawFails("μ∘ηT != id", b)
            if cat.comp(t.apply(self.mult.component(b)), mu) != cat.comp(self.mult.component(tb), mu):
                raise MonadLawFails("μ∘Tμ != μ∘μT", b)
        return self


@dataclass(frozen=True, eq=False)
class HSepStructure:
    """Retraction family P for F with P(f∘g) = P(f)∘P(g)."""

    functor: FunctorData
    P: dict  # (X, Y) -> dict: name in Hom(FX,FY) -> name in Hom(X,Y)

    def apply(self, x, y, f):
        fx = self.functor.object_map[x]
        fy = self.functor.object_map[y]
        return (x, y, self.P[(x, y)][f[2]])

    def validate(self):
        fun = self.functor
        bcat, acat = fun.source, fun.target
        for x in bcat.objects:
            for y in bcat.objects:
                fx, fy = fun.object_map[x], fun.object_map[y]
                table = self.P.get((x, y), {})
                dom = acat.hom_set(fx, fy)
                if set(table) != set(dom):
                    raise MalformedData("P table domain mismatch", (x, y))
                for name in table:
                    if table[name] not in bcat.hom_set(x, y):
                        raise MalformedData("P value outside hom-set", (x, y, name))
        for f in bcat.morphisms():
            if self.apply(f[0], f[1], fun.apply(f)) != f:
                raise CategoryLawError("P∘F != id", f)
        # naturality in both variables
        for (x, y), table in self.P.items():
            fx, fy = fun.object_map[x], fun.object_map[y]
            for fname in table:
                fmor = (fx, fy, fname)
                for u in bcat.morphisms():
                    if u[1] != x:
                        continue
                    for v in bcat.morphisms():
                        if v[0] != y:
                            continue
                        conj = acat.comp(acat.comp(fun.apply(u), fmor), fun.apply(v))
                        lhs = self.apply(u[0], v[1], conj)
                        rhs = bcat.comp(bcat.comp(u, self.apply(x, y, fmor)), v)
                        if lhs != rhs:
                            raise NaturalityFails("P not natural", (u, fmor, v))
        # multiplicativity
        for (x, y), t1 in self.P.items():
            fx, fy = fun.object_map[x], fun.object_map[y]
            for (y2, z), t2 in self.P.items():
                if y2 != y:
                    continue
                fz = fun.object_map[z]
                for gname in t1:
                    g = (fx, fy, gname)
                    for fname in t2:
                        f = (fy, fz, fname)
                        comp = acat.comp(g, f)
                        lhs = self.apply(x, z, comp)
                        rhs = bcat.comp(self.apply(x, y, g), self.apply(y, z, f))
                        if lhs != rhs:
                            raise CategoryLawError("P not multiplicative", (g, f))
        return self

    def key(self):
        return tuple(sorted((pair, tuple(sorted(tbl.items()))) for pair, tbl in self.P.items()))


def validate(value):
    """Exhaustively check the laws of any of the structure types."""
    if isinstance(value, (FiniteCategory, FunctorData, NatTransform, AdjunctionData, MonadData, HSepStructure)):
        return value.validate()
    raise TypeError("cannot validate %r" % type(value))


# ---------------------------------------------------------------------------
# builders


def poset_category(labels, leq, label="poset") -> FiniteCategory:
    """Category of a finite poset: at most one morphism per ordered pair."""
    objects = tuple(labels)
    hom = {}
    identity = {}
    for x in objects:
        for y in objects:
            if leq(x, y):
                hom[(x, y)] = ("%s<=%s" % (x, y),)
    for x in objects:
        identity[x] = "%s<=%s" % (x, x)
    compose = {}
    for (x, y), (f,) in hom.items():
        for (y2, z), (g,) in hom.items():
            if y2 == y:
                compose[(x, y, z, f, g)] = hom[(x, z)][0]
    return FiniteCategory(objects, hom, compose, identity, label).validate()


def chain_poset(n, prefix="c") -> FiniteCategory:
    labels = tuple("%s%d" % (prefix, i) for i in range(n))
    order = {lab: i for i, lab in enumerate(labels)}
    return poset_category(labels, lambda a, b: order[a] <= order[b], label="%d-chain" % n)


def monoid_category(elements, table, unit_index=0, obj="*", label="monoid") -> FiniteCategory:
    """One-object category; composition g∘f is table[g][f]."""
    names = tuple(elements)
    hom = {(obj, obj): names}
    compose = {}
    for i, f in enumerate(names):
        for j, g in enumerate(names):
            compose[(obj, obj, obj, f, g)] = names[table[j][i]]
    identity = {obj: names[unit_index]}
    return FiniteCategory((obj,), hom, compose, identity, label).validate()


def identity_adjunction(cat: FiniteCategory) -> AdjunctionData:
    idf = identity_functor(cat)
    unit = NatTransform(idf, idf, {x: cat.identity[x] for x in cat.objects})
    counit = NatTransform(idf, idf, {x: cat.identity[x] for x in cat.objects})
    return AdjunctionData(idf, idf, unit, counit).validate()


# ---------------------------------------------------------------------------
# searches


def find_h_separability_structures(fun: FunctorData, cap=10**7):
    """All families P: Hom(F−,F−) → Hom(−,−) making F heavily separable.

    Exhaustive product over function spaces, with the retraction
    constraint pinned first and naturality/multiplicativity checked
    incrementally pair by pair.
    """
    bcat, acat = fun.source, fun.target
    pairs = [(x, y) for x in bcat.objects for y in bcat.objects]
    domains = {}
    pinned = {}
    space = 1
    for x, y in pairs:
        fx, fy = fun.object_map[x], fun.object_map[y]
        dom = acat.hom_set(fx, fy)
        cod = bcat.hom_set(x, y)
        pin = {}
        for f in cod:
            image = fun.morphism_map[(x, y, f)]
            if image in pin and pin[image] != f:
                return []  # F not injective on this hom-set: no retraction
            pin[image] = f
        if len(pin) < len(dom) and not cod:
            return []
        pinned[(x, y)] = pin
        domains[(x, y)] = dom
        free = len(dom) - len(pin)
        space *= max(1, len(cod)) ** free
        if space > cap:
            raise CapExceeded(space)

    results = []
    assignment = {}

    def tables_for(pair):
        x, y = pair
        dom = domains[pair]
        cod = bcat.hom_set(x, y)
        pin = pinned[pair]
        free = [d for d in dom if d not in pin]
        for choice in itertools.product(cod, repeat=len(free)):
            table = dict(pin)
            table.update(zip(free, choice))
            yield table

    def consistent(upto):
        # check all conditions whose pairs are assigned (index <= upto)
        assigned = set(pairs[: upto + 1])

        def p_apply(x, y, mor):
            return (x, y, assignment[(x, y)][mor[2]])

        # naturality involving the newly assigned pair
        x0, y0 = pairs[upto]
        for (x, y) in assigned:
            fx, fy = fun.object_map[x], fun.object_map[y]
            for fname in assignment[(x, y)]:
                fmor = (fx, fy, fname)
                for u in bcat.morphisms():
                    if u[1] != x:
                        continue
                    for v in bcat.morphisms():
                        if v[0] != y:
                            continue
                        if (u[0], v[1]) not in assigned:
                            continue
                        if (x, y) != (x0, y0) and (u[0], v[1]) != (x0, y0):
                            continue
                        conj = acat.comp(acat.comp(fun.apply(u), fmor), fun.apply(v))
                        if p_apply(u[0], v[1], conj) != bcat.comp(bcat.comp(u, p_apply(x, y, fmor)), v):
                            return False
        # multiplicativity on triples fully assigned, involving the new pair
        for (x, y) in assigned:
            for (y2, z) in assigned:
                if y2 != y or (x, z) not in assigned:
                    continue
                if (x0, y0) not in ((x, y), (y, z), (x, z)):
                    continue
                fx, fy, fz = (fun.object_map[w] for w in (x, y, z))
                for gname in assignment[(x, y)]:
                    g = (fx, fy, gname)
                    for fname in assignment[(y, z)]:
                        f = (fy, fz, fname)
                        if p_apply(x, z, acat.comp(g, f)) != bcat.comp(p_apply(x, y, g), p_apply(y, z, f)):
                            return False
        return True

    def backtrack(i):
        if i == len(pairs):
            results.append(HSepStructure(fun, dict(assignment)).validate())
            return
        for table in tables_for(pairs[i]):
            assignment[pairs[i]] = table
            if consistent(i):
                backtrack(i + 1)
            del assignment[pairs[i]]

    backtrack(0)
    results.sort(key=lambda s: s.key())
    return results


def find_rafael_retractions(adj: AdjunctionData, side="left"):
    """Natural retractions of the unit (side=left) or sections of the
    counit (side=right), split into (separable, heavy) witness lists.
    """
    if side == "left":
        bcat = adj.left.source
        rl = compose_functors(adj.right, adj.left)
        idf = identity_functor(bcat)
        objects = bcat.objects
        choice_sets = [bcat.hom_set(rl.object_map[b], b) for b in objects]
        sep, heavy = [], []
        for combo in itertools.product(*choice_sets):
            comp = dict(zip(objects, combo))
            cand = NatTransform(rl, idf, comp)
            try:
                cand.validate()
            except CategoryLawError:
                continue
            if any(
                bcat.comp(adj.unit.component(b), cand.component(b)) != bcat.id_mor(b)
                for b in objects
            ):
                continue
            sep.append(cand)
            ok = True
            for b in objects:
                rlb = rl.object_map[b]
                lhs = bcat.comp(cand.component(rlb), cand.component(b))
                eps_lb = adj.counit.component(adj.left.object_map[b])
                rhs = bcat.comp(adj.right.apply(eps_lb), cand.component(b))
                if lhs != rhs:
                    ok = False
                    break
            if ok:
                heavy.append(cand)
        sep.sort(key=lambda n: n.key())
        heavy.sort(key=lambda n: n.key())
        return sep, heavy
    if side == "right":
        acat = adj.left.target
        lr = compose_functors(adj.left, adj.right)
        idf = identity_functor(acat)
        objects = acat.objects
        choice_sets = [acat.hom_set(a, lr.object_map[a]) for a in objects]
        sep, heavy = [], []
        for combo in itertools.product(*choice_sets):
            comp = dict(zip(objects, combo))
            cand = NatTransform(idf, lr, comp)
            try:
                cand.validate()
            except CategoryLawError:
                continue
            if any(
                acat.comp(cand.component(a), adj.counit.component(a)) != acat.id_mor(a)
                for a in objects
            ):
                continue
            sep.append(cand)
            ok = True
            for a in objects:
                lra = lr.object_map[a]
                lhs = acat.comp(cand.component(a), cand.component(lra))
                eta_ra = adj.unit.component(adj.right.object_map[a])
                rhs = acat.comp(cand.component(a), adj.left.apply(eta_ra))
                if lhs != rhs:
                    ok = False
                    break
            if ok:
                heavy.append(cand)
        sep.sort(key=lambda n: n.key())
        heavy.sort(key=lambda n: n.key())
        return sep, heavy
    raise ValueError("side must be 'left' or 'right'")


def monad_from_adjunction(adj: AdjunctionData) -> MonadData:
    """The monad (RL, RεL, η) of the adjunction."""
    bcat = adj.left.source
    rl = compose_functors(adj.right, adj.left)
    mult = NatTransform(
        compose_functors(rl, rl),
        rl,
        {
            b: adj.right.apply(adj.counit.component(adj.left.object_map[b]))[2]
            for b in bcat.objects
        },
    )
    return MonadData(rl, adj.unit, mult).validate()


def _algebra_label(b, aname):
    return "%s|%s" % (b, aname)


def eilenberg_moore(adj: AdjunctionData):
    """Category of algebras of the monad (RL, RεL, η) and its forgetful functor."""
    monad = monad_from_adjunction(adj)
    bcat = adj.left.source
    t = monad.functor
    algebras = []
    for b in bcat.objects:
        tb = t.object_map[b]
        for aname in bcat.hom_set(tb, b):
            a = (tb, b, aname)
            if bcat.comp(monad.unit.component(b), a) != bcat.id_mor(b):
                continue
            if bcat.comp(t.apply(a), a) != bcat.comp(monad.mult.component(b), a):
                continue
            algebras.append((b, a))
    objects = tuple(_algebra_label(b, a[2]) for b, a in algebras)
    by_label = dict(zip(objects, algebras))
    hom = {}
    for ob1, (b, a) in by_label.items():
        for ob2, (c, caction) in by_label.items():
            names = []
            for fname in bcat.hom_set(b, c):
                f = (b, c, fname)
                if bcat.comp(a, f) == bcat.comp(t.apply(f), caction):
                    names.append(fname)
            hom[(ob1, ob2)] = tuple(names)
    compose = {}
    for ob1, (b, _) in by_label.items():
        for ob2, (c, _) in by_label.items():
            for ob3, (d, _) in by_label.items():
                for fn in hom[(ob1, ob2)]:
                    for gn in hom[(ob2, ob3)]:
                        comp = bcat.comp((b, c, fn), (c, d, gn))
                        compose[(ob1, ob2, ob3, fn, gn)] = comp[2]
    identity = {ob: bcat.identity[by_label[ob][0]] for ob in objects}
    em = FiniteCategory(objects, hom, compose, identity, label="EM(%s)" % t.label).validate()
    forgetful = FunctorData(
        em,
        bcat,
        {ob: by_label[ob][0] for ob in objects},
        {(ob1, ob2, fn): fn for (ob1, ob2), names in hom.items() for fn in names},
        label="U",
    ).validate()
    return em, forgetful


def find_section_functors(u: FunctorData, cap=10**7):
    """All functors Γ with U∘Γ = Id on the target of U."""
    src, tgt = u.source, u.target
    fibers = {}
    space = 1
    for x in tgt.objects:
        fiber = tuple(o for o in src.objects if u.object_map[o] == x)
        if not fiber:
            return []
        fibers[x] = fiber
        space *= len(fiber)
        if space > cap:
            raise CapExceeded(space)
    results = []
    for combo in itertools.product(*(fibers[x] for x in tgt.objects)):
        gamma_obj = dict(zip(tgt.objects, combo))
        mor_candidates = []
        feasible = True
        tgt_mors = list(tgt.morphisms())
        total = 1
        for f in tgt_mors:
            gx, gy = gamma_obj[f[0]], gamma_obj[f[1]]
            cands = tuple(
                name
                for name in src.hom_set(gx, gy)
                if u.morphism_map[(gx, gy, name)] == f[2]
            )
            if not cands:
                feasible = False
                break
            mor_candidates.append(cands)
            total *= len(cands)
            if total > cap:
                raise CapExceeded(total)
        if not feasible:
            continue
        for mor_combo in itertools.product(*mor_candidates):
            gamma_mor = {f: name for f, name in zip(tgt_mors, mor_combo)}
            cand = FunctorData(tgt, src, gamma_obj, gamma_mor, label="Γ")
            try:
                cand.validate()
            except CategoryLawError:
                continue
            results.append(cand)
    results.sort(key=lambda g: g.component_key())
    return results


def find_monad_augmentations(monad: MonadData):
    """All natural γ: M → Id with γ∘η = id and γγ = γ∘m."""
    monad.validate()
    bcat = monad.functor.source
    t = monad.functor
    idf = identity_functor(bcat)
    objects = bcat.objects
    choice_sets = [bcat.hom_set(t.object_map[b], b) for b in objects]
    found = []
    for combo in itertools.product(*choice_sets):
        cand = NatTransform(t, idf, dict(zip(objects, combo)))
        try:
            cand.validate()
        except CategoryLawError:
            continue
        if any(
            bcat.comp(monad.unit.component(b), cand.component(b)) != bcat.id_mor(b)
            for b in objects
        ):
            continue
        ok = True
        for b in objects:
            tb = t.object_map[b]
            lhs = bcat.comp(cand.component(tb), cand.component(b))
            rhs = bcat.comp(monad.mult.component(b), cand.component(b))
            if lhs != rhs:
                ok = False
                break
        if ok:
            found.append(cand)
    found.sort(key=lambda n: n.key())
    return found


# ---------------------------------------------------------------------------
# JSON documents


def category_to_doc(cat: FiniteCategory) -> dict:
    return {
        "type": "category",
        "label": cat.label,
        "objects": list(cat.objects),
        "homs": [[x, y, list(names)] for (x, y), names in sorted(cat.hom.items())],
        "compose": [list(key) + [val] for key, val in sorted(cat.compose.items())],
        "identities": dict(sorted(cat.identity.items())),
    }


def _load_json(path):
    with open(path) as fh:
        return json.load(fh)


def category_from_doc(doc, base_dir=None) -> FiniteCategory:
    if isinstance(doc, str):
        path = Path(base_dir or ".") / doc
        return category_from_doc(_load_json(path), path.parent)
    hom = {(x, y): tuple(names) for x, y, names in doc.get("homs", [])}
    compose = {}
    for entry in doc.get("compose", []):
        x, y, z, f, g, h = entry
        compose[(x, y, z, f, g)] = h
    return FiniteCategory(
        tuple(doc["objects"]),
        hom,
        compose,
        dict(doc["identities"]),
        doc.get("label", "category"),
    ).validate()


def functor_from_doc(doc, base_dir=None) -> FunctorData:
    if isinstance(doc, str):
        path = Path(base_dir or ".") / doc
        return functor_from_doc(_load_json(path), path.parent)
    source = category_from_doc(doc["source"], base_dir)
    target = category_from_doc(doc["target"], base_dir)
    object_map = dict(doc["objects"])
    morphism_map = {(x, y, f): ff for x, y, f, ff in doc["morphisms"]}
    return FunctorData(source, target, object_map, morphism_map, doc.get("label", "functor")).validate()


def adjunction_from_doc(doc, base_dir=None) -> AdjunctionData:
    if isinstance(doc, str):
        path = Path(base_dir or ".") / doc
        return adjunction_from_doc(_load_json(path), path.parent)
    left = functor_from_doc(doc["left"], base_dir)
    right = functor_from_doc(doc["right"], base_dir)
    rl = compose_functors(right, left)
    lr = compose_functors(left, right)
    idb = identity_functor(left.source)
    ida = identity_functor(left.target)
    unit = NatTransform(idb, rl, dict(doc["unit"]))
    counit = NatTransform(lr, ida, dict(doc["counit"]))
    return AdjunctionData(left, right, unit, counit).validate()
