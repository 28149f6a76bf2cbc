"""Shared finite-category corpus: small posets, monoids, adjunctions."""

from hsep.fincat import (
    AdjunctionData,
    FunctorData,
    NatTransform,
    chain_poset,
    compose_functors,
    identity_adjunction,
    identity_functor,
    monoid_category,
)


def terminal_category():
    return chain_poset(1, prefix="t")


def inclusion_terminal_into_chain(chain, target_obj):
    term = terminal_category()
    return FunctorData(
        term,
        chain,
        {"t0": target_obj},
        {("t0", "t0", term.identity["t0"]): chain.identity[target_obj]},
        label="incl",
    ).validate()


def collapse_to_terminal(cat):
    term = terminal_category()
    return FunctorData(
        cat,
        term,
        {x: "t0" for x in cat.objects},
        {f: term.identity["t0"] for f in cat.morphisms()},
        label="collapse",
    ).validate()


def galois_two_chain_terminal():
    """2-chain ⇄ terminal: L collapses, R picks the top object."""
    b = chain_poset(2)
    a = terminal_category()
    left = collapse_to_terminal(b)
    right = FunctorData(
        a, b, {"t0": "c1"}, {("t0", "t0", a.identity["t0"]): b.identity["c1"]}, label="top"
    ).validate()
    rl = compose_functors(right, left)
    unit = NatTransform(identity_functor(b), rl, {"c0": "c0<=c1", "c1": "c1<=c1"})
    counit = NatTransform(
        compose_functors(left, right), identity_functor(a), {"t0": a.identity["t0"]}
    )
    return AdjunctionData(left, right, unit, counit).validate()


def rl_identity_adjunction():
    """2-chain ⇄ 3-chain Galois connection with RL = Id."""
    b = chain_poset(2)
    a = chain_poset(3, prefix="d")
    lmap = {"c0": "d0", "c1": "d2"}
    rmap = {"d0": "c0", "d1": "c0", "d2": "c1"}
    left = FunctorData(
        b,
        a,
        lmap,
        {(x, y, n): "%s<=%s" % (lmap[x], lmap[y]) for x, y, n in b.morphisms()},
        label="L",
    ).validate()
    right = FunctorData(
        a,
        b,
        rmap,
        {(x, y, n): "%s<=%s" % (rmap[x], rmap[y]) for x, y, n in a.morphisms()},
        label="R",
    ).validate()
    unit = NatTransform(
        identity_functor(b),
        compose_functors(right, left),
        {x: b.identity[x] for x in b.objects},
    )
    counit = NatTransform(
        compose_functors(left, right),
        identity_functor(a),
        {"d0": "d0<=d0", "d1": "d0<=d1", "d2": "d2<=d2"},
    )
    return AdjunctionData(left, right, unit, counit).validate()


def c2_category():
    return monoid_category(("1", "g"), [[0, 1], [1, 0]], 0, label="C2")


def c2_twisted_adjunction():
    """Identity functors on C2 with unit = counit = g (a valid adjunction)."""
    cat = c2_category()
    idf = identity_functor(cat)
    unit = NatTransform(idf, compose_functors(idf, idf), {"*": "g"})
    counit = NatTransform(compose_functors(idf, idf), idf, {"*": "g"})
    return AdjunctionData(idf, idf, unit, counit).validate()


def build_adjunctions():
    return {
        "identity_2chain": identity_adjunction(chain_poset(2)),
        "galois_collapse": galois_two_chain_terminal(),
        "rl_identity": rl_identity_adjunction(),
        "c2_twisted": c2_twisted_adjunction(),
    }
