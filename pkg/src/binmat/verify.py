"""Named verification cases for ``binmat verify-paper``.

Each case recomputes one group of published facts from scratch and reports a
status plus JSON-ready details.  The test suite checks the same facts again,
partly against independent oracles.
"""

from __future__ import annotations

import random
import time
from dataclasses import dataclass, field
from typing import Callable

from .canonical import canonical_key
from .catalog import L_MEMBERS, SpikeSpec, named, spike
from .classify import classify, verify_certificate
from .compose import (StarfishSpec, TriangleGlue, build_starfish, cocircuit_delta_family,
                      cocircuits_of_pc, direct_sum, parallel_connection_triangle, three_sum,
                      three_sum_defect)
from .connectivity import is_internally_4_connected, is_three_connected
from .enumerate import THREE_CONNECTED, census, closure_search, excluding
from .graphs import (Graph, bond_matroid, cube, cycle_matroid, k3n_variant, prism, prism_plus,
                     wagner, wheel)
from .matroid import BinaryMatroid, from_columns
from .minors import RootedPattern, has_minor, has_rooted_minor, is_regular


@dataclass
class VerificationCase:
    id: str
    description: str
    status: str = "pending"
    details: dict = field(default_factory=dict)
    seconds: float = 0.0

    def to_json(self) -> dict:
        return {"id": self.id, "description": self.description, "status": self.status,
                "seconds": round(self.seconds, 3), "details": self.details}


# -- helpers -----------------------------------------------------------------------

def is_single_element_extension_of(M: BinaryMatroid, N: BinaryMatroid) -> bool:
    """Some e with M \\ e isomorphic to N."""
    if len(M) != len(N) + 1 or M.rank != N.rank:
        return False
    kN = canonical_key(N)
    return any(canonical_key(M.delete([e])) == kN for e in M.elements)


def is_single_element_coextension_of(M: BinaryMatroid, N: BinaryMatroid) -> bool:
    """Some e with M / e isomorphic to N."""
    if len(M) != len(N) + 1 or M.rank != N.rank + 1:
        return False
    kN = canonical_key(N)
    return any(canonical_key(M.contract([e])) == kN for e in M.elements)


CENSUS_TABLE = {
    6: ["W3"],
    7: ["F7", "F7*"],
    8: ["W4", "S8", "AG(3,2)"],
    9: ["M(K3,3)", "M*(K3,3)", "M(K5\\e)", "Prism", "P9", "P9*", "Z4", "Z4*"],
}

X10_CLOSURE = ("X11", "X11'", "Y11", "X12", "X12'", "Y12", "X13", "Y13",
               "X14", "Y14", "X15", "Y15", "Y16")


def valid_starfish_specs(max_n: int = 4) -> list[StarfishSpec]:
    out = []
    for n in range(2, max_n + 1):
        for extra in range(4):
            for t in range(1, n + 1):
                s = StarfishSpec(extra, n, t)
                try:
                    s.validate()
                except ValueError:
                    continue
                out.append(s)
    return out


def k3n_family(max_n: int = 4) -> list[tuple[int, int, Graph]]:
    """(n, extra, graph) for every member whose bond matroid is 3-connected."""
    out = []
    for n in range(1, max_n + 1):
        for extra in range(4):
            G = k3n_variant(n, extra)
            if len(G.edges) >= 4 and is_three_connected(bond_matroid(G)):
                out.append((n, extra, G))
    return out


NON_FAMILY_GRAPHS: dict[str, Callable[[], Graph]] = {
    "W5": lambda: wheel(5),
    "W6": lambda: wheel(6),
    "cube": cube,
    "prism+e": prism_plus,
    "wagner": wagner,
}


def k4_double_prime_pattern() -> RootedPattern:
    from .catalog import k4_double_prime

    return k4_double_prime()


def random_glue(rng: random.Random, tag_left: str = "a", tag_right: str = "b",
                max_size: int = 9) -> TriangleGlue:
    """A random valid 3-sum instance, each side 7..max_size elements."""

    def side(tag):
        while True:
            r = rng.randint(3, 5)
            n = rng.randint(7, max_size)
            a, b = rng.randrange(1, 1 << r), rng.randrange(1, 1 << r)
            if a == b:
                continue
            cols = [a, b, a ^ b] + [rng.randrange(0, 1 << r) for _ in range(n - 3)]
            labels = [f"{tag}{i}" for i in range(n)]
            M = from_columns(cols, r, labels)
            if M.rank == r:
                return M, labels[:3]

    while True:
        L, tl = side(tag_left)
        R, tr = side(tag_right)
        g = TriangleGlue.of(L, tl, R, tr)
        if three_sum_defect(g) is None:
            return g


def delta_form_holds(g: TriangleGlue, M: BinaryMatroid | None = None) -> bool:
    """Both halves of the 3-sum cocircuit corollary on one instance.

    ``M`` defaults to ``three_sum(g)``; pass ``P_T \\ T`` to test gluings that
    three_sum would reject.
    """
    M = three_sum(g) if M is None else M
    actual = {frozenset(c) for c in M.cocircuits()}
    avoid, deltas = cocircuit_delta_family(g)
    avoid_set, delta_set = set(avoid), set(deltas)
    if not all(c in avoid_set or c in delta_set for c in actual):
        return False
    if not all(c in actual for c in avoid):
        return False
    left = frozenset(g.left.elements)
    for d in deltas:
        if not d or d in actual:
            continue
        ok = False
        for x in actual:
            y = d - x
            if x < d and y in actual and all(p & left and p - left for p in (x, y)):
                ok = True
                break
        if not ok:
            return False
    return True


# -- cases -------------------------------------------------------------------------

def case_census_table() -> tuple[bool, dict]:
    rep = census(9)
    keys_by_size: dict[int, set] = {}
    for f in rep.found.values():
        keys_by_size.setdefault(f.size, set()).add(f.key.data)
    details = {"counts": {str(k): len(v) for k, v in sorted(keys_by_size.items())}}
    ok = True
    for size, names in CENSUS_TABLE.items():
        expected = {canonical_key(named(x)).data for x in names}
        match = keys_by_size.get(size, set()) == expected and len(expected) == len(names)
        details[f"size{size}"] = {"expected": names, "match": match}
        ok &= match
    return ok, details


def case_x10_closure() -> tuple[bool, dict]:
    P9 = named("P9")
    Y16 = named("Y16")
    X10 = named("X10")
    rep = closure_search([X10], [THREE_CONNECTED, excluding(P9, "P9")], max_steps=8)
    found = {f.key.data: f for f in rep.new()}
    expected = {canonical_key(named(x)).data: x for x in X10_CLOSURE}
    names = [expected.get(k, "?") for k in found]
    per = {}
    ok = set(found) == set(expected) and rep.fixpoint and rep.added_per_step[-1] == 0
    for k, f in found.items():
        M = f.matroid
        facts = {"i4c": is_internally_4_connected(M), "minor_of_Y16": has_minor(Y16, M),
                 "has_X10": has_minor(M, X10)}
        per[expected.get(k, k.hex())] = facts
        ok &= all(facts.values())
    return ok, {"found": sorted(names), "count": len(found), "added_per_step": rep.added_per_step,
                "fixpoint": rep.fixpoint, "members": per}


def case_y16_facts() -> tuple[bool, dict]:
    Y16 = named("Y16")
    d = {"size": len(Y16), "rank": Y16.rank,
         "p9_free": not has_minor(Y16, named("P9")),
         "i4c": is_internally_4_connected(Y16),
         "extends_X15": is_single_element_extension_of(Y16, named("X15")),
         "X15_is_PG32_dual": canonical_key(named("X15")) == canonical_key(named("PG(3,2)*"))}
    d["only_F7_has_triangle"] = all(bool(named(x).triangles()) == (x == "F7") for x in L_MEMBERS)
    chain = {}
    xs = ["X10", "X11", "X12", "X13", "X14", "X15"]
    for a, b in zip(xs, xs[1:]):
        chain[f"{b}/e=={a}"] = is_single_element_coextension_of(named(b), named(a))
    for i in range(11, 17):
        chain[f"Y{i}\\e==X{i - 1}"] = is_single_element_extension_of(named(f"Y{i}"), named(f"X{i - 1}"))
        if i > 11:
            chain[f"Y{i}/e==Y{i - 1}"] = is_single_element_coextension_of(named(f"Y{i}"), named(f"Y{i - 1}"))
    primed = ["X10", "X11'", "X12'", "X13"]
    for a, b in zip(primed, primed[1:]):
        chain[f"{b}/e=={a}"] = is_single_element_coextension_of(named(b), named(a))
    d["chain"] = chain
    ok = (d["size"] == 16 and d["rank"] == 11 and all(v for k, v in d.items()
                                                      if isinstance(v, bool)) and all(chain.values()))
    return ok, d


def case_spikes(rmax: int = 7) -> tuple[bool, dict]:
    P9, W4 = named("P9"), named("W4")
    out = {}
    ok = True
    for r in range(4, rmax + 1):
        for v in ("Z", "Z_dual", "Z_minus_y", "Z_minus_t"):
            M = spike(SpikeSpec(r, v))
            facts = {"3conn": is_three_connected(M), "p9_free": not has_minor(M, P9),
                     "w4_free": not has_minor(M, W4)}
            out[f"{v}({r})"] = facts
            ok &= all(facts.values())
    return ok, out


def case_starfish(max_n: int = 4) -> tuple[bool, dict]:
    P9, W4 = named("P9"), named("W4")
    smallest = canonical_key(build_starfish(StarfishSpec(2, 2, 1))) == canonical_key(named("P9*"))
    out = {"smallest_is_P9*": smallest}
    ok = smallest
    for s in valid_starfish_specs(max_n):
        M = build_starfish(s)
        facts = {"size": len(M) == s.size, "rank": M.rank == s.rank,
                 "3conn": is_three_connected(M), "non_regular": not is_regular(M),
                 "p9_free": not has_minor(M, P9), "has_W4": has_minor(M, W4)}
        out[f"({s.extra},{s.n},{s.t})"] = facts
        ok &= all(facts.values())
    return ok, out


def _star_glue(A: BinaryMatroid, GA: Graph, u, B: BinaryMatroid, GB: Graph, v) -> TriangleGlue:
    ea = sorted(GA.edges_at(u))
    eb = sorted(GB.edges_at(v))
    return TriangleGlue.of(A, ea, B, eb)


def case_composition() -> tuple[bool, dict]:
    from .catalog import k4_prime

    out = {}
    for m in (3, 4):
        for n in (3, 4):
            Gm, Gn = k3n_variant(m, 0), k3n_variant(n, 0)
            Gp = k3n_variant(m, 1)
            A, B, Ap = bond_matroid(Gm), bond_matroid(Gn), bond_matroid(Gp)
            target = canonical_key(bond_matroid(k3n_variant(m + n - 2, 0)))
            out[f"(i) m={m} n={n}"] = canonical_key(three_sum(_star_glue(A, Gm, "u1", B, Gn, "u1"))) == target
            target = canonical_key(bond_matroid(k3n_variant(m + n - 2, 1)))
            out[f"(ii) m={m} n={n}"] = canonical_key(three_sum(_star_glue(Ap, Gp, "u1", B, Gn, "u1"))) == target
    K4p = k4_prime().target
    for m in (3, 4):
        Gm = k3n_variant(m, 0)
        A = bond_matroid(Gm)
        g = TriangleGlue.of(A, sorted(Gm.edges_at("u1")), K4p, ["k1k2", "k1k3", "k2k3"])
        out[f"(iv) m={m}"] = canonical_key(three_sum(g)) == canonical_key(bond_matroid(k3n_variant(m, 1)))
    # associativity: F7 and F7 on two disjoint stars of M*(K3,3)
    G = k3n_variant(3, 0)
    N = bond_matroid(G)
    F1 = named("F7").relabel(lambda e: f"p.{e}")
    F3 = named("F7").relabel(lambda e: f"q.{e}")
    tf1 = sorted(F1.triangles()[0])
    tf3 = sorted(F3.triangles()[0])
    s1, s2 = sorted(G.edges_at("u1")), sorted(G.edges_at("u2"))
    inner = three_sum(TriangleGlue.of(N, s2, F3, tf3))
    lhs = three_sum(TriangleGlue.of(F1, tf1, inner, s1))
    outer = three_sum(TriangleGlue.of(F1, tf1, N, s1))
    rhs = three_sum(TriangleGlue.of(outer, s2, F3, tf3))
    out["associativity"] = canonical_key(lhs) == canonical_key(rhs)
    # P_T(M1, M2) / T == (M1 / T) (+) (M2 / T)
    for a, b, tb in (("F7", "M(K4)", ["k1k2", "k1k3", "k2k3"]), ("F7", "W4", ["s0", "s1", "c0"])):
        M1 = named(a)
        M2 = named(b)
        t1 = sorted(M1.triangles()[0])
        g = TriangleGlue.of(M1, t1, M2, tb)
        P = parallel_connection_triangle(g)
        lhs_ = P.contract(t1)
        rhs_ = direct_sum(M1.contract(t1), M2.contract(tb))
        out[f"brylawski-vii {a},{b}"] = canonical_key(lhs_) == canonical_key(rhs_)
    return all(out.values()), out


def case_cocircuit_lemma(instances: int = 20, seed: int = 20240101) -> tuple[bool, dict]:
    rng = random.Random(seed)
    out = {}
    for i in range(instances):
        g = random_glue(rng)
        P = parallel_connection_triangle(g)
        pc = set(cocircuits_of_pc(g)) == {frozenset(c) for c in P.cocircuits()}
        out[f"instance{i}"] = {"sizes": [len(g.left), len(g.right)], "pc": pc,
                               "delta": delta_form_holds(g)}
    ok = all(v["pc"] and v["delta"] for v in out.values())
    return ok, out


def case_rooted_minors() -> tuple[bool, dict]:
    """Family members must have no rooted K4'' at any triangle; non-family graphs
    must have one at every triangle.

    ``large_class_ok`` records the weaker statement restricted to triangles that
    are stars of large-class vertices, which is what the starfish legs use.
    """
    pat = k4_double_prime_pattern()
    out = {}
    for n, extra, G in k3n_family(4):
        M = bond_matroid(G)
        large = [frozenset(G.edges_at(f"u{j}")) for j in range(1, n + 1)]
        hits = [t for t in M.triangles() if has_rooted_minor(M, t, pat)]
        out[f"M*(K3,{n})+{extra}"] = {"triangles": len(M.triangles()),
                                      "rooted": [sorted(t) for t in hits],
                                      "large_class_ok": not any(t in large for t in hits)}
    family_ok = all(not v["rooted"] for v in out.values())
    large_ok = all(v["large_class_ok"] for v in out.values())
    for name, build in NON_FAMILY_GRAPHS.items():
        M = bond_matroid(build())
        tris = M.triangles()
        hits = [t for t in tris if has_rooted_minor(M, t, pat)]
        out[f"M*({name})"] = {"triangles": len(tris), "rooted_count": len(hits)}
    non_family_ok = all(out[f"M*({x})"]["rooted_count"] == out[f"M*({x})"]["triangles"] > 0
                        for x in NON_FAMILY_GRAPHS)
    graphic = {}
    for name, G in (("K4", k3n_variant(1, 3)), ("W4", wheel(4)), ("Prism", prism())):
        M = cycle_matroid(G)
        graphic[name] = sum(has_rooted_minor(M, t, pat) for t in M.triangles())
    out["graphic exceptions"] = graphic
    out["summary"] = {"family_no_rooted_any_triangle": family_ok,
                      "family_no_rooted_large_class_stars": large_ok,
                      "non_family_rooted_every_triangle": non_family_ok,
                      "graphic_exceptions_none": not any(graphic.values())}
    return family_ok and non_family_ok and not any(graphic.values()), out


def case_classifier(max_size: int = 10) -> tuple[bool, dict]:
    P9 = named("P9")
    rep = census(max_size)
    counts: dict[str, int] = {}
    ok = True
    for f in rep.ordered():
        M = f.matroid
        label = classify(M)
        agree = (label.kind == "HasP9Minor") == has_minor(M, P9)
        good = agree and verify_certificate(M, label)
        ok &= good
        counts[label.kind] = counts.get(label.kind, 0) + 1
    return ok, {"matroids": len(rep.found), "by_label": counts}


CASES: dict[str, tuple[str, Callable[[], tuple[bool, dict]]]] = {
    "census-table": ("3-connected binary matroids on 6..9 elements", case_census_table),
    "x10-closure": ("X10 extended and coextended under P9-freeness", case_x10_closure),
    "y16-facts": ("Y16, the list L and the matrix chains", case_y16_facts),
    "spikes": ("spikes are 3-connected, P9-free and W4-free", case_spikes),
    "starfish": ("starfish suite", case_starfish),
    "composition": ("3-sum identities for K3,n bond matroids", case_composition),
    "cocircuit-lemma": ("cocircuits of parallel connections and 3-sums", case_cocircuit_lemma),
    "rooted-minors": ("rooted K4'' minors of bond matroids", case_rooted_minors),
    "classifier": ("classifier agrees with direct P9 search", case_classifier),
}


def run_case(case_id: str) -> VerificationCase:
    desc, fn = CASES[case_id]
    vc = VerificationCase(case_id, desc)
    t0 = time.perf_counter()
    try:
        ok, details = fn()
        vc.status = "pass" if ok else "fail"
        vc.details = details
    except Exception as exc:  # surfaced in the report, not swallowed
        vc.status = "fail"
        vc.details = {"error": f"{type(exc).__name__}: {exc}"}
    vc.seconds = time.perf_counter() - t0
    return vc
