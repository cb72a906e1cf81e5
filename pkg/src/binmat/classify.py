"""Which clause of the P9-free structure theorem a binary matroid satisfies.

A 3-connected binary matroid with no P9-minor is regular, a binary spike
(Z_r, Z_r*, Z_r\\y_r or Z_r\\t with r >= 4), a starfish, or one of the sixteen
members of the list L.  :func:`classify` tests every clause and insists that
exactly one holds; anything else raises :class:`ExhaustivenessViolation`.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Any

from .canonical import canonical_key, is_isomorphism, isomorphism
from .catalog import L_MEMBERS, SpikeSpec, named, spike
from .compose import StarfishSpec, build_starfish
from .connectivity import Separation, find_separation
from .matroid import BinaryMatroid
from .minors import MinorWitness, find_minor, is_cographic, is_graphic, is_regular, witness_is_valid

KINDS = ("NotThreeConnected", "HasP9Minor", "Regular", "Y16Family", "Spike", "Starfish")


class ExhaustivenessViolation(AssertionError):
    """A P9-free 3-connected input matched no clause, or more than one."""


@dataclass(frozen=True)
class ClassLabel:
    kind: str
    certificate: Any = None
    detail: dict | None = None

    def to_json(self) -> dict:
        c = self.certificate
        if isinstance(c, (Separation, MinorWitness)):
            cert = c.to_json()
        elif isinstance(c, (SpikeSpec,)):
            cert = {"r": c.r, "variant": c.variant}
        elif isinstance(c, StarfishSpec):
            cert = c.to_json()
        else:
            cert = c
        out = {"label": self.kind, "certificate": cert}
        if self.detail:
            out.update({k: v for k, v in self.detail.items() if k != "iso"})
            if "iso" in self.detail:
                out["isomorphism"] = {str(a): str(b) for a, b in self.detail["iso"].items()}
        return out


# -- clause recognizers ------------------------------------------------------------

def _spike_candidates(M: BinaryMatroid) -> list[SpikeSpec]:
    n, r = len(M), M.rank
    out = []
    if n == 2 * r + 1:
        out.append(SpikeSpec(r, "Z"))
    if n == 2 * r - 1 and r - 1 >= 3:
        out.append(SpikeSpec(r - 1, "Z_dual"))
    if n == 2 * r:
        out += [SpikeSpec(r, "Z_minus_y"), SpikeSpec(r, "Z_minus_t")]
    return [s for s in out if s.r >= 4]


def is_spike_family(M: BinaryMatroid) -> tuple[SpikeSpec, dict] | None:
    """(spec, isomorphism onto spike(spec)) for the theorem's spikes, r >= 4."""
    for spec in _spike_candidates(M):
        phi = isomorphism(M, spike(spec))
        if phi is not None:
            return spec, phi
    return None


def starfish_specs_for(n_elements: int, rank: int) -> list[StarfishSpec]:
    """Every valid spec whose size and rank match."""
    n = n_elements - rank - 2
    out = []
    for extra in range(4):
        t = n_elements - 3 * n - extra
        spec = StarfishSpec(extra, n, t)
        try:
            spec.validate()
        except ValueError:
            continue
        if spec.rank == rank:
            out.append(spec)
    return out


@lru_cache(maxsize=None)
def _starfish_key(spec: StarfishSpec) -> bytes:
    return canonical_key(build_starfish(spec)).data


def is_starfish(M: BinaryMatroid) -> tuple[StarfishSpec, dict] | None:
    """(spec, isomorphism onto build_starfish(spec)) when M is a starfish.

    Legs sit on stars of large-class vertices; those are permuted transitively by
    the base graph's automorphisms, so one instance per spec suffices.
    """
    key = None
    for spec in starfish_specs_for(len(M), M.rank):
        key = key or canonical_key(M).data
        if _starfish_key(spec) == key:
            return spec, isomorphism(M, build_starfish(spec))
    return None


@lru_cache(maxsize=1)
def _l_keys() -> dict:
    return {canonical_key(named(x)).data: x for x in L_MEMBERS}


def y16_family_member(M: BinaryMatroid) -> tuple[str, dict] | None:
    if not 7 <= len(M) <= 16:
        return None
    name = _l_keys().get(canonical_key(M).data)
    if name is None:
        return None
    return name, isomorphism(M, named(name))


def refine_regular(M: BinaryMatroid) -> str:
    g, c = is_graphic(M), is_cographic(M)
    if g and c:
        return "graphic+cographic"
    if g:
        return "graphic"
    if c:
        return "cographic"
    if canonical_key(M) == canonical_key(named("R10")):
        return "R10"
    return "other"


# -- classification ----------------------------------------------------------------

def clause_matches(M: BinaryMatroid) -> list[ClassLabel]:
    """Every P9-free clause that M satisfies (M assumed 3-connected and P9-free)."""
    out = []
    if is_regular(M):
        out.append(ClassLabel("Regular"))
    sp = is_spike_family(M)
    if sp is not None:
        out.append(ClassLabel("Spike", sp[0], {"iso": sp[1]}))
    fam = y16_family_member(M)
    if fam is not None:
        out.append(ClassLabel("Y16Family", fam[0], {"iso": fam[1]}))
    sf = is_starfish(M)
    if sf is not None:
        out.append(ClassLabel("Starfish", sf[0], {"iso": sf[1]}))
    return out


def classify(M: BinaryMatroid, refine_regular_clause: bool = False) -> ClassLabel:
    sep = find_separation(M, 2)
    if sep is not None:
        return ClassLabel("NotThreeConnected", sep)
    w = find_minor(M, named("P9"))
    if w is not None:
        return ClassLabel("HasP9Minor", w)
    hits = clause_matches(M)
    if len(hits) != 1:
        kinds = [h.kind for h in hits] or ["none"]
        raise ExhaustivenessViolation(
            f"P9-free 3-connected matroid ({len(M)} elements, rank {M.rank}) matched: {', '.join(kinds)}")
    label = hits[0]
    if label.kind == "Regular" and refine_regular_clause:
        return ClassLabel("Regular", None, {"refined": refine_regular(M)})
    return label


def verify_certificate(M: BinaryMatroid, label: ClassLabel) -> bool:
    """Recheck the evidence carried by ``label`` from scratch."""
    kind, c = label.kind, label.certificate
    if kind == "NotThreeConnected":
        return isinstance(c, Separation) and c.check(M) and c.order <= 2
    if kind == "HasP9Minor":
        return witness_is_valid(M, named("P9"), c)
    if kind == "Regular":
        return is_regular(M)
    iso = (label.detail or {}).get("iso")
    if iso is None:
        return False
    if kind == "Spike":
        return is_isomorphism(M, spike(c), iso)
    if kind == "Y16Family":
        return c in L_MEMBERS and is_isomorphism(M, named(c), iso)
    if kind == "Starfish":
        return is_isomorphism(M, build_starfish(c), iso)
    return False
