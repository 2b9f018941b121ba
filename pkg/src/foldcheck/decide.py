"""Existence verdicts for (tame) fold maps, with theorem-level provenance.

Every decision is tri-valued (Exists / NotExists / Unknown) and carries a
trace of the rules that produced it.  NotExists verdicts always cite a
nonvanishing obstruction; Unknown verdicts cite the gap that blocks a
definite answer.  The deciders never overclaim: sufficiency-only results
(Eliashberg's h-principle, the 6-manifold theorem) can produce Exists but
never NotExists.

The rule inventory, by target dimension p and source dimension n:

* p = 1: Morse functions always exist.
* p = 2: Thom--Levine — a fold map exists iff chi(M) is even.
* p = n, 4 <= n <= 7: pin + z-class obstructions for the virtual
  difference TM - g*TN (Thm 3.4 / Cor 3.5 for n = 4, Thm 3.7 for
  5 <= n <= 7).
* p = 3, n >= 4: the twisted-Whitney-class criterion for non-orientable
  4-manifolds (Thm 5.1), the 6-manifold sufficiency theorem (Thm 5.8),
  and the odd/even high-dimensional criteria (Rem 5.10).
* p = 4, n even >= 6: the signature and w_{n-2} criteria (Thm 4.3,
  Thm 4.6) with dimensions 6 and 8 explicitly excluded (Rem 4.7, Rem 4.4).

When no specialized rule decides, a sufficiency chain runs: stable
parallelizability, then stable-span bounds via the equivalence
"a tame fold map into R^p exists iff span0(M) >= p - 1" (Cor 2.4).
"""
from __future__ import annotations

import enum
import weakref
from dataclasses import dataclass
from typing import List, Optional, Tuple

from .algebra import ClassZ2, TotalClass, invert_total
from .catalog import Manifold
from .characteristic import BundleDescriptor, trivial_descriptor, virtual_difference, z_status
from .errors import InvariantViolation
from .tristate import P1Data, TriState, p1_negate

__all__ = [
    "Outcome",
    "TraceEntry",
    "Verdict",
    "TargetSpec",
    "SpanBounds",
    "ThomEntry",
    "ThomTable",
    "decide_low_codim",
    "decide_dim4_to_R4",
    "decide_equidim",
    "decide_to_R3",
    "decide_highdim_to_R4",
    "decide_fold",
    "stable_span_bounds",
    "thom_polynomials",
]


class Outcome(enum.Enum):
    EXISTS = "exists"
    NOT_EXISTS = "not_exists"
    UNKNOWN = "unknown"

    def render(self) -> str:
        return {"exists": "EXISTS", "not_exists": "NOT EXISTS", "unknown": "UNKNOWN"}[self.value]


@dataclass(frozen=True)
class TraceEntry:
    rule: str
    citation: str
    obstruction: str
    value: str


@dataclass(frozen=True)
class Verdict:
    outcome: Outcome
    tame: bool
    trace: Tuple[TraceEntry, ...]

    def __post_init__(self):
        if not self.trace:
            raise InvariantViolation("verdict-trace", "a verdict must carry at least one trace entry")
        if self.outcome is Outcome.NOT_EXISTS and all(e.obstruction == "none" for e in self.trace):
            raise InvariantViolation("verdict-trace", "a NotExists verdict must cite an obstruction")


@dataclass(frozen=True)
class TargetSpec:
    """Target of the fold map: R^p, S^p, or pulled-back tangent data g*TN."""

    kind: str
    dim: int
    descriptor: Optional[BundleDescriptor] = None

    @staticmethod
    def euclidean(p: int) -> "TargetSpec":
        if p < 1:
            raise ValueError("target dimension must be >= 1")
        return TargetSpec("euclidean", p)

    @staticmethod
    def sphere(p: int) -> "TargetSpec":
        if p < 1:
            raise ValueError("target dimension must be >= 1")
        return TargetSpec("sphere", p)

    @staticmethod
    def pullback(dim: int, descriptor: BundleDescriptor) -> "TargetSpec":
        if descriptor.rank != dim:
            raise ValueError(
                f"pullback descriptor has rank {descriptor.rank}, expected the target dimension {dim}"
            )
        return TargetSpec("pullback", dim, descriptor)

    @property
    def label(self) -> str:
        if self.kind == "euclidean":
            return f"R^{self.dim}"
        if self.kind == "sphere":
            return f"S^{self.dim}"
        return f"pullback(rank={self.dim})"


@dataclass(frozen=True)
class SpanBounds:
    lower: int
    upper: int
    trace: Tuple[TraceEntry, ...]

    def __post_init__(self):
        if self.lower < 0 or self.lower > self.upper:
            raise InvariantViolation("span-bounds", f"invalid interval [{self.lower}, {self.upper}]")


def _entry(rule: str, citation: str, obstruction: str, value: str) -> TraceEntry:
    return TraceEntry(rule, citation, obstruction, value)


# ---------------------------------------------------------------------------
# low codimension: p = 1 and p = 2


def decide_low_codim(m: Manifold, p: int, tame: bool = False) -> Verdict:
    """Fold maps to the line (Morse functions) and to the plane (Thom--Levine)."""
    if p == 1:
        entry = _entry(
            "morse-function", "Morse", "none", "every closed manifold admits a Morse function"
        )
        return Verdict(Outcome.EXISTS, tame, (entry,))
    if p != 2:
        raise ValueError("decide_low_codim handles p = 1 and p = 2 only")
    if m.euler % 2 == 0:
        entry = _entry("thom-levine", "Thom-Levine", "none", f"chi = {m.euler} is even")
        return Verdict(Outcome.EXISTS, tame, (entry,))
    entry = _entry("thom-levine", "Thom-Levine", "chi", f"chi = {m.euler} is odd")
    return Verdict(Outcome.NOT_EXISTS, tame, (entry,))


# ---------------------------------------------------------------------------
# equidimensional targets: 4 <= n <= 7 decidable


def _difference_for(m: Manifold, target: TargetSpec) -> Tuple[TotalClass, P1Data]:
    if target.kind == "pullback":
        return virtual_difference(m, target.descriptor)
    return virtual_difference(m, trivial_descriptor(m.algebra, m.dim))


def decide_equidim(m: Manifold, target: TargetSpec, tame: bool = False) -> Verdict:
    """Equidimensional targets (p = n) via the pin and z-class obstructions."""
    n = m.dim
    if target.dim != n:
        raise ValueError(f"equidimensional target has dimension {target.dim}, expected {n}")
    if n < 4 or n > 7:
        entry = _entry(
            "equidim-range",
            "Thm 3.7",
            "none",
            f"dimension {n} outside the decidable range 4 <= n <= 7",
        )
        return Verdict(Outcome.UNKNOWN, tame, (entry,))

    w_diff, p1_diff = _difference_for(m, target)
    w1 = w_diff.component(1)
    w2 = w_diff.component(2)
    oriented_data = w1.is_zero()

    if n == 4:
        citation = "Thm 3.4" if target.kind == "pullback" else (
            "Cor 3.5(i)" if oriented_data else "Cor 3.5(ii)"
        )
        if not w2.is_zero():
            entry = _entry("dim4-pin", citation, "w_2", f"w_2 = {w2} != 0")
            return Verdict(Outcome.NOT_EXISTS, tame, (entry,))
        if oriented_data:
            if p1_diff.is_known_zero:
                entry = _entry("dim4-oriented", citation, "none", "w_2 = 0; p_1 = 0")
                return Verdict(Outcome.EXISTS, tame, (entry,))
            if p1_diff.kind.name == "INTEGER":
                entry = _entry(
                    "dim4-oriented", citation, "p_1", f"w_2 = 0; p_1 = {p1_diff.number} != 0"
                )
                return Verdict(Outcome.NOT_EXISTS, tame, (entry,))
            if p1_diff.is_known_nonzero:
                entry = _entry("dim4-oriented", citation, "p_1", "w_2 = 0; p_1 != 0")
                return Verdict(Outcome.NOT_EXISTS, tame, (entry,))
            entry = _entry("dim4-oriented", citation, "p_1", "w_2 = 0; p_1 undetermined")
            return Verdict(Outcome.UNKNOWN, tame, (entry,))
        w4 = w_diff.component(4)
        if w4.is_zero():
            entry = _entry("dim4-nonorientable", citation, "none", "w_2 = 0; w_4 = 0")
            return Verdict(Outcome.EXISTS, tame, (entry,))
        entry = _entry("dim4-nonorientable", citation, "w_4", f"w_2 = 0; w_4 = {w4} != 0")
        return Verdict(Outcome.NOT_EXISTS, tame, (entry,))

    # 5 <= n <= 7
    if not w2.is_zero():
        entry = _entry("equidim-pin", "Thm 3.7", "w_2", f"w_2 = {w2} != 0")
        return Verdict(Outcome.NOT_EXISTS, tame, (entry,))
    z = z_status(n, oriented_data, w_diff, p1_diff, torsion_free=m.torsion_free)
    if z.is_zero:
        entry = _entry("equidim-z", "Thm 3.7", "none", f"w_2 = 0; z = 0 ({z.note})")
        return Verdict(Outcome.EXISTS, tame, (entry,))
    if z.is_nonzero:
        entry = _entry("equidim-z", "Thm 3.7", "z", f"w_2 = 0; z != 0 ({z.note})")
        return Verdict(Outcome.NOT_EXISTS, tame, (entry,))
    entry = _entry("equidim-z", "Thm 3.7", "z", f"w_2 = 0; z undetermined ({z.note})")
    return Verdict(Outcome.UNKNOWN, tame, (entry,))


def decide_dim4_to_R4(m: Manifold, tame: bool = False) -> Verdict:
    """Fold maps of a closed connected 4-manifold into R^4 (Cor 3.5)."""
    if m.dim != 4:
        raise ValueError(f"decide_dim4_to_R4 expects a 4-manifold, got dimension {m.dim}")
    return decide_equidim(m, TargetSpec.euclidean(4), tame)


# ---------------------------------------------------------------------------
# target R^3


def decide_to_R3(m: Manifold, tame: bool = False) -> Verdict:
    """Fold maps into R^3 for dim M >= 4."""
    n = m.dim
    if n < 4:
        raise ValueError("decide_to_R3 expects dim M >= 4")

    if n == 4:
        if m.orientable:
            entry = _entry(
                "dim4-oriented-R3",
                "Sadykov-Saeki",
                "none",
                "criterion for closed orientable 4-manifolds is stated in external works",
            )
            return Verdict(Outcome.UNKNOWN, tame, (entry,))
        w4 = m.w.component(4)
        w3_status = m.w3_twisted
        if w3_status.is_nonzero:
            tame_verdict = Verdict(
                Outcome.NOT_EXISTS,
                True,
                (_entry("dim4-tame-R3", "Thm 5.1", "W_3", f"W_3 != 0 ({w3_status.note})"),),
            )
        elif not w4.is_zero():
            tame_verdict = Verdict(
                Outcome.NOT_EXISTS,
                True,
                (_entry("dim4-tame-R3", "Thm 5.1", "w_4", f"w_4 = {w4} != 0"),),
            )
        elif w3_status.is_zero:
            tame_verdict = Verdict(
                Outcome.EXISTS,
                True,
                (_entry("dim4-tame-R3", "Thm 5.1", "none", "W_3 = 0; w_4 = 0"),),
            )
        else:
            tame_verdict = Verdict(
                Outcome.UNKNOWN,
                True,
                (_entry("dim4-tame-R3", "Thm 5.1", "W_3", f"w_4 = 0; W_3 undetermined ({w3_status.note})"),),
            )
        if tame:
            return tame_verdict
        if tame_verdict.outcome is Outcome.EXISTS:
            return Verdict(Outcome.EXISTS, False, tame_verdict.trace)
        entries = list(tame_verdict.trace)
        entries.append(
            _entry(
                "dim4-nontame-R3",
                "Rem 5.6",
                "none",
                "the tame criterion fails, but it does not obstruct non-tame fold maps",
            )
        )
        return Verdict(Outcome.UNKNOWN, False, tuple(entries))

    if n % 2 == 1:
        # codimension n - 3 is even, so tame and non-tame verdicts coincide
        wtop = m.w.component(n - 1)
        entries: List[TraceEntry] = []
        if wtop.is_zero():
            entries.append(_entry("odd-dim-R3", "Rem 5.10", "none", f"w_{n - 1} = 0"))
            outcome = Outcome.EXISTS
        else:
            entries.append(
                _entry("odd-dim-R3", "Rem 5.10", f"w_{n - 1}", f"w_{n - 1} = {wtop} != 0")
            )
            outcome = Outcome.NOT_EXISTS
        if tame:
            entries.append(
                _entry(
                    "tame-fold-identification",
                    "Sec 2",
                    "none",
                    f"dim M - 3 = {n - 3} is even: every fold map is tame",
                )
            )
        return Verdict(outcome, tame, tuple(entries))

    if n == 6:
        if m.orientable:
            entry = _entry(
                "dim6-R3",
                "Thm 5.8",
                "none",
                "orientable 6-manifold: a tame fold map always exists",
            )
            return Verdict(Outcome.EXISTS, tame, (entry,))
        w4 = m.w.component(4)
        if w4.is_zero():
            entry = _entry(
                "dim6-R3",
                "Thm 5.8",
                "none",
                "W_5 = 0 (W_5 is the twisted Bockstein of w_4, and w_4 = 0)",
            )
            return Verdict(Outcome.EXISTS, tame, (entry,))
        entry = _entry(
            "dim6-R3",
            "Thm 5.8",
            "none",
            f"W_5 undetermined (w_4 = {w4} != 0 gives no information); the theorem is sufficiency-only",
        )
        return Verdict(Outcome.UNKNOWN, tame, (entry,))

    # n even, n >= 8
    if m.orientable:
        if not tame:
            entry = _entry(
                "even-dim-R3",
                "Rem 5.10",
                "none",
                f"orientable even-dimensional manifold, dim = {n} >= 8",
            )
            return Verdict(Outcome.EXISTS, False, (entry,))
        entry = _entry(
            "even-dim-R3",
            "Rem 5.10",
            "none",
            "the even-dimensional statement concerns fold maps; tameness is not addressed",
        )
        return Verdict(Outcome.UNKNOWN, True, (entry,))
    entry = _entry(
        "even-dim-R3",
        "Rem 5.10",
        "none",
        f"no criterion for non-orientable manifolds of even dimension {n} >= 8",
    )
    return Verdict(Outcome.UNKNOWN, tame, (entry,))


# ---------------------------------------------------------------------------
# target R^4, dim M even >= 6


def decide_highdim_to_R4(m: Manifold, tame: bool = False) -> Verdict:
    """Fold maps of an even-dimensional manifold (dim >= 6) into R^4."""
    n = m.dim
    if n < 6 or n % 2 != 0:
        raise ValueError("decide_highdim_to_R4 expects an even dimension >= 6")
    # codimension n - 4 is even throughout, so tame and fold verdicts coincide
    if n == 6:
        entry = _entry("dim6-R4", "Rem 4.7", "none", "dimension 6 excluded")
        return Verdict(Outcome.UNKNOWN, tame, (entry,))
    if n == 8:
        entry = _entry("dim8-R4", "Rem 4.4", "none", "dimension 8 excluded")
        return Verdict(Outcome.UNKNOWN, tame, (entry,))
    wlow = m.w.component(n - 2)
    if n % 4 == 0:
        if not m.orientable:
            entry = _entry(
                "4k-R4", "Thm 4.3", "none", "the 4k-dimensional criterion requires orientability"
            )
            return Verdict(Outcome.UNKNOWN, tame, (entry,))
        sigma = m.signature
        if not wlow.is_zero():
            entry = _entry("4k-R4", "Thm 4.3", f"w_{n - 2}", f"w_{n - 2} = {wlow} != 0")
            return Verdict(Outcome.NOT_EXISTS, tame, (entry,))
        if sigma % 8 != 0:
            entry = _entry(
                "4k-R4", "Thm 4.3", "sigma", f"w_{n - 2} = 0; sigma = {sigma} not divisible by 8"
            )
            return Verdict(Outcome.NOT_EXISTS, tame, (entry,))
        entry = _entry(
            "4k-R4", "Thm 4.3", "none", f"w_{n - 2} = 0; sigma = {sigma} divisible by 8"
        )
        return Verdict(Outcome.EXISTS, tame, (entry,))
    # n = 4k + 2, k > 1 here since n >= 10
    if wlow.is_zero():
        entry = _entry("4k+2-R4", "Thm 4.6", "none", f"w_{n - 2} = 0")
        return Verdict(Outcome.EXISTS, tame, (entry,))
    entry = _entry("4k+2-R4", "Thm 4.6", f"w_{n - 2}", f"w_{n - 2} = {wlow} != 0")
    return Verdict(Outcome.NOT_EXISTS, tame, (entry,))


# ---------------------------------------------------------------------------
# dispatcher and sufficiency chain


def _route(m: Manifold, p: int, tame: bool) -> Verdict:
    n = m.dim
    if p <= 2:
        return decide_low_codim(m, p, tame)
    if p == n:
        return decide_equidim(m, TargetSpec.euclidean(p), tame)
    if p == 3 and n >= 4:
        return decide_to_R3(m, tame)
    if p == 4 and n >= 6 and n % 2 == 0:
        return decide_highdim_to_R4(m, tame)
    entry = _entry(
        "no-rule", "none", "none", f"no criterion covers maps of a {n}-manifold into R^{p}"
    )
    return Verdict(Outcome.UNKNOWN, tame, (entry,))


def _sufficiency_chain(m: Manifold, p: int, tame: bool, verdict: Verdict) -> Verdict:
    entries = list(verdict.trace)
    if m.stably_parallelizable:
        if tame:
            entries.append(
                _entry(
                    "stably-parallelizable",
                    "Cor 2.4",
                    "none",
                    "M is stably parallelizable: stable span = dim M >= p - 1",
                )
            )
        else:
            entries.append(
                _entry(
                    "stably-parallelizable",
                    "Eliashberg",
                    "none",
                    "M is stably parallelizable: every map to R^p is homotopic to a fold map",
                )
            )
        return Verdict(Outcome.EXISTS, tame, tuple(entries))
    bounds = stable_span_bounds(m)
    if bounds.lower >= p - 1:
        entries.append(
            _entry(
                "span-lower",
                "Cor 2.4",
                "none",
                f"stable span >= {bounds.lower} >= p - 1 = {p - 1}: a tame fold map exists",
            )
        )
        return Verdict(Outcome.EXISTS, tame, tuple(entries))
    if bounds.upper < p - 1:
        if tame:
            entries.append(
                _entry(
                    "span-upper",
                    "Cor 2.4",
                    "span^0",
                    f"stable span <= {bounds.upper} < p - 1 = {p - 1}",
                )
            )
            return Verdict(Outcome.NOT_EXISTS, True, tuple(entries))
        if (m.dim - p) % 2 == 0:
            entries.append(
                _entry(
                    "span-upper",
                    "Cor 2.4",
                    "span^0",
                    f"stable span <= {bounds.upper} < p - 1 = {p - 1}",
                )
            )
            entries.append(
                _entry(
                    "tame-fold-identification",
                    "Sec 2",
                    "none",
                    f"dim M - p = {m.dim - p} is even: every fold map is tame",
                )
            )
            return Verdict(Outcome.NOT_EXISTS, False, tuple(entries))
    return verdict


def decide_fold(m: Manifold, target: TargetSpec, tame: bool = False) -> Verdict:
    """Decide existence of a (tame) fold map of M into the given target.

    Sphere targets are treated as Euclidean ones of the same dimension
    (the tangent bundle of S^p is stably trivial).  Raises ValueError
    for disconnected manifolds and for targets of dimension exceeding
    dim M.
    """
    if not m.connected:
        raise ValueError(f"fold-map decisions require a connected manifold; {m.name} is not connected")
    p = target.dim
    if target.kind == "pullback":
        if p != m.dim:
            raise ValueError(
                f"pullback target has dimension {p}, expected dim M = {m.dim}"
            )
        return decide_equidim(m, target, tame)
    if p > m.dim:
        raise ValueError(f"target dimension {p} exceeds dim M = {m.dim}")
    verdict = _route(m, p, tame)
    if verdict.outcome is not Outcome.UNKNOWN:
        return verdict
    return _sufficiency_chain(m, p, tame, verdict)


# ---------------------------------------------------------------------------
# stable-span bounds


_SPAN_CACHE: "weakref.WeakKeyDictionary[Manifold, SpanBounds]" = weakref.WeakKeyDictionary()


def stable_span_bounds(m: Manifold) -> SpanBounds:
    """Bounds on span0(M) from the tame-fold scan and the 3-frame theorems.

    Scans p = 2..dim M: a tame-Exists verdict at p forces span0 >= p - 1
    and a tame-NotExists verdict forces span0 <= p - 2 (Cor 2.4).  Stable
    parallelizability pins the lower bound at dim M, and the Atiyah--Dupont
    / Koschorke 3-frame criteria (Thm 4.2, Thm 4.5; they require chi = 0)
    decide span0 >= 3 or <= 2 exactly, using span = span0 for
    even-dimensional manifolds with chi = 0 (Thm 4.1).
    """
    if not m.connected:
        raise ValueError(f"span bounds require a connected manifold; {m.name} is not connected")
    cached = _SPAN_CACHE.get(m)
    if cached is not None:
        return cached
    n = m.dim
    lower, upper = 0, n
    entries: List[TraceEntry] = []
    if m.stably_parallelizable:
        lower = n
        entries.append(
            _entry(
                "stably-parallelizable",
                "Rem 2.5",
                "none",
                f"TM + eps is trivial: stable span = dim M = {n}",
            )
        )
    for p in range(2, n + 1):
        core = _route(m, p, True)
        if core.outcome is Outcome.EXISTS and p - 1 > lower:
            lower = p - 1
            entries.append(
                _entry(
                    f"scan-R^{p}",
                    "Cor 2.4",
                    "none",
                    f"tame fold into R^{p} exists [{core.trace[0].citation}] => span^0 >= {p - 1}",
                )
            )
        elif core.outcome is Outcome.NOT_EXISTS and p - 2 < upper:
            upper = p - 2
            entries.append(
                _entry(
                    f"scan-R^{p}",
                    "Cor 2.4",
                    "none",
                    f"no tame fold into R^{p} [{core.trace[0].citation}] => span^0 <= {p - 2}",
                )
            )
    if n % 2 == 0 and m.euler == 0:
        frame = None
        if n % 4 == 0 and n >= 8 and m.orientable:
            ok = m.w.component(n - 2).is_zero() and m.signature % 8 == 0
            frame = ("Thm 4.2", ok)
        elif n % 4 == 2 and ((m.orientable and n >= 6) or (not m.orientable and n >= 10)):
            ok = m.w.component(n - 2).is_zero()
            frame = ("Thm 4.5", ok)
        if frame is not None:
            citation, ok = frame
            if ok and lower < 3:
                lower = 3
                entries.append(
                    _entry("3-frame", citation, "none", "chi = 0 and the 3-frame criterion holds => span >= 3")
                )
            elif not ok and upper > 2:
                upper = 2
                entries.append(
                    _entry("3-frame", citation, "none", "chi = 0 and the 3-frame criterion fails => span <= 2")
                )
                entries.append(
                    _entry(
                        "span-stabilization",
                        "Thm 4.1",
                        "none",
                        "chi = 0 and dim even: span = span^0, so span^0 <= 2",
                    )
                )
    bounds = SpanBounds(lower, upper, tuple(entries))
    _SPAN_CACHE[m] = bounds
    return bounds


# ---------------------------------------------------------------------------
# Thom polynomials


@dataclass(frozen=True)
class ThomEntry:
    name: str
    degree: int
    value: str
    vanishes: Optional[bool]


@dataclass(frozen=True)
class ThomTable:
    dim: int
    entries: Tuple[ThomEntry, ...]


def _class_entry(name: str, degree: int, cls: ClassZ2) -> ThomEntry:
    return ThomEntry(name, degree, str(cls), cls.is_zero())


def _beta_w3_status(w_total: TotalClass) -> TriState:
    w1 = w_total.component(1)
    w3 = w_total.component(3)
    if w3.is_zero():
        return TriState.zero("w_3 = 0")
    if not (w1 * w3).is_zero():
        return TriState.nonzero("mod-2 reduction w_1 w_3 != 0")
    return TriState.unknown("w_3 != 0 but w_1 w_3 = 0")


def _integral_entry(p1: P1Data, beta: Optional[TriState]) -> ThomEntry:
    neg = p1_negate(p1)
    if beta is None or beta.is_zero:
        value = str(neg)
        vanishes: Optional[bool]
        if neg.is_known_zero:
            vanishes = True
        elif neg.is_known_nonzero:
            vanishes = False
        else:
            vanishes = None
        return ThomEntry("Sigma^{2,0} integral", 4, value, vanishes)
    if beta.is_nonzero and neg.is_known_zero:
        return ThomEntry("Sigma^{2,0} integral", 4, f"nonzero class ({beta.note})", False)
    return ThomEntry("Sigma^{2,0} integral", 4, "unknown", None)


def thom_polynomials(m: Manifold, difference: Optional[BundleDescriptor] = None) -> ThomTable:
    """Thom polynomials of the fold, cusp, A3, A4 and Sigma^{2,0} strata.

    Entries are evaluated for the virtual difference TM - xi (xi defaults
    to the trivial bundle, i.e. maps into Euclidean space).  Each mod-2
    entry is computed both from the dual classes and from the simplified
    Stiefel--Whitney form, and the two are asserted equal:

        fold:            wbar_1            = w_1
        cusp (A2):       wbar_1^2 + wbar_2 = w_2
        A3:              wbar_1^3 + wbar_1 wbar_2 = w_1 w_2
        A4:              wbar_1^4 + wbar_1 wbar_3 = w_1 w_3
        Sigma^{2,0} (2): wbar_2^2 + wbar_1 wbar_3 = w_2^2 + w_1 w_3

    The integral Sigma^{2,0} entry is -p_1 in dimension 4; in dimensions
    5-7 the torsion beta(w_3) term enters and the entry is reported as a
    tri-state (its mod-2 reduction is w_1 w_3).
    """
    n = m.dim
    if n < 4 or n > 7:
        raise ValueError(f"the Thom polynomial table supports dimensions 4 through 7, got {n}")
    if difference is None:
        w_total, p1 = m.w, m.p1
    else:
        w_total, p1 = virtual_difference(m, difference)
    wbar = invert_total(w_total)
    w1, w2, w3 = (w_total.component(d) for d in (1, 2, 3))
    b1, b2, b3 = (wbar.component(d) for d in (1, 2, 3))

    pairs = [
        ("fold", 1, b1, w1),
        ("cusp", 2, b1 * b1 + b2, w2),
        ("A3", 3, b1 * b1 * b1 + b1 * b2, w1 * w2),
        ("A4", 4, b1 * b1 * b1 * b1 + b1 * b3, w1 * w3),
        ("Sigma^{2,0} mod 2", 4, b2 * b2 + b1 * b3, w2 * w2 + w1 * w3),
    ]
    entries = []
    for name, degree, dual_form, w_form in pairs:
        if dual_form != w_form:
            raise InvariantViolation(
                "thom-identity", f"{name}: dual-class form {dual_form} != simplified form {w_form}"
            )
        entries.append(_class_entry(name, degree, w_form))
    beta = None if n == 4 else _beta_w3_status(w_total)
    entries.append(_integral_entry(p1, beta))
    return ThomTable(n, tuple(entries))
