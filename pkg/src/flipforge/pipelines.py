"""End-to-end builders for flip-coloured graphs.

Two families are covered. The two-colour family packs a symmetrised interval
pair into a cyclic (or doubled cyclic) group and is verified exhaustively.
The arbitrary-gaps family amplifies a small verified prefix graph through a
sum-free Cayley layer, a Cartesian product, and a strong product with a
coloured complete bipartite graph; at realistic sizes only the plan and the
intermediate product are materialised, with the final profile predicted by
exact integer arithmetic.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Sequence

from .analysis import FlipReport, check_br_range, new_bound, parity_factor, verify_flip
from .construct import (
    ColouredConnectingSet,
    MatchingColourPlan,
    bipartite_matching_graph,
    cartesian_product,
    cayley_build,
    pack_cayley,
    strong_product,
)
from .ecgraph import EdgeColouredGraph
from .group import GroupSpec, cyclic, format_elements
from .setalg import (
    GroupSubset,
    ResidueInterval,
    interval_elements,
    interval_sumset_check,
    inverses,
    is_inverse_closed,
    is_sum_free,
    sumset,
)

DEFAULT_MATERIALIZE_LIMIT = 200_000


class VerificationError(RuntimeError):
    """A built object failed its own post-construction audit."""


@dataclass(frozen=True)
class BrPlan:
    """Fully resolved parameters of the two-colour construction for degrees (b, r).

    Colour 1 is the blue class of size b, colour 2 the red class of size r.
    Intervals live in Z_n; the final sets live in the construction group,
    which doubles to Z_2 x Z_n when both degrees are odd.
    """

    b: int
    r: int
    n: int
    parity_factor: int
    parity_case: str
    red_base: ResidueInterval
    blue_base: ResidueInterval
    blue_double: ResidueInterval
    red_symmetric: GroupSubset
    blue_symmetric: GroupSubset
    blue_core: GroupSubset
    group: GroupSpec
    blue_set: GroupSubset
    red_set: GroupSubset

    def to_json_dict(self) -> dict:
        return {
            "b": self.b,
            "r": self.r,
            "n": self.n,
            "parity_factor": self.parity_factor,
            "parity_case": self.parity_case,
            "red_base": self.red_base.to_json_dict(),
            "blue_base": self.blue_base.to_json_dict(),
            "blue_double": self.blue_double.to_json_dict(),
            "red_symmetric": format_elements(self.red_symmetric.elements),
            "blue_symmetric": format_elements(self.blue_symmetric.elements),
            "blue_core": format_elements(self.blue_core.elements),
            "group": self.group.to_text(),
            "blue_set": format_elements(self.blue_set.elements),
            "red_set": format_elements(self.red_set.elements),
        }


def _embed_into_double(subset: GroupSubset, double: GroupSpec) -> GroupSubset:
    return GroupSubset.of(double, [(0, x[0]) for x in subset.elements])


def plan_br(b: int, r: int) -> BrPlan:
    """Resolve interval placement and parity handling for the (b, r) construction.

    The red base interval sits at the bottom of the open interval (n/8, n/4),
    the blue base at the top, and the doubled blue sub-interval at the top of
    the blue base, which keeps its minimum at least 3n/16. Every set-level
    invariant is re-checked here by direct enumeration.
    """
    check_br_range(b, r)
    blue_double_size = (b + 2) // 6
    blue_base_size = (b + 2) // 2 - 2 * blue_double_size
    red_base_size = r // 2
    n = 8 * (2 + red_base_size + blue_base_size)
    eighth, quarter = n // 8, n // 4

    red_base = ResidueInterval(n, eighth + 1, eighth + red_base_size)
    blue_base = ResidueInterval(n, quarter - blue_base_size, quarter - 1)
    blue_double = ResidueInterval(n, quarter - blue_double_size, quarter - 1)
    if red_base.hi >= blue_base.lo:
        raise VerificationError(
            f"interval placement collided for b={b} r={r}: red ends {red_base.hi}, blue starts {blue_base.lo}")
    if 16 * blue_double.lo < 3 * n:
        raise VerificationError(
            f"doubled interval start {blue_double.lo} below 3n/16 for b={b} r={r}")

    report = interval_sumset_check(n, red_base, blue_base, blue_double)
    if not (report.b1_hypothesis_met and report.all_asserted_hold):
        raise VerificationError(
            f"interval disjointness audit failed for b={b} r={r}: {report.to_json_dict()}")

    base_spec = cyclic(n)
    red_sym = report.a_set
    blue_base_set = interval_elements(blue_base)
    blue_sym = blue_base_set.union(inverses(blue_base_set))
    blue_core = report.b_set
    if len(blue_core) != b - b % 2:
        raise VerificationError(
            f"blue core has {len(blue_core)} elements, expected {b - b % 2}")
    if len(red_sym) != r - r % 2:
        raise VerificationError(
            f"red symmetric set has {len(red_sym)} elements, expected {r - r % 2}")

    half = base_spec.element(n // 2)
    if b % 2 == 0 and r % 2 == 0:
        case = "both-even"
        group = base_spec
        blue_set = blue_core
        red_set = red_sym
    elif b % 2 == 1 and r % 2 == 1:
        case = "both-odd"
        group = GroupSpec((2, n))
        blue_set = _embed_into_double(blue_core, group).union(
            GroupSubset.of(group, [(0, n // 2)]))
        red_set = _embed_into_double(red_sym, group).union(
            GroupSubset.of(group, [(1, 0)]))
    else:
        case = "one-odd"
        group = base_spec
        if b % 2 == 1:
            blue_set = blue_core.union(GroupSubset.of(base_spec, [half]))
            red_set = red_sym
        else:
            blue_set = blue_core
            red_set = red_sym.union(GroupSubset.of(base_spec, [half]))

    _audit_final_sets(b, r, blue_set, red_set)
    return BrPlan(
        b=b,
        r=r,
        n=n,
        parity_factor=parity_factor(b, r),
        parity_case=case,
        red_base=red_base,
        blue_base=blue_base,
        blue_double=blue_double,
        red_symmetric=red_sym,
        blue_symmetric=blue_sym,
        blue_core=blue_core,
        group=group,
        blue_set=blue_set,
        red_set=red_set,
    )


def _audit_final_sets(b: int, r: int, blue: GroupSubset, red: GroupSubset) -> None:
    if len(blue) != b:
        raise VerificationError(f"blue set has {len(blue)} elements, expected {b}")
    if len(red) != r:
        raise VerificationError(f"red set has {len(red)} elements, expected {r}")
    if blue.contains_identity() or red.contains_identity():
        raise VerificationError("connecting sets must not contain the identity")
    if not blue.is_disjoint(red):
        raise VerificationError("blue and red sets overlap")
    if not (is_inverse_closed(blue) and is_inverse_closed(red)):
        raise VerificationError("connecting sets must be inverse-closed")
    if not is_sum_free(red):
        raise VerificationError("red set is not sum-free")
    if not sumset(red, blue).is_disjoint(red):
        raise VerificationError("red + blue meets red")


def build_br(plan: BrPlan) -> tuple[EdgeColouredGraph, FlipReport]:
    """Build the packed Cayley graph for a plan and verify it exhaustively.

    Hard-verified: uniform profile with degrees (b, r), strict chain
    e_1 > e_2, e_1 >= b + 2*floor((b+2)/6)^2, order parity_factor * n.
    e_2 equals r for every b <= 14 (the doubled blue interval is then too
    short to throw red differences back into the neighbourhood); for larger b
    the excess e_2 - r is visible in the returned report, and the flip
    property still holds, so the equality is reported rather than enforced.
    """
    blue_only = ColouredConnectingSet.of(plan.group, {1: plan.blue_set}, colour_count=2)
    red_only = ColouredConnectingSet.of(plan.group, {2: plan.red_set}, colour_count=2)
    graph = pack_cayley(blue_only, red_only)

    expected_order = plan.parity_factor * plan.n
    if graph.vertex_count != expected_order:
        raise VerificationError(
            f"built order {graph.vertex_count}, expected {expected_order}")
    if expected_order != new_bound(plan.b, plan.r):
        raise VerificationError(
            f"order {expected_order} does not match the bound {new_bound(plan.b, plan.r)}")

    report = verify_flip(graph, expected=(plan.b, plan.r))
    if not report.passed:
        raise VerificationError(
            f"flip verification failed for b={plan.b} r={plan.r}: {report.violations[:5]}")
    chain = report.uniform_e_chain
    if chain is None:
        raise VerificationError(
            f"closed counts are not uniform across vertices for b={plan.b} r={plan.r}")
    floor_e1 = plan.b + 2 * ((plan.b + 2) // 6) ** 2
    if chain[0] < floor_e1:
        raise VerificationError(
            f"e_1 = {chain[0]} below guaranteed floor {floor_e1} for b={plan.b} r={plan.r}")
    if chain[1] < plan.r:
        # e_2 counts at least the r red edges at the vertex itself
        raise VerificationError(
            f"e_2 = {chain[1]} below r = {plan.r} for b={plan.b}")
    return graph, report


def _layer_sizes(k: int, q: int) -> list[int]:
    return [k - q - j for j in range(1, k - q)]  # sizes k-q-1 down to 1


def _layer_classes(k: int, q: int) -> ColouredConnectingSet:
    """Disjoint inverse-closed classes of sizes k-q-1, ..., 1 on colours q+1, ..., k-1.

    The group is Z_2^a x Z_m with every connecting element's last residue in
    the open middle third (m/3, 2m/3), which forces the union to be sum-free.
    Odd-sized classes consume one involution (eps, m/2) each, so a is the
    smallest power with 2^a involutions available and m grows until the
    middle third offers enough inverse pairs.
    """
    sizes = _layer_sizes(k, q)
    if not sizes:
        raise ValueError(f"no layer classes for k={k} q={q}")
    odd_count = sum(1 for s in sizes if s % 2)
    pairs_needed = sum(s // 2 for s in sizes)
    a = 0 if odd_count <= 1 else (odd_count - 1).bit_length()
    copies = 1 << a

    m = 4
    while True:
        lo = m // 3 + 1
        hi = (2 * m - 1) // 3
        mid_size = hi - lo + 1
        has_half = lo <= m // 2 <= hi
        pairs_per_copy = max(0, (mid_size - (1 if has_half else 0)) // 2)
        if copies >= odd_count and copies * pairs_per_copy >= pairs_needed:
            break
        m += 2

    factors = (2,) * a + (m,)
    spec = GroupSpec(factors)
    eps_list = list(GroupSpec((2,) * a).elements()) if a else [()]
    pair_pool = [
        (eps + (x,), eps + (m - x,))
        for eps in eps_list
        for x in range(lo, (m + 1) // 2)
    ]
    involution_pool = [eps + (m // 2,) for eps in eps_list]

    classes = {}
    pair_i = 0
    inv_i = 0
    for j, size in enumerate(sizes, start=1):
        members = []
        for _ in range(size // 2):
            members.extend(pair_pool[pair_i])
            pair_i += 1
        if size % 2:
            members.append(involution_pool[inv_i])
            inv_i += 1
        classes[q + j] = GroupSubset.of(spec, members)
    return ColouredConnectingSet.of(spec, classes, colour_count=k - 1)


def _verify_layer(graph: EdgeColouredGraph, k: int, q: int) -> None:
    sizes = _layer_sizes(k, q)
    expected_deg = [0] * (q) + sizes + [0] * (graph.colour_count - (k - 1))
    expected_deg = tuple(expected_deg[: graph.colour_count])
    for v in range(graph.vertex_count):
        profile = graph.vertex_profile(v)
        if profile.deg != expected_deg or profile.e_closed != expected_deg:
            raise VerificationError(
                f"layer profile mismatch at vertex {v}: deg={profile.deg} e={profile.e_closed}")


def build_sumfree_layer(k: int, q: int) -> EdgeColouredGraph:
    """Cayley graph whose colour q+j is (k-q-j)-regular with e_{q+j}[v] = k-q-j.

    Requires 1 < q < k/4. The sum-free check on the full connecting set and
    the per-vertex profile equalities are verified exhaustively.
    """
    _check_gaps_range(k, q)
    ccs = _layer_classes(k, q)
    if not is_sum_free(ccs.union_elements()):
        raise VerificationError(f"layer connecting set for k={k} q={q} is not sum-free")
    graph = cayley_build(ccs)
    _verify_layer(graph, k, q)
    return graph


def _check_gaps_range(k: int, q: int) -> None:
    if q <= 1:
        raise ValueError(f"q > 1 required, got q={q}")
    if 4 * q >= k:
        raise ValueError(f"q < k/4 required, got q={q} k={k}")


@dataclass(frozen=True)
class GapsPlan:
    """Resolved parameters for the arbitrary-gaps amplification.

    prefix_e and prefix_deg are the exact closed counts and degrees of the
    prefix graph on colours 1..q. Affine profiles are (constant, slope) pairs
    in the matching multiplicity t; *_at_t are their values at this plan's t.
    """

    q: int
    k: int
    prefix_e: tuple[int, ...]
    prefix_deg: tuple[int, ...]
    prefix_gap: int
    core_degree: int
    gap_slack: int
    t: int
    t_min: int
    part_size: int
    part_ratio: Fraction
    layer_sizes: tuple[int, ...]
    layer_group: GroupSpec
    deg_affine: tuple[tuple[int, int], ...]
    e_affine: tuple[tuple[int, int], ...]
    deg_at_t: tuple[int, ...]
    e_at_t: tuple[int, ...]
    deg_chain_ok: bool
    e_chain_ok: bool
    first_chain_violation: Optional[tuple[str, int]]
    prefix_order: Optional[int]
    order_estimate: int

    @property
    def matching_assignments(self) -> tuple[int, ...]:
        out = []
        for j in range(1, self.k - self.q + 1):
            out.extend([self.q + j] * (self.t + j - 1))
        return tuple(out)

    def to_json_dict(self) -> dict:
        return {
            "q": self.q,
            "k": self.k,
            "prefix_e": list(self.prefix_e),
            "prefix_deg": list(self.prefix_deg),
            "prefix_gap": self.prefix_gap,
            "core_degree": self.core_degree,
            "gap_slack": self.gap_slack,
            "t": self.t,
            "t_min": self.t_min,
            "part_size": self.part_size,
            "part_ratio": [self.part_ratio.numerator, self.part_ratio.denominator],
            "layer_sizes": list(self.layer_sizes),
            "layer_group": self.layer_group.to_text(),
            "deg_affine": [list(p) for p in self.deg_affine],
            "e_affine": [list(p) for p in self.e_affine],
            "deg_at_t": list(self.deg_at_t),
            "e_at_t": list(self.e_at_t),
            "deg_chain_ok": self.deg_chain_ok,
            "e_chain_ok": self.e_chain_ok,
            "first_chain_violation": (
                None if self.first_chain_violation is None
                else list(self.first_chain_violation)),
            "prefix_order": self.prefix_order,
            "order_estimate": self.order_estimate,
        }


def _full_closed_chain(k: int, q: int, prefix_e: Sequence[int]) -> list[int]:
    """Closed counts of the core product: prefix values, then k-i, then 0."""
    return list(prefix_e) + [k - i for i in range(q + 1, k)] + [0]


def _make_gaps_plan(
    q: int,
    k: int,
    prefix_e: Sequence[int],
    prefix_deg: Sequence[int],
    t: Optional[int],
    prefix_order: Optional[int],
    enforce: bool,
) -> GapsPlan:
    prefix_e = tuple(int(x) for x in prefix_e)
    prefix_deg = tuple(int(x) for x in prefix_deg)
    if len(prefix_e) != q or len(prefix_deg) != q:
        raise ValueError(f"prefix vectors must have length q={q}")
    if any(prefix_e[i] <= prefix_e[i + 1] for i in range(q - 1)):
        raise ValueError(f"prefix closed counts must decrease strictly, got {prefix_e}")
    if any(prefix_deg[i] >= prefix_deg[i + 1] for i in range(q - 1)):
        raise ValueError(f"prefix degrees must increase strictly, got {prefix_deg}")
    if prefix_deg[-1] > prefix_e[-1]:
        raise ValueError(
            f"prefix degree a_q={prefix_deg[-1]} exceeds closed count D_q={prefix_e[-1]}")
    if enforce:
        _check_gaps_range(k, q)
    elif k - q < 2:
        raise ValueError(f"need at least two amplified colours, got q={q} k={k}")

    prefix_gap = max(
        (prefix_e[j] - prefix_e[j + 1] for j in range(q - 1)), default=0)
    spread = k - q
    layer_pairs = spread * (spread - 1) // 2  # C(k-q, 2)
    gap_lhs = prefix_e[-1] * (k - 4 * q)
    gap_rhs = 1 + prefix_gap * q * (q - 1) + 5 * layer_pairs
    gap_slack = gap_lhs - gap_rhs
    if enforce and gap_slack <= 0:
        raise ValueError(
            f"gap condition D_q*(k-4q) > 1 + gap*q*(q-1) + 5*C(k-q,2) fails: "
            f"{gap_lhs} <= {gap_rhs} (slack {gap_slack})")

    chain = _full_closed_chain(k, q, prefix_e)
    core_degree = layer_pairs + sum(prefix_deg)
    chain_total = sum(chain)
    tail_gaps = [chain[i - 1] - chain[i] for i in range(q + 1, k)]
    min_tail_gap = min(tail_gaps) if tail_gaps else 1
    if min_tail_gap <= 0:
        raise ValueError(f"amplified closed counts must decrease, gaps {tail_gaps}")
    t_min = -(-(1 + core_degree + 2 * chain_total) // (spread * min_tail_gap))
    if t is None:
        t = t_min
    elif enforce and t < t_min:
        raise ValueError(f"t = {t} below the minimum {t_min} for these parameters")
    if t < 1:
        raise ValueError(f"t must be >= 1, got {t}")

    part_size = spread * t + layer_pairs
    part_ratio = Fraction(part_size + 1, spread * t)
    cross = 1 + core_degree + 2 * chain_total

    deg_affine = []
    e_affine = []
    for j in range(1, k + 1):
        if j <= q:
            deg_affine.append((prefix_deg[j - 1], 0))
            e_affine.append((chain[j - 1] * (layer_pairs + 1), chain[j - 1] * spread))
        else:
            base_deg = k - j if j < k else 0
            deg_affine.append((base_deg + (j - q - 1) * (1 + core_degree), 1 + core_degree))
            e_affine.append((
                chain[j - 1] * (layer_pairs + 1) + (j - q - 1) * cross,
                chain[j - 1] * spread + cross,
            ))
    deg_at_t = tuple(c0 + c1 * t for c0, c1 in deg_affine)
    e_at_t = tuple(c0 + c1 * t for c0, c1 in e_affine)

    deg_ok = all(deg_at_t[i] < deg_at_t[i + 1] for i in range(k - 1))
    e_ok = all(e_at_t[i] > e_at_t[i + 1] for i in range(k - 1))
    violation: Optional[tuple[str, int]] = None
    for i in range(k - 1):
        if deg_at_t[i] >= deg_at_t[i + 1]:
            violation = ("deg", i + 1)
            break
    if violation is None:
        for i in range(k - 1):
            if e_at_t[i] <= e_at_t[i + 1]:
                violation = ("e", i + 1)
                break
    if enforce and violation is not None:
        kind, colour = violation
        raise ValueError(
            f"predicted {kind} chain not strictly monotone between colours {colour} and {colour + 1}")

    layer = _layer_classes(k, q)
    estimate = 2 * part_size * layer.spec.order * (prefix_order if prefix_order else 1)
    return GapsPlan(
        q=q,
        k=k,
        prefix_e=prefix_e,
        prefix_deg=prefix_deg,
        prefix_gap=prefix_gap,
        core_degree=core_degree,
        gap_slack=gap_slack,
        t=t,
        t_min=t_min,
        part_size=part_size,
        part_ratio=part_ratio,
        layer_sizes=tuple(_layer_sizes(k, q)),
        layer_group=layer.spec,
        deg_affine=tuple(deg_affine),
        e_affine=tuple(e_affine),
        deg_at_t=deg_at_t,
        e_at_t=e_at_t,
        deg_chain_ok=deg_ok,
        e_chain_ok=e_ok,
        first_chain_violation=violation,
        prefix_order=prefix_order,
        order_estimate=estimate,
    )


def plan_gaps(
    q: int,
    k: int,
    prefix_e: Sequence[int],
    prefix_deg: Sequence[int],
    t_override: Optional[int] = None,
    prefix_order: Optional[int] = None,
) -> GapsPlan:
    """Resolve the amplification parameters and prove the predicted chains monotone.

    The three chain regions (colours up to q, the q boundary, and the
    amplified tail) are all checked with exact integers at the chosen t.
    Raises when the gap condition fails (reporting its slack), when
    t_override sits below the feasible minimum, or when a predicted chain
    is not strictly monotone.
    """
    return _make_gaps_plan(q, k, prefix_e, prefix_deg, t_override, prefix_order, enforce=True)


@dataclass(frozen=True)
class GapsResult:
    """Outcome of the amplification build: materialised graph or prediction."""

    plan: GapsPlan
    materialized: bool
    g_order: int
    graph: Optional[EdgeColouredGraph]
    core: EdgeColouredGraph
    flip_report: Optional[FlipReport]


def _verify_prefix_graph(prefix: EdgeColouredGraph, plan: GapsPlan) -> None:
    if prefix.colour_count < plan.q:
        raise ValueError(
            f"prefix graph has {prefix.colour_count} colours, need at least q={plan.q}")
    if plan.prefix_order is not None and prefix.vertex_count != plan.prefix_order:
        raise ValueError(
            f"prefix graph has {prefix.vertex_count} vertices, plan recorded {plan.prefix_order}")
    expected_deg = tuple(plan.prefix_deg) + (0,) * (prefix.colour_count - plan.q)
    expected_e = tuple(plan.prefix_e) + (0,) * (prefix.colour_count - plan.q)
    for v in range(prefix.vertex_count):
        profile = prefix.vertex_profile(v)
        if profile.deg != expected_deg or profile.e_closed != expected_e:
            raise ValueError(
                f"prefix graph profile mismatch at vertex {v}: "
                f"deg={profile.deg} e={profile.e_closed}, "
                f"expected deg={expected_deg} e={expected_e}")


def build_gaps(
    plan: GapsPlan,
    prefix: EdgeColouredGraph,
    materialize_limit: int = DEFAULT_MATERIALIZE_LIMIT,
) -> GapsResult:
    """Amplify the verified prefix graph according to plan.

    Always verifies the prefix against the plan profile and builds the
    Cartesian core (prefix times layer), auditing the core's profile at every
    vertex. The full strong product is materialised and profile-audited only
    when its order fits within materialize_limit.
    """
    q, k = plan.q, plan.k
    _verify_prefix_graph(prefix, plan)

    ccs = _layer_classes(k, q)
    if not is_sum_free(ccs.union_elements()):
        raise VerificationError(f"layer connecting set for k={k} q={q} is not sum-free")
    layer = cayley_build(ccs)
    _verify_layer(layer, k, q)

    core = cartesian_product(prefix.with_colour_count(k), layer.with_colour_count(k))
    core_chain = tuple(_full_closed_chain(k, q, plan.prefix_e))
    core_deg = tuple(plan.prefix_deg) + tuple(k - j for j in range(q + 1, k)) + (0,)
    for v in range(core.vertex_count):
        profile = core.vertex_profile(v)
        if profile.deg != core_deg or profile.e_closed != core_chain:
            raise VerificationError(
                f"core profile mismatch at vertex {v}: deg={profile.deg} e={profile.e_closed}")

    amplifier = bipartite_matching_graph(MatchingColourPlan(
        part_size=plan.part_size,
        colour_count=k,
        assignments=plan.matching_assignments,
    ))
    g_order = amplifier.vertex_count * core.vertex_count
    if g_order > materialize_limit:
        return GapsResult(
            plan=plan,
            materialized=False,
            g_order=g_order,
            graph=None,
            core=core,
            flip_report=None,
        )

    graph = strong_product(amplifier, core)
    for v in range(graph.vertex_count):
        profile = graph.vertex_profile(v)
        if profile.deg != plan.deg_at_t or profile.e_closed != plan.e_at_t:
            raise VerificationError(
                f"amplified profile mismatch at vertex {v}: "
                f"deg={profile.deg} e={profile.e_closed}, "
                f"predicted deg={plan.deg_at_t} e={plan.e_at_t}")
    report = verify_flip(graph)
    return GapsResult(
        plan=plan,
        materialized=True,
        g_order=g_order,
        graph=graph,
        core=core,
        flip_report=report,
    )


def colour_merge(g: EdgeColouredGraph, partition: Sequence[Sequence[int]]) -> EdgeColouredGraph:
    """Collapse colour classes; part i (1-based) becomes the new colour i.

    The partition must cover 1..k with pairwise disjoint non-empty parts.
    Degree and closed-count additivity over each part is asserted at every
    vertex before the merged graph is returned.
    """
    parts = [tuple(sorted(set(p))) for p in partition]
    if any(not p for p in parts):
        raise ValueError("partition parts must be non-empty")
    seen: set[int] = set()
    for p in parts:
        for c in p:
            if c in seen:
                raise ValueError(f"colour {c} appears in two parts")
            seen.add(c)
    if seen != set(range(1, g.colour_count + 1)):
        raise ValueError(
            f"partition must cover colours 1..{g.colour_count} exactly, got {sorted(seen)}")

    colour_map = {c: i + 1 for i, p in enumerate(parts) for c in p}
    merged = EdgeColouredGraph(
        g.vertex_count, len(parts),
        [(u, v, colour_map[c]) for u, v, c in g.edges])

    for v in range(g.vertex_count):
        old = g.vertex_profile(v)
        new = merged.vertex_profile(v)
        for i, p in enumerate(parts):
            if new.deg[i] != sum(old.deg[c - 1] for c in p):
                raise VerificationError(f"degree additivity failed at vertex {v}, part {i + 1}")
            if new.e_closed[i] != sum(old.e_closed[c - 1] for c in p):
                raise VerificationError(f"closed-count additivity failed at vertex {v}, part {i + 1}")
    return merged


def unit_gap_source_feasible(b: int, q: int) -> bool:
    """Advisory predicate for prefix graphs with unit degree gaps.

    True when b >= 101 and floor((b^2 - 10*b^(3/2)) / 4) >= q - 1. The
    fractional power never touches floats: the inequality is equivalent to
    (b^2 - 4(q-1))^2 >= 100 b^3 whenever the left base is non-negative.
    """
    if b < 101:
        return False
    margin = b * b - 4 * (q - 1)
    return margin >= 0 and margin * margin >= 100 * b**3
