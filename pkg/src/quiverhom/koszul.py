"""Koszul-style cones, complexity estimation, and reduction towers.

A cone step pushes the inclusion of the d-th syzygy into the
degree-(d-1) projective term out along a map eta: syzygy^d(X) -> X,
yielding a short exact sequence 0 -> X -> C -> syzygy^{d-1}(X) -> 0.
The cone of an isomorphism is projective, which is the operational base
case the gap checker consumes.
"""

from __future__ import annotations

from dataclasses import dataclass

from .homology import Resolution, detect_period, minimal_resolution
from .modules import (
    ModuleMap,
    QuiverModule,
    cokernel,
    direct_sum,
    is_projective,
)


@dataclass
class KoszulStep:
    """One cone step: the defining map, the cone, and its exact sequence."""

    source: QuiverModule
    degree: int
    eta: ModuleMap
    cone: QuiverModule
    inclusion: ModuleMap  # X -> C
    projection: ModuleMap  # C -> syzygy^{d-1}(X)

    def check_exact(self) -> bool:
        """Vertex-wise exactness of 0 -> X -> C -> syzygy^{d-1}(X) -> 0."""
        x = self.source
        c = self.cone
        q = self.projection.target
        if c.total_dim != x.total_dim + q.total_dim:
            return False
        if not self.inclusion.is_injective():
            return False
        if not self.projection.is_surjective():
            return False
        return self.projection.compose(self.inclusion).is_zero


def koszul_object(resolution: Resolution, eta: ModuleMap, degree: int) -> KoszulStep:
    """Cone of eta: syzygy^d(X) -> X, built as a pushout against the resolution.

    eta's source must be the degree-d syzygy object stored in X's
    resolution (the pushout leg is that syzygy's inclusion into the
    degree d-1 projective term).
    """
    if degree < 1:
        raise ValueError(f"cone degree must be >= 1, got {degree}")
    if degree > resolution.max_degree + 1:
        raise ValueError(f"resolution only reaches degree {resolution.max_degree}")
    x = resolution.module
    syz = resolution.syzygy(degree)
    if eta.source is not syz and not eta.source.structurally_equal(syz):
        raise ValueError("eta's source is not the stored degree-%d syzygy" % degree)
    if eta.target is not x and not eta.target.structurally_equal(x):
        raise ValueError("eta must land in the resolution's module")
    incl = resolution.syzygy_inclusion(degree)  # syz -> P_{d-1}
    pterm = resolution.term(degree - 1).module
    total, (inc_p, inc_x), (proj_p, _) = _sum2(pterm, x)
    graph = inc_p.compose(incl) + inc_x.compose(eta.scale(-1))
    cone, quot = cokernel(graph)
    cone.name = f"cone(d={degree}, {x.describe()})"
    inclusion = quot.compose(inc_x)
    # The projection is induced by the cover surjection on the projective leg.
    eps = resolution.cover_surjection(degree - 1)  # P_{d-1} ->> syzygy^{d-1}
    psi = eps.compose(proj_p)
    fld = x.field
    blocks = []
    for v in range(1, x.algebra.quiver.vertex_count + 1):
        sol = fld.solve_matrix(quot.block(v).T, psi.block(v).T)
        if sol is None:
            raise AssertionError("cone projection is not well defined")
        blocks.append(sol.T)
    projection = ModuleMap(cone, resolution.syzygy(degree - 1), blocks)
    step = KoszulStep(
        source=x, degree=degree, eta=eta, cone=cone, inclusion=inclusion, projection=projection
    )
    if not step.check_exact():
        raise AssertionError("cone short exact sequence failed exactness")
    return step


def _sum2(a: QuiverModule, b: QuiverModule):
    total, incls, projs = direct_sum([a, b])
    return total, (incls[0], incls[1]), (projs[0], projs[1])


# -- complexity -------------------------------------------------------------


@dataclass
class ComplexityEstimate:
    """Growth class of the resolution term sizes: 0, 1, or a fitted degree."""

    value: int
    exact: bool
    window: int
    term_sizes: tuple[int, ...]


def minimum_window(algebra) -> int:
    """Degrees needed before the growth verdict is trusted (one full syzygy cycle)."""
    if algebra.is_selfinjective_nakayama:
        return 2 * algebra.t * (algebra.n + 1)
    return 6


def complexity_estimate(m: QuiverModule, max_degree: int) -> ComplexityEstimate:
    """Betti-growth degree of M's minimal resolution over degrees 0..max_degree.

    Exact over circular Nakayama algebras (0 for the projectives, 1 for
    everything else); elsewhere the boundedness/growth verdict is a
    windowed heuristic and is flagged as such.
    """
    window = minimum_window(m.algebra)
    if max_degree < window:
        raise ValueError(f"degree bound {max_degree} below minimum window {window}")
    res = minimal_resolution(m, max_degree)
    sizes = tuple(res.term_dim(d) for d in range(max_degree + 1))
    if any(s == 0 for s in sizes):
        return ComplexityEstimate(value=0, exact=True, window=max_degree, term_sizes=sizes)
    if m.algebra.is_selfinjective_nakayama:
        # Non-projective modules over this family have bounded, eventually
        # periodic Betti sizes: complexity exactly 1.
        return ComplexityEstimate(value=1, exact=True, window=max_degree, term_sizes=sizes)
    half = len(sizes) // 2
    if max(sizes[half:]) <= max(sizes[:half]):
        return ComplexityEstimate(value=1, exact=False, window=max_degree, term_sizes=sizes)
    degree = _fit_growth_degree(sizes)
    return ComplexityEstimate(value=degree + 1, exact=False, window=max_degree, term_sizes=sizes)


def _fit_growth_degree(sizes: tuple[int, ...]) -> int:
    import math

    tail = [(d, s) for d, s in enumerate(sizes) if d >= 2 and s > 0]
    if len(tail) < 2:
        return 1
    (d0, s0), (d1, s1) = tail[len(tail) // 2], tail[-1]
    if d1 == d0 or s1 <= s0:
        return 1
    slope = (math.log(s1) - math.log(s0)) / (math.log(d1) - math.log(d0))
    return max(1, round(slope))


# -- reduction towers --------------------------------------------------------


@dataclass
class ReductionTower:
    """A chain of cone steps certifying complexity descent down to zero."""

    base: QuiverModule
    steps: tuple[KoszulStep, ...]
    complexities: tuple[int, ...]

    def __post_init__(self):
        if len(self.complexities) != len(self.steps) + 1:
            raise ValueError("need one complexity value per stage")
        for a, b in zip(self.complexities, self.complexities[1:]):
            if b != a - 1:
                raise ValueError(f"stage complexities {self.complexities} do not descend by 1")
        if self.complexities[-1] != 0:
            raise ValueError("final stage must have complexity 0")

    @property
    def gap_length(self) -> int:
        """Sum of step degrees minus the step count, plus one."""
        return sum(s.degree for s in self.steps) - len(self.steps) + 1

    @property
    def final_cone(self) -> QuiverModule:
        return self.steps[-1].cone if self.steps else self.base


def build_periodicity_tower(m: QuiverModule, window: int) -> ReductionTower | None:
    """The one-step tower whose cone is the Koszul object of a periodicity isomorphism.

    Projective (complexity-0) modules need no steps and come back as the
    empty tower; None means no period was found within the window.
    """
    if m.is_zero or is_projective(m):
        return ReductionTower(base=m, steps=(), complexities=(0,))
    witness = detect_period(m, window)
    if witness is None:
        return None
    step = koszul_object(witness.resolution, witness.iso, witness.period)
    if not is_projective(step.cone):
        raise AssertionError("cone of a periodicity isomorphism must be projective")
    return ReductionTower(base=m, steps=(step,), complexities=(1, 0))
