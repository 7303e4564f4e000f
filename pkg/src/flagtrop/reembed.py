"""Re-embedding at a non-prime tropical cone: adjoin the missing binomials of
the toric component as new coordinates, re-tropicalize, and harvest prime
cones projecting into the original cone."""

from __future__ import annotations

from dataclasses import dataclass

from .exactmath import IntMatrix
from .poly import GrevlexOrder, Ideal, Poly, groebner_basis, poly_str
from .polytopes import Polytope, normalization_polytope
from .tropfan import (
    MaximalCone,
    NoneMissing,
    TropicalFan,
    enumerate_tropical_fan,
    toric_component,
)


class NoPrimeLift(Exception):
    """Only non-prime cones of the re-embedded variety project into the cone."""


@dataclass
class ReembeddingStep:
    base_ideal: Ideal
    base_grading: IntMatrix
    cone: MaximalCone
    missing: tuple  # the adjoined binomials f_1..f_s
    ideal: Ideal  # I' = I + <y_i - f_i> in the extended ring
    grading: IntMatrix  # grading with one appended column per y_i
    new_names: tuple


def missing_binomials(cone: MaximalCone, ideal: Ideal):
    """Generators of the toric component I(W_C) missing from in_C(I)."""
    data = toric_component(cone, ideal)
    gb_in = groebner_basis(list(cone.initial_gens), GrevlexOrder(ideal.ring))
    missing = [g for g in data.ideal_gens if gb_in.normal_form(g)]
    if not missing:
        raise NoneMissing("the cone is prime; nothing to adjoin")
    return missing


def extend_ideal(ideal: Ideal, grading: IntMatrix, missing) -> "ReembeddingStep":
    """I' = I + <y_i - f_i> with the grading extended by deg(f_i) columns.

    The extended ring carries weighted variable degrees (deg y_i = total
    degree of f_i), keeping I' homogeneous for a positive grading; no extra
    homogenizing variable is needed.
    """
    ring = ideal.ring
    s = len(missing)
    names = tuple(f"y_{i+1}" for i in range(s))
    degrees = tuple(f.total_degree() for f in missing)
    big = ring.extend(names, degrees)

    def lift(p):
        return Poly(big, {e + (0,) * s: c for e, c in p.terms.items()}, normalize=False)

    gens = [lift(g) for g in ideal.gens]
    for i, f in enumerate(missing):
        gens.append(big.var(ring.nvars + i) - lift(f))
    cols = []
    for f in missing:
        e = next(iter(f.terms))
        cols.append(tuple(grading.mul_vec(e)))
    rows = [tuple(row) + tuple(col[r] for col in cols) for r, row in enumerate(grading.data)]
    return_grading = IntMatrix(rows)
    return ReembeddingStep(
        base_ideal=ideal,
        base_grading=grading,
        cone=None,
        missing=tuple(missing),
        ideal=Ideal(big, gens),
        grading=return_grading,
        new_names=names,
    )


def reembed_cone(cone: MaximalCone, ideal: Ideal, grading: IntMatrix) -> ReembeddingStep:
    step = extend_ideal(ideal, grading, missing_binomials(cone, ideal))
    step.cone = cone
    return step


def eliminate_new_variables(step: ReembeddingStep) -> Ideal:
    """Project I' back to the base ring (consistency check for the embedding)."""
    big = step.ideal.ring
    base = step.base_ideal.ring
    s = len(step.missing)
    from .poly import ElimOrder

    gb = groebner_basis(list(step.ideal.gens), ElimOrder(big, range(base.nvars, big.nvars)))
    out = []
    for g in gb.polys:
        if all(all(e[i] == 0 for i in range(base.nvars, big.nvars)) for e in g.terms):
            out.append(Poly(base, {e[: base.nvars]: c for e, c in g.terms.items()}, normalize=False))
    return Ideal(base, out)


def harvest_new_degenerations(
    step: ReembeddingStep,
    budget: int = 400000,
    depth: int = 1,
    progress=None,
):
    """Prime cones of trop(V(I')) that project into the relative interior of C.

    Projection membership is tested by initial ideals: the projected interior
    point must reproduce in_C(I) on the base ideal.  Returns (fan, harvest)
    where harvest entries carry the cone, its initial ideal and its polytope.
    """
    if depth < 1 or depth > 3:
        raise ValueError("recursion depth must be between 1 and 3")
    base_ring = step.base_ideal.ring
    n = base_ring.nvars
    fan = enumerate_tropical_fan(step.ideal, step.grading, budget=budget, progress=progress)
    target_key = tuple(poly_str(g) for g in step.cone.initial_gens)
    harvest = []
    nonprime_projecting = []
    from .poly import initial_data

    for cprime in fan.cones:
        point = cprime.witness[:n]
        init_gens, _ = initial_data(step.base_ideal, point)
        if tuple(poly_str(g) for g in init_gens) != target_key:
            continue
        if not cprime.prime:
            nonprime_projecting.append(cprime)
            continue
        polytope = normalization_polytope(cprime.W, step.grading)
        harvest.append({"cone": cprime, "polytope": polytope})
    if not harvest:
        if depth > 1 and nonprime_projecting:
            sub = reembed_cone(nonprime_projecting[0], step.ideal, step.grading)
            return harvest_new_degenerations(sub, budget=budget, depth=depth - 1, progress=progress)
        raise NoPrimeLift("no prime cone projects into the target cone")
    return fan, harvest
