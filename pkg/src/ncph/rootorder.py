"""The total order on positive roots induced by the chosen rotation.

Starting from the bipartitely ordered simple roots a_1..a_n with reflections
r_1..r_n, the sequence rho_i = r_1 ... r_(i-1) a_i (indices cyclic mod n)
enumerates each positive root exactly once for i = 1..nh/2, and the last n
entries multiply back to the rotation c.  Everything is validated on
construction; a failure here means the upstream bipartite data is broken.
"""

from __future__ import annotations

from dataclasses import dataclass

from .coxeter import CoxeterSystem, reflection_matrix
from .linalg import Matrix, Vector, dot, vec_key, vec_neg


class RootOrderError(ValueError):
    """The computed sequence is not a valid enumeration of positive roots."""


@dataclass
class OrderedRoots:
    """Positive roots rho_1..rho_(nh/2) in construction order (0-based lists)."""

    system: CoxeterSystem
    roots: list[Vector]
    reflection_index: list[int]   # group index of the reflection of roots[i]
    position_of: dict[tuple, int]  # vec_key(root) -> 0-based position

    @property
    def count(self) -> int:
        return len(self.roots)

    @property
    def tau(self) -> list[Vector]:
        """The last n roots, the seed of the generic direction."""
        return self.roots[-self.system.rank:]

    def tau_reflections(self) -> list[int]:
        return self.reflection_index[-self.system.rank:]


def ordered_roots(system: CoxeterSystem) -> OrderedRoots:
    n = system.rank
    total = n * system.h // 2
    prefix = system.identity
    roots: list[Vector] = []
    for i in range(total):
        alpha = system.simple_roots[i % n]
        roots.append(prefix.apply(alpha))
        prefix = prefix * system.simple_reflections[i % n]

    position_of: dict[tuple, int] = {}
    for i, rho in enumerate(roots):
        if dot(rho, system.interior_point).sign() <= 0:
            raise RootOrderError(f"root {i + 1} in the sequence is not positive")
        key = vec_key(rho)
        if key in position_of:
            raise RootOrderError(f"duplicate root at positions "
                                 f"{position_of[key] + 1} and {i + 1}")
        position_of[key] = i

    positive_system = {vec_key(root) for _, root in system.reflections}
    if set(position_of) != positive_system:
        raise RootOrderError("sequence does not enumerate the positive system")

    # sanity: continuing the recursion for another half period produces the
    # negative system.  The stronger index-by-index identity rho_(i+nh/2) =
    # -rho_i holds exactly when c^(h/2) = -I (e.g. false in type A3, where
    # the longest element is not central), so it is only checked then.
    second_half = []
    for i in range(total):
        alpha = system.simple_roots[(total + i) % n]
        second_half.append(prefix.apply(alpha))
        prefix = prefix * system.simple_reflections[(total + i) % n]
    negatives = {vec_key(vec_neg(rho)) for rho in roots}
    if {vec_key(rho) for rho in second_half} != negatives:
        raise RootOrderError("second half period is not the negative system")
    if system.h % 2 == 0:
        power = system.identity
        for _ in range(system.h // 2):
            power = power * system.coxeter_element
        if power == -system.identity:
            for i in range(total):
                if vec_key(second_half[i]) != vec_key(vec_neg(roots[i])):
                    raise RootOrderError(
                        "half period does not negate despite central -I")

    reflection_index = [system.reflection_of_root(rho) for rho in roots]

    tau = roots[-n:]
    if Matrix(system.field, tau).rank() != n:
        raise RootOrderError("the last n roots are linearly dependent")
    product = system.identity
    for rho in tau:  # r(tau_n) ... r(tau_1) applied right-to-left
        product = reflection_matrix(system.field, rho) * product
    if product != system.coxeter_element:
        raise RootOrderError("the last n reflections do not multiply to c")

    return OrderedRoots(system, roots, reflection_index, position_of)
