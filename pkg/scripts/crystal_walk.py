#!/usr/bin/env python3
"""Trace the reduce/extend story on the two-vertex bundle: Hom dimensions,
extension-space sizes at the generic and special points, the reduction to
the single point below, and the exact round trip."""

from quivex import (
    DimVector,
    ZetaParam,
    are_isomorphic,
    chi,
    d_of,
    epsilon_i,
    ext_space_i,
    extend_i,
    is_stable,
    recovery_classes,
    reduce_i,
)
from quivex.bundles import a2crystal_bundle


def main() -> None:
    bundle = a2crystal_bundle()
    q = bundle.dq.base
    zeta = ZetaParam.constant(q, 1)
    for name in ("generic", "special"):
        x = bundle.reps[name]
        print(f"{name}: dimV={x.dim_v.as_dict()} stable={is_stable(x, zeta).stable}")
        for i in q.vertices:
            print(
                f"  vertex {i}: eps={epsilon_i(x, i)} "
                f"ext_space={len(ext_space_i(x, i))}"
            )
        red = reduce_i(x, "2")
        print(f"  reduce at 2: r={red.r} lands at {red.reduced.dim_v.as_dict()}")
        gap = d_of(q, x.dim_v, x.dim_w) - d_of(q, red.reduced.dim_v, red.reduced.dim_w)
        chi_small = chi(
            q, DimVector.unit(q, "2"), DimVector.zero(q),
            red.reduced.dim_v, red.reduced.dim_w,
        )
        print(f"  dimension identity: {gap} == 2*{red.r}*({chi_small} - {red.r})")
        rebuilt = extend_i(red.reduced, "2", recovery_classes(x, "2", red))
        print(f"  extend back: isomorphic to the original: {are_isomorphic(rebuilt, x)}")


if __name__ == "__main__":
    main()
