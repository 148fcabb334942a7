#pragma once

#include "zccs/constructions.hpp"

namespace fixtures {

inline zccs::Gbf example_quadratic() {
    const zccs::Edge edges[] = {{0, 1, 1}, {1, 2, 1}, {2, 3, 1}, {3, 0, 1}, {0, 2, 1}};
    return zccs::quadratic_form(4, 2, edges);
}

/// m1 = 8, Q = z0z1 + z1z2 + z2z3 + z3z0 + z0z2, d = (1,1,1,1), d = 0,
/// deleted {0, 1}, beta1 = 2.
inline zccs::Lemma1Params example_base() {
    zccs::Lemma1Params p;
    p.m1 = 8;
    p.quadratic = example_quadratic();
    p.d_vec = {1, 1, 1, 1};
    p.d = 0;
    p.deleted = {0, 1};
    p.beta1 = 2;
    return p;
}

inline zccs::Theorem1Params example1() { return {example_base(), zccs::BlockParams{1, 2, {}}}; }

/// m1 = 5: Q is the empty form over one variable.
inline zccs::Lemma1Params smallest_base(int d0 = 1) {
    zccs::Lemma1Params p;
    p.m1 = 5;
    p.quadratic = zccs::Gbf::zero(1, 2);
    p.d_vec = {d0};
    return p;
}

}  // namespace fixtures
