#pragma once

#include <vector>

#include "urnlab/graph.hpp"
#include "urnlab/model.hpp"

namespace urnlab {

// Digraph of R-hat with exact structural zeros: R-hat_uv = (theta - R_uv) /
// (k*theta - 1) is zero iff theta = 1 and R_uv = 1, so the edge test never
// touches the floating-point product R*A.
inline std::vector<std::vector<int>> hat_digraph(const ModelSpec& spec) {
    const int k = spec.k();
    const bool theta_is_one = spec.theta <= 1.0;
    std::vector<std::vector<int>> g(k);
    for (int u = 0; u < k; ++u)
        for (int v = 0; v < k; ++v)
            if (!(theta_is_one && spec.R(u, v) >= 1.0 - kOneTol)) g[u].push_back(v);
    return g;
}

// R-hat is irreducible iff theta > 1, or theta = 1 and R is not a star.
// Both the closed-form criterion and strong connectivity of the R-hat
// digraph are evaluated; disagreement means a logic or numeric bug.
inline bool hat_irreducible(const ModelSpec& spec) {
    const bool closed_form = spec.theta > 1.0 || !detect_star(spec.R).has_value();
    const bool reachable = strongly_connected(hat_digraph(spec));
    if (closed_form != reachable)
        raise(Err::InternalInconsistency,
              "star criterion and strong connectivity of R-hat disagree (digest " +
                  spec.digest_hex() + ")");
    return closed_form;
}

}  // namespace urnlab
