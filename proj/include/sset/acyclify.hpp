// The inductive acyclification: replace X by an acyclic X~ together with a
// projection X~ -> X all of whose fibers are contractible.  Built by
// starting from the disjoint union of one standard simplex per
// non-degenerate simplex of X and gluing mapping cylinders of fiber
// inclusions, processing simplices from the top down.

#ifndef SSET_ACYCLIFY_HPP
#define SSET_ACYCLIFY_HPP

#include <string>
#include <vector>

#include "sset/constructions.hpp"
#include "sset/sset.hpp"
#include "sset/verify.hpp"

namespace sset {

struct AcyclifyStep {
    std::string simplex;          // the simplex being processed
    std::vector<int> fiber_counts;  // cells of the fiber, per dimension
    std::vector<int> total_counts;  // cells of the running total, per dimension
};

struct AcyclifyResult {
    FinSSet tilde;
    SSetMap proj;  // tilde -> X
    std::vector<AcyclifyStep> trace;
};

AcyclifyResult acyclify(const FinSSet& X);

struct AcyclifyCheck {
    bool acyclic = false;
    bool map_valid = false;
    FiberReport fibers;            // over every non-degenerate simplex
    std::vector<std::string> deep_failures;
    bool ok() const { return acyclic && map_valid && fibers.ok() && deep_failures.empty(); }
};

/// Re-verifies a result: the total object is acyclic, the projection is a
/// valid map, and every fiber over a non-degenerate simplex carries a
/// non-refuted contractibility certificate.  With deep = true also
/// spot-checks fibers over degenerate simplices (up to two degeneracy
/// levels) and the homology of base changes along classifying maps of
/// simplices of dimension <= 2.
AcyclifyCheck check_result(const FinSSet& X, const AcyclifyResult& r, bool deep = false);

}  // namespace sset

#endif
