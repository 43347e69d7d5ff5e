#pragma once

// Runnable property checks: each theorem-level statement about a vector set
// as a function that either confirms it on the given input, reports the
// first counterexample, or explains why the statement does not apply.

#include <string>
#include <vector>

#include "psskit/vecset.hpp"

namespace psskit {

struct CheckResult {
    enum class Status { Passed, Failed, Skipped };
    std::string name;
    Status status = Status::Skipped;
    std::string detail;

    bool passed() const noexcept { return status == Status::Passed; }
    bool failed() const noexcept { return status == Status::Failed; }
};

const char* to_string(CheckResult::Status s);

/// Exactly one of "strict separator exists" and "X contains a simplex".
CheckResult check_separator_dichotomy(const VecSet& x);
/// In the plane: linear independence <=> positive and negative independence.
CheckResult check_planar_independence(const VecSet& x);
/// is_pss <=> every -x in pos(X) <=> X is the union of its simplices.
CheckResult check_pss_characterizations(const VecSet& x);
/// Every simplex S: |S| = rank S + 1 <= d + 1, and for every z in S the rest
/// is independent with -z in its relative interior cone.
CheckResult check_simplex_structure(const VecSet& x);
/// For a PSS: positive independence, both factorization conditions and the
/// existence of a basis decomposition agree.
CheckResult check_independence_equivalence(const VecSet& x);
/// Cardinality bounds and their equality cases for full-dimensional positive bases.
CheckResult check_main_bounds(const VecSet& x);
/// Conic Caratheodory on the elements, their total and pairwise sums.
CheckResult check_caratheodory(const VecSet& x);
/// Lattice identities, injectivity of Y -> S(Y), bijectivity exactly for positive bases.
CheckResult check_lattice(const VecSet& x);
/// Every frame is full-dimensional (for spanning X) and equals the open halfspace of its witness.
CheckResult check_frames(const VecSet& x);
/// Sets meeting every simplex in all but one element are frames; for positive bases, conversely.
CheckResult check_frames_from_simplices(const VecSet& x);
/// Cone decomposition parts cover X, are separated and number at most 2^d.
CheckResult check_cone_decomposition(const VecSet& x);
/// Frame families with pairwise lower-dimensional overlap have at most 2^d members.
CheckResult check_frame_families(const VecSet& x);
/// Nonnegative dependency basis, Gale point classes and their simplex characterization.
CheckResult check_gale(const VecSet& x);
/// The three swap / span / skeleton conditions agree for simplices of X and points of their span.
CheckResult check_swap_conditions(const VecSet& x);
/// Frames of X restrict onto frames of an extracted positive basis.
CheckResult check_frame_restriction(const VecSet& x);
/// Reay partition of a positive basis and its dimension formula.
CheckResult check_reay(const VecSet& x);
/// Core points of a full-dimensional positive basis lie in rint pos(B) for a linear basis B in X.
CheckResult check_core_points(const VecSet& x);
/// Dependence predicates are unchanged by positive rescaling and invertible linear maps.
CheckResult check_invariance(const VecSet& x);

/// All of the above, in declaration order.
std::vector<CheckResult> run_property_suite(const VecSet& x);

}  // namespace psskit
