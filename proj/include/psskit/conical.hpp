#pragma once

// Maximal negatively independent subsets M(X) ("cone frames"), the cardinality
// bounds for positive bases, conical decompositions of a PSS and families of
// frames with pairwise lower-dimensional overlap.

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "psskit/simplicial.hpp"

namespace psskit {

/// A maximal negatively independent subset with a witness z (z . x >= 1 on members).
struct ConeFrame {
    IndexSet members;
    QVec witness;

    Mask mask() const { return indices_to_mask(members); }
};

/// M(X), sorted lexicographically by members. Negatively independent subsets
/// are grown by index with a separator LP at every node (independence is
/// hereditary, so failing nodes are not extended); maximal ones are kept.
std::vector<ConeFrame> enumerate_mns(const VecSet& x);

struct MainBoundsReport {
    std::size_t dim = 0;
    std::size_t simplex_count = 0;  // n = |S(X)|
    std::size_t card = 0;           // |X|
    std::size_t mns_count = 0;      // |M(X)|
    bool is_cross = false;
    bool is_simplex = false;
    /// Empty iff every bound and both equality characterizations hold.
    std::vector<std::string> violations;

    bool ok() const noexcept { return violations.empty(); }
};

/// Checks 1 <= n <= d, d+1 <= |X| <= 2d, d+1 <= |M(X)| <= 2^d, and that the
/// upper values are attained exactly by crosses and the lower ones exactly by
/// simplices. Throws PreconditionError unless X is a full-dimensional positive basis.
MainBoundsReport verify_main_bounds(const VecSet& x);

/// Cross: every simplex has two elements and there are exactly rank(X) of them, covering X.
bool is_cross(const VecSet& x, const SimplexSet& simplices);

struct ConeCover {
    struct Part {
        IndexSet members;
        /// Frame of M(Y) (indices into X) whose positive span holds the members.
        IndexSet frame;
        /// z with z . x >= 1 on members.
        QVec witness;
    };
    /// Y, the positive basis extracted from X.
    IndexSet positive_basis;
    std::vector<Part> parts;
    /// assignment[i] is the part holding element i.
    std::vector<std::size_t> assignment;
};

/// Assigns every element of X to the first frame of M(Y) whose positive span
/// contains it, Y = extract_positive_basis(X). Throws PreconditionError unless
/// X is a full-dimensional PSS.
ConeCover cone_decomposition(const VecSet& x);

/// Frames of M(X) chosen greedily in canonical order, keeping a frame only if
/// its intersection with every kept frame has rank below d. Throws
/// PreconditionError unless X is a full-dimensional PSS, CertificateError if
/// the result exceeds 2^d.
std::vector<ConeFrame> max_disjoint_family(const VecSet& x);

/// A largest such family, by exhaustive search. Requires |M(X)| <= 12.
std::vector<ConeFrame> max_disjoint_family_exhaustive(const VecSet& x);

struct FrameRestriction {
    /// image[b] = index in M(Y) of B_b n Y, for every B_b in M(X) whose restriction is a frame of Y.
    std::vector<std::optional<std::size_t>> image;
    /// preimage[a] = lowest index in M(X) with B n Y = A_a.
    std::vector<std::optional<std::size_t>> preimage;
    /// Pairs (b1, b2) of M(X) indices with equal restriction to Y.
    std::vector<std::pair<std::size_t, std::size_t>> collisions;

    /// Frames B of X for which B n Y is not a frame of Y.
    std::vector<std::size_t> non_frame_restrictions;
    /// Frames A of Y that are no restriction B n Y.
    std::vector<std::size_t> missing_preimages;
    /// Collisions with rank(B1 n B2) < d.
    std::vector<std::pair<std::size_t, std::size_t>> low_rank_collisions;

    bool restrictions_ok() const noexcept { return non_frame_restrictions.empty(); }
    bool preimages_ok() const noexcept { return missing_preimages.empty(); }
    bool collisions_ok() const noexcept { return low_rank_collisions.empty(); }
    bool ok() const noexcept { return restrictions_ok() && preimages_ok() && collisions_ok(); }
};

/// Checks the map B -> B n Y from M(X) to M(Y) for Y (indices into X): every
/// restriction should be a frame of Y, every frame of Y a restriction, and
/// frames with equal restriction should overlap in full rank. Each failure is
/// recorded rather than thrown. Throws PreconditionError unless X and Y both
/// positively span Q^d.
FrameRestriction restrict_frames(const VecSet& x, const IndexSet& y);

}  // namespace psskit
