#pragma once

// Simplices (minimal sets with 0 in their positive span), the factorization
// condition, basis decompositions of positive bases and the Reay partition.

#include <optional>
#include <string>
#include <vector>

#include "psskit/spanset.hpp"

namespace psskit {

/// A simplex inside some VecSet. `dependency[k]` is the coefficient of
/// element `members[k]` in the unique (up to scale) positive relation
/// sum dependency[k] * x_members[k] = 0, scaled so dependency[0] == 1.
struct Simplex {
    IndexSet members;
    std::vector<Rat> dependency;

    Mask mask() const { return indices_to_mask(members); }
    friend bool operator==(const Simplex&, const Simplex&) = default;
};

/// All simplices of a set, ordered lexicographically by member indices.
using SimplexSet = std::vector<Simplex>;

/// The elements `ids` of X form a simplex iff their rank is |ids| - 1 and the
/// one-dimensional kernel has a strictly positive representative.
std::optional<Simplex> simplex_on(const VecSet& x, const IndexSet& ids);
std::optional<Simplex> is_simplex(const VecSet& s);

/// S(X). Depth-first over linearly independent subsets in index order; a
/// subset is tested as a simplex only when one more element makes it dependent.
SimplexSet enumerate_simplices(const VecSet& x);

/// Indices (into `simplices`) of the simplices containing element i.
std::vector<std::size_t> simplices_containing(const SimplexSet& simplices, std::size_t i);

struct FactorizationResult {
    bool holds = true;
    /// First failing pair in scan order (Y ascending by mask, then simplex index).
    std::optional<IndexSet> y;
    std::optional<std::size_t> simplex;
};

/// Checks lin(Y) n lin(S) == lin(Y n S) for every Y subset of X (or every
/// positively spanning Y when `spanning_only`) and every S in S(X).
/// Equality is decided by dim(lin Y n lin S) = rank Y + rank S - rank(Y u S).
FactorizationResult factorization_condition(const VecSet& x, bool spanning_only);
FactorizationResult factorization_condition(const VecSet& x, const SimplexSet& simplices, bool spanning_only);

struct BasisDecomposition {
    struct Pair {
        std::size_t x;
        IndexSet a;
        friend bool operator==(const Pair&, const Pair&) = default;
    };
    IndexSet basis;
    /// One pair per simplex of X, in simplex order.
    std::vector<Pair> pairs;
};

/// Describes the first violated invariant of `dec` as a decomposition of X,
/// or nullopt when all hold: basis independent and spanning lin(X); X is the
/// disjoint union of basis and the x_i; -x_i in rint pos(A_i); the A_i form an
/// antichain; 1 <= n <= rank X; every simplex meets the basis in all but one element.
std::optional<std::string> decomposition_violation(const VecSet& x, const BasisDecomposition& dec);

/// Builds the decomposition by picking the lowest-index private element of
/// every simplex, without first testing positive independence. Returns
/// nullopt when some simplex has no private element or the result violates
/// an invariant.
std::optional<BasisDecomposition> try_basis_decomposition(const VecSet& x);

/// Throws PreconditionError unless X is a nonempty positive basis.
BasisDecomposition basis_decomposition(const VecSet& x);

struct ReayPartition {
    std::vector<IndexSet> parts;
};

/// Disjoint parts X_1..X_n with |X_i| >= |X_{i+1}| >= 2 such that the union of
/// the first k parts positively spans a subspace of dimension sum |X_i| - k.
/// Throws PreconditionError unless X is a positive basis.
ReayPartition reay_partition(const VecSet& x);

/// Three conditions on a simplex S and y in lin(S) \ S that always agree.
struct SxyFlags {
    /// Some x in S has x in pos(S[x -> y]).
    bool exists_swap = false;
    /// Every simplex R of S u {y} has lin(R) == lin(S).
    bool all_simplices_full_span = false;
    /// -y is not in skel(S).
    bool neg_y_outside_skeleton = false;

    friend bool operator==(const SxyFlags&, const SxyFlags&) = default;
};

/// Throws PreconditionError if S is not a simplex, y is outside lin(S) or y in S.
SxyFlags sxy_classify(const VecSet& s, const QVec& y);

}  // namespace psskit
