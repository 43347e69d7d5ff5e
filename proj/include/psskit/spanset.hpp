#pragma once

// Dependence predicates, positive spanning tests and conic Caratheodory.
//
// Notation used throughout: lin(X) is the linear span, pos(X) the positive
// span (nonnegative combinations; pos of the empty set is {0}).

#include <map>
#include <optional>
#include <vector>

#include "psskit/ratlin.hpp"
#include "psskit/vecset.hpp"

namespace psskit {

/// Outcome of a dependence test. When verdict is true, `witness_index` is the
/// lowest index x for which the defining relation holds and `witness_coeffs`
/// (indices of X \ {x}, zero entries omitted) reconstructs x, or -x in the
/// negative case. Linear witnesses may carry negative coefficients.
struct DependenceReport {
    bool verdict = false;
    std::optional<std::size_t> witness_index;
    std::optional<std::map<std::size_t, Rat>> witness_coeffs;
};

/// A point with its representation over a VecSet; all coefficients positive.
struct SpanPoint {
    QVec point;
    std::map<std::size_t, Rat> coeffs;
};

/// Nonnegative coefficients (aligned with `ids`) expressing p over the
/// elements `ids` of X, or nullopt if p is not in their positive span.
std::optional<std::vector<Rat>> positive_combination(const QVec& p, const VecSet& x, const IndexSet& ids);
bool in_positive_span(const QVec& p, const VecSet& x, const IndexSet& ids);
bool in_positive_span(const QVec& p, const VecSet& x);

DependenceReport linearly_dependent(const VecSet& x);
DependenceReport positively_dependent(const VecSet& x);
DependenceReport negatively_dependent(const VecSet& x);

/// Separator z with z . x >= 1 on X, or Infeasible when X is negatively
/// dependent (equivalently, when X contains a simplex).
FeasWitness negatively_independent(const VecSet& x);

/// pos(X) == lin(X), tested as -x in pos(X) for every element.
bool is_pss(const VecSet& x);
bool is_positive_basis(const VecSet& x);

/// Rewrites p in pos(X) as a positive combination of at most rank(X) elements.
/// The support is first made negatively independent by cancelling nonnegative
/// dependencies at the minimal-ratio index, then linearly independent by the
/// same step on kernel vectors. p == 0 yields the empty support.
/// Throws PreconditionError if p is not in pos(X).
SpanPoint caratheodory_reduce(const QVec& p, const VecSet& x);

/// Elements of X lying in each hyperplane flat of X (closures of rank(X)-1
/// independent elements), deduplicated and sorted.
std::vector<Mask> hyperplane_flats(const VecSet& x);

/// p in skel(X): p in pos(A) for some A subset of X with lin(A) strictly inside lin(X).
bool skeleton_contains(const QVec& p, const VecSet& x);
/// p in pos(X) and not in skel(X).
bool core_contains(const QVec& p, const VecSet& x);

/// True iff the coordinates of p over the linearly independent set B all
/// exist and are strictly positive. Throws PreconditionError when B is
/// dependent or p is outside lin(B).
bool in_rint_positive_span(const QVec& p, const VecSet& b);

struct Replacement {
    VecSet set;
    /// index_map[i] is the position of old element i in `set`, nullopt for the replaced one.
    std::vector<std::optional<std::size_t>> index_map;
    /// Position of y in `set`.
    std::size_t y_index = 0;
};

/// A[x -> y] = (A \ {x}) u {y}. y takes the position of x unless it is already
/// an element, in which case the result shrinks by one. Throws
/// PreconditionError for an out-of-range x and ZeroVectorError for y = 0.
Replacement replace_element(const VecSet& a, std::size_t x, const QVec& y);

/// Greedy positive basis inside a PSS: scan indices ascending and drop any
/// element lying in the positive span of the remaining ones.
/// Throws PreconditionError if X is not a PSS.
IndexSet extract_positive_basis_indices(const VecSet& x);
VecSet extract_positive_basis(const VecSet& x);

}  // namespace psskit
