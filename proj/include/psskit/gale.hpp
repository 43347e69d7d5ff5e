#pragma once

// Dependencies of a vector set, nonnegative dependency bases and Gale diagrams.

#include <optional>
#include <utility>
#include <vector>

#include "psskit/simplicial.hpp"

namespace psskit {

/// v : X -> Q with sum v(x) x = 0; coeffs[i] is the value at element i.
struct Dependency {
    std::vector<Rat> coeffs;
    friend bool operator==(const Dependency&, const Dependency&) = default;
};

bool is_dependency(const VecSet& x, const Dependency& v);

/// Kernel basis of the column matrix of X, first nonzero entry 1.
std::vector<Dependency> dependency_basis(const VecSet& x);

/// A basis of D(X) inside the nonnegative cone P(X).
///
/// Each kernel basis vector is repaired by scanning its negative entries in
/// ascending index order: for a negative entry at x_k, the dependency of the
/// first simplex containing x_k is added, scaled so the entry becomes zero.
/// Entries elsewhere only grow, so one pass suffices. The repaired vectors,
/// followed by the simplex dependencies, are then thinned greedily to a
/// linearly independent set. Throws PreconditionError if X is not a PSS.
std::vector<Dependency> nonneg_dependency_basis(const VecSet& x);

/// Every simplex of X sums to zero.
bool is_locally_equilibrated(const VecSet& x);
bool is_locally_equilibrated(const VecSet& x, const SimplexSet& simplices);

/// Characteristic function of a simplex as a function on X.
Dependency characteristic(const VecSet& x, const Simplex& s);

struct GaleDiagram {
    std::vector<Dependency> basis_used;
    /// points[i] = w / |w|_1 with w = (v_1(x_i), ..., v_n(x_i)); zero if w = 0.
    std::vector<QVec> points;
};

/// Throws PreconditionError if `basis` is not a basis of D(X).
GaleDiagram gale_diagram(const VecSet& x, const std::vector<Dependency>& basis);

/// Characteristic functions chi_S of simplices, picked greedily in simplex order
/// while linearly independent, until they span D(X). Returns the simplex indices.
/// Throws CertificateError if they do not reach dim D(X).
std::vector<std::size_t> characteristic_basis(const VecSet& x, const SimplexSet& simplices);

struct GaleTheoremReport {
    GaleDiagram diagram;
    std::vector<std::size_t> basis_simplices;
    /// Pairs (i, j), i < j, where point equality and simplex-membership equality disagree.
    std::vector<std::pair<std::size_t, std::size_t>> violations;

    bool ok() const noexcept { return violations.empty(); }
};

/// With a basis of simplex characteristic functions, compares "same Gale
/// point" with "same simplices" for every pair. Throws PreconditionError unless
/// X is a PSS and locally equilibrated.
GaleTheoremReport verify_gale_theorem(const VecSet& x);

/// Partition of element indices by equal Gale point, classes ordered by first element.
std::vector<IndexSet> point_classes(const GaleDiagram& g);

}  // namespace psskit
