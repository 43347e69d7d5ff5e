#pragma once

// Instance generators: crosses, simplices, positive bases built from
// antichains, the 9-vector counterexample in Q^6, rational 2n-gons and seeded
// random positive bases.

#include <cstdint>
#include <optional>
#include <vector>

#include "psskit/vecset.hpp"

namespace psskit {

/// {e_1, -a_1 e_1, ..., e_d, -a_d e_d}; default scales 1.
VecSet make_cross(std::size_t d, const std::vector<Rat>& scales = {});

/// {e_1, ..., e_d, -(c_1 e_1 + ... + c_d e_d)}; default coefficients 1.
VecSet make_simplex(std::size_t d, const std::vector<Rat>& coeffs = {});

/// Positive basis B u {x_1..x_n}: B is the standard basis and
/// x_i = -sum_{j in A_i} w_ij e_j. Subsets use 1-based coordinates.
struct AntichainSpec {
    std::size_t d = 0;
    std::vector<std::vector<std::size_t>> subsets;
    /// Optional per-subset weights, aligned with `subsets`; default all 1.
    std::vector<std::vector<Rat>> weights;
};

/// Throws PreconditionError for an empty or out-of-range subset, a violated
/// antichain, n outside [1, d], or a result that is not a positive basis
/// (some antichains, e.g. all 2-subsets of {1,2,3}, give dependent sets).
VecSet make_from_antichain(const AntichainSpec& spec);

/// The 9 vectors of Q^6 that positively span, split into three disjoint
/// simplices, and are positively dependent through x6 = x1 + x2 + x8 + x9.
VecSet example_x9();

/// 2n integer vectors in angular order; element k and element k + n are
/// antipodal. Directions approximate equal spacing through the rational
/// parametrization (q^2 - p^2, 2pq) of the circle. Throws CertificateError if
/// the frames are not exactly the 2n runs of n consecutive points.
VecSet polygon_example(std::size_t n);

/// Seeded positive basis of Q^d with n simplices.
///
/// Antichain sampler: n distinct "private" coordinates are drawn, one per
/// subset; each remaining coordinate joins a random nonempty family of the
/// subsets. Private coordinates make the family an antichain and the result
/// positively independent; coverage of all coordinates makes it spanning.
/// With n = d every subset is a singleton and the result is a scaled cross;
/// with n = 1 it is a simplex. Weights are p/q with 1 <= p, q <= 7.
/// Deterministic per (d, n, seed) on every platform (mt19937_64 draws only).
VecSet random_positive_basis(std::size_t d, std::size_t n, std::uint64_t seed);

/// The antichain used by random_positive_basis for the same arguments.
AntichainSpec random_antichain(std::size_t d, std::size_t n, std::uint64_t seed);

}  // namespace psskit
