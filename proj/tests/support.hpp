#pragma once

#include <random>

#include "oracle.hpp"
#include "psskit/genlib.hpp"
#include "psskit/vecset.hpp"

namespace testsupport {

inline oracle::Vecs to_oracle(const psskit::VecSet& x) {
    oracle::Vecs out;
    for (const auto& v : x) out.push_back(v.entries());
    return out;
}

inline psskit::VecSet from_oracle(std::size_t d, const oracle::Vecs& xs) {
    std::vector<psskit::QVec> vs;
    for (const auto& v : xs) vs.emplace_back(v);
    return psskit::VecSet(d, std::move(vs));
}

inline psskit::VecSet random_set(std::mt19937_64& rng, std::size_t d, std::size_t n) {
    return from_oracle(d, oracle::random_set(rng, d, n));
}

inline psskit::VecSet with_extra(const psskit::VecSet& x, const std::vector<psskit::QVec>& extra) {
    auto vs = x.vectors();
    for (const auto& e : extra)
        if (!x.find(e)) vs.push_back(e);
    return psskit::VecSet(x.dim(), std::move(vs));
}

/// A positive basis plus up to `extras` random vectors; positively spanning and full-dimensional.
inline psskit::VecSet random_pss(std::mt19937_64& rng, std::size_t d, std::size_t extras) {
    const auto n = 1 + rng() % d;
    auto base = psskit::random_positive_basis(d, n, rng());
    auto extra = oracle::random_set(rng, d, extras);
    std::vector<psskit::QVec> add;
    for (const auto& e : extra) add.emplace_back(e);
    return with_extra(base, add);
}

inline psskit::IndexSet mask_ids(oracle::Mask m) { return psskit::mask_to_indices(m); }

}  // namespace testsupport
