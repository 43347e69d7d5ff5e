#include <doctest.h>

#include <algorithm>

#include "psskit/conical.hpp"
#include "psskit/genlib.hpp"
#include "support.hpp"

using namespace psskit;
using testsupport::to_oracle;

namespace {

std::vector<Mask> masks(const std::vector<ConeFrame>& fs) {
    std::vector<Mask> out;
    for (const auto& f : fs) out.push_back(f.mask());
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<Mask> sorted(std::vector<Mask> v) {
    std::sort(v.begin(), v.end());
    return v;
}

bool separates(const QVec& z, const VecSet& x, const IndexSet& ids) {
    return std::all_of(ids.begin(), ids.end(), [&](std::size_t i) { return dot(z, x[i]) >= 1; });
}

std::size_t overlap_rank(const VecSet& x, const ConeFrame& a, const ConeFrame& b) {
    return x.rank(mask_to_indices(a.mask() & b.mask()));
}

}  // namespace

TEST_CASE("frames of simplices, crosses and polygons") {
    for (std::size_t d = 1; d <= 4; ++d) {
        const auto s = enumerate_mns(make_simplex(d));
        CHECK(s.size() == d + 1);
        for (const auto& f : s) CHECK(f.members.size() == d);
        CHECK(enumerate_mns(make_cross(d)).size() == (std::size_t{1} << d));
    }
    for (std::size_t n = 2; n <= 5; ++n) {
        const auto x = polygon_example(n);
        const auto fs = enumerate_mns(x);
        CHECK(fs.size() == 2 * n);
        for (const auto& f : fs) CHECK(f.members.size() == n);
    }
}

TEST_CASE("frames match brute force and carry witnesses") {
    std::mt19937_64 rng(51);
    for (int t = 0; t < 120; ++t) {
        const std::size_t d = 1 + rng() % 3;
        const auto x = t % 2 ? testsupport::random_set(rng, d, 1 + rng() % 7) : testsupport::random_pss(rng, d, rng() % 3);
        const auto fs = enumerate_mns(x);
        CHECK(masks(fs) == sorted(oracle::frames(to_oracle(x))));
        for (const auto& f : fs) {
            CHECK(separates(f.witness, x, f.members));
            // The frame is everything on the positive side of its witness.
            for (std::size_t i = 0; i < x.size(); ++i)
                if (!mask_contains(f.mask(), i)) CHECK(sgn(dot(f.witness, x[i])) <= 0);
        }
        CHECK(std::is_sorted(fs.begin(), fs.end(),
                             [](const ConeFrame& a, const ConeFrame& b) { return a.members < b.members; }));
    }
}

TEST_CASE("main bounds reports") {
    auto r = verify_main_bounds(make_cross(3));
    CHECK(r.ok());
    CHECK(r.simplex_count == 3);
    CHECK(r.card == 6);
    CHECK(r.mns_count == 8);
    CHECK(r.is_cross);
    CHECK_FALSE(r.is_simplex);

    r = verify_main_bounds(make_simplex(3));
    CHECK(r.ok());
    CHECK(r.simplex_count == 1);
    CHECK(r.card == 4);
    CHECK(r.mns_count == 4);
    CHECK(r.is_simplex);
    CHECK_FALSE(r.is_cross);

    // A 2-simplex on e1, e2 plus a 1-simplex on e3.
    r = verify_main_bounds(make_from_antichain({3, {{1, 2}, {3}}, {}}));
    CHECK(r.ok());
    CHECK(r.simplex_count == 2);
    CHECK(r.card == 5);
    CHECK(r.mns_count > 4);
    CHECK(r.mns_count < 8);
    CHECK(r.mns_count == oracle::frames(to_oracle(make_from_antichain({3, {{1, 2}, {3}}, {}}))).size());

    CHECK_THROWS_AS(verify_main_bounds(example_x9()), PreconditionError);
    CHECK_THROWS_AS(verify_main_bounds(VecSet(2, {QVec{1, 1}, QVec{-1, -1}})), PreconditionError);
}

TEST_CASE("main bounds on random positive bases") {
    for (std::uint64_t seed = 0; seed < 60; ++seed) {
        const std::size_t d = 1 + seed % 5;
        const auto x = random_positive_basis(d, 1 + (seed / 5) % d, seed);
        const auto r = verify_main_bounds(x);
        CHECK_MESSAGE(r.ok(), (r.violations.empty() ? "" : r.violations.front()));
        CHECK(r.mns_count == oracle::frames(to_oracle(x)).size());
        CHECK(r.is_cross == (r.simplex_count == d));
        CHECK(r.is_simplex == (r.simplex_count == 1));
    }
}

TEST_CASE("cone decomposition examples") {
    // Each element goes to the first quadrant frame holding it, so the first
    // quadrant takes e1 and e2 and only two more quadrants are used.
    auto c = cone_decomposition(make_cross(2));
    REQUIRE(c.parts.size() == 3);
    CHECK(c.parts[0].members == IndexSet{0, 2});
    CHECK(c.parts[1].members == IndexSet{1});
    CHECK(c.parts[2].members == IndexSet{3});
    for (const auto& p : c.parts) CHECK(p.frame.size() == 2);

    c = cone_decomposition(make_simplex(2));
    CHECK(c.parts.size() <= 3);

    const auto x = testsupport::with_extra(make_cross(2), {QVec{1, 1}, QVec{-3, -3}, QVec{5, -5}});
    c = cone_decomposition(x);
    CHECK(c.parts.size() <= 4);
    CHECK(c.assignment.size() == x.size());

    CHECK_THROWS_AS(cone_decomposition(VecSet(2, {QVec{1, 0}, QVec{0, 1}})), PreconditionError);
    CHECK_THROWS_AS(cone_decomposition(VecSet(2, {QVec{1, 1}, QVec{-1, -1}})), PreconditionError);
}

TEST_CASE("cone decompositions of random PSSs") {
    std::mt19937_64 rng(52);
    for (int t = 0; t < 60; ++t) {
        const std::size_t d = 1 + rng() % 4;
        const auto x = testsupport::random_pss(rng, d, rng() % 4);
        const auto c = cone_decomposition(x);
        CHECK(c.parts.size() <= (std::size_t{1} << d));
        CHECK(is_positive_basis(x.subset(c.positive_basis)));
        Mask cover = 0;
        for (std::size_t k = 0; k < c.parts.size(); ++k) {
            const auto& p = c.parts[k];
            CHECK_FALSE(p.members.empty());
            const Mask m = indices_to_mask(p.members);
            CHECK((cover & m) == 0);
            cover |= m;
            CHECK(separates(p.witness, x, p.members));
            CHECK_FALSE(oracle::has_positive_circuit(oracle::pick(to_oracle(x), m)));
            for (auto i : p.members) {
                CHECK(c.assignment[i] == k);
                CHECK(oracle::in_cone(x[i].entries(), oracle::pick(to_oracle(x), indices_to_mask(p.frame))));
            }
        }
        CHECK(cover == full_mask(x.size()));
    }
}

TEST_CASE("frame families") {
    for (std::size_t d = 1; d <= 4; ++d) {
        CHECK(max_disjoint_family(make_cross(d)).size() == (std::size_t{1} << d));
        CHECK(max_disjoint_family(make_simplex(d)).size() == d + 1);
    }
    for (std::size_t n = 3; n <= 5; ++n) {
        const auto x = polygon_example(n);
        const auto fam = max_disjoint_family(x);
        CHECK(fam.size() < 2 * n);
        CHECK(fam.size() <= 4);
    }
    CHECK_THROWS_AS(max_disjoint_family(VecSet(2, {QVec{1, 0}, QVec{0, 1}})), PreconditionError);
    CHECK_THROWS_AS(max_disjoint_family_exhaustive(make_cross(4)), PreconditionError);  // 16 frames
}

TEST_CASE("frame families match brute force") {
    std::mt19937_64 rng(53);
    for (int t = 0; t < 60; ++t) {
        const std::size_t d = 1 + rng() % 3;
        const auto x = testsupport::random_pss(rng, d, rng() % 4);
        const auto greedy = max_disjoint_family(x);
        CHECK(greedy.size() <= (std::size_t{1} << d));
        for (std::size_t i = 0; i < greedy.size(); ++i)
            for (std::size_t j = i + 1; j < greedy.size(); ++j) CHECK(overlap_rank(x, greedy[i], greedy[j]) < d);
        if (enumerate_mns(x).size() > 12) continue;
        const auto best = max_disjoint_family_exhaustive(x);
        CHECK(best.size() >= greedy.size());
        CHECK(best.size() == oracle::max_frame_family(to_oracle(x), d));
        for (std::size_t i = 0; i < best.size(); ++i)
            for (std::size_t j = i + 1; j < best.size(); ++j) CHECK(overlap_rank(x, best[i], best[j]) < d);
    }
}

TEST_CASE("crosses with extra vectors") {
    const auto c2 = make_cross(2);
    // Two more 1-simplices on the e1 axis keep the family at 2^d.
    auto x = testsupport::with_extra(c2, {QVec{2, 0}, QVec{-2, 0}});
    CHECK(max_disjoint_family_exhaustive(x).size() == 4);
    x = testsupport::with_extra(c2, {QVec{2, 0}, QVec{-3, 0}});
    CHECK(max_disjoint_family_exhaustive(x).size() == 4);
    // A diagonal 1-simplex breaks the bound although X is still a union of 1-simplices.
    x = testsupport::with_extra(c2, {QVec{1, 1}, QVec{-1, -1}});
    CHECK(max_disjoint_family_exhaustive(x).size() == 3);
    CHECK(oracle::max_frame_family(to_oracle(x), 2) == 3);

    const auto c3 = make_cross(3);
    x = testsupport::with_extra(c3, {QVec{2, 0, 0}, QVec{-2, 0, 0}});
    CHECK(max_disjoint_family_exhaustive(x).size() == 8);
    x = testsupport::with_extra(c3, {QVec{1, 1, 0}, QVec{-1, -1, 0}});
    CHECK(max_disjoint_family_exhaustive(x).size() == 6);
}

TEST_CASE("frame restriction examples") {
    const auto c2 = make_cross(2);
    auto r = restrict_frames(c2, {0, 1, 2, 3});
    CHECK(r.ok());
    for (std::size_t b = 0; b < r.image.size(); ++b) CHECK(*r.image[b] == b);
    CHECK(r.collisions.empty());

    const auto x = testsupport::with_extra(c2, {QVec{1, 1}});
    r = restrict_frames(x, {0, 1, 2, 3});
    CHECK(r.ok());
    CHECK(r.preimage.size() == 4);
    for (const auto& p : r.preimage) CHECK(p);

    CHECK_THROWS_AS(restrict_frames(x, {0, 2}), PreconditionError);
    CHECK_THROWS_AS(restrict_frames(x, {0, 1, 2, 9}), PreconditionError);
}

TEST_CASE("frame restriction on the hexagon reports each sub-claim") {
    // Every other vertex of the hexagon is a 2-simplex Y. The frame made of
    // three consecutive vertices meets Y in a single vector, which is not a
    // frame of Y.
    const auto x = polygon_example(3);
    const auto r = restrict_frames(x, {1, 3, 5});
    CHECK_FALSE(r.restrictions_ok());
    CHECK(r.preimages_ok());
    CHECK(r.collisions_ok());
    const auto fs = enumerate_mns(x);
    for (auto b : r.non_frame_restrictions) {
        IndexSet meet;
        for (auto i : fs[b].members)
            if (i % 2 == 1) meet.push_back(i);
        CHECK(meet.size() == 1);
    }
}
