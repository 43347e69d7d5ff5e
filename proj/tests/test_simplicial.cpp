#include <doctest.h>

#include <algorithm>

#include "psskit/genlib.hpp"
#include "psskit/simplicial.hpp"
#include "support.hpp"

using namespace psskit;
using testsupport::to_oracle;

namespace {

VecSet tri() { return VecSet(2, {QVec{1, 0}, QVec{0, 1}, QVec{-1, -1}}); }

std::vector<Mask> masks(const SimplexSet& s) {
    std::vector<Mask> out;
    for (const auto& x : s) out.push_back(x.mask());
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<Mask> sorted(std::vector<Mask> v) {
    std::sort(v.begin(), v.end());
    return v;
}

// Multiset of "which parts contain this element" over the ground set.
std::vector<Mask> profiles(const std::vector<IndexSet>& parts, const IndexSet& ground) {
    std::vector<Mask> out;
    for (auto g : ground) {
        Mask m = 0;
        for (std::size_t i = 0; i < parts.size(); ++i)
            if (std::binary_search(parts[i].begin(), parts[i].end(), g)) m |= Mask{1} << i;
        out.push_back(m);
    }
    std::sort(out.begin(), out.end());
    return out;
}

// Two set systems are equal up to relabelling both the ground set and the
// order of the parts.
bool isomorphic(std::vector<IndexSet> a, const IndexSet& ga, const std::vector<IndexSet>& b, const IndexSet& gb) {
    if (a.size() != b.size() || ga.size() != gb.size()) return false;
    const auto target = profiles(b, gb);
    std::sort(a.begin(), a.end());
    do {
        if (profiles(a, ga) == target) return true;
    } while (std::next_permutation(a.begin(), a.end()));
    return false;
}

}  // namespace

TEST_CASE("simplex detection") {
    const auto s = is_simplex(VecSet(1, {QVec{1}, QVec{-1}}));
    REQUIRE(s);
    CHECK(s->dependency == std::vector<Rat>{1, 1});
    const auto t = is_simplex(tri());
    REQUIRE(t);
    CHECK(t->dependency == std::vector<Rat>{1, 1, 1});
    CHECK_FALSE(is_simplex(VecSet(2, {QVec{1, 0}, QVec{0, 1}})));
    CHECK_FALSE(is_simplex(VecSet(2, {QVec{1, 0}, QVec{-1, 0}, QVec{0, 1}})));  // kernel not strictly positive
    const auto w = is_simplex(VecSet(2, {QVec{2, 0}, QVec{0, 3}, QVec{-1, -1}}));
    REQUIRE(w);
    CHECK(w->dependency == std::vector<Rat>{1, Rat(2) / 3, 2});
}

TEST_CASE("simplex enumeration on the 9-vector example") {
    const auto x = example_x9();
    const auto s = enumerate_simplices(x);
    CHECK(s.size() == 5);
    CHECK(masks(s) == sorted(oracle::simplices(to_oracle(x))));
    // Three of them are disjoint and cover X.
    for (IndexSet ids : {IndexSet{0, 1, 2}, IndexSet{3, 4, 5}, IndexSet{6, 7, 8}})
        CHECK(std::any_of(s.begin(), s.end(), [&](const Simplex& t) { return t.members == ids; }));
    for (const auto& t : s) {
        QVec zero(x.dim());
        for (std::size_t k = 0; k < t.members.size(); ++k) {
            CHECK(sgn(t.dependency[k]) > 0);
            zero += x[t.members[k]] * t.dependency[k];
        }
        CHECK(zero.is_zero());
        CHECK(t.dependency[0] == 1);
    }
    CHECK(std::is_sorted(s.begin(), s.end(), [](const Simplex& a, const Simplex& b) { return a.members < b.members; }));
}

TEST_CASE("simplex enumeration matches brute force") {
    std::mt19937_64 rng(31);
    for (int t = 0; t < 150; ++t) {
        const std::size_t d = 1 + rng() % 4, n = 1 + rng() % 9;
        const auto vs = oracle::random_set(rng, d, n);
        const auto s = enumerate_simplices(testsupport::from_oracle(d, vs));
        CHECK(masks(s) == sorted(oracle::simplices(vs)));
        for (const auto& x : s) CHECK(x.members.size() <= d + 1);
    }
}

TEST_CASE("every element of a simplex is minus a relative-interior point of the rest") {
    std::mt19937_64 rng(32);
    for (int t = 0; t < 60; ++t) {
        const auto x = testsupport::random_pss(rng, 1 + rng() % 3, rng() % 3);
        for (const auto& s : enumerate_simplices(x)) {
            CHECK(s.members.size() == x.rank(s.members) + 1);
            for (auto z : s.members) {
                IndexSet rest;
                for (auto m : s.members)
                    if (m != z) rest.push_back(m);
                const auto r = x.subset(rest);
                CHECK(r.rank() == r.size());
                CHECK(in_rint_positive_span(-x[z], r));
            }
        }
    }
}

TEST_CASE("factorization condition") {
    const auto x9 = example_x9();
    for (bool spanning : {false, true}) {
        const auto f = factorization_condition(x9, spanning);
        CHECK_FALSE(f.holds);
        REQUIRE(f.y);
        REQUIRE(f.simplex);
        // Re-check the reported pair with ranks.
        const auto s = enumerate_simplices(x9)[*f.simplex];
        IndexSet both, meet;
        std::set_union(f.y->begin(), f.y->end(), s.members.begin(), s.members.end(), std::back_inserter(both));
        std::set_intersection(f.y->begin(), f.y->end(), s.members.begin(), s.members.end(), std::back_inserter(meet));
        CHECK(x9.rank(*f.y) + x9.rank(s.members) - x9.rank(both) != x9.rank(meet));
    }
    CHECK(factorization_condition(make_cross(2), false).holds);
    CHECK(factorization_condition(make_cross(2), true).holds);
}

TEST_CASE("factorization matches brute force") {
    std::mt19937_64 rng(33);
    for (int t = 0; t < 60; ++t) {
        const std::size_t d = 1 + rng() % 3;
        const auto x = t % 2 ? testsupport::random_set(rng, d, 1 + rng() % 6) : testsupport::random_pss(rng, d, rng() % 3);
        if (x.size() > 8) continue;
        for (bool spanning : {false, true})
            CHECK(factorization_condition(x, spanning).holds == oracle::factorization(to_oracle(x), spanning));
    }
    for (std::uint64_t seed = 0; seed < 30; ++seed) {
        const std::size_t d = 1 + seed % 4;
        const auto x = random_positive_basis(d, 1 + seed % d, seed);
        CHECK(factorization_condition(x, false).holds);
    }
}

TEST_CASE("basis decomposition examples") {
    const auto t = basis_decomposition(tri());
    CHECK_FALSE(decomposition_violation(tri(), t));
    REQUIRE(t.pairs.size() == 1);
    // All three elements are private; the lowest index is chosen.
    CHECK(t.pairs[0] == BasisDecomposition::Pair{0, IndexSet{1, 2}});
    CHECK(t.basis == IndexSet{1, 2});

    const auto c = make_cross(2);
    const auto dc = basis_decomposition(c);
    CHECK(dc.pairs == std::vector<BasisDecomposition::Pair>{{0, {1}}, {2, {3}}});
    CHECK(dc.basis == IndexSet{1, 3});

    CHECK_THROWS_AS(basis_decomposition(example_x9()), PreconditionError);
    CHECK_FALSE(try_basis_decomposition(example_x9()));
    CHECK_THROWS_AS(basis_decomposition(VecSet(2, {QVec{1, 0}, QVec{0, 1}})), PreconditionError);
}

TEST_CASE("decomposition invariants catch corruption") {
    const auto c = make_cross(2);
    auto dec = basis_decomposition(c);
    auto bad = dec;
    bad.basis = {1};
    CHECK(decomposition_violation(c, bad));
    bad = dec;
    bad.pairs[0].a = {3};
    CHECK(decomposition_violation(c, bad));
    bad = dec;
    bad.pairs.pop_back();
    CHECK(decomposition_violation(c, bad));
}

TEST_CASE("decompositions of generated positive bases recover their antichain") {
    for (std::uint64_t seed = 0; seed < 40; ++seed) {
        const std::size_t d = 1 + seed % 5, n = 1 + (seed / 5) % d;
        const auto spec = random_antichain(d, n, seed);
        const auto x = make_from_antichain(spec);
        const auto dec = basis_decomposition(x);
        CHECK_FALSE(decomposition_violation(x, dec));
        CHECK(dec.pairs.size() == n);
        CHECK(dec.basis.size() == d);
        for (const auto& s : enumerate_simplices(x)) {
            IndexSet meet;
            std::set_intersection(s.members.begin(), s.members.end(), dec.basis.begin(), dec.basis.end(),
                                  std::back_inserter(meet));
            CHECK(meet.size() == s.members.size() - 1);
        }
        std::vector<IndexSet> a, subsets;
        for (const auto& p : dec.pairs) a.push_back(p.a);
        IndexSet coords;
        for (std::size_t j = 1; j <= d; ++j) coords.push_back(j);
        for (auto s : spec.subsets) subsets.push_back(IndexSet(s.begin(), s.end()));
        CHECK(isomorphic(a, dec.basis, subsets, coords));
    }
}

TEST_CASE("Reay partition") {
    auto r = reay_partition(make_simplex(4));
    REQUIRE(r.parts.size() == 1);
    CHECK(r.parts[0].size() == 5);

    r = reay_partition(make_cross(3));
    CHECK(r.parts.size() == 3);
    for (const auto& p : r.parts) CHECK(p.size() == 2);

    // Two simplices sharing e2 in R^3.
    const auto x = make_from_antichain({3, {{1, 2}, {2, 3}}, {}});
    r = reay_partition(x);
    REQUIRE(r.parts.size() == 2);
    CHECK(r.parts[0].size() == 3);
    CHECK(r.parts[1].size() == 2);
    CHECK(oracle::rank(to_oracle(x.subset(r.parts[0]))) == 2);
    CHECK(oracle::rank(to_oracle(x)) == 3);

    CHECK_THROWS_AS(reay_partition(example_x9()), PreconditionError);
}

TEST_CASE("Reay partitions of random positive bases") {
    for (std::uint64_t seed = 100; seed < 140; ++seed) {
        const std::size_t d = 1 + seed % 5;
        const auto x = random_positive_basis(d, 1 + (seed / 5) % d, seed);
        const auto r = reay_partition(x);
        Mask seen = 0;
        std::size_t total = 0;
        oracle::Vecs prefix;
        for (std::size_t k = 0; k < r.parts.size(); ++k) {
            CHECK(r.parts[k].size() >= 2);
            if (k) CHECK(r.parts[k].size() <= r.parts[k - 1].size());
            const Mask m = indices_to_mask(r.parts[k]);
            CHECK((m & seen) == 0);
            seen |= m;
            total += r.parts[k].size();
            for (auto i : r.parts[k]) prefix.push_back(x[i].entries());
            CHECK(oracle::is_pss(prefix));
            CHECK(oracle::rank(prefix) == total - (k + 1));
        }
        CHECK(seen == full_mask(x.size()));
    }
}

TEST_CASE("swap conditions on a simplex") {
    CHECK(sxy_classify(tri(), QVec{-1, 0}) == SxyFlags{false, false, false});
    CHECK(sxy_classify(tri(), QVec{2, 1}) == SxyFlags{true, true, true});
    // In R^1 the skeleton of {x, -x} is {0}, so every new y passes.
    const VecSet line(1, {QVec{1}, QVec{-1}});
    CHECK(sxy_classify(line, QVec{-2}) == SxyFlags{true, true, true});
    CHECK_FALSE(oracle::in_skeleton({2}, to_oracle(line)));

    CHECK_THROWS_AS(sxy_classify(tri(), QVec{1, 0}), PreconditionError);
    CHECK_THROWS_AS(sxy_classify(VecSet(2, {QVec{1, 0}, QVec{0, 1}}), QVec{1, 1}), PreconditionError);
    CHECK_THROWS_AS(sxy_classify(VecSet(2, {QVec{1, 0}, QVec{-1, 0}}), QVec{0, 1}), PreconditionError);
}

TEST_CASE("swap conditions always agree") {
    std::mt19937_64 rng(34);
    for (int t = 0; t < 80; ++t) {
        const std::size_t d = 1 + rng() % 3;
        const auto x = random_positive_basis(d, 1, rng());
        const auto pts = oracle::random_set(rng, d, 4);
        for (const auto& p : pts) {
            QVec y(p);
            if (x.find(y)) continue;
            const auto f = sxy_classify(x, y);
            CHECK(f.exists_swap == f.all_simplices_full_span);
            CHECK(f.exists_swap == f.neg_y_outside_skeleton);
            CHECK(f.neg_y_outside_skeleton == !oracle::in_skeleton((-y).entries(), to_oracle(x)));
        }
    }
}
