#include "psskit/conical.hpp"

#include <algorithm>
#include <bit>
#include <unordered_map>

namespace psskit {

namespace {

void require_full_pss(const VecSet& x) {
    if (!is_pss(x)) throw PreconditionError("set is not positively spanning");
    if (x.rank() != x.dim()) throw PreconditionError("set does not span the whole space");
}

struct Explorer {
    const VecSet& x;
    std::unordered_map<Mask, QVec> independent;

    void grow(Mask current, std::size_t start) {
        for (std::size_t j = start; j < x.size(); ++j) {
            const Mask next = current | (Mask{1} << j);
            const auto sub = x.subset(next);
            auto w = negatively_independent(sub);
            if (!w.feasible()) continue;
            independent.emplace(next, std::move(*w.separator));
            grow(next, j + 1);
        }
    }
};

std::uint64_t pow2(std::size_t d) { return std::uint64_t{1} << d; }

bool compatible(const VecSet& x, const ConeFrame& a, const ConeFrame& b) {
    return x.rank(mask_to_indices(a.mask() & b.mask())) < x.dim();
}

}  // namespace

std::vector<ConeFrame> enumerate_mns(const VecSet& x) {
    if (x.size() > kMaxMaskSize) throw PreconditionError("vector set too large for frame enumeration");
    Explorer e{x, {}};
    e.independent.emplace(Mask{0}, QVec(x.dim()));
    e.grow(0, 0);

    std::vector<ConeFrame> out;
    for (const auto& [m, z] : e.independent) {
        bool maximal = true;
        for (std::size_t j = 0; j < x.size() && maximal; ++j)
            if (!mask_contains(m, j) && e.independent.count(m | (Mask{1} << j))) maximal = false;
        if (maximal) out.push_back({mask_to_indices(m), z});
    }
    std::sort(out.begin(), out.end(), [](const ConeFrame& a, const ConeFrame& b) { return a.members < b.members; });
    return out;
}

bool is_cross(const VecSet& x, const SimplexSet& simplices) {
    if (simplices.size() != x.rank()) return false;
    Mask seen = 0;
    for (const auto& s : simplices) {
        if (s.members.size() != 2 || (seen & s.mask())) return false;
        seen |= s.mask();
    }
    return seen == full_mask(x.size());
}

MainBoundsReport verify_main_bounds(const VecSet& x) {
    if (x.empty() || !is_positive_basis(x)) throw PreconditionError("set is not a positive basis");
    if (x.rank() != x.dim()) throw PreconditionError("set does not span the whole space");

    const auto simplices = enumerate_simplices(x);
    MainBoundsReport r;
    r.dim = x.dim();
    r.simplex_count = simplices.size();
    r.card = x.size();
    r.mns_count = enumerate_mns(x).size();
    r.is_cross = is_cross(x, simplices);
    r.is_simplex = is_simplex(x).has_value();

    const std::size_t d = r.dim;
    auto check = [&](bool cond, const std::string& what) {
        if (!cond) r.violations.push_back(what);
    };
    check(1 <= r.simplex_count && r.simplex_count <= d, "1 <= n <= d");
    check(d + 1 <= r.card && r.card <= 2 * d, "d+1 <= |X| <= 2d");
    check(d + 1 <= r.mns_count && r.mns_count <= pow2(d), "d+1 <= |M(X)| <= 2^d");
    check((r.simplex_count == d) == r.is_cross, "n = d iff cross");
    check((r.card == 2 * d) == r.is_cross, "|X| = 2d iff cross");
    check((r.mns_count == pow2(d)) == r.is_cross, "|M(X)| = 2^d iff cross");
    check((r.simplex_count == 1) == r.is_simplex, "n = 1 iff simplex");
    check((r.card == d + 1) == r.is_simplex, "|X| = d+1 iff simplex");
    check((r.mns_count == d + 1) == r.is_simplex, "|M(X)| = d+1 iff simplex");
    return r;
}

ConeCover cone_decomposition(const VecSet& x) {
    require_full_pss(x);
    ConeCover cover;
    cover.positive_basis = extract_positive_basis_indices(x);
    const auto y = x.subset(cover.positive_basis);
    const auto frames = enumerate_mns(y);

    std::vector<IndexSet> frame_in_x;
    for (const auto& f : frames) {
        IndexSet ids;
        for (auto k : f.members) ids.push_back(cover.positive_basis[k]);
        frame_in_x.push_back(std::move(ids));
    }

    std::vector<std::optional<std::size_t>> part_of_frame(frames.size());
    cover.assignment.resize(x.size());
    for (std::size_t i = 0; i < x.size(); ++i) {
        std::size_t f = 0;
        while (f < frames.size() && !in_positive_span(x[i], x, frame_in_x[f])) ++f;
        if (f == frames.size()) throw CertificateError("element outside every frame of the positive basis");
        if (!part_of_frame[f]) {
            part_of_frame[f] = cover.parts.size();
            cover.parts.push_back({{}, frame_in_x[f], QVec(x.dim())});
        }
        cover.assignment[i] = *part_of_frame[f];
        cover.parts[*part_of_frame[f]].members.push_back(i);
    }

    for (auto& p : cover.parts) {
        auto w = negatively_independent(x.subset(p.members));
        if (!w.feasible()) throw CertificateError("cone part is not negatively independent");
        p.witness = std::move(*w.separator);
    }
    if (cover.parts.size() > pow2(x.dim())) throw CertificateError("more than 2^d cone parts");
    return cover;
}

std::vector<ConeFrame> max_disjoint_family(const VecSet& x) {
    require_full_pss(x);
    std::vector<ConeFrame> kept;
    for (auto& f : enumerate_mns(x)) {
        const bool ok = std::all_of(kept.begin(), kept.end(), [&](const ConeFrame& k) { return compatible(x, f, k); });
        if (ok) kept.push_back(std::move(f));
    }
    if (kept.size() > pow2(x.dim())) throw CertificateError("disjoint frame family exceeds 2^d");
    return kept;
}

std::vector<ConeFrame> max_disjoint_family_exhaustive(const VecSet& x) {
    require_full_pss(x);
    const auto frames = enumerate_mns(x);
    const std::size_t m = frames.size();
    if (m > 12) throw PreconditionError("exhaustive family search limited to 12 frames");

    std::vector<Mask> conflicts(m, 0);
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = i + 1; j < m; ++j)
            if (!compatible(x, frames[i], frames[j])) {
                conflicts[i] |= Mask{1} << j;
                conflicts[j] |= Mask{1} << i;
            }

    Mask best = 0;
    for (Mask fam = 1; fam < (Mask{1} << m); ++fam) {
        if (std::popcount(fam) <= std::popcount(best)) continue;
        bool ok = true;
        for (Mask g = fam; g && ok; g &= g - 1)
            ok = (conflicts[static_cast<std::size_t>(std::countr_zero(g))] & fam) == 0;
        if (ok) best = fam;
    }
    std::vector<ConeFrame> out;
    for (auto k : mask_to_indices(best)) out.push_back(frames[k]);
    return out;
}

FrameRestriction restrict_frames(const VecSet& x, const IndexSet& y) {
    if (!std::is_sorted(y.begin(), y.end()) || std::adjacent_find(y.begin(), y.end()) != y.end() ||
        (!y.empty() && y.back() >= x.size()))
        throw PreconditionError("Y is not a subset of X");
    require_full_pss(x);
    const auto ysub = x.subset(y);
    require_full_pss(ysub);

    const auto mx = enumerate_mns(x);
    const auto my = enumerate_mns(ysub);
    std::vector<Mask> my_in_x;
    for (const auto& a : my) {
        Mask m = 0;
        for (auto k : a.members) m |= Mask{1} << y[k];
        my_in_x.push_back(m);
    }
    const Mask ymask = indices_to_mask(y);

    FrameRestriction r;
    r.image.resize(mx.size());
    r.preimage.resize(my.size());
    std::vector<Mask> restricted(mx.size());
    for (std::size_t b = 0; b < mx.size(); ++b) {
        restricted[b] = mx[b].mask() & ymask;
        auto it = std::find(my_in_x.begin(), my_in_x.end(), restricted[b]);
        if (it == my_in_x.end()) {
            r.non_frame_restrictions.push_back(b);
            continue;
        }
        const auto a = static_cast<std::size_t>(it - my_in_x.begin());
        r.image[b] = a;
        if (!r.preimage[a]) r.preimage[a] = b;
    }
    for (std::size_t a = 0; a < my.size(); ++a)
        if (!r.preimage[a]) r.missing_preimages.push_back(a);

    for (std::size_t b1 = 0; b1 < mx.size(); ++b1)
        for (std::size_t b2 = b1 + 1; b2 < mx.size(); ++b2) {
            if (restricted[b1] != restricted[b2]) continue;
            r.collisions.emplace_back(b1, b2);
            if (x.rank(mask_to_indices(mx[b1].mask() & mx[b2].mask())) != x.dim())
                r.low_rank_collisions.emplace_back(b1, b2);
        }
    return r;
}

}  // namespace psskit
