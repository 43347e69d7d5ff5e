#include "psskit/simplicial.hpp"

#include <algorithm>
#include <bit>

namespace psskit {

std::optional<Simplex> simplex_on(const VecSet& x, const IndexSet& ids) {
    if (ids.size() < 2) return std::nullopt;
    const auto kernel = kernel_basis(x.columns(ids));
    if (kernel.size() != 1) return std::nullopt;
    const QVec& v = kernel.front();
    for (std::size_t k = 0; k < v.dim(); ++k)
        if (sgn(v[k]) <= 0) return std::nullopt;
    return Simplex{ids, v.entries()};
}

std::optional<Simplex> is_simplex(const VecSet& s) { return simplex_on(s, s.all_indices()); }

namespace {

// Independent sets never exceed rank(X), so simplices have at most rank(X) + 1 members.
void grow_independent(const VecSet& x, IndexSet& current, std::size_t start, SimplexSet& out) {
    for (std::size_t j = start; j < x.size(); ++j) {
        current.push_back(j);
        if (x.rank(current) == current.size()) {
            grow_independent(x, current, j + 1, out);
        } else if (auto s = simplex_on(x, current)) {
            out.push_back(std::move(*s));
        }
        current.pop_back();
    }
}

}  // namespace

SimplexSet enumerate_simplices(const VecSet& x) {
    SimplexSet out;
    IndexSet current;
    grow_independent(x, current, 0, out);
    std::sort(out.begin(), out.end(), [](const Simplex& a, const Simplex& b) { return a.members < b.members; });
    return out;
}

std::vector<std::size_t> simplices_containing(const SimplexSet& simplices, std::size_t i) {
    std::vector<std::size_t> out;
    for (std::size_t k = 0; k < simplices.size(); ++k)
        if (std::binary_search(simplices[k].members.begin(), simplices[k].members.end(), i)) out.push_back(k);
    return out;
}

FactorizationResult factorization_condition(const VecSet& x, bool spanning_only) {
    return factorization_condition(x, enumerate_simplices(x), spanning_only);
}

FactorizationResult factorization_condition(const VecSet& x, const SimplexSet& simplices, bool spanning_only) {
    if (x.size() > 24) throw PreconditionError("factorization scan limited to 24 elements");
    const SubsetRanks rank(x);
    std::vector<Mask> smask;
    for (const auto& s : simplices) smask.push_back(s.mask());

    const Mask end = Mask{1} << x.size();
    for (Mask y = 0; y < end; ++y) {
        if (spanning_only) {
            Mask covered = 0;
            for (Mask s : smask)
                if (is_submask(s, y)) covered |= s;
            if (covered != y) continue;
        }
        const std::size_t ry = rank(y);
        for (std::size_t k = 0; k < smask.size(); ++k) {
            const Mask s = smask[k];
            const std::size_t meet_dim = ry + rank(s) - rank(y | s);
            if (rank(y & s) != meet_dim) return {false, mask_to_indices(y), k};
        }
    }
    return {};
}

std::optional<std::string> decomposition_violation(const VecSet& x, const BasisDecomposition& dec) {
    const std::size_t r = x.rank();
    const Mask basis = indices_to_mask(dec.basis);
    if (x.rank(dec.basis) != dec.basis.size()) return "basis is linearly dependent";
    if (dec.basis.size() != r) return "basis does not span the linear hull";
    if (dec.pairs.empty() || dec.pairs.size() > r) return "number of extra elements outside [1, rank]";

    Mask seen = basis;
    for (const auto& p : dec.pairs) {
        if (p.x >= x.size()) return "extra element out of range";
        if (mask_contains(seen, p.x)) return "extra elements are not disjoint from the basis";
        seen |= Mask{1} << p.x;
        if (!is_submask(indices_to_mask(p.a), basis)) return "A_i is not inside the basis";
        IndexSet with = p.a;
        with.push_back(p.x);
        if (p.a.empty() || x.rank(with) != p.a.size() || !in_rint_positive_span(-x[p.x], x.subset(p.a)))
            return "element " + std::to_string(p.x) + " is not in -rint pos(A_i)";
    }
    if (seen != full_mask(x.size())) return "basis and extra elements do not cover the set";

    for (std::size_t i = 0; i < dec.pairs.size(); ++i)
        for (std::size_t j = 0; j < dec.pairs.size(); ++j)
            if (i != j && is_submask(indices_to_mask(dec.pairs[i].a), indices_to_mask(dec.pairs[j].a)))
                return "A_i sets do not form an antichain";

    for (const auto& s : enumerate_simplices(x)) {
        const auto common = static_cast<std::size_t>(std::popcount(s.mask() & basis));
        if (common + 1 != s.members.size()) return "a simplex does not share all but one element with the basis";
    }
    return std::nullopt;
}

std::optional<BasisDecomposition> try_basis_decomposition(const VecSet& x) {
    const auto simplices = enumerate_simplices(x);
    if (simplices.empty()) return std::nullopt;
    BasisDecomposition dec;
    Mask basis = 0;
    for (std::size_t k = 0; k < simplices.size(); ++k) {
        std::optional<std::size_t> priv;
        for (auto m : simplices[k].members) {
            if (simplices_containing(simplices, m).size() == 1) {
                priv = m;
                break;
            }
        }
        if (!priv) return std::nullopt;
        IndexSet a;
        for (auto m : simplices[k].members)
            if (m != *priv) a.push_back(m);
        basis |= indices_to_mask(a);
        dec.pairs.push_back({*priv, std::move(a)});
    }
    dec.basis = mask_to_indices(basis);
    if (decomposition_violation(x, dec)) return std::nullopt;
    return dec;
}

BasisDecomposition basis_decomposition(const VecSet& x) {
    if (x.empty() || !is_positive_basis(x)) throw PreconditionError("set is not a positive basis");
    auto dec = try_basis_decomposition(x);
    if (!dec) throw CertificateError("positive basis without a valid basis decomposition");
    return std::move(*dec);
}

ReayPartition reay_partition(const VecSet& x) {
    const auto dec = basis_decomposition(x);
    const std::size_t n = dec.pairs.size();
    std::vector<bool> used(n, false);
    Mask taken = 0;
    ReayPartition out;
    for (std::size_t step = 0; step < n; ++step) {
        // Pick the simplex contributing the most new basis elements; ties by index.
        std::size_t best = n;
        int best_size = -1;
        for (std::size_t i = 0; i < n; ++i) {
            if (used[i]) continue;
            const int fresh = std::popcount(indices_to_mask(dec.pairs[i].a) & ~taken);
            if (fresh > best_size) {
                best = i;
                best_size = fresh;
            }
        }
        used[best] = true;
        const Mask fresh = indices_to_mask(dec.pairs[best].a) & ~taken;
        taken |= fresh;
        out.parts.push_back(mask_to_indices(fresh | (Mask{1} << dec.pairs[best].x)));
    }

    Mask prefix = 0;
    std::size_t total = 0;
    for (std::size_t k = 0; k < out.parts.size(); ++k) {
        const auto& part = out.parts[k];
        if (part.size() < 2 || (k > 0 && part.size() > out.parts[k - 1].size()))
            throw CertificateError("Reay parts are not non-increasing with size >= 2");
        prefix |= indices_to_mask(part);
        total += part.size();
        const auto sub = x.subset(prefix);
        if (!is_pss(sub) || sub.rank() != total - (k + 1))
            throw CertificateError("Reay prefix does not span a subspace of the expected dimension");
    }
    if (prefix != full_mask(x.size())) throw CertificateError("Reay parts do not cover the set");
    return out;
}

SxyFlags sxy_classify(const VecSet& s, const QVec& y) {
    if (!is_simplex(s)) throw PreconditionError("first argument is not a simplex");
    if (y.dim() != s.dim()) throw DimensionError("y has wrong dimension");
    if (s.find(y)) throw PreconditionError("y is an element of the simplex");
    std::vector<QVec> with_y = s.vectors();
    with_y.push_back(y);
    const VecSet sy(s.dim(), std::move(with_y));
    const std::size_t r = s.rank();
    if (sy.rank() != r) throw PreconditionError("y is outside the linear span of the simplex");

    SxyFlags f;
    for (std::size_t i = 0; i < s.size() && !f.exists_swap; ++i) {
        const auto swapped = replace_element(s, i, y);
        f.exists_swap = in_positive_span(s[i], swapped.set);
    }
    const auto rs = enumerate_simplices(sy);
    f.all_simplices_full_span =
        std::all_of(rs.begin(), rs.end(), [&](const Simplex& rr) { return sy.rank(rr.members) == r; });
    f.neg_y_outside_skeleton = !skeleton_contains(-y, s);
    return f;
}

}  // namespace psskit
