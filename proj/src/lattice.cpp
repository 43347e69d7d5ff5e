#include "psskit/lattice.hpp"

#include <algorithm>
#include <bit>
#include <set>

namespace psskit {

namespace {

// FNV-1a over the textual form keeps the fingerprint platform independent.
std::uint64_t fnv(std::uint64_t h, const std::string& s) {
    for (unsigned char c : s) {
        h ^= c;
        h *= 1099511628211ULL;
    }
    return h;
}

}  // namespace

std::uint64_t fingerprint(const VecSet& x) {
    std::uint64_t h = 1469598103934665603ULL;
    h = fnv(h, std::to_string(x.dim()) + ";");
    for (const auto& v : x) h = fnv(h, to_string(v) + ";");
    return h;
}

SpanLattice SpanLattice::build(const VecSet& x) {
    if (x.size() > kMaxMaskSize) throw PreconditionError("vector set too large for lattice construction");
    if (!is_pss(x)) throw PreconditionError("set is not positively spanning");
    SpanLattice l;
    l.id_ = fingerprint(x);
    l.n_ = x.size();
    l.simplices_ = enumerate_simplices(x);
    if (l.simplices_.size() > 20) throw PreconditionError("too many simplices for lattice construction");
    for (const auto& s : l.simplices_) l.simplex_masks_.push_back(s.mask());

    std::set<Mask> unions;
    const Mask families = Mask{1} << l.simplices_.size();
    for (Mask f = 0; f < families; ++f) {
        Mask u = 0;
        for (Mask g = f; g; g &= g - 1) u |= l.simplex_masks_[static_cast<std::size_t>(std::countr_zero(g))];
        unions.insert(u);
    }
    for (Mask u : unions) l.elements_.push_back(l.make(u));
    return l;
}

Mask SpanLattice::simplices_within(Mask subset) const {
    Mask out = 0;
    for (std::size_t k = 0; k < simplex_masks_.size(); ++k)
        if (is_submask(simplex_masks_[k], subset)) out |= Mask{1} << k;
    return out;
}

LatticeElement SpanLattice::make(Mask subset) const { return {subset, simplices_within(subset), id_}; }

std::optional<LatticeElement> SpanLattice::find(Mask subset) const {
    auto it = std::lower_bound(elements_.begin(), elements_.end(), subset,
                               [](const LatticeElement& e, Mask m) { return e.subset < m; });
    if (it == elements_.end() || it->subset != subset) return std::nullopt;
    return *it;
}

LatticeElement SpanLattice::from_simplices(Mask chosen) const {
    Mask u = 0;
    for (Mask g = chosen; g; g &= g - 1) {
        const auto k = static_cast<std::size_t>(std::countr_zero(g));
        if (k >= simplex_masks_.size()) throw PreconditionError("simplex index out of range");
        u |= simplex_masks_[k];
    }
    return make(u);
}

void SpanLattice::check_owner(const LatticeElement& e) const {
    if (e.owner != id_) throw PreconditionError("element belongs to a different lattice");
    const auto found = find(e.subset);
    if (!found || found->simplices != e.simplices) throw PreconditionError("element is not a member of this lattice");
}

LatticeElement SpanLattice::meet(const LatticeElement& a, const LatticeElement& b) const {
    check_owner(a);
    check_owner(b);
    return from_simplices(simplices_within(a.subset & b.subset));
}

LatticeElement SpanLattice::join(const LatticeElement& a, const LatticeElement& b) const {
    check_owner(a);
    check_owner(b);
    return make(a.subset | b.subset);
}

LatticeElement SpanLattice::complement(const LatticeElement& a) const {
    check_owner(a);
    const Mask all = full_mask(simplex_masks_.size());
    return from_simplices(all & ~a.simplices);
}

bool SpanLattice::leq(const LatticeElement& a, const LatticeElement& b) const {
    check_owner(a);
    check_owner(b);
    return is_submask(a.subset, b.subset);
}

}  // namespace psskit
