#include "psskit/vecset.hpp"

#include <bit>

namespace psskit {

IndexSet mask_to_indices(Mask m) {
    IndexSet out;
    while (m) {
        out.push_back(static_cast<std::size_t>(std::countr_zero(m)));
        m &= m - 1;
    }
    return out;
}

Mask indices_to_mask(const IndexSet& s) {
    Mask m = 0;
    for (auto i : s) {
        if (i >= kMaxMaskSize) throw Error("index too large for subset scans");
        m |= Mask{1} << i;
    }
    return m;
}

VecSet::VecSet(std::size_t dim, std::vector<QVec> vectors) : dim_(dim), vectors_(std::move(vectors)) {
    if (dim_ == 0) throw DimensionError("dimension must be positive");
    for (std::size_t i = 0; i < vectors_.size(); ++i) {
        if (vectors_[i].dim() != dim_)
            throw DimensionError("vector " + std::to_string(i) + " has dimension " +
                                 std::to_string(vectors_[i].dim()) + ", expected " + std::to_string(dim_));
        // Entries built directly as mpq_class(p, q) may be unreduced; GMP arithmetic assumes canonical form.
        for (std::size_t j = 0; j < dim_; ++j) {
            Rat& r = vectors_[i][j];
            if (sgn(r.get_den()) == 0)
                throw DimensionError("vector " + std::to_string(i) + ", entry " + std::to_string(j) + ": zero denominator");
            r.canonicalize();
        }
        if (vectors_[i].is_zero()) throw ZeroVectorError("vector " + std::to_string(i) + " is zero", i);
        for (std::size_t j = 0; j < i; ++j)
            if (vectors_[j] == vectors_[i])
                throw DuplicateVectorError(
                    "vector " + std::to_string(i) + " duplicates vector " + std::to_string(j), i);
    }
}

IndexSet VecSet::all_indices() const {
    IndexSet ids(size());
    for (std::size_t i = 0; i < ids.size(); ++i) ids[i] = i;
    return ids;
}

std::optional<std::size_t> VecSet::find(const QVec& v) const {
    for (std::size_t i = 0; i < size(); ++i)
        if (vectors_[i] == v) return i;
    return std::nullopt;
}

VecSet VecSet::subset(const IndexSet& ids) const {
    std::vector<QVec> vs;
    vs.reserve(ids.size());
    for (auto i : ids) vs.push_back(vectors_.at(i));
    return VecSet(dim_, std::move(vs));
}

QMat VecSet::columns() const { return QMat::from_columns(vectors_, dim_); }

QMat VecSet::columns(const IndexSet& ids) const {
    QMat m(dim_, ids.size());
    for (std::size_t c = 0; c < ids.size(); ++c)
        for (std::size_t r = 0; r < dim_; ++r) m(r, c) = vectors_.at(ids[c])[r];
    return m;
}

std::size_t VecSet::rank() const { return psskit::rank(columns()); }
std::size_t VecSet::rank(const IndexSet& ids) const { return psskit::rank(columns(ids)); }

SubsetRanks::SubsetRanks(const VecSet& x) : x_(&x) {
    if (x.size() > kMaxMaskSize) throw Error("vector set too large for subset scans");
}

std::size_t SubsetRanks::operator()(Mask m) const {
    if (m == 0) return 0;
    auto it = cache_.find(m);
    if (it != cache_.end()) return it->second;
    const auto r = x_->rank(mask_to_indices(m));
    cache_.emplace(m, r);
    return r;
}

}  // namespace psskit
