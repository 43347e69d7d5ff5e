#pragma once

// The lattice L(X) of positively spanning subsets of a PSS X, ordered by
// inclusion, and its embedding Y -> S(Y) into the powerset of S(X).

#include <cstdint>
#include <optional>
#include <vector>

#include "psskit/simplicial.hpp"

namespace psskit {

struct LatticeElement {
    /// Y as a subset of X.
    Mask subset = 0;
    /// S(Y) as a bit set over the simplex list of the owning lattice.
    Mask simplices = 0;
    /// Identifies the owning lattice (hash of X); guards against mixing lattices.
    std::uint64_t owner = 0;

    IndexSet indices() const { return mask_to_indices(subset); }
    friend bool operator==(const LatticeElement&, const LatticeElement&) = default;
};

class SpanLattice {
public:
    /// Elements are the unions of all subfamilies of S(X), deduplicated and
    /// sorted by subset mask (so the empty set comes first and X last).
    /// Throws PreconditionError if X is not a PSS or has more than 20 simplices.
    static SpanLattice build(const VecSet& x);

    const std::vector<LatticeElement>& elements() const noexcept { return elements_; }
    std::size_t size() const noexcept { return elements_.size(); }
    const SimplexSet& simplices() const noexcept { return simplices_; }
    std::uint64_t id() const noexcept { return id_; }

    const LatticeElement& bottom() const { return elements_.front(); }
    const LatticeElement& top() const { return elements_.back(); }

    /// The element with the given subset, if Y is positively spanning.
    std::optional<LatticeElement> find(Mask subset) const;
    /// The union of the chosen simplices (bit k selects simplex k).
    LatticeElement from_simplices(Mask chosen) const;

    /// Union of S(Y n Z).
    LatticeElement meet(const LatticeElement& a, const LatticeElement& b) const;
    /// Y u Z.
    LatticeElement join(const LatticeElement& a, const LatticeElement& b) const;
    /// Union of S(X) \ S(Y).
    LatticeElement complement(const LatticeElement& a) const;
    bool leq(const LatticeElement& a, const LatticeElement& b) const;

    /// S(Y) for an arbitrary subset Y of X, as a bit set over simplices().
    Mask simplices_within(Mask subset) const;

private:
    void check_owner(const LatticeElement& e) const;
    LatticeElement make(Mask subset) const;

    std::uint64_t id_ = 0;
    std::size_t n_ = 0;
    SimplexSet simplices_;
    std::vector<Mask> simplex_masks_;
    std::vector<LatticeElement> elements_;
};

/// Deterministic fingerprint of a vector set (dimension and exact entries).
std::uint64_t fingerprint(const VecSet& x);

}  // namespace psskit
