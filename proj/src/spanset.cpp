#include "psskit/spanset.hpp"

#include <algorithm>
#include <set>

namespace psskit {

namespace {

IndexSet all_but(std::size_t n, std::size_t skip) {
    IndexSet ids;
    for (std::size_t i = 0; i < n; ++i)
        if (i != skip) ids.push_back(i);
    return ids;
}

std::map<std::size_t, Rat> nonzero_map(const IndexSet& ids, const std::vector<Rat>& c) {
    std::map<std::size_t, Rat> out;
    for (std::size_t k = 0; k < ids.size(); ++k)
        if (sgn(c[k]) != 0) out.emplace(ids[k], c[k]);
    return out;
}

DependenceReport cone_dependence(const VecSet& x, bool negate) {
    for (std::size_t i = 0; i < x.size(); ++i) {
        const auto rest = all_but(x.size(), i);
        const QVec target = negate ? -x[i] : x[i];
        if (auto c = positive_combination(target, x, rest))
            return {true, i, nonzero_map(rest, *c)};
    }
    return {};
}

// Minimal-ratio step: alpha -= gamma * beta with gamma = min alpha_i / beta_i over
// beta_i > 0; returns false if beta has no positive entry.
bool cancel_along(std::vector<Rat>& alpha, const std::vector<Rat>& beta) {
    std::optional<Rat> gamma;
    for (std::size_t i = 0; i < alpha.size(); ++i) {
        if (sgn(beta[i]) <= 0) continue;
        Rat r = alpha[i] / beta[i];
        if (!gamma || r < *gamma) gamma = r;
    }
    if (!gamma) return false;
    for (std::size_t i = 0; i < alpha.size(); ++i) alpha[i] -= *gamma * beta[i];
    return true;
}

void drop_zeros(IndexSet& support, std::vector<Rat>& alpha) {
    IndexSet s;
    std::vector<Rat> a;
    for (std::size_t k = 0; k < support.size(); ++k) {
        if (sgn(alpha[k]) < 0) throw CertificateError("caratheodory step produced a negative coefficient");
        if (sgn(alpha[k]) > 0) {
            s.push_back(support[k]);
            a.push_back(alpha[k]);
        }
    }
    support = std::move(s);
    alpha = std::move(a);
}

}  // namespace

std::optional<std::vector<Rat>> positive_combination(const QVec& p, const VecSet& x, const IndexSet& ids) {
    if (p.dim() != x.dim()) throw DimensionError("point has wrong dimension");
    if (ids.empty()) {
        if (p.is_zero()) return std::vector<Rat>{};
        return std::nullopt;
    }
    auto w = solve_nonneg(x.columns(ids), p);
    if (!w.feasible()) return std::nullopt;
    return std::move(*w.coeffs);
}

bool in_positive_span(const QVec& p, const VecSet& x, const IndexSet& ids) {
    return positive_combination(p, x, ids).has_value();
}

bool in_positive_span(const QVec& p, const VecSet& x) { return in_positive_span(p, x, x.all_indices()); }

DependenceReport linearly_dependent(const VecSet& x) {
    const auto kernel = kernel_basis(x.columns());
    if (kernel.empty()) return {};
    for (std::size_t i = 0; i < x.size(); ++i) {
        for (const auto& v : kernel) {
            if (sgn(v[i]) == 0) continue;
            std::map<std::size_t, Rat> coeffs;
            for (std::size_t j = 0; j < x.size(); ++j)
                if (j != i && sgn(v[j]) != 0) coeffs.emplace(j, -v[j] / v[i]);
            return {true, i, std::move(coeffs)};
        }
    }
    throw CertificateError("nontrivial kernel without a nonzero entry");
}

DependenceReport positively_dependent(const VecSet& x) { return cone_dependence(x, false); }
DependenceReport negatively_dependent(const VecSet& x) { return cone_dependence(x, true); }

FeasWitness negatively_independent(const VecSet& x) { return strict_separator(x.vectors(), x.dim()); }

bool is_pss(const VecSet& x) {
    const auto all = x.all_indices();
    return std::all_of(x.begin(), x.end(), [&](const QVec& v) { return in_positive_span(-v, x, all); });
}

bool is_positive_basis(const VecSet& x) { return is_pss(x) && !positively_dependent(x).verdict; }

SpanPoint caratheodory_reduce(const QVec& p, const VecSet& x) {
    auto start = positive_combination(p, x, x.all_indices());
    if (!start) throw PreconditionError("point " + to_string(p) + " is not in the positive span");

    IndexSet support = x.all_indices();
    std::vector<Rat> alpha = std::move(*start);
    drop_zeros(support, alpha);

    // Phase 1: while the support carries a nonnegative dependency beta
    // (sum beta = 1), cancel it. Each step removes at least one element.
    for (;;) {
        if (support.empty()) break;
        QMat a(x.dim() + 1, support.size());
        for (std::size_t c = 0; c < support.size(); ++c) {
            for (std::size_t r = 0; r < x.dim(); ++r) a(r, c) = x[support[c]][r];
            a(x.dim(), c) = 1;
        }
        QVec b(x.dim() + 1);
        b[x.dim()] = 1;
        const auto beta = solve_nonneg(a, b);
        if (!beta.feasible()) break;
        cancel_along(alpha, *beta.coeffs);
        drop_zeros(support, alpha);
    }

    // Phase 2: the support is negatively independent, so every nonzero kernel
    // vector has entries of both signs; cancel until linearly independent.
    for (;;) {
        const auto kernel = kernel_basis(x.columns(support));
        if (kernel.empty()) break;
        std::vector<Rat> lambda(kernel.front().entries());
        if (!cancel_along(alpha, lambda)) {
            for (auto& l : lambda) l = -l;
            if (!cancel_along(alpha, lambda)) throw CertificateError("zero kernel vector");
        }
        drop_zeros(support, alpha);
    }

    SpanPoint out{p, {}};
    QVec check(x.dim());
    for (std::size_t k = 0; k < support.size(); ++k) {
        out.coeffs.emplace(support[k], alpha[k]);
        check += x[support[k]] * alpha[k];
    }
    if (!(check == p) || support.size() > x.dim()) throw CertificateError("caratheodory reduction failed re-check");
    return out;
}

std::vector<Mask> hyperplane_flats(const VecSet& x) {
    const std::size_t r = x.rank();
    if (r == 0) return {};
    std::set<Mask> flats;
    for_each_combination(x.size(), r - 1, [&](const IndexSet& base) {
        if (x.rank(base) != r - 1) return;
        Mask closure = 0;
        IndexSet probe = base;
        probe.push_back(0);
        for (std::size_t j = 0; j < x.size(); ++j) {
            probe.back() = j;
            if (x.rank(probe) == r - 1) closure |= Mask{1} << j;
        }
        flats.insert(closure);
    });
    return {flats.begin(), flats.end()};
}

bool skeleton_contains(const QVec& p, const VecSet& x) {
    // Any A with lin(A) strictly inside lin(X) lies in some hyperplane flat F,
    // and pos(A) is contained in pos(F), so the flats suffice.
    for (Mask f : hyperplane_flats(x))
        if (in_positive_span(p, x, mask_to_indices(f))) return true;
    return false;
}

bool core_contains(const QVec& p, const VecSet& x) {
    return in_positive_span(p, x) && !skeleton_contains(p, x);
}

bool in_rint_positive_span(const QVec& p, const VecSet& b) {
    if (b.rank() != b.size()) throw PreconditionError("set is not linearly independent");
    const auto c = solve_linear(b.columns(), p);
    if (!c) throw PreconditionError("point " + to_string(p) + " is outside the linear span");
    for (std::size_t i = 0; i < c->dim(); ++i)
        if (sgn((*c)[i]) <= 0) return false;
    return true;
}

Replacement replace_element(const VecSet& a, std::size_t x, const QVec& y) {
    if (x >= a.size()) throw PreconditionError("element index " + std::to_string(x) + " is not in the set");
    if (y.dim() != a.dim()) throw DimensionError("replacement has wrong dimension");
    if (y.is_zero()) throw ZeroVectorError("replacement vector is zero", x);

    const auto existing = a.find(y);
    std::vector<QVec> vs;
    std::vector<std::optional<std::size_t>> index_map(a.size());
    std::size_t y_index = 0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (i == x) {
            if (existing && *existing != x) continue;
            y_index = vs.size();
            vs.push_back(y);
            continue;
        }
        if (existing && *existing == i) y_index = vs.size();
        index_map[i] = vs.size();
        vs.push_back(a[i]);
    }
    if (existing && *existing == x) index_map[x] = y_index;
    return {VecSet(a.dim(), std::move(vs)), std::move(index_map), y_index};
}

IndexSet extract_positive_basis_indices(const VecSet& x) {
    if (!is_pss(x)) throw PreconditionError("set is not positively spanning");
    IndexSet kept = x.all_indices();
    for (std::size_t i = 0; i < x.size(); ++i) {
        IndexSet rest;
        for (auto k : kept)
            if (k != i) rest.push_back(k);
        if (in_positive_span(x[i], x, rest)) kept = std::move(rest);
    }
    return kept;
}

VecSet extract_positive_basis(const VecSet& x) { return x.subset(extract_positive_basis_indices(x)); }

}  // namespace psskit
