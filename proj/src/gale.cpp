#include "psskit/gale.hpp"

#include <algorithm>

namespace psskit {

namespace {

QMat as_rows(const std::vector<Dependency>& vs, std::size_t n) {
    QMat m(vs.size(), n);
    for (std::size_t r = 0; r < vs.size(); ++r)
        for (std::size_t c = 0; c < n; ++c) m(r, c) = vs[r].coeffs[c];
    return m;
}

// Appends candidates to `chosen` while they raise the rank; stops at `target`.
void extend_independent(std::vector<Dependency>& chosen, const std::vector<Dependency>& candidates,
                        std::size_t n, std::size_t target, std::vector<std::size_t>* picked = nullptr) {
    for (std::size_t k = 0; k < candidates.size() && chosen.size() < target; ++k) {
        chosen.push_back(candidates[k]);
        if (rank(as_rows(chosen, n)) != chosen.size()) {
            chosen.pop_back();
            continue;
        }
        if (picked) picked->push_back(k);
    }
}

}  // namespace

bool is_dependency(const VecSet& x, const Dependency& v) {
    if (v.coeffs.size() != x.size()) return false;
    return (x.columns() * QVec(v.coeffs)).is_zero();
}

std::vector<Dependency> dependency_basis(const VecSet& x) {
    std::vector<Dependency> out;
    for (auto& v : kernel_basis(x.columns())) out.push_back({v.entries()});
    return out;
}

Dependency characteristic(const VecSet& x, const Simplex& s) {
    Dependency d{std::vector<Rat>(x.size(), Rat(0))};
    for (auto m : s.members) d.coeffs[m] = 1;
    return d;
}

std::vector<Dependency> nonneg_dependency_basis(const VecSet& x) {
    if (!is_pss(x)) throw PreconditionError("set is not positively spanning");
    const auto simplices = enumerate_simplices(x);
    std::vector<Dependency> simplex_deps;
    for (const auto& s : simplices) {
        Dependency d{std::vector<Rat>(x.size(), Rat(0))};
        for (std::size_t k = 0; k < s.members.size(); ++k) d.coeffs[s.members[k]] = s.dependency[k];
        simplex_deps.push_back(std::move(d));
    }

    std::vector<Dependency> repaired;
    for (auto v : dependency_basis(x)) {
        for (std::size_t k = 0; k < x.size(); ++k) {
            if (sgn(v.coeffs[k]) >= 0) continue;
            const auto holders = simplices_containing(simplices, k);
            if (holders.empty()) throw CertificateError("element of a PSS outside every simplex");
            const auto& s = simplices[holders.front()];
            const auto pos = static_cast<std::size_t>(
                std::find(s.members.begin(), s.members.end(), k) - s.members.begin());
            const Rat scale = -v.coeffs[k] / s.dependency[pos];
            for (std::size_t j = 0; j < s.members.size(); ++j) v.coeffs[s.members[j]] += scale * s.dependency[j];
        }
        repaired.push_back(std::move(v));
    }

    const std::size_t dim = x.size() - x.rank();
    std::vector<Dependency> basis;
    extend_independent(basis, repaired, x.size(), dim);
    extend_independent(basis, simplex_deps, x.size(), dim);
    if (basis.size() != dim) throw CertificateError("nonnegative dependencies do not span D(X)");
    for (const auto& v : basis)
        for (const auto& c : v.coeffs)
            if (sgn(c) < 0 || !is_dependency(x, v)) throw CertificateError("nonnegative basis failed re-check");
    return basis;
}

bool is_locally_equilibrated(const VecSet& x, const SimplexSet& simplices) {
    return std::all_of(simplices.begin(), simplices.end(), [&](const Simplex& s) {
        QVec sum(x.dim());
        for (auto m : s.members) sum += x[m];
        return sum.is_zero();
    });
}

bool is_locally_equilibrated(const VecSet& x) { return is_locally_equilibrated(x, enumerate_simplices(x)); }

GaleDiagram gale_diagram(const VecSet& x, const std::vector<Dependency>& basis) {
    for (const auto& v : basis)
        if (!is_dependency(x, v)) throw PreconditionError("basis contains a non-dependency");
    const std::size_t dim = x.size() - x.rank();
    if (basis.size() != dim || (dim > 0 && rank(as_rows(basis, x.size())) != dim))
        throw PreconditionError("dependencies do not form a basis of D(X)");

    GaleDiagram g{basis, {}};
    for (std::size_t i = 0; i < x.size(); ++i) {
        QVec w(basis.size());
        Rat norm = 0;
        for (std::size_t k = 0; k < basis.size(); ++k) {
            w[k] = basis[k].coeffs[i];
            norm += abs(w[k]);
        }
        if (sgn(norm) != 0) w *= 1 / norm;
        g.points.push_back(std::move(w));
    }
    return g;
}

std::vector<std::size_t> characteristic_basis(const VecSet& x, const SimplexSet& simplices) {
    std::vector<Dependency> chis;
    for (const auto& s : simplices) chis.push_back(characteristic(x, s));
    const std::size_t dim = x.size() - x.rank();
    std::vector<Dependency> chosen;
    std::vector<std::size_t> picked;
    extend_independent(chosen, chis, x.size(), dim, &picked);
    if (chosen.size() != dim) throw CertificateError("characteristic functions do not span D(X)");
    return picked;
}

GaleTheoremReport verify_gale_theorem(const VecSet& x) {
    if (!is_pss(x)) throw PreconditionError("set is not positively spanning");
    const auto simplices = enumerate_simplices(x);
    if (!is_locally_equilibrated(x, simplices)) throw PreconditionError("set is not locally equilibrated");

    GaleTheoremReport r;
    r.basis_simplices = characteristic_basis(x, simplices);
    std::vector<Dependency> basis;
    for (auto k : r.basis_simplices) basis.push_back(characteristic(x, simplices[k]));
    r.diagram = gale_diagram(x, basis);

    for (std::size_t i = 0; i < x.size(); ++i)
        for (std::size_t j = i + 1; j < x.size(); ++j) {
            const bool same_point = r.diagram.points[i] == r.diagram.points[j];
            const bool same_simplices = simplices_containing(simplices, i) == simplices_containing(simplices, j);
            if (same_point != same_simplices) r.violations.emplace_back(i, j);
        }
    return r;
}

std::vector<IndexSet> point_classes(const GaleDiagram& g) {
    std::vector<IndexSet> classes;
    std::vector<bool> done(g.points.size(), false);
    for (std::size_t i = 0; i < g.points.size(); ++i) {
        if (done[i]) continue;
        IndexSet c;
        for (std::size_t j = i; j < g.points.size(); ++j)
            if (!done[j] && g.points[j] == g.points[i]) {
                c.push_back(j);
                done[j] = true;
            }
        classes.push_back(std::move(c));
    }
    return classes;
}

}  // namespace psskit
