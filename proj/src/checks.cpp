#include "psskit/checks.hpp"

#include <algorithm>
#include <bit>
#include <sstream>

#include "psskit/conical.hpp"
#include "psskit/gale.hpp"
#include "psskit/lattice.hpp"
#include "psskit/simplicial.hpp"
#include "psskit/spanset.hpp"

namespace psskit {

namespace {

using Status = CheckResult::Status;

CheckResult passed(const char* name, std::string detail = {}) { return {name, Status::Passed, std::move(detail)}; }
CheckResult failed(const char* name, std::string detail) { return {name, Status::Failed, std::move(detail)}; }
CheckResult skipped(const char* name, std::string why) { return {name, Status::Skipped, std::move(why)}; }

std::string set_text(const IndexSet& s) {
    std::ostringstream os;
    os << '{';
    for (std::size_t k = 0; k < s.size(); ++k) os << (k ? "," : "") << s[k];
    os << '}';
    return os.str();
}

bool full_dimensional(const VecSet& x) { return !x.empty() && x.rank() == x.dim(); }

Mask simplex_union(const SimplexSet& sims) {
    Mask m = 0;
    for (const auto& s : sims) m |= s.mask();
    return m;
}

bool separator_valid(const QVec& z, const VecSet& x, const IndexSet& ids) {
    return std::all_of(ids.begin(), ids.end(), [&](std::size_t i) { return dot(z, x[i]) >= 1; });
}

// X is a union of 1-simplices, and d of them are built on independent directions.
bool union_of_one_simplices_with_cross(const VecSet& x, const SimplexSet& sims) {
    IndexSet directions;
    Mask covered = 0;
    for (const auto& s : sims) {
        if (s.members.size() != 2) continue;
        covered |= s.mask();
        directions.push_back(s.members.front());
    }
    return covered == full_mask(x.size()) && x.rank(directions) == x.dim();
}

}  // namespace

const char* to_string(CheckResult::Status s) {
    switch (s) {
        case Status::Passed: return "passed";
        case Status::Failed: return "failed";
        case Status::Skipped: return "skipped";
    }
    return "?";
}

CheckResult check_separator_dichotomy(const VecSet& x) {
    constexpr const char* name = "separator_dichotomy";
    const auto w = negatively_independent(x);
    const auto sims = enumerate_simplices(x);
    if (w.feasible() && !separator_valid(*w.separator, x, x.all_indices()))
        return failed(name, "separator fails re-check");
    if (w.feasible() == sims.empty()) {
        return passed(name, w.feasible() ? "separator found, no simplex"
                                         : "no separator, simplex " + set_text(sims.front().members));
    }
    return failed(name, w.feasible() ? "separator and simplex " + set_text(sims.front().members) + " both exist"
                                     : "neither separator nor simplex");
}

CheckResult check_planar_independence(const VecSet& x) {
    constexpr const char* name = "planar_independence";
    if (x.dim() != 2) return skipped(name, "dimension is not 2");
    const bool lin_ind = !linearly_dependent(x).verdict;
    const bool pos_ind = !positively_dependent(x).verdict;
    const bool neg_ind = negatively_independent(x).feasible();
    if (lin_ind == (pos_ind && neg_ind)) return passed(name);
    return failed(name, "linear independence " + std::string(lin_ind ? "holds" : "fails") +
                            " but positive/negative independence disagree");
}

CheckResult check_pss_characterizations(const VecSet& x) {
    constexpr const char* name = "pss_characterizations";
    const bool pss = is_pss(x);
    bool negations = true;
    for (const auto& v : x) negations = negations && in_positive_span(-v, x);
    const bool covered = simplex_union(enumerate_simplices(x)) == full_mask(x.size());
    if (pss == negations && negations == covered) return passed(name, pss ? "PSS" : "not a PSS");
    return failed(name, std::string("is_pss=") + (pss ? "true" : "false") + " negations=" +
                            (negations ? "true" : "false") + " simplex-cover=" + (covered ? "true" : "false"));
}

CheckResult check_simplex_structure(const VecSet& x) {
    constexpr const char* name = "simplex_structure";
    const auto sims = enumerate_simplices(x);
    for (const auto& s : sims) {
        const std::size_t r = x.rank(s.members);
        if (s.members.size() != r + 1 || s.members.size() > x.dim() + 1)
            return failed(name, "simplex " + set_text(s.members) + " has the wrong size");
        if (!std::all_of(s.dependency.begin(), s.dependency.end(), [](const Rat& a) { return sgn(a) > 0; }))
            return failed(name, "simplex " + set_text(s.members) + " has a non-positive dependency");
        for (auto z : s.members) {
            IndexSet rest;
            for (auto m : s.members)
                if (m != z) rest.push_back(m);
            if (x.rank(rest) != rest.size())
                return failed(name, "simplex " + set_text(s.members) + " minus " + std::to_string(z) + " is dependent");
            if (!rest.empty() && !in_rint_positive_span(-x[z], x.subset(rest)))
                return failed(name, "element " + std::to_string(z) + " not in -rint of the rest of its simplex");
        }
    }
    return passed(name, std::to_string(sims.size()) + " simplices");
}

CheckResult check_independence_equivalence(const VecSet& x) {
    constexpr const char* name = "independence_equivalence";
    if (!is_pss(x)) return skipped(name, "not a PSS");
    if (x.size() > 16) return skipped(name, "more than 16 elements");
    const auto sims = enumerate_simplices(x);
    const bool i = !positively_dependent(x).verdict;
    const auto ii = factorization_condition(x, sims, false);
    const auto iii = factorization_condition(x, sims, true);
    const bool iv = try_basis_decomposition(x).has_value();
    std::string values = std::string("(i)=") + (i ? "1" : "0") + " (ii)=" + (ii.holds ? "1" : "0") +
                         " (iii)=" + (iii.holds ? "1" : "0") + " (iv)=" + (iv ? "1" : "0");
    if (i == ii.holds && i == iii.holds && i == iv) return passed(name, values);
    return failed(name, values);
}

CheckResult check_main_bounds(const VecSet& x) {
    constexpr const char* name = "main_bounds";
    if (!full_dimensional(x) || !is_positive_basis(x)) return skipped(name, "not a full-dimensional positive basis");
    const auto r = verify_main_bounds(x);
    std::string values = "n=" + std::to_string(r.simplex_count) + " |X|=" + std::to_string(r.card) +
                         " |M|=" + std::to_string(r.mns_count);
    if (r.ok()) return passed(name, values);
    return failed(name, values + ": " + r.violations.front());
}

CheckResult check_caratheodory(const VecSet& x) {
    constexpr const char* name = "caratheodory";
    std::vector<QVec> points(x.begin(), x.end());
    QVec total(x.dim());
    for (const auto& v : x) total += v;
    points.push_back(total);
    if (x.size() <= 10)
        for (std::size_t i = 0; i < x.size(); ++i)
            for (std::size_t j = i + 1; j < x.size(); ++j) points.push_back(x[i] + x[j]);

    const std::size_t r = x.rank();
    for (const auto& p : points) {
        const auto sp = caratheodory_reduce(p, x);
        QVec back(x.dim());
        IndexSet support;
        for (const auto& [k, a] : sp.coeffs) {
            if (sgn(a) <= 0) return failed(name, "non-positive coefficient for " + to_string(p));
            back += x[k] * a;
            support.push_back(k);
        }
        if (!(back == p)) return failed(name, "reduction does not reconstruct " + to_string(p));
        if (support.size() > r) return failed(name, "support larger than rank for " + to_string(p));
        if (!negatively_independent(x.subset(support)).feasible())
            return failed(name, "support " + set_text(support) + " is negatively dependent");
    }
    return passed(name, std::to_string(points.size()) + " points");
}

CheckResult check_lattice(const VecSet& x) {
    constexpr const char* name = "lattice";
    if (!is_pss(x)) return skipped(name, "not a PSS");
    if (enumerate_simplices(x).size() > 10) return skipped(name, "more than 10 simplices");
    const auto lat = SpanLattice::build(x);
    const auto& els = lat.elements();
    const std::size_t ns = lat.simplices().size();

    for (std::size_t a = 0; a < els.size(); ++a)
        for (std::size_t b = a + 1; b < els.size(); ++b)
            if (els[a].simplices == els[b].simplices) return failed(name, "Y -> S(Y) is not injective");
    const bool positive_basis = is_positive_basis(x);
    const bool bijective = els.size() == (std::size_t{1} << ns);
    // Only one direction holds: {e1, -e1, 2e1} is dependent with a full lattice.
    if (positive_basis && !bijective)
        return failed(name, "lattice has " + std::to_string(els.size()) + " elements over " + std::to_string(ns) +
                                " simplices, positive basis=" + (positive_basis ? "true" : "false"));

    if (els.size() <= 256) {
        for (const auto& a : els)
            for (const auto& b : els) {
                if (lat.simplices_within(a.subset & b.subset) != (a.simplices & b.simplices))
                    return failed(name, "S(Y n Z) != S(Y) n S(Z)");
                const Mask un = lat.simplices_within(a.subset | b.subset);
                if ((un & (a.simplices | b.simplices)) != (a.simplices | b.simplices))
                    return failed(name, "S(Y) u S(Z) not inside S(Y u Z)");
                if (lat.leq(a, b) != is_submask(a.simplices, b.simplices))
                    return failed(name, "order does not match simplex inclusion");
                if (!lat.find(lat.meet(a, b).subset) || !lat.find(lat.join(a, b).subset))
                    return failed(name, "meet or join left the lattice");
            }
    }
    if (positive_basis) {
        for (const auto& a : els) {
            const auto c = lat.complement(a);
            if (!(lat.complement(c) == a)) return failed(name, "complement is not an involution");
            if (!(lat.join(a, c) == lat.top()) || !(lat.meet(a, c) == lat.bottom()))
                return failed(name, "complement laws fail");
        }
    }
    return passed(name, std::to_string(els.size()) + " elements");
}

CheckResult check_frames(const VecSet& x) {
    constexpr const char* name = "frames";
    if (x.size() > 20) return skipped(name, "more than 20 elements");
    const bool spanning = full_dimensional(x) && is_pss(x);
    const auto frames = enumerate_mns(x);
    for (const auto& f : frames) {
        if (!separator_valid(f.witness, x, f.members)) return failed(name, "witness fails for " + set_text(f.members));
        IndexSet halfspace;
        for (std::size_t i = 0; i < x.size(); ++i)
            if (sgn(dot(f.witness, x[i])) > 0) halfspace.push_back(i);
        if (halfspace != f.members) return failed(name, "frame " + set_text(f.members) + " is not its witness halfspace");
        if (spanning && x.rank(f.members) != x.dim())
            return failed(name, "frame " + set_text(f.members) + " is not full-dimensional");
    }
    return passed(name, std::to_string(frames.size()) + " frames");
}

CheckResult check_frames_from_simplices(const VecSet& x) {
    constexpr const char* name = "frames_from_simplices";
    if (!is_pss(x)) return skipped(name, "not a PSS");
    if (x.size() > 14) return skipped(name, "more than 14 elements");
    const auto sims = enumerate_simplices(x);
    const auto frames = enumerate_mns(x);
    std::vector<Mask> frame_masks;
    for (const auto& f : frames) frame_masks.push_back(f.mask());

    auto meets_all_but_one = [&](Mask a) {
        return std::all_of(sims.begin(), sims.end(), [&](const Simplex& s) {
            return static_cast<std::size_t>(std::popcount(a & s.mask())) + 1 == s.members.size();
        });
    };
    std::size_t hits = 0;
    for (Mask a = 0; a <= full_mask(x.size()); ++a) {
        if (!meets_all_but_one(a)) continue;
        ++hits;
        if (std::find(frame_masks.begin(), frame_masks.end(), a) == frame_masks.end())
            return failed(name, set_text(mask_to_indices(a)) + " meets every simplex in all but one element but is no frame");
    }
    if (is_positive_basis(x)) {
        for (const auto& f : frames)
            if (!meets_all_but_one(f.mask()))
                return failed(name, "frame " + set_text(f.members) + " of a positive basis misses a simplex pattern");
    }
    return passed(name, std::to_string(hits) + " simplex-pattern sets");
}

CheckResult check_cone_decomposition(const VecSet& x) {
    constexpr const char* name = "cone_decomposition";
    if (!full_dimensional(x) || !is_pss(x)) return skipped(name, "not a full-dimensional PSS");
    if (x.size() > 20) return skipped(name, "more than 20 elements");
    const auto cover = cone_decomposition(x);
    if (cover.parts.size() > (std::size_t{1} << x.dim())) return failed(name, "more than 2^d parts");
    std::vector<std::size_t> seen(x.size(), 0);
    for (std::size_t p = 0; p < cover.parts.size(); ++p) {
        const auto& part = cover.parts[p];
        if (!separator_valid(part.witness, x, part.members)) return failed(name, "part witness fails");
        for (auto i : part.members) {
            ++seen[i];
            if (cover.assignment[i] != p) return failed(name, "assignment disagrees with parts");
            if (!in_positive_span(x[i], x, part.frame)) return failed(name, "element outside its frame cone");
        }
    }
    if (std::any_of(seen.begin(), seen.end(), [](std::size_t c) { return c != 1; }))
        return failed(name, "parts do not partition X");
    return passed(name, std::to_string(cover.parts.size()) + " parts");
}

CheckResult check_frame_families(const VecSet& x) {
    constexpr const char* name = "frame_families";
    if (!full_dimensional(x) || !is_pss(x)) return skipped(name, "not a full-dimensional PSS");
    if (x.size() > 20) return skipped(name, "more than 20 elements");
    const std::size_t bound = std::size_t{1} << x.dim();
    const auto greedy = max_disjoint_family(x);
    for (std::size_t i = 0; i < greedy.size(); ++i)
        for (std::size_t j = i + 1; j < greedy.size(); ++j)
            if (x.rank(mask_to_indices(greedy[i].mask() & greedy[j].mask())) >= x.dim())
                return failed(name, "greedy family has a full-dimensional overlap");
    if (greedy.size() > bound) return failed(name, "greedy family exceeds 2^d");
    std::string detail = "greedy " + std::to_string(greedy.size());

    if (enumerate_mns(x).size() <= 12) {
        const auto best = max_disjoint_family_exhaustive(x);
        if (best.size() < greedy.size() || best.size() > bound)
            return failed(name, "exhaustive family size " + std::to_string(best.size()) + " out of range");
        if (best.size() == bound && !union_of_one_simplices_with_cross(x, enumerate_simplices(x)))
            return failed(name, "2^d family on a set that is not a union of 1-simplices containing a cross");
        detail += ", exhaustive " + std::to_string(best.size());
    }
    return passed(name, detail);
}

CheckResult check_gale(const VecSet& x) {
    constexpr const char* name = "gale";
    if (!is_pss(x)) return skipped(name, "not a PSS");
    const auto sims = enumerate_simplices(x);
    const std::size_t dim = x.size() - x.rank();
    const auto nb = nonneg_dependency_basis(x);
    if (nb.size() != dim) return failed(name, "nonnegative basis has the wrong size");
    for (const auto& v : nb) {
        if (!is_dependency(x, v)) return failed(name, "nonnegative basis element is not a dependency");
        for (const auto& c : v.coeffs)
            if (sgn(c) < 0) return failed(name, "nonnegative basis element has a negative entry");
    }
    if (dim == 0) return passed(name, "no dependencies");

    const auto classes = point_classes(gale_diagram(x, nb));
    if (point_classes(gale_diagram(x, dependency_basis(x))) != classes)
        return failed(name, "point classes depend on the choice of basis");
    if (!is_locally_equilibrated(x, sims)) return passed(name, std::to_string(classes.size()) + " point classes");

    const auto report = verify_gale_theorem(x);
    if (!report.ok()) {
        const auto [i, j] = report.violations.front();
        return failed(name, "elements " + std::to_string(i) + " and " + std::to_string(j) +
                                " disagree on point vs simplex membership");
    }
    if (point_classes(report.diagram) != classes) return failed(name, "characteristic basis changes the point classes");

    std::vector<QVec> chis;
    for (const auto& s : sims) chis.push_back(QVec(characteristic(x, s).coeffs));
    const auto chi_mat = QMat::from_columns(chis, x.size());
    for (const auto& v : nb)
        if (!solve_nonneg(chi_mat, QVec(v.coeffs)).feasible())
            return failed(name, "nonnegative dependency outside the cone of characteristic functions");
    return passed(name, std::to_string(classes.size()) + " point classes, locally equilibrated");
}

CheckResult check_swap_conditions(const VecSet& x) {
    constexpr const char* name = "swap_conditions";
    if (x.size() > 12) return skipped(name, "more than 12 elements");
    const auto sims = enumerate_simplices(x);
    std::size_t cases = 0;
    for (std::size_t k = 0; k < sims.size() && k < 10; ++k) {
        const auto& s = sims[k];
        const auto sv = x.subset(s.members);
        std::vector<QVec> ys;
        for (std::size_t i = 0; i < x.size(); ++i)
            if (!std::binary_search(s.members.begin(), s.members.end(), i)) ys.push_back(x[i]);
        for (auto m : s.members) ys.push_back(-x[m]);
        for (std::size_t a = 0; a < s.members.size(); ++a)
            for (std::size_t b = a + 1; b < s.members.size(); ++b) ys.push_back(x[s.members[a]] + x[s.members[b]]);

        const std::size_t r = sv.rank();
        for (const auto& y : ys) {
            if (y.is_zero() || sv.find(y)) continue;
            std::vector<QVec> with_y = sv.vectors();
            with_y.push_back(y);
            if (rank(QMat::from_columns(with_y, x.dim())) != r) continue;
            const auto f = sxy_classify(sv, y);
            ++cases;
            if (f.exists_swap != f.all_simplices_full_span || f.exists_swap != f.neg_y_outside_skeleton)
                return failed(name, "flags disagree for simplex " + set_text(s.members) + " and y = " + to_string(y));
        }
    }
    return passed(name, std::to_string(cases) + " cases");
}

CheckResult check_frame_restriction(const VecSet& x) {
    constexpr const char* name = "frame_restriction";
    if (!full_dimensional(x) || !is_pss(x)) return skipped(name, "not a full-dimensional PSS");
    if (x.size() > 16) return skipped(name, "more than 16 elements");
    const auto y = extract_positive_basis_indices(x);
    const auto r = restrict_frames(x, y);
    const auto mx = enumerate_mns(x);
    if (!r.preimages_ok()) return failed(name, "a frame of Y is no restriction of a frame of X");
    if (!r.restrictions_ok())
        return failed(name, "frame " + set_text(mx[r.non_frame_restrictions.front()].members) +
                                " of X restricts to a non-frame of Y = " + set_text(y));
    if (!r.collisions_ok()) {
        const auto [b1, b2] = r.low_rank_collisions.front();
        return failed(name, "frames " + set_text(mx[b1].members) + " and " + set_text(mx[b2].members) +
                                " agree on Y but overlap in less than full rank");
    }
    return passed(name, std::to_string(r.collisions.size()) + " collisions");
}

CheckResult check_reay(const VecSet& x) {
    constexpr const char* name = "reay";
    if (x.empty() || !is_positive_basis(x)) return skipped(name, "not a positive basis");
    const auto rp = reay_partition(x);
    IndexSet acc;
    std::size_t sum = 0;
    for (std::size_t k = 0; k < rp.parts.size(); ++k) {
        const auto& p = rp.parts[k];
        if (p.size() < 2 || (k > 0 && p.size() > rp.parts[k - 1].size()))
            return failed(name, "part sizes not non-increasing and >= 2");
        acc.insert(acc.end(), p.begin(), p.end());
        std::sort(acc.begin(), acc.end());
        sum += p.size();
        if (x.rank(acc) != sum - (k + 1) || !is_pss(x.subset(acc)))
            return failed(name, "first " + std::to_string(k + 1) + " parts do not span a subspace of the right dimension");
    }
    if (acc != x.all_indices()) return failed(name, "parts do not partition X");
    return passed(name, std::to_string(rp.parts.size()) + " parts");
}

CheckResult check_core_points(const VecSet& x) {
    constexpr const char* name = "core_points";
    if (!full_dimensional(x) || !is_positive_basis(x)) return skipped(name, "not a full-dimensional positive basis");
    if (x.size() > 10) return skipped(name, "more than 10 elements");
    std::vector<IndexSet> bases;
    for_each_combination(x.size(), x.dim(), [&](const IndexSet& ids) {
        if (x.rank(ids) == x.dim()) bases.push_back(ids);
    });
    std::vector<QVec> samples;
    for (const auto& b : bases) {
        QVec s(x.dim());
        for (auto i : b) s += x[i];
        samples.push_back(s);
    }
    for (const auto& v : x) samples.push_back(v);
    std::size_t core = 0;
    for (const auto& p : samples) {
        if (!core_contains(p, x)) continue;
        ++core;
        const bool found = std::any_of(bases.begin(), bases.end(),
                                       [&](const IndexSet& b) { return in_rint_positive_span(p, x.subset(b)); });
        if (!found) return failed(name, "core point " + to_string(p) + " in no rint pos(B)");
    }
    return passed(name, std::to_string(core) + " core samples");
}

CheckResult check_invariance(const VecSet& x) {
    constexpr const char* name = "invariance";
    auto signature = [](const VecSet& v) {
        return std::vector<bool>{linearly_dependent(v).verdict, positively_dependent(v).verdict,
                                 negatively_independent(v).feasible(), is_pss(v), is_positive_basis(v)};
    };
    const auto base = signature(x);

    // Upper triangular with 2 on the diagonal and 1 above: invertible.
    const std::size_t d = x.dim();
    std::vector<QVec> mapped;
    for (const auto& v : x) {
        QVec w(d);
        for (std::size_t r = 0; r < d; ++r) {
            w[r] = 2 * v[r];
            for (std::size_t c = r + 1; c < d; ++c) w[r] += v[c];
        }
        mapped.push_back(std::move(w));
    }
    if (signature(VecSet(d, mapped)) != base) return failed(name, "predicates change under a linear map");

    const Rat scale = Rat(7) / 5;
    for (std::size_t i = 0; i < x.size(); ++i) {
        std::vector<QVec> vs = x.vectors();
        vs[i] *= scale;
        std::optional<VecSet> scaled;
        try {
            scaled.emplace(d, std::move(vs));
        } catch (const DuplicateVectorError&) {
            continue;
        }
        if (signature(*scaled) != base) return failed(name, "predicates change when rescaling element " + std::to_string(i));
    }
    return passed(name);
}

std::vector<CheckResult> run_property_suite(const VecSet& x) {
    using Check = CheckResult (*)(const VecSet&);
    static constexpr std::pair<const char*, Check> checks[] = {
        {"separator_dichotomy", check_separator_dichotomy},
        {"planar_independence", check_planar_independence},
        {"pss_characterizations", check_pss_characterizations},
        {"simplex_structure", check_simplex_structure},
        {"independence_equivalence", check_independence_equivalence},
        {"main_bounds", check_main_bounds},
        {"caratheodory", check_caratheodory},
        {"lattice", check_lattice},
        {"frames", check_frames},
        {"frames_from_simplices", check_frames_from_simplices},
        {"cone_decomposition", check_cone_decomposition},
        {"frame_families", check_frame_families},
        {"gale", check_gale},
        {"swap_conditions", check_swap_conditions},
        {"frame_restriction", check_frame_restriction},
        {"reay", check_reay},
        {"core_points", check_core_points},
        {"invariance", check_invariance},
    };
    std::vector<CheckResult> out;
    for (const auto& [name, check] : checks) {
        try {
            out.push_back(check(x));
        } catch (const std::exception& e) {
            out.push_back(failed(name, std::string("exception: ") + e.what()));
        }
    }
    return out;
}

}  // namespace psskit
