#include "psskit/cli.hpp"

#include <CLI11.hpp>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <json.hpp>
#include <sstream>

#include "psskit/checks.hpp"
#include "psskit/conical.hpp"
#include "psskit/gale.hpp"
#include "psskit/genlib.hpp"
#include "psskit/io.hpp"
#include "psskit/lattice.hpp"
#include "psskit/simplicial.hpp"
#include "psskit/spanset.hpp"

namespace psskit {

namespace {

using nlohmann::ordered_json;

// Reports use 0-based element indices; the human summary names elements x1, x2, ...
std::string label(std::size_t i) { return "x" + std::to_string(i + 1); }

ordered_json vec_json(const QVec& v) {
    ordered_json a = ordered_json::array();
    for (const auto& r : v.entries()) a.push_back(to_string(r));
    return a;
}

ordered_json rats_json(const std::vector<Rat>& v) { return vec_json(QVec(v)); }

ordered_json ids_json(const IndexSet& s) {
    ordered_json a = ordered_json::array();
    for (auto i : s) a.push_back(i);
    return a;
}

ordered_json coeffs_json(const std::map<std::size_t, Rat>& m) {
    ordered_json o = ordered_json::object();
    for (const auto& [k, r] : m) o[std::to_string(k)] = to_string(r);
    return o;
}

ordered_json simplex_json(const Simplex& s) {
    return ordered_json{{"members", ids_json(s.members)}, {"dependency", rats_json(s.dependency)}};
}

ordered_json decomposition_json(const BasisDecomposition& dec) {
    ordered_json pairs = ordered_json::array();
    for (const auto& p : dec.pairs) pairs.push_back({{"element", p.x}, {"support", ids_json(p.a)}});
    return ordered_json{{"basis", ids_json(dec.basis)}, {"pairs", pairs}};
}

std::string relation_text(std::size_t lhs, const std::map<std::size_t, Rat>& coeffs) {
    std::string s = label(lhs) + " =";
    bool first = true;
    for (const auto& [k, r] : coeffs) {
        s += first ? " " : " + ";
        if (r != 1) s += to_string(r) + "*";
        s += label(k);
        first = false;
    }
    if (first) s += " 0";
    return s;
}

ordered_json witness_json(std::size_t element, const std::map<std::size_t, Rat>& coeffs) {
    return ordered_json{{"element", element}, {"coefficients", coeffs_json(coeffs)}};
}

// Nonzero coefficients of p over X \ {i} with p in pos(X \ {i}), if any.
std::optional<std::map<std::size_t, Rat>> positive_rest(const QVec& p, const VecSet& x, std::size_t i) {
    IndexSet rest;
    for (std::size_t k = 0; k < x.size(); ++k)
        if (k != i) rest.push_back(k);
    auto a = positive_combination(p, x, rest);
    if (!a) return std::nullopt;
    std::map<std::size_t, Rat> m;
    for (std::size_t k = 0; k < rest.size(); ++k)
        if (sgn((*a)[k]) != 0) m[rest[k]] = (*a)[k];
    return m;
}

struct Outcome {
    ordered_json report;
    std::string summary;
    int status = 0;
};

Outcome cmd_analyze(const VecSet& x) {
    const auto sims = enumerate_simplices(x);
    const auto lin = linearly_dependent(x);
    const auto pos = positively_dependent(x);
    const auto sep = negatively_independent(x);
    const bool pss = is_pss(x);
    const bool pb = pss && !pos.verdict;
    const bool full = !x.empty() && x.rank() == x.dim();

    ordered_json flags{
        {"pss", pss},
        {"positive_basis", pb},
        {"full_dimensional", full},
        {"linearly_independent", !lin.verdict},
        {"positively_independent", !pos.verdict},
        {"negatively_independent", sep.feasible()},
        {"cross", pb && is_cross(x, sims)},
        {"simplex", is_simplex(x).has_value()},
        {"locally_equilibrated", is_locally_equilibrated(x, sims)},
    };

    ordered_json lattice_size = nullptr;
    if (pss && sims.size() <= 20) lattice_size = SpanLattice::build(x).size();
    ordered_json counts{
        {"vectors", x.size()},
        {"dim", x.dim()},
        {"rank", x.rank()},
        {"simplices", sims.size()},
        {"frames", enumerate_mns(x).size()},
        {"dependencies", x.size() - x.rank()},
        {"lattice_size", lattice_size},
    };

    ordered_json cert;
    cert["linear_dependence"] = lin.verdict ? witness_json(*lin.witness_index, *lin.witness_coeffs) : ordered_json();
    cert["positive_dependence"] = pos.verdict ? witness_json(*pos.witness_index, *pos.witness_coeffs) : ordered_json();
    ordered_json dependent = ordered_json::array();
    std::vector<std::string> relations;
    for (std::size_t i = 0; i < x.size(); ++i)
        if (auto m = positive_rest(x[i], x, i)) {
            dependent.push_back(witness_json(i, *m));
            relations.push_back(relation_text(i, *m));
        }
    cert["positively_dependent_elements"] = dependent;
    cert["separator"] = sep.feasible() ? vec_json(*sep.separator) : ordered_json();
    ordered_json simplices = ordered_json::array();
    for (const auto& s : sims) simplices.push_back(simplex_json(s));
    cert["simplices"] = simplices;

    ordered_json negations = ordered_json::array();
    std::optional<std::size_t> not_spanned;
    for (std::size_t i = 0; i < x.size() && !not_spanned; ++i) {
        auto a = positive_combination(-x[i], x, x.all_indices());
        if (!a) {
            not_spanned = i;
            break;
        }
        std::map<std::size_t, Rat> m;
        for (std::size_t k = 0; k < x.size(); ++k)
            if (sgn((*a)[k]) != 0) m[k] = (*a)[k];
        negations.push_back(witness_json(i, m));
    }
    cert["negations"] = pss ? negations : ordered_json();
    cert["negation_not_spanned"] = not_spanned ? ordered_json(*not_spanned) : ordered_json();
    cert["basis_decomposition"] = pb && !x.empty() ? decomposition_json(basis_decomposition(x)) : ordered_json();
    ordered_json fact = nullptr;
    if (pss && !pb && x.size() <= 16) {
        const auto f = factorization_condition(x, sims, false);
        if (!f.holds) fact = {{"subset", ids_json(*f.y)}, {"simplex", ids_json(sims[*f.simplex].members)}};
    }
    cert["factorization_failure"] = fact;

    std::ostringstream sum;
    sum << x.size() << " vectors in Q^" << x.dim() << ", rank " << x.rank() << ": "
        << (pb ? "positive basis" : pss ? "positively spanning, not a basis" : "not positively spanning") << ", "
        << sims.size() << " simplices\n";
    for (const auto& r : relations) sum << "  " << r << "\n";
    return {ordered_json{{"command", "analyze"}, {"flags", flags}, {"counts", counts}, {"certificates", cert}},
            sum.str()};
}

Outcome cmd_simplices(const VecSet& x) {
    const auto sims = enumerate_simplices(x);
    ordered_json list = ordered_json::array();
    std::ostringstream sum;
    sum << sims.size() << " simplices\n";
    for (const auto& s : sims) {
        list.push_back(simplex_json(s));
        sum << "  {";
        for (std::size_t k = 0; k < s.members.size(); ++k) sum << (k ? ", " : "") << label(s.members[k]);
        sum << "}\n";
    }
    return {ordered_json{{"command", "simplices"}, {"count", sims.size()}, {"simplices", list}}, sum.str()};
}

Outcome cmd_lattice(const VecSet& x) {
    const auto lat = SpanLattice::build(x);
    ordered_json sims = ordered_json::array();
    for (const auto& s : lat.simplices()) sims.push_back(ids_json(s.members));
    ordered_json els = ordered_json::array();
    for (const auto& e : lat.elements())
        els.push_back({{"members", ids_json(e.indices())}, {"simplices", ids_json(mask_to_indices(e.simplices))}});
    const bool boolean = lat.size() == (std::size_t{1} << lat.simplices().size());
    std::ostringstream sum;
    sum << lat.size() << " positively spanning subsets over " << lat.simplices().size() << " simplices"
        << (boolean ? " (full powerset)" : " (proper embedding)") << "\n";
    return {ordered_json{{"command", "lattice"},
                         {"size", lat.size()},
                         {"isomorphic_to_powerset", boolean},
                         {"simplices", sims},
                         {"elements", els}},
            sum.str()};
}

Outcome cmd_mns(const VecSet& x) {
    const auto frames = enumerate_mns(x);
    ordered_json list = ordered_json::array();
    for (const auto& f : frames) list.push_back({{"members", ids_json(f.members)}, {"witness", vec_json(f.witness)}});
    return {ordered_json{{"command", "mns"}, {"count", frames.size()}, {"frames", list}},
            std::to_string(frames.size()) + " maximal negatively independent subsets\n"};
}

Outcome cmd_cones(const VecSet& x) {
    const auto cover = cone_decomposition(x);
    ordered_json parts = ordered_json::array();
    for (const auto& p : cover.parts)
        parts.push_back(
            {{"members", ids_json(p.members)}, {"frame", ids_json(p.frame)}, {"witness", vec_json(p.witness)}});
    const auto family = max_disjoint_family(x);
    ordered_json fam = ordered_json::array();
    for (const auto& f : family) fam.push_back(ids_json(f.members));
    std::ostringstream sum;
    sum << cover.parts.size() << " pointed cone parts (bound " << (std::size_t{1} << x.dim()) << "), frame family of "
        << family.size() << "\n";
    return {ordered_json{{"command", "cones"},
                         {"positive_basis", ids_json(cover.positive_basis)},
                         {"parts", parts},
                         {"assignment", cover.assignment},
                         {"frame_family", fam}},
            sum.str()};
}

Outcome cmd_gale(const VecSet& x) {
    ordered_json deps = ordered_json::array();
    for (const auto& v : dependency_basis(x)) deps.push_back(rats_json(v.coeffs));
    ordered_json report{{"command", "gale"}, {"dependencies", deps}};
    const bool pss = is_pss(x);
    const auto sims = enumerate_simplices(x);
    const bool equilibrated = is_locally_equilibrated(x, sims);
    report["locally_equilibrated"] = equilibrated;

    std::vector<Dependency> basis = dependency_basis(x);
    std::string basis_kind = "kernel";
    ordered_json nonneg = nullptr;
    if (pss) {
        basis = nonneg_dependency_basis(x);
        basis_kind = "nonnegative";
        nonneg = ordered_json::array();
        for (const auto& v : basis) nonneg.push_back(rats_json(v.coeffs));
    }
    report["nonnegative_basis"] = nonneg;

    ordered_json theorem = nullptr;
    GaleDiagram diagram;
    if (pss && equilibrated) {
        const auto t = verify_gale_theorem(x);
        diagram = t.diagram;
        basis_kind = "characteristic";
        ordered_json viol = ordered_json::array();
        for (const auto& [i, j] : t.violations) viol.push_back({i, j});
        theorem = {{"basis_simplices", t.basis_simplices}, {"holds", t.ok()}, {"violations", viol}};
    } else {
        diagram = gale_diagram(x, basis);
    }
    ordered_json points = ordered_json::array();
    for (const auto& p : diagram.points) points.push_back(vec_json(p));
    ordered_json classes = ordered_json::array();
    const auto cls = point_classes(diagram);
    for (const auto& c : cls) classes.push_back(ids_json(c));
    report["diagram"] = {{"basis", basis_kind}, {"points", points}, {"classes", classes}};
    report["membership_theorem"] = theorem;

    std::ostringstream sum;
    sum << "D(X) has dimension " << deps.size() << ", " << cls.size() << " Gale point classes"
        << (equilibrated ? ", locally equilibrated" : "") << "\n";
    return {report, sum.str()};
}

Outcome cmd_reay(const VecSet& x) {
    const auto dec = basis_decomposition(x);
    const auto rp = reay_partition(x);
    ordered_json parts = ordered_json::array();
    ordered_json dims = ordered_json::array();
    std::size_t acc = 0;
    for (std::size_t k = 0; k < rp.parts.size(); ++k) {
        parts.push_back(ids_json(rp.parts[k]));
        acc += rp.parts[k].size();
        dims.push_back(acc - (k + 1));
    }
    std::ostringstream sum;
    sum << rp.parts.size() << " parts; nested spans of dimension";
    for (const auto& d : dims) sum << " " << d.get<std::size_t>();
    sum << "\n";
    return {ordered_json{{"command", "reay"},
                         {"basis_decomposition", decomposition_json(dec)},
                         {"parts", parts},
                         {"dimensions", dims}},
            sum.str()};
}

Outcome cmd_verify(const VecSet& x) {
    const auto results = run_property_suite(x);
    ordered_json checks = ordered_json::array();
    std::size_t counts[3] = {0, 0, 0};
    std::ostringstream sum;
    for (const auto& r : results) {
        checks.push_back({{"name", r.name}, {"status", to_string(r.status)}, {"detail", r.detail}});
        ++counts[static_cast<int>(r.status)];
        sum << "  " << to_string(r.status) << "  " << r.name << (r.detail.empty() ? "" : ": " + r.detail) << "\n";
    }
    Outcome o;
    o.report = {{"command", "verify"},
                {"passed", counts[0]},
                {"failed", counts[1]},
                {"skipped", counts[2]},
                {"checks", checks}};
    o.summary = std::to_string(counts[0]) + " passed, " + std::to_string(counts[1]) + " failed, " +
                std::to_string(counts[2]) + " skipped\n" + sum.str();
    o.status = counts[1] ? 1 : 0;
    return o;
}

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> out;
    std::string cur;
    std::istringstream is(s);
    while (std::getline(is, cur, sep)) out.push_back(cur);
    return out;
}

std::vector<Rat> parse_rats(const std::string& s) {
    std::vector<Rat> out;
    if (s.empty()) return out;
    for (const auto& t : split(s, ',')) out.push_back(parse_rat(t));
    return out;
}

struct GenerateArgs {
    std::string kind;
    std::size_t dim = 2;
    std::size_t n = 0;
    std::uint64_t seed = 0;
    std::string scales;
    std::string subsets;
    std::string weights;
};

VecSet generate(const GenerateArgs& g) {
    if (g.kind == "cross") return make_cross(g.dim, parse_rats(g.scales));
    if (g.kind == "simplex") return make_simplex(g.dim, parse_rats(g.scales));
    if (g.kind == "x9") return example_x9();
    if (g.kind == "polygon") return polygon_example(g.n ? g.n : 3);
    if (g.kind == "random") return random_positive_basis(g.dim, g.n ? g.n : 1, g.seed);
    AntichainSpec spec;
    spec.d = g.dim;
    for (const auto& part : split(g.subsets, ';')) {
        std::vector<std::size_t> a;
        for (const auto& t : split(part, ',')) {
            std::size_t used = 0;
            const unsigned long v = std::stoul(t, &used);
            if (used != t.size()) throw Error("bad coordinate '" + t + "' in --subsets");
            a.push_back(v);
        }
        spec.subsets.push_back(std::move(a));
    }
    if (!g.weights.empty())
        for (const auto& part : split(g.weights, ';')) spec.weights.push_back(parse_rats(part));
    return make_from_antichain(spec);
}

std::optional<std::string> read_input(const std::string& path, std::istream& in) {
    std::ostringstream buf;
    if (path == "-") {
        buf << in.rdbuf();
        return buf.str();
    }
    std::ifstream f(path);
    if (!f) return std::nullopt;
    buf << f.rdbuf();
    return buf.str();
}

}  // namespace

int run_cli(std::vector<std::string> args, std::istream& in, std::ostream& out, std::ostream& err) {
    CLI::App app{"Exact analysis of positive spanning sets", "psskit"};
    app.require_subcommand(1);

    std::size_t max_size = kDefaultMaxSize;
    if (const char* env = std::getenv("PSSKIT_MAX_SIZE")) {
        try {
            std::size_t used = 0;
            max_size = std::stoul(env, &used);
            if (used != std::string(env).size()) throw std::invalid_argument("trailing text");
        } catch (const std::exception&) {
            err << "error: PSSKIT_MAX_SIZE must be a nonnegative integer\n";
            return 2;
        }
    }

    using Command = Outcome (*)(const VecSet&);
    const std::pair<const char*, std::pair<const char*, Command>> commands[] = {
        {"analyze", {"Classify the set and emit certificates", cmd_analyze}},
        {"simplices", {"Enumerate all simplices", cmd_simplices}},
        {"lattice", {"Lattice of positively spanning subsets", cmd_lattice}},
        {"mns", {"Maximal negatively independent subsets with separators", cmd_mns}},
        {"cones", {"Decomposition into pointed cones and a frame family", cmd_cones}},
        {"gale", {"Dependencies and the Gale diagram", cmd_gale}},
        {"reay", {"Basis decomposition and Reay partition of a positive basis", cmd_reay}},
        {"verify", {"Run the full property suite", cmd_verify}},
    };
    std::string input = "-";
    Command chosen = nullptr;
    for (const auto& [name, entry] : commands) {
        auto* sub = app.add_subcommand(name, entry.first);
        sub->add_option("input", input, "Input JSON file ('-' for standard input)");
        sub->add_option("--max-size", max_size, "Refuse inputs with more vectors than this");
        sub->callback([&chosen, cmd = entry.second] { chosen = cmd; });
    }

    GenerateArgs gen;
    auto* g = app.add_subcommand("generate", "Write a generated vector set");
    g->add_option("kind", gen.kind, "cross | simplex | antichain | x9 | polygon | random")
        ->required()
        ->check(CLI::IsMember({"cross", "simplex", "antichain", "x9", "polygon", "random"}));
    g->add_option("--dim", gen.dim, "Dimension d");
    g->add_option("--n", gen.n, "Polygon: pairs of antipodal points; random: number of simplices");
    g->add_option("--seed", gen.seed, "Seed for random");
    g->add_option("--scales", gen.scales, "Comma-separated positive rationals for cross or simplex");
    g->add_option("--subsets", gen.subsets, "Antichain subsets, e.g. '1,2;2,3' (1-based coordinates)");
    g->add_option("--weights", gen.weights, "Antichain weights aligned with --subsets, e.g. '1,2;1/2,3'");

    std::reverse(args.begin(), args.end());
    try {
        app.parse(args);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return 0;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }

    try {
        if (g->parsed()) {
            const VecSet x = generate(gen);
            out << format_vecset(x);
            err << "generated " << x.size() << " vectors in Q^" << x.dim() << "\n";
            return 0;
        }
        const auto text = read_input(input, in);
        if (!text) {
            err << "error: cannot read " << input << "\n";
            return 2;
        }
        const VecSet x = parse_vecset(*text);
        if (x.size() > max_size) {
            err << "error: " << x.size() << " vectors exceed the size guard of " << max_size
                << " (use --max-size or PSSKIT_MAX_SIZE)\n";
            return 2;
        }
        Outcome o = chosen(x);
        out << o.report.dump(2) << "\n";
        err << o.summary;
        return o.status;
    } catch (const CertificateError& e) {
        err << "internal certificate failure: " << e.what() << "\n";
        return 1;
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }
}

}  // namespace psskit
