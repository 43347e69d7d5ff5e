#include "psskit/genlib.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>

#include "psskit/conical.hpp"
#include "psskit/spanset.hpp"

namespace psskit {

namespace {

void require_positive(const std::vector<Rat>& v, const char* what) {
    for (const auto& r : v)
        if (sgn(r) <= 0) throw PreconditionError(std::string(what) + " must be positive");
}

QVec from_ints(std::initializer_list<long> xs) {
    QVec v(xs.size());
    std::size_t i = 0;
    for (long x : xs) v[i++] = x;
    return v;
}

}  // namespace

VecSet make_cross(std::size_t d, const std::vector<Rat>& scales) {
    if (d == 0) throw PreconditionError("dimension must be positive");
    if (!scales.empty() && scales.size() != d) throw PreconditionError("need one scale per axis");
    require_positive(scales, "cross scales");
    std::vector<QVec> vs;
    for (std::size_t i = 0; i < d; ++i) {
        vs.push_back(QVec::unit(d, i));
        vs.push_back(QVec::unit(d, i) * (scales.empty() ? Rat(-1) : Rat(-scales[i])));
    }
    return VecSet(d, std::move(vs));
}

VecSet make_simplex(std::size_t d, const std::vector<Rat>& coeffs) {
    if (d == 0) throw PreconditionError("dimension must be positive");
    if (!coeffs.empty() && coeffs.size() != d) throw PreconditionError("need one coefficient per axis");
    require_positive(coeffs, "simplex coefficients");
    std::vector<QVec> vs;
    QVec last(d);
    for (std::size_t i = 0; i < d; ++i) {
        vs.push_back(QVec::unit(d, i));
        last[i] = coeffs.empty() ? Rat(-1) : Rat(-coeffs[i]);
    }
    vs.push_back(std::move(last));
    return VecSet(d, std::move(vs));
}

VecSet make_from_antichain(const AntichainSpec& spec) {
    const std::size_t d = spec.d;
    const std::size_t n = spec.subsets.size();
    if (d == 0) throw PreconditionError("dimension must be positive");
    if (n == 0 || n > d) throw PreconditionError("need between 1 and d subsets");
    if (!spec.weights.empty() && spec.weights.size() != n) throw PreconditionError("need weights for every subset");

    std::vector<Mask> masks;
    for (std::size_t i = 0; i < n; ++i) {
        const auto& a = spec.subsets[i];
        if (a.empty()) throw PreconditionError("antichain subsets must be nonempty");
        Mask m = 0;
        for (auto j : a) {
            if (j < 1 || j > d) throw PreconditionError("antichain coordinate out of range");
            if (mask_contains(m, j - 1)) throw PreconditionError("repeated coordinate in antichain subset");
            m |= Mask{1} << (j - 1);
        }
        if (!spec.weights.empty()) {
            if (spec.weights[i].size() != a.size()) throw PreconditionError("weights do not match subset size");
            require_positive(spec.weights[i], "antichain weights");
        }
        masks.push_back(m);
    }
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            if (i != j && is_submask(masks[i], masks[j]))
                throw PreconditionError("subsets do not form an antichain");

    std::vector<QVec> vs;
    for (std::size_t i = 0; i < d; ++i) vs.push_back(QVec::unit(d, i));
    for (std::size_t i = 0; i < n; ++i) {
        QVec x(d);
        for (std::size_t k = 0; k < spec.subsets[i].size(); ++k)
            x[spec.subsets[i][k] - 1] = spec.weights.empty() ? Rat(-1) : Rat(-spec.weights[i][k]);
        vs.push_back(std::move(x));
    }
    VecSet out(d, std::move(vs));
    if (!is_positive_basis(out)) throw PreconditionError("antichain does not yield a positive basis");
    return out;
}

VecSet example_x9() {
    return VecSet(6, {
                         from_ints({1, 0, 0, 0, 0, 0}),
                         from_ints({0, 1, 0, 0, 0, 0}),
                         from_ints({-1, -1, 0, 0, 0, 0}),
                         from_ints({0, 0, -1, 0, -1, 0}),
                         from_ints({0, 0, 0, -1, -1, 0}),
                         from_ints({0, 0, 1, 1, 2, 0}),
                         from_ints({1, 1, -1, -1, -2, 0}),
                         from_ints({-1, -1, 1, 1, 0, 1}),
                         from_ints({0, 0, 0, 0, 2, -1}),
                     });
}

VecSet polygon_example(std::size_t n) {
    if (n == 0) throw PreconditionError("polygon needs n >= 1");
    constexpr long kDen = 10000;
    std::vector<QVec> half;
    for (std::size_t k = 0; k < n; ++k) {
        const double half_angle = std::numbers::pi * static_cast<double>(k) / (2.0 * static_cast<double>(n));
        const mpz_class p = static_cast<long>(std::llround(std::tan(half_angle) * kDen));
        const mpz_class q = kDen;
        mpz_class a = q * q - p * p;
        mpz_class b = 2 * p * q;
        mpz_class g;
        mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
        half.push_back(QVec{Rat(a / g), Rat(b / g)});
    }
    std::vector<QVec> vs = half;
    for (const auto& v : half) vs.push_back(-v);
    VecSet out(2, std::move(vs));

    const auto frames = enumerate_mns(out);
    bool ok = frames.size() == 2 * n;
    for (std::size_t s = 0; s < 2 * n && ok; ++s) {
        IndexSet run;
        for (std::size_t k = 0; k < n; ++k) run.push_back((s + k) % (2 * n));
        std::sort(run.begin(), run.end());
        ok = std::any_of(frames.begin(), frames.end(), [&](const ConeFrame& f) { return f.members == run; });
    }
    if (!ok) throw CertificateError("rational polygon does not have the consecutive-run frame structure");
    return out;
}

AntichainSpec random_antichain(std::size_t d, std::size_t n, std::uint64_t seed) {
    if (d == 0 || n == 0 || n > d) throw PreconditionError("need 1 <= n <= d");
    if (n > 20) throw PreconditionError("random antichain limited to 20 subsets");
    std::mt19937_64 rng(seed);
    auto draw = [&](std::uint64_t bound) { return rng() % bound; };

    std::vector<std::size_t> coords(d);
    for (std::size_t i = 0; i < d; ++i) coords[i] = i + 1;
    for (std::size_t i = d; i > 1; --i) std::swap(coords[i - 1], coords[draw(i)]);

    AntichainSpec spec;
    spec.d = d;
    spec.subsets.resize(n);
    for (std::size_t i = 0; i < n; ++i) spec.subsets[i].push_back(coords[i]);
    for (std::size_t c = n; c < d; ++c) {
        const std::uint64_t family = 1 + draw((std::uint64_t{1} << n) - 1);
        for (std::size_t i = 0; i < n; ++i)
            if ((family >> i) & 1U) spec.subsets[i].push_back(coords[c]);
    }
    for (auto& a : spec.subsets) {
        std::sort(a.begin(), a.end());
        std::vector<Rat> w;
        for (std::size_t k = 0; k < a.size(); ++k) {
            Rat r(mpz_class(static_cast<unsigned long>(1 + draw(7))), mpz_class(static_cast<unsigned long>(1 + draw(7))));
            r.canonicalize();
            w.push_back(r);
        }
        spec.weights.push_back(std::move(w));
    }
    return spec;
}

VecSet random_positive_basis(std::size_t d, std::size_t n, std::uint64_t seed) {
    return make_from_antichain(random_antichain(d, n, seed));
}

}  // namespace psskit
