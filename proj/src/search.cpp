#include "qsp/search.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "qsp/fp_matrix.hpp"
#include "qsp/linearized.hpp"
#include "qsp/transforms.hpp"

namespace qsp {

namespace {

std::vector<std::uint64_t> normalize_coeff_set(const SearchConfig& cfg) {
    std::vector<std::uint64_t> out;
    if (cfg.coeff_set.empty()) {
        out.resize(cfg.p);
        for (std::uint64_t i = 0; i < cfg.p; ++i) out[i] = i;
        return out;
    }
    for (std::int64_t v : cfg.coeff_set) out.push_back(fp_reduce(v, cfg.p));
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

// candidate index -> monic f of degree np with coefficients in the set and
// nonzero constant term; returns nullopt when the index encodes ell = 0
std::optional<FpPoly> candidate(std::uint64_t idx, unsigned np, std::uint64_t p,
                                const std::vector<std::uint64_t>& set,
                                const std::vector<std::uint64_t>& nonzero_set) {
    const std::uint64_t b = set.size();
    std::vector<std::int64_t> cs(np + 1, 0);
    cs[np] = 1;
    cs[0] = static_cast<std::int64_t>(nonzero_set[idx % nonzero_set.size()]);
    idx /= nonzero_set.size();
    bool any = false;
    for (unsigned i = 1; i < np; ++i) {
        cs[i] = static_cast<std::int64_t>(set[idx % b]);
        idx /= b;
        if (cs[i] != 0) any = true;
    }
    if (!any) return std::nullopt;  // lambda reduces to a_0 X: subfield polynomial
    return FpPoly(p, cs);
}

std::optional<SearchRecord> try_candidate(const FpPoly& f, const SearchConfig& cfg) {
    const unsigned np = static_cast<unsigned>(f.degree());
    unsigned ell = 0;
    for (unsigned i = np; i-- > 1;)
        if (f.coeff(i) != 0) { ell = i; break; }
    if (ell == 0) return std::nullopt;
    // only orders k with beta = ell*k/n'^2 <= beta_max are of interest
    const std::uint64_t bound = static_cast<std::uint64_t>(
        (cfg.beta_max.num * static_cast<std::int64_t>(np) * np) /
        (cfg.beta_max.den * static_cast<std::int64_t>(ell)));
    if (bound < 1) return std::nullopt;
    const FpMatrix C = FpMatrix::companion(f);
    const auto order = C.order(bound);
    if (!order) return std::nullopt;
    const unsigned n = static_cast<unsigned>(*order);
    // canonical representative: support indices and n setwise coprime
    std::size_t d = n;
    for (std::size_t i : f.support_above_zero()) d = std::gcd(d, i);
    if (d > 1) return std::nullopt;
    SearchRecord rec;
    rec.f = f;
    rec.p = cfg.p;
    rec.n = n;
    rec.n_prime = np;
    rec.ell = ell;
    rec.beta = Rational(static_cast<std::int64_t>(ell) * n,
                        static_cast<std::int64_t>(np) * np);
    classify_family(rec);
    return rec;
}

} // namespace

std::vector<SearchRecord> search_representatives(const SearchConfig& cfg) {
    if (!is_prime_u64(cfg.p)) throw std::invalid_argument("search: p must be prime");
    const auto set = normalize_coeff_set(cfg);
    std::vector<std::uint64_t> nonzero_set;
    for (auto v : set)
        if (v != 0) nonzero_set.push_back(v);
    if (nonzero_set.empty())
        throw std::invalid_argument("search: coefficient set has no nonzero residue");
    const unsigned workers = cfg.workers < 1 ? 1u : static_cast<unsigned>(cfg.workers);

    std::vector<SearchRecord> all;
    for (unsigned np = 2; np <= cfg.n_prime_max; ++np) {
        std::uint64_t total = nonzero_set.size();
        for (unsigned i = 1; i < np; ++i) total *= set.size();
        std::vector<std::vector<SearchRecord>> found(workers);
        auto work = [&](unsigned w) {
            for (std::uint64_t idx = w; idx < total; idx += workers) {
                auto f = candidate(idx, np, cfg.p, set, nonzero_set);
                if (!f) continue;
                auto rec = try_candidate(*f, cfg);
                if (rec) found[w].push_back(std::move(*rec));
            }
        };
        if (workers == 1) {
            work(0);
        } else {
            std::vector<std::thread> pool;
            for (unsigned w = 0; w < workers; ++w) pool.emplace_back(work, w);
            for (auto& t : pool) t.join();
        }
        for (auto& v : found)
            for (auto& r : v) all.push_back(std::move(r));
    }
    std::sort(all.begin(), all.end(), [](const SearchRecord& a, const SearchRecord& b) {
        if (a.n_prime != b.n_prime) return a.n_prime < b.n_prime;
        if (a.f.coeffs() != b.f.coeffs()) return a.f.coeffs() < b.f.coeffs();
        return a.n < b.n;
    });
    return all;
}

bool matches_type1(const FpPoly& f, std::uint64_t p, unsigned n) {
    // h = X^(p_a) + ... + X^(p_0) + 1 with p_i = 1 + q + ... + q^i,
    // q = p^r (r >= 0), n = p_(a+1); all coefficients 1
    if (f.coeff(0) != 1) return false;
    std::vector<std::size_t> sup;
    for (int i = 1; i <= f.degree(); ++i) {
        const std::uint64_t c = f.coeff(static_cast<std::size_t>(i));
        if (c == 0) continue;
        if (c != 1) return false;
        sup.push_back(static_cast<std::size_t>(i));
    }
    if (sup.empty() || sup[0] != 1) return false;  // p_0 = 1
    const std::uint64_t np = static_cast<std::uint64_t>(f.degree());
    for (std::uint64_t q = 1; q <= np; q = (q == 1 ? p : q * p)) {
        // exponent chain 1, 1+q, 1+q+q^2, ... must match the support exactly
        std::vector<std::size_t> chain;
        std::uint64_t pi = 1, qi = 1;
        while (pi <= np) {
            chain.push_back(static_cast<std::size_t>(pi));
            qi *= q;
            pi += qi;
        }
        if (chain == sup && pi == n) return true;
        if (q == 1 && p == 1) break;
    }
    return false;
}

bool matches_type2(const FpPoly& f, std::uint64_t p, unsigned n) {
    // f_0 = sum_{i=0..d} X^(q^i - 1)  or  f_a = sum_{i=0..d} X^(q^i) + a,
    // a != 0, with n = q^(d+1) - 1 and q = p^r, r >= 1
    const std::uint64_t np = static_cast<std::uint64_t>(f.degree());
    if (np < 1) return false;
    for (std::uint64_t q = p; q <= np + 1; q *= p) {
        // exponent lists q^i (f_a shape) or q^i - 1 (f_0 shape) reaching np
        for (int shape = 0; shape < 2; ++shape) {
            const bool minus_one = (shape == 1);
            std::vector<std::size_t> want;
            std::uint64_t qi = 1;
            bool reached = false;
            while (true) {
                const std::uint64_t e = minus_one ? qi - 1 : qi;
                if (e > np) break;
                want.push_back(static_cast<std::size_t>(e));
                if (e == np) { reached = true; break; }
                qi *= q;
            }
            if (!reached || want.size() < 2) continue;  // need d >= 1
            const unsigned d = static_cast<unsigned>(want.size() - 1);
            // n = q^(d+1) - 1
            std::uint64_t qd1 = 1;
            for (unsigned i = 0; i <= d; ++i) qd1 *= q;
            if (n != qd1 - 1) continue;
            bool ok = true;
            for (std::size_t e = 0; e <= np && ok; ++e) {
                const bool expect = std::find(want.begin(), want.end(), e) != want.end();
                if (e == 0 && !minus_one)
                    ok = f.coeff(0) != 0;  // the free constant a
                else
                    ok = (f.coeff(e) == (expect ? 1u : 0u));
            }
            if (ok) return true;
        }
    }
    return false;
}

void classify_family(SearchRecord& rec) {
    rec.tags.clear();
    rec.inverse.reset();
    if (matches_type1(rec.f, rec.p, rec.n)) rec.tags.insert("T1");
    if (matches_type2(rec.f, rec.p, rec.n)) rec.tags.insert("T2");
    // Type 3: the lower-degree inverse is a Type 1 or Type 2 member
    if (2 * rec.n_prime > rec.n) {
        const FpPoly g = FpPoly::xn_minus_one(rec.p, rec.n) / rec.f;
        unsigned ell_g = 0;
        for (int i = g.degree() - 1; i >= 1; --i)
            if (g.coeff(static_cast<std::size_t>(i)) != 0) { ell_g = static_cast<unsigned>(i); break; }
        if (ell_g >= 1 &&
            (matches_type1(g, rec.p, rec.n) || matches_type2(g, rec.p, rec.n))) {
            rec.tags.insert("T3");
            rec.inverse = g;
        }
    }
}

std::string record_to_json(const SearchRecord& rec, int inverse_degree_cap) {
    std::ostringstream os;
    os << "{\"p\":" << rec.p << ",\"n\":" << rec.n << ",\"n_prime\":" << rec.n_prime
       << ",\"f\":[";
    for (int i = 0; i <= rec.f.degree(); ++i) {
        if (i) os << ',';
        os << rec.f.coeff(static_cast<std::size_t>(i));
    }
    os << "],\"beta_num\":" << rec.beta.num << ",\"beta_den\":" << rec.beta.den
       << ",\"tags\":[";
    bool first = true;
    for (const auto& t : rec.tags) {
        if (!first) os << ',';
        os << '"' << t << '"';
        first = false;
    }
    os << "],\"inverse\":";
    if (rec.inverse && rec.inverse->degree() <= inverse_degree_cap) {
        os << '[';
        for (int i = 0; i <= rec.inverse->degree(); ++i) {
            if (i) os << ',';
            os << rec.inverse->coeff(static_cast<std::size_t>(i));
        }
        os << ']';
    } else {
        os << "null";
    }
    os << '}';
    return os.str();
}

std::string csv_header() { return "f,n,beta,p,T1,T2,T3"; }

std::string record_to_csv(const SearchRecord& rec) {
    std::ostringstream os;
    os << rec.f.to_string() << ',' << rec.n << ',' << rec.beta.value() << ',' << rec.p << ','
       << (rec.tags.count("T1") ? "x" : "") << ','
       << (rec.tags.count("T2") ? "x" : "") << ','
       << (rec.inverse ? rec.inverse->to_string() : "");
    return os.str();
}

} // namespace qsp
