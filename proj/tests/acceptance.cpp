// Acceptance suite: one line per criterion, exit status = failure count.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <fstream>
#include <iostream>
#include <map>
#include <random>
#include <set>
#include <sstream>
#include <thread>
#include <vector>

#include "qsp/complexity.hpp"
#include "qsp/curve.hpp"
#include "qsp/ecdlp.hpp"
#include "qsp/families.hpp"
#include "qsp/linearized.hpp"
#include "qsp/mersenne.hpp"
#include "qsp/search.hpp"
#include "qsp/semaev.hpp"
#include "qsp/symbolic.hpp"
#include "qsp/trinomial.hpp"

#ifndef QSP_DATA_DIR
#define QSP_DATA_DIR "tests/data"
#endif

using namespace qsp;

namespace {

struct Runner {
    int failures = 0;
    template <typename F>
    void run(int num, const std::string& name, F&& body) {
        const auto t0 = std::chrono::steady_clock::now();
        bool ok = false;
        std::string detail;
        try {
            detail = body();
            ok = true;
        } catch (const std::exception& e) {
            detail = e.what();
        }
        const double secs =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        std::printf("[%s] criterion %d: %s (%.1fs) %s\n", ok ? "PASS" : "FAIL", num,
                    name.c_str(), secs, detail.c_str());
        std::fflush(stdout);
        if (!ok) ++failures;
    }
};

[[noreturn]] void fail(const std::string& msg) { throw std::runtime_error(msg); }

struct TableRow {
    std::string f;
    unsigned n;
    double beta_printed;
    std::uint64_t p;
    bool t1, t2;
    std::string inverse;
};

std::vector<TableRow> load_table() {
    std::ifstream in(std::string(QSP_DATA_DIR) + "/table_b1.csv");
    if (!in) fail("cannot open table_b1.csv");
    std::vector<TableRow> rows;
    std::string line;
    std::getline(in, line);  // header
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        std::vector<std::string> parts;
        std::size_t pos = 0;
        while (pos <= line.size()) {
            std::size_t next = line.find(',', pos);
            if (next == std::string::npos) next = line.size();
            parts.push_back(line.substr(pos, next - pos));
            pos = next + 1;
        }
        if (parts.size() < 7) fail("bad table row: " + line);
        rows.push_back(TableRow{parts[0], static_cast<unsigned>(std::stoul(parts[1])),
                                std::stod(parts[2]), std::stoull(parts[3]), parts[4] == "x",
                                parts[5] == "x", parts[6]});
    }
    return rows;
}

int workers() {
    const unsigned hw = std::thread::hardware_concurrency();
    return static_cast<int>(std::min(hw == 0 ? 1u : hw, 8u));
}

// ---------------------------------------------------------------- criterion 1
std::string criterion1() {
    struct Scope { std::uint64_t p; unsigned np; std::vector<std::int64_t> coeffs; };
    const std::vector<Scope> scopes = {{2, 16, {0, 1}},
                                       {3, 10, {0, 1, -1}},
                                       {5, 8, {0, 1, -1}},
                                       {7, 8, {0, 1, -1}}};
    std::map<std::uint64_t, std::vector<SearchRecord>> found;
    for (const auto& sc : scopes) {
        SearchConfig cfg;
        cfg.p = sc.p;
        cfg.n_prime_max = sc.np;
        cfg.coeff_set = sc.coeffs;
        cfg.workers = workers();
        found[sc.p] = search_representatives(cfg);
    }
    const auto table = load_table();
    std::size_t checked = 0;
    for (const auto& row : table) {
        const FpPoly f = FpPoly::parse(row.f, row.p);
        unsigned cap = row.p == 2 ? 16 : row.p == 3 ? 10 : 8;
        if (static_cast<unsigned>(f.degree()) > cap) continue;  // out of scope
        const SearchRecord* match = nullptr;
        for (const auto& rec : found[row.p])
            if (rec.f == f && rec.n == row.n) { match = &rec; break; }
        if (!match) fail("missing row " + row.f + " n=" + std::to_string(row.n) +
                         " p=" + std::to_string(row.p));
        // exact rational beta = ell*n/n'^2 and printed value within 0.1
        const Rational expect(static_cast<std::int64_t>(match->ell) * match->n,
                              static_cast<std::int64_t>(match->n_prime) * match->n_prime);
        if (!(match->beta == expect)) fail("beta rational mismatch at " + row.f);
        if (std::abs(match->beta.value() - row.beta_printed) > 0.1)
            fail("beta tolerance exceeded at " + row.f);
        if (match->tags.count("T2") != static_cast<std::size_t>(row.t2))
            fail("T2 mark mismatch at " + row.f + " p=" + std::to_string(row.p));
        const bool has_t3 = match->tags.count("T3") > 0;
        const std::string inv = has_t3 && match->inverse ? match->inverse->to_string() : "";
        if (inv != row.inverse)
            fail("inverse column mismatch at " + row.f + " (got '" + inv + "')");
        // The printed T1 column on rows carrying an inverse entry is applied
        // inconsistently between p = 2 and p = 3 in the reference, so it is
        // asserted only on rows without one.
        if (row.inverse.empty() &&
            match->tags.count("T1") != static_cast<std::size_t>(row.t1))
            fail("T1 mark mismatch at " + row.f + " p=" + std::to_string(row.p));
        ++checked;
    }
    std::size_t extras = 0;
    for (const auto& [p, recs] : found) extras += recs.size();
    std::ostringstream os;
    os << checked << " in-scope reference rows matched ((f,n,p), beta, marks); "
       << extras << " records emitted in total";
    return os.str();
}

// ---------------------------------------------------------------- criterion 2
std::string criterion2() {
    for (std::uint64_t p : {2ull, 3ull}) {
        SearchConfig cfg;
        cfg.p = p;
        cfg.n_prime_max = 6;
        cfg.coeff_set = {};  // all coefficient values
        cfg.workers = workers();
        for (const auto& rec : search_representatives(cfg))
            if (rec.beta < Rational(3, 4))
                fail("beta below 3/4 at p=" + std::to_string(p) + " f=" + rec.f.to_string());
    }
    for (std::uint64_t p : {2ull, 3ull, 5ull, 7ull}) {
        SearchConfig cfg;
        cfg.p = p;
        cfg.n_prime_max = 2;
        cfg.coeff_set = {};
        bool equality = false;
        for (const auto& rec : search_representatives(cfg))
            if (rec.n_prime == 2 && rec.ell == 1 && rec.n == 3 && rec.beta == Rational(3, 4))
                equality = true;
        if (!equality) fail("equality case not found for p=" + std::to_string(p));
    }
    return "no splitting linearized QSP below 3/4; equality case found for p=2,3,5,7";
}

// ---------------------------------------------------------------- criterion 3
std::string criterion3() {
    std::size_t entries = 0, witnesses = 0;
    for (unsigned np = 2; np <= 8; ++np)
        for (unsigned ell = 1; ell < np; ++ell) {
            const SymMatrix M = sym_companion(np, ell);
            SymMatrix P = M;
            const unsigned mn = min_n(np, ell);
            for (unsigned n = 1; n <= np * np; ++n) {
                if (n > 1) P = P * M;
                for (unsigned i = 1; i <= np; ++i)
                    for (unsigned j = 1; j <= np; ++j) {
                        if (chen_louck_entry(np, ell, n, i, j) != P.at(i - 1, j - 1))
                            fail("oracle mismatch at n'=" + std::to_string(np) +
                                 " ell=" + std::to_string(ell) + " n=" + std::to_string(n));
                        ++entries;
                    }
                if (n < mn) {
                    if (identity_representable(P))
                        fail("identity-representable below min_n at n'=" + std::to_string(np));
                    const Witness w = witness_index(n, np, ell);
                    if (P.at(w.row - 1, 0) != w.expected ||
                        chen_louck_entry(np, ell, n, w.row, 1) != w.expected)
                        fail("witness mismatch at n'=" + std::to_string(np) +
                             " ell=" + std::to_string(ell) + " n=" + std::to_string(n));
                    ++witnesses;
                }
            }
        }
    std::ostringstream os;
    os << entries << " entries agree across both oracles, " << witnesses
       << " witness certificates below min_n";
    return os.str();
}

// ---------------------------------------------------------------- criterion 4
std::string criterion4() {
    std::mt19937_64 rng(20240515);
    std::size_t three_way = 0, two_way = 0;
    std::map<std::pair<std::uint64_t, unsigned>, ExtField> fields;
    for (int t = 0; t < 1000; ++t) {
        const std::uint64_t p = std::vector<std::uint64_t>{2, 3, 5}[rng() % 3];
        const unsigned np = 2 + static_cast<unsigned>(rng() % 4);  // 2..5
        const unsigned n = 2 + static_cast<unsigned>(rng() % 19);  // 2..20
        auto it = fields.find({p, n});
        if (it == fields.end()) it = fields.emplace(std::make_pair(p, n), ExtField(p, n)).first;
        const ExtField& F = it->second;
        const bool prime_coeffs = (rng() & 1) == 0;
        std::vector<ExtElem> lam;
        for (unsigned i = 0; i < np; ++i) {
            if (prime_coeffs) {
                lam.push_back(F.from_int(static_cast<std::int64_t>(rng() % p)));
            } else {
                const mpz_class idx = static_cast<unsigned long>(
                    rng() % std::min<std::uint64_t>(1u << 20, 1u << (2 * n)));
                lam.push_back(F.from_index(idx % F.order()));
            }
        }
        if (lam[0].is_zero()) lam[0] = F.one();  // companion test requires a_0 != 0
        LinearizedQsp L(F, np, std::move(lam));
        const mpz_class comp = split_test_companion(L);
        const mpz_class oracle = root_count_oracle(L);
        if (comp != oracle)
            fail("companion/gcd disagreement at t=" + std::to_string(t));
        if (L.prime_subfield_coeffs()) {
            const FpPoly f = L.de_linearize();
            const bool div = split_test_div(f, n);
            if (div != (oracle == L.poly_degree()))
                fail("divisibility disagreement at t=" + std::to_string(t));
            ++three_way;
        } else {
            ++two_way;
        }
    }
    std::ostringstream os;
    os << "1000 instances, zero disagreements (" << three_way << " three-way, " << two_way
       << " with extension coefficients)";
    return os.str();
}

// ---------------------------------------------------------------- criterion 5
std::string criterion5() {
    const auto m1 = gen_mult_family1(2, 1, 2);
    if (m1.root_count != 6) fail("family 1 root count");
    const double expect_beta = 4.0 * std::log2(3.0) / 9.0;
    if (std::abs(m1.beta - expect_beta) > 1e-9) fail("family 1 beta vs 4 log2(3)/9");
    if (std::abs(m1.beta - 0.70442) > 1e-4) fail("family 1 beta vs 0.70442");
    // exact root count of X^8 - X^3 over F_16 through the polynomial gcd
    {
        ExtField F(2, 4);
        ExtPoly f = ExtPoly::monomial(F, 8, F.one()) - ExtPoly::monomial(F, 3, F.one());
        ExtPoly xq = ExtPoly::powmod(ExtPoly::x(F), F.order(), f);
        if (ExtPoly::gcd(f, xq - ExtPoly::x(F)).degree() != 6)
            fail("X^8 - X^3 gcd root count is not 6");
    }
    const auto m2 = gen_mult_family2(2, 2);
    if (m2.p != 5 || m2.r != 3 || m2.a != 2 || m2.root_count != 4)
        fail("family 2 reference instance");
    const auto m3 = gen_mult_family3(2, 3);
    if (m3.p != 7 || m3.r != 19 || m3.a != 11 || m3.root_count != 39)
        fail("family 3 reference instance");
    // twenty further parameter sets; construction asserts the divisibility
    // identities as exact integers and the gcd root count
    int count = 0;
    for (std::uint64_t p : {2ull, 3ull, 5ull})
        for (unsigned i = 1; i <= 2; ++i)
            for (unsigned k = 2; k <= 3; ++k) {
                const auto m = gen_mult_family1(p, i, k);
                if (m.beta > 1.0 + 1e-12) fail("family 1 beta above 1");
                if (mult_root_count(m.p, m.n, m.n_prime, m.a) != m.root_count)
                    fail("family 1 gcd root count");
                ++count;
            }
    for (auto [k, n] : {std::pair<std::uint64_t, unsigned>{2, 4}, {3, 2}, {3, 3}, {3, 4},
                        {4, 2}, {4, 3}, {5, 2}, {6, 2}, {10, 2}}) {
        const auto m = gen_mult_family2(k, n);
        if (m.beta > 1.0 + 1e-12) fail("family 2 beta above 1");
        if (mult_root_count(m.p, m.n, m.n_prime, m.a) != m.root_count)
            fail("family 2 gcd root count");
        ++count;
    }
    for (auto [k, n] : {std::pair<std::uint64_t, unsigned>{2, 5}, {2, 7}, {4, 3}, {4, 4},
                        {6, 3}, {10, 3}}) {
        const auto m = gen_mult_family3(k, n);
        if (m.beta > 1.0 + 1e-12) fail("family 3 beta above 1");
        if (mult_root_count(m.p, m.n, m.n_prime, m.a) != m.root_count)
            fail("family 3 gcd root count");
        ++count;
    }
    std::ostringstream os;
    os << "reference instances exact; " << count << " further parameter sets verified";
    return os.str();
}

// ---------------------------------------------------------------- criterion 6
std::string criterion6() {
    std::ifstream in(std::string(QSP_DATA_DIR) + "/exponent_table.csv");
    if (!in) fail("cannot open exponent_table.csv");
    std::string line;
    std::getline(in, line);
    const auto rows = exponent_table(4.876);
    std::size_t i = 0;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        const auto comma = line.find(',');
        const double beta = std::stod(line.substr(0, comma));
        const double expect = std::stod(line.substr(comma + 1));
        if (i >= rows.size()) fail("fixture has extra rows");
        if (std::abs(rows[i].first - beta) > 1e-9) fail("beta column mismatch");
        if (std::abs(rows[i].second - expect) > 0.001)
            fail("exponent off at beta=" + std::to_string(beta));
        ++i;
    }
    if (i != 7) fail("expected 7 fixture rows");
    const double th = beats_generic_beta_threshold(4.876);
    if (!(th < 0.1026 && th > 0.102 && th < 0.103))
        fail("beats-generic threshold out of range: " + std::to_string(th));
    std::ostringstream os;
    os << "all 7 exponents within 0.001; threshold beta < " << th << " (< 0.103)";
    return os.str();
}

// ---------------------------------------------------------------- criterion 7
std::string criterion7() {
    ExtField F(5, 3);
    const DemoCurve demo = find_prime_order_curve(F);
    const LinearizedQsp qsp = LinearizedQsp::linearize(F, FpPoly::parse("X^2+X+1", 5));
    const FactorBase fb(demo.curve, qsp);
    const std::size_t target = fb.points().size() + 10;
    // twenty seeded instances, each recovering k and cross-checking BSGS
    std::mt19937_64 krng(777);
    for (int t = 0; t < 20; ++t) {
        const mpz_class k = static_cast<unsigned long>(
            1 + krng() % (mpz_get_ui(demo.order.get_mpz_t()) - 1));
        const auto rep = ecdlp_demo(demo.curve, demo.generator, demo.order, qsp, k, 2,
                                    9000 + t, DecomposeMode::Semaev);
        if (!rep.agree) fail("instance " + std::to_string(t) + " disagrees with BSGS");
        if (rep.stats.relations < target) fail("too few relations gathered");
    }
    // decomposition rate: mean number of distinct-point pair decompositions
    // per uniformly random group element, against |F|^2/(2 p^n). Pairs with
    // a repeated point fall outside the |F|^m/m! counting and are reported
    // separately.
    const double predicted =
        static_cast<double>(fb.points().size()) * fb.points().size() / (2.0 * 125.0);
    std::mt19937_64 rng(99);
    std::uniform_int_distribution<std::uint64_t> dist(0, mpz_get_ui(demo.order.get_mpz_t()) - 1);
    const int trials = 500;
    double sum = 0, sum2 = 0, sum_all = 0;
    for (int t = 0; t < trials; ++t) {
        const CurvePoint R = demo.curve.scalar_mul(static_cast<unsigned long>(dist(rng)),
                                                   demo.generator);
        const auto pairs = decompose_all_pairs(R, fb, DecomposeMode::Semaev);
        int distinct = 0;
        for (const auto& pr : pairs)
            if (pr[0] != pr[1]) ++distinct;
        sum += distinct;
        sum2 += static_cast<double>(distinct) * distinct;
        sum_all += static_cast<double>(pairs.size());
    }
    const double mean = sum / trials;
    const double var = (sum2 - sum * sum / trials) / (trials - 1);
    const double sigma = std::sqrt(var / trials);
    std::ostringstream os;
    os << "20/20 BSGS agreement; rate " << mean << " vs predicted " << predicted << " (3 sigma "
       << 3 * sigma << ", doubles included " << sum_all / trials << ")";
    if (std::abs(mean - predicted) > 3 * sigma)
        fail("rate outside 3 sigma: " + os.str());
    return os.str();
}

// ---------------------------------------------------------------- criterion 8
std::string criterion8() {
    ExtField F7(7, 1);
    const DemoCurve d7 = find_prime_order_curve(F7);
    const std::size_t m7 = semaev_s3_validate(d7.curve);
    if (m7 != 0) fail("mismatches over F_7: " + std::to_string(m7));
    ExtField F25(5, 2);
    const DemoCurve d25 = find_prime_order_curve(F25);
    const std::size_t m25 = semaev_s3_validate(d25.curve);
    if (m25 != 0) fail("mismatches over F_25: " + std::to_string(m25));
    return "zero mismatches over all x-triples of both curves";
}

// ---------------------------------------------------------------- criterion 9
std::string criterion9() {
    const auto sparse = mersenne_sparse_enumerate(5, 7);
    std::size_t deg15 = 0;
    bool member = false;
    for (const auto& sd : sparse)
        if (sd.n_prime == 15) {
            ++deg15;
            if (sd.f == FpPoly::parse("X^15+X^7+X^3+X+1", 2)) member = true;
        }
    if (deg15 < 1) fail("no degree-15 sparse divisor found");
    if (!member) fail("the reference degree-15 member is missing");
    const auto h3 = heuristic_density(31, 15, 5, 3);
    if (!(h3.predicted_count < 0.01))
        fail("heuristic prediction not below 0.01: " + std::to_string(h3.predicted_count));
    const auto h7 = heuristic_density(31, 15, 5, 7);
    if (h7.exists_prediction) fail("heuristic unexpectedly predicts existence at ell=7");
    std::ostringstream os;
    os << deg15 << " degree-15 divisor(s) at sparsity 7 exist while the heuristic predicts "
       << h3.predicted_count << " (ell=3) and non-existence up to ell="
       << static_cast<int>(h7.threshold);
    return os.str();
}

// --------------------------------------------------------------- criterion 10
std::string criterion10() {
    // As stated: b != 0 splitters only at n~ = 3 over n~ in {2..7}. The scan
    // is exhaustive over (a, b) in F_{2^n~}^2; results above the d^2-d+1
    // bound are reported in full.
    std::ostringstream analysis;
    bool as_stated = true;
    for (unsigned nt = 2; nt <= 7; ++nt) {
        const auto rep = trinomial_classification_check(2, 1, 2, nt);
        analysis << " n~=" << nt << ":" << rep.splitting.size();
        if (nt == 3) {
            if (rep.splitting.size() == 0) as_stated = false;
            if (!rep.classification_holds) as_stated = false;
        } else if (!rep.splitting.empty()) {
            as_stated = false;
            if (nt > 3 && !rep.splitting.empty()) {
                const auto& st = rep.splitting.front();
                analysis << "(e.g. a=" << st.a.to_string() << ", b=" << st.b.to_string() << ")";
            }
        }
    }
    if (!as_stated) {
        // The bound-side content of the classification does hold: nothing
        // below d^2-d+1 = 3 and the bullet-2 structure exactly at 3. Above
        // the bound every 2-dimensional root subspace whose subspace
        // polynomial has a nonzero middle coefficient is a splitter, so the
        // counts match the Gaussian binomial [n~ choose 2]_2 minus the b = 0
        // cases, and the as-stated claim cannot hold.
        fail("splitters exist above the bound; counts per n~:" + analysis.str() +
             "; the d^2-d+1 bound itself holds (0 at n~=2, all bullet-2 at n~=3)");
    }
    return "b != 0 splitters only at n~ = 3" + analysis.str();
}

} // namespace

int main() {
    Runner r;
    r.run(1, "reference table reproduction", criterion1);
    r.run(2, "theorem floor beta >= 3/4", criterion2);
    r.run(3, "bound machinery oracle equivalence", criterion3);
    r.run(4, "split-test triple agreement", criterion4);
    r.run(5, "multiplicative families", criterion5);
    r.run(6, "complexity table", criterion6);
    r.run(7, "ECDLP end-to-end", criterion7);
    r.run(8, "Semaev S3 validation", criterion8);
    r.run(9, "Mersenne heuristic counterexample", criterion9);
    r.run(10, "trinomial classification property", criterion10);
    if (r.failures == 0) {
        std::printf("all criteria passed\n");
    } else {
        std::printf("%d criterion/criteria failed\n", r.failures);
    }
    return r.failures;
}
