#include "qsp/mersenne.hpp"

#include <cmath>
#include <stdexcept>

namespace qsp {

namespace {

void require_mersenne(unsigned k) {
    if (k < 2) throw std::invalid_argument("mersenne: k must be >= 2");
    if (k > 63) throw cap_exceeded("mersenne: k too large");
    const std::uint64_t n = (1ull << k) - 1;
    if (!is_prime_u64(n)) throw std::invalid_argument("mersenne: 2^k - 1 is not prime");
}

} // namespace

std::vector<FpPoly> mersenne_factors(unsigned k) {
    require_mersenne(k);
    std::vector<FpPoly> factors;
    factors.push_back(FpPoly::parse("X+1", 2));
    // all monic irreducible degree-k polynomials over F_2; constant term 1
    for (std::uint64_t mask = 0; mask < (1ull << (k - 1)); ++mask) {
        std::vector<std::int64_t> cs(k + 1, 0);
        cs[0] = 1;
        cs[k] = 1;
        for (unsigned i = 1; i < k; ++i) cs[i] = (mask >> (i - 1)) & 1;
        FpPoly f(2, cs);
        if (f.is_irreducible()) factors.push_back(f);
    }
    const std::uint64_t n = (1ull << k) - 1;
    if (factors.size() != 1 + (n - 1) / k)
        throw std::logic_error("mersenne_factors: unexpected factor count");
    return factors;
}

mpz_class mersenne_divisor_count(unsigned k, unsigned n_prime) {
    require_mersenne(k);
    const std::uint64_t n = (1ull << k) - 1;
    if (n_prime % k > 1) return 0;
    mpz_class r;
    mpz_bin_uiui(r.get_mpz_t(), n / k, n_prime / k);
    return r;
}

mpz_class mersenne_divisor_count_exhaustive(unsigned k, unsigned n_prime, const Caps& caps) {
    if (static_cast<int>(k) > caps.mersenne_k_max)
        throw cap_exceeded("mersenne_divisor_count_exhaustive: k exceeds cap");
    const auto factors = mersenne_factors(k);
    mpz_class count = 0;
    const std::size_t m = factors.size();
    for (std::uint64_t mask = 0; mask < (1ull << m); ++mask) {
        unsigned deg = 0;
        for (std::size_t i = 0; i < m; ++i)
            if (mask & (1ull << i)) deg += static_cast<unsigned>(factors[i].degree());
        if (deg == n_prime) ++count;
    }
    return count;
}

std::vector<SparseDivisor> mersenne_sparse_enumerate(unsigned k, unsigned lambda_max,
                                                     const Caps& caps) {
    if (static_cast<int>(k) > caps.mersenne_k_max)
        throw cap_exceeded("mersenne_sparse_enumerate: k exceeds cap");
    const auto factors = mersenne_factors(k);
    const unsigned n = (1u << k) - 1;
    std::vector<SparseDivisor> out;
    // DFS over factor subsets with an incrementally built product
    std::vector<FpPoly> stack;
    stack.push_back(FpPoly::one(2));
    auto consider = [&](const FpPoly& prod) {
        const int d = prod.degree();
        if (d < 2 || d >= static_cast<int>(n)) return;
        const FpPoly lambda = prod - FpPoly::monomial(2, static_cast<std::size_t>(d));
        if (lambda.degree() > static_cast<int>(lambda_max)) return;
        SparseDivisor sd;
        sd.f = prod;
        sd.n_prime = static_cast<unsigned>(d);
        sd.lambda_degree = lambda.is_zero() ? 0 : static_cast<unsigned>(lambda.degree());
        out.push_back(std::move(sd));
    };
    auto rec = [&](auto&& self, std::size_t idx) -> void {
        if (idx == factors.size()) {
            consider(stack.back());
            return;
        }
        self(self, idx + 1);
        stack.push_back(stack.back() * factors[idx]);
        self(self, idx + 1);
        stack.pop_back();
    };
    rec(rec, 0);
    std::sort(out.begin(), out.end(), [](const SparseDivisor& a, const SparseDivisor& b) {
        if (a.n_prime != b.n_prime) return a.n_prime < b.n_prime;
        return a.f.coeffs() < b.f.coeffs();
    });
    return out;
}

HeuristicReport heuristic_density(unsigned n, unsigned n_prime, unsigned k, unsigned ell) {
    HeuristicReport r;
    const double count = mersenne_divisor_count(k, n_prime).get_d();
    r.predicted_count = count * std::pow(2.0, static_cast<double>(ell) - n_prime);
    r.threshold = n_prime - (static_cast<double>(n_prime) / k) *
                               std::log2(static_cast<double>(n) / n_prime);
    r.exists_prediction = ell > r.threshold;
    return r;
}

} // namespace qsp
