#include "qsp/complexity.hpp"

#include <algorithm>
#include <stdexcept>

namespace qsp {

ComplexityEstimate complexity_estimate(double beta, double c, unsigned m) {
    if (beta <= 0.0) throw std::invalid_argument("complexity_estimate: beta must be positive");
    if (c <= 0.0) throw std::invalid_argument("complexity_estimate: c must be positive");
    if (m < 2) throw std::invalid_argument("complexity_estimate: m must be >= 2");
    ComplexityEstimate e;
    e.beta = beta;
    e.c = c;
    e.m = m;
    e.alpha_beta = 1.0 / (2.0 * c * beta);
    const double md = static_cast<double>(m);
    e.exponent = std::max(2.0 * e.alpha_beta / md,
                          1.0 - e.alpha_beta * (0.5 - 1.0 / md));
    e.exponent_limit = 1.0 - e.alpha_beta / 2.0;
    e.beats_bruteforce = md > std::max(2.0 * e.alpha_beta, 2.0);
    e.beats_generic = e.alpha_beta > 1.0;
    return e;
}

unsigned optimal_m(double beta, double c, unsigned m_max) {
    if (m_max < 2) throw std::invalid_argument("optimal_m: m_max must be >= 2");
    unsigned best = 2;
    double best_e = complexity_estimate(beta, c, 2).exponent;
    for (unsigned m = 3; m <= m_max; ++m) {
        const double e = complexity_estimate(beta, c, m).exponent;
        if (e < best_e) { best_e = e; best = m; }
    }
    return best;
}

std::vector<std::pair<double, double>> exponent_table(double c) {
    static const double betas[] = {1.0, 0.8, 0.6, 0.4, 0.2, 0.15, 0.1};
    std::vector<std::pair<double, double>> rows;
    for (double b : betas) {
        const double alpha = 1.0 / (2.0 * c * b);
        rows.emplace_back(b, 1.0 - alpha / 2.0);
    }
    return rows;
}

} // namespace qsp
