#ifndef QSP_COMPLEXITY_HPP
#define QSP_COMPLEXITY_HPP

#include <utility>
#include <vector>

namespace qsp {

// Cost model of the QSP index-calculus algorithm: running time
// O~(p^(e n)) with e depending on beta through alpha_beta = 1/(2 c beta).
struct ComplexityEstimate {
    double beta = 0.0;
    double c = 4.876;
    unsigned m = 2;
    double alpha_beta = 0.0;        // 1/(2 c beta)
    double exponent = 0.0;          // max(2 alpha/m, 1 - alpha(1/2 - 1/m))
    double exponent_limit = 0.0;    // 1 - alpha/2, the m -> inf limit (alpha < 2)
    bool beats_bruteforce = false;  // m > max(2 alpha, 2)
    bool beats_generic = false;     // alpha > 1
};

ComplexityEstimate complexity_estimate(double beta, double c, unsigned m);

// argmin of the exponent over integer m in [2, m_max]; the exponent
// decreases toward its limit, so this reports m_max together with the
// limiting exponent in the estimate
unsigned optimal_m(double beta, double c, unsigned m_max = 64);

// beta below which the algorithm beats generic sqrt-time algorithms
inline double beats_generic_beta_threshold(double c) { return 1.0 / (2.0 * c); }

// (beta, limiting exponent) rows for the reference betas
std::vector<std::pair<double, double>> exponent_table(double c);

} // namespace qsp

#endif
