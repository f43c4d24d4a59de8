#ifndef QSP_TRINOMIAL_HPP
#define QSP_TRINOMIAL_HPP

#include <cstdint>
#include <vector>

#include "qsp/config.hpp"
#include "qsp/ext_field.hpp"

namespace qsp {

// One completely splitting trinomial X^(q^d) - b X^q - a X over F_{q^n~}
// found by exhaustive (a, b) enumeration, with its classification status.
struct SplittingTrinomial {
    ExtElem a, b;
    bool bullet2 = false;   // n~ = d^2-d+1, a^(1+q+...+q^((d-1)d)) = (-1)^(d-1),
                            // b = -a^(q e_1), e_1 = sum q^(id), d-1 a power of p
};

struct TrinomialReport {
    std::uint64_t q = 0;
    unsigned d = 0;
    unsigned n_tilde = 0;
    std::uint64_t pairs_scanned = 0;        // (a, b) with b != 0
    std::vector<SplittingTrinomial> splitting;
    // meaningful only when n~ <= d^2-d+1: every splitter matches a bullet
    bool classification_holds = true;
};

// Exhaustive scan of trinomials X^(q^d) - b X^q - a X with b != 0 over
// F_{q^n~}, q = p^k; reports the completely splitting ones and checks them
// against the two-bullet classification.
TrinomialReport trinomial_classification_check(std::uint64_t p, unsigned k, unsigned d,
                                               unsigned n_tilde,
                                               const Caps& caps = default_caps());

} // namespace qsp

#endif
