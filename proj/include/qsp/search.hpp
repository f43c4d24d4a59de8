#ifndef QSP_SEARCH_HPP
#define QSP_SEARCH_HPP

#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "qsp/fp_poly.hpp"
#include "qsp/rational.hpp"

namespace qsp {

// One equivalence-class representative found by the systematic search:
// monic f over F_p whose linearized form splits completely over F_{p^n}
// with n minimal, support indices and n setwise coprime.
struct SearchRecord {
    FpPoly f;
    std::uint64_t p = 0;
    unsigned n = 0;
    unsigned n_prime = 0;
    unsigned ell = 0;
    Rational beta;
    std::set<std::string> tags;         // subset of {"T1", "T2", "T3"}
    std::optional<FpPoly> inverse;      // (X^n - 1)/f when tagged T3
};

struct SearchConfig {
    std::uint64_t p = 2;
    unsigned n_prime_max = 4;
    // admissible coefficient residues; empty means all of F_p
    std::vector<std::int64_t> coeff_set = {0, 1, -1};
    Rational beta_max = Rational(1);
    int workers = 1;
    // inverses larger than this are dropped from serialized output
    int inverse_degree_cap = 64;
};

std::vector<SearchRecord> search_representatives(const SearchConfig& cfg);

// Structural family membership tests (Prop-style generator patterns).
bool matches_type1(const FpPoly& f, std::uint64_t p, unsigned n);   // incl. r = 0 (all-ones)
bool matches_type2(const FpPoly& f, std::uint64_t p, unsigned n);
// Fills tags and the inverse field of a verified record.
void classify_family(SearchRecord& rec);

std::string record_to_json(const SearchRecord& rec, int inverse_degree_cap = 64);
// CSV row in Table layout: f, n, beta, p, T1, T2, T3-inverse
std::string record_to_csv(const SearchRecord& rec);
std::string csv_header();

} // namespace qsp

#endif
