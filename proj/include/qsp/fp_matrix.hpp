#ifndef QSP_FP_MATRIX_HPP
#define QSP_FP_MATRIX_HPP

#include <cstdint>
#include <optional>
#include <vector>

#include "qsp/fp.hpp"
#include "qsp/fp_poly.hpp"

namespace qsp {

// Square matrix over F_p, row-major.
class FpMatrix {
public:
    FpMatrix(std::uint64_t p, std::size_t dim) : p_(p), dim_(dim), e_(dim * dim, 0) {}

    static FpMatrix identity(std::uint64_t p, std::size_t dim);
    // Companion matrix of a monic polynomial: subdiagonal ones and
    // last column -a_0..-a_{d-1}.
    static FpMatrix companion(const FpPoly& f);

    std::uint64_t p() const { return p_; }
    std::size_t dim() const { return dim_; }
    std::uint64_t at(std::size_t i, std::size_t j) const { return e_[i * dim_ + j]; }
    std::uint64_t& at(std::size_t i, std::size_t j) { return e_[i * dim_ + j]; }

    friend FpMatrix operator*(const FpMatrix& a, const FpMatrix& b);
    friend FpMatrix operator-(const FpMatrix& a, const FpMatrix& b);
    friend bool operator==(const FpMatrix& a, const FpMatrix& b) {
        return a.p_ == b.p_ && a.dim_ == b.dim_ && a.e_ == b.e_;
    }

    FpMatrix pow(std::uint64_t e) const;
    bool is_identity() const;
    std::size_t rank() const;

    // Smallest k <= bound with A^k = I, computed incrementally.
    // Throws std::domain_error if A is singular.
    std::optional<std::uint64_t> order(std::uint64_t bound) const;

private:
    std::uint64_t p_;
    std::size_t dim_;
    std::vector<std::uint64_t> e_;
};

} // namespace qsp

#endif
