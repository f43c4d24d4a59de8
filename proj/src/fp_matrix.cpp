#include "qsp/fp_matrix.hpp"

#include <stdexcept>

namespace qsp {

FpMatrix FpMatrix::identity(std::uint64_t p, std::size_t dim) {
    FpMatrix m(p, dim);
    for (std::size_t i = 0; i < dim; ++i) m.at(i, i) = 1;
    return m;
}

FpMatrix FpMatrix::companion(const FpPoly& f) {
    if (!f.is_monic() || f.degree() < 1)
        throw std::invalid_argument("FpMatrix::companion: f must be monic of degree >= 1");
    const std::size_t d = static_cast<std::size_t>(f.degree());
    FpMatrix m(f.p(), d);
    for (std::size_t i = 1; i < d; ++i) m.at(i, i - 1) = 1;
    for (std::size_t i = 0; i < d; ++i) m.at(i, d - 1) = fp_neg(f.coeff(i), f.p());
    return m;
}

FpMatrix operator*(const FpMatrix& a, const FpMatrix& b) {
    if (a.p_ != b.p_) throw std::invalid_argument("FpMatrix: mismatched characteristic");
    if (a.dim_ != b.dim_) throw std::invalid_argument("FpMatrix: dimension mismatch");
    const std::size_t n = a.dim_;
    const std::uint64_t p = a.p_;
    FpMatrix c(p, n);
    // 128-bit products: (p-1)^2 can approach 2^62
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t k = 0; k < n; ++k) {
            const std::uint64_t aik = a.e_[i * n + k];
            if (aik == 0) continue;
            unsigned __int128 f = aik;
            for (std::size_t j = 0; j < n; ++j) {
                unsigned __int128 acc = c.e_[i * n + j];
                acc += f * b.e_[k * n + j];
                c.e_[i * n + j] = static_cast<std::uint64_t>(acc % p);
            }
        }
    }
    return c;
}

FpMatrix operator-(const FpMatrix& a, const FpMatrix& b) {
    if (a.p_ != b.p_ || a.dim_ != b.dim_) throw std::invalid_argument("FpMatrix: mismatch");
    FpMatrix c(a.p_, a.dim_);
    for (std::size_t i = 0; i < a.e_.size(); ++i) c.e_[i] = fp_sub(a.e_[i], b.e_[i], a.p_);
    return c;
}

FpMatrix FpMatrix::pow(std::uint64_t e) const {
    FpMatrix result = identity(p_, dim_);
    FpMatrix base = *this;
    while (e) {
        if (e & 1) result = result * base;
        base = base * base;
        e >>= 1;
    }
    return result;
}

bool FpMatrix::is_identity() const {
    for (std::size_t i = 0; i < dim_; ++i)
        for (std::size_t j = 0; j < dim_; ++j)
            if (at(i, j) != (i == j ? 1u : 0u)) return false;
    return true;
}

std::size_t FpMatrix::rank() const {
    std::vector<std::uint64_t> m = e_;
    const std::size_t n = dim_;
    std::size_t rank = 0;
    for (std::size_t col = 0; col < n && rank < n; ++col) {
        std::size_t pivot = rank;
        while (pivot < n && m[pivot * n + col] == 0) ++pivot;
        if (pivot == n) continue;
        std::swap_ranges(m.begin() + static_cast<std::ptrdiff_t>(pivot * n),
                         m.begin() + static_cast<std::ptrdiff_t>((pivot + 1) * n),
                         m.begin() + static_cast<std::ptrdiff_t>(rank * n));
        const std::uint64_t inv = fp_inv(m[rank * n + col], p_);
        for (std::size_t j = col; j < n; ++j) m[rank * n + j] = fp_mul(m[rank * n + j], inv, p_);
        for (std::size_t r = 0; r < n; ++r) {
            if (r == rank || m[r * n + col] == 0) continue;
            const std::uint64_t f = m[r * n + col];
            for (std::size_t j = col; j < n; ++j)
                m[r * n + j] = fp_sub(m[r * n + j], fp_mul(f, m[rank * n + j], p_), p_);
        }
        ++rank;
    }
    return rank;
}

std::optional<std::uint64_t> FpMatrix::order(std::uint64_t bound) const {
    if (bound < 1) throw std::invalid_argument("FpMatrix::order: bound must be >= 1");
    if (rank() != dim_) throw std::domain_error("FpMatrix::order: matrix is singular");
    FpMatrix acc = *this;
    for (std::uint64_t k = 1; k <= bound; ++k) {
        if (acc.is_identity()) return k;
        if (k < bound) acc = acc * *this;
    }
    return std::nullopt;
}

} // namespace qsp
