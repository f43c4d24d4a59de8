#include "qsp/ext_matrix.hpp"

#include <stdexcept>

namespace qsp {

ExtMatrix::ExtMatrix(const ExtField& field, std::size_t dim)
    : field_(field), dim_(dim), e_(dim * dim, field.zero()) {}

ExtMatrix ExtMatrix::identity(const ExtField& field, std::size_t dim) {
    ExtMatrix m(field, dim);
    for (std::size_t i = 0; i < dim; ++i) m.set(i, i, field.one());
    return m;
}

ExtMatrix operator*(const ExtMatrix& a, const ExtMatrix& b) {
    if (!a.field_.same(b.field_) || a.dim_ != b.dim_)
        throw std::invalid_argument("ExtMatrix: mismatch");
    const std::size_t n = a.dim_;
    ExtMatrix c(a.field_, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t k = 0; k < n; ++k) {
            const ExtElem& aik = a.e_[i * n + k];
            if (aik.is_zero()) continue;
            for (std::size_t j = 0; j < n; ++j) {
                if (b.e_[k * n + j].is_zero()) continue;
                c.e_[i * n + j] = c.e_[i * n + j] + aik * b.e_[k * n + j];
            }
        }
    return c;
}

ExtMatrix operator-(const ExtMatrix& a, const ExtMatrix& b) {
    if (!a.field_.same(b.field_) || a.dim_ != b.dim_)
        throw std::invalid_argument("ExtMatrix: mismatch");
    ExtMatrix c(a.field_, a.dim_);
    for (std::size_t i = 0; i < a.e_.size(); ++i) c.e_[i] = a.e_[i] - b.e_[i];
    return c;
}

bool operator==(const ExtMatrix& a, const ExtMatrix& b) {
    if (!a.field_.same(b.field_) || a.dim_ != b.dim_) return false;
    for (std::size_t i = 0; i < a.e_.size(); ++i)
        if (!(a.e_[i] == b.e_[i])) return false;
    return true;
}

ExtMatrix ExtMatrix::frobenius(unsigned i) const {
    ExtMatrix m(field_, dim_);
    for (std::size_t k = 0; k < e_.size(); ++k) m.e_[k] = e_[k].frobenius(i);
    return m;
}

bool ExtMatrix::is_identity() const {
    for (std::size_t i = 0; i < dim_; ++i)
        for (std::size_t j = 0; j < dim_; ++j) {
            if (i == j ? !at(i, j).is_one() : !at(i, j).is_zero()) return false;
        }
    return true;
}

std::size_t ExtMatrix::rank() const {
    std::vector<ExtElem> m = e_;
    const std::size_t n = dim_;
    std::size_t rank = 0;
    for (std::size_t col = 0; col < n && rank < n; ++col) {
        std::size_t pivot = rank;
        while (pivot < n && m[pivot * n + col].is_zero()) ++pivot;
        if (pivot == n) continue;
        if (pivot != rank)
            for (std::size_t j = 0; j < n; ++j) std::swap(m[pivot * n + j], m[rank * n + j]);
        const ExtElem inv = m[rank * n + col].inv();
        for (std::size_t j = col; j < n; ++j) m[rank * n + j] = m[rank * n + j] * inv;
        for (std::size_t r = 0; r < n; ++r) {
            if (r == rank || m[r * n + col].is_zero()) continue;
            const ExtElem f = m[r * n + col];
            for (std::size_t j = col; j < n; ++j)
                m[r * n + j] = m[r * n + j] - f * m[rank * n + j];
        }
        ++rank;
    }
    return rank;
}

} // namespace qsp
