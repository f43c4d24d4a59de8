#ifndef QSP_EXT_MATRIX_HPP
#define QSP_EXT_MATRIX_HPP

#include <cstddef>
#include <vector>

#include "qsp/ext_field.hpp"

namespace qsp {

// Square matrix with entries in an extension field, row-major.
class ExtMatrix {
public:
    ExtMatrix(const ExtField& field, std::size_t dim);

    static ExtMatrix identity(const ExtField& field, std::size_t dim);

    const ExtField& field() const { return field_; }
    std::size_t dim() const { return dim_; }
    const ExtElem& at(std::size_t i, std::size_t j) const { return e_[i * dim_ + j]; }
    void set(std::size_t i, std::size_t j, const ExtElem& v) { e_[i * dim_ + j] = v; }

    friend ExtMatrix operator*(const ExtMatrix& a, const ExtMatrix& b);
    friend ExtMatrix operator-(const ExtMatrix& a, const ExtMatrix& b);
    friend bool operator==(const ExtMatrix& a, const ExtMatrix& b);

    // entrywise x -> x^(p^i)
    ExtMatrix frobenius(unsigned i = 1) const;
    bool is_identity() const;
    std::size_t rank() const;

private:
    ExtField field_;
    std::size_t dim_;
    std::vector<ExtElem> e_;
};

} // namespace qsp

#endif
