#ifndef QSP_SYMBOLIC_HPP
#define QSP_SYMBOLIC_HPP

#include <cstdint>
#include <string>
#include <vector>

namespace qsp {

// Four-symbol abstraction of values in F_{p^n}[a_0..a_ell]:
//   Zero: the value is 0
//   One:  the value is 1
//   APow: the value is a power of (-a_ell), hence nonzero
//   Star: unconstrained
enum class Sym : std::uint8_t { Zero = 0, One = 1, APow = 2, Star = 3 };

Sym sym_add(Sym x, Sym y);
Sym sym_mul(Sym x, Sym y);
std::string sym_name(Sym s);

// Square matrix of symbols, row-major; indices are 0-based here while the
// formulas below use the 1-based convention of companion-matrix algebra.
class SymMatrix {
public:
    SymMatrix(std::size_t dim) : dim_(dim), e_(dim * dim, Sym::Zero) {}

    std::size_t dim() const { return dim_; }
    Sym at(std::size_t i, std::size_t j) const { return e_[i * dim_ + j]; }
    Sym& at(std::size_t i, std::size_t j) { return e_[i * dim_ + j]; }

    friend SymMatrix operator*(const SymMatrix& a, const SymMatrix& b);
    friend bool operator==(const SymMatrix& a, const SymMatrix& b) {
        return a.dim_ == b.dim_ && a.e_ == b.e_;
    }

    std::string to_string() const;

private:
    std::size_t dim_;
    std::vector<Sym> e_;
};

// The abstraction M of every sigma-power of the companion matrix of a
// linearized polynomial with parameters (n', ell): subdiagonal ones, last
// column Star (rows 1..ell), APow (row ell+1), Zero below.
SymMatrix sym_companion(unsigned n_prime, unsigned ell);

SymMatrix sym_pow(const SymMatrix& m, unsigned n);

// False iff a diagonal entry is Zero or an off-diagonal entry is One or
// APow; such a matrix cannot abstract the identity.
bool identity_representable(const SymMatrix& m);

// Entry (i, j), 1-based, of M^n computed by the closed multinomial formula
// for powers of companion matrices, evaluated over the symbol semiring.
Sym chen_louck_entry(unsigned n_prime, unsigned ell, unsigned n, unsigned i, unsigned j);

// Witness of non-identity below the bound: for n < n' the (n+1, 1) entry is
// One; for n' <= n < min_n the (i_n, 1) entry is APow with
// i_n = n - (n'-ell)*floor((n-ell)/(n'-ell)) + 1.
struct Witness {
    unsigned row;   // 1-based row index, column is 1
    Sym expected;
};
Witness witness_index(unsigned n, unsigned n_prime, unsigned ell);

} // namespace qsp

#endif
