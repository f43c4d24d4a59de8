#ifndef QSP_EXT_FIELD_HPP
#define QSP_EXT_FIELD_HPP

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "qsp/config.hpp"
#include "qsp/fp_poly.hpp"

namespace qsp {

class ExtElem;

// F_{p^n} as F_p[X]/(modulus). Construction with (p, n) picks the first
// irreducible monic polynomial of degree n in base-p counter order over
// the coefficient vector (c_0 least significant), so runs are reproducible.
// Cheap to copy; all state is shared and immutable.
class ExtField {
public:
    ExtField(std::uint64_t p, unsigned n);
    explicit ExtField(const FpPoly& modulus);

    std::uint64_t p() const;
    unsigned n() const;
    const FpPoly& modulus() const;
    mpz_class order() const;       // p^n
    double log2_order() const;

    ExtElem zero() const;
    ExtElem one() const;
    ExtElem from_int(std::int64_t a) const;
    ExtElem from_poly(const FpPoly& f) const;   // reduced mod modulus
    // base-p digits of idx (little endian) as coefficients; idx in [0, p^n)
    ExtElem from_index(const mpz_class& idx) const;
    mpz_class to_index(const ExtElem& x) const;
    ExtElem element_x() const;                  // the class of X

    bool same(const ExtField& other) const;

    // All field elements in index order. Throws cap_exceeded past the cap.
    std::vector<ExtElem> all_elements(const Caps& caps = default_caps()) const;

    // shared representation; opaque outside the implementation file
    struct Rep;
    const Rep& rep() const { return *rep_; }

private:
    std::shared_ptr<const Rep> rep_;
};

// The image of the class of X of `small` inside `big` (first root of
// small's modulus in index order), when [big : small] is integral.
ExtElem find_embedding_root(const ExtField& small, const ExtField& big,
                            const Caps& caps = default_caps());
// Embedding along a chosen root: sum c_i root^i.
ExtElem embed(const ExtElem& x, const ExtField& big, const ExtElem& root);

class ExtElem {
public:
    const ExtField& field() const { return field_; }
    bool is_zero() const;
    bool is_one() const;
    // representative polynomial of degree < n
    FpPoly rep_poly() const;
    const std::vector<std::uint64_t>& coeffs() const { return v_; }
    // true if the element lies in the prime subfield
    bool in_prime_field() const;

    ExtElem operator-() const;
    friend ExtElem operator+(const ExtElem& a, const ExtElem& b);
    friend ExtElem operator-(const ExtElem& a, const ExtElem& b);
    friend ExtElem operator*(const ExtElem& a, const ExtElem& b);
    friend ExtElem operator/(const ExtElem& a, const ExtElem& b);
    friend bool operator==(const ExtElem& a, const ExtElem& b);
    friend bool operator!=(const ExtElem& a, const ExtElem& b) { return !(a == b); }

    ExtElem inv() const;
    ExtElem pow(const mpz_class& e) const;
    ExtElem frobenius(unsigned i = 1) const;    // x -> x^(p^i)

    // 1 for a nonzero square, -1 for a non-square, 0 for zero (odd q)
    int quadratic_character() const;
    std::optional<ExtElem> sqrt() const;

    std::string to_string() const;

    friend class ExtField;

private:
    ExtElem(ExtField f, std::vector<std::uint64_t> v) : field_(std::move(f)), v_(std::move(v)) {}

    ExtField field_;
    std::vector<std::uint64_t> v_;
};

} // namespace qsp

#endif
