#ifndef QSP_CONFIG_HPP
#define QSP_CONFIG_HPP

#include <cstdint>
#include <stdexcept>
#include <string>

namespace qsp {

// Thrown when an operation would exceed a configured size cap.
// The CLI maps this to exit code 3.
struct cap_exceeded : std::runtime_error {
    explicit cap_exceeded(const std::string& what) : std::runtime_error(what) {}
};

// Size caps for enumerative operations. All values are log2 of the
// largest admissible field size; construction of larger fields is still
// allowed, only element enumeration is capped.
struct Caps {
    double field_enum_log2 = 40.0;   // root/element enumeration
    double point_scan_log2 = 22.0;   // curve point counting by x-scan
    double pair_enum_log2 = 26.0;    // (a,b) scans, squared field size
    int mersenne_k_max = 7;          // subset enumeration of X^(2^k-1)-1 factors
};

inline const Caps& default_caps() {
    static const Caps caps{};
    return caps;
}

} // namespace qsp

#endif
