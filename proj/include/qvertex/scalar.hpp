#pragma once

#include <gmpxx.h>

#include <string>

namespace qv {

/// Exact rational scalar. All coefficient arithmetic in the library runs
/// over this type; nothing is ever rounded.
using Scalar = mpq_class;

inline Scalar scalar_pow(const Scalar& base, long e) {
    if (e == 0) return Scalar(1);
    Scalar b = base;
    bool inv = e < 0;
    unsigned long n = inv ? static_cast<unsigned long>(-(e + 1)) + 1ul : static_cast<unsigned long>(e);
    Scalar r;
    mpz_pow_ui(r.get_num_mpz_t(), b.get_num_mpz_t(), n);
    mpz_pow_ui(r.get_den_mpz_t(), b.get_den_mpz_t(), n);
    r.canonicalize();
    if (inv) r = Scalar(1) / r;
    return r;
}

inline std::string scalar_text(const Scalar& s) {
    return s.get_str();
}

} // namespace qv
