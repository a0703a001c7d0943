#include "gmstab/field.hpp"

#include <algorithm>
#include <cctype>

namespace gms {

bool is_prime_u64(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

FieldSpec FieldSpec::prime(std::uint64_t p) {
    if (p >= (1ull << 31)) throw std::invalid_argument("prime field: modulus too large");
    if (!is_prime_u64(p)) throw std::invalid_argument("prime field: modulus is not prime");
    return FieldSpec{Kind::Prime, p};
}

FieldSpec FieldSpec::parse(const std::string& s) {
    std::string t;
    for (char c : s) t += static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
    if (t == "q") return rationals();
    if (t.size() >= 2 && t[0] == 'f') {
        std::uint64_t p = std::stoull(t.substr(1));
        return prime(p);
    }
    throw std::invalid_argument("unrecognized field '" + s + "' (expected q or f<p>)");
}

RingSpec RingSpec::parse(const std::string& s) {
    std::string t;
    for (char c : s) t += static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
    if (t == "z") return integers();
    return over(FieldSpec::parse(s));
}

std::uint64_t PrimeOps::reduce(const mpq_class& q) const {
    mpz_class num = q.get_num(), den = q.get_den();
    mpz_class pz(static_cast<unsigned long>(p));
    mpz_class nr = num % pz;
    if (nr < 0) nr += pz;
    mpz_class dr = den % pz;
    if (dr == 0) throw std::domain_error("rational has non-unit denominator mod p");
    std::uint64_t n64 = nr.get_ui();
    std::uint64_t d64 = dr.get_ui();
    return mul(n64, inv(d64));
}

}  // namespace gms
