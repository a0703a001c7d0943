#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace gms {

// Coefficient field: the rationals or a prime field F_p.
struct FieldSpec {
    enum class Kind { Rationals, Prime };
    Kind kind = Kind::Rationals;
    std::uint64_t p = 0;  // modulus when kind == Prime

    static FieldSpec rationals() { return FieldSpec{Kind::Rationals, 0}; }
    static FieldSpec prime(std::uint64_t p);

    bool is_rationals() const { return kind == Kind::Rationals; }
    std::uint64_t characteristic() const { return is_rationals() ? 0 : p; }

    bool operator==(const FieldSpec& o) const { return kind == o.kind && p == o.p; }

    std::string name() const { return is_rationals() ? "q" : "f" + std::to_string(p); }

    // Parses "q", "Q", "f2", "F7", ...
    static FieldSpec parse(const std::string& s);
};

// Coefficient ring for chain complexes: the integers or a field.
struct RingSpec {
    enum class Kind { Integers, Field };
    Kind kind = Kind::Integers;
    FieldSpec field;  // valid when kind == Field

    static RingSpec integers() { return RingSpec{Kind::Integers, {}}; }
    static RingSpec over(FieldSpec f) { return RingSpec{Kind::Field, f}; }
    static RingSpec rationals() { return over(FieldSpec::rationals()); }

    bool is_integers() const { return kind == Kind::Integers; }
    bool is_field() const { return kind == Kind::Field; }

    std::uint64_t characteristic() const {
        return is_integers() ? 0 : field.characteristic();
    }

    bool operator==(const RingSpec& o) const {
        return kind == o.kind && (!is_field() || field == o.field);
    }

    std::string name() const { return is_integers() ? "z" : field.name(); }

    // Parses "z", "q", "f2", ...
    static RingSpec parse(const std::string& s);
};

bool is_prime_u64(std::uint64_t n);

// Arithmetic in F_p for p < 2^31, on residues in [0, p).
struct PrimeOps {
    std::uint64_t p;

    std::uint64_t add(std::uint64_t a, std::uint64_t b) const {
        std::uint64_t s = a + b;
        return s >= p ? s - p : s;
    }
    std::uint64_t sub(std::uint64_t a, std::uint64_t b) const { return a >= b ? a - b : a + p - b; }
    std::uint64_t neg(std::uint64_t a) const { return a ? p - a : 0; }
    std::uint64_t mul(std::uint64_t a, std::uint64_t b) const { return (a * b) % p; }
    std::uint64_t pow(std::uint64_t a, std::uint64_t e) const {
        std::uint64_t r = 1 % p;
        while (e) {
            if (e & 1) r = mul(r, a);
            a = mul(a, a);
            e >>= 1;
        }
        return r;
    }
    std::uint64_t inv(std::uint64_t a) const {
        if (a == 0) throw std::domain_error("PrimeOps::inv of zero");
        return pow(a, p - 2);
    }
    // Reduction of an exact rational; the denominator must be a unit mod p.
    std::uint64_t reduce(const mpq_class& q) const;
};

}  // namespace gms
