#pragma once

#include <cstdint>
#include <string>

#include "ahx/errors.hpp"

namespace ahx {

// Deterministic Miller–Rabin, exact for every 64-bit input.
bool is_prime_u64(std::uint64_t n);

// (a * b) mod m without overflow, m < 2^64.
std::uint64_t mulmod_u64(std::uint64_t a, std::uint64_t b, std::uint64_t m);
std::uint64_t powmod_u64(std::uint64_t a, std::uint64_t e, std::uint64_t m);
// Inverse of a mod m for gcd(a, m) = 1 (extended Euclid).
std::uint64_t invmod_u64(std::uint64_t a, std::uint64_t m);

// Residue modulo a prime p. The modulus travels with the element; mixing
// moduli is a context_mismatch. Primality of p is validated once where
// contexts enter the system (CLI parsing, policy construction), not per element.
class FpElem {
  public:
    FpElem() : v_(0), p_(2) {}
    FpElem(std::uint64_t value, std::uint64_t p) : v_(value % p), p_(p) {}

    std::uint64_t value() const { return v_; }
    std::uint64_t modulus() const { return p_; }

    bool is_zero() const { return v_ == 0; }
    FpElem make_zero() const { return FpElem(0, p_); }
    FpElem make_one() const { return FpElem(1 % p_, p_); }

    FpElem operator+(const FpElem& o) const {
        require_same(o);
        std::uint64_t s = v_ + o.v_;  // p < 2^63 is enforced at context creation
        if (s >= p_) s -= p_;
        return FpElem(s, p_);
    }
    FpElem operator-(const FpElem& o) const {
        require_same(o);
        return FpElem(v_ >= o.v_ ? v_ - o.v_ : v_ + p_ - o.v_, p_);
    }
    FpElem operator*(const FpElem& o) const {
        require_same(o);
        return FpElem(mulmod_u64(v_, o.v_, p_), p_);
    }
    FpElem operator-() const { return FpElem(v_ == 0 ? 0 : p_ - v_, p_); }

    // Multiplicative inverse; the only failing input is 0.
    FpElem inv() const {
        if (v_ == 0) raise(errc::division_by_zero, "inverse of 0 in F_p");
        return FpElem(invmod_u64(v_, p_), p_);
    }

    // Scale by an arbitrary machine integer (used by formal derivatives).
    FpElem times_int(long k) const {
        std::uint64_t r = static_cast<std::uint64_t>(k >= 0 ? k : -k) % p_;
        FpElem out(mulmod_u64(v_, r, p_), p_);
        return k >= 0 ? out : -out;
    }

    FpElem pow(std::uint64_t e) const { return FpElem(powmod_u64(v_, e, p_), p_); }

    bool operator==(const FpElem& o) const { return p_ == o.p_ && v_ == o.v_; }
    bool operator!=(const FpElem& o) const { return !(*this == o); }

    std::string str() const { return std::to_string(v_); }

  private:
    void require_same(const FpElem& o) const {
        if (p_ != o.p_) raise(errc::context_mismatch, "F_p elements with different p");
    }

    std::uint64_t v_;
    std::uint64_t p_;
};

inline FpElem fp_inv(const FpElem& a) { return a.inv(); }

// Validates a CLI/document modulus: prime and small enough that sums fit u64.
inline void require_prime_modulus(std::uint64_t p) {
    if (p < 2 || p >= (1ull << 62) || !is_prime_u64(p))
        raise(errc::invalid_argument, "modulus " + std::to_string(p) + " is not a valid prime");
}

}  // namespace ahx
