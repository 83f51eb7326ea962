#ifndef SYMREP_FP_HPP
#define SYMREP_FP_HPP

#include <cstdint>
#include <stdexcept>
#include <string>

#include <gmpxx.h>

namespace symrep {

inline constexpr std::uint64_t kMersenne31 = (1ull << 31) - 1;
inline constexpr std::uint64_t kMersenne61 = (1ull << 61) - 1;

struct PrimeCollision : std::runtime_error {
    explicit PrimeCollision(const std::string& msg) : std::runtime_error(msg) {}
};

// Arithmetic mod a prime p < 2^62. Mersenne moduli 2^31-1 and 2^61-1 get a
// fold-based reduction; anything else goes through 128-bit division.
class PrimeField {
public:
    explicit PrimeField(std::uint64_t p) : p_(p) {
        if (p < 2 || p >= (1ull << 62))
            throw std::invalid_argument("prime out of supported range");
        if (mpz_probab_prime_p(mpz_class(p).get_mpz_t(), 32) == 0)
            throw std::invalid_argument("modulus is not prime");
        mersenne_bits_ = 0;
        if (p == kMersenne31) mersenne_bits_ = 31;
        if (p == kMersenne61) mersenne_bits_ = 61;
    }

    std::uint64_t modulus() const { return p_; }

    std::uint64_t add(std::uint64_t a, std::uint64_t b) const {
        std::uint64_t s = a + b;
        return s >= p_ ? s - p_ : s;
    }
    std::uint64_t sub(std::uint64_t a, std::uint64_t b) const {
        return a >= b ? a - b : a + p_ - b;
    }
    std::uint64_t neg(std::uint64_t a) const { return a ? p_ - a : 0; }

    std::uint64_t mul(std::uint64_t a, std::uint64_t b) const {
        unsigned __int128 t = static_cast<unsigned __int128>(a) * b;
        if (mersenne_bits_) {
            std::uint64_t lo = static_cast<std::uint64_t>(t & p_);
            std::uint64_t hi = static_cast<std::uint64_t>(t >> mersenne_bits_);
            std::uint64_t r = lo + (hi & p_) + (hi >> mersenne_bits_);
            while (r >= p_) r -= p_;
            return r;
        }
        return static_cast<std::uint64_t>(t % p_);
    }

    std::uint64_t pow(std::uint64_t a, std::uint64_t e) const {
        std::uint64_t r = 1;
        while (e) {
            if (e & 1) r = mul(r, a);
            a = mul(a, a);
            e >>= 1;
        }
        return r;
    }

    std::uint64_t inv(std::uint64_t a) const {
        if (a == 0) throw std::domain_error("inverse of zero");
        return pow(a, p_ - 2);
    }

    // Reduce an exact rational; rejects denominators divisible by p.
    std::uint64_t reduce(const mpq_class& q) const {
        mpz_class num = q.get_num(), den = q.get_den();
        mpz_class pz = mpz_class(static_cast<unsigned long>(p_ & 0xffffffff)) +
                       (mpz_class(static_cast<unsigned long>(p_ >> 32)) << 32);
        mpz_class nm = num % pz, dm = den % pz;
        if (nm < 0) nm += pz;
        if (dm == 0)
            throw PrimeCollision("denominator divisible by " + std::to_string(p_) +
                                 "; pick a different prime");
        std::uint64_t n = mpz_to_u64(nm), d = mpz_to_u64(dm);
        return mul(n, inv(d));
    }

private:
    static std::uint64_t mpz_to_u64(const mpz_class& z) {
        mpz_class lo = z & 0xffffffff, hi = z >> 32;
        return lo.get_ui() | (static_cast<std::uint64_t>(hi.get_ui()) << 32);
    }
    std::uint64_t p_;
    int mersenne_bits_;
};

}  // namespace symrep

#endif
