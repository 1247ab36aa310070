#ifndef TORCUR_RATIONAL_HPP
#define TORCUR_RATIONAL_HPP

// Exact arbitrary-precision integers and rationals on top of the GMP C
// interface. Values are immutable in spirit: every operation returns a
// fresh canonical value, so they are safe to share across threads.

#include <gmp.h>

#include <stdexcept>
#include <string>

namespace torcur {

class Int {
  public:
    Int() { mpz_init(z_); }
    Int(long v) { mpz_init_set_si(z_, v); }  // NOLINT: implicit by design
    Int(const Int& o) { mpz_init_set(z_, o.z_); }
    Int(Int&& o) noexcept {
        mpz_init(z_);
        mpz_swap(z_, o.z_);
    }
    ~Int() { mpz_clear(z_); }

    Int& operator=(const Int& o) {
        if (this != &o) mpz_set(z_, o.z_);
        return *this;
    }
    Int& operator=(Int&& o) noexcept {
        mpz_swap(z_, o.z_);
        return *this;
    }

    static Int from_string(const std::string& s);

    friend Int operator+(const Int& a, const Int& b) {
        Int c;
        mpz_add(c.z_, a.z_, b.z_);
        return c;
    }
    friend Int operator-(const Int& a, const Int& b) {
        Int c;
        mpz_sub(c.z_, a.z_, b.z_);
        return c;
    }
    friend Int operator*(const Int& a, const Int& b) {
        Int c;
        mpz_mul(c.z_, a.z_, b.z_);
        return c;
    }
    Int operator-() const {
        Int c;
        mpz_neg(c.z_, z_);
        return c;
    }
    Int& operator+=(const Int& o) {
        mpz_add(z_, z_, o.z_);
        return *this;
    }
    Int& operator-=(const Int& o) {
        mpz_sub(z_, z_, o.z_);
        return *this;
    }
    Int& operator*=(const Int& o) {
        mpz_mul(z_, z_, o.z_);
        return *this;
    }

    friend bool operator==(const Int& a, const Int& b) { return mpz_cmp(a.z_, b.z_) == 0; }
    friend bool operator!=(const Int& a, const Int& b) { return !(a == b); }
    friend bool operator<(const Int& a, const Int& b) { return mpz_cmp(a.z_, b.z_) < 0; }
    friend bool operator>(const Int& a, const Int& b) { return b < a; }

    bool is_zero() const { return mpz_sgn(z_) == 0; }
    int sgn() const { return mpz_sgn(z_); }

    bool fits_slong() const { return mpz_fits_slong_p(z_) != 0; }
    long to_long() const;

    std::string str() const;

    // divides exactly or throws; used for unimodular solves
    Int divexact(const Int& d) const;

    const mpz_t& raw() const { return z_; }
    mpz_t& raw() { return z_; }

  private:
    mpz_t z_;
};

Int factorial(unsigned long n);
Int binomial(long n, long k);  // n >= 0, 0 <= k <= n; zero outside that range
Int gcd(const Int& a, const Int& b);

class Rat {
  public:
    Rat() { mpq_init(q_); }
    Rat(long v) {  // NOLINT: implicit by design
        mpq_init(q_);
        mpq_set_si(q_, v, 1);
    }
    Rat(long num, long den);
    Rat(const Int& num, const Int& den);
    explicit Rat(const Int& num) {
        mpq_init(q_);
        mpq_set_z(q_, num.raw());
    }
    Rat(const Rat& o) {
        mpq_init(q_);
        mpq_set(q_, o.q_);
    }
    Rat(Rat&& o) noexcept {
        mpq_init(q_);
        mpq_swap(q_, o.q_);
    }
    ~Rat() { mpq_clear(q_); }

    Rat& operator=(const Rat& o) {
        if (this != &o) mpq_set(q_, o.q_);
        return *this;
    }
    Rat& operator=(Rat&& o) noexcept {
        mpq_swap(q_, o.q_);
        return *this;
    }

    static Rat from_string(const std::string& s);  // "p/q" or "p"

    friend Rat operator+(const Rat& a, const Rat& b) {
        Rat c;
        mpq_add(c.q_, a.q_, b.q_);
        return c;
    }
    friend Rat operator-(const Rat& a, const Rat& b) {
        Rat c;
        mpq_sub(c.q_, a.q_, b.q_);
        return c;
    }
    friend Rat operator*(const Rat& a, const Rat& b) {
        Rat c;
        mpq_mul(c.q_, a.q_, b.q_);
        return c;
    }
    friend Rat operator/(const Rat& a, const Rat& b);
    Rat operator-() const {
        Rat c;
        mpq_neg(c.q_, q_);
        return c;
    }
    Rat& operator+=(const Rat& o) {
        mpq_add(q_, q_, o.q_);
        return *this;
    }
    Rat& operator-=(const Rat& o) {
        mpq_sub(q_, q_, o.q_);
        return *this;
    }
    Rat& operator*=(const Rat& o) {
        mpq_mul(q_, q_, o.q_);
        return *this;
    }

    friend bool operator==(const Rat& a, const Rat& b) { return mpq_equal(a.q_, b.q_) != 0; }
    friend bool operator!=(const Rat& a, const Rat& b) { return !(a == b); }

    bool is_zero() const { return mpq_sgn(q_) == 0; }
    bool is_integer() const { return mpz_cmp_ui(mpq_denref(q_), 1) == 0; }

    Int num() const;
    Int den() const;

    // "p/q", or just "p" when the denominator is 1
    std::string str() const;

  private:
    mpq_t q_;
};

}  // namespace torcur

#endif
