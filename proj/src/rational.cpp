#include "torcur/rational.hpp"

namespace torcur {

Int Int::from_string(const std::string& s) {
    Int v;
    if (mpz_set_str(v.z_, s.c_str(), 10) != 0)
        throw std::invalid_argument("not an integer literal: " + s);
    return v;
}

long Int::to_long() const {
    if (!fits_slong()) throw std::overflow_error("integer does not fit in a machine long: " + str());
    return mpz_get_si(z_);
}

std::string Int::str() const {
    char* buf = mpz_get_str(nullptr, 10, z_);
    std::string s(buf);
    void (*freefn)(void*, size_t);
    mp_get_memory_functions(nullptr, nullptr, &freefn);
    freefn(buf, s.size() + 1);
    return s;
}

Int Int::divexact(const Int& d) const {
    if (d.is_zero()) throw std::domain_error("division by zero");
    Int q, r;
    mpz_tdiv_qr(q.z_, r.z_, z_, d.z_);
    if (!r.is_zero()) throw std::domain_error("inexact integer division");
    return q;
}

Int factorial(unsigned long n) {
    Int v;
    mpz_fac_ui(v.raw(), n);
    return v;
}

Int binomial(long n, long k) {
    if (k < 0 || n < 0 || k > n) return Int(0);
    Int v;
    mpz_bin_uiui(v.raw(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    return v;
}

Int gcd(const Int& a, const Int& b) {
    Int v;
    mpz_gcd(v.raw(), a.raw(), b.raw());
    return v;
}

Rat::Rat(long num, long den) {
    mpq_init(q_);
    if (den == 0) throw std::domain_error("zero denominator");
    mpq_set_si(q_, num, 1);
    Rat d;
    mpq_set_si(d.q_, den, 1);
    mpq_div(q_, q_, d.q_);
}

Rat::Rat(const Int& num, const Int& den) {
    mpq_init(q_);
    if (den.is_zero()) throw std::domain_error("zero denominator");
    mpz_set(mpq_numref(q_), num.raw());
    mpz_set(mpq_denref(q_), den.raw());
    mpq_canonicalize(q_);
}

Rat Rat::from_string(const std::string& s) {
    auto slash = s.find('/');
    if (slash == std::string::npos) return Rat(Int::from_string(s));
    return Rat(Int::from_string(s.substr(0, slash)), Int::from_string(s.substr(slash + 1)));
}

Rat operator/(const Rat& a, const Rat& b) {
    if (b.is_zero()) throw std::domain_error("division by zero");
    Rat c;
    mpq_div(c.q_, a.q_, b.q_);
    return c;
}

Int Rat::num() const {
    Int v;
    mpz_set(v.raw(), mpq_numref(q_));
    return v;
}

Int Rat::den() const {
    Int v;
    mpz_set(v.raw(), mpq_denref(q_));
    return v;
}

std::string Rat::str() const {
    if (is_integer()) return num().str();
    return num().str() + "/" + den().str();
}

}  // namespace torcur
