#ifndef PFOL_FIELD_HPP
#define PFOL_FIELD_HPP

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "pfol/error.hpp"

namespace pfol {

using u64 = std::uint64_t;
using u128 = unsigned __int128;

std::string u128_to_string(u128 v);

// F_{p^k} with an explicit monic irreducible modulus over F_p (empty for k=1).
// Elements are coefficient vectors of length k with entries in [0, p); there
// are no lookup tables, so large k works as long as p fits comfortably in
// 64 bits (we require p < 2^31 so products never overflow).
//
// construct_field(p, k) always picks the lexicographically smallest monic
// irreducible modulus, coefficients compared low-degree-first, which makes
// every field and therefore every report reproducible.
class Field {
public:
    Field() = default;

    static Field make(u64 p, unsigned k);

    bool valid() const { return static_cast<bool>(d_); }
    u64 p() const { return d_->p; }
    unsigned k() const { return d_->k; }
    // monic modulus, ascending coefficients, size k+1; empty when k == 1
    const std::vector<u64>& modulus() const { return d_->modulus; }

    bool operator==(const Field& o) const;
    bool operator!=(const Field& o) const { return !(*this == o); }

    // p^k if it fits in 128 bits (some operations need it, arithmetic does not)
    std::optional<u128> cardinality() const;

    // ---- limb-span operations (stride k, no aliasing of out with inputs
    //      unless stated). These are the kernels polynomial code runs on.
    void set_zero(u64* out) const;
    void set_one(u64* out) const;
    void set_int(u64* out, long long v) const; // embeds Z -> F_p subfield
    bool is_zero(const u64* a) const;
    bool is_one(const u64* a) const;
    bool eq(const u64* a, const u64* b) const;
    void add(const u64* a, const u64* b, u64* out) const;   // out may alias
    void sub(const u64* a, const u64* b, u64* out) const;   // out may alias
    void neg(const u64* a, u64* out) const;                 // out may alias
    void mul(const u64* a, const u64* b, u64* out) const;   // out must not alias
    void mul_inplace(u64* a, const u64* b) const;
    void addmul(u64* acc, const u64* a, const u64* b) const; // acc += a*b
    void inv(const u64* a, u64* out) const;                  // a != 0
    void pow(const u64* a, u128 e, u64* out) const;
    void frobenius(const u64* a, u64* out) const;            // a^p
    // low-degree-first lexicographic comparison of coefficient vectors
    int cmp(const u64* a, const u64* b) const;

private:
    struct Data {
        u64 p = 0;
        unsigned k = 0;
        std::vector<u64> modulus; // ascending, monic, size k+1 (k >= 2)
    };
    std::shared_ptr<const Data> d_;
};

class FieldElement {
public:
    FieldElement() = default;
    FieldElement(Field f, std::vector<u64> coeffs);
    static FieldElement zero(const Field& f);
    static FieldElement one(const Field& f);
    static FieldElement from_int(const Field& f, long long v);
    // element with index i in the canonical enumeration: base-p digits of i,
    // least significant digit = constant coefficient
    static FieldElement by_index(const Field& f, u128 i);

    const Field& field() const { return f_; }
    const std::vector<u64>& coeffs() const { return c_; }
    const u64* data() const { return c_.data(); }

    bool is_zero() const { return f_.is_zero(c_.data()); }
    bool is_one() const { return f_.is_one(c_.data()); }

    FieldElement operator+(const FieldElement& o) const;
    FieldElement operator-(const FieldElement& o) const;
    FieldElement operator-() const;
    FieldElement operator*(const FieldElement& o) const;
    FieldElement operator/(const FieldElement& o) const;
    bool operator==(const FieldElement& o) const;
    bool operator!=(const FieldElement& o) const { return !(*this == o); }

    FieldElement inverse() const;
    FieldElement pow(u128 e) const;
    FieldElement frobenius() const; // x -> x^p

    // multiplicative order; needs p^k - 1 factored (trial division budget)
    u128 order(const Limits& lim = default_limits()) const;

    // deterministic total order: low-degree-first lexicographic on coefficients
    int cmp(const FieldElement& o) const { return f_.cmp(c_.data(), o.c_.data()); }
    bool operator<(const FieldElement& o) const { return cmp(o) < 0; }

    std::string to_string() const;

private:
    Field f_;
    std::vector<u64> c_;
};

// ---- spec-level operations --------------------------------------------

Field construct_field(u64 p, unsigned k);

// primitive n-th root of unity: g^((p^k-1)/n) for the least primitive
// generator g under the canonical element enumeration
FieldElement nth_root_of_unity(const Field& f, u64 n,
                               const Limits& lim = default_limits());

// Frobenius fixed-point test: a in F_{p^s}?  (requires s | k)
bool is_in_subfield(const FieldElement& a, unsigned s);

// Euler criterion; p an odd prime
bool is_square_mod_p(long long a, u64 p);

// b with b^p = a (Frobenius is bijective): b = a^(p^(k-1))
FieldElement pth_root(const FieldElement& a);

// helpers shared across the toolkit
bool is_prime_u64(u64 n);
u128 checked_pow_u128(u64 p, unsigned k); // raises Resource on overflow
// multiplicative order of p modulo n (gcd(p, n) must be 1)
unsigned multiplicative_order(u64 p, u64 n);
// prime factorization by trial division within budget
std::vector<std::pair<u128, unsigned>> factor_u128(u128 n, const Limits& lim);

} // namespace pfol

#endif
