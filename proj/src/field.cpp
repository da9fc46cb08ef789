#include "pfol/field.hpp"

#include <algorithm>
#include <numeric>

namespace pfol {

std::string u128_to_string(u128 v) {
    if (v == 0) return "0";
    std::string s;
    while (v) {
        s.push_back(char('0' + int(v % 10)));
        v /= 10;
    }
    std::reverse(s.begin(), s.end());
    return s;
}

bool is_prime_u64(u64 n) {
    if (n < 2) return false;
    for (u64 d : {2ull, 3ull, 5ull, 7ull}) {
        if (n % d == 0) return n == d;
    }
    for (u64 d = 11; d * d <= n; d += 2) {
        if (n % d == 0) return false;
    }
    return true;
}

u128 checked_pow_u128(u64 p, unsigned k) {
    u128 r = 1;
    const u128 limit = (u128(1) << 126);
    for (unsigned i = 0; i < k; ++i) {
        if (r > limit / p) raise_resource("p^k exceeds the 128-bit machine bound");
        r *= p;
    }
    return r;
}

unsigned multiplicative_order(u64 p, u64 n) {
    if (n <= 1) raise_input("multiplicative order needs modulus > 1");
    u64 pm = p % n;
    if (std::gcd(pm, n) != 1) raise_math("p and n are not coprime");
    u64 v = pm % n;
    unsigned e = 1;
    while (v != 1) {
        v = u64((u128(v) * pm) % n);
        ++e;
        if (e > n) raise_internal("order computation did not terminate");
    }
    return e;
}

std::vector<std::pair<u128, unsigned>> factor_u128(u128 n, const Limits& lim) {
    std::vector<std::pair<u128, unsigned>> out;
    u64 steps = 0;
    for (u128 d = 2; d * d <= n; d += (d == 2 ? 1 : 2)) {
        if (++steps > lim.max_trial_division)
            raise_resource("integer factorization exceeds trial-division budget");
        if (n % d == 0) {
            unsigned e = 0;
            while (n % d == 0) { n /= d; ++e; }
            out.push_back({d, e});
        }
    }
    if (n > 1) out.push_back({n, 1});
    return out;
}

// ---- dense univariate arithmetic over F_p (modulus search, inverses) ----
namespace {

using Vec = std::vector<u64>;

int vdeg(const Vec& a) {
    int d = int(a.size()) - 1;
    while (d >= 0 && a[size_t(d)] == 0) --d;
    return d;
}

Vec vtrim(Vec a) {
    a.resize(size_t(vdeg(a) + 1));
    return a;
}

Vec vmul(const Vec& a, const Vec& b, u64 p) {
    if (a.empty() || b.empty()) return {};
    Vec r(a.size() + b.size() - 1, 0);
    for (size_t i = 0; i < a.size(); ++i) {
        if (!a[i]) continue;
        for (size_t j = 0; j < b.size(); ++j) {
            if (!b[j]) continue;
            r[i + j] = (r[i + j] + a[i] * b[j]) % p;
        }
    }
    return vtrim(std::move(r));
}

void vreduce(Vec& r, const Vec& m, u64 p) {
    // m monic
    int dm = vdeg(m);
    for (int i = vdeg(r); i >= dm; --i) {
        u64 c = r[size_t(i)];
        if (!c) continue;
        for (int j = 0; j <= dm; ++j) {
            u64& t = r[size_t(i - dm + j)];
            t = (t + (p - m[size_t(j)] % p) * c) % p;
        }
    }
    r = vtrim(std::move(r));
}

Vec vmulmod(const Vec& a, const Vec& b, const Vec& m, u64 p) {
    Vec r = vmul(a, b, p);
    vreduce(r, m, p);
    return r;
}

Vec vpow_p(const Vec& a, const Vec& m, u64 p) {
    // a^p mod m by square-and-multiply
    Vec res{1};
    Vec base = a;
    u64 e = p;
    while (e) {
        if (e & 1) res = vmulmod(res, base, m, p);
        base = vmulmod(base, base, m, p);
        e >>= 1;
    }
    return res;
}

u64 inv_mod_p(u64 x, u64 p) {
    u64 r = 1, base = x % p, e = p - 2;
    while (e) {
        if (e & 1) r = r * base % p;
        base = base * base % p;
        e >>= 1;
    }
    return r;
}

Vec vgcd(Vec a, Vec b, u64 p) {
    while (vdeg(b) >= 0) {
        int db = vdeg(b);
        u64 lcy = inv_mod_p(b[size_t(db)], p);
        while (vdeg(a) >= db) {
            int da = vdeg(a);
            u64 c = a[size_t(da)] * lcy % p;
            for (int j = 0; j <= db; ++j) {
                u64& t = a[size_t(da - db + j)];
                t = (t + (p - b[size_t(j)]) * c) % p;
            }
            a = vtrim(std::move(a)); // leading term eliminated, degree drops
        }
        std::swap(a, b);
    }
    return vtrim(std::move(a));
}

bool is_irreducible_mod_p(const Vec& m, u64 p) {
    int k = vdeg(m);
    if (k < 1) return false;
    if (k == 1) return true;
    Vec x{0, 1};
    Vec h = x;
    std::vector<unsigned> prime_divs;
    for (unsigned q = 2; q <= unsigned(k); ++q)
        if (k % int(q) == 0 && is_prime_u64(q)) prime_divs.push_back(q);
    for (int i = 1; i <= k; ++i) {
        h = vpow_p(h, m, p);
        bool check_gcd = false;
        for (unsigned q : prime_divs)
            if (i == k / int(q)) check_gcd = true;
        if (check_gcd) {
            Vec diff = h;
            diff.resize(std::max<size_t>(diff.size(), 2), 0);
            diff[1] = (diff[1] + p - 1) % p;
            Vec g = vgcd(diff, m, p);
            if (vdeg(g) != 0) return false;
        }
    }
    Vec diff = h;
    diff.resize(std::max<size_t>(diff.size(), 2), 0);
    diff[1] = (diff[1] + p - 1) % p;
    return vdeg(vtrim(std::move(diff))) < 0;
}

// extended Euclid: returns (g, s) with s*a = g mod m, g = gcd(a, m)
std::pair<Vec, Vec> vext_gcd(Vec a, Vec m, u64 p) {
    Vec r0 = std::move(m), r1 = std::move(a);
    Vec s0{}, s1{1};
    while (vdeg(r1) >= 0) {
        // divide r0 by r1
        Vec q;
        int d1 = vdeg(r1);
        u64 lcy = inv_mod_p(r1[size_t(d1)], p);
        Vec rem = r0;
        q.assign(size_t(std::max(vdeg(r0) - d1 + 1, 1)), 0);
        while (vdeg(rem) >= d1) {
            int dr = vdeg(rem);
            u64 c = rem[size_t(dr)] * lcy % p;
            q[size_t(dr - d1)] = c;
            for (int j = 0; j <= d1; ++j) {
                u64& t = rem[size_t(dr - d1 + j)];
                t = (t + (p - r1[size_t(j)]) * c) % p;
            }
            rem = vtrim(std::move(rem));
        }
        // (r0, r1) <- (r1, rem); (s0, s1) <- (s1, s0 - q*s1)
        Vec qs = vmul(q, s1, p);
        Vec s2 = s0;
        s2.resize(std::max(s2.size(), qs.size()), 0);
        for (size_t i = 0; i < qs.size(); ++i) s2[i] = (s2[i] + p - qs[i]) % p;
        r0 = std::move(r1);
        r1 = std::move(rem);
        s0 = std::move(s1);
        s1 = vtrim(std::move(s2));
    }
    return {vtrim(std::move(r0)), vtrim(std::move(s0))};
}

} // namespace

// ---- Field ---------------------------------------------------------------

Field Field::make(u64 p, unsigned k) {
    if (!is_prime_u64(p)) raise_input("field characteristic must be prime, got " + std::to_string(p));
    if (p >= (u64(1) << 31)) raise_resource("p too large for the 64-bit coefficient scheme");
    if (k < 1) raise_input("extension degree must be >= 1");
    if (k > 128) raise_resource("extension degree above the supported bound (128)");
    auto data = std::make_shared<Data>();
    data->p = p;
    data->k = k;
    if (k >= 2) {
        // lexicographically smallest monic irreducible, low-degree-first
        std::vector<u64> digits(k, 0);
        bool found = false;
        while (true) {
            Vec cand(k + 1, 0);
            for (unsigned i = 0; i < k; ++i) cand[i] = digits[i];
            cand[k] = 1;
            if (digits[0] != 0 && is_irreducible_mod_p(cand, p)) {
                data->modulus = cand;
                found = true;
                break;
            }
            // odometer: last digit fastest => low-degree-first lexicographic order
            int i = int(k) - 1;
            while (i >= 0 && digits[size_t(i)] == p - 1) digits[size_t(i--)] = 0;
            if (i < 0) break;
            ++digits[size_t(i)];
        }
        if (!found) raise_internal("no irreducible modulus found");
    }
    Field f;
    f.d_ = std::move(data);
    return f;
}

bool Field::operator==(const Field& o) const {
    if (d_ == o.d_) return true;
    if (!d_ || !o.d_) return false;
    return d_->p == o.d_->p && d_->k == o.d_->k && d_->modulus == o.d_->modulus;
}

std::optional<u128> Field::cardinality() const {
    u128 r = 1;
    const u128 limit = (u128(1) << 126);
    for (unsigned i = 0; i < d_->k; ++i) {
        if (r > limit / d_->p) return std::nullopt;
        r *= d_->p;
    }
    return r;
}

void Field::set_zero(u64* out) const { std::fill(out, out + d_->k, 0); }

void Field::set_one(u64* out) const {
    set_zero(out);
    out[0] = 1 % d_->p;
}

void Field::set_int(u64* out, long long v) const {
    set_zero(out);
    long long m = v % (long long)d_->p;
    if (m < 0) m += (long long)d_->p;
    out[0] = u64(m);
}

bool Field::is_zero(const u64* a) const {
    for (unsigned i = 0; i < d_->k; ++i)
        if (a[i]) return false;
    return true;
}

bool Field::is_one(const u64* a) const {
    if (a[0] != 1 % d_->p) return false;
    for (unsigned i = 1; i < d_->k; ++i)
        if (a[i]) return false;
    return true;
}

bool Field::eq(const u64* a, const u64* b) const {
    return std::equal(a, a + d_->k, b);
}

void Field::add(const u64* a, const u64* b, u64* out) const {
    const u64 p = d_->p;
    for (unsigned i = 0; i < d_->k; ++i) {
        u64 s = a[i] + b[i];
        out[i] = s >= p ? s - p : s;
    }
}

void Field::sub(const u64* a, const u64* b, u64* out) const {
    const u64 p = d_->p;
    for (unsigned i = 0; i < d_->k; ++i) {
        u64 s = a[i] + p - b[i];
        out[i] = s >= p ? s - p : s;
    }
}

void Field::neg(const u64* a, u64* out) const {
    const u64 p = d_->p;
    for (unsigned i = 0; i < d_->k; ++i) out[i] = a[i] ? p - a[i] : 0;
}

void Field::mul(const u64* a, const u64* b, u64* out) const {
    const u64 p = d_->p;
    const unsigned k = d_->k;
    if (k == 1) {
        out[0] = a[0] * b[0] % p;
        return;
    }
    thread_local std::vector<u64> scratch;
    scratch.assign(2 * k - 1, 0);
    for (unsigned i = 0; i < k; ++i) {
        if (!a[i]) continue;
        for (unsigned j = 0; j < k; ++j) {
            if (!b[j]) continue;
            scratch[i + j] = (scratch[i + j] + a[i] * b[j]) % p;
        }
    }
    const auto& m = d_->modulus;
    for (int i = int(2 * k - 2); i >= int(k); --i) {
        u64 c = scratch[size_t(i)];
        if (!c) continue;
        for (unsigned j = 0; j < k; ++j) {
            u64& t = scratch[size_t(i) - k + j];
            t = (t + (p - m[j]) * c) % p;
        }
    }
    std::copy(scratch.begin(), scratch.begin() + k, out);
}

void Field::mul_inplace(u64* a, const u64* b) const {
    thread_local std::vector<u64> tmp;
    tmp.assign(d_->k, 0);
    mul(a, b, tmp.data());
    std::copy(tmp.begin(), tmp.end(), a);
}

void Field::addmul(u64* acc, const u64* a, const u64* b) const {
    const u64 p = d_->p;
    const unsigned k = d_->k;
    if (k == 1) {
        acc[0] = (acc[0] + a[0] * b[0]) % p;
        return;
    }
    thread_local std::vector<u64> tmp;
    tmp.assign(k, 0);
    mul(a, b, tmp.data());
    add(acc, tmp.data(), acc);
}

void Field::inv(const u64* a, u64* out) const {
    const u64 p = d_->p;
    const unsigned k = d_->k;
    if (is_zero(a)) raise_math("division by zero field element");
    if (k == 1) {
        u64 r = 1, base = a[0], e = p - 2;
        while (e) {
            if (e & 1) r = r * base % p;
            base = base * base % p;
            e >>= 1;
        }
        out[0] = r;
        return;
    }
    Vec av(a, a + k);
    av = vtrim(std::move(av));
    auto [g, s] = vext_gcd(av, d_->modulus, p);
    if (vdeg(g) != 0) raise_internal("modulus not irreducible: gcd nontrivial");
    // normalize: s / g
    u64 ginv;
    {
        u64 r = 1, base = g[0], e = p - 2;
        while (e) {
            if (e & 1) r = r * base % p;
            base = base * base % p;
            e >>= 1;
        }
        ginv = r;
    }
    set_zero(out);
    for (size_t i = 0; i < s.size() && i < k; ++i) out[i] = s[i] * ginv % p;
}

void Field::pow(const u64* a, u128 e, u64* out) const {
    const unsigned k = d_->k;
    std::vector<u64> base(a, a + k), res(k, 0);
    set_one(res.data());
    while (e) {
        if (e & 1) mul_inplace(res.data(), base.data());
        mul_inplace(base.data(), base.data());
        e >>= 1;
    }
    std::copy(res.begin(), res.end(), out);
}

void Field::frobenius(const u64* a, u64* out) const {
    if (d_->k == 1) {
        out[0] = a[0];
        return;
    }
    pow(a, d_->p, out);
}

int Field::cmp(const u64* a, const u64* b) const {
    for (unsigned i = 0; i < d_->k; ++i) {
        if (a[i] != b[i]) return a[i] < b[i] ? -1 : 1;
    }
    return 0;
}

// ---- FieldElement ---------------------------------------------------------

FieldElement::FieldElement(Field f, std::vector<u64> coeffs)
    : f_(std::move(f)), c_(std::move(coeffs)) {
    if (c_.size() != f_.k()) raise_internal("field element with wrong limb count");
    for (auto& c : c_) c %= f_.p();
}

FieldElement FieldElement::zero(const Field& f) {
    return FieldElement(f, std::vector<u64>(f.k(), 0));
}

FieldElement FieldElement::one(const Field& f) {
    std::vector<u64> c(f.k(), 0);
    f.set_one(c.data());
    return FieldElement(f, std::move(c));
}

FieldElement FieldElement::from_int(const Field& f, long long v) {
    std::vector<u64> c(f.k(), 0);
    f.set_int(c.data(), v);
    return FieldElement(f, std::move(c));
}

FieldElement FieldElement::by_index(const Field& f, u128 i) {
    std::vector<u64> c(f.k(), 0);
    for (unsigned j = 0; j < f.k() && i; ++j) {
        c[j] = u64(i % f.p());
        i /= f.p();
    }
    if (i) raise_input("element index out of range");
    return FieldElement(f, std::move(c));
}

#define PFOL_SAME_FIELD(o) \
    if (f_ != (o).f_) raise_input("field mismatch in element arithmetic")

FieldElement FieldElement::operator+(const FieldElement& o) const {
    PFOL_SAME_FIELD(o);
    std::vector<u64> r(f_.k());
    f_.add(c_.data(), o.c_.data(), r.data());
    return FieldElement(f_, std::move(r));
}

FieldElement FieldElement::operator-(const FieldElement& o) const {
    PFOL_SAME_FIELD(o);
    std::vector<u64> r(f_.k());
    f_.sub(c_.data(), o.c_.data(), r.data());
    return FieldElement(f_, std::move(r));
}

FieldElement FieldElement::operator-() const {
    std::vector<u64> r(f_.k());
    f_.neg(c_.data(), r.data());
    return FieldElement(f_, std::move(r));
}

FieldElement FieldElement::operator*(const FieldElement& o) const {
    PFOL_SAME_FIELD(o);
    std::vector<u64> r(f_.k());
    f_.mul(c_.data(), o.c_.data(), r.data());
    return FieldElement(f_, std::move(r));
}

FieldElement FieldElement::operator/(const FieldElement& o) const {
    return *this * o.inverse();
}

bool FieldElement::operator==(const FieldElement& o) const {
    return f_ == o.f_ && f_.eq(c_.data(), o.c_.data());
}

FieldElement FieldElement::inverse() const {
    std::vector<u64> r(f_.k());
    f_.inv(c_.data(), r.data());
    return FieldElement(f_, std::move(r));
}

FieldElement FieldElement::pow(u128 e) const {
    std::vector<u64> r(f_.k());
    f_.pow(c_.data(), e, r.data());
    return FieldElement(f_, std::move(r));
}

FieldElement FieldElement::frobenius() const {
    std::vector<u64> r(f_.k());
    f_.frobenius(c_.data(), r.data());
    return FieldElement(f_, std::move(r));
}

u128 FieldElement::order(const Limits& lim) const {
    if (is_zero()) raise_math("zero has no multiplicative order");
    auto q = f_.cardinality();
    if (!q) raise_resource("field too large for order computation");
    u128 n = *q - 1;
    auto fac = factor_u128(n, lim);
    u128 e = n;
    for (auto& [pr, mult] : fac) {
        for (unsigned i = 0; i < mult; ++i) {
            if (pow(e / pr).is_one())
                e /= pr;
            else
                break;
        }
    }
    return e;
}

std::string FieldElement::to_string() const {
    if (f_.k() == 1) return std::to_string(c_[0]);
    std::string s = "[";
    for (unsigned i = 0; i < f_.k(); ++i) {
        if (i) s += ",";
        s += std::to_string(c_[i]);
    }
    s += "]";
    return s;
}

// ---- spec operations -------------------------------------------------------

Field construct_field(u64 p, unsigned k) { return Field::make(p, k); }

namespace {

FieldElement least_primitive_generator(const Field& f, const Limits& lim) {
    auto qo = f.cardinality();
    if (!qo) raise_resource("field too large for generator search");
    u128 n = *qo - 1;
    auto fac = factor_u128(n, lim);
    for (u128 idx = 1; idx < *qo; ++idx) {
        FieldElement g = FieldElement::by_index(f, idx);
        bool prim = true;
        for (auto& [pr, mult] : fac) {
            (void)mult;
            if (g.pow(n / pr).is_one()) {
                prim = false;
                break;
            }
        }
        if (prim) return g;
    }
    raise_internal("no primitive generator found");
}

} // namespace

FieldElement nth_root_of_unity(const Field& f, u64 n, const Limits& lim) {
    if (n == 0) raise_input("n must be positive");
    if (n % f.p() == 0)
        raise_math("p divides n: no primitive " + std::to_string(n) +
                   "th root of unity exists in characteristic " + std::to_string(f.p()));
    auto qo = f.cardinality();
    if (!qo) raise_resource("field too large for root-of-unity search");
    u128 m = *qo - 1;
    if (m % n != 0)
        raise_math(std::to_string(n) + " does not divide p^k - 1 = " + u128_to_string(m));
    FieldElement g = least_primitive_generator(f, lim);
    return g.pow(m / n);
}

bool is_in_subfield(const FieldElement& a, unsigned s) {
    unsigned k = a.field().k();
    if (s == 0 || k % s != 0) raise_input("subfield degree must divide k");
    FieldElement b = a;
    for (unsigned i = 0; i < s; ++i) b = b.frobenius();
    return b == a;
}

bool is_square_mod_p(long long a, u64 p) {
    if (p == 2) raise_input("Euler criterion needs an odd prime");
    if (!is_prime_u64(p)) raise_input("modulus must be prime");
    long long m = a % (long long)p;
    if (m < 0) m += (long long)p;
    if (m == 0) return true;
    u64 r = 1, base = u64(m), e = (p - 1) / 2;
    while (e) {
        if (e & 1) r = r * base % p;
        base = base * base % p;
        e >>= 1;
    }
    return r == 1;
}

FieldElement pth_root(const FieldElement& a) {
    FieldElement b = a;
    for (unsigned i = 0; i + 1 < a.field().k(); ++i) b = b.frobenius();
    return b;
}

} // namespace pfol
