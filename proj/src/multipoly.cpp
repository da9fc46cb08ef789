#include "pfol/multipoly.hpp"

#include <algorithm>
#include <numeric>

namespace pfol {

Monomial::Monomial(unsigned ex, unsigned ey, unsigned ez) {
    if (ex > 0xFFFF || ey > 0xFFFF || ez > 0xFFFF)
        raise_resource("exponent exceeds the 16-bit monomial bound");
    e = {uint16_t(ex), uint16_t(ey), uint16_t(ez)};
}

bool Monomial::divides(const Monomial& m) const {
    return e[0] <= m.e[0] && e[1] <= m.e[1] && e[2] <= m.e[2];
}

Monomial Monomial::operator*(const Monomial& m) const {
    return Monomial(unsigned(e[0]) + m.e[0], unsigned(e[1]) + m.e[1],
                    unsigned(e[2]) + m.e[2]);
}

Monomial Monomial::operator/(const Monomial& m) const {
    if (!m.divides(*this)) raise_internal("monomial division without divisibility");
    return Monomial(e[0] - m.e[0], e[1] - m.e[1], e[2] - m.e[2]);
}

int grlex_cmp(const Monomial& a, const Monomial& b) {
    unsigned ta = a.total(), tb = b.total();
    if (ta != tb) return ta < tb ? -1 : 1;
    for (int i = 0; i < 3; ++i)
        if (a.e[size_t(i)] != b.e[size_t(i)])
            return a.e[size_t(i)] < b.e[size_t(i)] ? -1 : 1;
    return 0;
}

// ---- construction ----------------------------------------------------------

MultiPoly MultiPoly::zero(const Field& f, int nvars) {
    if (nvars < 1 || nvars > 3) raise_input("nvars must be 1, 2 or 3");
    MultiPoly r;
    r.f_ = f;
    r.nvars_ = nvars;
    return r;
}

MultiPoly MultiPoly::constant(const Field& f, int nvars, const FieldElement& c) {
    MultiPoly r = zero(f, nvars);
    if (!c.is_zero()) {
        r.mono_.push_back(Monomial());
        r.coef_.insert(r.coef_.end(), c.coeffs().begin(), c.coeffs().end());
    }
    return r;
}

MultiPoly MultiPoly::constant(const Field& f, int nvars, long long c) {
    return constant(f, nvars, FieldElement::from_int(f, c));
}

MultiPoly MultiPoly::monomial(const Field& f, int nvars, const Monomial& m,
                              const FieldElement& c) {
    MultiPoly r = zero(f, nvars);
    if (!c.is_zero()) {
        r.mono_.push_back(m);
        r.coef_.insert(r.coef_.end(), c.coeffs().begin(), c.coeffs().end());
    }
    return r;
}

MultiPoly MultiPoly::variable(const Field& f, int nvars, int var) {
    Monomial m;
    m.e[size_t(var)] = 1;
    return monomial(f, nvars, m, FieldElement::one(f));
}

void MultiPoly::Builder::add(const Monomial& m, const FieldElement& c) {
    if (c.field() != f_) raise_input("field mismatch in polynomial builder");
    add(m, c.coeffs().data());
}

void MultiPoly::Builder::add(const Monomial& m, const u64* limbs) {
    mono_.push_back(m);
    coef_.insert(coef_.end(), limbs, limbs + f_.k());
}

void MultiPoly::Builder::add_int(const Monomial& m, long long c) {
    add(m, FieldElement::from_int(f_, c));
}

MultiPoly MultiPoly::Builder::build() {
    MultiPoly r = MultiPoly::zero(f_, nvars_);
    r.mono_ = std::move(mono_);
    r.coef_ = std::move(coef_);
    r.normalize();
    mono_ = {};
    coef_ = {};
    return r;
}

void MultiPoly::normalize() {
    const unsigned k = f_.k();
    const size_t n = mono_.size();
    if (n == 0) return;
    std::vector<uint32_t> idx(n);
    std::iota(idx.begin(), idx.end(), 0);
    std::sort(idx.begin(), idx.end(), [&](uint32_t a, uint32_t b) {
        int c = grlex_cmp(mono_[a], mono_[b]);
        if (c != 0) return c > 0;
        return a < b;
    });
    std::vector<Monomial> nm;
    std::vector<u64> nc;
    nm.reserve(n);
    nc.reserve(n * k);
    size_t i = 0;
    std::vector<u64> acc(k);
    while (i < n) {
        const Monomial m = mono_[idx[i]];
        std::copy(coef_.begin() + idx[i] * k, coef_.begin() + (idx[i] + 1) * k, acc.begin());
        ++i;
        while (i < n && mono_[idx[i]] == m) {
            f_.add(acc.data(), coef_.data() + idx[i] * k, acc.data());
            ++i;
        }
        if (!f_.is_zero(acc.data())) {
            nm.push_back(m);
            nc.insert(nc.end(), acc.begin(), acc.end());
        }
    }
    mono_ = std::move(nm);
    coef_ = std::move(nc);
}

// ---- inspection ------------------------------------------------------------

FieldElement MultiPoly::coeff(size_t i) const {
    const unsigned k = f_.k();
    return FieldElement(f_, std::vector<u64>(coef_.begin() + i * k,
                                             coef_.begin() + (i + 1) * k));
}

FieldElement MultiPoly::coeff_of(const Monomial& m) const {
    for (size_t i = 0; i < mono_.size(); ++i)
        if (mono_[i] == m) return coeff(i);
    return FieldElement::zero(f_);
}

bool MultiPoly::is_constant() const {
    return mono_.empty() || (mono_.size() == 1 && mono_[0].total() == 0);
}

int MultiPoly::degree() const {
    if (mono_.empty()) return -1;
    return int(mono_.front().total()); // graded order: first term has max degree
}

int MultiPoly::degree_in(int var) const {
    int d = 0;
    for (const auto& m : mono_) d = std::max(d, int(m.e[size_t(var)]));
    return d;
}

int MultiPoly::min_exp(int var) const {
    if (mono_.empty()) return 0;
    int d = 0xFFFF;
    for (const auto& m : mono_) d = std::min(d, int(m.e[size_t(var)]));
    return d;
}

bool MultiPoly::is_homogeneous() const {
    if (mono_.empty()) return true;
    unsigned t = mono_.front().total();
    for (const auto& m : mono_)
        if (m.total() != t) return false;
    return true;
}

std::optional<int> MultiPoly::sole_variable() const {
    int which = -1;
    for (int v = 0; v < nvars_; ++v) {
        if (degree_in(v) > 0) {
            if (which >= 0) return std::nullopt;
            which = v;
        }
    }
    return which < 0 ? 0 : which; // constants count as univariate in x
}

const Monomial& MultiPoly::leading_monomial() const {
    if (mono_.empty()) raise_math("zero polynomial has no leading term");
    return mono_.front();
}

FieldElement MultiPoly::leading_coeff() const {
    if (mono_.empty()) raise_math("zero polynomial has no leading term");
    return coeff(0);
}

// ---- arithmetic ------------------------------------------------------------

namespace {
void check_compatible(const MultiPoly& a, const MultiPoly& b) {
    if (a.field() != b.field()) raise_input("polynomial field mismatch");
    if (a.nvars() != b.nvars()) raise_input("polynomial nvars mismatch");
}
} // namespace

MultiPoly MultiPoly::operator+(const MultiPoly& o) const {
    check_compatible(*this, o);
    const unsigned k = f_.k();
    MultiPoly r = zero(f_, nvars_);
    r.mono_.reserve(mono_.size() + o.mono_.size());
    r.coef_.reserve(coef_.size() + o.coef_.size());
    size_t i = 0, j = 0;
    std::vector<u64> acc(k);
    while (i < mono_.size() || j < o.mono_.size()) {
        int c;
        if (i >= mono_.size())
            c = -1;
        else if (j >= o.mono_.size())
            c = 1;
        else
            c = grlex_cmp(mono_[i], o.mono_[j]);
        if (c > 0) {
            r.mono_.push_back(mono_[i]);
            r.coef_.insert(r.coef_.end(), coef_.begin() + i * k, coef_.begin() + (i + 1) * k);
            ++i;
        } else if (c < 0) {
            r.mono_.push_back(o.mono_[j]);
            r.coef_.insert(r.coef_.end(), o.coef_.begin() + j * k,
                           o.coef_.begin() + (j + 1) * k);
            ++j;
        } else {
            f_.add(coef_.data() + i * k, o.coef_.data() + j * k, acc.data());
            if (!f_.is_zero(acc.data())) {
                r.mono_.push_back(mono_[i]);
                r.coef_.insert(r.coef_.end(), acc.begin(), acc.end());
            }
            ++i;
            ++j;
        }
    }
    return r;
}

MultiPoly MultiPoly::operator-() const {
    MultiPoly r = *this;
    const unsigned k = f_.k();
    for (size_t i = 0; i < mono_.size(); ++i)
        f_.neg(r.coef_.data() + i * k, r.coef_.data() + i * k);
    return r;
}

MultiPoly MultiPoly::operator-(const MultiPoly& o) const { return *this + (-o); }

MultiPoly MultiPoly::mul_term(const Monomial& m, const u64* c) const {
    const unsigned k = f_.k();
    MultiPoly r = zero(f_, nvars_);
    if (f_.is_zero(c)) return r;
    r.mono_.reserve(mono_.size());
    r.coef_.resize(coef_.size());
    size_t out = 0;
    std::vector<u64> acc(k);
    for (size_t i = 0; i < mono_.size(); ++i) {
        f_.mul(coef_.data() + i * k, c, acc.data());
        if (f_.is_zero(acc.data())) continue;
        r.mono_.push_back(mono_[i] * m);
        std::copy(acc.begin(), acc.end(), r.coef_.begin() + out * k);
        ++out;
    }
    r.coef_.resize(out * k);
    return r;
}

MultiPoly MultiPoly::operator*(const MultiPoly& o) const {
    check_compatible(*this, o);
    const unsigned k = f_.k();
    if (is_zero() || o.is_zero()) return zero(f_, nvars_);
    const MultiPoly& small = term_count() <= o.term_count() ? *this : o;
    const MultiPoly& big = term_count() <= o.term_count() ? o : *this;
    if (small.term_count() <= 8) {
        MultiPoly acc = zero(f_, nvars_);
        for (size_t i = 0; i < small.term_count(); ++i)
            acc = acc + big.mul_term(small.mono_[i], small.coef_.data() + i * k);
        return acc;
    }
    size_t prods = small.term_count() * big.term_count();
    if (prods > default_limits().max_terms)
        raise_resource("product term budget exceeded in polynomial multiply");
    Builder b(f_, nvars_);
    std::vector<u64> acc(k);
    for (size_t i = 0; i < small.term_count(); ++i) {
        for (size_t j = 0; j < big.term_count(); ++j) {
            f_.mul(small.coef_.data() + i * k, big.coef_.data() + j * k, acc.data());
            b.add(small.mono_[i] * big.mono_[j], acc.data());
        }
    }
    return b.build();
}

bool MultiPoly::operator==(const MultiPoly& o) const {
    return f_ == o.f_ && nvars_ == o.nvars_ && mono_ == o.mono_ && coef_ == o.coef_;
}

MultiPoly MultiPoly::scaled(const FieldElement& c) const {
    if (c.field() != f_) raise_input("scalar from a different field");
    return mul_term(Monomial(), c.coeffs().data());
}

MultiPoly MultiPoly::pow(unsigned e, const Limits& lim) const {
    MultiPoly r = constant(f_, nvars_, 1);
    MultiPoly base = *this;
    while (e) {
        if (e & 1) {
            r = r * base;
            if (r.term_count() > lim.max_terms) raise_resource("power term budget exceeded");
        }
        e >>= 1;
        if (e) {
            base = base * base;
            if (base.term_count() > lim.max_terms)
                raise_resource("power term budget exceeded");
        }
    }
    return r;
}

MultiPoly MultiPoly::monic() const {
    if (is_zero()) return *this;
    FieldElement lc = leading_coeff();
    if (lc.is_one()) return *this;
    return scaled(lc.inverse());
}

bool MultiPoly::proportional(const MultiPoly& o) const {
    if (f_ != o.f_ || nvars_ != o.nvars_) return false;
    if (is_zero() || o.is_zero()) return is_zero() && o.is_zero();
    if (mono_ != o.mono_) return false;
    return monic() == o.monic();
}

MultiPoly MultiPoly::derivative(int var) const {
    if (var < 0 || var >= nvars_) raise_input("derivative variable out of range");
    const unsigned k = f_.k();
    Builder b(f_, nvars_);
    std::vector<u64> acc(k), mul(k);
    for (size_t i = 0; i < mono_.size(); ++i) {
        unsigned e = mono_[i].e[size_t(var)];
        if (e == 0) continue;
        f_.set_int(mul.data(), (long long)(e % f_.p()));
        if (f_.is_zero(mul.data())) continue; // x^p differentiates to zero
        f_.mul(coef_.data() + i * k, mul.data(), acc.data());
        Monomial m = mono_[i];
        m.e[size_t(var)] = uint16_t(e - 1);
        b.add(m, acc.data());
    }
    return b.build();
}

// ---- chart passages ---------------------------------------------------------

MultiPoly MultiPoly::dehomogenized(int var) const {
    if (nvars_ != 3) raise_input("dehomogenize expects a trivariate polynomial");
    if (!is_homogeneous()) raise_input("dehomogenize expects a homogeneous polynomial");
    Builder b(f_, 2);
    const unsigned k = f_.k();
    for (size_t i = 0; i < mono_.size(); ++i) {
        const auto& e = mono_[i].e;
        unsigned a, bb;
        switch (var) {
        case 2: a = e[0]; bb = e[1]; break;
        case 0: a = e[1]; bb = e[2]; break;
        case 1: a = e[2]; bb = e[0]; break;
        default: raise_input("chart variable out of range");
        }
        b.add(Monomial(a, bb, 0), coef_.data() + i * k);
    }
    return b.build();
}

MultiPoly MultiPoly::homogenized(int target_degree, int new_var) const {
    if (nvars_ != 2) raise_input("homogenize expects a bivariate polynomial");
    if (degree() > target_degree) raise_input("homogenize: degree exceeds target");
    Builder b(f_, 3);
    const unsigned k = f_.k();
    for (size_t i = 0; i < mono_.size(); ++i) {
        unsigned a = mono_[i].e[0], bb = mono_[i].e[1];
        unsigned c = unsigned(target_degree) - a - bb;
        unsigned ex, ey, ez;
        switch (new_var) {
        case 2: ex = a; ey = bb; ez = c; break;
        case 0: ex = c; ey = a; ez = bb; break;
        case 1: ex = bb; ey = c; ez = a; break;
        default: raise_input("chart variable out of range");
        }
        b.add(Monomial(ex, ey, ez), coef_.data() + i * k);
    }
    return b.build();
}

FieldElement MultiPoly::evaluate(const std::vector<FieldElement>& point) const {
    if (int(point.size()) != nvars_) raise_input("evaluation point arity mismatch");
    for (const auto& c : point)
        if (c.field() != f_)
            raise_input("evaluation point in a different field; embed the polynomial first");
    // memoized coordinate powers
    std::array<std::vector<FieldElement>, 3> pw;
    for (int v = 0; v < nvars_; ++v) {
        int dmax = degree_in(v);
        pw[size_t(v)].reserve(size_t(dmax) + 1);
        pw[size_t(v)].push_back(FieldElement::one(f_));
        for (int e = 1; e <= dmax; ++e)
            pw[size_t(v)].push_back(pw[size_t(v)].back() * point[size_t(v)]);
    }
    FieldElement acc = FieldElement::zero(f_);
    for (size_t i = 0; i < mono_.size(); ++i) {
        FieldElement t = coeff(i);
        for (int v = 0; v < nvars_; ++v) t = t * pw[size_t(v)][mono_[i].e[size_t(v)]];
        acc = acc + t;
    }
    return acc;
}

MultiPoly MultiPoly::substitute_linear(const std::array<FieldElement, 9>& m,
                                       const Limits& lim) const {
    if (nvars_ != 3) raise_input("linear substitution expects a trivariate polynomial");
    for (const auto& c : m)
        if (c.field() != f_)
            raise_input("matrix entries in a different field; embed the polynomial first");
    // invertibility via the determinant
    auto det = m[0] * (m[4] * m[8] - m[5] * m[7]) - m[1] * (m[3] * m[8] - m[5] * m[6]) +
               m[2] * (m[4] * m[6] - m[3] * m[7]);
    if (det.is_zero()) raise_math("singular substitution matrix");
    bool diagonal = m[1].is_zero() && m[2].is_zero() && m[3].is_zero() &&
                    m[5].is_zero() && m[6].is_zero() && m[7].is_zero();
    const unsigned k = f_.k();
    if (diagonal) {
        std::array<std::vector<FieldElement>, 3> pw;
        for (int v = 0; v < 3; ++v) {
            int dmax = degree_in(v);
            pw[size_t(v)].push_back(FieldElement::one(f_));
            for (int e = 1; e <= dmax; ++e)
                pw[size_t(v)].push_back(pw[size_t(v)].back() * m[size_t(4 * v)]);
        }
        Builder b(f_, 3);
        for (size_t i = 0; i < mono_.size(); ++i) {
            FieldElement c = coeff(i);
            for (int v = 0; v < 3; ++v) c = c * pw[size_t(v)][mono_[i].e[size_t(v)]];
            b.add(mono_[i], c);
        }
        return b.build();
    }
    // general case: memoized powers of the three substituted linear forms
    std::array<MultiPoly, 3> lin;
    for (int v = 0; v < 3; ++v) {
        Builder b(f_, 3);
        for (int j = 0; j < 3; ++j) {
            Monomial mm;
            mm.e[size_t(j)] = 1;
            b.add(mm, m[size_t(3 * v + j)]);
        }
        lin[size_t(v)] = b.build();
    }
    std::array<std::vector<MultiPoly>, 3> pw;
    for (int v = 0; v < 3; ++v) pw[size_t(v)].push_back(constant(f_, 3, 1));
    auto power_of = [&](int v, unsigned e) -> const MultiPoly& {
        auto& vec = pw[size_t(v)];
        while (vec.size() <= e) {
            vec.push_back(vec.back() * lin[size_t(v)]);
            if (vec.back().term_count() > lim.max_terms)
                raise_resource("substitution term budget exceeded");
        }
        return vec[e];
    };
    MultiPoly acc = zero(f_, 3);
    for (size_t i = 0; i < mono_.size(); ++i) {
        MultiPoly t = power_of(0, mono_[i].e[0]) * power_of(1, mono_[i].e[1]);
        t = t * power_of(2, mono_[i].e[2]);
        acc = acc + t.mul_term(Monomial(), coef_.data() + i * k);
    }
    return acc;
}

MultiPoly MultiPoly::translated(const std::vector<FieldElement>& shift) const {
    if (int(shift.size()) != nvars_) raise_input("translation arity mismatch");
    MultiPoly cur = *this;
    for (int v = 0; v < nvars_; ++v) {
        if (shift[size_t(v)].field() != f_) raise_input("translation in a different field");
        if (shift[size_t(v)].is_zero()) continue;
        // powers of (var + a)
        MultiPoly lin = variable(f_, nvars_, v) +
                        constant(f_, nvars_, shift[size_t(v)]);
        std::vector<MultiPoly> pw{constant(f_, nvars_, 1)};
        int dmax = cur.degree_in(v);
        for (int e = 1; e <= dmax; ++e) pw.push_back(pw.back() * lin);
        MultiPoly acc = zero(f_, nvars_);
        const unsigned k = f_.k();
        for (size_t i = 0; i < cur.mono_.size(); ++i) {
            Monomial rest = cur.mono_[i];
            unsigned e = rest.e[size_t(v)];
            rest.e[size_t(v)] = 0;
            acc = acc + pw[e].mul_term(rest, cur.coef_.data() + i * k);
        }
        cur = std::move(acc);
    }
    return cur;
}

MultiPoly MultiPoly::substitute_power(unsigned n) const {
    Builder b(f_, nvars_);
    const unsigned k = f_.k();
    for (size_t i = 0; i < mono_.size(); ++i) {
        const auto& e = mono_[i].e;
        b.add(Monomial(unsigned(e[0]) * n, unsigned(e[1]) * n, unsigned(e[2]) * n),
              coef_.data() + i * k);
    }
    return b.build();
}

MultiPoly MultiPoly::swapped_vars(int a, int b) const {
    Builder bu(f_, nvars_);
    const unsigned k = f_.k();
    for (size_t i = 0; i < mono_.size(); ++i) {
        Monomial m = mono_[i];
        std::swap(m.e[size_t(a)], m.e[size_t(b)]);
        bu.add(m, coef_.data() + i * k);
    }
    return bu.build();
}

MultiPoly MultiPoly::map_coeffs(
    const Field& target, const std::function<FieldElement(const FieldElement&)>& fn) const {
    Builder b(target, nvars_);
    for (size_t i = 0; i < mono_.size(); ++i) {
        FieldElement c = fn(coeff(i));
        if (c.field() != target) raise_internal("coefficient map produced wrong field");
        b.add(mono_[i], c);
    }
    return b.build();
}

MultiPoly MultiPoly::divided_by_monomial(const Monomial& m) const {
    Builder b(f_, nvars_);
    const unsigned k = f_.k();
    for (size_t i = 0; i < mono_.size(); ++i) {
        if (!m.divides(mono_[i])) raise_math("monomial does not divide every term");
        b.add(mono_[i] / m, coef_.data() + i * k);
    }
    return b.build();
}

std::vector<MultiPoly> MultiPoly::coefficients_in(int var) const {
    int d = degree_in(var);
    std::vector<MultiPoly::Builder> bs;
    bs.reserve(size_t(d) + 1);
    for (int i = 0; i <= d; ++i) bs.emplace_back(f_, nvars_);
    const unsigned k = f_.k();
    for (size_t i = 0; i < mono_.size(); ++i) {
        Monomial m = mono_[i];
        unsigned e = m.e[size_t(var)];
        m.e[size_t(var)] = 0;
        bs[e].add(m, coef_.data() + i * k);
    }
    std::vector<MultiPoly> out;
    out.reserve(size_t(d) + 1);
    for (auto& b : bs) out.push_back(b.build());
    return out;
}

MultiPoly MultiPoly::from_coefficients_in(int var, const std::vector<MultiPoly>& cs,
                                          const Field& f, int nvars) {
    Builder b(f, nvars);
    for (size_t e = 0; e < cs.size(); ++e) {
        const unsigned k = f.k();
        for (size_t i = 0; i < cs[e].term_count(); ++i) {
            Monomial m = cs[e].mono(i);
            m.e[size_t(var)] = uint16_t(m.e[size_t(var)] + e);
            b.add(m, cs[e].coeff_data(i));
        }
    }
    return b.build();
}

std::string MultiPoly::to_string() const {
    if (is_zero()) return "0";
    static const char* names[3] = {"x", "y", "z"};
    std::string out;
    for (size_t i = 0; i < mono_.size(); ++i) {
        if (i) out += " + ";
        FieldElement c = coeff(i);
        const Monomial& m = mono_[i];
        bool has_vars = m.total() > 0;
        std::string cs;
        bool subfield = true;
        for (size_t j = 1; j < c.coeffs().size(); ++j)
            if (c.coeffs()[j]) subfield = false;
        if (subfield)
            cs = std::to_string(c.coeffs()[0]);
        else
            cs = c.to_string();
        bool print_coeff = !has_vars || !(subfield && c.coeffs()[0] == 1);
        bool first = true;
        if (print_coeff) {
            out += cs;
            first = false;
        }
        for (int v = 0; v < 3; ++v) {
            unsigned e = m.e[size_t(v)];
            if (!e) continue;
            if (!first) out += "*";
            first = false;
            out += names[v];
            if (e > 1) out += "^" + std::to_string(e);
        }
    }
    return out;
}

// ---- division / gcd ----------------------------------------------------------

bool try_exact_div(const MultiPoly& f, const MultiPoly& g, MultiPoly& q) {
    check_compatible(f, g);
    if (g.is_zero()) raise_math("division by the zero polynomial");
    const Field& F = f.field();
    const unsigned k = F.k();
    MultiPoly r = f;
    MultiPoly::Builder qb(F, f.nvars());
    FieldElement lg_inv = g.leading_coeff().inverse();
    std::vector<u64> c(k);
    while (!r.is_zero()) {
        const Monomial& lm = r.leading_monomial();
        if (!g.leading_monomial().divides(lm)) return false;
        F.mul(r.coeff_data(0), lg_inv.coeffs().data(), c.data());
        Monomial qm = lm / g.leading_monomial();
        qb.add(qm, c.data());
        F.neg(c.data(), c.data());
        r = r + g.mul_term(qm, c.data());
    }
    q = qb.build();
    return true;
}

MultiPoly exact_div(const MultiPoly& f, const MultiPoly& g) {
    MultiPoly q;
    if (!try_exact_div(f, g, q)) {
        std::string at = "?";
        // rerun to report the failing step
        MultiPoly r = f;
        const Field& F = f.field();
        const unsigned k = F.k();
        FieldElement lg_inv = g.leading_coeff().inverse();
        std::vector<u64> c(k);
        while (!r.is_zero()) {
            if (!g.leading_monomial().divides(r.leading_monomial())) {
                at = MultiPoly::monomial(F, f.nvars(), r.leading_monomial(),
                                         FieldElement::one(F))
                         .to_string();
                break;
            }
            F.mul(r.coeff_data(0), lg_inv.coeffs().data(), c.data());
            Monomial qm = r.leading_monomial() / g.leading_monomial();
            F.neg(c.data(), c.data());
            r = r + g.mul_term(qm, c.data());
        }
        raise_math("not divisible: reduction fails at term " + at);
    }
    return q;
}

namespace {

// dense Euclid for polynomials in a single variable
MultiPoly univariate_gcd(const MultiPoly& f, const MultiPoly& g, int var) {
    const Field& F = f.field();
    auto reduce = [&](MultiPoly a, const MultiPoly& b) {
        int db = b.degree_in(var);
        FieldElement lb = FieldElement::zero(F);
        for (size_t i = 0; i < b.term_count(); ++i)
            if (int(b.mono(i).e[size_t(var)]) == db) lb = b.coeff(i);
        FieldElement lbi = lb.inverse();
        while (!a.is_zero() && a.degree_in(var) >= db) {
            int da = a.degree_in(var);
            FieldElement la = FieldElement::zero(F);
            for (size_t i = 0; i < a.term_count(); ++i)
                if (int(a.mono(i).e[size_t(var)]) == da) la = a.coeff(i);
            Monomial m;
            m.e[size_t(var)] = uint16_t(da - db);
            FieldElement c = -(la * lbi);
            a = a + b.mul_term(m, c.coeffs().data());
        }
        return a;
    };
    MultiPoly a = f, b = g;
    while (!b.is_zero()) {
        MultiPoly r = reduce(a, b);
        a = std::move(b);
        b = std::move(r);
    }
    return a.monic();
}

MultiPoly content_in(const MultiPoly& f, int var, const Limits& lim);

MultiPoly gcd_impl(const MultiPoly& f, const MultiPoly& g, const Limits& lim,
                   uint64_t& ops) {
    if (f.is_zero()) return g.monic();
    if (g.is_zero()) return f.monic();
    if (f.is_constant() || g.is_constant())
        return MultiPoly::constant(f.field(), f.nvars(), 1);
    int var = -1;
    for (int v = f.nvars() - 1; v >= 0; --v) {
        if (f.depends_on(v) || g.depends_on(v)) {
            var = v;
            break;
        }
    }
    if (var < 0) return MultiPoly::constant(f.field(), f.nvars(), 1);
    if (!f.depends_on(var)) return gcd_impl(f, content_in(g, var, lim), lim, ops);
    if (!g.depends_on(var)) return gcd_impl(content_in(f, var, lim), g, lim, ops);

    auto fv = f.sole_variable();
    auto gv = g.sole_variable();
    if (fv && gv && *fv == var && *gv == var) return univariate_gcd(f, g, var);

    MultiPoly cf = content_in(f, var, lim);
    MultiPoly cg = content_in(g, var, lim);
    MultiPoly c = gcd_impl(cf, cg, lim, ops);
    MultiPoly a = exact_div(f, cf);
    MultiPoly b = exact_div(g, cg);
    if (a.degree_in(var) < b.degree_in(var)) std::swap(a, b);

    while (!b.is_zero()) {
        ops += a.term_count() + b.term_count();
        if (ops > lim.max_gcd_ops) raise_resource("gcd PRS budget exceeded");
        // pseudo-remainder of a by b in `var`
        auto bc = b.coefficients_in(var);
        const MultiPoly& lb = bc.back();
        int db = int(bc.size()) - 1;
        MultiPoly r = a;
        while (!r.is_zero() && r.degree_in(var) >= db) {
            auto rc = r.coefficients_in(var);
            const MultiPoly& lr = rc.back();
            int dr = int(rc.size()) - 1;
            Monomial shift;
            shift.e[size_t(var)] = uint16_t(dr - db);
            MultiPoly t = b * lr;
            r = r * lb - t.mul_term(shift, FieldElement::one(f.field()).coeffs().data());
            ops += r.term_count();
            if (ops > lim.max_gcd_ops) raise_resource("gcd PRS budget exceeded");
        }
        a = std::move(b);
        if (r.is_zero()) {
            b = r;
        } else {
            b = exact_div(r, content_in(r, var, lim));
        }
    }
    // a is the primitive gcd of the primitive parts
    return (c * a).monic();
}

MultiPoly content_in(const MultiPoly& f, int var, const Limits& lim) {
    auto cs = f.coefficients_in(var);
    MultiPoly acc = MultiPoly::zero(f.field(), f.nvars());
    uint64_t ops = 0;
    for (const auto& cpoly : cs) {
        if (cpoly.is_zero()) continue;
        acc = gcd_impl(acc, cpoly, lim, ops);
        if (acc.is_constant() && !acc.is_zero()) break;
    }
    return acc.monic();
}

} // namespace

MultiPoly poly_gcd(const MultiPoly& f, const MultiPoly& g, const Limits& lim) {
    check_compatible(f, g);
    uint64_t ops = 0;
    return gcd_impl(f, g, lim, ops);
}

MultiPoly poly_pth_root(const MultiPoly& f) {
    const u64 p = f.field().p();
    MultiPoly::Builder b(f.field(), f.nvars());
    for (size_t i = 0; i < f.term_count(); ++i) {
        const auto& e = f.mono(i).e;
        if (e[0] % p || e[1] % p || e[2] % p)
            raise_internal("p-th root of a polynomial that is not a p-th power");
        b.add(Monomial(unsigned(e[0] / p), unsigned(e[1] / p), unsigned(e[2] / p)),
              pth_root(f.coeff(i)));
    }
    return b.build();
}

std::vector<std::pair<MultiPoly, unsigned>>
squarefree_decomposition(const MultiPoly& f, const Limits& lim) {
    if (f.is_zero()) raise_math("squarefree decomposition of the zero polynomial");
    std::vector<std::pair<MultiPoly, unsigned>> out;
    MultiPoly h = f.monic();
    if (h.is_constant()) return out;

    MultiPoly g = h;
    for (int v = 0; v < h.nvars(); ++v) g = poly_gcd(g, h.derivative(v), lim);
    MultiPoly w = exact_div(h, g);

    unsigned i = 1;
    unsigned guard = unsigned(h.degree()) + 2;
    while (!w.is_constant()) {
        if (--guard == 0) raise_internal("squarefree peel loop did not terminate");
        MultiPoly wn = poly_gcd(w, g, lim);
        MultiPoly part = exact_div(w, wn);
        if (!part.is_constant()) out.push_back({part.monic(), i});
        g = exact_div(g, wn);
        w = std::move(wn);
        ++i;
    }
    if (!g.is_constant()) {
        MultiPoly root = poly_pth_root(g);
        auto rec = squarefree_decomposition(root, lim);
        for (auto& [fac, mult] : rec)
            out.push_back({fac, mult * unsigned(f.field().p())});
    }
    std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
        if (a.second != b.second) return a.second < b.second;
        return grlex_cmp(a.first.leading_monomial(), b.first.leading_monomial()) > 0;
    });
    return out;
}

} // namespace pfol
