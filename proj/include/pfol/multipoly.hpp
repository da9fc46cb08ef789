#ifndef PFOL_MULTIPOLY_HPP
#define PFOL_MULTIPOLY_HPP

#include <array>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "pfol/field.hpp"

namespace pfol {

// Exponent vector for up to three variables x, y, z. Degrees at desk scale
// stay below 600; uint16 leaves ample headroom.
struct Monomial {
    std::array<uint16_t, 3> e{0, 0, 0};

    Monomial() = default;
    Monomial(unsigned ex, unsigned ey, unsigned ez);

    unsigned total() const { return unsigned(e[0]) + e[1] + e[2]; }
    bool divides(const Monomial& m) const;
    Monomial operator*(const Monomial& m) const;
    Monomial operator/(const Monomial& m) const; // requires divisibility
    bool operator==(const Monomial& m) const { return e == m.e; }
    bool operator!=(const Monomial& m) const { return e != m.e; }
};

// graded-lexicographic order, x > y > z; returns <0, 0, >0 like memcmp
int grlex_cmp(const Monomial& a, const Monomial& b);

// Sparse exact multivariate polynomial over a finite field. Terms are kept
// in strictly descending graded-lex order with no zero coefficients; the
// coefficient limbs are packed with stride field.k().
class MultiPoly {
public:
    MultiPoly() = default;

    static MultiPoly zero(const Field& f, int nvars);
    static MultiPoly constant(const Field& f, int nvars, const FieldElement& c);
    static MultiPoly constant(const Field& f, int nvars, long long c);
    static MultiPoly monomial(const Field& f, int nvars, const Monomial& m,
                              const FieldElement& c);
    static MultiPoly variable(const Field& f, int nvars, int var);

    // accumulate arbitrary terms, then normalize once
    class Builder {
    public:
        Builder(const Field& f, int nvars) : f_(f), nvars_(nvars) {}
        void add(const Monomial& m, const FieldElement& c);
        void add(const Monomial& m, const u64* limbs);
        void add_int(const Monomial& m, long long c);
        MultiPoly build();

    private:
        Field f_;
        int nvars_;
        std::vector<Monomial> mono_;
        std::vector<u64> coef_;
    };

    const Field& field() const { return f_; }
    int nvars() const { return nvars_; }
    size_t term_count() const { return mono_.size(); }
    const Monomial& mono(size_t i) const { return mono_[i]; }
    FieldElement coeff(size_t i) const;
    const u64* coeff_data(size_t i) const { return coef_.data() + i * f_.k(); }
    // coefficient of an arbitrary monomial (zero when absent)
    FieldElement coeff_of(const Monomial& m) const;

    bool is_zero() const { return mono_.empty(); }
    bool is_constant() const;
    bool is_monomial_term() const { return mono_.size() == 1; }
    int degree() const; // -1 for the zero polynomial
    int degree_in(int var) const;
    int min_exp(int var) const;
    bool is_homogeneous() const;
    bool depends_on(int var) const { return degree_in(var) > 0; }
    // index of the single variable occurring, if at most one does
    std::optional<int> sole_variable() const;

    const Monomial& leading_monomial() const;
    FieldElement leading_coeff() const;

    MultiPoly operator+(const MultiPoly& o) const;
    MultiPoly operator-(const MultiPoly& o) const;
    MultiPoly operator-() const;
    MultiPoly operator*(const MultiPoly& o) const;
    bool operator==(const MultiPoly& o) const;
    bool operator!=(const MultiPoly& o) const { return !(*this == o); }

    MultiPoly scaled(const FieldElement& c) const;
    MultiPoly mul_term(const Monomial& m, const u64* c) const;
    MultiPoly pow(unsigned e, const Limits& lim = default_limits()) const;
    MultiPoly monic() const; // scaled so the leading coefficient is 1

    // true iff the polynomials agree up to a nonzero scalar
    bool proportional(const MultiPoly& o) const;

    MultiPoly derivative(int var) const;

    // chart passages. Variables are cyclically renamed so a bivariate chart
    // polynomial always lives in (x, y):
    //   dehomogenized(2): z = 1, coords (x, y)
    //   dehomogenized(0): x = 1, coords (y, z) -> (x, y)
    //   dehomogenized(1): y = 1, coords (z, x) -> (x, y)
    // homogenized(N, var) is the corresponding inverse.
    MultiPoly dehomogenized(int var) const;
    MultiPoly homogenized(int target_degree, int new_var) const;

    FieldElement evaluate(const std::vector<FieldElement>& point) const;
    // f(Mv): var i is replaced by sum_j M[i][j] * var j; entries over field()
    MultiPoly substitute_linear(const std::array<FieldElement, 9>& m,
                                const Limits& lim = default_limits()) const;
    // var i -> var i + shift[i]
    MultiPoly translated(const std::vector<FieldElement>& shift) const;
    // every variable raised to the n-th power
    MultiPoly substitute_power(unsigned n) const;
    MultiPoly swapped_vars(int a, int b) const;
    // coefficient-wise map (Frobenius, embeddings); monomials unchanged
    MultiPoly map_coeffs(const Field& target,
                         const std::function<FieldElement(const FieldElement&)>& fn) const;

    MultiPoly divided_by_monomial(const Monomial& m) const;
    std::vector<Monomial> support() const { return mono_; }
    // f as a polynomial in `var`: dense coefficient list, ascending degree
    std::vector<MultiPoly> coefficients_in(int var) const;
    static MultiPoly from_coefficients_in(int var, const std::vector<MultiPoly>& cs,
                                          const Field& f, int nvars);

    std::string to_string() const; // canonical graded-lex descending form

private:
    Field f_;
    int nvars_ = 0;
    std::vector<Monomial> mono_;
    std::vector<u64> coef_;

    friend bool try_exact_div(const MultiPoly&, const MultiPoly&, MultiPoly&);
    void normalize();
};

// exact division; the throwing form reports the failing reduction step
bool try_exact_div(const MultiPoly& f, const MultiPoly& g, MultiPoly& q);
MultiPoly exact_div(const MultiPoly& f, const MultiPoly& g);

// monic gcd by primitive subresultant PRS recursing on variables
MultiPoly poly_gcd(const MultiPoly& f, const MultiPoly& g,
                   const Limits& lim = default_limits());

// Yun-style squarefree decomposition adapted to characteristic p: when every
// partial derivative dies, a p-th root is extracted and the recursion
// multiplies multiplicities by p. Factors come back monic, pairwise coprime.
std::vector<std::pair<MultiPoly, unsigned>>
squarefree_decomposition(const MultiPoly& f, const Limits& lim = default_limits());

// exact p-th root of a polynomial that is a p-th power (all exponents
// divisible by p after coefficient p-th roots); errors otherwise
MultiPoly poly_pth_root(const MultiPoly& f);

} // namespace pfol

#endif
