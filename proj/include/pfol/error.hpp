#ifndef PFOL_ERROR_HPP
#define PFOL_ERROR_HPP

#include <cstdint>
#include <stdexcept>
#include <string>

namespace pfol {

// Error taxonomy mirrors the CLI exit codes:
//   Math     -> exit 1 (well-formed input, mathematically refused operation)
//   Input    -> exit 2 (syntax, inconsistent headers, bad arguments)
//   Resource -> exit 3 (configured budget exceeded; never a wrong answer)
//   Internal -> exit 4 (invariant violation; a bug, not a user error)
enum class ErrorKind { Math = 1, Input = 2, Resource = 3, Internal = 4 };

class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& msg)
        : std::runtime_error(msg), kind_(kind) {}
    ErrorKind kind() const { return kind_; }
    int exit_code() const { return static_cast<int>(kind_); }

private:
    ErrorKind kind_;
};

[[noreturn]] inline void raise(ErrorKind k, const std::string& msg) {
    throw Error(k, msg);
}

[[noreturn]] inline void raise_math(const std::string& m) { raise(ErrorKind::Math, m); }
[[noreturn]] inline void raise_input(const std::string& m) { raise(ErrorKind::Input, m); }
[[noreturn]] inline void raise_resource(const std::string& m) { raise(ErrorKind::Resource, m); }
[[noreturn]] inline void raise_internal(const std::string& m) { raise(ErrorKind::Internal, m); }

// Work budgets. All heavy kernels take a Limits and fail with a Resource
// error instead of running away. The CLI exposes a single multiplier.
struct Limits {
    uint64_t max_terms = 4'000'000;          // polynomial term budget per result
    uint64_t max_point_evals = 200'000'000;  // projective point enumeration
    uint64_t max_subset_probes = 1'048'576;  // factor recombination (2^20)
    uint64_t max_gcd_ops = 400'000'000;      // PRS coefficient-op budget
    uint64_t max_trial_division = 4'000'000; // integer factorization bound

    Limits scaled(uint64_t m) const {
        Limits l = *this;
        if (m == 0) m = 1;
        l.max_terms *= m;
        l.max_point_evals *= m;
        l.max_subset_probes *= m;
        l.max_gcd_ops *= m;
        l.max_trial_division *= m;
        return l;
    }
};

inline const Limits& default_limits() {
    static const Limits l{};
    return l;
}

} // namespace pfol

#endif
