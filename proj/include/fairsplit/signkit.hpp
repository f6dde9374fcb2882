#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "fairsplit/partition.hpp"

namespace fairsplit {

enum class Sign : std::int8_t { Minus = -1, Zero = 0, Plus = 1 };

// Element of {+,-,0}^n stored as the two index sets x+ and x-.
class SignVector {
public:
    static constexpr int max_length = 64;

    SignVector(int n, std::uint64_t plus, std::uint64_t minus);
    explicit SignVector(const std::vector<Sign>& entries);

    // "+-0" style literal, used heavily in tests and diagnostics.
    static SignVector parse(std::string_view text);

    // Decode the base-3 index used by the exhaustive sweeps
    // (digit 0 -> 0, 1 -> +, 2 -> -; vertex 0 is the least significant digit).
    static SignVector from_code(int n, std::uint64_t code);
    std::uint64_t code() const;

    int size() const { return n_; }
    std::uint64_t plus() const { return plus_; }
    std::uint64_t minus() const { return minus_; }
    Sign operator[](int i) const;

    bool is_zero() const { return (plus_ | minus_) == 0; }
    int nonzeros() const;
    // Sign of the lowest-index nonzero entry; Zero for the zero vector.
    Sign first_nonzero() const;
    SignVector operator-() const { return SignVector(n_, minus_, plus_); }

    std::string to_string() const;
    bool operator==(const SignVector&) const = default;

private:
    int n_;
    std::uint64_t plus_;
    std::uint64_t minus_;
};

inline std::uint64_t pow3(int n) {
    std::uint64_t r = 1;
    for (int i = 0; i < n; ++i) r *= 3;
    return r;
}

// Maximum length of an alternating subsequence of the nonzero entries.
int alt(const SignVector& x);

// x+ subset of y+ and x- subset of y-. Throws PreconditionError on length mismatch.
bool precedes(const SignVector& x, const SignVector& y);

// Bit j set iff color j is balanced at exactly |V_j|/2 on both sides or one
// side strictly exceeds |V_j|/2.
std::uint64_t compute_J(const SignVector& x, const ColorPartition& partition);

// Sizes at or below which the exhaustive sweeps are allowed.
inline constexpr int max_t_length = 12;
inline constexpr int max_pair_scan_length = 8;

// max alt(x) over all x with J(x) empty. Throws InstanceTooLarge above
// max_t_length. Runs the OpenMP kernel; serial::compute_t is the reference.
int compute_t(const ColorPartition& partition);

// The antipodal labeling built from J, alt and t. Returned values lie in
// {+-1, ..., +-(t+m)}. Throws PreconditionError on the zero vector.
int lambda_map(const SignVector& x, const ColorPartition& partition, int t);

// Dense labeling of {+,-,0}^n indexed by SignVector::code(). The entry for
// the zero vector is ignored; any other zero entry means "unlabeled".
struct Labeling {
    int n = 0;
    std::vector<int> labels;

    int operator()(const SignVector& x) const { return labels[x.code()]; }
};

Labeling tabulate_lambda(const ColorPartition& partition, int t);

struct TuckerReport {
    int n = 0;
    int s = 0;
    bool antipodal = true;
    std::optional<SignVector> antipodal_failure;
    // Comparable pairs x <= y with lambda(x) + lambda(y) == 0.
    std::uint64_t complementary_pairs = 0;
    std::optional<std::pair<SignVector, SignVector>> first_pair;
    // Set when the labeling passes yet s < n. Never expected to happen.
    bool lemma_contradiction = false;

    bool ok() const { return antipodal && complementary_pairs == 0; }
};

// Checks antipodality and the absence of complementary comparable pairs.
// Throws PreconditionError for a partial labeling or a label outside
// [-s, s] \ {0}, InstanceTooLarge above max_pair_scan_length.
TuckerReport tucker_verify(const Labeling& labeling, int s);

namespace serial {
int compute_t(const ColorPartition& partition);
TuckerReport tucker_verify(const Labeling& labeling, int s);
}  // namespace serial

}  // namespace fairsplit
