#include "fairsplit/signkit.hpp"

#include <algorithm>
#include <bit>
#include <limits>
#include <string>

#include "fairsplit/errors.hpp"

namespace fairsplit {

namespace {

std::uint64_t low_bits(int n) {
    return n >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1;
}

// Sum of 3^i over the set bits i of mask, for every mask below 2^n.
std::vector<std::uint64_t> ternary_weights(int n) {
    std::vector<std::uint64_t> w(std::size_t{1} << n, 0);
    for (std::uint64_t mask = 1; mask < w.size(); ++mask) {
        int low = std::countr_zero(mask);
        w[mask] = w[mask & (mask - 1)] + pow3(low);
    }
    return w;
}

}  // namespace

SignVector::SignVector(int n, std::uint64_t plus, std::uint64_t minus)
    : n_(n), plus_(plus), minus_(minus) {
    if (n < 1 || n > max_length) throw PreconditionError("sign vector length out of range");
    if (plus & minus) throw PreconditionError("sign vector: x+ and x- intersect");
    if ((plus | minus) & ~low_bits(n)) throw PreconditionError("sign vector: index beyond length");
}

SignVector::SignVector(const std::vector<Sign>& entries)
    : SignVector(static_cast<int>(entries.size()), 0, 0) {
    for (int i = 0; i < n_; ++i) {
        if (entries[i] == Sign::Plus) plus_ |= std::uint64_t{1} << i;
        if (entries[i] == Sign::Minus) minus_ |= std::uint64_t{1} << i;
    }
}

SignVector SignVector::parse(std::string_view text) {
    std::vector<Sign> entries;
    for (char c : text) {
        switch (c) {
            case '+': entries.push_back(Sign::Plus); break;
            case '-': entries.push_back(Sign::Minus); break;
            case '0': entries.push_back(Sign::Zero); break;
            case ' ': case ',': break;
            default: throw PreconditionError(std::string("sign vector: bad character '") + c + "'");
        }
    }
    return SignVector(entries);
}

SignVector SignVector::from_code(int n, std::uint64_t code) {
    std::uint64_t plus = 0, minus = 0;
    for (int i = 0; i < n; ++i, code /= 3) {
        if (code % 3 == 1) plus |= std::uint64_t{1} << i;
        else if (code % 3 == 2) minus |= std::uint64_t{1} << i;
    }
    return SignVector(n, plus, minus);
}

std::uint64_t SignVector::code() const {
    std::uint64_t c = 0;
    for (int i = n_ - 1; i >= 0; --i) c = 3 * c + ((plus_ >> i) & 1) + 2 * ((minus_ >> i) & 1);
    return c;
}

Sign SignVector::operator[](int i) const {
    if ((plus_ >> i) & 1) return Sign::Plus;
    if ((minus_ >> i) & 1) return Sign::Minus;
    return Sign::Zero;
}

int SignVector::nonzeros() const { return std::popcount(plus_ | minus_); }

Sign SignVector::first_nonzero() const {
    if (is_zero()) return Sign::Zero;
    std::uint64_t lowest = (plus_ | minus_) & (~(plus_ | minus_) + 1);
    return (plus_ & lowest) ? Sign::Plus : Sign::Minus;
}

std::string SignVector::to_string() const {
    std::string s;
    for (int i = 0; i < n_; ++i) {
        Sign e = (*this)[i];
        s += e == Sign::Plus ? '+' : (e == Sign::Minus ? '-' : '0');
    }
    return s;
}

int alt(const SignVector& x) {
    int runs = 0;
    Sign last = Sign::Zero;
    for (int i = 0; i < x.size(); ++i) {
        Sign s = x[i];
        if (s != Sign::Zero && s != last) {
            ++runs;
            last = s;
        }
    }
    return runs;
}

bool precedes(const SignVector& x, const SignVector& y) {
    if (x.size() != y.size()) throw PreconditionError("precedes: length mismatch");
    return (x.plus() & ~y.plus()) == 0 && (x.minus() & ~y.minus()) == 0;
}

std::uint64_t compute_J(const SignVector& x, const ColorPartition& partition) {
    std::uint64_t J = 0;
    for (int j = 0; j < partition.colors(); ++j) {
        int p = std::popcount(x.plus() & partition.class_mask(j));
        int q = std::popcount(x.minus() & partition.class_mask(j));
        int size = partition.class_size(j);
        if ((p == q && 2 * p == size) || 2 * std::max(p, q) > size) J |= std::uint64_t{1} << j;
    }
    return J;
}

namespace {

void check_t_size(const ColorPartition& partition) {
    if (partition.size() > max_t_length)
        throw InstanceTooLarge("compute_t: n = " + std::to_string(partition.size()) +
                               " exceeds the cap of " + std::to_string(max_t_length));
}

int alt_if_J_empty(std::uint64_t code, const ColorPartition& partition) {
    SignVector x = SignVector::from_code(partition.size(), code);
    return compute_J(x, partition) == 0 ? alt(x) : 0;
}

}  // namespace

int serial::compute_t(const ColorPartition& partition) {
    check_t_size(partition);
    const auto total = static_cast<std::int64_t>(pow3(partition.size()));
    int t = 0;
    for (std::int64_t code = 0; code < total; ++code)
        t = std::max(t, alt_if_J_empty(static_cast<std::uint64_t>(code), partition));
    return t;
}

int compute_t(const ColorPartition& partition) {
    check_t_size(partition);
    const auto total = static_cast<std::int64_t>(pow3(partition.size()));
    int t = 0;
#pragma omp parallel for reduction(max : t) schedule(static)
    for (std::int64_t code = 0; code < total; ++code)
        t = std::max(t, alt_if_J_empty(static_cast<std::uint64_t>(code), partition));
    return t;
}

int lambda_map(const SignVector& x, const ColorPartition& partition, int t) {
    if (x.is_zero()) throw PreconditionError("lambda: the zero vector has no label");
    if (x.size() != partition.size()) throw PreconditionError("lambda: length mismatch");
    std::uint64_t J = compute_J(x, partition);
    if (J == 0) return x.first_nonzero() == Sign::Plus ? alt(x) : -alt(x);

    int top = 63 - std::countl_zero(J);
    std::uint64_t cls = partition.class_mask(top);
    std::uint64_t p = x.plus() & cls, q = x.minus() & cls;
    int size = partition.class_size(top);
    int pc = std::popcount(p), qc = std::popcount(q);
    bool positive;
    if (pc == qc && 2 * pc == size)
        positive = std::countr_zero(p) < std::countr_zero(q);
    else
        positive = 2 * pc > size;
    int value = t + top + 1;
    return positive ? value : -value;
}

Labeling tabulate_lambda(const ColorPartition& partition, int t) {
    Labeling L;
    L.n = partition.size();
    L.labels.assign(pow3(L.n), 0);
    for (std::uint64_t code = 1; code < L.labels.size(); ++code)
        L.labels[code] = lambda_map(SignVector::from_code(L.n, code), partition, t);
    return L;
}

namespace {

struct PairScan {
    const Labeling& L;
    std::vector<std::uint64_t> w;

    explicit PairScan(const Labeling& labeling) : L(labeling), w(ternary_weights(labeling.n)) {}

    std::uint64_t code_of(std::uint64_t plus, std::uint64_t minus) const {
        return w[plus] + 2 * w[minus];
    }

    // Walks the nonzero predecessors of y in decreasing submask order and
    // counts the complementary ones; stops after the first if first_only.
    template <class OnHit>
    std::uint64_t scan(std::uint64_t y_code, OnHit&& on_hit) const {
        SignVector y = SignVector::from_code(L.n, y_code);
        std::uint64_t support = y.plus() | y.minus();
        int ly = L.labels[y_code];
        std::uint64_t hits = 0;
        for (std::uint64_t sub = support; sub != 0; sub = (sub - 1) & support) {
            std::uint64_t xp = y.plus() & sub, xm = y.minus() & sub;
            if (L.labels[code_of(xp, xm)] + ly == 0) {
                ++hits;
                if (!on_hit(SignVector(L.n, xp, xm), y)) break;
            }
        }
        return hits;
    }
};

void validate_labeling(const Labeling& L, int s) {
    if (L.n < 1) throw PreconditionError("tucker_verify: empty labeling");
    if (L.n > max_pair_scan_length)
        throw InstanceTooLarge("tucker_verify: n = " + std::to_string(L.n) + " exceeds the cap of " +
                               std::to_string(max_pair_scan_length));
    if (L.labels.size() != pow3(L.n)) throw PreconditionError("tucker_verify: labeling has the wrong size");
    for (std::size_t c = 1; c < L.labels.size(); ++c) {
        int v = L.labels[c];
        if (v == 0)
            throw PreconditionError("tucker_verify: partial labeling, no label for " +
                                    SignVector::from_code(L.n, c).to_string());
        if (v > s || v < -s)
            throw PreconditionError("tucker_verify: label " + std::to_string(v) + " outside +-" +
                                    std::to_string(s));
    }
}

void check_antipodal(const Labeling& L, const PairScan& scan, TuckerReport& report) {
    const std::uint64_t full = low_bits(L.n);
    for (std::uint64_t plus = 0; plus <= full; ++plus) {
        for (std::uint64_t minus = (~plus) & full;; minus = (minus - 1) & (~plus) & full) {
            if (plus | minus) {
                std::uint64_t c = scan.code_of(plus, minus), neg = scan.code_of(minus, plus);
                if (L.labels[neg] != -L.labels[c]) {
                    SignVector x(L.n, plus, minus);
                    if (!report.antipodal_failure || x.code() < report.antipodal_failure->code())
                        report.antipodal_failure = x;
                    report.antipodal = false;
                }
            }
            if (minus == 0) break;
        }
    }
}

void finish(TuckerReport& report) {
    report.lemma_contradiction = report.ok() && report.s < report.n;
}

}  // namespace

TuckerReport serial::tucker_verify(const Labeling& labeling, int s) {
    validate_labeling(labeling, s);
    TuckerReport report;
    report.n = labeling.n;
    report.s = s;
    PairScan scan(labeling);
    check_antipodal(labeling, scan, report);
    for (std::uint64_t y = 1; y < labeling.labels.size(); ++y) {
        report.complementary_pairs += scan.scan(y, [&](const SignVector& x, const SignVector& yv) {
            if (!report.first_pair) report.first_pair.emplace(x, yv);
            return true;
        });
    }
    finish(report);
    return report;
}

TuckerReport tucker_verify(const Labeling& labeling, int s) {
    validate_labeling(labeling, s);
    TuckerReport report;
    report.n = labeling.n;
    report.s = s;
    PairScan scan(labeling);
    check_antipodal(labeling, scan, report);

    const auto total = static_cast<std::int64_t>(labeling.labels.size());
    std::uint64_t pairs = 0;
    std::int64_t first_y = std::numeric_limits<std::int64_t>::max();
#pragma omp parallel for reduction(+ : pairs) reduction(min : first_y) schedule(dynamic, 64)
    for (std::int64_t y = 1; y < total; ++y) {
        std::uint64_t hits = scan.scan(static_cast<std::uint64_t>(y),
                                       [](const SignVector&, const SignVector&) { return true; });
        pairs += hits;
        if (hits && y < first_y) first_y = y;
    }
    report.complementary_pairs = pairs;
    if (pairs)
        scan.scan(static_cast<std::uint64_t>(first_y), [&](const SignVector& x, const SignVector& y) {
            report.first_pair.emplace(x, y);
            return false;
        });
    finish(report);
    return report;
}

}  // namespace fairsplit
