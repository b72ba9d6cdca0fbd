#pragma once

// Basis indexing for the odd-odd sine basis
//
//   P_{m,n}(tau, x) = sin((2m+1) tau) sin((2n+1) x),   m, n >= 0,
//
// together with the signed reflection rules that extend the family to
// arbitrary integer indices:
//
//   P_{-m,n} = -P_{m-1,n},   P_{m,-n} = -P_{m,n-1},   P_{-m,-n} = P_{m-1,n-1}.
//
// Reflections act per axis and each axis reflection flips the sign once.

#include <compare>
#include <cstdint>
#include <memory>
#include <stdexcept>
#include <vector>

namespace specwave {

struct ModeIndex {
    int m = 0;  // temporal mode, frequency 2m+1
    int n = 0;  // spatial mode, wavenumber 2n+1

    friend auto operator<=>(const ModeIndex&, const ModeIndex&) = default;
};

struct CanonicalMode {
    ModeIndex mode;
    int sign = 1;  // +1 or -1
};

// Maps signed indices (mu, nu) onto the canonical quadrant. Involutive on
// already-canonical input (sign +1).
inline CanonicalMode canonicalize(int mu, int nu) {
    int s = 1;
    if (mu < 0) {
        mu = -mu - 1;
        s = -s;
    }
    if (nu < 0) {
        nu = -nu - 1;
        s = -s;
    }
    return {ModeIndex{mu, nu}, s};
}

// Weight base rho for the weighted l1 norm sum rho^{2(m+n+1)} |c_{m,n}|.
// rho is an exact rational (default 1001/1000); integer powers are formed by
// repeated multiplication in double precision and cached so norm scans are
// cheap and bit-reproducible.
class WeightConfig {
  public:
    WeightConfig() : WeightConfig(1001, 1000) {}

    WeightConfig(std::int64_t num, std::int64_t den) : num_(num), den_(den) {
        if (num <= 0 || den <= 0 || num <= den)
            throw std::domain_error("WeightConfig: rho must exceed 1");
        const double rho = static_cast<double>(num) / static_cast<double>(den);
        auto table = std::make_shared<std::vector<double>>();
        table->reserve(kTableSize);
        double p = 1.0;
        for (int d = 0; d < kTableSize; ++d) {
            table->push_back(p);
            p *= rho;
        }
        powers_ = std::move(table);
    }

    std::int64_t num() const { return num_; }
    std::int64_t den() const { return den_; }
    double rho() const { return (*powers_)[1]; }

    // rho^d for d >= 0.
    double power(int d) const {
        if (d < kTableSize) return (*powers_)[static_cast<std::size_t>(d)];
        double p = (*powers_)[kTableSize - 1];
        const double rho = (*powers_)[1];
        for (int i = kTableSize - 1; i < d; ++i) p *= rho;
        return p;
    }

    // The norm weight of mode (m, n): rho^{2(m+n+1)}.
    double weight(const ModeIndex& mode) const { return power(2 * (mode.m + mode.n + 1)); }

    friend bool operator==(const WeightConfig& a, const WeightConfig& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend bool operator!=(const WeightConfig& a, const WeightConfig& b) { return !(a == b); }

  private:
    static constexpr int kTableSize = 4096;
    std::int64_t num_;
    std::int64_t den_;
    std::shared_ptr<const std::vector<double>> powers_;
};

// Named mode sets. Y1 = span{P00, P01, P10}; Y2 = span{P_{m,n}: m,n <= 3};
// Z1, Z2 are their complements.
enum class Subspace { Y1, Y2, Z1, Z2 };

inline bool in_subspace(const ModeIndex& mode, Subspace s) {
    const bool y1 = (mode.m == 0 && mode.n == 0) || (mode.m == 0 && mode.n == 1) ||
                    (mode.m == 1 && mode.n == 0);
    const bool y2 = mode.m <= 3 && mode.n <= 3;
    switch (s) {
        case Subspace::Y1: return y1;
        case Subspace::Y2: return y2;
        case Subspace::Z1: return !y1;
        case Subspace::Z2: return !y2;
    }
    return false;
}

}  // namespace specwave
