#pragma once

// Sparse elements of the weighted l1 sequence space X.
//
// A SpectralField is a finite map ModeIndex -> coefficient plus a tail budget:
// a certified upper bound on the weighted norm of every mode discarded along
// the way. All reported norms include the tail, so they are upper bounds for
// the represented infinite series. Stored coefficients are never exactly zero
// and iteration order is (m, n) lexicographic, which keeps floating-point
// sums reproducible.

#include <map>
#include <stdexcept>

#include "specwave/modes.hpp"

namespace specwave {

class SpectralField {
  public:
    using Map = std::map<ModeIndex, double>;

    SpectralField() = default;
    explicit SpectralField(WeightConfig w) : weight_(std::move(w)) {}

    const WeightConfig& weight() const { return weight_; }
    const Map& coeffs() const { return coeffs_; }
    double tail_budget() const { return tail_; }
    std::size_t size() const { return coeffs_.size(); }
    bool empty() const { return coeffs_.empty(); }

    double coeff(int m, int n) const {
        auto it = coeffs_.find(ModeIndex{m, n});
        return it == coeffs_.end() ? 0.0 : it->second;
    }

    // Sets the coefficient at canonical (m, n); exact zeros are pruned.
    void set(int m, int n, double c) {
        if (m < 0 || n < 0) throw std::domain_error("SpectralField::set: index not canonical");
        if (c == 0.0)
            coeffs_.erase(ModeIndex{m, n});
        else
            coeffs_[ModeIndex{m, n}] = c;
    }

    // Adds c * P_{mu,nu} for signed (mu, nu), canonicalizing first.
    void accumulate(int mu, int nu, double c) {
        if (c == 0.0) return;
        const CanonicalMode cm = canonicalize(mu, nu);
        auto [it, inserted] = coeffs_.try_emplace(cm.mode, 0.0);
        it->second += cm.sign * c;
        if (it->second == 0.0) coeffs_.erase(it);
    }

    void add_tail(double t) {
        if (t < 0.0) throw std::domain_error("SpectralField: negative tail budget");
        tail_ += t;
    }

    void set_tail(double t) {
        if (t < 0.0) throw std::domain_error("SpectralField: negative tail budget");
        tail_ = t;
    }

  private:
    Map coeffs_;
    double tail_ = 0.0;
    WeightConfig weight_;
};

// Weighted l1 norm: sum of rho^{2(m+n+1)} |c| over stored modes, plus the
// tail budget. The zero field returns exactly the tail.
double norm(const SpectralField& v);

// Norm of the stored modes only (tail excluded).
double stored_norm(const SpectralField& v);

// a*u + b*v, coefficient-wise; tails combine as |a| u.tail + |b| v.tail.
// Throws std::invalid_argument when the weight configs differ.
SpectralField linear_combine(double a, const SpectralField& u, double b, const SpectralField& v);

// Pointwise value sum c sin((2m+1)tau) sin((2n+1)x) of the truncated
// representative; the tail budget is not part of the value.
double evaluate(const SpectralField& v, double tau, double x);

// Keeps exactly the modes of s (complement modes for Z1/Z2). The tail budget
// always belongs to the complement side: projections onto Y1/Y2 return tail 0,
// projections onto Z1/Z2 keep the input tail.
SpectralField project(const SpectralField& v, Subspace s);

// Drops every mode with m + n + 1 > max_degree and folds the exact weighted
// norm of the dropped block into the tail budget.
SpectralField truncate_by_degree(const SpectralField& v, int max_degree);

// Index rescaling u -> n * u(m tau, n x) for odd m, n: mode (m', n') moves to
// temporal frequency m(2m'+1), wavenumber n(2n'+1), coefficient times n.
// The tail budget is carried as |n| * tail, which certifies the pre-image
// truncation only (the reweighting of unknown discarded modes is not
// re-certified; exact for m = n = 1).
SpectralField rescale(const SpectralField& v, int m, int n);

// (m,n) -> (n,m) index swap with coefficients scaled by 1/omega; the weight
// rho^{2(m+n+1)} is swap-invariant so the tail scales by 1/omega exactly.
SpectralField focusing_transform(const SpectralField& v, double omega);

}  // namespace specwave
