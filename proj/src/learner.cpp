#include "cogsim/learner.hpp"

#include <algorithm>
#include <cmath>

#include "cogsim/channel.hpp"
#include "cogsim/errors.hpp"

namespace cogsim {

SnrSampleSet::SnrSampleSet(std::vector<double> samples_db) : original_(std::move(samples_db)) {
    if (original_.empty()) throw DomainError("sample set must hold at least one SNR");
    for (double s : original_)
        if (!std::isfinite(s)) throw DomainError("sample set contains a non-finite SNR");
    sorted_ = original_;
    std::sort(sorted_.begin(), sorted_.end());
}

SnrSampleSet SnrSampleSet::prefix(std::size_t count) const {
    if (count == 0 || count > original_.size())
        throw DomainError("prefix length out of range");
    return SnrSampleSet(std::vector<double>(original_.begin(), original_.begin() + count));
}

double distance_from_snr(double snr_db, double d1_km, double target_snr_db) {
    return d1_km * std::pow(10.0, (snr_db - target_snr_db) / kPathLossSlopeDb);
}

int BoundaryIndex::count(int sample_count) const {
    switch (kind) {
        case Kind::Below: return 0;
        case Kind::Between: return k;
        case Kind::Above: return sample_count;
    }
    return 0;
}

std::string BoundaryIndex::to_string() const {
    switch (kind) {
        case Kind::Below: return "below";
        case Kind::Between: return "between(" + std::to_string(k) + ")";
        case Kind::Above: return "above";
    }
    return "?";
}

BoundaryIndex boundary_index(const SnrSampleSet& samples, double boundary_km, double d1_km,
                             double target_snr_db) {
    const auto s = samples.sorted();
    // first sample whose learned distance exceeds the boundary
    const auto it = std::upper_bound(s.begin(), s.end(), boundary_km, [&](double b, double x) {
        return b < distance_from_snr(x, d1_km, target_snr_db);
    });
    const auto n = static_cast<int>(it - s.begin());
    if (n == 0) return BoundaryIndex::below();
    if (n == static_cast<int>(s.size())) return BoundaryIndex::above();
    return BoundaryIndex::between(n);
}

HalfBinomial::HalfBinomial(int trials) : trials_(trials) {
    if (trials < 0) throw DomainError("binomial trial count must be non-negative");
    weights_.assign(static_cast<std::size_t>(trials) + 1, 0.0);
    if (trials <= kExactTrials) {
        // integer coefficients and 2^K are exact in double here
        weights_[0] = 1.0;
        for (int i = 1; i <= trials; ++i)
            weights_[i] = weights_[i - 1] * static_cast<double>(trials - i + 1) / i;
        total_ = std::ldexp(1.0, trials);
        return;
    }
    const int mode = trials / 2;
    weights_[mode] = 1.0;
    for (int i = mode + 1; i <= trials; ++i)
        weights_[i] = weights_[i - 1] * static_cast<double>(trials - i + 1) / i;
    for (int i = mode - 1; i >= 0; --i)
        weights_[i] = weights_[i + 1] * static_cast<double>(i + 1) / (trials - i);
    total_ = sum(0, trials);
}

double HalfBinomial::sum(int lo, int hi) const {
    // add from the outer (smaller) end towards the mode
    const int mode = trials_ / 2;
    double acc = 0.0;
    if (hi <= mode) {
        for (int i = lo; i <= hi; ++i) acc += weights_[i];
    } else if (lo >= mode) {
        for (int i = hi; i >= lo; --i) acc += weights_[i];
    } else {
        double left = 0.0;
        for (int i = lo; i < mode; ++i) left += weights_[i];
        double right = 0.0;
        for (int i = hi; i > mode; --i) right += weights_[i];
        acc = left + right + weights_[mode];
    }
    return acc;
}

double HalfBinomial::range(int lo, int hi) const {
    lo = std::max(lo, 0);
    hi = std::min(hi, trials_);
    if (lo > hi) return 0.0;
    if (lo == 0 && hi == trials_) return 1.0;
    return sum(lo, hi) / total_;
}

double HalfBinomial::upper_tail(int k) const { return range(k, trials_); }
double HalfBinomial::lower_tail(int k) const { return range(0, k); }
double HalfBinomial::pmf(int k) const { return range(k, k); }

double binom_tail_half(int trials, int k) { return HalfBinomial(trials).upper_tail(k); }

ProbBounds distance_exceedance_bounds(const SnrSampleSet& samples, double d0e_km, double d1_km,
                                      double target_snr_db) {
    const int n_samples = static_cast<int>(samples.size());
    const int n = boundary_index(samples, d0e_km, d1_km, target_snr_db).count(n_samples);
    const HalfBinomial binom(n_samples);
    // n learned distances lie at or below d0e, so d0 >= d0e is bracketed by
    // d0 exceeding the (n+1)-th and the n-th of them.
    return {binom.upper_tail(n + 1), binom.upper_tail(n)};
}

}  // namespace cogsim
