#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <vector>

namespace cogsim {

/// The K SNR measurements (dB) collected by the C-SBS, kept in ascending
/// order. Immutable after construction.
class SnrSampleSet {
public:
    /// Throws DomainError for an empty or non-finite sample vector.
    explicit SnrSampleSet(std::vector<double> samples_db);

    std::size_t size() const noexcept { return sorted_.size(); }
    double operator[](std::size_t i) const { return sorted_[i]; }
    std::span<const double> sorted() const noexcept { return sorted_; }

    /// First `count` samples of the original (unsorted) order as a new set.
    SnrSampleSet prefix(std::size_t count) const;

private:
    std::vector<double> original_;
    std::vector<double> sorted_;
};

/// Maps a measured SNR to the MBS-MU distance it indicates:
/// d1 * 10^((x - target) / 37.6).
double distance_from_snr(double snr_db, double d1_km, double target_snr_db);

/// Position of a boundary distance among the learned distances
/// f(s_1) <= ... <= f(s_K).
struct BoundaryIndex {
    enum class Kind { Below, Between, Above };

    Kind kind = Kind::Below;
    int k = 0;  // meaningful for Between only, in [1, K-1]

    static BoundaryIndex below() { return {Kind::Below, 0}; }
    static BoundaryIndex between(int k) { return {Kind::Between, k}; }
    static BoundaryIndex above() { return {Kind::Above, 0}; }

    /// Number of learned distances that are <= the boundary (0..K).
    int count(int sample_count) const;

    std::string to_string() const;
    friend bool operator==(const BoundaryIndex&, const BoundaryIndex&) = default;
};

/// Locates `boundary_km` by binary search: Below if boundary < f(s_1), Above
/// if boundary >= f(s_K), otherwise Between(k) with f(s_k) <= boundary <
/// f(s_{k+1}). Ties resolve to the largest valid k.
BoundaryIndex boundary_index(const SnrSampleSet& samples, double boundary_km, double d1_km,
                             double target_snr_db);

/// Distribution of Binomial(K, 1/2). Up to K = 50 the coefficients and 2^K
/// are exact doubles and every tail is the exact dyadic rational; larger K
/// uses weights normalised at the mode so that 2^K is never formed.
class HalfBinomial {
public:
    explicit HalfBinomial(int trials);

    int trials() const noexcept { return trials_; }
    /// Pr{B >= k}; 1 for k <= 0 and 0 for k > K.
    double upper_tail(int k) const;
    /// Pr{B <= k}.
    double lower_tail(int k) const;
    /// Pr{lo <= B <= hi}; 0 if the range is empty.
    double range(int lo, int hi) const;
    double pmf(int k) const;

private:
    static constexpr int kExactTrials = 50;

    double sum(int lo, int hi) const;

    int trials_;
    std::vector<double> weights_;
    double total_;
};

/// Pr{Binomial(K, 1/2) >= k}.
double binom_tail_half(int trials, int k);

struct ProbBounds {
    double lower;
    double upper;
};

/// Bounds on Pr{d0 >= d0e} implied by the ordered sample set.
ProbBounds distance_exceedance_bounds(const SnrSampleSet& samples, double d0e_km, double d1_km,
                                      double target_snr_db);

}  // namespace cogsim
