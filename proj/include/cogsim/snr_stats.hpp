#pragma once

namespace cogsim {

/// CDF of the fading ratio 10 log10(|h1|^2 / |h0|^2) for two independent
/// unit-mean exponential power gains.
double cdf_theta_r(double theta_r_db);
double pdf_theta_r(double theta_r_db);

/// Density of the shadowing difference, a zero-mean normal with variance
/// 2 sigma_s^2. Throws DomainError when sigma_s_db <= 0.
double pdf_theta_s(double theta_s_db, double sigma_s_db);

/// Parameters of the distribution of the SNR (dB) measured at the C-SBS.
struct SnrCdfModel {
    double target_snr_db;
    double d0_km;
    double d1_km;
    double sigma_s_db;

    /// target + 37.6 log10(d0 / d1); the distribution is symmetric about it.
    double median_db() const;
    /// Offset of gamma1_db from the median.
    double offset(double gamma1_db) const;
};

/// CDF of the measured SNR in dB: the convolution of the shadowing density
/// with the fading-ratio CDF, integrated adaptively to an absolute tolerance
/// of 1e-8. sigma_s_db == 0 uses the fading CDF directly.
double cdf_gamma1_db(const SnrCdfModel& model, double gamma1_db);

}  // namespace cogsim
