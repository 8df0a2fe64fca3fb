#pragma once

#include <cmath>
#include <cstdarg>
#include <cstdio>
#include <string>

namespace spdc {

// Exact SI speed of light.
inline constexpr double kSpeedOfLight_m_s = 299'792'458.0;

// nu[GHz] * lambda[nm] = c in nm*GHz.
inline constexpr double kNmGhz = kSpeedOfLight_m_s;  // 2.99792458e8 nm*GHz

// Gaussian FWHM = 2*sqrt(2 ln 2) * sigma.
inline const double kFwhmPerSigma = 2.0 * std::sqrt(2.0 * std::log(2.0));

inline double nm_to_um(double nm) { return nm * 1e-3; }
inline double um_to_nm(double um) { return um * 1e3; }

inline double nm_to_ghz(double nm) { return kNmGhz / nm; }
inline double ghz_to_nm(double ghz) { return kNmGhz / ghz; }

inline double fwhm_to_sigma(double fwhm) { return fwhm / kFwhmPerSigma; }
inline double sigma_to_fwhm(double sigma) { return sigma * kFwhmPerSigma; }

// printf-style std::string helper used for error messages and CSV rows.
inline std::string strf(const char* fmt, ...) {
    char buf[1024];
    va_list ap;
    va_start(ap, fmt);
    std::vsnprintf(buf, sizeof buf, fmt, ap);
    va_end(ap);
    return std::string(buf);
}

}  // namespace spdc
