#pragma once

#include <cmath>

namespace sepout {

// All internal math is linear milliwatts; dB/dBm appear only at interfaces.
// The fixed convention: x_mw = 10^(x_dbm / 10).

inline constexpr double kLn10Over10 = 0.23025850929940457;  // ln(10)/10

inline double dbm_to_mw(double dbm) { return std::pow(10.0, dbm / 10.0); }

inline double mw_to_dbm(double mw) { return 10.0 * std::log10(mw); }

inline double db_to_linear(double db) { return std::pow(10.0, db / 10.0); }

inline double linear_to_db(double ratio) { return 10.0 * std::log10(ratio); }

}  // namespace sepout
