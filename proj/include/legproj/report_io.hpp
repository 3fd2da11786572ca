#ifndef LEGPROJ_REPORT_IO_HPP
#define LEGPROJ_REPORT_IO_HPP

#include <iosfwd>
#include <string>
#include <vector>

#include "legproj/bound_checker.hpp"
#include "legproj/certify.hpp"
#include "legproj/legendre_series.hpp"
#include "legproj/qfamily.hpp"
#include "legproj/real.hpp"

namespace legproj {

/// Shortest-form decimal with 17 significant digits ("inf", "nan" for non-finite values).
std::string format_real(double x);
std::string format_real(const Real& x);

/// One `j<TAB>num/den` line per nonzero coefficient, ascending in j, LF-terminated.
void write_series(std::ostream& os, const LegendreSeries& s);
std::string series_to_string(const LegendreSeries& s);

/// Inverse of write_series. Throws std::invalid_argument on malformed lines,
/// repeated or descending indices.
LegendreSeries read_series(std::istream& is);
LegendreSeries series_from_string(const std::string& text);

inline constexpr const char* kBoundCsvHeader = "kind,function,p,s,nu,lhs,rhs,ratio,pass";
inline constexpr const char* kIdentityCsvHeader = "identity,p,k,n,lhs,rhs,holds";
inline constexpr const char* kGrowthCsvHeader = "p,nu,norm_sq,ratio";

/// Kind label; InterpBeirao carries its order as INTERP_BEIRAO_K<k>.
std::string bound_kind_label(const BoundReport& r);

void write_bound_csv(std::ostream& os, const std::vector<BoundReport>& rows);
void write_identity_csv(std::ostream& os, const std::vector<IdentityCheck>& rows);
void write_growth_csv(std::ostream& os, const std::vector<GrowthRow>& rows);

} // namespace legproj

#endif // LEGPROJ_REPORT_IO_HPP
