#include "legproj/report_io.hpp"

#include <cmath>
#include <cstdio>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace legproj {

std::string format_real(double x)
{
    if (std::isnan(x))
        return "nan";
    if (std::isinf(x))
        return x > 0 ? "inf" : "-inf";
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.17g", x);
    return buf;
}

std::string format_real(const Real& x)
{
    return format_real(to_double(x));
}

void write_series(std::ostream& os, const LegendreSeries& s)
{
    const auto c = s.coeffs();
    for (std::size_t j = 0; j < c.size(); ++j)
        if (!c[j].is_zero())
            os << j << '\t' << c[j].str() << '\n';
}

std::string series_to_string(const LegendreSeries& s)
{
    std::ostringstream os;
    write_series(os, s);
    return os.str();
}

LegendreSeries read_series(std::istream& is)
{
    std::vector<Rational> c;
    std::string line;
    long last = -1;
    long lineno = 0;
    while (std::getline(is, line)) {
        ++lineno;
        if (line.empty())
            continue;
        const auto tab = line.find('\t');
        if (tab == std::string::npos)
            throw std::invalid_argument("series line " + std::to_string(lineno) + ": expected 'j<TAB>num/den'");
        long j = 0;
        try {
            std::size_t used = 0;
            j = std::stol(line.substr(0, tab), &used);
            if (used != tab)
                throw std::invalid_argument("trailing characters");
        } catch (const std::exception&) {
            throw std::invalid_argument("series line " + std::to_string(lineno) + ": bad index '" + line.substr(0, tab) + "'");
        }
        if (j <= last)
            throw std::invalid_argument("series line " + std::to_string(lineno) + ": indices must be strictly ascending");
        last = j;
        c.resize(static_cast<std::size_t>(j + 1), Rational(0));
        c[static_cast<std::size_t>(j)] = Rational::parse(line.substr(tab + 1));
    }
    return LegendreSeries(std::move(c));
}

LegendreSeries series_from_string(const std::string& text)
{
    std::istringstream is(text);
    return read_series(is);
}

std::string bound_kind_label(const BoundReport& r)
{
    std::string label(to_string(r.kind));
    if (r.kind == BoundKind::InterpBeirao)
        label += "_K" + std::to_string(r.k);
    return label;
}

void write_bound_csv(std::ostream& os, const std::vector<BoundReport>& rows)
{
    os << kBoundCsvHeader << '\n';
    for (const auto& r : rows)
        os << bound_kind_label(r) << ',' << r.function << ',' << r.p << ',' << r.s << ',' << r.nu << ','
           << format_real(r.lhs) << ',' << format_real(r.rhs) << ',' << format_real(r.ratio) << ','
           << (r.pass ? "true" : "false") << '\n';
}

void write_identity_csv(std::ostream& os, const std::vector<IdentityCheck>& rows)
{
    os << kIdentityCsvHeader << '\n';
    for (const auto& r : rows)
        os << r.identity << ',' << r.p << ',' << r.k << ',' << r.n << ',' << r.lhs << ',' << r.rhs << ','
           << (r.holds ? "true" : "false") << '\n';
}

void write_growth_csv(std::ostream& os, const std::vector<GrowthRow>& rows)
{
    os << kGrowthCsvHeader << '\n';
    for (const auto& r : rows)
        os << r.p << ',' << r.nu << ',' << r.norm_sq.str() << ',' << r.ratio.str() << '\n';
}

} // namespace legproj
