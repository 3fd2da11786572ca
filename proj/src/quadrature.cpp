#include "legproj/quadrature.hpp"

namespace legproj {

template GaussRule<double> gauss_rule<double>(int);
template GaussRule<Real> gauss_rule<Real>(int);

} // namespace legproj
