#pragma once

#include <cstdint>

#include <boost/rational.hpp>

namespace boxcube {

// Exact endpoint type. boost::rational keeps values normalized: lowest terms,
// positive denominator.
using Rational = boost::rational<std::int64_t>;

}  // namespace boxcube
