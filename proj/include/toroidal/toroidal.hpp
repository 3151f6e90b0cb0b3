#ifndef TOROIDAL_TOROIDAL_HPP
#define TOROIDAL_TOROIDAL_HPP

#include "algebra.hpp"
#include "linalg.hpp"
#include "partition.hpp"
#include "quotient.hpp"
#include "rational.hpp"
#include "reducibility.hpp"
#include "roots.hpp"
#include "singular.hpp"
#include "verma.hpp"

namespace toroidal {

inline constexpr const char* version = "1.0.0";

} // namespace toroidal

#endif
