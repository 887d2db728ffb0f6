#pragma once

// Built-in reference configurations, runnable with zero setup.

#include <iosfwd>
#include <string_view>
#include <vector>

#include "cimmino/iteration.hpp"

namespace cimmino::demos {

/// A = [[2, 1], [1, 2]], b = (3, 3), solution (1, 1); cos theta = 4/5.
LinearSystem example1_system();
/// A = [[1, 1], [1, -1]], b = (2, 0), solution (1, 1); orthogonal rows.
LinearSystem example2_system();
/// Unit normals (1, 0) and (-1/2, sqrt(3)/2) at 120 degrees, b = 0.
LinearSystem figure1_system();

std::vector<std::string_view> names();

/// Runs the named configuration, printing expected vs computed values.
/// Returns 0 when every check is within tolerance, 1 otherwise (including
/// an unknown name).
int run(std::string_view name, std::ostream& out, std::ostream& err);

}  // namespace cimmino::demos
