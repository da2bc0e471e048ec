#pragma once

#include <string>
#include <vector>

#include "fracdisp/cli/config.hpp"
#include "fracdisp/field.hpp"

namespace fracdisp::cli {

struct InitialData {
    RealField field;
    double size = 0.0;  ///< ||u0||_{H^1} + ||u0||_{L^1}
    std::vector<std::string> warnings;
};

/// gaussian / shifted_gaussian: a G(x - s, w); odd_bump: a x exp(-x^2 / w);
/// random_smooth: seeded band-limited field rescaled so that ||.||_{H^1} + ||.||_{L^1} = a.
InitialData make_initial_data(const InitialDataSpec& spec, const Grid1D& grid, double smallness_threshold = 0.5);

}  // namespace fracdisp::cli
