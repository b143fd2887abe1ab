#pragma once

#include <array>
#include <cstdint>
#include <vector>

namespace cad {

// Deterministic low-discrepancy points (Halton sequence, one prime base per
// coordinate). `skip` offsets into the sequence so independent sweeps can use
// disjoint point sets with the same generator.
std::vector<std::vector<double>> halton_points(int count, int dim,
                                               const std::vector<std::array<double, 2>>& box,
                                               int skip = 0);

// Points in the centered cube [-r, r]^dim.
std::vector<std::vector<double>> halton_cube(int count, int dim, double r, int skip = 0);

}  // namespace cad
