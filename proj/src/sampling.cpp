#include "cad/sampling.hpp"

#include "cad/errors.hpp"

namespace cad {

namespace {

constexpr int kPrimes[] = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47, 53};

double halton(std::int64_t index, int base) {
  double f = 1.0, r = 0.0;
  std::int64_t i = index;
  while (i > 0) {
    f /= base;
    r += f * static_cast<double>(i % base);
    i /= base;
  }
  return r;
}

}  // namespace

std::vector<std::vector<double>> halton_points(int count, int dim,
                                               const std::vector<std::array<double, 2>>& box,
                                               int skip) {
  if (dim <= 0 || static_cast<int>(box.size()) != dim)
    throw StructuralError("halton_points: box dimension mismatch");
  if (dim > static_cast<int>(std::size(kPrimes)))
    throw StructuralError("halton_points: dimension too large");
  std::vector<std::vector<double>> pts;
  pts.reserve(static_cast<std::size_t>(count));
  for (int k = 0; k < count; ++k) {
    std::vector<double> p(static_cast<std::size_t>(dim));
    for (int d = 0; d < dim; ++d) {
      double u = halton(k + skip + 1, kPrimes[d]);
      p[static_cast<std::size_t>(d)] = box[static_cast<std::size_t>(d)][0] +
                                       u * (box[static_cast<std::size_t>(d)][1] -
                                            box[static_cast<std::size_t>(d)][0]);
    }
    pts.push_back(std::move(p));
  }
  return pts;
}

std::vector<std::vector<double>> halton_cube(int count, int dim, double r, int skip) {
  std::vector<std::array<double, 2>> box(static_cast<std::size_t>(dim), {-r, r});
  return halton_points(count, dim, box, skip);
}

}  // namespace cad
