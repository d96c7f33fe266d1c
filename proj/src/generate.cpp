#include "boxcube/generate.hpp"

#include <random>

namespace boxcube {

namespace {

std::vector<Interval> draw_intervals(int n, std::mt19937_64& rng) {
  std::uniform_int_distribution<std::int64_t> endpoint(1, 2 * std::int64_t{n});
  std::vector<Interval> out;
  out.reserve(static_cast<std::size_t>(n));
  for (int v = 0; v < n; ++v) {
    std::int64_t a = endpoint(rng);
    std::int64_t b = endpoint(rng);
    if (a > b) std::swap(a, b);
    out.push_back({Rational(a), Rational(b)});
  }
  return out;
}

}  // namespace

IntervalRepresentation random_interval_rep(int n, std::uint64_t seed) {
  if (n < 1) throw std::invalid_argument("random_interval_rep: n must be at least 1");
  std::mt19937_64 rng(seed);
  return IntervalRepresentation(draw_intervals(n, rng));
}

BoxRepresentation random_box_rep(int n, int dims, std::uint64_t seed) {
  if (n < 1 || dims < 0) throw std::invalid_argument("random_box_rep: bad size");
  std::mt19937_64 rng(seed);
  std::vector<std::vector<Interval>> coords;
  for (int p = 0; p < dims; ++p) coords.push_back(draw_intervals(n, rng));
  std::vector<Interval> boxes;
  for (int v = 0; v < n; ++v)
    for (int p = 0; p < dims; ++p) boxes.push_back(coords[p][static_cast<std::size_t>(v)]);
  return BoxRepresentation(n, dims, std::move(boxes));
}

IntervalRepresentation star_interval_rep(int n) {
  if (n < 1) throw std::invalid_argument("star_interval_rep: n must be at least 1");
  std::vector<Interval> out{{Rational(0), Rational(n)}};
  for (int v = 1; v < n; ++v) out.push_back({Rational(v), Rational(v)});
  return IntervalRepresentation(std::move(out));
}

IntervalRepresentation path_interval_rep(int n) {
  std::vector<Interval> out;
  for (int v = 0; v < n; ++v) out.push_back({Rational(v), Rational(v + 1)});
  return IntervalRepresentation(std::move(out));
}

IntervalRepresentation complete_interval_rep(int n) {
  return IntervalRepresentation(std::vector<Interval>(static_cast<std::size_t>(n), {Rational(0), Rational(1)}));
}

}  // namespace boxcube
