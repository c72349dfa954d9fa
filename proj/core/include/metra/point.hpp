#pragma once

#include <cstddef>
#include <initializer_list>
#include <limits>
#include <stdexcept>
#include <vector>

namespace metra {

// A point is either a coordinate vector (Euclidean / Klein ball models) or an
// index into the distance matrix of a finite space.
class Point {
 public:
  Point() = default;
  Point(std::initializer_list<double> cs) : coords_(cs) {}
  explicit Point(std::vector<double> cs) : coords_(std::move(cs)) {}

  static Point at_index(std::size_t i) {
    Point p;
    p.index_ = i;
    return p;
  }

  bool is_index() const { return index_ != npos; }

  std::size_t index() const {
    if (!is_index()) throw std::logic_error("point is not a finite-space index");
    return index_;
  }

  const std::vector<double>& coords() const {
    if (is_index()) throw std::logic_error("point is a finite-space index");
    return coords_;
  }

  std::size_t dim() const { return coords_.size(); }
  double operator[](std::size_t i) const { return coords_[i]; }

  bool operator==(const Point& o) const {
    return index_ == o.index_ && coords_ == o.coords_;
  }

 private:
  static constexpr std::size_t npos = std::numeric_limits<std::size_t>::max();
  std::vector<double> coords_;
  std::size_t index_ = npos;
};

using PointList = std::vector<Point>;

// Dense coordinate helpers shared by the continuous models.
namespace vec {

inline double dot(const std::vector<double>& a, const std::vector<double>& b) {
  double s = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

inline double norm2(const std::vector<double>& a) { return dot(a, a); }

inline std::vector<double> sub(const std::vector<double>& a, const std::vector<double>& b) {
  std::vector<double> r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
  return r;
}

inline std::vector<double> add(const std::vector<double>& a, const std::vector<double>& b) {
  std::vector<double> r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
  return r;
}

inline std::vector<double> scale(const std::vector<double>& a, double s) {
  std::vector<double> r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] * s;
  return r;
}

// a + s*(b - a)
inline std::vector<double> lerp(const std::vector<double>& a, const std::vector<double>& b, double s) {
  std::vector<double> r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + s * (b[i] - a[i]);
  return r;
}

}  // namespace vec
}  // namespace metra
