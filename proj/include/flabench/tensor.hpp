#pragma once

#include <array>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <limits>
#include <vector>

#include "flabench/errors.hpp"
#include "flabench/rng.hpp"

namespace flabench {

// Dense row-major rank-4 tensor (batch, channel, height, width).
// Operations return fresh tensors; a tensor handed out by an operation is
// treated as immutable and is safe to share read-only across threads.
template <typename T>
struct Tensor4T {
  int n = 0, c = 0, h = 0, w = 0;
  std::vector<T> data;

  Tensor4T() = default;

  Tensor4T(int n_, int c_, int h_, int w_, T fill = T(0)) : n(n_), c(c_), h(h_), w(w_) {
    if (n_ < 0 || c_ < 0 || h_ < 0 || w_ < 0)
      throw ShapeError("tensor dims must be non-negative");
    data.assign(checked_size(n_, c_, h_, w_), fill);
  }

  static size_t checked_size(int n_, int c_, int h_, int w_) {
    unsigned long long total = 1;
    for (unsigned long long d : {(unsigned long long)n_, (unsigned long long)c_,
                                 (unsigned long long)h_, (unsigned long long)w_}) {
      if (d != 0 && total > (1ull << 60) / d)
        throw std::length_error("tensor size overflows addressable range");
      total *= d;
    }
    return static_cast<size_t>(total);
  }

  size_t size() const { return data.size(); }
  std::array<int, 4> shape() const { return {n, c, h, w}; }
  bool same_shape(const Tensor4T& o) const {
    return n == o.n && c == o.c && h == o.h && w == o.w;
  }
  size_t plane_size() const { return static_cast<size_t>(h) * w; }

  T& at(int i, int j, int y, int x) {
    return data[((static_cast<size_t>(i) * c + j) * h + y) * w + x];
  }
  const T& at(int i, int j, int y, int x) const {
    return data[((static_cast<size_t>(i) * c + j) * h + y) * w + x];
  }

  T* plane(int i, int j) { return data.data() + (static_cast<size_t>(i) * c + j) * plane_size(); }
  const T* plane(int i, int j) const {
    return data.data() + (static_cast<size_t>(i) * c + j) * plane_size();
  }
};

using Tensor4 = Tensor4T<float>;
using Tensor4d = Tensor4T<double>;

template <typename T>
Tensor4T<T> alloc(int n, int c, int h, int w, T fill = T(0)) {
  return Tensor4T<T>(n, c, h, w, fill);
}

template <typename T, typename F>
Tensor4T<T> map_zip(const Tensor4T<T>& a, const Tensor4T<T>& b, F&& f) {
  if (!a.same_shape(b)) throw ShapeError("map_zip: shape mismatch");
  Tensor4T<T> out(a.n, a.c, a.h, a.w);
  for (size_t i = 0; i < a.size(); ++i) out.data[i] = f(a.data[i], b.data[i]);
  return out;
}

template <typename T>
Tensor4T<T> add(const Tensor4T<T>& a, const Tensor4T<T>& b) {
  return map_zip(a, b, [](T x, T y) { return x + y; });
}

template <typename T>
Tensor4T<T> sub(const Tensor4T<T>& a, const Tensor4T<T>& b) {
  return map_zip(a, b, [](T x, T y) { return x - y; });
}

template <typename T>
Tensor4T<T> mul(const Tensor4T<T>& a, const Tensor4T<T>& b) {
  return map_zip(a, b, [](T x, T y) { return x * y; });
}

template <typename T>
Tensor4T<T> gaussian(int n, int c, int h, int w, double mean, double stddev, Rng& rng) {
  if (stddev < 0) throw std::invalid_argument("gaussian: stddev must be >= 0");
  Tensor4T<T> out(n, c, h, w);
  for (auto& v : out.data) v = static_cast<T>(rng.normal(mean, stddev));
  return out;
}

template <typename T>
bool all_finite(const Tensor4T<T>& t) {
  for (T v : t.data)
    if (!std::isfinite(static_cast<double>(v))) return false;
  return true;
}

// Inner product accumulated in double (used by adjoint and gradient checks).
template <typename T>
double dot(const Tensor4T<T>& a, const Tensor4T<T>& b) {
  if (!a.same_shape(b)) throw ShapeError("dot: shape mismatch");
  double s = 0;
  for (size_t i = 0; i < a.size(); ++i)
    s += static_cast<double>(a.data[i]) * static_cast<double>(b.data[i]);
  return s;
}

inline Tensor4d widen(const Tensor4& t) {
  Tensor4d out(t.n, t.c, t.h, t.w);
  for (size_t i = 0; i < t.size(); ++i) out.data[i] = t.data[i];
  return out;
}

inline Tensor4 narrow(const Tensor4d& t) {
  Tensor4 out(t.n, t.c, t.h, t.w);
  for (size_t i = 0; i < t.size(); ++i) out.data[i] = static_cast<float>(t.data[i]);
  return out;
}

// Binary form: magic "T4F1", four little-endian u32 dims, raw f32 payload.
void write_tensor(std::ostream& os, const Tensor4& t);
Tensor4 read_tensor(std::istream& is);

}  // namespace flabench
