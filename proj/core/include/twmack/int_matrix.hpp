#pragma once

#include <string>
#include <vector>

namespace twmack {

/// Small dense integer matrix used for K0 maps and free Mackey values.
/// Maps act on column vectors; composition is the usual matrix product.
struct IntMat {
  int rows = 0, cols = 0;
  std::vector<long long> a;

  IntMat() = default;
  IntMat(int r, int c) : rows(r), cols(c), a(static_cast<size_t>(r) * c, 0) {}

  long long& at(int r, int c) { return a[static_cast<size_t>(r) * cols + c]; }
  long long at(int r, int c) const { return a[static_cast<size_t>(r) * cols + c]; }

  static IntMat identity(int n) {
    IntMat m(n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
  }
  IntMat mul(const IntMat& o) const {
    IntMat out(rows, o.cols);
    for (int i = 0; i < rows; ++i)
      for (int k = 0; k < cols; ++k) {
        long long v = at(i, k);
        if (v == 0) continue;
        for (int j = 0; j < o.cols; ++j) out.at(i, j) += v * o.at(k, j);
      }
    return out;
  }
  IntMat add(const IntMat& o) const {
    IntMat out(rows, cols);
    for (size_t i = 0; i < a.size(); ++i) out.a[i] = a[i] + o.a[i];
    return out;
  }
  std::vector<long long> apply(const std::vector<long long>& v) const {
    std::vector<long long> out(rows, 0);
    for (int i = 0; i < rows; ++i)
      for (int j = 0; j < cols; ++j) out[i] += at(i, j) * v[j];
    return out;
  }
  bool operator==(const IntMat& o) const {
    return rows == o.rows && cols == o.cols && a == o.a;
  }
  std::string show() const {
    std::string s = "[";
    for (int i = 0; i < rows; ++i) {
      s += i ? "; " : "";
      for (int j = 0; j < cols; ++j) s += (j ? " " : "") + std::to_string(at(i, j));
    }
    return s + "]";
  }
};

} // namespace twmack
