#pragma once

#include <memory>
#include <string>
#include <vector>

namespace twmack {

/// GF(p^k) with elements encoded as 0..p^k-1; the digits of an index base p
/// are the coefficients of the residue polynomial, so 0 and 1 are the ring
/// zero and one. The modulus is verified irreducible at construction via
/// gcd(m, x^{p^i} - x) for i < k.
class FiniteField {
public:
  int p = 0;
  int k = 0;
  std::vector<int> modulus; // length k+1, monic
  std::string label;

  int size() const { return size_; }
  int zero() const { return 0; }
  int one() const { return 1; }
  int add(int a, int b) const { return add_[a * size_ + b]; }
  int sub(int a, int b) const { return add_[a * size_ + neg_[b]]; }
  int neg(int a) const { return neg_[a]; }
  int mul(int a, int b) const { return mul_[a * size_ + b]; }
  int inv(int a) const; // throws on 0
  int pow(int a, long long e) const;
  int frobenius(int a) const { return frob_[a]; }
  bool is_prime_field() const { return k == 1; }

  std::vector<int> coeffs(int a) const;
  int from_coeffs(const std::vector<int>& c) const;

  static std::shared_ptr<const FiniteField> make(int p, int k);
  static std::shared_ptr<const FiniteField> make(int p, int k, std::vector<int> modulus);

private:
  friend std::shared_ptr<const FiniteField> build_field(int, int, std::vector<int>);
  int size_ = 0;
  std::vector<int> add_, mul_, neg_, inv_, frob_;
};

using FieldPtr = std::shared_ptr<const FiniteField>;

/// Lexicographically smallest monic irreducible of degree k over Z/p.
std::vector<int> default_modulus(int p, int k);

} // namespace twmack
