#include "twmack/finite_field.hpp"

#include <algorithm>

#include "twmack/errors.hpp"

namespace twmack {

namespace {

using Poly = std::vector<int>; // coefficients, low degree first; no trailing zeros

int degree(const Poly& f) { return static_cast<int>(f.size()) - 1; }

void trim(Poly& f) {
  while (!f.empty() && f.back() == 0) f.pop_back();
}

Poly poly_mod(Poly f, const Poly& m, int p) {
  trim(f);
  while (degree(f) >= degree(m)) {
    int shift = degree(f) - degree(m);
    int lead = f.back(); // m is monic
    for (int i = 0; i <= degree(m); ++i) {
      int idx = i + shift;
      f[idx] = ((f[idx] - lead * m[i]) % p + p) % p;
    }
    trim(f);
  }
  return f;
}

Poly poly_mulmod(const Poly& a, const Poly& b, const Poly& m, int p) {
  if (a.empty() || b.empty()) return {};
  Poly c(a.size() + b.size() - 1, 0);
  for (size_t i = 0; i < a.size(); ++i)
    for (size_t j = 0; j < b.size(); ++j)
      c[i + j] = (c[i + j] + a[i] * b[j]) % p;
  return poly_mod(std::move(c), m, p);
}

Poly poly_powmod(Poly base, long long e, const Poly& m, int p) {
  Poly result{1};
  base = poly_mod(std::move(base), m, p);
  while (e > 0) {
    if (e & 1) result = poly_mulmod(result, base, m, p);
    base = poly_mulmod(base, base, m, p);
    e >>= 1;
  }
  return result;
}

Poly poly_gcd(Poly a, Poly b, int p) {
  auto inv_mod_p = [p](int x) {
    x = ((x % p) + p) % p;
    for (int i = 1; i < p; ++i)
      if (i * x % p == 1) return i;
    throw validation_error("characteristic is not prime");
  };
  trim(a);
  trim(b);
  while (!b.empty()) {
    // a mod b with b made monic on the fly
    int lead_inv = inv_mod_p(b.back());
    Poly bm = b;
    for (int& c : bm) c = c * lead_inv % p;
    a = poly_mod(std::move(a), bm, p);
    std::swap(a, b);
  }
  return a;
}

bool is_irreducible(const Poly& m, int p) {
  const int k = degree(m);
  if (k < 1) return false;
  // x^{p^k} == x (mod m), and gcd(m, x^{p^i} - x) trivial for 1 <= i < k
  Poly x{0, 1};
  Poly xp = x;
  long long q = 1;
  for (int i = 1; i <= k; ++i) {
    q *= p;
    xp = poly_powmod(x, q, m, p); // x^{p^i} mod m, recomputed from scratch for clarity
    Poly diff = xp;
    if (diff.size() < 2) diff.resize(2, 0);
    diff[1] = ((diff[1] - 1) % p + p) % p;
    trim(diff);
    if (i < k) {
      Poly g = poly_gcd(m, diff, p);
      if (degree(g) >= 1) return false;
    } else {
      if (!diff.empty()) return false;
    }
  }
  return true;
}

bool is_prime(int p) {
  if (p < 2) return false;
  for (int d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

} // namespace

std::vector<int> default_modulus(int p, int k) {
  if (k == 1) return {0, 1}; // x
  long long count = 1;
  for (int i = 0; i < k; ++i) count *= p;
  for (long long low = 0; low < count; ++low) {
    Poly m(k + 1, 0);
    long long v = low;
    for (int i = 0; i < k; ++i) {
      m[i] = static_cast<int>(v % p);
      v /= p;
    }
    m[k] = 1;
    if (is_irreducible(m, p)) return m;
  }
  throw check_error("no irreducible polynomial found"); // unreachable for prime p
}

std::shared_ptr<const FiniteField> build_field(int p, int k, std::vector<int> modulus) {
  if (!is_prime(p)) throw validation_error("field characteristic must be prime");
  if (k < 1) throw validation_error("field degree must be positive");
  long long sz = 1;
  for (int i = 0; i < k; ++i) {
    sz *= p;
    if (sz > 1024) throw validation_error("field is too large for table-based arithmetic");
  }
  if (static_cast<int>(modulus.size()) != k + 1 || modulus[k] != 1)
    throw validation_error("modulus must be monic of degree k");
  for (int& c : modulus) c = ((c % p) + p) % p;
  if (k > 1 && !is_irreducible(modulus, p))
    throw validation_error("modulus polynomial is reducible");

  auto f = std::make_shared<FiniteField>();
  f->p = p;
  f->k = k;
  f->modulus = modulus;
  const int n = static_cast<int>(sz);
  f->size_ = n;
  f->label = "GF(" + std::to_string(n) + ")";

  auto to_poly = [&](int a) {
    Poly c(k);
    for (int i = 0; i < k; ++i) {
      c[i] = a % p;
      a /= p;
    }
    trim(c);
    return c;
  };
  auto from_poly = [&](const Poly& c) {
    int a = 0, w = 1;
    for (size_t i = 0; i < c.size(); ++i) {
      a += c[i] * w;
      w *= p;
    }
    return a;
  };

  f->add_.resize(static_cast<size_t>(n) * n);
  f->mul_.resize(static_cast<size_t>(n) * n);
  f->neg_.resize(n);
  f->inv_.assign(n, -1);
  f->frob_.resize(n);
  for (int a = 0; a < n; ++a) {
    Poly pa = to_poly(a);
    Poly na(pa.size());
    for (size_t i = 0; i < pa.size(); ++i) na[i] = (p - pa[i]) % p;
    trim(na);
    f->neg_[a] = from_poly(na);
    for (int b = 0; b < n; ++b) {
      Poly pb = to_poly(b);
      Poly s(std::max(pa.size(), pb.size()), 0);
      for (size_t i = 0; i < s.size(); ++i) {
        int x = (i < pa.size() ? pa[i] : 0) + (i < pb.size() ? pb[i] : 0);
        s[i] = x % p;
      }
      trim(s);
      f->add_[static_cast<size_t>(a) * n + b] = from_poly(s);
      f->mul_[static_cast<size_t>(a) * n + b] = from_poly(poly_mulmod(pa, pb, modulus, p));
    }
  }
  for (int a = 1; a < n; ++a)
    for (int b = 1; b < n; ++b)
      if (f->mul_[static_cast<size_t>(a) * n + b] == 1) {
        f->inv_[a] = b;
        break;
      }
  for (int a = 1; a < n; ++a)
    if (f->inv_[a] < 0) throw check_error("nonzero element without inverse; modulus reducible?");
  for (int a = 0; a < n; ++a) {
    int r = 1;
    for (int i = 0; i < p; ++i) r = f->mul_[static_cast<size_t>(r) * n + a];
    // r = a^p computed as 1*a*...*a
    f->frob_[a] = r;
  }
  return f;
}

int FiniteField::inv(int a) const {
  if (a == 0) throw validation_error("division by zero in " + label);
  return inv_[a];
}

int FiniteField::pow(int a, long long e) const {
  if (e < 0) {
    a = inv(a);
    e = -e;
  }
  int r = 1, base = a;
  while (e > 0) {
    if (e & 1) r = mul(r, base);
    base = mul(base, base);
    e >>= 1;
  }
  return r;
}

std::vector<int> FiniteField::coeffs(int a) const {
  std::vector<int> c(k);
  for (int i = 0; i < k; ++i) {
    c[i] = a % p;
    a /= p;
  }
  return c;
}

int FiniteField::from_coeffs(const std::vector<int>& c) const {
  if (static_cast<int>(c.size()) > k) throw validation_error("coefficient vector too long");
  int a = 0, w = 1;
  for (size_t i = 0; i < c.size(); ++i) {
    a += (((c[i] % p) + p) % p) * w;
    w *= p;
  }
  return a;
}

std::shared_ptr<const FiniteField> FiniteField::make(int p, int k) {
  return build_field(p, k, default_modulus(p, k));
}

std::shared_ptr<const FiniteField> FiniteField::make(int p, int k, std::vector<int> modulus) {
  return build_field(p, k, std::move(modulus));
}

} // namespace twmack
