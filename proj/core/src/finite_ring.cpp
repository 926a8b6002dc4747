#include "twmack/finite_ring.hpp"

#include "twmack/errors.hpp"

namespace twmack {

namespace {

void validate_ring(const FiniteRing& r) {
  const int n = r.size;
  if (n < 1) throw validation_error("ring must be nonempty");
  auto in_range = [n](int x) { return x >= 0 && x < n; };
  if (!in_range(r.zero) || !in_range(r.one)) throw validation_error("ring constants out of range");
  for (int a = 0; a < n; ++a) {
    if (!in_range(r.neg[a])) throw validation_error("ring negation out of range");
    if (r.plus(a, r.neg[a]) != r.zero) throw validation_error("a + (-a) != 0 in ring");
    if (r.plus(a, r.zero) != a) throw validation_error("additive identity fails");
    if (r.times(a, r.one) != a || r.times(r.one, a) != a)
      throw validation_error("multiplicative identity fails");
    for (int b = 0; b < n; ++b) {
      if (r.plus(a, b) != r.plus(b, a)) throw validation_error("addition not commutative");
      if (r.times(a, b) != r.times(b, a)) throw validation_error("multiplication not commutative");
      for (int c = 0; c < n; ++c) {
        if (r.plus(r.plus(a, b), c) != r.plus(a, r.plus(b, c)))
          throw validation_error("addition not associative");
        if (r.times(r.times(a, b), c) != r.times(a, r.times(b, c)))
          throw validation_error("multiplication not associative");
        if (r.times(a, r.plus(b, c)) != r.plus(r.times(a, b), r.times(a, c)))
          throw validation_error("distributivity fails");
      }
    }
  }
}

} // namespace

int FiniteRing::nat(int n) const {
  if (n < 0) throw validation_error("nat expects a nonnegative count");
  int out = zero;
  for (int i = 0; i < n; ++i) out = plus(out, one);
  return out;
}

std::optional<int> FiniteRing::unit_inverse(int r) const {
  for (int s = 0; s < size; ++s)
    if (times(r, s) == one) return s;
  return std::nullopt;
}

RingPtr ring_from_field(FieldPtr f) {
  auto r = std::make_shared<FiniteRing>();
  const int n = f->size();
  r->size = n;
  r->zero = 0;
  r->one = 1;
  r->add.assign(n, std::vector<int>(n));
  r->mul.assign(n, std::vector<int>(n));
  r->neg.resize(n);
  for (int a = 0; a < n; ++a) {
    r->neg[a] = f->neg(a);
    for (int b = 0; b < n; ++b) {
      r->add[a][b] = f->add(a, b);
      r->mul[a][b] = f->mul(a, b);
    }
  }
  r->label = f->label;
  r->field = std::move(f);
  validate_ring(*r);
  return r;
}

RingPtr zmod_ring(int n) {
  if (n < 1) throw validation_error("Z/n requires n >= 1");
  auto r = std::make_shared<FiniteRing>();
  r->size = n;
  r->zero = 0;
  r->one = n == 1 ? 0 : 1;
  r->add.assign(n, std::vector<int>(n));
  r->mul.assign(n, std::vector<int>(n));
  r->neg.resize(n);
  for (int a = 0; a < n; ++a) {
    r->neg[a] = (n - a) % n;
    for (int b = 0; b < n; ++b) {
      r->add[a][b] = (a + b) % n;
      r->mul[a][b] = (a * b) % n;
    }
  }
  r->label = "Z/" + std::to_string(n);
  validate_ring(*r);
  return r;
}

RingPtr product_ring(const RingPtr& a, const RingPtr& b) {
  auto r = std::make_shared<FiniteRing>();
  const int na = a->size, nb = b->size, n = na * nb;
  auto pack = [nb](int x, int y) { return x * nb + y; };
  r->size = n;
  r->zero = pack(a->zero, b->zero);
  r->one = pack(a->one, b->one);
  r->add.assign(n, std::vector<int>(n));
  r->mul.assign(n, std::vector<int>(n));
  r->neg.resize(n);
  for (int x1 = 0; x1 < na; ++x1)
    for (int y1 = 0; y1 < nb; ++y1) {
      int i = pack(x1, y1);
      r->neg[i] = pack(a->neg[x1], b->neg[y1]);
      for (int x2 = 0; x2 < na; ++x2)
        for (int y2 = 0; y2 < nb; ++y2) {
          int j = pack(x2, y2);
          r->add[i][j] = pack(a->plus(x1, x2), b->plus(y1, y2));
          r->mul[i][j] = pack(a->times(x1, x2), b->times(y1, y2));
        }
    }
  r->label = a->label + "x" + b->label;
  validate_ring(*r);
  return r;
}

} // namespace twmack
