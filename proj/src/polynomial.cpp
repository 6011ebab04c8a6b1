#include "gorelab/polynomial.hpp"

#include <algorithm>
#include <stdexcept>

namespace gorelab::poly {

void trim(Poly& f) {
  while (!f.empty() && f.back() == 0) f.pop_back();
}

int degree(const Poly& f) { return static_cast<int>(f.size()) - 1; }

Poly mul(const Poly& a, const Poly& b, FieldSpec k) {
  if (a.empty() || b.empty()) return {};
  Poly out(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] = k.add(out[i + j], k.mul(a[i], b[j]));
  }
  trim(out);
  return out;
}

Poly sub(const Poly& a, const Poly& b, FieldSpec k) {
  Poly out(std::max(a.size(), b.size()), 0);
  for (std::size_t i = 0; i < out.size(); ++i) {
    const std::uint32_t x = i < a.size() ? a[i] : 0;
    const std::uint32_t y = i < b.size() ? b[i] : 0;
    out[i] = k.sub(x, y);
  }
  trim(out);
  return out;
}

namespace {

void divmod(const Poly& a, const Poly& b, FieldSpec k, Poly* q, Poly* r) {
  if (b.empty()) throw std::domain_error("polynomial division by zero");
  Poly rem = a;
  trim(rem);
  const std::uint32_t lead_inv = k.inv(b.back());
  const int db = degree(b);
  Poly quo(rem.size() >= b.size() ? rem.size() - b.size() + 1 : 0, 0);
  while (degree(rem) >= db) {
    const int shift = degree(rem) - db;
    const std::uint32_t c = k.mul(rem.back(), lead_inv);
    quo[static_cast<std::size_t>(shift)] = c;
    for (std::size_t j = 0; j < b.size(); ++j) {
      auto& slot = rem[static_cast<std::size_t>(shift) + j];
      slot = k.sub(slot, k.mul(c, b[j]));
    }
    trim(rem);
  }
  trim(quo);
  if (q) *q = std::move(quo);
  if (r) *r = std::move(rem);
}

}  // namespace

Poly mod(const Poly& a, const Poly& b, FieldSpec k) {
  Poly r;
  divmod(a, b, k, nullptr, &r);
  return r;
}

Poly quotient(const Poly& a, const Poly& b, FieldSpec k) {
  Poly q;
  divmod(a, b, k, &q, nullptr);
  return q;
}

Poly monic(const Poly& f, FieldSpec k) {
  if (f.empty()) return f;
  const std::uint32_t c = k.inv(f.back());
  Poly out = f;
  for (auto& x : out) x = k.mul(x, c);
  return out;
}

Poly gcd(Poly a, Poly b, FieldSpec k) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    Poly r = mod(a, b, k);
    a = std::move(b);
    b = std::move(r);
  }
  return monic(a, k);
}

Poly powmod(const Poly& base, std::uint64_t e, const Poly& m, FieldSpec k) {
  Poly result{1};
  result = mod(result, m, k);
  Poly b = mod(base, m, k);
  while (e > 0) {
    if (e & 1) result = mod(mul(result, b, k), m, k);
    b = mod(mul(b, b, k), m, k);
    e >>= 1;
  }
  return result;
}

std::uint32_t eval(const Poly& f, std::uint32_t x, FieldSpec k) {
  std::uint32_t acc = 0;
  for (auto it = f.rbegin(); it != f.rend(); ++it) acc = k.add(k.mul(acc, x), *it);
  return acc;
}

namespace {

void split_into(const Poly& f, FieldSpec k, std::vector<std::uint32_t>& out) {
  const int d = degree(f);
  if (d <= 0) return;
  if (d == 1) {
    // f = c1 x + c0
    out.push_back(k.mul(k.neg(f[0]), k.inv(f[1])));
    return;
  }
  const std::uint64_t half = (std::uint64_t{k.p()} - 1) / 2;
  for (std::uint32_t shift = 0; shift < k.p(); ++shift) {
    // gcd(f, (x + shift)^((p-1)/2) - 1) separates roots by quadratic character.
    Poly g = powmod(Poly{shift, 1}, half, f, k);
    g = sub(g, Poly{1}, k);
    Poly h = gcd(f, g, k);
    const int dh = degree(h);
    if (dh > 0 && dh < d) {
      split_into(h, k, out);
      split_into(quotient(f, h, k), k, out);
      return;
    }
  }
  throw std::runtime_error("split_roots: polynomial does not split into distinct linear factors");
}

}  // namespace

std::vector<std::uint32_t> split_roots(const Poly& f_in, FieldSpec k) {
  Poly f = f_in;
  trim(f);
  std::vector<std::uint32_t> roots;
  if (degree(f) <= 0) return roots;
  if (k.p() <= 4096) {
    for (std::uint32_t x = 0; x < k.p(); ++x)
      if (eval(f, x, k) == 0) roots.push_back(x);
    return roots;
  }
  split_into(f, k, roots);
  std::sort(roots.begin(), roots.end());
  return roots;
}

}  // namespace gorelab::poly
