// Copyright 2026 The fpcheb Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//   http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "fpcheb/poly.hpp"

#include <algorithm>
#include <charconv>
#include <string>

#include "fpcheb/errors.hpp"

namespace fpcheb {

namespace {

void require_same_modulus(const Poly& a, const Poly& b) {
  if (!(a.modulus() == b.modulus())) {
    throw PreconditionError("modulus mismatch: p=" + std::to_string(a.p()) +
                            " vs p=" + std::to_string(b.p()));
  }
}

// In-place remainder of r modulo g (g nonzero). When quotient is non-null the
// quotient coefficients are written there.
void reduce_in_place(std::vector<Residue>& r, const Poly& g,
                     std::vector<Residue>* quotient) {
  const PrimeModulus& F = g.modulus();
  const auto gc = g.coeffs();
  const int dg = g.degree();
  const bool monic = g.leading() == 1;
  const Residue inv_lc = monic ? 1 : F.inv(g.leading());
  int dr = static_cast<int>(r.size()) - 1;
  while (dr >= 0 && r[dr] == 0) --dr;
  if (quotient != nullptr) {
    quotient->assign(dr >= dg ? dr - dg + 1 : 0, 0);
  }
  u64 mults = 0;
  for (int i = dr; i >= dg; --i) {
    if (r[i] == 0) continue;
    Residue c = r[i];
    if (!monic) {
      c = F.mul(c, inv_lc);
      ++mults;
    }
    if (quotient != nullptr) (*quotient)[i - dg] = c;
    const int off = i - dg;
    for (int j = 0; j < dg; ++j) {
      if (gc[j] != 0) r[off + j] = F.sub(r[off + j], F.mul(c, gc[j]));
    }
    mults += static_cast<u64>(dg);
    r[i] = 0;
  }
  detail::tally_mults(mults);
  r.resize(static_cast<std::size_t>(std::min<int>(dg, static_cast<int>(r.size()))));
  while (!r.empty() && r.back() == 0) r.pop_back();
}

std::vector<Residue> mul_raw(const PrimeModulus& F, std::span<const Residue> a,
                             std::span<const Residue> b) {
  if (a.empty() || b.empty()) return {};
  std::vector<Residue> out(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) {
      out[i + j] = F.add(out[i + j], F.mul(a[i], b[j]));
    }
  }
  detail::tally_mults(static_cast<u64>(a.size()) * b.size());
  return out;
}

}  // namespace

Poly::Poly(PrimeModulus modulus, std::vector<Residue> coeffs)
    : modulus_(modulus), coeffs_(std::move(coeffs)) {
  for (Residue c : coeffs_) {
    if (c >= modulus_.value()) {
      throw PreconditionError("coefficient " + std::to_string(c) +
                              " is not a residue mod " +
                              std::to_string(modulus_.value()));
    }
  }
  trim();
}

Poly Poly::from_ints(PrimeModulus modulus, std::initializer_list<i64> coeffs) {
  std::vector<Residue> c;
  c.reserve(coeffs.size());
  for (i64 v : coeffs) c.push_back(modulus.from_signed(v));
  return Poly(modulus, std::move(c));
}

Poly Poly::constant(PrimeModulus modulus, Residue c) {
  return Poly(modulus, {modulus.reduce(c)});
}

Poly Poly::monomial(PrimeModulus modulus, int degree, Residue c) {
  if (degree < 0) throw PreconditionError("negative monomial degree");
  std::vector<Residue> v(static_cast<std::size_t>(degree) + 1, 0);
  v.back() = modulus.reduce(c);
  return Poly(modulus, std::move(v));
}

void Poly::trim() noexcept {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

Residue Poly::eval(Residue x) const noexcept {
  Residue acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    acc = modulus_.add(modulus_.mul(acc, x), *it);
  }
  return acc;
}

Poly Poly::derivative() const {
  if (coeffs_.size() <= 1) return Poly(modulus_);
  std::vector<Residue> d(coeffs_.size() - 1);
  for (std::size_t i = 1; i < coeffs_.size(); ++i) {
    d[i - 1] = modulus_.mul(coeffs_[i], modulus_.reduce(i));
  }
  return Poly(modulus_, std::move(d));
}

Poly Poly::monic() const {
  if (is_zero()) throw PreconditionError("monic scaling of the zero polynomial");
  if (leading() == 1) return *this;
  return scaled(modulus_.inv(leading()));
}

Poly Poly::scaled(Residue c) const {
  std::vector<Residue> v(coeffs_);
  for (Residue& x : v) x = modulus_.mul(x, c);
  detail::tally_mults(v.size());
  return Poly(modulus_, std::move(v));
}

Poly Poly::with_coeff(int i, Residue c) const {
  if (i < 0) throw PreconditionError("negative coefficient index");
  std::vector<Residue> v(coeffs_);
  if (static_cast<std::size_t>(i) >= v.size()) v.resize(i + 1, 0);
  v[i] = modulus_.reduce(c);
  return Poly(modulus_, std::move(v));
}

Poly Poly::shifted(Residue c) const {
  // Horner in the ring: acc = acc * (x + c) + a_i.
  const Residue s = modulus_.reduce(c);
  std::vector<Residue> acc;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    std::vector<Residue> next(acc.size() + 1, 0);
    for (std::size_t j = 0; j < acc.size(); ++j) {
      next[j + 1] = modulus_.add(next[j + 1], acc[j]);
      next[j] = modulus_.add(next[j], modulus_.mul(acc[j], s));
    }
    next[0] = modulus_.add(next[0], *it);
    acc = std::move(next);
  }
  return Poly(modulus_, std::move(acc));
}

Poly Poly::operator-() const {
  std::vector<Residue> v(coeffs_);
  for (Residue& x : v) x = modulus_.neg(x);
  return Poly(modulus_, std::move(v));
}

Poly operator+(const Poly& a, const Poly& b) {
  require_same_modulus(a, b);
  const PrimeModulus& F = a.modulus();
  std::vector<Residue> v(std::max(a.coeffs_.size(), b.coeffs_.size()), 0);
  for (std::size_t i = 0; i < v.size(); ++i) {
    v[i] = F.add(i < a.coeffs_.size() ? a.coeffs_[i] : 0,
                 i < b.coeffs_.size() ? b.coeffs_[i] : 0);
  }
  return Poly(F, std::move(v));
}

Poly operator-(const Poly& a, const Poly& b) {
  require_same_modulus(a, b);
  const PrimeModulus& F = a.modulus();
  std::vector<Residue> v(std::max(a.coeffs_.size(), b.coeffs_.size()), 0);
  for (std::size_t i = 0; i < v.size(); ++i) {
    v[i] = F.sub(i < a.coeffs_.size() ? a.coeffs_[i] : 0,
                 i < b.coeffs_.size() ? b.coeffs_[i] : 0);
  }
  return Poly(F, std::move(v));
}

Poly operator*(const Poly& a, const Poly& b) {
  require_same_modulus(a, b);
  return Poly(a.modulus(), mul_raw(a.modulus(), a.coeffs_, b.coeffs_));
}

std::string Poly::to_text() const {
  std::string out = "p:" + std::to_string(modulus_.value()) + ";";
  if (coeffs_.empty()) return out + "0";
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (i != 0) out += ',';
    out += std::to_string(coeffs_[i]);
  }
  return out;
}

Poly Poly::parse(std::string_view text) {
  auto fail = [&](const std::string& why) -> PreconditionError {
    return PreconditionError("bad polynomial text '" + std::string(text) +
                             "': " + why);
  };
  auto parse_u64 = [&](std::string_view s) {
    u64 v = 0;
    const char* end = s.data() + s.size();
    auto [ptr, ec] = std::from_chars(s.data(), end, v);
    if (s.empty() || ec != std::errc() || ptr != end) {
      throw fail("expected a decimal integer, got '" + std::string(s) + "'");
    }
    return v;
  };
  if (text.substr(0, 2) != "p:") throw fail("missing 'p:' prefix");
  const auto semi = text.find(';');
  if (semi == std::string_view::npos) throw fail("missing ';'");
  const PrimeModulus modulus(parse_u64(text.substr(2, semi - 2)));
  std::vector<Residue> coeffs;
  std::string_view rest = text.substr(semi + 1);
  if (rest.empty()) throw fail("no coefficients");
  while (true) {
    const auto comma = rest.find(',');
    const u64 c = parse_u64(rest.substr(0, comma));
    if (c >= modulus.value()) throw fail("coefficient out of range");
    coeffs.push_back(c);
    if (comma == std::string_view::npos) break;
    rest = rest.substr(comma + 1);
  }
  return Poly(modulus, std::move(coeffs));
}

std::pair<Poly, Poly> divrem(const Poly& f, const Poly& g) {
  require_same_modulus(f, g);
  if (g.is_zero()) throw PreconditionError("division by the zero polynomial");
  std::vector<Residue> r(f.coeffs().begin(), f.coeffs().end());
  std::vector<Residue> q;
  reduce_in_place(r, g, &q);
  return {Poly(f.modulus(), std::move(q)), Poly(f.modulus(), std::move(r))};
}

Poly rem(const Poly& f, const Poly& g) {
  require_same_modulus(f, g);
  if (g.is_zero()) throw PreconditionError("division by the zero polynomial");
  if (f.degree() < g.degree()) return f;
  std::vector<Residue> r(f.coeffs().begin(), f.coeffs().end());
  reduce_in_place(r, g, nullptr);
  return Poly(f.modulus(), std::move(r));
}

Poly exact_quotient(const Poly& f, const Poly& g) {
  auto [q, r] = divrem(f, g);
  if (!r.is_zero()) {
    throw InvariantViolation("exact division", g.to_text() + " does not divide " +
                                                   f.to_text());
  }
  return q;
}

Poly gcd(const Poly& f, const Poly& g) {
  require_same_modulus(f, g);
  if (f.is_zero() && g.is_zero()) throw PreconditionError("gcd(0, 0) is undefined");
  Poly a = f;
  Poly b = g;
  while (!b.is_zero()) {
    Poly r = rem(a, b);
    a = std::move(b);
    b = std::move(r);
  }
  return a.monic();
}

Bezout xgcd(const Poly& f, const Poly& g) {
  require_same_modulus(f, g);
  if (f.is_zero() && g.is_zero()) throw PreconditionError("gcd(0, 0) is undefined");
  const PrimeModulus& F = f.modulus();
  Poly r0 = f, r1 = g;
  Poly s0 = Poly::constant(F, 1), s1(F);
  Poly t0(F), t1 = Poly::constant(F, 1);
  while (!r1.is_zero()) {
    auto [q, r] = divrem(r0, r1);
    r0 = std::move(r1);
    r1 = std::move(r);
    Poly s2 = s0 - q * s1;
    Poly t2 = t0 - q * t1;
    s0 = std::move(s1);
    s1 = std::move(s2);
    t0 = std::move(t1);
    t1 = std::move(t2);
  }
  const Residue inv = F.inv(r0.leading());
  return {r0.scaled(inv), s0.scaled(inv), t0.scaled(inv)};
}

Poly invert_mod(const Poly& a, const Poly& m) {
  Bezout b = xgcd(rem(a, m), m);
  if (!b.gcd.is_one()) throw PreconditionError("polynomial is not invertible modulo m");
  return rem(b.s, m);
}

Poly mulmod(const Poly& a, const Poly& b, const Poly& m) {
  require_same_modulus(a, b);
  require_same_modulus(a, m);
  std::vector<Residue> prod = mul_raw(a.modulus(), a.coeffs(), b.coeffs());
  reduce_in_place(prod, m, nullptr);
  return Poly(a.modulus(), std::move(prod));
}

Poly powmod(const Poly& a, u64 exponent, const Poly& m) {
  Poly result = rem(Poly::constant(a.modulus(), 1), m);
  Poly base = rem(a, m);
  while (exponent != 0) {
    if (exponent & 1U) result = mulmod(result, base, m);
    exponent >>= 1U;
    if (exponent != 0) base = mulmod(base, base, m);
  }
  return result;
}

Poly x_pow_mod(u64 exponent, const Poly& m) {
  if (m.is_zero()) throw PreconditionError("reduction modulo the zero polynomial");
  const PrimeModulus& F = m.modulus();
  std::vector<Residue> r{1};
  reduce_in_place(r, m, nullptr);
  if (exponent == 0) return Poly(F, std::move(r));
  int top = 63;
  while (((exponent >> top) & 1U) == 0) --top;
  for (int bit = top; bit >= 0; --bit) {
    r = mul_raw(F, r, r);
    reduce_in_place(r, m, nullptr);
    if ((exponent >> bit) & 1U) {
      r.insert(r.begin(), 0);
      reduce_in_place(r, m, nullptr);
    }
  }
  return Poly(F, std::move(r));
}

Poly frobenius_power(const Poly& f, int k) {
  if (!f.is_monic() || f.degree() < 1) {
    throw PreconditionError("frobenius_power needs a monic nonconstant modulus");
  }
  if (k < 1) throw PreconditionError("frobenius_power needs k >= 1");
  Poly h = x_pow_mod(f.p(), f);
  for (int i = 1; i < k; ++i) h = powmod(h, f.p(), f);
  return h;
}

FrobeniusMap::FrobeniusMap(const Poly& f, Poly x_to_p)
    : modulus_poly_(f), x_to_p_(std::move(x_to_p)) {
  if (!f.is_monic() || f.degree() < 1) {
    throw PreconditionError("FrobeniusMap needs a monic nonconstant modulus");
  }
  const int d = f.degree();
  rows_.reserve(d);
  rows_.push_back(rem(Poly::constant(f.modulus(), 1), f));
  if (d >= 2) rows_.push_back(x_to_p_);
  for (int j = 2; j < d; ++j) rows_.push_back(mulmod(rows_[j - 1], rows_[1], f));
}

FrobeniusMap::FrobeniusMap(const Poly& f)
    : FrobeniusMap(f, f.degree() >= 1 ? x_pow_mod(f.p(), f) : Poly(f.modulus())) {}

Poly FrobeniusMap::apply(const Poly& h) const {
  const PrimeModulus& F = modulus_poly_.modulus();
  const Poly hr = rem(h, modulus_poly_);
  const std::size_t d = static_cast<std::size_t>(modulus_poly_.degree());
  std::vector<Residue> out(d, 0);
  u64 mults = 0;
  for (std::size_t j = 0; j < hr.coeffs().size(); ++j) {
    const Residue c = hr.coeffs()[j];
    if (c == 0) continue;
    const auto row = rows_[j].coeffs();
    for (std::size_t i = 0; i < row.size(); ++i) {
      out[i] = F.add(out[i], F.mul(c, row[i]));
    }
    mults += row.size();
  }
  detail::tally_mults(mults);
  return Poly(F, std::move(out));
}

Residue resultant(const Poly& f, const Poly& g) {
  require_same_modulus(f, g);
  if (f.is_zero() || g.is_zero()) {
    throw PreconditionError("resultant with the zero polynomial");
  }
  const PrimeModulus& F = f.modulus();
  Residue acc = 1;
  Poly a = f;
  Poly b = g;
  while (true) {
    const int da = a.degree();
    const int db = b.degree();
    if (da == 0) return F.mul(acc, F.pow(a.leading(), static_cast<u64>(db)));
    if (db == 0) return F.mul(acc, F.pow(b.leading(), static_cast<u64>(da)));
    // Res(a, b) = (-1)^(da db) Res(b, a) and
    // Res(b, a) = lc(b)^(da - deg r) Res(b, r) with r = a mod b.
    Poly r = rem(a, b);
    if (r.is_zero()) return 0;
    Residue factor = F.pow(b.leading(), static_cast<u64>(da - r.degree()));
    if ((static_cast<u64>(da) * static_cast<u64>(db)) & 1U) factor = F.neg(factor);
    acc = F.mul(acc, factor);
    a = std::move(b);
    b = std::move(r);
  }
}

Residue discriminant(const Poly& f) {
  const int d = f.degree();
  if (d < 2) throw PreconditionError("discriminant needs degree >= 2");
  const PrimeModulus& F = f.modulus();
  const Poly df = f.derivative();
  if (df.is_zero()) return 0;
  Residue value = resultant(f, df);
  const u64 pairs = static_cast<u64>(d) * static_cast<u64>(d - 1) / 2;
  if (pairs & 1U) value = F.neg(value);
  // Res(f, f') = lc^(d + deg f') (-1)^(d(d-1)/2) prod_{i<j}(a_i - a_j)^2.
  const int lc_exponent = d - 2 - df.degree();
  if (lc_exponent >= 0) {
    value = F.mul(value, F.pow(f.leading(), static_cast<u64>(lc_exponent)));
  } else {
    value = F.mul(value, F.pow(F.inv(f.leading()), static_cast<u64>(-lc_exponent)));
  }
  return value;
}

bool is_squarefree(const Poly& f) {
  if (f.is_zero()) throw PreconditionError("squarefree test of the zero polynomial");
  if (f.degree() <= 0) return true;
  const Poly df = f.derivative();
  if (df.is_zero()) return false;
  return gcd(f, df).degree() == 0;
}

Poly characteristic_polynomial(const Poly& a, const Poly& m) {
  require_same_modulus(a, m);
  if (m.degree() < 1) throw PreconditionError("characteristic polynomial modulo a constant");
  const PrimeModulus& F = m.modulus();
  const int n = m.degree();
  // H[i][j]: coefficient of x^i in a * x^j mod m.
  std::vector<std::vector<Residue>> H(n, std::vector<Residue>(n, 0));
  Poly col = rem(a, m);
  const Poly x = Poly::monomial(F, 1);
  for (int j = 0; j < n; ++j) {
    for (int i = 0; i < n; ++i) H[i][j] = col.coeff(i);
    if (j + 1 < n) col = mulmod(col, x, m);
  }
  // Reduce to upper Hessenberg form by similarity transforms.
  for (int c = 0; c + 2 < n; ++c) {
    int pivot = -1;
    for (int i = c + 1; i < n; ++i) {
      if (H[i][c] != 0) {
        pivot = i;
        break;
      }
    }
    if (pivot < 0) continue;
    if (pivot != c + 1) {
      std::swap(H[pivot], H[c + 1]);
      for (int k = 0; k < n; ++k) std::swap(H[k][pivot], H[k][c + 1]);
    }
    const Residue tinv = F.inv(H[c + 1][c]);
    for (int j = c + 2; j < n; ++j) {
      const Residue u = F.mul(H[j][c], tinv);
      if (u == 0) continue;
      for (int k = 0; k < n; ++k) H[j][k] = F.sub(H[j][k], F.mul(u, H[c + 1][k]));
      for (int k = 0; k < n; ++k) H[k][c + 1] = F.add(H[k][c + 1], F.mul(u, H[k][j]));
    }
  }
  // Charpoly recurrence on the Hessenberg matrix (1-based indices in h()).
  auto h = [&](int i, int j) { return H[i - 1][j - 1]; };
  std::vector<Poly> chars;
  chars.reserve(n + 1);
  chars.push_back(Poly::constant(F, 1));
  for (int k = 1; k <= n; ++k) {
    Poly pk = Poly(F, {F.neg(h(k, k)), 1}) * chars[k - 1];
    Residue t = 1;
    for (int i = 1; i < k; ++i) {
      t = F.mul(t, h(k - i + 1, k - i));
      const Residue coef = F.mul(t, h(k - i, k));
      if (coef != 0) pk = pk - chars[k - i - 1].scaled(coef);
    }
    chars.push_back(std::move(pk));
  }
  return chars[n];
}

}  // namespace fpcheb
