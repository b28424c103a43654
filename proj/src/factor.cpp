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

#include "fpcheb/factor.hpp"

#include <algorithm>
#include <charconv>
#include <optional>
#include <random>

#include "fpcheb/errors.hpp"

namespace fpcheb {

namespace {

void require_monic(const Poly& f, const char* op) {
  if (!f.is_monic()) {
    throw PreconditionError(std::string(op) + " needs a monic polynomial, got " +
                            f.to_text());
  }
}

std::vector<int> prime_divisors(int n) {
  std::vector<int> out;
  for (int q = 2; q * q <= n; ++q) {
    if (n % q == 0) {
      out.push_back(q);
      while (n % q == 0) n /= q;
    }
  }
  if (n > 1) out.push_back(n);
  return out;
}

Poly pth_root(const Poly& f) {
  const auto c = f.coeffs();
  const u64 p = f.p();
  std::vector<Residue> out;
  for (std::size_t i = 0; i < c.size(); i += p) out.push_back(c[i]);
  return Poly(f.modulus(), std::move(out));
}

void squarefree_rec(const Poly& f, int multiplicity,
                    std::vector<std::pair<Poly, int>>& out) {
  const int p = static_cast<int>(std::min<u64>(f.p(), 1U << 30U));
  const Poly df = f.derivative();
  if (df.is_zero()) {
    squarefree_rec(pth_root(f), multiplicity * p, out);
    return;
  }
  Poly c = gcd(f, df);
  Poly w = exact_quotient(f, c);
  int i = 1;
  while (w.degree() > 0) {
    Poly y = gcd(w, c);
    Poly fac = exact_quotient(w, y);
    if (fac.degree() > 0) out.emplace_back(std::move(fac), i * multiplicity);
    c = exact_quotient(c, y);
    w = std::move(y);
    ++i;
  }
  if (c.degree() > 0) squarefree_rec(pth_root(c), multiplicity * p, out);
}

u64 splitmix64(u64& state) {
  u64 z = (state += 0x9E3779B97F4A7C15ULL);
  z = (z ^ (z >> 30U)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27U)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31U);
}

u64 derive_seed(const Poly& f, u64 seed) {
  u64 state = seed;
  u64 h = splitmix64(state) ^ f.p();
  for (Residue c : f.coeffs()) {
    state ^= h + c;
    h = splitmix64(state);
  }
  return h;
}

void equal_degree_split(const Poly& g, int k, std::mt19937_64& rng,
                        std::vector<Poly>& out) {
  if (g.degree() == k) {
    out.push_back(g);
    return;
  }
  const PrimeModulus& F = g.modulus();
  const FrobeniusMap frob(g);
  std::uniform_int_distribution<u64> coeff(0, F.value() - 1);
  const Poly one = Poly::constant(F, 1);
  while (true) {
    std::vector<Residue> c(static_cast<std::size_t>(g.degree()));
    for (Residue& v : c) v = coeff(rng);
    const Poly a(F, std::move(c));
    if (a.degree() < 1) continue;
    // a^((p^k - 1)/2) = N(a)^((p - 1)/2) with N(a) = prod_{i<k} a^(p^i).
    Poly norm = a;
    Poly conj = a;
    for (int i = 1; i < k; ++i) {
      conj = frob.apply(conj);
      norm = mulmod(norm, conj, g);
    }
    const Poly b = powmod(norm, (F.value() - 1) / 2, g);
    const Poly candidate = gcd(b - one, g);
    if (candidate.degree() > 0 && candidate.degree() < g.degree()) {
      equal_degree_split(candidate, k, rng, out);
      equal_degree_split(exact_quotient(g, candidate), k, rng, out);
      return;
    }
  }
}

bool poly_less(const Poly& a, const Poly& b) {
  if (a.degree() != b.degree()) return a.degree() < b.degree();
  const auto ca = a.coeffs();
  const auto cb = b.coeffs();
  return std::lexicographical_compare(ca.rbegin(), ca.rend(), cb.rbegin(), cb.rend());
}

u64 binomial(u64 n, u64 k) {
  u64 r = 1;
  for (u64 i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

}  // namespace

FactorizationType::FactorizationType(std::vector<int> degrees)
    : degrees_(std::move(degrees)) {
  for (int d : degrees_) {
    if (d < 1) throw PreconditionError("factorization type parts must be positive");
  }
  std::sort(degrees_.begin(), degrees_.end());
}

int FactorizationType::total() const noexcept {
  int s = 0;
  for (int d : degrees_) s += d;
  return s;
}

std::string FactorizationType::label() const {
  std::string out;
  for (std::size_t i = 0; i < degrees_.size(); ++i) {
    if (i != 0) out += ',';
    out += std::to_string(degrees_[i]);
  }
  return out;
}

FactorizationType FactorizationType::parse(std::string_view text) {
  std::vector<int> parts;
  while (!text.empty()) {
    const auto comma = text.find(',');
    const std::string_view tok = text.substr(0, comma);
    int v = 0;
    auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
    if (tok.empty() || ec != std::errc() || ptr != tok.data() + tok.size()) {
      throw PreconditionError("bad partition part '" + std::string(tok) + "'");
    }
    parts.push_back(v);
    if (comma == std::string_view::npos) break;
    text = text.substr(comma + 1);
  }
  if (parts.empty()) throw PreconditionError("empty partition");
  return FactorizationType(std::move(parts));
}

Poly Factorization::product(const PrimeModulus& modulus) const {
  Poly acc = Poly::constant(modulus, unit);
  for (const auto& [factor, e] : factors) {
    for (int i = 0; i < e; ++i) acc = acc * factor;
  }
  return acc;
}

std::vector<std::pair<Poly, int>> squarefree_decomposition(const Poly& f) {
  require_monic(f, "squarefree_decomposition");
  std::vector<std::pair<Poly, int>> out;
  if (f.degree() < 1) return out;
  squarefree_rec(f, 1, out);
  std::sort(out.begin(), out.end(),
            [](const auto& a, const auto& b) { return a.second < b.second; });
  return out;
}

std::vector<std::pair<Poly, int>> distinct_degree_factorization(const Poly& f) {
  require_monic(f, "distinct_degree_factorization");
  std::vector<std::pair<Poly, int>> out;
  if (f.degree() < 1) return out;
  const Poly x = Poly::monomial(f.modulus(), 1);
  Poly rest = f;
  const Poly x_to_p = x_pow_mod(f.p(), f);
  std::optional<FrobeniusMap> frob;
  Poly h = x_to_p;
  for (int k = 1; 2 * k <= rest.degree(); ++k) {
    if (k > 1) {
      if (!frob) frob.emplace(f, x_to_p);
      h = frob->apply(h);
    }
    Poly g = gcd(h - x, rest);
    if (g.degree() > 0) {
      rest = exact_quotient(rest, g);
      out.emplace_back(std::move(g), k);
    }
  }
  if (rest.degree() > 0) {
    const int k = rest.degree();
    out.emplace_back(std::move(rest), k);
  }
  return out;
}

bool rabin_irreducible(const Poly& f) {
  require_monic(f, "rabin_irreducible");
  const int d = f.degree();
  if (d < 1) throw PreconditionError("rabin_irreducible needs degree >= 1");
  if (d == 1) return true;
  std::vector<int> checkpoints;
  for (int q : prime_divisors(d)) checkpoints.push_back(d / q);
  const Poly x = Poly::monomial(f.modulus(), 1);
  const Poly x_to_p = x_pow_mod(f.p(), f);
  std::optional<FrobeniusMap> frob;
  Poly h = x_to_p;
  for (int k = 1; k <= d; ++k) {
    if (k > 1) {
      if (!frob) frob.emplace(f, x_to_p);
      h = frob->apply(h);
    }
    if (std::find(checkpoints.begin(), checkpoints.end(), k) != checkpoints.end()) {
      if (gcd(h - x, f).degree() != 0) return false;
    }
  }
  return h == x;
}

FactorizationType squarefree_factorization_type(const Poly& f) {
  std::vector<int> parts;
  for (const auto& [g, k] : distinct_degree_factorization(f)) {
    parts.insert(parts.end(), static_cast<std::size_t>(g.degree() / k), k);
  }
  return FactorizationType(std::move(parts));
}

FactorizationType factorization_type(const Poly& f) {
  require_monic(f, "factorization_type");
  if (f.degree() < 1) throw PreconditionError("factorization_type of a constant");
  std::vector<int> parts;
  for (const auto& [s, e] : squarefree_decomposition(f)) {
    for (const auto& [g, k] : distinct_degree_factorization(s)) {
      parts.insert(parts.end(), static_cast<std::size_t>(g.degree() / k * e), k);
    }
  }
  return FactorizationType(std::move(parts));
}

Factorization full_factorization(const Poly& f, u64 seed) {
  if (f.is_zero()) throw PreconditionError("factorization of the zero polynomial");
  Factorization out;
  out.unit = f.leading();
  if (f.degree() == 0) return out;
  const Poly m = f.monic();
  std::mt19937_64 rng(derive_seed(m, seed));
  for (const auto& [s, e] : squarefree_decomposition(m)) {
    for (const auto& [g, k] : distinct_degree_factorization(s)) {
      std::vector<Poly> pieces;
      equal_degree_split(g, k, rng, pieces);
      for (Poly& piece : pieces) out.factors.push_back({std::move(piece), e});
    }
  }
  std::sort(out.factors.begin(), out.factors.end(),
            [](const FactorPower& a, const FactorPower& b) {
              if (a.factor == b.factor) return a.exponent < b.exponent;
              return poly_less(a.factor, b.factor);
            });
  return out;
}

int moebius(const Poly& f) {
  require_monic(f, "moebius");
  if (f.degree() == 0) return 1;
  if (!is_squarefree(f)) return 0;
  int count = 0;
  for (const auto& [g, k] : distinct_degree_factorization(f)) count += g.degree() / k;
  return count % 2 == 0 ? 1 : -1;
}

u64 divisor_function(const Poly& f, int r) {
  if (r < 2) throw PreconditionError("divisor_function needs r >= 2");
  require_monic(f, "divisor_function");
  u64 value = 1;
  for (const auto& [s, e] : squarefree_decomposition(f)) {
    const u64 per_factor = binomial(static_cast<u64>(e + r - 1), static_cast<u64>(r - 1));
    for (const auto& [g, k] : distinct_degree_factorization(s)) {
      for (int i = 0; i < g.degree() / k; ++i) value *= per_factor;
    }
  }
  return value;
}

}  // namespace fpcheb
