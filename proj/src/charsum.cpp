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

#include "fpcheb/charsum.hpp"

#include <cmath>
#include <numbers>

#include <fmt/format.h>

#include "fpcheb/errors.hpp"
#include "fpcheb/parallel.hpp"

namespace fpcheb {

namespace {

void require_sum_domain(const Poly& f, const FactorizationType& lambda) {
  if (f.p() > kCharacterSumMaxP) {
    throw PreconditionError("character sums are limited to p <= 10^6");
  }
  if (!f.is_monic() || f.degree() < 2) {
    throw PreconditionError("character sums need a monic f of degree >= 2");
  }
  if (lambda.total() != f.degree()) {
    throw PreconditionError("'" + lambda.label() + "' is not a partition of deg f = " +
                            std::to_string(f.degree()));
  }
}

Poly add_constant(const Poly& f, Residue c) {
  return f.with_coeff(0, f.modulus().add(f.coeff(0), c));
}

}  // namespace

ClassIndicator class_indicator(const Poly& f, const FactorizationType& lambda,
                               unsigned workers) {
  require_sum_domain(f, lambda);
  const u64 p = f.p();
  ClassIndicator out;
  out.p = p;
  out.lambda = lambda;
  out.member.assign(p, 0);
  auto ramified = parallel_chunks(p, workers, [&](u64 begin, u64 end) {
    u64 r = 0;
    for (u64 a = begin; a < end; ++a) {
      const Poly fa = add_constant(f, a);
      if (discriminant(fa) == 0) {
        ++r;
        continue;
      }
      if (squarefree_factorization_type(fa) == lambda) out.member[a] = 1;
    }
    return r;
  });
  for (u64 r : ramified) out.ramified += r;
  for (auto m : out.member) out.count += m;
  return out;
}

RootsOfUnity::RootsOfUnity(u64 p) : table_(p) {
  const long double step = 2.0L * std::numbers::pi_v<long double> / static_cast<long double>(p);
  for (u64 k = 0; k < p; ++k) {
    const long double angle = step * static_cast<long double>(k);
    table_[k] = {static_cast<double>(std::cos(angle)), static_cast<double>(std::sin(angle))};
  }
}

std::complex<double> twisted_class_sum(const ClassIndicator& indicator,
                                       const RootsOfUnity& roots, Residue b) {
  const u64 p = indicator.p;
  b %= p;
  std::complex<double> sum = 0;
  u64 k = 0;  // b * a mod p
  for (u64 a = 0; a < p; ++a) {
    if (indicator.member[a] != 0) sum += roots[k];
    k += b;
    if (k >= p) k -= p;
  }
  return sum;
}

std::complex<double> twisted_class_sum(const Poly& f, const FactorizationType& lambda,
                                       Residue b) {
  const ClassIndicator indicator = class_indicator(f, lambda);
  return twisted_class_sum(indicator, RootsOfUnity(f.p()), b);
}

std::vector<std::complex<double>> twisted_class_sums(const ClassIndicator& indicator) {
  const RootsOfUnity roots(indicator.p);
  std::vector<std::complex<double>> out(indicator.p);
  for (u64 b = 0; b < indicator.p; ++b) out[b] = twisted_class_sum(indicator, roots, b);
  return out;
}

ParsevalCheck parseval_check(const ClassIndicator& indicator,
                             std::span<const std::complex<double>> sums, double tolerance) {
  if (sums.size() != indicator.p) {
    throw PreconditionError("Parseval needs S(b) for every b in F_p");
  }
  ParsevalCheck out;
  for (const auto& s : sums) out.lhs += std::norm(s);
  out.rhs = static_cast<double>(indicator.p) * static_cast<double>(indicator.count);
  const double denom = out.rhs == 0 ? 1.0 : out.rhs;
  out.relative_error = std::abs(out.lhs - out.rhs) / denom;
  out.ok = out.relative_error < tolerance;
  return out;
}

CompletedSum completed_sum_decomposition(const ClassIndicator& indicator,
                                         std::span<const std::complex<double>> sums,
                                         const IntervalFp& interval) {
  const u64 p = indicator.p;
  if (interval.modulus().value() != p) {
    throw PreconditionError("interval modulus differs from the class indicator");
  }
  if (sums.size() != p) throw PreconditionError("completed sum needs S(b) for every b");
  const RootsOfUnity roots(p);
  const std::vector<Residue> elements = interval.elements();

  CompletedSum out;
  for (Residue c : elements) out.direct_count += indicator.member[c];
  const double inv_p = 1.0 / static_cast<double>(p);
  for (u64 b = 0; b < p; ++b) {
    // hat1_I(b) = (1/p) sum_{c in I} e(-b c / p)
    std::complex<double> hat = 0;
    for (Residue c : elements) {
      const u64 k = static_cast<u64>(static_cast<u128>(b) * c % p);
      hat += roots[k == 0 ? 0 : p - k];
    }
    hat *= inv_p;
    const std::complex<double> term = hat * sums[b];
    out.reconstruction += term;
    if (b == 0) {
      out.main_term = term.real();
    } else {
      out.tail_bound += std::abs(hat) * std::abs(sums[b]);
    }
  }
  out.reconstruction_error =
      std::abs(out.reconstruction - std::complex<double>(static_cast<double>(out.direct_count)));
  if (out.reconstruction_error >= 1e-3) {
    throw InvariantViolation("Fourier reconstruction",
                             fmt::format("direct {} vs reconstructed {:.6f}{:+.6f}i",
                                         out.direct_count, out.reconstruction.real(),
                                         out.reconstruction.imag()));
  }
  return out;
}

CompletedSum completed_sum_decomposition(const Poly& f, const FactorizationType& lambda,
                                         const IntervalFp& interval) {
  if (!(interval.modulus() == f.modulus())) {
    throw PreconditionError("interval modulus differs from the polynomial's");
  }
  const ClassIndicator indicator = class_indicator(f, lambda);
  const auto sums = twisted_class_sums(indicator);
  return completed_sum_decomposition(indicator, sums, interval);
}

}  // namespace fpcheb
