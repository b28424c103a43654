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

#include "fpcheb/selftest.hpp"

#include <exception>
#include <functional>
#include <set>

#include "fpcheb/artin.hpp"
#include "fpcheb/census.hpp"
#include "fpcheb/charsum.hpp"
#include "fpcheb/class_model.hpp"
#include "fpcheb/errors.hpp"
#include "fpcheb/factor.hpp"
#include "fpcheb/forge.hpp"
#include "fpcheb/morse.hpp"

namespace fpcheb {

namespace {

using Check = std::function<bool()>;

Poly P(u64 p, std::initializer_list<i64> c) { return Poly::from_ints(PrimeModulus(p), c); }

std::vector<std::pair<std::string, Check>> cases() {
  return {
      {"divrem x^2+1 by x over F5",
       [] { auto [q, r] = divrem(P(5, {1, 0, 1}), P(5, {0, 1}));
            return q == P(5, {0, 1}) && r == P(5, {1}); }},
      {"divrem x^3+2x+1 by x^2+1 over F7",
       [] { auto [q, r] = divrem(P(7, {1, 2, 0, 1}), P(7, {1, 0, 1}));
            return q == P(7, {0, 1}) && r == P(7, {1, 1}); }},
      {"gcd with common factor x-1 over F7",
       [] { return gcd(P(7, {2, -3, 1}), P(7, {3, -4, 1})) == P(7, {-1, 1}); }},
      {"gcd(x^2+1, x^2+x) over F3 is 1",
       [] { return gcd(P(3, {1, 0, 1}), P(3, {0, 1, 1})).is_one(); }},
      {"x^3 mod x^2+1 over F3 is 2x",
       [] { return frobenius_power(P(3, {1, 0, 1}), 1) == P(3, {0, 2}); }},
      {"Frobenius orbit of x^3-x-1 over F3 closes at 3",
       [] { return frobenius_power(P(3, {-1, -1, 0, 1}), 3) == P(3, {0, 1}); }},
      {"Res(x-2, x-3) over F7 is 6",
       [] { return resultant(P(7, {-2, 1}), P(7, {-3, 1})) == 6; }},
      {"disc(x^2+x+1) over F7 is 4",
       [] { return discriminant(P(7, {1, 1, 1})) == 4; }},
      {"disc(x^3-3x) over F7 is 3",
       [] { return discriminant(P(7, {0, -3, 0, 1})) == 3; }},
      {"x^7-1 over F7 is not squarefree",
       [] { return !is_squarefree(P(7, {-1, 0, 0, 0, 0, 0, 0, 1})); }},
      {"Rabin: x^2+1 irreducible over F3, reducible over F5",
       [] { return rabin_irreducible(P(3, {1, 0, 1})) && !rabin_irreducible(P(5, {1, 0, 1})); }},
      {"Rabin: x^3-x-1 irreducible over F3",
       [] { return rabin_irreducible(P(3, {-1, -1, 0, 1})); }},
      {"type of x^4+1 over F5 is 2,2",
       [] { return factorization_type(P(5, {1, 0, 0, 0, 1})).label() == "2,2"; }},
      {"type of (x-1)(x^2+1) over F3 is 1,2",
       [] { return factorization_type(P(3, {-1, 1}) * P(3, {1, 0, 1})).label() == "1,2"; }},
      {"x^6-1 over F7 has six linear factors",
       [] { auto fz = full_factorization(P(7, {-1, 0, 0, 0, 0, 0, 1}));
            return fz.factors.size() == 6 && fz.factors.front().factor.degree() == 1; }},
      {"moebius(x^2+1) over F3 is -1",
       [] { return moebius(P(3, {1, 0, 1})) == -1; }},
      {"d2(P^2)=3, d2(PQ)=4, d3(P)=3",
       [] { const Poly a = P(7, {1, 1}), b = P(7, {2, 1});
            return divisor_function(a * a, 2) == 3 && divisor_function(a * b, 2) == 4 &&
                   divisor_function(a, 3) == 3; }},
      {"x^3-3x and x^3+x are Morse over F7, x^3 is not",
       [] { return is_morse_polynomial(P(7, {0, -3, 0, 1})) &&
                   is_morse_polynomial(P(7, {0, 1, 0, 1})) &&
                   !is_morse_polynomial(P(7, {0, 0, 0, 1})); }},
      {"critical values of x^3-3x over F7 are 2 and 5",
       [] { const Poly r = critical_value_polynomial(P(7, {0, -3, 0, 1}));
            return r.degree() == 2 && r.eval(2) == 0 && r.eval(5) == 0; }},
      {"Geyer condition for (x^3+x, x^2) over F7 and (x^4+x, x^3) over F11",
       [] { return geyer_condition(P(7, {0, 1, 0, 1}), P(7, {0, 0, 1})) &&
                   geyer_condition(P(11, {0, 1, 0, 0, 1}), P(11, {0, 0, 0, 1})); }},
      {"(x^3+x+1)/x is Morse over F7; x^3/x is rejected",
       [] {
         if (!is_morse_rational(P(7, {1, 1, 0, 1}), P(7, {0, 1}))) return false;
         try {
           is_morse_rational(P(7, {0, 0, 0, 1}), P(7, {0, 1}));
         } catch (const PreconditionError&) {
           return true;
         }
         return false;
       }},
      {"B1 of x^3 over F7 contains 0; B1 of x^3-3x does not",
       [] { auto b1 = bad_set(FamilyShape::linear_term(P(7, {0, 0, 0, 1}))).bad;
            auto b2 = bad_set(FamilyShape::linear_term(P(7, {0, -3, 0, 1}))).bad;
            return std::set<Residue>(b1.begin(), b1.end()).count(0) == 1 &&
                   std::set<Residue>(b2.begin(), b2.end()).count(0) == 0; }},
      {"x^4+2x^2+5 = g(x^2) with g = x^2+2x+5",
       [] { auto w = decomposition_witness(P(11, {5, 0, 2, 0, 1}), 2);
            return w && *w == P(11, {5, 2, 1}); }},
      {"S3 cycle densities 1/6, 1/2, 1/3",
       [] { return cycle_type_density(FactorizationType({1, 1, 1})) == Density(1, 6) &&
                   cycle_type_density(FactorizationType({1, 2})) == Density(1, 2) &&
                   cycle_type_density(FactorizationType({3})) == Density(1, 3); }},
      {"census of x^3-3x + a over F7 conserves |I|",
       [] { auto shape = FamilyShape::additive_constant(P(7, {0, -3, 0, 1}));
            auto rep = interval_census(shape, std::nullopt, IntervalFp::full(PrimeModulus(7)));
            return rep.classified() + rep.ramified == 7; }},
      {"cubic classes over F7 with omega=2",
       [] { const PrimeModulus F(7);
            return cubic_artin_class(F, F.from_signed(-1), 2) == 0 &&
                   cubic_artin_class(F, 2, 2) == 2; }},
      {"Artin-Schreier symbol of 2 over F5",
       [] { return artin_schreier_symbol(PrimeModulus(5), 2) == 2; }},
      {"Parseval for x^3+x, class 3, over F31",
       [] { ClassIndicator ind = class_indicator(P(31, {0, 1, 0, 1}), FactorizationType({3}));
            auto sums = twisted_class_sums(ind);
            return parseval_check(ind, sums).ok; }},
      {"forge: irreducible base hits at (0,0) with one Rabin call",
       [] { auto rep = construct_irreducible(P(7, {2, 0, 0, 1}));
            return rep.b_used == 0 && rep.a_used == 0 && rep.rabin_calls == 1; }},
  };
}

}  // namespace

std::vector<SelftestCase> run_selftest() {
  std::vector<SelftestCase> out;
  for (auto& [name, check] : cases()) {
    SelftestCase c{name, false, {}};
    try {
      c.passed = check();
    } catch (const std::exception& e) {
      c.detail = e.what();
    }
    out.push_back(std::move(c));
  }
  return out;
}

}  // namespace fpcheb
