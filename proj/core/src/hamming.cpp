// Copyright 2026 The demikit Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "demikit/hamming.hpp"

#include <map>
#include <string>
#include <utility>

#include "demikit/constructions.hpp"
#include "demikit/errors.hpp"
#include "demikit/ops.hpp"
#include "demikit/tutte.hpp"

namespace demikit {

namespace {

const LaurentPoly kX = LaurentPoly::variable(Var::x);
const LaurentPoly kY = LaurentPoly::variable(Var::y);
const LaurentPoly kT = LaurentPoly::variable(Var::t);

LaurentPoly tpow(int e) { return LaurentPoly::variable(Var::t, e); }

// (x-y)^eta y^rho T(x/y, (x + (s-1)y)/(x-y)) with s the image of t, expanded
// monomial by monomial of T. Exponents stay nonnegative because
// deg_x T <= rho and deg_y T <= eta for a demimatroid.
LaurentPoly w_from_tutte_poly(const LaurentPoly& tutte_poly, int eta, int rho,
                              const LaurentPoly& s) {
  const LaurentPoly xmy = kX - kY;
  const LaurentPoly shifted = kX + (s - 1) * kY;
  LaurentPoly w;
  for (const auto& [e, c] : tutte_poly.terms()) {
    const int i = e[static_cast<int>(Var::x)];
    const int j = e[static_cast<int>(Var::y)];
    if (i < 0 || j < 0 || i > rho || j > eta) {
      throw UnsupportedSubstitution("Tutte monomial x^" + std::to_string(i) + "*y^" +
                                    std::to_string(j) + " leaves the polynomial range");
    }
    w += LaurentPoly(c) * LaurentPoly::monomial(Rational(1), {i, rho - i, 0, 0}) *
         shifted.pow(j) * xmy.pow(eta - j);
  }
  return w;
}

LaurentPoly require_same(const LaurentPoly& a, const LaurentPoly& b, const std::string& what) {
  if (a != b) throw InvariantViolation(what + ": " + a.str() + " != " + b.str());
  return a;
}

LaurentPoly binomial(int n, int k) {
  if (k < 0 || k > n) return LaurentPoly();
  Integer out = 1;
  for (int i = 0; i < k; ++i) out = out * (n - i) / (i + 1);
  return LaurentPoly(Rational(out));
}

// sum_j [r, j]_t (-1)^(r-j) t^C(r-j, 2) w_at(j), divided by <r>_t.
template <typename F>
LaurentPoly q_combination(int r, F&& w_at) {
  LaurentPoly sum;
  for (int j = 0; j <= r; ++j) {
    const int d = r - j;
    const LaurentPoly sign(d % 2 ? -1 : 1);
    sum += q_binomial(r, j, Var::t) * sign * tpow(d * (d - 1) / 2) * w_at(j);
  }
  return divide_exact(sum, angle(r, Var::t));
}

void check_r(const RankTable& m, int r) {
  if (r < 0 || r > m.n()) {
    throw InvalidArgument("r = " + std::to_string(r) + " outside [0, " + std::to_string(m.n()) +
                          "]");
  }
}

}  // namespace

LaurentPoly hamming_subset_sum(const RankTable& m) {
  const int n = m.n();
  std::map<std::pair<int, int>, Integer> counts;
  for (Mask s = 0; s < m.size(); ++s) ++counts[{cardinality(s), m.nullity(s)}];
  const LaurentPoly xmy = kX - kY;
  LaurentPoly w;
  for (const auto& [key, count] : counts) {
    const auto [size, eta] = key;
    w += LaurentPoly(Rational(count)) * xmy.pow(n - size) *
         LaurentPoly::monomial(Rational(1), {0, size, eta, 0});
  }
  return w;
}

LaurentPoly hamming_via_tutte(const RankTable& m) {
  require_demimatroid(m, "Hamming polynomial via Tutte");
  const LaurentPoly w = w_from_tutte_poly(tutte(m), m.total_nullity(), m.total_rank(), kT);
  return require_same(w, hamming_subset_sum(m), "Tutte route and subset sum differ");
}

LaurentPoly p_sigma(const RankTable& m, Mask sigma) {
  check_mask(sigma, m.n());
  LaurentPoly p;
  const int size = cardinality(sigma);
  for_each_submask(sigma, [&](Mask gamma) {
    p.add_term({0, 0, m.nullity(gamma), 0}, Rational((size - cardinality(gamma)) % 2 ? -1 : 1));
  });
  return p;
}

LaurentPoly p_j(const RankTable& m, int j) {
  if (j < 0 || j > m.n()) throw InvalidArgument("j outside [0, n]");
  if (j == 0) return LaurentPoly(1);
  LaurentPoly p;
  for (Mask s = 0; s < m.size(); ++s) {
    if (cardinality(s) == j) p += p_sigma(m, s);
  }
  return p;
}

LaurentPoly hamming_from_p(const RankTable& m) {
  const int n = m.n();
  LaurentPoly w;
  for (int j = 0; j <= n; ++j) {
    w += p_j(m, j) * LaurentPoly::monomial(Rational(1), {n - j, j, 0, 0});
  }
  return w;
}

LaurentPoly macwilliams_transform(const LaurentPoly& w, int eta) {
  return tpow(-eta) * w.substitute({{Var::x, kX + (kT - 1) * kY}, {Var::y, kX - kY}});
}

LaurentPoly macwilliams(const RankTable& m) {
  require_demimatroid(m, "MacWilliams identity");
  const LaurentPoly w = macwilliams_transform(hamming_subset_sum(m), m.total_nullity());
  return require_same(w, hamming_subset_sum(dual(m)), "MacWilliams transform and W of the dual");
}

LaurentPoly tutte_from_hamming(const RankTable& m) {
  const LaurentPoly w = hamming_subset_sum(m);
  const LaurentPoly at = w.substitute(
      {{Var::x, LaurentPoly(1)}, {Var::y, LaurentPoly::variable(Var::x, -1)},
       {Var::t, (kX - 1) * (kY - 1)}});
  const LaurentPoly scaled = LaurentPoly::variable(Var::x, m.n()) * at;
  LaurentPoly t;
  const int eta = m.total_nullity();
  if (eta >= 0) {
    t = divide_exact(scaled, (kX - 1).pow(eta));
  } else {
    t = scaled * (kX - 1).pow(-eta);
  }
  return require_same(t, tutte(m), "Tutte from Hamming and direct Tutte differ");
}

LaurentPoly hamming_recurrence(const RankTable& m, int p) {
  if (p < 1 || p > m.n()) throw InvalidArgument("element " + std::to_string(p) + " out of range");
  const Mask bit = element_bit(p);
  return (kX - kY) * hamming_subset_sum(deletion(m, bit).table) +
         tpow(1 - m(bit)) * kY * hamming_subset_sum(contraction(m, bit).table);
}

HammingCoefficients a_coefficients(const RankTable& m) {
  require_demimatroid(m, "Hamming coefficients");
  if (m.total_nullity() < 1) throw InvalidArgument("A_j(t) needs eta(E) >= 1");
  const int n = m.n();
  HammingCoefficients out;
  out.delta = n + 1;
  for (Mask x = 0; x < m.size(); ++x) {
    if (m.nullity(x) == 1) out.delta = std::min(out.delta, cardinality(x));
  }
  for (Mask x = 0; x < m.size(); ++x) {
    if (m.nullity(x) == 1 && cardinality(x) == out.delta) ++out.c;
  }

  const LaurentPoly w = hamming_subset_sum(m);
  for (int j = 0; j <= n; ++j) out.a.push_back(w.coefficient_of(Var::x, n - j).coefficient_of(Var::y, j));

  require_same(out.a[0], LaurentPoly(1), "A_0");
  for (int j = 1; j < out.delta; ++j) require_same(out.a[j], LaurentPoly(), "A_j below delta");
  const LaurentPoly expected = LaurentPoly(out.c) * (kT - 1);
  require_same(out.a[out.delta], expected, "A_delta");
  require_same(p_j(m, out.delta), expected, "P_{M,delta}");

  const int k = m.total_rank();
  if (m == uniform(n, k)) {
    for (int i = 1; i <= n; ++i) {
      require_same(out.a[i], uniform_a_closed_form(n, k, i), "uniform A_i closed form");
    }
  }
  return out;
}

LaurentPoly uniform_a_closed_form(int n, int k, int i) {
  if (k < 0 || k >= n) throw InvalidArgument("uniform A_i needs 0 <= k < n");
  if (i < 0 || i > n) throw InvalidArgument("i outside [0, n]");
  if (i == 0) return LaurentPoly(1);
  const int delta = k + 1;
  if (i < delta) return LaurentPoly();
  LaurentPoly sum;
  for (int j = 0; j <= i - delta; ++j) {
    sum += LaurentPoly(j % 2 ? -1 : 1) * binomial(i - 1, j) * tpow(i - delta - j);
  }
  return (kT - 1) * binomial(n, i) * sum;
}

LaurentPoly generalized_w(const RankTable& m, int r) {
  check_r(m, r);
  const LaurentPoly w = hamming_subset_sum(m);
  return q_combination(r, [&](int j) { return w.substitute({{Var::t, tpow(j)}}); });
}

LaurentPoly generalized_w_from_tutte(const RankTable& m, int r) {
  check_r(m, r);
  require_demimatroid(m, "generalized Hamming enumerator");
  const LaurentPoly t = tutte(m);
  return q_combination(r, [&](int j) {
    return w_from_tutte_poly(t, m.total_nullity(), m.total_rank(), tpow(j));
  });
}

ConjectureReport conjecture_check(const RankTable& m) {
  const int n = m.n();
  const int k = m.total_rank();
  ConjectureReport report;
  if (k > n || k < 0) {
    report.supported = false;
    report.note = "rho(E) outside [0, n]";
    return report;
  }
  try {
    const LaurentPoly xy = (kX - 1) * (kY - 1);
    const std::map<Var, LaurentPoly> at{{Var::x, LaurentPoly(1)},
                                        {Var::y, LaurentPoly::variable(Var::x, -1)}};
    LaurentPoly sum;
    LaurentPoly product(1);
    for (int r = 0; r <= n - k; ++r) {
      if (r > 0) product *= xy - tpow(r - 1);
      sum += product * generalized_w(m, r).substitute(at);
    }
    report.rhs = divide_exact(LaurentPoly::variable(Var::x, n) * sum, (kX - 1).pow(n - k));
    report.residual = report.rhs - tutte(m);
    report.holds = report.residual.is_zero();
  } catch (const InexactDivision& e) {
    report.supported = false;
    report.note = std::string(e.what()) + "; remainder " + e.remainder();
  } catch (const UnsupportedSubstitution& e) {
    report.supported = false;
    report.note = e.what();
  }
  return report;
}

LaurentPoly f_polynomial_via_hamming(const Complex& delta) {
  const RankTable m = complex_to_demimatroid(delta);
  // W is homogeneous of degree n in (x, y), so (t+1)^n W(1, (t+1)^-1, 0)
  // equals W(t+1, 1, 0).
  const LaurentPoly w = hamming_subset_sum(m).substitute(
      {{Var::x, kT + 1}, {Var::y, LaurentPoly(1)}, {Var::t, LaurentPoly()}});
  return divide_exact(w, tpow(m.total_nullity()));
}

}  // namespace demikit
