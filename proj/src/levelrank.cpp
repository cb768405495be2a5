#include "kmq/levelrank.hpp"

#include <algorithm>
#include <numeric>

#include "kmq/errors.hpp"
#include "kmq/freudenthal.hpp"
#include "kmq/weyl.hpp"

namespace kmq {

namespace {

Int mod(Int a, Int m) {
  Int r = a % m;
  return r < 0 ? r + m : r;
}

std::string show(const std::vector<Int>& v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
  return s + ")";
}

void check_sizes(int N, Int k) {
  if (N < 2 || k < 2) throw InvalidInput("level-rank data needs N >= 2 and k >= 2");
}

// Number of c-coloured partitions of n.
Int coloured_partitions(Int colours, Int n) {
  std::vector<Int> p(n + 1, 0);
  p[0] = 1;
  for (Int c = 0; c < colours; ++c)
    for (Int part = 1; part <= n; ++part)
      for (Int m = part; m <= n; ++m) p[m] += p[m - part];
  return p[n];
}

}  // namespace

bool is_diagram(const std::vector<Int>& mu, Int k) {
  if (mu.empty()) return false;
  for (std::size_t i = 0; i + 1 < mu.size(); ++i)
    if (mu[i] < mu[i + 1]) return false;
  return mu.front() - mu.back() <= k && std::accumulate(mu.begin(), mu.end(), Int{0}) == 0;
}

std::vector<std::vector<Int>> all_diagrams(int N, Int k) {
  check_sizes(N, k);
  std::vector<std::vector<Int>> out;
  std::vector<Int> cur;
  // Entries of a zero-sum diagram with spread <= k lie strictly between -k and k.
  auto rec = [&](auto&& self, Int upper) -> void {
    if (static_cast<int>(cur.size()) == N) {
      if (is_diagram(cur, k)) out.push_back(cur);
      return;
    }
    for (Int x = upper; x > -k; --x) {
      if (!cur.empty() && cur.front() - x > k) break;
      cur.push_back(x);
      self(self, x);
      cur.pop_back();
    }
  };
  rec(rec, k - 1);
  return out;
}

std::vector<Int> psi(int N, Int k, const std::vector<Int>& mu) {
  if (static_cast<int>(mu.size()) != N || !is_diagram(mu, k))
    throw InvalidInput("not a generalized Young diagram of length " + std::to_string(N) + " and spread <= " +
                       std::to_string(k) + ": " + show(mu));
  std::vector<Int> w(k, 0);
  for (Int x : mu) {
    Int r = mod(x, k);
    ++w[r == 0 ? k - 1 : r - 1];
  }
  return w;
}

std::vector<Int> transpose(const std::vector<Int>& w, int N, Int k) {
  if (static_cast<Int>(w.size()) != k) throw InvalidInput("w must have k entries");
  if (std::any_of(w.begin(), w.end(), [](Int x) { return x < 0; })) throw Inconsistent("w has a negative entry");
  if (std::accumulate(w.begin(), w.end(), Int{0}) != N)
    throw Inconsistent("entries of w " + show(w) + " do not sum to N = " + std::to_string(N));
  Int s = 0;
  for (Int j = 1; j < k; ++j) s += j * w[j - 1];
  if (s % k != 0) throw Inconsistent("w " + show(w) + " is not the dimension vector of a determinant-one module");
  std::vector<Int> nu(k);
  nu[k - 1] = -s / k;
  for (Int i = k - 1; i-- > 0;) nu[i] = nu[i + 1] + w[i];
  return nu;
}

std::vector<Int> psi_inverse(const std::vector<Int>& w, int N, Int k) {
  check_sizes(N, k);
  auto nu = transpose(w, N, k);
  auto mu = transpose(psi(static_cast<int>(k), N, nu), static_cast<int>(k), N);
  if (!is_diagram(mu, k) || psi(N, k, mu) != w) throw Inconsistent("no diagram with dimension vector " + show(w));
  return mu;
}

Int energy_of_highest(const std::vector<Int>& mu) {
  Int s = 0;
  for (Int x : mu)
    if (x < 0) s += x;
  return s;
}

Int diagram_norm(const std::vector<Int>& mu) {
  Int s = 0;
  for (Int x : mu) s += x * x;
  return s;
}

std::vector<Int> diagram_labels(const std::vector<Int>& mu) {
  std::vector<Int> l;
  for (std::size_t i = 0; i + 1 < mu.size(); ++i) l.push_back(mu[i] - mu[i + 1]);
  return l;
}

GlWeight gl_fundamental(Int k, Int i) {
  if (i < 1 || i > k) throw InvalidInput("fundamental weight index out of range");
  GlWeight g{1, std::vector<Int>(k, 0), 0};
  for (Int j = 0; j < i; ++j) g.x[j] = 1;
  return g;
}

GlWeight gl_simple_root(Int k, Int i) {
  if (i < 1 || i > k) throw InvalidInput("simple root index out of range");
  GlWeight g{0, std::vector<Int>(k, 0), 0};
  if (i < k) {
    g.x[i - 1] = 1;
    g.x[i] = -1;
  } else {
    g.x[0] = -1;
    g.x[k - 1] = 1;
    g.energy = 1;
  }
  return g;
}

GlWeight gl_shifted_weight(const std::vector<Int>& v, const std::vector<Int>& w) {
  if (v.size() != w.size() || w.empty()) throw InvalidInput("v and w must have k entries");
  const Int k = static_cast<Int>(w.size());
  GlWeight g{0, std::vector<Int>(k, 0), 0};
  for (Int i = 1; i <= k; ++i) {
    GlWeight f = gl_fundamental(k, i), a = gl_simple_root(k, i);
    g.level += w[i - 1] * f.level;
    g.energy += w[i - 1] * f.energy - v[i - 1] * a.energy;
    for (Int j = 0; j < k; ++j) g.x[j] += w[i - 1] * f.x[j] - v[i - 1] * a.x[j];
  }
  return g;
}

std::vector<Int> gl_labels(const GlWeight& g) {
  const std::size_t k = g.x.size();
  std::vector<Int> l(k);
  for (std::size_t i = 0; i + 1 < k; ++i) l[i] = g.x[i] - g.x[i + 1];
  l[k - 1] = g.level - (g.x[0] - g.x[k - 1]);
  return l;
}

bool gl_dominant(const GlWeight& g) {
  auto l = gl_labels(g);
  return std::all_of(l.begin(), l.end(), [](Int x) { return x >= 0; });
}

AffineWeight gl_to_sl(const GlWeight& g) {
  auto l = gl_labels(g);
  l.pop_back();
  return AffineWeight(g.level, std::move(l), g.energy);
}

NakajimaLift nakajima_lifts(const std::vector<Int>& v, const std::vector<Int>& w, int N, Int k) {
  check_sizes(N, k);
  if (static_cast<Int>(v.size()) != k || static_cast<Int>(w.size()) != k) throw InvalidInput("v and w must have k entries");
  if (std::any_of(v.begin(), v.end(), [](Int x) { return x < 0; })) throw InvalidInput("v must be nonnegative");
  NakajimaLift out;
  out.mu_bar = psi_inverse(w, N, k);
  GlWeight shifted = gl_shifted_weight(v, w);
  if (!gl_dominant(shifted))
    throw Inconsistent("shifted weight for v = " + show(v) + ", w = " + show(w) + " is not dominant");
  out.w_shifted = gl_labels(shifted);
  out.lambda_bar = psi_inverse(out.w_shifted, N, k);
  out.a = std::accumulate(v.begin(), v.end(), Int{0});
  // energy = -(a + |mu|^2/2 - |lambda|^2/2)/k = -(2a + |mu|^2 - |lambda|^2)/(2k)
  Int num = 2 * out.a + diagram_norm(out.mu_bar) - diagram_norm(out.lambda_bar);
  if (num % (2 * k) != 0) throw Inconsistent("energy of mu is not an integer for v = " + show(v) + ", w = " + show(w));
  out.lambda = AffineWeight(k, diagram_labels(out.lambda_bar), 0);
  out.mu = AffineWeight(k, diagram_labels(out.mu_bar), -num / (2 * k));
  return out;
}

Rational rho_pairing(const std::vector<Int>& nu, Int k) {
  Rational s = 0;
  for (Int i = 1; i <= k; ++i) s += ratio((k + 1 - 2 * i) * nu[i - 1], 2);
  return s;
}

Rational rho_pairing_fundamental(Int b, Int k) {
  // omega_c = E_1 + ... + E_c minus its mean; the mean pairs to zero with rho.
  Int c = mod(b, k);
  std::vector<Int> e(k, 0);
  for (Int i = 0; i < c; ++i) e[i] = 1;
  return rho_pairing(e, k);
}

NakajCheck check_nakaj_identity(const std::vector<Int>& lambda_bar, const std::vector<Int>& mu_bar,
                                const std::vector<Int>& v, int N, Int k) {
  check_sizes(N, k);
  if (static_cast<Int>(v.size()) != k) throw InvalidInput("v must have k entries");
  const Int a = std::accumulate(v.begin(), v.end(), Int{0});
  NakajCheck c;
  c.lhs = v[k - 1] + energy_of_highest(lambda_bar) - energy_of_highest(mu_bar);
  c.rhs = Rational(2 * a + diagram_norm(mu_bar) - diagram_norm(lambda_bar)) / (2 * k);
  c.identity = c.lhs == c.rhs;

  auto t_lambda = transpose(psi(N, k, lambda_bar), N, k);
  auto t_mu = transpose(psi(N, k, mu_bar), N, k);
  auto closing = [&](const std::vector<Int>& diagram, const std::vector<Int>& t) {
    return rho_pairing(t, k) == ratio(-diagram_norm(diagram), 2) - k * energy_of_highest(diagram);
  };
  c.closing_lambda = closing(lambda_bar, t_lambda);
  c.closing_mu = closing(mu_bar, t_mu);

  c.fundamental_terms = true;
  for (const auto* diagram : {&lambda_bar, &mu_bar}) {
    Rational total = 0;
    for (Int b : *diagram) {
      Rational term = rho_pairing_fundamental(b, k);
      Rational expect = b >= 0 ? ratio(b * k - b * b, 2) : ratio(-b * k - b * b, 2);
      c.fundamental_terms = c.fundamental_terms && term == expect;
      total += term;
    }
    c.fundamental_terms = c.fundamental_terms && total == rho_pairing(diagram == &lambda_bar ? t_lambda : t_mu, k);
  }

  if (v[k - 1] == 0) {
    std::vector<Int> diff(k);
    for (Int i = 0; i < k; ++i) diff[i] = t_mu[i] - t_lambda[i];
    c.reduction = rho_pairing(diff, k) == a;
  }
  return c;
}

Int dimension_formula(const CartanData& data, const AffineWeight& lambda, const AffineWeight& mu) {
  if (lambda.level != mu.level || (data.affine() && lambda.level <= 0))
    throw InvalidInput("lambda and mu need a common positive level");
  auto c = data.root_coordinates(lambda - mu);
  if (!c || std::any_of(c->begin(), c->end(), [](Int x) { return x < 0; }))
    throw InvalidInput("dimension formula needs lambda >= mu");
  return 2 * std::accumulate(c->begin(), c->end(), Int{0});
}

std::map<AffineWeight, Int> tensor_decomposition(const CartanData& data, const std::vector<AffineWeight>& factors,
                                                 Int depth) {
  if (factors.empty()) throw InvalidInput("empty tensor product");
  if (depth < 0) throw InvalidInput("depth must be nonnegative");
  for (const auto& f : factors)
    if (!is_dominant(data, f)) throw InvalidInput("tensor factors must be dominant: " + to_string(f));
  std::map<AffineWeight, Int> current{{factors[0], 1}};
  AffineWeight top = factors[0];
  auto c0 = [&](const AffineWeight& hi, const AffineWeight& lo) {
    return data.affine() ? (*data.root_coordinates(hi - lo))[0] : Int{0};
  };
  for (std::size_t t = 1; t < factors.size(); ++t) {
    const AffineWeight& b = factors[t];
    MultiplicityTable right(data, b, depth);
    std::map<AffineWeight, Int> next;
    for (const auto& [a, ma] : current) {
      const Int room = depth - c0(top, a);
      // Candidates: dominant C <= a + b within the remaining depth.
      MultiplicityTable span(data, a + b, room);
      for (const auto& c : span.dominant_weights()) {
        // mult of L(c) in L(a) (x) L(b) = sum_w (-1)^l(w) dim L(b)_{c - w.a}
        Int m = 0;
        for (const auto& contrib : enumerate_contributing(data, a, c - b, depth)) {
          const AffineWeight w_dot_a = contrib.beta + (c - b);
          const AffineWeight nu = c - w_dot_a;
          m += contrib.w.sign() * right.multiplicity(nu);
        }
        if (m < 0) throw std::logic_error("negative tensor multiplicity at " + to_string(c));
        if (m != 0) next[c] += ma * m;
      }
    }
    current = std::move(next);
    top += b;
  }
  return current;
}

Int gl_tensor_multiplicity(Int k, const GlWeight& nu, const std::vector<Int>& order, Int depth) {
  if (k < 2) throw InvalidInput("gl(k) needs k >= 2");
  if (order.empty()) throw InvalidInput("empty tensor product");
  if (static_cast<Int>(nu.x.size()) != k) throw InvalidInput("weight must have k coordinates");
  const Int F = static_cast<Int>(order.size());
  Int charge = 0;
  std::vector<AffineWeight> factors;
  for (Int i : order) {
    GlWeight f = gl_fundamental(k, i);
    charge += std::accumulate(f.x.begin(), f.x.end(), Int{0});
    factors.push_back(gl_to_sl(f));
  }
  if (nu.level != F || std::accumulate(nu.x.begin(), nu.x.end(), Int{0}) != charge) return 0;
  if (!gl_dominant(nu)) return 0;
  const Int drop = -nu.energy;
  if (drop < 0) return 0;
  if (drop > depth) throw DepthExceeded("energy drop " + std::to_string(drop) + " exceeds depth " + std::to_string(depth));

  CartanData sl = build_affine_data('A', static_cast<int>(k - 1), false);
  auto dec = tensor_decomposition(sl, factors, drop);
  // gl(k)_aff = sl(k)_aff + Heisenberg; the F Fock factors leave F - 1 free
  // Heisenberg copies in the multiplicity space.
  const AffineWeight target = gl_to_sl(nu);
  Int total = 0;
  for (Int n = 0; n <= drop; ++n) {
    auto it = dec.find(target + n * sl.delta());
    if (it != dec.end()) total += it->second * coloured_partitions(F - 1, n);
  }
  return total;
}

Int gl_tensor_multiplicity(Int k, const GlWeight& nu, const std::vector<Int>& w) {
  if (static_cast<Int>(w.size()) != k) throw InvalidInput("w must have k entries");
  std::vector<Int> order;
  for (Int i = 1; i <= k; ++i)
    for (Int c = 0; c < w[i - 1]; ++c) order.push_back(i);
  return gl_tensor_multiplicity(k, nu, order, std::max<Int>(0, -nu.energy));
}

DualityRow duality_row(const std::vector<Int>& v, const std::vector<Int>& w, int N, Int k) {
  DualityRow row;
  row.v = v;
  row.w = w;
  GlWeight shifted = gl_shifted_weight(v, w);
  psi_inverse(w, N, k);  // validates w
  if (!gl_dominant(shifted)) {
    row.skipped = true;
    return row;
  }
  row.lift = nakajima_lifts(v, w, N, k);
  row.lhs = gl_tensor_multiplicity(k, shifted, w);
  CartanData sl_n = build_affine_data('A', N - 1, false);
  row.rhs = weight_multiplicity(sl_n, row.lift.lambda, row.lift.mu, std::max<Int>(0, -row.lift.mu.energy));
  row.nakaj = check_nakaj_identity(row.lift.lambda_bar, row.lift.mu_bar, v, N, k).ok();
  return row;
}

std::vector<DualityRow> duality_sweep(int N, Int k, Int bound) {
  check_sizes(N, k);
  if (bound < 0) throw InvalidInput("bound must be nonnegative");
  std::vector<std::vector<Int>> ws;
  for (const auto& mu : all_diagrams(N, k)) ws.push_back(psi(N, k, mu));
  std::sort(ws.begin(), ws.end());
  ws.erase(std::unique(ws.begin(), ws.end()), ws.end());

  std::vector<std::vector<Int>> vs;
  std::vector<Int> v(k, 0);
  auto rec = [&](auto&& self, Int i, Int left) -> void {
    if (i == k) {
      vs.push_back(v);
      return;
    }
    for (Int x = 0; x <= left; ++x) {
      v[i] = x;
      self(self, i + 1, left - x);
    }
    v[i] = 0;
  };
  rec(rec, 0, bound);
  std::stable_sort(vs.begin(), vs.end(), [](const auto& a, const auto& b) {
    return std::accumulate(a.begin(), a.end(), Int{0}) < std::accumulate(b.begin(), b.end(), Int{0});
  });

  std::vector<DualityRow> rows;
  for (const auto& w : ws)
    for (const auto& vv : vs) rows.push_back(duality_row(vv, w, N, k));
  return rows;
}

}  // namespace kmq
