#include "kmq/freudenthal.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <stdexcept>

#include "kmq/errors.hpp"
#include "kmq/weyl.hpp"

namespace kmq {

namespace {

Int height(const std::vector<Int>& c) { return std::accumulate(c.begin(), c.end(), Int{0}); }

bool nonnegative(const std::vector<Int>& c) {
  return std::all_of(c.begin(), c.end(), [](Int x) { return x >= 0; });
}

}  // namespace

MultiplicityTable::MultiplicityTable(CartanData data, AffineWeight lambda, Int depth)
    : data_(std::move(data)), lambda_(std::move(lambda)), depth_(depth) {
  if (!data_.conforms(lambda_)) throw InvalidInput("weight has the wrong rank");
  if (depth_ < 0) throw InvalidInput("depth must be nonnegative");
  if (data_.affine() && lambda_.level <= 0) throw InvalidInput("affine modules need positive level");
  if (!is_dominant(data_, lambda_)) throw InvalidInput("highest weight must be dominant: " + to_string(lambda_));
  roots_ = positive_roots_up_to(data_, depth_);
  const AffineWeight lr = lambda_ + data_.rho();
  top_norm_ = data_.form(lr, lr);
  memo_[lambda_] = 1;
}

bool MultiplicityTable::depth_ok(const std::vector<Int>& coords) const {
  return !data_.affine() || coords[0] <= depth_;
}

Int MultiplicityTable::multiplicity(const AffineWeight& mu) {
  if (!data_.conforms(mu)) throw InvalidInput("weight has the wrong rank");
  if (mu.level != lambda_.level) return 0;
  auto c = data_.root_coordinates(lambda_ - mu);
  if (!c) return 0;
  if (!depth_ok(*c) && nonnegative(*c))
    throw DepthExceeded("weight " + to_string(mu) + " lies below the computed depth");
  // The energy of a weight is bounded above by that of lambda.
  if (data_.affine() && (*c)[0] < 0) return 0;
  // Multiplicities are W-invariant, and a dominant weight occurs iff it is <= lambda.
  const AffineWeight dom = apply(data_, to_dominant(data_, mu).element, mu);
  auto cd = data_.root_coordinates(lambda_ - dom);
  if (!nonnegative(*cd)) return 0;
  return dominant_multiplicity(dom);
}

Int MultiplicityTable::dominant_multiplicity(const AffineWeight& mu) {
  if (auto it = memo_.find(mu); it != memo_.end()) return it->second;
  const std::vector<Int> gap = *data_.root_coordinates(lambda_ - mu);
  const AffineWeight mr = mu + data_.rho();
  const Rational denom = top_norm_ - data_.form(mr, mr);
  if (denom <= 0)
    throw std::logic_error("Freudenthal denominator is not positive at " + to_string(mu));

  Rational sum = 0;
  for (const auto& root : roots_) {
    bool fits = true;
    for (std::size_t i = 0; i < gap.size() && fits; ++i) fits = root.coords[i] <= gap[i];
    if (!fits) continue;
    AffineWeight nu = mu;
    std::vector<Int> rest = gap;
    for (;;) {
      nu += root.root;
      for (std::size_t i = 0; i < rest.size(); ++i) rest[i] -= root.coords[i];
      if (!nonnegative(rest)) break;
      Int m = multiplicity(nu);
      if (m != 0) sum += Rational(root.multiplicity * m) * data_.form(nu, root.root);
    }
  }
  Rational value = 2 * sum / denom;
  if (value.get_den() != 1 || value < 0) throw std::logic_error("non-integral multiplicity at " + to_string(mu));
  Int result = value.get_num().get_si();
  memo_[mu] = result;
  return result;
}

std::vector<AffineWeight> MultiplicityTable::dominant_weights() const {
  std::vector<AffineWeight> out;
  const int r = data_.rank();
  if (data_.affine()) {
    // Dominant finite parts at level k: mu_bar >= 0 with sum comark_i mu_i <= k.
    std::vector<Int> mb(r, 0);
    const Int k = lambda_.level;
    for (;;) {
      Int used = 0;
      for (int i = 0; i < r; ++i) used += data_.comark(i + 1) * mb[i];
      if (used <= k) {
        for (Int c0 = 0; c0 <= depth_; ++c0) {
          AffineWeight mu(k, mb, lambda_.energy - c0);
          if (data_.in_positive_cone(lambda_ - mu)) out.push_back(mu);
        }
      }
      int i = 0;
      while (i < r) {
        ++mb[i];
        Int u = 0;
        for (int j = 0; j < r; ++j) u += data_.comark(j + 1) * mb[j];
        if (u <= k) break;
        mb[i++] = 0;
      }
      if (i == r) break;
    }
  } else {
    // lambda - mu = sum c_i alpha_i with mu dominant forces c_i <= (A^-1 lambda)_i.
    std::vector<Int> bound(r);
    for (int i = 1; i <= r; ++i) {
      Rational s = 0;
      for (int j = 1; j <= r; ++j) s += data_.form(data_.fundamental_weight(i), data_.fundamental_weight(j)) * lambda_.finite[j - 1];
      s /= data_.symmetrizer(i);
      mpz_class f;
      mpz_fdiv_q(f.get_mpz_t(), s.get_num_mpz_t(), s.get_den_mpz_t());
      bound[i - 1] = f.get_si();
    }
    std::vector<Int> c(r, 0);
    for (;;) {
      AffineWeight mu = lambda_ - data_.from_root_coordinates(c);
      if (is_dominant(data_, mu)) out.push_back(mu);
      int i = 0;
      while (i < r && c[i] == bound[i]) c[i++] = 0;
      if (i == r) break;
      ++c[i];
    }
  }
  auto key = [&](const AffineWeight& mu) {
    auto c = *data_.root_coordinates(lambda_ - mu);
    Int c0 = data_.affine() ? c[0] : 0;
    return std::tuple(c0, height(c), mu);
  };
  std::sort(out.begin(), out.end(), [&](const auto& a, const auto& b) { return key(a) < key(b); });
  return out;
}

std::vector<std::pair<AffineWeight, Int>> MultiplicityTable::all_weights() {
  std::set<AffineWeight> seen{lambda_};
  std::vector<AffineWeight> frontier{lambda_};
  std::vector<std::pair<AffineWeight, Int>> out;
  while (!frontier.empty()) {
    std::vector<AffineWeight> next;
    for (const auto& mu : frontier) {
      out.emplace_back(mu, multiplicity(mu));
      for (int i : data_.nodes()) {
        AffineWeight nu = mu - data_.simple_root(i);
        if (seen.count(nu)) continue;
        if (!depth_ok(*data_.root_coordinates(lambda_ - nu))) continue;
        if (multiplicity(nu) == 0) continue;
        seen.insert(nu);
        next.push_back(nu);
      }
    }
    frontier = std::move(next);
  }
  auto key = [&](const AffineWeight& mu) {
    auto c = *data_.root_coordinates(lambda_ - mu);
    Int c0 = data_.affine() ? c[0] : 0;
    return std::tuple(c0, height(c), mu);
  };
  std::sort(out.begin(), out.end(), [&](const auto& a, const auto& b) { return key(a.first) < key(b.first); });
  return out;
}

Int weight_multiplicity(const CartanData& data, const AffineWeight& lambda, const AffineWeight& mu, Int depth) {
  if (lambda.level != mu.level) throw InvalidInput("lambda and mu must have the same level");
  MultiplicityTable t(data, lambda, depth);
  return t.multiplicity(mu);
}

QPolynomial string_q_character(const CartanData& data, const AffineWeight& lambda, const AffineWeight& mu_top,
                               Int depth) {
  if (!data.affine()) throw InvalidInput("strings need affine data");
  if (lambda.level != mu_top.level) throw InvalidInput("lambda and mu must have the same level");
  auto c = data.root_coordinates(lambda - mu_top);
  if (!c) return {};
  Int top = std::max<Int>((*c)[0], 0);
  MultiplicityTable t(data, lambda, top + depth);
  std::vector<mpz_class> coeffs;
  for (Int n = 0; n <= depth; ++n) coeffs.emplace_back(static_cast<long>(t.multiplicity(mu_top - n * data.delta())));
  return QPolynomial(std::move(coeffs));
}

AffineWeight maximal_lift(const CartanData& data, const AffineWeight& lambda, const std::vector<Int>& mu_bar,
                          Int depth) {
  if (!data.affine()) throw InvalidInput("lifts need affine data");
  AffineWeight mu(lambda.level, mu_bar, lambda.energy);
  if (!data.conforms(mu)) throw InvalidInput("weight has the wrong rank");
  if (!is_dominant(data, mu)) throw InvalidInput("finite weight is not dominant at level " + std::to_string(lambda.level));
  if (!data.root_coordinates(lambda - mu)) throw InvalidInput("finite weight is not congruent to lambda modulo the root lattice");
  MultiplicityTable t(data, lambda, depth);
  for (Int n = 0; n <= depth; ++n) {
    if (t.multiplicity(mu) != 0) return mu;
    mu -= data.delta();
  }
  throw DepthExceeded("no nonzero multiplicity within depth " + std::to_string(depth));
}

void write_multiplicity_csv(std::ostream& out, MultiplicityTable& table) {
  out << "level";
  for (int i = 1; i <= table.data().rank(); ++i) out << ",f" << i;
  out << ",energy,multiplicity\n";
  for (const auto& [mu, m] : table.all_weights()) {
    out << mu.level;
    for (Int x : mu.finite) out << ',' << x;
    out << ',' << mu.energy << ',' << m << '\n';
  }
}

}  // namespace kmq
