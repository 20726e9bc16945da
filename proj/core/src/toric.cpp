#include "ricci_lab/toric.hpp"

#include "ricci_lab/errors.hpp"
#include "ricci_lab/smith.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

namespace ricci_lab::toric {

namespace {

Integer floor_mod(const Integer& a, const Integer& m) {
  Integer r = a % m;
  if (r < 0) r += m;
  return r;
}

Integer gcd(Integer a, Integer b) {
  if (a < 0) a = -a;
  if (b < 0) b = -b;
  while (b != 0) {
    Integer t = a % b;
    a = b;
    b = t;
  }
  return a;
}

Integer lcm(const Integer& a, const Integer& b) { return a / gcd(a, b) * b; }

std::vector<std::string> default_names(std::size_t spheres) {
  std::vector<std::string> names;
  for (std::size_t s = 1; s <= spheres; ++s) {
    names.push_back("u" + std::to_string(s));
    names.push_back("v" + std::to_string(s));
  }
  return names;
}

void check_stratum(const TorusWeightSystem& action, const VanishingStratum& stratum) {
  if (stratum.states.size() != action.spheres())
    throw DomainError("stratum has " + std::to_string(stratum.states.size()) + " spheres, action has " +
                      std::to_string(action.spheres()));
}

std::vector<long long> prime_factors(long long n) {
  std::vector<long long> primes;
  for (long long p = 2; p * p <= n; ++p)
    if (n % p == 0) {
      primes.push_back(p);
      while (n % p == 0) n /= p;
    }
  if (n > 1) primes.push_back(n);
  return primes;
}

}  // namespace

TorusWeightSystem::TorusWeightSystem(IntegerMatrix weights, std::vector<std::string> coordinate_names)
    : weights_(std::move(weights)), names_(std::move(coordinate_names)) {
  if (weights_.rows() == 0 || weights_.rows() % 2 != 0)
    throw DomainError("weight system needs two coordinate rows per sphere");
  if (weights_.cols() == 0) throw DomainError("weight system needs a torus of positive rank");
  if (names_.empty()) names_ = default_names(weights_.rows() / 2);
  if (names_.size() != weights_.rows()) throw DomainError("one coordinate label per weight row required");
}

std::vector<std::size_t> VanishingStratum::nonvanishing_rows() const {
  std::vector<std::size_t> rows;
  for (std::size_t s = 0; s < states.size(); ++s) {
    if (states[s] != SphereState::u_vanishes) rows.push_back(2 * s);
    if (states[s] != SphereState::v_vanishes) rows.push_back(2 * s + 1);
  }
  return rows;
}

std::size_t VanishingStratum::vanishing_count() const {
  return static_cast<std::size_t>(
      std::count_if(states.begin(), states.end(), [](SphereState s) { return s != SphereState::generic; }));
}

std::string VanishingStratum::to_string() const {
  std::string out;
  for (std::size_t s = 0; s < states.size(); ++s) {
    if (states[s] == SphereState::generic) continue;
    out += (states[s] == SphereState::u_vanishes ? "u" : "v") + std::to_string(s + 1) + "=";
  }
  return out.empty() ? "generic" : out + "0";
}

Integer FiniteAbelianGroup::order() const {
  Integer n = 1;
  for (const auto& d : invariant_factors) n *= d;
  return n;
}

std::string FiniteAbelianGroup::to_string() const {
  if (trivial()) return "1";
  std::vector<std::string> parts;
  for (const auto& d : invariant_factors) parts.push_back("Z_" + d.str());
  if (free_rank > 0) parts.push_back("T^" + std::to_string(free_rank));
  std::string out = parts.front();
  for (std::size_t i = 1; i < parts.size(); ++i) out += " × " + parts[i];
  return out;
}

TorusPoint TorusPoint::canonical(std::vector<Integer> numerators, Integer denominator) {
  if (denominator <= 0) throw DomainError("torus point denominator must be positive");
  for (auto& a : numerators) a = floor_mod(a, denominator);
  Integer g = denominator;
  for (const auto& a : numerators) g = gcd(g, a);
  for (auto& a : numerators) a /= g;
  return TorusPoint{std::move(numerators), denominator / g};
}

TorusPoint TorusPoint::operator+(const TorusPoint& rhs) const {
  if (numerators.size() != rhs.numerators.size()) throw DomainError("torus points of different rank");
  Integer den = lcm(denominator, rhs.denominator);
  std::vector<Integer> num(numerators.size());
  for (std::size_t i = 0; i < num.size(); ++i)
    num[i] = numerators[i] * (den / denominator) + rhs.numerators[i] * (den / rhs.denominator);
  return canonical(std::move(num), den);
}

bool TorusPoint::operator==(const TorusPoint& rhs) const {
  return denominator == rhs.denominator && numerators == rhs.numerators;
}

bool TorusPoint::operator<(const TorusPoint& rhs) const {
  if (denominator != rhs.denominator) return denominator < rhs.denominator;
  return std::lexicographical_compare(numerators.begin(), numerators.end(), rhs.numerators.begin(),
                                      rhs.numerators.end());
}

bool TorusPoint::is_identity() const {
  return std::all_of(numerators.begin(), numerators.end(), [](const Integer& a) { return a == 0; });
}

std::string TorusPoint::to_string() const {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < numerators.size(); ++i) {
    if (i) os << ", ";
    Integer g = gcd(numerators[i], denominator);
    if (numerators[i] == 0)
      os << 0;
    else if (denominator / g == 1)
      os << numerators[i] / g;
    else
      os << numerators[i] / g << '/' << denominator / g;
  }
  os << ')';
  return os.str();
}

std::string TorusPoint::roots_of_unity() const {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < numerators.size(); ++i) {
    if (i) os << ", ";
    Integer g = gcd(numerators[i], denominator);
    Integer a = numerators[i] / g;
    Integer n = denominator / g;
    if (a == 0)
      os << 1;
    else if (n == 2)
      os << -1;
    else
      os << "e^(2πi·" << a << '/' << n << ')';
  }
  os << ')';
  return os.str();
}

FiniteAbelianGroup torus_kernel(const IntegerMatrix& a) {
  SmithDecomposition s = smith_normal_form(a);
  FiniteAbelianGroup g;
  g.free_rank = a.cols() - s.rank();
  for (const auto& d : s.diagonal())
    if (d > 1) g.invariant_factors.push_back(d);
  return g;
}

std::vector<TorusPoint> kernel_elements(const IntegerMatrix& a) {
  SmithDecomposition s = smith_normal_form(a);
  const std::size_t k = a.cols();
  if (s.rank() < k) throw DomainError("kernel has positive dimension; elements are not enumerable");
  std::vector<Integer> d = s.diagonal();
  Integer den = 1;
  for (const auto& x : d) den = lcm(den, x);

  std::set<TorusPoint> elements;
  std::vector<Integer> digits(k, 0);
  for (;;) {
    // theta = V * (digits_i / d_i)
    std::vector<Integer> num(k, 0);
    for (std::size_t i = 0; i < k; ++i)
      for (std::size_t j = 0; j < k; ++j) num[i] += s.V(i, j) * digits[j] * (den / d[j]);
    elements.insert(TorusPoint::canonical(std::move(num), den));
    std::size_t pos = 0;
    while (pos < k) {
      if (++digits[pos] < d[pos]) break;
      digits[pos] = 0;
      ++pos;
    }
    if (pos == k) break;
  }
  return {elements.begin(), elements.end()};
}

FiniteAbelianGroup stratum_stabilizer(const TorusWeightSystem& action, const VanishingStratum& stratum) {
  check_stratum(action, stratum);
  return torus_kernel(action.weights().select_rows(stratum.nonvanishing_rows()));
}

std::vector<TorusPoint> stratum_stabilizer_elements(const TorusWeightSystem& action,
                                                    const VanishingStratum& stratum) {
  check_stratum(action, stratum);
  return kernel_elements(action.weights().select_rows(stratum.nonvanishing_rows()));
}

std::vector<StratumReport> freeness_scan(const TorusWeightSystem& action) {
  const std::size_t s = action.spheres();
  std::vector<StratumReport> out;
  std::vector<int> code(s, 0);
  for (;;) {
    VanishingStratum stratum;
    for (int c : code) stratum.states.push_back(static_cast<SphereState>(c));
    out.push_back({stratum, stratum_stabilizer(action, stratum)});
    // sphere 1 is the most significant digit
    std::size_t pos = s;
    while (pos > 0) {
      if (++code[pos - 1] < 3) break;
      code[pos - 1] = 0;
      --pos;
    }
    if (pos == 0) break;
  }
  return out;
}

std::vector<StratumReport> nontrivial_strata(const TorusWeightSystem& action) {
  std::vector<StratumReport> all = freeness_scan(action);
  std::vector<StratumReport> out;
  for (auto& r : all)
    if (!r.stabilizer.trivial()) out.push_back(std::move(r));
  return out;
}

bool acts_freely(const TorusWeightSystem& action) { return nontrivial_strata(action).empty(); }

FiniteAbelianGroup group_from_elements(const std::vector<TorusPoint>& elements) {
  FiniteAbelianGroup g;
  const long long order = static_cast<long long>(elements.size());
  if (order <= 1) return g;

  // exps[p] holds the exponents of the cyclic p-factors, largest first.
  std::map<long long, std::vector<int>> exps;
  for (long long p : prime_factors(order)) {
    std::vector<long long> torsion_counts{1};
    Integer pj = 1;
    for (;;) {
      pj *= p;
      long long count = 0;
      for (const auto& e : elements) {
        bool killed = true;
        for (const auto& a : e.numerators)
          if ((a * pj) % e.denominator != 0) {
            killed = false;
            break;
          }
        if (killed) ++count;
      }
      if (count == torsion_counts.back()) break;
      torsion_counts.push_back(count);
    }
    // at_least[j] = number of cyclic factors of order >= p^(j+1)
    std::vector<int> at_least;
    for (std::size_t j = 1; j < torsion_counts.size(); ++j) {
      long long ratio = torsion_counts[j] / torsion_counts[j - 1];
      int e = 0;
      while (ratio > 1) {
        ratio /= p;
        ++e;
      }
      at_least.push_back(e);
    }
    std::vector<int> factor_exponents;
    for (std::size_t j = at_least.size(); j-- > 0;) {
      int exactly = at_least[j] - (j + 1 < at_least.size() ? at_least[j + 1] : 0);
      for (int c = 0; c < exactly; ++c) factor_exponents.push_back(static_cast<int>(j + 1));
    }
    exps[p] = factor_exponents;
  }
  std::size_t factors = 0;
  for (const auto& [p, list] : exps) factors = std::max(factors, list.size());
  std::vector<Integer> inv;
  for (std::size_t i = 0; i < factors; ++i) {
    Integer d = 1;
    for (const auto& [p, list] : exps)
      if (i < list.size())
        for (int e = 0; e < list[i]; ++e) d *= p;
    inv.push_back(d);
  }
  std::reverse(inv.begin(), inv.end());
  g.invariant_factors = std::move(inv);
  return g;
}

BruteForceStabilizer brute_force_stabilizer(const TorusWeightSystem& action, const VanishingStratum& stratum,
                                            int n_max) {
  check_stratum(action, stratum);
  if (n_max < 2) throw DomainError("brute_force_stabilizer needs n_max >= 2");
  IntegerMatrix rows = action.weights().select_rows(stratum.nonvanishing_rows());
  const std::size_t k = rows.cols();
  BruteForceStabilizer out;
  if (rows.rank() < k) {
    out.determinate = false;
    out.group.free_rank = k - rows.rank();
    return out;
  }

  std::vector<std::vector<long long>> w(rows.rows(), std::vector<long long>(k));
  for (std::size_t i = 0; i < rows.rows(); ++i)
    for (std::size_t j = 0; j < k; ++j) w[i][j] = static_cast<long long>(rows(i, j));

  std::set<TorusPoint> found;
  for (long long n = 1; n <= n_max; ++n) {
    std::vector<long long> a(k, 0);
    for (;;) {
      bool fixed = true;
      for (const auto& row : w) {
        long long s = 0;
        for (std::size_t j = 0; j < k; ++j) s += row[j] * a[j];
        if (s % n != 0) {
          fixed = false;
          break;
        }
      }
      if (fixed) {
        std::vector<Integer> num(a.begin(), a.end());
        found.insert(TorusPoint::canonical(std::move(num), n));
      }
      std::size_t pos = 0;
      while (pos < k) {
        if (++a[pos] < n) break;
        a[pos] = 0;
        ++pos;
      }
      if (pos == k) break;
    }
  }
  // Close under addition so the result is the generated subgroup.
  std::vector<TorusPoint> frontier(found.begin(), found.end());
  while (!frontier.empty()) {
    std::vector<TorusPoint> next;
    std::vector<TorusPoint> snapshot(found.begin(), found.end());
    for (const auto& x : frontier)
      for (const auto& y : snapshot) {
        TorusPoint z = x + y;
        if (found.insert(z).second) next.push_back(z);
      }
    frontier = std::move(next);
  }
  out.determinate = true;
  out.elements.assign(found.begin(), found.end());
  out.group = group_from_elements(out.elements);
  return out;
}

TorusWeightSystem vertex_cut_action() {
  return TorusWeightSystem(IntegerMatrix{{1, 2, 0}, {-1, 0, 0}, {0, 1, 2}, {0, -1, 0}, {-1, 0, 1}, {0, 0, -1}});
}

TorusWeightSystem edge_cut_action() {
  return TorusWeightSystem(IntegerMatrix{{1, 0, 0}, {1, 1, -1}, {0, 1, -1}, {-1, 1, 0}, {-1, 1, 1}, {0, 0, 1}});
}

TorusWeightSystem hopf_diagonal_action(std::size_t spheres) {
  IntegerMatrix w(2 * spheres, spheres);
  for (std::size_t s = 0; s < spheres; ++s) {
    w(2 * s, s) = 1;
    w(2 * s + 1, s) = 1;
  }
  return TorusWeightSystem(std::move(w));
}

}  // namespace ricci_lab::toric
