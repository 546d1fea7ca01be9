#pragma once

#include <algorithm>
#include <array>
#include <fstream>
#include <map>
#include <mutex>
#include <optional>
#include <shared_mutex>
#include <sstream>
#include <string>
#include <tuple>
#include <vector>

#include "superschur/integer.hpp"
#include "superschur/partition.hpp"

namespace superschur {

/// Number of permutations in S_n with cycle type rho: n! / prod_i (i^{a_i} a_i!).
inline Integer class_size(const Partition& rho) {
  Integer denom = 1;
  std::map<int, int> mult;
  for (int p : rho.parts()) ++mult[p];
  for (auto [part, count] : mult) {
    for (int c = 0; c < count; ++c) denom *= part;
    denom *= factorial(count);
  }
  return divide_exact(factorial(rho.size()), denom, "class_size");
}

/// Memoized symmetric-group characters and Kronecker coefficients.
///
/// Lookups take a shared lock and insertions a unique lock, so one cache may be
/// shared by concurrent workers. Values are computed outside the lock; two
/// workers racing on the same key both compute it and the first insert wins.
class KroneckerCache {
 public:
  KroneckerCache() = default;
  KroneckerCache(const KroneckerCache&) = delete;
  KroneckerCache& operator=(const KroneckerCache&) = delete;

  /// chi^lambda(rho) by Murnaghan-Nakayama border-strip removal on beta-sets.
  Integer character(const Partition& lambda, const Partition& rho) {
    if (lambda.size() != rho.size()) {
      throw InvalidArgument("character: |" + lambda.str() + "| != |" + rho.str() + "|");
    }
    if (lambda.empty()) return 1;
    {
      std::shared_lock lock(mutex_);
      if (auto it = characters_.find({lambda, rho}); it != characters_.end()) return it->second;
    }
    const int r = rho.first();
    const Partition rest(std::vector<int>(rho.parts().begin() + 1, rho.parts().end()));
    const int len = lambda.length();
    std::vector<int> beta(static_cast<std::size_t>(len));
    for (int i = 0; i < len; ++i) beta[static_cast<std::size_t>(i)] = lambda.at(i) + (len - 1 - i);

    Integer value = 0;
    for (int i = 0; i < len; ++i) {
      const int b = beta[static_cast<std::size_t>(i)];
      const int target = b - r;
      if (target < 0 || std::find(beta.begin(), beta.end(), target) != beta.end()) continue;
      int between = 0;
      for (int c : beta) {
        if (c > target && c < b) ++between;
      }
      std::vector<int> moved = beta;
      moved[static_cast<std::size_t>(i)] = target;
      std::sort(moved.begin(), moved.end(), std::greater<>());
      std::vector<int> parts(static_cast<std::size_t>(len));
      for (int j = 0; j < len; ++j) {
        parts[static_cast<std::size_t>(j)] = moved[static_cast<std::size_t>(j)] - (len - 1 - j);
      }
      const Integer sub = character(Partition(std::move(parts)), rest);
      value += (between % 2 == 0) ? sub : Integer(-sub);
    }
    std::unique_lock lock(mutex_);
    characters_.emplace(std::make_pair(lambda, rho), value);
    return value;
  }

  /// gamma^lambda_{mu,nu} = (1/n!) sum_rho |C_rho| chi^lambda chi^mu chi^nu.
  Integer kronecker(const Partition& lambda, const Partition& mu, const Partition& nu) {
    const int n = lambda.size();
    if (mu.size() != n || nu.size() != n) {
      throw InvalidArgument("kronecker: partitions of unequal size");
    }
    std::array<Partition, 3> key{lambda, mu, nu};
    std::sort(key.begin(), key.end());
    {
      std::shared_lock lock(mutex_);
      if (auto it = kronecker_.find(key); it != kronecker_.end()) return it->second;
    }
    Integer total = 0;
    for (const Partition& rho : classes(n)) {
      const Integer term = character(lambda, rho) * character(mu, rho) * character(nu, rho);
      if (term != 0) total += class_size(rho) * term;
    }
    const Integer value = divide_exact(total, factorial(n), "kronecker");
    if (value < 0) throw InternalError("kronecker: negative coefficient");
    std::unique_lock lock(mutex_);
    kronecker_.emplace(key, value);
    return value;
  }

  std::size_t character_entries() const {
    std::shared_lock lock(mutex_);
    return characters_.size();
  }
  std::size_t kronecker_entries() const {
    std::shared_lock lock(mutex_);
    return kronecker_.size();
  }

  /// Writes the cache as tab-separated lines:
  ///   chi  <lambda> <rho> <value>
  ///   kron <lambda> <mu> <nu> <value>
  /// with partitions in comma form (empty field for the empty partition).
  void save(const std::string& path) const {
    std::ofstream out(path);
    if (!out) throw InvalidArgument("cannot write cache file " + path);
    std::shared_lock lock(mutex_);
    for (const auto& [key, value] : characters_) {
      out << "chi\t" << key.first.str() << '\t' << key.second.str() << '\t' << value << '\n';
    }
    for (const auto& [key, value] : kronecker_) {
      out << "kron\t" << key[0].str() << '\t' << key[1].str() << '\t' << key[2].str() << '\t' << value
          << '\n';
    }
  }

  /// Merges entries from a file written by `save`. A missing file is not an error.
  void load(const std::string& path) {
    std::ifstream in(path);
    if (!in) return;
    std::string line;
    std::unique_lock lock(mutex_);
    while (std::getline(in, line)) {
      if (line.empty()) continue;
      std::vector<std::string> fields;
      std::stringstream ss(line);
      std::string field;
      while (std::getline(ss, field, '\t')) fields.push_back(field);
      if (!line.empty() && line.back() == '\t') fields.emplace_back();
      if (fields.size() == 4 && fields[0] == "chi") {
        characters_[{Partition::parse(fields[1]), Partition::parse(fields[2])}] = Integer(fields[3]);
      } else if (fields.size() == 5 && fields[0] == "kron") {
        std::array<Partition, 3> key{Partition::parse(fields[1]), Partition::parse(fields[2]),
                                     Partition::parse(fields[3])};
        std::sort(key.begin(), key.end());
        kronecker_[key] = Integer(fields[4]);
      } else {
        throw InvalidArgument("malformed cache line: " + line);
      }
    }
  }

 private:
  const std::vector<Partition>& classes(int n) {
    {
      std::shared_lock lock(mutex_);
      if (auto it = classes_.find(n); it != classes_.end()) return it->second;
    }
    auto all = enumerate(n);
    std::unique_lock lock(mutex_);
    return classes_.emplace(n, std::move(all)).first->second;
  }

  mutable std::shared_mutex mutex_;
  std::map<std::pair<Partition, Partition>, Integer> characters_;
  std::map<std::array<Partition, 3>, Integer> kronecker_;
  std::map<int, std::vector<Partition>> classes_;
};

/// Process-wide cache used by the convenience overloads.
inline KroneckerCache& default_cache() {
  static KroneckerCache cache;
  return cache;
}

/// m_lambda(k, l) = sum over mu in H(k, l), |mu| = |lambda|, of gamma^lambda_{mu,mu}.
inline Integer m_lambda(KroneckerCache& cache, const Partition& lambda, Hook h) {
  const int n = lambda.size();
  if (n == 0) return 1;
  Integer total = 0;
  for (const Partition& mu : enumerate(n, PartitionConstraints::within(h))) total += cache.kronecker(lambda, mu, mu);
  return total;
}

/// Multiplicity of chi^lambda in the restriction to S_{n} of sum_{mu in H} chi^mu (x) chi^mu on S_{n+1}.
inline Integer m_bar_lambda(KroneckerCache& cache, const Partition& lambda, Hook h) {
  Integer total = 0;
  for (const Partition& up : add_box_successors(lambda)) total += m_lambda(cache, up, h);
  return total;
}

inline Integer m_lambda(const Partition& lambda, Hook h) { return m_lambda(default_cache(), lambda, h); }
inline Integer m_bar_lambda(const Partition& lambda, Hook h) {
  return m_bar_lambda(default_cache(), lambda, h);
}

enum class Route { Character, Residue };

inline const char* route_name(Route r) { return r == Route::Character ? "character" : "residue"; }

/// The four multiplicities for one (lambda, k, l), each filled in by whichever route computed it.
struct MultiplicityRecord {
  Partition lambda;
  Hook hook;
  std::optional<Integer> m;
  std::optional<Integer> m_prime;
  std::optional<Integer> m_bar;
  std::optional<Integer> m_bar_prime;
  Route route = Route::Character;

  /// Every stored value is a multiplicity and must be nonnegative.
  bool consistent() const {
    for (const auto* v : {&m, &m_prime, &m_bar, &m_bar_prime}) {
      if (*v && **v < 0) return false;
    }
    return true;
  }
};

}  // namespace superschur
