#pragma once

#include <algorithm>
#include <charconv>
#include <compare>
#include <cstddef>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "superschur/integer.hpp"

namespace superschur {

/// An integer partition: weakly decreasing positive parts. The empty partition is the default.
///
/// Parts beyond the length read as zero, so `at(i)` is total on all i >= 0.
class Partition {
 public:
  Partition() = default;

  /// Trailing zeros are dropped; negative or increasing parts are rejected.
  explicit Partition(std::vector<int> parts) : parts_(std::move(parts)) {
    while (!parts_.empty() && parts_.back() == 0) parts_.pop_back();
    for (std::size_t i = 0; i < parts_.size(); ++i) {
      if (parts_[i] <= 0) throw InvalidArgument("partition parts must be positive");
      if (i > 0 && parts_[i] > parts_[i - 1]) {
        throw InvalidArgument("partition parts must be weakly decreasing");
      }
    }
  }
  Partition(std::initializer_list<int> parts) : Partition(std::vector<int>(parts)) {}

  /// Parses "3,2,1". The empty string and "∅" give the empty partition.
  static Partition parse(std::string_view text) {
    auto trim = [](std::string_view s) {
      while (!s.empty() && (s.front() == ' ' || s.front() == '(' || s.front() == '[')) s.remove_prefix(1);
      while (!s.empty() && (s.back() == ' ' || s.back() == ')' || s.back() == ']')) s.remove_suffix(1);
      return s;
    };
    text = trim(text);
    if (text.empty() || text == "∅") return {};
    std::vector<int> parts;
    while (true) {
      auto comma = text.find(',');
      auto token = trim(text.substr(0, comma));
      int value = 0;
      auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
      if (token.empty() || ec != std::errc() || ptr != token.data() + token.size()) {
        throw InvalidArgument("malformed partition text: '" + std::string(text) + "'");
      }
      parts.push_back(value);
      if (comma == std::string_view::npos) break;
      text.remove_prefix(comma + 1);
    }
    if (std::find(parts.begin(), parts.end(), 0) != parts.end()) {
      throw InvalidArgument("partition parts must be positive");
    }
    return Partition(std::move(parts));
  }

  /// Canonical comma form; empty string for the empty partition.
  std::string str() const {
    std::string out;
    for (std::size_t i = 0; i < parts_.size(); ++i) {
      if (i) out += ',';
      out += std::to_string(parts_[i]);
    }
    return out;
  }

  const std::vector<int>& parts() const { return parts_; }
  int length() const { return static_cast<int>(parts_.size()); }
  bool empty() const { return parts_.empty(); }
  int size() const {
    int n = 0;
    for (int p : parts_) n += p;
    return n;
  }
  /// Zero-based part access with the out-of-range-is-zero convention.
  int at(int i) const { return i >= 0 && i < length() ? parts_[static_cast<std::size_t>(i)] : 0; }
  int first() const { return at(0); }

  bool contains(const Partition& mu) const {
    if (mu.length() > length()) return false;
    for (int i = 0; i < mu.length(); ++i) {
      if (mu.at(i) > at(i)) return false;
    }
    return true;
  }

  friend auto operator<=>(const Partition&, const Partition&) = default;
  friend bool operator==(const Partition&, const Partition&) = default;

 private:
  std::vector<int> parts_;
};

struct PartitionHash {
  std::size_t operator()(const Partition& p) const noexcept {
    std::size_t h = 1469598103934665603ull;
    for (int x : p.parts()) h = (h ^ static_cast<std::size_t>(x)) * 1099511628211ull;
    return h;
  }
};

/// The k x l hook H(k, l): partitions with lambda_{k+1} <= l.
struct Hook {
  int k = 0;
  int l = 0;

  std::string str() const { return std::to_string(k) + "," + std::to_string(l); }
  /// The next smaller hook on the diagonal, (k-1, l-1); only meaningful when min(k, l) >= 1.
  Hook shrink() const { return {k - 1, l - 1}; }
  bool has_smaller() const { return k >= 1 && l >= 1; }

  friend auto operator<=>(const Hook&, const Hook&) = default;
  friend bool operator==(const Hook&, const Hook&) = default;

  static Hook parse(std::string_view text) {
    auto comma = text.find(',');
    if (comma == std::string_view::npos) throw InvalidArgument("hook must be written as K,L");
    auto parse_int = [&](std::string_view s) {
      while (!s.empty() && s.front() == ' ') s.remove_prefix(1);
      while (!s.empty() && s.back() == ' ') s.remove_suffix(1);
      int v = 0;
      auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
      if (s.empty() || ec != std::errc() || ptr != s.data() + s.size() || v < 0) {
        throw InvalidArgument("malformed hook text: '" + std::string(text) + "'");
      }
      return v;
    };
    return {parse_int(text.substr(0, comma)), parse_int(text.substr(comma + 1))};
  }
};

enum class HookClass { Outside, Atypical, Typical };

inline Partition conjugate(const Partition& lambda) {
  std::vector<int> out(static_cast<std::size_t>(lambda.first()), 0);
  for (int part : lambda.parts()) {
    for (int j = 0; j < part; ++j) ++out[static_cast<std::size_t>(j)];
  }
  return Partition(std::move(out));
}

inline bool is_self_conjugate(const Partition& lambda) { return conjugate(lambda) == lambda; }

/// lambda_k with lambda_0 read as +infinity, so every hook member with k = 0 is typical.
inline HookClass classify_hook(const Partition& lambda, Hook h) {
  if (lambda.at(h.k) > h.l) return HookClass::Outside;
  if (h.k == 0 || lambda.at(h.k - 1) >= h.l) return HookClass::Typical;
  return HookClass::Atypical;
}

inline bool in_hook(const Partition& lambda, Hook h) {
  return classify_hook(lambda, h) != HookClass::Outside;
}

inline bool is_typical(const Partition& lambda, Hook h) {
  return classify_hook(lambda, h) == HookClass::Typical;
}

/// Filters for `enumerate`; every engaged field must hold.
struct PartitionConstraints {
  std::optional<int> max_height;
  std::optional<Hook> in_hook;
  std::optional<Hook> typical;
  bool self_conjugate = false;

  static PartitionConstraints within(Hook h, bool self_conjugate_only = false) {
    PartitionConstraints c;
    c.in_hook = h;
    c.self_conjugate = self_conjugate_only;
    return c;
  }
  static PartitionConstraints typical_in(Hook h) {
    PartitionConstraints c;
    c.typical = h;
    return c;
  }

  bool accepts(const Partition& lambda) const {
    if (max_height && lambda.length() > *max_height) return false;
    if (in_hook && !superschur::in_hook(lambda, *in_hook)) return false;
    if (typical && !is_typical(lambda, *typical)) return false;
    if (self_conjugate && !is_self_conjugate(lambda)) return false;
    return true;
  }
};

namespace detail {
inline void enumerate_rec(int remaining, int max_part, std::vector<int>& cur,
                          const std::function<void(const std::vector<int>&)>& emit) {
  if (remaining == 0) {
    emit(cur);
    return;
  }
  for (int p = std::min(remaining, max_part); p >= 1; --p) {
    cur.push_back(p);
    enumerate_rec(remaining - p, p, cur, emit);
    cur.pop_back();
  }
}
}  // namespace detail

/// All partitions of n meeting `constraints`, in lexicographically descending order.
inline std::vector<Partition> enumerate(int n, const PartitionConstraints& constraints = {}) {
  if (n < 0) throw InvalidArgument("enumerate: n must be nonnegative");
  std::vector<Partition> out;
  std::vector<int> cur;
  detail::enumerate_rec(n, n, cur, [&](const std::vector<int>& parts) {
    Partition p(parts);
    if (constraints.accepts(p)) out.push_back(std::move(p));
  });
  return out;
}

/// Partitions of |lambda| + 1 obtained by adding one box, ordered by the row receiving it.
inline std::vector<Partition> add_box_successors(const Partition& lambda) {
  std::vector<Partition> out;
  for (int i = 0; i <= lambda.length(); ++i) {
    if (i == 0 || lambda.at(i - 1) > lambda.at(i)) {
      std::vector<int> parts = lambda.parts();
      if (i == lambda.length()) {
        parts.push_back(1);
      } else {
        ++parts[static_cast<std::size_t>(i)];
      }
      out.emplace_back(std::move(parts));
    }
  }
  return out;
}

/// Arm mu and conjugated leg nu of a typical partition around the k x l rectangle.
inline std::pair<Partition, Partition> typical_split(const Partition& lambda, Hook h) {
  if (!is_typical(lambda, h)) {
    throw InvalidArgument("typical_split: (" + lambda.str() + ") is not typical for hook " + h.str());
  }
  std::vector<int> mu;
  for (int i = 0; i < h.k; ++i) mu.push_back(lambda.at(i) - h.l);
  const Partition lc = conjugate(lambda);
  std::vector<int> nu;
  for (int j = 0; j < h.l; ++j) nu.push_back(lc.at(j) - h.k);
  return {Partition(std::move(mu)), Partition(std::move(nu))};
}

struct SquareSplit {
  Partition core;   ///< lambda intersected with the k x k square
  Partition right;  ///< rows 1..k, columns beyond k
  Partition below;  ///< conjugate of rows k+1, k+2, ...
};

inline SquareSplit square_split(const Partition& lambda, int k) {
  std::vector<int> core, right, below;
  for (int i = 0; i < k; ++i) {
    core.push_back(std::min(lambda.at(i), k));
    right.push_back(std::max(lambda.at(i) - k, 0));
  }
  for (int i = k; i < lambda.length(); ++i) below.push_back(lambda.at(i));
  return {Partition(std::move(core)), Partition(std::move(right)), conjugate(Partition(std::move(below)))};
}

}  // namespace superschur
