#pragma once

#include <algorithm>
#include <compare>
#include <numeric>
#include <string>
#include <string_view>
#include <vector>

#include "qeuler/error.hpp"

namespace qeuler {

/// Weakly decreasing list of positive parts; trailing zeros are not stored.
class Partition {
 public:
  Partition() = default;
  explicit Partition(std::vector<int> parts) : parts_(std::move(parts)) {
    while (!parts_.empty() && parts_.back() == 0) parts_.pop_back();
    for (std::size_t i = 0; i < parts_.size(); ++i)
      if (parts_[i] < 0 || (i > 0 && parts_[i] > parts_[i - 1]))
        throw InvalidShape("parts must be nonnegative and weakly decreasing");
  }

  const std::vector<int>& parts() const { return parts_; }
  std::size_t length() const { return parts_.size(); }
  bool empty() const { return parts_.empty(); }
  int size() const { return std::accumulate(parts_.begin(), parts_.end(), 0); }
  /// i-th part (0-based), zero past the end.
  int operator[](std::size_t i) const { return i < parts_.size() ? parts_[i] : 0; }

  bool fits_in(int rows, int cols) const {
    return static_cast<int>(parts_.size()) <= rows && (parts_.empty() || parts_.front() <= cols);
  }

  /// Parts padded with zeros to exactly `k` entries.
  std::vector<int> padded(std::size_t k) const {
    std::vector<int> v(k, 0);
    std::copy_n(parts_.begin(), std::min(k, parts_.size()), v.begin());
    return v;
  }

  /// "2,1"; the empty partition is "0".
  std::string label() const {
    if (parts_.empty()) return "0";
    std::string out;
    for (std::size_t i = 0; i < parts_.size(); ++i) out += (i ? "," : "") + std::to_string(parts_[i]);
    return out;
  }

  /// Inverse of label(); also accepts "" for the empty partition.
  static Partition parse(std::string_view text) {
    std::vector<int> parts;
    std::string current;
    auto flush = [&] {
      if (current.empty()) throw InvalidShape("malformed partition '" + std::string(text) + "'");
      parts.push_back(std::stoi(current));
      current.clear();
    };
    if (text.empty()) return {};
    for (char c : text) {
      if (c == ',') flush();
      else if (c >= '0' && c <= '9') current += c;
      else if (c != ' ' && c != '(' && c != ')') throw InvalidShape("malformed partition '" + std::string(text) + "'");
    }
    flush();
    return Partition(std::move(parts));
  }

  friend bool operator==(const Partition&, const Partition&) = default;
  friend auto operator<=>(const Partition&, const Partition&) = default;

 private:
  std::vector<int> parts_;
};

/// Order by size, then lexicographically.
inline bool size_then_lex(const Partition& a, const Partition& b) {
  if (a.size() != b.size()) return a.size() < b.size();
  return a < b;
}

}  // namespace qeuler
