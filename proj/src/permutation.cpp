#include "grothkit/permutation.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>

#include "grothkit/errors.hpp"

namespace grothkit {

Permutation::Permutation(std::vector<int> one_line) : entries_(std::move(one_line)) {
  const int n = size();
  inverse_.assign(n, 0);
  for (int i = 0; i < n; ++i) {
    const int v = entries_[i];
    if (v < 1 || v > n || inverse_[v - 1] != 0) {
      throw InvalidArgument("not a permutation of 1.." + std::to_string(n));
    }
    inverse_[v - 1] = i + 1;
  }
}

Permutation::Permutation(std::initializer_list<int> one_line)
    : Permutation(std::vector<int>(one_line)) {}

Permutation Permutation::identity(int n) {
  std::vector<int> e(n);
  std::iota(e.begin(), e.end(), 1);
  return Permutation(std::move(e));
}

Permutation Permutation::longest(int n) {
  std::vector<int> e(n);
  for (int i = 0; i < n; ++i) e[i] = n - i;
  return Permutation(std::move(e));
}

Permutation Permutation::parse(std::string_view text) {
  auto trim = [](std::string_view s) {
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) s.remove_suffix(1);
    return s;
  };
  text = trim(text);
  if (text.empty()) throw ParseError("empty permutation text");

  std::vector<int> entries;
  if (text.find(',') == std::string_view::npos) {
    for (char ch : text) {
      if (ch < '1' || ch > '9') {
        throw ParseError("invalid permutation digit '" + std::string(1, ch) + "'");
      }
      entries.push_back(ch - '0');
    }
  } else {
    std::size_t start = 0;
    while (start <= text.size()) {
      std::size_t stop = text.find(',', start);
      if (stop == std::string_view::npos) stop = text.size();
      const std::string_view field = trim(text.substr(start, stop - start));
      int value = 0;
      auto [ptr, ec] = std::from_chars(field.data(), field.data() + field.size(), value);
      if (field.empty() || ec != std::errc() || ptr != field.data() + field.size()) {
        throw ParseError("invalid permutation entry '" + std::string(field) + "'");
      }
      entries.push_back(value);
      start = stop + 1;
    }
  }
  try {
    return Permutation(std::move(entries));
  } catch (const InvalidArgument& e) {
    throw ParseError(std::string(e.what()) + ": '" + std::string(text) + "'");
  }
}

Permutation Permutation::inverse() const {
  return Permutation(inverse_);
}

Permutation Permutation::swap_positions(int i) const {
  if (i < 1 || i >= size()) throw InvalidArgument("swap position out of range");
  std::vector<int> e = entries_;
  std::swap(e[i - 1], e[i]);
  return Permutation(std::move(e));
}

std::string Permutation::to_string() const {
  std::string out;
  const bool compact = size() <= 9;
  for (int i = 0; i < size(); ++i) {
    if (!compact && i > 0) out += ',';
    out += std::to_string(entries_[i]);
  }
  return out;
}

std::size_t PermutationHash::operator()(const Permutation& w) const noexcept {
  std::size_t h = 0xcbf29ce484222325ull;
  for (int v : w.one_line()) {
    h ^= static_cast<std::size_t>(v);
    h *= 0x100000001b3ull;
  }
  return h;
}

bool Diagram::contains(Cell c) const {
  return std::binary_search(cells.begin(), cells.end(), c);
}

int length(const Permutation& w) {
  int inversions = 0;
  for (int i = 1; i <= w.size(); ++i)
    for (int j = i + 1; j <= w.size(); ++j)
      if (w(i) > w(j)) ++inversions;
  return inversions;
}

std::vector<int> lehmer_code(const Permutation& w) {
  std::vector<int> code(w.size(), 0);
  for (int i = 1; i <= w.size(); ++i)
    for (int j = i + 1; j <= w.size(); ++j)
      if (w(i) > w(j)) ++code[i - 1];
  return code;
}

bool is_dominant(const Permutation& w) {
  const std::vector<int> code = lehmer_code(w);
  return std::is_sorted(code.rbegin(), code.rend());
}

namespace {

// Extends a partial embedding of `pattern` into `w` one index at a time.
bool embed(std::span<const int> w, std::span<const int> pattern, std::vector<int>& chosen,
           std::size_t next_index) {
  const std::size_t depth = chosen.size();
  if (depth == pattern.size()) return true;
  const std::size_t remaining = pattern.size() - depth;
  for (std::size_t i = next_index; i + remaining <= w.size(); ++i) {
    const int value = w[i];
    bool consistent = true;
    for (std::size_t s = 0; s < depth; ++s) {
      if ((w[chosen[s]] < value) != (pattern[s] < pattern[depth])) {
        consistent = false;
        break;
      }
    }
    if (!consistent) continue;
    chosen.push_back(static_cast<int>(i));
    if (embed(w, pattern, chosen, i + 1)) return true;
    chosen.pop_back();
  }
  return false;
}

std::vector<Permutation> parse_all(std::initializer_list<const char*> texts) {
  std::vector<Permutation> out;
  for (const char* t : texts) out.push_back(Permutation::parse(t));
  return out;
}

}  // namespace

bool contains_pattern(const Permutation& w, const Permutation& pattern) {
  if (pattern.size() > w.size()) {
    throw InvalidArgument("pattern " + pattern.to_string() + " is longer than " + w.to_string());
  }
  std::vector<int> chosen;
  chosen.reserve(pattern.size());
  return embed(w.one_line(), pattern.one_line(), chosen, 0);
}

const std::vector<Permutation>& grothendieck_zero_one_patterns() {
  static const std::vector<Permutation> patterns =
      parse_all({"1432", "1342", "13254", "31524", "12534", "21534"});
  return patterns;
}

const std::vector<Permutation>& schubert_zero_one_patterns() {
  static const std::vector<Permutation> patterns =
      parse_all({"12543", "13254", "13524", "13542", "21543", "125364", "125634", "215364",
                 "215634", "315264", "315624", "315642"});
  return patterns;
}

namespace {

bool avoids_all(const Permutation& w, const std::vector<Permutation>& patterns) {
  for (const Permutation& p : patterns) {
    if (p.size() <= w.size() && contains_pattern(w, p)) return false;
  }
  return true;
}

}  // namespace

bool avoids_zero_one_patterns(const Permutation& w) {
  return avoids_all(w, grothendieck_zero_one_patterns());
}

bool avoids_schubert_zero_one_patterns(const Permutation& w) {
  return avoids_all(w, schubert_zero_one_patterns());
}

Diagram rothe_diagram(const Permutation& w) {
  Diagram d;
  d.n = w.size();
  for (int i = 1; i <= w.size(); ++i)
    for (int j = 1; j <= w.size(); ++j)
      if (w(i) > j && w.inverse_at(j) > i) d.cells.push_back({i, j});
  return d;
}

SymmetricGroup::SymmetricGroup(int n) : n_(n) {
  if (n < 1) throw InvalidArgument("symmetric group size must be positive");
}

SymmetricGroup::iterator::iterator(int n) : buffer_(n), done_(false) {
  std::iota(buffer_.begin(), buffer_.end(), 1);
  current_ = Permutation(buffer_);
}

SymmetricGroup::iterator& SymmetricGroup::iterator::operator++() {
  if (std::next_permutation(buffer_.begin(), buffer_.end())) {
    current_ = Permutation(buffer_);
  } else {
    done_ = true;
  }
  return *this;
}

SymmetricGroup enumerate_sn(int n) { return SymmetricGroup(n); }

std::vector<Permutation> all_permutations(int n) {
  std::vector<Permutation> out;
  for (const Permutation& w : enumerate_sn(n)) out.push_back(w);
  return out;
}

}  // namespace grothkit
