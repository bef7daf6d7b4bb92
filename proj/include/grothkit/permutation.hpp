#pragma once

#include <compare>
#include <cstddef>
#include <functional>
#include <iterator>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace grothkit {

/// A permutation of {1..n} in one-line notation. Positions and values are
/// 1-based everywhere in the public interface.
class Permutation {
 public:
  Permutation() = default;
  explicit Permutation(std::vector<int> one_line);
  Permutation(std::initializer_list<int> one_line);

  static Permutation identity(int n);
  static Permutation longest(int n);

  /// Digits when n <= 9 ("58326147"), comma-separated otherwise.
  static Permutation parse(std::string_view text);

  int size() const { return static_cast<int>(entries_.size()); }
  int operator()(int position) const { return entries_[position - 1]; }
  int inverse_at(int value) const { return inverse_[value - 1]; }
  std::span<const int> one_line() const { return entries_; }

  Permutation inverse() const;
  /// w * s_i: swaps the entries in positions i and i+1.
  Permutation swap_positions(int i) const;

  std::string to_string() const;

  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend auto operator<=>(const Permutation& a, const Permutation& b) {
    return a.entries_ <=> b.entries_;
  }

 private:
  std::vector<int> entries_;
  std::vector<int> inverse_;
};

struct PermutationHash {
  std::size_t operator()(const Permutation& w) const noexcept;
};

struct Cell {
  int row = 0;
  int column = 0;
  friend auto operator<=>(const Cell&, const Cell&) = default;
};

struct Diagram {
  int n = 0;
  std::vector<Cell> cells;  // sorted row-major

  bool contains(Cell c) const;
  std::size_t size() const { return cells.size(); }
};

int length(const Permutation& w);
std::vector<int> lehmer_code(const Permutation& w);
bool is_dominant(const Permutation& w);

/// Throws InvalidArgument when the pattern is longer than w.
bool contains_pattern(const Permutation& w, const Permutation& pattern);

const std::vector<Permutation>& grothendieck_zero_one_patterns();
const std::vector<Permutation>& schubert_zero_one_patterns();

bool avoids_zero_one_patterns(const Permutation& w);
bool avoids_schubert_zero_one_patterns(const Permutation& w);

Diagram rothe_diagram(const Permutation& w);

/// Lexicographic stream over S_n. Single-pass, single consumer.
class SymmetricGroup {
 public:
  class iterator {
   public:
    using iterator_category = std::input_iterator_tag;
    using value_type = Permutation;
    using difference_type = std::ptrdiff_t;
    using pointer = const Permutation*;
    using reference = const Permutation&;

    iterator() = default;
    const Permutation& operator*() const { return current_; }
    const Permutation* operator->() const { return &current_; }
    iterator& operator++();
    void operator++(int) { ++*this; }
    friend bool operator==(const iterator& a, const iterator& b) { return a.done_ == b.done_; }

   private:
    friend class SymmetricGroup;
    explicit iterator(int n);
    std::vector<int> buffer_;
    Permutation current_;
    bool done_ = true;
  };

  explicit SymmetricGroup(int n);
  iterator begin() const { return iterator(n_); }
  iterator end() const { return iterator(); }

 private:
  int n_;
};

SymmetricGroup enumerate_sn(int n);
std::vector<Permutation> all_permutations(int n);

}  // namespace grothkit
