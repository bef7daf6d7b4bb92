#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "grothkit/permutation.hpp"
#include "grothkit/polynomial.hpp"

namespace grothkit {

enum class Tile : std::uint8_t { SEElbow, NWElbow, Horizontal, Vertical, Crossing, Empty };

/// ASCII form: r j - | + .
char tile_char(Tile t);
Tile tile_from_char(char ch);

/// An n x n tile grid that has passed validation. Rows and columns are
/// 1-based with row 1 at the top; pipe i enters from the south in column i.
class BumplessPipeDream {
 public:
  /// Validates edges and boundary, then traces. Throws InvalidGrid.
  BumplessPipeDream(int n, std::vector<Tile> tiles);
  static BumplessPipeDream from_rows(const std::vector<std::string>& rows);

  int size() const { return n_; }
  Tile at(int row, int column) const { return tiles_[(row - 1) * n_ + (column - 1)]; }
  const std::vector<Tile>& tiles() const { return tiles_; }
  const Permutation& trace() const { return trace_; }

  /// Row-major tile characters; the identity of a BPD.
  std::string encoding() const;
  std::vector<std::string> rows() const;
  std::string render() const;

  std::vector<Cell> cells_of(Tile kind) const;
  std::vector<Cell> empty_cells() const { return cells_of(Tile::Empty); }
  std::vector<Cell> nw_elbows() const { return cells_of(Tile::NWElbow); }

  /// Cells visited by pipe `label`, from its south entry to its east exit.
  std::vector<Cell> pipe_route(int label) const;

  friend bool operator==(const BumplessPipeDream& a, const BumplessPipeDream& b) {
    return a.n_ == b.n_ && a.tiles_ == b.tiles_;
  }
  friend bool operator<(const BumplessPipeDream& a, const BumplessPipeDream& b) {
    return a.encoding() < b.encoding();
  }

 private:
  int n_;
  std::vector<Tile> tiles_;
  Permutation trace_;
};

/// Follows every pipe through a grid, reading a repeated crossing of the same
/// pair as a bump. Throws InvalidGrid on edge or boundary violations.
Permutation trace_permutation(int n, const std::vector<Tile>& tiles);

BumplessPipeDream rothe_bpd(const Permutation& w);

std::vector<BumplessPipeDream> droops(const BumplessPipeDream& p);
std::vector<BumplessPipeDream> k_droops(const BumplessPipeDream& p);

inline constexpr int kDefaultBpdBound = 6;
inline constexpr int kBruteForceBound = 6;

/// Closure of the Rothe BPD under droops and K-theoretic droops, sorted by
/// encoding. Throws BoundExceeded when n > bound.
std::vector<BumplessPipeDream> enumerate_bpds(const Permutation& w, int bound = kDefaultBpdBound);

/// Closure under ordinary droops only.
std::vector<BumplessPipeDream> enumerate_droop_closure(const Permutation& w,
                                                        int bound = kDefaultBpdBound);

/// Independent oracle: every valid grid whose trace is w, by a column sweep
/// over edge states. Sorted by encoding; n <= 6.
std::vector<BumplessPipeDream> enumerate_bpds_bruteforce(const Permutation& w);

/// Every valid n x n grid regardless of trace; n <= 5.
std::vector<BumplessPipeDream> enumerate_all_grids(int n);

Polynomial weight_single(const BumplessPipeDream& p);
Polynomial weight_double(const BumplessPipeDream& p);

}  // namespace grothkit
