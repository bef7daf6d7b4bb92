#include "grothkit/zeroone.hpp"

#include <algorithm>
#include <bit>
#include <set>

#include "grothkit/bpd.hpp"
#include "grothkit/engines.hpp"

namespace grothkit {

CoefficientCheck is_zero_one_by_coefficients(const Polynomial& f, bool allow_negative) {
  CoefficientCheck out;
  for (const auto& [e, c] : f.terms()) {
    const bool ok = c == 1 || (allow_negative && c == -1);
    if (!ok) {
      out.zero_one = false;
      out.witness = e;
      out.coefficient = c;
      return out;
    }
  }
  return out;
}

namespace {

ClassifyVerdict make_verdict(const Permutation& w, bool by_patterns, const CoefficientCheck& check) {
  ClassifyVerdict v;
  v.w = w;
  v.by_patterns = by_patterns;
  v.by_coefficients = check.zero_one;
  v.witness = check.witness;
  v.witness_coefficient = check.coefficient;
  return v;
}

}  // namespace

ClassifyVerdict classify_groth(const Permutation& w) {
  return make_verdict(w, avoids_zero_one_patterns(w),
                      is_zero_one_by_coefficients(grothendieck_dd(w, Variant::Single), true));
}

ClassifyVerdict classify_schubert(const Permutation& w) {
  return make_verdict(w, avoids_schubert_zero_one_patterns(w),
                      is_zero_one_by_coefficients(schubert_dd(w, Variant::Single), false));
}

// ---------------------------------------------------------------------------
// Factors.

namespace {

ExponentVector monomial_in(const VariableSpace& space, std::initializer_list<std::pair<int, int>> powers) {
  ExponentVector e(space.size());
  for (auto [slot, power] : powers) e.set(slot, e[slot] + power);
  return e;
}

// Sum over nonempty subsets S of the given slots of sign(|S|) * prod x_S.
Polynomial subset_sum(const VariableSpace& space, const std::vector<int>& slots, bool alternate) {
  Polynomial out(space);
  const std::size_t count = slots.size();
  for (std::uint32_t mask = 1; mask < (1u << count); ++mask) {
    ExponentVector e(space.size());
    int size = 0;
    for (std::size_t b = 0; b < count; ++b) {
      if (mask & (1u << b)) {
        e.set(slots[b], 1);
        ++size;
      }
    }
    out.add_term(e, alternate && size % 2 == 0 ? Integer(-1) : Integer(1));
  }
  return out;
}

}  // namespace

Polynomial factor_F(int k, int p, bool signed_form, const VariableSpace& space) {
  if (k < 1) throw InvalidArgument("factor F needs k >= 1");
  const int u = space.x_slot(p);
  const int v = space.x_slot(p + 1);
  Polynomial out(space);
  for (int t = 0; t <= k; ++t) out.add_term(monomial_in(space, {{u, t}, {v, k - t}}), 1);
  for (int s = 1; s <= k; ++s) {
    out.add_term(monomial_in(space, {{u, s}, {v, k + 1 - s}}), signed_form ? -1 : 1);
  }
  return out;
}

Polynomial factor_F(int k, int p, bool signed_form) {
  return factor_F(k, p, signed_form, VariableSpace::plain(p + 1));
}

Polynomial factor_G(int l, int r, bool signed_form, const VariableSpace& space) {
  if (l < 1) throw InvalidArgument("factor G needs l >= 1");
  if (l > 20) throw InvalidArgument("factor G window too large");
  std::vector<int> slots;
  for (int i = r; i <= r + l; ++i) slots.push_back(space.x_slot(i));
  return subset_sum(space, slots, signed_form);
}

Polynomial factor_G(int l, int r, bool signed_form) {
  return factor_G(l, r, signed_form, VariableSpace::plain(r + l));
}

Polynomial factor_F_double(int k, int p, int i, const VariableSpace& space) {
  if (k < 1) throw InvalidArgument("double factor F needs k >= 1");
  const int u = space.x_slot(p);
  const int v = space.x_slot(p + 1);
  std::vector<int> ys;
  for (int j = i; j <= i + k; ++j) ys.push_back(space.y_slot(j));
  Polynomial out(space);
  for (int t = 0; t <= k; ++t) {
    Polynomial h(space);
    for (int a = 0; a <= k - t; ++a) h.add_term(monomial_in(space, {{u, a}, {v, k - t - a}}), 1);
    // e_t over the y window.
    Polynomial e(space);
    for (std::uint32_t mask = 0; mask < (1u << ys.size()); ++mask) {
      if (std::popcount(mask) != t) continue;
      ExponentVector m(space.size());
      for (std::size_t b = 0; b < ys.size(); ++b)
        if (mask & (1u << b)) m.set(ys[b], 1);
      e.add_term(m, 1);
    }
    out += h * e;
  }
  return out;
}

Polynomial factor_F_double(int k, int p, int i) {
  const int n = std::max(p + 1, i + k);
  return factor_F_double(k, p, i, VariableSpace::dual(n));
}

Polynomial factor_G_double(int l, int r, int j, const VariableSpace& space) {
  if (l < 1) throw InvalidArgument("double factor G needs l >= 1");
  Polynomial out(space);
  for (int i = r; i <= r + l; ++i) out += Polynomial::x(space, i);
  for (int i = j; i <= j + l; ++i) out += Polynomial::y(space, i);
  return out;
}

Polynomial factor_G_double(int l, int r, int j) {
  const int n = std::max(r + l, j + l);
  return factor_G_double(l, r, j, VariableSpace::dual(n));
}

// ---------------------------------------------------------------------------
// Local structures.

std::vector<int> LocalStructure::x_window() const {
  if (kind == StructureKind::A) return {row, row + 1};
  std::vector<int> out;
  for (int i = row; i <= row + size; ++i) out.push_back(i);
  return out;
}

namespace {

std::set<Cell> droop_targets(const Permutation& w) {
  std::set<Cell> out;
  for (const BumplessPipeDream& p : droops(rothe_bpd(w))) {
    for (const Cell& c : p.nw_elbows()) out.insert(c);
  }
  return out;
}

// Pipes i < q with their elbow row above p whose rectangle down to the box
// holds no other diagram cell.
int northwest_pipe_count(const Permutation& w, const Diagram& d, Cell box) {
  int count = 0;
  for (int i = 1; i < box.column; ++i) {
    const int row = w.inverse_at(i);
    if (row >= box.row) continue;
    bool clear = true;
    for (const Cell& c : d.cells) {
      if (c == box) continue;
      if (c.row > row && c.row <= box.row && c.column > i && c.column <= box.column) {
        clear = false;
        break;
      }
    }
    if (clear) ++count;
  }
  return count;
}

}  // namespace

std::vector<LocalStructure> local_structures(const Permutation& w) {
  if (!avoids_zero_one_patterns(w)) {
    throw NotZeroOne(w.to_string() + " contains one of the six zero-one patterns");
  }
  const int n = w.size();
  const Diagram d = rothe_diagram(w);
  const std::set<Cell> targets = droop_targets(w);
  std::vector<LocalStructure> out;
  std::set<Cell> used;

  for (int p = 1; p < n; ++p) {
    const int c = w(p);
    LocalStructure a;
    a.kind = StructureKind::A;
    a.row = p;
    a.column = c;
    for (int q = c + 1; q <= n && d.contains({p + 1, q}); ++q) a.cells.push_back({p + 1, q});
    a.size = static_cast<int>(a.cells.size());
    if (a.size >= 2) {
      used.insert(a.cells.begin(), a.cells.end());
      out.push_back(std::move(a));
    }
  }

  for (const Cell& box : d.cells) {
    if (!targets.contains(box) || used.contains(box)) continue;
    const int l = northwest_pipe_count(w, d, box);
    if (l < 1) {
      throw FactorizationMismatch("droopable cell without a northwest pipe in " + w.to_string());
    }
    LocalStructure b;
    b.kind = StructureKind::B;
    b.size = l;
    b.row = box.row - l;
    b.column = box.column - l;
    b.cells = {box};
    used.insert(box);
    out.push_back(std::move(b));
  }

  std::sort(out.begin(), out.end(),
            [](const LocalStructure& x, const LocalStructure& y) { return x.row < y.row; });
  return out;
}

std::vector<Cell> undroopable_cells(const Permutation& w) {
  const std::set<Cell> targets = droop_targets(w);
  std::vector<Cell> out;
  for (const Cell& c : rothe_diagram(w).cells)
    if (!targets.contains(c)) out.push_back(c);
  return out;
}

namespace {

std::vector<Cell> remaining_cells(const Diagram& d, const std::vector<LocalStructure>& structures) {
  std::set<Cell> used;
  for (const LocalStructure& s : structures) used.insert(s.cells.begin(), s.cells.end());
  std::vector<Cell> out;
  for (const Cell& c : d.cells)
    if (!used.contains(c)) out.push_back(c);
  return out;
}

bool windows_disjoint(const std::vector<LocalStructure>& structures) {
  std::set<int> seen;
  for (const LocalStructure& s : structures) {
    for (int i : s.x_window()) {
      if (!seen.insert(i).second) return false;
    }
  }
  return true;
}

Polynomial product_of(const VariableSpace& space, const std::vector<Polynomial>& factors) {
  Polynomial out = Polynomial::one(space);
  for (const Polynomial& f : factors) out *= f;
  return out;
}

Polynomial divide_or_mismatch(const Polynomial& f, const Polynomial& g, const Permutation& w) {
  try {
    return exact_divide(f, g);
  } catch (const NotDivisible&) {
    throw FactorizationMismatch("factors do not divide the polynomial of " + w.to_string());
  }
}

}  // namespace

FactorizationReport factorize(const Permutation& w) {
  const int n = w.size();
  const VariableSpace space = VariableSpace::plain(n);
  FactorizationReport report;
  report.w = w;
  report.structures = local_structures(w);
  const Diagram d = rothe_diagram(w);
  report.lambda_cells = remaining_cells(d, report.structures);

  for (const LocalStructure& s : report.structures) {
    report.factors.push_back(s.kind == StructureKind::A ? factor_F(s.size, s.row, false, space)
                                                        : factor_G(s.size, s.row, false, space));
  }
  const Polynomial quotient = divide_or_mismatch(g_tilde(w), product_of(space, report.factors), w);
  if (quotient.term_count() != 1 || quotient.terms().begin()->second != 1) {
    throw FactorizationMismatch("quotient for " + w.to_string() + " is not a monomial: " +
                                to_text(quotient));
  }
  report.lambda = quotient.terms().begin()->first;

  ExponentVector geometric(n);
  for (const Cell& c : report.lambda_cells) geometric.set(c.row - 1, geometric[c.row - 1] + 1);
  if (!(geometric == report.lambda)) {
    throw FactorizationMismatch("northwest cells of " + w.to_string() +
                                " disagree with the divided-out monomial");
  }
  report.disjoint_windows = windows_disjoint(report.structures);
  report.product_verified = true;
  return report;
}

FactorizationReport factorize_double_schubert(const Permutation& w) {
  const int n = w.size();
  const VariableSpace space = VariableSpace::dual(n);
  FactorizationReport report;
  report.w = w;
  report.structures = local_structures(w);
  report.lambda_cells = remaining_cells(rothe_diagram(w), report.structures);
  report.lambda = ExponentVector(n);
  for (const Cell& c : report.lambda_cells) {
    report.lambda.set(c.row - 1, report.lambda[c.row - 1] + 1);
  }

  for (const LocalStructure& s : report.structures) {
    report.factors.push_back(s.kind == StructureKind::A
                                 ? factor_F_double(s.size, s.row, s.column, space)
                                 : factor_G_double(s.size, s.row, s.column, space));
  }
  Polynomial binomials = Polynomial::one(space);
  for (const Cell& c : report.lambda_cells) {
    binomials *= Polynomial::x(space, c.row) + Polynomial::y(space, c.column);
  }
  const Polynomial quotient =
      divide_or_mismatch(s_tilde_double(w), product_of(space, report.factors), w);
  if (!(quotient == binomials)) {
    throw FactorizationMismatch("double Schubert quotient for " + w.to_string() +
                                " is not the northwest binomial product");
  }
  report.disjoint_windows = windows_disjoint(report.structures);
  report.product_verified = true;
  return report;
}

}  // namespace grothkit
