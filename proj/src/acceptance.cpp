#include "grothkit/acceptance.hpp"

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <random>
#include <sstream>

#include "grothkit/analysis.hpp"
#include "grothkit/bpd.hpp"
#include "grothkit/engines.hpp"
#include "grothkit/zeroone.hpp"

namespace grothkit {

namespace {

struct Outcome {
  bool pass = true;
  std::ostringstream detail;

  int failures = 0;

  // Keeps the first few reasons; the rest are only counted.
  void fail(const std::string& why) {
    if (pass) detail.str("");
    pass = false;
    ++failures;
    if (failures <= 5) detail << (failures > 1 ? "; " : "") << why;
    if (failures == 6) detail << "; ...";
  }
};

std::vector<Permutation> permutations_up_to(int n) {
  std::vector<Permutation> out;
  for (int k = 1; k <= n; ++k)
    for (const Permutation& w : enumerate_sn(k)) out.push_back(w);
  return out;
}

Polynomial paper_g1342_double() {
  const VariableSpace s = VariableSpace::dual(4);
  const Polynomial one = Polynomial::one(s);
  auto x = [&](int i) { return Polynomial::x(s, i); };
  auto y = [&](int j) { return Polynomial::y(s, j); };
  auto box = [&](int i, int j) { return x(i) + y(j) - x(i) * y(j); };
  auto elbow = [&](int i, int j) { return one - x(i) - y(j) + x(i) * y(j); };
  return box(2, 2) * box(3, 2) + box(1, 1) * elbow(2, 2) * box(3, 2) +
         box(1, 1) * box(2, 1) * elbow(3, 2);
}

void criterion_display(const AcceptanceOptions&, Outcome& o) {
  clear_engine_cache();
  const Permutation w = Permutation::parse("1342");
  const Polynomial expected = paper_g1342_double();
  const Polynomial bpd = grothendieck_bpd(w, Variant::Double);
  const Polynomial dd = grothendieck_dd(w, Variant::Double);
  if (!(bpd == expected)) o.fail("BPD engine differs from the displayed expansion");
  if (!(dd == expected)) o.fail("divided-difference engine differs from the displayed expansion");
  if (o.pass) o.detail << expected.term_count() << " terms match";
}

void criterion_bpd_sets(const AcceptanceOptions& options, Outcome& o) {
  const std::size_t count = enumerate_bpds(Permutation::parse("1342")).size();
  if (count != 3) o.fail("|BPD(1342)| = " + std::to_string(count));
  std::vector<Permutation> sample = all_permutations(4);
  std::vector<Permutation> s5 = all_permutations(5);
  std::mt19937 rng(20240611);
  std::shuffle(s5.begin(), s5.end(), rng);
  const std::size_t take = options.quick ? 5 : 20;
  sample.insert(sample.end(), s5.begin(), s5.begin() + take);
  long total = 0;
  for (const Permutation& w : sample) {
    const auto closure = enumerate_bpds(w);
    const auto brute = enumerate_bpds_bruteforce(w);
    total += static_cast<long>(brute.size());
    if (!(closure == brute)) {
      o.fail("closure and brute force differ for " + w.to_string() + " (" +
             std::to_string(closure.size()) + " vs " + std::to_string(brute.size()) + ")");
    }
  }
  if (o.pass) o.detail << "|BPD(1342)| = 3; " << sample.size() << " permutations, " << total << " BPDs agree";
}

void classify_sweep(const AcceptanceOptions& options, Outcome& o, bool groth) {
  int top = options.quick ? 4 : 6;
  if (groth && options.extended && !options.quick) top = 7;
  long checked = 0;
  long zero_one = 0;
  long disagreements = 0;
  for (const Permutation& w : permutations_up_to(top)) {
    const ClassifyVerdict v = groth ? classify_groth(w) : classify_schubert(w);
    ++checked;
    if (v.by_coefficients) ++zero_one;
    if (v.theorem_violation()) {
      ++disagreements;
      o.fail("disagreement at " + w.to_string());
    }
  }
  if (o.pass) {
    o.detail << checked << " permutations in S_1..S_" << top << ", " << zero_one << " zero-one, "
             << disagreements << " disagreements";
  }
}

void criterion_groth_patterns(const AcceptanceOptions& options, Outcome& o) { classify_sweep(options, o, true); }

void criterion_schubert_patterns(const AcceptanceOptions& options, Outcome& o) {
  classify_sweep(options, o, false);
}

void criterion_example(const AcceptanceOptions&, Outcome& o) {
  const Permutation w = Permutation::parse("58326147");
  const VariableSpace s = VariableSpace::plain(8);
  const Polynomial f = parse_polynomial("x1^2 + x1*x2 + x2^2 + x1*x2^2 + x1^2*x2", s);
  const Polynomial g = parse_polynomial("x3 + x4 + x5 + x3*x4 + x4*x5 + x3*x5 + x3*x4*x5", s);
  const ExponentVector lambda{4, 4, 2, 1, 1, 0, 0, 0};
  const FactorizationReport report = factorize(w);
  if (!(report.lambda == lambda)) o.fail("lambda differs from (4,4,2,1,1)");
  const bool factors_match = report.factors.size() == 2 &&
                             ((report.factors[0] == f && report.factors[1] == g) ||
                              (report.factors[0] == g && report.factors[1] == f));
  if (!factors_match) o.fail("factors differ from the two printed factors");
  if (!(g_tilde(w) == Polynomial::monomial(s, lambda) * f * g)) {
    o.fail("x^lambda times the printed factors is not the sign-normalized polynomial");
  }
  if (o.pass) o.detail << "lambda=(4,4,2,1,1), factors F_2(p=1), G_2(r=3)";
}

void criterion_factorization(const AcceptanceOptions& options, Outcome& o) {
  const int top = options.quick ? 4 : 6;
  const int double_top = options.quick ? 4 : 5;
  long single = 0;
  long dual = 0;
  for (const Permutation& w : permutations_up_to(top)) {
    if (!avoids_zero_one_patterns(w)) continue;
    try {
      const FactorizationReport r = factorize(w);
      if (!r.product_verified || !r.disjoint_windows) o.fail("unverified factorization for " + w.to_string());
      ++single;
      if (w.size() <= double_top) {
        const FactorizationReport d = factorize_double_schubert(w);
        if (!d.product_verified) o.fail("unverified double factorization for " + w.to_string());
        ++dual;
      }
    } catch (const Error& e) {
      o.fail(w.to_string() + ": " + e.what());
    }
  }
  if (o.pass) {
    o.detail << single << " single factorizations (S_1..S_" << top << "), " << dual
             << " double (S_1..S_" << double_top << ")";
  }
}

void criterion_engines(const AcceptanceOptions& options, Outcome& o) {
  const int top = options.quick ? 4 : 5;
  const int schubert_top = options.quick ? 4 : 6;
  long compared = 0;
  for (const Permutation& w : permutations_up_to(top)) {
    for (Variant v : {Variant::Single, Variant::Double}) {
      if (!(grothendieck_bpd(w, v) == grothendieck_dd(w, v))) {
        o.fail(std::string(v == Variant::Single ? "single" : "double") + " engines differ at " +
               w.to_string());
      }
      ++compared;
    }
  }
  long lowest = 0;
  for (const Permutation& w : permutations_up_to(schubert_top)) {
    const Polynomial g = grothendieck_dd(w, Variant::Single);
    if (!(homogeneous_component(g, length(w)) == schubert_dd(w, Variant::Single))) {
      o.fail("lowest component is not the Schubert polynomial at " + w.to_string());
    }
    ++lowest;
  }
  if (o.pass) {
    o.detail << compared << " engine comparisons (S_1..S_" << top << "), " << lowest
             << " lowest-component checks (S_1..S_" << schubert_top << ")";
  }
}

void criterion_lorentzian(const AcceptanceOptions& options, Outcome& o) {
  const int top = options.quick ? 3 : 4;
  long checked = 0;
  long forms = 0;
  for (const Permutation& w : permutations_up_to(top)) {
    if (!avoids_zero_one_patterns(w)) continue;
    const LorentzianVerdict v = check_lorentzian_theorem(w);
    ++checked;
    forms += v.checked_forms;
    if (!v.lorentzian) o.fail(w.to_string() + ": " + v.reason);
  }
  if (o.pass) o.detail << checked << " zero-one permutations, " << forms << " quadratic forms";
}

void criterion_conjectures(const AcceptanceOptions& options, Outcome& o) {
  const int top = options.quick ? 4 : 6;
  const int report_top = options.quick ? 4 : 5;
  long checked = 0;
  for (const Permutation& w : permutations_up_to(top)) {
    if (!avoids_zero_one_patterns(w)) continue;
    const Polynomial g = grothendieck_dd(w, Variant::Single);
    for (const ConjectureVerdict& v :
         {check_conjecture_1_1(g), check_conjecture_1_2(g), check_conjecture_1_6(g)}) {
      if (!v.pass) o.fail(v.check + " fails at " + w.to_string());
    }
    ++checked;
  }
  long reported = 0;
  long scanned = 0;
  std::string first_report;
  for (const Permutation& w : permutations_up_to(report_top)) {
    const Polynomial g = grothendieck_dd(w, Variant::Single);
    ++scanned;
    for (const ConjectureVerdict& v :
         {check_conjecture_1_1(g), check_conjecture_1_2(g), check_conjecture_1_6(g)}) {
      if (!v.pass) {
        ++reported;
        if (first_report.empty()) first_report = v.check + " at " + w.to_string();
      }
    }
  }
  if (o.pass) {
    o.detail << checked << " zero-one permutations pass; report mode over " << scanned
             << " permutations: " << reported << " failures";
    if (!first_report.empty()) o.detail << " (first: " << first_report << ")";
  }
}

void criterion_factor_values(const AcceptanceOptions&, Outcome& o) {
  for (int k = 1; k <= 10; ++k) {
    const Rational f = evaluate_at_ones(factor_F(k, 1));
    if (f != 2 * k + 1) o.fail("F_" + std::to_string(k) + "(1) = " + f.str());
    const Rational g = evaluate_at_ones(factor_G(k, 1));
    if (g != (Integer(1) << (k + 1)) - 1) o.fail("G_" + std::to_string(k) + "(1) = " + g.str());
  }
  if (o.pass) o.detail << "F_k(1) = 2k+1 and G_l(1) = 2^(l+1)-1 for 1..10";
}

Polynomial random_polynomial(std::mt19937_64& rng, int m) {
  std::uniform_int_distribution<int> term_count(1, 6);
  std::uniform_int_distribution<int> coefficient(-5, 5);
  std::uniform_int_distribution<int> slot(0, m - 1);
  std::uniform_int_distribution<int> degree(0, 6);
  const VariableSpace s = VariableSpace::plain(m);
  Polynomial out(s);
  const int terms = term_count(rng);
  for (int t = 0; t < terms; ++t) {
    ExponentVector e(m);
    const int d = degree(rng);
    for (int k = 0; k < d; ++k) {
      const int v = slot(rng);
      e.set(v, e[v] + 1);
    }
    int c = coefficient(rng);
    if (c == 0) c = 1;
    out.add_term(e, c);
  }
  return out;
}

void criterion_operators(const AcceptanceOptions& options, Outcome& o) {
  const int cases = options.quick ? 100 : 200;
  std::mt19937_64 rng(9001);
  long checks = 0;
  for (int t = 0; t < cases; ++t) {
    const int m = 5;
    const Polynomial f = random_polynomial(rng, m);
    for (int i = 1; i < m; ++i) {
      if (!divided_difference(divided_difference(f, i), i).is_zero()) o.fail("d_i^2 != 0");
      const Polynomial p = isobaric_divided_difference(f, i);
      if (!(isobaric_divided_difference(p, i) == p)) o.fail("pi_i^2 != pi_i");
      checks += 2;
    }
    for (int i = 1; i + 2 <= m; ++i) {
      auto d = [](const Polynomial& g, int k) { return divided_difference(g, k); };
      auto p = [](const Polynomial& g, int k) { return isobaric_divided_difference(g, k); };
      if (!(d(d(d(f, i), i + 1), i) == d(d(d(f, i + 1), i), i + 1))) o.fail("braid relation for d");
      if (!(p(p(p(f, i), i + 1), i) == p(p(p(f, i + 1), i), i + 1))) o.fail("braid relation for pi");
      checks += 2;
    }
    for (int i = 1; i < m; ++i) {
      for (int j = i + 2; j < m; ++j) {
        if (!(divided_difference(divided_difference(f, i), j) ==
              divided_difference(divided_difference(f, j), i))) {
          o.fail("d_i and d_j do not commute");
        }
        if (!(isobaric_divided_difference(isobaric_divided_difference(f, i), j) ==
              isobaric_divided_difference(isobaric_divided_difference(f, j), i))) {
          o.fail("pi_i and pi_j do not commute");
        }
        checks += 2;
      }
    }
  }
  if (o.pass) o.detail << cases << " random polynomials, " << checks << " identities";
}

struct Definition {
  const char* name;
  double budget;
  void (*run)(const AcceptanceOptions&, Outcome&);
};

const Definition kDefinitions[kCriterionCount] = {
    {"G_1342(x;y) display, both engines", 1.0, criterion_display},
    {"BPD(1342) and closure = brute force", 60.0, criterion_bpd_sets},
    {"six-pattern zero-one theorem sweep", 120.0, criterion_groth_patterns},
    {"twelve-pattern Schubert theorem sweep", 0.0, criterion_schubert_patterns},
    {"factorization of 58326147", 0.0, criterion_example},
    {"factorization theorem sweep", 0.0, criterion_factorization},
    {"engine cross-validation", 0.0, criterion_engines},
    {"Lorentzian double Schubert sweep", 600.0, criterion_lorentzian},
    {"support and coefficient conjectures", 0.0, criterion_conjectures},
    {"closed-form factor values", 0.0, criterion_factor_values},
    {"operator algebra properties", 0.0, criterion_operators},
};

}  // namespace

CriterionResult run_criterion(int id, const AcceptanceOptions& options) {
  if (id < 1 || id > kCriterionCount) throw InvalidArgument("no criterion " + std::to_string(id));
  const Definition& def = kDefinitions[id - 1];
  CriterionResult result;
  result.id = id;
  result.name = def.name;
  // The S_7 sweep gets its own budget.
  result.budget = (id == 3 && options.extended && !options.quick) ? 0.0 : def.budget;
  Outcome outcome;
  const auto start = std::chrono::steady_clock::now();
  try {
    def.run(options, outcome);
  } catch (const std::exception& e) {
    outcome.fail(std::string("exception: ") + e.what());
  }
  result.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  if (result.budget > 0 && result.seconds > result.budget) {
    outcome.fail("took " + std::to_string(result.seconds) + " s, budget " + std::to_string(result.budget) + " s");
  }
  result.pass = outcome.pass;
  result.detail = outcome.detail.str();
  return result;
}

std::vector<CriterionResult> run_acceptance(const AcceptanceOptions& options,
                                            const std::function<void(const CriterionResult&)>& on_result) {
  std::vector<CriterionResult> out;
  for (int id = 1; id <= kCriterionCount; ++id) {
    out.push_back(run_criterion(id, options));
    if (on_result) on_result(out.back());
  }
  return out;
}

std::string format_result(const CriterionResult& r) {
  char head[128];
  std::snprintf(head, sizeof head, "[%s] %2d  %-40s (%.2f s)  ", r.pass ? "PASS" : "FAIL", r.id,
                r.name.c_str(), r.seconds);
  return head + r.detail;
}

}  // namespace grothkit
