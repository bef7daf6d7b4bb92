#include "grothkit/engines.hpp"

#include <memory>
#include <mutex>
#include <tuple>
#include <unordered_map>

#include "grothkit/bpd.hpp"

namespace grothkit {

VariableSpace engine_space(int n, Variant variant) {
  return variant == Variant::Single ? VariableSpace::plain(n) : VariableSpace::dual(n);
}

namespace {

void require_dominant(const Permutation& u) {
  if (!is_dominant(u)) throw InvalidArgument(u.to_string() + " is not dominant");
}

Polynomial diagram_product(const Permutation& u, Variant variant, bool k_theoretic) {
  const VariableSpace space = engine_space(u.size(), variant);
  const Diagram d = rothe_diagram(u);
  if (variant == Variant::Single) {
    ExponentVector e(space.size());
    for (const Cell& c : d.cells) e.set(space.x_slot(c.row), e[space.x_slot(c.row)] + 1);
    return Polynomial::monomial(space, e);
  }
  Polynomial out = Polynomial::one(space);
  for (const Cell& c : d.cells) {
    const Polynomial x = Polynomial::x(space, c.row);
    const Polynomial y = Polynomial::y(space, c.column);
    out *= k_theoretic ? x + y - x * y : x - y;
  }
  return out;
}

struct CacheKey {
  Permutation w;
  bool k_theoretic;
  Variant variant;
  EngineOptions options;

  friend bool operator==(const CacheKey& a, const CacheKey& b) {
    return a.w == b.w && a.k_theoretic == b.k_theoretic && a.variant == b.variant &&
           a.options.strategy == b.options.strategy &&
           a.options.stop_at_dominant == b.options.stop_at_dominant;
  }
};

struct CacheKeyHash {
  std::size_t operator()(const CacheKey& k) const noexcept {
    std::size_t h = PermutationHash{}(k.w);
    h = h * 31 + static_cast<std::size_t>(k.k_theoretic);
    h = h * 31 + static_cast<std::size_t>(k.variant);
    h = h * 31 + static_cast<std::size_t>(k.options.strategy);
    h = h * 31 + static_cast<std::size_t>(k.options.stop_at_dominant);
    return h;
  }
};

class EngineCache {
 public:
  std::shared_ptr<const Polynomial> find(const CacheKey& key) {
    std::lock_guard lock(mutex_);
    auto it = map_.find(key);
    return it == map_.end() ? nullptr : it->second;
  }

  std::shared_ptr<const Polynomial> insert(const CacheKey& key, Polynomial value) {
    auto ptr = std::make_shared<const Polynomial>(std::move(value));
    std::lock_guard lock(mutex_);
    return map_.try_emplace(key, std::move(ptr)).first->second;
  }

  void clear() {
    std::lock_guard lock(mutex_);
    map_.clear();
  }

 private:
  std::mutex mutex_;
  std::unordered_map<CacheKey, std::shared_ptr<const Polynomial>, CacheKeyHash> map_;
};

EngineCache& cache() {
  static EngineCache instance;
  return instance;
}

bool is_longest(const Permutation& w) {
  for (int i = 1; i <= w.size(); ++i)
    if (w(i) != w.size() + 1 - i) return false;
  return true;
}

int choose_ascent(const Permutation& w, DescentStrategy strategy) {
  const int n = w.size();
  if (strategy == DescentStrategy::SmallestAscent) {
    for (int i = 1; i < n; ++i)
      if (w(i) < w(i + 1)) return i;
  } else {
    for (int i = n - 1; i >= 1; --i)
      if (w(i) < w(i + 1)) return i;
  }
  return 0;
}

std::shared_ptr<const Polynomial> recurse(const CacheKey& key) {
  if (auto hit = cache().find(key)) return hit;
  const Permutation& w = key.w;
  const bool base = key.options.stop_at_dominant ? is_dominant(w) : is_longest(w);
  Polynomial value;
  if (base) {
    value = diagram_product(w, key.variant, key.k_theoretic);
  } else {
    const int i = choose_ascent(w, key.options.strategy);
    CacheKey up = key;
    up.w = w.swap_positions(i);
    const auto above = recurse(up);
    value = key.k_theoretic ? isobaric_divided_difference(*above, i)
                            : divided_difference(*above, i);
  }
  return cache().insert(key, std::move(value));
}

}  // namespace

Polynomial dominant_grothendieck(const Permutation& u, Variant variant) {
  require_dominant(u);
  return diagram_product(u, variant, true);
}

Polynomial dominant_schubert(const Permutation& u, Variant variant) {
  require_dominant(u);
  return diagram_product(u, variant, false);
}

Polynomial grothendieck_dd(const Permutation& w, Variant variant, EngineOptions options) {
  return *recurse({w, true, variant, options});
}

Polynomial schubert_dd(const Permutation& w, Variant variant, EngineOptions options) {
  return *recurse({w, false, variant, options});
}

Polynomial grothendieck_bpd(const Permutation& w, Variant variant, int bound) {
  const std::vector<BumplessPipeDream> all = enumerate_bpds(w, bound);
  Polynomial out(engine_space(w.size(), variant));
  for (const BumplessPipeDream& p : all) {
    out += variant == Variant::Single ? weight_single(p) : weight_double(p);
  }
  return out;
}

Polynomial compute(const Permutation& w, Kind kind, Variant variant, Engine engine) {
  if (kind == Kind::Schubert) {
    if (engine == Engine::DividedDifference) return schubert_dd(w, variant);
    // Lowest component of G_w(x;y) is S_w(x;-y).
    const Polynomial lowest = homogeneous_component(grothendieck_bpd(w, variant), length(w));
    Polynomial out(lowest.space());
    for (const auto& [e, c] : lowest.terms()) {
      int y_degree = 0;
      for (int j = 1; j <= lowest.space().y_count(); ++j) y_degree += e[lowest.space().y_slot(j)];
      out.add_term(e, y_degree % 2 == 0 ? c : Integer(-c));
    }
    return out;
  }
  return engine == Engine::Bpd ? grothendieck_bpd(w, variant) : grothendieck_dd(w, variant);
}

Polynomial g_tilde(const Permutation& w) {
  const Polynomial g = grothendieck_dd(w, Variant::Single);
  const int base = length(w);
  if (g.min_degree() != base) {
    throw ContractViolation("lowest degree of G_" + w.to_string() + " is not its length");
  }
  Polynomial out = sign_flip_by_degree(g, base);
  for (const auto& [e, c] : out.terms()) {
    if (c < 0) {
      throw ContractViolation("coefficients of G_" + w.to_string() +
                              " do not alternate in sign by degree");
    }
  }
  return out;
}

Polynomial s_tilde_double(const Permutation& w) {
  return absolute_coefficients(schubert_dd(w, Variant::Double));
}

Polynomial g_hat(const Permutation& w) {
  const Polynomial tilde = g_tilde(w);
  const Polynomial lifted = embed(tilde, tilde.space().with_z());
  return homogenize(lifted, length(w), tilde.total_degree());
}

int degree_d(const Permutation& w) {
  return grothendieck_dd(w, Variant::Single).total_degree();
}

void clear_engine_cache() { cache().clear(); }

}  // namespace grothkit
