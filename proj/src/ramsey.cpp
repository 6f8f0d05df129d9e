#include "mulrep/ramsey.hpp"

#include <algorithm>
#include <array>
#include <limits>
#include <sstream>

#include "mulrep/error.hpp"

namespace mulrep {

namespace {

constexpr std::size_t kMaxSubsets = 1u << 26;

const std::array<std::array<std::uint64_t, kMaxColoringK + 2>, kMaxGround + 1>& binom_table() {
  static const auto table = [] {
    std::array<std::array<std::uint64_t, kMaxColoringK + 2>, kMaxGround + 1> t{};
    for (std::size_t n = 0; n <= kMaxGround; ++n) {
      t[n][0] = 1;
      for (std::size_t k = 1; k <= kMaxColoringK + 1; ++k) t[n][k] = n == 0 ? 0 : t[n - 1][k - 1] + t[n - 1][k];
    }
    return t;
  }();
  return table;
}

std::uint64_t small_binomial(std::size_t n, unsigned k) { return binom_table()[n][k]; }

// Calls fn on every k-combination of [0, n) in lexicographic order; stops
// early if fn returns false.
template <class Fn>
bool for_each_combination(std::size_t n, unsigned k, Fn&& fn) {
  std::vector<unsigned> idx(k);
  for (unsigned i = 0; i < k; ++i) idx[i] = i;
  if (k > n) return true;
  while (true) {
    if (!fn(std::span<const unsigned>(idx))) return false;
    int i = static_cast<int>(k) - 1;
    while (i >= 0 && idx[i] == n - k + i) --i;
    if (i < 0) return true;
    ++idx[i];
    for (unsigned j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
}

void validate_ground(std::vector<std::uint64_t>& ground, unsigned k) {
  std::sort(ground.begin(), ground.end());
  if (std::adjacent_find(ground.begin(), ground.end()) != ground.end())
    throw Error(Errc::invalid_argument, "ground set has a repeated element");
  if (ground.size() > kMaxGround) throw Error(Errc::resource_limit, "ground sets are limited to 64 elements");
  if (k > kMaxColoringK) throw Error(Errc::invalid_argument, "colorings of k-subsets are limited to k <= 4");
  if (small_binomial(ground.size(), k) > kMaxSubsets)
    throw Error(Errc::resource_limit, "too many k-subsets to tabulate");
}

// Depth-first search over subsets of `candidates` (ascending positions) in
// lexicographic order. The visitor sees each homogeneous subset of size m and
// returns true to stop.
class HomogeneousSearch {
 public:
  using Visitor = std::function<bool(const std::vector<unsigned>&, std::uint32_t)>;

  HomogeneousSearch(const Coloring& c, std::span<const unsigned> candidates, std::size_t m, std::uint64_t& nodes,
                    std::uint64_t max_nodes)
      : c_(c), cand_(candidates), m_(m), nodes_(nodes), max_nodes_(max_nodes) {}

  bool run(const Visitor& visit) {
    visit_ = &visit;
    chosen_.clear();
    std::optional<std::uint32_t> color;
    if (c_.k() == 0) color = c_.color_at({});
    return dfs(0, color);
  }

 private:
  bool dfs(std::size_t start, std::optional<std::uint32_t> color) {
    if (chosen_.size() == m_) return (*visit_)(chosen_, color.value_or(0));
    for (std::size_t i = start; i < cand_.size(); ++i) {
      if (chosen_.size() + (cand_.size() - i) < m_) break;
      if (++nodes_ > max_nodes_) throw Error(Errc::budget_exhausted, "homogeneous-set search budget exhausted");
      const unsigned x = cand_[i];
      std::optional<std::uint32_t> next = color;
      if (!extends(x, next)) continue;
      chosen_.push_back(x);
      const bool stop = dfs(i + 1, next);
      chosen_.pop_back();
      if (stop) return true;
    }
    return false;
  }

  // Every new k-subset is x together with k-1 already chosen positions.
  bool extends(unsigned x, std::optional<std::uint32_t>& color) const {
    const unsigned k = c_.k();
    if (k == 0 || chosen_.size() + 1 < k) return true;
    std::vector<unsigned> subset(k);
    return for_each_combination(chosen_.size(), k - 1, [&](std::span<const unsigned> idx) {
      for (unsigned j = 0; j + 1 < k; ++j) subset[j] = chosen_[idx[j]];
      subset[k - 1] = x;
      const std::uint32_t col = c_.color_at(subset);
      if (!color) color = col;
      return *color == col;
    });
  }

  const Coloring& c_;
  std::span<const unsigned> cand_;
  std::size_t m_;
  std::uint64_t& nodes_;
  std::uint64_t max_nodes_;
  const Visitor* visit_ = nullptr;
  std::vector<unsigned> chosen_;
};

std::vector<std::uint64_t> values_at(const Coloring& c, const std::vector<unsigned>& positions) {
  std::vector<std::uint64_t> out;
  out.reserve(positions.size());
  for (auto p : positions) out.push_back(c.ground()[p]);
  return out;
}

void check_common_ground(std::span<const Coloring> cs) {
  for (const auto& c : cs)
    if (c.ground() != cs.front().ground()) throw Error(Errc::invalid_argument, "colorings use different ground sets");
}

}  // namespace

std::uint64_t colex_rank(std::span<const unsigned> positions) {
  std::uint64_t r = 0;
  for (std::size_t i = 0; i < positions.size(); ++i) r += small_binomial(positions[i], static_cast<unsigned>(i + 1));
  return r;
}

Coloring Coloring::from_function(std::vector<std::uint64_t> ground, unsigned k, const ColorFn& fn) {
  validate_ground(ground, k);
  Coloring c;
  c.ground_ = std::move(ground);
  c.k_ = k;
  c.colors_.assign(small_binomial(c.ground_.size(), k), 0);
  std::vector<std::uint64_t> values(k);
  for_each_combination(c.ground_.size(), k, [&](std::span<const unsigned> idx) {
    for (unsigned j = 0; j < k; ++j) values[j] = c.ground_[idx[j]];
    const std::uint32_t col = fn(values);
    c.colors_[colex_rank(idx)] = col;
    c.max_color_ = std::max(c.max_color_, col);
    return true;
  });
  return c;
}

Coloring Coloring::from_ranked(std::vector<std::uint64_t> ground, unsigned k, std::vector<std::uint32_t> colors,
                               std::optional<std::uint32_t> max_color) {
  validate_ground(ground, k);
  if (colors.size() != small_binomial(ground.size(), k))
    throw Error(Errc::invalid_argument, "coloring is not total on the k-subsets");
  const std::uint32_t seen = colors.empty() ? 0 : *std::max_element(colors.begin(), colors.end());
  if (max_color && seen > *max_color) throw Error(Errc::invalid_argument, "color exceeds the declared maximum");
  Coloring c;
  c.ground_ = std::move(ground);
  c.k_ = k;
  c.colors_ = std::move(colors);
  c.max_color_ = max_color.value_or(seen);
  return c;
}

Coloring Coloring::random(std::size_t ground_size, unsigned k, std::uint32_t num_colors, std::mt19937_64& rng) {
  if (num_colors < 1) throw Error(Errc::invalid_argument, "need at least one color");
  std::vector<std::uint64_t> ground(ground_size);
  for (std::size_t i = 0; i < ground_size; ++i) ground[i] = i + 1;
  std::vector<std::uint32_t> colors(small_binomial(std::min(ground_size, kMaxGround), std::min(k, kMaxColoringK)));
  for (auto& col : colors) col = static_cast<std::uint32_t>(rng() % num_colors);
  return from_ranked(std::move(ground), k, std::move(colors), num_colors - 1);
}

std::uint32_t Coloring::color_at(std::span<const unsigned> positions) const { return colors_[colex_rank(positions)]; }

std::vector<unsigned> Coloring::positions_of(std::span<const std::uint64_t> elements) const {
  std::vector<unsigned> pos;
  pos.reserve(elements.size());
  for (auto e : elements) {
    auto it = std::lower_bound(ground_.begin(), ground_.end(), e);
    if (it == ground_.end() || *it != e)
      throw Error(Errc::invalid_argument, std::to_string(e) + " is not in the ground set");
    pos.push_back(static_cast<unsigned>(it - ground_.begin()));
  }
  std::sort(pos.begin(), pos.end());
  if (std::adjacent_find(pos.begin(), pos.end()) != pos.end())
    throw Error(Errc::invalid_argument, "subset has a repeated element");
  return pos;
}

std::uint32_t Coloring::color_of(std::span<const std::uint64_t> elements) const {
  if (elements.size() != k_) throw Error(Errc::invalid_argument, "subset size differs from k");
  return color_at(positions_of(elements));
}

Coloring parse_coloring(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  std::optional<std::vector<std::uint64_t>> ground;
  std::optional<unsigned> k;
  std::optional<std::uint32_t> declared_colors;
  std::vector<std::pair<std::vector<std::uint64_t>, std::uint32_t>> entries;
  std::size_t lineno = 0;
  auto fail = [&](const std::string& msg) {
    throw Error(Errc::parse, "coloring line " + std::to_string(lineno) + ": " + msg);
  };
  auto read_numbers = [&](const std::string& s) {
    std::istringstream ss(s);
    std::vector<std::uint64_t> v;
    std::string tok;
    while (ss >> tok) {
      try {
        std::size_t used = 0;
        v.push_back(std::stoull(tok, &used));
        if (used != tok.size()) fail("bad number '" + tok + "'");
      } catch (const std::logic_error&) {
        fail("bad number '" + tok + "'");
      }
    }
    return v;
  };
  while (std::getline(in, line)) {
    ++lineno;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    const auto colon = line.find(':');
    if (colon == std::string::npos) fail("expected ':'");
    std::string head = line.substr(0, colon), tail = line.substr(colon + 1);
    std::string key = head;
    key.erase(std::remove_if(key.begin(), key.end(), [](char ch) { return ch == ' ' || ch == '\t'; }), key.end());
    if (key == "ground") {
      ground = read_numbers(tail);
    } else if (key == "k") {
      auto v = read_numbers(tail);
      if (v.size() != 1) fail("k takes one value");
      k = static_cast<unsigned>(v[0]);
    } else if (key == "colors") {
      auto v = read_numbers(tail);
      if (v.size() != 1 || v[0] == 0) fail("colors takes one positive value");
      declared_colors = static_cast<std::uint32_t>(v[0]);
    } else {
      auto elems = read_numbers(head);
      auto col = read_numbers(tail);
      if (col.size() != 1) fail("expected exactly one color after ':'");
      if (col[0] > std::numeric_limits<std::uint32_t>::max()) fail("color out of range");
      entries.emplace_back(std::move(elems), static_cast<std::uint32_t>(col[0]));
    }
  }
  if (!ground) throw Error(Errc::parse, "coloring is missing a 'ground:' line");
  if (!k) throw Error(Errc::parse, "coloring is missing a 'k:' line");
  validate_ground(*ground, *k);
  const std::size_t total = small_binomial(ground->size(), *k);
  std::vector<std::uint32_t> colors(total, 0);
  std::vector<char> seen(total, 0);
  Coloring probe = Coloring::from_ranked(*ground, *k, std::vector<std::uint32_t>(total, 0));
  for (auto& [elems, col] : entries) {
    if (elems.size() != *k) throw Error(Errc::parse, "subset of the wrong size");
    std::vector<unsigned> pos;
    try {
      pos = probe.positions_of(elems);
    } catch (const Error& e) {
      throw Error(Errc::parse, e.what());
    }
    const auto r = colex_rank(pos);
    if (seen[r]) throw Error(Errc::parse, "subset listed twice");
    seen[r] = 1;
    colors[r] = col;
  }
  if (std::find(seen.begin(), seen.end(), 0) != seen.end())
    throw Error(Errc::parse, "coloring is not total: some k-subsets are missing");
  std::optional<std::uint32_t> max_color;
  if (declared_colors) max_color = *declared_colors - 1;
  try {
    return Coloring::from_ranked(std::move(*ground), *k, std::move(colors), max_color);
  } catch (const Error& e) {
    throw Error(Errc::parse, e.what());
  }
}

std::string format_coloring(const Coloring& c) {
  std::ostringstream out;
  out << "ground:";
  for (auto g : c.ground()) out << ' ' << g;
  out << "\nk: " << c.k() << "\ncolors: " << c.max_color() + 1 << '\n';
  for_each_combination(c.ground().size(), c.k(), [&](std::span<const unsigned> idx) {
    for (std::size_t j = 0; j < idx.size(); ++j) out << (j ? " " : "") << c.ground()[idx[j]];
    out << " : " << c.color_at(idx) << '\n';
    return true;
  });
  return out.str();
}

std::optional<std::vector<std::uint64_t>> find_homogeneous(const Coloring& c, std::size_t m,
                                                           const RamseyBudget& budget) {
  if (m > c.ground().size()) throw Error(Errc::invalid_argument, "target size exceeds the ground set");
  if (c.k() > m) throw Error(Errc::invalid_argument, "target size must be at least k");
  std::vector<unsigned> all(c.ground().size());
  for (unsigned i = 0; i < all.size(); ++i) all[i] = i;
  std::uint64_t nodes = 0;
  std::optional<std::vector<std::uint64_t>> found;
  HomogeneousSearch search(c, all, m, nodes, budget.max_nodes);
  search.run([&](const std::vector<unsigned>& chosen, std::uint32_t) {
    found = values_at(c, chosen);
    return true;
  });
  return found;
}

bool is_homogeneous(const Coloring& c, std::span<const std::uint64_t> subset) {
  const auto pos = c.positions_of(subset);
  std::optional<std::uint32_t> color;
  std::vector<unsigned> sub(c.k());
  return for_each_combination(pos.size(), c.k(), [&](std::span<const unsigned> idx) {
    for (std::size_t j = 0; j < idx.size(); ++j) sub[j] = pos[idx[j]];
    const auto col = c.color_at(sub);
    if (!color) color = col;
    return *color == col;
  });
}

std::optional<HomogeneousChain> iterated_chain(std::span<const Coloring> colorings, std::span<const std::size_t> sizes,
                                               const RamseyBudget& budget) {
  if (colorings.empty()) throw Error(Errc::invalid_argument, "need a coloring for at least k = 0");
  if (sizes.size() != colorings.size()) throw Error(Errc::invalid_argument, "one target size per level is required");
  check_common_ground(colorings);
  for (std::size_t k = 0; k < colorings.size(); ++k) {
    if (colorings[k].k() != k) throw Error(Errc::invalid_argument, "coloring at level k must color k-subsets");
    if (sizes[k] < k) throw Error(Errc::invalid_argument, "target sizes must satisfy sizes[k] >= k");
    if (k > 0 && sizes[k] > sizes[k - 1]) throw Error(Errc::invalid_argument, "target sizes must be weakly decreasing");
  }
  const Coloring& base = colorings.front();
  if (sizes[0] > base.ground().size()) return std::nullopt;

  const std::size_t levels = colorings.size();
  std::vector<std::vector<unsigned>> chosen(levels);
  std::vector<std::uint32_t> eps(levels);
  chosen[0].resize(base.ground().size());
  for (unsigned i = 0; i < chosen[0].size(); ++i) chosen[0][i] = i;
  eps[0] = base.color_at({});

  std::uint64_t nodes = 0;
  std::function<bool(std::size_t)> level = [&](std::size_t k) -> bool {
    if (k == levels) return true;
    HomogeneousSearch search(colorings[k], chosen[k - 1], sizes[k], nodes, budget.max_nodes);
    return search.run([&](const std::vector<unsigned>& subset, std::uint32_t color) {
      chosen[k] = subset;
      eps[k] = color;
      return level(k + 1);
    });
  };
  if (!level(1)) return std::nullopt;

  HomogeneousChain chain;
  for (std::size_t k = 0; k < levels; ++k) chain.subsets.push_back(values_at(base, chosen[k]));
  chain.epsilons = std::move(eps);
  return chain;
}

bool verify_chain(std::span<const Coloring> colorings, const HomogeneousChain& chain) {
  if (chain.subsets.size() != colorings.size() || chain.epsilons.size() != colorings.size()) return false;
  for (std::size_t k = 0; k < chain.subsets.size(); ++k) {
    const auto& x = chain.subsets[k];
    if (!std::is_sorted(x.begin(), x.end())) return false;
    try {
      (void)colorings[k].positions_of(x);
    } catch (const Error&) {
      return false;
    }
    if (k > 0 && !std::includes(chain.subsets[k - 1].begin(), chain.subsets[k - 1].end(), x.begin(), x.end()))
      return false;
  }
  for (std::size_t k = 0; k < colorings.size(); ++k) {
    for (std::size_t n = k; n < chain.subsets.size(); ++n) {
      const auto pos = colorings[k].positions_of(chain.subsets[n]);
      std::vector<unsigned> sub(k);
      const bool ok = for_each_combination(pos.size(), static_cast<unsigned>(k), [&](std::span<const unsigned> idx) {
        for (std::size_t j = 0; j < k; ++j) sub[j] = pos[idx[j]];
        return colorings[k].color_at(sub) == chain.epsilons[k];
      });
      if (!ok) return false;
    }
  }
  return true;
}

Coloring product_coloring(std::span<const Coloring> factors) {
  if (factors.empty()) throw Error(Errc::invalid_argument, "product coloring needs a nonempty index set");
  check_common_ground(factors);
  for (const auto& f : factors)
    if (f.k() != factors.front().k()) throw Error(Errc::invalid_argument, "factor colorings differ in k");
  std::uint64_t total = 1;
  for (const auto& f : factors) {
    total *= static_cast<std::uint64_t>(f.max_color()) + 1;
    if (total > std::numeric_limits<std::uint32_t>::max())
      throw Error(Errc::overflow, "product color count exceeds the color index capacity");
  }
  std::vector<std::uint32_t> colors(factors.front().subset_count());
  for (std::size_t r = 0; r < colors.size(); ++r) {
    std::uint64_t idx = 0;
    for (const auto& f : factors) idx = idx * (f.max_color() + 1ULL) + f.ranked_colors()[r];
    colors[r] = static_cast<std::uint32_t>(idx);
  }
  return Coloring::from_ranked(factors.front().ground(), factors.front().k(), std::move(colors),
                               static_cast<std::uint32_t>(total - 1));
}

std::vector<std::uint32_t> decode_product_color(std::uint32_t index, std::span<const std::uint32_t> radices) {
  std::vector<std::uint32_t> digits(radices.size());
  for (std::size_t i = radices.size(); i-- > 0;) {
    digits[i] = index % radices[i];
    index /= radices[i];
  }
  return digits;
}

std::optional<HomogeneousChain> doubly_iterated_chain(std::span<const std::vector<Coloring>> per_level,
                                                      std::span<const std::size_t> sizes,
                                                      const RamseyBudget& budget) {
  std::vector<Coloring> products;
  std::vector<std::vector<std::uint32_t>> radices;
  for (std::size_t k = 0; k < per_level.size(); ++k) {
    if (per_level[k].empty())
      throw Error(Errc::invalid_argument, "empty index set at level " + std::to_string(k));
    products.push_back(product_coloring(per_level[k]));
    std::vector<std::uint32_t> r;
    for (const auto& f : per_level[k]) r.push_back(f.max_color() + 1);
    radices.push_back(std::move(r));
  }
  auto chain = iterated_chain(products, sizes, budget);
  if (!chain) return std::nullopt;
  for (std::size_t k = 0; k < chain->epsilons.size(); ++k)
    chain->epsilon_tuples.push_back(decode_product_color(chain->epsilons[k], radices[k]));
  return chain;
}

RandomTrialSummary random_trials(std::size_t ground_size, unsigned k, std::uint32_t num_colors, std::size_t m,
                                 std::uint64_t trials, std::uint64_t seed, const RamseyBudget& budget) {
  std::mt19937_64 rng(seed);
  RandomTrialSummary s;
  for (std::uint64_t i = 0; i < trials; ++i) {
    const Coloring c = Coloring::random(ground_size, k, num_colors, rng);
    ++s.trials;
    if (auto found = find_homogeneous(c, m, budget)) {
      ++s.found;
      if (found->size() != m || !is_homogeneous(c, *found)) ++s.checker_failures;
    }
  }
  return s;
}

}  // namespace mulrep
