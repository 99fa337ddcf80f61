#include "amrkit/smatch.hpp"

#include <algorithm>
#include <cctype>
#include <unordered_map>

#include "amrkit/errors.hpp"
#include "amrkit/random.hpp"

namespace amrkit {

double f1_score(double precision, double recall) {
  const double s = precision + recall;
  return s > 0.0 ? 2.0 * precision * recall / s : 0.0;
}

SmatchResult make_smatch_result(std::size_t matched, std::size_t pred_total,
                                std::size_t gold_total) {
  SmatchResult r;
  r.matched = matched;
  r.pred_total = pred_total;
  r.gold_total = gold_total;
  r.precision = pred_total > 0 ? static_cast<double>(matched) / static_cast<double>(pred_total) : 0.0;
  r.recall = gold_total > 0 ? static_cast<double>(matched) / static_cast<double>(gold_total) : 0.0;
  r.f1 = f1_score(r.precision, r.recall);
  return r;
}

namespace {

constexpr int kUnmapped = -1;

class Interner {
 public:
  int id(const std::string& s) {
    auto [it, inserted] = ids_.emplace(s, static_cast<int>(ids_.size()));
    return it->second;
  }

 private:
  std::unordered_map<std::string, int> ids_;
};

std::string fold(std::string s) {
  std::transform(s.begin(), s.end(), s.begin(),
                 [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  return s;
}

std::string strip_quotes(const std::string& s) {
  return is_quoted(s) ? s.substr(1, s.size() - 2) : s;
}

// A triple with variables replaced by indices. For unary triples (instance
// and attribute) `b` is an interned value; for relations it is a variable.
struct EncTriple {
  bool relation;
  int a;
  int label;
  int b;
};

struct Encoded {
  std::vector<std::string> vars;
  std::vector<int> concept_ids;
  std::vector<EncTriple> triples;
};

Encoded encode(const AmrGraph& g, Interner& in) {
  Encoded enc;
  std::unordered_map<std::string, int> var_index;
  for (const Node& n : g.nodes()) {
    if (!n.is_variable()) continue;
    var_index.emplace(n.id, static_cast<int>(enc.vars.size()));
    enc.vars.push_back(n.id);
    enc.concept_ids.push_back(in.id("c:" + n.label));
  }
  const int instance_label = in.id("l:instance");
  for (const Triple& t : to_triples(g)) {
    const int a = var_index.at(t.src);
    switch (t.kind) {
      case TripleKind::kInstance:
        enc.triples.push_back({false, a, instance_label, in.id("c:" + t.tgt)});
        break;
      case TripleKind::kAttribute:
        enc.triples.push_back({false, a, in.id("l:" + fold(t.label)), in.id("c:" + strip_quotes(t.tgt))});
        break;
      case TripleKind::kRelation:
        enc.triples.push_back({true, a, in.id("l:" + fold(t.label)), var_index.at(t.tgt)});
        break;
    }
  }
  return enc;
}

std::uint64_t pack(bool relation, int a, int label, int b) {
  return (static_cast<std::uint64_t>(relation) << 63) | (static_cast<std::uint64_t>(a) << 42) |
         (static_cast<std::uint64_t>(label) << 21) | static_cast<std::uint64_t>(b);
}

void check_capacity(const Encoded& e) {
  if (e.vars.size() >= (1u << 21) || e.triples.size() >= (1u << 21)) {
    throw TooLarge("graph too large for triple encoding");
  }
}

SmatchResult finish(std::size_t matched, const Encoded& p, const Encoded& g,
                    const std::vector<int>& mapping) {
  SmatchResult r = make_smatch_result(matched, p.triples.size(), g.triples.size());
  for (std::size_t i = 0; i < mapping.size(); ++i) {
    if (mapping[i] != kUnmapped) r.mapping.emplace_back(p.vars[i], g.vars[mapping[i]]);
  }
  return r;
}

// Score decomposition used by the hill climber: unary[p][g] counts triples
// touching one predicted variable, and each unordered pair of predicted
// variables linked by relations carries a weight table over gold pairs.
class MappingScorer {
 public:
  MappingScorer(const Encoded& p, const Encoded& g)
      : np_(static_cast<int>(p.vars.size())), ng_(static_cast<int>(g.vars.size())) {
    unary_.assign(static_cast<std::size_t>(np_) * ng_, 0);
    incident_.resize(np_);

    // Unary triples, including self-loop relations.
    std::unordered_map<std::uint64_t, int> pred_unary, gold_unary;
    for (const auto& t : p.triples) {
      if (!t.relation) ++pred_unary[pack(false, t.a, t.label, t.b)];
      else if (t.a == t.b) ++pred_unary[pack(true, t.a, t.label, 0)];
    }
    std::unordered_map<std::uint64_t, std::vector<std::pair<int, int>>> gold_by_key;
    for (const auto& t : g.triples) {
      if (!t.relation) ++gold_unary[pack(false, t.a, t.label, t.b)];
      else if (t.a == t.b) ++gold_unary[pack(true, t.a, t.label, 0)];
    }
    for (const auto& [key, count] : gold_unary) {
      const int gv = static_cast<int>((key >> 42) & 0x1fffff);
      const std::uint64_t shape = key & ~(static_cast<std::uint64_t>(0x1fffff) << 42);
      gold_by_key[shape].emplace_back(gv, count);
    }
    for (const auto& [key, count] : pred_unary) {
      const int pv = static_cast<int>((key >> 42) & 0x1fffff);
      const std::uint64_t shape = key & ~(static_cast<std::uint64_t>(0x1fffff) << 42);
      auto it = gold_by_key.find(shape);
      if (it == gold_by_key.end()) continue;
      for (const auto& [gv, gcount] : it->second) unary(pv, gv) += std::min(count, gcount);
    }

    // Relations between distinct variables, grouped by label on the gold side.
    std::unordered_map<std::uint64_t, int> gold_rel;
    for (const auto& t : g.triples) {
      if (t.relation && t.a != t.b) ++gold_rel[pack(true, t.a, t.label, t.b)];
    }
    std::unordered_map<int, std::vector<std::tuple<int, int, int>>> gold_rel_by_label;
    for (const auto& [key, count] : gold_rel) {
      const int a = static_cast<int>((key >> 42) & 0x1fffff);
      const int label = static_cast<int>((key >> 21) & 0x1fffff);
      const int b = static_cast<int>(key & 0x1fffff);
      gold_rel_by_label[label].emplace_back(a, b, count);
    }
    std::unordered_map<std::uint64_t, int> pred_rel;
    for (const auto& t : p.triples) {
      if (t.relation && t.a != t.b) ++pred_rel[pack(true, t.a, t.label, t.b)];
    }
    std::unordered_map<std::uint64_t, std::size_t> pair_index;
    for (const auto& [key, count] : pred_rel) {
      const int a = static_cast<int>((key >> 42) & 0x1fffff);
      const int label = static_cast<int>((key >> 21) & 0x1fffff);
      const int b = static_cast<int>(key & 0x1fffff);
      auto it = gold_rel_by_label.find(label);
      if (it == gold_rel_by_label.end()) continue;
      const int lo = std::min(a, b), hi = std::max(a, b);
      const std::uint64_t pk = (static_cast<std::uint64_t>(lo) << 32) | static_cast<std::uint64_t>(hi);
      auto [pit, inserted] = pair_index.emplace(pk, pairs_.size());
      if (inserted) {
        pairs_.push_back(Pair{lo, hi, {}});
        incident_[lo].push_back(pit->second);
        incident_[hi].push_back(pit->second);
      }
      Pair& pair = pairs_[pit->second];
      for (const auto& [ga, gb, gcount] : it->second) {
        // Orient the gold pair as (image of lo, image of hi).
        const int glo = a == lo ? ga : gb;
        const int ghi = a == lo ? gb : ga;
        pair.weights[gold_pair_key(glo, ghi)] += std::min(count, gcount);
      }
    }
  }

  int score(const std::vector<int>& m) const {
    int s = 0;
    for (int p = 0; p < np_; ++p) {
      if (m[p] != kUnmapped) s += unary(p, m[p]);
    }
    for (const Pair& pair : pairs_) s += pair_weight(pair, m);
    return s;
  }

  // Unary terms of p1 (and p2, if >= 0) plus every pair weight touching
  // them, evaluated under `m`. Differences of this give move deltas.
  int local(const std::vector<int>& m, int p1, int p2) const {
    int s = 0;
    if (m[p1] != kUnmapped) s += unary(p1, m[p1]);
    for (std::size_t q : incident_[p1]) s += pair_weight(pairs_[q], m);
    if (p2 >= 0) {
      if (m[p2] != kUnmapped) s += unary(p2, m[p2]);
      for (std::size_t q : incident_[p2]) {
        const Pair& pair = pairs_[q];
        if (pair.lo == p1 || pair.hi == p1) continue;
        s += pair_weight(pair, m);
      }
    }
    return s;
  }

 private:
  struct Pair {
    int lo;
    int hi;
    std::unordered_map<std::uint64_t, int> weights;
  };

  std::uint64_t gold_pair_key(int glo, int ghi) const {
    return static_cast<std::uint64_t>(glo) * static_cast<std::uint64_t>(ng_) +
           static_cast<std::uint64_t>(ghi);
  }

  int pair_weight(const Pair& pair, const std::vector<int>& m) const {
    const int a = m[pair.lo], b = m[pair.hi];
    if (a == kUnmapped || b == kUnmapped) return 0;
    auto it = pair.weights.find(gold_pair_key(a, b));
    return it == pair.weights.end() ? 0 : it->second;
  }

  int& unary(int p, int g) { return unary_[static_cast<std::size_t>(p) * ng_ + g]; }
  int unary(int p, int g) const { return unary_[static_cast<std::size_t>(p) * ng_ + g]; }

  int np_;
  int ng_;
  std::vector<int> unary_;
  std::vector<Pair> pairs_;
  std::vector<std::vector<std::size_t>> incident_;
};

// Best-improvement local search from `m`; returns the final score.
int climb(const MappingScorer& scorer, std::vector<int>& m, int ng) {
  const int np = static_cast<int>(m.size());
  std::vector<int> owner(ng, kUnmapped);
  for (int p = 0; p < np; ++p) {
    if (m[p] != kUnmapped) owner[m[p]] = p;
  }
  int current = scorer.score(m);
  while (true) {
    int best_delta = 0;
    int best_kind = 0, best_a = 0, best_b = 0;
    // Remap to an unused gold variable.
    for (int p = 0; p < np; ++p) {
      const int old_target = m[p];
      const int before = scorer.local(m, p, -1);
      for (int g = 0; g < ng; ++g) {
        if (owner[g] != kUnmapped) continue;
        m[p] = g;
        const int delta = scorer.local(m, p, -1) - before;
        if (delta > best_delta) {
          best_delta = delta;
          best_kind = 1;
          best_a = p;
          best_b = g;
        }
      }
      m[p] = old_target;
    }
    // Swap the targets of two predicted variables.
    for (int p1 = 0; p1 < np; ++p1) {
      for (int p2 = p1 + 1; p2 < np; ++p2) {
        if (m[p1] == m[p2]) continue;  // both unmapped
        const int before = scorer.local(m, p1, p2);
        std::swap(m[p1], m[p2]);
        const int delta = scorer.local(m, p1, p2) - before;
        std::swap(m[p1], m[p2]);
        if (delta > best_delta) {
          best_delta = delta;
          best_kind = 2;
          best_a = p1;
          best_b = p2;
        }
      }
    }
    if (best_kind == 0) return current;
    if (best_kind == 1) {
      if (m[best_a] != kUnmapped) owner[m[best_a]] = kUnmapped;
      m[best_a] = best_b;
      owner[best_b] = best_a;
    } else {
      std::swap(m[best_a], m[best_b]);
      if (m[best_a] != kUnmapped) owner[m[best_a]] = best_a;
      if (m[best_b] != kUnmapped) owner[m[best_b]] = best_b;
    }
    current += best_delta;
  }
}

std::vector<int> greedy_start(const Encoded& p, const Encoded& g) {
  std::vector<int> m(p.vars.size(), kUnmapped);
  std::vector<bool> used(g.vars.size(), false);
  for (std::size_t i = 0; i < p.vars.size(); ++i) {
    for (std::size_t j = 0; j < g.vars.size(); ++j) {
      if (!used[j] && p.concept_ids[i] == g.concept_ids[j]) {
        m[i] = static_cast<int>(j);
        used[j] = true;
        break;
      }
    }
  }
  return m;
}

std::vector<int> random_start(std::size_t np, std::size_t ng, Rng& rng) {
  std::vector<int> gold(ng), pred(np);
  for (std::size_t j = 0; j < ng; ++j) gold[j] = static_cast<int>(j);
  for (std::size_t i = 0; i < np; ++i) pred[i] = static_cast<int>(i);
  shuffle(std::span<int>(gold), rng);
  shuffle(std::span<int>(pred), rng);
  std::vector<int> m(np, kUnmapped);
  for (std::size_t k = 0; k < std::min(np, ng); ++k) m[pred[k]] = gold[k];
  return m;
}

}  // namespace

SmatchResult smatch_hill_climb(const AmrGraph& pred, const AmrGraph& gold, std::size_t restarts,
                               std::uint64_t seed) {
  if (restarts == 0) restarts = 1;
  Interner in;
  const Encoded p = encode(pred, in);
  const Encoded g = encode(gold, in);
  check_capacity(p);
  check_capacity(g);
  const MappingScorer scorer(p, g);
  const int ng = static_cast<int>(g.vars.size());

  Rng rng(seed);
  std::vector<int> best_map;
  int best = -1;
  for (std::size_t r = 0; r < restarts; ++r) {
    std::vector<int> m = r == 0 ? greedy_start(p, g) : random_start(p.vars.size(), g.vars.size(), rng);
    const int s = climb(scorer, m, ng);
    if (s > best) {
      best = s;
      best_map = std::move(m);
    }
    if (static_cast<std::size_t>(best) == std::min(p.triples.size(), g.triples.size())) break;
  }
  return finish(static_cast<std::size_t>(best), p, g, best_map);
}

namespace {

class ExactSearch {
 public:
  ExactSearch(const Encoded& p, const Encoded& g) : p_(p), g_(g) {
    const std::size_t np = p.vars.size();
    for (const auto& t : g.triples) ++gold_counts_[pack(t.relation, t.a, t.label, t.b)];
    resolved_at_.resize(np);
    for (const auto& t : p.triples) {
      const int last = t.relation ? std::max(t.a, t.b) : t.a;
      resolved_at_[last].push_back(&t);
    }
    remaining_.assign(np + 1, 0);
    for (std::size_t i = np; i-- > 0;) remaining_[i] = remaining_[i + 1] + resolved_at_[i].size();

    candidates_.resize(np);
    for (std::size_t i = 0; i < np; ++i) {
      std::vector<int>& c = candidates_[i];
      for (std::size_t j = 0; j < g.vars.size(); ++j) {
        if (p.concept_ids[i] == g.concept_ids[j]) c.push_back(static_cast<int>(j));
      }
      for (std::size_t j = 0; j < g.vars.size(); ++j) {
        if (p.concept_ids[i] != g.concept_ids[j]) c.push_back(static_cast<int>(j));
      }
      if (np > g.vars.size()) c.push_back(kUnmapped);
    }
    mapping_.assign(np, kUnmapped);
    used_.assign(g.vars.size(), false);
  }

  SmatchResult run() {
    search(0);
    return finish(static_cast<std::size_t>(best_), p_, g_, best_map_);
  }

 private:
  void search(std::size_t i) {
    if (i == mapping_.size()) {
      if (matched_ > best_) {
        best_ = matched_;
        best_map_ = mapping_;
      }
      return;
    }
    if (best_ >= 0 && matched_ + static_cast<long>(remaining_[i]) <= best_) return;
    for (int gv : candidates_[i]) {
      if (gv != kUnmapped && used_[gv]) continue;
      mapping_[i] = gv;
      if (gv != kUnmapped) used_[gv] = true;
      std::vector<std::uint64_t> added;
      for (const EncTriple* t : resolved_at_[i]) {
        const int a = mapping_[t->a];
        const int b = t->relation ? mapping_[t->b] : t->b;
        if (a == kUnmapped || b == kUnmapped) continue;
        const std::uint64_t key = pack(t->relation, a, t->label, b);
        auto git = gold_counts_.find(key);
        if (git == gold_counts_.end()) continue;
        if (++current_[key] <= git->second) ++matched_;
        added.push_back(key);
      }
      search(i + 1);
      for (std::uint64_t key : added) {
        if (current_[key]-- <= gold_counts_[key]) --matched_;
      }
      if (gv != kUnmapped) used_[gv] = false;
      mapping_[i] = kUnmapped;
    }
  }

  const Encoded& p_;
  const Encoded& g_;
  std::unordered_map<std::uint64_t, int> gold_counts_;
  std::unordered_map<std::uint64_t, int> current_;
  std::vector<std::vector<const EncTriple*>> resolved_at_;
  std::vector<std::size_t> remaining_;
  std::vector<std::vector<int>> candidates_;
  std::vector<int> mapping_;
  std::vector<bool> used_;
  long matched_ = 0;
  long best_ = -1;
  std::vector<int> best_map_;
};

}  // namespace

SmatchResult smatch_exact(const AmrGraph& pred, const AmrGraph& gold, std::size_t max_vars) {
  Interner in;
  const Encoded p = encode(pred, in);
  const Encoded g = encode(gold, in);
  check_capacity(p);
  check_capacity(g);
  if (std::min(p.vars.size(), g.vars.size()) > max_vars) {
    throw TooLarge("exact Smatch is limited to " + std::to_string(max_vars) +
                   " variables on the smaller graph");
  }
  return ExactSearch(p, g).run();
}

}  // namespace amrkit
