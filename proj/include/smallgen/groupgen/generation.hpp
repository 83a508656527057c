#pragma once

#include <algorithm>
#include <cstdint>
#include <limits>
#include <string>
#include <thread>
#include <unordered_map>
#include <vector>

#include "smallgen/error.hpp"
#include "smallgen/groupgen/enumerate.hpp"

namespace smallgen::groupgen {

/// A word is a sequence of signed 1-based generator indices; -k stands for the inverse of generator k.
using Word = std::vector<int>;

struct GenerationJob {
  int max_length = 20;                  // L
  bool greedy = true;                   // try greedy reduction before the search
  bool projective = true;               // accept -target
  int forward_depth = 4;                // depth of the shared tree grown from the identity
  std::size_t node_cap = 2'000'000;     // forward tree size
  std::size_t target_node_cap = 20'000;  // backward search size per target
  unsigned workers = 1;
};

enum class CertificateStatus { certified, inconclusive };

inline std::string to_string(CertificateStatus s) {
  return s == CertificateStatus::certified ? "certified" : "inconclusive";
}

struct TargetCertificate {
  Coords target{};
  CertificateStatus status = CertificateStatus::inconclusive;
  Word word;
  std::string method;  // "greedy", "search" or "greedy+search"; empty when inconclusive
};

struct GenerationCertificate {
  std::vector<Coords> generators;
  std::vector<Coords> targets;
  std::vector<TargetCertificate> results;
  std::size_t certified = 0;
  std::size_t inconclusive = 0;
  int max_word_length = 0;
  std::size_t forward_nodes = 0;
  int forward_complete_depth = 0;  // every word up to this length is in the tree
};

namespace detail {

/// Signed generators in the order +1, -1, +2, -2, ...
struct SignedGenerators {
  std::vector<int> index;
  std::vector<Coords> value;    // the generator (or its inverse)
  std::vector<Coords> inverse;  // its inverse
};

inline SignedGenerators sign_generators(const UnitGroup& g, const std::vector<Coords>& gens) {
  SignedGenerators s;
  for (std::size_t k = 0; k < gens.size(); ++k) {
    const int i = static_cast<int>(k) + 1;
    const Coords inv = g.inverse(gens[k]);
    s.index.push_back(i);
    s.value.push_back(gens[k]);
    s.inverse.push_back(inv);
    s.index.push_back(-i);
    s.value.push_back(inv);
    s.inverse.push_back(gens[k]);
  }
  return s;
}

/// Order on signed indices matching the generator order +1 < -1 < +2 < ...
inline bool word_less(const Word& x, const Word& y) {
  if (x.size() != y.size()) return x.size() < y.size();
  for (std::size_t i = 0; i < x.size(); ++i) {
    const auto kx = std::make_pair(std::abs(x[i]), x[i] < 0), ky = std::make_pair(std::abs(y[i]), y[i] < 0);
    if (kx != ky) return kx < ky;
  }
  return false;
}

struct TreeNode {
  std::int32_t parent;
  std::int32_t step;  // position in SignedGenerators
  std::int32_t depth;
};

/// Breadth-first tree of words from the identity, keyed by exact coordinates.
class ForwardTree {
 public:
  ForwardTree(const UnitGroup& g, const SignedGenerators& s, bool projective, int depth, std::size_t cap)
      : projective_(projective) {
    const Coords one = key(g.identity());
    nodes_.push_back({-1, -1, 0});
    coords_.push_back(one);
    index_.emplace(one, 0);
    std::size_t begin = 0;
    for (int level = 1; level <= depth; ++level) {
      const std::size_t end = nodes_.size();
      bool truncated = false;
      for (std::size_t n = begin; n < end && !truncated; ++n)
        for (std::size_t k = 0; k < s.value.size(); ++k) {
          const Coords y = key(g.multiply(coords_[n], s.value[k]));
          if (index_.count(y)) continue;
          if (nodes_.size() >= cap) {
            truncated = true;
            break;
          }
          index_.emplace(y, static_cast<std::int32_t>(nodes_.size()));
          nodes_.push_back({static_cast<std::int32_t>(n), static_cast<std::int32_t>(k), level});
          coords_.push_back(y);
        }
      if (truncated) break;
      complete_depth_ = level;
      begin = end;
      if (begin == nodes_.size()) break;
    }
  }

  Coords key(const Coords& c) const { return projective_ ? projective_canonical(c) : c; }
  const TreeNode* find(const Coords& c) const {
    auto it = index_.find(key(c));
    return it == index_.end() ? nullptr : &nodes_[it->second];
  }
  /// Steps from the identity to the node.
  std::vector<std::int32_t> path(const TreeNode* n) const {
    std::vector<std::int32_t> out;
    for (; n->parent >= 0; n = &nodes_[n->parent]) out.push_back(n->step);
    std::reverse(out.begin(), out.end());
    return out;
  }
  std::size_t size() const { return nodes_.size(); }
  int complete_depth() const { return complete_depth_; }

 private:
  bool projective_;
  std::vector<TreeNode> nodes_;
  std::vector<Coords> coords_;
  std::unordered_map<Coords, std::int32_t, CoordsHash> index_;
  int complete_depth_ = 0;
};

/// Shortest word for t (with the forward part inside the tree) of length at most `budget`.
inline std::optional<Word> search(const UnitGroup& g, const SignedGenerators& s, const ForwardTree& tree,
                                  const Coords& t, int budget, std::size_t cap) {
  struct BackNode {
    Coords y;
    std::int32_t parent;
    std::int32_t step;
  };
  std::vector<BackNode> nodes{{t, -1, -1}};
  std::unordered_map<Coords, std::int32_t, CoordsHash> seen{{tree.key(t), 0}};
  std::optional<Word> best;

  auto word_of = [&](const TreeNode* f, std::int32_t b) {
    Word w;
    for (auto st : tree.path(f)) w.push_back(s.index[st]);
    for (; nodes[b].parent >= 0; b = nodes[b].parent) w.push_back(s.index[nodes[b].step]);
    return w;
  };

  std::size_t begin = 0;
  for (int db = 0; db <= budget; ++db) {
    const std::size_t end = nodes.size();
    for (std::size_t n = begin; n < end; ++n) {
      const TreeNode* f = tree.find(nodes[n].y);
      if (!f || f->depth + db > budget) continue;
      Word w = word_of(f, static_cast<std::int32_t>(n));
      if (!best || word_less(w, *best)) best = std::move(w);
    }
    if (best && static_cast<int>(best->size()) <= db + 1) break;
    if (db == budget) break;
    bool full = false;
    for (std::size_t n = begin; n < end && !full; ++n)
      for (std::size_t k = 0; k < s.value.size(); ++k) {
        const Coords y = g.multiply(nodes[n].y, s.inverse[k]);
        const Coords key = tree.key(y);
        if (seen.count(key)) continue;
        if (nodes.size() >= cap) {
          full = true;
          break;
        }
        seen.emplace(key, static_cast<std::int32_t>(nodes.size()));
        nodes.push_back({y, static_cast<std::int32_t>(n), static_cast<std::int32_t>(k)});
      }
    begin = end;
    if (full || begin == nodes.size()) {
      // finish the current frontier, then stop
      for (std::size_t n = begin; n < nodes.size(); ++n) {
        const TreeNode* f = tree.find(nodes[n].y);
        if (!f || f->depth + db + 1 > budget) continue;
        Word w = word_of(f, static_cast<std::int32_t>(n));
        if (!best || word_less(w, *best)) best = std::move(w);
      }
      break;
    }
  }
  return best;
}

struct GreedyOutcome {
  Word prefix;
  Coords remainder{};
  bool done = false;
};

/// Repeatedly replaces the remainder r by s^-1 r for the signed generator minimising the
/// Frobenius norm (equivalently the distance of rho(s^-1 r) i from i), while it strictly decreases.
inline GreedyOutcome greedy(const UnitGroup& g, const SignedGenerators& s, const Coords& t, bool projective,
                            int max_steps) {
  GreedyOutcome out;
  out.remainder = t;
  auto current = g.frobenius(t);
  while (!g.is_identity(out.remainder, projective)) {
    if (static_cast<int>(out.prefix.size()) >= max_steps) return out;
    int choice = -1;
    Coords next{};
    auto best = current;
    for (std::size_t k = 0; k < s.value.size(); ++k) {
      const Coords r = g.multiply(s.inverse[k], out.remainder);
      const auto f = g.frobenius(r);
      if (g.compare_frobenius(f, best) < 0) {
        best = f;
        choice = static_cast<int>(k);
        next = r;
      }
    }
    if (choice < 0) return out;
    out.prefix.push_back(s.index[choice]);
    out.remainder = next;
    current = best;
  }
  out.done = true;
  return out;
}

}  // namespace detail

/// Multiplies the word out in the quaternion algebra and compares with the target.
inline bool verify_word(const UnitGroup& g, const std::vector<Coords>& gens, const Word& w, const Coords& target,
                        bool projective) {
  QuatElement x = QuatElement::one(g.original_algebra());
  for (int i : w) {
    const std::size_t k = static_cast<std::size_t>(std::abs(i)) - 1;
    if (i == 0 || k >= gens.size()) return false;
    const QuatElement s = g.element(gens[k]);
    x = x * (i > 0 ? s : s.inverse());
  }
  const QuatElement t = g.element(target);
  return x == t || (projective && x == -t);
}

/// Certifies each target as a word in the generators (and their inverses) of length at most L.
/// Targets that are not reached within the budgets are inconclusive, which says nothing about
/// whether the generators generate.
inline GenerationCertificate verify_generation(const UnitGroup& g, std::vector<Coords> generators,
                                               const std::vector<Coords>& targets, const GenerationJob& job) {
  if (job.max_length < 0) throw DomainError("word length budget must be non-negative");
  for (const auto& c : generators)
    if (!g.is_unit(c)) throw DomainError("generator is not a unit of the order");
  for (const auto& c : targets)
    if (!g.is_unit(c)) throw DomainError("target is not a unit of the order");

  GenerationCertificate cert;
  cert.generators = std::move(generators);
  cert.targets = targets;
  const auto s = detail::sign_generators(g, cert.generators);
  const int depth = std::min(job.forward_depth, job.max_length);
  const detail::ForwardTree tree(g, s, job.projective, std::max(depth, 0), job.node_cap);
  cert.forward_nodes = tree.size();
  cert.forward_complete_depth = tree.complete_depth();

  cert.results.resize(targets.size());
  auto solve = [&](std::size_t i) {
    TargetCertificate& r = cert.results[i];
    r.target = targets[i];
    std::optional<Word> word;
    if (job.greedy) {
      const auto gr = detail::greedy(g, s, targets[i], job.projective, job.max_length);
      if (gr.done) {
        word = gr.prefix;
        r.method = "greedy";
      } else {
        const int rest = job.max_length - static_cast<int>(gr.prefix.size());
        if (auto tail = detail::search(g, s, tree, gr.remainder, rest, job.target_node_cap)) {
          word = gr.prefix;
          word->insert(word->end(), tail->begin(), tail->end());
          r.method = "greedy+search";
        }
      }
    }
    if (!word) {
      word = detail::search(g, s, tree, targets[i], job.max_length, job.target_node_cap);
      if (word) r.method = "search";
    }
    if (word && static_cast<int>(word->size()) <= job.max_length) {
      if (!verify_word(g, cert.generators, *word, targets[i], job.projective))
        throw Error("internal: certificate word does not multiply to its target");
      r.word = std::move(*word);
      r.status = CertificateStatus::certified;
    } else {
      r.method.clear();
    }
  };

  const unsigned workers = std::max(1u, job.workers);
  if (workers == 1) {
    for (std::size_t i = 0; i < targets.size(); ++i) solve(i);
  } else {
    std::vector<std::thread> threads;
    for (unsigned w = 0; w < workers; ++w)
      threads.emplace_back([&, w] {
        for (std::size_t i = w; i < targets.size(); i += workers) solve(i);
      });
    for (auto& t : threads) t.join();
  }

  for (const auto& r : cert.results) {
    if (r.status == CertificateStatus::certified) {
      ++cert.certified;
      cert.max_word_length = std::max(cert.max_word_length, static_cast<int>(r.word.size()));
    } else {
      ++cert.inconclusive;
    }
  }
  return cert;
}

inline std::vector<Coords> coords_of(const std::vector<ElementRecord>& records) {
  std::vector<Coords> out;
  out.reserve(records.size());
  for (const auto& r : records) out.push_back(r.coords);
  return out;
}

}  // namespace smallgen::groupgen
