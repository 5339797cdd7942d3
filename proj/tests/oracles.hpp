#pragma once

// Independent reference implementations the tests compare the library against.
// None of these call the library's reduction, matching or SNF code.

#include <algorithm>
#include <numeric>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "mcgcheck/abelian.hpp"
#include "mcgcheck/bundle.hpp"

namespace oracle {

using namespace mcgcheck;

inline bool opposite(const Letter& a, const Letter& b) { return a.symbol == b.symbol && a.exponent == -b.exponent; }

/// Cancel the leftmost adjacent inverse pair until none is left.
inline std::vector<Letter> reduce_leftmost(std::vector<Letter> s) {
  for (;;) {
    std::size_t i = 0;
    while (i + 1 < s.size() && !opposite(s[i], s[i + 1])) ++i;
    if (i + 1 >= s.size()) return s;
    s.erase(s.begin() + static_cast<std::ptrdiff_t>(i), s.begin() + static_cast<std::ptrdiff_t>(i + 2));
  }
}

inline std::vector<Letter> reduce_rightmost(std::vector<Letter> s) {
  for (;;) {
    std::size_t i = s.size();
    while (i >= 2 && !opposite(s[i - 2], s[i - 1])) --i;
    if (i < 2) return s;
    s.erase(s.begin() + static_cast<std::ptrdiff_t>(i - 2), s.begin() + static_cast<std::ptrdiff_t>(i));
  }
}

/// A small alphabet mixing all three symbol kinds.
inline std::vector<GeneratorSymbol> alphabet() {
  return {GeneratorSymbol::twist("a", Sign::Plus),
          GeneratorSymbol::twist("a", Sign::Minus),
          GeneratorSymbol::twist("b", Sign::Plus),
          GeneratorSymbol::slide(CurveRef::one_sided("mu"), CurveRef::arrowed("a")),
          GeneratorSymbol::slide(CurveRef::one_sided("mu"), CurveRef::arrowed("a", Arrow::Reversed)),
          GeneratorSymbol::transposition(CurveRef::one_sided("mu"), CurveRef::arrowed("b"), Sign::Minus)};
}

inline std::vector<Letter> random_letters(std::mt19937& rng, std::size_t max_len,
                                          const std::vector<GeneratorSymbol>& alpha = alphabet()) {
  std::uniform_int_distribution<std::size_t> len(0, max_len), pick(0, alpha.size() - 1);
  std::bernoulli_distribution inv(0.5);
  std::vector<Letter> out(len(rng), Letter{alpha[0], 1});
  for (auto& l : out) l = Letter{alpha[pick(rng)], inv(rng) ? -1 : 1};
  return out;
}

// ---- words reachable by relation applications ----------------------------------

/// Every word reachable from `start` in at most `depth` single relation
/// applications (any instance, either side, any position; an empty side can
/// be introduced anywhere), each followed by free reduction.
inline std::set<std::vector<Letter>> reachable(const std::vector<Letter>& start,
                                               const std::vector<RelationInstance>& rels, std::size_t depth) {
  auto as_vec = [](const Word& w) { return std::vector<Letter>(w.begin(), w.end()); };
  std::set<std::vector<Letter>> seen{reduce_leftmost(start)};
  std::vector<std::vector<Letter>> frontier(seen.begin(), seen.end());
  for (std::size_t d = 0; d < depth; ++d) {
    std::vector<std::vector<Letter>> next;
    for (const auto& w : frontier) {
      for (const auto& r : rels) {
        for (int side = 0; side < 2; ++side) {
          auto from = as_vec(side ? r.rhs : r.lhs), to = as_vec(side ? r.lhs : r.rhs);
          for (std::size_t p = 0; p + from.size() <= w.size(); ++p) {
            bool hit = true;
            for (std::size_t k = 0; k < from.size() && hit; ++k) hit = w[p + k] == from[k];
            if (!hit) continue;
            std::vector<Letter> v(w.begin(), w.begin() + static_cast<std::ptrdiff_t>(p));
            v.insert(v.end(), to.begin(), to.end());
            v.insert(v.end(), w.begin() + static_cast<std::ptrdiff_t>(p + from.size()), w.end());
            v = reduce_leftmost(v);
            if (seen.insert(v).second) next.push_back(v);
          }
        }
      }
    }
    frontier = std::move(next);
  }
  return seen;
}

/// Fewest applications needed, or -1 when beyond `depth`.
inline int distance(const std::vector<Letter>& from, const std::vector<Letter>& to,
                    const std::vector<RelationInstance>& rels, std::size_t depth) {
  for (std::size_t d = 0; d <= depth; ++d) {
    if (reachable(from, rels, d).count(reduce_leftmost(to))) return static_cast<int>(d);
  }
  return -1;
}

// ---- invariant factors from determinantal divisors -----------------------------

inline Integer det(const std::vector<std::vector<Integer>>& m) {
  std::size_t n = m.size();
  if (n == 0) return 1;
  if (n == 1) return m[0][0];
  Integer out = 0;
  for (std::size_t j = 0; j < n; ++j) {
    std::vector<std::vector<Integer>> minor;
    for (std::size_t i = 1; i < n; ++i) {
      std::vector<Integer> row;
      for (std::size_t k = 0; k < n; ++k)
        if (k != j) row.push_back(m[i][k]);
      minor.push_back(row);
    }
    Integer term = m[0][j] * det(minor);
    out += (j % 2 == 0) ? term : Integer(-term);
  }
  return out;
}

inline void subsets(std::size_t n, std::size_t k, std::vector<std::vector<std::size_t>>& out,
                    std::vector<std::size_t> cur = {}, std::size_t from = 0) {
  if (cur.size() == k) {
    out.push_back(cur);
    return;
  }
  for (std::size_t i = from; i < n; ++i) {
    cur.push_back(i);
    subsets(n, k, out, cur, i + 1);
    cur.pop_back();
  }
}

/// d_k = gcd of all k x k minors; the k-th invariant factor is d_k / d_{k-1}.
inline std::vector<Integer> invariant_factors(const IntegerMatrix& m) {
  std::vector<Integer> out;
  Integer prev = 1;
  for (std::size_t k = 1; k <= std::min(m.rows, m.cols); ++k) {
    std::vector<std::vector<std::size_t>> rs, cs;
    subsets(m.rows, k, rs);
    subsets(m.cols, k, cs);
    Integer g = 0;
    for (const auto& r : rs)
      for (const auto& c : cs) {
        std::vector<std::vector<Integer>> sub(k, std::vector<Integer>(k));
        for (std::size_t i = 0; i < k; ++i)
          for (std::size_t j = 0; j < k; ++j) sub[i][j] = m(r[i], c[j]);
        g = boost::multiprecision::gcd(g, abs(det(sub)));
      }
    if (g == 0) break;
    out.push_back(g / prev);
    prev = g;
  }
  return out;
}

inline Integer det(const IntegerMatrix& m) { return det(m.e); }

// ---- certificate mutations ----------------------------------------------------

struct Mutation {
  std::string what;
  Certificate cert;
};

/// For every ApplyRelation step: position +1 and -1, direction flipped, and
/// the relation id swapped for the next different id in `ids`.
inline std::vector<Mutation> mutations(const Certificate& c, const std::vector<std::string>& ids) {
  std::vector<Mutation> out;
  for (std::size_t i = 0; i < c.steps.size(); ++i) {
    const Step& s = c.steps[i];
    if (s.kind != StepKind::ApplyRelation) continue;
    auto push = [&](std::string what, auto change) {
      Certificate m = c;
      change(m.steps[i]);
      out.push_back({c.name + " step " + std::to_string(i) + " " + what, m});
    };
    push("position+1", [](Step& st) { ++st.position; });
    if (s.position > 0) push("position-1", [](Step& st) { --st.position; });
    push("direction", [](Step& st) { st.direction = reversed(st.direction); });
    auto it = std::find(ids.begin(), ids.end(), s.relation_id);
    if (!ids.empty()) {
      std::size_t at = it == ids.end() ? 0 : static_cast<std::size_t>(it - ids.begin());
      for (std::size_t k = 1; k <= ids.size(); ++k) {
        const std::string& other = ids[(at + k) % ids.size()];
        if (other != s.relation_id) {
          push("id->" + other, [&](Step& st) { st.relation_id = other; });
          break;
        }
      }
    }
  }
  return out;
}

// ---- bundle helpers ---------------------------------------------------------------

inline std::vector<fs::path> bundled_certificates(const fs::path& root) {
  std::vector<fs::path> out;
  for (const char* d : {"certs", "evidence"})
    for (const auto& e : fs::directory_iterator(root / d))
      if (e.path().extension() == ".deriv") out.push_back(e.path());
  std::sort(out.begin(), out.end());
  return out;
}

/// Sorted relation ids cited anywhere in the given certificates.
inline std::vector<std::string> cited_ids(const std::vector<Certificate>& certs) {
  std::set<std::string> ids;
  for (const auto& c : certs)
    for (const auto& s : c.steps)
      if (s.kind == StepKind::ApplyRelation) ids.insert(s.relation_id);
  return {ids.begin(), ids.end()};
}

}  // namespace oracle
