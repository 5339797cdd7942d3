#pragma once

// Derivation certificates: replay, reversal and bounded search.
//
// A certificate state is the literal letter sequence. ApplyRelation matches
// the cited side letter for letter at a 0-based position and splices in the
// other side; InsertTrivialPair splices in s s^-1; Regroup freely reduces.
// Only the final comparison with the target is made on reduced words. This
// is what lets an inserted pair feed a later match.

#include <algorithm>
#include <deque>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "mcgcheck/dsl.hpp"
#include "mcgcheck/error.hpp"
#include "mcgcheck/schemas.hpp"
#include "mcgcheck/word.hpp"

namespace mcgcheck {

using dsl::Direction;

enum class StepKind { ApplyRelation, InsertTrivialPair, Regroup };

struct Step {
  StepKind kind = StepKind::Regroup;
  std::string relation_id;
  std::size_t position = 0;
  Direction direction = Direction::LhsToRhs;
  std::optional<Letter> pair;
  std::string note;

  static Step apply(std::string id, Direction d, std::size_t at, std::string note = {}) {
    return {StepKind::ApplyRelation, std::move(id), at, d, std::nullopt, std::move(note)};
  }
  static Step insert(Letter s, std::size_t at, std::string note = {}) {
    return {StepKind::InsertTrivialPair, {}, at, Direction::LhsToRhs, s, std::move(note)};
  }
  static Step regroup(std::string note = {}) {
    return {StepKind::Regroup, {}, 0, Direction::LhsToRhs, std::nullopt, std::move(note)};
  }

  bool operator==(const Step&) const = default;
};

inline Direction reversed(Direction d) {
  return d == Direction::LhsToRhs ? Direction::RhsToLhs : Direction::LhsToRhs;
}

struct Certificate {
  std::string name;
  Word source, target;
  std::vector<Step> steps;
  std::string context;   // "<presentation>@<catalog>" or "<catalog>"
  std::string citation;

  bool operator==(const Certificate&) const = default;
};

inline std::string describe(const Step& s) {
  switch (s.kind) {
    case StepKind::ApplyRelation:
      return "apply " + s.relation_id + (s.direction == Direction::LhsToRhs ? " fwd" : " bwd") +
             " at " + std::to_string(s.position);
    case StepKind::InsertTrivialPair:
      return "insert " + render(*s.pair) + " at " + std::to_string(s.position);
    case StepKind::Regroup:
      return "regroup";
  }
  return "?";
}

/// One replay step on the literal sequence.
inline Spelling apply_step(const Spelling& current, const Step& step, const InstanceStore& store) {
  switch (step.kind) {
    case StepKind::ApplyRelation: {
      const RelationInstance& r = store.at(step.relation_id);
      const Word& src = step.direction == Direction::LhsToRhs ? r.lhs : r.rhs;
      const Word& dst = step.direction == Direction::LhsToRhs ? r.rhs : r.lhs;
      std::size_t p = step.position;
      if (p > current.size() || current.size() - p < src.size() ||
          !std::equal(src.begin(), src.end(), current.begin() + static_cast<std::ptrdiff_t>(p))) {
        throw Error(ErrorCode::NoMatchAtPosition,
                    "'" + render(src) + "' does not occur at position " + std::to_string(p));
      }
      Spelling out(current.begin(), current.begin() + static_cast<std::ptrdiff_t>(p));
      out.insert(out.end(), dst.begin(), dst.end());
      out.insert(out.end(), current.begin() + static_cast<std::ptrdiff_t>(p + src.size()), current.end());
      return out;
    }
    case StepKind::InsertTrivialPair: {
      if (!step.pair) throw Error(ErrorCode::ValidationError, "insert step without a letter");
      if (step.position > current.size()) {
        throw Error(ErrorCode::NoMatchAtPosition,
                    "insert position " + std::to_string(step.position) + " is past the end");
      }
      Spelling out = current;
      auto it = out.begin() + static_cast<std::ptrdiff_t>(step.position);
      it = out.insert(it, step.pair->inverse());
      out.insert(it, *step.pair);
      return out;
    }
    case StepKind::Regroup:
      // free reduction never changes the reduced word, so RegroupChangedWord
      // cannot arise under these semantics
      return Word::reduce(current).letters();
  }
  throw Error(ErrorCode::ValidationError, "unknown step kind");
}

struct StepRecord {
  std::size_t index = 0;
  std::string rule;
  std::string before, after;
  bool ok = true;
  std::string error;
};

struct CheckReport {
  std::string name;
  bool pass = false;
  std::vector<StepRecord> steps;
  std::optional<std::size_t> failing_step;
  std::string reason;
  Word final_word;
};

inline CheckReport check_certificate(const Certificate& cert, const InstanceStore& store) {
  CheckReport rep;
  rep.name = cert.name;
  Spelling cur = cert.source.letters();
  for (std::size_t i = 0; i < cert.steps.size(); ++i) {
    StepRecord rec;
    rec.index = i;
    rec.rule = describe(cert.steps[i]);
    rec.before = render(std::span<const Letter>(cur));
    try {
      cur = apply_step(cur, cert.steps[i], store);
      rec.after = render(std::span<const Letter>(cur));
      rep.steps.push_back(rec);
    } catch (const Error& e) {
      rec.ok = false;
      rec.error = e.what();
      rep.steps.push_back(rec);
      rep.failing_step = i;
      rep.reason = e.what();
      rep.final_word = Word::reduce(cur);
      return rep;
    }
  }
  rep.final_word = Word::reduce(cur);
  rep.pass = rep.final_word == cert.target;
  if (!rep.pass) {
    rep.reason = "final word " + render(rep.final_word) + " differs from target " + render(cert.target);
  }
  return rep;
}

/// Insert steps that turn reduce(s) back into the literal sequence s.
inline std::vector<Step> spell_out(const Spelling& s) {
  std::vector<Step> removed;
  Spelling cur = s;
  for (bool again = true; again;) {
    again = false;
    for (std::size_t j = 0; j + 1 < cur.size(); ++j) {
      if (cur[j].cancels(cur[j + 1])) {
        removed.push_back(Step::insert(cur[j], j));
        cur.erase(cur.begin() + static_cast<std::ptrdiff_t>(j), cur.begin() + static_cast<std::ptrdiff_t>(j + 2));
        again = true;
        break;
      }
    }
  }
  std::reverse(removed.begin(), removed.end());
  return removed;
}

/// A certificate from cert.target back to cert.source: relation steps in
/// reverse order with directions flipped, each preceded by the insertions
/// needed to rebuild the literal sequence it matched against.
inline Certificate reverse_certificate(const Certificate& cert, const InstanceStore& store) {
  std::vector<Spelling> states{cert.source.letters()};
  for (const auto& st : cert.steps) states.push_back(apply_step(states.back(), st, store));

  Certificate out;
  out.name = cert.name + "_reversed";
  out.source = cert.target;
  out.target = cert.source;
  out.context = cert.context;
  for (std::size_t i = cert.steps.size(); i-- > 0;) {
    const Step& st = cert.steps[i];
    if (st.kind != StepKind::ApplyRelation) continue;
    for (auto& ins : spell_out(states[i + 1])) out.steps.push_back(ins);
    out.steps.push_back(Step::apply(st.relation_id, reversed(st.direction), st.position));
    out.steps.push_back(Step::regroup());
  }
  for (auto& ins : spell_out(states[0])) out.steps.push_back(ins);
  out.steps.push_back(Step::regroup());
  return out;
}

// ---- search -------------------------------------------------------------------

struct SearchBounds {
  std::size_t max_steps = 4;
  std::size_t max_word_length = 32;
  std::size_t max_states = 20000;
};

inline SearchBounds to_bounds(const dsl::SearchBounds& b) {
  return {b.max_steps, b.max_word_length, b.max_states};
}

/// One relation application on a reduced word, followed by free reduction.
struct Move {
  std::string relation_id;
  Direction direction;
  std::size_t position;
  Word result;
};

inline std::vector<Move> moves(const Word& w, const InstanceStore& store) {
  std::vector<Move> out;
  const auto& ls = w.letters();
  for (const auto& r : store.items()) {
    for (Direction d : {Direction::LhsToRhs, Direction::RhsToLhs}) {
      const Word& src = d == Direction::LhsToRhs ? r.lhs : r.rhs;
      const Word& dst = d == Direction::LhsToRhs ? r.rhs : r.lhs;
      if (src.empty()) {
        for (std::size_t p = 0; p <= ls.size(); ++p) {
          Spelling s(ls.begin(), ls.begin() + static_cast<std::ptrdiff_t>(p));
          s.insert(s.end(), dst.begin(), dst.end());
          s.insert(s.end(), ls.begin() + static_cast<std::ptrdiff_t>(p), ls.end());
          out.push_back({r.id, d, p, Word::reduce(s)});
        }
        continue;
      }
      if (src.size() > ls.size()) continue;
      for (std::size_t p = 0; p + src.size() <= ls.size(); ++p) {
        if (!std::equal(src.begin(), src.end(), ls.begin() + static_cast<std::ptrdiff_t>(p))) continue;
        Spelling s(ls.begin(), ls.begin() + static_cast<std::ptrdiff_t>(p));
        s.insert(s.end(), dst.begin(), dst.end());
        s.insert(s.end(), ls.begin() + static_cast<std::ptrdiff_t>(p + src.size()), ls.end());
        out.push_back({r.id, d, p, Word::reduce(s)});
      }
    }
  }
  return out;
}

inline bool search_order(const Word& a, const Word& b) {
  if (a.size() != b.size()) return a.size() < b.size();
  return render(a) < render(b);
}

/// Breadth-first search over reduced words. Returns nullopt when the space
/// allowed by the bounds was exhausted without reaching the target; throws
/// BoundsExceeded when a bound cut the search short.
inline std::optional<Certificate> find_derivation(const Word& source, const Word& target,
                                                  const InstanceStore& store, const SearchBounds& bounds) {
  if (bounds.max_steps == 0 || bounds.max_word_length == 0 || bounds.max_states == 0) {
    throw Error(ErrorCode::Usage, "search bounds must be positive");
  }
  Certificate cert;
  cert.name = "search";
  cert.source = source;
  cert.target = target;
  if (source == target) return cert;

  struct Node {
    Word word;
    std::optional<std::size_t> parent;
    Move via;
  };
  std::vector<Node> nodes{{source, std::nullopt, {}}};
  std::map<Word, std::size_t> seen{{source, 0}};
  std::vector<std::size_t> layer{0};
  bool cut = false;

  for (std::size_t depth = 0; depth < bounds.max_steps && !layer.empty(); ++depth) {
    std::vector<std::size_t> next;
    for (std::size_t id : layer) {
      std::vector<Move> ms = moves(nodes[id].word, store);
      std::stable_sort(ms.begin(), ms.end(), [](const Move& a, const Move& b) { return search_order(a.result, b.result); });
      for (auto& m : ms) {
        if (m.result.size() > bounds.max_word_length) {
          cut = true;
          continue;
        }
        if (seen.count(m.result)) continue;
        if (nodes.size() >= bounds.max_states) {
          throw Error(ErrorCode::BoundsExceeded, "state limit " + std::to_string(bounds.max_states) + " reached");
        }
        seen[m.result] = nodes.size();
        nodes.push_back({m.result, id, m});
        if (m.result == target) {
          std::vector<Move> path;
          for (std::size_t at = nodes.size() - 1; nodes[at].parent; at = *nodes[at].parent) path.push_back(nodes[at].via);
          std::reverse(path.begin(), path.end());
          Word cur = source;
          for (const auto& p : path) {
            cert.steps.push_back(Step::apply(p.relation_id, p.direction, p.position));
            const RelationInstance& r = store.at(p.relation_id);
            const Word& src = p.direction == Direction::LhsToRhs ? r.lhs : r.rhs;
            const Word& dst = p.direction == Direction::LhsToRhs ? r.rhs : r.lhs;
            std::size_t spliced = cur.size() - src.size() + dst.size();
            if (p.result.size() != spliced) cert.steps.push_back(Step::regroup());
            cur = p.result;
          }
          return cert;
        }
        next.push_back(nodes.size() - 1);
      }
    }
    layer = std::move(next);
  }
  if (!layer.empty() || cut) {
    throw Error(ErrorCode::BoundsExceeded, "no derivation within " + std::to_string(bounds.max_steps) +
                                               " steps and length " + std::to_string(bounds.max_word_length));
  }
  return std::nullopt;
}

// ---- documents -----------------------------------------------------------------

inline Certificate load_certificate(const dsl::Document& doc) {
  using namespace dsl;
  if (doc.kind != DocumentKind::Derivation) throw Error(ErrorCode::ValidationError, "not a derivation document");
  Certificate c;
  bool header = false;
  for (const auto& s : doc.statements) {
    if (const auto* h = std::get_if<DeriveHeader>(&s.statement)) {
      if (header) throw Error(ErrorCode::ValidationError, "line " + std::to_string(s.span.line) + ": second header");
      header = true;
      c.name = h->name;
      c.source = Word::reduce(h->source);
      c.target = Word::reduce(h->target);
      c.context = h->context;
    } else if (const auto* ci = std::get_if<CiteStmt>(&s.statement)) {
      c.citation = ci->text;
    } else if (const auto* a = std::get_if<ApplyStmt>(&s.statement)) {
      c.steps.push_back(Step::apply(a->relation, a->direction, a->at, a->note));
    } else if (const auto* in = std::get_if<InsertStmt>(&s.statement)) {
      c.steps.push_back(Step::insert(in->pair, in->at, in->note));
    } else if (const auto* rg = std::get_if<RegroupStmt>(&s.statement)) {
      c.steps.push_back(Step::regroup(rg->note));
    }
    if (!header && !std::holds_alternative<Comment>(s.statement) && !std::holds_alternative<Blank>(s.statement)) {
      throw Error(ErrorCode::ValidationError, "line " + std::to_string(s.span.line) + ": step before 'derive' header");
    }
  }
  if (!header) throw Error(ErrorCode::ValidationError, "derivation has no 'derive' header");
  return c;
}

inline Certificate load_certificate(std::string_view text) {
  return load_certificate(dsl::parse(text, dsl::DocumentKind::Derivation));
}

inline dsl::Document to_document(const Certificate& c) {
  using namespace dsl;
  Document d;
  d.kind = DocumentKind::Derivation;
  auto add = [&](Statement s) { d.statements.push_back({std::move(s), {}, {}}); };
  add(DeriveHeader{c.name, c.source.letters(), c.target.letters(), c.context});
  if (!c.citation.empty()) add(CiteStmt{c.citation});
  for (const auto& s : c.steps) {
    switch (s.kind) {
      case StepKind::ApplyRelation: add(ApplyStmt{s.relation_id, s.direction, s.position, s.note}); break;
      case StepKind::InsertTrivialPair: add(InsertStmt{*s.pair, s.position, s.note}); break;
      case StepKind::Regroup: add(RegroupStmt{s.note}); break;
    }
  }
  return d;
}

inline std::string render(const Certificate& c) { return dsl::render(to_document(c)); }

}  // namespace mcgcheck
