#pragma once

// Bundled data: catalogs, certificates and morphisms on disk, plus the replay
// driver over the manifest.

#include <chrono>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <map>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include "mcgcheck/catalog.hpp"
#include "mcgcheck/derivation.hpp"
#include "mcgcheck/dsl.hpp"
#include "mcgcheck/error.hpp"
#include "mcgcheck/morphism.hpp"
#include "mcgcheck/schemas.hpp"

#ifndef MCGCHECK_DATA_DIR
#define MCGCHECK_DATA_DIR "data"
#endif

namespace mcgcheck {

namespace fs = std::filesystem;

/// MCG_DATA_DIR wins over the compiled-in location.
inline fs::path data_dir() {
  if (const char* env = std::getenv("MCG_DATA_DIR"); env && *env) return env;
  return MCGCHECK_DATA_DIR;
}

inline std::string read_text(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  if (!in) throw Error(ErrorCode::Usage, "cannot read " + p.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

struct Context {
  std::optional<PresentationKind> kind;  // none: the catalog's full store
  std::string catalog;
};

inline Context parse_context(const std::string& text) {
  auto at = text.find('@');
  if (at == std::string::npos) return {std::nullopt, text};
  return {parse_presentation_kind(text.substr(0, at)), text.substr(at + 1)};
}

class Bundle {
 public:
  explicit Bundle(fs::path root = data_dir()) : root_(std::move(root)) {}

  const fs::path& root() const { return root_; }

  /// A bundled catalog name, or a path to a .cat file.
  const FactBase& catalog(const std::string& name_or_path) {
    auto it = catalogs_.find(name_or_path);
    if (it != catalogs_.end()) return *it->second;
    fs::path p = name_or_path;
    if (!fs::is_regular_file(p)) p = root_ / "catalogs" / (name_or_path + ".cat");
    if (!fs::is_regular_file(p)) throw Error(ErrorCode::Usage, "no catalog '" + name_or_path + "'");
    auto fb = std::make_unique<FactBase>(load_catalog(read_text(p)));
    const FactBase& ref = *fb;
    catalogs_[name_or_path] = std::move(fb);
    return ref;
  }

  Presentation presentation(const std::string& context) {
    Context c = parse_context(context);
    if (!c.kind) throw Error(ErrorCode::Usage, "context '" + context + "' names no presentation");
    Presentation p = make_presentation(*c.kind, catalog(c.catalog));
    p.name = context;
    return p;
  }

  const InstanceStore& store(const std::string& context) {
    auto it = stores_.find(context);
    if (it != stores_.end()) return it->second;
    Context c = parse_context(context);
    const FactBase& fb = catalog(c.catalog);
    InstanceStore s = c.kind ? presentation_store(*c.kind, fb) : full_store(fb);
    return stores_.emplace(context, std::move(s)).first->second;
  }

  /// Existing paths as given; otherwise under the data root, then in the
  /// subdirectory its extension belongs to.
  fs::path resolve(const fs::path& p) const {
    if (p.is_absolute() || fs::exists(p)) return p;
    if (fs::exists(root_ / p)) return root_ / p;
    static const std::map<std::string, std::vector<std::string>> dirs = {
        {".cat", {"catalogs"}}, {".deriv", {"certs", "evidence"}}, {".morph", {"morph"}}, {".pres", {"pres"}}};
    if (auto it = dirs.find(p.extension().string()); it != dirs.end()) {
      for (const auto& d : it->second) {
        if (fs::exists(root_ / d / p)) return root_ / d / p;
      }
    }
    return p;
  }

  Certificate certificate(const fs::path& p) { return load_certificate(read_text(resolve(p))); }

  CheckReport check(const Certificate& c) { return check_certificate(c, store(c.context)); }

  /// Certificate paths inside a morphism are relative to the morphism file.
  PresentationMorphism morphism(const fs::path& p) {
    fs::path full = resolve(p);
    auto doc = dsl::parse(read_text(full), dsl::DocumentKind::Morphism);
    fs::path dir = full.parent_path();
    return load_morphism(
        doc, [&](const std::string& ctx) { return presentation(ctx); },
        [&](const std::string& rel) { return load_certificate(read_text(dir / rel)); });
  }

  /// A .pres file: generators and rels listed directly, or pulled in with
  /// `from <context>`.
  Presentation presentation_file(const fs::path& p) {
    auto doc = dsl::parse(read_text(resolve(p)), dsl::DocumentKind::Presentation);
    std::string name = p.stem().string();
    std::vector<GeneratorSymbol> gens;
    std::vector<RelationInstance> rels;
    auto add_gen = [&](const GeneratorSymbol& g) {
      if (std::find(gens.begin(), gens.end(), g) == gens.end()) gens.push_back(g);
    };
    for (const auto& s : doc.statements) {
      if (const auto* h = std::get_if<dsl::PresentationHeader>(&s.statement)) {
        name = h->name;
      } else if (const auto* g = std::get_if<dsl::GeneratorStmt>(&s.statement)) {
        add_gen(g->symbol);
      } else if (const auto* f = std::get_if<dsl::FromStmt>(&s.statement)) {
        Presentation base = presentation(f->context);
        for (const auto& g : base.generators) add_gen(g);
        rels.insert(rels.end(), base.relations.begin(), base.relations.end());
      } else if (const auto* r = std::get_if<dsl::RelStmt>(&s.statement)) {
        if (r->schema.empty()) {
          throw Error(ErrorCode::ValidationError,
                      "line " + std::to_string(s.span.line) + ": rel " + r->id + " needs a [schema, provenance] bracket");
        }
        RelationInstance ri{r->id, parse_schema(r->schema), Word::reduce(r->lhs), Word::reduce(r->rhs), {}, r->provenance};
        rels.push_back(std::move(ri));
      }
    }
    return make_presentation(name, std::move(gens), std::move(rels));
  }

 private:
  fs::path root_;
  std::map<std::string, std::unique_ptr<FactBase>> catalogs_;
  std::map<std::string, InstanceStore> stores_;
};

// ---- manifest ----------------------------------------------------------------------

/// One replay item. A certificate item may span several files that must all
/// pass; a morphism item checks well-definedness and then either the
/// generator-level inverse against `inverse` or the roundtrips.
struct ManifestItem {
  enum class Kind { Certificate, Morphism } kind;
  std::string name;
  std::vector<std::string> files;
  std::string inverse;
};

/// Line format: `cert <name> <file>...` or `morph <name> <file> [inverse=<file>]`.
inline std::vector<ManifestItem> load_manifest(const fs::path& p) {
  std::vector<ManifestItem> out;
  std::istringstream in(read_text(p));
  std::string line;
  std::size_t n = 0;
  while (std::getline(in, line)) {
    ++n;
    if (auto h = line.find('#'); h != std::string::npos) line.resize(h);
    std::istringstream ws(line);
    std::string kw, name;
    if (!(ws >> kw)) continue;
    if (!(ws >> name)) throw ParseError(n, 1, "item name");
    ManifestItem it;
    it.name = name;
    if (kw == "cert") it.kind = ManifestItem::Kind::Certificate;
    else if (kw == "morph") it.kind = ManifestItem::Kind::Morphism;
    else throw ParseError(n, 1, "'cert' or 'morph'");
    std::string tok;
    while (ws >> tok) {
      if (tok.rfind("inverse=", 0) == 0) it.inverse = tok.substr(8);
      else it.files.push_back(tok);
    }
    if (it.files.empty()) throw ParseError(n, line.size() + 1, "file");
    out.push_back(std::move(it));
  }
  return out;
}

struct ReplayItem {
  std::string kind, name;
  bool pass = false;
  std::string detail;
  double millis = 0;
};

struct ReplayReport {
  bool pass = true;
  std::vector<ReplayItem> items;
  std::size_t passed(const std::string& kind) const {
    std::size_t n = 0;
    for (const auto& i : items) n += i.kind == kind && i.pass;
    return n;
  }
};

/// Relation ids a certificate applies that its context does not license.
inline std::vector<std::string> unlicensed_relations(Bundle& b, const Certificate& c) {
  std::vector<std::string> out;
  const InstanceStore& s = b.store(c.context);
  for (const auto& st : c.steps) {
    if (st.kind == StepKind::ApplyRelation && !s.find(st.relation_id)) out.push_back(st.relation_id);
  }
  return out;
}

namespace bundle_detail {

inline std::string first_failure(const GeneratorReport& r) {
  for (const auto& g : r.generators) {
    if (!g.pass) return g.id + ": " + g.detail;
  }
  return {};
}

inline std::string first_failure(const WellDefinednessReport& r) {
  for (const auto& g : r.relators) {
    if (!g.pass) return g.id + ": " + g.detail;
  }
  return {};
}

inline ReplayItem run_certificates(Bundle& b, const ManifestItem& m) {
  ReplayItem it{"certificate", m.name, true, {}, 0};
  for (const auto& f : m.files) {
    Certificate c = b.certificate(f);
    if (auto bad = unlicensed_relations(b, c); !bad.empty()) {
      it.pass = false;
      it.detail = c.name + ": no instance " + bad.front() + " in " + c.context;
      return it;
    }
    CheckReport r = b.check(c);
    if (!r.pass) {
      it.pass = false;
      it.detail = c.name + " step " + (r.failing_step ? std::to_string(*r.failing_step) : "-") + ": " + r.reason;
      return it;
    }
    it.detail += (it.detail.empty() ? "" : ", ") + c.name + " (" + std::to_string(c.steps.size()) + " steps)";
  }
  return it;
}

inline ReplayItem run_morphism(Bundle& b, const ManifestItem& m) {
  ReplayItem it{"morphism", m.name, false, {}, 0};
  PresentationMorphism f = b.morphism(m.files.front());
  WellDefinednessReport wd = check_well_defined(f);
  if (!wd.pass) {
    it.detail = "relator " + first_failure(wd);
    return it;
  }
  GeneratorReport gi;
  if (!m.inverse.empty()) gi = check_generator_inverse(f, b.morphism(m.inverse));
  else gi = check_roundtrips(f);
  if (!gi.pass) {
    it.detail = "generator " + first_failure(gi);
    return it;
  }
  it.pass = true;
  it.detail = std::to_string(wd.relators.size()) + " relators, " + std::to_string(gi.generators.size()) + " generators";
  return it;
}

}  // namespace bundle_detail

/// Replays every manifest item in order. Problems inside the bundle count as
/// failures of that item, not input errors.
inline ReplayReport replay(Bundle& b, const fs::path& manifest) {
  ReplayReport rep;
  for (const auto& m : load_manifest(b.resolve(manifest))) {
    auto t0 = std::chrono::steady_clock::now();
    ReplayItem it;
    try {
      it = m.kind == ManifestItem::Kind::Certificate ? bundle_detail::run_certificates(b, m)
                                                     : bundle_detail::run_morphism(b, m);
    } catch (const std::exception& e) {
      it = {m.kind == ManifestItem::Kind::Certificate ? "certificate" : "morphism", m.name, false, e.what(), 0};
    }
    it.millis = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
    rep.pass = rep.pass && it.pass;
    rep.items.push_back(std::move(it));
  }
  return rep;
}

}  // namespace mcgcheck
