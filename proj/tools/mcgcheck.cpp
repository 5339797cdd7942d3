// mcgcheck: command-line front end over the bundled data.
// Exit codes: 0 all pass, 1 verification failure, 2 input error.

#include <iomanip>
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"
#include "mcgcheck/abelian.hpp"
#include "mcgcheck/bundle.hpp"

using namespace mcgcheck;
using nlohmann::json;

namespace {

std::string with_catalog(const std::string& context, const std::string& catalog) {
  if (catalog.empty()) return context;
  auto at = context.find('@');
  return at == std::string::npos ? catalog : context.substr(0, at + 1) + catalog;
}

json to_json(const CheckReport& r) {
  json steps = json::array();
  for (const auto& s : r.steps) {
    steps.push_back({{"index", s.index}, {"rule", s.rule}, {"before", s.before}, {"after", s.after},
                     {"verdict", s.ok ? "ok" : "fail"}, {"error", s.error}});
  }
  json j = {{"name", r.name}, {"verdict", r.pass ? "PASS" : "FAIL"}, {"final", render(r.final_word)}, {"steps", steps}};
  if (r.failing_step) j["failing_step"] = *r.failing_step;
  if (!r.reason.empty()) j["reason"] = r.reason;
  return j;
}

void print(const CheckReport& r) {
  for (const auto& s : r.steps) {
    std::cout << (s.ok ? "  ok   " : "  FAIL ") << s.index << "  " << s.rule << "\n";
    std::cout << "         " << s.before << "\n      -> " << s.after << "\n";
    if (!s.ok) std::cout << "         " << s.error << "\n";
  }
  std::cout << r.name << ": " << (r.pass ? "PASS" : "FAIL");
  if (r.failing_step) std::cout << " at step " << *r.failing_step;
  if (!r.reason.empty()) std::cout << " (" << r.reason << ")";
  std::cout << "\n";
}

json to_json(const std::vector<RelatorResult>& rs) {
  json a = json::array();
  for (const auto& r : rs) {
    a.push_back({{"id", r.id}, {"method", r.method}, {"verdict", r.pass ? "PASS" : "FAIL"}, {"detail", r.detail}});
  }
  return a;
}

void print(const std::string& title, const std::vector<RelatorResult>& rs) {
  std::cout << title << "\n";
  for (const auto& r : rs) {
    std::cout << "  " << (r.pass ? "PASS " : "FAIL ") << r.id << "  [" << r.method << "]";
    if (!r.detail.empty()) std::cout << "  " << r.detail;
    std::cout << "\n";
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Check presentation certificates for mapping class groups of nonorientable surfaces"};
  app.require_subcommand(1);
  std::string data;
  bool as_json = false;
  app.add_option("--data", data, "data directory (default: MCG_DATA_DIR or the bundled data)");
  app.add_flag("--json", as_json, "machine-readable output");

  std::string catalog_arg, theorem, cert_path, morph_path, inverse_path, pres_path, from, to, manifest = "manifest.txt";
  bool derived = false;
  dsl::SearchBounds bounds{4, 32, 20000};

  auto* cat = app.add_subcommand("catalog", "validate a catalog and print it in canonical form");
  cat->add_option("--catalog", catalog_arg, "catalog name or .cat path")->required();

  auto* inst = app.add_subcommand("instantiate", "list the relation instances of a presentation");
  inst->add_option("--catalog", catalog_arg, "catalog name or .cat path")->required();
  inst->add_option("--theorem", theorem, "Thm1, Thm2, Thm3, Thm4 or Cor")->required();
  inst->add_flag("--derived", derived, "include derived instances");

  auto* check = app.add_subcommand("check", "replay a derivation certificate");
  check->add_option("--cert", cert_path, ".deriv file")->required();
  check->add_option("--catalog", catalog_arg, "override the catalog named in the certificate");

  auto* search = app.add_subcommand("search", "bounded breadth-first search for a derivation");
  search->add_option("--catalog", catalog_arg, "catalog name or .cat path")->required();
  search->add_option("--theorem", theorem, "presentation whose instances may be used; omit for all");
  search->add_option("--from", from, "source word")->required();
  search->add_option("--to", to, "target word")->required();
  search->add_option("--steps", bounds.max_steps, "max relation applications");
  search->add_option("--length", bounds.max_word_length, "max word length");
  search->add_option("--states", bounds.max_states, "max visited words");

  auto* morph = app.add_subcommand("check-morphism", "check that a morphism is well defined");
  morph->add_option("--morph", morph_path, ".morph file")->required();
  morph->add_option("--inverse", inverse_path, "morphism back, checked as a generator-level inverse");
  morph->add_option("--steps", bounds.max_steps, "search depth for the inverse check");

  auto* ab = app.add_subcommand("abelianize", "abelian invariants of a presentation");
  ab->add_option("--pres", pres_path, ".pres file");
  ab->add_option("--catalog", catalog_arg, "catalog name or .cat path");
  ab->add_option("--theorem", theorem, "Thm1, Thm2, Thm3, Thm4 or Cor");

  auto* rp = app.add_subcommand("replay-paper", "replay every bundled certificate and morphism");
  rp->add_option("--manifest", manifest, "manifest file, relative to the data directory");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }

  try {
    Bundle b(data.empty() ? data_dir() : fs::path(data));

    if (*cat) {
      const FactBase& fb = b.catalog(catalog_arg);
      if (as_json) {
        std::cout << json{{"catalog", fb.name},
                          {"curves", fb.curves.size()},
                          {"chains", fb.chains.size()},
                          {"lanterns", fb.lanterns.size()},
                          {"actors", fb.actors.size()},
                          {"actions", fb.actions.size()}}
                         .dump(2)
                  << "\n";
      } else {
        std::cout << render(fb);
      }
      return 0;
    }

    if (*inst) {
      PresentationKind k = parse_presentation_kind(theorem);
      const FactBase& fb = b.catalog(catalog_arg);
      auto rels = presentation_for(k, fb);
      if (derived) {
        auto more = derived_instances(k, fb);
        rels.insert(rels.end(), more.begin(), more.end());
      }
      if (as_json) {
        json a = json::array();
        for (const auto& r : rels) {
          a.push_back({{"id", r.id}, {"schema", to_string(r.schema)}, {"lhs", render(r.lhs)}, {"rhs", render(r.rhs)},
                       {"provenance", r.provenance}});
        }
        std::cout << a.dump(2) << "\n";
      } else {
        for (const auto& r : rels) std::cout << render(r) << "\n";
      }
      return 0;
    }

    if (*check) {
      Certificate c = b.certificate(cert_path);
      c.context = with_catalog(c.context, catalog_arg);
      CheckReport r = b.check(c);
      if (as_json) std::cout << to_json(r).dump(2) << "\n";
      else print(r);
      return r.pass ? 0 : 1;
    }

    if (*search) {
      std::string ctx = theorem.empty() ? catalog_arg : theorem + "@" + catalog_arg;
      const InstanceStore& store = b.store(ctx);
      std::optional<Certificate> found;
      std::string why;
      try {
        found = find_derivation(parse_word(from), parse_word(to), store, to_bounds(bounds));
        if (!found) why = "no derivation exists within the bounds";
      } catch (const Error& e) {
        if (e.code() != ErrorCode::BoundsExceeded) throw;
        why = e.what();
      }
      if (found) {
        found->name = "found";
        found->context = ctx;
      }
      if (as_json) {
        json j = {{"verdict", found ? "FOUND" : "NOT FOUND"}};
        if (found) j["certificate"] = render(*found);
        else j["reason"] = why;
        std::cout << j.dump(2) << "\n";
      } else if (found) {
        std::cout << render(*found);
      } else {
        std::cout << "not found: " << why << "\n";
      }
      return found ? 0 : 1;
    }

    if (*morph) {
      PresentationMorphism m = b.morphism(morph_path);
      WellDefinednessReport wd = check_well_defined(m);
      std::optional<GeneratorReport> gi;
      if (!inverse_path.empty()) gi = check_generator_inverse(m, b.morphism(inverse_path), to_bounds(bounds));
      else if (!m.roundtrips.empty()) gi = check_roundtrips(m);
      bool pass = wd.pass && (!gi || gi->pass);
      if (as_json) {
        json j = {{"morphism", m.name}, {"verdict", pass ? "PASS" : "FAIL"}, {"relators", to_json(wd.relators)}};
        if (gi) j["generators"] = to_json(gi->generators);
        std::cout << j.dump(2) << "\n";
      } else {
        print("relators of " + m.source.name + " under " + m.name + ":", wd.relators);
        if (gi) print("generators (" + gi->name + "):", gi->generators);
        std::cout << m.name << ": " << (pass ? "PASS" : "FAIL") << "\n";
      }
      return pass ? 0 : 1;
    }

    if (*ab) {
      Presentation p;
      if (!pres_path.empty()) {
        p = b.presentation_file(pres_path);
      } else if (!catalog_arg.empty() && !theorem.empty()) {
        p = b.presentation(theorem + "@" + catalog_arg);
      } else {
        throw Error(ErrorCode::Usage, "abelianize needs --pres, or --catalog with --theorem");
      }
      AbelianInvariants a = abelian_invariants(p.relations, p.generators);
      if (as_json) {
        json t = json::array();
        for (const auto& d : a.torsion) t.push_back(d.str());
        std::cout << json{{"presentation", p.name}, {"free_rank", a.free_rank}, {"torsion", t}, {"group", render(a)}}.dump(2)
                  << "\n";
      } else {
        std::cout << render(a) << "\n";
      }
      return 0;
    }

    if (*rp) {
      ReplayReport r = replay(b, manifest);
      if (as_json) {
        json a = json::array();
        for (const auto& i : r.items) {
          a.push_back({{"kind", i.kind}, {"name", i.name}, {"verdict", i.pass ? "PASS" : "FAIL"}, {"detail", i.detail}});
        }
        std::cout << json{{"verdict", r.pass ? "PASS" : "FAIL"}, {"items", a}}.dump(2) << "\n";
      } else {
        for (const auto& i : r.items) {
          std::cout << (i.pass ? "PASS  " : "FAIL  ") << std::left << std::setw(12) << i.kind << std::setw(22) << i.name
                    << i.detail << "\n";
        }
        std::size_t certs = 0, morphs = 0;
        for (const auto& i : r.items) (i.kind == "certificate" ? certs : morphs)++;
        std::cout << r.passed("certificate") << "/" << certs << " certificates PASS, " << r.passed("morphism") << "/"
                  << morphs << " morphisms PASS\n";
      }
      return r.pass ? 0 : 1;
    }
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    // missing evidence and exhausted bounds are failures to verify, not bad input
    if (e.code() == ErrorCode::EvidenceMissing || e.code() == ErrorCode::BoundsExceeded) return 1;
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
