#include <iostream>
#include <string>
#include <utility>

#include "CLI11.hpp"
#include "ialex/cli.hpp"
#include "ialex/error.hpp"

namespace {

using ialex::cli::json;

struct Globals {
  std::string input;
  bool as_json = false;
  bool as_text = false;
  std::size_t degree_cap = ialex::kDefaultDegreeCap;
  bool assume_zero_kernel = false;
  bool serial = false;
};

void add_globals(CLI::App* app, Globals& g, bool needs_input) {
  auto* in = app->add_option("--input", g.input, "case file or bare payload (JSON)");
  if (needs_input) in->required();
  auto* j = app->add_flag("--json", g.as_json, "JSON report");
  auto* t = app->add_flag("--text", g.as_text, "plain-text report (default)");
  j->excludes(t);
  app->add_option("--degree-cap", g.degree_cap, "largest degree the factorizer will attempt")
      ->check(CLI::PositiveNumber);
  app->add_flag("--assume-zero-kernel", g.assume_zero_kernel, "product case: take the high-degree kernel to vanish");
}

ialex::cli::RunOptions options(const Globals& g) {
  ialex::cli::RunOptions o;
  o.degree_cap = g.degree_cap;
  o.assume_zero_kernel = g.assume_zero_kernel;
  o.parallel = !g.serial;
  return o;
}

int emit(const ialex::cli::Report& r, const Globals& g) {
  std::cout << (g.as_json ? ialex::cli::render_json(r) : ialex::cli::render_text(r));
  return ialex::cli::exit_code(r);
}

ialex::cli::Report error_report(const std::string& kind, const ialex::Error& e) {
  ialex::cli::Report r;
  r.kind = kind;
  r.status = "error";
  r.error = ialex::cli::ReportError{std::string(ialex::error_code_name(e.code())), e.what(), e.path()};
  return r;
}

// A file holding {"kind", "payload"} is unwrapped; anything else is the payload itself.
json payload_of(const json& doc) {
  if (doc.is_object() && doc.contains("kind") && doc.contains("payload")) return doc["payload"];
  return doc;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Alexander polynomials of knots with singularities, over Q[t,t^-1]"};
  app.require_subcommand(1);
  Globals g;

  std::string poly_arg;
  auto* factor = app.add_subcommand("factor", "factor a Laurent polynomial");
  factor->add_option("poly", poly_arg, "polynomial text, e.g. \"t^2 - 1\"");
  add_globals(factor, g, false);

  auto* snf = app.add_subcommand("snf", "Smith normal form of a presentation matrix");
  add_globals(snf, g, true);

  auto* seq = app.add_subcommand("seq", "exact polynomial sequences");
  seq->require_subcommand(1);
  for (auto [name, about] : {std::pair{"check", "alternating product test"},
                              {"subpolynomials", "splittings of an exact sequence"},
                              {"solve", "fill unknown terms from known ones and junction splittings"},
                              {"split", "p-primary part of a module sequence"}})
    add_globals(seq->add_subcommand(name, about), g, true);

  auto* ia = app.add_subcommand("ia", "intersection Alexander polynomials");
  ia->require_subcommand(1);
  for (auto [name, about] : {std::pair{"point", "isolated point singularity"},
                              {"product", "singular set with a product neighborhood"},
                              {"dual", "superdual polynomials"},
                              {"verify", "normalization checks, expected-value cases, or case lists"}})
    add_globals(ia->add_subcommand(name, about), g, true);

  auto* bounds = app.add_subcommand("bounds", "prime-support and power bounds");
  bounds->require_subcommand(1);
  for (auto [name, about] : {std::pair{"allowed", "allowed primes, single stratum"},
                              {"exclude", "exclusion certificate for one prime"},
                              {"general", "allowed primes, general stratification"},
                              {"maxpower", "maximal power of a prime"},
                              {"check", "check a polynomial against allowed primes and powers"}})
    add_globals(bounds->add_subcommand(name, about), g, true);

  auto* homology = app.add_subcommand("homology", "twisted simplicial homology");
  add_globals(homology, g, true);
  auto* e2 = app.add_subcommand("e2", "E2 page of the neighborhood spectral sequence");
  add_globals(e2, g, true);

  auto* run = app.add_subcommand("run", "run a case file {\"kind\", \"payload\"}");
  add_globals(run, g, true);

  std::string dir;
  auto* corpus = app.add_subcommand("corpus", "run every *.json case file in a directory");
  corpus->add_option("dir", dir, "directory of case files")->required();
  add_globals(corpus, g, false);
  corpus->add_flag("--serial", g.serial, "run cases one at a time");

  CLI11_PARSE(app, argc, argv);

  auto opts = options(g);
  std::string kind;
  try {
    if (corpus->parsed()) {
      kind = "corpus";
      return emit(ialex::cli::corpus(dir, opts), g);
    }
    if (run->parsed()) {
      kind = "unknown";
      return emit(ialex::cli::run(ialex::cli::load_json(g.input), opts), g);
    }

    json payload;
    if (factor->parsed()) {
      kind = "factor";
      if (!poly_arg.empty())
        payload = json{{"poly", poly_arg}};
      else if (!g.input.empty())
        payload = payload_of(ialex::cli::load_json(g.input));
      else
        throw ialex::Error(ialex::ErrorCode::SchemaError, "give a polynomial or --input");
      return emit(ialex::cli::run_kind(kind, payload, opts), g);
    }

    payload = payload_of(ialex::cli::load_json(g.input));
    auto with_op = [&](CLI::App* parent) {
      for (auto* sub : parent->get_subcommands()) {
        if (payload.is_object()) payload["op"] = sub->get_name();
        return;
      }
    };
    if (snf->parsed()) {
      kind = "snf";
    } else if (seq->parsed()) {
      kind = "seq";
      with_op(seq);
    } else if (bounds->parsed()) {
      kind = "bounds";
      with_op(bounds);
    } else if (ia->parsed()) {
      std::string sub = ia->get_subcommands().front()->get_name();
      kind = sub == "verify" ? "verify" : "ia-" + sub;
    } else if (homology->parsed()) {
      kind = "homology";
    } else if (e2->parsed()) {
      kind = "e2";
    }
    return emit(ialex::cli::run_kind(kind, payload, opts), g);
  } catch (const ialex::Error& e) {
    return emit(error_report(kind.empty() ? "unknown" : kind, e), g);
  }
}
