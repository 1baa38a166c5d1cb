#include <algorithm>
#include <fstream>
#include <future>
#include <sstream>
#include <thread>

#include "ialex/bounds.hpp"
#include "ialex/cli.hpp"
#include "ialex/engine.hpp"
#include "ialex/error.hpp"
#include "ialex/exactseq.hpp"
#include "ialex/io.hpp"
#include "ialex/twisted.hpp"

namespace ialex::cli {

namespace {

using io::Field;
using io::write;

json checks_json(const std::vector<NormalizationCheck>& checks) {
  json out = json::array();
  for (const auto& c : checks) out.push_back({{"degree", c.degree}, {"clause", c.clause}, {"pass", c.pass}});
  return out;
}

std::optional<std::pair<long, long>> read_range(const Field& ranges, const std::string& key) {
  auto r = ranges.get(key);
  if (!r) return std::nullopt;
  if (r->size() != 2) r->fail("a range is [lo, hi]");
  return std::make_pair(r->at(std::size_t{0}).as_long(), r->at(std::size_t{1}).as_long());
}

DiskKnotData read_disk_knot(const Field& p) {
  DiskKnotData d;
  d.n = p.at("n").as_long();
  if (auto f = p.get("a")) d.a = io::read_polys(*f);
  if (auto f = p.get("b")) d.b = io::read_polys(*f);
  if (auto f = p.get("c")) d.c = io::read_polys(*f);
  if (auto f = p.get("lambda")) d.lambda = io::read_polys(*f);
  if (auto f = p.get("nu")) d.nu = io::read_polys(*f);
  if (auto f = p.get("mu")) d.mu = io::read_polys(*f);
  if (auto r = p.get("ranges")) {
    d.a_range = read_range(*r, "a");
    d.b_range = read_range(*r, "b");
    d.c_range = read_range(*r, "c");
  }
  return d;
}

BaseFamily read_base(const Field& p) {
  BaseFamily base;
  base.complex = SimplicialComplex::from_facets(io::read_simplices(p.at("simplices")));
  if (auto m = p.get("monodromy_by_degree"))
    for (std::size_t q = 0; q < m->size(); ++q) base.monodromy_by_degree.push_back(io::read_monodromy(m->at(q)));
  return base;
}

json table_json(const E2Table& table) {
  json out = json::array();
  for (const auto& [key, e] : table) {
    auto [i, p, q] = key;
    out.push_back({{"i", i}, {"p", p}, {"q", q}, {"e", write(e)}});
  }
  return out;
}

E2Table read_table(const Field& f) {
  E2Table table;
  for (std::size_t r = 0; r < f.size(); ++r) {
    Field e = f.at(r);
    long i = e.has("i") ? e.at("i").as_long() : 0;
    table[{i, e.at("p").as_long(), e.at("q").as_long()}] = io::read_poly(e.at("e"));
  }
  return table;
}

json certificate_json(const Certificate& c) {
  json out{{"pass", c.pass}};
  if (!c.pass) {
    out["prime"] = write(*c.prime);
    out["reason"] = c.reason;
    out["observed"] = c.observed;
    out["allowed"] = c.allowed;
  }
  return out;
}

// Every key of `expected` must match in `actual`; objects recurse.
bool matches(const json& actual, const json& expected) {
  if (expected.is_object()) {
    if (!actual.is_object()) return false;
    for (auto it = expected.begin(); it != expected.end(); ++it)
      if (!actual.contains(it.key()) || !matches(actual[it.key()], it.value())) return false;
    return true;
  }
  return actual == expected;
}

void run_factor(const Field& p, const RunOptions& opt, Report& r) {
  r.values["factors"] = write(factor(io::read_laurent(p.at("poly")), opt.degree_cap));
}

void run_snf(const Field& p, Report& r) {
  std::optional<std::size_t> cols;
  if (auto c = p.get("cols")) cols = static_cast<std::size_t>(c->as_long());
  GammaMatrix m = io::read_matrix(p.at("matrix"), std::nullopt, cols);
  SmithForm s = smith_normal_form(m);
  r.values["factors"] = write(s.factors);
  r.values["rank"] = s.rank;
  r.values["cokernel"] = write(FgGammaModule(s.free_rank, s.factors));
}

ModuleSequence read_module_sequence(const Field& p) {
  ModuleSequence seq;
  seq.modules = io::read_modules(p.at("modules"));
  Field maps = p.at("maps");
  for (std::size_t i = 0; i < maps.size(); ++i) {
    if (i + 1 >= seq.modules.size()) maps.at(i).fail("more maps than module pairs");
    seq.maps.push_back(io::read_matrix(maps.at(i), seq.modules[i + 1].torsion().size(),
                                       seq.modules[i].torsion().size()));
  }
  return seq;
}

void run_seq(const Field& p, const RunOptions& opt, Report& r) {
  std::string op = p.at("op").as_string();
  if (op == "check") {
    bool ok = check_alternating_product(io::read_polys(p.at("polys")));
    r.values["alternating"] = ok;
    if (!ok) r.status = "fail";
  } else if (op == "subpolynomials") {
    r.values["splittings"] = write(subpolynomials(io::read_polys(p.at("polys"))));
  } else if (op == "solve") {
    auto known = io::read_partial_polys(p.at("polys"));
    std::map<std::size_t, PrimitiveRep> junction;
    if (auto j = p.get("junction")) {
      j->expect_object();
      for (auto it = j->value().begin(); it != j->value().end(); ++it) {
        Field v(it.value(), j->path() + "." + it.key());
        std::size_t pos = 0;
        try {
          std::size_t used = 0;
          pos = std::stoul(it.key(), &used);
          if (used != it.key().size()) throw std::invalid_argument("trailing");
        } catch (const std::exception&) {
          v.fail("junction keys are splitting positions");
        }
        junction[pos] = io::read_poly(v);
      }
    }
    CompletedSequence done = solve_missing_third(known, junction);
    r.values["polys"] = write(done.polys);
    r.values["splittings"] = write(done.splittings);
    r.values["alternating_checked"] = done.alternating_checked;
  } else if (op == "split") {
    ModuleSequence seq = read_module_sequence(p);
    ModuleSequence out = split_primary(seq, io::read_poly(p.at("prime")), opt.degree_cap);
    json maps = json::array();
    for (const auto& m : out.maps) maps.push_back(write(m));
    r.values["modules"] = write(out.modules);
    r.values["maps"] = maps;
  } else {
    p.at("op").fail("unknown seq op \"" + op + "\"");
  }
}

void run_ia_point(const Field& p, Report& r) {
  DiskKnotData d = read_disk_knot(p);
  PointResult res = ia_point(d, io::read_perversity(p.at("perversity")));
  json table = json::array();
  for (std::size_t i = 0; i < res.ia.size(); ++i)
    table.push_back({{"degree", i}, {"branch", branch_name(res.branch[i])}, {"value", write(res.ia[i])}});
  r.values["threshold"] = res.threshold;
  r.values["table"] = table;
  r.values["ia"] = write(res.ia);
}

void run_ia_product(const Field& p, const RunOptions& opt, Report& r) {
  ProductSingularityInput in;
  in.n = p.at("n").as_long();
  in.k = p.at("k").as_long();
  in.perversity = io::read_perversity(p.at("perversity"));
  in.sigma_homology = io::read_modules(p.at("sigma"));
  in.link_modules = io::read_modules(p.at("link"));
  if (auto c = p.get("c")) in.c = io::read_polys(*c);
  if (auto f = p.get("a_high")) in.a_high = io::read_polys(*f);
  if (auto f = p.get("a")) in.a = io::read_polys(*f);
  if (auto f = p.get("lambda")) in.lambda = io::read_polys(*f);
  in.assume_zero_kernel = opt.assume_zero_kernel;
  if (auto f = p.get("assume_zero_kernel")) in.assume_zero_kernel = in.assume_zero_kernel || f->as_bool();
  ProductResult res = ia_product(in);
  json table = json::array();
  for (std::size_t i = 0; i < res.degrees.size(); ++i) {
    const auto& d = res.degrees[i];
    table.push_back({{"degree", i},
                     {"nu", write(d.nu)},
                     {"high", write(d.high)},
                     {"a_high", write(d.a_high)},
                     {"b_high", write(d.b_high)},
                     {"b_low", write(d.b_low)},
                     {"a", write(d.a)},
                     {"b", write(d.b)},
                     {"lambda", write(d.lambda)},
                     {"mu", write(d.mu)},
                     {"ia", write(d.ia)}});
  }
  r.values["threshold"] = res.threshold;
  r.values["table"] = table;
  r.values["ia"] = write(res.ia());
}

void run_ia_dual(const Field& p, Report& r) {
  r.values["dual"] = write(superdual_polynomials(io::read_polys(p.at("ia")), p.at("n").as_long()));
}

void run_bounds(const Field& p, const RunOptions& opt, Report& r) {
  std::string op = p.at("op").as_string();
  const std::size_t cap = opt.degree_cap;
  if (op == "allowed") {
    PrimeSet s = allowed_primes_single(p.at("i").as_long(), p.at("n").as_long(), p.at("k").as_long(),
                                       io::read_poly(p.at("c")), io::read_polys(p.at("xi")), cap);
    r.values["primes"] = write(PolyList(s.begin(), s.end()));
  } else if (op == "exclude") {
    r.values["excluded"] = exclusion_single(io::read_poly(p.at("gamma")), p.at("i").as_long(), p.at("k").as_long(),
                                            io::read_perversity(p.at("perversity")), io::read_poly(p.at("lambda")),
                                            io::read_polys(p.at("xi")), cap);
  } else if (op == "general") {
    StratificationData data;
    data.n = p.at("n").as_long();
    Field strata = p.at("strata");
    for (std::size_t s = 0; s < strata.size(); ++s) {
      Field st = strata.at(s);
      Stratum stratum;
      stratum.dim = st.at("dim").as_long();
      Field comps = st.at("components");
      for (std::size_t c = 0; c < comps.size(); ++c) {
        LinkComponent comp;
        comp.xi = io::read_polys(comps.at(c).at("xi"));
        if (auto z = comps.at(c).get("zeta")) comp.zeta = io::read_polys(*z);
        stratum.components.push_back(std::move(comp));
      }
      data.strata.push_back(std::move(stratum));
    }
    bool ordinary = false;
    if (auto u = p.get("use_ordinary")) ordinary = u->as_bool();
    PrimeSet s = allowed_primes_general(p.at("j").as_long(), io::read_poly(p.at("lambda")), data, ordinary, cap);
    r.values["primes"] = write(PolyList(s.begin(), s.end()));
  } else if (op == "maxpower") {
    PrimitiveRep gamma = io::read_poly(p.at("gamma"));
    unsigned long gamma_j = 0;
    if (auto l = p.get("lambda")) {
      require_prime(gamma, cap);
      gamma_j = multiplicity(gamma, io::read_poly(*l));
    } else {
      long g = p.at("gamma_j").as_long();
      if (g < 0) p.at("gamma_j").fail("gamma_j must be non-negative");
      gamma_j = static_cast<unsigned long>(g);
    }
    r.values["bound"] = max_power_bound(gamma, p.at("j").as_long(), gamma_j, read_table(p.at("table")),
                                        p.at("n").as_long(), io::read_perversity(p.at("perversity")), cap);
  } else if (op == "check") {
    PrimeSet allowed;
    for (const auto& q : io::read_polys(p.at("allowed"))) allowed.insert(q);
    std::map<PrimitiveRep, unsigned long> bounds;
    if (auto pb = p.get("power_bounds")) {
      for (std::size_t i = 0; i < pb->size(); ++i) {
        Field e = pb->at(i);
        if (e.size() != 2) e.fail("power bounds are [prime, bound] pairs");
        long b = e.at(std::size_t{1}).as_long();
        if (b < 0) e.fail("bound must be non-negative");
        bounds[io::read_poly(e.at(std::size_t{0}))] = static_cast<unsigned long>(b);
      }
    }
    Certificate c = check_result(io::read_poly(p.at("ia")), allowed, bounds, cap);
    r.values["pass"] = c.pass;
    r.certificates = certificate_json(c);
    if (!c.pass) r.status = "fail";
  } else {
    p.at("op").fail("unknown bounds op \"" + op + "\"");
  }
}

void run_homology(const Field& p, Report& r) {
  SimplicialComplex complex = SimplicialComplex::from_facets(io::read_simplices(p.at("simplices")));
  Monodromy mono;
  if (auto m = p.get("monodromy")) mono = io::read_monodromy(*m);
  FgGammaModule stalk = FgGammaModule::free(1);
  if (auto s = p.get("stalk")) stalk = io::read_module(*s);
  TwistedComplex tc(std::move(complex), std::move(mono), std::move(stalk));
  r.values["homology"] = write(twisted_homology(tc));
}

void run_e2(const Field& p, Report& r) {
  BaseFamily base = read_base(p);
  GradedModule link = io::read_modules(p.at("link"));
  std::string page = "link";
  if (auto f = p.get("page")) page = f->as_string();
  E2Table table;
  if (page == "link") {
    table = e2_link_page(base, link);
  } else if (page == "cone") {
    table = e2_cone_page(base, link, p.at("codim").as_long(), io::read_perversity(p.at("perversity")));
  } else {
    p.at("page").fail("page is \"link\" or \"cone\"");
  }
  long top = 0;
  for (const auto& [key, e] : table) top = std::max(top, std::get<1>(key) + std::get<2>(key));
  json bounds = json::array();
  for (long j = 0; j <= top; ++j) bounds.push_back({{"j", j}, {"bound", write(abutment_divisor_bound(table, j))}});
  r.values["entries"] = table_json(table);
  r.values["abutment_bounds"] = bounds;
}

void run_verify(const Field& p, const RunOptions& opt, Report& r) {
  if (auto cases = p.get("cases")) {
    json rows = json::array();
    std::size_t passed = 0;
    for (std::size_t i = 0; i < cases->size(); ++i) {
      Report sub = run(cases->at(i).value(), opt);
      json row{{"index", i}, {"kind", sub.kind}, {"status", sub.status}};
      if (sub.error) row["error"] = sub.error->code;
      rows.push_back(std::move(row));
      if (sub.status == "pass") ++passed;
    }
    r.values["cases"] = rows;
    r.values["total"] = cases->size();
    r.values["passed"] = passed;
    if (passed != cases->size()) r.status = "fail";
  } else if (auto c = p.get("case")) {
    Report sub = run(c->value(), opt);
    json expected = p.at("expect").value();
    json actual = to_json(sub);
    bool ok = matches(actual, expected);
    r.values["case_kind"] = sub.kind;
    r.values["case_status"] = sub.status;
    r.values["match"] = ok;
    if (!ok) {
      r.status = "fail";
      r.certificates = json{{"expected", expected}, {"actual", actual}};
    }
  } else {
    bool super = false;
    if (auto s = p.get("super")) super = s->as_bool();
    auto checks = validate_normalization(io::read_polys(p.at("ia")), p.at("n").as_long(), super);
    r.values["checks"] = checks_json(checks);
    if (!all_pass(checks)) r.status = "fail";
  }
}

}  // namespace

Report run_kind(const std::string& kind, const json& payload, const RunOptions& options) {
  Report r;
  r.kind = kind;
  try {
    Field p(payload, "$.payload");
    p.expect_object();
    if (kind == "factor")
      run_factor(p, options, r);
    else if (kind == "snf")
      run_snf(p, r);
    else if (kind == "seq")
      run_seq(p, options, r);
    else if (kind == "ia-point")
      run_ia_point(p, r);
    else if (kind == "ia-product")
      run_ia_product(p, options, r);
    else if (kind == "ia-dual")
      run_ia_dual(p, r);
    else if (kind == "bounds")
      run_bounds(p, options, r);
    else if (kind == "homology")
      run_homology(p, r);
    else if (kind == "e2")
      run_e2(p, r);
    else if (kind == "verify")
      run_verify(p, options, r);
    else
      throw Error(ErrorCode::SchemaError, "unknown kind \"" + kind + "\"", "$.kind");
  } catch (const Error& e) {
    r.status = "error";
    r.values = json::object();
    r.certificates.reset();
    r.error = ReportError{std::string(error_code_name(e.code())), e.what(), e.path()};
  }
  return r;
}

Report run(const json& case_file, const RunOptions& options) {
  if (!case_file.is_object() || !case_file.contains("kind") || !case_file["kind"].is_string()) {
    Report r;
    r.kind = "unknown";
    r.status = "error";
    r.error = ReportError{"SchemaError", "case file needs a string \"kind\"", "$.kind"};
    return r;
  }
  std::string kind = case_file["kind"].get<std::string>();
  if (!case_file.contains("payload")) {
    Report r;
    r.kind = kind;
    r.status = "error";
    r.error = ReportError{"SchemaError", "case file needs a \"payload\" object", "$.payload"};
    return r;
  }
  return run_kind(kind, case_file["payload"], options);
}

int exit_code(const Report& report) {
  if (report.status == "pass") return 0;
  if (report.error && report.error->code == "DegreeCapExceeded") return 2;
  return 1;
}

json to_json(const Report& report) {
  json out{{"kind", report.kind}, {"status", report.status}, {"values", report.values}};
  if (report.certificates) out["certificates"] = *report.certificates;
  if (report.error) {
    json e{{"code", report.error->code}, {"message", report.error->message}};
    if (!report.error->path.empty()) e["path"] = report.error->path;
    out["error"] = e;
  }
  return out;
}

std::string render_json(const Report& report) { return to_json(report).dump(2) + "\n"; }

namespace {

std::string scalar_text(const json& v) {
  if (v.is_string()) return v.get<std::string>();
  if (v.is_array()) {
    std::string s;
    for (std::size_t i = 0; i < v.size(); ++i) s += (i ? ", " : "") + scalar_text(v[i]);
    return "[" + s + "]";
  }
  if (v.is_object()) return v.dump();
  return v.dump();
}

void render_table(std::ostringstream& os, const json& rows, const std::string& indent) {
  std::vector<std::string> cols;
  for (const auto& row : rows)
    for (auto it = row.begin(); it != row.end(); ++it)
      if (std::find(cols.begin(), cols.end(), it.key()) == cols.end()) cols.push_back(it.key());
  // Degree-like keys lead.
  std::stable_partition(cols.begin(), cols.end(), [](const std::string& c) {
    return c == "degree" || c == "index" || c == "file" || c == "i" || c == "j" || c == "p" || c == "q";
  });
  std::vector<std::vector<std::string>> cells;
  std::vector<std::size_t> width(cols.size());
  for (std::size_t c = 0; c < cols.size(); ++c) width[c] = cols[c].size();
  for (const auto& row : rows) {
    std::vector<std::string> line;
    for (std::size_t c = 0; c < cols.size(); ++c) {
      std::string s = row.contains(cols[c]) ? scalar_text(row[cols[c]]) : "";
      width[c] = std::max(width[c], s.size());
      line.push_back(std::move(s));
    }
    cells.push_back(std::move(line));
  }
  auto emit = [&](const std::vector<std::string>& line) {
    std::string s = indent;
    for (std::size_t c = 0; c < line.size(); ++c) {
      s += line[c];
      if (c + 1 < line.size()) s += std::string(width[c] - line[c].size() + 2, ' ');
    }
    while (!s.empty() && s.back() == ' ') s.pop_back();
    os << s << "\n";
  };
  emit(cols);
  for (const auto& line : cells) emit(line);
}

void render_value(std::ostringstream& os, const std::string& key, const json& v, const std::string& indent) {
  if (v.is_array() && !v.empty() && std::all_of(v.begin(), v.end(), [](const json& e) { return e.is_object(); })) {
    os << indent << key << ":\n";
    render_table(os, v, indent + "  ");
  } else if (v.is_object()) {
    os << indent << key << ":\n";
    for (auto it = v.begin(); it != v.end(); ++it) render_value(os, it.key(), it.value(), indent + "  ");
  } else {
    os << indent << key << ": " << scalar_text(v) << "\n";
  }
}

}  // namespace

std::string render_text(const Report& report) {
  std::ostringstream os;
  os << "kind: " << report.kind << "\n";
  os << "status: " << report.status << "\n";
  if (report.error) {
    os << "error: " << report.error->code << ": " << report.error->message;
    if (!report.error->path.empty()) os << " (at " << report.error->path << ")";
    os << "\n";
  }
  for (auto it = report.values.begin(); it != report.values.end(); ++it) render_value(os, it.key(), it.value(), "");
  if (report.certificates) render_value(os, "certificates", *report.certificates, "");
  return os.str();
}

json load_json(const std::filesystem::path& file) {
  std::ifstream in(file, std::ios::binary);
  if (!in) throw Error(ErrorCode::IoError, "cannot read " + file.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  try {
    return json::parse(buf.str());
  } catch (const json::parse_error& e) {
    throw Error(ErrorCode::ParseError, file.filename().string() + ": " + e.what());
  }
}

Report corpus(const std::filesystem::path& dir, const RunOptions& options) {
  std::error_code ec;
  if (!std::filesystem::is_directory(dir, ec)) throw Error(ErrorCode::IoError, "not a directory: " + dir.string());
  std::vector<std::filesystem::path> files;
  for (const auto& entry : std::filesystem::directory_iterator(dir, ec))
    if (entry.is_regular_file() && entry.path().extension() == ".json") files.push_back(entry.path());
  if (ec) throw Error(ErrorCode::IoError, "cannot list " + dir.string() + ": " + ec.message());
  std::sort(files.begin(), files.end(),
            [](const auto& a, const auto& b) { return a.filename().string() < b.filename().string(); });

  auto run_file = [&options](const std::filesystem::path& file) {
    try {
      return run(load_json(file), options);
    } catch (const Error& e) {
      Report r;
      r.kind = "unknown";
      r.status = "error";
      r.error = ReportError{std::string(error_code_name(e.code())), e.what(), ""};
      return r;
    }
  };

  std::vector<Report> reports(files.size());
  if (options.parallel && files.size() > 1) {
    const std::size_t batch = std::max<std::size_t>(1, std::thread::hardware_concurrency());
    for (std::size_t start = 0; start < files.size(); start += batch) {
      std::vector<std::future<Report>> futures;
      for (std::size_t i = start; i < std::min(files.size(), start + batch); ++i)
        futures.push_back(std::async(std::launch::async, run_file, files[i]));
      for (std::size_t i = 0; i < futures.size(); ++i) reports[start + i] = futures[i].get();
    }
  } else {
    for (std::size_t i = 0; i < files.size(); ++i) reports[i] = run_file(files[i]);
  }

  Report agg;
  agg.kind = "corpus";
  json rows = json::array();
  json full = json::object();
  std::size_t passed = 0;
  for (std::size_t i = 0; i < files.size(); ++i) {
    std::string name = files[i].filename().string();
    json row{{"file", name}, {"kind", reports[i].kind}, {"status", reports[i].status}};
    if (reports[i].error) row["error"] = reports[i].error->code + ": " + reports[i].error->message;
    rows.push_back(std::move(row));
    full[name] = to_json(reports[i]);
    if (reports[i].status == "pass") ++passed;
  }
  agg.values["cases"] = rows;
  agg.values["total"] = files.size();
  agg.values["passed"] = passed;
  agg.values["failed"] = files.size() - passed;
  agg.values["reports"] = full;
  if (passed != files.size()) agg.status = "fail";
  return agg;
}

}  // namespace ialex::cli
