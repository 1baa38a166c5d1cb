#include "ialex/io.hpp"

#include <charconv>

#include "ialex/error.hpp"

namespace ialex::io {

namespace {

const char* type_name(const json& j) { return j.type_name(); }

}  // namespace

bool Field::has(const std::string& key) const { return value_->is_object() && value_->contains(key); }

Field Field::at(const std::string& key) const {
  expect_object();
  auto it = value_->find(key);
  if (it == value_->end()) throw Error(ErrorCode::SchemaError, "missing field \"" + key + "\"", path_ + "." + key);
  return Field(*it, path_ + "." + key);
}

std::optional<Field> Field::get(const std::string& key) const {
  expect_object();
  auto it = value_->find(key);
  if (it == value_->end() || it->is_null()) return std::nullopt;
  return Field(*it, path_ + "." + key);
}

Field Field::at(std::size_t index) const {
  expect_array();
  return Field((*value_)[index], path_ + "[" + std::to_string(index) + "]");
}

std::size_t Field::size() const {
  expect_array();
  return value_->size();
}

void Field::fail(const std::string& why) const { throw Error(ErrorCode::SchemaError, why, path_); }

void Field::expect_object() const {
  if (!value_->is_object()) fail(std::string("expected an object, got ") + type_name(*value_));
}

void Field::expect_array() const {
  if (!value_->is_array()) fail(std::string("expected an array, got ") + type_name(*value_));
}

long Field::as_long() const {
  if (!value_->is_number_integer()) fail(std::string("expected an integer, got ") + type_name(*value_));
  return value_->get<long>();
}

bool Field::as_bool() const {
  if (!value_->is_boolean()) fail(std::string("expected a boolean, got ") + type_name(*value_));
  return value_->get<bool>();
}

std::string Field::as_string() const {
  if (!value_->is_string()) fail(std::string("expected a string, got ") + type_name(*value_));
  return value_->get<std::string>();
}

LaurentPoly read_laurent(const Field& f) {
  // Bare integers are accepted as constant polynomials.
  if (f.value().is_number_integer()) return LaurentPoly(f.value().get<long>());
  std::string text = f.as_string();
  try {
    return parse_laurent(text);
  } catch (const Error& e) {
    throw Error(e.code(), e.what(), f.path());
  }
}

PrimitiveRep read_poly(const Field& f) {
  LaurentPoly p = read_laurent(f);
  if (p.is_zero()) throw Error(ErrorCode::ZeroPolynomial, "polynomial must be nonzero", f.path());
  return normalize(p);
}

PolyList read_polys(const Field& f) {
  PolyList out;
  for (std::size_t i = 0; i < f.size(); ++i) out.push_back(read_poly(f.at(i)));
  return out;
}

std::vector<std::optional<PrimitiveRep>> read_partial_polys(const Field& f) {
  std::vector<std::optional<PrimitiveRep>> out;
  for (std::size_t i = 0; i < f.size(); ++i) {
    Field e = f.at(i);
    if (e.value().is_null())
      out.emplace_back();
    else
      out.emplace_back(read_poly(e));
  }
  return out;
}

FgGammaModule read_module(const Field& f) {
  f.expect_object();
  long free = 0;
  if (auto fr = f.get("free")) {
    free = fr->as_long();
    if (free < 0) fr->fail("free rank must be non-negative");
  }
  PolyList torsion;
  if (auto t = f.get("torsion")) torsion = read_polys(*t);
  return FgGammaModule(static_cast<std::size_t>(free), std::move(torsion));
}

GradedModule read_modules(const Field& f) {
  GradedModule out;
  for (std::size_t i = 0; i < f.size(); ++i) out.push_back(read_module(f.at(i)));
  return out;
}

GammaMatrix read_matrix(const Field& f, std::optional<std::size_t> rows, std::optional<std::size_t> cols) {
  std::size_t r = f.size();
  if (rows && r != *rows && !(r == 0 && cols && *cols == 0))
    f.fail("expected " + std::to_string(*rows) + " rows, got " + std::to_string(r));
  std::size_t c = cols.value_or(0);
  if (r > 0) {
    Field first = f.at(std::size_t{0});
    first.expect_array();
    if (!cols) c = first.size();
  }
  GammaMatrix m(rows.value_or(r), c);
  for (std::size_t i = 0; i < r; ++i) {
    Field row = f.at(i);
    if (row.size() != c) row.fail("expected " + std::to_string(c) + " entries, got " + std::to_string(row.size()));
    for (std::size_t j = 0; j < c; ++j) m.at(i, j) = read_laurent(row.at(j));
  }
  return m;
}

Perversity read_perversity(const Field& f) {
  std::vector<long> values;
  for (std::size_t i = 0; i < f.size(); ++i) values.push_back(f.at(i).as_long());
  try {
    return Perversity(std::move(values));
  } catch (const Error& e) {
    throw Error(e.code(), e.what(), f.path());
  }
}

std::vector<Simplex> read_simplices(const Field& f) {
  std::vector<Simplex> out;
  for (std::size_t i = 0; i < f.size(); ++i) {
    Field s = f.at(i);
    Simplex simplex;
    for (std::size_t j = 0; j < s.size(); ++j) simplex.push_back(s.at(j).as_long());
    out.push_back(std::move(simplex));
  }
  return out;
}

Monodromy read_monodromy(const Field& f) {
  f.expect_object();
  Monodromy out;
  for (auto it = f.value().begin(); it != f.value().end(); ++it) {
    Field value(it.value(), f.path() + "." + it.key());
    const std::string& key = it.key();
    auto comma = key.find(',');
    long u = 0, v = 0;
    bool ok = comma != std::string::npos;
    if (ok) {
      auto r1 = std::from_chars(key.data(), key.data() + comma, u);
      auto r2 = std::from_chars(key.data() + comma + 1, key.data() + key.size(), v);
      ok = r1.ec == std::errc() && r1.ptr == key.data() + comma && r2.ec == std::errc() &&
           r2.ptr == key.data() + key.size();
    }
    if (!ok) value.fail("monodromy keys must look like \"u,v\"");
    out[{u, v}] = read_laurent(value);
  }
  return out;
}

json write(const PrimitiveRep& p) { return to_string(p); }
json write(const LaurentPoly& p) { return to_string(p); }

json write(const PolyList& ps) {
  json out = json::array();
  for (const auto& p : ps) out.push_back(write(p));
  return out;
}

json write(const FgGammaModule& m) { return json{{"free", m.free_rank()}, {"torsion", write(m.torsion())}}; }

json write(const GradedModule& ms) {
  json out = json::array();
  for (const auto& m : ms) out.push_back(write(m));
  return out;
}

json write(const GammaMatrix& m) {
  json out = json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(write(m.at(i, j)));
    out.push_back(std::move(row));
  }
  return out;
}

json write(const Factorization& f) {
  json out = json::array();
  for (const auto& pp : f) out.push_back(json::array({write(pp.prime), pp.multiplicity}));
  return out;
}

json write(const Perversity& p) { return p.values(); }

}  // namespace ialex::io
