#pragma once

// JSON literals for polynomials, matrices, modules, perversities and
// complexes. Readers report the JSON path of the field that failed.

#include <optional>
#include <string>
#include <vector>

#include "ialex/engine.hpp"
#include "ialex/exactseq.hpp"
#include "ialex/gmodule.hpp"
#include "ialex/laurent.hpp"
#include "ialex/twisted.hpp"
#include "json.hpp"

namespace ialex::io {

using nlohmann::json;

class Field {
 public:
  Field(const json& value, std::string path) : value_(&value), path_(std::move(path)) {}

  const json& value() const { return *value_; }
  const std::string& path() const { return path_; }

  bool has(const std::string& key) const;
  // Required member; throws SchemaError when absent.
  Field at(const std::string& key) const;
  std::optional<Field> get(const std::string& key) const;
  Field at(std::size_t index) const;
  std::size_t size() const;  // arrays only

  [[noreturn]] void fail(const std::string& why) const;
  void expect_object() const;
  void expect_array() const;

  long as_long() const;
  bool as_bool() const;
  std::string as_string() const;

 private:
  const json* value_;
  std::string path_;
};

LaurentPoly read_laurent(const Field& f);
PrimitiveRep read_poly(const Field& f);
PolyList read_polys(const Field& f);
std::vector<std::optional<PrimitiveRep>> read_partial_polys(const Field& f);
FgGammaModule read_module(const Field& f);
GradedModule read_modules(const Field& f);
// rows/cols are enforced when given (a 0-row matrix may be written as []).
GammaMatrix read_matrix(const Field& f, std::optional<std::size_t> rows = {}, std::optional<std::size_t> cols = {});
Perversity read_perversity(const Field& f);
std::vector<Simplex> read_simplices(const Field& f);
Monodromy read_monodromy(const Field& f);

json write(const PrimitiveRep& p);
json write(const LaurentPoly& p);
json write(const PolyList& ps);
json write(const FgGammaModule& m);
json write(const GradedModule& ms);
json write(const GammaMatrix& m);
json write(const Factorization& f);
json write(const Perversity& p);

}  // namespace ialex::io
