#include "hsw/json_io.hpp"

#include <algorithm>
#include <sstream>

namespace hsw::io {

namespace {

[[noreturn]] void parse_error(const std::string& where, const std::string& what) {
  throw Error(ErrorKind::ParseError, where + ": " + what);
}

std::vector<std::uint32_t> index_list(const Json& j, const std::string& where) {
  if (!j.is_array()) parse_error(where, "expected an array");
  std::vector<std::uint32_t> out;
  for (std::size_t i = 0; i < j.size(); ++i) {
    if (!j[i].is_number_integer() || j[i].get<std::int64_t>() < 0)
      parse_error(where + "[" + std::to_string(i) + "]", "expected a nonnegative integer");
    out.push_back(j[i].get<std::uint32_t>());
  }
  return out;
}

std::string verdict_word(const FormVerdict& v) {
  const std::string base = v.kind == FormKind::Symmetric ? "Symmetric" : "Frobenius";
  return v.holds ? base : "Not" + base;
}

void flatten(const Json& j, const std::string& path, std::ostringstream& out) {
  if (j.is_object()) {
    if (j.empty()) out << path << ": {}\n";
    for (const auto& [k, v] : j.items()) flatten(v, path.empty() ? k : path + "." + k, out);
  } else if (j.is_array()) {
    const bool scalars = std::all_of(j.begin(), j.end(), [](const Json& e) { return e.is_primitive(); });
    if (scalars) {
      out << path << ": " << j.dump() << "\n";
    } else {
      for (std::size_t i = 0; i < j.size(); ++i) flatten(j[i], path + "[" + std::to_string(i) + "]", out);
    }
  } else {
    out << path << ": " << (j.is_string() ? j.get<std::string>() : j.dump()) << "\n";
  }
}

}  // namespace

PermGroup group_from_json(const Json& j) {
  if (!j.is_object()) parse_error("group", "expected an object with degree and generators");
  for (const auto& [k, v] : j.items())
    if (k != "degree" && k != "generators" && k != "schema") parse_error("group." + k, "unknown key");
  if (!j.contains("degree") || !j["degree"].is_number_integer() || j["degree"].get<std::int64_t>() < 1)
    parse_error("group.degree", "expected a positive integer");
  const auto n = j["degree"].get<std::size_t>();
  if (!j.contains("generators") || !j["generators"].is_array())
    parse_error("group.generators", "expected an array of image arrays");
  std::vector<Permutation> gens;
  const auto& gj = j["generators"];
  for (std::size_t i = 0; i < gj.size(); ++i) {
    const std::string where = "group.generators[" + std::to_string(i) + "]";
    if (!gj[i].is_array()) parse_error(where, "expected an array of images");
    std::vector<std::int64_t> images;
    for (const auto& v : gj[i]) {
      if (!v.is_number_integer()) parse_error(where, "images must be integers");
      images.push_back(v.get<std::int64_t>());
    }
    if (images.size() != n)
      parse_error(where, "has " + std::to_string(images.size()) + " images, degree is " + std::to_string(n));
    try {
      gens.push_back(Permutation::from_images_1based(images));
    } catch (const Error& e) {
      parse_error(where, std::string(to_string(e.kind())) + ": " + e.what());
    }
  }
  return PermGroup(n, std::move(gens));
}

Json group_to_json(const PermGroup& g) {
  Json gens = Json::array();
  for (const auto& s : g.generators()) gens.push_back(s.images_1based());
  return {{"degree", g.degree()}, {"generators", gens}};
}

Json config_to_json(const CoherentConfig& c) {
  Json orbs = Json::array();
  for (const auto& o : c.orbitals())
    orbs.push_back({{"id", o.id},
                    {"representative", {o.representative.first + 1, o.representative.second + 1}},
                    {"valency", o.valency},
                    {"size", o.size},
                    {"reflexive", o.reflexive},
                    {"paired", o.paired}});
  Json nonzero = Json::array();  // [t, r, s, c^t_{rs}]
  const std::size_t m = c.rank();
  for (std::size_t t = 0; t < m; ++t)
    for (std::size_t r = 0; r < m; ++r)
      for (std::size_t s = 0; s < m; ++s)
        if (c.c(t, r, s) != 0) nonzero.push_back({t, r, s, c.c(t, r, s)});
  return {{"degree", c.degree()},   {"rank", m},
          {"transitive", c.transitive()}, {"subdegrees", c.subdegrees()},
          {"orbitals", orbs},       {"intersection_numbers", nonzero}};
}

Json axioms_to_json(const AxiomReport& r) {
  return {{"partition", r.partition},
          {"diagonal_union", r.diagonal_union},
          {"closed_under_transpose", r.closed_under_star},
          {"constant_intersections", r.constant_intersections},
          {"triple_identity", r.triple_identity},
          {"all_pass", r.all_pass()},
          {"failures", r.failures}};
}

Json algebra_to_json(const Algebra& a) {
  const std::size_t d = a.dim();
  Json constants = Json::array();
  for (std::size_t i = 0; i < d; ++i) {
    Json row = Json::array();
    for (std::size_t j = 0; j < d; ++j) {
      Json v = Json::array();
      for (std::size_t l = 0; l < d; ++l) v.push_back(a.c(i, j, l));
      row.push_back(v);
    }
    constants.push_back(row);
  }
  return {{"schema", kSchema},
          {"p", a.field().characteristic()},
          {"k", a.field().degree()},
          {"modulus", a.field().modulus()},
          {"dim", d},
          {"labels", a.labels()},
          {"constants", constants},
          {"unit", a.unit()}};
}

Algebra algebra_from_json(const Json& j) {
  if (!j.is_object()) parse_error("algebra", "expected an object");
  auto need_uint = [&](const char* key) {
    if (!j.contains(key) || !j[key].is_number_integer() || j[key].get<std::int64_t>() < 0)
      parse_error(std::string("algebra.") + key, "expected a nonnegative integer");
    return j[key].get<std::uint64_t>();
  };
  const auto p = static_cast<std::uint32_t>(need_uint("p"));
  const auto k = j.contains("k") ? static_cast<unsigned>(need_uint("k")) : 1u;
  const auto d = need_uint("dim");
  std::vector<std::string> labels;
  if (j.contains("labels")) {
    if (!j["labels"].is_array() || j["labels"].size() != d) parse_error("algebra.labels", "need dim strings");
    for (const auto& l : j["labels"]) {
      if (!l.is_string()) parse_error("algebra.labels", "need dim strings");
      labels.push_back(l.get<std::string>());
    }
  } else {
    for (std::size_t i = 0; i < d; ++i) labels.push_back("b" + std::to_string(i));
  }
  if (!j.contains("constants") || !j["constants"].is_array() || j["constants"].size() != d)
    parse_error("algebra.constants", "expected a dim x dim x dim array");
  std::vector<std::int64_t> constants;
  for (std::size_t i = 0; i < d; ++i) {
    const auto& row = j["constants"][i];
    if (!row.is_array() || row.size() != d) parse_error("algebra.constants[" + std::to_string(i) + "]", "bad shape");
    for (std::size_t jj = 0; jj < d; ++jj) {
      const auto& v = row[jj];
      const std::string where = "algebra.constants[" + std::to_string(i) + "][" + std::to_string(jj) + "]";
      if (!v.is_array() || v.size() != d) parse_error(where, "bad shape");
      for (const auto& x : v) {
        if (!x.is_number_integer()) parse_error(where, "expected integers");
        constants.push_back(x.get<std::int64_t>());
      }
    }
  }
  if (!j.contains("unit") || !j["unit"].is_array() || j["unit"].size() != d)
    parse_error("algebra.unit", "expected dim integers");
  std::vector<std::int64_t> unit;
  for (const auto& x : j["unit"]) {
    if (!x.is_number_integer()) parse_error("algebra.unit", "expected integers");
    unit.push_back(x.get<std::int64_t>());
  }
  gf::Field f = gf::Field::make(p, k);
  if (k == 1) return Algebra::from_integers(f, std::move(labels), constants, unit);

  // over GF(p^k) entries are element encodings
  if (j.contains("modulus")) {
    gf::Poly modulus;
    for (const auto& c : j["modulus"]) {
      if (!c.is_number_integer() || c.get<std::int64_t>() < 0) parse_error("algebra.modulus", "expected integers");
      modulus.push_back(c.get<std::uint32_t>());
    }
    f = gf::Field::with_modulus(p, modulus);
  }
  auto encodings = [&](const std::vector<std::int64_t>& v, const char* where) {
    std::vector<gf::Elem> out;
    for (auto x : v) {
      if (x < 0 || static_cast<std::uint64_t>(x) >= f.order())
        parse_error(where, "entries must be field element encodings below " + std::to_string(f.order()));
      out.push_back(static_cast<gf::Elem>(x));
    }
    return out;
  };
  return Algebra::create(f, std::move(labels), encodings(constants, "algebra.constants"),
                         encodings(unit, "algebra.unit"));
}

Json verdict_to_json(const FormVerdict& v) {
  Json j{{"kind", to_string(v.kind)},
         {"holds", v.holds},
         {"verdict", verdict_word(v)},
         {"proof", v.proof == Proof::Exact ? "exact" : "probabilistic"},
         {"method", v.method},
         {"pencil_dimension", v.pencil_dimension},
         {"evaluations", v.evaluations}};
  if (v.proof == Proof::Probabilistic) {
    j["trials"] = v.trials;
    j["error_bound"] = v.error_bound;
  }
  if (v.certificate)
    j["certificate"] = {{"p", v.certificate->p},
                        {"k", v.certificate->k},
                        {"modulus", v.certificate->modulus},
                        {"point", v.certificate->point}};
  return j;
}

Json partition_to_json(const SchurPartition& p) {
  const auto& g = p.group();
  Json group;
  if (g.table() == FiniteGroupTable::cyclic(g.order()).table()) {
    group = "cyclic:" + std::to_string(g.order());
  } else {
    Json table = Json::array();
    for (std::uint32_t a = 0; a < g.order(); ++a) {
      Json row = Json::array();
      for (std::uint32_t b = 0; b < g.order(); ++b) row.push_back(g.mul(a, b));
      table.push_back(row);
    }
    group = {{"order", g.order()}, {"table", table}};
  }
  return {{"group", group}, {"basic_sets", p.sets()}};
}

SchurPartition partition_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("group") || !j.contains("basic_sets"))
    parse_error("partition", "expected an object with group and basic_sets");
  const auto& gj = j["group"];
  GroupPtr group;
  if (gj.is_string()) {
    const auto s = gj.get<std::string>();
    if (s.rfind("cyclic:", 0) != 0) parse_error("partition.group", "only \"cyclic:n\" is recognised as a name");
    std::size_t n = 0;
    try {
      std::size_t used = 0;
      n = std::stoul(s.substr(7), &used);
      if (used != s.size() - 7) n = 0;
    } catch (const std::exception&) {
    }
    if (n == 0) parse_error("partition.group", "bad order in '" + s + "'");
    group = std::make_shared<const FiniteGroupTable>(FiniteGroupTable::cyclic(n));
  } else if (gj.is_object()) {
    if (!gj.contains("order") || !gj["order"].is_number_integer())
      parse_error("partition.group.order", "expected an integer");
    const auto n = gj["order"].get<std::size_t>();
    if (!gj.contains("table") || !gj["table"].is_array() || gj["table"].size() != n)
      parse_error("partition.group.table", "expected order rows");
    std::vector<std::uint32_t> table;
    for (std::size_t i = 0; i < n; ++i) {
      auto row = index_list(gj["table"][i], "partition.group.table[" + std::to_string(i) + "]");
      if (row.size() != n) parse_error("partition.group.table[" + std::to_string(i) + "]", "expected order entries");
      table.insert(table.end(), row.begin(), row.end());
    }
    try {
      group = std::make_shared<const FiniteGroupTable>(FiniteGroupTable::create(n, std::move(table)));
    } catch (const Error& e) {
      parse_error("partition.group.table", e.what());
    }
  } else {
    parse_error("partition.group", "expected \"cyclic:n\" or {order, table}");
  }
  if (!j["basic_sets"].is_array()) parse_error("partition.basic_sets", "expected an array");
  std::vector<std::vector<std::uint32_t>> sets;
  for (std::size_t i = 0; i < j["basic_sets"].size(); ++i)
    sets.push_back(index_list(j["basic_sets"][i], "partition.basic_sets[" + std::to_string(i) + "]"));
  return SchurPartition::make(std::move(group), std::move(sets));
}

Json validation_to_json(const SchurValidation& v) {
  Json j{{"valid", v.valid}};
  if (!v.valid) j["reason"] = v.reason;
  if (v.witness)
    j["witness"] = {{"x", v.witness->x},           {"y", v.witness->y},
                    {"g", v.witness->g},           {"h", v.witness->h},
                    {"coeff_g", v.witness->coeff_g}, {"coeff_h", v.witness->coeff_h}};
  return j;
}

Json rank3_to_json(const Rank3Data& d, const Rank3Test& t) {
  return {{"a", d.a},       {"b", d.b},          {"lambda", d.lambda},
          {"n", d.n},       {"gcd", t.gcd_value}, {"verdict", t.is_s_permutation ? "S" : "not_S"}};
}

Json criterion_to_json(const CriterionReport& r) {
  static const char* names[] = {"i_subdegrees_prime_to_p", "ii_index_prime_to_p", "iii_abelian_regular_p_prime",
                                "iv_n_less_than_2p", "v_rank3_p_not_dividing_n"};
  Json conditions = Json::object();
  for (std::size_t i = 0; i < r.conditions.size(); ++i) {
    Json c{{"status", to_string(r.conditions[i].status)}};
    if (!r.conditions[i].detail.empty()) c["detail"] = r.conditions[i].detail;
    conditions[names[i]] = c;
  }
  return {{"p", r.p},
          {"conditions", conditions},
          {"direct", verdict_to_json(r.direct)},
          {"any_fired", r.any_fired},
          {"consistent", r.consistent}};
}

Json s_report_to_json(const SReport& s) {
  Json primes = Json::array();
  for (const auto& r : s.per_prime) primes.push_back(criterion_to_json(r));
  Json j{{"degree", s.degree},
         {"rank", s.rank},
         {"subdegrees", s.subdegrees},
         {"primes", primes},
         {"prime_bound", s.prime_bound},
         {"s_verdict",
          {{"symmetric_at_all_tested_primes", s.symmetric_at_all_tested},
           {"tested_primes", s.primes},
           {"note", "primes p > " + std::to_string(s.prime_bound) + " satisfy n < 2p and need no test"}}}};
  if (s.order) j["order"] = *s.order;
  if (s.rank3) j["rank3"] = rank3_to_json(*s.rank3, *s.rank3_test);
  if (!s.rank3_note.empty()) j["rank3_note"] = s.rank3_note;
  return j;
}

Json word_algebra_to_json(const WordAlgebra& w, const FormT& t) {
  Json gram = Json::array();
  for (std::size_t i = 0; i < t.gram.rows(); ++i) {
    Json row = Json::array();
    for (std::size_t j = 0; j < t.gram.cols(); ++j) row.push_back(t.gram(i, j));
    gram.push_back(row);
  }
  return {{"type", to_string(w.type())},
          {"braid_length", w.braid_length()},
          {"dim", w.algebra().dim()},
          {"confluent", w.confluent()},
          {"algebra", algebra_to_json(w.algebra())},
          {"form_t",
           {{"gram", gram},
            {"nondegenerate", t.nondegenerate},
            {"symmetric", t.symmetric},
            {"associative", t.associative}}}};
}

Json error_to_json(const Error& e) {
  return {{"schema", kSchema}, {"error", {{"kind", std::string(to_string(e.kind()))}, {"message", e.what()}}}};
}

std::string render_text(const Json& j) {
  std::ostringstream out;
  flatten(j, "", out);
  return out.str();
}

}  // namespace hsw::io
