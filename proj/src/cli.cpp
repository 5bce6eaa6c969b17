#include "hsw/cli.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <sstream>

#include "hsw/algebra.hpp"
#include "hsw/catalog.hpp"
#include "hsw/coherent.hpp"
#include "hsw/criteria.hpp"
#include "hsw/error.hpp"
#include "hsw/gfield.hpp"
#include "hsw/json_io.hpp"
#include "hsw/presentations.hpp"
#include "hsw/schur.hpp"

namespace hsw::cli {

namespace {

using io::Json;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Options {
  std::string group, file, mode = "det", format = "json", out, char_spec, primes_spec;
  std::vector<std::string> gens;
  std::size_t degree = 0;
  std::optional<std::uint64_t> seed;
  unsigned trials = 64;
  std::uint64_t cap = kDefaultElementCap;
  // algebra-level inputs
  std::string algebra_file, partition_file, type, kind, units_spec;
  std::size_t cyclic = 0;
  bool naive = false;
};

std::vector<std::uint32_t> parse_uint_list(const std::string& text, const char* what) {
  std::vector<std::uint32_t> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      std::size_t used = 0;
      const auto v = std::stoul(item, &used);
      if (used != item.size()) throw std::invalid_argument(item);
      out.push_back(static_cast<std::uint32_t>(v));
    } catch (const std::exception&) {
      throw UsageError(std::string("bad ") + what + " list '" + text + "'");
    }
  }
  if (out.empty()) throw UsageError(std::string("empty ") + what + " list");
  return out;
}

Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::ParseError, "cannot open '" + path + "'");
  try {
    return Json::parse(in);
  } catch (const Json::parse_error& e) {
    throw Error(ErrorKind::ParseError, path + ": " + e.what());
  }
}

struct LoadedGroup {
  PermGroup group;
  std::string source;
};

LoadedGroup load_group(const Options& o) {
  const int sources = !o.group.empty() + !o.file.empty() + !o.gens.empty();
  if (sources != 1) throw UsageError("give exactly one of --group, --file, --gens");
  if (!o.group.empty()) return {catalog::builtin(o.group).group, o.group};
  if (!o.file.empty()) return {io::group_from_json(read_json_file(o.file)), "file:" + o.file};
  if (o.degree == 0) throw UsageError("--gens needs --degree");
  std::vector<Permutation> gens;
  std::string joined;
  for (const auto& g : o.gens) {
    std::stringstream ss(g);
    std::string piece;
    while (std::getline(ss, piece, ';')) {
      gens.push_back(parse_permutation(piece, o.degree));
      joined += (joined.empty() ? "" : ";") + piece;
    }
  }
  return {PermGroup(o.degree, std::move(gens)), "gens:" + joined};
}

DecisionOptions decision_options(const Options& o) {
  DecisionOptions d;
  if (o.mode == "rand") {
    if (!o.seed) throw UsageError("--mode rand requires --seed");
    d.mode = DecisionMode::Randomized;
  }
  d.seed = o.seed.value_or(0);
  d.trials = o.trials;
  return d;
}

struct FieldSpec {
  std::uint32_t p;
  unsigned k;
};

std::vector<FieldSpec> fields_for(const Options& o, std::size_t degree) {
  if (!o.char_spec.empty()) {
    const auto v = parse_uint_list(o.char_spec, "--char");
    if (v.size() > 2) throw UsageError("--char takes p or p,k");
    return {{v[0], v.size() == 2 ? v[1] : 1u}};
  }
  std::vector<std::uint32_t> primes = o.primes_spec.empty()
                                          ? gf::primes_up_to(static_cast<std::uint32_t>(std::max<std::size_t>(degree, 2)))
                                          : parse_uint_list(o.primes_spec, "--primes");
  std::vector<FieldSpec> out;
  for (auto p : primes) out.push_back({p, 1});
  return out;
}

Json request_echo(const std::string& command, const Options& o, const std::string& source) {
  Json r{{"command", command}, {"mode", o.mode}};
  if (!source.empty()) r["group"] = source;
  if (!o.char_spec.empty()) r["char"] = o.char_spec;
  if (!o.primes_spec.empty()) r["primes"] = o.primes_spec;
  if (o.mode == "rand") {
    r["seed"] = *o.seed;
    r["trials"] = o.trials;
  }
  if (o.cap != kDefaultElementCap) r["cap"] = o.cap;
  if (!o.algebra_file.empty()) r["algebra"] = o.algebra_file;
  if (!o.partition_file.empty()) r["partition"] = o.partition_file;
  if (!o.type.empty()) r["type"] = o.type;
  if (!o.kind.empty()) r["kind"] = o.kind;
  if (o.cyclic) r["cyclic"] = o.cyclic;
  if (!o.units_spec.empty()) r["units"] = o.units_spec;
  return r;
}

Json verdicts(const Algebra& a, const DecisionOptions& d, bool frobenius_too) {
  Json j{{"symmetric", io::verdict_to_json(is_symmetric(a, d))}};
  if (frobenius_too) j["frobenius"] = io::verdict_to_json(is_frobenius(a, d));
  return j;
}

Json cmd_orbitals(const Options& o, Json& request) {
  auto [g, source] = load_group(o);
  request = request_echo("orbitals", o, source);
  const auto config = CoherentConfig::from_group(g);
  Json j = io::config_to_json(config);
  j["axioms"] = io::axioms_to_json(verify_axioms(config));
  if (auto order = g.order(o.cap)) j["order"] = *order;
  return j;
}

Json cmd_algebra(const Options& o, Json& request) {
  auto [g, source] = load_group(o);
  request = request_echo("algebra", o, source);
  if (o.char_spec.empty()) throw UsageError("algebra needs --char");
  const auto f = fields_for(o, g.degree()).front();
  return io::algebra_to_json(to_algebra(CoherentConfig::from_group(g), f.p, f.k));
}

Json cmd_form(const Options& o, Json& request, FormKind kind) {
  const std::string name = kind == FormKind::Symmetric ? "symmetric" : "frobenius";
  const auto d = decision_options(o);
  Json results = Json::array();
  if (!o.algebra_file.empty()) {
    request = request_echo(name, o, "");
    const auto a = io::algebra_from_json(read_json_file(o.algebra_file));
    Json v = io::verdict_to_json(decide_form(a, kind, d));
    v["p"] = a.field().characteristic();
    v["k"] = a.field().degree();
    results.push_back(v);
    return {{"verdicts", results}};
  }
  auto [g, source] = load_group(o);
  request = request_echo(name, o, source);
  const auto config = CoherentConfig::from_group(g);
  for (const auto& f : fields_for(o, g.degree())) {
    Json v = io::verdict_to_json(decide_form(to_algebra(config, f.p, f.k), kind, d));
    v["p"] = f.p;
    v["k"] = f.k;
    results.push_back(v);
  }
  return {{"rank", config.rank()}, {"verdicts", results}};
}

Json cmd_rank3(const Options& o, Json& request) {
  auto [g, source] = load_group(o);
  request = request_echo("rank3", o, source);
  const auto d = rank3_lambda(CoherentConfig::from_group(g));
  return io::rank3_to_json(d, rank3_s_test(d));
}

Json cmd_criteria(const Options& o, Json& request) {
  auto [g, source] = load_group(o);
  request = request_echo("criteria", o, source);
  CriteriaOptions c;
  c.decision = decision_options(o);
  c.cap = o.cap;
  std::vector<std::uint32_t> primes;
  if (!o.primes_spec.empty()) primes = parse_uint_list(o.primes_spec, "--primes");
  return io::s_report_to_json(s_report(g, primes, c));
}

Json partition_summary(const SchurPartition& p, const std::vector<FieldSpec>& fields, const DecisionOptions& d) {
  Json j = io::partition_to_json(p);
  const auto v = validate(p);
  j["validation"] = io::validation_to_json(v);
  j["rank"] = p.rank();
  if (v.valid && p.group().cyclic_generator()) j["class"] = to_string(classify_cyclic(p).label);
  if (v.valid && !fields.empty()) {
    Json per = Json::array();
    for (const auto& f : fields) {
      Json e = verdicts(to_algebra(p, f.p, f.k), d, false);
      e["p"] = f.p;
      e["k"] = f.k;
      per.push_back(e);
    }
    j["verdicts"] = per;
  }
  return j;
}

std::vector<FieldSpec> optional_fields(const Options& o) {
  if (o.char_spec.empty() && o.primes_spec.empty()) return {};
  return fields_for(o, 0);
}

Json cmd_schur(const std::string& sub, const Options& o, Json& request) {
  const auto d = decision_options(o);
  if (sub == "validate" || sub == "classify") {
    request = request_echo("schur " + sub, o, "");
    if (o.partition_file.empty()) throw UsageError("schur " + sub + " needs --partition");
    const auto p = io::partition_from_json(read_json_file(o.partition_file));
    if (sub == "validate") return partition_summary(p, optional_fields(o), d);
    const auto c = classify_cyclic(p);
    return {{"class", to_string(c.label)}, {"detail", c.detail}};
  }
  if (sub == "enumerate") {
    request = request_echo("schur enumerate", o, "");
    if (o.cyclic == 0) throw UsageError("schur enumerate needs --cyclic n");
    auto g = std::make_shared<const FiniteGroupTable>(FiniteGroupTable::cyclic(o.cyclic));
    const auto all = enumerate_all(g);
    Json rings = Json::array();
    for (const auto& p : all) rings.push_back(partition_summary(p, optional_fields(o), d));
    Json j{{"count", all.size()}, {"rings", rings}};
    if (o.naive) j["naive_count_agrees"] = enumerate_all_naive(g) == all;
    return j;
  }
  // build
  if (o.kind == "regular") {
    auto [g, source] = load_group(o);
    request = request_echo("schur build", o, source);
    const auto c = find_cyclic_regular(g, o.cap);
    if (!c) throw Error(ErrorKind::NotRegular, "no regular cyclic subgroup found");
    return partition_summary(from_regular_action(g, cyclic_powers(*c)), optional_fields(o), d);
  }
  request = request_echo("schur build", o, "");
  if (o.cyclic == 0) throw UsageError("schur build --kind " + o.kind + " needs --cyclic n");
  auto g = std::make_shared<const FiniteGroupTable>(FiniteGroupTable::cyclic(o.cyclic));
  if (o.kind == "trivial") return partition_summary(SchurPartition::trivial(g), optional_fields(o), d);
  if (o.kind == "group-algebra") return partition_summary(SchurPartition::group_algebra(g), optional_fields(o), d);
  if (o.kind == "cyclotomic") {
    if (o.units_spec.empty()) throw UsageError("--kind cyclotomic needs --units");
    return partition_summary(cyclotomic_cyclic(o.cyclic, parse_uint_list(o.units_spec, "--units")),
                             optional_fields(o), d);
  }
  throw UsageError("unknown --kind '" + o.kind + "' (trivial, group-algebra, cyclotomic, regular)");
}

Json cmd_presentation(const Options& o, Json& request) {
  request = request_echo("presentation", o, "");
  if (o.type.empty()) throw UsageError("presentation needs --type");
  const auto t = parse_coxeter_type(o.type);
  const auto f = o.char_spec.empty() ? FieldSpec{2, 1} : fields_for(o, 0).front();
  const auto w = WordAlgebra::build(t, f.p, f.k);
  Json j = io::word_algebra_to_json(w, form_t(w));
  j["verdicts"] = verdicts(w.algebra(), decision_options(o), true);
  return j;
}

void add_group_options(CLI::App* sub, Options& o) {
  sub->add_option("--group", o.group, "builtin group, e.g. dihedral:4");
  sub->add_option("--file", o.file, "group JSON file");
  sub->add_option("--gens", o.gens, "generators in cycle notation, ';' separated");
  sub->add_option("--degree", o.degree, "degree for --gens");
  sub->add_option("--cap", o.cap, "element enumeration cap");
}

void add_decision_options(CLI::App* sub, Options& o) {
  sub->add_option("--char", o.char_spec, "characteristic p or p,k");
  sub->add_option("--primes", o.primes_spec, "comma separated primes");
  sub->add_option("--mode", o.mode, "det or rand")->check(CLI::IsMember({"det", "rand"}));
  sub->add_option("--seed", o.seed, "seed for --mode rand");
  sub->add_option("--trials", o.trials, "random points in --mode rand");
}

void add_output_options(CLI::App* sub, Options& o) {
  sub->add_option("--format", o.format, "json or text")->check(CLI::IsMember({"json", "text"}));
  sub->add_option("--out", o.out, "write the report here instead of stdout");
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Endomorphism algebras of permutation modules: orbitals, symmetry and Frobenius tests", kToolName};
  app.require_subcommand(1);
  app.set_version_flag("--version", kVersion);

  std::map<std::string, CLI::App*> subs;
  for (const char* name : {"orbitals", "algebra", "symmetric", "frobenius", "rank3", "criteria"}) {
    auto* s = app.add_subcommand(name);
    add_group_options(s, o);
    add_decision_options(s, o);
    add_output_options(s, o);
    subs[name] = s;
  }
  subs["symmetric"]->add_option("--algebra", o.algebra_file, "algebra JSON instead of a group");
  subs["frobenius"]->add_option("--algebra", o.algebra_file, "algebra JSON instead of a group");
  subs["orbitals"]->description("orbitals, subdegrees and intersection numbers");
  subs["algebra"]->description("structure constants of the orbital algebra");
  subs["symmetric"]->description("is the orbital algebra symmetric");
  subs["frobenius"]->description("is the orbital algebra Frobenius");
  subs["rank3"]->description("rank-3 parameters and gcd test");
  subs["criteria"]->description("sufficient conditions per prime against the direct decision");

  auto* schur = app.add_subcommand("schur", "Schur rings over finite groups");
  schur->require_subcommand(1);
  for (const char* name : {"validate", "enumerate", "build", "classify"}) {
    auto* s = schur->add_subcommand(name);
    add_decision_options(s, o);
    add_output_options(s, o);
    subs[std::string("schur ") + name] = s;
  }
  subs["schur validate"]->description("check the Schur ring axioms for a partition");
  subs["schur enumerate"]->description("all Schur rings over a cyclic group, with symmetry verdicts");
  subs["schur build"]->description("construct a Schur ring");
  subs["schur classify"]->description("label a ring over a cyclic group");
  subs["schur validate"]->add_option("--partition", o.partition_file, "partition JSON")->required();
  subs["schur classify"]->add_option("--partition", o.partition_file, "partition JSON")->required();
  subs["schur enumerate"]->add_option("--cyclic", o.cyclic, "order of the cyclic group")->required();
  subs["schur enumerate"]->add_flag("--naive", o.naive, "cross-check with the unpruned enumerator");
  auto* build = subs["schur build"];
  build->add_option("--kind", o.kind, "trivial, group-algebra, cyclotomic or regular")->required();
  build->add_option("--cyclic", o.cyclic, "order of the cyclic group");
  build->add_option("--units", o.units_spec, "comma separated units for --kind cyclotomic");
  add_group_options(build, o);

  auto* pres = app.add_subcommand("presentation", "rank-2 0-Hecke word algebras");
  pres->add_option("--type", o.type, "D2, A2, B2 or G2")->required();
  add_decision_options(pres, o);
  add_output_options(pres, o);
  subs["presentation"] = pres;

  std::vector<std::string> argv_store{kToolName};
  argv_store.insert(argv_store.end(), args.begin(), args.end());
  std::vector<char*> argv;
  for (auto& a : argv_store) argv.push_back(a.data());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForAllHelp& e) {
    out << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::CallForVersion& e) {
    out << kVersion << "\n";
    return 0;
  } catch (const CLI::ParseError& e) {
    err << Json{{"schema", io::kSchema}, {"error", {{"kind", "UsageError"}, {"message", e.what()}}}}.dump(2)
        << "\n";
    return 1;
  }

  std::string command;
  for (const auto& [name, s] : subs)
    if (s->parsed()) command = name;

  try {
    Json request, result;
    if (command == "orbitals") result = cmd_orbitals(o, request);
    else if (command == "algebra") result = cmd_algebra(o, request);
    else if (command == "symmetric") result = cmd_form(o, request, FormKind::Symmetric);
    else if (command == "frobenius") result = cmd_form(o, request, FormKind::Frobenius);
    else if (command == "rank3") result = cmd_rank3(o, request);
    else if (command == "criteria") result = cmd_criteria(o, request);
    else if (command == "presentation") result = cmd_presentation(o, request);
    else result = cmd_schur(command.substr(6), o, request);

    const Json report{{"schema", io::kSchema},
                      {"tool", {{"name", kToolName}, {"version", kVersion}}},
                      {"request", request},
                      {"result", result}};
    const std::string text = o.format == "text" ? io::render_text(report) : report.dump(2) + "\n";
    if (o.out.empty()) {
      out << text;
    } else {
      std::ofstream f(o.out, std::ios::binary);
      if (!f) throw Error(ErrorKind::ParseError, "cannot write '" + o.out + "'");
      f << text;
    }
    return 0;
  } catch (const UsageError& e) {
    err << Json{{"schema", io::kSchema}, {"error", {{"kind", "UsageError"}, {"message", e.what()}}}}.dump(2)
        << "\n";
    return 1;
  } catch (const Error& e) {
    err << io::error_to_json(e).dump(2) << "\n";
    return e.kind() == ErrorKind::ModeInfeasible ? 3 : 2;
  }
}

}  // namespace hsw::cli
