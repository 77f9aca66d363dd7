#include "dl/cli.hpp"

#include <algorithm>
#include <charconv>
#include <memory>
#include <ostream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"

#include "dl/eval.hpp"
#include "dl/suites.hpp"

namespace dl {

namespace {

using nlohmann::json;

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::optional<int> to_int(std::string_view s) {
  int v = 0;
  const auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc{} || p != s.data() + s.size()) return std::nullopt;
  return v;
}

bool valid_name(std::string_view s) {
  if (s.empty() || !std::isalpha(static_cast<unsigned char>(s.front()))) return false;
  return std::all_of(s.begin(), s.end(), [](char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; });
}

GenTable parse_gens(const std::vector<std::string>& specs) {
  GenTable t;
  for (const auto& spec : specs) {
    std::vector<std::string> parts;
    std::stringstream ss(spec);
    for (std::string part; std::getline(ss, part, ':');) parts.push_back(part);
    if (parts.size() < 2 || parts.size() > 3 || !valid_name(parts[0])) {
      throw UsageError("generator declaration '" + spec + "' should read name:degree[:weight]");
    }
    const auto deg = to_int(parts[1]);
    const auto wt = parts.size() == 3 ? to_int(parts[2]) : std::optional<int>(1);
    if (!deg || *deg < 0) throw UsageError("bad degree in '" + spec + "'");
    if (!wt || *wt < 1) throw UsageError("bad weight in '" + spec + "'");
    if (t.find(parts[0])) throw UsageError("generator '" + parts[0] + "' declared twice");
    t.add(parts[0], *deg, *wt);
  }
  return t;
}

bool is_en(const Query& q) {
  if (!q.flavor || *q.flavor == "Einf") return false;
  if (*q.flavor == "En") return true;
  throw UsageError("--flavor takes En or Einf");
}

int required_n(const Query& q) {
  if (!q.n) throw UsageError("--flavor En needs --n");
  if (*q.n < 1) throw UsageError("--n must be at least 1");
  return *q.n;
}

ModelName parse_model(const std::string& s) {
  if (auto m = model_from_name(s)) return *m;
  throw UsageError("unknown model '" + s + "' (expected A, MO or MU)");
}

std::unique_ptr<EvalContext> make_context(const Query& q) {
  if (q.model) {
    if (!q.gens.empty()) throw UsageError("--model and --gens are exclusive");
    return std::make_unique<ModelContext>(ModelAlgebra(parse_model(*q.model), q.cap));
  }
  if (q.gens.empty()) throw UsageError("declare generators with --gens name:degree[:weight] or choose --model");
  GenTable gens = parse_gens(q.gens);
  if (is_en(q)) return std::make_unique<BracketContext>(required_n(q), std::move(gens));
  return std::make_unique<FreeEinfContext>(std::move(gens), q.cap.value_or(32));
}

json monomial_json(const Monomial& m, const std::function<std::string(int)>& name) {
  json t = json::array();
  const auto& e = m.exponents();
  for (std::size_t i = 0; i < e.size(); ++i) {
    if (e[i] != 0) t.push_back({name(static_cast<int>(i)), e[i]});
  }
  return t;
}

json poly_json(const Poly& p, const std::function<std::string(int)>& name) {
  json arr = json::array();
  for (const auto& m : p.terms()) arr.push_back(monomial_json(m, name));
  return arr;
}

json op_json(const OpPoly& p) {
  json arr = json::array();
  for (const auto& w : p.words()) {
    json t = json::array();
    for (const auto& s : w) t.push_back({to_string(s), 1});
    arr.push_back(t);
  }
  return arr;
}

struct Outcome {
  Status status = Status::Ok;
  std::string text;
  json result_terms;   // null when the command has no single result
  json suite_results;  // null unless `verify`
  json extra = json::object();
};

OpPoly normalize_operators(const OpPoly& p) {
  bool has_lower = false, has_other = false, has_p = false;
  for (const auto& w : p.words()) {
    for (const auto& s : w) {
      has_lower = has_lower || s.kind == OpKind::LowerQ;
      has_other = has_other || s.kind != OpKind::LowerQ;
      has_p = has_p || s.kind == OpKind::SteenrodP;
    }
  }
  if (has_lower && has_other) throw Error(Errc::Unsupported, "lower-indexed words cannot be mixed with Q^s or P_r");
  OpPoly out;
  for (const auto& w : p.words()) {
    if (has_lower) {
      out += normalize_lower(w);
    } else if (has_p) {
      out += normalize_mixed(w);
    } else {
      out += normalize_upper(w);
    }
  }
  return out;
}

Outcome cup_one_outcome(bool eta) {
  Outcome o;
  o.text = eta ? "eta" : "0";
  o.result_terms = eta ? json::array({json::array({json::array({"eta", 1})})}) : json::array();
  return o;
}

Outcome element_outcome(const Query& q, const Expr& e) {
  const auto ctx = make_context(q);
  const auto [p, table] = ctx->presentation(evaluate(e, *ctx));
  Outcome o;
  o.text = to_string(p, table);
  o.result_terms = poly_json(p, [&](int id) { return table[id].name; });
  return o;
}

std::string require_input(const Query& q, const char* what) {
  if (q.input.empty()) throw UsageError(std::string(q.command) + " needs " + what);
  return q.input;
}

Outcome cmd_normalize(const Query& q) {
  const Expr e = parse(require_input(q, "an expression"));
  if (auto eta = cup_one_literal(e)) return cup_one_outcome(*eta);
  if (is_operator_expr(e)) {
    const OpPoly nf = normalize_operators(operator_poly(e));
    Outcome o;
    o.text = to_string(nf);
    o.result_terms = op_json(nf);
    return o;
  }
  return element_outcome(q, e);
}

Outcome cmd_act(const Query& q) {
  const Expr e = parse(require_input(q, "an expression"));
  if (auto eta = cup_one_literal(e)) return cup_one_outcome(*eta);
  if (is_operator_expr(e)) throw UsageError("act needs an operand; use normalize for operator words");
  return element_outcome(q, e);
}

FreeAlgebra free_algebra(const Query& q, int maxdeg) {
  if (q.gens.empty()) throw UsageError(q.command + " needs --gens");
  GenTable gens = parse_gens(q.gens);
  const int cap = std::max(maxdeg, q.cap.value_or(0));
  if (is_en(q)) return FreeAlgebra::en(required_n(q), std::move(gens), cap);
  return FreeAlgebra::einf(std::move(gens), cap);
}

Outcome cmd_free_basis(const Query& q) {
  const int maxdeg = q.maxdeg.value_or(10);
  const FreeAlgebra alg = free_algebra(q, maxdeg);
  Outcome o;
  std::ostringstream text;
  json gens = json::array();
  text << "generators:\n";
  for (const auto& c : alg.classes_up_to(maxdeg)) {
    const std::string name = class_name(c.word, alg.generators()[c.gen].name);
    text << "  " << c.degree << ": " << name << "\n";
    gens.push_back({{"name", name}, {"degree", c.degree}, {"weight", c.weight}});
  }
  o.extra["generators"] = gens;
  const auto name = [&](int id) { return alg.class_table()[id].name; };
  try {
    const auto basis = alg.basis(maxdeg);
    json terms = json::array();
    json by_degree = json::object();
    text << "basis:\n";
    for (const auto& [deg, ms] : basis) {
      text << "  " << deg << ":";
      json row = json::array();
      for (std::size_t k = 0; k < ms.size(); ++k) {
        const std::string s = to_string(ms[k], alg.class_table());
        text << (k ? ", " : " ") << s;
        row.push_back(s);
        terms.push_back(monomial_json(ms[k], name));
      }
      text << "\n";
      by_degree[std::to_string(deg)] = row;
    }
    o.result_terms = terms;
    o.extra["basis"] = by_degree;
  } catch (const Error& err) {
    if (err.code() != Errc::Unsupported) throw;
    text << "basis: not listed (" << err.what() << ")\n";
  }
  o.text = text.str();
  if (!o.text.empty() && o.text.back() == '\n') o.text.pop_back();
  return o;
}

Outcome cmd_poincare(const Query& q) {
  const int maxdeg = q.maxdeg.value_or(20);
  std::vector<int> dims;
  if (q.model) {
    const ModelAlgebra A(parse_model(*q.model), std::max(maxdeg, q.cap.value_or(0)));
    std::vector<int> degs;
    for (const auto& g : A.variables().all()) {
      if (g.degree <= maxdeg) degs.push_back(g.degree);
    }
    dims = polynomial_poincare(degs, maxdeg);
  } else {
    dims = free_algebra(q, maxdeg).poincare(maxdeg);
  }
  Outcome o;
  for (std::size_t k = 0; k < dims.size(); ++k) o.text += (k ? " " : "") + std::to_string(dims[k]);
  o.extra["dims"] = dims;
  return o;
}

OpSym single_op(const std::string& text) {
  const Expr e = parse(text);
  if (e.kind != Expr::Kind::Word || e.word.size() != 1 || e.word[0].kind == OpKind::SteenrodP) {
    throw UsageError("--ops takes single operations such as Q_1 or Q^4, got '" + text + "'");
  }
  return e.word[0];
}

std::string generator_name(int i, int e) {
  std::string s = "xibar_" + std::to_string(i);
  return e > 1 ? s + "^" + std::to_string(e) : s;
}

Outcome cmd_closure(const Query& q) {
  if (q.model && parse_model(*q.model) != ModelName::A) throw UsageError("closure runs in the dual Steenrod algebra A");
  if (!q.sub) throw UsageError("closure needs --sub");
  const SubalgebraSpec sub = SubalgebraSpec::parse(*q.sub);
  const int maxdeg = q.maxdeg.value_or(q.cap.value_or(ModelAlgebra::kDefaultCapA));
  const ModelAlgebra A(ModelName::A, std::max(maxdeg, q.cap.value_or(0)));
  std::vector<OpSym> ops;
  std::string ops_text = "every Q^s";
  if (q.ops) {
    std::stringstream ss(*q.ops);
    for (std::string part; std::getline(ss, part, ',');) {
      if (part.find_first_not_of(' ') != std::string::npos) ops.push_back(single_op(part));
    }
    if (ops.empty()) throw UsageError("--ops is empty");
    ops_text.clear();
    for (const auto& op : ops) ops_text += (ops_text.empty() ? "" : ", ") + to_string(op);
  }
  const auto violations = q.ops ? closure_check(A, sub, ops, maxdeg) : closure_check_all_upper(A, sub, maxdeg);
  Outcome o;
  const auto xname = [&](int id) { return A.xibar_variables()[id].name; };
  json list = json::array();
  std::ostringstream text;
  if (violations.empty()) {
    text << sub.name() << " is closed under " << ops_text << " through degree " << maxdeg;
    o.result_terms = json::array();
  } else {
    o.status = Status::Violation;
    text << sub.name() << " is not closed under " << ops_text << " through degree " << maxdeg << ":";
    for (const auto& v : violations) {
      const Poly img = A.to_xibar_coordinates(v.image);
      const std::string image = to_string(img, A.xibar_variables());
      const std::string gen = generator_name(v.xibar_index, v.exponent);
      text << "\n  " << to_string(v.op) << " " << gen << " = " << image;
      list.push_back({{"generator", gen}, {"op", to_string(v.op)}, {"image", image}, {"image_terms", poly_json(img, xname)}});
    }
    o.result_terms = list.front()["image_terms"];
  }
  o.extra["violations"] = list;
  o.text = text.str();
  return o;
}

Outcome cmd_suspend(const Query& q) {
  const Expr e = parse(require_input(q, "a lower-indexed operator expression"));
  if (!is_operator_expr(e)) throw UsageError("suspend takes operator words such as Q_3 Q_1");
  const OpPoly p = operator_poly(e);
  for (const auto& w : p.words()) {
    for (const auto& s : w) {
      if (s.kind != OpKind::LowerQ) throw UsageError("suspend takes lower-indexed words only");
    }
  }
  const int times = q.times.value_or(1);
  if (times < 0) throw UsageError("--times must be non-negative");
  const OpPoly r = suspend(p, times);
  Outcome o;
  o.text = to_string(r);
  o.result_terms = op_json(r);
  return o;
}

Outcome cmd_pow_table(const Query& q) {
  if (!q.m) throw UsageError("pow-table needs --m");
  if (*q.m < 0) throw UsageError("--m must be non-negative");
  std::optional<int> n;
  if (q.flavor ? is_en(q) : q.n.has_value()) n = required_n(q);
  const auto t = weight2_table(*q.m, n, q.maxidx.value_or(8));
  Outcome o;
  std::ostringstream text;
  text << "weight-2 operations on degree " << t.m << " for " << (n ? "E_" + std::to_string(*n) : std::string("E_infinity"))
       << ": " << t.rows.size() << (n ? "" : " shown, suspension stable");
  json rows = json::array();
  const int depth = q.times.value_or(n.value_or(0));
  for (const auto& row : t.rows) {
    const std::string op = n ? "Q_" + std::to_string(row.index) : "Q^" + std::to_string(row.index);
    text << "\n  " << op << "  degree " << row.target_degree;
    json images = json::array();
    if (n) {
      text << "  suspensions:";
      for (int k = 1; k <= depth && k <= static_cast<int>(row.images.size()); ++k) {
        const auto& img = row.images[static_cast<std::size_t>(k - 1)];
        const std::string s = img ? "Q_" + std::to_string(*img) : "0";
        text << (k > 1 ? ", " : " ") << s;
        images.push_back(s);
      }
    }
    rows.push_back({{"op", op}, {"degree", row.target_degree}, {"suspensions", images}});
  }
  o.text = text.str();
  o.extra["rows"] = rows;
  o.extra["stable"] = t.stable;
  return o;
}

Outcome cmd_obstruction(const Query& q) {
  const int cap = q.cap.value_or(12);
  const auto r = bp_splitting_obstruction(cap);
  const ModelAlgebra MU(ModelName::MU, cap);
  const ModelAlgebra A(ModelName::A, std::max(cap, 10));
  const auto yes = [](bool b) { return b ? "yes" : "no"; };
  Outcome o;
  std::ostringstream text;
  text << "Q^8 b_1 + b_1^2 Q^4 b_1 = " << MU.format(r.z) << "\n"
       << "Q^6 b_2 = " << MU.format(r.q6b2) << "\n"
       << "Q^8(xi_1^2) + xi_1^4 Q^4(xi_1^2) = " << A.format(r.image) << "\n"
       << "equal to Q^6 b_2: " << yes(r.z_equals_q6b2) << "\n"
       << "nonzero in H_*MU: " << yes(r.nonzero_source) << "\n"
       << "zero in A_*: " << yes(r.zero_image) << "\n"
       << "no E_" << r.threshold << " map MU -> BP respects the splitting: " << yes(r.obstructed());
  o.text = text.str();
  o.status = r.obstructed() ? Status::Ok : Status::Violation;
  o.result_terms = poly_json(r.z, [&](int id) { return MU.variables()[id].name; });
  o.extra["obstructed"] = r.obstructed();
  o.extra["threshold"] = r.threshold;
  return o;
}

Outcome cmd_verify(const Query& q) {
  const std::string name = require_input(q, "a suite name");
  const auto& names = suite_names();
  if (std::find(names.begin(), names.end(), name) == names.end()) {
    std::string all;
    for (const auto& n : names) all += (all.empty() ? "" : ", ") + n;
    throw UsageError("unknown suite '" + name + "' (one of " + all + ")");
  }
  const SuiteResult r = run_suite(name, {q.maxidx, q.maxdeg, q.cap, q.n});
  Outcome o;
  std::ostringstream text;
  text << "verify " << r.suite << ": " << (r.ok() ? "ok" : "violation");
  json results = json::array();
  for (const auto& c : r.checks) {
    text << "\n  " << (c.ok ? "ok    " : "FAIL  ") << c.name << " (" << c.detail << ")";
    results.push_back({{"name", c.name}, {"ok", c.ok}, {"instances", c.instances}, {"detail", c.detail}});
  }
  o.text = text.str();
  o.status = r.ok() ? Status::Ok : Status::Violation;
  o.suite_results = results;
  return o;
}

json inputs_json(const Query& q) {
  json in = json::object();
  if (!q.input.empty()) in[q.command == "verify" ? "suite" : "expression"] = q.input;
  if (q.model) in["model"] = *q.model;
  if (q.sub) in["sub"] = *q.sub;
  if (q.ops) in["ops"] = *q.ops;
  if (q.flavor) in["flavor"] = *q.flavor;
  if (!q.gens.empty()) in["gens"] = q.gens;
  if (q.cap) in["cap"] = *q.cap;
  if (q.maxdeg) in["maxdeg"] = *q.maxdeg;
  if (q.n) in["n"] = *q.n;
  if (q.times) in["times"] = *q.times;
  if (q.m) in["m"] = *q.m;
  if (q.maxidx) in["maxidx"] = *q.maxidx;
  return in;
}

const char* status_name(Status s) {
  switch (s) {
    case Status::Ok: return "ok";
    case Status::Violation: return "violation";
    case Status::Error: return "error";
  }
  return "error";
}

}  // namespace

Report run(const Query& q) {
  Outcome o;
  std::string error;
  try {
    if (q.command == "normalize") o = cmd_normalize(q);
    else if (q.command == "act") o = cmd_act(q);
    else if (q.command == "free-basis") o = cmd_free_basis(q);
    else if (q.command == "poincare") o = cmd_poincare(q);
    else if (q.command == "closure") o = cmd_closure(q);
    else if (q.command == "suspend") o = cmd_suspend(q);
    else if (q.command == "pow-table") o = cmd_pow_table(q);
    else if (q.command == "obstruction") o = cmd_obstruction(q);
    else if (q.command == "verify") o = cmd_verify(q);
    else throw UsageError("unknown command '" + q.command + "'");
  } catch (const UsageError& e) {
    error = std::string("usage: ") + e.what();
  } catch (const Error& e) {
    error = e.what();
  }
  Report r;
  json doc = {{"command", q.command}, {"inputs", inputs_json(q)}};
  if (!error.empty()) {
    r.status = Status::Error;
    r.text = "error: " + error + "\n";
    doc["status"] = status_name(r.status);
    doc["error"] = error;
    doc["result_terms"] = nullptr;
    doc["suite_results"] = nullptr;
  } else {
    r.status = o.status;
    r.text = o.text + "\n";
    doc["status"] = status_name(r.status);
    doc["text"] = o.text;
    doc["result_terms"] = o.result_terms;
    doc["suite_results"] = o.suite_results;
    for (auto& [k, v] : o.extra.items()) doc[k] = v;
  }
  r.json = doc.dump(2) + "\n";
  return r;
}

int run_command_line(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Dyer-Lashof operations at the prime 2", "dlcalc"};
  app.require_subcommand(1, 1);
  app.fallthrough();

  Query q;
  app.add_option("--model", q.model, "Model algebra: A, MO or MU");
  app.add_option("--sub", q.sub, "Subalgebra of A: k(n), kZ(n), BP, X2image");
  app.add_option("--ops", q.ops, "Comma-separated operations, e.g. Q_1 or Q^2,Q^4");
  app.add_option("--gens", q.gens, "Generators name:degree[:weight], comma-separated or repeated")
      ->delimiter(',')
      ->allow_extra_args(false);
  app.add_option("--cap", q.cap, "Degree cap");
  app.add_option("--maxdeg", q.maxdeg, "Largest degree to enumerate or check");
  app.add_option("--flavor", q.flavor, "En or Einf")->check(CLI::IsMember({"En", "Einf"}));
  app.add_option("--n", q.n, "n for E_n");
  app.add_option("--times", q.times, "Number of suspensions");
  app.add_option("--m", q.m, "Degree m for pow-table");
  app.add_option("--maxidx", q.maxidx, "Largest operation index for verify suites");
  app.add_flag("--json", q.json, "Print the report as JSON");

  const std::vector<std::pair<const char*, const char*>> commands{
      {"normalize", "Normal form of an operator word or an element"},
      {"act", "Evaluate an element in a model or free algebra"},
      {"free-basis", "Basis of a free E_n or E_infinity algebra"},
      {"poincare", "Poincare series of a free algebra or model"},
      {"closure", "Check a subalgebra of A for closure under operations"},
      {"suspend", "Suspend lower-indexed operator words"},
      {"pow-table", "Weight-2 operations on a class of degree m"},
      {"obstruction", "The MU -> BP splitting obstruction"},
      {"verify", "Run an identity suite"},
  };
  for (const auto& [name, desc] : commands) {
    auto* sc = app.add_subcommand(name, desc);
    sc->add_option("input", q.input, std::string(name) == std::string("verify") ? "Suite name" : "Expression (quoted)");
    sc->callback([&q, name = std::string(name)] { q.command = name; });
  }

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      app.exit(e, out, err);
      return 0;
    }
    err << "error: " << e.what() << "\nrun with --help for usage\n";
    return static_cast<int>(Status::Error);
  }

  const Report r = run(q);
  if (q.json) {
    out << r.json;
  } else if (r.status == Status::Error) {
    err << r.text;
  } else {
    out << r.text;
  }
  return static_cast<int>(r.status);
}

}  // namespace dl
