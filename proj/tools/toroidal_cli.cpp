// Command-line front end: bracket, roots, reflect, dims, singular, reducible,
// quotient-char, demos. Reports go to stdout (JSON or CSV), a one-line human
// summary to stderr. Exit codes: 0 success, 2 invalid input, 1 internal failure.

#include <toroidal/json.hpp>
#include <toroidal/toroidal.hpp>

#include <CLI11.hpp>

#include <cstdint>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

using namespace toroidal;

namespace {

struct InternalFailure : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Options {
  std::string x, y;
  std::string weight;
  std::string root;
  std::string word;
  std::string eta;
  std::int64_t depth = 8;
  std::int64_t box = 2;
  std::optional<std::int64_t> kmax;
  unsigned jobs = 1;
  std::string format;
  int max_n = 6;
  int size = 10;
};

Json envelope(const std::string& command, Json input)
{
  return Json{{"command", command}, {"version", version}, {"input", std::move(input)}};
}

void emit(const Json& j) { std::cout << j.dump(2) << "\n"; }

std::vector<std::int64_t> parse_ints(const std::string& text, std::size_t count, const std::string& what)
{
  std::stringstream ss(text);
  std::vector<std::int64_t> v;
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    try {
      std::size_t used = 0;
      v.push_back(std::stoll(tok, &used));
      if (used != tok.size()) throw std::invalid_argument(tok);
    } catch (const std::exception&) {
      v.clear();
      break;
    }
  }
  if (v.size() != count) throw domain_error(what + ": '" + text + "' is malformed");
  return v;
}

RootVector parse_root(const std::string& text)
{
  auto v = parse_ints(text, 3, "root (expected a,n1,n2)");
  return {v[0], v[1], v[2]};
}

RootVector parse_eta(const std::string& text)
{
  auto v = parse_ints(text, 2, "eta (expected a0,a1)");
  if (v[0] < 0 || v[1] < 0) throw domain_error("eta: coordinates must be nonnegative");
  return from_simple(v[0], v[1]);
}

WeylWord parse_word(const std::string& text)
{
  WeylWord w;
  for (std::size_t i = 0; i < text.size(); i += 2) {
    auto g = text.substr(i, 2);
    if (g == "r0") w.push_back(SimpleReflection::r0);
    else if (g == "r1") w.push_back(SimpleReflection::r1);
    else throw domain_error("word: '" + text + "' must be a sequence of r0 and r1");
  }
  return w;
}

std::string csv_field(const std::string& s)
{
  if (s.find_first_of(",\"\n\r") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

std::string eta_csv(const RootVector& eta)
{
  auto c = simple_coords(eta);
  return csv_field(std::to_string(c->first) + "," + std::to_string(c->second));
}

int cmd_bracket(const Options& o)
{
  const auto x = parse_element(o.x);
  const auto y = parse_element(o.y);
  const auto r = bracket(x, y);
  auto j = envelope("bracket", Json{{"x", o.x}, {"y", o.y}});
  j["result"] = element_to_json(r);
  emit(j);
  std::cerr << "[" << o.x << ", " << o.y << "] = " << to_string(r) << "\n";
  return 0;
}

Json root_report(const RootVector& r)
{
  Json j = root_to_json(r);
  const auto kind = classify(r);
  j["kind"] = to_string(kind);
  if (kind != RootKind::not_root) j["positive"] = is_positive(r);
  if (kind == RootKind::real) {
    auto c = coroot(r);
    j["coroot"] = Json{{"h", to_string(c.h)}, {"c1", to_string(c.c1)}, {"c2", to_string(c.c2)}};
  }
  return j;
}

int cmd_roots(const Options& o)
{
  Json input;
  Json roots = Json::array();
  if (!o.root.empty()) {
    input = Json{{"root", o.root}};
    roots.push_back(root_report(parse_root(o.root)));
  } else {
    if (o.box < 0 || o.box > 50) throw domain_error("box: must be in [0, 50]");
    input = Json{{"box", o.box}};
    for (std::int64_t a = -1; a <= 1; ++a)
      for (std::int64_t n2 = -o.box; n2 <= o.box; ++n2)
        for (std::int64_t n1 = -o.box; n1 <= o.box; ++n1)
          if (RootVector r{a, n1, n2}; is_root(r)) roots.push_back(root_report(r));
  }
  auto j = envelope("roots", input);
  j["roots"] = roots;
  emit(j);
  std::cerr << roots.size() << " root(s)\n";
  return 0;
}

int cmd_reflect(const Options& o)
{
  const Weight lam = weight_from_json_text(o.weight);
  Json input{{"weight", weight_to_json(lam)}};
  Weight out;
  if (!o.root.empty()) {
    const auto beta = parse_root(o.root);
    input["root"] = o.root;
    out = reflect(beta, lam);
  } else {
    const auto w = parse_word(o.word);
    input["dot_word"] = to_string(w);
    out = dot_action(w, lam);
  }
  auto j = envelope("reflect", input);
  j["result"] = weight_to_json(out);
  emit(j);
  std::cerr << "reflected weight h = " << to_string(out.h) << "\n";
  return 0;
}

int cmd_dims(const Options& o)
{
  if (o.depth < 0) throw domain_error("depth: must be >= 0");
  VermaModule verma(HighestWeight{});
  struct Row {
    RootVector eta;
    std::size_t basis;
    std::uint64_t oracle;
  };
  std::vector<Row> rows;
  for (const auto& eta : q1_plus_up_to(o.depth, true))
    rows.push_back({eta, verma.weight_space_basis(eta).size(), dim_oracle(eta)});
  bool agree = true;
  for (const auto& r : rows) agree = agree && r.basis == r.oracle;
  if (o.format == "csv") {
    std::cout << "eta,pbw_dim,oracle_dim\n";
    for (const auto& r : rows) std::cout << eta_csv(r.eta) << "," << r.basis << "," << r.oracle << "\n";
  } else {
    auto j = envelope("dims", Json{{"depth", o.depth}});
    Json table = Json::array();
    for (const auto& r : rows)
      table.push_back(Json{{"eta", eta_to_json(r.eta)}, {"pbw_dim", r.basis}, {"oracle_dim", r.oracle}});
    j["table"] = table;
    j["agree"] = agree;
    emit(j);
  }
  std::cerr << rows.size() << " weights, PBW basis and partition oracle " << (agree ? "agree" : "DISAGREE") << "\n";
  if (!agree) throw InternalFailure("weight_space_basis disagrees with dim_oracle");
  return 0;
}

Json certificate_json(const SingularCertificate& c)
{
  Json kernel = Json::array();
  for (const auto& v : c.kernel_basis) kernel.push_back(vector_to_json(v));
  Json checks = Json::array();
  for (const auto& r : c.raising_checks)
    checks.push_back(Json{{"generator", to_string(r.generator)}, {"vector", r.vector_index}, {"result_zero", r.vanishes}});
  return Json{{"eta", eta_to_json(c.eta)}, {"weight", weight_to_json(c.weight)}, {"kernel", kernel}, {"raising_checks", checks},
              {"verified", c.verified()}};
}

int cmd_singular(const Options& o)
{
  const auto hw = highest_weight_from_json_text(o.weight);
  Json input{{"weight", weight_to_json(hw.weight())}};
  Json certs = Json::array();
  bool verified = true;
  if (!o.eta.empty()) {
    input["eta"] = o.eta;
    auto c = find_singular(hw, parse_eta(o.eta));
    verified = c.verified();
    certs.push_back(certificate_json(c));
  } else {
    if (o.depth < 0) throw domain_error("depth: must be >= 0");
    input["depth"] = o.depth;
    for (const auto& s : scan_singular(hw, o.depth, o.jobs)) {
      auto c = find_singular(hw, s.eta);
      verified = verified && c.verified();
      certs.push_back(certificate_json(c));
    }
  }
  auto j = envelope("singular", input);
  j["certificates"] = certs;
  if (o.eta.empty() && hw.dominant_integral()) {
    Json predicted = Json::array();
    for (const auto& p : dot_orbit_within(hw, o.depth))
      if (!p.word.empty()) predicted.push_back(Json{{"word", to_string(p.word)}, {"eta", eta_to_json(p.eta)}});
    j["dot_orbit"] = predicted;
  }
  j["verified"] = verified;
  emit(j);
  std::cerr << certs.size() << " weight(s) with singular vectors\n";
  if (!verified) throw InternalFailure("a kernel vector failed re-verification");
  return 0;
}

int cmd_reducible(const Options& o)
{
  const auto hw = highest_weight_from_json_text(o.weight);
  Json input{{"weight", weight_to_json(hw.weight())}};
  ReducibilityReport rep;
  if (o.kmax) {
    input["kmax"] = *o.kmax;
    rep.scan_bound = *o.kmax;
    rep.witnesses = kk_pairs(hw, *o.kmax);
    rep.verdict = !rep.witnesses.empty();
  } else {
    rep = is_reducible(hw);
  }
  Json witnesses = Json::array();
  for (const auto& p : rep.witnesses)
    witnesses.push_back(Json{{"beta", root_to_json(p.beta)}, {"l", p.l}, {"quotient_weight", weight_to_json(p.quotient_weight)}});
  auto j = envelope("reducible", input);
  j["reducible"] = rep.verdict;
  j["scan_bound"] = rep.scan_bound;
  j["exact"] = !o.kmax.has_value();
  j["witnesses"] = witnesses;
  emit(j);
  std::cerr << "M(lambda) is " << (rep.verdict ? "reducible" : "irreducible") << (o.kmax ? " (within --kmax)" : "")
            << "\n";
  return 0;
}

int cmd_quotient_char(const Options& o)
{
  const auto hw = highest_weight_from_json_text(o.weight);
  if (!hw.dominant_integral()) throw domain_error("weight: fields 'h' and 'c1' must give n1, c1 - n1 nonnegative integers");
  if (o.depth < 0) throw domain_error("depth: must be >= 0");
  VermaModule verma(hw);
  struct Row {
    QuotientSpace q;
    std::int64_t l;
  };
  std::vector<Row> rows;
  for (const auto& eta : q1_plus_up_to(o.depth, true)) rows.push_back({w_multiplicity(verma, eta), lchar_oracle(hw, eta)});
  bool match = true;
  for (const auto& r : rows) match = match && static_cast<std::int64_t>(r.q.quotient_dim) == r.l;
  if (o.format == "json") {
    auto j = envelope("quotient-char", Json{{"weight", weight_to_json(hw.weight())}, {"depth", o.depth}});
    Json table = Json::array();
    for (const auto& r : rows)
      table.push_back(Json{{"eta", eta_to_json(r.q.eta)}, {"ambient", r.q.ambient_dim}, {"submodule", r.q.submodule_dim},
                           {"quotient", r.q.quotient_dim}, {"l_oracle", r.l}});
    j["table"] = table;
    j["match"] = match;
    emit(j);
  } else {
    std::cout << "eta,ambient,submodule,quotient,l_oracle\n";
    for (const auto& r : rows)
      std::cout << eta_csv(r.q.eta) << "," << r.q.ambient_dim << "," << r.q.submodule_dim << "," << r.q.quotient_dim
                << "," << r.l << "\n";
  }
  std::cerr << rows.size() << " weights, W(lambda) and L(lambda) multiplicities " << (match ? "match" : "DIFFER") << "\n";
  return 0;
}

int cmd_demos(const Options& o)
{
  const auto hw = highest_weight_from_json_text(o.weight);
  const auto t = demo_nonintegrability(hw, o.max_n);
  const auto r = demo_infinite_dim(hw, o.size);
  Json lines = Json::array();
  for (const auto& l : t.lines)
    lines.push_back(Json{{"claim", l.claim}, {"computed", l.computed}, {"expected", l.expected}, {"holds", l.holds}});
  Json matrix = Json::array();
  for (std::size_t s = 0; s < r.entries.rows(); ++s) {
    Json row = Json::array();
    for (std::size_t m = 0; m < r.entries.cols(); ++m) row.push_back(to_string(r.entries(s, m)));
    matrix.push_back(row);
  }
  auto j = envelope("demos", Json{{"weight", weight_to_json(hw.weight())}, {"n", o.max_n}, {"m", o.size}});
  j["nonintegrability"] = Json{{"lines", lines}, {"conclusion", t.conclusion}, {"verified", t.verified()}};
  j["infinite_dim"] = Json{{"size", r.size}, {"matrix", matrix}, {"off_support_zero", r.off_support_zero}, {"rank", r.rank}};
  emit(j);
  std::cerr << t.conclusion << "; rank " << r.rank << " of " << r.size << "\n";
  if (!t.verified() || !r.off_support_zero) throw InternalFailure("demo identity failed");
  return 0;
}

} // namespace

int main(int argc, char** argv)
{
  CLI::App app{"Toroidal sl2 Verma module toolkit"};
  app.require_subcommand(1);
  app.set_version_flag("--version", version);
  Options o;

  auto weight_opt = [&](CLI::App* sub, bool required) {
    auto* opt = sub->add_option("--weight", o.weight, "weight JSON {\"h\",\"c1\",\"c2\",\"d1\",\"d2\"}");
    if (required) opt->required();
  };
  auto format_opt = [&](CLI::App* sub) {
    sub->add_option("--format", o.format, "output format")->check(CLI::IsMember({"json", "csv"}));
  };

  auto* bracket_cmd = app.add_subcommand("bracket", "Lie bracket of two elements");
  bracket_cmd->add_option("x", o.x)->required();
  bracket_cmd->add_option("y", o.y)->required();

  auto* roots_cmd = app.add_subcommand("roots", "classify roots and the positive/negative partition");
  roots_cmd->add_option("--root", o.root, "single root as a,n1,n2");
  roots_cmd->add_option("--box", o.box, "list roots with |n1|,|n2| <= box");

  auto* reflect_cmd = app.add_subcommand("reflect", "reflection r_beta or dot action of a word");
  weight_opt(reflect_cmd, true);
  auto* rr = reflect_cmd->add_option("--root", o.root, "real root a,n1,n2");
  auto* rw = reflect_cmd->add_option("--dot", o.word, "word over r0, r1 for the dot action");
  rr->excludes(rw);

  auto* dims_cmd = app.add_subcommand("dims", "weight-space dimensions at delta2-level 0");
  dims_cmd->add_option("--depth", o.depth);
  format_opt(dims_cmd);

  auto* singular_cmd = app.add_subcommand("singular", "singular vectors at delta2-level 0");
  weight_opt(singular_cmd, true);
  singular_cmd->add_option("--depth", o.depth);
  singular_cmd->add_option("--eta", o.eta, "single weight a0,a1");
  singular_cmd->add_option("--jobs", o.jobs)->check(CLI::Range(1u, 256u));

  auto* reducible_cmd = app.add_subcommand("reducible", "reducibility of M(lambda)");
  weight_opt(reducible_cmd, true);
  reducible_cmd->add_option("--kmax", o.kmax, "scan only k <= kmax");

  auto* quotient_cmd = app.add_subcommand("quotient-char", "multiplicities of W(lambda) against L(lambda)");
  weight_opt(quotient_cmd, true);
  quotient_cmd->add_option("--depth", o.depth);
  format_opt(quotient_cmd);

  auto* demos_cmd = app.add_subcommand("demos", "non-integrability and infinite-dimensionality checks");
  weight_opt(demos_cmd, true);
  demos_cmd->add_option("--n", o.max_n, "largest power N of e(0,-1)");
  demos_cmd->add_option("--m", o.size, "size M of the rank check");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (*bracket_cmd) return cmd_bracket(o);
    if (*roots_cmd) return cmd_roots(o);
    if (*reflect_cmd) {
      if (o.root.empty() && o.word.empty()) throw domain_error("reflect: one of --root or --dot is required");
      return cmd_reflect(o);
    }
    if (*dims_cmd) {
      if (o.format.empty()) o.format = "json";
      return cmd_dims(o);
    }
    if (*singular_cmd) return cmd_singular(o);
    if (*reducible_cmd) return cmd_reducible(o);
    if (*quotient_cmd) {
      if (o.format.empty()) o.format = "csv";
      return cmd_quotient_char(o);
    }
    if (*demos_cmd) return cmd_demos(o);
  } catch (const domain_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 1;
  }
  return 1;
}
