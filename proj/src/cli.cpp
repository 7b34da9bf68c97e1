#include "tca/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <functional>
#include <optional>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include "tca/bott.hpp"
#include "tca/characters.hpp"
#include "tca/json_io.hpp"
#include "tca/ktheory.hpp"
#include "tca/localcoh.hpp"
#include "tca/resolutions.hpp"
#include "tca/spectrum.hpp"

namespace tca::cli {
namespace {

using tca::json::Json;

struct Options {
  int d = 0;
  int r = 0;
  int n = 0;
  int dim_e = 0;
  int i = 0;
  int i_max = 0;
  int cutoff = 0;
  std::optional<int> series;
  std::string lambda;
  std::string mu;
  std::string weight;
  std::string cls;
  bool json = false;
};

// Collected output of one command: a text rendering and a JSON payload.
struct Output {
  Json parameters = Json::object();
  Json result;
  std::string text;
};

std::string show(const Integer& x) { return x.get_str(); }

std::string render_character(const EquivCharacter& ch) {
  std::ostringstream os;
  const char* e_label = ch.dual_e() ? "E*" : "E";
  for (const auto& [k, m] : ch.terms())
    os << e_label << '=' << k.first.to_string() << " V=" << k.second.to_string() << " mult=" << show(m) << '\n';
  os << "terms " << ch.terms().size() << '\n';
  return os.str();
}

void character_output(Output& o, const EquivCharacter& ch, const Options& opt) {
  o.result = {{"d", ch.d()}, {"cutoff", ch.cutoff()}, {"terms", json::character_terms(ch)}};
  o.text = render_character(ch);
  if (opt.series) {
    const auto series = dimension_series(ch, *opt.series);
    Json js = Json::array();
    std::ostringstream os;
    os << "series N=" << *opt.series << ':';
    for (const auto& x : series) {
      js.push_back(json::integer(x));
      os << ' ' << show(x);
    }
    os << '\n';
    o.result["series"] = {{"N", *opt.series}, {"dims", std::move(js)}};
    o.text += os.str();
  }
}

std::string render_triple(const std::pair<Partition, Partition>& k, const Integer& m) {
  return "(" + k.first.to_string() + "," + k.second.to_string() + "," + show(m) + ")";
}

std::string render_betti(const BettiTable& t) {
  std::ostringstream os;
  os << "betti table dimE=" << t.dim_e << " n=" << t.n << " lambda=" << t.lam.to_string() << " imax=" << t.i_max
     << '\n';
  for (int j = 0; j <= t.max_strand(); ++j) {
    os << "j=" << j << ':';
    bool any = false;
    for (int i = 0; i <= t.i_max; ++i) {
      const TermList& cell = t.cell(i, j);
      if (cell.empty()) continue;
      any = true;
      os << "\n  i=" << i << ':';
      for (const auto& [k, m] : cell) os << ' ' << render_triple(k, m);
    }
    if (!any) os << " 0";
    os << '\n';
  }
  return os.str();
}

std::string render_kclass(const KClass& x) {
  std::ostringstream os;
  os << "d=" << x.d() << '\n';
  if (x.is_zero()) os << "0\n";
  for (const auto& [r, block] : x.blocks())
    for (const auto& [lam, a] : block) os << "r=" << r << " lambda=" << lam.to_string() << " coeff=" << a.to_string() << '\n';
  return os.str();
}

std::string render_matrix(const IntMatrix& m, const std::vector<Partition>& basis) {
  std::ostringstream os;
  os << "basis:";
  for (const auto& p : basis) os << ' ' << p.to_string();
  os << '\n';
  for (const auto& row : m) {
    for (std::size_t k = 0; k < row.size(); ++k) os << (k ? " " : "") << show(row[k]);
    os << '\n';
  }
  return os.str();
}

Json basis_json(const std::vector<Partition>& basis) {
  Json out = Json::array();
  for (const auto& p : basis) out.push_back(json::partition(p));
  return out;
}

KClass read_class(const Options& opt) {
  Json value;
  try {
    value = Json::parse(opt.cls);
  } catch (const nlohmann::json::parse_error& e) {
    throw std::invalid_argument(std::string("--class is not valid JSON: ") + e.what());
  }
  return json::parse_kclass(value, opt.d);
}

// --- commands -------------------------------------------------------------

Output cmd_bott(const Options& opt) {
  Output o;
  const Weight head = parse_weight(opt.weight);
  o.parameters = {{"weight", head.entries}, {"d", opt.d}};
  if (static_cast<int>(head.length()) != opt.d)
    throw std::invalid_argument("--weight has " + std::to_string(head.length()) + " entries but --d is " +
                                std::to_string(opt.d));
  if (!opt.mu.empty()) {
    const Partition mu = parse_partition(opt.mu);
    o.parameters["mu"] = json::partition(mu);
    const auto res = bott_infinite(head, mu);
    o.parameters["window"] = infinite_window(head, mu);
    if (!res) {
      o.result = {{"vanishes", true}};
      o.text = "vanishes\n";
    } else {
      o.result = {{"vanishes", false}, {"nu", json::partition(res->nu)}, {"steps", res->steps}};
      o.text = "nu=" + res->nu.to_string() + " steps=" + std::to_string(res->steps) + "\n";
    }
    return o;
  }
  const BottResult res = bott_sort(head);
  if (!res) {
    o.result = {{"vanishes", true}};
    o.text = "vanishes\n";
  } else {
    o.result = {{"vanishes", false}, {"gamma", res->gamma.entries}, {"steps", res->steps}};
    o.text = "gamma=" + res->gamma.to_string() + " steps=" + std::to_string(res->steps) + "\n";
  }
  return o;
}

Output cmd_cauchy(const Options& opt) {
  Output o;
  o.parameters = {{"d", opt.d}, {"cutoff", opt.cutoff}};
  character_output(o, cauchy_A(opt.d, opt.cutoff), opt);
  return o;
}

Output cmd_kmodule(const Options& opt) {
  Output o;
  const Partition lam = parse_partition(opt.lambda);
  o.parameters = {{"r", opt.r}, {"lambda", json::partition(lam)}, {"d", opt.d}, {"cutoff", opt.cutoff}};
  character_output(o, k_module_character(opt.r, lam, opt.d, opt.cutoff), opt);
  return o;
}

Output cmd_jmodule(const Options& opt) {
  Output o;
  const Partition lam = parse_partition(opt.lambda);
  o.parameters = {{"lambda", json::partition(lam)}, {"d", opt.d}, {"cutoff", opt.cutoff}};
  character_output(o, torsion_injective_character(lam, opt.d, opt.cutoff), opt);
  return o;
}

Output cmd_satur(const Options& opt) {
  Output o;
  const Partition mu = parse_partition(opt.mu);
  o.parameters = {{"mu", json::partition(mu)}, {"d", opt.d}, {"i", opt.i}, {"cutoff", opt.cutoff}};
  character_output(o, derived_saturation(mu, opt.d, opt.i, opt.cutoff), opt);
  return o;
}

Output cmd_resolve(const Options& opt) {
  Output o;
  const Partition lam = parse_partition(opt.lambda);
  o.parameters = {{"lambda", json::partition(lam)}, {"n", opt.n}, {"dimE", opt.dim_e}, {"imax", opt.i_max}};
  const BettiTable t = betti_table(lam, opt.n, opt.dim_e, opt.i_max);
  o.result = json::betti_table(t);
  o.text = render_betti(t);
  return o;
}

Output cmd_regularity(const Options& opt) {
  Output o;
  const Partition lam = parse_partition(opt.lambda);
  o.parameters = {{"lambda", json::partition(lam)}, {"n", opt.n}, {"dimE", opt.dim_e}, {"imax", opt.i_max}};
  const RegularityReport rep = regularity_report(lam, opt.n, opt.dim_e, opt.i_max);
  const int cogen = cogeneration_bound(lam, opt.n, opt.dim_e);
  const char* status = rep.certified ? "certified" : "observed";
  o.result = {{"observed", rep.observed}, {"bound", rep.bound}, {"status", status}, {"cogeneration_bound", cogen}};
  o.text = "regularity=" + std::to_string(rep.observed) + " bound=" + std::to_string(rep.bound) + " status=" + status +
           "\ncogeneration_bound=" + std::to_string(cogen) + "\n";
  return o;
}

Output cmd_pairing(const Options& opt) {
  Output o;
  o.parameters = {{"d", opt.d}, {"r", opt.r}};
  const auto basis = grassmannian_basis(opt.d, opt.r);
  const IntMatrix m = pairing_matrix(opt.d, opt.r);
  o.result = {{"basis", basis_json(basis)}, {"matrix", json::matrix(m)}};
  o.text = render_matrix(m, basis);
  return o;
}

Output cmd_rank(const Options& opt) {
  Output o;
  o.parameters = {{"d", opt.d}};
  if (opt.d < 0) throw std::invalid_argument("--d must be nonnegative");
  const std::size_t rank = k_rank(opt.d);
  o.result = {{"rank", rank}};
  o.text = "rank=" + std::to_string(rank) + "\n";
  return o;
}

Output cmd_serre(const Options& opt) {
  Output o;
  const Partition lam = parse_partition(opt.lambda);
  o.parameters = {{"d", opt.d}, {"r", opt.r}, {"lambda", json::partition(lam)}};
  const GrKClass image = serre_dual_gr(GrKClass::basis(opt.d, opt.r, lam));
  const auto basis = grassmannian_basis(opt.d, image.r);
  Json terms = Json::array();
  std::ostringstream os;
  os << "r=" << image.r << '\n';
  for (std::size_t k = 0; k < basis.size(); ++k) {
    if (image.coeffs[k] == 0) continue;
    terms.push_back({{"lambda", json::partition(basis[k])}, {"coeff", json::integer(image.coeffs[k])}});
    os << "lambda=" << basis[k].to_string() << " coeff=" << show(image.coeffs[k]) << '\n';
  }
  o.result = {{"d", opt.d}, {"r", image.r}, {"terms", std::move(terms)}};
  o.text = os.str();
  return o;
}

Output cmd_fourier(const Options& opt) {
  Output o;
  const KClass x = read_class(opt);
  o.parameters = {{"d", opt.d}, {"class", json::kclass(x)}};
  const KClass y = fourier(x);
  o.result = json::kclass(y);
  o.text = render_kclass(y);
  return o;
}

Output cmd_chain(const Options& opt) {
  Output o;
  o.parameters = {{"d", opt.d}};
  const auto chain = maximal_chain(opt.d);
  Json labels = Json::array();
  std::ostringstream os;
  for (const auto& c : chain) {
    labels.push_back({{"label", c.to_string()}, {"description", c.describe()}});
    os << c.to_string() << "  " << c.describe() << '\n';
  }
  const int length = chain_length(chain);
  os << "length " << length << '\n' << "dimension " << krull_dimension(opt.d) << '\n';
  o.result = {{"chain", std::move(labels)}, {"length", length}, {"dimension", krull_dimension(opt.d)}};
  o.text = os.str();
  return o;
}

// --- option wiring --------------------------------------------------------

CLI::Option* int_flag(CLI::App* app, const std::string& name, int& target, const std::string& help) {
  return app->add_option(name, target, help)->required();
}

CLI::Option* text_flag(CLI::App* app, const std::string& name, std::string& target, const std::string& help) {
  return app->add_option(name, target, help)->required();
}

void json_flag(CLI::App* app, Options& opt) { app->add_flag("--json", opt.json, "Emit a JSON envelope"); }

void series_flag(CLI::App* app, Options& opt) {
  app->add_option("--series", opt.series, "Also print dimensions of the V-graded pieces evaluated at C^N")
      ->check(CLI::NonNegativeNumber);
}

struct Command {
  CLI::App* app;
  std::string name;
  std::function<Output(const Options&)> run;
};

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact invariants of modules over Sym(C^d ⊗ C^∞)", "tca"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(kVersion));

  Options opt;
  std::vector<Command> commands;

  {
    auto* c = app.add_subcommand("bott", "Bott's algorithm on a weight; with --mu, on (weight, mu, 0, 0, ...)");
    text_flag(c, "--weight", opt.weight, "Integer weight, e.g. [0,2]");
    int_flag(c, "--d", opt.d, "Length of the weight");
    c->add_option("--mu", opt.mu, "Partition tail for the infinite version");
    json_flag(c, opt);
    commands.push_back({c, "bott", cmd_bott});
  }
  {
    auto* c = app.add_subcommand("cauchy", "Character of A = Sym(E ⊗ V)");
    int_flag(c, "--d", opt.d, "dim E");
    int_flag(c, "--cutoff", opt.cutoff, "V-degree cutoff")->check(CLI::NonNegativeNumber);
    series_flag(c, opt);
    json_flag(c, opt);
    commands.push_back({c, "cauchy", cmd_cauchy});
  }
  {
    auto* c = app.add_subcommand("kmodule", "Character of K_{r,lambda}");
    int_flag(c, "--r", opt.r, "Rank r");
    text_flag(c, "--lambda", opt.lambda, "Partition with at most r rows");
    int_flag(c, "--d", opt.d, "dim E");
    int_flag(c, "--cutoff", opt.cutoff, "V-degree cutoff")->check(CLI::NonNegativeNumber);
    series_flag(c, opt);
    json_flag(c, opt);
    commands.push_back({c, "kmodule", cmd_kmodule});
  }
  {
    auto* c = app.add_subcommand("jmodule", "Character of the torsion injective J_lambda = S_lambda(E* ⊕ V)");
    text_flag(c, "--lambda", opt.lambda, "Partition");
    int_flag(c, "--d", opt.d, "dim E");
    int_flag(c, "--cutoff", opt.cutoff, "V-degree cutoff")->check(CLI::NonNegativeNumber);
    series_flag(c, opt);
    json_flag(c, opt);
    commands.push_back({c, "jmodule", cmd_jmodule});
  }
  {
    auto* c = app.add_subcommand("satur", "Derived saturation R^i S(S_mu(K))");
    text_flag(c, "--mu", opt.mu, "Partition");
    int_flag(c, "--d", opt.d, "dim E");
    int_flag(c, "--i", opt.i, "Cohomological degree")->check(CLI::NonNegativeNumber);
    int_flag(c, "--cutoff", opt.cutoff, "Bound on |lambda| for the E-side")->check(CLI::NonNegativeNumber);
    series_flag(c, opt);
    json_flag(c, opt);
    commands.push_back({c, "satur", cmd_satur});
  }
  {
    auto* c = app.add_subcommand("resolve", "Equivariant Betti table of (S_lambda(V) ⊗ A)^{<=n}");
    text_flag(c, "--lambda", opt.lambda, "Partition with at most n rows");
    int_flag(c, "--n", opt.n, "Row bound n")->check(CLI::PositiveNumber);
    int_flag(c, "--dimE", opt.dim_e, "dim E")->check(CLI::NonNegativeNumber);
    int_flag(c, "--imax", opt.i_max, "Largest homological degree")->check(CLI::NonNegativeNumber);
    json_flag(c, opt);
    commands.push_back({c, "resolve", cmd_resolve});
  }
  {
    auto* c = app.add_subcommand("regularity", "Observed regularity against the upper bound");
    text_flag(c, "--lambda", opt.lambda, "Partition with at most n rows");
    int_flag(c, "--n", opt.n, "Row bound n")->check(CLI::PositiveNumber);
    int_flag(c, "--dimE", opt.dim_e, "dim E")->check(CLI::NonNegativeNumber);
    int_flag(c, "--imax", opt.i_max, "Largest homological degree")->check(CLI::NonNegativeNumber);
    json_flag(c, opt);
    commands.push_back({c, "regularity", cmd_regularity});
  }
  {
    auto* kt = app.add_subcommand("ktheory", "Grothendieck group computations");
    kt->require_subcommand(1);
    auto* p = kt->add_subcommand("pairing", "Pairing matrix chi(S_alpha(Q*) ⊗ S_{beta†}(R)) on Gr_r(C^d)");
    int_flag(p, "--d", opt.d, "dim E");
    int_flag(p, "--r", opt.r, "Rank of Q");
    json_flag(p, opt);
    commands.push_back({p, "ktheory pairing", cmd_pairing});
    auto* f = kt->add_subcommand("fourier", "Fourier transform of a K-class");
    int_flag(f, "--d", opt.d, "dim E");
    text_flag(f, "--class", opt.cls, R"(KClass JSON, or {"r":k,"lambda":[..],"mu":[..]})");
    json_flag(f, opt);
    commands.push_back({f, "ktheory fourier", cmd_fourier});
    auto* rk = kt->add_subcommand("rank", "Rank of K(A) over Lambda");
    int_flag(rk, "--d", opt.d, "dim E");
    json_flag(rk, opt);
    commands.push_back({rk, "ktheory rank", cmd_rank});
    auto* s = kt->add_subcommand("serre", "Duality on K(Gr_r(C^d)) applied to [S_lambda(Q)]");
    int_flag(s, "--d", opt.d, "dim E");
    int_flag(s, "--r", opt.r, "Rank of Q");
    text_flag(s, "--lambda", opt.lambda, "Partition in the r x (d-r) rectangle");
    json_flag(s, opt);
    commands.push_back({s, "ktheory serre", cmd_serre});
  }
  {
    auto* c = app.add_subcommand("fourier", "Fourier transform of a K-class (same as ktheory fourier)");
    int_flag(c, "--d", opt.d, "dim E");
    text_flag(c, "--class", opt.cls, R"(KClass JSON, or {"r":k,"lambda":[..],"mu":[..]})");
    json_flag(c, opt);
    commands.push_back({c, "fourier", cmd_fourier});
  }
  {
    auto* c = app.add_subcommand("chain", "Maximal chain of irreducible closed subsets of Gr(C^d)");
    int_flag(c, "--d", opt.d, "dim E")->check(CLI::PositiveNumber);
    json_flag(c, opt);
    commands.push_back({c, "chain", cmd_chain});
  }

  // Help for the innermost subcommand named on the command line.
  const auto usage = [&] {
    const CLI::App* node = &app;
    while (!node->get_subcommands().empty()) node = node->get_subcommands().front();
    return node->help();
  };

  if (!args.empty() && !args.front().empty() && args.front().front() != '-') {
    const auto subs = app.get_subcommands([](const CLI::App*) { return true; });
    const bool known = std::any_of(subs.begin(), subs.end(), [&](const CLI::App* s) { return s->check_name(args.front()); });
    if (!known) {
      err << "error: unknown subcommand '" << args.front() << "'\n" << app.help();
      return kUsageError;
    }
  }

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(std::move(reversed));
  } catch (const CLI::CallForHelp&) {
    out << usage();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::CallForVersion&) {
    out << kVersion << '\n';
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n' << usage();
    return kUsageError;
  }

  const Command* chosen = nullptr;
  for (const auto& c : commands)
    if (c.app->parsed()) chosen = &c;
  if (chosen == nullptr) {
    err << "error: no command given\n" << app.help();
    return kUsageError;
  }

  try {
    const Output o = chosen->run(opt);
    if (opt.json) {
      const Json envelope = {
          {"command", chosen->name}, {"parameters", o.parameters}, {"result", o.result}, {"version", kVersion}};
      out << envelope.dump(2) << '\n';
    } else {
      out << o.text;
    }
    return kOk;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n' << chosen->app->help();
    return kUsageError;
  } catch (const std::out_of_range& e) {
    err << "error: " << e.what() << '\n' << chosen->app->help();
    return kUsageError;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << '\n';
    return kInternalError;
  }
}

}  // namespace tca::cli
