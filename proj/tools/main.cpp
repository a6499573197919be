#include <cstdlib>
#include <iostream>
#include <string>
#include <thread>

#include <CLI11.hpp>

#include "symiso/boundaries.hpp"
#include "symiso/bounds.hpp"
#include "symiso/characters.hpp"
#include "symiso/optimizer.hpp"
#include "symiso/report.hpp"
#include "symiso/spectral.hpp"
#include "symiso/suites.hpp"

using namespace symiso;

namespace {

enum Exit : int {
  kOk = 0,
  kCheckFailed = 1,
  kUsage = 2,
  kMalformed = 3,
  kOutOfRange = 4,
  kInternal = 5,
};

unsigned worker_count()
{
  unsigned workers = std::max(1u, std::thread::hardware_concurrency());
  if (const char *env = std::getenv("SYMISO_WORKERS")) {
    try {
      const long cap = std::stol(env);
      if (cap >= 1)
        workers = std::min<unsigned>(workers, static_cast<unsigned>(cap));
    } catch (const std::exception &) {
      std::cerr << "ignoring SYMISO_WORKERS=" << env << '\n';
    }
  }
  return workers;
}

Json envelope(const std::string &command, Json params, Json result)
{
  return Json{{"command", command}, {"params", std::move(params)}, {"result", std::move(result)}};
}

void emit(const Json &j) { std::cout << j.dump() << '\n'; }

int cmd_chartable(int n, const std::string &format)
{
  const CharacterTable chars(n);
  const auto &parts = chars.partitions();
  if (format == "csv") {
    std::cout << "alpha";
    for (const auto &l : parts)
      std::cout << ',' << l.to_string();
    std::cout << '\n' << "class_size";
    for (std::size_t l = 0; l < chars.size(); ++l)
      std::cout << ',' << to_string(chars.class_size(l));
    std::cout << '\n';
    for (std::size_t a = 0; a < chars.size(); ++a) {
      std::cout << parts[a].to_string();
      for (std::size_t l = 0; l < chars.size(); ++l)
        std::cout << ',' << to_string(chars.value(a, l));
      std::cout << '\n';
    }
    return kOk;
  }
  Json classes = Json::array(), sizes = Json::array(), rows = Json::array();
  for (std::size_t l = 0; l < chars.size(); ++l) {
    classes.push_back(parts[l].to_string());
    sizes.push_back(exact_json(chars.class_size(l)));
  }
  for (std::size_t a = 0; a < chars.size(); ++a) {
    Json values = Json::array();
    for (std::size_t l = 0; l < chars.size(); ++l)
      values.push_back(exact_json(chars.value(a, l)));
    rows.push_back({{"alpha", parts[a].to_string()}, {"values", values}});
  }
  emit(envelope("chartable", {{"n", n}}, {{"classes", classes}, {"class_sizes", sizes}, {"rows", rows}}));
  return kOk;
}

int cmd_eigs(int n)
{
  const PartitionTable table(n);
  const auto mu = eigenvalue_table(table);
  Json rows = Json::array();
  for (std::size_t a = 0; a < table.size(); ++a)
    rows.push_back({{"alpha", table[a].to_string()}, {"mu", mu.mu[a]}});
  emit(envelope("eigs", {{"n", n}}, rows));
  return kOk;
}

int cmd_boundary(int n, const std::string &classes, const std::string &method)
{
  const PartitionTable table(n);
  const auto set = ConjClassSet::parse(table, classes);
  Json params = {{"n", n}, {"classes", set.to_strings(table)}, {"method", method}};
  Json result = {{"size", exact_json(set.size())}};
  std::optional<BigInt> first;
  bool agree = true;
  auto record = [&](const char *name, const BigInt &value) {
    result[name] = exact_json(value);
    if (first && *first != value)
      agree = false;
    if (!first)
      first = value;
  };
  const bool all = method == "all";
  if (all || method == "spectral")
    record("spectral", spectral_boundary(set, CharacterTable(n)));
  if (all || method == "matrix")
    record("matrix", boundary_via_classes(set, interaction_matrix(table)));
  if (all || method == "brute")
    record("brute", boundary_bruteforce(ExplicitSet::from_classes(set)));
  result["boundary"] = exact_json(*first);
  if (all)
    result["agree"] = agree;
  emit(envelope("boundary", params, result));
  return agree ? kOk : kCheckFailed;
}

int cmd_lexboundary(int n, std::uint64_t k)
{
  if (n < 1 || n > kMaxExplicitN)
    throw std::out_of_range("lexboundary: n must be in [1, " + std::to_string(kMaxExplicitN) + "]");
  if (k < 1 || k > factorial_u64(n))
    throw std::out_of_range("lexboundary: k must be in [1, n!]");
  const BigInt boundary = lex_segment_boundary(n, k);
  const auto bound = appendix_bound(n, BigInt(static_cast<unsigned long>(k)));
  const bool holds = Rational(boundary) <= bound.bound;
  emit(envelope("lexboundary", {{"n", n}, {"k", k}},
                {{"boundary", exact_json(boundary)},
                 {"appendix_bound", exact_json(bound.bound)},
                 {"t", bound.t},
                 {"holds", holds}}));
  return holds ? kOk : kCheckFailed;
}

Json xi_json(const XiResult &r, const PartitionTable &table)
{
  Json j = {{"k", r.k}, {"achievable", r.achievable}};
  if (r.achievable) {
    j["xi"] = r.min_boundary;
    j["witness"] = r.witness->to_strings(table);
  }
  return j;
}

int cmd_ximin(int n, std::optional<std::int64_t> k, bool profile, const std::string &format, unsigned workers)
{
  if (n < 1 || n > kMaxOptimizerN)
    throw std::out_of_range("ximin: n must be in [1, " + std::to_string(kMaxOptimizerN) + "]");
  const PartitionTable table(n);
  if (profile) {
    const auto all = xi_profile(n, workers);
    if (format == "csv") {
      std::cout << "k,xi,witness\n";
      for (const auto &r : all) {
        std::string w;
        for (const auto &c : r.witness->to_strings(table))
          w += (w.empty() ? "" : ";") + c;
        std::cout << r.k << ',' << r.min_boundary << ",\"" << w << "\"\n";
      }
      return kOk;
    }
    Json rows = Json::array();
    for (const auto &r : all)
      rows.push_back(xi_json(r, table));
    emit(envelope("ximin", {{"n", n}, {"profile", true}}, rows));
    return kOk;
  }
  if (!k)
    throw CLI::RequiredError("ximin needs <k> or --profile");
  emit(envelope("ximin", {{"n", n}, {"k", *k}}, xi_json(xi_min(n, *k, workers), table)));
  return kOk;
}

int cmd_verify(const std::string &suite, std::optional<int> max_n, std::uint64_t seed, unsigned workers)
{
  SuiteOptions options;
  options.max_n = max_n;
  options.seed = seed;
  options.workers = workers;
  std::cerr << "running suite " << suite << '\n';
  const auto report = run_suite(suite, options);
  for (const auto &r : report.records())
    emit(r.to_json());
  emit(report.summary());
  return report.passed() ? kOk : kCheckFailed;
}

int cmd_solve_k(const std::string &p_text, int M)
{
  const Rational p = parse_rational(p_text);
  const auto params = solve_K(p, M);
  emit(envelope("solve-k", {{"p", to_string(p)}, {"M", M}},
                {{"K", params.K}, {"t_p", params.t_p}, {"residual", params.residual}}));
  return kOk;
}

int cmd_solve_kappa(const std::string &p_text, int i)
{
  const Rational p = parse_rational(p_text);
  const auto params = solve_kappa(p, i);
  emit(envelope("solve-kappa", {{"p", to_string(p)}, {"i", i}},
                {{"kappa", params.kappa}, {"k", params.k}, {"residual", params.residual}}));
  return kOk;
}

} // namespace

int main(int argc, char **argv)
{
  CLI::App app{"Edge-isoperimetry of conjugation-invariant sets in the transposition graph"};
  app.require_subcommand(1);
  std::cout.setf(std::ios::unitbuf);

  int n = 0;
  std::string format = "json";
  std::string classes, method = "spectral";
  std::uint64_t lex_k = 0;
  std::optional<std::int64_t> xi_k;
  bool profile = false;
  std::string suite;
  std::optional<int> max_n;
  std::uint64_t seed = SuiteOptions{}.seed;
  std::string p_text;
  int M = kDefaultM, i = 1;

  auto *chartable = app.add_subcommand("chartable", "Character table of S_n");
  chartable->add_option("n", n)->required();
  chartable->add_option("--format", format)->check(CLI::IsMember({"json", "csv"}));

  auto *eigs = app.add_subcommand("eigs", "Laplacian eigenvalue per irreducible");
  eigs->add_option("n", n)->required();

  auto *boundary = app.add_subcommand("boundary", "Edge-boundary of a union of conjugacy classes");
  boundary->add_option("n", n)->required();
  boundary->add_option("--classes", classes, "Cycle types, e.g. \"2+1+1,3+1\"")->required();
  boundary->add_option("--method", method)->check(CLI::IsMember({"spectral", "matrix", "brute", "all"}));

  auto *lexboundary = app.add_subcommand("lexboundary", "Boundary of the k lex-first permutations");
  lexboundary->add_option("n", n)->required();
  lexboundary->add_option("k", lex_k)->required();

  auto *ximin = app.add_subcommand("ximin", "Minimum boundary over class unions of size k");
  ximin->add_option("n", n)->required();
  ximin->add_option("k", xi_k);
  ximin->add_flag("--profile", profile, "All achievable sizes");
  ximin->add_option("--format", format)->check(CLI::IsMember({"json", "csv"}));

  auto *verify = app.add_subcommand("verify", "Run a verification suite");
  verify->add_option("suite", suite)->required()->check(CLI::IsMember(suite_names()));
  verify->add_option("--max-n", max_n);
  verify->add_option("--seed", seed);

  auto *solvek = app.add_subcommand("solve-k", "Solve K^{2K} = 1/p");
  solvek->add_option("p", p_text)->required();
  solvek->add_option("--M", M);

  auto *solvekappa = app.add_subcommand("solve-kappa", "Solve i^kappa kappa^kappa = 1/p");
  solvekappa->add_option("p", p_text)->required();
  solvekappa->add_option("i", i)->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError &e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }

  const unsigned workers = worker_count();
  try {
    if (*chartable)
      return cmd_chartable(n, format);
    if (*eigs)
      return cmd_eigs(n);
    if (*boundary)
      return cmd_boundary(n, classes, method);
    if (*lexboundary)
      return cmd_lexboundary(n, lex_k);
    if (*ximin)
      return cmd_ximin(n, xi_k, profile, format, workers);
    if (*verify)
      return cmd_verify(suite, max_n, seed, workers);
    if (*solvek)
      return cmd_solve_k(p_text, M);
    if (*solvekappa)
      return cmd_solve_kappa(p_text, i);
  } catch (const CLI::Error &e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const ParseError &e) {
    std::cerr << "error: " << e.what() << '\n';
    return kMalformed;
  } catch (const InvariantViolation &e) {
    std::cerr << "internal error: " << e.what() << '\n';
    return kInternal;
  } catch (const std::out_of_range &e) {
    std::cerr << "error: " << e.what() << '\n';
    return kOutOfRange;
  } catch (const std::invalid_argument &e) {
    std::cerr << "error: " << e.what() << '\n';
    return kOutOfRange;
  } catch (const std::exception &e) {
    std::cerr << "internal error: " << e.what() << '\n';
    return kInternal;
  }
  return kUsage;
}
