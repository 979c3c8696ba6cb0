// Command-line front end: enumeration, tableau/ideal dynamics, q-series
// printing, explicit bijections, and verification reports.
//
// Exit codes: 0 = success / claim verified, 1 = claim refuted (the report
// carries a witness), 2 = usage or input error.

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <thread>

#include "itab/bijection.hpp"
#include "itab/dynamics.hpp"
#include "itab/enumerate.hpp"
#include "itab/json_io.hpp"
#include "itab/qseries.hpp"
#include "itab/verify.hpp"

namespace {

using itab::json;

// Shape syntax: "AxB" for rectangles, otherwise a comma list of parts where
// each token is "p" or "p^e" (exponent shorthand for e copies of p).
itab::Partition parse_shape(const std::string& text) {
  auto parse_positive = [&](const std::string& token) {
    std::size_t used = 0;
    int value = 0;
    try {
      value = std::stoi(token, &used);
    } catch (const std::exception&) {
      throw std::invalid_argument("bad shape syntax: \"" + text + '"');
    }
    if (used != token.size() || value < 1) {
      throw std::invalid_argument("bad shape syntax: \"" + text + '"');
    }
    return value;
  };

  if (const auto x = text.find('x'); x != std::string::npos) {
    return itab::Partition::rectangle(parse_positive(text.substr(0, x)),
                                      parse_positive(text.substr(x + 1)));
  }
  std::vector<int> parts;
  std::stringstream stream(text);
  std::string token;
  while (std::getline(stream, token, ',')) {
    if (const auto caret = token.find('^'); caret != std::string::npos) {
      const int part = parse_positive(token.substr(0, caret));
      const int repeat = parse_positive(token.substr(caret + 1));
      parts.insert(parts.end(), static_cast<std::size_t>(repeat), part);
    } else {
      parts.push_back(parse_positive(token));
    }
  }
  if (parts.empty()) {
    throw std::invalid_argument("bad shape syntax: \"" + text + '"');
  }
  try {
    return itab::Partition(std::move(parts));
  } catch (const std::invalid_argument&) {
    throw std::invalid_argument("shape is not a partition: \"" + text + '"');
  }
}

std::vector<int> parse_int_list(const std::string& text) {
  std::vector<int> out;
  if (text.empty()) return out;
  std::stringstream stream(text);
  std::string token;
  while (std::getline(stream, token, ',')) {
    std::size_t used = 0;
    out.push_back(std::stoi(token, &used));
    if (used != token.size()) {
      throw std::invalid_argument("bad integer list: \"" + text + '"');
    }
  }
  return out;
}

json read_json_input(const std::string& path) {
  std::string text;
  if (path == "-") {
    std::ostringstream buffer;
    buffer << std::cin.rdbuf();
    text = buffer.str();
  } else {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open input file: " + path);
    std::ostringstream buffer;
    buffer << in.rdbuf();
    text = buffer.str();
  }
  try {
    return json::parse(text);
  } catch (const std::exception& e) {
    throw std::invalid_argument(std::string("invalid JSON input: ") + e.what());
  }
}

unsigned long long default_budget() {
  if (const char* raw = std::getenv("TABLEAU_BUDGET")) {
    const std::string text(raw);
    std::size_t used = 0;
    unsigned long long value = 0;
    try {
      value = std::stoull(text, &used);
    } catch (const std::exception&) {
      throw std::invalid_argument("TABLEAU_BUDGET is not a number: \"" + text + '"');
    }
    if (used != text.size() || value == 0) {
      throw std::invalid_argument("TABLEAU_BUDGET must be a positive integer");
    }
    return value;
  }
  return 1'000'000;
}

int default_threads() {
  const unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : static_cast<int>(hw);
}

void print_report(const itab::VerificationReport& report, bool tsv) {
  if (tsv) {
    std::cout << report.to_tsv();
  } else {
    std::cout << report.to_json().dump() << '\n';
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact verification toolkit for increasing-tableau dynamics"};
  app.require_subcommand(1);

  int exit_code = 0;
  unsigned long long budget = 0;  // resolved after parsing (env, then flag)
  int threads = default_threads();

  // --- enumerate ---------------------------------------------------------
  struct {
    std::string shape;
    int max = 0;
    bool packed = false;
    bool count = false;
  } enum_opts;
  auto* cmd_enumerate =
      app.add_subcommand("enumerate", "list or count increasing tableaux");
  cmd_enumerate->add_option("--shape", enum_opts.shape, "shape (AxB, a,b,c or p^e list)")
      ->required();
  cmd_enumerate->add_option("--max", enum_opts.max, "entry bound m")->required();
  cmd_enumerate->add_flag("--packed", enum_opts.packed,
                          "restrict to entries covering exactly 1..m");
  cmd_enumerate->add_flag("--count", enum_opts.count, "print only the count");
  cmd_enumerate->callback([&]() {
    const itab::Partition shape = parse_shape(enum_opts.shape);
    if (enum_opts.count) {
      std::cout << itab::count_increasing(shape, enum_opts.max, enum_opts.packed,
                                          threads, budget)
                << '\n';
      return;
    }
    const auto tableaux = itab::enumerate_increasing(
        shape, enum_opts.max, enum_opts.packed, threads, budget);
    for (const auto& T : tableaux) {
      std::cout << itab::tableau_to_json(T).dump() << '\n';
    }
  });

  // --- promote / evacuate -------------------------------------------------
  struct {
    std::string input = "-";
    long long steps = 1;
  } promote_opts;
  auto* cmd_promote =
      app.add_subcommand("promote", "apply K-promotion steps to a tableau");
  cmd_promote->add_option("--input", promote_opts.input,
                          "tableau JSON file, or - for stdin");
  cmd_promote->add_option("--steps", promote_opts.steps, "number of steps (>= 0)");
  cmd_promote->callback([&]() {
    const auto T = itab::tableau_from_json(read_json_input(promote_opts.input));
    std::cout << itab::tableau_to_json(itab::k_promote_power(T, promote_opts.steps))
                     .dump()
              << '\n';
  });

  struct {
    std::string input = "-";
  } evacuate_opts;
  auto* cmd_evacuate =
      app.add_subcommand("evacuate", "apply K-evacuation to a tableau");
  cmd_evacuate->add_option("--input", evacuate_opts.input,
                           "tableau JSON file, or - for stdin");
  cmd_evacuate->callback([&]() {
    const auto T = itab::tableau_from_json(read_json_input(evacuate_opts.input));
    std::cout << itab::tableau_to_json(itab::k_evacuate(T)).dump() << '\n';
  });

  // --- rowmotion ----------------------------------------------------------
  struct {
    int a = 0;
    int b = 0;
    std::string profile;
    long long steps = 1;
  } rowmotion_opts;
  auto* cmd_rowmotion =
      app.add_subcommand("rowmotion", "apply rowmotion to an order ideal");
  cmd_rowmotion->add_option("--a", rowmotion_opts.a, "grid rows")->required();
  cmd_rowmotion->add_option("--b", rowmotion_opts.b, "grid columns")->required();
  cmd_rowmotion->add_option("--profile", rowmotion_opts.profile,
                            "ideal profile, e.g. 3,2 (empty for the empty ideal)");
  cmd_rowmotion->add_option("--steps", rowmotion_opts.steps, "number of steps (>= 0)");
  cmd_rowmotion->callback([&]() {
    if (rowmotion_opts.steps < 0) {
      throw std::invalid_argument("step count must be >= 0");
    }
    itab::OrderIdeal J(rowmotion_opts.a, rowmotion_opts.b,
                       parse_int_list(rowmotion_opts.profile));
    for (long long s = 0; s < rowmotion_opts.steps; ++s) J = itab::rowmotion(J);
    std::cout << itab::ideal_to_json(J).dump() << '\n';
  });

  // --- orbits -------------------------------------------------------------
  struct {
    std::string shape;
    int max = 0;
    bool packed = false;
  } orbit_opts;
  auto* cmd_orbits = app.add_subcommand(
      "orbits", "K-promotion orbit structure of an enumerated family");
  cmd_orbits->add_option("--shape", orbit_opts.shape, "shape")->required();
  cmd_orbits->add_option("--max", orbit_opts.max, "entry bound m")->required();
  cmd_orbits->add_flag("--packed", orbit_opts.packed,
                       "restrict to entries covering exactly 1..m");
  cmd_orbits->callback([&]() {
    auto ground = itab::enumerate_increasing(parse_shape(orbit_opts.shape),
                                             orbit_opts.max, orbit_opts.packed,
                                             threads, budget);
    const auto dec = itab::orbit_decomposition(
        std::move(ground),
        [](const itab::IncreasingTableau& T) { return itab::k_promote(T); });
    auto lengths = dec.lengths();
    std::sort(lengths.begin(), lengths.end());
    json out;
    out["ground_size"] = dec.total;
    out["orbit_count"] = dec.orbits.size();
    out["orbit_lengths"] = lengths;
    out["order"] = dec.order;
    json reps = json::array();
    for (const auto& [rep, len] : dec.orbits) {
      json row;
      row["length"] = len;
      row["representative"] = itab::tableau_to_json(rep);
      reps.push_back(std::move(row));
    }
    out["orbits"] = reps;
    std::cout << out.dump() << '\n';
  });

  // --- verify -------------------------------------------------------------
  bool tsv = false;
  auto* cmd_verify = app.add_subcommand("verify", "run a verification claim");
  cmd_verify->require_subcommand(1);
  struct {
    int k = 0;
    int a = 0;
    int b = 0;
    int m = 0;
    int r = 0;
    int s = 0;
    int k_min = 2;
    int k_max = 0;
  } verify_opts;

  auto finish = [&](const itab::VerificationReport& report) {
    print_report(report, tsv);
    exit_code = report.pass ? 0 : 1;
  };
  auto policy = [&]() {
    return itab::ExecPolicy{budget, threads};
  };

  auto* claim_main = cmd_verify->add_subcommand(
      "main", "packed 3xk sieving with the two-column-tail hook polynomial");
  claim_main->add_option("--k", verify_opts.k, "number of columns (k >= 2)")
      ->required();
  claim_main->callback(
      [&]() { finish(itab::verify_three_row_csp(verify_opts.k, policy())); });

  auto* claim_rectangle = cmd_verify->add_subcommand(
      "rectangle", "all axb fillings with bound a+b sieve with qbinom(a+b, a)");
  claim_rectangle->add_option("--a", verify_opts.a, "rows")->required();
  claim_rectangle->add_option("--b", verify_opts.b, "columns")->required();
  claim_rectangle->callback([&]() {
    finish(itab::verify_rectangle_csp(verify_opts.a, verify_opts.b, policy()));
  });

  auto* claim_decomposition = cmd_verify->add_subcommand(
      "decomposition",
      "axb fillings split into packed ones plus the minimal tableau's orbit");
  claim_decomposition->add_option("--a", verify_opts.a, "rows")->required();
  claim_decomposition->add_option("--b", verify_opts.b, "columns")->required();
  claim_decomposition->callback([&]() {
    finish(itab::verify_packed_decomposition(verify_opts.a, verify_opts.b,
                                             policy()));
  });

  auto* claim_identity = cmd_verify->add_subcommand(
      "identity", "hook polynomial of the two-column tail shape equals "
                  "qbinom(k+3,3) - q^(k-1)[k+3]_q");
  claim_identity->add_option("--k-min", verify_opts.k_min, "sweep start (>= 2)");
  claim_identity->add_option("--k-max", verify_opts.k_max, "sweep end")->required();
  claim_identity->callback([&]() {
    finish(itab::verify_qhook_binomial_identity(verify_opts.k_min,
                                                verify_opts.k_max));
  });

  auto* claim_csp1 = cmd_verify->add_subcommand(
      "csp1", "standard axb tableaux sieve with the rectangle hook polynomial");
  claim_csp1->add_option("--a", verify_opts.a, "rows")->required();
  claim_csp1->add_option("--b", verify_opts.b, "columns")->required();
  claim_csp1->callback([&]() {
    finish(itab::verify_syt_rectangle_csp(verify_opts.a, verify_opts.b, policy()));
  });

  auto* claim_csp2 = cmd_verify->add_subcommand(
      "csp2", "packed 2xk fillings with bound m sieve with the pennant hook "
              "polynomial");
  claim_csp2->add_option("--k", verify_opts.k, "columns")->required();
  claim_csp2->add_option("--m", verify_opts.m, "entry bound")->required();
  claim_csp2->callback([&]() {
    finish(itab::verify_two_row_csp(verify_opts.k, verify_opts.m, policy()));
  });

  auto* claim_csp3 = cmd_verify->add_subcommand(
      "csp3", "packed hook-shape fillings sieve with a product of hook "
              "polynomials at order m-1");
  claim_csp3->add_option("--r", verify_opts.r, "arm length")->required();
  claim_csp3->add_option("--s", verify_opts.s, "leg length")->required();
  claim_csp3->add_option("--m", verify_opts.m, "entry bound")->required();
  claim_csp3->callback([&]() {
    finish(itab::verify_hook_shape_csp(verify_opts.r, verify_opts.s,
                                       verify_opts.m, policy()));
  });

  // --- bijection ----------------------------------------------------------
  struct {
    int k = 0;
    bool obstructions = false;
  } bijection_opts;
  auto* cmd_bijection = app.add_subcommand(
      "bijection",
      "explicit bijection from packed 3xk tableaux to two-column-tail "
      "standard tableaux, or the statistic obstruction report");
  cmd_bijection->add_option("--k", bijection_opts.k, "number of columns (k >= 2)")
      ->required();
  cmd_bijection->add_flag("--obstructions", bijection_opts.obstructions,
                          "compare maj multisets and evacuation fixed points");
  cmd_bijection->callback([&]() {
    if (bijection_opts.obstructions) {
      finish(itab::bijection_obstruction_report(bijection_opts.k, policy()));
      return;
    }
    const auto table = itab::build_explicit_bijection(bijection_opts.k, policy());
    json out;
    out["domain"] = table.domain_label;
    out["codomain"] = table.codomain_label;
    out["patch_size"] = table.patch_size;
    json pairs = json::array();
    for (const auto& [from, to] : table.pairs) {
      pairs.push_back(
          {itab::tableau_to_json(from), itab::tableau_to_json(to)});
    }
    out["pairs"] = std::move(pairs);
    std::cout << out.dump() << '\n';
  });

  // --- qpoly --------------------------------------------------------------
  auto* cmd_qpoly =
      app.add_subcommand("qpoly", "print q-series coefficient arrays");
  cmd_qpoly->require_subcommand(1);
  struct {
    int n = 0;
    int k = 0;
    int d = 0;
    std::string shape;
  } qpoly_opts;

  auto print_poly = [](const itab::IntPoly& p) {
    std::cout << itab::poly_to_json(p).dump() << '\n';
  };
  auto* qpoly_binomial =
      cmd_qpoly->add_subcommand("binomial", "Gaussian binomial qbinom(n, k)");
  qpoly_binomial->add_option("--n", qpoly_opts.n)->required();
  qpoly_binomial->add_option("--k", qpoly_opts.k)->required();
  qpoly_binomial->callback(
      [&]() { print_poly(itab::q_binomial(qpoly_opts.n, qpoly_opts.k)); });

  auto* qpoly_hook =
      cmd_qpoly->add_subcommand("hook", "hook polynomial of a shape");
  qpoly_hook->add_option("--shape", qpoly_opts.shape)->required();
  qpoly_hook->callback([&]() {
    print_poly(itab::q_hook_polynomial(parse_shape(qpoly_opts.shape)));
  });

  auto* qpoly_cyclotomic =
      cmd_qpoly->add_subcommand("cyclotomic", "d-th cyclotomic polynomial");
  qpoly_cyclotomic->add_option("--d", qpoly_opts.d)->required();
  qpoly_cyclotomic->callback([&]() { print_poly(itab::cyclotomic(qpoly_opts.d)); });

  // Shared heavy-command flags; claim subcommands let them fall through to
  // the verify parent so flag order does not matter.
  for (CLI::App* heavy : {cmd_enumerate, cmd_orbits, cmd_bijection, cmd_verify}) {
    heavy->add_option("--threads", threads, "worker threads");
    heavy->add_option("--budget", budget, "ground-set element cap");
  }
  cmd_verify->add_flag("--tsv", tsv, "render the report as TSV");
  cmd_bijection->add_flag("--tsv", tsv, "render the obstruction report as TSV");
  for (CLI::App* claim : {claim_main, claim_rectangle, claim_decomposition,
                          claim_identity, claim_csp1, claim_csp2, claim_csp3}) {
    claim->fallthrough();
  }

  try {
    budget = default_budget();
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  } catch (const itab::BudgetError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
  return exit_code;
}
