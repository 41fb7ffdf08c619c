// lieindex command line: exact computations on semisimple Lie algebras in a
// Chevalley basis. Subcommands: roots, cascade, index, stable-form,
// stability-check, counterexample-d4, verify-all. Output is deterministic for
// a fixed (command, seed); --format json emits machine-readable documents.
//
// Exit codes: 0 success / all checks pass, 1 a verification failed,
// 2 usage or input error.

#include <CLI11.hpp>

#include <cstdint>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include "lieindex/chevalley.hpp"
#include "lieindex/counterexample_d4.hpp"
#include "lieindex/json_io.hpp"
#include "lieindex/rootsystem.hpp"
#include "lieindex/stability.hpp"
#include "lieindex/subalg.hpp"
#include "lieindex/verify.hpp"

namespace li = lieindex;

namespace {

std::uint64_t default_seed() {
  if (const char* env = std::getenv("LIEINDEX_SEED"))
    return std::strtoull(env, nullptr, 10);
  return 0;
}

struct TypeOpts {
  std::string type = "A";
  int rank = 1;

  li::RootSystem root_system() const {
    if (type.size() != 1)
      throw std::invalid_argument("--type expects a single letter A..G");
    return li::build_root_system(type[0], rank);
  }
};

void add_type_options(CLI::App* cmd, TypeOpts& t) {
  cmd->add_option("--type", t.type, "simple type family (A..G)")->required();
  cmd->add_option("--rank", t.rank, "rank of the simple type")->required();
}

li::Subalgebra make_subalgebra(const li::LieAlgebra& L, const std::string& sub,
                               const std::vector<int>& subset1) {
  std::vector<int> subset0;
  for (int i : subset1) {
    if (i < 1 || i > L.rank())
      throw std::invalid_argument("--parabolic-subset index " + std::to_string(i) +
                                  " out of range 1.." + std::to_string(L.rank()));
    subset0.push_back(i - 1);
  }
  if (sub == "full") return li::full_algebra(L);
  if (sub == "borel") return li::borel(L);
  if (sub == "parabolic") return li::parabolic(L, subset0);
  throw std::invalid_argument("--sub expects full, borel or parabolic");
}

int run_roots(const TypeOpts& t, const std::string& format, bool with_brackets) {
  li::RootSystem rs = t.root_system();
  if (format == "json") {
    li::json j = li::root_system_to_json(rs);
    if (with_brackets) j["bracket_table"] = li::bracket_table_to_json(li::build_algebra(rs));
    std::cout << j.dump(2) << "\n";
    return 0;
  }
  std::cout << "root system " << rs.type().name() << ": rank " << rs.rank() << ", "
            << rs.positive_roots().size() << " positive roots\n";
  std::cout << "cartan matrix (row i holds <alpha_j, alpha_i^vee>):\n";
  for (const auto& row : rs.cartan()) {
    std::cout << "  [";
    for (std::size_t j = 0; j < row.size(); ++j) std::cout << (j ? "," : "") << row[j];
    std::cout << "]\n";
  }
  std::cout << "positive roots (grlex):\n";
  for (const li::Root& r : rs.positive_roots()) std::cout << "  " << r.str() << "\n";
  if (with_brackets) {
    li::LieAlgebra L = li::build_algebra(rs);
    std::cout << "bracket table entries: " << li::bracket_table_to_json(L).size()
              << " (use --format json for the table)\n";
  }
  return 0;
}

int run_cascade(const TypeOpts& t, const std::string& format) {
  li::RootSystem rs = t.root_system();
  std::vector<li::CascadeNode> nodes = rs.cascade();
  if (format == "json") {
    li::json j;
    j["type"] = t.type;
    j["rank"] = t.rank;
    j["k"] = nodes.size();
    j["cascade"] = li::cascade_to_json(nodes);
    std::cout << j.dump(2) << "\n";
    return 0;
  }
  std::cout << "root system " << rs.type().name() << ": " << rs.positive_roots().size()
            << " positive roots\n";
  std::cout << "cascade size k = " << nodes.size() << "\n";
  for (std::size_t i = 0; i < nodes.size(); ++i) {
    const li::CascadeNode& n = nodes[i];
    std::cout << "K" << i + 1 << ": subset {";
    for (std::size_t s = 0; s < n.subset.size(); ++s)
      std::cout << (s ? "," : "") << "a" << n.subset[s] + 1;
    std::cout << "}";
    if (n.parent) std::cout << " parent K" << *n.parent + 1;
    std::cout << " epsilon " << n.epsilon.str() << " gamma(" << n.gamma.size() << "):";
    for (const li::Root& g : n.gamma) std::cout << " " << g.str();
    std::cout << "\n";
  }
  return 0;
}

int run_index(const TypeOpts& t, const std::string& sub, const std::vector<int>& subset1,
              int trials, std::uint64_t seed, const std::string& format) {
  li::LieAlgebra L = li::build_algebra(t.root_system());
  li::Subalgebra a = make_subalgebra(L, sub, subset1);
  int chi = li::index(a, trials, seed);
  std::size_t cert_rank = 0;
  std::string cert;
  if (a.kind() == li::SubalgebraKind::Borel) {
    cert_rank = li::kirillov_rank(li::form_from_element(a, li::cascade_element(L)));
    cert = "cascade-form";
  } else {
    for (int s = 0; s < trials; ++s)
      cert_rank = std::max(cert_rank,
                           li::kirillov_rank(li::random_form(a, seed, static_cast<std::uint64_t>(s))));
    cert = "max-sampled";
  }
  if (format == "json") {
    std::cout << li::index_result_to_json(a, chi, trials, seed, cert_rank, cert).dump(2) << "\n";
    return 0;
  }
  std::cout << "subalgebra " << a.descr() << ": dim " << a.dim() << "\n";
  std::cout << "index chi = " << chi << " (trials " << trials << ", seed " << seed << ")\n";
  std::cout << "certificate: " << cert << " Kirillov rank " << cert_rank << "\n";
  return 0;
}

int run_stable_form(const TypeOpts& t, const std::string& format) {
  li::LieAlgebra L = li::build_algebra(t.root_system());
  li::Subalgebra b = li::borel(L);
  li::Element u = li::cascade_element(L);
  li::LinearForm f = li::form_from_element(b, u);
  std::vector<li::Element> bf = li::centralizer(f);
  li::StabilityReport rep = li::is_stable(b, f);
  bool ssc = li::check_semisimple_commutative_centralizer(b, f);
  if (format == "json") {
    li::json j;
    j["subalgebra"] = li::subalgebra_to_json(b);
    j["u"] = li::element_to_json(u);
    j["form"] = li::form_to_json(f);
    li::json basis = li::json::array();
    for (const li::Element& x : bf) basis.push_back(li::element_to_json(x));
    j["centralizer_basis"] = basis;
    j["semisimple_commutative_centralizer"] = ssc;
    j["report"] = li::stability_report_to_json(rep);
    std::cout << j.dump(2) << "\n";
    return 0;
  }
  std::cout << b.descr() << ": dim " << b.dim() << "\n";
  std::cout << "u = " << L.element_str(u) << "\n";
  std::cout << "f = phi_b(u) with coordinates over the borel basis:\n  [";
  for (std::size_t i = 0; i < f.coords.size(); ++i)
    std::cout << (i ? "," : "") << li::to_string(f.coords[i]);
  std::cout << "]\n";
  std::cout << "b^f basis (dim " << bf.size() << "):\n";
  for (const li::Element& x : bf) std::cout << "  " << L.element_str(x) << "\n";
  std::cout << "semisimple commutative centralizer: " << (ssc ? "yes" : "no") << "\n";
  std::cout << "verdict: " << rep.verdict << "\n";
  return 0;
}

int run_stability_check(const TypeOpts& t, const std::string& sub,
                        const std::vector<int>& subset1, const std::string& form_file,
                        const std::string& format) {
  li::LieAlgebra L = li::build_algebra(t.root_system());
  li::Subalgebra a = make_subalgebra(L, sub, subset1);
  std::ifstream in(form_file);
  if (!in) throw std::invalid_argument("cannot open form file: " + form_file);
  li::json doc = li::json::parse(in);
  li::QVec coords = li::coords_from_json(doc);
  if (coords.size() != a.dim())
    throw std::invalid_argument("form file has " + std::to_string(coords.size()) +
                                " coordinates, subalgebra has dimension " +
                                std::to_string(a.dim()));
  li::LinearForm f{&a, std::move(coords), "file:" + form_file};
  li::StabilityReport rep = li::is_stable(a, f);
  bool ssc = li::check_semisimple_commutative_centralizer(a, f);
  if (format == "json") {
    li::json j = li::stability_report_to_json(rep);
    j["semisimple_commutative_centralizer"] = ssc;
    std::cout << j.dump(2) << "\n";
    return 0;
  }
  std::cout << "subalgebra " << a.descr() << ": dim " << a.dim() << "\n";
  std::cout << "dim a^f = " << rep.dim_centralizer << ", dim [a,a^f] = " << rep.dim_bracket_space
            << ", dim intersection = " << rep.dim_intersection << "\n";
  std::cout << "semisimple commutative centralizer: " << (ssc ? "yes" : "no") << "\n";
  if (!rep.warning.empty()) std::cout << "warning: " << rep.warning << "\n";
  std::cout << "verdict: " << rep.verdict << "\n";
  return 0;
}

int run_counterexample(const std::vector<std::string>& lambda_args, const std::string& format) {
  std::vector<li::Rat> lambdas;
  if (lambda_args.empty()) lambdas = li::default_lambdas();
  else
    for (const std::string& s : lambda_args) lambdas.push_back(li::parse_rat(s));
  li::D4Scenario sc = li::build_scenario();
  std::vector<li::CounterexampleReport> reps = li::run_counterexample(sc, lambdas);
  bool all_ok = sc.parabolic_subalg().dim() == 17;
  for (const li::CounterexampleReport& r : reps) all_ok = all_ok && r.all_ok();
  if (format == "json") {
    li::json j = li::json::array();
    for (const li::CounterexampleReport& r : reps) j.push_back(li::counterexample_report_to_json(r));
    std::cout << j.dump(2) << "\n";
    return all_ok ? 0 : 1;
  }
  std::cout << "D4 minimal parabolic p = parabolic(D4, {2}): dim "
            << sc.parabolic_subalg().dim() << "\n";
  std::cout << "u = " << sc.L().element_str(sc.u) << "\n";
  for (const li::CounterexampleReport& r : reps) {
    std::cout << "lambda = " << li::to_string(r.lambda) << ": dim p^f = " << r.dim_pf
              << ", support(" << r.support.size() << "):";
    for (const li::Root& s : r.support) std::cout << " " << s.str();
    std::cout << ", [h,x]=x: " << (r.h_eigen_check ? "yes" : "no")
              << ", stable: " << (r.stability_verdict ? "yes" : "no") << " -> "
              << (r.all_ok() ? "OK" : "FAILED") << "\n";
    for (const std::string& f : r.failures) std::cout << "  failed claim: " << f << "\n";
  }
  std::cout << (all_ok ? "all claims verified\n" : "some claims FAILED\n");
  return all_ok ? 0 : 1;
}

int run_verify_all(int max_rank, std::uint64_t seed, const std::string& format) {
  std::vector<li::CheckResult> results = li::run_verification(max_rank, seed);
  bool all = true;
  for (const li::CheckResult& r : results) all = all && r.pass;
  if (format == "json") {
    li::json j = li::json::array();
    for (const li::CheckResult& r : results) j.push_back(li::check_result_to_json(r));
    std::cout << j.dump(2) << "\n";
    return all ? 0 : 1;
  }
  for (const li::CheckResult& r : results) {
    std::cout << (r.pass ? "[PASS] " : "[FAIL] ") << r.name;
    if (!r.detail.empty()) std::cout << ": " << r.detail;
    std::cout << "\n";
  }
  std::cout << (all ? "verify-all: all checks passed\n" : "verify-all: FAILURES above\n");
  return all ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact index, Kostant cascade and stable linear forms for semisimple Lie algebras"};
  app.require_subcommand(1);

  std::string format = "text";
  TypeOpts topts;
  std::string sub = "borel";
  std::vector<int> subset1;
  int trials = 3;
  std::uint64_t seed = default_seed();
  bool with_brackets = false;
  std::string form_file;
  std::vector<std::string> lambda_args;
  int max_rank = 4;

  auto add_format = [&](CLI::App* cmd) {
    cmd->add_option("--format", format, "output format: text or json")
        ->check(CLI::IsMember({"text", "json"}));
  };

  CLI::App* roots = app.add_subcommand("roots", "enumerate a root system");
  add_type_options(roots, topts);
  add_format(roots);
  roots->add_flag("--bracket-table", with_brackets, "include the Chevalley bracket table");

  CLI::App* cascade = app.add_subcommand("cascade", "cascade of strongly orthogonal roots");
  add_type_options(cascade, topts);
  add_format(cascade);

  CLI::App* index_cmd = app.add_subcommand("index", "index of a subalgebra via sampled Kirillov ranks");
  add_type_options(index_cmd, topts);
  add_format(index_cmd);
  index_cmd->add_option("--sub", sub, "subalgebra: full, borel or parabolic");
  index_cmd->add_option("--parabolic-subset", subset1, "1-based simple root indices")
      ->delimiter(',');
  index_cmd->add_option("--trials", trials, "number of sampled forms");
  index_cmd->add_option("--seed", seed, "PRNG seed (default: LIEINDEX_SEED or 0)");

  CLI::App* stable = app.add_subcommand("stable-form", "stable form phi_b(u) on the borel");
  add_type_options(stable, topts);
  add_format(stable);

  CLI::App* check = app.add_subcommand("stability-check", "stability criterion for a form file");
  add_type_options(check, topts);
  add_format(check);
  check->add_option("--sub", sub, "subalgebra: full, borel or parabolic");
  check->add_option("--parabolic-subset", subset1, "1-based simple root indices")->delimiter(',');
  check->add_option("--form-file", form_file, "JSON array of rationals over the subalgebra basis")
      ->required();

  CLI::App* cx = app.add_subcommand("counterexample-d4",
                                    "the D4 minimal parabolic with no stable linear form");
  add_format(cx);
  cx->add_option("--lambda", lambda_args, "lambda values (rationals like -3/7); repeatable");

  CLI::App* verify = app.add_subcommand("verify-all", "run the verification battery");
  add_format(verify);
  verify->add_option("--max-rank", max_rank, "rank cap for the type lists");
  verify->add_option("--seed", seed, "PRNG seed (default: LIEINDEX_SEED or 0)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (roots->parsed()) return run_roots(topts, format, with_brackets);
    if (cascade->parsed()) return run_cascade(topts, format);
    if (index_cmd->parsed()) return run_index(topts, sub, subset1, trials, seed, format);
    if (stable->parsed()) return run_stable_form(topts, format);
    if (check->parsed()) return run_stability_check(topts, sub, subset1, form_file, format);
    if (cx->parsed()) return run_counterexample(lambda_args, format);
    if (verify->parsed()) return run_verify_all(max_rank, seed, format);
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::domain_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}
