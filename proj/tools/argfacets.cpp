// argfacets: solve, facet reasoning, instance generation, benchmarking, serving.
//
// Exit codes: 0 ok, 1 usage, 2 input error.

#include <csignal>
#include <fstream>
#include <iostream>
#include <pthread.h>
#include <sstream>
#include <thread>

#include "CLI11.hpp"
#include "argfacets/bench.hpp"
#include "argfacets/facets.hpp"
#include "argfacets/io.hpp"
#include "argfacets/reductions.hpp"
#include "argfacets/search.hpp"
#include "argfacets/service.hpp"

namespace af = argfacets;

namespace {

constexpr int kUsage = 1;
constexpr int kInput = 2;

struct InputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string braces(std::vector<std::string> names) {
  std::sort(names.begin(), names.end());
  std::string out = "{";
  for (std::size_t i = 0; i < names.size(); ++i) out += (i ? "," : "") + names[i];
  return out + "}";
}

std::string braces(const af::ArgumentationFramework& f, const af::ArgumentSet& s) {
  return braces(f.names_of(s));
}

af::Semantics semantics_or_throw(const std::string& text) {
  auto s = af::parse_semantics(text);
  if (!s) throw InputError("unknown semantics '" + text + "'");
  return *s;
}

af::ArgumentationFramework load(const std::string& path, const std::string& format) {
  std::optional<af::Format> f;
  if (!format.empty()) {
    f = af::parse_format(format);
    if (!f) throw InputError("unknown format '" + format + "'");
  }
  return af::load_framework(path, f);
}

af::ArgumentIndex argument_or_throw(const af::ArgumentationFramework& f, const std::string& name) {
  auto a = f.find(name);
  if (!a) throw InputError("unknown argument '" + name + "'");
  return *a;
}

void write_output(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw InputError("cannot write '" + path + "'");
  out << text;
}

// --- solve ------------------------------------------------------------------

struct SolveArgs {
  std::string file, format, semantics;
  std::size_t max_models = 0;
  double timeout = 60;
};

int solve(const SolveArgs& a) {
  auto f = load(a.file, a.format);
  af::Budget budget;
  if (a.max_models > 0) budget.max_models = a.max_models;
  budget.timeout = std::chrono::duration_cast<af::Clock::duration>(std::chrono::duration<double>(a.timeout));
  auto r = af::enumerate(f, semantics_or_throw(a.semantics), af::Constraints::none(f), budget);
  std::vector<std::vector<std::string>> lines;
  for (const auto& e : r.extensions) {
    auto names = f.names_of(e);
    std::sort(names.begin(), names.end());
    lines.push_back(std::move(names));
  }
  std::sort(lines.begin(), lines.end());
  for (const auto& l : lines) std::cout << braces(l) << '\n';
  std::cout << lines.size() << (lines.size() == 1 ? " extension" : " extensions")
            << (r.exhausted ? " (exhausted)" : " (not exhausted)") << '\n';
  return 0;
}

// --- facets / significance ----------------------------------------------------

struct FacetsArgs {
  std::string file, format, semantics;
  std::vector<std::string> approve, disapprove;
};

int facets(const FacetsArgs& a) {
  auto f = load(a.file, a.format);
  auto c = af::Constraints::none(f);
  for (const auto& n : a.approve) c.require_in.insert(argument_or_throw(f, n));
  for (const auto& n : a.disapprove) {
    auto x = argument_or_throw(f, n);
    if (c.require_in.contains(x)) throw InputError("'" + n + "' is both approved and disapproved");
    c.require_out.insert(x);
  }
  auto r = af::facet_report(f, semantics_or_throw(a.semantics), c);
  std::cout << "cred: " << braces(f, r.cred) << '\n'
            << "skep: " << braces(f, r.skep) << '\n'
            << "facets: " << braces(f, r.facets) << '\n'
            << "count: " << r.facets.size() << '\n';
  return 0;
}

int significance(const FacetsArgs& a) {
  auto f = load(a.file, a.format);
  for (const auto& e : af::significance_table(f, semantics_or_throw(a.semantics)))
    std::cout << af::to_string(f, e.literal) << '\t' << e.remaining_facets << '\t'
              << e.score.to_string() << '\n';
  return 0;
}

// --- gen ----------------------------------------------------------------------

struct GenArgs {
  std::string kind, dimacs, qdimacs, phi, psi, af_file, arg, out, manifest, format = "apx";
  std::size_t n = 0;
  double p = 0.25;
  std::uint64_t seed = 0;
  bool no_guard = false;
};

std::string need(const std::string& value, const char* flag) {
  if (value.empty()) throw InputError(std::string("missing ") + flag);
  return value;
}

int gen(const GenArgs& a) {
  auto out_format = af::parse_format(a.format);
  if (!out_format) throw InputError("unknown format '" + a.format + "'");
  std::ostringstream manifest;
  manifest << "generator=" << a.kind;
  std::optional<af::ArgumentationFramework> result;

  if (a.kind == "std-translation") {
    auto phi = af::parse_dimacs(af::read_file(need(a.dimacs, "--dimacs")));
    result = af::standard_translation(phi);
    manifest << " dimacs=" << a.dimacs;
    if (auto k = af::standard_translation_facets(phi))
      for (auto s : {"adm", "comp", "stab"}) manifest << " expected_facets(" << s << ")=" << *k;
  } else if (a.kind == "duplicate") {
    auto f = af::load_framework(need(a.af_file, "--af"));
    result = af::duplicate_argument(f, argument_or_throw(f, need(a.arg, "--arg")));
    manifest << " af=" << a.af_file << " arg=" << a.arg;
  } else if (a.kind == "copies") {
    auto f = af::load_framework(need(a.af_file, "--af"));
    if (a.n < 1) throw InputError("--n must be at least 1");
    result = af::copy_gadget(f, argument_or_throw(f, need(a.arg, "--arg")), a.n);
    manifest << " af=" << a.af_file << " arg=" << a.arg << " n=" << a.n;
  } else if (a.kind == "satunsat") {
    auto phi = af::parse_dimacs(af::read_file(need(a.phi, "--phi")));
    auto psi = af::parse_dimacs(af::read_file(need(a.psi, "--psi")));
    auto inst = af::satunsat_instance(phi, psi);
    manifest << " phi=" << a.phi << " psi=" << a.psi << " target_facets=" << inst.target_facets;
    auto sp = af::satisfiable_by_sweep(phi);
    auto ss = af::satisfiable_by_sweep(psi);
    if (sp && ss) manifest << " positive=" << (*sp && !*ss ? "true" : "false");
    result = std::move(inst.framework);
  } else if (a.kind == "qbf") {
    auto q = af::parse_qdimacs_ae(af::read_file(need(a.qdimacs, "--qdimacs")));
    manifest << " qdimacs=" << a.qdimacs << " guarded=" << (a.no_guard ? "false" : "true");
    if (auto t = af::qbf_true_by_sweep(q))
      manifest << " formula_true=" << (*t ? "true" : "false")
               << " expected_phi_pref_facet=" << (*t ? "false" : "true");
    result = af::qbf_reduction(a.no_guard ? q : af::guard_satisfiable(q));
  } else if (a.kind == "random") {
    if (a.n < 1) throw InputError("--n must be at least 1");
    if (!(a.p >= 0 && a.p <= 1)) throw InputError("--p must lie in [0,1]");
    result = af::random_af(a.n, a.p, a.seed);
    manifest << " n=" << a.n << " p=" << a.p << " seed=" << a.seed;
  } else {
    throw InputError("unknown generator kind '" + a.kind + "'");
  }

  manifest << " n_args=" << result->size() << " n_attacks=" << result->attack_count();
  if (!a.out.empty()) manifest << " out=" << a.out;
  write_output(a.out, af::render_framework(*result, *out_format));
  if (!a.manifest.empty()) {
    std::ofstream m(a.manifest, std::ios::app);
    if (!m) throw InputError("cannot write '" + a.manifest + "'");
    m << manifest.str() << '\n';
  } else {
    std::cerr << manifest.str() << '\n';
  }
  return 0;
}

// --- bench ----------------------------------------------------------------------

struct BenchArgs {
  std::string dir, csv;
  std::vector<std::string> semantics{"stab"};
  double timeout = 60;
  std::size_t max_models = 0;
  unsigned workers = 1;
};

int bench(const BenchArgs& a) {
  if (!std::filesystem::is_directory(a.dir)) throw InputError("not a directory: '" + a.dir + "'");
  std::vector<af::Semantics> sems;
  for (const auto& s : a.semantics) sems.push_back(semantics_or_throw(s));
  af::BenchOptions options;
  options.timeout = std::chrono::milliseconds(static_cast<std::int64_t>(a.timeout * 1000));
  if (a.max_models > 0) options.max_models = a.max_models;
  options.workers = std::max(1U, a.workers);
  auto rows = af::run_bench(af::list_instances(a.dir), sems, options);
  std::ostringstream out;
  af::write_bench_csv(out, rows);
  write_output(a.csv, out.str());
  return 0;
}

// --- serve ----------------------------------------------------------------------

struct ServeArgs {
  std::string host = "127.0.0.1", example_dir;
  int port = 8080;
  double deadline = 30;
};

int serve(const ServeArgs& a) {
  // Block the shutdown signals before any thread starts so only sigwait sees
  // them. A shell may have started us with SIGINT ignored; undo that first.
  std::signal(SIGINT, SIG_DFL);
  std::signal(SIGTERM, SIG_DFL);
  sigset_t signals;
  sigemptyset(&signals);
  sigaddset(&signals, SIGINT);
  sigaddset(&signals, SIGTERM);
  pthread_sigmask(SIG_BLOCK, &signals, nullptr);

  af::ServiceOptions options;
  options.deadline = std::chrono::milliseconds(static_cast<std::int64_t>(a.deadline * 1000));
  af::Service service(options);
  if (!a.example_dir.empty()) {
    if (!std::filesystem::is_directory(a.example_dir))
      throw InputError("not a directory: '" + a.example_dir + "'");
    std::cerr << "loaded " << service.load_examples(a.example_dir) << " examples\n";
  }
  int port = service.bind(a.host, a.port);
  if (port <= 0) throw InputError("cannot bind " + a.host + ":" + std::to_string(a.port));
  std::cout << "listening on http://" << a.host << ':' << port << std::endl;

  std::thread server([&] { service.listen(); });
  int sig = 0;
  sigwait(&signals, &sig);
  service.stop();
  server.join();
  std::cerr << "shutting down\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Facet reasoning over abstract argumentation frameworks"};
  app.require_subcommand(1);
  const std::vector<std::string> sem_names{"cnf", "nai", "adm", "comp", "stab", "pref", "semi", "stag"};
  auto sem_check = CLI::IsMember(sem_names);

  SolveArgs solve_args;
  auto* solve_cmd = app.add_subcommand("solve", "Enumerate extensions");
  solve_cmd->add_option("file", solve_args.file, "Framework file")->required();
  solve_cmd->add_option("--format", solve_args.format, "apx, tgf or iccma23 (default: by extension)");
  solve_cmd->add_option("--semantics", solve_args.semantics, "Semantics")->required()->check(sem_check);
  solve_cmd->add_option("--max-models", solve_args.max_models, "Stop after this many extensions");
  solve_cmd->add_option("--timeout", solve_args.timeout, "Seconds")->capture_default_str();

  FacetsArgs facets_args;
  auto* facets_cmd = app.add_subcommand("facets", "Credulous, skeptical and facet sets");
  facets_cmd->add_option("file", facets_args.file, "Framework file")->required();
  facets_cmd->add_option("--format", facets_args.format, "apx, tgf or iccma23");
  facets_cmd->add_option("--semantics", facets_args.semantics, "Semantics")->required()->check(sem_check);
  facets_cmd->add_option("--approve", facets_args.approve, "Require an argument (repeatable)");
  facets_cmd->add_option("--disapprove", facets_args.disapprove, "Exclude an argument (repeatable)");

  FacetsArgs sig_args;
  auto* sig_cmd = app.add_subcommand("significance", "Significance of every facet literal");
  sig_cmd->add_option("file", sig_args.file, "Framework file")->required();
  sig_cmd->add_option("--format", sig_args.format, "apx, tgf or iccma23");
  sig_cmd->add_option("--semantics", sig_args.semantics, "Semantics")->required()->check(sem_check);

  GenArgs gen_args;
  auto* gen_cmd = app.add_subcommand("gen", "Generate instances from the reductions");
  gen_cmd->add_option("kind", gen_args.kind, "std-translation|duplicate|copies|satunsat|qbf|random")
      ->required()
      ->check(CLI::IsMember({"std-translation", "duplicate", "copies", "satunsat", "qbf", "random"}));
  gen_cmd->add_option("--dimacs", gen_args.dimacs, "CNF for std-translation");
  gen_cmd->add_option("--qdimacs", gen_args.qdimacs, "forall-exists QBF for qbf");
  gen_cmd->add_option("--phi", gen_args.phi, "Satisfiable side for satunsat");
  gen_cmd->add_option("--psi", gen_args.psi, "Unsatisfiable side for satunsat");
  gen_cmd->add_option("--af", gen_args.af_file, "Framework for duplicate/copies");
  gen_cmd->add_option("--arg", gen_args.arg, "Argument for duplicate/copies");
  gen_cmd->add_option("--n", gen_args.n, "Copies (copies) or argument count (random)");
  gen_cmd->add_option("--p", gen_args.p, "Attack probability (random)")->capture_default_str();
  gen_cmd->add_option("--seed", gen_args.seed, "Seed (random)")->capture_default_str();
  gen_cmd->add_flag("--no-guard", gen_args.no_guard, "qbf: skip the satisfiability guard");
  gen_cmd->add_option("--format", gen_args.format, "Output format")->capture_default_str();
  gen_cmd->add_option("--out", gen_args.out, "Output file (default: stdout)");
  gen_cmd->add_option("--manifest", gen_args.manifest, "Append the manifest line here (default: stderr)");

  BenchArgs bench_args;
  auto* bench_cmd = app.add_subcommand("bench", "Time enumeration against facet computation");
  bench_cmd->add_option("directory", bench_args.dir, "Directory of instances")->required();
  bench_cmd->add_option("--semantics", bench_args.semantics, "Comma-separated list")
      ->delimiter(',')
      ->check(sem_check)
      ->capture_default_str();
  bench_cmd->add_option("--timeout", bench_args.timeout, "Seconds per task")->capture_default_str();
  bench_cmd->add_option("--max-models", bench_args.max_models, "Enumeration cap (default: none)");
  bench_cmd->add_option("--csv", bench_args.csv, "Output file (default: stdout)");
  bench_cmd->add_option("--workers", bench_args.workers, "Parallel workers")->capture_default_str();

  ServeArgs serve_args;
  auto* serve_cmd = app.add_subcommand("serve", "Run the HTTP service");
  serve_cmd->add_option("--port", serve_args.port, "Port (0 picks one)")->capture_default_str();
  serve_cmd->add_option("--host", serve_args.host, "Bind address")->capture_default_str();
  serve_cmd->add_option("--example-dir", serve_args.example_dir, "Preload these instances");
  serve_cmd->add_option("--deadline", serve_args.deadline, "Seconds per request")->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }

  try {
    if (*solve_cmd) return solve(solve_args);
    if (*facets_cmd) return facets(facets_args);
    if (*sig_cmd) return significance(sig_args);
    if (*gen_cmd) return gen(gen_args);
    if (*bench_cmd) return bench(bench_args);
    if (*serve_cmd) return serve(serve_args);
  } catch (const InputError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kInput;
  } catch (const af::Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kInput;
  } catch (const std::filesystem::filesystem_error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kInput;
  }
  return kUsage;
}
