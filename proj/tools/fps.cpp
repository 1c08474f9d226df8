#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "fps/fps.hpp"
#include "fps/selftest.hpp"

using namespace fps;
using json = io::json;

namespace {

constexpr int kOk = 0;
constexpr int kError = 1;
constexpr int kNegative = 2;

struct RunConfig {
  int trunc = 32;
  int conductor = 24;
  double tol = 1e-9;
  std::string field = "exact";
  std::uint64_t seed = 1;
  std::string output = "json";
};

struct Args {
  std::string command;
  std::string solve_kind;
  std::vector<std::string> inputs;
  int branch = 0;
  bool count_only = false;
  std::vector<std::string> decompose_pair;
  int m = 0;
  int r = -1;
};

std::string load(const std::string& arg) {
  if (arg == "-" || (!arg.empty() && arg[0] == '@')) {
    std::ostringstream ss;
    if (arg == "-") {
      ss << std::cin.rdbuf();
    } else {
      std::ifstream in(arg.substr(1));
      if (!in) throw ParseError("cannot open " + arg.substr(1));
      ss << in.rdbuf();
    }
    return ss.str();
  }
  return arg;
}

template <class Field>
class Command {
 public:
  Command(const Field& f, const RunConfig& cfg, const Args& a) : f_(f), cfg_(cfg), a_(a) {}

  int run(json& out) {
    const auto& c = a_.command;
    if (c == "boettcher") return boettcher_cmd(out);
    if (c == "transition") return transition_cmd(out);
    if (c == "decompose") return decompose_cmd(out);
    if (c == "solve") return solve_cmd(out);
    if (c == "symmetry") return symmetry_cmd(out);
    if (c == "monomialize") return monomialize_cmd(out);
    if (c == "commute") return commute_cmd(out);
    throw InvalidArgument("unknown command " + c);
  }

 private:
  using S = Series<Field>;
  const Field& f_;
  const RunConfig& cfg_;
  const Args& a_;

  S input(std::size_t i) const {
    if (i >= a_.inputs.size())
      throw InvalidArgument(a_.command + " needs " + std::to_string(i + 1) + " series argument(s)");
    return io::read_series(f_, load(a_.inputs[i]), cfg_.trunc);
  }
  void need(std::size_t n) const {
    if (a_.inputs.size() != n)
      throw InvalidArgument(a_.command + (a_.solve_kind.empty() ? "" : " " + a_.solve_kind) +
                            " takes " + std::to_string(n) + " series, got " +
                            std::to_string(a_.inputs.size()));
  }
  json series(const S& s) const {
    if (cfg_.output == "pretty") return io::pretty(s);
    return io::to_json(s);
  }
  json scalar(const typename Field::Scalar& x) const {
    if (cfg_.output == "pretty") return io::scalar_text(x);
    return io::scalar_to_json(f_, x);
  }
  static int negative(json& out, const std::string& reason) {
    out["status"] = "no_solution";
    out["reason"] = reason;
    return kNegative;
  }

  int boettcher_cmd(json& out) {
    need(1);
    auto d = boettcher(input(0), a_.branch);
    out = {{"status", "ok"}, {"n", d.n}, {"branch", d.branch}, {"beta", series(d.beta)},
           {"residual_ok", boettcher_residual_ok(d)}};
    return kOk;
  }

  int transition_cmd(json& out) {
    need(1);
    auto G = transition_group(input(0));
    json el = json::array();
    for (const auto& g : G.elements) el.push_back(series(g));
    out = {{"status", "ok"}, {"order", G.order}, {"generator", series(G.generator)}, {"elements", el}};
    return kOk;
  }

  int decompose_cmd(json& out) {
    need(1);
    auto A = input(0);
    require_gamma(A, "decompose argument");
    if (a_.count_only) {
      out = kalmar_count(A.ord());
      return kOk;
    }
    BoettcherData<Field> D{A, A.ord(), monic_boettcher(A), 0};
    json classes = json::array();
    for (const auto& c : enumerate_classes(D)) {
      json fs = json::array();
      for (const auto& s : c.factors) fs.push_back(series(s));
      classes.push_back(fs);
    }
    out = {{"status", "ok"}, {"count", classes.size()}, {"classes", classes}};
    return kOk;
  }

  json solution(const S& X, const std::optional<S>& Y, bool ok) const {
    json s = {{"X", series(X)}, {"residual_ok", ok}};
    if (Y) s["Y"] = series(*Y);
    return s;
  }

  int solve_cmd(json& out) {
    const auto& k = a_.solve_kind;
    out = {{"status", "ok"}, {"equation", k}};
    json sols = json::array();
    if (k == "right") {
      need(2);
      auto F = input(0), A = input(1);
      auto r = solve_right(F, A);
      if (!r) return negative(out, r.reason());
      sols.push_back(solution(*r, std::nullopt, congruent(compose(*r, A), F)));
      out["kind"] = "unique";
    } else if (k == "left") {
      need(2);
      auto F = input(0), A = input(1);
      auto r = solve_left(F, A);
      if (!r) return negative(out, r.reason());
      for (const auto& X : *r) sols.push_back(solution(X, std::nullopt, congruent(compose(A, X), F)));
      out["kind"] = "finite_list";
    } else if (k == "joint") {
      need(2);
      auto A = input(0), B = input(1);
      auto r = solve_joint(A, B);
      if (!r) return negative(out, r.reason());
      sols.push_back(solution(r->X, r->Y, congruent(compose(r->X, A), compose(r->Y, B))));
      out["kind"] = "unique";
    } else if (k == "factor") {
      need(3);
      auto A = input(0), C = input(1), D = input(2);
      auto r = factor_through(A, C, D);
      if (!r) return negative(out, r.reason());
      sols.push_back(solution(*r, std::nullopt, congruent(compose(A, C), compose(*r, D))));
      out["kind"] = "unique";
    } else {
      throw InvalidArgument("solve needs one of right|left|joint|factor");
    }
    out["solutions"] = sols;
    return kOk;
  }

  int symmetry_cmd(json& out) {
    need(1);
    auto A = input(0);
    require_gamma(A, "symmetry argument");
    auto p = detect_symmetry(A);
    json pairs = json::array();
    for (auto [m, r] : p.pairs) pairs.push_back({{"m", m}, {"r", r}});
    out = {{"status", "ok"}, {"pairs", pairs}, {"maximal_m", p.maximal_m},
           {"monomial", p.monomial}, {"note", "support read mod z^" + std::to_string(A.trunc() + 1)}};
    if (!a_.decompose_pair.empty()) {
      if (a_.decompose_pair.size() != 2) throw InvalidArgument("--decompose takes A1 A2");
      auto A1 = io::read_series(f_, load(a_.decompose_pair[0]), cfg_.trunc);
      auto A2 = io::read_series(f_, load(a_.decompose_pair[1]), cfg_.trunc);
      int m = a_.m > 0 ? a_.m : p.maximal_m;
      if (m < 2) throw NotSymmetric("A has no symmetry m >= 2");
      int r = a_.r >= 0 ? a_.r : A.ord() % m;
      auto d = decompose_symmetric(A, A1, A2, m, r);
      out["decomposition"] = {{"m", m}, {"r", r}, {"mu", series(d.mu)}, {"r1", d.r1},
                              {"R1", series(d.R1)}, {"r2", d.r2}, {"R2", series(d.R2)}};
    }
    return kOk;
  }

  int monomialize_cmd(json& out) {
    std::vector<S> gens;
    if (a_.inputs.size() == 1) {
      auto j = json::parse(load(a_.inputs[0]), nullptr, false);
      if (j.is_array()) {
        for (const auto& s : j) gens.push_back(io::series_from_json(f_, s, cfg_.trunc));
      } else {
        gens.push_back(input(0));
      }
    } else {
      for (std::size_t i = 0; i < a_.inputs.size(); ++i) gens.push_back(input(i));
    }
    if (gens.empty()) throw InvalidArgument("monomialize needs generators");
    auto r = monomialize(gens);
    if (!r) {
      out = {{"status", "not_conjugate"}, {"reason", r.reason()}, {"failed_index", r.index()}};
      return kNegative;
    }
    json imgs = json::array();
    for (const auto& im : r->images) imgs.push_back({{"c", scalar(im.coefficient)}, {"m", im.exponent}});
    out = {{"status", "conjugate"}, {"beta", series(r->beta)}, {"images", imgs}};
    return kOk;
  }

  int commute_cmd(json& out) {
    need(2);
    auto r = commute_check(input(0), input(1));
    out = {{"status", r.commute ? "yes" : "no"}, {"commute", r.commute}, {"check", "both"},
           {"direct", r.direct}, {"criterion", r.criterion}};
    out["c"] = r.c ? scalar(*r.c) : json(nullptr);
    return r.commute ? kOk : kNegative;
  }
};

int selftest_cmd(const RunConfig& cfg, json& out) {
  auto res = selftest(cfg.seed, std::min(cfg.trunc, 24), cfg.conductor);
  json suites = json::array();
  int passed = 0, total = 0;
  for (const auto& s : res) {
    suites.push_back({{"suite", s.name}, {"passed", s.passed}, {"total", s.total}});
    passed += s.passed;
    total += s.total;
  }
  out = {{"status", passed == total ? "ok" : "failures"}, {"seed", cfg.seed}, {"passed", passed},
         {"total", total}, {"suites", suites}};
  return passed == total ? kOk : kError;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Composition of formal power series: Böttcher functions, transition groups, "
               "decompositions and solvers",
               "fps"};
  app.require_subcommand(1);
  app.fallthrough();
  RunConfig cfg;
  Args a;
  app.add_option("--trunc", cfg.trunc, "truncation order N")->check(CLI::Range(4, 256));
  app.add_option("--conductor", cfg.conductor, "conductor L of Q(zeta_L)")->check(CLI::PositiveNumber);
  app.add_option("--tol", cfg.tol, "approximate zero-test tolerance")->check(CLI::PositiveNumber);
  app.add_option("--field", cfg.field, "coefficient backend")->check(CLI::IsMember({"exact", "approx"}));
  app.add_option("--seed", cfg.seed, "seed for selftest");
  app.add_option("--output", cfg.output, "output format")->check(CLI::IsMember({"json", "pretty"}));

  auto series_args = [&](CLI::App* c, const char* what) {
    c->add_option("series", a.inputs, what);
  };
  auto* b = app.add_subcommand("boettcher", "Böttcher function of A");
  series_args(b, "A");
  b->add_option("--branch", a.branch, "branch index in [0, n-2]");
  series_args(app.add_subcommand("transition", "transition group of A"), "A");
  auto* d = app.add_subcommand("decompose", "decomposition classes of A");
  series_args(d, "A");
  d->add_flag("--count-only", a.count_only, "print the number of classes only");
  auto* s = app.add_subcommand("solve", "equation solvers");
  s->require_subcommand(1);
  s->fallthrough();
  for (const char* k : {"right", "left", "joint", "factor"}) {
    auto* sk = s->add_subcommand(k, std::string("solve ") + k);
    series_args(sk, "F A | A B | A C D");
    sk->callback([&a, k] { a.solve_kind = k; });
  }
  auto* y = app.add_subcommand("symmetry", "symmetry profile of A");
  series_args(y, "A");
  y->add_option("--decompose", a.decompose_pair, "A1 A2 with A = A1∘A2")->expected(2);
  y->add_option("--m", a.m, "symmetry modulus for --decompose");
  y->add_option("--r", a.r, "residue for --decompose");
  series_args(app.add_subcommand("monomialize", "conjugate generators to monomials"), "generators");
  series_args(app.add_subcommand("commute", "compositional commutation of A and B"), "A B");
  app.add_subcommand("selftest", "run the property self-test");

  try {
    // a leading blank stops CLI11 from splitting a JSON array
    std::vector<std::string> args;
    for (int i = argc - 1; i > 0; --i)
      args.push_back(argv[i][0] == '[' ? std::string(" ") + argv[i] : std::string(argv[i]));
    app.parse(args);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? kOk : kError;
  }
  a.command = app.get_subcommands().front()->get_name();

  json out;
  int code = kOk;
  try {
    if (a.command == "selftest") {
      code = selftest_cmd(cfg, out);
    } else if (cfg.field == "exact") {
      ExactField f(cfg.conductor);
      code = Command<ExactField>(f, cfg, a).run(out);
    } else {
      ApproxField f(cfg.tol);
      code = Command<ApproxField>(f, cfg, a).run(out);
    }
  } catch (const ConductorTooSmall& e) {
    std::cerr << "error: " << e.what() << " (missing root of unity of order " << e.order()
              << "; raise --conductor or use --field approx)\n";
    return kError;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kError;
  } catch (const json::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kError;
  }
  std::cout << (cfg.output == "pretty" ? out.dump(2) : out.dump()) << "\n";
  return code;
}
