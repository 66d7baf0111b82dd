// qsd: command-line front end.
//
//   qsd nf        --n 2 "z[1,1]*z[2,1]"
//   qsd act       --n 2 "E[2]" "z[2,2]*z[2,2]"
//   qsd gram      --n 2 --degree 2 [--q 1/2] [--csv]
//   qsd integrate --n 2 "z[2,2]*f0*zs[2,2]" [--q 1/2]
//   qsd verify    --n 3 --suite confluence --max-len 3
//
// Exit codes: 0 success, 1 verification failure, 2 usage or parse error.

#include <cstdint>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "qsd/qsd.hpp"

namespace {

struct Options {
  int n = 2;
  std::string q;
  bool json = false;
  std::uint64_t seed = 20240601;
  int degree = 1;
  int max_degree = -1;
  int max_len = 3;
  bool csv = false;
  std::string suite;
  std::string expr, op;
};

std::optional<qsd::RationalPoint> point(const Options& o) {
  if (o.q.empty()) return std::nullopt;
  return qsd::RationalPoint::parse(o.q);
}

void emit(const Options& o, const std::string& text, const nlohmann::json& j) {
  if (o.json) std::cout << j.dump(2) << "\n";
  else std::cout << text << "\n";
}

int run_nf(const Options& o) {
  qsd::DomainAlgebra A(o.n);
  const qsd::Parsed v = qsd::parse_expression(o.expr, A);
  if (const auto* d = std::get_if<qsd::DElement>(&v)) {
    emit(o, d->str(), {{"n", o.n}, {"sandwiches", d->to_json()}});
    return 0;
  }
  const qsd::Element e = qsd::parse_element(o.expr, A);
  emit(o, e.str(), {{"n", o.n}, {"terms", e.to_json()}});
  return 0;
}

int run_act(const Options& o) {
  qsd::DomainAlgebra A(o.n);
  qsd::HopfAction H(A);
  const qsd::UqExpr xi = qsd::parse_uq(o.op, A);
  const qsd::Parsed v = qsd::parse_expression(o.expr, A);
  if (const auto* d = std::get_if<qsd::DElement>(&v)) {
    qsd::InvariantIntegral I(H);
    const qsd::DElement r = I.act(xi, *d);
    emit(o, r.str(), {{"n", o.n}, {"sandwiches", r.to_json()}});
    return 0;
  }
  const qsd::Element r = H.act(xi, qsd::parse_element(o.expr, A));
  emit(o, r.str(), {{"n", o.n}, {"terms", r.to_json()}});
  return 0;
}

int run_gram(const Options& o) {
  if (o.degree < 0) throw CLI::ValidationError("--degree", "must be >= 0");
  qsd::DomainAlgebra A(o.n);
  qsd::Fock F(A);
  const qsd::GramMatrix g = F.gram(o.degree);
  const auto p = point(o);
  if (o.csv) {
    if (!p) throw CLI::ValidationError("--csv", "requires --q");
    std::cout << g.to_csv(*p);
    return 0;
  }
  nlohmann::json j = g.to_json();
  if (p) {
    auto rows = nlohmann::json::array();
    for (const auto& row : g.evaluate(*p)) {
      auto r = nlohmann::json::array();
      for (const auto& x : row) r.push_back(x.get_str());
      rows.push_back(r);
    }
    j["q"] = p->q().get_str();
    j["evaluated"] = rows;
    j["positive_definite"] = qsd::Fock::check_positive_definite(g, *p);
  }
  if (o.json) {
    std::cout << j.dump(2) << "\n";
    return 0;
  }
  std::cout << "basis:";
  for (const auto& w : g.basis) std::cout << " " << qsd::GramMatrix::label(w);
  std::cout << "\n";
  for (std::size_t r = 0; r < g.size(); ++r) {
    for (std::size_t c = 0; c < g.size(); ++c) std::cout << (c ? "  " : "") << g.entries[r][c].str();
    std::cout << "\n";
  }
  if (p)
    std::cout << "positive definite at q=" << p->q().get_str() << ": "
              << (j["positive_definite"].get<bool>() ? "yes" : "no") << "\n";
  return 0;
}

int run_integrate(const Options& o) {
  qsd::DomainAlgebra A(o.n);
  qsd::HopfAction H(A);
  qsd::InvariantIntegral I(H);
  const qsd::Coefficient v = I.integrate(qsd::parse_delement(o.expr, A));
  nlohmann::json j{{"n", o.n}, {"integral", v.str()}};
  std::string text = v.str();
  if (const auto p = point(o)) {
    const std::string x = v.evaluate(*p).get_str();
    j["q"] = p->q().get_str();
    j["value"] = x;
    text = x;
  }
  emit(o, text, j);
  return 0;
}

std::vector<qsd::RationalPoint> points(const Options& o) {
  if (const auto p = point(o)) return {*p};
  return {qsd::RationalPoint::parse("1/4"), qsd::RationalPoint::parse("1/2"),
          qsd::RationalPoint::parse("3/4")};
}

qsd::Report run_suite(const Options& o) {
  qsd::DomainAlgebra A(o.n);
  qsd::HopfAction H(A);
  const std::string& s = o.suite;
  if (s == "confluence") return A.verify_confluence(o.max_len);
  if (s == "hopf") return H.verify_uqg_relations(o.max_degree < 0 ? 2 : o.max_degree);
  if (s == "module-algebra") return H.verify_module_algebra();
  if (s == "flatness") {
    qsd::Report r("flatness");
    const int top = o.max_degree < 0 ? 5 : o.max_degree;
    const std::uint64_t N = static_cast<std::uint64_t>(o.n) * (o.n + 1) / 2;
    for (int d = 0; d <= top; ++d) {
      mpz_class expect;
      mpz_bin_uiui(expect.get_mpz_t(), N + d - 1, static_cast<unsigned long>(d));
      const std::uint64_t got = A.graded_dimension(d);
      if (mpz_class(std::to_string(got)) == expect) r.pass();
      else r.fail("d=" + std::to_string(d), std::to_string(got), expect.get_str());
    }
    return r;
  }
  if (s == "involution") {
    qsd::Report r("involution");
    qsd::Rng rng(o.seed);
    const int deg = o.max_degree < 0 ? 2 : o.max_degree;
    std::vector<qsd::Element> battery;
    for (int t = 0; t < 50; ++t) battery.push_back(A.normal_form(qsd::random_element(A, rng, deg)));
    for (std::size_t t = 0; t < battery.size(); ++t) {
      const auto& f = battery[t];
      const auto& g = battery[(t + 1) % battery.size()];
      const qsd::Element twice = A.involution(A.involution(f));
      r.check(twice == f, "**f, f=" + f.str(), twice, f);
      const qsd::Element lhs = A.involution(A.multiply(f, g));
      const qsd::Element rhs = A.multiply(A.involution(g), A.involution(f));
      r.check(lhs == rhs, "(fg)*, f=" + f.str() + ", g=" + g.str(), lhs, rhs);
    }
    r.merge(H.verify_star_compatibility(battery));
    return r;
  }
  if (s == "invariance") {
    qsd::InvariantIntegral I(H);
    return I.verify_invariance(qsd::standard_battery(A, o.seed, o.max_degree < 0 ? 2 : o.max_degree));
  }
  if (s == "positivity") {
    qsd::Report r("positivity");
    qsd::Fock F(A);
    qsd::InvariantIntegral I(H);
    const int deg = o.max_degree < 0 ? 3 : o.max_degree;
    for (const auto& p : points(o)) {
      for (int d = 0; d <= deg; ++d) {
        const bool ok = qsd::Fock::check_positive_definite(F.gram(d), p);
        if (ok) r.pass();
        else r.fail("gram degree " + std::to_string(d) + " at q=" + p.q().get_str(), "not positive definite", "positive definite");
      }
      r.merge(I.verify_positivity(qsd::standard_battery(A, o.seed), p));
    }
    return r;
  }
  throw CLI::ValidationError("--suite", "unknown suite '" + s + "'");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact computations in the quantum symmetric domain of type C_n"};
  app.require_subcommand(1);
  app.fallthrough();
  Options o;
  app.add_option("--n", o.n, "rank n >= 2")->check(CLI::Range(2, 12));
  app.add_option("--q", o.q, "rational point in (0,1) at which q is specialized");
  app.add_flag("--json", o.json, "JSON output");
  app.add_option("--seed", o.seed, "seed for random batteries");

  auto* nf = app.add_subcommand("nf", "normal form of an expression");
  nf->add_option("expr", o.expr, "expression")->required();

  auto* act = app.add_subcommand("act", "apply a U_q expression to an element or sandwich");
  act->add_option("xi", o.op, "U_q expression, e.g. \"E[2]F[1]\"")->required();
  act->add_option("expr", o.expr, "expression")->required();

  auto* gram = app.add_subcommand("gram", "Gram matrix of the Fock form in one degree");
  gram->add_option("--degree", o.degree, "degree d >= 0");
  gram->add_flag("--csv", o.csv, "CSV of exact values at --q");

  auto* integ = app.add_subcommand("integrate", "invariant integral of an f0 expression");
  integ->add_option("expr", o.expr, "expression containing f0")->required();

  auto* verify = app.add_subcommand("verify", "run a verification suite");
  verify->add_option("--suite", o.suite, "suite name")
      ->required()
      ->check(CLI::IsMember({"confluence", "hopf", "module-algebra", "involution", "positivity",
                             "invariance", "flatness"}));
  verify->add_option("--max-degree", o.max_degree, "degree bound");
  verify->add_option("--max-len", o.max_len, "word length bound for confluence");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (*nf) return run_nf(o);
    if (*act) return run_act(o);
    if (*gram) return run_gram(o);
    if (*integ) return run_integrate(o);
    if (*verify) {
      const qsd::Report r = run_suite(o);
      std::cout << r.to_json().dump(2) << "\n";
      return r.passed() ? 0 : 1;
    }
  } catch (const CLI::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const qsd::ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return 2;
  } catch (const qsd::IndexError& e) {
    std::cerr << "index error: " << e.what() << "\n";
    return 2;
  } catch (const qsd::TypeError& e) {
    std::cerr << "type error: " << e.what() << "\n";
    return 2;
  } catch (const qsd::DomainError& e) {
    std::cerr << "domain error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
