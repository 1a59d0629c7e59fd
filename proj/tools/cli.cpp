#include "cli.hpp"

#include <sstream>

#include <CLI11.hpp>

#include "artin/schur.hpp"

namespace artin::cli {

namespace {

struct Options {
  std::string partition;
  std::string method = "lambda";
  std::string format = "text";
  int n = 0;
  int i = 0;
  std::int64_t qmax = 5;
  std::int64_t emax = 3;
};

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

void emit_class(std::ostream& out, const TorusClass& tc, const std::string& format) {
  if (format == "json")
    out << to_json(tc).dump(2) << '\n';
  else if (format == "latex")
    out << render(tc, Notation::Latex) << '\n';
  else
    out << render(tc) << '\n';
}

std::string marks_line(const SchurElement& x) {
  const auto& idx = mark_matrix(x.n()).index();
  std::ostringstream line;
  for (std::size_t k = 0; k < idx.size(); ++k) line << (k ? ", " : "") << to_string(idx[k]) << ": " << x.marks()[k];
  return line.str();
}

int cmd_class(const Options& o, std::ostream& out) {
  const auto spec = AlgebraSpec::parse(o.partition);
  if (o.method != "all") {
    TorusClass tc = o.method == "rho"         ? class_via_rho(spec)
                    : o.method == "recursion" ? class_via_recursion(spec)
                                              : class_via_lambda(spec);
    emit_class(out, tc, o.format);
    return kExitOk;
  }
  const auto via_lambda = class_via_lambda(spec);
  const auto via_rho = class_via_rho(spec);
  const auto via_recursion = class_via_recursion(spec);
  const bool agree = via_lambda == via_rho && via_lambda == via_recursion;
  if (o.format == "json") {
    auto j = to_json(via_lambda);
    j["methods_agree"] = agree;
    out << j.dump(2) << '\n';
  } else {
    emit_class(out, via_lambda, o.format);
  }
  if (o.format != "json") {
    if (agree) {
      out << "AGREE (lambda, rho, recursion)\n";
    } else {
      out << "DISAGREE\n";
      out << "  lambda:    " << render(via_lambda) << '\n';
      out << "  rho:       " << render(via_rho) << '\n';
      out << "  recursion: " << render(via_recursion) << '\n';
    }
  }
  return agree ? kExitOk : kExitVerificationFailed;
}

void check_degree_args(const Options& o, int min_i) {
  if (o.n < 1 || o.n > schur_degree_bound())
    throw UsageError("--n must lie in 1.." + std::to_string(schur_degree_bound()));
  if (o.i < min_i || o.i > o.n) throw UsageError("--i must lie in " + std::to_string(min_i) + "..n");
}

int cmd_rho(const Options& o, std::ostream& out) {
  check_degree_args(o, 1);
  const auto r = rho(o.n, o.i);
  if (o.format == "json") {
    out << to_json(r).dump(2) << '\n';
  } else {
    out << "rho_" << o.i << "^(" << o.n << ") = " << to_string(r) << '\n';
    out << "marks: " << marks_line(r) << '\n';
  }
  return kExitOk;
}

int cmd_lambda(const Options& o, std::ostream& out) {
  check_degree_args(o, 0);
  const auto l = lambda_top(o.n, o.i);
  const auto expected = o.i == 0 ? SchurElement::one(o.n) : rho(o.n, o.i).scaled(o.i % 2 ? -1 : 1);
  const bool agree = l == expected;
  if (o.format == "json") {
    auto j = to_json(l);
    j["matches_signed_rho"] = agree;
    out << j.dump(2) << '\n';
  } else {
    out << "lambda^" << o.i << "({1.." << o.n << "}) = " << to_string(l) << '\n';
    out << "marks: " << marks_line(l) << '\n';
    out << "(-1)^" << o.i << "·rho_" << o.i << " = lambda^" << o.i << ": " << (agree ? "AGREE" : "DISAGREE") << '\n';
  }
  return agree ? kExitOk : kExitVerificationFailed;
}

int cmd_marks(const Options& o, std::ostream& out) {
  if (o.n < 1 || o.n > schur_degree_bound())
    throw UsageError("--n must lie in 1.." + std::to_string(schur_degree_bound()));
  const auto& m = mark_matrix(o.n);
  const auto& idx = m.index();
  if (o.format == "json") {
    nlohmann::ordered_json j;
    j["n"] = o.n;
    j["index"] = nlohmann::ordered_json::array();
    for (const auto& p : idx) j["index"].push_back(to_string(p));
    j["entries"] = m.entries();
    out << j.dump(2) << '\n';
    return kExitOk;
  }
  std::size_t width = 6;
  for (const auto& p : idx) width = std::max(width, to_string(p).size() + 2);
  for (const auto& row : m.entries())
    for (auto v : row) width = std::max(width, std::to_string(v).size() + 2);
  // Left-aligned columns; the last column is not padded.
  auto cell = [&](const std::string& text, bool last) {
    out << (last ? text : text + std::string(width - text.size(), ' '));
  };
  cell("mu\\cyc", false);
  for (std::size_t la = 0; la < idx.size(); ++la) cell(to_string(idx[la]), la + 1 == idx.size());
  out << '\n';
  for (std::size_t mu = 0; mu < idx.size(); ++mu) {
    cell(to_string(idx[mu]), false);
    for (std::size_t la = 0; la < idx.size(); ++la) cell(std::to_string(m.entry(mu, la)), la + 1 == idx.size());
    out << '\n';
  }
  return kExitOk;
}

int cmd_verify(const Options& o, std::ostream& out) {
  if (o.qmax < 2) throw UsageError("--qmax must be at least 2");
  if (o.emax < 1) throw UsageError("--emax must be at least 1");
  const auto spec = AlgebraSpec::parse(o.partition);
  const auto tc = class_via_lambda(spec);
  if (auto bad = find_point_count_mismatch(tc, spec, o.qmax, o.emax)) {
    out << "MISMATCH partition=" << to_string(spec.parts) << " q=" << bad->q << " e=" << bad->e
        << " expected=" << bad->expected << " got=" << bad->got << '\n';
    return kExitVerificationFailed;
  }
  out << "partition " << to_string(spec.parts) << ": " << render(tc) << '\n';
  for (std::int64_t q = 2; q <= o.qmax; ++q) {
    out << "q=" << q << ':';
    for (std::int64_t e = 1; e <= o.emax; ++e) out << ' ' << count_points(tc, q, e);
    out << '\n';
  }
  out << "all " << (o.qmax - 1) * o.emax << " grid points pass\n";
  return kExitOk;
}

}  // namespace

std::optional<Mismatch> find_point_count_mismatch(const TorusClass& tc, const AlgebraSpec& spec, std::int64_t qmax,
                                                  std::int64_t emax) {
  for (std::int64_t q = 2; q <= qmax; ++q)
    for (std::int64_t e = 1; e <= emax; ++e) {
      BigInt expected = point_count_oracle(spec, q, e);
      BigInt got = count_points(tc, q, e);
      if (expected != got) return Mismatch{q, e, std::move(expected), std::move(got)};
    }
  return std::nullopt;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Classes of tori of units in the Grothendieck ring of varieties over finite fields"};
  app.require_subcommand(1);
  Options o;
  const std::vector<std::string> text_json_latex{"text", "json", "latex"};
  const std::vector<std::string> text_json{"text", "json"};

  auto* cls = app.add_subcommand("class", "Class of L* for L = prod_j F_{q^{n_j}}");
  cls->add_option("--partition", o.partition, "Degrees n_1,...,n_m")->required();
  cls->add_option("--method", o.method, "lambda | rho | recursion | all")
      ->check(CLI::IsMember({"lambda", "rho", "recursion", "all"}));
  cls->add_option("--format", o.format, "text | json | latex")->check(CLI::IsMember(text_json_latex));

  auto* lam = app.add_subcommand("lambda", "lambda^i of the natural S_n-set in the Schur subring");
  lam->add_option("--n", o.n)->required();
  lam->add_option("--i", o.i)->required();
  lam->add_option("--format", o.format)->check(CLI::IsMember(text_json));

  auto* rh = app.add_subcommand("rho", "Universal coefficient element rho_i^(n)");
  rh->add_option("--n", o.n)->required();
  rh->add_option("--i", o.i)->required();
  rh->add_option("--format", o.format)->check(CLI::IsMember(text_json));

  auto* mk = app.add_subcommand("marks", "Mark matrix of the Schur subring");
  mk->add_option("--n", o.n)->required();
  mk->add_option("--format", o.format)->check(CLI::IsMember(text_json));

  auto* ver = app.add_subcommand("verify", "Compare point counts with the direct count");
  ver->add_option("--partition", o.partition)->required();
  ver->add_option("--qmax", o.qmax, "Largest q (all integers from 2)");
  ver->add_option("--emax", o.emax, "Largest extension degree e");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (cls->parsed()) return cmd_class(o, out);
    if (lam->parsed()) return cmd_lambda(o, out);
    if (rh->parsed()) return cmd_rho(o, out);
    if (mk->parsed()) return cmd_marks(o, out);
    return cmd_verify(o, out);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::out_of_range& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::length_error& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
}

}  // namespace artin::cli
