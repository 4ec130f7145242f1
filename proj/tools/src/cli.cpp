#include "bispec_cli/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <atomic>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <thread>

#include "bispec/golden.hpp"

#ifndef BISPEC_VERSION
#define BISPEC_VERSION "unknown"
#endif

namespace bispec::cli {

namespace fs = std::filesystem;

int exit_code(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::kShape:
    case ErrorKind::kCertification:
      return kCertificationFailure;
    case ErrorKind::kVerification:
    case ErrorKind::kTruncationInsufficient:
      return kVerificationFailure;
    default:
      return kInvalidInput;
  }
}

std::string version() { return BISPEC_VERSION; }

json transcript(const std::string& command, json params, json result) {
  return json{{"tool", "bispec"},
              {"version", version()},
              {"command", command},
              {"params", std::move(params)},
              {"result", std::move(result)}};
}

std::vector<std::string> json_differences(const json& expected, const json& actual) {
  std::vector<std::string> out;
  for (const auto& op : json::diff(expected, actual)) out.push_back(op.value("path", std::string("/")));
  return out;
}

namespace {

struct Options {
  int depth = 0;
  int degree_bound = 0;
  int jobs = 1;
  std::string out;
  bool as_json = false;
};

struct JobResult {
  json doc;
  std::string text;
  int code = kOk;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail(ErrorKind::kUsage, "cannot read '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::vector<Rational> parse_list(const std::string& text) {
  std::vector<Rational> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) out.push_back(Rational::parse(item));
  if (out.empty()) fail(ErrorKind::kUsage, "empty list '" + text + "'");
  return out;
}

// "1,0;0,1" -> {{1,0},{0,1}}.
std::vector<std::vector<Rational>> parse_rows(const std::string& text) {
  std::vector<std::vector<Rational>> rows;
  std::stringstream ss(text);
  std::string row;
  while (std::getline(ss, row, ';')) rows.push_back(parse_list(row));
  return rows;
}

// Accepts a bare certificate, a build/pair result, or a full transcript.
DarbouxCertificate load_certificate(json doc) {
  if (doc.is_object() && doc.contains("result")) doc = doc.at("result");
  if (doc.is_object() && doc.contains("pair")) doc = doc.at("pair");
  if (doc.is_object() && doc.contains("certificate")) doc = doc.at("certificate");
  return doc.get<DarbouxCertificate>();
}

// Re-runs every certificate check; the stored witness block is not trusted.
DarbouxCertificate recertify(const DarbouxCertificate& in, int depth) {
  auto cert = certify(in.beta, in.P, in.Q, in.f, in.g, std::nullopt, depth > 0 ? depth : in.depth);
  if (!in.h.is_zero() && !(in.h == cert.h))
    fail(ErrorKind::kCertification, "recorded h does not equal f g");
  return cert;
}

JobResult failure(const Error& e, int code) {
  JobResult r;
  r.code = code;
  r.doc = json{{"error", {{"kind", to_string(e.kind())}, {"message", e.what()}}}};
  r.text = std::string("error (") + to_string(e.kind()) + "): " + e.what() + "\n";
  return r;
}

// Runs fn over inputs with up to `jobs` threads; results keep input order.
template <class Fn>
std::vector<JobResult> fan_out(const std::vector<std::string>& inputs, int jobs, Fn fn) {
  std::vector<JobResult> results(inputs.size());
  auto one = [&](std::size_t i) {
    try {
      results[i] = fn(inputs[i]);
    } catch (const Error& e) {
      results[i] = failure(e, exit_code(e.kind()));
    } catch (const json::exception& e) {
      results[i] = failure(Error(ErrorKind::kUsage, e.what()), kInvalidInput);
    }
  };
  const std::size_t workers = std::min<std::size_t>(static_cast<std::size_t>(std::max(jobs, 1)), inputs.size());
  if (workers <= 1) {
    for (std::size_t i = 0; i < inputs.size(); ++i) one(i);
    return results;
  }
  std::atomic<std::size_t> next{0};
  std::vector<std::thread> pool;
  for (std::size_t w = 0; w < workers; ++w)
    pool.emplace_back([&] {
      for (std::size_t i = next++; i < inputs.size(); i = next++) one(i);
    });
  for (auto& t : pool) t.join();
  return results;
}

void write_file(const std::string& path, const json& doc) {
  std::ofstream f(path);
  if (!f) fail(ErrorKind::kUsage, "cannot write '" + path + "'");
  f << doc.dump(2) << "\n";
}

int emit(const std::string& command, const std::vector<std::string>& inputs,
         const std::vector<JobResult>& results, const Options& o, std::ostream& out, std::ostream& err) {
  int code = kOk;
  for (std::size_t i = 0; i < results.size(); ++i) {
    const auto& r = results[i];
    code = std::max(code, r.code);
    if (results.size() > 1 && !o.as_json) out << "== " << inputs[i] << "\n";
    if (r.doc.contains("error")) {
      err << command << ": " << (inputs.empty() ? std::string() : inputs[i] + ": ") << r.text;
    } else if (!o.as_json) {
      out << r.text;
    }
  }
  if (o.as_json) {
    if (results.size() == 1) {
      out << results[0].doc.dump(2) << "\n";
    } else {
      json all = json::array();
      for (const auto& r : results) all.push_back(r.doc);
      out << all.dump(2) << "\n";
    }
  }
  if (!o.out.empty()) {
    if (results.size() == 1) {
      write_file(o.out, results[0].doc);
    } else {
      fs::create_directories(o.out);
      for (std::size_t i = 0; i < results.size(); ++i)
        write_file((fs::path(o.out) / (fs::path(inputs[i]).stem().string() + "." + command + ".json")).string(),
                   results[i].doc);
    }
  }
  return code;
}

std::string render_cert(const DarbouxCertificate& c) {
  std::ostringstream os;
  os << "beta = " << c.beta.str() << "\n";
  os << "P    = " << c.P.in(Form::kDel).str() << "\n";
  os << "Q    = " << c.Q.in(Form::kDel).str() << "\n";
  os << "g(z) = " << c.g.str("z") << "\n";
  os << "f(z) = " << c.f.str("z") << "\n";
  os << "h(w) = " << c.h.str("w") << "   (w = z^" << c.beta.N << ")\n";
  os << "certified at depth " << c.depth << "\n";
  return os.str();
}

std::string render_report(const SpectralAlgebraReport& r) {
  std::ostringstream os;
  auto list = [&](const std::vector<int>& v) {
    if (v.empty()) os << " none";
    for (int d : v) os << " " << d;
    os << "\n";
  };
  os << "degree bound " << r.degree_bound << "\n";
  os << "degrees:";
  list(r.degrees);
  os << "generators:";
  list(r.generators);
  os << "rank " << r.rank << "\n";
  os << "degrees off the lattice N Z:";
  list(r.non_lattice);
  os << (r.generic ? "generic up to the bound\n" : "not generic\n");
  return os.str();
}

JobResult cmd_bessel(const std::string& beta_text, int depth) {
  auto beta = BesselIndex::make(parse_list(beta_text));
  if (depth < 0) fail(ErrorKind::kUsage, "depth must be nonnegative");
  auto a = wave_coeffs(beta, depth);
  JobResult r;
  r.doc = transcript("bessel", json{{"depth", depth}},
                     json{{"beta", beta},
                          {"L", bessel_op(beta)},
                          {"P_beta", index_polynomial(beta.beta)},
                          {"wave_coeffs", a}});
  std::ostringstream os;
  os << "beta      = " << beta.str() << "\n";
  os << "L_beta    = " << bessel_op(beta).in(Form::kDel).str() << "\n";
  os << "P_beta(D) = " << index_polynomial(beta.beta).str("D") << "\n";
  for (std::size_t k = 1; k < a.size(); ++k) os << "a_" << k << " = " << a[k] << "\n";
  r.text = os.str();
  return r;
}

JobResult cmd_build(const std::string& path, const Options& o) {
  auto spec = parse_json(read_file(path)).get<KernelSpec>();
  BuildOptions opts;
  opts.depth = o.depth;
  if (o.degree_bound > 0) opts.max_degree_bound = o.degree_bound;
  auto res = build(spec, opts);
  JobResult r;
  json params{{"depth", res.certificate.depth}, {"degree_bound", res.stats.degree_bound},
              {"max_degree_bound", opts.max_degree_bound}};
  r.doc = transcript("build", params,
                     json{{"spec", spec}, {"certificate", res.certificate}, {"stats", res.stats}});
  r.text = render_cert(res.certificate);
  return r;
}

// Certification errors on an input certificate count as verification failures.
template <class Fn>
auto on_certificate(const std::string& path, const Options& o, Fn fn) {
  auto in = load_certificate(parse_json(read_file(path)));
  DarbouxCertificate cert;
  try {
    cert = recertify(in, o.depth);
  } catch (const Error& e) {
    if (e.kind() != ErrorKind::kCertification && e.kind() != ErrorKind::kShape) throw;
    return failure(Error(ErrorKind::kVerification, std::string("certificate rejected: ") + e.what()),
                   kVerificationFailure);
  }
  return fn(cert);
}

std::string render_pair(const BispectralPair& p) {
  std::ostringstream os;
  os << "L      = " << p.L.in(Form::kDel).str() << "\n";
  os << "Lambda = " << p.Lambda.in(Form::kDel).str() << "\n";
  os << "h(w)   = " << p.h.str("w") << "   (w = z^" << p.cert.beta.N << ")\n";
  os << "Theta  = " << p.Theta.str("w") << "   (w = x^" << p.cert.beta.N << ")\n";
  os << "Pb     = " << p.Pb.op.in(Form::kDel).str() << "\n";
  os << "gb(z)  = " << p.Pb.poly.str("z") << "\n";
  os << "Qb     = " << p.Qb.op.in(Form::kDel).str() << "\n";
  os << "fb(z)  = " << p.Qb.poly.str("z") << "\n";
  return os.str();
}

JobResult cmd_pair(const std::string& path, const Options& o, int verify_depth) {
  return on_certificate(path, o, [&](const DarbouxCertificate& cert) {
    auto pair = make_pair(cert);
    JobResult r;
    json result{{"pair", pair}};
    r.text = render_pair(pair);
    if (verify_depth >= 0) {
      auto rep = verify_pair(pair, verify_depth);
      result["verify"] = rep;
      r.text += "series residuals vanish to depth " + std::to_string(rep.depth) + " (" +
                std::to_string(rep.coefficients_checked) + " coefficients)\n";
    }
    r.doc = transcript("pair", json{{"depth", cert.depth}, {"verify_depth", verify_depth}}, result);
    return r;
  });
}

JobResult cmd_involute(const std::string& path, const Options& o) {
  return on_certificate(path, o, [&](const DarbouxCertificate& cert) {
    auto pb = involute_P(cert.P, cert.g, cert.beta);
    auto qb = involute_Q(cert.Q, cert.f, cert.beta);
    JobResult r;
    r.doc = transcript("involute", json{{"depth", cert.depth}}, json{{"Pb", pb}, {"Qb", qb}});
    std::ostringstream os;
    os << "Pb    = " << pb.op.in(Form::kDel).str() << "\n";
    os << "gb(z) = " << pb.poly.str("z") << "\n";
    os << "Qb    = " << qb.op.in(Form::kDel).str() << "\n";
    os << "fb(z) = " << qb.poly.str("z") << "\n";
    if (pb.stripped) os << "removed " << pb.stripped << " common factor(s) L_beta\n";
    r.text = os.str();
    return r;
  });
}

JobResult cmd_verify(const std::string& path, const Options& o) {
  return on_certificate(path, o, [&](const DarbouxCertificate& cert) {
    auto pair = make_pair(cert);
    auto rep = verify_pair(pair, o.depth);
    JobResult r;
    r.doc = transcript("verify", json{{"depth", rep.depth}}, json{{"verify", rep}});
    r.text = "verified: series residuals vanish to depth " + std::to_string(rep.depth) + " (" +
             std::to_string(rep.coefficients_checked) + " coefficients)\n";
    return r;
  });
}

JobResult cmd_rank(const std::string& path, const std::string& beta_text, const Options& o) {
  DarbouxCertificate cert;
  if (!path.empty()) {
    cert = recertify(load_certificate(parse_json(read_file(path))), o.depth);
  } else if (!beta_text.empty()) {
    cert.beta = BesselIndex::make(parse_list(beta_text));
    cert.P = DiffOp::identity(Form::kEuler);
  } else {
    fail(ErrorKind::kUsage, "rank needs a certificate file or --beta");
  }
  const int bound = o.degree_bound > 0 ? o.degree_bound : 4 * cert.beta.N;
  auto rep = spectral_algebra(cert.P, cert.beta, bound);
  JobResult r;
  r.doc = transcript("rank", json{{"degree_bound", bound}}, json{{"beta", cert.beta}, {"spectral", rep}});
  r.text = render_report(rep);
  return r;
}

JobResult cmd_betaprime(const std::string& path) {
  auto spec = validate_spec(parse_json(read_file(path)).get<KernelSpec>());
  if (!spec.monomial())
    fail(ErrorKind::kUnsupportedInput, "betaprime needs a kernel supported at zero");
  auto bp = beta_prime(spec.spec.beta, spec.zero_elements);
  JobResult r;
  r.doc = transcript("betaprime", json::object(), json{{"beta", spec.spec.beta}, {"beta_prime", bp}});
  std::ostringstream os;
  os << "beta  = " << spec.spec.beta.str() << "\n";
  os << "beta' = (";
  for (std::size_t i = 0; i < bp.beta_prime.size(); ++i) os << (i ? ", " : "") << bp.beta_prime[i];
  os << ")\n";
  os << "n_s   =";
  for (int c : bp.counts) os << " " << c;
  os << "\n";
  if (bp.ambiguous) os << "note: another choice of class representative is admissible\n";
  r.text = os.str();
  return r;
}

JobResult cmd_examples(const std::string& name, const std::string& nu, const std::string& a,
                       const std::string& lambda, const std::string& beta_text, int d,
                       const std::string& t_text, const Options& o) {
  ExampleRun run;
  bool defaults = true;
  if (name == "rank1") {
    run = run_rank1(o.depth);
  } else if (name == "example4") {
    defaults = nu == "1/3" && a == "1" && lambda == "1";
    run = run_example4(Rational::parse(nu), Rational::parse(a), Rational::parse(lambda), o.depth);
  } else {
    BesselIndex beta = beta_text.empty() ? BesselIndex::make({Rational(-3, 2), Rational(5, 2)})
                                         : BesselIndex::make(parse_list(beta_text));
    std::vector<std::vector<Rational>> t;
    if (t_text.empty()) {
      for (int k = 0; k < beta.N; ++k) {
        std::vector<Rational> row(static_cast<std::size_t>(d));
        row[static_cast<std::size_t>(std::min(k, d - 1))] = Rational(1);
        t.push_back(row);
      }
    } else {
      t = parse_rows(t_text);
    }
    defaults = beta_text.empty() && t_text.empty() && d == 2;
    run = run_dg_even(beta, d, t, o.depth, o.degree_bound);
  }
  JobResult r;
  r.text = run.text;
  bool all = true;
  json checks = json::object();
  for (const auto& [k, ok] : run.checks) {
    checks[k] = ok;
    all = all && ok;
  }
  json result{{"example", name}, {"result", run.result}, {"checks", checks}};
  if (defaults && o.depth <= 0 && o.degree_bound <= 0) {
    json expected = parse_json(std::string(golden(name)));
    auto diffs = json_differences(expected, run.result);
    result["golden"] = json{{"match", diffs.empty()}, {"differences", diffs}};
    if (diffs.empty()) {
      r.text += "  [ok]   matches stored golden output\n";
    } else {
      all = false;
      r.text += "  [FAIL] differs from stored golden output at " + std::to_string(diffs.size()) +
                " path(s), first " + diffs.front() + "\n";
    }
  }
  r.doc = transcript("examples", json{{"depth", o.depth}, {"degree_bound", o.degree_bound}}, result);
  if (!all) r.code = kCertificationFailure;
  return r;
}

void common(CLI::App* sub, Options& o, bool bound = true) {
  sub->add_option("-K,--depth", o.depth, "series truncation depth (0 = automatic)")->check(CLI::NonNegativeNumber);
  if (bound) sub->add_option("--degree-bound", o.degree_bound, "degree bound (0 = default)")->check(CLI::NonNegativeNumber);
  sub->add_option("--out", o.out, "write the JSON document here (a directory for several inputs)");
  sub->add_flag("--json", o.as_json, "print JSON instead of text");
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Bispectral Darboux transformations of Bessel operators", "bispec"};
  app.set_version_flag("--version", version());
  app.require_subcommand(1);
  Options o;
  std::vector<std::string> inputs;
  std::string beta_text, nu = "1/3", a = "1", lambda = "1", t_text, name;
  int verify_depth = -1, d = 2, N = 0;

  auto* bessel = app.add_subcommand("bessel", "Bessel operator L_beta and wave coefficients");
  bessel->add_option("--beta", beta_text, "comma-separated rationals")->required();
  bessel->add_option("-K,--depth", o.depth, "number of wave coefficients")->check(CLI::NonNegativeNumber);
  bessel->add_option("--out", o.out);
  bessel->add_flag("--json", o.as_json);

  auto* buildc = app.add_subcommand("build", "build and certify P, Q, f, g from kernel specs");
  buildc->add_option("specs", inputs, "kernel spec JSON files")->required()->check(CLI::ExistingFile);
  buildc->add_option("--jobs", o.jobs, "parallel jobs")->check(CLI::PositiveNumber);
  common(buildc, o);

  auto* pairc = app.add_subcommand("pair", "bispectral pair from a certificate");
  pairc->add_option("certs", inputs)->required()->check(CLI::ExistingFile);
  pairc->add_option("--verify", verify_depth, "also check series residuals to this depth")
      ->check(CLI::NonNegativeNumber);
  pairc->add_option("--jobs", o.jobs)->check(CLI::PositiveNumber);
  common(pairc, o, false);

  auto* inv = app.add_subcommand("involute", "bispectral involution of (P, g) and (Q, f)");
  inv->add_option("certs", inputs)->required()->check(CLI::ExistingFile);
  inv->add_option("--jobs", o.jobs)->check(CLI::PositiveNumber);
  common(inv, o, false);

  auto* ver = app.add_subcommand("verify", "series check of the bispectral identities");
  ver->add_option("certs", inputs)->required()->check(CLI::ExistingFile);
  ver->add_option("--jobs", o.jobs)->check(CLI::PositiveNumber);
  common(ver, o, false);

  auto* rank = app.add_subcommand("rank", "spectral algebra degrees and rank");
  rank->add_option("cert", inputs)->check(CLI::ExistingFile)->expected(0, 1);
  rank->add_option("--beta", beta_text, "plain Bessel plane instead of a certificate");
  common(rank, o);

  auto* bp = app.add_subcommand("betaprime", "beta' for a kernel supported at zero");
  bp->add_option("spec", inputs)->required()->check(CLI::ExistingFile)->expected(1);
  bp->add_option("--out", o.out);
  bp->add_flag("--json", o.as_json);

  auto* ex = app.add_subcommand("examples", "reproduce a stored example");
  ex->add_option("name", name)->required()->check(CLI::IsMember({"rank1", "dg-even", "example4"}));
  ex->add_option("--nu", nu);
  ex->add_option("--a", a);
  ex->add_option("--lambda", lambda);
  ex->add_option("--N", N, "dg-even: N (must match --beta if given)");
  ex->add_option("--beta", beta_text, "dg-even: exponents, all congruent mod N");
  ex->add_option("-d", d, "dg-even: d")->check(CLI::PositiveNumber);
  ex->add_option("--t", t_text, "dg-even: t-sequences, rows separated by ';'");
  common(ex, o);

  std::vector<std::string> argv_rev(args.rbegin(), args.rend());
  try {
    app.parse(argv_rev);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? kOk : kInvalidInput;
  }

  try {
    std::vector<JobResult> results;
    std::string cmd = app.get_subcommands().front()->get_name();
    if (cmd == "bessel") {
      results.push_back(cmd_bessel(beta_text, o.depth));
    } else if (cmd == "build") {
      results = fan_out(inputs, o.jobs, [&](const std::string& p) { return cmd_build(p, o); });
    } else if (cmd == "pair") {
      results = fan_out(inputs, o.jobs, [&](const std::string& p) { return cmd_pair(p, o, verify_depth); });
    } else if (cmd == "involute") {
      results = fan_out(inputs, o.jobs, [&](const std::string& p) { return cmd_involute(p, o); });
    } else if (cmd == "verify") {
      results = fan_out(inputs, o.jobs, [&](const std::string& p) { return cmd_verify(p, o); });
    } else if (cmd == "rank") {
      results.push_back(cmd_rank(inputs.empty() ? std::string() : inputs[0], beta_text, o));
    } else if (cmd == "betaprime") {
      results.push_back(cmd_betaprime(inputs[0]));
    } else {
      if (N > 0 && !beta_text.empty() && static_cast<int>(parse_list(beta_text).size()) != N)
        fail(ErrorKind::kUsage, "--N does not match --beta");
      if (N > 0 && N != 2 && beta_text.empty())
        fail(ErrorKind::kUsage, "dg-even with N != 2 needs --beta");
      results.push_back(cmd_examples(name, nu, a, lambda, beta_text, d, t_text, o));
    }
    if (cmd == "bessel" || cmd == "rank" || cmd == "betaprime" || cmd == "examples") inputs.clear();
    return emit(cmd, inputs, results, o, out, err);
  } catch (const Error& e) {
    err << "error (" << to_string(e.kind()) << "): " << e.what() << "\n";
    return exit_code(e.kind());
  } catch (const json::exception& e) {
    err << "error (invalid JSON input): " << e.what() << "\n";
    return kInvalidInput;
  }
}

}  // namespace bispec::cli
