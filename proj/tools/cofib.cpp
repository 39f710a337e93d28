#include <filesystem>
#include <iomanip>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "cofib/analyze.hpp"
#include "cofib/enumerate.hpp"
#include "cofib/io.hpp"
#include "cofib/serialize.hpp"
#include "cofib/suite.hpp"

using namespace cofib;

namespace {

constexpr int exit_ok = 0;
constexpr int exit_failed = 1;
constexpr int exit_input = 2;

bool input_error(errc e) {
  switch (e) {
    case errc::parse_error:
    case errc::cycle:
    case errc::unknown_label:
    case errc::not_a_poset:
    case errc::invalid_argument: return true;
    default: return false;
  }
}

poset_file load_poset(const std::string& path) { return parse_poset_file(read_text(path)); }

std::string route_name(const witness_report& r) {
  return r.theorem + "(" + (r.construction.empty() ? r.route : r.construction) + ")";
}

struct outcome {
  bool ok = true;
  std::string first_failure;
};

void note(outcome& o, const verification_report& rep) {
  if (rep.ok()) return;
  o.ok = false;
  if (o.first_failure.empty()) {
    const auto* f = rep.first_failure();
    o.first_failure = f->path + " " + f->rule + ": " + f->condition;
  }
}

// Checks the minimum certificates of `object`; labels come from `names`.
outcome check_minima(std::ostream& out, const poset_ptr& object, const std::map<std::size_t, cert_ptr>& minima,
                     const std::function<std::string(std::size_t)>& names, bool strict) {
  outcome o;
  auto mins = object->minimal_elements();
  std::size_t good = 0;
  std::vector<std::string> lines;
  for (auto m : mins) {
    auto it = minima.find(m);
    if (it == minima.end()) {
      o.ok = false;
      if (o.first_failure.empty()) o.first_failure = "minimum " + names(m) + " has no certificate";
      lines.push_back("  minimum " + names(m) + ": MISSING");
      continue;
    }
    auto rep = verify(it->second);
    const auto& c = it->second->conclusion;
    const bool lands = c.source->size() == 1 && same_poset(c.target, object) && c(0) == m;
    note(o, rep);
    if (rep.ok() && !lands) {
      o.ok = false;
      if (o.first_failure.empty()) o.first_failure = "minimum " + names(m) + ": certificate does not include that minimum";
    }
    const bool pass = rep.ok() && lands;
    good += pass;
    lines.push_back("  minimum " + names(m) + ": " + std::string(pass ? verdict_name(rep.result(strict)) : "FAILED"));
  }
  for (const auto& [m, c] : minima) {
    if (m >= object->size() || !object->is_minimal(m)) {
      o.ok = false;
      if (o.first_failure.empty()) o.first_failure = "certificate for " + std::to_string(m) + ", which is not a minimum";
    }
  }
  out << "minima: " << good << "/" << mins.size() << " " << (good == mins.size() ? "VERIFIED" : "FAILED") << '\n';
  for (const auto& l : lines) out << l << '\n';
  return o;
}

int cmd_analyze(const std::string& path, const std::string& emit, bool strict) {
  poset_file pf;
  try {
    pf = load_poset(path);
  } catch (const error& e) {
    std::cerr << e.what() << '\n';
    return exit_input;
  }
  const auto& p = pf.order;
  std::cout << "poset: " << pf.name << " (" << p->size() << " elements)\n";
  std::cout << "classification: " << classify(*p).joined() << '\n';
  witness_report r;
  try {
    r = witness(p);
  } catch (const error& e) {
    std::cout << "route: none\n" << e.what() << '\n';
    return exit_failed;
  }
  std::cout << "route: " << route_name(r) << '\n';
  auto rep = verify_cofibrant(r.certificate);
  outcome o;
  note(o, rep);
  std::cout << "cofibrant: " << verdict_name(rep.result(strict)) << '\n';
  auto mo = check_minima(std::cout, p, r.minimum_certificates, [&](std::size_t x) { return p->label(x); }, strict);
  if (!mo.ok) {
    o.ok = false;
    if (o.first_failure.empty()) o.first_failure = mo.first_failure;
  }
  for (const auto& q : r.queries)
    std::cout << "retraction search: ambient " << q.ambient->size() << ", subobject " << q.subobject.source->size() << '\n';
  if (!o.ok) std::cout << "first failure: " << o.first_failure << '\n';
  if (!emit.empty()) {
    auto lab = canonical_labeling(*p);
    auto canon = relabel(*p, lab.perm);
    auto moved = transport(r, monotone_map{p, canon, lab.perm});
    certificate_file f;
    f.object = canon;
    f.cofibrant = moved.certificate;
    f.minima = moved.minimum_certificates;
    try {
      write_text(emit, serialize(f));
    } catch (const error& e) {
      std::cerr << e.what() << '\n';
      return exit_input;
    }
    std::cout << "certificate written to " << emit << '\n';
  }
  return o.ok ? exit_ok : exit_failed;
}

int cmd_verify(const std::string& cert_path, const std::string& poset_path, bool strict) {
  poset_file pf;
  certificate_file cf;
  try {
    pf = load_poset(poset_path);
    cf = deserialize_file(read_text(cert_path));
  } catch (const error& e) {
    std::cerr << e.what() << '\n';
    return exit_input;
  }
  if (!cf.object) {
    std::cout << "ObjectMismatch: certificate file names no object\n";
    return exit_failed;
  }
  auto iso = canonical(*cf.object) == canonical(*pf.order) ? find_isomorphism(cf.object, pf.order) : std::nullopt;
  if (!iso) {
    std::cout << "ObjectMismatch: certificate object (" << cf.object->size() << " elements) is not isomorphic to "
              << pf.name << " (" << pf.order->size() << " elements)\n";
    return exit_failed;
  }
  std::cout << "poset: " << pf.name << " (" << pf.order->size() << " elements)\n";
  outcome o;
  if (cf.cofibrant) {
    auto rep = verify_cofibrant(*cf.cofibrant);
    note(o, rep);
    std::cout << "cofibrant: " << verdict_name(rep.result(strict)) << " (" << rep.checks.size() << " conditions)\n";
  } else {
    o.ok = false;
    o.first_failure = "no cofibrant entry";
    std::cout << "cofibrant: MISSING\n";
  }
  auto mo = check_minima(std::cout, cf.object, cf.minima,
                         [&](std::size_t x) { return pf.order->label((*iso)(x)); }, strict);
  if (!mo.ok) {
    o.ok = false;
    if (o.first_failure.empty()) o.first_failure = mo.first_failure;
  }
  for (std::size_t k = 0; k < cf.certificates.size(); ++k) {
    auto rep = verify(cf.certificates[k]);
    note(o, rep);
    std::cout << "certificate " << k << ": " << verdict_name(rep.result(strict)) << '\n';
  }
  if (!o.ok) std::cout << "first failure: " << o.first_failure << '\n';
  return o.ok ? exit_ok : exit_failed;
}

int cmd_enumerate(int n, const std::string& dump) {
  if (n < 1 || n > static_cast<int>(enumerate_limit)) {
    std::cerr << "SizeLimit: n must be between 1 and " << enumerate_limit << '\n';
    return exit_input;
  }
  const char* heads[] = {"n", "total", "connected", "join", "meet", "semilattice", "chains", "zigzags", "trees", "glued"};
  for (auto h : heads) std::cout << std::setw(12) << h;
  std::cout << '\n';
  for (const auto& row : counts_table(static_cast<std::size_t>(n))) {
    for (auto v : {row.n, row.total, row.connected, row.join, row.meet, row.semilattice, row.chains, row.zigzags,
                   row.trees, row.glued})
      std::cout << std::setw(12) << v;
    std::cout << '\n';
  }
  if (!dump.empty()) {
    std::error_code ec;
    std::filesystem::create_directories(dump, ec);
    if (ec) {
      std::cerr << "cannot create " << dump << ": " << ec.message() << '\n';
      return exit_input;
    }
    auto entries = enumerate(static_cast<std::size_t>(n));
    for (std::size_t k = 0; k < entries.size(); ++k) {
      std::ostringstream name;
      name << "n" << n << "_" << std::setw(3) << std::setfill('0') << k;
      write_text((std::filesystem::path(dump) / (name.str() + ".poset")).string(),
                 "# " + entries[k].tags.joined() + "\n" + write_poset_file(name.str(), *entries[k].representative));
    }
    std::cout << entries.size() << " poset files written to " << dump << '\n';
  }
  return exit_ok;
}

int cmd_paper_suite(const suite_options& opts) {
  suite_detail::context ctx;
  ctx.options = opts;
  auto cs = run_criteria(ctx);
  print_criteria(std::cout, cs);
  std::cout << '\n';
  auto rows = traceability(ctx);
  print_matrix(std::cout, rows);
  bool ok = std::all_of(cs.begin(), cs.end(), [](const auto& c) { return c.pass; }) &&
            std::none_of(rows.begin(), rows.end(), [](const auto& r) { return r.status == verdict::failed; });
  std::cout << '\n' << (ok ? "all criteria pass" : "some criteria fail") << '\n';
  return ok ? exit_ok : exit_failed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Certified cofibrancy of finite posets"};
  app.require_subcommand(1);
  bool strict = false;

  std::string poset_path, emit;
  auto* analyze = app.add_subcommand("analyze", "classify a poset, build and verify its certificates");
  analyze->add_option("file", poset_path, "poset file")->required();
  analyze->add_option("--emit", emit, "write the certificates to this path");
  analyze->add_flag("--strict-axioms", strict, "report single-subdivision leaves as CONDITIONAL");

  std::string cert_path, against;
  auto* verify_cmd = app.add_subcommand("verify", "re-verify a certificate file against a poset file");
  verify_cmd->add_option("certificate", cert_path, "certificate file")->required();
  verify_cmd->add_option("poset", against, "poset file")->required();
  verify_cmd->add_flag("--strict-axioms", strict, "report single-subdivision leaves as CONDITIONAL");

  int n = 0;
  std::string dump;
  auto* enumerate_cmd = app.add_subcommand("enumerate", "count posets up to isomorphism");
  enumerate_cmd->add_option("n", n, "largest size, 1 to 6")->required();
  enumerate_cmd->add_option("--dump", dump, "write one poset file per class of size n");

  suite_options opts;
  auto* suite = app.add_subcommand("paper-suite", "run every acceptance criterion and the traceability matrix");
  suite->add_flag("--strict-axioms", opts.strict_axioms, "report single-subdivision leaves as CONDITIONAL");
  suite->add_option("--seed", opts.seed, "seed for the randomized properties");
  suite->add_flag("--timings", opts.timings, "print wall-clock times");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return exit_input;
  }

  try {
    if (*analyze) return cmd_analyze(poset_path, emit, strict);
    if (*verify_cmd) return cmd_verify(cert_path, against, strict);
    if (*enumerate_cmd) return cmd_enumerate(n, dump);
    if (*suite) return cmd_paper_suite(opts);
  } catch (const error& e) {
    std::cerr << e.what() << '\n';
    return input_error(e.code()) ? exit_input : exit_failed;
  }
  return exit_input;
}
