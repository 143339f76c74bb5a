// framedhom: command-line front end. Output is JSON on stdout; errors go to
// stderr. Exit codes: 0 success, 1 property failure or no lift, 2 invalid
// input, 3 inputs that do not fit together.

#include <framedhom/basis_moves.hpp>
#include <framedhom/kernel.hpp>
#include <framedhom/serialize.hpp>
#include <framedhom/theta.hpp>
#include <framedhom/verify.hpp>
#include <framedhom/word_grammar.hpp>

#include <CLI11.hpp>

#include <iostream>
#include <numeric>
#include <sstream>

using namespace framedhom;

namespace {

struct Args {
  std::string framing, target, paut, word, vector, partition, suite;
  bool json = false;
  VerifyOptions verify;
};

void emit(const Json& j) { std::cout << j.dump() << '\n'; }

Framing load_framing(const std::string& path) { return framing_from_json(load_json_file(path)); }

// The element to evaluate: --paut FILE, or the relative action of --word.
PAutElem load_element(const Args& a, const Framing& f) {
  if (!a.paut.empty() && !a.word.empty()) throw ValidationError("give either --paut or --word, not both");
  if (!a.paut.empty()) return paut_from_json(load_json_file(a.paut));
  if (!a.word.empty()) return word_to_paut(parse_word(f, a.word));
  throw ValidationError("one of --paut or --word is required");
}

SurfaceSpec stratum_spec(const std::string& text) {
  std::vector<long> kappa;
  std::stringstream ss(text);
  std::string part;
  while (std::getline(ss, part, ',')) {
    std::size_t used = 0;
    long k = 0;
    try {
      k = std::stol(part, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used == 0 || used != part.size()) throw ValidationError("partition: \"" + part + "\" is not an integer");
    if (k < 1) throw ValidationError("partition: zero orders must be at least 1");
    kappa.push_back(k);
  }
  if (kappa.empty()) throw ValidationError("partition: empty");
  const long sum = std::accumulate(kappa.begin(), kappa.end(), 0L);
  if (sum % 2 != 0 || sum < 2) throw ValidationError("partition: entries must sum to 2g - 2 for some g >= 2");
  return SurfaceSpec(static_cast<int>(sum / 2 + 1), std::move(kappa));
}

int run_verify(const Args& a) {
  if (!is_suite(a.suite)) {
    std::string names;
    for (const auto& n : suite_names()) names += (names.empty() ? "" : ", ") + n;
    throw ValidationError("verify: unknown suite \"" + a.suite + "\" (known: " + names + ")");
  }
  const auto reports = run_suite(a.suite, a.verify);
  bool ok = true;
  Json out = Json::array();
  for (const auto& r : reports) {
    ok = ok && r.passed();
    Json props = Json::array();
    for (const auto& p : r.properties) {
      props.push_back({{"property", p.name}, {"passed", p.passed}, {"checked", p.checked}, {"detail", p.detail}});
      if (!a.json)
        std::cout << (p.passed ? "PASS " : "FAIL ") << r.suite << ": " << p.name << " [" << p.checked << " checks]"
                  << (p.detail.empty() ? "" : " " + p.detail) << '\n';
    }
    out.push_back({{"suite", r.suite}, {"passed", r.passed()}, {"properties", props}});
  }
  if (a.json) emit({{"genus", a.verify.genus}, {"trials", a.verify.trials}, {"seed", a.verify.seed}, {"suites", out}, {"passed", ok}});
  return ok ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Crossed homomorphism Theta_phi of framed surfaces: evaluation, kernel tests, verification"};
  app.require_subcommand(1);
  Args a;
  app.add_flag("--json", a.json, "JSON report for verify (other commands always print JSON)");

  auto* arf_cmd = app.add_subcommand("arf", "Arf invariant of a framing");
  arf_cmd->add_option("--framing", a.framing, "framing file")->required();

  auto* theta_cmd = app.add_subcommand("theta", "Theta_phi of a PAut element or word");
  auto* kernel_cmd = app.add_subcommand("kernel-test", "membership in ker(Theta_phi)");
  for (auto* c : {theta_cmd, kernel_cmd}) {
    c->add_option("--framing", a.framing, "framing file")->required();
    c->add_option("--paut", a.paut, "PAut file");
    c->add_option("--word", a.word, "word, e.g. \"Tx1 Ty2^-1 P(2;x1)\"");
  }

  auto* lift_cmd = app.add_subcommand("lift", "kernel element over the transvection T_v");
  lift_cmd->add_option("--framing", a.framing, "framing file")->required();
  lift_cmd->add_option("--vector", a.vector, "primitive class, e.g. x1+y2 or 1,0,0,1")->required();

  auto* factor_cmd = app.add_subcommand("factor-sp", "factor the symplectic part into transvections");
  factor_cmd->add_option("--paut", a.paut, "PAut file")->required();

  auto* act_cmd = app.add_subcommand("act", "push a framing forward along a word");
  act_cmd->add_option("--framing", a.framing, "framing file")->required();
  act_cmd->add_option("--word", a.word, "word")->required();

  auto* match_cmd = app.add_subcommand("match", "moves carrying one framing to another");
  match_cmd->add_option("--framing", a.framing, "source framing file")->required();
  match_cmd->add_option("--target", a.target, "target framing file")->required();

  auto* stratum_cmd = app.add_subcommand("stratum", "framing preset and structure report for a stratum");
  stratum_cmd->add_option("partition", a.partition, "zero orders, e.g. 3,1")->required();

  auto* verify_cmd = app.add_subcommand("verify", "run a verification suite");
  verify_cmd->add_option("suite", a.suite, "suite name or \"all\"")->required();
  verify_cmd->add_option("--g", a.verify.genus, "genus")->capture_default_str();
  verify_cmd->add_option("--trials", a.verify.trials, "random trials per property")->capture_default_str();
  verify_cmd->add_option("--seed", a.verify.seed, "random seed")->capture_default_str();
  verify_cmd->add_flag("--json", a.json, "JSON report");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (*arf_cmd) {
      emit({{"arf", arf(load_framing(a.framing))}});
    } else if (*theta_cmd || *kernel_cmd) {
      const Framing f = load_framing(a.framing);
      const CohomClass t = theta(load_element(a, f), f);
      if (*theta_cmd)
        emit({{"theta", cohom_to_json(t)}});
      else
        emit({{"in_kernel", t.is_zero()}});
    } else if (*lift_cmd) {
      const Framing f = load_framing(a.framing);
      emit(paut_to_json(lift_transvection(parse_abs_vector(f.spec(), a.vector), f)));
    } else if (*factor_cmd) {
      const PAutElem p = paut_from_json(load_json_file(a.paut));
      emit({{"factors", factors_to_json(factor_sp(p.symplectic()))}});
    } else if (*act_cmd) {
      const Framing f = load_framing(a.framing);
      emit(framing_to_json(act_framing(parse_word(f, a.word), f)));
    } else if (*match_cmd) {
      Json moves = Json::array();
      for (const auto& m : match_framings(load_framing(a.framing), load_framing(a.target))) moves.push_back(move_to_json(m));
      emit({{"moves", moves}});
    } else if (*stratum_cmd) {
      const Framing f = Framing::zero(stratum_spec(a.partition));
      emit({{"framing", framing_to_json(f)}, {"report", report_to_json(structure_report(f))}});
    } else if (*verify_cmd) {
      return run_verify(a);
    }
  } catch (const NoLiftExists& e) {
    std::cerr << "no lift: " << e.what() << '\n';
    return 1;
  } catch (const SpecMismatch& e) {
    std::cerr << "mismatch: " << e.what() << '\n';
    return 3;
  } catch (const ArfMismatch& e) {
    std::cerr << "mismatch: " << e.what() << '\n';
    return 3;
  } catch (const QVectorMismatch& e) {
    std::cerr << "mismatch: " << e.what() << '\n';
    return 3;
  } catch (const Error& e) {
    std::cerr << "invalid input: " << e.what() << '\n';
    return 2;
  }
  return 0;
}
