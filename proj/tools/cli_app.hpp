#pragma once

#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "hwav/hwav.hpp"

namespace hwav::cli {

struct TypeArgs {
  std::string type;
  int p = 0, q = 0, n = 0;

  void attach(CLI::App* sub) {
    sub->add_option("--type", type, "su | sp | sostar | so_odd | so_even | e6 | e7")->required();
    sub->add_option("--p", p, "p for su(p,q)");
    sub->add_option("--q", q, "q for su(p,q)");
    sub->add_option("--n", n, "rank parameter for the other classical families");
  }

  HermitianType resolve() const {
    Family f = parse_family(type);
    if (f == Family::SU) require(p > 0 && q > 0, ErrorKind::Parse, "su needs --p and --q");
    if (f != Family::SU && f != Family::E6 && f != Family::E7) require(n > 0, ErrorKind::Parse, type + " needs --n");
    return HermitianType::make(f, p, q, n);
  }
};

struct WeightArgs {
  std::string rho_shifted, highest_weight, coroot_labels, hw_coroot_labels;

  void attach(CLI::App* sub) {
    auto* g = sub->add_option_group("weight", "exactly one weight channel");
    g->add_option("--rho-shifted", rho_shifted, "lambda+rho in epsilon coordinates, e.g. \"5/2,3/2\"");
    g->add_option("--highest-weight", highest_weight, "lambda in epsilon coordinates");
    g->add_option("--coroot-labels", coroot_labels, "<lambda+rho, alpha_i^vee> for each simple root");
    g->add_option("--hw-coroot-labels", hw_coroot_labels, "<lambda, alpha_i^vee> for each simple root");
    g->require_option(1);
  }

  WeightInput resolve() const {
    using M = WeightInput::Mode;
    if (!rho_shifted.empty()) return WeightInput::rho_shifted(parse_weight(rho_shifted));
    if (!highest_weight.empty()) return WeightInput::highest_weight(parse_weight(highest_weight));
    if (!coroot_labels.empty()) return WeightInput::coroot_labels(parse_weight(coroot_labels), M::RhoShifted);
    if (!hw_coroot_labels.empty()) return WeightInput::coroot_labels(parse_weight(hw_coroot_labels), M::HighestWeight);
    fail(ErrorKind::Parse, "no weight given");
  }
};

inline Json antichains_json(const Context& ctx, CheckReport& rep) {
  Json j;
  j["nodes"] = ctx.poset.size();
  j["edges"] = ctx.poset.hasse.size();
  if (!ctx.type().antichain_step()) return j;
  auto A = distinguished_antichains(ctx.rs, ctx.poset);
  Json sizes = Json::array();
  for (std::size_t k = 0; k < A.size(); ++k) {
    const int kk = static_cast<int>(k + 1);
    sizes.push_back(A[k].size());
    rep.expect(static_cast<int>(A[k].size()) == kk, "|A_" + std::to_string(kk) + "| = " + std::to_string(A[k].size()));
    rep.expect(is_antichain(ctx.poset, A[k]), "A_" + std::to_string(kk) + " is an antichain");
    rep.expect(width_of(ctx.poset, downset_of(ctx.poset, A[k])) == kk,
               "downset generated by A_" + std::to_string(kk) + " has width " + std::to_string(kk));
  }
  j["antichain_sizes"] = sizes;
  return j;
}

// Runs one command; returns the process exit code.
inline int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"K-orbits in p+ from lambda+rho for Hermitian symmetric pairs"};
  app.require_subcommand(1);

  TypeArgs av_t, dg_t, cs_t, vf_t, hs_t;
  WeightArgs av_w, dg_w;
  bool verify = false;

  auto* av = app.add_subcommand("av", "orbit index, orbit data and GK dimension for one weight");
  av_t.attach(av);
  av_w.attach(av);
  av->add_flag("--verify", verify, "cross-check k against the insertion oracle");

  auto* dg = app.add_subcommand("diagram", "the diagram of a weight and a maximum antichain");
  dg_t.attach(dg);
  dg_w.attach(dg);

  auto* cs = app.add_subcommand("census", "count downsets of the noncompact poset by width");
  cs_t.attach(cs);

  auto* vf = app.add_subcommand("verify", "census, Springer identities, coset bijection and antichain checks");
  vf_t.attach(vf);

  auto* hs = app.add_subcommand("hasse", "Hasse diagram of the noncompact poset in DOT format");
  hs_t.attach(hs);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return static_cast<int>(ErrorKind::Parse);
  }

  try {
    if (av->parsed()) {
      Context ctx(av_t.resolve());
      Weight lr = resolve_weight(ctx.rs, av_w.resolve());
      AVResult r = associated_variety(ctx, lr);
      Json j = av_json(ctx, r);
      bool agree = true;
      if (verify) {
        int kp = k_prime(ctx.rs, lr);
        agree = kp == r.k;
        j["oracle_k"] = kp;
        j["agree"] = agree;
      }
      out << j.dump(2) << "\n";
      if (!agree) {
        err << "error: oracle disagreement (k=" << r.k << ")\n";
        return static_cast<int>(ErrorKind::OracleDisagreement);
      }
    } else if (dg->parsed()) {
      Context ctx(dg_t.resolve());
      Weight lr = resolve_weight(ctx.rs, dg_w.resolve());
      check_k_dominant(lr, ctx.rs);
      out << diagram_json(ctx, lr).dump(2) << "\n";
    } else if (cs->parsed()) {
      HermitianType t = cs_t.resolve();
      check_census_feasible(t);
      out << census_json(width_census(Context(t))).dump(2) << "\n";
    } else if (vf->parsed()) {
      HermitianType t = vf_t.resolve();
      check_census_feasible(t);
      Context ctx(t);
      CensusReport c = width_census(ctx);
      CheckReport sp = verify_springer_identities(c);
      CheckReport ap;
      Json j;
      j["type"] = t.name();
      j["census"] = census_json(c);
      j["springer_table"] = springer_json(t);
      j["springer_identities"] = check_json(sp);
      bool pass = c.pass && sp.pass;
      if (!t.is_e_type() && t.rank() <= 6) {
        CheckReport bj = verify_bijection_classical(ctx);
        j["bijection"] = check_json(bj);
        pass = pass && bj.pass;
      }
      j["antichains"] = antichains_json(ctx, ap);
      j["antichains"]["checks"] = check_json(ap);
      pass = pass && ap.pass;
      j["pass"] = pass;
      out << j.dump(2) << "\n";
      if (!pass) return 1;
    } else if (hs->parsed()) {
      Context ctx(hs_t.resolve());
      out << emit_hasse_dot(ctx.rs, ctx.poset);
    }
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    switch (e.kind()) {
      case ErrorKind::InvalidArgument: return static_cast<int>(ErrorKind::Parse);
      case ErrorKind::Internal: return 1;
      default: return static_cast<int>(e.kind());
    }
  }
  return 0;
}

}  // namespace hwav::cli
