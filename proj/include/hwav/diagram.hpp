#pragma once

#include <string>
#include <vector>

#include "hwav/error.hpp"
#include "hwav/poset.hpp"
#include "hwav/rational.hpp"
#include "hwav/root_data.hpp"

namespace hwav {

struct WeightInput {
  enum class Mode { RhoShifted, HighestWeight };
  enum class Channel { Epsilon, CorootLabels };
  Mode mode = Mode::RhoShifted;
  Channel channel = Channel::Epsilon;
  std::vector<Rational> values;

  static WeightInput rho_shifted(Weight v) { return {Mode::RhoShifted, Channel::Epsilon, std::move(v)}; }
  static WeightInput highest_weight(Weight v) { return {Mode::HighestWeight, Channel::Epsilon, std::move(v)}; }
  static WeightInput coroot_labels(std::vector<Rational> v, Mode m = Mode::RhoShifted) {
    return {m, Channel::CorootLabels, std::move(v)};
  }
};

// lambda + rho in epsilon coordinates.
inline Weight resolve_weight(const RootSystemData& rs, const WeightInput& in) {
  if (in.channel == WeightInput::Channel::Epsilon) {
    require(static_cast<int>(in.values.size()) == rs.ambient_dim(), ErrorKind::Parse,
            "expected " + std::to_string(rs.ambient_dim()) + " coordinates for " + rs.type.name() + ", got " +
                std::to_string(in.values.size()));
    Weight v = in.values;
    if (in.mode == WeightInput::Mode::HighestWeight)
      for (std::size_t i = 0; i < v.size(); ++i) v[i] += rs.rho[i];
    return v;
  }
  std::vector<Rational> labels = in.values;
  // <rho, alpha_i^vee> = 1 for every simple root.
  if (in.mode == WeightInput::Mode::HighestWeight)
    for (auto& l : labels) l += 1;
  return rs.from_coroot_labels(labels);
}

enum class Integrality { Integral, HalfIntegral, Other };

inline std::string integrality_name(Integrality c) {
  switch (c) {
    case Integrality::Integral: return "Integral";
    case Integrality::HalfIntegral: return "HalfIntegral";
    case Integrality::Other: return "Other";
  }
  return "?";
}

// lambda must be the highest weight of a finite-dimensional K-module, i.e.
// <lambda+rho, alpha^vee> is a positive integer on every compact positive root.
inline void check_k_dominant(const Weight& lr, const RootSystemData& rs) {
  for (const auto& a : rs.compact_positive) {
    Rational c = coroot_pairing(lr, a);
    if (!is_integer(c) || c <= Rational(0))
      fail(ErrorKind::Dominance, "lambda+rho is not K-dominant: pairing with compact root " + root_label(a) +
                                     " is " + to_string(c));
  }
}

inline Integrality classify_integrality(const Weight& lr, const RootSystemData& rs) {
  bool integral = true, half = true;
  for (const auto& a : rs.positive_roots) {
    Rational c = coroot_pairing(lr, a);
    if (!is_integer(c)) integral = false;
    if (!in_half_z(c)) half = false;
  }
  if (integral) return Integrality::Integral;
  const bool nsl = rs.type.family == Family::SP || rs.type.family == Family::SO_ODD;
  return (nsl && half) ? Integrality::HalfIntegral : Integrality::Other;
}

struct Diagram {
  Bitset y;  // indices into the noncompact poset
  Weight lambda_rho;
  Integrality integrality;
};

inline Bitset diagram_set(const Weight& lr, const NoncompactPoset& P) {
  Bitset y(P.size());
  for (std::size_t i = 0; i < P.size(); ++i) {
    Rational c = coroot_pairing(lr, P.roots[i]);
    if (is_integer(c) && c <= Rational(0)) y.set(i);
  }
  return y;
}

inline Diagram compute_diagram(const Weight& lr, const RootSystemData& rs, const NoncompactPoset& P) {
  return {diagram_set(lr, P), lr, classify_integrality(lr, rs)};
}

struct IntegralSubsystem {
  std::vector<Root> delta_lambda_pos;
  Bitset noncompact_part;  // indices into the noncompact poset
  int delta = 0;
};

inline IntegralSubsystem integral_subsystem(const Weight& lr, const RootSystemData& rs, const NoncompactPoset& P) {
  IntegralSubsystem s;
  for (const auto& a : rs.positive_roots)
    if (is_integer(coroot_pairing(lr, a))) s.delta_lambda_pos.push_back(a);
  s.noncompact_part = Bitset(P.size());
  for (std::size_t i = 0; i < P.size(); ++i)
    if (is_integer(coroot_pairing(lr, P.roots[i]))) s.noncompact_part.set(i);
  s.delta = static_cast<int>(rs.positive_roots.size() - s.delta_lambda_pos.size());
  return s;
}

// Word i_1..i_k of simple reflections; w = s_{i_1}...s_{i_k} and w^{-1}(lambda+rho) is antidominant.
inline std::vector<int> canonical_w(const Weight& lr, const RootSystemData& rs) {
  require(classify_integrality(lr, rs) == Integrality::Integral, ErrorKind::InvalidArgument,
          "canonical_w needs an integral weight");
  std::vector<int> word;
  Weight v = lr;
  while (true) {
    int pick = -1;
    for (int i = 0; i < rs.rank(); ++i)
      if (coroot_pairing(v, rs.simple_roots[i]) > Rational(0)) { pick = i; break; }
    if (pick < 0) break;
    v = reflect(v, rs.simple_roots[pick]);
    word.push_back(pick);
  }
  return word;
}

// w(v) for w = s_{i_1}...s_{i_k}: the rightmost reflection acts first.
inline Weight apply_word(const std::vector<int>& word, const Weight& v, const RootSystemData& rs) {
  Weight out = v;
  for (auto it = word.rbegin(); it != word.rend(); ++it) out = reflect(out, rs.simple_roots[*it]);
  return out;
}

inline Weight apply_word_inverse(const std::vector<int>& word, const Weight& v, const RootSystemData& rs) {
  Weight out = v;
  for (int i : word) out = reflect(out, rs.simple_roots[i]);
  return out;
}

inline Weight negate(Weight v) {
  for (auto& x : v) x = -x;
  return v;
}

}  // namespace hwav
