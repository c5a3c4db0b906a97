#pragma once

#include "klstab/brillnoether.hpp"
#include "klstab/lowrank.hpp"
#include "klstab/oracle.hpp"
#include "klstab/regions.hpp"

#include <string>

// ADL (de)serializers compatible with any nlohmann basic_json instantiation.
// Wire formats:
//   Rational       {"num": p, "den": q}
//   BundleType     {"rank": n, "degree": d}
//   KL             {"k": k, "l": l}
//   SegreProfile   {"rank": n, "degree": d, "segre": [s1, ...]}
// Reports keep the field names of the corresponding structs; sweep maps are
// objects keyed "k,l".

namespace klstab {

template <typename J>
void to_json(J& j, const Rational& r) {
  j = J{{"num", r.num}, {"den", r.den}};
}

template <typename J>
void from_json(const J& j, Rational& r) {
  r = Rational(j.at("num").template get<i64>(), j.at("den").template get<i64>());
}

template <typename J>
void to_json(J& j, const BundleType& b) {
  j = J{{"rank", b.rank}, {"degree", b.degree}};
}

template <typename J>
void from_json(const J& j, BundleType& b) {
  b.rank = j.at("rank").template get<i64>();
  b.degree = j.at("degree").template get<i64>();
}

template <typename J>
void to_json(J& j, const KL& kl) {
  j = J{{"k", kl.k}, {"l", kl.l}};
}

template <typename J>
void from_json(const J& j, KL& kl) {
  kl.k = j.at("k").template get<i64>();
  kl.l = j.at("l").template get<i64>();
}

template <typename J>
void to_json(J& j, const SegreProfile& p) {
  j = J{{"rank", p.bundle.rank}, {"degree", p.bundle.degree}, {"segre", p.segre}};
}

template <typename J>
void from_json(const J& j, SegreProfile& p) {
  p.bundle.rank = j.at("rank").template get<i64>();
  p.bundle.degree = j.at("degree").template get<i64>();
  p.segre = j.at("segre").template get<std::vector<i64>>();
}

template <typename J>
void to_json(J& j, const RegionFlags& f) {
  j = J{{"in_R0", f.in_R0},
        {"in_R1", f.in_R1},
        {"in_R2", f.in_R2},
        {"in_R3k", f.in_R3k},
        {"in_R3l", f.in_R3l}};
}

template <typename J>
void to_json(J& j, const RegionReport& r) {
  j = J{{"kl", r.kl},
        {"bundle", r.bundle},
        {"genus", r.genus},
        {"flags", r.flags},
        {"nonempty", r.nonempty}};
}

namespace detail {
template <typename J>
J opt_json(const std::optional<i64>& v) {
  return v ? J(*v) : J(nullptr);
}
}  // namespace detail

template <typename J>
void to_json(J& j, const ComplementReport& r) {
  J tilde = J::array();
  for (const auto& v : r.s_tilde) tilde.push_back(detail::opt_json<J>(v));
  j = J{{"kl", r.kl},
        {"bundle", r.bundle},
        {"genus", r.genus},
        {"s_tilde", tilde},
        {"s_delta", detail::opt_json<J>(r.s_delta)},
        {"dim_complement", detail::opt_json<J>(r.dim_complement)},
        {"codim", detail::opt_json<J>(r.codim)}};
}

template <typename J>
void to_json(J& j, const Rank2ChainLink& link) {
  j = J{{"t", link.t}, {"relation", to_string(link.relation)}};
}

template <typename J>
void to_json(J& j, const Rank2Chain& c) {
  j = J{{"d", c.d},
        {"g", c.g},
        {"empty_from", c.empty_from},
        {"full_moduli_t", c.full_moduli_t},
        {"indecomposable_floor", c.indecomposable_floor},
        {"links", c.links}};
}

template <typename J>
void to_json(J& j, const Rank3Row& row) {
  j = J{{"d_mod_3", row.d_mod_3},
        {"bound_2k_plus_l", row.bound_2k_l},
        {"bound_k_plus_2l", row.bound_k_2l}};
}

template <typename J>
void to_json(J& j, const Rank3Table& t) {
  j = J{{"g", t.g}, {"rows", t.rows}};
}

template <typename J>
void to_json(J& j, const StratumConstraint& c) {
  j = J{{"m", c.m},
        {"relation", c.relation == StratumConstraint::Relation::Eq ? "eq" : "ge"},
        {"s", c.s}};
}

template <typename J, typename V>
J sweep_to_json(const std::map<KLKey, V>& m) {
  J j = J::object();
  for (const auto& [key, value] : m) {
    const std::string name = std::to_string(key.first) + "," + std::to_string(key.second);
    if constexpr (std::is_same_v<V, std::optional<i64>>) {
      j[name] = value ? J(*value) : J(nullptr);
    } else {
      j[name] = value;
    }
  }
  return j;
}

}  // namespace klstab
