#include "doctest.h"

#include "json.hpp"

#include "klstab/json_io.hpp"

using namespace klstab;
using json = nlohmann::ordered_json;

TEST_CASE("wire formats use the documented field names") {
  CHECK(json(BundleType{2, 3}).dump() == R"({"rank":2,"degree":3})");
  CHECK(json(KL{1, -1}).dump() == R"({"k":1,"l":-1})");
  CHECK(json(Rational(3, 2)).dump() == R"({"num":3,"den":2})");
  CHECK(json(make_profile(BundleType{3, 0}, {3, 0})).dump() ==
        R"({"rank":3,"degree":0,"segre":[3,0]})");
}

TEST_CASE("core types round-trip") {
  const SegreProfile p = make_profile(BundleType{3, 1}, {4, 2});
  CHECK(json(p).get<SegreProfile>() == p);
  CHECK(json(BundleType{4, -7}).get<BundleType>() == BundleType{4, -7});
  CHECK(json(KL{-3, 5}).get<KL>() == KL{-3, 5});
  CHECK(json(Rational(-6, 4)).get<Rational>() == Rational(-3, 2));
  // also through the unordered flavour
  nlohmann::json plain = nlohmann::json::parse(R"({"rank":2,"degree":1,"segre":[1]})");
  CHECK(plain.get<SegreProfile>() == make_profile(BundleType{2, 1}, {1}));
}

TEST_CASE("reports serialize their flags and optional fields") {
  const RegionReport rep = region_report(BundleType{3, 0}, 2, KL{1, -1});
  const json j(rep);
  CHECK(j["flags"]["in_R3k"] == true);
  CHECK(j["flags"]["in_R0"] == false);
  CHECK(j["nonempty"] == true);
  CHECK(j["kl"]["k"] == 1);
  CHECK(j["bundle"]["rank"] == 3);

  const json full(complement_dims(BundleType{2, 0}, 5, KL{2, 0}));
  CHECK(full["dim_complement"] == 15);
  CHECK(full["codim"] == 2);
  CHECK(full["s_tilde"][0] == 2);

  const json none(complement_dims(BundleType{2, 0}, 2, KL{0, 0}));
  CHECK(none["dim_complement"].is_null());
  CHECK(none["s_delta"].is_null());
}

TEST_CASE("sweep maps key by k,l") {
  std::map<KLKey, bool> m{{{0, 0}, true}, {{1, -2}, false}};
  const json j = sweep_to_json<json>(m);
  CHECK(j["0,0"] == true);
  CHECK(j["1,-2"] == false);

  std::map<KLKey, std::optional<i64>> dims{{{2, 0}, 15}, {{0, 0}, std::nullopt}};
  const json jd = sweep_to_json<json>(dims);
  CHECK(jd["2,0"] == 15);
  CHECK(jd["0,0"].is_null());
}

TEST_CASE("chain, table and constraint serializers") {
  const json chain(rank2_chain(0, 2));
  CHECK(chain["empty_from"] == 2);
  CHECK(chain["links"][0]["t"] == 2);
  CHECK(chain["links"][0]["relation"] == "both_empty");

  const json table(rank3_table(2));
  CHECK(table["rows"][1]["bound_2k_plus_l"] == 4);
  CHECK(table["rows"][1]["bound_k_plus_2l"] == 2);

  const StratumConstraint c{1, StratumConstraint::Relation::Eq, 3};
  CHECK(json(c).dump() == R"({"m":1,"relation":"eq","s":3})");
}
