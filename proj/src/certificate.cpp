#include "armatch/certificate.hpp"

namespace armatch {

void to_json(nlohmann::json& j, const Certificate& c) {
  j = nlohmann::json{{"claim", c.claim},
                     {"parameters", c.parameters},
                     {"search_size", c.search_size},
                     {"verdict", c.verdict},
                     {"elapsed_ms", c.elapsed_ms}};
}

void from_json(const nlohmann::json& j, Certificate& c) {
  j.at("claim").get_to(c.claim);
  c.parameters = j.at("parameters");
  j.at("search_size").get_to(c.search_size);
  j.at("verdict").get_to(c.verdict);
  j.at("elapsed_ms").get_to(c.elapsed_ms);
}

}  // namespace armatch
