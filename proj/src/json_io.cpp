#include "revsi/json_io.hpp"

#include <fstream>

namespace revsi::model {

void to_json(nlohmann::json& j, const CityInstance& inst) {
  j = nlohmann::json{{"n", inst.n},       {"alpha", inst.alpha}, {"p_min", inst.p_min},
                     {"p_max", inst.p_max}, {"c", inst.c},       {"delta", inst.delta},
                     {"x0", inst.x0},     {"ybar", inst.ybar}};
}

void from_json(const nlohmann::json& j, CityInstance& inst) {
  j.at("n").get_to(inst.n);
  j.at("alpha").get_to(inst.alpha);
  j.at("p_min").get_to(inst.p_min);
  j.at("p_max").get_to(inst.p_max);
  j.at("c").get_to(inst.c);
  j.at("delta").get_to(inst.delta);
  j.at("x0").get_to(inst.x0);
  j.at("ybar").get_to(inst.ybar);
}

void to_json(nlohmann::json& j, const Realization& real) {
  j = nlohmann::json{{"y", real.y}, {"d0", real.d0}};
}

void from_json(const nlohmann::json& j, Realization& real) {
  j.at("y").get_to(real.y);
  j.at("d0").get_to(real.d0);
}

void to_json(nlohmann::json& j, const FollowerBelief& belief) {
  j = nlohmann::json{{"m", belief.m}, {"d0_belief", belief.d0_belief}, {"prob", belief.prob}};
}

void from_json(const nlohmann::json& j, FollowerBelief& belief) {
  j.at("m").get_to(belief.m);
  j.at("d0_belief").get_to(belief.d0_belief);
  j.at("prob").get_to(belief.prob);
}

}  // namespace revsi::model

namespace revsi::io {

nlohmann::json load_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open file: " + path);
  nlohmann::json j;
  try {
    in >> j;
  } catch (const nlohmann::json::parse_error& e) {
    throw std::runtime_error("parse error in " + path + ": " + e.what());
  }
  return j;
}

void save_json_file(const std::string& path, const nlohmann::json& j) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write file: " + path);
  out << j.dump(2) << "\n";
}

}  // namespace revsi::io
