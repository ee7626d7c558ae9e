#include "cellnet/io.hpp"

#include <fstream>
#include <sstream>

#include "cellnet/errors.hpp"

namespace cellnet {

nlohmann::json network_to_json(const Network& net) {
  nlohmann::json j;
  j["cells"] = net.n();
  nlohmann::json inputs = nlohmann::json::array();
  for (const InputMap& sigma : net.inputs())
    inputs.push_back(sigma.targets());
  j["inputs"] = std::move(inputs);
  if (!net.label().empty()) j["label"] = net.label();
  return j;
}

Network network_from_json(const nlohmann::json& j) {
  if (!j.is_object()) throw ParseError("network JSON must be an object");
  if (!j.contains("cells") || !j["cells"].is_number_integer())
    throw ParseError("missing integer field \"cells\"");
  if (!j.contains("inputs") || !j["inputs"].is_array())
    throw ParseError("missing array field \"inputs\"");
  int n = j["cells"].get<int>();
  if (n < 1) throw ParseError("\"cells\" must be positive");
  std::vector<InputMap> inputs;
  for (const auto& arr : j["inputs"]) {
    if (!arr.is_array()) throw ParseError("each input must be a target array");
    std::vector<int> targets;
    for (const auto& v : arr) {
      if (!v.is_number_integer())
        throw ParseError("targets must be integers");
      targets.push_back(v.get<int>());
    }
    inputs.emplace_back(n, std::move(targets));  // validates range/length
  }
  std::string label;
  if (j.contains("label")) {
    if (!j["label"].is_string()) throw ParseError("\"label\" must be a string");
    label = j["label"].get<std::string>();
  }
  return Network(n, std::move(inputs), std::move(label));
}

Network read_network_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open " + path);
  nlohmann::json j;
  try {
    in >> j;
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(path + ": " + e.what());
  }
  return network_from_json(j);
}

void write_network_file(const Network& net, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw ParseError("cannot open " + path + " for writing");
  out << network_to_json(net).dump(2) << "\n";
}

std::string to_dot(const Network& net) {
  static const char* styles[] = {"solid", "dashed", "dotted", "bold"};
  std::ostringstream os;
  os << "digraph cellnet {\n";
  if (!net.label().empty()) os << "  label=\"" << net.label() << "\";\n";
  for (int i = 1; i <= net.n(); ++i) os << "  " << i << ";\n";
  for (int l = 1; l <= net.k(); ++l) {
    const InputMap& sigma = net.input(l);
    for (int i = 1; i <= net.n(); ++i)
      os << "  " << sigma(i) << " -> " << i << " [type=" << l << " style="
         << styles[(l - 1) % 4] << "];\n";
  }
  os << "}\n";
  return os.str();
}

}  // namespace cellnet
