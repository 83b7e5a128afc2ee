#include "bidisk/serialize.hpp"

#include <string>

namespace bidisk {

namespace {

template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

[[noreturn]] void bad(const std::string& what) {
  throw std::invalid_argument("serialize: " + what);
}

double number_at(const Json& j, const char* key) {
  if (!j.contains(key) || !j[key].is_number()) bad(std::string("missing number '") + key + "'");
  return j[key].get<double>();
}

const Json& child_at(const Json& j, const char* key) {
  if (!j.contains(key)) bad(std::string("missing field '") + key + "'");
  return j[key];
}

std::string op_of(const Json& j) {
  if (!j.is_object() || !j.contains("op") || !j["op"].is_string()) bad("node without 'op' tag");
  return j["op"].get<std::string>();
}

std::vector<Complex> complex_list(const Json& j) {
  if (!j.is_array()) bad("expected array of complex values");
  std::vector<Complex> out;
  out.reserve(j.size());
  for (const auto& e : j) out.push_back(complex_from_json(e));
  return out;
}

Json complex_list_json(const std::vector<Complex>& v) {
  Json out = Json::array();
  for (Complex c : v) out.push_back(to_json(c));
  return out;
}

}  // namespace

Json to_json(Complex c) { return Json::array({c.real(), c.imag()}); }

Complex complex_from_json(const Json& j) {
  if (!j.is_array() || j.size() != 2 || !j[0].is_number() || !j[1].is_number())
    bad("complex value must be a [re, im] array");
  return Complex(j[0].get<double>(), j[1].get<double>());
}

Json to_json(const DiskPoint& z) { return to_json(z.value()); }

DiskPoint disk_point_from_json(const Json& j) { return DiskPoint(complex_from_json(j)); }

Json to_json(const BiPoint& p) {
  return Json::array({to_json(p.first.value()), to_json(p.second.value())});
}

BiPoint bipoint_from_json(const Json& j) {
  if (!j.is_array() || j.size() != 2) bad("bidisk point must be a two-element array");
  return BiPoint(disk_point_from_json(j[0]), disk_point_from_json(j[1]));
}

Json to_json(const KernelSpec& k) {
  if (k.kind() == KernelSpec::Kind::SzegoPower)
    return Json{{"kind", "szego_power"}, {"n", k.power()}};
  return Json{{"kind", "tensor2"}, {"base", to_json(k.base())}};
}

KernelSpec kernel_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("kind") || !j["kind"].is_string()) bad("kernel without 'kind'");
  std::string kind = j["kind"].get<std::string>();
  if (kind == "szego_power") {
    const Json& n = child_at(j, "n");
    if (!n.is_number_integer()) bad("szego_power kernel needs integer 'n'");
    return KernelSpec::szego_power(n.get<int>());
  }
  if (kind == "tensor2") return KernelSpec::tensor_square(kernel_from_json(child_at(j, "base")));
  bad("unknown kernel kind '" + kind + "'");
}

// -- HoloMap1 -----------------------------------------------------------------

namespace {

Json holo1_node_json(const HoloMap1::Node& n) {
  return std::visit(
      overloaded{
          [](const HoloMap1::Constant& c) {
            return Json{{"op", "const"}, {"c", to_json(c.c)}};
          },
          [](const HoloMap1::MobiusAuto& m) {
            return Json{{"op", "mobius"}, {"a", to_json(m.a)}, {"theta", m.theta}};
          },
          [](const HoloMap1::BlaschkeProduct& b) {
            return Json{{"op", "blaschke"}, {"zeros", complex_list_json(b.zeros)},
                        {"theta", b.theta}};
          },
          [](const HoloMap1::ScaledPolynomial& p) {
            return Json{{"op", "poly"}, {"coeffs", complex_list_json(p.coeffs)}};
          },
          [](const HoloMap1::Compose& c) {
            return Json{{"op", "compose"}, {"outer", holo1_node_json(*c.outer)},
                        {"inner", holo1_node_json(*c.inner)}};
          },
          [](const HoloMap1::ConvexCombo& c) {
            return Json{{"op", "convex"}, {"t", c.t}, {"f", holo1_node_json(*c.f)},
                        {"g", holo1_node_json(*c.g)}};
          },
          [](const HoloMap1::PointwiseProduct& p) {
            return Json{{"op", "product"}, {"f", holo1_node_json(*p.f)},
                        {"g", holo1_node_json(*p.g)}};
          },
      },
      n.v);
}

}  // namespace

Json to_json(const HoloMap1& f) { return holo1_node_json(f.root()); }

HoloMap1 holomap1_from_json(const Json& j) {
  std::string op = op_of(j);
  if (op == "const") return HoloMap1::constant(complex_from_json(child_at(j, "c")));
  if (op == "mobius")
    return HoloMap1::mobius(complex_from_json(child_at(j, "a")), number_at(j, "theta"));
  if (op == "blaschke")
    return HoloMap1::blaschke(complex_list(child_at(j, "zeros")), number_at(j, "theta"));
  if (op == "poly") return HoloMap1::scaled_polynomial(complex_list(child_at(j, "coeffs")));
  if (op == "compose") {
    HoloMap1 outer = holomap1_from_json(child_at(j, "outer"));
    HoloMap1 inner = holomap1_from_json(child_at(j, "inner"));
    return HoloMap1::compose(outer, inner);
  }
  if (op == "convex") {
    double t = number_at(j, "t");
    HoloMap1 f = holomap1_from_json(child_at(j, "f"));
    HoloMap1 g = holomap1_from_json(child_at(j, "g"));
    return HoloMap1::convex_combo(f, g, t);
  }
  if (op == "product") {
    HoloMap1 f = holomap1_from_json(child_at(j, "f"));
    HoloMap1 g = holomap1_from_json(child_at(j, "g"));
    return HoloMap1::pointwise_product(f, g);
  }
  bad("unknown disk-map op '" + op + "'");
}

// -- ScalarMap2 ---------------------------------------------------------------

namespace {

Json scalar2_node_json(const ScalarMap2::Node& n) {
  return std::visit(
      overloaded{
          [](const ScalarMap2::Project& p) {
            return Json{{"op", "project"}, {"j", p.j}};
          },
          [](const ScalarMap2::Constant& c) {
            return Json{{"op", "const"}, {"c", to_json(c.c)}};
          },
          [](const ScalarMap2::Lift1& l) {
            return Json{{"op", "lift1"}, {"outer", holo1_node_json(*l.outer)},
                        {"inner", scalar2_node_json(*l.inner)}};
          },
          [](const ScalarMap2::SeparableProduct& s) {
            return Json{{"op", "separable"}, {"b1", holo1_node_json(*s.b1)},
                        {"b2", holo1_node_json(*s.b2)}};
          },
          [](const ScalarMap2::ConvexCombo& c) {
            return Json{{"op", "convex"}, {"t", c.t}, {"f", scalar2_node_json(*c.f)},
                        {"g", scalar2_node_json(*c.g)}};
          },
      },
      n.v);
}

}  // namespace

Json to_json(const ScalarMap2& f) { return scalar2_node_json(f.root()); }

ScalarMap2 scalar_map2_from_json(const Json& j) {
  std::string op = op_of(j);
  if (op == "project") {
    const Json& jj = child_at(j, "j");
    if (!jj.is_number_integer()) bad("project needs integer 'j'");
    return ScalarMap2::project(jj.get<int>());
  }
  if (op == "const") return ScalarMap2::constant(complex_from_json(child_at(j, "c")));
  if (op == "lift1") {
    HoloMap1 outer = holomap1_from_json(child_at(j, "outer"));
    ScalarMap2 inner = scalar_map2_from_json(child_at(j, "inner"));
    return ScalarMap2::lift1(outer, inner);
  }
  if (op == "separable") {
    HoloMap1 b1 = holomap1_from_json(child_at(j, "b1"));
    HoloMap1 b2 = holomap1_from_json(child_at(j, "b2"));
    return ScalarMap2::separable_product(b1, b2);
  }
  if (op == "convex") {
    double t = number_at(j, "t");
    ScalarMap2 f = scalar_map2_from_json(child_at(j, "f"));
    ScalarMap2 g = scalar_map2_from_json(child_at(j, "g"));
    return ScalarMap2::convex_combo(f, g, t);
  }
  bad("unknown scalar-map op '" + op + "'");
}

Json to_json(const HoloMap2& f) {
  return Json{{"swap", f.swapped()}, {"f1", to_json(f.f1())}, {"f2", to_json(f.f2())}};
}

HoloMap2 holomap2_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("swap") || !j["swap"].is_boolean())
    bad("bidisk map needs boolean 'swap'");
  ScalarMap2 f1 = scalar_map2_from_json(child_at(j, "f1"));
  ScalarMap2 f2 = scalar_map2_from_json(child_at(j, "f2"));
  return HoloMap2(std::move(f1), std::move(f2), j["swap"].get<bool>());
}

}  // namespace bidisk
