#include "ambikit/json_io.hpp"

#include <cmath>
#include <fstream>
#include <sstream>

namespace ambikit {

namespace {

// one real component: string (exact), integer (exact), or float literal
Rational parse_component_exact(const Json& v, ParseContext& ctx, double& float_out, bool& is_float) {
  is_float = false;
  if (v.is_string()) return parse_rational(v.get<std::string>());
  if (v.is_number_integer()) return Rational(v.get<long long>());
  if (v.is_number_float()) {
    ctx.saw_float = true;
    is_float = true;
    float_out = v.get<double>();
    return Rational(0);
  }
  throw std::invalid_argument("scalar component must be a string or number");
}

}  // namespace

Scalar parse_scalar_entry(const Json& pair, ParseContext& ctx) {
  if (!pair.is_array() || pair.size() != 2)
    throw std::invalid_argument("scalar entry must be a [re, im] pair");
  double fre = 0, fim = 0;
  bool re_float = false, im_float = false;
  Rational re = parse_component_exact(pair[0], ctx, fre, re_float);
  Rational im = parse_component_exact(pair[1], ctx, fim, im_float);
  if (re_float || im_float) {
    double r = re_float ? fre : to_double(re);
    double i = im_float ? fim : to_double(im);
    return Scalar::from_double(r, i);
  }
  return Scalar::exact_rational(re, im);
}

Signal parse_signal(const Json& j, ParseContext& ctx) {
  if (!j.is_object() || !j.contains("coeffs"))
    throw std::invalid_argument("signal must be an object with a coeffs array");
  Signal s;
  s.offset = j.value("offset", 0);
  const Json& coeffs = j.at("coeffs");
  if (!coeffs.is_array()) throw std::invalid_argument("coeffs must be an array");
  for (const auto& entry : coeffs) s.coeffs.push_back(parse_scalar_entry(entry, ctx));
  return s;
}

Json scalar_to_json(const Scalar& v) {
  if (v.is_exact()) {
    const Exact& e = v.exact();
    if (e.s.is_zero())
      return Json::array({rational_to_string(e.r.re), rational_to_string(e.r.im)});
    // sqrt2 components have no exact decimal form; emit floats
  }
  auto z = v.to_complex();
  return Json::array({z.real(), z.imag()});
}

Json signal_to_json(const Signal& s) {
  Json j;
  j["offset"] = s.offset;
  Json coeffs = Json::array();
  for (const auto& c : s.coeffs) coeffs.push_back(scalar_to_json(c));
  j["coeffs"] = std::move(coeffs);
  return j;
}

Poly parse_poly(const Json& j, ParseContext& ctx) {
  if (!j.is_object() || !j.contains("coeffs"))
    throw std::invalid_argument("polynomial must be an object with a coeffs array");
  std::vector<Scalar> c;
  for (const auto& entry : j.at("coeffs")) c.push_back(parse_scalar_entry(entry, ctx));
  return Poly::of(std::move(c));
}

Json poly_to_json(const Poly& p) {
  Json j;
  Json coeffs = Json::array();
  for (const auto& c : p.c) coeffs.push_back(scalar_to_json(c));
  j["coeffs"] = std::move(coeffs);
  return j;
}

Multiplier parse_multiplier(const Json& j, ParseContext& ctx) {
  if (!j.is_object() || !j.contains("support"))
    throw std::invalid_argument("multiplier must be an object with a support array");
  Multiplier m;
  std::vector<int> supp;
  for (const auto& v : j.at("support")) supp.push_back(v.get<int>());
  m.support = SupportSet::of(supp);
  if (static_cast<size_t>(m.support.size()) != supp.size())
    throw std::invalid_argument("multiplier support has repeated entries");
  if (j.contains("values")) {
    for (const auto& entry : j.at("values")) m.values.push_back(parse_scalar_entry(entry, ctx));
  } else if (j.contains("angles")) {
    ctx.saw_float = true;
    for (const auto& v : j.at("angles"))
      m.values.emplace_back(std::polar(1.0, v.get<double>()));
  } else {
    throw std::invalid_argument("multiplier needs values or angles");
  }
  if (m.values.size() != static_cast<size_t>(m.support.size()))
    throw std::invalid_argument("multiplier value count mismatch");
  return m;
}

PulseDescriptor parse_pulse(const Json& j, ParseContext& ctx) {
  if (!j.is_object() || !j.contains("signal"))
    throw std::invalid_argument("pulse descriptor must be an object with a signal");
  PulseDescriptor u;
  u.a = normalize(parse_signal(j.at("signal"), ctx)).signal;
  const Json& eta = j.at("eta");
  if (eta.is_string())
    u.eta = parse_rational(eta.get<std::string>());
  else if (eta.is_number_integer())
    u.eta = Rational(eta.get<long long>());
  else if (eta.is_number_float()) {
    // eta stays rational; accept simple decimals exactly
    std::ostringstream os;
    os.precision(17);
    os << eta.get<double>();
    u.eta = parse_rational(os.str());
  } else {
    throw std::invalid_argument("eta must be a rational string or number");
  }
  if (j.contains("phase")) {
    ParseContext ignore;
    u.phase = parse_scalar_entry(j.at("phase"), ignore).to_complex();
  }
  u.omega = j.value("omega", 0.0);
  u.shift = j.value("shift", 0.0);
  u.reflected = j.value("reflected", false);
  validate_pulse(u);
  return u;
}

Json heisenberg_to_json(const HeisenbergElement& h) {
  Json j;
  j["beta"] = h.beta;
  j["omega"] = h.omega;
  j["l"] = h.l;
  j["reflected"] = h.reflected;
  return j;
}

Json load_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument(path + ": cannot open");
  std::stringstream buf;
  buf << in.rdbuf();
  std::string text = buf.str();
  try {
    return Json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    // map the byte offset to line:column
    size_t line = 1, col = 1;
    for (size_t i = 0; i + 1 < e.byte && i < text.size(); ++i) {
      if (text[i] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
    }
    std::ostringstream msg;
    msg << path << ":" << line << ":" << col << ": " << e.what();
    throw std::invalid_argument(msg.str());
  }
}

}  // namespace ambikit
