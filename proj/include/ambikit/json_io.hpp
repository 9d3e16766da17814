// JSON formats for signals, polynomials, multipliers, and pulse
// descriptors.
//
// Scalar entries are [re, im] pairs.  Strings parse exactly ("p/q" or
// decimal); integer tokens parse exactly; any float-literal token flags the
// context so callers can demote the whole computation to float mode.

#pragma once

#include "ambikit/partner.hpp"
#include "ambikit/poly.hpp"
#include "ambikit/pulse.hpp"
#include "ambikit/signal.hpp"

#include <nlohmann/json.hpp>

#include <string>

namespace ambikit {

using Json = nlohmann::ordered_json;

struct ParseContext {
  bool saw_float = false;
};

Scalar parse_scalar_entry(const Json& pair, ParseContext& ctx);
Json scalar_to_json(const Scalar& v);

// {"offset": int, "coeffs": [[re, im], ...]}
Signal parse_signal(const Json& j, ParseContext& ctx);
Json signal_to_json(const Signal& s);

// {"coeffs": [[re, im], ...]}, ascending degree
Poly parse_poly(const Json& j, ParseContext& ctx);
Json poly_to_json(const Poly& p);

// {"support": [...], "values": [[re, im], ...]} or {"support": [...], "angles": [...]}
Multiplier parse_multiplier(const Json& j, ParseContext& ctx);

// {"signal": {...}, "eta": "1/3", "phase": [re, im], "omega": w, "shift": s, "reflected": b}
// everything but signal and eta optional
PulseDescriptor parse_pulse(const Json& j, ParseContext& ctx);

Json heisenberg_to_json(const HeisenbergElement& h);

// Read and parse a file, mapping parse failures to invalid_argument with
// a file:line:column prefix.
Json load_json_file(const std::string& path);

}  // namespace ambikit
