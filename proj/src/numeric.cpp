#include "labcount/numeric.hpp"

#include "labcount/errors.hpp"

namespace labcount {

std::string rat_to_string(const Rat& r) {
  return rat_numer(r).str() + "/" + rat_denom(r).str();
}

Rat rat_from_string(const std::string& s) {
  auto slash = s.find('/');
  try {
    if (slash == std::string::npos) return Rat(Int(s));
    Int num(s.substr(0, slash));
    Int den(s.substr(slash + 1));
    if (den <= 0) throw input_error("rational denominator must be positive: " + s);
    return Rat(num, den);
  } catch (const input_error&) {
    throw;
  } catch (...) {
    throw input_error("cannot parse rational: " + s);
  }
}

}  // namespace labcount
