#include <cctype>
#include <limits>
#include <set>

#include "fitt/errors.hpp"
#include "fitt/rees.hpp"

namespace fitt {

namespace {

bool is_power_of(std::uint64_t value, std::uint64_t p) {
  if (value < p) return false;
  while (value % p == 0) value /= p;
  return value == 1;
}

long long parse_int(std::string_view text, std::size_t offset) {
  if (text.empty()) throw ParseError("missing value", offset);
  long long value = 0;
  for (std::size_t i = 0; i < text.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(text[i]))) throw ParseError("expected a digit", offset + i);
    value = value * 10 + (text[i] - '0');
    if (value > std::numeric_limits<std::int32_t>::max() * 4LL) throw ParseError("number too large", offset);
  }
  return value;
}

}  // namespace

void PowerIdeal::validate() const {
  if (!is_prime(p)) throw ValidationError("p must be prime (got " + std::to_string(p) + ")");
  if (n < 1) throw ValidationError("need n >= 1");
  if (s < 1 || s > n) throw ValidationError("need 1 <= s <= n (got s=" + std::to_string(s) + ")");
  if (v.size() != static_cast<std::size_t>(n - s + 1)) {
    throw ValidationError("v must list n-s+1 = " + std::to_string(n - s + 1) + " exponents (got " +
                          std::to_string(v.size()) + ")");
  }
  for (std::size_t k = 0; k < v.size(); ++k) {
    if (v[k] < 1) throw ValidationError("exponent v_" + std::to_string(s + static_cast<int>(k)) + " must be >= 1");
    if (v[k] > Monomial::kMaxExponent) throw ValidationError("exponent exceeds 2^31-1");
  }
}

void ReesParams::validate(bool strict_p_power) const {
  power_ideal().validate();
  if (!(s <= l && l < n)) {
    throw ValidationError("need s <= l < n (got s=" + std::to_string(s) + " l=" + std::to_string(l) +
                          " n=" + std::to_string(n) + ")");
  }
  for (int i = s; i <= n; ++i) {
    std::uint32_t e = v[static_cast<std::size_t>(i - s)];
    if (i <= l && e % p != 0) {
      throw ValidationError("p must divide v_" + std::to_string(i) + " for s <= i <= l (got " + std::to_string(e) + ")");
    }
    if (i <= l && strict_p_power && !is_power_of(e, p)) {
      throw ValidationError("v_" + std::to_string(i) + " must be a power of p (got " + std::to_string(e) + ")");
    }
    if (i > l && e != 1) {
      throw ValidationError("v_" + std::to_string(i) + " must be 1 for i > l (got " + std::to_string(e) + ")");
    }
  }
}

std::string ReesParams::to_string() const {
  std::string out = "p=" + std::to_string(p) + " n=" + std::to_string(n) + " s=" + std::to_string(s) +
                    " l=" + std::to_string(l) + " v=";
  for (std::size_t k = 0; k < v.size(); ++k) out += (k ? "," : "") + std::to_string(v[k]);
  return out;
}

ReesParams parse_rees_params(std::string_view text) {
  ReesParams params;
  std::set<std::string> seen;
  std::size_t pos = 0;
  while (pos < text.size()) {
    if (std::isspace(static_cast<unsigned char>(text[pos]))) {
      ++pos;
      continue;
    }
    std::size_t end = pos;
    while (end < text.size() && !std::isspace(static_cast<unsigned char>(text[end]))) ++end;
    std::string_view token = text.substr(pos, end - pos);
    std::size_t eq = token.find('=');
    if (eq == std::string_view::npos) throw ParseError("expected key=value", pos);
    std::string key(token.substr(0, eq));
    std::string_view value = token.substr(eq + 1);
    std::size_t value_at = pos + eq + 1;
    if (!seen.insert(key).second) throw ParseError("repeated key '" + key + "'", pos);
    if (key == "p") {
      params.p = static_cast<std::uint64_t>(parse_int(value, value_at));
    } else if (key == "n") {
      params.n = static_cast<int>(parse_int(value, value_at));
    } else if (key == "s") {
      params.s = static_cast<int>(parse_int(value, value_at));
    } else if (key == "l") {
      params.l = static_cast<int>(parse_int(value, value_at));
    } else if (key == "v") {
      std::size_t start = 0;
      for (;;) {
        std::size_t comma = value.find(',', start);
        std::string_view piece = value.substr(start, comma == std::string_view::npos ? std::string_view::npos : comma - start);
        params.v.push_back(static_cast<std::uint32_t>(parse_int(piece, value_at + start)));
        if (comma == std::string_view::npos) break;
        start = comma + 1;
      }
    } else {
      throw ParseError("unknown key '" + key + "'", pos);
    }
    pos = end;
  }
  for (const char* key : {"p", "n", "s", "l", "v"}) {
    if (!seen.count(key)) throw ParseError(std::string("missing key '") + key + "'", text.size());
  }
  return params;
}

}  // namespace fitt
