#include "core/rational.hpp"

#include <cctype>

namespace convexval {

namespace {

bool is_integer_literal(const std::string& s) {
  if (s.empty()) return false;
  std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
  if (i == s.size()) return false;
  for (; i < s.size(); ++i)
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
  return true;
}

}  // namespace

Rat parse_rat(const std::string& s) {
  const auto slash = s.find('/');
  if (slash == std::string::npos) {
    if (!is_integer_literal(s)) throw InputError("malformed rational: '" + s + "'");
  } else {
    const std::string num = s.substr(0, slash), den = s.substr(slash + 1);
    if (!is_integer_literal(num) || !is_integer_literal(den))
      throw InputError("malformed rational: '" + s + "'");
    if (den == "0" || den == "-0" || den == "+0")
      throw InputError("zero denominator: '" + s + "'");
  }
  Rat r;
  if (r.set_str(s, 10) != 0) throw InputError("malformed rational: '" + s + "'");
  r.canonicalize();
  return r;
}

std::string rat_to_string(const Rat& q) {
  if (q.get_den() == 1) return q.get_num().get_str();
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

double rat_to_double(const Rat& q) { return q.get_d(); }

}  // namespace convexval
