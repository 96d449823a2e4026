#include "toricsing/rational.hpp"

#include <limits>
#include <stdexcept>

namespace toricsing {

Rat make_rat(const Int& p, const Int& q) {
  if (q == 0) throw std::domain_error("zero denominator");
  Rat r(p, q);
  r.canonicalize();
  return r;
}

std::string to_string(const Rat& x) {
  Rat y = x;
  y.canonicalize();
  return y.get_num().get_str() + "/" + y.get_den().get_str();
}

std::string to_string(const Int& x) { return x.get_str(); }

static bool is_int_text(const std::string& s) {
  std::size_t i = 0;
  if (i < s.size() && (s[i] == '-' || s[i] == '+')) ++i;
  if (i == s.size()) return false;
  for (; i < s.size(); ++i)
    if (s[i] < '0' || s[i] > '9') return false;
  return true;
}

Int parse_int(const std::string& s) {
  if (!is_int_text(s)) throw std::invalid_argument("not an integer: '" + s + "'");
  return Int(s[0] == '+' ? s.substr(1) : s);
}

Rat parse_rat(const std::string& s) {
  auto slash = s.find('/');
  if (slash == std::string::npos) return Rat(parse_int(s));
  Int p = parse_int(s.substr(0, slash));
  Int q = parse_int(s.substr(slash + 1));
  if (q == 0) throw std::invalid_argument("zero denominator in '" + s + "'");
  return make_rat(p, q);
}

Int floor_of(const Rat& x) {
  Int q;
  mpz_fdiv_q(q.get_mpz_t(), x.get_num_mpz_t(), x.get_den_mpz_t());
  return q;
}

Int gcd(const Int& a, const Int& b) {
  Int g;
  mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return g;
}

Int abs_of(const Int& a) { return a < 0 ? Int(-a) : a; }

long to_long(const Int& x) {
  if (!x.fits_slong_p()) throw std::overflow_error("integer too large: " + x.get_str());
  return x.get_si();
}

std::vector<Int> parse_int_list(const std::string& s) {
  std::vector<Int> out;
  std::size_t start = 0;
  while (true) {
    auto comma = s.find(',', start);
    std::string tok = s.substr(start, comma == std::string::npos ? std::string::npos : comma - start);
    out.push_back(parse_int(tok));
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  return out;
}

}  // namespace toricsing
