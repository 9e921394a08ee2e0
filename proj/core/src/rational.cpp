#include "schubert/rational.hpp"

#include "schubert/error.hpp"

#include <limits>

namespace schubert {

Rational make_rational(long num, long den)
{
  if (den == 0)
    throw Error(ErrorKind::InvalidInput, "zero denominator");
  Rational q(num, den);
  q.canonicalize();
  return q;
}

std::string to_fraction_text(const Rational& q)
{
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

std::string to_compact_text(const Rational& q)
{
  return q.get_str();
}

Rational parse_rational(std::string_view text)
{
  const std::string s(text);
  const auto slash = s.find('/');
  auto parse_int = [&](const std::string& part) {
    if (part.empty())
      throw Error(ErrorKind::InvalidInput, "malformed rational '" + s + "'");
    std::size_t start = (part[0] == '-' || part[0] == '+') ? 1 : 0;
    if (start == part.size())
      throw Error(ErrorKind::InvalidInput, "malformed rational '" + s + "'");
    for (std::size_t i = start; i < part.size(); ++i)
      if (part[i] < '0' || part[i] > '9')
        throw Error(ErrorKind::InvalidInput, "malformed rational '" + s + "'");
    return mpz_class(part[0] == '+' ? part.substr(1) : part, 10);
  };
  if (slash == std::string::npos)
    return Rational(parse_int(s));
  mpz_class num = parse_int(s.substr(0, slash));
  mpz_class den = parse_int(s.substr(slash + 1));
  if (den == 0)
    throw Error(ErrorKind::InvalidInput, "zero denominator in '" + s + "'");
  Rational q(num, den);
  q.canonicalize();
  return q;
}

bool is_integer(const Rational& q)
{
  return q.get_den() == 1;
}

std::int64_t to_int64(const Rational& q, std::string_view context)
{
  if (!is_integer(q) || !q.get_num().fits_slong_p())
    throw Error(ErrorKind::NonIntegral, std::string(context) + " value " + q.get_str());
  return q.get_num().get_si();
}

} // namespace schubert
