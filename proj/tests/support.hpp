#pragma once

#include <string>
#include <vector>

#include "ssbchoice/core_model.hpp"
#include "ssbchoice/io.hpp"

namespace testing {

inline std::string fixture(const std::string& name) { return std::string(SSBCHOICE_FIXTURE_DIR) + "/" + name; }

inline ssbchoice::Profile load_ballots(const std::string& name) {
  return ssbchoice::parse_ballots(ssbchoice::read_text_file(fixture(name)));
}

inline ssbchoice::SSBMatrix load_matrix(const std::string& name) {
  return ssbchoice::parse_matrix(ssbchoice::read_text_file(fixture(name)));
}

inline ssbchoice::Universe abc(std::size_t m) {
  std::vector<std::string> names;
  for (std::size_t a = 0; a < m; ++a) names.emplace_back(1, static_cast<char>('a' + a));
  return ssbchoice::Universe(std::move(names));
}

inline ssbchoice::Rational ratio(long num, long den) {
  ssbchoice::Rational r(num, den);
  r.canonicalize();
  return r;
}

inline std::vector<ssbchoice::Rational> q(std::initializer_list<const char*> values) {
  std::vector<ssbchoice::Rational> out;
  for (const char* v : values) out.push_back(ssbchoice::parse_rational(v));
  return out;
}

inline ssbchoice::Lottery lottery(const ssbchoice::Universe& u, std::initializer_list<const char*> values) {
  return ssbchoice::Lottery(u, q(values));
}

inline ssbchoice::SSBMatrix matrix(const ssbchoice::Universe& u, std::initializer_list<const char*> entries) {
  return ssbchoice::SSBMatrix(u, q(entries));
}

// p^T phi q by an explicit double loop, independent of the library.
inline ssbchoice::Rational bilinear(const ssbchoice::SSBMatrix& phi, const ssbchoice::Lottery& p,
                                    const ssbchoice::Lottery& r) {
  ssbchoice::Rational total = 0;
  for (std::size_t a = 0; a < p.size(); ++a)
    for (std::size_t b = 0; b < r.size(); ++b) total += p[a] * phi(a, b) * r[b];
  return total;
}

}  // namespace testing
